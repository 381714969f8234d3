//! Integer linear recurrences: validation, exact evaluation, and minimal
//! order detection from the Hankel system of the first 2l terms.

use crate::error::{Error, Result};
use crate::poly::QPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// u_{n+l} = a_1 u_{n+l-1} + ... + a_l u_n with integer data and a_l != 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSpec {
    coeffs: Vec<BigInt>,
    initials: Vec<BigInt>,
}

impl RecurrenceSpec {
    pub fn new(coeffs: Vec<BigInt>, initials: Vec<BigInt>) -> Result<RecurrenceSpec> {
        if coeffs.is_empty() {
            return Err(Error::domain("recurrence order must be at least 1"));
        }
        if coeffs.len() != initials.len() {
            return Err(Error::domain(format!(
                "{} coefficients need exactly {} initial values, got {}",
                coeffs.len(),
                coeffs.len(),
                initials.len()
            )));
        }
        if coeffs.last().unwrap().is_zero() {
            return Err(Error::domain(
                "trailing coefficient a_l must be nonzero (zero would be a characteristic root)",
            ));
        }
        Ok(RecurrenceSpec { coeffs, initials })
    }

    pub fn from_i64(coeffs: &[i64], initials: &[i64]) -> Result<RecurrenceSpec> {
        RecurrenceSpec::new(
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            initials.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn initials(&self) -> &[BigInt] {
        &self.initials
    }

    /// Characteristic polynomial x^l - a_1 x^(l-1) - ... - a_l.
    pub fn char_poly(&self) -> QPoly {
        let l = self.order();
        let mut coeffs = vec![BigRational::zero(); l + 1];
        coeffs[l] = BigRational::one();
        for (i, a) in self.coeffs.iter().enumerate() {
            // a_{i+1} multiplies x^(l-1-i)
            coeffs[l - 1 - i] = -BigRational::from(a.clone());
        }
        QPoly::new(coeffs)
    }

    /// Exact value of u_n.
    pub fn u_eval(&self, n: u64) -> BigInt {
        let l = self.order();
        if (n as usize) < l {
            return self.initials[n as usize].clone();
        }
        let mut window: Vec<BigInt> = self.initials.clone();
        for _ in l..=(n as usize) {
            let next = self.step(&window);
            window.rotate_left(1);
            *window.last_mut().unwrap() = next;
        }
        window.last().unwrap().clone()
    }

    fn step(&self, window: &[BigInt]) -> BigInt {
        // window holds u_n .. u_{n+l-1}; produces u_{n+l}.
        let l = self.order();
        let mut acc = BigInt::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            acc += a * &window[l - 1 - i];
        }
        acc
    }

    /// The first `count` terms u_0 .. u_{count-1}.
    pub fn terms(&self, count: usize) -> Vec<BigInt> {
        let l = self.order();
        let mut out = Vec::with_capacity(count);
        out.extend(self.initials.iter().take(count).cloned());
        while out.len() < count {
            let window = &out[out.len() - l..];
            let mut acc = BigInt::zero();
            for (i, a) in self.coeffs.iter().enumerate() {
                acc += a * &window[l - 1 - i];
            }
            out.push(acc);
        }
        out
    }

    /// Iterator over successive terms, keeping only the tail window.
    pub fn tail_iter(&self) -> TailIter<'_> {
        TailIter {
            spec: self,
            window: self.initials.clone(),
            next_index: 0,
        }
    }

    /// Resume the recurrence from l consecutive anchor values
    /// u_start .. u_{start+l-1}.
    pub fn tail_iter_from(&self, start: u64, anchors: Vec<BigInt>) -> TailIter<'_> {
        assert_eq!(anchors.len(), self.order());
        TailIter {
            spec: self,
            window: anchors,
            next_index: start,
        }
    }
}

pub struct TailIter<'a> {
    spec: &'a RecurrenceSpec,
    window: Vec<BigInt>,
    next_index: u64,
}

impl Iterator for TailIter<'_> {
    type Item = (u64, BigInt);

    fn next(&mut self) -> Option<(u64, BigInt)> {
        let n = self.next_index;
        let value = self.window[0].clone();
        let next = self.spec.step(&self.window);
        self.window.rotate_left(1);
        *self.window.last_mut().unwrap() = next;
        self.next_index += 1;
        Some((n, value))
    }
}

/// Outcome of minimality reduction.
#[derive(Debug, Clone)]
pub struct MinimalityOutcome {
    /// The minimal-order recurrence; `None` exactly for the zero sequence.
    pub minimal: Option<RecurrenceSpec>,
    pub original_order: usize,
    pub was_minimal: bool,
    /// Set when the sequence is identically zero (order 0).
    pub zero_sequence: bool,
    /// Minimal recurrence coefficients when they are not integral; the
    /// analysis rejects this case (it cannot arise from integer inputs,
    /// by Fatou's lemma, but the detection is kept exact).
    pub non_integral: Option<Vec<BigRational>>,
}

/// Reduce a recurrence to its minimal order using the first 2l terms.
///
/// A candidate relation of order L <= l verified on the windows
/// n = 0..l-1 holds for the whole sequence: the defect sequence satisfies
/// the original recurrence and vanishes on l consecutive terms.
pub fn minimal_recurrence(spec: &RecurrenceSpec) -> MinimalityOutcome {
    let l = spec.order();
    let terms = spec.terms(2 * l);
    if terms.iter().all(|t| t.is_zero()) {
        return MinimalityOutcome {
            minimal: None,
            original_order: l,
            was_minimal: false,
            zero_sequence: true,
            non_integral: None,
        };
    }
    for cand in 1..=l {
        if let Some(coeffs) = solve_relation(&terms, cand, l) {
            let integral = coeffs.iter().all(|c| c.denom().is_one());
            if !integral {
                return MinimalityOutcome {
                    minimal: None,
                    original_order: l,
                    was_minimal: false,
                    zero_sequence: false,
                    non_integral: Some(coeffs),
                };
            }
            let ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer().clone()).collect();
            debug_assert!(
                !ints.last().unwrap().is_zero(),
                "minimal recurrence of a zero-root-free sequence has nonzero tail"
            );
            let minimal = RecurrenceSpec::new(ints, terms[..cand].to_vec())
                .expect("minimal recurrence is well-formed");
            return MinimalityOutcome {
                minimal: Some(minimal),
                original_order: l,
                was_minimal: cand == l,
                zero_sequence: false,
                non_integral: None,
            };
        }
    }
    unreachable!("the input recurrence itself always satisfies the relation");
}

/// Try to find c_1..c_L with u_{n+L} = sum c_i u_{n+L-i} for n = 0..windows-1.
fn solve_relation(terms: &[BigInt], order: usize, windows: usize) -> Option<Vec<BigRational>> {
    let rows = windows.max(order);
    let mut matrix = Vec::with_capacity(rows);
    let mut rhs = Vec::with_capacity(rows);
    for n in 0..rows {
        let row: Vec<BigRational> = (1..=order)
            .map(|i| BigRational::from(terms[n + order - i].clone()))
            .collect();
        matrix.push(row);
        rhs.push(BigRational::from(terms[n + order].clone()));
    }
    let sol = solve_consistent(&mut matrix, &mut rhs, order)?;
    Some(sol)
}

/// Gaussian elimination; returns a solution iff the system is consistent
/// (free variables are set to zero, which cannot occur at the minimal order).
fn solve_consistent(
    matrix: &mut [Vec<BigRational>],
    rhs: &mut [BigRational],
    unknowns: usize,
) -> Option<Vec<BigRational>> {
    let rows = matrix.len();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0usize;
    for c in 0..unknowns {
        let pivot = (r..rows).find(|&i| !matrix[i][c].is_zero());
        let Some(p) = pivot else { continue };
        matrix.swap(r, p);
        rhs.swap(r, p);
        let inv = matrix[r][c].recip();
        for x in matrix[r].iter_mut() {
            *x *= &inv;
        }
        rhs[r] *= &inv;
        for i in 0..rows {
            if i != r && !matrix[i][c].is_zero() {
                let f = matrix[i][c].clone();
                for j in 0..unknowns {
                    let t = &matrix[r][j] * &f;
                    matrix[i][j] -= t;
                }
                let t = &rhs[r] * &f;
                rhs[i] -= t;
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    // Consistency: zero rows must have zero rhs.
    for i in r..rows {
        if !rhs[i].is_zero() {
            return None;
        }
    }
    let mut sol = vec![BigRational::zero(); unknowns];
    for (row, &col) in pivot_col_of_row.iter().enumerate() {
        sol[col] = rhs[row].clone();
    }
    Some(sol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib() -> RecurrenceSpec {
        RecurrenceSpec::from_i64(&[1, 1], &[0, 1]).unwrap()
    }

    #[test]
    fn fibonacci_values() {
        // 0,1,1,2,3,5,8,13,21,34,55
        assert_eq!(fib().u_eval(10), BigInt::from(55));
        assert_eq!(fib().u_eval(0), BigInt::from(0));
        assert_eq!(
            fib().terms(11).last().unwrap(),
            &BigInt::from(55)
        );
    }

    #[test]
    fn geometric_sequence_value() {
        let g = RecurrenceSpec::from_i64(&[2], &[3]).unwrap();
        assert_eq!(g.u_eval(5), BigInt::from(96));
    }

    #[test]
    fn char_poly_signs() {
        // x^2 - x - 1 for Fibonacci
        assert_eq!(fib().char_poly(), QPoly::from_int_coeffs(&[-1, -1, 1]));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(RecurrenceSpec::from_i64(&[], &[]).is_err());
        assert!(RecurrenceSpec::from_i64(&[1, 0], &[0, 1]).is_err());
        assert!(RecurrenceSpec::from_i64(&[1, 1], &[0]).is_err());
    }

    #[test]
    fn fibonacci_is_already_minimal() {
        let out = minimal_recurrence(&fib());
        assert!(out.was_minimal);
        assert_eq!(out.minimal.unwrap(), fib());
    }

    #[test]
    fn disguised_geometric_reduces_to_order_one() {
        // u_{n+2} = 3u_{n+1} - 2u_n with u = (1, 2) is u_n = 2^n.
        // Hankel rank over (1, 2, 4, 8) is 1; checked by the 2x2 minors.
        assert_eq!(BigInt::from(1) * BigInt::from(4), BigInt::from(2) * BigInt::from(2));
        let spec = RecurrenceSpec::from_i64(&[3, -2], &[1, 2]).unwrap();
        let out = minimal_recurrence(&spec);
        assert!(!out.was_minimal);
        let m = out.minimal.unwrap();
        assert_eq!(m, RecurrenceSpec::from_i64(&[2], &[1]).unwrap());
    }

    #[test]
    fn zero_sequence_is_order_zero() {
        let z = RecurrenceSpec::from_i64(&[1, 1], &[0, 0]).unwrap();
        let out = minimal_recurrence(&z);
        assert!(out.zero_sequence);
        assert!(out.minimal.is_none());
    }

    #[test]
    fn minimality_is_idempotent() {
        for (coeffs, inits) in [
            (vec![1i64, 1], vec![0i64, 1]),
            (vec![3, -2], vec![1, 2]),
            (vec![2, 0, -1, 7], vec![1, 0, 2, 3]),
            (vec![0, 4], vec![0, 2]),
            (vec![5, -4, -3, 2, 1], vec![1, 2, 3, 4, 5]),
        ] {
            let spec = RecurrenceSpec::from_i64(&coeffs, &inits).unwrap();
            let once = minimal_recurrence(&spec);
            let Some(m1) = once.minimal else { continue };
            let twice = minimal_recurrence(&m1);
            assert!(twice.was_minimal, "second pass must be a fixed point");
            assert_eq!(twice.minimal.unwrap(), m1);
        }
    }

    #[test]
    fn reduced_recurrence_agrees_with_original() {
        let spec = RecurrenceSpec::from_i64(&[3, -2], &[1, 2]).unwrap();
        let m = minimal_recurrence(&spec).minimal.unwrap();
        for n in 0..20 {
            assert_eq!(spec.u_eval(n), m.u_eval(n));
        }
    }

    #[test]
    fn tail_iter_matches_eval() {
        let spec = RecurrenceSpec::from_i64(&[1, 2, -1], &[2, 0, 1]).unwrap();
        let by_iter: Vec<BigInt> = spec.tail_iter().take(12).map(|(_, v)| v).collect();
        let direct: Vec<BigInt> = (0..12).map(|n| spec.u_eval(n)).collect();
        assert_eq!(by_iter, direct);
        let anchors = spec.terms(8)[5..8].to_vec();
        let resumed: Vec<BigInt> = spec
            .tail_iter_from(5, anchors)
            .take(4)
            .map(|(_, v)| v)
            .collect();
        assert_eq!(resumed, direct[5..9].to_vec());
    }
}
