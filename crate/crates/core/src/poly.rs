//! Dense univariate polynomials over the rationals, exact throughout.
//!
//! Coefficients are stored lowest degree first; the zero polynomial is the
//! empty coefficient vector with degree -1. Nothing in this module rounds.

use crate::dyadic::Dyadic;
use crate::interval::{ComplexBox, RealInterval};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl std::fmt::Debug for QPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

pub fn rat_i64(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> QPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> QPoly {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> QPoly {
        QPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> QPoly {
        QPoly::new(vec![c])
    }

    pub fn x() -> QPoly {
        QPoly::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn monomial(c: BigRational, k: usize) -> QPoly {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = c;
        QPoly::new(v)
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> QPoly {
        QPoly::new(coeffs.iter().map(|&c| rat_i64(c)).collect())
    }

    pub fn from_bigint_coeffs(coeffs: &[BigInt]) -> QPoly {
        QPoly::new(
            coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Degree; -1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        QPoly::new(out)
    }

    pub fn sub(&self, rhs: &QPoly) -> QPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QPoly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let inv = self.leading().recip();
        self.scale(&inv)
    }

    /// Exact euclidean division: (quotient, remainder).
    pub fn divmod(&self, rhs: &QPoly) -> (QPoly, QPoly) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        if self.degree() < rhs.degree() {
            return (QPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dq = (self.degree() - rhs.degree()) as usize;
        let mut quot = vec![BigRational::zero(); dq + 1];
        let lead_inv = rhs.leading().recip();
        for k in (0..=dq).rev() {
            let c = &rem[k + rhs.coeffs.len() - 1] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let idx = k + j;
                let t = &rem[idx] - &(&c * b);
                rem[idx] = t;
            }
            quot[k] = c;
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    pub fn rem(&self, rhs: &QPoly) -> QPoly {
        self.divmod(rhs).1
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, rhs: &QPoly) -> QPoly {
        let (q, r) = self.divmod(rhs);
        assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    pub fn divides(&self, other: &QPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// Monic gcd over Q.
    pub fn gcd(&self, rhs: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            QPoly::zero()
        } else {
            a.monic()
        }
    }

    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat_i64(i as i64 + 1))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_interval(&self, x: &RealInterval, prec: u32) -> RealInterval {
        let mut acc = RealInterval::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul(x, prec)
                .add(&RealInterval::from_rational(c, prec), prec);
        }
        acc
    }

    pub fn eval_box(&self, x: &ComplexBox, prec: u32) -> ComplexBox {
        let mut acc = ComplexBox::zero();
        for c in self.coeffs.iter().rev() {
            let cc = ComplexBox::real(RealInterval::from_rational(c, prec));
            acc = acc.mul(x, prec).add(&cc, prec);
        }
        acc
    }

    pub fn eval_dyadic_exact(&self, x: &Dyadic) -> BigRational {
        self.eval(&x.to_rational())
    }

    /// Composition self(g(x)).
    pub fn compose(&self, g: &QPoly) -> QPoly {
        let mut acc = QPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&QPoly::constant(c.clone()));
        }
        acc
    }

    /// self(x + a).
    pub fn shift(&self, a: &BigRational) -> QPoly {
        self.compose(&QPoly::new(vec![a.clone(), BigRational::one()]))
    }

    /// Largest squarefree divisor (monic).
    pub fn squarefree_part(&self) -> QPoly {
        assert!(!self.is_zero());
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            self.monic()
        } else {
            self.exact_div(&g).monic()
        }
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// Integer content-and-primitive-part: returns (c, p) with self = c * p,
    /// p having coprime integer coefficients and positive leading coefficient.
    pub fn primitive_z(&self) -> (BigRational, Vec<BigInt>) {
        assert!(!self.is_zero());
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if g.is_zero() {
            g = BigInt::one();
        }
        let mut prim: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        let mut content = BigRational::new(g, den);
        if prim.last().unwrap().is_negative() {
            for c in &mut prim {
                *c = -&*c;
            }
            content = -content;
        }
        (content, prim)
    }

    /// Resultant Res(self, rhs), exact.
    pub fn resultant(&self, rhs: &QPoly) -> BigRational {
        resultant_q(self, rhs)
    }

    /// Discriminant disc(p) = (-1)^(d(d-1)/2) Res(p, p') / lc(p).
    pub fn discriminant(&self) -> crate::error::Result<BigRational> {
        if self.degree() < 1 {
            return Err(crate::error::Error::domain(
                "discriminant requires degree >= 1",
            ));
        }
        let d = self.degree();
        if d == 1 {
            return Ok(BigRational::one());
        }
        let res = self.resultant(&self.derivative());
        let sign = if (d * (d - 1) / 2) % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        Ok(sign * res / self.leading())
    }
}

fn resultant_q(a: &QPoly, b: &QPoly) -> BigRational {
    // Classical recursion on the euclidean remainder sequence.
    if a.is_zero() || b.is_zero() {
        return BigRational::zero();
    }
    let (da, db) = (a.degree(), b.degree());
    if da == 0 {
        // Res(c, b) = c^db
        return pow_rat(&a.coeff(0), db as u32);
    }
    if db == 0 {
        return pow_rat(&b.coeff(0), da as u32);
    }
    let r = a.rem(b);
    if r.is_zero() {
        return BigRational::zero();
    }
    let dr = r.degree();
    let sign = if (da * db) % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    };
    sign * pow_rat(&b.leading(), (da - dr) as u32) * resultant_q(b, &r)
}

fn pow_rat(c: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k {
        acc *= c;
    }
    acc
}

/// Lagrange interpolation of the polynomial through (x_i, y_i) pairs.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> QPoly {
    let mut acc = QPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = QPoly::one();
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&QPoly::new(vec![-xj.clone(), BigRational::one()]));
            denom *= xi - xj;
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    acc
}

/// Resultant with respect to y of A(y) and B(x, y), where B is given as
/// coefficients of powers of y, each a polynomial in x. Computed by
/// evaluation at integer points and interpolation.
pub fn resultant_y_bivariate(a: &QPoly, b_ycoeffs: &[QPoly]) -> QPoly {
    let mut b = b_ycoeffs.to_vec();
    while b.last().is_some_and(|c| c.is_zero()) {
        b.pop();
    }
    assert!(!a.is_zero() && !b.is_empty());
    let deg_y_b = b.len() as i64 - 1;
    if deg_y_b == 0 {
        // Res(a, c(x)) = c(x)^deg(a)
        let mut acc = QPoly::one();
        for _ in 0..a.degree() {
            acc = acc.mul(&b[0]);
        }
        return acc;
    }
    let max_deg_x = b.iter().map(|c| c.degree().max(0)).max().unwrap_or(0);
    let target = (a.degree() * max_deg_x) as usize + 1;
    let lead = b.last().unwrap().clone();
    let mut points = Vec::with_capacity(target);
    let mut t: i64 = 0;
    while points.len() < target {
        let x0 = rat_i64(t);
        // Skip points where the leading y-coefficient vanishes: the scalar
        // resultant there would correspond to a degree-dropped polynomial.
        if !lead.eval(&x0).is_zero() {
            let b0 = QPoly::new(b.iter().map(|c| c.eval(&x0)).collect());
            points.push((x0, resultant_q(a, &b0)));
        }
        t = if t >= 0 { -(t + 1) } else { -t };
    }
    interpolate(&points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_int_coeffs(coeffs)
    }

    #[test]
    fn divmod_reconstructs() {
        let a = p(&[1, 0, -3, 7, 2]);
        let b = p(&[2, 1, 1]);
        let (q, r) = a.divmod(&b);
        assert_eq!(b.mul(&q).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_common_factor() {
        let f = p(&[-1, 0, 1]); // x^2-1
        let g = p(&[1, 1]); // x+1
        let h = f.gcd(&g);
        assert_eq!(h, g.monic());
        assert!(p(&[2, 3]).gcd(&p(&[5, 0, 7])).is_one());
    }

    #[test]
    fn discriminant_quadratics() {
        // x^2 - x - 1 -> 5; x^2 + 1 -> -4
        assert_eq!(p(&[-1, -1, 1]).discriminant().unwrap(), rat_i64(5));
        assert_eq!(p(&[1, 0, 1]).discriminant().unwrap(), rat_i64(-4));
    }

    #[test]
    fn discriminant_cubic_matches_sylvester_oracle() {
        // Oracle: Sylvester-matrix determinant for Res(p, p'), expanded by
        // cofactors, independent of the euclidean recursion used by the
        // implementation.
        let f = p(&[-2, 0, 0, 1]); // x^3 - 2
        let fp = f.derivative();
        let res = sylvester_det(&f, &fp);
        // disc = (-1)^3 * Res / lc = -Res
        assert_eq!(-&res, f.discriminant().unwrap());
        assert_eq!(f.discriminant().unwrap(), rat_i64(-108));
    }

    fn sylvester_det(a: &QPoly, b: &QPoly) -> BigRational {
        let (m, n) = (a.degree() as usize, b.degree() as usize);
        let size = m + n;
        let mut mat = vec![vec![BigRational::zero(); size]; size];
        for i in 0..n {
            for j in 0..=m {
                mat[i][i + j] = a.coeff(m - j);
            }
        }
        for i in 0..m {
            for j in 0..=n {
                mat[n + i][i + j] = b.coeff(n - j);
            }
        }
        det_cofactor(&mat)
    }

    fn det_cofactor(m: &[Vec<BigRational>]) -> BigRational {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = BigRational::zero();
        for k in 0..n {
            if m[0][k].is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigRational>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != k)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let s = if k % 2 == 0 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            acc += s * &m[0][k] * det_cofactor(&minor);
        }
        acc
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let f = p(&[4, 0, -4, 0, 1]); // (x^2-2)^2
        assert_eq!(f.squarefree_part(), p(&[-2, 0, 1]).monic());
        assert!(!f.is_squarefree());
        assert!(p(&[-1, -1, 1]).is_squarefree());
    }

    #[test]
    fn interpolation_recovers_poly() {
        let f = p(&[3, -2, 0, 5]);
        let pts: Vec<(BigRational, BigRational)> = (0..5)
            .map(|t| (rat_i64(t), f.eval(&rat_i64(t))))
            .collect();
        assert_eq!(interpolate(&pts), f);
    }

    #[test]
    fn bivariate_resultant_matches_scalar_specialization() {
        // A(y) = y^2 - 2, B(x, y) = (x - y)^2 - 3 = x^2 - 2xy + y^2 - 3.
        let a = p(&[-2, 0, 1]);
        let b = vec![
            p(&[-3, 0, 1]),       // y^0: x^2 - 3
            p(&[0, -2]),          // y^1: -2x
            p(&[1]),              // y^2: 1
        ];
        let r = resultant_y_bivariate(&a, &b);
        // Roots of r are sqrt2 + sqrt3 and conjugates: x^4 - 10x^2 + 1.
        assert_eq!(r.monic(), p(&[1, 0, -10, 0, 1]));
        // Spot-check against direct evaluation at x = 7.
        let b7 = QPoly::new(b.iter().map(|c| c.eval(&rat_i64(7))).collect());
        assert_eq!(r.eval(&rat_i64(7)), a.resultant(&b7));
    }

    #[test]
    fn eval_interval_contains_exact_value(){
        let f = p(&[1, -3, 0, 2]);
        let x = BigRational::new(BigInt::from(13), BigInt::from(8));
        let ix = RealInterval::from_rational(&x, 64);
        let v = f.eval_interval(&ix, 64);
        assert!(v.contains_rational(&f.eval(&x)));
    }
}
