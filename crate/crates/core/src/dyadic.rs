//! Exact dyadic numbers `mant * 2^exp` with big-integer mantissas.
//!
//! Addition, multiplication and comparison are exact; precision only enters
//! through explicit directed rounding (`round_down` / `round_up`), which is
//! what the interval layer uses to keep every enclosure honest.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Rounding direction for operations that cannot stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Round {
    /// Toward negative infinity.
    Down,
    /// Toward positive infinity.
    Up,
}

impl Round {
    pub fn flip(self) -> Round {
        match self {
            Round::Down => Round::Up,
            Round::Up => Round::Down,
        }
    }
}

/// An exact dyadic rational `mant * 2^exp`.
///
/// Normalized so that the mantissa is odd or zero (zero has `exp == 0`).
/// The exponent is an `i64`; the quantities handled here stay far below
/// the ~2^63 bit range, and arithmetic on exponents is checked.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

fn exp_add(a: i64, b: i64) -> i64 {
    a.checked_add(b)
        .expect("dyadic exponent overflow (capacity)")
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Dyadic {
        let mut d = Dyadic { mant, exp };
        d.normalize();
        d
    }

    pub fn zero() -> Dyadic {
        Dyadic {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Dyadic {
        Dyadic {
            mant: BigInt::one(),
            exp: 0,
        }
    }

    pub fn from_bigint(n: &BigInt) -> Dyadic {
        Dyadic::new(n.clone(), 0)
    }

    pub fn from_i64(n: i64) -> Dyadic {
        Dyadic::new(BigInt::from(n), 0)
    }

    fn normalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz;
            self.exp = exp_add(self.exp, tz as i64);
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn sign(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Number of significant bits of the mantissa.
    pub fn mant_bits(&self) -> u64 {
        self.mant.magnitude().bits()
    }

    /// Exponent of the most significant bit: 2^(e-1) <= |x| < 2^e.
    /// Zero input returns `None`.
    pub fn msb_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(exp_add(self.exp, self.mant_bits() as i64))
        }
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    /// Exact sum.
    pub fn add(&self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (lo, hi) = if self.exp <= rhs.exp {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let shift = (hi.exp - lo.exp) as u64;
        // Shifts by the exponent gap are exact; enormous gaps only arise
        // after rounding has already capped mantissa sizes.
        let mant = (&hi.mant << shift) + &lo.mant;
        Dyadic::new(mant, lo.exp)
    }

    pub fn sub(&self, rhs: &Dyadic) -> Dyadic {
        self.add(&rhs.neg())
    }

    /// Exact product.
    pub fn mul(&self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Dyadic::zero();
        }
        Dyadic::new(&self.mant * &rhs.mant, exp_add(self.exp, rhs.exp))
    }

    /// Exact multiplication by 2^k.
    pub fn shl(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            mant: self.mant.clone(),
            exp: exp_add(self.exp, k),
        }
    }

    /// Round to at most `prec` mantissa bits in direction `dir`.
    pub fn round(&self, prec: u32, dir: Round) -> Dyadic {
        let bits = self.mant_bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let drop = bits - prec as u64;
        let mant = match dir {
            Round::Down => floor_shr(&self.mant, drop),
            Round::Up => -floor_shr(&(-&self.mant), drop),
        };
        Dyadic::new(mant, exp_add(self.exp, drop as i64))
    }

    /// Directed division: result is <= (Down) or >= (Up) the true quotient,
    /// with `prec` significant bits.
    pub fn div(&self, rhs: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        assert!(!rhs.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        // Scale the dividend so the integer quotient has ~prec+2 bits.
        let want = prec as i64 + 2;
        let shift = (rhs.mant_bits() as i64 + want - self.mant_bits() as i64).max(0) as u64;
        let num = &self.mant << shift;
        let q = match dir {
            Round::Down => div_floor_bi(&num, &rhs.mant),
            Round::Up => div_ceil_bi(&num, &rhs.mant),
        };
        let exp = exp_add(self.exp - shift as i64, -rhs.exp);
        Dyadic::new(q, exp).round(prec + 2, dir)
    }

    /// Exact conversion to a rational.
    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from(&self.mant << (self.exp as u64))
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << ((-self.exp) as u64))
        }
    }

    /// Directed conversion from a rational.
    pub fn from_rational(r: &BigRational, prec: u32, dir: Round) -> Dyadic {
        let num = Dyadic::from_bigint(r.numer());
        let den = Dyadic::from_bigint(r.denom());
        num.div(&den, prec, dir)
    }

    /// Exact conversion when the denominator is a power of two, else `None`.
    pub fn from_rational_exact(r: &BigRational) -> Option<Dyadic> {
        let den = r.denom();
        if den.magnitude().count_ones() == 1 {
            let k = den.magnitude().trailing_zeros().unwrap_or(0) as i64;
            Some(Dyadic::new(r.numer().clone(), -k))
        } else {
            None
        }
    }

    /// Nearest-ish f64, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant_bits();
        let (m, e) = if bits > 53 {
            let d = bits - 53;
            (floor_shr(&self.mant, d), self.exp + d as i64)
        } else {
            (self.mant.clone(), self.exp)
        };
        let mf: f64 = m.to_string().parse().unwrap_or(0.0);
        mf * 2f64.powi(e.clamp(-3000, 3000) as i32)
    }

    /// Decimal string with `digits` significant digits, rounded in `dir`.
    ///
    /// Format: `-d.dddddde+EXP` (scientific), stable across runs.
    pub fn to_decimal(&self, digits: u32, dir: Round) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let neg = self.is_negative();
        let mag_dir = if neg { dir.flip() } else { dir };
        let (s, e10) = decimal_digits(&self.mant.abs(), self.exp, digits, mag_dir);
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push(s.as_bytes()[0] as char);
        out.push('.');
        out.push_str(&s[1..]);
        out.push('e');
        if e10 >= 0 {
            out.push('+');
        }
        out.push_str(&e10.to_string());
        out
    }
}

/// Floor division shift: floor(x / 2^k).
fn floor_shr(x: &BigInt, k: u64) -> BigInt {
    // BigInt >> rounds toward negative infinity already.
    x >> k
}

fn div_floor_bi(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::div_floor(a, b)
}

fn div_ceil_bi(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::div_ceil(a, b)
}

/// Significant decimal digits of `mant * 2^exp` (mant > 0) with directed
/// rounding; returns (digit string of length `digits`, decimal exponent of
/// the leading digit).
fn decimal_digits(mant: &BigInt, exp: i64, digits: u32, dir: Round) -> (String, i64) {
    assert!(mant.is_positive());
    // Estimate the decimal exponent from the binary one, then correct.
    let bin = exp + mant.magnitude().bits() as i64;
    let mut e10 = (bin as f64 * std::f64::consts::LOG10_2).floor() as i64;
    loop {
        // n = floor_or_ceil(mant * 2^exp * 10^(digits-1-e10))
        let shift10 = digits as i64 - 1 - e10;
        let n = scaled_value(mant, exp, shift10, dir);
        let lo = BigInt::from(10u32).pow(digits - 1);
        let hi = &lo * 10;
        if n < lo {
            e10 -= 1;
        } else if n >= hi {
            e10 += 1;
        } else {
            return (n.to_string(), e10);
        }
    }
}

/// floor/ceil of mant * 2^exp * 10^shift10.
fn scaled_value(mant: &BigInt, exp: i64, shift10: i64, dir: Round) -> BigInt {
    let mut num = mant.clone();
    let mut den = BigInt::one();
    if shift10 >= 0 {
        num *= BigInt::from(10u32).pow(shift10 as u32);
    } else {
        den *= BigInt::from(10u32).pow((-shift10) as u32);
    }
    if exp >= 0 {
        num <<= exp as u64;
    } else {
        den <<= (-exp) as u64;
    }
    match dir {
        Round::Down => div_floor_bi(&num, &den),
        Round::Up => div_ceil_bi(&num, &den),
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Dyadic) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Dyadic) -> Ordering {
        let s = self.sign().cmp(&other.sign());
        if s != Ordering::Equal {
            return s;
        }
        if self.sign() == 0 {
            return Ordering::Equal;
        }
        // Same nonzero sign: compare msb exponents first to avoid giant shifts.
        let (ma, mb) = (self.msb_exp().unwrap(), other.msb_exp().unwrap());
        if ma != mb {
            let byexp = ma.cmp(&mb);
            return if self.sign() > 0 { byexp } else { byexp.reverse() };
        }
        self.sub(other).sign().cmp(&0)
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({} * 2^{} ~ {})", self.mant, self.exp, self.to_f64())
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(17, Round::Down))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(m: i64, e: i64) -> Dyadic {
        Dyadic::new(BigInt::from(m), e)
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        let x = d(8, 0);
        assert_eq!(x.mantissa(), &BigInt::from(1));
        assert_eq!(x.exponent(), 3);
    }

    #[test]
    fn add_and_mul_are_exact() {
        let a = d(3, -2); // 0.75
        let b = d(5, -1); // 2.5
        assert_eq!(a.add(&b), d(13, -2));
        assert_eq!(a.mul(&b), d(15, -3));
        assert_eq!(a.sub(&a), Dyadic::zero());
    }

    #[test]
    fn directed_rounding_brackets() {
        let x = d(0b10110111, -3); // needs 8 bits
        let down = x.round(4, Round::Down);
        let up = x.round(4, Round::Up);
        assert!(down <= x && x <= up);
        assert!(down < up);
        // Negative values round symmetrically.
        let y = x.neg();
        assert_eq!(y.round(4, Round::Down), up.neg());
        assert_eq!(y.round(4, Round::Up), down.neg());
    }

    #[test]
    fn division_brackets_quotient() {
        let a = d(1, 0);
        let b = d(3, 0);
        let lo = a.div(&b, 60, Round::Down);
        let hi = a.div(&b, 60, Round::Up);
        let third = BigRational::new(BigInt::one(), BigInt::from(3));
        assert!(lo.to_rational() <= third && third <= hi.to_rational());
        assert!(hi.sub(&lo).msb_exp().unwrap() < -55);
    }

    #[test]
    fn ordering_matches_rationals() {
        let cases = [d(1, -1), d(-3, -2), d(7, 2), Dyadic::zero(), d(-1, 5)];
        for a in &cases {
            for b in &cases {
                assert_eq!(
                    a.cmp(b),
                    a.to_rational().cmp(&b.to_rational()),
                    "{a:?} vs {b:?}"
                );
            }
        }
    }

    #[test]
    fn decimal_formatting_is_directed() {
        let x = d(1, 0).div(&d(3, 0), 120, Round::Down);
        let s = x.to_decimal(10, Round::Down);
        assert_eq!(s, "3.333333333e-1");
        let up = x.to_decimal(10, Round::Up);
        assert_eq!(up, "3.333333334e-1");
        assert_eq!(d(-1, 1).to_decimal(5, Round::Down), "-2.0000e+0");
    }
}
