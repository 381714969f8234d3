//! Certified real intervals and complex boxes over dyadic endpoints.
//!
//! Every operation returns an enclosure of the true result: endpoints are
//! rounded outward at the requested precision, and the transcendental
//! functions carry explicit series remainder bounds. Comparisons are only
//! reported when the enclosures separate, so a `true` here is a proof.

use crate::dyadic::{Dyadic, Round};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Signed;
use std::sync::RwLock;

#[derive(Clone, PartialEq, Eq)]
pub struct RealInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl std::fmt::Debug for RealInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lo.to_f64(), self.hi.to_f64())
    }
}

impl RealInterval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> RealInterval {
        debug_assert!(lo <= hi, "inverted interval");
        RealInterval { lo, hi }
    }

    pub fn point(x: Dyadic) -> RealInterval {
        RealInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn zero() -> RealInterval {
        RealInterval::point(Dyadic::zero())
    }

    pub fn one() -> RealInterval {
        RealInterval::point(Dyadic::one())
    }

    pub fn from_i64(n: i64) -> RealInterval {
        RealInterval::point(Dyadic::from_i64(n))
    }

    pub fn from_bigint(n: &BigInt) -> RealInterval {
        RealInterval::point(Dyadic::from_bigint(n))
    }

    pub fn from_rational(r: &BigRational, prec: u32) -> RealInterval {
        if let Some(d) = Dyadic::from_rational_exact(r) {
            return RealInterval::point(d);
        }
        RealInterval::new(
            Dyadic::from_rational(r, prec, Round::Down),
            Dyadic::from_rational(r, prec, Round::Up),
        )
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_rational(&self, r: &BigRational) -> bool {
        self.lo.to_rational() <= *r && *r <= self.hi.to_rational()
    }

    pub fn strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn strictly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// Certified strict `<`: every point of `self` is below every point of `rhs`.
    pub fn lt_certain(&self, rhs: &RealInterval) -> bool {
        self.hi < rhs.lo
    }

    /// Certified `<=` (allows touching endpoints).
    pub fn le_certain(&self, rhs: &RealInterval) -> bool {
        self.hi <= rhs.lo
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn round_out(&self, prec: u32) -> RealInterval {
        RealInterval::new(self.lo.round(prec, Round::Down), self.hi.round(prec, Round::Up))
    }

    pub fn neg(&self) -> RealInterval {
        RealInterval::new(self.hi.neg(), self.lo.neg())
    }

    pub fn add(&self, rhs: &RealInterval, prec: u32) -> RealInterval {
        RealInterval::new(
            self.lo.add(&rhs.lo).round(prec, Round::Down),
            self.hi.add(&rhs.hi).round(prec, Round::Up),
        )
    }

    pub fn sub(&self, rhs: &RealInterval, prec: u32) -> RealInterval {
        self.add(&rhs.neg(), prec)
    }

    pub fn mul(&self, rhs: &RealInterval, prec: u32) -> RealInterval {
        let cands = [
            self.lo.mul(&rhs.lo),
            self.lo.mul(&rhs.hi),
            self.hi.mul(&rhs.lo),
            self.hi.mul(&rhs.hi),
        ];
        let lo = cands.iter().min().unwrap().round(prec, Round::Down);
        let hi = cands.iter().max().unwrap().round(prec, Round::Up);
        RealInterval::new(lo, hi)
    }

    pub fn square(&self, prec: u32) -> RealInterval {
        if self.contains_zero() {
            let m = self.lo.abs().max(self.hi.abs());
            RealInterval::new(Dyadic::zero(), m.mul(&m).round(prec, Round::Up))
        } else {
            self.mul(self, prec)
        }
    }

    pub fn abs(&self) -> RealInterval {
        if self.contains_zero() {
            RealInterval::new(Dyadic::zero(), self.lo.abs().max(self.hi.abs()))
        } else if self.hi.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Reciprocal; requires an interval certified away from zero.
    pub fn recip(&self, prec: u32) -> RealInterval {
        assert!(
            !self.contains_zero(),
            "reciprocal of an interval containing zero"
        );
        let one = Dyadic::one();
        RealInterval::new(
            one.div(&self.hi, prec, Round::Down),
            one.div(&self.lo, prec, Round::Up),
        )
    }

    pub fn div(&self, rhs: &RealInterval, prec: u32) -> RealInterval {
        self.mul(&rhs.recip(prec + 4), prec)
    }

    /// Integer power by repeated squaring.
    pub fn pow_u64(&self, mut k: u64, prec: u32) -> RealInterval {
        let mut base = self.clone();
        let mut acc = RealInterval::one();
        if k == 0 {
            return acc;
        }
        let wp = prec + 8;
        loop {
            if k & 1 == 1 {
                acc = acc.mul(&base, wp);
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.square(wp);
        }
        acc.round_out(prec)
    }

    /// x^(1/n) for a nonnegative interval.
    pub fn nth_root(&self, n: u32, prec: u32) -> RealInterval {
        assert!(!self.lo.is_negative(), "nth_root of a negative interval");
        RealInterval::new(
            dyadic_nth_root(&self.lo, n, prec, Round::Down),
            dyadic_nth_root(&self.hi, n, prec, Round::Up),
        )
    }

    pub fn sqrt(&self, prec: u32) -> RealInterval {
        self.nth_root(2, prec)
    }

    /// x^(p/q) for a positive interval (q > 0; p may be negative).
    pub fn pow_rational(&self, p: i64, q: u32, prec: u32) -> RealInterval {
        assert!(self.strictly_positive(), "rational power needs positive base");
        let wp = prec + 8;
        let r = self.pow_u64(p.unsigned_abs(), wp).nth_root(q, wp);
        if p >= 0 {
            r.round_out(prec)
        } else {
            r.recip(prec)
        }
    }

    /// Natural logarithm of a positive interval.
    pub fn ln(&self, prec: u32) -> RealInterval {
        assert!(self.strictly_positive(), "ln of a non-positive interval");
        let lo = ln_dyadic(&self.lo, prec);
        let hi = ln_dyadic(&self.hi, prec);
        RealInterval::new(lo.lo, hi.hi)
    }

    /// Exponential of an interval.
    pub fn exp(&self, prec: u32) -> RealInterval {
        let lo = exp_dyadic(&self.lo, prec);
        let hi = exp_dyadic(&self.hi, prec);
        RealInterval::new(lo.lo, hi.hi)
    }

    pub fn max(&self, rhs: &RealInterval) -> RealInterval {
        RealInterval::new(
            self.lo.clone().max(rhs.lo.clone()),
            self.hi.clone().max(rhs.hi.clone()),
        )
    }

    pub fn min(&self, rhs: &RealInterval) -> RealInterval {
        RealInterval::new(
            self.lo.clone().min(rhs.lo.clone()),
            self.hi.clone().min(rhs.hi.clone()),
        )
    }

    pub fn intersects(&self, rhs: &RealInterval) -> bool {
        !(self.hi < rhs.lo || rhs.hi < self.lo)
    }

    pub fn midpoint(&self, prec: u32) -> Dyadic {
        self.lo
            .add(&self.hi)
            .mul(&Dyadic::new(BigInt::from(1), -1))
            .round(prec, Round::Down)
    }
}

/// Directed n-th root of a nonnegative dyadic.
fn dyadic_nth_root(x: &Dyadic, n: u32, prec: u32, dir: Round) -> Dyadic {
    assert!(n >= 1);
    assert!(!x.is_negative());
    if x.is_zero() {
        return Dyadic::zero();
    }
    if n == 1 {
        return x.round(prec, dir);
    }
    let mant = x.mantissa().magnitude().clone();
    let exp = x.exponent();
    // Shift so the exponent is divisible by n and the mantissa carries
    // enough bits for prec significant result bits.
    let want_bits = (prec as u64 + 4) * n as u64;
    let cur_bits = mant.bits();
    let mut s = want_bits.saturating_sub(cur_bits) as i64;
    let rem = (exp - s).rem_euclid(n as i64);
    s += rem;
    let shifted: BigUint = mant << (s as u64);
    let root = num_integer::Roots::nth_root(&shifted, n);
    let is_exact = root.pow(n) == shifted;
    let root = match (dir, is_exact) {
        (Round::Down, _) | (Round::Up, true) => root,
        (Round::Up, false) => root + 1u32,
    };
    Dyadic::new(BigInt::from(root), (exp - s) / n as i64).round(prec, dir)
}

/// ln(2) enclosure, cached per precision.
pub fn ln2(prec: u32) -> RealInterval {
    static CACHE: RwLock<Option<(u32, RealInterval)>> = RwLock::new(None);
    {
        let g = CACHE.read().unwrap();
        if let Some((p, v)) = g.as_ref() {
            if *p >= prec {
                return v.round_out(prec);
            }
        }
    }
    // ln 2 = 2 atanh(1/3)
    let third = RealInterval::from_rational(
        &BigRational::new(BigInt::from(1), BigInt::from(3)),
        prec + 8,
    );
    let v = atanh_small(&third, prec + 4)
        .mul(&RealInterval::from_i64(2), prec + 4)
        .round_out(prec + 2);
    let mut g = CACHE.write().unwrap();
    *g = Some((prec, v.clone()));
    v.round_out(prec)
}

/// atanh on an interval inside [0, 1/2], with a certified tail bound.
fn atanh_small(z: &RealInterval, prec: u32) -> RealInterval {
    debug_assert!(!z.lo.is_negative());
    // The tail bound below assumes z <= 5/8.
    debug_assert!(z.hi < Dyadic::new(BigInt::from(5), -3));
    let wp = prec + 16;
    let z2 = z.square(wp);
    let mut term = z.clone(); // z^(2j+1)
    let mut sum = RealInterval::zero();
    let mut j = 0u32;
    let eps = Dyadic::new(BigInt::from(1), -(prec as i64 + 8));
    loop {
        let contrib = term.div(&RealInterval::from_i64((2 * j + 1) as i64), wp);
        sum = sum.add(&contrib, wp);
        term = term.mul(&z2, wp);
        j += 1;
        if term.hi < eps {
            break;
        }
        assert!(j < 100_000, "atanh series failed to converge");
    }
    // Tail: sum_{i>=j} z^(2i+1)/(2i+1) <= z^(2j+1) / (1 - z^2) <= 2 * term.hi
    // for z <= 1/2 + 1/8.
    let tail = term.hi.mul(&Dyadic::from_i64(2)).round(wp, Round::Up);
    sum.add(&RealInterval::new(Dyadic::zero(), tail), wp)
        .round_out(prec)
}

/// Enclosure of ln(x) for a positive dyadic x.
pub fn ln_dyadic(x: &Dyadic, prec: u32) -> RealInterval {
    assert!(x.is_positive(), "ln of non-positive value");
    let wp = prec + 16;
    // x = f * 2^e with f in [1, 2)
    let bits = x.mant_bits() as i64;
    let e = x.exponent() + bits - 1;
    let f = x.shl(-(x.exponent() + bits - 1)); // f in [1,2)
    // ln f = 2 atanh((f-1)/(f+1)), argument in [0, 1/3]
    let num = RealInterval::point(f.sub(&Dyadic::one()));
    let den = RealInterval::point(f.add(&Dyadic::one()));
    let z = num.div(&den, wp);
    let lnf = atanh_small(&z, wp).mul(&RealInterval::from_i64(2), wp);
    let e_term = ln2(wp).mul(&RealInterval::from_i64(e), wp);
    lnf.add(&e_term, wp).round_out(prec)
}

/// Enclosure of ln(n) for a positive big integer.
pub fn ln_bigint(n: &BigInt, prec: u32) -> RealInterval {
    assert!(n.is_positive());
    ln_dyadic(&Dyadic::from_bigint(n), prec)
}

/// Enclosure of ln(r) for a positive rational.
pub fn ln_rational(r: &BigRational, prec: u32) -> RealInterval {
    assert!(r.is_positive());
    let wp = prec + 8;
    let a = ln_bigint(r.numer(), wp);
    let b = ln_bigint(r.denom(), wp);
    a.sub(&b, wp).round_out(prec)
}

/// Enclosure of exp(x) for a dyadic x.
///
/// Arguments far below -prec in magnitude short-circuit to [0, 2^-prec];
/// arguments above 2^40 are a capacity bug upstream and panic.
pub fn exp_dyadic(x: &Dyadic, prec: u32) -> RealInterval {
    let wp = prec + 16;
    if x.is_zero() {
        return RealInterval::one();
    }
    if let Some(m) = x.msb_exp() {
        assert!(
            x.is_negative() || m <= 40,
            "exp argument too large: 2^{m} magnitude"
        );
    }
    // Underflow shortcut: x <= -(prec+2) * ln2 < -(prec+2)*0.69
    let neg_cut = Dyadic::from_i64(-(prec as i64 + 2));
    if x < &neg_cut {
        return RealInterval::new(
            Dyadic::zero(),
            Dyadic::new(BigInt::from(1), -(prec as i64)),
        );
    }
    // Argument reduction: x = k*ln2 + r, |r| <= 0.4 (approximately)
    let l2 = ln2(wp);
    let k_est = (x.to_f64() / std::f64::consts::LN_2).round();
    assert!(k_est.abs() < 9e15, "exp reduction overflow");
    let k = k_est as i64;
    let r = RealInterval::point(x.clone()).sub(&l2.mul(&RealInterval::from_i64(k), wp), wp);
    debug_assert!(r.lo > Dyadic::from_i64(-1) && r.hi < Dyadic::from_i64(1));
    // exp(r) by Taylor series with remainder bound.
    let mut term = RealInterval::one();
    let mut sum = RealInterval::one();
    let mut j = 1u32;
    let eps = Dyadic::new(BigInt::from(1), -(prec as i64 + 8));
    loop {
        term = term.mul(&r, wp).div(&RealInterval::from_i64(j as i64), wp);
        sum = sum.add(&term, wp);
        j += 1;
        if term.hi.abs() < eps && term.lo.abs() < eps {
            break;
        }
        assert!(j < 10_000, "exp series failed to converge");
    }
    // Tail bound: |R| <= |term| * |r| / (1 - |r|) <= 4 |term| for |r| <= 0.8.
    let t = term.hi.abs().max(term.lo.abs()).mul(&Dyadic::from_i64(4));
    let sum = sum.add(&RealInterval::new(t.neg(), t), wp);
    sum.mul(
        &RealInterval::point(Dyadic::new(BigInt::from(1), k)),
        wp,
    )
    .round_out(prec)
}

/// A complex rectangle with interval real and imaginary parts.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexBox {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ComplexBox {
    pub fn new(re: RealInterval, im: RealInterval) -> ComplexBox {
        ComplexBox { re, im }
    }

    pub fn real(re: RealInterval) -> ComplexBox {
        ComplexBox {
            re,
            im: RealInterval::zero(),
        }
    }

    pub fn zero() -> ComplexBox {
        ComplexBox::real(RealInterval::zero())
    }

    pub fn one() -> ComplexBox {
        ComplexBox::real(RealInterval::one())
    }

    pub fn is_real_line(&self) -> bool {
        self.im.lo.is_zero() && self.im.hi.is_zero()
    }

    pub fn conj(&self) -> ComplexBox {
        ComplexBox {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn neg(&self) -> ComplexBox {
        ComplexBox {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn add(&self, rhs: &ComplexBox, prec: u32) -> ComplexBox {
        ComplexBox {
            re: self.re.add(&rhs.re, prec),
            im: self.im.add(&rhs.im, prec),
        }
    }

    pub fn sub(&self, rhs: &ComplexBox, prec: u32) -> ComplexBox {
        ComplexBox {
            re: self.re.sub(&rhs.re, prec),
            im: self.im.sub(&rhs.im, prec),
        }
    }

    pub fn mul(&self, rhs: &ComplexBox, prec: u32) -> ComplexBox {
        let wp = prec + 4;
        ComplexBox {
            re: self.re.mul(&rhs.re, wp).sub(&self.im.mul(&rhs.im, wp), prec),
            im: self.re.mul(&rhs.im, wp).add(&self.im.mul(&rhs.re, wp), prec),
        }
    }

    pub fn scale(&self, s: &RealInterval, prec: u32) -> ComplexBox {
        ComplexBox {
            re: self.re.mul(s, prec),
            im: self.im.mul(s, prec),
        }
    }

    pub fn norm_sq(&self, prec: u32) -> RealInterval {
        let wp = prec + 4;
        self.re.square(wp).add(&self.im.square(wp), prec)
    }

    pub fn modulus(&self, prec: u32) -> RealInterval {
        self.norm_sq(prec + 4).sqrt(prec)
    }

    /// Division; the divisor box must exclude zero.
    pub fn div(&self, rhs: &ComplexBox, prec: u32) -> ComplexBox {
        let wp = prec + 8;
        let n = rhs.norm_sq(wp);
        assert!(n.strictly_positive(), "complex division by a box containing zero");
        let inv = n.recip(wp);
        let num = self.mul(&rhs.conj(), wp);
        num.scale(&inv, prec)
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn intersects(&self, rhs: &ComplexBox) -> bool {
        self.re.intersects(&rhs.re) && self.im.intersects(&rhs.im)
    }

    pub fn width(&self) -> Dyadic {
        self.re.width().max(self.im.width())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn ln2_matches_reference() {
        let v = ln2(128);
        // ln 2 lies strictly between these two rationals:
        // 0.693147180559945309417232121458 +- 1 ulp of the last digit.
        let den = BigInt::from(10u64).pow(30);
        let below = BigRational::new(BigInt::from(693147180559945309417232121458u128), den.clone());
        let above = BigRational::new(BigInt::from(693147180559945309417232121459u128), den);
        assert!(v.lo.to_rational() <= above, "lower end exceeds ln2");
        assert!(v.hi.to_rational() >= below, "upper end is below ln2");
        assert!(v.width().msb_exp().unwrap() < -120);
    }

    #[test]
    fn ln_of_products_adds() {
        let a = ln_bigint(&BigInt::from(6), 100);
        let b = ln_bigint(&BigInt::from(2), 100).add(&ln_bigint(&BigInt::from(3), 100), 100);
        assert!(a.intersects(&b));
    }

    #[test]
    fn exp_ln_round_trip() {
        for n in [2i64, 3, 10, 1000] {
            let l = ln_bigint(&BigInt::from(n), 120);
            let e = RealInterval::new(l.lo.clone(), l.hi.clone()).exp(120);
            assert!(
                e.contains_rational(&BigRational::from(BigInt::from(n))),
                "exp(ln({n})) must contain {n}"
            );
        }
    }

    #[test]
    fn exp_underflow_shortcut() {
        let tiny = exp_dyadic(&Dyadic::from_i64(-100_000), 64);
        assert!(tiny.lo.is_zero() || tiny.lo.is_positive());
        assert!(tiny.hi < Dyadic::new(BigInt::one(), -60));
    }

    #[test]
    fn sqrt_brackets() {
        let two = RealInterval::from_i64(2);
        let s = two.sqrt(128);
        let sq = s.square(128);
        assert!(sq.contains_rational(&BigRational::from(BigInt::from(2))));
        assert!(s.width().msb_exp().unwrap() < -120);
    }

    #[test]
    fn nth_root_of_exact_power() {
        let x = RealInterval::from_i64(1024);
        let r = x.nth_root(5, 64);
        assert!(r.contains_rational(&BigRational::from(BigInt::from(4))));
        // 2^10 root 5 must be exactly 4 on both ends.
        assert_eq!(r.lo, Dyadic::from_i64(4));
        assert_eq!(r.hi, Dyadic::from_i64(4));
    }

    #[test]
    fn interval_pow_and_rational_pow() {
        let three = RealInterval::from_i64(3);
        let p = three.pow_u64(7, 80);
        assert!(p.contains_rational(&BigRational::from(BigInt::from(2187))));
        let pr = three.pow_rational(-2, 1, 80);
        assert!(pr.contains_rational(&rat(1, 9)));
    }

    #[test]
    fn complex_mul_and_modulus() {
        let i = ComplexBox::new(RealInterval::zero(), RealInterval::one());
        let sq = i.mul(&i, 64);
        assert!(sq.re.contains_rational(&rat(-1, 1)));
        assert!(sq.im.contains_zero());
        let m = ComplexBox::new(RealInterval::from_i64(3), RealInterval::from_i64(4)).modulus(64);
        assert!(m.contains_rational(&BigRational::from(BigInt::from(5))));
    }

    #[test]
    fn division_certifies() {
        let a = RealInterval::from_i64(1);
        let b = RealInterval::from_i64(3);
        let q = a.div(&b, 100);
        assert!(q.contains_rational(&rat(1, 3)));
        assert!(q.width().msb_exp().unwrap() < -90);
    }
}
