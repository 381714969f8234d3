//! Certified root isolation for squarefree rational polynomials.
//!
//! Real roots are isolated exactly with a Sturm chain and refined by sign
//! bisection. Complex roots start from a double-precision Aberth iteration,
//! are polished by Newton steps in dyadic arithmetic, and are certified by
//! the disk bound min_w |z - w| <= deg * |p(z)/p'(z)|: once the boxes are
//! pairwise disjoint, sit strictly off the real axis, and the counts add up
//! to the degree, each box provably contains exactly one root.

use crate::dyadic::{Dyadic, Round};
use crate::error::{Error, Result};
use crate::interval::{ComplexBox, RealInterval};
use crate::poly::QPoly;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// One isolated real root.
#[derive(Debug, Clone)]
pub enum RealRootRep {
    /// The root is exactly this rational number.
    Rational(BigRational),
    /// p changes sign between the dyadic endpoints.
    Bracket { lo: Dyadic, hi: Dyadic },
}

/// One isolated complex root in the open upper or lower half plane.
#[derive(Debug, Clone)]
pub struct ComplexRootRep {
    center_re: Dyadic,
    center_im: Dyadic,
    radius: Dyadic,
}

#[derive(Debug, Clone)]
pub enum RootWindow {
    Real(RealRootRep),
    Complex(ComplexRootRep),
}

/// All roots of a squarefree polynomial, with certified isolating windows.
///
/// Windows are ordered: real roots ascending, then conjugate pairs by
/// position, upper-half representative first. `conj[i]` is the index of the
/// complex conjugate root (i itself for real roots). Refinement never
/// changes which root a window designates.
#[derive(Debug, Clone)]
pub struct IsolatedRoots {
    poly: QPoly,
    windows: Vec<RootWindow>,
    conj: Vec<usize>,
    r1: usize,
    r2: usize,
}

impl IsolatedRoots {
    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    pub fn count(&self) -> usize {
        self.windows.len()
    }

    pub fn real_count(&self) -> usize {
        self.r1
    }

    pub fn complex_pair_count(&self) -> usize {
        self.r2
    }

    pub fn conj_index(&self, i: usize) -> usize {
        self.conj[i]
    }

    pub fn is_real(&self, i: usize) -> bool {
        matches!(self.windows[i], RootWindow::Real(_))
    }

    /// Current enclosure of root i as a complex box.
    pub fn window(&self, i: usize, prec: u32) -> ComplexBox {
        match &self.windows[i] {
            RootWindow::Real(r) => ComplexBox::real(real_interval_of(r, prec)),
            RootWindow::Complex(c) => complex_box_of(c, prec),
        }
    }

    /// Refine every window until its width is at most 2^width_exp.
    pub fn refine_all(&mut self, width_exp: i64) -> Result<()> {
        for i in 0..self.windows.len() {
            self.refine(i, width_exp)?;
        }
        Ok(())
    }

    /// Refine window i until its width is at most 2^width_exp.
    pub fn refine(&mut self, i: usize, width_exp: i64) -> Result<()> {
        let poly = self.poly.clone();
        match &mut self.windows[i] {
            RootWindow::Real(r) => refine_real(&poly, r, width_exp),
            RootWindow::Complex(c) => {
                refine_complex(&poly, c, width_exp)?;
                // Mirror the refinement into the conjugate window.
                let mirrored = ComplexRootRep {
                    center_re: c.center_re.clone(),
                    center_im: c.center_im.neg(),
                    radius: c.radius.clone(),
                };
                let j = self.conj[i];
                if j != i {
                    self.windows[j] = RootWindow::Complex(mirrored);
                }
                Ok(())
            }
        }
    }
}

fn real_interval_of(r: &RealRootRep, prec: u32) -> RealInterval {
    match r {
        RealRootRep::Rational(q) => RealInterval::from_rational(q, prec),
        RealRootRep::Bracket { lo, hi } => RealInterval::new(lo.clone(), hi.clone()),
    }
}

fn complex_box_of(c: &ComplexRootRep, prec: u32) -> ComplexBox {
    let _ = prec;
    ComplexBox::new(
        RealInterval::new(
            c.center_re.sub(&c.radius),
            c.center_re.add(&c.radius),
        ),
        RealInterval::new(
            c.center_im.sub(&c.radius),
            c.center_im.add(&c.radius),
        ),
    )
}

/// Isolate all complex roots of a squarefree polynomial of degree >= 1.
pub fn isolate_roots(p: &QPoly) -> Result<IsolatedRoots> {
    if p.degree() < 1 {
        return Err(Error::domain("root isolation requires degree >= 1"));
    }
    if !p.is_squarefree() {
        return Err(Error::internal("root isolation expects a squarefree input"));
    }
    let d = p.degree() as usize;
    let reals = isolate_real_roots(p);
    let r1 = reals.len();
    debug_assert!((d - r1) % 2 == 0, "complex roots come in conjugate pairs");
    let r2 = (d - r1) / 2;

    let mut windows: Vec<RootWindow> = reals.into_iter().map(RootWindow::Real).collect();
    let mut conj: Vec<usize> = (0..r1).collect();

    if r2 > 0 {
        let uppers = certified_upper_boxes(p, r2)?;
        // Order pairs deterministically by their certified centers.
        let mut uppers = uppers;
        uppers.sort_by(|a, b| {
            a.center_re
                .cmp(&b.center_re)
                .then_with(|| a.center_im.cmp(&b.center_im))
        });
        for u in uppers {
            let upper_idx = windows.len();
            let lower = ComplexRootRep {
                center_re: u.center_re.clone(),
                center_im: u.center_im.neg(),
                radius: u.radius.clone(),
            };
            windows.push(RootWindow::Complex(u));
            windows.push(RootWindow::Complex(lower));
            conj.push(upper_idx + 1);
            conj.push(upper_idx);
        }
    }

    Ok(IsolatedRoots {
        poly: p.clone(),
        windows,
        conj,
        r1,
        r2,
    })
}

// ---------------------------------------------------------------- real side

fn sturm_chain(p: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
        if chain.last().unwrap().is_constant() {
            break;
        }
    }
    chain
}

fn sign_variations_at(chain: &[QPoly], x: &BigRational) -> usize {
    let mut last = 0i32;
    let mut v = 0;
    for q in chain {
        let s = {
            let val = q.eval(x);
            if val.is_zero() {
                0
            } else if val.is_positive() {
                1
            } else {
                -1
            }
        };
        if s != 0 {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
    }
    v
}

/// Number of roots in the half-open interval (a, b].
fn count_roots(chain: &[QPoly], a: &BigRational, b: &BigRational) -> usize {
    sign_variations_at(chain, a) - sign_variations_at(chain, b)
}

/// Exponent e with all roots inside |z| < 2^e.
fn cauchy_bound_exp(p: &QPoly) -> i64 {
    let (_, prim) = p.primitive_z();
    let lc_bits = prim.last().unwrap().magnitude().bits() as i64;
    let max_bits = prim
        .iter()
        .map(|c| c.magnitude().bits() as i64)
        .max()
        .unwrap();
    // 1 + max|c_i|/|lc| <= 1 + 2^(max_bits - lc_bits + 1) <= 2^(max_bits - lc_bits + 2)
    (max_bits - lc_bits + 2).max(1)
}

fn isolate_real_roots(p: &QPoly) -> Vec<RealRootRep> {
    let chain = sturm_chain(p);
    let e = cauchy_bound_exp(p);
    let lo = Dyadic::from_i64(-1).shl(e);
    let hi = Dyadic::from_i64(1).shl(e);
    let mut out = Vec::new();
    // p(-2^e) != 0 and p(2^e) != 0 since all roots are strictly inside.
    subdivide(p, &chain, &lo, &hi, &mut out);
    out.sort_by(|a, b| real_root_key(a).cmp(&real_root_key(b)));
    out
}

fn real_root_key(r: &RealRootRep) -> BigRational {
    match r {
        RealRootRep::Rational(q) => q.clone(),
        RealRootRep::Bracket { lo, hi } => {
            (lo.to_rational() + hi.to_rational()) / BigRational::from(BigInt::from(2))
        }
    }
}

/// Recursively bisect (lo, hi] (both endpoints non-roots) until isolated.
fn subdivide(p: &QPoly, chain: &[QPoly], lo: &Dyadic, hi: &Dyadic, out: &mut Vec<RealRootRep>) {
    let n = count_roots(chain, &lo.to_rational(), &hi.to_rational());
    if n == 0 {
        return;
    }
    if n == 1 {
        // A simple root in an interval with non-root endpoints gives a
        // strict sign change.
        debug_assert!(
            p.eval(&lo.to_rational()).is_positive() != p.eval(&hi.to_rational()).is_positive()
        );
        out.push(RealRootRep::Bracket {
            lo: lo.clone(),
            hi: hi.clone(),
        });
        return;
    }
    let mut mid = midpoint(lo, hi);
    if p.eval(&mid.to_rational()).is_zero() {
        // Exact dyadic root: emit it and carve out a punctured neighborhood.
        out.push(RealRootRep::Rational(mid.to_rational()));
        let mut delta = hi.sub(&mid).min(mid.sub(lo));
        loop {
            delta = delta.mul(&Dyadic::new(BigInt::from(1), -1));
            let a = mid.sub(&delta);
            let b = mid.add(&delta);
            let pa = p.eval(&a.to_rational());
            let pb = p.eval(&b.to_rational());
            if !pa.is_zero()
                && !pb.is_zero()
                && count_roots(chain, &a.to_rational(), &b.to_rational()) == 1
            {
                subdivide(p, chain, lo, &a, out);
                subdivide(p, chain, &b, hi, out);
                return;
            }
        }
    }
    // Midpoint may coincide with a chain zero but not a root of p; counts
    // on half-open intervals stay additive.
    if p.eval(&mid.to_rational()).is_zero() {
        unreachable!();
    }
    let m = mid.clone();
    subdivide(p, chain, lo, &m, out);
    mid = m;
    subdivide(p, chain, &mid, hi, out);
}

fn midpoint(lo: &Dyadic, hi: &Dyadic) -> Dyadic {
    lo.add(hi).mul(&Dyadic::new(BigInt::from(1), -1))
}

fn refine_real(p: &QPoly, r: &mut RealRootRep, width_exp: i64) -> Result<()> {
    if let RealRootRep::Bracket { lo, hi } = r {
        let target = Dyadic::new(BigInt::from(1), width_exp);
        let mut sign_lo = p.eval(&lo.to_rational()).is_positive();
        while hi.sub(lo) > target {
            let mid = midpoint(lo, hi);
            let v = p.eval(&mid.to_rational());
            if v.is_zero() {
                *r = RealRootRep::Rational(mid.to_rational());
                return Ok(());
            }
            if v.is_positive() == sign_lo {
                *lo = mid;
                sign_lo = v.is_positive();
            } else {
                *hi = mid;
            }
        }
    }
    Ok(())
}

// ------------------------------------------------------------- complex side

/// Aberth-Ehrlich simultaneous iteration in f64 on the scaled polynomial.
fn aberth_f64(p: &QPoly, phase: f64) -> Vec<Complex64> {
    let d = p.degree() as usize;
    let (_, prim) = p.primitive_z();
    let scale_exp = cauchy_bound_exp(p);
    // q(y) = p(2^e y) / (lc 2^(e d)): coefficient i gets 2^(e (i - d)) / lc.
    let lc_bits = prim[d].magnitude().bits() as f64;
    let lc_sign = if prim[d].is_negative() { -1.0 } else { 1.0 };
    let coeffs: Vec<f64> = prim
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if c.is_zero() {
                return 0.0;
            }
            let bits = c.magnitude().bits() as f64;
            let sign = if c.is_negative() { -1.0 } else { 1.0 };
            // log2|q_i| = log2|c_i| - log2|lc| + e(i - d)
            let log2 = bits - lc_bits + (scale_exp as f64) * (i as f64 - d as f64);
            // Recover a faithful-enough mantissa from the top 52 bits.
            let top: f64 = top_mantissa(c);
            sign * lc_sign * top * 2f64.powf(log2 - bits + top_bits(c))
        })
        .collect();
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let eval_d = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, c) in coeffs.iter().enumerate().rev().take(d) {
            acc = acc * z + c * i as f64;
        }
        acc
    };
    let mut zs: Vec<Complex64> = (0..d)
        .map(|j| {
            let ang = 2.0 * std::f64::consts::PI * (j as f64 + phase) / d as f64 + 0.4;
            Complex64::from_polar(0.65 + 0.05 * (j % 3) as f64, ang)
        })
        .collect();
    for _ in 0..400 {
        let mut moved: f64 = 0.0;
        for j in 0..d {
            let pj = eval(zs[j]);
            let dj = eval_d(zs[j]);
            if dj.norm() == 0.0 {
                zs[j] += Complex64::new(1e-4, 1e-4);
                continue;
            }
            let w = pj / dj;
            let mut rep = Complex64::new(0.0, 0.0);
            for (k, zk) in zs.iter().enumerate() {
                if k != j {
                    let diff = zs[j] - zk;
                    if diff.norm() > 1e-300 {
                        rep += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * rep;
            let step = if denom.norm() > 1e-12 { w / denom } else { w };
            zs[j] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 {
            break;
        }
    }
    let r = 2f64.powi(scale_exp as i32);
    zs.into_iter().map(|z| z * r).collect()
}

fn top_mantissa(c: &BigInt) -> f64 {
    let bits = c.magnitude().bits();
    let keep = bits.min(52);
    let shifted = c.magnitude() >> (bits - keep);
    let v: f64 = shifted.to_string().parse().unwrap_or(1.0);
    v
}

fn top_bits(c: &BigInt) -> f64 {
    c.magnitude().bits().min(52) as f64
}

/// Newton-polish an approximation and return (center, certified radius).
fn polish(p: &QPoly, dp: &QPoly, z0: (Dyadic, Dyadic), prec: u32) -> Option<ComplexRootRep> {
    let d = p.degree() as u64;
    let mut re = z0.0.round(prec, Round::Down);
    let mut im = z0.1.round(prec, Round::Down);
    let mut best: Option<ComplexRootRep> = None;
    for _ in 0..(40 + prec / 8) {
        let z = ComplexBox::new(
            RealInterval::point(re.clone()),
            RealInterval::point(im.clone()),
        );
        let pv = p.eval_box(&z, prec + 16);
        let dv = dp.eval_box(&z, prec + 16);
        let dnorm = dv.norm_sq(prec + 16);
        if !dnorm.strictly_positive() {
            return best;
        }
        let quot = pv.div(&dv, prec + 16);
        // Certified radius: d * |p(z)/p'(z)|, upper end.
        let qn = quot.norm_sq(prec + 8).sqrt(prec + 8);
        let radius = qn
            .hi
            .mul(&Dyadic::from_i64(d as i64))
            .mul(&Dyadic::new(BigInt::from(17), -4))
            .round(32, Round::Up);
        let cand = ComplexRootRep {
            center_re: re.clone(),
            center_im: im.clone(),
            radius: radius.clone(),
        };
        let improved = match &best {
            None => true,
            Some(b) => radius < b.radius,
        };
        if improved {
            best = Some(cand);
        }
        if let Some(b) = &best {
            if b.radius.is_zero() || b.radius.msb_exp().unwrap_or(i64::MIN) < -(prec as i64) {
                break;
            }
        }
        // Newton step from the midpoint of the quotient.
        re = re.sub(&quot.re.midpoint(prec)).round(prec, Round::Down);
        im = im.sub(&quot.im.midpoint(prec)).round(prec, Round::Down);
    }
    best
}

fn boxes_disjoint(a: &ComplexRootRep, b: &ComplexRootRep) -> bool {
    let a_box = complex_box_of(a, 0);
    let b_box = complex_box_of(b, 0);
    !a_box.intersects(&b_box)
}

/// Produce `want` certified upper-half boxes.
fn certified_upper_boxes(p: &QPoly, want: usize) -> Result<Vec<ComplexRootRep>> {
    let dp = p.derivative();
    let mut prec = 128u32;
    let mut phase = 0.0f64;
    for _attempt in 0..8 {
        let approx = aberth_f64(p, phase);
        // Keep the `want` approximations with the largest imaginary part.
        let mut cands: Vec<(f64, Complex64)> = approx.iter().map(|z| (z.im, *z)).collect();
        cands.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
        let mut polished = Vec::new();
        let mut ok = true;
        for (_, z) in cands.into_iter().take(want) {
            let z0 = (f64_to_dyadic(z.re), f64_to_dyadic(z.im));
            match polish(p, &dp, z0, prec) {
                Some(c) => polished.push(c),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && polished.len() == want {
            // All strictly above the real axis?
            let above = polished
                .iter()
                .all(|c| c.center_im.sub(&c.radius).is_positive());
            let disjoint = (0..polished.len()).all(|i| {
                (i + 1..polished.len()).all(|j| boxes_disjoint(&polished[i], &polished[j]))
            });
            if above && disjoint {
                return Ok(polished);
            }
        }
        prec *= 2;
        phase += 0.137;
        if prec > 1 << 14 {
            break;
        }
    }
    Err(Error::internal(format!(
        "failed to certify complex root boxes for {p:?}"
    )))
}

fn f64_to_dyadic(x: f64) -> Dyadic {
    if x == 0.0 || !x.is_finite() {
        return Dyadic::zero();
    }
    let bits = x.to_bits();
    let sign = if bits >> 63 == 1 { -1 } else { 1 };
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (mant, e) = if exp == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), exp - 1075)
    };
    Dyadic::new(BigInt::from(sign * mant as i64), e)
}

fn refine_complex(p: &QPoly, c: &mut ComplexRootRep, width_exp: i64) -> Result<()> {
    let target = Dyadic::new(BigInt::from(1), width_exp);
    if c.radius.mul(&Dyadic::from_i64(2)) <= target {
        return Ok(());
    }
    let dp = p.derivative();
    let mut prec = 128u32;
    loop {
        let polished = polish(p, &dp, (c.center_re.clone(), c.center_im.clone()), prec);
        if let Some(newc) = polished {
            // The refined box must stay within the old one so the window
            // keeps designating the same root.
            let inside = {
                let old = complex_box_of(c, 0);
                let newer = complex_box_of(&newc, 0);
                old.re.lo <= newer.re.lo
                    && newer.re.hi <= old.re.hi
                    && old.im.lo <= newer.im.lo
                    && newer.im.hi <= old.im.hi
            };
            if inside && newc.radius.mul(&Dyadic::from_i64(2)) <= target {
                *c = newc;
                return Ok(());
            }
            if inside && newc.radius < c.radius {
                *c = newc;
            }
        }
        prec *= 2;
        if prec > 1 << 16 {
            return Err(Error::precision(format!(
                "complex root refinement stalled for {p:?}"
            )));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_i64;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_int_coeffs(coeffs)
    }

    /// The window lies inside [a/den, b/den].
    fn inside(w: &RealInterval, a: i64, b: i64, den: i64) -> bool {
        let lo = BigRational::new(BigInt::from(a), BigInt::from(den));
        let hi = BigRational::new(BigInt::from(b), BigInt::from(den));
        w.lo.to_rational() >= lo && w.hi.to_rational() <= hi
    }

    #[test]
    fn golden_ratio_roots_are_real() {
        let r = isolate_roots(&p(&[-1, -1, 1])).unwrap();
        assert_eq!(r.real_count(), 2);
        assert_eq!(r.complex_pair_count(), 0);
        let mut roots = r.clone();
        roots.refine_all(-40).unwrap();
        // phi = 1.6180339887..., psi = -0.6180339887...
        assert!(inside(&roots.window(1, 64).re, 16180339887, 16180339888, 10_000_000_000));
        assert!(inside(&roots.window(0, 64).re, -6180339888, -6180339887, 10_000_000_000));
    }

    #[test]
    fn gaussian_units_are_complex() {
        let mut r = isolate_roots(&p(&[1, 0, 1])).unwrap();
        assert_eq!(r.real_count(), 0);
        assert_eq!(r.complex_pair_count(), 1);
        r.refine_all(-50).unwrap();
        let up = r.window(0, 64);
        assert!(up.re.contains_rational(&rat_i64(0)));
        assert!(up.im.contains_rational(&rat_i64(1)));
        let down = r.window(1, 64);
        assert!(down.im.contains_rational(&rat_i64(-1)));
        assert_eq!(r.conj_index(0), 1);
        assert_eq!(r.conj_index(1), 0);
    }

    #[test]
    fn integer_roots_become_exact_points() {
        // (x-2)(x+3) has dyadic roots the bisection lands on.
        let mut r = isolate_roots(&p(&[-6, 1, 1])).unwrap();
        r.refine_all(-80).unwrap();
        let w0 = r.window(0, 64);
        let w1 = r.window(1, 64);
        assert!(w0.re.contains_rational(&rat_i64(-3)));
        assert!(w1.re.contains_rational(&rat_i64(2)));
    }

    #[test]
    fn cube_root_of_two_layout() {
        // x^3 - 2: one real root, one conjugate pair.
        let mut r = isolate_roots(&p(&[-2, 0, 0, 1])).unwrap();
        assert_eq!(r.real_count(), 1);
        assert_eq!(r.complex_pair_count(), 1);
        r.refine_all(-60).unwrap();
        // real root 1.259921049894...
        assert!(inside(&r.window(0, 64).re, 125992104989, 125992104990, 100_000_000_000));
        // complex pair real part -0.62996052494...
        assert!(inside(&r.window(1, 64).re, -62996052495, -62996052494, 100_000_000_000));
        let c = r.window(1, 64);
        // window product check: the pair multiplies to 2^(2/3) modulus.
        let m = c.modulus(96);
        let m3 = m.pow_u64(3, 96);
        // |root|^3 = 2^(1/3*3)... modulus of complex roots is 2^(1/3):
        assert!(m3.contains_rational(&rat_i64(2)));
    }

    #[test]
    fn refinement_keeps_designation() {
        let f = p(&[-1, -1, 1]);
        let mut r = isolate_roots(&f).unwrap();
        let before = r.window(1, 64);
        r.refine_all(-200).unwrap();
        let after = r.window(1, 64);
        assert!(before.re.lo <= after.re.lo && after.re.hi <= before.re.hi);
        assert!(after.re.width().msb_exp().unwrap() <= -199);
    }

    #[test]
    fn many_roots_mixed() {
        // (x^2+1)(x^2+4)(x-1)(x+5) degree 6, two pairs, two reals.
        let f = p(&[1, 0, 1]).mul(&p(&[4, 0, 1])).mul(&p(&[-1, 1])).mul(&p(&[5, 1]));
        let mut r = isolate_roots(&f).unwrap();
        assert_eq!(r.real_count(), 2);
        assert_eq!(r.complex_pair_count(), 2);
        r.refine_all(-40).unwrap();
        // Verify each window excludes all other windows (pairwise disjoint).
        for i in 0..r.count() {
            for j in i + 1..r.count() {
                let a = r.window(i, 64);
                let b = r.window(j, 64);
                assert!(!a.intersects(&b), "windows {i} and {j} overlap");
            }
        }
    }
}
