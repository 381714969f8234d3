//! Factorization of univariate polynomials over the rationals.
//!
//! Squarefree decomposition, reduction modulo a good prime, linear
//! multifactor Hensel lifting to past the Landau-Mignotte bound, and subset
//! recombination. Degrees at desk scale keep recombination cheap; hard caps
//! turn runaway inputs into capacity errors instead of long stalls.

use crate::error::{Error, Result};
use crate::intfactor::is_prime;
use crate::modp::{factor_fp, inv_mod, FpPoly};
use crate::poly::QPoly;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Degree cap for factorization inputs.
pub const FACTOR_DEGREE_CAP: i64 = 128;
/// Cap on modular factor count before recombination would explode.
pub const RECOMBINE_CAP: usize = 24;

/// Factorization over Q: `input = unit * prod factors[i]^mult[i]` with each
/// factor irreducible, primitive with integer coefficients, positive leading
/// coefficient.
#[derive(Debug, Clone)]
pub struct RationalFactorization {
    pub unit: BigRational,
    pub factors: Vec<(QPoly, u32)>,
}

impl RationalFactorization {
    pub fn product(&self) -> QPoly {
        let mut acc = QPoly::constant(self.unit.clone());
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

/// Squarefree decomposition over Q: distinct squarefree monic parts with
/// their multiplicities; `input = lc * prod part_i^i`.
pub fn squarefree_decomposition(p: &QPoly) -> Vec<(QPoly, u32)> {
    assert!(!p.is_zero());
    let mut out = Vec::new();
    let f = p.monic();
    if f.degree() < 1 {
        return out;
    }
    let mut g = f.gcd(&f.derivative());
    let mut c = f.exact_div(&g).monic();
    let mut i = 1u32;
    while !c.is_constant() {
        let d = c.gcd(&g);
        let s = c.exact_div(&d).monic();
        if s.degree() > 0 {
            out.push((s, i));
        }
        g = g.exact_div(&d);
        c = d;
        i += 1;
    }
    out
}

/// Factor a nonzero rational polynomial into irreducibles.
pub fn poly_factor_rationals(p: &QPoly) -> Result<RationalFactorization> {
    if p.is_zero() {
        return Err(Error::domain("cannot factor the zero polynomial"));
    }
    if p.degree() > FACTOR_DEGREE_CAP {
        return Err(Error::capacity(format!(
            "factorization degree {} exceeds cap {FACTOR_DEGREE_CAP}",
            p.degree()
        )));
    }
    let mut factors: Vec<(QPoly, u32)> = Vec::new();
    for (sf, mult) in squarefree_decomposition(p) {
        for irr in factor_squarefree(&sf)? {
            factors.push((irr, mult));
        }
    }
    // unit = input / product of factor powers; always a scalar.
    let mut prod = QPoly::one();
    for (f, e) in &factors {
        for _ in 0..*e {
            prod = prod.mul(f);
        }
    }
    let unit = if prod.is_zero() {
        p.coeff(0)
    } else {
        p.leading() / prod.leading()
    };
    factors.sort_by(canonical_factor_order);
    Ok(RationalFactorization { unit, factors })
}

fn canonical_factor_order(a: &(QPoly, u32), b: &(QPoly, u32)) -> std::cmp::Ordering {
    a.0.degree()
        .cmp(&b.0.degree())
        .then_with(|| {
            for i in (0..=a.0.degree().max(0) as usize).rev() {
                let o = a.0.coeff(i).cmp(&b.0.coeff(i));
                if o != std::cmp::Ordering::Equal {
                    return o;
                }
            }
            std::cmp::Ordering::Equal
        })
        .then(a.1.cmp(&b.1))
}

pub fn is_irreducible(p: &QPoly) -> Result<bool> {
    if p.degree() < 1 {
        return Ok(false);
    }
    let f = poly_factor_rationals(p)?;
    Ok(f.factors.len() == 1 && f.factors[0].1 == 1)
}

/// Factor a squarefree monic rational polynomial; returns primitive integer
/// irreducible factors with positive leading coefficients.
fn factor_squarefree(sf: &QPoly) -> Result<Vec<QPoly>> {
    let (_, prim) = sf.primitive_z();
    factor_squarefree_z(&prim)
}

fn zpoly_to_qpoly(z: &[BigInt]) -> QPoly {
    QPoly::from_bigint_coeffs(z)
}

fn factor_squarefree_z(f: &[BigInt]) -> Result<Vec<QPoly>> {
    let deg = f.len() as i64 - 1;
    if deg <= 0 {
        return Ok(vec![]);
    }
    if deg == 1 {
        return Ok(vec![zpoly_to_qpoly(f)]);
    }
    let lc = f.last().unwrap().clone();

    // Choose a prime keeping the degree and squarefreeness; among a few
    // candidates prefer the fewest modular factors.
    let mut best: Option<(BigUint, Vec<FpPoly>)> = None;
    let mut tried = 0;
    let mut q: u64 = 2;
    while tried < 5 {
        let qb = BigUint::from(q);
        q = next_prime_u64(q);
        if (lc.magnitude() % &qb).is_zero() {
            continue;
        }
        let fp = FpPoly::from_bigints(&qb, f);
        if fp.degree() != deg {
            continue;
        }
        let d = fp.derivative();
        if d.is_zero() || !fp.gcd(&d).is_constant() {
            continue;
        }
        let facs: Vec<FpPoly> = factor_fp(&fp).into_iter().map(|(g, _)| g).collect();
        tried += 1;
        if facs.len() == 1 {
            return Ok(vec![zpoly_to_qpoly(f)]);
        }
        if best.as_ref().map_or(true, |(_, b)| facs.len() < b.len()) {
            best = Some((qb, facs));
        }
    }
    let (p, mod_factors) = best.expect("no usable prime found");
    if mod_factors.len() > RECOMBINE_CAP {
        return Err(Error::capacity(format!(
            "{} modular factors exceed recombination cap {RECOMBINE_CAP}",
            mod_factors.len()
        )));
    }

    // Landau-Mignotte: any integer factor of f (times lc) has coefficients
    // bounded by 2^deg * ||f||_2 * |lc|.
    let norm2_sq: BigInt = f.iter().map(|c| c * c).sum();
    let norm2 = num_integer::Roots::sqrt(norm2_sq.magnitude()) + 1u32;
    let bound = (BigUint::one() << (deg as u64)) * norm2 * lc.magnitude();
    let mut k = 1u32;
    let mut pk = p.clone();
    while pk <= &bound * 2u32 {
        pk *= &p;
        k += 1;
    }

    let lifted = hensel_lift_list(f, &p, &mod_factors, k);
    Ok(recombine(f, &p, pk, &lifted))
}

fn next_prime_u64(mut n: u64) -> u64 {
    loop {
        n += 1;
        if is_prime(&BigUint::from(n)) {
            return n;
        }
    }
}

// --- integer polynomial helpers (coefficients mod m, symmetric or not) ---

fn zp_trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zp_mod(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    zp_trim(v.iter().map(|c| c.mod_floor(m)).collect())
}

fn zp_mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (&out[i + j] + x * y).mod_floor(m);
        }
    }
    zp_trim(out)
}

fn zp_sub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    let zero = BigInt::zero();
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        out.push((x - y).mod_floor(m));
    }
    zp_trim(out)
}

/// Division by a monic polynomial, coefficients mod m.
fn zp_divmod_monic(a: &[BigInt], g: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    assert!(g.last().is_some_and(|c| c.is_one()));
    let mut rem: Vec<BigInt> = a.to_vec();
    if rem.len() < g.len() {
        return (vec![], zp_trim(rem));
    }
    let dq = rem.len() - g.len();
    let mut quot = vec![BigInt::zero(); dq + 1];
    for kk in (0..=dq).rev() {
        let c = rem[kk + g.len() - 1].mod_floor(m);
        if c.is_zero() {
            rem[kk + g.len() - 1] = BigInt::zero();
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            rem[kk + j] = (&rem[kk + j] - &c * b).mod_floor(m);
        }
        quot[kk] = c;
    }
    (zp_trim(quot), zp_trim(zp_mod(&rem, m)))
}

/// Linear multifactor Hensel lifting: from f = lc * prod g_i (mod p) to the
/// same congruence mod p^k, with the g_i monic.
fn hensel_lift_list(f: &[BigInt], p: &BigUint, mods: &[FpPoly], k: u32) -> Vec<Vec<BigInt>> {
    let pz = BigInt::from(p.clone());
    let lc = f.last().unwrap().clone();

    // Factors as integer vectors, monic, coefficients in [0, p).
    let mut gs: Vec<Vec<BigInt>> = mods
        .iter()
        .map(|g| g.c.iter().map(|c| BigInt::from(c.clone())).collect())
        .collect();

    // Precompute, mod p: inv_i = (lc * prod_{j != i} g_j)^(-1) mod g_i.
    let mods_fp: Vec<FpPoly> = mods.to_vec();
    let mut invs: Vec<FpPoly> = Vec::with_capacity(mods.len());
    for i in 0..mods_fp.len() {
        let mut prod = FpPoly::constant(p, lc.mod_floor(&pz).magnitude().clone());
        for (j, gj) in mods_fp.iter().enumerate() {
            if j != i {
                prod = prod.mul(gj).rem(&mods_fp[i]);
            }
        }
        invs.push(fp_inverse_mod(&prod, &mods_fp[i]));
    }

    let mut pk = pz.clone(); // current modulus p^t
    for _ in 1..k {
        let next = &pk * &pz;
        // e = (f - lc * prod g_i) / p^t mod p
        let mut prod = vec![lc.mod_floor(&next)];
        for g in &gs {
            prod = zp_mul_mod(&prod, g, &next);
        }
        let diff = zp_sub_mod(f, &prod, &next);
        let e: Vec<BigInt> = diff.iter().map(|c| (c / &pk).mod_floor(&pz)).collect();
        let e = zp_trim(e);
        if e.is_empty() {
            pk = next;
            continue;
        }
        // delta_i = e * inv_i mod (g_i, p); g_i += p^t * delta_i
        for (i, g) in gs.iter_mut().enumerate() {
            let e_fp = FpPoly::from_bigints(p, &e);
            let delta = e_fp.mul(&invs[i]).rem(&mods_fp[i]);
            for (idx, dcoef) in delta.c.iter().enumerate() {
                if idx >= g.len() {
                    // monic factors never grow in degree
                    break;
                }
                g[idx] = (&g[idx] + &pk * BigInt::from(dcoef.clone())).mod_floor(&next);
            }
        }
        pk = next;
    }
    gs
}

fn fp_inverse_mod(a: &FpPoly, m: &FpPoly) -> FpPoly {
    // Extended euclid over F_q[x].
    let q = a.q.clone();
    let mut r0 = m.clone();
    let mut r1 = a.rem(m);
    let mut s0 = FpPoly::zero(&q);
    let mut s1 = FpPoly::one(&q);
    while !r1.is_zero() {
        let (quot, rem) = r0.divmod(&r1);
        let s2 = s0.sub(&quot.mul(&s1));
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    assert!(r0.is_constant() && !r0.is_zero(), "non-invertible element");
    s0.scale(&inv_mod(&r0.leading(), &q)).rem(m)
}

/// Symmetric representative in (-m/2, m/2].
fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    let mut out: Vec<BigInt> = v.iter().map(|c| c / &g).collect();
    if out.last().unwrap().is_negative() {
        for c in &mut out {
            *c = -&*c;
        }
    }
    out
}

/// Zassenhaus recombination of lifted modular factors.
fn recombine(f: &[BigInt], _p: &BigUint, pk: BigUint, lifted: &[Vec<BigInt>]) -> Vec<QPoly> {
    let m = BigInt::from(pk);
    let mut remaining = zpoly_to_qpoly(f);
    let mut active: Vec<usize> = (0..lifted.len()).collect();
    let mut out = Vec::new();
    let mut size = 1usize;
    while 2 * size <= active.len() {
        let mut found = true;
        while found {
            found = false;
            for subset in combinations(&active, size) {
                let lc = {
                    let (_, prim) = remaining.primitive_z();
                    prim.last().unwrap().clone()
                };
                // candidate = lc * prod lifted[i], symmetric mod p^k
                let mut cand = vec![lc.mod_floor(&m)];
                for &i in &subset {
                    cand = zp_mul_mod(&cand, &lifted[i], &m);
                }
                let cand: Vec<BigInt> = cand.iter().map(|c| symmetric(c, &m)).collect();
                let cand = primitive_part(&zp_trim(cand));
                if cand.len() < 2 {
                    continue;
                }
                let candq = zpoly_to_qpoly(&cand);
                if candq.divides(&remaining) {
                    remaining = remaining.exact_div(&candq);
                    out.push(candq);
                    active.retain(|i| !subset.contains(i));
                    found = true;
                    break;
                }
            }
            if 2 * size > active.len() {
                break;
            }
        }
        size += 1;
    }
    if remaining.degree() > 0 {
        let (_, prim) = remaining.primitive_z();
        out.push(zpoly_to_qpoly(&prim));
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_i64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_int_coeffs(coeffs)
    }

    #[test]
    fn difference_of_squares() {
        let f = poly_factor_rationals(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.factors[0], (p(&[-1, 1]), 1));
        assert_eq!(f.factors[1], (p(&[1, 1]), 1));
        assert_eq!(f.unit, rat_i64(1));
    }

    #[test]
    fn perfect_square_of_quadratic() {
        let f = poly_factor_rationals(&p(&[4, 0, -4, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(p(&[-2, 0, 1]), 2)]);
    }

    #[test]
    fn golden_quadratic_is_irreducible() {
        // Oracle: brute-force the integer factorizations (x+b)(x+d) with
        // b*d = -1; none matches the middle coefficient, and the
        // discriminant 5 is not a perfect square.
        for (b, d) in [(1i64, -1i64), (-1, 1)] {
            assert_ne!(b + d, -1, "(x+{b})(x+{d}) would factor x^2-x-1");
        }
        assert!(!matches!(5i64, 0 | 1 | 4 | 9));
        let f = poly_factor_rationals(&p(&[-1, -1, 1])).unwrap();
        assert_eq!(f.factors, vec![(p(&[-1, -1, 1]), 1)]);
    }

    #[test]
    fn cyclotomic_octic_needs_recombination() {
        // x^4 + 1 is irreducible over Q but splits mod every prime.
        let f = poly_factor_rationals(&p(&[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(p(&[1, 0, 0, 0, 1]), 1)]);
    }

    #[test]
    fn mixed_product_recovers_parts() {
        let prod = p(&[-1, -1, 1]).mul(&p(&[-2, 1])).mul(&p(&[-2, 0, 0, 1]));
        let f = poly_factor_rationals(&prod).unwrap();
        let degs: Vec<i64> = f.factors.iter().map(|(g, _)| g.degree()).collect();
        assert_eq!(degs, vec![1, 2, 3]);
        assert_eq!(f.product(), prod);
    }

    #[test]
    fn zero_polynomial_is_domain_error() {
        assert!(poly_factor_rationals(&QPoly::zero()).is_err());
    }

    #[test]
    fn multiply_back_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..40 {
            let deg = rng.gen_range(1..=8);
            let mut coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-20..=20)).collect();
            if coeffs[deg] == 0 {
                coeffs[deg] = 1;
            }
            let f = p(&coeffs);
            let fac = poly_factor_rationals(&f).unwrap();
            assert_eq!(fac.product(), f, "multiply-back failed for {f:?}");
            for (g, _) in &fac.factors {
                // factors are primitive integer polynomials with positive lc
                let (c, _) = g.primitive_z();
                assert_eq!(c, rat_i64(1));
                assert!(g.leading().is_positive());
            }
        }
    }

    #[test]
    fn rational_scaling_lands_in_unit() {
        let f = p(&[-1, 0, 1]).scale(&BigRational::new(BigInt::from(3), BigInt::from(7)));
        let fac = poly_factor_rationals(&f).unwrap();
        assert_eq!(fac.unit, BigRational::new(BigInt::from(3), BigInt::from(7)));
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn squarefree_discriminant_consistency() {
        // disc != 0 iff the factorization certifies squarefree.
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let deg = rng.gen_range(1..=6);
            let mut coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-8..=8)).collect();
            if coeffs[deg] == 0 {
                coeffs[deg] = 2;
            }
            let f = p(&coeffs);
            let disc = f.discriminant().unwrap();
            let fac = poly_factor_rationals(&f).unwrap();
            let squarefree = fac.factors.iter().all(|(_, e)| *e == 1);
            assert_eq!(
                !disc.is_zero(),
                squarefree,
                "disc/squarefree mismatch for {f:?}"
            );
        }
    }
}
