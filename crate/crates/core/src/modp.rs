//! Dense polynomials over prime fields F_q and their exact factorization.
//!
//! Distinct-degree splitting followed by Cantor-Zassenhaus equal-degree
//! splitting (trace map at q = 2). Randomness comes from a fixed-seed
//! generator so results are deterministic; the factor list is sorted
//! canonically regardless.

use crate::error::{Error, Result};
use crate::intfactor::is_prime;
use crate::poly::QPoly;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Modular inverse of a mod m (m prime, a not divisible by m).
pub fn inv_mod(a: &BigUint, m: &BigUint) -> BigUint {
    let a = BigInt::from(a.clone());
    let m = BigInt::from(m.clone());
    let e = a.extended_gcd(&m);
    assert!(e.gcd.is_one(), "inverse of non-unit");
    let r = e.x.mod_floor(&m);
    r.magnitude().clone()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpPoly {
    pub q: BigUint,
    /// Coefficients in [0, q), lowest degree first, no trailing zeros.
    pub c: Vec<BigUint>,
}

impl FpPoly {
    pub fn new(q: &BigUint, coeffs: Vec<BigUint>) -> FpPoly {
        let mut c: Vec<BigUint> = coeffs.into_iter().map(|x| x % q).collect();
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        FpPoly { q: q.clone(), c }
    }

    pub fn zero(q: &BigUint) -> FpPoly {
        FpPoly {
            q: q.clone(),
            c: vec![],
        }
    }

    pub fn one(q: &BigUint) -> FpPoly {
        FpPoly::new(q, vec![BigUint::one()])
    }

    pub fn x(q: &BigUint) -> FpPoly {
        FpPoly::new(q, vec![BigUint::zero(), BigUint::one()])
    }

    pub fn constant(q: &BigUint, c: BigUint) -> FpPoly {
        FpPoly::new(q, vec![c])
    }

    pub fn from_bigints(q: &BigUint, coeffs: &[BigInt]) -> FpPoly {
        let qi = BigInt::from(q.clone());
        FpPoly::new(
            q,
            coeffs
                .iter()
                .map(|c| c.mod_floor(&qi).magnitude().clone())
                .collect(),
        )
    }

    pub fn degree(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn coeff(&self, k: usize) -> BigUint {
        self.c.get(k).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn leading(&self) -> BigUint {
        self.c.last().cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.c.last().is_some_and(|x| x.is_one())
    }

    fn same_field(&self, rhs: &FpPoly) {
        assert_eq!(self.q, rhs.q, "mixed moduli");
    }

    pub fn add(&self, rhs: &FpPoly) -> FpPoly {
        self.same_field(rhs);
        let n = self.c.len().max(rhs.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push((self.coeff(i) + rhs.coeff(i)) % &self.q);
        }
        FpPoly::new(&self.q, out)
    }

    pub fn neg(&self) -> FpPoly {
        let out = self
            .c
            .iter()
            .map(|x| {
                if x.is_zero() {
                    BigUint::zero()
                } else {
                    &self.q - x
                }
            })
            .collect();
        FpPoly::new(&self.q, out)
    }

    pub fn sub(&self, rhs: &FpPoly) -> FpPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &FpPoly) -> FpPoly {
        self.same_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero(&self.q);
        }
        let mut out = vec![BigUint::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = (&out[i + j] + a * b) % &self.q;
                }
            }
        }
        FpPoly::new(&self.q, out)
    }

    pub fn scale(&self, s: &BigUint) -> FpPoly {
        FpPoly::new(&self.q, self.c.iter().map(|x| x * s).collect())
    }

    pub fn monic(&self) -> FpPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(&inv_mod(&self.leading(), &self.q))
    }

    pub fn divmod(&self, rhs: &FpPoly) -> (FpPoly, FpPoly) {
        self.same_field(rhs);
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.degree() < rhs.degree() {
            return (FpPoly::zero(&self.q), self.clone());
        }
        let lead_inv = inv_mod(&rhs.leading(), &self.q);
        let mut rem = self.c.clone();
        let dq = (self.degree() - rhs.degree()) as usize;
        let mut quot = vec![BigUint::zero(); dq + 1];
        for k in (0..=dq).rev() {
            let top = &rem[k + rhs.c.len() - 1];
            if top.is_zero() {
                continue;
            }
            let f = (top * &lead_inv) % &self.q;
            for (j, b) in rhs.c.iter().enumerate() {
                let sub = (&f * b) % &self.q;
                let cur = &rem[k + j];
                rem[k + j] = ((cur + &self.q) - sub) % &self.q;
            }
            quot[k] = f;
        }
        (FpPoly::new(&self.q, quot), FpPoly::new(&self.q, rem))
    }

    pub fn rem(&self, rhs: &FpPoly) -> FpPoly {
        self.divmod(rhs).1
    }

    pub fn gcd(&self, rhs: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> FpPoly {
        if self.c.len() <= 1 {
            return FpPoly::zero(&self.q);
        }
        FpPoly::new(
            &self.q,
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigUint::from(i + 1))
                .collect(),
        )
    }

    /// self^e mod m.
    pub fn pow_mod(&self, e: &BigUint, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut acc = FpPoly::one(&self.q);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
            if i + 1 < bits {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn eval(&self, x: &BigUint) -> BigUint {
        let mut acc = BigUint::zero();
        for c in self.c.iter().rev() {
            acc = (acc * x + c) % &self.q;
        }
        acc
    }

    /// Canonical ordering: by degree, then coefficients from the top.
    fn cmp_canonical(&self, rhs: &FpPoly) -> std::cmp::Ordering {
        self.degree()
            .cmp(&rhs.degree())
            .then_with(|| {
                for i in (0..self.c.len()).rev() {
                    let o = self.coeff(i).cmp(&rhs.coeff(i));
                    if o != std::cmp::Ordering::Equal {
                        return o;
                    }
                }
                std::cmp::Ordering::Equal
            })
    }
}

/// Squarefree decomposition over F_q: returns (g_i, e_i) with distinct
/// squarefree g_i and input = prod g_i^(e_i) up to the leading unit.
fn squarefree_decompose(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let q = f.q.clone();
    let f = f.monic();
    if f.is_constant() {
        return vec![];
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = g(x^p); over the prime field, g has the same coefficients.
        let pu: usize = (&q)
            .try_into()
            .expect("characteristic too large for x^p collapse");
        let mut g = Vec::new();
        let mut i = 0;
        while i < f.c.len() {
            g.push(f.coeff(i));
            i += pu;
        }
        let inner = FpPoly::new(&q, g);
        return squarefree_decompose(&inner)
            .into_iter()
            .map(|(h, e)| (h, e * pu as u32))
            .collect();
    }
    let mut out: Vec<(FpPoly, u32)> = Vec::new();
    let mut c = f.gcd(&deriv);
    let mut w = f.divmod(&c).0;
    let mut i = 1u32;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let fac = w.divmod(&y).0;
        if !fac.is_constant() {
            out.push((fac.monic(), i));
        }
        w = y.clone();
        c = c.divmod(&y).0;
        i += 1;
    }
    if !c.is_constant() {
        // Remaining part is a p-th power.
        for (h, e) in squarefree_decompose(&c) {
            out.push((h, e));
        }
    }
    out
}

/// Factor a squarefree monic polynomial into distinct-degree buckets:
/// returns (product of irreducible factors of degree d, d).
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let q = f.q.clone();
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = FpPoly::x(&q);
    let mut h = x.clone(); // x^(q^d) mod rest, maintained incrementally
    let mut d = 0u32;
    while rest.degree() > 0 {
        d += 1;
        if (rest.degree() as u32) < 2 * d {
            // Whatever is left is irreducible.
            out.push((rest.clone(), rest.degree() as u32));
            break;
        }
        h = h.pow_mod(&q, &rest);
        let g = h.sub(&x).gcd(&rest);
        if !g.is_constant() {
            out.push((g.clone(), d));
            rest = rest.divmod(&g).0;
            h = h.rem(&rest);
        }
    }
    out
}

/// Split a product of distinct irreducible degree-d factors (odd q).
fn equal_degree(f: &FpPoly, d: u32, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let q = f.q.clone();
    if f.degree() as u32 == d {
        return vec![f.monic()];
    }
    let n = f.degree() as usize;
    let two = BigUint::from(2u32);
    loop {
        // Random polynomial of degree < n.
        let coeffs: Vec<BigUint> = (0..n)
            .map(|_| {
                let r: u64 = rng.gen();
                BigUint::from(r) % &q
            })
            .collect();
        let a = FpPoly::new(&q, coeffs);
        if a.is_constant() {
            continue;
        }
        let g0 = a.gcd(f);
        if !g0.is_constant() && g0.degree() < f.degree() {
            let rest = f.divmod(&g0).0;
            let mut out = equal_degree(&g0, d, rng);
            out.extend(equal_degree(&rest, d, rng));
            return out;
        }
        // a^((q^d - 1)/2) is +-1 in each residue field component.
        let e = (q.pow(d) - BigUint::one()) / &two;
        let h = a.pow_mod(&e, f).sub(&FpPoly::one(&q));
        let g = h.gcd(f);
        if !g.is_constant() && g.degree() < f.degree() {
            let rest = f.divmod(&g).0;
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&rest, d, rng));
            return out;
        }
    }
}

/// Equal-degree splitting over F_2 via the trace map of F_{2^d}.
fn equal_degree_f2(f: &FpPoly, d: u32, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let q = f.q.clone();
    if f.degree() as u32 == d {
        return vec![f.monic()];
    }
    let n = f.degree() as usize;
    loop {
        let coeffs: Vec<BigUint> = (0..n)
            .map(|_| BigUint::from(rng.gen::<u64>() & 1))
            .collect();
        let a = FpPoly::new(&q, coeffs);
        if a.is_zero() {
            continue;
        }
        // T(a) = a + a^2 + a^4 + ... + a^(2^(d-1)) lies in F_2 componentwise.
        let mut t = a.clone();
        let mut acc = a.clone();
        for _ in 1..d {
            t = t.mul(&t).rem(f);
            acc = acc.add(&t);
        }
        let g = acc.gcd(f);
        if !g.is_constant() && g.degree() < f.degree() {
            let rest = f.divmod(&g).0;
            let mut out = equal_degree_f2(&g, d, rng);
            out.extend(equal_degree_f2(&rest, d, rng));
            return out;
        }
    }
}

/// Full factorization of a nonzero polynomial over F_q into monic
/// irreducibles with multiplicities, canonically sorted.
pub fn factor_fp(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    assert!(!f.is_zero());
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f243);
    let mut out: Vec<(FpPoly, u32)> = Vec::new();
    for (g, e) in squarefree_decompose(f) {
        for (bucket, d) in distinct_degree(&g) {
            let parts = if f.q == BigUint::from(2u32) {
                equal_degree_f2(&bucket, d, &mut rng)
            } else {
                equal_degree(&bucket, d, &mut rng)
            };
            for p in parts {
                out.push((p, e));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp_canonical(&b.0));
    out
}

/// Factor a rational polynomial modulo a prime q.
///
/// Denominators must be coprime to q; q must be prime.
pub fn poly_factor_mod_p(p: &QPoly, q: &BigUint) -> Result<Vec<(FpPoly, u32)>> {
    if !is_prime(q) {
        return Err(Error::domain(format!("{q} is not prime")));
    }
    if p.is_zero() {
        return Err(Error::domain("cannot factor the zero polynomial"));
    }
    let qi = BigInt::from(q.clone());
    let mut coeffs = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        if c.denom().mod_floor(&qi).is_zero() {
            return Err(Error::domain(format!(
                "denominator of coefficient {c} is divisible by {q}"
            )));
        }
        let num = c.numer().mod_floor(&qi).magnitude().clone();
        let den_inv = inv_mod(&c.denom().mod_floor(&qi).magnitude().clone(), q);
        coeffs.push((num * den_inv) % q);
    }
    let fp = FpPoly::new(q, coeffs);
    if fp.is_zero() {
        return Err(Error::domain(format!(
            "polynomial vanishes identically mod {q}"
        )));
    }
    if fp.is_constant() {
        return Ok(vec![]);
    }
    Ok(factor_fp(&fp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::QPoly;

    fn q(n: u32) -> BigUint {
        BigUint::from(n)
    }

    fn fp(qq: u32, coeffs: &[u32]) -> FpPoly {
        FpPoly::new(&q(qq), coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    fn mul_back(q: &BigUint, factors: &[(FpPoly, u32)]) -> FpPoly {
        let mut acc = FpPoly::one(q);
        for (f, e) in factors {
            for _ in 0..*e {
                acc = acc.mul(f);
            }
        }
        acc
    }

    #[test]
    fn golden_poly_mod_5_is_a_square() {
        // Oracle: (x+2)^2 = x^2 + 4x + 4 = x^2 - x - 1 mod 5.
        let sq = fp(5, &[2, 1]).mul(&fp(5, &[2, 1]));
        assert_eq!(sq, fp(5, &[4, 4, 1]));
        let f = QPoly::from_int_coeffs(&[-1, -1, 1]);
        let fac = poly_factor_mod_p(&f, &q(5)).unwrap();
        assert_eq!(fac.len(), 1);
        assert_eq!(fac[0].1, 2);
        assert_eq!(fac[0].0, fp(5, &[2, 1]));
    }

    #[test]
    fn golden_poly_mod_2_is_irreducible() {
        // No root in F_2: 0^2-0-1 = 1, 1^2-1-1 = 1.
        let f = QPoly::from_int_coeffs(&[-1, -1, 1]);
        let fac = poly_factor_mod_p(&f, &q(2)).unwrap();
        assert_eq!(fac.len(), 1);
        assert_eq!(fac[0].1, 1);
        assert_eq!(fac[0].0, fp(2, &[1, 1, 1]));
    }

    #[test]
    fn golden_poly_mod_11_splits() {
        // Oracle: 4^2-4-1 = 11 = 0 mod 11 and 8^2-8-1 = 55 = 0 mod 11.
        let f = QPoly::from_int_coeffs(&[-1, -1, 1]);
        let fac = poly_factor_mod_p(&f, &q(11)).unwrap();
        assert_eq!(fac.len(), 2);
        let roots: Vec<u32> = fac
            .iter()
            .map(|(g, _)| {
                assert_eq!(g.degree(), 1);
                // root is -c0
                let c0 = g.coeff(0);
                ((BigUint::from(11u32) - c0) % BigUint::from(11u32))
                    .try_into()
                    .unwrap()
            })
            .collect();
        let mut roots = roots;
        roots.sort();
        assert_eq!(roots, vec![4, 8]);
    }

    #[test]
    fn rejects_non_prime_modulus() {
        let f = QPoly::from_int_coeffs(&[1, 1]);
        assert!(poly_factor_mod_p(&f, &q(6)).is_err());
    }

    #[test]
    fn degree_preserved_on_random_inputs() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for qq in [2u32, 3, 5, 13, 101] {
            for _ in 0..12 {
                let deg = rng.gen_range(1..=8);
                let mut coeffs: Vec<u32> = (0..=deg).map(|_| rng.gen_range(0..qq)).collect();
                if coeffs[deg] % qq == 0 {
                    coeffs[deg] = 1;
                }
                let f = fp(qq, &coeffs);
                let fac = factor_fp(&f);
                let back = mul_back(&f.q, &fac).scale(&f.leading());
                assert_eq!(back, f.monic().scale(&f.leading()), "mod {qq}");
                let total: i64 = fac.iter().map(|(g, e)| g.degree() * *e as i64).sum();
                assert_eq!(total, f.degree());
            }
        }
    }

    #[test]
    fn factor_in_characteristic_two_with_multiplicity() {
        // (x^2+x+1)^2 * (x+1) over F_2
        let a = fp(2, &[1, 1, 1]);
        let f = a.mul(&a).mul(&fp(2, &[1, 1]));
        let fac = factor_fp(&f);
        assert_eq!(fac.len(), 2);
        assert_eq!(mul_back(&q(2), &fac), f);
    }
}
