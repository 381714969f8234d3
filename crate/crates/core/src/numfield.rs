//! Number fields Q[x]/(h) with exact element arithmetic and certified
//! embeddings.
//!
//! The generator's minimal polynomial h is monic with integer coefficients,
//! so every element is a rational polynomial in an algebraic integer. The d
//! embeddings are the isolated roots of h; one of them is designated as the
//! identity embedding. Trager's norm method factors polynomials over the
//! field using only resultants and rational factorization.

use crate::error::{Error, Result};
use crate::factor::poly_factor_rationals;
use crate::interval::{ComplexBox, RealInterval};
use crate::poly::{rat_i64, resultant_y_bivariate, QPoly};
use crate::roots::{isolate_roots, IsolatedRoots};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::sync::{Arc, RwLock};

pub type Field = Arc<NumberField>;

pub struct NumberField {
    h: QPoly,
    disc_h: BigInt,
    id_index: usize,
    roots: RwLock<IsolatedRoots>,
}

impl std::fmt::Debug for NumberField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "NumberField(h = {:?}, d = {})", self.h, self.degree())
    }
}

impl NumberField {
    /// Build the field Q[x]/(h); h must be monic, irreducible, with integer
    /// coefficients. `id_index` designates the identity embedding.
    pub fn with_id(h: QPoly, id_index: usize) -> Result<Field> {
        let (_, prim) = h.primitive_z();
        if !h.is_monic() || prim.len() != h.coeffs().len() {
            return Err(Error::internal("field generator must be monic integral"));
        }
        let disc = h.discriminant()?;
        debug_assert!(disc.denom().is_one());
        let roots = isolate_roots(&h)?;
        if id_index >= roots.count() {
            return Err(Error::internal("identity embedding out of range"));
        }
        Ok(Arc::new(NumberField {
            h,
            disc_h: disc.numer().clone(),
            id_index,
            roots: RwLock::new(roots),
        }))
    }

    /// The rational field, presented with generator 1 (h = x - 1).
    pub fn rational() -> Field {
        NumberField::with_id(QPoly::from_int_coeffs(&[-1, 1]), 0)
            .expect("rational field always builds")
    }

    pub fn min_poly(&self) -> &QPoly {
        &self.h
    }

    pub fn degree(&self) -> usize {
        self.h.degree() as usize
    }

    /// Discriminant of the generator polynomial (a multiple of the field
    /// discriminant, used as the |Delta_K| upper bound everywhere).
    pub fn disc_h(&self) -> &BigInt {
        &self.disc_h
    }

    pub fn real_embeddings(&self) -> usize {
        self.roots.read().unwrap().real_count()
    }

    pub fn complex_pairs(&self) -> usize {
        self.roots.read().unwrap().complex_pair_count()
    }

    pub fn id_index(&self) -> usize {
        self.id_index
    }

    pub fn conj_embedding(&self, k: usize) -> usize {
        self.roots.read().unwrap().conj_index(k)
    }

    pub fn embedding_is_real(&self, k: usize) -> bool {
        self.roots.read().unwrap().is_real(k)
    }

    /// Enclosure of the k-th root of h at window width <= 2^-prec.
    pub fn embedding_window(&self, k: usize, prec: u32) -> Result<ComplexBox> {
        {
            let r = self.roots.read().unwrap();
            let w = r.window(k, prec + 8);
            if width_ok(&w, prec) {
                return Ok(w);
            }
        }
        let mut w = self.roots.write().unwrap();
        w.refine(k, -(prec as i64))?;
        Ok(w.window(k, prec + 8))
    }

    pub fn same_as(&self, other: &NumberField) -> bool {
        std::ptr::eq(self, other) || (self.h == other.h && self.id_index == other.id_index)
    }

    // ------------------------------------------------------------ elements

    pub fn elem(self: &Arc<Self>, rep: QPoly) -> FieldElem {
        let rep = rep.rem(&self.h);
        FieldElem {
            field: Arc::clone(self),
            rep,
        }
    }

    pub fn zero(self: &Arc<Self>) -> FieldElem {
        self.elem(QPoly::zero())
    }

    pub fn one(self: &Arc<Self>) -> FieldElem {
        self.elem(QPoly::one())
    }

    pub fn from_rational(self: &Arc<Self>, c: BigRational) -> FieldElem {
        self.elem(QPoly::constant(c))
    }

    pub fn generator(self: &Arc<Self>) -> FieldElem {
        self.elem(QPoly::x())
    }
}

fn width_ok(w: &ComplexBox, prec: u32) -> bool {
    w.width().msb_exp().map_or(true, |e| e <= -(prec as i64))
}

#[derive(Clone)]
pub struct FieldElem {
    pub field: Field,
    rep: QPoly,
}

impl std::fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FieldElem({:?})", self.rep)
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_as(&other.field) && self.rep == other.rep
    }
}
impl Eq for FieldElem {}

impl FieldElem {
    pub fn rep(&self) -> &QPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep.is_one()
    }

    /// The rational value when the element is a constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.rep.is_constant() {
            Some(self.rep.coeff(0))
        } else {
            None
        }
    }

    fn assert_same(&self, rhs: &FieldElem) {
        assert!(self.field.same_as(&rhs.field), "elements of different fields");
    }

    pub fn add(&self, rhs: &FieldElem) -> FieldElem {
        self.assert_same(rhs);
        self.field.elem(self.rep.add(&rhs.rep))
    }

    pub fn sub(&self, rhs: &FieldElem) -> FieldElem {
        self.assert_same(rhs);
        self.field.elem(self.rep.sub(&rhs.rep))
    }

    pub fn neg(&self) -> FieldElem {
        self.field.elem(self.rep.neg())
    }

    pub fn mul(&self, rhs: &FieldElem) -> FieldElem {
        self.assert_same(rhs);
        self.field.elem(self.rep.mul(&rhs.rep))
    }

    pub fn scale(&self, c: &BigRational) -> FieldElem {
        self.field.elem(self.rep.scale(c))
    }

    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::domain("division by zero in the field"));
        }
        // Extended euclid: s * rep + t * h = 1.
        let h = self.field.min_poly().clone();
        let (mut r0, mut r1) = (h, self.rep.clone());
        let (mut s0, mut s1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        debug_assert!(r0.is_constant() && !r0.is_zero());
        let c = r0.coeff(0).recip();
        Ok(self.field.elem(s0.scale(&c)))
    }

    pub fn div(&self, rhs: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn pow(&self, mut e: u64) -> FieldElem {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn pow_biguint(&self, e: &BigUint) -> FieldElem {
        let mut acc = self.field.one();
        let mut base = self.clone();
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base);
            }
            if i + 1 < bits {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Field norm N(x) = prod of all embeddings; exact rational.
    pub fn norm(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        // h monic: Res_y(h(y), rep(y)) = prod rep(theta_i).
        self.field.min_poly().resultant(&self.rep)
    }

    /// Minimal polynomial over Q, monic, via linear algebra on powers.
    pub fn min_poly(&self) -> QPoly {
        let d = self.field.degree();
        // Rows: reduced echelon forms of 1, x, x^2, ... with bookkeeping of
        // the combination that produced them.
        let mut pivots: Vec<(usize, Vec<BigRational>, Vec<BigRational>)> = Vec::new();
        let mut power = self.field.one();
        for k in 0..=d {
            let mut row: Vec<BigRational> = (0..d).map(|i| power.rep.coeff(i)).collect();
            let mut combo = vec![BigRational::zero(); k + 1];
            combo[k] = BigRational::one();
            for (pc, prow, pcombo) in &pivots {
                if !row[*pc].is_zero() {
                    let f = row[*pc].clone();
                    for i in 0..d {
                        let t = &prow[i] * &f;
                        row[i] -= t;
                    }
                    for (i, c) in pcombo.iter().enumerate() {
                        let t = c * &f;
                        combo[i] -= t;
                    }
                }
            }
            if let Some(pc) = (0..d).find(|&i| !row[i].is_zero()) {
                let inv = row[pc].recip();
                for x in row.iter_mut() {
                    *x *= &inv;
                }
                for x in combo.iter_mut() {
                    *x *= &inv;
                }
                pivots.push((pc, row, combo));
                power = power.mul(self);
            } else {
                // Dependency found: min poly coefficients are the combo.
                return QPoly::new(combo).monic();
            }
        }
        unreachable!("powers 1..d+1 of a field element are always dependent");
    }

    /// True iff the element is an algebraic integer (monic integral minimal
    /// polynomial).
    pub fn is_algebraic_integer(&self) -> bool {
        let mp = self.min_poly();
        mp.coeffs().iter().all(|c| c.denom().is_one())
    }

    /// Enclosure of the image under embedding k.
    pub fn embed(&self, k: usize, prec: u32) -> Result<ComplexBox> {
        let w = self.field.embedding_window(k, prec)?;
        Ok(self.rep.eval_box(&w, prec + 8))
    }

    /// Enclosure of the image under the identity embedding.
    pub fn embed_id(&self, prec: u32) -> Result<ComplexBox> {
        self.embed(self.field.id_index(), prec)
    }

    /// Enclosure of |image|^2 under embedding k.
    pub fn abs_sq_embed(&self, k: usize, prec: u32) -> Result<RealInterval> {
        Ok(self.embed(k, prec)?.norm_sq(prec + 4))
    }
}

// ----------------------------------------------------------- K[x] machinery

/// Dense polynomial with coefficients in a number field.
#[derive(Clone, Debug)]
pub struct KPoly {
    pub field: Field,
    pub coeffs: Vec<FieldElem>,
}

impl PartialEq for KPoly {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_as(&other.field) && self.coeffs == other.coeffs
    }
}

impl KPoly {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElem>) -> KPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        KPoly {
            field: Arc::clone(field),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> KPoly {
        KPoly::new(field, vec![])
    }

    pub fn one(field: &Field) -> KPoly {
        let e = field.one();
        KPoly::new(field, vec![e])
    }

    pub fn from_qpoly(field: &Field, p: &QPoly) -> KPoly {
        KPoly::new(
            field,
            p.coeffs()
                .iter()
                .map(|c| field.from_rational(c.clone()))
                .collect(),
        )
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> FieldElem {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn leading(&self) -> FieldElem {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, rhs: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        KPoly::new(
            &self.field,
            (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect(),
        )
    }

    pub fn sub(&self, rhs: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        KPoly::new(
            &self.field,
            (0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect(),
        )
    }

    pub fn mul(&self, rhs: &KPoly) -> KPoly {
        if self.is_zero() || rhs.is_zero() {
            return KPoly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        KPoly::new(&self.field, out)
    }

    pub fn scale(&self, c: &FieldElem) -> KPoly {
        KPoly::new(&self.field, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn monic(&self) -> Result<KPoly> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let inv = self.leading().inv()?;
        Ok(self.scale(&inv))
    }

    pub fn divmod(&self, rhs: &KPoly) -> Result<(KPoly, KPoly)> {
        assert!(!rhs.is_zero());
        if self.degree() < rhs.degree() {
            return Ok((KPoly::zero(&self.field), self.clone()));
        }
        let lead_inv = rhs.leading().inv()?;
        let mut rem = self.coeffs.clone();
        let dq = (self.degree() - rhs.degree()) as usize;
        let mut quot = vec![self.field.zero(); dq + 1];
        for k in (0..=dq).rev() {
            let c = rem[k + rhs.coeffs.len() - 1].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = rem[k + j].sub(&c.mul(b));
                rem[k + j] = t;
            }
            quot[k] = c;
        }
        Ok((KPoly::new(&self.field, quot), KPoly::new(&self.field, rem)))
    }

    pub fn rem(&self, rhs: &KPoly) -> Result<KPoly> {
        Ok(self.divmod(rhs)?.1)
    }

    pub fn exact_div(&self, rhs: &KPoly) -> Result<KPoly> {
        let (q, r) = self.divmod(rhs)?;
        if !r.is_zero() {
            return Err(Error::internal("exact division with nonzero remainder"));
        }
        Ok(q)
    }

    pub fn gcd(&self, rhs: &KPoly) -> Result<KPoly> {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }

    pub fn derivative(&self) -> KPoly {
        if self.coeffs.len() <= 1 {
            return KPoly::zero(&self.field);
        }
        KPoly::new(
            &self.field,
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&rat_i64(i as i64 + 1)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Evaluate the polynomial image under embedding k on a complex box.
    pub fn eval_box_under_embedding(
        &self,
        k: usize,
        x: &ComplexBox,
        prec: u32,
    ) -> Result<ComplexBox> {
        let mut acc = ComplexBox::zero();
        for c in self.coeffs.iter().rev() {
            let cb = c.embed(k, prec)?;
            acc = acc.mul(x, prec).add(&cb, prec);
        }
        Ok(acc)
    }

    /// All rational-polynomial coefficients as polynomials in the generator.
    pub fn coeff_reps(&self) -> Vec<QPoly> {
        self.coeffs.iter().map(|c| c.rep().clone()).collect()
    }
}

/// Factor a squarefree monic polynomial over the field into monic
/// irreducible factors (Trager's method).
pub fn factor_over_field(f: &KPoly) -> Result<Vec<KPoly>> {
    let field = &f.field;
    let d = field.degree();
    assert!(f.degree() >= 1);
    if f.degree() == 1 {
        return Ok(vec![f.monic()?]);
    }
    if d == 1 {
        // Rational field: delegate.
        let q = QPoly::new(
            f.coeffs
                .iter()
                .map(|c| c.as_rational().expect("degree-1 field elements are rational"))
                .collect(),
        );
        let fac = poly_factor_rationals(&q)?;
        return fac
            .factors
            .into_iter()
            .map(|(g, e)| {
                debug_assert_eq!(e, 1, "squarefree input");
                KPoly::from_qpoly(field, &g).monic()
            })
            .collect();
    }

    let h = field.min_poly();
    let n = f.degree();
    if (d as i64) * n > crate::factor::FACTOR_DEGREE_CAP {
        return Err(Error::capacity(format!(
            "norm degree {} exceeds factorization cap {}",
            d as i64 * n,
            crate::factor::FACTOR_DEGREE_CAP
        )));
    }

    let reps = f.coeff_reps();
    for s in 0..40i64 {
        let norm = trager_norm(h, &reps, s);
        if !norm.is_squarefree() {
            continue;
        }
        let fac = poly_factor_rationals(&norm)?;
        if fac.factors.len() == 1 {
            return Ok(vec![f.monic()?]);
        }
        let shift = KPoly::new(
            field,
            vec![field.generator().scale(&rat_i64(s)), field.one()],
        );
        let mut out = Vec::new();
        for (g, _) in fac.factors {
            // g(x + s*theta) over K, then gcd with f.
            let mut composed = KPoly::zero(field);
            for c in g.coeffs().iter().rev() {
                composed = composed
                    .mul(&shift)
                    .add(&KPoly::new(field, vec![field.from_rational(c.clone())]));
            }
            let part = f.gcd(&composed)?;
            if part.degree() >= 1 {
                out.push(part.monic()?);
            }
        }
        let total: i64 = out.iter().map(|g| g.degree()).sum();
        if total != f.degree() {
            return Err(Error::internal(
                "norm factorization did not cover the input degree",
            ));
        }
        return Ok(out);
    }
    Err(Error::internal(
        "no squarefree norm found within the shift budget",
    ))
}

/// Norm of f(x - s*theta): Res_y(h(y), fhat(x - s y, y)).
///
/// h is monic, so Res_y(h, g) = prod_i g(theta_i) at every sample point,
/// independent of any y-degree drop of the specialized polynomial; the norm
/// is recovered by plain interpolation.
fn trager_norm(h: &QPoly, coeff_reps: &[QPoly], s: i64) -> QPoly {
    debug_assert!(h.is_monic());
    let n = coeff_reps.len() - 1;
    let dh = h.degree();
    let target = (dh * n as i64) as usize + 1;
    let mut points = Vec::with_capacity(target);
    let mut t = 0i64;
    while points.len() < target {
        let x0 = rat_i64(t);
        // (x0 - s y) as a poly in y
        let lin = QPoly::new(vec![x0.clone(), rat_i64(-s)]);
        let mut g = QPoly::zero();
        let mut pow = QPoly::one();
        for rep in coeff_reps {
            g = g.add(&rep.mul(&pow));
            pow = pow.mul(&lin);
        }
        t = if t >= 0 { -(t + 1) } else { -t };
        points.push((x0, h.resultant(&g)));
    }
    crate::poly::interpolate(&points)
}

/// Bivariate-resultant helper exposed for the splitting construction:
/// Res_y(h(y), f(x - k y)) for f in Q[x].
pub fn resultant_shifted(h: &QPoly, f: &QPoly, k: i64) -> QPoly {
    // f(x - k y) as y-coefficients: sum_j f_j (x - k y)^j.
    // Expand via binomials into polynomials in x per power of y.
    let n = f.degree().max(0) as usize;
    let mut ycoeffs: Vec<QPoly> = vec![QPoly::zero(); n + 1];
    // (x - k y)^j = sum_m C(j, m) x^(j-m) (-k)^m y^m
    let mut binom = vec![BigRational::one()];
    for j in 0..=n {
        if j > 0 {
            let mut next = vec![BigRational::one()];
            for m in 1..j {
                next.push(&binom[m - 1] + &binom[m]);
            }
            next.push(BigRational::one());
            binom = next;
        }
        let fj = f.coeff(j);
        if fj.is_zero() {
            continue;
        }
        let mut neg_k_pow = BigRational::one();
        for m in 0..=j {
            let coeff = &fj * &binom[m] * &neg_k_pow;
            ycoeffs[m] = ycoeffs[m].add(&QPoly::monomial(coeff, j - m));
            neg_k_pow *= rat_i64(-k);
        }
    }
    resultant_y_bivariate(h, &ycoeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden_field() -> Field {
        // Q(phi), h = x^2 - x - 1; embedding 1 (the larger real root) as id.
        NumberField::with_id(QPoly::from_int_coeffs(&[-1, -1, 1]), 1).unwrap()
    }

    #[test]
    fn arithmetic_in_golden_field() {
        let f = golden_field();
        let phi = f.generator();
        // phi^2 = phi + 1
        assert_eq!(phi.mul(&phi), phi.add(&f.one()));
        // phi * (phi - 1) = 1, so inv(phi) = phi - 1
        let inv = phi.inv().unwrap();
        assert_eq!(inv, phi.sub(&f.one()));
        assert!(phi.mul(&inv).is_one());
    }

    #[test]
    fn norms_in_golden_field() {
        let f = golden_field();
        let phi = f.generator();
        assert_eq!(phi.norm(), rat_i64(-1));
        assert_eq!(f.from_rational(rat_i64(2)).norm(), rat_i64(4));
        // N(a + b phi) = a^2 + ab - b^2
        let e = f.elem(QPoly::from_int_coeffs(&[3, 2]));
        assert_eq!(e.norm(), rat_i64(9 + 6 - 4));
    }

    #[test]
    fn min_poly_of_generator_and_rationals() {
        let f = golden_field();
        assert_eq!(
            f.generator().min_poly(),
            QPoly::from_int_coeffs(&[-1, -1, 1])
        );
        let half = f.from_rational(BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(half.min_poly(), QPoly::new(vec![
            BigRational::new(BigInt::from(-1), BigInt::from(2)),
            BigRational::one(),
        ]));
    }

    #[test]
    fn algebraic_integer_detection() {
        let f = golden_field();
        assert!(f.generator().is_algebraic_integer());
        assert!(!f
            .from_rational(BigRational::new(BigInt::from(1), BigInt::from(2)))
            .is_algebraic_integer());
        // 1/sqrt5 = (2 phi - 1)/5 has min poly x^2 - 1/5.
        let inv_sqrt5 = f
            .elem(QPoly::from_int_coeffs(&[-1, 2]))
            .scale(&BigRational::new(BigInt::from(1), BigInt::from(5)));
        assert_eq!(
            inv_sqrt5.min_poly(),
            QPoly::new(vec![
                BigRational::new(BigInt::from(-1), BigInt::from(5)),
                BigRational::zero(),
                BigRational::one()
            ])
        );
        assert!(!inv_sqrt5.is_algebraic_integer());
        // sqrt5 = 2 phi - 1 is integral.
        assert!(f.elem(QPoly::from_int_coeffs(&[-1, 2])).is_algebraic_integer());
    }

    #[test]
    fn integer_sums_and_products_stay_integral() {
        let f = golden_field();
        let sqrt5 = f.elem(QPoly::from_int_coeffs(&[-1, 2]));
        let phi = f.generator();
        for (a, b) in [(&sqrt5, &phi)] {
            assert!(a.add(b).is_algebraic_integer());
            assert!(a.mul(b).is_algebraic_integer());
        }
    }

    #[test]
    fn embeddings_reproduce_conjugates() {
        let f = golden_field();
        let phi = f.generator();
        // id embedding (index 1) is the positive root.
        let id = phi.embed_id(60).unwrap();
        assert!(id.re.lo > crate::dyadic::Dyadic::from_i64(1));
        let other = phi.embed(0, 60).unwrap();
        assert!(other.re.hi < crate::dyadic::Dyadic::zero());
        // Sum of conjugates = trace = 1.
        let sum = id.re.add(&other.re, 64);
        assert!(sum.contains_rational(&rat_i64(1)));
    }

    #[test]
    fn trager_splits_golden_poly_over_its_field() {
        let f = golden_field();
        // x^2 - x - 1 factors as (x - phi)(x + phi - 1) over Q(phi).
        let fx = KPoly::from_qpoly(&f, &QPoly::from_int_coeffs(&[-1, -1, 1]));
        let factors = factor_over_field(&fx).unwrap();
        assert_eq!(factors.len(), 2);
        for g in &factors {
            assert_eq!(g.degree(), 1);
            // root is -c0; it must be a root of x^2-x-1 in the field.
            let root = g.coeff(0).neg();
            let val = root.mul(&root).sub(&root).sub(&f.one());
            assert!(val.is_zero());
        }
    }

    #[test]
    fn trager_keeps_irreducible_quadratic() {
        let f = golden_field();
        // x^2 + 1 stays irreducible over Q(phi) (real field).
        let fx = KPoly::from_qpoly(&f, &QPoly::from_int_coeffs(&[1, 0, 1]));
        let factors = factor_over_field(&fx).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].degree(), 2);
    }

    #[test]
    fn kpoly_gcd_and_division() {
        let f = golden_field();
        let phi = f.generator();
        // (x - phi)(x - 2)
        let a = KPoly::new(&f, vec![phi.neg(), f.one()]);
        let b = KPoly::new(&f, vec![f.from_rational(rat_i64(-2)), f.one()]);
        let prod = a.mul(&b);
        let g = prod.gcd(&a).unwrap();
        assert_eq!(g.degree(), 1);
        assert_eq!(g.coeff(0), phi.neg());
        let (q, r) = prod.divmod(&a).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, b);
    }

    #[test]
    fn resultant_shifted_matches_composite_roots() {
        // h = x^2 - 2 (roots +-sqrt2), f = x^2 - 3 (roots +-sqrt3), k = 1:
        // resultant has roots sqrt3 + sqrt2 etc: x^4 - 10x^2 + 1.
        let h = QPoly::from_int_coeffs(&[-2, 0, 1]);
        let f = QPoly::from_int_coeffs(&[-3, 0, 1]);
        let r = resultant_shifted(&h, &f, 1);
        assert_eq!(r.monic(), QPoly::from_int_coeffs(&[1, 0, -10, 0, 1]));
    }
}
