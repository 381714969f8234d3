//! Splitting field construction and the root-level predicates built on it:
//! degeneracy (root-of-unity ratios) and dominant-root identification.
//!
//! The field is grown by repeated primitive-element adjunction: to adjoin a
//! root beta of an irreducible rational factor f to K = Q(theta), pick a
//! small k with M(x) = Res_y(h(y), f(x - k y)) squarefree, so gamma =
//! beta + k theta generates Q(theta, beta); the irreducible factor of M
//! vanishing at gamma (certified by box separation) is the new generator
//! polynomial. The identity embedding is threaded through every adjunction,
//! so exact images and numeric windows never drift apart.

use crate::error::{Error, Result};
use crate::factor::poly_factor_rationals;
use crate::interval::{ComplexBox, RealInterval};
use crate::numfield::{factor_over_field, resultant_shifted, Field, FieldElem, KPoly, NumberField};
use crate::poly::QPoly;
use crate::roots::{isolate_roots, IsolatedRoots};
use num_rational::BigRational;
use num_traits::One;

/// Hard cap on the splitting field degree.
pub const SPLITTING_DEGREE_CAP: usize = 64;

/// A distinct characteristic root with its exact image in the splitting
/// field.
#[derive(Debug, Clone)]
pub struct CharRoot {
    pub image: FieldElem,
    pub multiplicity: u32,
    pub factor_index: usize,
    /// Index (into the root list) of the complex conjugate root; self for
    /// real roots.
    pub conj_index: usize,
    pub is_real: bool,
}

/// The splitting field of a characteristic polynomial together with exact
/// representations of every root.
#[derive(Debug)]
pub struct SplittingAnalysis {
    pub field: Field,
    pub char_poly: QPoly,
    pub factors: Vec<(QPoly, u32)>,
    pub roots: Vec<CharRoot>,
    /// Number of distinct roots.
    pub m: usize,
    /// Maximum multiplicity.
    pub max_multiplicity: u32,
}

#[derive(Debug, Clone)]
pub struct DegeneracyWitness {
    pub i: usize,
    pub j: usize,
    /// Order of the unity ratio.
    pub order: u64,
    pub ratio: FieldElem,
}

#[derive(Debug, Clone)]
pub struct DominantRoots {
    pub indices: Vec<usize>,
    pub unique: bool,
    /// |alpha_1|^2 as an exact field element.
    pub abs_sq: FieldElem,
}

impl SplittingAnalysis {
    /// Build the splitting field of a monic integral characteristic
    /// polynomial and express all roots in it.
    pub fn from_char_poly(char_poly: &QPoly) -> Result<SplittingAnalysis> {
        assert!(char_poly.is_monic());
        let fac = poly_factor_rationals(char_poly)?;
        let factors: Vec<(QPoly, u32)> = fac
            .factors
            .iter()
            .map(|(f, e)| (f.monic(), *e))
            .collect();
        let irreducibles: Vec<QPoly> = factors.iter().map(|(f, _)| f.clone()).collect();
        let (field, images) = build_splitting_field(&irreducibles)?;

        let mut roots = Vec::new();
        for (fi, (f, mult)) in factors.iter().enumerate() {
            let mut windows = isolate_roots(f)?;
            let order = match_images_to_windows(&mut windows, &images[fi])?;
            // order[w] = image index owning window w; emit in window order.
            let base = roots.len();
            for w in 0..windows.count() {
                let img = images[fi][order[w]].clone();
                roots.push(CharRoot {
                    image: img,
                    multiplicity: *mult,
                    factor_index: fi,
                    conj_index: base + windows.conj_index(w),
                    is_real: windows.is_real(w),
                });
            }
        }
        let m = roots.len();
        let max_multiplicity = factors.iter().map(|(_, e)| *e).max().unwrap_or(1);
        Ok(SplittingAnalysis {
            field,
            char_poly: char_poly.clone(),
            factors,
            roots,
            m,
            max_multiplicity,
        })
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    /// |alpha_i|^2 as an exact element (alpha times its conjugate).
    pub fn abs_sq(&self, i: usize) -> FieldElem {
        let conj = &self.roots[self.conj_of(i)].image;
        self.roots[i].image.mul(conj)
    }

    pub fn conj_of(&self, i: usize) -> usize {
        self.roots[i].conj_index
    }

    /// Certified sign of a real-valued field element.
    pub fn real_sign(&self, x: &FieldElem) -> Result<i32> {
        real_elem_sign(x)
    }

    /// Degeneracy test: is some ratio alpha_i / alpha_j a root of unity?
    pub fn degeneracy(&self) -> Result<Option<DegeneracyWitness>> {
        let d = self.degree();
        for i in 0..self.m {
            for j in (i + 1)..self.m {
                let eq = self.abs_sq(i) == self.abs_sq(j);
                if !eq {
                    // Certified modulus mismatch rules the pair out; the
                    // exact inequality needs no numeric work at all.
                    continue;
                }
                let ratio = self.roots[i].image.div(&self.roots[j].image)?;
                if let Some(order) = root_of_unity_order(&ratio, d)? {
                    return Ok(Some(DegeneracyWitness {
                        i,
                        j,
                        order,
                        ratio,
                    }));
                }
            }
        }
        Ok(None)
    }

    /// Indices of maximal-modulus roots and |alpha_1|^2; errors when the
    /// certified dominant modulus is <= 1.
    pub fn dominant_roots(&self) -> Result<DominantRoots> {
        assert!(self.m >= 1);
        let mut best = vec![0usize];
        for i in 1..self.m {
            let cmp = self.compare_abs(i, best[0])?;
            match cmp {
                std::cmp::Ordering::Greater => best = vec![i],
                std::cmp::Ordering::Equal => best.push(i),
                std::cmp::Ordering::Less => {}
            }
        }
        let abs_sq = self.abs_sq(best[0]);
        // |alpha_1| > 1 iff |alpha_1|^2 - 1 > 0, decided exactly.
        let one = self.field.one();
        let sign = real_elem_sign(&abs_sq.sub(&one))?;
        if sign <= 0 {
            return Err(Error::assumption(
                "dominant root has modulus <= 1; the growth bound requires |alpha_1| > 1",
            ));
        }
        Ok(DominantRoots {
            unique: best.len() == 1,
            indices: best,
            abs_sq,
        })
    }

    /// Enclosure of |alpha_1| of at most width 2^-prec, given dominant data.
    pub fn alpha1_abs(&self, dom: &DominantRoots, prec: u32) -> Result<RealInterval> {
        let mut p = prec + 16;
        loop {
            let b = dom.abs_sq.embed_id(p)?;
            // The value is real and nonnegative; the real part of the box
            // encloses it.
            let re = b.re.max(&RealInterval::zero());
            let r = re.sqrt(p);
            if r.width().msb_exp().map_or(true, |e| e <= -(prec as i64)) {
                return Ok(r);
            }
            p *= 2;
            if p > 1 << 20 {
                return Err(Error::precision("dominant modulus refinement stalled"));
            }
        }
    }

    /// Certified three-way comparison of |alpha_i| and |alpha_j|.
    pub fn compare_abs(&self, i: usize, j: usize) -> Result<std::cmp::Ordering> {
        let a = self.abs_sq(i);
        let b = self.abs_sq(j);
        if a == b {
            return Ok(std::cmp::Ordering::Equal);
        }
        let sign = real_elem_sign(&a.sub(&b))?;
        Ok(if sign > 0 {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Less
        })
    }
}

/// Certified sign of a real-valued element: exact zero test, then interval
/// refinement of the identity embedding.
pub fn real_elem_sign(x: &FieldElem) -> Result<i32> {
    if x.is_zero() {
        return Ok(0);
    }
    let mut prec = 64u32;
    loop {
        let b = x.embed_id(prec)?;
        if b.re.strictly_positive() {
            return Ok(1);
        }
        if b.re.strictly_negative() {
            return Ok(-1);
        }
        prec *= 2;
        if prec > 1 << 20 {
            return Err(Error::precision(
                "sign determination of a nonzero element stalled",
            ));
        }
    }
}

/// Order of x as a root of unity in a degree-d field, if it is one.
///
/// Roots of unity are algebraic integers whose minimal polynomial is
/// cyclotomic; the candidate orders k satisfy phi(k) = deg(minpoly) and
/// k <= 2 d^2 (since phi(k) >= sqrt(k/2)).
pub fn root_of_unity_order(x: &FieldElem, d: usize) -> Result<Option<u64>> {
    if x.is_zero() {
        return Ok(None);
    }
    let mp = x.min_poly();
    if !mp.coeffs().iter().all(|c| c.denom().is_one()) {
        return Ok(None);
    }
    let e = mp.degree() as u64;
    let cap = (2 * d * d) as u64;
    for k in phi_matches(e, cap) {
        if x.pow(k).is_one() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// All k <= cap with phi(k) = target.
fn phi_matches(target: u64, cap: u64) -> Vec<u64> {
    let n = cap as usize;
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for i in 2..=n {
        if phi[i] == i as u64 {
            let mut j = i;
            while j <= n {
                phi[j] -= phi[j] / i as u64;
                j += i;
            }
        }
    }
    (1..=n)
        .filter(|&k| phi[k] == target)
        .map(|k| k as u64)
        .collect()
}

// -------------------------------------------------------------- construction

/// Build the compositum of the root fields of pairwise distinct irreducible
/// monic integral polynomials; returns the field and, per input factor, the
/// exact images of all of its roots.
pub fn build_splitting_field(factors: &[QPoly]) -> Result<(Field, Vec<Vec<FieldElem>>)> {
    for f in factors {
        assert!(f.is_monic(), "irreducible factors are monic integral");
    }
    let mut field = NumberField::rational();
    let mut images: Vec<Vec<FieldElem>> = vec![Vec::new(); factors.len()];
    let mut remaining: Vec<KPoly> = factors
        .iter()
        .map(|f| KPoly::from_qpoly(&field, f))
        .collect();

    loop {
        // Split off everything linear over the current field.
        let mut pending: Option<(usize, KPoly)> = None;
        for j in 0..factors.len() {
            if remaining[j].degree() < 1 {
                continue;
            }
            let parts = factor_over_field(&remaining[j])?;
            let mut rest = KPoly::one(&field);
            for g in parts {
                if g.degree() == 1 {
                    let root = g.coeff(0).neg();
                    images[j].push(root);
                } else {
                    rest = rest.mul(&g);
                    if pending.is_none() {
                        pending = Some((j, g));
                    }
                }
            }
            remaining[j] = rest;
        }
        let Some((j, g)) = pending else {
            // Everything split into linears.
            return Ok((field, images));
        };

        // Adjoin a root of g (an irreducible factor of factors[j] over K).
        let new_degree = field.degree() * g.degree() as usize;
        if new_degree > SPLITTING_DEGREE_CAP {
            return Err(Error::capacity(format!(
                "splitting field degree {new_degree} exceeds cap {SPLITTING_DEGREE_CAP}"
            )));
        }
        let (new_field, theta_expr) = adjoin_root(&field, &factors[j], &g)?;

        // Transport all state through theta -> theta_expr.
        images = images
            .iter()
            .map(|v| v.iter().map(|e| map_elem(e, &new_field, &theta_expr)).collect())
            .collect();
        remaining = remaining
            .iter()
            .map(|p| map_kpoly(p, &new_field, &theta_expr))
            .collect();
        field = new_field;
    }
}

/// Evaluate an old-field element's representation at the image of the old
/// generator inside the new field.
fn map_elem(e: &FieldElem, new_field: &Field, theta_expr: &FieldElem) -> FieldElem {
    let mut acc = new_field.zero();
    for c in e.rep().coeffs().iter().rev() {
        acc = acc.mul(theta_expr).add(&new_field.from_rational(c.clone()));
    }
    acc
}

fn map_kpoly(p: &KPoly, new_field: &Field, theta_expr: &FieldElem) -> KPoly {
    KPoly::new(
        new_field,
        p.coeffs
            .iter()
            .map(|c| map_elem(c, new_field, theta_expr))
            .collect(),
    )
}

/// Adjoin a root of g (irreducible over K, dividing the rational irreducible
/// f) to K = Q(theta). Returns the new field K(beta) = Q(gamma) and the
/// expression of theta in it.
fn adjoin_root(field: &Field, f: &QPoly, g: &KPoly) -> Result<(Field, FieldElem)> {
    let d = field.degree();
    if d == 1 {
        // Fresh start: the new field is Q[x]/(f) with the canonical first
        // root window designated (g = f up to the trivial embedding).
        debug_assert_eq!(g.degree(), f.degree());
        let nf = NumberField::with_id(f.clone(), 0)?;
        // theta was rational (the constant 1).
        let theta_expr = nf.from_rational(BigRational::one());
        return Ok((nf, theta_expr));
    }
    let h = field.min_poly().clone();

    // Designate beta: the windows of f that are roots of g, canonically
    // first. Window indices of f are stable, so this is deterministic.
    let mut froots = isolate_roots(f)?;
    let beta_window_idx = designate_g_root(&mut froots, g)?;

    for k in 1..60i64 {
        let m = resultant_shifted(&h, f, k);
        if !m.is_squarefree() {
            continue;
        }
        let fac = poly_factor_rationals(&m)?;
        // gamma = beta + k*theta: find the unique irreducible factor of M
        // vanishing at gamma, certified by refining the box of gamma until
        // all other factors are excluded.
        let hprime = select_vanishing_factor(&fac.factors, field, &mut froots, beta_window_idx, k)?;
        // Locate gamma among the roots of h'.
        let id_idx = designate_window_for_value(&hprime, field, &mut froots, beta_window_idx, k)?;
        let nf = NumberField::with_id(hprime, id_idx)?;

        // theta in the new field: the unique common root of h(y) and
        // f(gamma - k y).
        let gamma = nf.generator();
        let hk = KPoly::from_qpoly(&nf, &h);
        let lin = KPoly::new(
            &nf,
            vec![gamma.clone(), nf.from_rational(BigRational::from(-num_bigint::BigInt::from(k)))],
        );
        let mut fshift = KPoly::zero(&nf);
        for c in f.coeffs().iter().rev() {
            fshift = fshift
                .mul(&lin)
                .add(&KPoly::new(&nf, vec![nf.from_rational(c.clone())]));
        }
        let dgcd = hk.gcd(&fshift)?;
        if dgcd.degree() != 1 {
            return Err(Error::internal(
                "theta recovery gcd is not linear despite a squarefree resultant",
            ));
        }
        let theta_expr = dgcd.coeff(0).neg().div(&dgcd.coeff(1))?;
        debug_assert!(KPoly::from_qpoly(&nf, &h).eval(&theta_expr).is_zero());
        return Ok((nf, theta_expr));
    }
    Err(Error::internal("no squarefree shifted resultant found"))
}

/// Among the windows of f, find the canonical first one whose root is a
/// root of g (certified by excluding all others through refinement).
fn designate_g_root(froots: &mut IsolatedRoots, g: &KPoly) -> Result<usize> {
    let want = g.degree() as usize;
    let total = froots.count();
    let mut prec = 64u32;
    loop {
        let mut possible = Vec::new();
        for w in 0..total {
            let wb = froots.window(w, prec);
            let val = g.eval_box_under_embedding(g.field.id_index(), &wb, prec)?;
            if val.contains_zero() {
                possible.push(w);
            }
        }
        if possible.len() == want {
            return Ok(possible[0]);
        }
        if possible.len() < want {
            return Err(Error::internal(
                "fewer candidate windows than the factor degree",
            ));
        }
        prec *= 2;
        froots.refine_all(-(prec as i64 / 2))?;
        if prec > 1 << 18 {
            return Err(Error::precision("root designation stalled"));
        }
    }
}

/// Box of gamma = beta + k*theta at the given precision.
fn gamma_box(
    field: &Field,
    froots: &mut IsolatedRoots,
    beta_idx: usize,
    k: i64,
    prec: u32,
) -> Result<ComplexBox> {
    froots.refine(beta_idx, -(prec as i64))?;
    let beta = froots.window(beta_idx, prec);
    let theta = field.embedding_window(field.id_index(), prec)?;
    let kbox = ComplexBox::real(RealInterval::from_i64(k));
    Ok(beta.add(&theta.mul(&kbox, prec), prec))
}

/// The unique irreducible factor of M vanishing at gamma.
fn select_vanishing_factor(
    factors: &[(QPoly, u32)],
    field: &Field,
    froots: &mut IsolatedRoots,
    beta_idx: usize,
    k: i64,
) -> Result<QPoly> {
    let mut prec = 64u32;
    loop {
        let gb = gamma_box(field, froots, beta_idx, k, prec)?;
        let alive: Vec<&QPoly> = factors
            .iter()
            .map(|(f, _)| f)
            .filter(|f| f.eval_box(&gb, prec).contains_zero())
            .collect();
        if alive.len() == 1 {
            return Ok(alive[0].clone());
        }
        if alive.is_empty() {
            return Err(Error::internal("gamma excluded from every factor"));
        }
        prec *= 2;
        if prec > 1 << 18 {
            return Err(Error::precision("factor designation for gamma stalled"));
        }
    }
}

/// The window index of h' whose root equals gamma.
fn designate_window_for_value(
    hprime: &QPoly,
    field: &Field,
    froots: &mut IsolatedRoots,
    beta_idx: usize,
    k: i64,
) -> Result<usize> {
    let mut hw = isolate_roots(hprime)?;
    let mut prec = 64u32;
    loop {
        let gb = gamma_box(field, froots, beta_idx, k, prec)?;
        let alive: Vec<usize> = (0..hw.count())
            .filter(|&w| hw.window(w, prec).intersects(&gb))
            .collect();
        if alive.len() == 1 {
            return Ok(alive[0]);
        }
        if alive.is_empty() {
            return Err(Error::internal("gamma box misses every root window"));
        }
        prec *= 2;
        hw.refine_all(-(prec as i64 / 2))?;
        if prec > 1 << 18 {
            return Err(Error::precision("window designation for gamma stalled"));
        }
    }
}

/// Match exact images to root windows by certified exclusion; returns, per
/// window index, the image index it designates.
fn match_images_to_windows(
    windows: &mut IsolatedRoots,
    images: &[FieldElem],
) -> Result<Vec<usize>> {
    let n = windows.count();
    assert_eq!(n, images.len());
    let mut prec = 64u32;
    loop {
        let mut assignment = vec![usize::MAX; n];
        let mut ambiguous = false;
        for (ii, img) in images.iter().enumerate() {
            let ib = img.embed_id(prec)?;
            let alive: Vec<usize> = (0..n)
                .filter(|&w| windows.window(w, prec).intersects(&ib))
                .collect();
            if alive.len() != 1 {
                ambiguous = true;
                break;
            }
            if assignment[alive[0]] != usize::MAX {
                ambiguous = true;
                break;
            }
            assignment[alive[0]] = ii;
        }
        if !ambiguous && assignment.iter().all(|&a| a != usize::MAX) {
            return Ok(assignment);
        }
        prec *= 2;
        windows.refine_all(-(prec as i64 / 2))?;
        if prec > 1 << 18 {
            return Err(Error::precision("image-window matching stalled"));
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

    #[test]
    fn golden_char_poly_splits_in_quadratic_field() {
        let a = SplittingAnalysis::from_char_poly(&p(&[-1, -1, 1])).unwrap();
        assert_eq!(a.degree(), 2);
        assert_eq!(a.field.real_embeddings(), 2);
        assert_eq!(a.field.complex_pairs(), 0);
        assert_eq!(a.m, 2);
        // Roots are real, conjugate to themselves.
        for (i, r) in a.roots.iter().enumerate() {
            assert!(r.is_real);
            assert_eq!(r.conj_index, i);
            // image satisfies x^2 - x - 1 = 0
            let img = &r.image;
            let val = img.mul(img).sub(img).sub(&a.field.one());
            assert!(val.is_zero());
        }
    }

    #[test]
    fn gaussian_field_counts() {
        let a = SplittingAnalysis::from_char_poly(&p(&[1, 0, 1])).unwrap();
        assert_eq!(a.degree(), 2);
        assert_eq!(a.field.real_embeddings(), 0);
        assert_eq!(a.field.complex_pairs(), 1);
        assert_eq!(a.roots[0].conj_index, 1);
        assert_eq!(a.roots[1].conj_index, 0);
        // |i|^2 = 1 exactly.
        assert!(a.abs_sq(0).is_one());
    }

    #[test]
    fn rational_roots_stay_in_degree_one() {
        // (x-2)(x-3): d = 1, images are the constants 2 and 3.
        let a = SplittingAnalysis::from_char_poly(&p(&[6, -5, 1])).unwrap();
        assert_eq!(a.degree(), 1);
        let mut vals: Vec<BigRational> = a
            .roots
            .iter()
            .map(|r| r.image.as_rational().unwrap())
            .collect();
        vals.sort();
        assert_eq!(vals, vec![rat_i64(2), rat_i64(3)]);
        assert_eq!(a.field.min_poly(), &p(&[-1, 1]));
    }

    #[test]
    fn cubic_splitting_field_has_degree_six() {
        let a = SplittingAnalysis::from_char_poly(&p(&[-2, 0, 0, 1])).unwrap();
        assert_eq!(a.degree(), 6);
        assert_eq!(a.m, 3);
        // Every image must satisfy x^3 = 2.
        for r in &a.roots {
            let cube = r.image.pow(3);
            assert_eq!(cube.as_rational(), Some(rat_i64(2)));
        }
        // Exactly one real root.
        assert_eq!(a.roots.iter().filter(|r| r.is_real).count(), 1);
        // Conjugation is an involution without real fixed points on the pair.
        for (i, r) in a.roots.iter().enumerate() {
            assert_eq!(a.roots[r.conj_index].conj_index, i);
        }
    }

    #[test]
    fn degeneracy_of_plus_minus_two() {
        // x^2 - 4 = (x-2)(x+2): ratio -1 is a 2nd root of unity.
        let a = SplittingAnalysis::from_char_poly(&p(&[-4, 0, 1])).unwrap();
        let w = a.degeneracy().unwrap().expect("degenerate");
        assert_eq!(w.order, 2);
        assert_eq!(w.ratio.as_rational(), Some(rat_i64(-1)));
    }

    #[test]
    fn degeneracy_of_gaussian_units() {
        let a = SplittingAnalysis::from_char_poly(&p(&[1, 0, 1])).unwrap();
        let w = a.degeneracy().unwrap().expect("degenerate");
        assert_eq!(w.order, 2);
    }

    #[test]
    fn golden_pair_is_not_degenerate() {
        let a = SplittingAnalysis::from_char_poly(&p(&[-1, -1, 1])).unwrap();
        assert!(a.degeneracy().unwrap().is_none());
    }

    #[test]
    fn dominant_root_of_fibonacci() {
        let a = SplittingAnalysis::from_char_poly(&p(&[-1, -1, 1])).unwrap();
        let dom = a.dominant_roots().unwrap();
        assert!(dom.unique);
        let alpha = a.alpha1_abs(&dom, 40).unwrap();
        // phi in [1.618033, 1.618034]
        assert!(alpha.lo.to_rational() >= BigRational::new(1618033.into(), 1000000.into()));
        assert!(alpha.hi.to_rational() <= BigRational::new(1618034.into(), 1000000.into()));
    }

    #[test]
    fn dominant_tie_for_conjugate_pair() {
        // x^2 - x + 2: complex pair of modulus sqrt(2).
        let a = SplittingAnalysis::from_char_poly(&p(&[2, -1, 1])).unwrap();
        let dom = a.dominant_roots().unwrap();
        assert!(!dom.unique);
        assert_eq!(dom.indices.len(), 2);
        let alpha = a.alpha1_abs(&dom, 40).unwrap();
        let sq = alpha.square(64);
        assert!(sq.contains_rational(&rat_i64(2)));
    }

    #[test]
    fn unit_modulus_rejected() {
        // x - 1: dominant root 1.
        let a = SplittingAnalysis::from_char_poly(&p(&[-1, 1])).unwrap();
        assert!(matches!(
            a.dominant_roots(),
            Err(Error::AssumptionViolation(_))
        ));
    }

    #[test]
    fn dominant_root_of_mixed_product() {
        // (x^2-x-1)(x-2): dominant root 2.
        let cp = p(&[-1, -1, 1]).mul(&p(&[-2, 1]));
        let a = SplittingAnalysis::from_char_poly(&cp).unwrap();
        assert_eq!(a.degree(), 2);
        assert_eq!(a.m, 3);
        let dom = a.dominant_roots().unwrap();
        assert!(dom.unique);
        let idx = dom.indices[0];
        assert_eq!(a.roots[idx].image.as_rational(), Some(rat_i64(2)));
        assert!(a.degeneracy().unwrap().is_none());
    }

    #[test]
    fn root_of_unity_order_detection() {
        let f = NumberField::with_id(p(&[1, 0, 1]), 0).unwrap();
        let i = f.generator();
        assert_eq!(root_of_unity_order(&i, 2).unwrap(), Some(4));
        assert_eq!(
            root_of_unity_order(&f.from_rational(rat_i64(-1)), 2).unwrap(),
            Some(2)
        );
        assert_eq!(
            root_of_unity_order(&f.from_rational(rat_i64(1)), 2).unwrap(),
            Some(1)
        );
        assert_eq!(root_of_unity_order(&f.from_rational(rat_i64(2)), 2).unwrap(), None);
        // (i+1) has modulus sqrt2: not a unity root.
        let e = f.elem(p(&[1, 1]));
        assert_eq!(root_of_unity_order(&e, 2).unwrap(), None);
    }
}
