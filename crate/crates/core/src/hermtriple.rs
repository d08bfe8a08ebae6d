//! Hermitian Jordan triples attached to an Albert algebra A and a quadratic
//! etale algebra K: the carrier is A extended to K, with the semilinear
//! operator P_x y = U_x applied to the conjugate of y.
//!
//! This module houses the triple operations, the isotropy witness equation
//! (x singular with x in the cross of its conjugate with the carrier), the
//! witness dichotomy (nilpotent vs k x K subalgebra), the explicit k x K
//! embedding with its frame, and triple isomorphisms induced by hermitian
//! congruences.

use std::sync::Arc;

use rand::Rng;

use crate::albert::{find_nilpotent, Alb, AlbOps, AlbertElement};
use crate::error::{Error, Result};
use crate::fieldcore::{Etale, EtaleElement, EtaleOps, Field, FieldOps, FieldScalar};
use crate::linalg::Matrix;
use crate::octonion::OctOps;
use crate::scalar::Scalar;

/// Carrier element: an Albert element with coordinates in K.
pub type KEl = AlbertElement<EtaleElement>;

pub type Triple = Arc<HermTriple>;

#[derive(Debug)]
pub struct HermTriple {
    base: Alb<FieldScalar>,
    etale: Etale,
    ext: Alb<EtaleElement>,
    /// Inverse of the 2x2 change of basis from (y, z) with x = y + d z to
    /// internal K coordinates.
    comp_inv: Matrix<FieldScalar>,
}

impl HermTriple {
    pub fn new(base: Alb<FieldScalar>, etale: Etale) -> Result<Triple> {
        if *base.ctx().field().as_ref() != *etale.base().as_ref() {
            return Err(Error::DescriptorMismatch);
        }
        let ext = base.map_scalars(&etale.zero_el(), |c| etale.from_base(c));
        let one = etale.one_el();
        let d = etale.d();
        let (oa, ob) = one.coords();
        let (da, db) = d.coords();
        let m = Matrix::from_rows(
            vec![
                vec![oa.clone(), da.clone()],
                vec![ob.clone(), db.clone()],
            ],
            oa,
        );
        let comp_inv = m.inverse()?;
        Ok(Arc::new(HermTriple {
            base,
            etale,
            ext,
            comp_inv,
        }))
    }

    pub fn base_algebra(&self) -> &Alb<FieldScalar> {
        &self.base
    }

    pub fn etale(&self) -> &Etale {
        &self.etale
    }

    /// The K-carrier A extended to K.
    pub fn carrier(&self) -> &Alb<EtaleElement> {
        &self.ext
    }

    pub fn field(&self) -> &Field {
        self.base.ctx().field()
    }

    fn check(&self, x: &KEl) -> Result<()> {
        if *x.algebra().as_ref() != *self.ext.as_ref() {
            return Err(Error::TripleMismatch);
        }
        Ok(())
    }

    /// a tensor 1.
    pub fn include(&self, a: &AlbertElement<FieldScalar>) -> KEl {
        a.map_scalars(&self.ext, |c| self.etale.from_base(c))
    }

    /// Coordinatewise conjugation of K.
    pub fn iota(&self, x: &KEl) -> KEl {
        let v: Vec<EtaleElement> = x.to_vec().iter().map(|c| c.conj()).collect();
        self.ext.from_vec(&v)
    }

    /// P_x y = U_x applied to the conjugate of y.
    pub fn p_op(&self, x: &KEl, y: &KEl) -> Result<KEl> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.u_op(&self.iota(y)))
    }

    /// [x, y, z] = P_{x+z} y - P_x y - P_z y.
    pub fn bracket(&self, x: &KEl, y: &KEl, z: &KEl) -> Result<KEl> {
        let a = self.p_op(&x.add(z), y)?;
        Ok(a.sub(&self.p_op(x, y)?).sub(&self.p_op(z, y)?))
    }

    /// Components (y, z) with x = y + d z, y and z in the base algebra.
    pub fn components(
        &self,
        x: &KEl,
    ) -> (AlbertElement<FieldScalar>, AlbertElement<FieldScalar>) {
        let mut yv = Vec::with_capacity(27);
        let mut zv = Vec::with_capacity(27);
        for c in x.to_vec() {
            let (ca, cb) = c.coords();
            let sol = self.comp_inv.apply(&[ca.clone(), cb.clone()]);
            yv.push(sol[0].clone());
            zv.push(sol[1].clone());
        }
        (self.base.from_vec(&yv), self.base.from_vec(&zv))
    }

    pub fn from_components(
        &self,
        y: &AlbertElement<FieldScalar>,
        z: &AlbertElement<FieldScalar>,
    ) -> KEl {
        let d = self.etale.d();
        self.include(y).add(&self.include(z).scale(&d))
    }

    /// The 54 k-basis vectors of the carrier: b tensor 1 and b tensor d.
    pub fn k_basis(&self) -> Vec<KEl> {
        let d = self.etale.d();
        let mut out = Vec::with_capacity(54);
        for b in self.base.basis() {
            out.push(self.include(&b));
        }
        for b in self.base.basis() {
            out.push(self.include(&b).scale(&d));
        }
        out
    }

    /// Flatten a carrier element to 54 base-field coordinates (y then z).
    pub fn to_k_vec(&self, x: &KEl) -> Vec<FieldScalar> {
        let (y, z) = self.components(x);
        let mut v = y.to_vec();
        v.extend(z.to_vec());
        v
    }

    pub fn from_k_vec(&self, v: &[FieldScalar]) -> KEl {
        assert_eq!(v.len(), 54);
        let y = self.base.from_vec(&v[0..27]);
        let z = self.base.from_vec(&v[27..54]);
        self.from_components(&y, &z)
    }

    pub fn sample_with(&self, mut f: impl FnMut() -> EtaleElement) -> KEl {
        self.ext.sample_with(&mut f)
    }
}

// ------------------------------------------------------------------
// Triple inner ideals
// ------------------------------------------------------------------

/// Decide whether a K-submodule X of the carrier is an inner ideal of the
/// triple: P_x V lands in X for all x in X.  Over GF(2) every element of X
/// is tested; otherwise spanning vectors plus polarization suffice because
/// x -> P_x is quadratic.
pub fn triple_inner_ideal(t: &Triple, x_space: &crate::linalg::Subspace<FieldScalar>) -> Result<bool> {
    if x_space.ambient() != 54 {
        return Err(Error::DimensionMismatch {
            expected: 54,
            got: x_space.ambient(),
        });
    }
    let gens: Vec<KEl> = x_space
        .basis()
        .iter()
        .map(|v| t.from_k_vec(v))
        .collect();
    let field = t.field().clone();
    let ctx = field.one();
    // K-submodule check: closure under multiplication by d
    let d = t.etale.d();
    for g in &gens {
        if !x_space.contains(&t.to_k_vec(&g.scale(&d)), &ctx) {
            return Err(Error::NotKSubmodule);
        }
    }
    if x_space.dim() == 54 {
        // the whole carrier absorbs everything
        return Ok(true);
    }
    let ambient_basis = t.k_basis();
    let in_x = |el: &KEl| -> bool { x_space.contains(&t.to_k_vec(el), &ctx) };
    if field.order() == Some(2) {
        // enumerate X itself
        let n = gens.len();
        for mask in 1u64..(1u64 << n) {
            let mut x = t.ext.zero_el();
            for (i, g) in gens.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    x = x.add(g);
                }
            }
            for a in &ambient_basis {
                if !in_x(&t.p_op(&x, a)?) {
                    return Ok(false);
                }
            }
        }
        return Ok(true);
    }
    for (i, g) in gens.iter().enumerate() {
        for a in &ambient_basis {
            if !in_x(&t.p_op(g, a)?) {
                return Ok(false);
            }
        }
        for h in gens.iter().skip(i + 1) {
            for a in &ambient_basis {
                if !in_x(&t.bracket(g, a, h)?) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

// ------------------------------------------------------------------
// Isotropy witnesses
// ------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStrategy {
    /// x = n tensor 1 for a nilpotent n of A, with v = -1.
    Nilpotent,
    /// Split K: x = (e1, e2) from the diagonal frame, v = e3.
    Subalgebra,
    /// Random singular elements U_w(e11 tensor 1), completed linearly.
    Random,
}

#[derive(Debug, Clone)]
pub struct Witness {
    pub x: KEl,
    pub v: KEl,
    pub strategy: SearchStrategy,
}

/// Exact re-verification: x nonzero, x singular in the K-carrier, and
/// the conjugate of x crossed with v returns x.
pub fn check_witness(t: &Triple, x: &KEl, v: &KEl) -> bool {
    !x.is_zero() && x.sharp().is_zero() && t.iota(x).cross(v) == *x
}

/// Solve the K-linear system (conj x) cross v = x for v, over the base
/// field on the 54-dimensional carrier.
pub fn complete_witness(t: &Triple, x: &KEl) -> Option<KEl> {
    if x.is_zero() || !x.sharp().is_zero() {
        return None;
    }
    let ix = t.iota(x);
    let ctx = t.field().one();
    let basis = t.k_basis();
    let mut cols: Vec<Vec<FieldScalar>> = Vec::with_capacity(54);
    for b in &basis {
        cols.push(t.to_k_vec(&ix.cross(b)));
    }
    let mut m = Matrix::zero(54, 54, &ctx);
    for (j, col) in cols.iter().enumerate() {
        for i in 0..54 {
            *m.at_mut(i, j) = col[i].clone();
        }
    }
    let rhs = t.to_k_vec(x);
    let sol = m.solve(&rhs)?;
    let mut v = t.ext.zero_el();
    for (c, b) in sol.iter().zip(&basis) {
        if !Scalar::is_zero(c) {
            v = v.add(&b.scale(&t.etale.from_base(c)));
        }
    }
    Some(v)
}

fn witness_from_nilpotent(t: &Triple) -> Option<Witness> {
    let n = find_nilpotent(&t.base).ok()?;
    let x = t.include(&n);
    let v = t.include(&t.base.one_el()).neg();
    if check_witness(t, &x, &v) {
        Some(Witness {
            x,
            v,
            strategy: SearchStrategy::Nilpotent,
        })
    } else {
        complete_witness(t, &x).map(|v| Witness {
            x,
            v,
            strategy: SearchStrategy::Nilpotent,
        })
    }
}

fn witness_from_subalgebra(t: &Triple) -> Option<Witness> {
    if !t.etale.is_split() {
        return None;
    }
    // K = k x k: build x with first component e11, second e22, and v = e33.
    let field = t.field().clone();
    let first = |a: &FieldScalar| t.etale.from_coords(a.clone(), FieldOps::zero(&field));
    let second = |a: &FieldScalar| t.etale.from_coords(FieldOps::zero(&field), a.clone());
    let e1 = t.base.diag_unit(0);
    let e2 = t.base.diag_unit(1);
    let e3 = t.base.diag_unit(2);
    let x = e1
        .map_scalars(&t.ext, first)
        .add(&e2.map_scalars(&t.ext, second));
    let v = t.include(&e3);
    if check_witness(t, &x, &v) {
        Some(Witness {
            x,
            v,
            strategy: SearchStrategy::Subalgebra,
        })
    } else {
        complete_witness(t, &x).map(|v| Witness {
            x,
            v,
            strategy: SearchStrategy::Subalgebra,
        })
    }
}

fn witness_random<R: Rng>(t: &Triple, rng: &mut R, budget: usize) -> Option<Witness> {
    let etale = t.etale.clone();
    let field = t.field().clone();
    let seed_k = t.include(&t.base.diag_unit(0));
    let seed_base = t.base.diag_unit(0);
    for iter in 0..budget {
        if iter % 2 == 0 {
            // random point of the singular variety over the base field:
            // x0 = U_w e11 has x0# = 0; trace zero makes v = -1 a witness
            let w = t.base.sample_with(|| field.sample(rng, 5));
            let x0 = w.u_op(&seed_base);
            if !x0.is_zero() && x0.trace().is_zero() {
                let x = t.include(&x0);
                let v = t.include(&t.base.one_el()).neg();
                if check_witness(t, &x, &v) {
                    return Some(Witness {
                        x,
                        v,
                        strategy: SearchStrategy::Random,
                    });
                }
            }
        } else {
            // random K-point of the singular variety, completed linearly
            let w = t.sample_with(|| etale.sample(rng, 5));
            let x = w.u_op(&seed_k);
            if x.is_zero() || !x.sharp().is_zero() {
                continue;
            }
            if let Some(v) = complete_witness(t, &x) {
                let wt = Witness {
                    x,
                    v,
                    strategy: SearchStrategy::Random,
                };
                debug_assert!(check_witness(t, &wt.x, &wt.v));
                return Some(wt);
            }
        }
    }
    None
}

/// Search for an isotropy witness with the given strategies, in order.
/// Every returned witness is re-verified exactly; `None` is one-sided.
pub fn isotropy_witness_search<R: Rng>(
    t: &Triple,
    strategies: &[SearchStrategy],
    rng: &mut R,
    budget: usize,
) -> Option<Witness> {
    for s in strategies {
        let w = match s {
            SearchStrategy::Nilpotent => witness_from_nilpotent(t),
            SearchStrategy::Subalgebra => witness_from_subalgebra(t),
            SearchStrategy::Random => witness_random(t, rng, budget),
        };
        if let Some(w) = w {
            if check_witness(t, &w.x, &w.v) {
                return Some(w);
            }
        }
    }
    None
}

// ------------------------------------------------------------------
// Witness dichotomy
// ------------------------------------------------------------------

/// Verified k x K subalgebra embedding: (alpha, a) maps to
/// alpha c + a e + conj(a) conj(e).
#[derive(Debug, Clone)]
pub struct KxKEmbedding {
    pub c: KEl,
    pub e: KEl,
}

impl KxKEmbedding {
    pub fn apply(&self, t: &Triple, alpha: &FieldScalar, a: &EtaleElement) -> KEl {
        let alpha_k = t.etale.from_base(alpha);
        self.c
            .scale(&alpha_k)
            .add(&self.e.scale(a))
            .add(&t.iota(&self.e).scale(&a.conj()))
    }
}

#[derive(Debug, Clone)]
pub enum WitnessClass {
    /// Trace-zero witness: a nonzero nilpotent of the base algebra.
    Nilpotent(AlbertElement<FieldScalar>),
    /// Trace-invertible witness: a verified k x K subalgebra.
    Embedding(KxKEmbedding),
}

/// Classify a witness per the trace dichotomy.  The witness is re-verified
/// first; `NotAWitness` on failure.
pub fn witness_classify(t: &Triple, x: &KEl, v: &KEl) -> Result<WitnessClass> {
    if !check_witness(t, x, v) {
        return Err(Error::NotAWitness);
    }
    let tr = x.trace();
    if tr.is_zero() {
        // extract a nilpotent from the components of x = y + d z
        let (y, z) = t.components(x);
        let field = t.field().clone();
        let mut candidates = vec![y.clone(), z.clone(), y.add(&z), y.sub(&z)];
        for n in -3i64..=3 {
            candidates.push(y.add(&z.scale(&field.int(n))));
        }
        for c in candidates {
            if !c.is_zero() && c.is_nilpotent() {
                return Ok(WitnessClass::Nilpotent(c));
            }
        }
        find_nilpotent(&t.base).map(WitnessClass::Nilpotent)
    } else {
        let tr_inv = Scalar::inv(&tr).ok_or(Error::NotAWitness)?;
        let e = x.scale(&tr_inv);
        let c = t
            .include(&t.base.one_el())
            .sub(&e)
            .sub(&t.iota(&e));
        let emb = KxKEmbedding { c: c.clone(), e };
        // certify: unital, and multiplicative on squares for a few samples
        let one_im = emb.apply(t, &t.field().one(), &t.etale.one_el());
        if one_im != t.include(&t.base.one_el()) {
            return Err(Error::NotAWitness);
        }
        let field = t.field().clone();
        let probes: Vec<(FieldScalar, EtaleElement)> = (1..=6i64)
            .map(|n| {
                (
                    field.int(n),
                    t.etale
                        .from_coords(field.int(n + 1), field.int(2 * n - 3)),
                )
            })
            .collect();
        for (alpha, a) in &probes {
            let im = emb.apply(t, alpha, a);
            let im_sq = emb.apply(t, &Scalar::mul(alpha, alpha), &Scalar::mul(a, a));
            if im.square() != im_sq {
                return Err(Error::NotAWitness);
            }
        }
        Ok(WitnessClass::Embedding(emb))
    }
}

// ------------------------------------------------------------------
// The explicit k x K embedding into H3(C, <r, 1, delta N_K(s)>)
// ------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct EmbeddingWitness {
    /// Target algebra H3(C, <r, 1, delta N_K(s)>).
    pub algebra: Alb<FieldScalar>,
    pub etale: Etale,
    pub r: FieldScalar,
    pub s: EtaleElement,
    /// Trace-zero t with t^2 = delta (char != 2), or 1 in characteristic 2.
    pub t: EtaleElement,
}

impl EmbeddingWitness {
    /// phi(alpha, a).
    pub fn apply(&self, alpha: &FieldScalar, a: &EtaleElement) -> Result<AlbertElement<FieldScalar>> {
        let ts = self.s.trace();
        let ts_inv = Scalar::inv(&ts).ok_or(Error::TraceZeroS)?;
        let nsa = self.s.norm_bilinear(a);
        let nsia = self.s.norm_bilinear(&a.conj());
        // (conj(a) - a) / t lies in the base field
        let diff = a.conj().sub(a);
        let t_inv = Scalar::inv(&self.t).ok_or(Error::DivisionByZero)?;
        let quot = Scalar::mul(&diff, &t_inv)
            .as_base()
            .ok_or(Error::CharTwoUnsupportedShape)?;
        let alg = &self.algebra;
        let oct = alg.octonions().clone();
        let e11 = alg.diag_unit(0).scale(alpha);
        let e22 = alg.diag_unit(1).scale(&Scalar::mul(&ts_inv, &nsa));
        let e33 = alg.diag_unit(2).scale(&Scalar::mul(&ts_inv, &nsia));
        let off = alg
            .off_element(0, oct.one_el())
            .scale(&Scalar::mul(&ts_inv, &quot));
        Ok(e11.add(&e22).add(&e33).add(&off))
    }
}

/// Construct the embedding phi of k x K into H3(C, <r, 1, delta N_K(s)>)
/// and certify it: phi(1,1) = 1 and the norm identity
/// N(phi(alpha, a)) = alpha N_K(a) on a deterministic sample batch.
pub fn embed_kxk(
    oct: crate::octonion::Oct<FieldScalar>,
    r: FieldScalar,
    s: EtaleElement,
    etale: Etale,
) -> Result<EmbeddingWitness> {
    if Scalar::is_zero(&r) {
        return Err(Error::ZeroInput);
    }
    if s.trace().is_zero() {
        return Err(Error::TraceZeroS);
    }
    let field = etale.base().clone();
    let t = if field.characteristic() == 2 {
        etale.one_el()
    } else {
        etale.t_exact()?
    };
    let delta = etale.delta().clone();
    let gamma3 = Scalar::mul(&delta, &s.norm());
    let alg = crate::albert::AlbertAlgebra::new(oct, [r.clone(), field.one(), gamma3])?;
    let emb = EmbeddingWitness {
        algebra: alg.clone(),
        etale: etale.clone(),
        r,
        s,
        t,
    };
    // certification
    let one_im = emb.apply(&field.one(), &etale.one_el())?;
    if one_im != alg.one_el() {
        return Err(Error::CharTwoUnsupportedShape);
    }
    for n in 0..24i64 {
        let alpha = field.int(n - 11);
        let a = etale.from_coords(field.int(2 * n - 7), field.int(n * n % 13 - 5));
        let im = emb.apply(&alpha, &a)?;
        let expect = Scalar::mul(&alpha, &a.norm());
        if im.norm() != expect {
            return Err(Error::CharTwoUnsupportedShape);
        }
    }
    Ok(emb)
}

// ------------------------------------------------------------------
// Frames over K with Gamma = <1, s, conj(s)>
// ------------------------------------------------------------------

/// The frame (d1, d2, d3) in H3(C_K, <1, s, conj(s)>): d1 = e11,
/// d2 = (s e22 + conj(s) e33 + 1[23]) / T_K(s),
/// d3 = (conj(s) e22 + s e33 - 1[23]) / T_K(s).
pub fn frame_from_embedding(
    oct: crate::octonion::Oct<FieldScalar>,
    etale: Etale,
    s: EtaleElement,
) -> Result<(Alb<EtaleElement>, [KEl; 3])> {
    let ts = s.trace();
    let ts_inv = Scalar::inv(&ts).ok_or(Error::TraceZeroS)?;
    let ts_inv_k = etale.from_base(&ts_inv);
    let oct_k = oct.map_scalars(&etale.zero_el(), |c| etale.from_base(c));
    let alg = crate::albert::AlbertAlgebra::new(
        oct_k.clone(),
        [etale.one_el(), s.clone(), s.conj()],
    )?;
    let d1 = alg.diag_unit(0);
    let one_off = alg.off_element(0, oct_k.one_el());
    let d2 = alg
        .diag_unit(1)
        .scale(&s)
        .add(&alg.diag_unit(2).scale(&s.conj()))
        .add(&one_off)
        .scale(&ts_inv_k);
    let d3 = alg
        .diag_unit(1)
        .scale(&s.conj())
        .add(&alg.diag_unit(2).scale(&s))
        .sub(&one_off)
        .scale(&ts_inv_k);
    // certify the frame: primitive orthogonal idempotents summing to 1
    let frame = [d1, d2, d3];
    let mut sum = alg.zero_el();
    for d in &frame {
        if !d.is_primitive_idempotent() {
            return Err(Error::NotPrimitiveIdempotent);
        }
        sum = sum.add(d);
    }
    if sum != alg.one_el() {
        return Err(Error::NotPrimitiveIdempotent);
    }
    for i in 0..3 {
        for j in 0..3 {
            if i != j && !frame[i].u_op(&frame[j]).is_zero() {
                return Err(Error::NotPrimitiveIdempotent);
            }
        }
    }
    Ok((alg, frame))
}

// ------------------------------------------------------------------
// Triple isomorphisms from hermitian congruences
// ------------------------------------------------------------------

/// A verified triple isomorphism between the Gamma- and Gamma'-isotopes of
/// the K-carrier, induced by a congruence g of the hermitian forms built
/// from the pure parts of two 2-Pfister forms.
#[derive(Debug, Clone)]
pub struct TripleIso {
    /// Carrier map x -> m x conj(m)^T with m = g^{-T}.
    pub m: Matrix<EtaleElement>,
    /// Isotope weights: diagonal of the source and target hermitian forms.
    pub w: KEl,
    pub w_prime: KEl,
}

fn conj_transpose(m: &Matrix<EtaleElement>) -> Matrix<EtaleElement> {
    let mut out = m.transpose();
    for i in 0..out.rows() {
        for j in 0..out.cols() {
            *out.at_mut(i, j) = out.at(i, j).conj();
        }
    }
    out
}

/// The K-scalar GL3 action x -> m x conj(m)^T on H3(C_K, <1,1,1>).
fn herm_gl3(alg: &Alb<EtaleElement>, m: &Matrix<EtaleElement>, x: &KEl) -> KEl {
    let oct = alg.octonions().clone();
    let cyc = |i: usize| ((i + 1) % 3, (i + 2) % 3);
    let mut h: Vec<Vec<crate::octonion::OctonionElement<EtaleElement>>> =
        vec![vec![oct.zero_el(); 3]; 3];
    for i in 0..3 {
        h[i][i] = oct.from_scalar(&x.diag()[i]);
    }
    for i in 0..3 {
        let (j, l) = cyc(i);
        h[j][l] = x.off()[i].clone();
        h[l][j] = x.off()[i].conj();
    }
    let mc = conj_transpose(m);
    let mut y: Vec<Vec<crate::octonion::OctonionElement<EtaleElement>>> =
        vec![vec![oct.zero_el(); 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            let mut acc = oct.zero_el();
            for p in 0..3 {
                for q in 0..3 {
                    let coef = m.at(a, p).mul(mc.at(q, b));
                    acc = acc.add(&h[p][q].scale(&coef));
                }
            }
            y[a][b] = acc;
        }
    }
    // diagonal entries are scalar multiples of 1; read off the scalar
    let scalar_of = |o: &crate::octonion::OctonionElement<EtaleElement>| -> EtaleElement {
        o.coords()[0].clone()
    };
    let diag = [
        scalar_of(&y[0][0]),
        scalar_of(&y[1][1]),
        scalar_of(&y[2][2]),
    ];
    let off = [y[1][2].clone(), y[2][0].clone(), y[0][1].clone()];
    alg.from_parts(diag, off)
}

/// Pure part of <<a, b>>: the diagonal (-a, -b, ab).
fn pfister_pure(gens: &[FieldScalar; 2]) -> [FieldScalar; 3] {
    let ab = Scalar::mul(&gens[0], &gens[1]);
    [Scalar::neg(&gens[0]), Scalar::neg(&gens[1]), ab]
}

/// Build and verify a triple isomorphism from a hermitian congruence g with
/// g H conj(g)^T = H', where H, H' are the diagonal hermitian forms from
/// the pure parts of <<gens>>, <<gens'>>.
pub fn triple_iso_from_congruence<R: Rng>(
    oct: crate::octonion::Oct<FieldScalar>,
    gens: &[FieldScalar; 2],
    gens_prime: &[FieldScalar; 2],
    etale: Etale,
    g: &Matrix<EtaleElement>,
    rng: &mut R,
) -> Result<TripleIso> {
    if g.rows() != 3 || g.cols() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: g.rows(),
        });
    }
    let pure = pfister_pure(gens);
    let pure_p = pfister_pure(gens_prime);
    let emb = |c: &FieldScalar| etale.from_base(c);
    let zero_k = etale.zero_el();
    let mut h_mat = Matrix::zero(3, 3, &zero_k);
    let mut hp_mat = Matrix::zero(3, 3, &zero_k);
    for i in 0..3 {
        *h_mat.at_mut(i, i) = emb(&pure[i]);
        *hp_mat.at_mut(i, i) = emb(&pure_p[i]);
    }
    // congruence check: g H conj(g)^T = H'
    let lhs = g.matmul(&h_mat).matmul(&conj_transpose(g));
    if lhs != hp_mat {
        return Err(Error::NotACongruence);
    }
    // carrier: H3(C_K, <1,1,1>); isotope weights are the hermitian diagonals
    let oct_k = oct.map_scalars(&etale.zero_el(), |c| etale.from_base(c));
    let alg = crate::albert::AlbertAlgebra::new(
        oct_k,
        [etale.one_el(), etale.one_el(), etale.one_el()],
    )?;
    let mk_w = |p: &[FieldScalar; 3]| {
        alg.from_parts(
            [emb(&p[0]), emb(&p[1]), emb(&p[2])],
            [
                alg.octonions().zero_el(),
                alg.octonions().zero_el(),
                alg.octonions().zero_el(),
            ],
        )
    };
    let w = mk_w(&pure);
    let w_prime = mk_w(&pure_p);
    let m = g.inverse().map_err(|_| Error::NotACongruence)?.transpose();
    // iota on the carrier
    let iota = |x: &KEl| -> KEl {
        let v: Vec<EtaleElement> = x.to_vec().iter().map(|c| c.conj()).collect();
        alg.from_vec(&v)
    };
    let p_iso = |wt: &KEl, x: &KEl, y: &KEl| -> KEl { x.u_op(&wt.u_op(&iota(y))) };
    let hmap = |x: &KEl| herm_gl3(&alg, &m, x);
    // verify the homomorphism law on random pairs
    for _ in 0..200 {
        let x = alg.sample_with(|| etale.sample(rng, 4));
        let y = alg.sample_with(|| etale.sample(rng, 4));
        let lhs = hmap(&p_iso(&w, &x, &y));
        let rhs = p_iso(&w_prime, &hmap(&x), &hmap(&y));
        if lhs != rhs {
            return Err(Error::NotACongruence);
        }
    }
    Ok(TripleIso { m, w, w_prime })
}
