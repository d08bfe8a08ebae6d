//! Reduced Albert algebras H3(C, Gamma): 3x3 Gamma-hermitian matrices over
//! an octonion algebra C, as a cubic Jordan algebra given by the norm, the
//! adjoint, and the unit.
//!
//! An element is stored as three diagonal scalars and three octonion entries
//! x1, x2, x3, where x_i occupies the (j, l) slot for the cyclic triple
//! (i j l) of (1 2 3).  The coordinate vector is
//! (alpha1, alpha2, alpha3, x1[0..8], x2[0..8], x3[0..8]), 27 entries.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fieldcore::{FieldOps, FieldScalar};
use crate::linalg::Subspace;
use crate::octonion::{norm_zero_element, Oct, OctOps, OctonionElement, Presentation};
use crate::scalar::Scalar;

pub type Alb<S> = Arc<AlbertAlgebra<S>>;

#[derive(Debug, Clone, PartialEq)]
pub struct AlbertAlgebra<S: Scalar> {
    oct: Oct<S>,
    gamma: [S; 3],
}

#[derive(Debug, Clone)]
pub struct AlbertElement<S: Scalar> {
    alg: Alb<S>,
    diag: [S; 3],
    off: [OctonionElement<S>; 3],
}

impl<S: Scalar> PartialEq for AlbertElement<S> {
    fn eq(&self, other: &Self) -> bool {
        *self.alg == *other.alg && self.diag == other.diag && self.off == other.off
    }
}

/// Cyclic successor pair of i in (0 1 2).
fn cyc(i: usize) -> (usize, usize) {
    ((i + 1) % 3, (i + 2) % 3)
}

impl<S: Scalar> AlbertAlgebra<S> {
    pub fn new(oct: Oct<S>, gamma: [S; 3]) -> Result<Alb<S>> {
        if gamma.iter().any(|g| g.inv().is_none()) {
            return Err(Error::ZeroGamma);
        }
        Ok(Arc::new(AlbertAlgebra { oct, gamma }))
    }

    pub fn octonions(&self) -> &Oct<S> {
        &self.oct
    }

    pub fn gamma(&self) -> &[S; 3] {
        &self.gamma
    }

    pub fn ctx(&self) -> &S {
        self.oct.ctx()
    }

    /// Rebuild over another scalar ring.
    pub fn map_scalars<T: Scalar>(&self, t_ctx: &T, mut f: impl FnMut(&S) -> T) -> Alb<T> {
        let oct = self.oct.map_scalars(t_ctx, &mut f);
        let gamma = [f(&self.gamma[0]), f(&self.gamma[1]), f(&self.gamma[2])];
        Arc::new(AlbertAlgebra { oct, gamma })
    }
}

pub trait AlbOps<S: Scalar> {
    fn zero_el(&self) -> AlbertElement<S>;
    fn one_el(&self) -> AlbertElement<S>;
    fn from_parts(&self, diag: [S; 3], off: [OctonionElement<S>; 3]) -> AlbertElement<S>;
    fn diag_unit(&self, i: usize) -> AlbertElement<S>;
    fn off_element(&self, i: usize, x: OctonionElement<S>) -> AlbertElement<S>;
    fn from_vec(&self, v: &[S]) -> AlbertElement<S>;
    fn basis(&self) -> Vec<AlbertElement<S>>;
    fn sample_with(&self, f: impl FnMut() -> S) -> AlbertElement<S>;
}

impl<S: Scalar> AlbOps<S> for Alb<S> {
    fn zero_el(&self) -> AlbertElement<S> {
        let z = self.ctx().zero();
        AlbertElement {
            alg: self.clone(),
            diag: [z.clone(), z.clone(), z],
            off: [self.oct.zero_el(), self.oct.zero_el(), self.oct.zero_el()],
        }
    }

    fn one_el(&self) -> AlbertElement<S> {
        let mut e = self.zero_el();
        for d in e.diag.iter_mut() {
            *d = self.ctx().one();
        }
        e
    }

    fn from_parts(&self, diag: [S; 3], off: [OctonionElement<S>; 3]) -> AlbertElement<S> {
        AlbertElement {
            alg: self.clone(),
            diag,
            off,
        }
    }

    /// The diagonal idempotent e_{ii}.
    fn diag_unit(&self, i: usize) -> AlbertElement<S> {
        let mut e = self.zero_el();
        e.diag[i] = self.ctx().one();
        e
    }

    /// x placed in the off-diagonal slot carrying x_i.
    fn off_element(&self, i: usize, x: OctonionElement<S>) -> AlbertElement<S> {
        let mut e = self.zero_el();
        e.off[i] = x;
        e
    }

    fn from_vec(&self, v: &[S]) -> AlbertElement<S> {
        assert_eq!(v.len(), 27);
        let diag = [v[0].clone(), v[1].clone(), v[2].clone()];
        let off = [
            self.oct.from_coords(v[3..11].to_vec()),
            self.oct.from_coords(v[11..19].to_vec()),
            self.oct.from_coords(v[19..27].to_vec()),
        ];
        AlbertElement {
            alg: self.clone(),
            diag,
            off,
        }
    }

    fn basis(&self) -> Vec<AlbertElement<S>> {
        let mut out = Vec::with_capacity(27);
        for i in 0..3 {
            out.push(self.diag_unit(i));
        }
        for i in 0..3 {
            for b in 0..8 {
                out.push(self.off_element(i, self.oct.basis_el(b)));
            }
        }
        out
    }

    fn sample_with(&self, mut f: impl FnMut() -> S) -> AlbertElement<S> {
        let diag = [f(), f(), f()];
        let off = [
            self.oct.sample_with(&mut f),
            self.oct.sample_with(&mut f),
            self.oct.sample_with(&mut f),
        ];
        AlbertElement {
            alg: self.clone(),
            diag,
            off,
        }
    }
}

impl<S: Scalar> AlbertElement<S> {
    pub fn algebra(&self) -> &Alb<S> {
        &self.alg
    }

    pub fn diag(&self) -> &[S; 3] {
        &self.diag
    }

    pub fn off(&self) -> &[OctonionElement<S>; 3] {
        &self.off
    }

    pub fn to_vec(&self) -> Vec<S> {
        let mut v = Vec::with_capacity(27);
        v.extend(self.diag.iter().cloned());
        for x in &self.off {
            v.extend(x.coords().iter().cloned());
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(|d| d.is_zero()) && self.off.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(*self.alg, *other.alg, "algebra mismatch");
        AlbertElement {
            alg: self.alg.clone(),
            diag: [
                self.diag[0].add(&other.diag[0]),
                self.diag[1].add(&other.diag[1]),
                self.diag[2].add(&other.diag[2]),
            ],
            off: [
                self.off[0].add(&other.off[0]),
                self.off[1].add(&other.off[1]),
                self.off[2].add(&other.off[2]),
            ],
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        AlbertElement {
            alg: self.alg.clone(),
            diag: [self.diag[0].neg(), self.diag[1].neg(), self.diag[2].neg()],
            off: [self.off[0].neg(), self.off[1].neg(), self.off[2].neg()],
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        AlbertElement {
            alg: self.alg.clone(),
            diag: [
                s.mul(&self.diag[0]),
                s.mul(&self.diag[1]),
                s.mul(&self.diag[2]),
            ],
            off: [
                self.off[0].scale(s),
                self.off[1].scale(s),
                self.off[2].scale(s),
            ],
        }
    }

    /// Cubic norm N(x).
    pub fn norm(&self) -> S {
        let g = &self.alg.gamma;
        let mut n = self.diag[0].mul(&self.diag[1]).mul(&self.diag[2]);
        for i in 0..3 {
            let (j, l) = cyc(i);
            let t = g[j]
                .mul(&g[l])
                .mul(&self.diag[i])
                .mul(&self.off[i].norm());
            n = n.sub(&t);
        }
        let ggg = g[0].mul(&g[1]).mul(&g[2]);
        let prod = self.off[0].mul(&self.off[1].mul(&self.off[2]));
        n.add(&ggg.mul(&prod.trace()))
    }

    /// Adjoint x# with x## = N(x) x.
    pub fn sharp(&self) -> Self {
        let g = &self.alg.gamma;
        let mut out = self.alg.zero_el();
        for i in 0..3 {
            let (j, l) = cyc(i);
            out.diag[i] = self.diag[j]
                .mul(&self.diag[l])
                .sub(&g[j].mul(&g[l]).mul(&self.off[i].norm()));
            let prod = self.off[j].mul(&self.off[l]).conj().scale(&g[i]);
            out.off[i] = prod.sub(&self.off[i].scale(&self.diag[i]));
        }
        out
    }

    /// Bilinearized adjoint x x y = (x + y)# - x# - y#.
    pub fn cross(&self, other: &Self) -> Self {
        assert_eq!(*self.alg, *other.alg, "algebra mismatch");
        let g = &self.alg.gamma;
        let mut out = self.alg.zero_el();
        for i in 0..3 {
            let (j, l) = cyc(i);
            let diag = self.diag[j]
                .mul(&other.diag[l])
                .add(&other.diag[j].mul(&self.diag[l]))
                .sub(&g[j].mul(&g[l]).mul(&self.off[i].norm_bilinear(&other.off[i])));
            out.diag[i] = diag;
            let mixed = self.off[j]
                .mul(&other.off[l])
                .add(&other.off[j].mul(&self.off[l]));
            out.off[i] = mixed
                .conj()
                .scale(&g[i])
                .sub(&other.off[i].scale(&self.diag[i]))
                .sub(&self.off[i].scale(&other.diag[i]));
        }
        out
    }

    /// Linear trace T(x).
    pub fn trace(&self) -> S {
        self.diag[0].add(&self.diag[1]).add(&self.diag[2])
    }

    /// Trace bilinear form T(x, y).
    pub fn trace_bilinear(&self, other: &Self) -> S {
        assert_eq!(*self.alg, *other.alg, "algebra mismatch");
        let g = &self.alg.gamma;
        let mut t = self.ctx().zero();
        for i in 0..3 {
            t = t.add(&self.diag[i].mul(&other.diag[i]));
            let (j, l) = cyc(i);
            t = t.add(&g[j].mul(&g[l]).mul(&self.off[i].norm_bilinear(&other.off[i])));
        }
        t
    }

    /// Quadratic trace S(x) = T(x#).
    pub fn quad_trace(&self) -> S {
        let g = &self.alg.gamma;
        let mut s = self.ctx().zero();
        for i in 0..3 {
            let (j, l) = cyc(i);
            let t = self.diag[j]
                .mul(&self.diag[l])
                .sub(&g[j].mul(&g[l]).mul(&self.off[i].norm()));
            s = s.add(&t);
        }
        s
    }

    /// Bilinearized quadratic trace S(x, y) = T(x) T(y) - T(x, y).
    pub fn quad_trace_bilinear(&self, other: &Self) -> S {
        self.trace()
            .mul(&other.trace())
            .sub(&self.trace_bilinear(other))
    }

    /// Quadratic operator U_x y = T(x, y) x - x# x y.
    pub fn u_op(&self, y: &Self) -> Self {
        let t = self.trace_bilinear(y);
        self.scale(&t).sub(&self.sharp().cross(y))
    }

    /// Jordan triple product {x, y, z} = T(x,y) z + T(y,z) x - (z x x) x y.
    pub fn triple(&self, y: &Self, z: &Self) -> Self {
        let a = z.scale(&self.trace_bilinear(y));
        let b = self.scale(&y.trace_bilinear(z));
        a.add(&b).sub(&z.cross(self).cross(y))
    }

    /// Jordan square x^2 = U_x 1, which also equals x# + T(x) x - S(x) 1.
    pub fn square(&self) -> Self {
        self.u_op(&self.alg.one_el())
    }

    /// Jordan power: x^0 = 1, x^1 = x, x^{n+2} = U_x x^n.
    pub fn power(&self, n: u32) -> Self {
        match n {
            0 => self.alg.one_el(),
            1 => self.clone(),
            _ => self.u_op(&self.power(n - 2)),
        }
    }

    fn ctx(&self) -> &S {
        self.alg.ctx()
    }

    /// Rank: 0 for zero, 1 when x# = 0, 2 when N(x) = 0, else 3.
    pub fn rank(&self) -> usize {
        if self.is_zero() {
            0
        } else if self.sharp().is_zero() {
            1
        } else if self.norm().is_zero() {
            2
        } else {
            3
        }
    }

    /// Nilpotent iff T(x) = S(x) = N(x) = 0.
    pub fn is_nilpotent(&self) -> bool {
        self.trace().is_zero() && self.quad_trace().is_zero() && self.norm().is_zero()
    }

    /// x^2 = 0 iff x# = 0 and T(x) = 0.
    pub fn squares_to_zero(&self) -> bool {
        self.sharp().is_zero() && self.trace().is_zero()
    }

    pub fn is_idempotent(&self) -> bool {
        self.square() == *self
    }

    /// Rank-1 idempotent.
    pub fn is_primitive_idempotent(&self) -> bool {
        !self.is_zero() && self.is_idempotent() && self.sharp().is_zero()
    }

    pub fn map_scalars<T: Scalar>(
        &self,
        target: &Alb<T>,
        mut f: impl FnMut(&S) -> T,
    ) -> AlbertElement<T> {
        target.from_vec(&self.to_vec().iter().map(|c| f(c)).collect::<Vec<_>>())
    }
}

/// The cubic-norm identity checks evaluated exactly on one triple of
/// elements.  Returns (name, holds) per identity.
pub fn identity_suite<S: Scalar>(
    x: &AlbertElement<S>,
    y: &AlbertElement<S>,
    z: &AlbertElement<S>,
) -> Vec<(&'static str, bool)> {
    let alg = x.algebra().clone();
    let one = alg.one_el();
    let n = x.norm();
    let t = x.trace();
    let s = x.quad_trace();
    let xs = x.sharp();
    let three = alg.ctx().from_i64(3);

    let adj = xs.sharp() == x.scale(&n);
    let unt = one.cross(x) == one.scale(&t).sub(x);
    let ads = x.square() == xs.add(&x.scale(&t)).sub(&one.scale(&s));
    let pad = {
        let lhs = xs.cross(&x.cross(y));
        let rhs = y.scale(&n).add(&x.scale(&xs.trace_bilinear(y)));
        lhs == rhs
    };
    let eul = xs.trace_bilinear(x) == three.mul(&n);
    let pau = {
        let lhs = xs.cross(x);
        let c = s.mul(&t).sub(&n);
        let rhs = one.scale(&c).sub(&x.scale(&s)).sub(&xs.scale(&t));
        lhs == rhs
    };
    let ppad = {
        let lhs = xs.cross(&y.cross(z)).add(&x.cross(y).cross(&x.cross(z)));
        let rhs = z
            .scale(&xs.trace_bilinear(y))
            .add(&y.scale(&xs.trace_bilinear(z)))
            .add(&x.scale(&y.cross(z).trace_bilinear(x)));
        lhs == rhs
    };
    let mineq = {
        let x2 = x.square();
        let x3 = x.power(3);
        let x4 = x.power(4);
        let cubic = x3
            .sub(&x2.scale(&t))
            .add(&x.scale(&s))
            .sub(&one.scale(&n));
        let quartic = x4
            .sub(&x3.scale(&t))
            .add(&x2.scale(&s))
            .sub(&x.scale(&n));
        cubic.is_zero() && quartic.is_zero()
    };
    let jtp = {
        let lhs = x.triple(y, z);
        let rhs = x.add(z).u_op(y).sub(&x.u_op(y)).sub(&z.u_op(y));
        lhs == rhs
    };
    vec![
        ("adj", adj),
        ("unt", unt),
        ("ads", ads),
        ("pad", pad),
        ("eul", eul),
        ("pau", pau),
        ("ppad", ppad),
        ("mineq", mineq),
        ("jtp", jtp),
    ]
}

/// Descriptive classification of a single element.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum ElementClass {
    Zero,
    NilpotentSquareZero,
    Nilpotent,
    Singular,
    RankTwo,
    Invertible,
}

pub fn classify<S: Scalar>(x: &AlbertElement<S>) -> ElementClass {
    if x.is_zero() {
        ElementClass::Zero
    } else if x.squares_to_zero() {
        ElementClass::NilpotentSquareZero
    } else if x.is_nilpotent() {
        ElementClass::Nilpotent
    } else if x.sharp().is_zero() {
        ElementClass::Singular
    } else if x.norm().is_zero() {
        ElementClass::RankTwo
    } else {
        ElementClass::Invertible
    }
}

/// Peirce decomposition relative to a primitive idempotent e:
/// A = A2 + A1 + A0 with dims 1, 16, 10, computed as images of U_e,
/// U_{e,1-e}, and U_{1-e}.
#[derive(Debug, Clone)]
pub struct PeirceDecomposition<S: Scalar> {
    pub two: Subspace<S>,
    pub one: Subspace<S>,
    pub zero: Subspace<S>,
}

pub fn peirce_decomposition<S: Scalar>(
    alg: &Alb<S>,
    e: &AlbertElement<S>,
) -> Result<PeirceDecomposition<S>> {
    if !e.is_primitive_idempotent() {
        return Err(Error::NotPrimitiveIdempotent);
    }
    let ctx = alg.ctx();
    let f = alg.one_el().sub(e);
    let basis = alg.basis();
    let im = |op: &dyn Fn(&AlbertElement<S>) -> AlbertElement<S>| -> Subspace<S> {
        let vecs: Vec<Vec<S>> = basis.iter().map(|b| op(b).to_vec()).collect();
        Subspace::span(&vecs, 27, ctx)
    };
    let two = im(&|y| e.u_op(y));
    let zero = im(&|y| f.u_op(y));
    // U_{e,f} y = {e, y, f}
    let one = im(&|y| e.triple(y, &f));
    Ok(PeirceDecomposition { two, one, zero })
}

/// GL3 similarity action on H3(C, <1,1,1>): phi_g(x) = g x g^T, acting on
/// the hermitian matrix presentation.  N(phi_g(x)) = det(g)^2 N(x).
pub fn gl3_action<S: Scalar>(
    alg: &Alb<S>,
    g: &crate::linalg::Matrix<S>,
    x: &AlbertElement<S>,
) -> Result<AlbertElement<S>> {
    if !alg.gamma().iter().all(|c| c.is_one()) {
        return Err(Error::GammaNotUnit);
    }
    if g.rows() != 3 || g.cols() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: g.rows(),
        });
    }
    let oct = alg.octonions().clone();
    // hermitian matrix entries h[i][j] as octonions
    let emb = |s: &S| oct.from_scalar(s);
    let mut h: Vec<Vec<OctonionElement<S>>> = vec![vec![oct.zero_el(); 3]; 3];
    for i in 0..3 {
        h[i][i] = emb(&x.diag()[i]);
    }
    for i in 0..3 {
        let (j, l) = cyc(i);
        h[j][l] = x.off()[i].clone();
        h[l][j] = x.off()[i].conj();
    }
    // y = g h g^T; scalar entries of g commute and associate with octonions
    let mut y: Vec<Vec<OctonionElement<S>>> = vec![vec![oct.zero_el(); 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            let mut acc = oct.zero_el();
            for p in 0..3 {
                for q in 0..3 {
                    let coef = g.at(a, p).mul(g.at(b, q));
                    acc = acc.add(&h[p][q].scale(&coef));
                }
            }
            y[a][b] = acc;
        }
    }
    let ctx = alg.ctx();
    let scalar_of = |o: &OctonionElement<S>| -> S {
        // diagonal entries of a hermitian matrix are scalars
        match alg.octonions().presentation() {
            Presentation::Zorn => o.coords()[0].clone(),
            Presentation::CayleyDickson { .. } => o.coords()[0].clone(),
        }
    };
    let diag = [
        scalar_of(&y[0][0]),
        scalar_of(&y[1][1]),
        scalar_of(&y[2][2]),
    ];
    let off = [y[1][2].clone(), y[2][0].clone(), y[0][1].clone()];
    let _ = ctx;
    Ok(alg.from_parts(diag, off))
}

/// Octonion with prescribed norm, for nilpotent construction: solves
/// N_C(z) = target by direct formula (Zorn) or bounded search.
fn represent_norm(
    oct: &Oct<FieldScalar>,
    target: &FieldScalar,
) -> Option<OctonionElement<FieldScalar>> {
    let field = oct.ctx().field().clone();
    match oct.presentation() {
        Presentation::Zorn => {
            // [[target, 0], [0, 1]] has norm target
            let mut c = vec![FieldOps::zero(&field); 8];
            c[0] = target.clone();
            c[7] = field.one();
            Some(oct.from_coords(c))
        }
        Presentation::CayleyDickson { .. } => {
            let d = oct.norm_diagonal();
            // single coordinate: d_i t^2 = target
            for i in 0..8 {
                if let Some(di) = d[i].inv() {
                    if let Some(t) = target.mul(&di).sqrt() {
                        let mut c = vec![FieldOps::zero(&field); 8];
                        c[i] = t;
                        return Some(oct.from_coords(c));
                    }
                }
            }
            // two coordinates, bounded
            let candidates: Vec<FieldScalar> = if field.is_rationals() {
                (-40..=40i64).map(|n| field.int(n)).collect()
            } else {
                field.elements()
            };
            for i in 0..8 {
                for j in i + 1..8 {
                    for x in &candidates {
                        let rem = target.sub(&d[i].mul(&x.mul(x)));
                        if let Some(dj) = d[j].inv() {
                            if let Some(y) = rem.mul(&dj).sqrt() {
                                let mut c = vec![FieldOps::zero(&field); 8];
                                c[i] = x.clone();
                                c[j] = y;
                                return Some(oct.from_coords(c));
                            }
                        }
                    }
                }
            }
            None
        }
    }
}

/// A nonzero nilpotent element, when one can be found.
///
/// Tries, in order: an off-diagonal entry of norm zero; a rank-2 pattern
/// alpha e_jj - alpha e_ll + z with N_C(z) = -alpha^2 / (gamma_j gamma_l).
/// Returns `NoneExist` when nilpotents provably do not exist (definite
/// invariants over Q), otherwise `SearchBudgetExhausted` on failure.
pub fn find_nilpotent(alg: &Alb<FieldScalar>) -> Result<AlbertElement<FieldScalar>> {
    let oct = alg.octonions().clone();
    let field = oct.ctx().field().clone();
    if let Ok(z) = norm_zero_element(&oct) {
        return Ok(alg.off_element(0, z));
    }
    // rank-2 pattern over each slot
    let g = alg.gamma();
    for i in 0..3 {
        let (j, l) = cyc(i);
        let gjl = g[j].mul(&g[l]);
        let Some(gjl_inv) = gjl.inv() else { continue };
        for alpha_n in 1..=20i64 {
            let alpha = field.int(alpha_n);
            let target = alpha.mul(&alpha).neg().mul(&gjl_inv);
            if let Some(z) = represent_norm(&oct, &target) {
                let mut x = alg.off_element(i, z);
                x.diag[j] = alpha.clone();
                x.diag[l] = alpha.neg();
                debug_assert!(x.is_nilpotent());
                return Ok(x);
            }
        }
    }
    // Over Q with a definite octonion norm and all gamma_j gamma_l > 0 the
    // quadratic trace is definite on trace-zero elements, so no nonzero
    // nilpotents exist.
    if field.is_rationals() {
        let d = oct.norm_diagonal();
        let norm_definite_pos = d.iter().all(|c| c.sign() == Some(1));
        let gammas_pos = (0..3).all(|i| {
            let (j, l) = cyc(i);
            g[j].mul(&g[l]).sign() == Some(1)
        });
        if norm_definite_pos && gammas_pos {
            return Err(Error::NoneExist);
        }
    }
    Err(Error::SearchBudgetExhausted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::FieldDescriptor;
    use crate::linalg::Matrix;
    use crate::octonion::OctonionAlgebra;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn split_albert(
        field: &crate::fieldcore::Field,
        gamma: [i64; 3],
    ) -> Alb<FieldScalar> {
        let oct = OctonionAlgebra::zorn(&field.one());
        AlbertAlgebra::new(
            oct,
            [
                field.int(gamma[0]),
                field.int(gamma[1]),
                field.int(gamma[2]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn unit_properties() {
        let q = FieldDescriptor::rationals();
        let a = split_albert(&q, [1, 2, -3]);
        let one = a.one_el();
        assert_eq!(one.norm(), q.one());
        assert_eq!(one.trace(), q.int(3));
        assert_eq!(one.quad_trace(), q.int(3));
        assert_eq!(one.sharp(), one);
    }

    #[test]
    fn adjoint_identity_random() {
        let q = FieldDescriptor::rationals();
        let a = split_albert(&q, [1, 2, -3]);
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..50 {
            let x = a.sample_with(|| q.sample(&mut rng, 5));
            // x## = N(x) x
            assert_eq!(x.sharp().sharp(), x.scale(&x.norm()));
            // T(x#, x) = 3 N(x)
            assert_eq!(
                x.sharp().trace_bilinear(&x),
                q.int(3).mul(&x.norm())
            );
            // S(x) = T(x#)
            assert_eq!(x.quad_trace(), x.sharp().trace());
        }
    }

    #[test]
    fn cross_is_sharp_bilinearization() {
        let q = FieldDescriptor::rationals();
        let a = split_albert(&q, [2, 1, 5]);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let x = a.sample_with(|| q.sample(&mut rng, 5));
            let y = a.sample_with(|| q.sample(&mut rng, 5));
            let lhs = x.add(&y).sharp().sub(&x.sharp()).sub(&y.sharp());
            assert_eq!(lhs, x.cross(&y));
        }
    }

    #[test]
    fn square_consistency() {
        let q = FieldDescriptor::rationals();
        let a = split_albert(&q, [1, 1, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..50 {
            let x = a.sample_with(|| q.sample(&mut rng, 5));
            // x^2 = x# + T(x) x - S(x) 1
            let rhs = x
                .sharp()
                .add(&x.scale(&x.trace()))
                .sub(&a.one_el().scale(&x.quad_trace()));
            assert_eq!(x.square(), rhs);
            // minimal equation x^3 - T x^2 + S x - N 1 = 0
            let lhs = x
                .power(3)
                .sub(&x.square().scale(&x.trace()))
                .add(&x.scale(&x.quad_trace()))
                .sub(&a.one_el().scale(&x.norm()));
            assert!(lhs.is_zero());
        }
    }

    #[test]
    fn diag_idempotents_and_peirce() {
        let q = FieldDescriptor::rationals();
        let a = split_albert(&q, [1, 2, -3]);
        let e = a.diag_unit(0);
        assert!(e.is_primitive_idempotent());
        let p = peirce_decomposition(&a, &e).unwrap();
        assert_eq!(p.two.dim(), 1);
        assert_eq!(p.one.dim(), 16);
        assert_eq!(p.zero.dim(), 10);
        assert!(p.two.contains(&e.to_vec(), &q.one()));
        // non-idempotent rejected
        let x = a.one_el().scale(&q.int(2));
        assert_eq!(
            peirce_decomposition(&a, &x).unwrap_err(),
            Error::NotPrimitiveIdempotent
        );
    }

    #[test]
    fn peirce_membership_predicates() {
        // A1(e) = { x : T(x) = 0, e x x = 0 },
        // A0(e) = { x : e x x = T(x)(1 - e) - x }
        let q = FieldDescriptor::rationals();
        let a = split_albert(&q, [1, 2, -3]);
        let e = a.diag_unit(1);
        let f = a.one_el().sub(&e);
        let p = peirce_decomposition(&a, &e).unwrap();
        let one = q.one();
        for v in p.one.basis() {
            let x = a.from_vec(v);
            assert!(x.trace().is_zero());
            assert!(e.cross(&x).is_zero());
        }
        for v in p.zero.basis() {
            let x = a.from_vec(v);
            let rhs = f.scale(&x.trace()).sub(&x);
            assert_eq!(e.cross(&x), rhs);
            // x# = S(x) e on A0(e)
            assert_eq!(x.sharp(), e.scale(&x.quad_trace()));
        }
        let _ = one;
    }

    #[test]
    fn classification() {
        let q = FieldDescriptor::rationals();
        let a = split_albert(&q, [1, 1, 1]);
        assert_eq!(classify(&a.zero_el()), ElementClass::Zero);
        assert_eq!(classify(&a.one_el()), ElementClass::Invertible);
        assert_eq!(classify(&a.diag_unit(0)), ElementClass::Singular);
        let r2 = a.diag_unit(0).add(&a.diag_unit(1));
        assert_eq!(classify(&r2), ElementClass::RankTwo);
        let n = find_nilpotent(&a).unwrap();
        assert!(n.is_nilpotent());
        assert!(matches!(
            classify(&n),
            ElementClass::Nilpotent | ElementClass::NilpotentSquareZero
        ));
    }

    #[test]
    fn nilpotent_search_definite_case() {
        let q = FieldDescriptor::rationals();
        let o = OctonionAlgebra::cayley_dickson(q.int(-1), q.int(-1), q.int(-1)).unwrap();
        let a = AlbertAlgebra::new(o, [q.one(), q.one(), q.one()]).unwrap();
        assert_eq!(find_nilpotent(&a).unwrap_err(), Error::NoneExist);

        let o2 = OctonionAlgebra::cayley_dickson(q.int(-1), q.int(-1), q.int(-1)).unwrap();
        let a2 = AlbertAlgebra::new(o2, [q.one(), q.one(), q.int(-1)]).unwrap();
        let n = find_nilpotent(&a2).unwrap();
        assert!(n.is_nilpotent());
        assert!(!n.is_zero());
    }

    #[test]
    fn gl3_similarity() {
        let q = FieldDescriptor::rationals();
        let a = split_albert(&q, [1, 1, 1]);
        let rows = vec![
            vec![q.int(1), q.int(2), q.int(0)],
            vec![q.int(0), q.int(1), q.int(3)],
            vec![q.int(1), q.int(0), q.int(1)],
        ];
        let g = Matrix::from_rows(rows, &q.one());
        let det = g.det();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..25 {
            let x = a.sample_with(|| q.sample(&mut rng, 5));
            let y = gl3_action(&a, &g, &x).unwrap();
            assert_eq!(y.norm(), det.mul(&det).mul(&x.norm()));
            // linearity
            let x2 = a.sample_with(|| q.sample(&mut rng, 5));
            let lhs = gl3_action(&a, &g, &x.add(&x2)).unwrap();
            assert_eq!(lhs, y.add(&gl3_action(&a, &g, &x2).unwrap()));
        }
        let b = split_albert(&q, [1, 2, 1]);
        assert_eq!(
            gl3_action(&b, &g, &b.one_el()).unwrap_err(),
            Error::GammaNotUnit
        );
    }

    #[test]
    fn zero_gamma_rejected() {
        let q = FieldDescriptor::rationals();
        let oct = OctonionAlgebra::zorn(&q.one());
        assert_eq!(
            AlbertAlgebra::new(oct, [q.one(), FieldOps::zero(&q), q.one()]).unwrap_err(),
            Error::ZeroGamma
        );
    }
}
