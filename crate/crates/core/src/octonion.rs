//! Octonion algebras: the split Zorn vector-matrix presentation and the
//! Cayley-Dickson double of a quaternion algebra.
//!
//! Both presentations are generic over the scalar ring so the same code
//! serves a base field k and a quadratic etale extension of it.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fieldcore::{FieldOps, FieldScalar};
use crate::scalar::Scalar;

pub type Oct<S> = Arc<OctonionAlgebra<S>>;

#[derive(Debug, Clone, PartialEq)]
pub enum Presentation<S: Scalar> {
    /// Zorn vector matrices [[a, u], [v, b]], the split octonions.
    Zorn,
    /// Cayley-Dickson double of the quaternion algebra (a, b) by c:
    /// i^2 = a, j^2 = b, ij = k, l^2 = c.  Characteristic != 2 only.
    CayleyDickson { a: S, b: S, c: S },
}

#[derive(Debug, Clone, PartialEq)]
pub struct OctonionAlgebra<S: Scalar> {
    ctx: S,
    pres: Presentation<S>,
}

/// Octonion with eight coordinates.
///
/// Zorn basis order: a, u1, u2, u3, v1, v2, v3, b.
/// Cayley-Dickson basis order: 1, i, j, k, l, il, jl, kl.
#[derive(Debug, Clone)]
pub struct OctonionElement<S: Scalar> {
    alg: Oct<S>,
    c: Vec<S>,
}

impl<S: Scalar> PartialEq for OctonionElement<S> {
    fn eq(&self, other: &Self) -> bool {
        *self.alg == *other.alg && self.c == other.c
    }
}

impl<S: Scalar> OctonionAlgebra<S> {
    /// Split octonions as Zorn vector matrices; valid in any characteristic.
    pub fn zorn(ctx: &S) -> Oct<S> {
        Arc::new(OctonionAlgebra {
            ctx: ctx.clone(),
            pres: Presentation::Zorn,
        })
    }

    /// Cayley-Dickson octonions with unit parameters a, b, c.
    pub fn cayley_dickson(a: S, b: S, c: S) -> Result<Oct<S>> {
        if a.from_i64(2).is_zero() {
            return Err(Error::CayleyDicksonCharTwo);
        }
        if a.is_zero() || b.is_zero() || c.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(Arc::new(OctonionAlgebra {
            ctx: a.zero(),
            pres: Presentation::CayleyDickson { a, b, c },
        }))
    }

    pub fn is_split_presentation(&self) -> bool {
        matches!(self.pres, Presentation::Zorn)
    }

    pub fn presentation(&self) -> &Presentation<S> {
        &self.pres
    }

    pub fn ctx(&self) -> &S {
        &self.ctx
    }

    /// Diagonalization of the norm form in the coordinate basis, when one
    /// exists: the Cayley-Dickson basis is norm-orthogonal; for Zorn we
    /// return a hyperbolic diagonalization (valid away from characteristic 2).
    pub fn norm_diagonal(&self) -> Vec<S> {
        let one = self.ctx.one();
        match &self.pres {
            Presentation::Zorn => {
                let m1 = one.neg();
                vec![
                    one.clone(),
                    m1.clone(),
                    one.clone(),
                    m1.clone(),
                    one.clone(),
                    m1.clone(),
                    one,
                    m1,
                ]
            }
            Presentation::CayleyDickson { a, b, c } => {
                let ab = a.mul(b);
                let quat = [one.clone(), a.neg(), b.neg(), ab];
                let mut out: Vec<S> = quat.to_vec();
                for q in &quat {
                    out.push(c.neg().mul(q));
                }
                out
            }
        }
    }

    /// Rebuild the same presentation over another scalar ring.
    pub fn map_scalars<T: Scalar>(&self, t_ctx: &T, mut f: impl FnMut(&S) -> T) -> Oct<T> {
        let pres = match &self.pres {
            Presentation::Zorn => Presentation::Zorn,
            Presentation::CayleyDickson { a, b, c } => Presentation::CayleyDickson {
                a: f(a),
                b: f(b),
                c: f(c),
            },
        };
        Arc::new(OctonionAlgebra {
            ctx: t_ctx.clone(),
            pres,
        })
    }
}

/// Construction helpers on the shared handle.
pub trait OctOps<S: Scalar> {
    fn zero_el(&self) -> OctonionElement<S>;
    fn one_el(&self) -> OctonionElement<S>;
    fn basis_el(&self, i: usize) -> OctonionElement<S>;
    fn from_coords(&self, c: Vec<S>) -> OctonionElement<S>;
    fn from_scalar(&self, s: &S) -> OctonionElement<S>;
    fn sample_with(&self, f: impl FnMut() -> S) -> OctonionElement<S>;
}

impl<S: Scalar> OctOps<S> for Oct<S> {
    fn zero_el(&self) -> OctonionElement<S> {
        OctonionElement {
            alg: self.clone(),
            c: vec![self.ctx.zero(); 8],
        }
    }

    fn one_el(&self) -> OctonionElement<S> {
        let mut e = self.zero_el();
        match self.pres {
            Presentation::Zorn => {
                e.c[0] = self.ctx.one();
                e.c[7] = self.ctx.one();
            }
            Presentation::CayleyDickson { .. } => e.c[0] = self.ctx.one(),
        }
        e
    }

    fn basis_el(&self, i: usize) -> OctonionElement<S> {
        assert!(i < 8);
        let mut e = self.zero_el();
        e.c[i] = self.ctx.one();
        e
    }

    fn from_coords(&self, c: Vec<S>) -> OctonionElement<S> {
        assert_eq!(c.len(), 8);
        OctonionElement {
            alg: self.clone(),
            c,
        }
    }

    fn from_scalar(&self, s: &S) -> OctonionElement<S> {
        let mut e = self.zero_el();
        match self.pres {
            Presentation::Zorn => {
                e.c[0] = s.clone();
                e.c[7] = s.clone();
            }
            Presentation::CayleyDickson { .. } => e.c[0] = s.clone(),
        }
        e
    }

    fn sample_with(&self, mut f: impl FnMut() -> S) -> OctonionElement<S> {
        OctonionElement {
            alg: self.clone(),
            c: (0..8).map(|_| f()).collect(),
        }
    }
}

fn dot3<S: Scalar>(u: &[S], v: &[S]) -> S {
    let mut acc = u[0].mul(&v[0]);
    acc = acc.add(&u[1].mul(&v[1]));
    acc.add(&u[2].mul(&v[2]))
}

fn cross3<S: Scalar>(u: &[S], v: &[S]) -> [S; 3] {
    [
        u[1].mul(&v[2]).sub(&u[2].mul(&v[1])),
        u[2].mul(&v[0]).sub(&u[0].mul(&v[2])),
        u[0].mul(&v[1]).sub(&u[1].mul(&v[0])),
    ]
}

/// Quaternion product on coordinates (1, i, j, k) with i^2 = a, j^2 = b.
fn quat_mul<S: Scalar>(a: &S, b: &S, x: &[S], y: &[S]) -> [S; 4] {
    let ab = a.mul(b);
    let w = x[0]
        .mul(&y[0])
        .add(&a.mul(&x[1].mul(&y[1])))
        .add(&b.mul(&x[2].mul(&y[2])))
        .sub(&ab.mul(&x[3].mul(&y[3])));
    let xi = x[0]
        .mul(&y[1])
        .add(&x[1].mul(&y[0]))
        .sub(&b.mul(&x[2].mul(&y[3]).sub(&x[3].mul(&y[2]))));
    let yj = x[0]
        .mul(&y[2])
        .add(&x[2].mul(&y[0]))
        .add(&a.mul(&x[1].mul(&y[3]).sub(&x[3].mul(&y[1]))));
    let zk = x[0]
        .mul(&y[3])
        .add(&x[3].mul(&y[0]))
        .add(&x[1].mul(&y[2]).sub(&x[2].mul(&y[1])));
    [w, xi, yj, zk]
}

fn quat_conj<S: Scalar>(x: &[S]) -> [S; 4] {
    [x[0].clone(), x[1].neg(), x[2].neg(), x[3].neg()]
}

impl<S: Scalar> OctonionElement<S> {
    pub fn algebra(&self) -> &Oct<S> {
        &self.alg
    }

    pub fn coords(&self) -> &[S] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(*self.alg, *other.alg, "algebra mismatch");
        OctonionElement {
            alg: self.alg.clone(),
            c: self
                .c
                .iter()
                .zip(&other.c)
                .map(|(x, y)| x.add(y))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(*self.alg, *other.alg, "algebra mismatch");
        OctonionElement {
            alg: self.alg.clone(),
            c: self
                .c
                .iter()
                .zip(&other.c)
                .map(|(x, y)| x.sub(y))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        OctonionElement {
            alg: self.alg.clone(),
            c: self.c.iter().map(|x| x.neg()).collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        OctonionElement {
            alg: self.alg.clone(),
            c: self.c.iter().map(|x| s.mul(x)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(*self.alg, *other.alg, "algebra mismatch");
        let c = match &self.alg.pres {
            Presentation::Zorn => {
                let (a, u, v, b) = (&self.c[0], &self.c[1..4], &self.c[4..7], &self.c[7]);
                let (a2, u2, v2, b2) = (&other.c[0], &other.c[1..4], &other.c[4..7], &other.c[7]);
                let tl = a.mul(a2).add(&dot3(u, v2));
                let br = b.mul(b2).add(&dot3(v, u2));
                let vv = cross3(v, v2);
                let tr: Vec<S> = (0..3)
                    .map(|i| a.mul(&u2[i]).add(&b2.mul(&u[i])).sub(&vv[i]))
                    .collect();
                let uu = cross3(u, u2);
                let bl: Vec<S> = (0..3)
                    .map(|i| a2.mul(&v[i]).add(&b.mul(&v2[i])).add(&uu[i]))
                    .collect();
                vec![
                    tl,
                    tr[0].clone(),
                    tr[1].clone(),
                    tr[2].clone(),
                    bl[0].clone(),
                    bl[1].clone(),
                    bl[2].clone(),
                    br,
                ]
            }
            Presentation::CayleyDickson { a, b, c } => {
                // (p, q)(r, s) = (p r + c conj(s) q, s p + q conj(r))
                let p = &self.c[0..4];
                let q = &self.c[4..8];
                let r = &other.c[0..4];
                let s = &other.c[4..8];
                let pr = quat_mul(a, b, p, r);
                let sq = quat_mul(a, b, &quat_conj(s), q);
                let sp = quat_mul(a, b, s, p);
                let qr = quat_mul(a, b, q, &quat_conj(r));
                let mut out = Vec::with_capacity(8);
                for i in 0..4 {
                    out.push(pr[i].add(&c.mul(&sq[i])));
                }
                for i in 0..4 {
                    out.push(sp[i].add(&qr[i]));
                }
                out
            }
        };
        OctonionElement {
            alg: self.alg.clone(),
            c,
        }
    }

    /// Standard involution x -> xbar.
    pub fn conj(&self) -> Self {
        let c = match self.alg.pres {
            Presentation::Zorn => {
                let mut c: Vec<S> = self.c.iter().map(|x| x.neg()).collect();
                c[0] = self.c[7].clone();
                c[7] = self.c[0].clone();
                c
            }
            Presentation::CayleyDickson { .. } => {
                let mut c: Vec<S> = self.c.iter().map(|x| x.neg()).collect();
                c[0] = self.c[0].clone();
                c
            }
        };
        OctonionElement {
            alg: self.alg.clone(),
            c,
        }
    }

    /// Norm N(x) = x xbar.
    pub fn norm(&self) -> S {
        match &self.alg.pres {
            Presentation::Zorn => {
                let (a, u, v, b) = (&self.c[0], &self.c[1..4], &self.c[4..7], &self.c[7]);
                a.mul(b).sub(&dot3(u, v))
            }
            Presentation::CayleyDickson { .. } => {
                let d = self.alg.norm_diagonal();
                let mut acc = self.c[0].zero();
                for i in 0..8 {
                    acc = acc.add(&d[i].mul(&self.c[i].mul(&self.c[i])));
                }
                acc
            }
        }
    }

    /// Trace T(x) = x + xbar.
    pub fn trace(&self) -> S {
        match self.alg.pres {
            Presentation::Zorn => self.c[0].add(&self.c[7]),
            Presentation::CayleyDickson { .. } => self.c[0].double(),
        }
    }

    /// Bilinearized norm N(x, y) = N(x + y) - N(x) - N(y).
    pub fn norm_bilinear(&self, other: &Self) -> S {
        let s = self.add(other).norm();
        s.sub(&self.norm()).sub(&other.norm())
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        let ni = n.inv()?;
        Some(self.conj().scale(&ni))
    }

    pub fn map_scalars<T: Scalar>(&self, target: &Oct<T>, mut f: impl FnMut(&S) -> T) -> OctonionElement<T> {
        OctonionElement {
            alg: target.clone(),
            c: self.c.iter().map(|x| f(x)).collect(),
        }
    }
}

/// All elements of an octonion algebra over a finite field (small fields
/// only; used by exhaustive tests).
pub fn all_elements(alg: &Oct<FieldScalar>) -> Vec<OctonionElement<FieldScalar>> {
    let field = alg.ctx().field().clone();
    let elems = field.elements();
    let q = elems.len();
    assert!(q > 0 && q.pow(8) <= 1 << 26, "field too large to enumerate");
    let mut out = Vec::with_capacity(q.pow(8));
    let mut idx = vec![0usize; 8];
    loop {
        out.push(alg.from_coords(idx.iter().map(|&i| elems[i].clone()).collect()));
        let mut pos = 0;
        loop {
            idx[pos] += 1;
            if idx[pos] < q {
                break;
            }
            idx[pos] = 0;
            pos += 1;
            if pos == 8 {
                return out;
            }
        }
    }
}

/// A nonzero octonion of norm zero, or a proof-backed refusal.
///
/// Returns `NoneExist` when the norm form is provably anisotropic (definite
/// over Q), `SearchBudgetExhausted` when the bounded search gives up.
pub fn norm_zero_element(alg: &Oct<FieldScalar>) -> Result<OctonionElement<FieldScalar>> {
    let field = alg.ctx().field().clone();
    match &alg.pres {
        Presentation::Zorn => Ok(alg.basis_el(1)),
        Presentation::CayleyDickson { .. } => {
            let d = alg.norm_diagonal();
            if field.is_rationals() {
                let signs: Vec<i32> = d.iter().map(|x| x.sign().unwrap()).collect();
                if signs.iter().all(|&s| s > 0) || signs.iter().all(|&s| s < 0) {
                    return Err(Error::NoneExist);
                }
            }
            // two-coordinate solutions: d_i + d_j t^2 = 0
            for i in 0..8 {
                for j in 0..8 {
                    if i == j {
                        continue;
                    }
                    // want t with d_i + d_j t^2 = 0, i.e. t^2 = -d_i/d_j
                    let target = match d[j].inv() {
                        Some(dj_inv) => d[i].neg().mul(&dj_inv),
                        None => continue,
                    };
                    if let Some(t) = target.sqrt() {
                        let mut c = vec![FieldOps::zero(&field); 8];
                        c[i] = field.one();
                        c[j] = t;
                        return Ok(alg.from_coords(c));
                    }
                }
            }
            // three-coordinate bounded search: d_i x^2 + d_j y^2 + d_k = 0
            let bound: i64 = if field.is_rationals() { 40 } else { 0 };
            let candidates: Vec<FieldScalar> = if field.is_rationals() {
                (-bound..=bound).map(|n| field.int(n)).collect()
            } else {
                field.elements()
            };
            for i in 0..8 {
                for j in i + 1..8 {
                    for k in 0..8 {
                        if k == i || k == j {
                            continue;
                        }
                        for x in &candidates {
                            for y in &candidates {
                                let val = d[i]
                                    .mul(&x.mul(x))
                                    .add(&d[j].mul(&y.mul(y)))
                                    .add(&d[k]);
                                if Scalar::is_zero(&val) {
                                    let mut c = vec![FieldOps::zero(&field); 8];
                                    c[i] = x.clone();
                                    c[j] = y.clone();
                                    c[k] = field.one();
                                    return Ok(alg.from_coords(c));
                                }
                            }
                        }
                    }
                }
            }
            Err(Error::SearchBudgetExhausted)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::FieldDescriptor;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rational_algebras() -> Vec<Oct<FieldScalar>> {
        let q = FieldDescriptor::rationals();
        vec![
            OctonionAlgebra::zorn(&q.one()),
            OctonionAlgebra::cayley_dickson(q.int(-1), q.int(-1), q.int(-1)).unwrap(),
            OctonionAlgebra::cayley_dickson(q.int(2), q.int(3), q.int(-5)).unwrap(),
        ]
    }

    #[test]
    fn unit_and_conjugation() {
        for alg in rational_algebras() {
            let one = alg.one_el();
            for i in 0..8 {
                let e = alg.basis_el(i);
                assert_eq!(one.mul(&e), e);
                assert_eq!(e.mul(&one), e);
                assert_eq!(e.conj().conj(), e);
            }
            assert_eq!(one.norm(), alg.ctx().one());
        }
    }

    #[test]
    fn composition_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for alg in rational_algebras() {
            let q = alg.ctx().field().clone();
            for _ in 0..300 {
                let x = alg.sample_with(|| q.sample(&mut rng, 9));
                let y = alg.sample_with(|| q.sample(&mut rng, 9));
                assert_eq!(x.mul(&y).norm(), x.norm().mul(&y.norm()));
                // alternative laws
                assert_eq!(x.mul(&x.mul(&y)), x.mul(&x).mul(&y));
                assert_eq!(x.mul(&y).mul(&y), x.mul(&y.mul(&y)));
                // x xbar = N(x) 1
                assert_eq!(x.mul(&x.conj()), alg.from_scalar(&x.norm()));
                // trace/norm of the characteristic equation x^2 - T x + N = 0
                let lhs = x.mul(&x).sub(&x.scale(&x.trace())).add(&alg.from_scalar(&x.norm()));
                assert!(lhs.is_zero());
            }
        }
    }

    #[test]
    fn hamilton_table() {
        let q = FieldDescriptor::rationals();
        let o = OctonionAlgebra::cayley_dickson(q.int(-1), q.int(-1), q.int(-1)).unwrap();
        let i = o.basis_el(1);
        let j = o.basis_el(2);
        let k = o.basis_el(3);
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), k.neg());
        assert_eq!(i.mul(&i), o.one_el().neg());
        let l = o.basis_el(4);
        assert_eq!(l.mul(&l), o.one_el().neg());
        // norm is the sum of eight squares
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let x = o.sample_with(|| q.sample(&mut rng, 9));
        let expected = x
            .coords()
            .iter()
            .fold(FieldOps::zero(&q), |acc, c| acc.add(&c.mul(c)));
        assert_eq!(x.norm(), expected);
    }

    #[test]
    fn zorn_norm_and_inverse() {
        let q = FieldDescriptor::rationals();
        let o = OctonionAlgebra::zorn(&q.one());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut inverted = 0;
        for _ in 0..200 {
            let x = o.sample_with(|| q.sample(&mut rng, 9));
            match x.inv() {
                Some(xi) => {
                    assert_eq!(x.mul(&xi), o.one_el());
                    assert_eq!(xi.mul(&x), o.one_el());
                    inverted += 1;
                }
                None => assert!(x.norm().is_zero()),
            }
        }
        assert!(inverted > 150);
    }

    #[test]
    fn norm_zero_elements() {
        let q = FieldDescriptor::rationals();
        let zorn = OctonionAlgebra::zorn(&q.one());
        let z = norm_zero_element(&zorn).unwrap();
        assert!(!z.is_zero());
        assert!(z.norm().is_zero());

        let definite = OctonionAlgebra::cayley_dickson(q.int(-1), q.int(-1), q.int(-1)).unwrap();
        assert_eq!(norm_zero_element(&definite).unwrap_err(), Error::NoneExist);

        let indef = OctonionAlgebra::cayley_dickson(q.int(2), q.int(3), q.int(-5)).unwrap();
        let z = norm_zero_element(&indef).unwrap();
        assert!(!z.is_zero());
        assert!(z.norm().is_zero());

        let f5 = FieldDescriptor::prime(5).unwrap();
        let cd5 = OctonionAlgebra::cayley_dickson(f5.int(2), f5.int(3), f5.int(4)).unwrap();
        let z = norm_zero_element(&cd5).unwrap();
        assert!(!z.is_zero());
        assert!(z.norm().is_zero());
    }

    #[test]
    fn char_two_cd_rejected() {
        let f2 = FieldDescriptor::prime(2).unwrap();
        assert_eq!(
            OctonionAlgebra::cayley_dickson(f2.one(), f2.one(), f2.one()).unwrap_err(),
            Error::CayleyDicksonCharTwo
        );
    }

    #[test]
    fn zorn_gf2_composition_exhaustive() {
        let f2 = FieldDescriptor::prime(2).unwrap();
        let o = OctonionAlgebra::zorn(&f2.one());
        let elems = all_elements(&o);
        assert_eq!(elems.len(), 256);
        for x in &elems {
            for y in &elems {
                assert_eq!(x.mul(y).norm(), x.norm().mul(&y.norm()));
            }
        }
    }

    #[test]
    fn bilinear_norm_symmetric_associative_trace() {
        // N(xy, z) relations sanity: T(xy) = T(yx), N(x,y) = N(y,x)
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for alg in rational_algebras() {
            let q = alg.ctx().field().clone();
            for _ in 0..100 {
                let x = alg.sample_with(|| q.sample(&mut rng, 9));
                let y = alg.sample_with(|| q.sample(&mut rng, 9));
                assert_eq!(x.norm_bilinear(&y), y.norm_bilinear(&x));
                assert_eq!(x.mul(&y).trace(), y.mul(&x).trace());
                // N(x, y) = T(x conj(y))
                assert_eq!(x.norm_bilinear(&y), x.mul(&y.conj()).trace());
            }
        }
    }

    #[test]
    fn map_scalars_roundtrip() {
        let q = FieldDescriptor::rationals();
        let f5 = FieldDescriptor::prime(5).unwrap();
        let o = OctonionAlgebra::cayley_dickson(q.int(2), q.int(3), q.int(-5)).unwrap();
        let o5 = o.map_scalars(&f5.one(), |x| {
            f5.from_bigrational(x.as_rational().unwrap().clone()).unwrap()
        });
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let x = o.sample_with(|| q.int(rng.gen_range(-9..9)));
        let x5 = x.map_scalars(&o5, |c| {
            f5.from_bigrational(c.as_rational().unwrap().clone()).unwrap()
        });
        let n5 = f5
            .from_bigrational(x.norm().as_rational().unwrap().clone())
            .unwrap();
        assert_eq!(x5.norm(), n5);
    }
}
