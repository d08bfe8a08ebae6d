//! Inner-ideal geometry of an Albert algebra: recognition of inner ideals,
//! singular subspaces, hyperlines, the psi pairing between inner ideals,
//! and the flag conditions on the associated hermitian triple.

use rand::Rng;

use crate::albert::{peirce_decomposition, Alb, AlbOps, AlbertElement};
use crate::error::{Error, Result};
use crate::fieldcore::{FieldOps, FieldScalar};
use crate::hermtriple::{KEl, Triple};
use crate::linalg::{vec_add, vec_scale, Matrix, Subspace};
use crate::scalar::Scalar;

type El = AlbertElement<FieldScalar>;

/// Classification of a subspace of the 27-dimensional carrier.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case", tag = "tag")]
pub enum IdealKind {
    /// Every element has vanishing adjoint; dimensions 1 through 6.
    /// `maximal_5prime` marks 5-dimensional spaces that could not be
    /// extended within the search budget.
    Singular { dim: usize, maximal_5prime: bool },
    /// x cross A for a singular x; dimension 10.
    Hyperline,
    /// Inner but neither singular nor a hyperline (only the zero space and
    /// the whole algebra).
    Improper,
    NotInner,
}

fn subspace_elements(
    x_space: &Subspace<FieldScalar>,
    alg: &Alb<FieldScalar>,
) -> Vec<El> {
    x_space
        .basis()
        .iter()
        .map(|v| alg.from_vec(v))
        .collect()
}

fn contains_el(x_space: &Subspace<FieldScalar>, el: &El, ctx: &FieldScalar) -> bool {
    x_space.contains(&el.to_vec(), ctx)
}

/// U_{x,y} z = U_{x+y} z - U_x z - U_y z.
fn u_polar(x: &El, y: &El, z: &El) -> El {
    x.add(y).u_op(z).sub(&x.u_op(z)).sub(&y.u_op(z))
}

/// True iff every element of the span of `gens` has vanishing adjoint:
/// the quadratic expansion reduces this to the generators and their
/// pairwise crosses.
fn span_is_singular(gens: &[El]) -> bool {
    for (i, g) in gens.iter().enumerate() {
        if !g.sharp().is_zero() {
            return false;
        }
        for h in gens.iter().skip(i + 1) {
            if !g.cross(h).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Decide innerness of X (U_x A lands in X for all x in X) and classify.
pub fn is_inner_ideal(
    x_space: &Subspace<FieldScalar>,
    alg: &Alb<FieldScalar>,
) -> Result<IdealKind> {
    if x_space.ambient() != 27 {
        return Err(Error::DimensionMismatch {
            expected: 27,
            got: x_space.ambient(),
        });
    }
    let field = alg.ctx().field();
    let ctx = field.one();
    let dim = x_space.dim();
    if dim == 0 || dim == 27 {
        return Ok(IdealKind::Improper);
    }
    let gens = subspace_elements(x_space, alg);
    let ambient = alg.basis();
    // basis + polarization: sufficient over every field
    let mut inner = 'outer: {
        for (i, g) in gens.iter().enumerate() {
            for a in &ambient {
                if !contains_el(x_space, &g.u_op(a), &ctx) {
                    break 'outer false;
                }
            }
            for h in gens.iter().skip(i + 1) {
                for a in &ambient {
                    if !contains_el(x_space, &u_polar(g, h, a), &ctx) {
                        break 'outer false;
                    }
                }
            }
        }
        true
    };
    // over GF(2) the criterion can miss inner ideals whose cross terms only
    // cancel in sums, so fall back to enumerating X when feasible
    if !inner && field.order() == Some(2) && dim <= 14 {
        inner = true;
        'enumerate: for mask in 1u64..(1u64 << dim) {
            let mut x = alg.zero_el();
            for (i, g) in gens.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    x = x.add(g);
                }
            }
            for a in &ambient {
                if !contains_el(x_space, &x.u_op(a), &ctx) {
                    inner = false;
                    break 'enumerate;
                }
            }
        }
    }
    if !inner {
        return Ok(IdealKind::NotInner);
    }
    if span_is_singular(&gens) {
        let maximal_5prime = dim == 5 && !singular_extendable(x_space, alg, 4000);
        return Ok(IdealKind::Singular {
            dim,
            maximal_5prime,
        });
    }
    if dim == 10 {
        // hyperlines are x cross A for singular x; candidates come from psi
        if let Ok(p) = psi(x_space, alg) {
            if p.dim() == 1 {
                let x = alg.from_vec(&p.basis()[0]);
                if !x.is_zero() && x.sharp().is_zero() && hyperline(&x, alg)? == *x_space {
                    return Ok(IdealKind::Hyperline);
                }
            }
        }
    }
    Ok(IdealKind::Improper)
}

/// The image of y -> x cross y for singular x; always 10-dimensional for
/// nonzero singular x.
pub fn hyperline(x: &El, alg: &Alb<FieldScalar>) -> Result<Subspace<FieldScalar>> {
    if x.is_zero() || !x.sharp().is_zero() {
        return Err(Error::NotSingular);
    }
    let ctx = alg.ctx().field().one();
    let vectors: Vec<Vec<FieldScalar>> = alg
        .basis()
        .iter()
        .map(|b| x.cross(b).to_vec())
        .collect();
    Ok(Subspace::span(&vectors, 27, &ctx))
}

/// Functionals vanishing on X: kernel of the basis matrix of X.
fn vanishing_functionals(
    x_space: &Subspace<FieldScalar>,
    ctx: &FieldScalar,
) -> Vec<Vec<FieldScalar>> {
    let rows = x_space.basis().to_vec();
    if rows.is_empty() {
        return (0..x_space.ambient())
            .map(|i| {
                let mut v = vec![Scalar::zero(ctx); x_space.ambient()];
                v[i] = ctx.clone();
                v
            })
            .collect();
    }
    let m = Matrix::from_rows(rows, ctx);
    m.kernel()
}

/// psi(X): the space of y with {X, y, A} inside X, filtered by the closure
/// condition U_A U_y X inside X.
pub fn psi(
    x_space: &Subspace<FieldScalar>,
    alg: &Alb<FieldScalar>,
) -> Result<Subspace<FieldScalar>> {
    if x_space.ambient() != 27 {
        return Err(Error::DimensionMismatch {
            expected: 27,
            got: x_space.ambient(),
        });
    }
    if x_space.dim() == 0 || x_space.dim() == 27 {
        return Err(Error::NotInnerIdeal);
    }
    let ctx = alg.ctx().field().one();
    let gens = subspace_elements(x_space, alg);
    let ambient = alg.basis();
    let functionals = vanishing_functionals(x_space, &ctx);
    // rows of the linear system in y: f({b, e_col, a}) for each (b, a, f)
    let mut rows: Vec<Vec<FieldScalar>> = Vec::new();
    // precompute {b, e_col, a} for each column
    for b in &gens {
        for a in &ambient {
            let images: Vec<Vec<FieldScalar>> = ambient
                .iter()
                .map(|e| b.triple(e, a).to_vec())
                .collect();
            for f in &functionals {
                let mut row = Vec::with_capacity(27);
                for img in &images {
                    let mut acc = Scalar::zero(&ctx);
                    for (fc, ic) in f.iter().zip(img) {
                        acc = Scalar::add(&acc, &Scalar::mul(fc, ic));
                    }
                    row.push(acc);
                }
                rows.push(row);
            }
        }
    }
    let m = Matrix::from_rows(rows, &ctx);
    let kernel = m.kernel();
    let candidate = Subspace::span(&kernel, 27, &ctx);
    // closure filter: U_a U_y x inside X for spanning y with polarization
    let ygens = subspace_elements(&candidate, alg);
    let ok_for = |uy: &dyn Fn(&El) -> El| -> bool {
        for x in &gens {
            let w = uy(x);
            for a in &ambient {
                if !contains_el(x_space, &a.u_op(&w), &ctx) {
                    return false;
                }
            }
        }
        true
    };
    for (i, y) in ygens.iter().enumerate() {
        if !ok_for(&|x: &El| y.u_op(x)) {
            return Err(Error::NotInnerIdeal);
        }
        for y2 in ygens.iter().skip(i + 1) {
            if !ok_for(&|x: &El| u_polar(y, y2, x)) {
                return Err(Error::NotInnerIdeal);
            }
        }
    }
    Ok(candidate)
}

/// {X, Y, A} as a subspace: span of triple products over bases.
pub fn triple_span(
    x_space: &Subspace<FieldScalar>,
    y_space: &Subspace<FieldScalar>,
    alg: &Alb<FieldScalar>,
) -> Subspace<FieldScalar> {
    let ctx = alg.ctx().field().one();
    let xs = subspace_elements(x_space, alg);
    let ys = subspace_elements(y_space, alg);
    let mut vectors = Vec::new();
    for x in &xs {
        for y in &ys {
            for a in &alg.basis() {
                vectors.push(x.triple(y, a).to_vec());
            }
        }
    }
    Subspace::span(&vectors, 27, &ctx)
}

// ------------------------------------------------------------------
// Constructions
// ------------------------------------------------------------------

/// Random element of the singular variety: U_w e11 is always singular.
pub fn random_singular<R: Rng>(alg: &Alb<FieldScalar>, rng: &mut R) -> El {
    let field = alg.ctx().field().clone();
    let w = alg.sample_with(|| field.sample(rng, 5));
    w.u_op(&alg.diag_unit(0))
}

/// Find a singular vector outside X whose cross with every generator of X
/// vanishes, by sampling inside the kernel of the linear cross constraints.
fn commuting_singular_extension<R: Rng>(
    x_space: &Subspace<FieldScalar>,
    alg: &Alb<FieldScalar>,
    rng: &mut R,
    budget: usize,
) -> Option<El> {
    let field = alg.ctx().field().clone();
    let ctx = field.one();
    let gens = subspace_elements(x_space, alg);
    // linear constraints: b cross y = 0 for every generator b
    let mut rows: Vec<Vec<FieldScalar>> = Vec::new();
    let ambient = alg.basis();
    for b in &gens {
        let cols: Vec<Vec<FieldScalar>> = ambient.iter().map(|e| b.cross(e).to_vec()).collect();
        for coord in 0..27 {
            rows.push(cols.iter().map(|c| c[coord].clone()).collect());
        }
    }
    let kernel = if rows.is_empty() {
        ambient.iter().map(|e| e.to_vec()).collect()
    } else {
        Matrix::from_rows(rows, &ctx).kernel()
    };
    if kernel.is_empty() {
        return None;
    }
    let small = field.order().map(|q| q <= 5).unwrap_or(false);
    for _ in 0..budget {
        let mut v = vec![Scalar::zero(&ctx); 27];
        for kvec in &kernel {
            let c = if small {
                field.sample(rng, 1)
            } else {
                field.sample(rng, 3)
            };
            if !Scalar::is_zero(&c) {
                v = vec_add(&v, &vec_scale(&c, kvec));
            }
        }
        let el = alg.from_vec(&v);
        if el.is_zero() || !el.sharp().is_zero() {
            continue;
        }
        if !contains_el(x_space, &el, &ctx) {
            return Some(el);
        }
    }
    None
}

/// Can the singular span X be extended by another singular vector commuting
/// (under cross) with all of X?  Bounded randomized search; a `false` is
/// evidence of maximality, not a certificate.
pub fn singular_extendable(
    x_space: &Subspace<FieldScalar>,
    alg: &Alb<FieldScalar>,
    budget: usize,
) -> bool {
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(0x5eed);
    commuting_singular_extension(x_space, alg, &mut rng, budget).is_some()
}

/// Greedily extend a singular span by random commuting singular vectors.
/// Returns the chain of subspaces of dimensions 1..=final.
pub fn greedy_singular_chain<R: Rng>(
    alg: &Alb<FieldScalar>,
    rng: &mut R,
    budget: usize,
) -> Vec<Subspace<FieldScalar>> {
    let ctx = alg.ctx().field().one();
    let mut seed = random_singular(alg, rng);
    let mut tries = 0;
    while seed.is_zero() && tries < budget {
        seed = random_singular(alg, rng);
        tries += 1;
    }
    if seed.is_zero() {
        return Vec::new();
    }
    let mut chain = vec![Subspace::span(&[seed.to_vec()], 27, &ctx)];
    loop {
        let current = chain.last().unwrap().clone();
        match commuting_singular_extension(&current, alg, rng, budget) {
            Some(s) => {
                let mut vectors = current.basis().to_vec();
                vectors.push(s.to_vec());
                chain.push(Subspace::span(&vectors, 27, &ctx));
            }
            None => break,
        }
    }
    chain
}

/// A totally isotropic 5-space of the quadratic trace form restricted to
/// the 10-dimensional Peirce-zero piece of e11; such spaces are singular
/// subspaces of the algebra.
pub fn isotropic_five_space<R: Rng>(
    alg: &Alb<FieldScalar>,
    rng: &mut R,
    budget: usize,
) -> Option<Subspace<FieldScalar>> {
    let field = alg.ctx().field().clone();
    let ctx = field.one();
    let e = alg.diag_unit(0);
    let pd = peirce_decomposition(alg, &e).ok()?;
    let zero_basis: Vec<El> = pd.zero.basis().iter().map(|v| alg.from_vec(v)).collect();
    let mut picked: Vec<El> = Vec::new();
    let mut restarts = 0;
    while picked.len() < 5 && restarts < 40 {
        let mut found = false;
        for _ in 0..budget {
            let mut cand = alg.zero_el();
            for b in &zero_basis {
                let c = field.sample(rng, 2);
                if !Scalar::is_zero(&c) {
                    cand = cand.add(&b.scale(&c));
                }
            }
            if cand.is_zero() || !cand.sharp().is_zero() {
                continue;
            }
            if !picked.iter().all(|p| p.cross(&cand).is_zero()) {
                continue;
            }
            let vectors: Vec<Vec<FieldScalar>> =
                picked.iter().chain([&cand]).map(|p| p.to_vec()).collect();
            let sp = Subspace::span(&vectors, 27, &ctx);
            if sp.dim() == picked.len() + 1 {
                picked.push(cand);
                found = true;
                break;
            }
        }
        if !found {
            picked.clear();
            restarts += 1;
        }
    }
    if picked.len() < 5 {
        return None;
    }
    let vectors: Vec<Vec<FieldScalar>> = picked.iter().map(|p| p.to_vec()).collect();
    Some(Subspace::span(&vectors, 27, &ctx))
}

// ------------------------------------------------------------------
// The psi table
// ------------------------------------------------------------------

/// Row labels of the psi dimension table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealDim {
    One,
    Two,
    Three,
    FivePrime,
    Six,
    Ten,
}

impl IdealDim {
    pub fn dim(self) -> usize {
        match self {
            IdealDim::One => 1,
            IdealDim::Two => 2,
            IdealDim::Three => 3,
            IdealDim::FivePrime => 5,
            IdealDim::Six => 6,
            IdealDim::Ten => 10,
        }
    }

    pub fn expected_psi_dim(self) -> usize {
        match self {
            IdealDim::One => 10,
            IdealDim::Two => 5,
            IdealDim::Three => 3,
            IdealDim::FivePrime => 2,
            IdealDim::Six => 6,
            IdealDim::Ten => 1,
        }
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct PsiRow {
    pub label: IdealDim,
    pub dim: usize,
    pub psi_dim: usize,
    pub table_ok: bool,
    /// For dimension 6: {X, psi(X), A} equals X.
    pub closure_ok: Option<bool>,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct PsiTableReport {
    pub rows: Vec<PsiRow>,
}

fn check_row(
    label: IdealDim,
    x_space: &Subspace<FieldScalar>,
    alg: &Alb<FieldScalar>,
) -> Result<PsiRow> {
    let p = psi(x_space, alg)?;
    let table_ok = p.dim() == label.expected_psi_dim();
    let closure_ok = if label == IdealDim::Six {
        Some(triple_span(x_space, &p, alg) == *x_space)
    } else {
        None
    };
    Ok(PsiRow {
        label,
        dim: x_space.dim(),
        psi_dim: p.dim(),
        table_ok,
        closure_ok,
    })
}

/// Construct inner ideals of each requested dimension over a finite field
/// and verify the psi dimension table.
pub fn psi_table_check<R: Rng>(
    alg: &Alb<FieldScalar>,
    labels: &[IdealDim],
    rng: &mut R,
    budget: usize,
) -> Result<PsiTableReport> {
    let ctx = alg.ctx().field().one();
    let mut rows = Vec::new();
    for &label in labels {
        let found: Option<Subspace<FieldScalar>> = match label {
            IdealDim::One => Some(Subspace::span(
                &[alg.diag_unit(0).to_vec()],
                27,
                &ctx,
            )),
            IdealDim::Ten => Some(hyperline(&alg.diag_unit(0), alg)?),
            IdealDim::Two | IdealDim::Three | IdealDim::Six => {
                let target = label.dim();
                let mut hit = None;
                for _ in 0..24 {
                    let chain = greedy_singular_chain(alg, rng, budget);
                    if let Some(s) = chain.iter().find(|s| s.dim() == target) {
                        hit = Some(s.clone());
                        break;
                    }
                }
                hit
            }
            IdealDim::FivePrime => {
                let mut hit = None;
                for _ in 0..24 {
                    if let Some(s) = isotropic_five_space(alg, rng, budget) {
                        // keep only the non-extendable flavor
                        if !singular_extendable(&s, alg, budget) {
                            hit = Some(s);
                            break;
                        }
                    }
                }
                hit
            }
        };
        let x_space = found.ok_or(Error::ConstructionFailed(label.dim()))?;
        rows.push(check_row(label, &x_space, alg)?);
    }
    Ok(PsiTableReport { rows })
}

// ------------------------------------------------------------------
// Flag conditions on the hermitian triple
// ------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FlagKind {
    /// rank X = 1, rank Y = 10, [X, Y, V] = 0.
    A1A6,
    /// rank X = 2, rank Y = 5.
    A3A5,
    /// rank X = 3 and [X, X, V] = 0.
    A4,
    /// rank X = 6 and [X, X, V] = X.
    A2,
}

fn k_rank(space: &Subspace<FieldScalar>) -> Result<usize> {
    if space.dim() % 2 != 0 {
        return Err(Error::RankMismatch);
    }
    Ok(space.dim() / 2)
}

/// Span of the brackets [x, y, v] over bases of X, Y and the carrier.
pub fn bracket_span(
    t: &Triple,
    x_space: &Subspace<FieldScalar>,
    y_space: &Subspace<FieldScalar>,
) -> Result<Subspace<FieldScalar>> {
    let ctx = t.field().one();
    let xs: Vec<KEl> = x_space.basis().iter().map(|v| t.from_k_vec(v)).collect();
    let ys: Vec<KEl> = y_space.basis().iter().map(|v| t.from_k_vec(v)).collect();
    let ambient = t.k_basis();
    let mut vectors = Vec::new();
    for x in &xs {
        for y in &ys {
            for v in &ambient {
                vectors.push(t.to_k_vec(&t.bracket(x, y, v)?));
            }
        }
    }
    Ok(Subspace::span(&vectors, 54, &ctx))
}

/// Evaluate the rank and bracket condition of the requested flag row on
/// K-subspaces of the triple carrier (54 base-field coordinates).
pub fn flag_check(
    t: &Triple,
    kind: FlagKind,
    x_space: &Subspace<FieldScalar>,
    y_space: Option<&Subspace<FieldScalar>>,
) -> Result<bool> {
    let rx = k_rank(x_space)?;
    match kind {
        FlagKind::A1A6 => {
            let y = y_space.ok_or(Error::RankMismatch)?;
            if rx != 1 || k_rank(y)? != 10 {
                return Err(Error::RankMismatch);
            }
            Ok(bracket_span(t, x_space, y)?.dim() == 0)
        }
        FlagKind::A3A5 => {
            let y = y_space.ok_or(Error::RankMismatch)?;
            if rx != 2 || k_rank(y)? != 5 {
                return Err(Error::RankMismatch);
            }
            Ok(true)
        }
        FlagKind::A4 => {
            if rx != 3 {
                return Err(Error::RankMismatch);
            }
            Ok(bracket_span(t, x_space, x_space)?.dim() == 0)
        }
        FlagKind::A2 => {
            if rx != 6 {
                return Err(Error::RankMismatch);
            }
            Ok(bracket_span(t, x_space, x_space)? == *x_space)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::albert::AlbertAlgebra;
    use crate::fieldcore::{Field, FieldDescriptor};
    use crate::octonion::OctonionAlgebra;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn split_albert(field: &Field) -> Alb<FieldScalar> {
        let oct = OctonionAlgebra::zorn(&field.one());
        AlbertAlgebra::new(oct, [field.one(), field.one(), field.one()]).unwrap()
    }

    #[test]
    fn basic_kinds() {
        let f3 = FieldDescriptor::prime(3).unwrap();
        let alg = split_albert(&f3);
        let ctx = f3.one();
        let e11 = alg.diag_unit(0);
        let s1 = Subspace::span(&[e11.to_vec()], 27, &ctx);
        assert_eq!(
            is_inner_ideal(&s1, &alg).unwrap(),
            IdealKind::Singular {
                dim: 1,
                maximal_5prime: false
            }
        );
        let hl = hyperline(&e11, &alg).unwrap();
        assert_eq!(hl.dim(), 10);
        assert_eq!(is_inner_ideal(&hl, &alg).unwrap(), IdealKind::Hyperline);
        let one_span = Subspace::span(&[alg.one_el().to_vec()], 27, &ctx);
        assert_eq!(is_inner_ideal(&one_span, &alg).unwrap(), IdealKind::NotInner);
        assert_eq!(
            hyperline(&alg.one_el(), &alg).unwrap_err(),
            Error::NotSingular
        );
    }

    #[test]
    fn hyperline_dimension_random() {
        let f5 = FieldDescriptor::prime(5).unwrap();
        let alg = split_albert(&f5);
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let mut seen = 0;
        while seen < 100 {
            let x = random_singular(&alg, &mut rng);
            if x.is_zero() {
                continue;
            }
            assert_eq!(hyperline(&x, &alg).unwrap().dim(), 10);
            seen += 1;
        }
    }

    #[test]
    fn hyperline_no_invertible() {
        let q = FieldDescriptor::rationals();
        let alg = split_albert(&q);
        let hl = hyperline(&alg.diag_unit(0), &alg).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for _ in 0..100 {
            let mut el = alg.zero_el();
            for b in hl.basis() {
                let c = q.sample(&mut rng, 5);
                el = el.add(&alg.from_vec(b).scale(&c));
            }
            assert!(Scalar::is_zero(&el.norm()));
        }
    }

    #[test]
    fn psi_pairing() {
        let f3 = FieldDescriptor::prime(3).unwrap();
        let alg = split_albert(&f3);
        let ctx = f3.one();
        let e11 = alg.diag_unit(0);
        let s1 = Subspace::span(&[e11.to_vec()], 27, &ctx);
        let p = psi(&s1, &alg).unwrap();
        assert_eq!(p.dim(), 10);
        assert_eq!(p, hyperline(&e11, &alg).unwrap());
        // psi of the hyperline recovers the point
        let back = psi(&p, &alg).unwrap();
        assert_eq!(back.dim(), 1);
        assert_eq!(back, s1);
    }

    #[test]
    fn psi_table_small() {
        let f3 = FieldDescriptor::prime(3).unwrap();
        let alg = split_albert(&f3);
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let report = psi_table_check(
            &alg,
            &[IdealDim::One, IdealDim::Two, IdealDim::Three, IdealDim::Ten],
            &mut rng,
            400,
        )
        .unwrap();
        for row in &report.rows {
            assert!(row.table_ok, "row {:?} got psi dim {}", row.label, row.psi_dim);
        }
    }

    #[test]
    fn flag_rank_mismatch() {
        use crate::fieldcore::{EtaleAlgebra, EtaleOps};
        use crate::hermtriple::HermTriple;
        let f3 = FieldDescriptor::prime(3).unwrap();
        let alg = split_albert(&f3);
        let etale = EtaleAlgebra::split(f3.clone());
        let t = HermTriple::new(alg, etale.clone()).unwrap();
        let ctx = f3.one();
        let e11 = t.include(&t.base_algebra().diag_unit(0));
        let d = etale.d();
        let x = Subspace::span(
            &[t.to_k_vec(&e11), t.to_k_vec(&e11.scale(&d))],
            54,
            &ctx,
        );
        assert_eq!(
            flag_check(&t, FlagKind::A4, &x, None).unwrap_err(),
            Error::RankMismatch
        );
    }
}
