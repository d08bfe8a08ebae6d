//! Exact Witt-theory engine for diagonal quadratic forms over Q, over odd
//! finite fields, and over iterated Laurent-series towers k((t1))...((tn)).
//!
//! Forms are diagonal with monomial entries u * t1^e1 ... tn^en (u a unit of
//! the base field, exponents mod 2).  Tower computations reduce to the base
//! field by Springer's theorem: f = f1 + tn f2 with f1, f2 defined over the
//! smaller tower, and the anisotropic kernel splits the same way.
//!
//! Over Q, Witt triviality is decided by the signature together with all
//! second-residue forms (Milnor's exact sequence); anisotropic dimensions
//! come from the local isotropy criteria over Q_p and R.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fieldcore::{Field, FieldOps, FieldScalar};
use crate::scalar::Scalar;

/// One diagonal entry: `unit` times the monomial with exponent bitmask
/// `exps` (bit i = variable t_{i+1}).
#[derive(Debug, Clone, PartialEq)]
pub struct FormEntry {
    pub unit: FieldScalar,
    pub exps: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiagForm {
    base: Field,
    vars: usize,
    entries: Vec<FormEntry>,
}

impl DiagForm {
    pub fn new(base: Field, vars: usize, entries: Vec<(FieldScalar, u32)>) -> Result<DiagForm> {
        if base.characteristic() == 2 {
            return Err(Error::UnsupportedBase);
        }
        assert!(vars <= 32);
        let mut es = Vec::with_capacity(entries.len());
        for (unit, exps) in entries {
            if *unit.field().as_ref() != *base {
                return Err(Error::DescriptorMismatch);
            }
            if Scalar::is_zero(&unit) {
                return Err(Error::ZeroGenerator);
            }
            let mask = if vars == 32 { u32::MAX } else { (1u32 << vars) - 1 };
            es.push(FormEntry {
                unit: unit.square_class()?,
                exps: exps & mask,
            });
        }
        Ok(DiagForm {
            base,
            vars,
            entries: es,
        })
    }

    /// Form with no tower variables.
    pub fn diag(base: Field, units: Vec<FieldScalar>) -> Result<DiagForm> {
        let entries = units.into_iter().map(|u| (u, 0)).collect();
        DiagForm::new(base, 0, entries)
    }

    pub fn empty(base: Field, vars: usize) -> DiagForm {
        DiagForm {
            base,
            vars,
            entries: Vec::new(),
        }
    }

    /// Pfister form <<a1, ..., ar>> = tensor of <1, -ai>.
    pub fn pfister(base: Field, vars: usize, gens: &[(FieldScalar, u32)]) -> Result<DiagForm> {
        let mut f = DiagForm::new(base.clone(), vars, vec![(base.one(), 0)])?;
        for (u, e) in gens {
            let factor = DiagForm::new(
                base.clone(),
                vars,
                vec![(base.one(), 0), (Scalar::neg(u), *e)],
            )?;
            f = f.tensor(&factor)?;
        }
        Ok(f)
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn entries(&self) -> &[FormEntry] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    fn compatible(&self, other: &DiagForm) -> Result<()> {
        if *self.base != *other.base || self.vars != other.vars {
            return Err(Error::DescriptorMismatch);
        }
        Ok(())
    }

    pub fn orth_sum(&self, other: &DiagForm) -> Result<DiagForm> {
        self.compatible(other)?;
        let mut entries = self.entries.clone();
        entries.extend(other.entries.clone());
        Ok(DiagForm {
            base: self.base.clone(),
            vars: self.vars,
            entries,
        })
    }

    pub fn tensor(&self, other: &DiagForm) -> Result<DiagForm> {
        self.compatible(other)?;
        let mut entries = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.entries {
            for b in &other.entries {
                entries.push(FormEntry {
                    unit: Scalar::mul(&a.unit, &b.unit).square_class()?,
                    exps: a.exps ^ b.exps,
                });
            }
        }
        Ok(DiagForm {
            base: self.base.clone(),
            vars: self.vars,
            entries,
        })
    }

    /// Scale by a monomial unit.
    pub fn scale(&self, unit: &FieldScalar, exps: u32) -> Result<DiagForm> {
        if Scalar::is_zero(unit) {
            return Err(Error::ZeroGenerator);
        }
        let entries = self
            .entries
            .iter()
            .map(|e| {
                Ok(FormEntry {
                    unit: Scalar::mul(&e.unit, unit).square_class()?,
                    exps: e.exps ^ exps,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DiagForm {
            base: self.base.clone(),
            vars: self.vars,
            entries,
        })
    }

    pub fn neg(&self) -> DiagForm {
        let m1 = Scalar::neg(&self.base.one());
        self.scale(&m1, 0).expect("-1 is a unit")
    }

    /// Split off the top variable: (f1, f2) with f = f1 + tn * f2, both over
    /// the same tower with `vars - 1` variables.
    fn springer_split(&self) -> (DiagForm, DiagForm) {
        assert!(self.vars > 0);
        let bit = 1u32 << (self.vars - 1);
        let mut f1 = Vec::new();
        let mut f2 = Vec::new();
        for e in &self.entries {
            if e.exps & bit == 0 {
                f1.push(e.clone());
            } else {
                f2.push(FormEntry {
                    unit: e.unit.clone(),
                    exps: e.exps & !bit,
                });
            }
        }
        (
            DiagForm {
                base: self.base.clone(),
                vars: self.vars - 1,
                entries: f1,
            },
            DiagForm {
                base: self.base.clone(),
                vars: self.vars - 1,
                entries: f2,
            },
        )
    }

    fn lift_vars(mut self, vars: usize, with_bit: bool) -> DiagForm {
        let bit = 1u32 << (vars - 1);
        self.vars = vars;
        if with_bit {
            for e in self.entries.iter_mut() {
                e.exps |= bit;
            }
        }
        self
    }

    /// Whether the Witt class is zero.  Exact (no search).
    pub fn is_witt_zero(&self) -> Result<bool> {
        if self.vars > 0 {
            let (f1, f2) = self.springer_split();
            return Ok(f1.is_witt_zero()? && f2.is_witt_zero()?);
        }
        if self.base.is_rationals() {
            Ok(rational_witt_zero(&self.rational_units()))
        } else {
            Ok(finite_kernel_units(&self.base, &self.unit_list()).is_empty())
        }
    }

    /// Dimension of the anisotropic kernel.  Exact (no search).
    pub fn anisotropic_dim(&self) -> Result<usize> {
        if self.vars > 0 {
            let (f1, f2) = self.springer_split();
            return Ok(f1.anisotropic_dim()? + f2.anisotropic_dim()?);
        }
        if self.base.is_rationals() {
            Ok(rational_anisotropic_dim(&self.rational_units()))
        } else {
            Ok(finite_kernel_units(&self.base, &self.unit_list()).len())
        }
    }

    pub fn is_isotropic(&self) -> Result<bool> {
        Ok(self.anisotropic_dim()? < self.dim())
    }

    /// Hyperbolic means Witt-trivial; a Witt-trivial form of dimension 2m is
    /// isometric to m hyperbolic planes.
    pub fn is_hyperbolic(&self) -> Result<bool> {
        self.is_witt_zero()
    }

    /// Diagonal representative of the anisotropic kernel.  Exact over
    /// finite base fields; over Q a verified candidate search that may give
    /// up with `SearchBudgetExhausted`.
    pub fn witt_kernel(&self) -> Result<DiagForm> {
        if self.vars > 0 {
            let (f1, f2) = self.springer_split();
            let k1 = f1.witt_kernel()?.lift_vars(self.vars, false);
            let k2 = f2.witt_kernel()?.lift_vars(self.vars, true);
            return k1.orth_sum(&k2);
        }
        if self.base.is_rationals() {
            let units = rational_kernel(&self.rational_units())?;
            let scalars = units
                .into_iter()
                .map(|u| {
                    self.base
                        .from_bigrational(num_rational::BigRational::from_integer(u))
                        .expect("integer embeds in Q")
                })
                .collect();
            DiagForm::diag(self.base.clone(), scalars)
        } else {
            let units = finite_kernel_units(&self.base, &self.unit_list());
            DiagForm::diag(self.base.clone(), units)
        }
    }

    /// Full Witt decomposition: the number of split hyperbolic planes and a
    /// representative of the anisotropic kernel.
    pub fn witt_decompose(&self) -> Result<WittClass> {
        let kernel = self.witt_kernel()?;
        let witt_index = (self.dim() - kernel.dim()) / 2;
        Ok(WittClass { witt_index, kernel })
    }

    /// Same dimension and Witt-equivalent difference.
    pub fn is_isometric(&self, other: &DiagForm) -> Result<bool> {
        self.compatible(other)?;
        if self.dim() != other.dim() {
            return Ok(false);
        }
        self.orth_sum(&other.neg())?.is_witt_zero()
    }

    /// Signature over Q (no tower variables).
    pub fn signature(&self) -> Result<i64> {
        if self.vars != 0 || !self.base.is_rationals() {
            return Err(Error::UnsupportedBase);
        }
        Ok(self
            .entries
            .iter()
            .map(|e| e.unit.sign().unwrap() as i64)
            .sum())
    }

    fn unit_list(&self) -> Vec<FieldScalar> {
        self.entries.iter().map(|e| e.unit.clone()).collect()
    }

    /// Squarefree integer representatives (vars == 0, rational base).
    fn rational_units(&self) -> Vec<BigInt> {
        self.entries
            .iter()
            .map(|e| {
                let r = e.unit.as_rational().expect("rational base");
                debug_assert!(r.denom().is_one());
                r.numer().clone()
            })
            .collect()
    }
}

/// Result of a Witt decomposition: f = (hyperbolic planes)^witt_index + kernel.
#[derive(Debug, Clone, PartialEq)]
pub struct WittClass {
    pub witt_index: usize,
    pub kernel: DiagForm,
}

impl fmt::Display for DiagForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| {
                let mut s = format!("{}", e.unit);
                for i in 0..self.vars {
                    if e.exps & (1 << i) != 0 {
                        s.push_str(&format!("*t{}", i + 1));
                    }
                }
                s
            })
            .collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

// ------------------------------------------------------------------
// Odd finite base fields
// ------------------------------------------------------------------

/// Anisotropic kernel of a diagonal form over an odd finite field, from the
/// classification of forms by dimension and (signed) discriminant.
fn finite_kernel_units(base: &Field, units: &[FieldScalar]) -> Vec<FieldScalar> {
    let n = units.len();
    if n == 0 {
        return vec![];
    }
    let det = units
        .iter()
        .fold(base.one(), |acc, u| Scalar::mul(&acc, u));
    let m1 = Scalar::neg(&base.one());
    if n % 2 == 1 {
        // kernel is the 1-dim form <(-1)^((n-1)/2) det>
        let mut u = det;
        if ((n - 1) / 2) % 2 == 1 {
            u = Scalar::mul(&u, &m1);
        }
        vec![u.square_class().expect("nonzero det")]
    } else {
        // zero iff the signed discriminant (-1)^(n(n-1)/2) det is a square
        let mut signed = det.clone();
        if (n * (n - 1) / 2) % 2 == 1 {
            signed = Scalar::mul(&signed, &m1);
        }
        if signed.is_square() {
            vec![]
        } else {
            // <1, -u> with u = -(-1)^((n-2)/2) det
            let mut u = Scalar::mul(&det, &m1);
            if ((n - 2) / 2) % 2 == 1 {
                u = Scalar::mul(&u, &m1);
            }
            vec![
                base.one(),
                Scalar::neg(&u).square_class().expect("nonzero det"),
            ]
        }
    }
}

// ------------------------------------------------------------------
// Rational base field: local invariants
// ------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Place {
    Infinity,
    Prime(BigInt),
}

fn valuation_unit(a: &BigInt, p: &BigInt) -> (u32, BigInt) {
    let mut v = 0;
    let mut u = a.clone();
    while (&u % p).is_zero() {
        u /= p;
        v += 1;
    }
    (v, u)
}

fn legendre(u: &BigInt, p: &BigInt) -> i32 {
    // p odd prime, u coprime to p
    let e = (p - BigInt::one()) / BigInt::from(2);
    let r = u.modpow(&e, p);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// Hilbert symbol (a, b)_v for nonzero integers a, b.
fn hilbert(a: &BigInt, b: &BigInt, place: &Place) -> i32 {
    match place {
        Place::Infinity => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(p) if *p == BigInt::from(2) => {
            let two = BigInt::from(2);
            let (alpha, u) = valuation_unit(a, &two);
            let (beta, v) = valuation_unit(b, &two);
            let eps = |x: &BigInt| -> u32 {
                // (x - 1)/2 mod 2 for odd x
                let r = ((x.mod_floor_i64(8) - 1) / 2) as u32;
                r % 2
            };
            let omega = |x: &BigInt| -> u32 {
                // (x^2 - 1)/8 mod 2 for odd x: 0 for x = +-1 mod 8
                let r = x.mod_floor_i64(8);
                if r == 1 || r == 7 {
                    0
                } else {
                    1
                }
            };
            let e = eps(&u) * eps(&v) + alpha % 2 * omega(&v) + beta % 2 * omega(&u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (alpha, u) = valuation_unit(a, p);
            let (beta, v) = valuation_unit(b, p);
            let mut r = 1;
            if alpha % 2 == 1 && beta % 2 == 1 {
                // factor (-1)^{(p-1)/2}
                let pm = p.mod_floor_i64(4);
                if pm == 3 {
                    r = -r;
                }
            }
            if beta % 2 == 1 {
                r *= legendre(&u, p);
            }
            if alpha % 2 == 1 {
                r *= legendre(&v, p);
            }
            r
        }
    }
}

trait ModFloorI64 {
    fn mod_floor_i64(&self, m: i64) -> i64;
}

impl ModFloorI64 for BigInt {
    fn mod_floor_i64(&self, m: i64) -> i64 {
        use num_traits::ToPrimitive;
        let mb = BigInt::from(m);
        (((self % &mb) + &mb) % &mb).to_i64().unwrap()
    }
}

fn is_local_square(d: &BigInt, place: &Place) -> bool {
    match place {
        Place::Infinity => d.is_positive(),
        Place::Prime(p) if *p == BigInt::from(2) => {
            let (v, u) = valuation_unit(d, &BigInt::from(2));
            v % 2 == 0 && u.mod_floor_i64(8) == 1
        }
        Place::Prime(p) => {
            let (v, u) = valuation_unit(d, p);
            v % 2 == 0 && legendre(&u, p) == 1
        }
    }
}

/// Finite places where a diagonal form can have nontrivial local behavior.
fn relevant_places(units: &[BigInt]) -> Vec<Place> {
    let mut primes = vec![BigInt::from(2)];
    for u in units {
        let mut m = u.abs();
        let mut f = BigInt::from(2);
        while &f * &f <= m {
            if (&m % &f).is_zero() {
                if !primes.contains(&f) {
                    primes.push(f.clone());
                }
                while (&m % &f).is_zero() {
                    m /= &f;
                }
            }
            f += 1;
        }
        if m > BigInt::one() && !primes.contains(&m) {
            primes.push(m);
        }
    }
    primes.into_iter().map(Place::Prime).collect()
}

fn second_residue(units: &[BigInt], p: &BigInt) -> Vec<BigInt> {
    units
        .iter()
        .filter_map(|u| {
            let (v, unit) = valuation_unit(u, p);
            if v % 2 == 1 {
                Some(unit)
            } else {
                None
            }
        })
        .collect()
}

/// Witt triviality over Q: zero signature and all second residues trivial.
fn rational_witt_zero(units: &[BigInt]) -> bool {
    if units.len() % 2 != 0 {
        return false;
    }
    let sig: i64 = units.iter().map(|u| if u.is_negative() { -1 } else { 1 }).sum();
    if sig != 0 {
        return false;
    }
    for place in relevant_places(units) {
        let Place::Prime(p) = &place else { continue };
        let res = second_residue(units, p);
        if *p == BigInt::from(2) {
            // W(F_2) is Z/2 by dimension
            if res.len() % 2 != 0 {
                return false;
            }
        } else {
            // second residue form must be Witt-zero over F_p
            if res.len() % 2 != 0 {
                return false;
            }
            let n = res.len();
            if n == 0 {
                continue;
            }
            let mut det = BigInt::one();
            for r in &res {
                det *= r;
            }
            if (n * (n - 1) / 2) % 2 == 1 {
                det = -det;
            }
            if legendre(&det.abs(), p)
                * (if det.is_negative() { legendre(&BigInt::from(-1), p) } else { 1 })
                != 1
            {
                return false;
            }
        }
    }
    true
}

/// Anisotropic dimension over Q_v via the local isotropy criteria, by
/// stripping hyperbolic planes off the invariant triple (dim, disc, Hasse).
fn local_anisotropic_dim(units: &[BigInt], place: &Place) -> usize {
    if let Place::Infinity = place {
        let sig: i64 = units.iter().map(|u| if u.is_negative() { -1 } else { 1 }).sum();
        return sig.unsigned_abs() as usize;
    }
    let mut n = units.len();
    let mut d = BigInt::one();
    for u in units {
        d *= u;
    }
    let mut eps = 1;
    for i in 0..units.len() {
        for j in i + 1..units.len() {
            eps *= hilbert(&units[i], &units[j], place);
        }
    }
    let m1 = BigInt::from(-1);
    loop {
        if n == 0 {
            return 0;
        }
        let isotropic = match n {
            1 => false,
            2 => is_local_square(&(-&d), place),
            3 => eps == hilbert(&m1, &(-&d), place),
            4 => !is_local_square(&d, place) || eps == hilbert(&m1, &m1, place),
            _ => true,
        };
        if !isotropic {
            return n;
        }
        // strip one hyperbolic plane: det g = -det f, eps(g) = eps(f)(-1, det g)
        n -= 2;
        d = -d;
        eps *= hilbert(&m1, &d, place);
    }
}

fn rational_anisotropic_dim(units: &[BigInt]) -> usize {
    if units.is_empty() {
        return 0;
    }
    let mut places = relevant_places(units);
    places.push(Place::Infinity);
    places
        .iter()
        .map(|v| local_anisotropic_dim(units, v))
        .max()
        .unwrap()
}

fn squarefree(n: &BigInt) -> BigInt {
    let neg = n.is_negative();
    let mut m = n.abs();
    let mut sf = BigInt::one();
    let mut f = BigInt::from(2);
    while &f * &f <= m {
        let mut c = 0;
        while (&m % &f).is_zero() {
            m /= &f;
            c += 1;
        }
        if c % 2 == 1 {
            sf *= &f;
        }
        f += 1;
    }
    sf *= m;
    if neg {
        -sf
    } else {
        sf
    }
}

/// Verified anisotropic-kernel representative over Q.  The candidate search
/// runs over square classes generated by -1 and the primes of the form; any
/// candidate is certified exactly before being returned.
fn rational_kernel(units: &[BigInt]) -> Result<Vec<BigInt>> {
    let n = units.len();
    let m = rational_anisotropic_dim(units);
    if m == n {
        return Ok(units.to_vec());
    }
    if m == 0 {
        return Ok(vec![]);
    }
    // square classes from -1 and the primes of the form
    let mut gens = vec![BigInt::from(-1)];
    for place in relevant_places(units) {
        if let Place::Prime(p) = place {
            gens.push(p);
        }
    }
    if gens.len() > 14 {
        return Err(Error::SearchBudgetExhausted);
    }
    let mut classes = vec![BigInt::one()];
    for g in &gens {
        let mut next = classes.clone();
        for c in &classes {
            next.push(c * g);
        }
        classes = next;
    }
    // determinant of the kernel is forced: det g = det f * (-1)^((n-m)/2)
    let mut req_det = BigInt::one();
    for u in units {
        req_det *= u;
    }
    if ((n - m) / 2) % 2 == 1 {
        req_det = -req_det;
    }
    let req_det = squarefree(&req_det);
    let sig: i64 = units.iter().map(|u| if u.is_negative() { -1 } else { 1 }).sum();

    let mut idx = vec![0usize; m - 1];
    let budget = 400_000usize;
    let mut tried = 0usize;
    loop {
        // candidate: classes[idx...] plus the forced last entry
        let mut cand: Vec<BigInt> = idx.iter().map(|&i| classes[i].clone()).collect();
        let mut prod = req_det.clone();
        for c in &cand {
            prod *= c;
        }
        cand.push(squarefree(&prod));
        let cand_sig: i64 = cand.iter().map(|u| if u.is_negative() { -1 } else { 1 }).sum();
        if cand_sig == sig {
            let mut test = units.to_vec();
            test.extend(cand.iter().map(|c| -c));
            if rational_witt_zero(&test) {
                return Ok(cand);
            }
        }
        tried += 1;
        if tried > budget {
            return Err(Error::SearchBudgetExhausted);
        }
        // next multiset index (non-decreasing)
        let mut pos = m - 1;
        loop {
            if pos == 0 {
                return Err(Error::SearchBudgetExhausted);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < classes.len() {
                for q in pos + 1..m - 1 {
                    idx[q] = idx[pos];
                }
                break;
            }
            if pos == 0 {
                return Err(Error::SearchBudgetExhausted);
            }
            idx[pos] = 0;
        }
        if idx.iter().all(|&i| i == 0) && tried > 1 {
            return Err(Error::SearchBudgetExhausted);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::FieldDescriptor;

    fn qf(units: Vec<i64>) -> DiagForm {
        let q = FieldDescriptor::rationals();
        DiagForm::diag(q.clone(), units.into_iter().map(|n| q.int(n)).collect()).unwrap()
    }

    #[test]
    fn hyperbolic_plane() {
        let h = qf(vec![1, -1]);
        assert!(h.is_witt_zero().unwrap());
        assert!(h.is_hyperbolic().unwrap());
        assert_eq!(h.anisotropic_dim().unwrap(), 0);
        assert_eq!(h.witt_kernel().unwrap().dim(), 0);
    }

    #[test]
    fn rational_small_forms() {
        assert!(!qf(vec![1, -2]).is_witt_zero().unwrap());
        assert!(qf(vec![2, -2]).is_witt_zero().unwrap());
        assert!(qf(vec![3, -3]).is_witt_zero().unwrap());
        assert!(!qf(vec![1, -3]).is_witt_zero().unwrap());
        assert!(qf(vec![1, 1, -2]).is_isotropic().unwrap());
        assert!(!qf(vec![1, 1, 1]).is_isotropic().unwrap());
        // <1,1,1,-7> is anisotropic (2-adically)
        assert!(!qf(vec![1, 1, 1, -7]).is_isotropic().unwrap());
        assert_eq!(qf(vec![1, 1, 1, -7]).anisotropic_dim().unwrap(), 4);
        // <1,1,-1> has kernel <1>
        let k = qf(vec![1, 1, -1]).witt_kernel().unwrap();
        assert_eq!(k.dim(), 1);
        assert!(qf(vec![1, 1, -1])
            .orth_sum(&k.neg())
            .unwrap()
            .is_witt_zero()
            .unwrap());
    }

    #[test]
    fn rational_kernel_verified() {
        // <1, 2, -3, -6> : disc 36 = square, check via kernel engine
        let f = qf(vec![1, 2, -3, -6]);
        let m = f.anisotropic_dim().unwrap();
        let k = f.witt_kernel().unwrap();
        assert_eq!(k.dim(), m);
        assert!(f.orth_sum(&k.neg()).unwrap().is_witt_zero().unwrap());
        // definite forms are their own kernel
        let g = qf(vec![1, 2, 5]);
        assert_eq!(g.witt_kernel().unwrap(), g);
    }

    #[test]
    fn finite_field_forms() {
        let f3 = FieldDescriptor::prime(3).unwrap();
        let f = DiagForm::diag(f3.clone(), vec![f3.one(), f3.one()]).unwrap();
        // <1,1> over F_3: signed disc -1 = 2 is not a square -> anisotropic
        assert!(!f.is_witt_zero().unwrap());
        assert_eq!(f.anisotropic_dim().unwrap(), 2);
        let g = DiagForm::diag(f3.clone(), vec![f3.one(), f3.int(2)]).unwrap();
        // <1,-1> over F_3 is hyperbolic
        assert!(g.is_witt_zero().unwrap());
        let h = DiagForm::diag(f3.clone(), vec![f3.one(), f3.one(), f3.one()]).unwrap();
        assert_eq!(h.anisotropic_dim().unwrap(), 1);
        assert!(h.is_isotropic().unwrap());
        let f5 = FieldDescriptor::prime(5).unwrap();
        let s = DiagForm::diag(f5.clone(), vec![f5.one(), f5.one()]).unwrap();
        // -1 is a square mod 5 -> <1,1> hyperbolic
        assert!(s.is_witt_zero().unwrap());
    }

    #[test]
    fn pfister_and_tensor() {
        let q = FieldDescriptor::rationals();
        // <<-1,-1>> = <1,1,1,1>
        let p = DiagForm::pfister(q.clone(), 0, &[(q.int(-1), 0), (q.int(-1), 0)]).unwrap();
        assert!(p.is_isometric(&qf(vec![1, 1, 1, 1])).unwrap());
        // <<1, a>> is hyperbolic for any a
        let h = DiagForm::pfister(q.clone(), 0, &[(q.int(1), 0), (q.int(7), 0)]).unwrap();
        assert!(h.is_hyperbolic().unwrap());
        // isometry is reflexive and dimension-sensitive
        assert!(p.is_isometric(&p).unwrap());
        assert!(!p.is_isometric(&h).unwrap());
    }

    #[test]
    fn springer_tower() {
        let q = FieldDescriptor::rationals();
        // <1, -t1> over Q((t1)) is anisotropic
        let f = DiagForm::new(q.clone(), 1, vec![(q.int(1), 0), (q.int(-1), 1)]).unwrap();
        assert!(!f.is_isotropic().unwrap());
        assert_eq!(f.anisotropic_dim().unwrap(), 2);
        // <t1, -t1> is hyperbolic
        let g = DiagForm::new(q.clone(), 1, vec![(q.int(1), 1), (q.int(-1), 1)]).unwrap();
        assert!(g.is_witt_zero().unwrap());
        // <<t1, t2>> over Q((t1))((t2)) is anisotropic of dim 4
        let p = DiagForm::pfister(q.clone(), 2, &[(q.one(), 1), (q.one(), 2)]).unwrap();
        assert_eq!(p.dim(), 4);
        assert_eq!(p.anisotropic_dim().unwrap(), 4);
        let k = p.witt_kernel().unwrap();
        assert_eq!(k.dim(), p.dim());
        assert!(k.is_isometric(&p).unwrap());
    }

    #[test]
    fn six_fold_pfister_tower_anisotropic() {
        let q = FieldDescriptor::rationals();
        // <<t1,...,t6>> over the 6-variable tower: 64-dim anisotropic
        let gens: Vec<_> = (0..6).map(|i| (q.one(), 1u32 << i)).collect();
        let p = DiagForm::pfister(q.clone(), 6, &gens).unwrap();
        assert_eq!(p.dim(), 64);
        assert_eq!(p.anisotropic_dim().unwrap(), 64);
    }

    #[test]
    fn finite_base_tower() {
        let f3 = FieldDescriptor::prime(3).unwrap();
        // <1, 1, -t, -t> over F_3((t)): both halves <1,1> anisotropic
        let f = DiagForm::new(
            f3.clone(),
            1,
            vec![(f3.one(), 0), (f3.one(), 0), (f3.int(-1), 1), (f3.int(-1), 1)],
        )
        .unwrap();
        assert_eq!(f.anisotropic_dim().unwrap(), 4);
        assert!(!f.is_isotropic().unwrap());
    }

    #[test]
    fn char_two_base_rejected() {
        let f2 = FieldDescriptor::prime(2).unwrap();
        assert_eq!(
            DiagForm::diag(f2.clone(), vec![f2.one()]).unwrap_err(),
            Error::UnsupportedBase
        );
    }

    #[test]
    fn zero_entry_rejected() {
        let q = FieldDescriptor::rationals();
        assert_eq!(
            DiagForm::diag(q.clone(), vec![FieldOps::zero(&q)]).unwrap_err(),
            Error::ZeroGenerator
        );
    }

    #[test]
    fn hilbert_symbol_values() {
        let two = Place::Prime(BigInt::from(2));
        let p3 = Place::Prime(BigInt::from(3));
        let inf = Place::Infinity;
        let b = |n: i64| BigInt::from(n);
        assert_eq!(hilbert(&b(-1), &b(-1), &inf), -1);
        assert_eq!(hilbert(&b(-1), &b(-1), &two), -1);
        assert_eq!(hilbert(&b(-1), &b(-1), &p3), 1);
        assert_eq!(hilbert(&b(2), &b(3), &p3), legendre(&b(2), &b(3)));
        assert_eq!(hilbert(&b(3), &b(3), &p3), hilbert(&b(3), &b(-1), &p3));
        // product formula over all places for a few pairs
        for (a, c) in [(2i64, 3i64), (-5, 7), (6, -15), (10, 21)] {
            let mut prod = hilbert(&b(a), &b(c), &inf);
            for place in relevant_places(&[b(a), b(c)]) {
                prod *= hilbert(&b(a), &b(c), &place);
            }
            assert_eq!(prod, 1, "product formula fails for ({a},{c})");
        }
    }

    #[test]
    fn signature_and_display() {
        let f = qf(vec![1, 2, -3]);
        assert_eq!(f.signature().unwrap(), 1);
        assert_eq!(format!("{f}"), "<1, 2, -3>");
        let q = FieldDescriptor::rationals();
        let t = DiagForm::new(q.clone(), 2, vec![(q.int(5), 3)]).unwrap();
        assert_eq!(format!("{t}"), "<5*t1*t2>");
    }
}
