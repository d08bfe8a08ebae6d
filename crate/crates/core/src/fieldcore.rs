//! Exact base fields and quadratic etale algebras.
//!
//! Supported bases are the rationals (arbitrary precision, never floating
//! point) and finite fields GF(p^m), including characteristic 2.  On top of a
//! base field k we build quadratic etale algebras K/k (split k x k, or a
//! separable quadratic field extension) with conjugation, norm, trace, and a
//! cached discriminant representative.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Shared handle to a field descriptor.
pub type Field = Arc<FieldDescriptor>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldKind {
    Rationals,
    /// GF(p^m) with a monic irreducible modulus of degree m over GF(p).
    /// Modulus coefficients are stored lowest degree first, length m + 1.
    Finite { p: u64, m: usize, modulus: Vec<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldDescriptor {
    pub kind: FieldKind,
}

const MAX_ENUM_ORDER: u64 = 1 << 22;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2u64;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

// ---- polynomial helpers over GF(p), coefficients lowest degree first ----

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + y) % p;
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + p - y) % p;
    }
    poly_trim(&mut out);
    out
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_trim(&mut out);
    out
}

fn mod_inv_prime(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0 mod p.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Remainder of a modulo the monic polynomial b.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = mod_inv_prime(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        for i in 0..=db {
            let idx = dr - db + i;
            r[idx] = (r[idx] + p - c * b[i] % p) % p;
        }
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    if m == 0 {
        return false;
    }
    if m == 1 {
        return true;
    }
    // Trial division by every monic polynomial of degree 1..=m/2.
    for d in 1..=m / 2 {
        let count = p.pow(d as u32);
        for enc in 0..count {
            let mut g = vec![0u64; d + 1];
            let mut e = enc;
            for c in g.iter_mut().take(d) {
                *c = e % p;
                e /= p;
            }
            g[d] = 1;
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn least_irreducible(p: u64, m: usize) -> Vec<u64> {
    let count = p.pow(m as u32);
    for enc in 0..count {
        let mut f = vec![0u64; m + 1];
        let mut e = enc;
        for c in f.iter_mut().take(m) {
            *c = e % p;
            e /= p;
        }
        f[m] = 1;
        if poly_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

impl FieldDescriptor {
    pub fn rationals() -> Field {
        Arc::new(FieldDescriptor {
            kind: FieldKind::Rationals,
        })
    }

    /// GF(p^m).  The modulus is monic of degree m (lowest degree first,
    /// length m + 1); when omitted, the lexicographically least irreducible
    /// is used so values are portable.
    pub fn finite(p: u64, m: usize, modulus: Option<Vec<u64>>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 || (p as u128).pow(m as u32) > MAX_ENUM_ORDER as u128 {
            return Err(Error::BadModulusDegree);
        }
        let modulus = match modulus {
            Some(mut f) => {
                for c in f.iter_mut() {
                    *c %= p;
                }
                if f.len() != m + 1 || f[m] == 0 {
                    return Err(Error::BadModulusDegree);
                }
                if f[m] != 1 {
                    // normalize monic
                    let inv = mod_inv_prime(f[m], p);
                    for c in f.iter_mut() {
                        *c = *c * inv % p;
                    }
                }
                if !poly_is_irreducible(&f, p) {
                    return Err(Error::ReducibleModulus);
                }
                f
            }
            None => least_irreducible(p, m),
        };
        Ok(Arc::new(FieldDescriptor {
            kind: FieldKind::Finite { p, m, modulus },
        }))
    }

    /// GF(p) prime field.
    pub fn prime(p: u64) -> Result<Field> {
        Self::finite(p, 1, None)
    }

    pub fn characteristic(&self) -> u64 {
        match &self.kind {
            FieldKind::Rationals => 0,
            FieldKind::Finite { p, .. } => *p,
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match &self.kind {
            FieldKind::Rationals => None,
            FieldKind::Finite { p, m, .. } => Some(p.pow(*m as u32)),
        }
    }

    pub fn is_rationals(&self) -> bool {
        matches!(self.kind, FieldKind::Rationals)
    }
}

/// Field-element construction and sampling; these live on the `Arc` handle
/// because every scalar keeps a reference to its descriptor.
pub trait FieldOps {
    fn zero(&self) -> FieldScalar;
    fn one(&self) -> FieldScalar;
    fn int(&self, n: i64) -> FieldScalar;
    fn ratio(&self, num: i64, den: i64) -> Result<FieldScalar>;
    fn from_bigrational(&self, r: BigRational) -> Result<FieldScalar>;
    fn poly(&self, coeffs: &[u64]) -> Result<FieldScalar>;
    fn elements(&self) -> Vec<FieldScalar>;
    fn sample<R: Rng>(&self, rng: &mut R, bound: i64) -> FieldScalar;
    fn parse(&self, s: &str) -> Result<FieldScalar>;
}

impl FieldOps for Field {
    fn zero(&self) -> FieldScalar {
        match &self.kind {
            FieldKind::Rationals => FieldScalar {
                field: self.clone(),
                value: Value::Rat(BigRational::zero()),
            },
            FieldKind::Finite { .. } => FieldScalar {
                field: self.clone(),
                value: Value::Poly(vec![]),
            },
        }
    }

    fn one(&self) -> FieldScalar {
        self.int(1)
    }

    fn int(&self, n: i64) -> FieldScalar {
        match &self.kind {
            FieldKind::Rationals => FieldScalar {
                field: self.clone(),
                value: Value::Rat(BigRational::from_integer(BigInt::from(n))),
            },
            FieldKind::Finite { p, .. } => {
                let r = n.rem_euclid(*p as i64) as u64;
                let mut v = vec![r];
                poly_trim(&mut v);
                FieldScalar {
                    field: self.clone(),
                    value: Value::Poly(v),
                }
            }
        }
    }

    fn ratio(&self, num: i64, den: i64) -> Result<FieldScalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        match &self.kind {
            FieldKind::Rationals => Ok(FieldScalar {
                field: self.clone(),
                value: Value::Rat(BigRational::new(BigInt::from(num), BigInt::from(den))),
            }),
            FieldKind::Finite { .. } => self.int(num).checked_div(&self.int(den)),
        }
    }

    fn from_bigrational(&self, r: BigRational) -> Result<FieldScalar> {
        match &self.kind {
            FieldKind::Rationals => Ok(FieldScalar {
                field: self.clone(),
                value: Value::Rat(r),
            }),
            FieldKind::Finite { p, .. } => {
                let p_big = BigInt::from(*p);
                let num = r.numer().mod_floor_u64(&p_big);
                let den = r.denom().mod_floor_u64(&p_big);
                if den == 0 {
                    return Err(Error::DivisionByZero);
                }
                self.int(num as i64).checked_div(&self.int(den as i64))
            }
        }
    }

    fn poly(&self, coeffs: &[u64]) -> Result<FieldScalar> {
        match &self.kind {
            FieldKind::Rationals => Err(Error::DescriptorMismatch),
            FieldKind::Finite { p, m, .. } => {
                if coeffs.len() > *m {
                    return Err(Error::BadModulusDegree);
                }
                let mut v: Vec<u64> = coeffs.iter().map(|c| c % p).collect();
                poly_trim(&mut v);
                Ok(FieldScalar {
                    field: self.clone(),
                    value: Value::Poly(v),
                })
            }
        }
    }

    /// All elements of a finite field, ordered by integer encoding
    /// c0 + c1 p + ... ; empty for the rationals.
    fn elements(&self) -> Vec<FieldScalar> {
        match &self.kind {
            FieldKind::Rationals => vec![],
            FieldKind::Finite { p, m, .. } => {
                let q = p.pow(*m as u32);
                (0..q)
                    .map(|enc| {
                        let mut v = vec![0u64; *m];
                        let mut e = enc;
                        for c in v.iter_mut() {
                            *c = e % p;
                            e /= p;
                        }
                        poly_trim(&mut v);
                        FieldScalar {
                            field: self.clone(),
                            value: Value::Poly(v),
                        }
                    })
                    .collect()
            }
        }
    }

    /// Random element; over the rationals an integer in [-bound, bound].
    fn sample<R: Rng>(&self, rng: &mut R, bound: i64) -> FieldScalar {
        match &self.kind {
            FieldKind::Rationals => self.int(rng.gen_range(-bound..=bound)),
            FieldKind::Finite { p, m, .. } => {
                let mut v = vec![0u64; *m];
                for c in v.iter_mut() {
                    *c = rng.gen_range(0..*p);
                }
                poly_trim(&mut v);
                FieldScalar {
                    field: self.clone(),
                    value: Value::Poly(v),
                }
            }
        }
    }

    /// Parse "a", "a/b" over the rationals; "a" or "[c0,c1,...]" over GF(p^m).
    fn parse(&self, s: &str) -> Result<FieldScalar> {
        let s = s.trim();
        match &self.kind {
            FieldKind::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s, "1"),
                };
                let n: BigInt = num
                    .parse()
                    .map_err(|_| Error::ConfigParse(format!("bad rational: {s}")))?;
                let d: BigInt = den
                    .parse()
                    .map_err(|_| Error::ConfigParse(format!("bad rational: {s}")))?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(FieldScalar {
                    field: self.clone(),
                    value: Value::Rat(BigRational::new(n, d)),
                })
            }
            FieldKind::Finite { .. } => {
                if let Some(body) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
                    let coeffs: std::result::Result<Vec<u64>, _> =
                        body.split(',').map(|c| c.trim().parse::<u64>()).collect();
                    let coeffs =
                        coeffs.map_err(|_| Error::ConfigParse(format!("bad element: {s}")))?;
                    self.poly(&coeffs)
                } else {
                    let n: i64 = s
                        .parse()
                        .map_err(|_| Error::ConfigParse(format!("bad element: {s}")))?;
                    Ok(self.int(n))
                }
            }
        }
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: &BigInt) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: &BigInt) -> u64 {
        let r = ((self % p) + p) % p;
        r.to_u64().expect("residue fits in u64")
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Value {
    Rat(BigRational),
    /// Residue polynomial, lowest degree first, fully reduced (degree < m,
    /// no trailing zeros); the zero element is the empty vector.
    Poly(Vec<u64>),
}

/// An exact element of Q or GF(p^m), in canonical form.
#[derive(Debug, Clone)]
pub struct FieldScalar {
    field: Field,
    value: Value,
}

impl PartialEq for FieldScalar {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.value == other.value
    }
}

impl Eq for FieldScalar {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldScalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if *self.field == *other.field {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch)
        }
    }

    pub fn checked_arith(&self, other: &Self, op: ArithOp) -> Result<FieldScalar> {
        match op {
            ArithOp::Add => self.checked_add(other),
            ArithOp::Sub => self.checked_sub(other),
            ArithOp::Mul => self.checked_mul(other),
            ArithOp::Div => self.checked_div(other),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<FieldScalar> {
        self.same_field(other)?;
        Ok(self.raw_add(other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<FieldScalar> {
        self.same_field(other)?;
        Ok(self.raw_sub(other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<FieldScalar> {
        self.same_field(other)?;
        Ok(self.raw_mul(other))
    }

    pub fn checked_div(&self, other: &Self) -> Result<FieldScalar> {
        self.same_field(other)?;
        let inv = other.inv().ok_or(Error::DivisionByZero)?;
        Ok(self.raw_mul(&inv))
    }

    fn raw_add(&self, other: &Self) -> FieldScalar {
        let value = match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Poly(a), Value::Poly(b)) => {
                let p = self.field.characteristic();
                Value::Poly(poly_add(a, b, p))
            }
            _ => unreachable!("same descriptor"),
        };
        FieldScalar {
            field: self.field.clone(),
            value,
        }
    }

    fn raw_sub(&self, other: &Self) -> FieldScalar {
        let value = match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a - b),
            (Value::Poly(a), Value::Poly(b)) => {
                let p = self.field.characteristic();
                Value::Poly(poly_sub(a, b, p))
            }
            _ => unreachable!("same descriptor"),
        };
        FieldScalar {
            field: self.field.clone(),
            value,
        }
    }

    fn raw_mul(&self, other: &Self) -> FieldScalar {
        let value = match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Poly(a), Value::Poly(b)) => {
                let (p, modulus) = match &self.field.kind {
                    FieldKind::Finite { p, modulus, .. } => (*p, modulus),
                    _ => unreachable!(),
                };
                let prod = poly_mul(a, b, p);
                Value::Poly(poly_rem(&prod, modulus, p))
            }
            _ => unreachable!("same descriptor"),
        };
        FieldScalar {
            field: self.field.clone(),
            value,
        }
    }

    pub fn pow(&self, mut e: u64) -> FieldScalar {
        let mut result = Scalar::one(self);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.raw_mul(&base);
            }
            base = base.raw_mul(&base);
            e >>= 1;
        }
        result
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rat(r) => Some(r),
            _ => None,
        }
    }

    /// Integer encoding c0 + c1 p + ... of a finite-field element.
    pub fn encoding(&self) -> Option<u64> {
        match (&self.value, &self.field.kind) {
            (Value::Poly(v), FieldKind::Finite { p, .. }) => {
                let mut enc = 0u64;
                for &c in v.iter().rev() {
                    enc = enc * p + c;
                }
                Some(enc)
            }
            _ => None,
        }
    }

    /// Sign over Q: -1, 0, or 1.
    pub fn sign(&self) -> Option<i32> {
        self.as_rational().map(|r| match r.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        })
    }

    pub fn is_square(&self) -> bool {
        match (&self.value, &self.field.kind) {
            (Value::Rat(r), _) => {
                if r.is_zero() {
                    return true;
                }
                !r.is_negative() && r.numer().sqrt().pow(2) == *r.numer()
                    && r.denom().sqrt().pow(2) == *r.denom()
            }
            (Value::Poly(v), FieldKind::Finite { p, m, .. }) => {
                if v.is_empty() {
                    return true;
                }
                if *p == 2 {
                    return true; // Frobenius is surjective
                }
                let q = p.pow(*m as u32);
                self.pow((q - 1) / 2).is_one()
            }
            _ => unreachable!(),
        }
    }

    /// Exact square root when one exists.
    pub fn sqrt(&self) -> Option<FieldScalar> {
        match (&self.value, &self.field.kind) {
            (Value::Rat(r), _) => {
                if !self.is_square() {
                    return None;
                }
                Some(FieldScalar {
                    field: self.field.clone(),
                    value: Value::Rat(BigRational::new(r.numer().sqrt(), r.denom().sqrt())),
                })
            }
            (Value::Poly(_), FieldKind::Finite { p, m, .. }) => {
                if *p == 2 {
                    // x -> x^2 is the Frobenius, invert by repeated squaring.
                    let q = p.pow(*m as u32);
                    return Some(self.pow(q / 2));
                }
                if !self.is_square() {
                    return None;
                }
                // Fields here are small; scan.
                for cand in self.field.elements() {
                    if cand.raw_mul(&cand) == *self {
                        return Some(cand);
                    }
                }
                None
            }
            _ => unreachable!(),
        }
    }

    /// Canonical representative of the square class a (k^x)^2.
    ///
    /// Over Q: the squarefree integer with the sign of a; over GF(q) with q
    /// odd: 1 or a fixed non-square; over GF(2^m): 1.
    pub fn square_class(&self) -> Result<FieldScalar> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        match (&self.value, &self.field.kind) {
            (Value::Rat(r), _) => {
                let n = r.numer() * r.denom();
                let (sign, mag) = match n.sign() {
                    Sign::Minus => (-1, -n.clone()),
                    _ => (1, n.clone()),
                };
                let mut rest = mag;
                let mut sf = BigInt::one();
                let mut f = BigInt::from(2);
                while &f * &f <= rest {
                    let mut count = 0u32;
                    while (&rest % &f).is_zero() {
                        rest /= &f;
                        count += 1;
                    }
                    if count % 2 == 1 {
                        sf *= &f;
                    }
                    f += 1;
                }
                sf *= rest; // leftover prime
                if sign < 0 {
                    sf = -sf;
                }
                Ok(FieldScalar {
                    field: self.field.clone(),
                    value: Value::Rat(BigRational::from_integer(sf)),
                })
            }
            (Value::Poly(_), FieldKind::Finite { p, .. }) => {
                if *p == 2 || self.is_square() {
                    Ok(Scalar::one(self))
                } else {
                    // fixed representative: least non-square in encoding order
                    for cand in self.field.elements() {
                        if !cand.is_zero() && !cand.is_square() {
                            return Ok(cand);
                        }
                    }
                    unreachable!("odd finite fields contain non-squares")
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Scalar for FieldScalar {
    fn zero(&self) -> Self {
        FieldOps::zero(&self.field)
    }

    fn one(&self) -> Self {
        FieldOps::one(&self.field)
    }

    fn add(&self, other: &Self) -> Self {
        assert_eq!(*self.field, *other.field, "descriptor mismatch");
        self.raw_add(other)
    }

    fn sub(&self, other: &Self) -> Self {
        assert_eq!(*self.field, *other.field, "descriptor mismatch");
        self.raw_sub(other)
    }

    fn mul(&self, other: &Self) -> Self {
        assert_eq!(*self.field, *other.field, "descriptor mismatch");
        self.raw_mul(other)
    }

    fn neg(&self) -> Self {
        Scalar::zero(self).raw_sub(self)
    }

    fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rat(r) => r.is_zero(),
            Value::Poly(v) => v.is_empty(),
        }
    }

    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            return None;
        }
        match &self.field.kind {
            FieldKind::Rationals => {
                let r = self.as_rational().unwrap();
                Some(FieldScalar {
                    field: self.field.clone(),
                    value: Value::Rat(r.recip()),
                })
            }
            FieldKind::Finite { p, m, .. } => {
                let q = p.pow(*m as u32);
                Some(self.pow(q - 2))
            }
        }
    }

    fn from_i64(&self, n: i64) -> Self {
        self.field.int(n)
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rat(r) => write!(f, "{r}"),
            Value::Poly(v) => {
                if v.is_empty() {
                    return write!(f, "0");
                }
                if v.len() == 1 {
                    return write!(f, "{}", v[0]);
                }
                let terms: Vec<String> = v
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| match (i, c) {
                        (0, c) => format!("{c}"),
                        (1, 1) => "t".to_string(),
                        (1, c) => format!("{c}*t"),
                        (i, 1) => format!("t^{i}"),
                        (i, c) => format!("{c}*t^{i}"),
                    })
                    .collect();
                write!(f, "{}", terms.join("+"))
            }
        }
    }
}

/// Checked field arithmetic on two scalars.
pub fn field_arith(a: &FieldScalar, b: &FieldScalar, op: ArithOp) -> Result<FieldScalar> {
    a.checked_arith(b, op)
}

// ------------------------------------------------------------------
// Quadratic etale algebras
// ------------------------------------------------------------------

/// Shared handle to a quadratic etale algebra.
pub type Etale = Arc<EtaleAlgebra>;

#[derive(Debug, Clone, PartialEq)]
pub enum EtaleShape {
    /// k x k with the swap involution.
    Split,
    /// k[t] / (t^2 - beta t + gamma0), irreducible and separable.
    Fld {
        beta: FieldScalar,
        gamma0: FieldScalar,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct EtaleAlgebra {
    base: Field,
    shape: EtaleShape,
    /// Discriminant square-class representative; 1 in characteristic 2 and
    /// in the split case.
    delta: FieldScalar,
    /// Trace-one generator d (internal coordinates).
    d_coords: (FieldScalar, FieldScalar),
    /// Trace-zero element with square in delta's square class (char != 2).
    t_coords: Option<(FieldScalar, FieldScalar)>,
}

impl EtaleAlgebra {
    pub fn split(base: Field) -> Etale {
        let one = base.one();
        let zero = FieldOps::zero(&base);
        let t_coords = if base.characteristic() != 2 {
            Some((one.clone(), Scalar::neg(&one)))
        } else {
            None
        };
        Arc::new(EtaleAlgebra {
            base: base.clone(),
            shape: EtaleShape::Split,
            delta: one.clone(),
            d_coords: (one, zero),
            t_coords,
        })
    }

    /// Field extension K = k[t]/(t^2 - beta t + gamma0).
    pub fn field_ext(base: Field, beta: FieldScalar, gamma0: FieldScalar) -> Result<Etale> {
        if *beta.field().as_ref() != *base || *gamma0.field().as_ref() != *base {
            return Err(Error::DescriptorMismatch);
        }
        let char2 = base.characteristic() == 2;
        let disc = {
            // beta^2 - 4 gamma0
            let four = base.int(4);
            Scalar::sub(&Scalar::mul(&beta, &beta), &Scalar::mul(&four, &gamma0))
        };
        if char2 {
            if Scalar::is_zero(&beta) {
                return Err(Error::InseparablePolynomial);
            }
            if !beta.is_one() {
                // Artin-Schreier shape t^2 + t + c expected after scaling.
                return Err(Error::CharTwoUnsupportedShape);
            }
            // reducible iff t^2 + t + gamma0 has a root
            for x in base.elements() {
                let val = Scalar::add(&Scalar::add(&Scalar::mul(&x, &x), &x), &gamma0);
                if Scalar::is_zero(&val) {
                    return Err(Error::ReduciblePolynomial);
                }
            }
            let d_coords = (FieldOps::zero(&base), base.one());
            return Ok(Arc::new(EtaleAlgebra {
                base: base.clone(),
                shape: EtaleShape::Fld { beta, gamma0 },
                delta: base.one(),
                d_coords,
                t_coords: None,
            }));
        }
        if Scalar::is_zero(&disc) {
            return Err(Error::InseparablePolynomial);
        }
        if disc.is_square() {
            return Err(Error::ReduciblePolynomial);
        }
        let delta = disc.square_class()?;
        let d_coords = if let Some(bi) = Scalar::inv(&beta) {
            (FieldOps::zero(&base), bi)
        } else {
            let half = base.ratio(1, 2)?;
            (half, base.one())
        };
        let half = base.ratio(1, 2)?;
        let t_coords = (Scalar::neg(&Scalar::mul(&beta, &half)), base.one());
        Ok(Arc::new(EtaleAlgebra {
            base,
            shape: EtaleShape::Fld { beta, gamma0 },
            delta,
            d_coords: (d_coords.0, d_coords.1),
            t_coords: Some(t_coords),
        }))
    }

    /// K = k(sqrt(a)): shorthand for t^2 - a.
    pub fn adjoin_sqrt(base: Field, a: FieldScalar) -> Result<Etale> {
        let zero = FieldOps::zero(&base);
        EtaleAlgebra::field_ext(base, zero, Scalar::neg(&a))
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn shape(&self) -> &EtaleShape {
        &self.shape
    }

    pub fn is_split(&self) -> bool {
        matches!(self.shape, EtaleShape::Split)
    }

    /// Discriminant square-class representative delta.
    pub fn delta(&self) -> &FieldScalar {
        &self.delta
    }
}

/// Element construction on the shared handle.
pub trait EtaleOps {
    fn zero_el(&self) -> EtaleElement;
    fn one_el(&self) -> EtaleElement;
    fn from_base(&self, a: &FieldScalar) -> EtaleElement;
    fn from_coords(&self, a: FieldScalar, b: FieldScalar) -> EtaleElement;
    fn generator(&self) -> EtaleElement;
    fn d(&self) -> EtaleElement;
    fn t_exact(&self) -> Result<EtaleElement>;
    fn delta0(&self) -> FieldScalar;
    fn elements(&self) -> Vec<EtaleElement>;
    fn sample<R: Rng>(&self, rng: &mut R, bound: i64) -> EtaleElement;
}

impl EtaleOps for Etale {
    fn zero_el(&self) -> EtaleElement {
        let z = FieldOps::zero(&self.base);
        EtaleElement {
            alg: self.clone(),
            a: z.clone(),
            b: z,
        }
    }

    fn one_el(&self) -> EtaleElement {
        self.from_base(&self.base.one())
    }

    fn from_base(&self, a: &FieldScalar) -> EtaleElement {
        match self.shape {
            // k embeds diagonally in k x k
            EtaleShape::Split => EtaleElement {
                alg: self.clone(),
                a: a.clone(),
                b: a.clone(),
            },
            EtaleShape::Fld { .. } => EtaleElement {
                alg: self.clone(),
                a: a.clone(),
                b: FieldOps::zero(&self.base),
            },
        }
    }

    fn from_coords(&self, a: FieldScalar, b: FieldScalar) -> EtaleElement {
        EtaleElement {
            alg: self.clone(),
            a,
            b,
        }
    }

    /// The defining generator: (1, 0) in the split case, the polynomial root
    /// t in the field case.
    fn generator(&self) -> EtaleElement {
        match self.shape {
            EtaleShape::Split => EtaleElement {
                alg: self.clone(),
                a: self.base.one(),
                b: FieldOps::zero(&self.base),
            },
            EtaleShape::Fld { .. } => EtaleElement {
                alg: self.clone(),
                a: FieldOps::zero(&self.base),
                b: self.base.one(),
            },
        }
    }

    /// Cached trace-one generator d with K = k[d].
    fn d(&self) -> EtaleElement {
        match self.shape {
            EtaleShape::Split => EtaleElement {
                alg: self.clone(),
                a: self.d_coords.0.clone(),
                b: self.d_coords.1.clone(),
            },
            EtaleShape::Fld { .. } => {
                let (c0, c1) = self.d_coords.clone();
                let g = self.generator();
                let gb = self.from_base(&c1);
                self.from_base(&c0).add(&g.mul(&gb))
            }
        }
    }

    /// Element t with t^2 = delta exactly and trace zero (char != 2).
    fn t_exact(&self) -> Result<EtaleElement> {
        let (c0, c1) = self
            .t_coords
            .clone()
            .ok_or(Error::CharTwoUnsupportedShape)?;
        let t_raw = match self.shape {
            EtaleShape::Split => EtaleElement {
                alg: self.clone(),
                a: c0,
                b: c1,
            },
            EtaleShape::Fld { .. } => {
                let g = self.generator();
                self.from_base(&c0).add(&g.mul(&self.from_base(&c1)))
            }
        };
        // t_raw^2 is delta times a base-field square; rescale.
        let sq = t_raw.mul(&t_raw);
        debug_assert!(Scalar::is_zero(&sq.b_coord_pure()));
        let ratio = sq.scalar_part().checked_div(&self.delta)?;
        let c = ratio.sqrt().ok_or(Error::InseparablePolynomial)?;
        let ci = Scalar::inv(&c).ok_or(Error::DivisionByZero)?;
        Ok(t_raw.mul(&self.from_base(&ci)))
    }

    /// N_K(d) for the cached trace-one generator.
    fn delta0(&self) -> FieldScalar {
        self.d().norm()
    }

    fn elements(&self) -> Vec<EtaleElement> {
        let base_elems = self.base.elements();
        let mut out = Vec::with_capacity(base_elems.len() * base_elems.len());
        for a in &base_elems {
            for b in &base_elems {
                out.push(EtaleElement {
                    alg: self.clone(),
                    a: a.clone(),
                    b: b.clone(),
                });
            }
        }
        out
    }

    fn sample<R: Rng>(&self, rng: &mut R, bound: i64) -> EtaleElement {
        EtaleElement {
            alg: self.clone(),
            a: self.base.sample(rng, bound),
            b: self.base.sample(rng, bound),
        }
    }
}

/// Element of a quadratic etale algebra: componentwise pair (a, b) in the
/// split case, a + b t in the field case.
#[derive(Debug, Clone)]
pub struct EtaleElement {
    alg: Etale,
    a: FieldScalar,
    b: FieldScalar,
}

impl PartialEq for EtaleElement {
    fn eq(&self, other: &Self) -> bool {
        *self.alg == *other.alg && self.a == other.a && self.b == other.b
    }
}

impl EtaleElement {
    pub fn algebra(&self) -> &Etale {
        &self.alg
    }

    pub fn coords(&self) -> (&FieldScalar, &FieldScalar) {
        (&self.a, &self.b)
    }

    /// Conjugation iota.
    pub fn conj(&self) -> EtaleElement {
        match &self.alg.shape {
            EtaleShape::Split => EtaleElement {
                alg: self.alg.clone(),
                a: self.b.clone(),
                b: self.a.clone(),
            },
            EtaleShape::Fld { beta, .. } => EtaleElement {
                // iota(a + b t) = (a + b beta) - b t
                alg: self.alg.clone(),
                a: Scalar::add(&self.a, &Scalar::mul(&self.b, beta)),
                b: Scalar::neg(&self.b),
            },
        }
    }

    /// N_K(x) = x iota(x), as a base-field scalar.
    pub fn norm(&self) -> FieldScalar {
        let n = self.mul(&self.conj());
        debug_assert!(Scalar::is_zero(&n.b_coord_pure()));
        n.scalar_part()
    }

    /// T_K(x) = x + iota(x), as a base-field scalar.
    pub fn trace(&self) -> FieldScalar {
        let t = self.add(&self.conj());
        debug_assert!(Scalar::is_zero(&t.b_coord_pure()));
        t.scalar_part()
    }

    /// Bilinearized norm N_K(x, y) = N_K(x + y) - N_K(x) - N_K(y).
    pub fn norm_bilinear(&self, other: &EtaleElement) -> FieldScalar {
        let s = self.add(other).norm();
        Scalar::sub(&Scalar::sub(&s, &self.norm()), &other.norm())
    }

    /// The base-field part when this element lies in k; callers must check
    /// `b_coord_pure` first (or use `as_base`).
    fn scalar_part(&self) -> FieldScalar {
        match self.alg.shape {
            EtaleShape::Split => self.a.clone(),
            EtaleShape::Fld { .. } => self.a.clone(),
        }
    }

    /// Deviation of this element from the diagonal k inside K; zero iff the
    /// element lies in the base field.
    fn b_coord_pure(&self) -> FieldScalar {
        match self.alg.shape {
            EtaleShape::Split => Scalar::sub(&self.a, &self.b),
            EtaleShape::Fld { .. } => self.b.clone(),
        }
    }

    /// The element as a base-field scalar, when it lies in k.
    pub fn as_base(&self) -> Option<FieldScalar> {
        if Scalar::is_zero(&self.b_coord_pure()) {
            Some(self.scalar_part())
        } else {
            None
        }
    }
}

impl Scalar for EtaleElement {
    fn zero(&self) -> Self {
        self.alg.zero_el()
    }

    fn one(&self) -> Self {
        self.alg.one_el()
    }

    fn add(&self, other: &Self) -> Self {
        assert_eq!(*self.alg, *other.alg, "etale algebra mismatch");
        EtaleElement {
            alg: self.alg.clone(),
            a: Scalar::add(&self.a, &other.a),
            b: Scalar::add(&self.b, &other.b),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        assert_eq!(*self.alg, *other.alg, "etale algebra mismatch");
        EtaleElement {
            alg: self.alg.clone(),
            a: Scalar::sub(&self.a, &other.a),
            b: Scalar::sub(&self.b, &other.b),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        assert_eq!(*self.alg, *other.alg, "etale algebra mismatch");
        match &self.alg.shape {
            EtaleShape::Split => EtaleElement {
                alg: self.alg.clone(),
                a: Scalar::mul(&self.a, &other.a),
                b: Scalar::mul(&self.b, &other.b),
            },
            EtaleShape::Fld { beta, gamma0 } => {
                // (a + b t)(c + e t), t^2 = beta t - gamma0
                let (a, b, c, e) = (&self.a, &self.b, &other.a, &other.b);
                let be = Scalar::mul(b, e);
                let new_a = Scalar::sub(&Scalar::mul(a, c), &Scalar::mul(&be, gamma0));
                let new_b = Scalar::add(
                    &Scalar::add(&Scalar::mul(a, e), &Scalar::mul(b, c)),
                    &Scalar::mul(&be, beta),
                );
                EtaleElement {
                    alg: self.alg.clone(),
                    a: new_a,
                    b: new_b,
                }
            }
        }
    }

    fn neg(&self) -> Self {
        EtaleElement {
            alg: self.alg.clone(),
            a: Scalar::neg(&self.a),
            b: Scalar::neg(&self.b),
        }
    }

    fn is_zero(&self) -> bool {
        Scalar::is_zero(&self.a) && Scalar::is_zero(&self.b)
    }

    fn inv(&self) -> Option<Self> {
        match self.alg.shape {
            EtaleShape::Split => {
                let ai = Scalar::inv(&self.a)?;
                let bi = Scalar::inv(&self.b)?;
                Some(EtaleElement {
                    alg: self.alg.clone(),
                    a: ai,
                    b: bi,
                })
            }
            EtaleShape::Fld { .. } => {
                let n = self.norm();
                let ni = Scalar::inv(&n)?;
                let c = self.conj();
                Some(EtaleElement {
                    alg: self.alg.clone(),
                    a: Scalar::mul(&c.a, &ni),
                    b: Scalar::mul(&c.b, &ni),
                })
            }
        }
    }

    fn from_i64(&self, n: i64) -> Self {
        self.alg.from_base(&self.alg.base.int(n))
    }
}

impl fmt::Display for EtaleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.alg.shape {
            EtaleShape::Split => write!(f, "({}, {})", self.a, self.b),
            EtaleShape::Fld { .. } => write!(f, "{} + ({})*w", self.a, self.b),
        }
    }
}

/// Norm and trace of an etale element as a pair.
pub fn etale_norm_trace(x: &EtaleElement) -> (FieldScalar, FieldScalar) {
    (x.norm(), x.trace())
}
