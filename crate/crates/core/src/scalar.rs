//! Common interface for exact scalars.
//!
//! Every algebra carrier in this crate is generic over a scalar type so the
//! same Albert-algebra code runs over a base field k and over a quadratic
//! etale extension K of it.  Scalars carry their own ring context (an `Arc`
//! to a descriptor), so constants are minted from an existing value.

/// Exact commutative-ring element with enough structure for our linear
/// algebra: equality is decidable, inverses are partial (split etale
/// algebras have zero divisors).
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero and for zero divisors.
    fn inv(&self) -> Option<Self>;
    /// Small integer constant in the same ring as `self`.
    fn from_i64(&self, n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one()
    }

    fn double(&self) -> Self {
        self.add(self)
    }
}
