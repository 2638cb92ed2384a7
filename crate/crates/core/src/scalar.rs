use std::fmt::{Debug, Display};
use std::hash::Hash;

/// Exact field arithmetic needed by the linear-algebra layer.
///
/// Implementors must have decidable, structural equality.
pub trait Field: Clone + Eq + Hash + Debug + Display + Send + Sync + 'static {
    /// Short tag used when serializing subspaces ("F", "L", ...).
    const TAG: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Heuristic size of the representation; elimination prefers small pivots.
    fn cost(&self) -> usize {
        0
    }

    /// A nonzero multiple of `v` on which arithmetic is cheap, e.g. with
    /// denominators cleared. Only the spanned point matters to callers.
    fn clear_denominators(v: &[Self; 4]) -> [Self; 4] {
        v.clone()
    }

    /// Reduced row echelon form through a representation-specific route.
    /// `None` falls back to generic elimination.
    fn rref_override(_rows: &[[Self; 4]]) -> Option<Vec<[Self; 4]>> {
        None
    }
}
