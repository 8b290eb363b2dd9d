//! Digit types a sequence can be stored in.
//!
//! Every family member of length `n` has values in `0..n`, so any unsigned
//! primitive wide enough for `n - 1` works. `u8` is the default through the
//! crate-root aliases; wider types only matter for very long sequences.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{FromPrimitive, PrimInt, ToPrimitive, Unsigned};

/// An unsigned primitive integer usable as a sequence digit.
pub trait Digit:
    PrimInt + Unsigned + FromPrimitive + ToPrimitive + Debug + Display + Hash + Default + Send + Sync + 'static
{
    /// Converts a small non-negative value into a digit.
    ///
    /// Callers check the range up front (see [`Digit::fits`]); this panics
    /// only on an internal invariant violation.
    #[inline]
    fn from_index(value: usize) -> Self {
        Self::from_usize(value).expect("digit value out of range for digit type")
    }

    /// The digit as a `usize`.
    #[inline]
    fn index(self) -> usize {
        self.to_usize().expect("digit does not fit in usize")
    }

    /// Whether every value in `0..=max` is representable.
    #[inline]
    fn fits(max: usize) -> bool {
        Self::from_usize(max).is_some()
    }
}

impl<T> Digit for T where
    T: PrimInt + Unsigned + FromPrimitive + ToPrimitive + Debug + Display + Hash + Default + Send + Sync + 'static
{
}

/// Renders a sequence as a digit string, e.g. `01020`.
///
/// Values above 9 are written in full, so the output is only unambiguous when
/// every value is a single decimal digit.
pub fn compact<D: Digit>(s: &[D]) -> String {
    s.iter().map(|d| d.to_string()).collect()
}

/// Renders a sequence with values separated by `sep`.
pub fn joined<D: Digit>(s: &[D], sep: &str) -> String {
    s.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(sep)
}

/// Parses a digit string such as `01020` (one decimal digit per value).
pub fn parse_compact<D: Digit>(text: &str) -> Option<Vec<D>> {
    text.trim().chars().map(|c| c.to_digit(10).and_then(|v| D::from_u32(v))).collect()
}
