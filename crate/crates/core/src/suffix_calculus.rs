//! Right-to-left calculus on suffixes of restricted growth sequences.
//!
//! A suffix `b = b_{k+1} ... b_n` is admissible in a family of length `n` when
//! some member ends with it. Its defining set `alpha(b)` holds every `x` for
//! which `x b` is still admissible, and `mu(b)` is the smallest statistic value
//! a completing prefix `s_1 ... s_k b_{k+1}` can have. Both are computed by
//! prepending one value at a time, starting from the empty suffix, using the
//! closed-form case tables for each family. `k` is always `n - b.len()`.

use std::collections::BTreeSet;

use crate::digit::Digit;
use crate::error::{Error, Result};
use crate::seq_model::{omega, Class};

/// Which end of a contiguous sublist to describe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum End {
    First,
    Last,
}

/// The defining set of a suffix.
///
/// Every case the four families produce is a contiguous range `low..=high`
/// (possibly empty), optionally followed by one isolated larger value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DefiningSet {
    low: usize,
    /// Exclusive end of the contiguous part.
    end: usize,
    extra: Option<usize>,
}

impl DefiningSet {
    pub const EMPTY: DefiningSet = DefiningSet { low: 0, end: 0, extra: None };

    /// `{low, ..., high}`.
    pub fn range(low: usize, high: usize) -> Self {
        DefiningSet { low, end: high + 1, extra: None }
    }

    pub fn single(x: usize) -> Self {
        Self::range(x, x)
    }

    /// `{0, ..., below - 1} ∪ {top}` with `top >= below`.
    fn initial_plus(below: usize, top: usize) -> Self {
        debug_assert!(top >= below);
        DefiningSet { low: 0, end: below, extra: Some(top) }
    }

    pub fn contains(&self, x: usize) -> bool {
        (self.low..self.end).contains(&x) || self.extra == Some(x)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        (self.low..self.end).chain(self.extra)
    }

    pub fn len(&self) -> usize {
        self.end.saturating_sub(self.low) + usize::from(self.extra.is_some())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn max(&self) -> Option<usize> {
        self.iter().next_back()
    }

    /// Second largest element, if the set has at least two.
    pub fn second_largest(&self) -> Option<usize> {
        self.iter().rev().nth(1)
    }

    pub fn to_set(&self) -> BTreeSet<usize> {
        self.iter().collect()
    }
}

/// A suffix together with its defining set and minimum statistic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixInfo<D> {
    class: Class,
    n: usize,
    suffix: Vec<D>,
    mu: Option<usize>,
    alpha: DefiningSet,
}

impl<D: Digit> SuffixInfo<D> {
    /// The empty suffix of a length-`n` family: everything in `0..n` may end
    /// a member.
    pub fn empty(class: Class, n: usize) -> Result<Self> {
        class.require_gray("suffix calculus")?;
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        Ok(SuffixInfo { class, n, suffix: Vec::new(), mu: None, alpha: DefiningSet::range(0, n - 1) })
    }

    /// Builds the info for `b` by prepending its values right to left.
    pub fn new(class: Class, b: &[D], n: usize) -> Result<Self> {
        if b.len() > n {
            return Err(Error::SuffixTooLong { len: b.len(), n });
        }
        b.iter().rev().try_fold(Self::empty(class, n)?, |info, &x| info.prepend(x))
    }

    /// The suffix `x b`, or an error when it is not admissible.
    pub fn prepend(&self, x: D) -> Result<Self> {
        let xv = x.index();
        if self.k() == 0 || !self.alpha.contains(xv) {
            return Err(Error::NotAdmissible { class: self.class, n: self.n });
        }
        let mu = match (self.mu, self.head()) {
            (Some(w), Some(b0)) => next_mu(self.class, xv, w, b0),
            _ => match self.class {
                Class::Subexcedant => self.n - 1,
                _ => xv,
            },
        };
        let k = self.k() - 1;
        let alpha = if k == 0 { DefiningSet::EMPTY } else { defining_set(self.class, k, mu, xv) };
        let mut suffix = Vec::with_capacity(self.suffix.len() + 1);
        suffix.push(x);
        suffix.extend_from_slice(&self.suffix);
        Ok(SuffixInfo { class: self.class, n: self.n, suffix, mu: Some(mu), alpha })
    }

    pub fn class(&self) -> Class {
        self.class
    }

    pub fn suffix(&self) -> &[D] {
        &self.suffix
    }

    pub fn full_length(&self) -> usize {
        self.n
    }

    /// Number of positions left of the suffix.
    pub fn k(&self) -> usize {
        self.n - self.suffix.len()
    }

    /// `None` for the empty suffix.
    pub fn mu(&self) -> Option<usize> {
        self.mu
    }

    pub fn alpha(&self) -> DefiningSet {
        self.alpha
    }

    fn head(&self) -> Option<usize> {
        self.suffix.first().map(|d| d.index())
    }
}

/// `mu(x b)` from `mu(b) = w` and the head `b0` of `b`.
fn next_mu(class: Class, x: usize, w: usize, b0: usize) -> usize {
    match class {
        Class::Subexcedant => w - 1,
        Class::Ascent => {
            if x >= w {
                x
            } else if x >= b0 {
                w
            } else {
                w - 1
            }
        }
        Class::Rgf => {
            if x >= w {
                x
            } else if x >= b0 || b0 < w {
                w
            } else {
                w - 1
            }
        }
        Class::Staircase => x,
        Class::Descent => unreachable!("descent suffixes are rejected on construction"),
    }
}

/// Defining set of a suffix with `k >= 1` free positions, minimum statistic
/// `mu` and head `b0`.
fn defining_set(class: Class, k: usize, mu: usize, b0: usize) -> DefiningSet {
    let full = DefiningSet::range(0, k - 1);
    let forced = DefiningSet::single(k - 1);
    match class {
        Class::Subexcedant => full,
        Class::Ascent => {
            if mu >= k || (mu + 1 == k && b0 == 0) {
                forced
            } else if mu + 1 == k {
                // 0 < b0 <= mu < k
                DefiningSet::initial_plus(b0, k - 1)
            } else {
                full
            }
        }
        Class::Rgf => {
            if mu >= k || (mu + 1 == k && b0 + 1 < k) {
                forced
            } else {
                full
            }
        }
        Class::Staircase => {
            if b0 >= k {
                forced
            } else {
                DefiningSet::range(b0.saturating_sub(1), k - 1)
            }
        }
        Class::Descent => unreachable!("descent suffixes are rejected on construction"),
    }
}

/// Whether some length-`n` member of `class` ends with `b`.
pub fn is_admissible<D: Digit>(class: Class, b: &[D], n: usize) -> Result<bool> {
    match SuffixInfo::new(class, b, n) {
        Ok(_) => Ok(true),
        Err(Error::NotAdmissible { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// The defining set of an admissible suffix (`{0, ..., n-1}` when empty).
pub fn alpha<D: Digit>(class: Class, b: &[D], n: usize) -> Result<DefiningSet> {
    SuffixInfo::new(class, b, n).map(|info| info.alpha())
}

/// The minimum statistic value a completing prefix provides for `b`.
pub fn mu<D: Digit>(class: Class, b: &[D], n: usize) -> Result<usize> {
    if b.is_empty() {
        return Err(Error::EmptySequence);
    }
    let info = SuffixInfo::new(class, b, n)?;
    Ok(info.mu().expect("non-empty suffix has mu"))
}

/// First or last length-`n` member starting with `a`, in reflected Gray code
/// order.
///
/// With `M = omega(a)`, the last member is `a 0...0` when the digits of `a`
/// sum to an odd number, otherwise `a M 0...0` for odd `M` and
/// `a M (M+1) 0...0` for even `M`. The first member swaps the role of the
/// digit-sum parity.
pub fn extreme_with_prefix<D: Digit>(class: Class, a: &[D], n: usize, end: End) -> Result<Vec<D>> {
    let m = omega(class, a)?;
    let k = a.len();
    if k > n {
        return Err(Error::PrefixTooLong { len: k, n });
    }
    if !D::fits(n.saturating_sub(1)) {
        return Err(Error::DigitOverflow { max: n - 1 });
    }
    let mut s = a.to_vec();
    let odd_sum = a.iter().fold(false, |acc, d| acc ^ (d.index() & 1 == 1));
    let take_max = match end {
        End::Last => !odd_sum,
        End::First => odd_sum,
    };
    if take_max && s.len() < n {
        s.push(D::from_index(m));
        if m % 2 == 0 && s.len() < n {
            s.push(D::from_index(m + 1));
        }
    }
    s.resize(n, D::zero());
    Ok(s)
}

/// First or last length-`n` member ending with `b`, in co-reflected Gray code
/// order. Ascent, restricted growth function and staircase families only.
///
/// With `P = b_{k+1} + ... + b_n + (n - k)`, the value left of `b` is the
/// largest of `alpha(b)` for the last member when `P` is odd (the first
/// member when `P` is even), and the smallest otherwise. Everything further
/// left is then forced to a staircase `0 1 2 ...` except for at most one
/// extra position in the staircase family.
pub fn extreme_with_suffix<D: Digit>(class: Class, b: &[D], n: usize, end: End) -> Result<Vec<D>> {
    if class == Class::Subexcedant {
        return Err(Error::UnsupportedClass { class, operation: "extreme_with_suffix" });
    }
    let info = SuffixInfo::new(class, b, n)?;
    let k = info.k();
    if k == 0 {
        return Ok(b.to_vec());
    }
    let odd = b.iter().fold((n - k) % 2 == 1, |acc, d| acc ^ (d.index() & 1 == 1));
    let take_max = match end {
        End::Last => odd,
        End::First => !odd,
    };
    let staircase = |len: usize| (0..len).map(D::from_index);
    let mut s: Vec<D> = Vec::with_capacity(n);
    match class {
        Class::Ascent | Class::Rgf => {
            let alpha = info.alpha();
            let left = if take_max { alpha.max() } else { alpha.min() }.expect("non-empty defining set");
            if left == k - 1 {
                s.extend(staircase(k));
            } else {
                s.extend(staircase(k - 1));
                s.push(D::from_index(left));
            }
        }
        Class::Staircase => {
            let b0 = b.first().map_or(0, |d| d.index());
            if b0 == k || take_max {
                s.extend(staircase(k));
            } else if b0 == 0 || b0 % 2 == 1 {
                s.extend(staircase(k - 1));
                s.push(D::from_index(b0.saturating_sub(1)));
            } else {
                s.extend(staircase(k - 2));
                s.push(D::from_index(b0 - 2));
                s.push(D::from_index(b0 - 1));
            }
        }
        Class::Subexcedant | Class::Descent => unreachable!(),
    }
    s.extend_from_slice(b);
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digit::parse_compact;

    fn seq(text: &str) -> Vec<u8> {
        parse_compact(text).unwrap()
    }

    fn set(values: &[usize]) -> BTreeSet<usize> {
        values.iter().copied().collect()
    }

    #[test]
    fn admissibility_examples() {
        assert_eq!(is_admissible(Class::Ascent, &seq("124"), 6), Ok(true));
        assert_eq!(is_admissible(Class::Ascent, &seq("224"), 6), Ok(false));
        assert_eq!(is_admissible(Class::Ascent, &seq("113"), 5), Ok(false));
        assert_eq!(is_admissible(Class::Ascent, &seq("13"), 5), Ok(true));
        assert_eq!(is_admissible(Class::Ascent, &seq("0000"), 3), Err(Error::SuffixTooLong { len: 4, n: 3 }));
    }

    #[test]
    fn ascent_worked_example() {
        let b = seq("2050");
        assert_eq!(alpha(Class::Ascent, &b, 9).unwrap().to_set(), set(&[0, 1, 4]));
        assert_eq!(mu(Class::Ascent, &b, 9), Ok(4));
        let info = SuffixInfo::new(Class::Ascent, &b, 9).unwrap();
        for x in [0u8, 1] {
            assert_eq!(info.prepend(x).unwrap().mu(), Some(3));
        }
        assert_eq!(info.prepend(4).unwrap().mu(), Some(4));
        assert!(info.prepend(2).is_err());
    }

    #[test]
    fn rgf_worked_example() {
        let b = seq("241");
        assert_eq!(alpha(Class::Rgf, &b, 7).unwrap().to_set(), set(&[3]));
        assert_eq!(mu(Class::Rgf, &b, 7), Ok(3));
        let info = SuffixInfo::new(Class::Rgf, &b, 7).unwrap();
        assert_eq!(info.prepend(3).unwrap().mu(), Some(3));
    }

    #[test]
    fn staircase_worked_example() {
        // 457 would need s_9 <= s_8 + 1; 456 has the same head and shows the same rule
        assert_eq!(is_admissible(Class::Staircase, &seq("457"), 9), Ok(false));
        let b = seq("456");
        assert_eq!(alpha(Class::Staircase, &b, 9).unwrap().to_set(), set(&[3, 4, 5]));
        assert_eq!(mu(Class::Staircase, &b, 9), Ok(4));
        let info = SuffixInfo::new(Class::Staircase, &b, 9).unwrap();
        for x in 3u8..=5 {
            assert_eq!(info.prepend(x).unwrap().mu(), Some(usize::from(x)));
        }
    }

    #[test]
    fn small_ascent_defining_set() {
        assert_eq!(alpha(Class::Ascent, &seq("13"), 5).unwrap().to_set(), set(&[0, 2]));
    }

    #[test]
    fn subexcedant_single_digit_mu() {
        for x in 0u8..10 {
            assert_eq!(mu(Class::Subexcedant, &[x], 10), Ok(9));
        }
        let info = SuffixInfo::new(Class::Subexcedant, &[3u8], 10).unwrap();
        assert!(info.alpha().iter().all(|x| info.prepend(x as u8).unwrap().mu() == Some(8)));
    }

    #[test]
    fn empty_suffix() {
        for class in Class::GRAY {
            assert_eq!(alpha::<u8>(class, &[], 4).unwrap().to_set(), set(&[0, 1, 2, 3]));
            assert_eq!(mu::<u8>(class, &[], 4), Err(Error::EmptySequence));
        }
        assert!(matches!(alpha::<u8>(Class::Descent, &[], 4), Err(Error::UnsupportedClass { .. })));
    }

    #[test]
    fn inadmissible_suffix_errors() {
        assert_eq!(alpha(Class::Ascent, &seq("224"), 6), Err(Error::NotAdmissible { class: Class::Ascent, n: 6 }));
        assert!(mu(Class::Rgf, &seq("9"), 5).is_err());
    }

    #[test]
    fn defining_set_accessors() {
        let s = DefiningSet::initial_plus(2, 4);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 1, 4]);
        assert_eq!((s.len(), s.min(), s.max(), s.second_largest()), (3, Some(0), Some(4), Some(1)));
        assert!(s.contains(4) && !s.contains(2));
        assert!(DefiningSet::EMPTY.is_empty());
        assert_eq!(DefiningSet::single(3).second_largest(), None);
    }

    #[test]
    fn prefix_extremes_of_whole_list() {
        for class in Class::GRAY {
            assert_eq!(extreme_with_prefix(class, &[0u8], 5, End::First).unwrap(), seq("00000"));
            assert_eq!(extreme_with_prefix(class, &[0u8], 5, End::Last).unwrap(), seq("01000"));
            assert_eq!(extreme_with_prefix(class, &[0u8], 1, End::Last).unwrap(), seq("0"));
        }
        // odd digit sum: last is the prefix padded with zeros
        assert_eq!(extreme_with_prefix(Class::Ascent, &seq("01"), 5, End::Last).unwrap(), seq("01000"));
        // even sum, M = 2 even
        assert_eq!(extreme_with_prefix(Class::Ascent, &seq("011"), 5, End::Last).unwrap(), seq("01123"));
        assert_eq!(extreme_with_prefix(Class::Ascent, &seq("011"), 4, End::Last).unwrap(), seq("0112"));
    }

    #[test]
    fn suffix_extremes_of_whole_list() {
        for class in [Class::Ascent, Class::Rgf, Class::Staircase] {
            assert_eq!(extreme_with_suffix::<u8>(class, &[], 5, End::First).unwrap(), seq("01234"));
            assert_eq!(extreme_with_suffix::<u8>(class, &[], 5, End::Last).unwrap(), seq("01230"));
        }
        assert!(matches!(
            extreme_with_suffix::<u8>(Class::Subexcedant, &[], 5, End::First),
            Err(Error::UnsupportedClass { .. })
        ));
    }
}
