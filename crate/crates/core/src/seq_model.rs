//! Sequence statistics and the restricted growth families built from them.
//!
//! A sequence `s_1 s_2 ... s_n` is `st`-restricted when `s_1 = 0` and every
//! later value is at most `st` of the prefix before it, plus one. Positions
//! are 1-indexed in the docs and 0-indexed in slices: `s_i` is `s[i - 1]`.

use std::fmt;
use std::str::FromStr;

use crate::digit::Digit;
use crate::error::{Error, Result};

/// A statistic on non-empty sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stat {
    /// Length minus one.
    Len,
    /// Number of strict rises `s_i < s_{i+1}`.
    Asc,
    /// Number of levels `s_i = s_{i+1}`.
    Lev,
    /// Number of strict falls `s_i > s_{i+1}`.
    Desc,
    /// Largest value.
    Max,
    /// Final value.
    LastValue,
}

impl Stat {
    pub const ALL: [Stat; 6] = [Stat::Len, Stat::Asc, Stat::Lev, Stat::Desc, Stat::Max, Stat::LastValue];

    /// Whether appending `st(s) + 1` always yields a sequence whose statistic
    /// is that appended value. The prefix generator depends on this.
    pub fn is_incremental(self) -> bool {
        !matches!(self, Stat::Lev | Stat::Desc)
    }
}

/// A family of restricted growth sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    /// Bounded by `len`: `s_{k+1} <= k`.
    Subexcedant,
    /// Bounded by the number of ascents.
    Ascent,
    /// Bounded by the maximum (restricted growth functions, i.e. set partitions).
    Rgf,
    /// Bounded by the last value.
    Staircase,
    /// Bounded by the number of descents. Only membership and brute-force
    /// enumeration support it.
    Descent,
}

impl Class {
    /// The four families with Gray code generators, in table order.
    pub const GRAY: [Class; 4] = [Class::Subexcedant, Class::Ascent, Class::Rgf, Class::Staircase];

    pub const ALL: [Class; 5] = [Class::Subexcedant, Class::Ascent, Class::Rgf, Class::Staircase, Class::Descent];

    pub fn statistic(self) -> Stat {
        match self {
            Class::Subexcedant => Stat::Len,
            Class::Ascent => Stat::Asc,
            Class::Rgf => Stat::Max,
            Class::Staircase => Stat::LastValue,
            Class::Descent => Stat::Desc,
        }
    }

    /// Short column label: `SE`, `A`, `R`, `S` or `D`.
    pub fn short_name(self) -> &'static str {
        match self {
            Class::Subexcedant => "SE",
            Class::Ascent => "A",
            Class::Rgf => "R",
            Class::Staircase => "S",
            Class::Descent => "D",
        }
    }

    /// Command-line spelling.
    pub fn flag(self) -> &'static str {
        match self {
            Class::Subexcedant => "se",
            Class::Ascent => "asc",
            Class::Rgf => "rgf",
            Class::Staircase => "stair",
            Class::Descent => "desc",
        }
    }

    pub(crate) fn require_gray(self, operation: &'static str) -> Result<()> {
        if self == Class::Descent {
            Err(Error::UnsupportedClass { class: self, operation })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Class::Subexcedant => "subexcedant",
            Class::Ascent => "ascent",
            Class::Rgf => "restricted growth function",
            Class::Staircase => "staircase",
            Class::Descent => "descent",
        };
        f.write_str(name)
    }
}

impl FromStr for Class {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Class::ALL
            .into_iter()
            .find(|c| c.flag() == s || c.short_name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown class `{s}` (expected se, asc, rgf, stair or desc)"))
    }
}

/// Evaluates `stat` on a non-empty sequence.
pub fn stat<D: Digit>(stat: Stat, s: &[D]) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    let pairs = s.windows(2);
    let value = match stat {
        Stat::Len => s.len() - 1,
        Stat::Asc => pairs.filter(|w| w[0] < w[1]).count(),
        Stat::Lev => pairs.filter(|w| w[0] == w[1]).count(),
        Stat::Desc => pairs.filter(|w| w[0] > w[1]).count(),
        Stat::Max => s.iter().copied().max().map(Digit::index).unwrap_or(0),
        Stat::LastValue => s[s.len() - 1].index(),
    };
    Ok(value)
}

/// Whether `s` belongs to `class`. Total: anything malformed is simply not a
/// member.
pub fn is_member<D: Digit>(class: Class, s: &[D]) -> bool {
    if s.first().is_none_or(|&d| d != D::zero()) {
        return false;
    }
    let st = class.statistic();
    (1..s.len()).all(|k| {
        // prefix s[..k] is non-empty
        let bound = stat(st, &s[..k]).unwrap_or(0) + 1;
        s[k].to_usize().is_some_and(|v| v <= bound)
    })
}

/// Largest value that can follow `prefix` inside `class`, i.e. `st(prefix) + 1`.
pub fn omega<D: Digit>(class: Class, prefix: &[D]) -> Result<usize> {
    class.require_gray("omega")?;
    if prefix.is_empty() {
        return Err(Error::EmptySequence);
    }
    if !is_member(class, prefix) {
        return Err(Error::NotMember(class));
    }
    Ok(stat(class.statistic(), prefix)? + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statistics_on_small_sequences() {
        assert_eq!(stat(Stat::Len, &[0u8, 0, 0]), Ok(2));
        assert_eq!(stat(Stat::Asc, &[0u8, 1, 0, 1]), Ok(2));
        assert_eq!(stat(Stat::Max, &[0u8]), Ok(0));
        assert_eq!(stat(Stat::Desc, &[0u8, 1, 0, 1]), Ok(1));
        assert_eq!(stat(Stat::Lev, &[0u8, 0, 1, 1]), Ok(2));
        assert_eq!(stat(Stat::LastValue, &[0u8, 3, 2]), Ok(2));
        assert_eq!(stat::<u8>(Stat::Asc, &[]), Err(Error::EmptySequence));
    }

    #[test]
    fn membership_examples() {
        let s = [0u8, 1, 0, 1, 4, 5];
        assert!(is_member(Class::Subexcedant, &s));
        assert!(!is_member(Class::Ascent, &s));

        let s = [0u8, 1, 0, 1, 0, 3];
        assert!(is_member(Class::Ascent, &s));
        assert!(!is_member(Class::Rgf, &s));

        let s = [0u8, 1, 0, 1, 0, 2];
        assert!(is_member(Class::Rgf, &s));
        assert!(!is_member(Class::Staircase, &s));

        assert!(is_member(Class::Staircase, &[0u8, 1, 0, 1, 0, 1]));
    }

    #[test]
    fn membership_rejects_malformed() {
        assert!(!is_member::<u8>(Class::Subexcedant, &[]));
        assert!(!is_member(Class::Subexcedant, &[1u8, 0]));
        assert!(!is_member(Class::Descent, &[0u8, 2]));
        assert!(is_member(Class::Descent, &[0u8, 1, 0, 2]));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(Class::Subexcedant, &[0u8, 1, 0]), Ok(3));
        assert_eq!(omega(Class::Ascent, &[0u8, 1]), Ok(2));
        assert_eq!(omega(Class::Ascent, &[0u8]), Ok(1));
        assert_eq!(omega(Class::Staircase, &[0u8, 1, 2]), Ok(3));
    }

    #[test]
    fn omega_errors() {
        assert_eq!(omega(Class::Ascent, &[0u8, 2]), Err(Error::NotMember(Class::Ascent)));
        assert!(matches!(omega(Class::Descent, &[0u8]), Err(Error::UnsupportedClass { class: Class::Descent, .. })));
    }

    #[test]
    fn class_flags_parse() {
        for c in Class::ALL {
            assert_eq!(c.flag().parse::<Class>(), Ok(c));
        }
        assert!("bogus".parse::<Class>().is_err());
    }
}
