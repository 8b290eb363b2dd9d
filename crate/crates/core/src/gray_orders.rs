//! The reflected Gray code order and its suffix-partitioned counterpart.
//!
//! Positions in the docs are 1-indexed; `s_k` is `s[k - 1]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::digit::Digit;
use crate::error::{Error, Result};

/// Which of the two orders a list follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    /// Reflected Gray code order: prefix partitioned, leftmost difference decides.
    Rgc,
    /// Co-reflected Gray code order: suffix partitioned, rightmost difference decides.
    CoRgc,
}

impl Order {
    pub const ALL: [Order; 2] = [Order::Rgc, Order::CoRgc];

    pub fn compare<D: Digit>(self, s: &[D], t: &[D]) -> Result<Ordering> {
        match self {
            Order::Rgc => rgc_compare(s, t),
            Order::CoRgc => corgc_compare(s, t),
        }
    }

    pub fn flag(self) -> &'static str {
        match self {
            Order::Rgc => "rgc",
            Order::CoRgc => "corgc",
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Order::Rgc => "RGC",
            Order::CoRgc => "Co-RGC",
        })
    }
}

impl FromStr for Order {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "rgc" => Ok(Order::Rgc),
            "corgc" | "co-rgc" => Ok(Order::CoRgc),
            _ => Err(format!("unknown order `{s}` (expected rgc or corgc)")),
        }
    }
}

fn check_lengths<D>(s: &[D], t: &[D]) -> Result<()> {
    if s.len() == t.len() {
        Ok(())
    } else {
        Err(Error::LengthMismatch { left: s.len(), right: t.len() })
    }
}

/// Compares two equal-length sequences in reflected Gray code order.
///
/// At the leftmost differing position the smaller digit comes first when the
/// digits before it sum to an even number, and the larger one otherwise.
pub fn rgc_compare<D: Digit>(s: &[D], t: &[D]) -> Result<Ordering> {
    check_lengths(s, t)?;
    let Some(k) = s.iter().zip(t).position(|(a, b)| a != b) else {
        return Ok(Ordering::Equal);
    };
    let odd = s[..k].iter().fold(false, |acc, d| acc ^ (d.index() & 1 == 1));
    let ord = s[k].cmp(&t[k]);
    Ok(if odd { ord.reverse() } else { ord })
}

/// Compares two equal-length sequences in co-reflected Gray code order.
///
/// At the rightmost differing position `k` the larger digit comes first when
/// `s_{k+1} + ... + s_n + (n - k)` is even, and the smaller one otherwise.
pub fn corgc_compare<D: Digit>(s: &[D], t: &[D]) -> Result<Ordering> {
    check_lengths(s, t)?;
    let Some(k) = s.iter().zip(t).rposition(|(a, b)| a != b) else {
        return Ok(Ordering::Equal);
    };
    let tail = &s[k + 1..];
    let odd = tail.iter().fold(tail.len() & 1 == 1, |acc, d| acc ^ (d.index() & 1 == 1));
    let ord = s[k].cmp(&t[k]);
    Ok(if odd { ord } else { ord.reverse() })
}

fn check_radix<D: Digit>(n: usize, m: usize) -> Result<()> {
    if n == 0 {
        return Ok(());
    }
    if m == 0 {
        return Err(Error::ZeroRadix);
    }
    if !D::fits(m - 1) {
        return Err(Error::DigitOverflow { max: m - 1 });
    }
    Ok(())
}

/// All `m^n` sequences over `0..m` in reflected Gray code order.
///
/// Built by the recursive reflection: digit `d` followed by the shorter list,
/// reversed whenever `d` is odd.
pub fn rgc_list<D: Digit>(n: usize, m: usize) -> Result<Vec<Vec<D>>> {
    check_radix::<D>(n, m)?;
    let mut list: Vec<Vec<D>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(list.len() * m);
        for d in 0..m {
            let head = D::from_index(d);
            let block: Box<dyn Iterator<Item = &Vec<D>>> =
                if d % 2 == 0 { Box::new(list.iter()) } else { Box::new(list.iter().rev()) };
            next.extend(block.map(|tail| {
                let mut s = Vec::with_capacity(tail.len() + 1);
                s.push(head);
                s.extend_from_slice(tail);
                s
            }));
        }
        list = next;
    }
    Ok(list)
}

/// Maps a sequence of the reflected list onto the co-reflected one.
///
/// For even `m` every digit is complemented to `m - 1 - s_i`; for odd `m`
/// only digits at odd (1-indexed) positions are. The result is then reversed.
pub fn corgc_transform<D: Digit>(s: &[D], m: usize) -> Result<Vec<D>> {
    if let Some((i, d)) = s.iter().enumerate().find(|(_, d)| d.index() >= m) {
        return Err(Error::DigitOutOfRange { position: i + 1, digit: d.index(), radix: m });
    }
    let top = D::from_index(m.saturating_sub(1));
    let mut out: Vec<D> =
        s.iter().enumerate().map(|(i, &d)| if m.is_multiple_of(2) || i % 2 == 0 { top - d } else { d }).collect();
    out.reverse();
    Ok(out)
}

/// All `m^n` sequences over `0..m` in co-reflected Gray code order.
pub fn corgc_list<D: Digit>(n: usize, m: usize) -> Result<Vec<Vec<D>>> {
    rgc_list::<D>(n, m)?.iter().map(|s| corgc_transform(s, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seqs(rows: &[&str]) -> Vec<Vec<u8>> {
        rows.iter().map(|r| crate::digit::parse_compact(r).unwrap()).collect()
    }

    #[test]
    fn rgc_compare_examples() {
        assert_eq!(rgc_compare(&[0u8, 0, 0, 0, 0], &[0, 0, 0, 0, 1]), Ok(Ordering::Less));
        assert_eq!(rgc_compare(&[0u8, 0, 0, 1, 2], &[0, 0, 0, 1, 1]), Ok(Ordering::Less));
        assert_eq!(rgc_compare(&[0u8, 1, 2], &[0, 1, 2]), Ok(Ordering::Equal));
        assert_eq!(rgc_compare(&[0u8, 1], &[0]), Err(Error::LengthMismatch { left: 2, right: 1 }));
    }

    #[test]
    fn corgc_compare_examples() {
        assert_eq!(corgc_compare(&[0u8, 1, 2, 3, 4], &[0, 1, 2, 3, 3]), Ok(Ordering::Less));
        assert_eq!(corgc_compare(&[0u8, 1, 2, 3, 3], &[0, 1, 0, 2, 3]), Ok(Ordering::Less));
        assert_eq!(corgc_compare(&[0u8, 1, 2, 3, 3], &[0, 1, 2, 3, 3]), Ok(Ordering::Equal));
        assert!(corgc_compare(&[0u8], &[0, 0]).is_err());
    }

    // Hand-unrolled reflections for tiny cases.
    #[test]
    fn rgc_list_small() {
        assert_eq!(rgc_list::<u8>(1, 3).unwrap(), seqs(&["0", "1", "2"]));
        assert_eq!(rgc_list::<u8>(2, 2).unwrap(), seqs(&["00", "01", "11", "10"]));
        assert_eq!(rgc_list::<u8>(2, 3).unwrap(), seqs(&["00", "01", "02", "12", "11", "10", "20", "21", "22"]));
        assert_eq!(rgc_list::<u8>(0, 0).unwrap(), vec![Vec::<u8>::new()]);
        assert_eq!(rgc_list::<u8>(1, 0), Err(Error::ZeroRadix));
        assert_eq!(rgc_list::<u8>(1, 300), Err(Error::DigitOverflow { max: 299 }));
    }

    #[test]
    fn transform_examples() {
        assert_eq!(corgc_transform(&[0u8, 1], 2).unwrap(), vec![0, 1]);
        assert_eq!(corgc_transform(&[0u8, 1, 2], 3).unwrap(), vec![0, 1, 2]);
        assert_eq!(corgc_transform(&[0u8], 2).unwrap(), vec![1]);
        assert_eq!(corgc_transform(&[0u8, 3], 3), Err(Error::DigitOutOfRange { position: 2, digit: 3, radix: 3 }));
    }

    #[test]
    fn corgc_list_small() {
        assert_eq!(corgc_list::<u8>(1, 2).unwrap(), seqs(&["1", "0"]));
        assert_eq!(corgc_list::<u8>(0, 5).unwrap(), vec![Vec::<u8>::new()]);
    }

    #[test]
    fn order_flags_parse() {
        assert_eq!("rgc".parse::<Order>(), Ok(Order::Rgc));
        assert_eq!("corgc".parse::<Order>(), Ok(Order::CoRgc));
        assert!("lex".parse::<Order>().is_err());
    }
}
