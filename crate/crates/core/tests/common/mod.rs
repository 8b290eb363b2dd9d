#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use rgs_gray::digit::{compact, parse_compact};
use rgs_gray::oracle::members;
use rgs_gray::suffix_calculus::{alpha, is_admissible, mu};
use rgs_gray::{stat, Class, Order};

pub fn golden_path(class: Class, order: Order) -> PathBuf {
    let name = format!("{}5_{}.txt", class.short_name().to_lowercase(), order.flag());
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

pub fn read_golden(class: Class, order: Order) -> Vec<Vec<u8>> {
    let path = golden_path(class, order);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| parse_compact(l).unwrap_or_else(|| panic!("bad line {l:?}")))
        .collect()
}

#[derive(Default)]
pub struct Expected {
    pub alpha: BTreeSet<usize>,
    pub mu: Option<usize>,
}

/// Defining sets and minimum statistics of every admissible suffix, read off
/// the full member list.
pub fn brute_suffixes(class: Class, n: usize) -> BTreeMap<Vec<u8>, Expected> {
    let mut table: BTreeMap<Vec<u8>, Expected> = BTreeMap::new();
    for s in members::<u8>(class, n).unwrap() {
        for k in 0..=n {
            let entry = table.entry(s[k..].to_vec()).or_default();
            if k >= 1 {
                entry.alpha.insert(usize::from(s[k - 1]));
            }
            if k < n {
                let value = stat(class.statistic(), &s[..=k]).unwrap();
                entry.mu = Some(entry.mu.map_or(value, |m: usize| m.min(value)));
            }
        }
    }
    table
}

/// Compares the closed forms against [`brute_suffixes`]; also checks that
/// words which end no member are rejected when `words_up_to >= n`.
pub fn check_suffix_calculus(class: Class, n: usize, words_up_to: usize) -> Result<usize, String> {
    let table = brute_suffixes(class, n);
    for (b, want) in &table {
        let got = alpha(class, b, n).map_err(|e| format!("alpha {} n={n}: {e}", compact(b)))?;
        if got.to_set() != want.alpha {
            return Err(format!("alpha {} n={n}: got {:?} want {:?}", compact(b), got.to_set(), want.alpha));
        }
        if let Some(m) = want.mu {
            let got = mu(class, b, n).map_err(|e| format!("mu {} n={n}: {e}", compact(b)))?;
            if got != m {
                return Err(format!("mu {} n={n}: got {got} want {m}", compact(b)));
            }
        }
    }
    if n <= words_up_to {
        for len in 1..=n {
            let mut word = vec![0u8; len];
            loop {
                let admissible = is_admissible(class, &word, n).unwrap();
                if admissible != table.contains_key(&word) {
                    return Err(format!("is_admissible {} n={n}: got {admissible}", compact(&word)));
                }
                if !next_word(&mut word, n as u8) {
                    break;
                }
            }
        }
    }
    Ok(table.len())
}

fn next_word(word: &mut [u8], radix: u8) -> bool {
    for d in word.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}
