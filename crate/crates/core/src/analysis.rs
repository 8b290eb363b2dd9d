//! Hamming-distance measurements over lists of sequences.

use std::ops::ControlFlow;

use num_rational::Ratio;

use crate::digit::Digit;
use crate::error::{Error, Result};
use crate::gray_orders::Order;
use crate::oracle::{self, DEFAULT_GUARD};
use crate::seq_model::Class;
use crate::{generate, Average};

/// Largest `n` the table reports enumerate.
pub const TABLE_GUARD: usize = 10;

/// Number of positions where `s` and `t` differ.
pub fn hamming<D: Digit>(s: &[D], t: &[D]) -> Result<usize> {
    Ok(diff(s, t)?.distance)
}

/// How one pair of neighbors differs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PairDiff {
    pub distance: usize,
    /// `max - min + 1` over differing positions, 0 for equal sequences.
    pub window: usize,
    /// Whether the leftmost differing values are one apart.
    pub leftmost_unit_step: bool,
}

pub fn diff<D: Digit>(s: &[D], t: &[D]) -> Result<PairDiff> {
    if s.len() != t.len() {
        return Err(Error::LengthMismatch { left: s.len(), right: t.len() });
    }
    let mut out = PairDiff { leftmost_unit_step: true, ..PairDiff::default() };
    let mut first = None;
    for (i, (a, b)) in s.iter().zip(t).enumerate() {
        if a != b {
            out.distance += 1;
            let first = *first.get_or_insert_with(|| {
                out.leftmost_unit_step = a.index().abs_diff(b.index()) == 1;
                i
            });
            out.window = i - first + 1;
        }
    }
    Ok(out)
}

/// Aggregate distance statistics of a list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionStats {
    /// Number of sequences `N`.
    pub count: usize,
    /// Length of each sequence.
    pub length: usize,
    /// Largest distance between consecutive sequences.
    pub worst: usize,
    /// Sum of the `N - 1` consecutive distances.
    pub total_distance: u64,
    /// Largest window of differing positions over consecutive pairs.
    pub max_window: usize,
    /// Distance between the last and the first sequence.
    pub circular_worst: usize,
    /// Window of the last/first pair.
    pub circular_window: usize,
    /// Whether every consecutive pair changes its leftmost differing value by one.
    pub leftmost_unit_steps: bool,
}

impl TransitionStats {
    /// `total_distance / (N - 1)`; `None` for a single-element list.
    pub fn average(&self) -> Option<Average> {
        (self.count > 1).then(|| Ratio::new(self.total_distance, self.count as u64 - 1))
    }

    /// The average rounded half-up to two decimals, or as a bare integer when
    /// it is one exactly.
    pub fn average_rendered(&self) -> Option<String> {
        self.average().map(render_average)
    }
}

/// `1`, `1.21`, ... as printed in distance tables.
pub fn render_average(value: Average) -> String {
    if value.is_integer() {
        return value.to_integer().to_string();
    }
    let (num, den) = (*value.numer() as u128, *value.denom() as u128);
    let hundredths = (200 * num + den) / (2 * den);
    format!("{}.{:02}", hundredths / 100, hundredths % 100)
}

/// Streaming builder for [`TransitionStats`]; keeps only the first and the
/// previous sequence.
#[derive(Debug, Clone)]
pub struct TransitionAccumulator<D> {
    first: Vec<D>,
    prev: Vec<D>,
    stats: TransitionStats,
}

impl<D: Digit> Default for TransitionAccumulator<D> {
    fn default() -> Self {
        Self::new()
    }
}

impl<D: Digit> TransitionAccumulator<D> {
    pub fn new() -> Self {
        TransitionAccumulator {
            first: Vec::new(),
            prev: Vec::new(),
            stats: TransitionStats {
                count: 0,
                length: 0,
                worst: 0,
                total_distance: 0,
                max_window: 0,
                circular_worst: 0,
                circular_window: 0,
                leftmost_unit_steps: true,
            },
        }
    }

    pub fn push(&mut self, s: &[D]) -> Result<()> {
        if self.stats.count == 0 {
            self.first = s.to_vec();
            self.stats.length = s.len();
        } else {
            let d = diff(&self.prev, s)?;
            self.stats.worst = self.stats.worst.max(d.distance);
            self.stats.total_distance += d.distance as u64;
            self.stats.max_window = self.stats.max_window.max(d.window);
            self.stats.leftmost_unit_steps &= d.leftmost_unit_step;
        }
        self.prev.clear();
        self.prev.extend_from_slice(s);
        self.stats.count += 1;
        Ok(())
    }

    pub fn finish(self) -> Result<TransitionStats> {
        if self.stats.count == 0 {
            return Err(Error::EmptySequence);
        }
        let wrap = diff(&self.prev, &self.first)?;
        Ok(TransitionStats { circular_worst: wrap.distance, circular_window: wrap.window, ..self.stats })
    }
}

/// Distance statistics over all consecutive pairs plus the wrap-around pair.
pub fn transition_stats<D: Digit, S: AsRef<[D]>>(list: &[S]) -> Result<TransitionStats> {
    let mut acc = TransitionAccumulator::new();
    for s in list {
        acc.push(s.as_ref())?;
    }
    acc.finish()
}

/// Runs a generator and measures its output without materializing it.
pub fn generator_stats(class: Class, order: Order, n: usize) -> Result<TransitionStats> {
    let mut acc = TransitionAccumulator::<u8>::new();
    let mut failure = None;
    generate(class, order, n, &mut |s: &[u8]| match acc.push(s) {
        Ok(()) => ControlFlow::Continue(()),
        Err(e) => {
            failure = Some(e);
            ControlFlow::Break(())
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => acc.finish(),
    }
}

/// A neighbor pair that breaks a distance bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation<D> {
    /// Index of the first sequence of the pair; the second is the next one,
    /// or the first of the list for the wrap-around pair.
    pub index: usize,
    pub wraps: bool,
    pub left: Vec<D>,
    pub right: Vec<D>,
    pub diff: PairDiff,
}

/// The first pair whose differing positions do not fit in a window of `d`
/// adjacent indices.
pub fn first_violation<D: Digit, S: AsRef<[D]>>(list: &[S], d: usize, circular: bool) -> Result<Option<Violation<D>>> {
    let n = list.len();
    let pairs = n.saturating_sub(1) + usize::from(circular && n > 1);
    for i in 0..pairs {
        let (left, right) = (list[i].as_ref(), list[(i + 1) % n].as_ref());
        let pd = diff(left, right)?;
        if pd.window > d {
            return Ok(Some(Violation {
                index: i,
                wraps: i + 1 == n,
                left: left.to_vec(),
                right: right.to_vec(),
                diff: pd,
            }));
        }
    }
    Ok(None)
}

/// Whether every neighbor pair (and the wrap-around pair when `circular`)
/// differs only inside a window of `d` adjacent positions.
pub fn is_d_adjacent_gray<D: Digit, S: AsRef<[D]>>(list: &[S], d: usize, circular: bool) -> Result<bool> {
    if list.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(first_violation(list, d, circular)?.is_none())
}

/// Proven worst-case neighbor distance of each generated list. Every bound is
/// also a window bound: the differing positions are adjacent.
pub fn gray_bound(class: Class, order: Order) -> Option<usize> {
    match (class, order) {
        (Class::Subexcedant, _) => Some(1),
        (Class::Ascent | Class::Rgf, Order::Rgc) => Some(3),
        (Class::Ascent | Class::Rgf, Order::CoRgc) => Some(2),
        (Class::Staircase, _) => Some(3),
        (Class::Descent, _) => None,
    }
}

/// Whether the last and first sequences of the generated list also obey
/// [`gray_bound`]. Co-reflected subexcedant lists are not circular: for odd
/// `n` their endpoints differ in two positions.
pub fn is_circular(class: Class, order: Order) -> bool {
    !matches!((class, order), (Class::Subexcedant, Order::CoRgc) | (Class::Descent, _))
}

/// Window bound conjectured for descent sequences in co-reflected order.
pub const DESCENT_CONJECTURE_BOUND: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureCheck {
    pub n: usize,
    pub count: usize,
    /// Largest distance between neighbors, wrap-around excluded.
    pub worst: usize,
    /// Largest window of differing positions between neighbors.
    pub max_window: usize,
    /// First neighbor pair whose window is wider than 4.
    pub witness: Option<Violation<u8>>,
}

impl ConjectureCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Lists descent sequences of length `n` in co-reflected order and checks that
/// neighbors differ within a window of 4 positions.
///
/// This holds for `n <= 8`. From `n = 9` on some neighbors differ in 4
/// positions spread over a window of 5, e.g. `011020104` and `010210004`;
/// the distance itself stays at most 4 through `n = 10`.
pub fn check_conjecture(n: usize) -> Result<ConjectureCheck> {
    check_conjecture_with_guard(n, DEFAULT_GUARD)
}

pub fn check_conjecture_with_guard(n: usize, guard: usize) -> Result<ConjectureCheck> {
    let list = oracle::oracle_list_with_guard::<u8>(Class::Descent, n, Order::CoRgc, guard)?;
    let witness = first_violation(&list, DESCENT_CONJECTURE_BOUND, false)?;
    let stats = transition_stats(&list)?;
    Ok(ConjectureCheck { n, count: list.len(), worst: stats.worst, max_window: stats.max_window, witness })
}

/// Column layout shared by both tables: the four families in reflected
/// order, then the four in co-reflected order.
pub const COLUMNS: [(Class, Order); 8] = [
    (Class::Subexcedant, Order::Rgc),
    (Class::Ascent, Order::Rgc),
    (Class::Rgf, Order::Rgc),
    (Class::Staircase, Order::Rgc),
    (Class::Subexcedant, Order::CoRgc),
    (Class::Ascent, Order::CoRgc),
    (Class::Rgf, Order::CoRgc),
    (Class::Staircase, Order::CoRgc),
];

/// Column header such as `A_rgc`.
pub fn column_name(class: Class, order: Order) -> String {
    format!("{}_{}", class.short_name(), order.flag())
}

/// Observed worst case of one (family, order) column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorstCaseCell {
    pub class: Class,
    pub order: Order,
    pub bound: usize,
    /// Largest distance between consecutive sequences over every `n` scanned.
    pub observed: usize,
    /// Largest window of differing positions between consecutive sequences.
    pub observed_window: usize,
    /// Largest distance between the last and the first sequence.
    pub observed_circular: usize,
    /// Smallest `n` at which the distance reached the bound.
    pub attained_at: Option<usize>,
}

impl WorstCaseCell {
    pub fn exceeded(&self) -> bool {
        self.observed > self.bound || self.observed_window > self.bound
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorstCaseTable {
    pub n_min: usize,
    pub n_max: usize,
    pub cells: Vec<WorstCaseCell>,
    /// Per-`n` worst distance in [`COLUMNS`] order.
    pub rows: Vec<(usize, [usize; 8])>,
}

impl WorstCaseTable {
    pub fn any_exceeded(&self) -> bool {
        self.cells.iter().any(WorstCaseCell::exceeded)
    }
}

fn check_range(min: usize, max: usize, lo: usize, hi: usize) -> Result<()> {
    if lo <= min && min <= max && max <= hi {
        Ok(())
    } else {
        Err(Error::InvalidRange { min, max, lo, hi })
    }
}

/// Worst-case neighbor distance of every generated list for `n` in
/// `2..=n_max`, against the proven bounds.
pub fn table1_report(n_max: usize) -> Result<WorstCaseTable> {
    check_range(2, n_max, 2, TABLE_GUARD)?;
    let mut cells: Vec<WorstCaseCell> = COLUMNS
        .iter()
        .map(|&(class, order)| WorstCaseCell {
            class,
            order,
            bound: gray_bound(class, order).expect("gray family"),
            observed: 0,
            observed_window: 0,
            observed_circular: 0,
            attained_at: None,
        })
        .collect();
    let mut rows = Vec::new();
    for n in 2..=n_max {
        let mut row = [0; 8];
        for (cell, slot) in cells.iter_mut().zip(row.iter_mut()) {
            let stats = generator_stats(cell.class, cell.order, n)?;
            let worst = stats.worst;
            *slot = worst;
            cell.observed = cell.observed.max(worst);
            cell.observed_window = cell.observed_window.max(stats.max_window);
            cell.observed_circular = cell.observed_circular.max(stats.circular_worst);
            if worst == cell.bound && cell.attained_at.is_none() {
                cell.attained_at = Some(n);
            }
        }
        rows.push((n, row));
    }
    Ok(WorstCaseTable { n_min: 2, n_max, cells, rows })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AverageRow {
    pub n: usize,
    /// Exact averages in [`COLUMNS`] order.
    pub averages: [Average; 8],
}

impl AverageRow {
    pub fn rendered(&self) -> [String; 8] {
        self.averages.map(render_average)
    }
}

/// Average neighbor distance of every generated list, one row per `n`.
pub fn table2_report(n_min: usize, n_max: usize) -> Result<Vec<AverageRow>> {
    check_range(n_min, n_max, 4, TABLE_GUARD)?;
    (n_min..=n_max)
        .map(|n| {
            let mut averages = [Average::from_integer(0); 8];
            for (slot, &(class, order)) in averages.iter_mut().zip(COLUMNS.iter()) {
                *slot = generator_stats(class, order, n)?.average().expect("n >= 4 lists have neighbors");
            }
            Ok(AverageRow { n, averages })
        })
        .collect()
}
