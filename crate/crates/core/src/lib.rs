//! Gray codes for restricted growth sequences.
//!
//! Four families of sequences `s_1 s_2 ... s_n` with `s_1 = 0` are covered,
//! each bounding the next value by a statistic of the prefix: subexcedant
//! sequences (length), ascent sequences (ascents), restricted growth functions
//! (maximum) and staircase words (last value). Each family is generated in
//! two orders:
//!
//! * [`Order::Rgc`], the reflected Gray code order, by the prefix generator
//!   [`gen1`]; neighbors differ in at most 3 adjacent positions.
//! * [`Order::CoRgc`], a suffix-partitioned variant, by [`gen2`]; neighbors
//!   differ in at most 2 adjacent positions for ascent sequences and
//!   restricted growth functions.
//!
//! Subexcedant sequences are 1-Gray in both orders. Both generators run in
//! constant amortized time and report their call structure in [`CatMetrics`].
//! [`oracle`] provides brute-force lists used to check them, and [`analysis`]
//! measures Hamming distances between neighbors.
//!
//! All sequence operations are generic over the unsigned [`Digit`] type they
//! are stored in; [`Sequence`] is the usual `u8` choice.

pub mod analysis;
pub mod digit;
pub mod error;
pub mod gen_prefix;
pub mod gen_suffix;
pub mod gray_orders;
pub mod oracle;
pub mod seq_model;
pub mod suffix_calculus;
pub mod tree;

use std::ops::ControlFlow;

pub use analysis::{hamming, is_d_adjacent_gray, transition_stats, TransitionStats};
pub use digit::Digit;
pub use error::{Error, ErrorKind, Result};
pub use gen_prefix::{gen1, gen1_list, CatMetrics, GenVisitor};
pub use gen_suffix::{gen2, gen2_list};
pub use gray_orders::{corgc_compare, rgc_compare, Order};
pub use oracle::oracle_list;
pub use seq_model::{is_member, omega, stat, Class, Stat};
pub use suffix_calculus::{DefiningSet, End, SuffixInfo};

/// A sequence stored with one byte per value; enough for `n <= 256`.
pub type Sequence = Vec<u8>;

/// A sequence with 32-bit values, for lengths beyond what `u8` holds.
pub type WideSequence = Vec<u32>;

/// Exact average of Hamming distances.
pub type Average = num_rational::Ratio<u64>;

/// Runs the generator for `order`.
pub fn generate<D: Digit, V: GenVisitor<D> + ?Sized>(
    class: Class,
    order: Order,
    n: usize,
    visitor: &mut V,
) -> Result<CatMetrics> {
    match order {
        Order::Rgc => gen1(class, n, visitor),
        Order::CoRgc => gen2(class, n, visitor),
    }
}

/// Collects the list produced by [`generate`].
pub fn generate_list<D: Digit>(class: Class, order: Order, n: usize) -> Result<Vec<Vec<D>>> {
    let mut out = Vec::new();
    generate(class, order, n, &mut |s: &[D]| {
        out.push(s.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}
