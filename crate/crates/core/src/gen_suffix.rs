//! Suffix-partitioned generation in co-reflected Gray code order.
//!
//! Sequences are built right to left in a buffer `s_1 ... s_n s_{n+1}` whose
//! extra position holds a dummy 0; the buffer starts as `0 1 ... (n-1) 0`,
//! the first sequence of the list. A call at position `k` fixes `s_k`, derives
//! `mu` of the suffix `s_k ... s_n 0` in O(1) from the value passed down, and
//! then covers the defining set of that suffix for `s_{k-1}`. The largest value
//! of every defining set is `k - 2`; it is visited first when the suffix
//! parity says "descending", last otherwise.
//!
//! When the defining set shrinks to the single value `k - 2`, the rest of the
//! sequence is forced to `0 1 2 ...`. Instead of walking that chain of
//! one-child calls, the call writes the few positions that can differ from
//! the previous output and emits directly. Positions further left already hold
//! the staircase from initialization or from earlier outputs, so the buffer is
//! never reset.
//!
//! The main call fans out into `n` independent subtrees, one per value of
//! `s_n`; they share nothing but the buffer and could run on separate copies.

use std::ops::ControlFlow;

use crate::digit::Digit;
use crate::error::Result;
use crate::gen_prefix::{check_args, CatMetrics, GenVisitor, Sink, VisitorSink};
use crate::seq_model::Class;

/// Generates every length-`n` member of `class` in co-reflected Gray code order.
pub fn gen2<D: Digit, V: GenVisitor<D> + ?Sized>(class: Class, n: usize, visitor: &mut V) -> Result<CatMetrics> {
    run(class, n, &mut VisitorSink(visitor))
}

/// Collects the list produced by [`gen2`].
pub fn gen2_list<D: Digit>(class: Class, n: usize) -> Result<(Vec<Vec<D>>, CatMetrics)> {
    let mut out = Vec::new();
    let metrics = gen2(class, n, &mut |s: &[D]| {
        out.push(s.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok((out, metrics))
}

pub(crate) fn run<D: Digit, S: Sink<D>>(class: Class, n: usize, sink: &mut S) -> Result<CatMetrics> {
    check_args::<D>(class, n, "gen2")?;
    // index 0 absorbs writes left of s_1; index n + 2 keeps s_{m+1} readable at the root
    let mut s = vec![D::zero(); n + 3];
    for (i, slot) in s[1..=n].iter_mut().enumerate() {
        *slot = D::from_index(i);
    }
    let mut gen = Gen2 { class, n, s, sink, metrics: CatMetrics::default() };
    if gen.call(n + 1, 0, 0, 0).is_break() {
        gen.metrics.stopped = true;
    }
    Ok(gen.metrics)
}

struct Gen2<'a, D, S> {
    class: Class,
    n: usize,
    /// `s_k` lives at `s[k]`.
    s: Vec<D>,
    sink: &'a mut S,
    metrics: CatMetrics,
}

impl<D: Digit, S: Sink<D>> Gen2<'_, D, S> {
    fn at(&self, position: usize) -> isize {
        self.s[position].index() as isize
    }

    fn set(&mut self, position: isize, value: isize) {
        if position >= 1 {
            self.s[position as usize] = D::from_index(value as usize);
        }
    }

    /// `mu(s_m ... s_n 0)` given `x = s_m` and `w = mu(s_{m+1} ... s_n 0)`.
    fn mu(&self, m: usize, x: isize, w: isize) -> isize {
        match self.class {
            Class::Ascent => {
                if x >= w {
                    x
                } else if x >= self.at(m + 1) {
                    w
                } else {
                    w - 1
                }
            }
            Class::Rgf => {
                if x >= w {
                    x
                } else if self.at(m + 1) < w {
                    w
                } else {
                    w - 1
                }
            }
            Class::Staircase => x,
            Class::Subexcedant => {
                if m == self.n {
                    self.n as isize - 1
                } else {
                    w - 1
                }
            }
            Class::Descent => unreachable!("rejected by check_args"),
        }
    }

    /// Whether the defining set of `s_m ... s_n 0` is just `{m - 2}`; if so,
    /// writes the forced values that may differ from the previous output.
    fn is_degree_one(&mut self, m: usize, v: isize) -> bool {
        let mi = m as isize;
        let sm = self.at(m);
        if m == 2 && matches!(self.class, Class::Rgf | Class::Staircase) {
            // s_1 = 0 is the only choice; the general tests miss s_2 = 0
            self.set(1, 0);
            return true;
        }
        match self.class {
            Class::Ascent => {
                if v == mi - 1 || (v == mi - 2 && sm == 0) {
                    self.set(mi - 1, mi - 2);
                    return true;
                }
                false
            }
            Class::Rgf => {
                if v == mi - 1 || (v == mi - 2 && sm < mi - 2) {
                    self.set(mi - 1, mi - 2);
                    return true;
                }
                false
            }
            Class::Staircase => {
                if sm == mi - 1 {
                    self.set(mi - 1, mi - 2);
                    self.set(mi - 2, mi - 3);
                    return true;
                }
                false
            }
            Class::Subexcedant => m == 2,
            Class::Descent => unreachable!(),
        }
    }

    fn lowest(&self, m: usize) -> isize {
        let mi = m as isize;
        match self.class {
            Class::Staircase => {
                let sm = self.at(m);
                if sm > 1 && sm <= mi - 2 {
                    sm - 1
                } else {
                    0
                }
            }
            _ => 0,
        }
    }

    fn second_largest(&self, m: usize, w: isize) -> isize {
        let mi = m as isize;
        match self.class {
            Class::Ascent => {
                let sm = self.at(m);
                if w == mi - 2 && sm > 0 && sm < mi - 1 {
                    sm - 1
                } else {
                    mi - 3
                }
            }
            _ => mi - 3,
        }
    }

    fn call(&mut self, k: usize, x: isize, dir: usize, v: isize) -> ControlFlow<()> {
        let depth = self.n + 2 - k;
        self.metrics.record_call(depth);
        self.set(k as isize, x);
        self.sink.enter(k, &self.s[1..=self.n]);
        let u = self.mu(k, x, v);
        let flow = if self.is_degree_one(k, u) {
            self.metrics.outputs += 1;
            let view = &self.s[1..=self.n];
            self.sink.emit(view)
        } else {
            let low = self.lowest(k);
            let high = self.second_largest(k, u);
            let degree = (high - low + 1).max(0) as u64 + 1;
            self.metrics.record_degree(depth, degree);
            self.children(k, dir, u, low, high)
        };
        self.sink.leave();
        flow
    }

    fn children(&mut self, k: usize, dir: usize, u: isize, low: isize, high: isize) -> ControlFlow<()> {
        debug_assert!(k >= 2, "defining set of a complete sequence is empty");
        if dir % 2 == 1 {
            for i in low..=high {
                self.call(k - 1, i, i as usize, u)?;
            }
        }
        self.call(k - 1, k as isize - 2, (k - 1 + dir) % 2, u)?;
        if dir.is_multiple_of(2) {
            for i in (low..=high).rev() {
                self.call(k - 1, i, i as usize + 1, u)?;
            }
        }
        ControlFlow::Continue(())
    }
}
