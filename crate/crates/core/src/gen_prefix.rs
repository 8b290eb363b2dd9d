//! Prefix-partitioned generation in reflected Gray code order.
//!
//! The recursion fixes `s_k` on entry and then covers the defining set
//! `0..=omega(s_1 ... s_k)` of the new prefix, ascending when the digit sum so
//! far is even and descending when it is odd. The parity travels down as
//! `dir` and the prefix statistic as `v`, so each call does O(1) work per
//! child. Every internal call has at least two children.

use std::ops::ControlFlow;

use crate::digit::Digit;
use crate::error::{Error, Result};
use crate::seq_model::Class;

/// Receives each completed sequence.
///
/// The slice points into the generator's working buffer and is overwritten
/// after `visit` returns; copy it to keep it. Returning `Break` stops the run.
pub trait GenVisitor<D> {
    fn visit(&mut self, s: &[D]) -> ControlFlow<()>;
}

impl<D, F> GenVisitor<D> for F
where
    F: FnMut(&[D]) -> ControlFlow<()>,
{
    fn visit(&mut self, s: &[D]) -> ControlFlow<()> {
        self(s)
    }
}

/// Recursive-call accounting for one generator run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CatMetrics {
    /// Calls of the recursive procedure, including the main call.
    pub total_calls: u64,
    /// Sequences handed to the visitor.
    pub outputs: u64,
    /// Calls that initiated exactly one recursive call.
    pub degree_one_calls: u64,
    /// Deepest level reached; the main call is level 1.
    pub max_depth: usize,
    /// Number of calls initiated by the main call.
    pub root_degree: u64,
    /// Whether the visitor cut the run short.
    pub stopped: bool,
}

impl CatMetrics {
    pub(crate) fn record_call(&mut self, depth: usize) {
        self.total_calls += 1;
        self.max_depth = self.max_depth.max(depth);
    }

    pub(crate) fn record_degree(&mut self, depth: usize, degree: u64) {
        if degree == 1 {
            self.degree_one_calls += 1;
        }
        if depth == 1 {
            self.root_degree = degree;
        }
    }
}

/// Event sink shared by the public visitor path and the call-tree recorder.
pub(crate) trait Sink<D> {
    fn enter(&mut self, _position: usize, _view: &[D]) {}
    fn leave(&mut self) {}
    fn emit(&mut self, s: &[D]) -> ControlFlow<()>;
}

pub(crate) struct VisitorSink<'a, V: ?Sized>(pub &'a mut V);

impl<D, V: GenVisitor<D> + ?Sized> Sink<D> for VisitorSink<'_, V> {
    fn emit(&mut self, s: &[D]) -> ControlFlow<()> {
        self.0.visit(s)
    }
}

pub(crate) fn check_args<D: Digit>(class: Class, n: usize, operation: &'static str) -> Result<()> {
    class.require_gray(operation)?;
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    if !D::fits(n - 1) {
        return Err(Error::DigitOverflow { max: n - 1 });
    }
    Ok(())
}

/// Generates every length-`n` member of `class` in reflected Gray code order.
pub fn gen1<D: Digit, V: GenVisitor<D> + ?Sized>(class: Class, n: usize, visitor: &mut V) -> Result<CatMetrics> {
    run(class, n, &mut VisitorSink(visitor))
}

/// Collects the list produced by [`gen1`].
pub fn gen1_list<D: Digit>(class: Class, n: usize) -> Result<(Vec<Vec<D>>, CatMetrics)> {
    let mut out = Vec::new();
    let metrics = gen1(class, n, &mut |s: &[D]| {
        out.push(s.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok((out, metrics))
}

pub(crate) fn run<D: Digit, S: Sink<D>>(class: Class, n: usize, sink: &mut S) -> Result<CatMetrics> {
    check_args::<D>(class, n, "gen1")?;
    let mut gen = Gen1 { class, n, s: vec![D::zero(); n], sink, metrics: CatMetrics::default() };
    if gen.call(1, 0, 0, 0).is_break() {
        gen.metrics.stopped = true;
    }
    Ok(gen.metrics)
}

struct Gen1<'a, D, S> {
    class: Class,
    n: usize,
    /// `s_k` lives at `s[k - 1]`.
    s: Vec<D>,
    sink: &'a mut S,
    metrics: CatMetrics,
}

impl<D: Digit, S: Sink<D>> Gen1<'_, D, S> {
    fn digit(&self, position: usize) -> usize {
        self.s[position - 1].index()
    }

    /// `omega(s_1 ... s_p)` from `w`, the statistic of `s_1 ... s_{p-1}`.
    fn omega(&self, w: usize, p: usize) -> usize {
        match self.class {
            Class::Subexcedant => p,
            Class::Ascent => {
                if p > 1 && self.digit(p) > self.digit(p - 1) {
                    w + 2
                } else {
                    w + 1
                }
            }
            Class::Rgf => {
                if p > 1 && self.digit(p) > w {
                    w + 2
                } else {
                    w + 1
                }
            }
            Class::Staircase => self.digit(p) + 1,
            Class::Descent => unreachable!("rejected by check_args"),
        }
    }

    fn call(&mut self, k: usize, x: usize, dir: usize, v: usize) -> ControlFlow<()> {
        self.metrics.record_call(k);
        self.s[k - 1] = D::from_index(x);
        self.sink.enter(k, &self.s);
        let flow = if k == self.n {
            self.metrics.outputs += 1;
            self.sink.emit(&self.s)
        } else {
            let u = self.omega(v, k);
            self.metrics.record_degree(k, u as u64 + 1);
            self.children(k, dir, u)
        };
        self.sink.leave();
        flow
    }

    fn children(&mut self, k: usize, dir: usize, u: usize) -> ControlFlow<()> {
        if dir.is_multiple_of(2) {
            for i in 0..=u {
                self.call(k + 1, i, i, u - 1)?;
            }
        } else {
            for i in (0..=u).rev() {
                self.call(k + 1, i, i + 1, u - 1)?;
            }
        }
        ControlFlow::Continue(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digit::compact;

    #[test]
    fn ascent_four() {
        let (list, metrics) = gen1_list::<u8>(Class::Ascent, 4).unwrap();
        assert_eq!(list.len(), 15);
        assert_eq!(compact(&list[0]), "0000");
        assert_eq!(compact(&list[14]), "0100");
        assert_eq!(metrics.outputs, 15);
        assert_eq!(metrics.degree_one_calls, 0);
        assert_eq!(metrics.root_degree, 2);
        assert_eq!(metrics.max_depth, 4);
    }

    #[test]
    fn subexcedant_four_is_factorial() {
        assert_eq!(gen1_list::<u8>(Class::Subexcedant, 4).unwrap().0.len(), 24);
    }

    #[test]
    fn length_one() {
        for class in Class::GRAY {
            let (list, metrics) = gen1_list::<u8>(class, 1).unwrap();
            assert_eq!(list, vec![vec![0]]);
            assert_eq!(metrics.total_calls, 1);
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(matches!(gen1_list::<u8>(Class::Descent, 4), Err(Error::UnsupportedClass { .. })));
        assert_eq!(gen1_list::<u8>(Class::Ascent, 0), Err(Error::ZeroLength));
        assert_eq!(gen1_list::<u8>(Class::Ascent, 300), Err(Error::DigitOverflow { max: 299 }));
    }

    #[test]
    fn visitor_can_stop_early() {
        let mut seen = 0;
        let metrics = gen1(Class::Subexcedant, 5, &mut |_: &[u8]| {
            seen += 1;
            if seen == 7 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap();
        assert_eq!(seen, 7);
        assert_eq!(metrics.outputs, 7);
        assert!(metrics.stopped);
    }
}
