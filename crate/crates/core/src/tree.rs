//! Recorded generation trees and their Graphviz rendering.

use std::fmt::Write as _;
use std::ops::ControlFlow;

use crate::digit::compact;
use crate::error::{Error, Result};
use crate::gen_prefix::{self, Sink};
use crate::gen_suffix;
use crate::gray_orders::Order;
use crate::seq_model::Class;

/// Largest `n` for which a tree is recorded.
pub const TREE_GUARD: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub parent: Option<usize>,
    /// Prefix fixed so far for reflected order, suffix for co-reflected order;
    /// the complete sequence at a leaf.
    pub label: String,
    pub leaf: bool,
}

/// The recursive calls of one generator run, in call order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CallTree {
    pub class: Class,
    pub order: Order,
    pub n: usize,
    pub nodes: Vec<TreeNode>,
}

struct Recorder {
    order: Order,
    nodes: Vec<TreeNode>,
    stack: Vec<usize>,
}

impl Sink<u8> for Recorder {
    fn enter(&mut self, position: usize, view: &[u8]) {
        let fixed = match self.order {
            Order::Rgc => &view[..position],
            Order::CoRgc => &view[position - 1..],
        };
        let label = if fixed.is_empty() { "ε".to_string() } else { compact(fixed) };
        self.nodes.push(TreeNode { parent: self.stack.last().copied(), label, leaf: false });
        self.stack.push(self.nodes.len() - 1);
    }

    fn leave(&mut self) {
        self.stack.pop();
    }

    fn emit(&mut self, s: &[u8]) -> ControlFlow<()> {
        let top = *self.stack.last().expect("emit happens inside a call");
        let node = &mut self.nodes[top];
        node.label = compact(s);
        node.leaf = true;
        ControlFlow::Continue(())
    }
}

/// Records the call tree of the generator for `order`; `n` is capped at
/// [`TREE_GUARD`].
pub fn call_tree(class: Class, order: Order, n: usize) -> Result<CallTree> {
    if n > TREE_GUARD {
        return Err(Error::GuardExceeded { n, limit: TREE_GUARD });
    }
    let mut rec = Recorder { order, nodes: Vec::new(), stack: Vec::new() };
    match order {
        Order::Rgc => gen_prefix::run::<u8, _>(class, n, &mut rec)?,
        Order::CoRgc => gen_suffix::run::<u8, _>(class, n, &mut rec)?,
    };
    Ok(CallTree { class, order, n, nodes: rec.nodes })
}

impl CallTree {
    /// Labels of the leaves, left to right; this is the generated list.
    pub fn leaves(&self) -> impl Iterator<Item = &str> {
        self.nodes.iter().filter(|node| node.leaf).map(|node| node.label.as_str())
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}_{}_{}\" {{", self.class.short_name(), self.order.flag(), self.n);
        out.push_str("  node [shape=plaintext];\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let shape = if node.leaf { ", shape=box" } else { "" };
            let _ = writeln!(out, "  n{i} [label=\"{}\"{shape}];", node.label);
        }
        for (i, node) in self.nodes.iter().enumerate() {
            if let Some(parent) = node.parent {
                let _ = writeln!(out, "  n{parent} -> n{i};");
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate_list;

    #[test]
    fn leaves_are_the_list() {
        for class in Class::GRAY {
            for order in Order::ALL {
                let tree = call_tree(class, order, 4).unwrap();
                let list: Vec<String> =
                    generate_list::<u8>(class, order, 4).unwrap().iter().map(|s| compact(s)).collect();
                assert_eq!(tree.leaves().collect::<Vec<_>>(), list);
            }
        }
    }

    #[test]
    fn root_labels() {
        assert_eq!(call_tree(Class::Ascent, Order::Rgc, 3).unwrap().nodes[0].label, "0");
        assert_eq!(call_tree(Class::Ascent, Order::CoRgc, 3).unwrap().nodes[0].label, "ε");
    }

    #[test]
    fn dot_output() {
        let dot = call_tree(Class::Subexcedant, Order::Rgc, 2).unwrap().to_dot();
        assert!(dot.starts_with("digraph \"SE_rgc_2\" {"));
        assert!(dot.contains("n0 -> n1;"));
        assert!(dot.contains("label=\"01\", shape=box"));
        assert!(dot.trim_end().ends_with('}'));
    }

    #[test]
    fn guarded() {
        assert_eq!(call_tree(Class::Ascent, Order::Rgc, 9), Err(Error::GuardExceeded { n: 9, limit: 8 }));
    }
}
