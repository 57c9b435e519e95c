//! Prefix-tree encoding of exponent vector sets.
//!
//! A vector `(a_1, ..., a_n)` is stored as the root-to-leaf path labelled
//! `a_n, ..., a_1`. Siblings are kept in increasing label order, so a
//! depth-first walk yields the vectors in lex order.

use std::fmt::Write as _;

use crate::antichain::{maximalize_counted, minimalize_counted};
use crate::error::{Error, Result};
use crate::ops::OpCounter;
use crate::vector::{ExpVector, Exponent};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct Node {
    children: Vec<(Exponent, Node)>,
}

impl Node {
    fn child_mut(&mut self, label: Exponent) -> &mut Node {
        let idx = match self.children.binary_search_by(|(l, _)| l.cmp(&label)) {
            Ok(i) => i,
            Err(i) => {
                self.children.insert(i, (label, Node::default()));
                i
            }
        };
        &mut self.children[idx].1
    }

    fn collect(&self, prefix: &mut Vec<Exponent>, out: &mut Vec<ExpVector>) {
        if self.children.is_empty() {
            if !prefix.is_empty() {
                out.push(ExpVector::new(prefix.iter().rev().copied().collect()));
            }
            return;
        }
        for (label, child) in &self.children {
            prefix.push(*label);
            child.collect(prefix, out);
            prefix.pop();
        }
    }

    fn leaves(&self) -> usize {
        if self.children.is_empty() {
            1
        } else {
            self.children.iter().map(|(_, c)| c.leaves()).sum()
        }
    }

    fn render(&self, depth: usize, out: &mut String) {
        for (label, child) in &self.children {
            let _ = writeln!(out, "{}{label}", "  ".repeat(depth));
            child.render(depth + 1, out);
        }
    }

    fn sorted_strictly(&self) -> bool {
        self.children.windows(2).all(|w| w[0].0 < w[1].0)
            && self.children.iter().all(|(_, c)| c.sorted_strictly())
    }
}

/// Rooted tree of height `n` holding a set of length-`n` vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trie {
    height: usize,
    root: Node,
}

impl Trie {
    pub fn empty(height: usize) -> Self {
        Trie {
            height,
            root: Node::default(),
        }
    }

    /// All vectors must have length `height`.
    pub fn build(height: usize, vs: &[ExpVector]) -> Result<Self> {
        let mut t = Trie::empty(height);
        for v in vs {
            if v.len() != height {
                return Err(Error::LengthMismatch {
                    expected: height,
                    got: v.len(),
                });
            }
            t.insert(v);
        }
        Ok(t)
    }

    fn insert(&mut self, v: &ExpVector) {
        let mut node = &mut self.root;
        for label in v.coords().iter().rev() {
            node = node.child_mut(*label);
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn is_empty(&self) -> bool {
        self.root.children.is_empty()
    }

    /// Number of stored vectors.
    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.root.leaves()
        }
    }

    /// Stored vectors in lex order.
    pub fn paths(&self) -> Vec<ExpVector> {
        let mut out = Vec::new();
        self.root
            .collect(&mut Vec::with_capacity(self.height), &mut out);
        out
    }

    /// Labels of the root's children, increasing.
    pub fn top_labels(&self) -> Vec<Exponent> {
        self.root.children.iter().map(|(l, _)| *l).collect()
    }

    /// `(d_k, T_k)` for each child of the root: `T_k` is the subtree under the
    /// node labelled `d_k`, with that node as its (unlabelled) root.
    pub fn slice_top(&self) -> Result<Vec<(Exponent, Trie)>> {
        if self.height < 2 {
            return Err(Error::Usage(format!(
                "cannot slice a trie of height {}",
                self.height
            )));
        }
        Ok(self
            .root
            .children
            .iter()
            .map(|(d, node)| {
                (
                    *d,
                    Trie {
                        height: self.height - 1,
                        root: node.clone(),
                    },
                )
            })
            .collect())
    }

    /// Consuming variant of [`slice_top`](Self::slice_top) used by the
    /// recursive engine.
    pub(crate) fn into_slices(self) -> Vec<(Exponent, Trie)> {
        let height = self.height - 1;
        self.root
            .children
            .into_iter()
            .map(|(d, root)| (d, Trie { height, root }))
            .collect()
    }

    /// Indented dump, one node per line, two spaces per depth level.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.root.render(0, &mut out);
        out
    }

    /// Structural check: siblings strictly increasing everywhere and every
    /// path has full length.
    pub fn is_well_formed(&self) -> bool {
        self.root.sorted_strictly() && self.paths().iter().all(|p| p.len() == self.height)
    }
}

fn check_heights(ts: &[&Trie]) -> Result<usize> {
    let h = ts.first().map_or(0, |t| t.height);
    for t in ts {
        if t.height != h {
            return Err(Error::LengthMismatch {
                expected: h,
                got: t.height,
            });
        }
    }
    Ok(h)
}

fn concat(ts: &[&Trie]) -> Vec<ExpVector> {
    ts.iter().flat_map(|t| t.paths()).collect()
}

/// Union of path sets; no reduction.
pub fn merge(ts: &[&Trie]) -> Result<Trie> {
    let h = check_heights(ts)?;
    Trie::build(h, &concat(ts))
}

/// Minimal elements of the union: generators of the sum of the ideals.
pub fn min_merge(ts: &[&Trie]) -> Result<Trie> {
    min_merge_counted(ts, &mut OpCounter::new())
}

/// Maximal elements of the union: components of the intersection.
pub fn max_merge(ts: &[&Trie]) -> Result<Trie> {
    max_merge_counted(ts, &mut OpCounter::new())
}

pub(crate) fn min_merge_counted(ts: &[&Trie], ops: &mut OpCounter) -> Result<Trie> {
    let h = check_heights(ts)?;
    Trie::build(h, &minimalize_counted(concat(ts), ops))
}

pub(crate) fn max_merge_counted(ts: &[&Trie], ops: &mut OpCounter) -> Result<Trie> {
    let h = check_heights(ts)?;
    Trie::build(h, &maximalize_counted(concat(ts), ops))
}
