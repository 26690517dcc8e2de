//! Isomorphism-free generation of all trees of a given order, extremal
//! search per (n, d) cell, and the labeled-tree utilities (Prüfer decoding,
//! uniform random trees) used as independent cross-checks.
//!
//! Free trees are generated by the level-sequence successor method of
//! Wright, Richmond, Odlyzko and McKay: iterate the Beyer-Hedetniemi
//! successor over canonical rooted level sequences and skip, in one jump,
//! every rooted representation that is not the canonical form of its free
//! tree. The stream yields each isomorphism class exactly once, in a fixed
//! order independent of the environment.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::shape::{classify, ShapeClass};
use crate::tree::Tree;

/// Default enumeration ceiling: about 19k trees at n = 16 stays comfortably
/// interactive. Collections grow fast beyond that (823k classes at n = 20),
/// so raising the ceiling is an explicit opt-in.
pub const DEFAULT_CEILING: usize = 16;

/// Known free-tree counts (OEIS A000055) for n = 1..=20; the generator is
/// cross-checked against these in the test suite.
pub const FREE_TREE_COUNTS: [usize; 20] = [
    1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867, 317955,
    823065,
];

/// Iterator over one representative tree per isomorphism class of order n.
pub struct FreeTrees {
    n: usize,
    layout: Option<Vec<usize>>,
}

/// Streams all free trees of order `n`, subject to the configured ceiling.
pub fn free_trees(n: usize, ceiling: usize) -> Result<FreeTrees> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    if n > ceiling {
        return Err(Error::AboveCeiling { n, ceiling });
    }
    // Start at the path rooted near its center, the first canonical layout.
    let layout: Vec<usize> = (0..=n / 2).chain(1..(n + 1) / 2).collect();
    Ok(FreeTrees { n, layout: Some(layout) })
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        let layout = self.layout.take()?;
        if self.n < 2 {
            return Some(Tree::from_edges(1, &[]).expect("single vertex"));
        }
        let current = next_free(layout);
        let tree = layout_to_tree(&current);
        self.layout = next_rooted(&current, None);
        Some(tree)
    }
}

/// Splits a level sequence into the root's first subtree (shifted down one
/// level) and the remainder.
fn split_layout(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut m = layout.len();
    let mut ones = 0;
    for (i, &d) in layout.iter().enumerate() {
        if d == 1 {
            ones += 1;
            if ones == 2 {
                m = i;
                break;
            }
        }
    }
    let left = layout[1..m].iter().map(|&d| d - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

/// Beyer-Hedetniemi successor of a rooted level sequence. `at` forces the
/// truncation point; `None` finds the last entry above level 1. Returns
/// `None` when the sequence is the last one (a star).
fn next_rooted(layout: &[usize], at: Option<usize>) -> Option<Vec<usize>> {
    let p = match at {
        Some(p) => p,
        None => {
            let mut p = layout.len() - 1;
            while layout[p] == 1 {
                p -= 1;
                if p == 0 {
                    return None;
                }
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while layout[q] != layout[p] - 1 {
        q -= 1;
    }
    let mut next = layout.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Advances a rooted level sequence to the nearest valid free-tree
/// representation (possibly itself): the root's first subtree must not be
/// deeper than the rest, and on equal height it must not be the larger or
/// lexicographically greater side.
fn next_free(layout: Vec<usize>) -> Vec<usize> {
    let (left, rest) = split_layout(&layout);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let valid = match rest_height.cmp(&left_height) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => {
            left.len() <= rest.len() && !(left.len() == rest.len() && left > rest)
        }
    };
    if valid {
        return layout;
    }
    let p = left.len();
    let mut next =
        next_rooted(&layout, Some(p)).expect("jump target exists below the first subtree");
    if layout[p] > 2 {
        let (new_left, _) = split_layout(&next);
        let new_height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (k, d) in (1..=new_height + 1).enumerate() {
            next[len - (new_height + 1) + k] = d;
        }
    }
    next
}

/// Builds the labeled tree of a level sequence: vertex i attaches to the
/// most recent earlier vertex one level up.
fn layout_to_tree(layout: &[usize]) -> Tree {
    let n = layout.len();
    let mut edges = Vec::with_capacity(n - 1);
    let mut last_at_level: Vec<usize> = vec![0; n + 1];
    for (v, &d) in layout.iter().enumerate() {
        if v > 0 {
            edges.push((last_at_level[d - 1], v));
        }
        last_at_level[d] = v;
    }
    Tree::from_edges(n, &edges).expect("level sequences encode trees")
}

/// Decodes a Pruefer sequence over labels 0..n into the labeled tree it
/// encodes. `seq` must have length n-2 (empty for n = 2).
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<Tree> {
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    if seq.len() != n - 2 {
        return Err(Error::Parse {
            line: 0,
            reason: format!("Pruefer sequence for n={n} needs length {}, got {}", n - 2, seq.len()),
        });
    }
    let mut degree = vec![1u32; n];
    for &s in seq {
        if s >= n {
            return Err(Error::VertexOutOfRange { vertex: s, n });
        }
        degree[s] += 1;
    }
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let Reverse(leaf) = heap.pop().expect("a tree always has a leaf to strip");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            heap.push(Reverse(s));
        }
    }
    let Reverse(u) = heap.pop().expect("two vertices remain");
    let Reverse(v) = heap.pop().expect("two vertices remain");
    edges.push((u, v));
    Tree::from_edges(n, &edges)
}

/// Uniform random labeled tree on n vertices via a random Pruefer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    if n == 1 {
        return Tree::from_edges(1, &[]).expect("single vertex");
    }
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(n, &seq).expect("random sequences are valid")
}

/// One tree attaining the maximum Wiener index of its (n, d) cell.
#[derive(Clone, Debug, Serialize)]
pub struct ArgmaxEntry {
    pub canonical: String,
    pub shape: ShapeClass,
    /// Exactly two broom vertices, i.e. the tree is a (possibly degenerate)
    /// double broom.
    pub double_broom: bool,
    #[serde(skip)]
    pub tree: Tree,
}

/// The extremal summary of one (n, d) cell.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalRecord {
    pub n: usize,
    pub d: usize,
    pub max_wiener: i64,
    pub argmax: Vec<ArgmaxEntry>,
    /// The order-minus-diameter gap c = n - d.
    pub c: usize,
    pub all_double_broom: bool,
}

impl ExtremalRecord {
    pub fn num_argmax(&self) -> usize {
        self.argmax.len()
    }
}

fn make_entry(tree: Tree) -> ArgmaxEntry {
    let canonical = tree.canonical_form();
    let shape = classify(&tree).expect("cells have n >= 3");
    let double_broom = tree.broom_vertices().map(|b| b.len() == 2).unwrap_or(false);
    ArgmaxEntry { canonical, shape, double_broom, tree }
}

/// Extremal records for every diameter class of order n, ascending in d.
///
/// The per-tree work (diameter, Wiener, canonical form) is embarrassingly
/// parallel; the reduction is a deterministic ordered fold, so results do
/// not depend on the worker count.
pub fn extremal_all_cells(n: usize, ceiling: usize) -> Result<Vec<ExtremalRecord>> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let trees: Vec<Tree> = free_trees(n, ceiling)?.collect();
    let scored: Vec<(usize, i64, Tree)> = trees
        .into_par_iter()
        .map(|t| {
            let d = t.diameter();
            let w = t.wiener_edge_decomposition();
            (d, w, t)
        })
        .collect();
    let mut cells: Vec<ExtremalRecord> = Vec::new();
    for d in 2..=n - 1 {
        let mut max_w = i64::MIN;
        for (td, w, _) in scored.iter().filter(|(td, _, _)| *td == d) {
            debug_assert_eq!(*td, d);
            max_w = max_w.max(*w);
        }
        if max_w == i64::MIN {
            continue; // no tree of this diameter (cannot happen for 2..=n-1)
        }
        let argmax: Vec<ArgmaxEntry> = scored
            .iter()
            .filter(|(td, w, _)| *td == d && *w == max_w)
            .map(|(_, _, t)| make_entry(t.clone()))
            .collect();
        let all_double_broom = argmax.iter().all(|e| e.double_broom);
        cells.push(ExtremalRecord { n, d, max_wiener: max_w, argmax, c: n - d, all_double_broom });
    }
    Ok(cells)
}

/// The extremal record of a single (n, d) cell.
pub fn extremal_trees(n: usize, d: usize, ceiling: usize) -> Result<ExtremalRecord> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    if d < 2 || d > n - 1 {
        return Err(Error::EmptyClass { n, d });
    }
    let cells = extremal_all_cells(n, ceiling)?;
    cells
        .into_iter()
        .find(|r| r.d == d)
        .ok_or(Error::EmptyClass { n, d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts_match_known_sequence_up_to_12() {
        for n in 1..=12 {
            let count = free_trees(n, 16).unwrap().count();
            assert_eq!(count, FREE_TREE_COUNTS[n - 1], "free tree count at n={n}");
        }
    }

    #[test]
    fn generation_is_sound_and_duplicate_free() {
        for n in 2..=11 {
            let mut seen = HashSet::new();
            for t in free_trees(n, 16).unwrap() {
                assert_eq!(t.order(), n);
                assert!(seen.insert(t.canonical_form()), "duplicate class at n={n}");
            }
        }
    }

    #[test]
    fn ceiling_is_enforced() {
        assert!(matches!(free_trees(17, 16), Err(Error::AboveCeiling { .. })));
        assert!(free_trees(17, 20).is_ok());
    }

    #[test]
    fn stream_order_is_reproducible() {
        let a: Vec<String> = free_trees(9, 16).unwrap().map(|t| t.canonical_form()).collect();
        let b: Vec<String> = free_trees(9, 16).unwrap().map(|t| t.canonical_form()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn prufer_decoding() {
        // Sequence (1, 1) on 4 labels is the star at 1.
        let t = prufer_decode(4, &[1, 1]).unwrap();
        assert_eq!(t.degree(1), 3);
        // All 16 labeled trees on 4 vertices form 2 isomorphism classes.
        let mut classes = HashSet::new();
        let mut labeled = 0;
        for a in 0..4 {
            for b in 0..4 {
                labeled += 1;
                classes.insert(prufer_decode(4, &[a, b]).unwrap().canonical_form());
            }
        }
        assert_eq!(labeled, 16);
        assert_eq!(classes.len(), 2);
        assert!(prufer_decode(4, &[1]).is_err());
        assert!(prufer_decode(4, &[1, 9]).is_err());
    }

    #[test]
    fn extremal_path_cell() {
        let rec = extremal_trees(7, 6, 16).unwrap();
        assert_eq!(rec.max_wiener, 56);
        assert_eq!(rec.num_argmax(), 1);
        assert_eq!(rec.argmax[0].shape, ShapeClass::Path);
        assert!(rec.all_double_broom);
        assert_eq!(rec.c, 1);
    }

    #[test]
    fn extremal_seven_four_ties_broom_with_spider() {
        // W = 48 is shared by B(7,2,2) and the (2,2,2) spider, so the cell
        // keeps two argmax trees and the all-double-broom flag stays off.
        let rec = extremal_trees(7, 4, 16).unwrap();
        assert_eq!(rec.max_wiener, 48);
        assert_eq!(rec.num_argmax(), 2);
        assert!(!rec.all_double_broom);
        assert!(rec
            .argmax
            .iter()
            .any(|e| matches!(e.shape, ShapeClass::DoubleBroom { a: 2, b: 2 })));
        assert!(rec.argmax.iter().any(|e| e.shape == ShapeClass::Other));
        // The balanced double broom still attains the cell maximum.
        assert_eq!(crate::broom::best_double_broom(7, 4).unwrap().2, 48);
    }

    #[test]
    fn empty_class_is_an_error() {
        assert!(matches!(extremal_trees(7, 7, 16), Err(Error::EmptyClass { .. })));
        assert!(matches!(extremal_trees(7, 1, 16), Err(Error::EmptyClass { .. })));
    }
}
