//! Canonical forms for unlabeled-tree comparison.
//!
//! Two trees map to the same canonical string iff they are isomorphic. The
//! form is a depth sequence of the tree rooted at its center; a bicentral
//! tree is rooted at a virtual vertex placed on the central edge. Children
//! are ordered by the rank of their subtree's isomorphism class, computed
//! level by level (AHU-style) so the result is independent of the input
//! labeling. The string is bracket- and comma-free: `"<n>:<d0>.<d1>..."`.

use crate::tree::Tree;

/// Centers of the tree (one or two vertices), found by stripping leaves.
pub fn centers(t: &Tree) -> Vec<usize> {
    let n = t.order();
    if n == 1 {
        return vec![0];
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut frontier: Vec<u32> = (0..n).filter(|&v| degree[v] == 1).map(|v| v as u32).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &frontier {
            removed[v as usize] = true;
        }
        remaining -= frontier.len();
        for &v in &frontier {
            for &w in t.neighbors(v as usize) {
                if !removed[w as usize] {
                    degree[w as usize] -= 1;
                    if degree[w as usize] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    out.sort_unstable();
    out
}

impl Tree {
    /// Canonical string; equal across all labelings of the same tree,
    /// distinct for non-isomorphic trees.
    pub fn canonical_form(&self) -> String {
        let n = self.order();
        if n == 1 {
            return "1:0".to_string();
        }
        let cs = centers(self);
        let (roots, cut): (Vec<usize>, Option<(usize, usize)>) = match cs.as_slice() {
            [c] => (vec![*c], None),
            [c1, c2] => (vec![*c1, *c2], Some((*c1, *c2))),
            _ => unreachable!("a tree has one or two centers"),
        };

        // Rooted forest: multi-source BFS from the roots, never crossing the
        // central edge.
        let mut depth = vec![u32::MAX; n];
        let mut parent = vec![u32::MAX; n];
        let mut levels: Vec<Vec<u32>> = vec![roots.iter().map(|&r| r as u32).collect()];
        for &r in &roots {
            depth[r] = 0;
        }
        loop {
            let mut next = Vec::new();
            for &v in levels.last().unwrap() {
                for &w in self.neighbors(v as usize) {
                    if let Some((a, b)) = cut {
                        let e = (v as usize, w as usize);
                        if e == (a, b) || e == (b, a) {
                            continue;
                        }
                    }
                    if depth[w as usize] == u32::MAX {
                        depth[w as usize] = depth[v as usize] + 1;
                        parent[w as usize] = v;
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            levels.push(next);
        }

        let mut children: Vec<Vec<u32>> = vec![Vec::new(); n];
        for v in 0..n {
            if parent[v] != u32::MAX {
                children[parent[v] as usize].push(v as u32);
            }
        }

        // Assign isomorphism-class ranks bottom-up. Signatures at one level
        // are sorted child ranks; ranks are positions in the sorted distinct
        // signature list, so they depend only on the subtree's shape.
        let mut code = vec![0u32; n];
        for level in levels.iter().rev() {
            let mut sigs: Vec<(Vec<u32>, u32)> = level
                .iter()
                .map(|&v| {
                    let mut sig: Vec<u32> =
                        children[v as usize].iter().map(|&c| code[c as usize]).collect();
                    sig.sort_unstable();
                    (sig, v)
                })
                .collect();
            sigs.sort();
            let mut rank = 0u32;
            for i in 0..sigs.len() {
                if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                    rank += 1;
                }
                code[sigs[i].1 as usize] = rank;
            }
        }
        for v in 0..n {
            children[v].sort_unstable_by_key(|&c| code[c as usize]);
        }

        // Emit the depth sequence; a virtual root precedes both halves of a
        // bicentral tree, halves ordered by their class rank.
        let mut seq: Vec<u32> = Vec::with_capacity(n + 1);
        let mut stack: Vec<(u32, u32)> = Vec::new();
        match cut {
            None => stack.push((roots[0] as u32, 0)),
            Some(_) => {
                seq.push(0);
                let mut rs = roots.clone();
                rs.sort_by_key(|&r| code[r]);
                for &r in rs.iter().rev() {
                    stack.push((r as u32, 1));
                }
            }
        }
        while let Some((v, d)) = stack.pop() {
            seq.push(d);
            for &c in children[v as usize].iter().rev() {
                stack.push((c, d + 1));
            }
        }

        use std::fmt::Write as _;
        let mut out = format!("{n}:");
        for (i, d) in seq.iter().enumerate() {
            if i > 0 {
                out.push('.');
            }
            let _ = write!(out, "{d}");
        }
        out
    }
}
