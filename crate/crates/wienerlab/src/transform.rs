//! Tree transformations and their exact Wiener deltas: broom relocation at a
//! special vertex and leaf relocation along a leaf-to-leaf path.
//!
//! The delta formulas are structural: they hold for every tree satisfying
//! the shape preconditions, not only for Wiener-maximal ones, which is what
//! makes them property-testable against direct recomputation.

use crate::error::{Error, Result};
use crate::tree::Tree;

/// A special vertex x together with two broom-shaped components of T - x.
///
/// Both components contain exactly one broom vertex of T and all their
/// T-leaves sit at the same distance `p` from x; the leaf-pair distance
/// across the two components is `2p < diam(T)`. In the notation of the
/// relocation delta, A = V(T1) + {x} and B = V(T) - (A + V(T2)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialContext {
    /// Order of the host tree.
    pub n: usize,
    /// The special vertex (degree >= 3).
    pub x: usize,
    /// Vertices of T1, sorted ascending.
    pub comp1: Vec<u32>,
    /// Vertices of T2, sorted ascending.
    pub comp2: Vec<u32>,
    /// Broom vertex y1' inside T1.
    pub broom1: usize,
    /// Broom vertex y2' inside T2.
    pub broom2: usize,
    /// Witness leaf y1 in T1 (smallest label).
    pub witness1: usize,
    /// Witness leaf y2 in T2 (smallest label).
    pub witness2: usize,
    /// Common leaf distance d(x, y1) = d(x, y2).
    pub p: usize,
    /// Number of T-leaves inside T1.
    pub t1: usize,
    /// Number of T-leaves inside T2.
    pub t2: usize,
    /// |A union B| = n - (p + t2 - 1).
    pub a_union_b: usize,
    /// |B| = n - 2p - t1 - t2 + 1.
    pub b_size: usize,
}

impl SpecialContext {
    /// The same unordered component pair with the roles of T1 and T2
    /// exchanged, so relocation absorbs the other side.
    pub fn swapped(&self) -> SpecialContext {
        SpecialContext {
            n: self.n,
            x: self.x,
            comp1: self.comp2.clone(),
            comp2: self.comp1.clone(),
            broom1: self.broom2,
            broom2: self.broom1,
            witness1: self.witness2,
            witness2: self.witness1,
            p: self.p,
            t1: self.t2,
            t2: self.t1,
            a_union_b: self.n - (self.p + self.t1 - 1),
            b_size: self.b_size,
        }
    }
}

/// An exactly-one-broom-vertex component pair at a candidate special vertex
/// whose leaf distances differ, so the broom-relocation delta does not apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearMiss {
    pub x: usize,
    pub comp1: Vec<u32>,
    pub comp2: Vec<u32>,
    pub p1: usize,
    pub p2: usize,
}

/// Result of scanning a tree for special vertices.
#[derive(Clone, Debug, Default)]
pub struct ContextScan {
    pub contexts: Vec<SpecialContext>,
    pub near_misses: Vec<NearMiss>,
}

/// One broom-shaped component hanging off a candidate vertex.
struct BroomArm {
    vertices: Vec<u32>,
    broom: usize,
    witness: usize,
    p: usize,
    leaves: usize,
}

fn broom_arms(t: &Tree, x: usize, dist: &[u32]) -> Vec<BroomArm> {
    let n = t.order();
    let mut seen = vec![false; n];
    seen[x] = true;
    let mut arms = Vec::new();
    for &root in t.neighbors(x) {
        if seen[root as usize] {
            continue;
        }
        // Collect the component of T - x containing this neighbor.
        let mut comp = Vec::new();
        let mut stack = vec![root];
        seen[root as usize] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in t.neighbors(v as usize) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();

        let leaves: Vec<u32> =
            comp.iter().copied().filter(|&v| t.is_leaf(v as usize)).collect();
        // Broom vertices of T inside the component; x has degree >= 3 so it
        // is never a leaf and cannot make a component vertex a broom vertex.
        let brooms: Vec<u32> = comp
            .iter()
            .copied()
            .filter(|&v| t.neighbors(v as usize).iter().any(|&w| t.is_leaf(w as usize)))
            .collect();
        if brooms.len() != 1 || leaves.is_empty() {
            continue;
        }
        let broom = brooms[0] as usize;
        let p = dist[broom] as usize + 1;
        // Exactly one broom vertex forces the broom shape; keep the checks
        // as a guard against contexts the delta derivation does not cover.
        let shape_ok = comp.len() == (p - 1) + leaves.len()
            && leaves.iter().all(|&l| dist[l as usize] as usize == p);
        debug_assert!(shape_ok, "one-broom component must be broom-shaped");
        if !shape_ok {
            continue;
        }
        arms.push(BroomArm {
            vertices: comp,
            broom,
            witness: leaves[0] as usize,
            p,
            leaves: leaves.len(),
        });
    }
    arms
}

/// Finds every special context of the tree, one per unordered component
/// pair, sorted by (x, smallest label of T1, smallest label of T2).
/// Component pairs that qualify except for unequal leaf distances are
/// returned as near-misses.
pub fn find_special_contexts(t: &Tree) -> Result<ContextScan> {
    let n = t.order();
    if n < 5 {
        return Err(Error::TooSmall { n, min: 5 });
    }
    let diam = t.diameter();
    let mut scan = ContextScan::default();
    let mut dist = vec![0u32; n];
    for x in 0..n {
        if t.degree(x) < 3 {
            continue;
        }
        t.fill_distances(x, &mut dist);
        let arms = broom_arms(t, x, &dist);
        for i in 0..arms.len() {
            for j in i + 1..arms.len() {
                let (a, b) = (&arms[i], &arms[j]);
                // Every cross leaf pair sits at distance p_a + p_b; the
                // special-vertex definition needs that strictly below the
                // diameter.
                if a.p + b.p >= diam {
                    continue;
                }
                if a.p != b.p {
                    scan.near_misses.push(NearMiss {
                        x,
                        comp1: a.vertices.clone(),
                        comp2: b.vertices.clone(),
                        p1: a.p,
                        p2: b.p,
                    });
                    continue;
                }
                let p = a.p;
                scan.contexts.push(SpecialContext {
                    n,
                    x,
                    comp1: a.vertices.clone(),
                    comp2: b.vertices.clone(),
                    broom1: a.broom,
                    broom2: b.broom,
                    witness1: a.witness,
                    witness2: b.witness,
                    p,
                    t1: a.leaves,
                    t2: b.leaves,
                    a_union_b: n - (p + b.leaves - 1),
                    b_size: n + 1 - 2 * p - a.leaves - b.leaves,
                });
            }
        }
    }
    scan.contexts
        .sort_by_key(|c| (c.x, c.comp1.first().copied(), c.comp2.first().copied()));
    scan.near_misses
        .sort_by_key(|m| (m.x, m.comp1.first().copied(), m.comp2.first().copied()));
    Ok(scan)
}

fn stale<T>(reason: impl Into<String>) -> Result<T> {
    Err(Error::StaleContext { reason: reason.into() })
}

fn validate_arm(
    t: &Tree,
    x: usize,
    dist: &[u32],
    comp: &[u32],
    broom: usize,
    witness: usize,
    p: usize,
    leaf_count: usize,
    member: &[bool],
) -> Result<()> {
    if comp.is_empty() {
        return stale("empty component");
    }
    let mut roots = 0;
    let mut leaves_seen = 0;
    let mut brooms_seen = 0;
    for &v in comp {
        let v = v as usize;
        if v >= t.order() || v == x {
            return stale(format!("vertex {v} cannot belong to a component of T-x"));
        }
        for &w in t.neighbors(v) {
            let w = w as usize;
            if w == x {
                roots += 1;
            } else if !member[w] {
                return stale(format!("component is not closed at vertex {v}"));
            }
        }
        if t.is_leaf(v) {
            leaves_seen += 1;
            if dist[v] as usize != p {
                return stale(format!("leaf {v} is not at distance {p} from x"));
            }
            if !t.has_edge(v, broom) {
                return stale(format!("leaf {v} is not adjacent to the broom vertex"));
            }
        }
        if t.neighbors(v).iter().any(|&w| t.is_leaf(w as usize)) {
            brooms_seen += 1;
        }
    }
    if roots != 1 {
        return stale("component must attach to x through exactly one edge");
    }
    if brooms_seen != 1 {
        return stale("component must contain exactly one broom vertex");
    }
    if leaves_seen != leaf_count {
        return stale(format!("expected {leaf_count} leaves, found {leaves_seen}"));
    }
    if comp.len() != p - 1 + leaf_count {
        return stale("component size does not match the broom shape");
    }
    if !member[broom] || dist[broom] as usize != p - 1 {
        return stale("broom vertex is not at distance p-1 inside the component");
    }
    if !member[witness] || !t.is_leaf(witness) {
        return stale("witness is not a leaf of the component");
    }
    Ok(())
}

/// Checks that a context still describes the tree exactly.
pub fn validate_context(t: &Tree, ctx: &SpecialContext) -> Result<()> {
    let n = t.order();
    if ctx.n != n {
        return stale(format!("context is for order {}, tree has {n}", ctx.n));
    }
    if ctx.x >= n || t.degree(ctx.x) < 3 {
        return stale("special vertex must have degree >= 3");
    }
    if ctx.p < 2 {
        return stale("leaf distance p must be at least 2");
    }
    let mut member1 = vec![false; n];
    let mut member2 = vec![false; n];
    for &v in &ctx.comp1 {
        member1[v as usize] = true;
    }
    for &v in &ctx.comp2 {
        if member1[v as usize] {
            return stale("components overlap");
        }
        member2[v as usize] = true;
    }
    let mut dist = vec![0u32; n];
    t.fill_distances(ctx.x, &mut dist);
    validate_arm(t, ctx.x, &dist, &ctx.comp1, ctx.broom1, ctx.witness1, ctx.p, ctx.t1, &member1)?;
    validate_arm(t, ctx.x, &dist, &ctx.comp2, ctx.broom2, ctx.witness2, ctx.p, ctx.t2, &member2)?;
    if 2 * ctx.p >= t.diameter() {
        return stale("leaf pair distance 2p must stay below the diameter");
    }
    if ctx.a_union_b != n - (ctx.p + ctx.t2 - 1)
        || ctx.b_size != n + 1 - 2 * ctx.p - ctx.t1 - ctx.t2
    {
        return stale("size fields are inconsistent");
    }
    Ok(())
}

/// Relocates the broom T2: removes its vertices and attaches |V(T2)| fresh
/// leaves to the broom vertex of T1. Order is preserved; the removed labels
/// are reused for the new leaves.
pub fn relocate_broom(t: &Tree, ctx: &SpecialContext) -> Result<Tree> {
    validate_context(t, ctx)?;
    let n = t.order();
    let mut in_comp2 = vec![false; n];
    for &v in &ctx.comp2 {
        in_comp2[v as usize] = true;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for (u, v) in t.edges() {
        if !in_comp2[u] && !in_comp2[v] {
            edges.push((u, v));
        }
    }
    for &v in &ctx.comp2 {
        edges.push((ctx.broom1, v as usize));
    }
    Tree::from_edges(n, &edges)
}

/// Exact Wiener delta of broom relocation, evaluated from the component
/// quantities: W(T') - W(T) for T' = relocate_broom(T, ctx).
pub fn predicted_broom_delta_full(ctx: &SpecialContext, n: usize) -> i64 {
    debug_assert_eq!(ctx.a_union_b, n - (ctx.p + ctx.t2 - 1));
    let p = ctx.p as i64;
    let t1 = ctx.t1 as i64;
    let t2 = ctx.t2 as i64;
    let aub = ctx.a_union_b as i64;
    let b = ctx.b_size as i64;
    let s = p + t2 - 1; // |V(T2)|
    let w_t2_after = s * (s - 1);
    let w_t2_before = p * (p - 1) * (p - 2) / 6 + t2 * p * (p - 1) / 2 + t2 * (t2 - 1);
    let cross = aub * (s - (p * (p - 1) / 2 + p * t2)) + s * (p - 1) * (b - t1);
    w_t2_after - w_t2_before + cross
}

/// The reduced form of the same delta:
/// -(1/6)(p-1)(12(t1-1)(p+t2-1) + p(-3n-5+12t2+10p)).
///
/// Accepts any parameter tuple (formula-evaluation mode); under the
/// substitutions |A u B| = n-(p+t2-1), |B| = n-2p-t1-t2+1 it equals the full
/// form, and at p = 1 the (p-1) factor makes it vanish.
pub fn predicted_broom_delta_reduced(t1: usize, t2: usize, p: usize, n: usize) -> i64 {
    let (t1, t2, p, n) = (t1 as i128, t2 as i128, p as i128, n as i128);
    let bracket = 12 * (t1 - 1) * (p + t2 - 1) + p * (-3 * n - 5 + 12 * t2 + 10 * p);
    let six_delta = -(p - 1) * bracket;
    debug_assert_eq!(six_delta % 6, 0, "the reduced delta is always an integer");
    (six_delta / 6) as i64
}

/// The keep inequality: true iff W(T) >= W(T'), i.e. relocating the broom
/// does not increase the Wiener index. Exact integer arithmetic; for p >= 2
/// this is equivalent to predicted_broom_delta_reduced(..) <= 0.
pub fn keep_inequality(t1: usize, t2: usize, p: usize, n: usize) -> bool {
    debug_assert!(p >= 2);
    let (t1, t2, p, n) = (t1 as i128, t2 as i128, p as i128, n as i128);
    12 * (t1 - 1) * (p + t2 - 1) >= p * (3 * n + 5 - 12 * t2 - 10 * p)
}

/// The x-to-y leaf path together with the orders of the subtrees hanging off
/// its internal vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafPath {
    /// path[0] = x, path[r] = y.
    path: Vec<u32>,
    /// hanging[i-1] = |V(T_i)| for internal vertex i in 1..r.
    hanging: Vec<usize>,
}

impl LeafPath {
    /// Path length r (number of edges).
    pub fn r(&self) -> usize {
        self.path.len() - 1
    }

    pub fn x(&self) -> usize {
        self.path[0] as usize
    }

    pub fn y(&self) -> usize {
        *self.path.last().unwrap() as usize
    }

    pub fn vertices(&self) -> &[u32] {
        &self.path
    }

    /// Hanging subtree orders s_1..s_{r-1}; 0 where nothing hangs.
    pub fn hanging_sizes(&self) -> &[usize] {
        &self.hanging
    }
}

/// Decomposes the tree along the unique path between two distinct leaves.
pub fn leaf_path(t: &Tree, x: usize, y: usize) -> Result<LeafPath> {
    let n = t.order();
    if x >= n {
        return Err(Error::VertexOutOfRange { vertex: x, n });
    }
    if y >= n {
        return Err(Error::VertexOutOfRange { vertex: y, n });
    }
    if !t.is_leaf(x) {
        return Err(Error::NotALeaf { vertex: x });
    }
    if !t.is_leaf(y) {
        return Err(Error::NotALeaf { vertex: y });
    }
    if x == y {
        return Err(Error::LeavesNotDistinct { vertex: x });
    }
    // Parent pointers from x, then walk back from y.
    let mut parent = vec![u32::MAX; n];
    let mut stack = vec![x as u32];
    parent[x] = x as u32;
    while let Some(v) = stack.pop() {
        for &w in t.neighbors(v as usize) {
            if parent[w as usize] == u32::MAX {
                parent[w as usize] = v;
                stack.push(w);
            }
        }
    }
    let mut path = vec![y as u32];
    let mut v = y;
    while v != x {
        v = parent[v] as usize;
        path.push(v as u32);
    }
    path.reverse();

    let r = path.len() - 1;
    let mut on_path = vec![false; n];
    for &v in &path {
        on_path[v as usize] = true;
    }
    let mut hanging = vec![0usize; r.saturating_sub(1)];
    let mut seen = on_path.clone();
    for (i, &pv) in path.iter().enumerate().skip(1).take(r.saturating_sub(1)) {
        let mut size = 0usize;
        let mut stack: Vec<u32> = Vec::new();
        for &w in t.neighbors(pv as usize) {
            if !seen[w as usize] {
                seen[w as usize] = true;
                stack.push(w);
            }
        }
        while let Some(v) = stack.pop() {
            size += 1;
            for &w in t.neighbors(v as usize) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        hanging[i - 1] = size;
    }
    debug_assert_eq!(path.len() + hanging.iter().sum::<usize>(), n);
    Ok(LeafPath { path, hanging })
}

/// Exact Wiener delta of relocating leaf x next to leaf y:
/// sum_i (r-2i) s_i - (r-2). Unconditional for any tree and leaf pair.
pub fn predicted_leaf_delta(lp: &LeafPath) -> i64 {
    let r = lp.r() as i64;
    let mut delta = -(r - 2);
    for (idx, &s) in lp.hanging.iter().enumerate() {
        let i = idx as i64 + 1;
        delta += (r - 2 * i) * s as i64;
    }
    delta
}

/// Deletes leaf x and attaches a fresh leaf to the neighbor of leaf y,
/// reusing x's label. Order is preserved.
pub fn relocate_leaf(t: &Tree, x: usize, y: usize) -> Result<Tree> {
    let n = t.order();
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    // Shares the leaf checks with the path decomposition.
    let _ = leaf_path(t, x, y)?;
    let x_parent = t.neighbors(x)[0] as usize;
    let y_parent = t.neighbors(y)[0] as usize;
    let mut edges = Vec::with_capacity(n - 1);
    for (u, v) in t.edges() {
        if (u, v) == (x.min(x_parent), x.max(x_parent)) {
            continue;
        }
        edges.push((u, v));
    }
    edges.push((x, y_parent));
    Tree::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::broom::{double_broom, triple_broom};

    fn path_tree(n: usize) -> Tree {
        Tree::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn no_contexts_in_paths_and_double_brooms() {
        assert!(find_special_contexts(&path_tree(10)).unwrap().contexts.is_empty());
        let db = double_broom(10, 2, 3).unwrap();
        let scan = find_special_contexts(&db).unwrap();
        assert!(scan.contexts.is_empty());
        assert!(scan.near_misses.is_empty());
    }

    #[test]
    fn triple_broom_has_one_context() {
        let t = triple_broom(12, 2, 2, 2).unwrap();
        let scan = find_special_contexts(&t).unwrap();
        assert_eq!(scan.contexts.len(), 1);
        let ctx = &scan.contexts[0];
        assert_eq!(ctx.x, 1); // spine vertex adjacent to both x and z
        assert_eq!((ctx.p, ctx.t1, ctx.t2), (2, 2, 2));
        assert_eq!(ctx.a_union_b, 9);
        assert_eq!(ctx.b_size, 5);
    }

    #[test]
    fn relocating_the_worked_example() {
        let t = triple_broom(12, 2, 2, 2).unwrap();
        let scan = find_special_contexts(&t).unwrap();
        let ctx = &scan.contexts[0];

        let before = t.wiener_edge_decomposition();
        assert_eq!(before, 214);
        let after_tree = relocate_broom(&t, ctx).unwrap();
        let after = after_tree.wiener_edge_decomposition();
        assert_eq!(after, 207);

        assert_eq!(predicted_broom_delta_full(ctx, 12), -7);
        assert_eq!(predicted_broom_delta_reduced(2, 2, 2, 12), -7);

        let db = double_broom(12, 5, 2).unwrap();
        assert_eq!(after_tree.canonical_form(), db.canonical_form());

        // The symmetric absorb lands on an isomorphic tree (t1 = t2).
        let swapped = ctx.swapped();
        let other = relocate_broom(&t, &swapped).unwrap();
        assert_eq!(other.canonical_form(), after_tree.canonical_form());
    }

    #[test]
    fn stale_context_is_rejected() {
        let t = triple_broom(12, 2, 2, 2).unwrap();
        let ctx = find_special_contexts(&t).unwrap().contexts.pop().unwrap();
        let other = triple_broom(13, 2, 3, 2).unwrap();
        assert!(matches!(
            relocate_broom(&other, &ctx),
            Err(Error::StaleContext { .. })
        ));
        let mut tampered = ctx.clone();
        tampered.t2 += 1;
        assert!(matches!(
            relocate_broom(&t, &tampered),
            Err(Error::StaleContext { .. })
        ));
    }

    #[test]
    fn reduced_delta_formula_mode() {
        // p = 1 vanishes regardless of the other arguments.
        assert_eq!(predicted_broom_delta_reduced(5, 9, 1, 50), 0);
        // The n = 8 instance from the corollary: -(1/6)(12*0*2 + 2*3) = -1.
        assert_eq!(predicted_broom_delta_reduced(1, 1, 2, 8), -1);
    }

    #[test]
    fn keep_inequality_examples() {
        assert!(keep_inequality(2, 2, 2, 12));
        assert!(!keep_inequality(1, 1, 2, 100));
    }

    #[test]
    fn leaf_path_decompositions() {
        let p5 = path_tree(5);
        let lp = leaf_path(&p5, 0, 4).unwrap();
        assert_eq!(lp.r(), 4);
        assert_eq!(lp.hanging_sizes(), &[0, 0, 0]);
        assert_eq!(predicted_leaf_delta(&lp), -2);

        let t = triple_broom(12, 2, 2, 2).unwrap();
        // Leaf 6 hangs off the x end (spine vertex 0), leaf 8 off the y end.
        let lp = leaf_path(&t, 6, 8).unwrap();
        assert_eq!(lp.r(), 6);
        assert_eq!(lp.hanging_sizes(), &[1, 3, 0, 0, 1]);
        assert_eq!(predicted_leaf_delta(&lp), 2);

        let k13 = Tree::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let lp = leaf_path(&k13, 1, 2).unwrap();
        assert_eq!(lp.r(), 2);
        assert_eq!(lp.hanging_sizes(), &[1]);
        assert_eq!(predicted_leaf_delta(&lp), 0);
    }

    #[test]
    fn leaf_relocation_matches_prediction() {
        let p5 = path_tree(5);
        let t2 = relocate_leaf(&p5, 0, 4).unwrap();
        assert_eq!(t2.wiener_pairwise(), 18);

        let t = triple_broom(12, 2, 2, 2).unwrap();
        let t2 = relocate_leaf(&t, 6, 8).unwrap();
        assert_eq!(t2.wiener_edge_decomposition(), 216);

        // Swapping the two leaves of P3 across its center is a no-op shape.
        let p3 = path_tree(3);
        let t2 = relocate_leaf(&p3, 0, 2).unwrap();
        assert_eq!(t2.canonical_form(), p3.canonical_form());
    }

    #[test]
    fn leaf_errors() {
        let p5 = path_tree(5);
        assert!(matches!(leaf_path(&p5, 1, 4), Err(Error::NotALeaf { vertex: 1 })));
        assert!(matches!(leaf_path(&p5, 0, 0), Err(Error::LeavesNotDistinct { .. })));
        let p2 = path_tree(2);
        assert!(matches!(relocate_leaf(&p2, 0, 1), Err(Error::TooSmall { .. })));
    }
}
