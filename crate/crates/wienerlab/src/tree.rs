//! Exact tree representation and the distance machinery built on it.
//!
//! A [`Tree`] is a validated, immutable labeled tree on vertices `0..n`.
//! Unlabeled (isomorphism-class) questions go through
//! [`Tree::canonical_form`]. All distances are hop counts and all distance
//! sums are exact 64-bit integers; construction rejects orders above
//! [`MAX_ORDER`] so that no Wiener value can overflow.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Largest supported order. W(T) <= n^3/6 keeps every distance sum well
/// inside `i64` at this size.
pub const MAX_ORDER: usize = 200_000;

/// A finite unrooted tree with dense vertex labels `0..n`.
///
/// Adjacency is stored flat (CSR layout) with each neighbor run sorted
/// ascending, so construction performs O(1) allocations and traversal is
/// cache-friendly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    n: usize,
    offsets: Vec<u32>,
    neighbors: Vec<u32>,
}

impl Tree {
    /// Validates an edge list and builds the tree.
    ///
    /// Rejects out-of-range labels, self-loops, duplicate edges, wrong edge
    /// counts, and cyclic/disconnected inputs; the error names the first
    /// violation found.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::EmptyTree);
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        if edges.len() != n - 1 {
            return Err(Error::EdgeCountMismatch { n, edges: edges.len() });
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            normalized.push((u.min(v) as u32, u.max(v) as u32));
        }
        normalized.sort_unstable();
        for pair in normalized.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateEdge {
                    u: pair[0].0 as usize,
                    v: pair[0].1 as usize,
                });
            }
        }
        let mut offsets = vec![0u32; n + 1];
        for &(u, v) in &normalized {
            offsets[u as usize + 1] += 1;
            offsets[v as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut flat = vec![0u32; normalized.len() * 2];
        for &(u, v) in &normalized {
            flat[cursor[u as usize] as usize] = v;
            cursor[u as usize] += 1;
            flat[cursor[v as usize] as usize] = u;
            cursor[v as usize] += 1;
        }
        for v in 0..n {
            flat[offsets[v] as usize..offsets[v + 1] as usize].sort_unstable();
        }
        let tree = Tree { n, offsets, neighbors: flat };
        // n-1 distinct edges and no cycle reachable from 0 <=> connected tree.
        if tree.reachable_count(0) != n {
            return Err(Error::CycleOrDisconnected);
        }
        Ok(tree)
    }

    fn reachable_count(&self, start: usize) -> usize {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start as u32];
        seen[start] = true;
        let mut count = 0;
        while let Some(v) = stack.pop() {
            count += 1;
            for &w in self.neighbors(v as usize) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        count
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Neighbors of `v`, sorted ascending.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    pub fn degree(&self, v: usize) -> usize {
        (self.offsets[v + 1] - self.offsets[v]) as usize
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// Edges as normalized `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n.saturating_sub(1));
        for u in 0..self.n {
            for &v in self.neighbors(u) {
                let v = v as usize;
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degree-1 vertices, ascending. Rejects the single-vertex tree, whose
    /// lone vertex is conventionally neither a leaf nor a broom vertex.
    pub fn leaves(&self) -> Result<Vec<usize>> {
        if self.n < 2 {
            return Err(Error::TooSmall { n: self.n, min: 2 });
        }
        Ok((0..self.n).filter(|&v| self.is_leaf(v)).collect())
    }

    /// Vertices adjacent to at least one leaf, ascending.
    pub fn broom_vertices(&self) -> Result<Vec<usize>> {
        if self.n < 2 {
            return Err(Error::TooSmall { n: self.n, min: 2 });
        }
        Ok((0..self.n)
            .filter(|&v| self.neighbors(v).iter().any(|&w| self.is_leaf(w as usize)))
            .collect())
    }

    /// Single-source hop distances to every vertex.
    pub fn distances_from(&self, v: usize) -> Result<DistanceProfile> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut dist = vec![u32::MAX; self.n];
        self.fill_distances(v, &mut dist);
        Ok(DistanceProfile { source: v, dist })
    }

    /// BFS into caller-provided buffers; used by the hot scans to avoid
    /// reallocating per source. Each vertex enters the queue once, so a
    /// plain vector with a read head serves as the FIFO.
    pub(crate) fn fill_distances_with(&self, source: usize, dist: &mut [u32], queue: &mut Vec<u32>) {
        dist.fill(u32::MAX);
        dist[source] = 0;
        queue.clear();
        queue.push(source as u32);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let du = dist[u as usize];
            for &w in self.neighbors(u as usize) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = du + 1;
                    queue.push(w);
                }
            }
        }
    }

    pub(crate) fn fill_distances(&self, source: usize, dist: &mut [u32]) {
        let mut queue = Vec::with_capacity(self.n);
        self.fill_distances_with(source, dist, &mut queue);
    }

    /// Maximum distance from `v` to any vertex.
    pub fn eccentricity(&self, v: usize) -> Result<usize> {
        Ok(self.distances_from(v)?.max() as usize)
    }

    /// Maximum eccentricity, computed with the two-sweep scan.
    pub fn diameter(&self) -> usize {
        if self.n == 1 {
            return 0;
        }
        let mut dist = vec![0u32; self.n];
        self.fill_distances(0, &mut dist);
        let far = (0..self.n).max_by_key(|&v| dist[v]).unwrap();
        self.fill_distances(far, &mut dist);
        dist.iter().copied().max().unwrap() as usize
    }

    /// Wiener index as the sum of d(u,v) over unordered pairs, via one BFS
    /// per vertex. O(n^2); serves as the direct-definition route.
    pub fn wiener_pairwise(&self) -> i64 {
        let mut total: i64 = 0;
        let mut dist = vec![0u32; self.n];
        let mut queue = Vec::with_capacity(self.n);
        for v in 0..self.n {
            self.fill_distances_with(v, &mut dist, &mut queue);
            for &d in &dist {
                total += d as i64;
            }
        }
        total / 2
    }

    /// Wiener index via the edge decomposition: each edge contributes the
    /// product of the orders of the two components its removal creates.
    /// O(n); independent of the pairwise route.
    pub fn wiener_edge_decomposition(&self) -> i64 {
        if self.n == 1 {
            return 0;
        }
        let n = self.n as i64;
        // Iterative rooted DFS at 0 accumulating subtree sizes.
        let mut parent = vec![u32::MAX; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut stack = vec![0u32];
        parent[0] = 0;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in self.neighbors(v as usize) {
                if parent[w as usize] == u32::MAX {
                    parent[w as usize] = v;
                    stack.push(w);
                }
            }
        }
        let mut size = vec![1i64; self.n];
        let mut total = 0i64;
        for &v in order.iter().rev().take(self.n - 1) {
            // Edge (v, parent[v]) splits off size[v] vertices.
            let s = size[v as usize];
            total += s * (n - s);
            size[parent[v as usize] as usize] += s;
        }
        total
    }

    /// Renders the tree text format: first line `n`, then one `u v` edge per
    /// line in lexicographic order, LF endings.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the tree text format accepted by every CLI command.
    pub fn from_text(text: &str) -> Result<Tree> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (line_no, first) = lines.next().ok_or(Error::Parse {
            line: 1,
            reason: "empty input".into(),
        })?;
        let n: usize = first.trim().parse().map_err(|_| Error::Parse {
            line: line_no + 1,
            reason: format!("expected vertex count, got {:?}", first.trim()),
        })?;
        let mut edges = Vec::new();
        for (idx, line) in lines {
            let mut it = line.split_whitespace();
            let u = parse_endpoint(it.next(), idx + 1)?;
            let v = parse_endpoint(it.next(), idx + 1)?;
            if let Some(extra) = it.next() {
                return Err(Error::Parse {
                    line: idx + 1,
                    reason: format!("unexpected token {extra:?} after edge"),
                });
            }
            edges.push((u, v));
        }
        Tree::from_edges(n, &edges)
    }
}

fn parse_endpoint(tok: Option<&str>, line: usize) -> Result<usize> {
    let tok = tok.ok_or(Error::Parse {
        line,
        reason: "expected edge \"u v\"".into(),
    })?;
    tok.parse().map_err(|_| Error::Parse {
        line,
        reason: format!("bad vertex label {tok:?}"),
    })
}

/// Hop distances from a single source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceProfile {
    source: usize,
    dist: Vec<u32>,
}

impl DistanceProfile {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn distances(&self) -> &[u32] {
        &self.dist
    }

    pub fn distance_to(&self, v: usize) -> u32 {
        self.dist[v]
    }

    /// The eccentricity of the source.
    pub fn max(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    pub fn sum(&self) -> i64 {
        self.dist.iter().map(|&d| d as i64).sum()
    }
}
