//! Double and triple broom families: parametric construction, a linear-time
//! Wiener evaluator, best-in-family optimizers, and the n-versus-d bound
//! calculators for the two regimes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Parametric description of a double broom B(n,a,b) or triple broom
/// B(n,a,b,c).
///
/// Double: a path spine of d-1 vertices with `a` extra leaves on one end
/// vertex and `b` on the other, d = n-a-b+1. Triple: additionally a third
/// broom vertex z adjacent to the spine vertex next to x, carrying `c`
/// leaves, d = n-a-b-c; z sits at d(x,z) = 2, d(x,y) = d(z,y) = d-2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BroomSpec {
    Double { n: usize, a: usize, b: usize },
    Triple { n: usize, a: usize, b: usize, c: usize },
}

impl BroomSpec {
    pub fn double(n: usize, a: usize, b: usize) -> Result<BroomSpec> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidBroomSpec { reason: "a and b must be >= 1".into() });
        }
        if n < a + b + 2 {
            // d = n-a-b+1 >= 3 keeps the two broom vertices distinct.
            return Err(Error::InvalidBroomSpec {
                reason: format!("double broom needs d = n-a-b+1 >= 3, got n={n}, a={a}, b={b}"),
            });
        }
        Ok(BroomSpec::Double { n, a, b })
    }

    pub fn triple(n: usize, a: usize, b: usize, c: usize) -> Result<BroomSpec> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::InvalidBroomSpec { reason: "a, b, c must be >= 1".into() });
        }
        if n < a + b + c + 5 {
            return Err(Error::InvalidBroomSpec {
                reason: format!(
                    "triple broom needs d = n-a-b-c >= 5, got n={n}, a={a}, b={b}, c={c}"
                ),
            });
        }
        Ok(BroomSpec::Triple { n, a, b, c })
    }

    pub fn order(&self) -> usize {
        match *self {
            BroomSpec::Double { n, .. } | BroomSpec::Triple { n, .. } => n,
        }
    }

    /// Diameter of the realized tree.
    pub fn diameter(&self) -> usize {
        match *self {
            BroomSpec::Double { n, a, b } => n - a - b + 1,
            BroomSpec::Triple { n, a, b, c } => n - a - b - c,
        }
    }

    /// Total number of leaves.
    pub fn leaf_total(&self) -> usize {
        match *self {
            BroomSpec::Double { a, b, .. } => a + b,
            BroomSpec::Triple { a, b, c, .. } => a + b + c,
        }
    }

    /// Builds the labeled tree: spine `0..=d-2` (x = 0, y = d-2), then for a
    /// triple broom z = d-1 attached to spine vertex 1, then the leaf blocks
    /// of x, y, z in that order.
    pub fn realize(&self) -> Tree {
        let n = self.order();
        let d = self.diameter();
        let mut edges = Vec::with_capacity(n - 1);
        for i in 0..d - 2 {
            edges.push((i, i + 1));
        }
        let mut next = d - 1;
        match *self {
            BroomSpec::Double { a, b, .. } => {
                for _ in 0..a {
                    edges.push((0, next));
                    next += 1;
                }
                for _ in 0..b {
                    edges.push((d - 2, next));
                    next += 1;
                }
            }
            BroomSpec::Triple { a, b, c, .. } => {
                let z = next;
                edges.push((1, z));
                next += 1;
                for _ in 0..a {
                    edges.push((0, next));
                    next += 1;
                }
                for _ in 0..b {
                    edges.push((d - 2, next));
                    next += 1;
                }
                for _ in 0..c {
                    edges.push((z, next));
                    next += 1;
                }
            }
        }
        debug_assert_eq!(next, n);
        Tree::from_edges(n, &edges).expect("validated parameters realize a tree")
    }

    /// Wiener index via the edge decomposition specialized to the broom
    /// shape: every leaf edge contributes n-1; a spine edge contributes the
    /// product of the component orders on its two sides. Runs in O(d).
    pub fn wiener(&self) -> i64 {
        let n = self.order() as i64;
        let d = self.diameter() as i64;
        let g = self.leaf_total() as i64;
        let mut w = g * (n - 1);
        match *self {
            BroomSpec::Double { a, .. } => {
                let a = a as i64;
                for i in 1..=d - 2 {
                    w += (a + i) * (n - a - i);
                }
            }
            BroomSpec::Triple { a, c, .. } => {
                let a = a as i64;
                let c = c as i64;
                w += (a + 1) * (n - a - 1);
                w += (c + 1) * (n - c - 1);
                for i in 2..=d - 2 {
                    let side = i + a + c + 1;
                    w += side * (n - side);
                }
            }
        }
        w
    }
}

/// Constructs the double broom B(n,a,b).
pub fn double_broom(n: usize, a: usize, b: usize) -> Result<Tree> {
    Ok(BroomSpec::double(n, a, b)?.realize())
}

/// Constructs the triple broom B(n,a,b,c).
pub fn triple_broom(n: usize, a: usize, b: usize, c: usize) -> Result<Tree> {
    Ok(BroomSpec::triple(n, a, b, c)?.realize())
}

/// Linear-time Wiener index of a broom family member.
pub fn wiener_broom(spec: &BroomSpec) -> i64 {
    spec.wiener()
}

/// Best double broom of order n and diameter d: the balanced split.
///
/// Scans every split a in 1..g and asserts the balanced split from the
/// closed form wins the scan, so the balance lemma is re-checked on every
/// call. Returns (a, b, W) with a <= b.
pub fn best_double_broom(n: usize, d: usize) -> Result<(usize, usize, i64)> {
    if d < 3 || n < d + 1 {
        return Err(Error::EmptyBroomFamily { kind: "double", n, d });
    }
    let g = n - d + 1; // total leaves; g >= 2
    let mut best: Option<(usize, usize, i64)> = None;
    for a in 1..g {
        let b = g - a;
        let w = BroomSpec::double(n, a, b)?.wiener();
        if best.map_or(true, |(_, _, bw)| w > bw) {
            best = Some((a, b, w));
        }
    }
    let (a, b, w) = best.expect("g >= 2 yields at least one split");
    let (balanced_a, balanced_b) = (g / 2, g - g / 2);
    assert_eq!(
        (a.min(b), a.max(b)),
        (balanced_a.min(balanced_b), balanced_a.max(balanced_b)),
        "balanced split must win the exhaustive scan for n={n}, d={d}"
    );
    Ok((a.min(b), a.max(b), w))
}

/// Best triple broom of order n and diameter d, by exhaustive scan over all
/// compositions a+b+c = g. Ties break toward the lexicographically smallest
/// (a, b, c). Returns (a, b, c, W).
pub fn best_triple_broom(n: usize, d: usize) -> Result<(usize, usize, usize, i64)> {
    if d < 5 || n < d + 3 {
        return Err(Error::EmptyBroomFamily { kind: "triple", n, d });
    }
    let g = n - d; // total leaves; g >= 3
    let mut best: Option<(usize, usize, usize, i64)> = None;
    for a in 1..=g - 2 {
        for b in 1..=g - a - 1 {
            let c = g - a - b;
            let w = BroomSpec::triple(n, a, b, c)?.wiener();
            if best.map_or(true, |(_, _, _, bw)| w > bw) {
                best = Some((a, b, c, w));
            }
        }
    }
    Ok(best.expect("g >= 3 yields at least one composition"))
}

/// Floor of sqrt((d-1)/2), computed exactly: the largest k with 2k^2 <= d-1.
fn sqrt_half_floor(d: usize) -> i64 {
    let m = (d - 1) as u64;
    let mut k = (m / 2).isqrt();
    while 2 * (k + 1) * (k + 1) <= m {
        k += 1;
    }
    while k > 0 && 2 * k * k > m {
        k -= 1;
    }
    k as i64
}

/// Largest order for which the double broom is proved extremal:
/// d - 2 + 4*floor(sqrt((d-1)/2)).
pub fn theorem_bound(d: usize) -> i64 {
    debug_assert!(d >= 3);
    d as i64 - 2 + 4 * sqrt_half_floor(d)
}

/// Smallest order for which some triple broom beats every double broom:
/// d + 4 + 4*floor(sqrt((d-1)/2)).
pub fn proposition_bound(d: usize) -> i64 {
    debug_assert!(d >= 3);
    d as i64 + 4 + 4 * sqrt_half_floor(d)
}

/// Which side of the two bounds an (n, d) cell falls on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// n <= theorem_bound(d): double brooms are extremal (for large n).
    Theorem,
    /// Strictly between the bounds.
    Gap,
    /// n >= proposition_bound(d): a triple broom wins (for large n).
    Proposition,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Theorem => "theorem",
            Regime::Gap => "gap",
            Regime::Proposition => "proposition",
        }
    }
}

/// Winner of a double-versus-triple comparison. Ties go to the double broom
/// because the triple must win strictly to matter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Winner {
    Double,
    Triple,
}

impl Winner {
    pub fn as_str(&self) -> &'static str {
        match self {
            Winner::Double => "double",
            Winner::Triple => "triple",
        }
    }
}

/// Exact comparison of the best members of both broom families at (n, d).
#[derive(Clone, Debug, Serialize)]
pub struct BroomComparison {
    pub n: usize,
    pub d: usize,
    /// (a, b, W) of the best double broom.
    pub best_double: (usize, usize, i64),
    /// (a, b, c, W) of the best triple broom.
    pub best_triple: (usize, usize, usize, i64),
    pub winner: Winner,
    /// W(best triple) - W(best double).
    pub margin: i64,
    pub regime: Regime,
}

/// Compares the best double and triple brooms at (n, d).
pub fn compare_brooms(n: usize, d: usize) -> Result<BroomComparison> {
    let best_double = best_double_broom(n, d)?;
    let best_triple = best_triple_broom(n, d)?;
    let margin = best_triple.3 - best_double.2;
    let winner = if margin > 0 { Winner::Triple } else { Winner::Double };
    let regime = if (n as i64) <= theorem_bound(d) {
        Regime::Theorem
    } else if (n as i64) >= proposition_bound(d) {
        Regime::Proposition
    } else {
        Regime::Gap
    };
    Ok(BroomComparison { n, d, best_double, best_triple, winner, margin, regime })
}
