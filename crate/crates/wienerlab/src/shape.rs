//! Coarse shape classification of trees into the families the broom
//! machinery cares about.

use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Shape of a tree, in the order the classifier checks them.
///
/// `Path` and `Star` take precedence: a path is never reported as the
/// degenerate double broom B(n,1,1), and a star is never a double broom at
/// all because it has a single broom vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ShapeClass {
    Path,
    Star,
    /// Exactly two broom vertices carrying `a` and `b` leaves, `a <= b`.
    DoubleBroom { a: usize, b: usize },
    /// Exactly three broom vertices x, y, z with d(x,z) = 2 and
    /// d(x,y) = d(z,y) = d-2; `a` and `c` are the leaf counts of the
    /// distance-2 pair (reported with `a <= c`), `b` belongs to y.
    TripleBroom { a: usize, b: usize, c: usize },
    Other,
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeClass::Path => write!(f, "path"),
            ShapeClass::Star => write!(f, "star"),
            ShapeClass::DoubleBroom { a, b } => write!(f, "double-broom(a={a} b={b})"),
            ShapeClass::TripleBroom { a, b, c } => {
                write!(f, "triple-broom(a={a} b={b} c={c})")
            }
            ShapeClass::Other => write!(f, "other"),
        }
    }
}

/// Classifies a tree with n >= 2.
pub fn classify(t: &Tree) -> Result<ShapeClass> {
    let n = t.order();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    if (0..n).all(|v| t.degree(v) <= 2) {
        return Ok(ShapeClass::Path);
    }
    if (0..n).any(|v| t.degree(v) == n - 1) {
        return Ok(ShapeClass::Star);
    }

    let brooms = t.broom_vertices()?;
    let leaf_count_at = |v: usize| -> usize {
        t.neighbors(v).iter().filter(|&&w| t.is_leaf(w as usize)).count()
    };

    match brooms.as_slice() {
        // Exactly two broom vertices force the double-broom shape: deleting
        // all leaves leaves a path whose endpoints are the broom vertices.
        [u, v] => {
            let (a, b) = (leaf_count_at(*u), leaf_count_at(*v));
            let (a, b) = (a.min(b), a.max(b));
            Ok(ShapeClass::DoubleBroom { a, b })
        }
        [u, v, w] => Ok(classify_three_brooms(t, [*u, *v, *w], leaf_count_at)),
        _ => Ok(ShapeClass::Other),
    }
}

fn classify_three_brooms(
    t: &Tree,
    brooms: [usize; 3],
    leaf_count_at: impl Fn(usize) -> usize,
) -> ShapeClass {
    let d = t.diameter();
    if d < 5 {
        // d = 4 admits a fully symmetric configuration with no distinguished
        // far vertex; the broom family starts at d = 5.
        return ShapeClass::Other;
    }
    // Look for the pair at distance 2 with the third vertex at d-2 from both.
    for yi in 0..3 {
        let y = brooms[yi];
        let x = brooms[(yi + 1) % 3];
        let z = brooms[(yi + 2) % 3];
        let from_x = match t.distances_from(x) {
            Ok(p) => p,
            Err(_) => return ShapeClass::Other,
        };
        if from_x.distance_to(z) != 2 {
            continue;
        }
        if from_x.distance_to(y) as usize != d - 2 {
            continue;
        }
        let from_z = match t.distances_from(z) {
            Ok(p) => p,
            Err(_) => return ShapeClass::Other,
        };
        if from_z.distance_to(y) as usize != d - 2 {
            continue;
        }
        let (la, lb, lc) = (leaf_count_at(x), leaf_count_at(y), leaf_count_at(z));
        // Everything outside the spine and the third broom must be a leaf.
        if t.order() != d + la + lb + lc {
            continue;
        }
        return ShapeClass::TripleBroom { a: la.min(lc), b: lb, c: la.max(lc) };
    }
    ShapeClass::Other
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::Tree;

    fn path(n: usize) -> Tree {
        Tree::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn paths_and_stars() {
        assert_eq!(classify(&path(2)).unwrap(), ShapeClass::Path);
        assert_eq!(classify(&path(3)).unwrap(), ShapeClass::Path);
        assert_eq!(classify(&path(6)).unwrap(), ShapeClass::Path);
        let star = Tree::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(classify(&star).unwrap(), ShapeClass::Star);
        let k1 = Tree::from_edges(1, &[]).unwrap();
        assert!(classify(&k1).is_err());
    }

    #[test]
    fn spider_with_long_legs_is_other() {
        // Three legs of length 3 from a center: three broom vertices but the
        // distance pattern is 4/4/4, not 2/(d-2)/(d-2).
        let edges = [
            (0, 1), (1, 2), (2, 3),
            (0, 4), (4, 5), (5, 6),
            (0, 7), (7, 8), (8, 9),
        ];
        let t = Tree::from_edges(10, &edges).unwrap();
        assert_eq!(classify(&t).unwrap(), ShapeClass::Other);
    }

    #[test]
    fn symmetric_depth_four_cluster_is_other() {
        // Spider with three legs of length 1 off a center, each carrying one
        // leaf: the d = 4 symmetric case that is excluded from the family.
        let edges = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)];
        let t = Tree::from_edges(7, &edges).unwrap();
        assert_eq!(classify(&t).unwrap(), ShapeClass::Other);
    }
}
