//! Orellana–Scott deletion relations, checked by computing every side.

use crate::error::{Error, Result};
use crate::graphs::Graph;

use super::csf;

type Edge = (usize, usize);

fn same_edge(a: Edge, b: Edge) -> bool {
    a == b || a == (b.1, b.0)
}

/// Checks `X_G = X_{G-e1} + X_{G-e2} - X_{G-{e1,e2}}` for a triangle `e1, e2, e3` of `G`.
pub fn triangle_relation_check(g: &Graph, e1: Edge, e2: Edge, e3: Edge) -> Result<bool> {
    let es = [e1, e2, e3];
    for &(u, v) in &es {
        if !g.has_edge(u, v) {
            return Err(Error::NotATriangle(format!("{u}-{v} is not an edge")));
        }
    }
    let mut vertices: Vec<usize> = es.iter().flat_map(|&(u, v)| [u, v]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    let distinct = !same_edge(e1, e2) && !same_edge(e1, e3) && !same_edge(e2, e3);
    if vertices.len() != 3 || !distinct {
        return Err(Error::NotATriangle(format!("{e1:?}, {e2:?}, {e3:?}")));
    }
    let lhs = csf(g)?;
    let a = csf(&g.without_edges(&[e1])?)?;
    let b = csf(&g.without_edges(&[e2])?)?;
    let c = csf(&g.without_edges(&[e1, e2])?)?;
    Ok(lhs == &(&a + &b) - &c)
}

/// Checks `X_G = X_{(G-e1)+e3} + X_{G-e2} - X_{(G-{e1,e2})+e3}` where
/// `e1 = v1v3`, `e2 = v2v3` are edges and `e3 = v1v2` is not.
pub fn edge_swap_relation_check(g: &Graph, v1: usize, v2: usize, v3: usize) -> Result<bool> {
    let d = g.order();
    for v in [v1, v2, v3] {
        if v == 0 || v > d {
            return Err(Error::NoSuchVertex { vertex: v, order: d });
        }
    }
    if v1 == v2 || v1 == v3 || v2 == v3 {
        return Err(Error::PreconditionViolated("v1, v2, v3 must be distinct".into()));
    }
    if !g.has_edge(v1, v3) || !g.has_edge(v2, v3) {
        return Err(Error::PreconditionViolated(format!("{v1}-{v3} and {v2}-{v3} must be edges")));
    }
    if g.has_edge(v1, v2) {
        return Err(Error::PreconditionViolated(format!("{v1}-{v2} must not be an edge")));
    }
    let (e1, e2, e3) = ((v1, v3), (v2, v3), (v1, v2));
    let lhs = csf(g)?;
    let a = csf(&g.without_edges(&[e1])?.with_edges(&[e3])?)?;
    let b = csf(&g.without_edges(&[e2])?)?;
    let c = csf(&g.without_edges(&[e1, e2])?.with_edges(&[e3])?)?;
    Ok(lhs == &(&a + &b) - &c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle, path, path_with_leaf, tadpole, twin};

    #[test]
    fn triangle_on_c3() {
        let c3 = cycle(3).unwrap();
        assert!(triangle_relation_check(&c3, (1, 2), (2, 3), (3, 1)).unwrap());
    }

    #[test]
    fn triangle_on_k4() {
        let k4 = complete(4).unwrap();
        assert!(triangle_relation_check(&k4, (1, 2), (2, 4), (1, 4)).unwrap());
        assert!(triangle_relation_check(&k4, (3, 4), (2, 3), (2, 4)).unwrap());
    }

    #[test]
    fn triangle_in_twinned_tadpole() {
        // e1 = v4'v5, e2 = v4v5, e3 = v4v4'
        let g = twin(&tadpole(4, 1).unwrap(), 4).unwrap();
        assert!(triangle_relation_check(&g, (6, 5), (4, 5), (4, 6)).unwrap());
    }

    #[test]
    fn not_a_triangle() {
        let g = path(3).unwrap();
        assert!(matches!(triangle_relation_check(&g, (1, 2), (2, 3), (1, 3)), Err(Error::NotATriangle(_))));
        let k4 = complete(4).unwrap();
        assert!(matches!(triangle_relation_check(&k4, (1, 2), (3, 4), (1, 3)), Err(Error::NotATriangle(_))));
        assert!(matches!(triangle_relation_check(&k4, (1, 2), (2, 1), (1, 3)), Err(Error::NotATriangle(_))));
    }

    #[test]
    fn edge_swap_smallest_instance() {
        assert!(edge_swap_relation_check(&path(3).unwrap(), 1, 3, 2).unwrap());
    }

    #[test]
    fn edge_swap_on_tadpole_and_path_with_leaf() {
        for (a, b) in [(4, 1), (5, 2)] {
            let t = tadpole(a, b).unwrap();
            assert!(edge_swap_relation_check(&t, 1, a - 1, a).unwrap());
        }
        // e1 = v_{n-1}v_n, e2 = v_n v_{m+1}
        let (m, n) = (4, 3);
        let g = path_with_leaf(m, n).unwrap();
        assert!(edge_swap_relation_check(&g, n - 1, m + 1, n).unwrap());
    }

    #[test]
    fn edge_swap_preconditions() {
        let c3 = cycle(3).unwrap();
        assert!(matches!(edge_swap_relation_check(&c3, 1, 2, 3), Err(Error::PreconditionViolated(_))));
        let p3 = path(3).unwrap();
        assert!(matches!(edge_swap_relation_check(&p3, 1, 2, 3), Err(Error::PreconditionViolated(_))));
        assert!(matches!(edge_swap_relation_check(&p3, 1, 1, 2), Err(Error::PreconditionViolated(_))));
        assert!(matches!(edge_swap_relation_check(&p3, 1, 3, 9), Err(Error::NoSuchVertex { .. })));
    }
}
