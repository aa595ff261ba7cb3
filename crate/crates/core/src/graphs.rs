//! Labeled simple graphs, the named families, and the twin / clan operations.
//!
//! Vertices are labeled `1..=d` in the public API. The label order is part
//! of the value: noncommutative computations read vertices in this order.

use std::fmt;

use crate::error::{Error, Result};

/// Graphs are stored as adjacency bitmasks.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<u64>,
    /// Edges in insertion order, `(u, v)` as given (1-based).
    edges: Vec<(usize, usize)>,
    names: Vec<Option<String>>,
}

/// Two graphs are equal when they have the same labeled edge set; names and
/// edge insertion order are presentation only.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// `d` isolated vertices.
    pub fn empty(d: usize) -> Result<Self> {
        if d > MAX_ORDER {
            return Err(Error::BadParameter(format!("{d} vertices exceeds MAX_ORDER = {MAX_ORDER}")));
        }
        Ok(Graph { adj: vec![0; d], edges: Vec::new(), names: vec![None; d] })
    }

    pub fn from_edges(d: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(d)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn check(&self, v: usize) -> Result<usize> {
        if v == 0 || v > self.order() {
            Err(Error::NoSuchVertex { vertex: v, order: self.order() })
        } else {
            Ok(v - 1)
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && v >= 1 && u <= self.order() && v <= self.order() && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    /// Adds the edge `uv`; loops and repeated edges are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let (a, b) = (self.check(u)?, self.check(v)?);
        if a == b {
            return Err(Error::BadParameter(format!("loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::BadParameter(format!("duplicate edge {u}-{v}")));
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        self.edges.push((u, v));
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let (a, b) = (self.check(u)?, self.check(v)?);
        if !self.has_edge(u, v) {
            return Err(Error::PreconditionViolated(format!("edge {u}-{v} is not present")));
        }
        self.adj[a] &= !(1 << b);
        self.adj[b] &= !(1 << a);
        self.edges.retain(|&(x, y)| !((x, y) == (u, v) || (x, y) == (v, u)));
        Ok(())
    }

    pub fn without_edges(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.remove_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_edges(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn sorted_edges(&self) -> Vec<(usize, usize)> {
        let mut es: Vec<_> = self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        es.sort_unstable();
        es
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.order()).filter(|&u| self.has_edge(v, u)).collect()
    }

    /// Neighborhood of the 0-based vertex `i` as a bitmask over 0-based vertices.
    pub fn neighbor_mask(&self, i: usize) -> u64 {
        self.adj[i]
    }

    pub fn name(&self, v: usize) -> Option<&str> {
        self.names.get(v.wrapping_sub(1)).and_then(|n| n.as_deref())
    }

    pub fn set_name(&mut self, v: usize, name: impl Into<String>) -> Result<()> {
        let i = self.check(v)?;
        self.names[i] = Some(name.into());
        Ok(())
    }

    /// Looks a vertex up by its name tag.
    pub fn vertex_named(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n.as_deref() == Some(name)).map(|i| i + 1)
    }

    fn with_names(mut self, names: &[&str]) -> Self {
        for (i, n) in names.iter().enumerate() {
            self.names[i] = Some((*n).to_string());
        }
        self
    }

    fn with_default_names(mut self) -> Self {
        for i in 0..self.order() {
            self.names[i] = Some(format!("v{}", i + 1));
        }
        self
    }

    /// Removes vertex `v`, shifting later labels down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        let gone = self.check(v)?;
        let shift = |u: usize| if u > v { u - 1 } else { u };
        let mut g = Graph::empty(self.order() - 1)?;
        for &(a, b) in &self.edges {
            if a != v && b != v {
                g.add_edge(shift(a), shift(b))?;
            }
        }
        let mut names = self.names.clone();
        names.remove(gone);
        g.names = names;
        Ok(g)
    }

    /// The graph whose vertex `perm[i - 1]` plays the role of old vertex `i`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let d = self.order();
        let mut seen = vec![false; d];
        if perm.len() != d || perm.iter().any(|&p| p == 0 || p > d || std::mem::replace(&mut seen[p - 1], true)) {
            return Err(Error::BadParameter(format!("{perm:?} is not a permutation of 1..={d}")));
        }
        let mut g = Graph::empty(d)?;
        for &(u, v) in &self.edges {
            g.add_edge(perm[u - 1], perm[v - 1])?;
        }
        for (i, n) in self.names.iter().enumerate() {
            g.names[perm[i] - 1] = n.clone();
        }
        Ok(g)
    }

    /// Closed neighborhood of `v` as a bitmask (0-based bits).
    pub fn closed_neighborhood(&self, v: usize) -> u64 {
        self.adj[v - 1] | 1 << (v - 1)
    }

    /// Parses the text graph format: `#` comments, a `p <d>` header, then
    /// `e <u> <v>` lines with 1-based labels.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut graph: Option<Graph> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let err = |message: String| Error::Parse { line: i + 1, message };
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match (fields.as_slice(), graph.as_mut()) {
                (["p", d], None) => {
                    let d: usize = d.parse().map_err(|_| err(format!("bad vertex count `{d}`")))?;
                    graph = Some(Graph::empty(d).map_err(|e| err(e.to_string()))?);
                }
                (["p", ..], _) => return Err(err("misplaced or malformed `p` line".into())),
                (["e", u, v], Some(g)) => {
                    let u: usize = u.parse().map_err(|_| err(format!("bad vertex `{u}`")))?;
                    let v: usize = v.parse().map_err(|_| err(format!("bad vertex `{v}`")))?;
                    g.add_edge(u, v).map_err(|e| err(e.to_string()))?;
                }
                (["e", ..], None) => return Err(err("edge before `p` line".into())),
                _ => return Err(err(format!("unrecognised line `{line}`"))),
            }
        }
        graph.ok_or(Error::Parse { line: 0, message: "missing `p <d>` line".into() })
    }

    /// Writes the text graph format; edges keep insertion order.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("p {}\n", self.order());
        for &(u, v) in &self.edges {
            out.push_str(&format!("e {u} {v}\n"));
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_file_string())
    }
}

/// `P_n` on `1 - 2 - ... - n`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("path needs at least one vertex".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Ok(Graph::from_edges(n, &edges)?.with_default_names())
}

/// `C_n` on `1 - 2 - ... - n - 1`. `cycle(2)` is the single edge `K_2`,
/// matching the convention `X_{C_2} = 2e_2`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::BadParameter(format!("cycle needs at least 2 vertices, got {n}")));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    if n > 2 {
        edges.push((n, 1));
    }
    Ok(Graph::from_edges(n, &edges)?.with_default_names())
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 1..=n {
        for v in u + 1..=n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g.with_default_names())
}

/// `T^{⟨a,b⟩}`: cycle on `1..=a`, tail `a+1..=a+b` hanging from `a`.
pub fn tadpole(a: usize, b: usize) -> Result<Graph> {
    if a < 3 || b < 1 {
        return Err(Error::BadParameter(format!("tadpole needs a >= 3 and b >= 1, got ({a}, {b})")));
    }
    let mut edges: Vec<_> = (1..a).map(|i| (i, i + 1)).collect();
    edges.push((a, 1));
    edges.extend((a..a + b).map(|i| (i, i + 1)));
    Ok(Graph::from_edges(a + b, &edges)?.with_default_names())
}

/// `P_{m,n}`: the path `1..=m` with leaf `m + 1` attached to vertex `n`.
pub fn path_with_leaf(m: usize, n: usize) -> Result<Graph> {
    if n < 1 || n > m {
        return Err(Error::BadParameter(format!("path_with_leaf needs 1 <= n <= m, got ({m}, {n})")));
    }
    let mut edges: Vec<_> = (1..m).map(|i| (i, i + 1)).collect();
    edges.push((n, m + 1));
    Ok(Graph::from_edges(m + 1, &edges)?.with_default_names())
}

/// The fork: path `u - v - w` with leaves `x`, `y` on `w`, labeled 1..=5 in that order.
pub fn fork() -> Graph {
    Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (3, 5)])
        .expect("static graph")
        .with_names(&["u", "v", "w", "x", "y"])
}

/// Triangle `1 2 3` with a pendant on each corner (`4-1`, `5-2`, `6-3`).
pub fn net() -> Graph {
    Graph::from_edges(6, &[(1, 2), (2, 3), (3, 1), (1, 4), (2, 5), (3, 6)])
        .expect("static graph")
        .with_default_names()
}

/// `K_{1,3}` with leaves `1, 2, 3` and center `4`.
pub fn claw() -> Graph {
    Graph::from_edges(4, &[(1, 4), (2, 4), (3, 4)])
        .expect("static graph")
        .with_default_names()
}

/// Triangle `1 2 3` with pendants `4-1` and `5-2`.
pub fn bull() -> Graph {
    Graph::from_edges(5, &[(1, 2), (2, 3), (3, 1), (1, 4), (2, 5)])
        .expect("static graph")
        .with_default_names()
}

/// The 5-vertex cycle part of the twinned tadpole: the 4-cycle `1 2 3 4`
/// plus `5` (the twin of `4`) joined to `1`, `3` and `4`.
pub fn s_graph() -> Graph {
    Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 1), (4, 5), (1, 5), (3, 5)])
        .expect("static graph")
        .with_names(&["v1", "v2", "v3", "v4", "v4'"])
}

/// Adds a vertex `v'` (labeled last) adjacent to `v` and to every neighbor of `v`.
pub fn twin(g: &Graph, v: usize) -> Result<Graph> {
    g.check(v)?;
    let d = g.order();
    let mut out = g.clone();
    out.adj.push(0);
    out.names.push(g.name(v).map(|n| format!("{n}'")));
    if out.order() > MAX_ORDER {
        return Err(Error::BadParameter(format!("twin would exceed MAX_ORDER = {MAX_ORDER}")));
    }
    out.add_edge(v, d + 1)?;
    for u in g.neighbors(v) {
        out.add_edge(u, d + 1)?;
    }
    Ok(out)
}

/// `G_v^{(k)}`: replaces `v` by a `(k + 1)`-clique, new copies labeled last.
pub fn clan(g: &Graph, v: usize, k: usize) -> Result<Graph> {
    g.check(v)?;
    let mut out = g.clone();
    for _ in 0..k {
        out = twin(&out, v)?;
    }
    Ok(out)
}

/// `G ⊎ H` with the labels of `H` shifted past those of `G`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let d = g.order();
    let mut out = Graph::empty(d + h.order())?;
    for &(u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for &(u, v) in h.edges() {
        out.add_edge(u + d, v + d)?;
    }
    out.names = g.names.iter().chain(h.names.iter()).cloned().collect();
    Ok(out)
}

/// True iff some vertex subset of `g` induces a copy of `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    let mut order: Vec<usize> = (0..h.order()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(h.adj[i].count_ones()));
    let mut image = vec![usize::MAX; h.order()];
    embed(g, h, &order, 0, &mut image, 0)
}

fn embed(g: &Graph, h: &Graph, order: &[usize], depth: usize, image: &mut [usize], used: u64) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    let need = h.adj[x].count_ones();
    for cand in 0..g.order() {
        if used >> cand & 1 == 1 || g.adj[cand].count_ones() < need {
            continue;
        }
        let consistent = order[..depth].iter().all(|&y| {
            let hy = h.adj[x] >> y & 1 == 1;
            let gy = g.adj[cand] >> image[y] & 1 == 1;
            hy == gy
        });
        if consistent {
            image[x] = cand;
            if embed(g, h, order, depth + 1, image, used | 1 << cand) {
                return true;
            }
        }
    }
    false
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let degrees = |x: &Graph| {
        let mut ds: Vec<u32> = x.adj.iter().map(|m| m.count_ones()).collect();
        ds.sort_unstable();
        ds
    };
    degrees(g) == degrees(h) && contains_induced(g, h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tadpole_shape() {
        let t = tadpole(4, 1).unwrap();
        assert_eq!((t.order(), t.edge_count()), (5, 5));
        let mut ds: Vec<usize> = (1..=5).map(|v| t.degree(v)).collect();
        ds.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(ds, [3, 2, 2, 2, 1]);
        assert!(tadpole(2, 1).is_err());
        assert!(tadpole(3, 0).is_err());
    }

    #[test]
    fn fork_twin_and_clan() {
        let f = fork();
        let w = f.vertex_named("w").unwrap();
        let f1 = twin(&f, w).unwrap();
        // Edges read off the drawing of F_w^(1): u-v, v-w, v-w', w-x, w-y, w'-x, w'-y, w-w'.
        assert_eq!((f1.order(), f1.edge_count()), (6, 8));
        assert_eq!(f1.name(6), Some("w'"));
        let f2 = clan(&f, w, 2).unwrap();
        assert_eq!((f2.order(), f2.edge_count()), (7, 13));
        for a in [3, 6, 7] {
            for b in [3, 6, 7] {
                assert_eq!(f2.has_edge(a, b), a != b);
            }
            for u in [2, 4, 5] {
                assert!(f2.has_edge(a, u));
            }
            assert!(!f2.has_edge(a, 1));
        }
        assert_eq!(clan(&f, w, 0).unwrap(), f);
        assert_eq!(clan(&f, w, 1).unwrap(), f1);
    }

    #[test]
    fn twin_of_single_vertex_is_edge() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(twin(&k1, 1).unwrap(), complete(2).unwrap());
        assert_eq!(twin(&k1, 2), Err(Error::NoSuchVertex { vertex: 2, order: 1 }));
    }

    #[test]
    fn twinned_tadpole_matches_drawing() {
        // v4' is vertex b + 5; it copies v4's neighbors v1, v3, v5.
        let b = 2;
        let g = twin(&tadpole(4, b).unwrap(), 4).unwrap();
        let expect = Graph::from_edges(
            7,
            &[(1, 2), (2, 3), (3, 4), (4, 1), (4, 5), (5, 6), (4, 7), (1, 7), (3, 7), (5, 7)],
        )
        .unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn disjoint_union_counts() {
        let two = disjoint_union(&path(1).unwrap(), &path(1).unwrap()).unwrap();
        assert_eq!((two.order(), two.edge_count()), (2, 0));
        let g = disjoint_union(&path(3).unwrap(), &s_graph()).unwrap();
        assert_eq!((g.order(), g.edge_count()), (8, 9));
        assert!(g.has_edge(4, 5) && g.has_edge(8, 4) && !g.has_edge(3, 4));
    }

    #[test]
    fn induced_subgraph_examples() {
        assert!(!contains_induced(&net(), &claw()));
        assert!(contains_induced(&claw(), &claw()));
        assert!(contains_induced(&tadpole(4, 2).unwrap(), &claw()));
        assert!(contains_induced(&bull(), &path(4).unwrap()));
        assert!(!contains_induced(&complete(4).unwrap(), &path(3).unwrap()));
    }

    #[test]
    fn isomorphism() {
        let c = cycle(5).unwrap();
        let r = c.relabel(&[3, 5, 2, 1, 4]).unwrap();
        assert_ne!(c, r);
        assert!(is_isomorphic(&c, &r));
        assert!(!is_isomorphic(&c, &path(5).unwrap()));
    }

    #[test]
    fn cycle_two_is_an_edge() {
        assert_eq!(cycle(2).unwrap(), complete(2).unwrap());
        assert!(cycle(1).is_err());
        assert_eq!(cycle(4).unwrap().edge_count(), 4);
    }

    #[test]
    fn file_format() {
        let text = "# a comment\np 3\ne 2 3\ne 1 2\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g, path(3).unwrap());
        assert_eq!(g.to_file_string(), "p 3\ne 2 3\ne 1 2\n");
        assert!(matches!(Graph::parse("p 3\ne 1 2\ne 2 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(Graph::parse("p 3\ne 1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse("p 3\ne 1 4\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse("e 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(Graph::parse("# nothing\n").is_err());
        assert!(Graph::parse("p 2\nx 1 2\n").is_err());
    }

    #[test]
    fn delete_vertex_shifts_labels() {
        let g = path(4).unwrap().delete_vertex(2).unwrap();
        assert_eq!(g.sorted_edges(), vec![(2, 3)]);
    }
}
