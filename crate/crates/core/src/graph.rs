//! Labeled simple graphs and the combinatorial predicates consumed by the
//! classifiers.
//!
//! Vertices are 1-based integer labels and the labeling is meaningful:
//! closedness and the term order depend on it, so no canonicalization is ever
//! applied.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A finite simple graph on the vertex set `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u32,
    edges: BTreeSet<(u32, u32)>,
}

/// A subset of the vertices of a graph on `{1, ..., parent_size}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSubset {
    parent_size: u32,
    members: Vec<u32>,
}

/// A facet of a clique complex that happens to be an interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FacetInterval {
    pub lo: u32,
    pub hi: u32,
}

impl VertexSubset {
    pub fn new<I: IntoIterator<Item = u32>>(parent_size: u32, members: I) -> Result<Self> {
        let set: BTreeSet<u32> = members.into_iter().collect();
        for &v in &set {
            if v == 0 || v > parent_size {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    max: parent_size,
                });
            }
        }
        Ok(VertexSubset {
            parent_size,
            members: set.into_iter().collect(),
        })
    }

    pub fn empty(parent_size: u32) -> Self {
        VertexSubset {
            parent_size,
            members: Vec::new(),
        }
    }

    pub fn full(parent_size: u32) -> Self {
        VertexSubset {
            parent_size,
            members: (1..=parent_size).collect(),
        }
    }

    pub fn parent_size(&self) -> u32 {
        self.parent_size
    }

    /// Members in increasing order.
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn complement(&self) -> VertexSubset {
        VertexSubset {
            parent_size: self.parent_size,
            members: (1..=self.parent_size)
                .filter(|v| !self.contains(*v))
                .collect(),
        }
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Graph {
    /// Builds a graph, validating that every edge is a non-loop pair of
    /// in-range vertices and appears at most once.
    pub fn new<I: IntoIterator<Item = (u32, u32)>>(n: u32, edges: I) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, max: n });
                }
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Graph { n, edges: set })
    }

    /// The complete graph on `[n]`.
    pub fn complete(n: u32) -> Self {
        assert!(n >= 1, "graph needs at least one vertex");
        let mut edges = BTreeSet::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                edges.insert((u, v));
            }
        }
        Graph { n, edges }
    }

    /// The path 1 - 2 - ... - n.
    pub fn path(n: u32) -> Self {
        assert!(n >= 1, "graph needs at least one vertex");
        Graph {
            n,
            edges: (1..n).map(|u| (u, u + 1)).collect(),
        }
    }

    /// The cycle 1 - 2 - ... - n - 1; requires `n >= 3`.
    pub fn cycle(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::OutOfRange(format!("cycle needs n >= 3, got {n}")));
        }
        let mut edges: BTreeSet<(u32, u32)> = (1..n).map(|u| (u, u + 1)).collect();
        edges.insert((1, n));
        Ok(Graph { n, edges })
    }

    /// The star with center 1 and leaves 2..=n.
    pub fn star(n: u32) -> Self {
        assert!(n >= 1, "graph needs at least one vertex");
        Graph {
            n,
            edges: (2..=n).map(|v| (1, v)).collect(),
        }
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        (1..=self.n).filter(move |&u| self.has_edge(u, v))
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        1..=self.n
    }

    /// Connected components of the subgraph induced on the vertices *not* in
    /// `removed`, reported in original labels, each sorted, ordered by
    /// minimum element.
    fn components_avoiding(&self, removed: &[u32]) -> Vec<Vec<u32>> {
        let is_removed = |v: u32| -> bool { removed.binary_search(&v).is_ok() };
        let mut seen = vec![false; self.n as usize + 1];
        let mut parts = Vec::new();
        for start in 1..=self.n {
            if seen[start as usize] || is_removed(start) {
                continue;
            }
            let mut queue = vec![start];
            let mut part = Vec::new();
            seen[start as usize] = true;
            while let Some(v) = queue.pop() {
                part.push(v);
                for u in self.neighbors(v) {
                    if !seen[u as usize] && !is_removed(u) {
                        seen[u as usize] = true;
                        queue.push(u);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }

    /// Connected components, as a partition of the vertex set ordered by
    /// minimum element.
    pub fn connected_components(&self) -> Vec<VertexSubset> {
        self.components_avoiding(&[])
            .into_iter()
            .map(|part| VertexSubset {
                parent_size: self.n,
                members: part,
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components_avoiding(&[]).len() <= 1
    }

    /// The subgraph induced on `keep`, with vertices relabeled `1..=|keep|`
    /// preserving order. Returns the new graph together with the label map
    /// back to the parent (`map[new - 1] = old`).
    pub fn induced_subgraph(&self, keep: &VertexSubset) -> Result<(Graph, Vec<u32>)> {
        for &v in keep.members() {
            if v == 0 || v > self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    max: self.n,
                });
            }
        }
        let map: Vec<u32> = keep.members().to_vec();
        let index_of =
            |old: u32| -> u32 { (map.binary_search(&old).expect("kept vertex") + 1) as u32 };
        let edges: BTreeSet<(u32, u32)> = self
            .edges
            .iter()
            .filter(|(u, v)| keep.contains(*u) && keep.contains(*v))
            .map(|&(u, v)| (index_of(u), index_of(v)))
            .collect();
        Ok((
            Graph {
                n: map.len() as u32,
                edges,
            },
            map,
        ))
    }

    /// True when every pair of vertices is joined by an edge.
    pub fn is_complete(&self) -> bool {
        self.edges.len() as u64 == u64::from(self.n) * u64::from(self.n - 1) / 2
    }

    /// Closedness of the graph under its given labeling: for all edges
    /// `{i,j}` and `{k,l}` with `i<j` and `k<l`, `i=k` forces the edge
    /// `{j,l}` and `j=l` forces the edge `{i,k}`.
    pub fn is_closed_labeled(&self) -> bool {
        for &(i, j) in &self.edges {
            for &(k, l) in &self.edges {
                if (i, j) == (k, l) {
                    continue;
                }
                if i == k && !self.has_edge(j, l) {
                    return false;
                }
                if j == l && !self.has_edge(i, k) {
                    return false;
                }
            }
        }
        true
    }

    /// All maximal cliques (facets of the clique complex), each sorted,
    /// ordered by minimum element.
    pub fn clique_complex_facets(&self) -> Vec<VertexSubset> {
        let mut facets: Vec<Vec<u32>> = Vec::new();
        let r = Vec::new();
        let p: Vec<u32> = (1..=self.n).collect();
        let x = Vec::new();
        self.bron_kerbosch(r, p, x, &mut facets);
        facets.sort_unstable();
        facets
            .into_iter()
            .map(|members| VertexSubset {
                parent_size: self.n,
                members,
            })
            .collect()
    }

    fn bron_kerbosch(
        &self,
        r: Vec<u32>,
        mut p: Vec<u32>,
        mut x: Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if p.is_empty() && x.is_empty() {
            let mut clique = r;
            clique.sort_unstable();
            out.push(clique);
            return;
        }
        // pivot on the vertex of P union X with the most neighbors in P
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| self.has_edge(u, v)).count())
            .expect("nonempty P or X");
        let candidates: Vec<u32> = p
            .iter()
            .copied()
            .filter(|&v| !self.has_edge(pivot, v))
            .collect();
        for v in candidates {
            let mut r2 = r.clone();
            r2.push(v);
            let p2 = p.iter().copied().filter(|&u| self.has_edge(u, v)).collect();
            let x2 = x.iter().copied().filter(|&u| self.has_edge(u, v)).collect();
            self.bron_kerbosch(r2, p2, x2, out);
            p.retain(|&u| u != v);
            x.push(v);
        }
    }

    /// When every facet of the clique complex is an interval `[a, b]` under
    /// the given labeling, returns the facets ordered by minimum; `None`
    /// otherwise. Requires a connected graph.
    pub fn closed_interval_facets(&self) -> Result<Option<Vec<FacetInterval>>> {
        if !self.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        let mut intervals = Vec::new();
        for facet in self.clique_complex_facets() {
            let members = facet.members();
            let (lo, hi) = (members[0], members[members.len() - 1]);
            if (hi - lo + 1) as usize != members.len() {
                return Ok(None);
            }
            intervals.push(FacetInterval { lo, hi });
        }
        Ok(Some(intervals))
    }

    /// Connected components of the subgraph induced on the complement of
    /// `removed`, in original vertex labels, ordered by minimum element.
    pub fn components_after_removal(&self, removed: &VertexSubset) -> Vec<VertexSubset> {
        self.components_avoiding(removed.members())
            .into_iter()
            .map(|part| VertexSubset {
                parent_size: self.n,
                members: part,
            })
            .collect()
    }

    /// Number of connected components of the subgraph induced on the
    /// complement of `t`; 0 when `t` exhausts the vertices.
    pub fn component_count_after_removal(&self, t: &VertexSubset) -> usize {
        self.components_avoiding(t.members()).len()
    }

    /// All vertex sets with the cut point property: every `i` in `S` is a
    /// cut point of the graph induced on the complement of `S` extended by
    /// `i`. Includes the empty set vacuously; results in shortlex order.
    /// Requires a connected graph.
    pub fn cut_point_property_sets(&self) -> Result<Vec<VertexSubset>> {
        if !self.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        if self.n > 24 {
            return Err(Error::OutOfRange(format!(
                "cut point enumeration supports n <= 24, got {}",
                self.n
            )));
        }
        // component counts for every removal mask, indexed by bitmask
        let size = 1usize << self.n;
        let mut counts = vec![0u32; size];
        let mut removed = Vec::with_capacity(self.n as usize);
        for (mask, slot) in counts.iter_mut().enumerate() {
            removed.clear();
            removed.extend((0..self.n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1));
            *slot = self.components_avoiding(&removed).len() as u32;
        }
        let mut out = Vec::new();
        'mask: for mask in 0..size {
            for b in 0..self.n {
                if mask >> b & 1 == 1 && counts[mask & !(1 << b)] >= counts[mask] {
                    continue 'mask;
                }
            }
            out.push(VertexSubset {
                parent_size: self.n,
                members: (0..self.n)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| b + 1)
                    .collect(),
            });
        }
        out.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then_with(|| a.members.cmp(&b.members))
        });
        Ok(out)
    }

    /// The lexicographically least triple `(i, j, k)` with `{i,j}` and
    /// `{j,k}` edges and `{i,k}` a non-edge, if any.
    pub fn find_induced_path3(&self) -> Option<(u32, u32, u32)> {
        for i in 1..=self.n {
            for j in 1..=self.n {
                if !self.has_edge(i, j) {
                    continue;
                }
                for k in 1..=self.n {
                    if k != i && self.has_edge(j, k) && !self.has_edge(i, k) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Parses the graph file format: optional comment lines starting with
    /// `#`, a header line `n <count>`, then one edge `u v` per line.
    pub fn from_text(input: &str) -> Result<Graph> {
        let mut n: Option<u32> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in input.lines().enumerate() {
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match n {
                None => {
                    if fields.len() != 2 || fields[0] != "n" {
                        return Err(Error::GraphFormat(format!(
                            "line {}: expected header 'n <count>'",
                            lineno + 1
                        )));
                    }
                    let count: u32 = fields[1].parse().map_err(|_| {
                        Error::GraphFormat(format!("line {}: bad vertex count", lineno + 1))
                    })?;
                    if count == 0 {
                        return Err(Error::GraphFormat(format!(
                            "line {}: vertex count must be positive",
                            lineno + 1
                        )));
                    }
                    n = Some(count);
                }
                Some(_) => {
                    if fields.len() != 2 {
                        return Err(Error::GraphFormat(format!(
                            "line {}: expected an edge 'u v'",
                            lineno + 1
                        )));
                    }
                    let parse = |s: &str| -> Result<u32> {
                        s.parse().map_err(|_| {
                            Error::GraphFormat(format!("line {}: bad vertex label", lineno + 1))
                        })
                    };
                    edges.push((parse(fields[0])?, parse(fields[1])?));
                }
            }
        }
        match n {
            Some(n) => Graph::new(n, edges),
            None => Err(Error::GraphFormat("missing header 'n <count>'".into())),
        }
    }
}
