//! Generating sets: the pair-ideal generators, full 2-minor ideals on
//! blocks, and the cubic radical witnesses.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset};
use crate::poly::{Monomial, Polynomial, VarIndex};

/// A pair of graphs indexing the rows and columns of the variable matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphPair {
    pub g1: Graph,
    pub g2: Graph,
}

impl GraphPair {
    pub fn new(g1: Graph, g2: Graph) -> Self {
        GraphPair { g1, g2 }
    }

    /// Number of rows of the variable matrix.
    pub fn rows(&self) -> u32 {
        self.g1.vertex_count()
    }

    /// Number of columns of the variable matrix.
    pub fn cols(&self) -> u32 {
        self.g2.vertex_count()
    }

    /// The pair with the roles of the two graphs exchanged.
    pub fn swapped(&self) -> GraphPair {
        GraphPair {
            g1: self.g2.clone(),
            g2: self.g1.clone(),
        }
    }
}

/// Row and column indices of a 2-minor `[i,j|k,l]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorSpec {
    rows: (u32, u32),
    cols: (u32, u32),
}

impl MinorSpec {
    pub fn new(rows: (u32, u32), cols: (u32, u32)) -> Result<Self> {
        if rows.0 >= rows.1 || cols.0 >= cols.1 {
            return Err(Error::InvalidMinor);
        }
        Ok(MinorSpec { rows, cols })
    }

    pub fn rows(&self) -> (u32, u32) {
        self.rows
    }

    pub fn cols(&self) -> (u32, u32) {
        self.cols
    }
}

/// The 2-minor `[i,j|k,l] = x[i,k]*x[j,l] - x[i,l]*x[j,k]`.
pub fn minor2(spec: MinorSpec) -> Polynomial {
    let (i, j) = spec.rows;
    let (k, l) = spec.cols;
    let pos = Monomial::from_pairs([(VarIndex::cell(i, k), 1), (VarIndex::cell(j, l), 1)]);
    let neg = Monomial::from_pairs([(VarIndex::cell(i, l), 1), (VarIndex::cell(j, k), 1)]);
    Polynomial::from_terms([
        (pos, BigRational::from_integer(1.into())),
        (neg, BigRational::from_integer((-1).into())),
    ])
}

/// One generator per pair of edges `(e, f)` of the two graphs, in
/// lexicographic order on `(e, f)`.
pub fn pair_ideal_generators(pair: &GraphPair) -> Vec<Polynomial> {
    let mut gens = Vec::with_capacity(pair.g1.edge_count() * pair.g2.edge_count());
    for e in pair.g1.edges() {
        for f in pair.g2.edges() {
            gens.push(minor2(
                MinorSpec::new(e, f).expect("edges are increasing pairs"),
            ));
        }
    }
    gens
}

/// All 2-minors supported on the given row and column sets; empty when
/// either side is a singleton.
pub fn all_2minors_block(rows: &VertexSubset, cols: &VertexSubset) -> Vec<Polynomial> {
    let (r, c) = (rows.members(), cols.members());
    let mut gens = Vec::new();
    for (a, &i) in r.iter().enumerate() {
        for &j in &r[a + 1..] {
            for (b, &k) in c.iter().enumerate() {
                for &l in &c[b + 1..] {
                    gens.push(minor2(MinorSpec::new((i, j), (k, l)).expect("increasing")));
                }
            }
        }
    }
    gens
}

/// The cubic binomial attached to a pair of induced paths
/// `i - j - k` in the first graph and `r - s - t` in the second:
/// `x[i,t]*x[j,r]*x[k,s] - x[i,r]*x[j,s]*x[k,t]`.
///
/// It witnesses non-radicality: the binomial lies outside the pair ideal
/// while its square lies inside.
pub fn double_line_witness(
    pair: &GraphPair,
    (i, j, k): (u32, u32, u32),
    (r, s, t): (u32, u32, u32),
) -> Result<Polynomial> {
    let path_in = |g: &Graph, (a, b, c): (u32, u32, u32)| -> bool {
        a != c && g.has_edge(a, b) && g.has_edge(b, c) && !g.has_edge(a, c)
    };
    if !path_in(&pair.g1, (i, j, k)) {
        return Err(Error::NotInducedPath(i, j, k));
    }
    if !path_in(&pair.g2, (r, s, t)) {
        return Err(Error::NotInducedPath(r, s, t));
    }
    let cell = VarIndex::cell;
    let pos = Monomial::from_pairs([(cell(i, t), 1), (cell(j, r), 1), (cell(k, s), 1)]);
    let neg = Monomial::from_pairs([(cell(i, r), 1), (cell(j, s), 1), (cell(k, t), 1)]);
    Ok(Polynomial::from_terms([
        (pos, BigRational::from_integer(1.into())),
        (neg, BigRational::from_integer((-1).into())),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{ideal_member, EngineCaps, Membership};

    #[test]
    fn minor_sign_and_leading_term() {
        let p = minor2(MinorSpec::new((1, 2), (1, 2)).unwrap());
        assert_eq!(p.to_string(), "x[1,1]*x[2,2] - x[1,2]*x[2,1]");
        let q = minor2(MinorSpec::new((2, 5), (3, 7)).unwrap());
        let lead = q.leading_monomial().unwrap();
        let expect = Monomial::from_pairs([(VarIndex::cell(2, 3), 1), (VarIndex::cell(5, 7), 1)]);
        assert_eq!(*lead, expect);
        assert!(MinorSpec::new((2, 2), (1, 2)).is_err());
        assert!(MinorSpec::new((1, 2), (3, 2)).is_err());
    }

    #[test]
    fn generator_counts() {
        let k2k2 = GraphPair::new(Graph::complete(2), Graph::complete(2));
        assert_eq!(pair_ideal_generators(&k2k2).len(), 1);

        let p3p3 = GraphPair::new(Graph::path(3), Graph::path(3));
        let gens = pair_ideal_generators(&p3p3);
        assert_eq!(gens.len(), 4);
        for g in &gens {
            assert_eq!(g.total_degree(), 2);
            assert_eq!(g.term_count(), 2);
        }

        let fig = Graph::new(5, [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)]).unwrap();
        let pair = GraphPair::new(Graph::complete(3), fig);
        assert_eq!(pair_ideal_generators(&pair).len(), 15);
    }

    #[test]
    fn block_minor_counts() {
        let rows = VertexSubset::new(3, [1, 2]).unwrap();
        let cols = VertexSubset::new(3, [1, 2]).unwrap();
        assert_eq!(
            all_2minors_block(&rows, &cols),
            vec![minor2(MinorSpec::new((1, 2), (1, 2)).unwrap())]
        );
        let rows = VertexSubset::full(3);
        let cols = VertexSubset::full(3);
        assert_eq!(all_2minors_block(&rows, &cols).len(), 9);
        let single = VertexSubset::new(3, [2]).unwrap();
        assert!(all_2minors_block(&single, &cols).is_empty());
    }

    #[test]
    fn complete_pair_equals_full_minor_ideal() {
        for (m, n) in [(2, 2), (2, 3), (3, 3)] {
            let pair = GraphPair::new(Graph::complete(m), Graph::complete(n));
            let mut a = pair_ideal_generators(&pair);
            let mut b = all_2minors_block(&VertexSubset::full(m), &VertexSubset::full(n));
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn witness_construction() {
        let p3p3 = GraphPair::new(Graph::path(3), Graph::path(3));
        let f = double_line_witness(&p3p3, (1, 2, 3), (1, 2, 3)).unwrap();
        assert_eq!(
            f.to_string(),
            "-x[1,1]*x[2,2]*x[3,3] + x[1,3]*x[2,1]*x[3,2]"
        );
        let k3 = GraphPair::new(Graph::complete(3), Graph::path(3));
        assert_eq!(
            double_line_witness(&k3, (1, 2, 3), (1, 2, 3)).unwrap_err(),
            Error::NotInducedPath(1, 2, 3)
        );
    }

    #[test]
    fn witness_square_in_small_subideal() {
        let p3p3 = GraphPair::new(Graph::path(3), Graph::path(3));
        let f = double_line_witness(&p3p3, (1, 2, 3), (1, 2, 3)).unwrap();
        let gens = pair_ideal_generators(&p3p3);
        let caps = EngineCaps::default();
        assert_eq!(ideal_member(&f, &gens, &caps), Membership::No);
        assert_eq!(ideal_member(&(&f * &f), &gens, &caps), Membership::Yes);
    }
}
