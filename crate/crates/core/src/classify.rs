//! Theorem-level classifiers for a pair ideal: primality, radicality,
//! quadratic basis existence, unmixedness, the closed-case depth formula,
//! and nilpotency-index lower bounds.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset};
use crate::groebner::{ideal_member, EngineCaps, Membership};
use crate::ideal::{double_line_witness, minor2, GraphPair, MinorSpec};
use crate::minprimes::{minimal_primes_generic, MinimalPrimes};
use crate::poly::Polynomial;

/// A boolean that may degrade to `Undetermined` when a cap fires.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriBool {
    True,
    False,
    Undetermined,
}

impl From<bool> for TriBool {
    fn from(b: bool) -> Self {
        if b {
            TriBool::True
        } else {
            TriBool::False
        }
    }
}

/// A value that may be lost to an enumeration overflow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Capped<T> {
    Value(T),
    Overflow,
}

/// Caps consulted by `build_report`.
#[derive(Debug, Clone)]
pub struct ReportCaps {
    pub engine: EngineCaps,
    pub enumeration_cap: usize,
    pub nilpotency_budget: u64,
}

impl Default for ReportCaps {
    fn default() -> Self {
        ReportCaps {
            engine: EngineCaps::default(),
            enumeration_cap: 1_000_000,
            nilpotency_budget: 1 << 16,
        }
    }
}

/// The aggregate report on a pair ideal. Fields that require connected
/// inputs are `None` when a graph is disconnected; fields that require
/// enumeration degrade to `Overflow`/`Undetermined` instead of failing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReport {
    pub is_prime: Option<bool>,
    pub is_radical: bool,
    pub quadratic_gb: bool,
    pub unmixed: TriBool,
    pub minimal_prime_count: Option<Capped<u64>>,
    pub height_spectrum: Option<Capped<Vec<u64>>>,
    pub depth: Option<i64>,
    pub cohen_macaulay: Option<bool>,
    pub nilpotency_lower_bound: u64,
}

/// Witness data for a nilpotency lower bound: deletion sets, one induced
/// path per qualifying component on each side, and the bound `r*s + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotencyWitness {
    pub deletion1: VertexSubset,
    pub deletion2: VertexSubset,
    pub triples1: Vec<(u32, u32, u32)>,
    pub triples2: Vec<(u32, u32, u32)>,
    pub bound: u64,
}

/// Outcome of the closed-case analysis when the column graph has interval
/// facets; depth and Cohen-Macaulayness are only defined in the unmixed
/// case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedCaseReport {
    pub unmixed: bool,
    pub depth: Option<i64>,
    pub cohen_macaulay: Option<bool>,
}

/// The pair ideal is prime exactly when both graphs are complete. Requires
/// connected inputs.
pub fn is_prime_pair(pair: &GraphPair) -> Result<bool> {
    if !pair.g1.is_connected() || !pair.g2.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(pair.g1.is_complete() && pair.g2.is_complete())
}

/// The pair ideal is radical exactly when one of the graphs is complete.
pub fn is_radical_pair(pair: &GraphPair) -> bool {
    pair.g1.is_complete() || pair.g2.is_complete()
}

/// The pair ideal has a quadratic basis under the fixed order exactly when
/// one graph is complete and the other is closed under its labeling.
pub fn has_quadratic_gb_pair(pair: &GraphPair) -> bool {
    (pair.g1.is_complete() && pair.g2.is_closed_labeled())
        || (pair.g2.is_complete() && pair.g1.is_closed_labeled())
}

/// Unmixedness of the pair ideal. With both sides on at least three
/// vertices (after orienting the smaller side first) the numerical
/// criterion applies: the smaller graph must be complete and every cut
/// point property set `T` of the other must satisfy
/// `(c(T) - 1)(m - 1) = |T|`. Smaller sides fall back to height-spectrum
/// constancy of the enumerated minimal primes, degrading to `Undetermined`
/// on overflow.
pub fn is_unmixed(pair: &GraphPair, cap: usize) -> Result<TriBool> {
    if !pair.g1.is_connected() || !pair.g2.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let (small, large) = if pair.rows() <= pair.cols() {
        (&pair.g1, &pair.g2)
    } else {
        (&pair.g2, &pair.g1)
    };
    let m = u64::from(small.vertex_count());
    if m >= 3 {
        if !small.is_complete() {
            return Ok(TriBool::False);
        }
        for t in large.cut_point_property_sets()? {
            let c = large.component_count_after_removal(&t) as u64;
            if (c - 1) * (m - 1) != t.len() as u64 {
                return Ok(TriBool::False);
            }
        }
        return Ok(TriBool::True);
    }
    match minimal_primes_generic(pair, cap)? {
        MinimalPrimes::Overflow => Ok(TriBool::Undetermined),
        MinimalPrimes::Complete(primes) => {
            let constant = primes.windows(2).all(|w| w[0].height() == w[1].height());
            Ok(constant.into())
        }
    }
}

/// The complete-times-cycle unmixedness table: holds exactly for
/// `(m, n)` in `{(3,3), (3,4), (3,5)}`. Requires `n >= m >= 3`.
pub fn unmixed_complete_cycle(m: u32, n: u32) -> Result<bool> {
    if !(3 <= m && m <= n) {
        return Err(Error::OutOfRange(format!(
            "complete-times-cycle table needs n >= m >= 3, got ({m},{n})"
        )));
    }
    Ok(matches!((m, n), (3, 3) | (3, 4) | (3, 5)))
}

/// Analysis of the pair of a complete graph on `m` rows with a connected
/// closed column graph. `None` when the facets are not intervals under the
/// given labeling. Unmixedness holds when consecutive interval facets
/// overlap by exactly `m - 1` vertices; in that case
/// `depth = n - (r-2)m + 2r - 3` and the quotient is Cohen-Macaulay exactly
/// when the column graph is complete.
pub fn closed_case_analysis(m: u32, g2: &Graph) -> Result<Option<ClosedCaseReport>> {
    let n = g2.vertex_count();
    if !(3 <= m && m <= n) {
        return Err(Error::OutOfRange(format!(
            "closed case needs n >= m >= 3, got ({m},{n})"
        )));
    }
    let facets = match g2.closed_interval_facets()? {
        None => return Ok(None),
        Some(facets) => facets,
    };
    let r = facets.len() as i64;
    let unmixed = facets.windows(2).all(|w| {
        w[0].lo < w[1].lo && w[1].lo < w[0].hi && w[0].hi < w[1].hi && w[0].hi - w[1].lo == m - 2
    });
    let (depth, cm) = if unmixed {
        let depth = i64::from(n) - (r - 2) * i64::from(m) + 2 * r - 3;
        (Some(depth), Some(r == 1))
    } else {
        (None, None)
    };
    Ok(Some(ClosedCaseReport {
        unmixed,
        depth,
        cohen_macaulay: cm,
    }))
}

/// Lexicographically least induced path on three vertices drawn from
/// `members` (a connected induced piece of `g`), if any.
fn induced_path3_within(g: &Graph, members: &[u32]) -> Option<(u32, u32, u32)> {
    for &i in members {
        for &j in members {
            if !g.has_edge(i, j) {
                continue;
            }
            for &k in members {
                if k != i && g.has_edge(j, k) && !g.has_edge(i, k) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// One induced path per component of `g` minus `deletion` that has one, in
/// component order.
fn qualifying_triples(g: &Graph, deletion: &VertexSubset) -> Vec<(u32, u32, u32)> {
    g.components_after_removal(deletion)
        .iter()
        .filter_map(|comp| induced_path3_within(g, comp.members()))
        .collect()
}

/// The nilpotency lower bound `r*s + 1` obtained from explicit deletion
/// sets: `r` and `s` count the components of each vertex-deleted graph that
/// contain an induced path on three vertices.
pub fn nilpotency_lower_bound(
    pair: &GraphPair,
    deletion1: &VertexSubset,
    deletion2: &VertexSubset,
) -> NilpotencyWitness {
    let triples1 = qualifying_triples(&pair.g1, deletion1);
    let triples2 = qualifying_triples(&pair.g2, deletion2);
    let bound = (triples1.len() * triples2.len() + 1) as u64;
    NilpotencyWitness {
        deletion1: deletion1.clone(),
        deletion2: deletion2.clone(),
        triples1,
        triples2,
        bound,
    }
}

/// Best deletion set for one side: maximizes the number of components with
/// an induced path. Exhaustive for up to 16 vertices, otherwise a greedy
/// search seeded with the four-periodic deletion patterns; ties go to the
/// lexicographically least set.
fn best_deletion(g: &Graph, budget: u64) -> VertexSubset {
    let n = g.vertex_count();
    let score = |members: &[u32]| -> usize {
        let del = VertexSubset::new(n, members.iter().copied()).expect("in range");
        qualifying_triples(g, &del).len()
    };
    let mut best: Vec<u32> = Vec::new();
    let mut best_score = score(&[]);
    let consider = |members: Vec<u32>, best: &mut Vec<u32>, best_score: &mut usize| {
        let s = score(&members);
        if s > *best_score || (s == *best_score && members < *best) {
            *best = members;
            *best_score = s;
        }
    };
    if n <= 16 {
        let limit = 1u64 << n;
        for mask in 1..limit.min(budget.max(1)) {
            let members: Vec<u32> = (0..n)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| b + 1)
                .collect();
            consider(members, &mut best, &mut best_score);
        }
    } else {
        let mut evals = 0u64;
        for offset in 1..=4u32 {
            let members: Vec<u32> = (offset..=n).step_by(4).collect();
            consider(members, &mut best, &mut best_score);
            evals += 1;
        }
        // greedy single-vertex toggles, first improvement wins
        loop {
            let mut improved = false;
            for v in 1..=n {
                if evals >= budget {
                    break;
                }
                let mut candidate = best.clone();
                match candidate.binary_search(&v) {
                    Ok(i) => {
                        candidate.remove(i);
                    }
                    Err(i) => candidate.insert(i, v),
                }
                evals += 1;
                if score(&candidate) > best_score {
                    best_score = score(&candidate);
                    best = candidate;
                    improved = true;
                }
            }
            if !improved || evals >= budget {
                break;
            }
        }
    }
    VertexSubset::new(n, best).expect("in range")
}

/// Maximizes the deletion-set bound `r*s + 1`. The two sides are
/// independent, so each side is searched separately within the budget.
pub fn best_nilpotency_bound(pair: &GraphPair, budget: u64) -> NilpotencyWitness {
    let d1 = best_deletion(&pair.g1, budget);
    let d2 = best_deletion(&pair.g2, budget);
    nilpotency_lower_bound(pair, &d1, &d2)
}

/// The product of the cubic witnesses over all pairs of recorded triples;
/// the constant 1 when either side has none.
pub fn witness_product(pair: &GraphPair, witness: &NilpotencyWitness) -> Result<Polynomial> {
    let mut f = Polynomial::one();
    for &t1 in &witness.triples1 {
        for &t2 in &witness.triples2 {
            f = &f * &double_line_witness(pair, t1, t2)?;
        }
    }
    Ok(f)
}

/// Membership of the witness product in the pair ideal, decided through the
/// deletion substitution.
///
/// Sending every variable in a deleted row or column to zero fixes the
/// product (its support avoids them) and sends the pair ideal onto the
/// subideal generated by the minors whose edges avoid the deletions. That
/// subideal splits into blocks with pairwise disjoint supports, so the
/// oracle stays at desk scale even when the full ideal is out of reach.
/// `No` certifies the product is outside the pair ideal; `Yes` certifies
/// membership, since the surviving generators are among the original ones.
pub fn witness_product_membership(
    pair: &GraphPair,
    witness: &NilpotencyWitness,
    caps: &EngineCaps,
) -> Result<Membership> {
    let f = witness_product(pair, witness)?;
    let mut gens = Vec::new();
    for e in pair.g1.edges() {
        if witness.deletion1.contains(e.0) || witness.deletion1.contains(e.1) {
            continue;
        }
        for g in pair.g2.edges() {
            if witness.deletion2.contains(g.0) || witness.deletion2.contains(g.1) {
                continue;
            }
            gens.push(minor2(MinorSpec::new(e, g).expect("edges are increasing")));
        }
    }
    Ok(ideal_member(&f, &gens, caps))
}

/// The adjacent-minor specialization of the deletion bound: with
/// `m = 4k + p` and `n = 4l + q`, the bound is
/// `(k + floor(p/3)) * (l + floor(q/3)) + 1`.
pub fn adjacent_minors_bound(m: u32, n: u32) -> u64 {
    let (k, p) = (u64::from(m / 4), u64::from(m % 4));
    let (l, q) = (u64::from(n / 4), u64::from(n % 4));
    (k + p / 3) * (l + q / 3) + 1
}

/// Aggregates every classifier into one report.
pub fn build_report(pair: &GraphPair, caps: &ReportCaps) -> PairReport {
    let connected = pair.g1.is_connected() && pair.g2.is_connected();
    let is_prime = connected.then(|| pair.g1.is_complete() && pair.g2.is_complete());
    let is_radical = is_radical_pair(pair);
    let quadratic_gb = has_quadratic_gb_pair(pair);

    let (minimal_prime_count, height_spectrum) = if connected {
        match minimal_primes_generic(pair, caps.enumeration_cap) {
            Ok(MinimalPrimes::Complete(primes)) => {
                let mut spectrum: Vec<u64> = primes.iter().map(|p| p.height()).collect();
                spectrum.sort_unstable();
                (
                    Some(Capped::Value(primes.len() as u64)),
                    Some(Capped::Value(spectrum)),
                )
            }
            Ok(MinimalPrimes::Overflow) | Err(_) => {
                (Some(Capped::Overflow), Some(Capped::Overflow))
            }
        }
    } else {
        (None, None)
    };

    let unmixed = if connected {
        is_unmixed(pair, caps.enumeration_cap).unwrap_or(TriBool::Undetermined)
    } else {
        TriBool::Undetermined
    };

    let mut depth = None;
    let mut cohen_macaulay = None;
    for oriented in [pair.clone(), pair.swapped()] {
        let (a, b) = (&oriented.g1, &oriented.g2);
        let (m, n) = (a.vertex_count(), b.vertex_count());
        if !(3 <= m && m <= n && a.is_complete() && b.is_connected()) {
            continue;
        }
        if let Ok(Some(report)) = closed_case_analysis(m, b) {
            if report.unmixed {
                depth = report.depth;
                cohen_macaulay = report.cohen_macaulay;
                break;
            }
        }
    }

    let nilpotency_lower_bound = best_nilpotency_bound(pair, caps.nilpotency_budget).bound;

    PairReport {
        is_prime,
        is_radical,
        quadratic_gb,
        unmixed,
        minimal_prime_count,
        height_spectrum,
        depth,
        cohen_macaulay,
        nilpotency_lower_bound,
    }
}

impl Serialize for TriBool {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            TriBool::True => serializer.serialize_bool(true),
            TriBool::False => serializer.serialize_bool(false),
            TriBool::Undetermined => serializer.serialize_str("undetermined"),
        }
    }
}

impl<T: Serialize> Serialize for Capped<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Capped::Value(v) => v.serialize(serializer),
            Capped::Overflow => serializer.serialize_str("overflow"),
        }
    }
}

/// `depth` and `cohen_macaulay` write `"not_applicable"` when absent; the
/// connectivity-gated fields write `null`.
impl Serialize for PairReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PairReport", 9)?;
        s.serialize_field("is_prime", &self.is_prime)?;
        s.serialize_field("is_radical", &self.is_radical)?;
        s.serialize_field("quadratic_gb", &self.quadratic_gb)?;
        s.serialize_field("unmixed", &self.unmixed)?;
        s.serialize_field("minimal_prime_count", &self.minimal_prime_count)?;
        s.serialize_field("height_spectrum", &self.height_spectrum)?;
        match self.depth {
            Some(d) => s.serialize_field("depth", &d)?,
            None => s.serialize_field("depth", "not_applicable")?,
        }
        match self.cohen_macaulay {
            Some(cm) => s.serialize_field("cohen_macaulay", &cm)?,
            None => s.serialize_field("cohen_macaulay", "not_applicable")?,
        }
        s.serialize_field("nilpotency_lower_bound", &self.nilpotency_lower_bound)?;
        s.end()
    }
}

impl Serialize for NilpotencyWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let triples = |ts: &[(u32, u32, u32)]| -> Vec<[u32; 3]> {
            ts.iter().map(|&(a, b, c)| [a, b, c]).collect()
        };
        let mut s = serializer.serialize_struct("NilpotencyWitness", 5)?;
        s.serialize_field("deletion1", self.deletion1.members())?;
        s.serialize_field("deletion2", self.deletion2.members())?;
        s.serialize_field("triples1", &triples(&self.triples1))?;
        s.serialize_field("triples2", &triples(&self.triples2))?;
        s.serialize_field("bound", &self.bound)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(g1: Graph, g2: Graph) -> GraphPair {
        GraphPair::new(g1, g2)
    }

    fn figure_graph() -> Graph {
        Graph::new(5, [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn primality() {
        assert!(is_prime_pair(&pair(Graph::complete(3), Graph::complete(4))).unwrap());
        assert!(!is_prime_pair(&pair(Graph::path(3), Graph::complete(3))).unwrap());
        assert!(is_prime_pair(&pair(Graph::complete(2), Graph::complete(2))).unwrap());
        let split = Graph::new(3, [(1, 2)]).unwrap();
        assert_eq!(
            is_prime_pair(&pair(split, Graph::complete(2))).unwrap_err(),
            Error::DisconnectedGraph
        );
    }

    #[test]
    fn radicality() {
        assert!(is_radical_pair(&pair(
            Graph::complete(3),
            Graph::cycle(4).unwrap()
        )));
        assert!(!is_radical_pair(&pair(Graph::path(3), Graph::path(3))));
        assert!(is_radical_pair(&pair(Graph::complete(2), Graph::star(4))));
    }

    #[test]
    fn quadratic_basis_classification() {
        assert!(has_quadratic_gb_pair(&pair(
            Graph::complete(3),
            Graph::path(3)
        )));
        assert!(!has_quadratic_gb_pair(&pair(
            Graph::complete(3),
            Graph::star(3)
        )));
        assert!(!has_quadratic_gb_pair(&pair(
            Graph::path(3),
            Graph::path(3)
        )));
        // vice versa orientation
        assert!(has_quadratic_gb_pair(&pair(
            Graph::path(3),
            Graph::complete(3)
        )));
    }

    #[test]
    fn unmixedness_examples() {
        let cap = 1_000_000;
        assert_eq!(
            is_unmixed(&pair(Graph::complete(3), Graph::cycle(4).unwrap()), cap).unwrap(),
            TriBool::True
        );
        assert_eq!(
            is_unmixed(&pair(Graph::complete(3), Graph::path(3)), cap).unwrap(),
            TriBool::False
        );
        assert_eq!(
            is_unmixed(&pair(Graph::complete(4), Graph::cycle(4).unwrap()), cap).unwrap(),
            TriBool::False
        );
        // orientation swap: larger complete side second
        assert_eq!(
            is_unmixed(&pair(Graph::cycle(4).unwrap(), Graph::complete(3)), cap).unwrap(),
            TriBool::True
        );
        // small side falls back to the height spectrum
        assert_eq!(
            is_unmixed(&pair(Graph::complete(2), Graph::complete(2)), cap).unwrap(),
            TriBool::True
        );
        // the single-edge pair recovers the classical edge ideal: the path
        // gives a complete intersection, the star has mixed heights
        assert_eq!(
            is_unmixed(&pair(Graph::complete(2), Graph::path(3)), cap).unwrap(),
            TriBool::True
        );
        assert_eq!(
            is_unmixed(&pair(Graph::complete(2), Graph::star(4)), cap).unwrap(),
            TriBool::False
        );
    }

    #[test]
    fn complete_cycle_table() {
        assert!(unmixed_complete_cycle(3, 4).unwrap());
        assert!(!unmixed_complete_cycle(3, 6).unwrap());
        assert!(unmixed_complete_cycle(2, 4).is_err());
        for m in 3..=6 {
            for n in m..=6 {
                let table = unmixed_complete_cycle(m, n).unwrap();
                let direct = is_unmixed(
                    &pair(Graph::complete(m), Graph::cycle(n).unwrap()),
                    1_000_000,
                )
                .unwrap();
                assert_eq!(TriBool::from(table), direct, "K_{m} x C_{n}");
            }
        }
    }

    #[test]
    fn closed_case_formulas() {
        // complete column graph: one facet, depth m + n - 1, Cohen-Macaulay
        for n in 3..=6 {
            let report = closed_case_analysis(3, &Graph::complete(n))
                .unwrap()
                .unwrap();
            assert!(report.unmixed);
            assert_eq!(report.depth, Some(i64::from(n) + 2));
            assert_eq!(report.cohen_macaulay, Some(true));
        }
        // two facets overlapping in one vertex: not unmixed for m = 3
        let chain = Graph::new(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap();
        let report = closed_case_analysis(3, &chain).unwrap().unwrap();
        assert!(!report.unmixed);
        assert_eq!(report.depth, None);
        // facets [1,3],[2,4]: unmixed with depth 5, not Cohen-Macaulay
        let staircase = Graph::new(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        let report = closed_case_analysis(3, &staircase).unwrap().unwrap();
        assert!(report.unmixed);
        assert_eq!(report.depth, Some(5));
        assert_eq!(report.cohen_macaulay, Some(false));
        // a non-closed labeling is out of reach of the analysis
        assert_eq!(
            closed_case_analysis(3, &Graph::cycle(4).unwrap()).unwrap(),
            None
        );
        assert!(closed_case_analysis(2, &Graph::complete(3)).is_err());
    }

    #[test]
    fn nilpotency_bounds_from_deletions() {
        let complete = pair(Graph::complete(4), Graph::complete(5));
        let w = nilpotency_lower_bound(
            &complete,
            &VertexSubset::new(4, [2]).unwrap(),
            &VertexSubset::empty(5),
        );
        assert_eq!(w.bound, 1);
        assert!(w.triples1.is_empty());

        let p3p3 = pair(Graph::path(3), Graph::path(3));
        let w = nilpotency_lower_bound(&p3p3, &VertexSubset::empty(3), &VertexSubset::empty(3));
        assert_eq!(w.bound, 2);
        assert_eq!(w.triples1, vec![(1, 2, 3)]);

        let lines = pair(Graph::path(7), Graph::path(7));
        let del = VertexSubset::new(7, [4]).unwrap();
        let w = nilpotency_lower_bound(&lines, &del, &del);
        assert_eq!(w.bound, 5);
        assert_eq!(w.triples1, vec![(1, 2, 3), (5, 6, 7)]);
        assert_eq!(w.triples2, vec![(1, 2, 3), (5, 6, 7)]);
    }

    #[test]
    fn witness_products_stay_outside_the_ideal() {
        let caps = EngineCaps::default();
        // empty deletions recover the direct membership check
        let p3p3 = pair(Graph::path(3), Graph::path(3));
        let w = nilpotency_lower_bound(&p3p3, &VertexSubset::empty(3), &VertexSubset::empty(3));
        let f = witness_product(&p3p3, &w).unwrap();
        assert_eq!(f.total_degree(), 3);
        assert_eq!(
            witness_product_membership(&p3p3, &w, &caps).unwrap(),
            Membership::No
        );

        let lines = pair(Graph::path(7), Graph::path(7));
        let del = VertexSubset::new(7, [4]).unwrap();
        let w = nilpotency_lower_bound(&lines, &del, &del);
        let f = witness_product(&lines, &w).unwrap();
        assert_eq!(f.total_degree(), 12);
        assert_eq!(
            witness_product_membership(&lines, &w, &caps).unwrap(),
            Membership::No
        );
    }

    #[test]
    fn best_bounds() {
        let p3p3 = pair(Graph::path(3), Graph::path(3));
        assert_eq!(best_nilpotency_bound(&p3p3, 1 << 16).bound, 2);

        let lines = pair(Graph::path(7), Graph::path(7));
        let w = best_nilpotency_bound(&lines, 1 << 16);
        assert!(w.bound >= 5);
        assert_eq!(w.deletion1.members(), &[4]);

        // the four-periodic deletion pattern on a pair of lines on twelve
        // vertices reaches three qualifying components per side
        let long = pair(Graph::path(12), Graph::path(12));
        assert!(best_nilpotency_bound(&long, 1 << 16).bound >= 10);

        let k_side = pair(Graph::complete(4), Graph::path(9));
        assert_eq!(best_nilpotency_bound(&k_side, 1 << 16).bound, 1);
    }

    #[test]
    fn adjacent_minor_bound_values() {
        assert_eq!(adjacent_minors_bound(12, 12), 10);
        assert_eq!(adjacent_minors_bound(3, 3), 2);
        assert_eq!(adjacent_minors_bound(7, 7), 5);
        assert_eq!(adjacent_minors_bound(4, 4), 2);
        // the general formula stays at or below the known better bound for
        // 3 x 3k boards
        for k in 2..=4 {
            assert!(adjacent_minors_bound(3, 3 * k) <= u64::from(k) + 1);
        }
    }

    #[test]
    fn report_for_complete_pair() {
        let report = build_report(
            &pair(Graph::complete(3), Graph::complete(3)),
            &ReportCaps::default(),
        );
        assert_eq!(report.is_prime, Some(true));
        assert!(report.is_radical);
        assert!(report.quadratic_gb);
        assert_eq!(report.unmixed, TriBool::True);
        assert_eq!(report.minimal_prime_count, Some(Capped::Value(1)));
        assert_eq!(report.height_spectrum, Some(Capped::Value(vec![4])));
        assert_eq!(report.depth, Some(5));
        assert_eq!(report.cohen_macaulay, Some(true));
        assert_eq!(report.nilpotency_lower_bound, 1);
    }

    #[test]
    fn report_for_figure_pair() {
        let report = build_report(
            &pair(Graph::path(3), figure_graph()),
            &ReportCaps::default(),
        );
        assert_eq!(report.is_prime, Some(false));
        assert!(!report.is_radical);
        assert_eq!(report.minimal_prime_count, Some(Capped::Value(7)));
        assert_eq!(report.depth, None);
        assert!(report.nilpotency_lower_bound >= 2);
    }

    #[test]
    fn report_implications() {
        let caps = ReportCaps::default();
        for g1 in [Graph::complete(3), Graph::path(3), Graph::star(3)] {
            for g2 in [Graph::complete(3), Graph::path(4), Graph::cycle(4).unwrap()] {
                let report = build_report(&pair(g1.clone(), g2), &caps);
                if report.is_prime == Some(true) {
                    assert!(report.is_radical);
                }
                if report.quadratic_gb {
                    assert!(report.is_radical);
                }
                if report.unmixed == TriBool::True {
                    assert!(report.is_radical);
                }
            }
        }
    }

    #[test]
    fn report_json_shape() {
        let report = build_report(
            &pair(Graph::complete(3), Graph::complete(3)),
            &ReportCaps::default(),
        );
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            "{\"is_prime\":true,\"is_radical\":true,\"quadratic_gb\":true,\
             \"unmixed\":true,\"minimal_prime_count\":1,\"height_spectrum\":[4],\
             \"depth\":5,\"cohen_macaulay\":true,\"nilpotency_lower_bound\":1}"
        );
        let split = Graph::new(3, [(1, 2)]).unwrap();
        let report = build_report(&pair(split, Graph::complete(2)), &ReportCaps::default());
        assert_eq!(report.is_prime, None);
        assert_eq!(report.unmixed, TriBool::Undetermined);
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["is_prime"], serde_json::Value::Null);
        assert_eq!(json["unmixed"], "undetermined");
        assert_eq!(json["depth"], "not_applicable");
    }
}
