//! Binomial edge ideals of pairs of graphs.
//!
//! Given two labeled simple graphs `G1` on `[m]` and `G2` on `[n]`, the pair
//! ideal lives in the polynomial ring on an `m x n` matrix of indeterminates
//! and is generated by one 2-minor `[i,j|k,l] = x[i,k]*x[j,l] - x[i,l]*x[j,k]`
//! per pair of edges `{i,j}` of `G1` and `{k,l}` of `G2`. This crate builds
//! those ideals and computes, by combinatorial characterizations
//! cross-checked against an exact Buchberger oracle:
//!
//! * primality, radicality, and quadratic-basis existence under the fixed
//!   row-major lexicographic order;
//! * the full set of minimal primes via admissible sets, with a fast path
//!   when the row graph is the path on three vertices;
//! * unmixedness, and depth/Cohen-Macaulayness in the closed case;
//! * lower bounds for the nilpotency index, with oracle-checkable witnesses.
//!
//! All coefficient arithmetic is over exact rationals; every enumeration and
//! basis computation is capped, and caps surface as explicit
//! `Overflow`/`Inconclusive` results.

pub mod classify;
pub mod error;
pub mod graph;
pub mod groebner;
pub mod ideal;
pub mod minprimes;
pub mod poly;

pub use classify::{
    adjacent_minors_bound, best_nilpotency_bound, build_report, closed_case_analysis,
    has_quadratic_gb_pair, is_prime_pair, is_radical_pair, is_unmixed, nilpotency_lower_bound,
    unmixed_complete_cycle, witness_product, witness_product_membership, Capped, ClosedCaseReport,
    NilpotencyWitness, PairReport, ReportCaps, TriBool,
};
pub use error::{Error, Result};
pub use graph::{FacetInterval, Graph, VertexSubset};
pub use groebner::{
    buchberger, ideal_equal, ideal_intersection, ideal_member, normal_form, BasisStatus,
    EngineCaps, GroebnerBasis, Membership,
};
pub use ideal::{
    all_2minors_block, double_line_witness, minor2, pair_ideal_generators, GraphPair, MinorSpec,
};
pub use minprimes::{
    box_complement_components, enumerate_admissible, hosten_shapiro_sets, is_admissible,
    minimal_primes_3xn, minimal_primes_generic, prime_of_admissible, prime_strictly_contains,
    special_primes_from_cutsets, AdmissibleSet, Cell, ComponentBlock, CutBundle, Enumeration,
    MinimalPrimes, PrimeComponent,
};
pub use poly::{compare_monomials, s_polynomial, Monomial, Polynomial, TermOrder, VarIndex};
