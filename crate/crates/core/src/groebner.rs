//! A desk-scale Buchberger engine over exact rationals.
//!
//! The engine is the independent oracle validating the combinatorial
//! classifiers: radical and ideal-membership witnesses, quadratic-basis
//! checks, and intersections of minimal primes all run through it. Caps turn
//! any blow-up into an explicit `TruncatedAtCaps`/`Inconclusive` status;
//! there are no silent wrong answers.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use num_rational::BigRational;

use crate::poly::{s_polynomial, Monomial, Polynomial, TermOrder, VarIndex};

/// Budget limits for a Buchberger run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineCaps {
    pub max_basis_size: usize,
    pub max_poly_degree: u32,
    pub max_pair_reductions: u64,
}

impl Default for EngineCaps {
    fn default() -> Self {
        EngineCaps {
            max_basis_size: 5000,
            max_poly_degree: 40,
            max_pair_reductions: 2_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisStatus {
    Complete,
    TruncatedAtCaps,
}

/// Result of a Buchberger run. When `status` is `Complete` the generators
/// form the reduced, monic Groebner basis of the input ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub generators: Vec<Polynomial>,
    pub order: TermOrder,
    pub status: BasisStatus,
}

/// Tri-state answer of the membership oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Yes,
    No,
    Inconclusive,
}

/// Divisor lookup for normal forms: basis positions bucketed by the most
/// precedent variable of their leading monomial, each bucket ascending. A
/// leading monomial can only divide a target that contains its first
/// variable, so scanning the buckets of the target's variables finds the
/// first applicable divisor in basis order without a full scan.
#[derive(Default)]
struct DivisorIndex {
    buckets: HashMap<VarIndex, Vec<usize>>,
    /// positions with a constant leading monomial, which divides anything
    constants: Vec<usize>,
}

impl DivisorIndex {
    fn insert(&mut self, idx: usize, lt: &Monomial) {
        match lt.exponents().next() {
            Some((first, _)) => self.buckets.entry(first).or_default().push(idx),
            None => self.constants.push(idx),
        }
    }

    /// Least basis index whose (live) leading monomial divides `m`.
    fn first_divisor(&self, m: &Monomial, lts: &[Monomial], live: &[bool]) -> Option<usize> {
        let mut best: Option<usize> = None;
        for &i in &self.constants {
            if live[i] {
                best = Some(i);
                break;
            }
        }
        for (v, _) in m.exponents() {
            if let Some(bucket) = self.buckets.get(&v) {
                for &i in bucket {
                    if best.is_some_and(|b| i >= b) {
                        break;
                    }
                    if live[i] && lts[i].divides(m) {
                        best = Some(i);
                        break;
                    }
                }
            }
        }
        best
    }
}

fn normal_form_indexed(
    f: &Polynomial,
    basis: &[Polynomial],
    lts: &[Monomial],
    live: &[bool],
    index: &DivisorIndex,
) -> Polynomial {
    let mut remainder: Vec<(Monomial, BigRational)> = Vec::new();
    let mut work = f.clone();
    while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = work.leading_term().expect("nonzero");
            (m.clone(), c.clone())
        };
        match index.first_divisor(&lm, lts, live) {
            Some(k) => {
                let (lb, cb) = basis[k].leading_term().expect("nonzero");
                let q = lm.checked_div(lb).expect("divisible");
                let c = &lc / cb;
                work = &work - &basis[k].mul_term(&q, &c);
            }
            None => {
                // irreducible leading term moves to the remainder
                let lead = Polynomial::from_terms([(lm.clone(), lc.clone())]);
                work = &work - &lead;
                remainder.push((lm, lc));
            }
        }
    }
    Polynomial::from_terms(remainder)
}

/// Remainder of `f` on division by `basis`: no term of the result is
/// divisible by any basis leading monomial, and `f - result` lies in the
/// ideal generated by `basis`. Deterministic: the greatest reducible term is
/// always reduced by the first applicable divisor in basis order. Zero basis
/// elements are skipped; an empty basis returns `f` unchanged.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: TermOrder) -> Polynomial {
    let _ = order;
    let mut lts = Vec::with_capacity(basis.len());
    let mut live = Vec::with_capacity(basis.len());
    let mut index = DivisorIndex::default();
    for (i, b) in basis.iter().enumerate() {
        match b.leading_monomial() {
            Ok(lt) => {
                lts.push(lt.clone());
                live.push(true);
                index.insert(i, lt);
            }
            Err(_) => {
                lts.push(Monomial::one());
                live.push(false);
            }
        }
    }
    normal_form_indexed(f, basis, &lts, &live, &index)
}

/// An S-pair ordered for normal selection: least degree, then least lcm,
/// then position.
#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct SPair {
    degree: u32,
    lcm: Monomial,
    i: usize,
    j: usize,
}

/// Gebauer-Moeller update of the pair set on arrival of basis element `t`.
///
/// New candidate pairs are processed in increasing (degree, lcm) order, so
/// any proper divisor of a candidate's lcm appears earlier: one
/// representative survives per lcm value (coprime representatives
/// preferred, then discarded by the coprime criterion), and a candidate
/// whose lcm is divisible by a kept one is dropped. Old pairs whose lcm the
/// new leading term divides, without matching either companion lcm, are
/// pruned.
fn gm_update(pairs: &mut BinaryHeap<Reverse<SPair>>, lts: &[Monomial], t: usize) {
    struct Cand {
        lcm: Monomial,
        degree: u32,
        i: usize,
        coprime: bool,
    }
    let lt_t = &lts[t];
    let mut cands: Vec<Cand> = (0..t)
        .map(|i| {
            let lcm = lts[i].lcm(lt_t);
            Cand {
                degree: lcm.degree(),
                coprime: lts[i].coprime(lt_t),
                lcm,
                i,
            }
        })
        .collect();
    cands.sort_by(|a, b| {
        a.degree
            .cmp(&b.degree)
            .then_with(|| a.lcm.cmp(&b.lcm))
            .then_with(|| a.i.cmp(&b.i))
    });

    let mut kept: Vec<Cand> = Vec::new();
    'cand: for c in cands {
        if let Some(last) = kept.last_mut() {
            if last.lcm == c.lcm {
                // one representative per lcm value, preferring coprime
                if c.coprime && !last.coprime {
                    *last = c;
                }
                continue;
            }
        }
        for k in &kept {
            if k.lcm.divides(&c.lcm) {
                continue 'cand;
            }
        }
        kept.push(c);
    }

    pairs.retain(|Reverse(p)| {
        !lt_t.divides(&p.lcm) || lts[p.i].lcm(lt_t) == p.lcm || lts[p.j].lcm(lt_t) == p.lcm
    });

    for c in kept {
        if c.coprime {
            continue;
        }
        pairs.push(Reverse(SPair {
            degree: c.degree,
            lcm: c.lcm,
            i: c.i,
            j: t,
        }));
    }
}

/// Buchberger's algorithm with normal (degree-lex on the lcm) pair
/// selection, the coprime criterion, and Gebauer-Moeller pair pruning.
/// Returns the reduced monic basis on completion; on cap overflow the
/// partial basis is returned with status `TruncatedAtCaps` and downstream
/// users must degrade to `Inconclusive`.
pub fn buchberger(gens: &[Polynomial], order: TermOrder, caps: &EngineCaps) -> GroebnerBasis {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut lts: Vec<Monomial> = Vec::new();
    let mut live: Vec<bool> = Vec::new();
    let mut index = DivisorIndex::default();
    let mut pairs: BinaryHeap<Reverse<SPair>> = BinaryHeap::new();

    let push_element = |basis: &mut Vec<Polynomial>,
                        lts: &mut Vec<Monomial>,
                        live: &mut Vec<bool>,
                        index: &mut DivisorIndex,
                        pairs: &mut BinaryHeap<Reverse<SPair>>,
                        monic: Polynomial| {
        let t = basis.len();
        let lt = monic.leading_monomial().expect("nonzero").clone();
        index.insert(t, &lt);
        lts.push(lt);
        live.push(true);
        basis.push(monic);
        gm_update(pairs, lts, t);
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let monic = g.monic().expect("nonzero");
        if basis.contains(&monic) {
            continue;
        }
        push_element(
            &mut basis, &mut lts, &mut live, &mut index, &mut pairs, monic,
        );
    }

    let mut reductions: u64 = 0;
    let mut truncated = false;
    while let Some(Reverse(pair)) = pairs.pop() {
        reductions += 1;
        if reductions > caps.max_pair_reductions {
            truncated = true;
            break;
        }
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], order).expect("nonzero inputs");
        let r = normal_form_indexed(&s, &basis, &lts, &live, &index);
        if r.is_zero() {
            continue;
        }
        if r.total_degree() > caps.max_poly_degree || basis.len() >= caps.max_basis_size {
            truncated = true;
            break;
        }
        let r = r.monic().expect("nonzero");
        push_element(&mut basis, &mut lts, &mut live, &mut index, &mut pairs, r);
    }

    if truncated {
        return GroebnerBasis {
            generators: basis,
            order,
            status: BasisStatus::TruncatedAtCaps,
        };
    }

    GroebnerBasis {
        generators: reduce_basis(basis, order),
        order,
        status: BasisStatus::Complete,
    }
}

/// Minimalizes and inter-reduces a completed basis, yielding the unique
/// reduced monic basis sorted by decreasing leading monomial.
fn reduce_basis(mut basis: Vec<Polynomial>, _order: TermOrder) -> Vec<Polynomial> {
    basis.sort();
    // minimalize: drop any element whose leading monomial is divisible by
    // another kept element's leading monomial
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lg = g.leading_monomial().expect("nonzero").clone();
        if kept
            .iter()
            .any(|h| h.leading_monomial().expect("nonzero").divides(&lg))
        {
            continue;
        }
        kept.push(g);
    }
    // inter-reduce tails until stable; the element under reduction is
    // marked dead so it cannot reduce itself, and its leading monomial is
    // untouched because the basis is minimal
    let lts: Vec<Monomial> = kept
        .iter()
        .map(|g| g.leading_monomial().expect("nonzero").clone())
        .collect();
    let mut live = vec![true; kept.len()];
    let mut index = DivisorIndex::default();
    for (i, lt) in lts.iter().enumerate() {
        index.insert(i, lt);
    }
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            live[i] = false;
            let g = std::mem::replace(&mut kept[i], Polynomial::zero());
            let reduced = normal_form_indexed(&g, &kept, &lts, &live, &index)
                .monic()
                .expect("minimal basis element stays nonzero");
            if reduced != g {
                changed = true;
            }
            kept[i] = reduced;
            live[i] = true;
        }
        if !changed {
            break;
        }
    }
    kept.sort_by(|a, b| {
        b.leading_monomial()
            .expect("nonzero")
            .cmp(a.leading_monomial().expect("nonzero"))
    });
    kept
}

impl GroebnerBasis {
    pub fn is_complete(&self) -> bool {
        self.status == BasisStatus::Complete
    }

    /// True when every element has total degree two.
    pub fn is_quadratic(&self) -> bool {
        self.generators.iter().all(|g| g.total_degree() == 2)
    }

    /// Remainder of `f` modulo this basis.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.generators, self.order)
    }

    /// Membership of `f` in the ideal; `Inconclusive` unless complete.
    pub fn contains(&self, f: &Polynomial) -> Membership {
        if !self.is_complete() {
            return Membership::Inconclusive;
        }
        if self.reduce(f).is_zero() {
            Membership::Yes
        } else {
            Membership::No
        }
    }

    /// Post-hoc completeness self-test: every S-polynomial of basis pairs
    /// with non-coprime leading terms reduces to zero.
    pub fn verify_completeness(&self) -> bool {
        if !self.is_complete() {
            return false;
        }
        for i in 0..self.generators.len() {
            for j in (i + 1)..self.generators.len() {
                let (gi, gj) = (&self.generators[i], &self.generators[j]);
                let (li, lj) = (
                    gi.leading_monomial().expect("nonzero"),
                    gj.leading_monomial().expect("nonzero"),
                );
                if li.coprime(lj) {
                    continue;
                }
                let s = s_polynomial(gi, gj, self.order).expect("nonzero");
                if !self.reduce(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Membership of `f` in the ideal generated by `gens`, via a completed
/// basis; `Inconclusive` when the basis truncates at the caps.
pub fn ideal_member(f: &Polynomial, gens: &[Polynomial], caps: &EngineCaps) -> Membership {
    buchberger(gens, TermOrder::RowMajorLex, caps).contains(f)
}

/// Equality of the ideals generated by `a` and `b`, by mutual membership of
/// generators against completed bases.
pub fn ideal_equal(a: &[Polynomial], b: &[Polynomial], caps: &EngineCaps) -> Membership {
    let gb_a = buchberger(a, TermOrder::RowMajorLex, caps);
    let gb_b = buchberger(b, TermOrder::RowMajorLex, caps);
    if !gb_a.is_complete() || !gb_b.is_complete() {
        return Membership::Inconclusive;
    }
    let mutual =
        b.iter().all(|g| gb_a.reduce(g).is_zero()) && a.iter().all(|g| gb_b.reduce(g).is_zero());
    if mutual {
        Membership::Yes
    } else {
        Membership::No
    }
}

/// Generators of the intersection of the ideals generated by `a` and `b`,
/// by the standard elimination of an auxiliary variable from
/// `t*a + (1-t)*b`; `None` when the elimination basis truncates.
///
/// Inputs must be polynomials in the cell variables only.
pub fn ideal_intersection(
    a: &[Polynomial],
    b: &[Polynomial],
    caps: &EngineCaps,
) -> Option<Vec<Polynomial>> {
    let a: Vec<&Polynomial> = a.iter().filter(|p| !p.is_zero()).collect();
    let b: Vec<&Polynomial> = b.iter().filter(|p| !p.is_zero()).collect();
    if a.is_empty() || b.is_empty() {
        return Some(Vec::new());
    }
    let t = Polynomial::var(VarIndex::Aux(0));
    let one_minus_t = &Polynomial::one() - &t;
    let mut gens: Vec<Polynomial> = Vec::new();
    for f in &a {
        gens.push(&t * f);
    }
    for g in &b {
        gens.push(&one_minus_t * g);
    }
    let gb = buchberger(&gens, TermOrder::EliminateAuxThenRowMajorLex, caps);
    if !gb.is_complete() {
        return None;
    }
    Some(
        gb.generators
            .iter()
            .filter(|p| !p.contains_aux())
            .cloned()
            .collect(),
    )
}
