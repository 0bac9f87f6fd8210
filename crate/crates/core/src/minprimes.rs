//! Admissible sets, their box-complement decomposition, and the minimal
//! prime components they define.
//!
//! A subset `W` of the variable matrix is admissible when every box `e x f`
//! spanned by an edge `e` of the first graph and an edge `f` of the second
//! that meets `W` contains a whole edge of the box inside `W`. Each
//! admissible set carries a prime ideal: the variables indexed by `W` plus
//! all 2-minors on the completed blocks of the box complement. Minimal
//! primes of the pair ideal are exactly the minimal elements among these.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSubset};
use crate::ideal::{all_2minors_block, GraphPair};
use crate::poly::{Polynomial, VarIndex};

/// A 1-based position in the variable matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }
}

/// An admissible set of cells over a graph pair. Construction validates
/// admissibility, so a value of this type always satisfies the definition.
#[derive(Debug, Clone)]
pub struct AdmissibleSet {
    pair: Arc<GraphPair>,
    cells: BTreeSet<Cell>,
}

impl PartialEq for AdmissibleSet {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
            && (Arc::ptr_eq(&self.pair, &other.pair) || self.pair == other.pair)
    }
}

impl Eq for AdmissibleSet {}

/// One completed block of the box-complement decomposition: all 2-minors on
/// `rows x cols` enter the prime.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ComponentBlock {
    pub rows: Vec<u32>,
    pub cols: Vec<u32>,
}

/// The prime ideal attached to an admissible set, with its height computed
/// by the additive formula `|W| + sum (|rows|-1)(|cols|-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeComponent {
    witness: AdmissibleSet,
    blocks: Vec<ComponentBlock>,
    height: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Enumeration {
    Complete(Vec<AdmissibleSet>),
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalPrimes {
    Complete(Vec<PrimeComponent>),
    Overflow,
}

/// A box `e x f` with its four edges, kept as bitmasks over the cells.
struct BoxInfo {
    mask: u128,
    /// row edge through e.0, row edge through e.1, column edge through f.0,
    /// column edge through f.1
    edges: [u128; 4],
    e: (u32, u32),
    f: (u32, u32),
}

fn cell_index(cols: u32, cell: Cell) -> u32 {
    (cell.row - 1) * cols + (cell.col - 1)
}

fn cell_bit(cols: u32, cell: Cell) -> u128 {
    1u128 << cell_index(cols, cell)
}

fn cells_of_mask(cols: u32, mask: u128) -> BTreeSet<Cell> {
    let mut cells = BTreeSet::new();
    let mut rest = mask;
    while rest != 0 {
        let idx = rest.trailing_zeros();
        cells.insert(Cell::new(idx / cols + 1, idx % cols + 1));
        rest &= rest - 1;
    }
    cells
}

fn mask_of_cells(cols: u32, cells: &BTreeSet<Cell>) -> u128 {
    cells.iter().map(|&c| cell_bit(cols, c)).sum()
}

fn boxes_of(pair: &GraphPair) -> Vec<BoxInfo> {
    let n = pair.cols();
    let mut boxes = Vec::with_capacity(pair.g1.edge_count() * pair.g2.edge_count());
    for (i, j) in pair.g1.edges() {
        for (k, l) in pair.g2.edges() {
            let b = |r, c| cell_bit(n, Cell::new(r, c));
            let edges = [
                b(i, k) | b(i, l),
                b(j, k) | b(j, l),
                b(i, k) | b(j, k),
                b(i, l) | b(j, l),
            ];
            boxes.push(BoxInfo {
                mask: edges[0] | edges[1],
                edges,
                e: (i, j),
                f: (k, l),
            });
        }
    }
    boxes
}

fn box_absorbed(b: &BoxInfo, mask: u128) -> bool {
    b.edges.iter().any(|&e| e & !mask == 0)
}

/// The defining property, checked box by box: every box meeting the cells
/// contains one of its edges. Cells outside the matrix make the answer
/// `false`.
pub fn is_admissible(cells: &BTreeSet<Cell>, pair: &GraphPair) -> bool {
    let (m, n) = (pair.rows(), pair.cols());
    if cells
        .iter()
        .any(|c| c.row == 0 || c.row > m || c.col == 0 || c.col > n)
    {
        return false;
    }
    let mask = mask_of_cells(n, cells);
    boxes_of(pair)
        .iter()
        .all(|b| mask & b.mask == 0 || box_absorbed(b, mask))
}

impl AdmissibleSet {
    /// Validates membership ranges and admissibility.
    pub fn new(pair: impl Into<Arc<GraphPair>>, cells: BTreeSet<Cell>) -> Result<Self> {
        let pair = pair.into();
        let (m, n) = (pair.rows(), pair.cols());
        for c in &cells {
            if c.row == 0 || c.row > m {
                return Err(Error::VertexOutOfRange {
                    vertex: c.row,
                    max: m,
                });
            }
            if c.col == 0 || c.col > n {
                return Err(Error::VertexOutOfRange {
                    vertex: c.col,
                    max: n,
                });
            }
        }
        if !is_admissible(&cells, &pair) {
            return Err(Error::NotAdmissible);
        }
        Ok(AdmissibleSet { pair, cells })
    }

    pub fn empty(pair: impl Into<Arc<GraphPair>>) -> Self {
        AdmissibleSet {
            pair: pair.into(),
            cells: BTreeSet::new(),
        }
    }

    pub fn pair(&self) -> &GraphPair {
        &self.pair
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    fn mask(&self) -> u128 {
        mask_of_cells(self.pair.cols(), &self.cells)
    }
}

fn require_connected(pair: &GraphPair) -> Result<()> {
    if !pair.g1.is_connected() || !pair.g2.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(())
}

/// Connected components of the box complement of `w`, each reported as the
/// product of its covered row and column vertex sets. Boxes are adjacent
/// when they share a cell. Requires both graphs connected.
pub fn box_complement_components(w: &AdmissibleSet) -> Result<Vec<ComponentBlock>> {
    require_connected(w.pair())?;
    let boxes = boxes_of(w.pair());
    let mask = w.mask();
    let free: Vec<&BoxInfo> = boxes.iter().filter(|b| b.mask & mask == 0).collect();
    let mut seen = vec![false; free.len()];
    let mut blocks = Vec::new();
    for start in 0..free.len() {
        if seen[start] {
            continue;
        }
        let mut queue = vec![start];
        seen[start] = true;
        let mut rows_edges: BTreeSet<(u32, u32)> = BTreeSet::new();
        let mut cols_edges: BTreeSet<(u32, u32)> = BTreeSet::new();
        let mut members = 0usize;
        while let Some(i) = queue.pop() {
            members += 1;
            rows_edges.insert(free[i].e);
            cols_edges.insert(free[i].f);
            for (j, other) in free.iter().enumerate() {
                if seen[j] {
                    continue;
                }
                let share_row = free[i].e.0 == other.e.0
                    || free[i].e.0 == other.e.1
                    || free[i].e.1 == other.e.0
                    || free[i].e.1 == other.e.1;
                let share_col = free[i].f.0 == other.f.0
                    || free[i].f.0 == other.f.1
                    || free[i].f.1 == other.f.0
                    || free[i].f.1 == other.f.1;
                if share_row && share_col {
                    seen[j] = true;
                    queue.push(j);
                }
            }
        }
        // the component is a full product of its edge sets
        debug_assert_eq!(members, rows_edges.len() * cols_edges.len());
        let rows: BTreeSet<u32> = rows_edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        let cols: BTreeSet<u32> = cols_edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        blocks.push(ComponentBlock {
            rows: rows.into_iter().collect(),
            cols: cols.into_iter().collect(),
        });
    }
    blocks.sort();
    Ok(blocks)
}

/// The prime ideal of an admissible set: variables of the witness plus all
/// 2-minors on each completed block.
pub fn prime_of_admissible(w: &AdmissibleSet) -> Result<PrimeComponent> {
    let blocks = box_complement_components(w)?;
    let height = w.len() as u64
        + blocks
            .iter()
            .map(|b| (b.rows.len() as u64 - 1) * (b.cols.len() as u64 - 1))
            .sum::<u64>();
    if cfg!(debug_assertions) {
        // block variable sets are pairwise disjoint and avoid the witness
        for (i, b) in blocks.iter().enumerate() {
            for &r in &b.rows {
                for &c in &b.cols {
                    let cell = Cell::new(r, c);
                    debug_assert!(!w.cells().contains(&cell));
                    for other in &blocks[i + 1..] {
                        debug_assert!(
                            !(other.rows.contains(&r) && other.cols.contains(&c)),
                            "blocks overlap at ({r},{c})"
                        );
                    }
                }
            }
        }
    }
    Ok(PrimeComponent {
        witness: w.clone(),
        blocks,
        height,
    })
}

impl PrimeComponent {
    pub fn witness(&self) -> &AdmissibleSet {
        &self.witness
    }

    pub fn blocks(&self) -> &[ComponentBlock] {
        &self.blocks
    }

    pub fn height(&self) -> u64 {
        self.height
    }

    /// Generators: one variable per witness cell, then the 2-minors of each
    /// block.
    pub fn generators(&self) -> Vec<Polynomial> {
        let pair = self.witness.pair();
        let mut gens: Vec<Polynomial> = self
            .witness
            .cells()
            .iter()
            .map(|c| Polynomial::var(VarIndex::cell(c.row, c.col)))
            .collect();
        for b in &self.blocks {
            let rows = VertexSubset::new(pair.rows(), b.rows.iter().copied())
                .expect("block rows in range");
            let cols = VertexSubset::new(pair.cols(), b.cols.iter().copied())
                .expect("block cols in range");
            gens.extend(all_2minors_block(&rows, &cols));
        }
        gens
    }

    fn sort_key(&self) -> (u64, Vec<Cell>) {
        (self.height, self.witness.cells().iter().copied().collect())
    }
}

impl Serialize for PrimeComponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let cells: Vec<[u32; 2]> = self
            .witness
            .cells()
            .iter()
            .map(|c| [c.row, c.col])
            .collect();
        let mut s = serializer.serialize_struct("PrimeComponent", 3)?;
        s.serialize_field("cells", &cells)?;
        s.serialize_field("blocks", &self.blocks)?;
        s.serialize_field("height", &self.height)?;
        s.end()
    }
}

/// Is a box `{i,j} x {k,l}` inside the completed box set of `blocks`?
fn box_in_completed(blocks: &[ComponentBlock], i: u32, j: u32, k: u32, l: u32) -> bool {
    blocks.iter().any(|b| {
        b.rows.contains(&i) && b.rows.contains(&j) && b.cols.contains(&k) && b.cols.contains(&l)
    })
}

fn some_edge_in_mask(mask: u128, cols: u32, i: u32, j: u32, k: u32, l: u32) -> bool {
    let has = |r, c| mask & cell_bit(cols, Cell::new(r, c)) != 0;
    (has(i, k) && has(i, l))
        || (has(j, k) && has(j, l))
        || (has(i, k) && has(j, k))
        || (has(i, l) && has(j, l))
}

/// The containment criterion past the strict-subset test: every completed
/// box of `v` lost by `w` must have an edge inside `w`.
fn lost_boxes_have_edges(
    v_blocks: &[ComponentBlock],
    w_mask: u128,
    w_blocks: &[ComponentBlock],
    cols: u32,
) -> bool {
    for vb in v_blocks {
        for (a, &i) in vb.rows.iter().enumerate() {
            for &j in &vb.rows[a + 1..] {
                for (b, &k) in vb.cols.iter().enumerate() {
                    for &l in &vb.cols[b + 1..] {
                        if box_in_completed(w_blocks, i, j, k, l) {
                            continue;
                        }
                        if !some_edge_in_mask(w_mask, cols, i, j, k, l) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Strict containment `P_V < P_W` of the primes of two admissible sets over
/// the same pair: `V` a proper subset of `W` and every completed box of `V`
/// lost by `W` has an edge inside `W`.
pub fn prime_strictly_contains(v: &AdmissibleSet, w: &AdmissibleSet) -> Result<bool> {
    if v.pair() != w.pair() {
        return Err(Error::PairMismatch);
    }
    let (v_mask, w_mask) = (v.mask(), w.mask());
    if v_mask == w_mask || v_mask & w_mask != v_mask {
        return Ok(false);
    }
    let v_blocks = box_complement_components(v)?;
    let w_blocks = box_complement_components(w)?;
    Ok(lost_boxes_have_edges(
        &v_blocks,
        w_mask,
        &w_blocks,
        w.pair().cols(),
    ))
}

/// Enumerates every admissible set of the pair, or `Overflow` past `cap`.
///
/// The search seeds one repair run per cell: a violated box (a cell in a box
/// with neither absorbing edge present) branches on its two completion
/// choices, with visited states memoized as cell bitmasks. Admissible sets
/// are closed under union, so the union closure of the repaired seeds is the
/// complete family.
pub fn enumerate_admissible(pair: &GraphPair, cap: usize) -> Enumeration {
    let (m, n) = (pair.rows(), pair.cols());
    let mn = (m as usize) * (n as usize);
    if mn > 128 {
        return Enumeration::Overflow;
    }
    let boxes = boxes_of(pair);
    let state_cap = cap.saturating_mul(16).max(1 << 16);

    let first_violation = |mask: u128| -> Option<(u128, u128)> {
        for b in &boxes {
            let hit = mask & b.mask;
            if hit == 0 || box_absorbed(b, mask) {
                continue;
            }
            let idx = hit.trailing_zeros();
            let cell = Cell::new(idx / n + 1, idx % n + 1);
            let row_edge = if cell.row == b.e.0 {
                b.edges[0]
            } else {
                b.edges[1]
            };
            let col_edge = if cell.col == b.f.0 {
                b.edges[2]
            } else {
                b.edges[3]
            };
            return Some((row_edge, col_edge));
        }
        None
    };

    let mut visited: HashSet<u128> = HashSet::new();
    let mut closures: BTreeSet<u128> = BTreeSet::new();
    let mut stack: Vec<u128> = (0..mn).map(|i| 1u128 << i).collect();
    stack.reverse();
    while let Some(s) = stack.pop() {
        if !visited.insert(s) {
            continue;
        }
        if visited.len() > state_cap {
            return Enumeration::Overflow;
        }
        match first_violation(s) {
            None => {
                closures.insert(s);
            }
            Some((row_edge, col_edge)) => {
                stack.push(s | row_edge);
                stack.push(s | col_edge);
            }
        }
    }

    // union generators: the inclusion-minimal closures through each cell
    // suffice, since every admissible set is the union of minimal
    // admissible sets through its cells
    let all: Vec<u128> = closures.iter().copied().collect();
    let mut seed_set: BTreeSet<u128> = BTreeSet::new();
    for idx in 0..mn {
        let bit = 1u128 << idx;
        let through: Vec<u128> = all.iter().copied().filter(|m| m & bit != 0).collect();
        for &a in &through {
            if !through.iter().any(|&b| b != a && b & a == b) {
                seed_set.insert(a);
            }
        }
    }
    let seeds: Vec<u128> = seed_set.into_iter().collect();

    let mut results: HashSet<u128> = HashSet::with_capacity(2 * all.len() + 1);
    results.insert(0);
    results.extend(all.iter().copied());
    if results.len() > cap {
        return Enumeration::Overflow;
    }
    let mut queue: Vec<u128> = results.iter().copied().collect();
    while let Some(r) = queue.pop() {
        for &s in &seeds {
            let u = r | s;
            if results.insert(u) {
                if results.len() > cap {
                    return Enumeration::Overflow;
                }
                queue.push(u);
            }
        }
    }

    let mut masks: Vec<u128> = results.into_iter().collect();
    masks.sort_unstable();
    let shared: Arc<GraphPair> = Arc::new(pair.clone());
    let mut sets: Vec<AdmissibleSet> = masks
        .into_iter()
        .map(|mask| {
            let cells = cells_of_mask(n, mask);
            debug_assert!(is_admissible(&cells, pair));
            AdmissibleSet {
                pair: Arc::clone(&shared),
                cells,
            }
        })
        .collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cells.cmp(&b.cells)));
    Enumeration::Complete(sets)
}

/// All minimal primes of the pair ideal: the primes of admissible sets,
/// filtered to the minimal elements and sorted by `(height, witness cells)`.
/// Always includes the prime of the empty witness, the full 2-minor ideal.
pub fn minimal_primes_generic(pair: &GraphPair, cap: usize) -> Result<MinimalPrimes> {
    require_connected(pair)?;
    let sets = match enumerate_admissible(pair, cap) {
        Enumeration::Overflow => return Ok(MinimalPrimes::Overflow),
        Enumeration::Complete(sets) => sets,
    };
    let components: Vec<PrimeComponent> = sets
        .iter()
        .map(prime_of_admissible)
        .collect::<Result<_>>()?;
    let masks: Vec<u128> = sets.iter().map(AdmissibleSet::mask).collect();
    let cols = pair.cols();
    let mut minimal: Vec<PrimeComponent> = Vec::new();
    'outer: for (wi, w) in components.iter().enumerate() {
        for (vi, v) in components.iter().enumerate() {
            if vi == wi || masks[vi] & masks[wi] != masks[vi] || masks[vi] == masks[wi] {
                continue;
            }
            if lost_boxes_have_edges(&v.blocks, masks[wi], &w.blocks, cols) {
                continue 'outer;
            }
        }
        minimal.push(w.clone());
    }
    minimal.sort_by_key(PrimeComponent::sort_key);
    Ok(MinimalPrimes::Complete(minimal))
}

/// The choice data of the fast 3 x n description: a cut set `T` of the
/// column graph and a bundle `B` of components of its removal whose middle
/// row joins the witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutBundle {
    pub cut: VertexSubset,
    pub bundle: Vec<usize>,
}

impl CutBundle {
    /// Materializes `([3] x T) union (bundle of {2} x V(C_j))`.
    pub fn cells(&self, components: &[VertexSubset]) -> BTreeSet<Cell> {
        let mut cells = BTreeSet::new();
        for &a in self.cut.members() {
            for row in 1..=3 {
                cells.insert(Cell::new(row, a));
            }
        }
        for &j in &self.bundle {
            for &v in components[j].members() {
                cells.insert(Cell::new(2, v));
            }
        }
        cells
    }
}

/// Minimal primes when the row graph is the path on three vertices, via the
/// cut-set description: `T` ranges over the sets with the cut point
/// property; `B` over bundles of components of size at least two such that
/// no cut vertex is adjacent to two bundled components.
pub fn minimal_primes_3xn(g2: &Graph) -> Result<Vec<PrimeComponent>> {
    if !g2.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let pair = Arc::new(GraphPair::new(Graph::path(3), g2.clone()));
    let mut out = Vec::new();
    for cut in g2.cut_point_property_sets()? {
        let components = g2.components_after_removal(&cut);
        let eligible: Vec<usize> = (0..components.len())
            .filter(|&j| components[j].len() >= 2)
            .collect();
        // adjacency of each cut vertex to each eligible component
        let adjacent: Vec<Vec<bool>> = cut
            .members()
            .iter()
            .map(|&a| {
                eligible
                    .iter()
                    .map(|&j| components[j].members().iter().any(|&v| g2.has_edge(a, v)))
                    .collect()
            })
            .collect();
        for choice in 0u64..(1 << eligible.len()) {
            let bundle: Vec<usize> = eligible
                .iter()
                .enumerate()
                .filter(|(bit, _)| choice >> bit & 1 == 1)
                .map(|(_, &j)| j)
                .collect();
            // no cut vertex may bridge two bundled components
            let bridged = adjacent.iter().any(|row| {
                eligible
                    .iter()
                    .enumerate()
                    .filter(|(bit, _)| choice >> bit & 1 == 1 && row[*bit])
                    .count()
                    > 1
            });
            if bridged {
                continue;
            }
            let wtb = CutBundle {
                cut: cut.clone(),
                bundle,
            };
            let w = AdmissibleSet::new(Arc::clone(&pair), wtb.cells(&components))
                .expect("cut-bundle sets are admissible");
            out.push(prime_of_admissible(&w)?);
        }
    }
    out.sort_by_key(PrimeComponent::sort_key);
    Ok(out)
}

/// Subsets `{a_1 < ... < a_r}` of `[n]` with `1 < a_1`, `a_r < n` and
/// gaps of at least two, in shortlex order; the empty set included.
pub fn hosten_shapiro_sets(n: u32) -> Vec<VertexSubset> {
    fn extend(n: u32, current: &mut Vec<u32>, next_min: u32, out: &mut Vec<Vec<u32>>) {
        out.push(current.clone());
        for a in next_min..n {
            current.push(a);
            extend(n, current, a + 2, out);
            current.pop();
        }
    }
    let mut raw = Vec::new();
    extend(n, &mut Vec::new(), 2, &mut raw);
    raw.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    raw.into_iter()
        .map(|members| VertexSubset::new(n, members).expect("in range"))
        .collect()
}

/// The minimal primes carried by full row or column stripes over cut point
/// property sets of either graph, deduplicated and sorted like the generic
/// enumerator.
pub fn special_primes_from_cutsets(pair: &GraphPair) -> Result<Vec<PrimeComponent>> {
    require_connected(pair)?;
    let shared = Arc::new(pair.clone());
    let (m, n) = (pair.rows(), pair.cols());
    let mut witnesses: BTreeSet<BTreeSet<Cell>> = BTreeSet::new();
    for s in pair.g1.cut_point_property_sets()? {
        witnesses.insert(
            s.members()
                .iter()
                .flat_map(|&i| (1..=n).map(move |j| Cell::new(i, j)))
                .collect(),
        );
    }
    for t in pair.g2.cut_point_property_sets()? {
        witnesses.insert(
            t.members()
                .iter()
                .flat_map(|&j| (1..=m).map(move |i| Cell::new(i, j)))
                .collect(),
        );
    }
    let mut out = Vec::new();
    for cells in witnesses {
        let w = AdmissibleSet::new(Arc::clone(&shared), cells).expect("stripe sets are admissible");
        out.push(prime_of_admissible(&w)?);
    }
    out.sort_by_key(PrimeComponent::sort_key);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(g1: Graph, g2: Graph) -> GraphPair {
        GraphPair::new(g1, g2)
    }

    fn figure_pair() -> GraphPair {
        let g2 = Graph::new(5, [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)]).unwrap();
        pair(Graph::path(3), g2)
    }

    fn cellset<I: IntoIterator<Item = (u32, u32)>>(cells: I) -> BTreeSet<Cell> {
        cells.into_iter().map(|(r, c)| Cell::new(r, c)).collect()
    }

    fn stripe_rows(rows: &[u32], n: u32) -> BTreeSet<Cell> {
        rows.iter()
            .flat_map(|&r| (1..=n).map(move |c| Cell::new(r, c)))
            .collect()
    }

    fn stripe_cols(cols: &[u32], m: u32) -> BTreeSet<Cell> {
        cols.iter()
            .flat_map(|&c| (1..=m).map(move |r| Cell::new(r, c)))
            .collect()
    }

    #[test]
    fn empty_and_full_are_admissible() {
        let p = figure_pair();
        assert!(is_admissible(&BTreeSet::new(), &p));
        let full: BTreeSet<Cell> = (1..=3)
            .flat_map(|r| (1..=5).map(move |c| Cell::new(r, c)))
            .collect();
        assert!(is_admissible(&full, &p));
    }

    #[test]
    fn single_cell_in_a_box_is_not_admissible() {
        let p = pair(Graph::path(3), Graph::path(3));
        assert!(!is_admissible(&cellset([(2, 1)]), &p));
        assert!(is_admissible(&stripe_rows(&[2], 3), &p));
    }

    #[test]
    fn admissible_constructor_validates() {
        let p = pair(Graph::path(3), Graph::path(3));
        assert_eq!(
            AdmissibleSet::new(p.clone(), cellset([(2, 1)])).unwrap_err(),
            Error::NotAdmissible
        );
        assert!(matches!(
            AdmissibleSet::new(p, cellset([(4, 1)])).unwrap_err(),
            Error::VertexOutOfRange { .. }
        ));
    }

    #[test]
    fn brute_force_admissibility_k2k2() {
        // all 16 subsets of the single box; exactly 10 are admissible
        let p = pair(Graph::complete(2), Graph::complete(2));
        let all: Vec<Cell> = (1..=2)
            .flat_map(|r| (1..=2).map(move |c| Cell::new(r, c)))
            .collect();
        let mut admissible = Vec::new();
        for mask in 0u32..16 {
            let cells: BTreeSet<Cell> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &c)| c)
                .collect();
            if is_admissible(&cells, &p) {
                admissible.push(cells);
            }
        }
        assert_eq!(admissible.len(), 10);
        match enumerate_admissible(&p, 1_000) {
            Enumeration::Complete(sets) => {
                let found: BTreeSet<BTreeSet<Cell>> =
                    sets.into_iter().map(|s| s.cells().clone()).collect();
                assert_eq!(found, admissible.into_iter().collect());
            }
            Enumeration::Overflow => panic!("unexpected overflow"),
        }
    }

    #[test]
    fn enumeration_matches_brute_force_on_small_boards() {
        for p in [
            pair(Graph::path(3), Graph::complete(2)),
            pair(Graph::path(3), Graph::path(3)),
            pair(Graph::complete(2), Graph::path(4)),
            pair(Graph::star(3), Graph::path(3)),
        ] {
            let (m, n) = (p.rows(), p.cols());
            let mut expected: BTreeSet<BTreeSet<Cell>> = BTreeSet::new();
            for mask in 0u32..(1 << (m * n)) {
                let cells: BTreeSet<Cell> = (0..m * n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| Cell::new(i / n + 1, i % n + 1))
                    .collect();
                if is_admissible(&cells, &p) {
                    expected.insert(cells);
                }
            }
            match enumerate_admissible(&p, 1_000_000) {
                Enumeration::Complete(sets) => {
                    let found: BTreeSet<BTreeSet<Cell>> =
                        sets.into_iter().map(|s| s.cells().clone()).collect();
                    assert_eq!(found, expected, "pair {p:?}");
                }
                Enumeration::Overflow => panic!("unexpected overflow"),
            }
        }
    }

    #[test]
    fn tiny_cap_overflows() {
        let p = figure_pair();
        assert_eq!(enumerate_admissible(&p, 3), Enumeration::Overflow);
    }

    #[test]
    fn block_of_empty_witness_is_everything() {
        let p = figure_pair();
        let w = AdmissibleSet::empty(p);
        let blocks = box_complement_components(&w).unwrap();
        assert_eq!(
            blocks,
            vec![ComponentBlock {
                rows: vec![1, 2, 3],
                cols: vec![1, 2, 3, 4, 5],
            }]
        );
    }

    #[test]
    fn figure_pair_column_stripe_block() {
        let p = figure_pair();
        let w = AdmissibleSet::new(p, stripe_cols(&[4], 3)).unwrap();
        let blocks = box_complement_components(&w).unwrap();
        assert_eq!(
            blocks,
            vec![ComponentBlock {
                rows: vec![1, 2, 3],
                cols: vec![1, 2, 3],
            }]
        );
    }

    #[test]
    fn figure_pair_mixed_witness_has_no_blocks() {
        let p = figure_pair();
        let mut cells = stripe_cols(&[1, 3], 3);
        cells.insert(Cell::new(2, 4));
        cells.insert(Cell::new(2, 5));
        let w = AdmissibleSet::new(p, cells).unwrap();
        assert!(box_complement_components(&w).unwrap().is_empty());
    }

    #[test]
    fn disconnected_inputs_are_rejected() {
        let p = pair(Graph::new(2, []).unwrap(), Graph::path(3));
        let w = AdmissibleSet::empty(p.clone());
        assert_eq!(
            box_complement_components(&w).unwrap_err(),
            Error::DisconnectedGraph
        );
        assert_eq!(
            minimal_primes_generic(&p, 100).unwrap_err(),
            Error::DisconnectedGraph
        );
    }

    #[test]
    fn heights_of_extreme_witnesses() {
        let p = figure_pair();
        let empty = prime_of_admissible(&AdmissibleSet::empty(p.clone())).unwrap();
        assert_eq!(empty.height(), 2 * 4); // (m-1)(n-1)
        let full: BTreeSet<Cell> = (1..=3)
            .flat_map(|r| (1..=5).map(move |c| Cell::new(r, c)))
            .collect();
        let all = prime_of_admissible(&AdmissibleSet::new(p, full).unwrap()).unwrap();
        assert_eq!(all.height(), 15);
        assert!(all.blocks().is_empty());
    }

    #[test]
    fn stripe_height_formula_for_complete_rows() {
        // K_m on the rows, W = [m] x T: height n'|T| + (n'-|T|-c(T))(m-1)
        // with the roles read off the column graph.
        let g2 = Graph::cycle(4).unwrap();
        let p = pair(Graph::complete(3), g2.clone());
        let t = VertexSubset::new(4, [1, 3]).unwrap();
        let cells = stripe_cols(t.members(), 3);
        let w = AdmissibleSet::new(p, cells).unwrap();
        let prime = prime_of_admissible(&w).unwrap();
        let c = g2.component_count_after_removal(&t) as u64;
        let expected = 3 * t.len() as u64 + (4 - t.len() as u64 - c) * (3 - 1);
        assert_eq!(prime.height(), expected);
        assert_eq!(prime.height(), 6);
    }

    #[test]
    fn strict_containment_criterion() {
        let p = Arc::new(figure_pair());
        let empty = AdmissibleSet::empty(Arc::clone(&p));
        let full_set: BTreeSet<Cell> = (1..=3)
            .flat_map(|r| (1..=5).map(move |c| Cell::new(r, c)))
            .collect();
        let full = AdmissibleSet::new(Arc::clone(&p), full_set).unwrap();
        assert!(prime_strictly_contains(&empty, &full).unwrap());
        assert!(!prime_strictly_contains(&full, &empty).unwrap());
        assert!(!prime_strictly_contains(&empty, &empty).unwrap());

        // two incomparable minimal witnesses of the figure pair
        let col4 = AdmissibleSet::new(Arc::clone(&p), stripe_cols(&[4], 3)).unwrap();
        let row2 = AdmissibleSet::new(Arc::clone(&p), stripe_rows(&[2], 5)).unwrap();
        assert!(!prime_strictly_contains(&col4, &row2).unwrap());
        assert!(!prime_strictly_contains(&row2, &col4).unwrap());

        let other = Arc::new(pair(Graph::path(3), Graph::path(3)));
        let foreign = AdmissibleSet::empty(other);
        assert_eq!(
            prime_strictly_contains(&empty, &foreign).unwrap_err(),
            Error::PairMismatch
        );
    }

    #[test]
    fn complete_pairs_have_one_minimal_prime() {
        for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
            let p = pair(Graph::complete(m), Graph::complete(n));
            match minimal_primes_generic(&p, 1_000_000).unwrap() {
                MinimalPrimes::Complete(primes) => {
                    assert_eq!(primes.len(), 1, "K_{m} x K_{n}");
                    assert!(primes[0].witness().is_empty());
                    assert_eq!(primes[0].height(), u64::from((m - 1) * (n - 1)));
                }
                MinimalPrimes::Overflow => panic!("overflow"),
            }
        }
    }

    #[test]
    fn figure_pair_minimal_primes() {
        let p = figure_pair();
        let primes = match minimal_primes_generic(&p, 1_000_000).unwrap() {
            MinimalPrimes::Complete(primes) => primes,
            MinimalPrimes::Overflow => panic!("overflow"),
        };
        let witnesses: Vec<BTreeSet<Cell>> =
            primes.iter().map(|p| p.witness().cells().clone()).collect();
        let mut expected: Vec<BTreeSet<Cell>> = vec![
            BTreeSet::new(),
            stripe_rows(&[2], 5),
            stripe_cols(&[2, 4], 3),
            stripe_cols(&[4], 3),
            {
                let mut w = stripe_cols(&[4], 3);
                w.extend([Cell::new(2, 1), Cell::new(2, 2), Cell::new(2, 3)]);
                w
            },
            stripe_cols(&[1, 3], 3),
            {
                let mut w = stripe_cols(&[1, 3], 3);
                w.extend([Cell::new(2, 4), Cell::new(2, 5)]);
                w
            },
        ];
        expected.sort();
        let mut got = witnesses.clone();
        got.sort();
        assert_eq!(got, expected);
        // heights sorted ascending by the canonical order
        let heights: Vec<u64> = primes.iter().map(|p| p.height()).collect();
        assert_eq!(heights, vec![5, 6, 6, 7, 8, 8, 8]);
    }

    #[test]
    fn three_by_n_matches_generic_on_figure_pair() {
        let g2 = Graph::new(5, [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)]).unwrap();
        let fast = minimal_primes_3xn(&g2).unwrap();
        let generic = match minimal_primes_generic(&figure_pair(), 1_000_000).unwrap() {
            MinimalPrimes::Complete(primes) => primes,
            MinimalPrimes::Overflow => panic!("overflow"),
        };
        let a: Vec<_> = fast.iter().map(|p| p.witness().cells().clone()).collect();
        let b: Vec<_> = generic
            .iter()
            .map(|p| p.witness().cells().clone())
            .collect();
        assert_eq!(a, b);
        assert_eq!(fast.len(), 7);
    }

    #[test]
    fn three_by_n_on_complete_graph() {
        let fast = minimal_primes_3xn(&Graph::complete(4)).unwrap();
        let witnesses: Vec<BTreeSet<Cell>> =
            fast.iter().map(|p| p.witness().cells().clone()).collect();
        assert_eq!(witnesses, vec![stripe_rows(&[2], 4), BTreeSet::new()]);
    }

    #[test]
    fn hosten_shapiro_small_cases() {
        let as_members = |sets: &[VertexSubset]| -> Vec<Vec<u32>> {
            sets.iter().map(|s| s.members().to_vec()).collect()
        };
        assert_eq!(as_members(&hosten_shapiro_sets(3)), vec![vec![], vec![2]]);
        assert_eq!(
            as_members(&hosten_shapiro_sets(4)),
            vec![vec![], vec![2], vec![3]]
        );
        for n in 1..=8 {
            let cut = Graph::path(n).cut_point_property_sets().unwrap();
            assert_eq!(cut, hosten_shapiro_sets(n), "line graph on [{n}]");
        }
    }

    #[test]
    fn special_primes_complete_case() {
        // both graphs complete: only the empty witness
        let p = pair(Graph::complete(3), Graph::complete(3));
        let primes = special_primes_from_cutsets(&p).unwrap();
        assert_eq!(primes.len(), 1);
        assert!(primes[0].witness().is_empty());

        // complete row graph: the stripes give the whole minimal prime list
        let p = pair(Graph::complete(3), Graph::path(3));
        let special = special_primes_from_cutsets(&p).unwrap();
        let generic = match minimal_primes_generic(&p, 1_000_000).unwrap() {
            MinimalPrimes::Complete(primes) => primes,
            MinimalPrimes::Overflow => panic!("overflow"),
        };
        assert_eq!(special, generic);
    }

    #[test]
    fn special_primes_appear_in_generic_list() {
        for p in [
            pair(Graph::path(3), Graph::path(3)),
            pair(Graph::path(3), Graph::cycle(4).unwrap()),
            pair(Graph::star(3), Graph::path(4)),
        ] {
            let special = special_primes_from_cutsets(&p).unwrap();
            let generic = match minimal_primes_generic(&p, 1_000_000).unwrap() {
                MinimalPrimes::Complete(primes) => primes,
                MinimalPrimes::Overflow => panic!("overflow"),
            };
            for s in &special {
                assert!(
                    generic.iter().any(|g| g == s),
                    "missing special prime in generic list for {p:?}"
                );
            }
        }
    }

    #[test]
    fn minimal_prime_outputs_are_antichains() {
        for p in [
            figure_pair(),
            pair(Graph::path(3), Graph::path(3)),
            pair(Graph::complete(2), Graph::path(3)),
        ] {
            let primes = match minimal_primes_generic(&p, 1_000_000).unwrap() {
                MinimalPrimes::Complete(primes) => primes,
                MinimalPrimes::Overflow => panic!("overflow"),
            };
            for a in &primes {
                for b in &primes {
                    if a != b {
                        assert!(!prime_strictly_contains(a.witness(), b.witness()).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn prime_component_serializes_to_schema() {
        let p = figure_pair();
        let w = AdmissibleSet::new(p, stripe_cols(&[4], 3)).unwrap();
        let prime = prime_of_admissible(&w).unwrap();
        let json = serde_json::to_value(&prime).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "cells": [[1, 4], [2, 4], [3, 4]],
                "blocks": [{"rows": [1, 2, 3], "cols": [1, 2, 3]}],
                "height": 7
            })
        );
    }
}
