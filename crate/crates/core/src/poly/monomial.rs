//! Variables and sparse monomials over the matrix of indeterminates.

use std::cmp::Ordering;
use std::fmt;

/// A variable of the working polynomial ring.
///
/// `Cell { row, col }` is the matrix indeterminate at the 1-based position
/// `(row, col)`. `Aux` variables are helpers used by ideal intersection via
/// elimination; they compare above every cell variable.
///
/// The derived order sorts variables by *descending precedence* in the term
/// order: auxiliary variables first, then cells row-major, so `x[1,1]` comes
/// before `x[1,2]` before `x[2,1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarIndex {
    Aux(u32),
    Cell { row: u32, col: u32 },
}

impl VarIndex {
    pub fn cell(row: u32, col: u32) -> Self {
        VarIndex::Cell { row, col }
    }

    pub fn is_aux(&self) -> bool {
        matches!(self, VarIndex::Aux(_))
    }
}

impl fmt::Display for VarIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarIndex::Aux(k) => write!(f, "t{k}"),
            VarIndex::Cell { row, col } => write!(f, "x[{row},{col}]"),
        }
    }
}

/// The two term orders in use.
///
/// Both are lexicographic with the variable precedence
/// `x[1,1] > x[1,2] > ... > x[1,n] > x[2,1] > ... > x[m,n]`; the elimination
/// variant additionally places every auxiliary variable above every cell
/// variable, which makes plain lex an elimination order for the auxiliaries.
/// On monomials free of auxiliary variables the two orders coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TermOrder {
    #[default]
    RowMajorLex,
    EliminateAuxThenRowMajorLex,
}

/// A monomial, stored sparsely as `(variable, exponent)` pairs sorted by
/// variable precedence with no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(VarIndex, u32)>,
}

impl Monomial {
    /// The constant monomial 1.
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// The monomial consisting of a single variable.
    pub fn var(v: VarIndex) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs,
    /// combining repeats and dropping zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (VarIndex, u32)>>(pairs: I) -> Self {
        let mut exps: Vec<(VarIndex, u32)> = Vec::new();
        for (v, e) in pairs {
            if e == 0 {
                continue;
            }
            match exps.binary_search_by_key(&v, |&(w, _)| w) {
                Ok(i) => exps[i].1 += e,
                Err(i) => exps.insert(i, (v, e)),
            }
        }
        Monomial { exps }
    }

    pub fn exponents(&self) -> impl Iterator<Item = (VarIndex, u32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn exponent_of(&self, v: VarIndex) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn contains_aux(&self) -> bool {
        self.exps.iter().any(|(v, _)| v.is_aux())
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + rhs.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), rhs.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        exps.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        exps.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        exps.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    exps.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    exps.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { exps }
    }

    /// True when `self` divides `rhs`.
    pub fn divides(&self, rhs: &Monomial) -> bool {
        self.exps.iter().all(|&(v, e)| rhs.exponent_of(v) >= e)
    }

    /// `self / rhs` when `rhs` divides `self`.
    pub fn checked_div(&self, rhs: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for &(v, e) in &self.exps {
            let d = rhs.exponent_of(v);
            match e.checked_sub(d) {
                Some(0) => {}
                Some(r) => exps.push((v, r)),
                None => return None,
            }
        }
        if rhs.exps.iter().any(|&(v, _)| self.exponent_of(v) == 0) {
            return None;
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, rhs: &Monomial) -> Monomial {
        let mut exps: Vec<(VarIndex, u32)> = self.exps.clone();
        for &(v, e) in &rhs.exps {
            match exps.binary_search_by_key(&v, |&(w, _)| w) {
                Ok(i) => exps[i].1 = exps[i].1.max(e),
                Err(i) => exps.insert(i, (v, e)),
            }
        }
        Monomial { exps }
    }

    /// True when the two monomials share no variable.
    pub fn coprime(&self, rhs: &Monomial) -> bool {
        self.exps.iter().all(|&(v, _)| rhs.exponent_of(v) == 0)
    }
}

/// Monomials order themselves by the lexicographic term order: scan the
/// variables in decreasing precedence and let the first exponent difference
/// decide.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.exps.iter(), other.exps.iter());
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    // self has a positive exponent on a more precedent variable
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compares two monomials under the given term order.
pub fn compare_monomials(a: &Monomial, b: &Monomial, order: TermOrder) -> Ordering {
    // Both orders are realized by the single precedence scan; see `TermOrder`.
    let _ = order;
    a.cmp(b)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
