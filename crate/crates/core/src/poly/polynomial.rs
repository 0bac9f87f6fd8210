//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::monomial::{Monomial, TermOrder, VarIndex};
use crate::poly::text;

/// A polynomial over the matrix variables, stored as terms in decreasing
/// monomial order with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, BigRational)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn var(v: VarIndex) -> Self {
        Polynomial {
            terms: vec![(Monomial::var(v), BigRational::one())],
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial {
            terms: vec![(m, BigRational::one())],
        }
    }

    /// Builds a polynomial from arbitrary terms, combining like monomials and
    /// dropping zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(iter: I) -> Self {
        let mut map: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in iter {
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(m).or_insert_with(BigRational::zero);
            *entry += c;
        }
        let mut terms: Vec<(Monomial, BigRational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Largest total degree among the terms; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn leading_term(&self) -> Result<(&Monomial, &BigRational)> {
        self.terms
            .first()
            .map(|(m, c)| (m, c))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        Ok(self.leading_term()?.0)
    }

    pub fn contains_aux(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.contains_aux())
    }

    /// Multiplies by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }

    /// Divides every coefficient by the leading coefficient.
    pub fn monic(&self) -> Result<Polynomial> {
        let (_, lc) = self.leading_term()?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        let lc = lc.clone();
        Ok(Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c / &lc))
                .collect(),
        })
    }

    fn merge_add(&self, rhs: &Polynomial) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), rhs.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ma, _)), Some((mb, _))) => match ma.cmp(mb) {
                    Ordering::Greater => terms.push(a.next().unwrap().clone()),
                    Ordering::Less => terms.push(b.next().unwrap().clone()),
                    Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let c = ca + cb;
                        if !c.is_zero() {
                            terms.push((m.clone(), c));
                        }
                    }
                },
                (Some(_), None) => terms.push(a.next().unwrap().clone()),
                (None, Some(_)) => terms.push(b.next().unwrap().clone()),
                (None, None) => break,
            }
        }
        Polynomial { terms }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge_add(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge_add(&(-rhs))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::from_terms(
            self.terms
                .iter()
                .flat_map(|(ma, ca)| rhs.terms.iter().map(move |(mb, cb)| (ma.mul(mb), ca * cb))),
        )
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Polynomials compare lexicographically on their term lists; used only to
/// make reported bases canonically sorted.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        for ((ma, ca), (mb, cb)) in self.terms.iter().zip(other.terms.iter()) {
            match ma.cmp(mb).then_with(|| ca.cmp(cb)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The S-polynomial `lcm/lt(f) * f - lcm/lt(g) * g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: TermOrder) -> Result<Polynomial> {
    let _ = order;
    let (lmf, lcf) = f.leading_term()?;
    let (lmg, lcg) = g.leading_term()?;
    let lcm = lmf.lcm(lmg);
    let mf = lcm.checked_div(lmf).expect("lcm divisible by lt(f)");
    let mg = lcm.checked_div(lmg).expect("lcm divisible by lt(g)");
    let cf = BigRational::one() / lcf;
    let cg = BigRational::one() / lcg;
    Ok(&f.mul_term(&mf, &cf) - &g.mul_term(&mg, &cg))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render(self))
    }
}

impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Polynomial> {
        text::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(row: u32, col: u32) -> Polynomial {
        Polynomial::var(VarIndex::cell(row, col))
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn addition_cancels() {
        let f = &x(1, 1) * &x(2, 2);
        let g = &x(1, 2) * &x(2, 1);
        let minor = &f - &g;
        assert_eq!(minor.term_count(), 2);
        let back = &(&minor + &g) - &f;
        assert!(back.is_zero());
    }

    #[test]
    fn leading_term_of_minor() {
        // [1,2|1,2] = x11*x22 - x12*x21 leads with x11*x22.
        let minor = &(&x(1, 1) * &x(2, 2)) - &(&x(1, 2) * &x(2, 1));
        let lm = minor.leading_monomial().unwrap();
        assert_eq!(
            *lm,
            Monomial::var(VarIndex::cell(1, 1)).mul(&Monomial::var(VarIndex::cell(2, 2)))
        );
    }

    #[test]
    fn s_polynomial_of_self_is_zero() {
        let minor = &(&x(1, 1) * &x(2, 2)) - &(&x(1, 2) * &x(2, 1));
        let s = s_polynomial(&minor, &minor, TermOrder::RowMajorLex).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn s_polynomial_shared_column_pair() {
        // f = [1,2|1,2], g = [1,2|1,3]; the S-polynomial leads with
        // x[1,2]*x[2,1]*x[2,3].
        let f = &(&x(1, 1) * &x(2, 2)) - &(&x(1, 2) * &x(2, 1));
        let g = &(&x(1, 1) * &x(2, 3)) - &(&x(1, 3) * &x(2, 1));
        let s = s_polynomial(&f, &g, TermOrder::RowMajorLex).unwrap();
        let expect = Monomial::from_pairs([
            (VarIndex::cell(1, 2), 1),
            (VarIndex::cell(2, 1), 1),
            (VarIndex::cell(2, 3), 1),
        ]);
        assert_eq!(*s.leading_monomial().unwrap(), expect);
    }

    #[test]
    fn zero_input_errors() {
        assert_eq!(
            Polynomial::zero().leading_term().unwrap_err(),
            Error::ZeroPolynomial
        );
        assert!(s_polynomial(&Polynomial::zero(), &x(1, 1), TermOrder::RowMajorLex).is_err());
    }

    #[test]
    fn constant_arithmetic() {
        let two = Polynomial::constant(int(2));
        let five = Polynomial::constant(int(5));
        assert_eq!(&two * &five, Polynomial::constant(int(10)));
        assert_eq!(&two - &two, Polynomial::zero());
    }
}
