use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number; all coefficients in the library are of this type.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational n/d.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// An element of the Laurent polynomial ring Q[t_1^{±1}, ..., t_n^{±1}].
///
/// Terms map exponent vectors (length `nvars`, entries possibly negative)
/// to nonzero rational coefficients. The zero polynomial has an empty map.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Rat>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars >= 1, "need at least one variable");
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, rat(1))
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    /// The single term c * t^exps.
    pub fn monomial(nvars: usize, exps: Vec<i64>, c: Rat) -> Self {
        assert!(nvars >= 1, "need at least one variable");
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// The variable t_{i} (0-indexed).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self::monomial(nvars, exps, rat(1))
    }

    /// Univariate c * t^k.
    pub fn uni_term(c: Rat, k: i64) -> Self {
        Self::monomial(1, vec![k], c)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(vec![0; self.nvars].as_slice())
                .is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Single-term test: units of the Laurent ring are exactly the monomials.
    pub fn as_monomial(&self) -> Option<(Vec<i64>, Rat)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((e.clone(), c.clone()))
        } else {
            None
        }
    }

    pub fn is_unit(&self) -> bool {
        self.as_monomial().is_some()
    }

    pub fn coeff(&self, exps: &[i64]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    fn insert_term(terms: &mut BTreeMap<Vec<i64>, Rat>, exps: Vec<i64>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            Err(Error::VarMismatch(self.nvars, other.nvars))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert_term(&mut terms, e.clone(), c.clone());
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Exact product; exponent arithmetic is overflow-checked.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = Vec::with_capacity(self.nvars);
                for i in 0..self.nvars {
                    e.push(ea[i].checked_add(eb[i]).ok_or(Error::ExponentOverflow)?);
                }
                Self::insert_term(&mut terms, e, ca * cb);
            }
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Multiply by the monomial t^exps.
    pub fn mul_monomial(&self, exps: &[i64]) -> Result<Self> {
        assert_eq!(exps.len(), self.nvars);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut f = Vec::with_capacity(self.nvars);
            for i in 0..self.nvars {
                f.push(e[i].checked_add(exps[i]).ok_or(Error::ExponentOverflow)?);
            }
            terms.insert(f, c.clone());
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// The involution t_i -> t_i^{-1}.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Substitute t_i = 1 for all variables.
    pub fn eval_at_one(&self) -> Rat {
        let mut s = Rat::zero();
        for c in self.terms.values() {
            s += c;
        }
        s
    }

    /// Componentwise minimum of all exponent vectors (None for zero).
    pub fn min_exponents(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let mut min = it.next()?.clone();
        for e in it {
            for i in 0..self.nvars {
                if e[i] < min[i] {
                    min[i] = e[i];
                }
            }
        }
        Some(min)
    }

    /// Componentwise maximum of all exponent vectors (None for zero).
    pub fn max_exponents(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let mut max = it.next()?.clone();
        for e in it {
            for i in 0..self.nvars {
                if e[i] > max[i] {
                    max[i] = e[i];
                }
            }
        }
        Some(max)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("laurent add")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(&-rhs).expect("laurent sub")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("laurent mul")
    }
}

fn fmt_coeff(c: &Rat, lead: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if lead {
        if c.is_negative() {
            write!(f, "-")?;
        }
    } else if c.is_negative() {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let a = c.abs();
    if !a.is_one() {
        write!(f, "{}", a)?;
        return Ok(());
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // print highest exponents first for readability
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let is_const = e.iter().all(|&x| x == 0);
            fmt_coeff(c, i == 0, f)?;
            if is_const {
                if c.abs().is_one() {
                    write!(f, "1")?;
                } else {
                    // coefficient already printed
                }
            } else {
                if c.abs().is_one() {
                    // no coefficient printed
                } else {
                    write!(f, "*")?;
                }
                let mut first = true;
                for (v, &k) in e.iter().enumerate() {
                    if k == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    if self.nvars == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t{}", v + 1)?;
                    }
                    if k != 1 {
                        write!(f, "^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
