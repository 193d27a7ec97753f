use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::laurent::{rat, LaurentPoly, Rat};

/// Dense univariate polynomial over Q. `coeffs[i]` is the coefficient of
/// t^i; no trailing zeros are stored, and the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn var() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// t^n - 1.
    pub fn t_power_minus_one(n: usize) -> Self {
        let mut c = vec![Rat::zero(); n + 1];
        c[0] = rat(-1);
        c[n] = rat(1);
        Self::from_coeffs(c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coeff();
        QPoly {
            coeffs: self.coeffs.iter().map(|c| c / &lc).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat(i as i64 + 1))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division: self = q * d + r with deg r < deg d.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let dlc = d.leading_coeff();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() / &dlc;
            if !c.is_zero() {
                for i in 0..=dd {
                    let v = r[k + i].clone() - &c * &d.coeffs[i];
                    r[k + i] = v;
                }
                q[k] = c;
            }
            r.pop();
        }
        (QPoly::from_coeffs(q), QPoly::from_coeffs(r))
    }

    pub fn divides(&self, other: &QPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Rescale so the coefficients are coprime integers (content 1);
    /// keeps Euclidean remainder chains from blowing up.
    fn primitive(&self) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = num::BigInt::from(1);
        for c in &self.coeffs {
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        let mut num_gcd = num::BigInt::from(0);
        for c in &self.coeffs {
            let scaled = c * Rat::from_integer(den_lcm.clone());
            num_gcd = num::integer::gcd(num_gcd, scaled.numer().clone());
        }
        if num::Zero::is_zero(&num_gcd) {
            return self.clone();
        }
        let factor = Rat::new(den_lcm, num_gcd);
        QPoly {
            coeffs: self.coeffs.iter().map(|c| c * &factor).collect(),
        }
    }

    /// Monic gcd (primitive rescaling internally to bound coefficients).
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Squarefree test via gcd with the derivative.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.degree() == Some(0) {
            return true;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero(1);
        for (i, c) in self.coeffs.iter().enumerate() {
            p = &p + &LaurentPoly::uni_term(c.clone(), i as i64);
        }
        p
    }

    /// Conversion from a univariate Laurent polynomial with no negative
    /// exponents.
    pub fn from_laurent(p: &LaurentPoly) -> Result<QPoly> {
        if p.nvars() != 1 {
            return Err(Error::input("expected a univariate polynomial"));
        }
        let mut coeffs = vec![];
        for (e, c) in p.terms() {
            let k = e[0];
            if k < 0 {
                return Err(Error::input("negative exponent in polynomial context"));
            }
            let k = k as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rat::zero());
            }
            coeffs[k] = c.clone();
        }
        Ok(QPoly::from_coeffs(coeffs))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i) + rhs.coeff(i));
        }
        QPoly::from_coeffs(c)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &-rhs
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(c)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Canonical representative of a nonzero univariate Laurent polynomial
/// modulo units: `unit_coeff * t^unit_exp * core` reproduces the input,
/// with `core` monic and core(0) != 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitNormalForm {
    pub unit_coeff: Rat,
    pub unit_exp: i64,
    pub core: QPoly,
}

impl UnitNormalForm {
    pub fn unit(&self) -> LaurentPoly {
        LaurentPoly::uni_term(self.unit_coeff.clone(), self.unit_exp)
    }

    pub fn reassemble(&self) -> LaurentPoly {
        &self.unit() * &self.core.to_laurent()
    }
}

/// Factor a nonzero univariate Laurent polynomial as unit * core.
pub fn normalize_unit(p: &LaurentPoly) -> Result<UnitNormalForm> {
    if p.nvars() != 1 {
        return Err(Error::input("unit normal form requires one variable"));
    }
    if p.is_zero() {
        return Err(Error::input("zero polynomial has no unit normal form"));
    }
    let min = p.min_exponents().unwrap()[0];
    let shifted = p.mul_monomial(&[-min])?;
    let poly = QPoly::from_laurent(&shifted)?;
    debug_assert!(!poly.coeff(0).is_zero());
    let lc = poly.leading_coeff();
    Ok(UnitNormalForm {
        unit_coeff: lc.clone(),
        unit_exp: min,
        core: poly.monic(),
    })
}

/// Degree of the monic core of a nonzero univariate Laurent polynomial;
/// this is the Euclidean size function on Q[t^{±1}].
pub fn core_degree(p: &LaurentPoly) -> Result<usize> {
    let max = p
        .max_exponents()
        .ok_or_else(|| Error::input("zero polynomial has no core degree"))?[0];
    let min = p.min_exponents().unwrap()[0];
    Ok((max - min) as usize)
}

/// Squarefree decomposition by Yun's algorithm: p = prod f_j^{m_j} with
/// the f_j squarefree, monic, pairwise coprime, multiplicities strictly
/// increasing in the returned list.
pub fn yun_squarefree(p: &QPoly) -> Result<Vec<(QPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::input("squarefree decomposition of zero"));
    }
    if !p.is_monic() {
        return Err(Error::input("squarefree decomposition requires monic input"));
    }
    if p.degree() == Some(0) {
        return Ok(vec![]);
    }
    let dp = p.derivative();
    let g = p.gcd(&dp);
    let mut b = p.div_rem(&g).0.monic();
    let mut c = dp.div_rem(&g).0;
    let mut d = &c - &b.derivative();
    let mut out = vec![];
    let mut mult = 1usize;
    while b.degree() != Some(0) {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), mult));
        }
        b = b.div_rem(&a).0.monic();
        c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        mult += 1;
    }
    Ok(out)
}

/// Split of a monic polynomial with nonzero constant term into its maximal
/// factor with only roots of unity and the complementary factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicSplit {
    pub root_of_unity_part: QPoly,
    pub remainder: QPoly,
    /// Orders N at which gcd-stripping with t^N - 1 removed a factor, in
    /// increasing order; each root is captured at its exact order.
    pub orders: Vec<usize>,
}

/// Strip the maximal root-of-unity factor by iterated gcds with t^N - 1.
///
/// Any cyclotomic factor of p has degree phi(N) <= deg p, and
/// phi(N) >= sqrt(N/2) for N > 6, so N <= 2 deg(p)^2 + 6 suffices.
pub fn cyclotomic_part(p: &QPoly) -> Result<CyclotomicSplit> {
    if p.is_zero() || !p.is_monic() {
        return Err(Error::input("cyclotomic split requires monic nonzero input"));
    }
    if p.coeff(0).is_zero() {
        return Err(Error::input("cyclotomic split requires nonzero constant term"));
    }
    let deg = p.degree().unwrap();
    let bound = 2 * deg * deg + 6;
    let mut remainder = p.clone();
    let mut rou = QPoly::one();
    let mut orders = vec![];
    for n in 1..=bound {
        if remainder.degree() == Some(0) {
            break;
        }
        let tn = QPoly::t_power_minus_one(n);
        loop {
            let g = remainder.gcd(&tn);
            if g.degree().unwrap_or(0) == 0 {
                break;
            }
            rou = &rou * &g;
            remainder = remainder.div_rem(&g).0.monic();
            if orders.last() != Some(&n) {
                orders.push(n);
            }
        }
    }
    Ok(CyclotomicSplit {
        root_of_unity_part: rou,
        remainder,
        orders,
    })
}
