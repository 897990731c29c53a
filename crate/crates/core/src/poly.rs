//! Sparse multivariate polynomials in `x1, x2, ..` with arbitrary-precision
//! integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent vector with trailing zeros removed. The derived order is
/// lexicographic with `x1 ≻ x2 ≻ ..`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Self(exponents)
    }

    pub fn one() -> Self {
        Self::default()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_i` (1-based).
    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Index of the last variable that occurs, 0 for the constant monomial.
    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let exps = (1..=n)
            .map(|i| self.exponent(i) + other.exponent(i))
            .collect();
        Self(exps)
    }

    fn with_exponents(&self, i: usize, a: u32, b: u32) -> Self {
        let mut exps = self.0.clone();
        if exps.len() < i + 1 {
            exps.resize(i + 1, 0);
        }
        exps[i - 1] = a;
        exps[i] = b;
        Self::new(exps)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SparsePolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::term(Monomial::one(), c)
    }

    /// The variable `x_i` (1-based).
    pub fn var(i: usize) -> Self {
        let mut exps = vec![0; i];
        exps[i - 1] = 1;
        Self::term(Monomial::new(exps), BigInt::one())
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// `x^exponents`.
    pub fn monomial(exponents: &[u32]) -> Self {
        Self::term(Monomial::new(exponents.to_vec()), BigInt::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Constant term.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one())
    }

    /// Lexicographically smallest monomial and its coefficient.
    pub fn min_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next()
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Monomial::num_vars).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exchange `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            (
                m.with_exponents(i, m.exponent(i + 1), m.exponent(i)),
                c.clone(),
            )
        }))
    }

    /// `(p - s_i p) / (x_i - x_{i+1})`, computed monomial by monomial; the division
    /// is always exact.
    pub fn divided_difference(&self, i: usize) -> Self {
        assert!(i >= 1, "divided difference index is 1-based");
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (a, b) = (m.exponent(i), m.exponent(i + 1));
            if a == b {
                continue;
            }
            // x^a y^b - x^b y^a = ±(x y)^min (x^d - y^d), and (x^d - y^d)/(x - y) = Σ x^(d-1-t) y^t
            let (lo, hi, sign) = if a > b { (b, a, c.clone()) } else { (a, b, -c) };
            let d = hi - lo;
            for t in 0..d {
                out.add_term(m.with_exponents(i, lo + d - 1 - t, lo + t), sign.clone());
            }
        }
        out
    }

    /// Evaluate at integer points (used by tests and sanity checks).
    pub fn evaluate(&self, point: &[BigInt]) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .enumerate()
                    .fold(c.clone(), |acc, (i, &e)| acc * point[i].pow(e))
            })
            .sum()
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest terms first reads more naturally
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.0.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: Self) -> SparsePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: Self) -> SparsePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: Self) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Add for SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: Self) -> SparsePolynomial {
        &self + &rhs
    }
}

impl Sub for SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: Self) -> SparsePolynomial {
        &self - &rhs
    }
}

impl Mul for SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: Self) -> SparsePolynomial {
        &self * &rhs
    }
}
