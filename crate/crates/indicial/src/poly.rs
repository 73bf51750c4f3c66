//! Dense univariate polynomials, generic over the coefficient scalar.
//!
//! Coefficients are stored in ascending degree with no trailing zeros, so
//! the zero polynomial is the empty list and `degree()` is `None` for it.
//! Everything here is exact: division panics on nothing and rounds
//! nothing; [`Polynomial::exact_div`] reports a nonzero remainder as an
//! error instead of truncating.
//!
//! The degrees in this crate stay modest (at most `2n` for the indicial
//! family, and `n` in the coupling parameter), so the dense representation
//! and the O(d^2) classical algorithms are the right tool.

use crate::{Error, Rat, Result};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Coefficient bound for the generic kernels: a commutative field scalar.
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// Dense univariate polynomial, ascending-degree coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Polynomial { coeffs: v }
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut v = Vec::with_capacity(self.coeffs.len() - 1);
        let mut k = T::one();
        for c in &self.coeffs[1..] {
            v.push(c.clone() * k.clone());
            k = k + T::one();
        }
        Self::new(v)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// `p(x + a)`, exact Taylor shift by repeated Horner expansion.
    pub fn taylor_shift(&self, a: &T) -> Self {
        let mut res = Self::zero();
        for c in self.coeffs.iter().rev() {
            // res = res * (x + a) + c
            let shifted = res.mul_by_x() + &res.scale(a);
            res = shifted + &Self::constant(c.clone());
        }
        res
    }

    fn mul_by_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = Vec::with_capacity(self.coeffs.len() + 1);
        v.push(T::zero());
        v.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs: v }
    }
}

impl<T: Coeff + Div<Output = T>> Polynomial<T> {
    /// Quotient and remainder, `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return Ok((Self::zero(), self.clone()));
        }
        let qlen = rem.len() - dd;
        let mut q = vec![T::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            let f = top / lead.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - f.clone() * dc.clone();
            }
            q[i] = f;
        }
        Ok((Self::new(q), Self::new(rem)))
    }

    /// Exact division; a nonzero remainder is an error.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Monic greatest common divisor; errors when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Divide by the leading coefficient (identity for the zero polynomial).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = l.clone();
                Self::new(
                    self.coeffs
                        .iter()
                        .map(|c| c.clone() / inv.clone())
                        .collect(),
                )
            }
        }
    }

    /// Product of the distinct irreducible factors (characteristic zero).
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative())?;
        if g.degree() == Some(0) {
            return Ok(self.monic());
        }
        Ok(self.exact_div(&g)?.monic())
    }

    /// Yun's square-free decomposition: returns `(f_i, i)` with
    /// `self ~ prod f_i^i`, each `f_i` monic square-free, pairwise coprime,
    /// and only the factors with `deg f_i > 0` listed.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        if f.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let df = f.derivative();
        let a0 = f.gcd(&df)?;
        let mut b = f.exact_div(&a0)?;
        let mut c = df.exact_div(&a0)?;
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut i = 1usize;
        loop {
            let a = b.gcd(&d)?;
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a)?;
            if b.degree() == Some(0) {
                break;
            }
            c = d.exact_div(&a)?;
            d = &c - &b.derivative();
            i += 1;
        }
        Ok(out)
    }
}

/// Parse a rational polynomial from ascending-degree coefficient strings.
pub fn qpoly_from_strs(strs: &[&str]) -> Result<Polynomial<Rat>> {
    let coeffs = strs
        .iter()
        .map(|s| crate::rational::parse_rat(s))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

/// Rational polynomial from integer coefficients, ascending degree.
pub fn qpoly_from_ints(ints: &[i64]) -> Polynomial<Rat> {
    Polynomial::new(ints.iter().map(|&k| Rat::from(crate::Int::from(k))).collect())
}

impl<T: Coeff> Add<&Polynomial<T>> for Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs.as_slice())
        } else {
            (rhs.coeffs.clone(), self.coeffs.as_slice())
        };
        for (i, c) in short.iter().enumerate() {
            long[i] = long[i].clone() + c.clone();
        }
        Polynomial::new(long)
    }
}

impl<T: Coeff> Add for Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Polynomial<T>) -> Polynomial<T> {
        self + &rhs
    }
}

impl<T: Coeff> Sub for Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Polynomial<T>) -> Polynomial<T> {
        &self - &rhs
    }
}

impl<T: Coeff> Mul for Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Polynomial<T>) -> Polynomial<T> {
        &self * &rhs
    }
}

impl<T: Coeff> Neg for Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

impl<T: Coeff> Zero for Polynomial<T> {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
}

impl<T: Coeff> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        self.clone() + rhs
    }
}

impl<T: Coeff> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        self + &(-rhs)
    }
}

impl<T: Coeff> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Coeff> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: fmt::Debug> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poly{:?}", self.coeffs)
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}
