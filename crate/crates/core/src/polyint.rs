//! Dense univariate polynomials over arbitrary-precision signed integers.
//!
//! Coefficients are stored in ascending order (index `j` holds the
//! coefficient of `x^j`) and always normalized: the last stored coefficient is
//! nonzero, and the zero polynomial stores nothing.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Operand length (in coefficients) above which multiplication switches from
/// schoolbook to Karatsuba splitting.
pub const KARATSUBA_THRESHOLD: usize = 32;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs<I, T>(cs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = Poly {
            coeffs: cs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    /// `c * x^n`
    pub fn monomial(c: impl Into<BigInt>, n: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = c;
        Poly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^j`; zero past the degree.
    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Indices and values of the nonzero coefficients, ascending.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Exact product. Dispatches to Karatsuba when both operands are longer
    /// than [`KARATSUBA_THRESHOLD`].
    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut p = Poly {
            coeffs: mul_slices(&self.coeffs, &other.coeffs),
        };
        p.normalize();
        p
    }

    /// Plain quadratic-time product, kept public as the reference the fast
    /// path is checked against.
    pub fn mul_schoolbook(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut p = Poly {
            coeffs: schoolbook(&self.coeffs, &other.coeffs),
        };
        p.normalize();
        p
    }

    /// Division with remainder by a divisor whose leading coefficient is
    /// `+1` or `-1`, so that every quotient coefficient stays integral.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let lead = divisor.leading_coeff().ok_or(Error::ZeroDivisor)?;
        let lead_sign = if lead.is_one() {
            BigInt::one()
        } else if (-lead).is_one() {
            -BigInt::one()
        } else {
            return Err(Error::NonUnitLeading(lead.to_string()));
        };
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }

        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dd;
        let mut quot = vec![BigInt::zero(); qlen];
        for qi in (0..qlen).rev() {
            let top = &rem[qi + dd];
            if top.is_zero() {
                continue;
            }
            let q = top * &lead_sign;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[qi + j] -= &q * d;
            }
            quot[qi] = q;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Horner evaluation.
    pub fn eval(&self, v: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * v + c)
    }

    /// Coefficient `j` equals coefficient `deg - j` for every `j`. The zero
    /// polynomial and constants are palindromic.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Substitutes `x -> x^t`.
    pub fn inflate(&self, t: usize) -> Result<Poly> {
        if t == 0 {
            return Err(Error::ZeroInflation);
        }
        if t == 1 || self.degree().unwrap_or(0) == 0 {
            return Ok(self.clone());
        }
        let deg = self.coeffs.len() - 1;
        let mut coeffs = vec![BigInt::zero(); deg * t + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j * t] = c.clone();
        }
        Ok(Poly { coeffs })
    }
}

fn schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add_into(dst: &mut [BigInt], src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d += s;
    }
}

fn add_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    add_into(&mut out, short);
    out
}

/// Product of two ascending coefficient slices, length `a.len() + b.len() - 1`.
fn mul_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len() <= KARATSUBA_THRESHOLD || b.len() <= KARATSUBA_THRESHOLD {
        return schoolbook(a, b);
    }
    let m = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(m.min(a.len()));
    let (b0, b1) = b.split_at(m.min(b.len()));

    let z0 = mul_slices(a0, b0);
    let z2 = if a1.is_empty() || b1.is_empty() {
        Vec::new()
    } else {
        mul_slices(a1, b1)
    };
    // (a0 + a1)(b0 + b1) - z0 - z2
    let mut z1 = mul_slices(&add_slices(a0, a1), &add_slices(b0, b1));
    for (d, s) in z1.iter_mut().zip(&z0) {
        *d -= s;
    }
    for (d, s) in z1.iter_mut().zip(&z2) {
        *d -= s;
    }

    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    add_into(&mut out, &z0);
    add_into(&mut out[m..], &z1);
    if !z2.is_empty() {
        add_into(&mut out[2 * m..], &z2);
    }
    out
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::sub(self, rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

/// Ascending comma-separated decimal coefficients; the zero polynomial is `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Poly> {
        let coeffs = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let digits = tok.strip_prefix(['+', '-']).unwrap_or(tok);
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Parse(s.to_string()));
                }
                tok.parse::<BigInt>()
                    .map_err(|_| Error::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

/// Formats a coefficient list the same way [`Poly`] does, but without
/// normalization (used for row polynomials whose length is meaningful).
pub fn join_coeffs(cs: &[BigInt]) -> String {
    if cs.is_empty() {
        return "0".to_string();
    }
    cs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
