//! Truncated integer power series and the Riordan array
//! `R((1 - z^2)/(1 + z^2), z/(1 + z^2))`, whose row `p` holds the
//! coefficients of `A(k, p)` as a polynomial in `k`.

use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{ensure_odd_exponent, Error, Result};

/// Power series known for `z^0 ..= z^order`. Trailing zeros are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
    order: usize,
}

impl TruncatedSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients
    /// are stored.
    pub fn new<I, T>(cs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut coeffs: Vec<BigInt> = cs.into_iter().take(order + 1).map(Into::into).collect();
        coeffs.resize(order + 1, BigInt::zero());
        TruncatedSeries { coeffs, order }
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::new([1], order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `[z^n]`, rejecting `n` past the truncation order.
    pub fn coeff(&self, n: usize) -> Result<&BigInt> {
        self.coeffs.get(n).ok_or(Error::InsufficientOrder {
            needed: n,
            order: self.order,
        })
    }

    fn check_order(&self, other: &TruncatedSeries) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncatedSeries {
            coeffs,
            order: self.order,
        })
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_order(other)?;
        let n = self.order + 1;
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries {
            coeffs,
            order: self.order,
        })
    }

    /// Multiplicative inverse; the constant term must be `+1` or `-1`.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let c0 = &self.coeffs[0];
        let c0_inv = if c0.is_one() || (-c0).is_one() {
            c0.clone()
        } else {
            return Err(Error::NonUnitConstant(c0.to_string()));
        };
        let n = self.order + 1;
        let mut inv: Vec<BigInt> = Vec::with_capacity(n);
        inv.push(c0_inv.clone());
        for m in 1..n {
            // sum_{j=1..m} a_j b_{m-j} + a_0 b_m = 0
            let mut acc = BigInt::zero();
            for j in 1..=m {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += a * &inv[m - j];
                }
            }
            inv.push(-(acc * &c0_inv));
        }
        Ok(TruncatedSeries {
            coeffs: inv,
            order: self.order,
        })
    }
}

/// `[z^p] (1 - z^2)/(1 - k z + z^2)` for odd `p >= 1`.
#[allow(non_snake_case)]
pub fn gf_coefficient_A(k: &BigInt, p: u64) -> Result<BigInt> {
    ensure_odd_exponent(p)?;
    let order = p as usize;
    let numerator = TruncatedSeries::new([1, 0, -1], order);
    let denominator = TruncatedSeries::new([BigInt::one(), -k.clone(), BigInt::one()], order);
    let series = numerator.mul(&denominator.inverse()?)?;
    Ok(series.coeffs[order].clone())
}

/// The array `d_{n,j} = [z^n] g(z) f(z)^j` for `g = (1 - z^2)/(1 + z^2)` and
/// `f = z/(1 + z^2)`, carried to a fixed truncation order.
///
/// Powers of `f` are memoized on first use; the cache sits behind an
/// `RwLock`, so one spec can be shared across threads.
#[derive(Debug)]
pub struct RiordanSpec {
    g: TruncatedSeries,
    f: TruncatedSeries,
    f_powers: RwLock<Vec<Arc<TruncatedSeries>>>,
}

impl RiordanSpec {
    pub fn new(order: usize) -> Self {
        let inv = TruncatedSeries::new([1, 0, 1], order)
            .inverse()
            .expect("1 + z^2 has unit constant term");
        let g = TruncatedSeries::new([1, 0, -1], order)
            .mul(&inv)
            .expect("same order");
        let f = TruncatedSeries::new([0, 1], order)
            .mul(&inv)
            .expect("same order");
        RiordanSpec {
            g,
            f,
            f_powers: RwLock::new(vec![Arc::new(TruncatedSeries::one(order))]),
        }
    }

    pub fn order(&self) -> usize {
        self.g.order
    }

    pub fn g(&self) -> &TruncatedSeries {
        &self.g
    }

    pub fn f(&self) -> &TruncatedSeries {
        &self.f
    }

    /// `f^j` truncated to the spec order (identically zero once `j > order`).
    pub fn f_power(&self, j: usize) -> Arc<TruncatedSeries> {
        if let Some(s) = self.f_powers.read().unwrap().get(j) {
            return Arc::clone(s);
        }
        let mut cache = self.f_powers.write().unwrap();
        while cache.len() <= j {
            let next = cache.last().unwrap().mul(&self.f).expect("same order");
            cache.push(Arc::new(next));
        }
        Arc::clone(&cache[j])
    }

    /// `d_{n,j}`; zero above the diagonal.
    pub fn entry(&self, n: usize, j: usize) -> Result<BigInt> {
        if n > self.order() {
            return Err(Error::InsufficientOrder {
                needed: n,
                order: self.order(),
            });
        }
        if j > n {
            return Ok(BigInt::zero());
        }
        let fj = self.f_power(j);
        let fj = fj.coeffs();
        Ok((0..=n - j).map(|m| &self.g.coeffs[m] * &fj[n - m]).sum())
    }

    /// `(d_{n,0}, ..., d_{n,n})`
    pub fn row(&self, n: usize) -> Result<Vec<BigInt>> {
        (0..=n).map(|j| self.entry(n, j)).collect()
    }

    /// Ascending coefficients `c_j = d_{p,j}` of `A(k, p) = sum_j c_j k^j`.
    pub fn row_poly(&self, p: u64) -> Result<Vec<BigInt>> {
        ensure_odd_exponent(p)?;
        self.row(p as usize)
    }
}

/// Single-row convenience: builds a spec of exactly order `p`.
pub fn riordan_row_poly(p: u64) -> Result<Vec<BigInt>> {
    ensure_odd_exponent(p)?;
    RiordanSpec::new(p as usize).row_poly(p)
}
