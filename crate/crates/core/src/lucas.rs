//! The Lucas-type sequence `a_1 = 0, a_2 = 1, a_{i+2} = k a_{i+1} - a_i`.
//!
//! Indexing is 1-based. In Lucas-sequence terms `a_i = U_{i-1}(k, 1)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasSeq {
    k: BigInt,
}

impl LucasSeq {
    pub fn new(k: impl Into<BigInt>) -> Self {
        LucasSeq { k: k.into() }
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    /// `a_i` by forward iteration from the seeds.
    pub fn term(&self, i: u64) -> Result<BigInt> {
        if i == 0 {
            return Err(Error::ZeroIndex);
        }
        let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
        if i == 1 {
            return Ok(prev);
        }
        for _ in 2..i {
            let next = &self.k * &cur - &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        Ok(cur)
    }

    /// `a_i` in `O(log i)` big-integer steps.
    ///
    /// Walks the bits of `n = i - 1` keeping the pair `(U_n, U_{n+1})` and
    /// applies
    ///
    /// ```text
    /// U_{2n}   = U_n (2 U_{n+1} - k U_n)
    /// U_{2n+1} = U_{n+1}^2 - U_n^2
    /// ```
    pub fn term_fast(&self, i: u64) -> Result<BigInt> {
        if i == 0 {
            return Err(Error::ZeroIndex);
        }
        let n = i - 1;
        let (mut u, mut u1) = (BigInt::zero(), BigInt::one());
        for bit in (0..u64::BITS - n.leading_zeros()).rev() {
            let u2n = &u * (&u1 * 2u32 - &self.k * &u);
            let u2n1 = &u1 * &u1 - &u * &u;
            if (n >> bit) & 1 == 1 {
                u1 = &self.k * &u2n1 - &u2n;
                u = u2n1;
            } else {
                u = u2n;
                u1 = u2n1;
            }
        }
        Ok(u)
    }

    /// `(a_1, ..., a_n)` in one forward pass.
    pub fn prefix(&self, n: usize) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(n);
        if n == 0 {
            return out;
        }
        out.push(BigInt::zero());
        if n == 1 {
            return out;
        }
        out.push(BigInt::one());
        while out.len() < n {
            let len = out.len();
            let next = &self.k * &out[len - 1] - &out[len - 2];
            out.push(next);
        }
        out
    }
}

pub fn lucas_term(k: &BigInt, i: u64) -> Result<BigInt> {
    LucasSeq::new(k.clone()).term(i)
}

pub fn lucas_term_fast(k: &BigInt, i: u64) -> Result<BigInt> {
    LucasSeq::new(k.clone()).term_fast(i)
}

pub fn lucas_prefix(k: &BigInt, n: usize) -> Vec<BigInt> {
    LucasSeq::new(k.clone()).prefix(n)
}
