//! Test-only oracles, independent of the library code paths they check.
#![allow(dead_code)]

use num_bigint::BigInt;

pub fn b(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn ints(vs: &[i64]) -> Vec<BigInt> {
    vs.iter().copied().map(BigInt::from).collect()
}

/// `A(k, p)` as the companion sequence `V_0 = 2, V_1 = k,
/// V_{n+1} = k V_n - V_{n-1}`, evaluated at `n = p`.
pub fn companion_oracle(k: &BigInt, p: u64) -> BigInt {
    let (mut v0, mut v1) = (b(2), k.clone());
    for _ in 0..p {
        let next = k * &v1 - &v0;
        v0 = std::mem::replace(&mut v1, next);
    }
    v0
}

/// Binomial coefficient from Pascal's triangle (no multiplicative formula).
pub fn pascal(n: usize, r: usize) -> BigInt {
    if r > n {
        return b(0);
    }
    let mut row = vec![b(1)];
    for _ in 0..n {
        let mut next = vec![b(1); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row[r].clone()
}

/// Closed-form row coefficient of `k^(2i+1)`, computed through Pascal's
/// triangle and an explicit rational check.
pub fn closed_entry_oracle(p: u64, i: u64) -> BigInt {
    let h = (p - 1) / 2;
    let numer = BigInt::from(p) * pascal((i + h) as usize, (2 * i) as usize);
    let denom = BigInt::from(2 * i + 1);
    assert_eq!(&numer % &denom, b(0), "non-integral closed-form entry");
    let mag = numer / denom;
    if (i + h).is_multiple_of(2) {
        mag
    } else {
        -mag
    }
}

/// Schoolbook product on raw coefficient vectors.
pub fn naive_mul(a: &[BigInt], c: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || c.is_empty() {
        return Vec::new();
    }
    let mut out = vec![b(0); a.len() + c.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in c.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    while out.last().is_some_and(|v| *v == b(0)) {
        out.pop();
    }
    out
}
