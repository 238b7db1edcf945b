//! The family `x^(2p) - A x^p + 1 = (x^2 - k x + 1) Q(k, p)`.
//!
//! `A(k, p)` has three independent routes:
//!
//! * [`coeff_A_closed`]: the binomial sum over odd powers of `k`,
//! * [`coeff_A_recurrence`]: `k a_{p+1} - 2 a_p` from the Lucas-type sequence,
//! * [`crate::gf_coefficient_A`]: `[z^p] (1 - z^2)/(1 - k z + z^2)`.
//!
//! The recurrence route is the default. Every certificate is checked by
//! multiplying the factors back together.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::lucas::LucasSeq;
use crate::polyint::Poly;
use crate::series::gf_coefficient_A;
use crate::{ensure_odd_exponent, Error, Result};

/// A parameter pair `(p, k)` with `p` odd and positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyPoint {
    p: u64,
    k: BigInt,
}

impl FamilyPoint {
    pub fn new(p: u64, k: impl Into<BigInt>) -> Result<Self> {
        ensure_odd_exponent(p)?;
        Ok(FamilyPoint { p, k: k.into() })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }
}

/// Route used to compute `A(k, p)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Method {
    Closed,
    #[default]
    Recurrence,
    Gf,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Closed, Method::Recurrence, Method::Gf];

    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Recurrence => "recurrence",
            Method::Gf => "gf",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

/// `A(k, p)` by the requested route.
#[allow(non_snake_case)]
pub fn coeff_A(pt: &FamilyPoint, method: Method) -> Result<BigInt> {
    match method {
        Method::Closed => coeff_A_closed(pt),
        Method::Recurrence => Ok(coeff_A_recurrence(pt)),
        Method::Gf => gf_coefficient_A(&pt.k, pt.p),
    }
}

/// Coefficient of `k^(2i+1)` in `A(k, p)`:
/// `(-1)^(i + h) * p * C(i + h, 2i) / (2i + 1)` with `h = (p - 1)/2`.
///
/// The division is exact; a nonzero remainder is reported as an internal
/// inconsistency.
fn closed_coefficient(p: u64, i: u64) -> Result<BigInt> {
    let h = (p - 1) / 2;
    let numer = BigInt::from(p) * binomial(BigInt::from(i + h), BigInt::from(2 * i));
    let (q, r) = numer.div_rem(&BigInt::from(2 * i + 1));
    if !r.is_zero() {
        return Err(Error::Inconsistency(format!(
            "inexact division by {} in closed-form coefficient (p={p}, i={i})",
            2 * i + 1
        )));
    }
    Ok(if (i + h).is_multiple_of(2) { q } else { -q })
}

/// `A(k, p)` from the closed binomial sum.
#[allow(non_snake_case)]
pub fn coeff_A_closed(pt: &FamilyPoint) -> Result<BigInt> {
    let h = (pt.p - 1) / 2;
    let k2 = &pt.k * &pt.k;
    let mut power = pt.k.clone();
    let mut sum = BigInt::zero();
    for i in 0..=h {
        sum += closed_coefficient(pt.p, i)? * &power;
        power *= &k2;
    }
    Ok(sum)
}

/// `A(k, p) = k a_{p+1} - 2 a_p`.
#[allow(non_snake_case)]
pub fn coeff_A_recurrence(pt: &FamilyPoint) -> BigInt {
    let a = LucasSeq::new(pt.k.clone()).prefix(pt.p as usize + 1);
    let p = pt.p as usize;
    &pt.k * &a[p] - &a[p - 1] * 2u32
}

/// `A(k, p) = a_{p+2} - a_p` via the logarithmic-step Lucas evaluator.
#[allow(non_snake_case)]
fn coeff_A_fast(k: &BigInt, p: u64) -> BigInt {
    let seq = LucasSeq::new(k.clone());
    seq.term_fast(p + 2).expect("index >= 1") - seq.term_fast(p).expect("index >= 1")
}

/// Ascending coefficients of `A(k, p)` as a polynomial in `k`, of length
/// `p + 1`; only odd positions are nonzero.
pub fn row_polynomial(p: u64) -> Result<Vec<BigInt>> {
    ensure_odd_exponent(p)?;
    let mut row = vec![BigInt::zero(); p as usize + 1];
    for i in 0..=(p - 1) / 2 {
        row[2 * i as usize + 1] = closed_coefficient(p, i)?;
    }
    Ok(row)
}

/// The palindromic cofactor `Q(k, p)` of degree `2p - 2`, whose first `p`
/// ascending coefficients are `a_2, ..., a_{p+1}`.
#[allow(non_snake_case)]
pub fn cofactor_Q(pt: &FamilyPoint) -> Poly {
    let p = pt.p as usize;
    let a = LucasSeq::new(pt.k.clone()).prefix(p + 1);
    let half = &a[1..];
    let coeffs = half.iter().chain(half[..p - 1].iter().rev()).cloned();
    Poly::from_coeffs(coeffs)
}

/// `x^(2p) - A x^p + 1`
#[allow(non_snake_case)]
pub fn trinomial_poly(p: u64, A: &BigInt) -> Poly {
    let p = p as usize;
    let mut coeffs = vec![BigInt::zero(); 2 * p + 1];
    coeffs[0] = BigInt::one();
    coeffs[p] -= A;
    coeffs[2 * p] += BigInt::one();
    Poly::from_coeffs(coeffs)
}

/// `x^2 - k x + 1`
pub fn quadratic_factor(k: &BigInt) -> Poly {
    Poly::from_coeffs([BigInt::one(), -k.clone(), BigInt::one()])
}

/// A factorization `x^(2p) - A x^p + 1 = quadratic * cofactor` together with
/// the outcome of checking it by exact multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationCertificate {
    pub point: FamilyPoint,
    pub a: BigInt,
    pub quadratic: Poly,
    pub cofactor: Poly,
    pub verified: bool,
}

impl FactorizationCertificate {
    pub fn trinomial(&self) -> Poly {
        trinomial_poly(self.point.p, &self.a)
    }

    /// Recomputes the product and compares it against the trinomial.
    pub fn check(&self) -> bool {
        self.quadratic.mul(&self.cofactor) == self.trinomial()
    }
}

/// Builds and verifies the factorization for `pt`. A failed verification is
/// a defect and is returned as [`Error::Inconsistency`].
pub fn build_certificate(pt: &FamilyPoint) -> Result<FactorizationCertificate> {
    let mut cert = FactorizationCertificate {
        point: pt.clone(),
        a: coeff_A_recurrence(pt),
        quadratic: quadratic_factor(&pt.k),
        cofactor: cofactor_Q(pt),
        verified: false,
    };
    cert.verified = cert.check();
    if !cert.verified {
        return Err(Error::Inconsistency(format!(
            "certificate for p={}, k={} does not multiply out",
            pt.p, pt.k
        )));
    }
    Ok(cert)
}

/// Whether `x^2 - k x + 1` divides `x^(2p) - A x^p + 1`, decided by exact
/// division alone.
#[allow(non_snake_case)]
pub fn verify_divides(A: &BigInt, p: u64, k: &BigInt) -> Result<bool> {
    ensure_odd_exponent(p)?;
    let (_, rem) = trinomial_poly(p, A).divrem(&quadratic_factor(k))?;
    Ok(rem.is_zero())
}

/// Smallest `k >= 0` with `A(k, p) = target`, if any.
///
/// `A(0) = 0`, `A(1) ∈ {1, -2}`, `A(2) = 2`, and `A` is strictly increasing
/// for `k >= 2`, so anything above 2 is found by bisection on `[3, hi]`.
/// `A(k, p) > (k - 1)^p` for `k >= 3`, so `hi = 2^(ceil(bits/p) + 2)` bounds
/// the search.
fn solve_nonnegative(target: &BigInt, p: u64) -> Option<BigInt> {
    for k in 0..=2 {
        let k = BigInt::from(k);
        if coeff_A_fast(&k, p) == *target {
            return Some(k);
        }
    }
    if *target <= BigInt::from(2) {
        return None;
    }
    let shift = target.bits().div_ceil(p) + 2;
    let mut lo = BigInt::from(3);
    let mut hi = BigInt::one() << shift;
    debug_assert!(coeff_A_fast(&hi, p) > *target);
    while lo <= hi {
        let mid: BigInt = (&lo + &hi) >> 1;
        match coeff_A_fast(&mid, p).cmp(target) {
            std::cmp::Ordering::Equal => return Some(mid),
            std::cmp::Ordering::Less => lo = mid + 1,
            std::cmp::Ordering::Greater => hi = mid - 1,
        }
    }
    None
}

/// Inverts `A = A(k, p)`.
///
/// Nonnegative solutions are preferred; otherwise the odd symmetry
/// `A(-k, p) = -A(k, p)` is used to look for a negative `k`.
#[allow(non_snake_case)]
pub fn solve_k(A: &BigInt, p: u64) -> Result<Option<BigInt>> {
    ensure_odd_exponent(p)?;
    if let Some(k) = solve_nonnegative(A, p) {
        return Ok(Some(k));
    }
    Ok(solve_nonnegative(&-A, p).map(|k| -k))
}

/// Deterministic trial division.
pub fn is_probable_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d <= p / d {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub p: u64,
    pub k: u64,
    pub a: BigInt,
    pub prime: bool,
    /// Whether this row was re-checked by exact division.
    pub checked: bool,
}

/// Rows of every 16th position are re-checked by exact division unless
/// `verify_all` asks for all of them.
pub const TABLE_VERIFY_STRIDE: usize = 16;

/// `(p, k, A(k, p))` for every `p` in `p_list` and `1 <= k <= k_max`, in
/// `(p, k)` input order. Rows are computed in parallel.
pub fn scan_table(p_list: &[u64], k_max: u64, verify_all: bool) -> Result<Vec<TableRow>> {
    for &p in p_list {
        ensure_odd_exponent(p)?;
    }
    let points: Vec<(u64, u64)> = p_list
        .iter()
        .flat_map(|&p| (1..=k_max).map(move |k| (p, k)))
        .collect();
    points
        .into_par_iter()
        .enumerate()
        .map(|(idx, (p, k))| {
            let pt = FamilyPoint::new(p, k)?;
            let a = coeff_A_recurrence(&pt);
            let checked = verify_all || idx % TABLE_VERIFY_STRIDE == 0;
            if checked && !verify_divides(&a, p, pt.k())? {
                return Err(Error::Inconsistency(format!(
                    "table row p={p}, k={k}: x^2 - kx + 1 does not divide the trinomial"
                )));
            }
            Ok(TableRow {
                p,
                k,
                a,
                prime: is_probable_prime(p),
                checked,
            })
        })
        .collect()
}
