//! Exact construction, verification and inversion of the reducible trinomial
//! family
//!
//! ```text
//! x^(2p) - A x^p + 1 = (x^2 - k x + 1) * Q(k, p)
//! ```
//!
//! The coefficient `A(k, p)` is available through three independent routes
//! (closed binomial sum, Lucas-type recurrence, generating-function
//! extraction) and every factorization is certified by exact big-integer
//! polynomial multiplication.

pub mod cli;
mod error;
pub mod lucas;
pub mod polyint;
pub mod series;
pub mod trinomial;

pub use error::{Error, Result};
pub use lucas::{lucas_prefix, lucas_term, lucas_term_fast, LucasSeq};
pub use polyint::Poly;
pub use series::{gf_coefficient_A, riordan_row_poly, RiordanSpec, TruncatedSeries};
pub use trinomial::{
    build_certificate, coeff_A_closed, coeff_A_recurrence, cofactor_Q, is_probable_prime,
    row_polynomial, scan_table, solve_k, verify_divides, FactorizationCertificate, FamilyPoint,
    Method, TableRow,
};

pub use num_bigint::BigInt;

/// Rejects even and nonpositive exponents.
pub(crate) fn ensure_odd_exponent(p: u64) -> Result<()> {
    if p.is_multiple_of(2) {
        return Err(Error::InvalidExponent(p as i64));
    }
    Ok(())
}
