//! Conversion between the Scharlemann-Thompson invariant of a tunnel and
//! its principal slope.
//!
//! Writing one of them as `q/p = [2a1, 2b1, ..., 2an, bn]` with
//! `a = a1 + ... + an`, the other is
//! `[(-1)^p 2a, -bn, -2an, -2b(n-1), ..., -2a2, -2b1]`. The conversion is
//! an involution, keeps the denominator, and the two numerators satisfy
//! `q q' ≡ -1 (mod p)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::arith::{ProjectiveRational, Rational};
use crate::cf::{even_cf_expand, CfWord};
use crate::error::{Error, Result};
use crate::sl2::{require_odd_numerator, signed_twice_sum, Sl2Word};

/// The continued fraction whose value is the converted invariant.
pub fn st_convert_word(x: &Rational) -> Result<CfWord> {
    require_odd_numerator(x)?;
    let e = even_cf_expand(x);
    let entries = e.entries();
    let mut out = Vec::with_capacity(entries.len());
    out.push(signed_twice_sum(x, &e.sum_a()));
    // reversed tail without the leading 2a1, negated
    out.extend(entries[1..].iter().rev().map(|c| -c));
    Ok(CfWord::from_integers(out))
}

pub fn st_convert(x: &Rational) -> Result<Rational> {
    let value = st_convert_word(x)?.eval()?;
    // an odd-numerator input never converts to infinity: the result has
    // denominator p > 0
    Ok(value.into_finite().expect("converted invariant is finite"))
}

/// Same conversion read off the first column of
/// `U^((-1)^p 2a) L^-bn U^-2an ... U^-2a2 L^-2b1 U^-2a1`, the inverse of the
/// change-of-basis matrix.
pub fn st_convert_via_matrix(x: &Rational) -> Result<Rational> {
    require_odd_numerator(x)?;
    let e = even_cf_expand(x);
    let entries = e.entries();
    let mut exps = Vec::with_capacity(entries.len() + 1);
    exps.push(signed_twice_sum(x, &e.sum_a()));
    exps.extend(entries.iter().rev().map(|c| -c));
    let inverse = Sl2Word::new(exps).product();
    match inverse.first_column_slope() {
        ProjectiveRational::Finite(r) => Ok(r),
        ProjectiveRational::Infinity => unreachable!("first column has p' = ±p ≠ 0"),
    }
}

/// `(q/p, convert(q/p))` for each odd `q` in `[q_lo, q_hi]` coprime to `p`,
/// in ascending order of `q`.
pub fn convert_range(p: &BigInt, q_lo: &BigInt, q_hi: &BigInt) -> Result<Vec<(Rational, Rational)>> {
    if !p.is_positive() {
        return Err(Error::NonPositiveDenominator(p.to_string()));
    }
    let mut q = if q_lo.is_odd() { q_lo.clone() } else { q_lo + 1 };
    let mut out = Vec::new();
    while &q <= q_hi {
        if q.gcd(p).is_one() {
            let x = Rational::reduce(q.clone(), p.clone())?;
            let y = st_convert(&x)?;
            out.push((x, y));
        }
        q += 2;
    }
    Ok(out)
}
