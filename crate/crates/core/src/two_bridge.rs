//! Cabling slopes of the semisimple tunnels of 2-bridge knots.
//!
//! A 2-bridge knot with invariant `b/a` (`b` odd, `|b/a| > 1`) is
//! expanded as `[2a1, 2b1, ..., 2an, bn]` and every `2ai` is then split
//! into `|ai|` unit blocks `[±2, 0, ±2, ..., ±2]`. Each unit block is one
//! cabling, so the sequence has `Σ|ai|` cablings in total, and every
//! cabling slope is `2 + 1/k` or `-2 + 1/k` for a twist parameter `k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{Rational, ResidueSlope};
use crate::cf::{even_cf_expand, EvenCf};
use crate::error::{Error, Result};
use crate::tunnel::TunnelParams;

/// The expansion rewritten so that every `a` entry is `±1`.
///
/// Entries are `[2a'1, 2b'1, ..., 2a'N, b'N]`; interior `b'` may be zero
/// where a block of the original expansion was split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitExpansion {
    a: Vec<i8>,
    b: Vec<BigInt>,
}

impl UnitExpansion {
    pub fn a(&self) -> &[i8] {
        &self.a
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    /// Number of cablings.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn entries(&self) -> Vec<BigInt> {
        let n = self.a.len();
        let mut out = Vec::with_capacity(2 * n);
        for (i, (ai, bi)) in self.a.iter().zip(&self.b).enumerate() {
            out.push(BigInt::from(2 * ai));
            out.push(if i + 1 == n { bi.clone() } else { bi * 2 });
        }
        out
    }
}

/// Splits each `2ai` into unit blocks separated by zero `b` entries.
///
/// Requires a final odd `b` entry and nonzero `a` entries.
pub fn unit_rewrite(e: &EvenCf) -> Result<UnitExpansion> {
    if !e.has_final_b() {
        return Err(Error::MalformedEvenCf("a knot expansion ends in an odd b entry"));
    }
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (ai, bi) in e.a().iter().zip(e.b()) {
        let count = ai.abs().to_usize().ok_or(Error::MalformedEvenCf("a entry too large to unroll"))?;
        if count == 0 {
            return Err(Error::MalformedEvenCf("a entries must be nonzero"));
        }
        let unit = if ai.is_positive() { 1 } else { -1 };
        for j in 0..count {
            a.push(unit);
            b.push(if j + 1 == count { bi.clone() } else { BigInt::zero() });
        }
    }
    Ok(UnitExpansion { a, b })
}

/// A normalized 2-bridge knot invariant together with its expansions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoBridgeForm {
    invariant: Rational,
    expansion: EvenCf,
    units: UnitExpansion,
}

impl TwoBridgeForm {
    /// `x = b/a` with `b` odd and `|x| > 1`.
    pub fn new(x: Rational) -> Result<Self> {
        if x.numer().is_even() {
            return Err(Error::TwoBridgeLink { b: x.numer().to_string(), a: x.denom().to_string() });
        }
        if x.numer().abs().is_one() {
            return Err(Error::TrivialTwoBridge(x.to_string()));
        }
        if x.numer().abs() <= *x.denom() {
            return Err(Error::NotNormalized(x));
        }
        let expansion = even_cf_expand(&x);
        let units = unit_rewrite(&expansion)?;
        Ok(TwoBridgeForm { invariant: x, expansion, units })
    }

    pub fn invariant(&self) -> &Rational {
        &self.invariant
    }

    pub fn b(&self) -> &BigInt {
        self.invariant.numer()
    }

    pub fn a(&self) -> &BigInt {
        self.invariant.denom()
    }

    pub fn expansion(&self) -> &EvenCf {
        &self.expansion
    }

    pub fn units(&self) -> &UnitExpansion {
        &self.units
    }
}

/// Both normalizations of `b/a`: `a` is moved by multiples of `b` into
/// the two residues `a'` with `0 < |a'| < |b|`.
pub fn normalize_input(b: &BigInt, a: &BigInt) -> Result<Vec<TwoBridgeForm>> {
    if !b.gcd(a).is_one() || a.is_zero() {
        return Err(Error::DegenerateTwoBridge { b: b.to_string(), a: a.to_string() });
    }
    if b.is_even() {
        return Err(Error::TwoBridgeLink { b: b.to_string(), a: a.to_string() });
    }
    if b.abs().is_one() {
        return Err(Error::TrivialTwoBridge(format!("{b}/{a}")));
    }
    let m = b.abs();
    let r = a.mod_floor(&m);
    [r.clone(), r - &m]
        .into_iter()
        .map(|den| TwoBridgeForm::new(Rational::reduce(b.clone(), den)?))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn of(n: &BigInt) -> Self {
        if n.is_even() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// One cabling after the first: slope `2 + 1/k` for even parity and
/// `-2 + 1/k` for odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CablingStep {
    /// 1-based position `i` in the unit expansion.
    pub index: usize,
    pub k: BigInt,
    pub parity: Parity,
    pub slope: Rational,
}

impl CablingStep {
    fn new(index: usize, k: BigInt, parity: Parity) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::ZeroTwist { index });
        }
        let base = Rational::from(match parity {
            Parity::Even => 2,
            Parity::Odd => -2,
        });
        let slope = base + Rational::reduce(1, k.clone())?;
        Ok(CablingStep { index, k, parity, slope })
    }
}

/// Full cabling sequence of the semisimple tunnel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CablingSequence {
    /// Twist parameter `kN` of the first cabling.
    pub first_k: BigInt,
    pub m0: ResidueSlope,
    /// Later cablings in the order they are performed, `i = N-1` down to 1.
    pub steps: Vec<CablingStep>,
}

impl CablingSequence {
    pub fn params(&self) -> TunnelParams {
        let slopes: Vec<Rational> = self.steps.iter().map(|s| s.slope.clone()).collect();
        let binaries = vec![false; slopes.len().saturating_sub(1)];
        TunnelParams::new_unchecked(self.m0.clone(), slopes, binaries)
    }
}

pub(crate) fn cabling_sequence_of_units(units: &UnitExpansion) -> Result<CablingSequence> {
    let n = units.len();
    let (&a_last, b_last) = match (units.a.last(), units.b.last()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::EmptyWord),
    };
    let first_k = if a_last == 1 { b_last.clone() } else { b_last - 1 };
    if first_k.is_zero() {
        return Err(Error::ZeroTwist { index: n });
    }
    // the first cabling has slope pair [k, 2k + 1]
    let m0 = ResidueSlope::of_rational(&Rational::reduce(first_k.clone(), &first_k * 2 + 1)?);

    let mut steps = Vec::with_capacity(n - 1);
    for i in (0..n - 1).rev() {
        let (cur, next, bi) = (units.a[i], units.a[i + 1], &units.b[i]);
        let (parity, k) = if next == 1 {
            (Parity::of(&(b_last + 1)), if cur == 1 { bi * 2 + 1 } else { bi * 2 })
        } else {
            (Parity::of(b_last), if cur == 1 { bi * 2 } else { bi * 2 - 1 })
        };
        steps.push(CablingStep::new(i + 1, k, parity)?);
    }
    Ok(CablingSequence { first_k, m0, steps })
}

pub fn cabling_sequence(f: &TwoBridgeForm) -> Result<CablingSequence> {
    cabling_sequence_of_units(&f.units)
}

/// The tuple `(m0, m(N-1), ..., m1)` with every binary parameter 0.
pub fn two_bridge_slopes(f: &TwoBridgeForm) -> Result<TunnelParams> {
    cabling_sequence(f).map(|c| c.params())
}
