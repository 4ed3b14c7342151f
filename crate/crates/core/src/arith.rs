//! Exact rational, projective-rational and `Q/Z` arithmetic.
//!
//! Every slope in this crate is one of these values. Integers are
//! arbitrary precision; matrix products over long continued fractions
//! overflow machine words quickly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Reduces `numerator/denominator` to canonical form.
    ///
    /// `0/0` is degenerate and `n/0` is not finite; use
    /// [`ProjectiveRational::from_ratio`] when infinity is acceptable.
    pub fn reduce(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let (n, d) = (numerator.into(), denominator.into());
        if d.is_zero() {
            return Err(if n.is_zero() {
                Error::DegenerateFraction
            } else {
                Error::NotFinite { numerator: n.to_string() }
            });
        }
        Ok(Rational(BigRational::new(n, d)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn has_odd_numerator(&self) -> bool {
        self.numer().is_odd()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// `1/self`, which is infinity for zero.
    pub fn recip(&self) -> ProjectiveRational {
        if self.is_zero() {
            ProjectiveRational::Infinity
        } else {
            ProjectiveRational::Finite(Rational(self.0.recip()))
        }
    }

    /// The representative of the class mod 1 in `[0, 1)`.
    pub fn fract_mod_one(&self) -> Self {
        let r = self.numer().mod_floor(self.denom());
        Rational(BigRational::new_raw(r, self.denom().clone()))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for &Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational($tr::$m(&self.0, &rhs.0))
            }
        }
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational($tr::$m(self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// Integers print bare (`-55`), everything else as `q/p` with the sign on
/// the numerator.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str, offset: usize) -> Result<BigInt> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    t.parse::<BigInt>().map_err(|_| Error::Parse {
        position: offset + (s.len() - s.trim_start().len()),
        message: format!("expected an integer, found {:?}", s.trim()),
    })
}

/// Accepts `n` or `q/p`, unreduced or with a negative denominator.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(s, 0)?)),
            Some((n, d)) => {
                let num = parse_int(n, 0)?;
                let den = parse_int(d, n.len() + 1)?;
                Rational::reduce(num, den)
            }
        }
    }
}

/// A point of the rational projective line: a rational or the single
/// unsigned infinity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ProjectiveRational {
    Finite(Rational),
    Infinity,
}

impl ProjectiveRational {
    /// `num/den`, with `n/0` mapped to infinity.
    pub fn from_ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (n, d) = (num.into(), den.into());
        if d.is_zero() {
            if n.is_zero() {
                Err(Error::DegenerateFraction)
            } else {
                Ok(ProjectiveRational::Infinity)
            }
        } else {
            Rational::reduce(n, d).map(ProjectiveRational::Finite)
        }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        ProjectiveRational::Finite(Rational::from_integer(n))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ProjectiveRational::Infinity)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ProjectiveRational::Finite(r) => Some(r),
            ProjectiveRational::Infinity => None,
        }
    }

    pub fn into_finite(self) -> Option<Rational> {
        match self {
            ProjectiveRational::Finite(r) => Some(r),
            ProjectiveRational::Infinity => None,
        }
    }

    pub fn recip(&self) -> Self {
        match self {
            ProjectiveRational::Finite(r) => r.recip(),
            ProjectiveRational::Infinity => ProjectiveRational::integer(0),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            ProjectiveRational::Finite(r) => ProjectiveRational::Finite(-r),
            ProjectiveRational::Infinity => ProjectiveRational::Infinity,
        }
    }

    /// `c + 1/x`, the step of a right-to-left continued fraction fold.
    ///
    /// Conventions: `1/inf = 0`, `1/0 = inf`, `c + inf = inf` for finite
    /// `c`, and `inf + y = inf` for finite `y`. `inf + inf` is an error.
    pub fn add_invert(c: &Self, x: &Self) -> Result<Self> {
        match (c, x.recip()) {
            (ProjectiveRational::Infinity, ProjectiveRational::Infinity) => Err(Error::Indeterminate),
            (ProjectiveRational::Infinity, _) | (_, ProjectiveRational::Infinity) => {
                Ok(ProjectiveRational::Infinity)
            }
            (ProjectiveRational::Finite(c), ProjectiveRational::Finite(y)) => {
                Ok(ProjectiveRational::Finite(c + &y))
            }
        }
    }
}

impl From<Rational> for ProjectiveRational {
    fn from(r: Rational) -> Self {
        ProjectiveRational::Finite(r)
    }
}

impl From<i64> for ProjectiveRational {
    fn from(n: i64) -> Self {
        ProjectiveRational::integer(n)
    }
}

impl fmt::Display for ProjectiveRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectiveRational::Finite(r) => write!(f, "{r}"),
            ProjectiveRational::Infinity => f.write_str("1/0"),
        }
    }
}

impl fmt::Debug for ProjectiveRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts everything [`Rational`] does, plus `1/0`, `inf` and `∞`.
impl FromStr for ProjectiveRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if matches!(s.trim(), "∞" | "inf" | "infinity") {
            return Ok(ProjectiveRational::Infinity);
        }
        match s.split_once('/') {
            Some((n, d)) => {
                let num = parse_int(n, 0)?;
                let den = parse_int(d, n.len() + 1)?;
                ProjectiveRational::from_ratio(num, den)
            }
            None => Ok(ProjectiveRational::integer(parse_int(s, 0)?)),
        }
    }
}

/// The unordered pair `{(p,q), (-p,-q)}` of coprime integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SlopePair {
    p: BigInt,
    q: BigInt,
}

impl SlopePair {
    /// Canonical representative has `q > 0`, or `q = 0` and `p > 0`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (mut p, mut q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::ZeroSlopePair);
        }
        if !p.gcd(&q).is_one() {
            return Err(Error::NonPrimitiveSlopePair { p: p.to_string(), q: q.to_string() });
        }
        if q.is_negative() || (q.is_zero() && p.is_negative()) {
            p = -p;
            q = -q;
        }
        Ok(SlopePair { p, q })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// The slope `q/p`; infinite exactly when `p = 0`.
    pub fn slope(&self) -> ProjectiveRational {
        ProjectiveRational::from_ratio(self.q.clone(), self.p.clone())
            .expect("slope pair is never [0,0]")
    }

    /// A disk with this slope pair is nonseparating iff `q` is odd.
    pub fn is_nonseparating(&self) -> bool {
        self.q.is_odd()
    }
}

impl fmt::Display for SlopePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.p, self.q)
    }
}

/// A simple slope: a class in `Q/Z`, or infinity.
///
/// The finite representative lies in `[0, 1)`, so its denominator is the
/// denominator of every reduced fraction in the class.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ResidueSlope {
    Class(Rational),
    Infinity,
}

impl ResidueSlope {
    pub fn of(r: &ProjectiveRational) -> Self {
        match r {
            ProjectiveRational::Finite(x) => ResidueSlope::Class(x.fract_mod_one()),
            ProjectiveRational::Infinity => ResidueSlope::Infinity,
        }
    }

    pub fn of_rational(r: &Rational) -> Self {
        ResidueSlope::Class(r.fract_mod_one())
    }

    /// The class `[0]` of the primitive tunnel.
    pub fn zero() -> Self {
        ResidueSlope::Class(Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ResidueSlope::Class(r) if r.is_zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ResidueSlope::Infinity)
    }

    pub fn representative(&self) -> Option<&Rational> {
        match self {
            ResidueSlope::Class(r) => Some(r),
            ResidueSlope::Infinity => None,
        }
    }

    /// Negation in `Q/Z`; infinity is fixed.
    pub fn neg(&self) -> Self {
        match self {
            ResidueSlope::Class(r) => ResidueSlope::of_rational(&-r),
            ResidueSlope::Infinity => ResidueSlope::Infinity,
        }
    }
}

/// Bracket form of the transcripts: `[ 1/3 ]`, `[ 0 ]`, `[ 1/0 ]`.
impl fmt::Display for ResidueSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidueSlope::Class(r) => write!(f, "[ {r} ]"),
            ResidueSlope::Infinity => f.write_str("[ 1/0 ]"),
        }
    }
}

impl fmt::Debug for ResidueSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn reduce(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Rational> {
    Rational::reduce(numerator, denominator)
}

pub fn slope_of_pair(sp: &SlopePair) -> ProjectiveRational {
    sp.slope()
}

pub fn residue_of(r: &ProjectiveRational) -> ResidueSlope {
    ResidueSlope::of(r)
}

pub fn projective_add_invert(c: &ProjectiveRational, x: &ProjectiveRational) -> Result<ProjectiveRational> {
    ProjectiveRational::add_invert(c, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn pq(s: &str) -> ProjectiveRational {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(6, -4).unwrap().to_string(), "-3/2");
        let z = reduce(0, 7).unwrap();
        assert_eq!((z.numer().clone(), z.denom().clone()), (BigInt::from(0), BigInt::from(1)));
        assert_eq!(reduce(59, 35).unwrap().to_string(), "59/35");
    }

    #[test]
    fn reduce_errors() {
        assert_eq!(reduce(0, 0), Err(Error::DegenerateFraction));
        assert!(matches!(reduce(3, 0), Err(Error::NotFinite { .. })));
    }

    #[test]
    fn slope_pairs() {
        assert_eq!(SlopePair::new(1, 3).unwrap().slope(), pq("3"));
        assert_eq!(SlopePair::new(0, 1).unwrap().slope(), ProjectiveRational::Infinity);
        assert_eq!(SlopePair::new(2, -5).unwrap().slope(), pq("-5/2"));
        assert_eq!(SlopePair::new(0, 0), Err(Error::ZeroSlopePair));
        assert!(SlopePair::new(2, 4).is_err());
        let sp = SlopePair::new(-2, -5).unwrap();
        assert_eq!((sp.p().clone(), sp.q().clone()), (BigInt::from(2), BigInt::from(5)));
        let sp = SlopePair::new(-1, 0).unwrap();
        assert_eq!(sp.p(), &BigInt::from(1));
        assert!(SlopePair::new(1, 3).unwrap().is_nonseparating());
        assert!(!SlopePair::new(1, 2).unwrap().is_nonseparating());
    }

    #[test]
    fn residues() {
        assert_eq!(residue_of(&pq("-1/3")).to_string(), "[ 2/3 ]");
        assert_eq!(residue_of(&pq("7/3")).to_string(), "[ 1/3 ]");
        assert_eq!(residue_of(&ProjectiveRational::Infinity), ResidueSlope::Infinity);
        assert_eq!(residue_of(&pq("5")).to_string(), "[ 0 ]");
        assert_eq!(ResidueSlope::of_rational(&q("1/2")).neg(), ResidueSlope::of_rational(&q("1/2")));
    }

    #[test]
    fn add_invert_examples() {
        let inf = ProjectiveRational::Infinity;
        assert_eq!(projective_add_invert(&pq("3"), &inf).unwrap(), pq("3"));
        assert_eq!(projective_add_invert(&pq("2"), &pq("0")).unwrap(), inf);
        assert_eq!(projective_add_invert(&pq("2"), &pq("-19/5")).unwrap(), pq("33/19"));
        assert_eq!(projective_add_invert(&inf, &pq("7")).unwrap(), inf);
        assert_eq!(projective_add_invert(&inf, &pq("0")), Err(Error::Indeterminate));
    }

    #[test]
    fn rendering_and_parsing() {
        assert_eq!(q("-55").to_string(), "-55");
        assert_eq!(q("-299/35").to_string(), "-299/35");
        assert_eq!(q("10/-4").to_string(), "-5/2");
        assert_eq!(pq("1/0"), ProjectiveRational::Infinity);
        assert_eq!(pq("∞").to_string(), "1/0");
        assert!(matches!("3/x".parse::<Rational>(), Err(Error::Parse { position: 2, .. })));
        assert!("".parse::<Rational>().is_err());
    }

    fn nonzero() -> impl Strategy<Value = i64> {
        prop_oneof![-1_000_000i64..=-1, 1i64..=1_000_000]
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent(n in -1_000_000i64..=1_000_000, d in nonzero()) {
            let r = reduce(n, d).unwrap();
            prop_assert_eq!(reduce(r.numer().clone(), r.denom().clone()).unwrap(), r.clone());
            prop_assert!(r.denom() > &BigInt::zero());
            prop_assert!(r.numer().gcd(r.denom()).is_one());
        }

        #[test]
        fn slope_ignores_pair_sign(p in -1000i64..=1000, q in -1000i64..=1000) {
            prop_assume!((p, q) != (0, 0));
            let g = num_integer::gcd(p, q);
            let (p, q) = (p / g, q / g);
            prop_assert_eq!(SlopePair::new(p, q).unwrap().slope(), SlopePair::new(-p, -q).unwrap().slope());
            prop_assert_eq!(SlopePair::new(p, q).unwrap(), SlopePair::new(-p, -q).unwrap());
        }

        #[test]
        fn residue_is_integer_translation_invariant(n in -10_000i64..=10_000, d in 1i64..=500, k in -50i64..=50) {
            let r = reduce(n, d).unwrap();
            let shifted = &r + &Rational::from(k);
            prop_assert_eq!(ResidueSlope::of_rational(&r), ResidueSlope::of_rational(&shifted));
            let rep = ResidueSlope::of_rational(&r);
            let rep = rep.representative().unwrap();
            prop_assert_eq!(rep.denom(), r.denom());
            prop_assert!(!rep.numer().is_negative() && rep.numer() < rep.denom());
        }

        #[test]
        fn double_inversion_adds(c in -1000i64..=1000, n in nonzero(), d in 1i64..=1000) {
            let c = ProjectiveRational::from(c);
            let x = ProjectiveRational::Finite(reduce(n, d).unwrap());
            let inner = projective_add_invert(&ProjectiveRational::from(0), &x).unwrap();
            let got = projective_add_invert(&c, &inner).unwrap();
            let want = c.finite().unwrap() + x.finite().unwrap();
            prop_assert_eq!(got, ProjectiveRational::Finite(want));
        }
    }
}
