//! Cabling-sequence parameters `((m0, m1, ..., mn), (s2, ..., sn))` of a
//! tunnel of a tunnel number one knot or link.
//!
//! `m0` is the simple slope in `Q/Z ∪ {∞}`, `m1..mn` are the rational
//! slopes of the later cablings and `s2..sn` are binary choices. Every
//! numerator `qi` with `i < n` is odd, and so is the denominator of `m0`
//! when `n ≥ 1`; the parity of the last one decides between knot and link.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

use crate::arith::{ProjectiveRational, Rational, ResidueSlope};
use crate::error::{Error, Result, Rule};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TunnelParams {
    m0: ResidueSlope,
    slopes: Vec<Rational>,
    binaries: Vec<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TunnelKind {
    TrivialKnot,
    TrivialLink,
    SimpleKnot,
    SimpleLink,
    Semisimple,
    Regular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Knot,
    Link,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TunnelClass {
    pub kind: TunnelKind,
    pub target: Target,
    /// Final slope `mn = 0`. Accepted as a link slope, though whether it is
    /// realized by a tunnel number one link is unsettled.
    pub zero_final_slope: bool,
}

impl fmt::Display for TunnelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Knot => "knot",
            Target::Link => "link",
        })
    }
}

impl TunnelParams {
    /// Builds and validates a tuple.
    pub fn new(m0: ResidueSlope, slopes: Vec<Rational>, binaries: Vec<bool>) -> Result<Self> {
        let t = TunnelParams { m0, slopes, binaries };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn new_unchecked(m0: ResidueSlope, slopes: Vec<Rational>, binaries: Vec<bool>) -> Self {
        TunnelParams { m0, slopes, binaries }
    }

    pub fn simple(m0: ResidueSlope) -> Result<Self> {
        Self::new(m0, Vec::new(), Vec::new())
    }

    pub fn m0(&self) -> &ResidueSlope {
        &self.m0
    }

    pub fn slopes(&self) -> &[Rational] {
        &self.slopes
    }

    pub fn binaries(&self) -> &[bool] {
        &self.binaries
    }

    /// Number of cablings after the first.
    pub fn n(&self) -> usize {
        self.slopes.len()
    }

    pub fn validate(&self) -> Result<TunnelClass, Rule> {
        let n = self.n();
        let expected = n.saturating_sub(1);
        if self.binaries.len() != expected {
            return Err(Rule::BinariesLength { expected, found: self.binaries.len() });
        }
        let rep = match &self.m0 {
            ResidueSlope::Infinity => {
                if n > 0 {
                    return Err(Rule::InfinityWithCablings);
                }
                return Ok(TunnelClass { kind: TunnelKind::TrivialLink, target: Target::Link, zero_final_slope: false });
            }
            ResidueSlope::Class(r) => r,
        };
        if rep.is_zero() {
            if n > 0 {
                return Err(Rule::PrimitiveWithCablings);
            }
            return Ok(TunnelClass { kind: TunnelKind::TrivialKnot, target: Target::Knot, zero_final_slope: false });
        }
        if n == 0 {
            let (kind, target) = if rep.denom().is_odd() {
                (TunnelKind::SimpleKnot, Target::Knot)
            } else {
                (TunnelKind::SimpleLink, Target::Link)
            };
            return Ok(TunnelClass { kind, target, zero_final_slope: false });
        }
        if rep.denom().is_even() {
            return Err(Rule::EvenSimpleDenominator(rep.clone()));
        }
        for (i, m) in self.slopes[..n - 1].iter().enumerate() {
            if m.numer().is_even() {
                return Err(Rule::EvenIntermediateNumerator { index: i + 1, slope: m.clone() });
            }
        }
        let last = &self.slopes[n - 1];
        let target = if last.numer().is_odd() { Target::Knot } else { Target::Link };
        let kind = if self.binaries.iter().all(|s| !s) { TunnelKind::Semisimple } else { TunnelKind::Regular };
        Ok(TunnelClass { kind, target, zero_final_slope: last.is_zero() })
    }

    /// The tuple of the mirror image: every slope negated.
    pub fn mirror(&self) -> Self {
        TunnelParams {
            m0: self.m0.neg(),
            slopes: self.slopes.iter().map(|m| -m).collect(),
            binaries: self.binaries.clone(),
        }
    }

    pub fn is_amphichiral(&self) -> bool {
        &self.mirror() == self
    }

    /// The Hopf link tuple `([1/2])`.
    pub fn is_hopf_link(&self) -> bool {
        self.slopes.is_empty()
            && matches!(&self.m0, ResidueSlope::Class(r) if r == &Rational::reduce(1, 2).expect("1/2"))
    }

    /// Half the final even numerator, half the simple slope's denominator
    /// for a simple link, and 0 for the trivial link.
    pub fn linking_number(&self) -> Result<BigInt> {
        let class = self.validate()?;
        if class.target != Target::Link {
            return Err(Error::NotALink);
        }
        Ok(match (self.slopes.last(), &self.m0) {
            (Some(mn), _) => mn.numer().abs() / 2,
            (None, ResidueSlope::Class(r)) => r.denom() / 2,
            (None, ResidueSlope::Infinity) => BigInt::from(0),
        })
    }

    /// Only the slopes, as `[ p/q ], m1, ..., mn`.
    pub fn slope_line(&self) -> String {
        let mut s = self.m0.to_string();
        for m in &self.slopes {
            s.push_str(", ");
            s.push_str(&m.to_string());
        }
        s
    }

    pub fn export(&self) -> Result<TunnelExport> {
        let class = self.validate()?;
        Ok(TunnelExport {
            m0: match &self.m0 {
                ResidueSlope::Class(r) => r.to_string(),
                ResidueSlope::Infinity => ProjectiveRational::Infinity.to_string(),
            },
            slopes: self.slopes.iter().map(ToString::to_string).collect(),
            binaries: self.binaries.iter().map(|&s| if s { '1' } else { '0' }).collect(),
            class: class.kind,
            target: class.target,
            linking_number: match class.target {
                Target::Link => self.linking_number().ok().map(|l| l.to_string()),
                Target::Knot => None,
            },
            hopf_link: self.is_hopf_link(),
            zero_final_slope: class.zero_final_slope,
            text: self.to_string(),
        })
    }
}

/// Machine-readable summary of a tuple.
///
/// Fields: `m0` (representative in `[0,1)` or `1/0`), `slopes` (rendered
/// rationals), `binaries` (a string of `0`/`1`), `class`, `target`
/// (`knot`/`link`), `linking_number` (links only, as a decimal string),
/// `hopf_link`,
/// `zero_final_slope` and `text` (the serialized tuple).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TunnelExport {
    pub m0: String,
    pub slopes: Vec<String>,
    pub binaries: String,
    pub class: TunnelKind,
    pub target: Target,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linking_number: Option<String>,
    pub hopf_link: bool,
    pub zero_final_slope: bool,
    pub text: String,
}

/// `[ p/q ], m1, ..., mn ; s2...sn`, the binary part omitted when `n ≤ 1`.
impl fmt::Display for TunnelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.slope_line())?;
        if !self.binaries.is_empty() {
            let bits: String = self.binaries.iter().map(|&s| if s { '1' } else { '0' }).collect();
            write!(f, " ; {bits}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TunnelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position, message: message.into() }
}

fn offset_parse<T: FromStr<Err = Error>>(s: &str, base: usize) -> Result<T> {
    s.parse().map_err(|e| match e {
        Error::Parse { position, message } => Error::Parse { position: base + position, message },
        other => parse_err(base, other.to_string()),
    })
}

/// Inverse of `Display`, followed by validation. Whitespace is free; an
/// infinite simple slope may be written `[ 1/0 ]` or `[ ∞ ]`.
impl FromStr for TunnelParams {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (slope_part, bits_part) = match text.split_once(';') {
            Some((a, b)) => (a, Some((a.len() + 1, b))),
            None => (text, None),
        };
        let open = slope_part.find(|c: char| !c.is_whitespace()).ok_or_else(|| parse_err(0, "empty input"))?;
        if !slope_part[open..].starts_with('[') {
            return Err(parse_err(open, "expected '[' opening the simple slope"));
        }
        let close = slope_part.find(']').ok_or_else(|| parse_err(slope_part.len(), "missing ']'"))?;
        let inner = &slope_part[open + 1..close];
        let m0 = ResidueSlope::of(&offset_parse::<ProjectiveRational>(inner, open + 1)?);

        let mut slopes = Vec::new();
        let rest = &slope_part[close + 1..];
        let mut pos = close + 1;
        let trimmed = rest.trim();
        if !trimmed.is_empty() {
            let lead = rest.len() - rest.trim_start().len();
            if !rest.trim_start().starts_with(',') {
                return Err(parse_err(pos + lead, "expected ',' after the simple slope"));
            }
            pos += lead + 1;
            for field in rest.trim_start()[1..].split(',') {
                slopes.push(offset_parse::<Rational>(field, pos)?);
                pos += field.len() + 1;
            }
        }

        let mut binaries = Vec::new();
        if let Some((base, bits)) = bits_part {
            let lead = bits.len() - bits.trim_start().len();
            for (i, c) in bits.trim().char_indices() {
                binaries.push(match c {
                    '0' => false,
                    '1' => true,
                    _ => return Err(parse_err(base + lead + i, format!("binary parameters must be 0 or 1, found {c:?}"))),
                });
            }
        }
        TunnelParams::new(m0, slopes, binaries)
    }
}

pub fn validate(t: &TunnelParams) -> Result<TunnelClass, Rule> {
    t.validate()
}

pub fn mirror(t: &TunnelParams) -> TunnelParams {
    t.mirror()
}

pub fn is_amphichiral(t: &TunnelParams) -> bool {
    t.is_amphichiral()
}

pub fn linking_number(t: &TunnelParams) -> Result<BigInt> {
    t.linking_number()
}

pub fn serialize(t: &TunnelParams) -> String {
    t.to_string()
}

pub fn parse(text: &str) -> Result<TunnelParams> {
    text.parse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn res(s: &str) -> ResidueSlope {
        ResidueSlope::of(&s.parse().unwrap())
    }

    fn tuple(m0: &str, slopes: &[&str], bits: &[bool]) -> TunnelParams {
        TunnelParams::new_unchecked(res(m0), slopes.iter().map(|s| q(s)).collect(), bits.to_vec())
    }

    #[test]
    fn classification() {
        let c = tuple("0", &[], &[]).validate().unwrap();
        assert_eq!((c.kind, c.target), (TunnelKind::TrivialKnot, Target::Knot));
        let c = tuple("1/2", &[], &[]).validate().unwrap();
        assert_eq!((c.kind, c.target), (TunnelKind::SimpleLink, Target::Link));
        let c = tuple("1/3", &["3", "5/3"], &[false]).validate().unwrap();
        assert_eq!((c.kind, c.target), (TunnelKind::Semisimple, Target::Knot));
        let c = tuple("1/0", &[], &[]).validate().unwrap();
        assert_eq!((c.kind, c.target), (TunnelKind::TrivialLink, Target::Link));
        let c = tuple("2/5", &["3", "5/3", "7"], &[false, true]).validate().unwrap();
        assert_eq!((c.kind, c.target), (TunnelKind::Regular, Target::Knot));
        let c = tuple("1/3", &["4/3"], &[]).validate().unwrap();
        assert_eq!((c.kind, c.target, c.zero_final_slope), (TunnelKind::Semisimple, Target::Link, false));
        let c = tuple("1/3", &["3", "0"], &[true]).validate().unwrap();
        assert_eq!((c.kind, c.target, c.zero_final_slope), (TunnelKind::Regular, Target::Link, true));
    }

    #[test]
    fn violations() {
        assert!(matches!(
            tuple("1/3", &["2/3", "5/3"], &[false]).validate(),
            Err(Rule::EvenIntermediateNumerator { index: 1, .. })
        ));
        assert_eq!(tuple("1/0", &["3"], &[]).validate(), Err(Rule::InfinityWithCablings));
        assert_eq!(tuple("0", &["3"], &[]).validate(), Err(Rule::PrimitiveWithCablings));
        assert!(matches!(tuple("1/2", &["3"], &[]).validate(), Err(Rule::EvenSimpleDenominator(_))));
        assert_eq!(
            tuple("1/3", &["3", "5"], &[]).validate(),
            Err(Rule::BinariesLength { expected: 1, found: 0 })
        );
        assert_eq!(tuple("1/3", &["3"], &[true]).validate(), Err(Rule::BinariesLength { expected: 0, found: 1 }));
    }

    #[test]
    fn mirroring() {
        assert_eq!(tuple("1/3", &[], &[]).mirror(), tuple("2/3", &[], &[]));
        assert_eq!(tuple("1/2", &[], &[]).mirror(), tuple("1/2", &[], &[]));
        assert_eq!(tuple("1/3", &["3", "5/3"], &[false]).mirror(), tuple("2/3", &["-3", "-5/3"], &[false]));
        assert!(tuple("0", &[], &[]).is_amphichiral());
        assert!(tuple("1/2", &[], &[]).is_amphichiral());
        assert!(tuple("1/0", &[], &[]).is_amphichiral());
        assert!(!tuple("1/3", &[], &[]).is_amphichiral());
    }

    #[test]
    fn linking_numbers() {
        assert_eq!(tuple("1/2", &[], &[]).linking_number().unwrap(), BigInt::from(1));
        assert_eq!(tuple("1/0", &[], &[]).linking_number().unwrap(), BigInt::from(0));
        assert_eq!(tuple("1/3", &["4/3"], &[]).linking_number().unwrap(), BigInt::from(2));
        assert_eq!(tuple("3/8", &[], &[]).linking_number().unwrap(), BigInt::from(4));
        assert_eq!(tuple("1/3", &["-10/7"], &[]).linking_number().unwrap(), BigInt::from(5));
        assert_eq!(tuple("1/3", &[], &[]).linking_number(), Err(Error::NotALink));
        assert!(matches!(tuple("0", &["3"], &[]).linking_number(), Err(Error::Validation(_))));
    }

    #[test]
    fn text_format() {
        assert_eq!(serialize(&tuple("1/3", &["3", "5/3"], &[false])), "[ 1/3 ], 3, 5/3 ; 0");
        assert_eq!(serialize(&tuple("1/3", &["3"], &[])), "[ 1/3 ], 3");
        assert_eq!(serialize(&tuple("1/0", &[], &[])), "[ 1/0 ]");
        assert_eq!(serialize(&tuple("0", &[], &[])), "[ 0 ]");
        assert_eq!(parse("[ 1/2 ]").unwrap(), tuple("1/2", &[], &[]));
        assert_eq!(parse("[∞]").unwrap(), tuple("1/0", &[], &[]));
        assert_eq!(parse("[ 4/3 ]").unwrap(), tuple("1/3", &[], &[]));
        assert_eq!(parse("[1/5],3,-7/3,9;01").unwrap(), tuple("1/5", &["3", "-7/3", "9"], &[false, true]));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let pos = |s: &str| match parse(s) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        };
        assert_eq!(pos(""), 0);
        assert_eq!(pos("1/3"), 0);
        assert_eq!(pos("[ 1/3"), 5);
        assert_eq!(pos("[ 1/3 ] 3"), 8);
        assert_eq!(pos("[ 1/3 ], 3, x"), 12);
        assert_eq!(pos("[ 1/3 ], 3, 5/3 ; 02"), 19);
        assert!(matches!(parse("[ 1/3 ], 2/3, 3 ; 0"), Err(Error::Validation(_))));
    }

    #[test]
    fn export_fields() {
        let e = tuple("1/2", &[], &[]).export().unwrap();
        assert_eq!(e.linking_number.as_deref(), Some("1"));
        assert!(e.hopf_link);
        let json = serde_json::to_value(tuple("1/3", &["3", "5/3"], &[false]).export().unwrap()).unwrap();
        assert_eq!(json["class"], "Semisimple");
        assert_eq!(json["target"], "knot");
        assert_eq!(json["slopes"][1], "5/3");
        assert_eq!(json["binaries"], "0");
        assert!(json.get("linking_number").is_none());
    }

    fn odd_numerator() -> impl Strategy<Value = Rational> {
        (-200i64..=200, 1i64..=200)
            .prop_map(|(n, d)| Rational::reduce(2 * n + 1, d).unwrap())
    }

    fn valid_tuple() -> impl Strategy<Value = TunnelParams> {
        let m0 = (0i64..50, 0i64..50).prop_map(|(p, h)| ResidueSlope::of_rational(&Rational::reduce(2 * p + 1, 2 * h + 3).unwrap()));
        (m0, proptest::collection::vec(odd_numerator(), 0..6), any::<u64>(), -50i64..=50, any::<bool>())
            .prop_filter_map("m0 must be nonzero", |(m0, mut slopes, bits, last_num, even_last)| {
                if m0.is_zero() {
                    return None;
                }
                if even_last && !slopes.is_empty() {
                    *slopes.last_mut().unwrap() = Rational::reduce(2 * last_num, 7).unwrap();
                }
                let binaries = (0..slopes.len().saturating_sub(1)).map(|i| bits >> i & 1 == 1).collect();
                Some(TunnelParams::new(m0, slopes, binaries).unwrap())
            })
    }

    proptest! {
        #[test]
        fn text_round_trip(t in valid_tuple()) {
            prop_assert_eq!(parse(&serialize(&t)).unwrap(), t);
        }

        #[test]
        fn mirror_is_an_involution_preserving_class(t in valid_tuple()) {
            prop_assert_eq!(t.mirror().mirror(), t.clone());
            prop_assert_eq!(t.mirror().validate(), t.validate());
        }
    }
}
