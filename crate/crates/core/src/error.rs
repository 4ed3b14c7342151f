use std::fmt;

use crate::arith::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degenerate fraction 0/0")]
    DegenerateFraction,
    #[error("fraction {numerator}/0 is not finite")]
    NotFinite { numerator: String },
    #[error("indeterminate projective sum: infinity + infinity")]
    Indeterminate,
    #[error("slope pair [0,0] is not a slope")]
    ZeroSlopePair,
    #[error("slope pair [{p},{q}] is not primitive (entries share a factor)")]
    NonPrimitiveSlopePair { p: String, q: String },
    #[error("{value} has even numerator; an odd numerator is required")]
    EvenNumerator { value: Rational },
    #[error("continued fraction or word is empty")]
    EmptyWord,
    #[error("matrix ({q} {s} / {p} {r}) does not have determinant 1")]
    NotUnimodular {
        q: String,
        s: String,
        p: String,
        r: String,
    },
    #[error("continued fraction identity {identity} fails for word {word}")]
    DictionaryMismatch { identity: &'static str, word: String },
    #[error("malformed even continued fraction: {0}")]
    MalformedEvenCf(&'static str),
    #[error("denominator must be positive, got {0}")]
    NonPositiveDenominator(String),
    #[error("invalid tunnel parameters: {0}")]
    Validation(#[from] Rule),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("linking number is only defined for link tunnels; this is a knot tunnel")]
    NotALink,
    #[error(
        "{b}/{a} has even numerator, so it is a 2-bridge link; \
         2-bridge links have only their upper and lower tunnels"
    )]
    TwoBridgeLink { b: String, a: String },
    #[error("{0} is the invariant of the trivial knot")]
    TrivialTwoBridge(String),
    #[error("{b}/{a} is degenerate: numerator and denominator must be coprime and a nonzero mod b")]
    DegenerateTwoBridge { b: String, a: String },
    #[error("|{0}| <= 1; normalize by changing the denominator by multiples of the numerator")]
    NotNormalized(Rational),
    #[error("cabling {index} would have twist parameter 0 (infinite slope)")]
    ZeroTwist { index: usize },
}

/// A violated rule of the tunnel parameterization.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Rule {
    #[error("the trivial link tuple (simple slope infinity) admits no further cablings")]
    InfinityWithCablings,
    #[error("the primitive tuple ([0]) admits no further cablings")]
    PrimitiveWithCablings,
    #[error("simple slope [{0}] has even denominator, which produces a link and ends the sequence")]
    EvenSimpleDenominator(Rational),
    #[error("slope m{index} = {slope} has even numerator; only the final slope may")]
    EvenIntermediateNumerator { index: usize, slope: Rational },
    #[error("expected {expected} binary parameters, found {found}")]
    BinariesLength { expected: usize, found: usize },
}

pub(crate) struct Joined<'a, T>(pub &'a [T], pub &'a str);

impl<T: fmt::Display> fmt::Display for Joined<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(self.1)?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}
