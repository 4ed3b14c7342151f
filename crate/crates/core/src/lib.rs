//! Exact slope invariants of tunnels of tunnel number one knots and links.
//!
//! Every tunnel is reached from the trivial tunnel by a unique sequence of
//! cabling constructions, each described by a rational slope. This crate
//! computes with those slopes exactly:
//!
//! - [`cf`]: continued fractions and the unique even expansion
//! - [`sl2`]: words in the `SL(2,Z)` generators `U`, `L` and the
//!   change-of-basis matrix between slope coordinates
//! - [`convert`]: Scharlemann-Thompson invariant ↔ principal slope
//! - [`tunnel`]: the parameter tuple, its validation and mirroring
//! - [`two_bridge`]: cabling sequences of 2-bridge knot tunnels
//! - [`oracle`]: brute-force certification of the expansions

pub mod arith;
pub mod cf;
pub mod convert;
mod error;
pub mod oracle;
pub mod sl2;
pub mod tunnel;
pub mod two_bridge;

pub use arith::{ProjectiveRational, Rational, ResidueSlope, SlopePair};
pub use cf::{even_cf_expand, CfWord, EvenCf};
pub use convert::{convert_range, st_convert, st_convert_via_matrix};
pub use error::{Error, Result, Rule};
pub use sl2::{Generator, Sl2Matrix, Sl2Word};
pub use tunnel::{Target, TunnelClass, TunnelKind, TunnelParams};
pub use two_bridge::{two_bridge_slopes, TwoBridgeForm};

pub use num_bigint::BigInt;
