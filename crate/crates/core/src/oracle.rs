//! Brute-force checks of the even expansion and the matrix dictionary.
//!
//! These are independent of [`even_cf_expand`]'s descent: the enumeration
//! builds every constrained expansion within bounds and groups them by
//! value, so uniqueness and agreement can be read off directly.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::Rational;
use crate::cf::{even_cf_expand, EvenCf};
use crate::convert::{st_convert, st_convert_via_matrix};
use crate::sl2::Sl2Word;

pub type Enumeration = BTreeMap<Rational, Vec<EvenCf>>;

/// Every even continued fraction with at most `max_len` entries, each of
/// absolute value at most `max_entry`, grouped by value.
pub fn enumerate_even_cfs(max_len: usize, max_entry: i64) -> Enumeration {
    enumerate_with_rules(max_len, max_entry, true)
}

/// As [`enumerate_even_cfs`], optionally admitting expansions whose final
/// `±1` has the wrong sign.
pub fn enumerate_with_rules(max_len: usize, max_entry: i64, enforce_sign_rule: bool) -> Enumeration {
    let half = max_entry / 2;
    let first: Vec<i64> = (-half..=half).collect();
    let inner: Vec<i64> = (-half..=half).filter(|&x| x != 0).collect();
    let last_odd: Vec<i64> = (-max_entry..=max_entry).filter(|&x| x != 0).collect();

    let mut out = Enumeration::new();
    for len in 1..=max_len {
        let final_b = len % 2 == 0;
        let mut choices: Vec<&[i64]> = Vec::with_capacity(len);
        for pos in 0..len {
            choices.push(if pos == 0 {
                &first
            } else if final_b && pos + 1 == len {
                &last_odd
            } else {
                &inner
            });
        }
        let mut picked = vec![0i64; len];
        walk(&choices, 0, &mut picked, &mut |entries| {
            let a: Vec<BigInt> = entries.iter().step_by(2).map(|&x| BigInt::from(x)).collect();
            let b: Vec<BigInt> = entries.iter().skip(1).step_by(2).map(|&x| BigInt::from(x)).collect();
            if let Ok(cf) = EvenCf::with_rules(a, b, enforce_sign_rule) {
                if let Some(v) = cf.to_word().eval().ok().and_then(|v| v.into_finite()) {
                    out.entry(v).or_default().push(cf);
                }
            }
        });
    }
    for group in out.values_mut() {
        group.sort_by_key(|cf| cf.entries());
    }
    out
}

fn walk(choices: &[&[i64]], pos: usize, picked: &mut [i64], visit: &mut impl FnMut(&[i64])) {
    if pos == choices.len() {
        visit(picked);
        return;
    }
    for &c in choices[pos] {
        picked[pos] = c;
        walk(choices, pos + 1, picked, visit);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniquenessViolation {
    /// More than one constrained expansion with the same value.
    Duplicate { value: Rational, expansions: Vec<EvenCf> },
    /// The descent disagrees with the enumerated expansion.
    Mismatch { value: Rational, enumerated: EvenCf, computed: EvenCf },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UniquenessReport {
    pub values: usize,
    pub expansions: usize,
    pub violations: Vec<UniquenessViolation>,
}

impl UniquenessReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_uniqueness(enumeration: &Enumeration) -> UniquenessReport {
    let mut report = UniquenessReport::default();
    for (value, group) in enumeration {
        report.values += 1;
        report.expansions += group.len();
        if group.len() > 1 {
            report.violations.push(UniquenessViolation::Duplicate { value: value.clone(), expansions: group.clone() });
            continue;
        }
        let computed = even_cf_expand(value);
        if computed != group[0] {
            report.violations.push(UniquenessViolation::Mismatch {
                value: value.clone(),
                enumerated: group[0].clone(),
                computed,
            });
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DictionaryViolation {
    pub word: Sl2Word,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DictionaryReport {
    pub samples: usize,
    pub determinant_failures: usize,
    pub violations: Vec<DictionaryViolation>,
}

impl DictionaryReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.determinant_failures == 0
    }
}

/// Random words `U^a1 L^b1 (U^a2 L^b2)` with exponents in `[-5, 5] \ {0}`,
/// checked against all four continued-fraction readings.
pub fn random_word_dictionary_check(samples: usize, seed: u64) -> DictionaryReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = DictionaryReport { samples, ..Default::default() };
    for _ in 0..samples {
        let pairs = rng.gen_range(1..=2);
        let exps: Vec<i64> = (0..2 * pairs)
            .map(|_| {
                let e = rng.gen_range(1..=5);
                if rng.gen_bool(0.5) {
                    e
                } else {
                    -e
                }
            })
            .collect();
        let word = Sl2Word::from_i64s(&exps);
        if word.product().det() != BigInt::from(1) {
            report.determinant_failures += 1;
        }
        if let Err(e) = word.cf_dictionary() {
            report.violations.push(DictionaryViolation { word, message: e.to_string() });
        }
    }
    report.violations.sort_by_key(|v| v.word.to_string());
    report
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RoundTripReport {
    pub samples: usize,
    pub failures: Vec<Rational>,
}

/// `even_cf_expand` followed by evaluation on seeded random rationals with
/// numerator and denominator bounded by `bound`.
pub fn random_round_trip_check(samples: usize, bound: i64, seed: u64) -> RoundTripReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = RoundTripReport { samples, ..Default::default() };
    for _ in 0..samples {
        let x = Rational::reduce(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound)).expect("positive denominator");
        let e = even_cf_expand(&x);
        let ok = e.to_word().eval().ok().and_then(|v| v.into_finite()).as_ref() == Some(&x)
            && EvenCf::new(e.a().to_vec(), e.b().to_vec()).is_ok();
        if !ok {
            report.failures.push(x);
        }
    }
    report.failures.sort();
    report
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConversionReport {
    pub samples: usize,
    pub failures: Vec<(Rational, String)>,
}

/// Involution, denominator and `q q' ≡ -1 (mod p)` checks of the invariant
/// conversion, plus agreement with the matrix route, on seeded random
/// `q/p` with `q` odd.
pub fn random_conversion_check(samples: usize, bound: i64, seed: u64) -> ConversionReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ConversionReport { samples, ..Default::default() };
    let mut x_found = 0;
    while x_found < samples {
        let (n, d) = (rng.gen_range(-bound..=bound), rng.gen_range(1..=bound));
        let x = Rational::reduce(n, d).expect("positive denominator");
        if !x.has_odd_numerator() {
            continue;
        }
        x_found += 1;
        if let Err(why) = check_conversion(&x) {
            report.failures.push((x, why));
        }
    }
    report.failures.sort();
    report
}

pub(crate) fn check_conversion(x: &Rational) -> Result<(), String> {
    let y = st_convert(x).map_err(|e| e.to_string())?;
    let back = st_convert(&y).map_err(|e| e.to_string())?;
    if &back != x {
        return Err(format!("not an involution: {x} -> {y} -> {back}"));
    }
    if y.denom() != x.denom() {
        return Err(format!("denominator changed: {x} -> {y}"));
    }
    let residue = (x.numer() * y.numer() + 1_i32).mod_floor(x.denom());
    if !residue.is_zero() {
        return Err(format!("q q' + 1 = {residue} mod p for {x} -> {y}"));
    }
    let via_matrix = st_convert_via_matrix(x).map_err(|e| e.to_string())?;
    if via_matrix != y {
        return Err(format!("matrix route gives {via_matrix}, continued fraction gives {y}"));
    }
    Ok(())
}
