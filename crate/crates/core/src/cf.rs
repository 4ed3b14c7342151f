//! Continued fractions `[c1, c2, ..., cm] = c1 + 1/[c2, ..., cm]` and the
//! parity-constrained "even" expansion
//! `[2a1, 2b1, ..., 2b(k-1), 2ak]` or `[2a1, 2b1, ..., 2ak, bk]`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{ProjectiveRational, Rational};
use crate::error::{Error, Joined, Result};

/// An unconstrained continued fraction, entries possibly infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfWord(Vec<ProjectiveRational>);

impl CfWord {
    pub fn new(entries: Vec<ProjectiveRational>) -> Self {
        CfWord(entries)
    }

    pub fn from_integers<I, T>(entries: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        CfWord(entries.into_iter().map(ProjectiveRational::integer).collect())
    }

    pub fn entries(&self) -> &[ProjectiveRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Right-to-left fold of `c + 1/x`.
    pub fn eval(&self) -> Result<ProjectiveRational> {
        let (last, rest) = self.0.split_last().ok_or(Error::EmptyWord)?;
        // fold on an unreduced pair n/d and reduce once: long expansions would
        // otherwise pay a gcd per entry
        let (mut n, mut d) = match last {
            ProjectiveRational::Finite(r) => (r.numer().clone(), r.denom().clone()),
            ProjectiveRational::Infinity => (BigInt::one(), BigInt::zero()),
        };
        for c in rest.iter().rev() {
            (n, d) = match c {
                // c + d/n
                ProjectiveRational::Finite(r) => (r.numer() * &n + r.denom() * &d, r.denom() * &n),
                ProjectiveRational::Infinity if n.is_zero() => return Err(Error::Indeterminate),
                ProjectiveRational::Infinity => (BigInt::one(), BigInt::zero()),
            };
        }
        ProjectiveRational::from_ratio(n, d)
    }

    /// Entrywise negation, which negates the value.
    pub fn negate(&self) -> Self {
        CfWord(self.0.iter().map(ProjectiveRational::neg).collect())
    }
}

impl fmt::Display for CfWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", Joined(&self.0, ", "))
    }
}

pub fn cf_eval(w: &CfWord) -> Result<ProjectiveRational> {
    w.eval()
}

pub fn negate_cf(w: &CfWord) -> CfWord {
    w.negate()
}

/// An even continued fraction.
///
/// `a` and `b` hold the halved symbols: the entries are `2*a[i]` and
/// `2*b[i]`, except that a final `b` (present iff `b.len() == a.len()`)
/// enters the fraction unhalved.
///
/// All entries are nonzero except possibly `a[0]`. When the final `b` is
/// `±1` it has the sign of the final `a`; `a[0] = 0` is allowed with
/// either sign of `b[0]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EvenCf {
    a: Vec<BigInt>,
    b: Vec<BigInt>,
}

impl EvenCf {
    pub fn new(a: Vec<BigInt>, b: Vec<BigInt>) -> Result<Self> {
        Self::with_rules(a, b, true)
    }

    /// Like [`EvenCf::new`] but optionally skipping the sign normalization
    /// of a final `±1`, which is what makes the expansion unique.
    pub(crate) fn with_rules(a: Vec<BigInt>, b: Vec<BigInt>, enforce_sign_rule: bool) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::MalformedEvenCf("no a entries"));
        }
        if b.len() != a.len() && b.len() + 1 != a.len() {
            return Err(Error::MalformedEvenCf("b must have length k or k-1"));
        }
        if a[1..].iter().any(Zero::is_zero) {
            return Err(Error::MalformedEvenCf("a entries after the first must be nonzero"));
        }
        if b.iter().any(Zero::is_zero) {
            return Err(Error::MalformedEvenCf("b entries must be nonzero"));
        }
        let cf = EvenCf { a, b };
        if enforce_sign_rule && cf.violates_sign_rule() {
            return Err(Error::MalformedEvenCf("final b = ±1 must have the sign of the final a"));
        }
        Ok(cf)
    }

    fn violates_sign_rule(&self) -> bool {
        match (self.final_b(), self.a.last()) {
            (Some(bk), Some(ak)) if bk.abs().is_one() && !ak.is_zero() => bk.sign() != ak.sign(),
            _ => false,
        }
    }

    pub fn a(&self) -> &[BigInt] {
        &self.a
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn has_final_b(&self) -> bool {
        self.a.len() == self.b.len()
    }

    pub fn final_b(&self) -> Option<&BigInt> {
        if self.has_final_b() {
            self.b.last()
        } else {
            None
        }
    }

    pub fn sum_a(&self) -> BigInt {
        self.a.iter().sum()
    }

    /// Interleaved integer entries `2a1, 2b1, ..., 2ak(, bk)`.
    pub fn entries(&self) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(self.a.len() + self.b.len());
        for (i, ai) in self.a.iter().enumerate() {
            out.push(ai * 2);
            if let Some(bi) = self.b.get(i) {
                out.push(if i + 1 == self.a.len() { bi.clone() } else { bi * 2 });
            }
        }
        out
    }

    pub fn to_word(&self) -> CfWord {
        CfWord::from_integers(self.entries())
    }

    pub fn value(&self) -> Rational {
        self.to_word()
            .eval()
            .expect("even continued fractions never hit inf + inf")
            .into_finite()
            .expect("even continued fractions are finite")
    }
}

impl fmt::Display for EvenCf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", Joined(&self.entries(), ", "))
    }
}

impl fmt::Debug for EvenCf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `2 * round(n/d)` to the nearest even integer, for `d > 0` and `n/d`
/// not an odd integer.
fn nearest_even(n: &BigInt, d: &BigInt) -> BigInt {
    (n + d).div_floor(&(d * 2)) * 2
}

fn normalized(n: BigInt, d: BigInt) -> (BigInt, BigInt) {
    if d.is_negative() {
        (-n, -d)
    } else {
        (n, d)
    }
}

/// The unique even expansion of `x`.
///
/// Every tail of a constrained expansion has absolute value greater than
/// one, except a lone final `b = ±1`, so each even entry is forced to be
/// the even integer nearest the current value. That tie only arises when
/// the value is an odd integer, where the sign rule decides. Denominators
/// strictly decrease, so the descent terminates.
pub fn even_cf_expand(x: &Rational) -> EvenCf {
    let mut a = Vec::new();
    let mut b = Vec::new();
    let (mut num, mut den) = (x.numer().clone(), x.denom().clone());
    loop {
        // even position: value num/den, den > 0
        if den.is_one() {
            if num.is_even() {
                a.push(num / 2);
            } else {
                let ak = if num.is_positive() { (&num - 1) / 2 } else { (&num + 1) / 2 };
                b.push(&num - &ak * 2);
                a.push(ak);
            }
            break;
        }
        let e = nearest_even(&num, &den);
        let rem = &num - &e * &den;
        a.push(e / 2);
        // position after an even entry: value den/rem
        let (n2, d2) = normalized(den, rem);
        if d2.is_one() {
            b.push(n2);
            break;
        }
        let e = nearest_even(&n2, &d2);
        let rem = &n2 - &e * &d2;
        b.push(e / 2);
        (num, den) = normalized(d2, rem);
    }
    let cf = EvenCf { a, b };
    debug_assert!(!cf.violates_sign_rule());
    debug_assert_eq!(&cf.value(), x);
    cf
}

pub fn sum_a(e: &EvenCf) -> BigInt {
    e.sum_a()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn word(v: &[i64]) -> CfWord {
        CfWord::from_integers(v.iter().copied())
    }

    #[test]
    fn eval_examples() {
        assert_eq!(word(&[2, -4, 4, 1]).eval().unwrap(), ProjectiveRational::Finite(q("33/19")));
        assert_eq!(word(&[3, 2, 0]).eval().unwrap(), ProjectiveRational::from(3));
        assert_eq!(word(&[-7]).eval().unwrap(), ProjectiveRational::from(-7));
        assert_eq!(word(&[]).eval(), Err(Error::EmptyWord));
        let inf = CfWord::new(vec![ProjectiveRational::from(5), ProjectiveRational::Infinity]);
        assert_eq!(inf.eval().unwrap(), ProjectiveRational::from(5));
        let bad = CfWord::new(vec![ProjectiveRational::Infinity, ProjectiveRational::from(0)]);
        assert_eq!(bad.eval(), Err(Error::Indeterminate));
    }

    #[test]
    fn negation() {
        assert_eq!(negate_cf(&word(&[2, 1])), word(&[-2, -1]));
        assert_eq!(negate_cf(&word(&[2, 1])).eval().unwrap(), ProjectiveRational::from(-3));
        assert_eq!(negate_cf(&word(&[0, 3])), word(&[0, -3]));
    }

    #[test]
    fn expansion_examples() {
        let e = even_cf_expand(&q("33/19"));
        assert_eq!((e.a(), e.b()), (&ints(&[1, 2])[..], &ints(&[-2, 1])[..]));
        assert!(e.has_final_b());
        assert_eq!(e.to_string(), "[2, -4, 4, 1]");
        assert_eq!(e.sum_a(), BigInt::from(3));

        let e = even_cf_expand(&q("3"));
        assert_eq!((e.a(), e.b()), (&ints(&[1])[..], &ints(&[1])[..]));

        let e = even_cf_expand(&q("2"));
        assert_eq!((e.a(), e.b()), (&ints(&[1])[..], &[][..]));
        assert!(!e.has_final_b());
        assert_eq!(e.sum_a(), BigInt::from(1));

        let e = even_cf_expand(&q("1/3"));
        assert_eq!((e.a(), e.b()), (&ints(&[0])[..], &ints(&[3])[..]));
        assert_eq!(e.sum_a(), BigInt::from(0));

        assert_eq!(even_cf_expand(&q("1")).to_string(), "[0, 1]");
        assert_eq!(even_cf_expand(&q("-1")).to_string(), "[0, -1]");
        assert_eq!(even_cf_expand(&q("0")).to_string(), "[0]");
        assert_eq!(even_cf_expand(&q("-3")).to_string(), "[-2, -1]");
        assert_eq!(even_cf_expand(&q("59/35")).to_string(), "[2, -4, 2, -2, 2, -2, 2, 1]");
    }

    #[test]
    fn constructor_rejects_violations() {
        assert!(EvenCf::new(ints(&[2]), ints(&[-1])).is_err());
        assert!(EvenCf::with_rules(ints(&[2]), ints(&[-1]), false).is_ok());
        assert!(EvenCf::new(ints(&[1, 0]), ints(&[1])).is_err());
        assert!(EvenCf::new(ints(&[1]), ints(&[0])).is_err());
        assert!(EvenCf::new(vec![], vec![]).is_err());
        assert!(EvenCf::new(ints(&[1]), ints(&[1, 1])).is_err());
        assert!(EvenCf::new(ints(&[0]), ints(&[-1])).is_ok());
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-1_000_000i64..=1_000_000, 1i64..=1_000_000).prop_map(|(n, d)| Rational::reduce(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn expansion_round_trips(x in rational()) {
            let e = even_cf_expand(&x);
            prop_assert_eq!(e.to_word().eval().unwrap(), ProjectiveRational::Finite(x.clone()));
            // reconstructing through the checked constructor enforces every invariant
            prop_assert!(EvenCf::new(e.a().to_vec(), e.b().to_vec()).is_ok());
        }

        #[test]
        fn expansion_parity(x in rational()) {
            let e = even_cf_expand(&x);
            prop_assert_eq!(e.has_final_b(), x.numer().is_odd());
            if let Some(bk) = e.final_b() {
                prop_assert_eq!(bk.is_odd(), x.denom().is_odd());
            }
        }

        #[test]
        fn zero_entry_collapses(v in proptest::collection::vec(-9i64..=9, 1..6), c in -9i64..=9, d in -9i64..=9, at in 0usize..6) {
            let at = at.min(v.len());
            let mut long = v.clone();
            long.splice(at..at, [c, 0, d]);
            let mut short = v.clone();
            short.splice(at..at, [c + d]);
            if let (Ok(l), Ok(s)) = (word(&long).eval(), word(&short).eval()) {
                prop_assert_eq!(l, s);
            }
        }
    }
}
