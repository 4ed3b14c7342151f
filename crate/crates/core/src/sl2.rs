//! Words in `U = (1 1 / 0 1)` and `L = (1 0 / 1 1)`.
//!
//! Slope pairs `[p,q]` act as column vectors `(q p)ᵀ`. A word
//! `U^a1 L^b1 ... U^ak L^bk` with product `(q s / p r)` satisfies
//!
//! ```text
//! q/p = [a1, b1, ..., ak, bk]    s/r = [a1, b1, ..., ak]
//! q/s = [bk, ak, ..., b1, a1]    p/r = [bk, ak, ..., b1]
//! ```

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{ProjectiveRational, Rational};
use crate::cf::{even_cf_expand, CfWord};
use crate::error::{Error, Joined, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    U,
    L,
}

/// An integer matrix `(q s / p r)` with `qr - sp = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sl2Matrix {
    q: BigInt,
    s: BigInt,
    p: BigInt,
    r: BigInt,
}

impl Sl2Matrix {
    pub fn new(q: impl Into<BigInt>, s: impl Into<BigInt>, p: impl Into<BigInt>, r: impl Into<BigInt>) -> Result<Self> {
        let m = Sl2Matrix { q: q.into(), s: s.into(), p: p.into(), r: r.into() };
        if m.det().is_one() {
            Ok(m)
        } else {
            Err(Error::NotUnimodular {
                q: m.q.to_string(),
                s: m.s.to_string(),
                p: m.p.to_string(),
                r: m.r.to_string(),
            })
        }
    }

    pub fn identity() -> Self {
        Sl2Matrix { q: BigInt::one(), s: BigInt::zero(), p: BigInt::zero(), r: BigInt::one() }
    }

    pub fn generator_power(which: Generator, exponent: impl Into<BigInt>) -> Self {
        let e = exponent.into();
        match which {
            Generator::U => Sl2Matrix { s: e, ..Self::identity() },
            Generator::L => Sl2Matrix { p: e, ..Self::identity() },
        }
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn s(&self) -> &BigInt {
        &self.s
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn det(&self) -> BigInt {
        &self.q * &self.r - &self.s * &self.p
    }

    pub fn inverse(&self) -> Self {
        Sl2Matrix { q: self.r.clone(), s: -&self.s, p: -&self.p, r: self.q.clone() }
    }

    pub fn transpose(&self) -> Self {
        Sl2Matrix { q: self.q.clone(), s: self.p.clone(), p: self.s.clone(), r: self.r.clone() }
    }

    /// Image of the column `(top bottom)ᵀ`.
    pub fn apply(&self, top: &BigInt, bottom: &BigInt) -> (BigInt, BigInt) {
        (&self.q * top + &self.s * bottom, &self.p * top + &self.r * bottom)
    }

    /// Slope `q/p` of the first column, i.e. the image of the zero-slope
    /// pair `[1,0]`.
    pub fn first_column_slope(&self) -> ProjectiveRational {
        ProjectiveRational::from_ratio(self.q.clone(), self.p.clone()).expect("det 1 column is nonzero")
    }
}

impl Mul for &Sl2Matrix {
    type Output = Sl2Matrix;

    fn mul(self, o: &Sl2Matrix) -> Sl2Matrix {
        Sl2Matrix {
            q: &self.q * &o.q + &self.s * &o.p,
            s: &self.q * &o.s + &self.s * &o.r,
            p: &self.p * &o.q + &self.r * &o.p,
            r: &self.p * &o.s + &self.r * &o.r,
        }
    }
}

impl fmt::Display for Sl2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {} / {} {})", self.q, self.s, self.p, self.r)
    }
}

impl fmt::Debug for Sl2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exponents of `U^e0 L^e1 U^e2 ...`, alternating and starting with `U`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sl2Word(Vec<BigInt>);

impl Sl2Word {
    pub fn new(exponents: Vec<BigInt>) -> Self {
        Sl2Word(exponents)
    }

    pub fn from_i64s(exponents: &[i64]) -> Self {
        Sl2Word(exponents.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn exponents(&self) -> &[BigInt] {
        &self.0
    }

    pub fn generator(index: usize) -> Generator {
        if index.is_multiple_of(2) {
            Generator::U
        } else {
            Generator::L
        }
    }

    pub fn product(&self) -> Sl2Matrix {
        self.0.iter().enumerate().fold(Sl2Matrix::identity(), |acc, (i, e)| {
            let m = &acc * &Sl2Matrix::generator_power(Self::generator(i), e.clone());
            debug_assert!(m.det().is_one());
            m
        })
    }

    /// The word's product together with the four continued-fraction
    /// readings of its entries, each checked against direct evaluation.
    ///
    /// A word ending in `U` is read with a trailing `L^0`.
    pub fn cf_dictionary(&self) -> Result<CfDictionary> {
        if self.0.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut ab: Vec<BigInt> = self.0.clone();
        if ab.len() % 2 == 1 {
            ab.push(BigInt::zero());
        }
        let m = self.product();
        let ratio = |n: &BigInt, d: &BigInt| ProjectiveRational::from_ratio(n.clone(), d.clone());
        let dict = CfDictionary {
            q_over_p: ratio(&m.q, &m.p)?,
            s_over_r: ratio(&m.s, &m.r)?,
            q_over_s: ratio(&m.q, &m.s)?,
            p_over_r: ratio(&m.p, &m.r)?,
            matrix: m,
        };

        let forward = CfWord::from_integers(ab.iter().cloned());
        let forward_short = CfWord::from_integers(ab[..ab.len() - 1].iter().cloned());
        let backward = CfWord::from_integers(ab.iter().rev().cloned());
        let backward_short = CfWord::from_integers(ab.iter().rev().take(ab.len() - 1).cloned());
        let checks: [(&'static str, &ProjectiveRational, CfWord); 4] = [
            ("q/p = [a1, b1, ..., ak, bk]", &dict.q_over_p, forward),
            ("s/r = [a1, b1, ..., ak]", &dict.s_over_r, forward_short),
            ("q/s = [bk, ak, ..., b1, a1]", &dict.q_over_s, backward),
            ("p/r = [bk, ak, ..., b1]", &dict.p_over_r, backward_short),
        ];
        for (identity, lhs, cf) in checks {
            if &cf.eval()? != lhs {
                return Err(Error::DictionaryMismatch { identity, word: self.to_string() });
            }
        }
        Ok(dict)
    }
}

impl fmt::Display for Sl2Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("I");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, e)| format!("{:?}^{}", Self::generator(i), e))
            .collect();
        write!(f, "{}", Joined(&parts, " "))
    }
}

impl fmt::Debug for Sl2Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The four ratios read off a word product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfDictionary {
    pub matrix: Sl2Matrix,
    pub q_over_p: ProjectiveRational,
    pub s_over_r: ProjectiveRational,
    pub q_over_s: ProjectiveRational,
    pub p_over_r: ProjectiveRational,
}

pub fn generator_power(which: Generator, exponent: impl Into<BigInt>) -> Sl2Matrix {
    Sl2Matrix::generator_power(which, exponent)
}

pub fn word_product(w: &Sl2Word) -> Sl2Matrix {
    w.product()
}

pub fn cf_entries_from_word(w: &Sl2Word) -> Result<CfDictionary> {
    w.cf_dictionary()
}

/// `(-1)^p * 2a` where `a` is the sum of the even expansion's `a` entries.
pub(crate) fn signed_twice_sum(x: &Rational, sum_a: &BigInt) -> BigInt {
    let twice: BigInt = sum_a * 2;
    if x.denom().is_odd() {
        -twice
    } else {
        twice
    }
}

pub(crate) fn require_odd_numerator(x: &Rational) -> Result<()> {
    if x.has_odd_numerator() {
        Ok(())
    } else {
        Err(Error::EvenNumerator { value: x.clone() })
    }
}

/// The word `U^2a1 L^2b1 ... U^2an L^bn U^-(-1)^p 2a` changing
/// `(mu;tau)`-slopes into `(mu;sigma)`-slopes, where `x = q/p` is the
/// `(mu;tau)`-slope of `sigma`.
pub fn change_of_basis_word(x: &Rational) -> Result<Sl2Word> {
    require_odd_numerator(x)?;
    let e = even_cf_expand(x);
    let mut exps = e.entries();
    exps.push(-signed_twice_sum(x, &e.sum_a()));
    Ok(Sl2Word(exps))
}

pub fn change_of_basis(x: &Rational) -> Result<Sl2Matrix> {
    change_of_basis_word(x).map(|w| w.product())
}
