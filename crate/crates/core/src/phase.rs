//! Exact arithmetic in the circle group `T = R/Z`, written additively.
//!
//! Every circle value in this crate is an [`Angle`]: a rational number taken
//! mod 1 plus an integer combination of declared symbols `th1, th2, ...`.
//! Symbols stand for real numbers that are assumed linearly independent over
//! `Q` together with 1, so an angle has finite order exactly when its
//! symbolic part is empty. Multiplicative notation translates as
//! `μ·ν ↦ μ + ν` and `conj(μ) ↦ -μ`; all cocycle formulas in this crate are
//! written in the additive form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact element of the circle group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Angle {
    rational: Ratio<i64>,
    symbolic: BTreeMap<String, i64>,
}

fn wrap(r: Ratio<i128>) -> Ratio<i64> {
    let (p, q) = (*r.numer(), *r.denom());
    let p = p.mod_floor(&q);
    let g = p.gcd(&q).max(1);
    let (p, q) = (p / g, q / g);
    Ratio::new_raw(
        i64::try_from(p).expect("angle numerator overflow"),
        i64::try_from(q).expect("angle denominator overflow"),
    )
}

fn widen(r: &Ratio<i64>) -> Ratio<i128> {
    Ratio::new_raw(*r.numer() as i128, *r.denom() as i128)
}

impl Angle {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The rational angle `p/q` mod 1.
    pub fn rational(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Self {
            rational: wrap(Ratio::new(p as i128, q as i128)),
            symbolic: BTreeMap::new(),
        }
    }

    /// `coeff · name` for a declared symbol.
    pub fn symbol(name: &str, coeff: i64) -> Self {
        let mut symbolic = BTreeMap::new();
        if coeff != 0 {
            symbolic.insert(name.to_string(), coeff);
        }
        Self {
            rational: Ratio::from_integer(0),
            symbolic,
        }
    }

    /// Shorthand for the symbol `th{k}`.
    pub fn theta(k: usize) -> Self {
        Self::symbol(&format!("th{k}"), 1)
    }

    pub fn rational_part(&self) -> Ratio<i64> {
        self.rational
    }

    pub fn symbolic_part(&self) -> &BTreeMap<String, i64> {
        &self.symbolic
    }

    pub fn is_zero(&self) -> bool {
        *self.rational.numer() == 0 && self.symbolic.is_empty()
    }

    /// Torsion elements of `T` are exactly the rational angles.
    pub fn is_torsion(&self) -> bool {
        self.symbolic.is_empty()
    }

    /// Order in `T`, `None` for nontorsion angles.
    pub fn order(&self) -> Option<u64> {
        self.is_torsion().then(|| *self.rational.denom() as u64)
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        let symbolic = self
            .symbolic
            .iter()
            .map(|(s, c)| (s.clone(), c.checked_mul(k).expect("symbolic overflow")))
            .collect();
        Self {
            rational: wrap(widen(&self.rational) * Ratio::from_integer(k as i128)),
            symbolic,
        }
    }
}

impl Add for &Angle {
    type Output = Angle;
    fn add(self, rhs: &Angle) -> Angle {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(mut self, rhs: Angle) -> Angle {
        self += &rhs;
        self
    }
}

impl AddAssign<&Angle> for Angle {
    fn add_assign(&mut self, rhs: &Angle) {
        self.rational = wrap(widen(&self.rational) + widen(&rhs.rational));
        for (s, c) in &rhs.symbolic {
            let entry = self.symbolic.entry(s.clone()).or_insert(0);
            *entry += c;
            if *entry == 0 {
                self.symbolic.remove(s);
            }
        }
    }
}

impl AddAssign for Angle {
    fn add_assign(&mut self, rhs: Angle) {
        *self += &rhs;
    }
}

impl Neg for &Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        self.scale(-1)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        self.scale(-1)
    }
}

impl Sub for &Angle {
    type Output = Angle;
    fn sub(self, rhs: &Angle) -> Angle {
        self + &(-rhs)
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        &self - &rhs
    }
}

impl SubAssign<&Angle> for Angle {
    fn sub_assign(&mut self, rhs: &Angle) {
        *self += &(-rhs);
    }
}

impl std::iter::Sum for Angle {
    fn sum<I: Iterator<Item = Angle>>(iter: I) -> Angle {
        iter.fold(Angle::zero(), |acc, a| acc + a)
    }
}

impl<'a> std::iter::Sum<&'a Angle> for Angle {
    fn sum<I: Iterator<Item = &'a Angle>>(iter: I) -> Angle {
        iter.fold(Angle::zero(), |mut acc, a| {
            acc += a;
            acc
        })
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if *self.rational.numer() != 0 {
            write!(f, "{}/{}", self.rational.numer(), self.rational.denom())?;
            first = false;
        }
        for (s, &c) in &self.symbolic {
            let mag = c.unsigned_abs();
            let body = if mag == 1 {
                s.clone()
            } else {
                format!("{mag}*{s}")
            };
            match (first, c < 0) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Angle({self})")
    }
}

fn parse_int(s: &str, whole: &str) -> Result<i64> {
    s.parse::<i64>()
        .map_err(|_| Error::Parse(format!("bad integer {s:?} in angle {whole:?}")))
}

fn is_symbol(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_term(term: &str, whole: &str) -> Result<Angle> {
    if term.is_empty() {
        return Err(Error::Parse(format!("empty term in angle {whole:?}")));
    }
    if let Some((coeff, sym)) = term.split_once('*') {
        let (coeff, sym) = (coeff.trim(), sym.trim());
        if !is_symbol(sym) {
            return Err(Error::Parse(format!(
                "bad symbol {sym:?} in angle {whole:?}"
            )));
        }
        return Ok(Angle::symbol(sym, parse_int(coeff, whole)?));
    }
    if is_symbol(term) {
        return Ok(Angle::symbol(term, 1));
    }
    if let Some((p, q)) = term.split_once('/') {
        let q = parse_int(q.trim(), whole)?;
        if q == 0 {
            return Err(Error::Parse(format!("zero denominator in angle {whole:?}")));
        }
        return Ok(Angle::rational(parse_int(p.trim(), whole)?, q));
    }
    Ok(Angle::rational(parse_int(term, whole)?, 1))
}

impl FromStr for Angle {
    type Err = Error;

    /// Parses sums like `1/3 + 2*th1 - th2`.
    fn from_str(s: &str) -> Result<Self> {
        let mut total = Angle::zero();
        let mut term = String::new();
        let mut negative = false;
        let mut seen_any = false;
        let flush = |term: &mut String, negative: bool, total: &mut Angle| -> Result<()> {
            let t = term.trim();
            let a = parse_term(t, s)?;
            *total += &if negative { -a } else { a };
            term.clear();
            Ok(())
        };
        for c in s.chars() {
            match c {
                '+' | '-' => {
                    if term.trim().is_empty() {
                        if seen_any {
                            return Err(Error::Parse(format!("dangling sign in angle {s:?}")));
                        }
                    } else {
                        flush(&mut term, negative, &mut total)?;
                    }
                    negative = c == '-';
                    seen_any = true;
                }
                c if c.is_whitespace() => term.push(c),
                c => {
                    term.push(c);
                    seen_any = true;
                }
            }
        }
        flush(&mut term, negative, &mut total)?;
        Ok(total)
    }
}

impl Serialize for Angle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Angle {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
