//! Laurent polynomials in `A` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::anyon_models::UnitPhase;
use crate::error::{Error, Result};

/// Sparse Laurent polynomial `Σ c_e A^e`. Zero coefficients are never stored,
/// so structural equality is polynomial equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// The loop value `d = -A² - A⁻²`.
    pub fn loop_value() -> Self {
        LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by `A^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e + shift, c)).collect() }
    }

    /// Substitutes `A ↦ A⁻¹`.
    pub fn mirror(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Evaluates at a unit phase, reducing each exponent exactly first.
    pub fn evaluate(&self, a: UnitPhase) -> Complex64 {
        self.terms.iter().map(|(&e, &c)| a.pow(i64::from(e)) * c as f64).sum()
    }

    pub fn evaluate_complex(&self, a: Complex64) -> Complex64 {
        self.terms.iter().map(|(&e, &c)| a.powi(e) * c as f64).sum()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, &c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self + (-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Terms in descending exponent order, e.g. `-A^4 - A^-4`, `2*A^3 + 1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (e, 1) => write!(f, "{}", power(e))?,
                (e, m) => write!(f, "{m}*{}", power(e))?,
            }
        }
        Ok(())
    }
}

fn power(e: i32) -> String {
    if e == 1 {
        "A".to_string()
    } else {
        format!("A^{e}")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts the [`Display`](fmt::Display) format; whitespace is optional
    /// and `−` (U+2212) is read as a minus sign.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.replace('\u{2212}', "-").chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = LaurentPoly::zero();
        let bytes = cleaned.as_bytes();
        let mut start = 0;
        let mut i = 0;
        // split on + or - that are not exponent signs
        while i <= bytes.len() {
            let boundary = i == bytes.len() || (i > start && (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^');
            if boundary {
                let (e, c) = parse_term(&cleaned[start..i])?;
                out.add_term(e, c);
                start = i;
            }
            i += 1;
        }
        Ok(out)
    }
}

fn parse_term(term: &str) -> Result<(i32, i64)> {
    let bad = || Error::Parse(format!("cannot parse Laurent term `{term}`"));
    let (sign, body) = match term.as_bytes().first() {
        Some(b'-') => (-1, &term[1..]),
        Some(b'+') => (1, &term[1..]),
        _ => (1, term),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let (coeff_str, var) = match body.find('A') {
        None => return body.parse::<i64>().map(|c| (0, sign * c)).map_err(|_| bad()),
        Some(pos) => (body[..pos].trim_end_matches('*'), &body[pos + 1..]),
    };
    let coeff = if coeff_str.is_empty() { 1 } else { coeff_str.parse::<i64>().map_err(|_| bad())? };
    let exp = if var.is_empty() {
        1
    } else {
        var.strip_prefix('^').ok_or_else(bad)?.parse::<i32>().map_err(|_| bad())?
    };
    Ok((exp, sign * coeff))
}
