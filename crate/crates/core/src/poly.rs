use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer Laurent polynomial in one variable. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, exp);
        p
    }

    pub fn add_term(&mut self, coeff: i64, exp: i32) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    /// p(x) -> p(1/x)
    pub fn invert_variable(&self) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    /// Multiplies every exponent by `k`.
    pub fn scale_exponents(&self, k: i32) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (e * k, c)).collect() }
    }

    /// Divides every exponent by `k`; fails if some exponent is not a multiple.
    pub fn divide_exponents(&self, k: i32) -> Result<Self> {
        if self.terms.keys().any(|e| e % k != 0) {
            return Err(Error::Table(format!("exponents of {self} not divisible by {k}")));
        }
        Ok(LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (e / k, c)).collect() })
    }

    pub fn shift(&self, by: i32) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (e + by, c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Parses text like `t^(-2)-t^(-1)+1-t+2*t^3` in the variable `var`.
    pub fn parse(text: &str, var: char) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Table(format!("cannot parse polynomial {text:?}"));
        let mut p = Self::zero();
        if s.is_empty() {
            return Err(bad());
        }
        // split at top-level signs
        let mut pieces = Vec::new();
        let mut cur = String::new();
        let mut depth = 0;
        for ch in s.chars() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 && !cur.is_empty() && !cur.ends_with('^') => {
                    pieces.push(std::mem::take(&mut cur));
                }
                _ => {}
            }
            cur.push(ch);
        }
        pieces.push(cur);
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            let (coeff_txt, mono) = match body.find(var) {
                None => (body, None),
                Some(pos) => (body[..pos].trim_end_matches('*'), Some(&body[pos + 1..])),
            };
            let coeff: i64 = if coeff_txt.is_empty() { 1 } else { coeff_txt.parse().map_err(|_| bad())? };
            let exp: i32 = match mono {
                None => 0,
                Some("") => 1,
                Some(rest) => {
                    let e = rest.strip_prefix('^').ok_or_else(bad)?;
                    e.trim_start_matches('(').trim_end_matches(')').parse().map_err(|_| bad())?
                }
            };
            p.add_term(sign * coeff, exp);
        }
        Ok(p)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(c, e);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }
}

impl LaurentPolynomial {
    /// Renders in the same style `parse` accepts.
    pub fn render(&self, var: char) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (&e, &c)) in self.terms.iter().enumerate() {
            if c < 0 {
                s.push('-');
            } else if i > 0 {
                s.push('+');
            }
            let mag = c.abs();
            let power = match e {
                0 => String::new(),
                1 => var.to_string(),
                e if e < 0 => format!("{var}^({e})"),
                e => format!("{var}^{e}"),
            };
            match (mag, e) {
                (m, 0) => s.push_str(&m.to_string()),
                (1, _) => s.push_str(&power),
                (m, _) => s.push_str(&format!("{m}*{power}")),
            }
        }
        s
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render('x'))
    }
}
