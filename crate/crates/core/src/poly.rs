//! Sparse polynomials in `s` and `t` with positive integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A polynomial `Σ c·s^a·t^b` with no zero coefficients stored.
///
/// The canonical text form lists terms by ascending `(a, b)` as
/// `c*s^a*t^b`, eliding `s^0`, `t^0`, exponents equal to 1 and
/// coefficients equal to 1, joined by ` + `. The zero polynomial prints as `0`.
///
/// ```
/// use rackkit::TwoVarPoly;
///
/// let mut p = TwoVarPoly::new();
/// p.add_term(3, 1, 1);
/// p.add_term(0, 1, 2);
/// assert_eq!(p.to_string(), "2*t + s^3*t");
/// assert_eq!("2*t + s^3*t".parse::<TwoVarPoly>().unwrap(), p);
/// ```
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoVarPoly {
    terms: BTreeMap<(u32, u32), u64>,
}

impl TwoVarPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(coefficient: u64, s_exp: u32, t_exp: u32) -> Self {
        let mut p = Self::new();
        if coefficient > 0 {
            p.terms.insert((s_exp, t_exp), coefficient);
        }
        p
    }

    /// Adds `coefficient · s^s_exp · t^t_exp`.
    pub fn add_term(&mut self, s_exp: u32, t_exp: u32, coefficient: u64) {
        if coefficient > 0 {
            *self.terms.entry((s_exp, t_exp)).or_insert(0) += coefficient;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `((s_exp, t_exp), coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn coefficient(&self, s_exp: u32, t_exp: u32) -> u64 {
        self.terms.get(&(s_exp, t_exp)).copied().unwrap_or(0)
    }

    pub fn coefficient_sum(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Exchanges the roles of `s` and `t`.
    pub fn swap_variables(&self) -> Self {
        TwoVarPoly {
            terms: self.terms.iter().map(|(&(a, b), &c)| ((b, a), c)).collect(),
        }
    }
}

impl fmt::Debug for TwoVarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwoVarPoly({self})")
    }
}

fn power(var: &str, exp: u32) -> Option<String> {
    match exp {
        0 => None,
        1 => Some(var.to_string()),
        e => Some(format!("{var}^{e}")),
    }
}

impl fmt::Display for TwoVarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, b), &c)| {
                let vars: Vec<String> = [power("s", a), power("t", b)]
                    .into_iter()
                    .flatten()
                    .collect();
                if vars.is_empty() {
                    c.to_string()
                } else if c == 1 {
                    vars.join("*")
                } else {
                    format!("{c}*{}", vars.join("*"))
                }
            })
            .collect();
        f.write_str(&rendered.join(" + "))
    }
}

/// Parses sums of terms such as `2*t + s^3*t`, `6` or `3s^3t^3`; the `*`
/// separators are optional. Repeated monomials are combined.
impl FromStr for TwoVarPoly {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::MalformedPolynomial(msg);
        let mut poly = TwoVarPoly::new();
        let text = text.trim();
        if text == "0" {
            return Ok(poly);
        }
        for term in text.split('+') {
            let term: String = term
                .chars()
                .filter(|c| !c.is_whitespace() && *c != '*')
                .collect();
            if term.is_empty() {
                return Err(bad(format!("empty term in {text:?}")));
            }
            let chars: Vec<char> = term.chars().collect();
            let mut i = 0;
            let read_number = |i: &mut usize| -> Option<u64> {
                let start = *i;
                while *i < chars.len() && chars[*i].is_ascii_digit() {
                    *i += 1;
                }
                if *i == start {
                    None
                } else {
                    chars[start..*i].iter().collect::<String>().parse().ok()
                }
            };
            let coefficient = read_number(&mut i).unwrap_or(1);
            let (mut a, mut b) = (0u32, 0u32);
            while i < chars.len() {
                let var = chars[i];
                i += 1;
                let exp = if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    read_number(&mut i)
                        .ok_or_else(|| bad(format!("missing exponent in {term:?}")))?
                } else {
                    1
                } as u32;
                match var {
                    's' => a += exp,
                    't' => b += exp,
                    other => return Err(bad(format!("unexpected {other:?} in {term:?}"))),
                }
            }
            poly.add_term(a, b, coefficient);
        }
        Ok(poly)
    }
}
