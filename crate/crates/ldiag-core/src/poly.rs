//! Exact polynomial coefficients in the two deformation parameters.
//!
//! [`DeformPoly`] is an element of `Z[qc, qs]`, stored sparsely as a map
//! from exponent pairs to non-zero `i64` coefficients. All arithmetic is
//! checked: an overflowing coefficient panics rather than wrapping, so a
//! result that comes back is exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::ParseError;

/// A polynomial in the crossing parameter `qc` and the superposition
/// parameter `qs`, with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct DeformPoly {
    /// `(qc exponent, qs exponent) -> coefficient`; zero coefficients are
    /// never stored, so `terms.is_empty()` means the zero polynomial.
    terms: BTreeMap<(u64, u64), i64>,
}

impl DeformPoly {
    pub fn zero() -> Self {
        DeformPoly::default()
    }

    pub fn one() -> Self {
        DeformPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        DeformPoly::monomial(0, 0, c)
    }

    /// The single term `coeff * qc^qc_exp * qs^qs_exp`.
    pub fn monomial(qc_exp: u64, qs_exp: u64, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert((qc_exp, qs_exp), coeff);
        }
        DeformPoly { terms }
    }

    pub fn qc() -> Self {
        DeformPoly::monomial(1, 0, 1)
    }

    pub fn qs() -> Self {
        DeformPoly::monomial(0, 1, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant() == Some(1)
    }

    /// `Some(c)` when the polynomial is the constant `c` (including 0).
    pub fn as_constant(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&(0, 0)).copied(),
            _ => None,
        }
    }

    /// Number of stored (non-zero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `qc^a * qs^b`, zero when absent.
    pub fn coeff(&self, qc_exp: u64, qs_exp: u64) -> i64 {
        self.terms.get(&(qc_exp, qs_exp)).copied().unwrap_or(0)
    }

    /// Terms in graded-lex order: total degree, then `qc` degree, then
    /// `qs` degree, all ascending. Display and JSON both use this order.
    pub fn graded_terms(&self) -> Vec<(u64, u64, i64)> {
        let mut v: Vec<(u64, u64, i64)> = self.terms.iter().map(|(&(a, b), &c)| (a, b, c)).collect();
        v.sort_unstable_by_key(|&(a, b, _)| (a + b, a, b));
        v
    }

    fn add_term(&mut self, key: (u64, u64), coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(key).or_insert(0);
        *slot = slot.checked_add(coeff).expect("coefficient overflow");
        if *slot == 0 {
            self.terms.remove(&key);
        }
    }

    /// Substitutes integers for `qc` and `qs`, with checked arithmetic.
    pub fn eval(&self, qc: i64, qs: i64) -> i64 {
        let mut acc: i64 = 0;
        for (&(a, b), &c) in &self.terms {
            let pa = checked_pow(qc, a);
            let pb = checked_pow(qs, b);
            let term = pa
                .checked_mul(pb)
                .and_then(|p| p.checked_mul(c))
                .expect("overflow while evaluating polynomial");
            acc = acc.checked_add(term).expect("overflow while evaluating polynomial");
        }
        acc
    }

    /// Serializes to a JSON array of `{qc_exp, qs_exp, coeff}` objects in
    /// graded-lex order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.graded_terms()
                .into_iter()
                .map(|(a, b, c)| {
                    serde_json::json!({
                        "qc_exp": a,
                        "qs_exp": b,
                        "coeff": c,
                    })
                })
                .collect(),
        )
    }
}

fn checked_pow(base: i64, exp: u64) -> i64 {
    let exp: u32 = exp.try_into().expect("exponent too large to evaluate");
    base.checked_pow(exp).expect("overflow while evaluating polynomial")
}

impl Add for &DeformPoly {
    type Output = DeformPoly;

    fn add(self, rhs: &DeformPoly) -> DeformPoly {
        let mut out = self.clone();
        for (&k, &c) in &rhs.terms {
            out.add_term(k, c);
        }
        out
    }
}

impl Sub for &DeformPoly {
    type Output = DeformPoly;

    fn sub(self, rhs: &DeformPoly) -> DeformPoly {
        let mut out = self.clone();
        for (&k, &c) in &rhs.terms {
            out.add_term(k, c.checked_neg().expect("coefficient overflow"));
        }
        out
    }
}

impl Mul for &DeformPoly {
    type Output = DeformPoly;

    fn mul(self, rhs: &DeformPoly) -> DeformPoly {
        let mut out = DeformPoly::zero();
        for (&(a1, b1), &c1) in &self.terms {
            for (&(a2, b2), &c2) in &rhs.terms {
                let key = (
                    a1.checked_add(a2).expect("exponent overflow"),
                    b1.checked_add(b2).expect("exponent overflow"),
                );
                out.add_term(key, c1.checked_mul(c2).expect("coefficient overflow"));
            }
        }
        out
    }
}

impl Neg for &DeformPoly {
    type Output = DeformPoly;

    fn neg(self) -> DeformPoly {
        let mut out = DeformPoly::zero();
        for (&k, &c) in &self.terms {
            out.add_term(k, c.checked_neg().expect("coefficient overflow"));
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for DeformPoly {
            type Output = DeformPoly;
            fn $method(self, rhs: DeformPoly) -> DeformPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&DeformPoly> for DeformPoly {
            type Output = DeformPoly;
            fn $method(self, rhs: &DeformPoly) -> DeformPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for DeformPoly {
    type Output = DeformPoly;
    fn neg(self) -> DeformPoly {
        -&self
    }
}

impl fmt::Display for DeformPoly {
    /// Graded-lex term order, `*` between factors, `^` for exponents above
    /// 1, coefficients 1 and -1 suppressed next to variables: for example
    /// `1 + 2*qc + qc*qs^2`. The zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (pos, (a, b, c)) in self.graded_terms().into_iter().enumerate() {
            if pos == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.unsigned_abs();
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 || (a == 0 && b == 0) {
                factors.push(mag.to_string());
            }
            for (var, e) in [("qc", a), ("qs", b)] {
                if e == 1 {
                    factors.push(var.to_string());
                } else if e > 1 {
                    factors.push(format!("{var}^{e}"));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for DeformPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for DeformPoly {
    type Err = ParseError;

    /// Accepts the [`Display`] grammar: terms joined by `+`/`-`, each a
    /// `*`-product of an optional integer and optional `qc^k` / `qs^k`
    /// factors. Whitespace around tokens is ignored.
    ///
    /// [`Display`]: fmt::Display
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseError::InvalidPolyTerm {
                text: String::new(),
            });
        }
        let mut out = DeformPoly::zero();
        // Split into signed terms at top level; the grammar has no
        // parentheses, so every '+'/'-' separates terms.
        let mut term = String::new();
        let mut sign: i64 = 1;
        let mut terms: Vec<(i64, String)> = Vec::new();
        for (i, ch) in s.char_indices() {
            match ch {
                '+' | '-' => {
                    if term.trim().is_empty() && i != 0 {
                        return Err(ParseError::InvalidPolyTerm {
                            text: s.to_string(),
                        });
                    }
                    if !term.trim().is_empty() {
                        terms.push((sign, std::mem::take(&mut term)));
                    }
                    sign = if ch == '-' { -1 } else { 1 };
                }
                _ => term.push(ch),
            }
        }
        if term.trim().is_empty() {
            return Err(ParseError::InvalidPolyTerm {
                text: s.to_string(),
            });
        }
        terms.push((sign, term));

        for (sign, text) in terms {
            let (key, coeff) = parse_term(text.trim())?;
            out.add_term(key, sign * coeff);
        }
        Ok(out)
    }
}

/// Parses one unsigned term like `2*qc*qs^2`, `qs`, or `7`.
fn parse_term(text: &str) -> Result<((u64, u64), i64), ParseError> {
    let bad = || ParseError::InvalidPolyTerm {
        text: text.to_string(),
    };
    let mut coeff: i64 = 1;
    let mut qc_exp: u64 = 0;
    let mut qs_exp: u64 = 0;
    for factor in text.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(bad());
        }
        if let Some(rest) = factor.strip_prefix("qc").or_else(|| factor.strip_prefix("qs")) {
            let exp: u64 = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .and_then(|e| e.parse().ok())
                    .ok_or_else(bad)?
            };
            let slot = if factor.starts_with("qc") {
                &mut qc_exp
            } else {
                &mut qs_exp
            };
            *slot = slot.checked_add(exp).ok_or_else(bad)?;
        } else {
            let c: i64 = factor.parse().map_err(|_| bad())?;
            coeff = coeff.checked_mul(c).ok_or_else(bad)?;
        }
    }
    Ok(((qc_exp, qs_exp), coeff))
}
