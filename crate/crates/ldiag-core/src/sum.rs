//! Formal sums of diagrams and of diagram tensors, with coefficients in
//! `Z[qc, qs]`.
//!
//! These are the ambient free modules in which all products, coproducts,
//! and antipodes take values. Terms are kept in a `BTreeMap` keyed by the
//! graded-lex diagram order, so iteration, printing, and JSON output are
//! deterministic, and zero coefficients are dropped on every write.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::diagram::WeightMatrix;
use crate::poly::DeformPoly;

/// Shared behaviour of the two free modules, enough to extend a map
/// defined on basis diagrams bilinearly to whole sums.
pub trait FormalSum: Sized {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// `self += coeff * other`.
    fn add_scaled(&mut self, coeff: &DeformPoly, other: &Self);
}

/// Extends `f`, defined on pairs of basis diagrams, to a bilinear map on
/// sums: `f(sum_i c_i a_i, sum_j e_j b_j) = sum_ij c_i e_j f(a_i, b_j)`.
pub fn bilinear_extend<S, F>(f: F, x: &DiagramSum, y: &DiagramSum) -> S
where
    S: FormalSum,
    F: Fn(&WeightMatrix, &WeightMatrix) -> S,
{
    let mut out = S::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&(ca * cb), &f(a, b));
        }
    }
    out
}

/// A finite `Z[qc, qs]`-linear combination of diagrams.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct DiagramSum {
    terms: BTreeMap<WeightMatrix, DeformPoly>,
}

impl DiagramSum {
    pub fn zero() -> Self {
        DiagramSum::default()
    }

    /// The sum consisting of a single basis diagram with coefficient 1.
    pub fn basis(d: WeightMatrix) -> Self {
        DiagramSum::term(d, DeformPoly::one())
    }

    /// The single term `coeff * d` (empty when `coeff` is zero).
    pub fn term(d: WeightMatrix, coeff: DeformPoly) -> Self {
        let mut s = DiagramSum::zero();
        s.add_term(d, coeff);
        s
    }

    /// The unit of both products: the empty diagram with coefficient 1.
    pub fn unit() -> Self {
        DiagramSum::basis(WeightMatrix::empty())
    }

    /// Adds `coeff * d` into the sum, dropping the entry if it cancels.
    pub fn add_term(&mut self, d: WeightMatrix, coeff: DeformPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + &coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// Coefficient of `d`, zero when absent.
    pub fn coeff(&self, d: &WeightMatrix) -> DeformPoly {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex diagram order.
    pub fn iter(&self) -> impl Iterator<Item = (&WeightMatrix, &DeformPoly)> {
        self.terms.iter()
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &DeformPoly) -> DiagramSum {
        let mut out = DiagramSum::zero();
        for (d, coeff) in self.iter() {
            out.add_term(d.clone(), coeff * c);
        }
        out
    }

    /// Substitutes integers for the deformation parameters in every
    /// coefficient, dropping terms that vanish.
    pub fn eval_coeffs(&self, qc: i64, qs: i64) -> DiagramSum {
        let mut out = DiagramSum::zero();
        for (d, coeff) in self.iter() {
            out.add_term(d.clone(), DeformPoly::constant(coeff.eval(qc, qs)));
        }
        out
    }

    /// One `"coefficient :: matrix"` line per term; the zero sum prints
    /// as `0`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.iter()
                .map(|(d, c)| {
                    serde_json::json!({
                        "coefficient": c.to_json(),
                        "matrix": d.to_json(),
                    })
                })
                .collect(),
        )
    }
}

impl FormalSum for DiagramSum {
    fn zero() -> Self {
        DiagramSum::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_scaled(&mut self, coeff: &DeformPoly, other: &Self) {
        for (d, c) in other.iter() {
            self.add_term(d.clone(), c * coeff);
        }
    }
}

impl Add for &DiagramSum {
    type Output = DiagramSum;
    fn add(self, rhs: &DiagramSum) -> DiagramSum {
        let mut out = self.clone();
        out.add_scaled(&DeformPoly::one(), rhs);
        out
    }
}

impl Sub for &DiagramSum {
    type Output = DiagramSum;
    fn sub(self, rhs: &DiagramSum) -> DiagramSum {
        let mut out = self.clone();
        out.add_scaled(&DeformPoly::constant(-1), rhs);
        out
    }
}

impl Neg for &DiagramSum {
    type Output = DiagramSum;
    fn neg(self) -> DiagramSum {
        &DiagramSum::zero() - self
    }
}

impl Add for DiagramSum {
    type Output = DiagramSum;
    fn add(self, rhs: DiagramSum) -> DiagramSum {
        &self + &rhs
    }
}

impl Sub for DiagramSum {
    type Output = DiagramSum;
    fn sub(self, rhs: DiagramSum) -> DiagramSum {
        &self - &rhs
    }
}

impl Neg for DiagramSum {
    type Output = DiagramSum;
    fn neg(self) -> DiagramSum {
        -&self
    }
}

impl fmt::Display for DiagramSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (d, c)) in self.iter().enumerate() {
            if pos > 0 {
                writeln!(f)?;
            }
            write!(f, "{c} :: {d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DiagramSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A finite linear combination of ordered diagram pairs `left (x) right`,
/// the codomain of the coproducts.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct TensorSum {
    terms: BTreeMap<(WeightMatrix, WeightMatrix), DeformPoly>,
}

impl TensorSum {
    pub fn zero() -> Self {
        TensorSum::default()
    }

    pub fn basis(left: WeightMatrix, right: WeightMatrix) -> Self {
        TensorSum::term(left, right, DeformPoly::one())
    }

    pub fn term(left: WeightMatrix, right: WeightMatrix, coeff: DeformPoly) -> Self {
        let mut s = TensorSum::zero();
        s.add_term(left, right, coeff);
        s
    }

    pub fn add_term(&mut self, left: WeightMatrix, right: WeightMatrix, coeff: DeformPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + &coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, left: &WeightMatrix, right: &WeightMatrix) -> DeformPoly {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(WeightMatrix, WeightMatrix), &DeformPoly)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &DeformPoly) -> TensorSum {
        let mut out = TensorSum::zero();
        for ((l, r), coeff) in self.iter() {
            out.add_term(l.clone(), r.clone(), coeff * c);
        }
        out
    }

    /// The flip `a (x) b -> b (x) a`; a coproduct is cocommutative exactly
    /// when its image is fixed by this map.
    pub fn swap_factors(&self) -> TensorSum {
        let mut out = TensorSum::zero();
        for ((l, r), coeff) in self.iter() {
            out.add_term(r.clone(), l.clone(), coeff.clone());
        }
        out
    }

    /// Outer tensor of two diagram sums:
    /// `(sum c_i a_i) (x) (sum e_j b_j) = sum c_i e_j (a_i (x) b_j)`.
    pub fn tensor(x: &DiagramSum, y: &DiagramSum) -> TensorSum {
        let mut out = TensorSum::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_term(a.clone(), b.clone(), ca * cb);
            }
        }
        out
    }

    /// Componentwise product of tensors, with `prod` supplying the product
    /// of basis diagrams: `(a (x) b)(c (x) d) = prod(a,c) (x) prod(b,d)`,
    /// extended bilinearly. This is the right-hand side of the bialgebra
    /// compatibility law.
    pub fn mul_componentwise<F>(&self, other: &TensorSum, prod: F) -> TensorSum
    where
        F: Fn(&WeightMatrix, &WeightMatrix) -> DiagramSum,
    {
        let mut out = TensorSum::zero();
        for ((a, b), c1) in self.iter() {
            for ((c, d), c2) in other.iter() {
                let left = prod(a, c);
                let right = prod(b, d);
                out.add_scaled(&(c1 * c2), &TensorSum::tensor(&left, &right));
            }
        }
        out
    }

    /// Applies `f` to the left leg of every term, keeping the right leg:
    /// `a (x) b -> f(a) (x) b`.
    pub fn map_left<F>(&self, f: F) -> TensorSum
    where
        F: Fn(&WeightMatrix) -> DiagramSum,
    {
        let mut out = TensorSum::zero();
        for ((l, r), c) in self.iter() {
            out.add_scaled(c, &TensorSum::tensor(&f(l), &DiagramSum::basis(r.clone())));
        }
        out
    }

    /// Contracts each term `c * (a (x) b)` to `c * m(a, b)` for a product
    /// map `m`, summing the results.
    pub fn fold_product<F>(&self, m: F) -> DiagramSum
    where
        F: Fn(&WeightMatrix, &WeightMatrix) -> DiagramSum,
    {
        let mut out = DiagramSum::zero();
        for ((l, r), c) in self.iter() {
            out.add_scaled(c, &m(l, r));
        }
        out
    }

    /// One `"coefficient :: left (x) right"` line per term.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.iter()
                .map(|((l, r), c)| {
                    serde_json::json!({
                        "coefficient": c.to_json(),
                        "left": l.to_json(),
                        "right": r.to_json(),
                    })
                })
                .collect(),
        )
    }
}

impl FormalSum for TensorSum {
    fn zero() -> Self {
        TensorSum::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_scaled(&mut self, coeff: &DeformPoly, other: &Self) {
        for ((l, r), c) in other.iter() {
            self.add_term(l.clone(), r.clone(), c * coeff);
        }
    }
}

impl Add for &TensorSum {
    type Output = TensorSum;
    fn add(self, rhs: &TensorSum) -> TensorSum {
        let mut out = self.clone();
        out.add_scaled(&DeformPoly::one(), rhs);
        out
    }
}

impl Sub for &TensorSum {
    type Output = TensorSum;
    fn sub(self, rhs: &TensorSum) -> TensorSum {
        let mut out = self.clone();
        out.add_scaled(&DeformPoly::constant(-1), rhs);
        out
    }
}

impl fmt::Display for TensorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, ((l, r), c)) in self.iter().enumerate() {
            if pos > 0 {
                writeln!(f)?;
            }
            write!(f, "{c} :: {l} \u{2297} {r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> WeightMatrix {
        s.parse().expect("test matrix must parse")
    }

    fn p(s: &str) -> DeformPoly {
        s.parse().expect("test polynomial must parse")
    }

    #[test]
    fn add_term_normalizes() {
        let mut s = DiagramSum::zero();
        s.add_term(m("1"), p("qc"));
        s.add_term(m("1"), p("-qc"));
        assert!(s.is_zero());
        assert_eq!(s.num_terms(), 0);
        s.add_term(m("2"), DeformPoly::zero());
        assert!(s.is_zero());
    }

    #[test]
    fn coeff_lookup_defaults_to_zero() {
        let s = DiagramSum::term(m("1 1"), p("1 + qs"));
        assert_eq!(s.coeff(&m("1 1")), p("1 + qs"));
        assert_eq!(s.coeff(&m("2")), DeformPoly::zero());
    }

    #[test]
    fn module_ops() {
        let a = DiagramSum::basis(m("1"));
        let b = DiagramSum::term(m("2"), p("qc"));
        let two_a = &a + &a;
        assert_eq!(two_a.coeff(&m("1")), p("2"));
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!((-&a).coeff(&m("1")), p("-1"));
        assert_eq!(a.scale(&p("qs")).coeff(&m("1")), p("qs"));
    }

    #[test]
    fn eval_coeffs_drops_vanishing_terms() {
        let mut s = DiagramSum::zero();
        s.add_term(m("1"), p("qc"));
        s.add_term(m("2"), p("1 + qs"));
        let at_zero = s.eval_coeffs(0, 0);
        assert_eq!(at_zero.num_terms(), 1);
        assert_eq!(at_zero.coeff(&m("2")), DeformPoly::one());
    }

    #[test]
    fn display_orders_terms_graded_lex() {
        let mut s = DiagramSum::zero();
        s.add_term(m("1 0; 0 1"), DeformPoly::one());
        s.add_term(m("1; 1"), p("qc"));
        s.add_term(m("1 1"), p("qs"));
        assert_eq!(s.to_string(), "qs :: 1 1\nqc :: 1; 1\n1 :: 1 0; 0 1");
        assert_eq!(DiagramSum::zero().to_string(), "0");
    }

    #[test]
    fn bilinear_extension_distributes() {
        let f = |a: &WeightMatrix, b: &WeightMatrix| DiagramSum::basis(a.concat(b));
        let x = &DiagramSum::basis(m("1")) + &DiagramSum::term(m("2"), p("qc"));
        let y = DiagramSum::term(m("1"), p("qs"));
        let out: DiagramSum = bilinear_extend(f, &x, &y);
        assert_eq!(out.coeff(&m("1 0; 0 1")), p("qs"));
        assert_eq!(out.coeff(&m("2 0; 0 1")), p("qc*qs"));
        assert_eq!(out.num_terms(), 2);
    }

    #[test]
    fn tensor_outer_product_and_swap() {
        let x = &DiagramSum::basis(m("1")) + &DiagramSum::basis(m("2"));
        let y = DiagramSum::term(m("1 1"), p("qs"));
        let t = TensorSum::tensor(&x, &y);
        assert_eq!(t.num_terms(), 2);
        assert_eq!(t.coeff(&m("1"), &m("1 1")), p("qs"));
        let flipped = t.swap_factors();
        assert_eq!(flipped.coeff(&m("1 1"), &m("1")), p("qs"));
        assert_eq!(flipped.swap_factors(), t);
    }

    #[test]
    fn componentwise_product_uses_supplied_multiplication() {
        let concat = |a: &WeightMatrix, b: &WeightMatrix| DiagramSum::basis(a.concat(b));
        let t1 = TensorSum::basis(m("1"), WeightMatrix::empty());
        let t2 = TensorSum::basis(WeightMatrix::empty(), m("2"));
        let prod = t1.mul_componentwise(&t2, concat);
        assert_eq!(prod, TensorSum::basis(m("1"), m("2")));
    }

    #[test]
    fn fold_product_contracts_tensors() {
        let concat = |a: &WeightMatrix, b: &WeightMatrix| DiagramSum::basis(a.concat(b));
        let mut t = TensorSum::zero();
        t.add_term(m("1"), m("2"), p("qc"));
        t.add_term(WeightMatrix::empty(), m("1"), p("3"));
        let folded = t.fold_product(concat);
        assert_eq!(folded.coeff(&m("1 0; 0 2")), p("qc"));
        assert_eq!(folded.coeff(&m("1")), p("3"));
    }

    #[test]
    fn tensor_display_format() {
        let t = TensorSum::term(m("1"), m("2"), p("qc"));
        assert_eq!(t.to_string(), "qc :: 1 \u{2297} 2");
        assert_eq!(TensorSum::zero().to_string(), "0");
    }
}
