//! Independent cross-checks for the quasi-symmetric specialization.
//!
//! Everything here is built deliberately *without* the placement machinery
//! of the product module, so agreement between the two is evidence rather
//! than tautology:
//!
//! * [`mqsym_oracle_product`] multiplies two diagrams at `(qc, qs) = (1, 1)`
//!   by enumerating candidate output matrices directly: choose which output
//!   columns carry a column of the first factor and which carry a column of
//!   the second (possibly both), and keep every assembly whose top block
//!   restricts to the first factor and bottom block to the second.
//! * [`quasi_shuffle`] is the textbook two-letter recursion on words of
//!   positive integers.
//! * [`black_weight_word`] sends a diagram to its column-sum word; the map
//!   extends to sums and intertwines the `(1, 1)` product with the
//!   quasi-shuffle.
//! * [`mzv_truncated`] evaluates truncated Euler sums, whose stuffle
//!   relations realize the quasi-shuffle numerically.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::diagram::WeightMatrix;
use crate::error::ParseError;
use crate::sum::DiagramSum;

/// A word of positive integers (a composition). The empty word is the
/// unit of the quasi-shuffle algebra and prints as `e`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    pub fn empty() -> Self {
        Composition::default()
    }

    /// Builds a composition, panicking on a zero part: column sums of
    /// packed matrices are positive, and the Euler sums diverge at zero
    /// exponents anyway.
    pub fn new(parts: Vec<u64>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "composition parts are positive");
        Composition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    fn prepend(&self, letter: u64) -> Composition {
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(letter);
        parts.extend_from_slice(&self.parts);
        Composition { parts }
    }

    /// JSON view: the parts as a plain array.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.parts.iter().map(|&p| p.into()).collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "e");
        }
        write!(f, "{}", self.parts.iter().join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Composition {
    type Err = ParseError;

    /// Comma-separated positive integers, or `e` for the empty word.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        if s == "e" {
            return Ok(Composition::empty());
        }
        let parts: Vec<u64> = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                match tok.parse::<u64>() {
                    Ok(p) if p > 0 => Ok(p),
                    _ => Err(ParseError::InvalidPart {
                        text: tok.to_string(),
                    }),
                }
            })
            .collect::<Result<_, _>>()?;
        Ok(Composition { parts })
    }
}

/// An integer linear combination of compositions, the codomain of the
/// word projection and of the quasi-shuffle.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct WordSum {
    terms: BTreeMap<Composition, i64>,
}

impl WordSum {
    pub fn zero() -> Self {
        WordSum::default()
    }

    pub fn basis(w: Composition) -> Self {
        let mut s = WordSum::zero();
        s.add_term(w, 1);
        s
    }

    pub fn add_term(&mut self, w: Composition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot
                    .get()
                    .checked_add(coeff)
                    .expect("word coefficient overflow");
                if sum == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, w: &Composition) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Composition, &i64)> {
        self.terms.iter()
    }

    fn prepend(&self, letter: u64) -> WordSum {
        let mut out = WordSum::zero();
        for (w, &c) in self.iter() {
            out.add_term(w.prepend(letter), c);
        }
        out
    }

    /// JSON view: one `{word, coeff}` object per term, in word order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.iter()
                .map(|(w, c)| serde_json::json!({ "word": w.to_json(), "coeff": c }))
                .collect(),
        )
    }
}

impl fmt::Display for WordSum {
    /// One `"coefficient :: word"` line per term, in word order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (w, c)) in self.iter().enumerate() {
            if pos > 0 {
                writeln!(f)?;
            }
            write!(f, "{c} :: {w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The quasi-shuffle (stuffle) product of two words: interleave the two,
/// optionally adding a letter of one to a letter of the other, by the
/// recursion
/// `(a u) * (b v) = a (u * b v) + b (a u * v) + (a + b) (u * v)`.
pub fn quasi_shuffle(u: &Composition, v: &Composition) -> WordSum {
    if u.is_empty() {
        return WordSum::basis(v.clone());
    }
    if v.is_empty() {
        return WordSum::basis(u.clone());
    }
    let (a, u_rest) = (u.parts[0], Composition::new(u.parts[1..].to_vec()));
    let (b, v_rest) = (v.parts[0], Composition::new(v.parts[1..].to_vec()));
    let mut out = quasi_shuffle(&u_rest, v).prepend(a);
    let mid = quasi_shuffle(u, &v_rest).prepend(b);
    let merged = quasi_shuffle(&u_rest, &v_rest)
        .prepend(a.checked_add(b).expect("letter overflow in quasi-shuffle"));
    for (w, &c) in mid.iter() {
        out.add_term(w.clone(), c);
    }
    for (w, &c) in merged.iter() {
        out.add_term(w.clone(), c);
    }
    out
}

/// The word of column sums of a diagram, read left to right.
pub fn black_weight_word(d: &WeightMatrix) -> Composition {
    Composition::new((0..d.cols()).map(|j| d.col_sum(j)).collect())
}

/// Applies [`black_weight_word`] to every term of a sum. The map is only
/// defined over integer coefficients; a sum still carrying symbolic
/// deformation parameters returns `None`.
pub fn black_word_projection(x: &DiagramSum) -> Option<WordSum> {
    let mut out = WordSum::zero();
    for (d, c) in x.iter() {
        out.add_term(black_weight_word(d), c.as_constant()?);
    }
    Some(out)
}

/// The product of two diagrams at the quasi-symmetric point `(1, 1)`,
/// computed by direct enumeration of candidate outputs.
///
/// An output with `q` columns is determined by the set of columns fed by
/// the first factor and the set fed by the second: both sets are ordered
/// subsets of `0..q` covering every column, sized to the factors' column
/// counts. Stacking the factor rows and routing each factor's columns, in
/// order, into its set produces a packed matrix; every such matrix occurs
/// with coefficient 1.
pub fn mqsym_oracle_product(a: &WeightMatrix, b: &WeightMatrix) -> DiagramSum {
    let (qa, qb) = (a.cols(), b.cols());
    let mut out = DiagramSum::zero();
    for q in qa.max(qb)..=qa + qb {
        for top_set in (0..q).combinations(qa) {
            for bottom_set in (0..q).combinations(qb) {
                let mut covered = vec![false; q];
                for &j in top_set.iter().chain(bottom_set.iter()) {
                    covered[j] = true;
                }
                if !covered.iter().all(|&c| c) {
                    continue;
                }
                let rows = a.rows() + b.rows();
                let mut entries = vec![0u64; rows * q];
                for (src, &dst) in top_set.iter().enumerate() {
                    for r in 0..a.rows() {
                        entries[r * q + dst] = a.entry(r, src);
                    }
                }
                for (src, &dst) in bottom_set.iter().enumerate() {
                    for r in 0..b.rows() {
                        entries[(a.rows() + r) * q + dst] = b.entry(r, src);
                    }
                }
                out.add_term(
                    WeightMatrix::assemble(rows, q, entries),
                    crate::poly::DeformPoly::one(),
                );
            }
        }
    }
    out
}

/// The Euler sum `zeta_N(s_1, ..., s_k)`: the sum of
/// `1 / (n_1^{s_1} ... n_k^{s_k})` over `N >= n_1 > n_2 > ... > n_k >= 1`.
/// The empty composition gives 1. Computed by one dynamic-programming
/// sweep per part, `O(k N)` time.
pub fn mzv_truncated(s: &Composition, n: u64) -> f64 {
    let k = s.len();
    if k == 0 {
        return 1.0;
    }
    let n = n as usize;
    let parts = s.parts();
    // g[m-1] = inner sum with largest index m, built from the innermost
    // part outward.
    let mut g: Vec<f64> = (1..=n).map(|m| neg_pow(m as f64, parts[k - 1])).collect();
    for j in (0..k - 1).rev() {
        let mut prefix = 0.0;
        let mut next = vec![0.0; n];
        for m in 1..=n {
            next[m - 1] = neg_pow(m as f64, parts[j]) * prefix;
            prefix += g[m - 1];
        }
        g = next;
    }
    g.iter().sum()
}

/// `base^(-exp)` for a positive integer exponent.
fn neg_pow(base: f64, exp: u64) -> f64 {
    let e = i32::try_from(exp).unwrap_or(i32::MAX);
    base.powi(-e)
}

/// The limit `zeta(s)` for integer `s >= 2`, via a long truncation plus
/// the Euler-Maclaurin tail correction
/// `M^{1-s}/(s-1) - M^{-s}/2 + s M^{-s-1}/12`, giving far more accuracy
/// than any affordable plain truncation.
fn zeta_limit(s: u64) -> f64 {
    debug_assert!(s >= 2, "zeta(s) requires s >= 2");
    const M: u64 = 1_000_000;
    // Summing smallest terms first keeps the rounding error near machine
    // precision over a million terms.
    let head: f64 = (1..=M).rev().map(|k| neg_pow(k as f64, s)).sum();
    let m = M as f64;
    let sf = s as f64;
    head + m.powf(1.0 - sf) / (sf - 1.0) - 0.5 * m.powf(-sf) + sf / 12.0 * m.powf(-sf - 1.0)
}

/// Measures how far the truncated double sums are from the stuffle
/// identity at the limit: returns
/// `|zeta(a) zeta(b) - zeta_N(a,b) - zeta_N(b,a) - zeta_N(a+b)|`
/// with the single zetas fully converged and the right-hand side cut at
/// `N`. The identity is exact in the limit, and the truncation error
/// decays like `C/N`, so doubling `N` roughly halves the residual.
///
/// Note that cutting *all five* sums at the same `N` satisfies the
/// identity exactly for every `N` (the square of summation indices
/// partitions into the strict upper triangle, strict lower triangle, and
/// diagonal), which is checked in the tests; the interest here is the
/// convergence rate, and that needs the limit on one side.
///
/// Requires `a, b >= 2` so the single zetas converge.
pub fn stuffle_check(a: u64, b: u64, n: u64) -> f64 {
    assert!(a >= 2 && b >= 2, "stuffle check needs exponents >= 2");
    let product = zeta_limit(a) * zeta_limit(b);
    let decomposition = mzv_truncated(&Composition::new(vec![a, b]), n)
        + mzv_truncated(&Composition::new(vec![b, a]), n)
        + mzv_truncated(&Composition::new(vec![a.checked_add(b).expect("exponent overflow")]), n);
    (product - decomposition).abs()
}
