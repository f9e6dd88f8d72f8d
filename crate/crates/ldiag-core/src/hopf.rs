//! Coproducts, counit, antipode, and axiom verification.
//!
//! The product deformation carries two coproducts, selected by a third
//! parameter `t` that only takes the values 0 and 1:
//!
//! * `t = 0`: split the black spots (or, in the row variant, the white
//!   spots) into an ordered pair of arbitrary subsets, restricting the
//!   diagram to each side. This coproduct is cocommutative.
//! * `t = 1`: cut the column sequence at each of the `q + 1` positions,
//!   a deconcatenation. Not cocommutative.
//!
//! Exactly two parameter points `(qc, qs, t)` make the product and
//! coproduct a Hopf algebra together: `(0, 0, 0)`, where the product is
//! plain concatenation, and `(1, 1, 1)`, the quasi-symmetric point. Mixed
//! points fail the bialgebra compatibility law, and [`verify_hopf_axioms`]
//! exhibits concrete counterexamples. The antipode therefore only runs on
//! the two verified structures; both are graded connected bialgebras, so
//! it is computed by the standard recursion
//! `S(d) = -d - sum S(d') * d''` over the proper coproduct terms of `d`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::diagram::WeightMatrix;
use crate::error::HopfError;
use crate::poly::DeformPoly;
use crate::product::deformed_product_at;
use crate::sum::{DiagramSum, FormalSum, TensorSum};

/// Which family of spots the `t = 0` coproduct splits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitVariant {
    /// Split the black spots (columns). The default.
    Black,
    /// Split the white spots (rows).
    White,
}

impl fmt::Display for SplitVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitVariant::Black => write!(f, "black-split"),
            SplitVariant::White => write!(f, "white-split"),
        }
    }
}

/// A point of the deformation: integer values for `qc` and `qs`, the
/// coproduct selector `t`, and the `t = 0` split variant (ignored at
/// `t = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HopfStructure {
    qc: i64,
    qs: i64,
    t: i64,
    variant: SplitVariant,
}

impl HopfStructure {
    /// The concatenation endpoint `(0, 0, 0)`.
    pub fn ldiag() -> Self {
        HopfStructure {
            qc: 0,
            qs: 0,
            t: 0,
            variant: SplitVariant::Black,
        }
    }

    /// The quasi-symmetric endpoint `(1, 1, 1)`.
    pub fn mqsym() -> Self {
        HopfStructure {
            qc: 1,
            qs: 1,
            t: 1,
            variant: SplitVariant::Black,
        }
    }

    /// An arbitrary parameter point. Only `t` is constrained (it selects
    /// one of the two coproducts); `qc` and `qs` are free, so most of the
    /// resulting structures are bialgebra-incompatible, which is what
    /// [`verify_hopf_axioms`] is for.
    pub fn new(qc: i64, qs: i64, t: i64, variant: SplitVariant) -> Result<Self, HopfError> {
        if t != 0 && t != 1 {
            return Err(HopfError::UnsupportedT(t));
        }
        Ok(HopfStructure { qc, qs, t, variant })
    }

    pub fn qc(&self) -> i64 {
        self.qc
    }

    pub fn qs(&self) -> i64 {
        self.qs
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn variant(&self) -> SplitVariant {
        self.variant
    }

    /// True exactly for the two Hopf points `(0, 0, 0)` and `(1, 1, 1)`.
    pub fn is_verified(&self) -> bool {
        (self.qc, self.qs, self.t) == (0, 0, 0) || (self.qc, self.qs, self.t) == (1, 1, 1)
    }

    /// The deformed product evaluated at this structure's parameters.
    pub fn product(&self, x: &DiagramSum, y: &DiagramSum) -> DiagramSum {
        deformed_product_at(x, y, self.qc, self.qs)
    }

    /// The coproduct selected by `t`, on a basis diagram.
    pub fn coproduct(&self, d: &WeightMatrix) -> TensorSum {
        if self.t == 0 {
            coproduct_t0(d, self.variant)
        } else {
            coproduct_t1(d)
        }
    }

    /// Linear extension of the coproduct to sums.
    pub fn coproduct_sum(&self, x: &DiagramSum) -> TensorSum {
        let mut out = TensorSum::zero();
        for (d, c) in x.iter() {
            out.add_scaled(c, &self.coproduct(d));
        }
        out
    }
}

/// The `t = 0` coproduct: sum over ordered splits of the chosen spot
/// family into a subset and its complement, each side restricted and
/// repacked. `2^q` terms (or `2^p` for the row variant), coefficient 1
/// each, and manifestly cocommutative because complementation pairs the
/// terms off.
pub fn coproduct_t0(d: &WeightMatrix, variant: SplitVariant) -> TensorSum {
    let n = match variant {
        SplitVariant::Black => d.cols(),
        SplitVariant::White => d.rows(),
    };
    assert!(n < 63, "subset coproduct over more than 62 spots");
    let restrict = |keep: &[usize]| match variant {
        SplitVariant::Black => d.restrict_columns(keep).expect("indices are in range"),
        SplitVariant::White => d.restrict_rows(keep).expect("indices are in range"),
    };
    let mut out = TensorSum::zero();
    for mask in 0u64..(1u64 << n) {
        let keep: Vec<usize> = (0..n).filter(|j| mask & (1 << j) != 0).collect();
        let rest: Vec<usize> = (0..n).filter(|j| mask & (1 << j) == 0).collect();
        out.add_term(restrict(&keep), restrict(&rest), DeformPoly::one());
    }
    out
}

/// The `t = 1` coproduct: deconcatenation of the column sequence at each
/// of the `q + 1` cut positions, each side repacked.
pub fn coproduct_t1(d: &WeightMatrix) -> TensorSum {
    let q = d.cols();
    let mut out = TensorSum::zero();
    for cut in 0..=q {
        let head: Vec<usize> = (0..cut).collect();
        let tail: Vec<usize> = (cut..q).collect();
        out.add_term(
            d.restrict_columns(&head).expect("prefix is in range"),
            d.restrict_columns(&tail).expect("suffix is in range"),
            DeformPoly::one(),
        );
    }
    out
}

/// The counit: the coefficient of the empty diagram.
pub fn counit(x: &DiagramSum) -> DeformPoly {
    x.coeff(&WeightMatrix::empty())
}

/// The antipode of a basis diagram under a verified Hopf structure.
///
/// Both verified structures are graded and connected, so the antipode is
/// the usual recursion over proper coproduct terms; results for repeated
/// subdiagrams are memoized within one call. Unverified structures are
/// rejected: without the bialgebra law the recursion computes nothing
/// meaningful.
pub fn antipode(d: &WeightMatrix, h: &HopfStructure) -> Result<DiagramSum, HopfError> {
    if !h.is_verified() {
        return Err(HopfError::UnverifiedStructure {
            qc: h.qc,
            qs: h.qs,
            t: h.t,
        });
    }
    Ok(antipode_unchecked(d, h, &mut HashMap::new()))
}

/// The antipode recursion without the verified-structure gate, used by
/// [`verify_hopf_axioms`] to test the convolution identity at arbitrary
/// points.
fn antipode_unchecked(
    d: &WeightMatrix,
    h: &HopfStructure,
    memo: &mut HashMap<WeightMatrix, DiagramSum>,
) -> DiagramSum {
    if d.is_empty() {
        return DiagramSum::unit();
    }
    if let Some(hit) = memo.get(d) {
        return hit.clone();
    }
    let mut acc = -&DiagramSum::basis(d.clone());
    for ((left, right), c) in h.coproduct(d).iter() {
        if left.is_empty() || right.is_empty() {
            continue;
        }
        let s_left = antipode_unchecked(left, h, memo);
        let term = h.product(&s_left, &DiagramSum::basis(right.clone()));
        acc.add_scaled(&-c, &term);
    }
    memo.insert(d.clone(), acc.clone());
    acc
}

/// Name of one verified law in an [`AxiomReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Coassociativity,
    CounitLaws,
    BialgebraCompatibility,
    AntipodeConvolution,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::Coassociativity => "coassociativity",
            Axiom::CounitLaws => "counit-laws",
            Axiom::BialgebraCompatibility => "bialgebra-compatibility",
            Axiom::AntipodeConvolution => "antipode-convolution",
        };
        write!(f, "{name}")
    }
}

/// Outcome of one law: pass, or fail with the first offending input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    pub counterexample: Option<String>,
}

/// The result of checking a parameter point against a finite deck of
/// diagrams: one entry per law, plus a cocommutativity diagnostic (not an
/// axiom, but the structural property separating the two coproducts).
///
/// Every verdict is relative to the supplied deck; a pass certifies the
/// laws on that deck only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub structure: HopfStructure,
    pub verified_structure: bool,
    pub deck_size: usize,
    pub checks: Vec<AxiomCheck>,
    pub cocommutative: bool,
    pub cocommutativity_witness: Option<String>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "qc": self.structure.qc(),
            "qs": self.structure.qs(),
            "t": self.structure.t(),
            "variant": self.structure.variant().to_string(),
            "verified_structure": self.verified_structure,
            "deck_size": self.deck_size,
            "axioms": self.checks.iter().map(|c| {
                serde_json::json!({
                    "axiom": c.axiom.to_string(),
                    "passed": c.passed,
                    "counterexample": c.counterexample,
                })
            }).collect::<Vec<_>>(),
            "all_passed": self.all_passed(),
            "cocommutative": self.cocommutative,
            "cocommutativity_witness": self.cocommutativity_witness,
        })
    }
}

/// Sums of ordered diagram triples, just enough for the coassociativity
/// comparison.
type TripleSum = BTreeMap<(WeightMatrix, WeightMatrix, WeightMatrix), DeformPoly>;

fn triple_add(map: &mut TripleSum, key: (WeightMatrix, WeightMatrix, WeightMatrix), c: DeformPoly) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(key).or_default();
    *slot = &*slot + &c;
}

/// Drops entries that cancelled to zero so maps compare structurally.
fn normalize_triples(mut map: TripleSum) -> TripleSum {
    map.retain(|_, v| !v.is_zero());
    map
}

/// Checks the bialgebra and Hopf laws for `h` over every diagram (and,
/// for the compatibility law, every ordered pair of diagrams) in `deck`,
/// recording the first counterexample of each law that fails.
pub fn verify_hopf_axioms(deck: &[WeightMatrix], h: &HopfStructure) -> AxiomReport {
    let mut checks = Vec::new();

    // Coassociativity: (coproduct x id) and (id x coproduct) agree after
    // one more application of the coproduct.
    let mut coassoc_fail = None;
    for d in deck {
        let delta = h.coproduct(d);
        let mut lhs: TripleSum = TripleSum::new();
        let mut rhs: TripleSum = TripleSum::new();
        for ((a, b), c) in delta.iter() {
            for ((a1, a2), c2) in h.coproduct(a).iter() {
                triple_add(&mut lhs, (a1.clone(), a2.clone(), b.clone()), c * c2);
            }
            for ((b1, b2), c2) in h.coproduct(b).iter() {
                triple_add(&mut rhs, (a.clone(), b1.clone(), b2.clone()), c * c2);
            }
        }
        if normalize_triples(lhs) != normalize_triples(rhs) {
            coassoc_fail = Some(format!("d = {d:?}"));
            break;
        }
    }
    checks.push(AxiomCheck {
        axiom: Axiom::Coassociativity,
        passed: coassoc_fail.is_none(),
        counterexample: coassoc_fail,
    });

    // Counit laws: contracting either tensor leg with the counit gives
    // the identity.
    let mut counit_fail = None;
    for d in deck {
        let delta = h.coproduct(d);
        let mut left = DiagramSum::zero();
        let mut right = DiagramSum::zero();
        for ((a, b), c) in delta.iter() {
            if a.is_empty() {
                left.add_term(b.clone(), c.clone());
            }
            if b.is_empty() {
                right.add_term(a.clone(), c.clone());
            }
        }
        let id = DiagramSum::basis(d.clone());
        if left != id || right != id {
            counit_fail = Some(format!("d = {d:?}"));
            break;
        }
    }
    checks.push(AxiomCheck {
        axiom: Axiom::CounitLaws,
        passed: counit_fail.is_none(),
        counterexample: counit_fail,
    });

    // Bialgebra compatibility: the coproduct of a product equals the
    // componentwise product of the coproducts.
    let basis_product =
        |a: &WeightMatrix, b: &WeightMatrix| h.product(&DiagramSum::basis(a.clone()), &DiagramSum::basis(b.clone()));
    let mut compat_fail = None;
    'pairs: for x in deck {
        for y in deck {
            let lhs = h.coproduct_sum(&basis_product(x, y));
            let rhs = h
                .coproduct(x)
                .mul_componentwise(&h.coproduct(y), basis_product);
            if lhs != rhs {
                compat_fail = Some(format!("x = {x:?}, y = {y:?}"));
                break 'pairs;
            }
        }
    }
    checks.push(AxiomCheck {
        axiom: Axiom::BialgebraCompatibility,
        passed: compat_fail.is_none(),
        counterexample: compat_fail,
    });

    // Antipode convolution: sum of S(left) * right over the coproduct
    // collapses everything except the empty diagram to zero.
    let mut memo = HashMap::new();
    let mut antipode_fail = None;
    for d in deck {
        let mut folded = DiagramSum::zero();
        for ((a, b), c) in h.coproduct(d).iter() {
            let s_a = antipode_unchecked(a, h, &mut memo);
            folded.add_scaled(c, &h.product(&s_a, &DiagramSum::basis(b.clone())));
        }
        let expected = if d.is_empty() {
            DiagramSum::unit()
        } else {
            DiagramSum::zero()
        };
        if folded != expected {
            antipode_fail = Some(format!("d = {d:?}"));
            break;
        }
    }
    checks.push(AxiomCheck {
        axiom: Axiom::AntipodeConvolution,
        passed: antipode_fail.is_none(),
        counterexample: antipode_fail,
    });

    // Cocommutativity diagnostic.
    let mut witness = None;
    for d in deck {
        let delta = h.coproduct(d);
        if delta.swap_factors() != delta {
            witness = Some(format!("d = {d:?}"));
            break;
        }
    }
    AxiomReport {
        structure: *h,
        verified_structure: h.is_verified(),
        deck_size: deck.len(),
        cocommutative: witness.is_none(),
        cocommutativity_witness: witness,
        checks,
    }
}
