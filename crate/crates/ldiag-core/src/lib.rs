//! Exact combinatorics of labelled diagrams under a two-parameter product
//! deformation.
//!
//! A diagram is a packed matrix of non-negative integers: rows are white
//! spots, columns are black spots, entries count the lines between them,
//! and no spot is allowed to be isolated. The crate implements, over the
//! exact coefficient ring `Z[qc, qs]`:
//!
//! * the free structure of diagrams under block concatenation, including
//!   enumeration by weight and unique factorization into irreducibles
//!   ([`diagram`]);
//! * the deformed product, a sum over column placements in which `qc`
//!   tracks crossings and `qs` tracks superpositions ([`product`]);
//! * the two coproducts (spot splitting and column deconcatenation), the
//!   antipodes of the two Hopf points `(0, 0, 0)` and `(1, 1, 1)`, and a
//!   deck-based axiom checker that pinpoints where mixed parameter points
//!   break ([`hopf`]);
//! * independent oracles for the quasi-symmetric specialization: a direct
//!   matrix-assembly product, the quasi-shuffle of column-sum words, and
//!   truncated Euler sums with their stuffle relations ([`oracles`]).
//!
//! Sums of diagrams keep their terms in a graded lexicographic order
//! (weight, then shape, then entries), so printed output, JSON, and
//! iteration are deterministic end to end.
//!
//! # Example
//!
//! ```
//! use ldiag_core::{deformed_product, DiagramSum, WeightMatrix};
//!
//! let line: WeightMatrix = "1".parse()?;
//! let square = deformed_product(
//!     &DiagramSum::basis(line.clone()),
//!     &DiagramSum::basis(line),
//! );
//! // Side by side, crossed (one qc), or stacked (one qs).
//! assert_eq!(square.num_terms(), 3);
//! assert_eq!(
//!     square.to_string(),
//!     "qs :: 1; 1\nqc :: 0 1; 1 0\n1 :: 1 0; 0 1",
//! );
//! # Ok::<(), ldiag_core::ParseError>(())
//! ```

pub mod diagram;
pub mod error;
pub mod hopf;
pub mod oracles;
pub mod poly;
pub mod product;
pub mod sum;

pub use diagram::{
    enumerate_by_weight, enumerate_by_weight_bounded, Monomial, UnlabelledDiagram, WeightMatrix,
    DEFAULT_ENUMERATION_BOUND,
};
pub use error::{DiagramError, HopfError, ParseError, PlacementError};
pub use hopf::{
    antipode, coproduct_t0, coproduct_t1, counit, verify_hopf_axioms, Axiom, AxiomCheck,
    AxiomReport, HopfStructure, SplitVariant,
};
pub use oracles::{
    black_weight_word, black_word_projection, mqsym_oracle_product, mzv_truncated, quasi_shuffle,
    stuffle_check, Composition, WordSum,
};
pub use poly::DeformPoly;
pub use product::{
    deformed_product, deformed_product_at, deformed_product_basis, enumerate_placements, realize,
    Placement, Slot,
};
pub use sum::{bilinear_extend, DiagramSum, FormalSum, TensorSum};
