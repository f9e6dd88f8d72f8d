//! The two-parameter deformed product of diagrams.
//!
//! Multiplying `d1` by `d2` stacks their white spots (rows of `d1` on top,
//! rows of `d2` below) and then distributes the black spots of both factors
//! over a common sequence of output columns. Each way of doing that is a
//! [`Placement`]: an interleaving of the two column sequences in which a
//! column of `d1` and a column of `d2` may also land in the same output
//! slot and merge. Columns of each factor keep their original relative
//! order and their identity; nothing else is constrained.
//!
//! Every placement contributes one output matrix, weighted by a monomial
//! in the two deformation parameters. Both exponents count at the level
//! of individual lines, which is what makes the product associative:
//!
//! * `qc` counts line crossings: every pair of a `d1` column landing
//!   strictly right of a `d2` column contributes the product of the two
//!   column weights (each line of one crosses each line of the other).
//!   Columns inside a merged slot cross columns in other slots as usual,
//!   but not their own merge partner.
//! * `qs` counts superpositions: a merged slot contributes the product of
//!   the two column weights to the `qs` exponent.
//!
//! At `(qc, qs) = (0, 0)` only the placement with all of `d1` left of all
//! of `d2` survives, which is block concatenation; at `(1, 1)` every
//! placement counts once and the product is the quasi-symmetric one
//! checked independently in the oracle module.

use crate::diagram::WeightMatrix;
use crate::error::PlacementError;
use crate::poly::DeformPoly;
use crate::sum::{bilinear_extend, DiagramSum};

/// One output column slot of a placement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    /// Column `0-based index` of the left factor, alone in this slot.
    Left(usize),
    /// Column of the right factor, alone in this slot.
    Right(usize),
    /// A left and a right column merged into one slot; entries add.
    Merged(usize, usize),
}

/// An arrangement of all columns of two diagrams into one output sequence,
/// keeping each factor's column order. The left factor's columns appear as
/// `Left(0), Left(1), ...` in order, likewise for `Right`; a `Merged(i, j)`
/// slot consumes one column from each side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    slots: Vec<Slot>,
}

impl Placement {
    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }
}

/// All placements of the columns of `d1` against the columns of `d2`.
///
/// The count depends only on the column counts `(q1, q2)` and satisfies
/// `D(a, b) = D(a-1, b) + D(a, b-1) + D(a-1, b-1)`: the first slot is a
/// left column, a right column, or a merge. `D(1, 1) = 3`, `D(2, 1) = 5`,
/// `D(3, 3) = 63`.
pub fn enumerate_placements(d1: &WeightMatrix, d2: &WeightMatrix) -> Vec<Placement> {
    let (q1, q2) = (d1.cols(), d2.cols());
    let mut out = Vec::new();
    let mut slots = Vec::with_capacity(q1 + q2);
    place_rest(0, 0, q1, q2, &mut slots, &mut out);
    out
}

fn place_rest(
    i: usize,
    j: usize,
    q1: usize,
    q2: usize,
    slots: &mut Vec<Slot>,
    out: &mut Vec<Placement>,
) {
    if i == q1 && j == q2 {
        out.push(Placement {
            slots: slots.clone(),
        });
        return;
    }
    if i < q1 {
        slots.push(Slot::Left(i));
        place_rest(i + 1, j, q1, q2, slots, out);
        slots.pop();
    }
    if j < q2 {
        slots.push(Slot::Right(j));
        place_rest(i, j + 1, q1, q2, slots, out);
        slots.pop();
    }
    if i < q1 && j < q2 {
        slots.push(Slot::Merged(i, j));
        place_rest(i + 1, j + 1, q1, q2, slots, out);
        slots.pop();
    }
}

/// Builds the output matrix and deformation coefficient for one placement.
///
/// The output has `d1.rows() + d2.rows()` rows; a `Left(i)` slot carries
/// column `i` of `d1` padded with zeros below, `Right(j)` carries column
/// `j` of `d2` padded above, and `Merged(i, j)` carries both. The
/// coefficient is `qc^(crossings) * qs^(superpositions)` as described at
/// the module level. Fails if the placement does not list each factor's
/// columns exactly once in order.
pub fn realize(
    placement: &Placement,
    d1: &WeightMatrix,
    d2: &WeightMatrix,
) -> Result<(WeightMatrix, DeformPoly), PlacementError> {
    let lefts: Vec<usize> = placement
        .slots
        .iter()
        .filter_map(|s| match s {
            Slot::Left(i) | Slot::Merged(i, _) => Some(*i),
            Slot::Right(_) => None,
        })
        .collect();
    let rights: Vec<usize> = placement
        .slots
        .iter()
        .filter_map(|s| match s {
            Slot::Right(j) | Slot::Merged(_, j) => Some(*j),
            Slot::Left(_) => None,
        })
        .collect();
    if !lefts.iter().copied().eq(0..d1.cols()) {
        return Err(PlacementError(format!(
            "left columns {lefts:?} do not enumerate 0..{} in order",
            d1.cols()
        )));
    }
    if !rights.iter().copied().eq(0..d2.cols()) {
        return Err(PlacementError(format!(
            "right columns {rights:?} do not enumerate 0..{} in order",
            d2.cols()
        )));
    }

    let (p1, p2) = (d1.rows(), d2.rows());
    let rows = p1 + p2;
    let cols = placement.slots.len();
    let mut entries = vec![0u64; rows * cols];
    for (s, slot) in placement.slots.iter().enumerate() {
        match *slot {
            Slot::Left(i) => {
                for r in 0..p1 {
                    entries[r * cols + s] = d1.entry(r, i);
                }
            }
            Slot::Right(j) => {
                for r in 0..p2 {
                    entries[(p1 + r) * cols + s] = d2.entry(r, j);
                }
            }
            Slot::Merged(i, j) => {
                for r in 0..p1 {
                    entries[r * cols + s] = d1.entry(r, i);
                }
                for r in 0..p2 {
                    entries[(p1 + r) * cols + s] = d2.entry(r, j);
                }
            }
        }
    }
    let matrix = WeightMatrix::assemble(rows, cols, entries);

    // Exponents in one left-to-right sweep: `passed` accumulates the
    // total weight of right columns in strictly earlier slots, so a left
    // column of weight w crosses `w * passed` lines. Adding a merged
    // slot's right weight only after charging its left column keeps the
    // merge partners from crossing each other.
    let left_weight: Vec<u64> = (0..d1.cols()).map(|i| d1.col_sum(i)).collect();
    let right_weight: Vec<u64> = (0..d2.cols()).map(|j| d2.col_sum(j)).collect();
    let mut qc_exp: u64 = 0;
    let mut qs_exp: u64 = 0;
    let mut passed: u64 = 0;
    for slot in &placement.slots {
        match *slot {
            Slot::Left(i) => {
                qc_exp = qc_exp
                    .checked_add(
                        left_weight[i]
                            .checked_mul(passed)
                            .expect("crossing exponent overflow"),
                    )
                    .expect("crossing exponent overflow");
            }
            Slot::Right(j) => {
                passed = passed
                    .checked_add(right_weight[j])
                    .expect("crossing exponent overflow");
            }
            Slot::Merged(i, j) => {
                qc_exp = qc_exp
                    .checked_add(
                        left_weight[i]
                            .checked_mul(passed)
                            .expect("crossing exponent overflow"),
                    )
                    .expect("crossing exponent overflow");
                qs_exp = qs_exp
                    .checked_add(
                        left_weight[i]
                            .checked_mul(right_weight[j])
                            .expect("superposition exponent overflow"),
                    )
                    .expect("superposition exponent overflow");
                passed = passed
                    .checked_add(right_weight[j])
                    .expect("crossing exponent overflow");
            }
        }
    }
    Ok((matrix, DeformPoly::monomial(qc_exp, qs_exp, 1)))
}

/// The deformed product of two basis diagrams: the sum over all placements
/// of their realizations. Distinct placements can yield the same matrix
/// with different coefficients; those collect in the sum.
pub fn deformed_product_basis(d1: &WeightMatrix, d2: &WeightMatrix) -> DiagramSum {
    let mut out = DiagramSum::zero();
    for placement in enumerate_placements(d1, d2) {
        let (matrix, coeff) =
            realize(&placement, d1, d2).expect("enumerated placements are valid");
        out.add_term(matrix, coeff);
    }
    out
}

/// Bilinear extension of the deformed product to sums.
pub fn deformed_product(x: &DiagramSum, y: &DiagramSum) -> DiagramSum {
    bilinear_extend(deformed_product_basis, x, y)
}

/// The product with integers substituted for the deformation parameters.
pub fn deformed_product_at(x: &DiagramSum, y: &DiagramSum, qc: i64, qs: i64) -> DiagramSum {
    deformed_product(x, y).eval_coeffs(qc, qs)
}
