//! Packed weight matrices and the structure maps that only depend on the
//! diagram itself: concatenation, row/column restriction, canonical
//! unlabelling, the multiplicity monomial, enumeration by weight, and
//! factorization into irreducibles.
//!
//! A diagram with `p` white spots and `q` black spots is stored as a `p x q`
//! matrix of non-negative multiplicities: rows are white spots, columns are
//! black spots, and entry `(i, j)` counts the lines joining white spot `i`
//! to black spot `j`. "Packed" means no row and no column is entirely zero;
//! the only diagram with an empty row or column set is the `0 x 0` empty
//! diagram, which serves as the unit everywhere.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{DiagramError, ParseError};

/// Default cap for [`enumerate_by_weight`]: the number of packed matrices
/// grows combinatorially with the weight, so unbounded enumeration is a
/// footgun.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 5;

/// A labelled diagram: a packed matrix of line multiplicities with rows
/// indexed by white spots and columns by black spots.
///
/// Ordering is graded lexicographic: first by total weight, then by row
/// count, column count, and finally the row-major entry list. Every
/// user-visible sum in the crate lists its terms in this order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightMatrix {
    rows: usize,
    cols: usize,
    /// Row-major, `rows * cols` entries.
    entries: Vec<u64>,
}

impl WeightMatrix {
    /// The empty diagram: no spots, no lines. Unit for both products.
    pub fn empty() -> Self {
        WeightMatrix {
            rows: 0,
            cols: 0,
            entries: Vec::new(),
        }
    }

    /// Builds a diagram from a grid of rows, rejecting ragged input and
    /// unpacked (zero row or zero column) matrices. An empty grid yields
    /// the empty diagram.
    pub fn new(grid: Vec<Vec<u64>>) -> Result<Self, DiagramError> {
        if grid.is_empty() {
            return Ok(Self::empty());
        }
        let cols = grid[0].len();
        for (i, row) in grid.iter().enumerate() {
            if row.len() != cols {
                return Err(DiagramError::Ragged {
                    row: i + 1,
                    got: row.len(),
                    expected: cols,
                });
            }
        }
        let rows = grid.len();
        let entries: Vec<u64> = grid.into_iter().flatten().collect();
        Self::from_flat(rows, cols, entries)
    }

    /// Builds a diagram from row-major entries, with the same packedness
    /// checks as [`WeightMatrix::new`].
    pub fn from_flat(rows: usize, cols: usize, entries: Vec<u64>) -> Result<Self, DiagramError> {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        if rows == 0 || cols == 0 {
            // A 0 x q or p x 0 matrix has q zero columns (resp. p zero rows),
            // so only 0 x 0 passes.
            if rows > 0 {
                return Err(DiagramError::ZeroRow(1));
            }
            if cols > 0 {
                return Err(DiagramError::ZeroColumn(1));
            }
            return Ok(Self::empty());
        }
        let m = WeightMatrix {
            rows,
            cols,
            entries,
        };
        for i in 0..rows {
            if m.row(i).iter().all(|&e| e == 0) {
                return Err(DiagramError::ZeroRow(i + 1));
            }
        }
        for j in 0..cols {
            if (0..rows).all(|i| m.entry(i, j) == 0) {
                return Err(DiagramError::ZeroColumn(j + 1));
            }
        }
        Ok(m)
    }

    /// Internal constructor for matrices that are packed by construction.
    pub(crate) fn assemble(rows: usize, cols: usize, entries: Vec<u64>) -> Self {
        debug_assert_eq!(entries.len(), rows * cols);
        let m = WeightMatrix {
            rows,
            cols,
            entries,
        };
        debug_assert!(
            m.rows == 0 && m.cols == 0
                || (0..m.rows).all(|i| m.row(i).iter().any(|&e| e != 0))
                    && (0..m.cols).all(|j| (0..m.rows).any(|i| m.entry(i, j) != 0)),
            "assembled matrix must be packed"
        );
        m
    }

    /// Number of white spots (rows).
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of black spots (columns).
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Multiplicity of the line bundle between white spot `i` and black
    /// spot `j`.
    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Column `j` as an owned vector.
    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.entry(i, j)).collect()
    }

    /// Degree of white spot `i`: the number of lines attached to it.
    pub fn row_sum(&self, i: usize) -> u64 {
        self.row(i).iter().sum()
    }

    /// Degree of black spot `j`.
    pub fn col_sum(&self, j: usize) -> u64 {
        (0..self.rows).map(|i| self.entry(i, j)).sum()
    }

    /// Total number of lines. This is the grading.
    pub fn total_weight(&self) -> u64 {
        self.entries.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    /// Free product: `self` in the upper-left block, `other` in the
    /// lower-right, no lines between the two. The empty diagram is the unit.
    pub fn concat(&self, other: &WeightMatrix) -> WeightMatrix {
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        let rows = self.rows + other.rows;
        let cols = self.cols + other.cols;
        let mut entries = vec![0u64; rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                entries[i * cols + j] = self.entry(i, j);
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                entries[(self.rows + i) * cols + (self.cols + j)] = other.entry(i, j);
            }
        }
        WeightMatrix::assemble(rows, cols, entries)
    }

    /// Keeps the columns listed in `keep` (strictly increasing, in range),
    /// then drops any rows left with no lines. The result is packed again;
    /// an empty selection yields the empty diagram.
    pub fn restrict_columns(&self, keep: &[usize]) -> Result<WeightMatrix, DiagramError> {
        check_selection(keep, self.cols)?;
        if keep.is_empty() {
            return Ok(WeightMatrix::empty());
        }
        let live_rows: Vec<usize> = (0..self.rows)
            .filter(|&i| keep.iter().any(|&j| self.entry(i, j) != 0))
            .collect();
        let entries: Vec<u64> = live_rows
            .iter()
            .flat_map(|&i| keep.iter().map(move |&j| self.entry(i, j)))
            .collect();
        Ok(WeightMatrix::assemble(live_rows.len(), keep.len(), entries))
    }

    /// Row counterpart of [`restrict_columns`]: keeps the listed rows and
    /// drops columns left with no lines.
    ///
    /// [`restrict_columns`]: WeightMatrix::restrict_columns
    pub fn restrict_rows(&self, keep: &[usize]) -> Result<WeightMatrix, DiagramError> {
        check_selection(keep, self.rows)?;
        if keep.is_empty() {
            return Ok(WeightMatrix::empty());
        }
        let live_cols: Vec<usize> = (0..self.cols)
            .filter(|&j| keep.iter().any(|&i| self.entry(i, j) != 0))
            .collect();
        let entries: Vec<u64> = keep
            .iter()
            .flat_map(|&i| live_cols.iter().map(move |&j| self.entry(i, j)))
            .collect();
        Ok(WeightMatrix::assemble(keep.len(), live_cols.len(), entries))
    }

    /// Forgets the labels: returns the canonical representative of this
    /// diagram's orbit under independent row and column permutations.
    ///
    /// The representative is the matrix whose row-major entry list is
    /// lexicographically smallest over the whole orbit. For each of the
    /// `p!` row orders the best column order is obtained by sorting the
    /// columns as vectors, so the search is exact.
    pub fn unlabel(&self) -> UnlabelledDiagram {
        if self.is_empty() {
            return UnlabelledDiagram {
                canon: WeightMatrix::empty(),
            };
        }
        let mut best: Option<Vec<u64>> = None;
        let mut cols: Vec<Vec<u64>> = Vec::with_capacity(self.cols);
        for perm in (0..self.rows).permutations(self.rows) {
            cols.clear();
            cols.extend((0..self.cols).map(|j| {
                perm.iter()
                    .map(|&i| self.entry(i, j))
                    .collect::<Vec<u64>>()
            }));
            cols.sort_unstable();
            let flat: Vec<u64> = (0..self.rows)
                .flat_map(|r| cols.iter().map(move |c| c[r]))
                .collect();
            if best.as_ref().is_none_or(|b| flat < *b) {
                best = Some(flat);
            }
        }
        UnlabelledDiagram {
            canon: WeightMatrix::assemble(self.rows, self.cols, best.unwrap()),
        }
    }

    /// The commutative image of the diagram: one `L`-generator per white
    /// spot recording its degree, one `V`-generator per black spot.
    /// Invariant under relabelling and multiplicative for concatenation.
    pub fn monomial(&self) -> Monomial {
        let mut alpha = BTreeMap::new();
        for i in 0..self.rows {
            *alpha.entry(self.row_sum(i)).or_insert(0) += 1;
        }
        let mut beta = BTreeMap::new();
        for j in 0..self.cols {
            *beta.entry(self.col_sum(j)).or_insert(0) += 1;
        }
        Monomial { alpha, beta }
    }

    /// Splits the diagram into its unique maximal decomposition
    /// `d = d_1 * d_2 * ... * d_k` under [`concat`], scanning for the
    /// leftmost block split and recursing on the remainder. The empty
    /// diagram factors into no parts.
    ///
    /// [`concat`]: WeightMatrix::concat
    pub fn factor_irreducibles(&self) -> Vec<WeightMatrix> {
        let mut factors = Vec::new();
        let mut rest = self.clone();
        'peel: while !rest.is_empty() {
            for l in 1..rest.cols {
                // Rows met by the first l columns must form a prefix and
                // must have no lines beyond those columns.
                let touched: Vec<usize> = (0..rest.rows)
                    .filter(|&i| (0..l).any(|j| rest.entry(i, j) != 0))
                    .collect();
                let k = touched.len();
                let prefix = touched.iter().copied().eq(0..k);
                let closed = touched
                    .iter()
                    .all(|&i| (l..rest.cols).all(|j| rest.entry(i, j) == 0));
                if prefix && closed && k < rest.rows {
                    let head = rest
                        .restrict_columns(&(0..l).collect::<Vec<_>>())
                        .expect("split prefix is a valid selection");
                    let tail = rest
                        .restrict_columns(&(l..rest.cols).collect::<Vec<_>>())
                        .expect("split suffix is a valid selection");
                    factors.push(head);
                    rest = tail;
                    continue 'peel;
                }
            }
            factors.push(rest);
            break;
        }
        factors
    }

    /// True when the diagram is a letter of the free monoid: non-empty and
    /// not a concatenation of two smaller diagrams.
    pub fn is_irreducible(&self) -> bool {
        !self.is_empty() && self.factor_irreducibles().len() == 1
    }

    /// Serializes to the nested-array JSON form; the empty diagram is `[]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| serde_json::Value::Array(self.row(i).iter().map(|&e| e.into()).collect()))
                .collect(),
        )
    }
}

fn check_selection(keep: &[usize], len: usize) -> Result<(), DiagramError> {
    for w in keep.windows(2) {
        if w[0] >= w[1] {
            return Err(DiagramError::UnorderedSelection);
        }
    }
    if let Some(&last) = keep.last() {
        if last >= len {
            return Err(DiagramError::SelectionOutOfRange { index: last, len });
        }
    }
    Ok(())
}

impl Ord for WeightMatrix {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_weight()
            .cmp(&other.total_weight())
            .then_with(|| self.rows.cmp(&other.rows))
            .then_with(|| self.cols.cmp(&other.cols))
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl PartialOrd for WeightMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WeightMatrix {
    /// Rows joined by `"; "`, entries by single spaces; the empty diagram
    /// prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "e");
        }
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WeightMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for WeightMatrix {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseError::EmptyMatrix);
        }
        if s == "e" {
            return Ok(WeightMatrix::empty());
        }
        let mut grid = Vec::new();
        for (i, row_text) in s.split(';').enumerate() {
            let row: Vec<u64> = row_text
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<u64>().map_err(|_| ParseError::InvalidEntry {
                        text: tok.to_string(),
                    })
                })
                .collect::<Result<_, _>>()?;
            if row.is_empty() {
                return Err(ParseError::EmptyRow { row: i + 1 });
            }
            grid.push(row);
        }
        Ok(WeightMatrix::new(grid)?)
    }
}

/// A diagram up to relabelling of its white and black spots, stored as the
/// canonical orbit representative chosen by [`WeightMatrix::unlabel`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnlabelledDiagram {
    canon: WeightMatrix,
}

impl UnlabelledDiagram {
    /// The canonical representative.
    pub fn canon(&self) -> &WeightMatrix {
        &self.canon
    }

    /// Concatenation descends to unlabelled diagrams; the result is
    /// re-canonicalized.
    pub fn concat(&self, other: &UnlabelledDiagram) -> UnlabelledDiagram {
        self.canon.concat(&other.canon).unlabel()
    }

    /// The multiplicity monomial only sees spot degrees, so it factors
    /// through unlabelling unchanged.
    pub fn monomial(&self) -> Monomial {
        self.canon.monomial()
    }
}

impl fmt::Display for UnlabelledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canon.fmt(f)
    }
}

impl fmt::Debug for UnlabelledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.canon)
    }
}

/// A commutative word `L_1^{a_1} L_2^{a_2} ... V_1^{b_1} V_2^{b_2} ...`:
/// `alpha[k]` counts white spots of degree `k`, `beta[k]` counts black
/// spots of degree `k`. Zero multiplicities are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    alpha: BTreeMap<u64, u64>,
    beta: BTreeMap<u64, u64>,
}

impl Monomial {
    /// The empty monomial, image of the empty diagram.
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn is_one(&self) -> bool {
        self.alpha.is_empty() && self.beta.is_empty()
    }

    /// White-spot degree multiplicities.
    pub fn alpha(&self) -> &BTreeMap<u64, u64> {
        &self.alpha
    }

    /// Black-spot degree multiplicities.
    pub fn beta(&self) -> &BTreeMap<u64, u64> {
        &self.beta
    }

    /// Commutative product: multiplicities add pointwise.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (&k, &v) in &other.alpha {
            *out.alpha.entry(k).or_insert(0) += v;
        }
        for (&k, &v) in &other.beta {
            *out.beta.entry(k).or_insert(0) += v;
        }
        out
    }

    /// JSON view: `L` and `V` factor lists as `[degree, multiplicity]`
    /// pairs in degree order.
    pub fn to_json(&self) -> serde_json::Value {
        let pairs = |m: &BTreeMap<u64, u64>| {
            serde_json::Value::Array(
                m.iter()
                    .map(|(&k, &v)| serde_json::json!([k, v]))
                    .collect(),
            )
        };
        serde_json::json!({ "L": pairs(&self.alpha), "V": pairs(&self.beta) })
    }
}

impl fmt::Display for Monomial {
    /// `L`-factors then `V`-factors in degree order, joined by `*`, with
    /// `^` for multiplicities above 1; the empty monomial prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        let factors = self
            .alpha
            .iter()
            .map(|(k, v)| ("L", k, v))
            .chain(self.beta.iter().map(|(k, v)| ("V", k, v)));
        for (letter, degree, mult) in factors {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{letter}{degree}")?;
            if *mult > 1 {
                write!(f, "^{mult}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All packed matrices of total weight `n` in ascending graded-lex order,
/// capped at [`DEFAULT_ENUMERATION_BOUND`].
pub fn enumerate_by_weight(n: u64) -> Result<Vec<WeightMatrix>, DiagramError> {
    enumerate_by_weight_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

/// [`enumerate_by_weight`] with an explicit cap. The output count grows
/// combinatorially (1, 1, 5, 33, 281, 2961, ... for n = 0, 1, 2, ...), so
/// callers raising the cap should know what they are asking for.
pub fn enumerate_by_weight_bounded(n: u64, bound: u64) -> Result<Vec<WeightMatrix>, DiagramError> {
    if n > bound {
        return Err(DiagramError::WeightBoundExceeded { weight: n, bound });
    }
    if n == 0 {
        return Ok(vec![WeightMatrix::empty()]);
    }
    let mut out = Vec::new();
    let n_us = n as usize;
    for p in 1..=n_us {
        for q in 1..=n_us {
            let mut cells = vec![0u64; p * q];
            fill_cells(p, q, 0, n, &mut cells, &mut out);
        }
    }
    Ok(out)
}

/// Depth-first fill of a `p x q` grid with `remaining` lines, emitting
/// packed matrices. Entry lists are generated in ascending lexicographic
/// order, so within one shape the output is already sorted.
fn fill_cells(
    p: usize,
    q: usize,
    cell: usize,
    remaining: u64,
    cells: &mut Vec<u64>,
    out: &mut Vec<WeightMatrix>,
) {
    if cell == p * q {
        if remaining == 0 {
            if let Ok(m) = WeightMatrix::from_flat(p, q, cells.clone()) {
                out.push(m);
            }
        }
        return;
    }
    for v in 0..=remaining {
        cells[cell] = v;
        fill_cells(p, q, cell + 1, remaining - v, cells, out);
    }
    cells[cell] = 0;
}
