//! Inclusion matrices of multimatrix algebra pairs and their depth.
//!
//! A nonnegative integer matrix with no zero row or column encodes an
//! inclusion of multimatrix algebras (rows index the simples of the small
//! algebra, columns those of the big one). Powers alternate with the
//! transpose: M^1 = M, M^2 = M M^t, M^3 = M M^t M, and so on. The depth of
//! the inclusion is the least n >= 2 with M^{n+1} <= q M^{n-1} entrywise for
//! some scalar q, which holds exactly when the zero patterns of M^{n+1} and
//! M^{n-1} coincide. Depth is therefore decided on the boolean semiring and
//! only the final certificate q is computed with exact big integers.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::bitmat::BoolMatrix;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("malformed matrix file: {0}")]
    MalformedFile(String),
    #[error("{what} {index} of the matrix is zero; inclusion matrices must be irredundant")]
    ZeroRowOrColumn { what: &'static str, index: usize },
}

/// Raised only when a guaranteed statement fails to verify, which means the
/// implementation (not the input) is wrong.
#[derive(Debug, Error)]
#[error("theorem violation in {check}: {details}")]
pub struct TheoremViolation {
    pub check: &'static str,
    pub details: String,
}

/// Plain nonnegative integer matrix with arbitrary-precision entries.
/// Intermediate powers live here; no irredundancy invariant is enforced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigUint>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![BigUint::zero(); rows * cols],
        }
    }

    pub fn from_u64_rows(rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            entries: rows
                .iter()
                .flat_map(|row| row.iter().map(|&v| BigUint::from(v)))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigUint) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    fn mul_row_into(&self, other: &Matrix, i: usize, out_row: &mut [BigUint]) {
        for k in 0..self.cols {
            let a = self.get(i, k);
            if a.is_zero() {
                continue;
            }
            for (j, out) in out_row.iter_mut().enumerate() {
                let b = other.get(k, j);
                if !b.is_zero() {
                    *out += a * b;
                }
            }
        }
    }

    pub fn mul_serial(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        let cols = out.cols;
        for (i, out_row) in out.entries.chunks_mut(cols).enumerate() {
            self.mul_row_into(other, i, out_row);
        }
        out
    }

    /// One rayon task per output row; each row runs the identical serial
    /// loop, so the result is bit-identical to `mul_serial`.
    #[cfg(feature = "parallel")]
    pub fn mul_parallel(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        let cols = out.cols;
        out.entries
            .par_chunks_mut(cols)
            .enumerate()
            .for_each(|(i, out_row)| self.mul_row_into(other, i, out_row));
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        #[cfg(feature = "parallel")]
        {
            if self.rows * other.cols >= 1024 {
                return self.mul_parallel(other);
            }
        }
        self.mul_serial(other)
    }

    pub fn support(&self) -> BoolMatrix {
        let mut b = BoolMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.get(i, j).is_zero() {
                    b.set(i, j, true);
                }
            }
        }
        b
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// True iff self <= q * other entrywise.
    pub fn le_times(&self, q: &BigUint, other: &Matrix) -> bool {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a <= &(q * b))
    }

    /// Least q with self <= q * other, given that the support of self is
    /// contained in the support of other. Returns None when some entry of
    /// self is positive where other vanishes.
    pub fn minimal_ratio(&self, other: &Matrix) -> Option<BigUint> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut q = BigUint::zero();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            if b.is_zero() {
                if !a.is_zero() {
                    return None;
                }
                continue;
            }
            q = q.max(a.div_ceil(b));
        }
        Some(q)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Inclusion matrix: nonnegative integer matrix with no zero row or column.
/// The product M M^t is computed once and cached.
pub struct IrredundantMatrix {
    matrix: Matrix,
    square: OnceLock<Matrix>,
}

impl Clone for IrredundantMatrix {
    fn clone(&self) -> Self {
        let square = OnceLock::new();
        if let Some(s) = self.square.get() {
            let _ = square.set(s.clone());
        }
        IrredundantMatrix {
            matrix: self.matrix.clone(),
            square,
        }
    }
}

impl PartialEq for IrredundantMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for IrredundantMatrix {}

impl fmt::Debug for IrredundantMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IrredundantMatrix")
            .field("matrix", &self.matrix)
            .finish()
    }
}

impl IrredundantMatrix {
    pub fn new(matrix: Matrix) -> Result<Self, MatrixError> {
        if matrix.rows == 0 || matrix.cols == 0 {
            return Err(MatrixError::MalformedFile(
                "matrix must have at least one row and one column".into(),
            ));
        }
        let b = matrix.support();
        for i in 0..matrix.rows {
            if b.row_is_zero(i) {
                return Err(MatrixError::ZeroRowOrColumn {
                    what: "row",
                    index: i,
                });
            }
        }
        for j in 0..matrix.cols {
            if b.col_is_zero(j) {
                return Err(MatrixError::ZeroRowOrColumn {
                    what: "column",
                    index: j,
                });
            }
        }
        Ok(IrredundantMatrix {
            matrix,
            square: OnceLock::new(),
        })
    }

    pub fn from_u64_rows(rows: &[Vec<u64>]) -> Result<Self, MatrixError> {
        IrredundantMatrix::new(Matrix::from_u64_rows(rows))
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        self.matrix.get(i, j)
    }

    pub fn transpose(&self) -> IrredundantMatrix {
        IrredundantMatrix::new(self.matrix.transpose())
            .expect("transpose of an irredundant matrix is irredundant")
    }

    /// M M^t, cached after the first call.
    pub fn square(&self) -> &Matrix {
        self.square
            .get_or_init(|| self.matrix.mul(&self.matrix.transpose()))
    }

    pub fn support(&self) -> BoolMatrix {
        self.matrix.support()
    }

    /// The alternating power M^k: M, M M^t, M M^t M, ... Odd powers are
    /// rows x cols, even powers are square.
    pub fn alt_power(&self, k: usize) -> AltPower {
        assert!(k >= 1, "alternating powers start at exponent 1");
        let value = if k == 1 {
            self.matrix.clone()
        } else {
            let s = self.square();
            let mut p = s.clone();
            for _ in 2..=(k / 2) {
                p = p.mul(s);
            }
            if k % 2 == 1 {
                p = p.mul(&self.matrix);
            }
            p
        };
        AltPower {
            base: self.clone(),
            exponent: k,
            value,
        }
    }

    /// Kronecker product; the result is irredundant whenever both factors
    /// are, and its alternating powers are the blockwise products of the
    /// factors' powers.
    pub fn tensor(&self, other: &IrredundantMatrix) -> IrredundantMatrix {
        let (ra, ca) = (self.rows(), self.cols());
        let (rb, cb) = (other.rows(), other.cols());
        let mut out = Matrix::zeros(ra * rb, ca * cb);
        for i in 0..ra {
            for j in 0..ca {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        out.set(i * rb + k, j * cb + l, a * other.get(k, l));
                    }
                }
            }
        }
        IrredundantMatrix::new(out).expect("tensor of irredundant matrices is irredundant")
    }

    /// Rows and columns relabelled: entry (i, j) moves to
    /// (row_perm[i], col_perm[j]).
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> IrredundantMatrix {
        assert_eq!(row_perm.len(), self.rows());
        assert_eq!(col_perm.len(), self.cols());
        let mut out = Matrix::zeros(self.rows(), self.cols());
        for (i, &ri) in row_perm.iter().enumerate() {
            for (j, &cj) in col_perm.iter().enumerate() {
                out.set(ri, cj, self.get(i, j).clone());
            }
        }
        IrredundantMatrix::new(out).expect("permuting preserves irredundancy")
    }

    /// Writes the matrix file format: a dimension line `rows cols` followed
    /// by one line per row.
    pub fn to_file_string(&self) -> String {
        format!("{} {}\n{}", self.rows(), self.cols(), self.matrix)
    }

    /// Depth of the inclusion. Zero patterns of the alternating powers are
    /// tracked on the boolean semiring until they stabilize; the witness
    /// patterns and the certificate q are then recomputed from exact integer
    /// powers, which cross-checks the two arithmetics on every call.
    pub fn depth(&self) -> DepthReport {
        let b = self.support();
        let bt = b.transpose();
        let s = b.mul(&bt);

        let mut depth_one = true;
        for i in 0..s.rows() {
            for j in 0..s.cols() {
                if i != j && s.get(i, j) {
                    depth_one = false;
                }
            }
        }

        // supports[k - 1] is the support of M^k; M^k = S M^{k-2} for k >= 3.
        let mut supports: Vec<BoolMatrix> = vec![b, s.clone()];
        let mut n = 2;
        loop {
            while supports.len() < n + 1 {
                let prev = &supports[supports.len() - 2];
                supports.push(s.mul(prev));
            }
            if supports[n] == supports[n - 2] {
                break;
            }
            n += 1;
            assert!(
                n <= 2 * self.rows() + 1,
                "zero patterns failed to stabilize within the guaranteed bound"
            );
        }

        let low = self.alt_power(n - 1).value;
        let high = self.square().mul(&low);
        assert_eq!(
            low.support(),
            supports[n - 2],
            "integer and boolean power supports disagree"
        );
        assert_eq!(
            high.support(),
            supports[n],
            "integer and boolean power supports disagree"
        );
        let minimal_q = high
            .minimal_ratio(&low)
            .expect("equal zero patterns guarantee a finite ratio");

        let report = DepthReport {
            depth: n,
            minimal_q,
            depth_one,
            witness: (
                ZeroPattern::from_support(low.support()),
                ZeroPattern::from_support(high.support()),
            ),
        };
        assert!(
            report.least_depth() <= (2 * self.rows()).saturating_sub(1),
            "depth exceeded the 2r - 1 bound"
        );
        report
    }
}

impl fmt::Display for IrredundantMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_file_string())
    }
}

/// An alternating power together with its base and exponent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AltPower {
    pub base: IrredundantMatrix,
    pub exponent: usize,
    pub value: Matrix,
}

/// Positions at which a matrix vanishes, stored as the complementary
/// support bitset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZeroPattern {
    support: BoolMatrix,
}

impl ZeroPattern {
    pub fn from_support(support: BoolMatrix) -> Self {
        ZeroPattern { support }
    }

    pub fn of(m: &Matrix) -> Self {
        ZeroPattern::from_support(m.support())
    }

    pub fn rows(&self) -> usize {
        self.support.rows()
    }

    pub fn cols(&self) -> usize {
        self.support.cols()
    }

    pub fn is_zero_at(&self, i: usize, j: usize) -> bool {
        !self.support.get(i, j)
    }

    pub fn zero_count(&self) -> usize {
        self.rows() * self.cols() - self.support.count_ones()
    }

    /// True iff every zero position of self is also zero in other.
    pub fn zeros_subset_of(&self, other: &ZeroPattern) -> bool {
        other.support.is_submatrix_of(&self.support)
    }
}

impl Serialize for ZeroPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<String> = (0..self.rows())
            .map(|i| {
                (0..self.cols())
                    .map(|j| if self.support.get(i, j) { '1' } else { '0' })
                    .collect()
            })
            .collect();
        use serde::ser::SerializeStruct as _;
        let mut state = serializer.serialize_struct("ZeroPattern", 1)?;
        state.serialize_field("support", &rows)?;
        state.end()
    }
}

impl<'de> Deserialize<'de> for ZeroPattern {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            support: Vec<String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let rows = raw.support.len();
        let cols = raw.support.first().map_or(0, |r| r.len());
        let mut support = BoolMatrix::zeros(rows, cols);
        for (i, row) in raw.support.iter().enumerate() {
            if row.len() != cols {
                return Err(D::Error::custom("ragged support rows"));
            }
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    '1' => support.set(i, j, true),
                    '0' => {}
                    _ => return Err(D::Error::custom("support rows must be 0/1 strings")),
                }
            }
        }
        Ok(ZeroPattern { support })
    }
}

mod biguint_string {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse().map_err(D::Error::custom)
    }
}

/// Result of a depth computation. `depth` is the least n >= 2 satisfying the
/// depth-n inequality; `depth_one` records separately whether M M^t has zero
/// off-diagonal, in which case the depth-one inequality M M^t <= q I also
/// holds and `least_depth` reports 1.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DepthReport {
    pub depth: usize,
    #[serde(with = "biguint_string")]
    pub minimal_q: BigUint,
    pub depth_one: bool,
    pub witness: (ZeroPattern, ZeroPattern),
}

impl DepthReport {
    /// Least n >= 1 for which the depth-n inequality holds.
    pub fn least_depth(&self) -> usize {
        if self.depth_one {
            1
        } else {
            self.depth
        }
    }
}

/// Parses the matrix file format: optional `#` comment lines, a dimension
/// line `rows cols`, then one whitespace-separated line per row.
pub fn parse_matrix(text: &str) -> Result<IrredundantMatrix, MatrixError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| MatrixError::MalformedFile("missing dimension line".into()))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    if dims.len() != 2 {
        return Err(MatrixError::MalformedFile(format!(
            "dimension line must hold exactly two integers, got {header:?}"
        )));
    }
    let rows: usize = dims[0]
        .parse()
        .map_err(|_| MatrixError::MalformedFile(format!("bad row count {:?}", dims[0])))?;
    let cols: usize = dims[1]
        .parse()
        .map_err(|_| MatrixError::MalformedFile(format!("bad column count {:?}", dims[1])))?;
    if rows == 0 || cols == 0 {
        return Err(MatrixError::MalformedFile(
            "matrix must have at least one row and one column".into(),
        ));
    }
    let mut m = Matrix::zeros(rows, cols);
    for i in 0..rows {
        let line = lines
            .next()
            .ok_or_else(|| MatrixError::MalformedFile(format!("missing row {i}")))?;
        let cells: Vec<&str> = line.split_whitespace().collect();
        if cells.len() != cols {
            return Err(MatrixError::MalformedFile(format!(
                "row {i} holds {} entries, expected {cols}",
                cells.len()
            )));
        }
        for (j, cell) in cells.iter().enumerate() {
            let v: BigUint = cell.parse().map_err(|_| {
                MatrixError::MalformedFile(format!("bad entry {cell:?} at row {i}, column {j}"))
            })?;
            m.set(i, j, v);
        }
    }
    if let Some(extra) = lines.next() {
        return Err(MatrixError::MalformedFile(format!(
            "unexpected trailing content {extra:?}"
        )));
    }
    IrredundantMatrix::new(m)
}

/// The n x (n+1) two-diagonal matrix of the chain inclusion
/// C^n -> C x M_2(C)^{n-1} x C; its depth is 2n - 1 and the depth of its
/// transpose is 2n.
pub fn dynkin_chain(n: usize) -> IrredundantMatrix {
    assert!(n >= 1);
    let mut m = Matrix::zeros(n, n + 1);
    for i in 0..n {
        m.set(i, i, BigUint::one());
        m.set(i, i + 1, BigUint::one());
    }
    IrredundantMatrix::new(m).expect("chain matrices are irredundant")
}

#[derive(Clone, Debug, Serialize)]
pub struct TransposeVerdict {
    pub depth: usize,
    pub transpose_depth: usize,
    pub least_depth: usize,
    pub transpose_least_depth: usize,
}

/// Verifies that transposing raises the least depth by at most one, and not
/// at all when the least depth is even. Both directions are checked, since
/// the statement applies to M^t as well.
pub fn check_transpose_theorem(
    m: &IrredundantMatrix,
) -> Result<TransposeVerdict, TheoremViolation> {
    let report = m.depth();
    let t_report = m.transpose().depth();
    let n = report.least_depth();
    let nt = t_report.least_depth();
    let forward = nt <= n + 1 && (n % 2 != 0 || nt <= n);
    let backward = n <= nt + 1 && (nt % 2 != 0 || n <= nt);
    if !forward || !backward {
        return Err(TheoremViolation {
            check: "transpose depth",
            details: format!("least depth {n} but transpose has least depth {nt}"),
        });
    }
    Ok(TransposeVerdict {
        depth: report.depth,
        transpose_depth: t_report.depth,
        least_depth: n,
        transpose_least_depth: nt,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerVerdict {
    pub depth: usize,
    pub power_exponent: usize,
    #[serde(with = "biguint_string")]
    pub q: BigUint,
}

/// For depth n, the power P = M^{n-1} must satisfy P P^t P <= q P for some
/// q: the depth-n pair embeds into a depth-two pair through P.
pub fn check_tower_embedding(m: &IrredundantMatrix) -> Result<TowerVerdict, TheoremViolation> {
    let report = m.depth();
    let n = report.depth;
    let p = m.alt_power(n - 1).value;
    let ppt_p = p.mul(&p.transpose()).mul(&p);
    match ppt_p.minimal_ratio(&p) {
        Some(q) => Ok(TowerVerdict {
            depth: n,
            power_exponent: n - 1,
            q,
        }),
        None => Err(TheoremViolation {
            check: "tower embedding",
            details: format!("P P^t P has support outside P at depth {n}"),
        }),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorVerdict {
    pub left_least_depth: usize,
    pub right_least_depth: usize,
    pub tensor_least_depth: usize,
}

/// The least depth of a Kronecker product is bounded by the larger of the
/// factors' least depths.
pub fn check_tensor_bound(
    a: &IrredundantMatrix,
    b: &IrredundantMatrix,
) -> Result<TensorVerdict, TheoremViolation> {
    let da = a.depth().least_depth();
    let db = b.depth().least_depth();
    let dt = a.tensor(b).depth().least_depth();
    if dt > da.max(db) {
        return Err(TheoremViolation {
            check: "tensor depth bound",
            details: format!("factors have least depths {da}, {db} but tensor has {dt}"),
        });
    }
    Ok(TensorVerdict {
        left_least_depth: da,
        right_least_depth: db,
        tensor_least_depth: dt,
    })
}

/// True iff some row and column relabelling carries `a` onto `b`. Columns
/// are matched by backtracking inside signature classes; rows are then
/// compared as multisets.
pub fn permutation_equivalent(a: &IrredundantMatrix, b: &IrredundantMatrix) -> bool {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return false;
    }
    let (r, c) = (a.rows(), a.cols());

    let col_signature = |m: &IrredundantMatrix, j: usize| -> Vec<BigUint> {
        let mut sig: Vec<BigUint> = (0..r).map(|i| m.get(i, j).clone()).collect();
        sig.sort();
        sig
    };
    let sigs_a: Vec<_> = (0..c).map(|j| col_signature(a, j)).collect();
    let sigs_b: Vec<_> = (0..c).map(|j| col_signature(b, j)).collect();
    {
        let mut sa = sigs_a.clone();
        let mut sb = sigs_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return false;
        }
    }

    let rows_match = |assignment: &[usize]| -> bool {
        // assignment[j] = column of b matched with column j of a
        let mut rows_a: Vec<Vec<&BigUint>> = (0..r)
            .map(|i| (0..c).map(|j| a.get(i, j)).collect())
            .collect();
        let mut rows_b: Vec<Vec<&BigUint>> = (0..r)
            .map(|i| (0..c).map(|j| b.get(i, assignment[j])).collect())
            .collect();
        rows_a.sort();
        rows_b.sort();
        rows_a == rows_b
    };

    fn backtrack(
        j: usize,
        c: usize,
        sigs_a: &[Vec<BigUint>],
        sigs_b: &[Vec<BigUint>],
        used: &mut Vec<bool>,
        assignment: &mut Vec<usize>,
        rows_match: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        if j == c {
            return rows_match(assignment);
        }
        for k in 0..c {
            if !used[k] && sigs_a[j] == sigs_b[k] {
                used[k] = true;
                assignment[j] = k;
                if backtrack(j + 1, c, sigs_a, sigs_b, used, assignment, rows_match) {
                    return true;
                }
                used[k] = false;
            }
        }
        false
    }

    let mut used = vec![false; c];
    let mut assignment = vec![0usize; c];
    backtrack(
        0,
        c,
        &sigs_a,
        &sigs_b,
        &mut used,
        &mut assignment,
        &rows_match,
    )
}
