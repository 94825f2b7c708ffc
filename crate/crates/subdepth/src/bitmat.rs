//! Bit-packed boolean matrices over the (OR, AND) semiring.
//!
//! Zero-pattern stabilization is decided entirely on these matrices; the
//! exact big-integer arithmetic only runs afterwards to certify the
//! inequality constant. Rows are packed into `u64` words so a semiring
//! product reduces to OR-ing whole rows together.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

const WORD: usize = 64;

/// Dense boolean matrix, row-major, each row padded to whole words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoolMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BoolMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(WORD).max(1);
        BoolMatrix {
            rows,
            cols,
            words_per_row,
            bits: vec![0; rows * words_per_row],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        let w = self.bits[i * self.words_per_row + j / WORD];
        w >> (j % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.bits[i * self.words_per_row + j / WORD];
        if value {
            *w |= 1 << (j % WORD);
        } else {
            *w &= !(1 << (j % WORD));
        }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    pub fn transpose(&self) -> BoolMatrix {
        let mut t = BoolMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    fn mul_row_into(&self, other: &BoolMatrix, i: usize, out_row: &mut [u64]) {
        for k in 0..self.cols {
            if self.get(i, k) {
                for (w, src) in out_row.iter_mut().zip(other.row(k)) {
                    *w |= *src;
                }
            }
        }
    }

    /// Semiring product, serial path. Entry (i, j) is true iff some k has
    /// self[i][k] and other[k][j].
    pub fn mul_serial(&self, other: &BoolMatrix) -> BoolMatrix {
        assert_eq!(self.cols, other.rows, "semiring product shape mismatch");
        let mut out = BoolMatrix::zeros(self.rows, other.cols);
        let wpr = out.words_per_row;
        for (i, out_row) in out.bits.chunks_mut(wpr).enumerate() {
            self.mul_row_into(other, i, out_row);
        }
        out
    }

    /// Semiring product, one rayon task per output row. Each row is computed
    /// by the same word-OR loop as the serial path, so results are
    /// bit-identical.
    #[cfg(feature = "parallel")]
    pub fn mul_parallel(&self, other: &BoolMatrix) -> BoolMatrix {
        assert_eq!(self.cols, other.rows, "semiring product shape mismatch");
        let mut out = BoolMatrix::zeros(self.rows, other.cols);
        let wpr = out.words_per_row;
        out.bits
            .par_chunks_mut(wpr)
            .enumerate()
            .for_each(|(i, out_row)| self.mul_row_into(other, i, out_row));
        out
    }

    pub fn mul(&self, other: &BoolMatrix) -> BoolMatrix {
        #[cfg(feature = "parallel")]
        {
            // Tiny products are not worth the fork-join overhead.
            if self.rows * other.cols >= 4096 {
                return self.mul_parallel(other);
            }
        }
        self.mul_serial(other)
    }

    /// True iff every set bit of `self` is set in `other`.
    pub fn is_submatrix_of(&self, other: &BoolMatrix) -> bool {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.row(i).iter().all(|&w| w == 0)
    }

    pub fn col_is_zero(&self, j: usize) -> bool {
        (0..self.rows).all(|i| !self.get(i, j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&[u8]]) -> BoolMatrix {
        let r = rows.len();
        let c = rows[0].len();
        let mut m = BoolMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v != 0);
            }
        }
        m
    }

    #[test]
    fn product_matches_definition() {
        let a = from_rows(&[&[1, 0, 1], &[0, 1, 1]]);
        let b = a.transpose();
        let s = a.mul_serial(&b);
        // A(M M^t) for the two-row inclusion matrix is all-ones.
        for i in 0..2 {
            for j in 0..2 {
                assert!(s.get(i, j));
            }
        }
    }

    #[test]
    fn submatrix_order_is_reflexive_and_detects_growth() {
        let a = from_rows(&[&[1, 0], &[0, 1]]);
        let b = from_rows(&[&[1, 1], &[1, 1]]);
        assert!(a.is_submatrix_of(&a));
        assert!(a.is_submatrix_of(&b));
        assert!(!b.is_submatrix_of(&a));
    }

    #[test]
    fn wide_matrices_cross_word_boundaries() {
        let mut m = BoolMatrix::zeros(2, 130);
        m.set(0, 0, true);
        m.set(0, 129, true);
        m.set(1, 64, true);
        let t = m.transpose();
        assert!(t.get(129, 0) && t.get(64, 1) && !t.get(64, 0));
        let p = m.mul_serial(&t);
        assert!(p.get(0, 0) && p.get(1, 1) && !p.get(0, 1));
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_product_is_bit_identical() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let r = rng.gen_range(1..90);
            let k = rng.gen_range(1..90);
            let c = rng.gen_range(1..90);
            let mut a = BoolMatrix::zeros(r, k);
            let mut b = BoolMatrix::zeros(k, c);
            for i in 0..r {
                for j in 0..k {
                    a.set(i, j, rng.gen_bool(0.3));
                }
            }
            for i in 0..k {
                for j in 0..c {
                    b.set(i, j, rng.gen_bool(0.3));
                }
            }
            assert_eq!(a.mul_serial(&b), a.mul_parallel(&b));
        }
    }
}
