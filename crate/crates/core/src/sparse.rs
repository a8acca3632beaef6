//! CSR sparse matrices and sparse-dense products.

use crate::dense::DenseMatrix;
use rayon::prelude::*;

/// Compressed sparse row matrix with `f64` values.
///
/// Column indices are ascending within each row and carry no duplicates.
#[derive(Debug, Clone, PartialEq)]
pub struct CsrMatrix {
    pub rows: usize,
    pub cols: usize,
    pub row_offsets: Vec<usize>,
    pub col_indices: Vec<usize>,
    pub values: Vec<f64>,
}

impl CsrMatrix {
    /// Build from (row, col, value) triplets. Triplets must be unique;
    /// they are sorted into canonical CSR order.
    pub fn from_triplets(rows: usize, cols: usize, mut triplets: Vec<(usize, usize, f64)>) -> Self {
        triplets.sort_unstable_by_key(|&(r, c, _)| (r, c));
        let mut row_offsets = vec![0usize; rows + 1];
        let mut col_indices = Vec::with_capacity(triplets.len());
        let mut values = Vec::with_capacity(triplets.len());
        for &(r, c, v) in &triplets {
            debug_assert!(r < rows && c < cols);
            row_offsets[r + 1] += 1;
            col_indices.push(c);
            values.push(v);
        }
        for i in 0..rows {
            row_offsets[i + 1] += row_offsets[i];
        }
        CsrMatrix {
            rows,
            cols,
            row_offsets,
            col_indices,
            values,
        }
    }

    /// Build from a dense matrix, keeping only nonzero entries.
    pub fn from_dense(m: &DenseMatrix) -> Self {
        let mut triplets = Vec::new();
        for i in 0..m.rows {
            for j in 0..m.cols {
                let v = m.get(i, j);
                if v != 0.0 {
                    triplets.push((i, j, v));
                }
            }
        }
        CsrMatrix::from_triplets(m.rows, m.cols, triplets)
    }

    pub fn nnz(&self) -> usize {
        self.col_indices.len()
    }

    #[inline]
    pub fn row_range(&self, i: usize) -> std::ops::Range<usize> {
        self.row_offsets[i]..self.row_offsets[i + 1]
    }

    /// Sparse-dense product `self * x`, parallel over output rows.
    /// Each output row is a fixed-order accumulation, independent of
    /// thread count.
    pub fn mul_dense(&self, x: &DenseMatrix) -> DenseMatrix {
        assert_eq!(
            self.cols, x.rows,
            "spmm shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, x.rows, x.cols
        );
        let xc = x.cols;
        let mut out = DenseMatrix::zeros(self.rows, xc);
        out.data
            .par_chunks_mut(xc)
            .enumerate()
            .for_each(|(i, out_row)| {
                for idx in self.row_offsets[i]..self.row_offsets[i + 1] {
                    let j = self.col_indices[idx];
                    let v = self.values[idx];
                    let x_row = &x.data[j * xc..(j + 1) * xc];
                    for (o, &xv) in out_row.iter_mut().zip(x_row) {
                        *o += v * xv;
                    }
                }
            });
        out
    }

    pub fn transpose(&self) -> CsrMatrix {
        let nnz = self.nnz();
        let mut counts = vec![0usize; self.cols + 1];
        for &c in &self.col_indices {
            counts[c + 1] += 1;
        }
        for i in 0..self.cols {
            counts[i + 1] += counts[i];
        }
        let row_offsets = counts.clone();
        let mut col_indices = vec![0usize; nnz];
        let mut values = vec![0.0; nnz];
        let mut cursor = counts;
        for r in 0..self.rows {
            for idx in self.row_offsets[r]..self.row_offsets[r + 1] {
                let c = self.col_indices[idx];
                let dest = cursor[c];
                col_indices[dest] = r;
                values[dest] = self.values[idx];
                cursor[c] += 1;
            }
        }
        CsrMatrix {
            rows: self.cols,
            cols: self.rows,
            row_offsets,
            col_indices,
            values,
        }
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for idx in self.row_range(i) {
                out.set(i, self.col_indices[idx], self.values[idx]);
            }
        }
        out
    }
}
