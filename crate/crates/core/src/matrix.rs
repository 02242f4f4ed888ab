//! Dense matrices over F2 with bit-packed rows.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::f2::{FormalSum, F2};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        F2Matrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F2::ONE);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &b) in row.iter().enumerate() {
                m.set(i, j, F2::from(b));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> F2 {
        assert!(i < self.rows && j < self.cols);
        let w = self.data[i * self.words_per_row + j / 64];
        F2::from((w >> (j % 64)) & 1 == 1)
    }

    pub fn set(&mut self, i: usize, j: usize, value: F2) {
        assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.words_per_row + j / 64];
        let mask = 1u64 << (j % 64);
        if value.is_one() {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| u8::from(self.get(i, j))).collect())
            .collect()
    }

    /// Rank by Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut data = self.data.clone();
        let wpr = self.words_per_row;
        let mut rank = 0;
        for col in 0..self.cols {
            let (word, bit) = (col / 64, 1u64 << (col % 64));
            let Some(pivot) = (rank..self.rows).find(|&r| data[r * wpr + word] & bit != 0) else {
                continue;
            };
            if pivot != rank {
                for k in 0..wpr {
                    data.swap(pivot * wpr + k, rank * wpr + k);
                }
            }
            for r in 0..self.rows {
                if r != rank && data[r * wpr + word] & bit != 0 {
                    for k in 0..wpr {
                        let v = data[rank * wpr + k];
                        data[r * wpr + k] ^= v;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

/// Whether `v` lies in the F2-span of `basis`.
pub fn span_contains<B: Ord + Clone>(basis: &[FormalSum<B>], v: &FormalSum<B>) -> bool {
    let mut coords: Vec<&B> = basis.iter().chain([v]).flat_map(|s| s.iter()).collect();
    coords.sort();
    coords.dedup();
    let mut m = F2Matrix::zeros(basis.len() + 1, coords.len());
    for (r, s) in basis.iter().chain([v]).enumerate() {
        for t in s {
            let c = coords
                .binary_search(&t)
                .expect("coordinate collected above");
            m.set(r, c, F2::ONE);
        }
    }
    let with_v = m.rank();
    m.rows -= 1;
    m.data.truncate(m.rows * m.words_per_row);
    m.rank() == with_v
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for row in self.to_rows() {
            let line: String = row
                .iter()
                .map(|b| if *b == 1 { '1' } else { '0' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

impl Serialize for F2Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}
