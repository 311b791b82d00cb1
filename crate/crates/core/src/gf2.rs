//! Vectors and matrices over GF(2), packed into machine words.
//!
//! Every space handled by this crate has dimension at most 64, so a vector
//! is a single `u64` plus its dimension and a matrix is one word per row.
//! Coordinate `i` of a vector lives in bit `i` of the word; the first
//! coordinate is bit 0. All arithmetic is xor/popcount, no allocation on
//! the hot paths.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported dimension: one machine word of coordinates.
pub const MAX_DIM: usize = 64;

/// Vector over GF(2) with `dim <= 64` coordinates packed into a word.
///
/// Bit `i` of `bits` holds coordinate `i`. Bits at positions `>= dim` are
/// always zero; constructors enforce this so equality and ordering can be
/// derived.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector {
    bits: u64,
    dim: usize,
}

impl Vector {
    pub fn new(bits: u64, dim: usize) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::DimOutOfRange { dim, max: MAX_DIM });
        }
        if dim < 64 && bits >> dim != 0 {
            return Err(Error::StrayBits { dim });
        }
        Ok(Vector { bits, dim })
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Vector::new(0, dim)
    }

    /// Standard basis vector `e_i` (0-based coordinate index).
    pub fn unit(i: usize, dim: usize) -> Result<Self> {
        if i >= dim {
            return Err(Error::CoordOutOfRange { coord: i, dim });
        }
        Vector::new(1u64 << i, dim)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.dim);
        self.bits >> i & 1 == 1
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Coordinate-wise sum; both operands must share a dimension.
    pub fn add(&self, other: &Vector) -> Result<Vector> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(Vector {
            bits: self.bits ^ other.bits,
            dim: self.dim,
        })
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.bits)
    }

    /// Lowercase hex of the coordinate word, e.g. coordinates {0,1,4} -> "13".
    pub fn to_hex(&self) -> String {
        format!("{:x}", self.bits)
    }

    pub fn from_hex(s: &str, dim: usize) -> Result<Self> {
        let bits = u64::from_str_radix(s.trim().trim_start_matches("0x"), 16).map_err(|_| {
            Error::Parse {
                what: "hex vector",
                reason: format!("not a hex word: {s:?}"),
            }
        })?;
        Vector::new(bits, dim)
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vector({:#x}/{})", self.bits, self.dim)
    }
}

impl fmt::Display for Vector {
    /// Coordinates as a left-to-right bit string, coordinate 0 first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// Iterator over set bit positions of a word, ascending.
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

/// Row-major matrix over GF(2); row `i` is one word, `cols <= 64`.
///
/// Rows act on the left: a row vector `v` maps to `sum over i in v of
/// row(i)`, so `row(i)` is the image of the standard basis vector `e_i`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: Vec<u64>,
    cols: usize,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Result<Self> {
        if cols == 0 || cols > MAX_DIM {
            return Err(Error::DimOutOfRange {
                dim: cols,
                max: MAX_DIM,
            });
        }
        Ok(Matrix {
            rows: vec![0; rows],
            cols,
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Matrix::zero(n, n)?;
        for i in 0..n {
            m.rows[i] = 1u64 << i;
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vector]) -> Result<Self> {
        let cols = rows.first().map(Vector::dim).ok_or(Error::EmptyMatrix)?;
        for r in rows {
            if r.dim() != cols {
                return Err(Error::DimensionMismatch {
                    left: cols,
                    right: r.dim(),
                });
            }
        }
        Ok(Matrix {
            rows: rows.iter().map(Vector::bits).collect(),
            cols,
        })
    }

    pub fn from_row_words(rows: Vec<u64>, cols: usize) -> Result<Self> {
        if cols == 0 || cols > MAX_DIM {
            return Err(Error::DimOutOfRange {
                dim: cols,
                max: MAX_DIM,
            });
        }
        if cols < 64 {
            if let Some(_bad) = rows.iter().find(|&&w| w >> cols != 0) {
                return Err(Error::StrayBits { dim: cols });
            }
        }
        Ok(Matrix { rows, cols })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector {
            bits: self.rows[i],
            dim: self.cols,
        }
    }

    pub fn row_word(&self, i: usize) -> u64 {
        self.rows[i]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(j < self.cols);
        if value {
            self.rows[i] |= 1u64 << j;
        } else {
            self.rows[i] &= !(1u64 << j);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(j < self.cols);
        self.rows[i] >> j & 1 == 1
    }

    /// Image of `v` under the row action: xor of the rows indexed by `v`.
    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.dim() != self.rows.len() {
            return Err(Error::DimensionMismatch {
                left: v.dim(),
                right: self.rows.len(),
            });
        }
        let mut acc = 0u64;
        for i in v.support() {
            acc ^= self.rows[i];
        }
        Ok(Vector {
            bits: acc,
            dim: self.cols,
        })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix {
            rows: vec![0; self.cols],
            cols: self.rows.len().max(1),
        };
        for (i, &row) in self.rows.iter().enumerate() {
            for j in BitIter(row) {
                t.rows[j] |= 1u64 << i;
            }
        }
        t
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let mask = 1u64 << col;
            if let Some(p) = (rank..rows.len()).find(|&i| rows[i] & mask != 0) {
                rows.swap(rank, p);
                let pivot = rows[rank];
                for (i, row) in rows.iter_mut().enumerate() {
                    if i != rank && *row & mask != 0 {
                        *row ^= pivot;
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    /// Basis of the solution space of `M x = 0`, `x` a column vector with
    /// `cols` entries. Returned vectors have `dim = cols`.
    pub fn nullspace(&self) -> Vec<Vector> {
        // Reduce M to RREF over the columns, tracking pivot columns.
        let mut rows = self.rows.clone();
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; self.cols];
        let mut rank = 0;
        for col in 0..self.cols {
            let mask = 1u64 << col;
            if let Some(p) = (rank..rows.len()).find(|&i| rows[i] & mask != 0) {
                rows.swap(rank, p);
                let pivot = rows[rank];
                for (i, row) in rows.iter_mut().enumerate() {
                    if i != rank && *row & mask != 0 {
                        *row ^= pivot;
                    }
                }
                pivot_of_col[col] = Some(rank);
                rank += 1;
            }
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            // x_free = 1, pivot variables read off from their rows.
            let mut x = 1u64 << free;
            for col in 0..self.cols {
                if let Some(r) = pivot_of_col[col] {
                    if rows[r] >> free & 1 == 1 {
                        x |= 1u64 << col;
                    }
                }
            }
            basis.push(Vector {
                bits: x,
                dim: self.cols,
            });
        }
        basis
    }

    pub fn is_invertible(&self) -> bool {
        self.rows.len() == self.cols && self.rank() == self.cols
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows.len() != self.cols {
            return None;
        }
        let n = self.cols;
        let mut left = self.rows.clone();
        let mut right: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        let mut rank = 0;
        for col in 0..n {
            let mask = 1u64 << col;
            let p = (rank..n).find(|&i| left[i] & mask != 0)?;
            left.swap(rank, p);
            right.swap(rank, p);
            for i in 0..n {
                if i != rank && left[i] & mask != 0 {
                    left[i] ^= left[rank];
                    right[i] ^= right[rank];
                }
            }
            rank += 1;
        }
        Some(Matrix {
            rows: right,
            cols: n,
        })
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows.len(), self.cols)?;
        for i in 0..self.rows.len() {
            writeln!(f, "  {}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Incremental row-echelon accumulator for independence tests.
///
/// `insert` returns false when the vector is already in the span.
#[derive(Clone, Default)]
pub struct Echelon {
    rows: Vec<u64>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    pub fn reduce(&self, mut v: u64) -> u64 {
        for &row in &self.rows {
            let lead = 63 - row.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= row;
            }
        }
        v
    }

    pub fn insert(&mut self, v: u64) -> bool {
        let rem = self.reduce(v);
        if rem == 0 {
            return false;
        }
        self.rows.push(rem);
        // Keep rows sorted by leading bit, descending, so reduce stays valid.
        self.rows.sort_unstable_by(|a, b| b.cmp(a));
        true
    }
}
