//! Quadratic forms on even-dimensional GF(2) spaces.
//!
//! A form is stored as its values on the standard basis (`diag`) plus the
//! strictly upper triangle of its polarization (`upper`), so
//!
//! ```text
//! Q(v) = sum_{i in v} diag[i]  +  sum_{i<j in v} upper[i][j]
//! ```
//!
//! The bilinear form `B(u, v) = Q(u + v) + Q(u) + Q(v)` is always derived
//! from `Q` and never stored separately, so the two cannot drift apart.
//! Over GF(2) `B` is alternating; a form is nondegenerate when the radical
//! of `B` is trivial, and nondegenerate forms split into two types told
//! apart by the Arf invariant.
//!
//! Degenerate forms are representable (so the radical can be computed and
//! reported) but `classify` and every downstream constructor reject them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{BitIter, Matrix, Vector, MAX_DIM};

/// The two isometry classes of nondegenerate forms in a given even dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormType {
    Hyperbolic,
    Elliptic,
}

impl FormType {
    pub fn other(self) -> FormType {
        match self {
            FormType::Hyperbolic => FormType::Elliptic,
            FormType::Elliptic => FormType::Hyperbolic,
        }
    }
}

impl fmt::Display for FormType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormType::Hyperbolic => write!(f, "hyperbolic"),
            FormType::Elliptic => write!(f, "elliptic"),
        }
    }
}

impl std::str::FromStr for FormType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hyperbolic" | "plus" | "+" => Ok(FormType::Hyperbolic),
            "elliptic" | "minus" | "-" => Ok(FormType::Elliptic),
            other => Err(Error::Parse {
                what: "form type",
                reason: format!("expected hyperbolic or elliptic, got {other:?}"),
            }),
        }
    }
}

/// Quadratic form on GF(2)^dim, `dim` even, `2 <= dim <= 64`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FormRepr", into = "FormRepr")]
pub struct QuadraticForm {
    dim: usize,
    diag: Vector,
    /// Row `i` holds bits `j > i`: the value `B(e_i, e_j)`.
    upper: Vec<u64>,
}

impl QuadraticForm {
    pub fn new(diag: Vector, upper: Vec<u64>) -> Result<Self> {
        let dim = diag.dim();
        if dim % 2 != 0 {
            return Err(Error::InvalidForm {
                reason: format!("dimension {dim} is odd"),
            });
        }
        if upper.len() != dim {
            return Err(Error::InvalidForm {
                reason: format!("expected {dim} upper rows, got {}", upper.len()),
            });
        }
        for (i, &row) in upper.iter().enumerate() {
            let below = if i == 63 {
                u64::MAX
            } else {
                (1u64 << (i + 1)) - 1
            };
            if row & below != 0 {
                return Err(Error::InvalidForm {
                    reason: format!("upper row {i} has bits at or below the diagonal"),
                });
            }
            if dim < 64 && row >> dim != 0 {
                return Err(Error::InvalidForm {
                    reason: format!("upper row {i} has bits beyond dimension {dim}"),
                });
            }
        }
        Ok(QuadraticForm { dim, diag, upper })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn diag(&self) -> Vector {
        self.diag
    }

    pub fn upper_row(&self, i: usize) -> u64 {
        self.upper[i]
    }

    /// Q(v).
    pub fn eval_q(&self, v: &Vector) -> Result<u8> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: v.dim(),
                right: self.dim,
            });
        }
        let mut acc = (self.diag.bits() & v.bits()).count_ones();
        for i in v.support() {
            acc += (self.upper[i] & v.bits()).count_ones();
        }
        Ok((acc & 1) as u8)
    }

    /// B(u, v) = Q(u + v) + Q(u) + Q(v).
    pub fn eval_b(&self, u: &Vector, v: &Vector) -> Result<u8> {
        let sum = u.add(v)?;
        Ok(self.eval_q(&sum)? ^ self.eval_q(u)? ^ self.eval_q(v)?)
    }

    /// Gram matrix of B on the standard basis (symmetric, zero diagonal).
    pub fn gram(&self) -> Matrix {
        let mut rows = self.upper.clone();
        for i in 0..self.dim {
            for j in BitIter(self.upper[i]) {
                rows[j] |= 1u64 << i;
            }
        }
        Matrix::from_row_words(rows, self.dim).expect("rows stay within dim")
    }

    /// Basis of the radical of B. Empty iff the form is nondegenerate.
    pub fn radical(&self) -> Vec<Vector> {
        self.gram().nullspace()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical().is_empty()
    }

    /// Reference form of rank parameter `r` and the requested type.
    ///
    /// Coordinates come in consecutive pairs. Hyperbolic: `r` pairs with
    /// `Q(e) = Q(f) = 0`, `B(e, f) = 1`. Elliptic: `r - 1` such pairs and a
    /// final pair `(x, y)` with `Q(x) = Q(y) = 1`, `B(x, y) = 1`. Distinct
    /// pairs are orthogonal.
    pub fn standard_form(r: usize, t: FormType) -> Result<Self> {
        if r == 0 || 2 * r > MAX_DIM {
            return Err(Error::RankOutOfRange {
                r,
                max: MAX_DIM / 2,
            });
        }
        let dim = 2 * r;
        let mut upper = vec![0u64; dim];
        for k in 0..r {
            upper[2 * k] = 1u64 << (2 * k + 1);
        }
        let diag = match t {
            FormType::Hyperbolic => Vector::zero(dim)?,
            FormType::Elliptic => Vector::new((0b11u64) << (dim - 2), dim)?,
        };
        QuadraticForm::new(diag, upper)
    }

    /// Arf invariant of a nondegenerate form: split the space into pairs
    /// `(a_i, b_i)` with `B(a_i, b_i) = 1` and mutually orthogonal pairs,
    /// then sum `Q(a_i) Q(b_i)`.
    pub fn arf(&self) -> Result<u8> {
        let radical = self.radical();
        if !radical.is_empty() {
            return Err(Error::Degenerate {
                radical_dim: radical.len(),
            });
        }
        let mut pool: Vec<Vector> = (0..self.dim)
            .map(|i| Vector::unit(i, self.dim).expect("i < dim"))
            .collect();
        let mut arf = 0u8;
        while let Some(&a) = pool.first() {
            let j = (1..pool.len())
                .find(|&j| self.eval_b(&a, &pool[j]).expect("same dim") == 1)
                .unwrap_or_else(|| unreachable!("nondegeneracy survives pair splitting"));
            let b = pool.remove(j);
            pool.remove(0);
            for w in pool.iter_mut() {
                let mut next = *w;
                if self.eval_b(w, &b)? == 1 {
                    next = next.add(&a)?;
                }
                if self.eval_b(w, &a)? == 1 {
                    next = next.add(&b)?;
                }
                *w = next;
            }
            arf ^= self.eval_q(&a)? & self.eval_q(&b)?;
        }
        Ok(arf)
    }

    /// Type of a nondegenerate form: Arf 0 is hyperbolic, Arf 1 elliptic.
    pub fn classify(&self) -> Result<FormType> {
        Ok(match self.arf()? {
            0 => FormType::Hyperbolic,
            _ => FormType::Elliptic,
        })
    }

    /// Largest dimension of a subspace on which Q vanishes identically.
    ///
    /// Exhaustive backtracking over singular vectors; each subspace chain is
    /// visited through its canonical increasing coset-minimal basis.
    /// Nondegenerate forms only (the search relies on the dim/2 bound), and
    /// `dim <= 12` to keep exhaustion honest.
    pub fn max_totally_singular_dim(&self) -> Result<usize> {
        if self.dim > 12 {
            return Err(Error::GuardExceeded {
                what: "totally singular subspace search dimension",
                limit: 12,
                got: self.dim,
            });
        }
        let radical = self.radical();
        if !radical.is_empty() {
            return Err(Error::Degenerate {
                radical_dim: radical.len(),
            });
        }
        let singular: Vec<u64> = (1u64..1 << self.dim)
            .filter(|&bits| {
                let v = Vector::new(bits, self.dim).expect("bits < 2^dim");
                self.eval_q(&v).expect("same dim") == 0
            })
            .collect();
        let bound = self.dim / 2;
        let mut best = 0;
        self.singular_dfs(&singular, &mut Vec::new(), 0, bound, &mut best);
        Ok(best)
    }

    fn singular_dfs(
        &self,
        candidates: &[u64],
        chosen: &mut Vec<u64>,
        lead_mask: u64,
        bound: usize,
        best: &mut usize,
    ) {
        if chosen.len() > *best {
            *best = chosen.len();
        }
        if *best == bound || chosen.len() + candidates.len() <= *best {
            return;
        }
        for (idx, &v) in candidates.iter().enumerate() {
            // Canonical chain: v must be the minimum of its coset modulo the
            // current span, i.e. avoid every pivot bit used so far.
            if v & lead_mask != 0 {
                continue;
            }
            let vv = Vector::new(v, self.dim).expect("candidate in range");
            let next: Vec<u64> = candidates[idx + 1..]
                .iter()
                .copied()
                .filter(|&w| {
                    let wv = Vector::new(w, self.dim).expect("candidate in range");
                    self.eval_b(&vv, &wv).expect("same dim") == 0
                })
                .collect();
            chosen.push(v);
            let pivot = 1u64 << (63 - v.leading_zeros());
            self.singular_dfs(&next, chosen, lead_mask | pivot, bound, best);
            chosen.pop();
            if *best == bound {
                return;
            }
        }
    }

    /// Type read off the largest totally singular subspace: dimension `dim/2`
    /// means hyperbolic, `dim/2 - 1` elliptic. Independent of `classify`.
    pub fn classify_by_witt_index(&self) -> Result<FormType> {
        let w = self.max_totally_singular_dim()?;
        if w == self.dim / 2 {
            Ok(FormType::Hyperbolic)
        } else if w + 1 == self.dim / 2 {
            Ok(FormType::Elliptic)
        } else {
            unreachable!("nondegenerate Witt index must be dim/2 or dim/2 - 1")
        }
    }

    /// Number of vectors with Q(v) = 0, the zero vector included.
    pub fn singular_vector_count(&self) -> Result<u64> {
        if self.dim > 24 {
            return Err(Error::GuardExceeded {
                what: "singular vector enumeration dimension",
                limit: 24,
                got: self.dim,
            });
        }
        let mut count = 0;
        for bits in 0..1u64 << self.dim {
            let v = Vector::new(bits, self.dim).expect("bits < 2^dim");
            if self.eval_q(&v)? == 0 {
                count += 1;
            }
        }
        Ok(count)
    }

    /// True iff `map` (row `i` = image of `e_i`) is an invertible linear map
    /// carrying `self` onto `other`.
    pub fn is_isometry(&self, other: &QuadraticForm, map: &Matrix) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        if map.nrows() != self.dim || map.ncols() != self.dim {
            return Err(Error::DimensionMismatch {
                left: map.nrows(),
                right: self.dim,
            });
        }
        if !map.is_invertible() {
            return Err(Error::SingularMap);
        }
        // Q and B on a basis pin both forms everywhere.
        for i in 0..self.dim {
            let e = Vector::unit(i, self.dim)?;
            if other.eval_q(&map.row(i))? != self.eval_q(&e)? {
                return Ok(false);
            }
            for j in i + 1..self.dim {
                let f = Vector::unit(j, self.dim)?;
                if other.eval_b(&map.row(i), &map.row(j))? != self.eval_b(&e, &f)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadraticForm(dim {}, diag {})", self.dim, self.diag)
    }
}

/// Wire shape: `{"dim": 4, "diag": "c", "upper": ["2", "0", "8", "0"]}`.
/// Hex words, bit `i` = coordinate `i` (the first coordinate is bit 0).
#[derive(Serialize, Deserialize)]
struct FormRepr {
    dim: usize,
    diag: String,
    upper: Vec<String>,
}

impl TryFrom<FormRepr> for QuadraticForm {
    type Error = Error;

    fn try_from(repr: FormRepr) -> Result<Self> {
        let diag = Vector::from_hex(&repr.diag, repr.dim)?;
        let upper = repr
            .upper
            .iter()
            .map(|s| Vector::from_hex(s, repr.dim).map(|v| v.bits()))
            .collect::<Result<Vec<_>>>()?;
        QuadraticForm::new(diag, upper)
    }
}

impl From<QuadraticForm> for FormRepr {
    fn from(form: QuadraticForm) -> FormRepr {
        FormRepr {
            dim: form.dim,
            diag: form.diag.to_hex(),
            upper: form.upper.iter().map(|w| format!("{w:x}")).collect(),
        }
    }
}
