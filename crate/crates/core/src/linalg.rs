//! Dense vectors and matrices over an exact [`Field`].
//!
//! A [`LinearMap`] with `rows × cols` entries sends basis vector `e_j` to
//! column `j`. Tensor-product spaces use the row-major [`kron_index`]
//! convention throughout: the left factor is the most significant digit.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Flat index of `e_i ⊗ e_j` in `V ⊗ W` where `dim W = dim_w`.
pub fn kron_index(i: usize, j: usize, dim_w: usize) -> Result<usize> {
    if j >= dim_w {
        return Err(Error::IndexOutOfRange { index: j, dim: dim_w });
    }
    Ok(i * dim_w + j)
}

/// Inverse of [`kron_index`].
pub fn kron_split(k: usize, dim_w: usize) -> (usize, usize) {
    (k / dim_w, k % dim_w)
}

/// Flat index of a multi-index under the row-major convention.
pub fn flatten_index(idx: &[usize], dims: &[usize]) -> usize {
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

/// Inverse of [`flatten_index`].
pub fn unflatten_index(mut k: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = k % d;
        k /= d;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector {
    field: Field,
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(field: Field, dim: usize) -> Self {
        Vector {
            field,
            entries: vec![field.zero(); dim],
        }
    }

    pub fn basis(field: Field, dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, dim);
        v.entries[i] = field.one();
        v
    }

    pub fn from_entries(field: Field, entries: Vec<Scalar>) -> Result<Self> {
        for e in &entries {
            field.ensure(e.field())?;
        }
        Ok(Vector { field, entries })
    }

    pub fn from_i64(field: Field, entries: &[i64]) -> Self {
        Vector {
            field,
            entries: entries.iter().map(|&n| field.from_i64(n)).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.field.ensure(other.field)?;
        if self.dim() != other.dim() {
            return Err(Error::shape(format!("vector dims {} and {}", self.dim(), other.dim())));
        }
        Ok(Vector {
            field: self.field,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            field: self.field,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// Coordinates of `v ⊗ w` under [`kron_index`].
    pub fn tensor(&self, other: &Vector) -> Result<Vector> {
        self.field.ensure(other.field)?;
        let mut entries = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.entries {
            for b in &other.entries {
                entries.push(a * b);
            }
        }
        Ok(Vector {
            field: self.field,
            entries,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl LinearMap {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        LinearMap {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    /// Row-major entries.
    pub fn from_entries(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        for e in &entries {
            field.ensure(e.field())?;
        }
        Ok(LinearMap {
            field,
            rows,
            cols,
            entries,
        })
    }

    /// Row-major integer entries; convenient for fixtures.
    pub fn from_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Self::from_entries(field, rows, cols, entries.iter().map(|&n| field.from_i64(n)).collect())
    }

    /// Builds the matrix whose column `j` is `f(j)`.
    pub fn from_columns(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize) -> Result<Vec<(usize, Scalar)>>,
    ) -> Result<Self> {
        let mut m = Self::zeros(field, rows, cols);
        for j in 0..cols {
            for (i, c) in f(j)? {
                if i >= rows {
                    return Err(Error::IndexOutOfRange { index: i, dim: rows });
                }
                let slot = &mut m.entries[i * cols + j];
                *slot = &*slot + &c;
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector {
            field: self.field,
            entries: (0..self.rows).map(|r| self.get(r, c).clone()).collect(),
        }
    }

    /// Nonzero entries of column `c` as `(row, value)`.
    pub fn column_support(&self, c: usize) -> Vec<(usize, Scalar)> {
        (0..self.rows)
            .filter_map(|r| {
                let v = self.get(r, c);
                (!v.is_zero()).then(|| (r, v.clone()))
            })
            .collect()
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        self.field.ensure(v.field())?;
        if v.dim() != self.cols {
            return Err(Error::shape(format!(
                "{}x{} map applied to vector of dim {}",
                self.rows,
                self.cols,
                v.dim()
            )));
        }
        let mut out = Vector::zeros(self.field, self.rows);
        for (c, x) in v.entries.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = self.get(r, c);
                if !a.is_zero() {
                    out.entries[r] += &(a * x);
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        self.field.ensure(other.field)?;
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = LinearMap::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.field.ensure(other.field)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::shape("adding matrices of different shapes"));
        }
        Ok(LinearMap {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            entries: self.entries.iter().map(|a| a * c).collect(),
            ..self.clone()
        }
    }

    pub fn transpose(&self) -> LinearMap {
        let mut out = LinearMap::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (LinearMap, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..m.cols {
            let Some(p) = (rank..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            if p != rank {
                for j in 0..m.cols {
                    m.entries.swap(p * m.cols + j, rank * m.cols + j);
                }
            }
            let inv = m.get(rank, c).inv().expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = m.get(rank, j) * &inv;
                m.set(rank, j, v);
            }
            for r in 0..m.rows {
                if r == rank {
                    continue;
                }
                let f = m.get(r, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let v = m.get(r, j) - &(&f * m.get(rank, j));
                    m.set(r, j, v);
                }
            }
            pivots.push(c);
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the column space: the pivot columns of the original matrix.
    pub fn image_basis(&self) -> Vec<Vector> {
        let (_, pivots) = self.rref();
        pivots.into_iter().map(|c| self.column(c)).collect()
    }

    /// Basis of `{x : self·x = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = Vector::zeros(self.field, self.cols);
                v.entries[f] = self.field.one();
                for (row, &p) in pivots.iter().enumerate() {
                    v.entries[p] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    /// One solution of `self·x = b`, or `None` when the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &Vector) -> Result<Option<Vector>> {
        self.field.ensure(b.field())?;
        if b.dim() != self.rows {
            return Err(Error::shape("right-hand side has the wrong length"));
        }
        let mut aug = LinearMap::zeros(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b.get(r).clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = Vector::zeros(self.field, self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x.entries[p] = red.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Reduces an integer-valued rational matrix into a prime field.
    pub fn to_field(&self, field: Field) -> Result<LinearMap> {
        Ok(LinearMap {
            field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.to_field(field)).collect::<Result<_>>()?,
        })
    }
}

/// `(f ⊗ g)(v ⊗ w) = f(v) ⊗ g(w)` under [`kron_index`].
pub fn kron(f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
    f.field.ensure(g.field)?;
    let rows = f.rows * g.rows;
    let cols = f.cols * g.cols;
    let mut out = LinearMap::zeros(f.field, rows, cols);
    for fr in 0..f.rows {
        for fc in 0..f.cols {
            let a = f.get(fr, fc);
            if a.is_zero() {
                continue;
            }
            for gr in 0..g.rows {
                for gc in 0..g.cols {
                    let b = g.get(gr, gc);
                    if !b.is_zero() {
                        out.set(fr * g.rows + gr, fc * g.cols + gc, a * b);
                    }
                }
            }
        }
    }
    Ok(out)
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
