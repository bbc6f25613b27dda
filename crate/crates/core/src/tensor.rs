//! Sparse tensors and the multilinear maps that act on their factors.
//!
//! Every identity in the toolkit is checked by pushing a basis tensor through
//! two pipelines of [`SparseTensor::apply`] and [`SparseTensor::permute`]
//! calls and comparing the results. Working factor-by-factor keeps iterated
//! coproducts such as `h₁ ⊗ h₂ ⊗ h₃ ⊗ h₄ ⊗ h₅` cheap: nothing of size
//! `dim⁵ × dim` is ever materialised.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{flatten_index, unflatten_index, LinearMap, Vector};
use crate::scalar::{Field, Scalar};

/// Structure constants of a bilinear or co-bilinear map.
///
/// As a multiplication, `e_i · e_j = Σ_k t[i,j,k] e_k`.
/// As a comultiplication, `Δ(e_i) = Σ_{j,k} t[i,j,k] e_j ⊗ e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    field: Field,
    dims: [usize; 3],
    entries: BTreeMap<[usize; 3], Scalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Mul,
    Comul,
}

impl Tensor3 {
    pub fn zeros(field: Field, dims: [usize; 3]) -> Self {
        Tensor3 {
            field,
            dims,
            entries: BTreeMap::new(),
        }
    }

    /// Collects entries, summing repeated indices and dropping zeros.
    pub fn from_entries(
        field: Field,
        dims: [usize; 3],
        entries: impl IntoIterator<Item = ([usize; 3], Scalar)>,
    ) -> Result<Self> {
        let mut t = Self::zeros(field, dims);
        for (idx, value) in entries {
            t.add_to(idx, value)?;
        }
        Ok(t)
    }

    pub fn from_i64(
        field: Field,
        dims: [usize; 3],
        entries: impl IntoIterator<Item = ([usize; 3], i64)>,
    ) -> Result<Self> {
        Self::from_entries(field, dims, entries.into_iter().map(|(i, v)| (i, field.from_i64(v))))
    }

    pub fn add_to(&mut self, idx: [usize; 3], value: Scalar) -> Result<()> {
        self.field.ensure(value.field())?;
        for (&i, &d) in idx.iter().zip(&self.dims) {
            if i >= d {
                return Err(Error::IndexOutOfRange { index: i, dim: d });
            }
        }
        let slot = self.entries.entry(idx).or_insert_with(|| self.field.zero());
        *slot += &value;
        if slot.is_zero() {
            self.entries.remove(&idx);
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn get(&self, idx: [usize; 3]) -> Scalar {
        self.entries.get(&idx).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Nonzero entries in lexicographic index order.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize; 3], &Scalar)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn to_field(&self, field: Field) -> Result<Tensor3> {
        Tensor3::from_entries(
            field,
            self.dims,
            self.entries
                .iter()
                .map(|(i, v)| Ok((*i, v.to_field(field)?)))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// `μ(v ⊗ w)`.
    pub fn multiply(&self, v: &Vector, w: &Vector) -> Result<Vector> {
        self.apply(Direction::Mul, &v.tensor(w)?)
    }

    /// Evaluates the tensor as `μ: V⊗W → U` (argument in `V⊗W`) or as
    /// `Δ: V → W⊗U`.
    pub fn apply(&self, direction: Direction, arg: &Vector) -> Result<Vector> {
        self.field.ensure(arg.field())?;
        let [a, b, c] = self.dims;
        let (in_dim, out_dim) = match direction {
            Direction::Mul => (a * b, c),
            Direction::Comul => (a, b * c),
        };
        if arg.dim() != in_dim {
            return Err(Error::shape(format!(
                "argument of dim {} for a map from dim {in_dim}",
                arg.dim()
            )));
        }
        let mut out = vec![self.field.zero(); out_dim];
        for (&[i, j, k], t) in &self.entries {
            let (src, dst) = match direction {
                Direction::Mul => (i * b + j, k),
                Direction::Comul => (i, j * c + k),
            };
            let x = arg.get(src);
            if !x.is_zero() {
                out[dst] += &(x * t);
            }
        }
        Vector::from_entries(self.field, out)
    }
}

/// Sparse element of `V₁ ⊗ … ⊗ V_r`, keyed by multi-index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseTensor {
    field: Field,
    dims: Vec<usize>,
    entries: BTreeMap<Vec<usize>, Scalar>,
}

impl SparseTensor {
    pub fn zero(field: Field, dims: Vec<usize>) -> Self {
        SparseTensor {
            field,
            dims,
            entries: BTreeMap::new(),
        }
    }

    pub fn basis(field: Field, dims: Vec<usize>, idx: Vec<usize>) -> Self {
        debug_assert_eq!(dims.len(), idx.len());
        let mut t = Self::zero(field, dims);
        t.entries.insert(idx, field.one());
        t
    }

    /// The scalar `c` as a rank-0 tensor.
    pub fn scalar(c: Scalar) -> Self {
        let mut t = Self::zero(c.field(), Vec::new());
        if !c.is_zero() {
            t.entries.insert(Vec::new(), c);
        }
        t
    }

    /// Interprets a flat vector as an element of the tensor space `dims`.
    pub fn from_vector(v: &Vector, dims: Vec<usize>) -> Result<Self> {
        let n: usize = dims.iter().product();
        if n != v.dim() {
            return Err(Error::shape(format!(
                "vector of dim {} viewed in a space of dim {n}",
                v.dim()
            )));
        }
        let mut t = Self::zero(v.field(), dims);
        for (k, x) in v.entries().iter().enumerate() {
            if !x.is_zero() {
                t.entries.insert(unflatten_index(k, &t.dims), x.clone());
            }
        }
        Ok(t)
    }

    pub fn to_vector(&self) -> Vector {
        let n: usize = self.dims.iter().product();
        let mut out = vec![self.field.zero(); n];
        for (idx, x) in &self.entries {
            out[flatten_index(idx, &self.dims)] = x.clone();
        }
        Vector::from_entries(self.field, out).expect("entries share the tensor's field")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, idx: &[usize]) -> Scalar {
        self.entries.get(idx).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.entries.iter()
    }

    /// Lexicographically first nonzero entry.
    pub fn first_nonzero(&self) -> Option<(&Vec<usize>, &Scalar)> {
        self.entries.iter().next()
    }

    pub fn insert_add(&mut self, idx: Vec<usize>, value: &Scalar) {
        if value.is_zero() {
            return;
        }
        match self.entries.get_mut(&idx) {
            Some(slot) => {
                *slot += value;
                if slot.is_zero() {
                    self.entries.remove(&idx);
                }
            }
            None => {
                self.entries.insert(idx, value.clone());
            }
        }
    }

    fn ensure_same_space(&self, other: &SparseTensor) -> Result<()> {
        self.field.ensure(other.field)?;
        if self.dims != other.dims {
            return Err(Error::shape(format!(
                "tensor spaces {:?} and {:?} differ",
                self.dims, other.dims
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &SparseTensor) -> Result<SparseTensor> {
        self.ensure_same_space(other)?;
        let mut out = self.clone();
        for (idx, v) in &other.entries {
            out.insert_add(idx.clone(), v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SparseTensor) -> Result<SparseTensor> {
        self.ensure_same_space(other)?;
        let mut out = self.clone();
        for (idx, v) in &other.entries {
            out.insert_add(idx.clone(), &-v);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> SparseTensor {
        if c.is_zero() {
            return Self::zero(self.field, self.dims.clone());
        }
        SparseTensor {
            field: self.field,
            dims: self.dims.clone(),
            entries: self.entries.iter().map(|(i, v)| (i.clone(), v * c)).collect(),
        }
    }

    /// Outer product `self ⊗ other`.
    pub fn tensor(&self, other: &SparseTensor) -> Result<SparseTensor> {
        self.field.ensure(other.field)?;
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut out = Self::zero(self.field, dims);
        for (a, x) in &self.entries {
            for (b, y) in &other.entries {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                out.entries.insert(idx, x * y);
            }
        }
        Ok(out)
    }

    /// Reorders tensor factors: factor `i` of the result is factor
    /// `order[i]` of `self`.
    pub fn permute(&self, order: &[usize]) -> Result<SparseTensor> {
        let r = self.rank();
        let mut seen = vec![false; r];
        if order.len() != r {
            return Err(Error::shape(format!(
                "permutation of length {} on rank {r}",
                order.len()
            )));
        }
        for &o in order {
            if o >= r || seen[o] {
                return Err(Error::shape(format!("{order:?} is not a permutation")));
            }
            seen[o] = true;
        }
        let dims = order.iter().map(|&o| self.dims[o]).collect();
        let mut out = Self::zero(self.field, dims);
        for (idx, v) in &self.entries {
            out.entries.insert(order.iter().map(|&o| idx[o]).collect(), v.clone());
        }
        Ok(out)
    }

    /// Regroups factors without moving coefficients; the flat row-major
    /// index of every entry is preserved.
    pub fn reshape(&self, dims: Vec<usize>) -> Result<SparseTensor> {
        if dims.iter().product::<usize>() != self.dims.iter().product::<usize>() {
            return Err(Error::shape(format!("cannot reshape {:?} to {:?}", self.dims, dims)));
        }
        let mut out = Self::zero(self.field, dims);
        for (idx, v) in &self.entries {
            let k = flatten_index(idx, &self.dims);
            out.entries.insert(unflatten_index(k, &out.dims), v.clone());
        }
        Ok(out)
    }

    /// Applies `op` to the factors starting at `pos`, replacing its input
    /// factors by its output factors.
    pub fn apply(&self, pos: usize, op: &MultiMap) -> Result<SparseTensor> {
        self.field.ensure(op.field)?;
        let k = op.in_dims.len();
        if pos + k > self.rank() || self.dims[pos..pos + k] != op.in_dims[..] {
            return Err(Error::shape(format!(
                "map on {:?} applied at factor {pos} of {:?}",
                op.in_dims, self.dims
            )));
        }
        let mut dims = self.dims[..pos].to_vec();
        dims.extend_from_slice(&op.out_dims);
        dims.extend_from_slice(&self.dims[pos + k..]);
        let mut out = Self::zero(self.field, dims);
        for (idx, x) in &self.entries {
            let col = flatten_index(&idx[pos..pos + k], &op.in_dims);
            for (oidx, y) in &op.columns[col] {
                let mut nidx = Vec::with_capacity(out.dims.len());
                nidx.extend_from_slice(&idx[..pos]);
                nidx.extend_from_slice(oidx);
                nidx.extend_from_slice(&idx[pos + k..]);
                out.insert_add(nidx, &(x * y));
            }
        }
        Ok(out)
    }
}

/// A linear map `V₁⊗…⊗V_m → W₁⊗…⊗W_n` stored column-sparse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiMap {
    field: Field,
    in_dims: Vec<usize>,
    out_dims: Vec<usize>,
    columns: Vec<Vec<(Vec<usize>, Scalar)>>,
}

impl MultiMap {
    pub fn from_fn(
        field: Field,
        in_dims: Vec<usize>,
        out_dims: Vec<usize>,
        mut f: impl FnMut(&[usize]) -> Result<SparseTensor>,
    ) -> Result<Self> {
        let n: usize = in_dims.iter().product();
        let mut columns = Vec::with_capacity(n);
        for k in 0..n {
            let idx = unflatten_index(k, &in_dims);
            let img = f(&idx)?;
            field.ensure(img.field)?;
            if img.dims != out_dims {
                return Err(Error::shape(format!(
                    "image in {:?}, expected {:?}",
                    img.dims, out_dims
                )));
            }
            columns.push(img.entries.into_iter().collect());
        }
        Ok(MultiMap {
            field,
            in_dims,
            out_dims,
            columns,
        })
    }

    /// The map obtained by running `f` on every basis tensor of `in_dims`.
    pub fn from_pipeline(
        field: Field,
        in_dims: Vec<usize>,
        out_dims: Vec<usize>,
        f: impl Fn(&SparseTensor) -> Result<SparseTensor>,
    ) -> Result<Self> {
        let dims = in_dims.clone();
        Self::from_fn(field, in_dims, out_dims, |idx| {
            f(&SparseTensor::basis(field, dims.clone(), idx.to_vec()))
        })
    }

    /// Reads a dense matrix as a map between the given tensor spaces.
    pub fn from_linear_map(m: &LinearMap, in_dims: Vec<usize>, out_dims: Vec<usize>) -> Result<Self> {
        let n_in: usize = in_dims.iter().product();
        let n_out: usize = out_dims.iter().product();
        if m.cols() != n_in || m.rows() != n_out {
            return Err(Error::shape(format!(
                "{}x{} matrix read as a map {:?} -> {:?}",
                m.rows(),
                m.cols(),
                in_dims,
                out_dims
            )));
        }
        let columns = (0..n_in)
            .map(|c| {
                m.column_support(c)
                    .into_iter()
                    .map(|(r, v)| (unflatten_index(r, &out_dims), v))
                    .collect()
            })
            .collect();
        Ok(MultiMap {
            field: m.field(),
            in_dims,
            out_dims,
            columns,
        })
    }

    /// A square matrix as an endomorphism of a single factor.
    pub fn endo(m: &LinearMap) -> Result<Self> {
        Self::from_linear_map(m, vec![m.cols()], vec![m.rows()])
    }

    pub fn from_mul(t: &Tensor3) -> Self {
        let [a, b, c] = t.dims;
        let mut columns = vec![Vec::new(); a * b];
        for (&[i, j, k], v) in &t.entries {
            columns[i * b + j].push((vec![k], v.clone()));
        }
        MultiMap {
            field: t.field,
            in_dims: vec![a, b],
            out_dims: vec![c],
            columns,
        }
    }

    pub fn from_comul(t: &Tensor3) -> Self {
        let [a, b, c] = t.dims;
        let mut columns = vec![Vec::new(); a];
        for (&[i, j, k], v) in &t.entries {
            columns[i].push((vec![j, k], v.clone()));
        }
        MultiMap {
            field: t.field,
            in_dims: vec![a],
            out_dims: vec![b, c],
            columns,
        }
    }

    pub fn identity(field: Field, dim: usize) -> Self {
        MultiMap {
            field,
            in_dims: vec![dim],
            out_dims: vec![dim],
            columns: (0..dim).map(|i| vec![(vec![i], field.one())]).collect(),
        }
    }

    /// A vector as the map `k → V`, `1 ↦ v`.
    pub fn from_vector(v: &Vector) -> Self {
        MultiMap {
            field: v.field(),
            in_dims: Vec::new(),
            out_dims: vec![v.dim()],
            columns: vec![v
                .entries()
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (vec![i], x.clone()))
                .collect()],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn in_dims(&self) -> &[usize] {
        &self.in_dims
    }

    pub fn out_dims(&self) -> &[usize] {
        &self.out_dims
    }

    /// Image of the basis tensor with multi-index `idx`.
    pub fn image(&self, idx: &[usize]) -> SparseTensor {
        let mut out = SparseTensor::zero(self.field, self.out_dims.clone());
        for (o, v) in &self.columns[flatten_index(idx, &self.in_dims)] {
            out.insert_add(o.clone(), v);
        }
        out
    }

    /// Dense matrix of the map under the flat row-major convention.
    pub fn to_linear_map(&self) -> LinearMap {
        let rows = self.out_dims.iter().product();
        let cols = self.columns.len();
        LinearMap::from_columns(self.field, rows, cols, |c| {
            Ok(self.columns[c]
                .iter()
                .map(|(o, v)| (flatten_index(o, &self.out_dims), v.clone()))
                .collect())
        })
        .expect("indices come from out_dims")
    }
}

/// Every multi-index of the space `dims`, in lexicographic order.
pub fn multi_indices(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let n: usize = dims.iter().product();
    (0..n).map(move |k| unflatten_index(k, dims))
}
