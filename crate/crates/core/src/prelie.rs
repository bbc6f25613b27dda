//! Pre-Lie coalgebras built from Rota-Baxter coalgebra operators.
//!
//! With `Δ_C = (Δ⊗id)Δ − (id⊗Δ)Δ`, a comultiplication is pre-Lie when
//! `Δ_C = Φ₁₂ Δ_C`, where `Φ₁₂` swaps the first two tensor factors.

use crate::error::{Error, Result};
use crate::linalg::LinearMap;
use crate::rota_baxter::check_rb_coalgebra;
use crate::scalar::{Field, Scalar};
use crate::structures::AlgebraicStructure;
use crate::tensor::{MultiMap, SparseTensor, Tensor3};
use crate::verdict::{check_identity, AxiomVerdict};

/// The permutation matrix of `u⊗v⊗w ↦ v⊗u⊗w` on `(k^dim)^{⊗3}`.
/// [`check_pre_lie`] applies the same permutation sparsely.
pub fn flip12(field: Field, dim: usize) -> LinearMap {
    let d2 = dim * dim;
    LinearMap::from_columns(field, d2 * dim, d2 * dim, |col| {
        let (a, b, c) = (col / d2, (col / dim) % dim, col % dim);
        Ok(vec![(b * d2 + a * dim + c, field.one())])
    })
    .expect("permutation indices are in range")
}

fn check_comul_shape(field: Field, dim: usize, comul: &Tensor3) -> Result<()> {
    field.ensure(comul.field())?;
    if comul.dims() != [dim, dim, dim] {
        return Err(Error::shape(format!(
            "comultiplication has dims {:?}, expected [{dim}; 3]",
            comul.dims()
        )));
    }
    Ok(())
}

/// `Δ_C − Φ₁₂Δ_C = 0` on every basis vector. The defect residual has rank 4:
/// one input factor and three output factors.
pub fn check_pre_lie(field: Field, dim: usize, comul: &Tensor3) -> Result<AxiomVerdict> {
    check_comul_shape(field, dim, comul)?;
    let delta = MultiMap::from_comul(comul);
    let assoc = |t: &SparseTensor| -> Result<SparseTensor> {
        let d = t.apply(0, &delta)?;
        d.apply(0, &delta)?.sub(&d.apply(1, &delta)?)
    };
    check_identity(
        "pre-Lie coidentity",
        field,
        &[dim],
        |t| assoc(t),
        |t| assoc(t)?.permute(&[1, 0, 2]),
    )
}

/// A comultiplication satisfying the pre-Lie coidentity. Only obtainable
/// through checked constructors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieCoalgebra {
    field: Field,
    dim: usize,
    comul: Tensor3,
}

impl PreLieCoalgebra {
    /// Wraps `comul` after checking the pre-Lie coidentity.
    pub fn new(field: Field, dim: usize, comul: Tensor3) -> Result<Self> {
        if let Some(d) = check_pre_lie(field, dim, &comul)?.into_defect() {
            return Err(Error::InvalidStructure(format!("not pre-Lie: {d}")));
        }
        Ok(PreLieCoalgebra { field, dim, comul })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comul(&self) -> &Tensor3 {
        &self.comul
    }
}

/// `Δ̃(c) = Q(c₁)⊗c₂ − Q(c₂)⊗c₁ + γ c₁⊗c₂`, with no hypothesis on `Q`.
pub fn raw_prelie_comul(s: &AlgebraicStructure, q: &LinearMap, gamma: &Scalar) -> Result<Tensor3> {
    let delta = s.comul_map()?;
    let f = s.field();
    f.ensure(q.field())?;
    f.ensure(gamma.field())?;
    let d = s.dim();
    if (q.rows(), q.cols()) != (d, d) {
        return Err(Error::shape(format!(
            "operator is {}x{}, expected {d}x{d}",
            q.rows(),
            q.cols()
        )));
    }
    let qm = MultiMap::endo(q)?;
    let map = MultiMap::from_pipeline(f, vec![d], vec![d, d], |t| {
        let dt = t.apply(0, &delta)?;
        let a = dt.apply(0, &qm)?;
        let b = dt.apply(1, &qm)?.permute(&[1, 0])?;
        a.sub(&b)?.add(&dt.scale(gamma))
    })?;
    let mut entries = Vec::new();
    for i in 0..d {
        for (j, k, v) in map.image(&[i]).entries().map(|(idx, v)| (idx[0], idx[1], v.clone())) {
            entries.push(([i, j, k], v));
        }
    }
    Tensor3::from_entries(f, [d, d, d], entries)
}

fn gated(s: &AlgebraicStructure, q: &LinearMap, gamma: Scalar, what: &str) -> Result<PreLieCoalgebra> {
    if let Some(d) = check_rb_coalgebra(s, q, &gamma)?.defect() {
        return Err(Error::precondition(what, Some(d.clone())));
    }
    let comul = raw_prelie_comul(s, q, &gamma)?;
    if let Some(d) = check_pre_lie(s.field(), s.dim(), &comul)?.into_defect() {
        return Err(Error::postcondition("pre-Lie coidentity", Some(d)));
    }
    Ok(PreLieCoalgebra {
        field: s.field(),
        dim: s.dim(),
        comul,
    })
}

/// `Δ̃(c) = Q(c₁)⊗c₂ − Q(c₂)⊗c₁ − c₁⊗c₂` for a Rota-Baxter coalgebra
/// operator `Q` of weight −1. Refuses other operators.
pub fn prelie_from_rb_weight_minus1(s: &AlgebraicStructure, q: &LinearMap) -> Result<PreLieCoalgebra> {
    gated(
        s,
        q,
        s.field().from_i64(-1),
        "Rota-Baxter coalgebra operator of weight -1",
    )
}

/// `Δ̃(c) = Q(c₁)⊗c₂ − Q(c₂)⊗c₁` for a Rota-Baxter coalgebra operator `Q`
/// of weight 0. Refuses other operators.
pub fn prelie_from_rb_weight0(s: &AlgebraicStructure, q: &LinearMap) -> Result<PreLieCoalgebra> {
    gated(s, q, s.field().zero(), "Rota-Baxter coalgebra operator of weight 0")
}
