//! Pass/fail results for identity checks, with full residuals on failure.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::tensor::{multi_indices, SparseTensor};

/// Residual of a failed identity.
///
/// The residual lives in `inputs ⊗ outputs`: an entry at `(i₁..i_m, o₁..o_n)`
/// is the coefficient of the output basis tensor `o` in `LHS(e_i) − RHS(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectReport {
    pub identity: String,
    pub residual: SparseTensor,
    pub witness: Vec<usize>,
    pub input_rank: usize,
}

impl DefectReport {
    /// The basis input at which the identity first fails.
    pub fn witness_input(&self) -> &[usize] {
        &self.witness[..self.input_rank]
    }

    /// Output coordinate of the first nonzero residual entry.
    pub fn witness_output(&self) -> &[usize] {
        &self.witness[self.input_rank..]
    }
}

impl fmt::Display for DefectReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at input {:?} (output {:?}, {} nonzero residual entries)",
            self.identity,
            self.witness_input(),
            self.witness_output(),
            self.residual.nnz()
        )
    }
}

/// Outcome of an axiom check. Passing is exactly the absence of a defect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomVerdict {
    defect: Option<DefectReport>,
}

impl AxiomVerdict {
    pub fn pass() -> Self {
        AxiomVerdict { defect: None }
    }

    pub fn fail(defect: DefectReport) -> Self {
        AxiomVerdict { defect: Some(defect) }
    }

    pub fn passed(&self) -> bool {
        self.defect.is_none()
    }

    pub fn defect(&self) -> Option<&DefectReport> {
        self.defect.as_ref()
    }

    pub fn into_defect(self) -> Option<DefectReport> {
        self.defect
    }
}

/// Returns early from the enclosing function with a failing verdict.
macro_rules! require {
    ($verdict:expr) => {{
        let v: $crate::verdict::AxiomVerdict = $verdict;
        if !v.passed() {
            return Ok(v.into());
        }
    }};
}
pub(crate) use require;

/// Evaluates `lhs` and `rhs` on every basis tensor of `in_dims` (in
/// lexicographic order) and collects `lhs − rhs`.
pub(crate) fn check_identity(
    name: &str,
    field: Field,
    in_dims: &[usize],
    lhs: impl Fn(&SparseTensor) -> Result<SparseTensor>,
    rhs: impl Fn(&SparseTensor) -> Result<SparseTensor>,
) -> Result<AxiomVerdict> {
    let mut residual: Option<SparseTensor> = None;
    for idx in multi_indices(in_dims) {
        let input = SparseTensor::basis(field, in_dims.to_vec(), idx.clone());
        let diff = lhs(&input)?.sub(&rhs(&input)?)?;
        let res = residual.get_or_insert_with(|| {
            let mut dims = in_dims.to_vec();
            dims.extend_from_slice(diff.dims());
            SparseTensor::zero(field, dims)
        });
        if res.rank() != in_dims.len() + diff.rank() {
            return Err(Error::shape(format!("{name}: output rank varies across inputs")));
        }
        for (o, v) in diff.entries() {
            let mut key = idx.clone();
            key.extend_from_slice(o);
            res.insert_add(key, v);
        }
    }
    Ok(match residual {
        Some(res) if !res.is_zero() => {
            let witness = res.first_nonzero().map(|(k, _)| k.clone()).unwrap_or_default();
            AxiomVerdict::fail(DefectReport {
                identity: name.to_string(),
                residual: res,
                witness,
                input_rank: in_dims.len(),
            })
        }
        _ => AxiomVerdict::pass(),
    })
}
