//! Finite-dimensional algebras, coalgebras, bialgebras and Hopf algebras
//! given by structure constants.
//!
//! Unit, counit and antipode are all optional. Non-unital algebras and
//! non-counital coalgebras are first-class: checkers ask only for the maps
//! they actually use.

mod axioms;
mod builtin;

pub use axioms::{
    check_antipode, check_associativity, check_bialgebra, check_coassociativity, check_comodule, check_hopf,
    check_module, check_unit_counit, solve_counit, CounitSolution,
};
pub use builtin::{builtin, builtin_names, dual_group_algebra, group_algebra, tensor_product, Group};

use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Vector};
use crate::scalar::Field;
use crate::tensor::{MultiMap, Tensor3};

/// Which side a module, comodule or Hopf module structure lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Side> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(Error::Parse(format!("unknown side `{s}`"))),
        }
    }
}

/// Coarse classification by which structure maps are present.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicStructure {
    dim: usize,
    field: Field,
    mul: Option<Tensor3>,
    comul: Option<Tensor3>,
    unit: Option<Vector>,
    counit: Option<LinearMap>,
    antipode: Option<LinearMap>,
    names: Option<Vec<String>>,
}

/// Assembles an [`AlgebraicStructure`], validating shapes on `build`.
#[derive(Clone, Debug)]
pub struct StructureBuilder {
    inner: AlgebraicStructure,
}

impl StructureBuilder {
    #[allow(clippy::should_implement_trait)]
    pub fn mul(mut self, t: Tensor3) -> Self {
        self.inner.mul = Some(t);
        self
    }

    pub fn comul(mut self, t: Tensor3) -> Self {
        self.inner.comul = Some(t);
        self
    }

    pub fn unit(mut self, v: Vector) -> Self {
        self.inner.unit = Some(v);
        self
    }

    pub fn counit(mut self, m: LinearMap) -> Self {
        self.inner.counit = Some(m);
        self
    }

    pub fn antipode(mut self, m: LinearMap) -> Self {
        self.inner.antipode = Some(m);
        self
    }

    pub fn names(mut self, names: Vec<String>) -> Self {
        self.inner.names = Some(names);
        self
    }

    pub fn build(self) -> Result<AlgebraicStructure> {
        let s = self.inner;
        let d = s.dim;
        let bad = |msg: String| Err(Error::InvalidStructure(msg));
        if s.mul.is_none() && s.comul.is_none() {
            return bad("a structure needs a multiplication or a comultiplication".into());
        }
        for (what, t) in [("mul", &s.mul), ("comul", &s.comul)] {
            if let Some(t) = t {
                s.field.ensure(t.field())?;
                if t.dims() != [d, d, d] {
                    return bad(format!("{what} has dims {:?}, expected [{d}, {d}, {d}]", t.dims()));
                }
            }
        }
        if let Some(u) = &s.unit {
            s.field.ensure(u.field())?;
            if s.mul.is_none() {
                return bad("unit without multiplication".into());
            }
            if u.dim() != d {
                return bad(format!("unit has dim {}, expected {d}", u.dim()));
            }
        }
        if let Some(e) = &s.counit {
            s.field.ensure(e.field())?;
            if s.comul.is_none() {
                return bad("counit without comultiplication".into());
            }
            if (e.rows(), e.cols()) != (1, d) {
                return bad(format!("counit is {}x{}, expected 1x{d}", e.rows(), e.cols()));
            }
        }
        if let Some(a) = &s.antipode {
            s.field.ensure(a.field())?;
            if s.unit.is_none() || s.counit.is_none() {
                return bad("antipode requires multiplication, comultiplication, unit and counit".into());
            }
            if (a.rows(), a.cols()) != (d, d) {
                return bad(format!("antipode is {}x{}, expected {d}x{d}", a.rows(), a.cols()));
            }
        }
        if let Some(n) = &s.names {
            if n.len() != d {
                return bad(format!("{} basis labels for dimension {d}", n.len()));
            }
        }
        Ok(s)
    }
}

impl AlgebraicStructure {
    pub fn builder(field: Field, dim: usize) -> StructureBuilder {
        StructureBuilder {
            inner: AlgebraicStructure {
                dim,
                field,
                mul: None,
                comul: None,
                unit: None,
                counit: None,
                antipode: None,
                names: None,
            },
        }
    }

    /// Reopens the structure for modification.
    pub fn to_builder(&self) -> StructureBuilder {
        StructureBuilder { inner: self.clone() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn mul(&self) -> Option<&Tensor3> {
        self.mul.as_ref()
    }

    pub fn comul(&self) -> Option<&Tensor3> {
        self.comul.as_ref()
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn counit(&self) -> Option<&LinearMap> {
        self.counit.as_ref()
    }

    pub fn antipode(&self) -> Option<&LinearMap> {
        self.antipode.as_ref()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn kind(&self) -> StructureKind {
        match (&self.mul, &self.comul, &self.antipode) {
            (Some(_), Some(_), Some(_)) => StructureKind::Hopf,
            (Some(_), Some(_), None) => StructureKind::Bialgebra,
            (Some(_), None, _) => StructureKind::Algebra,
            _ => StructureKind::Coalgebra,
        }
    }

    /// Same structure with the multiplication side removed.
    pub fn coalgebra_part(&self) -> Result<AlgebraicStructure> {
        let comul = self.comul.clone().ok_or(Error::Missing("comultiplication"))?;
        let mut b = AlgebraicStructure::builder(self.field, self.dim).comul(comul);
        if let Some(e) = &self.counit {
            b = b.counit(e.clone());
        }
        if let Some(n) = &self.names {
            b = b.names(n.clone());
        }
        b.build()
    }

    /// Reduces every structure constant into `field`.
    pub fn to_field(&self, field: Field) -> Result<AlgebraicStructure> {
        if field == self.field {
            return Ok(self.clone());
        }
        let vec = |v: &Vector| -> Result<Vector> {
            Vector::from_entries(
                field,
                v.entries().iter().map(|e| e.to_field(field)).collect::<Result<_>>()?,
            )
        };
        Ok(AlgebraicStructure {
            dim: self.dim,
            field,
            mul: self.mul.as_ref().map(|t| t.to_field(field)).transpose()?,
            comul: self.comul.as_ref().map(|t| t.to_field(field)).transpose()?,
            unit: self.unit.as_ref().map(vec).transpose()?,
            counit: self.counit.as_ref().map(|m| m.to_field(field)).transpose()?,
            antipode: self.antipode.as_ref().map(|m| m.to_field(field)).transpose()?,
            names: self.names.clone(),
        })
    }

    pub fn mul_map(&self) -> Result<MultiMap> {
        self.mul
            .as_ref()
            .map(MultiMap::from_mul)
            .ok_or(Error::Missing("multiplication"))
    }

    pub fn comul_map(&self) -> Result<MultiMap> {
        self.comul
            .as_ref()
            .map(MultiMap::from_comul)
            .ok_or(Error::Missing("comultiplication"))
    }

    pub fn unit_map(&self) -> Result<MultiMap> {
        self.unit
            .as_ref()
            .map(MultiMap::from_vector)
            .ok_or(Error::Missing("unit"))
    }

    pub fn counit_map(&self) -> Result<MultiMap> {
        let e = self.counit.as_ref().ok_or(Error::Missing("counit"))?;
        MultiMap::from_linear_map(e, vec![self.dim], Vec::new())
    }

    pub fn antipode_map(&self) -> Result<MultiMap> {
        MultiMap::endo(self.antipode.as_ref().ok_or(Error::Missing("antipode"))?)
    }

    /// `η∘ε` as a matrix.
    pub fn unit_counit(&self) -> Result<LinearMap> {
        let u = self.unit.as_ref().ok_or(Error::Missing("unit"))?;
        let e = self.counit.as_ref().ok_or(Error::Missing("counit"))?;
        let col = LinearMap::from_entries(self.field, self.dim, 1, u.entries().to_vec())?;
        col.compose(e)
    }

    pub fn label(&self, i: usize) -> String {
        self.names
            .as_ref()
            .and_then(|n| n.get(i).cloned())
            .unwrap_or_else(|| format!("e{i}"))
    }
}
