//! Exact structure-constant computations for Rota-Baxter operators on
//! finite-dimensional algebras, coalgebras and bialgebras.
//!
//! Everything is computed over `Q` (arbitrary precision) or a prime field;
//! there is no floating point anywhere.

pub mod error;
pub mod hopf_module;
pub mod linalg;
pub mod prelie;
pub mod rota_baxter;
pub mod scalar;
pub mod structures;
pub mod tensor;
pub mod verdict;
pub mod yetter_drinfeld;

pub use error::{Error, Result};
pub use hopf_module::{HopfModuleStructure, ProjectionBialgebra};
pub use linalg::{kron, kron_index, LinearMap, Vector};
pub use prelie::PreLieCoalgebra;
pub use rota_baxter::{RBBialgebraVerdict, RBVerdict, RbSide};
pub use scalar::{Field, Scalar};
pub use structures::{builtin, AlgebraicStructure, Side};
pub use tensor::{Direction, MultiMap, SparseTensor, Tensor3};
pub use verdict::{AxiomVerdict, DefectReport};
pub use yetter_drinfeld::{CoquasitriangularForm, SmashProjection, YDModuleCoalgebra};
