use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Vector};
use crate::tensor::MultiMap;
use crate::verdict::{check_identity, require, AxiomVerdict, DefectReport};

use super::{AlgebraicStructure, Side};

/// `(ab)c = a(bc)` on all basis triples.
pub fn check_associativity(s: &AlgebraicStructure) -> Result<AxiomVerdict> {
    let mu = s.mul_map()?;
    let d = s.dim();
    check_identity(
        "associativity",
        s.field(),
        &[d, d, d],
        |t| t.apply(0, &mu)?.apply(0, &mu),
        |t| t.apply(1, &mu)?.apply(0, &mu),
    )
}

/// `(Δ⊗id)Δ = (id⊗Δ)Δ` on all basis vectors.
pub fn check_coassociativity(s: &AlgebraicStructure) -> Result<AxiomVerdict> {
    let delta = s.comul_map()?;
    check_identity(
        "coassociativity",
        s.field(),
        &[s.dim()],
        |t| t.apply(0, &delta)?.apply(0, &delta),
        |t| t.apply(0, &delta)?.apply(1, &delta),
    )
}

/// Unit laws for whichever of unit and counit are present.
pub fn check_unit_counit(s: &AlgebraicStructure) -> Result<AxiomVerdict> {
    if s.unit().is_none() && s.counit().is_none() {
        return Err(Error::Missing("unit or counit"));
    }
    let d = s.dim();
    let f = s.field();
    if s.unit().is_some() {
        let mu = s.mul_map()?;
        let eta = s.unit_map()?;
        require!(check_identity(
            "left unit",
            f,
            &[d],
            |t| t.apply(0, &eta)?.apply(0, &mu),
            |t| Ok(t.clone()),
        )?);
        require!(check_identity(
            "right unit",
            f,
            &[d],
            |t| t.apply(1, &eta)?.apply(0, &mu),
            |t| Ok(t.clone()),
        )?);
    }
    if s.counit().is_some() {
        let delta = s.comul_map()?;
        let eps = s.counit_map()?;
        require!(check_identity(
            "left counit",
            f,
            &[d],
            |t| t.apply(0, &delta)?.apply(0, &eps),
            |t| Ok(t.clone()),
        )?);
        require!(check_identity(
            "right counit",
            f,
            &[d],
            |t| t.apply(0, &delta)?.apply(1, &eps),
            |t| Ok(t.clone()),
        )?);
    }
    Ok(AxiomVerdict::pass())
}

/// `Δ(ab) = Δ(a)Δ(b)`, plus `ε(ab) = ε(a)ε(b)`, `Δ(1) = 1⊗1` and
/// `ε(1) = 1` for whichever of unit and counit are present.
pub fn check_bialgebra(s: &AlgebraicStructure) -> Result<AxiomVerdict> {
    let mu = s.mul_map()?;
    let delta = s.comul_map()?;
    let d = s.dim();
    let f = s.field();
    require!(check_identity(
        "comultiplicativity",
        f,
        &[d, d],
        |t| t.apply(0, &mu)?.apply(0, &delta),
        |t| {
            t.apply(1, &delta)?
                .apply(0, &delta)?
                .permute(&[0, 2, 1, 3])?
                .apply(0, &mu)?
                .apply(1, &mu)
        },
    )?);
    if s.counit().is_some() {
        let eps = s.counit_map()?;
        require!(check_identity(
            "counit multiplicativity",
            f,
            &[d, d],
            |t| t.apply(0, &mu)?.apply(0, &eps),
            |t| t.apply(1, &eps)?.apply(0, &eps),
        )?);
    }
    if s.unit().is_some() {
        let eta = s.unit_map()?;
        require!(check_identity(
            "unit comultiplicativity",
            f,
            &[],
            |t| t.apply(0, &eta)?.apply(0, &delta),
            |t| t.apply(0, &eta)?.apply(1, &eta),
        )?);
        if s.counit().is_some() {
            let eps = s.counit_map()?;
            require!(check_identity(
                "counit of unit",
                f,
                &[],
                |t| t.apply(0, &eta)?.apply(0, &eps),
                |t| Ok(t.clone()),
            )?);
        }
    }
    Ok(AxiomVerdict::pass())
}

/// `S(a₁)a₂ = ε(a)1 = a₁S(a₂)` on all basis vectors.
pub fn check_antipode(s: &AlgebraicStructure) -> Result<AxiomVerdict> {
    let mu = s.mul_map()?;
    let delta = s.comul_map()?;
    let eta = s.unit_map()?;
    let eps = s.counit_map()?;
    let anti = s.antipode_map()?;
    let f = s.field();
    let d = s.dim();
    let unit_counit = |t: &crate::tensor::SparseTensor| t.apply(0, &eps)?.apply(0, &eta);
    require!(check_identity(
        "left antipode",
        f,
        &[d],
        |t| t.apply(0, &delta)?.apply(0, &anti)?.apply(0, &mu),
        unit_counit,
    )?);
    check_identity(
        "right antipode",
        f,
        &[d],
        |t| t.apply(0, &delta)?.apply(1, &anti)?.apply(0, &mu),
        unit_counit,
    )
}

/// Every Hopf algebra axiom, stopping at the first failure.
pub fn check_hopf(s: &AlgebraicStructure) -> Result<AxiomVerdict> {
    require!(check_associativity(s)?);
    require!(check_coassociativity(s)?);
    require!(check_unit_counit(s)?);
    require!(check_bialgebra(s)?);
    check_antipode(s)
}

pub(crate) fn coaction_multimap(
    h: &AlgebraicStructure,
    m_dim: usize,
    coaction: &LinearMap,
    side: Side,
) -> Result<MultiMap> {
    h.field().ensure(coaction.field())?;
    let out = match side {
        Side::Right => vec![m_dim, h.dim()],
        Side::Left => vec![h.dim(), m_dim],
    };
    MultiMap::from_linear_map(coaction, vec![m_dim], out)
}

pub(crate) fn action_multimap(
    h: &AlgebraicStructure,
    m_dim: usize,
    action: &LinearMap,
    side: Side,
) -> Result<MultiMap> {
    h.field().ensure(action.field())?;
    let input = match side {
        Side::Right => vec![m_dim, h.dim()],
        Side::Left => vec![h.dim(), m_dim],
    };
    MultiMap::from_linear_map(action, input, vec![m_dim])
}

/// Coassociativity and (when `H` has a counit) counitality of a coaction
/// `M → M⊗H` (right) or `M → H⊗M` (left).
pub fn check_comodule(h: &AlgebraicStructure, m_dim: usize, coaction: &LinearMap, side: Side) -> Result<AxiomVerdict> {
    let rho = coaction_multimap(h, m_dim, coaction, side)?;
    let delta = h.comul_map()?;
    let f = h.field();
    match side {
        Side::Right => require!(check_identity(
            "right comodule coassociativity",
            f,
            &[m_dim],
            |t| t.apply(0, &rho)?.apply(0, &rho),
            |t| t.apply(0, &rho)?.apply(1, &delta),
        )?),
        Side::Left => require!(check_identity(
            "left comodule coassociativity",
            f,
            &[m_dim],
            |t| t.apply(0, &rho)?.apply(1, &rho),
            |t| t.apply(0, &rho)?.apply(0, &delta),
        )?),
    }
    if h.counit().is_some() {
        let eps = h.counit_map()?;
        let pos = match side {
            Side::Right => 1,
            Side::Left => 0,
        };
        require!(check_identity(
            "comodule counit",
            f,
            &[m_dim],
            |t| t.apply(0, &rho)?.apply(pos, &eps),
            |t| Ok(t.clone()),
        )?);
    }
    Ok(AxiomVerdict::pass())
}

/// Associativity and (when `H` has a unit) unitality of an action
/// `M⊗H → M` (right) or `H⊗M → M` (left).
pub fn check_module(h: &AlgebraicStructure, m_dim: usize, action: &LinearMap, side: Side) -> Result<AxiomVerdict> {
    let act = action_multimap(h, m_dim, action, side)?;
    let mu = h.mul_map()?;
    let f = h.field();
    let hd = h.dim();
    match side {
        Side::Right => require!(check_identity(
            "right module associativity",
            f,
            &[m_dim, hd, hd],
            |t| t.apply(0, &act)?.apply(0, &act),
            |t| t.apply(1, &mu)?.apply(0, &act),
        )?),
        Side::Left => require!(check_identity(
            "left module associativity",
            f,
            &[hd, hd, m_dim],
            |t| t.apply(1, &act)?.apply(0, &act),
            |t| t.apply(0, &mu)?.apply(0, &act),
        )?),
    }
    if h.unit().is_some() {
        let eta = h.unit_map()?;
        let pos = match side {
            Side::Right => 1,
            Side::Left => 0,
        };
        require!(check_identity(
            "module unit",
            f,
            &[m_dim],
            |t| t.apply(pos, &eta)?.apply(0, &act),
            |t| Ok(t.clone()),
        )?);
    }
    Ok(AxiomVerdict::pass())
}

/// Result of solving the linear counit constraints of a coalgebra and then
/// testing the solution against the multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CounitSolution {
    /// `(ε⊗id)Δ = id = (id⊗ε)Δ` has no solution.
    NoCoalgebraCounit,
    /// The coalgebra counit exists but is not an algebra map, so no
    /// bialgebra counit exists.
    NotMultiplicative { counit: LinearMap, defect: DefectReport },
    /// A counit compatible with the whole structure.
    Counit(LinearMap),
}

/// Solves `(ε⊗id)Δ = id` and `(id⊗ε)Δ = id` for `ε` and, when a
/// multiplication is present, checks that the (unique) solution is
/// multiplicative and unital.
pub fn solve_counit(s: &AlgebraicStructure) -> Result<CounitSolution> {
    let comul = s.comul().ok_or(Error::Missing("comultiplication"))?;
    let d = s.dim();
    let f = s.field();
    // unknowns ε_j; rows: left law (i,k) then right law (i,k)
    let mut a = LinearMap::zeros(f, 2 * d * d, d);
    let mut b = Vector::zeros(f, 2 * d * d);
    let mut rhs = b.entries().to_vec();
    for (&[i, j, k], c) in comul.entries() {
        let left_row = i * d + k;
        let v = a.get(left_row, j) + c;
        a.set(left_row, j, v);
        let right_row = d * d + i * d + j;
        let v = a.get(right_row, k) + c;
        a.set(right_row, k, v);
    }
    for i in 0..d {
        rhs[i * d + i] = f.one();
        rhs[d * d + i * d + i] = f.one();
    }
    b = Vector::from_entries(f, rhs)?;
    let Some(eps) = a.solve(&b)? else {
        return Ok(CounitSolution::NoCoalgebraCounit);
    };
    if !a.kernel_basis().is_empty() {
        return Err(Error::InvalidStructure("counit constraints are underdetermined".into()));
    }
    let counit = LinearMap::from_entries(f, 1, d, eps.entries().to_vec())?;
    if s.mul().is_none() {
        return Ok(CounitSolution::Counit(counit));
    }
    let candidate = s.to_builder().counit(counit.clone()).build()?;
    let verdict = check_bialgebra(&candidate)?;
    Ok(match verdict.into_defect() {
        None => CounitSolution::Counit(counit),
        Some(defect) => CounitSolution::NotMultiplicative { counit, defect },
    })
}
