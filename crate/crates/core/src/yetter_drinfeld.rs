//! Left Yetter-Drinfeld modules and coalgebras, the smash coproduct `C×H`,
//! the two Hopf module coalgebra structures on `C×H` with their coinvariant
//! projections, and coquasitriangular forms.
//!
//! `C×H` has basis `c⊗h` at flat index `c·dim H + h`.

use crate::error::{Error, Result};
use crate::hopf_module::{check_hopf_module_coalgebra, projection, HopfModuleStructure};
use crate::linalg::{kron, LinearMap};
use crate::rota_baxter::{check_rb_coalgebra_idempotent, RBVerdict};
use crate::scalar::Field;
use crate::structures::{
    check_coassociativity, check_comodule, check_hopf, check_module, check_unit_counit, AlgebraicStructure, Group,
    Side, StructureKind,
};
use crate::tensor::{MultiMap, Tensor3};
use crate::verdict::{check_identity, require, AxiomVerdict};

fn left_action(h: &AlgebraicStructure, m_dim: usize, action: &LinearMap) -> Result<MultiMap> {
    h.field().ensure(action.field())?;
    MultiMap::from_linear_map(action, vec![h.dim(), m_dim], vec![m_dim])
}

fn left_coaction(h: &AlgebraicStructure, m_dim: usize, coaction: &LinearMap) -> Result<MultiMap> {
    h.field().ensure(coaction.field())?;
    MultiMap::from_linear_map(coaction, vec![m_dim], vec![h.dim(), m_dim])
}

/// Left module, left comodule and
/// `h₁v₍₋₁₎ ⊗ h₂·v₍₀₎ = (h₁·v)₍₋₁₎h₂ ⊗ (h₁·v)₍₀₎`.
pub fn check_yd_module(
    h: &AlgebraicStructure,
    m_dim: usize,
    action: &LinearMap,
    coaction: &LinearMap,
) -> Result<AxiomVerdict> {
    require!(check_module(h, m_dim, action, Side::Left)?);
    require!(check_comodule(h, m_dim, coaction, Side::Left)?);
    let (act, rho) = (left_action(h, m_dim, action)?, left_coaction(h, m_dim, coaction)?);
    let (mu, delta) = (h.mul_map()?, h.comul_map()?);
    check_identity(
        "Yetter-Drinfeld compatibility",
        h.field(),
        &[h.dim(), m_dim],
        |t| {
            t.apply(1, &rho)?
                .apply(0, &delta)?
                .permute(&[0, 2, 1, 3])?
                .apply(0, &mu)?
                .apply(1, &act)
        },
        |t| {
            t.apply(0, &delta)?
                .permute(&[0, 2, 1])?
                .apply(0, &act)?
                .apply(0, &rho)?
                .permute(&[0, 2, 1])?
                .apply(0, &mu)
        },
    )
}

/// A coalgebra `C` with a left `H`-action and left `H`-coaction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDModuleCoalgebra {
    h: AlgebraicStructure,
    c: AlgebraicStructure,
    action: LinearMap,
    coaction: LinearMap,
}

impl YDModuleCoalgebra {
    /// Checks shapes only; see [`check_yd_coalgebra`] for the axioms.
    pub fn new(h: AlgebraicStructure, c: AlgebraicStructure, action: LinearMap, coaction: LinearMap) -> Result<Self> {
        if h.kind() != StructureKind::Hopf {
            return Err(Error::InvalidStructure("H must be a Hopf algebra".into()));
        }
        h.field().ensure(c.field())?;
        c.comul_map()?;
        let (cd, hd) = (c.dim(), h.dim());
        if (action.rows(), action.cols()) != (cd, hd * cd) {
            return Err(Error::shape(format!(
                "action is {}x{}, expected {cd}x{}",
                action.rows(),
                action.cols(),
                hd * cd
            )));
        }
        if (coaction.rows(), coaction.cols()) != (hd * cd, cd) {
            return Err(Error::shape(format!(
                "coaction is {}x{}, expected {}x{cd}",
                coaction.rows(),
                coaction.cols(),
                hd * cd
            )));
        }
        left_action(&h, cd, &action)?;
        left_coaction(&h, cd, &coaction)?;
        Ok(YDModuleCoalgebra { h, c, action, coaction })
    }

    /// `H` acting on itself by left multiplication with the adjoint
    /// coaction `ρ(h) = h₁S(h₃) ⊗ h₂`.
    pub fn adjoint(h: &AlgebraicStructure) -> Result<Self> {
        let (mu, delta, s) = (h.mul_map()?, h.comul_map()?, h.antipode_map()?);
        let d = h.dim();
        let coaction = MultiMap::from_pipeline(h.field(), vec![d], vec![d, d], |t| {
            t.apply(0, &delta)?
                .apply(0, &delta)?
                .apply(2, &s)?
                .permute(&[0, 2, 1])?
                .apply(0, &mu)
        })?;
        YDModuleCoalgebra::new(
            h.clone(),
            h.coalgebra_part()?,
            mu.to_linear_map(),
            coaction.to_linear_map(),
        )
    }

    pub fn hopf(&self) -> &AlgebraicStructure {
        &self.h
    }

    pub fn coalgebra(&self) -> &AlgebraicStructure {
        &self.c
    }

    pub fn action(&self) -> &LinearMap {
        &self.action
    }

    pub fn coaction(&self) -> &LinearMap {
        &self.coaction
    }

    pub fn field(&self) -> Field {
        self.h.field()
    }

    fn act(&self) -> Result<MultiMap> {
        left_action(&self.h, self.c.dim(), &self.action)
    }

    fn rho(&self) -> Result<MultiMap> {
        left_coaction(&self.h, self.c.dim(), &self.coaction)
    }
}

/// Yetter-Drinfeld module axioms, coassociativity of `C`, and that `Δ_C` is
/// a module map (`Δ(h·c) = h₁·c₁ ⊗ h₂·c₂`) and a comodule map
/// (`c₍₋₁₎ ⊗ c₍₀₎₁ ⊗ c₍₀₎₂ = c₁₍₋₁₎c₂₍₋₁₎ ⊗ c₁₍₀₎ ⊗ c₂₍₀₎`). When `C` has a
/// counit, `ε_C` must be a module and comodule map too.
pub fn check_yd_coalgebra(ydc: &YDModuleCoalgebra) -> Result<AxiomVerdict> {
    let (h, c) = (&ydc.h, &ydc.c);
    require!(check_yd_module(h, c.dim(), &ydc.action, &ydc.coaction)?);
    require!(check_coassociativity(c)?);
    let (act, rho) = (ydc.act()?, ydc.rho()?);
    let (mu, delta, dc) = (h.mul_map()?, h.comul_map()?, c.comul_map()?);
    let (cd, hd, f) = (c.dim(), h.dim(), h.field());
    require!(check_identity(
        "comultiplication is a module map",
        f,
        &[hd, cd],
        |t| t.apply(0, &act)?.apply(0, &dc),
        |t| {
            t.apply(1, &dc)?
                .apply(0, &delta)?
                .permute(&[0, 2, 1, 3])?
                .apply(0, &act)?
                .apply(1, &act)
        },
    )?);
    require!(check_identity(
        "comultiplication is a comodule map",
        f,
        &[cd],
        |t| t.apply(0, &rho)?.apply(1, &dc),
        |t| {
            t.apply(0, &dc)?
                .apply(0, &rho)?
                .apply(2, &rho)?
                .permute(&[0, 2, 1, 3])?
                .apply(0, &mu)
        },
    )?);
    if c.counit().is_some() {
        let (ec, eh, eta) = (c.counit_map()?, h.counit_map()?, h.unit_map()?);
        require!(check_identity(
            "counit is a module map",
            f,
            &[hd, cd],
            |t| t.apply(0, &act)?.apply(0, &ec),
            |t| t.apply(1, &ec)?.apply(0, &eh),
        )?);
        require!(check_identity(
            "counit is a comodule map",
            f,
            &[cd],
            |t| t.apply(0, &rho)?.apply(1, &ec),
            |t| t.apply(0, &ec)?.apply(0, &eta),
        )?);
    }
    Ok(AxiomVerdict::pass())
}

/// The smash coproduct `Δ(c⊗h) = c₁ ⊗ c₂₍₋₁₎h₁ ⊗ c₂₍₀₎ ⊗ h₂` on `C⊗H`.
/// The counit `ε_C⊗ε_H` is attached when both counits exist and it
/// verifies. Coassociativity of the result is checked.
pub fn smash_coproduct(ydc: &YDModuleCoalgebra) -> Result<AlgebraicStructure> {
    let (h, c) = (&ydc.h, &ydc.c);
    let (cd, hd, f) = (c.dim(), h.dim(), h.field());
    let (mu, delta, dc, rho) = (h.mul_map()?, h.comul_map()?, c.comul_map()?, ydc.rho()?);
    let map = MultiMap::from_pipeline(f, vec![cd, hd], vec![cd, hd, cd, hd], |t| {
        t.apply(1, &delta)?
            .apply(0, &dc)?
            .apply(1, &rho)?
            .permute(&[0, 1, 3, 2, 4])?
            .apply(1, &mu)
    })?;
    let n = cd * hd;
    let m = map.to_linear_map();
    let mut entries = Vec::new();
    for i in 0..n {
        for (row, v) in m.column_support(i) {
            entries.push(([i, row / n, row % n], v));
        }
    }
    let comul = Tensor3::from_entries(f, [n, n, n], entries)?;
    let mut b = AlgebraicStructure::builder(f, n).comul(comul);
    if let (Some(ec), Some(eh)) = (c.counit(), h.counit()) {
        let eps = kron(ec, eh)?;
        if check_unit_counit(&b.clone().counit(eps.clone()).build()?)?.passed() {
            b = b.counit(eps);
        }
    }
    let smash = b.build()?;
    if let Some(d) = check_coassociativity(&smash)?.into_defect() {
        return Err(Error::postcondition("smash coproduct is coassociative", Some(d)));
    }
    Ok(smash)
}

/// Everything computed for one side of the Hopf module coalgebra on `C×H`.
#[derive(Clone, Debug)]
pub struct SmashProjection {
    pub smash: AlgebraicStructure,
    pub module: HopfModuleStructure,
    pub module_coalgebra: AxiomVerdict,
    /// The generic coinvariant projection of `module`.
    pub projection: LinearMap,
    /// The closed form specific to `C×H`.
    pub closed_form: LinearMap,
    /// Rota-Baxter coalgebra check of `projection` at weight −1, with
    /// idempotency.
    pub rb: RBVerdict,
}

impl SmashProjection {
    pub fn closed_form_matches(&self) -> bool {
        self.projection == self.closed_form
    }

    pub fn idempotent(&self) -> bool {
        self.rb.idempotent == Some(true)
    }

    pub fn passed(&self) -> bool {
        self.module_coalgebra.passed() && self.closed_form_matches() && self.idempotent() && self.rb.passed()
    }
}

fn finish(smash: AlgebraicStructure, module: HopfModuleStructure, closed_form: LinearMap) -> Result<SmashProjection> {
    let module_coalgebra = check_hopf_module_coalgebra(&module)?;
    let projection = projection(&module)?;
    let rb = check_rb_coalgebra_idempotent(&smash, &projection, &smash.field().from_i64(-1))?;
    Ok(SmashProjection {
        smash,
        module,
        module_coalgebra,
        projection,
        closed_form,
        rb,
    })
}

fn require_yd(ydc: &YDModuleCoalgebra) -> Result<()> {
    match check_yd_coalgebra(ydc)?.into_defect() {
        Some(d) => Err(Error::precondition("Yetter-Drinfeld coalgebra", Some(d))),
        None => Ok(()),
    }
}

/// Right structure on `C×H`: `(c⊗h)·x = c⊗hx`, `ρ(c⊗h) = (c⊗h₁)⊗h₂`.
/// Closed form `P_R(c⊗h) = ε(h) c⊗1`.
pub fn smash_projection_right(ydc: &YDModuleCoalgebra) -> Result<SmashProjection> {
    require_yd(ydc)?;
    let smash = smash_coproduct(ydc)?;
    let h = &ydc.h;
    let (cd, hd, f) = (ydc.c.dim(), h.dim(), h.field());
    let (mu, delta, eps, eta) = (h.mul_map()?, h.comul_map()?, h.counit_map()?, h.unit_map()?);
    let action = MultiMap::from_pipeline(f, vec![cd, hd, hd], vec![cd, hd], |t| t.apply(1, &mu))?;
    let coaction = MultiMap::from_pipeline(f, vec![cd, hd], vec![cd, hd, hd], |t| t.apply(1, &delta))?;
    let closed = MultiMap::from_pipeline(f, vec![cd, hd], vec![cd, hd], |t| t.apply(1, &eps)?.apply(1, &eta))?;
    let module = HopfModuleStructure::new(
        h.clone(),
        cd * hd,
        Side::Right,
        action.to_linear_map(),
        coaction.to_linear_map(),
    )?
    .with_comul(smash.comul().cloned().ok_or(Error::Missing("comultiplication"))?)?;
    finish(smash, module, closed.to_linear_map())
}

/// Left structure on `C×H`: `x·(c⊗h) = x₁·c ⊗ x₂h`,
/// `ρ(c⊗h) = c₍₋₁₎h₁ ⊗ (c₍₀₎⊗h₂)`. Closed form
/// `P_L(c⊗h) = S(c₍₋₁₎₂h₂)·c₍₀₎ ⊗ S(c₍₋₁₎₁h₁)h₃`.
pub fn smash_projection_left(ydc: &YDModuleCoalgebra) -> Result<SmashProjection> {
    require_yd(ydc)?;
    let smash = smash_coproduct(ydc)?;
    let h = &ydc.h;
    let (cd, hd, f) = (ydc.c.dim(), h.dim(), h.field());
    let (mu, delta, s) = (h.mul_map()?, h.comul_map()?, h.antipode_map()?);
    let (act, rho) = (ydc.act()?, ydc.rho()?);
    let action = MultiMap::from_pipeline(f, vec![hd, cd, hd], vec![cd, hd], |t| {
        t.apply(0, &delta)?
            .permute(&[0, 2, 1, 3])?
            .apply(0, &act)?
            .apply(1, &mu)
    })?;
    let coaction = MultiMap::from_pipeline(f, vec![cd, hd], vec![hd, cd, hd], |t| {
        t.apply(1, &delta)?
            .apply(0, &rho)?
            .permute(&[0, 2, 1, 3])?
            .apply(0, &mu)
    })?;
    // [x₁, x₂, c₀, h₁, h₂, h₃] → [x₂, h₂, c₀, x₁, h₁, h₃]
    let closed = MultiMap::from_pipeline(f, vec![cd, hd], vec![cd, hd], |t| {
        t.apply(0, &rho)?
            .apply(0, &delta)?
            .apply(3, &delta)?
            .apply(3, &delta)?
            .permute(&[1, 4, 2, 0, 3, 5])?
            .apply(0, &mu)?
            .apply(0, &s)?
            .apply(0, &act)?
            .apply(1, &mu)?
            .apply(1, &s)?
            .apply(1, &mu)
    })?;
    let module = HopfModuleStructure::new(
        h.clone(),
        cd * hd,
        Side::Left,
        action.to_linear_map(),
        coaction.to_linear_map(),
    )?
    .with_comul(smash.comul().cloned().ok_or(Error::Missing("comultiplication"))?)?;
    finish(smash, module, closed.to_linear_map())
}

/// A bilinear form `σ` on a Hopf algebra, stored as a `1 × dim²` matrix
/// with `σ(e_i, e_j)` at column `i·dim + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoquasitriangularForm {
    h: AlgebraicStructure,
    sigma: LinearMap,
}

impl CoquasitriangularForm {
    /// Checks shapes only; see [`check_coquasitriangular`].
    pub fn new(h: AlgebraicStructure, sigma: LinearMap) -> Result<Self> {
        if h.kind() != StructureKind::Hopf {
            return Err(Error::InvalidStructure("σ needs a Hopf algebra".into()));
        }
        h.field().ensure(sigma.field())?;
        let d = h.dim();
        if (sigma.rows(), sigma.cols()) != (1, d * d) {
            return Err(Error::shape(format!(
                "σ is {}x{}, expected 1x{}",
                sigma.rows(),
                sigma.cols(),
                d * d
            )));
        }
        Ok(CoquasitriangularForm { h, sigma })
    }

    /// `σ = ε⊗ε`.
    pub fn trivial(h: &AlgebraicStructure) -> Result<Self> {
        let e = h.counit().ok_or(Error::Missing("counit"))?;
        CoquasitriangularForm::new(h.clone(), kron(e, e)?)
    }

    /// A bicharacter on a group algebra: `σ(a, b) = values[a][b]`.
    pub fn from_table(h: &AlgebraicStructure, values: &[Vec<i64>]) -> Result<Self> {
        let d = h.dim();
        if values.len() != d || values.iter().any(|r| r.len() != d) {
            return Err(Error::shape(format!("σ table must be {d}x{d}")));
        }
        let flat: Vec<i64> = values.iter().flatten().copied().collect();
        CoquasitriangularForm::new(h.clone(), LinearMap::from_i64(h.field(), 1, d * d, &flat)?)
    }

    pub fn hopf(&self) -> &AlgebraicStructure {
        &self.h
    }

    pub fn sigma(&self) -> &LinearMap {
        &self.sigma
    }

    fn sigma_map(&self) -> Result<MultiMap> {
        let d = self.h.dim();
        MultiMap::from_linear_map(&self.sigma, vec![d, d], Vec::new())
    }
}

/// The four braiding conditions:
/// `σ(1,h) = σ(h,1) = ε(h)`,
/// `σ(hh',h'') = σ(h,h''₁)σ(h',h''₂)`,
/// `σ(h,h'h'') = σ(h₁,h'')σ(h₂,h')`,
/// `h'₁h₁σ(h₂,h'₂) = σ(h₁,h'₁)h₂h'₂`.
pub fn check_coquasitriangular(cq: &CoquasitriangularForm) -> Result<AxiomVerdict> {
    let h = &cq.h;
    let sg = cq.sigma_map()?;
    let (mu, delta, eps, eta) = (h.mul_map()?, h.comul_map()?, h.counit_map()?, h.unit_map()?);
    let (d, f) = (h.dim(), h.field());
    require!(check_identity(
        "sigma(1,h) = counit",
        f,
        &[d],
        |t| t.apply(0, &eta)?.apply(0, &sg),
        |t| t.apply(0, &eps),
    )?);
    require!(check_identity(
        "sigma(h,1) = counit",
        f,
        &[d],
        |t| t.apply(1, &eta)?.apply(0, &sg),
        |t| t.apply(0, &eps),
    )?);
    require!(check_identity(
        "sigma multiplicative in the first argument",
        f,
        &[d, d, d],
        |t| t.apply(0, &mu)?.apply(0, &sg),
        |t| { t.apply(2, &delta)?.permute(&[0, 2, 1, 3])?.apply(0, &sg)?.apply(0, &sg) },
    )?);
    require!(check_identity(
        "sigma multiplicative in the second argument",
        f,
        &[d, d, d],
        |t| t.apply(1, &mu)?.apply(0, &sg),
        |t| { t.apply(0, &delta)?.permute(&[0, 3, 1, 2])?.apply(0, &sg)?.apply(0, &sg) },
    )?);
    check_identity(
        "sigma braids the multiplication",
        f,
        &[d, d],
        |t| {
            t.apply(1, &delta)?
                .apply(0, &delta)?
                .permute(&[2, 0, 1, 3])?
                .apply(2, &sg)?
                .apply(0, &mu)
        },
        |t| {
            t.apply(1, &delta)?
                .apply(0, &delta)?
                .permute(&[0, 2, 1, 3])?
                .apply(0, &sg)?
                .apply(0, &mu)
        },
    )
}

/// The action `h·m = σ(m₍₋₁₎, h) m₍₀₎` induced on a left comodule, together
/// with the Yetter-Drinfeld module check of the result.
pub fn yd_from_coquasitriangular(
    cq: &CoquasitriangularForm,
    m_dim: usize,
    coaction: &LinearMap,
) -> Result<(LinearMap, AxiomVerdict)> {
    let h = &cq.h;
    if let Some(d) = check_coquasitriangular(cq)?.into_defect() {
        return Err(Error::precondition("coquasitriangular form", Some(d)));
    }
    if let Some(d) = check_comodule(h, m_dim, coaction, Side::Left)?.into_defect() {
        return Err(Error::precondition("left comodule", Some(d)));
    }
    let (sg, rho) = (cq.sigma_map()?, left_coaction(h, m_dim, coaction)?);
    let action = MultiMap::from_pipeline(h.field(), vec![h.dim(), m_dim], vec![m_dim], |t| {
        t.apply(1, &rho)?.permute(&[1, 0, 2])?.apply(0, &sg)
    })?
    .to_linear_map();
    let verdict = check_yd_module(h, m_dim, &action, coaction)?;
    Ok((action, verdict))
}

/// `P_L` on `C×H` for an action induced by `σ`, expanded through the
/// braiding conditions:
/// `σ(c₍₋₁₎₃, S(c₍₋₁₎₂)) σ(c₍₋₁₎₄, S(h₂)) c₍₀₎ ⊗ S(c₍₋₁₎₁h₁)h₃`.
pub fn coquasitriangular_pl_closed_form(
    cq: &CoquasitriangularForm,
    c_dim: usize,
    coaction: &LinearMap,
) -> Result<LinearMap> {
    let h = &cq.h;
    let (mu, delta, s) = (h.mul_map()?, h.comul_map()?, h.antipode_map()?);
    let (sg, rho) = (cq.sigma_map()?, left_coaction(h, c_dim, coaction)?);
    // [x₁, x₂, x₃, x₄, c₀, h₁, h₂, h₃] → [x₃, Sx₂, x₄, Sh₂, c₀, x₁, h₁, h₃]
    Ok(
        MultiMap::from_pipeline(h.field(), vec![c_dim, h.dim()], vec![c_dim, h.dim()], |t| {
            t.apply(0, &rho)?
                .apply(0, &delta)?
                .apply(0, &delta)?
                .apply(0, &delta)?
                .apply(5, &delta)?
                .apply(5, &delta)?
                .apply(1, &s)?
                .apply(6, &s)?
                .permute(&[2, 1, 3, 6, 4, 0, 5, 7])?
                .apply(0, &sg)?
                .apply(0, &sg)?
                .apply(1, &mu)?
                .apply(1, &s)?
                .apply(1, &mu)
        })?
        .to_linear_map(),
    )
}

/// The grading coaction `δ_a ↦ a ⊗ δ_a` of `H = k[G]` on the dual group
/// coalgebra `k^G`.
pub fn grading_coaction(g: &Group, field: Field) -> LinearMap {
    let n = g.order();
    LinearMap::from_columns(field, n * n, n, |a| Ok(vec![(a * n + a, field.one())])).expect("indices are below n²")
}

/// Verifies `H` before building anything on top of it; used by callers that
/// accept user-supplied Hopf algebras.
pub fn require_hopf(h: &AlgebraicStructure) -> Result<()> {
    match check_hopf(h)?.into_defect() {
        Some(d) => Err(Error::precondition("Hopf algebra", Some(d))),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::builtin;

    fn q() -> Field {
        Field::Rational
    }

    fn trivial_yd(h: &AlgebraicStructure, c: &AlgebraicStructure) -> YDModuleCoalgebra {
        let (hd, cd) = (h.dim(), c.dim());
        let eps = h.counit().unwrap();
        let action = kron(eps, &LinearMap::identity(q(), cd)).unwrap();
        let unit = LinearMap::from_entries(q(), hd, 1, h.unit().unwrap().entries().to_vec()).unwrap();
        let coaction = kron(&unit, &LinearMap::identity(q(), cd)).unwrap();
        YDModuleCoalgebra::new(h.clone(), c.clone(), action, coaction).unwrap()
    }

    #[test]
    fn trivial_structure_is_yd() {
        let h = builtin("sweedler4").unwrap();
        let c = builtin("divided-power:3").unwrap();
        let ydc = trivial_yd(&h, &c);
        assert!(check_yd_module(&h, 3, ydc.action(), ydc.coaction()).unwrap().passed());
        assert!(check_yd_coalgebra(&ydc).unwrap().passed());
        for side in [
            smash_projection_right(&ydc).unwrap(),
            smash_projection_left(&ydc).unwrap(),
        ] {
            assert!(side.passed());
        }
    }

    #[test]
    fn adjoint_structure_is_a_yd_coalgebra() {
        for name in ["group:C2", "group:C3", "group:S3", "sweedler4"] {
            let h = builtin(name).unwrap();
            let ydc = YDModuleCoalgebra::adjoint(&h).unwrap();
            assert!(check_yd_coalgebra(&ydc).unwrap().passed(), "{name}");
        }
    }

    #[test]
    fn adjoint_coaction_is_trivial_when_cocommutative() {
        let trivial = |h: &AlgebraicStructure| {
            let d = h.dim();
            let unit = LinearMap::from_entries(q(), d, 1, h.unit().unwrap().entries().to_vec()).unwrap();
            kron(&unit, &LinearMap::identity(q(), d)).unwrap()
        };
        // gS(g) = e for every group element
        for name in ["group:C2", "group:C3", "group:S3"] {
            let h = builtin(name).unwrap();
            assert_eq!(
                YDModuleCoalgebra::adjoint(&h).unwrap().coaction(),
                &trivial(&h),
                "{name}"
            );
        }
        let h4 = builtin("sweedler4").unwrap();
        assert_ne!(YDModuleCoalgebra::adjoint(&h4).unwrap().coaction(), &trivial(&h4));
    }

    #[test]
    fn comultiplication_as_coaction_breaks_compatibility() {
        let h = builtin("sweedler4").unwrap();
        let mu = h.mul_map().unwrap().to_linear_map();
        let delta = h.comul_map().unwrap().to_linear_map();
        let v = check_yd_module(&h, 4, &mu, &delta).unwrap();
        let d = v.defect().expect("regular coaction is not Yetter-Drinfeld on H4");
        assert_eq!(d.identity, "Yetter-Drinfeld compatibility");
        // Dense oracle at the witness (h, v):
        // LHS = h₁v₍₋₁₎ ⊗ h₂v₍₀₎ = Δ(h)Δ(v), RHS = (h₁v)₁h₂ ⊗ (h₁v)₂.
        let (x, y) = (d.witness_input()[0], d.witness_input()[1]);
        let mu4 = h.mul_map().unwrap();
        let dl = h.comul_map().unwrap();
        let e = |i| crate::tensor::SparseTensor::basis(q(), vec![4], vec![i]);
        let lhs = e(x)
            .tensor(&e(y))
            .unwrap()
            .apply(1, &dl)
            .unwrap()
            .apply(0, &dl)
            .unwrap()
            .permute(&[0, 2, 1, 3])
            .unwrap()
            .apply(0, &mu4)
            .unwrap()
            .apply(1, &mu4)
            .unwrap();
        let rhs = e(x)
            .apply(0, &dl)
            .unwrap()
            .tensor(&e(y))
            .unwrap()
            .permute(&[0, 2, 1])
            .unwrap()
            .apply(0, &mu4)
            .unwrap()
            .apply(0, &dl)
            .unwrap()
            .permute(&[0, 2, 1])
            .unwrap()
            .apply(0, &mu4)
            .unwrap();
        assert_ne!(lhs, rhs);
        assert_eq!(
            d.residual.get(&d.witness),
            lhs.get(d.witness_output()) - &rhs.get(d.witness_output())
        );
    }

    #[test]
    fn non_grading_coaction_breaks_comodule_coalgebra() {
        // δ_a ↦ g⊗δ_a for every a is a comodule since g is grouplike, but
        // Δ is not colinear: g ≠ g·g = e.
        let h = builtin("group:C2").unwrap();
        let c = builtin("dual-group:C2").unwrap().coalgebra_part().unwrap();
        let coaction = LinearMap::from_columns(q(), 4, 2, |a| Ok(vec![(2 + a, q().one())])).unwrap();
        let action = kron(h.counit().unwrap(), &LinearMap::identity(q(), 2)).unwrap();
        let ydc = YDModuleCoalgebra::new(h, c, action, coaction).unwrap();
        let v = check_yd_coalgebra(&ydc).unwrap();
        assert_eq!(v.defect().unwrap().identity, "comultiplication is a comodule map");
    }

    /// Evaluates `Δ(g⊗h) = (g⊗h₁)⊗(g⊗h₂)` on group elements, where the
    /// adjoint coaction is trivial.
    #[test]
    fn smash_coproduct_on_commutative_group() {
        let h = builtin("group:C2").unwrap();
        let smash = smash_coproduct(&YDModuleCoalgebra::adjoint(&h).unwrap()).unwrap();
        let mut expected = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                let i = a * 2 + b;
                expected.push(([i, i, i], 1));
            }
        }
        assert_eq!(
            smash.comul().unwrap(),
            &Tensor3::from_i64(q(), [4, 4, 4], expected).unwrap()
        );
        assert!(check_unit_counit(&smash).unwrap().passed());
    }

    #[test]
    fn smash_over_the_field_is_the_coalgebra() {
        let k = builtin("field").unwrap();
        let c = builtin("divided-power:3").unwrap();
        let smash = smash_coproduct(&trivial_yd(&k, &c)).unwrap();
        assert_eq!(smash.comul(), c.comul());
    }

    #[test]
    fn adjoint_smash_matches_direct_sweedler_formula() {
        // Δ(h⊗h') = h₁ ⊗ h₂S(h₄)h'₁ ⊗ h₃ ⊗ h'₂
        let h = builtin("sweedler4").unwrap();
        let smash = smash_coproduct(&YDModuleCoalgebra::adjoint(&h).unwrap()).unwrap();
        let (mu, delta, s) = (h.mul_map().unwrap(), h.comul_map().unwrap(), h.antipode_map().unwrap());
        let direct = MultiMap::from_pipeline(q(), vec![4, 4], vec![4, 4, 4, 4], |t| {
            t.apply(0, &delta)?
                .apply(0, &delta)?
                .apply(0, &delta)?
                .apply(3, &s)?
                .apply(4, &delta)?
                .permute(&[0, 1, 3, 4, 2, 5])?
                .apply(1, &mu)?
                .apply(1, &mu)
        })
        .unwrap()
        .to_linear_map();
        assert_eq!(smash.comul_map().unwrap().to_linear_map(), direct);
    }

    #[test]
    fn smash_projections_on_adjoint_fixtures() {
        for name in ["group:C2", "group:C3", "sweedler4"] {
            let h = builtin(name).unwrap();
            let ydc = YDModuleCoalgebra::adjoint(&h).unwrap();
            let r = smash_projection_right(&ydc).unwrap();
            assert!(r.module_coalgebra.passed(), "{name}");
            assert!(r.closed_form_matches(), "{name}");
            assert!(r.idempotent() && r.rb.passed(), "{name}");
            let l = smash_projection_left(&ydc).unwrap();
            assert!(l.module_coalgebra.passed(), "{name}");
            assert!(l.closed_form_matches(), "{name}");
            assert!(l.idempotent() && l.rb.passed(), "{name}");
        }
    }

    #[test]
    fn adjoint_pl_matches_fully_expanded_formula() {
        // P_L(h⊗h') = S(h₂S(h₄)h'₂)h₃ ⊗ S(h₁S(h₅)h'₁)h'₃
        let h = builtin("sweedler4").unwrap();
        let l = smash_projection_left(&YDModuleCoalgebra::adjoint(&h).unwrap()).unwrap();
        let (mu, delta, s) = (h.mul_map().unwrap(), h.comul_map().unwrap(), h.antipode_map().unwrap());
        // [h₁..h₅, h'₁, h'₂, h'₃] → [h₂, Sh₄, h'₂, h₃, h₁, Sh₅, h'₁, h'₃]
        let direct = MultiMap::from_pipeline(q(), vec![4, 4], vec![4, 4], |t| {
            t.apply(0, &delta)?
                .apply(0, &delta)?
                .apply(0, &delta)?
                .apply(0, &delta)?
                .apply(5, &delta)?
                .apply(5, &delta)?
                .apply(3, &s)?
                .apply(4, &s)?
                .permute(&[1, 3, 6, 2, 0, 4, 5, 7])?
                .apply(0, &mu)?
                .apply(0, &mu)?
                .apply(0, &s)?
                .apply(0, &mu)?
                .apply(1, &mu)?
                .apply(1, &mu)?
                .apply(1, &s)?
                .apply(1, &mu)
        })
        .unwrap()
        .to_linear_map();
        assert_eq!(l.projection, direct);
    }

    #[test]
    fn commutative_pl_by_hand() {
        // k[C2] with trivial adjoint coaction: P_L(a⊗b) = S(b)·a ⊗ S(b)b = b⁻¹a ⊗ e
        let h = builtin("group:C2").unwrap();
        let l = smash_projection_left(&YDModuleCoalgebra::adjoint(&h).unwrap()).unwrap();
        let mut oracle = LinearMap::zeros(q(), 4, 4);
        for a in 0..2 {
            for b in 0..2 {
                oracle.set(((a + b) % 2) * 2, a * 2 + b, q().one());
            }
        }
        assert_eq!(l.projection, oracle);
    }

    #[test]
    fn dimension_zero_coalgebra_is_vacuous() {
        let h = builtin("group:C2").unwrap();
        let c = AlgebraicStructure::builder(q(), 0)
            .comul(Tensor3::zeros(q(), [0, 0, 0]))
            .build()
            .unwrap();
        let ydc = YDModuleCoalgebra::new(h, c, LinearMap::zeros(q(), 0, 0), LinearMap::zeros(q(), 0, 0)).unwrap();
        assert!(smash_projection_right(&ydc).unwrap().passed());
        assert!(smash_projection_left(&ydc).unwrap().passed());
    }

    fn sign_form(h: &AlgebraicStructure, s: i64) -> CoquasitriangularForm {
        CoquasitriangularForm::from_table(h, &[vec![1, 1], vec![1, s]]).unwrap()
    }

    #[test]
    fn braiding_conditions() {
        let h = builtin("group:C2").unwrap();
        assert!(check_coquasitriangular(&CoquasitriangularForm::trivial(&h).unwrap())
            .unwrap()
            .passed());
        assert!(check_coquasitriangular(&sign_form(&h, -1)).unwrap().passed());
        let v = check_coquasitriangular(&sign_form(&h, 2)).unwrap();
        let d = v.defect().unwrap();
        assert_eq!(d.identity, "sigma multiplicative in the first argument");
        // σ(gg, g) = σ(e, g) = 1 but σ(g,g)σ(g,g) = 4
        assert_eq!(d.witness_input(), &[1, 1, 1]);
        assert_eq!(d.residual.get(&[1, 1, 1]), q().from_i64(-3));
        let h4 = builtin("sweedler4").unwrap();
        // ε⊗ε braids the multiplication only when it is commutative
        let v = check_coquasitriangular(&CoquasitriangularForm::trivial(&h4).unwrap()).unwrap();
        assert_eq!(v.defect().unwrap().identity, "sigma braids the multiplication");
    }

    #[test]
    fn induced_actions() {
        let h = builtin("group:C2").unwrap();
        let delta = h.comul_map().unwrap().to_linear_map();
        let (act, v) = yd_from_coquasitriangular(&CoquasitriangularForm::trivial(&h).unwrap(), 2, &delta).unwrap();
        assert!(v.passed());
        assert_eq!(act, kron(h.counit().unwrap(), &LinearMap::identity(q(), 2)).unwrap());
        let (act, v) = yd_from_coquasitriangular(&sign_form(&h, -1), 2, &delta).unwrap();
        assert!(v.passed());
        // g·g = −g, g·e = e
        assert_eq!(act.get(1, 3), &q().from_i64(-1));
        assert_eq!(act.get(0, 2), &q().one());
        assert!(matches!(
            yd_from_coquasitriangular(&sign_form(&h, 2), 2, &delta),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn induced_structure_on_dual_group_coalgebra() {
        let g = Group::cyclic(2);
        let h = builtin("group:C2").unwrap();
        let c = builtin("dual-group:C2").unwrap().coalgebra_part().unwrap();
        let cq = sign_form(&h, -1);
        let rho = grading_coaction(&g, q());
        let (act, v) = yd_from_coquasitriangular(&cq, 2, &rho).unwrap();
        assert!(v.passed());
        let ydc = YDModuleCoalgebra::new(h, c, act, rho.clone()).unwrap();
        assert!(check_yd_coalgebra(&ydc).unwrap().passed());
        let l = smash_projection_left(&ydc).unwrap();
        assert!(l.passed());
        assert_eq!(l.projection, coquasitriangular_pl_closed_form(&cq, 2, &rho).unwrap());
        assert!(smash_projection_right(&ydc).unwrap().passed());
    }

    #[test]
    fn regular_coaction_with_sign_action_is_not_a_coalgebra_in_yd() {
        let h = builtin("group:C2").unwrap();
        let delta = h.comul_map().unwrap().to_linear_map();
        let (act, _) = yd_from_coquasitriangular(&sign_form(&h, -1), 2, &delta).unwrap();
        let ydc = YDModuleCoalgebra::new(h.clone(), h.coalgebra_part().unwrap(), act, delta).unwrap();
        assert!(!check_yd_coalgebra(&ydc).unwrap().passed());
        assert!(matches!(smash_projection_left(&ydc), Err(Error::Precondition { .. })));
    }
}
