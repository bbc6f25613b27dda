//! Hopf modules, Hopf module (co)algebras, their coinvariant projections,
//! and bialgebras with a projection onto a Hopf algebra.
//!
//! Right structures use `M⊗H → M` and `M → M⊗H`; left structures use
//! `H⊗M → M` and `M → H⊗M`. One code path serves both sides.

use crate::error::{Error, Result};
use crate::linalg::LinearMap;
use crate::rota_baxter::{check_rb_coalgebra_idempotent, RBVerdict};
use crate::scalar::Field;
use crate::structures::{
    check_associativity, check_coassociativity, check_comodule, check_module, AlgebraicStructure, Side, StructureKind,
};
use crate::tensor::{MultiMap, Tensor3};
use crate::verdict::{check_identity, require, AxiomVerdict};

/// A module and comodule over a Hopf algebra `H`, optionally carrying a
/// multiplication or comultiplication on `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfModuleStructure {
    h: AlgebraicStructure,
    m_dim: usize,
    side: Side,
    action: LinearMap,
    coaction: LinearMap,
    mul: Option<Tensor3>,
    comul: Option<Tensor3>,
}

impl HopfModuleStructure {
    /// Checks shapes only; the axioms are checked on demand.
    pub fn new(
        h: AlgebraicStructure,
        m_dim: usize,
        side: Side,
        action: LinearMap,
        coaction: LinearMap,
    ) -> Result<Self> {
        if h.kind() != StructureKind::Hopf {
            return Err(Error::InvalidStructure(
                "a Hopf module needs a Hopf algebra with unit, counit and antipode".into(),
            ));
        }
        let f = h.field();
        f.ensure(action.field())?;
        f.ensure(coaction.field())?;
        let mh = m_dim * h.dim();
        if (action.rows(), action.cols()) != (m_dim, mh) {
            return Err(Error::shape(format!(
                "action is {}x{}, expected {m_dim}x{mh}",
                action.rows(),
                action.cols()
            )));
        }
        if (coaction.rows(), coaction.cols()) != (mh, m_dim) {
            return Err(Error::shape(format!(
                "coaction is {}x{}, expected {mh}x{m_dim}",
                coaction.rows(),
                coaction.cols()
            )));
        }
        Ok(HopfModuleStructure {
            h,
            m_dim,
            side,
            action,
            coaction,
            mul: None,
            comul: None,
        })
    }

    /// `H` acting on itself by multiplication and coacting by `Δ`.
    pub fn regular(h: &AlgebraicStructure, side: Side) -> Result<Self> {
        let action = h.mul_map()?.to_linear_map();
        let coaction = h.comul_map()?.to_linear_map();
        let mul = h.mul().cloned().ok_or(Error::Missing("multiplication"))?;
        let comul = h.comul().cloned().ok_or(Error::Missing("comultiplication"))?;
        HopfModuleStructure::new(h.clone(), h.dim(), side, action, coaction)?
            .with_mul(mul)?
            .with_comul(comul)
    }

    pub fn with_mul(mut self, t: Tensor3) -> Result<Self> {
        self.check_tensor(&t)?;
        self.mul = Some(t);
        Ok(self)
    }

    pub fn with_comul(mut self, t: Tensor3) -> Result<Self> {
        self.check_tensor(&t)?;
        self.comul = Some(t);
        Ok(self)
    }

    fn check_tensor(&self, t: &Tensor3) -> Result<()> {
        self.h.field().ensure(t.field())?;
        let m = self.m_dim;
        if t.dims() != [m, m, m] {
            return Err(Error::shape(format!(
                "tensor on M has dims {:?}, expected [{m}; 3]",
                t.dims()
            )));
        }
        Ok(())
    }

    pub fn hopf(&self) -> &AlgebraicStructure {
        &self.h
    }

    pub fn m_dim(&self) -> usize {
        self.m_dim
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn field(&self) -> Field {
        self.h.field()
    }

    pub fn action(&self) -> &LinearMap {
        &self.action
    }

    pub fn coaction(&self) -> &LinearMap {
        &self.coaction
    }

    pub fn mul(&self) -> Option<&Tensor3> {
        self.mul.as_ref()
    }

    pub fn comul(&self) -> Option<&Tensor3> {
        self.comul.as_ref()
    }

    /// `M` as a coalgebra (comultiplication only).
    pub fn coalgebra(&self) -> Result<AlgebraicStructure> {
        let comul = self.comul.clone().ok_or(Error::Missing("comultiplication on M"))?;
        AlgebraicStructure::builder(self.field(), self.m_dim)
            .comul(comul)
            .build()
    }

    /// `M` as an algebra, a coalgebra, or both, depending on what is present.
    pub fn as_structure(&self) -> Result<AlgebraicStructure> {
        let mut b = AlgebraicStructure::builder(self.field(), self.m_dim);
        if let Some(t) = &self.mul {
            b = b.mul(t.clone());
        }
        if let Some(t) = &self.comul {
            b = b.comul(t.clone());
        }
        b.build()
    }

    fn act(&self) -> Result<MultiMap> {
        let input = match self.side {
            Side::Right => vec![self.m_dim, self.h.dim()],
            Side::Left => vec![self.h.dim(), self.m_dim],
        };
        MultiMap::from_linear_map(&self.action, input, vec![self.m_dim])
    }

    fn rho(&self) -> Result<MultiMap> {
        let out = match self.side {
            Side::Right => vec![self.m_dim, self.h.dim()],
            Side::Left => vec![self.h.dim(), self.m_dim],
        };
        MultiMap::from_linear_map(&self.coaction, vec![self.m_dim], out)
    }

    fn m_mul(&self) -> Result<MultiMap> {
        self.mul
            .as_ref()
            .map(MultiMap::from_mul)
            .ok_or(Error::Missing("multiplication on M"))
    }

    fn m_comul(&self) -> Result<MultiMap> {
        self.comul
            .as_ref()
            .map(MultiMap::from_comul)
            .ok_or(Error::Missing("comultiplication on M"))
    }
}

/// Module axioms, comodule axioms and the compatibility
/// `ρ(m·h) = m₍₀₎·h₁ ⊗ m₍₁₎h₂` (right) or
/// `ρ(h·m) = h₁m₍₋₁₎ ⊗ h₂·m₍₀₎` (left).
pub fn check_hopf_module(hm: &HopfModuleStructure) -> Result<AxiomVerdict> {
    let h = &hm.h;
    require!(check_module(h, hm.m_dim, &hm.action, hm.side)?);
    require!(check_comodule(h, hm.m_dim, &hm.coaction, hm.side)?);
    let (act, rho) = (hm.act()?, hm.rho()?);
    let (mu, delta) = (h.mul_map()?, h.comul_map()?);
    let (m, hd, f) = (hm.m_dim, h.dim(), h.field());
    match hm.side {
        Side::Right => check_identity(
            "right Hopf module compatibility",
            f,
            &[m, hd],
            |t| t.apply(0, &act)?.apply(0, &rho),
            |t| {
                t.apply(0, &rho)?
                    .apply(2, &delta)?
                    .permute(&[0, 2, 1, 3])?
                    .apply(0, &act)?
                    .apply(1, &mu)
            },
        ),
        Side::Left => check_identity(
            "left Hopf module compatibility",
            f,
            &[hd, m],
            |t| t.apply(0, &act)?.apply(0, &rho),
            |t| {
                t.apply(1, &rho)?
                    .apply(0, &delta)?
                    .permute(&[0, 2, 1, 3])?
                    .apply(0, &mu)?
                    .apply(1, &act)
            },
        ),
    }
}

/// Hopf module axioms plus: `M` is associative, the action is
/// `M`-linear (`(mm')·h = m(m'·h)`, left: `h·(mm') = (h·m)m'`), and the
/// coaction is multiplicative.
pub fn check_hopf_module_algebra(hm: &HopfModuleStructure) -> Result<AxiomVerdict> {
    let mm = hm.m_mul()?;
    require!(check_hopf_module(hm)?);
    require!(check_associativity(&hm.as_structure()?)?);
    let (act, rho, mu) = (hm.act()?, hm.rho()?, hm.hopf().mul_map()?);
    let (m, hd, f) = (hm.m_dim, hm.h.dim(), hm.field());
    match hm.side {
        Side::Right => {
            require!(check_identity(
                "action is linear over M",
                f,
                &[m, m, hd],
                |t| t.apply(0, &mm)?.apply(0, &act),
                |t| t.apply(1, &act)?.apply(0, &mm),
            )?);
            check_identity(
                "coaction is multiplicative",
                f,
                &[m, m],
                |t| t.apply(0, &mm)?.apply(0, &rho),
                |t| {
                    t.apply(0, &rho)?
                        .apply(2, &rho)?
                        .permute(&[0, 2, 1, 3])?
                        .apply(0, &mm)?
                        .apply(1, &mu)
                },
            )
        }
        Side::Left => {
            require!(check_identity(
                "action is linear over M",
                f,
                &[hd, m, m],
                |t| t.apply(1, &mm)?.apply(0, &act),
                |t| t.apply(0, &act)?.apply(0, &mm),
            )?);
            check_identity(
                "coaction is multiplicative",
                f,
                &[m, m],
                |t| t.apply(0, &mm)?.apply(0, &rho),
                |t| {
                    t.apply(0, &rho)?
                        .apply(2, &rho)?
                        .permute(&[0, 2, 1, 3])?
                        .apply(0, &mu)?
                        .apply(1, &mm)
                },
            )
        }
    }
}

/// Hopf module axioms plus: `M` is coassociative, `Δ_M` is a comodule map
/// and `Δ_M(m·h) = m₁·h₁ ⊗ m₂·h₂` (left: `h₁·m₁ ⊗ h₂·m₂`).
pub fn check_hopf_module_coalgebra(hm: &HopfModuleStructure) -> Result<AxiomVerdict> {
    let dm = hm.m_comul()?;
    require!(check_hopf_module(hm)?);
    require!(check_coassociativity(&hm.as_structure()?)?);
    let (act, rho, delta) = (hm.act()?, hm.rho()?, hm.hopf().comul_map()?);
    let (m, hd, f) = (hm.m_dim, hm.h.dim(), hm.field());
    match hm.side {
        Side::Right => {
            require!(check_identity(
                "comultiplication is a comodule map",
                f,
                &[m],
                |t| t.apply(0, &rho)?.apply(0, &dm),
                |t| t.apply(0, &dm)?.apply(1, &rho),
            )?);
            check_identity(
                "comultiplication is a module map",
                f,
                &[m, hd],
                |t| t.apply(0, &act)?.apply(0, &dm),
                |t| {
                    t.apply(1, &delta)?
                        .apply(0, &dm)?
                        .permute(&[0, 2, 1, 3])?
                        .apply(0, &act)?
                        .apply(1, &act)
                },
            )
        }
        Side::Left => {
            require!(check_identity(
                "comultiplication is a comodule map",
                f,
                &[m],
                |t| t.apply(0, &rho)?.apply(1, &dm),
                |t| t.apply(0, &dm)?.apply(0, &rho),
            )?);
            check_identity(
                "comultiplication is a module map",
                f,
                &[hd, m],
                |t| t.apply(0, &act)?.apply(0, &dm),
                |t| {
                    t.apply(1, &dm)?
                        .apply(0, &delta)?
                        .permute(&[0, 2, 1, 3])?
                        .apply(0, &act)?
                        .apply(1, &act)
                },
            )
        }
    }
}

/// `P_R(m) = m₍₀₎·S(m₍₁₎)`.
pub fn projection_pr(hm: &HopfModuleStructure) -> Result<LinearMap> {
    if hm.side != Side::Right {
        return Err(Error::InvalidStructure("P_R needs a right Hopf module".into()));
    }
    projection(hm)
}

/// `P_L(m) = S(m₍₋₁₎)·m₍₀₎`.
pub fn projection_pl(hm: &HopfModuleStructure) -> Result<LinearMap> {
    if hm.side != Side::Left {
        return Err(Error::InvalidStructure("P_L needs a left Hopf module".into()));
    }
    projection(hm)
}

/// The coinvariant projection on whichever side `hm` lives.
pub fn projection(hm: &HopfModuleStructure) -> Result<LinearMap> {
    let s = hm.h.antipode_map()?;
    let (act, rho) = (hm.act()?, hm.rho()?);
    let pos = match hm.side {
        Side::Right => 1,
        Side::Left => 0,
    };
    let m = MultiMap::from_pipeline(hm.field(), vec![hm.m_dim], vec![hm.m_dim], |t| {
        t.apply(0, &rho)?.apply(pos, &s)?.apply(0, &act)
    })?;
    Ok(m.to_linear_map())
}

/// Checks that the image of `p` is coinvariant: `ρ(p(m)) = p(m)⊗1`
/// (left: `1⊗p(m)`).
pub fn check_coinvariant_image(hm: &HopfModuleStructure, p: &LinearMap) -> Result<AxiomVerdict> {
    let pm = MultiMap::endo(p)?;
    let rho = hm.rho()?;
    let eta = hm.h.unit_map()?;
    let pos = match hm.side {
        Side::Right => 1,
        Side::Left => 0,
    };
    check_identity(
        "projection image is coinvariant",
        hm.field(),
        &[hm.m_dim],
        |t| t.apply(0, &pm)?.apply(0, &rho),
        |t| t.apply(0, &pm)?.apply(pos, &eta),
    )
}

/// A basis of the coinvariants, read off the column space of the
/// projection.
pub fn coinvariant_basis(hm: &HopfModuleStructure) -> Result<Vec<crate::linalg::Vector>> {
    Ok(projection(hm)?.image_basis())
}

/// Computes the coinvariant projection of a Hopf module coalgebra and checks
/// it is a Rota-Baxter coalgebra operator of weight −1. Idempotency is
/// reported alongside.
pub fn verify_coinvariant_projection(hm: &HopfModuleStructure) -> Result<(LinearMap, RBVerdict)> {
    let pre = check_hopf_module_coalgebra(hm)?;
    if let Some(d) = pre.into_defect() {
        return Err(Error::precondition("Hopf module coalgebra", Some(d)));
    }
    let p = projection(hm)?;
    let minus_one = hm.field().from_i64(-1);
    let verdict = check_rb_coalgebra_idempotent(&hm.coalgebra()?, &p, &minus_one)?;
    Ok((p, verdict))
}

/// `(f⋆g)(c) = f(c₁)g(c₂)`.
pub fn convolution(f: &LinearMap, g: &LinearMap, s: &AlgebraicStructure) -> Result<LinearMap> {
    let (mu, delta) = (s.mul_map()?, s.comul_map()?);
    for m in [f, g] {
        s.field().ensure(m.field())?;
        if (m.rows(), m.cols()) != (s.dim(), s.dim()) {
            return Err(Error::shape(format!(
                "convolution factor is {}x{}, structure has dimension {}",
                m.rows(),
                m.cols(),
                s.dim()
            )));
        }
    }
    let (fm, gm) = (MultiMap::endo(f)?, MultiMap::endo(g)?);
    let d = s.dim();
    Ok(MultiMap::from_pipeline(s.field(), vec![d], vec![d], |t| {
        t.apply(0, &delta)?.apply(0, &fm)?.apply(1, &gm)?.apply(0, &mu)
    })?
    .to_linear_map())
}

/// `f: A → B` preserves multiplication, unit, comultiplication and counit
/// (each only when both sides carry it).
pub fn check_bialgebra_map(a: &AlgebraicStructure, b: &AlgebraicStructure, f: &LinearMap) -> Result<AxiomVerdict> {
    a.field().ensure(b.field())?;
    a.field().ensure(f.field())?;
    if (f.rows(), f.cols()) != (b.dim(), a.dim()) {
        return Err(Error::shape(format!(
            "map is {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            b.dim(),
            a.dim()
        )));
    }
    let fm = MultiMap::from_linear_map(f, vec![a.dim()], vec![b.dim()])?;
    let field = a.field();
    let da = a.dim();
    if let (Some(_), Some(_)) = (a.mul(), b.mul()) {
        let (ma, mb) = (a.mul_map()?, b.mul_map()?);
        require!(check_identity(
            "map is multiplicative",
            field,
            &[da, da],
            |t| t.apply(0, &ma)?.apply(0, &fm),
            |t| t.apply(0, &fm)?.apply(1, &fm)?.apply(0, &mb),
        )?);
    }
    if let (Some(_), Some(_)) = (a.unit(), b.unit()) {
        let (ua, ub) = (a.unit_map()?, b.unit_map()?);
        require!(check_identity(
            "map preserves the unit",
            field,
            &[],
            |t| t.apply(0, &ua)?.apply(0, &fm),
            |t| t.apply(0, &ub),
        )?);
    }
    if let (Some(_), Some(_)) = (a.comul(), b.comul()) {
        let (ca, cb) = (a.comul_map()?, b.comul_map()?);
        require!(check_identity(
            "map is comultiplicative",
            field,
            &[da],
            |t| t.apply(0, &fm)?.apply(0, &cb),
            |t| t.apply(0, &ca)?.apply(0, &fm)?.apply(1, &fm),
        )?);
    }
    if let (Some(_), Some(_)) = (a.counit(), b.counit()) {
        let (ea, eb) = (a.counit_map()?, b.counit_map()?);
        require!(check_identity(
            "map preserves the counit",
            field,
            &[da],
            |t| t.apply(0, &fm)?.apply(0, &eb),
            |t| t.apply(0, &ea),
        )?);
    }
    Ok(AxiomVerdict::pass())
}

/// A bialgebra `C` with bialgebra maps `i: H → C`, `π: C → H` and
/// `π∘i = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionBialgebra {
    c: AlgebraicStructure,
    h: AlgebraicStructure,
    i: LinearMap,
    pi: LinearMap,
}

impl ProjectionBialgebra {
    /// Verifies that `i` and `π` are bialgebra maps with `π∘i = id`.
    pub fn new(c: AlgebraicStructure, h: AlgebraicStructure, i: LinearMap, pi: LinearMap) -> Result<Self> {
        if h.kind() != StructureKind::Hopf {
            return Err(Error::InvalidStructure("H must be a Hopf algebra".into()));
        }
        if c.unit().is_none() || c.counit().is_none() || c.kind() == StructureKind::Algebra {
            return Err(Error::InvalidStructure("C must be a unital, counital bialgebra".into()));
        }
        if let Some(d) = check_bialgebra_map(&h, &c, &i)?.into_defect() {
            return Err(Error::precondition("i is a bialgebra map", Some(d)));
        }
        if let Some(d) = check_bialgebra_map(&c, &h, &pi)?.into_defect() {
            return Err(Error::precondition("π is a bialgebra map", Some(d)));
        }
        if pi.compose(&i)? != LinearMap::identity(h.field(), h.dim()) {
            return Err(Error::precondition("π∘i = id", None));
        }
        Ok(ProjectionBialgebra { c, h, i, pi })
    }

    /// `C = H⊗H` with `i(h) = h⊗1` and `π(h⊗h') = h ε(h')`.
    pub fn tensor_square(h: &AlgebraicStructure) -> Result<Self> {
        let c = crate::structures::tensor_product(h, h)?;
        let d = h.dim();
        let f = h.field();
        let unit = h.unit().ok_or(Error::Missing("unit"))?.clone();
        let eps = h.counit().ok_or(Error::Missing("counit"))?.clone();
        let i = LinearMap::from_columns(f, d * d, d, |j| {
            Ok((0..d)
                .filter(|&k| !unit.get(k).is_zero())
                .map(|k| (j * d + k, unit.get(k).clone()))
                .collect())
        })?;
        let pi = LinearMap::from_columns(f, d, d * d, |col| {
            let (j, k) = (col / d, col % d);
            let e = eps.get(0, k);
            Ok(if e.is_zero() { vec![] } else { vec![(j, e.clone())] })
        })?;
        ProjectionBialgebra::new(c, h.clone(), i, pi)
    }

    pub fn c(&self) -> &AlgebraicStructure {
        &self.c
    }

    pub fn h(&self) -> &AlgebraicStructure {
        &self.h
    }

    pub fn i(&self) -> &LinearMap {
        &self.i
    }

    pub fn pi(&self) -> &LinearMap {
        &self.pi
    }
}

/// The right Hopf module coalgebra on `C` with `c·h = c i(h)` and
/// `ρ(c) = c₁ ⊗ π(c₂)`. Multiplication and comultiplication of `C` are
/// attached.
pub fn build_projection_bialgebra_module(pb: &ProjectionBialgebra) -> Result<HopfModuleStructure> {
    let (c, h) = (&pb.c, &pb.h);
    let (cd, hd, f) = (c.dim(), h.dim(), c.field());
    let im = MultiMap::from_linear_map(&pb.i, vec![hd], vec![cd])?;
    let pim = MultiMap::from_linear_map(&pb.pi, vec![cd], vec![hd])?;
    let (mu, delta) = (c.mul_map()?, c.comul_map()?);
    let action = MultiMap::from_pipeline(f, vec![cd, hd], vec![cd], |t| t.apply(1, &im)?.apply(0, &mu))?;
    let coaction = MultiMap::from_pipeline(f, vec![cd], vec![cd, hd], |t| t.apply(0, &delta)?.apply(1, &pim))?;
    let hm = HopfModuleStructure::new(
        h.clone(),
        cd,
        Side::Right,
        action.to_linear_map(),
        coaction.to_linear_map(),
    )?
    .with_mul(c.mul().cloned().ok_or(Error::Missing("multiplication"))?)?
    .with_comul(c.comul().cloned().ok_or(Error::Missing("comultiplication"))?)?;
    if let Some(d) = check_hopf_module_coalgebra(&hm)?.into_defect() {
        return Err(Error::postcondition("Hopf module coalgebra", Some(d)));
    }
    Ok(hm)
}

/// `Π = id ⋆ (i∘S∘π)` on `C`.
pub fn pi_operator(pb: &ProjectionBialgebra) -> Result<LinearMap> {
    let s = pb.h.antipode().ok_or(Error::Missing("antipode"))?;
    let isp = pb.i.compose(s)?.compose(&pb.pi)?;
    convolution(&LinearMap::identity(pb.c.field(), pb.c.dim()), &isp, &pb.c)
}
