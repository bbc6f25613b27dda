//! Subcommand bodies. Each appends checks, facts and outputs to a report;
//! a returned error is classified by [`Report::fail_with`].

use std::path::Path;

use baxter_core::hopf_module::{
    build_projection_bialgebra_module, check_hopf_module, check_hopf_module_algebra, check_hopf_module_coalgebra,
    pi_operator, projection_pr, verify_coinvariant_projection,
};
use baxter_core::prelie::{check_pre_lie, prelie_from_rb_weight0, prelie_from_rb_weight_minus1};
use baxter_core::rota_baxter::{
    check_rb_bialgebra, check_rb_side, is_idempotent, search_rb_operators, RBVerdict, RbSide, SearchOptions,
};
use baxter_core::structures::{
    check_antipode, check_associativity, check_bialgebra, check_coassociativity, check_comodule, check_hopf,
    check_module, check_unit_counit, solve_counit, CounitSolution,
};
use baxter_core::yetter_drinfeld::{
    check_coquasitriangular, check_yd_coalgebra, check_yd_module, smash_coproduct, smash_projection_left,
    smash_projection_right, SmashProjection,
};
use baxter_core::{AlgebraicStructure, AxiomVerdict, LinearMap, ProjectionBialgebra, Scalar, Side};

use crate::error::{CliError, CliResult};
use crate::format::{self, Object, PreLieFile};
use crate::report::{Check, Report};
use crate::resolve::{self, load, output_path, save};

fn verdict(name: impl Into<String>, v: AxiomVerdict) -> Check {
    Check::from_defect(name, v.into_defect())
}

fn rb_check_line(name: impl Into<String>, v: RBVerdict) -> Check {
    Check::from_defect(name, v.defect().cloned())
}

fn expect_structure(reference: &str) -> CliResult<AlgebraicStructure> {
    match load(reference)? {
        Object::Structure(s) => Ok(s),
        other => Err(CliError::usage(format!(
            "`{reference}` is a {} file, expected an algebraic structure",
            other.kind()
        ))),
    }
}

fn expect_operator(reference: &str) -> CliResult<LinearMap> {
    match load(reference)? {
        Object::Operator(m) => Ok(m),
        other => Err(CliError::usage(format!(
            "`{reference}` is a {} file, expected an operator",
            other.kind()
        ))),
    }
}

fn parse_weight(s: &AlgebraicStructure, w: &str) -> CliResult<Scalar> {
    s.field()
        .parse_scalar(w)
        .map_err(|e| CliError::usage(format!("weight `{w}`: {e}")))
}

fn entries_fact(m: &LinearMap) -> String {
    m.entries().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

// ---------------------------------------------------------------- verify

/// Checks that apply to an object, with whether each runs by default.
pub fn available_checks(obj: &Object) -> Vec<(&'static str, bool)> {
    match obj {
        Object::Structure(s) => {
            let (m, c) = (s.mul().is_some(), s.comul().is_some());
            let mut v = Vec::new();
            if m {
                v.push(("associativity", true));
            }
            if c {
                v.push(("coassociativity", true));
            }
            if s.unit().is_some() || s.counit().is_some() {
                v.push(("unit-counit", true));
            }
            if m && c {
                v.push(("bialgebra", true));
            }
            if s.antipode().is_some() {
                v.push(("antipode", true));
                v.push(("hopf", false));
            }
            if c {
                v.push(("counit-exists", false));
            }
            v
        }
        Object::Operator(_) => vec![("idempotent", false)],
        Object::Module(m) => {
            let mut v = vec![("module", true)];
            if m.coaction.is_some() {
                v.push(("comodule", true));
                v.push(("hopf-module", true));
                if m.mul.is_some() {
                    v.push(("module-algebra", true));
                }
                if m.comul.is_some() {
                    v.push(("module-coalgebra", true));
                }
            }
            v
        }
        Object::Comodule(_) => vec![("comodule", true)],
        Object::Yd(_) => vec![("coassociativity", true), ("yd-module", true), ("yd-coalgebra", true)],
        Object::Sigma(_) => vec![("coquasitriangular", true)],
        Object::PreLie(_) => vec![("pre-lie", true)],
    }
}

fn run_check(obj: &Object, name: &str) -> CliResult<Check> {
    let v = match (obj, name) {
        (Object::Structure(s), "associativity") => check_associativity(s)?,
        (Object::Structure(s), "coassociativity") => check_coassociativity(s)?,
        (Object::Structure(s), "unit-counit") => check_unit_counit(s)?,
        (Object::Structure(s), "bialgebra") => check_bialgebra(s)?,
        (Object::Structure(s), "antipode") => check_antipode(s)?,
        (Object::Structure(s), "hopf") => check_hopf(s)?,
        (Object::Structure(s), "counit-exists") => {
            return Ok(match solve_counit(s)? {
                CounitSolution::Counit(_) => Check::boolean(name, true, ""),
                CounitSolution::NoCoalgebraCounit => {
                    Check::boolean(name, false, "the counit equations have no solution")
                }
                CounitSolution::NotMultiplicative { counit, defect } => Check {
                    name: name.into(),
                    failure: Some(format!(
                        "the unique solution ({}) is not an algebra map",
                        counit
                            .entries()
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    )),
                    defect: Some(defect),
                },
            })
        }
        (Object::Operator(m), "idempotent") => {
            return Ok(Check::boolean(name, is_idempotent(m)?, "P∘P differs from P"));
        }
        (Object::Module(m), "module") => check_module(&m.hopf.hopf, m.dim, &m.action, m.side)?,
        (Object::Module(m), "comodule") => {
            let co = m.coaction.as_ref().expect("listed only with a coaction");
            check_comodule(&m.hopf.hopf, m.dim, co, m.side)?
        }
        (Object::Module(m), "hopf-module" | "module-algebra" | "module-coalgebra") => {
            let hm = m.hopf_module()?.expect("listed only with a coaction");
            match name {
                "hopf-module" => check_hopf_module(&hm)?,
                "module-algebra" => check_hopf_module_algebra(&hm)?,
                _ => check_hopf_module_coalgebra(&hm)?,
            }
        }
        (Object::Comodule(m), "comodule") => check_comodule(&m.hopf.hopf, m.dim, &m.coaction, m.side)?,
        (Object::Yd(y), "coassociativity") => check_coassociativity(y.ydc.coalgebra())?,
        (Object::Yd(y), "yd-module") => {
            check_yd_module(y.ydc.hopf(), y.ydc.coalgebra().dim(), y.ydc.action(), y.ydc.coaction())?
        }
        (Object::Yd(y), "yd-coalgebra") => check_yd_coalgebra(&y.ydc)?,
        (Object::Sigma(s), "coquasitriangular") => check_coquasitriangular(&s.form)?,
        (Object::PreLie(p), "pre-lie") => check_pre_lie(p.field, p.dim, &p.comul)?,
        _ => unreachable!("names come from available_checks"),
    };
    Ok(verdict(name, v))
}

pub fn verify(report: &mut Report, input: &str, requested: &[String]) -> CliResult<()> {
    let obj = load(input)?;
    let available = available_checks(&obj);
    report.fact("kind", obj.kind());
    report.fact("field", obj.field());
    let names: Vec<&str> = if requested.is_empty() {
        available.iter().filter(|(_, d)| *d).map(|(n, _)| *n).collect()
    } else {
        let mut names = Vec::new();
        for r in requested {
            let name = available.iter().map(|(n, _)| *n).find(|n| n == r).ok_or_else(|| {
                let list: Vec<&str> = available.iter().map(|(n, _)| *n).collect();
                CliError::usage(format!(
                    "check `{r}` does not apply to a {} (available: {})",
                    obj.kind(),
                    list.join(", ")
                ))
            })?;
            names.push(name);
        }
        names
    };
    for name in names {
        report.check(run_check(&obj, name)?);
    }
    Ok(())
}

// ---------------------------------------------------------------- rb-check

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RbCheckSide {
    Algebra,
    Coalgebra,
    Bialgebra,
}

impl std::str::FromStr for RbCheckSide {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "algebra" => Ok(RbCheckSide::Algebra),
            "coalgebra" => Ok(RbCheckSide::Coalgebra),
            "bialgebra" => Ok(RbCheckSide::Bialgebra),
            _ => Err(format!("unknown side `{s}` (algebra, coalgebra or bialgebra)")),
        }
    }
}

pub fn rb_check(
    report: &mut Report,
    structure: &str,
    side: RbCheckSide,
    operators: &[String],
    weights: &[String],
) -> CliResult<()> {
    let s = expect_structure(structure)?;
    let n = if side == RbCheckSide::Bialgebra { 2 } else { 1 };
    if operators.len() != n || weights.len() != n {
        return Err(CliError::usage(format!(
            "--side {} takes {n} operator(s) and {n} weight(s), got {} and {}",
            match side {
                RbCheckSide::Algebra => "algebra",
                RbCheckSide::Coalgebra => "coalgebra",
                RbCheckSide::Bialgebra => "bialgebra",
            },
            operators.len(),
            weights.len()
        )));
    }
    let ops = operators
        .iter()
        .map(|o| expect_operator(o))
        .collect::<CliResult<Vec<_>>>()?;
    let ws = weights
        .iter()
        .map(|w| parse_weight(&s, w))
        .collect::<CliResult<Vec<_>>>()?;
    for (i, op) in ops.iter().enumerate() {
        report.fact(format!("operator.{i}.idempotent"), is_idempotent(op)?);
    }
    match side {
        RbCheckSide::Algebra | RbCheckSide::Coalgebra => {
            let rb = if side == RbCheckSide::Algebra {
                RbSide::Algebra
            } else {
                RbSide::Coalgebra
            };
            let v = check_rb_side(&s, rb, &ops[0], &ws[0])?;
            report.check(rb_check_line(format!("rota-baxter {rb}, weight {}", ws[0]), v));
        }
        RbCheckSide::Bialgebra => {
            let v = check_rb_bialgebra(&s, &ops[0], &ops[1], &ws[0], &ws[1])?;
            report.check(rb_check_line(
                format!("rota-baxter algebra, weight {}", ws[0]),
                v.algebra,
            ));
            report.check(rb_check_line(
                format!("rota-baxter coalgebra, weight {}", ws[1]),
                v.coalgebra,
            ));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- construct

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Smash,
    ProjectionRight,
    ProjectionLeft,
    Prelie,
    PiOperator,
}

impl std::str::FromStr for Construction {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "smash" => Ok(Construction::Smash),
            "projection-right" => Ok(Construction::ProjectionRight),
            "projection-left" => Ok(Construction::ProjectionLeft),
            "prelie" => Ok(Construction::Prelie),
            "pi-operator" => Ok(Construction::PiOperator),
            _ => Err(format!(
                "unknown construction `{s}` (smash, projection-right, projection-left, prelie, pi-operator)"
            )),
        }
    }
}

pub struct ConstructArgs<'a> {
    pub what: Construction,
    pub inputs: &'a [String],
    pub operator: Option<&'a str>,
    pub weight: Option<&'a str>,
    pub out_dir: &'a Path,
}

fn write(report: &mut Report, dir: &Path, name: &str, obj: &Object) -> CliResult<String> {
    let path = output_path(dir, name)?;
    save(&path, obj)?;
    report.outputs.push(path.clone());
    Ok(path.display().to_string())
}

fn inputs<'a>(args: &'a ConstructArgs, n: usize, what: &str) -> CliResult<&'a [String]> {
    if args.inputs.len() != n {
        return Err(CliError::usage(format!(
            "{what} takes {n} input(s), got {}",
            args.inputs.len()
        )));
    }
    Ok(args.inputs)
}

pub fn construct(report: &mut Report, args: &ConstructArgs) -> CliResult<()> {
    match args.what {
        Construction::Smash => construct_smash(report, args),
        Construction::ProjectionRight | Construction::ProjectionLeft => construct_projection(report, args),
        Construction::Prelie => construct_prelie(report, args),
        Construction::PiOperator => construct_pi(report, args),
    }
}

fn expect_yd(reference: &str) -> CliResult<crate::format::YdFile> {
    match load(reference)? {
        Object::Yd(y) => Ok(y),
        other => Err(CliError::usage(format!(
            "`{reference}` is a {} file, expected a yd file",
            other.kind()
        ))),
    }
}

fn construct_smash(report: &mut Report, args: &ConstructArgs) -> CliResult<()> {
    let [input] = inputs(args, 1, "smash")? else {
        unreachable!()
    };
    let y = expect_yd(input)?;
    let pre = check_yd_coalgebra(&y.ydc)?;
    let ok = pre.passed();
    report.check(verdict("input is a Yetter-Drinfeld coalgebra", pre));
    if !ok {
        return Ok(());
    }
    let smash = smash_coproduct(&y.ydc)?;
    let path = write(report, args.out_dir, "smash.txt", &Object::Structure(smash))?;
    let reloaded = expect_structure(&path)?;
    report.check(verdict(
        "reloaded smash coproduct is coassociative",
        check_coassociativity(&reloaded)?,
    ));
    if reloaded.counit().is_some() {
        report.check(verdict(
            "reloaded smash coproduct is counital",
            check_unit_counit(&reloaded)?,
        ));
    }
    Ok(())
}

fn construct_projection(report: &mut Report, args: &ConstructArgs) -> CliResult<()> {
    let right = args.what == Construction::ProjectionRight;
    let label = if right { "projection-right" } else { "projection-left" };
    let [input] = inputs(args, 1, label)? else {
        unreachable!()
    };
    let minus_one = |s: &AlgebraicStructure| s.field().from_i64(-1);
    let (coalgebra, op) = match load(input)? {
        Object::Yd(y) => {
            let pre = check_yd_coalgebra(&y.ydc)?;
            let ok = pre.passed();
            report.check(verdict("input is a Yetter-Drinfeld coalgebra", pre));
            if !ok {
                return Ok(());
            }
            let sp: SmashProjection = if right {
                smash_projection_right(&y.ydc)?
            } else {
                smash_projection_left(&y.ydc)?
            };
            report.check(verdict("C×H is a Hopf module coalgebra", sp.module_coalgebra.clone()));
            report.check(rb_check_line("rota-baxter coalgebra, weight -1", sp.rb.clone()));
            report.check(Check::boolean("idempotent", sp.idempotent(), "P∘P differs from P"));
            report.check(Check::boolean(
                "closed form equals generic projection",
                sp.closed_form_matches(),
                "the closed-form matrix differs from the generic coinvariant projection",
            ));
            (sp.smash, sp.projection)
        }
        Object::Module(m) => {
            let want = if right { Side::Right } else { Side::Left };
            if m.side != want {
                return Err(CliError::usage(format!(
                    "{label} needs a {want} Hopf module, got a {} one",
                    m.side
                )));
            }
            let hm = m
                .hopf_module()?
                .ok_or_else(|| CliError::usage("the module file has no [coaction]"))?;
            let (op, v) = verify_coinvariant_projection(&hm)?;
            report.check(rb_check_line("rota-baxter coalgebra, weight -1", v.clone()));
            report.check(Check::boolean(
                "idempotent",
                v.idempotent == Some(true),
                "P∘P differs from P",
            ));
            (hm.coalgebra()?, op)
        }
        other => {
            return Err(CliError::usage(format!(
                "`{input}` is a {} file, expected a yd or module file",
                other.kind()
            )))
        }
    };
    let c_path = write(report, args.out_dir, "coalgebra.txt", &Object::Structure(coalgebra))?;
    let op_path = write(report, args.out_dir, &format!("{label}.txt"), &Object::Operator(op))?;
    let (c, p) = (expect_structure(&c_path)?, expect_operator(&op_path)?);
    let v = check_rb_side(&c, RbSide::Coalgebra, &p, &minus_one(&c))?;
    report.check(rb_check_line("reloaded output re-verifies at weight -1", v));
    Ok(())
}

fn construct_prelie(report: &mut Report, args: &ConstructArgs) -> CliResult<()> {
    let [input] = inputs(args, 1, "prelie")? else {
        unreachable!()
    };
    let s = expect_structure(input)?;
    let op = expect_operator(
        args.operator
            .ok_or_else(|| CliError::usage("prelie needs --op <operator>"))?,
    )?;
    let w = parse_weight(
        &s,
        args.weight
            .ok_or_else(|| CliError::usage("prelie needs --weight -1 or 0"))?,
    )?;
    let pl = if w == s.field().from_i64(-1) {
        prelie_from_rb_weight_minus1(&s, &op)?
    } else if w.is_zero() {
        prelie_from_rb_weight0(&s, &op)?
    } else {
        return Err(CliError::usage(format!(
            "prelie is defined for weights -1 and 0, not {w}"
        )));
    };
    report.check(Check::boolean(
        format!("operator is rota-baxter of weight {w}"),
        true,
        "",
    ));
    let obj = Object::PreLie(PreLieFile {
        field: pl.field(),
        dim: pl.dim(),
        comul: pl.comul().clone(),
    });
    let path = write(report, args.out_dir, "prelie.txt", &obj)?;
    match load(&path)? {
        Object::PreLie(p) => report.check(verdict(
            "reloaded pre-Lie coidentity",
            check_pre_lie(p.field, p.dim, &p.comul)?,
        )),
        _ => unreachable!("written as a prelie file"),
    }
    Ok(())
}

fn construct_pi(report: &mut Report, args: &ConstructArgs) -> CliResult<()> {
    let [c, h, i, pi] = inputs(args, 4, "pi-operator (inputs: C H i π)")? else {
        unreachable!()
    };
    let pb = ProjectionBialgebra::new(
        expect_structure(c)?,
        expect_structure(h)?,
        expect_operator(i)?,
        expect_operator(pi)?,
    )?;
    let op = pi_operator(&pb)?;
    let generic = projection_pr(&build_projection_bialgebra_module(&pb)?)?;
    report.check(Check::boolean(
        "convolution formula equals generic projection",
        op == generic,
        "id ⋆ (i∘S∘π) differs from the coinvariant projection",
    ));
    let path = write(report, args.out_dir, "pi-operator.txt", &Object::Operator(op))?;
    let reloaded = expect_operator(&path)?;
    let cs = pb.c();
    let m1 = cs.field().from_i64(-1);
    let v = check_rb_bialgebra(cs, &reloaded, &reloaded, &m1, &m1)?;
    report.check(rb_check_line("reloaded Π: rota-baxter algebra, weight -1", v.algebra));
    report.check(rb_check_line(
        "reloaded Π: rota-baxter coalgebra, weight -1",
        v.coalgebra,
    ));
    report.check(Check::boolean(
        "idempotent",
        is_idempotent(&reloaded)?,
        "Π∘Π differs from Π",
    ));
    Ok(())
}

// ---------------------------------------------------------------- search

pub struct SearchArgs<'a> {
    pub structure: &'a str,
    pub side: RbSide,
    pub weight: &'a str,
    pub options: SearchOptions,
    pub out_dir: Option<&'a Path>,
}

pub fn search(report: &mut Report, args: &SearchArgs) -> CliResult<()> {
    let s = expect_structure(args.structure)?;
    let w = parse_weight(&s, args.weight)?;
    let r = search_rb_operators(&s, args.side, &w, &args.options)?;
    report.fact("candidates", r.candidates_scanned);
    report.fact("found", r.operators.len());
    report.fact("zero_operator_present", r.operators.iter().any(LinearMap::is_zero));
    for (k, op) in r.operators.iter().enumerate() {
        report.fact(format!("operator.{k}"), entries_fact(op));
        let obj = Object::Operator(op.clone());
        let reloaded = match args.out_dir {
            Some(dir) => {
                let path = write(report, dir, &format!("operator-{k:04}.txt"), &obj)?;
                expect_operator(&path)?
            }
            None => match resolve::parse_text(&format::to_text(&obj)?, "<memory>", Path::new("."))? {
                Object::Operator(m) => m,
                _ => unreachable!("serialized as an operator"),
            },
        };
        let v = check_rb_side(&s, args.side, &reloaded, &w)?;
        report.check(rb_check_line(format!("operator {k} re-verified after reload"), v));
    }
    Ok(())
}

// ---------------------------------------------------------------- builtin-list

pub fn builtin_list(report: &mut Report) {
    for (i, name) in resolve::catalog().into_iter().enumerate() {
        report.fact(format!("builtin.{i}"), name);
    }
}
