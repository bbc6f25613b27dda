//! Loading and saving objects by reference: a file path or `builtin:<name>`.

use std::path::{Path, PathBuf};

use baxter_core::hopf_module::ProjectionBialgebra;
use baxter_core::structures::{builtin_names, Group};
use baxter_core::yetter_drinfeld::{grading_coaction, CoquasitriangularForm, YDModuleCoalgebra};
use baxter_core::{builtin, Field, HopfModuleStructure, LinearMap, Scalar, Side};

use crate::error::{CliError, CliResult};
use crate::format::{self, ComoduleFile, HopfRef, ModuleFile, Object, SigmaFile, YdFile};

pub const BUILTIN_PREFIX: &str = "builtin:";

/// Loads `builtin:<name>` or a file path. Relative companion references
/// inside a file resolve against that file's directory.
pub fn load(reference: &str) -> CliResult<Object> {
    load_from(Path::new(""), reference)
}

fn load_from(base: &Path, reference: &str) -> CliResult<Object> {
    if let Some(name) = reference.strip_prefix(BUILTIN_PREFIX) {
        return builtin_object(name);
    }
    let path = base.join(reference);
    let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    format::parse(&text, &path.display().to_string(), &|r| load_from(&dir, r))
}

/// Parses text that may reference companions relative to `base`.
pub fn parse_text(text: &str, origin: &str, base: &Path) -> CliResult<Object> {
    format::parse(text, origin, &|r| load_from(base, r))
}

/// Writes the canonical text of `obj` to `path`.
pub fn save(path: &Path, obj: &Object) -> CliResult<()> {
    let text = format::to_text(obj)?;
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Creates `dir` (and parents) and returns `dir/name`.
pub fn output_path(dir: &Path, name: &str) -> CliResult<PathBuf> {
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    Ok(dir.join(name))
}

/// Parametric builtins beyond the structure fixtures, for listings.
pub const EXTRA_BUILTINS: [&str; 12] = [
    "identity:<n>[@Fp:<p>]  (identity operator)",
    "zero:<n>[@Fp:<p>]  (zero operator)",
    "counitless3-p1:<a>,<b>[@Fp:<p>]  (weight 0 algebra operator on counitless3)",
    "counitless3-p2:<c>[@Fp:<p>]  (weight c algebra operator on counitless3)",
    "counitless3-q:<d>[@Fp:<p>]  (weight d coalgebra operator on counitless3)",
    "tensor-square-i:<hopf>  (h -> h⊗1 into the tensor square)",
    "tensor-square-pi:<hopf>  (h⊗h' -> h ε(h') out of the tensor square)",
    "yd:adjoint:<hopf>  (H over itself: multiplication and adjoint coaction)",
    "hopf-module:<left|right>:<hopf>  (regular Hopf module with M = H)",
    "comodule:grading:<group>[@Fp:<p>]  (k^G graded by G, over group:<G>)",
    "sigma:trivial:<hopf>  (σ = ε⊗ε)",
    "sigma:c2:<value>  (on group:C2 with σ(g,g) = value, 1 elsewhere)",
];

/// Every builtin pattern: structure fixtures first, then parametric objects.
pub fn catalog() -> Vec<String> {
    builtin_names()
        .into_iter()
        .map(String::from)
        .chain(EXTRA_BUILTINS.iter().map(|s| s.to_string()))
        .collect()
}

fn split_field(name: &str) -> CliResult<(&str, Field)> {
    match name.split_once('@') {
        Some((base, f)) => Ok((base, f.parse::<Field>()?)),
        None => Ok((name, Field::Rational)),
    }
}

fn param(field: Field, s: &str) -> CliResult<Scalar> {
    Ok(field.parse_scalar(s)?)
}

fn size(s: &str) -> CliResult<usize> {
    s.parse()
        .ok()
        .filter(|&n| n <= 64)
        .ok_or_else(|| CliError::usage(format!("`{s}` is not a size between 0 and 64")))
}

fn matrix3(field: Field, entries: [[Scalar; 3]; 3]) -> CliResult<LinearMap> {
    Ok(LinearMap::from_entries(
        field,
        3,
        3,
        entries.into_iter().flatten().collect(),
    )?)
}

fn hopf_ref(name: &str) -> CliResult<HopfRef> {
    Ok(HopfRef {
        reference: format!("{BUILTIN_PREFIX}{name}"),
        hopf: builtin(name)?,
    })
}

fn group(name: &str) -> CliResult<Group> {
    if name == "S3" {
        return Ok(Group::symmetric3());
    }
    name.strip_prefix('C')
        .and_then(|n| n.parse::<usize>().ok())
        .filter(|n| (1..=12).contains(n))
        .map(Group::cyclic)
        .ok_or_else(|| CliError::usage(format!("unknown group `{name}` (expected C1..C12 or S3)")))
}

/// Resolves the part after `builtin:`.
pub fn builtin_object(name: &str) -> CliResult<Object> {
    let (head, rest) = name.split_once(':').unwrap_or((name, ""));
    match head {
        "identity" | "zero" => {
            let (n, f) = split_field(rest)?;
            let n = size(n)?;
            Ok(Object::Operator(if head == "identity" {
                LinearMap::identity(f, n)
            } else {
                LinearMap::zeros(f, n, n)
            }))
        }
        "counitless3-p1" => {
            let (args, f) = split_field(rest)?;
            let (a, b) = args
                .split_once(',')
                .ok_or_else(|| CliError::usage("counitless3-p1 takes `<a>,<b>`"))?;
            let (a, b, o) = (param(f, a)?, param(f, b)?, f.zero());
            Ok(Object::Operator(matrix3(
                f,
                [
                    [o.clone(), o.clone(), o.clone()],
                    [o.clone(), o.clone(), o.clone()],
                    [a, b, o],
                ],
            )?))
        }
        "counitless3-p2" => {
            let (c, f) = split_field(rest)?;
            let (m, o) = (-param(f, c)?, f.zero());
            Ok(Object::Operator(matrix3(
                f,
                [
                    [m.clone(), o.clone(), o.clone()],
                    [m.clone(), m.clone(), o.clone()],
                    [o.clone(), o, m],
                ],
            )?))
        }
        "counitless3-q" => {
            let (d, f) = split_field(rest)?;
            let (d, o) = (param(f, d)?, f.zero());
            Ok(Object::Operator(matrix3(
                f,
                [
                    [o.clone(), o.clone(), o.clone()],
                    [o.clone(), o.clone(), o.clone()],
                    [d.clone(), d, o],
                ],
            )?))
        }
        "tensor-square-i" | "tensor-square-pi" => {
            let pb = ProjectionBialgebra::tensor_square(&builtin(rest)?)?;
            Ok(Object::Operator(if head == "tensor-square-i" {
                pb.i().clone()
            } else {
                pb.pi().clone()
            }))
        }
        "yd" => {
            let hopf = rest
                .strip_prefix("adjoint:")
                .ok_or_else(|| CliError::usage("expected yd:adjoint:<hopf>"))?;
            let h = hopf_ref(hopf)?;
            Ok(Object::Yd(YdFile {
                ydc: YDModuleCoalgebra::adjoint(&h.hopf)?,
                hopf_ref: h.reference,
            }))
        }
        "hopf-module" => {
            let (side, hopf) = rest
                .split_once(':')
                .ok_or_else(|| CliError::usage("expected hopf-module:<left|right>:<hopf>"))?;
            let side: Side = side.parse()?;
            let h = hopf_ref(hopf)?;
            let hm = HopfModuleStructure::regular(&h.hopf, side)?;
            Ok(Object::Module(ModuleFile {
                side,
                dim: hm.m_dim(),
                action: hm.action().clone(),
                coaction: Some(hm.coaction().clone()),
                mul: hm.mul().cloned(),
                comul: hm.comul().cloned(),
                hopf: h,
            }))
        }
        "comodule" => {
            let spec = rest
                .strip_prefix("grading:")
                .ok_or_else(|| CliError::usage("expected comodule:grading:<group>"))?;
            let (g, f) = split_field(spec)?;
            let hopf_name = match f {
                Field::Rational => format!("group:{g}"),
                _ => format!("group:{g}@{f}"),
            };
            let grp = group(g)?;
            Ok(Object::Comodule(ComoduleFile {
                side: Side::Left,
                dim: grp.order(),
                coaction: grading_coaction(&grp, f),
                hopf: hopf_ref(&hopf_name)?,
            }))
        }
        "sigma" => {
            let (which, arg) = rest
                .split_once(':')
                .ok_or_else(|| CliError::usage("expected sigma:trivial:<hopf> or sigma:c2:<value>"))?;
            let (h, form) = match which {
                "trivial" => {
                    let h = hopf_ref(arg)?;
                    let form = CoquasitriangularForm::trivial(&h.hopf)?;
                    (h, form)
                }
                "c2" => {
                    let h = hopf_ref("group:C2")?;
                    let f = h.hopf.field();
                    let one = f.one();
                    let sigma = LinearMap::from_entries(f, 1, 4, vec![one.clone(), one.clone(), one, param(f, arg)?])?;
                    let form = CoquasitriangularForm::new(h.hopf.clone(), sigma)?;
                    (h, form)
                }
                other => return Err(CliError::usage(format!("unknown sigma builtin `{other}`"))),
            };
            Ok(Object::Sigma(SigmaFile {
                hopf_ref: h.reference,
                form,
            }))
        }
        _ => Ok(Object::Structure(builtin(name)?)),
    }
}
