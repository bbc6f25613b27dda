//! Line-oriented text format for structures, operators and their companions.
//!
//! ```text
//! format 1
//! kind bialgebra
//! field Q
//! dim 3
//! [mul]
//! 0 0 0 1 1
//! [comul]
//! 0 0 0 1 1
//! ```
//!
//! A file is a `format` line, `key value` header lines, then `[section]`
//! blocks of sparse entries. An entry lists its indices followed by
//! `numerator denominator` over `Q` or a single residue over `Fp:<p>`.
//! Blank lines and lines starting with `#` are ignored. The canonical form
//! written by [`to_text`] has headers and sections in a fixed order, entries
//! sorted by index, zeros omitted and fractions reduced.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use baxter_core::yetter_drinfeld::{CoquasitriangularForm, YDModuleCoalgebra};
use baxter_core::{AlgebraicStructure, Field, HopfModuleStructure, LinearMap, Scalar, Side, Tensor3, Vector};
use num_bigint::BigInt;

use crate::error::{CliError, CliResult};

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
    Module,
    Comodule,
    Yd,
    Sigma,
    Operator,
    Prelie,
}

impl Kind {
    pub const ALL: [Kind; 10] = [
        Kind::Algebra,
        Kind::Coalgebra,
        Kind::Bialgebra,
        Kind::Hopf,
        Kind::Module,
        Kind::Comodule,
        Kind::Yd,
        Kind::Sigma,
        Kind::Operator,
        Kind::Prelie,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Coalgebra => "coalgebra",
            Kind::Bialgebra => "bialgebra",
            Kind::Hopf => "hopf",
            Kind::Module => "module",
            Kind::Comodule => "comodule",
            Kind::Yd => "yd",
            Kind::Sigma => "sigma",
            Kind::Operator => "operator",
            Kind::Prelie => "prelie",
        }
    }

    fn of_structure(s: &AlgebraicStructure) -> Kind {
        use baxter_core::structures::StructureKind as K;
        match s.kind() {
            K::Algebra => Kind::Algebra,
            K::Coalgebra => Kind::Coalgebra,
            K::Bialgebra => Kind::Bialgebra,
            K::Hopf => Kind::Hopf,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = String;
    fn from_str(s: &str) -> Result<Kind, String> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown kind `{s}`"))
    }
}

/// A Hopf algebra together with the reference it was loaded from, so that
/// saving reproduces the reference verbatim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfRef {
    pub reference: String,
    pub hopf: AlgebraicStructure,
}

/// An action of `H` on `M`, optionally with a coaction and a
/// (co)multiplication on `M`. The action is `dim × dim·|H|` with columns
/// indexed by `m·|H| + h` (right) or `h·dim + m` (left); the coaction is
/// its transpose shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleFile {
    pub hopf: HopfRef,
    pub side: Side,
    pub dim: usize,
    pub action: LinearMap,
    pub coaction: Option<LinearMap>,
    pub mul: Option<Tensor3>,
    pub comul: Option<Tensor3>,
}

impl ModuleFile {
    /// The Hopf module, when a coaction is present.
    pub fn hopf_module(&self) -> CliResult<Option<HopfModuleStructure>> {
        let Some(coaction) = &self.coaction else {
            return Ok(None);
        };
        let mut hm = HopfModuleStructure::new(
            self.hopf.hopf.clone(),
            self.dim,
            self.side,
            self.action.clone(),
            coaction.clone(),
        )?;
        if let Some(t) = &self.mul {
            hm = hm.with_mul(t.clone())?;
        }
        if let Some(t) = &self.comul {
            hm = hm.with_comul(t.clone())?;
        }
        Ok(Some(hm))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleFile {
    pub hopf: HopfRef,
    pub side: Side,
    pub dim: usize,
    pub coaction: LinearMap,
}

/// A coalgebra with left `H`-action and left `H`-coaction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdFile {
    pub hopf_ref: String,
    pub ydc: YDModuleCoalgebra,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaFile {
    pub hopf_ref: String,
    pub form: CoquasitriangularForm,
}

/// A comultiplication that is meant to satisfy the pre-Lie coidentity.
/// Loading does not check the identity, so failing files can be inspected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieFile {
    pub field: Field,
    pub dim: usize,
    pub comul: Tensor3,
}

/// A typed file payload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Structure(AlgebraicStructure),
    Operator(LinearMap),
    Module(ModuleFile),
    Comodule(ComoduleFile),
    Yd(YdFile),
    Sigma(SigmaFile),
    PreLie(PreLieFile),
}

impl Object {
    pub fn kind(&self) -> Kind {
        match self {
            Object::Structure(s) => Kind::of_structure(s),
            Object::Operator(_) => Kind::Operator,
            Object::Module(_) => Kind::Module,
            Object::Comodule(_) => Kind::Comodule,
            Object::Yd(_) => Kind::Yd,
            Object::Sigma(_) => Kind::Sigma,
            Object::PreLie(_) => Kind::Prelie,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Object::Structure(s) => s.field(),
            Object::Operator(m) => m.field(),
            Object::Module(m) => m.hopf.hopf.field(),
            Object::Comodule(m) => m.hopf.hopf.field(),
            Object::Yd(y) => y.ydc.field(),
            Object::Sigma(s) => s.form.hopf().field(),
            Object::PreLie(p) => p.field,
        }
    }
}

// ---------------------------------------------------------------- parsing

#[derive(Clone, Copy)]
struct Token<'a> {
    column: usize,
    text: &'a str,
}

/// Whitespace-separated tokens with 1-based character columns.
fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in line.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, byte)),
            (true, Some((c, b))) => {
                out.push(Token {
                    column: c,
                    text: &line[b..byte],
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, b)) = start {
        out.push(Token {
            column: c,
            text: &line[b..],
        });
    }
    out
}

struct Header<'a> {
    value: Token<'a>,
    line: usize,
    key_column: usize,
}

struct Section<'a> {
    line: usize,
    rows: Vec<(usize, Vec<Token<'a>>)>,
}

struct Doc<'a> {
    origin: &'a str,
    field: Field,
    kind: Kind,
    kind_line: usize,
    headers: BTreeMap<&'a str, Header<'a>>,
    sections: BTreeMap<&'a str, Section<'a>>,
    used_headers: BTreeSet<&'a str>,
}

fn parse_error(origin: &str, line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        origin: origin.to_string(),
        line,
        column,
        message: message.into(),
    }
}

/// Resolves a companion reference such as the Hopf algebra of a module.
pub type Resolver<'r> = dyn Fn(&str) -> CliResult<Object> + 'r;

/// Parses a file. `origin` labels diagnostics; `resolve` loads references.
pub fn parse(text: &str, origin: &str, resolve: &Resolver<'_>) -> CliResult<Object> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
        .collect();
    let err = |line, col, msg: String| parse_error(origin, line, col, msg);

    let mut it = lines.into_iter().peekable();
    let (first_line, first) = it.next().ok_or_else(|| err(1, 1, "empty file".into()))?;
    let toks = tokenize(first);
    match toks.as_slice() {
        [k, v] if k.text == "format" => {
            if v.text != FORMAT_VERSION {
                return Err(err(
                    first_line,
                    v.column,
                    format!("unsupported format version `{}` (expected {FORMAT_VERSION})", v.text),
                ));
            }
        }
        _ => {
            return Err(err(
                first_line,
                1,
                format!("expected `format {FORMAT_VERSION}` as the first line"),
            ))
        }
    }

    let mut headers: BTreeMap<&str, Header> = BTreeMap::new();
    while let Some(&(line, text)) = it.peek() {
        if text.trim_start().starts_with('[') {
            break;
        }
        it.next();
        let toks = tokenize(text);
        let [key, value] = toks.as_slice() else {
            return Err(err(line, 1, "header lines must be `key value`".into()));
        };
        if headers.contains_key(key.text) {
            return Err(err(line, key.column, format!("duplicate header `{}`", key.text)));
        }
        headers.insert(
            key.text,
            Header {
                value: *value,
                line,
                key_column: key.column,
            },
        );
    }

    let mut sections: BTreeMap<&str, Section> = BTreeMap::new();
    let mut current: Option<&str> = None;
    for (line, text) in it {
        let trimmed = text.trim();
        if trimmed.starts_with('[') {
            let column = text.len() - text.trim_start().len() + 1;
            let name = trimmed
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .filter(|s| !s.is_empty() && !s.contains(char::is_whitespace))
                .ok_or_else(|| err(line, column, format!("malformed section header `{trimmed}`")))?;
            if sections.contains_key(name) {
                return Err(err(line, column, format!("duplicate section `[{name}]`")));
            }
            sections.insert(name, Section { line, rows: Vec::new() });
            current = Some(name);
        } else {
            let name = current.expect("headers end at the first section");
            sections
                .get_mut(name)
                .expect("section was inserted")
                .rows
                .push((line, tokenize(text)));
        }
    }

    let take = |key: &str| -> CliResult<&Header> {
        headers
            .get(key)
            .ok_or_else(|| err(first_line, 1, format!("missing header `{key}`")))
    };
    let kind_h = take("kind")?;
    let kind: Kind = kind_h
        .value
        .text
        .parse()
        .map_err(|m: String| err(kind_h.line, kind_h.value.column, m))?;
    let field_h = take("field")?;
    let field: Field = field_h
        .value
        .text
        .parse()
        .map_err(|e: baxter_core::Error| err(field_h.line, field_h.value.column, e.to_string()))?;
    let kind_line = kind_h.line;

    let mut doc = Doc {
        origin,
        field,
        kind,
        kind_line,
        headers,
        sections,
        used_headers: ["kind", "field"].into_iter().collect(),
    };
    let obj = build(&mut doc, resolve)?;
    doc.finish()?;
    Ok(obj)
}

type Entries = Vec<(Vec<usize>, Scalar)>;

impl<'a> Doc<'a> {
    fn err(&self, line: usize, col: usize, msg: impl Into<String>) -> CliError {
        parse_error(self.origin, line, col, msg)
    }

    fn header(&mut self, key: &'a str) -> CliResult<(Token<'a>, usize)> {
        let h = self
            .headers
            .get(key)
            .ok_or_else(|| parse_error(self.origin, self.kind_line, 1, format!("missing header `{key}`")))?;
        self.used_headers.insert(key);
        Ok((h.value, h.line))
    }

    fn header_usize(&mut self, key: &'a str) -> CliResult<usize> {
        let (tok, line) = self.header(key)?;
        tok.text
            .parse()
            .map_err(|_| self.err(line, tok.column, format!("`{key}` must be a non-negative integer")))
    }

    fn header_side(&mut self) -> CliResult<Side> {
        let (tok, line) = self.header("side")?;
        tok.text
            .parse()
            .map_err(|_| self.err(line, tok.column, "`side` must be `left` or `right`"))
    }

    /// Loads the referenced Hopf algebra and checks its field.
    fn header_hopf(&mut self, resolve: &Resolver<'_>) -> CliResult<HopfRef> {
        let (tok, line) = self.header("hopf")?;
        let at = |e: CliError| self.err(line, tok.column, format!("cannot load `{}`: {e}", tok.text));
        let hopf = match resolve(tok.text).map_err(at)? {
            Object::Structure(s) if Kind::of_structure(&s) == Kind::Hopf => s,
            other => {
                return Err(self.err(
                    line,
                    tok.column,
                    format!("`{}` is a {}, expected a hopf structure", tok.text, other.kind()),
                ))
            }
        };
        if hopf.field() != self.field {
            return Err(self.err(
                line,
                tok.column,
                format!(
                    "`{}` is over {}, but this file is over {}",
                    tok.text,
                    hopf.field(),
                    self.field
                ),
            ));
        }
        Ok(HopfRef {
            reference: tok.text.to_string(),
            hopf,
        })
    }

    fn scalar(&self, line: usize, toks: &[Token]) -> CliResult<Scalar> {
        let int = |t: &Token| -> CliResult<BigInt> {
            t.text
                .parse()
                .map_err(|_| self.err(line, t.column, format!("`{}` is not an integer", t.text)))
        };
        match (self.field, toks) {
            (Field::Rational, [n, d]) => {
                let (num, den) = (int(n)?, int(d)?);
                if den == BigInt::from(0) {
                    return Err(self.err(line, d.column, "denominator is zero"));
                }
                self.field
                    .from_ratio(&num, &den)
                    .map_err(|e| self.err(line, d.column, e.to_string()))
            }
            (Field::Prime(_), [r]) => Ok(self.field.from_bigint(&int(r)?)),
            _ => unreachable!("arity is checked by the caller"),
        }
    }

    /// Parses and removes a section of entries with the given index bounds.
    fn section(&mut self, name: &str, bounds: &[usize]) -> CliResult<Option<Entries>> {
        let Some(sec) = self.sections.remove(name) else {
            return Ok(None);
        };
        let value_width = match self.field {
            Field::Rational => 2,
            Field::Prime(_) => 1,
        };
        let width = bounds.len() + value_width;
        let value_desc = match self.field {
            Field::Rational => "numerator denominator",
            Field::Prime(_) => "residue",
        };
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (line, toks) in &sec.rows {
            if toks.len() != width {
                let col = toks.get(width).map_or(1, |t| t.column);
                return Err(self.err(
                    *line,
                    col,
                    format!(
                        "[{name}] entries have {} indices then {value_desc}; found {} tokens",
                        bounds.len(),
                        toks.len()
                    ),
                ));
            }
            let mut idx = Vec::with_capacity(bounds.len());
            for (t, &bound) in toks.iter().zip(bounds) {
                let i: usize = t
                    .text
                    .parse()
                    .map_err(|_| self.err(*line, t.column, format!("`{}` is not an index", t.text)))?;
                if i >= bound {
                    return Err(self.err(
                        *line,
                        t.column,
                        format!("index {i} out of range (bound {bound}) in [{name}]"),
                    ));
                }
                idx.push(i);
            }
            if !seen.insert(idx.clone()) {
                return Err(self.err(*line, 1, format!("duplicate entry {idx:?} in [{name}]")));
            }
            let v = self.scalar(*line, &toks[bounds.len()..])?;
            out.push((idx, v));
        }
        Ok(Some(out))
    }

    fn required(&mut self, name: &str, bounds: &[usize]) -> CliResult<Entries> {
        self.section(name, bounds)?.ok_or_else(|| {
            parse_error(
                self.origin,
                self.kind_line,
                1,
                format!("a {} file needs a [{name}] section", self.kind),
            )
        })
    }

    fn tensor(&mut self, name: &str, d: usize) -> CliResult<Option<Tensor3>> {
        let f = self.field;
        self.section(name, &[d, d, d])?
            .map(|e| {
                Ok(Tensor3::from_entries(
                    f,
                    [d, d, d],
                    e.into_iter().map(|(i, v)| ([i[0], i[1], i[2]], v)),
                )?)
            })
            .transpose()
    }

    fn matrix(&mut self, name: &str, rows: usize, cols: usize) -> CliResult<Option<LinearMap>> {
        let f = self.field;
        Ok(self.section(name, &[rows, cols])?.map(|e| {
            let mut m = LinearMap::zeros(f, rows, cols);
            for (i, v) in e {
                m.set(i[0], i[1], v);
            }
            m
        }))
    }

    fn row_vector(&mut self, name: &str, d: usize) -> CliResult<Option<LinearMap>> {
        let f = self.field;
        Ok(self.section(name, &[d])?.map(|e| {
            let mut m = LinearMap::zeros(f, 1, d);
            for (i, v) in e {
                m.set(0, i[0], v);
            }
            m
        }))
    }

    fn vector(&mut self, name: &str, d: usize) -> CliResult<Option<Vector>> {
        let f = self.field;
        self.section(name, &[d])?
            .map(|e| {
                let mut entries = vec![f.zero(); d];
                for (i, v) in e {
                    entries[i[0]] = v;
                }
                Ok(Vector::from_entries(f, entries)?)
            })
            .transpose()
    }

    /// `[basis]` lines are `index label`.
    fn basis(&mut self, d: usize) -> CliResult<Option<Vec<String>>> {
        let Some(sec) = self.sections.remove("basis") else {
            return Ok(None);
        };
        let mut names: Vec<Option<String>> = vec![None; d];
        for (line, toks) in &sec.rows {
            let [i, label] = toks.as_slice() else {
                return Err(self.err(*line, 1, "[basis] entries are `index label`"));
            };
            let k: usize = i
                .text
                .parse()
                .ok()
                .filter(|&k| k < d)
                .ok_or_else(|| self.err(*line, i.column, format!("`{}` is not an index below {d}", i.text)))?;
            if names[k].replace(label.text.to_string()).is_some() {
                return Err(self.err(*line, 1, format!("duplicate label for basis vector {k}")));
            }
        }
        names
            .into_iter()
            .enumerate()
            .map(|(k, n)| n.ok_or_else(|| self.err(sec.line, 1, format!("basis vector {k} has no label"))))
            .collect::<CliResult<Vec<_>>>()
            .map(Some)
    }

    fn structure(&mut self, d: usize, with_algebra: bool) -> CliResult<AlgebraicStructure> {
        let mut b = AlgebraicStructure::builder(self.field, d);
        if let Some(n) = self.basis(d)? {
            b = b.names(n);
        }
        if with_algebra {
            if let Some(t) = self.tensor("mul", d)? {
                b = b.mul(t);
            }
            if let Some(u) = self.vector("unit", d)? {
                b = b.unit(u);
            }
        }
        if let Some(t) = self.tensor("comul", d)? {
            b = b.comul(t);
        }
        if let Some(e) = self.row_vector("counit", d)? {
            b = b.counit(e);
        }
        if with_algebra {
            if let Some(a) = self.matrix("antipode", d, d)? {
                b = b.antipode(a);
            }
        }
        b.build().map_err(|e| self.err(self.kind_line, 1, e.to_string()))
    }

    /// Rejects leftover headers and sections.
    fn finish(self) -> CliResult<()> {
        if let Some((key, h)) = self
            .headers
            .iter()
            .find(|(k, _)| !self.used_headers.contains(*k) && **k != "format")
        {
            return Err(self.err(
                h.line,
                h.key_column,
                format!("unexpected header `{key}` for a {} file", self.kind),
            ));
        }
        if let Some((name, s)) = self.sections.iter().min_by_key(|(_, s)| s.line) {
            return Err(self.err(
                s.line,
                1,
                format!("unexpected section `[{name}]` for a {} file", self.kind),
            ));
        }
        Ok(())
    }
}

fn build(doc: &mut Doc<'_>, resolve: &Resolver<'_>) -> CliResult<Object> {
    let core_err = |doc: &Doc, e: baxter_core::Error| doc.err(doc.kind_line, 1, e.to_string());
    match doc.kind {
        Kind::Algebra | Kind::Coalgebra | Kind::Bialgebra | Kind::Hopf => {
            let d = doc.header_usize("dim")?;
            let s = doc.structure(d, true)?;
            let found = Kind::of_structure(&s);
            if found != doc.kind {
                return Err(doc.err(
                    doc.kind_line,
                    1,
                    format!("declared kind {} but the sections describe a {found}", doc.kind),
                ));
            }
            Ok(Object::Structure(s))
        }
        Kind::Operator => {
            let rows = doc.header_usize("rows")?;
            let cols = doc.header_usize("cols")?;
            let m = match doc.matrix("matrix", rows, cols)? {
                Some(m) => m,
                None => return Err(doc.err(doc.kind_line, 1, "an operator file needs a [matrix] section")),
            };
            Ok(Object::Operator(m))
        }
        Kind::Module => {
            let hopf = doc.header_hopf(resolve)?;
            let side = doc.header_side()?;
            let dim = doc.header_usize("dim")?;
            let mh = dim * hopf.hopf.dim();
            let action = doc.matrix("action", dim, mh)?;
            let action = match action {
                Some(a) => a,
                None => return Err(doc.err(doc.kind_line, 1, "a module file needs an [action] section")),
            };
            let coaction = doc.matrix("coaction", mh, dim)?;
            let mul = doc.tensor("mul", dim)?;
            let comul = doc.tensor("comul", dim)?;
            let m = ModuleFile {
                hopf,
                side,
                dim,
                action,
                coaction,
                mul,
                comul,
            };
            m.hopf_module().map_err(|e| doc.err(doc.kind_line, 1, e.to_string()))?;
            Ok(Object::Module(m))
        }
        Kind::Comodule => {
            let hopf = doc.header_hopf(resolve)?;
            let side = doc.header_side()?;
            let dim = doc.header_usize("dim")?;
            let coaction = doc.required("coaction", &[dim * hopf.hopf.dim(), dim])?;
            let mut m = LinearMap::zeros(doc.field, dim * hopf.hopf.dim(), dim);
            for (i, v) in coaction {
                m.set(i[0], i[1], v);
            }
            Ok(Object::Comodule(ComoduleFile {
                hopf,
                side,
                dim,
                coaction: m,
            }))
        }
        Kind::Yd => {
            let hopf = doc.header_hopf(resolve)?;
            let dim = doc.header_usize("dim")?;
            let mh = dim * hopf.hopf.dim();
            let c = doc.structure(dim, false)?;
            let action = doc.matrix("action", dim, mh)?;
            let coaction = doc.matrix("coaction", mh, dim)?;
            let (Some(action), Some(coaction)) = (action, coaction) else {
                return Err(doc.err(doc.kind_line, 1, "a yd file needs [action] and [coaction] sections"));
            };
            let ydc = YDModuleCoalgebra::new(hopf.hopf, c, action, coaction).map_err(|e| core_err(doc, e))?;
            Ok(Object::Yd(YdFile {
                hopf_ref: hopf.reference,
                ydc,
            }))
        }
        Kind::Sigma => {
            let hopf = doc.header_hopf(resolve)?;
            let d = hopf.hopf.dim();
            let entries = doc.required("sigma", &[d, d])?;
            let mut sigma = LinearMap::zeros(doc.field, 1, d * d);
            for (i, v) in entries {
                sigma.set(0, i[0] * d + i[1], v);
            }
            let form = CoquasitriangularForm::new(hopf.hopf, sigma).map_err(|e| core_err(doc, e))?;
            Ok(Object::Sigma(SigmaFile {
                hopf_ref: hopf.reference,
                form,
            }))
        }
        Kind::Prelie => {
            let dim = doc.header_usize("dim")?;
            let comul = match doc.tensor("comul", dim)? {
                Some(t) => t,
                None => return Err(doc.err(doc.kind_line, 1, "a prelie file needs a [comul] section")),
            };
            Ok(Object::PreLie(PreLieFile {
                field: doc.field,
                dim,
                comul,
            }))
        }
    }
}

// ---------------------------------------------------------------- writing

struct Writer {
    field: Field,
    out: String,
}

impl Writer {
    fn new(kind: Kind, field: Field) -> Self {
        let mut out = String::new();
        let _ = writeln!(out, "format {FORMAT_VERSION}\nkind {kind}\nfield {field}");
        Writer { field, out }
    }

    fn header(&mut self, key: &str, value: impl fmt::Display) -> CliResult<()> {
        let v = value.to_string();
        if v.is_empty() || v.contains(char::is_whitespace) {
            return Err(CliError::usage(format!(
                "header `{key}` value `{v}` must be a single token"
            )));
        }
        let _ = writeln!(self.out, "{key} {v}");
        Ok(())
    }

    fn entry(&mut self, idx: &[usize], v: &Scalar) {
        for i in idx {
            let _ = write!(self.out, "{i} ");
        }
        match self.field {
            Field::Rational => {
                let (n, d) = v.as_ratio();
                let _ = writeln!(self.out, "{n} {d}");
            }
            Field::Prime(_) => {
                let _ = writeln!(self.out, "{v}");
            }
        }
    }

    fn tensor(&mut self, name: &str, t: Option<&Tensor3>) {
        if let Some(t) = t {
            let _ = writeln!(self.out, "[{name}]");
            for (idx, v) in t.entries() {
                if !v.is_zero() {
                    self.entry(idx, v);
                }
            }
        }
    }

    fn matrix(&mut self, name: &str, m: Option<&LinearMap>) {
        if let Some(m) = m {
            let _ = writeln!(self.out, "[{name}]");
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    let v = m.get(r, c);
                    if !v.is_zero() {
                        self.entry(&[r, c], v);
                    }
                }
            }
        }
    }

    /// A `1 × d` map written with a single index.
    fn row_vector(&mut self, name: &str, m: Option<&LinearMap>) {
        if let Some(m) = m {
            let _ = writeln!(self.out, "[{name}]");
            for c in 0..m.cols() {
                let v = m.get(0, c);
                if !v.is_zero() {
                    self.entry(&[c], v);
                }
            }
        }
    }

    fn vector(&mut self, name: &str, v: Option<&Vector>) {
        if let Some(v) = v {
            let _ = writeln!(self.out, "[{name}]");
            for (i, x) in v.entries().iter().enumerate() {
                if !x.is_zero() {
                    self.entry(&[i], x);
                }
            }
        }
    }

    fn basis(&mut self, names: Option<&[String]>) -> CliResult<()> {
        if let Some(names) = names {
            let _ = writeln!(self.out, "[basis]");
            for (i, n) in names.iter().enumerate() {
                if n.is_empty() || n.contains(char::is_whitespace) {
                    return Err(CliError::usage(format!("basis label `{n}` must be a single token")));
                }
                let _ = writeln!(self.out, "{i} {n}");
            }
        }
        Ok(())
    }

    fn structure(&mut self, s: &AlgebraicStructure) -> CliResult<()> {
        self.basis(s.names())?;
        self.tensor("mul", s.mul());
        self.vector("unit", s.unit());
        self.tensor("comul", s.comul());
        self.row_vector("counit", s.counit());
        self.matrix("antipode", s.antipode());
        Ok(())
    }
}

/// Serializes to the canonical text form.
pub fn to_text(obj: &Object) -> CliResult<String> {
    let mut w = Writer::new(obj.kind(), obj.field());
    match obj {
        Object::Structure(s) => {
            w.header("dim", s.dim())?;
            w.structure(s)?;
        }
        Object::Operator(m) => {
            w.header("rows", m.rows())?;
            w.header("cols", m.cols())?;
            w.matrix("matrix", Some(m));
        }
        Object::Module(m) => {
            w.header("hopf", &m.hopf.reference)?;
            w.header("side", m.side)?;
            w.header("dim", m.dim)?;
            w.matrix("action", Some(&m.action));
            w.matrix("coaction", m.coaction.as_ref());
            w.tensor("mul", m.mul.as_ref());
            w.tensor("comul", m.comul.as_ref());
        }
        Object::Comodule(m) => {
            w.header("hopf", &m.hopf.reference)?;
            w.header("side", m.side)?;
            w.header("dim", m.dim)?;
            w.matrix("coaction", Some(&m.coaction));
        }
        Object::Yd(y) => {
            let c = y.ydc.coalgebra();
            w.header("hopf", &y.hopf_ref)?;
            w.header("dim", c.dim())?;
            w.basis(c.names())?;
            w.tensor("comul", c.comul());
            w.row_vector("counit", c.counit());
            w.matrix("action", Some(y.ydc.action()));
            w.matrix("coaction", Some(y.ydc.coaction()));
        }
        Object::Sigma(s) => {
            w.header("hopf", &s.hopf_ref)?;
            let d = s.form.hopf().dim();
            let _ = writeln!(w.out, "[sigma]");
            for i in 0..d {
                for j in 0..d {
                    let v = s.form.sigma().get(0, i * d + j);
                    if !v.is_zero() {
                        w.entry(&[i, j], v);
                    }
                }
            }
        }
        Object::PreLie(p) => {
            w.header("dim", p.dim)?;
            w.tensor("comul", Some(&p.comul));
        }
    }
    Ok(w.out)
}
