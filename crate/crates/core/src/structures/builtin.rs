//! The fixture zoo: group algebras and their duals, Sweedler's
//! four-dimensional Hopf algebra, the three-dimensional bialgebra with
//! basis `{x, y, z}`, grouplike and divided-power coalgebras, and tensor
//! squares.
//!
//! Every builtin is verified against all axioms its kind advertises before it
//! is returned.

use crate::error::{Error, Result};
use crate::linalg::{kron, LinearMap, Vector};
use crate::scalar::Field;
use crate::tensor::Tensor3;
use crate::verdict::AxiomVerdict;

use super::axioms::{check_antipode, check_associativity, check_bialgebra, check_coassociativity, check_unit_counit};
use super::AlgebraicStructure;

/// A finite group by multiplication table. Element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    names: Vec<String>,
}

impl Group {
    pub fn cyclic(n: usize) -> Group {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let inverse = (0..n).map(|a| (n - a) % n).collect();
        let names = (0..n)
            .map(|a| match a {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{a}"),
            })
            .collect();
        Group { table, inverse, names }
    }

    /// Permutations of `{1,2,3}` in lexicographic one-line order, composed
    /// as functions: `(στ)(i) = σ(τ(i))`.
    pub fn symmetric3() -> Group {
        let mut perms: Vec<[usize; 3]> = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    if a != b && b != c && a != c {
                        perms.push([a, b, c]);
                    }
                }
            }
        }
        let pos = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| pos([s[t[0]], s[t[1]], s[t[2]]])).collect())
            .collect();
        let inverse = perms
            .iter()
            .map(|s| {
                let mut inv = [0; 3];
                for (i, &si) in s.iter().enumerate() {
                    inv[si] = i;
                }
                pos(inv)
            })
            .collect();
        let names = perms
            .iter()
            .map(|p| p.iter().map(|i| (i + 1).to_string()).collect())
            .collect();
        Group { table, inverse, names }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// `k[G]`: grouplike basis, `S(g) = g⁻¹`.
pub fn group_algebra(g: &Group, field: Field) -> Result<AlgebraicStructure> {
    let n = g.order();
    let mul = Tensor3::from_i64(
        field,
        [n, n, n],
        (0..n).flat_map(|a| (0..n).map(move |b| ([a, b, g.mul(a, b)], 1))),
    )?;
    let comul = Tensor3::from_i64(field, [n, n, n], (0..n).map(|a| ([a, a, a], 1)))?;
    let mut anti = LinearMap::zeros(field, n, n);
    for a in 0..n {
        anti.set(g.inv(a), a, field.one());
    }
    AlgebraicStructure::builder(field, n)
        .mul(mul)
        .comul(comul)
        .unit(Vector::basis(field, n, 0))
        .counit(LinearMap::from_entries(field, 1, n, vec![field.one(); n])?)
        .antipode(anti)
        .names(g.names().to_vec())
        .build()
}

/// `k^G`: idempotents `δ_a`, `Δ(δ_a) = Σ_b δ_b ⊗ δ_{b⁻¹a}`.
pub fn dual_group_algebra(g: &Group, field: Field) -> Result<AlgebraicStructure> {
    let n = g.order();
    let mul = Tensor3::from_i64(field, [n, n, n], (0..n).map(|a| ([a, a, a], 1)))?;
    let comul = Tensor3::from_i64(
        field,
        [n, n, n],
        (0..n).flat_map(|a| (0..n).map(move |b| ([a, b, g.mul(g.inv(b), a)], 1))),
    )?;
    let mut anti = LinearMap::zeros(field, n, n);
    for a in 0..n {
        anti.set(g.inv(a), a, field.one());
    }
    AlgebraicStructure::builder(field, n)
        .mul(mul)
        .comul(comul)
        .unit(Vector::from_entries(field, vec![field.one(); n])?)
        .counit(LinearMap::from_columns(field, 1, n, |a| {
            Ok(if a == 0 { vec![(0, field.one())] } else { vec![] })
        })?)
        .antipode(anti)
        .names(g.names().iter().map(|s| format!("d_{s}")).collect())
        .build()
}

/// Sweedler's Hopf algebra with basis `1, g, x, gx`:
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δ(x) = x⊗1 + g⊗x`, `S(x) = −gx`.
fn sweedler4(field: Field) -> Result<AlgebraicStructure> {
    // basis index a + 2b for g^a x^b
    let mut mul = Tensor3::zeros(field, [4, 4, 4]);
    for (a, b, c, d) in
        (0..2).flat_map(|a| (0..2).flat_map(move |b| (0..2).flat_map(move |c| (0..2).map(move |d| (a, b, c, d)))))
    {
        if b + d >= 2 {
            continue;
        }
        // g^a x^b g^c x^d = (−1)^{bc} g^{a+c} x^{b+d}
        let sign = if b * c == 1 { -1 } else { 1 };
        mul.add_to([a + 2 * b, c + 2 * d, (a + c) % 2 + 2 * (b + d)], field.from_i64(sign))?;
    }
    let comul = Tensor3::from_i64(
        field,
        [4, 4, 4],
        [
            ([0, 0, 0], 1),
            ([1, 1, 1], 1),
            ([2, 2, 0], 1),
            ([2, 1, 2], 1),
            ([3, 3, 1], 1),
            ([3, 0, 3], 1),
        ],
    )?;
    let anti = LinearMap::from_i64(
        field,
        4,
        4,
        &[
            1, 0, 0, 0, //
            0, 1, 0, 0, //
            0, 0, 0, 1, //
            0, 0, -1, 0,
        ],
    )?;
    AlgebraicStructure::builder(field, 4)
        .mul(mul)
        .comul(comul)
        .unit(Vector::basis(field, 4, 0))
        .counit(LinearMap::from_i64(field, 1, 4, &[1, 1, 0, 0])?)
        .antipode(anti)
        .names(["1", "g", "x", "gx"].map(String::from).to_vec())
        .build()
}

/// Basis `{x, y, z}` with `x` a unit, `y² = y`, `yz = z`, `zy = z² = 0`, all
/// basis vectors grouplike. Unital but with no counit.
fn counitless3(field: Field) -> Result<AlgebraicStructure> {
    let (x, y, z) = (0, 1, 2);
    let mul = Tensor3::from_i64(
        field,
        [3, 3, 3],
        [
            ([x, x, x], 1),
            ([y, y, y], 1),
            ([x, y, y], 1),
            ([y, x, y], 1),
            ([y, z, z], 1),
            ([x, z, z], 1),
            ([z, x, z], 1),
        ],
    )?;
    let comul = Tensor3::from_i64(field, [3, 3, 3], [([x, x, x], 1), ([y, y, y], 1), ([z, z, z], 1)])?;
    AlgebraicStructure::builder(field, 3)
        .mul(mul)
        .comul(comul)
        .unit(Vector::basis(field, 3, x))
        .names(["x", "y", "z"].map(String::from).to_vec())
        .build()
}

fn grouplike(field: Field, n: usize) -> Result<AlgebraicStructure> {
    AlgebraicStructure::builder(field, n)
        .comul(Tensor3::from_i64(field, [n, n, n], (0..n).map(|a| ([a, a, a], 1)))?)
        .counit(LinearMap::from_entries(field, 1, n, vec![field.one(); n])?)
        .build()
}

/// `Δ(e_k) = Σ_{i+j=k} e_i ⊗ e_j`, `ε(e_k) = δ_{k0}`.
fn divided_power(field: Field, n: usize) -> Result<AlgebraicStructure> {
    AlgebraicStructure::builder(field, n)
        .comul(Tensor3::from_i64(
            field,
            [n, n, n],
            (0..n).flat_map(|k| (0..=k).map(move |i| ([k, i, k - i], 1))),
        )?)
        .counit(LinearMap::from_columns(field, 1, n, |k| {
            Ok(if k == 0 { vec![(0, field.one())] } else { vec![] })
        })?)
        .build()
}

/// `A ⊗ B` with componentwise structure maps. Basis `a_i ⊗ b_j` sits at
/// `i·dim B + j`; maps present on only one side are dropped.
pub fn tensor_product(a: &AlgebraicStructure, b: &AlgebraicStructure) -> Result<AlgebraicStructure> {
    a.field().ensure(b.field())?;
    let f = a.field();
    let (da, db) = (a.dim(), b.dim());
    let n = da * db;
    let mut builder = AlgebraicStructure::builder(f, n);
    if let (Some(ma), Some(mb)) = (a.mul(), b.mul()) {
        let mut t = Tensor3::zeros(f, [n, n, n]);
        for (&[i, k, p], x) in ma.entries() {
            for (&[j, l, q], y) in mb.entries() {
                t.add_to([i * db + j, k * db + l, p * db + q], x * y)?;
            }
        }
        builder = builder.mul(t);
    }
    if let (Some(ca), Some(cb)) = (a.comul(), b.comul()) {
        let mut t = Tensor3::zeros(f, [n, n, n]);
        for (&[i, p, r], x) in ca.entries() {
            for (&[j, q, s], y) in cb.entries() {
                t.add_to([i * db + j, p * db + q, r * db + s], x * y)?;
            }
        }
        builder = builder.comul(t);
    }
    if let (Some(ua), Some(ub)) = (a.unit(), b.unit()) {
        builder = builder.unit(ua.tensor(ub)?);
    }
    if let (Some(ea), Some(eb)) = (a.counit(), b.counit()) {
        builder = builder.counit(kron(ea, eb)?);
    }
    if let (Some(sa), Some(sb)) = (a.antipode(), b.antipode()) {
        builder = builder.antipode(kron(sa, sb)?);
    }
    let names = (0..da)
        .flat_map(|i| (0..db).map(move |j| (i, j)))
        .map(|(i, j)| format!("{}|{}", a.label(i), b.label(j)))
        .collect();
    builder.names(names).build()
}

fn verify_fixture(name: &str, s: &AlgebraicStructure) -> Result<()> {
    let mut verdicts: Vec<AxiomVerdict> = Vec::new();
    if s.mul().is_some() {
        verdicts.push(check_associativity(s)?);
    }
    if s.comul().is_some() {
        verdicts.push(check_coassociativity(s)?);
    }
    if s.unit().is_some() || s.counit().is_some() {
        verdicts.push(check_unit_counit(s)?);
    }
    if s.mul().is_some() && s.comul().is_some() {
        verdicts.push(check_bialgebra(s)?);
    }
    if s.antipode().is_some() {
        verdicts.push(check_antipode(s)?);
    }
    match verdicts.into_iter().find(|v| !v.passed()) {
        None => Ok(()),
        Some(v) => Err(Error::postcondition(
            format!("builtin `{name}` fails its axioms"),
            v.into_defect(),
        )),
    }
}

fn parse_group(spec: &str) -> Option<Group> {
    if spec == "S3" {
        return Some(Group::symmetric3());
    }
    let n: usize = spec.strip_prefix('C')?.parse().ok()?;
    (1..=12).contains(&n).then(|| Group::cyclic(n))
}

fn rational_builtin(name: &str) -> Result<AlgebraicStructure> {
    let q = Field::Rational;
    let unknown = || Error::UnknownBuiltin(name.to_string());
    if let Some(rest) = name.strip_prefix("tensor:") {
        let inner = rational_builtin(rest)?;
        return tensor_product(&inner, &inner);
    }
    match name {
        "field" => return group_algebra(&Group::cyclic(1), q),
        "sweedler4" => return sweedler4(q),
        "counitless3" => return counitless3(q),
        _ => {}
    }
    if let Some(g) = name.strip_prefix("group:") {
        return group_algebra(&parse_group(g).ok_or_else(unknown)?, q);
    }
    if let Some(g) = name.strip_prefix("dual-group:") {
        return dual_group_algebra(&parse_group(g).ok_or_else(unknown)?, q);
    }
    let sized = |prefix: &str| -> Option<usize> {
        let n: usize = name.strip_prefix(prefix)?.parse().ok()?;
        (1..=16).contains(&n).then_some(n)
    };
    if let Some(n) = sized("grouplike:") {
        return grouplike(q, n);
    }
    if let Some(n) = sized("divided-power:") {
        return divided_power(q, n);
    }
    Err(unknown())
}

/// Looks up a fixture by name, optionally reduced into a prime field with an
/// `@Fp:<p>` suffix (e.g. `grouplike:2@Fp:2`).
pub fn builtin(name: &str) -> Result<AlgebraicStructure> {
    let (base, field) = match name.split_once('@') {
        Some((base, field)) => (base, field.parse::<Field>()?),
        None => (name, Field::Rational),
    };
    let s = rational_builtin(base)?.to_field(field)?;
    verify_fixture(name, &s)?;
    Ok(s)
}

/// Representative builtin names, for listings.
pub fn builtin_names() -> Vec<&'static str> {
    vec![
        "field",
        "group:C2",
        "group:C3",
        "group:S3",
        "group:C<n>  (n = 1..12)",
        "dual-group:C2",
        "dual-group:S3",
        "sweedler4",
        "counitless3",
        "grouplike:<n>  (n = 1..16)",
        "divided-power:<n>  (n = 1..16)",
        "tensor:<name>  (tensor square, e.g. tensor:group:C2)",
        "<name>@Fp:<p>  (reduce mod a prime, e.g. grouplike:2@Fp:2)",
    ]
}
