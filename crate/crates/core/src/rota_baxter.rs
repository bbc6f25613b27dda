//! Rota-Baxter operators on the algebra side, the coalgebra side, and both
//! at once, plus exhaustive search over prime fields.
//!
//! Algebra side, weight λ:
//! `P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy)`.
//!
//! Coalgebra side, weight γ:
//! `(Q⊗Q)Δ = (id⊗Q)ΔQ + (Q⊗id)ΔQ + γΔQ`.

use std::fmt;
use std::thread;

use crate::error::{Error, Result};
use crate::linalg::LinearMap;
use crate::scalar::{Field, Scalar};
use crate::structures::AlgebraicStructure;
use crate::tensor::{MultiMap, SparseTensor};
use crate::verdict::{check_identity, DefectReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RbSide {
    Algebra,
    Coalgebra,
}

impl fmt::Display for RbSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RbSide::Algebra => "algebra",
            RbSide::Coalgebra => "coalgebra",
        })
    }
}

impl std::str::FromStr for RbSide {
    type Err = Error;
    fn from_str(s: &str) -> Result<RbSide> {
        match s {
            "algebra" => Ok(RbSide::Algebra),
            "coalgebra" => Ok(RbSide::Coalgebra),
            _ => Err(Error::Parse(format!("unknown side `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RBVerdict {
    pub weight: Scalar,
    pub side: RbSide,
    /// Whether the operator squares to itself; only filled in on request.
    pub idempotent: Option<bool>,
    defect: Option<DefectReport>,
}

impl RBVerdict {
    pub fn passed(&self) -> bool {
        self.defect.is_none()
    }

    pub fn defect(&self) -> Option<&DefectReport> {
        self.defect.as_ref()
    }
}

/// Both halves of a Rota-Baxter bialgebra check, reported separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RBBialgebraVerdict {
    pub algebra: RBVerdict,
    pub coalgebra: RBVerdict,
}

impl RBBialgebraVerdict {
    pub fn passed(&self) -> bool {
        self.algebra.passed() && self.coalgebra.passed()
    }
}

fn operator_map(s: &AlgebraicStructure, op: &LinearMap, weight: &Scalar) -> Result<MultiMap> {
    s.field().ensure(op.field())?;
    s.field().ensure(weight.field())?;
    if (op.rows(), op.cols()) != (s.dim(), s.dim()) {
        return Err(Error::shape(format!(
            "operator is {}x{}, structure has dimension {}",
            op.rows(),
            op.cols(),
            s.dim()
        )));
    }
    MultiMap::endo(op)
}

pub fn is_idempotent(op: &LinearMap) -> Result<bool> {
    Ok(op.compose(op)? == *op)
}

/// Checks the Rota-Baxter algebra identity on all basis pairs.
pub fn check_rb_algebra(s: &AlgebraicStructure, p: &LinearMap, lambda: &Scalar) -> Result<RBVerdict> {
    let pm = operator_map(s, p, lambda)?;
    let mu = s.mul_map()?;
    let d = s.dim();
    let verdict = check_identity(
        "Rota-Baxter algebra identity",
        s.field(),
        &[d, d],
        |t| t.apply(0, &pm)?.apply(1, &pm)?.apply(0, &mu),
        |t| {
            let a = t.apply(1, &pm)?.apply(0, &mu)?.apply(0, &pm)?;
            let b = t.apply(0, &pm)?.apply(0, &mu)?.apply(0, &pm)?;
            let c = t.apply(0, &mu)?.apply(0, &pm)?.scale(lambda);
            a.add(&b)?.add(&c)
        },
    )?;
    Ok(RBVerdict {
        weight: lambda.clone(),
        side: RbSide::Algebra,
        idempotent: None,
        defect: verdict.into_defect(),
    })
}

/// Checks the Rota-Baxter coalgebra identity on all basis vectors.
pub fn check_rb_coalgebra(s: &AlgebraicStructure, q: &LinearMap, gamma: &Scalar) -> Result<RBVerdict> {
    let qm = operator_map(s, q, gamma)?;
    let delta = s.comul_map()?;
    let verdict = check_identity(
        "Rota-Baxter coalgebra identity",
        s.field(),
        &[s.dim()],
        |t| t.apply(0, &delta)?.apply(0, &qm)?.apply(1, &qm),
        |t| {
            let dq: SparseTensor = t.apply(0, &qm)?.apply(0, &delta)?;
            let a = dq.apply(1, &qm)?;
            let b = dq.apply(0, &qm)?;
            a.add(&b)?.add(&dq.scale(gamma))
        },
    )?;
    Ok(RBVerdict {
        weight: gamma.clone(),
        side: RbSide::Coalgebra,
        idempotent: None,
        defect: verdict.into_defect(),
    })
}

/// [`check_rb_coalgebra`] that also reports whether `Q² = Q`.
pub fn check_rb_coalgebra_idempotent(s: &AlgebraicStructure, q: &LinearMap, gamma: &Scalar) -> Result<RBVerdict> {
    let mut v = check_rb_coalgebra(s, q, gamma)?;
    v.idempotent = Some(is_idempotent(q)?);
    Ok(v)
}

/// [`check_rb_algebra`] that also reports whether `P² = P`.
pub fn check_rb_algebra_idempotent(s: &AlgebraicStructure, p: &LinearMap, lambda: &Scalar) -> Result<RBVerdict> {
    let mut v = check_rb_algebra(s, p, lambda)?;
    v.idempotent = Some(is_idempotent(p)?);
    Ok(v)
}

pub fn check_rb_side(s: &AlgebraicStructure, side: RbSide, op: &LinearMap, weight: &Scalar) -> Result<RBVerdict> {
    match side {
        RbSide::Algebra => check_rb_algebra(s, op, weight),
        RbSide::Coalgebra => check_rb_coalgebra(s, op, weight),
    }
}

/// `(P, Q)` is a Rota-Baxter bialgebra of weight `(λ, γ)`.
pub fn check_rb_bialgebra(
    s: &AlgebraicStructure,
    p: &LinearMap,
    q: &LinearMap,
    lambda: &Scalar,
    gamma: &Scalar,
) -> Result<RBBialgebraVerdict> {
    Ok(RBBialgebraVerdict {
        algebra: check_rb_algebra(s, p, lambda)?,
        coalgebra: check_rb_coalgebra(s, q, gamma)?,
    })
}

pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Skip candidates with `P² ≠ P` before running the identity check.
    pub idempotent_only: bool,
    /// Maximum number of candidate matrices, `p^(dim²)`.
    pub budget: u128,
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            idempotent_only: false,
            budget: DEFAULT_BUDGET,
            threads: thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub field: Field,
    pub dim: usize,
    pub side: RbSide,
    pub weight: Scalar,
    /// Passing operators in lexicographic order of their row-major entries.
    pub operators: Vec<LinearMap>,
    pub candidates_scanned: u128,
}

/// The `index`-th `dim × dim` matrix over `F_p` in lexicographic order of
/// row-major entries (first entry most significant).
pub fn candidate_matrix(field: Field, dim: usize, mut index: u128) -> LinearMap {
    let p = field.modulus().expect("candidates exist only over prime fields") as u128;
    let n = dim * dim;
    let mut digits = vec![0i64; n];
    for slot in digits.iter_mut().rev() {
        *slot = (index % p) as i64;
        index /= p;
    }
    LinearMap::from_i64(field, dim, dim, &digits).expect("shape is dim x dim")
}

fn candidate_count(p: u64, dim: usize, budget: u128) -> Result<u128> {
    let mut n: u128 = 1;
    for _ in 0..dim * dim {
        n = n.saturating_mul(p as u128);
        if n > budget {
            return Err(Error::BudgetExceeded { candidates: n, budget });
        }
    }
    Ok(n)
}

fn scan_range(
    s: &AlgebraicStructure,
    side: RbSide,
    weight: &Scalar,
    idempotent_only: bool,
    range: std::ops::Range<u128>,
) -> Result<Vec<LinearMap>> {
    let mut found = Vec::new();
    for k in range {
        let op = candidate_matrix(s.field(), s.dim(), k);
        if idempotent_only && !is_idempotent(&op)? {
            continue;
        }
        if check_rb_side(s, side, &op, weight)?.passed() {
            found.push(op);
        }
    }
    Ok(found)
}

/// Enumerates every `dim × dim` matrix over `F_p` and keeps the Rota-Baxter
/// operators of the requested side and weight.
///
/// The candidate space is split into contiguous chunks scanned on separate
/// threads; results are concatenated in chunk order, so the output is
/// identical to a sequential scan.
pub fn search_rb_operators(
    s: &AlgebraicStructure,
    side: RbSide,
    weight: &Scalar,
    options: &SearchOptions,
) -> Result<SearchResult> {
    let p = s
        .field()
        .modulus()
        .ok_or_else(|| Error::shape("exhaustive search needs a prime field"))?;
    s.field().ensure(weight.field())?;
    match side {
        RbSide::Algebra => s.mul_map().map(|_| ())?,
        RbSide::Coalgebra => s.comul_map().map(|_| ())?,
    }
    let total = candidate_count(p, s.dim(), options.budget)?;
    let threads = options.threads.max(1) as u128;
    let operators = if threads == 1 || total < 1024 {
        scan_range(s, side, weight, options.idempotent_only, 0..total)?
    } else {
        let chunk = total.div_ceil(threads);
        let ranges: Vec<_> = (0..threads)
            .map(|t| (t * chunk).min(total)..((t + 1) * chunk).min(total))
            .collect();
        let parts: Vec<Result<Vec<LinearMap>>> = thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .into_iter()
                .map(|r| scope.spawn(move || scan_range(s, side, weight, options.idempotent_only, r)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .collect()
        });
        let mut all = Vec::new();
        for part in parts {
            all.extend(part?);
        }
        all
    };
    Ok(SearchResult {
        field: s.field(),
        dim: s.dim(),
        side,
        weight: weight.clone(),
        operators,
        candidates_scanned: total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::builtin;

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    fn e54_p1(a: i64, b: i64) -> LinearMap {
        // columns: P(x) = a z, P(y) = b z, P(z) = 0
        LinearMap::from_i64(Field::Rational, 3, 3, &[0, 0, 0, 0, 0, 0, a, b, 0]).unwrap()
    }

    fn e54_p2(c: i64) -> LinearMap {
        // P(x) = −cx − cy, P(y) = −cy, P(z) = −cz
        LinearMap::from_i64(Field::Rational, 3, 3, &[-c, 0, 0, -c, -c, 0, 0, 0, -c]).unwrap()
    }

    fn e54_q(d: i64) -> LinearMap {
        LinearMap::from_i64(Field::Rational, 3, 3, &[0, 0, 0, 0, 0, 0, d, d, 0]).unwrap()
    }

    #[test]
    fn zero_operator_passes_every_weight() {
        let s = builtin("counitless3").unwrap();
        let zero = LinearMap::zeros(Field::Rational, 3, 3);
        for w in [-2, -1, 0, 1, 7] {
            assert!(check_rb_algebra(&s, &zero, &q(w)).unwrap().passed());
            assert!(check_rb_coalgebra(&s, &zero, &q(w)).unwrap().passed());
        }
    }

    #[test]
    fn identity_passes_only_at_weight_minus_one() {
        for name in ["counitless3", "sweedler4", "group:S3"] {
            let s = builtin(name).unwrap();
            let id = LinearMap::identity(Field::Rational, s.dim());
            for w in -3..=3 {
                assert_eq!(
                    check_rb_algebra(&s, &id, &q(w)).unwrap().passed(),
                    w == -1,
                    "{name} {w}"
                );
                assert_eq!(
                    check_rb_coalgebra(&s, &id, &q(w)).unwrap().passed(),
                    w == -1,
                    "{name} {w}"
                );
            }
        }
    }

    #[test]
    fn counitless3_operators() {
        let s = builtin("counitless3").unwrap();
        assert!(check_rb_algebra(&s, &e54_p1(1, 1), &q(0)).unwrap().passed());
        assert!(check_rb_algebra(&s, &e54_p2(2), &q(2)).unwrap().passed());
        assert!(check_rb_coalgebra(&s, &e54_q(3), &q(3)).unwrap().passed());
        let v = check_rb_coalgebra(&s, &e54_q(3), &q(0)).unwrap();
        // on x: LHS d² z⊗z = 9 z⊗z, RHS γd z⊗z = 0
        let defect = v.defect().unwrap();
        assert_eq!(defect.witness, vec![0, 2, 2]);
        assert_eq!(defect.residual.get(&[0, 2, 2]), q(9));
        let both = check_rb_bialgebra(&s, &e54_p1(2, 5), &e54_q(1), &q(0), &q(1)).unwrap();
        assert!(both.passed());
        let both = check_rb_bialgebra(&s, &e54_p2(1), &e54_q(1), &q(1), &q(1)).unwrap();
        assert!(both.passed());
    }

    #[test]
    fn p2_family_passes_at_sampled_parameters() {
        let s = builtin("counitless3").unwrap();
        for c in [0, 1, -1, 2, -2, 3] {
            assert!(check_rb_algebra(&s, &e54_p2(c), &q(c)).unwrap().passed(), "c = {c}");
        }
    }

    #[test]
    fn scalar_twist_rescales_weight() {
        let s = builtin("counitless3").unwrap();
        let alpha = q(3);
        let qop = e54_q(2);
        assert!(check_rb_coalgebra(&s, &qop, &q(2)).unwrap().passed());
        assert!(check_rb_coalgebra(&s, &qop.scale(&alpha), &(&q(2) * &alpha))
            .unwrap()
            .passed());
        let h = builtin("sweedler4").unwrap();
        let id = LinearMap::identity(Field::Rational, 4);
        let alpha = Field::Rational.parse_scalar("-5/3").unwrap();
        assert!(check_rb_coalgebra(&h, &id.scale(&alpha), &(&q(-1) * &alpha))
            .unwrap()
            .passed());
        assert!(check_rb_algebra(&h, &id.scale(&alpha), &(&q(-1) * &alpha))
            .unwrap()
            .passed());
    }

    #[test]
    fn shape_and_field_errors() {
        let s = builtin("counitless3").unwrap();
        assert!(check_rb_algebra(&s, &LinearMap::zeros(Field::Rational, 2, 2), &q(0)).is_err());
        assert!(check_rb_algebra(&s, &LinearMap::zeros(Field::Prime(2), 3, 3), &q(0)).is_err());
        let c = builtin("grouplike:2").unwrap();
        assert!(matches!(
            check_rb_algebra(&c, &LinearMap::zeros(Field::Rational, 2, 2), &q(0)),
            Err(Error::Missing(_))
        ));
    }

    #[test]
    fn idempotency_is_reported_on_request() {
        let s = builtin("counitless3").unwrap();
        let id = LinearMap::identity(Field::Rational, 3);
        let v = check_rb_coalgebra_idempotent(&s, &id, &q(-1)).unwrap();
        assert_eq!(v.idempotent, Some(true));
        assert_eq!(check_rb_coalgebra(&s, &id, &q(-1)).unwrap().idempotent, None);
        let v = check_rb_coalgebra_idempotent(&s, &e54_q(1), &q(1)).unwrap();
        assert_eq!(v.idempotent, Some(false));
    }

    #[test]
    fn dim_one_grouplike_over_f2() {
        let f2 = Field::Prime(2);
        let s = builtin("grouplike:1@Fp:2").unwrap();
        let r = search_rb_operators(&s, RbSide::Coalgebra, &f2.one(), &SearchOptions::default()).unwrap();
        assert_eq!(r.candidates_scanned, 2);
        assert_eq!(
            r.operators,
            vec![LinearMap::zeros(f2, 1, 1), LinearMap::identity(f2, 1)]
        );
    }

    /// Eq-by-eq evaluation on raw residues, independent of the tensor engine:
    /// for grouplike `Δ(e_i) = e_i ⊗ e_i`, the identity at input `e_i` and
    /// output `e_j ⊗ e_k` reads
    /// `Q_ji Q_ki = Σ_l Q_li (δ_jl Q_kl + Q_jl δ_kl + γ δ_jl δ_kl)`.
    fn grouplike_oracle(p: u64, dim: usize, gamma: u64) -> Vec<Vec<u64>> {
        let n = dim * dim;
        let total = p.pow(n as u32);
        let mut out = Vec::new();
        for idx in 0..total {
            let mut m = vec![0u64; n];
            let mut k = idx;
            for slot in m.iter_mut().rev() {
                *slot = k % p;
                k /= p;
            }
            let at = |r: usize, c: usize| m[r * dim + c];
            let mut ok = true;
            for i in 0..dim {
                for j in 0..dim {
                    for kk in 0..dim {
                        let lhs = at(j, i) * at(kk, i) % p;
                        let mut rhs = 0;
                        for l in 0..dim {
                            let ql = at(l, i);
                            let mut term = 0;
                            if j == l {
                                term += at(kk, l);
                            }
                            if kk == l {
                                term += at(j, l);
                            }
                            if j == l && kk == l {
                                term += gamma;
                            }
                            rhs = (rhs + ql * term) % p;
                        }
                        if lhs != rhs {
                            ok = false;
                        }
                    }
                }
            }
            if ok {
                out.push(m);
            }
        }
        out
    }

    fn residues(m: &LinearMap) -> Vec<u64> {
        m.entries()
            .iter()
            .map(|e| match e {
                Scalar::Modular { residue, .. } => *residue,
                _ => unreachable!(),
            })
            .collect()
    }

    #[test]
    fn search_matches_entrywise_oracle() {
        for (p, dim, gamma) in [(2, 2, 1), (2, 2, 0), (3, 2, 2), (3, 2, 0), (2, 1, 1)] {
            let f = Field::Prime(p);
            let s = builtin(&format!("grouplike:{dim}@Fp:{p}")).unwrap();
            let r = search_rb_operators(
                &s,
                RbSide::Coalgebra,
                &f.from_i64(gamma as i64),
                &SearchOptions::default(),
            )
            .unwrap();
            let got: Vec<Vec<u64>> = r.operators.iter().map(residues).collect();
            assert_eq!(got, grouplike_oracle(p, dim, gamma), "p={p} dim={dim} γ={gamma}");
        }
    }

    #[test]
    fn threaded_search_equals_sequential() {
        let f = Field::Prime(2);
        let s = builtin("counitless3@Fp:2").unwrap();
        let seq = SearchOptions {
            threads: 1,
            ..SearchOptions::default()
        };
        let par = SearchOptions {
            threads: 5,
            ..SearchOptions::default()
        };
        for side in [RbSide::Algebra, RbSide::Coalgebra] {
            let a = search_rb_operators(&s, side, &f.one(), &seq).unwrap();
            let b = search_rb_operators(&s, side, &f.one(), &par).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.candidates_scanned, 512);
            assert!(a.operators.contains(&LinearMap::zeros(f, 3, 3)));
            for op in &a.operators {
                assert!(check_rb_side(&s, side, op, &f.one()).unwrap().passed());
            }
        }
    }

    #[test]
    fn idempotent_filter_is_a_subset() {
        let f = Field::Prime(3);
        let s = builtin("grouplike:2@Fp:3").unwrap();
        let w = f.from_i64(-1);
        let all = search_rb_operators(&s, RbSide::Coalgebra, &w, &SearchOptions::default()).unwrap();
        let idem = search_rb_operators(
            &s,
            RbSide::Coalgebra,
            &w,
            &SearchOptions {
                idempotent_only: true,
                ..SearchOptions::default()
            },
        )
        .unwrap();
        let expected: Vec<_> = all
            .operators
            .iter()
            .filter(|m| is_idempotent(m).unwrap())
            .cloned()
            .collect();
        assert_eq!(idem.operators, expected);
        assert!(idem.operators.contains(&LinearMap::identity(f, 2)));
    }

    #[test]
    fn budget_and_field_guards() {
        let s = builtin("grouplike:3@Fp:3").unwrap();
        let tight = SearchOptions {
            budget: 1000,
            ..SearchOptions::default()
        };
        assert!(matches!(
            search_rb_operators(&s, RbSide::Coalgebra, &Field::Prime(3).one(), &tight),
            Err(Error::BudgetExceeded { .. })
        ));
        let rational = builtin("grouplike:1").unwrap();
        assert!(search_rb_operators(&rational, RbSide::Coalgebra, &q(1), &SearchOptions::default()).is_err());
    }

    #[test]
    fn candidate_order_is_lexicographic() {
        let f = Field::Prime(3);
        assert_eq!(candidate_matrix(f, 2, 0), LinearMap::zeros(f, 2, 2));
        assert_eq!(
            candidate_matrix(f, 2, 1),
            LinearMap::from_i64(f, 2, 2, &[0, 0, 0, 1]).unwrap()
        );
        assert_eq!(
            candidate_matrix(f, 2, 27),
            LinearMap::from_i64(f, 2, 2, &[1, 0, 0, 0]).unwrap()
        );
        assert_eq!(
            candidate_matrix(f, 2, 80),
            LinearMap::from_i64(f, 2, 2, &[2, 2, 2, 2]).unwrap()
        );
    }
}
