//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//!
//! Run with `cargo test -p baxter-core --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use baxter_core::hopf_module::{
    build_projection_bialgebra_module, check_hopf_module_algebra, check_hopf_module_coalgebra, pi_operator,
    projection_pr,
};
use baxter_core::prelie::{check_pre_lie, prelie_from_rb_weight0, prelie_from_rb_weight_minus1};
use baxter_core::rota_baxter::{
    check_rb_bialgebra, check_rb_coalgebra_idempotent, search_rb_operators, RbSide, SearchOptions,
};
use baxter_core::structures::{
    check_associativity, check_bialgebra, check_coassociativity, check_hopf, check_unit_counit, solve_counit,
    CounitSolution, Group,
};
use baxter_core::yetter_drinfeld::{
    check_coquasitriangular, check_yd_coalgebra, grading_coaction, smash_projection_left, smash_projection_right,
    yd_from_coquasitriangular, CoquasitriangularForm, YDModuleCoalgebra,
};
use baxter_core::{builtin, AlgebraicStructure, Field, LinearMap, ProjectionBialgebra, Result, Scalar, Tensor3};

type Outcome = Result<(bool, String)>;

fn q(n: i64) -> Scalar {
    Field::Rational.from_i64(n)
}

fn p1(a: i64, b: i64) -> LinearMap {
    LinearMap::from_i64(Field::Rational, 3, 3, &[0, 0, 0, 0, 0, 0, a, b, 0]).unwrap()
}

fn p2(c: i64) -> LinearMap {
    LinearMap::from_i64(Field::Rational, 3, 3, &[-c, 0, 0, -c, -c, 0, 0, 0, -c]).unwrap()
}

fn qop(d: i64) -> LinearMap {
    LinearMap::from_i64(Field::Rational, 3, 3, &[0, 0, 0, 0, 0, 0, d, d, 0]).unwrap()
}

const SAMPLES: [i64; 5] = [0, 1, -1, 2, 5];

fn ac1_example_operators() -> Outcome {
    let h = builtin("counitless3")?;
    let mut runs = 0;
    let mut failures = Vec::new();
    for &a in &SAMPLES {
        for &b in &SAMPLES {
            for &d in &SAMPLES {
                runs += 1;
                if !check_rb_bialgebra(&h, &p1(a, b), &qop(d), &q(0), &q(d))?.passed() {
                    failures.push(format!("P1(a={a},b={b}) Q(d={d})"));
                }
            }
        }
    }
    for &c in &SAMPLES {
        for &d in &SAMPLES {
            runs += 1;
            if !check_rb_bialgebra(&h, &p2(c), &qop(d), &q(c), &q(d))?.passed() {
                failures.push(format!("P2(c={c}) Q(d={d})"));
            }
        }
    }
    // weight 1 on the algebra side must fail whenever P1 ≠ 0
    let mut controls = 0;
    for &d in SAMPLES.iter().filter(|&&d| d != 0) {
        for (a, b) in [(1, 1), (2, 5), (0, -1), (1, 0)] {
            controls += 1;
            let v = check_rb_bialgebra(&h, &p1(a, b), &qop(d), &q(1), &q(d))?;
            let nonzero = v.algebra.defect().is_some_and(|x| x.residual.nnz() > 0);
            if v.passed() || !nonzero {
                failures.push(format!("negative control P1(a={a},b={b}) weight (1,{d}) passed"));
            }
        }
    }
    Ok((
        failures.is_empty(),
        if failures.is_empty() {
            format!("{runs} parameter samples pass with zero defect; {controls} negative controls fail")
        } else {
            failures.join("; ")
        },
    ))
}

struct Weighted {
    label: String,
    coalgebra: AlgebraicStructure,
    op: LinearMap,
}

fn smash_fixtures() -> Result<Vec<(String, YDModuleCoalgebra)>> {
    ["group:C2", "group:C3", "group:S3", "sweedler4"]
        .iter()
        .map(|n| Ok((n.to_string(), YDModuleCoalgebra::adjoint(&builtin(n)?)?)))
        .collect()
}

fn weight_minus_one_operators() -> Result<(Vec<Weighted>, Vec<String>)> {
    let mut ops = Vec::new();
    let mut failures = Vec::new();
    for (name, ydc) in smash_fixtures()? {
        if !check_yd_coalgebra(&ydc)?.passed() {
            failures.push(format!("{name}: adjoint structure is not a Yetter-Drinfeld coalgebra"));
            continue;
        }
        for (side, out) in [
            ("P_R", smash_projection_right(&ydc)?),
            ("P_L", smash_projection_left(&ydc)?),
        ] {
            let label = format!("C×H over {name}, {side}");
            if !out.module_coalgebra.passed() {
                failures.push(format!("{label}: not a Hopf module coalgebra"));
            }
            if !out.rb.passed() {
                failures.push(format!("{label}: weight -1 identity fails"));
            }
            if !out.idempotent() {
                failures.push(format!("{label}: not idempotent"));
            }
            if !out.closed_form_matches() {
                failures.push(format!("{label}: closed form differs from generic projection"));
            }
            ops.push(Weighted {
                label,
                coalgebra: out.smash.clone(),
                op: out.projection.clone(),
            });
        }
    }
    let pb = ProjectionBialgebra::tensor_square(&builtin("group:C2")?)?;
    let hm = build_projection_bialgebra_module(&pb)?;
    let generic = projection_pr(&hm)?;
    let pi = pi_operator(&pb)?;
    let c = pb.c().clone();
    let v = check_rb_coalgebra_idempotent(&c, &generic, &q(-1))?;
    let label = "tensor bialgebra over group:C2, Π".to_string();
    if !v.passed() || v.idempotent != Some(true) {
        failures.push(format!("{label}: weight -1 or idempotency fails"));
    }
    if generic != pi {
        failures.push(format!("{label}: convolution formula differs from generic projection"));
    }
    ops.push(Weighted {
        label,
        coalgebra: c,
        op: generic,
    });
    Ok((ops, failures))
}

fn ac2_projection_suite() -> Outcome {
    let (ops, failures) = weight_minus_one_operators()?;
    Ok((
        failures.is_empty(),
        if failures.is_empty() {
            format!(
                "{} projections: weight -1, idempotent, closed form = generic ({})",
                ops.len(),
                ops.iter().map(|w| w.label.as_str()).collect::<Vec<_>>().join("; ")
            )
        } else {
            failures.join("; ")
        },
    ))
}

/// `Δ(e₀) = e₀⊗e₀`, `Δ(e₁) = e₀⊗e₁`: coassociative but not cocommutative.
fn lopsided_coalgebra(p: u64) -> Result<AlgebraicStructure> {
    let f = Field::prime(p)?;
    AlgebraicStructure::builder(f, 2)
        .comul(Tensor3::from_i64(f, [2, 2, 2], [([0, 0, 0], 1), ([1, 0, 1], 1)])?)
        .build()
}

fn ac3_prelie_suite() -> Outcome {
    let mut failures = Vec::new();
    let (ops, _) = weight_minus_one_operators()?;
    let minus_one = ops.len();
    for w in &ops {
        match prelie_from_rb_weight_minus1(&w.coalgebra, &w.op) {
            Ok(pl) => {
                if !check_pre_lie(pl.field(), pl.dim(), pl.comul())?.passed() {
                    failures.push(format!("{}: pre-Lie defect", w.label));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", w.label)),
        }
    }
    let mut searched = 0;
    let mut coalgebras = 0;
    for p in [2u64, 3] {
        let mut zoo: Vec<(String, AlgebraicStructure)> = Vec::new();
        for name in ["grouplike:1", "grouplike:2", "divided-power:1", "divided-power:2"] {
            zoo.push((format!("{name}@Fp:{p}"), builtin(&format!("{name}@Fp:{p}"))?));
        }
        zoo.push((
            format!("dual-group:C2@Fp:{p}"),
            builtin(&format!("dual-group:C2@Fp:{p}"))?.coalgebra_part()?,
        ));
        zoo.push((format!("lopsided@Fp:{p}"), lopsided_coalgebra(p)?));
        for (name, s) in zoo {
            coalgebras += 1;
            let r = search_rb_operators(&s, RbSide::Coalgebra, &s.field().zero(), &SearchOptions::default())?;
            for op in &r.operators {
                searched += 1;
                match prelie_from_rb_weight0(&s, op) {
                    Ok(pl) if check_pre_lie(pl.field(), pl.dim(), pl.comul())?.passed() => {}
                    Ok(_) => failures.push(format!("{name}: pre-Lie defect")),
                    Err(e) => failures.push(format!("{name}: {e}")),
                }
            }
        }
    }
    Ok((
        failures.is_empty(),
        if failures.is_empty() {
            format!(
                "{minus_one} weight -1 operators and {searched} searched weight-0 operators on {coalgebras} coalgebras give pre-Lie coalgebras"
            )
        } else {
            failures.join("; ")
        },
    ))
}

fn ac4_compound() -> Outcome {
    let pb = ProjectionBialgebra::tensor_square(&builtin("group:C2")?)?;
    let hm = build_projection_bialgebra_module(&pb)?;
    let alg = check_hopf_module_algebra(&hm)?.passed();
    let coalg = check_hopf_module_coalgebra(&hm)?.passed();
    let pi = pi_operator(&pb)?;
    let v = check_rb_bialgebra(pb.c(), &pi, &pi, &q(-1), &q(-1))?;
    let ok = alg && coalg && v.passed();
    Ok((
        ok,
        format!(
            "Hopf module algebra: {alg}, Hopf module coalgebra: {coalg}, (C, Π, Π) at weights (-1,-1): algebra {} coalgebra {}",
            v.algebra.passed(),
            v.coalgebra.passed()
        ),
    ))
}

/// Evaluates the weight-γ coalgebra identity entry by entry for grouplike
/// `Δ(e_i) = e_i⊗e_i` on plain residues, over all `p^(n²)` matrices.
fn grouplike_oracle(p: u64, n: usize, gamma: u64) -> Vec<Vec<u64>> {
    let cells = n * n;
    let mut found = Vec::new();
    for code in 0..p.pow(cells as u32) {
        let mut m = vec![0u64; cells];
        let mut k = code;
        for slot in m.iter_mut().rev() {
            *slot = k % p;
            k /= p;
        }
        let at = |r: usize, c: usize| m[r * n + c];
        let ok = (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|l| {
                    // (Q⊗Q)Δ(e_i) at e_j⊗e_l
                    let lhs = at(j, i) * at(l, i) % p;
                    // ΔQ(e_i) = Σ_r Q_ri e_r⊗e_r
                    let mut rhs = 0;
                    if j == l {
                        rhs += gamma * at(j, i);
                    }
                    rhs += at(j, i) * at(l, j); // (id⊗Q): e_j ⊗ Q(e_j), r = j
                    rhs += at(l, i) * at(j, l); // (Q⊗id): Q(e_l) ⊗ e_l, r = l
                    lhs == rhs % p
                })
            })
        });
        if ok {
            found.push(m);
        }
    }
    found
}

fn ac5_search_oracle() -> Outcome {
    let f = Field::Prime(2);
    let s = builtin("grouplike:2@Fp:2")?;
    let r = search_rb_operators(&s, RbSide::Coalgebra, &f.one(), &SearchOptions::default())?;
    let got: Vec<Vec<u64>> = r
        .operators
        .iter()
        .map(|m| {
            m.entries()
                .iter()
                .map(|x| x.as_ratio().0.try_into().unwrap_or(u64::MAX))
                .collect()
        })
        .collect();
    let oracle = grouplike_oracle(2, 2, 1);
    let mut a = got.clone();
    let mut b = oracle.clone();
    a.sort();
    b.sort();
    Ok((
        a == b && r.candidates_scanned == 16,
        format!(
            "search found {} of {} candidates, oracle found {}; sets {}",
            got.len(),
            r.candidates_scanned,
            oracle.len(),
            if a == b { "equal" } else { "differ" }
        ),
    ))
}

fn ac6_coquasitriangular() -> Outcome {
    let h = builtin("group:C2")?;
    let good = CoquasitriangularForm::from_table(&h, &[vec![1, 1], vec![1, -1]])?;
    let br = check_coquasitriangular(&good)?.passed();
    let delta = h.comul_map()?.to_linear_map();
    let (_, regular) = yd_from_coquasitriangular(&good, 2, &delta)?;
    let grading = grading_coaction(&Group::cyclic(2), Field::Rational);
    let (act, graded) = yd_from_coquasitriangular(&good, 2, &grading)?;
    let dual = builtin("dual-group:C2")?.coalgebra_part()?;
    let ydc = YDModuleCoalgebra::new(h.clone(), dual, act, grading)?;
    let yd_coalgebra = check_yd_coalgebra(&ydc)?.passed();
    let bad = CoquasitriangularForm::from_table(&h, &[vec![1, 1], vec![1, 2]])?;
    let v = check_coquasitriangular(&bad)?;
    let (bad_fails, witness) = match v.defect() {
        Some(d) => (
            d.identity == "sigma multiplicative in the first argument",
            format!("{} at {:?}", d.identity, d.witness_input()),
        ),
        None => (false, "no defect".into()),
    };
    Ok((
        br && regular.passed() && graded.passed() && yd_coalgebra && bad_fails,
        format!(
            "σ(g,g)=-1 braids: {br}; induced action on k[C2]: {}; on graded dual: {} (coalgebra: {yd_coalgebra}); σ(g,g)=2 fails {witness}",
            regular.passed(),
            graded.passed()
        ),
    ))
}

fn ac7_soundness() -> Outcome {
    let h4 = builtin("sweedler4")?;
    let hopf = check_hopf(&h4)?.passed();
    let ex = builtin("counitless3")?;
    let bialg = check_associativity(&ex)?.passed()
        && check_coassociativity(&ex)?.passed()
        && check_unit_counit(&ex)?.passed()
        && check_bialgebra(&ex)?.passed();
    let (no_counit, how) = match solve_counit(&ex)? {
        CounitSolution::NotMultiplicative { counit, defect } => (
            true,
            format!(
                "unique coalgebra counit ({}) fails {}, so no counit exists",
                counit
                    .entries()
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
                defect.identity
            ),
        ),
        CounitSolution::NoCoalgebraCounit => (true, "no coalgebra counit".into()),
        CounitSolution::Counit(c) => (false, format!("found counit {c}")),
    };
    Ok((
        hopf && bialg && no_counit,
        format!("sweedler4 Hopf: {hopf}; counitless3 bialgebra: {bialg}; {how}"),
    ))
}

type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("AC1", "Rota-Baxter bialgebra parameter families", ac1_example_operators),
        (
            "AC2",
            "coinvariant projections on smash coproducts",
            ac2_projection_suite,
        ),
        (
            "AC3",
            "pre-Lie coalgebras from weight -1 and weight 0 operators",
            ac3_prelie_suite,
        ),
        ("AC4", "projection operator on the tensor bialgebra", ac4_compound),
        ("AC5", "exhaustive search matches entry-wise oracle", ac5_search_oracle),
        (
            "AC6",
            "coquasitriangular forms and induced actions",
            ac6_coquasitriangular,
        ),
        ("AC7", "axiom checker spot checks", ac7_soundness),
    ];
    let mut all = true;
    for (id, title, run) in criteria {
        let start = Instant::now();
        let (ok, detail) = match run() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        all &= ok;
        println!(
            "[{}] {id} {title} ({:.2}s): {detail}",
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
