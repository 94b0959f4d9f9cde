//! Acceptance run: every criterion is checked with exact equality and
//! reported on its own PASS/FAIL line. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use qhankel::families::{
    big_phi_step_check, classical_bell_oracle, generate, phi_step_check, psi_sum_step_check,
    recurrence_check, representation_check, FamilyId, FamilyKind, Route,
};
use qhankel::hankel::{
    bareiss_det, binomial_transform, cofactor_det, hankel_det, hankel_matrix, scaling_check,
    DetAlgorithm,
};
use qhankel::jfraction::{extract, roundtrip_check, MomentSequence};
use qhankel::motzkin::{
    build_table, closed_form_check, product_formula, ClassicalInstance, JacobiCoefficients,
};
use qhankel::operators::{commutation_check, LinearOp};
use qhankel::qkernel::stirling_binomial_check;
use qhankel::verify::{check_identity, run_suite, IdentityId};
use qhankel::{BiPoly, RatFunc};

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome {
            ok,
            detail: detail.into(),
        }
    }
}

fn suite(ids: &[IdentityId], n_max: usize, c: &[u32], expected: usize) -> Outcome {
    let report = run_suite("acceptance", ids, n_max, c);
    for case in report.cases.iter().filter(|c| !c.equal) {
        eprintln!("    {case}");
    }
    Outcome::new(
        report.all_passed() && report.cases.len() == expected,
        format!(
            "{} cases, {} passed, {} failed",
            report.cases.len(),
            report.summary.passed,
            report.summary.failed
        ),
    )
}

fn p(s: &str) -> BiPoly {
    s.parse().unwrap()
}

fn phi_like() -> Outcome {
    suite(&[IdentityId::T1a, IdentityId::T1b], 7, &[1], 14)
}

fn big_phi_like() -> Outcome {
    suite(&[IdentityId::T2a, IdentityId::T2b], 7, &[1], 14)
}

fn rogers_szego_and_pochhammer() -> Outcome {
    suite(
        &[IdentityId::L3, IdentityId::L4a, IdentityId::L4b],
        7,
        &[1],
        21,
    )
}

fn generalized_families() -> Outcome {
    let ids = [
        IdentityId::Psi,
        IdentityId::PsiShift,
        IdentityId::Psi2,
        IdentityId::Psi2Shift,
    ];
    let base = suite(&ids, 5, &[1, 2, 3], 60);
    let pairs = [
        (IdentityId::Psi, IdentityId::T1a),
        (IdentityId::PsiShift, IdentityId::T1b),
        (IdentityId::Psi2, IdentityId::T2a),
        (IdentityId::Psi2Shift, IdentityId::T2b),
    ];
    let coincide = pairs.iter().all(|&(general, special)| {
        (1..=5).all(|n| {
            let a = check_identity(general, n, 1);
            let b = check_identity(special, n, 1);
            a.lhs == b.lhs && a.rhs == b.rhs
        })
    });
    Outcome::new(
        base.ok && coincide,
        format!("{}; c=1 coincides with phi/Phi: {coincide}", base.detail),
    )
}

fn specials() -> Outcome {
    let base = suite(
        &[IdentityId::QFact, IdentityId::S1, IdentityId::Herm],
        7,
        &[1],
        21,
    );
    let q = check_identity(IdentityId::QFact, 2, 1).lhs == p("q");
    let s1 = check_identity(IdentityId::S1, 2, 1).lhs == p("-x");
    let herm = check_identity(IdentityId::Herm, 2, 1).lhs == p("-1");
    Outcome::new(
        base.ok && q && s1 && herm,
        format!("{}; n=2 values q, -x, -1: {}", base.detail, q && s1 && herm),
    )
}

fn stirling_identity() -> Outcome {
    let mut count = 0;
    let mut ok = true;
    for n in 0..=10u32 {
        for k in 0..=n {
            count += 1;
            let check = stirling_binomial_check(n, k);
            if !check.equal {
                eprintln!("    n={n} k={k}: {} vs {}", check.lhs, check.rhs);
                ok = false;
            }
        }
    }
    Outcome::new(ok && count == 66, format!("{count} cases"))
}

fn representations() -> Outcome {
    let mut cases = 0;
    let mut ok = true;
    let mut record = |family: FamilyId, n: usize| {
        cases += 1;
        let rep = representation_check(family, n);
        if !(rep.equal && rep.rhs.is_polynomial()) {
            eprintln!("    {family} n={n}: {} vs {}", rep.lhs, rep.rhs);
            ok = false;
        }
    };
    for n in 0..=10 {
        record(FamilyId::plain(FamilyKind::Phi), n);
        record(FamilyId::plain(FamilyKind::BigPhi), n);
        record(FamilyId::new(FamilyKind::Psi, 1), n);
        record(FamilyId::new(FamilyKind::BigPsi, 1), n);
    }
    for c in [2, 3] {
        for n in 0..=8 {
            record(FamilyId::new(FamilyKind::Psi, c), n);
            record(FamilyId::new(FamilyKind::BigPsi, c), n);
        }
    }
    let mut routes = true;
    for (kind, c, n_max) in [
        (FamilyKind::Psi, 1, 10),
        (FamilyKind::BigPsi, 1, 10),
        (FamilyKind::Psi, 2, 8),
        (FamilyKind::BigPsi, 2, 8),
        (FamilyKind::Psi, 3, 8),
        (FamilyKind::BigPsi, 3, 8),
    ] {
        let id = FamilyId::new(kind, c);
        routes &= generate(id, n_max, Route::ClosedForm)
            == generate(id, n_max, Route::RecurrenceOrOperator);
    }
    Outcome::new(
        ok && routes,
        format!("{cases} representation cases; closed forms match operators: {routes}"),
    )
}

fn x_times(op: LinearOp) -> LinearOp {
    LinearOp::Compose(vec![LinearOp::MulXPower(1), op])
}

fn recurrences_and_operators() -> Outcome {
    let mut ok = true;
    let mut cases = 0;
    for c in 1..=3u32 {
        for kind in [
            FamilyKind::Phi,
            FamilyKind::BigPhi,
            FamilyKind::Psi,
            FamilyKind::BigPsi,
        ] {
            if c > 1 && !kind.takes_c() {
                continue;
            }
            let family = FamilyId::new(kind, c);
            for n in 0..10 {
                cases += 1;
                let r = recurrence_check(family, n);
                if !r.equal {
                    eprintln!("    recurrence {family} n={n}: {} vs {}", r.lhs, r.rhs);
                    ok = false;
                }
            }
        }
    }
    // Operators assembled from the generic operator algebra.
    let ops = |c: u32| {
        [
            (
                FamilyId::plain(FamilyKind::Phi),
                x_times(LinearOp::Sum(vec![LinearOp::Identity, LinearOp::D])),
            ),
            (
                FamilyId::plain(FamilyKind::BigPhi),
                x_times(LinearOp::Sum(vec![LinearOp::Epsilon, LinearOp::D])),
            ),
            (
                FamilyId::new(FamilyKind::Psi, c),
                LinearOp::Sum(vec![LinearOp::MulXPower(c), x_times(LinearOp::D)]),
            ),
            (
                FamilyId::new(FamilyKind::BigPsi, c),
                LinearOp::Sum(vec![
                    LinearOp::Compose(vec![LinearOp::MulXPower(c), LinearOp::Epsilon]),
                    x_times(LinearOp::D),
                ]),
            ),
        ]
    };
    for c in 1..=3u32 {
        for (family, op) in ops(c) {
            let closed = generate(family, 10, Route::ClosedForm).values;
            for (n, value) in closed.iter().enumerate() {
                cases += 1;
                if op.iterate_on_one(n as u32) != RatFunc::from(value) {
                    eprintln!("    operator {family} n={n}");
                    ok = false;
                }
            }
        }
    }
    let steps =
        phi_step_check(10) && big_phi_step_check(10) && (1..=3).all(|c| psi_sum_step_check(10, c));
    let commutation = commutation_check(10);
    Outcome::new(
        ok && steps && commutation,
        format!(
            "{cases} recurrence/operator cases; step checks: {steps}; commutation: {commutation}"
        ),
    )
}

fn motzkin_end_to_end() -> Outcome {
    let mut ok = true;
    for inst in ClassicalInstance::ALL {
        let coeffs = inst.coefficients(13);
        let table = build_table(&coeffs, 13).unwrap();
        let moments: Vec<BiPoly> = table
            .column0()
            .into_iter()
            .map(|m| m.into_poly().expect("polynomial moments"))
            .collect();
        for n in 1..=7 {
            let d = hankel_det(&moments, n, 0, DetAlgorithm::Bareiss).unwrap();
            if RatFunc::from(d) != product_formula(&coeffs, n).unwrap() {
                eprintln!(
                    "    {} n={n}: determinant differs from product",
                    inst.name()
                );
                ok = false;
            }
        }
        if !closed_form_check(inst, 10) {
            eprintln!("    {} table differs from closed form", inst.name());
            ok = false;
        }
    }
    Outcome::new(ok, "rs, poch, hermite: n <= 7 products, depth 10 tables")
}

fn random_poly(rng: &mut StdRng) -> BiPoly {
    let terms = rng.random_range(0..=4);
    BiPoly::from_terms((0..terms).map(|_| {
        (
            rng.random_range(0..=3u32),
            rng.random_range(0..=3u32),
            rng.random_range(-5..=5i64),
        )
    }))
}

fn random_sequences() -> Vec<Vec<BiPoly>> {
    let mut rng = StdRng::seed_from_u64(0x5eed_0010);
    (0..50)
        .map(|_| (0..7).map(|_| random_poly(&mut rng)).collect())
        .collect()
}

fn invariance() -> Outcome {
    let mut ok = true;
    for (i, seq) in random_sequences().iter().enumerate() {
        let transformed = binomial_transform(seq);
        for n in 1..=4 {
            let a = hankel_det(seq, n, 0, DetAlgorithm::Bareiss).unwrap();
            let b = hankel_det(&transformed, n, 0, DetAlgorithm::Bareiss).unwrap();
            if a != b || !scaling_check(seq, n).unwrap() {
                eprintln!("    sequence {i} n={n}");
                ok = false;
            }
        }
    }
    Outcome::new(ok, "50 seeded sequences, n = 1..4")
}

fn random_coefficients(rng: &mut StdRng, depth: usize) -> JacobiCoefficients {
    let s = (0..depth)
        .map(|_| RatFunc::from(random_poly(rng)))
        .collect();
    let t = (0..depth - 1)
        .map(|_| loop {
            let p = random_poly(rng);
            if !p.is_zero() {
                break RatFunc::from(p);
            }
        })
        .collect();
    JacobiCoefficients::new(s, t)
}

fn jfraction() -> Outcome {
    let mut recovered = true;
    for inst in ClassicalInstance::ALL {
        let table = build_table(&inst.coefficients(9), 9).unwrap();
        let got = extract(&MomentSequence::new(table.column0()).unwrap(), 5).unwrap();
        recovered &= (0..5u32).all(|k| got.s[k as usize] == inst.s(k));
        recovered &= (0..4u32).all(|k| got.t[k as usize] == inst.t(k));
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_0011);
    let mut trips = 0;
    for _ in 0..20 {
        let coeffs = random_coefficients(&mut rng, 4);
        if roundtrip_check(&coeffs, 4) == Ok(true) {
            trips += 1;
        }
    }
    Outcome::new(
        recovered && trips == 20,
        format!("instances recovered at k = 0..4: {recovered}; round trips {trips}/20"),
    )
}

fn classical_corollary() -> Outcome {
    let base = suite(&[IdentityId::Radoux], 6, &[1], 6);
    let bell = generate(
        FamilyId::plain(FamilyKind::ClassicalBell),
        10,
        Route::ClosedForm,
    )
    .values;
    let oracle = (0..=10).all(|n| bell[n] == classical_bell_oracle(n as u32));
    let specialized = (1..=6).all(|n| {
        check_identity(IdentityId::T1a, n, 1).rhs.at_q_one()
            == check_identity(IdentityId::Radoux, n, 1).rhs
    });
    Outcome::new(
        base.ok && oracle && specialized,
        format!(
            "{}; Bell oracle: {oracle}; q -> 1 of phi formula: {specialized}",
            base.detail
        ),
    )
}

/// Every Hankel matrix of size at most 4 built above, from the catalog
/// sequences, the Motzkin moments and the random sequences.
fn small_matrices() -> Vec<Vec<BiPoly>> {
    let mut seqs: Vec<Vec<BiPoly>> = Vec::new();
    for kind in FamilyKind::ALL {
        let cs: &[u32] = if kind.takes_c() { &[1, 2, 3] } else { &[1] };
        for &c in cs {
            seqs.push(generate(FamilyId::new(kind, c), 8, Route::ClosedForm).values);
        }
    }
    seqs.push((0..=8).map(qhankel::qkernel::q_factorial).collect());
    for inst in ClassicalInstance::ALL {
        let table = build_table(&inst.coefficients(8), 8).unwrap();
        seqs.push(
            table
                .column0()
                .into_iter()
                .map(|m| m.into_poly().unwrap())
                .collect(),
        );
    }
    for seq in random_sequences() {
        seqs.push(binomial_transform(&seq));
        seqs.push(
            seq.iter()
                .enumerate()
                .map(|(k, a)| a.mul_x_pow(k as u32))
                .collect(),
        );
        seqs.push(seq);
    }
    seqs
}

fn oracle_equivalence() -> Outcome {
    let mut count = 0;
    let mut ok = true;
    for seq in small_matrices() {
        for n in 1..=4 {
            for shift in 0..=1 {
                let Ok(m) = hankel_matrix(&seq, n, shift) else {
                    continue;
                };
                count += 1;
                if bareiss_det(&m) != cofactor_det(&m) {
                    eprintln!("    mismatch at n={n} shift={shift}");
                    ok = false;
                }
            }
        }
    }
    Outcome::new(ok, format!("{count} matrices"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("phi determinants T1a/T1b, n <= 7", phi_like),
        ("Phi determinants T2a/T2b, n <= 7", big_phi_like),
        (
            "Rogers-Szego and (x;q)_n determinants, n <= 7",
            rogers_szego_and_pochhammer,
        ),
        (
            "psi/Psi determinants and shifts, n <= 5, c = 1,2,3",
            generalized_families,
        ),
        (
            "q-factorial, q-falling factorial, q-Hermite, n <= 7",
            specials,
        ),
        (
            "q-Stirling binomial identity, 0 <= k <= n <= 10",
            stirling_identity,
        ),
        (
            "alternating-binomial representations and closed forms",
            representations,
        ),
        (
            "member recurrences, operator forms, commutation",
            recurrences_and_operators,
        ),
        (
            "Motzkin moments: product formula and closed tables",
            motzkin_end_to_end,
        ),
        (
            "binomial-transform and scaling invariance, random",
            invariance,
        ),
        ("J-fraction extraction and round trips", jfraction),
        (
            "classical Bell determinants at q = 1, n <= 6",
            classical_corollary,
        ),
        (
            "Bareiss equals cofactor expansion, size <= 4",
            oracle_equivalence,
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let verdict = if outcome.ok { "PASS" } else { "FAIL" };
        if !outcome.ok {
            failed += 1;
        }
        println!(
            "{verdict} [{:02}] {name} ({}; {:.1}s)",
            i + 1,
            outcome.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
