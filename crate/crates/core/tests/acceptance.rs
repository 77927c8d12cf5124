//! Acceptance gate: one line per criterion, nonzero exit on any failure.

mod common;

use std::collections::{HashMap, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fibtile::bijection::{
    correspond, fold_board, unfold_bracelet, unfold_fold, verify_correspondence, Variant,
};
use fibtile::genfun::{
    alternating_sum_gf, alternating_sum_partial_fractions, closed_form_alt, closed_form_sum,
    printed_closed_form_alt, weighted_sum_gf, weighted_sum_partial_fractions, Poly, RationalGF,
    SeqKind,
};
use fibtile::identity::{
    certify_against, certify_cfinite, verify_by_tilings, verify_direct, Identity, IdentityId,
};
use fibtile::sequences::{check_lemma1, check_pell, Annihilator};
use fibtile::tiling::{
    count_board, count_bracelet, enumerate_board, enumerate_bracelet, BraceletClass, Cap,
    ColorScheme, Phase,
};
use fibtile::Error;
use num_bigint::BigInt;
use num_rational::BigRational;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Option<Duration>, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn scheme(m: u32) -> ColorScheme {
    ColorScheme::new(m).unwrap()
}

fn identity_instances() -> Vec<Identity> {
    let mut v: Vec<Identity> = [IdentityId::Sury, IdentityId::Theorem2, IdentityId::Corollary]
        .into_iter()
        .map(|id| Identity::fixed(id).unwrap())
        .collect();
    for m in 2..=10 {
        v.push(Identity::general(m).unwrap());
        v.push(Identity::alternating(m).unwrap());
    }
    v
}

fn small_counts() -> Outcome {
    let cases = [(2, 2, 8), (3, 2, 24), (4, 2, 80), (0, 3, 1), (1, 3, 3), (2, 3, 18), (3, 3, 81)];
    for (n, m, want) in cases {
        let s = scheme(m);
        let listed = enumerate_board(n, s, Cap::default()).map_err(|e| e.to_string())?.len();
        let formula = count_board(n, s);
        ensure(listed == want && formula == BigInt::from(want), || {
            format!("n={n} m={m}: listed {listed}, formula {formula}, want {want}")
        })?;
    }
    Ok("8, 24, 80 and 1, 3, 18, 81".into())
}

fn worked_example() -> Outcome {
    let r = verify_correspondence(3, scheme(3), Cap::default()).map_err(|e| e.to_string())?;
    let c = &r.cumulative;
    ensure(c.by_color == [22, 22, 22], || format!("squares {:?}", c.by_color))?;
    ensure(c.in_phase == 36 && c.out_of_phase == 36, || "domino classes".into())?;
    ensure(r.board_square_class == 44 && r.board_domino_class == 36, || "board classes".into())?;
    let total = c.by_color.iter().sum::<u64>()
        + c.in_phase
        + c.out_of_phase
        + r.zero_bracelets
        + r.extra_boards;
    ensure(total == 162 && r.targets == 162 && r.pass, || format!("bookkeeping {total}"))?;
    Ok("22/22/22, 36, 36, 44, 36; total 162 = 2*81".into())
}

fn identity_suite() -> Outcome {
    let mut rows = 0;
    for id in identity_instances() {
        let r = verify_direct(&id, 200);
        ensure(r.pass, || format!("{id} fails at {:?}", r.failures))?;
        rows += r.rows.len();
    }
    let four = verify_direct(&Identity::general(4).unwrap(), 200);
    for row in four.rows.iter().take(30) {
        let lhs: BigInt = (0..=row.n)
            .map(|k| common::pow(4, k) * (common::l(k) + 2 * common::f(k + 1)))
            .sum();
        ensure(row.lhs == lhs, || format!("m=4 display at n={}", row.n))?;
    }
    ensure(four.pass, || "m=4 display".into())?;
    Ok(format!("{rows} rows, zero failures"))
}

fn enumeration_oracle() -> Outcome {
    for (m, n_max) in [(2u32, 10usize), (3, 7)] {
        let s = scheme(m);
        for n in 0..=n_max {
            let boards = enumerate_board(n, s, Cap::default()).map_err(|e| e.to_string())?.len();
            let bracelets = enumerate_bracelet(n, s, Cap::default()).map_err(|e| e.to_string())?.len();
            let want_b = common::pow(m as i64, n as u64) * common::f(n as u64 + 1);
            let want_r = common::pow(m as i64, n as u64) * common::l(n as u64);
            ensure(BigInt::from(boards) == want_b && count_board(n, s) == want_b, || {
                format!("boards n={n} m={m}")
            })?;
            ensure(BigInt::from(bracelets) == want_r && count_bracelet(n, s) == want_r, || {
                format!("bracelets n={n} m={m}")
            })?;
        }
        let id = Identity::general(m).unwrap();
        let t = verify_by_tilings(&id, n_max as u64, Cap::default()).map_err(|e| e.to_string())?;
        let d = verify_direct(&id, n_max as u64);
        ensure(t.pass && t.rows == d.rows, || format!("tilings vs direct at m={m}"))?;
    }
    Ok("m=2 n<=10, m=3 n<=7".into())
}

fn genfun_suite() -> Outcome {
    let fib: Vec<BigRational> = (0..100).map(|n| common::f(n).into()).collect();
    let luc: Vec<BigRational> = (0..100).map(|n| common::l(n).into()).collect();
    ensure(RationalGF::fibonacci().series_coeffs(100) == fib, || "fib series".into())?;
    ensure(RationalGF::lucas().series_coeffs(100) == luc, || "lucas series".into())?;
    let cross_zero = |a: &RationalGF, b: &RationalGF| &(a.num() * b.den()) - &(b.num() * a.den()) == Poly::zero();
    for m in 2..=10u32 {
        for kind in [SeqKind::Fibonacci, SeqKind::Lucas] {
            ensure(cross_zero(&weighted_sum_gf(kind, m), &weighted_sum_partial_fractions(kind, m)), || {
                format!("weighted {kind:?} m={m}")
            })?;
            ensure(cross_zero(&alternating_sum_gf(kind, m), &alternating_sum_partial_fractions(kind, m)), || {
                format!("alternating {kind:?} m={m}")
            })?;
        }
    }
    corrected_grid()?;
    Ok("100 terms; partial fractions m=2..10; closed forms n<=100".into())
}

fn corrected_grid() -> Result<(), String> {
    for m in 2..=10u32 {
        let mi = m as i64;
        for n in 0..=100u64 {
            let pairs = [
                (closed_form_sum(SeqKind::Fibonacci, n, m), common::weighted_sum(common::f, n, mi)),
                (closed_form_sum(SeqKind::Lucas, n, m), common::weighted_sum(common::l, n, mi)),
                (closed_form_alt(SeqKind::Fibonacci, n, m), common::alternating_sum(common::f, n, mi)),
                (closed_form_alt(SeqKind::Lucas, n, m), common::alternating_sum(common::l, n, mi)),
            ];
            for (got, want) in pairs {
                ensure(got.as_ref() == Ok(&want), || format!("closed form n={n} m={m}"))?;
            }
        }
    }
    Ok(())
}

fn erratum() -> Outcome {
    let printed_l = printed_closed_form_alt(SeqKind::Lucas, 1, 3);
    let printed_f = printed_closed_form_alt(SeqKind::Fibonacci, 1, 3);
    let direct_l = common::alternating_sum(common::l, 1, 3);
    let direct_f = common::alternating_sum(common::f, 1, 3);
    ensure(printed_l == BigRational::new(57.into(), 11.into()) && direct_l == BigInt::from(5), || {
        format!("lucas printed {printed_l} direct {direct_l}")
    })?;
    ensure(printed_f != BigRational::from_integer(direct_f.clone()), || "fib printed agrees".into())?;
    corrected_grid()?;
    Ok(format!("printed 57/11 vs 5, {printed_f} vs {direct_f}; corrected forms agree"))
}

fn bijection_properties() -> Outcome {
    for m in [1u32, 2] {
        let s = scheme(m);
        for n in 1..=10 {
            let mut fibres: HashMap<_, HashSet<u32>> = HashMap::new();
            for b in enumerate_bracelet(n, s, Cap::default()).map_err(|e| e.to_string())? {
                let label = match b.phase() {
                    Phase::In => 0,
                    Phase::Out => b.tiles()[0].color,
                };
                let t = unfold_bracelet(&b).map_err(|e| e.to_string())?;
                ensure(fibres.entry((b.phase(), t)).or_default().insert(label), || {
                    format!("unfold collision n={n} m={m}")
                })?;
            }
            let boards: HashSet<_> = enumerate_board(n, s, Cap::default()).unwrap().into_iter().collect();
            let shorter: HashSet<_> = if n >= 2 {
                enumerate_board(n - 2, s, Cap::default()).unwrap().into_iter().collect()
            } else {
                HashSet::new()
            };
            let ins: HashSet<_> = fibres.keys().filter(|k| k.0 == Phase::In).map(|k| k.1.clone()).collect();
            let outs: HashSet<_> = fibres.keys().filter(|k| k.0 == Phase::Out).map(|k| k.1.clone()).collect();
            ensure(ins == boards && outs == shorter, || format!("unfold image n={n} m={m}"))?;
            let per_colour = fibres.iter().all(|(k, v)| match k.0 {
                Phase::In => v.len() == 1,
                Phase::Out => v.len() == s.domino_colors() as usize,
            });
            ensure(per_colour, || format!("unfold fibres n={n} m={m}"))?;
        }
    }
    for m in [2u32, 3] {
        let s = scheme(m);
        for n in 1..=8 {
            let mut images: HashMap<Variant, HashSet<_>> = HashMap::new();
            let mut targets = HashSet::new();
            for t in enumerate_board(n, s, Cap::default()).map_err(|e| e.to_string())? {
                for v in Variant::BOTH {
                    ensure(targets.insert(correspond(&t, v, s).unwrap()), || {
                        format!("target collision n={n} m={m}")
                    })?;
                    if t.last_non_white().is_none() {
                        continue;
                    }
                    let f = fold_board(&t, v, s).map_err(|e| e.to_string())?;
                    let declared = match (v, f.bracelet.class()) {
                        (Variant::One, BraceletClass::Square(c)) => c >= 2,
                        (Variant::One, BraceletClass::InPhaseDomino) => true,
                        (Variant::Two, BraceletClass::Square(c)) => c < m,
                        (Variant::Two, BraceletClass::OutOfPhase) => true,
                        _ => false,
                    };
                    ensure(declared, || format!("variant {v} left its classes at n={n} m={m}"))?;
                    if v == Variant::One {
                        ensure(unfold_fold(&f, n).as_ref() == Ok(&t), || format!("round trip n={n} m={m}"))?;
                    }
                    ensure(images.entry(v).or_default().insert(f.bracelet), || {
                        format!("variant {v} not injective n={n} m={m}")
                    })?;
                }
            }
            ensure(targets.len() == 2 * count_board(n, s).to_string().parse::<usize>().unwrap(), || {
                "target count".into()
            })?;
        }
    }
    Ok("unfold n<=10; folds injective, targets disjoint, round trip, n<=8".into())
}

fn certificates() -> Outcome {
    let mut orders = HashSet::new();
    for id in identity_instances() {
        let c = certify_cfinite(&id).map_err(|e| format!("{id}: {e}"))?;
        orders.insert(c.annihilator_order);
    }
    let id = Identity::general(3).unwrap();
    let scaled = Annihilator::fibonacci().scaled(&BigInt::from(3));
    let perturbed = |n: u64| common::pow(3, n + 1) * common::f(n);
    match certify_against(&id, &perturbed, &scaled) {
        Err(Error::CertificateRefused { witness, lhs, rhs }) => {
            Ok(format!("all families certified (orders {orders:?}); perturbed rhs refused at n = {witness} ({lhs} != {rhs})"))
        }
        other => Err(format!("perturbation not refused: {other:?}")),
    }
}

fn invariants() -> Outcome {
    for n in 1..=500 {
        ensure(check_lemma1(n) == Ok(true), || format!("lemma at n={n}"))?;
    }
    for n in 0..=500 {
        ensure(check_pell(n), || format!("pell at n={n}"))?;
    }
    Ok("n <= 500".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "small tiling counts", Some(Duration::from_secs(1)), small_counts),
        (2, "3x3 worked example", Some(Duration::from_secs(1)), worked_example),
        (3, "identity suite by direct summation", Some(Duration::from_secs(10)), identity_suite),
        (4, "enumeration equals formula", Some(Duration::from_secs(120)), enumeration_oracle),
        (5, "generating functions", Some(Duration::from_secs(5)), genfun_suite),
        (6, "printed alternating forms detected", None, erratum),
        (7, "bijection properties", None, bijection_properties),
        (8, "certificates", Some(Duration::from_secs(1)), certificates),
        (9, "elementary invariants", Some(Duration::from_secs(1)), invariants),
    ];
    let mut failed = 0;
    for (k, name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let verdict = match (outcome, limit) {
            (Err(e), _) => Err(e),
            (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (Ok(s), _) => Ok(s),
        };
        match verdict {
            Ok(s) => println!("[PASS] criterion {k}: {name}: {s} ({elapsed:.2?})"),
            Err(e) => {
                failed += 1;
                println!("[FAIL] criterion {k}: {name}: {e} ({elapsed:.2?})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
