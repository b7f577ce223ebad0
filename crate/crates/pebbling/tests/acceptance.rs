//! The acceptance gate: one check per release criterion, each printing a
//! single pass/fail line. Everything numeric is exact; no tolerances.

mod common;

use common::{naive_is_solvable, naive_max_counts};
use pebbling::dist::Distribution;
use pebbling::engine::{is_k_reachable, is_solvable, reach_count, MoveRule};
use pebbling::enumerate::{canonical_distributions_of_total, distributions_of_total};
use pebbling::grid::GridDims;
use pebbling::lemmas::{lemma2_lp, lemma4_lp, mixing_rows, reduce_to_four_vars};
use pebbling::lp::{check_dual_certificate, minimax_on_simplex, solve_min, LpSolution};
use pebbling::potential::{effect, hem, value, value_effect_identity_check, ValueMap};
use pebbling::rat::{int, rat, Rat};
use pebbling::regions::{decompose, normalize, region_frontier};
use pebbling::search::{
    flatten_to_occupied, optimal_pebbling_number, smoothen, SearchConfig,
};

type Check = fn() -> Result<(), String>;

fn optimum_of(sol: &LpSolution) -> Result<Rat, String> {
    match sol {
        LpSolution::Optimal { optimum, .. } => Ok(optimum.clone()),
        other => Err(format!("expected an optimum, got {other:?}")),
    }
}

// 1. The 8-variable minimum-value program reduces by domination to the
//    4-variable system and solves to exactly 4/3.
fn criterion_1() -> Result<(), String> {
    let full = lemma2_lp();
    let reduced = reduce_to_four_vars(&full).map_err(|e| e.to_string())?;
    if reduced.num_vars() != 4 {
        return Err(format!("reduced to {} variables, wanted 4", reduced.num_vars()));
    }
    let a = optimum_of(&solve_min(&full))?;
    let b = optimum_of(&solve_min(&reduced))?;
    if a != rat(4, 3) || b != rat(4, 3) {
        return Err(format!("optima {a} (full) and {b} (reduced), wanted 4/3"));
    }
    Ok(())
}

// 2. Dual multipliers (1, 2/5, 2/5) certify exactly 2/3 (p=2) and 86/75
//    (p=1); the optima respect the bounds; the known feasible point
//    (0, 4/9, 1/18, 1/6) shows the p=2 optimum is exactly 2/3.
fn criterion_2() -> Result<(), String> {
    let mult = vec![int(1), rat(2, 5), rat(2, 5)];
    for (p, bound) in [(2u32, rat(2, 3)), (1, rat(86, 75))] {
        let reduced = reduce_to_four_vars(&lemma4_lp(p)).map_err(|e| e.to_string())?;
        let cert = check_dual_certificate(&reduced, &mult).map_err(|e| e.to_string())?;
        if cert != bound {
            return Err(format!("p={p}: certificate bound {cert}, wanted {bound}"));
        }
        let opt = optimum_of(&solve_min(&reduced))?;
        if opt < bound {
            return Err(format!("p={p}: optimum {opt} below certified bound {bound}"));
        }
    }
    let reduced = reduce_to_four_vars(&lemma4_lp(2)).map_err(|e| e.to_string())?;
    let witness = vec![int(0), rat(4, 9), rat(1, 18), rat(1, 6)];
    if !reduced.is_feasible(&witness) || reduced.objective_at(&witness) != rat(2, 3) {
        return Err("p=2 witness (0, 4/9, 1/18, 1/6) does not attain 2/3".into());
    }
    Ok(())
}

// 3. The minimax of the three mixing quantities over the budget simplex is
//    exactly (50/353)k, attained by x = 2y, z = (53/100)y.
fn criterion_3() -> Result<(), String> {
    let rows = mixing_rows();
    for k in [1i64, 2, 100, 353] {
        let got = minimax_on_simplex(&rows, &int(k));
        let want = rat(50, 353) * int(k);
        if got != want {
            return Err(format!("budget {k}: minimax {got}, wanted {want}"));
        }
    }
    // the equalizer attains the optimum and exhausts the budget
    let k = int(353);
    let y = rat(100, 353) * &k;
    let x = int(2) * &y;
    let z = rat(53, 100) * &y;
    if x.clone() + &y + &z != k {
        return Err("equalizer does not exhaust the budget".into());
    }
    let e1 = rat(2, 3) * &z + rat(11, 75) * &y;
    let e2 = &x / int(4);
    let e3 = &y / int(2);
    if e1 != int(50) || e2 != int(50) || e3 != int(50) {
        return Err(format!("equalizer gives ({e1}, {e2}, {e3}), wanted all 50"));
    }
    Ok(())
}

// 4. The region-average identity holds exactly for k = 2..1000;
//    (5092/3177)/9 = 5092/28593; the k = 1 bound 33/20 clears 5092/3177.
fn criterion_4() -> Result<(), String> {
    for k in 2i64..=1000 {
        let lhs = (int(k) * (int(2) + rat(50, 353))
            + (int(2) * int(k) + int(2)) * rat(4, 3)
            + rat(2, 3))
            / (int(3) * int(k) + int(2));
        let rhs = rat(5092, 3177) + int(406) / (int(3177) * (int(3) * int(k) + int(2)));
        if lhs != rhs {
            return Err(format!("identity fails at k = {k}: {lhs} vs {rhs}"));
        }
    }
    if rat(5092, 3177) / int(9) != rat(5092, 28593) {
        return Err("(5092/3177)/9 != 5092/28593".into());
    }
    if rat(33, 20) < rat(5092, 3177) {
        return Err("33/20 < 5092/3177".into());
    }
    Ok(())
}

// 5. Exhaustive hemmed sweep: 2x2 totals <= 6 (all forms) and 3x3 totals
//    <= 7 (canonical forms). Every solvable distribution must, after
//    hemming, have pointwise value >= 4/3, a 2-reachable boundary, regions
//    with N <= 3k+2, frontier values >= 3/2, and the exact double-counting
//    chain sum v = sum P'(x) ef(x) <= 9|P'|.
fn criterion_5() -> Result<(), String> {
    let cases: Vec<(GridDims, u32, bool)> = vec![
        (GridDims::new(2, 2), 6, false),
        (GridDims::new(3, 3), 7, true),
    ];
    let mut checked = 0usize;
    for (dims, max_total, canonical_only) in cases {
        for total in 1..=max_total {
            let all: Vec<Distribution> = if canonical_only {
                canonical_distributions_of_total(dims, total).collect()
            } else {
                distributions_of_total(dims, total).collect()
            };
            for d in all {
                if !is_solvable(&d, MoveRule::CLASSIC) {
                    continue;
                }
                checked += 1;
                let ctx = || format!("{dims} counts {:?}", d.counts());
                let hemmed = hem(&d);
                let vm = ValueMap::compute(&hemmed);
                if vm.min() < &rat(4, 3) {
                    return Err(format!("{}: hemmed min value {} < 4/3", ctx(), vm.min()));
                }
                for b in dims.boundary() {
                    if !is_k_reachable(&hemmed, MoveRule::CLASSIC, b, 2) {
                        return Err(format!("{}: boundary {b} not 2-reachable", ctx()));
                    }
                }
                let partition = decompose(&hemmed).map_err(|e| format!("{}: {e}", ctx()))?;
                for (i, region) in partition.regions.iter().enumerate() {
                    if region.size() > 3 * region.k() + 2 {
                        return Err(format!("{}: region {i} exceeds 3k+2", ctx()));
                    }
                    for x in region_frontier(&partition, i) {
                        if value(&hemmed, x) < rat(3, 2) {
                            return Err(format!("{}: frontier value at {x} < 3/2", ctx()));
                        }
                    }
                }
                if !value_effect_identity_check(&hemmed) {
                    return Err(format!("{}: double-counting identity failed", ctx()));
                }
                let sum: Rat = dims.vertices().map(|x| value(&hemmed, x)).sum();
                let rhs: Rat = dims
                    .vertices()
                    .map(|x| int(hemmed.get(x) as i64) * effect(dims, x))
                    .sum();
                if sum != rhs || sum > int(9) * int(hemmed.total() as i64) {
                    return Err(format!("{}: value sum {sum} breaks the chain", ctx()));
                }
            }
        }
    }
    if checked == 0 {
        return Err("sweep found no solvable distributions".into());
    }
    Ok(())
}

// 6. Optimal pebbling numbers against the no-pruning oracle: paths up to
//    seven vertices, the 2x2 square, and arity 5 on 2x2 and 2x3.
fn criterion_6() -> Result<(), String> {
    // least total with a naively-solvable distribution, by brute force
    fn naive_pi(dims: GridDims, rule: MoveRule) -> u64 {
        for total in 1..=16u32 {
            if distributions_of_total(dims, total).any(|d| naive_is_solvable(&d, rule)) {
                return total as u64;
            }
        }
        panic!("no solvable distribution below the search bound");
    }

    let expected_paths = [2u64, 2, 3, 4, 4, 5]; // n = 2..7
    for (n, want) in (2usize..=7).zip(expected_paths) {
        let dims = GridDims::new(1, n);
        let (got, witness) =
            optimal_pebbling_number(dims, SearchConfig::classic()).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("pi(1x{n}) = {got}, wanted {want}"));
        }
        if naive_pi(dims, MoveRule::CLASSIC) != want {
            return Err(format!("oracle disagrees on pi(1x{n})"));
        }
        if !naive_is_solvable(&witness, MoveRule::CLASSIC) {
            return Err(format!("pi(1x{n}) witness rejected by the oracle"));
        }
    }

    let (sq, _) = optimal_pebbling_number(GridDims::new(2, 2), SearchConfig::classic())
        .map_err(|e| e.to_string())?;
    if sq != 3 || naive_pi(GridDims::new(2, 2), MoveRule::CLASSIC) != 3 {
        return Err(format!("pi(2x2) = {sq}, wanted 3"));
    }

    let rule5 = MoveRule::new(5).unwrap();
    for (dims, want) in [(GridDims::new(2, 2), 4u64), (GridDims::new(2, 3), 6)] {
        let (got, _) = optimal_pebbling_number(dims, SearchConfig::with_rule(rule5))
            .map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("pi_5({dims}) = {got}, wanted {want}"));
        }
        if naive_pi(dims, rule5) != want {
            return Err(format!("oracle disagrees on pi_5({dims})"));
        }
    }
    Ok(())
}

// 7. The three distribution procedures, exhaustively at 2x2 / 1x4 scale:
//    normalize keeps the total and solvability and empties the leftover set;
//    smoothen keeps solvability; the fully-occupied transform returns a
//    solvable fully-occupied distribution of no greater total.
fn criterion_7() -> Result<(), String> {
    let rule5 = MoveRule::new(5).unwrap();
    for dims in [GridDims::new(2, 2), GridDims::new(1, 4)] {
        for total in 1..=8u32 {
            for d in distributions_of_total(dims, total) {
                if !is_solvable(&d, MoveRule::CLASSIC) {
                    continue;
                }
                let ctx = || format!("{dims} counts {:?}", d.counts());
                let q = normalize(&d).map_err(|e| format!("{}: {e}", ctx()))?;
                if q.total() != d.total() || !is_solvable(&q, MoveRule::CLASSIC) {
                    return Err(format!("{}: normalize broke total or solvability", ctx()));
                }
                let p = decompose(&q).map_err(|e| format!("{}: {e}", ctx()))?;
                if !p.leftover.is_empty() {
                    return Err(format!("{}: leftover not emptied", ctx()));
                }
                for x in dims.vertices() {
                    if d.get(x) >= 3 {
                        let s = smoothen(&d, MoveRule::CLASSIC, x)
                            .map_err(|e| format!("{}: {e}", ctx()))?;
                        if !is_solvable(&s, MoveRule::CLASSIC) {
                            return Err(format!("{}: smoothen at {x} broke solvability", ctx()));
                        }
                    }
                }
            }
            for d in distributions_of_total(dims, total + 8) {
                if !is_solvable(&d, rule5) {
                    continue;
                }
                let q = flatten_to_occupied(&d, rule5)
                    .map_err(|e| format!("counts {:?}: {e}", d.counts()))?;
                if !q.is_fully_occupied() || q.total() > d.total() || !is_solvable(&q, rule5) {
                    return Err(format!(
                        "counts {:?}: bad fully-occupied transform output {:?}",
                        d.counts(),
                        q.counts()
                    ));
                }
            }
        }
    }
    Ok(())
}

// 8. The memoized, weight-pruned engine agrees with naive full enumeration
//    on every distribution of total <= 6 on 1x4 and 2x3.
fn criterion_8() -> Result<(), String> {
    for dims in [GridDims::new(1, 4), GridDims::new(2, 3)] {
        for total in 0..=6u32 {
            for d in distributions_of_total(dims, total) {
                let naive = naive_max_counts(&d, MoveRule::CLASSIC);
                for v in dims.vertices() {
                    let fast = reach_count(&d, MoveRule::CLASSIC, v);
                    let slow = naive[dims.index(v)];
                    if fast != slow {
                        return Err(format!(
                            "{dims} counts {:?} target {v}: engine {fast}, oracle {slow}",
                            d.counts()
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let checks: Vec<(&str, Check)> = vec![
        ("criterion 1 (minimum-value program = 4/3)", criterion_1),
        ("criterion 2 (extra-value certificates 2/3, 86/75)", criterion_2),
        ("criterion 3 (mixing minimax = 50/353 per unit)", criterion_3),
        ("criterion 4 (region-average identity and constants)", criterion_4),
        ("criterion 5 (hemmed sweep 2x2 and 3x3)", criterion_5),
        ("criterion 6 (optimal numbers vs no-pruning oracle)", criterion_6),
        ("criterion 7 (normalize / smoothen / fully-occupied)", criterion_7),
        ("criterion 8 (engine vs naive oracle equivalence)", criterion_8),
    ];
    let mut failures = Vec::new();
    let mut first_five_pass = true;
    for (i, (name, check)) in checks.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS {name}"),
            Err(msg) => {
                println!("FAIL {name}: {msg}");
                failures.push(format!("{name}: {msg}"));
                if i < 5 {
                    first_five_pass = false;
                }
            }
        }
    }
    // the asymptotic headline bound is out of reach at desk scale; it is
    // accepted through the exact constants and the per-instance certificate
    // chain established by the first five criteria
    if first_five_pass {
        println!("PASS criterion 9 (asymptotic bound accepted via criteria 1-5)");
    } else {
        println!("FAIL criterion 9 (asymptotic bound: a supporting criterion failed)");
        failures.push("criterion 9: a supporting criterion failed".into());
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
