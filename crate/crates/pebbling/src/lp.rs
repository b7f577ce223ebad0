//! Exact rational linear programming: minimize a linear objective over
//! non-negative variables subject to >=-inequalities.
//!
//! The solver is a dense two-phase simplex with Bland's rule, so every pivot
//! and every answer is exact and deterministic. The systems in this crate are
//! tiny; no attempt is made at large-scale performance.

use crate::rat::{fmt_rat, parse_rat, Rat};
use num::{One, Signed, Zero};
use std::fmt::Write as _;
use thiserror::Error;

/// One >=-constraint: `coeffs . x >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
}

/// Minimize `objective . x` subject to the constraints and `x >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    pub objective: Vec<Rat>,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpSolution {
    Optimal { optimum: Rat, witness: Vec<Rat> },
    Infeasible,
    Unbounded,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LpError {
    #[error("malformed program: {0}")]
    Malformed(String),
    #[error("domination precondition violated: {0}")]
    DominationViolated(String),
    #[error("invalid dual certificate: {0}")]
    BadCertificate(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl LinearProgram {
    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn validate(&self) -> Result<(), LpError> {
        if self.constraints.is_empty() {
            return Err(LpError::Malformed("no constraints".into()));
        }
        for c in &self.constraints {
            if c.coeffs.len() != self.num_vars() {
                return Err(LpError::Malformed(format!(
                    "constraint has {} coefficients, expected {}",
                    c.coeffs.len(),
                    self.num_vars()
                )));
            }
        }
        Ok(())
    }

    pub fn is_feasible(&self, x: &[Rat]) -> bool {
        x.len() == self.num_vars()
            && x.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| {
                let lhs: Rat = c.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
                lhs >= c.rhs
            })
    }

    pub fn objective_at(&self, x: &[Rat]) -> Rat {
        self.objective.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

struct Tableau {
    /// m rows over `ncols` columns plus a trailing rhs entry each.
    rows: Vec<Vec<Rat>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize, obj: &mut Vec<Rat>, obj_rhs: &mut Rat) {
        let p = self.rows[row][col].clone();
        debug_assert!(!p.is_zero());
        for entry in self.rows[row].iter_mut() {
            *entry /= &p;
        }
        for r in 0..self.rows.len() {
            if r == row {
                continue;
            }
            let f = self.rows[r][col].clone();
            if f.is_zero() {
                continue;
            }
            for c in 0..=self.ncols {
                let delta = &f * &self.rows[row][c];
                self.rows[r][c] -= delta;
            }
        }
        let f = obj[col].clone();
        if !f.is_zero() {
            for c in 0..self.ncols {
                let delta = &f * &self.rows[row][c];
                obj[c] -= delta;
            }
            *obj_rhs -= &f * &self.rows[row][self.ncols];
        }
        self.basis[row] = col;
    }

    /// Runs Bland-rule simplex for the given costs over columns
    /// `0..active_cols`. Returns false on unboundedness.
    fn optimize(&mut self, costs: &[Rat], active_cols: usize) -> bool {
        // reduced-cost row: c_j - c_B . column_j
        let mut obj: Vec<Rat> = (0..self.ncols)
            .map(|j| {
                let mut v = costs.get(j).cloned().unwrap_or_else(Rat::zero);
                for (i, row) in self.rows.iter().enumerate() {
                    let cb = costs.get(self.basis[i]).cloned().unwrap_or_else(Rat::zero);
                    v -= cb * &row[j];
                }
                v
            })
            .collect();
        let mut obj_rhs = Rat::zero();
        loop {
            // Bland: smallest-index column with a negative reduced cost
            let Some(enter) = (0..active_cols).find(|&j| obj[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<usize> = None;
            let mut best: Option<Rat> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][enter];
                if a.is_positive() {
                    let ratio = &self.rows[i][self.ncols] / a;
                    let better = match &best {
                        None => true,
                        Some(b) => {
                            ratio < *b
                                || (ratio == *b
                                    && self.basis[i] < self.basis[leave.unwrap()])
                        }
                    };
                    if better {
                        best = Some(ratio);
                        leave = Some(i);
                    }
                }
            }
            let Some(row) = leave else {
                return false; // unbounded
            };
            self.pivot(row, enter, &mut obj, &mut obj_rhs);
        }
    }
}

/// Solves the program exactly. Deterministic: repeated solves return
/// identical witnesses.
pub fn solve_min(lp: &LinearProgram) -> LpSolution {
    lp.validate().expect("well-formed program");
    let n = lp.num_vars();
    let m = lp.constraints.len();

    // columns: structural 0..n, surplus n..n+m, artificials appended
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut basis = vec![usize::MAX; m];
    let mut artificial_rows: Vec<usize> = Vec::new();
    for (i, c) in lp.constraints.iter().enumerate() {
        let negate = c.rhs.is_negative();
        let mut row = vec![Rat::zero(); n + m + 1];
        for j in 0..n {
            row[j] = if negate {
                -c.coeffs[j].clone()
            } else {
                c.coeffs[j].clone()
            };
        }
        // a.x - s = b; after negation the surplus enters with +1 and can be basic
        row[n + i] = if negate { Rat::one() } else { -Rat::one() };
        row[n + m] = if negate { -c.rhs.clone() } else { c.rhs.clone() };
        if negate {
            basis[i] = n + i;
        } else {
            artificial_rows.push(i);
        }
        rows.push(row);
    }

    let n_art = artificial_rows.len();
    let ncols = n + m + n_art;
    for row in rows.iter_mut() {
        let rhs = row.pop().expect("rhs present");
        row.extend(std::iter::repeat(Rat::zero()).take(n_art));
        row.push(rhs);
    }
    for (a, &i) in artificial_rows.iter().enumerate() {
        rows[i][n + m + a] = Rat::one();
        basis[i] = n + m + a;
    }

    let mut tab = Tableau { rows, basis, ncols };

    // phase 1: minimize the artificial total
    if n_art > 0 {
        let mut costs = vec![Rat::zero(); ncols];
        for j in n + m..ncols {
            costs[j] = Rat::one();
        }
        let bounded = tab.optimize(&costs, ncols);
        debug_assert!(bounded, "phase 1 is bounded below by zero");
        let infeasibility: Rat = (0..m)
            .filter(|&i| tab.basis[i] >= n + m)
            .map(|i| tab.rows[i][ncols].clone())
            .sum();
        if !infeasibility.is_zero() {
            return LpSolution::Infeasible;
        }
        // drive remaining artificials out of the basis; drop redundant rows
        let mut i = 0;
        while i < tab.rows.len() {
            if tab.basis[i] >= n + m {
                if let Some(j) = (0..n + m).find(|&j| !tab.rows[i][j].is_zero()) {
                    let mut dummy_obj = vec![Rat::zero(); tab.ncols];
                    let mut dummy_rhs = Rat::zero();
                    tab.pivot(i, j, &mut dummy_obj, &mut dummy_rhs);
                } else {
                    tab.rows.remove(i);
                    tab.basis.remove(i);
                    continue;
                }
            }
            i += 1;
        }
    }

    // phase 2: the real objective, artificial columns excluded
    let mut costs = vec![Rat::zero(); ncols];
    costs[..n].clone_from_slice(&lp.objective);
    if !tab.optimize(&costs, n + m) {
        return LpSolution::Unbounded;
    }

    let mut witness = vec![Rat::zero(); n];
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < n {
            witness[b] = tab.rows[i][tab.ncols].clone();
        }
    }
    let optimum = lp.objective_at(&witness);
    LpSolution::Optimal { optimum, witness }
}

/// Removes variable `drop` when `keep` dominates it: at least as large a
/// coefficient in every constraint and at most as large an objective
/// coefficient. The reduced program has the same optimum.
pub fn dominate_reduce(
    lp: &LinearProgram,
    keep: usize,
    drop: usize,
) -> Result<LinearProgram, LpError> {
    lp.validate()?;
    let n = lp.num_vars();
    if keep == drop {
        return Err(LpError::DominationViolated(
            "cannot merge a variable with itself".into(),
        ));
    }
    if keep >= n || drop >= n {
        return Err(LpError::Malformed("variable index out of range".into()));
    }
    if lp.objective[keep] > lp.objective[drop] {
        return Err(LpError::DominationViolated(format!(
            "objective coefficient of {keep} exceeds that of {drop}"
        )));
    }
    for (i, c) in lp.constraints.iter().enumerate() {
        if c.coeffs[keep] < c.coeffs[drop] {
            return Err(LpError::DominationViolated(format!(
                "constraint {i} has a smaller coefficient for {keep} than for {drop}"
            )));
        }
    }
    let strip = |v: &[Rat]| -> Vec<Rat> {
        v.iter()
            .enumerate()
            .filter(|&(j, _)| j != drop)
            .map(|(_, r)| r.clone())
            .collect()
    };
    Ok(LinearProgram {
        objective: strip(&lp.objective),
        constraints: lp
            .constraints
            .iter()
            .map(|c| Constraint {
                coeffs: strip(&c.coeffs),
                rhs: c.rhs.clone(),
            })
            .collect(),
    })
}

/// Checks a dual certificate: non-negative multipliers whose combination of
/// constraint rows is dominated coefficientwise by a scalar multiple of the
/// objective. Returns the implied lower bound on the optimum.
pub fn check_dual_certificate(lp: &LinearProgram, multipliers: &[Rat]) -> Result<Rat, LpError> {
    lp.validate()?;
    if multipliers.len() != lp.constraints.len() {
        return Err(LpError::BadCertificate(format!(
            "{} multipliers for {} constraints",
            multipliers.len(),
            lp.constraints.len()
        )));
    }
    if multipliers.iter().any(|m| m.is_negative()) {
        return Err(LpError::BadCertificate("negative multiplier".into()));
    }
    let n = lp.num_vars();
    let mut combined = vec![Rat::zero(); n];
    let mut combined_rhs = Rat::zero();
    for (lambda, c) in multipliers.iter().zip(&lp.constraints) {
        for j in 0..n {
            combined[j] += lambda * &c.coeffs[j];
        }
        combined_rhs += lambda * &c.rhs;
    }
    // smallest scale t > 0 with combined <= t * objective componentwise
    let mut scale: Option<Rat> = None;
    for j in 0..n {
        let (a, c) = (&combined[j], &lp.objective[j]);
        if c.is_positive() {
            let t = a / c;
            if scale.as_ref().is_none_or(|s| t > *s) {
                scale = Some(t);
            }
        } else if a.is_positive() {
            return Err(LpError::BadCertificate(format!(
                "combination has positive coefficient {} on variable {j} with non-positive objective",
                fmt_rat(a)
            )));
        }
    }
    match scale {
        Some(t) if t.is_positive() => {
            // non-positive objective entries must stay dominated at this scale
            for j in 0..n {
                if combined[j] > &t * &lp.objective[j] {
                    return Err(LpError::BadCertificate(format!(
                        "combination not dominated by {} times the objective at variable {j}",
                        fmt_rat(&t)
                    )));
                }
            }
            Ok(combined_rhs / t)
        }
        _ => {
            // combination is componentwise <= 0: vacuous unless it proves
            // infeasibility outright
            if combined_rhs.is_positive() {
                Err(LpError::BadCertificate(
                    "combination proves infeasibility, not a bound".into(),
                ))
            } else {
                Ok(Rat::zero())
            }
        }
    }
}

/// Exact min over `{(x,y,z) >= 0, x+y+z = budget}` of the max of the given
/// linear functionals, solved as an LP in (x, y, z, t).
pub fn minimax_on_simplex(rows: &[[Rat; 3]], budget: &Rat) -> Rat {
    assert!(!rows.is_empty());
    assert!(!budget.is_negative());
    let mut constraints: Vec<Constraint> = rows
        .iter()
        .map(|r| Constraint {
            coeffs: vec![-r[0].clone(), -r[1].clone(), -r[2].clone(), Rat::one()],
            rhs: Rat::zero(),
        })
        .collect();
    constraints.push(Constraint {
        coeffs: vec![Rat::one(), Rat::one(), Rat::one(), Rat::zero()],
        rhs: budget.clone(),
    });
    constraints.push(Constraint {
        coeffs: vec![-Rat::one(), -Rat::one(), -Rat::one(), Rat::zero()],
        rhs: -budget.clone(),
    });
    let lp = LinearProgram {
        objective: vec![Rat::zero(), Rat::zero(), Rat::zero(), Rat::one()],
        constraints,
    };
    match solve_min(&lp) {
        LpSolution::Optimal { optimum, .. } => optimum,
        other => panic!("minimax program must be solvable, got {other:?}"),
    }
}

/// Plain-text format: one objective line `min c1 c2 ...`, then one constraint
/// per line `a1 a2 ... >= rhs`, rationals as `p/q` or plain integers.
pub fn format_lp(lp: &LinearProgram) -> String {
    let mut out = String::from("min");
    for c in &lp.objective {
        let _ = write!(out, " {}", fmt_rat(c));
    }
    out.push('\n');
    for c in &lp.constraints {
        let mut first = true;
        for a in &c.coeffs {
            if !first {
                out.push(' ');
            }
            let _ = write!(out, "{}", fmt_rat(a));
            first = false;
        }
        let _ = writeln!(out, " >= {}", fmt_rat(&c.rhs));
    }
    out
}

pub fn parse_lp(text: &str) -> Result<LinearProgram, LpError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| LpError::Parse("empty program".into()))?;
    let header = header.trim();
    let rest = header
        .strip_prefix("min")
        .ok_or_else(|| LpError::Parse("objective line must start with `min`".into()))?;
    let objective: Vec<Rat> = rest
        .split_whitespace()
        .map(|tok| parse_rat(tok).map_err(|e| LpError::Parse(e.to_string())))
        .collect::<Result<_, _>>()?;
    let mut constraints = Vec::new();
    for line in lines {
        let (lhs, rhs) = line
            .split_once(">=")
            .ok_or_else(|| LpError::Parse(format!("constraint `{line}` missing `>=`")))?;
        let coeffs: Vec<Rat> = lhs
            .split_whitespace()
            .map(|tok| parse_rat(tok).map_err(|e| LpError::Parse(e.to_string())))
            .collect::<Result<_, _>>()?;
        let rhs = parse_rat(rhs.trim()).map_err(|e| LpError::Parse(e.to_string()))?;
        constraints.push(Constraint { coeffs, rhs });
    }
    let lp = LinearProgram {
        objective,
        constraints,
    };
    lp.validate()?;
    Ok(lp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};
    use proptest::prelude::*;

    fn lp(obj: &[(i64, i64)], cons: &[(&[(i64, i64)], (i64, i64))]) -> LinearProgram {
        LinearProgram {
            objective: obj.iter().map(|&(p, q)| rat(p, q)).collect(),
            constraints: cons
                .iter()
                .map(|(coeffs, rhs)| Constraint {
                    coeffs: coeffs.iter().map(|&(p, q)| rat(p, q)).collect(),
                    rhs: rat(rhs.0, rhs.1),
                })
                .collect(),
        }
    }

    #[test]
    fn one_variable_min() {
        let p = lp(&[(1, 1)], &[(&[(1, 1)], (5, 1))]);
        assert_eq!(
            solve_min(&p),
            LpSolution::Optimal {
                optimum: int(5),
                witness: vec![int(5)]
            }
        );
    }

    #[test]
    fn two_variable_mixing_program() {
        // min S1+S2 s.t. 2 S1 + S2/2 >= 2, -S1/2 + S2 >= 0
        let p = lp(
            &[(1, 1), (1, 1)],
            &[
                (&[(2, 1), (1, 2)], (2, 1)),
                (&[(-1, 2), (1, 1)], (0, 1)),
            ],
        );
        let LpSolution::Optimal { optimum, witness } = solve_min(&p) else {
            panic!("expected optimal");
        };
        assert_eq!(optimum, rat(4, 3));
        assert_eq!(witness, vec![rat(8, 9), rat(4, 9)]);
    }

    #[test]
    fn infeasible_program() {
        // x >= 1 and -x >= 0 cannot hold with x >= 0... -x >= 1 makes it clean
        let p = lp(&[(1, 1)], &[(&[(-1, 1)], (1, 1))]);
        assert_eq!(solve_min(&p), LpSolution::Infeasible);
    }

    #[test]
    fn unbounded_program() {
        // min -x s.t. x >= 0 (as a constraint row): unbounded below
        let p = lp(&[(-1, 1)], &[(&[(1, 1)], (0, 1))]);
        assert_eq!(solve_min(&p), LpSolution::Unbounded);
    }

    #[test]
    fn solve_is_deterministic() {
        let p = lp(
            &[(1, 1), (1, 1), (1, 1), (1, 1)],
            &[
                (&[(2, 1), (2, 1), (1, 2), (1, 2)], (1, 1)),
                (&[(1, 4), (1, 1), (4, 1), (1, 1)], (5, 6)),
                (&[(1, 1), (1, 4), (1, 1), (4, 1)], (5, 6)),
            ],
        );
        let first = solve_min(&p);
        for _ in 0..5 {
            assert_eq!(solve_min(&p), first);
        }
    }

    #[test]
    fn dominate_reduce_errors() {
        let p = lp(&[(1, 1), (1, 1)], &[(&[(2, 1), (1, 1)], (1, 1))]);
        assert!(matches!(
            dominate_reduce(&p, 0, 0),
            Err(LpError::DominationViolated(_))
        ));
        // keep=1 has smaller constraint coefficient than drop=0
        assert!(matches!(
            dominate_reduce(&p, 1, 0),
            Err(LpError::DominationViolated(_))
        ));
        // keep=0 dominates drop=1
        let reduced = dominate_reduce(&p, 0, 1).unwrap();
        assert_eq!(reduced.num_vars(), 1);
        let (LpSolution::Optimal { optimum: a, .. }, LpSolution::Optimal { optimum: b, .. }) =
            (solve_min(&reduced), solve_min(&p))
        else {
            panic!("both programs should be solvable");
        };
        assert_eq!(a, b);
    }

    #[test]
    fn zero_multipliers_give_vacuous_bound() {
        let p = lp(&[(1, 1)], &[(&[(1, 1)], (5, 1))]);
        assert_eq!(
            check_dual_certificate(&p, &[Rat::zero()]).unwrap(),
            Rat::zero()
        );
    }

    #[test]
    fn certificate_bound_respects_weak_duality() {
        let p = lp(
            &[(1, 1), (1, 1)],
            &[
                (&[(2, 1), (1, 2)], (2, 1)),
                (&[(-1, 2), (1, 1)], (0, 1)),
            ],
        );
        let LpSolution::Optimal { optimum, .. } = solve_min(&p) else {
            panic!();
        };
        for ms in [
            [rat(1, 2), rat(1, 3)],
            [rat(1, 1), rat(0, 1)],
            [rat(2, 5), rat(2, 5)],
        ] {
            if let Ok(bound) = check_dual_certificate(&p, &ms) {
                assert!(bound <= optimum);
            }
        }
    }

    #[test]
    fn minimax_examples() {
        // e1 = (2/3)z + (11/75)y, e2 = x/4, e3 = y/2
        let rows = [
            [rat(0, 1), rat(11, 75), rat(2, 3)],
            [rat(1, 4), rat(0, 1), rat(0, 1)],
            [rat(0, 1), rat(1, 2), rat(0, 1)],
        ];
        assert_eq!(minimax_on_simplex(&rows, &int(353)), int(50));
        assert_eq!(minimax_on_simplex(&rows, &int(0)), int(0));
        assert_eq!(minimax_on_simplex(&rows, &int(1)), rat(50, 353));
    }

    #[test]
    fn text_format_round_trip() {
        let p = lp(
            &[(1, 1), (1, 1)],
            &[
                (&[(2, 1), (1, 2)], (2, 1)),
                (&[(-1, 2), (1, 1)], (0, 1)),
            ],
        );
        let text = format_lp(&p);
        assert_eq!(parse_lp(&text).unwrap(), p);
        assert!(parse_lp("max 1 1\n1 1 >= 0").is_err());
        assert!(parse_lp("").is_err());
        assert!(parse_lp("min 1\n2 = 3").is_err());
    }

    // ---- independent vertex-enumeration oracle -----------------------------

    /// Solves a square rational system by Gaussian elimination; None when
    /// singular.
    fn solve_square(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
        let n = b.len();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            b.swap(col, pivot);
            let p = a[col][col].clone();
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = &a[r][col] / &p;
                if f.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let delta = &f * &a[col][c];
                    a[r][c] -= delta;
                }
                let delta = &f * &b[col];
                b[r] -= delta;
            }
        }
        Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
    }

    /// Brute-force LP oracle for programs with strictly positive objectives
    /// (hence bounded): enumerate all vertices of the feasible polyhedron by
    /// intersecting n of the constraints (including non-negativity), keep the
    /// feasible ones, take the minimum objective.
    fn oracle_min(p: &LinearProgram) -> Option<Rat> {
        let n = p.num_vars();
        // rows: every constraint, then x_j >= 0 per variable
        let mut rows: Vec<(Vec<Rat>, Rat)> = p
            .constraints
            .iter()
            .map(|c| (c.coeffs.clone(), c.rhs.clone()))
            .collect();
        for j in 0..n {
            let mut r = vec![Rat::zero(); n];
            r[j] = Rat::one();
            rows.push((r, Rat::zero()));
        }
        let idx: Vec<usize> = (0..rows.len()).collect();
        let mut best: Option<Rat> = None;
        for combo in combinations(&idx, n) {
            let a: Vec<Vec<Rat>> = combo.iter().map(|&i| rows[i].0.clone()).collect();
            let b: Vec<Rat> = combo.iter().map(|&i| rows[i].1.clone()).collect();
            if let Some(x) = solve_square(a, b) {
                if p.is_feasible(&x) {
                    let val = p.objective_at(&x);
                    if best.as_ref().is_none_or(|b| val < *b) {
                        best = Some(val);
                    }
                }
            }
        }
        best
    }

    fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if items.len() < k {
            return vec![];
        }
        let mut out = combinations(&items[1..], k - 1)
            .into_iter()
            .map(|mut c| {
                c.insert(0, items[0]);
                c
            })
            .collect::<Vec<_>>();
        out.extend(combinations(&items[1..], k));
        out
    }

    fn arb_small_rat() -> impl Strategy<Value = Rat> {
        (-4i64..5, 1i64..4).prop_map(|(p, q)| rat(p, q))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn simplex_matches_vertex_enumeration(
            n in 1usize..4,
            m in 1usize..4,
            seed_obj in prop::collection::vec((1i64..5, 1i64..4), 3),
            seed_cons in prop::collection::vec(prop::collection::vec((-4i64..5, 1i64..4), 3), 3),
            seed_rhs in prop::collection::vec((-3i64..4, 1i64..3), 3),
        ) {
            // strictly positive objective keeps the program bounded below
            let p = LinearProgram {
                objective: seed_obj[..n].iter().map(|&(a, b)| rat(a, b)).collect(),
                constraints: (0..m)
                    .map(|i| Constraint {
                        coeffs: seed_cons[i][..n].iter().map(|&(a, b)| rat(a, b)).collect(),
                        rhs: rat(seed_rhs[i].0, seed_rhs[i].1),
                    })
                    .collect(),
            };
            match solve_min(&p) {
                LpSolution::Optimal { optimum, witness } => {
                    prop_assert!(p.is_feasible(&witness));
                    prop_assert_eq!(p.objective_at(&witness), optimum.clone());
                    prop_assert_eq!(oracle_min(&p), Some(optimum));
                }
                LpSolution::Infeasible => prop_assert_eq!(oracle_min(&p), None),
                LpSolution::Unbounded => prop_assert!(false, "positive objective cannot be unbounded"),
            }
        }

        #[test]
        fn dominate_reduce_preserves_optimum(
            n in 2usize..4,
            m in 1usize..4,
            seed_obj in prop::collection::vec(arb_small_rat(), 3),
            seed_cons in prop::collection::vec(prop::collection::vec(arb_small_rat(), 3), 3),
            seed_rhs in prop::collection::vec(arb_small_rat(), 3),
        ) {
            let mut objective: Vec<Rat> = seed_obj[..n].to_vec();
            let mut constraints: Vec<Constraint> = (0..m)
                .map(|i| Constraint { coeffs: seed_cons[i][..n].to_vec(), rhs: seed_rhs[i].clone() })
                .collect();
            // force objective positive and variable 0 to dominate variable 1
            for c in objective.iter_mut() {
                *c = c.abs() + int(1);
            }
            objective[0] = objective[1].clone();
            for c in constraints.iter_mut() {
                if c.coeffs[0] < c.coeffs[1] {
                    c.coeffs.swap(0, 1);
                }
            }
            let p = LinearProgram { objective, constraints };
            let reduced = dominate_reduce(&p, 0, 1).unwrap();
            prop_assert_eq!(opt_value(solve_min(&p)), opt_value(solve_min(&reduced)));
        }
    }

    fn opt_value(s: LpSolution) -> Option<Rat> {
        match s {
            LpSolution::Optimal { optimum, .. } => Some(optimum),
            _ => None,
        }
    }
}
