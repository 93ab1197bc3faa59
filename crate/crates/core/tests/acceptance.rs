//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the report is always printed.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use admissible::affine::{affine_simple_roots, diagram_automorphisms, rho_hat};
use admissible::classification::{AdmissibleLevelContext, DufloJoseph};
use admissible::rational::{frac, int};
use admissible::{
    is_admissible_number, is_admissible_weight, isomorphic_integral_systems, simple_integral_roots, AffineWeight,
    ExtendedWeylElement, FiniteRootSystem, RealRoot, Q,
};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rs(t: &str) -> FiniteRootSystem {
    FiniteRootSystem::new(t.parse().unwrap()).unwrap()
}

/// `(p, q)` coprime with `p, q ≤ max` and the literal admissibility predicate.
fn admissible_pairs(rs: &FiniteRootSystem, p_max: i64, q_max: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for q in 1..=q_max {
        for p in 1..=p_max {
            if p.gcd(&q) != 1 {
                continue;
            }
            let required = if q.gcd(&rs.lacing_number()) == 1 {
                rs.dual_coxeter_number()
            } else {
                rs.coxeter_number()
            };
            if p >= required {
                out.push((p, q));
            }
        }
    }
    out
}

fn level(rs: &FiniteRootSystem, p: i64, q: i64) -> Q {
    frac(p, q) - int(rs.dual_coxeter_number())
}

fn ctx(rs: &FiniteRootSystem, p: i64, q: i64) -> AdmissibleLevelContext {
    AdmissibleLevelContext::new(rs.clone(), level(rs, p, q)).unwrap()
}

fn labels_of(rs: &FiniteRootSystem, weights: &[AffineWeight]) -> BTreeSet<Vec<Q>> {
    weights.iter().map(|w| w.labels(rs)).collect()
}

type Outcome = Result<String, String>;

fn criterion_1() -> Outcome {
    let a1 = rs("A1");
    let mut checked = 0;
    for p in 1..=12i64 {
        for q in 1..=12i64 {
            if p.gcd(&q) != 1 {
                continue;
            }
            let k = frac(p, q) - int(2);
            let cert = is_admissible_number(&a1, &k).map_err(|e| e.to_string())?;
            let literal = p >= 2;
            if cert.admissible != literal || cert.level.p != p || cert.level.q != q {
                return Err(format!("disagreement at p={p}, q={q}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} levels agree"))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for t in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4"] {
        let s = rs(t);
        for (p, q) in admissible_pairs(&s, 7, 7) {
            let k = level(&s, p, q);
            let sys = simple_integral_roots(&s, &AffineWeight::vacuum(&s, k)).map_err(|e| e.to_string())?;
            let r = s.lacing_number();
            let alpha0 = if q.gcd(&r) == 1 {
                RealRoot { root: s.negate(s.theta()), n: q }
            } else {
                RealRoot { root: s.negate(s.theta_short()), n: q / r }
            };
            let mut expected: BTreeSet<RealRoot> =
                s.simple_roots().iter().map(|&root| RealRoot { root, n: 0 }).collect();
            expected.insert(alpha0);
            let got: BTreeSet<RealRoot> = sys.simple_roots().iter().copied().collect();
            if got != expected || sys.simple_roots().len() != s.rank() + 1 {
                return Err(format!("{t} at p={p}, q={q}: got {got:?}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (type, level) pairs"))
}

/// Grid oracle for A1: scan `λ̄ = (a/q)ω₁` with `|a/q| ≤ 3p` and keep the
/// weights that are admissible with integral system isomorphic to the base.
fn a1_grid_oracle(a1: &FiniteRootSystem, p: i64, q: i64) -> BTreeSet<Vec<Q>> {
    let k = level(a1, p, q);
    let base = simple_integral_roots(a1, &AffineWeight::vacuum(a1, k.clone())).unwrap();
    let mut out = BTreeSet::new();
    for a in -3 * p * q..=3 * p * q {
        let lambda = AffineWeight::from_labels(a1, &[frac(a, q)], k.clone()).unwrap();
        let adm = is_admissible_weight(a1, &lambda).unwrap();
        if adm.is_admissible() && isomorphic_integral_systems(&adm.system, &base) {
            out.insert(vec![frac(a, q)]);
        }
    }
    out
}

fn criterion_3() -> Outcome {
    let a1 = rs("A1");
    let mut levels = 0;
    for (p, q) in admissible_pairs(&a1, 6, 5) {
        let c = ctx(&a1, p, q);
        let pr = labels_of(&a1, &c.pr_weights().map_err(|e| e.to_string())?);
        let oracle = a1_grid_oracle(&a1, p, q);
        if pr != oracle {
            return Err(format!("p={p}, q={q}: Pr has {} weights, oracle {}", pr.len(), oracle.len()));
        }
        if c.pr_plus().len() as i64 != p - 1 {
            return Err(format!("p={p}, q={q}: |Pr+| = {}", c.pr_plus().len()));
        }
        levels += 1;
    }
    Ok(format!("{levels} levels"))
}

fn criterion_4() -> Outcome {
    let a1 = rs("A1");
    let pairs = admissible_pairs(&a1, 6, 5);
    let mut members = 0;
    let mut contexts = Vec::new();
    for &(p, q) in &pairs {
        let c = ctx(&a1, p, q);
        for lambda in c.pr_weights().map_err(|e| e.to_string())? {
            if !c.is_module(&lambda).map_err(|e| e.to_string())?.is_module() {
                return Err(format!("p={p}, q={q}: member {:?} rejected", lambda.labels(&a1)));
            }
            members += 1;
        }
        contexts.push((p, q, c));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut rejected = 0;
    while rejected < 500 {
        let (p, q, c) = &contexts[rng.gen_range(0..contexts.len())];
        let den = rng.gen_range(1..=2 * q);
        let num = rng.gen_range(-4 * p * den..=4 * p * den);
        let lambda = AffineWeight::from_labels(&a1, &[frac(num, den)], c.k().clone()).unwrap();
        if c.pr_contains(&lambda).unwrap() {
            continue;
        }
        let verdict = c.is_module(&lambda).map_err(|e| e.to_string())?;
        if verdict.is_module() || verdict.failures.is_empty() || verdict.failures[0].check().is_empty() {
            return Err(format!("non-member {num}/{den} at p={p}, q={q} accepted"));
        }
        rejected += 1;
    }
    Ok(format!("{members} members accepted, {rejected} non-members rejected"))
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for t in ["A1", "A2", "B2", "G2"] {
        let s = rs(t);
        for (p, q) in admissible_pairs(&s, 5, 5) {
            let c = ctx(&s, p, q);
            for lambda in c.pr_weights().map_err(|e| e.to_string())? {
                let report = c.necessary_condition_battery(&lambda).map_err(|e| e.to_string())?;
                for (d, check) in report.reduction.iter().zip(&report.sl2) {
                    let expected = int(2) / s.form(s.simple_root(d.index), s.simple_root(d.index))
                        * (frac(p, q))
                        - int(2);
                    if d.level != expected {
                        return Err(format!("{t} p={p} q={q}: k_{} = {}", d.index + 1, d.level));
                    }
                    if !check.passed() {
                        return Err(format!(
                            "{t} p={p} q={q}: λ^({}) not admissible for {:?}",
                            d.index + 1,
                            lambda.labels(&s)
                        ));
                    }
                }
                if !report.passed() || !report.consistent() {
                    return Err(format!("{t} p={p} q={q}: battery failed for {:?}", lambda.labels(&s)));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} weights"))
}

fn words(generators: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut all = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for g in 0..generators {
                let mut v: Vec<usize> = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

fn criterion_6() -> Outcome {
    let mut applied = 0;
    let mut blocked = 0;
    for (t, levels) in [("A1", [(3, 2), (2, 3)]), ("A2", [(3, 2), (4, 3)])] {
        let s = rs(t);
        let gens: Vec<ExtendedWeylElement> = (0..=s.rank())
            .map(|i| ExtendedWeylElement::simple_reflection(&s, i).unwrap())
            .collect();
        let elements: Vec<ExtendedWeylElement> = words(gens.len(), 4)
            .iter()
            .map(|word| {
                word.iter()
                    .fold(ExtendedWeylElement::identity(&s), |acc, &g| acc.compose(&s, &gens[g]))
            })
            .collect();
        for (p, q) in levels {
            let c = ctx(&s, p, q);
            for lambda in c.pr_weights().map_err(|e| e.to_string())? {
                for w in &elements {
                    match c.duflo_joseph_move(&lambda, w) {
                        DufloJoseph::Applied(image) => {
                            if !c.pr_contains(&image).unwrap() {
                                return Err(format!(
                                    "{t} p={p} q={q}: {:?} moved outside Pr to {:?}",
                                    lambda.labels(&s),
                                    image.labels(&s)
                                ));
                            }
                            applied += 1;
                        }
                        DufloJoseph::Inapplicable { .. } => blocked += 1,
                    }
                }
            }
        }
    }
    Ok(format!("{applied} moves stayed in Pr, {blocked} inapplicable"))
}

fn criterion_7() -> Outcome {
    for t in ["A1", "A2"] {
        let s = rs(t);
        for k in 0..=3i64 {
            let c = AdmissibleLevelContext::new(s.clone(), int(k)).map_err(|e| e.to_string())?;
            let pr = labels_of(&s, &c.pr_weights().map_err(|e| e.to_string())?);
            let plus = labels_of(&s, c.pr_plus());
            // Level-k dominant integral weights: labels ≥ 0 summing to at most k.
            let oracle: BTreeSet<Vec<Q>> = if s.rank() == 1 {
                (0..=k).map(|a| vec![int(a)]).collect()
            } else {
                (0..=k)
                    .flat_map(|a| (0..=k - a).map(move |b| vec![int(a), int(b)]))
                    .collect()
            };
            if pr != oracle || plus != oracle {
                return Err(format!("{t} k={k}: |Pr| = {}, expected {}", pr.len(), oracle.len()));
            }
            if t == "A1" && pr.len() as i64 != k + 1 {
                return Err(format!("A1 k={k}: count {}", pr.len()));
            }
        }
    }
    Ok("A1 and A2, k = 0..3".to_string())
}

fn random_element(s: &FiniteRootSystem, rng: &mut ChaCha8Rng, twists: &[ExtendedWeylElement]) -> ExtendedWeylElement {
    let len = rng.gen_range(0..=6);
    let mut g = twists[rng.gen_range(0..twists.len())].clone();
    for _ in 0..len {
        let i = rng.gen_range(0..=s.rank());
        g = g.compose(s, &ExtendedWeylElement::simple_reflection(s, i).unwrap());
    }
    g
}

fn random_weight(s: &FiniteRootSystem, rng: &mut ChaCha8Rng) -> AffineWeight {
    let mut r = |lo: i64, hi: i64| frac(rng.gen_range(lo..=hi), rng.gen_range(1..=4));
    let labels: Vec<Q> = (0..s.rank()).map(|_| r(-8, 8)).collect();
    let level = r(-6, 6);
    let delta = r(-3, 3);
    let mut w = AffineWeight::from_labels(s, &labels, level).unwrap();
    w.delta = delta;
    w
}

fn random_root(s: &FiniteRootSystem, rng: &mut ChaCha8Rng) -> RealRoot {
    RealRoot { root: rng.gen_range(0..s.num_roots()), n: rng.gen_range(-5..=5) }
}

const RANK_LE_4: [&str; 13] = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"];

fn criterion_8() -> Outcome {
    let systems: Vec<FiniteRootSystem> = RANK_LE_4.iter().map(|t| rs(t)).collect();
    let twists: Vec<Vec<ExtendedWeylElement>> = systems.iter().map(diagram_automorphisms).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);

    for s in &systems {
        let rho = rho_hat(s);
        for b in affine_simple_roots(s) {
            if rho.pair(s, &b) != int(1) {
                return Err(format!("{}: <ρ̂, α∨> ≠ 1 for {}", s.lie_type(), b.display(s)));
            }
        }
    }

    for case in 0..1000 {
        let idx = case % systems.len();
        let s = &systems[idx];
        let g1 = random_element(s, &mut rng, &twists[idx]);
        let g2 = random_element(s, &mut rng, &twists[idx]);
        let lambda = random_weight(s, &mut rng);
        let lhs = g1.dot(s, &g2.dot(s, &lambda));
        let rhs = g1.compose(s, &g2).dot(s, &lambda);
        if lhs != rhs {
            return Err(format!("{}: dot group law fails (case {case})", s.lie_type()));
        }
    }

    for case in 0..1000 {
        let idx = case % systems.len();
        let s = &systems[idx];
        let g = random_element(s, &mut rng, &twists[idx]);
        let lambda = random_weight(s, &mut rng);
        let beta = random_root(s, &mut rng);
        let image = g.act_on_weight(s, &lambda);
        let moved = g.act_on_root(s, &beta);
        if image.pair(s, &moved) != lambda.pair(s, &beta) {
            return Err(format!("{}: pairing not preserved (case {case})", s.lie_type()));
        }
        if g.inverse(s).act_on_root(s, &moved) != beta {
            return Err(format!("{}: g⁻¹g ≠ 1 on roots (case {case})", s.lie_type()));
        }
    }

    for case in 0..1000 {
        let idx = case % systems.len();
        let s = &systems[idx];
        let g = random_element(s, &mut rng, &twists[idx]);
        let bound = g.inversion_search_bound(s);
        let mut closed: Vec<RealRoot> = g.inversion_set(s);
        let mut scanned = g.inversion_set_scan(s, bound);
        // Nothing beyond the certified bound.
        let wide = g.inversion_set_scan(s, 2 * bound + 2);
        closed.sort();
        scanned.sort();
        let mut wide = wide;
        wide.sort();
        if closed != scanned || scanned != wide || closed.len() != g.length(s) {
            return Err(format!("{}: inversion set mismatch (case {case})", s.lie_type()));
        }
    }
    Ok("3000 randomized cases, ρ̂ checked on 13 types".to_string())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 8] = [
        ("1 admissible-number criterion (A1, p,q <= 12)", criterion_1, Duration::from_secs(1)),
        ("2 base integral systems (9 types, p,q <= 7)", criterion_2, Duration::from_secs(30)),
        ("3 A1 Pr_k vs grid oracle (p <= 6, q <= 5)", criterion_3, Duration::from_secs(10)),
        ("4 membership oracle consistency", criterion_4, Duration::from_secs(30)),
        ("5 reduction battery (A1, A2, B2, G2, p,q <= 5)", criterion_5, Duration::from_secs(60)),
        ("6 Duflo-Joseph closure (A1, A2)", criterion_6, Duration::from_secs(60)),
        ("7 integer-level degeneration", criterion_7, Duration::from_secs(5)),
        ("8 group-law property suite", criterion_8, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) if elapsed <= budget => {
                println!("PASS criterion {name}: {detail} [{:.2}s]", elapsed.as_secs_f64())
            }
            Ok(detail) => {
                failed += 1;
                println!(
                    "FAIL criterion {name}: {detail}, but took {:.2}s (budget {}s)",
                    elapsed.as_secs_f64(),
                    budget.as_secs()
                )
            }
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} [{:.2}s]", elapsed.as_secs_f64())
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
