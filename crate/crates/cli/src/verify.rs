//! Named verification suites. Each check prints one PASS/FAIL line; the
//! process exits nonzero if anything fails. The integration tests run the
//! same functions, so the command line and `cargo test` agree by
//! construction.

use crate::commands::VerifyArgs;
use crate::config::RunConfig;
use crate::error::CliError;
use chernloc::csm::{
    euler_characteristic, omega1_deepest, omega1_local, projective_cone_class, recover_raw_degree,
    scalar_cone_class, toric_quadric_oracle, ConeClassSpec, FkCache, Omega1Method, Omega1Result,
};
use chernloc::grass::{
    c1_power_template as c1_power, euler_class, gysin_schur, gysin_schur_poly,
    integrate_symmetric, residue_integral, tangent_weights, LocalClassTable,
};
use chernloc::poly::{coeff_int, parse_poly, sum_fractions, FractionTerm};
use chernloc::positivity::{change_basis, check_nonneg, is_positive_basis, TreeBasis};
use chernloc::symm::{
    expand_two_alphabets, hook_degree, monomial_symmetric, partitions_in_rectangle,
    schur_polynomial, SchurTable,
};
use chernloc::{Coeff, MultiPoly, Partition};
use std::path::Path;
use std::time::Instant;

pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn print(&self) {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let detail = if c.detail.is_empty() {
                String::new()
            } else {
                format!(" ({})", c.detail)
            };
            println!("[{status}] {}: {}{detail} [{:.2}s]", self.suite, c.name, c.seconds);
        }
    }
}

fn check(
    out: &mut Vec<CheckResult>,
    name: &str,
    f: impl FnOnce() -> Result<String, String>,
) {
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    out.push(CheckResult {
        name: name.to_string(),
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    });
}

pub const QUICK_SUITES: &[&str] = &[
    "localization",
    "hook",
    "gysin",
    "residue",
    "omega1-small",
    "schur-tables",
    "positivity",
    "cone",
    "determinism",
];

pub const HEAVY_SUITES: &[&str] = &["omega1-heavy"];

pub fn run(args: &VerifyArgs, config: &RunConfig) -> Result<(), CliError> {
    if args.list {
        for s in QUICK_SUITES {
            println!("{s}");
        }
        for s in HEAVY_SUITES {
            println!("{s} (gated; needs --allow-heavy)");
        }
        return Ok(());
    }
    let selected: Vec<String> = if args.suites.is_empty() {
        if args.all {
            QUICK_SUITES
                .iter()
                .chain(HEAVY_SUITES)
                .map(|s| s.to_string())
                .collect()
        } else {
            QUICK_SUITES.iter().map(|s| s.to_string()).collect()
        }
    } else {
        args.suites.clone()
    };
    let mut all_ok = true;
    for name in &selected {
        let report = run_suite(name, config)?;
        report.print();
        all_ok &= report.passed();
    }
    if all_ok {
        Ok(())
    } else {
        Err(CliError::Math("verification failures".into()))
    }
}

pub fn run_suite(name: &str, config: &RunConfig) -> Result<SuiteReport, CliError> {
    match name {
        "localization" => Ok(localization_suite()),
        "hook" => Ok(hook_suite()),
        "gysin" => Ok(gysin_suite()),
        "residue" => Ok(residue_suite()),
        "omega1-small" => Ok(omega1_small_suite()),
        "schur-tables" => Ok(schur_tables_suite()),
        "positivity" => Ok(positivity_suite()),
        "cone" => Ok(cone_suite()),
        "determinism" => {
            let exe = std::env::current_exe()
                .map_err(|e| CliError::Input(format!("cannot locate the binary: {e}")))?;
            Ok(determinism_suite(&exe))
        }
        "omega1-heavy" => {
            if !config.allow_heavy {
                return Err(CliError::Gate(
                    "omega1-heavy is gated; pass --allow-heavy".into(),
                ));
            }
            Ok(omega1_heavy_suite(config))
        }
        other => Err(CliError::Input(format!("unknown suite {other:?}"))),
    }
}

/// Projective-space identities: power sums collapse to 0 or 1, and the
/// higher powers match signed Schur rows from the bialternant.
pub fn localization_suite() -> SuiteReport {
    let mut checks = Vec::new();
    check(&mut checks, "power sums on projective spaces", || {
        for dim in 1..=5usize {
            let nv = dim + 1;
            for power in 0..=dim {
                let total = integrate_symmetric(&c1_power(1, power), 1, nv)
                    .map_err(|e| e.to_string())?;
                let expect_one = power == dim;
                if expect_one && !total.is_one() {
                    return Err(format!("dim {dim}, power {power}: got {total}, want 1"));
                }
                if !expect_one && !total.is_zero() {
                    return Err(format!("dim {dim}, power {power}: got {total}, want 0"));
                }
            }
        }
        Ok("dims 1..5, all powers".into())
    });
    check(&mut checks, "higher powers give signed Schur rows", || {
        for dim in 1..=4usize {
            let nv = dim + 1;
            for k in 0..=4usize {
                let total = integrate_symmetric(&c1_power(1, dim + k), 1, nv)
                    .map_err(|e| e.to_string())?;
                let vars: Vec<usize> = (0..nv).collect();
                let row = Partition::new(vec![k as u32]).map_err(|e| e.to_string())?;
                let s = schur_polynomial(&row, nv, &vars, false).map_err(|e| e.to_string())?;
                let expect = if k % 2 == 1 { s.neg() } else { s };
                if total != expect {
                    return Err(format!("dim {dim}, k {k}: {total} != {expect}"));
                }
            }
        }
        Ok("dims 1..4, k 0..4, bialternant compared".into())
    });
    SuiteReport {
        suite: "localization",
        checks,
    }
}

/// Volume integrals against the hook-length count.
pub fn hook_suite() -> SuiteReport {
    let mut checks = Vec::new();
    for (m, n, expect) in [(2usize, 4usize, 2i64), (2, 5, 5), (3, 7, 462)] {
        check(&mut checks, &format!("volume of Grass_{m}(C^{n})"), move || {
            let hook = hook_degree(m, n);
            if hook != expect.into() {
                return Err(format!("hook count {hook}, want {expect}"));
            }
            let dim = m * (n - m);
            let total =
                integrate_symmetric(&c1_power(m, dim), m, n).map_err(|e| e.to_string())?;
            let want = MultiPoly::constant_i64(n, expect);
            if total != want {
                return Err(format!("integral {total}, want {expect}"));
            }
            Ok(format!("integral = hook count = {expect}"))
        });
    }
    SuiteReport {
        suite: "hook",
        checks,
    }
}

/// Closed-form push-forwards against direct localization, every pair of
/// partitions up to total weight six.
pub fn gysin_suite() -> SuiteReport {
    let mut checks = Vec::new();
    for (m, n) in [(2usize, 4usize), (2, 5)] {
        check(&mut checks, &format!("Grass_{m}(C^{n}), |J|+|K| <= 6"), move || {
            let js = partitions_in_rectangle(n - m, 6);
            let ks = partitions_in_rectangle(m, 6);
            let mut tested = 0usize;
            for j in &js {
                for k in &ks {
                    if j.weight() + k.weight() > 6 {
                        continue;
                    }
                    let closed = gysin_schur(j, k, m, n)
                        .map_err(|e| e.to_string())?
                        .to_poly(n);
                    let direct = gysin_schur_poly(j, k, m, n).map_err(|e| e.to_string())?;
                    if closed != direct {
                        return Err(format!("J={j}, K={k}: {closed} != {direct}"));
                    }
                    tested += 1;
                }
            }
            Ok(format!("{tested} pairs"))
        });
    }
    SuiteReport {
        suite: "gysin",
        checks,
    }
}

/// Deterministic pseudo-random exponent partitions.
fn random_partitions(count: usize, max_len: usize, max_part: u32, seed: u64) -> Vec<Partition> {
    let mut state = seed;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 33) as u32
    };
    let mut out = Vec::new();
    while out.len() < count {
        let len = 1 + (next() as usize % max_len);
        let mut parts: Vec<u32> = (0..len).map(|_| 1 + next() % max_part).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        out.push(Partition::new(parts).expect("sorted"));
    }
    out
}

/// The residue evaluator against direct localization on random inputs.
pub fn residue_suite() -> SuiteReport {
    let mut checks = Vec::new();
    for (m, n, seed) in [(1usize, 3usize, 11u64), (2, 4, 23)] {
        check(&mut checks, &format!("Grass_{m}(C^{n}), 20 random monomials"), move || {
            for lambda in random_partitions(20, m, 4, seed) {
                let w = monomial_symmetric(m, &lambda).map_err(|e| e.to_string())?;
                let direct = integrate_symmetric(&w, m, n).map_err(|e| e.to_string())?;
                let res = residue_integral(&w, m, n).map_err(|e| e.to_string())?;
                if direct != res {
                    return Err(format!("lambda {lambda}: {direct} != {res}"));
                }
            }
            Ok("exact equality on all 20".into())
        });
    }
    SuiteReport {
        suite: "residue",
        checks,
    }
}

fn fresh_level(n: usize, method: Omega1Method) -> Result<Omega1Result, String> {
    let mut cache = FkCache::memory();
    omega1_local(n, method, &mut cache).map_err(|e| e.to_string())
}

/// Reference components of the level-2 class, as printed in the literature.
fn level_two_printed() -> (MultiPoly, MultiPoly, MultiPoly, MultiPoly) {
    let sigma = parse_poly("t3 + t4 - t1 - t2", 4).unwrap();
    let deg2 = &sigma * &sigma;
    let cross = parse_poly("2*t1*t2 - t1*t3 - t2*t3 - t1*t4 - t2*t4 + 2*t3*t4", 4).unwrap();
    let deg3 = &sigma * &cross;
    let e = euler_class(&omega1_deepest(2));
    (sigma, deg2, deg3, e)
}

/// Level 2 exact reproduction, the triple oracle, and the level-3 table
/// checks (method agreement, Euler characteristic, degreewise vanishing).
pub fn omega1_small_suite() -> SuiteReport {
    let mut checks = Vec::new();

    check(&mut checks, "level 2 printed components", || {
        let result = fresh_level(2, Omega1Method::Direct)?;
        let (d1, d2, d3, e) = level_two_printed();
        let f2 = &result.class;
        if f2.homogeneous_component(1) != d1 {
            return Err("degree 1 mismatch".into());
        }
        if f2.homogeneous_component(2) != d2 {
            return Err("degree 2 mismatch".into());
        }
        if f2.homogeneous_component(3) != d3 {
            return Err("degree 3 mismatch".into());
        }
        if f2.homogeneous_component(4) != e {
            return Err("top degree is not the Euler class".into());
        }
        Ok("degrees 1..4 match".into())
    });

    check(&mut checks, "raw top-degree sum is -4e", || {
        let mut cache = FkCache::memory();
        let f1 = omega1_local(1, Omega1Method::Direct, &mut cache)
            .map_err(|e| e.to_string())?
            .class;
        let mut f_table = std::collections::BTreeMap::new();
        f_table.insert(1, f1);
        let known =
            chernloc::csm::omega1_known_table(2, &f_table).map_err(|e| e.to_string())?;
        let raw = recover_raw_degree(&known, &omega1_deepest(2), 4).map_err(|e| e.to_string())?;
        let e = euler_class(&omega1_deepest(2));
        if raw != e.scale(&coeff_int(-4)) {
            return Err(format!("raw degree-4 sum is {raw}"));
        }
        Ok("anchoring is required at the top degree".into())
    });

    check(&mut checks, "triple oracle at level 2", || {
        let direct = fresh_level(2, Omega1Method::Direct)?;
        let gkm = fresh_level(2, Omega1Method::Gkm)?;
        let grouped = fresh_level(2, Omega1Method::Grouped)?;
        let oracle = toric_quadric_oracle();
        if direct.class != gkm.class || direct.table != gkm.table {
            return Err("congruence recovery disagrees with the direct sum".into());
        }
        if direct.class != grouped.class || direct.table != grouped.table {
            return Err("grouped recovery disagrees with the direct sum".into());
        }
        if direct.class != oracle {
            return Err("orbit-closure oracle disagrees".into());
        }
        Ok("direct = congruence = grouped = orbit oracle".into())
    });

    check(&mut checks, "level 3 fundamental class", || {
        let result = fresh_level(3, Omega1Method::Direct)?;
        let expect = parse_poly("t4 + t5 + t6 - t1 - t2 - t3", 6).unwrap();
        if result.class.homogeneous_component(1) != expect {
            return Err("degree-1 part mismatch".into());
        }
        Ok("degree 1 = t4+t5+t6-t1-t2-t3".into())
    });

    check(&mut checks, "level 3 method agreement", || {
        let direct = fresh_level(3, Omega1Method::Direct)?;
        let gkm = fresh_level(3, Omega1Method::Gkm)?;
        let grouped = fresh_level(3, Omega1Method::Grouped)?;
        if direct.table != gkm.table {
            return Err("congruence table differs".into());
        }
        if direct.table != grouped.table {
            return Err("grouped table differs".into());
        }
        Ok("all three methods give identical tables".into())
    });

    check(&mut checks, "level 3 Euler characteristic", || {
        let result = fresh_level(3, Omega1Method::Direct)?;
        let chi = euler_characteristic(&result.table).map_err(|e| e.to_string())?;
        if chi != Coeff::from_integer(19.into()) {
            return Err(format!("chi = {chi}, want 19"));
        }
        Ok("chi = 19 = fixed points on the variety".into())
    });

    check(&mut checks, "level 3 degreewise vanishing", || {
        let result = fresh_level(3, Omega1Method::Direct)?;
        verify_degreewise_vanishing(&result.table)
    });

    SuiteReport {
        suite: "omega1-small",
        checks,
    }
}

/// Below the ambient dimension, the sum of component slices over Euler
/// classes must vanish identically.
pub fn verify_degreewise_vanishing(table: &LocalClassTable) -> Result<String, String> {
    let dim = table.dim();
    for d in 0..dim {
        let mut terms = Vec::new();
        for (p, class) in table.iter() {
            let part = class.homogeneous_component(d);
            if !part.is_zero() {
                terms.push(FractionTerm::new(part, tangent_weights(p)));
            }
        }
        if terms.is_empty() {
            continue;
        }
        let total = sum_fractions(&terms, None).map_err(|e| e.to_string())?;
        if !total.is_zero() {
            return Err(format!("degree {d}: sum is {total}"));
        }
    }
    Ok(format!("all degrees below {dim} vanish"))
}

/// Printed reference coefficients of the level-2 class, including the one
/// entry the computation corrects.
fn printed_level_two_table() -> Vec<(&'static str, &'static str, i64)> {
    vec![
        ("", "1", 1),
        ("", "1,1", 1),
        ("", "2", 1),
        ("", "2,1", 2),
        ("", "2,2", 1),
        ("1", "", 1),
        ("1", "1", 1), // printed value; the computation forces 2
        ("1", "1,1", 3),
        ("1", "2", 1),
        ("1", "2,1", 1),
        ("1,1", "", 1),
        ("1,1", "1", 3),
        ("1,1", "2", 1),
        ("2", "", 1),
        ("2", "1", 1),
        ("2", "1,1", 1),
        ("2,1", "", 2),
        ("2,1", "1", 1),
        ("2,2", "", 1),
    ]
}

/// Printed reference row of the level-3 table for the empty first
/// partition, in its original column order.
fn printed_level_three_row() -> Vec<(&'static str, i64)> {
    vec![
        ("1", 1),
        ("1,1", 2),
        ("2", 2),
        ("1,1,1", 4),
        ("2,1", 5),
        ("3", 1),
        ("2,1,1", 9),
        ("3,1", 3),
        ("2,2", 4),
        ("3,1,1", 6),
        ("2,2,1", 9),
        ("3,2", 3),
        ("3,2,1", 8),
        ("2,2,2", 4),
        ("3,3", 1),
        ("3,3,1", 3),
        ("3,2,2", 6),
        ("3,3,2", 3),
        ("3,3,3", 1),
    ]
}

pub fn level_schur_table(n: usize, class: &MultiPoly) -> Result<SchurTable, String> {
    let xvars: Vec<usize> = (0..n).collect();
    let vvars: Vec<usize> = (n..2 * n).collect();
    expand_two_alphabets(class, 2 * n, &xvars, &vvars, true).map_err(|e| e.to_string())
}

/// Coefficient tables against the printed ones, reporting discrepancies
/// with the cross-method value as authoritative.
pub fn schur_tables_suite() -> SuiteReport {
    let mut checks = Vec::new();

    check(&mut checks, "level 2 coefficients vs printed table", || {
        let result = fresh_level(2, Omega1Method::Direct)?;
        let table = level_schur_table(2, &result.class)?;
        let printed = printed_level_two_table();
        if table.entries.len() != printed.len() {
            return Err(format!(
                "computed table has {} entries, printed has {}",
                table.entries.len(),
                printed.len()
            ));
        }
        let mut discrepancies = Vec::new();
        for (i, j, want) in &printed {
            let pi = Partition::parse(i).map_err(|e| e.to_string())?;
            let pj = Partition::parse(j).map_err(|e| e.to_string())?;
            let got = table.coefficient(&pi, &pj);
            if got != coeff_int(*want) {
                discrepancies.push(format!("a_({i}),({j}): computed {got}, printed {want}"));
            }
        }
        // Exactly one known erratum: the (1),(1) entry must be 2, forced by
        // the printed degree-2 component and the orbit oracle.
        let one = Partition::parse("1").map_err(|e| e.to_string())?;
        let forced = table.coefficient(&one, &one);
        if forced != coeff_int(2) {
            return Err(format!("a_(1),(1) = {forced}, expected the forced value 2"));
        }
        if discrepancies.len() != 1 || !discrepancies[0].starts_with("a_(1),(1)") {
            return Err(format!(
                "unexpected discrepancy set: {discrepancies:?}"
            ));
        }
        Ok(format!(
            "18/19 match; erratum confirmed: {} (printed 1 contradicts the printed degree-2 component)",
            discrepancies[0]
        ))
    });

    check(&mut checks, "level 3 empty-row coefficients vs printed row", || {
        let direct = fresh_level(3, Omega1Method::Direct)?;
        let gkm = fresh_level(3, Omega1Method::Gkm)?;
        if direct.class != gkm.class {
            return Err("methods disagree; no authoritative value".into());
        }
        let table = level_schur_table(3, &direct.class)?;
        let empty = Partition::empty();
        let mut mismatches = Vec::new();
        for (j, want) in printed_level_three_row() {
            let pj = Partition::parse(j).map_err(|e| e.to_string())?;
            let got = table.coefficient(&empty, &pj);
            if got != coeff_int(want) {
                mismatches.push(format!(
                    "a_(),({j}): computed {got} (authoritative, cross-method agreed), printed {want} - potential erratum"
                ));
            }
        }
        if mismatches.is_empty() {
            Ok("all 19 printed entries match the cross-method value".into())
        } else {
            // The computation is the authority; report, do not absorb.
            for m in &mismatches {
                println!("  [report] {m}");
            }
            Ok(format!("{} potential errata reported", mismatches.len()))
        }
    });

    SuiteReport {
        suite: "schur-tables",
        checks,
    }
}

/// The four reference spanning-tree bases for the level-2 class.
pub fn reference_tree_bases() -> Vec<(&'static str, &'static str, bool)> {
    vec![
        ("A", "1>2,2>4,4>3", true),
        ("B", "1>2,2>3,2>4", true),
        ("C", "1>4,2>4,4>3", true),
        ("D", "1>3,2>3,2>4", false),
    ]
}

pub fn positivity_suite() -> SuiteReport {
    let mut checks = Vec::new();
    check(&mut checks, "tree bases on the level-2 class", || {
        let result = fresh_level(2, Omega1Method::Direct)?;
        let weights = tangent_weights(&omega1_deepest(2));
        let mut details = Vec::new();
        for (name, syntax, expect_positive) in reference_tree_bases() {
            let tree = TreeBasis::parse(syntax, 4).map_err(|e| e.to_string())?;
            let positive = is_positive_basis(&tree, &weights).map_err(|e| e.to_string())?;
            if positive != expect_positive {
                return Err(format!(
                    "basis {name}: weight positivity {positive}, expected {expect_positive}"
                ));
            }
            let rewritten = change_basis(&result.class, &tree).map_err(|e| e.to_string())?;
            let report = check_nonneg(&rewritten);
            if report.nonnegative != expect_positive {
                return Err(format!(
                    "basis {name}: coefficient nonnegativity {}, expected {expect_positive}",
                    report.nonnegative
                ));
            }
            details.push(format!("{name}:{}", if positive { "+" } else { "-" }));
        }
        Ok(details.join(" "))
    });
    SuiteReport {
        suite: "positivity",
        checks,
    }
}

pub fn cone_suite() -> SuiteReport {
    let mut checks = Vec::new();
    check(&mut checks, "scalar cone over a genus-2 quartic", || {
        let a = vec![coeff_int(0), coeff_int(4), coeff_int(2 - 2 * 2)];
        let class = scalar_cone_class(&a);
        let expect = parse_poly("4*t1 - 2*t1^2 + t1^3", 1).unwrap();
        if class != expect {
            return Err(format!("got {class}"));
        }
        Ok("4t - 2t^2 + t^3, one negative coefficient".into())
    });
    check(&mut checks, "whole-space scalar cones", || {
        for n in 1..=5usize {
            let mut a = Vec::new();
            let mut c = 1i64;
            for i in 0..n {
                a.push(coeff_int(c));
                c = c * (n as i64 - i as i64) / (i as i64 + 1);
            }
            let class = scalar_cone_class(&a);
            let expect = parse_poly("1 + t1", 1).unwrap().pow(n);
            if class != expect {
                return Err(format!("n = {n}: got {class}"));
            }
        }
        Ok("(1+t)^n for n = 1..5".into())
    });
    check(&mut checks, "projective cone whole-space and point", || {
        let nv = 3;
        let weights: Vec<chernloc::LinearForm> = (1..=nv)
            .map(|i| chernloc::LinearForm::variable(nv, i))
            .collect();
        let mut total = MultiPoly::one(nv);
        let mut e0 = MultiPoly::one(nv);
        for w in &weights {
            total = &total * &w.one_plus(nv);
            e0 = &e0 * &w.to_poly(nv);
        }
        let spec = ConeClassSpec {
            weights: weights.clone(),
            b0: total.try_sub(&e0).unwrap(),
        };
        let whole = projective_cone_class(&spec).map_err(|e| e.to_string())?;
        if whole != total {
            return Err(format!("whole space: got {whole}"));
        }
        let spec = ConeClassSpec {
            weights,
            b0: MultiPoly::zero(nv),
        };
        let point = projective_cone_class(&spec).map_err(|e| e.to_string())?;
        if point != e0 {
            return Err(format!("origin: got {point}"));
        }
        Ok("both cases hold".into())
    });
    SuiteReport {
        suite: "cone",
        checks,
    }
}

fn read_artifacts(dir: &Path, n: usize) -> Result<Vec<(String, Vec<u8>)>, String> {
    let names = [
        format!("f_{n}.txt"),
        format!("table_{n}.json"),
        format!("schur_{n}.json"),
    ];
    let mut out = Vec::new();
    for name in names {
        let bytes = std::fs::read(dir.join(&name)).map_err(|e| format!("{name}: {e}"))?;
        out.push((name, bytes));
    }
    Ok(out)
}

fn run_omega1_subprocess(
    exe: &Path,
    n: usize,
    workers: usize,
    out: &Path,
    cache: &Path,
) -> Result<(), String> {
    let status = std::process::Command::new(exe)
        .args([
            "omega1",
            "--n",
            &n.to_string(),
            "--workers",
            &workers.to_string(),
            "--out",
        ])
        .arg(out)
        .arg("--cache-dir")
        .arg(cache)
        .stdout(std::process::Stdio::null())
        .status()
        .map_err(|e| format!("spawn: {e}"))?;
    if !status.success() {
        return Err(format!("subprocess exited with {status}"));
    }
    Ok(())
}

/// Byte-identical artifacts across worker counts and cache deletion.
pub fn determinism_suite(exe: &Path) -> SuiteReport {
    let mut checks = Vec::new();
    let exe = exe.to_path_buf();
    check(&mut checks, "level 3 artifacts across worker counts", || {
        let base = std::env::temp_dir().join(format!("chernloc-det-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&base);
        let d1 = base.join("w1");
        let d8 = base.join("w8");
        let c1 = base.join("cache1");
        let c8 = base.join("cache8");
        run_omega1_subprocess(&exe, 3, 1, &d1, &c1)?;
        run_omega1_subprocess(&exe, 3, 8, &d8, &c8)?;
        let a = read_artifacts(&d1, 3)?;
        let b = read_artifacts(&d8, 3)?;
        for ((name, x), (_, y)) in a.iter().zip(b.iter()) {
            if x != y {
                return Err(format!("{name} differs between 1 and 8 workers"));
            }
        }
        // Cache correctness: delete and re-run, artifacts unchanged.
        std::fs::remove_dir_all(&c1).map_err(|e| e.to_string())?;
        let d1b = base.join("w1-again");
        run_omega1_subprocess(&exe, 3, 1, &d1b, &c1)?;
        let c = read_artifacts(&d1b, 3)?;
        for ((name, x), (_, y)) in a.iter().zip(c.iter()) {
            if x != y {
                return Err(format!("{name} differs after cache deletion"));
            }
        }
        let _ = std::fs::remove_dir_all(&base);
        Ok("three artifacts byte-identical (1 vs 8 workers, cold vs warm cache)".into())
    });
    SuiteReport {
        suite: "determinism",
        checks,
    }
}

/// Gated level-4 run: grouped degreewise evaluation, the sign structure of
/// the coefficient tables, and a positive tree certificate.
pub fn omega1_heavy_suite(config: &RunConfig) -> SuiteReport {
    let mut checks = Vec::new();
    let cache_dir = config.cache_dir.clone();
    check(&mut checks, "level 4 grouped evaluation", || {
        let mut cache = match &cache_dir {
            Some(d) => FkCache::at_dir(d).map_err(|e| e.to_string())?,
            None => FkCache::memory(),
        };
        let start = Instant::now();
        let class = chernloc::csm::omega1_class_only(4, &mut cache).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        let f4 = &class;
        if f4.homogeneous_component(16) != euler_class(&omega1_deepest(4)) {
            return Err("top degree is not the Euler class".into());
        }
        let expect_deg1 = {
            let mut s = MultiPoly::zero(8);
            for i in 0..4 {
                s = &(&s + &MultiPoly::var(8, i + 4)) - &MultiPoly::var(8, i);
            }
            s
        };
        if f4.homogeneous_component(1) != expect_deg1 {
            return Err("degree-1 part mismatch".into());
        }

        // Monomial positivity in the half-negated characters.
        let mut negated = f4.clone();
        for i in 0..4 {
            let targets: Vec<chernloc::AffineForm> = (1..=8)
                .map(|v| {
                    let a = chernloc::AffineForm::variable(8, v);
                    if v == i + 1 {
                        chernloc::AffineForm {
                            coeffs: a.coeffs.iter().map(|c| -c.clone()).collect(),
                            constant: a.constant,
                        }
                    } else {
                        a
                    }
                })
                .collect();
            negated = negated.substitute(&targets, 8).map_err(|e| e.to_string())?;
        }
        if !negated.has_nonnegative_coefficients() {
            return Err("not monomial-positive in the half-negated characters".into());
        }

        // Schur pairs: at least one negative coefficient.
        let table = level_schur_table(4, f4)?;
        if !table.has_negative_entry() {
            return Err("expected a negative Schur-pair coefficient".into());
        }

        // A positive tree basis certifying nonnegative monomials.
        let weights = tangent_weights(&omega1_deepest(4));
        let candidates = [
            "1>2,2>3,3>4,4>5,4>6,4>7,4>8",
            "1>2,2>3,3>4,4>5,5>6,6>7,7>8",
            "1>4,2>4,3>4,4>5,4>6,4>7,4>8",
        ];
        let mut certified = None;
        for syntax in candidates {
            let tree = TreeBasis::parse(syntax, 8).map_err(|e| e.to_string())?;
            if !is_positive_basis(&tree, &weights).map_err(|e| e.to_string())? {
                continue;
            }
            let rewritten = change_basis(f4, &tree).map_err(|e| e.to_string())?;
            if check_nonneg(&rewritten).nonnegative {
                certified = Some(syntax);
                break;
            }
        }
        let Some(tree) = certified else {
            return Err("no candidate positive tree certified nonnegative coefficients".into());
        };
        Ok(format!(
            "completed in {:.0}s; Schur pairs contain negatives, tree {tree} certifies monomial nonnegativity",
            elapsed.as_secs_f64()
        ))
    });
    SuiteReport {
        suite: "omega1-heavy",
        checks,
    }
}
