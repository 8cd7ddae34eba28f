//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines always appear; exits nonzero if any required criterion fails.
//! Set BT_SKIP_STRETCH=1 to skip criterion 11 (reported as SKIPPED).

use std::time::{Duration, Instant};

use braidtower::grouptower::G1;
use braidtower::permcore::{a5, FiniteGroup, Perm};
use braidtower::reproduce::{Suite, SuiteReport};
use braidtower::spincover::{clifford_oracle_check, order_of_lift, product_sign, serre_formula};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn from_checks(report: &SuiteReport, prefixes: &[&str]) -> Outcome {
    let picked: Vec<_> = report.checks.iter().filter(|c| prefixes.iter().any(|p| c.citation.starts_with(p))).collect();
    if picked.is_empty() {
        return Err("no checks selected".into());
    }
    let failed: Vec<String> = picked.iter().filter(|c| !c.pass).map(|c| format!("{}: expected {}, got {} ({})", c.name, c.expected, c.computed, c.citation)).collect();
    if failed.is_empty() {
        Ok(format!("{} checks", picked.len()))
    } else {
        Err(failed.join("; "))
    }
}

fn within(out: Outcome, took: Duration, limit: Duration) -> Outcome {
    let s = out?;
    if took > limit {
        return Err(format!("{s} but took {took:.1?} > {limit:?}"));
    }
    Ok(format!("{s}, {took:.2?}"))
}

fn run(suite: Suite) -> (SuiteReport, Duration) {
    let t = Instant::now();
    let r = suite.run().unwrap_or_else(|e| panic!("suite {} aborted: {e}", suite.as_str()));
    (r, t.elapsed())
}

fn g1_certification() -> Outcome {
    let g1 = G1::build().map_err(|e| e.to_string())?;
    let c = g1.certify().map_err(|e| e.to_string())?;
    let got = (
        c.order,
        c.perfect,
        c.centerless,
        c.involutions,
        c.v_quotient_order,
        c.v_quotient_perfect,
        c.v_quotient_involutions,
        c.even_order_lifts_double,
        c.odd_order_half_preserve,
        c.frattini,
        c.dim_h2,
    );
    if got == (1920, true, true, 31, 120, true, 1, true, true, true, 1) {
        Ok("order 1920, perfect, centerless, 31 involutions, V-quotient 120 with one involution, Frattini kernel, dim H^2 = 1".into())
    } else {
        Err(format!("{got:?}"))
    }
}

fn involutions(n: usize, out: &mut Vec<Perm>) {
    fn rec(free: Vec<u32>, pairs: &mut Vec<[u32; 2]>, n: usize, out: &mut Vec<Perm>) {
        if !pairs.is_empty() && pairs.len().is_multiple_of(2) {
            let refs: Vec<&[u32]> = pairs.iter().map(|p| &p[..]).collect();
            out.push(Perm::from_cycles(n, &refs));
        }
        let floor = pairs.last().map_or(0, |p| p[0] + 1);
        for (i, &a) in free.iter().enumerate().filter(|&(_, &a)| a >= floor) {
            for &b in &free[i + 1..] {
                pairs.push([a, b]);
                rec(free.iter().copied().filter(|&x| x != a && x != b).collect(), pairs, n, out);
                pairs.pop();
            }
        }
    }
    rec((0..n as u32).collect(), &mut Vec::new(), n, out);
}

fn spin_engine() -> Outcome {
    for n in 2..=4 {
        let r = clifford_oracle_check(n, None).map_err(|e| e.to_string())?;
        if r.mismatches != 0 {
            return Err(format!("n = {n}: {} mismatches", r.mismatches));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [5, 6] {
        let mut pick = |k: usize| rng.gen_range(0..k);
        let r = clifford_oracle_check(n, Some((100_000, &mut pick))).map_err(|e| e.to_string())?;
        if r.mismatches != 0 {
            return Err(format!("n = {n}: {} mismatches in 10^5 pairs", r.mismatches));
        }
    }
    let mut count = 0;
    for n in 2..=10 {
        let mut inv = Vec::new();
        involutions(n, &mut inv);
        for p in &inv {
            let k = p.cycle_type().iter().filter(|&&c| c == 2).count();
            if order_of_lift(p).map_err(|e| e.to_string())? != if k % 4 == 0 { 2 } else { 4 } {
                return Err(format!("lift order rule fails on {p}"));
            }
        }
        count += inv.len();
    }
    let g = a5();
    let perms = g.perms().unwrap();
    let odd: Vec<u32> = (1..60).filter(|&x| g.elt_order(x) % 2 == 1).collect();
    let mut serre = 0;
    for r in 2..=4usize {
        let mut idx = vec![0usize; r - 1];
        loop {
            let head: Vec<u32> = idx.iter().map(|&i| odd[i]).collect();
            let last = g.inv(g.product(&head));
            if last != 0 && g.elt_order(last) % 2 == 1 {
                let t: Vec<Perm> = head.iter().chain([&last]).map(|&x| perms[x as usize].clone()).collect();
                let s = serre_formula(&t).map_err(|e| e.to_string())?;
                if s.applicable {
                    if s.sign != product_sign(&t).map_err(|e| e.to_string())? {
                        return Err(format!("Serre formula disagrees on {t:?}"));
                    }
                    serre += 1;
                }
            }
            let Some(k) = (0..r - 1).rev().find(|&k| idx[k] + 1 < odd.len()) else { break };
            idx[k] += 1;
            idx[k + 1..].iter_mut().for_each(|i| *i = 0);
        }
    }
    Ok(format!("oracle exact for n <= 4 and 2 x 10^5 random pairs; {count} involutions; {serre} genus-0 tuples"))
}

fn main() {
    let mut lines: Vec<(u32, bool, &str, String)> = Vec::new();
    let mut record = |n: u32, stretch: bool, title: &'static str, out: Outcome| {
        let (ok, detail) = match out {
            Ok(s) => (true, s),
            Err(s) => (false, s),
        };
        println!("criterion {n:>2} {} {title}{} ({detail})", if ok { "PASS" } else { "FAIL" }, if stretch { " [stretch]" } else { "" });
        lines.push((n, ok, title, detail));
    };

    let (l0, t0) = run(Suite::Level0);
    record(1, false, "level-0 counts", within(from_checks(&l0, &["level 0 census"]), t0, Duration::from_secs(1)));
    record(2, false, "level-0 j-line data", within(from_checks(&l0, &["level 0 j-line", "level 0 sh-incidence"]), t0, Duration::from_secs(5)));

    let t = Instant::now();
    let c3 = g1_certification();
    record(3, false, "G1 certification", within(c3, t.elapsed(), Duration::from_secs(60)));

    let t = Instant::now();
    let c4 = spin_engine();
    record(4, false, "spin engine", within(c4, t.elapsed(), Duration::from_secs(120)));

    let (l1, t1) = run(Suite::Level1);
    let census = ["G1 certification", "level 1 census", "level 1 H-M", "level 1 branch", "level 1 genera", "level 1 relative", "level 1 sh-incidence", "level 1 lifting"];
    record(5, false, "level-1 census", within(from_checks(&l1, &census), t1, Duration::from_secs(15 * 60)));
    record(6, false, "level-1 cusp fine structure", from_checks(&l1, &["level 1 width-2", "level 1 cusp types", "level 1 cusps with 3", "level 1 cusp ramification"]));
    let real0 = from_checks(&l0, &["level 0 real"]);
    let real1 = from_checks(&l1, &["level 1 real"]);
    record(7, false, "real loci", real0.and_then(|a| real1.map(|b| format!("level 0 {a}, level 1 {b}"))));

    let (ob, tob) = run(Suite::Obstruction);
    record(8, false, "obstruction suite", within(from_checks(&ob, &["obstruction"]), tob, Duration::from_secs(30)));
    let (dh, _) = run(Suite::Dihedral);
    record(9, false, "dihedral reference", from_checks(&dh, &["dihedral"]));
    let (tw, _) = run(Suite::Tower);
    record(10, false, "tower arithmetic (level-2 genus is 1 + 5 * 2^136 by the recursion, which 1 + 5 * 2^14 does not satisfy)", from_checks(&tw, &["tower"]));

    if std::env::var("BT_SKIP_STRETCH").is_ok_and(|v| v == "1") {
        println!("criterion 11 SKIPPED A4 tower [stretch] (BT_SKIP_STRETCH=1)");
    } else {
        let (a4, ta4) = run(Suite::A4Tower);
        record(11, true, "A4 tower", within(from_checks(&a4, &["A4 tower"]), ta4, Duration::from_secs(600)));
    }

    let failed: Vec<u32> = lines.iter().filter(|l| !l.1).map(|l| l.0).collect();
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
