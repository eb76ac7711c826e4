//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fibcube::bitstring::{count_by_weight, generate};
use fibcube::graph::{verify_isometric, CubeGraph};
use fibcube::hypercube::oracle_maximal;
use fibcube::maximal::{count_f, count_g, enumerate_maximal, enumerate_tops, nonzero_range};
use fibcube::poly::{expand_generating_function, poly_by_formula, poly_by_recurrence};
use fibcube::{Family, Polynomial};

type Check = Result<(), String>;
type Criterion = (&'static str, &'static str, fn() -> Check, Duration);

const GAMMA_TABLE: [&str; 7] = ["1", "x", "2x", "x^2+x", "3x^2", "x^3+3x^2", "4x^3+x^2"];
const LAMBDA_TABLE: [&str; 7] = ["1", "1", "2x", "3x", "2x^2", "5x^2", "2x^3+3x^2"];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `C(a, b)` from the factorial ratio in `u128`, independent of the library binomial.
fn binom_ratio(a: i64, b: i64) -> u128 {
    if a < 0 || b < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut r: u128 = 1;
    for i in 1..=b {
        r = r * (a - b + i) as u128 / i as u128;
    }
    r
}

fn golden_table() -> Check {
    for (family, table) in [
        (Family::Fibonacci, GAMMA_TABLE),
        (Family::Lucas, LAMBDA_TABLE),
    ] {
        let series = expand_generating_function::<u64>(6, family).map_err(|e| e.to_string())?;
        for (n, want) in table.iter().enumerate() {
            let want: Polynomial = want.parse().map_err(|e| format!("{e}"))?;
            let formula = poly_by_formula::<u64>(n, family).map_err(|e| e.to_string())?;
            let recurrence = poly_by_recurrence::<u64>(n, family).map_err(|e| e.to_string())?;
            for (method, got) in [
                ("formula", &formula),
                ("recurrence", &recurrence),
                ("series", series.row(n)),
            ] {
                ensure(got == &want, || {
                    format!("{family} n={n} {method}: got {got}, want {want}")
                })?;
            }
        }
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    for family in [Family::Fibonacci, Family::Lucas] {
        for n in 0..=12 {
            let oracle = oracle_maximal(n, family).map_err(|e| e.to_string())?;
            let direct = enumerate_maximal(n, family).map_err(|e| e.to_string())?;
            ensure(oracle == direct, || {
                format!(
                    "{family} n={n}: oracle has {} cubes, characterization {}",
                    oracle.len(),
                    direct.len()
                )
            })?;
        }
    }
    Ok(())
}

fn triple_agreement() -> Check {
    for family in [Family::Fibonacci, Family::Lucas] {
        let series = expand_generating_function::<u64>(20, family).map_err(|e| e.to_string())?;
        for n in 0..=20 {
            let f = poly_by_formula::<u64>(n, family).map_err(|e| e.to_string())?;
            let r = poly_by_recurrence::<u64>(n, family).map_err(|e| e.to_string())?;
            let s = series.row(n);
            ensure(f == r && &f == s, || {
                format!("{family} n={n}: formula {f}, recurrence {r}, series {s}")
            })?;
        }
    }
    Ok(())
}

fn closed_forms() -> Check {
    for n in 0..=20usize {
        for p in 0..=n {
            let f = count_f::<u64>(n, p);
            let (ni, pi) = (n as i64, p as i64);
            let tops = enumerate_tops(n, p, Family::Fibonacci).map_err(|e| e.to_string())?;
            ensure(
                u128::from(f) == binom_ratio(pi + 1, ni - 2 * pi + 1),
                || format!("f({n},{p}) = {f} disagrees with C(p+1, n-2p+1)"),
            )?;
            ensure(tops.len() as u64 == f, || {
                format!("f({n},{p}) = {f} but {} tops enumerated", tops.len())
            })?;
        }
    }
    for n in 1..=40usize {
        for p in 1..=n {
            let g = u128::from(count_g::<u64>(n, p));
            let rhs = n as u128 * binom_ratio(p as i64, n as i64 - 2 * p as i64);
            ensure(p as u128 * g == rhs, || {
                format!(
                    "p*g(n,p) = {} but n*C(p,n-2p) = {rhs} at ({n},{p})",
                    p as u128 * g
                )
            })?;
        }
    }
    Ok(())
}

fn pascal_steps() -> Check {
    for n in 3..=30usize {
        for p in 1..=n {
            let (lhs, rhs) = (
                count_f::<u64>(n, p),
                count_f::<u64>(n - 2, p - 1) + count_f::<u64>(n - 3, p - 1),
            );
            ensure(lhs == rhs, || format!("f({n},{p}) = {lhs} != {rhs}"))?;
        }
    }
    for n in 5..=30usize {
        for p in 1..=n {
            let (lhs, rhs) = (
                count_g::<u64>(n, p),
                count_g::<u64>(n - 2, p - 1) + count_g::<u64>(n - 3, p - 1),
            );
            ensure(lhs == rhs, || format!("g({n},{p}) = {lhs} != {rhs}"))?;
        }
    }
    Ok(())
}

fn ranges_and_degrees() -> Check {
    for n in 2..=40usize {
        let (f_lo, f_hi) = (n.div_ceil(3), n.div_ceil(2));
        let (g_lo, g_hi) = (n.div_ceil(3), n / 2);
        ensure(
            nonzero_range(n, Family::Fibonacci) == Ok((f_lo, f_hi)),
            || format!("fibonacci range at n={n}"),
        )?;
        ensure(nonzero_range(n, Family::Lucas) == Ok((g_lo, g_hi)), || {
            format!("lucas range at n={n}")
        })?;
        for p in 0..=n {
            let f_in = (f_lo..=f_hi).contains(&p);
            let g_in = (g_lo..=g_hi).contains(&p);
            ensure((count_f::<u64>(n, p) != 0) == f_in, || {
                format!("f({n},{p}) nonzero-ness disagrees with range")
            })?;
            ensure((count_g::<u64>(n, p) != 0) == g_in, || {
                format!("g({n},{p}) nonzero-ness disagrees with range")
            })?;
        }
    }
    for n in 0..=30usize {
        let deg = poly_by_formula::<u64>(n, Family::Fibonacci)
            .map_err(|e| e.to_string())?
            .degree();
        ensure(deg == Some(n.div_ceil(2)), || {
            format!("deg C'(Gamma_{n}) = {deg:?}, want {}", n.div_ceil(2))
        })?;
    }
    Ok(())
}

fn structural() -> Check {
    for family in [Family::Fibonacci, Family::Lucas] {
        for n in 0..=10 {
            ensure(
                verify_isometric(n, family).map_err(|e| e.to_string())?,
                || format!("{family} cube of order {n} is not isometric in Q_{n}"),
            )?;
        }
    }
    for n in 0..=16usize {
        let strings = generate(n, Family::Fibonacci).map_err(|e| e.to_string())?;
        for w in 0..=n {
            let counted = strings.iter().filter(|s| s.weight() == w).count() as u128;
            let closed = binom_ratio((n - w + 1) as i64, w as i64);
            let reported = count_by_weight(n, w, Family::Fibonacci).map_err(|e| e.to_string())?;
            ensure(counted == closed && u128::from(reported) == closed, || {
                format!("weight {w} at n={n}: counted {counted}, C(n-w+1,w) = {closed}")
            })?;
        }
    }
    for family in [Family::Fibonacci, Family::Lucas] {
        for n in 0..=14 {
            for s in generate(n, family).map_err(|e| e.to_string())? {
                let z = s.decompose_zero_blocks(family).map_err(|e| e.to_string())?;
                let o = s.decompose_one_blocks(family).map_err(|e| e.to_string())?;
                ensure(z.reconstruct() == Ok(s) && o.reconstruct() == Ok(s), || {
                    format!("{family} decomposition of {s} does not round-trip")
                })?;
                if family == Family::Lucas {
                    ensure(z.p() == 0 || z.end_zeros() >= 1, || {
                        format!("l_0 + l_p = 0 for Lucas string {s}")
                    })?;
                    ensure(o.end_ones() <= 1, || {
                        format!("k_0 + k_q > 1 for Lucas string {s}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn vertex_counts() -> Check {
    let expected = [
        (4, Family::Fibonacci, 8),
        (5, Family::Fibonacci, 13),
        (6, Family::Fibonacci, 21),
        (5, Family::Lucas, 11),
        (6, Family::Lucas, 18),
    ];
    for (n, family, count) in expected {
        let got = CubeGraph::build(n, family)
            .map_err(|e| e.to_string())?
            .vertex_count();
        ensure(got == count, || {
            format!("|V({family} {n})| = {got}, want {count}")
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "AC1",
            "golden polynomial table, n = 0..6",
            golden_table,
            Duration::from_secs(1),
        ),
        (
            "AC2",
            "oracle equivalence, n <= 12",
            oracle_equivalence,
            Duration::from_secs(60),
        ),
        (
            "AC3",
            "triple-method agreement, n <= 20",
            triple_agreement,
            Duration::from_secs(1),
        ),
        (
            "AC4",
            "closed-form identities",
            closed_forms,
            Duration::from_secs(1),
        ),
        (
            "AC5",
            "Pascal steps of the recurrences",
            pascal_steps,
            Duration::from_secs(1),
        ),
        (
            "AC6",
            "nonzero ranges and degrees",
            ranges_and_degrees,
            Duration::from_secs(1),
        ),
        (
            "AC7",
            "isometry, weights, decompositions",
            structural,
            Duration::from_secs(30),
        ),
        (
            "AC8",
            "vertex counts of the small drawings",
            vertex_counts,
            Duration::from_secs(1),
        ),
    ];
    let mut failures = 0;
    for (id, name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let outcome = match result {
            Ok(()) if elapsed <= limit => Ok(()),
            Ok(()) => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            Err(e) => Err(e),
        };
        match outcome {
            Ok(()) => println!("PASS {id} {name} ({elapsed:.2?})"),
            Err(e) => {
                failures += 1;
                println!("FAIL {id} {name} ({elapsed:.2?}): {e}");
            }
        }
    }
    if failures == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criteria failed");
        ExitCode::FAILURE
    }
}
