//! The `verify` command: runs every cross-check and collects a report.

use std::time::{Duration, Instant};

use serde::Serialize;

use fibcube::bitstring::{count_by_weight, generate};
use fibcube::graph::{verify_isometric, MAX_GRAPH_LEN};
use fibcube::hypercube::oracle_maximal_with_cap;
use fibcube::maximal::{self, enumerate_maximal, enumerate_tops, nonzero_range};
use fibcube::poly::{expand_generating_function, poly_by_recurrence};
use fibcube::{Family, Polynomial};

const FAMILIES: [Family; 2] = [Family::Fibonacci, Family::Lucas];

/// The two count functions under test. Swappable so a deliberately broken
/// formula can be fed through the whole pipeline.
#[derive(Clone, Copy)]
pub struct Formulas {
    pub f: fn(usize, usize) -> u64,
    pub g: fn(usize, usize) -> u64,
}

impl Default for Formulas {
    fn default() -> Self {
        Self {
            f: maximal::count_f::<u64>,
            g: maximal::count_g::<u64>,
        }
    }
}

impl Formulas {
    /// `f` off by one on its top dimension.
    pub fn corrupted() -> Self {
        fn bad_f(n: usize, p: usize) -> u64 {
            let good = maximal::count_f::<u64>(n, p);
            if n >= 3 && p == n.div_ceil(2) {
                good + 1
            } else {
                good
            }
        }
        Self {
            f: bad_f,
            ..Self::default()
        }
    }

    fn count(&self, family: Family, n: usize, p: usize) -> u64 {
        match family {
            Family::Lucas => (self.g)(n, p),
            _ => (self.f)(n, p),
        }
    }

    fn poly(&self, family: Family, n: usize) -> Polynomial {
        Polynomial::new((0..=n).map(|p| self.count(family, n, p)).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub parameters: String,
    pub status: Status,
    pub details: String,
    /// Kept out of the serialized report so output is stable across runs.
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    fn record(
        &mut self,
        name: &str,
        parameters: String,
        run: impl FnOnce() -> Result<String, String>,
    ) {
        let start = Instant::now();
        let outcome = run();
        let wall_time = start.elapsed();
        let (status, details) = match outcome {
            Ok(details) => (Status::Pass, details),
            Err(details) => (Status::Fail, details),
        };
        match status {
            Status::Pass => self.summary.passed += 1,
            Status::Fail => self.summary.failed += 1,
        }
        self.checks.push(CheckResult {
            name: name.to_string(),
            parameters,
            status,
            details,
            wall_time,
        });
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!(
                "{tag} {} [{}] {}\n",
                c.name, c.parameters, c.details
            ));
        }
        out.push_str(&format!(
            "{} passed, {} failed\n",
            self.summary.passed, self.summary.failed
        ));
        out
    }
}

fn fail_unless(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

const GOLDEN: [(Family, [&str; 7]); 2] = [
    (
        Family::Fibonacci,
        ["1", "x", "2x", "x^2+x", "3x^2", "x^3+3x^2", "4x^3+x^2"],
    ),
    (
        Family::Lucas,
        ["1", "1", "2x", "3x", "2x^2", "5x^2", "2x^3+3x^2"],
    ),
];

/// Runs every check. Brute-force checks go up to `oracle_max`, formula-level
/// checks up to `formula_max`; `oracle_cap` bounds the exhaustive search.
pub fn run(
    oracle_max: usize,
    formula_max: usize,
    oracle_cap: usize,
    formulas: Formulas,
) -> VerificationReport {
    let mut report = VerificationReport::default();
    let err = |e: fibcube::Error| e.to_string();

    report.record("golden-table", "n<=6".into(), || {
        for (family, table) in GOLDEN {
            for (n, want) in table.iter().enumerate() {
                let got = formulas.poly(family, n);
                fail_unless(got.to_string() == *want, || {
                    format!("{family} n={n}: formula gives {got}, expected {want}")
                })?;
            }
        }
        Ok("14 polynomials".into())
    });

    for family in FAMILIES {
        report.record(
            "oracle-equivalence",
            format!("family={family} n<={oracle_max}"),
            || {
                let mut cubes = 0;
                for n in 0..=oracle_max {
                    let oracle = oracle_maximal_with_cap(n, family, oracle_cap).map_err(err)?;
                    let direct = enumerate_maximal(n, family).map_err(err)?;
                    fail_unless(oracle == direct, || {
                        format!(
                            "n={n}: oracle {} cubes, characterization {}",
                            oracle.len(),
                            direct.len()
                        )
                    })?;
                    let by_formula = formulas.poly(family, n).eval_at_one();
                    fail_unless(by_formula == oracle.len() as u64, || {
                        format!(
                            "n={n}: formula counts {by_formula}, oracle {}",
                            oracle.len()
                        )
                    })?;
                    cubes += oracle.len();
                }
                Ok(format!("{cubes} cubes compared"))
            },
        );
    }

    for family in FAMILIES {
        report.record(
            "triple-agreement",
            format!("family={family} n<={formula_max}"),
            || {
                let series = expand_generating_function::<u64>(formula_max, family).map_err(err)?;
                for n in 0..=formula_max {
                    let f = formulas.poly(family, n);
                    let r = poly_by_recurrence::<u64>(n, family).map_err(err)?;
                    let s = series.row(n);
                    fail_unless(f == r && &f == s, || {
                        format!("n={n}: formula {f}, recurrence {r}, series {s}")
                    })?;
                }
                Ok(format!("{} rows", formula_max + 1))
            },
        );
    }

    for family in FAMILIES {
        report.record(
            "count-vs-tops",
            format!("family={family} n<={formula_max}"),
            || {
                for n in 0..=formula_max {
                    for p in 0..=n {
                        let tops = enumerate_tops(n, p, family).map_err(err)?.len() as u64;
                        let count = formulas.count(family, n, p);
                        fail_unless(tops == count, || {
                            format!("n={n} p={p}: {tops} tops, formula {count}")
                        })?;
                    }
                }
                Ok(String::new())
            },
        );
    }

    report.record(
        "lucas-integrality",
        format!("1<=p<=n<={formula_max}"),
        || {
            for n in 1..=formula_max {
                for p in 1..=n {
                    let lhs = p as u64 * (formulas.g)(n, p);
                    let rhs = n as u64
                        * fibcube::combinatorics::binomial_u64(p as i64, n as i64 - 2 * p as i64);
                    fail_unless(lhs == rhs, || {
                        format!("n={n} p={p}: p*g = {lhs}, n*C(p,n-2p) = {rhs}")
                    })?;
                }
            }
            Ok(String::new())
        },
    );

    report.record(
        "lucas-prefix-partition",
        format!("n<={}", formula_max.min(16)),
        || {
            for n in 2..=formula_max.min(16) {
                for p in 1..=n {
                    let tops = enumerate_tops(n, p, Family::Lucas).map_err(err)?;
                    let starts = |pre: &str| {
                        tops.iter()
                            .filter(|t| t.to_string().starts_with(pre))
                            .count() as u64
                    };
                    let c = |a: i64, b: i64| fibcube::combinatorics::binomial_u64(a, b);
                    let (ni, pi) = (n as i64, p as i64);
                    let want = [
                        c(pi, ni - 2 * pi),
                        c(pi, ni - 2 * pi),
                        c(pi - 1, ni - 2 * pi - 1),
                    ];
                    let got = [starts("1"), starts("01"), starts("001")];
                    fail_unless(
                        got == want && got.iter().sum::<u64>() == tops.len() as u64,
                        || format!("n={n} p={p}: prefix sizes {got:?}, expected {want:?}"),
                    )?;
                }
            }
            Ok(String::new())
        },
    );

    report.record("pascal-steps", format!("n<={formula_max}"), || {
        for family in FAMILIES {
            let start = if family == Family::Lucas { 5 } else { 3 };
            for n in start..=formula_max {
                for p in 1..=n {
                    let lhs = formulas.count(family, n, p);
                    let rhs =
                        formulas.count(family, n - 2, p - 1) + formulas.count(family, n - 3, p - 1);
                    fail_unless(lhs == rhs, || {
                        format!("{family} n={n} p={p}: {lhs} != {rhs}")
                    })?;
                }
            }
        }
        Ok(String::new())
    });

    report.record("nonzero-range", format!("2<=n<={formula_max}"), || {
        for family in FAMILIES {
            for n in 2..=formula_max {
                let (lo, hi) = nonzero_range(n, family).map_err(err)?;
                for p in 0..=n {
                    let nonzero = formulas.count(family, n, p) != 0;
                    fail_unless(nonzero == (lo..=hi).contains(&p), || {
                        format!(
                            "{family} n={n} p={p}: count nonzero = {nonzero}, range ({lo},{hi})"
                        )
                    })?;
                }
            }
        }
        Ok(String::new())
    });

    report.record("degree", format!("n<={formula_max}"), || {
        for n in 0..=formula_max {
            let deg = formulas.poly(Family::Fibonacci, n).degree();
            fail_unless(deg == Some(n.div_ceil(2)), || {
                format!("fibonacci n={n}: degree {deg:?}")
            })?;
            let deg = formulas.poly(Family::Lucas, n).degree().unwrap_or(0);
            fail_unless(deg <= n / 2, || format!("lucas n={n}: degree {deg}"))?;
        }
        Ok(String::new())
    });

    let graph_max = oracle_max.min(MAX_GRAPH_LEN);
    for family in FAMILIES {
        report.record(
            "isometry",
            format!("family={family} n<={graph_max}"),
            || {
                for n in 0..=graph_max {
                    fail_unless(verify_isometric(n, family).map_err(err)?, || {
                        format!("n={n} not isometric")
                    })?;
                }
                Ok(String::new())
            },
        );
    }

    report.record("weight-counts", format!("n<={oracle_max}"), || {
        for n in 0..=oracle_max {
            let strings = generate(n, Family::Fibonacci).map_err(err)?;
            for w in 0..=n {
                let counted = strings.iter().filter(|s| s.weight() == w).count() as u64;
                let closed = count_by_weight(n, w, Family::Fibonacci).map_err(err)?;
                fail_unless(counted == closed, || {
                    format!("n={n} w={w}: {counted} != {closed}")
                })?;
            }
        }
        Ok(String::new())
    });

    report.record("decompositions", format!("n<={oracle_max}"), || {
        let mut strings = 0;
        for family in FAMILIES {
            for n in 0..=oracle_max {
                for s in generate(n, family).map_err(err)? {
                    let z = s.decompose_zero_blocks(family).map_err(err)?;
                    let o = s.decompose_one_blocks(family).map_err(err)?;
                    fail_unless(z.reconstruct() == Ok(s) && o.reconstruct() == Ok(s), || {
                        format!("{family}: {s} does not round-trip")
                    })?;
                    if family == Family::Lucas {
                        fail_unless(
                            (z.p() == 0 || z.end_zeros() >= 1) && o.end_ones() <= 1,
                            || format!("lucas end constraint broken by {s}"),
                        )?;
                    }
                    strings += 1;
                }
            }
        }
        Ok(format!("{strings} strings"))
    });

    report.record("maximality", format!("n<={oracle_max}"), || {
        for family in FAMILIES {
            for n in 0..=oracle_max {
                for h in enumerate_maximal(n, family).map_err(err)? {
                    fail_unless(
                        h.is_induced_in(family) && h.extensions(family).is_empty(),
                        || format!("{family} n={n}: {h:?} is not maximal"),
                    )?;
                }
            }
        }
        Ok(String::new())
    });

    report
}
