//! Output formats for the `poly` and `enumerate` commands.

use std::fmt::Write;

use serde::Serialize;

use fibcube::poly::PolyRecord;
use fibcube::{Family, InducedHypercube, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Formula,
    Recurrence,
    Series,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Formula, Method::Recurrence, Method::Series];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Recurrence => "recurrence",
            Method::Series => "series",
        }
    }
}

/// One polynomial per (method, n).
pub struct PolyTable {
    pub family: Family,
    pub methods: Vec<Method>,
    /// `(n, polynomials)` with one polynomial per entry of `methods`.
    pub rows: Vec<(usize, Vec<Polynomial>)>,
}

impl PolyTable {
    /// True when every row has the same polynomial under each method.
    pub fn agrees(&self) -> bool {
        self.rows
            .iter()
            .all(|(_, ps)| ps.windows(2).all(|w| w[0] == w[1]))
    }

    /// `n<TAB>poly`, or with several methods `n<TAB>method<TAB>poly<TAB>agree|DISAGREE`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (n, polys) in &self.rows {
            if self.methods.len() == 1 {
                writeln!(out, "{n}\t{}", polys[0]).unwrap();
                continue;
            }
            let status = if polys.windows(2).all(|w| w[0] == w[1]) {
                "agree"
            } else {
                "DISAGREE"
            };
            for (m, p) in self.methods.iter().zip(polys) {
                writeln!(out, "{n}\t{}\t{p}\t{status}", m.name()).unwrap();
            }
        }
        out
    }

    /// Header `n,family,p,count,source`; one line per coefficient up to the degree.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,family,p,count,source\n");
        for (n, polys) in &self.rows {
            for (m, poly) in self.methods.iter().zip(polys) {
                for (p, c) in poly.coeffs().iter().enumerate() {
                    writeln!(out, "{n},{},{p},{c},{}", self.family, m.name()).unwrap();
                }
            }
        }
        out
    }

    /// A list of `{"n", "coeffs"}` objects; with several methods, one list per
    /// method under its name.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct ByMethod {
            method: &'static str,
            rows: Vec<PolyRecord<u64>>,
        }
        let column = |j: usize| -> Vec<PolyRecord<u64>> {
            self.rows
                .iter()
                .map(|(n, ps)| PolyRecord::new(*n, &ps[j]))
                .collect()
        };
        let json = if self.methods.len() == 1 {
            serde_json::to_string_pretty(&column(0))
        } else {
            let all: Vec<ByMethod> = self
                .methods
                .iter()
                .enumerate()
                .map(|(j, m)| ByMethod {
                    method: m.name(),
                    rows: column(j),
                })
                .collect();
            serde_json::to_string_pretty(&all)
        };
        json.expect("serializing plain records") + "\n"
    }
}

pub fn cubes_json(cubes: &[InducedHypercube]) -> String {
    serde_json::to_string_pretty(cubes).expect("serializing plain records") + "\n"
}

/// Header `n,family,p,bottom,top,support`; support is space-separated, 1-based.
pub fn cubes_csv(n: usize, family: Family, cubes: &[InducedHypercube]) -> String {
    let mut out = String::from("n,family,p,bottom,top,support\n");
    for h in cubes {
        let support: Vec<String> = h.support().iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "{n},{family},{},{},{},{}",
            h.dimension(),
            h.bottom().csv_token(),
            h.top().csv_token(),
            support.join(" ")
        )
        .unwrap();
    }
    out
}
