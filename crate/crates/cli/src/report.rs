//! Report assembly and rendering. Identical inputs produce byte-identical
//! reports in both formats: every container is ordered and every number is
//! an exact rational rendered the same way each time.

use serde::Serialize;
use serde_json::{json, Value};

use chiclass::classes::HomologyClass;
use chiclass::ypoly::YPoly;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

pub struct Report {
    pub command: &'static str,
    /// Canonical echo of the parsed payload.
    pub input: Value,
    /// Human lines for the table format.
    pub lines: Vec<String>,
    /// Structured result for the json format.
    pub result: Value,
    pub verdict: Option<Verdict>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, input: Value) -> Self {
        Report {
            command,
            input,
            lines: Vec::new(),
            result: Value::Null,
            verdict: None,
            notes: Vec::new(),
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Some(Verdict::Fail) => 1,
            _ => 0,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => {
                let mut out = String::new();
                for l in &self.lines {
                    out.push_str(l);
                    out.push('\n');
                }
                for n in &self.notes {
                    out.push_str(&format!("note: {n}\n"));
                }
                if let Some(v) = self.verdict {
                    out.push_str(match v {
                        Verdict::Pass => "verdict: PASS\n",
                        Verdict::Fail => "verdict: FAIL\n",
                    });
                }
                out
            }
            Format::Json => {
                let doc = json!({
                    "command": self.command,
                    "input": self.input,
                    "result": self.result,
                    "verdict": self.verdict,
                    "notes": self.notes,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("serializable report");
                s.push('\n');
                s
            }
        }
    }
}

/// Polynomial as both display string and coefficient list.
pub fn poly_json(p: &YPoly) -> Value {
    json!({
        "poly": p.to_string(),
        "coeffs": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

/// Class parts listed by descending homology degree; coefficients must have
/// cleared their denominators.
pub fn class_json(c: &HomologyClass) -> Value {
    let cleared = c
        .clear_denominators()
        .expect("class coefficients are polynomial");
    let n = c.underlying().ring().total_dim();
    let parts: Vec<Value> = cleared
        .iter()
        .map(|(md, p)| {
            let e: usize = md.iter().map(|&x| x as usize).sum();
            json!({
                "multidegree": md,
                "homology_degree": n - e,
                "coeff": poly_json(p),
            })
        })
        .collect();
    json!({ "dim_x": c.dim_x(), "parts": parts })
}

/// Table lines for a class, one per monomial, descending homology degree.
pub fn class_lines(c: &HomologyClass, out: &mut Vec<String>) {
    let cleared = c
        .clear_denominators()
        .expect("class coefficients are polynomial");
    let n = c.underlying().ring().total_dim();
    let single = c.underlying().ring().num_factors() == 1;
    let mut entries: Vec<_> = cleared.into_iter().collect();
    entries.sort_by_key(|(md, _)| md.iter().map(|&x| x as usize).sum::<usize>());
    for (md, p) in entries {
        let e: usize = md.iter().map(|&x| x as usize).sum();
        let mono = if single {
            match md[0] {
                0 => "1".to_string(),
                1 => "h".to_string(),
                k => format!("h^{k}"),
            }
        } else {
            let pieces: Vec<String> = md
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        format!("h{}", i + 1)
                    } else {
                        format!("h{}^{x}", i + 1)
                    }
                })
                .collect();
            if pieces.is_empty() {
                "1".to_string()
            } else {
                pieces.join(" ")
            }
        };
        out.push(format!("  [deg {}] {mono}: {p}", n - e));
    }
}
