use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

/// Floats are printed with 17 significant digits so that output is stable
/// and round-trips.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// One instance with the value each method produced.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub instance: String,
    pub methods: BTreeMap<String, String>,
    pub agree: bool,
    /// Tolerance verdict for floating-point checks; exact methods never use it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub within_tol: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<BTreeMap<String, f64>>,
    #[serde(skip)]
    exact: Vec<String>,
}

impl Report {
    pub fn new(instance: impl Into<String>) -> Self {
        Report {
            instance: instance.into(),
            methods: BTreeMap::new(),
            agree: true,
            within_tol: None,
            elapsed_ms: None,
            exact: Vec::new(),
        }
    }

    /// Records an exact value; `agree` is recomputed over all exact values.
    pub fn exact(&mut self, method: &str, value: impl ToString) {
        self.methods.insert(method.to_string(), value.to_string());
        if !self.exact.iter().any(|m| m == method) {
            self.exact.push(method.to_string());
        }
        let mut vals = self.exact.iter().map(|m| &self.methods[m]);
        self.agree = match vals.next() {
            Some(first) => vals.all(|v| v == first),
            None => true,
        };
    }

    pub fn float(&mut self, method: &str, value: f64) {
        self.methods.insert(method.to_string(), fmt_float(value));
    }

    /// Records a free-form annotation that takes no part in `agree`.
    pub fn note(&mut self, key: &str, value: impl ToString) {
        self.methods.insert(key.to_string(), value.to_string());
    }

    pub fn tolerance(&mut self, ok: bool) {
        self.within_tol = Some(self.within_tol.unwrap_or(true) && ok);
    }

    /// Forces a verdict for checks that are pass/fail by construction.
    pub fn verdict(&mut self, ok: bool) {
        self.agree = self.agree && ok;
    }

    /// Runs `f`, records its exact result and, with timings on, the elapsed time.
    pub fn timed<T: ToString>(
        &mut self,
        timings: bool,
        method: &str,
        f: impl FnOnce() -> anyhow::Result<T>,
    ) -> anyhow::Result<()> {
        let start = Instant::now();
        let v = f()?;
        let ms = start.elapsed().as_secs_f64() * 1e3;
        self.exact(method, v);
        if timings {
            self.elapsed_ms.get_or_insert_with(BTreeMap::new).insert(method.to_string(), ms);
        }
        Ok(())
    }

    pub fn ok(&self) -> bool {
        self.agree && self.within_tol != Some(false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

pub fn render(reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => {
            let s = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0])
            } else {
                serde_json::to_string_pretty(reports)
            };
            s.expect("reports serialize") + "\n"
        }
        Format::Csv => {
            let mut out = String::from("instance,method,value,agree\n");
            for r in reports {
                for (m, v) in &r.methods {
                    writeln!(out, "{},{},{},{}", csv_field(&r.instance), m, csv_field(v), r.ok()).unwrap();
                }
            }
            out
        }
        Format::Table => {
            let mut out = String::new();
            for r in reports {
                let status = if r.ok() { "ok" } else { "MISMATCH" };
                writeln!(out, "{}  [{status}]", r.instance).unwrap();
                for (m, v) in &r.methods {
                    let t = r
                        .elapsed_ms
                        .as_ref()
                        .and_then(|e| e.get(m))
                        .map(|ms| format!("  ({ms:.3} ms)"))
                        .unwrap_or_default();
                    writeln!(out, "  {m:<14} {v}{t}").unwrap();
                }
            }
            out
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', ';']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
