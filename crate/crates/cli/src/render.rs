//! Text and JSON-lines output. Everything is buffered and written once, so
//! a failing command still prints what it computed.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use maxhilb::verify::Check;
use maxhilb::{render_profile, BettiSeries, CatalogOutcome, Hilb2Report, SmithReport, SurfaceProfile};
use serde::Serialize;
use serde_json::{json, Value};

use crate::Format;

pub struct Out {
    format: Format,
    buf: String,
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn record(kind: &str, body: impl Serialize) -> Value {
    let mut v = serde_json::to_value(body).expect("report types serialize");
    match &mut v {
        Value::Object(map) => {
            map.insert("record".into(), kind.into());
        }
        other => *other = json!({ "record": kind, "value": other.clone() }),
    }
    v
}

impl Out {
    pub fn new(format: Format) -> Self {
        Out { format, buf: String::new() }
    }

    pub fn flush(&mut self) {
        let mut stdout = std::io::stdout().lock();
        // a closed pipe is not worth reporting
        let _ = stdout.write_all(self.buf.as_bytes()).and_then(|_| stdout.flush());
        self.buf.clear();
    }

    fn emit(&mut self, v: Value) {
        self.buf.push_str(&v.to_string());
        self.buf.push('\n');
    }

    fn line(&mut self, key: &str, value: impl std::fmt::Display) {
        let _ = writeln!(self.buf, "{key:<22}{value}");
    }

    fn with_profile(mut v: Value, profile: &SurfaceProfile) -> Value {
        v["name"] = profile.name.clone().into();
        v["profile"] = render_profile(profile).into();
        v
    }

    pub fn analyze(&mut self, profile: &SurfaceProfile, report: &SmithReport) {
        if self.format == Format::Records {
            self.emit(Self::with_profile(record("smith", report), profile));
            return;
        }
        self.line("profile", &profile.name);
        self.line("b*(X)", report.beta_star_x);
        self.line("b*(X(R))", report.beta_star_r);
        self.line("smith defect", report.defect);
        self.line("maximal", report.is_maximal);
        self.line("comessatti", opt(report.comessatti_ok.map(|ok| if ok { "ok" } else { "violated" })));
        self.line("hodge component bound", opt(report.hodge_component_bound));
    }

    pub fn hilb2(&mut self, profile: &SurfaceProfile, r: &Hilb2Report) {
        if self.format == Format::Records {
            let mut v = Self::with_profile(record("hilb2", r), profile);
            v["citation"] = r.verdict.rule.map(|rule| rule.citation()).into();
            self.emit(v);
            return;
        }
        self.line("profile", &profile.name);
        self.line("b*(X)", r.smith.beta_star_x);
        self.line("smith defect", r.smith.defect);
        let exact = if r.beta_star_hilb2_c.exact { "exact" } else { "lower bound" };
        self.line("b*(X^[2])", format!("{} ({exact})", r.beta_star_hilb2_c.value));
        if let Some(known) = r.known_beta_star_hilb2 {
            self.line("b*(X^[2]) known", known);
        }
        self.line("chi(X^[2](R))", r.chi_hilb2_r);
        self.line("required b1", opt(r.required_beta1));
        self.line("actual b1", opt(r.actual_beta1));
        if let Some(mu) = &r.rank_mu {
            let value = match mu.value {
                Some(v) => v.to_string(),
                None => format!(">= {}", mu.lower_bound),
            };
            self.line("rank mu", format!("{value} ({:?})", mu.source));
        }
        if let Some(t) = r.beta_hilb2_r {
            self.line("betti(X^[2](R))", format!("({}, {}, {}, {}, {})", t[0], t[1], t[2], t[3], t[4]));
            self.line("b*(X^[2](R))", t.iter().sum::<i64>());
        }
        self.line("defect(X^[2])", opt(r.defect));
        self.line("verdict", r.verdict.decision);
        self.line("rule", opt(r.verdict.rule.map(|rule| rule.citation())));
        if !r.verdict.notes.is_empty() {
            self.line("notes", &r.verdict.notes);
        }
    }

    pub fn goettsche(&mut self, s: &BettiSeries) {
        if self.format == Format::Records {
            for (n, row) in s.rows().iter().enumerate() {
                for (i, value) in row.iter().enumerate() {
                    self.emit(json!({ "record": "goettsche", "n": n, "i": i, "value": value.to_string() }));
                }
            }
            return;
        }
        let rows: Vec<Vec<String>> = s.rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        let sums: Vec<String> = (0..rows.len()).map(|n| s.row_sum(n).to_string()).collect();
        let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
        let widths: Vec<usize> =
            (0..cols).map(|i| rows.iter().filter_map(|r| r.get(i)).map(String::len).max().unwrap_or(1)).collect();
        let (nw, sw) = (rows.len().saturating_sub(1).to_string().len().max(1), sums.iter().map(String::len).max().unwrap_or(1).max(5));
        let b = &s.b_input;
        let _ = writeln!(self.buf, "b = ({}, {}, {}, {}, {})", b[0], b[1], b[2], b[3], b[4]);
        let _ = writeln!(self.buf, "{:>nw$}  {:>sw$}  betti", "n", "total");
        for (n, row) in rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().zip(&widths).map(|(v, w)| format!("{v:>w$}")).collect();
            let _ = writeln!(self.buf, "{n:>nw$}  {:>sw$}  {}", sums[n], cells.join(" "));
        }
    }

    pub fn checks(&mut self, suite: &str, checks: &[Check]) {
        for c in checks {
            if self.format == Format::Records {
                let mut v = record("check", c);
                v["suite"] = suite.into();
                self.emit(v);
            } else {
                let status = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(self.buf, "[{status}] {suite}: {}\n       {}", c.name, c.detail);
            }
        }
    }

    pub fn verify_summary(&mut self, passed: usize, total: usize) {
        if self.format == Format::Text {
            let _ = writeln!(self.buf, "{passed} of {total} checks passed");
        }
    }

    pub fn catalog(&mut self, outcomes: &[CatalogOutcome]) {
        if self.format == Format::Records {
            for o in outcomes {
                let e = &o.entry;
                let mut v = json!({
                    "record": "catalog",
                    "name": e.profile.name,
                    "subject": e.subject,
                    "description": e.description,
                    "expected": e.expected,
                    "citation": e.citation,
                    "facts": e.facts.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
                    "agrees": o.agrees,
                    "profile": render_profile(&e.profile),
                });
                match &o.computed {
                    Ok(verdict) => v["computed"] = json!(verdict),
                    Err(msg) => v["error"] = msg.clone().into(),
                }
                self.emit(v);
            }
            return;
        }
        let width = outcomes.iter().map(|o| o.entry.profile.name.len()).max().unwrap_or(0);
        let _ = writeln!(self.buf, "{:<width$}  {:<10}  {:<10}  agrees", "entry", "expected", "computed");
        for o in outcomes {
            let computed = match &o.computed {
                Ok(v) => v.decision.to_string(),
                Err(_) => "error".to_string(),
            };
            let _ = writeln!(
                self.buf,
                "{:<width$}  {:<10}  {:<10}  {}",
                o.entry.profile.name,
                o.entry.expected.decision.to_string(),
                computed,
                if o.agrees { "yes" } else { "NO" }
            );
            if let Err(msg) = &o.computed {
                let _ = writeln!(self.buf, "    {msg}");
            }
        }
        let agree = outcomes.iter().filter(|o| o.agrees).count();
        let _ = writeln!(self.buf, "{agree} of {} entries agree", outcomes.len());
    }

    pub fn exported(&mut self, name: &str, path: &Path) {
        match self.format {
            Format::Records => self.emit(json!({ "record": "export", "name": name, "path": path.display().to_string() })),
            Format::Text => {
                let _ = writeln!(self.buf, "wrote {}", path.display());
            }
        }
    }
}
