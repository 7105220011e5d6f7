//! The report every command emits, as sorted-key JSON or aligned text.

use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Invalid,
    Budget,
    Usage,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Invalid => 1,
            Status::Budget => 2,
            Status::Usage => 3,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Invalid => "invalid",
            Status::Budget => "budget-exceeded",
            Status::Usage => "usage-error",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub field: Option<String>,
    pub input: Option<String>,
    pub seed: Option<u64>,
    pub results: Map<String, Value>,
    pub notes: Vec<String>,
    pub warnings: Vec<String>,
    pub error: Option<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            status: Status::Ok,
            field: None,
            input: None,
            seed: None,
            results: Map::new(),
            notes: Vec::new(),
            warnings: Vec::new(),
            error: None,
        }
    }

    pub fn set(&mut self, key: &str, v: Value) {
        self.results.insert(key.to_string(), v);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn fail(&mut self, status: Status, msg: impl Into<String>) {
        self.status = status;
        self.error = Some(msg.into());
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "status": self.status.name(),
            "exit_code": self.status.code(),
            "field": self.field,
            "input": self.input,
            "seed": self.seed,
            "results": Value::Object(self.results.clone()),
            "notes": self.notes,
            "warnings": self.warnings,
            "error": self.error,
        })
    }

    pub fn render(&self, text: bool) -> String {
        if !text {
            return gext_core::io::to_pretty(&self.to_json());
        }
        let mut out = String::new();
        let mut head: Vec<(String, String)> = vec![
            ("command".into(), self.command.clone()),
            (
                "status".into(),
                format!("{} (exit {})", self.status.name(), self.status.code()),
            ),
        ];
        for (k, v) in [
            ("field", &self.field),
            ("input", &self.input),
            ("error", &self.error),
        ] {
            if let Some(v) = v {
                head.push((k.into(), v.clone()));
            }
        }
        if let Some(s) = self.seed {
            head.push(("seed".into(), s.to_string()));
        }
        let mut tables = Vec::new();
        for (k, v) in &self.results {
            match v {
                Value::Array(rows) if !rows.is_empty() && rows.iter().all(Value::is_object) => {
                    tables.push((k, rows))
                }
                _ => head.push((k.clone(), compact(v))),
            }
        }
        push_aligned(&mut out, &head);
        for (name, rows) in tables {
            out.push_str(&format!("\n{name} ({})\n", rows.len()));
            push_table(&mut out, rows);
        }
        for (title, lines) in [("notes", &self.notes), ("warnings", &self.warnings)] {
            if !lines.is_empty() {
                out.push_str(&format!("\n{title}:\n"));
                for l in lines {
                    out.push_str(&format!("  - {l}\n"));
                }
            }
        }
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        _ => v.to_string(),
    }
}

fn push_aligned(out: &mut String, rows: &[(String, String)]) {
    let w = rows
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    for (k, v) in rows {
        out.push_str(&format!("{k:<w$}  {v}\n"));
    }
}

fn push_table(out: &mut String, rows: &[Value]) {
    let mut cols: Vec<String> = Vec::new();
    for r in rows {
        for k in r.as_object().expect("object rows").keys() {
            if !cols.contains(k) {
                cols.push(k.clone());
            }
        }
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            cols.iter()
                .map(|c| r.get(c).map_or_else(|| "-".into(), compact))
                .collect()
        })
        .collect();
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(i, c)| {
            cells
                .iter()
                .map(|r| r[i].chars().count())
                .chain([c.chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |vals: &[String]| {
        let parts: Vec<String> = vals
            .iter()
            .zip(&widths)
            .map(|(v, &w)| format!("{v:<w$}"))
            .collect();
        format!("  {}\n", parts.join("  ").trim_end())
    };
    out.push_str(&line(&cols));
    for r in &cells {
        out.push_str(&line(r));
    }
}
