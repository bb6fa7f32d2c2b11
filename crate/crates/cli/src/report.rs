use std::fmt::Write;

use groupoid_core::{FiniteAlgebra, GroupTable};
use serde_json::Value;

/// Text and JSON forms of one command's output.
pub struct Report {
    text: String,
    json: Value,
}

impl Report {
    pub fn new() -> Self {
        Self {
            text: String::new(),
            json: Value::Null,
        }
    }

    pub fn line(&mut self, line: impl AsRef<str>) {
        self.text.push_str(line.as_ref());
        self.text.push('\n');
    }

    pub fn blank(&mut self) {
        self.text.push('\n');
    }

    /// Appends text that already ends with a newline.
    pub fn text(&mut self, text: String) {
        self.text.push_str(&text);
    }

    pub fn set_json(&mut self, value: Value) {
        self.json = value;
    }

    pub fn print(&self, json: bool) {
        if json {
            println!(
                "{}",
                serde_json::to_string_pretty(&self.json).expect("report is valid JSON")
            );
        } else {
            print!("{}", self.text);
        }
    }
}

fn aligned(rows: &[(String, Vec<usize>)]) -> String {
    let label = rows
        .iter()
        .map(|(l, _)| l.chars().count())
        .max()
        .unwrap_or(0);
    let width = rows
        .iter()
        .flat_map(|(_, v)| v.iter().map(|x| x.to_string().len()))
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for (l, values) in rows {
        let pad = label - l.chars().count();
        write!(out, "{l}{:pad$} |", "").unwrap();
        for v in values {
            write!(out, " {v:>width$}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// The α, β and ι tables, one column per element.
pub fn structure_maps(a: &FiniteAlgebra) -> String {
    aligned(&[
        ("x".into(), a.elements().collect()),
        ("α(x)".into(), a.u_left_values()),
        ("β(x)".into(), a.u_right_values()),
        ("ι(x)".into(), a.inv_values()),
    ])
}

pub fn set(elements: &[usize]) -> String {
    let items: Vec<String> = elements.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

/// Heading plus multiplication table of an isotropy group.
pub fn group(g: &GroupTable) -> String {
    let mut out = format!(
        "G({}) = {} (order {})\n",
        g.unit(),
        set(g.elements()),
        g.order()
    );
    let mut rows = vec![("·".to_string(), g.elements().to_vec())];
    for (e, row) in g.elements().iter().zip(g.rows()) {
        rows.push((e.to_string(), row));
    }
    out.push_str(&aligned(&rows));
    out
}
