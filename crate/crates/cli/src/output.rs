//! Curve and report writers.
//!
//! Curves are two-column CSV with a `theta,<name>` header. Reports are TOML
//! documents. Every real is written as `{:.16e}` (17 significant digits), so
//! equal inputs give byte-identical output.

use std::fmt::Write as _;

use fuzzy_prior::{CutSet, GridFunction};

pub fn real(x: f64) -> String {
    format!("{x:.16e}")
}

/// A named curve: rows of `(theta, value)` with strictly increasing theta.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub name: String,
    pub rows: Vec<(f64, f64)>,
}

impl Curve {
    pub fn from_grid(name: &str, f: &GridFunction) -> Self {
        Curve {
            name: name.to_string(),
            rows: f
                .abscissae()
                .into_iter()
                .zip(f.values().iter().copied())
                .collect(),
        }
    }

    pub fn resampled(name: &str, f: &GridFunction, points: usize) -> Self {
        Curve {
            name: name.to_string(),
            rows: f.resample(points),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut s = format!("theta,{}\n", self.name);
        for &(x, v) in &self.rows {
            let _ = writeln!(s, "{},{}", real(x), real(v));
        }
        s
    }
}

fn quote(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Line-oriented TOML builder. Keys are written in call order; callers put
/// plain keys before any `[[table]]` header.
#[derive(Debug, Default, Clone)]
pub struct Report {
    text: String,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn real(&mut self, key: &str, x: f64) -> &mut Self {
        let _ = writeln!(self.text, "{key} = {}", real(x));
        self
    }

    pub fn int(&mut self, key: &str, x: usize) -> &mut Self {
        let _ = writeln!(self.text, "{key} = {x}");
        self
    }

    pub fn flag(&mut self, key: &str, b: bool) -> &mut Self {
        let _ = writeln!(self.text, "{key} = {b}");
        self
    }

    pub fn text(&mut self, key: &str, s: &str) -> &mut Self {
        let _ = writeln!(self.text, "{key} = {}", quote(s));
        self
    }

    pub fn cut(&mut self, key: &str, cut: &CutSet) -> &mut Self {
        let parts: Vec<String> = cut
            .intervals()
            .iter()
            .map(|&(a, b)| format!("[{}, {}]", real(a), real(b)))
            .collect();
        let _ = writeln!(self.text, "{key} = [{}]", parts.join(", "));
        self
    }

    pub fn table(&mut self, name: &str) -> &mut Self {
        let _ = writeln!(self.text, "\n[[{name}]]");
        self
    }

    pub fn finish(&self) -> String {
        self.text.clone()
    }
}
