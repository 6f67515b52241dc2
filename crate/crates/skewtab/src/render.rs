//! Output documents and their JSON, CSV and text renderings.

use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

/// A command result: a JSON value plus a flat table for CSV and text.
#[derive(Clone, Debug)]
pub struct Doc {
    json: String,
    columns: Vec<String>,
    rows: Vec<Vec<String>>,
    text: Option<String>,
}

impl Doc {
    pub fn new<T: Serialize>(value: &T, columns: &[&str], rows: Vec<Vec<String>>) -> Doc {
        let json = serde_json::to_string(value).expect("documents serialize");
        Doc {
            json,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows,
            text: None,
        }
    }

    /// Replaces the aligned-table text rendering.
    pub fn with_text(mut self, text: String) -> Doc {
        self.text = Some(text);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", self.json),
            Format::Csv => self.csv(),
            Format::Text => match &self.text {
                Some(t) => t.clone(),
                None => self.table(),
            },
        }
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 input")
    }

    fn table(&self) -> String {
        let width = |i: usize| {
            self.rows
                .iter()
                .map(|r| r[i].chars().count())
                .chain([self.columns[i].chars().count()])
                .max()
                .unwrap_or(0)
        };
        let widths: Vec<usize> = (0..self.columns.len()).map(width).collect();
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            format!("{}\n", padded.join("  ").trim_end())
        };
        let mut out = line(&self.columns);
        for row in &self.rows {
            out.push_str(&line(row));
        }
        out
    }
}

/// Fixed-precision float for CSV and text, independent of locale.
pub fn fixed(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.10}")
    } else if x.is_nan() {
        "nan".to_string()
    } else if x > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Pair {
        a: u32,
        b: &'static str,
    }

    fn doc() -> Doc {
        Doc::new(
            &Pair { a: 1, b: "x,y" },
            &["a", "b"],
            vec![vec!["1".into(), "x,y".into()], vec!["22".into(), "z".into()]],
        )
    }

    #[test]
    fn csv_quotes_commas() {
        assert_eq!(doc().render(Format::Csv), "a,b\n1,\"x,y\"\n22,z\n");
    }

    #[test]
    fn text_aligns_columns() {
        assert_eq!(doc().render(Format::Text), "a   b\n1   x,y\n22  z\n");
    }

    #[test]
    fn json_keeps_field_order() {
        assert_eq!(doc().render(Format::Json), "{\"a\":1,\"b\":\"x,y\"}\n");
    }

    #[test]
    fn floats_use_a_dot() {
        assert_eq!(fixed(-0.25), "-0.2500000000");
        assert_eq!(fixed(f64::NEG_INFINITY), "-inf");
    }
}
