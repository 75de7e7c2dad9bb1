//! Text, CSV and JSON Lines renderings of KO-tables.

use std::collections::BTreeMap;
use std::fmt::Write;

use kocalc_core::{render, Convention, KoTable};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// One computed table and the space it belongs to.
#[derive(Clone, Debug)]
pub struct Row {
    pub space: String,
    pub table: KoTable,
}

pub const CSV_HEADER: [&str; 9] = [
    "space",
    "twist",
    "t0",
    "t1",
    "s0",
    "s1",
    "s2",
    "s3",
    "degeneration_assumed",
];

pub fn emit(rows: &[Row], format: Format) -> String {
    match format {
        Format::Text => text(rows),
        Format::Csv => csv(rows),
        Format::Json => json(rows),
    }
}

/// A column table of `t0 t1 s0..s3` per space and twist, then the groups.
pub fn text(rows: &[Row]) -> String {
    let mut cells: Vec<[String; 8]> =
        vec![["space", "twist", "t0", "t1", "s0", "s1", "s2", "s3"].map(String::from)];
    for r in rows {
        let t = &r.table;
        cells.push([
            r.space.clone(),
            t.twist_label.clone(),
            t.t0.to_string(),
            t.t1.to_string(),
            t.s[0].to_string(),
            t.s[1].to_string(),
            t.s[2].to_string(),
            t.s[3].to_string(),
        ]);
    }
    let widths: Vec<usize> = (0..8)
        .map(|c| {
            cells
                .iter()
                .map(|row| row[c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| {
                if c < 2 {
                    format!("{cell:<w$}", w = widths[c])
                } else {
                    format!("{cell:>w$}", w = widths[c])
                }
            })
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    for r in rows {
        let _ = writeln!(out);
        let _ = writeln!(out, "{} twist {}", r.space, r.table.twist_label);
        for convention in [Convention::Ko, Convention::GwW] {
            let groups: Vec<String> = render(&r.table, convention)
                .into_iter()
                .map(|(label, g)| format!("{label} = {g}"))
                .collect();
            let (first, second) = groups.split_at(4);
            let _ = writeln!(out, "  {}", first.join(", "));
            let _ = writeln!(out, "  {}", second.join(", "));
        }
        let _ = writeln!(out, "  {}", r.table.degeneration.citation());
    }
    out
}

/// CSV with a header line and one line per record.
pub fn csv_records<R: AsRef<[String]>>(header: &[&str], records: &[R]) -> String {
    let mut w = ::csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for r in records {
        w.write_record(r.as_ref()).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("utf-8 input")
}

pub fn csv(rows: &[Row]) -> String {
    let records: Vec<[String; 9]> = rows
        .iter()
        .map(|r| {
            let t = &r.table;
            [
                r.space.clone(),
                t.twist_label.clone(),
                t.t0.to_string(),
                t.t1.to_string(),
                t.s[0].to_string(),
                t.s[1].to_string(),
                t.s[2].to_string(),
                t.s[3].to_string(),
                t.degeneration_assumed().to_string(),
            ]
        })
        .collect();
    csv_records(&CSV_HEADER, &records)
}

#[derive(Serialize)]
pub struct JsonRow<'a> {
    pub space: &'a str,
    pub twist: &'a str,
    pub t0: usize,
    pub t1: usize,
    pub s: [usize; 4],
    pub groups: BTreeMap<String, String>,
    pub degeneration_assumed: bool,
    pub citation: &'a str,
}

impl<'a> From<&'a Row> for JsonRow<'a> {
    fn from(r: &'a Row) -> Self {
        let t = &r.table;
        let groups = render(t, Convention::Ko)
            .into_iter()
            .chain(render(t, Convention::GwW))
            .map(|(label, g)| (label, g.to_string()))
            .collect();
        JsonRow {
            space: &r.space,
            twist: &t.twist_label,
            t0: t.t0,
            t1: t.t1,
            s: t.s,
            groups,
            degeneration_assumed: t.degeneration_assumed(),
            citation: t.degeneration.citation(),
        }
    }
}

/// One JSON object per line.
pub fn json(rows: &[Row]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&serde_json::to_string(&JsonRow::from(r)).expect("serializable"));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use kocalc_core::catalog;
    use kocalc_core::ko_table;

    fn row(space: &kocalc_core::SpaceData, twist: Option<&str>) -> Row {
        Row {
            space: space.id().to_string(),
            table: ko_table(space, twist).unwrap(),
        }
    }

    #[test]
    fn evii_json_w1() {
        let evii = catalog::exceptional(catalog::Exceptional::EVII);
        let out = json(&[row(&evii, None)]);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["groups"]["W1"], "(Z/2)^3");
        assert_eq!(v["s"], serde_json::json!([1, 3, 3, 1]));
        assert_eq!(v["degeneration_assumed"], false);
    }

    #[test]
    fn point_text() {
        let out = text(&[row(&catalog::point(), None)]);
        let mut lines = out.lines();
        assert_eq!(
            lines.next().unwrap(),
            "space  twist  t0  t1  s0  s1  s2  s3"
        );
        assert_eq!(
            lines.next().unwrap(),
            "point  O       1   0   1   0   0   0"
        );
        assert!(out.contains("KO0 = Z, KO1 = 0, KO2 = 0, KO3 = 0"));
        assert!(out.contains("KO4 = Z, KO5 = 0, KO6 = Z/2, KO7 = Z/2"));
        assert!(out.contains("GW0 = Z, GW1 = 0, GW2 = Z, GW3 = Z/2"));
        assert!(out.contains("W0 = Z/2, W1 = 0, W2 = 0, W3 = 0"));
    }

    #[test]
    fn csv_quotes_grassmannian_names() {
        let gr = catalog::grassmannian(2, 3).unwrap();
        let out = csv(&[row(&gr, None)]);
        let mut lines = out.lines();
        assert_eq!(
            lines.next().unwrap(),
            "space,twist,t0,t1,s0,s1,s2,s3,degeneration_assumed"
        );
        assert!(lines.next().unwrap().starts_with("\"gr:2,3\",O,"));
    }

    #[test]
    fn formats_agree() {
        let q = catalog::quadric(5).unwrap();
        let rows = vec![row(&q, None), row(&q, Some("O1"))];
        let text_rows: Vec<Vec<String>> = text(&rows)
            .lines()
            .skip(1)
            .take(2)
            .map(|l| l.split_whitespace().map(String::from).collect())
            .collect();
        let csv_text = csv(&rows);
        let mut reader = ::csv::Reader::from_reader(csv_text.as_bytes());
        let csv_rows: Vec<Vec<String>> = reader
            .records()
            .map(|r| r.unwrap().iter().take(8).map(String::from).collect())
            .collect();
        assert_eq!(text_rows, csv_rows);
        for (line, r) in json(&rows).lines().zip(&csv_rows) {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            let fields = [
                v["space"].as_str().unwrap().to_string(),
                v["twist"].as_str().unwrap().to_string(),
                v["t0"].to_string(),
                v["t1"].to_string(),
            ]
            .into_iter()
            .chain((0..4).map(|i| v["s"][i].to_string()));
            assert_eq!(fields.collect::<Vec<_>>(), *r);
        }
    }
}
