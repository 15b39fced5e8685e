//! File formats for computed sequences and triangles.
//!
//! Values are written as decimal strings everywhere, JSON included, so that
//! no reader ever rounds them. A triangle is flattened row by row for the
//! b-file format, with the running index starting at 1.

use std::io::Write;

use clap::ValueEnum;
use rwords_core::{BigInt, BigTriangle, CaseSpec};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Bfile,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Table {
    Sequence(Vec<BigInt>),
    Triangle(BigTriangle),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub a: Option<u32>,
    pub b: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Values {
    Sequence(Vec<String>),
    Triangle(Vec<Vec<String>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub case: u8,
    pub params: Params,
    pub m: u32,
    pub source: String,
    pub values: Values,
}

impl Document {
    pub fn new(spec: CaseSpec, m: u32, source: &str, table: &Table) -> Self {
        let strings = |row: &[BigInt]| row.iter().map(BigInt::to_string).collect();
        let values = match table {
            Table::Sequence(v) => Values::Sequence(strings(v)),
            Table::Triangle(t) => Values::Triangle(t.rows().map(strings).collect()),
        };
        Self {
            case: spec.id(),
            params: Params {
                a: spec.a(),
                b: spec.b(),
            },
            m,
            source: source.to_string(),
            values,
        }
    }
}

pub fn write(
    out: &mut dyn Write,
    format: Format,
    spec: CaseSpec,
    m: u32,
    source: &str,
    table: &Table,
) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &Document::new(spec, m, source, table))?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            match table {
                Table::Sequence(v) => {
                    w.write_record(["n", "value"])?;
                    for (i, x) in v.iter().enumerate() {
                        w.write_record([(i + 1).to_string(), x.to_string()])?;
                    }
                }
                Table::Triangle(t) => {
                    w.write_record(["n", "k", "value"])?;
                    for (n, k, x) in t.cells() {
                        w.write_record([n.to_string(), k.to_string(), x.to_string()])?;
                    }
                }
            }
            w.flush()
        }
        Format::Bfile => {
            let flat: Vec<&BigInt> = match table {
                Table::Sequence(v) => v.iter().collect(),
                Table::Triangle(t) => t.cells().map(|(_, _, x)| x).collect(),
            };
            for (i, x) in flat.into_iter().enumerate() {
                writeln!(out, "{} {x}", i + 1)?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(format: Format, table: &Table) -> String {
        let mut buf = Vec::new();
        write(
            &mut buf,
            format,
            CaseSpec::EvenRuns { a: 1 },
            1,
            "recurrence",
            table,
        )
        .unwrap();
        String::from_utf8(buf).unwrap()
    }

    fn seq(values: &[i64]) -> Table {
        Table::Sequence(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn bfile_lines() {
        assert_eq!(render(Format::Bfile, &seq(&[1, 1, 2])), "1 1\n2 1\n3 2\n");
    }

    #[test]
    fn csv_headers() {
        assert_eq!(render(Format::Csv, &seq(&[5])), "n,value\n1,5\n");
        let t = BigTriangle::from_fn(2, |n, k| BigInt::from(n * 10 + k)).unwrap();
        assert_eq!(
            render(Format::Csv, &Table::Triangle(t)),
            "n,k,value\n1,1,11\n2,1,21\n2,2,22\n"
        );
    }

    #[test]
    fn json_round_trip() {
        let big = BigInt::from(7u32).pow(90);
        let table = Table::Sequence(vec![BigInt::from(1), big.clone()]);
        let doc: Document = serde_json::from_str(&render(Format::Json, &table)).unwrap();
        assert_eq!(doc.case, 2);
        assert_eq!(
            doc.params,
            Params {
                a: Some(1),
                b: None
            }
        );
        assert_eq!(
            doc.values,
            Values::Sequence(vec!["1".into(), big.to_string()])
        );
    }
}
