//! Citation list readers.
//!
//! CSV comes in two shapes: one count per line with no header, or
//! `paper_id,citations` with that exact header. JSON is a flat array of
//! integers.

use std::collections::HashSet;
use std::io::Read;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Csv,
    Json,
}

impl FromStr for InputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(InputFormat::Csv),
            "json" => Ok(InputFormat::Json),
            other => Err(Error::Parse {
                line: 0,
                reason: format!("unknown input format {other:?}"),
            }),
        }
    }
}

/// Reads citation counts in file order.
pub fn parse_citations<R: Read>(input: R, format: InputFormat) -> Result<Vec<u64>> {
    match format {
        InputFormat::Csv => parse_csv(input),
        InputFormat::Json => parse_json(input),
    }
}

fn parse_csv<R: Read>(input: R) -> Result<Vec<u64>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(input);

    let mut counts = Vec::new();
    let mut seen_ids = HashSet::new();
    let mut two_column = false;

    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map_or(0, |p| p.line()),
            reason: e.to_string(),
        })?;
        let line = record.position().map_or(row as u64 + 1, |p| p.line());

        if row == 0 && record.len() == 2 && &record[0] == "paper_id" && &record[1] == "citations" {
            two_column = true;
            continue;
        }
        let field = match (two_column, record.len()) {
            (false, 1) => &record[0],
            (true, 2) => {
                let id = &record[0];
                if id.is_empty() {
                    return Err(Error::Parse {
                        line,
                        reason: "empty paper_id".into(),
                    });
                }
                if !seen_ids.insert(id.to_string()) {
                    return Err(Error::DuplicatePaperId {
                        line,
                        id: id.to_string(),
                    });
                }
                &record[1]
            }
            (_, fields) => {
                return Err(Error::Parse {
                    line,
                    reason: format!(
                        "expected {} field(s), found {fields}",
                        if two_column { 2 } else { 1 }
                    ),
                })
            }
        };
        counts.push(parse_count(field, counts.len(), line)?);
    }
    Ok(counts)
}

fn parse_count(field: &str, index: usize, line: u64) -> Result<u64> {
    let value: i64 = field.parse().map_err(|_| Error::Parse {
        line,
        reason: format!("{field:?} is not an integer"),
    })?;
    u64::try_from(value).map_err(|_| Error::NegativeCitation { index })
}

fn parse_json<R: Read>(input: R) -> Result<Vec<u64>> {
    let values: Vec<i64> = serde_json::from_reader(input).map_err(|e| Error::Parse {
        line: e.line() as u64,
        reason: e.to_string(),
    })?;
    values
        .into_iter()
        .enumerate()
        .map(|(index, v)| u64::try_from(v).map_err(|_| Error::NegativeCitation { index }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn csv(s: &str) -> Result<Vec<u64>> {
        parse_citations(s.as_bytes(), InputFormat::Csv)
    }

    fn json(s: &str) -> Result<Vec<u64>> {
        parse_citations(s.as_bytes(), InputFormat::Json)
    }

    #[test]
    fn single_column() {
        assert_eq!(
            csv("10\n9\n8\n8\n7\n5\n4\n3\n2\n1\n1\n").unwrap(),
            vec![10, 9, 8, 8, 7, 5, 4, 3, 2, 1, 1]
        );
        assert_eq!(csv("4\r\n3\r\n").unwrap(), vec![4, 3]);
        assert_eq!(csv("").unwrap(), Vec::<u64>::new());
    }

    #[test]
    fn two_column_with_header() {
        let body = "paper_id,citations\nA,4\nB,3\r\nC,2\n";
        assert_eq!(csv(body).unwrap(), vec![4, 3, 2]);
    }

    #[test]
    fn duplicate_ids() {
        let err = csv("paper_id,citations\nA,4\nB,3\nA,1\n").unwrap_err();
        assert_eq!(
            err,
            Error::DuplicatePaperId {
                line: 4,
                id: "A".into()
            }
        );
    }

    #[test]
    fn malformed_csv() {
        assert!(matches!(
            csv("4\nfour\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(csv("4\n3,2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(csv("1.5\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            csv("paper_id,citations\nA\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn negative_values() {
        assert_eq!(csv("4\n-3\n"), Err(Error::NegativeCitation { index: 1 }));
        assert_eq!(json("[1, -2]"), Err(Error::NegativeCitation { index: 1 }));
    }

    #[test]
    fn json_arrays() {
        assert_eq!(json("[4,3,2,1]").unwrap(), vec![4, 3, 2, 1]);
        assert_eq!(json(" [ ] ").unwrap(), Vec::<u64>::new());
        assert!(matches!(json("[1, 2.5]"), Err(Error::Parse { .. })));
        assert!(matches!(json("{\"a\": 1}"), Err(Error::Parse { .. })));
        assert!(matches!(json("[1, 2"), Err(Error::Parse { .. })));
    }
}
