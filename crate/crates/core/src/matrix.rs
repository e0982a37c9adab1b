//! `0, ±1` matrices and their signed bipartite representation.
//!
//! CSV input: one row per line, entries in `{-1, 0, 1}`. An optional first
//! line whose first field starts with `!` names the columns, and a first field
//! starting with `!` on a data line names that row:
//!
//! ```text
//! !,c1,c2
//! !r1,1,-1
//! !r2,1,1
//! ```

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side};
use crate::limits::Limits;
use crate::signing::{is_balanced_signing, Signing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedMatrix {
    pub row_names: Vec<String>,
    pub col_names: Vec<String>,
    pub entries: Vec<Vec<i8>>,
}

impl SignedMatrix {
    /// Matrix with default names `r1..`, `c1..`.
    pub fn new(entries: Vec<Vec<i8>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        Self::named(
            (1..=rows).map(|i| format!("r{i}")).collect(),
            (1..=cols).map(|j| format!("c{j}")).collect(),
            entries,
        )
    }

    pub fn named(row_names: Vec<String>, col_names: Vec<String>, entries: Vec<Vec<i8>>) -> Result<Self> {
        if entries.is_empty() || col_names.is_empty() {
            return Err(Error::InvalidParams("matrix needs at least one row and column".into()));
        }
        if row_names.len() != entries.len() {
            return Err(Error::InvalidParams("row name count mismatch".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != col_names.len() {
                return Err(Error::InvalidParams(format!("row {} has {} entries", i + 1, row.len())));
            }
            if let Some((j, e)) = row.iter().enumerate().find(|(_, e)| !(-1..=1).contains(*e)) {
                return Err(Error::BadEntry {
                    row: i + 1,
                    col: j + 1,
                    entry: e.to_string(),
                });
            }
        }
        Ok(SignedMatrix {
            row_names,
            col_names,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.col_names.len()
    }

    pub fn parse_csv(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .flexible(true)
            .from_reader(text.as_bytes());
        let mut header: Option<Vec<String>> = None;
        let mut row_names = Vec::new();
        let mut entries = Vec::new();
        let mut named_rows = false;
        for (line, rec) in reader.records().enumerate() {
            let rec = rec.map_err(|e| Error::Parse {
                line: line + 1,
                msg: e.to_string(),
            })?;
            let fields: Vec<&str> = rec.iter().collect();
            if fields.iter().all(|f| f.is_empty()) {
                continue;
            }
            if line == 0 && fields[0].starts_with('!') && header.is_none() && entries.is_empty() {
                let mut cols: Vec<String> = fields.iter().map(|s| s.to_string()).collect();
                cols[0] = cols[0][1..].to_string();
                header = Some(cols);
                continue;
            }
            let mut data = &fields[..];
            if let Some(name) = fields[0].strip_prefix('!') {
                named_rows = true;
                row_names.push(name.to_string());
                data = &fields[1..];
            } else {
                row_names.push(format!("r{}", entries.len() + 1));
            }
            let row_no = entries.len() + 1;
            let row = data
                .iter()
                .enumerate()
                .map(|(j, f)| match f.parse::<i8>() {
                    Ok(v) if (-1..=1).contains(&v) => Ok(v),
                    _ => Err(Error::BadEntry {
                        row: row_no,
                        col: j + 1,
                        entry: f.to_string(),
                    }),
                })
                .collect::<Result<Vec<i8>>>()?;
            entries.push(row);
        }
        let cols = entries.first().map_or(0, Vec::len);
        let col_names = match header {
            Some(mut h) => {
                // a corner cell precedes the column names when rows are named
                if named_rows || h.len() == cols + 1 {
                    h.remove(0);
                }
                h
            }
            None => (1..=cols).map(|j| format!("c{j}")).collect(),
        };
        Self::named(row_names, col_names, entries)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        let mut head = vec!["!".to_string()];
        head.extend(self.col_names.iter().cloned());
        w.write_record(&head).expect("in-memory write");
        for (name, row) in self.row_names.iter().zip(&self.entries) {
            let mut rec = vec![format!("!{name}")];
            rec.extend(row.iter().map(|e| e.to_string()));
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8")
    }
}

/// Rows become `L` vertices, columns `R` vertices, nonzeros signed edges.
pub fn matrix_to_graph(m: &SignedMatrix) -> Result<(BipartiteGraph, Signing)> {
    let mut names: Vec<String> = m.row_names.clone();
    names.extend(m.col_names.iter().cloned());
    let mut sides = vec![Side::L; m.rows()];
    sides.extend(std::iter::repeat_n(Side::R, m.cols()));
    let mut edges = Vec::new();
    let mut weight_of = HashMap::new();
    for (i, row) in m.entries.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            if e != 0 {
                let c = m.rows() + j;
                edges.push((i, c));
                weight_of.insert((i, c), e);
            }
        }
    }
    let g = BipartiteGraph::from_parts(names, Some(sides), edges)?;
    let weights = g.edges().iter().map(|e| weight_of[e]).collect();
    let s = Signing::from_weights(&g, weights)?;
    Ok((g, s))
}

pub fn graph_to_matrix(g: &BipartiteGraph, sigma: &Signing) -> Result<SignedMatrix> {
    if !sigma.belongs_to(g) {
        return Err(Error::ForeignSigning);
    }
    let rows: Vec<usize> = g.vertices().filter(|&v| g.side(v) == Side::L).collect();
    let cols: Vec<usize> = g.vertices().filter(|&v| g.side(v) == Side::R).collect();
    let entries = rows
        .iter()
        .map(|&r| {
            cols.iter()
                .map(|&c| g.edge_index(r, c).map_or(0, |i| sigma.weight(i)))
                .collect()
        })
        .collect();
    SignedMatrix::named(
        rows.iter().map(|&v| g.name(v).to_string()).collect(),
        cols.iter().map(|&v| g.name(v).to_string()).collect(),
        entries,
    )
}

/// Every square submatrix with exactly two nonzeros per row and column sums to
/// 0 mod 4; equivalently the signed representation is balanced.
pub fn is_balanced_matrix(m: &SignedMatrix, limits: &Limits) -> Result<bool> {
    let (g, s) = matrix_to_graph(m)?;
    is_balanced_signing(&g, &s, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_ones_2x2_is_balanced() {
        let m = SignedMatrix::new(vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert!(is_balanced_matrix(&m, &Limits::DEFAULT).unwrap());
    }

    #[test]
    fn six_hole_matrix() {
        let mut rows = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        let m = SignedMatrix::new(rows.clone()).unwrap();
        assert!(!is_balanced_matrix(&m, &Limits::DEFAULT).unwrap());
        rows[0][0] = -1;
        let m = SignedMatrix::new(rows).unwrap();
        assert!(is_balanced_matrix(&m, &Limits::DEFAULT).unwrap());
    }

    #[test]
    fn csv_headers_and_roundtrip() {
        let m = SignedMatrix::parse_csv("!,a,b\n!x,1,-1\n!y,0,1\n").unwrap();
        assert_eq!(m.col_names, vec!["a", "b"]);
        assert_eq!(m.row_names, vec!["x", "y"]);
        assert_eq!(m.entries, vec![vec![1, -1], vec![0, 1]]);
        assert_eq!(SignedMatrix::parse_csv(&m.to_csv()).unwrap(), m);
        let (g, s) = matrix_to_graph(&m).unwrap();
        assert_eq!(graph_to_matrix(&g, &s).unwrap(), m);
    }

    #[test]
    fn bad_entries() {
        assert!(matches!(
            SignedMatrix::parse_csv("1,2\n"),
            Err(Error::BadEntry { row: 1, col: 2, .. })
        ));
        assert!(SignedMatrix::parse_csv("1,x\n").is_err());
    }

    #[test]
    fn plain_csv() {
        let m = SignedMatrix::parse_csv("1,0\n0,1\n").unwrap();
        assert_eq!(m.row_names, vec!["r1", "r2"]);
        assert_eq!(m.col_names, vec!["c1", "c2"]);
    }
}
