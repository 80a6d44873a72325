//! Instance file formats: plain-text edge lists (rudy/Gset convention) and a
//! JSON form carrying the generator seed.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::{CouplingMatrix, IsingError, MaxCutInstance, Result};

/// Write the edge-list format: header `<n> <m>`, then one `i j w` triple per
/// nonzero upper-triangle weight, 1-indexed.
pub fn write_edge_list<W: Write>(inst: &MaxCutInstance, mut out: W) -> Result<()> {
    let n = inst.n();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let w = inst.weight(i, j);
            if w != 0 {
                edges.push((i + 1, j + 1, w));
            }
        }
    }
    writeln!(out, "{} {}", n, edges.len())?;
    for (i, j, w) in edges {
        writeln!(out, "{} {} {}", i, j, w)?;
    }
    Ok(())
}

/// Read the edge-list format written by [`write_edge_list`].
pub fn read_edge_list<R: BufRead>(input: R) -> Result<MaxCutInstance> {
    let mut lines = input.lines().enumerate();
    let (n, m) = loop {
        let (lineno, line) = lines.next().ok_or_else(|| IsingError::Parse {
            line: 1,
            msg: "missing header".into(),
        })?;
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let mut it = t.split_whitespace();
        let n: usize = parse_field(it.next(), lineno + 1, "node count")?;
        let m: usize = parse_field(it.next(), lineno + 1, "edge count")?;
        break (n, m);
    };

    let mut weights = CouplingMatrix::zeros(n);
    let mut seen = 0usize;
    for (lineno, line) in lines {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let mut it = t.split_whitespace();
        let i: usize = parse_field(it.next(), lineno + 1, "node index")?;
        let j: usize = parse_field(it.next(), lineno + 1, "node index")?;
        let w: i64 = parse_field(it.next(), lineno + 1, "weight")?;
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(IsingError::Parse {
                line: lineno + 1,
                msg: format!("edge ({i}, {j}) out of range for n = {n}"),
            });
        }
        if !(-1..=1).contains(&w) {
            return Err(IsingError::InvalidEntry {
                i: i - 1,
                j: j - 1,
                value: w,
            });
        }
        weights.set_pair(i - 1, j - 1, w as i8);
        seen += 1;
    }
    if seen != m {
        return Err(IsingError::Parse {
            line: 0,
            msg: format!("header promised {m} edges, found {seen}"),
        });
    }
    Ok(MaxCutInstance::from_weights(weights))
}

fn parse_field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| IsingError::Parse {
        line,
        msg: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| IsingError::Parse {
        line,
        msg: format!("bad {what}: {tok:?}"),
    })
}

/// JSON instance form: node count, optional generator seed, and the nonzero
/// weights as 1-indexed `[i, j, w]` triples.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceJson {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub edges: Vec<(usize, usize, i8)>,
}

impl InstanceJson {
    pub fn from_instance(inst: &MaxCutInstance, seed: Option<u64>) -> Self {
        let n = inst.n();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let w = inst.weight(i, j);
                if w != 0 {
                    edges.push((i + 1, j + 1, w));
                }
            }
        }
        Self { n, seed, edges }
    }

    pub fn to_instance(&self) -> Result<MaxCutInstance> {
        let mut weights = CouplingMatrix::zeros(self.n);
        for &(i, j, w) in &self.edges {
            if i == 0 || j == 0 || i > self.n || j > self.n || i == j {
                return Err(IsingError::Parse {
                    line: 0,
                    msg: format!("edge ({i}, {j}) out of range for n = {}", self.n),
                });
            }
            weights.set_pair(i - 1, j - 1, w);
        }
        Ok(MaxCutInstance::from_weights(weights))
    }
}

pub fn write_json<W: Write>(inst: &MaxCutInstance, seed: Option<u64>, out: W) -> Result<()> {
    serde_json::to_writer_pretty(out, &InstanceJson::from_instance(inst, seed))?;
    Ok(())
}

pub fn read_json<R: std::io::Read>(input: R) -> Result<MaxCutInstance> {
    let parsed: InstanceJson = serde_json::from_reader(input)?;
    parsed.to_instance()
}
