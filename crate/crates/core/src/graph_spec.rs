//! Textual graph descriptors.
//!
//! ```text
//! path:N | cycle:N | complete:N | star:N | tree:FILE | edges:FILE
//! product:SPEC,SPEC[,SPEC...]
//! ```
//!
//! Keywords are case-insensitive. Edge files hold one `u v` pair per line with
//! 0-based indices; blank lines and `#` comments are ignored.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Tree(PathBuf),
    Edges(PathBuf),
    Product(Vec<GraphSpec>),
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Path(n) => Graph::path(*n),
            GraphSpec::Cycle(n) => Graph::cycle(*n),
            GraphSpec::Complete(n) => Graph::complete(*n),
            GraphSpec::Star(n) => Graph::star(*n),
            GraphSpec::Tree(file) => Graph::tree(&read_edge_file(file)?),
            GraphSpec::Edges(file) => {
                let edges = read_edge_file(file)?;
                let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(1);
                Graph::from_edges(n, &edges)
            }
            GraphSpec::Product(parts) => {
                let mut iter = parts.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| Error::InvalidArgument("empty product".into()))?;
                iter.try_fold(first.build()?, |acc, s| {
                    Graph::cartesian_product(&acc, &s.build()?)
                })
            }
        }
    }
}

fn parse_count(kind: &str, arg: &str) -> Result<usize> {
    arg.trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("{kind}: expected a vertex count, got {arg:?}")))
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some((kind, arg)) = s.split_once(':') else {
            return invalid(format!("graph spec {s:?} is missing ':'"));
        };
        let kind = kind.trim().to_ascii_lowercase();
        match kind.as_str() {
            "path" => Ok(GraphSpec::Path(parse_count("path", arg)?)),
            "cycle" => Ok(GraphSpec::Cycle(parse_count("cycle", arg)?)),
            "complete" => Ok(GraphSpec::Complete(parse_count("complete", arg)?)),
            "star" => Ok(GraphSpec::Star(parse_count("star", arg)?)),
            "tree" => Ok(GraphSpec::Tree(PathBuf::from(arg.trim()))),
            "edges" => Ok(GraphSpec::Edges(PathBuf::from(arg.trim()))),
            "product" => {
                let parts = arg
                    .split(',')
                    .map(str::parse::<GraphSpec>)
                    .collect::<Result<Vec<_>>>()?;
                if parts.len() < 2 {
                    return invalid("product needs at least two factors");
                }
                Ok(GraphSpec::Product(parts))
            }
            other => invalid(format!("unknown graph family {other:?}")),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Complete(n) => write!(f, "complete:{n}"),
            GraphSpec::Star(n) => write!(f, "star:{n}"),
            GraphSpec::Tree(p) => write!(f, "tree:{}", p.display()),
            GraphSpec::Edges(p) => write!(f, "edges:{}", p.display()),
            GraphSpec::Product(parts) => {
                f.write_str("product:")?;
                for (k, p) in parts.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

pub fn read_edge_file(path: &Path) -> Result<Vec<(usize, usize)>> {
    parse_edge_list(&fs::read_to_string(path)?)
}

pub fn parse_edge_list(text: &str) -> Result<Vec<(usize, usize)>> {
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<_> = line.split_whitespace().collect();
        let parsed = match fields.as_slice() {
            [u, v] => u.parse().ok().zip(v.parse().ok()),
            _ => None,
        };
        match parsed {
            Some(e) => edges.push(e),
            None => return invalid(format!("line {}: expected \"u v\", got {line:?}", lineno + 1)),
        }
    }
    Ok(edges)
}
