//! Tie-breaking orders for the approximation algorithms.

use std::fmt::Write as _;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Color;

/// Sequence in which edges (or matroid elements), vertices and colors are scanned.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Order {
    #[default]
    Ascending,
    /// Edges and vertices in descending index order; colors stay ascending.
    Descending,
    /// Seeded shuffle of edges and vertices; colors stay ascending.
    Random(u64),
    /// Explicit permutations. A missing entry falls back to ascending order.
    Explicit {
        edges: Option<Vec<usize>>,
        vertices: Option<Vec<usize>>,
        colors: Option<Vec<usize>>,
    },
}

fn check_permutation(what: &str, seq: &[usize], len: usize) -> Result<()> {
    let mut seen = vec![false; len];
    for &x in seq {
        if x >= len || std::mem::replace(&mut seen[x], true) {
            return Err(Error::InvalidOrder(format!(
                "{what} sequence is not a permutation of 0..{len}"
            )));
        }
    }
    if seq.len() != len {
        return Err(Error::InvalidOrder(format!(
            "{what} sequence has {} entries, expected {len}",
            seq.len()
        )));
    }
    Ok(())
}

impl Order {
    pub fn edges(seq: Vec<usize>) -> Self {
        Order::Explicit {
            edges: Some(seq),
            vertices: None,
            colors: None,
        }
    }

    /// Scan order over `m` edges or matroid elements.
    pub fn edge_sequence(&self, m: usize) -> Result<Vec<usize>> {
        self.sequence(
            m,
            0,
            |o| match o {
                Order::Explicit { edges, .. } => edges.as_deref(),
                _ => None,
            },
            "edge",
        )
    }

    /// Scan order over `n` vertices.
    pub fn vertex_sequence(&self, n: usize) -> Result<Vec<usize>> {
        self.sequence(
            n,
            1,
            |o| match o {
                Order::Explicit { vertices, .. } => vertices.as_deref(),
                _ => None,
            },
            "vertex",
        )
    }

    fn sequence(
        &self,
        len: usize,
        stream: u64,
        pick: impl Fn(&Order) -> Option<&[usize]>,
        what: &str,
    ) -> Result<Vec<usize>> {
        let mut seq: Vec<usize> = (0..len).collect();
        match self {
            Order::Ascending => {}
            Order::Descending => seq.reverse(),
            Order::Random(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                rng.set_stream(stream);
                seq.shuffle(&mut rng);
            }
            Order::Explicit { .. } => {
                if let Some(given) = pick(self) {
                    check_permutation(what, given, len)?;
                    seq = given.to_vec();
                }
            }
        }
        Ok(seq)
    }

    /// Order in which the used colors are visited.
    pub fn color_sequence(&self, used: &[Color]) -> Result<Vec<Color>> {
        match self {
            Order::Explicit {
                colors: Some(given),
                ..
            } => {
                let mut want: Vec<usize> = used.iter().map(|c| c.0).collect();
                want.sort_unstable();
                let mut got = given.clone();
                got.sort_unstable();
                if got != want {
                    return Err(Error::InvalidOrder(format!(
                        "color sequence {given:?} does not list the used colors {want:?}"
                    )));
                }
                Ok(given.iter().map(|&c| Color(c)).collect())
            }
            _ => {
                let mut seq = used.to_vec();
                seq.sort_unstable();
                Ok(seq)
            }
        }
    }

    /// Parses an order file: lines `edges ...`, `vertices ...`, `colors ...`, `#` comments.
    pub fn from_file_str(text: &str) -> Result<Self> {
        let (mut edges, mut vertices, mut colors) = (None, None, None);
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let key = tokens.next().unwrap_or_default();
            let values = tokens
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line: i + 1,
                        message: format!("expected a non-negative integer, found {t:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let slot = match key {
                "edges" | "elements" => &mut edges,
                "vertices" => &mut vertices,
                "colors" => &mut colors,
                other => {
                    return Err(Error::Parse {
                        line: i + 1,
                        message: format!("unknown order key {other:?}"),
                    })
                }
            };
            if slot.replace(values).is_some() {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("duplicate {key} line"),
                });
            }
        }
        Ok(Order::Explicit {
            edges,
            vertices,
            colors,
        })
    }

    pub fn to_file_string(&self, m: usize, n: usize, used: &[Color]) -> Result<String> {
        let mut out = String::new();
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        writeln!(out, "edges {}", join(&self.edge_sequence(m)?)).unwrap();
        writeln!(out, "vertices {}", join(&self.vertex_sequence(n)?)).unwrap();
        let colors: Vec<usize> = self.color_sequence(used)?.iter().map(|c| c.0).collect();
        writeln!(out, "colors {}", join(&colors)).unwrap();
        Ok(out)
    }
}

impl FromStr for Order {
    type Err = Error;

    /// Accepts `asc`, `desc` and `random:<seed>`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "asc" | "ascending" => Ok(Order::Ascending),
            "desc" | "descending" => Ok(Order::Descending),
            _ => s
                .strip_prefix("random:")
                .and_then(|seed| seed.parse().ok())
                .map(Order::Random)
                .ok_or_else(|| Error::InvalidOrder(format!("unrecognized order {s:?}"))),
        }
    }
}
