//! Graph files.
//!
//! JSON: `{"n": 4, "edges": [[0,1],...], "split": {"clique": [...],
//! "stable": [...]}, "threshold_sequence": ["I","D",...]}` with the last two
//! keys optional. Nodes are 0-based. A threshold sequence in a file creates
//! node `i` at step `i`.
//!
//! Edge-list text: the node count, then one `u v` pair per line. Blank lines
//! and lines starting with `#` are ignored.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, SplitCert, Step, ThresholdSeq};
use crate::nodeset::NodeSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitJson {
    pub clique: Vec<usize>,
    pub stable: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threshold_sequence: Option<Vec<String>>,
}

/// A graph as read from a file, with whatever structure the file declared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    pub graph: Graph,
    pub split: Option<SplitCert>,
    pub threshold: Option<ThresholdSeq>,
}

impl GraphSpec {
    pub fn plain(graph: Graph) -> Self {
        GraphSpec {
            graph,
            split: None,
            threshold: None,
        }
    }
}

fn node_set(n: usize, nodes: &[usize]) -> Result<NodeSet> {
    nodes
        .iter()
        .map(|&v| {
            if v < n {
                Ok(v)
            } else {
                Err(Error::NodeOutOfRange { node: v, n })
            }
        })
        .collect()
}

impl GraphJson {
    pub fn from_parts(g: &Graph, split: Option<&SplitCert>, seq: Option<&ThresholdSeq>) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            split: split.map(|c| SplitJson {
                clique: c.clique.to_vec(),
                stable: c.stable.to_vec(),
            }),
            threshold_sequence: seq
                .filter(|s| s.is_identity_order())
                .map(|s| s.steps().iter().map(|st| st.letter().to_string()).collect()),
        }
    }

    /// Validates and converts; declared split or threshold data must match
    /// the edges.
    pub fn into_spec(self) -> Result<GraphSpec> {
        let graph = Graph::from_edges(self.n, self.edges.iter().map(|e| (e[0], e[1])))?;
        let split = match self.split {
            Some(s) => {
                let cert = SplitCert {
                    clique: node_set(self.n, &s.clique)?,
                    stable: node_set(self.n, &s.stable)?,
                };
                cert.validate(&graph)?;
                Some(cert)
            }
            None => None,
        };
        let threshold = match self.threshold_sequence {
            Some(letters) => {
                let steps = letters
                    .iter()
                    .map(|l| match l.as_str() {
                        "I" => Ok(Step::Isolated),
                        "D" => Ok(Step::Dominating),
                        other => Err(Error::Parse(format!("unknown threshold step {other:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                let seq = ThresholdSeq::new(steps);
                seq.validate(&graph)?;
                Some(seq)
            }
            None => None,
        };
        Ok(GraphSpec {
            graph,
            split,
            threshold,
        })
    }
}

pub fn parse_json(text: &str) -> Result<GraphSpec> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    raw.into_spec()
}

pub fn parse_edge_list(text: &str) -> Result<GraphSpec> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing node count".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::Parse(format!("bad node count {header:?}")))?;
    let mut g = Graph::empty(n)?;
    for line in lines {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => g.add_edge(u, v)?,
            _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
        }
    }
    Ok(GraphSpec::plain(g))
}

/// JSON when the text starts with `{`, edge list otherwise.
pub fn parse_graph(text: &str) -> Result<GraphSpec> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}
