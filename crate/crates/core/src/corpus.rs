//! Graph families for sweeps: split graphs up to isomorphism, all labelled
//! graphs, threshold sequences and seeded random split graphs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{random_split, recognize_split, Graph, SplitCert, SplitMix64, Step, ThresholdSeq};
use crate::nodeset::NodeSet;

/// Node cap for isomorphism-reduced sweeps.
pub const MAX_SWEEP_NODES: usize = 8;

/// One representative of every split graph on at most `max_nodes` nodes,
/// ordered by node count and canonical code, with its canonical certificate.
pub fn split_graphs_up_to_iso(max_nodes: usize) -> Result<Vec<(Graph, SplitCert)>> {
    if max_nodes > MAX_SWEEP_NODES {
        return Err(Error::Capacity("isomorphism-reduced sweep", MAX_SWEEP_NODES));
    }
    let mut reps: BTreeMap<(usize, u64), Graph> = BTreeMap::new();
    for n in 0..=max_nodes {
        for k in 0..=n {
            let pairs: Vec<(usize, usize)> = (0..k)
                .flat_map(|c| (k..n).map(move |s| (c, s)))
                .collect();
            for mask in 0u64..1 << pairs.len() {
                let mut g = Graph::complete(k)?.disjoint_union(&Graph::empty(n - k)?)?;
                for (bit, &(c, s)) in pairs.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        g.add_edge(c, s)?;
                    }
                }
                let code = g.canonical_code()?;
                reps.entry((n, code)).or_insert(g);
            }
        }
    }
    Ok(reps
        .into_values()
        .map(|g| {
            let cert = recognize_split(&g).expect("generated graphs are split");
            (g, cert)
        })
        .collect())
}

/// Every labelled graph on `n` nodes, by edge bitmask over pairs `(u, v)`,
/// `u < v`, in lexicographic pair order.
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    const CAP: usize = 8;
    if n > CAP {
        return Err(Error::Capacity("labelled graph enumeration", CAP));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok((0u64..1 << pairs.len()).map(move |mask| {
        let mut adj = vec![NodeSet::EMPTY; n];
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        Graph::from_adjacency(adj).expect("symmetric by construction")
    }))
}

/// All `2^len` creation sequences of length `len`.
pub fn threshold_sequences(len: usize) -> impl Iterator<Item = ThresholdSeq> {
    (0u64..1 << len).map(move |mask| {
        ThresholdSeq::new(
            (0..len)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Step::Dominating
                    } else {
                        Step::Isolated
                    }
                })
                .collect(),
        )
    })
}

/// Parameters of one seeded random split graph.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomSplitSpec {
    pub k: usize,
    pub l: usize,
    pub p: f64,
    pub seed: u64,
}

impl RandomSplitSpec {
    pub fn build(&self) -> Result<(Graph, SplitCert)> {
        random_split(self.k, self.l, self.p, self.seed)
    }
}

/// `count` random split graphs on 1 to `max_nodes` nodes. Sizes, edge
/// probabilities (a multiple of 1/8 in `[1/8, 7/8]`) and per-graph seeds all
/// come from one generator seeded with `seed`.
pub fn random_split_corpus(count: usize, max_nodes: usize, seed: u64) -> Vec<RandomSplitSpec> {
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| {
            let n = 1 + rng.below(max_nodes as u64) as usize;
            let k = rng.below(n as u64 + 1) as usize;
            let p = (1 + rng.below(7)) as f64 / 8.0;
            RandomSplitSpec {
                k,
                l: n - k,
                p,
                seed: rng.next_u64(),
            }
        })
        .collect()
}
