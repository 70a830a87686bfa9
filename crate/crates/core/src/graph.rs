//! Simple graphs on at most 63 nodes, split and threshold structure, and
//! the `G ⋉ T` composition.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::nodeset::{NodeSet, MAX_NODES};

/// A finite simple graph. `adj[v]` is the neighborhood of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<NodeSet>,
}

impl Graph {
    /// The edgeless graph on `n` nodes.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_NODES {
            return Err(Error::TooManyNodes(n));
        }
        Ok(Graph {
            n,
            adj: vec![NodeSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from neighborhoods, checking loops, range and symmetry.
    pub fn from_adjacency(adj: Vec<NodeSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_NODES {
            return Err(Error::TooManyNodes(n));
        }
        let all = NodeSet::range(n);
        for (v, &nb) in adj.iter().enumerate() {
            if nb.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            if !nb.is_subset(all) {
                let node = (nb - all).first().unwrap_or(n);
                return Err(Error::NodeOutOfRange { node, n });
            }
            for u in nb {
                if !adj[u].contains(v) {
                    return Err(Error::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = NodeSet::range(n);
        for v in 0..n {
            g.adj[v] = all.without(v);
        }
        Ok(g)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut g = Graph::path(n)?;
        if n >= 3 {
            g.add_edge(n - 1, 0)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n;
        for node in [u, v] {
            if node >= n {
                return Err(Error::NodeOutOfRange { node, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn nodes(&self) -> NodeSet {
        NodeSet::range(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> NodeSet {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[NodeSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - NodeSet::range(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Union of the neighborhoods of `set`.
    pub fn neighborhood(&self, set: NodeSet) -> NodeSet {
        set.iter().fold(NodeSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    pub fn is_clique(&self, set: NodeSet) -> bool {
        set.iter().all(|v| (set.without(v)).is_subset(self.adj[v]))
    }

    pub fn is_stable(&self, set: NodeSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Relabels node `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union with `other`, whose nodes are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let shift = self.n;
        let mut g = Graph::empty(self.n + other.n)?;
        g.adj[..shift].copy_from_slice(&self.adj);
        for (v, nb) in other.adj.iter().enumerate() {
            g.adj[shift + v] = NodeSet::from_bits(nb.bits() << shift);
        }
        Ok(g)
    }

    /// Some 4-set inducing a path on four nodes, if any.
    pub fn induced_p4(&self) -> Option<[usize; 4]> {
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let quad = [a, b, c, d];
                        let set = NodeSet::from_iter(quad);
                        let mut degs = quad.map(|v| (self.adj[v] & set).len());
                        degs.sort_unstable();
                        // 3 edges with degrees (1,1,2,2) is exactly P4
                        if degs == [1, 1, 2, 2] {
                            return Some(quad);
                        }
                    }
                }
            }
        }
        None
    }

    /// Canonical code under isomorphism: the minimum upper-triangle adjacency
    /// word over all relabelings that list nodes by nonincreasing degree.
    ///
    /// Only defined for graphs on at most 8 nodes.
    pub fn canonical_code(&self) -> Result<u64> {
        const CAP: usize = 8;
        if self.n > CAP {
            return Err(Error::Capacity("canonical form", CAP));
        }
        let n = self.n;
        let mut by_degree: Vec<usize> = (0..n).collect();
        by_degree.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        // maximal runs of equal degree
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &v in &by_degree {
            match blocks.last_mut() {
                Some(b) if self.degree(b[0]) == self.degree(v) => b.push(v),
                _ => blocks.push(vec![v]),
            }
        }
        let mut best = u64::MAX;
        let mut order = Vec::with_capacity(n);
        self.canonical_search(&blocks, 0, &mut order, &mut best);
        Ok(best)
    }

    fn canonical_search(
        &self,
        blocks: &[Vec<usize>],
        block: usize,
        order: &mut Vec<usize>,
        best: &mut u64,
    ) {
        if block == blocks.len() {
            let mut code = 0u64;
            let mut bit = 0;
            for i in 0..order.len() {
                for j in i + 1..order.len() {
                    if self.has_edge(order[i], order[j]) {
                        code |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            *best = (*best).min(code);
            return;
        }
        let mut items = blocks[block].clone();
        for_each_permutation(&mut items, &mut |perm| {
            let len = order.len();
            order.extend_from_slice(perm);
            self.canonical_search(blocks, block + 1, order, best);
            order.truncate(len);
        });
    }
}

/// Heap's algorithm.
fn for_each_permutation(items: &mut [usize], f: &mut dyn FnMut(&[usize])) {
    let n = items.len();
    let mut c = vec![0usize; n];
    f(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// The complement graph: same nodes, edges exactly where `g` has none.
pub fn complement(g: &Graph) -> Graph {
    let all = g.nodes();
    Graph {
        n: g.n,
        adj: (0..g.n).map(|v| (all - g.adj[v]).without(v)).collect(),
    }
}

/// Partition of the node set into a clique and a stable set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SplitCert {
    pub clique: NodeSet,
    pub stable: NodeSet,
}

impl SplitCert {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if !self.clique.is_disjoint(self.stable) {
            return Err(Error::InvalidSplit("clique and stable side overlap".into()));
        }
        if self.clique | self.stable != g.nodes() {
            return Err(Error::InvalidSplit("sides do not cover the node set".into()));
        }
        if !g.is_clique(self.clique) {
            return Err(Error::InvalidSplit(format!(
                "{} is not a clique",
                self.clique
            )));
        }
        if !g.is_stable(self.stable) {
            return Err(Error::InvalidSplit(format!(
                "{} is not stable",
                self.stable
            )));
        }
        Ok(())
    }

    /// The certificate of the complement graph: the two sides swap roles.
    pub fn swapped(&self) -> SplitCert {
        SplitCert {
            clique: self.stable,
            stable: self.clique,
        }
    }
}

/// Finds a split partition, preferring a maximum clique side and, among
/// those, the lexicographically smallest one.
pub fn recognize_split(g: &Graph) -> Option<SplitCert> {
    let n = g.n;
    let all = g.nodes();
    // Hammer-Simeone: with degrees d_1 >= ... >= d_n and m = max{i : d_i >= i-1},
    // the m highest-degree nodes form a clique of a split partition if any exists.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = order
        .iter()
        .enumerate()
        .filter(|&(i, &v)| g.degree(v) >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let base = NodeSet::from_iter(order[..m].iter().copied());
    let base_cert = SplitCert {
        clique: base,
        stable: all - base,
    };
    if base_cert.validate(g).is_err() {
        return None;
    }
    // Every maximal clique of a split graph is the clique side or N[s] for s stable.
    let mut candidates = vec![base];
    for s in base_cert.stable {
        let closed = g.adj[s].with(s);
        if g.is_clique(closed) {
            candidates.push(closed);
        }
    }
    let omega = candidates.iter().map(|c| c.len()).max().unwrap_or(0);
    candidates
        .into_iter()
        .filter(|&c| c.len() == omega && g.is_stable(all - c))
        .min_by(|a, b| a.lex_cmp(*b))
        .map(|clique| SplitCert {
            clique,
            stable: all - clique,
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Isolated,
    Dominating,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::Isolated => 'I',
            Step::Dominating => 'D',
        }
    }
}

/// Creation sequence of a threshold graph. Node `order[i]` is added at step
/// `i`, isolated or dominating according to `steps[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThresholdSeq {
    steps: Vec<Step>,
    order: Vec<usize>,
}

impl ThresholdSeq {
    /// Sequence where node `i` is created at step `i`.
    pub fn new(steps: Vec<Step>) -> Self {
        let order = (0..steps.len()).collect();
        ThresholdSeq { steps, order }
    }

    pub fn with_order(steps: Vec<Step>, order: Vec<usize>) -> Result<Self> {
        if steps.len() != order.len() {
            return Err(Error::InvalidThreshold(
                "steps and order differ in length".into(),
            ));
        }
        let mut seen = NodeSet::EMPTY;
        for &v in &order {
            if v >= order.len() || seen.contains(v) {
                return Err(Error::InvalidThreshold("order is not a permutation".into()));
            }
            seen.insert(v);
        }
        Ok(ThresholdSeq { steps, order })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_identity_order(&self) -> bool {
        self.order.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Nodes added as dominating; a clique.
    pub fn clique_nodes(&self) -> NodeSet {
        self.nodes_with(Step::Dominating)
    }

    /// Nodes added as isolated; a stable set.
    pub fn stable_nodes(&self) -> NodeSet {
        self.nodes_with(Step::Isolated)
    }

    fn nodes_with(&self, step: Step) -> NodeSet {
        self.steps
            .iter()
            .zip(&self.order)
            .filter(|(&s, _)| s == step)
            .map(|(_, &v)| v)
            .collect()
    }

    pub fn to_letters(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    /// Checks that replaying the sequence yields exactly `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::InvalidThreshold(format!(
                "sequence of length {} for a graph on {} nodes",
                self.len(),
                g.n()
            )));
        }
        if build_threshold(self)? != *g {
            return Err(Error::InvalidThreshold(
                "sequence does not rebuild the graph".into(),
            ));
        }
        Ok(())
    }
}

/// Replays a creation sequence.
pub fn build_threshold(seq: &ThresholdSeq) -> Result<Graph> {
    let mut g = Graph::empty(seq.len())?;
    let mut placed = NodeSet::EMPTY;
    for (&step, &v) in seq.steps.iter().zip(&seq.order) {
        if step == Step::Dominating {
            for u in placed {
                g.add_edge(u, v)?;
            }
        }
        placed.insert(v);
    }
    Ok(g)
}

/// Recovers a creation sequence by repeatedly peeling the highest-index node
/// that is isolated or dominating in what remains (isolated wins ties).
pub fn recognize_threshold(g: &Graph) -> Option<ThresholdSeq> {
    let mut remaining = g.nodes();
    let mut steps = Vec::with_capacity(g.n);
    let mut order = Vec::with_capacity(g.n);
    while !remaining.is_empty() {
        let mut picked = None;
        for v in (0..g.n).rev().filter(|&v| remaining.contains(v)) {
            let nb = g.adj[v] & remaining;
            if nb.is_empty() {
                picked = Some((v, Step::Isolated));
            } else if nb == remaining.without(v) {
                picked = Some((v, Step::Dominating));
            }
            if picked.is_some() {
                break;
            }
        }
        let (v, step) = picked?;
        steps.push(step);
        order.push(v);
        remaining.remove(v);
    }
    steps.reverse();
    order.reverse();
    Some(ThresholdSeq { steps, order })
}

/// `G ⋉ T`: disjoint union of `g` and `t` plus every edge between the clique
/// side of `g` and the nodes of `t`. Nodes of `t` are shifted by `g.n()`.
pub fn ltimes(
    g: &Graph,
    cert: &SplitCert,
    t: &Graph,
    tseq: &ThresholdSeq,
) -> Result<(Graph, SplitCert)> {
    cert.validate(g)?;
    tseq.validate(t)?;
    let shift = g.n();
    let mut out = g.disjoint_union(t)?;
    for c in cert.clique {
        for v in 0..t.n() {
            out.add_edge(c, shift + v)?;
        }
    }
    let lift = |s: NodeSet| NodeSet::from_bits(s.bits() << shift);
    let out_cert = SplitCert {
        clique: cert.clique | lift(tseq.clique_nodes()),
        stable: cert.stable | lift(tseq.stable_nodes()),
    };
    debug_assert!(out_cert.validate(&out).is_ok());
    Ok((out, out_cert))
}

/// SplitMix64 (Steele, Lea & Flood): `state += 0x9E3779B97F4A7C15`, then
/// `z = (z ^ z>>30) * 0xBF58476D1CE4E5B9`, `z = (z ^ z>>27) * 0x94D049BB133111EB`,
/// output `z ^ z>>31`. Fully specified so seeded outputs are portable.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..bound` by rejection; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }
}

/// Random split graph: nodes `0..k` form the clique, `k..k+l` the stable
/// set, and each clique/stable pair is joined with probability `p`. Pairs are
/// drawn clique-major, one generator output each.
pub fn random_split(k: usize, l: usize, p: f64, seed: u64) -> Result<(Graph, SplitCert)> {
    if k + l > MAX_NODES {
        return Err(Error::TooManyNodes(k + l));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Probability(p));
    }
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::complete(k)?.disjoint_union(&Graph::empty(l)?)?;
    for c in 0..k {
        for s in k..k + l {
            if rng.next_f64() < p {
                g.add_edge(c, s)?;
            }
        }
    }
    let cert = SplitCert {
        clique: NodeSet::range(k),
        stable: NodeSet::range(k + l) - NodeSet::range(k),
    };
    Ok((g, cert))
}

/// Random threshold creation sequence on `m` nodes, identity order.
pub fn random_threshold(m: usize, seed: u64) -> ThresholdSeq {
    let mut rng = SplitMix64::new(seed);
    let steps = (0..m)
        .map(|_| {
            if rng.coin() {
                Step::Dominating
            } else {
                Step::Isolated
            }
        })
        .collect();
    ThresholdSeq::new(steps)
}

/// Orders graphs by node count, then canonical code.
pub fn canonical_cmp(a: &Graph, b: &Graph) -> Ordering {
    a.n.cmp(&b.n).then_with(|| {
        a.canonical_code()
            .unwrap_or(u64::MAX)
            .cmp(&b.canonical_code().unwrap_or(u64::MAX))
    })
}
