//! Signed vertex and facet descriptions of Hansen polytopes and their
//! vertex-facet incidence structure.
//!
//! A stable set `I` of `G` gives the vertex pair `±(e_0 + Σ_{i∈I} e_i)`. A
//! clique `Q` gives the facet pair `[ε, Q] = {x : -x_0 + 2 Σ_{i∈Q} x_i = ε}`.
//! Vertex `(ε, I)` lies on facet `[ε', Q]` exactly when the signs agree and
//! `I` meets `Q`, or the signs differ and `I`, `Q` are disjoint.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::{complement, recognize_split, Graph};
use crate::nodeset::NodeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    #[inline]
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    #[inline]
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A sign with a node subset. Orders by sign, then numeric value of the set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedSet {
    pub sign: Sign,
    pub members: NodeSet,
}

impl SignedSet {
    pub fn new(sign: Sign, members: NodeSet) -> Self {
        SignedSet { sign, members }
    }

    pub fn flipped(self) -> Self {
        SignedSet {
            sign: self.sign.flip(),
            members: self.members,
        }
    }

    /// Coordinates of the vertex `ε (e_0 + Σ_{i∈I} e_i)` in dimension `n + 1`.
    pub fn vertex_point(&self, n: usize) -> Vec<i64> {
        let e = self.sign.value();
        let mut x = vec![0; n + 1];
        x[0] = e;
        for i in self.members {
            x[i + 1] = e;
        }
        x
    }
}

impl fmt::Display for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.sign.symbol(), self.members)
    }
}

/// Set-level incidence rule.
#[inline]
pub fn incident(vertex: &SignedSet, facet: &SignedSet) -> bool {
    let meet = vertex.members.intersects(facet.members);
    if vertex.sign == facet.sign {
        meet
    } else {
        !meet
    }
}

/// Value of the facet functional `-x_0 + 2 Σ_{i∈Q} x_i` at a vertex point.
/// The vertex lies on `[ε', Q]` iff this equals `ε'`.
pub fn facet_functional(point: &[i64], clique: NodeSet) -> i64 {
    -point[0] + 2 * clique.iter().map(|i| point[i + 1]).sum::<i64>()
}

/// All stable sets, `∅` included, in increasing numeric order.
pub fn stable_sets(g: &Graph) -> Vec<NodeSet> {
    let mut out = Vec::new();
    extend_stable(g, 0, NodeSet::EMPTY, NodeSet::EMPTY, &mut out);
    out.sort_unstable();
    out
}

// Backtracking: `blocked` holds the neighbors of `current`.
fn extend_stable(g: &Graph, v: usize, current: NodeSet, blocked: NodeSet, out: &mut Vec<NodeSet>) {
    if v == g.n() {
        out.push(current);
        return;
    }
    extend_stable(g, v + 1, current, blocked, out);
    if !blocked.contains(v) {
        extend_stable(g, v + 1, current.with(v), blocked | g.neighbors(v), out);
    }
}

/// All cliques, `∅` included, in increasing numeric order.
pub fn cliques(g: &Graph) -> Vec<NodeSet> {
    stable_sets(&complement(g))
}

pub fn hansen_vertices(g: &Graph) -> Vec<SignedSet> {
    signed_pairs(&stable_sets(g))
}

fn signed_pairs(sets: &[NodeSet]) -> Vec<SignedSet> {
    Sign::BOTH
        .iter()
        .flat_map(|&sign| sets.iter().map(move |&m| SignedSet::new(sign, m)))
        .collect()
}

/// Whether the clique inequalities may be trusted as the facet description.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Perfectness {
    /// Require the graph to be split (and hence perfect).
    #[default]
    RequireSplit,
    /// Caller vouches that the graph is perfect.
    Assume,
}

impl Perfectness {
    fn check(self, g: &Graph) -> Result<()> {
        match self {
            Perfectness::Assume => Ok(()),
            Perfectness::RequireSplit if recognize_split(g).is_some() => Ok(()),
            Perfectness::RequireSplit => Err(Error::NotSplit),
        }
    }
}

pub fn hansen_facets(g: &Graph, perfect: Perfectness) -> Result<Vec<SignedSet>> {
    perfect.check(g)?;
    Ok(signed_pairs(&cliques(g)))
}

/// Vertex-facet incidences of a polytope whose vertices and facets are
/// labelled by signed sets.
#[derive(Clone, Debug)]
pub struct IncidenceStructure {
    graph: Option<Graph>,
    vertices: Vec<SignedSet>,
    facets: Vec<SignedSet>,
    /// per vertex: the facets containing it
    vertex_rows: Vec<BitSet>,
    /// per facet: the vertices on it
    facet_rows: Vec<BitSet>,
    vertex_index: HashMap<SignedSet, usize>,
    facet_index: HashMap<SignedSet, usize>,
}

impl IncidenceStructure {
    /// Builds and validates a structure from an explicit matrix,
    /// `matrix[v][f]` true iff vertex `v` lies on facet `f`.
    pub fn from_matrix(
        vertices: Vec<SignedSet>,
        facets: Vec<SignedSet>,
        matrix: &[Vec<bool>],
    ) -> Result<Self> {
        if matrix.len() != vertices.len() || matrix.iter().any(|r| r.len() != facets.len()) {
            return Err(Error::InvalidIncidence("matrix shape mismatch".into()));
        }
        let (nv, nf) = (vertices.len(), facets.len());
        let mut vertex_rows = vec![BitSet::new(nf); nv];
        let mut facet_rows = vec![BitSet::new(nv); nf];
        for (v, row) in matrix.iter().enumerate() {
            for (f, &on) in row.iter().enumerate() {
                if on {
                    vertex_rows[v].insert(f);
                    facet_rows[f].insert(v);
                }
            }
        }
        let s = Self::assemble(None, vertices, facets, vertex_rows, facet_rows)?;
        s.validate()?;
        Ok(s)
    }

    fn assemble(
        graph: Option<Graph>,
        vertices: Vec<SignedSet>,
        facets: Vec<SignedSet>,
        vertex_rows: Vec<BitSet>,
        facet_rows: Vec<BitSet>,
    ) -> Result<Self> {
        let index = |list: &[SignedSet], what: &str| -> Result<HashMap<SignedSet, usize>> {
            let mut map = HashMap::with_capacity(list.len());
            for (i, s) in list.iter().enumerate() {
                if map.insert(*s, i).is_some() {
                    return Err(Error::InvalidIncidence(format!("duplicate {what} {s}")));
                }
            }
            Ok(map)
        };
        let vertex_index = index(&vertices, "vertex")?;
        let facet_index = index(&facets, "facet")?;
        Ok(IncidenceStructure {
            graph,
            vertices,
            facets,
            vertex_rows,
            facet_rows,
            vertex_index,
            facet_index,
        })
    }

    /// Properness: every facet misses some vertex and contains some vertex.
    pub fn validate(&self) -> Result<()> {
        let nv = self.vertices.len();
        for (f, row) in self.facet_rows.iter().enumerate() {
            let c = row.count();
            if c == 0 || c == nv {
                return Err(Error::InvalidIncidence(format!(
                    "facet {} is incident to {c} of {nv} vertices",
                    self.facets[f]
                )));
            }
        }
        Ok(())
    }

    /// Graph the structure was built from, if any.
    pub fn graph(&self) -> Option<&Graph> {
        self.graph.as_ref()
    }

    pub fn vertices(&self) -> &[SignedSet] {
        &self.vertices
    }

    pub fn facets(&self) -> &[SignedSet] {
        &self.facets
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// Facets containing vertex `v`.
    pub fn vertex_row(&self, v: usize) -> &BitSet {
        &self.vertex_rows[v]
    }

    /// Vertices on facet `f`.
    pub fn facet_row(&self, f: usize) -> &BitSet {
        &self.facet_rows[f]
    }

    pub fn facet_rows(&self) -> &[BitSet] {
        &self.facet_rows
    }

    #[inline]
    pub fn is_incident(&self, v: usize, f: usize) -> bool {
        self.vertex_rows[v].contains(f)
    }

    pub fn vertex_index(&self, s: &SignedSet) -> Option<usize> {
        self.vertex_index.get(s).copied()
    }

    pub fn facet_index(&self, s: &SignedSet) -> Option<usize> {
        self.facet_index.get(s).copied()
    }

    /// Ambient dimension `n + 1` when built from a graph on `n` nodes.
    pub fn ambient_dim(&self) -> Option<usize> {
        self.graph.as_ref().map(|g| g.n() + 1)
    }

    /// Swaps the roles of vertices and facets.
    pub fn transpose(&self) -> IncidenceStructure {
        IncidenceStructure {
            graph: None,
            vertices: self.facets.clone(),
            facets: self.vertices.clone(),
            vertex_rows: self.facet_rows.clone(),
            facet_rows: self.vertex_rows.clone(),
            vertex_index: self.facet_index.clone(),
            facet_index: self.vertex_index.clone(),
        }
    }

    pub fn to_export(&self) -> IncidenceExport {
        let labels = |list: &[SignedSet]| {
            list.iter()
                .map(|s| SignedSetJson {
                    sign: s.sign,
                    members: s.members.to_vec(),
                })
                .collect()
        };
        IncidenceExport {
            vertices: labels(&self.vertices),
            facets: labels(&self.facets),
            rows: self.vertex_rows.iter().map(BitSet::to_hex).collect(),
        }
    }
}

/// Builds the incidence structure of `H(g)` with vertices and facets sorted
/// by (sign, member bits).
pub fn incidence(g: &Graph, perfect: Perfectness) -> Result<IncidenceStructure> {
    let facets = hansen_facets(g, perfect)?;
    let vertices = hansen_vertices(g);
    let (nv, nf) = (vertices.len(), facets.len());
    let mut vertex_rows = vec![BitSet::new(nf); nv];
    let mut facet_rows = vec![BitSet::new(nv); nf];
    for (v, vs) in vertices.iter().enumerate() {
        for (f, fs) in facets.iter().enumerate() {
            if incident(vs, fs) {
                vertex_rows[v].insert(f);
                facet_rows[f].insert(v);
            }
        }
    }
    IncidenceStructure::assemble(Some(g.clone()), vertices, facets, vertex_rows, facet_rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedSetJson {
    pub sign: Sign,
    pub members: Vec<usize>,
}

/// JSON export: labels plus the matrix as one hex string per vertex row
/// (bit `f` set iff the vertex lies on facet `f`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceExport {
    pub vertices: Vec<SignedSetJson>,
    pub facets: Vec<SignedSetJson>,
    pub rows: Vec<String>,
}
