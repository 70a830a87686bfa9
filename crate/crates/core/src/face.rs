//! Face enumeration on vertex-facet incidence structures.
//!
//! Faces are the Galois-closed vertex sets of the incidence relation: the
//! intersections of facet vertex rows, together with the whole polytope.
//! They are keyed by their vertex set.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::SplitCert;
use crate::hanner::FVector;
use crate::hansen::{IncidenceStructure, Sign};
use crate::rank::Echelon;

pub const DEFAULT_FACE_BUDGET: usize = 50_000_000;

/// Facet limit for the brute-force oracle.
pub const BRUTE_FORCE_MAX_FACETS: usize = 24;

/// A nonempty face: its vertices and the facets containing all of them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    pub vset: BitSet,
    pub fset: BitSet,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCounts {
    pub primitive: u64,
    pub positive: u64,
    pub negative: u64,
    pub small: u64,
}

impl ClassCounts {
    pub fn total(&self) -> u64 {
        self.primitive + self.positive + self.negative + self.small
    }

    fn bump(&mut self, class: FaceClass) {
        match class {
            FaceClass::Primitive => self.primitive += 1,
            FaceClass::Positive => self.positive += 1,
            FaceClass::Negative => self.negative += 1,
            FaceClass::Small => self.small += 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FaceClass {
    /// In no type-(1) facet.
    Primitive,
    /// In type-(1) facets of sign `+` only.
    Positive,
    /// In type-(1) facets of sign `-` only.
    Negative,
    /// In type-(1) facets of both signs.
    Small,
}

/// All nonempty faces, sorted by vertex set, with optional derived counts.
#[derive(Clone, Debug)]
pub struct FaceCensus {
    pub faces: Vec<Face>,
    pub total: u64,
    pub classes: Option<ClassCounts>,
    pub fvec: Option<FVector>,
}

impl FaceCensus {
    fn from_vsets(inc: &IncidenceStructure, vsets: impl IntoIterator<Item = BitSet>) -> Self {
        let mut faces: Vec<Face> = vsets
            .into_iter()
            .map(|vset| {
                let fset = facets_containing(inc, &vset);
                Face { vset, fset }
            })
            .collect();
        faces.sort_unstable();
        FaceCensus {
            total: faces.len() as u64,
            faces,
            classes: None,
            fvec: None,
        }
    }

    /// Sorted hex renderings of all face vertex sets.
    pub fn vset_dump(&self) -> Vec<String> {
        self.faces.iter().map(|f| f.vset.to_hex()).collect()
    }

    pub fn to_export(&self) -> CensusExport {
        CensusExport {
            s: self.total,
            classes: self.classes,
            f_vector: self.fvec.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusExport {
    pub s: u64,
    pub classes: Option<ClassCounts>,
    pub f_vector: Option<FVector>,
}

fn facets_containing(inc: &IncidenceStructure, vset: &BitSet) -> BitSet {
    let mut fset = BitSet::full(inc.num_facets());
    for v in vset.iter() {
        fset.intersect_with(inc.vertex_row(v));
    }
    fset
}

fn vertices_on(inc: &IncidenceStructure, fset: &BitSet) -> BitSet {
    let mut vset = BitSet::full(inc.num_vertices());
    for f in fset.iter() {
        vset.intersect_with(inc.facet_row(f));
    }
    vset
}

/// Smallest face containing `seed`. The seed must be a nonempty vertex set.
pub fn closure(inc: &IncidenceStructure, seed: &BitSet) -> Face {
    assert!(!seed.is_empty(), "closure of the empty vertex set");
    let fset = facets_containing(inc, seed);
    let vset = vertices_on(inc, &fset);
    Face { vset, fset }
}

/// Breadth-first closure expansion from the polytope and the vertices.
///
/// Every face is reached by intersecting a known face with one facet row at
/// a time. Each level is expanded in parallel; the result is sorted so the
/// census does not depend on scheduling.
pub fn enumerate_faces(inc: &IncidenceStructure, budget: usize) -> Result<FaceCensus> {
    let nv = inc.num_vertices();
    if nv == 0 {
        return Ok(FaceCensus::from_vsets(inc, []));
    }
    let mut known: HashSet<BitSet> = HashSet::new();
    let mut frontier: Vec<BitSet> = Vec::new();
    let mut seeds = vec![BitSet::full(nv)];
    seeds.extend((0..nv).map(|v| closure(inc, &BitSet::from_indices(nv, [v])).vset));
    for s in seeds {
        if known.insert(s.clone()) {
            frontier.push(s);
        }
    }
    if known.len() > budget {
        return Err(Error::FaceBudget(budget));
    }
    let rows = inc.facet_rows();
    while !frontier.is_empty() {
        let fresh: HashSet<BitSet> = frontier
            .par_iter()
            .fold(HashSet::new, |mut acc, face| {
                for row in rows {
                    let child = face.intersection(row);
                    if !child.is_empty() && child != *face && !known.contains(&child) {
                        acc.insert(child);
                    }
                }
                acc
            })
            .reduce(HashSet::new, |a, b| {
                let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
                big.extend(small);
                big
            });
        if known.len() + fresh.len() > budget {
            return Err(Error::FaceBudget(budget));
        }
        frontier = fresh.into_iter().collect();
        known.extend(frontier.iter().cloned());
    }
    Ok(FaceCensus::from_vsets(inc, known))
}

/// Independent oracle: intersects every subset of facets.
///
/// Subsets whose intersection is already empty are not extended, since all
/// of their supersets are empty too.
pub fn brute_force_faces(inc: &IncidenceStructure) -> Result<FaceCensus> {
    let nf = inc.num_facets();
    if nf > BRUTE_FORCE_MAX_FACETS {
        return Err(Error::TooManyFacets {
            got: nf,
            max: BRUTE_FORCE_MAX_FACETS,
        });
    }
    let nv = inc.num_vertices();
    let mut found: HashSet<BitSet> = HashSet::new();
    if nv > 0 {
        found.insert(BitSet::full(nv));
        subset_walk(inc, 0, BitSet::full(nv), &mut found);
    }
    Ok(FaceCensus::from_vsets(inc, found))
}

fn subset_walk(inc: &IncidenceStructure, next: usize, current: BitSet, found: &mut HashSet<BitSet>) {
    for f in next..inc.num_facets() {
        let child = current.intersection(inc.facet_row(f));
        if child.is_empty() {
            continue;
        }
        found.insert(child.clone());
        subset_walk(inc, f + 1, child, found);
    }
}

/// Type-(1) facets `[ε, A]` with `A` inside the clique side, by sign.
fn type1_facets(inc: &IncidenceStructure, cert: &SplitCert) -> [BitSet; 2] {
    let mut out = [BitSet::new(inc.num_facets()), BitSet::new(inc.num_facets())];
    for (f, s) in inc.facets().iter().enumerate() {
        if s.members.is_subset(cert.clique) {
            out[(s.sign == Sign::Minus) as usize].insert(f);
        }
    }
    out
}

fn check_cert(inc: &IncidenceStructure, cert: &SplitCert) -> Result<()> {
    let g = inc.graph().ok_or(Error::CertMismatch)?;
    cert.validate(g).map_err(|_| Error::CertMismatch)
}

/// Classifier bound to one incidence structure and split certificate.
pub struct Classifier {
    plus: BitSet,
    minus: BitSet,
}

impl Classifier {
    pub fn new(inc: &IncidenceStructure, cert: &SplitCert) -> Result<Self> {
        check_cert(inc, cert)?;
        let [plus, minus] = type1_facets(inc, cert);
        Ok(Classifier { plus, minus })
    }

    pub fn classify(&self, face: &Face) -> FaceClass {
        match (face.fset.intersects(&self.plus), face.fset.intersects(&self.minus)) {
            (false, false) => FaceClass::Primitive,
            (true, false) => FaceClass::Positive,
            (false, true) => FaceClass::Negative,
            (true, true) => FaceClass::Small,
        }
    }
}

/// Fills in the four-way class counts.
pub fn classify_faces(
    inc: &IncidenceStructure,
    cert: &SplitCert,
    census: FaceCensus,
) -> Result<FaceCensus> {
    let classifier = Classifier::new(inc, cert)?;
    let mut counts = ClassCounts::default();
    for face in &census.faces {
        counts.bump(classifier.classify(face));
    }
    Ok(FaceCensus {
        classes: Some(counts),
        ..census
    })
}

/// Dimension of a face: the affine rank of its vertex points.
pub fn face_dimension(points: &[Vec<i64>], face: &Face) -> usize {
    let mut it = face.vset.iter();
    let Some(first) = it.next() else {
        return 0;
    };
    let base = &points[first];
    let ambient = base.len();
    // a proper face lies in a facet hyperplane
    let max = if face.fset.is_empty() { ambient } else { ambient - 1 };
    let mut e = Echelon::new(ambient);
    let mut diff = vec![0i64; ambient];
    for v in it {
        if e.rank() == max {
            break;
        }
        for ((d, a), b) in diff.iter_mut().zip(&points[v]).zip(base) {
            *d = a - b;
        }
        e.insert(&diff);
    }
    e.rank()
}

/// Exact f-vector from vertex coordinates.
///
/// Requires an incidence structure built from a graph, so that vertex points
/// can be reconstructed.
pub fn f_vector(inc: &IncidenceStructure, census: &FaceCensus) -> Result<FVector> {
    let g = inc
        .graph()
        .ok_or_else(|| Error::InvalidIncidence("f-vector needs vertex coordinates".into()))?;
    let n = g.n();
    let d = n + 1;
    let points: Vec<Vec<i64>> = inc.vertices().iter().map(|v| v.vertex_point(n)).collect();
    let dims: Vec<usize> = census
        .faces
        .par_iter()
        .map(|face| face_dimension(&points, face))
        .collect();
    let mut counts = vec![0u64; d + 1];
    for k in dims {
        counts[k] += 1;
    }
    Ok(FVector(counts))
}

/// `f_vector` stored into the census.
pub fn with_f_vector(inc: &IncidenceStructure, census: FaceCensus) -> Result<FaceCensus> {
    let fvec = f_vector(inc, &census)?;
    Ok(FaceCensus {
        fvec: Some(fvec),
        ..census
    })
}
