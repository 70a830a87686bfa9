//! Six-way node partitions of a split graph and the count `p_G`.
//!
//! A partition splits the clique side into `C⁺, C⁻, C⁰` and the stable side
//! into `S⁺, S⁻, S⁰`. Condition (A): every node of `C⁺ ∪ C⁻` has a neighbor
//! in `S⁺ ∪ S⁻`. Condition (B): every node of `S⁺ ∪ S⁻` has a nonneighbor in
//! `C⁺ ∪ C⁻`. `p_G` counts the nontrivial partitions satisfying both.
//!
//! `Π_A` and `Π_B` below include the trivial partition (everything in the
//! zero parts); `p_G = |Π_A ∩ Π_B| - 1`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::{
    classify_faces, closure, enumerate_faces, ClassCounts, Classifier, Face, FaceClass,
};
use crate::graph::{complement, Graph, SplitCert};
use crate::hansen::{incidence, IncidenceStructure, Perfectness, Sign, SignedSet};
use crate::nodeset::NodeSet;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriPartition {
    pub cplus: NodeSet,
    pub cminus: NodeSet,
    pub czero: NodeSet,
    pub splus: NodeSet,
    pub sminus: NodeSet,
    pub szero: NodeSet,
}

impl TriPartition {
    /// Everything in the zero parts.
    pub fn trivial(cert: &SplitCert) -> Self {
        TriPartition {
            czero: cert.clique,
            szero: cert.stable,
            ..Default::default()
        }
    }

    /// Builds a partition from its signed parts; the zero parts are the rest.
    pub fn from_signed(
        cert: &SplitCert,
        cplus: NodeSet,
        cminus: NodeSet,
        splus: NodeSet,
        sminus: NodeSet,
    ) -> Result<Self> {
        let t = TriPartition {
            cplus,
            cminus,
            czero: cert.clique - cplus - cminus,
            splus,
            sminus,
            szero: cert.stable - splus - sminus,
        };
        t.validate(cert)?;
        Ok(t)
    }

    pub fn validate(&self, cert: &SplitCert) -> Result<()> {
        let c = [self.cplus, self.cminus, self.czero];
        let s = [self.splus, self.sminus, self.szero];
        let disjoint = |parts: &[NodeSet; 3]| {
            parts[0].is_disjoint(parts[1])
                && parts[0].is_disjoint(parts[2])
                && parts[1].is_disjoint(parts[2])
        };
        if !disjoint(&c) || !disjoint(&s) {
            return Err(Error::InvalidPartition("parts overlap".into()));
        }
        if c[0] | c[1] | c[2] != cert.clique || s[0] | s[1] | s[2] != cert.stable {
            return Err(Error::InvalidPartition(
                "parts do not cover the split sides".into(),
            ));
        }
        Ok(())
    }

    /// `C⁺ ∪ C⁻`.
    #[inline]
    pub fn active_clique(&self) -> NodeSet {
        self.cplus | self.cminus
    }

    /// `S⁺ ∪ S⁻`.
    #[inline]
    pub fn active_stable(&self) -> NodeSet {
        self.splus | self.sminus
    }

    pub fn is_trivial(&self) -> bool {
        self.active_clique().is_empty() && self.active_stable().is_empty()
    }

    /// The same parts read as a partition of the complement graph, whose
    /// split sides are swapped.
    pub fn mirrored(&self) -> TriPartition {
        TriPartition {
            cplus: self.splus,
            cminus: self.sminus,
            czero: self.szero,
            splus: self.cplus,
            sminus: self.cminus,
            szero: self.czero,
        }
    }

    fn c_sign(&self, sign: Sign) -> NodeSet {
        match sign {
            Sign::Plus => self.cplus,
            Sign::Minus => self.cminus,
        }
    }

    fn s_sign(&self, sign: Sign) -> NodeSet {
        match sign {
            Sign::Plus => self.splus,
            Sign::Minus => self.sminus,
        }
    }
}

/// All `3^(|C|+|S|)` partitions, by a base-3 counter over the clique nodes
/// followed by the stable nodes (digit 0 = zero part, 1 = plus, 2 = minus).
pub fn partitions(cert: &SplitCert) -> Partitions {
    let nodes: Vec<(usize, bool)> = cert
        .clique
        .iter()
        .map(|v| (v, true))
        .chain(cert.stable.iter().map(|v| (v, false)))
        .collect();
    Partitions {
        digits: vec![0; nodes.len()],
        nodes,
        current: Some(TriPartition::trivial(cert)),
    }
}

pub struct Partitions {
    nodes: Vec<(usize, bool)>,
    digits: Vec<u8>,
    current: Option<TriPartition>,
}

impl Iterator for Partitions {
    type Item = TriPartition;

    fn next(&mut self) -> Option<TriPartition> {
        let out = self.current?;
        let mut t = out;
        let mut carry = true;
        for (i, &(v, in_clique)) in self.nodes.iter().enumerate() {
            let (plus, minus, zero) = if in_clique {
                (&mut t.cplus, &mut t.cminus, &mut t.czero)
            } else {
                (&mut t.splus, &mut t.sminus, &mut t.szero)
            };
            match self.digits[i] {
                0 => {
                    zero.remove(v);
                    plus.insert(v);
                    self.digits[i] = 1;
                    carry = false;
                }
                1 => {
                    plus.remove(v);
                    minus.insert(v);
                    self.digits[i] = 2;
                    carry = false;
                }
                _ => {
                    minus.remove(v);
                    zero.insert(v);
                    self.digits[i] = 0;
                }
            }
            if !carry {
                break;
            }
        }
        self.current = (!carry).then_some(t);
        Some(out)
    }
}

/// (A): every node of `C⁺ ∪ C⁻` has a neighbor in `S⁺ ∪ S⁻`.
pub fn condition_a(g: &Graph, cert: &SplitCert, t: &TriPartition) -> bool {
    debug_assert!(t.validate(cert).is_ok());
    let active = t.active_stable();
    t.active_clique()
        .iter()
        .all(|c| g.neighbors(c).intersects(active))
}

/// (B): every node of `S⁺ ∪ S⁻` has a nonneighbor in `C⁺ ∪ C⁻`.
pub fn condition_b(g: &Graph, cert: &SplitCert, t: &TriPartition) -> bool {
    debug_assert!(t.validate(cert).is_ok());
    let active = t.active_clique();
    t.active_stable()
        .iter()
        .all(|s| !(active - g.neighbors(s)).is_empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    A,
    B,
}

/// `p_G(C, S)`.
pub fn count_pg(g: &Graph, cert: &SplitCert) -> u64 {
    partitions(cert)
        .filter(|t| !t.is_trivial() && condition_a(g, cert, t) && condition_b(g, cert, t))
        .count() as u64
}

/// `|Π_A|` or `|Π_B|`, trivial partition included.
pub fn count_pi(g: &Graph, cert: &SplitCert, which: Condition) -> u64 {
    partitions(cert)
        .filter(|t| match which {
            Condition::A => condition_a(g, cert, t),
            Condition::B => condition_b(g, cert, t),
        })
        .count() as u64
}

/// `|Π_A(S⁺, S⁻)|` for every disjoint pair with `S⁺ ∪ S⁻ ≠ ∅`.
pub fn pi_a_strata(g: &Graph, cert: &SplitCert) -> BTreeMap<(NodeSet, NodeSet), u64> {
    let mut out = BTreeMap::new();
    for t in partitions(cert) {
        if !t.active_stable().is_empty() && condition_a(g, cert, &t) {
            *out.entry((t.splus, t.sminus)).or_insert(0) += 1;
        }
    }
    out
}

/// Reads `(S⁺, S⁻)` off a primitive face: `S^ε` is the intersection of the
/// member sets of its type-(1) vertices of sign `ε`.
pub fn primitive_signature(
    inc: &IncidenceStructure,
    cert: &SplitCert,
    face: &Face,
) -> Result<(NodeSet, NodeSet)> {
    if Classifier::new(inc, cert)?.classify(face) != FaceClass::Primitive {
        return Err(Error::NotPrimitive);
    }
    let mut meet = [None::<NodeSet>; 2];
    for v in face.vset.iter() {
        let s = inc.vertices()[v];
        if s.members.is_subset(cert.stable) {
            let slot = &mut meet[(s.sign == Sign::Minus) as usize];
            *slot = Some(slot.map_or(s.members, |m| m & s.members));
        }
    }
    match meet {
        [Some(plus), Some(minus)] => Ok((plus, minus)),
        // a primitive face holds type-(1) vertices of both signs
        _ => Err(Error::NotPrimitive),
    }
}

/// The map Ψ from a nontrivial primitive face to a partition in `Π_A`.
///
/// `c ∈ C^ε` iff the face contains `(ε, (S^ε \ N(c)) ∪ c)` and no vertex of
/// sign `-ε` whose member set contains `c`.
pub fn psi(inc: &IncidenceStructure, cert: &SplitCert, face: &Face) -> Result<TriPartition> {
    let (splus, sminus) = primitive_signature(inc, cert, face)?;
    if (splus | sminus).is_empty() {
        return Err(Error::InvalidPartition(
            "primitive face with S+ and S- empty".into(),
        ));
    }
    let g = inc.graph().ok_or(Error::CertMismatch)?;
    // clique nodes appearing in face vertices, per sign
    let mut appears = [NodeSet::EMPTY; 2];
    for v in face.vset.iter() {
        let s = inc.vertices()[v];
        appears[(s.sign == Sign::Minus) as usize] |= s.members & cert.clique;
    }
    let side = |sign: Sign| -> NodeSet {
        let s_eps = if sign == Sign::Plus { splus } else { sminus };
        let opposite = appears[(sign == Sign::Plus) as usize];
        cert.clique
            .iter()
            .filter(|&c| {
                let witness = SignedSet::new(sign, (s_eps - g.neighbors(c)).with(c));
                !opposite.contains(c)
                    && inc
                        .vertex_index(&witness)
                        .is_some_and(|i| face.vset.contains(i))
            })
            .collect()
    };
    let (cplus, cminus) = (side(Sign::Plus), side(Sign::Minus));
    TriPartition::from_signed(cert, cplus, cminus, splus, sminus)
}

/// The map Φ: intersects `[+, A'_s ∪ s]`, `[+, A_s ∪ s]` over `s ∈ S⁺` and
/// `[-, B'_s ∪ s]`, `[-, B_s ∪ s]` over `s ∈ S⁻`, where `A'_s = C⁺ ∩ N(s)`,
/// `A_s = N(s) \ C⁻`, `B'_s = C⁻ ∩ N(s)` and `B_s = N(s) \ C⁺`.
pub fn phi(inc: &IncidenceStructure, cert: &SplitCert, t: &TriPartition) -> Result<Face> {
    let g = inc.graph().ok_or(Error::CertMismatch)?;
    cert.validate(g).map_err(|_| Error::CertMismatch)?;
    t.validate(cert)?;
    if t.active_stable().is_empty() {
        return Err(Error::InvalidPartition("S+ and S- are empty".into()));
    }
    if !condition_a(g, cert, t) {
        return Err(Error::InvalidPartition("condition (A) fails".into()));
    }
    let mut facets = Vec::new();
    for sign in Sign::BOTH {
        let same = t.c_sign(sign);
        let other = t.c_sign(sign.flip());
        for s in t.s_sign(sign) {
            let nb = g.neighbors(s);
            facets.push(SignedSet::new(sign, (same & nb).with(s)));
            facets.push(SignedSet::new(sign, (nb - other).with(s)));
        }
    }
    let mut vset = crate::bits::BitSet::full(inc.num_vertices());
    for f in &facets {
        let idx = inc
            .facet_index(f)
            .ok_or_else(|| Error::InvalidPartition(format!("{f} is not a facet")))?;
        vset.intersect_with(inc.facet_row(idx));
    }
    if vset.is_empty() {
        return Err(Error::InvalidPartition("facet intersection is empty".into()));
    }
    Ok(closure(inc, &vset))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identities {
    /// `s = 3^d + p_G`
    pub main: bool,
    /// positive = negative = `3^(d-1)`
    pub fplus: bool,
    #[serde(rename = "fp_piA")]
    pub fp_pi_a: bool,
    #[serde(rename = "fp_piB")]
    pub fp_pi_b: bool,
    /// small = `|Π_B| - 1`
    pub small: bool,
    /// `s = f_p + f_+ + f_- + f_p(complement) - 1`
    pub decomposition: bool,
    /// `p_G ≡ 0 (mod 16)`
    pub mod16: bool,
    /// `|Π_A| + |Π_B| - (p_G + 1) = 3^(d-1)`
    pub inclusion_exclusion: bool,
}

impl Identities {
    pub fn all(&self) -> bool {
        self.main
            && self.fplus
            && self.fp_pi_a
            && self.fp_pi_b
            && self.small
            && self.decomposition
            && self.mod16
            && self.inclusion_exclusion
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub d: usize,
    pub s: u64,
    pub three_pow_d: u64,
    pub p_g: u64,
    pub classes: ClassCounts,
    pub pi_a: u64,
    pub pi_b: u64,
    /// primitive faces of the complement's Hansen polytope
    pub fp_complement: u64,
    pub identities: Identities,
}

/// Enumerates `H(g)` and `H(complement(g))` and checks every counting
/// identity against the partition counts.
pub fn verify_main_theorem(g: &Graph, cert: &SplitCert, budget: usize) -> Result<VerifyReport> {
    cert.validate(g)?;
    let d = g.n() + 1;
    let classes = classified(g, cert, budget)?;
    let gc = complement(g);
    let fp_complement = classified(&gc, &cert.swapped(), budget)?.primitive;

    let s = classes.total();
    let three_pow_d = 3u64.pow(d as u32);
    let three_pow_dm1 = three_pow_d / 3;
    let p_g = count_pg(g, cert);
    let pi_a = count_pi(g, cert, Condition::A);
    let pi_b = count_pi(g, cert, Condition::B);

    let identities = Identities {
        main: s == three_pow_d + p_g,
        fplus: classes.positive == three_pow_dm1 && classes.negative == three_pow_dm1,
        fp_pi_a: classes.primitive == pi_a,
        fp_pi_b: fp_complement == pi_b,
        small: classes.small + 1 == pi_b,
        decomposition: s + 1
            == classes.primitive + classes.positive + classes.negative + fp_complement,
        mod16: p_g.is_multiple_of(16),
        inclusion_exclusion: pi_a + pi_b == three_pow_dm1 + p_g + 1,
    };
    Ok(VerifyReport {
        d,
        s,
        three_pow_d,
        p_g,
        classes,
        pi_a,
        pi_b,
        fp_complement,
        identities,
    })
}

fn classified(g: &Graph, cert: &SplitCert, budget: usize) -> Result<ClassCounts> {
    let inc = incidence(g, Perfectness::RequireSplit)?;
    let census = classify_faces(&inc, cert, enumerate_faces(&inc, budget)?)?;
    Ok(census.classes.unwrap_or_default())
}
