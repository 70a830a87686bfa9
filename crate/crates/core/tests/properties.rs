//! Structural invariants checked exhaustively on small graphs and by
//! property tests on random ones.

use std::collections::BTreeMap;

use hansen_core::corpus::{all_graphs, split_graphs_up_to_iso, threshold_sequences};
use hansen_core::face::Classifier;
use hansen_core::hansen::{facet_functional, incident};
use hansen_core::partition::{partitions, pi_a_strata, primitive_signature};
use hansen_core::*;
use proptest::prelude::*;

fn inc_of(g: &Graph) -> IncidenceStructure {
    incidence(g, Perfectness::RequireSplit).unwrap()
}

fn census_of(g: &Graph) -> (IncidenceStructure, FaceCensus) {
    let inc = inc_of(g);
    let census = enumerate_faces(&inc, DEFAULT_FACE_BUDGET).unwrap();
    (inc, census)
}

/// Brute-force canonical split certificate: maximum clique side with a
/// stable complement, lexicographically smallest among those.
fn brute_split(g: &Graph) -> Option<SplitCert> {
    let all = g.nodes();
    all.subsets()
        .filter(|&c| g.is_clique(c) && g.is_stable(all - c))
        .max_by(|a, b| a.len().cmp(&b.len()).then(b.lex_cmp(*a)))
        .map(|clique| SplitCert {
            clique,
            stable: all - clique,
        })
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

fn arb_split(max_n: usize) -> impl Strategy<Value = (Graph, SplitCert)> {
    (0..=max_n, any::<u64>(), 0u8..=8).prop_flat_map(|(n, seed, p8)| {
        (0..=n).prop_map(move |k| random_split(k, n - k, p8 as f64 / 8.0, seed).unwrap())
    })
}

#[test]
fn split_recognition_matches_brute_force() {
    for n in 0..=6 {
        for g in all_graphs(n).unwrap() {
            assert_eq!(recognize_split(&g), brute_split(&g), "{g:?}");
        }
    }
}

#[test]
fn threshold_graphs_are_split_and_rebuild() {
    for len in 0..=7 {
        for seq in threshold_sequences(len) {
            let g = build_threshold(&seq).unwrap();
            assert!(recognize_split(&g).is_some());
            let found = recognize_threshold(&g).unwrap();
            assert_eq!(build_threshold(&found).unwrap(), g);
        }
    }
}

#[test]
fn threshold_iff_p4_free_split_up_to_six_nodes() {
    // seven nodes is covered by the acceptance suite
    for n in 0..=6 {
        for g in all_graphs(n).unwrap() {
            let char = recognize_split(&g).is_some() && g.induced_p4().is_none();
            assert_eq!(recognize_threshold(&g).is_some(), char, "{g:?}");
        }
    }
}

#[test]
fn incidence_rule_agrees_with_functional_evaluation() {
    for (g, _) in split_graphs_up_to_iso(6).unwrap() {
        let inc = inc_of(&g);
        for (vi, v) in inc.vertices().iter().enumerate() {
            let x = v.vertex_point(g.n());
            for (fi, f) in inc.facets().iter().enumerate() {
                let val = facet_functional(&x, f.members);
                // a stable set meets a clique at most once
                assert_eq!(val.abs(), 1);
                assert_eq!(inc.is_incident(vi, fi), val == f.sign.value());
            }
        }
    }
}

#[test]
fn sign_flip_preserves_incidence() {
    for (g, _) in split_graphs_up_to_iso(5).unwrap() {
        let inc = inc_of(&g);
        for (vi, v) in inc.vertices().iter().enumerate() {
            let vf = inc.vertex_index(&v.flipped()).unwrap();
            for (fi, f) in inc.facets().iter().enumerate() {
                let ff = inc.facet_index(&f.flipped()).unwrap();
                assert_eq!(inc.is_incident(vi, fi), inc.is_incident(vf, ff));
            }
        }
    }
}

#[test]
fn complement_incidence_is_the_transpose() {
    for (g, _) in split_graphs_up_to_iso(5).unwrap() {
        let inc = inc_of(&g);
        let dual = inc_of(&complement(&g));
        let t = inc.transpose();
        assert_eq!(dual.vertices(), t.vertices());
        assert_eq!(dual.facets(), t.facets());
        for v in 0..dual.num_vertices() {
            assert_eq!(dual.vertex_row(v), t.vertex_row(v));
        }
    }
}

#[test]
fn type_two_incidences_are_mutually_exclusive() {
    for (g, cert) in split_graphs_up_to_iso(6).unwrap() {
        for a in stable_sets(&g) {
            let Some(ci) = (a & cert.clique).first() else { continue };
            for b in cliques(&g) {
                let Some(sj) = (b & cert.stable).first() else { continue };
                assert!(!(b.contains(ci) && a.contains(sj)));
            }
        }
    }
}

#[test]
fn facet_intersection_identities() {
    for (g, cert) in split_graphs_up_to_iso(5).unwrap() {
        let inc = inc_of(&g);
        let row = |sign: Sign, set: NodeSet| {
            inc.facet_row(inc.facet_index(&SignedSet::new(sign, set)).unwrap()).clone()
        };
        let us: Vec<NodeSet> = std::iter::once(NodeSet::EMPTY)
            .chain(cert.stable.iter().map(NodeSet::singleton))
            .collect();
        for &u in &us {
            let allowed = if u.is_empty() {
                cert.clique
            } else {
                cert.clique & g.neighborhood(u)
            };
            for a in allowed.subsets() {
                for b in allowed.subsets() {
                    for eps in Sign::BOTH {
                        let lhs = row(eps, a | u).intersection(&row(eps, b | u));
                        let rhs = row(eps, (a & b) | u).intersection(&row(eps, a | b | u));
                        assert_eq!(lhs, rhs);
                        let mixed = row(eps, a | u).intersection(&row(eps.flip(), b | u));
                        let bound = row(eps, a).intersection(&row(eps.flip(), b));
                        assert!(mixed.is_subset(&bound));
                    }
                }
            }
        }
    }
}

#[test]
fn primitive_iff_type_one_vertices_of_both_signs() {
    for (g, cert) in split_graphs_up_to_iso(5).unwrap() {
        let (inc, census) = census_of(&g);
        let cls = Classifier::new(&inc, &cert).unwrap();
        for face in &census.faces {
            let mut signs = [false; 2];
            for v in face.vset.iter() {
                let s = inc.vertices()[v];
                if s.members.is_subset(cert.stable) {
                    signs[(s.sign == Sign::Minus) as usize] = true;
                }
            }
            assert_eq!(
                cls.classify(face) == FaceClass::Primitive,
                signs == [true, true]
            );
        }
    }
}

#[test]
fn antipodal_map_permutes_faces() {
    for (g, cert) in split_graphs_up_to_iso(5).unwrap() {
        let (inc, census) = census_of(&g);
        let flip: Vec<usize> = inc
            .vertices()
            .iter()
            .map(|v| inc.vertex_index(&v.flipped()).unwrap())
            .collect();
        let faces: std::collections::HashSet<BitSet> =
            census.faces.iter().map(|f| f.vset.clone()).collect();
        for f in &faces {
            let image = BitSet::from_indices(f.universe(), f.iter().map(|v| flip[v]));
            assert!(faces.contains(&image));
        }
        let c = classify_faces(&inc, &cert, census).unwrap().classes.unwrap();
        assert_eq!(c.positive, c.negative);
    }
}

#[test]
fn adding_an_isolated_node_triples_the_face_count() {
    for (g, _) in split_graphs_up_to_iso(5).unwrap() {
        let g1 = g.disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        let s = census_of(&g).1.total;
        let s1 = census_of(&g1).1.total;
        assert_eq!(s1, 3 * s);
    }
}

#[test]
fn complement_reverses_the_f_vector() {
    for (g, _) in split_graphs_up_to_iso(5).unwrap() {
        let (inc, c) = census_of(&g);
        let gc = complement(&g);
        let (incc, cc) = census_of(&gc);
        let f = f_vector(&inc, &c).unwrap();
        let fc = f_vector(&incc, &cc).unwrap();
        assert_eq!(fvec_polar(&f), fc);
        assert!(f.satisfies_euler());
    }
}

#[test]
fn p4_f_vector_is_self_polar() {
    let (inc, c) = census_of(&Graph::path(4).unwrap());
    let f = f_vector(&inc, &c).unwrap();
    assert_eq!(f.counts().len(), 6);
    assert_eq!(f.total(), 259);
    assert_eq!(fvec_polar(&f), f);
}

#[test]
fn pg_is_a_multiple_of_sixteen_and_zero_exactly_for_threshold() {
    for (g, cert) in split_graphs_up_to_iso(7).unwrap() {
        let p = count_pg(&g, &cert);
        assert_eq!(p % 16, 0);
        assert_eq!(p == 0, recognize_threshold(&g).is_some(), "{g:?}");
    }
}

#[test]
fn pg_does_not_depend_on_the_certificate() {
    for (g, cert) in split_graphs_up_to_iso(6).unwrap() {
        let all = g.nodes();
        let p = count_pg(&g, &cert);
        for clique in all.subsets().filter(|&c| g.is_clique(c) && g.is_stable(all - c)) {
            let other = SplitCert {
                clique,
                stable: all - clique,
            };
            assert_eq!(count_pg(&g, &other), p);
        }
    }
}

#[test]
fn counted_partitions_have_two_active_nodes_per_side() {
    for (g, cert) in split_graphs_up_to_iso(6).unwrap() {
        for t in partitions(&cert) {
            if !t.is_trivial() && condition_a(&g, &cert, &t) && condition_b(&g, &cert, &t) {
                assert!(t.active_clique().len() >= 2);
                assert!(t.active_stable().len() >= 2);
            }
        }
    }
}

#[test]
fn condition_a_mirrors_condition_b_on_the_complement() {
    for (g, cert) in split_graphs_up_to_iso(5).unwrap() {
        let gc = complement(&g);
        let cc = cert.swapped();
        for t in partitions(&cert) {
            let m = t.mirrored();
            assert_eq!(condition_a(&g, &cert, &t), condition_b(&gc, &cc, &m));
            assert_eq!(condition_b(&g, &cert, &t), condition_a(&gc, &cc, &m));
        }
    }
}

#[test]
fn inclusion_exclusion_over_partitions() {
    for (g, cert) in split_graphs_up_to_iso(6).unwrap() {
        let d = g.n() + 1;
        let a = count_pi(&g, &cert, Condition::A);
        let b = count_pi(&g, &cert, Condition::B);
        assert_eq!(a + b - (count_pg(&g, &cert) + 1), three_pow(d - 1));
    }
}

#[test]
fn primitive_strata_match_partition_strata() {
    for (g, cert) in split_graphs_up_to_iso(6).unwrap() {
        let (inc, census) = census_of(&g);
        let cls = Classifier::new(&inc, &cert).unwrap();
        let mut faces: BTreeMap<(NodeSet, NodeSet), u64> = BTreeMap::new();
        let mut trivial = 0;
        for face in census.faces.iter().filter(|f| cls.classify(f) == FaceClass::Primitive) {
            let key = primitive_signature(&inc, &cert, face).unwrap();
            if (key.0 | key.1).is_empty() {
                trivial += 1;
            } else {
                *faces.entry(key).or_insert(0) += 1;
            }
        }
        // the (∅, ∅) stratum is the polytope alone, matching the trivial partition
        assert_eq!(trivial, 1);
        assert_eq!(faces, pi_a_strata(&g, &cert));
    }
}

#[test]
fn psi_and_phi_are_inverse_up_to_six_nodes() {
    for (g, cert) in split_graphs_up_to_iso(6).unwrap() {
        let (inc, census) = census_of(&g);
        let cls = Classifier::new(&inc, &cert).unwrap();
        for face in census.faces.iter().filter(|f| cls.classify(f) == FaceClass::Primitive) {
            if face.fset.is_empty() {
                continue;
            }
            let t = psi(&inc, &cert, face).unwrap();
            assert!(condition_a(&g, &cert, &t));
            assert_eq!(&phi(&inc, &cert, &t).unwrap(), face);
        }
    }
}

#[test]
fn threshold_primitive_faces_map_outside_pi_b() {
    for len in 0..=5 {
        for seq in threshold_sequences(len) {
            let g = build_threshold(&seq).unwrap();
            let cert = recognize_split(&g).unwrap();
            let (inc, census) = census_of(&g);
            let cls = Classifier::new(&inc, &cert).unwrap();
            let prim: Vec<&Face> = census
                .faces
                .iter()
                .filter(|f| cls.classify(f) == FaceClass::Primitive)
                .collect();
            // p_G = 0, so no nontrivial primitive face maps into Π_A ∩ Π_B
            for f in prim {
                let (sp, sm) = primitive_signature(&inc, &cert, f).unwrap();
                if !(sp | sm).is_empty() {
                    let t = psi(&inc, &cert, f).unwrap();
                    assert!(!condition_b(&g, &cert, &t));
                }
            }
        }
    }
}

#[test]
fn p4_ltimes_threshold_keeps_sixteen() {
    let g = Graph::path(4).unwrap();
    let cert = recognize_split(&g).unwrap();
    for m in 0..=5 {
        for seed in 0..4 {
            let seq = random_threshold(m, seed);
            let t = build_threshold(&seq).unwrap();
            let (h, hc) = ltimes(&g, &cert, &t, &seq).unwrap();
            assert_eq!(count_pg(&h, &hc), 16);
            assert_eq!(count_pg(&h, &recognize_split(&h).unwrap()), 16);
        }
    }
}

#[test]
fn hanner_recursion_matches_enumeration_for_p3() {
    let seq = ThresholdSeq::new(vec![Step::Isolated, Step::Isolated, Step::Dominating]);
    let g = build_threshold(&seq).unwrap();
    let (inc, c) = census_of(&g);
    assert_eq!(f_vector(&inc, &c).unwrap(), hanner_from_threshold(&seq));
    assert_eq!(c.total, 81);
}

#[test]
fn incident_helper_matches_structure() {
    let g = Graph::path(4).unwrap();
    let inc = inc_of(&g);
    for (vi, v) in inc.vertices().iter().enumerate() {
        for (fi, f) in inc.facets().iter().enumerate() {
            assert_eq!(incident(v, f), inc.is_incident(vi, fi));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_an_involution(g in arb_graph(12)) {
        let gc = complement(&g);
        prop_assert_eq!(complement(&gc), g.clone());
        prop_assert_eq!(g.edge_count() + gc.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
    }

    #[test]
    fn json_roundtrip_preserves_graph(g in arb_graph(10)) {
        let cert = recognize_split(&g);
        let json = hansen_core::io::GraphJson::from_parts(&g, cert.as_ref(), None);
        let text = serde_json::to_string(&json).unwrap();
        let spec = hansen_core::io::parse_graph(&text).unwrap();
        prop_assert_eq!(spec.graph, g);
        prop_assert_eq!(spec.split, cert);
    }

    #[test]
    fn ltimes_output_is_split(
        (g, cert) in arb_split(6),
        m in 0usize..6,
        seed in any::<u64>(),
    ) {
        let seq = random_threshold(m, seed);
        let t = build_threshold(&seq).unwrap();
        let (h, hc) = ltimes(&g, &cert, &t, &seq).unwrap();
        prop_assert!(hc.validate(&h).is_ok());
        prop_assert!(recognize_split(&h).is_some());
        prop_assert_eq!(h.edge_count(), g.edge_count() + t.edge_count() + cert.clique.len() * m);
        prop_assert_eq!(count_pg(&h, &hc), count_pg(&g, &cert));
    }

    #[test]
    fn recognized_certificates_are_valid((g, _) in arb_split(14)) {
        let cert = recognize_split(&g).unwrap();
        prop_assert!(cert.validate(&g).is_ok());
        let mut shuffled: Vec<usize> = (0..g.n()).rev().collect();
        shuffled.rotate_left(g.n() / 3);
        let h = g.permute(&shuffled).unwrap();
        prop_assert_eq!(recognize_split(&h).map(|c| c.clique.len()), Some(cert.clique.len()));
    }

    #[test]
    fn closure_is_a_closure_operator(
        (g, _) in arb_split(5),
        picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..4),
        extra in any::<prop::sample::Index>(),
    ) {
        let inc = inc_of(&g);
        let nv = inc.num_vertices();
        let seed = BitSet::from_indices(nv, picks.iter().map(|i| i.index(nv)));
        let f = closure(&inc, &seed);
        prop_assert!(seed.is_subset(&f.vset));
        prop_assert_eq!(closure(&inc, &f.vset), f.clone());
        let mut bigger = seed.clone();
        bigger.insert(extra.index(nv));
        prop_assert!(f.vset.is_subset(&closure(&inc, &bigger).vset));
    }
}
