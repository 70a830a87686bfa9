//! Acceptance suite. Every criterion is exact; each prints one PASS/FAIL
//! line and the process exits nonzero if any fails.

use std::sync::Mutex;
use std::time::{Duration, Instant};

use hansen_core::corpus::{
    all_graphs, random_split_corpus, split_graphs_up_to_iso, threshold_sequences,
};
use hansen_core::face::{Classifier, BRUTE_FORCE_MAX_FACETS};
use hansen_core::partition::partitions;
use hansen_core::*;
use rayon::prelude::*;

const CORPUS_ISO_NODES: usize = 6;
const CORPUS_RANDOM_COUNT: usize = 50;
const CORPUS_RANDOM_MAX_NODES: usize = 9;
const CORPUS_SEED: u64 = 0x5EED_2013;
const SERIES_MAX_M: usize = 4;
const SERIES_PER_M: u64 = 3;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }
}

/// Every `(d, s)` pair enumerated anywhere in the suite, for the lower bound.
static OBSERVED: Mutex<Vec<(String, usize, u64)>> = Mutex::new(Vec::new());

fn observe(label: impl Into<String>, d: usize, s: u64) {
    OBSERVED.lock().unwrap().push((label.into(), d, s));
}

fn face_count(g: &Graph) -> u64 {
    let inc = incidence(g, Perfectness::RequireSplit).unwrap();
    let s = enumerate_faces(&inc, DEFAULT_FACE_BUDGET).unwrap().total;
    observe(format!("{g:?}"), g.n() + 1, s);
    s
}

fn census_with_fvec(g: &Graph) -> FaceCensus {
    let inc = incidence(g, Perfectness::RequireSplit).unwrap();
    let census = enumerate_faces(&inc, DEFAULT_FACE_BUDGET).unwrap();
    observe(format!("{g:?}"), g.n() + 1, census.total);
    with_f_vector(&inc, census).unwrap()
}

struct CorpusEntry {
    label: String,
    graph: Graph,
    cert: SplitCert,
}

fn corpus() -> Vec<CorpusEntry> {
    let mut out: Vec<CorpusEntry> = split_graphs_up_to_iso(CORPUS_ISO_NODES)
        .unwrap()
        .into_iter()
        .enumerate()
        .map(|(i, (graph, cert))| CorpusEntry {
            label: format!("iso#{i} (n={})", graph.n()),
            graph,
            cert,
        })
        .collect();
    for spec in random_split_corpus(CORPUS_RANDOM_COUNT, CORPUS_RANDOM_MAX_NODES, CORPUS_SEED) {
        let (graph, cert) = spec.build().unwrap();
        out.push(CorpusEntry {
            label: format!(
                "random k={} l={} p={} seed={:#x}",
                spec.k, spec.l, spec.p, spec.seed
            ),
            graph,
            cert,
        });
    }
    out
}

struct CorpusResult {
    label: String,
    d: usize,
    threshold: bool,
    report: VerifyReport,
    s_complement: u64,
    fvec: FVector,
    fvec_complement: FVector,
}

fn run_corpus(entries: &[CorpusEntry]) -> Vec<CorpusResult> {
    entries
        .par_iter()
        .map(|e| {
            let report = verify_main_theorem(&e.graph, &e.cert, DEFAULT_FACE_BUDGET).unwrap();
            let d = e.graph.n() + 1;
            observe(&e.label, d, report.s);
            let c = census_with_fvec(&e.graph);
            let cc = census_with_fvec(&complement(&e.graph));
            assert_eq!(c.total, report.s);
            CorpusResult {
                label: e.label.clone(),
                d,
                threshold: recognize_threshold(&e.graph).is_some(),
                report,
                s_complement: cc.total,
                fvec: c.fvec.unwrap(),
                fvec_complement: cc.fvec.unwrap(),
            }
        })
        .collect()
}

fn first_failures<'a>(items: impl Iterator<Item = &'a str>) -> String {
    let v: Vec<&str> = items.take(3).collect();
    if v.is_empty() {
        String::new()
    } else {
        format!("; first failures: {}", v.join(" | "))
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let s = face_count(&Graph::path(4).unwrap());
    let elapsed = start.elapsed();
    Outcome::new(
        s == 259 && elapsed < Duration::from_secs(1),
        format!("s(H(P4)) = {s} (expected 259) in {elapsed:.2?} (limit 1 s)"),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let p4 = Graph::path(4).unwrap();
    let cert = recognize_split(&p4).unwrap();
    let mut lines = Vec::new();
    let mut pass = true;
    for m in 0..=SERIES_MAX_M {
        for i in 0..SERIES_PER_M {
            let seq = random_threshold(m, 1000 * m as u64 + i);
            let t = build_threshold(&seq).unwrap();
            let (g, _) = ltimes(&p4, &cert, &t, &seq).unwrap();
            let s = face_count(&g);
            let expected = three_pow(m + 5) + 16;
            if s != expected {
                pass = false;
                lines.push(format!("m={m} T={} s={s} expected {expected}", seq.to_letters()));
            }
        }
    }
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(60);
    Outcome::new(
        pass,
        format!(
            "{} graphs P4 ⋉ T for m = 0..={SERIES_MAX_M}, s = 3^(m+5) + 16, in {elapsed:.2?} (limit 60 s){}",
            (SERIES_MAX_M as u64 + 1) * SERIES_PER_M,
            first_failures(lines.iter().map(String::as_str))
        ),
    )
}

fn criterion_3(results: &[CorpusResult]) -> Outcome {
    let bad: Vec<&str> = results
        .iter()
        .filter(|r| r.report.s != three_pow(r.d) + r.report.p_g)
        .map(|r| r.label.as_str())
        .collect();
    Outcome::new(
        bad.is_empty(),
        format!(
            "s = 3^d + p_G on {} corpus graphs{}",
            results.len(),
            first_failures(bad.into_iter())
        ),
    )
}

fn criterion_4(results: &[CorpusResult]) -> Outcome {
    let bad: Vec<&str> = results
        .iter()
        .filter(|r| {
            let c = r.report.classes;
            let third = three_pow(r.d - 1);
            !(c.positive == third
                && c.negative == third
                && c.primitive == r.report.pi_a
                && c.small + 1 == r.report.pi_b
                && r.report.fp_complement == r.report.pi_b
                && r.report.s + 1 == c.primitive + c.positive + c.negative + r.report.fp_complement)
        })
        .map(|r| r.label.as_str())
        .collect();
    Outcome::new(
        bad.is_empty(),
        format!(
            "f+ = f- = 3^(d-1), f_p = |Π_A|, small = |Π_B| - 1, f_p(Ḡ) = |Π_B|, decomposition, on {} graphs{}",
            results.len(),
            first_failures(bad.into_iter())
        ),
    )
}

fn criterion_5(results: &[CorpusResult]) -> Outcome {
    let bad: Vec<&str> = results
        .iter()
        .filter(|r| r.report.p_g % 16 != 0 || (r.report.p_g == 0) != r.threshold)
        .map(|r| r.label.as_str())
        .collect();
    let thresholds = results.iter().filter(|r| r.threshold).count();
    let mismatches: usize = (0..=7usize)
        .map(|n| {
            let graphs: Vec<Graph> = all_graphs(n).unwrap().collect();
            graphs
                .par_iter()
                .filter(|g| {
                    let by_char = recognize_split(g).is_some() && g.induced_p4().is_none();
                    recognize_threshold(g).is_some() != by_char
                })
                .count()
        })
        .sum();
    Outcome::new(
        bad.is_empty() && mismatches == 0,
        format!(
            "p_G ≡ 0 mod 16 and p_G = 0 ⟺ threshold on {} graphs ({thresholds} threshold); \
             threshold ⟺ P4-free split on all labelled graphs ≤ 7 nodes: {mismatches} mismatches{}",
            results.len(),
            first_failures(bad.into_iter())
        ),
    )
}

fn criterion_6() -> Outcome {
    let graphs = split_graphs_up_to_iso(5).unwrap();
    let mut direct = 0;
    let mut via_polar = 0;
    let mut skipped = 0;
    let mut bad = Vec::new();
    for (i, (g, _)) in graphs.iter().enumerate() {
        let inc = incidence(g, Perfectness::RequireSplit).unwrap();
        let fast = enumerate_faces(&inc, DEFAULT_FACE_BUDGET).unwrap();
        observe(format!("oracle#{i}"), g.n() + 1, fast.total);
        if inc.num_facets() <= BRUTE_FORCE_MAX_FACETS {
            direct += 1;
            let slow = brute_force_faces(&inc).unwrap();
            if slow.faces != fast.faces {
                bad.push(format!("oracle#{i}"));
            }
        } else if inc.num_vertices() <= BRUTE_FORCE_MAX_FACETS {
            // nonempty faces other than P correspond to nonempty faces of the
            // transpose other than the whole: compare facet sets
            via_polar += 1;
            let slow = brute_force_faces(&inc.transpose()).unwrap();
            let all = BitSet::full(inc.num_facets());
            let mut a: Vec<&BitSet> = fast
                .faces
                .iter()
                .map(|f| &f.fset)
                .filter(|f| !f.is_empty())
                .collect();
            let mut b: Vec<&BitSet> = slow.faces.iter().map(|f| &f.vset).filter(|v| **v != all).collect();
            a.sort();
            b.sort();
            if a != b {
                bad.push(format!("oracle#{i} (polar)"));
            }
        } else {
            skipped += 1;
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "BFS enumeration = brute force on {} split graphs ≤ 5 nodes: {direct} with ≤ {BRUTE_FORCE_MAX_FACETS} facets directly, \
             {via_polar} through the transpose, {skipped} outside the oracle domain{}",
            graphs.len(),
            first_failures(bad.iter().map(String::as_str))
        ),
    )
}

fn criterion_7(results: &[CorpusResult]) -> Outcome {
    let bad: Vec<&str> = results
        .iter()
        .filter(|r| r.report.s != r.s_complement || fvec_polar(&r.fvec) != r.fvec_complement)
        .map(|r| r.label.as_str())
        .collect();
    Outcome::new(
        bad.is_empty(),
        format!(
            "s(H(G)) = s(H(Ḡ)) and f(H(Ḡ)) = reversed f(H(G)) on {} graphs{}",
            results.len(),
            first_failures(bad.into_iter())
        ),
    )
}

fn criterion_8() -> Outcome {
    let seqs: Vec<ThresholdSeq> = (0..=7).flat_map(threshold_sequences).collect();
    let bad: Vec<String> = seqs
        .par_iter()
        .filter_map(|seq| {
            let g = build_threshold(seq).unwrap();
            let census = census_with_fvec(&g);
            let model = hanner_from_threshold(seq);
            let d = seq.len() + 1;
            let ok = census.fvec.as_ref() == Some(&model)
                && census.total == three_pow(d)
                && model.total() == three_pow(d);
            (!ok).then(|| seq.to_letters())
        })
        .collect();
    Outcome::new(
        bad.is_empty(),
        format!(
            "Hanner recursion = enumerated f-vector and s = 3^d for {} threshold sequences of length ≤ 7{}",
            seqs.len(),
            first_failures(bad.iter().map(String::as_str))
        ),
    )
}

fn criterion_9() -> Outcome {
    let graphs = split_graphs_up_to_iso(5).unwrap();
    let mut faces_checked = 0usize;
    let mut parts_checked = 0usize;
    let mut bad = Vec::new();
    for (i, (g, cert)) in graphs.iter().enumerate() {
        let inc = incidence(g, Perfectness::RequireSplit).unwrap();
        let census = enumerate_faces(&inc, DEFAULT_FACE_BUDGET).unwrap();
        let cls = Classifier::new(&inc, cert).unwrap();
        for face in &census.faces {
            if cls.classify(face) != FaceClass::Primitive || face.fset.is_empty() {
                continue;
            }
            faces_checked += 1;
            let back = psi(&inc, cert, face).and_then(|t| phi(&inc, cert, &t));
            if back.as_ref() != Ok(face) {
                bad.push(format!("graph#{i} φ∘ψ"));
            }
        }
        for t in partitions(cert) {
            if t.active_stable().is_empty() || !condition_a(g, cert, &t) {
                continue;
            }
            parts_checked += 1;
            let back = phi(&inc, cert, &t).and_then(|f| psi(&inc, cert, &f));
            if back != Ok(t) {
                bad.push(format!("graph#{i} ψ∘φ"));
            }
        }
    }
    Outcome::new(
        bad.is_empty() && faces_checked > 0,
        format!(
            "φ∘ψ = id on {faces_checked} nontrivial primitive faces, ψ∘φ = id on {parts_checked} partitions, {} graphs ≤ 5 nodes{}",
            graphs.len(),
            first_failures(bad.iter().map(String::as_str))
        ),
    )
}

fn criterion_10() -> Outcome {
    let observed = OBSERVED.lock().unwrap();
    let bad: Vec<&str> = observed
        .iter()
        .filter(|(_, d, s)| *s < three_pow(*d))
        .map(|(l, _, _)| l.as_str())
        .collect();
    Outcome::new(
        bad.is_empty() && !observed.is_empty(),
        format!(
            "s ≥ 3^d for all {} enumerated polytopes{}",
            observed.len(),
            first_failures(bad.into_iter())
        ),
    )
}

type Criterion<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn main() {
    let start = Instant::now();
    let entries = corpus();
    let results = run_corpus(&entries);

    let criteria: Vec<(&str, Criterion)> = vec![
        ("s(H(P4)) = 259", Box::new(criterion_1)),
        ("P4 ⋉ T series", Box::new(criterion_2)),
        ("main count on corpus", Box::new(|| criterion_3(&results))),
        ("class identities on corpus", Box::new(|| criterion_4(&results))),
        ("multiples of 16 and threshold", Box::new(|| criterion_5(&results))),
        ("oracle equivalence", Box::new(criterion_6)),
        ("polarity", Box::new(|| criterion_7(&results))),
        ("Hanner f-vectors", Box::new(criterion_8)),
        ("Ψ/Φ round trips", Box::new(criterion_9)),
        // last: it audits everything enumerated above
        ("3^d lower bound", Box::new(criterion_10)),
    ];

    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        if !outcome.pass {
            failed += 1;
        }
        println!(
            "[{tag}] criterion {:>2} {name}: {} ({:.2?})",
            i + 1,
            outcome.detail,
            t.elapsed()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.2?}",
        criteria.len() - failed,
        start.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
