use std::fmt::Write as _;

use hansen_core::io::GraphJson;
use hansen_core::{ClassCounts, FVector, Identities};
use serde::Serialize;

/// One command's result. Field order is the JSON key order; only
/// `wall_time_ms` varies between identical runs.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RunReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_sequence: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub facets: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub three_pow_d: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_g: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi_a: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi_b: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fp_complement: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<ClassCounts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_vector: Option<FVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hanner_f_vector: Option<FVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identities: Option<Identities>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<SweepSummary>,
    pub pass: bool,
    pub wall_time_ms: u64,
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct SweepSummary {
    pub graphs: usize,
    pub passed: usize,
    pub failed: usize,
    pub threshold: usize,
    pub max_d: usize,
}

fn fvec(f: &FVector) -> String {
    let parts: Vec<String> = f.counts().iter().map(u64::to_string).collect();
    format!("({})", parts.join(", "))
}

fn one_based(nodes: &[usize]) -> String {
    let parts: Vec<String> = nodes.iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Multi-line human summary; nodes are shown 1-based.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(out, "{k:<14}{v}");
        };
        if let Some(g) = &self.graph {
            let mut desc = format!("n={} edges={}", g.n, g.edges.len());
            if let Some(sp) = &g.split {
                let _ = write!(desc, " C={} S={}", one_based(&sp.clique), one_based(&sp.stable));
            }
            line("graph", desc);
        }
        if let Some(t) = &self.t_sequence {
            line("T", if t.is_empty() { "(empty)".into() } else { t.clone() });
        }
        if let Some(d) = self.d {
            line("d", d.to_string());
        }
        if let (Some(v), Some(f)) = (self.vertices, self.facets) {
            line("vertices", v.to_string());
            line("facets", f.to_string());
        }
        if let Some(s) = self.s {
            line("s", s.to_string());
        }
        if let Some(p) = self.three_pow_d {
            line("3^d", p.to_string());
        }
        if let Some(p) = self.predicted {
            line("predicted", p.to_string());
        }
        if let Some(p) = self.p_g {
            line("p_G", p.to_string());
        }
        if let Some(p) = self.pi_a {
            line("|Pi_A|", p.to_string());
        }
        if let Some(p) = self.pi_b {
            line("|Pi_B|", p.to_string());
        }
        if let Some(p) = self.fp_complement {
            line("f_p(compl)", p.to_string());
        }
        if let Some(c) = &self.classes {
            line(
                "classes",
                format!(
                    "primitive={} positive={} negative={} small={}",
                    c.primitive, c.positive, c.negative, c.small
                ),
            );
        }
        if let Some(f) = &self.f_vector {
            line("f-vector", fvec(f));
        }
        if let Some(f) = &self.hanner_f_vector {
            line("hanner", fvec(f));
        }
        if let Some(id) = &self.identities {
            let checks = [
                ("main", id.main),
                ("fplus", id.fplus),
                ("fp_piA", id.fp_pi_a),
                ("fp_piB", id.fp_pi_b),
                ("small", id.small),
                ("decomposition", id.decomposition),
                ("mod16", id.mod16),
                ("incl_excl", id.inclusion_exclusion),
            ];
            let parts: Vec<String> = checks
                .iter()
                .map(|(k, ok)| format!("{k}={}", if *ok { "ok" } else { "FAIL" }))
                .collect();
            line("identities", parts.join(" "));
        }
        if let Some(sm) = &self.summary {
            line(
                "summary",
                format!(
                    "{} graphs, {} passed, {} failed, {} threshold, max d={}",
                    sm.graphs, sm.passed, sm.failed, sm.threshold, sm.max_d
                ),
            );
        }
        line("result", if self.pass { "PASS" } else { "FAIL" }.into());
        line("time", format!("{} ms", self.wall_time_ms));
        out
    }
}
