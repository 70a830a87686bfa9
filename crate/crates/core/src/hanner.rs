//! f-vector calculus for Hanner polytopes built from threshold graphs.
//!
//! Appending an isolated node multiplies the Hansen polytope by a segment.
//! Appending a dominating node is the complement of appending an isolated
//! node to the complement graph, and complementation is polarity, so it is
//! `polar(polar(P) × segment)`.

use serde::{Deserialize, Serialize};

use crate::graph::{Step, ThresholdSeq};

/// Face counts `f_0, ..., f_d` by dimension, with `f_d = 1` for the polytope.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn dim(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// Number of nonempty faces.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// Euler-Poincaré: `Σ_{k<d} (-1)^k f_k = 1 - (-1)^d`.
    pub fn satisfies_euler(&self) -> bool {
        let d = self.dim();
        let alt: i128 = self.0[..d]
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i128 } else { -(f as i128) })
            .sum();
        let rhs = if d.is_multiple_of(2) { 0 } else { 2 };
        self.0.last() == Some(&1) && alt == rhs
    }
}

pub fn fvec_segment() -> FVector {
    FVector(vec![2, 1])
}

/// Nonempty faces of `a × b` are products of nonempty faces, dimensions add.
pub fn fvec_product(a: &FVector, b: &FVector) -> FVector {
    let mut out = vec![0u64; a.0.len() + b.0.len() - 1];
    for (i, &x) in a.0.iter().enumerate() {
        for (j, &y) in b.0.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    FVector(out)
}

/// Reverses the proper-face counts and reattaches `f_d = 1`.
pub fn fvec_polar(a: &FVector) -> FVector {
    let d = a.dim();
    let mut out: Vec<u64> = a.0[..d].iter().rev().copied().collect();
    out.push(1);
    FVector(out)
}

/// f-vector of `H(build_threshold(seq))`, computed without building it.
pub fn hanner_from_threshold(seq: &ThresholdSeq) -> FVector {
    let segment = fvec_segment();
    seq.steps()
        .iter()
        .fold(segment.clone(), |acc, step| match step {
            Step::Isolated => fvec_product(&acc, &segment),
            Step::Dominating => fvec_polar(&fvec_product(&fvec_polar(&acc), &segment)),
        })
}
