//! Local-Hausdorff and Local-Fréchet simplification: a shortest path in the
//! graph of admissible shortcuts.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Metric, Polyline};
use crate::result::{SimplificationResult, Variant};

/// The measure applied to each shortcut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocalMeasure {
    Hausdorff,
    Frechet,
}

impl LocalMeasure {
    pub fn variant(self) -> Variant {
        match self {
            LocalMeasure::Hausdorff => Variant::LocalHausdorff,
            LocalMeasure::Frechet => Variant::LocalFrechet,
        }
    }
}

/// Directed acyclic graph on the vertices `0..=n` with an edge `i → k`
/// (`i < k`) whenever `v_i v_k` may replace `P[i … k]`. Rows are bitsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortcutGraph {
    nodes: usize,
    words: usize,
    bits: Vec<u64>,
}

impl ShortcutGraph {
    fn empty(nodes: usize) -> Self {
        let words = nodes.div_ceil(64);
        ShortcutGraph {
            nodes,
            words,
            bits: vec![0; nodes * words],
        }
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn has_edge(&self, i: usize, k: usize) -> bool {
        i < self.nodes && k < self.nodes && self.bits[i * self.words + k / 64] >> (k % 64) & 1 == 1
    }

    /// Successors of `i` in increasing order.
    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.bits[i * self.words..(i + 1) * self.words];
        row.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + bit)
            })
        })
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Minimum-hop path from `0` to the last node; among those, the
    /// lexicographically smallest.
    pub fn shortest_path(&self) -> Option<Vec<usize>> {
        let target = self.nodes.checked_sub(1)?;
        // Hops to the target; edges only go forward, so one backward pass
        // settles every node.
        let mut hops = vec![usize::MAX; self.nodes];
        hops[target] = 0;
        for i in (0..target).rev() {
            hops[i] = self
                .successors(i)
                .filter(|&k| hops[k] != usize::MAX)
                .map(|k| hops[k] + 1)
                .min()
                .unwrap_or(usize::MAX);
        }
        if hops[0] == usize::MAX {
            return None;
        }
        let mut path = vec![0];
        let mut cur = 0;
        while cur != target {
            cur = self.successors(cur).find(|&k| hops[k] + 1 == hops[cur])?;
            path.push(cur);
        }
        Some(path)
    }
}

/// Builds the shortcut graph; rows are checked in parallel.
pub fn build_shortcut_graph(curve: &Polyline, delta: f64, metric: Metric, measure: LocalMeasure) -> Result<ShortcutGraph> {
    check_delta(delta)?;
    let nodes = curve.len();
    let mut graph = ShortcutGraph::empty(nodes);
    let words = graph.words;
    let variant = measure.variant();
    graph.bits.par_chunks_mut(words).enumerate().for_each(|(i, row)| {
        for k in i + 1..nodes {
            if variant.shortcut_ok(curve, i, k, delta, metric) {
                row[k / 64] |= 1 << (k % 64);
            }
        }
    });
    Ok(graph)
}

pub(crate) fn check_delta(delta: f64) -> Result<()> {
    if delta >= 0.0 && delta.is_finite() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "delta must be finite and non-negative, got {delta}"
        )))
    }
}

/// Minimum-size simplification under a local measure.
pub fn simplify_local(curve: &Polyline, delta: f64, metric: Metric, measure: LocalMeasure) -> Result<SimplificationResult> {
    let graph = build_shortcut_graph(curve, delta, metric, measure)?;
    let indices = graph.shortest_path().expect("consecutive vertices are always connected");
    Ok(SimplificationResult::new(indices, measure.variant(), delta, metric.p))
}
