//! Cell Reachability: a column of unit cells stacked on top of each other,
//! joined by horizontal passages. Cell `j` can be entered from cell `j'`
//! below it when there are `x_{j'+1} ≤ … ≤ x_j` with each `x_k` inside the
//! passage below cell `k`. Every cell has an entry cost; the exit cost of a
//! cell is the cheapest entry cost among the cells it can be entered from.
//!
//! [`CellReachSolver`] processes the cells bottom-up in amortized constant
//! time per cell. It keeps the staircase `k ↦ t_j(k)`, the leftmost point of
//! the passage below cell `j` reachable with budget `k`, as a list of
//! breakpoints sorted by decreasing `k` and increasing `t`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::UnitInterval;

/// Cost value standing for "no entry" in the solver's integer interface.
pub const NO_COST: u32 = u32::MAX;

/// A Cell Reachability instance with `n` cells and `n - 1` passages.
///
/// `passages[j]` lies between cell `j` and cell `j + 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "InstanceRepr", into = "InstanceRepr")]
pub struct CellReachInstance {
    passages: Vec<UnitInterval>,
    entry_costs: Vec<Option<u32>>,
}

#[derive(Serialize, Deserialize)]
struct InstanceRepr {
    passages: Vec<Option<[f64; 2]>>,
    entry_costs: Vec<Option<u32>>,
}

impl TryFrom<InstanceRepr> for CellReachInstance {
    type Error = Error;

    fn try_from(repr: InstanceRepr) -> Result<Self> {
        let passages = repr
            .passages
            .into_iter()
            .map(|p| match p {
                Some([a, b]) => UnitInterval::new(a, b),
                None => Ok(UnitInterval::Empty),
            })
            .collect::<Result<Vec<_>>>()?;
        CellReachInstance::new(passages, repr.entry_costs)
    }
}

impl From<CellReachInstance> for InstanceRepr {
    fn from(inst: CellReachInstance) -> Self {
        InstanceRepr {
            passages: inst.passages.iter().map(|p| p.bounds().map(|(a, b)| [a, b])).collect(),
            entry_costs: inst.entry_costs,
        }
    }
}

impl CellReachInstance {
    pub fn new(passages: Vec<UnitInterval>, entry_costs: Vec<Option<u32>>) -> Result<Self> {
        if entry_costs.is_empty() {
            return Err(Error::MalformedInstance("at least one cell is required".into()));
        }
        if passages.len() + 1 != entry_costs.len() {
            return Err(Error::MalformedInstance(format!(
                "{} cells need {} passages, found {}",
                entry_costs.len(),
                entry_costs.len() - 1,
                passages.len()
            )));
        }
        if entry_costs.iter().any(|c| matches!(c, Some(0) | Some(NO_COST))) {
            return Err(Error::MalformedInstance("entry costs must be positive integers".into()));
        }
        for p in &passages {
            if let Some((a, b)) = p.bounds() {
                UnitInterval::new(a, b)?;
            }
        }
        Ok(CellReachInstance { passages, entry_costs })
    }

    pub fn cells(&self) -> usize {
        self.entry_costs.len()
    }

    pub fn passages(&self) -> &[UnitInterval] {
        &self.passages
    }

    pub fn entry_costs(&self) -> &[Option<u32>] {
        &self.entry_costs
    }

    fn raw_cost(&self, j: usize) -> u32 {
        self.entry_costs[j].unwrap_or(NO_COST)
    }
}

/// Exit cost of every cell and the cell whose entry cost attains it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExitCosts {
    pub mu: Vec<Option<u32>>,
    pub witness: Vec<Option<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
struct Breakpoint {
    k: u32,
    t: f64,
    witness: usize,
}

const SENTINEL: Breakpoint = Breakpoint {
    k: 0,
    t: f64::INFINITY,
    witness: usize::MAX,
};

/// Incremental solver; feed it one cell at a time with [`start`](Self::start)
/// and [`step`](Self::step). Reusable across instances without reallocating.
#[derive(Debug, Default)]
pub struct CellReachSolver {
    list: VecDeque<Breakpoint>,
    below_cost: u32,
    cell: usize,
    pushes: usize,
    pops: usize,
}

impl CellReachSolver {
    pub fn new() -> Self {
        Self::default()
    }

    /// Resets the solver at the bottom cell with the given entry cost. The
    /// bottom cell has no exit cost.
    pub fn start(&mut self, entry_cost: u32) {
        self.list.clear();
        self.list.push_back(SENTINEL);
        self.pushes = 1;
        self.pops = 0;
        self.cell = 0;
        self.below_cost = entry_cost;
    }

    /// Index of the last processed cell.
    pub fn cell(&self) -> usize {
        self.cell
    }

    /// Moves up through `passage` into the next cell, whose entry cost is
    /// `entry_cost`, and returns that cell's exit cost with its witness.
    pub fn step(&mut self, passage: UnitInterval, entry_cost: u32) -> (u32, Option<usize>) {
        let below = self.below_cost;
        let below_cell = self.cell;
        self.cell += 1;
        self.below_cost = entry_cost;

        let Some((a, b)) = passage.bounds() else {
            // Nothing below an empty passage reaches anything above it.
            self.pops += self.list.len();
            self.list.clear();
            self.push_back(SENTINEL);
            return (NO_COST, None);
        };

        // Budgets that can start directly below, or whose leftmost point is
        // already left of the passage, all arrive at `a`.
        let mut left = (below, below_cell);
        while let Some(&front) = self.list.front() {
            if front.k >= below || front.t <= a {
                if front.k < left.0 {
                    left = (front.k, front.witness);
                }
                self.list.pop_front();
                self.pops += 1;
            } else {
                break;
            }
        }
        if left.0 != NO_COST {
            self.list.push_front(Breakpoint {
                k: left.0,
                t: a,
                witness: left.1,
            });
            self.pushes += 1;
        }

        // Budgets whose leftmost point is right of the passage are cut off.
        while self.list.back().is_some_and(|bp| bp.t > b) {
            self.list.pop_back();
            self.pops += 1;
        }
        let exit = match self.list.back() {
            Some(bp) => (bp.k, Some(bp.witness)),
            None => (NO_COST, None),
        };
        self.push_back(SENTINEL);
        exit
    }

    fn push_back(&mut self, bp: Breakpoint) {
        self.list.push_back(bp);
        self.pushes += 1;
    }

    pub fn pushes(&self) -> usize {
        self.pushes
    }

    pub fn pops(&self) -> usize {
        self.pops
    }

    /// Current breakpoints `(k, t_j(k))`, by decreasing `k`.
    pub fn breakpoints(&self) -> Vec<(u32, f64)> {
        self.list.iter().map(|bp| (bp.k, bp.t)).collect()
    }

    /// `t_j(k)` for the current cell.
    pub fn leftmost(&self, k: u32) -> f64 {
        self.list.iter().find(|bp| bp.k <= k).map_or(f64::INFINITY, |bp| bp.t)
    }

    /// Whether the breakpoints form a staircase terminated by `(0, ∞)`.
    pub fn is_staircase(&self) -> bool {
        let ordered = self
            .list
            .iter()
            .zip(self.list.iter().skip(1))
            .all(|(x, y)| x.k > y.k && x.t < y.t);
        ordered && self.list.back() == Some(&SENTINEL)
    }
}

/// Exit costs in `O(n)` total time.
pub fn solve_cell_reachability(inst: &CellReachInstance) -> ExitCosts {
    let n = inst.cells();
    let mut solver = CellReachSolver::new();
    solver.start(inst.raw_cost(0));
    let mut mu = vec![None; n];
    let mut witness = vec![None; n];
    for j in 1..n {
        let (k, w) = solver.step(inst.passages[j - 1], inst.raw_cost(j));
        debug_assert!(solver.is_staircase());
        if k != NO_COST {
            mu[j] = Some(k);
            witness[j] = w;
        }
    }
    debug_assert!(solver.pops() <= solver.pushes() && solver.pushes() <= 2 * n);
    ExitCosts { mu, witness }
}

/// Exit costs by propagating each start cell upward; `O(n²)`.
pub fn solve_cell_reachability_bruteforce(inst: &CellReachInstance) -> ExitCosts {
    let n = inst.cells();
    let mut mu: Vec<Option<u32>> = vec![None; n];
    let mut witness = vec![None; n];
    for start in 0..n {
        let Some(cost) = inst.entry_costs[start] else {
            continue;
        };
        let mut x = 0.0_f64;
        for k in start + 1..n {
            let Some((a, b)) = inst.passages[k - 1].bounds() else {
                break;
            };
            x = x.max(a);
            if x > b {
                break;
            }
            if mu[k].is_none_or(|m| cost < m) {
                mu[k] = Some(cost);
                witness[k] = Some(start);
            }
        }
    }
    ExitCosts { mu, witness }
}

/// Whether cell `to` can be entered from cell `from`.
pub fn reaches(inst: &CellReachInstance, from: usize, to: usize) -> bool {
    if from >= to || to >= inst.cells() {
        return false;
    }
    let mut x = 0.0_f64;
    for passage in &inst.passages[from..to] {
        match passage.bounds() {
            Some((a, b)) => {
                x = x.max(a);
                if x > b {
                    return false;
                }
            }
            None => return false,
        }
    }
    true
}
