//! Greedy descent with heating phases, in the spirit of simulated annealing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::state::{MaskState, RawMove, MAX_VERTICES};
use super::FlipMove;
use crate::complex::{Complex, FVector, Face};
use crate::error::{Error, Result};
use crate::par;

/// Tunable search parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct Schedule {
    /// Random moves in the first heating phase.
    pub initial_heat: u32,
    /// Factor applied to the heating length after a phase that did not improve the best.
    pub heat_growth: f64,
    pub heat_cap: u32,
    /// Relative weight of each move kind during heating is `(1 + min(i, d-i))^bias`.
    pub middle_bias: f64,
    /// Extra factor on the weight of 0-moves while heating.
    pub zero_move_weight: f64,
    /// Stop once the objective is lexicographically ≤ this prefix.
    pub target: Option<Vec<u64>>,
    /// Call the observer every this many moves (0 = never).
    pub checkpoint_every: u64,
}

impl Default for Schedule {
    fn default() -> Self {
        Schedule {
            initial_heat: 10,
            heat_growth: 1.5,
            heat_cap: 200,
            middle_bias: 2.0,
            zero_move_weight: 0.1,
            target: None,
            checkpoint_every: 0,
        }
    }
}

impl Schedule {
    pub fn with_target(mut self, target: Vec<u64>) -> Self {
        self.target = Some(target);
        self
    }

    pub fn stop_at_vertices(self, n: u64) -> Self {
        self.with_target(vec![n])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReduceStats {
    pub seed: u64,
    pub moves: u64,
    pub moves_to_best: u64,
    pub per_kind: Vec<u64>,
    pub heat_phases: u64,
    pub initial: FVector,
    pub best: FVector,
    pub reached_target: bool,
}

#[derive(Clone, Debug)]
pub struct ReduceResult {
    pub complex: Complex,
    /// Moves leading from the input to `complex`.
    pub trace: Vec<FlipMove>,
    pub stats: ReduceStats,
}

fn below_target(f: &[u64], target: &Option<Vec<u64>>) -> bool {
    match target {
        Some(t) => {
            let k = t.len().min(f.len());
            f[..k] <= t[..k]
        }
        None => false,
    }
}

struct Search<'a> {
    state: MaskState,
    rng: ChaCha8Rng,
    schedule: &'a Schedule,
    trace: Vec<RawMove>,
    per_kind: Vec<u64>,
    best: Option<(Vec<u64>, MaskState, usize)>,
    best_f: Vec<u64>,
}

impl Search<'_> {
    fn apply(&mut self, m: RawMove) {
        self.state.apply(m);
        self.trace.push(m);
        self.per_kind[m.kind] += 1;
    }

    /// Records the current complex when it beats the best so far.
    fn snapshot(&mut self) {
        if self.state.objective() < &self.best_f[..] {
            self.best_f = self.state.f.clone();
            self.best = Some((self.best_f.clone(), self.state.clone(), self.trace.len()));
        }
    }

    /// One improving move of the highest available kind, ties broken at random.
    fn greedy_step(&mut self) -> bool {
        let d = self.state.d;
        let mut legal: Vec<RawMove> = Vec::new();
        for kind in (d / 2 + 1..=d).rev() {
            legal.extend(self.state.candidates(kind).iter().filter_map(|&a| {
                self.state.legal_insert(kind, a).map(|b| RawMove { kind, remove: a, insert: b })
            }));
            if !legal.is_empty() {
                let m = legal[self.rng.random_range(0..legal.len())];
                self.apply(m);
                return true;
            }
        }
        false
    }

    /// A random legal move, kinds weighted toward the middle dimensions.
    fn random_move(&mut self) -> Option<RawMove> {
        let d = self.state.d;
        let mut weights: Vec<f64> = (0..=d)
            .map(|i| {
                if self.state.candidates(i).is_empty() || (i == 0 && self.state.n >= MAX_VERTICES) {
                    return 0.0;
                }
                let w = (1.0 + i.min(d - i) as f64).powf(self.schedule.middle_bias);
                if i == 0 { w * self.schedule.zero_move_weight } else { w }
            })
            .collect();
        loop {
            let total: f64 = weights.iter().sum();
            if total <= 0.0 {
                return None;
            }
            let mut x = self.rng.random::<f64>() * total;
            let mut kind = d;
            for (i, &w) in weights.iter().enumerate() {
                if w > 0.0 && x < w {
                    kind = i;
                    break;
                }
                x -= w;
            }
            if weights[kind] <= 0.0 {
                kind = weights.iter().rposition(|&w| w > 0.0).unwrap();
            }
            let cands = self.state.candidates(kind);
            for _ in 0..16 {
                let a = cands[self.rng.random_range(0..cands.len())];
                if let Some(b) = self.state.legal_insert(kind, a) {
                    return Some(RawMove { kind, remove: a, insert: b });
                }
            }
            let legal: Vec<RawMove> = cands
                .iter()
                .filter_map(|&a| self.state.legal_insert(kind, a).map(|b| RawMove { kind, remove: a, insert: b }))
                .collect();
            if !legal.is_empty() {
                return Some(legal[self.rng.random_range(0..legal.len())]);
            }
            weights[kind] = 0.0;
        }
    }
}

/// Reduces with one seed. Deterministic in `(c, seed, budget, schedule)`.
pub fn reduce(c: &Complex, seed: u64, budget: u64, schedule: &Schedule) -> Result<ReduceResult> {
    reduce_observed(c, seed, budget, schedule, &mut |_, _| {})
}

/// Like [`reduce`], calling `observer(moves, current)` every
/// `schedule.checkpoint_every` moves and once more on the returned best complex.
pub fn reduce_observed(
    c: &Complex,
    seed: u64,
    budget: u64,
    schedule: &Schedule,
    observer: &mut dyn FnMut(u64, &Complex),
) -> Result<ReduceResult> {
    if budget == 0 {
        return Err(Error::BudgetZero);
    }
    if c.n() > MAX_VERTICES {
        return Err(Error::TooManyVertices { n: c.n(), max: MAX_VERTICES });
    }
    let d = c.dim();
    let state = MaskState::new(c);
    let initial_f = state.f.clone();
    // ∂Δ^{d+1} is the only d-manifold on d+2 vertices; nothing beats it
    let floor = c.n() == d + 2;
    let mut s = Search {
        best_f: initial_f.clone(),
        state,
        rng: ChaCha8Rng::seed_from_u64(seed),
        schedule,
        trace: Vec::new(),
        per_kind: vec![0; d + 1],
        best: None,
    };
    let mut heat = schedule.initial_heat as f64;
    let mut heat_phases = 0u64;
    let mut best_at_phase_start = initial_f.clone();
    let mut moves = 0u64;
    let mut done = floor || below_target(&initial_f, &schedule.target);
    let mut checkpoint = |moves: u64, st: &MaskState| {
        if schedule.checkpoint_every > 0 && moves.is_multiple_of(schedule.checkpoint_every) {
            observer(moves, &st.to_complex());
        }
    };
    while !done && moves < budget {
        if s.greedy_step() {
            moves += 1;
            checkpoint(moves, &s.state);
            if below_target(&s.state.f, &schedule.target) || s.state.n == d + 2 {
                done = true;
            }
            continue;
        }
        s.snapshot();
        heat_phases += 1;
        if s.best_f < best_at_phase_start {
            heat = schedule.initial_heat as f64;
        } else if heat_phases > 1 {
            heat = (heat * schedule.heat_growth).min(schedule.heat_cap as f64);
        }
        best_at_phase_start = s.best_f.clone();
        for _ in 0..heat.round() as u64 {
            if moves >= budget {
                break;
            }
            s.snapshot();
            let Some(m) = s.random_move() else { break };
            s.apply(m);
            moves += 1;
            checkpoint(moves, &s.state);
            if below_target(&s.state.f, &schedule.target) {
                done = true;
                break;
            }
        }
    }
    s.snapshot();
    let (best_state, best_len) = match s.best.take() {
        Some((_, st, len)) => (st, len),
        None => (MaskState::new(c), 0),
    };
    let complex = if best_len == 0 { c.clone() } else { best_state.to_complex() };
    let trace: Vec<FlipMove> = s.trace[..best_len]
        .iter()
        .map(|m| FlipMove { kind: m.kind, remove: Face::from_mask(m.remove), insert: Face::from_mask(m.insert) })
        .collect();
    observer(moves, &complex);
    let best = complex.f_vector();
    let reached_target = below_target(&best.counts, &schedule.target);
    Ok(ReduceResult {
        complex,
        trace,
        stats: ReduceStats {
            seed,
            moves,
            moves_to_best: best_len as u64,
            per_kind: s.per_kind,
            heat_phases,
            initial: FVector::new(initial_f),
            best,
            reached_target,
        },
    })
}

/// Independent runs over `seeds`; the winner is the least `(objective, seed)`.
pub fn reduce_seeds(c: &Complex, seeds: &[u64], budget: u64, schedule: &Schedule) -> Result<ReduceResult> {
    if seeds.is_empty() {
        return Err(Error::BudgetZero);
    }
    let runs = par::map(seeds.to_vec(), |seed| reduce(c, seed, budget, schedule));
    let mut best: Option<ReduceResult> = None;
    for r in runs {
        let r = r?;
        let better = match &best {
            None => true,
            Some(b) => (&r.stats.best.counts, r.stats.seed) < (&b.stats.best.counts, b.stats.seed),
        };
        if better {
            best = Some(r);
        }
    }
    Ok(best.expect("at least one seed"))
}
