//! Scripted agents, seeded simulation and trait profiling.
//!
//! A profile aggregates Behavlet detections over a batch of traces into
//! per-trait scores. For each trait, the per-trace quantities of all
//! Behavlets sharing that trait label are summed, the per-trace values are
//! averaged, and the mean is min-max normalized against the batch (a
//! degenerate batch where min equals max scores 1 when positive, else 0).
//! Raw per-Behavlet quantities are always retained as evidence so other
//! normalizations stay recomputable.

pub mod agents;

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{GameModel, GameState, InputSymbol, InputWord, Payload, Trace};
use crate::batch;
use crate::behavlet::{Behavlet, DetectError};

type PolicyFn<P> = Arc<
    dyn Fn(&GameModel<P>, &GameState<P>, &mut ChaCha8Rng) -> Option<InputSymbol> + Send + Sync,
>;

/// A scripted player: an id, an archetype label and a move policy. The
/// policy sees the model (for legality queries) and must return a legal
/// symbol or `None` to concede there is no move.
pub struct AgentSpec<P: Payload> {
    pub id: String,
    pub archetype: String,
    policy: PolicyFn<P>,
}

impl<P: Payload> AgentSpec<P> {
    pub fn new(
        id: impl Into<String>,
        archetype: impl Into<String>,
        policy: impl Fn(&GameModel<P>, &GameState<P>, &mut ChaCha8Rng) -> Option<InputSymbol>
            + Send
            + Sync
            + 'static,
    ) -> Self {
        AgentSpec {
            id: id.into(),
            archetype: archetype.into(),
            policy: Arc::new(policy),
        }
    }

    pub fn choose(
        &self,
        model: &GameModel<P>,
        state: &GameState<P>,
        rng: &mut ChaCha8Rng,
    ) -> Option<InputSymbol> {
        (self.policy)(model, state, rng)
    }
}

impl<P: Payload> Clone for AgentSpec<P> {
    fn clone(&self) -> Self {
        AgentSpec {
            id: self.id.clone(),
            archetype: self.archetype.clone(),
            policy: Arc::clone(&self.policy),
        }
    }
}

/// Why a simulation stopped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SimOutcome {
    /// Ran the full tick budget.
    TickLimit,
    /// The agent had no move (terminal state).
    Terminal,
    /// The agent returned an illegal symbol; the trace is the prefix up to
    /// the offence and the agent forfeits.
    Forfeit { symbol: InputSymbol },
}

#[derive(Clone, Debug)]
pub struct SimRun<P: Payload> {
    pub trace: Trace<P>,
    pub outcome: SimOutcome,
}

/// Deterministic simulation: one trace per `(model, agent, seed)`. The
/// seed feeds both the agent's generator and the model's seeded initial
/// state, so nothing else can inject randomness.
pub fn simulate<P: Payload>(
    model: &GameModel<P>,
    agent: &AgentSpec<P>,
    seed: u64,
    max_ticks: usize,
) -> SimRun<P> {
    assert!(max_ticks >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let init = model.seeded_initial(seed);
    let mut states = vec![init];
    let mut word = InputWord::empty();
    let mut outcome = SimOutcome::TickLimit;
    for _ in 0..max_ticks {
        let current = states.last().expect("nonempty");
        let Some(sym) = agent.choose(model, current, &mut rng) else {
            outcome = SimOutcome::Terminal;
            break;
        };
        match model.step(current, &sym) {
            Some(next) => {
                states.push(next);
                word.push(sym);
            }
            None => {
                outcome = SimOutcome::Forfeit { symbol: sym };
                break;
            }
        }
    }
    let id = format!("{}-{}-s{seed}", model.id(), agent.id);
    SimRun {
        trace: Trace::synthetic(id, model.id(), word, states),
        outcome,
    }
}

/// Simulates one seed per entry of `seeds`, in parallel when the crate's
/// `parallel` feature is on. Output order follows seed order.
pub fn simulate_batch<P: Payload>(
    model: &GameModel<P>,
    agent: &AgentSpec<P>,
    seeds: std::ops::Range<u64>,
    max_ticks: usize,
) -> Vec<SimRun<P>> {
    let seeds: Vec<u64> = seeds.collect();
    batch::map_slice(&seeds, |&seed| simulate(model, agent, seed, max_ticks))
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ProfileError {
    #[error("cannot profile an empty trace set")]
    EmptyTraceSet,
    #[error(transparent)]
    Detect(#[from] DetectError),
}

/// Raw evidence for one Behavlet across the batch.
#[derive(Clone, Debug, PartialEq)]
pub struct Evidence {
    pub trait_label: String,
    pub total: f64,
    /// Per-trace quantities, sorted by trace id.
    pub per_trace: Vec<(String, f64)>,
}

/// Normalized per-trait scores plus the raw evidence they came from.
#[derive(Clone, Debug, PartialEq)]
pub struct TraitProfile {
    pub trait_scores: BTreeMap<String, f64>,
    pub evidence: BTreeMap<String, Evidence>,
    pub trace_count: usize,
}

pub fn profile<P: Payload>(
    traces: &[Trace<P>],
    behavlets: &[Behavlet<P>],
) -> Result<TraitProfile, ProfileError> {
    if traces.is_empty() {
        return Err(ProfileError::EmptyTraceSet);
    }
    // Quantities per behavlet per trace, computed in parallel over traces.
    let rows: Vec<Vec<(String, f64)>> = {
        let results: Vec<Result<Vec<(String, f64)>, DetectError>> =
            batch::map_slice(traces, |trace| {
                behavlets
                    .iter()
                    .map(|b| {
                        let ds = b.detect(trace)?;
                        Ok((trace.id().to_string(), b.quantify(&ds, trace)))
                    })
                    .collect()
            });
        results.into_iter().collect::<Result<_, _>>()?
    };

    let mut evidence: BTreeMap<String, Evidence> = BTreeMap::new();
    for (bi, b) in behavlets.iter().enumerate() {
        let mut per_trace: Vec<(String, f64)> =
            rows.iter().map(|row| row[bi].clone()).collect();
        per_trace.sort_by(|a, b| a.0.cmp(&b.0));
        let total = per_trace.iter().map(|(_, q)| q).sum();
        evidence.insert(
            b.id.clone(),
            Evidence {
                trait_label: b.trait_label.clone(),
                total,
                per_trace,
            },
        );
    }

    // Per trait: per-trace sums over its behavlets, then a batch-relative
    // min-max normalization of the mean.
    let mut trait_scores = BTreeMap::new();
    let traits: std::collections::BTreeSet<&str> =
        behavlets.iter().map(|b| b.trait_label.as_str()).collect();
    for trait_label in traits {
        let per_trace_sums: Vec<f64> = (0..traces.len())
            .map(|ti| {
                behavlets
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| b.trait_label == trait_label)
                    .map(|(bi, _)| rows[ti][bi].1)
                    .sum()
            })
            .collect();
        let mean = per_trace_sums.iter().sum::<f64>() / per_trace_sums.len() as f64;
        let min = per_trace_sums.iter().copied().fold(f64::INFINITY, f64::min);
        let max = per_trace_sums.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let score = if max > min {
            (mean - min) / (max - min)
        } else if max > 0.0 {
            1.0
        } else {
            0.0
        };
        trait_scores.insert(trait_label.to_string(), score);
    }

    Ok(TraitProfile {
        trait_scores,
        evidence,
        trace_count: traces.len(),
    })
}
