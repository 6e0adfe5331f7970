//! Traces, orbits and orbit admissibility.
//!
//! A trace is an initial state plus an input word plus the derived state
//! sequence; tick `t` indexes `states[t]`, so a trace over `n` inputs has
//! ticks `0..=n`. The orbit of a trace is the set of states it visits.

use std::collections::HashSet;

use super::state::{GameState, InputWord, Payload};

/// An evolution: `states[i]` is the state after the first `i` inputs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Trace<P: Payload> {
    id: String,
    model_id: String,
    word: InputWord,
    states: Vec<GameState<P>>,
}

impl<P: Payload> Trace<P> {
    pub(crate) fn from_parts(
        id: impl Into<String>,
        model_id: impl Into<String>,
        word: InputWord,
        states: Vec<GameState<P>>,
    ) -> Self {
        assert_eq!(
            states.len(),
            word.len() + 1,
            "a trace needs exactly one more state than inputs"
        );
        Trace {
            id: id.into(),
            model_id: model_id.into(),
            word,
            states,
        }
    }

    /// Builds a trace from pre-computed states without re-deriving them
    /// through a model. Intended for constructed fixtures (detector and
    /// validator inputs); everything produced by `GameModel::run` or the
    /// simulator already satisfies the derivation invariant.
    pub fn synthetic(
        id: impl Into<String>,
        model_id: impl Into<String>,
        word: InputWord,
        states: Vec<GameState<P>>,
    ) -> Self {
        Self::from_parts(id, model_id, word, states)
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn model_id(&self) -> &str {
        &self.model_id
    }

    pub fn word(&self) -> &InputWord {
        &self.word
    }

    pub fn states(&self) -> &[GameState<P>] {
        &self.states
    }

    /// Number of inputs; ticks run `0..=ticks()`.
    pub fn ticks(&self) -> usize {
        self.word.len()
    }

    pub fn state(&self, tick: usize) -> &GameState<P> {
        &self.states[tick]
    }

    pub fn initial(&self) -> &GameState<P> {
        &self.states[0]
    }

    pub fn last(&self) -> &GameState<P> {
        self.states.last().expect("traces are never empty")
    }

    /// The trace truncated to its first `ticks` inputs.
    pub fn prefix(&self, ticks: usize) -> Trace<P> {
        Trace {
            id: format!("{}[..{ticks}]", self.id),
            model_id: self.model_id.clone(),
            word: self.word.prefix(ticks),
            states: self.states[..=ticks].to_vec(),
        }
    }

    /// The sub-trace spanning states `start..=end` and the inputs between
    /// them.
    pub fn segment(&self, start: usize, end: usize) -> Trace<P> {
        assert!(start <= end && end < self.states.len());
        Trace {
            id: format!("{}[{start}..{end}]", self.id),
            model_id: self.model_id.clone(),
            word: self.word.slice(start, end),
            states: self.states[start..=end].to_vec(),
        }
    }

    /// All states visited along the trace (prefix closure of the evolution).
    pub fn orbit(&self) -> OrbitSet<P> {
        OrbitSet {
            visited: self.states.iter().cloned().collect(),
        }
    }

    /// Classifies the trace against the two orbit constraints: an orbit may
    /// not revisit a state and may not consist only of one stable state.
    pub fn admissibility(&self) -> Admissibility {
        let first = &self.states[0];
        if self.states.iter().all(|s| s == first) {
            return Admissibility::StableOnly;
        }
        let mut seen: HashSet<&GameState<P>> = HashSet::with_capacity(self.states.len());
        for state in &self.states {
            if !seen.insert(state) {
                return Admissibility::Cycle;
            }
        }
        Admissibility::Admissible
    }
}

/// Orbit classification. `StableOnly` wins over `Cycle` for traces that
/// never leave their initial state.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Admissibility {
    Admissible,
    Cycle,
    StableOnly,
}

/// The set of states visited by a trace.
#[derive(Clone, Debug)]
pub struct OrbitSet<P: Payload> {
    visited: HashSet<GameState<P>>,
}

impl<P: Payload> OrbitSet<P> {
    pub fn empty() -> Self {
        OrbitSet { visited: HashSet::new() }
    }

    pub fn len(&self) -> usize {
        self.visited.len()
    }

    pub fn is_empty(&self) -> bool {
        self.visited.is_empty()
    }

    pub fn contains(&self, state: &GameState<P>) -> bool {
        self.visited.contains(state)
    }

    pub fn iter(&self) -> impl Iterator<Item = &GameState<P>> {
        self.visited.iter()
    }

    pub fn union(mut self, other: &OrbitSet<P>) -> OrbitSet<P> {
        self.visited.extend(other.visited.iter().cloned());
        self
    }

    /// Sorted canonical serializations, for deterministic reporting.
    pub fn sorted_canons(&self) -> Vec<String> {
        let mut canons: Vec<String> = self.visited.iter().map(|s| s.canon()).collect();
        canons.sort();
        canons
    }
}

impl<P: Payload> PartialEq for OrbitSet<P> {
    fn eq(&self, other: &Self) -> bool {
        self.visited == other.visited
    }
}

impl<P: Payload> Eq for OrbitSet<P> {}
