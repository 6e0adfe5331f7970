//! Abstraction maps and simulation checking.
//!
//! An abstraction map sends concrete states to abstract states and input
//! symbols to abstract symbols; the symbol map lifts to words pointwise,
//! so it preserves concatenation and the empty word by construction.
//!
//! Abstract models are built empirically: the transition relation is the
//! union of the images of every observed concrete step (plus any declared
//! extra transitions). Verification is therefore sample-relative — a PASS
//! says every checked step's image is in the relation, and the report
//! carries the coverage numbers to make that explicit.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::{GameModel, GameState, InputSymbol, InputWord, Payload, Trace};
use crate::batch;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AbstractState(pub String);

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AbstractSymbol(pub String);

impl std::fmt::Display for AbstractState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::fmt::Display for AbstractSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

type StateMapFn<P> = Arc<dyn Fn(&GameState<P>) -> AbstractState + Send + Sync>;
type InputMapFn = Arc<dyn Fn(&InputSymbol) -> AbstractSymbol + Send + Sync>;

/// A pair of maps from concrete states and inputs into an abstract space.
pub struct AbstractionMap<P: Payload> {
    pub id: String,
    state_map: StateMapFn<P>,
    input_map: InputMapFn,
}

impl<P: Payload> AbstractionMap<P> {
    pub fn new(
        id: impl Into<String>,
        state_map: impl Fn(&GameState<P>) -> AbstractState + Send + Sync + 'static,
        input_map: impl Fn(&InputSymbol) -> AbstractSymbol + Send + Sync + 'static,
    ) -> Self {
        AbstractionMap {
            id: id.into(),
            state_map: Arc::new(state_map),
            input_map: Arc::new(input_map),
        }
    }

    /// The identity abstraction: canonical serializations as abstract
    /// states, symbol text as abstract symbols.
    pub fn identity() -> Self {
        AbstractionMap::new(
            "identity",
            |s: &GameState<P>| AbstractState(s.canon()),
            |sym: &InputSymbol| AbstractSymbol(sym.to_string()),
        )
    }

    pub fn state(&self, s: &GameState<P>) -> AbstractState {
        (self.state_map)(s)
    }

    pub fn input(&self, sym: &InputSymbol) -> AbstractSymbol {
        (self.input_map)(sym)
    }

    /// Pointwise lift of the symbol map to words.
    pub fn lift_word(&self, word: &InputWord) -> Vec<AbstractSymbol> {
        word.symbols().iter().map(|s| self.input(s)).collect()
    }
}

impl<P: Payload> Clone for AbstractionMap<P> {
    fn clone(&self) -> Self {
        AbstractionMap {
            id: self.id.clone(),
            state_map: Arc::clone(&self.state_map),
            input_map: Arc::clone(&self.input_map),
        }
    }
}

/// A trace mapped pointwise into the abstract space. Consecutive duplicate
/// abstract states are kept, so tick indices line up with the source.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbstractTrace {
    pub trace_id: String,
    pub states: Vec<AbstractState>,
    pub word: Vec<AbstractSymbol>,
}

pub fn abstract_trace<P: Payload>(trace: &Trace<P>, map: &AbstractionMap<P>) -> AbstractTrace {
    AbstractTrace {
        trace_id: trace.id().to_string(),
        states: trace.states().iter().map(|s| map.state(s)).collect(),
        word: map.lift_word(trace.word()),
    }
}

/// An abstract transition system: possibly nondeterministic, built from
/// observed transitions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbstractModel {
    pub id: String,
    pub states: BTreeSet<AbstractState>,
    pub alphabet: BTreeSet<AbstractSymbol>,
    pub initials: BTreeSet<AbstractState>,
    pub transitions: BTreeSet<(AbstractState, AbstractSymbol, AbstractState)>,
}

impl AbstractModel {
    pub fn empty(id: impl Into<String>) -> Self {
        AbstractModel {
            id: id.into(),
            states: BTreeSet::new(),
            alphabet: BTreeSet::new(),
            initials: BTreeSet::new(),
            transitions: BTreeSet::new(),
        }
    }

    /// Declares an extra transition beyond the observed ones.
    pub fn insert_transition(
        &mut self,
        from: AbstractState,
        via: AbstractSymbol,
        to: AbstractState,
    ) {
        self.states.insert(from.clone());
        self.states.insert(to.clone());
        self.alphabet.insert(via.clone());
        self.transitions.insert((from, via, to));
    }

    pub fn contains(&self, from: &AbstractState, via: &AbstractSymbol, to: &AbstractState) -> bool {
        self.transitions
            .contains(&(from.clone(), via.clone(), to.clone()))
    }

    /// Union of two abstract models (free composition at the abstract
    /// level: all behaviours of both parts).
    pub fn merge(&self, other: &AbstractModel) -> AbstractModel {
        let mut out = self.clone();
        out.id = format!("compose({},{})", self.id, other.id);
        out.states.extend(other.states.iter().cloned());
        out.alphabet.extend(other.alphabet.iter().cloned());
        out.initials.extend(other.initials.iter().cloned());
        out.transitions.extend(other.transitions.iter().cloned());
        out
    }

    /// Every transition source must be reachable from an initial state.
    pub fn is_prefix_closed(&self) -> bool {
        let mut reachable: BTreeSet<&AbstractState> = self.initials.iter().collect();
        loop {
            let mut grew = false;
            for (from, _, to) in &self.transitions {
                if reachable.contains(from) && reachable.insert(to) {
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        self.transitions.iter().all(|(from, _, _)| reachable.contains(from))
    }
}

/// Construction statistics; `empty_sample` is the caller's warning that
/// the relation was built from nothing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildStats {
    pub traces: usize,
    pub steps: usize,
    pub empty_sample: bool,
}

/// Builds the abstract model whose relation is the union of the images of
/// all observed concrete transitions.
pub fn build_abstract_model<P: Payload>(
    model: &GameModel<P>,
    map: &AbstractionMap<P>,
    traces: &[Trace<P>],
) -> (AbstractModel, BuildStats) {
    debug_assert!(traces.iter().all(|t| t.model_id() == model.id()));
    let images: Vec<AbstractTrace> = batch::map_slice(traces, |t| abstract_trace(t, map));
    let mut out = AbstractModel::empty(format!("{}[{}]", model.id(), map.id));
    let mut steps = 0;
    for image in &images {
        out.initials.insert(image.states[0].clone());
        out.states.insert(image.states[0].clone());
        for (i, via) in image.word.iter().enumerate() {
            steps += 1;
            out.insert_transition(image.states[i].clone(), via.clone(), image.states[i + 1].clone());
        }
    }
    let stats = BuildStats {
        traces: traces.len(),
        steps,
        empty_sample: traces.is_empty(),
    };
    (out, stats)
}

/// One concrete step whose image is missing from the abstract relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimCounterexample {
    pub trace_id: String,
    pub tick: usize,
    pub concrete_from: String,
    pub symbol: String,
    pub concrete_to: String,
    pub abstract_from: AbstractState,
    pub abstract_symbol: AbstractSymbol,
    pub abstract_to: AbstractState,
}

#[derive(Clone, Debug)]
pub struct SimulationReport {
    pub pass: bool,
    pub traces_checked: usize,
    pub steps_checked: usize,
    pub counterexamples: Vec<SimCounterexample>,
}

/// Checks that the abstract model simulates every step of every trace:
/// for each concrete `s -a-> s'`, the image must be a transition.
pub fn verify_simulation<P: Payload>(
    model: &GameModel<P>,
    abstract_model: &AbstractModel,
    map: &AbstractionMap<P>,
    traces: &[Trace<P>],
) -> SimulationReport {
    debug_assert!(traces.iter().all(|t| t.model_id() == model.id()));
    let per_trace: Vec<(usize, Vec<SimCounterexample>)> = batch::map_slice(traces, |trace| {
        let mut bad = Vec::new();
        let states = trace.states();
        for (i, sym) in trace.word().symbols().iter().enumerate() {
            let from = map.state(&states[i]);
            let via = map.input(sym);
            let to = map.state(&states[i + 1]);
            if !abstract_model.contains(&from, &via, &to) {
                bad.push(SimCounterexample {
                    trace_id: trace.id().to_string(),
                    tick: i + 1,
                    concrete_from: states[i].canon(),
                    symbol: sym.to_string(),
                    concrete_to: states[i + 1].canon(),
                    abstract_from: from,
                    abstract_symbol: via,
                    abstract_to: to,
                });
            }
        }
        (trace.ticks(), bad)
    });
    let steps_checked = per_trace.iter().map(|(n, _)| n).sum();
    let counterexamples: Vec<SimCounterexample> =
        per_trace.into_iter().flat_map(|(_, bad)| bad).collect();
    SimulationReport {
        pass: counterexamples.is_empty(),
        traces_checked: traces.len(),
        steps_checked,
        counterexamples,
    }
}

#[derive(Clone, Debug)]
pub struct SquareReport {
    /// Steps of the composed sample whose image is missing from the
    /// composed abstract model (bottom-right arrow fails).
    pub image_missing: Vec<SimCounterexample>,
    /// Composed abstract transitions outside the merged parts (top arrow
    /// fails).
    pub beyond_parts: Vec<(AbstractState, AbstractSymbol, AbstractState)>,
    pub steps_checked: usize,
    pub pass: bool,
}

/// Checks the composition square on a shared sample: abstracting the
/// composed model's traces must land inside the composed abstract model,
/// and the composed abstract model must stay within the composition
/// (merge) of the two part abstractions.
pub fn check_square<P: Payload>(
    base_abs: &AbstractModel,
    pattern_abs: &AbstractModel,
    composed_abs: &AbstractModel,
    map: &AbstractionMap<P>,
    composed_model: &GameModel<P>,
    composed_traces: &[Trace<P>],
) -> SquareReport {
    let image = verify_simulation(composed_model, composed_abs, map, composed_traces);
    let parts = pattern_abs.merge(base_abs);
    let beyond_parts: Vec<_> = composed_abs
        .transitions
        .iter()
        .filter(|t| !parts.transitions.contains(*t))
        .cloned()
        .collect();
    SquareReport {
        pass: image.pass && beyond_parts.is_empty(),
        image_missing: image.counterexamples,
        beyond_parts,
        steps_checked: image.steps_checked,
    }
}
