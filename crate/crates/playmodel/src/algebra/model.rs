//! Game models: a finite mode set, a finite alphabet, and an ordered rule
//! list per mode implementing a partial action of input words on states.
//!
//! The action is deliberately partial: `step` returning `None` means the
//! input is illegal in that state ("undefined"), which is an ordinary
//! outcome that callers such as pattern detectors must be able to see.
//! A rule whose effect breaks the model invariant, or two rules whose
//! guards overlap on the same `(state, symbol)` pair, are model bugs and
//! panic instead.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::state::{Alphabet, GameState, InputSymbol, InputWord, Mode, Payload};
use super::trace::Trace;

pub type GuardFn<P> = Arc<dyn Fn(&GameState<P>, &InputSymbol) -> bool + Send + Sync>;
pub type EffectFn<P> = Arc<dyn Fn(&GameState<P>, &InputSymbol) -> GameState<P> + Send + Sync>;
pub type StatePredFn<P> = Arc<dyn Fn(&GameState<P>) -> bool + Send + Sync>;
pub type MeasureFn<P> = Arc<dyn Fn(&GameState<P>) -> u64 + Send + Sync>;
pub type SeederFn<P> = Arc<dyn Fn(&GameState<P>, u64) -> GameState<P> + Send + Sync>;

/// One rule: a guard over `(state, symbol)` and a total effect that is only
/// invoked when the guard holds.
pub struct Rule<P: Payload> {
    label: String,
    guard: GuardFn<P>,
    effect: EffectFn<P>,
}

impl<P: Payload> Rule<P> {
    pub fn new(
        label: impl Into<String>,
        guard: impl Fn(&GameState<P>, &InputSymbol) -> bool + Send + Sync + 'static,
        effect: impl Fn(&GameState<P>, &InputSymbol) -> GameState<P> + Send + Sync + 'static,
    ) -> Self {
        Rule {
            label: label.into(),
            guard: Arc::new(guard),
            effect: Arc::new(effect),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn matches(&self, state: &GameState<P>, sym: &InputSymbol) -> bool {
        (self.guard)(state, sym)
    }

    pub fn apply(&self, state: &GameState<P>, sym: &InputSymbol) -> GameState<P> {
        (self.effect)(state, sym)
    }
}

impl<P: Payload> fmt::Debug for Rule<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Rule").field("label", &self.label).finish()
    }
}

/// Outcome of replaying a word from a state.
#[derive(Clone, Debug)]
pub enum RunOutcome<P: Payload> {
    /// Every step was defined.
    Complete(Trace<P>),
    /// The word went undefined part-way through; carries the prefix trace,
    /// the 0-based index of the offending symbol and the symbol itself.
    Partial {
        trace: Trace<P>,
        failed_index: usize,
        symbol: InputSymbol,
    },
}

impl<P: Payload> RunOutcome<P> {
    pub fn is_complete(&self) -> bool {
        matches!(self, RunOutcome::Complete(_))
    }

    pub fn trace(&self) -> &Trace<P> {
        match self {
            RunOutcome::Complete(t) => t,
            RunOutcome::Partial { trace, .. } => trace,
        }
    }

    pub fn into_trace(self) -> Trace<P> {
        match self {
            RunOutcome::Complete(t) => t,
            RunOutcome::Partial { trace, .. } => trace,
        }
    }
}

/// An immutable game model. Any number of threads may `step`/`run`
/// concurrently; there is no interior mutability.
pub struct GameModel<P: Payload> {
    id: String,
    modes: Vec<Mode>,
    alphabet: Alphabet,
    rules: BTreeMap<Mode, Vec<Rule<P>>>,
    invariant: StatePredFn<P>,
    initial: GameState<P>,
    possibility: MeasureFn<P>,
    seeder: SeederFn<P>,
}

impl<P: Payload> GameModel<P> {
    /// Builds a model. Panics if the initial state breaks its own invariant
    /// or mentions an undeclared mode, since such a model is unusable.
    pub fn new(
        id: impl Into<String>,
        modes: Vec<Mode>,
        alphabet: Alphabet,
        rules: BTreeMap<Mode, Vec<Rule<P>>>,
        invariant: impl Fn(&GameState<P>) -> bool + Send + Sync + 'static,
        initial: GameState<P>,
        possibility: impl Fn(&GameState<P>) -> u64 + Send + Sync + 'static,
    ) -> Self {
        let id = id.into();
        assert!(
            modes.contains(&initial.mode),
            "model {id:?}: initial mode {} is not declared",
            initial.mode
        );
        for mode in rules.keys() {
            assert!(modes.contains(mode), "model {id:?}: rules for undeclared mode {mode}");
        }
        let invariant: StatePredFn<P> = Arc::new(invariant);
        assert!(invariant(&initial), "model {id:?}: initial state violates its invariant");
        GameModel {
            id,
            modes,
            alphabet,
            rules,
            invariant,
            initial,
            possibility: Arc::new(possibility),
            seeder: Arc::new(|s, _| s.clone()),
        }
    }

    /// Installs a hook that derives the seed-specific initial state, for
    /// models whose state carries a random stream (the seed must live in
    /// the state so that `step` stays a pure function).
    pub fn with_seeder(
        mut self,
        seeder: impl Fn(&GameState<P>, u64) -> GameState<P> + Send + Sync + 'static,
    ) -> Self {
        self.seeder = Arc::new(seeder);
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn modes(&self) -> &[Mode] {
        &self.modes
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> &GameState<P> {
        &self.initial
    }

    /// Initial state for a given seed; identity for models without
    /// state-carried randomness.
    pub fn seeded_initial(&self, seed: u64) -> GameState<P> {
        (self.seeder)(&self.initial, seed)
    }

    /// Remaining-continuation measure used by the possibility-space
    /// reduction check during composition validation.
    pub fn possibility(&self, state: &GameState<P>) -> u64 {
        (self.possibility)(state)
    }

    pub fn check_invariant(&self, state: &GameState<P>) -> bool {
        (self.invariant)(state)
    }

    fn matching_rules(&self, state: &GameState<P>, sym: &InputSymbol) -> Vec<&Rule<P>> {
        match self.rules.get(&state.mode) {
            None => Vec::new(),
            Some(rules) => rules.iter().filter(|r| r.matches(state, sym)).collect(),
        }
    }

    /// Applies one input. `None` means the action is undefined here.
    ///
    /// Panics on model bugs: overlapping rule guards, an effect that leaves
    /// the invariant, or an effect that enters an undeclared mode.
    pub fn step(&self, state: &GameState<P>, sym: &InputSymbol) -> Option<GameState<P>> {
        if !self.alphabet.contains(sym) {
            return None;
        }
        let matching = self.matching_rules(state, sym);
        match matching.as_slice() {
            [] => None,
            [rule] => {
                let next = rule.apply(state, sym);
                assert!(
                    self.check_invariant(&next),
                    "model {:?}: rule {:?} produced an invariant-violating state for input {sym}",
                    self.id,
                    rule.label
                );
                assert!(
                    self.modes.contains(&next.mode),
                    "model {:?}: rule {:?} entered undeclared mode {}",
                    self.id,
                    rule.label,
                    next.mode
                );
                Some(next)
            }
            many => {
                let labels: Vec<&str> = many.iter().map(|r| r.label()).collect();
                panic!(
                    "model {:?}: rule guards overlap ({labels:?}) for input {sym} in mode {}",
                    self.id, state.mode
                );
            }
        }
    }

    /// True when `step` would be defined, without building the next state.
    pub fn is_defined(&self, state: &GameState<P>, sym: &InputSymbol) -> bool {
        self.alphabet.contains(sym) && !self.matching_rules(state, sym).is_empty()
    }

    /// All alphabet symbols with a defined step from `state`.
    pub fn legal_symbols(&self, state: &GameState<P>) -> Vec<InputSymbol> {
        self.alphabet
            .symbols()
            .into_iter()
            .filter(|sym| self.is_defined(state, sym))
            .collect()
    }

    /// Replays a word from `init`, producing the full trace or the prefix
    /// trace up to the first undefined step.
    pub fn run(&self, init: GameState<P>, word: &InputWord) -> RunOutcome<P> {
        debug_assert!(self.check_invariant(&init));
        let mut states = Vec::with_capacity(word.len() + 1);
        states.push(init);
        for (i, sym) in word.symbols().iter().enumerate() {
            match self.step(states.last().expect("nonempty"), sym) {
                Some(next) => states.push(next),
                None => {
                    let trace = Trace::from_parts(
                        "run",
                        &self.id,
                        word.prefix(i),
                        states,
                    );
                    return RunOutcome::Partial {
                        trace,
                        failed_index: i,
                        symbol: sym.clone(),
                    };
                }
            }
        }
        RunOutcome::Complete(Trace::from_parts("run", &self.id, word.clone(), states))
    }
}

impl<P: Payload> fmt::Debug for GameModel<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GameModel")
            .field("id", &self.id)
            .field("modes", &self.modes)
            .field("rules", &self.rules.values().map(|v| v.len()).sum::<usize>())
            .finish()
    }
}
