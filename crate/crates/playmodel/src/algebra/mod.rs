//! Core algebra: state spaces, input monoids and the partial action that
//! turns rule lists into evolutions (traces) with orbits.

mod model;
mod state;
mod trace;

pub use model::{EffectFn, GameModel, GuardFn, MeasureFn, Rule, RunOutcome, SeederFn, StatePredFn};
pub use state::{Alphabet, GameState, InputSymbol, InputWord, Mode, Payload, SymbolSchema};
pub use trace::{Admissibility, OrbitSet, Trace};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toy;

    #[test]
    fn empty_word_runs_to_the_singleton_trace() {
        let model = toy::bounded_counter(10);
        let out = model.run(model.initial().clone(), &InputWord::empty());
        assert!(out.is_complete());
        assert_eq!(out.trace().states().len(), 1);
        assert_eq!(out.trace().orbit().len(), 1);
    }

    #[test]
    fn undefined_step_yields_prefix_trace() {
        let model = toy::bounded_counter(2);
        let inc = InputSymbol::nullary("inc");
        let word = InputWord::from_symbols(vec![inc.clone(), inc.clone(), inc.clone()]);
        match model.run(model.initial().clone(), &word) {
            RunOutcome::Partial { trace, failed_index, symbol } => {
                assert_eq!(failed_index, 2);
                assert_eq!(symbol, inc);
                assert_eq!(trace.states().len(), 3);
            }
            RunOutcome::Complete(_) => panic!("counter should saturate at 2"),
        }
    }

    #[test]
    fn out_of_alphabet_symbols_are_undefined() {
        let model = toy::bounded_counter(5);
        assert_eq!(model.step(model.initial(), &InputSymbol::nullary("nope")), None);
        assert!(!model.is_defined(model.initial(), &InputSymbol::unary("inc", 3)));
    }

    #[test]
    fn cyclic_evolution_is_flagged() {
        let model = toy::cyclic_counter(3);
        let inc = InputSymbol::nullary("inc");
        let word = InputWord::from_symbols(vec![inc; 4]);
        let trace = model.run(model.initial().clone(), &word).into_trace();
        assert_eq!(trace.admissibility(), Admissibility::Cycle);
        assert_eq!(trace.orbit().len(), 3);
    }

    #[test]
    fn stable_only_evolution_is_flagged() {
        let model = toy::idle();
        let wait = InputSymbol::nullary("wait");
        let word = InputWord::from_symbols(vec![wait; 3]);
        let trace = model.run(model.initial().clone(), &word).into_trace();
        assert_eq!(trace.admissibility(), Admissibility::StableOnly);
    }

    #[test]
    fn singleton_trace_is_stable_only() {
        let model = toy::idle();
        let trace = model.run(model.initial().clone(), &InputWord::empty()).into_trace();
        assert_eq!(trace.admissibility(), Admissibility::StableOnly);
    }

    #[test]
    fn orbit_is_union_of_prefix_orbits() {
        let model = toy::bounded_counter(6);
        let inc = InputSymbol::nullary("inc");
        let word = InputWord::from_symbols(vec![inc; 5]);
        let trace = model.run(model.initial().clone(), &word).into_trace();
        let mut union = OrbitSet::empty();
        for t in 0..=trace.ticks() {
            union = union.union(&trace.prefix(t).orbit());
        }
        assert_eq!(union, trace.orbit());
    }

    #[test]
    #[should_panic(expected = "rule guards overlap")]
    fn overlapping_guards_panic() {
        let model = toy::conflicting_rules();
        let _ = model.step(model.initial(), &InputSymbol::nullary("inc"));
    }

    #[test]
    #[should_panic(expected = "invariant-violating")]
    fn invariant_breaking_effect_panics() {
        let model = toy::invariant_breaker();
        let _ = model.step(model.initial(), &InputSymbol::nullary("inc"));
    }
}
