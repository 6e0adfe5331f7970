//! Tiny counter models used by tests, benches and the docs. They exercise
//! the engine without dragging a full game along: a bounded counter whose
//! possibility measure shrinks, a cyclic counter whose orbits revisit
//! states, and an idle model that never leaves its initial state.

use std::collections::BTreeMap;

use crate::algebra::{
    Alphabet, GameModel, GameState, InputSymbol, Mode, Payload, Rule, SymbolSchema,
};

/// Integer payload for the toy models.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct IntPayload(pub i64);

impl Payload for IntPayload {
    fn canon(&self) -> String {
        self.0.to_string()
    }
}

fn run_mode() -> Mode {
    Mode::new("run")
}

fn int_state(v: i64) -> GameState<IntPayload> {
    GameState::new(run_mode(), IntPayload(v))
}

/// Counter over `0..max` with `inc` (+1) and `jump` (+2), both clamped at
/// `max`. Possibility measure is the remaining headroom, so it shrinks on
/// every step.
pub fn bounded_counter(max: i64) -> GameModel<IntPayload> {
    assert!(max >= 0);
    let mut rules = BTreeMap::new();
    rules.insert(
        run_mode(),
        vec![
            Rule::new(
                "inc",
                move |s: &GameState<IntPayload>, sym: &InputSymbol| {
                    sym.tag == "inc" && s.payload.0 + 1 <= max
                },
                |s, _| int_state(s.payload.0 + 1),
            ),
            Rule::new(
                "jump",
                move |s: &GameState<IntPayload>, sym: &InputSymbol| {
                    sym.tag == "jump" && s.payload.0 + 2 <= max
                },
                |s, _| int_state(s.payload.0 + 2),
            ),
        ],
    );
    GameModel::new(
        "toy-bounded",
        vec![run_mode()],
        Alphabet::new(vec![SymbolSchema::nullary("inc"), SymbolSchema::nullary("jump")]),
        rules,
        move |s| (0..=max).contains(&s.payload.0),
        int_state(0),
        move |s| (max - s.payload.0) as u64,
    )
}

/// Counter modulo `modulus`; its evolutions under repeated `inc` cycle.
pub fn cyclic_counter(modulus: i64) -> GameModel<IntPayload> {
    assert!(modulus > 0);
    let mut rules = BTreeMap::new();
    rules.insert(
        run_mode(),
        vec![Rule::new(
            "inc",
            |_: &GameState<IntPayload>, sym: &InputSymbol| sym.tag == "inc",
            move |s, _| int_state((s.payload.0 + 1) % modulus),
        )],
    );
    GameModel::new(
        "toy-cyclic",
        vec![run_mode()],
        Alphabet::new(vec![SymbolSchema::nullary("inc")]),
        rules,
        move |s| (0..modulus).contains(&s.payload.0),
        int_state(0),
        move |_| modulus as u64,
    )
}

/// A model whose only input leaves the state unchanged.
pub fn idle() -> GameModel<IntPayload> {
    let mut rules = BTreeMap::new();
    rules.insert(
        run_mode(),
        vec![Rule::new(
            "wait",
            |_: &GameState<IntPayload>, sym: &InputSymbol| sym.tag == "wait",
            |s, _| s.clone(),
        )],
    );
    GameModel::new(
        "toy-idle",
        vec![run_mode()],
        Alphabet::new(vec![SymbolSchema::nullary("wait")]),
        rules,
        |_| true,
        int_state(0),
        |_| 1,
    )
}

/// Deliberately broken model: two rules match the same input. Stepping it
/// must panic; used to test the determinism guard.
pub fn conflicting_rules() -> GameModel<IntPayload> {
    let mut rules = BTreeMap::new();
    rules.insert(
        run_mode(),
        vec![
            Rule::new(
                "first",
                |_: &GameState<IntPayload>, sym: &InputSymbol| sym.tag == "inc",
                |s, _| int_state(s.payload.0 + 1),
            ),
            Rule::new(
                "second",
                |_: &GameState<IntPayload>, sym: &InputSymbol| sym.tag == "inc",
                |s, _| int_state(s.payload.0 + 2),
            ),
        ],
    );
    GameModel::new(
        "toy-conflict",
        vec![run_mode()],
        Alphabet::new(vec![SymbolSchema::nullary("inc")]),
        rules,
        |_| true,
        int_state(0),
        |_| 1,
    )
}

/// Deliberately broken model: the effect leaves the declared invariant.
/// Stepping it must panic; used to test the fault guard.
pub fn invariant_breaker() -> GameModel<IntPayload> {
    let mut rules = BTreeMap::new();
    rules.insert(
        run_mode(),
        vec![Rule::new(
            "inc",
            |_: &GameState<IntPayload>, sym: &InputSymbol| sym.tag == "inc",
            |_, _| int_state(99),
        )],
    );
    GameModel::new(
        "toy-broken",
        vec![run_mode()],
        Alphabet::new(vec![SymbolSchema::nullary("inc")]),
        rules,
        |s| s.payload.0 < 10,
        int_state(0),
        |_| 1,
    )
}
