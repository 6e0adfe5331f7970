//! Rule-based game models as monoid actions on state spaces.
//!
//! The crate has three layers:
//!
//! * [`algebra`] — states, input words, rule-driven partial actions,
//!   traces, orbits and orbit admissibility;
//! * [`compose`], [`behavlet`], [`abstraction`] — composition of models
//!   (free and under restriction operators), detectable play patterns with
//!   trait associations, and abstraction maps with simulation checking;
//! * [`games`], [`profiler`], [`io`] — two reference games (a
//!   noughts-and-crosses board over the order-3 magic square and a grid
//!   Pac-Man), scripted archetype agents with batch simulation and trait
//!   profiling, and deterministic trace/report serialization.
//!
//! Batch work parallelises over seeds and traces via [`batch`]; disable
//! the default `parallel` feature for a fully sequential build.

pub mod abstraction;
pub mod algebra;
pub mod batch;
pub mod behavlet;
pub mod compose;
pub mod games;
pub mod io;
pub mod profiler;
pub mod toy;

pub use algebra::{
    Admissibility, Alphabet, GameModel, GameState, InputSymbol, InputWord, Mode, OrbitSet,
    Payload, Rule, RunOutcome, SymbolSchema, Trace,
};
pub use behavlet::{Behavlet, DetectError, Detection, Quantifier, TickView};
pub use compose::{
    compose_free, compose_restricted, ComposeError, ComposedModel, PairPayload, PatternMonoid,
    RenamePolicy, RestrictionReport, RestrictionSpec, UnitPayload,
};
