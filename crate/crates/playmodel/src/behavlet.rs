//! Behavlets: detectable game-play patterns with a trait association.
//!
//! A Behavlet pairs a start condition (the constraint harness that opens an
//! evaluation window), a window rule that says how long the opened span
//! lasts, and a per-tick segment predicate (the pattern logic itself). A
//! detection is a maximal contiguous run of ticks inside one window on
//! which the segment predicate holds.
//!
//! Window semantics: a window opens at the first tick where the start
//! condition and the window rule both hold, stays open while the window
//! rule holds, and closes when it fails or the trace ends. Both the start
//! condition and the window rule are decidable from the state alone; the
//! segment predicate may also look at the previous state and the input
//! that produced the current one, which per-move patterns (a blocking
//! move, say) need.
//!
//! Detections honour the orbit constraints: a run whose sub-trace revisits
//! a state, or sits still across several ticks, is discarded. Single-tick
//! runs stand (there is nothing cyclic about one state).

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{GameState, InputSymbol, Payload, StatePredFn, Trace};
use crate::algebra::Admissibility;

/// How detections are condensed into one number per trace.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Quantifier {
    /// Number of detections.
    InstanceCount,
    /// Detected ticks over window ticks; 0 when no window ever opened.
    TickFraction,
}

/// Per-tick view handed to the segment predicate. `prev` and `input` are
/// `None` at tick 0.
pub struct TickView<'a, P: Payload> {
    pub tick: usize,
    pub state: &'a GameState<P>,
    pub prev: Option<&'a GameState<P>>,
    pub input: Option<&'a InputSymbol>,
}

pub type SegmentPredFn<P> = Arc<dyn for<'a> Fn(&TickView<'a, P>) -> bool + Send + Sync>;

/// A detectable pattern bound to a model and a behaviour trait.
pub struct Behavlet<P: Payload> {
    pub id: String,
    pub model_id: String,
    pub trait_label: String,
    pub quantifier: Quantifier,
    start: StatePredFn<P>,
    window: StatePredFn<P>,
    segment: SegmentPredFn<P>,
}

/// One maximal detected run; `start_tick..=end_tick` index trace states.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Detection {
    pub behavlet_id: String,
    pub trace_id: String,
    pub start_tick: usize,
    pub end_tick: usize,
}

impl Detection {
    pub fn ticks(&self) -> usize {
        self.end_tick - self.start_tick + 1
    }

    pub fn overlaps(&self, other: &Detection) -> bool {
        self.start_tick <= other.end_tick && other.start_tick <= self.end_tick
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DetectError {
    #[error("behavlet {behavlet:?} is defined for model {expected:?}, trace is from {found:?}")]
    ModelMismatch {
        behavlet: String,
        expected: String,
        found: String,
    },
}

impl<P: Payload> Behavlet<P> {
    pub fn new(
        id: impl Into<String>,
        model_id: impl Into<String>,
        trait_label: impl Into<String>,
        quantifier: Quantifier,
        start: impl Fn(&GameState<P>) -> bool + Send + Sync + 'static,
        window: impl Fn(&GameState<P>) -> bool + Send + Sync + 'static,
        segment: impl for<'a> Fn(&TickView<'a, P>) -> bool + Send + Sync + 'static,
    ) -> Self {
        Behavlet {
            id: id.into(),
            model_id: model_id.into(),
            trait_label: trait_label.into(),
            quantifier,
            start: Arc::new(start),
            window: Arc::new(window),
            segment: Arc::new(segment),
        }
    }

    pub fn start_holds(&self, state: &GameState<P>) -> bool {
        (self.start)(state)
    }

    /// Evaluation windows over the trace, as inclusive tick spans.
    pub fn windows(&self, trace: &Trace<P>) -> Vec<(usize, usize)> {
        let mut spans = Vec::new();
        let mut open: Option<usize> = None;
        for (tick, state) in trace.states().iter().enumerate() {
            match open {
                None => {
                    if (self.start)(state) && (self.window)(state) {
                        open = Some(tick);
                    }
                }
                Some(begin) => {
                    if !(self.window)(state) {
                        spans.push((begin, tick - 1));
                        open = None;
                    }
                }
            }
        }
        if let Some(begin) = open {
            spans.push((begin, trace.ticks()));
        }
        spans
    }

    fn segment_holds(&self, trace: &Trace<P>, tick: usize) -> bool {
        let view = TickView {
            tick,
            state: trace.state(tick),
            prev: tick.checked_sub(1).map(|t| trace.state(t)),
            input: tick.checked_sub(1).map(|t| &trace.word().symbols()[t]),
        };
        (self.segment)(&view)
    }

    /// All maximal detected runs, ordered by start tick, pairwise disjoint.
    pub fn detect(&self, trace: &Trace<P>) -> Result<Vec<Detection>, DetectError> {
        if trace.model_id() != self.model_id {
            return Err(DetectError::ModelMismatch {
                behavlet: self.id.clone(),
                expected: self.model_id.clone(),
                found: trace.model_id().to_string(),
            });
        }
        let mut detections = Vec::new();
        for (ws, we) in self.windows(trace) {
            let mut run_start: Option<usize> = None;
            for tick in ws..=we {
                let holds = self.segment_holds(trace, tick);
                match (run_start, holds) {
                    (None, true) => run_start = Some(tick),
                    (Some(begin), false) => {
                        self.push_run(trace, begin, tick - 1, &mut detections);
                        run_start = None;
                    }
                    _ => {}
                }
            }
            if let Some(begin) = run_start {
                self.push_run(trace, begin, we, &mut detections);
            }
        }
        Ok(detections)
    }

    fn push_run(&self, trace: &Trace<P>, start: usize, end: usize, out: &mut Vec<Detection>) {
        // Orbit constraints: discard cyclic runs and multi-tick runs that
        // never change state.
        let admissibility = trace.segment(start, end).admissibility();
        let game_like = match admissibility {
            Admissibility::Admissible => true,
            Admissibility::Cycle => false,
            Admissibility::StableOnly => start == end,
        };
        if game_like {
            out.push(Detection {
                behavlet_id: self.id.clone(),
                trace_id: trace.id().to_string(),
                start_tick: start,
                end_tick: end,
            });
        }
    }

    /// Condenses detections into the Behavlet's score for this trace.
    pub fn quantify(&self, detections: &[Detection], trace: &Trace<P>) -> f64 {
        debug_assert!(detections.iter().all(|d| d.behavlet_id == self.id));
        match self.quantifier {
            Quantifier::InstanceCount => detections.len() as f64,
            Quantifier::TickFraction => {
                let window_ticks: usize =
                    self.windows(trace).iter().map(|(s, e)| e - s + 1).sum();
                if window_ticks == 0 {
                    return 0.0;
                }
                let run_ticks: usize = detections.iter().map(Detection::ticks).sum();
                run_ticks as f64 / window_ticks as f64
            }
        }
    }
}

impl<P: Payload> std::fmt::Debug for Behavlet<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Behavlet")
            .field("id", &self.id)
            .field("model_id", &self.model_id)
            .field("trait_label", &self.trait_label)
            .field("quantifier", &self.quantifier)
            .finish()
    }
}
