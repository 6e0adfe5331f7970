//! Composition of game models.
//!
//! `compose_free` forms the product of two models: every evolution of both
//! components, no interaction between their parts. Each input is routed to
//! exactly one component, so stepping one side leaves the other untouched.
//!
//! `compose_restricted` attaches pattern monoids to a base model. The
//! patterns synchronise with the base through three restriction operators,
//! checked per trace by `ComposedModel::validate_restrictions`:
//!
//! * reduction — the base possibility measure never grows along the trace
//!   (checked per tick, the stronger reading; noted in the report);
//! * ordering — successive patterns' first detected instances start in
//!   non-decreasing tick order (non-strict);
//! * overlap — instances of different patterns whose tick spans overlap
//!   must not be isomorphic. Isomorphism is exact equality of the input
//!   sub-words and of the canonical state sequences, which is decidable
//!   and rejects degenerate duplicate compositions.

use std::collections::BTreeMap;
use std::collections::HashSet;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{
    Alphabet, GameModel, GameState, InputSymbol, Mode, Payload, Rule, Trace,
};
use crate::behavlet::{Behavlet, DetectError, Detection};

/// Product payload: both component states in full, including their modes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PairPayload<A: Payload, B: Payload> {
    pub left: GameState<A>,
    pub right: GameState<B>,
}

impl<A: Payload, B: Payload> Payload for PairPayload<A, B> {
    fn canon(&self) -> String {
        format!("({},{})", self.left.canon(), self.right.canon())
    }
}

/// Trivial one-state payload for the identity of free composition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct UnitPayload;

impl Payload for UnitPayload {
    fn canon(&self) -> String {
        "()".to_string()
    }
}

/// The empty model: one mode, no inputs, no rules.
pub fn unit_model() -> GameModel<UnitPayload> {
    GameModel::new(
        "unit",
        vec![Mode::new("unit")],
        Alphabet::empty(),
        BTreeMap::new(),
        |_| true,
        GameState::new(Mode::new("unit"), UnitPayload),
        |_| 0,
    )
}

/// How colliding tags are handled when composing alphabets.
#[derive(Clone, Debug)]
pub enum RenamePolicy {
    /// Fail on any shared tag.
    Reject,
    /// Prefix every left tag with `left` and every right tag with `right`.
    Prefix { left: String, right: String },
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ComposeError {
    #[error("alphabet tag {tag:?} appears in both components; compose with a rename prefix")]
    AlphabetCollision { tag: String },
    #[error("pattern {pattern:?} uses symbols outside the base alphabet")]
    AlphabetNotSubset { pattern: String },
    #[error("pattern {pattern:?} targets model {expected:?} but the base is {found:?}")]
    WrongBaseModel {
        pattern: String,
        expected: String,
        found: String,
    },
    #[error("pattern {pattern:?}: witness state violates the base model invariant")]
    InvalidWitness { pattern: String },
    #[error("pattern {pattern:?}: start condition does not hold on any provided witness state")]
    StartConditionUnsatisfiable { pattern: String },
    #[error(
        "pattern {pattern:?} leaves {continuations} continuation(s) open from its witness; \
         a pattern monoid must keep the game uncertain (at least two)"
    )]
    DegeneratePattern { pattern: String, continuations: usize },
}

fn join_modes(left: &Mode, right: &Mode) -> Mode {
    Mode::new(format!("({left}*{right})"))
}

/// Free composition: the product model. Each symbol acts on its own
/// component only. Ownership of both components moves into the product's
/// rules.
pub fn compose_free<A: Payload, B: Payload>(
    a: GameModel<A>,
    b: GameModel<B>,
    rename: RenamePolicy,
) -> Result<GameModel<PairPayload<A, B>>, ComposeError> {
    let (left_prefix, right_prefix) = match &rename {
        RenamePolicy::Reject => {
            if let Some(tag) = a.alphabet().shares_tag_with(b.alphabet()) {
                return Err(ComposeError::AlphabetCollision { tag: tag.to_string() });
            }
            (String::new(), String::new())
        }
        RenamePolicy::Prefix { left, right } => (left.clone(), right.clone()),
    };
    let left_alphabet = a.alphabet().renamed(&left_prefix);
    let right_alphabet = b.alphabet().renamed(&right_prefix);
    if let Some(tag) = left_alphabet.shares_tag_with(&right_alphabet) {
        return Err(ComposeError::AlphabetCollision { tag: tag.to_string() });
    }
    let mut schemas = left_alphabet.schemas().to_vec();
    schemas.extend(right_alphabet.schemas().iter().cloned());
    let alphabet = Alphabet::new(schemas);

    let id = format!("free({},{})", a.id(), b.id());
    let a = Arc::new(a);
    let b = Arc::new(b);

    let mut modes = Vec::new();
    let mut rules: BTreeMap<Mode, Vec<Rule<PairPayload<A, B>>>> = BTreeMap::new();
    for qa in a.modes() {
        for qb in b.modes() {
            let joint = join_modes(qa, qb);
            let left_rule = {
                let a = Arc::clone(&a);
                let prefix = left_prefix.clone();
                let guard_a = Arc::clone(&a);
                let guard_prefix = prefix.clone();
                Rule::new(
                    "step-left",
                    move |s: &GameState<PairPayload<A, B>>, sym: &InputSymbol| {
                        strip_symbol(sym, &guard_prefix)
                            .is_some_and(|inner| guard_a.is_defined(&s.payload.left, &inner))
                    },
                    move |s, sym| {
                        let inner = strip_symbol(sym, &prefix).expect("guard checked prefix");
                        let left = a
                            .step(&s.payload.left, &inner)
                            .expect("guard checked definedness");
                        rebuild(left, s.payload.right.clone())
                    },
                )
            };
            let right_rule = {
                let b = Arc::clone(&b);
                let prefix = right_prefix.clone();
                let guard_b = Arc::clone(&b);
                let guard_prefix = prefix.clone();
                Rule::new(
                    "step-right",
                    move |s: &GameState<PairPayload<A, B>>, sym: &InputSymbol| {
                        strip_symbol(sym, &guard_prefix)
                            .is_some_and(|inner| guard_b.is_defined(&s.payload.right, &inner))
                    },
                    move |s, sym| {
                        let inner = strip_symbol(sym, &prefix).expect("guard checked prefix");
                        let right = b
                            .step(&s.payload.right, &inner)
                            .expect("guard checked definedness");
                        rebuild(s.payload.left.clone(), right)
                    },
                )
            };
            rules.insert(joint.clone(), vec![left_rule, right_rule]);
            modes.push(joint);
        }
    }

    let initial = rebuild(a.initial().clone(), b.initial().clone());
    let inv_a = Arc::clone(&a);
    let inv_b = Arc::clone(&b);
    let meas_a = Arc::clone(&a);
    let meas_b = Arc::clone(&b);
    let seed_a = Arc::clone(&a);
    let seed_b = Arc::clone(&b);
    Ok(GameModel::new(
        id,
        modes,
        alphabet,
        rules,
        move |s: &GameState<PairPayload<A, B>>| {
            s.mode == join_modes(&s.payload.left.mode, &s.payload.right.mode)
                && inv_a.check_invariant(&s.payload.left)
                && inv_b.check_invariant(&s.payload.right)
        },
        initial,
        move |s: &GameState<PairPayload<A, B>>| {
            meas_a.possibility(&s.payload.left) + meas_b.possibility(&s.payload.right)
        },
    )
    .with_seeder(move |_, seed| {
        rebuild(seed_a.seeded_initial(seed), seed_b.seeded_initial(seed))
    }))
}

fn rebuild<A: Payload, B: Payload>(
    left: GameState<A>,
    right: GameState<B>,
) -> GameState<PairPayload<A, B>> {
    let mode = join_modes(&left.mode, &right.mode);
    GameState::new(mode, PairPayload { left, right })
}

fn strip_symbol(sym: &InputSymbol, prefix: &str) -> Option<InputSymbol> {
    if prefix.is_empty() {
        return Some(sym.clone());
    }
    sym.tag
        .strip_prefix(prefix)
        .map(|tag| InputSymbol::new(tag, sym.args.clone()))
}

/// A pattern monoid: a detectable signature over the base game, the symbol
/// subset it ranges over, and a witness state on which its start condition
/// holds.
pub struct PatternMonoid<P: Payload> {
    id: String,
    alphabet: Alphabet,
    behavlet: Behavlet<P>,
    witness: GameState<P>,
}

impl<P: Payload> PatternMonoid<P> {
    pub fn new(behavlet: Behavlet<P>, alphabet: Alphabet, witness: GameState<P>) -> Self {
        PatternMonoid {
            id: behavlet.id.clone(),
            alphabet,
            behavlet,
            witness,
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn behavlet(&self) -> &Behavlet<P> {
        &self.behavlet
    }
}

/// Which restriction operators to enforce. All three are on by default.
#[derive(Clone, Copy, Debug)]
pub struct RestrictionSpec {
    pub check_reduction: bool,
    pub check_ordering: bool,
    pub check_overlap: bool,
}

impl Default for RestrictionSpec {
    fn default() -> Self {
        RestrictionSpec {
            check_reduction: true,
            check_ordering: true,
            check_overlap: true,
        }
    }
}

/// A base model with pattern monoids composed onto it under restriction.
pub struct ComposedModel<P: Payload> {
    base: GameModel<P>,
    patterns: Vec<PatternMonoid<P>>,
    spec: RestrictionSpec,
}

/// Composes one pattern onto a base model, validating the pattern at
/// construction time. Further patterns chain via [`ComposedModel::compose`].
pub fn compose_restricted<P: Payload>(
    base: GameModel<P>,
    pattern: PatternMonoid<P>,
    spec: RestrictionSpec,
) -> Result<ComposedModel<P>, ComposeError> {
    validate_pattern(&base, &pattern)?;
    Ok(ComposedModel {
        base,
        patterns: vec![pattern],
        spec,
    })
}

fn validate_pattern<P: Payload>(
    base: &GameModel<P>,
    pattern: &PatternMonoid<P>,
) -> Result<(), ComposeError> {
    if pattern.behavlet.model_id != base.id() {
        return Err(ComposeError::WrongBaseModel {
            pattern: pattern.id.clone(),
            expected: pattern.behavlet.model_id.clone(),
            found: base.id().to_string(),
        });
    }
    if !pattern.alphabet.subset_of(base.alphabet()) {
        return Err(ComposeError::AlphabetNotSubset { pattern: pattern.id.clone() });
    }
    if !base.check_invariant(&pattern.witness) {
        return Err(ComposeError::InvalidWitness { pattern: pattern.id.clone() });
    }
    if !pattern.behavlet.start_holds(&pattern.witness) {
        return Err(ComposeError::StartConditionUnsatisfiable { pattern: pattern.id.clone() });
    }
    // No initial/terminal objects: from the witness, the pattern's symbols
    // must leave at least two distinct continuations open, otherwise the
    // pattern collapses to a single forced function.
    let mut nexts: HashSet<String> = HashSet::new();
    for sym in pattern.alphabet.symbols() {
        if let Some(next) = base.step(&pattern.witness, &sym) {
            nexts.insert(next.canon());
        }
    }
    if nexts.len() < 2 {
        return Err(ComposeError::DegeneratePattern {
            pattern: pattern.id.clone(),
            continuations: nexts.len(),
        });
    }
    Ok(())
}

impl<P: Payload> ComposedModel<P> {
    /// Appends a further pattern, re-running construction validation.
    pub fn compose(mut self, pattern: PatternMonoid<P>) -> Result<Self, ComposeError> {
        validate_pattern(&self.base, &pattern)?;
        self.patterns.push(pattern);
        Ok(self)
    }

    pub fn base(&self) -> &GameModel<P> {
        &self.base
    }

    pub fn patterns(&self) -> &[PatternMonoid<P>] {
        &self.patterns
    }

    pub fn spec(&self) -> RestrictionSpec {
        self.spec
    }

    /// Checks the three restriction operators against a base-model trace.
    pub fn validate_restrictions(
        &self,
        trace: &Trace<P>,
    ) -> Result<RestrictionReport, DetectError> {
        let reduction = self.check_reduction(trace);
        let detections: Vec<(String, Vec<Detection>)> = self
            .patterns
            .iter()
            .map(|p| Ok((p.id.clone(), p.behavlet.detect(trace)?)))
            .collect::<Result<_, DetectError>>()?;
        let ordering = self.check_ordering(&detections);
        let overlap = self.check_overlap(trace, &detections);
        Ok(RestrictionReport {
            reduction,
            ordering,
            overlap,
            notes: vec![
                "reduction operator checked per tick (non-increasing possibility measure)"
                    .to_string(),
            ],
        })
    }

    fn check_reduction(&self, trace: &Trace<P>) -> ReductionCheck {
        if !self.spec.check_reduction {
            return ReductionCheck { enabled: false, pass: true, violation: None };
        }
        let mut prev = self.base.possibility(trace.initial());
        for (tick, state) in trace.states().iter().enumerate().skip(1) {
            let next = self.base.possibility(state);
            if next > prev {
                return ReductionCheck {
                    enabled: true,
                    pass: false,
                    violation: Some((tick, prev, next)),
                };
            }
            prev = next;
        }
        ReductionCheck { enabled: true, pass: true, violation: None }
    }

    fn check_ordering(&self, detections: &[(String, Vec<Detection>)]) -> OrderingCheck {
        let first_starts: Vec<(String, Option<usize>)> = detections
            .iter()
            .map(|(id, ds)| (id.clone(), ds.first().map(|d| d.start_tick)))
            .collect();
        if !self.spec.check_ordering {
            return OrderingCheck {
                enabled: false,
                pass: true,
                first_starts,
                violation: None,
            };
        }
        let mut last: Option<(&str, usize)> = None;
        for (id, start) in &first_starts {
            if let Some(start) = start {
                if let Some((prev_id, prev_start)) = last {
                    if *start < prev_start {
                        return OrderingCheck {
                            enabled: true,
                            pass: false,
                            first_starts: first_starts.clone(),
                            violation: Some((
                                prev_id.to_string(),
                                prev_start,
                                id.clone(),
                                *start,
                            )),
                        };
                    }
                }
                last = Some((id, *start));
            }
        }
        OrderingCheck { enabled: true, pass: true, first_starts, violation: None }
    }

    fn check_overlap(
        &self,
        trace: &Trace<P>,
        detections: &[(String, Vec<Detection>)],
    ) -> OverlapCheck {
        if !self.spec.check_overlap {
            return OverlapCheck { enabled: false, pass: true, violations: Vec::new() };
        }
        let mut violations = Vec::new();
        for (i, (id_a, ds_a)) in detections.iter().enumerate() {
            for (id_b, ds_b) in &detections[i + 1..] {
                for a in ds_a {
                    for b in ds_b {
                        if a.overlaps(b) && instances_isomorphic(trace, a, b) {
                            violations.push((
                                id_a.clone(),
                                (a.start_tick, a.end_tick),
                                id_b.clone(),
                                (b.start_tick, b.end_tick),
                            ));
                        }
                    }
                }
            }
        }
        OverlapCheck {
            enabled: true,
            pass: violations.is_empty(),
            violations,
        }
    }
}

/// Exact-equality instance isomorphism: same input sub-word and same
/// canonical state sequence.
fn instances_isomorphic<P: Payload>(trace: &Trace<P>, a: &Detection, b: &Detection) -> bool {
    let seg_a = trace.segment(a.start_tick, a.end_tick);
    let seg_b = trace.segment(b.start_tick, b.end_tick);
    seg_a.word() == seg_b.word() && seg_a.states() == seg_b.states()
}

#[derive(Clone, Debug)]
pub struct RestrictionReport {
    pub reduction: ReductionCheck,
    pub ordering: OrderingCheck,
    pub overlap: OverlapCheck,
    pub notes: Vec<String>,
}

impl RestrictionReport {
    pub fn all_pass(&self) -> bool {
        self.reduction.pass && self.ordering.pass && self.overlap.pass
    }
}

/// Possibility-space reduction result.
#[derive(Clone, Debug)]
pub struct ReductionCheck {
    pub enabled: bool,
    pub pass: bool,
    /// `(tick, measure before, measure after)` of the first increase.
    pub violation: Option<(usize, u64, u64)>,
}

/// Start-time ordering result.
#[derive(Clone, Debug)]
pub struct OrderingCheck {
    pub enabled: bool,
    pub pass: bool,
    /// First detection start per pattern, in composition order.
    pub first_starts: Vec<(String, Option<usize>)>,
    /// `(earlier pattern, its start, later pattern, its start)`.
    pub violation: Option<(String, usize, String, usize)>,
}

/// Overlapping-orbit isomorphism result.
#[derive(Clone, Debug)]
pub struct OverlapCheck {
    pub enabled: bool,
    pub pass: bool,
    pub violations: Vec<(String, (usize, usize), String, (usize, usize))>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{InputWord, SymbolSchema};
    use crate::behavlet::Quantifier;
    use crate::toy::{self, IntPayload};

    fn run_state(v: i64) -> GameState<IntPayload> {
        GameState::new(Mode::new("run"), IntPayload(v))
    }

    fn inc() -> InputSymbol {
        InputSymbol::nullary("inc")
    }

    fn value_pattern(
        id: &str,
        lo: i64,
        hi: i64,
        witness: i64,
    ) -> PatternMonoid<IntPayload> {
        let behavlet = Behavlet::new(
            id,
            "toy-bounded",
            "test",
            Quantifier::InstanceCount,
            move |s: &GameState<IntPayload>| (lo..=hi).contains(&s.payload.0),
            move |s: &GameState<IntPayload>| (lo..=hi).contains(&s.payload.0),
            move |v: &crate::behavlet::TickView<'_, IntPayload>| {
                (lo..=hi).contains(&v.state.payload.0)
            },
        );
        PatternMonoid::new(
            behavlet,
            Alphabet::new(vec![SymbolSchema::nullary("inc"), SymbolSchema::nullary("jump")]),
            run_state(witness),
        )
    }

    #[test]
    fn product_steps_one_component_only() {
        let product = compose_free(
            toy::bounded_counter(5),
            toy::bounded_counter(5),
            RenamePolicy::Prefix { left: "l.".into(), right: "r.".into() },
        )
        .unwrap();
        let next = product
            .step(product.initial(), &InputSymbol::nullary("l.inc"))
            .unwrap();
        assert_eq!(next.payload.left.payload.0, 1);
        assert_eq!(next.payload.right.payload.0, 0);
        let next = product.step(&next, &InputSymbol::nullary("r.jump")).unwrap();
        assert_eq!(next.payload.left.payload.0, 1);
        assert_eq!(next.payload.right.payload.0, 2);
    }

    #[test]
    fn colliding_tags_need_a_rename_policy() {
        let err = compose_free(
            toy::bounded_counter(3),
            toy::bounded_counter(3),
            RenamePolicy::Reject,
        )
        .err()
        .unwrap();
        assert!(matches!(err, ComposeError::AlphabetCollision { ref tag } if tag == "inc"));
    }

    #[test]
    fn unit_is_an_identity_for_free_composition() {
        let product =
            compose_free(toy::bounded_counter(4), unit_model(), RenamePolicy::Reject).unwrap();
        let single = toy::bounded_counter(4);
        let word = InputWord::from_symbols(vec![inc(), inc()]);
        let product_run = product.run(product.initial().clone(), &word).into_trace();
        let single_run = single.run(single.initial().clone(), &word).into_trace();
        let left_projection: Vec<i64> = product_run
            .states()
            .iter()
            .map(|s| s.payload.left.payload.0)
            .collect();
        let direct: Vec<i64> = single_run.states().iter().map(|s| s.payload.0).collect();
        assert_eq!(left_projection, direct);
    }

    #[test]
    fn interleaved_word_matches_separate_projections() {
        let product = compose_free(
            toy::bounded_counter(9),
            toy::cyclic_counter(4),
            RenamePolicy::Prefix { left: "a.".into(), right: "b.".into() },
        )
        .unwrap();
        let word = InputWord::from_symbols(vec![
            InputSymbol::nullary("a.inc"),
            InputSymbol::nullary("b.inc"),
            InputSymbol::nullary("a.jump"),
            InputSymbol::nullary("b.inc"),
            InputSymbol::nullary("a.inc"),
        ]);
        let joint = product.run(product.initial().clone(), &word).into_trace();

        let left = toy::bounded_counter(9);
        let left_word = InputWord::from_symbols(vec![inc(), InputSymbol::nullary("jump"), inc()]);
        let left_run = left.run(left.initial().clone(), &left_word).into_trace();

        let right = toy::cyclic_counter(4);
        let right_word = InputWord::from_symbols(vec![inc(), inc()]);
        let right_run = right.run(right.initial().clone(), &right_word).into_trace();

        assert_eq!(joint.last().payload.left, *left_run.last());
        assert_eq!(joint.last().payload.right, *right_run.last());
    }

    #[test]
    fn pattern_outside_base_alphabet_is_rejected() {
        let pattern = {
            let behavlet = Behavlet::new(
                "stranger",
                "toy-bounded",
                "test",
                Quantifier::InstanceCount,
                |_: &GameState<IntPayload>| true,
                |_: &GameState<IntPayload>| true,
                |_: &crate::behavlet::TickView<'_, IntPayload>| true,
            );
            PatternMonoid::new(
                behavlet,
                Alphabet::new(vec![SymbolSchema::nullary("teleport")]),
                run_state(0),
            )
        };
        let err = compose_restricted(toy::bounded_counter(9), pattern, RestrictionSpec::default())
            .err()
            .unwrap();
        assert!(matches!(err, ComposeError::AlphabetNotSubset { .. }));
    }

    #[test]
    fn unsatisfied_start_condition_is_rejected() {
        let pattern = value_pattern("never", 50, 60, 0);
        let err = compose_restricted(toy::bounded_counter(9), pattern, RestrictionSpec::default())
            .err()
            .unwrap();
        assert!(matches!(err, ComposeError::StartConditionUnsatisfiable { .. }));
    }

    #[test]
    fn saturated_witness_is_a_degenerate_pattern() {
        // From value 9 on a 0..=9 counter, neither inc nor jump is defined.
        let pattern = value_pattern("stuck", 0, 9, 9);
        let err = compose_restricted(toy::bounded_counter(9), pattern, RestrictionSpec::default())
            .err()
            .unwrap();
        assert!(matches!(
            err,
            ComposeError::DegeneratePattern { continuations: 0, .. }
        ));
    }

    #[test]
    fn reduction_holds_on_counter_traces() {
        let base = toy::bounded_counter(30);
        let cm = compose_restricted(base, value_pattern("low", 0, 10, 0), RestrictionSpec::default())
            .unwrap();
        let word = InputWord::from_symbols(vec![inc(); 20]);
        let trace = cm.base().run(cm.base().initial().clone(), &word).into_trace();
        let report = cm.validate_restrictions(&trace).unwrap();
        assert!(report.reduction.pass);
        assert!(report.all_pass());
    }

    #[test]
    fn out_of_order_pattern_starts_are_flagged() {
        // Pattern "first" fires from value 20, "second" from value 5; on a
        // plain ascending trace "second" therefore starts earlier.
        let base = toy::bounded_counter(40);
        let cm = compose_restricted(
            base,
            value_pattern("first", 20, 30, 20),
            RestrictionSpec::default(),
        )
        .unwrap()
        .compose(value_pattern("second", 5, 10, 5))
        .unwrap();
        let word = InputWord::from_symbols(vec![inc(); 35]);
        let trace = cm.base().run(cm.base().initial().clone(), &word).into_trace();
        let report = cm.validate_restrictions(&trace).unwrap();
        assert!(report.reduction.pass);
        assert!(!report.ordering.pass);
        let (prev, prev_start, next, next_start) = report.ordering.violation.unwrap();
        assert_eq!((prev.as_str(), prev_start), ("first", 20));
        assert_eq!((next.as_str(), next_start), ("second", 5));
        assert!(report.overlap.pass);
    }

    #[test]
    fn duplicate_overlapping_instances_are_flagged() {
        let base = toy::bounded_counter(40);
        let cm = compose_restricted(
            base,
            value_pattern("copy-a", 10, 20, 10),
            RestrictionSpec::default(),
        )
        .unwrap()
        .compose(value_pattern("copy-b", 10, 20, 10))
        .unwrap();
        let word = InputWord::from_symbols(vec![inc(); 30]);
        let trace = cm.base().run(cm.base().initial().clone(), &word).into_trace();
        let report = cm.validate_restrictions(&trace).unwrap();
        assert!(report.ordering.pass, "equal starts satisfy non-strict ordering");
        assert!(!report.overlap.pass);
        let (a, span_a, b, span_b) = report.overlap.violations[0].clone();
        assert_eq!((a.as_str(), b.as_str()), ("copy-a", "copy-b"));
        assert_eq!(span_a, span_b);
    }
}
