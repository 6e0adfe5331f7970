//! Line-oriented trace files.
//!
//! Line 1 is the header:
//!
//! ```text
//! #trace v=1 model=pacman board=default seed=7 agent=hunter state=full
//! ```
//!
//! Every following line is one tick record, `tick symbol entry`, with
//! ticks running 1, 2, 3, ... and `entry` either the canonical state
//! serialization (`state=full`) or its 64-bit FNV-1a hash in hex
//! (`state=hash`, for long runs). The initial state is not recorded: it is
//! reconstructed from the header (model, board, seed), and reading a file
//! replays every input and checks every recorded entry against the
//! recomputed state, so a file that does not replay is rejected with its
//! offending line number.

use std::path::Path;

use thiserror::Error;

use crate::algebra::{GameModel, InputSymbol, InputWord, Payload, Trace};

/// How states are recorded in tick lines.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StateMode {
    Full,
    Hash,
}

impl StateMode {
    fn as_str(self) -> &'static str {
        match self {
            StateMode::Full => "full",
            StateMode::Hash => "hash",
        }
    }
}

pub const TRACE_FORMAT_VERSION: u32 = 1;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceHeader {
    pub version: u32,
    pub model_id: String,
    /// Maze reference (path or "default") for grid games, board size
    /// otherwise.
    pub board: String,
    pub seed: u64,
    pub agent: String,
    pub state_mode: StateMode,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TickRecord {
    pub tick: usize,
    pub symbol: InputSymbol,
    pub entry: String,
}

#[derive(Error, Debug)]
pub enum TraceFileError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("missing or malformed header line")]
    BadHeader,
    #[error("header field {field:?} is missing or malformed")]
    BadHeaderField { field: &'static str },
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("line {line}: tick {found} out of order (expected {expected})")]
    TickSequence { line: usize, expected: usize, found: usize },
    #[error("line {line}: recorded state does not match the replayed state")]
    ReplayMismatch { line: usize },
    #[error("line {line}: input {symbol} is undefined during replay")]
    UndefinedStep { line: usize, symbol: InputSymbol },
    #[error("trace is for model {found:?}, expected {expected:?}")]
    WrongModel { expected: String, found: String },
}

/// 64-bit FNV-1a; the hash is part of the file format, so it is pinned
/// here rather than delegated to a hasher whose output may change across
/// library versions.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

fn state_entry<P: Payload>(state: &crate::algebra::GameState<P>, mode: StateMode) -> String {
    let canon = state.canon();
    match mode {
        StateMode::Full => canon,
        StateMode::Hash => format!("{:016x}", fnv1a64(canon.as_bytes())),
    }
}

/// Renders header plus tick lines; the exact byte form read back by
/// [`parse_trace_text`].
pub fn render_trace<P: Payload>(header: &TraceHeader, trace: &Trace<P>) -> String {
    assert!(
        !header.board.contains(char::is_whitespace) && !header.board.is_empty(),
        "board references must be single tokens"
    );
    let mut out = format!(
        "#trace v={} model={} board={} seed={} agent={} state={}\n",
        header.version,
        header.model_id,
        header.board,
        header.seed,
        header.agent,
        header.state_mode.as_str()
    );
    for (i, sym) in trace.word().symbols().iter().enumerate() {
        out.push_str(&format!(
            "{} {} {}\n",
            i + 1,
            sym,
            state_entry(trace.state(i + 1), header.state_mode)
        ));
    }
    out
}

/// Atomic write of a rendered trace.
pub fn write_trace<P: Payload>(
    header: &TraceHeader,
    trace: &Trace<P>,
    path: &Path,
) -> Result<(), TraceFileError> {
    let text = render_trace(header, trace);
    super::write_atomic(path, text.as_bytes())?;
    Ok(())
}

fn header_field<'a>(
    tokens: &mut impl Iterator<Item = &'a str>,
    field: &'static str,
) -> Result<&'a str, TraceFileError> {
    tokens
        .next()
        .and_then(|tok| tok.strip_prefix(field))
        .and_then(|tok| tok.strip_prefix('='))
        .ok_or(TraceFileError::BadHeaderField { field })
}

/// Parses header and tick records; requires ticks to run 1, 2, 3, ...
/// with no gaps (replay needs every input).
pub fn parse_trace_text(text: &str) -> Result<(TraceHeader, Vec<TickRecord>), TraceFileError> {
    let mut lines = text.lines().enumerate();
    let (_, header_line) = lines.next().ok_or(TraceFileError::BadHeader)?;
    let mut tokens = header_line.split(' ');
    if tokens.next() != Some("#trace") {
        return Err(TraceFileError::BadHeader);
    }
    let version: u32 = header_field(&mut tokens, "v")?
        .parse()
        .map_err(|_| TraceFileError::BadHeaderField { field: "v" })?;
    let model_id = header_field(&mut tokens, "model")?.to_string();
    let board = header_field(&mut tokens, "board")?.to_string();
    let seed: u64 = header_field(&mut tokens, "seed")?
        .parse()
        .map_err(|_| TraceFileError::BadHeaderField { field: "seed" })?;
    let agent = header_field(&mut tokens, "agent")?.to_string();
    let state_mode = match header_field(&mut tokens, "state")? {
        "full" => StateMode::Full,
        "hash" => StateMode::Hash,
        _ => return Err(TraceFileError::BadHeaderField { field: "state" }),
    };
    let header = TraceHeader { version, model_id, board, seed, agent, state_mode };

    let mut records = Vec::new();
    for (index, line) in lines {
        let line_no = index + 1;
        if line.is_empty() {
            continue;
        }
        let mut parts = line.splitn(3, ' ');
        let (tick, symbol, entry) = match (parts.next(), parts.next(), parts.next()) {
            (Some(t), Some(s), Some(e)) => (t, s, e),
            _ => {
                return Err(TraceFileError::MalformedLine {
                    line: line_no,
                    reason: "expected `tick symbol state`".to_string(),
                })
            }
        };
        let tick: usize = tick.parse().map_err(|_| TraceFileError::MalformedLine {
            line: line_no,
            reason: format!("bad tick index {tick:?}"),
        })?;
        let symbol = InputSymbol::parse(symbol).ok_or_else(|| TraceFileError::MalformedLine {
            line: line_no,
            reason: format!("bad input symbol {symbol:?}"),
        })?;
        let expected = records.len() + 1;
        if tick != expected {
            return Err(TraceFileError::TickSequence { line: line_no, expected, found: tick });
        }
        records.push(TickRecord { tick, symbol, entry: entry.to_string() });
    }
    Ok((header, records))
}

pub fn read_trace_text(path: &Path) -> Result<(TraceHeader, Vec<TickRecord>), TraceFileError> {
    parse_trace_text(&std::fs::read_to_string(path)?)
}

/// Replays the records against a model, validating every recorded entry.
/// `trace_id` names the resulting trace (callers typically use the file
/// stem).
pub fn replay_records<P: Payload>(
    model: &GameModel<P>,
    header: &TraceHeader,
    records: &[TickRecord],
    trace_id: &str,
) -> Result<Trace<P>, TraceFileError> {
    if header.model_id != model.id() {
        return Err(TraceFileError::WrongModel {
            expected: model.id().to_string(),
            found: header.model_id.clone(),
        });
    }
    let mut states = vec![model.seeded_initial(header.seed)];
    let mut word = InputWord::empty();
    for record in records {
        let line = record.tick + 1;
        let current = states.last().expect("nonempty");
        let next = model.step(current, &record.symbol).ok_or_else(|| {
            TraceFileError::UndefinedStep { line, symbol: record.symbol.clone() }
        })?;
        if state_entry(&next, header.state_mode) != record.entry {
            return Err(TraceFileError::ReplayMismatch { line });
        }
        states.push(next);
        word.push(record.symbol.clone());
    }
    Ok(Trace::synthetic(trace_id, model.id(), word, states))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GameModel, GameState};
    use crate::toy::{self, IntPayload};

    fn toy_header(state_mode: StateMode) -> TraceHeader {
        TraceHeader {
            version: TRACE_FORMAT_VERSION,
            model_id: "toy-bounded".to_string(),
            board: "none".to_string(),
            seed: 0,
            agent: "manual".to_string(),
            state_mode,
        }
    }

    fn sample_trace() -> (GameModel<IntPayload>, Trace<IntPayload>) {
        let m = toy::bounded_counter(9);
        let word = InputWord::from_symbols(vec![
            InputSymbol::nullary("inc"),
            InputSymbol::nullary("jump"),
            InputSymbol::nullary("inc"),
        ]);
        let trace = m.run(m.initial().clone(), &word).into_trace();
        (m, trace)
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let (m, trace) = sample_trace();
        for mode in [StateMode::Full, StateMode::Hash] {
            let header = toy_header(mode);
            let text = render_trace(&header, &trace);
            let (parsed_header, records) = parse_trace_text(&text).unwrap();
            assert_eq!(parsed_header, header);
            let replayed = replay_records(&m, &parsed_header, &records, "replay").unwrap();
            assert_eq!(replayed.states(), trace.states());
            assert_eq!(render_trace(&parsed_header, &replayed), text);
        }
    }

    #[test]
    fn shuffled_tick_lines_are_rejected() {
        let (_, trace) = sample_trace();
        let header = toy_header(StateMode::Full);
        let text = render_trace(&header, &trace);
        let mut lines: Vec<&str> = text.lines().collect();
        lines.swap(1, 2);
        let shuffled = lines.join("\n") + "\n";
        assert!(matches!(
            parse_trace_text(&shuffled),
            Err(TraceFileError::TickSequence { line: 2, .. })
        ));
    }

    #[test]
    fn malformed_lines_name_their_line_number() {
        let (_, trace) = sample_trace();
        let header = toy_header(StateMode::Full);
        let mut text = render_trace(&header, &trace);
        text.push_str("4 nonsense\n");
        match parse_trace_text(&text) {
            Err(TraceFileError::MalformedLine { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected a malformed-line error, got {other:?}"),
        }
    }

    #[test]
    fn tampered_states_fail_replay() {
        let (m, trace) = sample_trace();
        let header = toy_header(StateMode::Full);
        let text = render_trace(&header, &trace);
        // States run 0,1,3,4; corrupt the recorded value 3.
        let tampered = text.replace("run|3", "run|7");
        let (h, records) = parse_trace_text(&tampered).unwrap();
        assert!(matches!(
            replay_records(&m, &h, &records, "t"),
            Err(TraceFileError::ReplayMismatch { .. })
        ));
    }

    #[test]
    fn hash_mode_validates_against_recomputed_hashes() {
        let (m, trace) = sample_trace();
        let header = toy_header(StateMode::Hash);
        let text = render_trace(&header, &trace);
        let (h, records) = parse_trace_text(&text).unwrap();
        let replayed = replay_records(&m, &h, &records, "t").unwrap();
        assert_eq!(replayed.last(), trace.last());
        // Flip one hex digit: replay must reject.
        let bad = {
            let mut lines: Vec<String> = text.lines().map(String::from).collect();
            let last = lines.last_mut().unwrap();
            let flipped = if last.ends_with('0') { "1" } else { "0" };
            last.replace_range(last.len() - 1.., flipped);
            lines.join("\n") + "\n"
        };
        let (h, records) = parse_trace_text(&bad).unwrap();
        assert!(matches!(
            replay_records(&m, &h, &records, "t"),
            Err(TraceFileError::ReplayMismatch { .. })
        ));
    }

    #[test]
    fn undefined_inputs_fail_replay_with_the_symbol() {
        let m = toy::bounded_counter(1);
        let header = toy_header(StateMode::Full);
        let text = format!(
            "{}\n1 inc {}\n2 inc whatever\n",
            "#trace v=1 model=toy-bounded board=none seed=0 agent=manual state=full",
            GameState::new(crate::algebra::Mode::new("run"), IntPayload(1)).canon()
        );
        let _ = header;
        let (h, records) = parse_trace_text(&text).unwrap();
        assert!(matches!(
            replay_records(&m, &h, &records, "t"),
            Err(TraceFileError::UndefinedStep { line: 3, .. })
        ));
    }
}
