//! Noughts & Crosses over the order-3 magic square.
//!
//! Cells are numbered 1..9 row-major and carry the magic values
//! `[2,7,6,9,5,1,4,3,8]`; every row, column and diagonal of that
//! arrangement sums to 15, so "three in a row" is exactly "three occupied
//! cells whose magic values sum to 15". The model enforces turn
//! alternation (x first), disjoint choices, and ends when a player owns a
//! 15-sum triple or the board fills.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::sync::OnceLock;

use crate::algebra::{
    Alphabet, GameModel, GameState, InputSymbol, Mode, Payload, Rule, SymbolSchema,
};
use crate::behavlet::{Behavlet, Quantifier, TickView};
use crate::compose::PatternMonoid;

/// Magic values of cells 1..9, row-major.
pub const MAGIC: [u8; 9] = [2, 7, 6, 9, 5, 1, 4, 3, 8];

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Mark {
    X,
    O,
}

impl Mark {
    pub fn other(self) -> Mark {
        match self {
            Mark::X => Mark::O,
            Mark::O => Mark::X,
        }
    }

    fn to_char(self) -> char {
        match self {
            Mark::X => 'x',
            Mark::O => 'o',
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Square {
    Empty,
    Taken(Mark),
}

/// Board payload: nine squares plus the mark to move.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct TttPayload {
    pub cells: [Square; 9],
    pub to_move: Mark,
}

impl TttPayload {
    pub fn empty_board() -> Self {
        TttPayload { cells: [Square::Empty; 9], to_move: Mark::X }
    }

    pub fn count(&self, mark: Mark) -> usize {
        self.cells.iter().filter(|c| **c == Square::Taken(mark)).count()
    }

    pub fn empties(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == Square::Empty)
            .map(|(i, _)| i)
    }

    pub fn is_full(&self) -> bool {
        self.cells.iter().all(|c| *c != Square::Empty)
    }
}

impl Payload for TttPayload {
    fn canon(&self) -> String {
        let mut out = String::with_capacity(11);
        for cell in &self.cells {
            out.push(match cell {
                Square::Empty => '.',
                Square::Taken(m) => m.to_char(),
            });
        }
        out.push('/');
        out.push(self.to_move.to_char());
        out
    }
}

/// Game outcome as read off a board.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Outcome {
    X,
    O,
    Draw,
    Open,
}

/// A mark wins exactly when some 3-subset of the magic values of its
/// occupied cells sums to 15.
pub fn has_fifteen(payload: &TttPayload, mark: Mark) -> bool {
    let values: Vec<u8> = payload
        .cells
        .iter()
        .enumerate()
        .filter(|(_, c)| **c == Square::Taken(mark))
        .map(|(i, _)| MAGIC[i])
        .collect();
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            for k in j + 1..values.len() {
                if values[i] + values[j] + values[k] == 15 {
                    return true;
                }
            }
        }
    }
    false
}

pub fn winner(payload: &TttPayload) -> Outcome {
    if has_fifteen(payload, Mark::X) {
        Outcome::X
    } else if has_fifteen(payload, Mark::O) {
        Outcome::O
    } else if payload.is_full() {
        Outcome::Draw
    } else {
        Outcome::Open
    }
}

pub fn play_mode() -> Mode {
    Mode::new("play")
}

pub fn end_mode() -> Mode {
    Mode::new("end")
}

fn place(payload: &TttPayload, cell: usize) -> TttPayload {
    let mut next = *payload;
    next.cells[cell] = Square::Taken(payload.to_move);
    next.to_move = payload.to_move.other();
    next
}

pub fn model() -> GameModel<TttPayload> {
    let alphabet = Alphabet::new(vec![SymbolSchema::unary("place", 1, 9)]);
    let mut rules = BTreeMap::new();
    rules.insert(
        play_mode(),
        vec![Rule::new(
            "place",
            |s: &GameState<TttPayload>, sym: &InputSymbol| {
                sym.tag == "place"
                    && sym.args.len() == 1
                    && (1..=9).contains(&sym.args[0])
                    && s.payload.cells[(sym.args[0] - 1) as usize] == Square::Empty
            },
            |s: &GameState<TttPayload>, sym: &InputSymbol| {
                let next = place(&s.payload, (sym.args[0] - 1) as usize);
                let mode = match winner(&next) {
                    Outcome::Open => play_mode(),
                    _ => end_mode(),
                };
                GameState::new(mode, next)
            },
        )],
    );
    GameModel::new(
        "ttt",
        vec![play_mode(), end_mode()],
        alphabet,
        rules,
        |s: &GameState<TttPayload>| {
            let x = s.payload.count(Mark::X);
            let o = s.payload.count(Mark::O);
            let balanced = x == o || x == o + 1;
            let turn_consistent = (s.payload.to_move == Mark::X) == (x == o);
            let mode_consistent = (s.mode == end_mode())
                == !matches!(winner(&s.payload), Outcome::Open);
            balanced && turn_consistent && mode_consistent
        },
        GameState::new(play_mode(), TttPayload::empty_board()),
        |s: &GameState<TttPayload>| s.payload.empties().count() as u64,
    )
}

pub fn place_symbol(cell_1based: usize) -> InputSymbol {
    InputSymbol::unary("place", cell_1based as i64)
}

/// Empty cells that would complete a 15-sum triple for `mark`.
pub fn threat_cells(payload: &TttPayload, mark: Mark) -> Vec<usize> {
    payload
        .empties()
        .filter(|&cell| {
            let mut probe = *payload;
            probe.cells[cell] = Square::Taken(mark);
            has_fifteen(&probe, mark)
        })
        .collect()
}

fn mover_and_cell<'a>(view: &'a TickView<'_, TttPayload>) -> Option<(&'a TttPayload, Mark, usize)> {
    let prev = view.prev?;
    let input = view.input?;
    if input.tag != "place" || input.args.len() != 1 {
        return None;
    }
    Some((
        &prev.payload,
        prev.payload.to_move,
        (input.args[0] - 1) as usize,
    ))
}

/// The three board tactics as Behavlets. Each fires on the tick of the
/// move that plays it, whichever mark made the move.
pub fn tactics() -> Vec<Behavlet<TttPayload>> {
    let play_center = Behavlet::new(
        "play-center",
        "ttt",
        "methodical",
        Quantifier::InstanceCount,
        |_: &GameState<TttPayload>| true,
        |_: &GameState<TttPayload>| true,
        |view: &TickView<'_, TttPayload>| {
            mover_and_cell(view).is_some_and(|(_, _, cell)| cell == 4)
        },
    );
    let block = Behavlet::new(
        "block",
        "ttt",
        "cautious",
        Quantifier::InstanceCount,
        |_: &GameState<TttPayload>| true,
        |_: &GameState<TttPayload>| true,
        |view: &TickView<'_, TttPayload>| {
            mover_and_cell(view).is_some_and(|(before, mover, cell)| {
                threat_cells(before, mover.other()) == vec![cell]
            })
        },
    );
    let fork = Behavlet::new(
        "fork",
        "ttt",
        "aggressive",
        Quantifier::InstanceCount,
        |_: &GameState<TttPayload>| true,
        |_: &GameState<TttPayload>| true,
        |view: &TickView<'_, TttPayload>| {
            mover_and_cell(view).is_some_and(|(before, mover, _)| {
                threat_cells(before, mover).len() < 2
                    && threat_cells(&view.state.payload, mover).len() >= 2
            })
        },
    );
    vec![play_center, block, fork]
}

/// The tactics wrapped for composition onto the board model, in the order
/// centre, block, fork.
pub fn tactic_patterns() -> Vec<PatternMonoid<TttPayload>> {
    let witness = GameState::new(play_mode(), TttPayload::empty_board());
    tactics()
        .into_iter()
        .map(|b| {
            PatternMonoid::new(
                b,
                Alphabet::new(vec![SymbolSchema::unary("place", 1, 9)]),
                witness.clone(),
            )
        })
        .collect()
}

type SolveKey = ([Square; 9], Mark);

fn solve_table() -> &'static HashMap<SolveKey, i8> {
    static TABLE: OnceLock<HashMap<SolveKey, i8>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = HashMap::new();
        fn value(payload: &TttPayload, table: &mut HashMap<SolveKey, i8>) -> i8 {
            let key = (payload.cells, payload.to_move);
            if let Some(&v) = table.get(&key) {
                return v;
            }
            let v = match winner(payload) {
                // A decided board means the previous mover won.
                Outcome::X | Outcome::O => -1,
                Outcome::Draw => 0,
                Outcome::Open => {
                    let mut best = -1;
                    for cell in payload.empties().collect::<Vec<_>>() {
                        let child = place(payload, cell);
                        best = best.max(-value(&child, table));
                        if best == 1 {
                            break;
                        }
                    }
                    best
                }
            };
            table.insert(key, v);
            v
        }
        value(&TttPayload::empty_board(), &mut table);
        table
    })
}

fn value_with_overlay(
    payload: &TttPayload,
    table: &HashMap<SolveKey, i8>,
    overlay: &mut HashMap<SolveKey, i8>,
) -> i8 {
    let key = (payload.cells, payload.to_move);
    if let Some(&v) = table.get(&key) {
        return v;
    }
    if let Some(&v) = overlay.get(&key) {
        return v;
    }
    let v = match winner(payload) {
        Outcome::X | Outcome::O => -1,
        Outcome::Draw => 0,
        Outcome::Open => payload
            .empties()
            .collect::<Vec<_>>()
            .into_iter()
            .map(|cell| -value_with_overlay(&place(payload, cell), table, overlay))
            .max()
            .unwrap_or(0),
    };
    overlay.insert(key, v);
    v
}

/// Game value from the mover's perspective under perfect play:
/// +1 winning, 0 drawn, -1 losing. Positions outside the play-reachable
/// set are solved on the fly without touching the shared table.
pub fn game_value(payload: &TttPayload) -> i8 {
    value_with_overlay(payload, solve_table(), &mut HashMap::new())
}

/// The lowest-numbered perfect-play move, as a 1-based cell number.
pub fn best_move(payload: &TttPayload) -> Option<usize> {
    if !matches!(winner(payload), Outcome::Open) {
        return None;
    }
    let mut overlay = HashMap::new();
    payload
        .empties()
        .collect::<Vec<_>>()
        .into_iter()
        .map(|cell| {
            let v = -value_with_overlay(&place(payload, cell), solve_table(), &mut overlay);
            (cell, v)
        })
        .max_by_key(|&(cell, v)| (v, std::cmp::Reverse(cell)))
        .map(|(cell, _)| cell + 1)
}
