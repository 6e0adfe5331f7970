//! Archetype agents for the two reference games. All are deterministic
//! given the simulation seed; the deliberately simple policies keep any
//! profiling separation attributable to the detected patterns rather than
//! to agent noise.

use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{GameModel, GameState, InputSymbol};
use crate::games::maze::{Pos, GRID};
use crate::games::pacman::{bfs_distances, powered_mode, shift, PmPayload, DIRS};
use crate::games::ttt::{self, Mark, Square, TttPayload};
use crate::games::Cell;

use super::AgentSpec;

fn legal_dirs(model: &GameModel<PmPayload>, state: &GameState<PmPayload>) -> Vec<InputSymbol> {
    model.legal_symbols(state)
}

fn toward(
    state: &GameState<PmPayload>,
    target: Pos,
    legal: &[InputSymbol],
) -> Option<InputSymbol> {
    let field = bfs_distances(&state.payload.grid, target);
    let mut best: Option<(u32, usize)> = None;
    for (order, sym) in legal.iter().enumerate() {
        let (_, dx, dy) = DIRS.iter().find(|(t, _, _)| *t == sym.tag)?;
        let next = shift(state.payload.pac, *dx, *dy)?;
        let d = field[next.y as usize][next.x as usize];
        if best.map_or(true, |(bd, bo)| (d, order) < (bd, bo)) {
            best = Some((d, order));
        }
    }
    best.map(|(_, order)| legal[order].clone())
}

fn nearest_cell(state: &GameState<PmPayload>, wanted: Cell) -> Option<Pos> {
    let field = bfs_distances(&state.payload.grid, state.payload.pac);
    let mut best: Option<(u32, Pos)> = None;
    for y in 0..GRID {
        for x in 0..GRID {
            if state.payload.grid[y][x] == wanted {
                let d = field[y][x];
                if d != u32::MAX && best.map_or(true, |(bd, _)| d < bd) {
                    best = Some((d, Pos::new(x as u8, y as u8)));
                }
            }
        }
    }
    best.map(|(_, p)| p)
}

/// Uniform choice among the legal directions.
pub fn pacman_random() -> AgentSpec<PmPayload> {
    AgentSpec::new("random", "baseline", |m: &GameModel<PmPayload>, s: &GameState<PmPayload>, rng: &mut ChaCha8Rng| {
        legal_dirs(m, s).choose(rng).cloned()
    })
}

/// Seeks powerpills and, once powered, closes on the nearest ghost; eaten
/// ghosts respawn at their house, so the chase gravitates there.
pub fn pacman_hunter() -> AgentSpec<PmPayload> {
    AgentSpec::new("hunter", "aggressive", |m: &GameModel<PmPayload>, s: &GameState<PmPayload>, rng: &mut ChaCha8Rng| {
        let legal = legal_dirs(m, s);
        if legal.is_empty() {
            return None;
        }
        let target = if s.mode == powered_mode() {
            let field = bfs_distances(&s.payload.grid, s.payload.pac);
            s.payload
                .ghosts
                .iter()
                .copied()
                .min_by_key(|g| field[g.y as usize][g.x as usize])
        } else {
            nearest_cell(s, Cell::Power).or_else(|| nearest_cell(s, Cell::Pill))
        };
        match target {
            Some(t) => toward(s, t, &legal),
            None => legal.choose(rng).cloned(),
        }
    })
}

/// Always moves to maximize the shortest-path distance to the nearest
/// ghost.
pub fn pacman_evader() -> AgentSpec<PmPayload> {
    AgentSpec::new("evader", "cautious", |m: &GameModel<PmPayload>, s: &GameState<PmPayload>, _rng: &mut ChaCha8Rng| {
        let legal = legal_dirs(m, s);
        if legal.is_empty() {
            return None;
        }
        let fields: Vec<_> = s
            .payload
            .ghosts
            .iter()
            .map(|&g| bfs_distances(&s.payload.grid, g))
            .collect();
        let mut best: Option<(u32, usize)> = None;
        for (order, sym) in legal.iter().enumerate() {
            let (_, dx, dy) = DIRS.iter().find(|(t, _, _)| *t == sym.tag).unwrap();
            let Some(next) = shift(s.payload.pac, *dx, *dy) else { continue };
            let danger = fields
                .iter()
                .map(|f| f[next.y as usize][next.x as usize])
                .min()
                .unwrap_or(u32::MAX);
            // Higher danger distance is better; ties resolve in direction
            // order for determinism.
            let better = match best {
                None => true,
                Some((bd, _)) => danger > bd,
            };
            if better {
                best = Some((danger, order));
            }
        }
        best.map(|(_, order)| legal[order].clone())
    })
}

pub fn pacman_agents() -> Vec<AgentSpec<PmPayload>> {
    vec![pacman_random(), pacman_hunter(), pacman_evader()]
}

fn legal_cells(p: &TttPayload) -> Vec<usize> {
    p.empties().collect()
}

/// Uniform choice among the empty cells; plays both seats in self-play.
pub fn ttt_random() -> AgentSpec<TttPayload> {
    AgentSpec::new("random", "baseline", |m: &GameModel<TttPayload>, s: &GameState<TttPayload>, rng: &mut ChaCha8Rng| {
        m.legal_symbols(s).choose(rng).cloned()
    })
}

/// Tactic hierarchy: win, then block, then fork, then centre, then a
/// random legal cell.
pub fn ttt_tactic() -> AgentSpec<TttPayload> {
    AgentSpec::new("tactic", "methodical", |m: &GameModel<TttPayload>, s: &GameState<TttPayload>, rng: &mut ChaCha8Rng| {
        if m.legal_symbols(s).is_empty() {
            return None;
        }
        let p = &s.payload;
        let mover = p.to_move;
        let wins = ttt::threat_cells(p, mover);
        if let Some(&cell) = wins.as_slice().choose(rng) {
            return Some(ttt::place_symbol(cell + 1));
        }
        let blocks = ttt::threat_cells(p, mover.other());
        if let Some(&cell) = blocks.as_slice().choose(rng) {
            return Some(ttt::place_symbol(cell + 1));
        }
        let forks: Vec<usize> = legal_cells(p)
            .into_iter()
            .filter(|&cell| {
                let mut probe = *p;
                probe.cells[cell] = Square::Taken(mover);
                ttt::threat_cells(&probe, mover).len() >= 2
            })
            .collect();
        if let Some(&cell) = forks.as_slice().choose(rng) {
            return Some(ttt::place_symbol(cell + 1));
        }
        if p.cells[4] == Square::Empty {
            return Some(ttt::place_symbol(5));
        }
        legal_cells(p)
            .as_slice()
            .choose(rng)
            .map(|&cell| ttt::place_symbol(cell + 1))
    })
}

/// Perfect play via the solved game table; deterministic.
pub fn ttt_minimax() -> AgentSpec<TttPayload> {
    AgentSpec::new("minimax", "perfect", |_: &GameModel<TttPayload>, s: &GameState<TttPayload>, _: &mut ChaCha8Rng| {
        ttt::best_move(&s.payload).map(ttt::place_symbol)
    })
}

pub fn ttt_agents() -> Vec<AgentSpec<TttPayload>> {
    vec![ttt_random(), ttt_tactic(), ttt_minimax()]
}

/// Two-seat wrapper: `x` answers when x is to move, `o` otherwise.
pub fn versus(x: AgentSpec<TttPayload>, o: AgentSpec<TttPayload>) -> AgentSpec<TttPayload> {
    let id = format!("{}-vs-{}", x.id, o.id);
    AgentSpec::new(id, "match", move |m: &GameModel<TttPayload>, s: &GameState<TttPayload>, rng: &mut ChaCha8Rng| {
        match s.payload.to_move {
            Mark::X => x.choose(m, s, rng),
            Mark::O => o.choose(m, s, rng),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::maze::MazeSpec;
    use crate::games::pacman::{self, PacmanConfig};
    use crate::games::ttt::Outcome;
    use crate::profiler::{simulate, SimOutcome};
    use rand::SeedableRng;

    #[test]
    fn hunter_steps_onto_an_adjacent_ghost_when_powered() {
        let mut rows = ["####################"; crate::games::GRID];
        rows[10] = "#P1  o  2 3 4      #";
        let text = rows.join("\n") + "\n";
        let maze = MazeSpec::parse(&text).unwrap();
        let m = pacman::model_with(&maze, PacmanConfig { power_timer: 40, ghost_weight: 1.0, lives: 3 });
        // Hand the hunter a powered state with ghost 1 right beside it.
        let mut powered = m.seeded_initial(3);
        powered.payload.timer = 40;
        let powered = GameState::new(powered_mode(), powered.payload);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let sym = pacman_hunter().choose(&m, &powered, &mut rng).unwrap();
        assert_eq!(sym.tag, "right", "distance-zero target is straight ahead");
    }

    #[test]
    fn tactic_agent_takes_an_immediate_win() {
        let m = ttt::model();
        // x holds 1,2; cell 3 completes the top row.
        let mut p = TttPayload::empty_board();
        p.cells[0] = Square::Taken(Mark::X);
        p.cells[1] = Square::Taken(Mark::X);
        p.cells[5] = Square::Taken(Mark::O);
        p.cells[8] = Square::Taken(Mark::O);
        let state = GameState::new(ttt::play_mode(), p);
        assert!(m.check_invariant(&state));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let sym = ttt_tactic().choose(&m, &state, &mut rng).unwrap();
        assert_eq!(sym, ttt::place_symbol(3));
    }

    #[test]
    fn random_self_play_always_ends_within_nine_moves() {
        let m = ttt::model();
        let agent = ttt_random();
        for seed in 0..50 {
            let run = simulate(&m, &agent, seed, 20);
            assert!(run.trace.ticks() <= 9);
            assert_eq!(run.outcome, SimOutcome::Terminal);
        }
    }

    #[test]
    fn minimax_against_itself_draws() {
        let m = ttt::model();
        let game = versus(ttt_minimax(), ttt_minimax());
        for seed in 0..5 {
            let run = simulate(&m, &game, seed, 20);
            assert_eq!(ttt::winner(&run.trace.last().payload), Outcome::Draw);
        }
    }
}
