//! State-based grid Pac-Man on a 20x20 maze.
//!
//! One tick: the player moves to an adjacent non-wall cell (moving into a
//! wall is undefined), the four ghosts move, then consumption and
//! collisions resolve. A pill scores +5 and empties its cell; a powerpill
//! scores +10, switches the model into powered mode and starts the
//! vulnerability timer. A ghost collision costs a life in normal mode and
//! in powered mode scores +50 times the consecutive-eat index (1..4), the
//! ghost returning to its start cell. Entities exchanging cells in one
//! tick count as a collision too, so nothing tunnels through.
//!
//! Ghost movement is probabilistic: with weight `w` a ghost picks among
//! the legal moves that close the distance to the player (normal mode) or
//! grow it (powered mode), uniformly inside the group; otherwise among the
//! remaining legal moves. The random stream lives inside the state payload
//! as a splitmix64 word, so `step` stays a pure function and replaying a
//! recorded word reproduces every state bit for bit.

use std::collections::BTreeMap;

use crate::abstraction::{AbstractState, AbstractSymbol, AbstractionMap};
use crate::algebra::{
    Alphabet, GameModel, GameState, InputSymbol, Mode, Payload, Rule, SymbolSchema,
};
use crate::behavlet::{Behavlet, Quantifier};
use crate::compose::PatternMonoid;

use super::maze::{manhattan, Cell, Grid, MazeSpec, Pos, GRID};

/// Direction tags with their column/row deltas, in alphabet order.
pub const DIRS: [(&str, i16, i16); 4] =
    [("left", -1, 0), ("up", 0, -1), ("down", 0, 1), ("right", 1, 0)];

/// Tunables the rules leave open: powered-mode duration, ghost weighting
/// and starting lives.
#[derive(Clone, Copy, Debug)]
pub struct PacmanConfig {
    pub power_timer: u16,
    pub ghost_weight: f64,
    pub lives: u8,
}

impl Default for PacmanConfig {
    fn default() -> Self {
        PacmanConfig { power_timer: 40, ghost_weight: 0.75, lives: 3 }
    }
}

/// Full game payload. Ghost and player start cells ride along so that
/// resets and the near-home predicate need nothing outside the state.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PmPayload {
    pub grid: Grid,
    pub pac: Pos,
    pub ghosts: [Pos; 4],
    pub pac_start: Pos,
    pub ghost_starts: [Pos; 4],
    pub timer: u16,
    pub points: u64,
    pub lives: u8,
    pub eat_index: u8,
    pub rng: u64,
}

impl Payload for PmPayload {
    fn canon(&self) -> String {
        let mut out = String::with_capacity(512);
        for row in &self.grid {
            for cell in row {
                out.push(match cell {
                    Cell::Empty => '_',
                    Cell::Wall => '#',
                    Cell::Pill => '.',
                    Cell::Power => 'o',
                });
            }
            out.push('/');
        }
        out.push_str(&format!(
            "p{};g{};{};{};{};s{};{};{};{};{};t{};pt{};l{};e{};r{:016x}",
            self.pac,
            self.ghosts[0],
            self.ghosts[1],
            self.ghosts[2],
            self.ghosts[3],
            self.pac_start,
            self.ghost_starts[0],
            self.ghost_starts[1],
            self.ghost_starts[2],
            self.ghost_starts[3],
            self.timer,
            self.points,
            self.lives,
            self.eat_index,
            self.rng,
        ));
        out
    }
}

pub fn normal_mode() -> Mode {
    Mode::new("normal")
}

pub fn powered_mode() -> Mode {
    Mode::new("powered")
}

pub fn end_mode() -> Mode {
    Mode::new("end")
}

/// splitmix64; the stream order is part of the replay format, so the
/// generator is pinned here rather than taken from a crate that may
/// reshuffle its output between versions.
fn next_u64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn next_unit(state: &mut u64) -> f64 {
    (next_u64(state) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Bounds-checked cell shift.
pub fn shift(p: Pos, dx: i16, dy: i16) -> Option<Pos> {
    let x = p.x as i16 + dx;
    let y = p.y as i16 + dy;
    if (0..GRID as i16).contains(&x) && (0..GRID as i16).contains(&y) {
        Some(Pos::new(x as u8, y as u8))
    } else {
        None
    }
}

fn cell_at(grid: &Grid, p: Pos) -> Cell {
    grid[p.y as usize][p.x as usize]
}

fn legal_neighbors(grid: &Grid, p: Pos) -> Vec<Pos> {
    DIRS.iter()
        .filter_map(|&(_, dx, dy)| shift(p, dx, dy))
        .filter(|&q| cell_at(grid, q) != Cell::Wall)
        .collect()
}

/// One ghost's move. With several legal cells, probability mass `weight`
/// goes to the distance-reducing group (normal) or distance-growing group
/// (powered), uniform inside each group; if either group is empty the
/// choice is uniform over all legal cells. A boxed-in ghost stays put.
pub fn ghost_step(
    grid: &Grid,
    ghost: Pos,
    pac: Pos,
    powered: bool,
    weight: f64,
    rng: &mut u64,
) -> Pos {
    let legal = legal_neighbors(grid, ghost);
    match legal.len() {
        0 => ghost,
        1 => legal[0],
        _ => {
            let here = manhattan(ghost, pac);
            let preferred: Vec<Pos> = legal
                .iter()
                .copied()
                .filter(|&c| {
                    let there = manhattan(c, pac);
                    if powered {
                        there > here
                    } else {
                        there < here
                    }
                })
                .collect();
            let others: Vec<Pos> = legal
                .iter()
                .copied()
                .filter(|c| !preferred.contains(c))
                .collect();
            let pick = |group: &[Pos], rng: &mut u64| {
                group[(next_u64(rng) % group.len() as u64) as usize]
            };
            if preferred.is_empty() || others.is_empty() {
                pick(&legal, rng)
            } else if next_unit(rng) < weight {
                pick(&preferred, rng)
            } else {
                pick(&others, rng)
            }
        }
    }
}

fn dir_delta(sym: &InputSymbol) -> Option<(i16, i16)> {
    DIRS.iter()
        .find(|(tag, _, _)| *tag == sym.tag && sym.args.is_empty())
        .map(|&(_, dx, dy)| (dx, dy))
}

fn tick(state: &GameState<PmPayload>, delta: (i16, i16), cfg: PacmanConfig) -> GameState<PmPayload> {
    let mut p = state.payload.clone();
    let mut powered = state.mode == powered_mode();
    let pac_old = p.pac;
    let ghosts_old = p.ghosts;

    p.pac = shift(p.pac, delta.0, delta.1).expect("guard checked bounds");
    debug_assert!(cell_at(&p.grid, p.pac) != Cell::Wall);
    let mut fresh_power = false;
    match cell_at(&p.grid, p.pac) {
        Cell::Pill => {
            p.points += 5;
            p.grid[p.pac.y as usize][p.pac.x as usize] = Cell::Empty;
        }
        Cell::Power => {
            p.points += 10;
            p.grid[p.pac.y as usize][p.pac.x as usize] = Cell::Empty;
            powered = true;
            fresh_power = true;
            p.timer = cfg.power_timer;
            p.eat_index = 0;
        }
        _ => {}
    }

    // Ghosts see the player's new position and the new mode.
    let mut ghosts = ghosts_old;
    for g in &mut ghosts {
        *g = ghost_step(&p.grid, *g, p.pac, powered, cfg.ghost_weight, &mut p.rng);
    }

    let collided = |i: usize, ghosts: &[Pos; 4]| {
        let coloc = ghosts[i] == p.pac;
        let swapped = ghosts[i] == pac_old && p.pac == ghosts_old[i];
        coloc || swapped
    };

    if powered {
        for i in 0..4 {
            if collided(i, &ghosts) {
                if p.eat_index < 4 {
                    p.eat_index += 1;
                }
                p.points += 50 * p.eat_index as u64;
                ghosts[i] = p.ghost_starts[i];
            }
        }
        p.ghosts = ghosts;
        if !fresh_power {
            p.timer -= 1;
            if p.timer == 0 {
                powered = false;
                p.eat_index = 0;
            }
        }
        let mode = if powered { powered_mode() } else { normal_mode() };
        GameState::new(mode, p)
    } else {
        let died = (0..4).any(|i| collided(i, &ghosts));
        if died {
            p.lives -= 1;
            p.timer = 0;
            p.eat_index = 0;
            if p.lives == 0 {
                p.ghosts = ghosts;
                return GameState::new(end_mode(), p);
            }
            // Life lost: entities return to their starts, the grid and the
            // score stay as they are.
            p.pac = p.pac_start;
            p.ghosts = p.ghost_starts;
            return GameState::new(normal_mode(), p);
        }
        p.ghosts = ghosts;
        GameState::new(normal_mode(), p)
    }
}

fn initial_payload(maze: &MazeSpec, cfg: PacmanConfig) -> PmPayload {
    PmPayload {
        grid: *maze.grid(),
        pac: maze.pac_start(),
        ghosts: maze.ghost_starts(),
        pac_start: maze.pac_start(),
        ghost_starts: maze.ghost_starts(),
        timer: 0,
        points: 0,
        lives: cfg.lives,
        eat_index: 0,
        rng: 0,
    }
}

fn food_count(grid: &Grid) -> u64 {
    grid.iter()
        .flatten()
        .filter(|c| matches!(c, Cell::Pill | Cell::Power))
        .count() as u64
}

pub fn model(maze: &MazeSpec) -> GameModel<PmPayload> {
    model_with(maze, PacmanConfig::default())
}

pub fn model_with(maze: &MazeSpec, cfg: PacmanConfig) -> GameModel<PmPayload> {
    assert!(cfg.power_timer >= 1, "powered mode needs a positive timer");
    assert!(cfg.lives >= 1, "the game needs at least one life");
    let alphabet = Alphabet::new(
        DIRS.iter().map(|(tag, _, _)| SymbolSchema::nullary(*tag)).collect(),
    );
    let guard = |s: &GameState<PmPayload>, sym: &InputSymbol| {
        dir_delta(sym)
            .and_then(|(dx, dy)| shift(s.payload.pac, dx, dy))
            .is_some_and(|target| cell_at(&s.payload.grid, target) != Cell::Wall)
    };
    let mut rules = BTreeMap::new();
    for mode in [normal_mode(), powered_mode()] {
        rules.insert(
            mode,
            vec![Rule::new(
                "tick",
                guard,
                move |s: &GameState<PmPayload>, sym: &InputSymbol| {
                    tick(s, dir_delta(sym).expect("guard checked direction"), cfg)
                },
            )],
        );
    }
    GameModel::new(
        "pacman",
        vec![normal_mode(), powered_mode(), end_mode()],
        alphabet,
        rules,
        |s: &GameState<PmPayload>| {
            let p = &s.payload;
            let on_board = |pos: Pos| cell_at(&p.grid, pos) != Cell::Wall;
            on_board(p.pac)
                && p.ghosts.iter().all(|&g| on_board(g))
                && on_board(p.pac_start)
                && p.ghost_starts.iter().all(|&g| on_board(g))
                && p.eat_index <= 4
                && ((s.mode == powered_mode()) == (p.timer > 0))
                && ((s.mode == end_mode()) == (p.lives == 0))
        },
        GameState::new(normal_mode(), initial_payload(maze, cfg)),
        |s: &GameState<PmPayload>| food_count(&s.payload.grid),
    )
    .with_seeder(|s, seed| {
        let mut p = s.payload.clone();
        p.rng = seed;
        GameState::new(s.mode.clone(), p)
    })
}

/// True when every ghost is within manhattan distance 3 of its own start.
pub fn all_ghosts_near_home(p: &PmPayload) -> bool {
    p.ghosts
        .iter()
        .zip(&p.ghost_starts)
        .all(|(&g, &home)| manhattan(g, home) <= 3)
}

/// Hunt-close-to-ghost-house pattern: opens with powered mode, runs while
/// powered, and holds on ticks where all four ghosts sit within manhattan
/// distance 3 of their own start cells.
pub fn behavlet_a1() -> Behavlet<PmPayload> {
    Behavlet::new(
        "a1",
        "pacman",
        "cautious",
        Quantifier::InstanceCount,
        |s: &GameState<PmPayload>| s.mode == powered_mode(),
        |s: &GameState<PmPayload>| s.mode == powered_mode(),
        |v: &crate::behavlet::TickView<'_, PmPayload>| all_ghosts_near_home(&v.state.payload),
    )
}

/// The A1 pattern wrapped for composition onto a maze's base model. The
/// witness is the powered twin of the initial state.
pub fn pattern_a1(maze: &MazeSpec) -> PatternMonoid<PmPayload> {
    pattern_a1_with(maze, PacmanConfig::default())
}

pub fn pattern_a1_with(maze: &MazeSpec, cfg: PacmanConfig) -> PatternMonoid<PmPayload> {
    let mut witness_payload = initial_payload(maze, cfg);
    witness_payload.timer = cfg.power_timer;
    let witness = GameState::new(powered_mode(), witness_payload);
    let alphabet = Alphabet::new(
        DIRS.iter().map(|(tag, _, _)| SymbolSchema::nullary(*tag)).collect(),
    );
    PatternMonoid::new(behavlet_a1(), alphabet, witness)
}

/// Abstraction to (mode, all-ghosts-near-home flag); every direction maps
/// to one abstract "move" symbol.
pub fn mode_near_map() -> AbstractionMap<PmPayload> {
    AbstractionMap::new(
        "mode-near",
        |s: &GameState<PmPayload>| {
            AbstractState(format!(
                "{}/near={}",
                s.mode,
                u8::from(all_ghosts_near_home(&s.payload))
            ))
        },
        |_: &InputSymbol| AbstractSymbol("move".to_string()),
    )
}

/// Shortest-path distances from `from` over non-wall cells; `u32::MAX`
/// marks unreachable cells.
pub fn bfs_distances(grid: &Grid, from: Pos) -> [[u32; GRID]; GRID] {
    let mut dist = [[u32::MAX; GRID]; GRID];
    dist[from.y as usize][from.x as usize] = 0;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(from);
    while let Some(p) = queue.pop_front() {
        let d = dist[p.y as usize][p.x as usize];
        for q in legal_neighbors(grid, p) {
            let slot = &mut dist[q.y as usize][q.x as usize];
            if *slot == u32::MAX {
                *slot = d + 1;
                queue.push_back(q);
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::InputWord;
    use crate::games::maze::default_maze;

    fn maze_from_rows(rows: [&str; GRID]) -> MazeSpec {
        let text = rows.join("\n") + "\n";
        MazeSpec::parse(&text).unwrap()
    }

    const WALL_ROW: &str = "####################";

    /// Cross-shaped maze: open horizontal arm on row 10, vertical arm on
    /// column 9, one ghost starting at each dead-end arm tip, powerpill
    /// next to the player. In one-wide corridors every ghost choice is a
    /// forced move or a single preferred move, so with weight 1.0 the
    /// scenario is input-deterministic; eaten ghosts respawn at their tip
    /// and bounce there, away from any later sweep.
    fn cross_maze() -> MazeSpec {
        let mut rows = [WALL_ROW; GRID];
        rows[5] = "#########3##########";
        rows[6] = "######### ##########";
        rows[7] = "######### ##########";
        rows[8] = "######### ##########";
        rows[9] = "######### ##########";
        rows[10] = "####2    Po   1#####";
        rows[11] = "######### ##########";
        rows[12] = "######### ##########";
        rows[13] = "######### ##########";
        rows[14] = "######### ##########";
        rows[15] = "#########4##########";
        maze_from_rows(rows)
    }

    fn right() -> InputSymbol {
        InputSymbol::nullary("right")
    }

    #[test]
    fn wall_moves_are_undefined() {
        let mut rows = [WALL_ROW; GRID];
        rows[10] = "#P..   1 2 3 4     #";
        let maze = maze_from_rows(rows);
        let m = model(&maze);
        assert_eq!(m.step(m.initial(), &InputSymbol::nullary("up")), None);
        assert_eq!(m.step(m.initial(), &InputSymbol::nullary("left")), None);
        assert!(m.step(m.initial(), &right()).is_some());
    }

    #[test]
    fn pills_score_five_and_empty_their_cell() {
        let mut rows = [WALL_ROW; GRID];
        rows[10] = "#P..   1 2 3 4     #";
        let maze = maze_from_rows(rows);
        let m = model(&maze);
        let s1 = m.step(m.initial(), &right()).unwrap();
        assert_eq!(s1.payload.points, 5);
        assert_eq!(cell_at(&s1.payload.grid, s1.payload.pac), Cell::Empty);
        let s2 = m.step(&s1, &right()).unwrap();
        assert_eq!(s2.payload.points, 10);
    }

    #[test]
    fn powerpill_switches_mode_and_arms_timer() {
        let maze = cross_maze();
        let m = model(&maze);
        let s1 = m.step(m.initial(), &right()).unwrap();
        assert_eq!(s1.mode, powered_mode());
        assert_eq!(s1.payload.timer, PacmanConfig::default().power_timer);
        assert_eq!(s1.payload.points, 10);
        assert!(m.check_invariant(&s1));
    }

    #[test]
    fn powered_mode_expires_back_to_normal() {
        let maze = cross_maze();
        let cfg = PacmanConfig { power_timer: 3, ghost_weight: 1.0, lives: 3 };
        let m = model_with(&maze, cfg);
        // Eat the powerpill, then idle back and forth along the empty arm.
        let word = InputWord::from_symbols(vec![
            right(),
            right(),
            InputSymbol::nullary("left"),
            right(),
        ]);
        let trace = m.run(m.seeded_initial(7), &word).into_trace();
        assert_eq!(trace.state(1).mode, powered_mode());
        assert_eq!(trace.state(1).payload.timer, 3);
        assert_eq!(trace.state(2).payload.timer, 2);
        assert_eq!(trace.state(3).payload.timer, 1);
        assert_eq!(trace.state(4).mode, normal_mode());
        assert_eq!(trace.state(4).payload.timer, 0);
    }

    #[test]
    fn consecutive_ghosts_score_multiplied_by_eat_order() {
        let maze = cross_maze();
        let cfg = PacmanConfig { power_timer: 120, ghost_weight: 1.0, lives: 3 };
        let m = model_with(&maze, cfg);
        let mut state = m.seeded_initial(0);
        let mut deltas: Vec<u64> = Vec::new();
        // Sweep arm by arm; head-on meetings in a one-wide corridor always
        // collide (co-location or cell exchange), so each sweep scores an
        // eat. A ghost eaten inside its dead-end tip respawns there and its
        // forced exit can collide again on the way out; the multiplier
        // follows the consecutive eat order either way, which is exactly
        // what this scenario pins down. Arms hold at most one ghost, so no
        // tick ever scores twice.
        for _ in 0..80 {
            if state.payload.eat_index >= 4 {
                break;
            }
            let x = state.payload.pac.x;
            let dir = match state.payload.eat_index {
                0 => "right",
                1 => {
                    if x == 14 {
                        "left"
                    } else {
                        "right"
                    }
                }
                2 => match x.cmp(&9) {
                    std::cmp::Ordering::Less => "right",
                    std::cmp::Ordering::Greater => "left",
                    std::cmp::Ordering::Equal => "up",
                },
                _ => "down",
            };
            let sym = InputSymbol::nullary(dir);
            let next = match m.step(&state, &sym) {
                Some(next) => next,
                None => {
                    // Arm wall reached before the eat landed: bounce once.
                    let back = match dir {
                        "right" => "left",
                        "left" => "right",
                        "up" => "down",
                        _ => "up",
                    };
                    m.step(&state, &InputSymbol::nullary(back)).unwrap()
                }
            };
            if next.payload.points > state.payload.points {
                deltas.push(next.payload.points - state.payload.points);
            }
            state = next;
        }
        assert_eq!(deltas, vec![10, 50, 100, 150, 200]);
        assert_eq!(state.payload.points, 510);
        assert_eq!(state.payload.eat_index, 4);
        assert_eq!(state.mode, powered_mode());
        for (i, &g) in state.payload.ghosts.iter().enumerate() {
            assert!(
                manhattan(g, state.payload.ghost_starts[i]) <= 1,
                "ghost {i} bounces at its start"
            );
        }
    }

    #[test]
    fn normal_mode_collision_costs_a_life_and_resets_positions() {
        let mut rows = [WALL_ROW; GRID];
        rows[10] = "#P.  1            ##";
        rows[12] = "#2#3#4##############";
        let maze = maze_from_rows(rows);
        let cfg = PacmanConfig { power_timer: 40, ghost_weight: 1.0, lives: 3 };
        let m = model_with(&maze, cfg);
        // Ghost 1 charges head-on (weight 1.0, one-wide corridor); the
        // exchange counts as a collision even though they swap cells.
        let word = InputWord::from_symbols(vec![right(); 2]);
        let trace = m.run(m.seeded_initial(0), &word).into_trace();
        let after = trace.last();
        assert_eq!(after.payload.lives, 2);
        assert_eq!(after.payload.points, 5, "score survives the reset");
        assert_eq!(after.payload.pac, after.payload.pac_start);
        assert_eq!(after.payload.ghosts, after.payload.ghost_starts);
        assert_eq!(after.mode, normal_mode());

        // Two more charges exhaust the lives; the model then has no moves.
        let word = InputWord::from_symbols(vec![right(); 6]);
        let out = m.run(m.seeded_initial(0), &word);
        let end = out.trace().last();
        assert_eq!(end.payload.lives, 0);
        assert_eq!(end.mode, end_mode());
        assert_eq!(m.legal_symbols(end), Vec::new());
    }

    #[test]
    fn boxed_ghost_stays_put_and_single_exit_is_forced() {
        let mut rows = [WALL_ROW; GRID];
        rows[10] = "#P 1             2##";
        rows[12] = "#3#4################";
        let maze = maze_from_rows(rows);
        let grid = maze.grid();
        let mut rng = 1u64;
        // Ghost 3 is sealed on all four sides.
        for _ in 0..50 {
            assert_eq!(
                ghost_step(grid, Pos::new(1, 12), Pos::new(1, 10), false, 0.75, &mut rng),
                Pos::new(1, 12)
            );
        }
        // Ghost 2 starts against the right wall; its single legal move is
        // taken with probability one, weight notwithstanding.
        let pinned = Pos::new(17, 10);
        for _ in 0..50 {
            assert_eq!(
                ghost_step(grid, pinned, Pos::new(1, 10), false, 0.75, &mut rng),
                Pos::new(16, 10)
            );
        }
    }

    #[test]
    fn ghost_weight_is_an_empirical_three_quarters() {
        // Probe cell (9,9) has three legal moves — (9,8), (10,9) and
        // (9,10) — of which only (9,10) closes on the probe player at
        // (9,12), so the chase weight is observable directly.
        let mut rows = [WALL_ROW; GRID];
        rows[8] = "######### ##########";
        rows[9] = "#########  #########";
        rows[10] = "######### ##########";
        rows[11] = "#P 1 2 3 4        ##";
        rows[12] = "######### ##########";
        let maze = maze_from_rows(rows);
        let ghost = Pos::new(9, 9);
        let pac = Pos::new(9, 12);
        let grid = maze.grid();
        let reducing = Pos::new(9, 10);
        let mut rng = 42u64;
        let mut hits = 0u32;
        let draws = 10_000;
        for _ in 0..draws {
            if ghost_step(grid, ghost, pac, false, 0.75, &mut rng) == reducing {
                hits += 1;
            }
        }
        let freq = f64::from(hits) / f64::from(draws);
        assert!((0.73..=0.77).contains(&freq), "chase frequency {freq}");

        // Powered mode inverts the weighting toward distance-growing moves.
        let mut rng = 43u64;
        let mut away = 0u32;
        for _ in 0..draws {
            if ghost_step(grid, ghost, pac, true, 0.75, &mut rng) != reducing {
                away += 1;
            }
        }
        let freq = f64::from(away) / f64::from(draws);
        assert!((0.73..=0.77).contains(&freq), "flee frequency {freq}");
    }

    #[test]
    fn near_home_predicate_is_per_ghost_distance_three() {
        let maze = default_maze();
        let mut p = initial_payload(&maze, PacmanConfig::default());
        assert!(all_ghosts_near_home(&p));
        // Distance exactly 3 still counts.
        p.ghosts[2] = Pos::new(p.ghost_starts[2].x, p.ghost_starts[2].y - 3);
        assert!(all_ghosts_near_home(&p));
        // One ghost at distance 4 breaks the conjunction.
        p.ghosts[2] = Pos::new(p.ghost_starts[2].x - 1, p.ghost_starts[2].y - 3);
        assert!(!all_ghosts_near_home(&p));
        assert_eq!(manhattan(p.ghosts[2], p.ghost_starts[2]), 4);
    }

    #[test]
    fn a1_detects_the_near_home_stretch_of_a_powered_window() {
        let maze = default_maze();
        let cfg = PacmanConfig::default();
        let base = initial_payload(&maze, cfg);
        let far = Pos::new(1, 1); // far corner, >3 from every start
        let mut states = Vec::new();
        for tick in 0..=20u16 {
            let mut p = base.clone();
            let powered = (8..=17).contains(&tick);
            p.timer = if powered { cfg.power_timer - (tick - 8) } else { 0 };
            let near = (10..=14).contains(&tick);
            if !near {
                p.ghosts = [far; 4];
            }
            let mode = if powered { powered_mode() } else { normal_mode() };
            states.push(GameState::new(mode, p));
        }
        let word = InputWord::from_symbols(vec![right(); 20]);
        let trace = crate::algebra::Trace::synthetic("scripted", "pacman", word, states);
        let a1 = behavlet_a1();
        assert_eq!(a1.windows(&trace), vec![(8, 17)]);
        let ds = a1.detect(&trace).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!((ds[0].start_tick, ds[0].end_tick), (10, 14));
        assert_eq!(a1.quantify(&ds, &trace), 1.0);
    }

    #[test]
    fn replay_reproduces_states_exactly() {
        let maze = default_maze();
        let m = model(&maze);
        let init = m.seeded_initial(99);
        let mut word = InputWord::empty();
        let mut state = init.clone();
        let mut rng = 7u64;
        for _ in 0..60 {
            let legal = m.legal_symbols(&state);
            if legal.is_empty() {
                break;
            }
            let sym = legal[(next_u64(&mut rng) % legal.len() as u64) as usize].clone();
            state = m.step(&state, &sym).unwrap();
            word.push(sym);
        }
        let once = m.run(init.clone(), &word).into_trace();
        let twice = m.run(init, &word).into_trace();
        assert_eq!(once.states(), twice.states());
        assert_eq!(once.last(), &state);
    }
}
