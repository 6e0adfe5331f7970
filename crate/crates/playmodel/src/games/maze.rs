//! ASCII maze format for the grid game.
//!
//! A maze is exactly 20 lines of 20 characters: `#` wall, `.` pill, `o`
//! powerpill, space empty, `P` the player start and `1`-`4` the four ghost
//! starts (entity cells are empty underneath). Parsing and serializing are
//! mutually inverse on canonical text.

use std::fmt;

use thiserror::Error;

/// Grid side length; mazes are square.
pub const GRID: usize = 20;

/// One cell of the maze.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Cell {
    Empty,
    Wall,
    Pill,
    Power,
}

impl Cell {
    pub fn to_char(self) -> char {
        match self {
            Cell::Empty => ' ',
            Cell::Wall => '#',
            Cell::Pill => '.',
            Cell::Power => 'o',
        }
    }
}

/// Grid coordinate: `x` is the column, `y` the row, both `0..GRID`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Pos {
    pub x: u8,
    pub y: u8,
}

impl Pos {
    pub fn new(x: u8, y: u8) -> Self {
        Pos { x, y }
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

/// City-block distance between two cells.
pub fn manhattan(a: Pos, b: Pos) -> u32 {
    a.x.abs_diff(b.x) as u32 + a.y.abs_diff(b.y) as u32
}

pub type Grid = [[Cell; GRID]; GRID];

/// A parsed maze: the cell grid plus the player and ghost start positions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MazeSpec {
    grid: Grid,
    pac_start: Pos,
    ghost_starts: [Pos; 4],
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MazeError {
    #[error("maze must have {GRID} rows, found {found}")]
    WrongRowCount { found: usize },
    #[error("maze row {row} must have {GRID} characters, found {found}")]
    WrongRowLength { row: usize, found: usize },
    #[error("unknown maze character {ch:?} at row {row}, column {col}")]
    UnknownChar { row: usize, col: usize, ch: char },
    #[error("maze has no player start 'P'")]
    MissingPlayer,
    #[error("maze has more than one player start 'P'")]
    DuplicatePlayer,
    #[error("maze is missing ghost start '{0}'")]
    MissingGhost(u8),
    #[error("maze has more than one ghost start '{0}'")]
    DuplicateGhost(u8),
}

impl MazeSpec {
    pub fn parse(text: &str) -> Result<MazeSpec, MazeError> {
        let lines: Vec<&str> = text.lines().collect();
        if lines.len() != GRID {
            return Err(MazeError::WrongRowCount { found: lines.len() });
        }
        let mut grid = [[Cell::Empty; GRID]; GRID];
        let mut pac: Option<Pos> = None;
        let mut ghosts: [Option<Pos>; 4] = [None; 4];
        for (y, line) in lines.iter().enumerate() {
            let chars: Vec<char> = line.chars().collect();
            if chars.len() != GRID {
                return Err(MazeError::WrongRowLength { row: y, found: chars.len() });
            }
            for (x, ch) in chars.iter().enumerate() {
                let pos = Pos::new(x as u8, y as u8);
                grid[y][x] = match ch {
                    ' ' => Cell::Empty,
                    '#' => Cell::Wall,
                    '.' => Cell::Pill,
                    'o' => Cell::Power,
                    'P' => {
                        if pac.replace(pos).is_some() {
                            return Err(MazeError::DuplicatePlayer);
                        }
                        Cell::Empty
                    }
                    '1'..='4' => {
                        let i = (*ch as u8 - b'1') as usize;
                        if ghosts[i].replace(pos).is_some() {
                            return Err(MazeError::DuplicateGhost(i as u8 + 1));
                        }
                        Cell::Empty
                    }
                    other => {
                        return Err(MazeError::UnknownChar { row: y, col: x, ch: *other })
                    }
                };
            }
        }
        let pac_start = pac.ok_or(MazeError::MissingPlayer)?;
        let mut ghost_starts = [Pos::new(0, 0); 4];
        for (i, g) in ghosts.iter().enumerate() {
            ghost_starts[i] = g.ok_or(MazeError::MissingGhost(i as u8 + 1))?;
        }
        Ok(MazeSpec { grid, pac_start, ghost_starts })
    }

    /// Canonical text form: 20 lines of 20 characters, entity markers over
    /// their start cells, trailing newline.
    pub fn serialize(&self) -> String {
        let mut out = String::with_capacity((GRID + 1) * GRID);
        for y in 0..GRID {
            for x in 0..GRID {
                let pos = Pos::new(x as u8, y as u8);
                let ch = if pos == self.pac_start {
                    'P'
                } else if let Some(i) = self.ghost_starts.iter().position(|g| *g == pos) {
                    char::from(b'1' + i as u8)
                } else {
                    self.grid[y][x].to_char()
                };
                out.push(ch);
            }
            out.push('\n');
        }
        out
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn pac_start(&self) -> Pos {
        self.pac_start
    }

    pub fn ghost_starts(&self) -> [Pos; 4] {
        self.ghost_starts
    }

    pub fn cell(&self, pos: Pos) -> Cell {
        self.grid[pos.y as usize][pos.x as usize]
    }

    pub fn is_wall(&self, pos: Pos) -> bool {
        self.cell(pos) == Cell::Wall
    }

    /// Remaining pills plus powerpills.
    pub fn food_count(&self) -> u64 {
        self.grid
            .iter()
            .flatten()
            .filter(|c| matches!(c, Cell::Pill | Cell::Power))
            .count() as u64
    }
}

/// The maze shipped with the crate (also used by the CLI's `default` board).
pub const DEFAULT_MAZE_TEXT: &str = include_str!("default_maze.txt");

pub fn default_maze() -> MazeSpec {
    MazeSpec::parse(DEFAULT_MAZE_TEXT).expect("bundled maze is valid")
}
