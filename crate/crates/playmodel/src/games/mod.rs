//! Reference game models: noughts & crosses on the order-3 magic square
//! and a state-based grid Pac-Man, plus the ASCII maze format the latter
//! loads from.

pub mod maze;
pub mod pacman;
pub mod ttt;

pub use maze::{default_maze, manhattan, Cell, Grid, MazeSpec, Pos, GRID};
