//! Engine for online size Ramsey games where the red side avoids a short path.
//!
//! The crate covers the colored host graph and its vertex classes
//! ([`graph`]), potential tables ([`potential`]), the table-driven Painter
//! ([`strategy`]), Builder strategies ([`builder`]), the game loop with audited
//! transcripts ([`arena`]), an exact minimax solver for tiny instances
//! ([`solver`]), exact linear-programming synthesis of tables ([`lpsynth`]) and
//! exhaustive verification of per-move potential bounds ([`verify`]).

pub mod arena;
pub mod builder;
pub mod error;
pub mod graph;
pub mod lpsynth;
pub mod potential;
pub mod rational;
pub mod solver;
pub mod strategy;
pub mod verify;

pub use error::{BuilderError, GraphError, ParseError, PotentialError, StrategyError, TableError};
pub use graph::{BlueClass, Capital, Color, Edge, GameKind, GameState, RedClass, Shape, Vertex, VertexType};
pub use rational::{ExtRational, Q};
