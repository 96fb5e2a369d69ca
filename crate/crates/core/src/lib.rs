//! Matroid coloring games.
//!
//! Alice indicates uncolored elements of a matroid and Bob colors them so
//! that every color class stays independent; Alice wins if everything gets
//! colored. This crate provides exact rank oracles ([`matroid`]), a
//! constructive matroid union ([`union`]), a referee and Alice's winning
//! strategy for the classic and modified games ([`game`], [`strategy`]),
//! exhaustive solvers used as independent oracles ([`oracle`]), and the
//! text and JSON formats used by the command-line front end ([`format`],
//! [`transcript`], [`session`]).

pub mod corpus;
pub mod format;
pub mod game;
pub mod matroid;
pub mod oracle;
pub mod play;
pub mod session;
pub mod set;
pub mod strategy;
pub mod transcript;
pub mod union;

pub use matroid::{Block, Family, Matroid, MatroidError};
pub use set::ElementSet;
pub use union::{Cover, Palette, UnionOutcome, Violator};
