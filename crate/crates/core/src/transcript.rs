//! JSON game records.
//!
//! ```json
//! {"colors": 2, "mode": "classic",
//!  "rounds": [{"round": 1, "indicator": "alice", "element": 0, "colorist": "bob", "color": 1}],
//!  "winner": "alice"}
//! ```
//!
//! A Bob win ends with an indication that could not be colored; that final
//! indication is not a round, so the recorded rounds stop just before it.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{GameError, GameState, Mode, Role, Round};
use crate::union::Palette;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Transcript {
    pub colors: usize,
    pub mode: Mode,
    pub rounds: Vec<Round>,
    pub winner: Role,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranscriptError {
    #[error("malformed transcript: {0}")]
    Json(String),
    #[error("transcript uses {found} colors but the game has {expected}")]
    ColorCount { expected: usize, found: usize },
    #[error("replay rejected: {0}")]
    Game(#[from] GameError),
    #[error("recorded winner {claimed} does not match the replay: {detail}")]
    WinnerMismatch { claimed: Role, detail: &'static str },
}

impl Transcript {
    /// Record of a finished game; `None` while the game is still running.
    pub fn from_state(state: &GameState) -> Option<Self> {
        Some(Transcript {
            colors: state.colors(),
            mode: state.mode(),
            rounds: state.rounds().to_vec(),
            winner: state.winner()?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("transcript serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, TranscriptError> {
        serde_json::from_str(text).map_err(|e| TranscriptError::Json(e.to_string()))
    }

    /// Plays the rounds through a fresh referee and checks the recorded
    /// winner. Returns the position after the last round.
    pub fn replay(&self, palette: &Palette) -> Result<GameState, TranscriptError> {
        if palette.k() != self.colors {
            return Err(TranscriptError::ColorCount {
                expected: palette.k(),
                found: self.colors,
            });
        }
        let mut state = GameState::new(palette.clone(), self.mode)?;
        for round in &self.rounds {
            state.apply_round(round)?;
        }
        let mismatch = |detail| TranscriptError::WinnerMismatch {
            claimed: self.winner,
            detail,
        };
        match self.winner {
            Role::Alice if state.winner() != Some(Role::Alice) => {
                Err(mismatch("elements remain uncolored"))
            }
            Role::Bob if state.is_finished() => Err(mismatch("every element is colored")),
            Role::Bob => {
                let dead = state
                    .uncolored()
                    .iter()
                    .any(|e| state.legal_colors(e).is_ok_and(|l| l.is_empty()));
                if dead {
                    Ok(state)
                } else {
                    Err(mismatch("every uncolored element still has a legal color"))
                }
            }
            Role::Alice => Ok(state),
        }
    }
}
