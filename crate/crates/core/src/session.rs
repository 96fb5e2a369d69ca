//! Games where a human plays Bob against [`AliceEngine`], driven one
//! request at a time. This is the state machine behind the HTTP server.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, RwLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::format::parse_matroid;
use crate::game::{GameError, GameState, Mode, MoveKind, Phase, Role, Round};
use crate::strategy::{AliceEngine, AliceStrategy};
use crate::union::Palette;

/// Body of a game-creation request.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NewGame {
    /// Matroid file text.
    pub matroid: String,
    pub colors: usize,
    pub mode: Mode,
    #[serde(default = "default_human")]
    pub human_role: Role,
}

fn default_human() -> Role {
    Role::Bob
}

/// Body of a move request: exactly one field is set.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoveBody {
    pub color: Option<usize>,
    pub element: Option<usize>,
    pub kind: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    Color(usize),
    Indicate(usize),
    Kind(u64),
}

impl TryFrom<MoveBody> for Move {
    type Error = SessionError;

    fn try_from(body: MoveBody) -> Result<Self, SessionError> {
        match (body.color, body.element, body.kind) {
            (Some(c), None, None) => Ok(Move::Color(c)),
            (None, Some(e), None) => Ok(Move::Indicate(e)),
            (None, None, Some(k)) => Ok(Move::Kind(k)),
            _ => Err(SessionError::bad(
                "a move sets exactly one of color, element, kind",
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Awaiting {
    HumanColor,
    HumanIndication,
    HumanKind,
    Finished,
}

/// What a client needs to render the game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct View {
    pub uncolored: Vec<usize>,
    pub coloring: BTreeMap<usize, usize>,
    pub indicated: Option<usize>,
    pub legal_colors: Vec<usize>,
    pub awaiting: Awaiting,
    pub winner: Option<Role>,
    pub rounds: Vec<Round>,
}

/// Legal alternatives attached to a rejected move.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Legal {
    LegalColors(Vec<usize>),
    LegalElements(Vec<usize>),
    LegalKinds(Vec<u8>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SessionError {
    /// Malformed or illegal request (HTTP 400).
    #[error("{message}")]
    BadRequest {
        message: String,
        legal: Option<Legal>,
    },
    /// Move of the wrong type for the current turn (HTTP 409).
    #[error("out of turn: awaiting {awaiting:?}")]
    OutOfTurn { awaiting: Awaiting },
    /// Unknown game id (HTTP 404).
    #[error("no game with id {0}")]
    NotFound(u64),
    /// The engine broke an invariant (HTTP 500).
    #[error("engine failure: {0}")]
    Internal(String),
}

impl SessionError {
    fn bad(message: impl Into<String>) -> Self {
        SessionError::BadRequest {
            message: message.into(),
            legal: None,
        }
    }

    fn bad_with(message: impl ToString, legal: Legal) -> Self {
        SessionError::BadRequest {
            message: message.to_string(),
            legal: Some(legal),
        }
    }
}

pub struct Session {
    state: GameState,
    alice: AliceEngine,
}

impl Session {
    pub fn create(request: &NewGame) -> Result<Self, SessionError> {
        if request.human_role != Role::Bob {
            return Err(SessionError::bad("only human_role \"bob\" is supported"));
        }
        if request.colors == 0 {
            return Err(SessionError::bad("colors must be at least 1"));
        }
        let matroid =
            parse_matroid(&request.matroid).map_err(|e| SessionError::bad(e.to_string()))?;
        let palette = Palette::copies(&matroid, request.colors);
        let state =
            GameState::new(palette, request.mode).map_err(|e| SessionError::bad(e.to_string()))?;
        let alice = AliceEngine::new(&state);
        let mut session = Session { state, alice };
        session.advance()?;
        Ok(session)
    }

    pub fn state(&self) -> &GameState {
        &self.state
    }

    pub fn awaiting(&self) -> Awaiting {
        match self.state.phase() {
            Phase::Finished { .. } => Awaiting::Finished,
            Phase::ChooseKind => Awaiting::HumanKind,
            Phase::Indicate { .. } => Awaiting::HumanIndication,
            Phase::Color { .. } => Awaiting::HumanColor,
        }
    }

    /// Lets Alice move until it is the human's turn or the game is over.
    fn advance(&mut self) -> Result<(), SessionError> {
        let internal = |e: &dyn std::fmt::Display| SessionError::Internal(e.to_string());
        loop {
            match self.state.phase() {
                Phase::Indicate {
                    indicator: Role::Alice,
                } => {
                    let e = self.alice.indicate(&self.state).map_err(|e| internal(&e))?;
                    self.state.indicate(e).map_err(|e| internal(&e))?;
                }
                Phase::Color {
                    element,
                    colorist: Role::Alice,
                    ..
                } => {
                    let c = self
                        .alice
                        .color(&self.state, element)
                        .map_err(|e| internal(&e))?;
                    let round = *self.state.apply(element, c).map_err(|e| internal(&e))?;
                    AliceStrategy::observe(&mut self.alice, &self.state, &round)
                        .map_err(|e| internal(&e))?;
                }
                _ => return Ok(()),
            }
        }
    }

    /// Applies a human move. Rejected moves leave the game unchanged.
    pub fn submit(&mut self, mv: Move) -> Result<(), SessionError> {
        let awaiting = self.awaiting();
        match (awaiting, mv) {
            (Awaiting::HumanColor, Move::Color(color)) => {
                let Phase::Color { element, .. } = self.state.phase() else {
                    unreachable!()
                };
                let round = match self.state.apply(element, color) {
                    Ok(round) => *round,
                    Err(GameError::IllegalColor { legal, .. }) => {
                        return Err(SessionError::bad_with(
                            format!("color {color} is illegal for element {element}"),
                            Legal::LegalColors(legal),
                        ))
                    }
                    Err(e) => return Err(SessionError::Internal(e.to_string())),
                };
                AliceStrategy::observe(&mut self.alice, &self.state, &round)
                    .map_err(|e| SessionError::Internal(e.to_string()))?;
            }
            (Awaiting::HumanIndication, Move::Indicate(element)) => {
                if let Err(e) = self.state.indicate(element) {
                    return Err(SessionError::bad_with(
                        e,
                        Legal::LegalElements(self.state.uncolored().to_vec()),
                    ));
                }
            }
            (Awaiting::HumanKind, Move::Kind(n)) => {
                let kind = MoveKind::from_number(n).ok_or_else(|| {
                    SessionError::bad_with(
                        format!("unknown move kind {n}"),
                        Legal::LegalKinds(vec![1, 2]),
                    )
                })?;
                self.state
                    .choose_kind(kind)
                    .map_err(|e| SessionError::Internal(e.to_string()))?;
            }
            _ => return Err(SessionError::OutOfTurn { awaiting }),
        }
        debug_assert_eq!(self.state.check_invariants(), Ok(()));
        self.advance()
    }

    pub fn view(&self) -> View {
        let state = &self.state;
        let awaiting = self.awaiting();
        let indicated = match state.phase() {
            Phase::Color { element, .. } => Some(element),
            Phase::Finished { dead, .. } => dead,
            _ => None,
        };
        let legal_colors = match (awaiting, indicated) {
            (Awaiting::HumanColor, Some(e)) => state.legal_colors(e).unwrap_or_default(),
            _ => Vec::new(),
        };
        View {
            uncolored: state.uncolored().to_vec(),
            coloring: state
                .colored()
                .iter()
                .filter_map(|e| Some((e, state.color_of(e)?)))
                .collect(),
            indicated,
            legal_colors,
            awaiting,
            winner: state.winner(),
            rounds: state.rounds().to_vec(),
        }
    }
}

/// In-memory table of running sessions. Each game has its own lock, so
/// moves on different games proceed independently.
#[derive(Default)]
pub struct SessionStore {
    next_id: AtomicU64,
    games: RwLock<HashMap<u64, Arc<Mutex<Session>>>>,
}

impl SessionStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn create(&self, request: &NewGame) -> Result<u64, SessionError> {
        let session = Session::create(request)?;
        let id = self.next_id.fetch_add(1, Ordering::Relaxed) + 1;
        self.games
            .write()
            .expect("session table poisoned")
            .insert(id, Arc::new(Mutex::new(session)));
        Ok(id)
    }

    fn get(&self, id: u64) -> Result<Arc<Mutex<Session>>, SessionError> {
        self.games
            .read()
            .expect("session table poisoned")
            .get(&id)
            .cloned()
            .ok_or(SessionError::NotFound(id))
    }

    pub fn view(&self, id: u64) -> Result<View, SessionError> {
        Ok(self.get(id)?.lock().expect("session poisoned").view())
    }

    pub fn submit(&self, id: u64, mv: Move) -> Result<View, SessionError> {
        let game = self.get(id)?;
        let mut session = game.lock().expect("session poisoned");
        session.submit(mv)?;
        Ok(session.view())
    }
}
