//! Referee for the indicated coloring game and its modified variant.
//!
//! Colors are numbered `1..=k`; color `c` must stay independent in matroid
//! `c - 1` of the [`Palette`]. A turn is one of
//!
//! * kind 1: Alice indicates an uncolored element, Bob colors it;
//! * kind 2: Bob indicates, Alice colors (modified game only, and only when
//!   Bob asks for it at the start of the turn).
//!
//! The classic game only has kind-1 turns. The game ends when everything is
//! colored (Alice wins) or when the indicated element has no legal color
//! (Bob wins).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::set::ElementSet;
use crate::union::{partition_ground_set, Palette, UnionError, UnionOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Alice,
    Bob,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Alice => "alice",
            Role::Bob => "bob",
        }
    }
}

impl std::fmt::Display for Role {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Classic,
    Modified,
}

/// Bob's choice at the start of a modified-game turn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    /// Kind 1: Alice indicates, Bob colors.
    AliceIndicates,
    /// Kind 2: Bob indicates, Alice colors.
    BobIndicates,
}

impl MoveKind {
    pub fn number(self) -> u8 {
        match self {
            MoveKind::AliceIndicates => 1,
            MoveKind::BobIndicates => 2,
        }
    }

    pub fn from_number(n: u64) -> Option<Self> {
        match n {
            1 => Some(MoveKind::AliceIndicates),
            2 => Some(MoveKind::BobIndicates),
            _ => None,
        }
    }

    pub fn indicator(self) -> Role {
        match self {
            MoveKind::AliceIndicates => Role::Alice,
            MoveKind::BobIndicates => Role::Bob,
        }
    }
}

/// What the referee is waiting for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Phase {
    /// Modified game: Bob picks the kind of the next turn.
    ChooseKind,
    Indicate {
        indicator: Role,
    },
    Color {
        element: usize,
        indicator: Role,
        colorist: Role,
    },
    /// `dead` is the indicated element that could not be colored.
    Finished {
        winner: Role,
        dead: Option<usize>,
    },
}

/// One completed turn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Round {
    pub round: usize,
    pub indicator: Role,
    pub element: usize,
    pub colorist: Role,
    pub color: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("uncolorable element {0}: it is a loop in every matroid")]
    UncolorableElement(usize),
    #[error("element {0} is not in the ground set")]
    NotInGround(usize),
    #[error("element {0} is already colored")]
    AlreadyColored(usize),
    #[error("color {color} is illegal for element {element}; legal colors: {legal:?}")]
    IllegalColor {
        element: usize,
        color: usize,
        legal: Vec<usize>,
    },
    #[error("element {got} was not the indicated element {indicated}")]
    NotIndicated { indicated: usize, got: usize },
    #[error("out of turn: waiting for {expected}")]
    OutOfTurn { expected: &'static str },
    #[error("the game is over")]
    Finished,
    #[error("round {found} out of sequence, expected {expected}")]
    RoundOutOfSequence { expected: usize, found: usize },
    #[error("round {round}: {detail}")]
    InconsistentRound { round: usize, detail: String },
    #[error(transparent)]
    Union(#[from] UnionError),
}

#[derive(Clone, Debug)]
pub struct GameState {
    palette: Palette,
    mode: Mode,
    /// Color of each element id, `None` while uncolored.
    coloring: Vec<Option<usize>>,
    /// `classes[i]` holds the elements of color `i + 1`.
    classes: Vec<ElementSet>,
    uncolored: ElementSet,
    phase: Phase,
    rounds: Vec<Round>,
    feasibility: UnionOutcome,
}

impl GameState {
    /// Sets up an empty coloring. Fails if some element is a loop in every
    /// matroid, since such an element can never be colored.
    pub fn new(palette: Palette, mode: Mode) -> Result<Self, GameError> {
        for e in palette.ground() {
            let single = ElementSet::singleton(e);
            if palette.iter().all(|m| m.rank_unchecked(single) == 0) {
                return Err(GameError::UncolorableElement(e));
            }
        }
        let feasibility = partition_ground_set(&palette);
        let uncolored = palette.ground();
        let phase = if uncolored.is_empty() {
            Phase::Finished {
                winner: Role::Alice,
                dead: None,
            }
        } else {
            Self::turn_start(mode)
        };
        Ok(GameState {
            coloring: vec![None; palette.universe()],
            classes: vec![ElementSet::empty(); palette.k()],
            uncolored,
            phase,
            rounds: Vec::new(),
            feasibility,
            palette,
            mode,
        })
    }

    fn turn_start(mode: Mode) -> Phase {
        match mode {
            Mode::Classic => Phase::Indicate {
                indicator: Role::Alice,
            },
            Mode::Modified => Phase::ChooseKind,
        }
    }

    pub fn palette(&self) -> &Palette {
        &self.palette
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn colors(&self) -> usize {
        self.palette.k()
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn rounds(&self) -> &[Round] {
        &self.rounds
    }

    pub fn uncolored(&self) -> ElementSet {
        self.uncolored
    }

    pub fn colored(&self) -> ElementSet {
        self.palette.ground() - self.uncolored
    }

    /// Color of `e`, if any.
    pub fn color_of(&self, e: usize) -> Option<usize> {
        self.coloring.get(e).copied().flatten()
    }

    /// Elements of each color; index `i` is color `i + 1`.
    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    /// The cover-or-violator computed for the initial position.
    pub fn feasibility(&self) -> &UnionOutcome {
        &self.feasibility
    }

    pub fn is_feasible(&self) -> bool {
        self.feasibility.is_cover()
    }

    pub fn winner(&self) -> Option<Role> {
        match self.phase {
            Phase::Finished { winner, .. } => Some(winner),
            _ => None,
        }
    }

    pub fn is_finished(&self) -> bool {
        self.winner().is_some()
    }

    /// The game that remains: `M_i / class_i`, restricted to the uncolored
    /// elements.
    pub fn current_minors(&self) -> Result<Palette, UnionError> {
        self.palette.minors(&self.classes, self.uncolored)
    }

    fn check_uncolored(&self, e: usize) -> Result<(), GameError> {
        if !self.palette.ground().contains(e) {
            return Err(GameError::NotInGround(e));
        }
        if !self.uncolored.contains(e) {
            return Err(GameError::AlreadyColored(e));
        }
        Ok(())
    }

    /// Colors `c` such that class `c` plus `e` stays independent.
    pub fn legal_colors(&self, e: usize) -> Result<Vec<usize>, GameError> {
        self.check_uncolored(e)?;
        Ok(self.legal_unchecked(e))
    }

    fn legal_unchecked(&self, e: usize) -> Vec<usize> {
        self.palette
            .iter()
            .zip(&self.classes)
            .enumerate()
            .filter(|(_, (m, class))| m.independent_unchecked(class.with(e)))
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Bob's choice of turn kind. Modified game only.
    pub fn choose_kind(&mut self, kind: MoveKind) -> Result<(), GameError> {
        match self.phase {
            Phase::ChooseKind => {
                self.phase = Phase::Indicate {
                    indicator: kind.indicator(),
                };
                Ok(())
            }
            other => Err(self.out_of_turn(other)),
        }
    }

    /// The current indicator points at `e`. If `e` has no legal color the
    /// game ends immediately with Bob as the winner.
    pub fn indicate(&mut self, e: usize) -> Result<(), GameError> {
        let Phase::Indicate { indicator } = self.phase else {
            return Err(self.out_of_turn(self.phase));
        };
        self.check_uncolored(e)?;
        self.phase = if self.legal_unchecked(e).is_empty() {
            Phase::Finished {
                winner: Role::Bob,
                dead: Some(e),
            }
        } else {
            Phase::Color {
                element: e,
                indicator,
                colorist: other(indicator),
            }
        };
        Ok(())
    }

    /// Colors the indicated element. On error the state is unchanged.
    pub fn apply(&mut self, e: usize, color: usize) -> Result<&Round, GameError> {
        let Phase::Color {
            element,
            indicator,
            colorist,
        } = self.phase
        else {
            return Err(self.out_of_turn(self.phase));
        };
        if e != element {
            return Err(GameError::NotIndicated {
                indicated: element,
                got: e,
            });
        }
        let legal = self.legal_unchecked(e);
        if !legal.contains(&color) {
            return Err(GameError::IllegalColor {
                element: e,
                color,
                legal,
            });
        }
        self.coloring[e] = Some(color);
        self.classes[color - 1].insert(e);
        self.uncolored.remove(e);
        self.rounds.push(Round {
            round: self.rounds.len() + 1,
            indicator,
            element: e,
            colorist,
            color,
        });
        self.phase = if self.uncolored.is_empty() {
            Phase::Finished {
                winner: Role::Alice,
                dead: None,
            }
        } else {
            Self::turn_start(self.mode)
        };
        Ok(self.rounds.last().expect("just pushed"))
    }

    /// Replays a recorded round: kind choice (modified game), indication
    /// and coloring, checking that the recorded roles fit the mode.
    pub fn apply_round(&mut self, round: &Round) -> Result<(), GameError> {
        let expected = self.rounds.len() + 1;
        if round.round != expected {
            return Err(GameError::RoundOutOfSequence {
                expected,
                found: round.round,
            });
        }
        let inconsistent = |detail: &str| GameError::InconsistentRound {
            round: round.round,
            detail: detail.to_owned(),
        };
        if round.colorist != other(round.indicator) {
            return Err(inconsistent(
                "indicator and colorist must be different players",
            ));
        }
        match self.mode {
            Mode::Classic if round.indicator != Role::Alice => {
                return Err(inconsistent("only Alice indicates in the classic game"));
            }
            Mode::Classic => {}
            Mode::Modified => {
                let kind = match round.indicator {
                    Role::Alice => MoveKind::AliceIndicates,
                    Role::Bob => MoveKind::BobIndicates,
                };
                self.choose_kind(kind)?;
            }
        }
        self.indicate(round.element)?;
        if self.is_finished() {
            return Err(inconsistent("indicated element has no legal color"));
        }
        self.apply(round.element, round.color)?;
        Ok(())
    }

    fn out_of_turn(&self, phase: Phase) -> GameError {
        let expected = match phase {
            Phase::ChooseKind => "Bob's choice of move kind",
            Phase::Indicate {
                indicator: Role::Alice,
            } => "Alice's indication",
            Phase::Indicate {
                indicator: Role::Bob,
            } => "Bob's indication",
            Phase::Color {
                colorist: Role::Alice,
                ..
            } => "Alice's color",
            Phase::Color {
                colorist: Role::Bob,
                ..
            } => "Bob's color",
            Phase::Finished { .. } => return GameError::Finished,
        };
        GameError::OutOfTurn { expected }
    }

    /// Checks the referee's invariants: classes are independent, disjoint,
    /// agree with the coloring map, and the uncolored set is their
    /// complement.
    pub fn check_invariants(&self) -> Result<(), String> {
        let mut seen = ElementSet::empty();
        for (i, (&class, m)) in self.classes.iter().zip(self.palette.iter()).enumerate() {
            if !class.is_disjoint(seen) {
                return Err(format!("class {} overlaps another class", i + 1));
            }
            if !m.independent_unchecked(class) {
                return Err(format!("class {} = {class} is dependent", i + 1));
            }
            if class.iter().any(|e| self.coloring[e] != Some(i + 1)) {
                return Err(format!("class {} disagrees with the coloring map", i + 1));
            }
            seen = seen | class;
        }
        let mapped: ElementSet = (0..self.coloring.len())
            .filter(|&e| self.coloring[e].is_some())
            .collect();
        if mapped != seen {
            return Err("coloring map has entries outside the classes".into());
        }
        if !seen.is_subset(self.palette.ground()) || seen | self.uncolored != self.palette.ground()
        {
            return Err("uncolored set is not the complement of the classes".into());
        }
        if !seen.is_disjoint(self.uncolored) {
            return Err("an element is both colored and uncolored".into());
        }
        if self.rounds.len() != seen.len() {
            return Err("round count differs from colored count".into());
        }
        Ok(())
    }
}

pub fn other(role: Role) -> Role {
    match role {
        Role::Alice => Role::Bob,
        Role::Bob => Role::Alice,
    }
}
