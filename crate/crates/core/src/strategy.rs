//! Players.
//!
//! [`AliceEngine`] is Alice's winning strategy. As indicator it keeps a
//! stack of nested regions: whenever the uncolored part of the current
//! region contains a proper tight set `A` (with respect to the current
//! minors), Alice commits to finishing `A` before anything else, and inside
//! a region without tight subsets she indicates its smallest element. As
//! colorist (modified game) she keeps a witness cover of the uncolored
//! elements and colors by it.
//!
//! The Bob strategies are adversaries for testing and demos.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::game::{GameError, GameState, Mode, MoveKind, Phase, Role, Round};
use crate::oracle::{self, OracleError};
use crate::set::ElementSet;
use crate::union::{
    find_proper_tight_set, partition_ground_set, Cover, UnionError, UnionOutcome, Violator,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("no proper coloring of the remaining elements exists (violator {})", .0.set)]
    Infeasible(Violator),
    #[error("no uncolored element left")]
    NothingToIndicate,
    #[error("witness cover does not hold element {0} with a legal color")]
    StaleWitness(usize),
    #[error("witness cover lost after Bob's move (violator {}); strategy invariant broken", .0.set)]
    WitnessLost(Violator),
    #[error("element {0} has no legal color")]
    NoLegalColor(usize),
    #[error("witness is only kept in the modified game")]
    NoWitness,
    #[error(transparent)]
    Union(#[from] UnionError),
    #[error(transparent)]
    Game(#[from] GameError),
}

/// Alice's side of the game loop.
pub trait AliceStrategy: Send {
    fn indicate(&mut self, state: &GameState) -> Result<usize, StrategyError>;

    /// Called only in the modified game, when Bob indicated `element`.
    fn color(&mut self, state: &GameState, element: usize) -> Result<usize, StrategyError>;

    /// Called after every completed round; `state` already includes it.
    fn observe(&mut self, state: &GameState, round: &Round) -> Result<(), StrategyError>;

    fn box_clone(&self) -> Box<dyn AliceStrategy>;

    /// Exact summary of the internal state, for memoizing exhaustive
    /// searches. `None` disables memoization.
    fn memo_key(&self) -> Option<Vec<u128>> {
        None
    }
}

/// Bob's side of the game loop.
pub trait BobStrategy: Send {
    fn choose_kind(&mut self, state: &GameState) -> MoveKind;

    fn indicate(&mut self, state: &GameState) -> usize;

    /// `None` signals that no legal color exists, which the referee reports
    /// as a Bob win before asking.
    fn color(&mut self, state: &GameState, element: usize) -> Option<usize>;

    fn observe(&mut self, _state: &GameState, _round: &Round) {}
}

/// Alice's strategy built from tight sets and witness covers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AliceEngine {
    /// Nested regions, outermost first. The whole uncolored set is the
    /// implicit outermost region.
    regions: Vec<ElementSet>,
    witness: Option<Cover>,
}

impl AliceEngine {
    /// Starts tracking `state`. In the modified game the initial witness is
    /// the game's cover, if one exists.
    pub fn new(state: &GameState) -> Self {
        let mut engine = AliceEngine::default();
        if state.mode() == Mode::Modified {
            engine.witness = match state.current_minors().map(|p| partition_ground_set(&p)) {
                Ok(UnionOutcome::Cover(c)) => Some(c),
                _ => None,
            };
        }
        engine
    }

    pub fn regions(&self) -> &[ElementSet] {
        &self.regions
    }

    pub fn witness(&self) -> Option<&Cover> {
        self.witness.as_ref()
    }

    fn prune(&mut self, uncolored: ElementSet) {
        for r in &mut self.regions {
            *r = *r & uncolored;
        }
        self.regions.retain(|r| !r.is_empty());
        self.regions.dedup();
    }

    /// Element Alice indicates next.
    ///
    /// Descends into proper tight sets of the current region until none is
    /// left, then picks the region's smallest element. Errors with
    /// [`StrategyError::Infeasible`] when the position admits no cover, in
    /// which case no winning move exists.
    pub fn next_indication(&mut self, state: &GameState) -> Result<usize, StrategyError> {
        let uncolored = state.uncolored();
        if uncolored.is_empty() {
            return Err(StrategyError::NothingToIndicate);
        }
        self.prune(uncolored);
        let minors = state.current_minors()?;
        loop {
            let region = self.regions.last().copied().unwrap_or(uncolored);
            let game = minors.restrict(region)?;
            let cover = match partition_ground_set(&game) {
                UnionOutcome::Cover(c) => c,
                UnionOutcome::Violator(v) => return Err(StrategyError::Infeasible(v)),
            };
            match find_proper_tight_set(&game, &cover)? {
                Some(tight) => self.regions.push(tight.set()),
                None => return Ok(region.min().expect("regions are nonempty")),
            }
        }
    }

    /// Updates the engine after a round the referee accepted.
    pub fn observe(&mut self, state: &GameState, round: &Round) -> Result<(), StrategyError> {
        self.prune(state.uncolored());
        if state.mode() == Mode::Modified {
            if round.indicator == Role::Bob {
                // Bob played outside the indicated-game strategy; its
                // commitments no longer apply.
                self.regions.clear();
            }
            if round.colorist == Role::Bob {
                self.refresh_witness(state)?;
            } else if let Some(w) = &self.witness {
                if w.covered().contains(round.element) {
                    return Err(StrategyError::StaleWitness(round.element));
                }
            }
        }
        Ok(())
    }

    /// Color for `element` taken from the witness; the witness drops it.
    pub fn choose_color(
        &mut self,
        state: &GameState,
        element: usize,
    ) -> Result<usize, StrategyError> {
        let witness = self.witness.as_mut().ok_or(StrategyError::NoWitness)?;
        let part = witness
            .part_of(element)
            .ok_or(StrategyError::StaleWitness(element))?;
        let color = part + 1;
        if !state.legal_colors(element)?.contains(&color) {
            return Err(StrategyError::StaleWitness(element));
        }
        witness.parts_mut()[part].remove(element);
        Ok(color)
    }

    /// Recomputes the witness as a cover of the current minors.
    pub fn refresh_witness(&mut self, state: &GameState) -> Result<(), StrategyError> {
        match partition_ground_set(&state.current_minors()?) {
            UnionOutcome::Cover(c) => {
                self.witness = Some(c);
                Ok(())
            }
            UnionOutcome::Violator(v) => {
                self.witness = None;
                Err(StrategyError::WitnessLost(v))
            }
        }
    }
}

impl AliceStrategy for AliceEngine {
    /// Falls back to the smallest uncolored element when the position is
    /// lost anyway, so that hopeless games still play out.
    fn indicate(&mut self, state: &GameState) -> Result<usize, StrategyError> {
        match self.next_indication(state) {
            Err(StrategyError::Infeasible(_)) => state
                .uncolored()
                .min()
                .ok_or(StrategyError::NothingToIndicate),
            other => other,
        }
    }

    fn color(&mut self, state: &GameState, element: usize) -> Result<usize, StrategyError> {
        if self.witness.is_none() {
            // Only reachable when the game was infeasible from the start.
            return first_legal(state, element);
        }
        self.choose_color(state, element)
    }

    fn observe(&mut self, state: &GameState, round: &Round) -> Result<(), StrategyError> {
        let had_witness = self.witness.is_some();
        match AliceEngine::observe(self, state, round) {
            Err(StrategyError::WitnessLost(_)) if !had_witness => Ok(()),
            other => other,
        }
    }

    fn box_clone(&self) -> Box<dyn AliceStrategy> {
        Box::new(self.clone())
    }

    fn memo_key(&self) -> Option<Vec<u128>> {
        let mut key: Vec<u128> = self.regions.iter().map(|r| r.bits()).collect();
        key.push(u128::MAX);
        if let Some(w) = &self.witness {
            key.extend(w.parts().iter().map(|p| p.bits()));
        }
        Some(key)
    }
}

fn first_legal(state: &GameState, element: usize) -> Result<usize, StrategyError> {
    state
        .legal_colors(element)?
        .first()
        .copied()
        .ok_or(StrategyError::NoLegalColor(element))
}

/// Indicates the smallest uncolored element; colors with the smallest legal
/// color. Loses on some instances where [`AliceEngine`] wins.
#[derive(Clone, Copy, Debug, Default)]
pub struct NaiveAlice;

impl AliceStrategy for NaiveAlice {
    fn indicate(&mut self, state: &GameState) -> Result<usize, StrategyError> {
        state
            .uncolored()
            .min()
            .ok_or(StrategyError::NothingToIndicate)
    }

    fn color(&mut self, state: &GameState, element: usize) -> Result<usize, StrategyError> {
        first_legal(state, element)
    }

    fn observe(&mut self, _: &GameState, _: &Round) -> Result<(), StrategyError> {
        Ok(())
    }

    fn box_clone(&self) -> Box<dyn AliceStrategy> {
        Box::new(*self)
    }

    fn memo_key(&self) -> Option<Vec<u128>> {
        Some(Vec::new())
    }
}

/// Smallest legal color, smallest uncolored element, and alternating move
/// kinds starting with kind 1.
#[derive(Clone, Copy, Debug, Default)]
pub struct FirstFitBob;

impl BobStrategy for FirstFitBob {
    fn choose_kind(&mut self, state: &GameState) -> MoveKind {
        if state.rounds().len().is_multiple_of(2) {
            MoveKind::AliceIndicates
        } else {
            MoveKind::BobIndicates
        }
    }

    fn indicate(&mut self, state: &GameState) -> usize {
        state.uncolored().min().expect("game not finished")
    }

    fn color(&mut self, state: &GameState, element: usize) -> Option<usize> {
        state.legal_colors(element).ok()?.first().copied()
    }
}

/// Uniform choices from a seeded ChaCha generator.
#[derive(Clone, Debug)]
pub struct RandomBob {
    rng: ChaCha8Rng,
}

impl RandomBob {
    pub fn new(seed: u64) -> Self {
        RandomBob {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl BobStrategy for RandomBob {
    fn choose_kind(&mut self, _: &GameState) -> MoveKind {
        if self.rng.gen_bool(0.5) {
            MoveKind::AliceIndicates
        } else {
            MoveKind::BobIndicates
        }
    }

    fn indicate(&mut self, state: &GameState) -> usize {
        *state
            .uncolored()
            .to_vec()
            .choose(&mut self.rng)
            .expect("game not finished")
    }

    fn color(&mut self, state: &GameState, element: usize) -> Option<usize> {
        state
            .legal_colors(element)
            .ok()?
            .choose(&mut self.rng)
            .copied()
    }
}

/// Exhaustive adversary.
///
/// With a model of Alice's strategy it plays a best response: the first
/// choice (ascending) from which Bob can force a win against that exact
/// strategy. Without a model it assumes optimal Alice play. When no choice
/// wins it falls back to first-fit. Every decision runs an exhaustive
/// search, so this is for desk-scale games only; beyond the oracle's size
/// guard it plays first-fit.
pub struct AdversarialBob {
    model: Option<Box<dyn AliceStrategy>>,
}

impl AdversarialBob {
    /// Best-responds to `alice`, which must be a fresh copy of the strategy
    /// Bob will face.
    pub fn against(alice: &dyn AliceStrategy) -> Self {
        AdversarialBob {
            model: Some(alice.box_clone()),
        }
    }

    /// Assumes Alice plays optimally.
    pub fn optimal() -> Self {
        AdversarialBob { model: None }
    }

    fn bob_wins(&self, position: &GameState, model: Option<&dyn AliceStrategy>) -> bool {
        let verdict = match model {
            Some(alice) => oracle::refute(position, alice).map(|line| line.is_some()),
            None => oracle::position_winner(position).map(|w| w == Role::Bob),
        };
        match verdict {
            Ok(v) => v,
            Err(OracleError::TooLarge { .. }) => false,
            Err(e) => panic!("adversarial search failed: {e}"),
        }
    }

    /// Advances `state` by one Bob choice and returns the Alice model as it
    /// would be after that choice.
    fn after(
        &self,
        state: &GameState,
        step: impl FnOnce(&mut GameState) -> Result<(), GameError>,
    ) -> Option<(GameState, Option<Box<dyn AliceStrategy>>)> {
        let mut next = state.clone();
        step(&mut next).ok()?;
        let mut model = self.model.as_ref().map(|m| m.box_clone());
        if let (Some(m), Some(round)) = (model.as_mut(), next.rounds().last()) {
            if next.rounds().len() > state.rounds().len() {
                m.observe(&next, round).ok()?;
            }
        }
        Some((next, model))
    }
}

impl BobStrategy for AdversarialBob {
    fn choose_kind(&mut self, state: &GameState) -> MoveKind {
        for kind in [MoveKind::AliceIndicates, MoveKind::BobIndicates] {
            if let Some((next, model)) = self.after(state, |s| s.choose_kind(kind)) {
                if self.bob_wins(&next, model.as_deref()) {
                    return kind;
                }
            }
        }
        FirstFitBob.choose_kind(state)
    }

    fn indicate(&mut self, state: &GameState) -> usize {
        for e in state.uncolored() {
            if let Some((next, model)) = self.after(state, |s| s.indicate(e)) {
                if self.bob_wins(&next, model.as_deref()) {
                    return e;
                }
            }
        }
        FirstFitBob.indicate(state)
    }

    fn color(&mut self, state: &GameState, element: usize) -> Option<usize> {
        let legal = state.legal_colors(element).ok()?;
        for &c in &legal {
            let step = |s: &mut GameState| s.apply(element, c).map(|_| ());
            if let Some((next, model)) = self.after(state, step) {
                if self.bob_wins(&next, model.as_deref()) {
                    return Some(c);
                }
            }
        }
        legal.first().copied()
    }

    fn observe(&mut self, state: &GameState, round: &Round) {
        if let Some(m) = self.model.as_mut() {
            // The model mirrors the real opponent; an error there would
            // surface from the real Alice first.
            let _ = m.observe(state, round);
        }
    }
}

/// Whether `state` is waiting on Alice.
pub fn alice_to_move(state: &GameState) -> bool {
    matches!(
        state.phase(),
        Phase::Indicate {
            indicator: Role::Alice
        } | Phase::Color {
            colorist: Role::Alice,
            ..
        }
    )
}
