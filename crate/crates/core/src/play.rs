//! Running whole games between two strategies.

use thiserror::Error;

use crate::game::{GameError, GameState, Mode, Phase, Role};
use crate::strategy::{
    AdversarialBob, AliceEngine, AliceStrategy, BobStrategy, FirstFitBob, NaiveAlice, RandomBob,
    StrategyError,
};
use crate::transcript::{Transcript, TranscriptError};
use crate::union::Palette;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AliceKind {
    Engine,
    Naive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BobKind {
    Random,
    FirstFit,
    Adversarial,
}

#[derive(Clone, Debug)]
pub struct GameConfig {
    pub palette: Palette,
    pub mode: Mode,
    pub alice: AliceKind,
    pub bob: BobKind,
    /// Seeds [`BobKind::Random`]; ignored otherwise.
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlayError {
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("alice: {0}")]
    Strategy(#[from] StrategyError),
    #[error("bob has no legal color for {0} although the referee offered one")]
    BobStuck(usize),
    #[error("transcript failed to replay: {0}")]
    Replay(#[from] TranscriptError),
}

pub fn alice_for(kind: AliceKind, state: &GameState) -> Box<dyn AliceStrategy> {
    match kind {
        AliceKind::Engine => Box::new(AliceEngine::new(state)),
        AliceKind::Naive => Box::new(NaiveAlice),
    }
}

/// A Bob of the given kind. The adversary best-responds to `alice`.
pub fn bob_for(kind: BobKind, seed: u64, alice: &dyn AliceStrategy) -> Box<dyn BobStrategy> {
    match kind {
        BobKind::Random => Box::new(RandomBob::new(seed)),
        BobKind::FirstFit => Box::new(FirstFitBob),
        BobKind::Adversarial => Box::new(AdversarialBob::against(alice)),
    }
}

/// Drives `state` to the end of the game.
pub fn play_out(
    mut state: GameState,
    alice: &mut dyn AliceStrategy,
    bob: &mut dyn BobStrategy,
) -> Result<GameState, PlayError> {
    loop {
        match state.phase() {
            Phase::Finished { .. } => return Ok(state),
            Phase::ChooseKind => {
                let kind = bob.choose_kind(&state);
                state.choose_kind(kind)?;
            }
            Phase::Indicate {
                indicator: Role::Alice,
            } => {
                let e = alice.indicate(&state)?;
                state.indicate(e)?;
            }
            Phase::Indicate {
                indicator: Role::Bob,
            } => {
                let e = bob.indicate(&state);
                state.indicate(e)?;
            }
            Phase::Color {
                element, colorist, ..
            } => {
                let color = match colorist {
                    Role::Alice => alice.color(&state, element)?,
                    Role::Bob => bob
                        .color(&state, element)
                        .ok_or(PlayError::BobStuck(element))?,
                };
                let round = *state.apply(element, color)?;
                debug_assert_eq!(state.check_invariants(), Ok(()));
                alice.observe(&state, &round)?;
                bob.observe(&state, &round);
            }
        }
    }
}

/// Plays one game and returns its replay-checked transcript.
pub fn run_game(config: &GameConfig) -> Result<Transcript, PlayError> {
    let state = GameState::new(config.palette.clone(), config.mode)?;
    let mut alice = alice_for(config.alice, &state);
    let mut bob = bob_for(config.bob, config.seed, alice.as_ref());
    let end = play_out(state, alice.as_mut(), bob.as_mut())?;
    let transcript = Transcript::from_state(&end).expect("finished game");
    transcript.replay(&config.palette)?;
    Ok(transcript)
}
