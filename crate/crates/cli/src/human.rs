//! A human playing Bob on a terminal.

use std::io::{self, BufRead, Write};

use indicolor::game::{GameState, MoveKind, Phase, Role};
use indicolor::strategy::{AliceStrategy, StrategyError};
use indicolor::ElementSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HumanError {
    #[error("input ended before the game finished")]
    EndOfInput,
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("alice: {0}")]
    Alice(#[from] StrategyError),
    #[error(transparent)]
    Game(#[from] indicolor::game::GameError),
}

fn list(values: impl IntoIterator<Item = usize>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn show_uncolored<W: Write>(out: &mut W, uncolored: ElementSet) -> io::Result<()> {
    writeln!(out, "uncolored: {}", list(uncolored.iter()))
}

/// Prompts until a line parses to one of `allowed`.
fn ask<R: BufRead, W: Write>(
    input: &mut R,
    out: &mut W,
    prompt: &str,
    allowed: &[usize],
) -> Result<usize, HumanError> {
    loop {
        write!(out, "{prompt}> ")?;
        out.flush()?;
        let mut line = String::new();
        if input.read_line(&mut line)? == 0 {
            return Err(HumanError::EndOfInput);
        }
        match line.trim().parse::<usize>() {
            Ok(v) if allowed.contains(&v) => return Ok(v),
            _ => writeln!(
                out,
                "{:?} is not one of: {}",
                line.trim(),
                list(allowed.iter().copied())
            )?,
        }
    }
}

/// Plays `state` to the end with Bob's moves read from `input`. Prompts and
/// progress go to `out`.
pub fn play<R: BufRead, W: Write>(
    mut state: GameState,
    alice: &mut dyn AliceStrategy,
    input: &mut R,
    out: &mut W,
) -> Result<GameState, HumanError> {
    loop {
        match state.phase() {
            Phase::Finished { winner, dead } => {
                if let Some(e) = dead {
                    writeln!(out, "element {e} has no legal color")?;
                }
                writeln!(out, "winner: {winner}")?;
                return Ok(state);
            }
            Phase::ChooseKind => {
                show_uncolored(out, state.uncolored())?;
                writeln!(out, "move kind: 1 = alice indicates and you color, 2 = you indicate and alice colors")?;
                let n = ask(input, out, "kind", &[1, 2])?;
                let kind = MoveKind::from_number(n as u64).expect("1 or 2");
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
                show_uncolored(out, state.uncolored())?;
                let e = ask(input, out, "indicate", &state.uncolored().to_vec())?;
                state.indicate(e)?;
            }
            Phase::Color {
                element, colorist, ..
            } => {
                let color = match colorist {
                    Role::Alice => alice.color(&state, element)?,
                    Role::Bob => {
                        show_uncolored(out, state.uncolored())?;
                        writeln!(out, "indicated: {element}")?;
                        let legal = state.legal_colors(element)?;
                        writeln!(out, "legal colors: {}", list(legal.iter().copied()))?;
                        ask(input, out, "color", &legal)?
                    }
                };
                let round = *state.apply(element, color)?;
                writeln!(
                    out,
                    "round {}: {} colored {} with {}",
                    round.round, round.colorist, round.element, round.color
                )?;
                alice.observe(&state, &round)?;
            }
        }
    }
}
