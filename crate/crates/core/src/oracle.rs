//! Exhaustive oracles.
//!
//! Nothing here calls into the union engine or Alice's strategy: covers are
//! found by enumerating labelings, tight sets by enumerating subsets, and
//! game values by full minimax over colorings in which Alice may indicate
//! anything. The one exception is [`refute`], which deliberately plays a
//! given strategy against every Bob reply.

use std::collections::HashMap;

use thiserror::Error;

use crate::game::{GameError, GameState, Mode, MoveKind, Phase, Role};
use crate::matroid::Matroid;
use crate::set::ElementSet;
use crate::strategy::{AliceStrategy, StrategyError};
use crate::union::Palette;

/// Ground-set bound for [`bf_cover_exists`] and [`bf_tight_sets`].
pub const COVER_LIMIT: usize = 12;
/// Ground-set bound for [`bf_chromatic`].
pub const CHROMATIC_LIMIT: usize = 9;
/// Ground-set bound for the classic game solver and [`refute`].
pub const INDICATED_LIMIT: usize = 8;
/// Ground-set bound for the modified game solver and [`refute`].
pub const MODIFIED_LIMIT: usize = 7;
/// Bound on the number of coloring codes `(k + 1)^|E|` of a game solver.
pub const STATE_LIMIT: u64 = 1 << 36;
/// Above this many codes the solver memo is a hash map instead of an array.
const DENSE_LIMIT: usize = 1 << 20;
/// Ground-set bound for the subset-enumerating rank formulas.
pub const FORMULA_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} is {size}, above the exhaustive-search limit {limit}")]
    TooLarge {
        what: &'static str,
        size: u64,
        limit: u64,
    },
    #[error("matroid has loops {0}")]
    Loopy(ElementSet),
    #[error(transparent)]
    Strategy(#[from] StrategyError),
    #[error(transparent)]
    Game(#[from] GameError),
}

fn guard(what: &'static str, size: usize, limit: usize) -> Result<(), OracleError> {
    if size > limit {
        return Err(OracleError::TooLarge {
            what,
            size: size as u64,
            limit: limit as u64,
        });
    }
    Ok(())
}

fn state_count(k: usize, n: usize) -> u64 {
    (k as u64 + 1).saturating_pow(n as u32)
}

fn guard_game(palette: &Palette, n: usize, mode: Mode) -> Result<(), OracleError> {
    let limit = match mode {
        Mode::Classic => INDICATED_LIMIT,
        Mode::Modified => MODIFIED_LIMIT,
    };
    guard("ground set size", n, limit)?;
    let states = state_count(palette.k(), n);
    if states > STATE_LIMIT {
        return Err(OracleError::TooLarge {
            what: "coloring count",
            size: states,
            limit: STATE_LIMIT,
        });
    }
    Ok(())
}

/// Whether some labeling puts every element in an independent class.
pub fn bf_cover_exists(palette: &Palette) -> Result<bool, OracleError> {
    guard("ground set size", palette.len_ground(), COVER_LIMIT)?;
    let elements = palette.ground().to_vec();
    let mut classes = vec![ElementSet::empty(); palette.k()];
    Ok(label(palette, &elements, &mut classes))
}

fn label(palette: &Palette, rest: &[usize], classes: &mut [ElementSet]) -> bool {
    let Some((&e, rest)) = rest.split_first() else {
        return true;
    };
    for i in 0..classes.len() {
        let grown = classes[i].with(e);
        if palette[i].rank_unchecked(grown) == grown.len() {
            classes[i] = grown;
            let found = label(palette, rest, classes);
            classes[i].remove(e);
            if found {
                return true;
            }
        }
    }
    false
}

/// Least number of independent sets covering the ground set.
pub fn bf_chromatic(matroid: &Matroid) -> Result<usize, OracleError> {
    guard("ground set size", matroid.len(), CHROMATIC_LIMIT)?;
    let loops = matroid.loops();
    if !loops.is_empty() {
        return Err(OracleError::Loopy(loops));
    }
    for k in 0.. {
        if bf_cover_exists(&Palette::copies(matroid, k))? {
            return Ok(k);
        }
    }
    unreachable!()
}

fn rank_sum(palette: &Palette, set: ElementSet) -> usize {
    palette.iter().map(|m| m.rank_unchecked(set)).sum()
}

/// Every nonempty proper subset `A` with `Σ r_i(A) = |A|`, ordered by size
/// and then lexicographically.
pub fn bf_tight_sets(palette: &Palette) -> Result<Vec<ElementSet>, OracleError> {
    guard("ground set size", palette.len_ground(), COVER_LIMIT)?;
    let ground = palette.ground();
    let mut tight: Vec<ElementSet> = ground
        .subsets()
        .filter(|&a| !a.is_empty() && a != ground && rank_sum(palette, a) == a.len())
        .collect();
    tight.sort_by_key(|a| (a.len(), a.to_vec()));
    Ok(tight)
}

/// `max ⌈|A| / r(A)⌉` over nonempty `A`; the chromatic number of a loopless
/// matroid.
pub fn covering_bound(matroid: &Matroid) -> Result<usize, OracleError> {
    guard("ground set size", matroid.len(), FORMULA_LIMIT)?;
    let loops = matroid.loops();
    if !loops.is_empty() {
        return Err(OracleError::Loopy(loops));
    }
    Ok(matroid
        .ground_set()
        .subsets()
        .filter(|a| !a.is_empty())
        .map(|a| a.len().div_ceil(matroid.rank_unchecked(a)))
        .max()
        .unwrap_or(0))
}

/// `max ⌈e(S) / (|S| - 1)⌉` over vertex sets `S` with at least two vertices,
/// where `e(S)` counts edges with both ends in `S`. This is the arboricity of
/// a graph without self-loops.
pub fn graph_arboricity_bound(
    vertices: usize,
    edges: &[(usize, usize)],
) -> Result<usize, OracleError> {
    guard("vertex count", vertices, FORMULA_LIMIT)?;
    let all = ElementSet::full(vertices);
    Ok(all
        .subsets()
        .filter(|s| s.len() >= 2)
        .map(|s| {
            let inside = edges
                .iter()
                .filter(|&&(u, v)| u != v && s.contains(u) && s.contains(v))
                .count();
            inside.div_ceil(s.len() - 1)
        })
        .max()
        .unwrap_or(0))
}

/// Minimax over colorings. Positions are encoded in base `k + 1`, one digit
/// per ground element (0 = uncolored).
struct Solver<'p> {
    palette: &'p Palette,
    mode: Mode,
    weight: Vec<usize>,
    memo: Memo,
}

/// Game values by position code.
enum Memo {
    /// 0 unknown, 1 Alice wins, 2 Bob wins.
    Dense(Vec<u8>),
    Sparse(HashMap<usize, bool>),
}

impl Memo {
    fn with_codes(codes: usize) -> Self {
        if codes <= DENSE_LIMIT {
            Memo::Dense(vec![0; codes])
        } else {
            Memo::Sparse(HashMap::new())
        }
    }

    fn get(&self, code: usize) -> Option<bool> {
        match self {
            Memo::Dense(v) => match v[code] {
                0 => None,
                x => Some(x == 1),
            },
            Memo::Sparse(m) => m.get(&code).copied(),
        }
    }

    fn set(&mut self, code: usize, alice_wins: bool) {
        match self {
            Memo::Dense(v) => v[code] = if alice_wins { 1 } else { 2 },
            Memo::Sparse(m) => {
                m.insert(code, alice_wins);
            }
        }
    }
}

impl<'p> Solver<'p> {
    fn new(palette: &'p Palette, mode: Mode) -> Result<Self, OracleError> {
        let n = palette.len_ground();
        guard_game(palette, n, mode)?;
        let base = palette.k() + 1;
        let mut weight = vec![0; palette.universe()];
        let mut w = 1;
        for e in palette.ground() {
            weight[e] = w;
            w *= base;
        }
        Ok(Solver {
            palette,
            mode,
            weight,
            memo: Memo::with_codes(w),
        })
    }

    fn encode(&self, classes: &[ElementSet]) -> usize {
        classes
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.iter().map(move |e| (i + 1, e)))
            .map(|(digit, e)| digit * self.weight[e])
            .sum()
    }

    fn legal(&self, classes: &[ElementSet], e: usize) -> Vec<usize> {
        (0..classes.len())
            .filter(|&i| {
                let grown = classes[i].with(e);
                self.palette[i].rank_unchecked(grown) == grown.len()
            })
            .collect()
    }

    /// Alice wins from the start of a turn.
    fn turn(&mut self, classes: &mut [ElementSet], uncolored: ElementSet, code: usize) -> bool {
        if uncolored.is_empty() {
            return true;
        }
        if let Some(wins) = self.memo.get(code) {
            return wins;
        }
        let wins = match self.mode {
            Mode::Classic => self.alice_indicates(classes, uncolored, code),
            Mode::Modified => {
                self.alice_indicates(classes, uncolored, code)
                    && self.bob_indicates(classes, uncolored, code)
            }
        };
        self.memo.set(code, wins);
        wins
    }

    fn alice_indicates(
        &mut self,
        classes: &mut [ElementSet],
        uncolored: ElementSet,
        code: usize,
    ) -> bool {
        uncolored
            .iter()
            .any(|e| self.bob_colors(classes, uncolored, code, e))
    }

    fn bob_indicates(
        &mut self,
        classes: &mut [ElementSet],
        uncolored: ElementSet,
        code: usize,
    ) -> bool {
        uncolored
            .iter()
            .all(|e| self.alice_colors(classes, uncolored, code, e))
    }

    fn bob_colors(
        &mut self,
        classes: &mut [ElementSet],
        uncolored: ElementSet,
        code: usize,
        e: usize,
    ) -> bool {
        let legal = self.legal(classes, e);
        !legal.is_empty()
            && legal
                .into_iter()
                .all(|i| self.child(classes, uncolored, code, e, i))
    }

    fn alice_colors(
        &mut self,
        classes: &mut [ElementSet],
        uncolored: ElementSet,
        code: usize,
        e: usize,
    ) -> bool {
        let legal = self.legal(classes, e);
        legal
            .into_iter()
            .any(|i| self.child(classes, uncolored, code, e, i))
    }

    fn child(
        &mut self,
        classes: &mut [ElementSet],
        uncolored: ElementSet,
        code: usize,
        e: usize,
        i: usize,
    ) -> bool {
        classes[i].insert(e);
        let wins = self.turn(
            classes,
            uncolored.without(e),
            code + (i + 1) * self.weight[e],
        );
        classes[i].remove(e);
        wins
    }
}

fn winner(alice_wins: bool) -> Role {
    if alice_wins {
        Role::Alice
    } else {
        Role::Bob
    }
}

/// Winner of the classic game under optimal play by both sides.
pub fn solve_indicated(palette: &Palette) -> Result<Role, OracleError> {
    let mut solver = Solver::new(palette, Mode::Classic)?;
    let mut classes = vec![ElementSet::empty(); palette.k()];
    Ok(winner(solver.turn(&mut classes, palette.ground(), 0)))
}

/// Winner of the modified game under optimal play by both sides.
pub fn solve_modified(palette: &Palette) -> Result<Role, OracleError> {
    let mut solver = Solver::new(palette, Mode::Modified)?;
    let mut classes = vec![ElementSet::empty(); palette.k()];
    Ok(winner(solver.turn(&mut classes, palette.ground(), 0)))
}

/// Winner from any position of a game under optimal play.
pub fn position_winner(state: &GameState) -> Result<Role, OracleError> {
    if let Some(w) = state.winner() {
        return Ok(w);
    }
    let mut solver = Solver::new(state.palette(), state.mode())?;
    let mut classes = state.classes().to_vec();
    let unc = state.uncolored();
    let code = solver.encode(&classes);
    let wins = match state.phase() {
        Phase::Finished { winner, .. } => return Ok(winner),
        Phase::ChooseKind => solver.turn(&mut classes, unc, code),
        Phase::Indicate {
            indicator: Role::Alice,
        } => match state.mode() {
            Mode::Classic => solver.turn(&mut classes, unc, code),
            Mode::Modified => solver.alice_indicates(&mut classes, unc, code),
        },
        Phase::Indicate {
            indicator: Role::Bob,
        } => solver.bob_indicates(&mut classes, unc, code),
        Phase::Color {
            element,
            colorist: Role::Bob,
            ..
        } => solver.bob_colors(&mut classes, unc, code, element),
        Phase::Color {
            element,
            colorist: Role::Alice,
            ..
        } => solver.alice_colors(&mut classes, unc, code, element),
    };
    Ok(winner(wins))
}

type RefuteKey = (Vec<u128>, u8, usize, Vec<u128>);
type Line = (GameState, Box<dyn AliceStrategy>);

/// Exhaustive walk of every Bob choice (colors, and in the modified game
/// move kinds and indications) against a fixed Alice strategy.
struct Refuter {
    memo: HashMap<RefuteKey, bool>,
}

impl Refuter {
    fn key(state: &GameState, alice: &dyn AliceStrategy) -> Option<RefuteKey> {
        let alice_key = alice.memo_key()?;
        let (tag, element) = match state.phase() {
            Phase::ChooseKind => (0, 0),
            Phase::Indicate {
                indicator: Role::Alice,
            } => (1, 0),
            Phase::Indicate {
                indicator: Role::Bob,
            } => (2, 0),
            Phase::Color {
                element,
                colorist: Role::Bob,
                ..
            } => (3, element),
            Phase::Color {
                element,
                colorist: Role::Alice,
                ..
            } => (4, element),
            Phase::Finished { .. } => return None,
        };
        let classes = state.classes().iter().map(|c| c.bits()).collect();
        Some((classes, tag, element, alice_key))
    }

    /// Successor positions for Bob's options at `state`, in ascending order.
    /// Empty when it is Alice's move.
    fn bob_options(state: &GameState, alice: &dyn AliceStrategy) -> Result<Vec<Line>, OracleError> {
        let mut out = Vec::new();
        match state.phase() {
            Phase::ChooseKind => {
                for kind in [MoveKind::AliceIndicates, MoveKind::BobIndicates] {
                    let mut s = state.clone();
                    s.choose_kind(kind)?;
                    out.push((s, alice.box_clone()));
                }
            }
            Phase::Indicate {
                indicator: Role::Bob,
            } => {
                for e in state.uncolored() {
                    let mut s = state.clone();
                    s.indicate(e)?;
                    out.push((s, alice.box_clone()));
                }
            }
            Phase::Color {
                element,
                colorist: Role::Bob,
                ..
            } => {
                for c in state.legal_colors(element)? {
                    let mut s = state.clone();
                    let round = *s.apply(element, c)?;
                    let mut a = alice.box_clone();
                    a.observe(&s, &round)?;
                    out.push((s, a));
                }
            }
            _ => {}
        }
        Ok(out)
    }

    /// Alice's forced move at `state`.
    fn alice_move(state: &GameState, alice: &dyn AliceStrategy) -> Result<Line, OracleError> {
        let mut s = state.clone();
        let mut a = alice.box_clone();
        match state.phase() {
            Phase::Indicate {
                indicator: Role::Alice,
            } => {
                let e = a.indicate(state)?;
                s.indicate(e)?;
            }
            Phase::Color {
                element,
                colorist: Role::Alice,
                ..
            } => {
                let c = a.color(state, element)?;
                let round = *s.apply(element, c)?;
                a.observe(&s, &round)?;
            }
            other => unreachable!("not Alice's move: {other:?}"),
        }
        Ok((s, a))
    }

    fn bob_wins(
        &mut self,
        state: &GameState,
        alice: &dyn AliceStrategy,
    ) -> Result<bool, OracleError> {
        if let Some(w) = state.winner() {
            return Ok(w == Role::Bob);
        }
        let key = Self::key(state, alice);
        if let Some(&v) = key.as_ref().and_then(|k| self.memo.get(k)) {
            return Ok(v);
        }
        let wins = if crate::strategy::alice_to_move(state) {
            let (s, a) = Self::alice_move(state, alice)?;
            self.bob_wins(&s, a.as_ref())?
        } else {
            let mut any = false;
            for (s, a) in Self::bob_options(state, alice)? {
                if self.bob_wins(&s, a.as_ref())? {
                    any = true;
                    break;
                }
            }
            any
        };
        if let Some(k) = key {
            self.memo.insert(k, wins);
        }
        Ok(wins)
    }
}

/// Searches for a line of Bob play that beats `alice` from `state`.
///
/// Returns the finished position Bob reaches, or `None` if `alice` wins
/// against every sequence of Bob choices. Errors raised by the strategy
/// (for example a stale witness) are returned as-is.
pub fn refute(
    state: &GameState,
    alice: &dyn AliceStrategy,
) -> Result<Option<GameState>, OracleError> {
    guard_game(state.palette(), state.uncolored().len(), state.mode())?;
    let mut refuter = Refuter {
        memo: HashMap::new(),
    };
    if !refuter.bob_wins(state, alice)? {
        return Ok(None);
    }
    let mut s = state.clone();
    let mut a = alice.box_clone();
    while !s.is_finished() {
        if crate::strategy::alice_to_move(&s) {
            (s, a) = Refuter::alice_move(&s, a.as_ref())?;
            continue;
        }
        let mut next = None;
        for (child, ca) in Refuter::bob_options(&s, a.as_ref())? {
            if refuter.bob_wins(&child, ca.as_ref())? {
                next = Some((child, ca));
                break;
            }
        }
        (s, a) = next.expect("a winning Bob option exists on a refuting line");
    }
    Ok(Some(s))
}
