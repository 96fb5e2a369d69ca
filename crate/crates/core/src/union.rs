//! Constructive matroid union: covers, violators and tight sets.
//!
//! For matroids `M_1, .., M_k` on a shared ground set `E`, either `E` splits
//! into sets `V_i` independent in `M_i` (a [`Cover`]), or some set `A` has
//! `Σ r_i(A) < |A|` (a [`Violator`]). [`partition_ground_set`] always
//! produces one of the two certificates.
//!
//! Both the augmenting search and the tight-set search walk the same
//! exchange digraph: from an element `y` outside part `V_i`, either
//! `V_i + y` is independent in `M_i` (`y` is *addable* to `i`), or there is an
//! arc `y -> x` for every `x ≠ y` on the fundamental circuit of `y` in `V_i`.

use std::collections::VecDeque;
use std::ops::Index;

use thiserror::Error;

use crate::matroid::{Matroid, MatroidError};
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnionError {
    #[error("at least one matroid is required")]
    NoMatroids,
    #[error("matroid {index} has ground set {found}, expected {expected}")]
    MismatchedGround {
        index: usize,
        expected: ElementSet,
        found: ElementSet,
    },
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("chromatic number undefined for loopy matroid (loops {0})")]
    Loopy(ElementSet),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// The `k` matroids of a generalized coloring problem, one per color, on a
/// common ground set. Index `i` here is color `i + 1` in game terms.
#[derive(Clone, Debug)]
pub struct Palette {
    matroids: Vec<Matroid>,
    ground: ElementSet,
    universe: usize,
}

impl Palette {
    pub fn new(matroids: Vec<Matroid>) -> Result<Self, UnionError> {
        let first = matroids.first().ok_or(UnionError::NoMatroids)?;
        let ground = first.ground_set();
        let universe = first.universe();
        for (index, m) in matroids.iter().enumerate() {
            if m.ground_set() != ground {
                return Err(UnionError::MismatchedGround {
                    index,
                    expected: ground,
                    found: m.ground_set(),
                });
            }
        }
        let universe = matroids
            .iter()
            .map(Matroid::universe)
            .fold(universe, usize::max);
        Ok(Palette {
            matroids,
            ground,
            universe,
        })
    }

    /// `k` copies of `matroid`; `k = 0` is allowed and has no colors at all.
    pub fn copies(matroid: &Matroid, k: usize) -> Self {
        Palette {
            matroids: vec![matroid.clone(); k],
            ground: matroid.ground_set(),
            universe: matroid.universe(),
        }
    }

    pub fn k(&self) -> usize {
        self.matroids.len()
    }

    pub fn ground(&self) -> ElementSet {
        self.ground
    }

    pub fn len_ground(&self) -> usize {
        self.ground.len()
    }

    /// Exclusive upper bound on element ids.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn matroids(&self) -> &[Matroid] {
        &self.matroids
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Matroid> {
        self.matroids.iter()
    }

    /// Every matroid restricted to `set`.
    pub fn restrict(&self, set: ElementSet) -> Result<Palette, UnionError> {
        let matroids = self
            .matroids
            .iter()
            .map(|m| m.restrict(set))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Palette {
            matroids,
            ground: set,
            universe: self.universe,
        })
    }

    /// `M_i / classes[i]`, each restricted to `keep`.
    ///
    /// `keep` must avoid every class; this is the position a coloring game
    /// reaches after the elements of `classes[i]` received color `i + 1`.
    pub fn minors(&self, classes: &[ElementSet], keep: ElementSet) -> Result<Palette, UnionError> {
        assert_eq!(classes.len(), self.k());
        let matroids = self
            .matroids
            .iter()
            .zip(classes)
            .map(|(m, &c)| m.contract(c)?.restrict(keep))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Palette {
            matroids,
            ground: keep,
            universe: self.universe,
        })
    }

    /// `Σ r_i(set) - |set|`, without the ground-set check.
    pub(crate) fn surplus_unchecked(&self, set: ElementSet) -> i64 {
        let ranks: usize = self.matroids.iter().map(|m| m.rank_unchecked(set)).sum();
        ranks as i64 - set.len() as i64
    }

    fn check_subset(&self, set: ElementSet) -> Result<(), UnionError> {
        match (set - self.ground).min() {
            Some(e) => Err(MatroidError::NotInGroundSet(e).into()),
            None => Ok(()),
        }
    }
}

impl Index<usize> for Palette {
    type Output = Matroid;
    fn index(&self, i: usize) -> &Matroid {
        &self.matroids[i]
    }
}

/// Disjoint parts `V_1, .., V_k` covering the ground set, `V_i` independent
/// in `M_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cover {
    parts: Vec<ElementSet>,
}

impl Cover {
    /// Wraps raw parts; use [`verify_cover`] to check them.
    pub fn from_parts(parts: Vec<ElementSet>) -> Self {
        Cover { parts }
    }

    pub fn parts(&self) -> &[ElementSet] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<ElementSet> {
        self.parts
    }

    pub fn part(&self, i: usize) -> ElementSet {
        self.parts[i]
    }

    /// Index of the part holding `e`.
    pub fn part_of(&self, e: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(e))
    }

    pub fn covered(&self) -> ElementSet {
        self.parts
            .iter()
            .fold(ElementSet::empty(), |acc, &p| acc | p)
    }

    pub(crate) fn parts_mut(&mut self) -> &mut [ElementSet] {
        &mut self.parts
    }
}

/// A nonempty set whose rank sum falls short of its size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violator {
    pub set: ElementSet,
    /// `Σ r_i(set) - |set|`, always negative.
    pub surplus: i64,
}

/// A nonempty proper subset `A` of the ground set with `Σ r_i(A) = |A|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TightSet(ElementSet);

impl TightSet {
    pub fn set(self) -> ElementSet {
        self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnionOutcome {
    Cover(Cover),
    Violator(Violator),
}

impl UnionOutcome {
    pub fn cover(&self) -> Option<&Cover> {
        match self {
            UnionOutcome::Cover(c) => Some(c),
            UnionOutcome::Violator(_) => None,
        }
    }

    pub fn into_cover(self) -> Option<Cover> {
        match self {
            UnionOutcome::Cover(c) => Some(c),
            UnionOutcome::Violator(_) => None,
        }
    }

    pub fn is_cover(&self) -> bool {
        matches!(self, UnionOutcome::Cover(_))
    }
}

/// `Σ r_i(set) - |set|`.
pub fn surplus(palette: &Palette, set: ElementSet) -> Result<i64, UnionError> {
    palette.check_subset(set)?;
    Ok(palette.surplus_unchecked(set))
}

enum Search {
    /// BFS predecessor map and the sink `(element, color)` that ended it.
    Augment {
        parent: Vec<Option<(usize, usize)>>,
        sink: (usize, usize),
    },
    /// Everything reachable from the sources; no sink among it.
    Stuck(ElementSet),
}

/// Breadth-first search of the exchange digraph from `sources`, visiting
/// colors and circuit elements in ascending order.
fn exchange_search(palette: &Palette, parts: &[ElementSet], sources: ElementSet) -> Search {
    let mut parent = vec![None; palette.universe()];
    let mut seen = sources;
    let mut queue: VecDeque<usize> = sources.iter().collect();
    while let Some(y) = queue.pop_front() {
        for (i, m) in palette.iter().enumerate() {
            if parts[i].contains(y) {
                continue;
            }
            let extended = parts[i].with(y);
            let r = m.rank_unchecked(extended);
            if r == extended.len() {
                return Search::Augment {
                    parent,
                    sink: (y, i),
                };
            }
            for x in m.circuit_unchecked(extended, r).without(y) {
                if seen.insert(x) {
                    parent[x] = Some((y, i));
                    queue.push_back(x);
                }
            }
        }
    }
    Search::Stuck(seen)
}

/// Cover-or-violator for the palette, by incremental shortest augmenting
/// paths over elements in ascending order.
///
/// Elements that cannot be placed are set aside. If any remain at the end,
/// the set reachable from all of them is returned: every part spans it, so
/// its surplus is minus the number of unplaced elements.
pub fn partition_ground_set(palette: &Palette) -> UnionOutcome {
    let mut parts = vec![ElementSet::empty(); palette.k()];
    let mut unplaced = ElementSet::empty();
    for e in palette.ground() {
        match exchange_search(palette, &parts, ElementSet::singleton(e)) {
            Search::Augment { parent, sink } => {
                let (mut cur, color) = sink;
                parts[color].insert(cur);
                while let Some((prev, i)) = parent[cur] {
                    parts[i].remove(cur);
                    parts[i].insert(prev);
                    cur = prev;
                }
                debug_assert!(parts
                    .iter()
                    .zip(palette.iter())
                    .all(|(&p, m)| m.independent_unchecked(p)));
            }
            Search::Stuck(_) => {
                unplaced.insert(e);
            }
        }
    }
    if unplaced.is_empty() {
        return UnionOutcome::Cover(Cover { parts });
    }
    let Search::Stuck(set) = exchange_search(palette, &parts, unplaced) else {
        panic!("element became placeable after augmentation; union closure is monotone");
    };
    let surplus = palette.surplus_unchecked(set);
    assert_eq!(
        surplus,
        -(unplaced.len() as i64),
        "violator {set} must be spanned by every part"
    );
    UnionOutcome::Violator(Violator { set, surplus })
}

/// True iff `cover` has one part per matroid, the parts are pairwise
/// disjoint and cover the ground set, and part `i` is independent in `M_i`.
pub fn verify_cover(palette: &Palette, cover: &Cover) -> bool {
    cover_problem(palette, cover).is_none()
}

fn cover_problem(palette: &Palette, cover: &Cover) -> Option<String> {
    if cover.parts.len() != palette.k() {
        return Some(format!(
            "{} parts for {} matroids",
            cover.parts.len(),
            palette.k()
        ));
    }
    let mut seen = ElementSet::empty();
    for (i, (&part, m)) in cover.parts.iter().zip(palette.iter()).enumerate() {
        if !part.is_disjoint(seen) {
            return Some(format!(
                "part {i} overlaps an earlier part on {}",
                part & seen
            ));
        }
        if !part.is_subset(palette.ground()) {
            return Some(format!("part {i} leaves the ground set"));
        }
        if !m.independent_unchecked(part) {
            return Some(format!("part {i} = {part} is dependent"));
        }
        seen = seen | part;
    }
    if seen != palette.ground() {
        return Some(format!(
            "elements {} are uncovered",
            palette.ground() - seen
        ));
    }
    None
}

/// Least `k` such that the ground set splits into `k` independent sets.
pub fn chromatic_number(matroid: &Matroid) -> Result<usize, UnionError> {
    let loops = matroid.loops();
    if !loops.is_empty() {
        return Err(UnionError::Loopy(loops));
    }
    // Singletons always work, so this terminates by k = |E|.
    Ok((0..)
        .find(|&k| partition_ground_set(&Palette::copies(matroid, k)).is_cover())
        .expect("loopless matroid is colorable with |E| colors"))
}

/// Smallest tight set containing `seed`, possibly the whole ground set, or
/// `None` when no tight set contains it.
///
/// Given a valid cover, a set `A` is tight iff every part restricted to `A`
/// spans `A`, i.e. `A` is closed under circuit arcs and holds no addable
/// element. The closure of `{seed}` under the arcs is therefore the minimal
/// candidate.
pub fn tight_closure(palette: &Palette, cover: &Cover, seed: usize) -> Option<ElementSet> {
    let parts = cover.parts();
    let mut reached = ElementSet::singleton(seed);
    let mut queue = VecDeque::from([seed]);
    while let Some(y) = queue.pop_front() {
        for (i, m) in palette.iter().enumerate() {
            if parts[i].contains(y) {
                continue;
            }
            let extended = parts[i].with(y);
            let r = m.rank_unchecked(extended);
            if r == extended.len() {
                return None;
            }
            for x in m.circuit_unchecked(extended, r).without(y) {
                if reached.insert(x) {
                    queue.push_back(x);
                }
            }
        }
    }
    Some(reached)
}

/// First proper tight set found by seeding [`tight_closure`] with each
/// element in ascending order.
pub fn find_proper_tight_set(
    palette: &Palette,
    cover: &Cover,
) -> Result<Option<TightSet>, UnionError> {
    if let Some(problem) = cover_problem(palette, cover) {
        return Err(UnionError::InvalidCover(problem));
    }
    for seed in palette.ground() {
        if let Some(set) = tight_closure(palette, cover, seed) {
            if set != palette.ground() {
                assert_eq!(
                    palette.surplus_unchecked(set),
                    0,
                    "closure {set} is not tight"
                );
                return Ok(Some(TightSet(set)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Block;

    fn set(ids: &[usize]) -> ElementSet {
        ids.iter().collect()
    }

    fn two_pairs() -> Matroid {
        Matroid::partition(
            4,
            vec![
                Block {
                    capacity: 1,
                    elements: vec![0, 1],
                },
                Block {
                    capacity: 1,
                    elements: vec![2, 3],
                },
            ],
        )
        .unwrap()
    }

    fn k4() -> Matroid {
        Matroid::graphic(4, vec![(0, 2), (2, 1), (0, 3), (3, 1), (0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn surplus_examples() {
        let u24 = Matroid::uniform(4, 2).unwrap();
        assert_eq!(
            surplus(&Palette::copies(&u24, 2), set(&[0, 1, 2])).unwrap(),
            1
        );
        let u13 = Matroid::uniform(3, 1).unwrap();
        assert_eq!(
            surplus(&Palette::copies(&u13, 1), u13.ground_set()).unwrap(),
            -2
        );
        assert_eq!(
            surplus(&Palette::copies(&two_pairs(), 2), set(&[0, 1])).unwrap(),
            0
        );
    }

    #[test]
    fn mismatched_ground_sets_are_rejected() {
        let a = Matroid::uniform(3, 1).unwrap();
        let b = Matroid::uniform(4, 1).unwrap();
        assert!(matches!(
            Palette::new(vec![a.clone(), b]),
            Err(UnionError::MismatchedGround { index: 1, .. })
        ));
        let c = a.restrict(set(&[0, 1])).unwrap();
        assert!(Palette::new(vec![a, c]).is_err());
        assert_eq!(Palette::new(vec![]).unwrap_err(), UnionError::NoMatroids);
    }

    #[test]
    fn partition_examples() {
        let u24 = Matroid::uniform(4, 2).unwrap();
        let p = Palette::copies(&u24, 2);
        let UnionOutcome::Cover(c) = partition_ground_set(&p) else {
            panic!()
        };
        assert!(verify_cover(&p, &c));
        assert_eq!(c.part(0).len(), 2);
        assert_eq!(c.part(1).len(), 2);

        let u13 = Matroid::uniform(3, 1).unwrap();
        assert_eq!(
            partition_ground_set(&Palette::copies(&u13, 1)),
            UnionOutcome::Violator(Violator {
                set: set(&[0, 1, 2]),
                surplus: -2
            })
        );

        let u12 = Matroid::uniform(2, 1).unwrap();
        let UnionOutcome::Cover(c) = partition_ground_set(&Palette::copies(&u12, 2)) else {
            panic!()
        };
        assert!(c.parts() == [set(&[0]), set(&[1])] || c.parts() == [set(&[1]), set(&[0])]);
    }

    #[test]
    fn augmenting_path_exchanges_elements() {
        // 0 lands in part 0 first; 1 only fits part 0, so 0 must move over.
        let one_of = Matroid::uniform(2, 1).unwrap();
        let only_zero = Matroid::partition(
            2,
            vec![
                Block {
                    capacity: 1,
                    elements: vec![0],
                },
                Block {
                    capacity: 0,
                    elements: vec![1],
                },
            ],
        )
        .unwrap();
        let p = Palette::new(vec![one_of, only_zero]).unwrap();
        let UnionOutcome::Cover(c) = partition_ground_set(&p) else {
            panic!()
        };
        assert_eq!(c.parts(), [set(&[1]), set(&[0])]);
    }

    #[test]
    fn zero_colors() {
        let u = Matroid::uniform(2, 1).unwrap();
        let out = partition_ground_set(&Palette::copies(&u, 0));
        assert_eq!(
            out,
            UnionOutcome::Violator(Violator {
                set: set(&[0, 1]),
                surplus: -2
            })
        );
        let empty = Matroid::uniform(0, 0).unwrap();
        assert!(partition_ground_set(&Palette::copies(&empty, 0)).is_cover());
    }

    #[test]
    fn verify_cover_examples() {
        let u24 = Matroid::uniform(4, 2).unwrap();
        let p = Palette::copies(&u24, 2);
        assert!(verify_cover(
            &p,
            &Cover::from_parts(vec![set(&[0, 1]), set(&[2, 3])])
        ));
        assert!(!verify_cover(
            &p,
            &Cover::from_parts(vec![set(&[0, 1]), set(&[1, 2, 3])])
        ));
        assert!(!verify_cover(
            &p,
            &Cover::from_parts(vec![set(&[0, 1, 2]), set(&[3])])
        ));
        assert!(!verify_cover(
            &p,
            &Cover::from_parts(vec![set(&[0, 1]), set(&[2])])
        ));
        assert!(!verify_cover(
            &p,
            &Cover::from_parts(vec![set(&[0, 1, 2, 3])])
        ));
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(
            chromatic_number(&Matroid::uniform(4, 1).unwrap()).unwrap(),
            4
        );
        assert_eq!(
            chromatic_number(&Matroid::uniform(4, 4).unwrap()).unwrap(),
            1
        );
        assert_eq!(
            chromatic_number(&Matroid::uniform(0, 0).unwrap()).unwrap(),
            0
        );
        assert_eq!(chromatic_number(&k4()).unwrap(), 2);
        assert!(matches!(
            chromatic_number(&Matroid::graphic(1, vec![(0, 0)]).unwrap()),
            Err(UnionError::Loopy(_))
        ));
    }

    #[test]
    fn tight_set_examples() {
        let p = Palette::copies(&two_pairs(), 2);
        let cover = Cover::from_parts(vec![set(&[0, 2]), set(&[1, 3])]);
        let t = find_proper_tight_set(&p, &cover).unwrap().unwrap();
        assert_eq!(t.set(), set(&[0, 1]));

        let k = Palette::copies(&k4(), 2);
        let UnionOutcome::Cover(c) = partition_ground_set(&k) else {
            panic!()
        };
        assert_eq!(find_proper_tight_set(&k, &c).unwrap(), None);

        let free = Matroid::uniform(3, 3).unwrap();
        let f = Palette::copies(&free, 1);
        let c = Cover::from_parts(vec![free.ground_set()]);
        assert_eq!(
            find_proper_tight_set(&f, &c).unwrap().unwrap().set(),
            set(&[0])
        );
    }

    #[test]
    fn tight_set_rejects_bad_cover() {
        let p = Palette::copies(&two_pairs(), 2);
        let cover = Cover::from_parts(vec![set(&[0, 1]), set(&[2, 3])]);
        assert!(matches!(
            find_proper_tight_set(&p, &cover),
            Err(UnionError::InvalidCover(_))
        ));
    }
}
