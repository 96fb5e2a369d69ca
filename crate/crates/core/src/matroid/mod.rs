//! Rank oracles for uniform, graphic, linear and partition matroids, and
//! their minors.
//!
//! Every [`Matroid`] is a minor `(B / C)|S` of a concrete base family: a
//! fresh matroid has `C = ∅` and `S = {0, .., n-1}`. Restriction and
//! contraction only adjust `C` and `S`, so element ids are never renumbered
//! and minors of minors compose without nesting. Rank of `A ⊆ S` is
//! `r_B(A ∪ C) - r_B(C)`.

mod graphic;
mod linear;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::set::{ElementSet, MAX_ELEMENTS};

pub use linear::is_prime;

/// Largest prime accepted for linear matroids.
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("ground set of {0} elements exceeds the supported {MAX_ELEMENTS}")]
    TooManyElements(usize),
    #[error("uniform: rank {rank} outside 0..={n}")]
    InvalidUniformRank { n: usize, rank: usize },
    #[error("graphic: edge {edge} endpoint {vertex} is not below vertex count {vertices}")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        vertices: usize,
    },
    #[error("linear: modulus {0} is not a prime")]
    NotPrime(u64),
    #[error("linear: modulus {0} exceeds 2^31")]
    PrimeTooLarge(u64),
    #[error("linear: row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("linear: entry {value} at row {row}, column {col} is outside [0, {prime})")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: u64,
        prime: u64,
    },
    #[error("partition: block {block} lists element {element}, outside 0..{n}")]
    BlockElementOutOfRange {
        block: usize,
        element: usize,
        n: usize,
    },
    #[error("partition: element {0} appears in more than one block")]
    DuplicateBlockElement(usize),
    #[error("partition: element {0} is in no block")]
    UncoveredElement(usize),
    #[error("element {0} is not in the ground set")]
    NotInGroundSet(usize),
    #[error("set {0} is not independent")]
    NotIndependent(ElementSet),
    #[error("element {0} already belongs to the independent set")]
    ElementInSet(usize),
    #[error("no circuit: adding {0} keeps the set independent")]
    NoCircuit(usize),
}

/// One block of a partition matroid: at most `capacity` of `elements` may be
/// chosen together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub capacity: usize,
    pub elements: Vec<usize>,
}

/// The concrete matroid a minor view is taken of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Uniform {
        n: usize,
        rank: usize,
    },
    /// Elements are edges, numbered in list order. Self-loops are allowed and
    /// are matroid loops.
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    /// Elements are the columns of a `rows.len() x cols` matrix over GF(prime).
    Linear {
        prime: u64,
        rows: Vec<Vec<u64>>,
    },
    Partition {
        n: usize,
        blocks: Vec<Block>,
    },
}

impl Family {
    pub fn len(&self) -> usize {
        match self {
            Family::Uniform { n, .. } | Family::Partition { n, .. } => *n,
            Family::Graphic { edges, .. } => edges.len(),
            Family::Linear { rows, .. } => rows.first().map_or(0, Vec::len),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug)]
struct Base {
    family: Family,
    /// Linear: column-major copy of the matrix.
    columns: Vec<Vec<u64>>,
    /// Partition: block index of each element.
    block_of: Vec<usize>,
}

impl Base {
    fn rank(&self, set: ElementSet) -> usize {
        match &self.family {
            Family::Uniform { rank, .. } => set.len().min(*rank),
            Family::Graphic { vertices, edges } => {
                let mut forest = graphic::DisjointSets::new(*vertices);
                set.iter()
                    .filter(|&e| {
                        let (u, v) = edges[e];
                        forest.union(u, v)
                    })
                    .count()
            }
            Family::Linear { prime, .. } => {
                let cols: Vec<&[u64]> = set.iter().map(|e| self.columns[e].as_slice()).collect();
                linear::rank_mod_p(&cols, *prime)
            }
            Family::Partition { blocks, .. } => {
                let mut used = vec![0usize; blocks.len()];
                for e in set {
                    used[self.block_of[e]] += 1;
                }
                used.iter()
                    .zip(blocks)
                    .map(|(&u, b)| u.min(b.capacity))
                    .sum()
            }
        }
    }
}

/// An immutable matroid rank oracle. Cloning is cheap and clones share the
/// underlying family.
#[derive(Clone)]
pub struct Matroid {
    base: Arc<Base>,
    ground: ElementSet,
    contracted: ElementSet,
}

impl Matroid {
    fn from_family(family: Family, columns: Vec<Vec<u64>>, block_of: Vec<usize>) -> Self {
        let n = family.len();
        Matroid {
            base: Arc::new(Base {
                family,
                columns,
                block_of,
            }),
            ground: ElementSet::full(n),
            contracted: ElementSet::empty(),
        }
    }

    fn check_size(n: usize) -> Result<(), MatroidError> {
        if n > MAX_ELEMENTS {
            return Err(MatroidError::TooManyElements(n));
        }
        Ok(())
    }

    /// The uniform matroid `U_{rank,n}`.
    pub fn uniform(n: usize, rank: usize) -> Result<Self, MatroidError> {
        Self::check_size(n)?;
        if rank > n {
            return Err(MatroidError::InvalidUniformRank { n, rank });
        }
        Ok(Self::from_family(
            Family::Uniform { n, rank },
            Vec::new(),
            Vec::new(),
        ))
    }

    /// The cycle matroid of a multigraph; edge `i` is element `i`.
    pub fn graphic(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, MatroidError> {
        Self::check_size(edges.len())?;
        for (i, &(u, v)) in edges.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= vertices {
                    return Err(MatroidError::VertexOutOfRange {
                        edge: i,
                        vertex,
                        vertices,
                    });
                }
            }
        }
        Ok(Self::from_family(
            Family::Graphic { vertices, edges },
            Vec::new(),
            Vec::new(),
        ))
    }

    /// The column matroid of a matrix over GF(`prime`), given row by row.
    ///
    /// With no rows the matroid is empty; a matrix with zero rows but some
    /// columns cannot be expressed this way, use `uniform(n, 0)` instead.
    pub fn linear(prime: u64, rows: Vec<Vec<u64>>) -> Result<Self, MatroidError> {
        if prime > MAX_PRIME {
            return Err(MatroidError::PrimeTooLarge(prime));
        }
        if !is_prime(prime) {
            return Err(MatroidError::NotPrime(prime));
        }
        let cols = rows.first().map_or(0, Vec::len);
        Self::check_size(cols)?;
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(MatroidError::RaggedRow {
                    row: r,
                    expected: cols,
                    found: row.len(),
                });
            }
            if let Some((c, &value)) = row.iter().enumerate().find(|(_, &v)| v >= prime) {
                return Err(MatroidError::EntryOutOfRange {
                    row: r,
                    col: c,
                    value,
                    prime,
                });
            }
        }
        let columns = (0..cols)
            .map(|c| rows.iter().map(|row| row[c]).collect())
            .collect();
        Ok(Self::from_family(
            Family::Linear { prime, rows },
            columns,
            Vec::new(),
        ))
    }

    /// A partition matroid on `{0, .., n-1}`. The blocks must partition the
    /// ground set; empty blocks are permitted.
    pub fn partition(n: usize, blocks: Vec<Block>) -> Result<Self, MatroidError> {
        Self::check_size(n)?;
        let mut block_of = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &element in &block.elements {
                if element >= n {
                    return Err(MatroidError::BlockElementOutOfRange {
                        block: b,
                        element,
                        n,
                    });
                }
                if block_of[element] != usize::MAX {
                    return Err(MatroidError::DuplicateBlockElement(element));
                }
                block_of[element] = b;
            }
        }
        if let Some(e) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(MatroidError::UncoveredElement(e));
        }
        Ok(Self::from_family(
            Family::Partition { n, blocks },
            Vec::new(),
            block_of,
        ))
    }

    /// The family this matroid is a minor of.
    pub fn family(&self) -> &Family {
        &self.base.family
    }

    /// Size of the base family's ground set; every element id is below it.
    pub fn universe(&self) -> usize {
        self.base.family.len()
    }

    pub fn ground_set(&self) -> ElementSet {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    /// Elements contracted away from the base family.
    pub fn contracted(&self) -> ElementSet {
        self.contracted
    }

    pub fn is_minor(&self) -> bool {
        !self.contracted.is_empty() || self.ground != ElementSet::full(self.universe())
    }

    fn check_subset(&self, set: ElementSet) -> Result<(), MatroidError> {
        match (set - self.ground).min() {
            Some(e) => Err(MatroidError::NotInGroundSet(e)),
            None => Ok(()),
        }
    }

    /// Rank of `set`, which must lie in the ground set.
    pub fn rank(&self, set: ElementSet) -> Result<usize, MatroidError> {
        self.check_subset(set)?;
        Ok(self.rank_unchecked(set))
    }

    /// Rank without the ground-set check. Callers guarantee `set ⊆ E`.
    pub(crate) fn rank_unchecked(&self, set: ElementSet) -> usize {
        if self.contracted.is_empty() {
            self.base.rank(set)
        } else {
            self.base.rank(set | self.contracted) - self.base.rank(self.contracted)
        }
    }

    pub fn is_independent(&self, set: ElementSet) -> Result<bool, MatroidError> {
        Ok(self.rank(set)? == set.len())
    }

    pub(crate) fn independent_unchecked(&self, set: ElementSet) -> bool {
        self.rank_unchecked(set) == set.len()
    }

    /// The unique circuit inside `independent ∪ {e}`.
    pub fn fundamental_circuit(
        &self,
        independent: ElementSet,
        e: usize,
    ) -> Result<ElementSet, MatroidError> {
        self.check_subset(independent.with(e))?;
        if independent.contains(e) {
            return Err(MatroidError::ElementInSet(e));
        }
        if !self.independent_unchecked(independent) {
            return Err(MatroidError::NotIndependent(independent));
        }
        let extended = independent.with(e);
        let r = self.rank_unchecked(extended);
        if r == extended.len() {
            return Err(MatroidError::NoCircuit(e));
        }
        Ok(self.circuit_unchecked(extended, r))
    }

    /// `extended` is `I ∪ {e}` with `I` independent and rank `r < |extended|`.
    pub(crate) fn circuit_unchecked(&self, extended: ElementSet, r: usize) -> ElementSet {
        extended
            .iter()
            .filter(|&x| self.rank_unchecked(extended.without(x)) == r)
            .collect()
    }

    pub fn closure(&self, set: ElementSet) -> Result<ElementSet, MatroidError> {
        let r = self.rank(set)?;
        Ok(self
            .ground
            .iter()
            .filter(|&x| set.contains(x) || self.rank_unchecked(set.with(x)) == r)
            .collect())
    }

    pub fn loops(&self) -> ElementSet {
        self.ground
            .iter()
            .filter(|&x| self.rank_unchecked(ElementSet::singleton(x)) == 0)
            .collect()
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    /// `M|S`.
    pub fn restrict(&self, set: ElementSet) -> Result<Matroid, MatroidError> {
        self.check_subset(set)?;
        Ok(Matroid {
            base: Arc::clone(&self.base),
            ground: set,
            contracted: self.contracted,
        })
    }

    /// `M/C`.
    pub fn contract(&self, set: ElementSet) -> Result<Matroid, MatroidError> {
        self.check_subset(set)?;
        Ok(Matroid {
            base: Arc::clone(&self.base),
            ground: self.ground - set,
            contracted: self.contracted | set,
        })
    }

    /// `M \ D`, restriction to the complement of `set`.
    pub fn delete(&self, set: ElementSet) -> Result<Matroid, MatroidError> {
        self.check_subset(set)?;
        self.restrict(self.ground - set)
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Matroid");
        d.field("family", &self.base.family);
        if self.is_minor() {
            d.field("ground", &self.ground)
                .field("contracted", &self.contracted);
        }
        d.finish()
    }
}
