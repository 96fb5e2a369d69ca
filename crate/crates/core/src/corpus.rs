//! Named matroids and random instance generators used by tests, examples
//! and the acceptance suite.

use rand::Rng;

use crate::matroid::{Block, Matroid};

/// `K_4` with edges in the order 1-3, 3-2, 1-4, 4-2, 1-2, 3-4 (vertices
/// renumbered from 0). Smallest-id-first indication loses on this order.
pub fn k4() -> Matroid {
    Matroid::graphic(4, k4_edges()).expect("valid graph")
}

pub fn k4_edges() -> Vec<(usize, usize)> {
    vec![(0, 2), (2, 1), (0, 3), (3, 1), (0, 1), (2, 3)]
}

/// Edges of `K_n` in lexicographic order.
pub fn complete_graph_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

pub fn complete_graph(n: usize) -> Matroid {
    Matroid::graphic(n, complete_graph_edges(n)).expect("valid graph")
}

/// Edges of `K_{a,b}`, left vertices `0..a`, right vertices `a..a+b`.
pub fn complete_bipartite_edges(a: usize, b: usize) -> Vec<(usize, usize)> {
    (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect()
}

/// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
pub fn petersen_edges() -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    edges
}

pub fn petersen() -> Matroid {
    Matroid::graphic(10, petersen_edges()).expect("valid graph")
}

/// Partition matroid with blocks `{0,1}` and `{2,3}`, capacity one each.
/// Two copies of it have exactly the tight sets `{0,1}` and `{2,3}`.
pub fn two_pairs() -> Matroid {
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
    .expect("valid partition")
}

/// Every loopless uniform matroid `U_{r,n}` with `1 <= r <= n <= max_n`.
pub fn uniform_matroids(max_n: usize) -> Vec<Matroid> {
    (1..=max_n)
        .flat_map(|n| (1..=n).map(move |r| Matroid::uniform(n, r).expect("r <= n")))
        .collect()
}

fn is_connected(vertices: usize, edges: &[(usize, usize)]) -> bool {
    if vertices == 0 {
        return true;
    }
    let mut seen = vec![false; vertices];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == u && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Edge lists of all connected simple graphs on exactly `vertices` labeled
/// vertices, excluding the edgeless single vertex.
pub fn connected_graphs(vertices: usize) -> Vec<Vec<(usize, usize)>> {
    let all = complete_graph_edges(vertices);
    (0u32..1 << all.len())
        .map(|mask| {
            all.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect::<Vec<_>>()
        })
        .filter(|edges| !edges.is_empty() && is_connected(vertices, edges))
        .collect()
}

/// A random matrix over GF(`prime`) with `rows` rows and `cols` columns and
/// no zero column, as a linear matroid.
pub fn random_linear<R: Rng>(rng: &mut R, prime: u64, rows: usize, cols: usize) -> Matroid {
    assert!(rows > 0, "a loopless linear matroid needs a row");
    let mut columns = Vec::with_capacity(cols);
    while columns.len() < cols {
        let col: Vec<u64> = (0..rows).map(|_| rng.gen_range(0..prime)).collect();
        if col.iter().any(|&v| v != 0) {
            columns.push(col);
        }
    }
    let matrix = (0..rows)
        .map(|r| columns.iter().map(|c| c[r]).collect())
        .collect();
    Matroid::linear(prime, matrix).expect("entries reduced mod prime")
}

/// A random partition matroid on `n` elements with every capacity at least
/// one (so no loops).
pub fn random_partition<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    let nblocks = rng.gen_range(1..=n.max(1));
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); nblocks];
    for e in 0..n {
        blocks[rng.gen_range(0..nblocks)].push(e);
    }
    let blocks = blocks
        .into_iter()
        .filter(|b| !b.is_empty())
        .map(|elements| Block {
            capacity: rng.gen_range(1..=elements.len()),
            elements,
        })
        .collect();
    Matroid::partition(n, blocks).expect("blocks partition the ground set")
}

/// A random matroid on `n` elements from one of the four families. May
/// contain loops.
pub fn random_matroid<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    match rng.gen_range(0..4) {
        0 => Matroid::uniform(n, rng.gen_range(0..=n)).expect("r <= n"),
        1 => {
            let vertices = rng.gen_range(1..=n.max(1) + 1);
            let edges = (0..n)
                .map(|_| (rng.gen_range(0..vertices), rng.gen_range(0..vertices)))
                .collect();
            Matroid::graphic(vertices, edges).expect("endpoints in range")
        }
        2 => {
            let prime = [2, 3, 5][rng.gen_range(0..3)];
            let rows = rng.gen_range(1..=4);
            let matrix = (0..rows)
                .map(|_| (0..n).map(|_| rng.gen_range(0..prime)).collect())
                .collect();
            Matroid::linear(prime, matrix).expect("entries reduced mod prime")
        }
        _ => {
            let nblocks = rng.gen_range(1..=n.max(1));
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); nblocks];
            for e in 0..n {
                blocks[rng.gen_range(0..nblocks)].push(e);
            }
            let blocks = blocks
                .into_iter()
                .map(|elements| Block {
                    capacity: rng.gen_range(0..=elements.len()),
                    elements,
                })
                .collect();
            Matroid::partition(n, blocks).expect("blocks partition the ground set")
        }
    }
}
