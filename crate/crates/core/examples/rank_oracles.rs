//! Rank, independence, circuits and closure for each matroid family.

use indicolor::matroid::Block;
use indicolor::{ElementSet, Matroid};

fn set(ids: &[usize]) -> ElementSet {
    ids.iter().collect()
}

fn main() -> Result<(), indicolor::MatroidError> {
    let uniform = Matroid::uniform(4, 2)?;
    let triangle = Matroid::graphic(3, vec![(0, 1), (1, 2), (2, 0)])?;
    let gf2 = Matroid::linear(2, vec![vec![1, 0, 1], vec![0, 1, 1]])?;
    let partition = Matroid::partition(
        4,
        vec![
            Block {
                capacity: 1,
                elements: vec![0, 1],
            },
            Block {
                capacity: 2,
                elements: vec![2, 3],
            },
        ],
    )?;

    for (name, m) in [
        ("U(2,4)", &uniform),
        ("triangle", &triangle),
        ("GF(2)", &gf2),
        ("partition", &partition),
    ] {
        let ground = m.ground_set();
        println!("{name}: |E| = {}, rank = {}", m.len(), m.rank(ground)?);
        for a in [set(&[0, 1]), set(&[0, 2]), set(&[1, 2])] {
            println!(
                "  r({a:?}) = {}  independent: {}  closure: {:?}",
                m.rank(a)?,
                m.is_independent(a)?,
                m.closure(a)?
            );
        }
    }

    // Column 2 is the sum of columns 0 and 1, so {0, 1, 2} is a circuit.
    println!(
        "GF(2) circuit of 2 over {{0, 1}}: {:?}",
        gf2.fundamental_circuit(set(&[0, 1]), 2)?
    );
    println!(
        "triangle circuit of edge 2 over {{0, 1}}: {:?}",
        triangle.fundamental_circuit(set(&[0, 1]), 2)?
    );
    println!(
        "partition circuit of 1 over {{0}}: {:?}",
        partition.fundamental_circuit(set(&[0]), 1)?
    );
    Ok(())
}
