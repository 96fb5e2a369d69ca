//! Restriction, contraction and deletion keep the original element ids.

use indicolor::corpus;
use indicolor::ElementSet;

fn main() -> Result<(), indicolor::MatroidError> {
    let k4 = corpus::k4();
    println!(
        "K4 edges {:?}, rank {}",
        corpus::k4_edges(),
        k4.rank(k4.ground_set())?
    );

    // Contracting edge 4 (vertices 0-1) merges its ends: edges 1 and 3 become
    // parallel, both joining the merged vertex to vertices 2 and 3.
    let contracted = k4.contract(ElementSet::singleton(4))?;
    println!(
        "K4 / {{4}}: ground {:?}, rank {}",
        contracted.ground_set(),
        contracted.rank(contracted.ground_set())?
    );
    for pair in [[0, 1], [0, 3], [1, 3]] {
        let s: ElementSet = pair.iter().collect();
        println!("  r({s:?}) = {}", contracted.rank(s)?);
    }

    let deleted = k4.delete([0, 5].iter().collect())?;
    println!(
        "K4 \\ {{0, 5}}: ground {:?}, rank {}",
        deleted.ground_set(),
        deleted.rank(deleted.ground_set())?
    );

    let restricted = k4.restrict([0, 1, 4].iter().collect())?;
    println!(
        "K4 | {{0, 1, 4}} is a triangle: rank {}",
        restricted.rank(restricted.ground_set())?
    );
    println!(
        "loops of K4 / {{0, 1}}: {:?}",
        k4.contract([0, 1].iter().collect())?.loops()
    );
    Ok(())
}
