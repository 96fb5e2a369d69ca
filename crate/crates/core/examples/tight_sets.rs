//! Tight sets: nonempty proper subsets whose ranks sum to exactly their size.
//! Alice plays inside them first.

use indicolor::oracle::bf_tight_sets;
use indicolor::union::{find_proper_tight_set, partition_ground_set};
use indicolor::{corpus, Matroid, Palette};

fn show(name: &str, palette: &Palette) {
    let cover = partition_ground_set(palette)
        .into_cover()
        .expect("coverable");
    let found = find_proper_tight_set(palette, &cover).expect("valid cover");
    let all = bf_tight_sets(palette).expect("small ground set");
    println!("{name}: cover {:?}", cover.parts());
    println!("  found by closure search: {:?}", found.map(|t| t.set()));
    println!("  all tight sets: {all:?}");
}

fn main() {
    show(
        "two pairs, 2 colors",
        &Palette::copies(&corpus::two_pairs(), 2),
    );
    show("K4, 2 colors", &Palette::copies(&corpus::k4(), 2));
    // A triangle with one edge doubled: the parallel pair fills both colors.
    let doubled = Matroid::graphic(3, vec![(0, 1), (1, 2), (0, 1), (2, 0)]).unwrap();
    show("doubled triangle, 2 colors", &Palette::copies(&doubled, 2));
}
