//! Partitioning a ground set into independent sets, or proving it cannot be
//! done with a set of negative surplus.

use indicolor::union::{partition_ground_set, surplus, verify_cover};
use indicolor::{corpus, Matroid, Palette, UnionOutcome};

fn report(name: &str, palette: &Palette) {
    match partition_ground_set(palette) {
        UnionOutcome::Cover(cover) => {
            println!(
                "{name}: cover {:?} (verified: {})",
                cover.parts(),
                verify_cover(palette, &cover)
            );
        }
        UnionOutcome::Violator(v) => {
            let s = surplus(palette, v.set).expect("subset of the ground set");
            println!("{name}: no cover; {:?} has surplus {s}", v.set);
        }
    }
}

fn main() {
    let k4 = corpus::k4();
    report("K4, 2 colors", &Palette::copies(&k4, 2));
    report("K4, 1 color", &Palette::copies(&k4, 1));
    report(
        "K5, 2 colors",
        &Palette::copies(&corpus::complete_graph(5), 2),
    );
    report(
        "U(1,3), 2 colors",
        &Palette::copies(&Matroid::uniform(3, 1).unwrap(), 2),
    );

    // Colors may use different matroids on the same ground set.
    let mixed = Palette::new(vec![k4.clone(), Matroid::uniform(6, 3).unwrap()]).unwrap();
    report("K4 + U(3,6)", &mixed);
}
