//! Exhaustive game values compared with the chromatic number.

use indicolor::oracle::{bf_chromatic, solve_indicated, solve_modified};
use indicolor::{corpus, Matroid, Palette};

fn main() {
    let matroids = [
        ("U(1,2)", Matroid::uniform(2, 1).unwrap()),
        ("U(2,5)", Matroid::uniform(5, 2).unwrap()),
        ("K4", corpus::k4()),
        ("two pairs", corpus::two_pairs()),
        (
            "GF(2) 3x6",
            Matroid::linear(
                2,
                vec![
                    vec![1, 0, 0, 1, 1, 0],
                    vec![0, 1, 0, 1, 0, 1],
                    vec![0, 0, 1, 0, 1, 1],
                ],
            )
            .unwrap(),
        ),
    ];
    for (name, m) in matroids {
        let chi = bf_chromatic(&m).unwrap();
        let values: Vec<String> = (1..=chi + 1)
            .map(|k| {
                let p = Palette::copies(&m, k);
                format!(
                    "k={k}: {}/{}",
                    solve_indicated(&p).unwrap(),
                    solve_modified(&p).unwrap()
                )
            })
            .collect();
        println!("{name} (chromatic number {chi}): {}", values.join(", "));
    }
}
