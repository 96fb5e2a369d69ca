//! The classic game: Alice indicates, Bob colors. With as many colors as the
//! chromatic number, Alice's engine wins against every Bob.

use indicolor::corpus;
use indicolor::game::Mode;
use indicolor::play::{run_game, AliceKind, BobKind, GameConfig};
use indicolor::union::chromatic_number;
use indicolor::Palette;

fn main() {
    let k5 = corpus::complete_graph(5);
    let k = chromatic_number(&k5).unwrap();
    for bob in [BobKind::FirstFit, BobKind::Random, BobKind::Adversarial] {
        let config = GameConfig {
            palette: Palette::copies(&k5, k),
            mode: Mode::Classic,
            alice: AliceKind::Engine,
            bob,
            seed: 1,
        };
        let t = run_game(&config).unwrap();
        let line: Vec<_> = t
            .rounds
            .iter()
            .map(|r| format!("{}->{}", r.element, r.color))
            .collect();
        println!(
            "K5, {k} colors, {bob:?} Bob: {} wins [{}]",
            t.winner,
            line.join(" ")
        );
    }
}
