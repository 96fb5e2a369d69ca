//! The modified game: each turn Bob picks who indicates, and the other player
//! colors. Alice still wins whenever a cover exists.

use indicolor::game::Mode;
use indicolor::play::{run_game, AliceKind, BobKind, GameConfig};
use indicolor::{corpus, Palette};

fn main() {
    let palettes = [
        ("K4, 2 colors", Palette::copies(&corpus::k4(), 2)),
        (
            "two pairs, 2 colors",
            Palette::copies(&corpus::two_pairs(), 2),
        ),
        ("K4, 1 color", Palette::copies(&corpus::k4(), 1)),
    ];
    for (name, palette) in palettes {
        let config = GameConfig {
            palette,
            mode: Mode::Modified,
            alice: AliceKind::Engine,
            bob: BobKind::Adversarial,
            seed: 0,
        };
        let t = run_game(&config).unwrap();
        println!("{name}: {} wins", t.winner);
        for r in &t.rounds {
            println!(
                "  round {}: {} indicated {}, {} colored it {}",
                r.round, r.indicator, r.element, r.colorist, r.color
            );
        }
    }
}
