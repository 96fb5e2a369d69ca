//! Games are recorded as JSON transcripts and checked by replaying them
//! through the referee.

use indicolor::game::Mode;
use indicolor::play::{run_game, AliceKind, BobKind, GameConfig};
use indicolor::transcript::Transcript;
use indicolor::{corpus, Palette};

fn main() {
    let palette = Palette::copies(&corpus::k4(), 2);
    let config = GameConfig {
        palette: palette.clone(),
        mode: Mode::Classic,
        alice: AliceKind::Engine,
        bob: BobKind::Random,
        seed: 7,
    };
    let json = run_game(&config).unwrap().to_json();
    println!("{json}");

    let transcript = Transcript::from_json(&json).unwrap();
    let end = transcript.replay(&palette).unwrap();
    println!(
        "replayed: winner {:?}, colors {:?}",
        end.winner(),
        end.classes()
    );

    let mut forged = transcript.clone();
    forged.rounds[1].color = forged.rounds[0].color;
    forged.rounds[1].element = forged.rounds[0].element;
    println!("forged replay: {}", forged.replay(&palette).unwrap_err());
}
