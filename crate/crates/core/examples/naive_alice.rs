//! Indicating elements in ascending order is not enough: on this edge order
//! of K4, Bob finds a line that leaves an edge uncolorable.

use indicolor::game::{GameState, Mode};
use indicolor::oracle::refute;
use indicolor::strategy::{AliceEngine, NaiveAlice};
use indicolor::{corpus, Palette};

fn main() {
    let state = GameState::new(Palette::copies(&corpus::k4(), 2), Mode::Classic).unwrap();
    match refute(&state, &NaiveAlice).unwrap() {
        Some(end) => {
            for r in end.rounds() {
                println!(
                    "edge {} {:?} gets color {}",
                    r.element,
                    corpus::k4_edges()[r.element],
                    r.color
                );
            }
            println!("phase: {:?}", end.phase());
        }
        None => println!("naive Alice survived"),
    }
    let engine = AliceEngine::new(&state);
    println!(
        "engine Alice refuted: {}",
        refute(&state, &engine).unwrap().is_some()
    );
}
