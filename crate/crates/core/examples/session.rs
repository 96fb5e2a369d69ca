//! Driving a game as the HTTP server does: the human is Bob and the engine
//! moves automatically between requests.

use indicolor::game::{Mode, Role};
use indicolor::session::{Awaiting, Move, NewGame, Session};

fn main() {
    let request = NewGame {
        matroid: "graphic 4 6\n0 2\n2 1\n0 3\n3 1\n0 1\n2 3\n".into(),
        colors: 2,
        mode: Mode::Classic,
        human_role: Role::Bob,
    };
    let mut session = Session::create(&request).unwrap();
    while session.awaiting() != Awaiting::Finished {
        let view = session.view();
        // Always take the largest legal color.
        let color = *view.legal_colors.last().unwrap();
        println!(
            "element {:?}: legal {:?}, playing {color}",
            view.indicated, view.legal_colors
        );
        session.submit(Move::Color(color)).unwrap();
    }
    println!("{}", serde_json::to_string_pretty(&session.view()).unwrap());
    println!(
        "illegal move afterwards: {}",
        session.submit(Move::Color(1)).unwrap_err()
    );
}
