#![no_main]

use libfuzzer_sys::fuzz_target;
use simplegames::cli::parse_game;

fuzz_target!(|data: &[u8]| {
    let Ok(parsed) = parse_game(data) else {
        return;
    };
    let doc = parsed.document;
    if doc.n() > 16 {
        return;
    }
    let game = doc.to_game().expect("validated document builds a game");
    assert!(game.mwc().is_antichain());
    let again = parse_game(doc.to_json().as_bytes()).expect("rendered document parses");
    assert_eq!(again.document.to_game().unwrap(), game);
});
