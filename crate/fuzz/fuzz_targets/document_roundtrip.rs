#![no_main]

use libfuzzer_sys::fuzz_target;
use simplegames::cli::{parse_game, GameDocument};

fuzz_target!(|data: &[u8]| {
    let Ok(parsed) = parse_game(data) else {
        return;
    };
    let doc = parsed.document;
    if doc.n() > 10 {
        return;
    }
    let game = doc.to_game().unwrap();
    let dual = game.dual();
    assert_eq!(dual.dual(), game);
    let rendered = GameDocument::from_game(doc.players.clone(), &dual).to_json();
    let back = parse_game(rendered.as_bytes()).expect("dual document parses");
    assert!(back.warnings.is_empty());
    assert_eq!(back.document.to_game().unwrap(), dual);
});
