#![no_main]

use libfuzzer_sys::fuzz_target;
use simplegames::cli::document::{parse_weights_flag, weighted_document};

fuzz_target!(|data: (&str, u64)| {
    let (text, quota) = data;
    let Ok(weights) = parse_weights_flag(text) else {
        return;
    };
    let rendered: Vec<String> = weights.iter().map(u64::to_string).collect();
    assert_eq!(parse_weights_flag(&rendered.join(",")).unwrap(), weights);
    if let Ok(parsed) = weighted_document(text, quota) {
        assert_eq!(parsed.document.weights.as_deref(), Some(&weights[..]));
        if weights.len() <= 16 {
            let game = parsed.document.to_game().unwrap();
            assert!(game.mwc().is_antichain());
        }
    }
});
