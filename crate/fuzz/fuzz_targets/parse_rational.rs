#![no_main]

use libfuzzer_sys::fuzz_target;
use tensoralg::scalar::{format_rational, parse_rational};

fuzz_target!(|text: &str| {
    if let Ok(value) = parse_rational(text) {
        let printed = format_rational(&value);
        assert_eq!(parse_rational(&printed).expect("printed rational parses"), value);
    }
});
