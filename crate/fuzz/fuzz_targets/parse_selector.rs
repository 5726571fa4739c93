#![no_main]

use libfuzzer_sys::fuzz_target;
use tensoralg::catalog::{parse_selector, PREFIX};

fuzz_target!(|text: &str| {
    if let Ok(expr) = parse_selector(text) {
        let printed = format!("{PREFIX}{expr}");
        assert_eq!(parse_selector(&printed).expect("printed selector parses"), expr);
    }
});
