#![no_main]

use libfuzzer_sys::fuzz_target;
use tensoralg::catalog::{parse, AlgebraSource, Document};

// Keeps the dense structure table small enough for a fuzzing loop.
const MAX_DIM: usize = 8;

fuzz_target!(|text: &str| {
    let Ok(doc) = parse(text) else {
        return;
    };
    let reparsed = parse(&doc.to_string()).expect("printed document parses");
    assert_eq!(doc, reparsed);
    match &doc {
        Document::Algebra(a) if a.dim <= MAX_DIM => {
            let _ = a.to_algebra();
        }
        Document::Pair(p) => {
            if let AlgebraSource::Inline(a) = &p.algebra {
                if a.dim <= MAX_DIM {
                    let _ = p.resolve(None);
                }
            }
        }
        _ => {}
    }
});
