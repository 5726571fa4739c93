use super::*;
use crate::lie::StructureViolation;
use crate::verify::{CheckRecord, VerificationReport};

const H1: &str = r#"{"name":"heisenberg1","dim":3,"basis":["x","y","z"],"brackets":{"x,y":{"z":"1"}}}"#;

fn algebra_doc(text: &str) -> AlgebraDocument {
    match parse(text).unwrap() {
        Document::Algebra(a) => a,
        other => panic!("expected an algebra document, got {other:?}"),
    }
}

#[test]
fn builtins_are_valid() {
    assert_eq!(abelian(3).dim(), 3);
    assert!(abelian(3).is_abelian());
    let h = heisenberg(1);
    assert_eq!(h.dim(), 3);
    assert_eq!(h.bracket_basis(0, 1), unit_vector(3, 2).as_slice());
    assert_eq!(heisenberg(2).dim(), 5);
    for (id, pair) in catalog_pairs() {
        assert!(pair.l().validate_structure().is_ok(), "{id}");
        assert!(pair.validate_compatible().is_ok(), "{id}");
    }
}

#[test]
fn heisenberg_center_pair() {
    let p = pair_center(heisenberg(1)).unwrap();
    assert_eq!(p.require_ideal().unwrap(), &Subspace::span(3, [unit_vector(3, 2)]).unwrap());
}

#[test]
fn selectors_parse_and_evaluate() {
    let e = parse_selector("builtin:pair_center(heisenberg(1))").unwrap();
    assert_eq!(e.to_string(), "pair_center(heisenberg(1))");
    assert!(matches!(evaluate(&e).unwrap(), Builtin::Pair(_)));
    assert!(matches!(
        evaluate(&parse_selector("builtin:nonabelian2").unwrap()).unwrap(),
        Builtin::Algebra(_)
    ));
    assert_eq!(
        parse_selector("builtin:abelian( 2 )").unwrap(),
        parse_selector("builtin:abelian(2)").unwrap()
    );
}

#[test]
fn selector_errors() {
    assert!(matches!(parse_selector("abelian(2)"), Err(SelectorError::MissingPrefix)));
    assert!(matches!(parse_selector("builtin:abelian(-1)"), Err(SelectorError::Syntax { .. })));
    assert!(matches!(parse_selector("builtin:abelian(2"), Err(SelectorError::Syntax { .. })));
    assert!(matches!(parse_selector("builtin:abelian(2))"), Err(SelectorError::Syntax { .. })));
    let eval = |s: &str| evaluate(&parse_selector(s).unwrap());
    assert!(matches!(eval("builtin:frobnicate(2)"), Err(SelectorError::UnknownName(_))));
    assert!(matches!(eval("builtin:abelian"), Err(SelectorError::BadArguments { .. })));
    assert!(matches!(eval("builtin:pair_full(3)"), Err(SelectorError::BadArguments { .. }) | Err(SelectorError::WrongKind { .. })));
    assert!(matches!(
        eval("builtin:pair_full(pair_full(abelian(1)))"),
        Err(SelectorError::WrongKind { .. })
    ));
    assert!(matches!(
        eval("builtin:pair_leading(heisenberg(1),1)"),
        Err(SelectorError::Construction { .. })
    ));
}

#[test]
fn heisenberg_document_round_trips() {
    let doc = algebra_doc(H1);
    assert_eq!(doc.to_string(), H1);
    let l = doc.to_algebra().unwrap();
    assert!(l.same_structure(&heisenberg(1)));
    assert_eq!(AlgebraDocument::from_algebra("heisenberg1", &l), doc);
}

#[test]
fn pair_documents() {
    let text = format!(r#"{{"algebra":{H1},"ideal":[["0","0","1"]]}}"#);
    let Document::Pair(doc) = parse(&text).unwrap() else {
        panic!("expected a pair document")
    };
    assert_eq!(doc.to_string(), text);
    let pair = doc.resolve(None).unwrap();
    assert_eq!(pair.n().dim(), 1);

    let text = format!(r#"{{"algebra":{H1},"ideal":"all"}}"#);
    let Document::Pair(doc) = parse(&text).unwrap() else {
        panic!("expected a pair document")
    };
    assert!(doc.resolve(None).unwrap().is_full());
    let back = PairDocument::from_pair("heisenberg1", &doc.resolve(None).unwrap()).unwrap();
    assert_eq!(back, doc);
}

#[test]
fn pair_document_with_file_reference() {
    let dir = std::env::temp_dir().join(format!("tensoralg-doc-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("h1.json"), H1).unwrap();
    std::fs::write(dir.join("pair.json"), r#"{"algebra":"h1.json","ideal":[["0","0","1"]]}"#).unwrap();
    let pair = load_pair(&dir.join("pair.json")).unwrap();
    assert_eq!(pair.n().dim(), 1);
    assert!(load_pair(&dir.join("h1.json")).unwrap().is_full());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn repeated_name_key_is_a_syntax_error() {
    let text = r#"{"name":"bad","dim":2,"basis":["x","y"],
"brackets":{"x,x":{"y":"1"}}}"#;
    match parse(text) {
        Err(DocumentError::Syntax { line, message, .. }) => {
            assert_eq!(line, 2);
            assert!(message.contains("x,x"), "{message}");
        }
        other => panic!("expected a syntax error, got {other:?}"),
    }
}

#[test]
fn malformed_documents() {
    for text in [
        "",
        "[]",
        r#"{"name":"a"}"#,
        r#"{"name":"a","dim":1,"basis":["x"],"brackets":{},"extra":1}"#,
        r#"{"name":"a","dim":"1","basis":["x"],"brackets":{}}"#,
        r#"{"name":"a","dim":2,"basis":["x","y"],"brackets":{"x,y":{"y":"1.5"}}}"#,
        r#"{"name":"a","dim":2,"basis":["x","y"],"brackets":{"x,y":{"y":1}}}"#,
        r#"{"name":"a","dim":2,"basis":["x","y"],"brackets":{"x":{"y":"1"}}}"#,
        r#"{"name":"a","dim":2,"basis":["x","y"],"brackets":{"x,y":{"y":"1","y":"2"}}}"#,
        r#"{"algebra":"f.json","ideal":"some"}"#,
        r#"{"algebra":"f.json"}"#,
        r#"{"name":"a","algebra":"f.json","ideal":"all"}"#,
    ] {
        assert!(matches!(parse(text), Err(DocumentError::Syntax { .. })), "{text}");
    }
}

#[test]
fn schema_errors() {
    for text in [
        r#"{"name":"a","dim":3,"basis":["x","y"],"brackets":{}}"#,
        r#"{"name":"a","dim":2,"basis":["x","x"],"brackets":{}}"#,
        r#"{"name":"a","dim":2,"basis":["x","y"],"brackets":{"y,x":{"y":"1"}}}"#,
        r#"{"name":"a","dim":2,"basis":["x","y"],"brackets":{"x,w":{"y":"1"}}}"#,
        r#"{"name":"a","dim":2,"basis":["x","y"],"brackets":{"x,y":{"w":"1"}}}"#,
    ] {
        let doc = algebra_doc(text);
        assert!(matches!(doc.to_algebra(), Err(DocumentError::Schema(_))), "{text}");
    }
}

#[test]
fn jacobi_violation_is_a_semantic_error_with_witness() {
    // [x,y]=y, [x,z]=z is valid; adding [y,z]=w breaks Jacobi on (x,y,z).
    let valid = r#"{"name":"a","dim":4,"basis":["x","y","z","w"],"brackets":{"x,y":{"y":"1"},"x,z":{"z":"1"}}}"#;
    assert!(algebra_doc(valid).to_algebra().is_ok());
    let broken = r#"{"name":"a","dim":4,"basis":["x","y","z","w"],"brackets":{"x,y":{"y":"1"},"x,z":{"z":"1"},"y,z":{"w":"1"}}}"#;
    match algebra_doc(broken).to_algebra() {
        Err(DocumentError::Semantic(crate::Error::InvalidStructure(StructureViolation::Jacobi {
            i: 0,
            j: 1,
            k: 2,
            m: 3,
            ..
        }))) => {}
        other => panic!("expected a Jacobi violation, got {other:?}"),
    }
}

#[test]
fn ideal_violation_is_semantic() {
    let text = format!(r#"{{"algebra":{H1},"ideal":[["1","0","0"]]}}"#);
    let Document::Pair(doc) = parse(&text).unwrap() else {
        panic!("expected a pair document")
    };
    let err = doc.resolve(None).unwrap_err();
    assert!(err.is_semantic(), "{err}");
    let text = format!(r#"{{"algebra":{H1},"ideal":[["1","0"]]}}"#);
    let Document::Pair(doc) = parse(&text).unwrap() else {
        panic!("expected a pair document")
    };
    assert!(matches!(doc.resolve(None), Err(DocumentError::Schema(_))));
}

#[test]
fn empty_report_serializes_to_header_only() {
    let r = VerificationReport::default();
    let text = serialize_report(&r, false);
    assert_eq!(
        text,
        format!("{}\n# summary: 0 records, 0 pass, 0 fail, 0 reported, 0 not-applicable\n", report::HEADER)
    );
    let machine: serde_json::Value = serde_json::from_str(&serialize_report(&r, true)).unwrap();
    assert_eq!(machine["records"].as_array().unwrap().len(), 0);
    assert_eq!(machine["summary"]["total"], 0);
}

#[test]
fn single_record_in_both_forms() {
    let mut r = VerificationReport::default();
    r.push(CheckRecord::new("p", "c", "a = b").dim("tensor", 2).outcome(true));
    let text = serialize_report(&r, false);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[1], "p\tc\ta = b\tpass\ttensor=2\t-\t-");
    let machine: serde_json::Value = serde_json::from_str(&serialize_report(&r, true)).unwrap();
    assert_eq!(machine["records"][0]["status"], "pass");
}

#[test]
fn report_lines_are_sorted() {
    let mut r = VerificationReport::default();
    r.push(CheckRecord::new("b", "x", "c").outcome(true));
    r.push(CheckRecord::new("a", "y", "c").outcome(true));
    r.push(CheckRecord::new("a", "x", "c").reporter().outcome(false));
    let text = serialize_report(&r, false);
    let keys: Vec<String> = text
        .lines()
        .skip(1)
        .take(3)
        .map(|l| l.split('\t').take(2).collect::<Vec<_>>().join("/"))
        .collect();
    assert_eq!(keys, ["a/x", "a/y", "b/x"]);
    assert!(text.contains("\treported\t"));
}
