//! Text and structured forms of verification reports.

use serde_json::{json, Map, Value};

use crate::scalar::format_rational;
use crate::verify::{CheckRecord, Summary, VerificationReport};

pub const HEADER: &str = "pair\tcheck\tclaim\tstatus\tdims\tflags\tnote";

/// Serializes a report: tab-separated lines sorted by pair and check plus a
/// summary block, or with `machine` a single JSON document.
pub fn serialize_report(report: &VerificationReport, machine: bool) -> String {
    let mut records: Vec<&CheckRecord> = report.records.iter().collect();
    records.sort_by(|a, b| (&a.pair, &a.check).cmp(&(&b.pair, &b.check)));
    let summary = report.summary();
    if machine {
        let doc = json!({
            "records": records.iter().map(|r| record_value(r)).collect::<Vec<_>>(),
            "summary": summary_value(&summary),
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("report is valid JSON");
        text.push('\n');
        return text;
    }
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&record_line(r));
        out.push('\n');
    }
    out.push_str(&format!(
        "# summary: {} records, {} pass, {} fail, {} reported, {} not-applicable\n",
        summary.total, summary.pass, summary.fail, summary.reported, summary.not_applicable
    ));
    out
}

fn clean(text: &str) -> String {
    if text.is_empty() {
        "-".to_string()
    } else {
        text.replace(['\t', '\n'], " ")
    }
}

fn record_line(r: &CheckRecord) -> String {
    let dims = r
        .dims
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",");
    let flags = r
        .flags
        .iter()
        .map(|(k, v)| format!("{k}={}", if *v { "yes" } else { "no" }))
        .collect::<Vec<_>>()
        .join(",");
    let mut note = r.note.clone();
    if !r.asserted {
        note = if note.is_empty() {
            "reporter".to_string()
        } else {
            format!("reporter; {note}")
        };
    }
    [
        clean(&r.pair),
        clean(&r.check),
        clean(&r.claim),
        r.status.as_str().to_string(),
        clean(&dims),
        clean(&flags),
        clean(&note),
    ]
    .join("\t")
}

fn record_value(r: &CheckRecord) -> Value {
    let dims: Map<String, Value> = r.dims.iter().map(|(k, v)| (k.clone(), Value::from(*v))).collect();
    let flags: Map<String, Value> = r.flags.iter().map(|(k, v)| (k.clone(), Value::from(*v))).collect();
    json!({
        "pair": r.pair,
        "check": r.check,
        "claim": r.claim,
        "asserted": r.asserted,
        "status": r.status.as_str(),
        "dims": dims,
        "flags": flags,
        "witness": r.witness.iter().map(|w| w.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "note": r.note,
    })
}

fn summary_value(s: &Summary) -> Value {
    json!({
        "total": s.total,
        "pass": s.pass,
        "fail": s.fail,
        "reported": s.reported,
        "not-applicable": s.not_applicable,
    })
}
