use std::fmt;

use crate::scalar::Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    /// A reporter check whose claim does not hold on this pair.
    Reported,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
            Status::Reported => "reported",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One check on one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub pair: String,
    pub check: String,
    /// The identity being checked, as a formula.
    pub claim: String,
    /// Whether a violation counts as a failure.
    pub asserted: bool,
    pub status: Status,
    pub dims: Vec<(String, usize)>,
    pub flags: Vec<(String, bool)>,
    pub witness: Vec<Vector>,
    /// Reason for `not-applicable`, or a description of the outcome.
    pub note: String,
}

impl CheckRecord {
    pub fn new(pair: &str, check: &str, claim: &str) -> Self {
        Self {
            pair: pair.to_string(),
            check: check.to_string(),
            claim: claim.to_string(),
            asserted: true,
            status: Status::Pass,
            dims: Vec::new(),
            flags: Vec::new(),
            witness: Vec::new(),
            note: String::new(),
        }
    }

    pub fn dim(mut self, name: &str, value: usize) -> Self {
        self.dims.push((name.to_string(), value));
        self
    }

    pub fn flag(mut self, name: &str, value: bool) -> Self {
        self.flags.push((name.to_string(), value));
        self
    }

    pub fn witness(mut self, v: Vector) -> Self {
        self.witness.push(v);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    /// Marks the check as a reporter.
    pub fn reporter(mut self) -> Self {
        self.asserted = false;
        self
    }

    pub fn asserted_if(mut self, asserted: bool) -> Self {
        self.asserted = asserted;
        self
    }

    pub fn outcome(mut self, holds: bool) -> Self {
        self.status = match (holds, self.asserted) {
            (true, _) => Status::Pass,
            (false, true) => Status::Fail,
            (false, false) => Status::Reported,
        };
        self
    }

    pub fn not_applicable(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::NotApplicable;
        self.note = reason.into();
        self
    }

    pub fn dim_of(&self, name: &str) -> Option<usize> {
        self.dims.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    pub fn flag_of(&self, name: &str) -> Option<bool> {
        self.flags.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub reported: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn push(&mut self, record: CheckRecord) {
        self.records.push(record);
    }

    pub fn extend(&mut self, records: impl IntoIterator<Item = CheckRecord>) {
        self.records.extend(records);
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.records.extend(other.records);
        self.sort();
    }

    /// Orders records by pair, then check name.
    pub fn sort(&mut self) {
        self.records
            .sort_by(|a, b| (&a.pair, &a.check).cmp(&(&b.pair, &b.check)));
    }

    pub fn has_failures(&self) -> bool {
        self.records.iter().any(|r| r.status == Status::Fail)
    }

    pub fn find(&self, pair: &str, check: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.pair == pair && r.check == check)
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary {
            total: self.records.len(),
            ..Summary::default()
        };
        for r in &self.records {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Reported => s.reported += 1,
                Status::NotApplicable => s.not_applicable += 1,
            }
        }
        s
    }
}
