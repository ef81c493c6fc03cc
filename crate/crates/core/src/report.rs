//! Machine-readable outcome of one identity check.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Computed and recorded without asserting a stated formula.
    Logged,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Logged => "logged",
        }
    }
}

/// One verified identity: both sides serialized in canonical form.
///
/// A failing report always carries differing `lhs` and `rhs` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub paper_ref: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub detail: String,
}

impl CheckReport {
    /// Passes iff the canonical serializations agree.
    pub fn compare(
        id: impl Into<String>,
        anchor: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        detail: impl Into<String>,
    ) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        Self {
            check_id: id.into(),
            paper_ref: anchor.into(),
            status,
            lhs,
            rhs,
            detail: detail.into(),
        }
    }

    /// Passes iff `ok`; on failure the two sides must already differ.
    pub fn boolean(
        id: impl Into<String>,
        anchor: impl Into<String>,
        ok: bool,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        detail: impl Into<String>,
    ) -> Self {
        let (mut lhs, rhs) = (lhs.into(), rhs.into());
        if !ok && lhs == rhs {
            lhs.push_str(" (mismatch)");
        }
        Self {
            check_id: id.into(),
            paper_ref: anchor.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            lhs,
            rhs,
            detail: detail.into(),
        }
    }

    pub fn logged(
        id: impl Into<String>,
        anchor: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            check_id: id.into(),
            paper_ref: anchor.into(),
            status: Status::Logged,
            lhs: lhs.into(),
            rhs: rhs.into(),
            detail: detail.into(),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_report_keeps_sides_distinct() {
        let r = CheckReport::boolean("X", "", false, "a", "a", "");
        assert!(r.failed());
        assert_ne!(r.lhs, r.rhs);
        assert_eq!(CheckReport::compare("X", "", "a", "a", "").status, Status::Pass);
    }

    #[test]
    fn json_field_names() {
        let r = CheckReport::logged("EQ35", "ref", "l", "r", "d");
        let v = serde_json::to_string(&r).unwrap();
        assert_eq!(
            v,
            r#"{"check_id":"EQ35","paper_ref":"ref","status":"logged","lhs":"l","rhs":"r","detail":"d"}"#
        );
    }
}
