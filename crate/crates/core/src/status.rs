use serde::Serialize;

/// Outcome of comparing a stated claim with the computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    /// The claim fails as stated; a documented corrected form holds.
    Erratum,
    Fail,
}

impl Status {
    /// `Pass` if `literal`, else `Erratum` if `corrected`, else `Fail`.
    pub fn of(literal: bool, corrected: bool) -> Status {
        match (literal, corrected) {
            (true, _) => Status::Pass,
            (false, true) => Status::Erratum,
            (false, false) => Status::Fail,
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Erratum => "ERRATUM",
            Status::Fail => "FAIL",
        })
    }
}
