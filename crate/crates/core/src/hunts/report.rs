use std::fmt;

/// Overall outcome; maps onto exit codes 0, 2 and 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    PassWithWarnings,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::PassWithWarnings => "PASS-WITH-WARNINGS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Line {
    Check {
        name: String,
        passed: bool,
        detail: String,
    },
    Warn(String),
    Note(String),
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Check {
                name,
                passed,
                detail,
            } => {
                let status = if *passed { "PASS" } else { "FAIL" };
                write!(f, "CHECK {name} {status} {detail}")
            }
            Line::Warn(s) => write!(f, "WARN {s}"),
            Line::Note(s) => write!(f, "NOTE {s}"),
        }
    }
}

/// Itemized verification output with a stable line grammar.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<Line>,
}

impl Report {
    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> bool {
        self.lines.push(Line::Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
        passed
    }

    pub fn warn(&mut self, s: impl Into<String>) {
        self.lines.push(Line::Warn(s.into()));
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.lines.push(Line::Note(s.into()));
    }

    pub fn verdict(&self) -> Verdict {
        let failed = self
            .lines
            .iter()
            .any(|l| matches!(l, Line::Check { passed: false, .. }));
        let warned = self.lines.iter().any(|l| matches!(l, Line::Warn(_)));
        match (failed, warned) {
            (true, _) => Verdict::Fail,
            (false, true) => Verdict::PassWithWarnings,
            (false, false) => Verdict::Pass,
        }
    }

    /// Whether the named check exists and passed.
    pub fn passed(&self, name: &str) -> Option<bool> {
        self.lines.iter().find_map(|l| match l {
            Line::Check {
                name: n, passed, ..
            } if n == name => Some(*passed),
            _ => None,
        })
    }

    pub fn failures(&self) -> impl Iterator<Item = &Line> {
        self.lines
            .iter()
            .filter(|l| matches!(l, Line::Check { passed: false, .. }))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        write!(f, "RESULT {}", self.verdict())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        let mut r = Report::default();
        r.check("edges", true, "17 of 17 exact");
        assert_eq!(r.verdict(), Verdict::Pass);
        r.warn("radius differs");
        assert_eq!(r.verdict(), Verdict::PassWithWarnings);
        r.check("chi", false, "3-colorable");
        assert_eq!(r.verdict(), Verdict::Fail);
        assert_eq!(r.passed("edges"), Some(true));
        assert_eq!(
            r.to_string(),
            "CHECK edges PASS 17 of 17 exact\nWARN radius differs\nCHECK chi FAIL 3-colorable\nRESULT FAIL"
        );
    }
}
