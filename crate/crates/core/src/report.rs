//! Structured pass/fail records for numerical claims.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum Status {
    Pass,
    Fail,
    /// Not applicable to this input, e.g. a perpendicularity test on a
    /// triangle whose Brocard axis is undefined.
    Skipped(&'static str),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    /// Residual or deviation; `NaN` always fails.
    pub value: f64,
    pub tolerance: f64,
    pub status: Status,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Pass => write!(f, "PASS {} {:.3e} <= {:.0e}", self.name, self.value, self.tolerance),
            Status::Fail => write!(f, "FAIL {} {:.3e} > {:.0e}", self.name, self.value, self.tolerance),
            Status::Skipped(why) => write!(f, "SKIP {} ({why})", self.name),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    /// Record `value ≤ tolerance`.
    pub fn check(&mut self, name: impl Into<String>, value: f64, tolerance: f64) -> bool {
        let ok = value <= tolerance;
        self.checks.push(Check {
            name: name.into(),
            value,
            tolerance,
            status: if ok { Status::Pass } else { Status::Fail },
        });
        ok
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: &'static str) {
        self.checks.push(Check { name: name.into(), value: 0.0, tolerance: 0.0, status: Status::Skipped(reason) });
    }

    /// A failure with no meaningful residual, such as an error from a solver.
    pub fn fail(&mut self, name: impl Into<String>) {
        self.checks.push(Check { name: name.into(), value: f64::NAN, tolerance: 0.0, status: Status::Fail });
    }

    pub fn append(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// Largest recorded value among checks whose name starts with `prefix`.
    pub fn worst(&self, prefix: &str) -> f64 {
        self.checks
            .iter()
            .filter(|c| c.name.starts_with(prefix))
            .map(|c| c.value)
            .fold(0.0, |m, v| if v.is_nan() || v > m { v } else { m })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nan_fails_and_skip_passes() {
        let mut r = Report::new();
        assert!(r.check("ok", 1e-12, 1e-10));
        r.skip("axis", "equilateral");
        assert!(r.passed());
        assert!(!r.check("nan", f64::NAN, 1.0));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        assert!(r.worst("nan").is_nan());
    }
}
