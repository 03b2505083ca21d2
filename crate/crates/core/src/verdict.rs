use serde::Serialize;

use crate::partitions::{Partition, SymPoly};
use crate::scalars::DRat;

/// Outcome of checking one identity over a parameter range.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct VerdictReport {
    pub identity: String,
    pub parameters: String,
    pub passed: bool,
    pub checks: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u_slot: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Partition>,
    pub difference: String,
}

impl VerdictReport {
    pub fn summary_line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{status} {} [{}] checks={}",
            self.identity, self.parameters, self.checks
        );
        if let Some(c) = &self.counterexample {
            s.push_str(" first difference");
            if let Some(p) = c.u_slot {
                s.push_str(&format!(" at u-slot {p}"));
            }
            if let Some(k) = &c.partition {
                s.push_str(&format!(" partition {k}"));
            }
            s.push_str(&format!(": {}", c.difference));
        }
        if let Some(n) = &self.note {
            s.push_str(&format!(" ({n})"));
        }
        s
    }
}

/// Accumulates comparisons and keeps the first counterexample.
pub struct VerdictBuilder {
    report: VerdictReport,
    label: Option<String>,
}

impl VerdictBuilder {
    pub fn new(identity: impl Into<String>, parameters: impl Into<String>) -> Self {
        VerdictBuilder {
            report: VerdictReport {
                identity: identity.into(),
                parameters: parameters.into(),
                passed: true,
                checks: 0,
                counterexample: None,
                note: None,
                details: Vec::new(),
            },
            label: None,
        }
    }

    /// Tags subsequent failures with the form being checked.
    pub fn label(&mut self, label: impl Into<String>) {
        self.label = Some(label.into());
    }

    pub fn sym(&mut self, u_slot: Option<usize>, lhs: &SymPoly, rhs: &SymPoly) -> bool {
        self.report.checks += 1;
        if lhs == rhs {
            return true;
        }
        let diff = lhs.sub(rhs);
        let (k, c) = diff.terms().next_back().expect("nonzero difference");
        self.fail_with(u_slot, Some(k.clone()), format!("{c} at m_{k}"));
        false
    }

    pub fn scalar(
        &mut self,
        u_slot: Option<usize>,
        partition: Option<&Partition>,
        lhs: &DRat,
        rhs: &DRat,
    ) -> bool {
        self.report.checks += 1;
        if lhs == rhs {
            return true;
        }
        self.fail_with(u_slot, partition.cloned(), format!("{}", lhs - rhs));
        false
    }

    pub fn fail_with(&mut self, u_slot: Option<usize>, partition: Option<Partition>, msg: String) {
        self.report.passed = false;
        if self.report.counterexample.is_none() {
            let difference = match &self.label {
                Some(l) => format!("[{l}] {msg}"),
                None => msg,
            };
            self.report.counterexample = Some(Counterexample {
                u_slot,
                partition,
                difference,
            });
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.report.note = Some(note.into());
    }

    pub fn detail(&mut self, line: impl Into<String>) {
        self.report.details.push(line.into());
    }

    pub fn count(&mut self) {
        self.report.checks += 1;
    }

    pub fn passed(&self) -> bool {
        self.report.passed
    }

    pub fn finish(self) -> VerdictReport {
        self.report
    }
}

/// Combines several reports into one, keeping the first failure.
pub fn merge_reports(
    identity: impl Into<String>,
    parameters: impl Into<String>,
    reports: &[VerdictReport],
) -> VerdictReport {
    let mut b = VerdictBuilder::new(identity, parameters);
    for r in reports {
        b.report.checks += r.checks;
        if !r.passed {
            b.report.passed = false;
            if b.report.counterexample.is_none() {
                let mut c = r.counterexample.clone().unwrap_or(Counterexample {
                    u_slot: None,
                    partition: None,
                    difference: String::new(),
                });
                c.difference = format!("{} [{}]: {}", r.identity, r.parameters, c.difference);
                b.report.counterexample = Some(c);
            }
        }
    }
    b.finish()
}
