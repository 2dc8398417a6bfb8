//! Verification reports shared by the CLI suites and the acceptance tests.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::DunklError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub name: String,
    pub status: CaseStatus,
    /// `"0"` for exact identities that hold, otherwise the residual.
    pub residual: String,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abs_residual: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rel_residual: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub system: String,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub cases: Vec<CaseRecord>,
}

pub fn fmt_complex(z: Complex64) -> String {
    format!("{:.16e}{:+.16e}i", z.re, z.im)
}

fn clip(s: String) -> String {
    const MAX: usize = 400;
    if s.len() <= MAX {
        return s;
    }
    let mut cut = MAX;
    while !s.is_char_boundary(cut) {
        cut -= 1;
    }
    format!("{}...", &s[..cut])
}

impl VerificationReport {
    pub fn new(suite: &str, system: &str, seed: u64) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            system: system.to_string(),
            seed,
            tolerance: None,
            cases: Vec::new(),
        }
    }

    fn push(&mut self, name: String, status: CaseStatus, residual: String, detail: String) -> &mut CaseRecord {
        self.cases.push(CaseRecord {
            name,
            status,
            residual,
            detail,
            lhs: None,
            rhs: None,
            abs_residual: None,
            rel_residual: None,
        });
        self.cases.last_mut().unwrap()
    }

    /// Records an exact identity; `residual` is the printed residual, which
    /// passes only when it is exactly zero.
    pub fn exact(&mut self, name: impl Into<String>, is_zero: bool, residual: impl std::fmt::Display, detail: impl Into<String>) {
        let (status, res) = if is_zero {
            (CaseStatus::Pass, "0".to_string())
        } else {
            (CaseStatus::Fail, clip(residual.to_string()))
        };
        self.push(name.into(), status, res, detail.into());
    }

    /// Records an exact equality `lhs == rhs`.
    pub fn exact_eq<T: PartialEq + std::fmt::Display>(&mut self, name: impl Into<String>, lhs: &T, rhs: &T, detail: impl Into<String>) {
        let ok = lhs == rhs;
        let residual = format!("{lhs} != {rhs}");
        let rec = self.push(
            name.into(),
            if ok { CaseStatus::Pass } else { CaseStatus::Fail },
            if ok { "0".into() } else { clip(residual) },
            detail.into(),
        );
        rec.lhs = Some(clip(lhs.to_string()));
        rec.rhs = Some(clip(rhs.to_string()));
    }

    /// Records a numeric comparison. With `relative`, the test is on the
    /// relative residual; otherwise on the absolute one.
    pub fn numeric(
        &mut self,
        name: impl Into<String>,
        lhs: Complex64,
        rhs: Complex64,
        tol: f64,
        relative: bool,
        detail: impl Into<String>,
    ) {
        let abs = (lhs - rhs).norm();
        let scale = lhs.norm().max(rhs.norm());
        let rel = if scale == 0.0 { 0.0 } else { abs / scale };
        let measured = if relative { rel } else { abs };
        let ok = measured.is_finite() && measured <= tol;
        let rec = self.push(
            name.into(),
            if ok { CaseStatus::Pass } else { CaseStatus::Fail },
            format!("{measured:.3e}"),
            detail.into(),
        );
        rec.lhs = Some(fmt_complex(lhs));
        rec.rhs = Some(fmt_complex(rhs));
        rec.abs_residual = Some(abs);
        rec.rel_residual = Some(rel);
    }

    /// Records a scalar residual compared against `tol`.
    pub fn scalar(&mut self, name: impl Into<String>, residual: f64, tol: f64, detail: impl Into<String>) {
        let ok = residual.is_finite() && residual <= tol;
        let rec = self.push(
            name.into(),
            if ok { CaseStatus::Pass } else { CaseStatus::Fail },
            format!("{residual:.3e}"),
            detail.into(),
        );
        rec.abs_residual = Some(residual);
    }

    pub fn skipped(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(name.into(), CaseStatus::Skipped, "-".into(), detail.into());
    }

    /// Records an error raised while evaluating a case.
    pub fn error(&mut self, name: impl Into<String>, err: &DunklError) {
        self.push(name.into(), CaseStatus::Fail, "error".into(), err.to_string());
    }

    /// Sorts the cases by name so the output order is stable.
    pub fn finish(mut self) -> Self {
        self.cases.sort_by(|a, b| a.name.cmp(&b.name));
        self
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.status != CaseStatus::Fail)
    }

    pub fn count(&self, status: CaseStatus) -> usize {
        self.cases.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| c.status == CaseStatus::Fail)
    }

    /// Largest numeric residual recorded (absolute), if any.
    pub fn max_abs_residual(&self) -> Option<f64> {
        self.cases.iter().filter_map(|c| c.abs_residual).reduce(f64::max)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn summary(&self) -> String {
        format!(
            "{} [{}]: {} pass, {} fail, {} skipped",
            self.suite,
            self.system,
            self.count(CaseStatus::Pass),
            self.count(CaseStatus::Fail),
            self.count(CaseStatus::Skipped)
        )
    }
}
