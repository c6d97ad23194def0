use serde::{Deserialize, Serialize};

/// Whether a failed report counts as a violation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportKind {
    /// Gated: a failure is a contract violation.
    Identity,
    /// Informational: recorded, never gated.
    Audit,
}

/// The relation asserted between `lhs` and `rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Eq,
    /// lhs ≤ rhs
    Le,
    /// lhs ≥ rhs
    Ge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Context {
    pub n: usize,
    pub seed: u64,
    pub einstein: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub lhs: f64,
    pub rhs: f64,
    /// `|lhs − rhs| / (1 + max(|lhs|, |rhs|))` for equalities; the same
    /// normalization of the violated amount for inequalities.
    pub residual: f64,
    pub tol: f64,
    pub passed: bool,
    pub context: Context,
    pub kind: ReportKind,
    pub relation: Relation,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

pub fn relative_residual(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs).abs() / (1.0 + lhs.abs().max(rhs.abs()))
}

impl IdentityReport {
    pub fn equality(id: &str, lhs: f64, rhs: f64, tol: f64, context: Context) -> Self {
        Self::build(id, lhs, rhs, tol, context, Relation::Eq)
    }

    pub fn inequality(id: &str, lhs: f64, relation: Relation, rhs: f64, tol: f64, context: Context) -> Self {
        Self::build(id, lhs, rhs, tol, context, relation)
    }

    fn build(id: &str, lhs: f64, rhs: f64, tol: f64, context: Context, relation: Relation) -> Self {
        let scale = 1.0 + lhs.abs().max(rhs.abs());
        let residual = match relation {
            Relation::Eq => relative_residual(lhs, rhs),
            Relation::Le => (lhs - rhs).max(0.0) / scale,
            Relation::Ge => (rhs - lhs).max(0.0) / scale,
        };
        // NaN residuals must fail
        let passed = residual <= tol;
        Self {
            identity_id: id.to_string(),
            lhs,
            rhs,
            residual,
            tol,
            passed,
            context,
            kind: ReportKind::Identity,
            relation,
            note: None,
        }
    }

    pub fn audit(mut self) -> Self {
        self.kind = ReportKind::Audit;
        self
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }

    /// A gated report that failed.
    pub fn is_violation(&self) -> bool {
        self.kind == ReportKind::Identity && !self.passed
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CTX: Context = Context { n: 4, seed: 0, einstein: false };

    #[test]
    fn residual_normalization() {
        let r = IdentityReport::equality("x", 1.0, 1.5, 0.1, CTX);
        assert!((r.residual - 0.2).abs() < 1e-15);
        assert!(!r.passed);
        assert!(IdentityReport::equality("x", 0.0, 1e-10, 1e-9, CTX).passed);
    }

    #[test]
    fn inequalities_only_penalize_violation() {
        assert!(IdentityReport::inequality("x", 5.0, Relation::Ge, 1.0, 0.0, CTX).passed);
        assert!(!IdentityReport::inequality("x", 5.0, Relation::Le, 1.0, 0.0, CTX).passed);
    }

    #[test]
    fn nan_fails_and_audits_do_not_gate() {
        let r = IdentityReport::equality("x", f64::NAN, 0.0, 1.0, CTX);
        assert!(!r.passed && r.is_violation());
        assert!(!r.audit().is_violation());
    }
}
