//! Axiom-check reports. A violation records the axiom id, the basis tuple
//! where the two sides disagree, and both sides as ambient vectors. The pass
//! flag is true exactly when the violation list is empty.

use serde::{Deserialize, Serialize};

use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub lhs: Vec<Rat>,
    pub rhs: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    /// What was checked, e.g. `"dialgebra"` or `"lie-2-algebra"`.
    pub kind: String,
    /// Every axiom id that was evaluated at least once.
    pub checked: std::collections::BTreeSet<String>,
    /// Every violation, sorted by (axiom id, indices).
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn new(kind: impl Into<String>) -> Self {
        AxiomReport {
            kind: kind.into(),
            checked: std::collections::BTreeSet::new(),
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn record(&mut self, axiom: &str, indices: &[usize], lhs: Vec<Rat>, rhs: Vec<Rat>) {
        if !self.checked.contains(axiom) {
            self.checked.insert(axiom.to_string());
        }
        self.violations.push(Violation {
            axiom: axiom.to_string(),
            indices: indices.to_vec(),
            lhs,
            rhs,
        });
    }

    /// Records a violation when the two sides differ; returns whether they agreed.
    pub fn expect_eq(
        &mut self,
        axiom: &str,
        indices: &[usize],
        lhs: Vec<Rat>,
        rhs: Vec<Rat>,
    ) -> bool {
        if !self.checked.contains(axiom) {
            self.checked.insert(axiom.to_string());
        }
        if lhs == rhs {
            true
        } else {
            self.record(axiom, indices, lhs, rhs);
            false
        }
    }

    /// Canonical order: by axiom id, then indices. Checkers call this before
    /// returning so reports are deterministic.
    pub fn sort(&mut self) {
        self.violations
            .sort_by(|a, b| (&a.axiom, &a.indices).cmp(&(&b.axiom, &b.indices)));
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.checked.extend(other.checked);
        self.violations.extend(other.violations);
    }

    /// Axiom ids that have at least one violation, deduplicated, sorted.
    pub fn failing_axioms(&self) -> Vec<String> {
        let mut ids: Vec<String> = self.violations.iter().map(|v| v.axiom.clone()).collect();
        ids.sort();
        ids.dedup();
        ids
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn pass_iff_no_violations() {
        let mut r = AxiomReport::new("t");
        assert!(r.passed());
        r.record("a", &[0], vec![rat(1)], vec![rat(0)]);
        assert!(!r.passed());
    }

    #[test]
    fn sort_is_by_axiom_then_indices() {
        let mut r = AxiomReport::new("t");
        r.record("b", &[0, 0], vec![], vec![]);
        r.record("a", &[1, 0], vec![], vec![]);
        r.record("a", &[0, 2], vec![], vec![]);
        r.sort();
        let order: Vec<(String, Vec<usize>)> = r
            .violations
            .iter()
            .map(|v| (v.axiom.clone(), v.indices.clone()))
            .collect();
        assert_eq!(
            order,
            vec![
                ("a".into(), vec![0, 2]),
                ("a".into(), vec![1, 0]),
                ("b".into(), vec![0, 0])
            ]
        );
    }
}
