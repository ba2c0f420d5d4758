//! Certificates returned by the constructions: vertex sets with a claimed
//! role, and vertex mappings into colours or a tournament.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::digraph::{Digraph, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::oracles::{is_homomorphism, longest_path_oracle};
use crate::oriented::tournament::Tournament;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Kernel,
    QuasiKernel,
    /// Independent set meeting every longest path.
    Transversal,
    Independent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedSet {
    pub members: VertexSet,
    pub role: Role,
    /// Decomposition stage the set was built for.
    pub stage: usize,
    /// For quasi-kernels: `2 |members| <= n`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size_bound_met: Option<bool>,
    #[serde(default)]
    pub verified: bool,
}

impl CertifiedSet {
    /// Checks `members` against the predicate of `role` on `d` and returns
    /// the certificate, or a verification error naming the failure.
    pub fn certify(d: &Digraph, members: VertexSet, role: Role, stage: usize) -> Result<Self> {
        let mut c = CertifiedSet {
            members,
            role,
            stage,
            size_bound_met: None,
            verified: false,
        };
        if role == Role::QuasiKernel {
            c.size_bound_met = Some(2 * c.members.len() <= d.n());
        }
        if !c.check(d)? {
            return Err(Error::verification(format!(
                "{:?} {:?} fails on stage {stage}",
                role, c.members
            )));
        }
        c.verified = true;
        Ok(c)
    }

    /// Evaluates the role predicate. Transversals need the longest-path
    /// oracle and inherit its order cap.
    pub fn check(&self, d: &Digraph) -> Result<bool> {
        if let Some(&v) = self.members.iter().find(|&&v| v >= d.n()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: d.n(),
            });
        }
        Ok(match self.role {
            Role::Kernel => d.is_kernel(&self.members),
            Role::QuasiKernel => d.is_quasi_kernel(&self.members),
            Role::Independent => d.is_independent(&self.members),
            Role::Transversal => {
                d.is_independent(&self.members) && meets_every_longest_path(d, &self.members)?
            }
        })
    }
}

pub fn meets_every_longest_path(d: &Digraph, set: &VertexSet) -> Result<bool> {
    let report = longest_path_oracle(d)?;
    Ok(report
        .paths
        .iter()
        .all(|p| p.iter().any(|v| set.contains(v))))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// Colours `1..=k`.
    Colors(usize),
    Tournament(Tournament),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MappingKind {
    Proper,
    /// Homomorphism into a tournament.
    Oriented,
    Homomorphism,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMapping {
    #[serde(serialize_with = "as_map", deserialize_with = "from_map")]
    pub assignment: Vec<usize>,
    pub target: Target,
    pub kind: MappingKind,
}

fn as_map<S: Serializer>(a: &[usize], s: S) -> std::result::Result<S::Ok, S::Error> {
    a.iter()
        .enumerate()
        .collect::<BTreeMap<_, _>>()
        .serialize(s)
}

fn from_map<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<usize>, D::Error> {
    let m = BTreeMap::<Vertex, usize>::deserialize(d)?;
    if m.keys().copied().ne(0..m.len()) {
        return Err(serde::de::Error::custom("assignment keys must be 0..n"));
    }
    Ok(m.into_values().collect())
}

impl VertexMapping {
    pub fn check(&self, d: &Digraph) -> bool {
        if self.assignment.len() != d.n() {
            return false;
        }
        match (&self.target, self.kind) {
            (Target::Colors(k), MappingKind::Proper) => {
                self.assignment.iter().all(|&c| (1..=*k).contains(&c))
                    && d.arcs()
                        .all(|(u, v)| self.assignment[u] != self.assignment[v])
            }
            (Target::Tournament(t), MappingKind::Oriented | MappingKind::Homomorphism) => {
                is_homomorphism(d, &t.to_digraph(), &self.assignment)
            }
            _ => false,
        }
    }

    pub(crate) fn verified(self, d: &Digraph, what: &str) -> Result<Self> {
        if self.check(d) {
            Ok(self)
        } else {
            Err(Error::verification(format!(
                "{what}: {:?} fails",
                self.assignment
            )))
        }
    }

    /// Number of distinct values used.
    pub fn values_used(&self) -> usize {
        self.assignment
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certify_rejects_wrong_role() {
        let c4 = Digraph::cycle(4);
        let k: VertexSet = [0, 2].into();
        assert!(
            CertifiedSet::certify(&c4, k.clone(), Role::Kernel, 0)
                .unwrap()
                .verified
        );
        assert!(matches!(
            CertifiedSet::certify(&c4, [0].into(), Role::Kernel, 0),
            Err(Error::Verification(_))
        ));
        let q =
            CertifiedSet::certify(&Digraph::cycle(3), [0].into(), Role::QuasiKernel, 0).unwrap();
        assert_eq!(q.size_bound_met, Some(true));
        let t =
            CertifiedSet::certify(&Digraph::cycle(6), [0].into(), Role::Transversal, 0).unwrap();
        assert!(t.verified);
    }

    #[test]
    fn mapping_json_uses_vertex_keys() {
        let m = VertexMapping {
            assignment: vec![1, 2, 3],
            target: Target::Colors(3),
            kind: MappingKind::Proper,
        };
        let v = serde_json::to_value(&m).unwrap();
        assert_eq!(v["assignment"], serde_json::json!({"0": 1, "1": 2, "2": 3}));
        assert_eq!(v["target"], serde_json::json!({"colors": 3}));
        let back: VertexMapping = serde_json::from_value(v).unwrap();
        assert_eq!(back, m);
        assert!(m.check(&Digraph::cycle(3)));
        assert_eq!(m.values_used(), 3);
    }
}
