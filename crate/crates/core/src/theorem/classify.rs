use serde::{Deserialize, Serialize};

use crate::catalog::{nine, p9_host, Name};
use crate::detect::{
    component_shapes, find_claw, find_cotriangle, find_triangle, ClawWitness, ComponentShape,
};
use crate::graph::Graph;
use crate::iso::{find_induced_embedding, is_induced_embedding, is_isomorphic, is_isomorphism};

/// Which of `U` and its complement a witness or shape list refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "U")]
    Direct,
    #[serde(rename = "complement")]
    Complement,
}

impl Side {
    fn graph(self, u: &Graph) -> Graph {
        match self {
            Side::Direct => u.clone(),
            Side::Complement => u.complement(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    #[serde(rename = "in")]
    pub side: Side,
    #[serde(flatten)]
    pub claw: ClawWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum MemberCase {
    /// `iso` maps `U` onto A6, or onto its complement when `complemented`.
    A6Case { complemented: bool, iso: Vec<usize> },
    /// Induced embedding of `U` into the catalog P9.
    P9Embedding { embedding: Vec<usize> },
    /// Components of `U` are cycles of length >= 4, paths or isolated vertices.
    DirectShape { shapes: Vec<ComponentShape> },
    /// The same for the complement of `U`.
    ComplementShape { shapes: Vec<ComponentShape> },
}

/// Outcome of [`classify`]: membership in the class of graphs `U` such that
/// neither `U` nor its complement contains an induced claw.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ForbCertificate {
    Member(MemberCase),
    NonMember {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<Witness>,
    },
}

impl ForbCertificate {
    pub fn is_member(&self) -> bool {
        matches!(self, ForbCertificate::Member(_))
    }

    /// Re-checks the certificate against `u` without trusting the classifier.
    pub fn validate(&self, u: &Graph) -> Result<(), &'static str> {
        match self {
            ForbCertificate::Member(MemberCase::A6Case { complemented, iso }) => {
                let a6 = if *complemented { Name::A6Bar } else { Name::A6 }
                    .graph()
                    .unwrap();
                if is_isomorphism(u, &a6, iso) {
                    Ok(())
                } else {
                    Err("A6 isomorphism does not hold")
                }
            }
            ForbCertificate::Member(MemberCase::P9Embedding { embedding }) => {
                if is_induced_embedding(u, p9_host(), embedding) {
                    Ok(())
                } else {
                    Err("not an induced embedding into P9")
                }
            }
            ForbCertificate::Member(MemberCase::DirectShape { shapes }) => {
                check_shapes(u, shapes, 4, false)
            }
            ForbCertificate::Member(MemberCase::ComplementShape { shapes }) => {
                check_shapes(&u.complement(), shapes, 4, false)
            }
            ForbCertificate::NonMember { witness } => match witness {
                Some(w) if w.claw.is_valid_in(&w.side.graph(u)) => Ok(()),
                Some(_) => Err("witness is not an induced claw"),
                None => Err("non-member verdict without a witness"),
            },
        }
    }
}

/// Checks that `shapes` lists every component of `g` exactly, each a cycle of
/// length >= `min_cycle` (even when `even` is set), a path or a single vertex.
pub(crate) fn check_shapes(
    g: &Graph,
    shapes: &[ComponentShape],
    min_cycle: usize,
    even: bool,
) -> Result<(), &'static str> {
    let mut covered = 0u64;
    for s in shapes {
        if !s.is_exact_in(g) {
            return Err("component shape does not match the graph");
        }
        if !s.is_simple(min_cycle, even) {
            return Err("component is not a permitted cycle, path or isolated vertex");
        }
        for &v in &s.vertices {
            if covered >> v & 1 == 1 {
                return Err("components overlap");
            }
            covered |= 1 << v;
        }
    }
    if covered == g.vertex_mask() {
        Ok(())
    } else {
        Err("components do not cover the vertex set")
    }
}

fn witness_in(u: &Graph) -> Option<Witness> {
    find_claw(u)
        .map(|claw| Witness {
            side: Side::Direct,
            claw,
        })
        .or_else(|| {
            find_claw(&u.complement()).map(|claw| Witness {
                side: Side::Complement,
                claw,
            })
        })
}

/// Structural membership test with a checkable certificate.
///
/// A triangle-free graph (or one whose complement is triangle-free) is a
/// member exactly when its components are long cycles, paths or isolated
/// vertices. A graph with both a triangle and an independent triple is a
/// member only when it is isomorphic to one of the nine catalog graphs.
pub fn classify(u: &Graph) -> ForbCertificate {
    if find_triangle(u).is_none() {
        let shapes = component_shapes(u);
        return if shapes.iter().all(|s| s.is_simple(4, false)) {
            ForbCertificate::Member(MemberCase::DirectShape { shapes })
        } else {
            ForbCertificate::NonMember {
                witness: witness_in(u),
            }
        };
    }
    if find_cotriangle(u).is_none() {
        let shapes = component_shapes(&u.complement());
        return if shapes.iter().all(|s| s.is_simple(4, false)) {
            ForbCertificate::Member(MemberCase::ComplementShape { shapes })
        } else {
            ForbCertificate::NonMember {
                witness: witness_in(u),
            }
        };
    }
    if (5..=9).contains(&u.n()) {
        for entry in nine().iter().filter(|e| e.graph.n() == u.n()) {
            let Some(iso) = is_isomorphic(u, &entry.graph) else {
                continue;
            };
            let case = match (entry.name, &entry.p9_embedding) {
                (Name::A6, _) => MemberCase::A6Case {
                    complemented: false,
                    iso,
                },
                (Name::A6Bar, _) => MemberCase::A6Case {
                    complemented: true,
                    iso,
                },
                (_, Some(emb)) => MemberCase::P9Embedding {
                    embedding: iso.iter().map(|&v| emb[v]).collect(),
                },
                (name, None) => unreachable!("{name} has no P9 embedding"),
            };
            return ForbCertificate::Member(case);
        }
    }
    ForbCertificate::NonMember {
        witness: witness_in(u),
    }
}

/// Which alternative of the structural decomposability condition holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum Condition3 {
    /// Components of `U` are even cycles, paths or isolated vertices.
    DirectShape { shapes: Vec<ComponentShape> },
    /// The same for the complement.
    ComplementShape { shapes: Vec<ComponentShape> },
    /// `U` is an induced subgraph of P9.
    P9Embedding { embedding: Vec<usize> },
    /// None holds; the first offending component on each side is reported.
    Fails {
        direct: ComponentShape,
        complement: ComponentShape,
    },
}

impl Condition3 {
    pub fn holds(&self) -> bool {
        !matches!(self, Condition3::Fails { .. })
    }

    pub fn validate(&self, u: &Graph) -> Result<(), &'static str> {
        match self {
            Condition3::DirectShape { shapes } => check_shapes(u, shapes, 3, true),
            Condition3::ComplementShape { shapes } => {
                check_shapes(&u.complement(), shapes, 3, true)
            }
            Condition3::P9Embedding { embedding } => {
                if is_induced_embedding(u, p9_host(), embedding) {
                    Ok(())
                } else {
                    Err("not an induced embedding into P9")
                }
            }
            Condition3::Fails { direct, complement } => {
                let ok = direct.is_exact_in(u)
                    && !direct.is_simple(3, true)
                    && complement.is_exact_in(&u.complement())
                    && !complement.is_simple(3, true)
                    && (u.n() > 9 || find_induced_embedding(u, p9_host()).is_none());
                if ok {
                    Ok(())
                } else {
                    Err("failure report is not genuine")
                }
            }
        }
    }
}

pub fn condition3(u: &Graph) -> Condition3 {
    let direct = component_shapes(u);
    let bad_direct = direct.iter().position(|s| !s.is_simple(3, true));
    let Some(bad_direct) = bad_direct else {
        return Condition3::DirectShape { shapes: direct };
    };
    let comp = component_shapes(&u.complement());
    let bad_comp = comp.iter().position(|s| !s.is_simple(3, true));
    let Some(bad_comp) = bad_comp else {
        return Condition3::ComplementShape { shapes: comp };
    };
    if u.n() <= 9 {
        if let Some(embedding) = find_induced_embedding(u, p9_host()) {
            return Condition3::P9Embedding { embedding };
        }
    }
    Condition3::Fails {
        direct: direct[bad_direct].clone(),
        complement: comp[bad_comp].clone(),
    }
}
