//! Serializable views of results, with polynomials and paths rendered as
//! canonical text.
//!
//! Field order is fixed by the struct definitions, so the JSON produced for a
//! given result is byte-for-byte reproducible.

use serde::Serialize;

use crate::algebra::Polynomial;
use crate::groebner::{
    Ambiguity, Certificate, GbResult, GbStatus, Membership, OracleVerdict, OverlapWitness,
};
use crate::order::{AdmissibilityReport, OrderKind, PathOrder};
use crate::quiver::{Path, Quiver};
use crate::rewrite::{Side, StandardRepresentation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceReport {
    pub iteration: usize,
    pub i: usize,
    pub j: usize,
    pub p: String,
    pub q: String,
    pub added: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GbReport {
    pub side: Side,
    pub order: OrderKind,
    /// `completed` or `cap_reached`.
    pub status: &'static str,
    pub iterations: usize,
    pub pending: usize,
    pub basis: Vec<String>,
    pub trace: Vec<TraceReport>,
}

impl GbReport {
    pub fn new(quiver: &Quiver, res: &GbResult) -> GbReport {
        let (status, iterations, pending) = match res.status {
            GbStatus::Completed { iterations } => ("completed", iterations, 0),
            GbStatus::CapReached {
                iterations,
                pending,
            } => ("cap_reached", iterations, pending),
        };
        GbReport {
            side: res.side,
            order: res.order.kind(),
            status,
            iterations,
            pending,
            basis: res
                .basis
                .iter()
                .map(|f| f.format(quiver, &res.order))
                .collect(),
            trace: res
                .trace
                .iter()
                .map(|t| TraceReport {
                    iteration: t.iteration,
                    i: t.i,
                    j: t.j,
                    p: quiver.format_path(&t.witness.f_cofactor),
                    q: quiver.format_path(&t.witness.g_cofactor),
                    added: t.added.format(quiver, &res.order),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientTermReport {
    pub coeff: String,
    pub w: String,
    pub z: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub divisor: usize,
    pub terms: Vec<QuotientTermReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisionReport {
    pub side: Side,
    pub divisors: Vec<String>,
    pub quotients: Vec<QuotientReport>,
    pub remainder: String,
}

impl DivisionReport {
    pub fn new(quiver: &Quiver, order: &PathOrder, rep: &StandardRepresentation) -> DivisionReport {
        DivisionReport {
            side: rep.side,
            divisors: rep
                .divisors
                .iter()
                .map(|f| f.format(quiver, order))
                .collect(),
            quotients: rep
                .quotients
                .iter()
                .enumerate()
                .map(|(divisor, qs)| QuotientReport {
                    divisor,
                    terms: qs
                        .iter()
                        .map(|q| QuotientTermReport {
                            coeff: q.coeff.to_string(),
                            w: quiver.format_path(&q.left),
                            z: quiver.format_path(&q.right),
                        })
                        .collect(),
                })
                .collect(),
            remainder: rep.remainder.format(quiver, order),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverlapReport {
    pub kind: Side,
    pub p: String,
    pub q: String,
    pub s_polynomial: String,
}

impl OverlapReport {
    pub fn new(
        quiver: &Quiver,
        order: &PathOrder,
        w: &OverlapWitness,
        s: &Polynomial,
    ) -> OverlapReport {
        OverlapReport {
            kind: w.kind,
            p: quiver.format_path(&w.f_cofactor),
            q: quiver.format_path(&w.g_cofactor),
            s_polynomial: s.format(quiver, order),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureReport {
    pub i: usize,
    pub j: usize,
    /// `overlap` or `inclusion`.
    pub ambiguity: &'static str,
    pub p: String,
    pub q: String,
    pub s_polynomial: String,
    pub remainder: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub ok: bool,
    pub uniform: bool,
    pub leads_independent: bool,
    pub failures: Vec<FailureReport>,
}

impl CertificateReport {
    pub fn new(quiver: &Quiver, order: &PathOrder, cert: &Certificate) -> CertificateReport {
        CertificateReport {
            ok: cert.is_ok(),
            uniform: cert.uniform,
            leads_independent: cert.leads_independent,
            failures: cert
                .failures
                .iter()
                .map(|f| {
                    let (ambiguity, p, q) = match &f.ambiguity {
                        Ambiguity::Overlap(w) => ("overlap", &w.f_cofactor, &w.g_cofactor),
                        Ambiguity::Inclusion { left, right } => ("inclusion", right, left),
                    };
                    FailureReport {
                        i: f.i,
                        j: f.j,
                        ambiguity,
                        p: quiver.format_path(p),
                        q: quiver.format_path(q),
                        s_polynomial: f.s_poly.format(quiver, order),
                        remainder: f.remainder.format(quiver, order),
                    }
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub member: bool,
    pub heuristic: bool,
    pub normal_form: String,
    pub representation: Option<DivisionReport>,
}

impl MembershipReport {
    pub fn new(
        quiver: &Quiver,
        order: &PathOrder,
        m: &Membership,
        normal_form: &Polynomial,
    ) -> MembershipReport {
        MembershipReport {
            member: m.member,
            heuristic: m.heuristic,
            normal_form: normal_form.format(quiver, order),
            representation: m
                .representation
                .as_ref()
                .map(|r| DivisionReport::new(quiver, order, r)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    /// `member`, `not_member` or `inconclusive`.
    pub verdict: &'static str,
    pub detail: Option<String>,
}

impl OracleReport {
    pub fn new(v: &OracleVerdict) -> OracleReport {
        match v {
            OracleVerdict::Member => OracleReport {
                verdict: "member",
                detail: None,
            },
            OracleVerdict::NotMember => OracleReport {
                verdict: "not_member",
                detail: None,
            },
            OracleVerdict::Inconclusive(why) => OracleReport {
                verdict: "inconclusive",
                detail: Some(why.clone()),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ViolationReport {
    pub condition: crate::order::Condition,
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityJson {
    pub order: OrderKind,
    pub sample_size: usize,
    pub clean: bool,
    pub totality: usize,
    pub right_compatible: usize,
    pub left_compatible: usize,
    pub factor: usize,
    pub violations: Vec<ViolationReport>,
    pub descending_chain: Option<Vec<String>>,
}

impl AdmissibilityJson {
    pub fn new(
        quiver: &Quiver,
        order: &PathOrder,
        sample_size: usize,
        r: &AdmissibilityReport,
    ) -> AdmissibilityJson {
        let paths = |ps: &[Path]| ps.iter().map(|p| quiver.format_path(p)).collect::<Vec<_>>();
        AdmissibilityJson {
            order: order.kind(),
            sample_size,
            clean: r.is_clean(),
            totality: r.counts[0],
            right_compatible: r.counts[1],
            left_compatible: r.counts[2],
            factor: r.counts[3],
            violations: r
                .violations
                .iter()
                .map(|v| ViolationReport {
                    condition: v.condition,
                    witness: paths(&v.witness),
                })
                .collect(),
            descending_chain: r.descending_chain.as_deref().map(paths),
        }
    }
}
