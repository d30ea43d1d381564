//! Gröbner certificates and ideal membership.

use crate::algebra::Polynomial;
use crate::error::Result;
use crate::order::PathOrder;
use crate::quiver::{factor_occurrences, Path};
use crate::rewrite::{locate, Reducer, Side, StandardRepresentation};

use super::overlap::{inclusion_polynomial, overlap_witnesses, s_polynomial, OverlapWitness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ambiguity {
    Overlap(OverlapWitness),
    /// `LM(gᵢ) = left∘LM(gⱼ)∘right`.
    Inclusion {
        left: Path,
        right: Path,
    },
}

/// An ambiguity between elements `i` and `j` that does not resolve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub i: usize,
    pub j: usize,
    pub ambiguity: Ambiguity,
    pub s_poly: Polynomial,
    pub remainder: Polynomial,
}

/// Outcome of [`is_groebner`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// Every non-resolving ambiguity, in `(i, j)` order.
    pub failures: Vec<Failure>,
    /// Each element has a single source (left), target (right) or both
    /// (two-sided).
    pub uniform: bool,
    /// No leading monomial divides another on the given side.
    pub leads_independent: bool,
}

impl Certificate {
    pub fn is_ok(&self) -> bool {
        self.uniform && self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

fn side_uniform(f: &Polynomial, side: Side) -> bool {
    match side {
        Side::Left => f.source_components().len() == 1,
        Side::Right => f.target_components().len() == 1,
        Side::TwoSided => f.is_uniform(),
    }
}

/// Reduces every S-polynomial of `basis` (self-overlaps and concatenations
/// included) by `basis`. For two-sided sets whose leading monomials are not
/// pairwise independent, the inclusion ambiguities are checked as well, so the
/// certificate stays valid for sets that were never interreduced.
pub fn is_groebner(basis: &[Polynomial], order: &PathOrder, side: Side) -> Result<Certificate> {
    let reducer = Reducer::new(*order, side);
    reducer.check_order()?;
    let leads = basis
        .iter()
        .map(|f| f.leading_monomial(order))
        .collect::<Result<Vec<_>>>()?;

    let mut failures = Vec::new();
    let mut leads_independent = true;
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            for w in overlap_witnesses(&leads[i], &leads[j], side, false) {
                let s = s_polynomial(&basis[i], &basis[j], &w, order)?;
                if s.is_zero() {
                    continue;
                }
                let r = reducer.reduce_total(&s, basis)?;
                if !r.is_zero() {
                    failures.push(Failure {
                        i,
                        j,
                        ambiguity: Ambiguity::Overlap(w),
                        s_poly: s,
                        remainder: r,
                    });
                }
            }
            if i == j || locate(side, &leads[j], &leads[i]).is_none() {
                continue;
            }
            leads_independent = false;
            if side != Side::TwoSided {
                continue;
            }
            for (left, right) in factor_occurrences(&leads[j], &leads[i]) {
                let s = inclusion_polynomial(&basis[i], &basis[j], &left, &right, order)?;
                let r = reducer.reduce_total(&s, basis)?;
                if !r.is_zero() {
                    failures.push(Failure {
                        i,
                        j,
                        ambiguity: Ambiguity::Inclusion { left, right },
                        s_poly: s,
                        remainder: r,
                    });
                }
            }
        }
    }
    Ok(Certificate {
        failures,
        uniform: basis.iter().all(|f| side_uniform(f, side)),
        leads_independent,
    })
}

/// Outcome of [`ideal_member`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// Set when `basis` failed certification, so a nonzero remainder does not
    /// prove non-membership.
    pub heuristic: bool,
    /// The standard representation with zero remainder, when `member`.
    pub representation: Option<StandardRepresentation>,
}

/// Decides `f ∈ ⟨basis⟩` by reducing `f` to its normal form.
pub fn ideal_member(
    f: &Polynomial,
    basis: &[Polynomial],
    order: &PathOrder,
    side: Side,
) -> Result<Membership> {
    let heuristic = !is_groebner(basis, order, side)?.is_ok();
    if f.is_zero() {
        return Ok(Membership {
            member: true,
            heuristic,
            representation: None,
        });
    }
    let rep = Reducer::new(*order, side).divide(f, basis)?;
    let member = rep.remainder.is_zero();
    Ok(Membership {
        member,
        heuristic,
        representation: member.then_some(rep),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar;
    use crate::order::OrderKind;
    use crate::quiver::Quiver;

    fn q43(arrows: &[&str]) -> Quiver {
        let all = [
            ("a", "v1", "v2"),
            ("b", "v2", "v4"),
            ("g", "v1", "v3"),
            ("d", "v3", "v4"),
            ("e", "v4", "v4"),
        ];
        let decl: Vec<(&str, &str, &str)> = arrows
            .iter()
            .map(|n| *all.iter().find(|a| a.0 == *n).unwrap())
            .collect();
        Quiver::new(&["v1", "v2", "v3", "v4"], &decl).unwrap()
    }

    fn p(q: &Quiver, w: &str) -> Path {
        let names: Vec<String> = w.chars().map(|c| c.to_string()).collect();
        q.path_from_names(&names).unwrap()
    }

    fn gens(q: &Quiver) -> Vec<Polynomial> {
        vec![
            Polynomial::from_terms([(scalar(1), p(q, "ab")), (scalar(-1), p(q, "gd"))]),
            Polynomial::monomial(p(q, "be")),
            Polynomial::monomial(p(q, "eee")),
        ]
    }

    #[test]
    fn ordering_b_fails_then_passes() {
        let q = q43(&["e", "b", "d", "g", "a"]);
        let o = PathOrder::new(OrderKind::LenLlex);
        let g = gens(&q);
        let cert = is_groebner(&g, &o, Side::TwoSided).unwrap();
        assert!(!cert.is_ok());
        let fail = cert.first_failure().unwrap();
        assert_eq!((fail.i, fail.j), (0, 1));
        assert_eq!(
            fail.ambiguity,
            Ambiguity::Overlap(OverlapWitness {
                kind: Side::TwoSided,
                f_cofactor: p(&q, "e"),
                g_cofactor: p(&q, "a"),
            })
        );
        assert_eq!(
            fail.remainder,
            Polynomial::from_terms([(scalar(-1), p(&q, "gde"))])
        );

        let mut g4 = g.clone();
        g4.push(Polynomial::monomial(p(&q, "gde")));
        assert!(is_groebner(&g4, &o, Side::TwoSided).unwrap().is_ok());
        let m = ideal_member(&Polynomial::monomial(p(&q, "gde")), &g4, &o, Side::TwoSided).unwrap();
        assert!(m.member && !m.heuristic);
        assert!(m
            .representation
            .unwrap()
            .check(&Polynomial::monomial(p(&q, "gde")), &o)
            .is_ok());
    }

    #[test]
    fn ordering_a_passes() {
        let q = q43(&["e", "b", "d", "a", "g"]);
        let o = PathOrder::new(OrderKind::LenLlex);
        assert!(is_groebner(&gens(&q), &o, Side::TwoSided).unwrap().is_ok());
    }

    #[test]
    fn singleton_monomial_is_groebner() {
        let q = Quiver::new(&["v"], &[("x", "v", "v"), ("y", "v", "v")]).unwrap();
        let o = PathOrder::default();
        for side in [Side::Left, Side::Right, Side::TwoSided] {
            let cert = is_groebner(&[Polynomial::monomial(p(&q, "xyx"))], &o, side).unwrap();
            assert!(cert.is_ok(), "{side}");
        }
    }

    #[test]
    fn inclusions_are_checked() {
        let q = Quiver::new(&["v"], &[("x", "v", "v"), ("y", "v", "v")]).unwrap();
        let o = PathOrder::default();
        // yx and yxy - x: the inclusion yxy = (yx)y leaves x·y... unresolved
        let f = Polynomial::from_terms([(scalar(1), p(&q, "yxy")), (scalar(-1), p(&q, "x"))]);
        let g = Polynomial::monomial(p(&q, "yx"));
        let cert = is_groebner(&[f, g], &o, Side::TwoSided).unwrap();
        assert!(!cert.leads_independent);
        assert!(cert
            .failures
            .iter()
            .any(|fl| matches!(fl.ambiguity, Ambiguity::Inclusion { .. })));
    }

    #[test]
    fn membership_of_zero_and_nonmembers() {
        let q = Quiver::new(&["v"], &[("x", "v", "v"), ("y", "v", "v")]).unwrap();
        let o = PathOrder::default();
        let basis = vec![Polynomial::monomial(p(&q, "xx"))];
        assert!(
            ideal_member(&Polynomial::zero(), &basis, &o, Side::TwoSided)
                .unwrap()
                .member
        );
        let m = ideal_member(
            &Polynomial::monomial(p(&q, "xyx")),
            &basis,
            &o,
            Side::TwoSided,
        )
        .unwrap();
        assert!(!m.member && m.representation.is_none());
        assert!(
            ideal_member(
                &Polynomial::monomial(p(&q, "yxxy")),
                &basis,
                &o,
                Side::TwoSided
            )
            .unwrap()
            .member
        );
    }
}
