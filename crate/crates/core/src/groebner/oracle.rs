//! Brute-force ideal membership by linear algebra over a bounded span.
//!
//! The products `u·g·w` of generators with paths, cut off at a total length
//! bound, span a finite-dimensional subspace of the ideal. Membership in that
//! subspace is decided by exact Gaussian elimination and shares no code with
//! the rewriting layer.

use std::collections::BTreeMap;

use crate::algebra::Polynomial;
use crate::order::PathOrder;
use crate::quiver::{Path, Quiver};
use crate::rewrite::Side;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Member,
    NotMember,
    /// The bounded span does not contain `f`, but the bound does not suffice
    /// to rule membership out, or the inputs exceed the bound.
    Inconclusive(String),
}

impl OracleVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, OracleVerdict::Member)
    }
}

/// Row-echelon basis keyed by pivot monomial.
#[derive(Default)]
struct Echelon {
    rows: BTreeMap<Path, Polynomial>,
    order: PathOrder,
}

impl Echelon {
    /// Eliminates pivots from `v` until its top monomial is new.
    fn reduce(&self, mut v: Polynomial) -> Polynomial {
        while let Ok(top) = v.leading(&self.order) {
            let Some(row) = self.rows.get(&top.path) else {
                break;
            };
            v = &v - &row.scale(&top.coeff);
        }
        v
    }

    fn insert(&mut self, v: Polynomial) {
        let v = self.reduce(v);
        if let Ok(m) = v.monic(&self.order) {
            let pivot = m.leading_monomial(&self.order).expect("nonzero");
            self.rows.insert(pivot, m);
        }
    }
}

/// Decides whether `f` lies in the span of all side-appropriate products of
/// `generators` with paths whose monomials have length at most `max_len`.
///
/// A `Member` verdict is always sound. `NotMember` is only returned when the
/// bounded span provably holds every element of the ideal up to `max_len`:
/// either every generator is homogeneous, so each graded piece is spanned by
/// products within the bound, or the quiver is acyclic and no path is longer
/// than `max_len`.
pub fn membership_oracle(
    quiver: &Quiver,
    f: &Polynomial,
    generators: &[Polynomial],
    side: Side,
    max_len: usize,
) -> OracleVerdict {
    if f.is_zero() {
        return OracleVerdict::Member;
    }
    if f.max_path_len() > max_len || generators.iter().any(|g| g.max_path_len() > max_len) {
        return OracleVerdict::Inconclusive(format!("inputs exceed the length bound {max_len}"));
    }

    let pieces: Vec<Polynomial> = generators
        .iter()
        .flat_map(|g| match side {
            Side::Left => g
                .source_components()
                .into_iter()
                .map(|(_, p)| p)
                .collect::<Vec<_>>(),
            Side::Right => g.target_components().into_iter().map(|(_, p)| p).collect(),
            Side::TwoSided => g
                .uniform_components()
                .into_iter()
                .map(|(_, _, p)| p)
                .collect(),
        })
        .filter(|p| !p.is_zero())
        .collect();

    let paths = quiver.paths_up_to(max_len);
    let mut span = Echelon::default();
    for g in &pieces {
        let room = max_len - g.max_path_len();
        let lefts: Vec<&Path> = match side {
            Side::Right => Vec::new(),
            _ => paths.iter().filter(|u| u.len() <= room).collect(),
        };
        let rights: Vec<&Path> = match side {
            Side::Left => Vec::new(),
            _ => paths.iter().filter(|w| w.len() <= room).collect(),
        };
        match side {
            Side::Left => {
                for u in lefts {
                    span.insert(g.mul_path_left(u));
                }
            }
            Side::Right => {
                for w in rights {
                    span.insert(g.mul_path_right(w));
                }
            }
            Side::TwoSided => {
                for u in &lefts {
                    let ug = g.mul_path_left(u);
                    if ug.is_zero() {
                        continue;
                    }
                    for w in rights.iter().filter(|w| u.len() + w.len() <= room) {
                        span.insert(ug.mul_path_right(w));
                    }
                }
            }
        }
    }

    if span.reduce(f.clone()).is_zero() {
        OracleVerdict::Member
    } else if generators.iter().all(Polynomial::is_homogeneous)
        || bound_covers_quiver(quiver, max_len)
    {
        OracleVerdict::NotMember
    } else {
        OracleVerdict::Inconclusive(format!(
            "not in the span of products up to length {max_len}"
        ))
    }
}

fn bound_covers_quiver(quiver: &Quiver, max_len: usize) -> bool {
    quiver
        .all_paths()
        .is_ok_and(|paths| paths.iter().all(|p| p.len() <= max_len))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar;

    fn two_loops() -> Quiver {
        Quiver::new(&["v"], &[("y", "v", "v"), ("x", "v", "v")]).unwrap()
    }

    fn word(q: &Quiver, w: &str) -> Path {
        let names: Vec<String> = w.chars().map(|c| c.to_string()).collect();
        q.path_from_names(&names).unwrap()
    }

    fn binomial(q: &Quiver, a: &str, b: &str) -> Polynomial {
        Polynomial::from_terms([(scalar(1), word(q, a)), (scalar(-1), word(q, b))])
    }

    #[test]
    fn trivial_cases() {
        let q = two_loops();
        let g = binomial(&q, "xx", "xy");
        assert!(membership_oracle(
            &q,
            &Polynomial::zero(),
            std::slice::from_ref(&g),
            Side::TwoSided,
            6
        )
        .is_member());
        assert!(membership_oracle(&q, &g, std::slice::from_ref(&g), Side::TwoSided, 6).is_member());
    }

    #[test]
    fn infinite_family_members() {
        let q = two_loops();
        let g = binomial(&q, "xx", "xy");
        for (a, b) in [("xyx", "xyy"), ("xyyx", "xyyy")] {
            let v = membership_oracle(
                &q,
                &binomial(&q, a, b),
                std::slice::from_ref(&g),
                Side::TwoSided,
                6,
            );
            assert_eq!(v, OracleVerdict::Member, "{a} - {b}");
        }
        let v = membership_oracle(
            &q,
            &binomial(&q, "yx", "yy"),
            std::slice::from_ref(&g),
            Side::TwoSided,
            6,
        );
        assert_eq!(v, OracleVerdict::NotMember);
    }

    #[test]
    fn one_sided_spans() {
        let q = two_loops();
        let g = Polynomial::monomial(word(&q, "x"));
        assert!(membership_oracle(
            &q,
            &Polynomial::monomial(word(&q, "yx")),
            std::slice::from_ref(&g),
            Side::Left,
            3
        )
        .is_member());
        assert_eq!(
            membership_oracle(
                &q,
                &Polynomial::monomial(word(&q, "xy")),
                std::slice::from_ref(&g),
                Side::Left,
                3
            ),
            OracleVerdict::NotMember
        );
        assert!(membership_oracle(
            &q,
            &Polynomial::monomial(word(&q, "xy")),
            &[g],
            Side::Right,
            3
        )
        .is_member());
    }

    #[test]
    fn acyclic_quivers_are_decided() {
        let q = Quiver::new(
            &["v1", "v2", "v3"],
            &[("a", "v1", "v2"), ("b", "v2", "v3"), ("c", "v1", "v3")],
        )
        .unwrap();
        let g = Polynomial::from_terms([(scalar(1), word(&q, "ab")), (scalar(-1), word(&q, "c"))]);
        let c = Polynomial::monomial(word(&q, "c"));
        assert_eq!(
            membership_oracle(&q, &c, std::slice::from_ref(&g), Side::TwoSided, 2),
            OracleVerdict::NotMember
        );
        let v = membership_oracle(&q, &c, &[g], Side::TwoSided, 1);
        assert!(matches!(v, OracleVerdict::Inconclusive(_)));
    }

    #[test]
    fn bounds_are_explicit() {
        let q = two_loops();
        let g = binomial(&q, "xx", "y");
        let v = membership_oracle(
            &q,
            &Polynomial::monomial(word(&q, "xxxx")),
            std::slice::from_ref(&g),
            Side::TwoSided,
            3,
        );
        assert!(matches!(v, OracleVerdict::Inconclusive(_)));
        let v = membership_oracle(
            &q,
            &Polynomial::monomial(word(&q, "x")),
            &[g],
            Side::TwoSided,
            4,
        );
        assert!(matches!(v, OracleVerdict::Inconclusive(_)));
    }
}
