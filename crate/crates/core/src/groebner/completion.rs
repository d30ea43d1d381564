//! Buchberger completion for left, right and two-sided ideals.
//!
//! Each iteration collects every nonzero S-polynomial of the current basis,
//! reduces it by the basis, and interreduces the basis together with the
//! nonzero remainders. The loop stops when no remainder survives, or reports
//! `CapReached` with the partial basis when a limit trips first. Path algebras
//! are not noetherian, so some ideals only have infinite bases.

use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::order::PathOrder;
use crate::rewrite::{DivisionOptions, Reducer, Side};

use super::overlap::{overlap_witnesses, s_polynomial, OverlapWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_iterations: usize,
    /// Remainders whose leading monomial is longer than this are held back.
    pub max_path_length: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_iterations: 64,
            max_path_length: 64,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CompletionOptions {
    pub limits: Limits,
    /// Skip the plain concatenation overlaps `LM(f)∘LM(g)`.
    pub proper_overlaps: bool,
    /// When false, the input is only made monic and the basis is never
    /// interreduced: remainders are appended as they are found.
    pub interreduce: bool,
    pub division: DivisionOptions,
}

impl Default for CompletionOptions {
    fn default() -> Self {
        CompletionOptions {
            limits: Limits::default(),
            proper_overlaps: false,
            interreduce: true,
            division: DivisionOptions::default(),
        }
    }
}

/// Generators of a left, right or two-sided ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub generators: Vec<Polynomial>,
    pub side: Side,
}

impl GeneratorSet {
    pub fn new(generators: Vec<Polynomial>, side: Side) -> GeneratorSet {
        GeneratorSet { generators, side }
    }

    /// Splits every generator into pieces that still lie in the ideal and
    /// share their relevant endpoints: by source for left ideals, by target
    /// for right ideals, by both for two-sided ideals.
    pub fn split_components(&self) -> Vec<Polynomial> {
        let mut out = Vec::new();
        for g in &self.generators {
            match self.side {
                Side::Left => out.extend(g.source_components().into_iter().map(|(_, p)| p)),
                Side::Right => out.extend(g.target_components().into_iter().map(|(_, p)| p)),
                Side::TwoSided => out.extend(g.uniform_components().into_iter().map(|(_, _, p)| p)),
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GbStatus {
    Completed { iterations: usize },
    CapReached { iterations: usize, pending: usize },
}

/// A remainder added to the basis during iteration `iteration`, coming from
/// the overlap of basis elements `i` and `j` as they stood then.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub iteration: usize,
    pub i: usize,
    pub j: usize,
    pub witness: OverlapWitness,
    pub added: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbResult {
    pub side: Side,
    pub order: PathOrder,
    pub basis: Vec<Polynomial>,
    pub status: GbStatus,
    pub trace: Vec<TraceEntry>,
}

impl GbResult {
    pub fn is_completed(&self) -> bool {
        matches!(self.status, GbStatus::Completed { .. })
    }

    pub fn iterations(&self) -> usize {
        match self.status {
            GbStatus::Completed { iterations } | GbStatus::CapReached { iterations, .. } => {
                iterations
            }
        }
    }
}

struct Candidate {
    i: usize,
    j: usize,
    witness: OverlapWitness,
    remainder: Polynomial,
}

/// Completes `gens` under `order`.
pub fn buchberger(
    gens: &GeneratorSet,
    order: &PathOrder,
    options: &CompletionOptions,
) -> Result<GbResult> {
    if gens.generators.is_empty() {
        return Err(Error::ZeroInput("generator set"));
    }
    if gens.generators.iter().any(Polynomial::is_zero) {
        return Err(Error::ZeroInput("generator"));
    }
    if options.limits.max_iterations == 0 || options.limits.max_path_length == 0 {
        return Err(Error::InvalidLimits("limits must be positive".into()));
    }
    let side = gens.side;
    let reducer = Reducer::new(*order, side).with_options(options.division);
    reducer.check_order()?;

    let pieces = gens.split_components();
    let mut basis = if options.interreduce {
        reducer.set_reduce(&pieces)?
    } else {
        let mut out: Vec<Polynomial> = Vec::new();
        for p in &pieces {
            let m = p.monic(order)?;
            if !out.contains(&m) {
                out.push(m);
            }
        }
        out
    };

    let mut trace = Vec::new();
    let mut iteration = 1;
    loop {
        let candidates = collect_candidates(&reducer, &basis, options.proper_overlaps)?;
        if candidates.is_empty() {
            return Ok(GbResult {
                side,
                order: *order,
                basis,
                status: GbStatus::Completed {
                    iterations: iteration,
                },
                trace,
            });
        }
        if iteration >= options.limits.max_iterations {
            return Ok(capped(
                side,
                order,
                basis,
                trace,
                iteration,
                candidates.len(),
            ));
        }

        let (short, long): (Vec<Candidate>, Vec<Candidate>) =
            candidates.into_iter().partition(|c| {
                c.remainder
                    .leading_monomial(order)
                    .is_ok_and(|lm| lm.len() <= options.limits.max_path_length)
            });
        if short.is_empty() {
            return Ok(capped(side, order, basis, trace, iteration, long.len()));
        }

        if options.interreduce {
            let mut next = basis.clone();
            for c in short {
                next.push(c.remainder.clone());
                trace.push(TraceEntry {
                    iteration,
                    i: c.i,
                    j: c.j,
                    witness: c.witness,
                    added: c.remainder,
                });
            }
            basis = reducer.set_reduce(&next)?;
        } else {
            for c in short {
                let r = reducer.reduce_total(&c.remainder, &basis)?;
                if r.is_zero() {
                    continue;
                }
                let r = r.monic(order)?;
                basis.push(r.clone());
                trace.push(TraceEntry {
                    iteration,
                    i: c.i,
                    j: c.j,
                    witness: c.witness,
                    added: r,
                });
            }
        }
        iteration += 1;
    }
}

fn capped(
    side: Side,
    order: &PathOrder,
    basis: Vec<Polynomial>,
    trace: Vec<TraceEntry>,
    iterations: usize,
    pending: usize,
) -> GbResult {
    GbResult {
        side,
        order: *order,
        basis,
        status: GbStatus::CapReached {
            iterations,
            pending,
        },
        trace,
    }
}

/// Nonzero monic remainders of all S-polynomials of `basis`, in
/// `(i, j, len(f_cofactor))` order, without duplicates.
fn collect_candidates(
    reducer: &Reducer,
    basis: &[Polynomial],
    proper_only: bool,
) -> Result<Vec<Candidate>> {
    let order = &reducer.order;
    let leads = basis
        .iter()
        .map(|f| f.leading_monomial(order))
        .collect::<Result<Vec<_>>>()?;
    let mut out: Vec<Candidate> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            for w in overlap_witnesses(&leads[i], &leads[j], reducer.side, proper_only) {
                let s = s_polynomial(&basis[i], &basis[j], &w, order)?;
                if s.is_zero() {
                    continue;
                }
                let r = reducer.reduce_total(&s, basis)?;
                if r.is_zero() {
                    continue;
                }
                let r = r.monic(order)?;
                if out.iter().any(|c| c.remainder == r) {
                    continue;
                }
                out.push(Candidate {
                    i,
                    j,
                    witness: w,
                    remainder: r,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar;
    use crate::order::OrderKind;
    use crate::quiver::{Path, Quiver};

    fn loops(names: &[&str]) -> Quiver {
        let arrows: Vec<(&str, &str, &str)> = names.iter().map(|n| (*n, "v1", "v1")).collect();
        Quiver::new(&["v1"], &arrows).unwrap()
    }

    fn word(q: &Quiver, w: &str) -> Path {
        let names: Vec<String> = w.chars().map(|c| c.to_string()).collect();
        q.path_from_names(&names).unwrap()
    }

    fn binomial(q: &Quiver, a: &str, b: &str) -> Polynomial {
        Polynomial::from_terms([(scalar(1), word(q, a)), (scalar(-1), word(q, b))])
    }

    #[test]
    fn infinite_family_hits_the_cap() {
        let q = loops(&["y", "x"]);
        let o = PathOrder::new(OrderKind::LenLlex);
        let gens = GeneratorSet::new(vec![binomial(&q, "xx", "xy")], Side::TwoSided);
        let mut opts = CompletionOptions::default();
        opts.limits.max_iterations = 5;
        let res = buchberger(&gens, &o, &opts).unwrap();
        assert!(matches!(
            res.status,
            GbStatus::CapReached { iterations: 5, .. }
        ));
        for (a, b) in [("xx", "xy"), ("xyx", "xyy"), ("xyyx", "xyyy")] {
            assert!(res.basis.contains(&binomial(&q, a, b)), "missing {a} - {b}");
        }
    }

    #[test]
    fn length_cap_holds_back_long_remainders() {
        let q = loops(&["y", "x"]);
        let o = PathOrder::new(OrderKind::LenLlex);
        let gens = GeneratorSet::new(vec![binomial(&q, "xx", "xy")], Side::TwoSided);
        let mut opts = CompletionOptions::default();
        opts.limits.max_path_length = 4;
        let res = buchberger(&gens, &o, &opts).unwrap();
        assert!(matches!(res.status, GbStatus::CapReached { .. }));
        assert!(res.basis.iter().all(|f| f.max_path_len() <= 4));
    }

    #[test]
    fn monomial_ideal_completes_immediately() {
        let q = loops(&["x", "y"]);
        let o = PathOrder::new(OrderKind::LenLlex);
        let gens = GeneratorSet::new(vec![Polynomial::monomial(word(&q, "xyx"))], Side::TwoSided);
        let res = buchberger(&gens, &o, &CompletionOptions::default()).unwrap();
        assert_eq!(res.status, GbStatus::Completed { iterations: 1 });
        assert!(res.trace.is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        let q = loops(&["x"]);
        let o = PathOrder::new(OrderKind::LenLlex);
        let empty = GeneratorSet::new(vec![], Side::Left);
        assert!(buchberger(&empty, &o, &CompletionOptions::default()).is_err());
        let gens = GeneratorSet::new(vec![Polynomial::monomial(word(&q, "x"))], Side::Left);
        let llex = PathOrder::new(OrderKind::Llex);
        assert!(matches!(
            buchberger(&gens, &llex, &CompletionOptions::default()),
            Err(Error::UnsafeOrder(_))
        ));
        let mut opts = CompletionOptions::default();
        opts.limits.max_iterations = 0;
        assert!(matches!(
            buchberger(&gens, &o, &opts),
            Err(Error::InvalidLimits(_))
        ));
    }

    #[test]
    fn left_completion_is_interreduction() {
        let q = loops(&["z", "y", "x"]);
        let o = PathOrder::new(OrderKind::LenLlex);
        let f = Polynomial::from_terms([(scalar(1), word(&q, "xy")), (scalar(-1), word(&q, "z"))]);
        let g = Polynomial::monomial(word(&q, "y"));
        let res = buchberger(
            &GeneratorSet::new(vec![f, g], Side::Left),
            &o,
            &CompletionOptions::default(),
        )
        .unwrap();
        assert_eq!(res.status, GbStatus::Completed { iterations: 1 });
        assert_eq!(
            res.basis,
            vec![
                Polynomial::monomial(word(&q, "z")),
                Polynomial::monomial(word(&q, "y"))
            ]
        );
    }
}
