//! Division with remainder and interreduction.
//!
//! Every sweep finds, for each term of the current polynomial, the first
//! divisor (in sequence order) whose leading monomial divides it on the
//! requested side, taking the left-most occurrence for two-sided division.
//! The whole correction is subtracted at once and the next sweep starts over
//! from the result, so the leading monomial strictly drops each sweep.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{Polynomial, Scalar};
use crate::error::{Error, Result};
use crate::order::PathOrder;
use crate::quiver::{left_divisor_witness, right_divisor_witness, Path};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "twosided",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            "twosided" => Ok(Side::TwoSided),
            _ => Err(format!(
                "unknown side `{s}` (expected left, right or twosided)"
            )),
        }
    }
}

/// Locates `lead` inside `m` on the given side, returning the cofactors
/// `(w, z)` with `m = w∘lead∘z`.
pub fn locate(side: Side, lead: &Path, m: &Path) -> Option<(Path, Path)> {
    match side {
        Side::Left => left_divisor_witness(lead, m).map(|w| (w, Path::trivial(m.target()))),
        Side::Right => right_divisor_witness(lead, m).map(|z| (Path::trivial(m.source()), z)),
        Side::TwoSided => lead
            .first_occurrence(m)
            .map(|k| (m.subpath(0, k), m.subpath(k + lead.len(), m.len()))),
    }
}

/// One quotient term `coeff·left·fᵢ·right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientTerm {
    pub coeff: Scalar,
    pub left: Path,
    pub right: Path,
}

impl QuotientTerm {
    /// The multiple of `f` this term stands for: `coeff·left·f` for left
    /// division, `coeff·f·right` for right division, `coeff·left·f·right`
    /// otherwise. One-sided multiples never touch the other side, so a
    /// divisor with several sources or targets is not cut down to one.
    pub fn apply(&self, side: Side, f: &Polynomial) -> Polynomial {
        match side {
            Side::Left => f.mul_path_left(&self.left).scale(&self.coeff),
            Side::Right => f.mul_path_right(&self.right).scale(&self.coeff),
            Side::TwoSided => f.sandwich(&self.coeff, &self.left, &self.right),
        }
    }
}

/// `g = Σᵢ Σ coeff·left·fᵢ·right + remainder`.
///
/// For left division every `right` cofactor is trivial, for right division
/// every `left` cofactor is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardRepresentation {
    pub side: Side,
    pub divisors: Vec<Polynomial>,
    pub quotients: Vec<Vec<QuotientTerm>>,
    pub remainder: Polynomial,
    /// Leading monomial of the working polynomial at the start of each sweep.
    pub sweep_leads: Vec<Path>,
}

impl StandardRepresentation {
    /// `Σ coeff·left·fᵢ·right + remainder`.
    pub fn reconstruct(&self) -> Polynomial {
        let mut acc = self.remainder.clone();
        for (f, qs) in self.divisors.iter().zip(&self.quotients) {
            for q in qs {
                acc.add_assign(&q.apply(self.side, f));
            }
        }
        acc
    }

    /// The quotient on divisor `i` as the polynomial `Σ coeff·left` (left
    /// division) or `Σ coeff·right` (right division).
    pub fn one_sided_quotient(&self, i: usize) -> Polynomial {
        Polynomial::from_terms(self.quotients[i].iter().map(|q| {
            let path = match self.side {
                Side::Right => q.right.clone(),
                _ => q.left.clone(),
            };
            (q.coeff.clone(), path)
        }))
    }

    /// Checks the defining conditions against the dividend `g`: exact
    /// reconstruction, an irreducible remainder, bounded quotient terms and
    /// the priority condition between divisors.
    pub fn check(&self, g: &Polynomial, order: &PathOrder) -> std::result::Result<(), String> {
        if &self.reconstruct() != g {
            return Err("reconstruction differs from dividend".into());
        }
        let leads: Vec<Path> = self
            .divisors
            .iter()
            .map(|f| f.leading_monomial(order))
            .collect::<Result<_>>()
            .map_err(|e| e.to_string())?;
        for m in self.remainder.monomials() {
            if leads.iter().any(|l| locate(self.side, l, m).is_some()) {
                return Err("remainder is still reducible".into());
            }
        }
        let top = g.leading_monomial(order).map_err(|e| e.to_string())?;
        for (i, qs) in self.quotients.iter().enumerate() {
            for q in qs {
                let Some(m) = q.left.concat(&leads[i]).and_then(|p| p.concat(&q.right)) else {
                    return Err(format!(
                        "quotient of divisor {i} does not compose with its leading monomial"
                    ));
                };
                if order.less(&top, &m) {
                    return Err(format!("quotient of divisor {i} exceeds the dividend"));
                }
                if leads[..i]
                    .iter()
                    .any(|l| locate(self.side, l, &m).is_some())
                {
                    return Err(format!(
                        "quotient of divisor {i} is divisible by an earlier divisor"
                    ));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DivisionOptions {
    /// Permit orders that are not well-orderings; division then stops after
    /// `step_cap` sweeps.
    pub allow_unsafe_order: bool,
    pub step_cap: usize,
}

impl Default for DivisionOptions {
    fn default() -> Self {
        DivisionOptions {
            allow_unsafe_order: false,
            step_cap: 10_000,
        }
    }
}

/// Division and reduction under a fixed order and side.
#[derive(Clone, Copy, Debug)]
pub struct Reducer {
    pub order: PathOrder,
    pub side: Side,
    pub options: DivisionOptions,
}

impl Reducer {
    pub fn new(order: PathOrder, side: Side) -> Reducer {
        Reducer {
            order,
            side,
            options: DivisionOptions::default(),
        }
    }

    pub fn with_options(mut self, options: DivisionOptions) -> Reducer {
        self.options = options;
        self
    }

    pub fn check_order(&self) -> Result<()> {
        if !self.order.is_well_ordered() && !self.options.allow_unsafe_order {
            return Err(Error::UnsafeOrder(self.order.kind()));
        }
        Ok(())
    }

    /// Standard representation of `g` with respect to `divisors`.
    pub fn divide(
        &self,
        g: &Polynomial,
        divisors: &[Polynomial],
    ) -> Result<StandardRepresentation> {
        if g.is_zero() {
            return Err(Error::ZeroInput("dividend"));
        }
        self.divide_inner(g, divisors)
    }

    fn divide_inner(
        &self,
        g: &Polynomial,
        divisors: &[Polynomial],
    ) -> Result<StandardRepresentation> {
        self.check_order()?;
        let leads = divisors
            .iter()
            .map(|f| {
                f.leading(&self.order)
                    .map_err(|_| Error::ZeroInput("divisor"))
            })
            .collect::<Result<Vec<_>>>()?;
        let capped = !self.order.is_well_ordered();

        let mut rep = StandardRepresentation {
            side: self.side,
            divisors: divisors.to_vec(),
            quotients: vec![Vec::new(); divisors.len()],
            remainder: Polynomial::zero(),
            sweep_leads: Vec::new(),
        };
        let mut current = g.clone();
        while !current.is_zero() {
            if capped && rep.sweep_leads.len() >= self.options.step_cap {
                rep.remainder = &rep.remainder + &current;
                return Err(Error::StepCapExceeded {
                    cap: self.options.step_cap,
                    partial: Box::new(rep),
                });
            }
            let lead = current.leading_monomial(&self.order)?;
            rep.sweep_leads.push(lead.clone());

            let mut next = Polynomial::zero();
            for (m, c) in current.iter() {
                let hit = leads
                    .iter()
                    .enumerate()
                    .find_map(|(i, lt)| locate(self.side, &lt.path, m).map(|(w, z)| (i, w, z)));
                match hit {
                    Some((i, w, z)) => {
                        let q = c / &leads[i].coeff;
                        // c·m − q·w·fᵢ·z, whose leading term cancels
                        let term = QuotientTerm {
                            coeff: q,
                            left: w,
                            right: z,
                        };
                        next.add_assign(&term.apply(self.side, &divisors[i]).negate());
                        next.add_term(c.clone(), m.clone());
                        push_quotient(&mut rep.quotients[i], term.coeff, term.left, term.right);
                    }
                    None => rep.remainder.add_term(c.clone(), m.clone()),
                }
            }
            if !capped {
                debug_assert!(
                    next.is_zero() || self.order.less(&next.leading_monomial(&self.order)?, &lead)
                );
            }
            current = next;
        }
        Ok(rep)
    }

    /// The remainder of division by `divisors`; zero stays zero.
    pub fn reduce_total(&self, g: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
        if g.is_zero() {
            return Ok(Polynomial::zero());
        }
        Ok(self.divide_inner(g, divisors)?.remainder)
    }

    /// True when some monomial of `g` is divisible by some divisor's leading
    /// monomial.
    pub fn is_reducible(&self, g: &Polynomial, divisors: &[Polynomial]) -> Result<bool> {
        let leads = divisors
            .iter()
            .map(|f| f.leading_monomial(&self.order))
            .collect::<Result<Vec<_>>>()?;
        Ok(g.monomials()
            .any(|m| leads.iter().any(|l| locate(self.side, l, m).is_some())))
    }

    /// Interreduces `set` into a monic reduced set generating the same ideal.
    ///
    /// Repeatedly takes the maximal remaining element, reduces it by all the
    /// others, and starts over whenever an element changed. The output is
    /// sorted by ascending leading monomial.
    pub fn set_reduce(&self, set: &[Polynomial]) -> Result<Vec<Polynomial>> {
        self.check_order()?;
        let mut pending: Vec<Polynomial> = set.iter().filter(|f| !f.is_zero()).cloned().collect();
        let mut reduced: Vec<Polynomial> = Vec::new();
        while !pending.is_empty() {
            let k = (0..pending.len())
                .reduce(|a, b| {
                    if compare_polys(&self.order, &pending[a], &pending[b]) == Ordering::Less {
                        b
                    } else {
                        a
                    }
                })
                .expect("pending is nonempty");
            let fk = pending.remove(k);
            let others: Vec<Polynomial> = pending.iter().chain(&reduced).cloned().collect();
            let fk_red = self.reduce_total(&fk, &others)?;
            let changed = fk_red != fk;
            if !fk_red.is_zero() {
                reduced.push(fk_red.monic(&self.order)?);
            }
            if changed {
                pending.append(&mut reduced);
            }
        }
        sort_by_leading(&self.order, &mut reduced);
        Ok(reduced)
    }

    /// True when no element is reducible by the others.
    pub fn is_reduced_set(&self, set: &[Polynomial]) -> Result<bool> {
        for (i, f) in set.iter().enumerate() {
            let others: Vec<Polynomial> = set
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            if self.is_reducible(f, &others)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn push_quotient(list: &mut Vec<QuotientTerm>, coeff: Scalar, left: Path, right: Path) {
    if let Some(pos) = list.iter().position(|q| q.left == left && q.right == right) {
        list[pos].coeff += coeff;
        if num_traits::Zero::is_zero(&list[pos].coeff) {
            list.remove(pos);
        }
    } else {
        list.push(QuotientTerm { coeff, left, right });
    }
}

/// Total order on nonzero polynomials: descending term lists compared
/// monomial-first, then by coefficient.
pub fn compare_polys(order: &PathOrder, a: &Polynomial, b: &Polynomial) -> Ordering {
    let ta = a.terms_desc(order);
    let tb = b.terms_desc(order);
    for ((pa, ca), (pb, cb)) in ta.iter().zip(&tb) {
        let c = order.compare(pa, pb).then_with(|| ca.cmp(cb));
        if c != Ordering::Equal {
            return c;
        }
    }
    ta.len().cmp(&tb.len())
}

pub fn sort_by_leading(order: &PathOrder, set: &mut [Polynomial]) {
    set.sort_by(|a, b| compare_polys(order, a, b));
}

pub fn divide_left(
    g: &Polynomial,
    divisors: &[Polynomial],
    order: &PathOrder,
) -> Result<StandardRepresentation> {
    Reducer::new(*order, Side::Left).divide(g, divisors)
}

pub fn divide_right(
    g: &Polynomial,
    divisors: &[Polynomial],
    order: &PathOrder,
) -> Result<StandardRepresentation> {
    Reducer::new(*order, Side::Right).divide(g, divisors)
}

pub fn divide_twosided(
    g: &Polynomial,
    divisors: &[Polynomial],
    order: &PathOrder,
) -> Result<StandardRepresentation> {
    Reducer::new(*order, Side::TwoSided).divide(g, divisors)
}

pub fn reduce_total(
    g: &Polynomial,
    divisors: &[Polynomial],
    order: &PathOrder,
    side: Side,
) -> Result<Polynomial> {
    Reducer::new(*order, side).reduce_total(g, divisors)
}

pub fn set_reduce(set: &[Polynomial], order: &PathOrder, side: Side) -> Result<Vec<Polynomial>> {
    Reducer::new(*order, side).set_reduce(set)
}
