//! Path orderings and admissibility checks.
//!
//! Symbols are compared by declaration precedence: every vertex precedes every
//! arrow, and within each group earlier declarations are smaller. A trivial
//! path is the one-symbol word `[v]`, so it sits below every arrow path.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::quiver::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    /// Left lexicographic. Total, but not a well-ordering.
    Llex,
    /// Right lexicographic. Total, but not a well-ordering.
    Rlex,
    /// Length first, ties broken by left lexicographic.
    LenLlex,
    /// Length first, ties broken by right lexicographic.
    LenRlex,
}

impl OrderKind {
    pub const ALL: [OrderKind; 4] = [
        OrderKind::Llex,
        OrderKind::Rlex,
        OrderKind::LenLlex,
        OrderKind::LenRlex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Llex => "llex",
            OrderKind::Rlex => "rlex",
            OrderKind::LenLlex => "lenllex",
            OrderKind::LenRlex => "lenrlex",
        }
    }

    pub fn is_well_ordered(self) -> bool {
        matches!(self, OrderKind::LenLlex | OrderKind::LenRlex)
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OrderKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown order `{s}` (expected llex, rlex, lenllex or lenrlex)"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Symbol {
    Vertex(u32),
    Arrow(u32),
}

fn symbols(p: &Path) -> impl DoubleEndedIterator<Item = Symbol> + '_ {
    let trivial = p.is_trivial().then_some(Symbol::Vertex(p.source().0));
    trivial
        .into_iter()
        .chain(p.arrows().iter().map(|a| Symbol::Arrow(a.index)))
}

/// A path ordering. Precedence is read from the dense indices of the quiver's
/// declarations, so the order itself only records its kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PathOrder {
    kind: OrderKind,
}

impl Default for PathOrder {
    fn default() -> Self {
        PathOrder::new(OrderKind::LenLlex)
    }
}

impl PathOrder {
    pub fn new(kind: OrderKind) -> PathOrder {
        PathOrder { kind }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn is_well_ordered(&self) -> bool {
        self.kind.is_well_ordered()
    }

    pub fn compare(&self, x: &Path, y: &Path) -> Ordering {
        match self.kind {
            OrderKind::Llex => symbols(x).cmp(symbols(y)),
            OrderKind::Rlex => symbols(x).rev().cmp(symbols(y).rev()),
            OrderKind::LenLlex => x
                .len()
                .cmp(&y.len())
                .then_with(|| symbols(x).cmp(symbols(y))),
            OrderKind::LenRlex => x
                .len()
                .cmp(&y.len())
                .then_with(|| symbols(x).rev().cmp(symbols(y).rev())),
        }
    }

    pub fn less(&self, x: &Path, y: &Path) -> bool {
        self.compare(x, y) == Ordering::Less
    }

    pub fn max<'a>(&self, x: &'a Path, y: &'a Path) -> &'a Path {
        if self.compare(x, y) == Ordering::Less {
            y
        } else {
            x
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// (a) distinct paths are comparable, and the comparator is antisymmetric.
    Totality,
    /// (c) `x ≺ y ⇒ xz ≺ yz`.
    RightCompatible,
    /// (d) `x ≺ y ⇒ wx ≺ wy`.
    LeftCompatible,
    /// (e) `x = yz ⇒ x ⪰ y, x ⪰ z`.
    Factor,
}

#[derive(Clone, Debug)]
pub struct Violation {
    pub condition: Condition,
    pub witness: Vec<Path>,
}

/// Outcome of [`admissibility_report`].
#[derive(Clone, Debug, Default)]
pub struct AdmissibilityReport {
    /// At most [`AdmissibilityReport::KEPT`] witnesses per condition.
    pub violations: Vec<Violation>,
    pub counts: [usize; 4],
    /// A strictly descending chain of strictly lengthening paths, when the
    /// probe found one at least `chain_threshold` long.
    pub descending_chain: Option<Vec<Path>>,
}

impl AdmissibilityReport {
    pub const KEPT: usize = 8;

    pub fn count(&self, c: Condition) -> usize {
        self.counts[c as usize]
    }

    pub fn is_clean(&self) -> bool {
        self.counts.iter().all(|&c| c == 0) && self.descending_chain.is_none()
    }

    fn record(&mut self, condition: Condition, witness: Vec<Path>) {
        let n = &mut self.counts[condition as usize];
        *n += 1;
        if *n <= Self::KEPT {
            self.violations.push(Violation { condition, witness });
        }
    }
}

/// Checks the admissibility conditions on every applicable pair and triple of
/// `sample`. Well-ordering can't be decided on a finite sample; instead the
/// longest chain `x1 ≻ x2 ≻ …` with strictly increasing lengths is reported
/// when it reaches `chain_threshold` elements.
pub fn admissibility_report(
    order: &PathOrder,
    sample: &[Path],
    chain_threshold: usize,
) -> AdmissibilityReport {
    let mut report = AdmissibilityReport::default();

    for (i, x) in sample.iter().enumerate() {
        for y in &sample[i..] {
            let xy = order.compare(x, y);
            let yx = order.compare(y, x);
            let consistent = xy == yx.reverse() && ((xy == Ordering::Equal) == (x == y));
            if !consistent {
                report.record(Condition::Totality, vec![x.clone(), y.clone()]);
            }
        }
    }

    for x in sample {
        for y in sample {
            if !order.less(x, y) {
                continue;
            }
            for z in sample {
                if let (Some(xz), Some(yz)) = (x.concat(z), y.concat(z)) {
                    if !order.less(&xz, &yz) {
                        report.record(
                            Condition::RightCompatible,
                            vec![x.clone(), y.clone(), z.clone()],
                        );
                    }
                }
                if let (Some(zx), Some(zy)) = (z.concat(x), z.concat(y)) {
                    if !order.less(&zx, &zy) {
                        report.record(
                            Condition::LeftCompatible,
                            vec![z.clone(), x.clone(), y.clone()],
                        );
                    }
                }
            }
        }
    }

    for x in sample {
        for k in 0..=x.len() {
            let head = x.subpath(0, k);
            let tail = x.subpath(k, x.len());
            if order.less(x, &head) || order.less(x, &tail) {
                report.record(Condition::Factor, vec![x.clone(), head, tail]);
            }
        }
    }

    let chain = longest_lengthening_descent(order, sample);
    if chain.len() >= chain_threshold.max(2) {
        report.descending_chain = Some(chain);
    }
    report
}

fn longest_lengthening_descent(order: &PathOrder, sample: &[Path]) -> Vec<Path> {
    let mut idx: Vec<usize> = (0..sample.len()).collect();
    idx.sort_by_key(|&i| sample[i].len());
    // best[k]: length of the longest chain ending at idx[k]; prev links back.
    let mut best = vec![1usize; idx.len()];
    let mut prev = vec![usize::MAX; idx.len()];
    for k in 0..idx.len() {
        for j in 0..k {
            let (a, b) = (&sample[idx[j]], &sample[idx[k]]);
            if !(a.len() < b.len() && order.less(b, a)) {
                continue;
            }
            // ties go to the greater predecessor, giving the slowest descent
            let better = best[j] + 1 > best[k]
                || (best[j] + 1 == best[k] && order.less(&sample[idx[prev[k]]], a));
            if better {
                best[k] = best[j] + 1;
                prev[k] = j;
            }
        }
    }
    let Some(mut k) = (0..idx.len()).reduce(|m, k| {
        let (x, y) = (&sample[idx[m]], &sample[idx[k]]);
        if best[k] > best[m] || (best[k] == best[m] && order.less(x, y)) {
            k
        } else {
            m
        }
    }) else {
        return Vec::new();
    };
    let mut chain = vec![sample[idx[k]].clone()];
    while prev[k] != usize::MAX {
        k = prev[k];
        chain.push(sample[idx[k]].clone());
    }
    chain.reverse();
    chain
}
