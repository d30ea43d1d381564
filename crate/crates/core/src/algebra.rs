//! Elements of the path algebra `KQ` over the rationals.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::order::PathOrder;
use crate::quiver::{Path, Quiver, VertexId};

/// Exact rational coefficient. The numerator/denominator pair is kept in
/// lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// A nonzero coefficient times a path.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub path: Path,
}

/// A finite linear combination of paths with nonzero rational coefficients.
///
/// Terms are keyed by the structural ordering of [`Path`], which keeps
/// iteration deterministic; anything order-sensitive takes a [`PathOrder`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Path, Scalar>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn monomial(path: Path) -> Polynomial {
        Polynomial::term(Scalar::one(), path)
    }

    pub fn term(coeff: Scalar, path: Path) -> Polynomial {
        let mut p = Polynomial::zero();
        p.add_term(coeff, path);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Scalar, Path)>) -> Polynomial {
        let mut p = Polynomial::zero();
        for (c, path) in terms {
            p.add_term(c, path);
        }
        p
    }

    /// `Σ v` over all vertices: the identity of `KQ` for a finite quiver.
    pub fn identity(quiver: &Quiver) -> Polynomial {
        Polynomial::from_terms(quiver.vertices().map(|v| (Scalar::one(), Path::trivial(v))))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Path, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, path: &Path) -> Option<&Scalar> {
        self.terms.get(path)
    }

    /// `Mon(f)`, in structural order.
    pub fn monomials(&self) -> impl Iterator<Item = &Path> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, coeff: Scalar, path: Path) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(path) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, c: &Scalar, other: &Polynomial) {
        for (p, d) in &other.terms {
            self.add_term(c * d, p.clone());
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(p, d)| (p.clone(), c * d)).collect(),
        }
    }

    /// `c·w·self·z` for paths `w`, `z`; terms that don't compose vanish.
    pub fn sandwich(&self, c: &Scalar, w: &Path, z: &Path) -> Polynomial {
        let mut out = Polynomial::zero();
        if c.is_zero() {
            return out;
        }
        for (p, d) in &self.terms {
            if let Some(wp) = w.concat(p) {
                if let Some(wpz) = wp.concat(z) {
                    out.add_term(c * d, wpz);
                }
            }
        }
        out
    }

    pub fn mul_path_left(&self, w: &Path) -> Polynomial {
        let mut out = Polynomial::zero();
        for (p, d) in &self.terms {
            if let Some(wp) = w.concat(p) {
                out.add_term(d.clone(), wp);
            }
        }
        out
    }

    pub fn mul_path_right(&self, z: &Path) -> Polynomial {
        let mut out = Polynomial::zero();
        for (p, d) in &self.terms {
            if let Some(pz) = p.concat(z) {
                out.add_term(d.clone(), pz);
            }
        }
        out
    }

    /// Bilinear extension of path composition.
    pub fn multiply(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (p, c) in &self.terms {
            for (q, d) in &other.terms {
                if let Some(pq) = p.concat(q) {
                    out.add_term(c * d, pq);
                }
            }
        }
        out
    }

    /// The term whose path is maximal under `order`.
    pub fn leading(&self, order: &PathOrder) -> Result<Term> {
        let (path, coeff) = self
            .terms
            .iter()
            .reduce(|a, b| if order.less(a.0, b.0) { b } else { a })
            .ok_or(Error::NoLeadingTerm)?;
        Ok(Term {
            coeff: coeff.clone(),
            path: path.clone(),
        })
    }

    pub fn leading_monomial(&self, order: &PathOrder) -> Result<Path> {
        self.leading(order).map(|t| t.path)
    }

    pub fn leading_coeff(&self, order: &PathOrder) -> Result<Scalar> {
        self.leading(order).map(|t| t.coeff)
    }

    /// `self / LC(self)`.
    pub fn monic(&self, order: &PathOrder) -> Result<Polynomial> {
        let lc = self.leading_coeff(order)?;
        Ok(self.scale(&lc.recip()))
    }

    pub fn is_monic(&self, order: &PathOrder) -> bool {
        self.leading_coeff(order).is_ok_and(|c| c.is_one())
    }

    /// Terms in descending order.
    pub fn terms_desc(&self, order: &PathOrder) -> Vec<(&Path, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }

    /// Splits into components sharing `(source, target)`, keyed in vertex order.
    pub fn uniform_components(&self) -> Vec<(VertexId, VertexId, Polynomial)> {
        let mut parts: BTreeMap<(VertexId, VertexId), Polynomial> = BTreeMap::new();
        for (p, c) in &self.terms {
            parts
                .entry((p.source(), p.target()))
                .or_default()
                .add_term(c.clone(), p.clone());
        }
        parts.into_iter().map(|((u, v), f)| (u, v, f)).collect()
    }

    /// Components `u·f` grouped by source vertex.
    pub fn source_components(&self) -> Vec<(VertexId, Polynomial)> {
        let mut parts: BTreeMap<VertexId, Polynomial> = BTreeMap::new();
        for (p, c) in &self.terms {
            parts
                .entry(p.source())
                .or_default()
                .add_term(c.clone(), p.clone());
        }
        parts.into_iter().collect()
    }

    /// Components `f·v` grouped by target vertex.
    pub fn target_components(&self) -> Vec<(VertexId, Polynomial)> {
        let mut parts: BTreeMap<VertexId, Polynomial> = BTreeMap::new();
        for (p, c) in &self.terms {
            parts
                .entry(p.target())
                .or_default()
                .add_term(c.clone(), p.clone());
        }
        parts.into_iter().collect()
    }

    pub fn is_uniform(&self) -> bool {
        self.uniform_components().len() == 1
    }

    /// True when all terms share one path length.
    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(Path::len);
        match lens.next() {
            Some(first) => lens.all(|l| l == first),
            None => true,
        }
    }

    pub fn max_path_len(&self) -> usize {
        self.terms.keys().map(Path::len).max().unwrap_or(0)
    }

    /// Canonical text: terms in descending order, `*`-joined factors,
    /// rational coefficients, `0` for the zero polynomial.
    pub fn format(&self, quiver: &Quiver, order: &PathOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (path, coeff)) in self.terms_desc(order).into_iter().enumerate() {
            let negative = coeff.is_negative();
            let magnitude = coeff.abs();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !magnitude.is_one() {
                let _ = write!(out, "{magnitude}*");
            }
            out.push_str(&quiver.format_path(path));
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Scalar::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.multiply(rhs)
    }
}

impl Polynomial {
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self + other
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self - other
    }

    pub fn negate(&self) -> Polynomial {
        -self
    }

    pub fn add_assign(&mut self, other: &Polynomial) {
        for (p, d) in &other.terms {
            self.add_term(d.clone(), p.clone());
        }
    }
}
