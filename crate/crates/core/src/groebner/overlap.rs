//! Overlaps between leading monomials and the S-polynomials they induce.

use num_traits::One;

use crate::algebra::{Polynomial, Scalar};
use crate::error::{Error, Result};
use crate::order::PathOrder;
use crate::quiver::Path;
use crate::rewrite::Side;

/// Cofactors witnessing an overlap of `LM(f)` and `LM(g)`.
///
/// * two-sided: `LM(f)∘f_cofactor = g_cofactor∘LM(g)`, both cofactors of
///   positive length and `len(f_cofactor) ≤ len(LM(g))`;
/// * left: `f_cofactor∘LM(f) = g_cofactor∘LM(g)`;
/// * right: `LM(f)∘f_cofactor = LM(g)∘g_cofactor`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OverlapWitness {
    pub kind: Side,
    pub f_cofactor: Path,
    pub g_cofactor: Path,
}

/// An overlap between basis elements `i` and `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overlap {
    pub i: usize,
    pub j: usize,
    pub witness: OverlapWitness,
}

/// All overlap witnesses between two leading monomials, ordered by the length
/// of `f_cofactor`.
///
/// For the two-sided kind, `proper_only = false` also yields the plain
/// concatenation `LM(f)∘LM(g)` (the boundary case `len(p) = len(LM(g))`).
pub fn overlap_witnesses(
    lead_f: &Path,
    lead_g: &Path,
    kind: Side,
    proper_only: bool,
) -> Vec<OverlapWitness> {
    let (a, b) = (lead_f.len(), lead_g.len());
    let mut out = Vec::new();
    match kind {
        Side::TwoSided => {
            // shared stretch of length s: suffix of LM(f) = prefix of LM(g)
            for s in (1..a.min(b)).rev() {
                if lead_f.arrows()[a - s..] == lead_g.arrows()[..s] {
                    out.push(OverlapWitness {
                        kind,
                        f_cofactor: lead_g.subpath(s, b),
                        g_cofactor: lead_f.subpath(0, a - s),
                    });
                }
            }
            if !proper_only && a > 0 && b > 0 && lead_f.target() == lead_g.source() {
                out.push(OverlapWitness {
                    kind,
                    f_cofactor: lead_g.clone(),
                    g_cofactor: lead_f.clone(),
                });
            }
        }
        Side::Left => {
            if lead_f.suffix_of(lead_g) {
                out.push(OverlapWitness {
                    kind,
                    f_cofactor: lead_g.subpath(0, b - a),
                    g_cofactor: Path::trivial(lead_g.source()),
                });
            } else if lead_g.suffix_of(lead_f) {
                out.push(OverlapWitness {
                    kind,
                    f_cofactor: Path::trivial(lead_f.source()),
                    g_cofactor: lead_f.subpath(0, a - b),
                });
            }
        }
        Side::Right => {
            if lead_f.prefix_of(lead_g) {
                out.push(OverlapWitness {
                    kind,
                    f_cofactor: lead_g.subpath(a, b),
                    g_cofactor: Path::trivial(lead_g.target()),
                });
            } else if lead_g.prefix_of(lead_f) {
                out.push(OverlapWitness {
                    kind,
                    f_cofactor: Path::trivial(lead_f.target()),
                    g_cofactor: lead_f.subpath(b, a),
                });
            }
        }
    }
    out
}

/// Overlaps between `LM(f)` and `LM(g)` of the given kind.
pub fn overlaps(
    f: &Polynomial,
    g: &Polynomial,
    order: &PathOrder,
    kind: Side,
    proper_only: bool,
) -> Result<Vec<OverlapWitness>> {
    let lf = f.leading_monomial(order)?;
    let lg = g.leading_monomial(order)?;
    Ok(overlap_witnesses(&lf, &lg, kind, proper_only))
}

/// The common multiple whose leading terms the S-polynomial cancels, after
/// checking the witness.
pub fn overlap_target(lead_f: &Path, lead_g: &Path, w: &OverlapWitness) -> Result<Path> {
    let (lhs, rhs) = match w.kind {
        Side::TwoSided => {
            if w.f_cofactor.is_trivial() || w.g_cofactor.is_trivial() {
                return Err(Error::InvalidOverlap(
                    "two-sided cofactors must have positive length".into(),
                ));
            }
            if w.f_cofactor.len() > lead_g.len() {
                return Err(Error::InvalidOverlap(
                    "right cofactor longer than LM(g)".into(),
                ));
            }
            (lead_f.concat(&w.f_cofactor), w.g_cofactor.concat(lead_g))
        }
        Side::Left => (w.f_cofactor.concat(lead_f), w.g_cofactor.concat(lead_g)),
        Side::Right => (lead_f.concat(&w.f_cofactor), lead_g.concat(&w.g_cofactor)),
    };
    match (lhs, rhs) {
        (Some(l), Some(r)) if l == r => Ok(l),
        _ => Err(Error::InvalidOverlap(
            "cofactors do not produce a common multiple".into(),
        )),
    }
}

/// The S-polynomial of `f` and `g` at the witness, with both sides scaled to
/// monic leading terms so the common multiple cancels.
pub fn s_polynomial(
    f: &Polynomial,
    g: &Polynomial,
    w: &OverlapWitness,
    order: &PathOrder,
) -> Result<Polynomial> {
    let tf = f.leading(order)?;
    let tg = g.leading(order)?;
    overlap_target(&tf.path, &tg.path, w)?;
    let cf = tf.coeff.recip();
    let cg = tg.coeff.recip();
    let (fp, qg) = match w.kind {
        Side::TwoSided => (
            f.mul_path_right(&w.f_cofactor),
            g.mul_path_left(&w.g_cofactor),
        ),
        Side::Left => (
            f.mul_path_left(&w.f_cofactor),
            g.mul_path_left(&w.g_cofactor),
        ),
        Side::Right => (
            f.mul_path_right(&w.f_cofactor),
            g.mul_path_right(&w.g_cofactor),
        ),
    };
    let (fp, qg) = (fp.scale(&cf), qg.scale(&cg));
    Ok(&fp - &qg)
}

pub fn s_polynomial_left(
    f: &Polynomial,
    g: &Polynomial,
    w: &OverlapWitness,
    order: &PathOrder,
) -> Result<Polynomial> {
    if w.kind != Side::Left {
        return Err(Error::InvalidOverlap("expected a left witness".into()));
    }
    s_polynomial(f, g, w, order)
}

pub fn s_polynomial_right(
    f: &Polynomial,
    g: &Polynomial,
    w: &OverlapWitness,
    order: &PathOrder,
) -> Result<Polynomial> {
    if w.kind != Side::Right {
        return Err(Error::InvalidOverlap("expected a right witness".into()));
    }
    s_polynomial(f, g, w, order)
}

/// `f/LC(f) − c·w·g·z` for an inclusion `LM(f) = w∘LM(g)∘z`, scaled so the
/// leading terms cancel.
pub fn inclusion_polynomial(
    f: &Polynomial,
    g: &Polynomial,
    w: &Path,
    z: &Path,
    order: &PathOrder,
) -> Result<Polynomial> {
    let tf = f.leading(order)?;
    let tg = g.leading(order)?;
    let m = w.concat(&tg.path).and_then(|p| p.concat(z));
    if m.as_ref() != Some(&tf.path) {
        return Err(Error::InvalidOverlap(
            "cofactors do not reproduce LM(f)".into(),
        ));
    }
    let lhs = f.scale(&tf.coeff.recip());
    let rhs = g.sandwich(&(Scalar::one() / &tg.coeff), w, z);
    Ok(&lhs - &rhs)
}
