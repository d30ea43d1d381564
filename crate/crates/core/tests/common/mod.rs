//! Seeded random quivers and polynomials for the integration suites.

#![allow(dead_code)]

use pathgb_core::{ratio, Path, Polynomial, Quiver};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn corpus(name: &str) -> String {
    let path = format!("{}/../../corpus/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

/// A quiver with up to four vertices. Acyclic quivers only get arrows from a
/// lower to a higher vertex index.
pub fn random_quiver<R: Rng>(rng: &mut R, acyclic: bool) -> Quiver {
    let n = rng.gen_range(1..=4usize);
    let n = if acyclic { n.max(2) } else { n };
    let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut arrows = Vec::new();
    let count = rng.gen_range(2..=5usize);
    for k in 0..count {
        let (s, t) = if acyclic {
            let s = rng.gen_range(0..n - 1);
            (s, rng.gen_range(s + 1..n))
        } else {
            (rng.gen_range(0..n), rng.gen_range(0..n))
        };
        arrows.push((format!("a{k}"), vertices[s].clone(), vertices[t].clone()));
    }
    if !acyclic && !arrows.iter().any(|(_, s, t)| s == t) {
        let v = vertices[rng.gen_range(0..n)].clone();
        arrows.push(("lp".to_string(), v.clone(), v));
    }
    Quiver::new(&vertices, &arrows).unwrap()
}

pub fn random_coeff<R: Rng>(rng: &mut R) -> pathgb_core::Scalar {
    loop {
        let n = rng.gen_range(-4i64..=4);
        if n == 0 {
            continue;
        }
        let d = if rng.gen_bool(0.2) {
            rng.gen_range(2i64..=3)
        } else {
            1
        };
        return ratio(n, d);
    }
}

/// Up to `terms` random terms over nontrivial paths of length at most
/// `max_len`. With `uniform`, every term shares the first term's endpoints.
pub fn random_poly<R: Rng>(rng: &mut R, paths: &[Path], terms: usize, uniform: bool) -> Polynomial {
    let nontrivial: Vec<&Path> = paths.iter().filter(|p| !p.is_trivial()).collect();
    let pool = if nontrivial.is_empty() {
        paths.iter().collect()
    } else {
        nontrivial
    };
    let first = (*pool.choose(rng).unwrap()).clone();
    let mut p = Polynomial::term(random_coeff(rng), first.clone());
    for _ in 1..terms {
        let candidates: Vec<&&Path> = pool
            .iter()
            .filter(|q| !uniform || (q.source() == first.source() && q.target() == first.target()))
            .collect();
        let q = (**candidates.choose(rng).unwrap()).clone();
        p.add_term(random_coeff(rng), q);
    }
    if p.is_zero() {
        Polynomial::monomial(first)
    } else {
        p
    }
}

/// Homogeneous binomial or monomial on paths of one length.
pub fn random_homogeneous<R: Rng>(rng: &mut R, paths: &[Path], len: usize) -> Option<Polynomial> {
    let same: Vec<&Path> = paths.iter().filter(|p| p.len() == len).collect();
    let a = (*same.choose(rng)?).clone();
    let mut p = Polynomial::term(random_coeff(rng), a.clone());
    if rng.gen_bool(0.7) {
        let b = (*same.choose(rng)?).clone();
        p.add_term(random_coeff(rng), b);
    }
    Some(if p.is_zero() {
        Polynomial::monomial(a)
    } else {
        p
    })
}

/// `Σ cᵢ·uᵢ·fᵢ·wᵢ` with random paths `uᵢ`, `wᵢ`; one-sided ideals keep the
/// cofactor on the other side trivial.
pub fn random_combination<R: Rng>(
    rng: &mut R,
    paths: &[Path],
    gens: &[Polynomial],
    side: pathgb_core::Side,
    terms: usize,
) -> Polynomial {
    let short: Vec<&Path> = paths.iter().filter(|p| p.len() <= 2).collect();
    let mut acc = Polynomial::zero();
    for _ in 0..terms {
        let g = gens.choose(rng).unwrap();
        let u = (*short.choose(rng).unwrap()).clone();
        let w = (*short.choose(rng).unwrap()).clone();
        let term = match side {
            pathgb_core::Side::Left => g.mul_path_left(&u),
            pathgb_core::Side::Right => g.mul_path_right(&w),
            pathgb_core::Side::TwoSided => g.mul_path_left(&u).mul_path_right(&w),
        };
        acc.add_assign(&term.scale(&random_coeff(rng)));
    }
    acc
}
