//! The bundled desk-scale test polytopes and standard integrands.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rat, HomogPoly};
use crate::polytope::LatticePolytope;

/// Seed of the bundled random 3-polytope.
pub const RANDOM_POLYTOPE_SEED: u64 = 20_240_607;

fn build(points: Vec<Vec<i64>>) -> LatticePolytope {
    LatticePolytope::facet_presentation(&points).expect("corpus polytope is full-dimensional")
}

pub fn segment() -> LatticePolytope {
    build(vec![vec![0], vec![1]])
}

pub fn square() -> LatticePolytope {
    cube(2)
}

/// `[0, 1]^n`
pub fn cube(n: usize) -> LatticePolytope {
    let points = (0..1u32 << n)
        .map(|bits| (0..n).map(|i| i64::from((bits >> i) & 1)).collect())
        .collect();
    build(points)
}

/// The standard simplex `conv(0, e_1, ..., e_n)`.
pub fn simplex(n: usize) -> LatticePolytope {
    let mut points = vec![vec![0; n]];
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        points.push(e);
    }
    build(points)
}

/// Pyramid over the unit square with apex `(0, 0, 1)`; its apex lies on
/// four facets, so it is not simple.
pub fn square_pyramid() -> LatticePolytope {
    build(vec![
        vec![0, 0, 0],
        vec![1, 0, 0],
        vec![0, 1, 0],
        vec![1, 1, 0],
        vec![0, 0, 1],
    ])
}

/// Convex hull of ten seeded random points of `{0..3}^3`.
pub fn random_polytope(seed: u64) -> LatticePolytope {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let points: Vec<Vec<i64>> = (0..10)
            .map(|_| (0..3).map(|_| rng.gen_range(0..=3)).collect())
            .collect();
        if let Ok(p) = LatticePolytope::facet_presentation(&points) {
            return p;
        }
    }
}

/// Every bundled polytope with its fixture name.
pub fn all() -> Vec<(&'static str, LatticePolytope)> {
    vec![
        ("segment", segment()),
        ("square", square()),
        ("cube", cube(3)),
        ("simplex1", simplex(1)),
        ("simplex2", simplex(2)),
        ("simplex3", simplex(3)),
        ("simplex4", simplex(4)),
        ("square_pyramid", square_pyramid()),
        ("random3", random_polytope(RANDOM_POLYTOPE_SEED)),
    ]
}

/// `phi = 1`
pub fn phi_one(n: usize) -> HomogPoly {
    HomogPoly::one(n)
}

/// `m_1 + 2 m_2 + ... + n m_n`
pub fn phi_linear(n: usize) -> HomogPoly {
    let coeffs: Vec<_> = (1..=n as i64).map(|i| rat(i, 1)).collect();
    HomogPoly::linear(&coeffs)
}

/// `1/2 m_1^2 - sum_{i<j} m_i m_j + m_n^2` (just `3/2 m_1^2` when `n = 1`).
pub fn phi_quadratic(n: usize) -> HomogPoly {
    let mut monos = Vec::new();
    let unit = |i: usize, j: usize| {
        let mut e = vec![0u32; n];
        e[i] += 1;
        e[j] += 1;
        e
    };
    monos.push((unit(0, 0), rat(1, 2)));
    for i in 0..n {
        for j in i + 1..n {
            monos.push((unit(i, j), rat(-1, 1)));
        }
    }
    monos.push((unit(n - 1, n - 1), rat(1, 1)));
    HomogPoly::new(n, monos).expect("quadratic form is homogeneous")
}

/// The three standard integrands `1`, linear and quadratic.
pub fn standard_phis(n: usize) -> Vec<(&'static str, HomogPoly)> {
    vec![
        ("one", phi_one(n)),
        ("linear", phi_linear(n)),
        ("quadratic", phi_quadratic(n)),
    ]
}
