//! Test-side oracles. None of these share code paths with the library
//! algorithms they check: facets come from a search over small integer
//! normals, faces from all subsets of facets, points from a plain box scan,
//! and the Stanley polynomials from a recursion over an explicit poset.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Zero};
use weighted_ehrhart::algebra::{HomogPoly, LaurentPoly, Rat};
use weighted_ehrhart::polytope::{FaceId, FaceLattice};
use weighted_ehrhart::weights::WeightFunction;

pub fn r(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().map(|&(k, c)| (k, r(c))))
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let factor = &m[i][c] / &m[rank][c];
                for j in c..cols {
                    let sub = &factor * &m[rank][j];
                    m[i][j] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn affine_dim(points: &[&Vec<i64>]) -> i32 {
    let Some(first) = points.first() else {
        return -1;
    };
    let rows: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first.iter()).map(|(a, b)| r(a - b)).collect())
        .collect();
    rank(&rows) as i32
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, Debug)]
pub struct OracleFace {
    pub verts: BTreeSet<usize>,
    pub tight: BTreeSet<usize>,
    pub dim: i32,
}

#[derive(Clone, Debug)]
pub struct Oracle {
    pub n: usize,
    pub points: Vec<Vec<i64>>,
    /// `(u, a)` with `P = {m : <m,u> >= -a}`, sorted.
    pub facets: Vec<(Vec<i64>, i64)>,
    /// Index 0 is the empty face; sorted by `(dim, verts)`.
    pub faces: Vec<OracleFace>,
}

impl Oracle {
    /// Searches all primitive normals with entries in `[-bound, bound]`.
    pub fn new(points: &[Vec<i64>], bound: i64) -> Self {
        let n = points[0].len();
        let mut facets = BTreeSet::new();
        let mut u = vec![-bound; n];
        loop {
            let g = u.iter().fold(0, |g, &x| gcd(g, x));
            if g == 1 {
                let a = -points.iter().map(|p| dot(p, &u)).min().unwrap();
                let tight: Vec<&Vec<i64>> = points.iter().filter(|p| dot(p, &u) == -a).collect();
                if affine_dim(&tight) == n as i32 - 1 {
                    facets.insert((u.clone(), a));
                }
            }
            let mut i = 0;
            while i < n && u[i] == bound {
                u[i] = -bound;
                i += 1;
            }
            if i == n {
                break;
            }
            u[i] += 1;
        }
        let facets: Vec<_> = facets.into_iter().collect();

        let mut sets: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        for mask in 0u64..(1 << facets.len()) {
            let verts: BTreeSet<usize> = (0..points.len())
                .filter(|&v| {
                    (0..facets.len())
                        .filter(|i| mask >> i & 1 == 1)
                        .all(|i| dot(&points[v], &facets[i].0) == -facets[i].1)
                })
                .collect();
            sets.insert(verts);
        }
        let mut faces: Vec<OracleFace> = sets
            .into_iter()
            .map(|verts| {
                let tight = (0..facets.len())
                    .filter(|&i| verts.iter().all(|&v| dot(&points[v], &facets[i].0) == -facets[i].1))
                    .collect();
                let pts: Vec<&Vec<i64>> = verts.iter().map(|&v| &points[v]).collect();
                OracleFace {
                    dim: affine_dim(&pts),
                    verts,
                    tight,
                }
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.verts).cmp(&(b.dim, &b.verts)));
        Self {
            n,
            points: points.to_vec(),
            facets,
            faces,
        }
    }

    pub fn of(lattice: &FaceLattice) -> Self {
        let bound = match lattice.n() {
            1 | 2 => 8,
            3 => 7,
            _ => 2,
        };
        Self::new(lattice.polytope().vertices(), bound)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.n + 2];
        for q in &self.faces {
            f[(q.dim + 1) as usize] += 1;
        }
        f
    }

    /// Points of the input that are vertices (singleton faces).
    pub fn vertices(&self) -> BTreeSet<Vec<i64>> {
        self.faces
            .iter()
            .filter(|q| q.dim == 0)
            .map(|q| self.points[*q.verts.iter().next().unwrap()].clone())
            .collect()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.faces[a].verts.is_subset(&self.faces[b].verts)
    }

    pub fn coords(&self, q: usize) -> BTreeSet<Vec<i64>> {
        self.faces[q].verts.iter().map(|&v| self.points[v].clone()).collect()
    }

    /// Every point of `lP` with the index of the face containing it in its
    /// relative interior.
    pub fn scan(&self, ell: i64) -> Vec<(Vec<i64>, usize)> {
        let lo: Vec<i64> = (0..self.n).map(|i| self.points.iter().map(|p| p[i]).min().unwrap() * ell).collect();
        let hi: Vec<i64> = (0..self.n).map(|i| self.points.iter().map(|p| p[i]).max().unwrap() * ell).collect();
        let mut out = Vec::new();
        let mut m = lo.clone();
        loop {
            let slacks: Vec<i64> = self.facets.iter().map(|(u, a)| dot(&m, u) + ell * a).collect();
            if slacks.iter().all(|&s| s >= 0) {
                let tight: BTreeSet<usize> = (0..slacks.len()).filter(|&i| slacks[i] == 0).collect();
                let q = self.faces.iter().position(|f| f.dim >= 0 && f.tight == tight).unwrap();
                out.push((m.clone(), q));
            }
            let mut i = 0;
            while i < self.n && m[i] == hi[i] {
                m[i] = lo[i];
                i += 1;
            }
            if i == self.n {
                break;
            }
            m[i] += 1;
        }
        out
    }

    /// Library face id with the same vertex coordinates as oracle face `q`.
    pub fn to_lib(&self, lattice: &FaceLattice, q: usize) -> FaceId {
        let want = self.coords(q);
        (0..lattice.len())
            .find(|&id| {
                let got: BTreeSet<Vec<i64>> = lattice
                    .face(id)
                    .vertices
                    .iter()
                    .map(|&v| lattice.polytope().vertices()[v].clone())
                    .collect();
                got == want
            })
            .expect("oracle face missing from the library lattice")
    }

    /// The reversed face poset: `P` is the bottom (rank 0), `∅` the top.
    pub fn reversed_poset(&self) -> Poset {
        let k = self.faces.len();
        Poset {
            rank: self.faces.iter().map(|q| self.n as i32 - q.dim).collect(),
            leq: (0..k).map(|a| (0..k).map(|b| self.leq(b, a)).collect()).collect(),
        }
    }

    /// Direct evaluation of the weighted sum over relative interiors.
    pub fn weighted_value(
        &self,
        lattice: &FaceLattice,
        scan: &[(Vec<i64>, usize)],
        f: &WeightFunction,
        phi: &HomogPoly,
        extra: u32,
    ) -> LaurentPoly {
        let map = self.lib_map(lattice);
        let mut acc = LaurentPoly::zero();
        for (m, q) in scan {
            let w = f.get(map[*q]);
            let e = self.faces[*q].dim as u32 + extra;
            acc = acc + (&w * &LaurentPoly::one_plus_y().pow(e)).scale(&phi.eval(m).unwrap());
        }
        acc
    }

    pub fn lib_map(&self, lattice: &FaceLattice) -> Vec<FaceId> {
        (0..self.faces.len()).map(|q| self.to_lib(lattice, q)).collect()
    }

    /// `sum_Q f_Q (-1-y)^(dim Q) sign sum_{m in lQ} phi(m)` over closed faces,
    /// with `pow_extra` added to the exponent and `sign` multiplied in.
    pub fn closed_value(
        &self,
        lattice: &FaceLattice,
        scan: &[(Vec<i64>, usize)],
        f: &WeightFunction,
        phi: &HomogPoly,
        pow_extra: u32,
        sign: i64,
    ) -> LaurentPoly {
        let map = self.lib_map(lattice);
        let mut acc = LaurentPoly::zero();
        for q in 0..self.faces.len() {
            if self.faces[q].dim < 0 {
                continue;
            }
            let w = f.get(map[q]);
            if w.is_zero() {
                continue;
            }
            let mut s = Rat::zero();
            for (m, p) in scan {
                if self.leq(*p, q) {
                    s += phi.eval(m).unwrap();
                }
            }
            let factor = LaurentPoly::minus_one_minus_y().pow(self.faces[q].dim as u32 + pow_extra);
            acc = acc + (&w * &factor).scale(&(s * r(sign)));
        }
        acc
    }
}

/// Finite graded poset given by an explicit order matrix.
pub struct Poset {
    pub rank: Vec<i32>,
    pub leq: Vec<Vec<bool>>,
}

pub type IntPoly = Vec<i64>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn mul(a: &[i64], b: &[i64]) -> IntPoly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn t_minus_one_pow(e: i32) -> IntPoly {
    (0..e).fold(vec![1], |acc, _| mul(&acc, &[-1, 1]))
}

impl Poset {
    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    /// Stanley `(f, g)` of the interval `[lo, hi]`.
    pub fn fg(&self, lo: usize, hi: usize, memo: &mut HashMap<(usize, usize), (IntPoly, IntPoly)>) -> (IntPoly, IntPoly) {
        if let Some(v) = memo.get(&(lo, hi)) {
            return v.clone();
        }
        let result = if lo == hi {
            (vec![1], vec![1])
        } else {
            let r = self.rank[hi] - self.rank[lo] - 1;
            let mut f = vec![0i64; (r + 1) as usize];
            for x in 0..self.len() {
                if self.leq[lo][x] && self.lt(x, hi) {
                    let (_, g) = self.fg(lo, x, memo);
                    let term = mul(&g, &t_minus_one_pow(r - (self.rank[x] - self.rank[lo])));
                    for (i, c) in term.iter().enumerate() {
                        f[i] += c;
                    }
                }
            }
            let f = trim(f);
            let g = trim(
                (0..=(r / 2) as usize)
                    .map(|i| f.get(i).copied().unwrap_or(0) - if i == 0 { 0 } else { f.get(i - 1).copied().unwrap_or(0) })
                    .collect(),
            );
            (f, g)
        };
        memo.insert((lo, hi), result.clone());
        result
    }

    pub fn is_eulerian(&self) -> bool {
        for x in 0..self.len() {
            for y in 0..self.len() {
                if self.lt(x, y) {
                    let mut bal = 0i64;
                    for z in 0..self.len() {
                        if self.leq[x][z] && self.leq[z][y] {
                            bal += if self.rank[z] % 2 == 0 { 1 } else { -1 };
                        }
                    }
                    if bal != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Face poset of a `v`-gon: `0`, atoms `1..=v`, coatoms `v+1..=2v` (edge `i`
/// contains atoms `i` and `i+1 mod v`), top `2v+1`.
pub fn polygon_poset(v: usize) -> Poset {
    let k = 2 * v + 2;
    let mut rank = vec![0; k];
    let mut leq = vec![vec![false; k]; k];
    for i in 0..k {
        leq[i][i] = true;
        leq[0][i] = true;
        leq[i][k - 1] = true;
    }
    for i in 1..=v {
        rank[i] = 1;
        rank[v + i] = 2;
        leq[i][v + i] = true;
        leq[i % v + 1][v + i] = true;
    }
    rank[k - 1] = 3;
    Poset { rank, leq }
}

/// `h` of a simplicial `d`-polytope from its f-vector `(f_{-1}, ..., f_{d-1})`
/// via `sum h_i t^(d-i) = sum f_(i-1) (t-1)^(d-i)`; returned low degree first.
pub fn simplicial_h(f: &[i64]) -> IntPoly {
    let d = f.len() as i32 - 1;
    let mut top_first = vec![0i64; (d + 1) as usize];
    for (i, fi) in f.iter().enumerate() {
        let term = t_minus_one_pow(d - i as i32);
        for (k, c) in term.iter().enumerate() {
            top_first[k] += fi * c;
        }
    }
    // top_first[k] is the coefficient of t^k, which is h_(d-k)
    let mut h: Vec<i64> = top_first;
    h.reverse();
    h
}

/// Exact solve of the Vandermonde system at `nodes` for one coefficient of
/// `y`; returns the coefficients of the interpolant, low degree first.
pub fn vandermonde_solve(nodes: &[i64], values: &[Rat]) -> Vec<Rat> {
    let k = nodes.len();
    let mut a: Vec<Vec<Rat>> = nodes
        .iter()
        .zip(values)
        .map(|(&x, v)| {
            let mut row: Vec<Rat> = (0..k as u32).map(|e| r(x.pow(e))).collect();
            row.push(v.clone());
            row
        })
        .collect();
    for c in 0..k {
        let p = (c..k).find(|&i| !a[i][c].is_zero()).unwrap();
        a.swap(c, p);
        let inv = Rat::one() / &a[c][c];
        for j in c..=k {
            a[c][j] = &a[c][j] * &inv;
        }
        for i in 0..k {
            if i != c && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for j in c..=k {
                    let sub = &factor * &a[c][j];
                    a[i][j] -= sub;
                }
            }
        }
    }
    a.into_iter().map(|row| row[k].clone()).collect()
}

/// Interpolates Laurent-valued samples coefficientwise in `y`.
pub fn interpolate(nodes: &[i64], values: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let exps: BTreeSet<i64> = values.iter().flat_map(|v| v.terms().map(|(k, _)| k)).collect();
    let mut out = vec![LaurentPoly::zero(); nodes.len()];
    for k in exps {
        let col: Vec<Rat> = values.iter().map(|v| v.coeff(k)).collect();
        for (i, c) in vandermonde_solve(nodes, &col).into_iter().enumerate() {
            out[i].add_term(k, c);
        }
    }
    out
}

pub fn eval_z(coeffs: &[LaurentPoly], z: i64) -> LaurentPoly {
    coeffs
        .iter()
        .rev()
        .fold(LaurentPoly::zero(), |acc, c| &acc * &LaurentPoly::from_int(z) + c.clone())
}
