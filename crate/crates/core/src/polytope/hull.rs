use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::linalg::{affine_dim, dot, normal_of, rank};
use super::PolytopeError;

/// Largest ambient dimension accepted.
pub const MAX_DIM: usize = 6;

/// One facet inequality `<m, normal> >= -offset` with a primitive inward normal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    /// `<m, normal> + scale * offset`; zero exactly on the dilated facet,
    /// nonnegative on the dilated polytope.
    pub fn slack(&self, m: &[i64], scale: i64) -> i64 {
        dot(m, &self.normal) + scale * self.offset
    }
}

/// A full-dimensional lattice polytope with its facet presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    n: usize,
    vertices: Vec<Vec<i64>>,
    facets: Vec<Facet>,
}

impl LatticePolytope {
    /// Computes the convex hull of `points` by brute force over `n`-subsets:
    /// every affinely independent subset spans a candidate hyperplane, kept
    /// when all points lie on one side. Points that are not vertices are
    /// discarded; vertices and facets come out in lexicographic order.
    pub fn facet_presentation(points: &[Vec<i64>]) -> Result<Self, PolytopeError> {
        let Some(n) = points.first().map(Vec::len) else {
            return Err(PolytopeError::Empty);
        };
        if n == 0 || n > MAX_DIM {
            return Err(PolytopeError::UnsupportedDimension(n));
        }
        if let Some(p) = points.iter().find(|p| p.len() != n) {
            return Err(PolytopeError::InconsistentDimension {
                expected: n,
                got: p.len(),
            });
        }
        let points: Vec<Vec<i64>> = points
            .iter()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let refs: Vec<&[i64]> = points.iter().map(Vec::as_slice).collect();
        if points.len() < n + 1 || affine_dim(&refs) != n as i32 {
            return Err(PolytopeError::NotFullDimensional {
                n,
                dim: affine_dim(&refs),
            });
        }

        let mut facets = BTreeSet::new();
        for subset in (0..points.len()).combinations(n) {
            let base = &points[subset[0]];
            let diffs: Vec<Vec<i64>> = subset[1..]
                .iter()
                .map(|&i| points[i].iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            let Some(normal) = normal_of(&diffs, n) else {
                continue;
            };
            let level = dot(base, &normal);
            let values: Vec<i64> = points.iter().map(|p| dot(p, &normal)).collect();
            if values.iter().all(|&v| v >= level) {
                facets.insert(Facet {
                    normal,
                    offset: -level,
                });
            } else if values.iter().all(|&v| v <= level) {
                facets.insert(Facet {
                    normal: normal.iter().map(|x| -x).collect(),
                    offset: level,
                });
            }
        }
        let facets: Vec<Facet> = facets.into_iter().collect();

        // A point is a vertex iff the normals of its tight facets span R^n.
        let vertices: Vec<Vec<i64>> = points
            .into_iter()
            .filter(|p| {
                let tight: Vec<Vec<i64>> = facets
                    .iter()
                    .filter(|f| f.slack(p, 1) == 0)
                    .map(|f| f.normal.clone())
                    .collect();
                rank(&tight) == n
            })
            .collect();

        Ok(Self {
            n,
            vertices,
            facets,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Indices of the facets containing vertex `v`.
    pub fn tight_facets_of_vertex(&self, v: usize) -> Vec<usize> {
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| f.slack(&self.vertices[v], 1) == 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Every vertex lies on exactly `n` facets.
    pub fn is_simple(&self) -> bool {
        (0..self.vertices.len()).all(|v| self.tight_facets_of_vertex(v).len() == self.n)
    }

    pub fn contains(&self, m: &[i64], scale: i64) -> bool {
        self.facets.iter().all(|f| f.slack(m, scale) >= 0)
    }

    /// Content hash of the vertex list, used to tie weight functions to a
    /// polytope.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("n={};", self.n));
        for v in &self.vertices {
            let parts: Vec<String> = v.iter().map(i64::to_string).collect();
            h.update(parts.join(","));
            h.update(";");
        }
        h.finalize()[..16]
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

/// Input file shape: `{"vertices": [[int, ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeFile {
    pub vertices: Vec<Vec<i64>>,
}

impl PolytopeFile {
    pub fn build(&self) -> Result<LatticePolytope, PolytopeError> {
        LatticePolytope::facet_presentation(&self.vertices)
    }
}

impl From<&LatticePolytope> for PolytopeFile {
    fn from(p: &LatticePolytope) -> Self {
        Self {
            vertices: p.vertices.clone(),
        }
    }
}
