use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::hull::{LatticePolytope, PolytopeFile};
use super::linalg::affine_dim;
use super::PolytopeError;

/// Index of a face inside its [`FaceLattice`].
pub type FaceId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub id: FaceId,
    pub dim: i32,
    /// Sorted vertex indices.
    pub vertices: Vec<usize>,
    /// Sorted indices of the facets containing the face.
    pub tight_facets: Vec<usize>,
}

/// The face poset of a lattice polytope, from the empty face up to the
/// polytope itself.
///
/// Faces are sorted by `(dim, vertices)`, so the empty face has id `0` and
/// the polytope has the last id.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    polytope: LatticePolytope,
    hash: String,
    faces: Vec<Face>,
    leq: Vec<Vec<bool>>,
    by_tight: HashMap<Vec<usize>, FaceId>,
}

impl FaceLattice {
    /// Enumerates faces as intersections of facet vertex sets.
    pub fn build(polytope: &LatticePolytope) -> Self {
        let nverts = polytope.vertices().len();
        let incidence: Vec<Vec<usize>> = (0..nverts)
            .map(|v| polytope.tight_facets_of_vertex(v))
            .collect();
        let facet_sets: Vec<BTreeSet<usize>> = (0..polytope.facets().len())
            .map(|f| (0..nverts).filter(|v| incidence[*v].contains(&f)).collect())
            .collect();

        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut stack: Vec<BTreeSet<usize>> = vec![(0..nverts).collect(), BTreeSet::new()];
        while let Some(set) = stack.pop() {
            if !seen.insert(set.clone()) {
                continue;
            }
            for fs in &facet_sets {
                let next: BTreeSet<usize> = set.intersection(fs).copied().collect();
                if !seen.contains(&next) {
                    stack.push(next);
                }
            }
        }

        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|set| {
                let vertices: Vec<usize> = set.into_iter().collect();
                let pts: Vec<&[i64]> = vertices
                    .iter()
                    .map(|&v| polytope.vertices()[v].as_slice())
                    .collect();
                let tight_facets = (0..facet_sets.len())
                    .filter(|f| vertices.iter().all(|v| facet_sets[*f].contains(v)))
                    .collect();
                Face {
                    id: 0,
                    dim: affine_dim(&pts),
                    vertices,
                    tight_facets,
                }
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
        for (i, f) in faces.iter_mut().enumerate() {
            f.id = i;
        }
        Self::from_faces(polytope.clone(), faces)
    }

    fn from_faces(polytope: LatticePolytope, faces: Vec<Face>) -> Self {
        let leq = faces
            .iter()
            .map(|a| {
                faces
                    .iter()
                    .map(|b| a.vertices.iter().all(|v| b.vertices.binary_search(v).is_ok()))
                    .collect()
            })
            .collect();
        let by_tight = faces
            .iter()
            .map(|f| (f.tight_facets.clone(), f.id))
            .collect();
        Self {
            hash: polytope.hash(),
            polytope,
            faces,
            leq,
            by_tight,
        }
    }

    pub fn polytope(&self) -> &LatticePolytope {
        &self.polytope
    }

    pub fn n(&self) -> usize {
        self.polytope.n()
    }

    pub fn polytope_hash(&self) -> &str {
        &self.hash
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn dim(&self, id: FaceId) -> i32 {
        self.faces[id].dim
    }

    /// Rank in the face poset: `dim + 1`.
    pub fn rank(&self, id: FaceId) -> i32 {
        self.faces[id].dim + 1
    }

    pub fn empty_face(&self) -> FaceId {
        0
    }

    pub fn top(&self) -> FaceId {
        self.faces.len() - 1
    }

    /// `a` is a face of `b`.
    pub fn leq(&self, a: FaceId, b: FaceId) -> bool {
        self.leq[a][b]
    }

    /// Nonempty face ids in ascending order.
    pub fn nonempty_faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.faces.len()).filter(|&i| self.faces[i].dim >= 0)
    }

    /// Faces `e` with `q <= e` (including `q`).
    pub fn faces_above(&self, q: FaceId) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.faces.len()).filter(move |&e| self.leq[q][e])
    }

    /// Faces `e` with `e <= q` (including `q`).
    pub fn faces_below(&self, q: FaceId) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.faces.len()).filter(move |&e| self.leq[e][q])
    }

    /// The face whose tight facet set is exactly `tight` (sorted).
    pub fn face_with_tight_set(&self, tight: &[usize]) -> Option<FaceId> {
        self.by_tight.get(tight).copied()
    }

    /// The 0-dimensional face of vertex `v`.
    pub fn vertex_face(&self, v: usize) -> Option<FaceId> {
        self.faces
            .iter()
            .position(|f| f.dim == 0 && f.vertices == [v])
    }

    /// Number of faces of each dimension `-1..=n`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut out = vec![0; self.n() + 2];
        for f in &self.faces {
            out[(f.dim + 1) as usize] += 1;
        }
        out
    }

    /// `sum over nonempty faces of (-1)^dim`; equals 1 for every polytope.
    pub fn euler_characteristic(&self) -> i64 {
        self.nonempty_faces()
            .map(|q| if self.dim(q) % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    /// Every closed interval `[a, b]` with `a < b` has as many elements of
    /// even rank as of odd rank.
    pub fn validate_eulerian(&self) -> bool {
        let n = self.faces.len();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.leq[a][b] {
                    continue;
                }
                let balance: i64 = (0..n)
                    .filter(|&c| self.leq[a][c] && self.leq[c][b])
                    .map(|c| if self.rank(c) % 2 == 0 { 1 } else { -1 })
                    .sum();
                if balance != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// A copy of the poset with one element removed and ids renumbered.
    /// The result is generally not a face lattice; it exists to exercise
    /// the structural validators.
    pub fn without_face(&self, id: FaceId) -> FaceLattice {
        let faces = self
            .faces
            .iter()
            .filter(|f| f.id != id)
            .cloned()
            .enumerate()
            .map(|(i, mut f)| {
                f.id = i;
                f
            })
            .collect();
        Self::from_faces(self.polytope.clone(), faces)
    }

    pub fn export(&self) -> FaceLatticeExport {
        let mut order = Vec::new();
        for a in 0..self.faces.len() {
            for b in 0..self.faces.len() {
                if a != b && self.leq[a][b] {
                    order.push([a, b]);
                }
            }
        }
        FaceLatticeExport {
            n: self.n(),
            vertices: self.polytope.vertices().to_vec(),
            facets: self.polytope.facets().to_vec(),
            f_vector: self.f_vector(),
            faces: self.faces.clone(),
            order,
        }
    }

    /// Rebuilds a lattice from an export, rejecting exports whose face list
    /// or order does not match the one recomputed from the vertices.
    pub fn from_export(export: &FaceLatticeExport) -> Result<Self, PolytopeError> {
        let polytope = PolytopeFile {
            vertices: export.vertices.clone(),
        }
        .build()?;
        let lattice = Self::build(&polytope);
        if lattice.export() != *export {
            return Err(PolytopeError::ExportMismatch);
        }
        Ok(lattice)
    }
}

/// JSON export of a face lattice together with its facet presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceLatticeExport {
    pub n: usize,
    pub vertices: Vec<Vec<i64>>,
    pub facets: Vec<super::hull::Facet>,
    pub f_vector: Vec<usize>,
    pub faces: Vec<Face>,
    /// All strict relations `[a, b]` with `a` a proper face of `b`.
    pub order: Vec<[FaceId; 2]>,
}
