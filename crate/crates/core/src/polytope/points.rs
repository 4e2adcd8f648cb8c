use super::lattice::{FaceId, FaceLattice};
use super::PolytopeError;

/// Lattice points of a dilate `lP`, partitioned by the face whose relative
/// interior contains them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointsByFace {
    ell: i64,
    per_face: Vec<Vec<Vec<i64>>>,
}

impl PointsByFace {
    pub fn ell(&self) -> i64 {
        self.ell
    }

    /// Points of `Relint(l Q)`, lexicographically sorted.
    pub fn relint(&self, q: FaceId) -> &[Vec<i64>] {
        &self.per_face[q]
    }

    /// Points of the closed face `l Q`: the union of the relative interiors
    /// of all faces of `Q`.
    pub fn closed<'a>(
        &'a self,
        lattice: &'a FaceLattice,
        q: FaceId,
    ) -> impl Iterator<Item = &'a Vec<i64>> + 'a {
        lattice
            .faces_below(q)
            .flat_map(move |e| self.per_face[e].iter())
    }

    pub fn total(&self) -> usize {
        self.per_face.iter().map(Vec::len).sum()
    }
}

/// Scans the bounding box of `l * vertices` and assigns every lattice point
/// of `lP` to the face whose tight facet set matches the point's.
pub fn points_by_face(lattice: &FaceLattice, ell: i64) -> Result<PointsByFace, PolytopeError> {
    if ell <= 0 {
        return Err(PolytopeError::NonPositiveDilation(ell));
    }
    let p = lattice.polytope();
    let n = p.n();
    let lo: Vec<i64> = (0..n)
        .map(|i| p.vertices().iter().map(|v| v[i]).min().unwrap() * ell)
        .collect();
    let hi: Vec<i64> = (0..n)
        .map(|i| p.vertices().iter().map(|v| v[i]).max().unwrap() * ell)
        .collect();

    let mut per_face = vec![Vec::new(); lattice.len()];
    let mut m = lo.clone();
    'scan: loop {
        let mut tight = Vec::new();
        let mut inside = true;
        for (i, f) in p.facets().iter().enumerate() {
            match f.slack(&m, ell) {
                0 => tight.push(i),
                s if s < 0 => {
                    inside = false;
                    break;
                }
                _ => {}
            }
        }
        if inside {
            let face = lattice
                .face_with_tight_set(&tight)
                .expect("tight set of a lattice point is the tight set of a face");
            per_face[face].push(m.clone());
        }
        // odometer, last coordinate fastest: lexicographic order
        let mut i = n;
        loop {
            if i == 0 {
                break 'scan;
            }
            i -= 1;
            if m[i] < hi[i] {
                m[i] += 1;
                break;
            }
            m[i] = lo[i];
        }
    }
    Ok(PointsByFace { ell, per_face })
}
