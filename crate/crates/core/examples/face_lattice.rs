//! Facet presentation, face lattice and lattice-point partition of the
//! square pyramid.
//!
//! ```bash
//! cargo run -p weighted-ehrhart --example face_lattice
//! ```

use weighted_ehrhart::corpus;
use weighted_ehrhart::polytope::{points_by_face, FaceLattice};

fn main() {
    let pyramid = corpus::square_pyramid();
    println!("vertices: {:?}", pyramid.vertices());
    for f in pyramid.facets() {
        println!("facet  <m, {:?}> >= {}", f.normal, -f.offset);
    }
    println!("simple: {}", pyramid.is_simple());

    let lattice = FaceLattice::build(&pyramid);
    println!("f-vector: {:?}", lattice.f_vector());
    println!("Eulerian: {}", lattice.validate_eulerian());
    for face in lattice.faces() {
        println!(
            "  face {:2}  dim {:2}  vertices {:?}  on facets {:?}",
            face.id, face.dim, face.vertices, face.tight_facets
        );
    }

    let ell = 2;
    let points = points_by_face(&lattice, ell).unwrap();
    println!("points of {ell}P by face:");
    for q in lattice.nonempty_faces() {
        let pts = points.relint(q);
        if !pts.is_empty() {
            println!("  face {q:2}: {pts:?}");
        }
    }
    println!("total: {}", points.total());
}
