//! The duality involution on weight functions: delta weights, g-weights as
//! eigenvectors, and the involution on a random weight.
//!
//! ```bash
//! cargo run -p weighted-ehrhart --example duality
//! ```

use weighted_ehrhart::algebra::LaurentPoly;
use weighted_ehrhart::corpus;
use weighted_ehrhart::polytope::FaceLattice;
use weighted_ehrhart::stanley::Stanley;
use weighted_ehrhart::weights::{dualize, WeightFunction};

fn main() {
    let seg = FaceLattice::build(&corpus::segment());
    let delta = WeightFunction::delta(&seg, seg.top()).unwrap();
    println!("segment, f = delta of the edge");
    println!("  f   = {delta}");
    println!("  D f = {}", dualize(&seg, &delta).unwrap());

    let pyramid = FaceLattice::build(&corpus::square_pyramid());
    let stanley = Stanley::new(&pyramid);
    println!("square pyramid, g-weights of each face Q':");
    for q2 in pyramid.nonempty_faces() {
        let g = stanley.g_weight_function(q2).unwrap();
        let factor = LaurentPoly::neg_y_pow(-(pyramid.dim(q2) as i64));
        let eigen = dualize(&pyramid, &g).unwrap() == g.scale(&factor);
        println!("  Q' = {q2:2}: D g = ({factor}) g  holds: {eigen}");
    }

    let f = WeightFunction::random_seeded(&pyramid, 7);
    let dd = dualize(&pyramid, &dualize(&pyramid, &f).unwrap()).unwrap();
    println!("random weight: D D f == f: {}", dd == f);
}
