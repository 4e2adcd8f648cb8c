//! Equivariant character sums at positive, zero and negative dilations, and
//! the duality relating them.
//!
//! ```bash
//! cargo run -p weighted-ehrhart --example character_sums
//! ```

use weighted_ehrhart::algebra::LaurentPoly;
use weighted_ehrhart::corpus;
use weighted_ehrhart::ehrhart::{apply_phi, Ehrhart, Variant};
use weighted_ehrhart::polytope::FaceLattice;
use weighted_ehrhart::weights::{dualize, WeightFunction};

fn main() {
    let seg = FaceLattice::build(&corpus::segment());
    let engine = Ehrhart::new(&seg);
    let ones = WeightFunction::all_ones(&seg);
    for ell in [2, 1, 0, -1, -2] {
        println!("segment, l = {ell:2}: {}", engine.hodge_character_sum(&ones, ell).unwrap());
    }

    let s = engine.hodge_character_sum(&ones, 2).unwrap();
    let phi = corpus::phi_linear(1);
    for variant in Variant::BOTH {
        println!("phi = {phi}, {}: {}", variant.name(), apply_phi(&s, &phi, variant).unwrap());
    }

    let square = FaceLattice::build(&corpus::square());
    let engine = Ehrhart::new(&square);
    let f = WeightFunction::random_seeded(&square, 3);
    let ell = 1;
    let lhs = engine.hodge_character_sum(&dualize(&square, &f).unwrap(), ell).unwrap();
    let rhs = engine
        .hodge_character_sum(&f, -ell)
        .unwrap()
        .map_values(LaurentPoly::substitute_inverse)
        .negate_characters();
    println!("square, random weight, l = {ell}");
    println!("  sum for D f        : {lhs}");
    println!("  dual of sum at -l  : {rhs}");
    println!("  equal: {}", lhs == rhs);
}
