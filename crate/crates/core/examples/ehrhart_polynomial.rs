//! Weighted Ehrhart polynomials: interpolation, the classical count at
//! `y = 0`, and reciprocity at negative dilations.
//!
//! ```bash
//! cargo run -p weighted-ehrhart --example ehrhart_polynomial
//! ```

use weighted_ehrhart::algebra::rat;
use weighted_ehrhart::corpus;
use weighted_ehrhart::ehrhart::{Ehrhart, Variant};
use weighted_ehrhart::polytope::FaceLattice;
use weighted_ehrhart::weights::WeightFunction;

fn main() {
    let square = FaceLattice::build(&corpus::square());
    let engine = Ehrhart::new(&square);
    let ones = WeightFunction::all_ones(&square);
    for (name, phi) in corpus::standard_phis(2) {
        for variant in Variant::BOTH {
            let z = engine.polynomial(&ones, &phi, variant).unwrap();
            println!("square, f = 1, phi = {name}, {}:\n  {z}", variant.name());
        }
    }

    let cube = FaceLattice::build(&corpus::cube(3));
    let engine = Ehrhart::new(&cube);
    let delta = WeightFunction::delta(&cube, cube.top()).unwrap();
    let z = engine.polynomial(&delta, &corpus::phi_one(3), Variant::ETilde).unwrap();
    println!("cube interior points at y = 0:");
    for ell in 1..=4 {
        let inside = z.eval_int(ell).eval(&rat(0, 1));
        let closed = z.eval_int(-ell).eval(&rat(0, 1));
        println!("  l = {ell}: interior {inside}, closed {}", -closed);
    }

    let pyramid = FaceLattice::build(&corpus::square_pyramid());
    let engine = Ehrhart::new(&pyramid);
    let f = WeightFunction::random_seeded(&pyramid, 1);
    let phi = corpus::phi_quadratic(3);
    for ell in 1..=3 {
        let check = engine.verify_reciprocity(&f, &phi, ell, Variant::E).unwrap();
        println!("pyramid reciprocity l = {ell}: {}", if check.passed { "ok" } else { "FAILED" });
    }
}
