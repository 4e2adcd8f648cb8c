//! Stanley g-polynomials of polar faces and the h-polynomials of the polar
//! polytopes in the bundled corpus.
//!
//! ```bash
//! cargo run -p weighted-ehrhart --example stanley_g
//! ```

use weighted_ehrhart::corpus;
use weighted_ehrhart::polytope::FaceLattice;
use weighted_ehrhart::stanley::Stanley;

fn main() {
    let lattice = FaceLattice::build(&corpus::square_pyramid());
    let stanley = Stanley::new(&lattice);
    let top = lattice.top();
    println!("square pyramid, g of the polar face of each Q inside P:");
    for q in lattice.nonempty_faces() {
        let g = stanley.polar_g(q, top).unwrap();
        println!("  face {q:2} (dim {}): g = {g}", lattice.dim(q));
    }
    let weights = stanley.g_weight_function(top).unwrap();
    println!("g-weights of P: {weights}");

    println!();
    for (name, p) in corpus::all() {
        let lattice = FaceLattice::build(&p);
        let h = Stanley::new(&lattice).h_polynomial();
        let palindromic = h.reversed(lattice.n()) == h;
        println!("{name:15} h = {h:30} palindromic: {palindromic}");
    }
}
