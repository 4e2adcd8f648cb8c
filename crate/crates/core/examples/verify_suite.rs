//! Runs the full verification suite over the bundled corpus.
//!
//! ```bash
//! cargo run --release -p weighted-ehrhart --example verify_suite -- 3
//! ```

use std::time::Instant;

use weighted_ehrhart::corpus;
use weighted_ehrhart::ehrhart::{run_suite, Ehrhart, NamedPhi, NamedWeight, Suite};
use weighted_ehrhart::polytope::FaceLattice;
use weighted_ehrhart::weights::WeightFunction;

fn main() {
    let lmax: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let mut failed = 0;
    for (name, p) in corpus::all() {
        let start = Instant::now();
        let lattice = FaceLattice::build(&p);
        let engine = Ehrhart::new(&lattice);
        let mut weights = vec![
            NamedWeight { name: "all-ones".into(), weight: WeightFunction::all_ones(&lattice) },
            NamedWeight {
                name: "g-weights(P)".into(),
                weight: engine.stanley().g_weight_function(lattice.top()).unwrap(),
            },
        ];
        for seed in 0..2 {
            weights.push(NamedWeight {
                name: format!("random(seed={seed})"),
                weight: WeightFunction::random_seeded(&lattice, seed),
            });
        }
        let phis: Vec<NamedPhi> = corpus::standard_phis(lattice.n())
            .into_iter()
            .map(|(name, phi)| NamedPhi { name: name.into(), phi })
            .collect();
        let report = run_suite(&engine, name, Suite::All, &weights, &phis, lmax);
        failed += report.failed_checks;
        println!(
            "{name:15} f={:?} checks={} failed={} ({:.2?})",
            lattice.f_vector(),
            report.total_checks,
            report.failed_checks,
            start.elapsed()
        );
        for r in &report.reports {
            for c in r.failures() {
                println!("  FAIL {} [{} / {}] {:?}: {} != {}", c.identity, r.weight, r.phi, c.params, c.lhs, c.rhs);
            }
        }
    }
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
