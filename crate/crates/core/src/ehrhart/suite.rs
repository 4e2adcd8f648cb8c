use std::str::FromStr;

use rayon::prelude::*;

use super::{Check, Ehrhart, EhrhartError, EhrhartReport, SuiteReport, Variant};
use crate::algebra::HomogPoly;
use crate::polytope::points_by_face;
use crate::weights::{dualize, WeightFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Reciprocity,
    Duality,
    Purity,
    Hodge,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Reciprocity => "reciprocity",
            Suite::Duality => "duality",
            Suite::Purity => "purity",
            Suite::Hodge => "hodge",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "all" => Suite::All,
            "reciprocity" => Suite::Reciprocity,
            "duality" => Suite::Duality,
            "purity" => Suite::Purity,
            "hodge" => Suite::Hodge,
            other => return Err(format!("unknown suite {other:?}")),
        })
    }
}

#[derive(Clone, Debug)]
pub struct NamedWeight {
    pub name: String,
    pub weight: WeightFunction,
}

#[derive(Clone, Debug)]
pub struct NamedPhi {
    pub name: String,
    pub phi: HomogPoly,
}

fn record(identity: &str, result: Result<Check, EhrhartError>) -> Check {
    result.unwrap_or_else(|e| Check::error(identity, e))
}

fn weight_phi_checks(
    engine: &Ehrhart<'_>,
    suite: Suite,
    f: &WeightFunction,
    phi: &HomogPoly,
    lmax: i64,
) -> Vec<Check> {
    let mut checks = Vec::new();
    for variant in Variant::BOTH {
        let poly = engine.polynomial(f, phi, variant);
        checks.push(match &poly {
            Ok(z) => Check::compare("polynomiality", &"ok", &"ok")
                .with("variant", variant.name())
                .with("degree", z.degree().map_or("-".into(), |d| d.to_string())),
            Err(e) => Check::error("polynomiality", e).with("variant", variant.name()),
        });
        if poly.is_err() {
            continue;
        }
        for ell in 1..=lmax {
            let recip = record("reciprocity", engine.verify_reciprocity(f, phi, ell, variant));
            let dual = record(
                "duality_reciprocity",
                engine.verify_duality_reciprocity(f, phi, ell, variant),
            );
            if suite.includes(Suite::Duality) {
                checks.push(
                    Check::compare("formulations_agree", &recip.passed, &dual.passed)
                        .with("l", ell)
                        .with("variant", variant.name()),
                );
            }
            if suite.includes(Suite::Reciprocity) {
                checks.push(recip);
            }
            if suite.includes(Suite::Duality) {
                checks.push(dual);
            }
        }
    }
    checks
}

fn structure_checks(engine: &Ehrhart<'_>, lmax: i64) -> Vec<Check> {
    let lattice = engine.lattice();
    let n = lattice.n();
    let mut checks = vec![
        Check::compare("eulerian", &lattice.validate_eulerian(), &true),
        Check::compare("euler_relation", &lattice.euler_characteristic(), &1),
    ];
    for ell in 1..=lmax {
        let check = match points_by_face(lattice, ell) {
            Ok(pts) => {
                Check::compare("face_partition", &pts.total(), &brute_force_count(engine, ell))
                    .with("l", ell)
            }
            Err(e) => Check::error("face_partition", e).with("l", ell),
        };
        checks.push(check);
    }
    let h = engine.stanley().h_polynomial();
    checks.push(Check::compare("master_duality", &h.reversed(n), &h));
    checks.push(record("h_link", engine.verify_h_link()));
    checks
}

/// Lattice points of `lP` counted straight from the inequalities.
fn brute_force_count(engine: &Ehrhart<'_>, ell: i64) -> usize {
    let p = engine.lattice().polytope();
    let n = p.n();
    let lo: Vec<i64> = (0..n).map(|i| p.vertices().iter().map(|v| v[i]).min().unwrap() * ell).collect();
    let hi: Vec<i64> = (0..n).map(|i| p.vertices().iter().map(|v| v[i]).max().unwrap() * ell).collect();
    let mut count = 0;
    let mut m = lo.clone();
    loop {
        if p.contains(&m, ell) {
            count += 1;
        }
        let mut i = 0;
        while i < n {
            if m[i] < hi[i] {
                m[i] += 1;
                break;
            }
            m[i] = lo[i];
            i += 1;
        }
        if i == n {
            return count;
        }
    }
}

enum Case<'w> {
    Structure,
    WeightPhi(&'w NamedWeight, &'w NamedPhi),
    Hodge(&'w NamedWeight),
    Purity(&'w NamedPhi),
}

/// Runs a verification suite. Cases are evaluated in parallel and reported
/// in a fixed order: structure, then (weight, phi) pairs, then Hodge
/// duality per weight, then purity per phi.
pub fn run_suite(
    engine: &Ehrhart<'_>,
    polytope_name: &str,
    suite: Suite,
    weights: &[NamedWeight],
    phis: &[NamedPhi],
    lmax: i64,
) -> SuiteReport {
    let lattice = engine.lattice();
    let mut cases = Vec::new();
    if suite == Suite::All {
        cases.push(Case::Structure);
    }
    if suite.includes(Suite::Reciprocity) || suite.includes(Suite::Duality) {
        for w in weights {
            for p in phis {
                cases.push(Case::WeightPhi(w, p));
            }
        }
    }
    if suite.includes(Suite::Hodge) {
        cases.extend(weights.iter().map(Case::Hodge));
    }
    if suite.includes(Suite::Purity) {
        cases.extend(phis.iter().map(Case::Purity));
    }

    let reports: Vec<EhrhartReport> = cases
        .par_iter()
        .map(|case| {
            let (weight, phi, checks) = match case {
                Case::Structure => ("-".to_string(), "-".to_string(), structure_checks(engine, lmax)),
                Case::WeightPhi(w, p) => (
                    w.name.clone(),
                    p.name.clone(),
                    weight_phi_checks(engine, suite, &w.weight, &p.phi, lmax),
                ),
                Case::Hodge(w) => {
                    let mut checks: Vec<Check> = (1..=lmax)
                        .map(|ell| record("hodge_duality", engine.verify_hodge_duality(&w.weight, ell)))
                        .collect();
                    checks.push(match dualize(lattice, &w.weight)
                        .and_then(|d| dualize(lattice, &d))
                    {
                        Ok(dd) => Check::compare("dual_involution", &dd, &w.weight),
                        Err(e) => Check::error("dual_involution", e),
                    });
                    (w.name.clone(), "-".to_string(), checks)
                }
                Case::Purity(p) => {
                    let mut checks = Vec::new();
                    for q in lattice.nonempty_faces() {
                        for variant in Variant::BOTH {
                            for ell in 1..=lmax {
                                checks.push(record(
                                    "purity",
                                    engine.verify_purity(q, &p.phi, ell, variant),
                                ));
                            }
                        }
                    }
                    ("g-weights(all faces)".to_string(), p.name.clone(), checks)
                }
            };
            EhrhartReport {
                polytope: polytope_name.to_string(),
                weight,
                phi,
                checks,
            }
        })
        .collect();

    SuiteReport::new(polytope_name, lattice.polytope_hash(), suite.name(), lmax, reports)
}
