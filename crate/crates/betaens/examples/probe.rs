// debug probe: dump the failing draw's coefficients
use betaens::ensembles::{sample_cbe_alphas, EnsembleSpec};
use betaens::matrix_models::{build_cmv, eig_unitary_cmv};
use betaens::rng::{substream, Lane};

fn main() {
    let _spec = EnsembleSpec::circular(2, 2.0).unwrap();
    let mut rng = substream(13, Lane(0), 6);
    for trial in 0..20000 {
        let alphas = sample_cbe_alphas(2, 2.0, &mut rng).unwrap();
        let rev = alphas.reversed();
        let c = build_cmv(&rev).unwrap();
        match eig_unitary_cmv(&c) {
            Ok(_) => {}
            Err(e) => {
                println!("trial {trial}: {e}");
                for (k, v) in rev.values().iter().enumerate() {
                    println!("  alpha_{k} = {v}  |alpha| = {}  1-|a| = {:e}", v.norm(), 1.0 - v.norm());
                }
                break;
            }
        }
    }
    println!("done");
}
