//! Brute-force checks: exact minimum distance against the apparent
//! distance, the weight inequality on random polynomials, and the search
//! against full sub-hypermatrix enumeration.
//!
//! Run with `cargo run --release --example verify`.

use abds::apparent::{Evaluator, HyperMatrix};
use abds::codes::{apparent_distance_over_u_with, AbelianCode};
use abds::dsbounds::BoundSet;
use abds::gfield::FieldContext;
use abds::oracle::{
    all_defining_sets, check_mad_lattice, check_weight_theorem, min_distance_bruteforce,
    OracleBudget,
};
use abds::orbits::{CodeShape, DefiningSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> abds::Result<()> {
    let shape = CodeShape::new(2, vec![3, 7])?;
    let ctx = FieldContext::new(&shape)?;
    let ev = Evaluator::new(BoundSet::bch_ht());
    let budget = OracleBudget::default();

    println!("every binary abelian code of shape {shape}:");
    println!("{:>4} {:>3} {:>3}", "dim", "Δ", "d");
    let mut tight = 0;
    let mut total = 0;
    for mask in all_defining_sets(&shape, 16)? {
        let code = AbelianCode::new(DefiningSet::from_mask(&shape, mask)?);
        if code.is_zero() {
            continue;
        }
        let delta = apparent_distance_over_u_with(&code, &ev)?.bound_value;
        let d = min_distance_bruteforce(&code, &ctx, &budget)?;
        assert!(delta <= d);
        total += 1;
        tight += usize::from(delta == d);
        if code.dimension() <= 6 {
            println!("{:>4} {delta:>3} {d:>3}", code.dimension());
        }
    }
    println!("{tight} of {total} codes have Δ = d");

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let w = check_weight_theorem(&ctx, &ev, 500, &mut rng)?;
    println!(
        "weight inequality: {} violations in {} trials",
        w.violations, w.trials
    );

    let m = HyperMatrix::afforded_by(&DefiningSet::from_mask(&shape, vec![false; shape.len()])?);
    let chk = check_mad_lattice(&m, &shape, &ev, &budget)?;
    println!(
        "search {} vs enumeration {} over {} sub-hypermatrices",
        chk.mad, chk.brute_min, chk.subsets
    );
    Ok(())
}
