//! Code-level apparent distance, at the fixed roots of unity and maximised
//! over all primitive root tuples.
//!
//! Run with `cargo run --example code_report`.

use abds::codes::{apparent_distance_at_alpha, apparent_distance_over_u, AbelianCode};
use abds::dsbounds::BoundSet;
use abds::orbits::{CodeShape, IndexTuple};

fn main() -> abds::Result<()> {
    type Row<'a> = (&'a str, u64, [usize; 2], &'a [[usize; 2]], &'a str);
    let codes: &[Row] = &[
        ("C1", 2, [3, 7], &[[0, 1], [1, 0]], "bch"),
        ("C2", 2, [3, 15], &[[0, 1], [1, 0]], "bch"),
        ("C3", 2, [3, 17], &[[0, 1], [1, 3]], "ht"),
        (
            "C5",
            2,
            [3, 35],
            &[[0, 5], [0, 7], [0, 15], [1, 0]],
            "ht,bch",
        ),
    ];
    println!(
        "{:<4} {:>4} {:>4} {:<8} {:>6} {:>6}  witness",
        "code", "n", "dim", "B", "Δ(ᾱ)", "Δ"
    );
    for &(name, q, r, reps, bounds) in codes {
        let shape = CodeShape::new(q, r.to_vec())?;
        let reps: Vec<IndexTuple> = reps.iter().map(|&t| IndexTuple::from(t)).collect();
        let code = AbelianCode::from_reps(&shape, &reps)?;
        let b = BoundSet::from_names(bounds)?;
        let at = apparent_distance_at_alpha(&code, &b)?;
        let best = apparent_distance_over_u(&code, &b)?;
        println!(
            "{name:<4} {:>4} {:>4} {bounds:<8} {:>6} {:>6}  v = {:?} of {} classes",
            best.length,
            best.dimension,
            at.bound_value,
            best.bound_value,
            best.alpha_variant,
            best.variants
        );
    }
    Ok(())
}
