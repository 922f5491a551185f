//! Apparent distance of the hypermatrix afforded by a defining set, with
//! the per-axis quantities ω, ε and Δ.
//!
//! Run with `cargo run --example apparent_distance`.

use abds::apparent::{Evaluator, HyperMatrix};
use abds::dsbounds::BoundSet;
use abds::orbits::{CodeShape, DefiningSet, IndexTuple};

fn main() -> abds::Result<()> {
    let shape = CodeShape::new(5, vec![3, 24])?;
    let reps: Vec<IndexTuple> = [
        [0, 0],
        [0, 1],
        [0, 2],
        [0, 3],
        [0, 6],
        [0, 7],
        [0, 9],
        [1, 0],
        [1, 1],
        [1, 5],
        [1, 6],
    ]
    .map(IndexTuple::from)
    .to_vec();
    let m = HyperMatrix::afforded_by(&DefiningSet::from_reps(&shape, &reps)?);
    println!("{shape}\n{m:?}");

    for bounds in [BoundSet::ht(), BoundSet::bch(), BoundSet::bch_ht()] {
        let ev = Evaluator::new(bounds);
        let a = ev.analyze(&m);
        println!("B = {:?}: Δ = {}", ev.bounds().names(), a.value);
        for ax in &a.axes {
            println!(
                "  axis {}: ω = {}, ε = {}, Δ = {}",
                ax.axis, ax.omega, ax.epsilon, ax.delta
            );
        }
        println!("  involved hypercolumns: {:?}", a.involved());
    }
    Ok(())
}
