//! The minimum apparent distance search, step by step.
//!
//! Run with `cargo run --example mad_trace`.

use abds::apparent::{Evaluator, HyperMatrix};
use abds::dsbounds::BoundSet;
use abds::orbits::{CodeShape, DefiningSet, IndexTuple};

fn main() -> abds::Result<()> {
    let shape = CodeShape::new(2, vec![5, 15])?;
    let reps: Vec<IndexTuple> = [[0, 0], [0, 3], [0, 5], [0, 7], [1, 0], [1, 2], [1, 4]]
        .map(IndexTuple::from)
        .to_vec();
    let m = HyperMatrix::afforded_by(&DefiningSet::from_reps(&shape, &reps)?);
    let ev = Evaluator::new(BoundSet::bch_ht());
    let trace = ev.mad(&m, &shape)?;

    for (i, step) in trace.steps.iter().enumerate() {
        println!(
            "M_{i}: Δ = {}, m_{i} = {}, weight {}",
            step.distance,
            step.value,
            step.matrix.weight()
        );
        println!("{:?}", step.matrix);
        println!("  involved: {:?}", step.involved);
    }
    println!(
        "result {} (first reached at step {}), stop: {}",
        trace.result, trace.first_min, trace.stop_reason
    );
    println!(
        "l = {}, orbits in support = {}",
        trace.len(),
        trace.free_orbits
    );
    Ok(())
}
