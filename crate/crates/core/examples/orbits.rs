//! q-orbits and defining sets.
//!
//! Run with `cargo run --example orbits`.

use abds::orbits::{cyclotomic_coset, q_orbit, CodeShape, DefiningSet, IndexTuple};

fn main() -> abds::Result<()> {
    println!("2-cyclotomic cosets mod 15:");
    let mut seen = [false; 15];
    for b in 0..15 {
        if !seen[b] {
            let coset = cyclotomic_coset(b, 2, 15)?;
            coset.iter().for_each(|&x| seen[x] = true);
            println!("  C({b}) = {coset:?}");
        }
    }

    let shape = CodeShape::new(2, [3, 35])?;
    let reps: Vec<IndexTuple> = [[0, 5], [0, 7], [0, 15], [1, 0]]
        .map(IndexTuple::from)
        .to_vec();
    println!("\n{shape}");
    for rep in &reps {
        let orbit = q_orbit(rep, &shape)?;
        let list: Vec<String> = orbit.iter().map(|t| t.to_string()).collect();
        println!("  Q{rep} = {{{}}}", list.join(", "));
    }
    let d = DefiningSet::from_reps(&shape, &reps)?;
    println!("|D| = {}, dimension = {}", d.len(), shape.len() - d.len());
    println!("{} q-orbits in total", shape.orbits().len());
    Ok(())
}
