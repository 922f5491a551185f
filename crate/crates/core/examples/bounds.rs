//! BCH and Hartmann–Tzeng values of subsets of `Z_n`.
//!
//! Run with `cargo run --example bounds`.

use abds::dsbounds::{bch_optimal, ht_optimal, residue_set, BoundSet};

fn main() -> abds::Result<()> {
    let cases: &[(usize, &[usize])] = &[
        (24, &[0, 1, 5, 6]),
        (7, &[1, 2, 3]),
        (24, &[23, 0, 1]),
        // The 2-cyclotomic coset of 1 mod 17.
        (17, &[1, 2, 4, 8, 9, 13, 15, 16]),
        (24, &[]),
    ];
    println!("{:>3}  {:<32} {:>4} {:>4}", "n", "N", "bch", "ht");
    for &(n, members) in cases {
        let set = residue_set(n, members.iter().copied());
        println!(
            "{n:>3}  {:<32} {:>4} {:>4}",
            format!("{members:?}"),
            bch_optimal(&set),
            ht_optimal(&set)?
        );
    }

    let b = BoundSet::from_names("bch,ht")?;
    let set = residue_set(24, [0, 1, 5, 6]);
    println!(
        "\nbest of {:?} on {{0,1,5,6}} ⊂ Z_24: {}",
        b.names(),
        b.evaluate_best(&set)
    );
    Ok(())
}
