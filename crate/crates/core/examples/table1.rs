//! Recomputes the built-in table of binary abelian codes and compares each
//! row with its expected `(n, dim, Δ)`.
//!
//! Run with `cargo run --example table1`.

use abds::cli::report::RowStatus;
use abds::cli::table1_report;

fn main() -> abds::Result<()> {
    let t = table1_report()?;
    for row in &t.rows {
        let e = &row.expected;
        match (&row.computed, row.status) {
            (Some(c), s) => println!(
                "{}: r = {:?}, B = {}, expected ({}, {}, {}), computed ({}, {}, {}){}",
                row.code,
                row.r,
                row.bounds.join(","),
                e.n,
                e.dim,
                e.delta,
                c.n,
                c.dim,
                c.delta,
                if s == RowStatus::Match {
                    ""
                } else {
                    "  <- differs"
                }
            ),
            (None, _) => println!("{}: {}", row.code, row.note.as_deref().unwrap_or("skipped")),
        }
    }
    println!("{}/{} rows match", t.matched, t.compared);
    Ok(())
}
