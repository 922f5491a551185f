//! The discrete Fourier transform over the splitting field, and the
//! generating idempotent of a code.
//!
//! Run with `cargo run --example dft`.

use abds::codes::{generating_idempotent, AbelianCode};
use abds::gfield::{weight, FieldContext, Gf, PolyVector};
use abds::orbits::{CodeShape, IndexTuple};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> abds::Result<()> {
    let shape = CodeShape::new(2, vec![3, 5])?;
    let ctx = FieldContext::new(&shape)?;
    println!(
        "{shape}: L = GF({}^{}), modulus {:?}, alphas {:?}",
        ctx.characteristic(),
        ctx.degree(),
        ctx.modulus(),
        ctx.alphas()
    );

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = ctx.random_vector(&mut rng, 0.6);
    let g = ctx.random_vector(&mut rng, 0.6);
    let fg = ctx.poly_mul(&f, &g)?;
    let star = ctx.star(&ctx.dft(&f)?, &ctx.dft(&g)?)?;
    println!("dft(f·g) == dft(f) ⋆ dft(g): {}", ctx.dft(&fg)? == star);
    println!(
        "inverse_dft(dft(f)) == f: {}",
        ctx.inverse_dft(&ctx.dft(&f)?)? == f
    );

    let mono = PolyVector::monomial(&shape, 7, Gf::ONE);
    let spectrum = ctx.dft(&mono)?;
    println!(
        "a monomial has weight {} and a spectrum with {} nonzeros",
        weight(&mono),
        weight(&spectrum)
    );

    let code = AbelianCode::from_reps(
        &shape,
        &[IndexTuple::from([0, 1]), IndexTuple::from([1, 0])],
    )?;
    let e = generating_idempotent(&code, &ctx)?;
    let bits: Vec<String> = e.coeffs().iter().map(|c| c.to_string()).collect();
    println!(
        "idempotent of {} (dim {}): {}",
        shape,
        code.dimension(),
        bits.join("")
    );
    println!("e·e == e: {}", ctx.poly_mul(&e, &e)? == e);
    Ok(())
}
