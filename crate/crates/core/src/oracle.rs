//! Brute-force checks: exact minimum distance by codeword enumeration, the
//! weight inequality on random polynomials, and the minimum apparent
//! distance against an enumeration of every q-orbit sub-hypermatrix.
//!
//! Nothing here shares code paths with the search it checks beyond the
//! apparent distance evaluation itself.

use rand::Rng;
use rayon::prelude::*;

use crate::apparent::{Evaluator, HyperMatrix, MadTrace};
use crate::codes::{generating_idempotent, AbelianCode};
use crate::error::{Error, Result};
use crate::gfield::{weight, FieldContext, Gf, PolyVector};
use crate::orbits::CodeShape;

/// Caps on exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_codewords: u128,
    pub max_orbit_subsets: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_codewords: 1 << 24,
            max_orbit_subsets: 1 << 12,
        }
    }
}

impl OracleBudget {
    pub fn new(max_codewords: u128, max_orbit_subsets: u64) -> Result<Self> {
        if max_codewords == 0 || max_orbit_subsets == 0 {
            return Err(Error::Config("oracle budgets must be positive".into()));
        }
        Ok(Self {
            max_codewords,
            max_orbit_subsets,
        })
    }
}

/// A basis of the code over `GF(q)` in reduced row echelon form, built from
/// the monomial shifts `X^i·e` of the generating idempotent.
pub fn code_basis(code: &AbelianCode, ctx: &FieldContext) -> Result<Vec<Vec<Gf>>> {
    let shape = code.shape();
    let e = generating_idempotent(code, ctx)?;
    let n = shape.len();
    let tuples: Vec<Vec<usize>> = (0..n).map(|l| shape.coords(l).collect()).collect();
    let shifted = |by: usize| -> Vec<Gf> {
        let mut row = vec![Gf::ZERO; n];
        for (src, &c) in e.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let dst: usize = tuples[src]
                .iter()
                .zip(&tuples[by])
                .zip(shape.dims().iter().zip(shape.strides()))
                .map(|((&a, &b), (&r, &st))| (a + b) % r * st)
                .sum();
            row[dst] = c;
        }
        row
    };

    let mut basis: Vec<Vec<Gf>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for by in 0..n {
        let mut row = shifted(by);
        for (b, &pc) in basis.iter().zip(&pivots) {
            let c = row[pc];
            if !c.is_zero() {
                for (x, &y) in row.iter_mut().zip(b) {
                    *x = ctx.sub(*x, ctx.mul(c, y));
                }
            }
        }
        let Some(pc) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let inv = ctx.inv(row[pc])?;
        for x in row.iter_mut() {
            *x = ctx.mul(*x, inv);
        }
        for b in basis.iter_mut() {
            let c = b[pc];
            if !c.is_zero() {
                for (x, &y) in b.iter_mut().zip(&row) {
                    *x = ctx.sub(*x, ctx.mul(c, y));
                }
            }
        }
        basis.push(row);
        pivots.push(pc);
    }
    if basis.len() != code.dimension() {
        return Err(Error::Internal(format!(
            "shift span of the idempotent has rank {}, expected dimension {}",
            basis.len(),
            code.dimension()
        )));
    }
    Ok(basis)
}

/// Exact minimum Hamming weight of the nonzero codewords.
pub fn min_distance_bruteforce(
    code: &AbelianCode,
    ctx: &FieldContext,
    budget: &OracleBudget,
) -> Result<usize> {
    if code.dimension() == 0 {
        return Err(Error::Domain(
            "the zero code has no minimum distance".into(),
        ));
    }
    let q = code.shape().q() as u128;
    let required = (0..code.dimension()).try_fold(1u128, |acc, _| acc.checked_mul(q));
    match required {
        Some(r) if r <= budget.max_codewords => {}
        _ => {
            return Err(Error::Capacity {
                what: "codeword enumeration",
                required: required.unwrap_or(u128::MAX),
                cap: budget.max_codewords,
            })
        }
    }
    let basis = code_basis(code, ctx)?;
    if code.shape().q() == 2 {
        Ok(binary_min_weight(&basis))
    } else {
        Ok(qary_min_weight(&basis, ctx))
    }
}

/// Splits the message space on its top `split` coordinates; each chunk walks
/// a Gray code over the remaining ones.
fn split_bits(k: usize) -> usize {
    k.min(6)
}

fn binary_min_weight(basis: &[Vec<Gf>]) -> usize {
    let n = basis[0].len();
    let words = n.div_ceil(64);
    let rows: Vec<Vec<u64>> = basis
        .iter()
        .map(|r| {
            let mut w = vec![0u64; words];
            for (i, x) in r.iter().enumerate() {
                if !x.is_zero() {
                    w[i / 64] |= 1 << (i % 64);
                }
            }
            w
        })
        .collect();
    let k = rows.len();
    let split = split_bits(k);
    let low = k - split;
    (0u64..1 << split)
        .into_par_iter()
        .map(|chunk| {
            let mut cw = vec![0u64; words];
            for b in 0..split {
                if chunk >> b & 1 == 1 {
                    for (x, y) in cw.iter_mut().zip(&rows[low + b]) {
                        *x ^= y;
                    }
                }
            }
            let weight = |cw: &[u64]| cw.iter().map(|w| w.count_ones() as usize).sum::<usize>();
            let mut best = if chunk == 0 { usize::MAX } else { weight(&cw) };
            for step in 1u64..1 << low {
                let row = &rows[step.trailing_zeros() as usize];
                for (x, y) in cw.iter_mut().zip(row) {
                    *x ^= y;
                }
                best = best.min(weight(&cw));
            }
            best
        })
        .min()
        .expect("at least one chunk")
}

fn qary_min_weight(basis: &[Vec<Gf>], ctx: &FieldContext) -> usize {
    let elems = ctx.base_field();
    let q = elems.len();
    // deltas[g] = elems[g+1] − elems[g] (cyclically)
    let deltas: Vec<Gf> = (0..q)
        .map(|g| ctx.sub(elems[(g + 1) % q], elems[g]))
        .collect();
    let k = basis.len();
    let n = basis[0].len();
    let split = usize::from(k > 1);
    let low = k - split;
    (0..if split == 1 { q } else { 1 })
        .into_par_iter()
        .map(|top| {
            let mut cw = vec![Gf::ZERO; n];
            if split == 1 {
                for (x, &y) in cw.iter_mut().zip(&basis[low]) {
                    *x = ctx.add(*x, ctx.mul(elems[top], y));
                }
            }
            let mut wt = cw.iter().filter(|x| !x.is_zero()).count();
            let mut best = if wt == 0 { usize::MAX } else { wt };
            let mut counter = vec![0usize; low];
            let mut gray = vec![0usize; low];
            while let Some(i) = counter.iter().position(|&d| d != q - 1) {
                counter[..i].iter_mut().for_each(|d| *d = 0);
                counter[i] += 1;
                let delta = deltas[gray[i]];
                gray[i] = (gray[i] + 1) % q;
                for (x, &y) in cw.iter_mut().zip(&basis[i]) {
                    if y.is_zero() {
                        continue;
                    }
                    let before = !x.is_zero();
                    *x = ctx.add(*x, ctx.mul(delta, y));
                    let after = !x.is_zero();
                    if before != after {
                        if after {
                            wt += 1;
                        } else {
                            wt -= 1;
                        }
                    }
                }
                if wt > 0 {
                    best = best.min(wt);
                }
            }
            best
        })
        .min()
        .expect("at least one chunk")
}

/// Outcome of [`check_weight_theorem`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCheck {
    pub trials: usize,
    pub violations: usize,
}

/// Draws random `f` over `L` and counts trials where the apparent distance of
/// the support of `f` exceeds the weight of its inverse transform.
///
/// Half the trials draw `f` directly with random sparsity; the other half
/// take `f` as the transform of a random sparse polynomial, so the inverse
/// transform has small weight.
pub fn check_weight_theorem<R: Rng + ?Sized>(
    ctx: &FieldContext,
    ev: &Evaluator,
    trials: usize,
    rng: &mut R,
) -> Result<WeightCheck> {
    if trials == 0 {
        return Err(Error::Config("at least one trial is required".into()));
    }
    let shape = ctx.shape();
    let mut violations = 0;
    for t in 0..trials {
        let zero_prob = rng.gen_range(0.0..0.95);
        let f = if t % 2 == 0 {
            ctx.random_vector(rng, zero_prob)
        } else {
            let sparse = rng.gen_range(0.5..1.0);
            ctx.dft(&ctx.random_vector(rng, sparse))?
        };
        let m = HyperMatrix::new(shape.dims().to_vec(), f.support())?;
        let lhs = ev.distance(&m);
        let rhs = weight(&ctx.inverse_dft(&f)?);
        if lhs > rhs {
            violations += 1;
        }
    }
    Ok(WeightCheck { trials, violations })
}

/// Outcome of [`check_mad_lattice`].
#[derive(Clone, Debug)]
pub struct LatticeCheck {
    pub mad: usize,
    pub brute_min: usize,
    pub equal: bool,
    pub subsets: u64,
    /// Sub-hypermatrices `P` with `Δ(P) < m_{i−1}` but `P ≰ M_i`.
    pub filtration_violations: usize,
    pub trace: MadTrace,
}

/// Minimum of `Δ_B(P)` over every nonzero q-orbits hypermatrix `P ≤ M`.
pub fn lattice_min(
    m: &HyperMatrix,
    shape: &CodeShape,
    ev: &Evaluator,
    budget: &OracleBudget,
) -> Result<usize> {
    let (free, subsets) = free_orbits(m, shape, budget)?;
    Ok((1..=subsets)
        .into_par_iter()
        .map(|mask| ev.distance(&sub_hypermatrix(shape, &free, mask)))
        .min()
        .unwrap_or(0))
}

fn free_orbits(
    m: &HyperMatrix,
    shape: &CodeShape,
    budget: &OracleBudget,
) -> Result<(Vec<Vec<usize>>, u64)> {
    if m.dims() != shape.dims() {
        return Err(Error::Domain("hypermatrix does not match the shape".into()));
    }
    let free: Vec<Vec<usize>> = shape
        .orbits()
        .into_iter()
        .filter(|o| m.support()[o[0]])
        .collect();
    if free.len() >= 64 || (1u64 << free.len()) - 1 > budget.max_orbit_subsets {
        return Err(Error::Capacity {
            what: "sub-hypermatrix enumeration",
            required: (1u128 << free.len().min(127)) - 1,
            cap: budget.max_orbit_subsets as u128,
        });
    }
    Ok((free.clone(), (1u64 << free.len()) - 1))
}

fn sub_hypermatrix(shape: &CodeShape, free: &[Vec<usize>], mask: u64) -> HyperMatrix {
    let mut support = vec![false; shape.len()];
    for (b, orbit) in free.iter().enumerate() {
        if mask >> b & 1 == 1 {
            for &x in orbit {
                support[x] = true;
            }
        }
    }
    HyperMatrix::new(shape.dims().to_vec(), support).expect("dimensions match")
}

/// Runs the minimum apparent distance search and compares it with the
/// enumeration of every nonzero q-orbits hypermatrix below `M`.
pub fn check_mad_lattice(
    m: &HyperMatrix,
    shape: &CodeShape,
    ev: &Evaluator,
    budget: &OracleBudget,
) -> Result<LatticeCheck> {
    let (free, subsets) = free_orbits(m, shape, budget)?;
    let trace = ev.mad(m, shape)?;
    let (brute_min, filtration_violations) = (1..=subsets)
        .into_par_iter()
        .map(|mask| {
            let p = sub_hypermatrix(shape, &free, mask);
            let d = ev.distance(&p);
            let bad = (1..trace.steps.len())
                .filter(|&i| {
                    d < trace.steps[i - 1].value
                        && p.support()
                            .iter()
                            .zip(trace.steps[i].matrix.support())
                            .any(|(&a, &b)| a && !b)
                })
                .count();
            (d, bad)
        })
        .reduce(|| (usize::MAX, 0), |a, b| (a.0.min(b.0), a.1 + b.1));
    Ok(LatticeCheck {
        mad: trace.result,
        brute_min,
        equal: trace.result == brute_min,
        subsets,
        filtration_violations,
        trace,
    })
}

/// Every bound value the library can certify for `code`, checked against its
/// exact minimum distance.
#[derive(Clone, Debug)]
pub struct SoundnessCheck {
    pub dimension: usize,
    pub min_distance: usize,
    pub apparent_distance: usize,
    /// Value of each shipped bound on the defining set (cyclic codes only).
    pub ds_values: Vec<(String, usize)>,
    pub violations: usize,
}

pub fn check_soundness(
    code: &AbelianCode,
    ctx: &FieldContext,
    ev: &Evaluator,
    budget: &OracleBudget,
) -> Result<SoundnessCheck> {
    let d = min_distance_bruteforce(code, ctx, budget)?;
    let report = crate::codes::apparent_distance_over_u_with(code, ev)?;
    let mut violations = usize::from(report.bound_value > d);
    let mut ds_values = Vec::new();
    if code.shape().rank() == 1 && !code.defining_set().is_empty() {
        for b in ev.bounds().iter() {
            let v = b.evaluate(code.defining_set().mask());
            violations += usize::from(v > d);
            ds_values.push((b.name().to_string(), v));
        }
    }
    Ok(SoundnessCheck {
        dimension: code.dimension(),
        min_distance: d,
        apparent_distance: report.bound_value,
        ds_values,
        violations,
    })
}

/// Every union of q-orbits of the shape, as membership masks.
pub fn all_defining_sets(shape: &CodeShape, max_orbits: usize) -> Result<Vec<Vec<bool>>> {
    let orbits = shape.orbits();
    if orbits.len() > max_orbits {
        return Err(Error::Capacity {
            what: "defining-set enumeration",
            required: 1u128 << orbits.len().min(127),
            cap: 1u128 << max_orbits,
        });
    }
    Ok((0u64..1 << orbits.len())
        .map(|mask| {
            let mut m = vec![false; shape.len()];
            for (b, o) in orbits.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    for &x in o {
                        m[x] = true;
                    }
                }
            }
            m
        })
        .collect())
}

/// The rank over `GF(q)` of a set of vectors; used to cross-check bases.
pub fn rank(rows: &[PolyVector], ctx: &FieldContext) -> Result<usize> {
    let mut m: Vec<Vec<Gf>> = rows.iter().map(|r| r.coeffs().to_vec()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = ctx.inv(m[r][c])?;
        let pivot: Vec<Gf> = m[r].iter().map(|&x| ctx.mul(x, inv)).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = ctx.sub(*x, ctx.mul(f, y));
                }
            }
        }
        m[r] = pivot;
        r += 1;
    }
    Ok(r)
}
