//! Abelian codes given by their defining sets, and their apparent distance.
//!
//! The apparent distance of a code at a fixed `ᾱ` is the minimum apparent
//! distance of the hypermatrix afforded by its defining set; it is never
//! computed by iterating codewords. Changing `ᾱ` to `ᾱ^v` for a unit tuple
//! `v` transforms the defining set by coordinatewise scaling, so the maximum
//! over all primitive tuples is a maximum over scaled defining sets.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::apparent::{Evaluator, HyperMatrix, MadTrace};
use crate::arith;
use crate::dsbounds::BoundSet;
use crate::error::{Error, Result};
use crate::gfield::{FieldContext, PolyVector};
use crate::orbits::{CodeShape, DefiningSet, IndexTuple};

/// An ideal of `GF(q)[X1,…,Xs]/(X1^r1 − 1,…,Xs^rs − 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianCode {
    defining_set: DefiningSet,
}

impl AbelianCode {
    pub fn new(defining_set: DefiningSet) -> Self {
        Self { defining_set }
    }

    pub fn from_reps<'a>(
        shape: &CodeShape,
        reps: impl IntoIterator<Item = &'a IndexTuple>,
    ) -> Result<Self> {
        Ok(Self::new(DefiningSet::from_reps(shape, reps)?))
    }

    pub fn shape(&self) -> &CodeShape {
        self.defining_set.shape()
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining_set
    }

    /// Code length `n`.
    pub fn len(&self) -> usize {
        self.shape().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dimension(&self) -> usize {
        self.len() - self.defining_set.len()
    }

    /// True for the zero ideal, whose defining set is all of `I`.
    pub fn is_zero(&self) -> bool {
        self.defining_set.is_full()
    }

    fn check_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::Domain(
                "the zero code has no apparent distance".into(),
            ));
        }
        Ok(())
    }
}

/// Everything reported for one code.
#[derive(Clone, Debug)]
pub struct CodeReport {
    pub length: usize,
    pub dimension: usize,
    /// The apparent distance, a lower bound on the minimum distance.
    pub bound_value: usize,
    pub bounds: Vec<String>,
    pub trace: MadTrace,
    /// Unit tuple `v` of the variant attaining `bound_value`.
    pub alpha_variant: Vec<u64>,
    /// Number of distinct variants evaluated.
    pub variants: usize,
}

/// `Δ_{B,ᾱ}(C)` for the fixed `ᾱ` the defining set refers to.
pub fn apparent_distance_at_alpha(code: &AbelianCode, bounds: &BoundSet) -> Result<CodeReport> {
    apparent_distance_at_alpha_with(code, &Evaluator::new(bounds.clone()))
}

pub fn apparent_distance_at_alpha_with(code: &AbelianCode, ev: &Evaluator) -> Result<CodeReport> {
    code.check_nonzero()?;
    ev.check_dims(code.shape().dims())?;
    let trace = ev.mad(&HyperMatrix::afforded_by(code.defining_set()), code.shape())?;
    Ok(CodeReport {
        length: code.len(),
        dimension: code.dimension(),
        bound_value: trace.result,
        bounds: ev.bounds().names(),
        trace,
        alpha_variant: identity_variant(code.shape()),
        variants: 1,
    })
}

/// `Δ_B(C)`: the maximum of the fixed-`ᾱ` value over all primitive tuples.
pub fn apparent_distance_over_u(code: &AbelianCode, bounds: &BoundSet) -> Result<CodeReport> {
    apparent_distance_over_u_with(code, &Evaluator::new(bounds.clone()))
}

pub fn apparent_distance_over_u_with(code: &AbelianCode, ev: &Evaluator) -> Result<CodeReport> {
    code.check_nonzero()?;
    ev.check_dims(code.shape().dims())?;
    let shape = code.shape();
    let classes = unit_classes(shape);
    let results: Vec<(Vec<u64>, MadTrace)> = classes
        .par_iter()
        .map(|v| {
            let d = code.defining_set().scaled(v)?;
            let trace = ev.mad(&HyperMatrix::afforded_by(&d), shape)?;
            Ok((v.clone(), trace))
        })
        .collect::<Result<_>>()?;
    // Ties go to the first class in canonical order.
    let best = results
        .iter()
        .enumerate()
        .max_by(|(i, a), (j, b)| a.1.result.cmp(&b.1.result).then(j.cmp(i)))
        .map(|(i, _)| i)
        .expect("at least the identity class");
    let (v, trace) = results[best].clone();
    Ok(CodeReport {
        length: code.len(),
        dimension: code.dimension(),
        bound_value: trace.result,
        bounds: ev.bounds().names(),
        trace,
        alpha_variant: v,
        variants: results.len(),
    })
}

/// The unit tuple of the fixed `ᾱ` (`0` on trivial axes, where `Z_1 = {0}`).
pub fn identity_variant(shape: &CodeShape) -> Vec<u64> {
    shape.dims().iter().map(|&r| u64::from(r != 1)).collect()
}

/// Representatives of the unit tuples modulo the diagonal action of `q`,
/// canonical (smallest) member of each class, identity class first.
pub fn unit_classes(shape: &CodeShape) -> Vec<Vec<u64>> {
    let per_axis: Vec<Vec<usize>> = shape.dims().iter().map(|&r| arith::units(r)).collect();
    let mut all: Vec<Vec<u64>> = vec![Vec::new()];
    for units in &per_axis {
        all = all
            .into_iter()
            .flat_map(|prefix| {
                units.iter().map(move |&u| {
                    let mut v = prefix.clone();
                    v.push(u as u64);
                    v
                })
            })
            .collect();
    }
    let canonical = |v: &[u64]| -> Vec<u64> {
        let mut best = v.to_vec();
        let mut cur = v.to_vec();
        loop {
            for (c, &r) in cur.iter_mut().zip(shape.dims()) {
                *c = *c * shape.q() % r as u64;
            }
            if cur == v {
                break;
            }
            best = best.min(cur.clone());
        }
        best
    };
    let identity = identity_variant(shape);
    let set: BTreeSet<Vec<u64>> = all.iter().map(|v| canonical(v)).collect();
    let id_class = canonical(&identity);
    let mut out = vec![id_class.clone()];
    out.extend(set.into_iter().filter(|v| *v != id_class));
    out
}

/// The generating idempotent `e`, the inverse transform of the indicator of
/// `I ∖ D`. Its coefficients lie in `GF(q)`.
pub fn generating_idempotent(code: &AbelianCode, ctx: &FieldContext) -> Result<PolyVector> {
    if ctx.shape() != code.shape() {
        return Err(Error::Domain(format!(
            "field context for {} used with a code of shape {}",
            ctx.shape(),
            code.shape()
        )));
    }
    let nonzeros: Vec<bool> = code.defining_set().mask().iter().map(|&m| !m).collect();
    let e = ctx.inverse_dft(&PolyVector::indicator(code.shape(), &nonzeros))?;
    if let Some(c) = e.coeffs().iter().find(|&&c| !ctx.in_base_field(c)) {
        return Err(Error::Internal(format!(
            "idempotent coefficient {c} lies outside GF({})",
            code.shape().q()
        )));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfield::Gf;

    fn t(c: [usize; 2]) -> IndexTuple {
        c.into()
    }

    #[test]
    fn dimensions() {
        let s = CodeShape::new(2, vec![3, 35]).unwrap();
        let c = AbelianCode::from_reps(&s, &[t([0, 5]), t([0, 7]), t([0, 15]), t([1, 0])]).unwrap();
        assert_eq!(c.dimension(), 93);
        let s = CodeShape::new(2, vec![3, 7]).unwrap();
        let c = AbelianCode::from_reps(&s, &[t([0, 1]), t([1, 0])]).unwrap();
        assert_eq!(c.dimension(), 16);
        let c = AbelianCode::new(DefiningSet::empty(&s));
        assert_eq!(c.dimension(), 21);
    }

    #[test]
    fn zero_code_is_rejected() {
        let s = CodeShape::new(2, vec![3, 3]).unwrap();
        let all: Vec<IndexTuple> = (0..9).map(|l| s.tuple(l)).collect();
        let c = AbelianCode::from_reps(&s, &all).unwrap();
        assert!(c.is_zero());
        assert!(matches!(
            apparent_distance_at_alpha(&c, &BoundSet::bch()),
            Err(Error::Domain(_))
        ));
        assert!(apparent_distance_over_u(&c, &BoundSet::bch()).is_err());
    }

    #[test]
    fn single_orbit_code() {
        let s = CodeShape::new(2, vec![3, 3]).unwrap();
        let c = AbelianCode::from_reps(&s, &[t([0, 0])]).unwrap();
        let r = apparent_distance_at_alpha(&c, &BoundSet::bch_ht()).unwrap();
        assert!(r.bound_value >= 1);
        assert_eq!(r.dimension, 8);
    }

    #[test]
    fn unit_class_enumeration() {
        // Z_3^* × Z_7^* has 12 tuples; doubling acts with order lcm(2,3) = 6.
        let s = CodeShape::new(2, vec![3, 7]).unwrap();
        let classes = unit_classes(&s);
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0], vec![1, 1]);
        // Z_7^* = <3>, and 2 generates only {1,2,4}.
        let s = CodeShape::new(2, vec![7]).unwrap();
        assert_eq!(unit_classes(&s).len(), 2);
        let s = CodeShape::new(2, vec![3]).unwrap();
        assert_eq!(unit_classes(&s), vec![vec![1]]);
    }

    #[test]
    fn single_class_matches_fixed_alpha() {
        // 2 generates Z_5^*.
        let s1 = CodeShape::new(2, vec![5]).unwrap();
        assert_eq!(unit_classes(&s1).len(), 1);
        let c = AbelianCode::from_reps(&s1, &[IndexTuple::new(vec![1])]).unwrap();
        let a = apparent_distance_at_alpha(&c, &BoundSet::bch_ht()).unwrap();
        let u = apparent_distance_over_u(&c, &BoundSet::bch_ht()).unwrap();
        assert_eq!(a.bound_value, u.bound_value);
        assert_eq!(u.variants, 1);
    }

    #[test]
    fn symmetric_defining_set_gives_equal_values() {
        // Q(0,1) ∪ Q(0,3) ∪ Q(1,0) is invariant under every unit scaling.
        let s = CodeShape::new(2, vec![3, 7]).unwrap();
        let c = AbelianCode::from_reps(&s, &[t([0, 1]), t([0, 3]), t([1, 0])]).unwrap();
        let ev = Evaluator::new(BoundSet::bch_ht());
        let values: Vec<usize> = unit_classes(&s)
            .iter()
            .map(|v| {
                let d = c.defining_set().scaled(v).unwrap();
                assert_eq!(&d, c.defining_set());
                ev.mad(&HyperMatrix::afforded_by(&d), &s).unwrap().result
            })
            .collect();
        assert!(values.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn idempotent_examples() {
        let s = CodeShape::new(2, vec![3, 3]).unwrap();
        let ctx = FieldContext::new(&s).unwrap();
        // D = I ∖ {0}: e = n^{-1}·Σ X^i; here n = 9 ≡ 1 (mod 2).
        let others: Vec<IndexTuple> = (1..9).map(|l| s.tuple(l)).collect();
        let c = AbelianCode::from_reps(&s, &others).unwrap();
        let e = generating_idempotent(&c, &ctx).unwrap();
        assert!(e.coeffs().iter().all(|&x| x == Gf::ONE));
        // D = ∅: e = 1.
        let c = AbelianCode::new(DefiningSet::empty(&s));
        assert_eq!(
            generating_idempotent(&c, &ctx).unwrap(),
            PolyVector::one(&s)
        );
        // Shape mismatch.
        let other = FieldContext::new(&CodeShape::new(2, vec![3, 5]).unwrap()).unwrap();
        assert!(generating_idempotent(&c, &other).is_err());
    }

    #[test]
    fn idempotent_over_gf5() {
        let s = CodeShape::new(5, vec![3, 4]).unwrap();
        let ctx = FieldContext::new(&s).unwrap();
        let others: Vec<IndexTuple> = (1..12).map(|l| s.tuple(l)).collect();
        let c = AbelianCode::from_reps(&s, &others).unwrap();
        let e = generating_idempotent(&c, &ctx).unwrap();
        // 12^{-1} = 2^{-1} = 3 in GF(5).
        assert!(e.coeffs().iter().all(|&x| x == Gf(3)));
        let sq = ctx.poly_mul(&e, &e).unwrap();
        assert_eq!(sq, e);
    }
}
