//! Index arithmetic on `I = Z_r1 × … × Z_rs`, q-orbits and defining sets.
//!
//! Tuples are stored internally as row-major linear indices. Row-major order
//! with the first coordinate most significant coincides with lexicographic
//! order on tuples, so the smallest linear index of an orbit is also its
//! lexicographically smallest member.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Field order and component lengths of an abelian code.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CodeShape {
    q: u64,
    p: u64,
    base_degree: u32,
    dims: Vec<usize>,
    strides: Vec<usize>,
    n: usize,
}

impl CodeShape {
    /// Largest accepted `n = r1·…·rs`.
    pub const MAX_LEN: usize = 1 << 20;

    pub fn new(q: u64, dims: impl Into<Vec<usize>>) -> Result<Self> {
        let dims = dims.into();
        let (p, base_degree) = arith::prime_power(q)
            .ok_or_else(|| Error::Config(format!("q = {q} is not a prime power")))?;
        if dims.is_empty() {
            return Err(Error::Config(
                "at least one component length is required".into(),
            ));
        }
        let mut n: usize = 1;
        for &r in &dims {
            if r == 0 {
                return Err(Error::Config("component lengths must be positive".into()));
            }
            if arith::gcd(r as u64, q) != 1 {
                return Err(Error::Config(format!(
                    "gcd({r}, {q}) != 1: the group algebra is not semisimple"
                )));
            }
            n = n
                .checked_mul(r)
                .filter(|&n| n <= Self::MAX_LEN)
                .ok_or_else(|| Error::Config(format!("length exceeds {}", Self::MAX_LEN)))?;
        }
        let mut strides = vec![1; dims.len()];
        for k in (0..dims.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * dims[k + 1];
        }
        Ok(Self {
            q,
            p,
            base_degree,
            dims,
            strides,
            n,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Characteristic of the base field.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Degree of `GF(q)` over its prime field.
    pub fn base_degree(&self) -> u32 {
        self.base_degree
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of variables `s`.
    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub(crate) fn strides(&self) -> &[usize] {
        &self.strides
    }

    pub fn linear(&self, t: &IndexTuple) -> Result<usize> {
        if t.0.len() != self.dims.len() {
            return Err(Error::Index(format!(
                "tuple {t} has {} coordinates, shape has {}",
                t.0.len(),
                self.dims.len()
            )));
        }
        let mut lin = 0;
        for (k, (&c, &r)) in t.0.iter().zip(&self.dims).enumerate() {
            if c >= r {
                return Err(Error::Index(format!(
                    "coordinate {k} of {t} is out of range 0..{r}"
                )));
            }
            lin += c * self.strides[k];
        }
        Ok(lin)
    }

    pub fn tuple(&self, lin: usize) -> IndexTuple {
        IndexTuple(self.coords(lin).collect())
    }

    pub(crate) fn coords(&self, lin: usize) -> impl Iterator<Item = usize> + '_ {
        self.dims
            .iter()
            .zip(&self.strides)
            .map(move |(&r, &st)| (lin / st) % r)
    }

    /// Coordinatewise multiplication by `v_k` modulo `r_k`.
    pub(crate) fn scale_linear(&self, lin: usize, v: &[u64]) -> usize {
        self.coords(lin)
            .zip(v)
            .zip(self.dims.iter().zip(&self.strides))
            .map(|((c, &f), (&r, &st))| ((c as u128 * f as u128) % r as u128) as usize * st)
            .sum()
    }

    pub(crate) fn mul_q(&self, lin: usize) -> usize {
        let q = vec![self.q; self.dims.len()];
        self.scale_linear(lin, &q)
    }

    /// Orbit of a linear index, sorted increasingly.
    pub(crate) fn orbit_linear(&self, lin: usize) -> Vec<usize> {
        let mut out = vec![lin];
        let mut x = self.mul_q(lin);
        while x != lin {
            out.push(x);
            x = self.mul_q(x);
        }
        out.sort_unstable();
        out
    }

    /// Partition of `I` into q-orbits, ordered by representative.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for lin in 0..self.n {
            if seen[lin] {
                continue;
            }
            let orb = self.orbit_linear(lin);
            for &x in &orb {
                seen[x] = true;
            }
            out.push(orb);
        }
        out
    }

    /// Multiplicative order of `q` modulo `lcm(r1,…,rs)`.
    pub fn q_order(&self) -> u64 {
        let l = self
            .dims
            .iter()
            .fold(1u64, |acc, &r| arith::lcm(acc, r as u64));
        arith::mult_order(self.q, l)
    }
}

impl fmt::Display for CodeShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={} r=(", self.q)?;
        for (k, r) in self.dims.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// A point `(i1,…,is)` of the index set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexTuple(pub Vec<usize>);

impl IndexTuple {
    pub fn new(coords: impl Into<Vec<usize>>) -> Self {
        Self(coords.into())
    }

    /// Coordinate `k` (0-based).
    pub fn coord(&self, k: usize) -> usize {
        self.0[k]
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }
}

impl From<&[usize]> for IndexTuple {
    fn from(c: &[usize]) -> Self {
        Self(c.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for IndexTuple {
    fn from(c: [usize; N]) -> Self {
        Self(c.to_vec())
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for IndexTuple {
    type Err = Error;

    /// Accepts `0,5`, `(0,5)` and whitespace-separated forms.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad coordinate {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(Error::Parse(format!("empty tuple {s:?}")));
        }
        Ok(Self(coords))
    }
}

/// The q-orbit `Q(a)` of a tuple, sorted lexicographically.
pub fn q_orbit(a: &IndexTuple, shape: &CodeShape) -> Result<Vec<IndexTuple>> {
    let lin = shape.linear(a)?;
    Ok(shape
        .orbit_linear(lin)
        .into_iter()
        .map(|x| shape.tuple(x))
        .collect())
}

/// The q-cyclotomic coset of `b` modulo `n`, sorted.
pub fn cyclotomic_coset(b: usize, q: u64, n: usize) -> Result<Vec<usize>> {
    let shape = CodeShape::new(q, vec![n])?;
    if b >= n {
        return Err(Error::Index(format!("{b} is not a residue modulo {n}")));
    }
    Ok(shape.orbit_linear(b))
}

/// True iff `members` is closed under the q-action.
pub fn is_union_of_orbits<'a>(
    members: impl IntoIterator<Item = &'a IndexTuple>,
    shape: &CodeShape,
) -> Result<bool> {
    let mut mask = vec![false; shape.len()];
    for t in members {
        mask[shape.linear(t)?] = true;
    }
    Ok(mask_is_closed(&mask, shape))
}

pub(crate) fn mask_is_closed(mask: &[bool], shape: &CodeShape) -> bool {
    mask.iter()
        .enumerate()
        .all(|(lin, &m)| !m || mask[shape.mul_q(lin)])
}

/// A union of q-orbits: the defining set of an abelian code.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DefiningSet {
    shape: CodeShape,
    mask: Vec<bool>,
    orbit_reps: Vec<IndexTuple>,
}

impl DefiningSet {
    pub fn empty(shape: &CodeShape) -> Self {
        Self {
            shape: shape.clone(),
            mask: vec![false; shape.len()],
            orbit_reps: Vec::new(),
        }
    }

    /// Union of the q-orbits of the given representatives.
    pub fn from_reps<'a>(
        shape: &CodeShape,
        reps: impl IntoIterator<Item = &'a IndexTuple>,
    ) -> Result<Self> {
        let mut mask = vec![false; shape.len()];
        for rep in reps {
            let lin = shape.linear(rep)?;
            for x in shape.orbit_linear(lin) {
                mask[x] = true;
            }
        }
        Ok(Self::from_closed_mask(shape, mask))
    }

    /// Builds a defining set from an explicit member list, rejecting sets
    /// that are not closed under the q-action.
    pub fn from_members<'a>(
        shape: &CodeShape,
        members: impl IntoIterator<Item = &'a IndexTuple>,
    ) -> Result<Self> {
        let mut mask = vec![false; shape.len()];
        for t in members {
            mask[shape.linear(t)?] = true;
        }
        Self::from_mask(shape, mask)
    }

    /// Builds a defining set from a membership mask over linear indices.
    pub fn from_mask(shape: &CodeShape, mask: Vec<bool>) -> Result<Self> {
        if mask.len() != shape.len() {
            return Err(Error::Domain(format!(
                "mask has {} entries, shape has {}",
                mask.len(),
                shape.len()
            )));
        }
        if !mask_is_closed(&mask, shape) {
            return Err(Error::Precondition(
                "member set is not a union of q-orbits".into(),
            ));
        }
        Ok(Self::from_closed_mask(shape, mask))
    }

    pub(crate) fn from_closed_mask(shape: &CodeShape, mask: Vec<bool>) -> Self {
        let mut reps = Vec::new();
        let mut seen = vec![false; shape.len()];
        for lin in 0..shape.len() {
            if mask[lin] && !seen[lin] {
                for x in shape.orbit_linear(lin) {
                    seen[x] = true;
                }
                reps.push(shape.tuple(lin));
            }
        }
        Self {
            shape: shape.clone(),
            mask,
            orbit_reps: reps,
        }
    }

    pub fn shape(&self) -> &CodeShape {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.orbit_reps.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.mask.iter().all(|&m| m)
    }

    pub fn contains(&self, t: &IndexTuple) -> bool {
        self.shape.linear(t).map(|l| self.mask[l]).unwrap_or(false)
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    /// Lexicographically smallest member of each contained orbit.
    pub fn orbit_reps(&self) -> &[IndexTuple] {
        &self.orbit_reps
    }

    pub fn members(&self) -> impl Iterator<Item = IndexTuple> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(lin, _)| self.shape.tuple(lin))
    }

    /// `v·D`, the image under coordinatewise multiplication by a unit tuple.
    pub fn scaled(&self, v: &[u64]) -> Result<Self> {
        if v.len() != self.shape.rank() {
            return Err(Error::Domain("unit tuple has wrong length".into()));
        }
        for (&u, &r) in v.iter().zip(self.shape.dims()) {
            if r > 1 && arith::gcd(u, r as u64) != 1 {
                return Err(Error::Domain(format!("{u} is not a unit modulo {r}")));
            }
        }
        let mut mask = vec![false; self.shape.len()];
        for (lin, &m) in self.mask.iter().enumerate() {
            if m {
                mask[self.shape.scale_linear(lin, v)] = true;
            }
        }
        Ok(Self::from_closed_mask(&self.shape, mask))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(c: &[usize]) -> IndexTuple {
        IndexTuple::from(c)
    }

    #[test]
    fn shape_validation() {
        assert!(CodeShape::new(6, vec![5]).is_err());
        assert!(CodeShape::new(2, vec![4]).is_err());
        assert!(CodeShape::new(5, vec![3, 10]).is_err());
        assert!(CodeShape::new(2, vec![0]).is_err());
        assert!(CodeShape::new(2, Vec::<usize>::new()).is_err());
        let s = CodeShape::new(4, vec![3, 5]).unwrap();
        assert_eq!((s.p(), s.base_degree(), s.len()), (2, 2, 15));
    }

    #[test]
    fn orbit_examples() {
        let s = CodeShape::new(5, vec![3, 24]).unwrap();
        assert_eq!(q_orbit(&t(&[0, 0]), &s).unwrap(), vec![t(&[0, 0])]);
        assert_eq!(
            q_orbit(&t(&[0, 1]), &s).unwrap(),
            vec![t(&[0, 1]), t(&[0, 5])]
        );
        let s = CodeShape::new(2, vec![3, 35]).unwrap();
        assert_eq!(
            q_orbit(&t(&[1, 0]), &s).unwrap(),
            vec![t(&[1, 0]), t(&[2, 0])]
        );
        assert!(q_orbit(&t(&[3, 0]), &s).is_err());
    }

    #[test]
    fn coset_examples() {
        assert_eq!(cyclotomic_coset(0, 2, 9).unwrap(), vec![0]);
        assert_eq!(cyclotomic_coset(1, 2, 7).unwrap(), vec![1, 2, 4]);
        assert_eq!(cyclotomic_coset(5, 2, 35).unwrap(), vec![5, 10, 20]);
        assert!(cyclotomic_coset(1, 2, 8).is_err());
    }

    #[test]
    fn defining_set_sizes() {
        let s = CodeShape::new(2, vec![3, 35]).unwrap();
        let reps = [t(&[0, 5]), t(&[0, 7]), t(&[0, 15]), t(&[1, 0])];
        let d = DefiningSet::from_reps(&s, &reps).unwrap();
        assert_eq!(d.len(), 12);
        assert_eq!(d.orbit_reps(), &reps);

        let s = CodeShape::new(2, vec![3, 7]).unwrap();
        let d = DefiningSet::from_reps(&s, &[t(&[0, 1]), t(&[1, 0])]).unwrap();
        assert_eq!(d.len(), 5);

        let d = DefiningSet::from_reps(&s, &[]).unwrap();
        assert!(d.is_empty());
        assert_eq!(d.len(), 0);
    }

    #[test]
    fn reps_are_canonicalised() {
        let s = CodeShape::new(2, vec![3, 7]).unwrap();
        let d = DefiningSet::from_reps(&s, &[t(&[0, 4]), t(&[2, 0]), t(&[0, 2])]).unwrap();
        assert_eq!(d.orbit_reps(), &[t(&[0, 1]), t(&[1, 0])]);
        let again = DefiningSet::from_reps(&s, d.orbit_reps()).unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn closure_check() {
        let s = CodeShape::new(5, vec![3, 24]).unwrap();
        assert!(is_union_of_orbits(&[t(&[0, 1]), t(&[0, 5])], &s).unwrap());
        assert!(!is_union_of_orbits(&[t(&[0, 1])], &s).unwrap());
        assert!(is_union_of_orbits(&[], &s).unwrap());
        assert!(DefiningSet::from_members(&s, &[t(&[0, 1])]).is_err());
    }

    #[test]
    fn tuple_parsing() {
        assert_eq!("0,5".parse::<IndexTuple>().unwrap(), t(&[0, 5]));
        assert_eq!(" (1, 3) ".parse::<IndexTuple>().unwrap(), t(&[1, 3]));
        assert!("a,b".parse::<IndexTuple>().is_err());
        assert!("()".parse::<IndexTuple>().is_err());
    }
}
