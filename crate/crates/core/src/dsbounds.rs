//! Defining-set bounds on subsets of `Z_n`.
//!
//! A bound maps a set `N ⊆ Z_n` to the largest integer it certifies as a
//! lower bound on the minimum distance of every cyclic code of length `n`
//! whose defining set contains `N`. Sets are passed as membership slices:
//! `set[i]` tells whether the residue `i` belongs to `N`, and `n = set.len()`.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::arith;
use crate::error::{Error, Result};

/// An optimal defining-set bound.
///
/// Implementations must return at least 1 for every input (1 for the empty
/// set) and must be monotone under inclusion.
pub trait DsBound: Send + Sync + fmt::Debug {
    /// Lower-case identifier used on the command line and in reports.
    fn name(&self) -> &str;

    fn evaluate(&self, set: &[bool]) -> usize;

    /// Longest `n` the implementation accepts.
    fn max_len(&self) -> usize {
        usize::MAX
    }
}

/// The BCH bound: one more than the longest circular run of consecutive
/// residues contained in the set.
#[derive(Debug, Clone, Copy, Default)]
pub struct Bch;

/// The Hartmann–Tzeng bound.
#[derive(Debug, Clone, Copy, Default)]
pub struct HartmannTzeng;

impl HartmannTzeng {
    pub const MAX_LEN: usize = 1024;
}

impl DsBound for Bch {
    fn name(&self) -> &str {
        "bch"
    }

    fn evaluate(&self, set: &[bool]) -> usize {
        bch_optimal(set)
    }
}

impl DsBound for HartmannTzeng {
    fn name(&self) -> &str {
        "ht"
    }

    fn evaluate(&self, set: &[bool]) -> usize {
        ht_search(set)
    }

    fn max_len(&self) -> usize {
        Self::MAX_LEN
    }
}

/// Length of the run of members starting at each residue, walking forward
/// circularly. Every entry is `n` when the set is all of `Z_n`.
fn forward_runs(set: &[bool]) -> Vec<usize> {
    let n = set.len();
    let mut runs = vec![0; n];
    if n == 0 {
        return runs;
    }
    if set.iter().all(|&b| b) {
        runs.fill(n);
        return runs;
    }
    let Some(gap) = set.iter().position(|&b| !b) else {
        unreachable!()
    };
    // Walk backwards from the gap so every successor is already known.
    let mut next = 0;
    for step in 1..=n {
        let i = (gap + n - step) % n;
        next = if set[i] { next + 1 } else { 0 };
        runs[i] = next;
    }
    runs
}

pub fn bch_optimal(set: &[bool]) -> usize {
    let n = set.len();
    if set.iter().all(|&b| b) {
        return n + 1;
    }
    1 + forward_runs(set).into_iter().max().unwrap_or(0)
}

/// The Hartmann–Tzeng bound value of `set`.
///
/// Returns the maximum of `a + s` over all patterns
/// `{b + i·c1 + j·c2 : 0 ≤ i ≤ a−2, 0 ≤ j ≤ s} ⊆ set` with `gcd(n, c1) = 1`
/// and `gcd(n, c2) < a`, and never less than the BCH value.
pub fn ht_optimal(set: &[bool]) -> Result<usize> {
    if set.len() > HartmannTzeng::MAX_LEN {
        return Err(Error::Config(format!(
            "Hartmann–Tzeng search is limited to n <= {}, got {}",
            HartmannTzeng::MAX_LEN,
            set.len()
        )));
    }
    Ok(ht_search(set))
}

fn ht_search(set: &[bool]) -> usize {
    let n = set.len();
    if n == 0 {
        return 1;
    }
    if set.iter().all(|&b| b) {
        return n + 1;
    }
    let mut best = bch_optimal(set);
    if !set.iter().any(|&b| b) {
        return best;
    }
    let gcds: Vec<usize> = (0..n)
        .map(|c| arith::gcd(c as u64, n as u64) as usize)
        .collect();
    let mut scaled = vec![false; n];
    // Scaling by u = c1^{-1} turns the c1-progression into a consecutive run.
    for u in arith::units(n) {
        for (x, &m) in set.iter().enumerate() {
            scaled[x * u % n] = m;
        }
        let runs = forward_runs(&scaled);
        for b in 0..n {
            let first = runs[b];
            if first == 0 {
                continue;
            }
            best = best.max(first + 1);
            for c2 in 1..n {
                let g = gcds[c2];
                let period = n / g;
                let mut run = first;
                for s in 1..period {
                    run = run.min(runs[(b + s * c2) % n]);
                    // a = run + 1 only shrinks as s grows.
                    if run == 0 || g > run {
                        break;
                    }
                    best = best.max(run + 1 + s);
                }
            }
        }
    }
    best
}

/// A nonempty collection of bounds with unique names.
#[derive(Clone, Debug)]
pub struct BoundSet {
    bounds: Vec<Arc<dyn DsBound>>,
}

impl BoundSet {
    pub fn new(bounds: Vec<Arc<dyn DsBound>>) -> Result<Self> {
        if bounds.is_empty() {
            return Err(Error::Config("the bound set is empty".into()));
        }
        let mut seen = HashSet::new();
        for b in &bounds {
            if !seen.insert(b.name().to_string()) {
                return Err(Error::Config(format!("bound {:?} listed twice", b.name())));
            }
        }
        Ok(Self { bounds })
    }

    /// Parses a comma-separated list of shipped bound names (case-insensitive).
    pub fn from_names(list: &str) -> Result<Self> {
        let mut bounds: Vec<Arc<dyn DsBound>> = Vec::new();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            bounds.push(bound_by_name(name)?);
        }
        Self::new(bounds)
    }

    pub fn bch() -> Self {
        Self {
            bounds: vec![Arc::new(Bch)],
        }
    }

    pub fn ht() -> Self {
        Self {
            bounds: vec![Arc::new(HartmannTzeng)],
        }
    }

    pub fn bch_ht() -> Self {
        Self {
            bounds: vec![Arc::new(Bch), Arc::new(HartmannTzeng)],
        }
    }

    pub fn names(&self) -> Vec<String> {
        self.bounds.iter().map(|b| b.name().to_string()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<dyn DsBound>> {
        self.bounds.iter()
    }

    /// Checks that every bound accepts vectors of length `n`.
    pub fn check_len(&self, n: usize) -> Result<()> {
        for b in &self.bounds {
            if n > b.max_len() {
                return Err(Error::Config(format!(
                    "bound {} accepts n <= {}, got {n}",
                    b.name(),
                    b.max_len()
                )));
            }
        }
        Ok(())
    }

    /// Maximum over the set of each bound's value on `set`.
    pub fn evaluate_best(&self, set: &[bool]) -> usize {
        self.bounds
            .iter()
            .map(|b| b.evaluate(set))
            .max()
            .expect("bound set is nonempty")
    }
}

pub fn bound_by_name(name: &str) -> Result<Arc<dyn DsBound>> {
    match name.to_ascii_lowercase().as_str() {
        "bch" => Ok(Arc::new(Bch)),
        "ht" => Ok(Arc::new(HartmannTzeng)),
        other => Err(Error::Config(format!(
            "unknown bound {other:?} (shipped: bch, ht)"
        ))),
    }
}

/// Membership slice of length `n` for the given residues.
pub fn residue_set(n: usize, members: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut set = vec![false; n];
    for x in members {
        set[x % n] = true;
    }
    set
}
