//! Support hypermatrices, their apparent distance with respect to a set of
//! defining-set bounds, and the minimum apparent distance search.
//!
//! Only the support of a hypermatrix matters for every quantity computed
//! here, so entries are stored as booleans. Axes are 0-based throughout the
//! API; reports print them as given.

use std::fmt;

use dashmap::DashMap;
use serde::{Deserialize, Serialize};

use crate::dsbounds::BoundSet;
use crate::error::{Error, Result};
use crate::orbits::{mask_is_closed, CodeShape, DefiningSet, IndexTuple};

/// An `s`-dimensional array of zero/nonzero flags indexed by
/// `Z_r1 × … × Z_rs` in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HyperMatrix {
    dims: Vec<usize>,
    support: Vec<bool>,
}

impl HyperMatrix {
    pub fn new(dims: impl Into<Vec<usize>>, support: Vec<bool>) -> Result<Self> {
        let dims = dims.into();
        let cells: usize = dims.iter().product();
        if cells != support.len() {
            return Err(Error::Domain(format!(
                "support has {} cells, dimensions {:?} need {cells}",
                support.len(),
                dims
            )));
        }
        Ok(Self { dims, support })
    }

    pub fn zeros(dims: impl Into<Vec<usize>>) -> Self {
        let dims = dims.into();
        let cells = dims.iter().product();
        Self {
            dims,
            support: vec![false; cells],
        }
    }

    pub fn ones(dims: impl Into<Vec<usize>>) -> Self {
        let dims = dims.into();
        let cells = dims.iter().product();
        Self {
            dims,
            support: vec![true; cells],
        }
    }

    /// The hypermatrix afforded by `D`: nonzero exactly off `D`.
    pub fn afforded_by(d: &DefiningSet) -> Self {
        Self {
            dims: d.shape().dims().to_vec(),
            support: d.mask().iter().map(|&m| !m).collect(),
        }
    }

    /// Zero set `D(M)` as a defining set, when it is a union of q-orbits.
    pub fn zero_set(&self, shape: &CodeShape) -> Result<DefiningSet> {
        self.check_shape(shape)?;
        DefiningSet::from_mask(shape, self.support.iter().map(|&b| !b).collect())
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn support(&self) -> &[bool] {
        &self.support
    }

    pub fn weight(&self) -> usize {
        self.support.iter().filter(|&&b| b).count()
    }

    pub fn is_zero(&self) -> bool {
        !self.support.iter().any(|&b| b)
    }

    pub fn get(&self, t: &IndexTuple) -> Result<bool> {
        Ok(self.support[self.linear(t.coords())?])
    }

    fn linear(&self, coords: &[usize]) -> Result<usize> {
        if coords.len() != self.dims.len() {
            return Err(Error::Index("tuple rank does not match".into()));
        }
        let mut lin = 0;
        for (&c, &r) in coords.iter().zip(&self.dims) {
            if c >= r {
                return Err(Error::Index(format!("coordinate {c} out of range 0..{r}")));
            }
            lin = lin * r + c;
        }
        Ok(lin)
    }

    fn check_shape(&self, shape: &CodeShape) -> Result<()> {
        if shape.dims() != self.dims.as_slice() {
            return Err(Error::Domain(format!(
                "hypermatrix dimensions {:?} do not match shape {shape}",
                self.dims
            )));
        }
        Ok(())
    }

    fn check_axis(&self, axis: usize, k: usize) -> Result<()> {
        if axis >= self.dims.len() {
            return Err(Error::Index(format!(
                "axis {axis} out of range for rank {}",
                self.dims.len()
            )));
        }
        if k >= self.dims[axis] {
            return Err(Error::Index(format!(
                "index {k} out of range 0..{} on axis {axis}",
                self.dims[axis]
            )));
        }
        Ok(())
    }

    /// `(outer, r_axis, inner)` such that cell `(o, k, i)` sits at
    /// `o·r_axis·inner + k·inner + i`.
    fn split(&self, axis: usize) -> (usize, usize, usize) {
        let outer = self.dims[..axis].iter().product();
        let inner = self.dims[axis + 1..].iter().product();
        (outer, self.dims[axis], inner)
    }

    /// Linear indices (into this hypermatrix) of hypercolumn `(axis, k)`.
    pub fn hypercolumn_cells(&self, axis: usize, k: usize) -> Result<Vec<usize>> {
        self.check_axis(axis, k)?;
        let (outer, r, inner) = self.split(axis);
        Ok((0..outer)
            .flat_map(|o| (0..inner).map(move |i| (o * r + k) * inner + i))
            .collect())
    }

    /// The slice with coordinate `axis` fixed to `k`, as a hypermatrix of
    /// rank `s − 1`.
    pub fn hypercolumn(&self, axis: usize, k: usize) -> Result<HyperMatrix> {
        let cells = self.hypercolumn_cells(axis, k)?;
        let mut dims = self.dims.clone();
        dims.remove(axis);
        Ok(HyperMatrix {
            dims,
            support: cells.into_iter().map(|c| self.support[c]).collect(),
        })
    }

    /// `supp_j(M)`: flags for the nonzero hypercolumns along `axis`.
    pub fn axis_support(&self, axis: usize) -> Vec<bool> {
        let (outer, r, inner) = self.split(axis);
        let mut out = vec![false; r];
        for o in 0..outer {
            for (k, flag) in out.iter_mut().enumerate() {
                if !*flag {
                    let base = (o * r + k) * inner;
                    *flag = self.support[base..base + inner].iter().any(|&b| b);
                }
            }
        }
        out
    }

    fn memo_key(&self) -> (Vec<usize>, Vec<u64>) {
        let mut words = vec![0u64; self.support.len().div_ceil(64)];
        for (i, &b) in self.support.iter().enumerate() {
            if b {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        (self.dims.clone(), words)
    }
}

impl fmt::Debug for HyperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HyperMatrix{:?}", self.dims)?;
        if self.dims.len() == 2 {
            let cols = self.dims[1];
            for row in self.support.chunks(cols.max(1)) {
                write!(f, "\n  ")?;
                for &b in row {
                    write!(f, "{}", if b { '1' } else { '.' })?;
                }
            }
            Ok(())
        } else {
            write!(f, " weight {}", self.weight())
        }
    }
}

/// Per-axis quantities of an apparent distance computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisReport {
    pub axis: usize,
    /// Indices of the nonzero hypercolumns along this axis.
    pub support: Vec<usize>,
    pub omega: usize,
    pub epsilon: usize,
    pub delta: usize,
    /// Hypercolumn indices attaining `epsilon`; the involved ones when
    /// `delta` equals the overall value.
    pub maximizers: Vec<usize>,
}

/// Result of [`Evaluator::analyze`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub value: usize,
    pub axes: Vec<AxisReport>,
}

impl Analysis {
    /// `(axis, index)` of every involved hypercolumn.
    pub fn involved(&self) -> Vec<(usize, usize)> {
        self.axes
            .iter()
            .filter(|a| a.delta == self.value)
            .flat_map(|a| a.maximizers.iter().map(move |&k| (a.axis, k)))
            .collect()
    }

    pub fn axis(&self, axis: usize) -> &AxisReport {
        &self.axes[axis]
    }
}

/// Computes apparent distances with a fixed bound set, memoising every
/// slice it evaluates. Safe to share between threads.
#[derive(Debug)]
pub struct Evaluator {
    bounds: BoundSet,
    memo: DashMap<(Vec<usize>, Vec<u64>), usize>,
}

impl Evaluator {
    pub fn new(bounds: BoundSet) -> Self {
        Self {
            bounds,
            memo: DashMap::new(),
        }
    }

    pub fn bounds(&self) -> &BoundSet {
        &self.bounds
    }

    /// Validates that every component length is accepted by the bounds.
    pub fn check_dims(&self, dims: &[usize]) -> Result<()> {
        dims.iter().try_for_each(|&r| self.bounds.check_len(r))
    }

    /// `Δ_B` of a support vector.
    pub fn vector_distance(&self, support: &[bool]) -> usize {
        if !support.iter().any(|&b| b) {
            return 0;
        }
        let zeros: Vec<bool> = support.iter().map(|&b| !b).collect();
        self.bounds.evaluate_best(&zeros)
    }

    /// `Δ_B(M)`.
    pub fn distance(&self, m: &HyperMatrix) -> usize {
        if m.is_zero() {
            return 0;
        }
        match m.rank() {
            0 => 1,
            1 => self.vector_distance(&m.support),
            _ => {
                let key = m.memo_key();
                if let Some(v) = self.memo.get(&key) {
                    return *v;
                }
                let value = self.analyze_nonzero(m).value;
                self.memo.insert(key, value);
                value
            }
        }
    }

    /// `Δ_B(M)` together with the per-axis report.
    pub fn analyze(&self, m: &HyperMatrix) -> Analysis {
        if m.is_zero() {
            return Analysis {
                value: 0,
                axes: Vec::new(),
            };
        }
        self.analyze_nonzero(m)
    }

    fn analyze_nonzero(&self, m: &HyperMatrix) -> Analysis {
        if m.rank() == 0 {
            return Analysis {
                value: 1,
                axes: Vec::new(),
            };
        }
        let axes: Vec<AxisReport> = (0..m.rank())
            .map(|axis| {
                let supp = m.axis_support(axis);
                let omega = self.vector_distance(&supp);
                let support: Vec<usize> = (0..supp.len()).filter(|&k| supp[k]).collect();
                let slice_values: Vec<usize> = support
                    .iter()
                    .map(|&k| {
                        let h = m.hypercolumn(axis, k).expect("index in range");
                        self.distance(&h)
                    })
                    .collect();
                let epsilon = slice_values.iter().copied().max().unwrap_or(0);
                let maximizers = support
                    .iter()
                    .zip(&slice_values)
                    .filter(|(_, &v)| v == epsilon)
                    .map(|(&k, _)| k)
                    .collect();
                AxisReport {
                    axis,
                    support,
                    omega,
                    epsilon,
                    delta: omega * epsilon,
                    maximizers,
                }
            })
            .collect();
        let value = axes.iter().map(|a| a.delta).max().unwrap_or(0);
        Analysis { value, axes }
    }

    /// Involved hypercolumns of a nonzero hypermatrix, as `(axis, index)`.
    pub fn involved_hypercolumns(&self, m: &HyperMatrix) -> Result<Vec<(usize, usize)>> {
        if m.is_zero() {
            return Err(Error::Domain(
                "the zero hypermatrix has no involved hypercolumns".into(),
            ));
        }
        Ok(self.analyze_nonzero(m).involved())
    }

    /// Minimum apparent distance of a q-orbits hypermatrix.
    pub fn mad(&self, m: &HyperMatrix, shape: &CodeShape) -> Result<MadTrace> {
        m.check_shape(shape)?;
        if m.is_zero() {
            return Err(Error::Domain(
                "minimum apparent distance of the zero hypermatrix".into(),
            ));
        }
        if !mask_is_closed(&m.support, shape) {
            return Err(Error::Precondition(
                "the zero set of the hypermatrix is not a union of q-orbits".into(),
            ));
        }
        let orbits = shape.orbits();
        let mu = orbits.iter().filter(|o| !m.support[o[0]]).count();
        let free_orbits = orbits.len() - mu;
        let mut orbit_of = vec![0usize; shape.len()];
        for (idx, o) in orbits.iter().enumerate() {
            for &x in o {
                orbit_of[x] = idx;
            }
        }

        let mut steps = Vec::new();
        let mut current = m.clone();
        let mut value = usize::MAX;
        let stop_reason = loop {
            let analysis = self.analyze_nonzero(&current);
            value = value.min(analysis.value);
            let involved = analysis.involved();
            let early = analysis
                .axes
                .iter()
                .any(|a| a.delta == analysis.value && a.epsilon == 1);
            steps.push(MadStep {
                matrix: current.clone(),
                distance: analysis.value,
                value,
                involved: involved.clone(),
            });
            if early {
                break StopReason::EarlyStop;
            }
            let mut zero_orbit = vec![false; orbits.len()];
            for &(axis, k) in &involved {
                for cell in current.hypercolumn_cells(axis, k)? {
                    if current.support[cell] {
                        zero_orbit[orbit_of[cell]] = true;
                    }
                }
            }
            let mut next = current.clone();
            for (idx, o) in orbits.iter().enumerate() {
                if zero_orbit[idx] {
                    for &x in o {
                        next.support[x] = false;
                    }
                }
            }
            if next.is_zero() {
                break StopReason::ZeroMatrix;
            }
            if next == current {
                break StopReason::Stabilized;
            }
            current = next;
        };
        let first_min = steps
            .iter()
            .position(|s| s.value == value)
            .expect("trace is nonempty");
        Ok(MadTrace {
            steps,
            result: value,
            first_min,
            stop_reason,
            mu,
            free_orbits,
        })
    }
}

/// Why the minimum apparent distance search ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StopReason {
    /// An involved hypercolumn has apparent distance 1.
    EarlyStop,
    /// Zeroing the involved hypercolumns left nothing.
    ZeroMatrix,
    /// No orbit could be removed.
    Stabilized,
}

impl fmt::Display for StopReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StopReason::EarlyStop => "early stop (involved hypercolumn with distance 1)",
            StopReason::ZeroMatrix => "next matrix is zero",
            StopReason::Stabilized => "stabilized",
        })
    }
}

/// One iteration of the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MadStep {
    /// `M_i`.
    pub matrix: HyperMatrix,
    /// `Δ_B(M_i)`.
    pub distance: usize,
    /// `m_i`, the running minimum.
    pub value: usize,
    pub involved: Vec<(usize, usize)>,
}

/// The decreasing sequences `M_0 > … > M_l` and `m_0 ≥ … ≥ m_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MadTrace {
    pub steps: Vec<MadStep>,
    /// `m_l`, the minimum apparent distance.
    pub result: usize,
    /// `l'`, the first step whose running minimum equals the result.
    pub first_min: usize,
    pub stop_reason: StopReason,
    /// Number of q-orbits in the zero set of `M_0`.
    pub mu: usize,
    /// Number of q-orbits in the support of `M_0`.
    pub free_orbits: usize,
}

impl MadTrace {
    /// `l`, the index of the last matrix.
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn distances(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.distance).collect()
    }

    pub fn values(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.value).collect()
    }
}

/// `Δ_B` of a support vector.
pub fn apparent_distance_vector(support: &[bool], bounds: &BoundSet) -> usize {
    Evaluator::new(bounds.clone()).vector_distance(support)
}

/// `Δ_B(M)` with its per-axis report.
pub fn apparent_distance(m: &HyperMatrix, bounds: &BoundSet) -> Analysis {
    Evaluator::new(bounds.clone()).analyze(m)
}

pub fn involved_hypercolumns(m: &HyperMatrix, bounds: &BoundSet) -> Result<Vec<(usize, usize)>> {
    Evaluator::new(bounds.clone()).involved_hypercolumns(m)
}

pub fn mad(m: &HyperMatrix, shape: &CodeShape, bounds: &BoundSet) -> Result<MadTrace> {
    Evaluator::new(bounds.clone()).mad(m, shape)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rows: &[&str]) -> HyperMatrix {
        let cols = rows[0].len();
        let support = rows
            .iter()
            .flat_map(|r| r.chars().map(|c| c == '1'))
            .collect();
        HyperMatrix::new(vec![rows.len(), cols], support).unwrap()
    }

    #[test]
    fn zero_and_ones() {
        let ev = Evaluator::new(BoundSet::bch_ht());
        assert_eq!(ev.distance(&HyperMatrix::zeros(vec![3, 4])), 0);
        assert_eq!(ev.distance(&HyperMatrix::ones(vec![3, 4])), 1);
        assert_eq!(ev.distance(&HyperMatrix::ones(vec![2, 3, 2])), 1);
        assert_eq!(ev.vector_distance(&[false; 5]), 0);
        assert_eq!(ev.vector_distance(&[true; 5]), 1);
    }

    #[test]
    fn hypercolumns() {
        let m = matrix(&["110", "001"]);
        assert_eq!(m.hypercolumn(0, 0).unwrap().support(), &[true, true, false]);
        assert_eq!(m.hypercolumn(1, 2).unwrap().support(), &[false, true]);
        assert_eq!(m.hypercolumn(1, 2).unwrap().dims(), &[2]);
        assert!(m.hypercolumn(2, 0).is_err());
        assert!(m.hypercolumn(0, 2).is_err());
        assert_eq!(m.axis_support(0), vec![true, true]);
        let z = HyperMatrix::zeros(vec![3, 4]);
        assert!(z.hypercolumn(1, 3).unwrap().is_zero());
        let o = HyperMatrix::ones(vec![3, 4, 5]);
        let h = o.hypercolumn(1, 2).unwrap();
        assert_eq!(h.dims(), &[3, 5]);
        assert!(h.support().iter().all(|&b| b));
        let v = HyperMatrix::ones(vec![4]);
        assert_eq!(v.hypercolumn(0, 1).unwrap().dims(), &[] as &[usize]);
    }

    #[test]
    fn involved_all_ones() {
        let ev = Evaluator::new(BoundSet::bch());
        let inv = ev
            .involved_hypercolumns(&HyperMatrix::ones(vec![3, 3]))
            .unwrap();
        assert_eq!(inv.len(), 6);
        assert!(ev
            .involved_hypercolumns(&HyperMatrix::zeros(vec![3, 3]))
            .is_err());
    }

    #[test]
    fn involved_single_row() {
        let m = matrix(&["0000000", "1101000", "0000000"]);
        let ev = Evaluator::new(BoundSet::bch());
        let a = ev.analyze(&m);
        // Axis 0: supp = {1}, zeros {0,2} in Z_3 form the run 2,0 → ω = 3;
        // the row has zeros {2,4,5,6} → run 4,5,6 → Δ = 4; Δ_0 = 12.
        assert_eq!(a.axis(0).omega, 3);
        assert_eq!(a.axis(0).epsilon, 4);
        // Axis 1: supp = {0,1,3}, zeros {2,4,5,6} → ω = 4; each column has
        // a single nonzero → Δ = 3; Δ_1 = 12.
        assert_eq!(a.axis(1).omega, 4);
        assert_eq!(a.axis(1).epsilon, 3);
        assert_eq!(a.value, 12);
        let inv = a.involved();
        assert!(inv.contains(&(0, 1)));
        for k in [0, 1, 3] {
            assert!(inv.contains(&(1, k)));
        }
    }

    #[test]
    fn mad_rejects_bad_inputs() {
        let shape = CodeShape::new(2, vec![3, 5]).unwrap();
        let ev = Evaluator::new(BoundSet::bch());
        assert!(matches!(
            ev.mad(&HyperMatrix::zeros(vec![3, 5]), &shape),
            Err(Error::Domain(_))
        ));
        let mut support = vec![true; 15];
        support[1] = false;
        let m = HyperMatrix::new(vec![3, 5], support).unwrap();
        assert!(matches!(ev.mad(&m, &shape), Err(Error::Precondition(_))));
        assert!(ev.mad(&HyperMatrix::ones(vec![5, 3]), &shape).is_err());
    }

    #[test]
    fn mad_all_ones_stops_early() {
        let shape = CodeShape::new(2, vec![3, 5]).unwrap();
        let t = mad(&HyperMatrix::ones(vec![3, 5]), &shape, &BoundSet::bch()).unwrap();
        assert_eq!(t.result, 1);
        assert_eq!(t.len(), 0);
        assert_eq!(t.stop_reason, StopReason::EarlyStop);
    }
}
