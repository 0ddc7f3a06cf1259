//! The semi-infinite wedge space: Maya states, signed Clifford operators
//! psi(k) / psi*(k), their r-colored versions, and the dimension-vector
//! dictionary.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::fock::FockVector;
use crate::partition::Partition;
use crate::{rat, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FermionError {
    #[error("color {0} out of range for arity {1}")]
    ColorOutOfRange(usize, usize),
    #[error("inconsistent dimension vector: {0}")]
    InconsistentDimensionVector(String),
    #[error("malformed state text: {0}")]
    Parse(String),
}

/// A charged semi-infinite monomial i_0 > i_1 > ..., cofinally equal to the
/// vacuum sequence m - j of its charge m. Stored as (charge, partition)
/// under the bijection lambda_j = i_j - m + j.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MayaState {
    charge: i64,
    lambda: Partition,
}

impl fmt::Debug for MayaState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for MayaState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl MayaState {
    /// The vacuum m ^ m-1 ^ m-2 ^ ... of charge m.
    pub fn vacuum(charge: i64) -> Self {
        MayaState {
            charge,
            lambda: Partition::empty(),
        }
    }

    pub fn from_partition(lambda: Partition, charge: i64) -> Self {
        MayaState { charge, lambda }
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn partition(&self) -> &Partition {
        &self.lambda
    }

    pub fn size(&self) -> u32 {
        self.lambda.size()
    }

    /// The j-th entry i_j = lambda_j + m - j.
    pub fn entry(&self, j: usize) -> i64 {
        self.lambda.part(j) as i64 + self.charge - j as i64
    }

    /// First `len` entries of the monomial.
    pub fn entries(&self, len: usize) -> Vec<i64> {
        (0..len).map(|j| self.entry(j)).collect()
    }

    /// Does the sequence contain the integer k?
    pub fn contains(&self, k: i64) -> bool {
        // tail: entries m - j for j >= len cover everything <= m - len
        if k <= self.charge - self.lambda.len() as i64 {
            return true;
        }
        (0..self.lambda.len()).any(|j| self.entry(j) == k)
    }

    /// Number of entries strictly greater than k.
    pub fn count_greater(&self, k: i64) -> usize {
        let len = self.lambda.len();
        let head = (0..len).filter(|&j| self.entry(j) > k).count();
        let tail_top = self.charge - len as i64; // value of entry at j = len
        let tail = if tail_top > k {
            (tail_top - k) as usize
        } else {
            0
        };
        head + tail
    }

    /// Wedge in k: returns (sign, new state) or None if k is occupied.
    /// Raises charge by one.
    pub fn wedge(&self, k: i64) -> Option<(i64, MayaState)> {
        if self.contains(k) {
            return None;
        }
        let s = self.count_greater(k);
        // k is not in the vacuum tail, so s <= len(lambda)
        let m = self.charge;
        let mut parts: Vec<u32> = Vec::with_capacity(self.lambda.len() + 1);
        for j in 0..s {
            parts.push(self.lambda.part(j) - 1);
        }
        parts.push((k - m - 1 + s as i64) as u32);
        for j in s..self.lambda.len() {
            parts.push(self.lambda.part(j));
        }
        let sign = if s % 2 == 0 { 1 } else { -1 };
        Some((
            sign,
            MayaState {
                charge: m + 1,
                lambda: Partition::from_unsorted(parts),
            },
        ))
    }

    /// Contract out k: returns (sign, new state) or None if k is absent.
    /// Lowers charge by one.
    pub fn contract(&self, k: i64) -> Option<(i64, MayaState)> {
        if !self.contains(k) {
            return None;
        }
        let s = self.count_greater(k);
        let mut parts: Vec<u32> = Vec::with_capacity(s.max(self.lambda.len()));
        for j in 0..s {
            parts.push(self.lambda.part(j) + 1);
        }
        for j in s + 1..self.lambda.len() {
            parts.push(self.lambda.part(j));
        }
        let sign = if s % 2 == 0 { 1 } else { -1 };
        Some((
            sign,
            MayaState {
                charge: self.charge - 1,
                lambda: Partition::from_unsorted(parts),
            },
        ))
    }

    /// Textual form `charge=<m>; wedge=[i_0,...,i_d]`, listing entries until
    /// the vacuum tail.
    pub fn to_text(&self) -> String {
        let head: Vec<String> = (0..self.lambda.len())
            .map(|j| self.entry(j).to_string())
            .collect();
        format!("charge={}; wedge=[{}]", self.charge, head.join(","))
    }

    pub fn from_text(s: &str) -> Result<Self, FermionError> {
        let err = |m: &str| FermionError::Parse(m.to_string());
        let mut charge = None;
        let mut wedge = None;
        for field in s.split(';') {
            let field = field.trim();
            if let Some(v) = field.strip_prefix("charge=") {
                charge = Some(v.trim().parse::<i64>().map_err(|_| err("bad charge"))?);
            } else if let Some(v) = field.strip_prefix("wedge=") {
                let inner = v
                    .trim()
                    .strip_prefix('[')
                    .and_then(|t| t.strip_suffix(']'))
                    .ok_or_else(|| err("wedge must be bracketed"))?;
                let mut entries = Vec::new();
                for tok in inner.split(',') {
                    let tok = tok.trim();
                    if tok.is_empty() {
                        continue;
                    }
                    entries.push(tok.parse::<i64>().map_err(|_| err("bad wedge entry"))?);
                }
                wedge = Some(entries);
            } else if !field.is_empty() {
                return Err(err("unknown field"));
            }
        }
        let m = charge.ok_or_else(|| err("missing charge"))?;
        let entries = wedge.ok_or_else(|| err("missing wedge"))?;
        if entries.windows(2).any(|w| w[0] <= w[1]) {
            return Err(err("entries must be strictly decreasing"));
        }
        let mut parts = Vec::new();
        for (j, &e) in entries.iter().enumerate() {
            let p = e - m + j as i64;
            if p < 0 {
                return Err(err("entry below the vacuum tail of this charge"));
            }
            parts.push(p as u32);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(err("entries are not a valid Maya state"));
        }
        Ok(MayaState {
            charge: m,
            lambda: Partition::from_unsorted(parts),
        })
    }
}

/// One basis state of the r-fold tensor power of the wedge space.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredMayaState {
    slots: Vec<MayaState>,
}

impl ColoredMayaState {
    pub fn new(slots: Vec<MayaState>) -> Self {
        ColoredMayaState { slots }
    }

    pub fn vacuum(charges: &[i64]) -> Self {
        ColoredMayaState {
            slots: charges.iter().map(|&m| MayaState::vacuum(m)).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.slots.len()
    }

    pub fn slot(&self, i: usize) -> &MayaState {
        &self.slots[i]
    }

    pub fn slots(&self) -> &[MayaState] {
        &self.slots
    }

    pub fn total_size(&self) -> u32 {
        self.slots.iter().map(|s| s.size()).sum()
    }

    pub fn charges(&self) -> Vec<i64> {
        self.slots.iter().map(|s| s.charge()).collect()
    }

    fn with_slot(&self, i: usize, s: MayaState) -> Self {
        let mut slots = self.slots.clone();
        slots[i] = s;
        ColoredMayaState { slots }
    }

    /// Koszul sign (-1)^(sum of charges of the slots before i).
    /// Charge equals fermion-number parity in each factor.
    fn prefix_sign(&self, i: usize) -> i64 {
        let s: i64 = self.slots[..i].iter().map(|s| s.charge()).sum();
        if s.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }
}

/// The wedging operator psi(k) on a single factor.
pub fn psi(k: i64, s: &MayaState) -> FockVector<MayaState> {
    match s.wedge(k) {
        Some((sign, t)) => FockVector::term(t, rat(sign)),
        None => FockVector::zero(),
    }
}

/// The contracting operator psi*(k) on a single factor.
pub fn psi_star(k: i64, s: &MayaState) -> FockVector<MayaState> {
    match s.contract(k) {
        Some((sign, t)) => FockVector::term(t, rat(sign)),
        None => FockVector::zero(),
    }
}

/// psi_i(k) on the colored space, with the cross-factor Koszul sign.
pub fn colored_psi(
    i: usize,
    k: i64,
    s: &ColoredMayaState,
) -> Result<FockVector<ColoredMayaState>, FermionError> {
    if i >= s.arity() {
        return Err(FermionError::ColorOutOfRange(i, s.arity()));
    }
    Ok(match s.slot(i).wedge(k) {
        Some((sign, t)) => {
            FockVector::term(s.with_slot(i, t), rat(sign * s.prefix_sign(i)))
        }
        None => FockVector::zero(),
    })
}

/// psi_i*(k) on the colored space, with the cross-factor Koszul sign.
pub fn colored_psi_star(
    i: usize,
    k: i64,
    s: &ColoredMayaState,
) -> Result<FockVector<ColoredMayaState>, FermionError> {
    if i >= s.arity() {
        return Err(FermionError::ColorOutOfRange(i, s.arity()));
    }
    Ok(match s.slot(i).contract(k) {
        Some((sign, t)) => {
            FockVector::term(s.with_slot(i, t), rat(sign * s.prefix_sign(i)))
        }
        None => FockVector::zero(),
    })
}

/// Finitely supported map Z -> N together with a charge; the A-infinity
/// dimension vector of a Maya state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionVector {
    charge: i64,
    v: BTreeMap<i64, u64>,
}

impl DimensionVector {
    pub fn new(charge: i64, v: BTreeMap<i64, u64>) -> Self {
        let v = v.into_iter().filter(|&(_, m)| m > 0).collect();
        DimensionVector { charge, v }
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn get(&self, k: i64) -> u64 {
        self.v.get(&k).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.v.iter().map(|(&k, &m)| (k, m))
    }

    pub fn total(&self) -> u64 {
        self.v.values().sum()
    }
}

/// v_k = #{entries > k} for k > charge, and #{entries > k} - (charge - k)
/// for k <= charge.
pub fn dimension_vector_of(s: &MayaState) -> DimensionVector {
    let l = s.charge();
    let lo = l - s.partition().len() as i64 - 1;
    let hi = if s.partition().is_empty() {
        l
    } else {
        s.entry(0)
    };
    let mut v = BTreeMap::new();
    for k in lo..=hi {
        let count = s.count_greater(k) as i64;
        let vk = if k > l { count } else { count - (l - k) };
        debug_assert!(vk >= 0);
        if vk > 0 {
            v.insert(k, vk as u64);
        }
    }
    DimensionVector { charge: l, v }
}

/// Rebuild the Maya state whose entry set is
/// {k > l : v_k != v_{k-1}} union {k <= l : v_k = v_{k-1}}.
pub fn maya_of_dimension_vector(d: &DimensionVector) -> Result<MayaState, FermionError> {
    let l = d.charge;
    let lo = d.v.keys().next().copied().unwrap_or(l).min(l) - 2;
    let hi = d.v.keys().next_back().copied().unwrap_or(l).max(l) + 2;
    let mut entries = Vec::new();
    for k in (lo..=hi).rev() {
        let in_set = if k > l {
            d.get(k) != d.get(k - 1)
        } else {
            d.get(k) == d.get(k - 1)
        };
        if in_set {
            entries.push(k);
        }
    }
    // below the window every k <= l is in the set; count entries relative to
    // the vacuum tail of charge l
    let mut parts = Vec::new();
    for (j, &e) in entries.iter().enumerate() {
        let p = e - l + j as i64;
        if p < 0 {
            return Err(FermionError::InconsistentDimensionVector(format!(
                "entry {e} at position {j} lies below the charge-{l} vacuum tail"
            )));
        }
        parts.push(p as u32);
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(FermionError::InconsistentDimensionVector(
            "reconstructed entries do not form a partition".into(),
        ));
    }
    let state = MayaState {
        charge: l,
        lambda: Partition::from_unsorted(parts),
    };
    // counting-lemma consistency: the round trip must reproduce the input
    let back = dimension_vector_of(&state);
    if &back != d {
        return Err(FermionError::InconsistentDimensionVector(format!(
            "counting lemma fails: rebuilt state {} has dimension vector {:?}, expected {:?}",
            state.to_text(),
            back,
            d
        )));
    }
    Ok(state)
}

/// Inner product making the Maya basis orthonormal.
pub fn fermionic_inner(x: &FockVector<MayaState>, y: &FockVector<MayaState>) -> Rat {
    x.inner(y)
}

/// Enumerate all Maya states of the given charge and size bound.
pub fn states_of_charge(charge: i64, max_size: u32) -> Vec<MayaState> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        for lam in crate::partition::partitions_of(n) {
            out.push(MayaState::from_partition(lam, charge));
        }
    }
    out
}

/// Enumerate colored states: all charge vectors with per-slot |charge| <=
/// charge_bound and all multipartitions of total size <= max_size.
pub fn colored_states(r: usize, max_size: u32, charge_bound: i64) -> Vec<ColoredMayaState> {
    let mut charge_vecs: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..r {
        charge_vecs = charge_vecs
            .into_iter()
            .flat_map(|v| {
                (-charge_bound..=charge_bound).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for charges in charge_vecs {
        for n in 0..=max_size {
            for mp in crate::partition::multipartitions_of(n, r) {
                let slots = mp
                    .components()
                    .iter()
                    .zip(&charges)
                    .map(|(lam, &m)| MayaState::from_partition(lam.clone(), m))
                    .collect();
                out.push(ColoredMayaState::new(slots));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn maya_partition_bijection() {
        let v = MayaState::vacuum(2);
        assert_eq!(v.entries(4), vec![2, 1, 0, -1]);
        let s = MayaState::from_partition(p(&[1]), 0);
        assert_eq!(s.entries(3), vec![1, -1, -2]);
        for m in -3..=3 {
            for n in 0..=10 {
                for lam in partitions_of(n) {
                    let s = MayaState::from_partition(lam.clone(), m);
                    assert_eq!(s.partition(), &lam);
                    assert_eq!(s.charge(), m);
                    // entries strictly decreasing
                    let e = s.entries(lam.len() + 3);
                    assert!(e.windows(2).all(|w| w[0] > w[1]));
                }
            }
        }
    }

    #[test]
    fn psi_examples() {
        let v0 = MayaState::vacuum(0);
        assert_eq!(psi(1, &v0), FockVector::basis(MayaState::vacuum(1)));
        assert!(psi(0, &v0).is_zero());
        assert_eq!(psi_star(0, &v0), FockVector::basis(MayaState::vacuum(-1)));
        // vacuum annihilation
        for k in -5..=0 {
            assert!(psi(k, &v0).is_zero());
        }
        for k in 1..=5 {
            assert!(psi_star(k, &v0).is_zero());
        }
    }

    #[test]
    fn psi_sign_and_charge() {
        // psi(0) on (1 ^ -1 ^ -2 ...) inserts at position 1: sign -1
        let s = MayaState::from_partition(p(&[1]), 0);
        let r = psi(0, &s);
        assert_eq!(r, FockVector::term(MayaState::vacuum(1), rat(-1)));
        for m in -2..=2 {
            for n in 0..=6 {
                for lam in partitions_of(n) {
                    let s = MayaState::from_partition(lam, m);
                    for k in -6..=6 {
                        for (t, _) in psi(k, &s).terms() {
                            assert_eq!(t.charge(), m + 1);
                        }
                        for (t, _) in psi_star(k, &s).terms() {
                            assert_eq!(t.charge(), m - 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn anticommutators_single_factor() {
        // {psi(k), psi*(l)} = delta_kl on states of size <= 8
        for n in 0..=8 {
            for lam in partitions_of(n) {
                let s = MayaState::from_partition(lam, 0);
                for k in -6..=6i64 {
                    for l in -6..=6i64 {
                        let mut acc = psi_star(l, &s).apply(|t| psi(k, t));
                        acc = acc.add(&psi(k, &s).apply(|t| psi_star(l, t)));
                        let expected = if k == l {
                            FockVector::basis(s.clone())
                        } else {
                            FockVector::zero()
                        };
                        assert_eq!(acc, expected, "k={k} l={l} s={s}");
                    }
                }
            }
        }
    }

    #[test]
    fn nilpotence() {
        for n in 0..=6 {
            for lam in partitions_of(n) {
                let s = MayaState::from_partition(lam, 0);
                for k in -5..=5 {
                    assert!(psi(k, &s).apply(|t| psi(k, t)).is_zero());
                    assert!(psi_star(k, &s).apply(|t| psi_star(k, t)).is_zero());
                }
            }
        }
    }

    #[test]
    fn colored_reduces_to_plain_for_r1() {
        for n in 0..=5 {
            for lam in partitions_of(n) {
                let s = MayaState::from_partition(lam, 1);
                let cs = ColoredMayaState::new(vec![s.clone()]);
                for k in -4..=4 {
                    let single = psi(k, &s);
                    let colored = colored_psi(0, k, &cs).unwrap();
                    let single_mapped: Vec<_> = single
                        .terms()
                        .map(|(t, c)| (ColoredMayaState::new(vec![t.clone()]), c.clone()))
                        .collect();
                    let colored_terms: Vec<_> = colored
                        .terms()
                        .map(|(t, c)| (t.clone(), c.clone()))
                        .collect();
                    assert_eq!(single_mapped, colored_terms);
                }
            }
        }
    }

    #[test]
    fn mixed_color_anticommutation() {
        // {psi_0(2), psi_1(3)} = 0 on r=2 basis states
        for s in colored_states(2, 4, 1) {
            let a = colored_psi(0, 2, &s)
                .unwrap()
                .apply(|t| colored_psi(1, 3, t).unwrap());
            let b = colored_psi(1, 3, &s)
                .unwrap()
                .apply(|t| colored_psi(0, 2, t).unwrap());
            assert!(a.add(&b).is_zero(), "s={s:?}");
        }
    }

    #[test]
    fn dimension_vector_roundtrip() {
        for m in -3..=3 {
            for n in 0..=8 {
                for lam in partitions_of(n) {
                    let s = MayaState::from_partition(lam, m);
                    let d = dimension_vector_of(&s);
                    assert_eq!(d.charge(), m);
                    let back = maya_of_dimension_vector(&d).unwrap();
                    assert_eq!(back, s);
                    // counting lemma: v_k counts entries > k (shifted below l)
                    for k in (m - 10)..=(m + 10) {
                        let count = s.count_greater(k) as i64;
                        let expected = if k > m { count } else { count - (m - k) };
                        assert_eq!(d.get(k) as i64, expected, "k={k}");
                    }
                }
            }
        }
        // vacuum has zero dimension vector
        let d = dimension_vector_of(&MayaState::vacuum(3));
        assert_eq!(d.total(), 0);
    }

    #[test]
    fn dimension_vector_rejects_garbage() {
        let mut v = BTreeMap::new();
        v.insert(5i64, 7u64);
        let d = DimensionVector::new(0, v);
        assert!(maya_of_dimension_vector(&d).is_err());
    }

    #[test]
    fn adjointness_of_psi_pair() {
        let states: Vec<MayaState> = states_of_charge(0, 5);
        let up: Vec<MayaState> = states_of_charge(1, 6);
        for k in -4..=5i64 {
            for s in &states {
                for t in &up {
                    let lhs = fermionic_inner(&psi(k, s), &FockVector::basis(t.clone()));
                    let rhs = fermionic_inner(&FockVector::basis(s.clone()), &psi_star(k, t));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn text_roundtrip() {
        for m in -2..=2 {
            for n in 0..=6 {
                for lam in partitions_of(n) {
                    let s = MayaState::from_partition(lam, m);
                    let back = MayaState::from_text(&s.to_text()).unwrap();
                    assert_eq!(back, s);
                }
            }
        }
        // a redundant tail entry is accepted
        let s = MayaState::from_text("charge=0; wedge=[1,-1]").unwrap();
        assert_eq!(s.partition(), &p(&[1]));
        assert!(MayaState::from_text("charge=0; wedge=[1,2]").is_err());
        assert!(MayaState::from_text("wedge=[1]").is_err());
    }
}
