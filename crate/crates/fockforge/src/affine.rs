//! The affine Lie algebra gl(r)^ = gl(r) (x) C[t,t^-1] (+) Cc (+) Cd and
//! its action on the r-colored fermionic Fock space by normal-ordered
//! bilinears, together with level measurement and the level-k dilation.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::boson_fermion::energy;
use crate::fermion::{colored_psi, colored_psi_star, ColoredMayaState, FermionError};
use crate::fock::FockVector;
use crate::partition::multipartitions_of;
use crate::{rat, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AffineError {
    #[error("generator color {0} out of range for rank {1}")]
    ColorOutOfRange(usize, usize),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("central element does not act as a scalar")]
    NonScalarCenter,
    #[error(transparent)]
    Fermion(#[from] FermionError),
}

/// A generator of gl(r)^: a loop-algebra matrix unit, the center, or the
/// derivation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GlrGen {
    /// e_{ij} (x) t^a
    E { i: usize, j: usize, a: i64 },
    /// central element c
    C,
    /// derivation d (the energy grading)
    D,
}

/// A finite rational combination of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    rank: usize,
    terms: BTreeMap<GlrGen, Rat>,
}

impl LieElement {
    pub fn zero(rank: usize) -> Self {
        LieElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn gen(rank: usize, g: GlrGen) -> Result<Self, AffineError> {
        if let GlrGen::E { i, j, .. } = g {
            if i >= rank {
                return Err(AffineError::ColorOutOfRange(i, rank));
            }
            if j >= rank {
                return Err(AffineError::ColorOutOfRange(j, rank));
            }
        }
        let mut terms = BTreeMap::new();
        terms.insert(g, Rat::one());
        Ok(LieElement { rank, terms })
    }

    pub fn e(rank: usize, i: usize, j: usize, a: i64) -> Result<Self, AffineError> {
        Self::gen(rank, GlrGen::E { i, j, a })
    }

    /// The Cartan generator h_i (x) t^a = e_{ii} (x) t^a.
    pub fn h(rank: usize, i: usize, a: i64) -> Result<Self, AffineError> {
        Self::e(rank, i, i, a)
    }

    pub fn c(rank: usize) -> Self {
        Self::gen(rank, GlrGen::C).unwrap()
    }

    pub fn d(rank: usize) -> Self {
        Self::gen(rank, GlrGen::D).unwrap()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GlrGen, &Rat)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank);
        let mut terms = self.terms.clone();
        for (g, c) in &other.terms {
            let e = terms.entry(*g).or_insert_with(Rat::zero);
            *e += c;
        }
        terms.retain(|_, c| !c.is_zero());
        LieElement {
            rank: self.rank,
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero(self.rank);
        }
        LieElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(g, c)| (*g, c * s)).collect(),
        }
    }

    /// The Lie bracket
    /// [e_{ij} t^a, e_{kl} t^b] = d_{jk} e_{il} t^{a+b} - d_{li} e_{kj} t^{a+b}
    ///                            + a d_{a+b,0} d_{jk} d_{li} c,
    /// [d, e_{ij} t^a] = a e_{ij} t^a, c central.
    pub fn bracket(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank);
        let mut out = Self::zero(self.rank);
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                let b = bracket_gens(self.rank, *x, *y);
                out = out.add(&b.scale(&(cx * cy)));
            }
        }
        out
    }
}

fn bracket_gens(rank: usize, x: GlrGen, y: GlrGen) -> LieElement {
    use GlrGen::*;
    match (x, y) {
        (E { i, j, a }, E { i: k, j: l, a: b }) => {
            let mut out = LieElement::zero(rank);
            if j == k {
                out = out.add(&LieElement::e(rank, i, l, a + b).unwrap());
            }
            if l == i {
                out = out.sub(&LieElement::e(rank, k, j, a + b).unwrap());
            }
            if j == k && l == i && a + b == 0 {
                out = out.add(&LieElement::c(rank).scale(&rat(a)));
            }
            out
        }
        (D, E { i, j, a }) => LieElement::e(rank, i, j, a).unwrap().scale(&rat(a)),
        (E { i, j, a }, D) => LieElement::e(rank, i, j, a).unwrap().scale(&rat(-a)),
        _ => LieElement::zero(rank),
    }
}

/// Values of (h_0,...,h_{r-1}, c, d) on a weight vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub h: Vec<i64>,
    pub level: i64,
    pub energy: Rat,
}

/// The gl(r)^ action on the r-colored wedge space; `dilation` = k realizes
/// the subalgebra gl(r) (x) C[t^k, t^-k] (+) Cc, a copy of gl(r)^ of level k.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GlrAction {
    rank: usize,
    dilation: u32,
}

impl GlrAction {
    /// The basic level-one action.
    pub fn new(rank: usize) -> Self {
        GlrAction { rank, dilation: 1 }
    }

    /// The level-k restriction: e_{ij} (x) t^a acts as e_{ij} (x) t^{ka}.
    pub fn restrict_glr_k(rank: usize, k: u32) -> Self {
        assert!(k >= 1);
        GlrAction { rank, dilation: k }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dilation(&self) -> u32 {
        self.dilation
    }

    pub fn act(
        &self,
        x: &LieElement,
        v: &FockVector<ColoredMayaState>,
    ) -> Result<FockVector<ColoredMayaState>, AffineError> {
        if x.rank() != self.rank {
            return Err(AffineError::RankMismatch(x.rank(), self.rank));
        }
        let mut out = FockVector::zero();
        for (g, c) in x.terms() {
            out = out.add(&self.act_gen(*g, v)?.scale(c));
        }
        Ok(out)
    }

    fn act_gen(
        &self,
        g: GlrGen,
        v: &FockVector<ColoredMayaState>,
    ) -> Result<FockVector<ColoredMayaState>, AffineError> {
        match g {
            GlrGen::C => Ok(v.scale(&rat(self.dilation as i64))),
            GlrGen::D => {
                // d acts as minus the energy grading: E (x) t^a moves beads
                // down by dilation*a, so [d, E (x) t^a] = a E (x) t^a
                let mut out = FockVector::zero();
                let scale = rat(self.dilation as i64);
                for (s, c) in v.terms() {
                    out.add_term(s.clone(), -(c * energy(s)) / &scale);
                }
                Ok(out)
            }
            GlrGen::E { i, j, a } => {
                let shift = -(self.dilation as i64) * a;
                let mut out = FockVector::zero();
                for (s, c) in v.terms() {
                    if s.arity() != self.rank {
                        return Err(AffineError::RankMismatch(s.arity(), self.rank));
                    }
                    out = out.add(&bilinear_on_state(i, j, shift, s)?.scale(c));
                }
                Ok(out)
            }
        }
    }
}

/// sum_n :psi_i(n + shift) psi_j*(n): on a single basis state. The normal
/// ordering puts psi* first for n > 0 and -psi psi* (reversed) for n <= 0,
/// which makes the sum finite on every state.
fn bilinear_on_state(
    i: usize,
    j: usize,
    shift: i64,
    s: &ColoredMayaState,
) -> Result<FockVector<ColoredMayaState>, AffineError> {
    let slot_i = s.slot(i);
    let slot_j = s.slot(j);
    let m_i = slot_i.charge();
    let m_j = slot_j.charge();
    let len_i = slot_i.partition().len() as i64;
    let len_j = slot_j.partition().len() as i64;
    let hi = slot_j.entry(0).max(0);
    let lo = (m_i - shift - len_i).min(m_j - len_j) - 2;
    let mut out = FockVector::zero();
    for n in lo..=hi {
        if n > 0 {
            // psi_i(n + shift) psi_j*(n)
            for (t, c1) in colored_psi_star(j, n, s)?.terms() {
                for (u, c2) in colored_psi(i, n + shift, t)?.terms() {
                    out.add_term(u.clone(), c1 * c2);
                }
            }
        } else {
            // -psi_j*(n) psi_i(n + shift)
            for (t, c1) in colored_psi(i, n + shift, s)?.terms() {
                for (u, c2) in colored_psi_star(j, n, t)?.terms() {
                    out.add_term(u.clone(), -(c1 * c2));
                }
            }
        }
    }
    Ok(out)
}

/// Measure the level: the scalar by which [h_0 (x) t, h_0 (x) t^{-1}] acts
/// on the vacuum (the abstract bracket of this pair is exactly c).
pub fn level_of(action: &GlrAction) -> Result<Rat, AffineError> {
    let r = action.rank();
    let vac = FockVector::basis(ColoredMayaState::vacuum(&vec![0; r]));
    let x = LieElement::h(r, 0, 1).unwrap();
    let y = LieElement::h(r, 0, -1).unwrap();
    let xy = action.act(&x, &action.act(&y, &vac)?)?;
    let yx = action.act(&y, &action.act(&x, &vac)?)?;
    let comm = xy.sub(&yx);
    let scalar = comm.inner(&vac);
    if comm != vac.scale(&scalar) {
        return Err(AffineError::NonScalarCenter);
    }
    Ok(scalar)
}

/// The weight of a basis state: h_i eigenvalues are the slot charges, the
/// level is the dilation, the energy is the d eigenvalue.
pub fn weight_of(action: &GlrAction, s: &ColoredMayaState) -> WeightVector {
    WeightVector {
        h: s.charges(),
        level: action.dilation() as i64,
        energy: -energy(s) / rat(action.dilation() as i64),
    }
}

/// Dimensions of F^r(m) graded by energy, up to and including max_energy.
/// Energies are rational (half-integers for odd charges).
pub fn graded_character(r: usize, total_charge: i64, max_energy: &Rat) -> BTreeMap<Rat, u64> {
    let mut out: BTreeMap<Rat, u64> = BTreeMap::new();
    let mut splits: Vec<Vec<i64>> = Vec::new();
    enumerate_splits(r, total_charge, max_energy, &mut Vec::new(), &mut splits);
    for split in splits {
        let base: Rat = split.iter().map(|&m| crate::ratio(m * m, 2)).sum();
        let mut n = 0u32;
        loop {
            let e = &base + rat(n as i64);
            if &e > max_energy {
                break;
            }
            *out.entry(e).or_insert(0) += multipartitions_of(n, r).len() as u64;
            n += 1;
        }
    }
    out
}

fn enumerate_splits(
    r: usize,
    remaining: i64,
    budget: &Rat,
    acc: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if acc.len() == r {
        if remaining == 0 {
            out.push(acc.clone());
        }
        return;
    }
    // |m| is bounded by the remaining quadratic budget
    let mut bound = 0i64;
    while &crate::ratio((bound + 1) * (bound + 1), 2) <= budget {
        bound += 1;
    }
    for m in -bound..=bound {
        let cost = crate::ratio(m * m, 2);
        if &cost > budget {
            continue;
        }
        // remaining slots must still be able to reach the target charge
        let slots_left = (r - acc.len() - 1) as i64;
        if (remaining - m).abs() > slots_left * (bound + remaining.abs() + 1) {
            continue;
        }
        acc.push(m);
        let left = budget - cost;
        enumerate_splits(r, remaining - m, &left, acc, out);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fermion::colored_states;

    #[test]
    fn cartan_reads_charges() {
        for s in colored_states(2, 3, 1) {
            let charges = s.charges();
            let v = FockVector::basis(s);
            let action = GlrAction::new(2);
            for i in 0..2 {
                let h = LieElement::h(2, i, 0).unwrap();
                assert_eq!(action.act(&h, &v).unwrap(), v.scale(&rat(charges[i])));
            }
        }
    }

    #[test]
    fn level_one_and_level_k() {
        assert_eq!(level_of(&GlrAction::new(1)).unwrap(), rat(1));
        assert_eq!(level_of(&GlrAction::new(2)).unwrap(), rat(1));
        assert_eq!(level_of(&GlrAction::restrict_glr_k(1, 2)).unwrap(), rat(2));
        assert_eq!(level_of(&GlrAction::restrict_glr_k(2, 3)).unwrap(), rat(3));
    }

    #[test]
    fn bracket_antisymmetry_and_jacobi_samples() {
        let r = 2;
        let gens = [
            LieElement::e(r, 0, 1, 1).unwrap(),
            LieElement::e(r, 1, 0, -1).unwrap(),
            LieElement::h(r, 0, 2).unwrap(),
            LieElement::d(r),
            LieElement::c(r),
        ];
        for x in &gens {
            for y in &gens {
                assert_eq!(x.bracket(y), y.bracket(x).scale(&rat(-1)));
                for z in &gens {
                    let jac = x
                        .bracket(&y.bracket(z))
                        .add(&y.bracket(&z.bracket(x)))
                        .add(&z.bracket(&x.bracket(y)));
                    assert_eq!(jac, LieElement::zero(r));
                }
            }
        }
    }

    #[test]
    fn action_respects_bracket_small() {
        let r = 2;
        let action = GlrAction::new(r);
        let states: Vec<_> = colored_states(r, 2, 1);
        for (i1, j1, a) in [(0, 1, 1i64), (1, 0, -1), (0, 0, 1), (1, 1, -1), (0, 1, 0)] {
            for (i2, j2, b) in [(1, 0, -1i64), (0, 1, 1), (0, 0, -1), (1, 1, 0)] {
                let x = LieElement::e(r, i1, j1, a).unwrap();
                let y = LieElement::e(r, i2, j2, b).unwrap();
                let z = x.bracket(&y);
                for s in &states {
                    let v = FockVector::basis(s.clone());
                    let xy = action.act(&x, &action.act(&y, &v).unwrap()).unwrap();
                    let yx = action.act(&y, &action.act(&x, &v).unwrap()).unwrap();
                    let lhs = xy.sub(&yx);
                    let rhs = action.act(&z, &v).unwrap();
                    assert_eq!(lhs, rhs, "[e_{i1}{j1} t^{a}, e_{i2}{j2} t^{b}] at {s:?}");
                }
            }
        }
    }

    #[test]
    fn derivation_bracket() {
        let r = 2;
        for k in 1..=2u32 {
            let action = GlrAction::restrict_glr_k(r, k);
            let d = LieElement::d(r);
            for a in -2i64..=2 {
                let x = LieElement::e(r, 0, 1, a).unwrap();
                for s in colored_states(r, 2, 1) {
                    let v = FockVector::basis(s);
                    let dx = action.act(&d, &action.act(&x, &v).unwrap()).unwrap();
                    let xd = action.act(&x, &action.act(&d, &v).unwrap()).unwrap();
                    let lhs = dx.sub(&xd);
                    let rhs = action.act(&x, &v).unwrap().scale(&rat(a));
                    assert_eq!(lhs, rhs, "k={k} a={a}");
                }
            }
        }
    }

    #[test]
    fn charge_transfer() {
        let r = 2;
        let action = GlrAction::new(r);
        let x = LieElement::e(r, 0, 1, 1).unwrap();
        for s in colored_states(r, 2, 1) {
            let charges = s.charges();
            let total: i64 = charges.iter().sum();
            let v = FockVector::basis(s);
            for (t, _) in action.act(&x, &v).unwrap().terms() {
                let tc = t.charges();
                assert_eq!(tc.iter().sum::<i64>(), total);
                assert_eq!(tc[0], charges[0] + 1);
                assert_eq!(tc[1], charges[1] - 1);
            }
        }
    }

    #[test]
    fn graded_character_rank_one() {
        let table = graded_character(1, 0, &rat(6));
        let expected = [1u64, 1, 2, 3, 5, 7, 11];
        for (n, &p) in expected.iter().enumerate() {
            assert_eq!(table.get(&rat(n as i64)), Some(&p), "energy {n}");
        }
    }

    #[test]
    fn graded_character_counts_by_enumeration() {
        // F^2(0): count basis states by energy and compare with direct
        // enumeration of colored states
        let table = graded_character(2, 0, &rat(3));
        let mut direct: BTreeMap<Rat, u64> = BTreeMap::new();
        for s in colored_states(2, 3, 3) {
            if s.charges().iter().sum::<i64>() != 0 {
                continue;
            }
            let e = energy(&s);
            if e <= rat(3) {
                *direct.entry(e).or_insert(0) += 1;
            }
        }
        for (e, count) in &table {
            assert_eq!(direct.get(e), Some(count), "energy {e}");
        }
    }

    #[test]
    fn weight_of_vacuum() {
        let action = GlrAction::restrict_glr_k(2, 2);
        let s = ColoredMayaState::vacuum(&[1, -1]);
        let w = weight_of(&action, &s);
        assert_eq!(w.h, vec![1, -1]);
        assert_eq!(w.level, 2);
        assert_eq!(w.energy, crate::ratio(-1, 2));
    }
}
