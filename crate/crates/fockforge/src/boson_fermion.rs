//! The boson-fermion correspondence: the isometry phi between the colored
//! wedge space and charged symmetric functions, the Heisenberg operators
//! written as fermion bilinears, and the fermions written as vertex
//! operators on the bosonic side.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::fermion::{
    colored_psi, colored_psi_star, ColoredMayaState, FermionError, MayaState,
};
use crate::fock::FockVector;
use crate::partition::ChargeVector;
use crate::symfunc::{Basis, BosonicState, SymError};
use crate::{rat, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BosonFermionError {
    #[error("the zero mode is the charge operator; use p0")]
    ZeroMode,
    #[error(transparent)]
    Fermion(#[from] FermionError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

/// phi: the charge-and-partition isometry, maya state q^m s_lambda
/// factor-wise. Fails if a slot partition exceeds the truncation degree.
pub fn phi(
    arity: usize,
    n_max: u32,
    v: &FockVector<ColoredMayaState>,
) -> Result<BosonicState, BosonFermionError> {
    let mut out = BosonicState::zero(arity, n_max, Basis::Schur);
    for (s, c) in v.terms() {
        assert_eq!(s.arity(), arity, "arity mismatch in phi");
        let mut labels = Vec::with_capacity(arity);
        for slot in s.slots() {
            if slot.size() > n_max {
                return Err(SymError::DegreeOverflow(slot.size(), n_max).into());
            }
            labels.push(slot.partition().clone());
        }
        let term = BosonicState::basis_element(
            n_max,
            Basis::Schur,
            ChargeVector::new(s.charges()),
            labels,
        )
        .scale(c);
        out = out.add(&term);
    }
    Ok(out)
}

/// phi^{-1}: Schur labels with charges back to maya states.
pub fn phi_inverse(y: &BosonicState) -> FockVector<ColoredMayaState> {
    let schur = y.convert(Basis::Schur);
    let mut out = FockVector::zero();
    for ((charges, labels), c) in schur.terms() {
        let slots: Vec<MayaState> = labels
            .iter()
            .zip(charges.entries())
            .map(|(l, &m)| MayaState::from_partition(l.clone(), m))
            .collect();
        out.add_term(ColoredMayaState::new(slots), c.clone());
    }
    out
}

/// The Heisenberg generator as a fermion bilinear:
/// p_i(n) = sum_j psi_i(j-n) psi_i*(j), locally finite on each state;
/// positive modes lower the energy, so [p_i(n), p_i(-n)] = n id.
pub fn boson_from_fermion(
    i: usize,
    n: i64,
    v: &FockVector<ColoredMayaState>,
) -> Result<FockVector<ColoredMayaState>, BosonFermionError> {
    if n == 0 {
        return Err(BosonFermionError::ZeroMode);
    }
    let mut out = FockVector::zero();
    for (s, c) in v.terms() {
        if i >= s.arity() {
            return Err(FermionError::ColorOutOfRange(i, s.arity()).into());
        }
        let slot = s.slot(i);
        // beyond this window psi_i(j+n) hits an occupied tail entry
        let window = slot.partition().len() + n.unsigned_abs() as usize + 2;
        for j in slot.entries(window) {
            let mid = colored_psi_star(i, j, s)?;
            for (t, d) in mid.terms() {
                for (u, e) in colored_psi(i, j - n, t)?.terms() {
                    out.add_term(u.clone(), c * d * e);
                }
            }
        }
    }
    Ok(out)
}

/// The zero mode p_i(0) = sum_{j>0} psi_i(j)psi_i*(j) - sum_{j<=0} psi_i*(j)psi_i(j),
/// evaluated by the same window logic; it acts as the slot-i charge.
pub fn p0(
    i: usize,
    v: &FockVector<ColoredMayaState>,
) -> Result<FockVector<ColoredMayaState>, BosonFermionError> {
    let mut out = FockVector::zero();
    for (s, c) in v.terms() {
        if i >= s.arity() {
            return Err(FermionError::ColorOutOfRange(i, s.arity()).into());
        }
        let slot = s.slot(i);
        let m = slot.charge();
        let len = slot.partition().len() as i64;
        // positive part: occupied positions j > 0
        let positive = slot.count_greater(0) as i64;
        // negative part: holes at j <= 0, all of which lie in (m - len, 0]
        let mut holes = 0i64;
        let lo = (m - len).min(0);
        for j in lo + 1..=0 {
            if !slot.contains(j) {
                holes += 1;
            }
        }
        out.add_term(s.clone(), c * rat(positive - holes));
    }
    Ok(out)
}

fn parity_sign(x: i64) -> Rat {
    if x.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// The fermion psi_i(k) on the bosonic side: for slot charge m,
/// psi_i(k) = q_i * sum_{a-b = k-m-1} (-1)^b h_i(a) e_i(b)^perp,
/// with the cross-color Koszul sign (-1)^{l_0 + ... + l_{i-1}} per term.
pub fn vertex_psi(
    i: usize,
    k: i64,
    state: &BosonicState,
) -> Result<BosonicState, BosonFermionError> {
    vertex_impl(i, k, state, false)
}

/// The fermion psi_i*(k) on the bosonic side: for slot charge m,
/// psi_i*(k) = q_i^{-1} * sum_{a-b = k-m} (-1)^b e_i(b) h_i(a)^perp,
/// with the same Koszul sign.
pub fn vertex_psi_star(
    i: usize,
    k: i64,
    state: &BosonicState,
) -> Result<BosonicState, BosonFermionError> {
    vertex_impl(i, k, state, true)
}

fn vertex_impl(
    i: usize,
    k: i64,
    state: &BosonicState,
    star: bool,
) -> Result<BosonicState, BosonFermionError> {
    let m = match state.slot_charge(i)? {
        Some(m) => m,
        None => return Ok(BosonicState::zero(state.arity(), state.n_max(), state.basis())),
    };
    let n_max = state.n_max() as i64;
    let work = state.convert(Basis::Power);
    let mut out = BosonicState::zero(state.arity(), state.n_max(), Basis::Power);
    for ((charges, labels), c) in work.terms() {
        let prefix: i64 = charges.entries()[..i].iter().sum();
        let single = BosonicState::basis_element(
            state.n_max(),
            Basis::Power,
            charges.clone(),
            labels.clone(),
        )
        .scale(&(c * parity_sign(prefix)));
        for b in 0..=n_max {
            let a = if star { k - m + b } else { k - m - 1 + b };
            if a < 0 {
                continue;
            }
            if a > n_max {
                break;
            }
            let mut t = single.clone();
            if star {
                if a > 0 {
                    t = t.colored_h(i, -a)?;
                }
                if b > 0 {
                    t = t.colored_e(i, b)?;
                }
            } else {
                if b > 0 {
                    t = t.colored_e(i, -b)?;
                }
                if a > 0 {
                    t = t.colored_h(i, a)?;
                }
            }
            out = out.add(&t.scale(&parity_sign(b)));
        }
    }
    let delta = if star { -1 } else { 1 };
    Ok(out.shift_q(i, delta)?.convert(state.basis()))
}

/// The sl(infinity) Chevalley raising operator e_k = psi(k+1) psi*(k) on a
/// single fermionic factor.
pub fn chevalley_e(k: i64, v: &FockVector<MayaState>) -> FockVector<MayaState> {
    bilinear(k + 1, k, v)
}

/// The lowering operator f_k = psi(k) psi*(k+1).
pub fn chevalley_f(k: i64, v: &FockVector<MayaState>) -> FockVector<MayaState> {
    bilinear(k, k + 1, v)
}

/// h_k = [e_k, f_k].
pub fn chevalley_h(k: i64, v: &FockVector<MayaState>) -> FockVector<MayaState> {
    chevalley_e(k, &chevalley_f(k, v)).sub(&chevalley_f(k, &chevalley_e(k, v)))
}

fn bilinear(create: i64, annihilate: i64, v: &FockVector<MayaState>) -> FockVector<MayaState> {
    let mut out = FockVector::zero();
    for (s, c) in v.terms() {
        if let Some((sg1, t)) = s.contract(annihilate) {
            if let Some((sg2, u)) = t.wedge(create) {
                out.add_term(u, c * rat(sg1 * sg2));
            }
        }
    }
    out
}

/// The d-grading eigenvalue: sum over slots of |lambda| + m^2/2. The vacuum
/// at charge 0 has energy 0 and psi_i(k) shifts energy by k - 1/2.
pub fn energy(s: &ColoredMayaState) -> Rat {
    let mut e = Rat::zero();
    for slot in s.slots() {
        let m = slot.charge();
        e += rat(slot.size() as i64) + crate::ratio(m * m, 2);
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fermion::{colored_states, states_of_charge};
    use crate::partition::{partitions_of, Partition};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn single(m: i64, parts: &[u32]) -> FockVector<ColoredMayaState> {
        FockVector::basis(ColoredMayaState::new(vec![MayaState::from_partition(
            p(parts),
            m,
        )]))
    }

    #[test]
    fn phi_of_vacuum_and_single_box() {
        let v = single(3, &[]);
        let b = phi(1, 8, &v).unwrap();
        let expected = BosonicState::basis_element(
            8,
            Basis::Schur,
            ChargeVector::new(vec![3]),
            vec![Partition::empty()],
        );
        assert_eq!(b, expected);

        // (1 ^ -1 ^ -2 ^ ...) = charge 0, lambda = (1)
        let v = single(0, &[1]);
        let b = phi(1, 8, &v).unwrap();
        let expected = BosonicState::basis_element(
            8,
            Basis::Schur,
            ChargeVector::new(vec![0]),
            vec![p(&[1])],
        );
        assert_eq!(b, expected);
    }

    #[test]
    fn phi_round_trip_and_isometry() {
        for s in colored_states(2, 3, 1) {
            let v = FockVector::basis(s);
            let b = phi(2, 6, &v).unwrap();
            assert_eq!(phi_inverse(&b), v);
        }
        // isometry on a pair of combined vectors
        let x = single(0, &[2, 1]).add(&single(0, &[3]).scale(&rat(2)));
        let y = single(0, &[3]).sub(&single(0, &[2, 1]));
        let bx = phi(1, 8, &x).unwrap();
        let by = phi(1, 8, &y).unwrap();
        assert_eq!(x.inner(&y), bx.inner(&by));
        assert_eq!(x.inner(&x), bx.inner(&bx));
    }

    #[test]
    fn bilinear_matches_colored_p_under_phi() {
        for r in 1..=2usize {
            for s in colored_states(r, 3, 1) {
                let v = FockVector::basis(s);
                let b = phi(r, 9, &v).unwrap();
                for i in 0..r {
                    for n in [-3i64, -2, -1, 1, 2, 3] {
                        let fermionic = boson_from_fermion(i, n, &v).unwrap();
                        let lhs = phi(r, 9, &fermionic).unwrap();
                        let rhs = b.colored_p(i, n).unwrap();
                        assert_eq!(lhs, rhs, "r={r} i={i} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn zero_mode_is_charge() {
        for s in colored_states(2, 3, 2) {
            let charges = s.charges();
            let v = FockVector::basis(s);
            for i in 0..2 {
                let got = p0(i, &v).unwrap();
                assert_eq!(got, v.scale(&rat(charges[i])));
            }
        }
        assert_eq!(
            boson_from_fermion(0, 1, &single(0, &[])).unwrap(),
            FockVector::zero()
        );
    }

    #[test]
    fn vertex_matches_wedge_action() {
        for r in 1..=2usize {
            for s in colored_states(r, 3, 1) {
                let v = FockVector::basis(s.clone());
                let b = phi(r, 10, &v).unwrap();
                for i in 0..r {
                    for k in -3i64..=3 {
                        let wedge = colored_psi(i, k, &s).unwrap();
                        let lhs = phi(r, 10, &wedge).unwrap();
                        let rhs = vertex_psi(i, k, &b).unwrap();
                        assert_eq!(lhs, rhs, "psi r={r} i={i} k={k} at {s:?}");

                        let contract = colored_psi_star(i, k, &s).unwrap();
                        let lhs = phi(r, 10, &contract).unwrap();
                        let rhs = vertex_psi_star(i, k, &b).unwrap();
                        assert_eq!(lhs, rhs, "psi* r={r} i={i} k={k} at {s:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn vertex_adjointness() {
        // <psi(k) x, y> = <x, psi*(k) y> transported through phi
        for x in states_of_charge(0, 3) {
            for y in states_of_charge(1, 3) {
                let bx = phi(
                    1,
                    8,
                    &FockVector::basis(ColoredMayaState::new(vec![x.clone()])),
                )
                .unwrap();
                let by = phi(
                    1,
                    8,
                    &FockVector::basis(ColoredMayaState::new(vec![y.clone()])),
                )
                .unwrap();
                for k in -2i64..=3 {
                    let lhs = vertex_psi(0, k, &bx).unwrap().inner(&by);
                    let rhs = bx.inner(&vertex_psi_star(0, k, &by).unwrap());
                    assert_eq!(lhs, rhs, "k={k}");
                }
            }
        }
    }

    #[test]
    fn chevalley_relations() {
        // e_0 on vacuum_0 -> +(1 ^ -1 ^ -2 ^ ...)
        let vac = FockVector::basis(MayaState::vacuum(0));
        let e0 = chevalley_e(0, &vac);
        assert_eq!(e0, FockVector::basis(MayaState::from_partition(p(&[1]), 0)));

        for m in -1..=1i64 {
            for s in states_of_charge(m, 4) {
                let v = FockVector::basis(s);
                for k in -2i64..=2 {
                    // sl(2) triple: [h_k, e_k] = 2 e_k, [h_k, f_k] = -2 f_k
                    let he = chevalley_h(k, &chevalley_e(k, &v))
                        .sub(&chevalley_e(k, &chevalley_h(k, &v)));
                    assert_eq!(he, chevalley_e(k, &v).scale(&rat(2)));
                    let hf = chevalley_h(k, &chevalley_f(k, &v))
                        .sub(&chevalley_f(k, &chevalley_h(k, &v)));
                    assert_eq!(hf, chevalley_f(k, &v).scale(&rat(-2)));
                    // h_k is diagonal with eigenvalue in {-1, 0, 1}
                    let h = chevalley_h(k, &v);
                    assert!(
                        h.is_zero() || h == v.scale(&rat(1)) || h == v.scale(&rat(-1)),
                        "h_{k} not diagonal"
                    );
                    // [e_k, f_l] = 0 for |k - l| >= 2
                    for l in -2i64..=2 {
                        if (k - l).abs() >= 2 {
                            let a = chevalley_e(k, &chevalley_f(l, &v));
                            let b = chevalley_f(l, &chevalley_e(k, &v));
                            assert_eq!(a, b, "[e_{k}, f_{l}] != 0");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn energy_and_degree_bookkeeping() {
        let vac = ColoredMayaState::vacuum(&[0]);
        assert_eq!(energy(&vac), rat(0));
        // psi(k) changes energy by k - 1/2, independent of the state
        for m in -2..=2i64 {
            for s in states_of_charge(m, 4) {
                let cs = ColoredMayaState::new(vec![s]);
                for k in -4i64..=4 {
                    if let Ok(img) = colored_psi(0, k, &cs) {
                        for (t, _) in img.terms() {
                            assert_eq!(
                                energy(t) - energy(&cs),
                                rat(k) - crate::ratio(1, 2),
                                "k={k}"
                            );
                            // degree change is k - m - 1 on charge-m states
                            assert_eq!(
                                t.total_size() as i64 - cs.total_size() as i64,
                                k - m - 1
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn graded_dimension_matches_partition_count() {
        for n in 0..=6u32 {
            let count = states_of_charge(0, n)
                .into_iter()
                .filter(|s| s.size() == n)
                .count();
            assert_eq!(count, partitions_of(n).len());
        }
    }
}
