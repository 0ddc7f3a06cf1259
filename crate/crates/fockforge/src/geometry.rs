//! Torus fixed-point combinatorics for the framed moduli spaces M(r,n):
//! tangent characters at fixed points, one-parameter-subgroup splittings,
//! factored equivariant Euler classes, the sign relations, localized inner
//! products, and the Z_k fixed-locus character identities.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::fock::FockVector;
use crate::partition::{
    k_core, k_quotient, is_k_regular, relative_hook, ChargeVector, Multipartition,
    Partition, PartitionError,
};
use crate::symfunc::{Basis, SymElement, SymError, SymTensor};
use crate::{rat, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("partition is not {0}-regular (nonempty {0}-core)")]
    NotKRegular(u32),
    #[error("zero weight in Euler class: term {0}")]
    ZeroWeight(String),
    #[error("direction is degenerate: nonzero N^0 part")]
    DegenerateDirection,
    #[error("localization ratio is not constant")]
    NonConstant,
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("Schur label {0} is not {1}-regular")]
    IrregularLabel(String, u32),
    #[error("bracket does not act as a scalar")]
    NonScalar,
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

// ---------------------------------------------------------------------------
// torus characters
// ---------------------------------------------------------------------------

/// A virtual character of the torus C* x (C*)^r: an integer combination of
/// monomials t^a e_0^{b_0} ... e_{r-1}^{b_{r-1}}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusCharacter {
    r: usize,
    terms: BTreeMap<(i64, Vec<i64>), i64>,
}

impl TorusCharacter {
    pub fn zero(r: usize) -> Self {
        TorusCharacter {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(r: usize, t: i64, e: Vec<i64>, mult: i64) -> Self {
        assert_eq!(e.len(), r);
        let mut out = Self::zero(r);
        out.add_term(t, e, mult);
        out
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn add_term(&mut self, t: i64, e: Vec<i64>, mult: i64) {
        if mult == 0 {
            return;
        }
        let key = (t, e);
        match self.terms.get_mut(&key) {
            Some(m) => {
                *m += mult;
                if *m == 0 {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, mult);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r);
        let mut out = self.clone();
        for ((t, e), &m) in &other.terms {
            out.add_term(*t, e.clone(), m);
        }
        out
    }

    pub fn neg(&self) -> Self {
        TorusCharacter {
            r: self.r,
            terms: self.terms.iter().map(|(k, &m)| (k.clone(), -m)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r);
        let mut out = Self::zero(self.r);
        for ((t1, e1), &m1) in &self.terms {
            for ((t2, e2), &m2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(t1 + t2, e, m1 * m2);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, Vec<i64>), &i64)> {
        self.terms.iter()
    }

    /// Sum of all multiplicities (the virtual dimension).
    pub fn total_multiplicity(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Terms whose framing exponents all vanish.
    pub fn t_only_part(&self) -> Self {
        TorusCharacter {
            r: self.r,
            terms: self
                .terms
                .iter()
                .filter(|((_, e), _)| e.iter().all(|&b| b == 0))
                .map(|(k, &m)| (k.clone(), m))
                .collect(),
        }
    }

    /// Terms whose total t-exponent is divisible by k (the Z_k-invariant
    /// part when Z_k sits inside the t-circle).
    pub fn zk_invariant_part(&self, k: u32) -> Self {
        TorusCharacter {
            r: self.r,
            terms: self
                .terms
                .iter()
                .filter(|((t, _), _)| t.rem_euclid(k as i64) == 0)
                .map(|(key, &m)| (key.clone(), m))
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|((t, e), m)| serde_json::json!({"t": t, "e": e, "mult": m}))
            .collect();
        serde_json::json!({ "terms": terms })
    }

    pub fn from_json(r: usize, v: &serde_json::Value) -> Option<Self> {
        let mut out = Self::zero(r);
        for t in v.get("terms")?.as_array()? {
            let texp = t.get("t")?.as_i64()?;
            let e: Vec<i64> = t
                .get("e")?
                .as_array()?
                .iter()
                .map(|x| x.as_i64())
                .collect::<Option<_>>()?;
            if e.len() != r {
                return None;
            }
            out.add_term(texp, e, t.get("mult")?.as_i64()?);
        }
        Some(out)
    }
}

impl fmt::Display for TorusCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((t, e), &m) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if m != 1 {
                factors.push(m.to_string());
            }
            match t {
                0 => {}
                1 => factors.push("t".to_string()),
                _ => factors.push(format!("t^{t}")),
            }
            for (i, &b) in e.iter().enumerate() {
                match b {
                    0 => {}
                    1 => factors.push(format!("e{i}")),
                    _ => factors.push(format!("e{i}^{b}")),
                }
            }
            if factors.is_empty() {
                factors.push("1".to_string());
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// weight forms and Euler classes
// ---------------------------------------------------------------------------

/// The linear form a x + sum b_i y_i attached to a torus weight.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WeightForm {
    pub x: i64,
    pub y: Vec<i64>,
}

impl WeightForm {
    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y.iter().all(|&b| b == 0)
    }

    pub fn neg(&self) -> Self {
        WeightForm {
            x: -self.x,
            y: self.y.iter().map(|&b| -b).collect(),
        }
    }

    /// Canonical representative up to sign; returns (form, flipped).
    fn canonical(&self) -> (WeightForm, bool) {
        let lead = std::iter::once(self.x)
            .chain(self.y.iter().copied())
            .find(|&c| c != 0)
            .unwrap_or(0);
        if lead < 0 {
            (self.neg(), true)
        } else {
            (self.clone(), false)
        }
    }
}

impl fmt::Display for WeightForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.x {
            0 => {}
            1 => parts.push("x".to_string()),
            -1 => parts.push("-x".to_string()),
            a => parts.push(format!("{a}x")),
        }
        for (i, &b) in self.y.iter().enumerate() {
            match b {
                0 => {}
                1 => parts.push(format!("+y{i}")),
                -1 => parts.push(format!("-y{i}")),
                b if b > 0 => parts.push(format!("+{b}y{i}")),
                b => parts.push(format!("{b}y{i}")),
            }
        }
        if parts.is_empty() {
            parts.push("0".to_string());
        }
        write!(f, "{}", parts.join(""))
    }
}

/// A factored equivariant Euler class: a multiset of weight forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerClass {
    forms: BTreeMap<WeightForm, u64>,
}

impl EulerClass {
    pub fn forms(&self) -> impl Iterator<Item = (&WeightForm, &u64)> {
        self.forms.iter()
    }

    pub fn degree(&self) -> u64 {
        self.forms.values().sum()
    }

    /// Whether other = (-1)^s self for some s, with s returned.
    pub fn negation_match(&self, other: &Self) -> Option<u64> {
        if self.degree() != other.degree() {
            return None;
        }
        let mut flips = 0u64;
        for (form, &mult) in &self.forms {
            if other.forms.get(form) == Some(&mult) {
                continue;
            }
            if other.forms.get(&form.neg()) == Some(&mult) {
                flips += mult;
                continue;
            }
            return None;
        }
        // every form of other must be accounted for in the same way
        for (form, &mult) in &other.forms {
            if self.forms.get(form) != Some(&mult) && self.forms.get(&form.neg()) != Some(&mult)
            {
                return None;
            }
        }
        Some(flips)
    }
}

/// Factor a character into its Euler class. All multiplicities must be
/// nonnegative and no weight may be zero.
pub fn euler_class(chi: &TorusCharacter) -> Result<EulerClass, GeomError> {
    let mut forms = BTreeMap::new();
    for ((t, e), &m) in chi.terms() {
        let form = WeightForm {
            x: *t,
            y: e.clone(),
        };
        if form.is_zero() {
            return Err(GeomError::ZeroWeight(format!("{m} * t^0 (trivial weight)")));
        }
        if m < 0 {
            return Err(GeomError::ZeroWeight(format!(
                "negative multiplicity {m} at {form}"
            )));
        }
        *forms.entry(form).or_insert(0) += m as u64;
    }
    Ok(EulerClass { forms })
}

// ---------------------------------------------------------------------------
// fixed points and tangent characters
// ---------------------------------------------------------------------------

/// Torus fixed points of M(r,n): multipartitions of total size n.
pub fn fixed_points(r: usize, n: u32) -> Vec<Multipartition> {
    crate::partition::multipartitions_of(n, r)
}

/// Tangent character at a fixed point:
/// T = sum_{a,b} t^{l_b - l_a} e_b e_a^{-1}
///     (sum_{s in lam_a} t^{-h_{b,a}(s)} + sum_{s in lam_b} t^{h_{a,b}(s)}).
pub fn tangent_character(
    mp: &Multipartition,
    charges: &ChargeVector,
) -> Result<TorusCharacter, GeomError> {
    let r = mp.arity();
    if charges.arity() != r {
        return Err(GeomError::ArityMismatch(charges.arity(), r));
    }
    let l = charges.entries();
    let mut out = TorusCharacter::zero(r);
    for a in 0..r {
        for b in 0..r {
            let lam_a = &mp.components()[a];
            let lam_b = &mp.components()[b];
            let mut e = vec![0i64; r];
            e[b] += 1;
            e[a] -= 1;
            let twist = l[b] - l[a];
            for s in lam_a.cells() {
                let h = relative_hook(lam_a, lam_b, s)?;
                out.add_term(twist - h, e.clone(), 1);
            }
            for s in lam_b.cells() {
                let h = relative_hook(lam_b, lam_a, s)?;
                out.add_term(twist + h, e.clone(), 1);
            }
        }
    }
    Ok(out)
}

/// The alpha = beta part of the tangent character: the hook formula
/// U = sum_a sum_{s in lam_a} (t^{-h(s)} + t^{h(s)}).
pub fn hook_character(mp: &Multipartition) -> TorusCharacter {
    let r = mp.arity();
    let mut out = TorusCharacter::zero(r);
    for lam in mp.components() {
        for s in lam.cells() {
            let h = lam.hook(s);
            out.add_term(h, vec![0; r], 1);
            out.add_term(-h, vec![0; r], 1);
        }
    }
    out
}

/// The off-diagonal (normal-bundle) part: terms with nonzero framing
/// exponents.
pub fn normal_character(
    mp: &Multipartition,
    charges: &ChargeVector,
) -> Result<TorusCharacter, GeomError> {
    let t = tangent_character(mp, charges)?;
    Ok(t.sub(&t.t_only_part()))
}

/// A splitting direction (rho; sigma_0, ..., sigma_{r-1}): the pairing of a
/// monomial t^a prod e_i^{b_i} is rho a + sum sigma_i b_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Direction {
    pub rho: i64,
    pub sigma: Vec<i64>,
}

impl Direction {
    /// Example 1: (1,1) x (1, t, ..., t^{r-1}) — trivial on the base.
    pub fn framing_only(r: usize) -> Self {
        Direction {
            rho: 0,
            sigma: (0..r as i64).collect(),
        }
    }

    /// Example 3: (t^r, t^{-r}) x (1, t, ..., t^{r-1}).
    pub fn generic(r: usize) -> Self {
        Direction {
            rho: r as i64,
            sigma: (0..r as i64).collect(),
        }
    }

    pub fn pairing(&self, t: i64, e: &[i64]) -> i64 {
        self.rho * t + self.sigma.iter().zip(e).map(|(s, b)| s * b).sum::<i64>()
    }
}

/// Split a character into (N+, N0, N-) by the sign of the pairing.
pub fn split_by_subgroup(
    chi: &TorusCharacter,
    dir: &Direction,
) -> (TorusCharacter, TorusCharacter, TorusCharacter) {
    let r = chi.r();
    let mut plus = TorusCharacter::zero(r);
    let mut zero = TorusCharacter::zero(r);
    let mut minus = TorusCharacter::zero(r);
    for ((t, e), &m) in chi.terms() {
        let p = dir.pairing(*t, e);
        let target = match p.cmp(&0) {
            std::cmp::Ordering::Greater => &mut plus,
            std::cmp::Ordering::Equal => &mut zero,
            std::cmp::Ordering::Less => &mut minus,
        };
        target.add_term(*t, e.clone(), m);
    }
    (plus, zero, minus)
}

/// Result of a sign-relation check at one fixed point.
#[derive(Clone, Debug)]
pub struct SignCheck {
    pub fixed_point: Multipartition,
    pub half_rank: u64,
    pub expected_parity: u64,
    pub ok: bool,
}

/// Verify e(N+) = (-1)^m e(N-) for one of the three standard splittings.
/// Example 1: normal bundle to the framing-torus fixed locus, sign
/// (-1)^{(r-1)n}. Example 2: its Z_k-invariant part, sign (-1)^m with
/// m = half the invariant rank. Example 3: the full tangent space, sign
/// (-1)^{rn}.
pub fn check_sign_relation(
    example: u8,
    r: usize,
    n: u32,
    charges: &ChargeVector,
    k: Option<u32>,
) -> Result<Vec<SignCheck>, GeomError> {
    let mut out = Vec::new();
    for mp in fixed_points(r, n) {
        let (chi, dir, expected_parity) = match example {
            1 => (
                normal_character(&mp, charges)?,
                Direction::framing_only(r),
                ((r as u64 - 1) * n as u64) % 2,
            ),
            2 => {
                let k = k.unwrap_or(2);
                let inv = normal_character(&mp, charges)?.zk_invariant_part(k);
                let m = (inv.total_multiplicity() / 2) as u64;
                (inv, Direction::framing_only(r), m % 2)
            }
            3 => (
                tangent_character(&mp, charges)?,
                Direction::generic(r),
                (r as u64 * n as u64) % 2,
            ),
            _ => panic!("example must be 1, 2 or 3"),
        };
        let (plus, zero, minus) = split_by_subgroup(&chi, &dir);
        let ok = zero.is_zero()
            && match (euler_class(&plus), euler_class(&minus)) {
                (Ok(ep), Ok(em)) => {
                    let half = ep.degree();
                    ep.negation_match(&em) == Some(half) && half % 2 == expected_parity
                }
                _ => false,
            };
        let half_rank = (chi.total_multiplicity() / 2) as u64;
        out.push(SignCheck {
            fixed_point: mp,
            half_rank,
            expected_parity,
            ok,
        });
    }
    Ok(out)
}

/// The localized inner product <eta(1_lam), eta(1_mu)> =
/// delta_{lam,mu} (-1)^m e(T)/e(N^-)^2, evaluated by multiset cancellation
/// of the factored linear forms.
pub fn localized_inner(
    lam: &Multipartition,
    mu: &Multipartition,
    charges: &ChargeVector,
    dir: &Direction,
) -> Result<Rat, GeomError> {
    if lam != mu {
        return Ok(Rat::zero());
    }
    let n = lam.total_size();
    let r = lam.arity();
    let m = r as u64 * n as u64;
    let t = tangent_character(lam, charges)?;
    let (_plus, zero, minus) = split_by_subgroup(&t, dir);
    if !zero.is_zero() {
        return Err(GeomError::DegenerateDirection);
    }
    let et = euler_class(&t)?;
    let en = euler_class(&minus)?;
    // numerator e(T), denominator e(N^-)^2, compared via canonical forms
    let mut num: BTreeMap<WeightForm, i64> = BTreeMap::new();
    let mut flips: u64 = 0;
    for (form, &mult) in et.forms() {
        let (canon, flipped) = form.canonical();
        if flipped {
            flips += mult;
        }
        *num.entry(canon).or_insert(0) += mult as i64;
    }
    for (form, &mult) in en.forms() {
        let (canon, flipped) = form.canonical();
        if flipped {
            flips += 2 * mult;
        }
        *num.entry(canon).or_insert(0) -= 2 * mult as i64;
    }
    if num.values().any(|&v| v != 0) {
        return Err(GeomError::NonConstant);
    }
    let sign = if (m + flips) % 2 == 0 { rat(1) } else { rat(-1) };
    Ok(sign)
}

// ---------------------------------------------------------------------------
// Z_k fixed loci and the k-quotient character identity
// ---------------------------------------------------------------------------

/// Tangent character (in t only) at a k-regular fixed point of the Z_k
/// fixed locus of the Hilbert scheme: hooks divisible by k survive.
pub fn zk_fixed_tangent(lam: &Partition, k: u32) -> Result<TorusCharacter, GeomError> {
    if !is_k_regular(lam, k) {
        return Err(GeomError::NotKRegular(k));
    }
    let mut out = TorusCharacter::zero(0);
    for s in lam.cells() {
        let h = lam.hook(s);
        if h.rem_euclid(k as i64) == 0 {
            out.add_term(h, vec![], 1);
            out.add_term(-h, vec![], 1);
        }
    }
    Ok(out)
}

/// Tangent character at a fixed point of the resolution
/// (C^2/Z_k)~^[n]: ordinary hooks of the k components, dilated by k.
pub fn resolution_tangent(mp: &Multipartition, k: u32) -> TorusCharacter {
    let mut out = TorusCharacter::zero(0);
    for lam in mp.components() {
        for s in lam.cells() {
            let h = lam.hook(s);
            out.add_term(k as i64 * h, vec![], 1);
            out.add_term(-(k as i64) * h, vec![], 1);
        }
    }
    out
}

/// The Z_k component label of a fixed point: v_c counts cells of color c,
/// where the color of cell (i,j) in component alpha is j - i + l_alpha
/// modulo k.
pub fn zk_component_of(mp: &Multipartition, charges: &ChargeVector, k: u32) -> Vec<u64> {
    assert_eq!(mp.arity(), charges.arity());
    let mut v = vec![0u64; k as usize];
    for (lam, &l) in mp.components().iter().zip(charges.entries()) {
        for s in lam.cells() {
            let c = (s.col as i64 - s.row as i64 + l).rem_euclid(k as i64) as usize;
            v[c] += 1;
        }
    }
    v
}

// ---------------------------------------------------------------------------
// the transport map g and the diagonal Heisenberg
// ---------------------------------------------------------------------------

/// g: Sym -> Sym^k on k-regular Schur labels,
/// s_mu |-> epsilon_k(mu) s_{k-quotient(mu)}, where epsilon_k is the abacus
/// permutation sign; the sign makes g intertwine the diagonal Heisenberg
/// with the dilated one.
pub fn g_map(x: &SymElement, k: u32) -> Result<SymTensor, GeomError> {
    let schur = x.convert(Basis::Schur);
    let mut out = SymTensor::zero(k as usize, x.n_max(), Basis::Schur);
    for (mu, c) in schur.terms() {
        if !k_core(mu, k).is_empty() {
            return Err(GeomError::IrregularLabel(mu.to_string(), k));
        }
        let q = k_quotient(mu, k);
        let sign = rat(crate::partition::quotient_sign(mu, k));
        out = out.add(
            &SymTensor::basis_element(x.n_max(), Basis::Schur, q.components().to_vec())
                .scale(&(c * sign)),
        );
    }
    Ok(out)
}

/// The diagonal Heisenberg P(n) = sum_i p_i(n) on Sym^k.
pub fn diagonal_p(t: &SymTensor, n: i64) -> Result<SymTensor, SymError> {
    let mut out = SymTensor::zero(t.arity(), t.n_max(), t.basis());
    for i in 0..t.arity() {
        out = out.add(&t.slot_p(i, n)?);
    }
    Ok(out)
}

/// Measure [P(n), P(m)] on a basis sweep; must be kn delta_{n+m,0} id.
pub fn diagonal_heisenberg_bracket(k: u32, n: i64, m: i64) -> Result<Rat, GeomError> {
    assert!(n != 0 && m != 0);
    let n_max = (n.unsigned_abs() + m.unsigned_abs()) as u32 + 4;
    let mut measured: Option<Rat> = None;
    let mut labels: Vec<Vec<Partition>> = vec![vec![Partition::empty(); k as usize]];
    // a few non-vacuum labels keep the measurement honest
    for i in 0..k as usize {
        let mut l = vec![Partition::empty(); k as usize];
        l[i] = Partition::new(vec![2, 1]).unwrap();
        labels.push(l);
    }
    for l in labels {
        let t = SymTensor::basis_element(n_max, Basis::Power, l);
        let a = diagonal_p(&diagonal_p(&t, m)?, n)?;
        let b = diagonal_p(&diagonal_p(&t, n)?, m)?;
        let comm = a.sub(&b);
        let scalar = comm.inner(&t) / t.inner(&t);
        if comm != t.scale(&scalar) {
            return Err(GeomError::NonScalar);
        }
        match &measured {
            None => measured = Some(scalar),
            Some(s) if *s == scalar => {}
            _ => return Err(GeomError::NonScalar),
        }
    }
    Ok(measured.unwrap())
}

/// <eta'(1), eta'(1)> = k: the unit transported to the resolution pairs
/// with itself as the sum over the k orthonormal fixed-point classes.
pub fn norm_eta_unit(k: u32) -> Rat {
    let mut v: FockVector<u32> = FockVector::zero();
    for i in 0..k {
        v.add_term(i, Rat::one());
    }
    v.inner(&v)
}
