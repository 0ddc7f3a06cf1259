//! Executable verification suites: each suite sweeps one family of
//! algebraic identities over a bounded block of basis states and reports
//! pass/fail with a counterexample on failure.

use rayon::prelude::*;

use crate::affine::{level_of, GlrAction, LieElement};
use crate::boson_fermion::{boson_from_fermion, p0, phi, vertex_psi, vertex_psi_star};
use crate::fermion::{colored_psi, colored_psi_star, colored_states, ColoredMayaState};
use crate::fock::FockVector;
use crate::geometry::{
    check_sign_relation, diagonal_heisenberg_bracket, fixed_points, g_map,
    hook_character, localized_inner, norm_eta_unit, resolution_tangent,
    tangent_character, zk_component_of, zk_fixed_tangent, Direction,
};
use crate::partition::{
    cell_color, from_core_quotient, is_k_regular, k_core, k_quotient,
    multipartitions_of, partitions_of, ChargeVector, Multipartition, Partition,
};
use crate::symfunc::{Basis, BosonicState, SymElement, SymTensor};
use crate::rat;

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    fn record(&mut self, name: &str, cases: usize, failure: Option<String>) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed: failure.is_none(),
            cases,
            detail: failure.unwrap_or_default(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("suite {}\n", self.suite);
        for c in &self.checks {
            if c.passed {
                out.push_str(&format!("  PASS {} ({} cases)\n", c.name, c.cases));
            } else {
                out.push_str(&format!("  FAIL {}: {}\n", c.name, c.detail));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite,
            "passed": self.all_passed(),
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "passed": c.passed,
                "cases": c.cases,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Names of all available suites.
pub const SUITES: &[&str] = &[
    "clifford",
    "heisenberg",
    "boson-fermion",
    "vertex",
    "glr-bracket",
    "level-k",
    "signs",
    "quotient",
    "localization",
    "counting",
];

/// Shared knobs for the suites; the defaults are desk scale.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// bound on total partition size / truncation degree
    pub degree: u32,
    /// bound on |charge| per slot
    pub charges: i64,
    /// bound on operator indices |k|
    pub indices: i64,
    /// number of colors
    pub r: usize,
    /// cyclic group order for Z_k checks
    pub k: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            degree: 4,
            charges: 1,
            indices: 3,
            r: 2,
            k: 2,
        }
    }
}

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Option<SuiteReport> {
    Some(match name {
        "clifford" => suite_clifford(cfg.r.max(1), cfg.degree, cfg.charges, cfg.indices),
        "heisenberg" => suite_heisenberg(cfg.degree.max(6), cfg.indices.max(1)),
        "boson-fermion" => suite_boson_fermion(cfg.degree, cfg.indices, cfg.charges),
        "vertex" => suite_vertex(cfg.degree, cfg.indices, cfg.charges),
        "glr-bracket" => suite_glr_bracket(cfg.r.max(2), cfg.indices, cfg.degree),
        "level-k" => suite_level_k(cfg.k.max(2), 3),
        "signs" => suite_signs(cfg.degree.min(5), cfg.k.max(2)),
        "quotient" => suite_quotient(cfg.degree.max(8).min(12)),
        "localization" => suite_localization(cfg.degree.min(4)),
        "counting" => suite_counting(cfg.degree.min(6)),
        _ => return None,
    })
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    SUITES.iter().map(|s| run_suite(s, cfg).unwrap()).collect()
}

// ---------------------------------------------------------------------------
// clifford
// ---------------------------------------------------------------------------

/// A signed basis-state image: the result of a monomial in psi/psi*.
type Signed = Option<(i64, ColoredMayaState)>;

fn fast_psi(i: usize, k: i64, s: &ColoredMayaState, star: bool) -> Signed {
    let slot = s.slot(i);
    let (sign, t) = if star { slot.contract(k)? } else { slot.wedge(k)? };
    let pre: i64 = s.charges()[..i].iter().sum();
    let koszul = if pre.rem_euclid(2) == 0 { 1 } else { -1 };
    let mut slots = s.slots().to_vec();
    slots[i] = t;
    Some((sign * koszul, ColoredMayaState::new(slots)))
}

fn compose(
    a: (usize, i64, bool),
    b: (usize, i64, bool),
    s: &ColoredMayaState,
) -> Signed {
    let (sg1, t) = fast_psi(b.0, b.1, s, b.2)?;
    let (sg2, u) = fast_psi(a.0, a.1, &t, a.2)?;
    Some((sg1 * sg2, u))
}

fn anticommutator_mismatch(
    a: (usize, i64, bool),
    b: (usize, i64, bool),
    s: &ColoredMayaState,
    expected_delta: i64,
) -> bool {
    let ab = compose(a, b, s);
    let ba = compose(b, a, s);
    let mut terms: Vec<(i64, &ColoredMayaState)> = Vec::with_capacity(2);
    for t in [&ab, &ba] {
        if let Some((sg, u)) = t {
            terms.push((*sg, u));
        }
    }
    // expected: delta * s
    match (expected_delta, terms.len()) {
        (0, 0) => false,
        (0, 2) => !(terms[0].1 == terms[1].1 && terms[0].0 + terms[1].0 == 0),
        (d, 2) => {
            !(terms[0].1 == terms[1].1
                && terms[0].1 == s
                && terms[0].0 + terms[1].0 == d)
        }
        (d, 1) => !(terms[0].1 == s && terms[0].0 == d),
        _ => true,
    }
}

/// Anticommutation relations of the colored Clifford operators:
/// {psi_i(k), psi_j(l)} = {psi_i*(k), psi_j*(l)} = 0 and
/// {psi_i(k), psi_j*(l)} = delta_ij delta_kl.
pub fn suite_clifford(
    max_r: usize,
    max_total_size: u32,
    charge_bound: i64,
    index_bound: i64,
) -> SuiteReport {
    let mut report = SuiteReport::new("clifford");
    for r in 1..=max_r {
        let states = colored_states(r, max_total_size, charge_bound);
        let cases = states.len();
        let failure = states
            .par_iter()
            .find_map_any(|s| {
                for i in 0..r {
                    for j in i..r {
                        for k in -index_bound..=index_bound {
                            for l in -index_bound..=index_bound {
                                if anticommutator_mismatch(
                                    (i, k, false),
                                    (j, l, false),
                                    s,
                                    0,
                                ) {
                                    return Some(format!(
                                        "{{psi_{i}({k}), psi_{j}({l})}} != 0 at {s:?}"
                                    ));
                                }
                                if anticommutator_mismatch(
                                    (i, k, true),
                                    (j, l, true),
                                    s,
                                    0,
                                ) {
                                    return Some(format!(
                                        "{{psi*_{i}({k}), psi*_{j}({l})}} != 0 at {s:?}"
                                    ));
                                }
                            }
                        }
                    }
                    for j in 0..r {
                        for k in -index_bound..=index_bound {
                            for l in -index_bound..=index_bound {
                                let delta = i64::from(i == j && k == l);
                                if anticommutator_mismatch(
                                    (i, k, false),
                                    (j, l, true),
                                    s,
                                    delta,
                                ) {
                                    return Some(format!(
                                        "{{psi_{i}({k}), psi*_{j}({l})}} != {delta} at {s:?}"
                                    ));
                                }
                            }
                        }
                    }
                }
                None
            });
        report.record(&format!("anticommutators r={r}"), cases, failure);
    }
    report
}

// ---------------------------------------------------------------------------
// heisenberg
// ---------------------------------------------------------------------------

/// [p(n), p(-m)] = n delta_{nm} on truncated Sym, and the colored version
/// with delta_{ij}.
pub fn suite_heisenberg(n_trunc: u32, index_bound: i64) -> SuiteReport {
    let mut report = SuiteReport::new("heisenberg");
    let mut cases = 0usize;
    let mut failure = None;
    'outer: for n in 1..=index_bound {
        for m in 1..=index_bound {
            for d in 0..=n_trunc.saturating_sub(n.max(m) as u32) {
                for lam in partitions_of(d) {
                    cases += 1;
                    let x = SymElement::basis_element(n_trunc, Basis::Power, lam.clone())
                        .unwrap();
                    let a = x.heisenberg_p(-m).unwrap().heisenberg_p(n).unwrap();
                    let b = x.heisenberg_p(n).unwrap().heisenberg_p(-m).unwrap();
                    let expected = if n == m {
                        x.scale(&rat(n))
                    } else {
                        x.scale(&rat(0))
                    };
                    if a.sub(&b) != expected {
                        failure = Some(format!("[p({n}), p(-{m})] wrong on p_{lam}"));
                        break 'outer;
                    }
                }
            }
        }
    }
    report.record("rank-one bracket", cases, failure);

    let mut cases = 0usize;
    let mut failure = None;
    let colored_bound = index_bound.min(3);
    'outer2: for n in 1..=colored_bound {
        for m in 1..=colored_bound {
            for i in 0..2usize {
                for j in 0..2usize {
                    for d in 0..=3u32 {
                        for mp in multipartitions_of(d, 2) {
                            cases += 1;
                            let x = BosonicState::basis_element(
                                n_trunc,
                                Basis::Power,
                                ChargeVector::zeros(2),
                                mp.components().to_vec(),
                            );
                            let a = x
                                .colored_p(j, -m)
                                .unwrap()
                                .colored_p(i, n)
                                .unwrap();
                            let b = x
                                .colored_p(i, n)
                                .unwrap()
                                .colored_p(j, -m)
                                .unwrap();
                            let scalar = if i == j && n == m { rat(n) } else { rat(0) };
                            if a.sub(&b) != x.scale(&scalar) {
                                failure = Some(format!(
                                    "[p_{i}({n}), p_{j}(-{m})] wrong at {mp}"
                                ));
                                break 'outer2;
                            }
                        }
                    }
                }
            }
        }
    }
    report.record("colored bracket", cases, failure);
    report
}

// ---------------------------------------------------------------------------
// boson-fermion
// ---------------------------------------------------------------------------

/// Bilinear sums agree with the phi-conjugated Heisenberg operators, and
/// p(0) reads the charge.
pub fn suite_boson_fermion(max_degree: u32, n_bound: i64, charge_bound: i64) -> SuiteReport {
    let mut report = SuiteReport::new("boson-fermion");
    let n_max = max_degree + n_bound as u32 + 1;

    let states = colored_states(1, max_degree, charge_bound);
    let cases = states.len();
    let failure = states.par_iter().find_map_any(|s| {
        let v = FockVector::basis(s.clone());
        let b = phi(1, n_max, &v).unwrap();
        for n in -n_bound..=n_bound {
            if n == 0 {
                continue;
            }
            let lhs = phi(1, n_max, &boson_from_fermion(0, n, &v).unwrap()).unwrap();
            let rhs = b.colored_p(0, n).unwrap();
            if lhs != rhs {
                return Some(format!("p({n}) mismatch at {s:?}"));
            }
        }
        let charge = s.charges()[0];
        if p0(0, &v).unwrap() != v.scale(&rat(charge)) {
            return Some(format!("p(0) != charge at {s:?}"));
        }
        None
    });
    report.record("rank-one bilinears", cases, failure);

    let r2_degree = max_degree.min(5);
    let r2_bound = n_bound.min(3);
    let states = colored_states(2, r2_degree, 1);
    let cases = states.len();
    let n_max2 = r2_degree + r2_bound as u32 + 1;
    let failure = states.par_iter().find_map_any(|s| {
        let v = FockVector::basis(s.clone());
        let b = phi(2, n_max2, &v).unwrap();
        for i in 0..2 {
            for n in -r2_bound..=r2_bound {
                if n == 0 {
                    continue;
                }
                let lhs = phi(2, n_max2, &boson_from_fermion(i, n, &v).unwrap()).unwrap();
                let rhs = b.colored_p(i, n).unwrap();
                if lhs != rhs {
                    return Some(format!("p_{i}({n}) mismatch at {s:?}"));
                }
            }
            let charge = s.charges()[i];
            if p0(i, &v).unwrap() != v.scale(&rat(charge)) {
                return Some(format!("p_{i}(0) != charge at {s:?}"));
            }
        }
        None
    });
    report.record("colored bilinears", cases, failure);
    report
}

// ---------------------------------------------------------------------------
// vertex
// ---------------------------------------------------------------------------

/// Vertex operators agree with the wedge-side Clifford action through phi.
pub fn suite_vertex(max_degree: u32, k_bound: i64, charge_bound: i64) -> SuiteReport {
    let mut report = SuiteReport::new("vertex");
    // degree can grow by k - m - 1 under psi(k)
    let n_max = max_degree + k_bound as u32 + charge_bound as u32 + 2;

    let states = colored_states(1, max_degree, charge_bound);
    let cases = states.len();
    let failure = states.par_iter().find_map_any(|s| {
        let b = phi(1, n_max, &FockVector::basis(s.clone())).unwrap();
        for k in -k_bound..=k_bound {
            let wedge = phi(1, n_max, &colored_psi(0, k, s).unwrap()).unwrap();
            if vertex_psi(0, k, &b).unwrap() != wedge {
                return Some(format!("psi({k}) mismatch at {s:?}"));
            }
            let contract = phi(1, n_max, &colored_psi_star(0, k, s).unwrap()).unwrap();
            if vertex_psi_star(0, k, &b).unwrap() != contract {
                return Some(format!("psi*({k}) mismatch at {s:?}"));
            }
        }
        None
    });
    report.record("rank-one vertex operators", cases, failure);

    let r2_degree = max_degree.min(3);
    let r2_k = k_bound.min(3);
    let n_max2 = r2_degree + r2_k as u32 + 3;
    let states = colored_states(2, r2_degree, 1);
    let cases = states.len();
    let failure = states.par_iter().find_map_any(|s| {
        let b = phi(2, n_max2, &FockVector::basis(s.clone())).unwrap();
        for i in 0..2 {
            for k in -r2_k..=r2_k {
                let wedge = phi(2, n_max2, &colored_psi(i, k, s).unwrap()).unwrap();
                if vertex_psi(i, k, &b).unwrap() != wedge {
                    return Some(format!("psi_{i}({k}) mismatch at {s:?}"));
                }
                let contract =
                    phi(2, n_max2, &colored_psi_star(i, k, s).unwrap()).unwrap();
                if vertex_psi_star(i, k, &b).unwrap() != contract {
                    return Some(format!("psi*_{i}({k}) mismatch at {s:?}"));
                }
            }
        }
        None
    });
    report.record("colored vertex operators", cases, failure);
    report
}

// ---------------------------------------------------------------------------
// glr bracket
// ---------------------------------------------------------------------------

/// act([x,y]) = act(x)act(y) - act(y)act(x) over all generator pairs,
/// including the central term; the center acts as 1.
pub fn suite_glr_bracket(r: usize, a_bound: i64, max_size: u32) -> SuiteReport {
    let mut report = SuiteReport::new("glr-bracket");
    let action = GlrAction::new(r);
    let mut gens = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for a in -a_bound..=a_bound {
                gens.push(LieElement::e(r, i, j, a).unwrap());
            }
        }
    }
    gens.push(LieElement::d(r));
    let states = colored_states(r, max_size, 1);
    let pairs: Vec<(usize, usize)> = (0..gens.len())
        .flat_map(|a| (a..gens.len()).map(move |b| (a, b)))
        .collect();
    let cases = pairs.len() * states.len();
    let failure = pairs.par_iter().find_map_any(|&(xi, yi)| {
        let x = &gens[xi];
        let y = &gens[yi];
        let z = x.bracket(y);
        for s in &states {
            let v = FockVector::basis(s.clone());
            let xy = action.act(x, &action.act(y, &v).unwrap()).unwrap();
            let yx = action.act(y, &action.act(x, &v).unwrap()).unwrap();
            if xy.sub(&yx) != action.act(&z, &v).unwrap() {
                return Some(format!("bracket mismatch for pair {xi},{yi} at {s:?}"));
            }
        }
        None
    });
    report.record(&format!("generator pairs r={r}"), cases, failure);

    let level = level_of(&action);
    report.record(
        "central scalar",
        1,
        if level == Ok(rat(1)) {
            None
        } else {
            Some(format!("level_of = {level:?}, expected 1"))
        },
    );
    report
}

// ---------------------------------------------------------------------------
// level k
// ---------------------------------------------------------------------------

/// The dilated action has level k, the diagonal Heisenberg bracket is kn,
/// g(p_{kn}) matches, and the dilated generators are Z_k-homogeneous.
pub fn suite_level_k(max_k: u32, n_bound: u32) -> SuiteReport {
    let mut report = SuiteReport::new("level-k");

    let mut failure = None;
    let mut cases = 0usize;
    for k in 2..=max_k {
        for r in 1..=2usize {
            cases += 1;
            let measured = level_of(&GlrAction::restrict_glr_k(r, k));
            if measured != Ok(rat(k as i64)) {
                failure = Some(format!("level_of(r={r}, k={k}) = {measured:?}"));
            }
        }
    }
    report.record("measured level", cases, failure);

    let mut failure = None;
    let mut cases = 0usize;
    for k in 2..=max_k {
        for n in 1..=n_bound as i64 {
            for m in [-n, n + 1] {
                cases += 1;
                let expected = if n + m == 0 { rat(k as i64 * n) } else { rat(0) };
                match diagonal_heisenberg_bracket(k, n, m) {
                    Ok(v) if v == expected => {}
                    other => {
                        failure = Some(format!(
                            "[P({n}), P({m})] at k={k}: {other:?}, expected {expected}"
                        ));
                    }
                }
            }
        }
    }
    report.record("diagonal Heisenberg", cases, failure);

    let mut failure = None;
    let mut cases = 0usize;
    for k in 2..=max_k {
        for n in 1..=4u32 {
            if k * n > 8 {
                continue;
            }
            cases += 1;
            let pkn = SymElement::basis_element(
                8,
                Basis::Power,
                Partition::new(vec![k * n]).unwrap(),
            )
            .unwrap();
            let lhs = match g_map(&pkn, k) {
                Ok(t) => t.convert(Basis::Power),
                Err(e) => {
                    failure = Some(format!("g(p_{}) rejected: {e}", k * n));
                    continue;
                }
            };
            let mut rhs = SymTensor::zero(k as usize, 8, Basis::Power);
            for j in 0..k as usize {
                let mut labels = vec![Partition::empty(); k as usize];
                labels[j] = Partition::new(vec![n]).unwrap();
                rhs = rhs.add(&SymTensor::basis_element(8, Basis::Power, labels));
            }
            if lhs != rhs {
                failure = Some(format!("g(p_{}) != sum of slot power sums", k * n));
            }
        }
    }
    report.record("g on diagonal power sums", cases, failure);

    // Z_k homogeneity of the dilated generators: the v-grading change of
    // every image term depends only on the charge residues of the source
    let k = 2u32;
    let action = GlrAction::restrict_glr_k(2, k);
    let mut cases = 0usize;
    let mut failure = None;
    let mut observed: std::collections::BTreeMap<(Vec<i64>, i64), Vec<i64>> =
        std::collections::BTreeMap::new();
    'homog: for a in -1i64..=1 {
        let x = LieElement::e(2, 0, 1, a).unwrap();
        for s in colored_states(2, 3, 1) {
            let charges = ChargeVector::new(s.charges());
            let mp = Multipartition::new(
                s.slots().iter().map(|m| m.partition().clone()).collect(),
            );
            let v_src = zk_component_of(&mp, &charges, k);
            let img = action.act(&x, &FockVector::basis(s.clone())).unwrap();
            for (t, _) in img.terms() {
                cases += 1;
                let t_charges = ChargeVector::new(t.charges());
                let t_mp = Multipartition::new(
                    t.slots().iter().map(|m| m.partition().clone()).collect(),
                );
                let v_img = zk_component_of(&t_mp, &t_charges, k);
                let delta: Vec<i64> = v_img
                    .iter()
                    .zip(&v_src)
                    .map(|(a, b)| *a as i64 - *b as i64)
                    .collect();
                match observed.entry((s.charges(), a)) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(delta);
                    }
                    std::collections::btree_map::Entry::Occupied(e) => {
                        if e.get() != &delta {
                            failure = Some(format!(
                                "v-grading change not constant for a={a} at {s:?}"
                            ));
                            break 'homog;
                        }
                    }
                }
            }
        }
    }
    report.record("Z_k homogeneity of dilated generators", cases, failure);
    report
}

// ---------------------------------------------------------------------------
// signs
// ---------------------------------------------------------------------------

/// The Example 1-3 sign relations at every fixed point.
pub fn suite_signs(max_n: u32, k: u32) -> SuiteReport {
    let mut report = SuiteReport::new("signs");
    for (example, maybe_k) in [(1u8, None), (2, Some(k)), (3, None)] {
        let mut cases = 0usize;
        let mut failure = None;
        for r in 1..=2usize {
            let charges = ChargeVector::new((0..r as i64).collect());
            for n in 0..=max_n {
                match check_sign_relation(example, r, n, &charges, maybe_k) {
                    Ok(checks) => {
                        for c in checks {
                            cases += 1;
                            if !c.ok {
                                failure = Some(format!(
                                    "example {example} fails at r={r} n={n} {}",
                                    c.fixed_point
                                ));
                            }
                        }
                    }
                    Err(e) => failure = Some(format!("example {example}: {e}")),
                }
            }
        }
        report.record(&format!("example {example}"), cases, failure);
    }
    report
}

// ---------------------------------------------------------------------------
// quotient
// ---------------------------------------------------------------------------

/// Abacus identities: core/quotient size bookkeeping, the color-balance
/// characterization of empty cores, the character match, and the bijection
/// counts.
pub fn suite_quotient(max_total: u32) -> SuiteReport {
    let mut report = SuiteReport::new("quotient");
    for k in 2..=3u32 {
        let mut cases = 0usize;
        let mut failure = None;
        for n in 0..=max_total {
            for lam in partitions_of(n) {
                cases += 1;
                let core = k_core(&lam, k);
                let quot = k_quotient(&lam, k);
                if core.size() + k * quot.total_size() != lam.size() {
                    failure = Some(format!("size identity fails for {lam}, k={k}"));
                    continue;
                }
                if from_core_quotient(&core, &quot, k) != Ok(lam.clone()) {
                    failure = Some(format!("round trip fails for {lam}, k={k}"));
                    continue;
                }
                // empty core <=> equal color multiplicities
                let mut colors = vec![0u64; k as usize];
                for c in lam.cells() {
                    colors[cell_color(c, k, 0) as usize] += 1;
                }
                let balanced = colors.iter().all(|&c| c == colors[0]);
                if core.is_empty() != balanced {
                    failure = Some(format!("color balance fails for {lam}, k={k}"));
                    continue;
                }
                if is_k_regular(&lam, k) != core.is_empty() {
                    failure = Some(format!("regularity mismatch for {lam}, k={k}"));
                }
            }
        }
        report.record(&format!("abacus bookkeeping k={k}"), cases, failure);

        let mut cases = 0usize;
        let mut failure = None;
        for n in 0..=max_total / k {
            let mut regular = 0usize;
            for lam in partitions_of(k * n) {
                if !is_k_regular(&lam, k) {
                    continue;
                }
                regular += 1;
                cases += 1;
                let lhs = zk_fixed_tangent(&lam, k).unwrap();
                let rhs = resolution_tangent(&k_quotient(&lam, k), k);
                if lhs != rhs {
                    failure = Some(format!("character mismatch at {lam}, k={k}"));
                }
            }
            let tuples = multipartitions_of(n, k as usize).len();
            if regular != tuples {
                failure = Some(format!(
                    "bijection count fails: {regular} regular vs {tuples} tuples, k={k} n={n}"
                ));
            }
        }
        report.record(&format!("character match k={k}"), cases, failure);
    }
    report
}

// ---------------------------------------------------------------------------
// localization
// ---------------------------------------------------------------------------

/// Tangent dimension counts, the diagonal hook formula, orthonormality of
/// the localized classes, and the eta-unit norm.
pub fn suite_localization(max_n: u32) -> SuiteReport {
    let mut report = SuiteReport::new("localization");

    let mut cases = 0usize;
    let mut failure = None;
    for r in 1..=2usize {
        let charges = ChargeVector::new((0..r as i64).collect());
        for n in 0..=max_n + 1 {
            for mp in fixed_points(r, n) {
                cases += 1;
                let chi = tangent_character(&mp, &charges).unwrap();
                if chi.total_multiplicity() != 2 * r as i64 * n as i64 {
                    failure = Some(format!("dimension fails at {mp}"));
                    continue;
                }
                if chi.t_only_part() != hook_character(&mp) {
                    failure = Some(format!("hook formula fails at {mp}"));
                }
            }
        }
    }
    report.record("tangent dimension and hooks", cases, failure);

    let mut cases = 0usize;
    let mut failure = None;
    for r in 1..=2usize {
        let charges = ChargeVector::new((0..r as i64).collect());
        let dir = Direction::generic(r);
        for n in 0..=max_n {
            let pts = fixed_points(r, n);
            for a in &pts {
                for b in &pts {
                    cases += 1;
                    let expected = if a == b { rat(1) } else { rat(0) };
                    match localized_inner(a, b, &charges, &dir) {
                        Ok(v) if v == expected => {}
                        other => {
                            failure = Some(format!(
                                "<eta(1_{a}), eta(1_{b})> = {other:?}"
                            ));
                        }
                    }
                }
            }
        }
    }
    report.record("orthonormal localized classes", cases, failure);

    let mut failure = None;
    for k in 1..=5u32 {
        if norm_eta_unit(k) != rat(k as i64) {
            failure = Some(format!("<eta'(1), eta'(1)> != {k}"));
        }
    }
    report.record("eta unit norm", 5, failure);
    report
}

// ---------------------------------------------------------------------------
// counting
// ---------------------------------------------------------------------------

/// Fixed-point counts agree across the Z_k decomposition, and the rank-one
/// charge-zero graded dimension is the partition function.
pub fn suite_counting(max_n: u32) -> SuiteReport {
    let mut report = SuiteReport::new("counting");

    let mut cases = 0usize;
    let mut failure = None;
    for r in 1..=2usize {
        let charges = ChargeVector::new((0..r as i64).collect());
        for k in 2..=3u32 {
            for n in 0..=max_n {
                cases += 1;
                let pts = fixed_points(r, n);
                let total = pts.len();
                let mut by_component: std::collections::BTreeMap<Vec<u64>, usize> =
                    std::collections::BTreeMap::new();
                for mp in &pts {
                    *by_component
                        .entry(zk_component_of(mp, &charges, k))
                        .or_insert(0) += 1;
                }
                let sum: usize = by_component.values().sum();
                if sum != total {
                    failure = Some(format!("component counts fail r={r} k={k} n={n}"));
                    continue;
                }
                for v in by_component.keys() {
                    if v.iter().sum::<u64>() != n as u64 {
                        failure = Some(format!("component label size fails r={r} k={k}"));
                    }
                }
            }
        }
    }
    report.record("Z_k component decomposition", cases, failure);

    let mut failure = None;
    let table = crate::affine::graded_character(1, 0, &rat(10));
    let mut cases = 0usize;
    for n in 0..=10u32 {
        cases += 1;
        let expected = partitions_of(n).len() as u64;
        if table.get(&rat(n as i64)) != Some(&expected) {
            failure = Some(format!("graded dimension at energy {n}"));
        }
    }
    report.record("graded dimension is p(n)", cases, failure);
    report
}
