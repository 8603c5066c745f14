//! Mechanical verification of the structural claims about chart ideals:
//! local product structure, flatness along the parameter line, fiber and
//! total dimensions, depth of the degenerate fibers, reducedness evidence,
//! and the gluing step that reduces a chain to shorter chains.
//!
//! Every check returns a [`ReportEntry`] whose status is `PASS`, `FAIL`, or
//! `INCONCLUSIVE`. Checks never report `PASS` by construction: each one
//! recomputes the claimed property from the defining ideals with exact
//! arithmetic. Resource exhaustion and internal errors surface as `Err`, not
//! as a spurious status.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::{Guards, Ideal};
use crate::ideal_ops::{ideal_quotient, krull_dimension, specialize, substitute_solved};
use crate::matrix::PolyMatrix;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::VarTable;
use crate::rng::{derive_seed, SplitMix64};
use crate::schemes::{
    affine_chain, canonical_chain, canonical_chain_maps, check_lg_conditions,
    commuting_pair_ideal, enumerate_specs, exchanged_block_names, scalar_ring,
    standard_chart_ideal, standard_fg_matrices, truncation_glue, ChartSpec,
};

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            Status::Fail => write!(f, "FAIL"),
            Status::Inconclusive => write!(f, "INCONCLUSIVE"),
        }
    }
}

/// One executed check, with its parameters and a human-readable witness.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportEntry {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub witness: String,
    pub millis: u128,
}

/// An ordered collection of executed checks.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct VerificationReport {
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn push(&mut self, entry: ReportEntry) {
        self.entries.push(entry);
    }

    pub fn has_failures(&self) -> bool {
        self.entries.iter().any(|e| e.status == Status::Fail)
    }

    /// Process exit status a suite run maps to: `1` when any check failed,
    /// `0` otherwise (inconclusive entries do not fail a run).
    pub fn exit_code(&self) -> u8 {
        if self.has_failures() {
            1
        } else {
            0
        }
    }

    /// `(passed, failed, inconclusive)` counts.
    pub fn counts(&self) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for e in &self.entries {
            match e.status {
                Status::Pass => c.0 += 1,
                Status::Fail => c.1 += 1,
                Status::Inconclusive => c.2 += 1,
            }
        }
        c
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Serialized bytes with all timings masked; two runs of the same
    /// configuration must agree on these bytes exactly.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut masked = self.clone();
        for e in &mut masked.entries {
            e.millis = 0;
        }
        masked.to_json().into_bytes()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let params: Vec<String> =
                e.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!(
                "[{}] {} {} ({} ms)\n",
                e.status,
                e.check,
                params.join(" "),
                e.millis
            ));
            if !e.witness.is_empty() {
                out.push_str(&format!("    {}\n", e.witness));
            }
        }
        let (p, f, i) = self.counts();
        out.push_str(&format!(
            "{} checks: {} passed, {} failed, {} inconclusive\n",
            self.entries.len(),
            p,
            f,
            i
        ));
        out
    }
}

fn params_of(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn run_check<F>(check: &str, params: BTreeMap<String, String>, body: F) -> Result<ReportEntry>
where
    F: FnOnce() -> Result<(Status, String)>,
{
    let start = Instant::now();
    let (status, witness) = body()?;
    Ok(ReportEntry {
        check: check.into(),
        params,
        status,
        witness,
        millis: start.elapsed().as_millis(),
    })
}

/// The standard chart of a spec is, after solving the scheduled coordinates,
/// exactly the commuting-pair scheme of its exchanged block times a free
/// affine factor, and the distinguished point lies on it.
pub fn verify_local_structure(
    spec: &ChartSpec,
    field: FieldSpec,
    guards: &Guards,
) -> Result<ReportEntry> {
    let params = params_of(&[("spec", spec.label()), ("field", field.to_string())]);
    let spec = *spec;
    let guards = guards.clone();
    run_check("local_structure", params, move || {
        let chart = standard_chart_ideal(&spec, field)?;
        let residual = substitute_solved(&chart.ideal, &chart.schedule)?;
        let rring = residual.ring().clone();
        let ell = spec.ell();

        // the commuting-pair model, renamed onto the two exchanged blocks
        let comm = commuting_pair_ideal(ell, field)?;
        let (first, second) = exchanged_block_names(&spec);
        let mut map = vec![None; comm.ring().arity()];
        map[0] = rring.index_of("s");
        for (t, name) in first.iter().enumerate() {
            map[1 + t] = rring.index_of(name);
        }
        for (t, name) in second.iter().enumerate() {
            map[1 + ell * ell + t] = rring.index_of(name);
        }
        let renamed: Vec<Polynomial> = comm
            .gens()
            .iter()
            .map(|g| g.rename_into(&rring, &map))
            .collect::<Result<_>>()?;
        if !Ideal::new(&rring, renamed).equals(&residual, &guards)? {
            return Ok((
                Status::Fail,
                "the residual ideal differs from the commuting-pair model".into(),
            ));
        }

        // count free coordinates off the reduced basis
        let gb = residual.groebner_basis(&MonomialOrder::Grevlex, &guards)?;
        let mut used = vec![false; rring.arity()];
        for g in gb.iter() {
            for v in g.vars_used() {
                used[v] = true;
            }
        }
        let s_idx = rring.index_of("s").expect("the residual ring keeps s");
        let free = (0..rring.arity())
            .filter(|&v| v != s_idx && !used[v])
            .count();
        let constrained = rring.arity() - 1 - free;
        if free != spec.free_count() || constrained != 2 * ell * ell {
            return Ok((
                Status::Fail,
                format!(
                    "expected {} free coordinates next to a {}x{} exchanged pair, \
                     found {} free and {} constrained",
                    spec.free_count(),
                    ell,
                    ell,
                    free,
                    constrained
                ),
            ));
        }

        // the distinguished point (all coordinates zero) lies on the scheme
        let zeros = vec![field.zero(); rring.arity()];
        for g in residual.gens() {
            if !g.evaluate(&zeros)?.is_zero() {
                return Ok((
                    Status::Fail,
                    format!("a residual generator does not vanish at the origin: {g}"),
                ));
            }
        }

        Ok((
            Status::Pass,
            format!(
                "chart = {}x{} commuting pair x affine^{}; schedule solved {} coordinates",
                ell,
                ell,
                spec.free_count(),
                chart.schedule.len()
            ),
        ))
    })
}

/// `(I : s) = I`: the parameter is a nonzerodivisor on the chart, i.e. the
/// family is flat over the parameter line.
pub fn verify_flatness(label: &str, ideal: &Ideal, guards: &Guards) -> Result<ReportEntry> {
    let params = params_of(&[
        ("target", label.to_string()),
        ("field", ideal.ring().field().to_string()),
    ]);
    let ideal = ideal.clone();
    let guards = guards.clone();
    run_check("flatness", params, move || {
        let ring = ideal.ring();
        let s_idx = ring
            .index_of("s")
            .ok_or_else(|| Error::Internal("flatness target has no parameter s".into()))?;
        let s = Polynomial::var(ring, s_idx);
        let quo = ideal_quotient(&ideal, &s, &guards)?;
        if quo.equals(&ideal, &guards)? {
            return Ok((
                Status::Pass,
                "the parameter is a nonzerodivisor: (I : s) = I".into(),
            ));
        }
        let mut witness = String::from("(I : s) strictly contains I");
        for g in quo.gens() {
            let nf = ideal.normal_form(g, &MonomialOrder::Grevlex, &guards)?;
            if !nf.is_zero() {
                witness = format!(
                    "s * ({g}) lies in the ideal but ({g}) does not; normal form {nf}"
                );
                break;
            }
        }
        Ok((Status::Fail, witness))
    })
}

/// The chart has total dimension `r(d−r) + 1` and both the degenerate fiber
/// (`s = 0`) and a general fiber (`s = 1`) have dimension `r(d−r)`.
pub fn verify_dimensions(
    label: &str,
    ideal: &Ideal,
    d: usize,
    r: usize,
    guards: &Guards,
) -> Result<ReportEntry> {
    let params = params_of(&[
        ("target", label.to_string()),
        ("field", ideal.ring().field().to_string()),
    ]);
    let ideal = ideal.clone();
    let guards = guards.clone();
    run_check("dimensions", params, move || {
        let m0 = r * (d - r);
        let field = ideal.ring().field();
        let total = krull_dimension(&ideal, &guards)?.dim;
        let fiber0 =
            krull_dimension(&specialize(&ideal, "s", &field.zero())?, &guards)?.dim;
        let fiber1 =
            krull_dimension(&specialize(&ideal, "s", &field.one())?, &guards)?.dim;
        let ok = total == m0 + 1 && fiber0 == m0 && fiber1 == m0;
        let witness = format!(
            "total {total} (expected {}), fiber at 0: {fiber0}, fiber at 1: {fiber1} \
             (both expected {m0})",
            m0 + 1
        );
        Ok((if ok { Status::Pass } else { Status::Fail }, witness))
    })
}

/// Try to extend a regular sequence of seeded random linear forms to the
/// full dimension of `R/I`, then confirm the cut is visibly Artinian.
fn regular_sequence_outcome(
    ideal: &Ideal,
    seed: u64,
    guards: &Guards,
) -> Result<(Status, String)> {
    let ring = ideal.ring();
    let n = ring.arity();
    let dim = krull_dimension(ideal, guards)?.dim;
    let mut rng = SplitMix64::new(seed);
    let mut current = ideal.clone();
    let mut sequence: Vec<String> = Vec::new();
    for step in 1..=dim {
        let mut found = None;
        for _attempt in 0..3 {
            // dense linear form: zerodivisors on these fibers concentrate on
            // coordinate loci, so every variable gets a nonzero coefficient
            let mut h = Polynomial::zero(ring);
            for v in 0..n {
                let c = rng.nonzero_signed(4);
                h = h.add(&Polynomial::var(ring, v).scale(&ring.field().from_i64(c)));
            }
            if h.is_zero() {
                continue;
            }
            if ideal_quotient(&current, &h, guards)?.equals(&current, guards)? {
                found = Some(h);
                break;
            }
        }
        match found {
            Some(h) => {
                sequence.push(h.to_string());
                current = current.plus(&[h]);
            }
            None => {
                return Ok((
                    Status::Fail,
                    format!(
                        "no linear nonzerodivisor found at depth step {step} of {dim} \
                         after 3 draws: depth falls short of dimension"
                    ),
                ))
            }
        }
    }
    // confirm the cut is zero-dimensional: a pure power of every variable
    // appears among the leading terms
    let lts = current.leading_terms(&MonomialOrder::Grevlex, guards)?;
    for v in 0..n {
        let pure = lts
            .iter()
            .any(|m| m.support().len() == 1 && m.support()[0] == v);
        if !pure {
            return Ok((
                Status::Inconclusive,
                format!(
                    "the cut by {dim} linear forms is not visibly zero-dimensional \
                     in variable {}",
                    ring.name(v)
                ),
            ));
        }
    }
    Ok((
        Status::Pass,
        format!(
            "regular sequence of length {dim} = dimension: [{}]; the cut is Artinian",
            sequence.join(", ")
        ),
    ))
}

/// Depth equals dimension for the degenerate fiber of the commuting-pair
/// scheme, and the family is flat, so the total space inherits the property.
pub fn verify_cohen_macaulay(
    ell: usize,
    field: FieldSpec,
    seed: u64,
    guards: &Guards,
) -> Result<ReportEntry> {
    let params = params_of(&[
        ("target", format!("commuting_pair ell={ell}")),
        ("field", field.to_string()),
        ("seed", seed.to_string()),
    ]);
    let guards = guards.clone();
    run_check("cohen_macaulay", params, move || {
        let comm = commuting_pair_ideal(ell, field)?;
        let s = Polynomial::var(comm.ring(), 0);
        let flat = ideal_quotient(&comm, &s, &guards)?.equals(&comm, &guards)?;
        if !flat {
            return Ok((
                Status::Fail,
                "the commuting-pair family is not flat over the parameter line".into(),
            ));
        }
        let fiber = specialize(&comm, "s", &field.zero())?;
        let (status, inner) = regular_sequence_outcome(&fiber, seed, &guards)?;
        let witness = match status {
            Status::Pass => format!(
                "degenerate fiber: {inner}; with flatness the total space \
                 has the same depth property"
            ),
            _ => format!("degenerate fiber: {inner}"),
        };
        Ok((status, witness))
    })
}

/// Planted control: a union of two planes meeting in a point has depth 1 but
/// dimension 2, and the depth checker must detect that.
pub fn cm_control_entry(field: FieldSpec, seed: u64, guards: &Guards) -> Result<ReportEntry> {
    let params = params_of(&[
        ("target", "two_planes_control".to_string()),
        ("field", field.to_string()),
        ("seed", seed.to_string()),
    ]);
    let guards = guards.clone();
    run_check("cm_control", params, move || {
        let ring = VarTable::new(
            ["x", "y", "z", "w"].map(String::from).to_vec(),
            field,
        )?;
        let gens = ["x*z", "x*w", "y*z", "y*w"]
            .iter()
            .map(|t| crate::parse::parse_polynomial(&ring, t))
            .collect::<Result<Vec<_>>>()?;
        let ideal = Ideal::new(&ring, gens);
        let (status, inner) = regular_sequence_outcome(&ideal, seed, &guards)?;
        if status == Status::Fail {
            Ok((
                Status::Pass,
                format!("the depth checker correctly rejects the control: {inner}"),
            ))
        } else {
            Ok((
                Status::Fail,
                format!(
                    "the depth checker failed to reject a scheme of depth 1 \
                     and dimension 2: {inner}"
                ),
            ))
        }
    })
}

/// Look for a squarefree initial ideal (which forces the quotient to be
/// reduced) under the two stock orders and a few seeded coordinate
/// permutations. Finding none is inconclusive, never a failure.
pub fn verify_reduced_fiber(
    label: &str,
    fiber: &Ideal,
    seed: u64,
    guards: &Guards,
) -> Result<ReportEntry> {
    let params = params_of(&[
        ("target", label.to_string()),
        ("field", fiber.ring().field().to_string()),
        ("seed", seed.to_string()),
    ]);
    let fiber = fiber.clone();
    let guards = guards.clone();
    run_check("reduced_fiber", params, move || {
        let ring = fiber.ring();
        let n = ring.arity();
        let squarefree = |ideal: &Ideal, ord: &MonomialOrder| -> Result<bool> {
            let lts = ideal.leading_terms(ord, &guards)?;
            Ok(lts.iter().all(|m| m.squarefree()))
        };
        for ord in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            if squarefree(&fiber, &ord)? {
                return Ok((
                    Status::Pass,
                    format!(
                        "squarefree initial ideal under {}: the fiber is reduced",
                        ord.label()
                    ),
                ));
            }
        }
        let mut rng = SplitMix64::new(seed);
        for round in 1..=8u32 {
            let mut perm: Vec<usize> = (0..n).collect();
            rng.shuffle(&mut perm);
            let permuted: Vec<Polynomial> =
                fiber.gens().iter().map(|g| g.permute_vars(&perm)).collect();
            let ideal = Ideal::new(ring, permuted);
            if squarefree(&ideal, &MonomialOrder::Grevlex)? {
                return Ok((
                    Status::Pass,
                    format!(
                        "squarefree initial ideal under grevlex after seeded \
                         coordinate permutation {round}: the fiber is reduced"
                    ),
                ));
            }
        }
        Ok((
            Status::Inconclusive,
            "no squarefree initial ideal among 10 orders; reducedness not decided".into(),
        ))
    })
}

/// The chain decomposes: head and tail meet properly along the diagonal of
/// the shared node, and solving the diagonal recovers the full chain ideal.
pub fn verify_induction_step(
    d: usize,
    r: usize,
    n: usize,
    field: FieldSpec,
    guards: &Guards,
) -> Result<ReportEntry> {
    let params = params_of(&[
        ("chain", format!("d={d},r={r},n={n}")),
        ("field", field.to_string()),
    ]);
    let guards = guards.clone();
    run_check("induction_step", params, move || {
        let maps = canonical_chain_maps(d, r, n, field)?;
        let glue = truncation_glue(d, r, &maps)?;
        let m0 = r * (d - r);
        let zero = field.zero();

        let union = glue.head.plus(glue.tail.gens());
        let dim_union = krull_dimension(&specialize(&union, "s", &zero)?, &guards)?.dim;
        let cut = union.plus(&glue.diagonal);
        let dim_cut = krull_dimension(&specialize(&cut, "s", &zero)?, &guards)?.dim;
        if dim_union != 2 * m0 || dim_cut != m0 {
            return Ok((
                Status::Fail,
                format!(
                    "expected the degenerate fibers of the separated pieces and \
                     of their intersection to have dimensions {} and {}, found \
                     {dim_union} and {dim_cut}",
                    2 * m0,
                    m0
                ),
            ));
        }

        let reassembled = substitute_solved(&cut, &glue.schedule)?;
        let full = canonical_chain(d, r, n, field)?.ideal;
        let gens: Vec<Polynomial> = reassembled
            .gens()
            .iter()
            .map(|g| g.rename_by_name(full.ring()))
            .collect::<Result<_>>()?;
        if !Ideal::new(full.ring(), gens).equals(&full, &guards)? {
            return Ok((
                Status::Fail,
                "gluing the pieces along the diagonal does not recover the chain ideal"
                    .into(),
            ));
        }
        Ok((
            Status::Pass,
            format!(
                "pieces meet properly at the degenerate parameter \
                 (dimension {} cut to {}) and reassemble to the chain",
                2 * m0,
                m0
            ),
        ))
    })
}

/// Away from the degenerate parameter a chain with invertible transports is
/// a single free chart: identifying all nodes leaves no equations.
pub fn verify_affine_identification(
    d: usize,
    r: usize,
    n: usize,
    field: FieldSpec,
    guards: &Guards,
) -> Result<ReportEntry> {
    let params = params_of(&[
        ("chain", format!("d={d},r={r},n={n}")),
        ("field", field.to_string()),
    ]);
    let _ = guards;
    run_check("affine_identification", params, move || {
        let chart = affine_chain(d, r, n, field)?;
        let at_one = specialize(&chart.ideal, "s", &field.one())?;
        let residual = substitute_solved(&at_one, &chart.schedule)?;
        let m0 = r * (d - r);
        if !residual.gens().is_empty() {
            return Ok((
                Status::Fail,
                format!(
                    "{} equations remain after identifying the nodes",
                    residual.gens().len()
                ),
            ));
        }
        if residual.ring().arity() != m0 {
            return Ok((
                Status::Fail,
                format!(
                    "expected a free chart on {m0} coordinates, found {}",
                    residual.ring().arity()
                ),
            ));
        }
        Ok((
            Status::Pass,
            format!(
                "at parameter 1 the chain collapses to one free chart on {m0} coordinates"
            ),
        ))
    })
}

/// All three linkage conditions for a family of map pairs.
pub fn verify_linkage_conditions(
    label: &str,
    d: usize,
    maps: &[(PolyMatrix, PolyMatrix)],
    guards: &Guards,
) -> Result<ReportEntry> {
    let params = params_of(&[
        ("target", label.to_string()),
        ("field", maps[0].0.ring().field().to_string()),
    ]);
    let report = check_lg_conditions(d, maps, guards)?;
    run_check("linkage_conditions", params, move || {
        if report.all_passed() {
            return Ok((
                Status::Pass,
                "product, rank-sum, and kernel-image conditions all hold".into(),
            ));
        }
        let witness = [
            ("product", &report.product),
            ("rank-sum", &report.rank_sum),
            ("kernel-image", &report.kernel_image),
        ]
        .iter()
        .filter_map(|(name, c)| {
            c.witness
                .as_ref()
                .map(|w| format!("{name} condition fails: {w}"))
        })
        .collect::<Vec<_>>()
        .join("; ");
        Ok((Status::Fail, witness))
    })
}

/// Planted controls for the condition checker: a pair that scales by the
/// parameter on both sides (breaking the product and rank-sum conditions)
/// and a repeated exchange pair (breaking the kernel-image condition).
pub fn conditions_control_entries(
    field: FieldSpec,
    guards: &Guards,
) -> Result<Vec<ReportEntry>> {
    let mut out = Vec::new();

    let ring = scalar_ring(field);
    let s = Polynomial::var(&ring, 0);
    let scaled = PolyMatrix::identity_scaled(&ring, 2, &s);
    let outcome = check_lg_conditions(2, &[(scaled.clone(), scaled)], guards)?;
    out.push(run_check(
        "conditions_control",
        params_of(&[
            ("case", "scaled_identity_pair".to_string()),
            ("field", field.to_string()),
        ]),
        move || {
            if !outcome.product.passed && !outcome.rank_sum.passed {
                Ok((
                    Status::Pass,
                    "the checker correctly rejects both the product and the \
                     rank-sum condition"
                        .into(),
                ))
            } else {
                Ok((
                    Status::Fail,
                    format!("the checker accepted a planted violation: {outcome:?}"),
                ))
            }
        },
    )?);

    let spec = ChartSpec::canonical(2, 1)?;
    let pair = standard_fg_matrices(&spec, field)?;
    let outcome = check_lg_conditions(2, &[pair.clone(), pair], guards)?;
    out.push(run_check(
        "conditions_control",
        params_of(&[
            ("case", "repeated_exchange_pair".to_string()),
            ("field", field.to_string()),
        ]),
        move || {
            if outcome.product.passed && !outcome.kernel_image.passed {
                Ok((
                    Status::Pass,
                    "the checker correctly rejects the kernel-image condition \
                     while the product condition holds"
                        .into(),
                ))
            } else {
                Ok((
                    Status::Fail,
                    format!("the checker accepted a planted violation: {outcome:?}"),
                ))
            }
        },
    )?);

    Ok(out)
}

/// Configuration of the full verification suite.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub field: FieldSpec,
    pub seed: u64,
    /// Chain instances `(d, r, n)` receiving the flatness, dimension, and
    /// reducedness checks (plus the gluing checks when `n ≥ 3`).
    pub instances: Vec<(usize, usize, usize)>,
    /// Largest ambient dimension for the exhaustive per-spec checks.
    pub spec_dmax: usize,
    /// Exchanged-block sizes receiving the depth check.
    pub cm_sizes: Vec<usize>,
    pub guards: Guards,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            field: FieldSpec::Fp(32003),
            seed: 42,
            instances: vec![(2, 1, 2), (3, 1, 2), (3, 2, 2), (2, 1, 3)],
            spec_dmax: 4,
            cm_sizes: vec![1, 2],
            guards: Guards::default(),
        }
    }
}

/// Run every check of the suite in a fixed deterministic order.
pub fn run_full_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let g = &config.guards;

    // 1. exhaustive local structure and conditions for every spec at desk scale
    for spec in enumerate_specs(config.spec_dmax) {
        report.push(verify_local_structure(&spec, config.field, g)?);
    }
    for spec in enumerate_specs(config.spec_dmax) {
        let pair = standard_fg_matrices(&spec, config.field)?;
        report.push(verify_linkage_conditions(&spec.label(), spec.d, &[pair], g)?);
    }
    for entry in conditions_control_entries(config.field, g)? {
        report.push(entry);
    }

    // 2. per-instance flatness, dimensions, reducedness, and gluing
    let mut glued: Vec<(usize, usize, usize)> = Vec::new();
    for &(d, r, n) in &config.instances {
        let label = format!("d={d},r={r},n={n}");
        let (chart, maps) = if n == 2 {
            let spec = ChartSpec::canonical(d, r)?;
            (
                standard_chart_ideal(&spec, config.field)?,
                vec![standard_fg_matrices(&spec, config.field)?],
            )
        } else {
            (
                canonical_chain(d, r, n, config.field)?,
                canonical_chain_maps(d, r, n, config.field)?,
            )
        };
        report.push(verify_flatness(&label, &chart.ideal, g)?);
        report.push(verify_dimensions(&label, &chart.ideal, d, r, g)?);
        let fiber0 = specialize(&chart.ideal, "s", &config.field.zero())?;
        report.push(verify_reduced_fiber(
            &label,
            &fiber0,
            derive_seed(config.seed, &label),
            g,
        )?);
        if n >= 3 {
            report.push(verify_linkage_conditions(&label, d, &maps, g)?);
            report.push(verify_induction_step(d, r, n, config.field, g)?);
            report.push(verify_affine_identification(d, r, n, config.field, g)?);
            glued.push((d, r, n));
        }
    }

    // 3. fixed gluing family, for instances lists that omit it
    for (d, r, n) in [(2, 1, 3), (3, 1, 3)] {
        if !glued.contains(&(d, r, n)) {
            report.push(verify_induction_step(d, r, n, config.field, g)?);
            report.push(verify_affine_identification(d, r, n, config.field, g)?);
        }
    }

    // 4. depth of the commuting-pair fibers, with a planted control
    for &ell in &config.cm_sizes {
        let seed = derive_seed(config.seed, &format!("cohen_macaulay ell={ell}"));
        report.push(verify_cohen_macaulay(ell, config.field, seed, g)?);
        let comm = commuting_pair_ideal(ell, config.field)?;
        let fiber = specialize(&comm, "s", &config.field.zero())?;
        report.push(verify_reduced_fiber(
            &format!("commuting_pair ell={ell}"),
            &fiber,
            derive_seed(config.seed, &format!("reduced ell={ell}")),
            g,
        )?);
    }
    report.push(cm_control_entry(
        config.field,
        derive_seed(config.seed, "cm_control"),
        g,
    )?);

    Ok(report)
}
