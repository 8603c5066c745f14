//! Construction of the schemes under study.
//!
//! A *chain of linked subspaces* is a sequence of rank-`r` subspaces
//! `V_1, …, V_n` of a `d`-dimensional space, together with maps
//! `f_i : V_i → V_{i+1}` and `g_i : V_{i+1} → V_i` over `k[s]` satisfying
//! `f_i ∘ g_i = g_i ∘ f_i = s · Id`. On the chart where every subspace is a
//! column span `[Id_r; A^i]`, the containment conditions
//! `f_i(V_i) ⊆ V_{i+1}` and `g_i(V_{i+1}) ⊆ V_i` become polynomial equations
//! in the `A^i` entries and `s`; this module writes those equations down, in
//! a fixed deterministic order, together with the solved-variable schedules
//! that exhibit the local product structure of each standard chart.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::{Guards, Ideal};
use crate::ideal_ops::radical_member;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::ring::{Ring, VarTable};

/// Parameters of one standard chart: ambient dimension `d`, subspace rank
/// `r`, and the three block parameters `(d1, d2, c)` describing how the two
/// maps degenerate at `s = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChartSpec {
    pub d: usize,
    pub r: usize,
    pub d1: usize,
    pub d2: usize,
    pub c: usize,
}

impl ChartSpec {
    pub fn new(d: usize, r: usize, d1: usize, d2: usize, c: usize) -> Result<ChartSpec> {
        let spec = ChartSpec { d, r, d1, d2, c };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let ChartSpec { d, r, d1, d2, c } = *self;
        if d < 2 || r == 0 || r >= d {
            return Err(Error::InvalidChart(format!(
                "need 0 < r < d with d >= 2, got d={d}, r={r}"
            )));
        }
        if d1 + d2 > r {
            return Err(Error::InvalidChart(format!(
                "d1 + d2 = {} exceeds r = {r}",
                d1 + d2
            )));
        }
        if c + r > d + d2 {
            return Err(Error::InvalidChart(format!(
                "block five has negative size: d - r - c + d2 = {}",
                d as i64 - r as i64 - c as i64 + d2 as i64
            )));
        }
        if d1 + c < r {
            return Err(Error::InvalidChart(format!(
                "block six has negative size: d1 + c - r = {}",
                d1 as i64 + c as i64 - r as i64
            )));
        }
        Ok(())
    }

    /// Size of the square blocks exchanged by both maps; this is the size of
    /// the commuting pair appearing in the local product structure.
    pub fn ell(&self) -> usize {
        self.r - self.d1 - self.d2
    }

    /// Number of free coordinates in the local product structure:
    /// `r(d−r) − ell²`.
    pub fn free_count(&self) -> usize {
        self.r * (self.d - self.r) - self.ell() * self.ell()
    }

    /// The six block sizes, in row/column order.
    pub fn block_sizes(&self) -> [usize; 6] {
        let ell = self.ell();
        [
            self.d1,
            ell,
            self.d2,
            ell,
            self.d + self.d2 - self.r - self.c,
            self.d1 + self.c - self.r,
        ]
    }

    /// The spec with the largest exchanged block for given `(d, r)`.
    pub fn canonical(d: usize, r: usize) -> Result<ChartSpec> {
        let d2 = (2 * r).saturating_sub(d);
        ChartSpec::new(d, r, 0, d2, r)
    }

    /// The spec whose maps are invertible away from `s = 0`
    /// (`f = Id`, `g = s·Id`); charts around points with `s ≠ 0` use it.
    pub fn node(d: usize, r: usize) -> Result<ChartSpec> {
        ChartSpec::new(d, r, r, 0, 0)
    }

    /// Stable textual label for reports.
    pub fn label(&self) -> String {
        format!(
            "d={},r={},d1={},d2={},c={}",
            self.d, self.r, self.d1, self.d2, self.c
        )
    }
}

/// Every valid spec with `2 ≤ d ≤ d_max`, in a fixed deterministic order.
pub fn enumerate_specs(d_max: usize) -> Vec<ChartSpec> {
    let mut out = Vec::new();
    for d in 2..=d_max {
        for r in 1..d {
            for d1 in 0..=r {
                for d2 in 0..=(r - d1) {
                    for c in 0..=(d + d2) {
                        if let Ok(spec) = ChartSpec::new(d, r, d1, d2, c) {
                            out.push(spec);
                        }
                    }
                }
            }
        }
    }
    out
}

/// The one-variable coefficient ring `k[s]`, `s` of weight two.
pub fn scalar_ring(field: FieldSpec) -> Ring {
    VarTable::with_weights(vec!["s".into()], vec![2], field)
        .expect("the scalar ring is always valid")
}

/// The standard pair of maps for a spec, over `k[s]`.
///
/// Both matrices are block matrices on the same six-block partition. The
/// first map has identity blocks at positions (1,1), (2,4), (5,5) and
/// `s`-scaled identity blocks at (3,3), (4,2), (6,6); the second map swaps
/// `1 ↔ s` on the diagonal blocks and coincides with the first on the
/// exchanged pair (2,4)/(4,2), which squares to `s·Id` by itself.
pub fn standard_fg_matrices(spec: &ChartSpec, field: FieldSpec) -> Result<(PolyMatrix, PolyMatrix)> {
    spec.validate()?;
    let ring = scalar_ring(field);
    let s = Polynomial::var(&ring, 0);
    let one = Polynomial::one(&ring);
    let sizes = spec.block_sizes();
    let mut offsets = [0usize; 6];
    for b in 1..6 {
        offsets[b] = offsets[b - 1] + sizes[b - 1];
    }
    let d = spec.d;
    let mut f = PolyMatrix::zero(&ring, d, d);
    let mut g = PolyMatrix::zero(&ring, d, d);
    // (row block, col block, f entry, g entry)
    let placements: [(usize, usize, &Polynomial, &Polynomial); 6] = [
        (0, 0, &one, &s),
        (1, 3, &one, &one),
        (2, 2, &s, &one),
        (3, 1, &s, &s),
        (4, 4, &one, &s),
        (5, 5, &s, &one),
    ];
    for (rb, cb, fe, ge) in placements {
        let len = sizes[rb];
        debug_assert_eq!(len, sizes[cb]);
        for t in 0..len {
            f.set(offsets[rb] + t, offsets[cb] + t, fe.clone());
            g.set(offsets[rb] + t, offsets[cb] + t, ge.clone());
        }
    }
    Ok((f, g))
}

/// Variable name of entry `(j, k)` (1-based) of the `i`-th coordinate matrix.
pub fn chart_var_name(i: usize, j: usize, k: usize) -> String {
    format!("A{i}_{j}_{k}")
}

/// The chart coordinate ring for an `n`-node chain: one `(d−r) × r` matrix
/// of variables per node, then `s` (weight two) last.
pub fn chart_ring(d: usize, r: usize, n: usize, field: FieldSpec) -> Result<Ring> {
    if r == 0 || r >= d {
        return Err(Error::InvalidChart(format!(
            "need 0 < r < d, got d={d}, r={r}"
        )));
    }
    if n < 2 {
        return Err(Error::InvalidChart(format!("need at least 2 nodes, got {n}")));
    }
    let mut names = Vec::with_capacity(n * (d - r) * r + 1);
    let mut weights = Vec::with_capacity(names.capacity());
    for i in 1..=n {
        for j in 1..=(d - r) {
            for k in 1..=r {
                names.push(chart_var_name(i, j, k));
                weights.push(1);
            }
        }
    }
    names.push("s".into());
    weights.push(2);
    VarTable::with_weights(names, weights, field)
}

/// The `(d−r) × r` matrix of node-`i` variables inside `ring`.
fn node_matrix(ring: &Ring, d: usize, r: usize, i: usize) -> Result<PolyMatrix> {
    let mut m = PolyMatrix::zero(ring, d - r, r);
    for j in 1..=(d - r) {
        for k in 1..=r {
            m.set(j - 1, k - 1, Polynomial::var_by_name(ring, &chart_var_name(i, j, k))?);
        }
    }
    Ok(m)
}

/// Containment equations for one adjacency, given the two maps (already in
/// the chart ring) and the two nodes' variable matrices. Order: the
/// forward-map equations row-major, then the backward-map equations.
fn adjacency_gens(
    ring: &Ring,
    r: usize,
    f: &PolyMatrix,
    g: &PolyMatrix,
    v_left: &PolyMatrix,
    v_right: &PolyMatrix,
) -> Vec<Polynomial> {
    let d = f.rows();
    let stack = |v: &PolyMatrix| {
        PolyMatrix::from_fn(ring, d, r, |i, j| {
            if i < r {
                if i == j {
                    Polynomial::one(ring)
                } else {
                    Polynomial::zero(ring)
                }
            } else {
                v.get(i - r, j).clone()
            }
        })
    };
    let split = |m: &PolyMatrix| {
        let top = m.submatrix(&(0..r).collect::<Vec<_>>(), &(0..r).collect::<Vec<_>>());
        let bot = m.submatrix(&(r..d).collect::<Vec<_>>(), &(0..r).collect::<Vec<_>>());
        (top, bot)
    };
    let mut gens = Vec::with_capacity(2 * (d - r) * r);
    let (top, bot) = split(&f.mul(&stack(v_left)));
    gens.extend(v_right.mul(&top).sub(&bot).entries().cloned());
    let (top, bot) = split(&g.mul(&stack(v_right)));
    gens.extend(v_left.mul(&top).sub(&bot).entries().cloned());
    gens
}

/// A constructed chart: the defining ideal plus, when one is known, the
/// solved-variable schedule exhibiting the local product structure.
#[derive(Clone, Debug)]
pub struct ChartIdeal {
    pub d: usize,
    pub r: usize,
    pub n: usize,
    /// The spec, when this is a standard two-node chart.
    pub spec: Option<ChartSpec>,
    pub ideal: Ideal,
    pub schedule: Vec<(String, Polynomial)>,
}

impl ChartIdeal {
    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }
}

/// Check `f·g = g·f = s·Id` for one pair over its own ring.
fn check_linked_pair(f: &PolyMatrix, g: &PolyMatrix, adjacency: usize) -> Result<()> {
    let ring = f.ring();
    let d = f.rows();
    if f.cols() != d || g.rows() != d || g.cols() != d {
        return Err(Error::NotLinkedPair(format!(
            "adjacency {adjacency}: maps must be square of equal size"
        )));
    }
    let s_idx = ring
        .index_of("s")
        .ok_or_else(|| Error::NotLinkedPair("maps must live over k[s]".into()))?;
    let s_id = PolyMatrix::identity_scaled(ring, d, &Polynomial::var(ring, s_idx));
    if f.mul(g) != s_id || g.mul(f) != s_id {
        return Err(Error::NotLinkedPair(format!(
            "adjacency {adjacency}: the two maps do not compose to s times the identity"
        )));
    }
    Ok(())
}

/// Defining ideal of the chart of an `n`-node chain with the given maps
/// (`maps[i]` joins nodes `i+1` and `i+2`). No schedule is attached.
pub fn linked_chart_ideal(
    d: usize,
    r: usize,
    maps: &[(PolyMatrix, PolyMatrix)],
) -> Result<ChartIdeal> {
    if maps.is_empty() {
        return Err(Error::InvalidChart("a chain needs at least one adjacency".into()));
    }
    let n = maps.len() + 1;
    let field = maps[0].0.ring().field();
    for (idx, (f, g)) in maps.iter().enumerate() {
        if f.ring().field() != field || g.ring().field() != field {
            return Err(Error::FieldMismatch(
                "all maps must share one coefficient field".into(),
            ));
        }
        check_linked_pair(f, g, idx + 1)?;
    }
    let ring = chart_ring(d, r, n, field)?;
    let nodes: Vec<PolyMatrix> = (1..=n)
        .map(|i| node_matrix(&ring, d, r, i))
        .collect::<Result<_>>()?;
    let mut gens = Vec::with_capacity(2 * (n - 1) * (d - r) * r);
    for (idx, (f, g)) in maps.iter().enumerate() {
        let f = f.rename_by_name(&ring)?;
        let g = g.rename_by_name(&ring)?;
        gens.extend(adjacency_gens(&ring, r, &f, &g, &nodes[idx], &nodes[idx + 1]));
    }
    Ok(ChartIdeal {
        d,
        r,
        n,
        spec: None,
        ideal: Ideal::new(&ring, gens),
        schedule: Vec::new(),
    })
}

/// Block layout of one node's variable matrix under a spec: rows split into
/// three blocks of sizes `(ell, b5, b6)`, columns into `(d1, ell, d2)`.
struct BlockLayout {
    row_off: [usize; 3],
    row_len: [usize; 3],
    col_off: [usize; 3],
    col_len: [usize; 3],
}

impl BlockLayout {
    fn of(spec: &ChartSpec) -> BlockLayout {
        let ell = spec.ell();
        let sizes = spec.block_sizes();
        let row_len = [ell, sizes[4], sizes[5]];
        let col_len = [spec.d1, ell, spec.d2];
        BlockLayout {
            row_off: [0, row_len[0], row_len[0] + row_len[1]],
            row_len,
            col_off: [0, col_len[0], col_len[0] + col_len[1]],
            col_len,
        }
    }

    /// 1-based variable name for node `i`, row block `p`, col block `q`,
    /// inner position `(j, k)` (0-based).
    fn var(&self, i: usize, p: usize, q: usize, j: usize, k: usize) -> String {
        chart_var_name(i, self.row_off[p] + j + 1, self.col_off[q] + k + 1)
    }
}

/// The solved-variable schedule of a standard two-node chart. Each scheduled
/// entry is defined by one containment equation; the residual coordinates
/// are the two exchanged blocks (the commuting pair) and the free block.
fn standard_schedule(spec: &ChartSpec, ring: &Ring) -> Result<Vec<(String, Polynomial)>> {
    let b = BlockLayout::of(spec);
    let ell = spec.ell();
    let var = |name: &str| Polynomial::var_by_name(ring, name);
    let s = var("s")?;
    let mut schedule: Vec<(String, Polynomial)> = Vec::new();

    // Each step: (target node, target row block, target col block,
    // expression builder over inner indices)
    // 1: first node block (1,3) from the backward-map equations
    for j in 0..b.row_len[0] {
        for k in 0..b.col_len[2] {
            let mut e = Polynomial::zero(ring);
            for t in 0..ell {
                e = e.sub(&var(&b.var(1, 0, 1, j, t))?.mul(&var(&b.var(2, 0, 2, t, k))?));
            }
            schedule.push((b.var(1, 0, 2, j, k), e));
        }
    }
    // 2: first node block (2,3) from the forward-map equations
    for j in 0..b.row_len[1] {
        for k in 0..b.col_len[2] {
            let mut e = s.mul(&var(&b.var(2, 1, 2, j, k))?);
            for t in 0..ell {
                e = e.add(&var(&b.var(2, 1, 1, j, t))?.mul(&var(&b.var(1, 0, 2, t, k))?));
            }
            schedule.push((b.var(1, 1, 2, j, k), e));
        }
    }
    // 3: second node block (3,2) from the backward-map equations
    for j in 0..b.row_len[2] {
        for k in 0..b.col_len[1] {
            let mut e = Polynomial::zero(ring);
            for t in 0..ell {
                e = e.add(&var(&b.var(1, 2, 1, j, t))?.mul(&var(&b.var(2, 0, 1, t, k))?));
            }
            schedule.push((b.var(2, 2, 1, j, k), e));
        }
    }
    // 4: second node block (3,1) from the forward-map equations
    for j in 0..b.row_len[2] {
        for k in 0..b.col_len[0] {
            let mut e = s.mul(&var(&b.var(1, 2, 0, j, k))?);
            for t in 0..ell {
                e = e.sub(&var(&b.var(2, 2, 1, j, t))?.mul(&var(&b.var(1, 0, 0, t, k))?));
            }
            schedule.push((b.var(2, 2, 0, j, k), e));
        }
    }
    // 5: second node block (3,3) from the backward-map equations
    for j in 0..b.row_len[2] {
        for k in 0..b.col_len[2] {
            let mut e = var(&b.var(1, 2, 2, j, k))?;
            for t in 0..ell {
                e = e.add(&var(&b.var(1, 2, 1, j, t))?.mul(&var(&b.var(2, 0, 2, t, k))?));
            }
            schedule.push((b.var(2, 2, 2, j, k), e));
        }
    }
    // 6: second node block (1,1) from the forward-map equations
    for j in 0..b.row_len[0] {
        for k in 0..b.col_len[0] {
            let mut e = Polynomial::zero(ring);
            for t in 0..ell {
                e = e.sub(&var(&b.var(2, 0, 1, j, t))?.mul(&var(&b.var(1, 0, 0, t, k))?));
            }
            schedule.push((b.var(2, 0, 0, j, k), e));
        }
    }
    // 7: second node block (2,1) from the forward-map equations
    for j in 0..b.row_len[1] {
        for k in 0..b.col_len[0] {
            let mut e = var(&b.var(1, 1, 0, j, k))?;
            for t in 0..ell {
                e = e.sub(&var(&b.var(2, 1, 1, j, t))?.mul(&var(&b.var(1, 0, 0, t, k))?));
            }
            schedule.push((b.var(2, 1, 0, j, k), e));
        }
    }
    // 8: first node block (2,2) from the forward-map equations
    for j in 0..b.row_len[1] {
        for k in 0..b.col_len[1] {
            let mut e = Polynomial::zero(ring);
            for t in 0..ell {
                e = e.add(&var(&b.var(2, 1, 1, j, t))?.mul(&var(&b.var(1, 0, 1, t, k))?));
            }
            schedule.push((b.var(1, 1, 1, j, k), e));
        }
    }
    Ok(schedule)
}

/// Standard two-node chart of a spec, with its schedule attached.
pub fn standard_chart_ideal(spec: &ChartSpec, field: FieldSpec) -> Result<ChartIdeal> {
    let (f, g) = standard_fg_matrices(spec, field)?;
    let mut chart = linked_chart_ideal(spec.d, spec.r, &[(f, g)])?;
    chart.spec = Some(*spec);
    chart.schedule = standard_schedule(spec, chart.ideal.ring())?;
    Ok(chart)
}

/// Indices (0-based) of residual-ring variables forming the two exchanged
/// blocks of a standard chart: `(first node block, second node block)`,
/// each row-major `ell × ell`.
pub fn exchanged_block_names(spec: &ChartSpec) -> (Vec<String>, Vec<String>) {
    let b = BlockLayout::of(spec);
    let ell = spec.ell();
    let mut first = Vec::with_capacity(ell * ell);
    let mut second = Vec::with_capacity(ell * ell);
    for j in 0..ell {
        for k in 0..ell {
            first.push(b.var(1, 0, 1, j, k));
            second.push(b.var(2, 0, 1, j, k));
        }
    }
    (first, second)
}

/// An `n`-node chain whose first adjacency carries the canonical standard
/// maps and whose later adjacencies carry diagonal transport maps: the
/// forward map is `1` exactly on the coordinates the previous forward map
/// reaches at `s = 0`, and `s` elsewhere; the backward map is complementary.
pub fn canonical_chain_maps(
    d: usize,
    r: usize,
    n: usize,
    field: FieldSpec,
) -> Result<Vec<(PolyMatrix, PolyMatrix)>> {
    if n < 2 {
        return Err(Error::InvalidChart(format!("need at least 2 nodes, got {n}")));
    }
    let spec = ChartSpec::canonical(d, r)?;
    let mut maps = vec![standard_fg_matrices(&spec, field)?];
    let ring = maps[0].0.ring().clone();
    let s = Polynomial::var(&ring, 0);
    let zero = ring.field().zero();
    for _ in 2..n {
        let prev = &maps.last().expect("nonempty").0;
        // coordinates reached by the previous forward map at s = 0
        let reached: Vec<bool> = (0..d)
            .map(|row| {
                (0..d).any(|col| {
                    !prev
                        .get(row, col)
                        .evaluate(&[zero.clone()])
                        .expect("one coordinate")
                        .is_zero()
                })
            })
            .collect();
        let f = PolyMatrix::from_fn(&ring, d, d, |i, j| {
            if i != j {
                Polynomial::zero(&ring)
            } else if reached[i] {
                Polynomial::one(&ring)
            } else {
                s.clone()
            }
        });
        let g = PolyMatrix::from_fn(&ring, d, d, |i, j| {
            if i != j {
                Polynomial::zero(&ring)
            } else if reached[i] {
                s.clone()
            } else {
                Polynomial::one(&ring)
            }
        });
        maps.push((f, g));
    }
    Ok(maps)
}

/// Chart of the canonical `n`-node chain.
pub fn canonical_chain(d: usize, r: usize, n: usize, field: FieldSpec) -> Result<ChartIdeal> {
    linked_chart_ideal(d, r, &canonical_chain_maps(d, r, n, field)?)
}

/// Chain whose maps are invertible away from `s = 0` (`f = Id`, `g = s·Id`
/// at every adjacency), with the schedule identifying all nodes in turn.
/// These are the charts around points with `s ≠ 0`.
pub fn affine_chain(d: usize, r: usize, n: usize, field: FieldSpec) -> Result<ChartIdeal> {
    let spec = ChartSpec::node(d, r)?;
    let (f, g) = standard_fg_matrices(&spec, field)?;
    let maps: Vec<(PolyMatrix, PolyMatrix)> =
        (1..n).map(|_| (f.clone(), g.clone())).collect();
    let mut chart = linked_chart_ideal(d, r, &maps)?;
    let ring = chart.ideal.ring().clone();
    let mut schedule = Vec::new();
    for i in 2..=n {
        for j in 1..=(d - r) {
            for k in 1..=r {
                schedule.push((
                    chart_var_name(i, j, k),
                    Polynomial::var_by_name(&ring, &chart_var_name(i - 1, j, k))?,
                ));
            }
        }
    }
    chart.spec = Some(spec);
    chart.schedule = schedule;
    Ok(chart)
}

/// The commuting-pair ideal: entries of `M·N − s·Id` and `N·M − s·Id` for
/// two `ell × ell` matrices of variables, exact duplicates dropped. Ring:
/// `s` (weight two) first, then the `x` entries, then the `y` entries.
pub fn commuting_pair_ideal(ell: usize, field: FieldSpec) -> Result<Ideal> {
    if ell > 9 {
        return Err(Error::InvalidChart(format!(
            "exchanged block of size {ell} is beyond desk scale"
        )));
    }
    let mut names = vec!["s".to_string()];
    let mut weights = vec![2u64];
    for base in ["x", "y"] {
        for i in 1..=ell {
            for j in 1..=ell {
                names.push(format!("{base}{i}{j}"));
                weights.push(1);
            }
        }
    }
    let ring = VarTable::with_weights(names, weights, field)?;
    let s = Polynomial::var(&ring, 0);
    let var_matrix = |base: &str| {
        PolyMatrix::from_fn(&ring, ell, ell, |i, j| {
            Polynomial::var_by_name(&ring, &format!("{base}{}{}", i + 1, j + 1))
                .expect("commuting ring variable")
        })
    };
    let m = var_matrix("x");
    let n = var_matrix("y");
    let s_id = PolyMatrix::identity_scaled(&ring, ell, &s);
    let mut gens: Vec<Polynomial> = Vec::new();
    for e in m.mul(&n).sub(&s_id).entries().chain(n.mul(&m).sub(&s_id).entries()) {
        if !gens.contains(e) {
            gens.push(e.clone());
        }
    }
    Ok(Ideal::new(&ring, gens))
}

/// Outcome of one linkage condition: pass, or a textual witness of failure.
#[derive(Clone, Debug)]
pub struct ConditionCheck {
    pub passed: bool,
    pub witness: Option<String>,
}

impl ConditionCheck {
    fn pass() -> ConditionCheck {
        ConditionCheck {
            passed: true,
            witness: None,
        }
    }

    fn fail(witness: String) -> ConditionCheck {
        ConditionCheck {
            passed: false,
            witness: Some(witness),
        }
    }
}

/// The three conditions a family of map pairs must satisfy for the chain
/// construction to behave along degenerations.
#[derive(Clone, Debug)]
pub struct LinkageConditions {
    /// Both compositions equal `s·Id` at every adjacency.
    pub product: ConditionCheck,
    /// At no point (any `s`) do the ranks of the two maps of one adjacency
    /// sum below `d`.
    pub rank_sum: ConditionCheck,
    /// Consecutive forward maps: dropping rank in `f_i` forces the
    /// composition `f_{i+1}·f_i` to drop correspondingly (and dually for the
    /// backward maps). Vacuous for a single adjacency.
    pub kernel_image: ConditionCheck,
}

impl LinkageConditions {
    pub fn all_passed(&self) -> bool {
        self.product.passed && self.rank_sum.passed && self.kernel_image.passed
    }
}

pub fn check_lg_conditions(
    d: usize,
    maps: &[(PolyMatrix, PolyMatrix)],
    guards: &Guards,
) -> Result<LinkageConditions> {
    if maps.is_empty() {
        return Err(Error::InvalidChart("a chain needs at least one adjacency".into()));
    }
    let ring = maps[0].0.ring().clone();

    let product = 'product: {
        for (idx, (f, g)) in maps.iter().enumerate() {
            if let Err(e) = check_linked_pair(f, g, idx + 1) {
                break 'product ConditionCheck::fail(e.to_string());
            }
        }
        ConditionCheck::pass()
    };

    let rank_sum = 'rank: {
        for (idx, (f, g)) in maps.iter().enumerate() {
            for r1 in 0..d {
                let r2 = d - 1 - r1;
                // all larger minor sets lie in the ideals of these, so the
                // extremal pairs r1 + r2 = d − 1 cover every r1 + r2 < d
                let mut gens = f.minors(r1 + 1);
                gens.extend(g.minors(r2 + 1));
                let ideal = Ideal::new(&ring, gens);
                if !ideal.is_unit(guards)? {
                    break 'rank ConditionCheck::fail(format!(
                        "adjacency {}: rank of the forward map can drop to {} while \
                         the backward map drops to {} at a common point",
                        idx + 1,
                        r1,
                        r2
                    ));
                }
            }
        }
        ConditionCheck::pass()
    };

    let kernel_image = 'kernel: {
        for idx in 0..maps.len().saturating_sub(1) {
            let (f_i, g_i) = &maps[idx];
            let (f_next, g_next) = &maps[idx + 1];
            let forward = (f_i, f_next.mul(f_i), "forward");
            let backward = (g_i, g_i.mul(g_next), "backward");
            for (m, comp, side) in [&forward, &backward] {
                for r1 in 1..=d {
                    let small = m.minors(r1);
                    if small.is_empty() {
                        continue;
                    }
                    let mut gens = m.minors(r1 + 1);
                    gens.extend(comp.minors(r1));
                    let ideal = Ideal::new(&ring, gens);
                    for minor in &small {
                        if !radical_member(minor, &ideal, guards)? {
                            break 'kernel ConditionCheck::fail(format!(
                                "adjacencies {}/{}: a size-{} minor of the {} map \
                                 does not vanish on the locus where its rank and \
                                 the composed rank drop",
                                idx + 1,
                                idx + 2,
                                r1,
                                side
                            ));
                        }
                    }
                }
            }
        }
        ConditionCheck::pass()
    };

    Ok(LinkageConditions {
        product,
        rank_sum,
        kernel_image,
    })
}

/// The truncation decomposition of an `n`-node chain (`n ≥ 3`): the head
/// (all adjacencies but the last, on the shared coordinates), the tail (the
/// last adjacency, on its own copy of the joint node), the diagonal gluing
/// the two copies, and the schedule that reassembles the full chain.
#[derive(Clone, Debug)]
pub struct TruncationGlue {
    /// Combined ring: all node matrices, an extra copy of node `n−1`, and `s`.
    pub ring: Ring,
    /// The full chain ideal, in the combined ring.
    pub full: Ideal,
    /// Adjacencies `1..n−2`, in the combined ring.
    pub head: Ideal,
    /// Adjacency `n−1`, joining the extra copy to node `n`.
    pub tail: Ideal,
    /// Entry-wise identification of node `n−1` with its extra copy.
    pub diagonal: Vec<Polynomial>,
    /// Solves each copy variable as the matching original variable.
    pub schedule: Vec<(String, Polynomial)>,
    /// The chain ring (combined ring without the copy variables).
    pub chain_ring: Ring,
}

pub fn truncation_glue(
    d: usize,
    r: usize,
    maps: &[(PolyMatrix, PolyMatrix)],
) -> Result<TruncationGlue> {
    let n = maps.len() + 1;
    if n < 3 {
        return Err(Error::InvalidChart(
            "truncation needs at least three nodes".into(),
        ));
    }
    let field = maps[0].0.ring().field();
    let copy_name = |j: usize, k: usize| format!("B{}_{j}_{k}", n - 1);

    let mut names = Vec::new();
    let mut weights = Vec::new();
    for i in 1..=n {
        for j in 1..=(d - r) {
            for k in 1..=r {
                names.push(chart_var_name(i, j, k));
                weights.push(1);
            }
        }
    }
    for j in 1..=(d - r) {
        for k in 1..=r {
            names.push(copy_name(j, k));
            weights.push(1);
        }
    }
    names.push("s".into());
    weights.push(2);
    let ring = VarTable::with_weights(names, weights, field)?;

    let nodes: Vec<PolyMatrix> = (1..=n)
        .map(|i| node_matrix(&ring, d, r, i))
        .collect::<Result<_>>()?;
    let mut copy = PolyMatrix::zero(&ring, d - r, r);
    for j in 1..=(d - r) {
        for k in 1..=r {
            copy.set(j - 1, k - 1, Polynomial::var_by_name(&ring, &copy_name(j, k))?);
        }
    }

    let in_ring: Vec<(PolyMatrix, PolyMatrix)> = maps
        .iter()
        .map(|(f, g)| Ok((f.rename_by_name(&ring)?, g.rename_by_name(&ring)?)))
        .collect::<Result<_>>()?;

    let mut full_gens = Vec::new();
    for (idx, (f, g)) in in_ring.iter().enumerate() {
        full_gens.extend(adjacency_gens(&ring, r, f, g, &nodes[idx], &nodes[idx + 1]));
    }
    let mut head_gens = Vec::new();
    for (idx, (f, g)) in in_ring.iter().enumerate().take(n - 2) {
        head_gens.extend(adjacency_gens(&ring, r, f, g, &nodes[idx], &nodes[idx + 1]));
    }
    let (f_last, g_last) = &in_ring[n - 2];
    let tail_gens = adjacency_gens(&ring, r, f_last, g_last, &copy, &nodes[n - 1]);

    let mut diagonal = Vec::new();
    let mut schedule = Vec::new();
    for j in 1..=(d - r) {
        for k in 1..=r {
            let orig = Polynomial::var_by_name(&ring, &chart_var_name(n - 1, j, k))?;
            let cp = Polynomial::var_by_name(&ring, &copy_name(j, k))?;
            diagonal.push(orig.sub(&cp));
            schedule.push((copy_name(j, k), orig));
        }
    }

    let chain_ring = chart_ring(d, r, n, field)?;
    Ok(TruncationGlue {
        full: Ideal::new(&ring, full_gens),
        head: Ideal::new(&ring, head_gens),
        tail: Ideal::new(&ring, tail_gens),
        diagonal,
        schedule,
        ring,
        chain_ring,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal_ops::substitute_solved;

    fn fmt_matrix(m: &PolyMatrix) -> Vec<String> {
        let mut rows = Vec::new();
        for i in 0..m.rows() {
            let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
            rows.push(row.join(","));
        }
        rows
    }

    #[test]
    fn spec_validation_and_counts() {
        assert!(ChartSpec::new(2, 1, 0, 0, 1).is_ok());
        // block sizes must be nonnegative
        assert!(ChartSpec::new(3, 2, 0, 0, 1).is_err());
        assert!(ChartSpec::new(2, 1, 1, 1, 0).is_err());
        assert!(ChartSpec::new(2, 2, 0, 0, 0).is_err());
        let by_d = |d: usize| {
            enumerate_specs(d)
                .into_iter()
                .filter(|s| s.d == d)
                .count()
        };
        assert_eq!(by_d(2), 5);
        assert_eq!(by_d(3), 16);
        assert_eq!(by_d(4), 36);
        assert_eq!(enumerate_specs(4).len(), 57);
    }

    #[test]
    fn canonical_and_node_specs() {
        let c21 = ChartSpec::canonical(2, 1).unwrap();
        assert_eq!((c21.d1, c21.d2, c21.c), (0, 0, 1));
        assert_eq!(c21.ell(), 1);
        let c32 = ChartSpec::canonical(3, 2).unwrap();
        assert_eq!((c32.d1, c32.d2, c32.c), (0, 1, 2));
        assert_eq!(c32.ell(), 1);
        let c42 = ChartSpec::canonical(4, 2).unwrap();
        assert_eq!(c42.ell(), 2);
        let node = ChartSpec::node(3, 1).unwrap();
        assert_eq!(node.ell(), 0);
        assert_eq!(node.free_count(), 2);
    }

    #[test]
    fn standard_matrices_match_hand_computations() {
        let q = FieldSpec::Rat;
        let (f, g) =
            standard_fg_matrices(&ChartSpec::new(2, 1, 0, 0, 1).unwrap(), q).unwrap();
        assert_eq!(fmt_matrix(&f), vec!["0,1", "s,0"]);
        assert_eq!(fmt_matrix(&g), vec!["0,1", "s,0"]);

        let (f, g) =
            standard_fg_matrices(&ChartSpec::new(3, 1, 0, 0, 1).unwrap(), q).unwrap();
        assert_eq!(fmt_matrix(&f), vec!["0,1,0", "s,0,0", "0,0,1"]);
        assert_eq!(fmt_matrix(&g), vec!["0,1,0", "s,0,0", "0,0,s"]);

        let (f, g) =
            standard_fg_matrices(&ChartSpec::new(3, 2, 0, 1, 2).unwrap(), q).unwrap();
        assert_eq!(fmt_matrix(&f), vec!["0,0,1", "0,s,0", "s,0,0"]);
        assert_eq!(fmt_matrix(&g), vec!["0,0,1", "0,1,0", "s,0,0"]);

        let (f, g) = standard_fg_matrices(&ChartSpec::node(3, 1).unwrap(), q).unwrap();
        assert_eq!(fmt_matrix(&f), vec!["1,0,0", "0,1,0", "0,0,1"]);
        assert_eq!(fmt_matrix(&g), vec!["s,0,0", "0,s,0", "0,0,s"]);
    }

    #[test]
    fn every_standard_pair_composes_to_s() {
        for spec in enumerate_specs(4) {
            let (f, g) = standard_fg_matrices(&spec, FieldSpec::Rat).unwrap();
            check_linked_pair(&f, &g, 1)
                .unwrap_or_else(|e| panic!("{}: {e}", spec.label()));
        }
    }

    #[test]
    fn chart_generators_of_small_references() {
        let chart = standard_chart_ideal(
            &ChartSpec::new(2, 1, 0, 0, 1).unwrap(),
            FieldSpec::Rat,
        )
        .unwrap();
        let texts: Vec<String> =
            chart.ideal.gens().iter().map(|p| p.to_string()).collect();
        assert_eq!(texts, vec!["A1_1_1*A2_1_1 - s", "A1_1_1*A2_1_1 - s"]);
        assert!(chart.schedule.is_empty());

        let chart = standard_chart_ideal(
            &ChartSpec::new(3, 1, 0, 0, 1).unwrap(),
            FieldSpec::Rat,
        )
        .unwrap();
        let texts: Vec<String> =
            chart.ideal.gens().iter().map(|p| p.to_string()).collect();
        assert_eq!(
            texts,
            vec![
                "A1_1_1*A2_1_1 - s",
                "A1_1_1*A2_2_1 - A1_2_1",
                "A1_1_1*A2_1_1 - s",
                "A1_2_1*A2_1_1 - A2_2_1*s",
            ]
        );
        assert_eq!(chart.schedule.len(), 1);
        assert_eq!(chart.schedule[0].0, "A1_2_1");
        assert_eq!(chart.schedule[0].1.to_string(), "A1_1_1*A2_2_1");
    }

    #[test]
    fn schedule_reduces_to_the_commuting_pair() {
        for (d, r) in [(2usize, 1usize), (3, 1), (3, 2)] {
            let spec = ChartSpec::canonical(d, r).unwrap();
            let chart = standard_chart_ideal(&spec, FieldSpec::Rat).unwrap();
            let residual = substitute_solved(&chart.ideal, &chart.schedule)
                .unwrap_or_else(|e| panic!("{}: {e}", spec.label()));
            // residual ring keeps the free block, the two exchanged blocks, and s
            assert_eq!(
                residual.ring().arity(),
                spec.free_count() + 2 * spec.ell() * spec.ell() + 1,
                "{}",
                spec.label()
            );
        }
    }

    #[test]
    fn commuting_pair_shapes() {
        let i0 = commuting_pair_ideal(0, FieldSpec::Rat).unwrap();
        assert_eq!(i0.ring().arity(), 1);
        assert!(i0.gens().is_empty());

        let i1 = commuting_pair_ideal(1, FieldSpec::Rat).unwrap();
        assert_eq!(i1.ring().names(), &["s", "x11", "y11"]);
        let texts: Vec<String> = i1.gens().iter().map(|p| p.to_string()).collect();
        assert_eq!(texts, vec!["x11*y11 - s"]);

        let i2 = commuting_pair_ideal(2, FieldSpec::Rat).unwrap();
        assert_eq!(i2.ring().arity(), 9);
        assert_eq!(i2.gens().len(), 8);
        assert!(i2.gens().iter().all(|g| g.num_terms() <= 3));
    }

    #[test]
    fn canonical_chain_maps_use_diagonal_transport() {
        let maps = canonical_chain_maps(2, 1, 3, FieldSpec::Rat).unwrap();
        assert_eq!(maps.len(), 2);
        assert_eq!(fmt_matrix(&maps[1].0), vec!["1,0", "0,s"]);
        assert_eq!(fmt_matrix(&maps[1].1), vec!["s,0", "0,1"]);

        let maps = canonical_chain_maps(3, 1, 3, FieldSpec::Rat).unwrap();
        assert_eq!(fmt_matrix(&maps[1].0), vec!["1,0,0", "0,s,0", "0,0,1"]);

        let chart = canonical_chain(2, 1, 3, FieldSpec::Rat).unwrap();
        let texts: Vec<String> =
            chart.ideal.gens().iter().map(|p| p.to_string()).collect();
        assert_eq!(
            texts,
            vec![
                "A1_1_1*A2_1_1 - s",
                "A1_1_1*A2_1_1 - s",
                "-A2_1_1*s + A3_1_1",
                "A2_1_1*s - A3_1_1",
            ]
        );
    }

    #[test]
    fn linkage_conditions_hold_for_canonical_chains() {
        let g = Guards::default();
        for (d, r) in [(2usize, 1usize), (3, 1), (3, 2)] {
            let maps = canonical_chain_maps(d, r, 3, FieldSpec::Rat).unwrap();
            let report = check_lg_conditions(d, &maps, &g).unwrap();
            assert!(report.all_passed(), "({d},{r}): {report:?}");
        }
    }

    #[test]
    fn repeating_the_exchange_map_breaks_the_kernel_condition() {
        let g = Guards::default();
        let spec = ChartSpec::canonical(2, 1).unwrap();
        let pair = standard_fg_matrices(&spec, FieldSpec::Rat).unwrap();
        let maps = vec![pair.clone(), pair];
        let report = check_lg_conditions(2, &maps, &g).unwrap();
        assert!(report.product.passed);
        assert!(report.rank_sum.passed);
        assert!(!report.kernel_image.passed, "{report:?}");
    }

    #[test]
    fn affine_chain_solves_away_entirely_at_nonzero_parameter() {
        use crate::ideal_ops::specialize;
        let chart = affine_chain(2, 1, 3, FieldSpec::Rat).unwrap();
        assert_eq!(chart.ideal.gens().len(), 4);
        let one = FieldSpec::Rat.one();
        let at_one = specialize(&chart.ideal, "s", &one).unwrap();
        let residual = substitute_solved(&at_one, &chart.schedule).unwrap();
        assert!(residual.gens().is_empty());
        assert_eq!(residual.ring().names(), &["A1_1_1"]);
    }

    #[test]
    fn truncation_pieces_have_the_expected_shape() {
        let maps = canonical_chain_maps(2, 1, 3, FieldSpec::Rat).unwrap();
        let glue = truncation_glue(2, 1, &maps).unwrap();
        assert_eq!(
            glue.ring.names(),
            &["A1_1_1", "A2_1_1", "A3_1_1", "B2_1_1", "s"]
        );
        assert_eq!(glue.diagonal.len(), 1);
        assert_eq!(glue.diagonal[0].to_string(), "A2_1_1 - B2_1_1");
        assert_eq!(glue.head.gens().len(), 2);
        assert_eq!(glue.tail.gens().len(), 2);
        assert_eq!(glue.full.gens().len(), 4);
        // tail equations live on the copy and the last node only
        for g in glue.tail.gens() {
            assert!(!g.uses_var(glue.ring.index_of("A1_1_1").unwrap()));
            assert!(!g.uses_var(glue.ring.index_of("A2_1_1").unwrap()));
        }
    }
}
