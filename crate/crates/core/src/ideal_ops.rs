//! Derived ideal operations built on Groebner bases: elimination, quotients,
//! saturation, radical membership, Krull dimension, Hilbert functions,
//! specialization, solved-variable substitution, and Jacobian ranks.

use crate::error::{Error, GuardKind, Result};
use crate::field::Coeff;
use crate::groebner::{divide_exact, Guards, Ideal};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

/// Remove the variables at `drop` indices: returns the intersection of the
/// ideal with the subring in the remaining variables (elimination theorem,
/// using a block order in which the dropped variables dominate).
pub fn eliminate(ideal: &Ideal, drop: &[usize], guards: &Guards) -> Result<Ideal> {
    let ring = ideal.ring();
    let ord = MonomialOrder::elimination(ring.arity(), drop, MonomialOrder::Grevlex);
    let gb = ideal.groebner_basis(&ord, guards)?;
    let (small, keep_map) = ring.without(drop)?;
    let mut gens = Vec::new();
    for g in gb.iter() {
        if drop.iter().any(|&i| g.uses_var(i)) {
            continue;
        }
        gens.push(g.rename_into(&small, &keep_map)?);
    }
    Ok(Ideal::new(&small, gens))
}

/// Intersection `I ∩ J` via the one-tag trick:
/// `I ∩ J = (t·I + (1−t)·J) ∩ k[x]`.
pub fn intersect(a: &Ideal, b: &Ideal, guards: &Guards) -> Result<Ideal> {
    let ring = a.ring();
    if b.ring() != ring {
        return Err(Error::RingMismatch("intersection across rings".into()));
    }
    let tname = ring.fresh_name("t");
    let big = ring.extended(&[&tname])?;
    let t_idx = big.arity() - 1;
    let t = Polynomial::var(&big, t_idx);
    let one_minus_t = Polynomial::one(&big).sub(&t);
    let mut gens = Vec::new();
    for g in a.gens() {
        gens.push(t.mul(&g.rename_by_name(&big)?));
    }
    for g in b.gens() {
        gens.push(one_minus_t.mul(&g.rename_by_name(&big)?));
    }
    let tagged = Ideal::new(&big, gens);
    let eliminated = eliminate(&tagged, &[t_idx], guards)?;
    // eliminate() built a ring with the same remaining names; move back
    let gens_back: Result<Vec<Polynomial>> = eliminated
        .gens()
        .iter()
        .map(|g| g.rename_by_name(ring))
        .collect();
    Ok(Ideal::new(ring, gens_back?))
}

/// Ideal quotient `(I : f)`, computed as `(1/f) · (I ∩ (f))`.
pub fn ideal_quotient(ideal: &Ideal, f: &Polynomial, guards: &Guards) -> Result<Ideal> {
    let ring = ideal.ring();
    assert!(f.ring() == ring, "quotient divisor in a different ring");
    if f.is_zero() {
        // (I : 0) is the whole ring
        return Ok(Ideal::new(ring, vec![Polynomial::one(ring)]));
    }
    let inter = intersect(ideal, &Ideal::new(ring, vec![f.clone()]), guards)?;
    let mut gens = Vec::new();
    for g in inter.gens() {
        let q = divide_exact(g, f, &MonomialOrder::Grevlex).ok_or_else(|| {
            Error::Internal(format!(
                "element {g} of the intersection is not divisible by {f}"
            ))
        })?;
        gens.push(q);
    }
    Ok(Ideal::new(ring, gens))
}

/// Saturation `(I : f^∞)` via the inverted-tag trick:
/// `(I : f^∞) = (I + (1 − t·f)) ∩ k[x]`.
pub fn saturate(ideal: &Ideal, f: &Polynomial, guards: &Guards) -> Result<Ideal> {
    let ring = ideal.ring();
    assert!(f.ring() == ring, "saturation divisor in a different ring");
    if f.is_zero() {
        return Ok(Ideal::new(ring, vec![Polynomial::one(ring)]));
    }
    let tname = ring.fresh_name("t");
    let big = ring.extended(&[&tname])?;
    let t_idx = big.arity() - 1;
    let t = Polynomial::var(&big, t_idx);
    let mut gens = Vec::new();
    for g in ideal.gens() {
        gens.push(g.rename_by_name(&big)?);
    }
    gens.push(Polynomial::one(&big).sub(&t.mul(&f.rename_by_name(&big)?)));
    let tagged = Ideal::new(&big, gens);
    let eliminated = eliminate(&tagged, &[t_idx], guards)?;
    let gens_back: Result<Vec<Polynomial>> = eliminated
        .gens()
        .iter()
        .map(|g| g.rename_by_name(ring))
        .collect();
    Ok(Ideal::new(ring, gens_back?))
}

/// Radical membership: `f ∈ √I` iff `I + (1 − t·f)` is the unit ideal.
pub fn radical_member(f: &Polynomial, ideal: &Ideal, guards: &Guards) -> Result<bool> {
    let ring = ideal.ring();
    assert!(f.ring() == ring, "radical membership across rings");
    if f.is_zero() {
        // 0 lies in every radical
        return Ok(true);
    }
    let tname = ring.fresh_name("t");
    let big = ring.extended(&[&tname])?;
    let t_idx = big.arity() - 1;
    let t = Polynomial::var(&big, t_idx);
    let mut gens = Vec::new();
    for g in ideal.gens() {
        gens.push(g.rename_by_name(&big)?);
    }
    gens.push(Polynomial::one(&big).sub(&t.mul(&f.rename_by_name(&big)?)));
    Ideal::new(&big, gens).is_unit(guards)
}

/// Krull dimension of the quotient ring, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionResult {
    pub dim: usize,
    /// A maximal set of variables independent modulo the ideal.
    pub independent_set: Vec<String>,
}

/// Krull dimension of `R/I`, computed combinatorially from the initial ideal:
/// the dimension equals the largest number of variables no initial-ideal
/// generator is supported inside.
pub fn krull_dimension(ideal: &Ideal, guards: &Guards) -> Result<DimensionResult> {
    let ring = ideal.ring();
    let n = ring.arity();
    if n > 24 {
        return Err(Error::Resource {
            guard: GuardKind::DimensionVars,
            detail: format!("{n} variables exceed the dimension search cap of 24"),
        });
    }
    if ideal.is_unit(guards)? {
        return Err(Error::EmptyScheme);
    }
    let lts = ideal.leading_terms(&MonomialOrder::Grevlex, guards)?;
    let minimal = minimal_monomials(lts);
    let mut supports: Vec<u64> = minimal.iter().map(|m| m.support_mask()).collect();
    supports.sort_unstable();
    supports.dedup();

    struct Search {
        supports: Vec<u64>,
        n: usize,
        best: usize,
        best_mask: u64,
        found: bool,
    }
    impl Search {
        fn go(&mut self, i: usize, mask: u64, count: usize) {
            if count + (self.n - i) <= self.best && self.found {
                return;
            }
            if i == self.n {
                if !self.found || count > self.best {
                    self.best = count;
                    self.best_mask = mask;
                    self.found = true;
                }
                return;
            }
            let with = mask | (1u64 << i);
            if !self.supports.iter().any(|s| s & !with == 0) {
                self.go(i + 1, with, count + 1);
            }
            self.go(i + 1, mask, count);
        }
    }
    let mut search = Search {
        supports,
        n,
        best: 0,
        best_mask: 0,
        found: false,
    };
    search.go(0, 0, 0);
    let independent_set = (0..n)
        .filter(|i| search.best_mask & (1u64 << i) != 0)
        .map(|i| ring.name(i).to_string())
        .collect();
    Ok(DimensionResult {
        dim: search.best,
        independent_set,
    })
}

/// Drop every monomial some other listed monomial properly divides.
pub fn minimal_monomials(mut mons: Vec<Monomial>) -> Vec<Monomial> {
    mons.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for m in mons {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Values of `t ↦ dim_k (R/I)_t` for weighted degrees `t = 0..=up_to`.
///
/// `I` must be presented by monomial generators (callers pass initial
/// ideals); counting uses inclusion–exclusion over minimal generators and an
/// exact weighted-composition table.
pub fn hilbert_function(ideal: &Ideal, up_to: u64, guards: &Guards) -> Result<Vec<u64>> {
    let _ = guards;
    let ring = ideal.ring();
    let mut mons = Vec::with_capacity(ideal.gens().len());
    for g in ideal.gens() {
        if g.num_terms() != 1 {
            return Err(Error::Internal(format!(
                "graded dimension counting requires monomial generators, got {g}"
            )));
        }
        let (m, _) = g.terms().next().expect("single term");
        mons.push(m.clone());
    }
    let minimal = minimal_monomials(mons);
    if minimal.len() > 24 {
        return Err(Error::Resource {
            guard: GuardKind::MaxBasis,
            detail: format!(
                "{} minimal generators exceed the counting cap of 24",
                minimal.len()
            ),
        });
    }

    // monomial_count[u]: number of monomials of weighted degree exactly u
    let cap = up_to as usize;
    let mut monomial_count = vec![0u128; cap + 1];
    monomial_count[0] = 1;
    for i in 0..ring.arity() {
        let w = ring.weight(i) as usize;
        for u in w..=cap {
            monomial_count[u] += monomial_count[u - w];
        }
    }

    let k = minimal.len();
    let mut values = vec![0i128; cap + 1];
    for mask in 0u32..(1u32 << k) {
        let mut lcm = Monomial::one(ring.arity());
        for (b, m) in minimal.iter().enumerate() {
            if mask & (1 << b) != 0 {
                lcm = lcm.lcm(m);
            }
        }
        let shift = lcm.weighted_degree(ring);
        if shift > up_to {
            continue;
        }
        let sign: i128 = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        for t in shift as usize..=cap {
            values[t] += sign * monomial_count[t - shift as usize] as i128;
        }
    }

    values
        .into_iter()
        .map(|v| {
            u64::try_from(v)
                .map_err(|_| Error::Internal("graded dimension out of range".into()))
        })
        .collect()
}

/// Set one variable to a constant and drop it from the ring.
pub fn specialize(ideal: &Ideal, var: &str, value: &Coeff) -> Result<Ideal> {
    let ring = ideal.ring();
    let idx = ring
        .index_of(var)
        .ok_or_else(|| Error::RingMismatch(format!("unknown variable `{var}`")))?;
    let constant = Polynomial::constant(ring, value.clone());
    let (small, keep_map) = ring.without(&[idx])?;
    let mut gens = Vec::new();
    for g in ideal.gens() {
        let h = g.substitute_var(idx, &constant);
        if !h.is_zero() {
            gens.push(h.rename_into(&small, &keep_map)?);
        }
    }
    Ok(Ideal::new(&small, gens))
}

/// Eliminate solved variables one at a time along an explicit schedule.
///
/// Each step `(v, e)` asserts that, after the earlier steps have been
/// applied, the current generators contain a nonzero scalar multiple of
/// `v − e'` (where `e'` is `e` with earlier solutions substituted). That
/// generator is used to solve for `v`, and the substitution `v := e'` is
/// applied everywhere. Expressions are matched to the ideal's ring by
/// variable name; a step's expression may mention variables solved
/// *earlier*, never itself nor variables scheduled *later*. The result lives
/// in the ring without the scheduled variables.
pub fn substitute_solved(
    ideal: &Ideal,
    schedule: &[(String, Polynomial)],
) -> Result<Ideal> {
    let ring = ideal.ring();
    let mut indices = Vec::with_capacity(schedule.len());
    for (name, _) in schedule {
        let idx = ring.index_of(name).ok_or_else(|| Error::Schedule {
            variable: name.clone(),
            msg: "not a variable of the ring".into(),
        })?;
        if indices.contains(&idx) {
            return Err(Error::Schedule {
                variable: name.clone(),
                msg: "scheduled more than once".into(),
            });
        }
        indices.push(idx);
    }

    let mut current: Vec<Polynomial> = ideal.gens().to_vec();
    let mut solved: Vec<(usize, Polynomial)> = Vec::new();
    for (step, (name, expr)) in schedule.iter().enumerate() {
        // expressions are matched to the ideal's ring by variable name, so a
        // schedule written for a larger ring still applies after specializing
        let expr = &expr.rename_by_name(ring).map_err(|e| Error::Schedule {
            variable: name.clone(),
            msg: format!("expression does not fit the ring: {e}"),
        })?;
        let idx = indices[step];
        if expr.uses_var(idx) {
            return Err(Error::Schedule {
                variable: name.clone(),
                msg: "expression mentions the variable it solves".into(),
            });
        }
        for later in &indices[step + 1..] {
            if expr.uses_var(*later) {
                return Err(Error::Schedule {
                    variable: name.clone(),
                    msg: format!(
                        "expression mentions `{}`, which is scheduled later",
                        ring.name(*later)
                    ),
                });
            }
        }
        let mut resolved = expr.clone();
        for (j, e) in &solved {
            resolved = resolved.substitute_var(*j, e);
        }
        let target = Polynomial::var(ring, idx).sub(&resolved);
        let defines = current
            .iter()
            .any(|g| g.scalar_multiple_of(&target).is_some());
        if !defines {
            return Err(Error::Schedule {
                variable: name.clone(),
                msg: format!(
                    "no current generator is a scalar multiple of {target}"
                ),
            });
        }
        current = current
            .iter()
            .map(|g| g.substitute_var(idx, &resolved))
            .filter(|g| !g.is_zero())
            .collect();
        solved.push((idx, resolved));
    }

    let (small, keep_map) = ring.without(&indices)?;
    let gens: Result<Vec<Polynomial>> = current
        .iter()
        .map(|g| g.rename_into(&small, &keep_map))
        .collect();
    Ok(Ideal::new(&small, gens?))
}

/// Rank of the Jacobian matrix of the generators at a point of the scheme.
/// The point must satisfy every generator exactly.
pub fn jacobian_rank_at_point(ideal: &Ideal, point: &[Coeff]) -> Result<usize> {
    let ring = ideal.ring();
    let field = ring.field();
    for g in ideal.gens() {
        let v = g.evaluate(point)?;
        if !v.is_zero() {
            return Err(Error::PointNotOnScheme {
                generator: g.to_string(),
                value: v.to_string(),
            });
        }
    }
    let rows: Vec<Vec<Coeff>> = ideal
        .gens()
        .iter()
        .map(|g| {
            (0..ring.arity())
                .map(|j| g.partial(j).evaluate(point))
                .collect::<Result<Vec<Coeff>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut m = rows;
    let nrows = m.len();
    let ncols = ring.arity();
    let mut rank = 0usize;
    for col in 0..ncols {
        let pivot = (rank..nrows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = field.div(&m[r][col], &m[rank][col])?;
            for c in col..ncols {
                let sub = field.mul(&factor, &m[rank][c]);
                m[r][c] = field.sub(&m[r][c], &sub);
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    Ok(rank)
}
