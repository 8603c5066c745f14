//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms are stored strictly descending under a fixed structural order (plain
//! grevlex), independent of whatever order an algorithm is currently using.
//! This makes equality, hashing, and printed output canonical. Computations
//! that need a different active order (Buchberger, elimination) re-sort terms
//! internally and convert back at the boundary.

use crate::error::{Error, Result};
use crate::field::{Coeff, FieldSpec};
use crate::monomial::{structural_cmp, Monomial, MonomialOrder};
use crate::ring::Ring;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    /// Nonzero terms, strictly descending under `structural_cmp`.
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::one(ring.arity()), c)],
        }
    }

    pub fn var(ring: &Ring, i: usize) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(i, ring.arity()), ring.field().one())],
        }
    }

    pub fn var_by_name(ring: &Ring, name: &str) -> Result<Polynomial> {
        let i = ring
            .index_of(name)
            .ok_or_else(|| Error::RingMismatch(format!("unknown variable `{name}`")))?;
        Ok(Polynomial::var(ring, i))
    }

    pub fn term(ring: &Ring, mono: Monomial, c: Coeff) -> Polynomial {
        debug_assert_eq!(mono.arity(), ring.arity());
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(mono, c)],
        }
    }

    /// Canonicalize an arbitrary term list: merge equal monomials, drop zeros, sort.
    pub fn from_terms(ring: &Ring, terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        let field = ring.field();
        let mut map: HashMap<Monomial, Coeff> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.arity(), ring.arity());
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = field.add(e.get(), &c);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !c.is_zero() {
                        e.insert(c);
                    }
                }
            }
        }
        let mut out: Vec<(Monomial, Coeff)> = map.into_iter().collect();
        out.sort_by(|a, b| structural_cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Iterate terms in canonical (structural) descending order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(
            self.ring == other.ring,
            "polynomials over different rings: [{}] vs [{}]",
            self.ring.names().join(","),
            other.ring.names().join(","),
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match structural_cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&self.terms[i].1, &other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let field = self.ring.field();
        let mut map: HashMap<Monomial, Coeff> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match map.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = field.add(e.get(), &c);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        if !c.is_zero() {
                            e.insert(c);
                        }
                    }
                }
            }
        }
        let mut out: Vec<(Monomial, Coeff)> = map.into_iter().collect();
        out.sort_by(|a, b| structural_cmp(&b.0, &a.0));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), field.mul(k, c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, mono: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        let mut terms: Vec<(Monomial, Coeff)> = self
            .terms
            .iter()
            .map(|(m, k)| (m.mul(mono), field.mul(k, c)))
            .collect();
        // multiplying by a fixed monomial preserves the structural order
        debug_assert!(terms.windows(2).all(|w| structural_cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        terms.sort_by(|a, b| structural_cmp(&b.0, &a.0));
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Plain total degree of the highest-degree term; error on the zero polynomial.
    pub fn degree(&self) -> Result<u64> {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Degree under the ring's weights; error on the zero polynomial.
    pub fn weighted_degree(&self) -> Result<u64> {
        self.terms
            .iter()
            .map(|(m, _)| m.weighted_degree(&self.ring))
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Leading term under the given active order; `None` for the zero polynomial.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        if matches!(ord, MonomialOrder::Grevlex) {
            return self.terms.first().map(|(m, c)| (m, c));
        }
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&self.ring, &a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    /// Divide by the leading coefficient under the given order.
    pub fn monic(&self, ord: &MonomialOrder) -> Polynomial {
        match self.leading_term(ord) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self
                    .ring
                    .field()
                    .inv(c)
                    .expect("leading coefficient of nonzero polynomial");
                self.scale(&inv)
            }
        }
    }

    /// `Some(c)` iff `self == c * other` with `c` a nonzero constant.
    pub fn scalar_multiple_of(&self, other: &Polynomial) -> Option<Coeff> {
        self.assert_same_ring(other);
        if self.is_zero() || other.is_zero() {
            return None;
        }
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let field = self.ring.field();
        let ratio = field
            .div(&self.terms[0].1, &other.terms[0].1)
            .expect("nonzero leading coefficients");
        for ((ma, ca), (mb, cb)) in self.terms.iter().zip(&other.terms) {
            if ma != mb {
                return None;
            }
            if *ca != field.mul(&ratio, cb) {
                return None;
            }
        }
        Some(ratio)
    }

    /// Indices of variables that occur in some term.
    pub fn vars_used(&self) -> Vec<usize> {
        let n = self.ring.arity();
        let mut used = vec![false; n];
        for (m, _) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter(|(_, &u)| u)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.0[i] > 0)
    }

    /// Evaluate at a full point (one coefficient per variable).
    pub fn evaluate(&self, point: &[Coeff]) -> Result<Coeff> {
        if point.len() != self.ring.arity() {
            return Err(Error::RingMismatch(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.arity()
            )));
        }
        let field = self.ring.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    v = field.mul(&v, &field.pow(&point[i], e as u64));
                }
            }
            acc = field.add(&acc, &v);
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Polynomial {
        let field = self.ring.field();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            terms.push((m2, field.mul(c, &field.from_i64(e as i64))));
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Replace variable `i` by `replacement` (same ring); the result still lives
    /// in the same ring but no longer uses variable `i`.
    pub fn substitute_var(&self, i: usize, replacement: &Polynomial) -> Polynomial {
        self.assert_same_ring(replacement);
        let field = self.ring.field();
        let mut powers: Vec<Polynomial> = vec![Polynomial::one(&self.ring)];
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(replacement);
                powers.push(next);
            }
            let mut m2 = m.clone();
            m2.0[i] = 0;
            let base = Polynomial::term(&self.ring, m2, c.clone());
            let _ = field; // arithmetic happens inside mul/add
            acc = acc.add(&base.mul(&powers[e]));
        }
        acc
    }

    /// Move the polynomial into another ring via an index map
    /// (`map[old] = Some(new)`); fails if a used variable has no image.
    pub fn rename_into(&self, target: &Ring, map: &[Option<usize>]) -> Result<Polynomial> {
        if map.len() != self.ring.arity() {
            return Err(Error::RingMismatch("rename map has wrong length".into()));
        }
        if target.field() != self.ring.field() {
            return Err(Error::FieldMismatch(
                "renaming cannot change the coefficient field".into(),
            ));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.arity()];
            for (i, &exp) in m.0.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e[j] += exp,
                    None => {
                        return Err(Error::RingMismatch(format!(
                            "variable `{}` has no image in the target ring",
                            self.ring.name(i)
                        )))
                    }
                }
            }
            terms.push((Monomial(e), c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Move into a ring that shares variable *names* with this one.
    pub fn rename_by_name(&self, target: &Ring) -> Result<Polynomial> {
        let map: Vec<Option<usize>> = self
            .ring
            .names()
            .iter()
            .map(|n| target.index_of(n))
            .collect();
        self.rename_into(target, &map)
    }

    /// Apply a variable permutation in place: variable `perm[i]` of `self`
    /// becomes variable `i` of the result (same ring).
    pub fn permute_vars(&self, perm: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.permuted(perm), c.clone()))
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Convert exact rational coefficients into another field (used for running
    /// the same construction over rat and fp). Fails if a denominator dies mod p.
    pub fn convert_field(&self, target: &Ring) -> Result<Polynomial> {
        if target.names() != self.ring.names() {
            return Err(Error::RingMismatch(
                "field conversion requires identical variables".into(),
            ));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let v = match (c, target.field()) {
                (Coeff::Rat(r), f) => f.reduce_rat(r).ok_or_else(|| {
                    Error::FieldMismatch(format!("denominator of {r} vanishes in {f}"))
                })?,
                (Coeff::Fp(_), FieldSpec::Fp(_)) if self.ring.field() == target.field() => {
                    c.clone()
                }
                _ => {
                    return Err(Error::FieldMismatch(
                        "unsupported coefficient conversion".into(),
                    ))
                }
            };
            if !v.is_zero() {
                terms.push((m.clone(), v));
            }
        }
        Ok(Polynomial::from_terms(target, terms))
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form, e.g. `3/2*A1_1_2*A2_1_2 - s` or `x^2*y - 4*z`.
    /// Prime-field coefficients print as balanced representatives.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.ring.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.display_negative(&field);
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.display_magnitude(&field);
            if m.is_one() {
                f.write_str(&mag)?;
            } else {
                if mag != "1" {
                    write!(f, "{mag}*")?;
                }
                let mut first = true;
                for (i, &e) in m.0.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        f.write_str("*")?;
                    }
                    first = false;
                    if e == 1 {
                        f.write_str(self.ring.name(i))?;
                    } else {
                        write!(f, "{}^{}", self.ring.name(i), e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VarTable;

    fn ring(names: &[&str]) -> Ring {
        VarTable::new(
            names.iter().map(|s| s.to_string()).collect(),
            FieldSpec::Rat,
        )
        .unwrap()
    }

    fn fp_ring(names: &[&str], p: u64) -> Ring {
        VarTable::new(
            names.iter().map(|s| s.to_string()).collect(),
            FieldSpec::fp(p).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn add_cancels_exactly() {
        let r = ring(&["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = x.add(&y);
        let q = x.sub(&y);
        assert_eq!(p.add(&q), x.scale(&r.field().from_i64(2)));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn mul_matches_hand_expansion() {
        let r = ring(&["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        // (x + y)^2 = x^2 + 2xy + y^2
        let p = x.add(&y).pow(2);
        assert_eq!(p.to_string(), "x^2 + 2*x*y + y^2");
    }

    #[test]
    fn display_canonical_examples() {
        let r = ring(&["x", "y", "z"]);
        let x = Polynomial::var(&r, 0);
        let z = Polynomial::var(&r, 2);
        let half = r
            .field()
            .from_ratio(&num::BigInt::from(3), &num::BigInt::from(2))
            .unwrap();
        let p = x.mul(&x).scale(&half).sub(&z);
        assert_eq!(p.to_string(), "3/2*x^2 - z");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        assert_eq!(Polynomial::one(&r).neg().to_string(), "-1");
    }

    #[test]
    fn fp_display_uses_balanced_residues() {
        let r = fp_ring(&["x", "y"], 7);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        // -1 = 6 mod 7 prints as a subtraction; 5 = -2 prints as -2
        assert_eq!(x.sub(&y).to_string(), "x - y");
        assert_eq!(x.scale(&FieldSpec::Fp(7).from_i64(5)).to_string(), "-2*x");
        assert_eq!(x.scale(&FieldSpec::Fp(7).from_i64(3)).to_string(), "3*x");
    }

    #[test]
    fn weighted_degree_and_zero_error() {
        let r = VarTable::with_weights(
            vec!["x".into(), "y".into(), "s".into()],
            vec![1, 1, 2],
            FieldSpec::Rat,
        )
        .unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let s = Polynomial::var(&r, 2);
        let p = x.mul(&y).sub(&s);
        assert_eq!(p.weighted_degree().unwrap(), 2);
        assert!(matches!(
            Polynomial::zero(&r).weighted_degree(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn leading_term_depends_on_order() {
        let r = ring(&["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        // p = x + y^2: lex leading term x, grevlex leading term y^2
        let p = x.add(&y.pow(2));
        let (mlex, _) = p.leading_term(&MonomialOrder::Lex).unwrap();
        assert_eq!(mlex.0, vec![1, 0]);
        let (mgrev, _) = p.leading_term(&MonomialOrder::Grevlex).unwrap();
        assert_eq!(mgrev.0, vec![0, 2]);
    }

    #[test]
    fn substitution_and_partial() {
        let r = ring(&["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        // d/dx (x^2 y + y) = 2xy
        let p = x.pow(2).mul(&y).add(&y);
        assert_eq!(p.partial(0).to_string(), "2*x*y");
        // substitute y := x^2 into x^2*y + y -> x^4 + x^2
        let q = p.substitute_var(1, &x.pow(2));
        assert_eq!(q.to_string(), "x^4 + x^2");
    }

    #[test]
    fn evaluate_point() {
        let r = ring(&["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = x.mul(&y).sub(&Polynomial::one(&r));
        let f = r.field();
        let v = p.evaluate(&[f.from_i64(3), f.from_i64(2)]).unwrap();
        assert_eq!(v, f.from_i64(5));
    }

    #[test]
    fn scalar_multiple_detection() {
        let r = ring(&["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = x.add(&y);
        let q = p.scale(&r.field().from_i64(-3));
        assert_eq!(q.scalar_multiple_of(&p), Some(r.field().from_i64(-3)));
        assert_eq!(x.scalar_multiple_of(&p), None);
    }

    #[test]
    fn rat_fp_structure_consistency() {
        // (x + 2y)*(x - y) expanded over rat, then reduced mod p, matches the
        // same product computed directly over fp.
        let rq = ring(&["x", "y"]);
        let rp = fp_ring(&["x", "y"], 32003);
        let xq = Polynomial::var(&rq, 0);
        let yq = Polynomial::var(&rq, 1);
        let f = rq.field();
        let prod_q = xq.add(&yq.scale(&f.from_i64(2))).mul(&xq.sub(&yq));
        let reduced = prod_q.convert_field(&rp).unwrap();

        let xp = Polynomial::var(&rp, 0);
        let yp = Polynomial::var(&rp, 1);
        let fpf = rp.field();
        let prod_p = xp.add(&yp.scale(&fpf.from_i64(2))).mul(&xp.sub(&yp));
        assert_eq!(reduced, prod_p);
    }
}
