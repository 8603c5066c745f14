//! Monomials as dense exponent vectors, plus the monomial-order menu.
//!
//! All four order families are total, multiplicative and well-founded:
//! `lex`, `grevlex` (degree then reverse lexicographic), `weighted_grevlex`
//! (table weights for the degree step), and `block` elimination orders that
//! compare a dominant variable block first.

use crate::ring::VarTable;
use std::cmp::Ordering;

/// Dense exponent vector; the ambient ring fixes the arity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(arity: usize) -> Monomial {
        Monomial(vec![0; arity])
    }

    pub fn var(i: usize, arity: usize) -> Monomial {
        let mut e = vec![0; arity];
        e[i] = 1;
        Monomial(e)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Plain total degree.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Degree under the ring's weights.
    pub fn weighted_degree(&self, table: &VarTable) -> u64 {
        self.0
            .iter()
            .zip(table.weights())
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Exact division; `None` when some exponent would go negative.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime_with(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// All exponents at most 1.
    pub fn squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Bitmask of variables with positive exponent (arity must be <= 64).
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                m |= 1u64 << i;
            }
        }
        m
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Apply a variable permutation: entry `i` of the result is the exponent of
    /// variable `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        Monomial(perm.iter().map(|&p| self.0[p]).collect())
    }
}

/// Monomial order menu.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum MonomialOrder {
    /// Pure lexicographic in table order.
    Lex,
    /// Graded (plain degree) reverse lexicographic.
    Grevlex,
    /// Graded reverse lexicographic with the ring's weights as the grading.
    WeightedGrevlex,
    /// Elimination order: compare the dominant block (marked variables) under
    /// grevlex first, then the rest under the inner order. Any monomial touching
    /// the dominant block beats any monomial that does not.
    Block {
        elim: Vec<bool>,
        inner: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Block order eliminating exactly the given variable indices.
    pub fn elimination(arity: usize, drop: &[usize], inner: MonomialOrder) -> MonomialOrder {
        let mut elim = vec![false; arity];
        for &i in drop {
            elim[i] = true;
        }
        MonomialOrder::Block {
            elim,
            inner: Box::new(inner),
        }
    }

    /// Total order on monomials of a fixed ring.
    pub fn cmp(&self, table: &VarTable, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match self {
            MonomialOrder::Lex => lex_cmp(&a.0, &b.0),
            MonomialOrder::Grevlex => grevlex_cmp_plain(&a.0, &b.0),
            MonomialOrder::WeightedGrevlex => {
                let da = a.weighted_degree(table);
                let db = b.weighted_degree(table);
                da.cmp(&db).then_with(|| revlex_tail(&a.0, &b.0))
            }
            MonomialOrder::Block { elim, inner } => {
                let pa: Vec<u32> = project(&a.0, elim, true);
                let pb: Vec<u32> = project(&b.0, elim, true);
                let first = grevlex_cmp_plain(&pa, &pb);
                if first != Ordering::Equal {
                    return first;
                }
                let ra = Monomial(project(&a.0, elim, false));
                let rb = Monomial(project(&b.0, elim, false));
                inner.cmp(table, &ra, &rb)
            }
        }
    }

    /// Short stable name used in reports and cache keys.
    pub fn label(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::WeightedGrevlex => "wgrevlex".into(),
            MonomialOrder::Block { elim, inner } => {
                let idx: Vec<String> = elim
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e)
                    .map(|(i, _)| i.to_string())
                    .collect();
                format!("block[{}]>{}", idx.join(","), inner.label())
            }
        }
    }

    /// Parse a CLI order name (block orders are constructed programmatically only).
    pub fn parse(text: &str) -> Option<MonomialOrder> {
        match text {
            "lex" => Some(MonomialOrder::Lex),
            "grevlex" => Some(MonomialOrder::Grevlex),
            "wgrevlex" | "weighted_grevlex" => Some(MonomialOrder::WeightedGrevlex),
            _ => None,
        }
    }
}

fn project(exps: &[u32], mask: &[bool], keep_marked: bool) -> Vec<u32> {
    exps.iter()
        .zip(mask)
        .filter(|(_, &m)| m == keep_marked)
        .map(|(&e, _)| e)
        .collect()
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// Reverse-lexicographic tail comparison: the monomial whose *last* differing
/// exponent is *smaller* is the larger monomial.
fn revlex_tail(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn grevlex_cmp_plain(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| revlex_tail(a, b))
}

/// Structural comparison used for canonical term storage, independent of any
/// active computation order: plain grevlex.
pub fn structural_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    grevlex_cmp_plain(&a.0, &b.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::ring::{Ring, VarTable};

    fn ring3() -> Ring {
        VarTable::new(
            vec!["x".into(), "y".into(), "z".into()],
            FieldSpec::Rat,
        )
        .unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn lex_order_example() {
        // x > y^5 under lex
        let r = ring3();
        let x = m(&[1, 0, 0]);
        let y5 = m(&[0, 5, 0]);
        assert_eq!(MonomialOrder::Lex.cmp(&r, &x, &y5), Ordering::Greater);
    }

    #[test]
    fn grevlex_order_example() {
        // y^5 > x under grevlex (degree wins)
        let r = ring3();
        let x = m(&[1, 0, 0]);
        let y5 = m(&[0, 5, 0]);
        assert_eq!(MonomialOrder::Grevlex.cmp(&r, &x, &y5), Ordering::Less);
        // same degree: x*y > x*z > y*z, and x^2 > x*y under grevlex
        let xy = m(&[1, 1, 0]);
        let xz = m(&[1, 0, 1]);
        let yz = m(&[0, 1, 1]);
        let xx = m(&[2, 0, 0]);
        assert_eq!(MonomialOrder::Grevlex.cmp(&r, &xy, &xz), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&r, &xz, &yz), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&r, &xx, &xy), Ordering::Greater);
    }

    #[test]
    fn weighted_grevlex_with_heavy_s() {
        // ring k[x, y, s], weight(s) = 2: x*y and s have equal weighted degree,
        // and the tie-break makes x*y the larger (smaller last exponent).
        let r = VarTable::with_weights(
            vec!["x".into(), "y".into(), "s".into()],
            vec![1, 1, 2],
            FieldSpec::Rat,
        )
        .unwrap();
        let xy = m(&[1, 1, 0]);
        let s = m(&[0, 0, 1]);
        assert_eq!(
            MonomialOrder::WeightedGrevlex.cmp(&r, &xy, &s),
            Ordering::Greater
        );
    }

    #[test]
    fn block_order_eliminates() {
        // t dominant: any monomial containing t beats any t-free monomial
        let r = VarTable::new(
            vec!["t".into(), "x".into(), "y".into()],
            FieldSpec::Rat,
        )
        .unwrap();
        let ord = MonomialOrder::elimination(3, &[0], MonomialOrder::Grevlex);
        let t = m(&[1, 0, 0]);
        let x9 = m(&[0, 9, 0]);
        assert_eq!(ord.cmp(&r, &t, &x9), Ordering::Greater);
        // within the t-free block: inner grevlex
        let xy = m(&[0, 1, 1]);
        let y = m(&[0, 0, 1]);
        assert_eq!(ord.cmp(&r, &xy, &y), Ordering::Greater);
    }

    #[test]
    fn orders_are_multiplicative_and_well_founded() {
        // deterministic randomized sweep across all four families
        let r = VarTable::with_weights(
            vec!["x".into(), "y".into(), "z".into(), "s".into()],
            vec![1, 1, 1, 2],
            FieldSpec::Rat,
        )
        .unwrap();
        let orders = [
            MonomialOrder::Lex,
            MonomialOrder::Grevlex,
            MonomialOrder::WeightedGrevlex,
            MonomialOrder::elimination(4, &[3], MonomialOrder::Grevlex),
        ];
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        };
        let one = Monomial::one(4);
        for _ in 0..1000 {
            let rand_mono = |next: &mut dyn FnMut() -> u64| {
                Monomial((0..4).map(|_| (next() % 5) as u32).collect())
            };
            let a = rand_mono(&mut next);
            let b = rand_mono(&mut next);
            let c = rand_mono(&mut next);
            for ord in &orders {
                // total: antisymmetric comparison
                assert_eq!(ord.cmp(&r, &a, &b), ord.cmp(&r, &b, &a).reverse());
                // multiplicative: a > b => a*c > b*c
                assert_eq!(ord.cmp(&r, &a, &b), ord.cmp(&r, &a.mul(&c), &b.mul(&c)));
                // well-founded global order: 1 is minimal
                if !a.is_one() {
                    assert_eq!(ord.cmp(&r, &a, &one), Ordering::Greater);
                }
            }
        }
    }
}
