//! Dense matrices over a polynomial ring, with the minor ideals used by the
//! degeneration-parameter conditions.

use crate::poly::Polynomial;
use crate::ring::Ring;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    /// Row-major entries.
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            data: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn from_fn(
        ring: &Ring,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> PolyMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let p = f(i, j);
                debug_assert!(p.ring() == ring);
                data.push(p);
            }
        }
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> PolyMatrix {
        PolyMatrix::identity_scaled(ring, n, &Polynomial::one(ring))
    }

    /// `p` on the diagonal, zero elsewhere.
    pub fn identity_scaled(ring: &Ring, n: usize, p: &Polynomial) -> PolyMatrix {
        PolyMatrix::from_fn(ring, n, n, |i, j| {
            if i == j {
                p.clone()
            } else {
                Polynomial::zero(ring)
            }
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        debug_assert!(p.ring() == &self.ring);
        self.data[i * self.cols + j] = p;
    }

    /// Row-major iteration over entries.
    pub fn entries(&self) -> impl Iterator<Item = &Polynomial> {
        self.data.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    pub fn map(&self, mut f: impl FnMut(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|p| f(p)).collect(),
        }
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, p: &Polynomial) -> PolyMatrix {
        self.map(|e| e.mul(p))
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        assert!(self.ring == other.ring);
        PolyMatrix::from_fn(&self.ring, self.rows, other.cols, |i, j| {
            let mut acc = Polynomial::zero(&self.ring);
            for k in 0..self.cols {
                acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
            }
            acc
        })
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    /// Substitute a constant for one ring variable in every entry, staying in
    /// the same ring.
    pub fn substitute_var(&self, idx: usize, value: &Polynomial) -> PolyMatrix {
        self.map(|e| e.substitute_var(idx, value))
    }

    /// Move every entry into another ring sharing variable names.
    pub fn rename_by_name(&self, target: &Ring) -> crate::error::Result<PolyMatrix> {
        let mut data = Vec::with_capacity(self.data.len());
        for p in &self.data {
            data.push(p.rename_by_name(target)?);
        }
        Ok(PolyMatrix {
            ring: target.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn submatrix(&self, row_sel: &[usize], col_sel: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, row_sel.len(), col_sel.len(), |i, j| {
            self.get(row_sel[i], col_sel[j]).clone()
        })
    }

    /// Determinant of a square matrix by cofactor expansion along the first
    /// row (fine at the small sizes that occur here).
    pub fn det(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols, "determinant of a square matrix");
        let n = self.rows;
        match n {
            0 => Polynomial::one(&self.ring),
            1 => self.get(0, 0).clone(),
            2 => self
                .get(0, 0)
                .mul(self.get(1, 1))
                .sub(&self.get(0, 1).mul(self.get(1, 0))),
            _ => {
                let mut acc = Polynomial::zero(&self.ring);
                let rest_rows: Vec<usize> = (1..n).collect();
                for j in 0..n {
                    if self.get(0, j).is_zero() {
                        continue;
                    }
                    let cols: Vec<usize> =
                        (0..n).filter(|&c| c != j).collect();
                    let minor = self.submatrix(&rest_rows, &cols).det();
                    let term = self.get(0, j).mul(&minor);
                    acc = if j % 2 == 0 {
                        acc.add(&term)
                    } else {
                        acc.sub(&term)
                    };
                }
                acc
            }
        }
    }

    /// All `k × k` minors, ordered by row selection then column selection,
    /// both in lexicographic order. `k = 0` yields the single empty minor 1;
    /// `k` beyond the matrix size yields nothing.
    pub fn minors(&self, k: usize) -> Vec<Polynomial> {
        if k == 0 {
            return vec![Polynomial::one(&self.ring)];
        }
        if k > self.rows || k > self.cols {
            return Vec::new();
        }
        let row_sets = combinations(self.rows, k);
        let col_sets = combinations(self.cols, k);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                out.push(self.submatrix(rs, cs).det());
            }
        }
        out
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// All k-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::parse::parse_polynomial;
    use crate::ring::VarTable;

    fn ring(names: &[&str]) -> Ring {
        VarTable::new(
            names.iter().map(|s| s.to_string()).collect(),
            FieldSpec::Rat,
        )
        .unwrap()
    }

    fn m(ring: &Ring, rows: usize, cols: usize, entries: &[&str]) -> PolyMatrix {
        assert_eq!(entries.len(), rows * cols);
        PolyMatrix::from_fn(ring, rows, cols, |i, j| {
            parse_polynomial(ring, entries[i * cols + j]).unwrap()
        })
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn multiplication_and_identity() {
        let r = ring(&["a", "b", "s"]);
        let f = m(&r, 2, 2, &["0", "1", "s", "0"]);
        let id = PolyMatrix::identity(&r, 2);
        assert_eq!(f.mul(&id), f);
        assert_eq!(id.mul(&f), f);
        // f^2 = s * Id for this exchange form
        let s = parse_polynomial(&r, "s").unwrap();
        assert_eq!(f.mul(&f), PolyMatrix::identity_scaled(&r, 2, &s));
    }

    #[test]
    fn determinants_match_hand_computation() {
        let r = ring(&["a", "b", "c", "d"]);
        let mm = m(&r, 2, 2, &["a", "b", "c", "d"]);
        assert_eq!(mm.det().to_string(), "-b*c + a*d");
        let mm3 = m(
            &r,
            3,
            3,
            &["a", "b", "0", "c", "d", "0", "0", "0", "1"],
        );
        assert_eq!(mm3.det().to_string(), "-b*c + a*d");
        assert_eq!(PolyMatrix::identity(&r, 3).det().to_string(), "1");
        assert_eq!(PolyMatrix::zero(&r, 0, 0).det().to_string(), "1");
    }

    #[test]
    fn minor_counts_and_conventions() {
        let r = ring(&["a", "b", "c", "d", "e", "f"]);
        let mm = m(&r, 2, 3, &["a", "b", "c", "d", "e", "f"]);
        assert_eq!(mm.minors(1).len(), 6);
        assert_eq!(mm.minors(2).len(), 3); // C(2,2) * C(3,2)
        assert!(mm.minors(3).is_empty());
        assert_eq!(mm.minors(0).len(), 1);
        assert!(mm.minors(0)[0].is_constant());
        // first 2x2 minor takes columns {0,1}
        assert_eq!(mm.minors(2)[0].to_string(), "-b*d + a*e");
    }

    #[test]
    fn transpose_and_scale() {
        let r = ring(&["a", "s"]);
        let mm = m(&r, 1, 2, &["a", "1"]);
        let t = mm.transpose();
        assert_eq!((t.rows(), t.cols()), (2, 1));
        assert_eq!(t.get(1, 0).to_string(), "1");
        let s = parse_polynomial(&r, "s").unwrap();
        assert_eq!(mm.scale(&s).get(0, 0).to_string(), "a*s");
    }
}
