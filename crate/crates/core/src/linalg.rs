//! Dense linear algebra over a prime field.
//!
//! Vectors are `Vec<u32>` with entries in `[0, p)`. Matrices act on column
//! vectors.

use std::fmt;

use crate::scalar::PrimeField;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix, f: &PrimeField) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let p = f.p() as u64;
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            let acc = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (j, slot) in acc.iter_mut().enumerate() {
                    *slot += a * other.data[k * other.cols + j] as u64;
                }
                if k % 1024 == 1023 {
                    acc.iter_mut().for_each(|x| *x %= p);
                }
            }
        }
        Matrix {
            rows: self.rows,
            cols: other.cols,
            data: out.into_iter().map(|x| (x % p) as u32).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[u32], f: &PrimeField) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let s: u64 = self.row(i).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum();
                (s % f.p() as u64) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix, f: &PrimeField) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix, f: &PrimeField) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: u32, f: &PrimeField) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// `self + c * other`
    pub fn add_scaled(&mut self, other: &Matrix, c: u32, f: &PrimeField) {
        if c == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.mul_add(*a, b, c);
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, f: &PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c));
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for j in c..self.cols {
                    let v = f.mul_add(self.get(i, j), neg, self.get(r, j));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &PrimeField) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn nullspace(&self, f: &PrimeField) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, free));
            }
            out.push(v);
        }
        out
    }

    pub fn inverse(&self, f: &PrimeField) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self, f: &PrimeField) -> bool {
        self.is_square() && self.rank(f) == self.rows
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// A subspace of `F_p^n` kept as a fully reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let mut s = Self::new(ambient);
        for i in 0..ambient {
            let mut v = vec![0; ambient];
            v[i] = 1;
            s.rows.push(v);
            s.pivots.push(i);
        }
        s
    }

    pub fn spanned_by(ambient: usize, vectors: &[Vec<u32>], f: &PrimeField) -> Self {
        let mut s = Self::new(ambient);
        for v in vectors {
            s.insert(v.clone(), f);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Non-pivot columns; the unit vectors there span a complement.
    pub fn complement_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Reduces `v` against the basis in place.
    pub fn reduce(&self, v: &mut [u32], f: &PrimeField) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &b) in v.iter_mut().zip(row) {
                if b != 0 {
                    *x = f.mul_add(*x, neg, b);
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32], f: &PrimeField) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w, f);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns true if the dimension grew.
    pub fn insert(&mut self, mut v: Vec<u32>, f: &PrimeField) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(&mut v, f);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[pc]);
        v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                let neg = f.neg(c);
                for (x, &b) in row.iter_mut().zip(&v) {
                    if b != 0 {
                        *x = f.mul_add(*x, neg, b);
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&x| x < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }

    /// Coordinates of a vector known to lie in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Vec<u32> {
        self.pivots.iter().map(|&pc| v[pc]).collect()
    }

    /// `{x : <x, w> = 0 for all w in self}`.
    pub fn annihilator(&self, f: &PrimeField) -> Subspace {
        if self.rows.is_empty() {
            return Subspace::full(self.ambient);
        }
        let m = Matrix::from_rows(&self.rows, self.ambient);
        Subspace::spanned_by(self.ambient, &m.nullspace(f), f)
    }
}

/// Closure of `seeds` under all `generators`.
pub fn spin(seeds: &[Vec<u32>], generators: &[Matrix], f: &PrimeField) -> Subspace {
    let n = seeds.first().map(|v| v.len()).unwrap_or(0);
    let mut space = Subspace::new(n);
    let mut queue: Vec<Vec<u32>> = Vec::new();
    for s in seeds {
        if space.insert(s.clone(), f) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if space.dim() == n {
            break;
        }
        for g in generators {
            let w = g.mul_vec(&v, f);
            if space.insert(w.clone(), f) {
                queue.push(w);
            }
        }
    }
    space
}

/// Matrix of `g` on an invariant subspace, in the echelon basis.
pub fn restrict_to(g: &Matrix, sub: &Subspace, f: &PrimeField) -> Matrix {
    let k = sub.dim();
    let mut out = Matrix::zeros(k, k);
    for (j, b) in sub.basis().iter().enumerate() {
        let img = g.mul_vec(b, f);
        debug_assert!(sub.contains(&img, f), "subspace is not invariant");
        for (i, c) in sub.coordinates(&img).into_iter().enumerate() {
            out.set(i, j, c);
        }
    }
    out
}

/// Matrix of `g` on `V / sub`, in the basis of unit vectors at the
/// non-pivot columns of `sub`.
pub fn quotient_by(g: &Matrix, sub: &Subspace, f: &PrimeField) -> Matrix {
    let cols = sub.complement_columns();
    let k = cols.len();
    let mut out = Matrix::zeros(k, k);
    for (j, &c) in cols.iter().enumerate() {
        let mut img = g.column(c);
        sub.reduce(&mut img, f);
        for (i, &cc) in cols.iter().enumerate() {
            out.set(i, j, img[cc]);
        }
    }
    out
}

/// True iff `sub` is mapped into itself by every generator.
pub fn is_invariant(sub: &Subspace, generators: &[Matrix], f: &PrimeField) -> bool {
    generators
        .iter()
        .all(|g| sub.basis().iter().all(|b| sub.contains(&g.mul_vec(b, f), f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn field() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    fn matrix_strategy(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(0u32..5, n * n).prop_map(move |d| Matrix { rows: n, cols: n, data: d })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in matrix_strategy(5)) {
            let f = field();
            let ns = m.nullspace(&f);
            prop_assert_eq!(m.rank(&f) + ns.len(), 5);
            for v in &ns {
                prop_assert!(m.mul_vec(v, &f).iter().all(|&x| x == 0));
            }
        }

        #[test]
        fn inverse_is_two_sided(m in matrix_strategy(4)) {
            let f = field();
            if let Some(inv) = m.inverse(&f) {
                prop_assert_eq!(m.mul(&inv, &f), Matrix::identity(4));
                prop_assert_eq!(inv.mul(&m, &f), Matrix::identity(4));
            } else {
                prop_assert!(m.rank(&f) < 4);
            }
        }

        #[test]
        fn annihilator_dimension(vs in proptest::collection::vec(proptest::collection::vec(0u32..5, 6), 0..5)) {
            let f = field();
            let s = Subspace::spanned_by(6, &vs, &f);
            let a = s.annihilator(&f);
            prop_assert_eq!(s.dim() + a.dim(), 6);
            for x in a.basis() {
                for w in s.basis() {
                    let dot: u64 = x.iter().zip(w).map(|(&a, &b)| a as u64 * b as u64).sum();
                    prop_assert_eq!(dot % 5, 0);
                }
            }
        }
    }

    #[test]
    fn spin_and_quotient() {
        let f = field();
        // upper triangular 3x3 Jordan-type action: span(e0) is invariant
        let g = Matrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]], 3);
        let s = spin(&[vec![1, 0, 0]], std::slice::from_ref(&g), &f);
        assert_eq!(s.dim(), 1);
        assert!(is_invariant(&s, std::slice::from_ref(&g), &f));
        assert_eq!(restrict_to(&g, &s, &f), Matrix::identity(1));
        let q = quotient_by(&g, &s, &f);
        assert_eq!(q, Matrix::from_rows(&[vec![1, 1], vec![0, 1]], 2));
        assert_eq!(spin(&[vec![0, 0, 1]], &[g], &f).dim(), 3);
    }
}
