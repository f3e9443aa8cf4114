//! Dense exact linear algebra over a [`Field`].
//!
//! Matrices act on column vectors; `Mat` is row-major. The routines here are
//! the only place Gaussian elimination happens, so every rank/kernel/solve in
//! the crate is exact by construction.

use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Mat<F: Field> {
    pub nrows: usize,
    pub ncols: usize,
    pub data: Vec<F::Elem>,
}

impl<F: Field> Mat<F> {
    pub fn zeros(f: &F, nrows: usize, ncols: usize) -> Self {
        Mat {
            nrows,
            ncols,
            data: vec![f.zero(); nrows * ncols],
        }
    }

    pub fn identity(f: &F, n: usize) -> Self {
        let mut m = Self::zeros(f, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = f.one();
        }
        m
    }

    pub fn from_rows(f: &F, rows: Vec<Vec<F::Elem>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols);
            data.extend(r);
        }
        let _ = f;
        Mat { nrows, ncols, data }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.ncols + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut F::Elem {
        &mut self.data[i * self.ncols + j]
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn col(&self, j: usize) -> Vec<F::Elem> {
        (0..self.nrows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[F::Elem]) {
        assert_eq!(v.len(), self.nrows);
        for i in 0..self.nrows {
            *self.at_mut(i, j) = v[i].clone();
        }
    }

    pub fn transpose(&self, f: &F) -> Mat<F> {
        let mut out = Mat::zeros(f, self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, f: &F, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.ncols, other.nrows);
        let mut out = Mat::zeros(f, self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.at(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.ncols {
                    let b = other.at(k, j);
                    if !f.is_zero(b) {
                        let cur = out.at_mut(i, j);
                        f.add_mul(cur, a, b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, f: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.ncols, v.len());
        let mut out = vec![f.zero(); self.nrows];
        for i in 0..self.nrows {
            let row = self.row(i);
            let acc = &mut out[i];
            for (a, x) in row.iter().zip(v) {
                if !f.is_zero(a) && !f.is_zero(x) {
                    f.add_mul(acc, a, x);
                }
            }
        }
        out
    }

    pub fn add(&self, f: &F, other: &Mat<F>) -> Mat<F> {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| f.add(a, b))
            .collect();
        Mat {
            nrows: self.nrows,
            ncols: self.ncols,
            data,
        }
    }

    pub fn scale(&self, f: &F, c: &F::Elem) -> Mat<F> {
        Mat {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self.data.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    pub fn is_zero(&self, f: &F) -> bool {
        self.data.iter().all(|a| f.is_zero(a))
    }

    /// Horizontal concatenation [self | other].
    pub fn hcat(&self, f: &F, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.nrows, other.nrows);
        let mut out = Mat::zeros(f, self.nrows, self.ncols + other.ncols);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                *out.at_mut(i, j) = self.at(i, j).clone();
            }
            for j in 0..other.ncols {
                *out.at_mut(i, self.ncols + j) = other.at(i, j).clone();
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self, f: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            if r == self.nrows {
                break;
            }
            let mut piv = None;
            for i in r..self.nrows {
                if !f.is_zero(self.at(i, c)) {
                    piv = Some(i);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            self.data.swap_chunks(r, piv, self.ncols);
            let inv = f.inv(self.at(r, c)).unwrap();
            for j in c..self.ncols {
                let v = f.mul(self.at(r, j), &inv);
                *self.at_mut(r, j) = v;
            }
            for i in 0..self.nrows {
                if i != r && !f.is_zero(self.at(i, c)) {
                    let factor = self.at(i, c).clone();
                    for j in c..self.ncols {
                        let t = f.mul(&factor, self.at(r, j));
                        let cur = self.at_mut(i, j);
                        *cur = f.sub(cur, &t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &F) -> usize {
        let mut m = self.clone();
        m.rref(f).len()
    }

    /// Basis of the kernel (column null space), as column vectors.
    pub fn kernel(&self, f: &F) -> Vec<Vec<F::Elem>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut basis = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.ncols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![f.zero(); self.ncols];
            v[free] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.at(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Solve self · x = b for each column b of rhs. Returns None if any
    /// column is inconsistent.
    pub fn solve(&self, f: &F, rhs: &Mat<F>) -> Option<Mat<F>> {
        assert_eq!(self.nrows, rhs.nrows);
        let mut aug = self.hcat(f, rhs);
        let pivots = aug.rref(f);
        // Inconsistency: a pivot in the rhs block.
        if pivots.iter().any(|&c| c >= self.ncols) {
            return None;
        }
        let mut x = Mat::zeros(f, self.ncols, rhs.ncols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.ncols {
                *x.at_mut(pc, j) = aug.at(r, self.ncols + j).clone();
            }
        }
        Some(x)
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, len: usize);
}

impl<T> SwapChunks for Vec<T> {
    fn swap_chunks(&mut self, a: usize, b: usize, len: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (left, right) = self.split_at_mut(hi * len);
        left[lo * len..(lo + 1) * len].swap_with_slice(&mut right[..len]);
    }
}

/// A subspace with a row-reduced basis, supporting membership tests and
/// coordinate extraction. Rows are the basis vectors.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    pub basis: Mat<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn from_spanning(f: &F, vectors: Vec<Vec<F::Elem>>, dim: usize) -> Self {
        let mut m = Mat::from_rows(f, vectors);
        if m.ncols == 0 {
            m.ncols = dim;
        }
        let pivots = m.rref(f);
        let rank = pivots.len();
        m.nrows = rank;
        m.data.truncate(rank * m.ncols);
        Subspace { basis: m, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows
    }

    /// Reduce v against the basis; returns the residual.
    pub fn reduce(&self, f: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut v = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            if !f.is_zero(&v[pc]) {
                let c = v[pc].clone();
                for j in 0..v.len() {
                    let t = f.mul(&c, self.basis.at(r, j));
                    v[j] = f.sub(&v[j], &t);
                }
            }
        }
        v
    }

    pub fn contains(&self, f: &F, v: &[F::Elem]) -> bool {
        self.reduce(f, v).iter().all(|x| f.is_zero(x))
    }
}

/// Cohomology bookkeeping at one spot of a cochain complex
/// `prev: C' → C`, `next: C → C''` (so H = ker(next)/im(prev)).
///
/// `classes` are cocycle representatives (columns, length dim C); `project`
/// maps a cocycle in C-coordinates to coordinates in the chosen basis of H.
pub struct CohomologySpot<F: Field> {
    pub dim: usize,
    pub classes: Mat<F>,
    kernel_basis: Mat<F>,
    /// In kernel coordinates: columns are [image basis | class units].
    im_and_classes: Mat<F>,
    imdim: usize,
}

impl<F: Field> CohomologySpot<F> {
    /// `prev`: matrix C' → C (may have 0 columns), `next`: matrix C → C''
    /// (may have 0 rows).
    pub fn compute(f: &F, prev: &Mat<F>, next: &Mat<F>) -> Self {
        let dim_c = next.ncols;
        assert_eq!(prev.nrows, dim_c);
        let ker = next.kernel(f);
        let nker = ker.len();
        let mut ker_mat = Mat::zeros(f, dim_c, nker);
        for (j, v) in ker.iter().enumerate() {
            ker_mat.set_col(j, v);
        }
        // Boundaries in kernel coordinates.
        let mut im_vecs: Vec<Vec<F::Elem>> = Vec::new();
        if prev.ncols > 0 && nker > 0 {
            let sol = ker_mat
                .solve(f, prev)
                .expect("boundary not contained in cocycles: d² ≠ 0");
            for j in 0..sol.ncols {
                im_vecs.push(sol.col(j));
            }
        }
        let im = Subspace::from_spanning(f, im_vecs, nker);
        let imdim = im.dim();
        // Pick kernel basis vectors completing the image to all of ker.
        let mut accum = im.clone();
        let mut class_units: Vec<usize> = Vec::new();
        for j in 0..nker {
            let mut unit = vec![f.zero(); nker];
            unit[j] = f.one();
            if !accum.contains(f, &unit) {
                let mut rows: Vec<Vec<F::Elem>> = (0..accum.basis.nrows)
                    .map(|r| accum.basis.row(r).to_vec())
                    .collect();
                rows.push(unit);
                accum = Subspace::from_spanning(f, rows, nker);
                class_units.push(j);
            }
        }
        let hdim = class_units.len();
        let mut classes = Mat::zeros(f, dim_c, hdim);
        for (idx, &j) in class_units.iter().enumerate() {
            classes.set_col(idx, &ker_mat.col(j));
        }
        let mut im_and_classes = Mat::zeros(f, nker, imdim + hdim);
        for r in 0..imdim {
            let row = im.basis.row(r).to_vec();
            im_and_classes.set_col(r, &row);
        }
        for (idx, &j) in class_units.iter().enumerate() {
            let mut unit = vec![f.zero(); nker];
            unit[j] = f.one();
            im_and_classes.set_col(imdim + idx, &unit);
        }
        CohomologySpot {
            dim: hdim,
            classes,
            kernel_basis: ker_mat,
            im_and_classes,
            imdim,
        }
    }

    /// Express a cocycle (in C-coordinates) in the chosen basis of H.
    /// Panics if v is not a cocycle.
    pub fn project(&self, f: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        if self.dim == 0 {
            return vec![];
        }
        let mut rhs = Mat::zeros(f, v.len(), 1);
        rhs.set_col(0, v);
        let coords = self
            .kernel_basis
            .solve(f, &rhs)
            .expect("projecting a non-cocycle");
        let mut rhs2 = Mat::zeros(f, self.kernel_basis.ncols, 1);
        rhs2.set_col(0, &coords.col(0));
        let w = self
            .im_and_classes
            .solve(f, &rhs2)
            .expect("kernel coordinates not spanned");
        (self.imdim..self.imdim + self.dim)
            .map(|i| w.at(i, 0).clone())
            .collect()
    }
}

/// Row-sparse matrix; rows[i] holds (col, coeff) pairs sorted by col.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMat<F: Field> {
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<Vec<(u32, F::Elem)>>,
}

impl<F: Field> SparseMat<F> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMat {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn identity(f: &F, n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].push((i as u32, f.one()));
        }
        m
    }

    pub fn from_dense(f: &F, m: &Mat<F>) -> Self {
        let mut out = Self::zeros(m.nrows, m.ncols);
        for i in 0..m.nrows {
            for j in 0..m.ncols {
                if !f.is_zero(m.at(i, j)) {
                    out.rows[i].push((j as u32, m.at(i, j).clone()));
                }
            }
        }
        out
    }

    pub fn to_dense(&self, f: &F) -> Mat<F> {
        let mut out = Mat::zeros(f, self.nrows, self.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row {
                *out.at_mut(i, *j as usize) = c.clone();
            }
        }
        out
    }

    pub fn set(&mut self, f: &F, i: usize, j: usize, c: F::Elem) {
        if f.is_zero(&c) {
            self.rows[i].retain(|(jj, _)| *jj != j as u32);
            return;
        }
        let row = &mut self.rows[i];
        match row.binary_search_by_key(&(j as u32), |(jj, _)| *jj) {
            Ok(pos) => row[pos].1 = c,
            Err(pos) => row.insert(pos, (j as u32, c)),
        }
    }

    pub fn apply(&self, f: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        debug_assert_eq!(v.len(), self.ncols);
        let mut out = vec![f.zero(); self.nrows];
        for (i, row) in self.rows.iter().enumerate() {
            let acc = &mut out[i];
            for (j, c) in row {
                let x = &v[*j as usize];
                if !f.is_zero(x) {
                    f.add_mul(acc, c, x);
                }
            }
        }
        out
    }

    /// self · other
    pub fn compose(&self, f: &F, other: &SparseMat<F>) -> SparseMat<F> {
        assert_eq!(self.ncols, other.nrows);
        let mut out = SparseMat::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            let mut acc: std::collections::BTreeMap<u32, F::Elem> = std::collections::BTreeMap::new();
            for (k, c) in &self.rows[i] {
                for (j, d) in &other.rows[*k as usize] {
                    let t = f.mul(c, d);
                    if f.is_zero(&t) {
                        continue;
                    }
                    let e = acc.entry(*j).or_insert_with(|| f.zero());
                    *e = f.add(e, &t);
                }
            }
            out.rows[i] = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        }
        out
    }

    pub fn add(&self, f: &F, other: &SparseMat<F>) -> SparseMat<F> {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let mut out = SparseMat::zeros(self.nrows, self.ncols);
        for i in 0..self.nrows {
            let mut acc: std::collections::BTreeMap<u32, F::Elem> = std::collections::BTreeMap::new();
            for (j, c) in self.rows[i].iter().chain(&other.rows[i]) {
                let e = acc.entry(*j).or_insert_with(|| f.zero());
                *e = f.add(e, c);
            }
            out.rows[i] = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        }
        out
    }

    pub fn scale(&self, f: &F, c: &F::Elem) -> SparseMat<F> {
        let mut out = self.clone();
        for row in &mut out.rows {
            row.retain_mut(|(_, x)| {
                *x = f.mul(x, c);
                !f.is_zero(x)
            });
        }
        out
    }

    pub fn transpose(&self, _f: &F) -> SparseMat<F> {
        let mut out = SparseMat::zeros(self.ncols, self.nrows);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row {
                out.rows[*j as usize].push((i as u32, c.clone()));
            }
        }
        for row in &mut out.rows {
            row.sort_by_key(|(j, _)| *j);
        }
        out
    }

    /// Kronecker product (self ⊗ other) on basis (i,j) ↦ i·other.dim + j.
    pub fn kron(&self, f: &F, other: &SparseMat<F>) -> SparseMat<F> {
        let mut out = SparseMat::zeros(self.nrows * other.nrows, self.ncols * other.ncols);
        for (i1, row1) in self.rows.iter().enumerate() {
            for (i2, row2) in other.rows.iter().enumerate() {
                let r = i1 * other.nrows + i2;
                let row = &mut out.rows[r];
                for (j1, c1) in row1 {
                    for (j2, c2) in row2 {
                        let c = f.mul(c1, c2);
                        if !f.is_zero(&c) {
                            row.push((*j1 * other.ncols as u32 + *j2, c));
                        }
                    }
                }
                row.sort_by_key(|(j, _)| *j);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;

    #[test]
    fn rref_kernel_solve() {
        let f = Fp::plain(7);
        let m = Mat::from_rows(&f, vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(&f), 2);
        let ker = m.kernel(&f);
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(m.apply(&f, v).iter().all(|x| *x == 0));
        }
        let rhs = Mat::from_rows(&f, vec![vec![6], vec![12 % 7], vec![2]]);
        let x = m.solve(&f, &rhs).unwrap();
        let b = m.mul(&f, &x);
        assert_eq!(b.data, rhs.data);
    }

    #[test]
    fn cohomology_of_exact_and_nonexact() {
        let f = Fp::plain(5);
        // 0 -> k --id--> k -> 0 : H at both spots is 0
        let id = Mat::identity(&f, 1);
        let zero_in = Mat::zeros(&f, 1, 0);
        let zero_out = Mat::zeros(&f, 0, 1);
        let h0 = CohomologySpot::compute(&f, &zero_in, &id);
        assert_eq!(h0.dim, 0);
        let h1 = CohomologySpot::compute(&f, &id, &zero_out);
        assert_eq!(h1.dim, 0);
        // 0 -> k --0--> k -> 0: both H's are k
        let z = Mat::zeros(&f, 1, 1);
        let h0 = CohomologySpot::compute(&f, &zero_in, &z);
        assert_eq!(h0.dim, 1);
        let proj = h0.project(&f, &[3]);
        assert_eq!(proj, vec![3]);
    }
}
