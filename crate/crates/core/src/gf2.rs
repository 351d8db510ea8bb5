//! Dense bit-packed linear algebra over GF(2).

use std::fmt;

use crate::error::{Error, Result};

const W: usize = 64;

fn words(len: usize) -> usize {
    len.div_ceil(W)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Vector {
    len: usize,
    bits: Vec<u64>,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        Gf2Vector {
            len,
            bits: vec![0; words(len)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in idx {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.bits[i / W] >> (i % W)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        let m = 1u64 << (i % W);
        if b {
            self.bits[i / W] |= m;
        } else {
            self.bits[i / W] &= !m;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.bits[i / W] ^= 1u64 << (i % W);
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &Gf2Vector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
    }

    pub(crate) fn xor_words(&mut self, other: &[u64]) {
        for (a, b) in self.bits.iter_mut().zip(other) {
            *a ^= b;
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.bits
    }

    pub fn add(&self, other: &Gf2Vector) -> Gf2Vector {
        let mut v = self.clone();
        v.xor_assign(other);
        v
    }

    pub fn dot(&self, other: &Gf2Vector) -> bool {
        self.bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * W + t)
            })
        })
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }

    /// Keep only the coordinates listed in `idx`, in that order.
    pub fn restrict(&self, idx: &[usize]) -> Gf2Vector {
        Gf2Vector::from_indices(idx.len(), idx.iter().enumerate().filter(|(_, &i)| self.get(i)).map(|(k, _)| k))
    }

    /// Inverse of [`restrict`](Self::restrict): place coordinates back into a length-`len` vector.
    pub fn expand(&self, idx: &[usize], len: usize) -> Gf2Vector {
        Gf2Vector::from_indices(len, self.ones().map(|k| idx[k]))
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i) as u8)?;
        }
        Ok(())
    }
}

/// Row-major bit matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let wpr = words(cols);
        Gf2Matrix {
            rows,
            cols,
            wpr,
            data: vec![0; rows * wpr],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &b) in r.iter().enumerate() {
                if b & 1 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn from_row_vectors(cols: usize, rows: &[Gf2Vector]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            m.row_mut(i).copy_from_slice(r.words());
        }
        m
    }

    pub fn from_columns(rows: usize, cols: &[Gf2Vector]) -> Self {
        Self::from_row_vectors(rows, cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i * self.wpr + j / W] >> (j % W)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        let m = 1u64 << (j % W);
        let w = &mut self.data[i * self.wpr + j / W];
        if b {
            *w |= m;
        } else {
            *w &= !m;
        }
    }

    fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.wpr..(i + 1) * self.wpr]
    }

    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.wpr..(i + 1) * self.wpr]
    }

    pub fn row(&self, i: usize) -> Gf2Vector {
        Gf2Vector {
            len: self.cols,
            bits: self.row_words(i).to_vec(),
        }
    }

    pub fn column(&self, j: usize) -> Gf2Vector {
        Gf2Vector::from_indices(self.rows, (0..self.rows).filter(|&i| self.get(i, j)))
    }

    fn xor_rows(&mut self, dst: usize, src: usize) {
        let wpr = self.wpr;
        let (a, b) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * wpr);
            (&mut lo[dst * wpr..(dst + 1) * wpr], &hi[..wpr])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * wpr);
            (&mut hi[..wpr], &lo[src * wpr..(src + 1) * wpr])
        };
        for (x, y) in a.iter_mut().zip(b) {
            *x ^= y;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.wpr {
            self.data.swap(a * self.wpr + w, b * self.wpr + w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row(i).ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &Gf2Vector) -> Result<Gf2Vector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok(Gf2Vector::from_indices(
            self.rows,
            (0..self.rows).filter(|&i| {
                self.row_words(i)
                    .iter()
                    .zip(x.words())
                    .map(|(a, b)| (a & b).count_ones())
                    .sum::<u32>()
                    % 2
                    == 1
            }),
        ))
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Gf2Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = vec![0u64; out.wpr];
            for k in self.row(i).ones() {
                for (a, b) in acc.iter_mut().zip(other.row_words(k)) {
                    *a ^= b;
                }
            }
            out.row_mut(i).copy_from_slice(&acc);
        }
        Ok(out)
    }

    pub fn add(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        m
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.cols, other.cols);
        let mut m = self.clone();
        m.rows += other.rows;
        m.data.extend_from_slice(&other.data);
        m
    }

    /// The submatrix on the given columns, in that order.
    pub fn select_columns(&self, idx: &[usize]) -> Gf2Matrix {
        let mut m = Gf2Matrix::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                if self.get(i, j) {
                    m.set(i, k, true);
                }
            }
        }
        m
    }

    pub fn pow(&self, mut e: u64) -> Gf2Matrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Gf2Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).unwrap();
            }
        }
        acc
    }

    /// `M^dim = 0`, by squaring until the exponent reaches `dim`.
    pub fn is_nilpotent(&self) -> bool {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut e = 1usize;
        while e < self.rows && !m.is_zero() {
            m = m.mul(&m).unwrap();
            e *= 2;
        }
        m.is_zero()
    }

    /// Reduced row echelon form in place over the first `limit` columns.
    /// Columns are scanned left to right; the pivot is the first unused row
    /// with a one. Returns the pivot columns.
    fn rref_upto(&mut self, limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_rows(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_upto(self.cols).len()
    }

    fn augmented(&self, b: &Gf2Vector) -> Result<Gf2Matrix> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        let mut aug = Gf2Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in self.row(i).ones() {
                aug.set(i, j, true);
            }
            if b.get(i) {
                aug.set(i, self.cols, true);
            }
        }
        Ok(aug)
    }

    /// Some `x` with `Mx = b`, free variables zero; `None` if `b ∉ im M`.
    pub fn solve(&self, b: &Gf2Vector) -> Result<Option<Gf2Vector>> {
        let mut aug = self.augmented(b)?;
        let pivots = aug.rref_upto(self.cols);
        let rank = pivots.len();
        if (rank..self.rows).any(|i| aug.get(i, self.cols)) {
            return Ok(None);
        }
        let mut x = Gf2Vector::zeros(self.cols);
        for (r, &c) in pivots.iter().enumerate() {
            if aug.get(r, self.cols) {
                x.set(c, true);
            }
        }
        Ok(Some(x))
    }

    pub fn in_image(&self, b: &Gf2Vector) -> Result<bool> {
        Ok(self.solve(b)?.is_some())
    }

    /// A basis of `ker M`, one vector per free column in increasing order.
    pub fn nullspace(&self) -> Vec<Gf2Vector> {
        let mut m = self.clone();
        let pivots = m.rref_upto(self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = Gf2Vector::unit(self.cols, free);
                for (r, &c) in pivots.iter().enumerate() {
                    if m.get(r, free) {
                        v.set(c, true);
                    }
                }
                v
            })
            .collect()
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Rank of a list of vectors of equal length.
pub fn span_rank(len: usize, vs: &[Gf2Vector]) -> usize {
    Gf2Matrix::from_row_vectors(len, vs).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[u8]]) -> Gf2Matrix {
        Gf2Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Gf2Matrix::identity(7).rank(), 7);
        assert_eq!(Gf2Matrix::zeros(4, 5).rank(), 0);
        assert_eq!(m(&[&[1, 1], &[1, 1]]).rank(), 1);
    }

    #[test]
    fn solve_examples() {
        let b = Gf2Vector::from_bits(&[1, 0, 1]);
        assert_eq!(Gf2Matrix::identity(3).solve(&b).unwrap(), Some(b));
        let j = m(&[&[1, 1], &[1, 1]]);
        assert_eq!(j.solve(&Gf2Vector::from_bits(&[1, 0])).unwrap(), None);
        assert_eq!(
            j.solve(&Gf2Vector::from_bits(&[1, 1])).unwrap(),
            Some(Gf2Vector::from_bits(&[1, 0]))
        );
        assert!(j.solve(&Gf2Vector::zeros(3)).is_err());
    }

    #[test]
    fn nullspace_examples() {
        assert!(Gf2Matrix::identity(5).nullspace().is_empty());
        assert_eq!(Gf2Matrix::zeros(3, 3).nullspace().len(), 3);
        assert_eq!(m(&[&[1, 1]]).nullspace(), vec![Gf2Vector::from_bits(&[1, 1])]);
    }

    #[test]
    fn in_image_examples() {
        let b = Gf2Vector::from_bits(&[0, 1, 1]);
        assert!(Gf2Matrix::identity(3).in_image(&b).unwrap());
        assert!(!Gf2Matrix::zeros(3, 3).in_image(&b).unwrap());
    }

    #[test]
    fn wide_matrices_cross_word_boundaries() {
        let n = 150;
        let mut a = Gf2Matrix::identity(n);
        a.set(0, 149, true);
        a.set(149, 0, true);
        // rows 0 and 149 coincide
        assert_eq!(a.rank(), n - 1);
        // (I + P)^2 = I + P^2 and P^2 is the diagonal projector on {0, 149}
        let p = a.pow(2);
        assert!(!p.get(0, 0) && !p.get(149, 149) && p.get(1, 1));
        assert!(!p.get(0, 149));
    }

    #[test]
    fn nilpotency() {
        let mut shift = Gf2Matrix::zeros(70, 70);
        for i in 0..69 {
            shift.set(i, i + 1, true);
        }
        assert!(shift.is_nilpotent());
        assert!(!shift.pow(69).is_zero());
        assert!(shift.pow(70).is_zero());
        assert!(!Gf2Matrix::identity(3).is_nilpotent());
    }

    fn arb_matrix() -> impl Strategy<Value = Gf2Matrix> {
        (1usize..12, 1usize..80).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(0u8..2, c), r)
                .prop_map(|rows| Gf2Matrix::from_rows(&rows))
        })
    }

    proptest! {
        #[test]
        fn solve_is_exact(a in arb_matrix(), seed in proptest::collection::vec(0u8..2, 80)) {
            let b = Gf2Vector::from_bits(&seed[..a.rows()]);
            match a.solve(&b).unwrap() {
                Some(x) => prop_assert_eq!(a.mul_vec(&x).unwrap(), b),
                None => {
                    let aug = a.augmented(&b).unwrap();
                    prop_assert_eq!(aug.rank(), a.rank() + 1);
                }
            }
        }

        #[test]
        fn in_image_matches_augmented_rank(a in arb_matrix(), seed in proptest::collection::vec(0u8..2, 80)) {
            let b = Gf2Vector::from_bits(&seed[..a.rows()]);
            let aug = a.augmented(&b).unwrap();
            prop_assert_eq!(a.in_image(&b).unwrap(), aug.rank() == a.rank());
        }

        #[test]
        fn nullspace_is_a_kernel_basis(a in arb_matrix()) {
            let ns = a.nullspace();
            prop_assert_eq!(ns.len(), a.cols() - a.rank());
            for v in &ns {
                prop_assert!(a.mul_vec(v).unwrap().is_zero());
            }
            prop_assert_eq!(span_rank(a.cols(), &ns), ns.len());
        }

        #[test]
        fn transpose_preserves_rank(a in arb_matrix()) {
            prop_assert_eq!(a.transpose().rank(), a.rank());
        }
    }
}
