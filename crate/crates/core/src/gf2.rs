//! Bit-packed vectors and matrices over GF(2).
//!
//! Rows are stored as `u64` words, least significant bit of word 0 is column 0.
//! Everything here is dense; the codes we handle have at most a few hundred
//! columns so a row fits in a handful of words.

use std::fmt;

const WORD: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Parity of the bitwise AND.
    #[inline]
    pub fn dot(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u32;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= (a & b).count_ones();
        }
        acc & 1 == 1
    }

    /// Size of the intersection of the supports.
    #[inline]
    pub fn overlap(&self, other: &BitVec) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    #[inline]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Indices of set bits in increasing order.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let t = w.trailing_zeros() as usize;
                out.push(wi * WORD + t);
                w &= w - 1;
            }
        }
        out
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(wi, w)| wi * WORD + w.trailing_zeros() as usize)
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// Concatenate `self` followed by `other`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.support() {
            out.set(i, true);
        }
        for i in other.support() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Hex string, most significant bit of the first digit is bit 0.
    /// Trailing padding bits in the last digit are zero.
    pub fn to_hex(&self) -> String {
        let digits = self.len.div_ceil(4);
        let mut s = String::with_capacity(digits);
        for d in 0..digits {
            let mut nibble = 0u8;
            for b in 0..4 {
                let i = 4 * d + b;
                if i < self.len && self.get(i) {
                    nibble |= 8 >> b;
                }
            }
            s.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        s
    }

    pub fn from_hex(hex: &str, len: usize) -> Option<BitVec> {
        if hex.len() != len.div_ceil(4) {
            return None;
        }
        let mut v = BitVec::zeros(len);
        for (d, c) in hex.chars().enumerate() {
            let nibble = c.to_digit(16)?;
            for b in 0..4 {
                let i = 4 * d + b;
                if nibble & (8 >> b) != 0 {
                    if i >= len {
                        return None;
                    }
                    v.set(i, true);
                }
            }
        }
        Some(v)
    }

    #[inline]
    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVec>,
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r:?}")?;
        }
        Ok(())
    }
}

/// Row-reduced echelon form together with the pivot column of every row.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: BitMatrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `v` against the echelon rows; the result is zero iff `v` is in the row space.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut out = v.clone();
        for (row, &p) in self.matrix.rows.iter().zip(&self.pivots) {
            if out.get(p) {
                out.xor_assign(row);
            }
        }
        out
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            cols,
            rows: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "row length mismatch");
        BitMatrix { cols, rows }
    }

    pub fn from_bools(rows: &[Vec<bool>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        BitMatrix::from_rows(cols, rows.iter().map(|r| BitVec::from_bools(r)).collect())
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut BitVec {
        &mut self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVec> {
        self.rows
    }

    pub fn push_row(&mut self, row: BitVec) {
        assert_eq!(row.len(), self.cols);
        self.rows.push(row);
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVec::is_zero)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.support() {
                t.rows[c].set(r, true);
            }
        }
        t
    }

    /// `self · otherᵀ`, i.e. entry (i, j) is the dot product of row i with row j of `other`.
    pub fn mul_transpose(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols);
        let mut out = BitMatrix::zeros(self.rows.len(), other.rows.len());
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in other.rows.iter().enumerate() {
                if a.dot(b) {
                    out.rows[i].set(j, true);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows.len());
        let mut out = BitMatrix::zeros(self.rows.len(), other.cols);
        for (i, a) in self.rows.iter().enumerate() {
            for k in a.support() {
                out.rows[i].xor_assign(&other.rows[k]);
            }
        }
        out
    }

    /// Matrix-vector product `self · v`.
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            if r.dot(v) {
                out.set(i, true);
            }
        }
        out
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        BitMatrix::from_rows(self.cols, rows)
    }

    /// Place `other` to the right of `self`.
    pub fn hstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows.len(), other.rows.len());
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.concat(b))
            .collect();
        BitMatrix::from_rows(self.cols + other.cols, rows)
    }

    /// Gauss-Jordan elimination. Zero rows are dropped from the result.
    pub fn echelon(&self) -> Echelon {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        Echelon {
            matrix: BitMatrix::from_rows(self.cols, rows),
            pivots,
        }
    }

    /// Rank by forward elimination only; cheaper than `echelon`.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<u64>> = self.rows.iter().map(|r| r.words().to_vec()).collect();
        let nwords = words_for(self.cols);
        let mut rank = 0;
        for c in 0..self.cols {
            let (w, bit) = (c / WORD, 1u64 << (c % WORD));
            let Some(p) = (rank..rows.len()).find(|&i| rows[i][w] & bit != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot = &head[rank];
            for row in tail.iter_mut() {
                if row[w] & bit != 0 {
                    for k in w..nwords {
                        row[k] ^= pivot[k];
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Basis of the right null space `{v : self · v = 0}`, one vector per row.
    pub fn kernel(&self) -> BitMatrix {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVec::zeros(self.cols);
            v.set(free, true);
            for (row, &p) in ech.matrix.rows.iter().zip(&ech.pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        BitMatrix::from_rows(self.cols, basis)
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<BitMatrix> {
        let n = self.rows.len();
        if n != self.cols {
            return None;
        }
        let aug = self.hstack(&BitMatrix::identity(n));
        let ech = aug.echelon();
        if ech.rank() < n || ech.pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let rows = ech
            .matrix
            .rows
            .iter()
            .take(n)
            .map(|r| {
                BitVec::from_indices(
                    n,
                    r.support().into_iter().filter(|&c| c >= n).map(|c| c - n),
                )
            })
            .collect();
        Some(BitMatrix::from_rows(n, rows))
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows.len() == self.cols && *self == self.transpose()
    }

    /// Rows as hex strings (see [`BitVec::to_hex`]).
    pub fn to_hex_rows(&self) -> Vec<String> {
        self.rows.iter().map(BitVec::to_hex).collect()
    }

    pub fn from_hex_rows(rows: &[String], cols: usize) -> Option<BitMatrix> {
        let rows = rows
            .iter()
            .map(|h| BitVec::from_hex(h, cols))
            .collect::<Option<Vec<_>>>()?;
        Some(BitMatrix::from_rows(cols, rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_rank(rows: &[Vec<bool>]) -> usize {
        // elimination on Vec<bool>, independent of the word-packed code path
        let mut m: Vec<Vec<bool>> = rows.to_vec();
        let ncols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..ncols {
            if let Some(p) = (rank..m.len()).find(|&i| m[i][c]) {
                m.swap(rank, p);
                let pivot = m[rank].clone();
                for (i, row) in m.iter_mut().enumerate() {
                    if i != rank && row[c] {
                        for (a, b) in row.iter_mut().zip(&pivot) {
                            *a ^= b;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn hex_msb_is_column_zero() {
        let v = BitVec::from_indices(6, 0..6);
        assert_eq!(v.to_hex(), "fc");
        let v = BitVec::from_indices(9, [0, 8]);
        assert_eq!(v.to_hex(), "808");
        assert_eq!(BitVec::from_hex("808", 9), Some(v));
        assert_eq!(BitVec::from_hex("809", 9), None);
    }

    #[test]
    fn inverse_of_singular_is_none() {
        let m = BitMatrix::from_bools(&[vec![true, true], vec![true, true]]);
        assert!(m.inverse().is_none());
        let m = BitMatrix::from_bools(&[vec![true, true], vec![false, true]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), BitMatrix::identity(2));
    }

    proptest! {
        #[test]
        fn rank_matches_naive(rows in prop::collection::vec(prop::collection::vec(any::<bool>(), 70), 1..12)) {
            let m = BitMatrix::from_bools(&rows);
            prop_assert_eq!(m.rank(), naive_rank(&rows));
            prop_assert_eq!(m.echelon().rank(), naive_rank(&rows));
        }

        #[test]
        fn kernel_is_annihilated(rows in prop::collection::vec(prop::collection::vec(any::<bool>(), 20), 1..10)) {
            let m = BitMatrix::from_bools(&rows);
            let k = m.kernel();
            prop_assert_eq!(k.nrows() + m.rank(), 20);
            prop_assert!(m.mul_transpose(&k).is_zero());
            prop_assert_eq!(k.rank(), k.nrows());
        }

        #[test]
        fn hex_roundtrip(bits in prop::collection::vec(any::<bool>(), 1..200)) {
            let v = BitVec::from_bools(&bits);
            prop_assert_eq!(BitVec::from_hex(&v.to_hex(), bits.len()), Some(v));
        }
    }
}
