//! Row reduction over F₂ (bit-packed) and over prime fields F_p.

use thiserror::Error;

use crate::bits::{words_for, BitVec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("modulus {0} is not prime; composite-d qudit degeneracy (Smith normal form over Z_d) is not supported")]
    CompositeModulus(u32),
    #[error("row {row} has length {found}, expected {expected}")]
    RowLength { row: usize, found: usize, expected: usize },
}

/// A dense F₂ matrix with rows packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[BitVec]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::RowLength { row: r, found: row.len(), expected: cols });
            }
            m.row_words_mut(r).copy_from_slice(row.words());
        }
        Ok(m)
    }

    pub fn from_dense(rows: &[Vec<u8>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v & 1 == 1);
            }
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
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.data[r * self.stride + c / 64];
        let mask = 1u64 << (c % 64);
        if v {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row(&self, r: usize) -> BitVec {
        BitVec::from_words(self.cols, self.row_words(r).to_vec())
    }

    /// `dst ^= src`, both row indices.
    fn xor_rows(&mut self, dst: usize, src: usize) {
        let s = self.stride;
        let (a, b) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&mut lo[dst * s..(dst + 1) * s], &hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&mut hi[..s], &lo[src * s..(src + 1) * s])
        };
        for (x, y) in a.iter_mut().zip(b) {
            *x ^= y;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row(r).ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// `M v` over F₂.
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.cols);
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            let p = self.row_words(r).iter().zip(v.words()).fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones());
            if p & 1 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns pivot columns in order.
    ///
    /// Pivot search scans columns left to right and takes the first remaining
    /// row with a one in that column.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            if next == self.rows {
                break;
            }
            let (w, bit) = (c / 64, 1u64 << (c % 64));
            let Some(p) = (next..self.rows).find(|&r| self.data[r * self.stride + w] & bit != 0) else {
                continue;
            };
            self.swap_rows(p, next);
            for r in 0..self.rows {
                if r != next && self.data[r * self.stride + w] & bit != 0 {
                    self.xor_rows(r, next);
                }
            }
            pivots.push(c);
            next += 1;
        }
        pivots
    }
}

/// Rank over F₂. The input is left untouched.
pub fn rank_f2(m: &BitMatrix) -> usize {
    // Forward elimination only: cheaper than a full RREF.
    let mut work = m.clone();
    let mut rank = 0;
    for c in 0..work.cols {
        if rank == work.rows {
            break;
        }
        let (w, bit) = (c / 64, 1u64 << (c % 64));
        let Some(p) = (rank..work.rows).find(|&r| work.data[r * work.stride + w] & bit != 0) else {
            continue;
        };
        work.swap_rows(p, rank);
        for r in rank + 1..work.rows {
            if work.data[r * work.stride + w] & bit != 0 {
                work.xor_rows(r, rank);
            }
        }
        rank += 1;
    }
    rank
}

/// A basis of `{v : M v = 0}`.
pub fn kernel_basis_f2(m: &BitMatrix) -> Vec<BitVec> {
    let mut work = m.clone();
    let pivots = work.rref_in_place();
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = BitVec::zeros(m.cols);
            v.set(free, true);
            for (r, &p) in pivots.iter().enumerate() {
                if work.get(r, free) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect()
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d: &u32| (*d as u64) * (*d as u64) <= p as u64).all(|d| !p.is_multiple_of(d))
}

/// Inverse of `a` modulo prime `p`.
fn inv_mod(a: u32, p: u32) -> u32 {
    let mut result = 1u64;
    let (mut base, mut e, p64) = (a as u64 % p as u64, p - 2, p as u64);
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p64;
        }
        base = base * base % p64;
        e >>= 1;
    }
    result as u32
}

/// A dense matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    rows: usize,
    cols: usize,
    modulus: u32,
    data: Vec<u32>,
}

impl PrimeFieldMatrix {
    pub fn new(rows: usize, cols: usize, modulus: u32) -> Result<Self, LinalgError> {
        if !is_prime(modulus) {
            return Err(LinalgError::CompositeModulus(modulus));
        }
        Ok(PrimeFieldMatrix { rows, cols, modulus, data: vec![0; rows * cols] })
    }

    /// Entries are reduced mod `p`.
    pub fn from_rows(rows: &[Vec<u32>], modulus: u32) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::new(rows.len(), cols, modulus)?;
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::RowLength { row: r, found: row.len(), expected: cols });
            }
            for (c, &v) in row.iter().enumerate() {
                m.data[r * cols + c] = v % modulus;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.modulus;
    }

    pub fn transpose(&self) -> Self {
        let mut t = PrimeFieldMatrix { rows: self.cols, cols: self.rows, modulus: self.modulus, data: vec![0; self.data.len()] };
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    /// RREF in place with pivots scaled to 1; returns pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.modulus as u64;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..cols {
            if next == self.rows {
                break;
            }
            let Some(pr) = (next..self.rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if pr != next {
                for k in 0..cols {
                    self.data.swap(pr * cols + k, next * cols + k);
                }
            }
            let inv = inv_mod(self.data[next * cols + c], self.modulus) as u64;
            for k in 0..cols {
                let v = &mut self.data[next * cols + k];
                *v = (*v as u64 * inv % p) as u32;
            }
            for r in 0..self.rows {
                let f = self.data[r * cols + c] as u64;
                if r == next || f == 0 {
                    continue;
                }
                for k in 0..cols {
                    let sub = f * self.data[next * cols + k] as u64 % p;
                    let v = &mut self.data[r * cols + k];
                    *v = ((*v as u64 + p - sub) % p) as u32;
                }
            }
            pivots.push(c);
            next += 1;
        }
        pivots
    }
}

/// Rank over F_p. Composite moduli are rejected at matrix construction.
pub fn rank_fp(m: &PrimeFieldMatrix) -> Result<usize, LinalgError> {
    if !is_prime(m.modulus) {
        return Err(LinalgError::CompositeModulus(m.modulus));
    }
    Ok(m.clone().rref_in_place().len())
}

/// A basis of `{v ∈ F_p^cols : M v = 0}`.
pub fn kernel_basis_fp(m: &PrimeFieldMatrix) -> Result<Vec<Vec<u32>>, LinalgError> {
    if !is_prime(m.modulus) {
        return Err(LinalgError::CompositeModulus(m.modulus));
    }
    let mut work = m.clone();
    let pivots = work.rref_in_place();
    let p = m.modulus;
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    Ok((0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0u32; m.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - work.get(r, free)) % p;
            }
            v
        })
        .collect())
}
