//! The group algebras F₂[G] and Z_d[G].
//!
//! A subset of `G` is an element of F₂[G] (coefficient 1 on its members) and
//! symmetric difference is addition. Multisets with counts modulo `d` are
//! elements of Z_d[G]. Matrices over F₂, Z_d, or F₂[G] (abelian `G` only)
//! act on vectors of algebra elements.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::bits::BitVec;
use crate::group::{FiniteGroup, GroupElement, GroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operands live over different groups")]
    GroupMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("binary matrix entry {0} is not 0 or 1")]
    NotBinary(u32),
    #[error("group-algebra matrices require an abelian group")]
    NonAbelian,
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u32),
    #[error("coefficient {coeff} is out of range for modulus {modulus}")]
    CoefficientOutOfRange { coeff: u32, modulus: u32 },
    #[error("matrix kinds differ (binary vs group-algebra)")]
    MixedKinds,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// An element of F₂[G], equivalently a subset of `G`.
#[derive(Clone)]
pub struct AlgebraElement {
    group: Arc<FiniteGroup>,
    bits: BitVec,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && (Arc::ptr_eq(&self.group, &other.group) || self.group == other.group)
    }
}

impl Eq for AlgebraElement {}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.support().map(|i| self.group.name(i)).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Result<(), AlgebraError> {
    if Arc::ptr_eq(a, b) || a.id() == b.id() {
        Ok(())
    } else {
        Err(AlgebraError::GroupMismatch)
    }
}

impl AlgebraElement {
    pub fn empty(group: Arc<FiniteGroup>) -> Self {
        let bits = BitVec::zeros(group.order());
        AlgebraElement { group, bits }
    }

    /// The group identity as a singleton, i.e. the unit of F₂[G].
    pub fn unit(group: Arc<FiniteGroup>) -> Self {
        let e = group.identity_index();
        Self::from_indices(group, [e]).expect("identity in range")
    }

    /// Builds the element with coefficient `1` on the listed indices.
    /// Repeated indices cancel in pairs, as they would in F₂[G].
    pub fn from_indices(group: Arc<FiniteGroup>, indices: impl IntoIterator<Item = usize>) -> Result<Self, AlgebraError> {
        let mut bits = BitVec::zeros(group.order());
        for i in indices {
            if i >= group.order() {
                return Err(GroupError::IndexOutOfRange { index: i, order: group.order() }.into());
            }
            bits.flip(i);
        }
        Ok(AlgebraElement { group, bits })
    }

    pub fn from_names<S: AsRef<str>>(group: Arc<FiniteGroup>, names: &[S]) -> Result<Self, AlgebraError> {
        let idx: Result<Vec<usize>, GroupError> = names.iter().map(|n| group.resolve(n.as_ref())).collect();
        Self::from_indices(group, idx?)
    }

    pub fn from_bits(group: Arc<FiniteGroup>, bits: BitVec) -> Result<Self, AlgebraError> {
        if bits.len() != group.order() {
            return Err(AlgebraError::DimensionMismatch { expected: group.order(), found: bits.len() });
        }
        Ok(AlgebraElement { group, bits })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    pub fn contains(&self, index: usize) -> bool {
        self.bits.get(index)
    }

    /// Indices of the members, increasing.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn cardinality(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_zero()
    }

    /// `S ⊖ T`, the sum in F₂[G].
    pub fn symmetric_difference(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        same_group(&self.group, &other.group)?;
        let mut bits = self.bits.clone();
        bits.xor_assign(&other.bits);
        Ok(AlgebraElement { group: self.group.clone(), bits })
    }

    pub fn union(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        same_group(&self.group, &other.group)?;
        let mut bits = self.bits.clone();
        bits.or_assign(&other.bits);
        Ok(AlgebraElement { group: self.group.clone(), bits })
    }

    /// `{s⁻¹ : s ∈ S}`.
    pub fn inverse_set(&self) -> AlgebraElement {
        let g = &self.group;
        let idx = self.support().map(|s| g.inv_idx(s));
        Self::from_indices(g.clone(), idx).expect("inverse in range")
    }

    pub fn is_inverse_closed(&self) -> bool {
        self.inverse_set() == *self
    }

    pub(crate) fn left_translate_idx(&self, g: usize) -> AlgebraElement {
        let grp = &self.group;
        let mut bits = BitVec::zeros(grp.order());
        for s in self.support() {
            bits.set(grp.mul_idx(g, s), true);
        }
        AlgebraElement { group: grp.clone(), bits }
    }

    pub(crate) fn right_translate_idx(&self, g: usize) -> AlgebraElement {
        let grp = &self.group;
        let mut bits = BitVec::zeros(grp.order());
        for s in self.support() {
            bits.set(grp.mul_idx(s, g), true);
        }
        AlgebraElement { group: grp.clone(), bits }
    }

    /// `gS`.
    pub fn left_translate(&self, g: GroupElement) -> Result<AlgebraElement, AlgebraError> {
        if g.group_id() != self.group.id() {
            return Err(AlgebraError::GroupMismatch);
        }
        Ok(self.left_translate_idx(g.index()))
    }

    /// `Sg`.
    pub fn right_translate(&self, g: GroupElement) -> Result<AlgebraElement, AlgebraError> {
        if g.group_id() != self.group.id() {
            return Err(AlgebraError::GroupMismatch);
        }
        Ok(self.right_translate_idx(g.index()))
    }

    /// Product in F₂[G]: `Σ_{s∈S, t∈T} st` with coefficients mod 2.
    pub fn convolve(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        same_group(&self.group, &other.group)?;
        let g = &self.group;
        let mut bits = BitVec::zeros(g.order());
        for s in self.support() {
            for t in other.support() {
                bits.flip(g.mul_idx(s, t));
            }
        }
        Ok(AlgebraElement { group: g.clone(), bits })
    }
}

/// An element of Z_d[G]: a multiset whose counts matter modulo `d`.
///
/// The coefficient at `u` doubles as the multiplicity `m(u)` of the qudit
/// construction; zero means `u` is absent.
#[derive(Clone)]
pub struct WeightedAlgebraElement {
    group: Arc<FiniteGroup>,
    modulus: u32,
    coeffs: Vec<u32>,
}

impl PartialEq for WeightedAlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.coeffs == other.coeffs && self.group.id() == other.group.id()
    }
}

impl Eq for WeightedAlgebraElement {}

impl fmt::Debug for WeightedAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.support().map(|(i, c)| format!("{}:{c}", self.group.name(i))).collect();
        write!(f, "{{{}}} mod {}", parts.join(","), self.modulus)
    }
}

impl WeightedAlgebraElement {
    pub fn zero(group: Arc<FiniteGroup>, modulus: u32) -> Result<Self, AlgebraError> {
        if modulus < 2 {
            return Err(AlgebraError::InvalidModulus(modulus));
        }
        let coeffs = vec![0; group.order()];
        Ok(WeightedAlgebraElement { group, modulus, coeffs })
    }

    /// Sums `count` at each index; counts reduce mod `d`.
    pub fn from_counts(
        group: Arc<FiniteGroup>,
        modulus: u32,
        counts: impl IntoIterator<Item = (usize, u32)>,
    ) -> Result<Self, AlgebraError> {
        let mut w = Self::zero(group, modulus)?;
        for (i, c) in counts {
            if i >= w.group.order() {
                return Err(GroupError::IndexOutOfRange { index: i, order: w.group.order() }.into());
            }
            w.coeffs[i] = (w.coeffs[i] + c % modulus) % modulus;
        }
        Ok(w)
    }

    pub fn from_coeffs(group: Arc<FiniteGroup>, modulus: u32, coeffs: Vec<u32>) -> Result<Self, AlgebraError> {
        if modulus < 2 {
            return Err(AlgebraError::InvalidModulus(modulus));
        }
        if coeffs.len() != group.order() {
            return Err(AlgebraError::DimensionMismatch { expected: group.order(), found: coeffs.len() });
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= modulus) {
            return Err(AlgebraError::CoefficientOutOfRange { coeff: c, modulus });
        }
        Ok(WeightedAlgebraElement { group, modulus, coeffs })
    }

    /// Lifts a subset to Z_d[G] with every multiplicity 1.
    pub fn from_subset(set: &AlgebraElement, modulus: u32) -> Result<Self, AlgebraError> {
        Self::from_counts(set.group.clone(), modulus, set.support().map(|i| (i, 1)))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> u32 {
        self.coeffs[index]
    }

    /// `(index, coefficient)` for every nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c))
    }

    /// The underlying set (nonzero coefficients).
    pub fn support_set(&self) -> AlgebraElement {
        AlgebraElement::from_indices(self.group.clone(), self.support().map(|(i, _)| i)).expect("in range")
    }

    pub fn scale(&self, lambda: u32) -> Self {
        let d = self.modulus as u64;
        let coeffs = self.coeffs.iter().map(|&c| (c as u64 * lambda as u64 % d) as u32).collect();
        WeightedAlgebraElement { group: self.group.clone(), modulus: self.modulus, coeffs }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        same_group(&self.group, &other.group)?;
        if self.modulus != other.modulus {
            return Err(AlgebraError::ModulusMismatch(self.modulus, other.modulus));
        }
        let d = self.modulus;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a + b) % d).collect();
        Ok(WeightedAlgebraElement { group: self.group.clone(), modulus: d, coeffs })
    }
}

/// A square matrix over F₂.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    q: usize,
    entries: Vec<u8>,
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl BinaryMatrix {
    pub fn identity(q: usize) -> Self {
        let mut entries = vec![0; q * q];
        for i in 0..q {
            entries[i * q + i] = 1;
        }
        BinaryMatrix { q, entries }
    }

    pub fn zeros(q: usize) -> Self {
        BinaryMatrix { q, entries: vec![0; q * q] }
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self, AlgebraError> {
        let q = rows.len();
        let mut entries = Vec::with_capacity(q * q);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != q {
                return Err(AlgebraError::NotSquare { row: r, len: row.len(), expected: q });
            }
            for &v in row {
                if v > 1 {
                    return Err(AlgebraError::NotBinary(v));
                }
                entries.push(v as u8);
            }
        }
        Ok(BinaryMatrix { q, entries })
    }

    pub fn dim(&self) -> usize {
        self.q
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.entries[r * self.q + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        self.entries[r * self.q + c] = v as u8;
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.q).map(|r| (0..self.q).map(|c| self.get(r, c) as u32).collect()).collect()
    }

    pub fn transpose(&self) -> Self {
        let q = self.q;
        let mut t = Self::zeros(q);
        for r in 0..q {
            for c in 0..q {
                t.entries[c * q + r] = self.entries[r * q + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.q != other.q {
            return Err(AlgebraError::DimensionMismatch { expected: self.q, found: other.q });
        }
        let q = self.q;
        let mut out = Self::zeros(q);
        for r in 0..q {
            for c in 0..q {
                let s = (0..q).fold(0u8, |acc, k| acc ^ (self.get(r, k) & other.get(k, c)));
                out.entries[r * q + c] = s;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.q);
        for _ in 0..e {
            acc = acc.mul(self).expect("same dimension");
        }
        acc
    }

    /// `(CA)_k = ⊕_j C_kj · A_j`.
    pub fn apply(&self, a: &[AlgebraElement]) -> Result<Vec<AlgebraElement>, AlgebraError> {
        if a.len() != self.q {
            return Err(AlgebraError::DimensionMismatch { expected: self.q, found: a.len() });
        }
        let Some(first) = a.first() else {
            return Ok(Vec::new());
        };
        for x in a {
            same_group(first.group(), x.group())?;
        }
        Ok((0..self.q)
            .map(|k| {
                let mut acc = AlgebraElement::empty(first.group().clone());
                for (j, aj) in a.iter().enumerate() {
                    if self.get(k, j) == 1 {
                        acc.bits.xor_assign(&aj.bits);
                    }
                }
                acc
            })
            .collect())
    }

    /// `C v` with integer arithmetic (no reduction).
    pub fn apply_integer(&self, v: &[i64]) -> Vec<i64> {
        (0..self.q).map(|r| (0..self.q).map(|c| self.get(r, c) as i64 * v[c]).sum()).collect()
    }

    pub fn to_zd(&self, modulus: u32) -> ZdMatrix {
        ZdMatrix { q: self.q, modulus, entries: self.entries.iter().map(|&e| e as u32).collect() }
    }
}

/// A square matrix over Z_d.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZdMatrix {
    q: usize,
    modulus: u32,
    entries: Vec<u32>,
}

impl fmt::Debug for ZdMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {}", self.rows(), self.modulus)
    }
}

impl ZdMatrix {
    pub fn identity(q: usize, modulus: u32) -> Self {
        let mut entries = vec![0; q * q];
        for i in 0..q {
            entries[i * q + i] = 1 % modulus;
        }
        ZdMatrix { q, modulus, entries }
    }

    pub fn from_rows(rows: &[Vec<u32>], modulus: u32) -> Result<Self, AlgebraError> {
        if modulus < 2 {
            return Err(AlgebraError::InvalidModulus(modulus));
        }
        let q = rows.len();
        let mut entries = Vec::with_capacity(q * q);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != q {
                return Err(AlgebraError::NotSquare { row: r, len: row.len(), expected: q });
            }
            for &v in row {
                if v >= modulus {
                    return Err(AlgebraError::CoefficientOutOfRange { coeff: v, modulus });
                }
                entries.push(v);
            }
        }
        Ok(ZdMatrix { q, modulus, entries })
    }

    pub fn dim(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.q + c]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.q).map(|r| (0..self.q).map(|c| self.get(r, c)).collect()).collect()
    }

    pub fn transpose(&self) -> Self {
        let q = self.q;
        let mut entries = vec![0; q * q];
        for r in 0..q {
            for c in 0..q {
                entries[c * q + r] = self.entries[r * q + c];
            }
        }
        ZdMatrix { q, modulus: self.modulus, entries }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.q != other.q {
            return Err(AlgebraError::DimensionMismatch { expected: self.q, found: other.q });
        }
        if self.modulus != other.modulus {
            return Err(AlgebraError::ModulusMismatch(self.modulus, other.modulus));
        }
        let (q, d) = (self.q, self.modulus as u64);
        let mut entries = vec![0; q * q];
        for r in 0..q {
            for c in 0..q {
                let s: u64 = (0..q).map(|k| self.get(r, k) as u64 * other.get(k, c) as u64).sum();
                entries[r * q + c] = (s % d) as u32;
            }
        }
        Ok(ZdMatrix { q, modulus: self.modulus, entries })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.q, self.modulus);
        for _ in 0..e {
            acc = acc.mul(self).expect("same shape");
        }
        acc
    }

    /// Z_d-linear combination `(CA)_k = Σ_j C_kj A_j`.
    pub fn apply(&self, a: &[WeightedAlgebraElement]) -> Result<Vec<WeightedAlgebraElement>, AlgebraError> {
        if a.len() != self.q {
            return Err(AlgebraError::DimensionMismatch { expected: self.q, found: a.len() });
        }
        let Some(first) = a.first() else {
            return Ok(Vec::new());
        };
        for x in a {
            same_group(first.group(), x.group())?;
            if x.modulus != self.modulus {
                return Err(AlgebraError::ModulusMismatch(self.modulus, x.modulus));
            }
        }
        let d = self.modulus as u64;
        let n = first.group().order();
        Ok((0..self.q)
            .map(|k| {
                let coeffs = (0..n)
                    .map(|u| {
                        let s: u64 = a.iter().enumerate().map(|(j, aj)| self.get(k, j) as u64 * aj.coeffs[u] as u64).sum();
                        (s % d) as u32
                    })
                    .collect();
                WeightedAlgebraElement { group: first.group().clone(), modulus: self.modulus, coeffs }
            })
            .collect())
    }
}

/// A square matrix with F₂[G] entries, restricted to abelian `G`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraMatrix {
    q: usize,
    group: Arc<FiniteGroup>,
    entries: Vec<AlgebraElement>,
}

impl fmt::Debug for AlgebraMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[AlgebraElement]> = self.entries.chunks(self.q.max(1)).collect();
        write!(f, "{rows:?}")
    }
}

impl AlgebraMatrix {
    pub fn new(group: Arc<FiniteGroup>, rows: Vec<Vec<AlgebraElement>>) -> Result<Self, AlgebraError> {
        if !group.is_abelian() {
            return Err(AlgebraError::NonAbelian);
        }
        let q = rows.len();
        let mut entries = Vec::with_capacity(q * q);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != q {
                return Err(AlgebraError::NotSquare { row: r, len: row.len(), expected: q });
            }
            for e in row {
                same_group(&group, e.group())?;
                entries.push(e);
            }
        }
        Ok(AlgebraMatrix { q, group, entries })
    }

    pub fn identity(group: Arc<FiniteGroup>, q: usize) -> Result<Self, AlgebraError> {
        let rows = (0..q)
            .map(|r| {
                (0..q).map(|c| if r == c { AlgebraElement::unit(group.clone()) } else { AlgebraElement::empty(group.clone()) }).collect()
            })
            .collect();
        Self::new(group, rows)
    }

    pub fn from_binary(group: Arc<FiniteGroup>, m: &BinaryMatrix) -> Result<Self, AlgebraError> {
        let rows = (0..m.dim())
            .map(|r| {
                (0..m.dim())
                    .map(|c| if m.get(r, c) == 1 { AlgebraElement::unit(group.clone()) } else { AlgebraElement::empty(group.clone()) })
                    .collect()
            })
            .collect();
        Self::new(group, rows)
    }

    pub fn dim(&self) -> usize {
        self.q
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn get(&self, r: usize, c: usize) -> &AlgebraElement {
        &self.entries[r * self.q + c]
    }

    /// Plain transpose; entries are not conjugated.
    pub fn transpose(&self) -> Self {
        let q = self.q;
        let entries = (0..q * q).map(|i| self.entries[(i % q) * q + i / q].clone()).collect();
        AlgebraMatrix { q, group: self.group.clone(), entries }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.q != other.q {
            return Err(AlgebraError::DimensionMismatch { expected: self.q, found: other.q });
        }
        same_group(&self.group, &other.group)?;
        let q = self.q;
        let mut entries = Vec::with_capacity(q * q);
        for r in 0..q {
            for c in 0..q {
                let mut acc = AlgebraElement::empty(self.group.clone());
                for k in 0..q {
                    let p = self.get(r, k).convolve(other.get(k, c))?;
                    acc.bits.xor_assign(&p.bits);
                }
                entries.push(acc);
            }
        }
        Ok(AlgebraMatrix { q, group: self.group.clone(), entries })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.group.clone(), self.q).expect("abelian");
        for _ in 0..e {
            acc = acc.mul(self).expect("same shape");
        }
        acc
    }

    /// `(CA)_k = Σ_j C_kj * A_j` with `*` the F₂[G] product.
    pub fn apply(&self, a: &[AlgebraElement]) -> Result<Vec<AlgebraElement>, AlgebraError> {
        if a.len() != self.q {
            return Err(AlgebraError::DimensionMismatch { expected: self.q, found: a.len() });
        }
        for x in a {
            same_group(&self.group, x.group())?;
        }
        (0..self.q)
            .map(|k| {
                let mut acc = AlgebraElement::empty(self.group.clone());
                for (j, aj) in a.iter().enumerate() {
                    acc.bits.xor_assign(&self.get(k, j).convolve(aj)?.bits);
                }
                Ok(acc)
            })
            .collect()
    }
}

/// One of the `C_i` in a qubit code: binary or group-algebra valued.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeMatrix {
    Binary(BinaryMatrix),
    Algebra(AlgebraMatrix),
}

impl CodeMatrix {
    pub fn dim(&self) -> usize {
        match self {
            CodeMatrix::Binary(m) => m.dim(),
            CodeMatrix::Algebra(m) => m.dim(),
        }
    }

    pub fn transpose(&self) -> Self {
        match self {
            CodeMatrix::Binary(m) => CodeMatrix::Binary(m.transpose()),
            CodeMatrix::Algebra(m) => CodeMatrix::Algebra(m.transpose()),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        match (self, other) {
            (CodeMatrix::Binary(a), CodeMatrix::Binary(b)) => Ok(CodeMatrix::Binary(a.mul(b)?)),
            (CodeMatrix::Algebra(a), CodeMatrix::Algebra(b)) => Ok(CodeMatrix::Algebra(a.mul(b)?)),
            _ => Err(AlgebraError::MixedKinds),
        }
    }

    /// `matrix_apply`: the vector `CA`.
    pub fn apply(&self, a: &[AlgebraElement]) -> Result<Vec<AlgebraElement>, AlgebraError> {
        match self {
            CodeMatrix::Binary(m) => m.apply(a),
            CodeMatrix::Algebra(m) => m.apply(a),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            CodeMatrix::Binary(m) => *m == BinaryMatrix::identity(m.dim()),
            CodeMatrix::Algebra(m) => AlgebraMatrix::identity(m.group().clone(), m.dim()).is_ok_and(|i| i == *m),
        }
    }
}

impl From<BinaryMatrix> for CodeMatrix {
    fn from(m: BinaryMatrix) -> Self {
        CodeMatrix::Binary(m)
    }
}

impl From<AlgebraMatrix> for CodeMatrix {
    fn from(m: AlgebraMatrix) -> Self {
        CodeMatrix::Algebra(m)
    }
}
