//! Pauli operators on `L(G, 2q)` in symplectic form, and the ₓ𝕏_Z stabilizer
//! generators built from a code spec.
//!
//! Each site `g` carries `2q` qudits labelled `+1..+q, -1..-q`. For a matrix
//! `χ` the pair of generators at `g` is
//!
//! ```text
//! Z^χ_g = ∏_k Z(g·(χA)_k, +k) · Z((χᵀB)_k·g, -k)
//! X^χ_g = ∏_k X(inv((χᵀB)_k)·g, +k) · X(g·inv((χA)_k), -k)
//! ```
//!
//! An operator is stored as `ω^phase · ∏ X^x Z^z` with `ZX = ωXZ`, so that
//! `PQ = ω^⟨P,Q⟩ QP` where `⟨P,Q⟩ = z·x' − x·z'` is [`symplectic_product`].

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError, BinaryMatrix, CodeMatrix, WeightedAlgebraElement, ZdMatrix};
use crate::analysis::matrices_commute_check;
use crate::group::{FiniteGroup, GroupElement, GroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("q must be at least 1")]
    ZeroQ,
    #[error("{field} has {found} entries, expected q = {expected}")]
    Arity { field: &'static str, expected: usize, found: usize },
    #[error("at least one matrix is required")]
    NoMatrices,
    #[error("matrix {index} is {found}x{found}, expected {expected}x{expected}")]
    MatrixDim { index: usize, expected: usize, found: usize },
    #[error("matrices {0} and {1} do not commute")]
    NonCommuting(usize, usize),
    #[error("matrix index {index} out of range ({count} matrices)")]
    MatrixIndexOutOfRange { index: usize, count: usize },
    #[error("overlap precondition g·u = v⁻¹·h does not hold")]
    OverlapPrecondition,
    #[error("overlap counting needs binary matrices")]
    NotBinary,
    #[error("modulus mismatch: spec uses d = {expected}, found {found}")]
    Modulus { expected: u32, found: u32 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PauliError {
    #[error("operator shapes differ: {0} vs {1} qudits")]
    Length(usize, usize),
    #[error("operator moduli differ: {0} vs {1}")]
    Modulus(u32, u32),
}

/// The defining data of a qubit ₓ𝕏_Z code: `G`, `q`, `A`, `B` and the `C_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    group: Arc<FiniteGroup>,
    q: usize,
    a: Vec<AlgebraElement>,
    b: Vec<AlgebraElement>,
    matrices: Vec<CodeMatrix>,
}

fn check_sets(group: &Arc<FiniteGroup>, q: usize, field: &'static str, sets: &[AlgebraElement]) -> Result<(), SpecError> {
    if sets.len() != q {
        return Err(SpecError::Arity { field, expected: q, found: sets.len() });
    }
    if sets.iter().any(|s| s.group().id() != group.id()) {
        return Err(AlgebraError::GroupMismatch.into());
    }
    Ok(())
}

impl CodeSpec {
    /// Validates shapes and that the matrices pairwise commute.
    pub fn new(
        group: Arc<FiniteGroup>,
        a: Vec<AlgebraElement>,
        b: Vec<AlgebraElement>,
        matrices: Vec<CodeMatrix>,
    ) -> Result<Self, SpecError> {
        let spec = Self::new_unchecked(group, a, b, matrices)?;
        let check = matrices_commute_check(&spec.matrices)?;
        if let Some(w) = check.witness {
            return Err(SpecError::NonCommuting(w.i, w.j));
        }
        Ok(spec)
    }

    /// Validates shapes only; the matrices may fail to commute. Used to
    /// exercise the commutation checker on broken inputs.
    pub fn new_unchecked(
        group: Arc<FiniteGroup>,
        a: Vec<AlgebraElement>,
        b: Vec<AlgebraElement>,
        matrices: Vec<CodeMatrix>,
    ) -> Result<Self, SpecError> {
        let q = a.len();
        if q == 0 {
            return Err(SpecError::ZeroQ);
        }
        check_sets(&group, q, "A", &a)?;
        check_sets(&group, q, "B", &b)?;
        if matrices.is_empty() {
            return Err(SpecError::NoMatrices);
        }
        for (index, m) in matrices.iter().enumerate() {
            if m.dim() != q {
                return Err(SpecError::MatrixDim { index, expected: q, found: m.dim() });
            }
            if let CodeMatrix::Algebra(am) = m {
                if am.group().id() != group.id() {
                    return Err(AlgebraError::GroupMismatch.into());
                }
            }
        }
        Ok(CodeSpec { group, q, a, b, matrices })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn a(&self) -> &[AlgebraElement] {
        &self.a
    }

    pub fn b(&self) -> &[AlgebraElement] {
        &self.b
    }

    pub fn matrices(&self) -> &[CodeMatrix] {
        &self.matrices
    }

    pub fn n_qubits(&self) -> usize {
        2 * self.q * self.group.order()
    }

    /// `((χA)_k, (χᵀB)_k)` for matrix `i`.
    pub fn transformed_sets(&self, i: usize) -> Result<(Vec<AlgebraElement>, Vec<AlgebraElement>), SpecError> {
        let chi = self.matrices.get(i).ok_or(SpecError::MatrixIndexOutOfRange { index: i, count: self.matrices.len() })?;
        Ok((chi.apply(&self.a)?, chi.transpose().apply(&self.b)?))
    }
}

/// The qudit variant: multisets over Z_d and matrices over Z_d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuditCodeSpec {
    group: Arc<FiniteGroup>,
    q: usize,
    modulus: u32,
    a: Vec<WeightedAlgebraElement>,
    b: Vec<WeightedAlgebraElement>,
    matrices: Vec<ZdMatrix>,
}

impl QuditCodeSpec {
    pub fn new(
        group: Arc<FiniteGroup>,
        modulus: u32,
        a: Vec<WeightedAlgebraElement>,
        b: Vec<WeightedAlgebraElement>,
        matrices: Vec<ZdMatrix>,
    ) -> Result<Self, SpecError> {
        if modulus < 2 {
            return Err(AlgebraError::InvalidModulus(modulus).into());
        }
        let q = a.len();
        if q == 0 {
            return Err(SpecError::ZeroQ);
        }
        for (field, sets) in [("A", &a), ("B", &b)] {
            if sets.len() != q {
                return Err(SpecError::Arity { field, expected: q, found: sets.len() });
            }
            for s in sets.iter() {
                if s.group().id() != group.id() {
                    return Err(AlgebraError::GroupMismatch.into());
                }
                if s.modulus() != modulus {
                    return Err(SpecError::Modulus { expected: modulus, found: s.modulus() });
                }
            }
        }
        if matrices.is_empty() {
            return Err(SpecError::NoMatrices);
        }
        for (index, m) in matrices.iter().enumerate() {
            if m.dim() != q {
                return Err(SpecError::MatrixDim { index, expected: q, found: m.dim() });
            }
            if m.modulus() != modulus {
                return Err(SpecError::Modulus { expected: modulus, found: m.modulus() });
            }
        }
        if let Some(w) = matrices_commute_check(&matrices)?.witness {
            return Err(SpecError::NonCommuting(w.i, w.j));
        }
        Ok(QuditCodeSpec { group, q, modulus, a, b, matrices })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn a(&self) -> &[WeightedAlgebraElement] {
        &self.a
    }

    pub fn b(&self) -> &[WeightedAlgebraElement] {
        &self.b
    }

    pub fn matrices(&self) -> &[ZdMatrix] {
        &self.matrices
    }

    pub fn n_qudits(&self) -> usize {
        2 * self.q * self.group.order()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Layer {
    Plus,
    Minus,
}

/// Position `(site, ±channel)`; `channel` runs over `1..=q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QubitIndex {
    pub site: usize,
    pub layer: Layer,
    pub channel: usize,
}

impl QubitIndex {
    pub fn flat(&self, q: usize) -> usize {
        debug_assert!((1..=q).contains(&self.channel));
        self.site * 2 * q + if self.layer == Layer::Plus { 0 } else { q } + self.channel - 1
    }

    pub fn from_flat(i: usize, q: usize) -> Self {
        let (site, r) = (i / (2 * q), i % (2 * q));
        let (layer, channel) = if r < q { (Layer::Plus, r + 1) } else { (Layer::Minus, r - q + 1) };
        QubitIndex { site, layer, channel }
    }
}

#[inline]
fn flat(site: usize, layer: Layer, channel: usize, q: usize) -> usize {
    QubitIndex { site, layer, channel }.flat(q)
}

/// A generalized Pauli `ω^phase · ∏_j X_j^{x_j} Z_j^{z_j}` over Z_d.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    modulus: u32,
    xpart: Vec<u32>,
    zpart: Vec<u32>,
    phase: u32,
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.phase != 0 {
            write!(f, "w^{}*", self.phase)?;
        }
        let power = |letter: char, e: u32| if e == 1 { letter.to_string() } else { format!("{letter}^{e}") };
        let mut first = true;
        for i in 0..self.n() {
            let (x, z) = (self.xpart[i], self.zpart[i]);
            if x == 0 && z == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if x != 0 {
                f.write_str(&power('X', x))?;
            }
            if z != 0 {
                f.write_str(&power('Z', z))?;
            }
            write!(f, "{i}")?;
        }
        if first {
            f.write_str("I")?;
        }
        Ok(())
    }
}

impl PauliOperator {
    pub fn identity(n: usize, modulus: u32) -> Self {
        PauliOperator { modulus, xpart: vec![0; n], zpart: vec![0; n], phase: 0 }
    }

    /// Exponents are reduced mod `d`.
    pub fn new(modulus: u32, xpart: Vec<u32>, zpart: Vec<u32>, phase: u32) -> Result<Self, PauliError> {
        if xpart.len() != zpart.len() {
            return Err(PauliError::Length(xpart.len(), zpart.len()));
        }
        let red = |v: Vec<u32>| v.into_iter().map(|e| e % modulus).collect();
        Ok(PauliOperator { modulus, xpart: red(xpart), zpart: red(zpart), phase: phase % modulus })
    }

    pub fn single_x(n: usize, modulus: u32, at: usize) -> Self {
        let mut p = Self::identity(n, modulus);
        p.xpart[at] = 1 % modulus;
        p
    }

    pub fn single_z(n: usize, modulus: u32, at: usize) -> Self {
        let mut p = Self::identity(n, modulus);
        p.zpart[at] = 1 % modulus;
        p
    }

    pub fn n(&self) -> usize {
        self.xpart.len()
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn xpart(&self) -> &[u32] {
        &self.xpart
    }

    pub fn zpart(&self) -> &[u32] {
        &self.zpart
    }

    pub fn phase(&self) -> u32 {
        self.phase
    }

    #[inline]
    fn add_x(&mut self, i: usize, e: u32) {
        self.xpart[i] = (self.xpart[i] + e) % self.modulus;
    }

    #[inline]
    fn add_z(&mut self, i: usize, e: u32) {
        self.zpart[i] = (self.zpart[i] + e) % self.modulus;
    }

    /// Qudits on which the operator acts nontrivially.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(|&i| self.xpart[i] != 0 || self.zpart[i] != 0)
    }

    pub fn weight(&self) -> usize {
        self.support().count()
    }

    /// True when the X and Z exponents all vanish (the phase may not).
    pub fn is_scalar(&self) -> bool {
        self.xpart.iter().all(|&e| e == 0) && self.zpart.iter().all(|&e| e == 0)
    }

    fn check_shape(&self, other: &Self) -> Result<(), PauliError> {
        if self.n() != other.n() {
            return Err(PauliError::Length(self.n(), other.n()));
        }
        if self.modulus != other.modulus {
            return Err(PauliError::Modulus(self.modulus, other.modulus));
        }
        Ok(())
    }

    /// Operator product `self · other` with phase tracking.
    pub fn mul(&self, other: &Self) -> Result<Self, PauliError> {
        self.check_shape(other)?;
        let d = self.modulus as u64;
        let cross: u64 = self.zpart.iter().zip(&other.xpart).map(|(&z, &x)| z as u64 * x as u64 % d).sum();
        let phase = ((self.phase as u64 + other.phase as u64 + cross) % d) as u32;
        let add = |a: &[u32], b: &[u32]| a.iter().zip(b).map(|(x, y)| (x + y) % self.modulus).collect();
        Ok(PauliOperator { modulus: self.modulus, xpart: add(&self.xpart, &other.xpart), zpart: add(&self.zpart, &other.zpart), phase })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.n(), self.modulus);
        for _ in 0..e {
            acc = acc.mul(self).expect("same shape");
        }
        acc
    }

    /// Exchanges the X and Z exponents on every `-` layer qudit (a Hadamard on
    /// the lower layer). Only meaningful for phase-free single-letter factors.
    pub fn swap_minus_layer(&self, q: usize) -> Self {
        let mut out = self.clone();
        for i in 0..self.n() {
            if QubitIndex::from_flat(i, q).layer == Layer::Minus {
                out.xpart[i] = self.zpart[i];
                out.zpart[i] = self.xpart[i];
            }
        }
        out
    }
}

/// `⟨P,Q⟩ = Σ (P.z·Q.x − P.x·Q.z) mod d`; zero iff `P` and `Q` commute, and
/// in general `PQ = ω^⟨P,Q⟩ QP`.
pub fn symplectic_product(p: &PauliOperator, q: &PauliOperator) -> Result<u32, PauliError> {
    p.check_shape(q)?;
    let d = p.modulus as u64;
    let mut acc = 0u64;
    for i in 0..p.n() {
        let plus = p.zpart[i] as u64 * q.xpart[i] as u64 % d;
        let minus = p.xpart[i] as u64 * q.zpart[i] as u64 % d;
        acc = (acc + plus + d - minus) % d;
    }
    Ok(acc as u32)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum GeneratorKind {
    /// `Z^χ_g`, or `U^χ_g` for qudit codes.
    Z,
    /// `X^χ_g`, or `V^χ_g` for qudit codes.
    X,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub op: PauliOperator,
    pub site: usize,
    pub kind: GeneratorKind,
    pub matrix: usize,
}

impl Generator {
    /// Short label such as `Z[0]@xy`.
    pub fn label(&self, group: &FiniteGroup) -> String {
        let k = match self.kind {
            GeneratorKind::Z => 'Z',
            GeneratorKind::X => 'X',
        };
        format!("{k}[{}]@{}", self.matrix, group.name(self.site))
    }
}

/// All generators of a code, ordered matrix-major, then by site, `Z` before `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerSet {
    group: Arc<FiniteGroup>,
    q: usize,
    modulus: u32,
    n_qubits: usize,
    /// Qubit generators are pure X or pure Z; qudit ones mix letters per layer.
    pure_type: bool,
    generators: Vec<Generator>,
}

impl StabilizerSet {
    /// Wraps arbitrary generators, e.g. for oracle checks on hand-built sets.
    pub fn from_generators(
        group: Arc<FiniteGroup>,
        q: usize,
        modulus: u32,
        n_qubits: usize,
        generators: Vec<Generator>,
    ) -> Result<Self, PauliError> {
        for g in &generators {
            if g.op.n() != n_qubits {
                return Err(PauliError::Length(g.op.n(), n_qubits));
            }
            if g.op.modulus() != modulus {
                return Err(PauliError::Modulus(g.op.modulus(), modulus));
            }
        }
        let pure_type = generators.iter().all(|g| match g.kind {
            GeneratorKind::Z => g.op.xpart.iter().all(|&e| e == 0),
            GeneratorKind::X => g.op.zpart.iter().all(|&e| e == 0),
        });
        Ok(StabilizerSet { group, q, modulus, n_qubits, pure_type, generators })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn is_pure_type(&self) -> bool {
        self.pure_type
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Precomputed translated sets for one matrix.
struct PairSets {
    /// `(χA)_k` supports.
    chi_a: Vec<Vec<usize>>,
    /// `(χᵀB)_k` supports.
    chi_t_b: Vec<Vec<usize>>,
}

impl PairSets {
    fn new(spec: &CodeSpec, i: usize) -> Result<Self, SpecError> {
        let (ca, cb) = spec.transformed_sets(i)?;
        Ok(PairSets {
            chi_a: ca.iter().map(|s| s.support().collect()).collect(),
            chi_t_b: cb.iter().map(|s| s.support().collect()).collect(),
        })
    }

    fn build(&self, group: &FiniteGroup, q: usize, g: usize) -> (PauliOperator, PauliOperator) {
        let n = 2 * q * group.order();
        let mut z = PauliOperator::identity(n, 2);
        let mut x = PauliOperator::identity(n, 2);
        for k in 1..=q {
            for &u in &self.chi_a[k - 1] {
                z.add_z(flat(group.mul_idx(g, u), Layer::Plus, k, q), 1);
                x.add_x(flat(group.mul_idx(g, group.inv_idx(u)), Layer::Minus, k, q), 1);
            }
            for &v in &self.chi_t_b[k - 1] {
                z.add_z(flat(group.mul_idx(v, g), Layer::Minus, k, q), 1);
                x.add_x(flat(group.mul_idx(group.inv_idx(v), g), Layer::Plus, k, q), 1);
            }
        }
        (z, x)
    }
}

/// `(Z^χ_g, X^χ_g)` for `χ = C_{matrix_index}`.
pub fn build_stabilizer_pair(spec: &CodeSpec, matrix_index: usize, g: GroupElement) -> Result<(PauliOperator, PauliOperator), SpecError> {
    let group = spec.group();
    let g = group.element(g.index()).ok().filter(|e| *e == g).ok_or(GroupError::GroupMismatch)?;
    let sets = PairSets::new(spec, matrix_index)?;
    Ok(sets.build(group, spec.q, g.index()))
}

pub fn build_all_stabilizers(spec: &CodeSpec) -> StabilizerSet {
    let group = spec.group().clone();
    let q = spec.q;
    let mut generators = Vec::with_capacity(2 * spec.matrices.len() * group.order());
    for i in 0..spec.matrices.len() {
        let sets = PairSets::new(spec, i).expect("validated spec");
        let pairs: Vec<(PauliOperator, PauliOperator)> = (0..group.order()).into_par_iter().map(|g| sets.build(&group, q, g)).collect();
        for (site, (z, x)) in pairs.into_iter().enumerate() {
            generators.push(Generator { op: z, site, kind: GeneratorKind::Z, matrix: i });
            generators.push(Generator { op: x, site, kind: GeneratorKind::X, matrix: i });
        }
    }
    let n = spec.n_qubits();
    StabilizerSet { group, q, modulus: 2, n_qubits: n, pure_type: true, generators }
}

/// `v_Bᵀ C_j C_i u_A + v_Bᵀ C_i C_j u_A` over the integers, where `u_A` and
/// `v_B` are the membership indicators of `u` in the `A_k` and `v` in the `B_k`.
/// Requires `g·u = v⁻¹·h`.
#[allow(clippy::too_many_arguments)]
pub fn overlap_count(
    spec: &CodeSpec,
    i: usize,
    j: usize,
    g: GroupElement,
    h: GroupElement,
    u: GroupElement,
    v: GroupElement,
) -> Result<i64, SpecError> {
    let grp = spec.group();
    let count = spec.matrices.len();
    let binary = |idx: usize| -> Result<&BinaryMatrix, SpecError> {
        match spec.matrices.get(idx) {
            Some(CodeMatrix::Binary(m)) => Ok(m),
            Some(CodeMatrix::Algebra(_)) => Err(SpecError::NotBinary),
            None => Err(SpecError::MatrixIndexOutOfRange { index: idx, count }),
        }
    };
    let (ci, cj) = (binary(i)?, binary(j)?);
    let lhs = grp.mul(g, u)?;
    let rhs = grp.mul(grp.inv(v)?, h)?;
    if lhs != rhs {
        return Err(SpecError::OverlapPrecondition);
    }
    let u_a: Vec<i64> = spec.a.iter().map(|s| s.contains(u.index()) as i64).collect();
    let v_b: Vec<i64> = spec.b.iter().map(|s| s.contains(v.index()) as i64).collect();
    let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
    let t1 = dot(&v_b, &cj.apply_integer(&ci.apply_integer(&u_a)));
    let t2 = dot(&v_b, &ci.apply_integer(&cj.apply_integer(&u_a)));
    Ok(t1 + t2)
}

/// Qudit generators `U^χ_g` (tagged [`GeneratorKind::Z`]) and `V^χ_g`
/// (tagged [`GeneratorKind::X`]):
///
/// ```text
/// U^χ_g = ∏_k ∏_u Z(g·u, +k)^{a_k(u)} ∏_v X(v·g, -k)^{b_k(v)}
/// V^χ_g = ∏_k ∏_v X(v⁻¹·g, +k)^{b_k(v)} ∏_u Z(g·u⁻¹, -k)^{a_k(u)}
/// ```
///
/// with `a_k = (χA)_k` and `b_k = (χᵀB)_k` as Z_d coefficient vectors; `U`
/// exponents go to the Z part and `V` exponents to the X part.
pub fn build_qudit_stabilizers(spec: &QuditCodeSpec) -> StabilizerSet {
    let group = spec.group().clone();
    let (q, d) = (spec.q, spec.modulus);
    let n = spec.n_qudits();
    let mut generators = Vec::with_capacity(2 * spec.matrices.len() * group.order());
    for (i, chi) in spec.matrices.iter().enumerate() {
        let chi_a = chi.apply(&spec.a).expect("validated spec");
        let chi_t_b = chi.transpose().apply(&spec.b).expect("validated spec");
        let a: Vec<Vec<(usize, u32)>> = chi_a.iter().map(|s| s.support().collect()).collect();
        let b: Vec<Vec<(usize, u32)>> = chi_t_b.iter().map(|s| s.support().collect()).collect();
        let pairs: Vec<(PauliOperator, PauliOperator)> = (0..group.order())
            .into_par_iter()
            .map(|g| {
                let mut u_op = PauliOperator::identity(n, d);
                let mut v_op = PauliOperator::identity(n, d);
                for k in 1..=q {
                    for &(u, m) in &a[k - 1] {
                        u_op.add_z(flat(group.mul_idx(g, u), Layer::Plus, k, q), m);
                        v_op.add_z(flat(group.mul_idx(g, group.inv_idx(u)), Layer::Minus, k, q), m);
                    }
                    for &(v, m) in &b[k - 1] {
                        u_op.add_x(flat(group.mul_idx(v, g), Layer::Minus, k, q), m);
                        v_op.add_x(flat(group.mul_idx(group.inv_idx(v), g), Layer::Plus, k, q), m);
                    }
                }
                (u_op, v_op)
            })
            .collect();
        for (site, (u_op, v_op)) in pairs.into_iter().enumerate() {
            generators.push(Generator { op: u_op, site, kind: GeneratorKind::Z, matrix: i });
            generators.push(Generator { op: v_op, site, kind: GeneratorKind::X, matrix: i });
        }
    }
    StabilizerSet::from_generators(group, q, d, n, generators).expect("consistent shapes")
}
