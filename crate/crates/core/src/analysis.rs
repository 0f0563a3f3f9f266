//! Commutation checks, logical dimension and locality of built codes.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, BinaryMatrix, CodeMatrix, ZdMatrix};
use crate::bits::BitVec;
use crate::group::FiniteGroup;
use crate::linalg::{is_prime, kernel_basis_fp, rank_f2, rank_fp, BitMatrix, LinalgError, PrimeFieldMatrix};
use crate::metric::{metric_sets_from_qudit_spec, metric_sets_from_spec, MetricSpec};
use crate::pauli::{
    build_all_stabilizers, build_qudit_stabilizers, symplectic_product, CodeSpec, GeneratorKind, PauliOperator, QubitIndex, QuditCodeSpec,
    SpecError, StabilizerSet,
};
use crate::presets;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("stabilizers do not commute: {first} and {second} have symplectic product {value}")]
    NonCommuting { first: String, second: String, value: u32 },
    #[error("composite-d rank not supported (d = {0}); use a prime d")]
    CompositeModulus(u32),
    #[error("phase-obstructed stabilizer group: a product of generators equals w^{phase}·I")]
    PhaseObstructed { phase: u32 },
    #[error("generator {generator} reaches qubit site {site} at infinite distance")]
    InfiniteRadius { generator: String, site: String },
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Matrices that can be multiplied and compared, for the commutation check.
pub trait MatrixProduct: Clone + PartialEq + fmt::Debug {
    fn product(&self, other: &Self) -> Result<Self, AlgebraError>;
}

impl MatrixProduct for CodeMatrix {
    fn product(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.mul(other)
    }
}

impl MatrixProduct for BinaryMatrix {
    fn product(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.mul(other)
    }
}

impl MatrixProduct for ZdMatrix {
    fn product(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.mul(other)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonCommutingPair<M> {
    pub i: usize,
    pub j: usize,
    /// `C_i C_j`
    pub ij: M,
    /// `C_j C_i`
    pub ji: M,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommuteCheck<M> {
    pub commute: bool,
    /// The first pair `i < j` that fails, in lexicographic order.
    pub witness: Option<NonCommutingPair<M>>,
}

pub fn matrices_commute_check<M: MatrixProduct>(matrices: &[M]) -> Result<CommuteCheck<M>, AlgebraError> {
    for i in 0..matrices.len() {
        for j in i + 1..matrices.len() {
            let ij = matrices[i].product(&matrices[j])?;
            let ji = matrices[j].product(&matrices[i])?;
            if ij != ji {
                return Ok(CommuteCheck { commute: false, witness: Some(NonCommutingPair { i, j, ij, ji }) });
            }
        }
    }
    Ok(CommuteCheck { commute: true, witness: None })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Generator indices, `first < second`.
    pub first: usize,
    pub second: usize,
    pub value: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutationReport {
    /// Unordered generator pairs covered by the check.
    pub total_pairs: u64,
    /// Pairs whose product was actually evaluated; all others share no
    /// qubit or are both of the same pure type.
    pub evaluated_pairs: u64,
    pub violations: Vec<Violation>,
}

impl CommutationReport {
    pub fn is_commuting(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Symplectic product of every generator pair. For pure-type sets only
/// Z-versus-X pairs can fail; pairs with disjoint supports are skipped.
pub fn verify_commutation(set: &StabilizerSet) -> CommutationReport {
    let gens = set.generators();
    let m = gens.len();
    let mut by_qubit: Vec<Vec<usize>> = vec![Vec::new(); set.n_qubits()];
    for (idx, g) in gens.iter().enumerate() {
        for qb in g.op.support() {
            by_qubit[qb].push(idx);
        }
    }
    let pure = set.is_pure_type();
    let candidates = |a: usize| -> Vec<usize> {
        let mut out: Vec<usize> = gens[a].op.support().flat_map(|qb| by_qubit[qb].iter().copied()).filter(|&b| b > a).collect();
        out.sort_unstable();
        out.dedup();
        if pure {
            out.retain(|&b| gens[b].kind != gens[a].kind);
        }
        out
    };
    let per_gen: Vec<(u64, Vec<Violation>)> = (0..m)
        .into_par_iter()
        .map(|a| {
            let cands = candidates(a);
            let violations = cands
                .iter()
                .filter_map(|&b| {
                    let value = symplectic_product(&gens[a].op, &gens[b].op).expect("same shape");
                    (value != 0).then_some(Violation { first: a, second: b, value })
                })
                .collect();
            (cands.len() as u64, violations)
        })
        .collect();
    let evaluated_pairs = per_gen.iter().map(|(c, _)| c).sum();
    let violations = per_gen.into_iter().flat_map(|(_, v)| v).collect();
    let total_pairs = (m as u64) * (m as u64).saturating_sub(1) / 2;
    CommutationReport { total_pairs, evaluated_pairs, violations }
}

/// `dim = d^k` of the common +1 eigenspace, with `k = N - rank`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegeneracyResult {
    pub n_qubits: usize,
    pub n_generators: usize,
    pub rank: usize,
    /// Logical qubits (or qudits when `modulus > 2`).
    pub k: usize,
    pub modulus: u32,
}

impl DegeneracyResult {
    /// `log₂` of the ground-space dimension.
    pub fn log2_degeneracy(&self) -> f64 {
        self.k as f64 * (self.modulus as f64).log2()
    }
}

fn non_commuting_error(set: &StabilizerSet, v: &Violation) -> AnalysisError {
    let gens = set.generators();
    AnalysisError::NonCommuting { first: gens[v.first].label(set.group()), second: gens[v.second].label(set.group()), value: v.value }
}

/// Rank of the `m × 2N` check matrix and the resulting logical count.
/// Refuses non-commuting sets, composite moduli and sets whose generated
/// group contains a nontrivial scalar.
pub fn stabilizer_degeneracy(set: &StabilizerSet) -> Result<DegeneracyResult, AnalysisError> {
    let report = verify_commutation(set);
    if let Some(v) = report.violations.first() {
        return Err(non_commuting_error(set, v));
    }
    let d = set.modulus();
    let n = set.n_qubits();
    let gens = set.generators();
    let rank = if d == 2 && set.is_pure_type() && gens.iter().all(|g| g.op.phase() == 0) {
        // Z-type rows live in the Z half, X-type rows in the X half, so the
        // check matrix is block diagonal. With zero phases nothing can
        // obstruct: a product of X-type (or Z-type) operators equal to I has
        // phase 0.
        let block = |kind: GeneratorKind, x: bool| {
            let rows: Vec<BitVec> = gens
                .iter()
                .filter(|g| g.kind == kind)
                .map(|g| {
                    let part = if x { g.op.xpart() } else { g.op.zpart() };
                    BitVec::from_indices(n, part.iter().enumerate().filter(|(_, &e)| e % 2 == 1).map(|(i, _)| i))
                })
                .collect();
            BitMatrix::from_rows(n, &rows).map(|m| rank_f2(&m))
        };
        block(GeneratorKind::Z, false)? + block(GeneratorKind::X, true)?
    } else {
        if !is_prime(d) {
            return Err(AnalysisError::CompositeModulus(d));
        }
        let rows: Vec<Vec<u32>> = gens.iter().map(|g| g.op.xpart().iter().chain(g.op.zpart()).map(|&e| e % d).collect()).collect();
        let mat = PrimeFieldMatrix::from_rows(&rows, d)?;
        let rank = rank_fp(&mat)?;
        if let Some(phase) = obstruction_phase(set, &mat)? {
            return Err(AnalysisError::PhaseObstructed { phase });
        }
        rank
    };
    Ok(DegeneracyResult { n_qubits: n, n_generators: gens.len(), rank, k: n - rank, modulus: d })
}

/// For each dependency `Σ cᵢ rowᵢ = 0`, the ordered product `∏ Sᵢ^{cᵢ}` is a
/// scalar `ω^φ`; a nonzero `φ` means the +1 eigenspace is empty.
fn obstruction_phase(set: &StabilizerSet, mat: &PrimeFieldMatrix) -> Result<Option<u32>, AnalysisError> {
    let gens = set.generators();
    // S^d is a scalar; at d = 2 it is -I when S has an odd number of XZ factors.
    for g in gens {
        let phase = g.op.pow(set.modulus()).phase();
        if phase != 0 {
            return Ok(Some(phase));
        }
    }
    let deps = kernel_basis_fp(&mat.transpose())?;
    for c in deps {
        let mut acc = PauliOperator::identity(set.n_qubits(), set.modulus());
        for (g, &e) in gens.iter().zip(&c) {
            if e != 0 {
                acc = acc.mul(&g.op.pow(e)).expect("same shape");
            }
        }
        debug_assert!(acc.is_scalar());
        if acc.phase() != 0 {
            return Ok(Some(acc.phase()));
        }
    }
    Ok(None)
}

pub fn logical_qubit_count(spec: &CodeSpec) -> Result<DegeneracyResult, AnalysisError> {
    stabilizer_degeneracy(&build_all_stabilizers(spec))
}

pub fn logical_qudit_count(spec: &QuditCodeSpec) -> Result<DegeneracyResult, AnalysisError> {
    if !is_prime(spec.modulus()) {
        return Err(AnalysisError::CompositeModulus(spec.modulus()));
    }
    stabilizer_degeneracy(&build_qudit_stabilizers(spec))
}

/// Deferred construction of one sweep point.
pub type SpecBuilder = Arc<dyn Fn() -> Result<AnySpec, String> + Send + Sync>;

/// A code family indexed by a size parameter.
#[derive(Clone)]
pub enum SweepFamily {
    HaahA(Vec<usize>),
    HaahB(Vec<usize>),
    /// `(n, a, b)` triples.
    LrGcd(Vec<(usize, usize, usize)>),
    /// Trivial code on `Z_n` for each `n`.
    Trivial(Vec<usize>),
    /// Any builder, keyed by a label per point.
    Custom(Vec<(String, SpecBuilder)>),
}

impl fmt::Debug for SweepFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepFamily::HaahA(s) => write!(f, "HaahA({s:?})"),
            SweepFamily::HaahB(s) => write!(f, "HaahB({s:?})"),
            SweepFamily::LrGcd(p) => write!(f, "LrGcd({p:?})"),
            SweepFamily::Trivial(s) => write!(f, "Trivial({s:?})"),
            SweepFamily::Custom(p) => write!(f, "Custom({:?})", p.iter().map(|(l, _)| l).collect::<Vec<_>>()),
        }
    }
}

/// Either kind of validated code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnySpec {
    Qubit(CodeSpec),
    Qudit(QuditCodeSpec),
}

impl AnySpec {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        match self {
            AnySpec::Qubit(s) => s.group(),
            AnySpec::Qudit(s) => s.group(),
        }
    }

    pub fn stabilizers(&self) -> StabilizerSet {
        match self {
            AnySpec::Qubit(s) => build_all_stabilizers(s),
            AnySpec::Qudit(s) => build_qudit_stabilizers(s),
        }
    }

    pub fn degeneracy(&self) -> Result<DegeneracyResult, AnalysisError> {
        match self {
            AnySpec::Qubit(s) => logical_qubit_count(s),
            AnySpec::Qudit(s) => logical_qudit_count(s),
        }
    }

    pub fn metric(&self) -> MetricSpec {
        match self {
            AnySpec::Qubit(s) => metric_sets_from_spec(s),
            AnySpec::Qudit(s) => metric_sets_from_qudit_spec(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub label: String,
    pub result: Result<DegeneracyResult, String>,
}

/// Logical counts along a family, in input order.
pub fn degeneracy_sweep(family: &SweepFamily) -> Vec<SweepRow> {
    type Job = (String, Box<dyn Fn() -> Result<AnySpec, String> + Send + Sync>);
    let err = |e: SpecError| e.to_string();
    let jobs: Vec<Job> = match family {
        SweepFamily::HaahA(sizes) => sizes
            .iter()
            .map(|&l| -> Job { (format!("L={l}"), Box::new(move || presets::haah_a(l).map(AnySpec::Qubit).map_err(err))) })
            .collect(),
        SweepFamily::HaahB(sizes) => sizes
            .iter()
            .map(|&l| -> Job { (format!("L={l}"), Box::new(move || presets::haah_b(l).map(AnySpec::Qubit).map_err(err))) })
            .collect(),
        SweepFamily::LrGcd(params) => params
            .iter()
            .map(|&(n, a, b)| -> Job {
                (format!("n={n},a={a},b={b}"), Box::new(move || presets::lr_gcd(n, a, b).map(AnySpec::Qubit).map_err(err)))
            })
            .collect(),
        SweepFamily::Trivial(sizes) => sizes
            .iter()
            .map(|&n| -> Job {
                (
                    format!("n={n}"),
                    Box::new(move || {
                        let g = FiniteGroup::cyclic(n).map_err(|e| e.to_string())?;
                        presets::trivial(Arc::new(g)).map(AnySpec::Qubit).map_err(err)
                    }),
                )
            })
            .collect(),
        SweepFamily::Custom(points) => points
            .iter()
            .map(|(label, f)| -> Job {
                let f = f.clone();
                (label.clone(), Box::new(move || f()))
            })
            .collect(),
    };
    jobs.into_par_iter()
        .map(|(label, build)| {
            let result = build().and_then(|spec| spec.degeneracy().map_err(|e| e.to_string()));
            SweepRow { label, result }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalityReport {
    /// Largest `d(site of qubit, site of generator)` over all generators.
    pub radius: u32,
    pub metric: MetricSpec,
}

fn locality_of(set: &StabilizerSet, metric: MetricSpec) -> Result<LocalityReport, AnalysisError> {
    let group = set.group();
    let q = set.q();
    let mut dist_cache: Vec<Option<Vec<Option<u32>>>> = vec![None; group.order()];
    let mut radius = 0;
    for g in set.generators() {
        let dist = dist_cache[g.site].get_or_insert_with(|| metric.distances_from(g.site));
        for qb in g.op.support() {
            let site = QubitIndex::from_flat(qb, q).site;
            match dist[site] {
                Some(r) => radius = radius.max(r),
                None => {
                    return Err(AnalysisError::InfiniteRadius { generator: g.label(group), site: group.name(site) });
                }
            }
        }
    }
    Ok(LocalityReport { radius, metric })
}

/// Support radius of every generator under the metric derived from the spec.
pub fn locality_check(spec: &CodeSpec) -> Result<LocalityReport, AnalysisError> {
    locality_of(&build_all_stabilizers(spec), metric_sets_from_spec(spec))
}

pub fn qudit_locality_check(spec: &QuditCodeSpec) -> Result<LocalityReport, AnalysisError> {
    locality_of(&build_qudit_stabilizers(spec), metric_sets_from_qudit_spec(spec))
}

/// Locality under an explicitly chosen metric.
pub fn locality_check_with(spec: &CodeSpec, metric: MetricSpec) -> Result<LocalityReport, AnalysisError> {
    locality_of(&build_all_stabilizers(spec), metric)
}
