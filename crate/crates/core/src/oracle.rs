//! Dense-state checks for small codes, independent of the rank computation.
//!
//! Operators act on computational basis states `|j₁…j_N⟩` as
//! `X^x Z^z |j⟩ = ω^{zj} |j + x⟩`, so every generator is a monomial matrix.
//! The common +1 eigenspace dimension equals `tr ∏ᵢ Pᵢ` with
//! `Pᵢ = (1/d) Σ_a Sᵢ^a`. Expanding the product and grouping basis states into
//! orbits under the generated group, an orbit contributes 1 exactly when
//! every closed walk through it has phase 1, and 0 otherwise. All arithmetic
//! is on integer phases.

use std::collections::VecDeque;

use thiserror::Error;

use crate::pauli::{PauliError, PauliOperator, StabilizerSet};

/// Default cap on `log₂(d^N)`.
pub const DEFAULT_CAP_BITS: u32 = 20;
/// The cap can be raised through the environment, but never past this.
pub const HARD_CAP_BITS: u32 = 24;
pub const CAP_ENV: &str = "XXZ_MAX_ORACLE_QUBITS";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("state space d^N = {d}^{n} exceeds the dense cap of 2^{cap} amplitudes")]
    TooLarge { d: u32, n: usize, cap: u32 },
    #[error("generators {0} and {1} do not commute")]
    NonCommuting(usize, usize),
    #[error("operator is not a well-defined monomial: different basis images for PQ and QP")]
    Inconsistent,
    #[error(transparent)]
    Pauli(#[from] PauliError),
}

/// Active cap in bits: the environment override if valid, else the default.
pub fn cap_bits() -> u32 {
    std::env::var(CAP_ENV).ok().and_then(|v| v.trim().parse::<u32>().ok()).map(|v| v.min(HARD_CAP_BITS)).unwrap_or(DEFAULT_CAP_BITS)
}

/// A generator compiled to per-qudit actions on a mixed-radix basis index.
#[derive(Clone, Debug)]
pub struct DenseOperator {
    d: u32,
    phase: u32,
    /// `(stride, x exponent, z exponent)` for each qudit in the support.
    actions: Vec<(u64, u32, u32)>,
}

/// Dimensions and compiled generators of a dense computation.
#[derive(Clone, Debug)]
pub struct DenseOperatorSpec {
    pub n: usize,
    pub d: u32,
    pub dim: u64,
    pub ops: Vec<DenseOperator>,
}

fn state_bits(d: u32, n: usize) -> f64 {
    n as f64 * (d as f64).log2()
}

impl DenseOperatorSpec {
    pub fn new(ops: &[PauliOperator], n: usize, d: u32, cap: u32) -> Result<Self, OracleError> {
        if state_bits(d, n) > cap as f64 + 1e-9 {
            return Err(OracleError::TooLarge { d, n, cap });
        }
        let strides: Vec<u64> = (0..n)
            .scan(1u64, |s, _| {
                let cur = *s;
                *s *= d as u64;
                Some(cur)
            })
            .collect();
        let dim = (d as u64).pow(n as u32);
        let ops = ops
            .iter()
            .map(|op| {
                if op.n() != n {
                    return Err(PauliError::Length(op.n(), n).into());
                }
                if op.modulus() != d {
                    return Err(PauliError::Modulus(op.modulus(), d).into());
                }
                let actions = op.support().map(|i| (strides[i], op.xpart()[i] % d, op.zpart()[i] % d)).collect();
                Ok(DenseOperator { d, phase: op.phase() % d, actions })
            })
            .collect::<Result<Vec<_>, OracleError>>()?;
        Ok(DenseOperatorSpec { n, d, dim, ops })
    }

    pub fn from_set(set: &StabilizerSet) -> Result<Self, OracleError> {
        let ops: Vec<PauliOperator> = set.generators().iter().map(|g| g.op.clone()).collect();
        Self::new(&ops, set.n_qubits(), set.modulus(), cap_bits())
    }
}

impl DenseOperator {
    /// `op |state⟩ = ω^phase |image⟩`.
    pub fn apply(&self, state: u64) -> (u64, u32) {
        let d = self.d as u64;
        let mut out = state;
        let mut phase = self.phase as u64;
        for &(stride, x, z) in &self.actions {
            let digit = (state / stride) % d;
            phase += z as u64 * digit;
            let new = (digit + x as u64) % d;
            out = out + new * stride - digit * stride;
        }
        (out, (phase % d) as u32)
    }
}

/// `c` with `PQ = ω^c QP`, measured on every basis state. Errors if the
/// relation is not uniform, which would mean a bug in the operator model.
pub fn commute_dense(p: &PauliOperator, q: &PauliOperator) -> Result<u32, OracleError> {
    if p.n() != q.n() {
        return Err(PauliError::Length(p.n(), q.n()).into());
    }
    if p.modulus() != q.modulus() {
        return Err(PauliError::Modulus(p.modulus(), q.modulus()).into());
    }
    let spec = DenseOperatorSpec::new(&[p.clone(), q.clone()], p.n(), p.modulus(), cap_bits())?;
    let (dp, dq) = (&spec.ops[0], &spec.ops[1]);
    let d = spec.d;
    let mut found = None;
    for s in 0..spec.dim {
        let c = phase_difference(dp, dq, s, d)?;
        match found {
            None => found = Some(c),
            Some(prev) if prev != c => return Err(OracleError::Inconsistent),
            _ => {}
        }
    }
    Ok(found.unwrap_or(0))
}

fn phase_difference(p: &DenseOperator, q: &DenseOperator, s: u64, d: u32) -> Result<u32, OracleError> {
    let (t1, a1) = q.apply(s);
    let (pq, a2) = p.apply(t1);
    let (t2, b1) = p.apply(s);
    let (qp, b2) = q.apply(t2);
    if pq != qp {
        return Err(OracleError::Inconsistent);
    }
    Ok(((a1 + a2) % d + d - (b1 + b2) % d) % d)
}

/// Dimension of the common +1 eigenspace of all generators, by explicit
/// enumeration of the `d^N` basis states.
pub fn ground_space_dim_dense(set: &StabilizerSet) -> Result<u64, OracleError> {
    let spec = DenseOperatorSpec::from_set(set)?;
    ground_space_dim_of(&spec)
}

pub fn ground_space_dim_of(spec: &DenseOperatorSpec) -> Result<u64, OracleError> {
    let d = spec.d;
    // Weyl operators satisfy PQ = ω^c QP with c independent of the state, so
    // one basis state per pair settles commutation.
    for i in 0..spec.ops.len() {
        for j in i + 1..spec.ops.len() {
            if phase_difference(&spec.ops[i], &spec.ops[j], 0, d)? != 0 {
                return Err(OracleError::NonCommuting(i, j));
            }
        }
    }
    const UNSEEN: u32 = u32::MAX;
    let mut phase = vec![UNSEEN; spec.dim as usize];
    let mut queue = VecDeque::new();
    let mut count = 0u64;
    for root in 0..spec.dim {
        if phase[root as usize] != UNSEEN {
            continue;
        }
        phase[root as usize] = 0;
        queue.push_back(root);
        let mut consistent = true;
        while let Some(s) = queue.pop_front() {
            let ps = phase[s as usize];
            for op in &spec.ops {
                let (t, a) = op.apply(s);
                let want = (ps + a) % d;
                let slot = &mut phase[t as usize];
                if *slot == UNSEEN {
                    *slot = want;
                    queue.push_back(t);
                } else if *slot != want {
                    consistent = false;
                }
            }
        }
        if consistent {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{WeightedAlgebraElement, ZdMatrix};
    use crate::analysis::{logical_qubit_count, logical_qudit_count};
    use crate::group::FiniteGroup;
    use crate::linalg::is_prime;
    use crate::pauli::{build_all_stabilizers, build_qudit_stabilizers, symplectic_product, Generator, GeneratorKind, QuditCodeSpec};
    use crate::presets;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn random_op(rng: &mut ChaCha8Rng, n: usize, d: u32) -> PauliOperator {
        let x = (0..n).map(|_| rng.gen_range(0..d)).collect();
        let z = (0..n).map(|_| rng.gen_range(0..d)).collect();
        PauliOperator::new(d, x, z, rng.gen_range(0..d)).unwrap()
    }

    #[test]
    fn dense_commutation_matches_symplectic() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for d in [2u32, 3, 5] {
            let n = if d == 5 { 5 } else { 8 };
            for _ in 0..500 / (d as usize) {
                let p = random_op(&mut rng, n, d);
                let q = random_op(&mut rng, n, d);
                assert_eq!(commute_dense(&p, &q).unwrap(), symplectic_product(&p, &q).unwrap());
            }
        }
    }

    #[test]
    fn single_qudit_relation() {
        for d in [2u32, 3, 5, 4] {
            let z = PauliOperator::single_z(1, d, 0);
            let x = PauliOperator::single_x(1, d, 0);
            // ZX = ωXZ
            assert_eq!(commute_dense(&z, &x).unwrap(), 1);
            assert_eq!(commute_dense(&x, &z).unwrap(), d - 1);
        }
    }

    /// Literal expansion `tr ∏(Σ_a Sᵢ^a) / d^m` for prime `d`, reducing the
    /// cyclotomic sum `Σ c_φ ω^φ` with `1 + ω + … + ω^{d-1} = 0`.
    fn trace_expansion(ops: &[PauliOperator], n: usize, d: u32) -> u64 {
        assert!(is_prime(d));
        let m = ops.len();
        let dim = (d as u64).pow(n as u32);
        let mut counts = vec![0i64; d as usize];
        let mut exps = vec![0u32; m];
        loop {
            let mut prod = PauliOperator::identity(n, d);
            for (op, &e) in ops.iter().zip(&exps) {
                prod = prod.mul(&op.pow(e)).unwrap();
            }
            let dense = DenseOperatorSpec::new(&[prod], n, d, 20).unwrap();
            for s in 0..dim {
                let (t, a) = dense.ops[0].apply(s);
                if t == s {
                    counts[a as usize] += 1;
                }
            }
            let mut pos = 0;
            loop {
                if pos == m {
                    let c1 = counts[1];
                    assert!(counts[1..].iter().all(|&c| c == c1), "trace is not rational");
                    let total = counts[0] - c1;
                    let denom = (d as i64).pow(m as u32);
                    assert_eq!(total % denom, 0);
                    return (total / denom) as u64;
                }
                exps[pos] += 1;
                if exps[pos] < d {
                    break;
                }
                exps[pos] = 0;
                pos += 1;
            }
        }
    }

    fn gens(ops: Vec<PauliOperator>) -> StabilizerSet {
        let n = ops[0].n();
        let d = ops[0].modulus();
        let g = ops.into_iter().enumerate().map(|(site, op)| Generator { op, site, kind: GeneratorKind::Z, matrix: 0 }).collect();
        StabilizerSet::from_generators(Arc::new(FiniteGroup::cyclic(1).unwrap()), 1, d, n, g).unwrap()
    }

    #[test]
    fn orbit_count_matches_trace_expansion() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for d in [2u32, 3] {
            let n = if d == 2 { 5 } else { 3 };
            let mut done = 0;
            while done < 15 {
                // Build commuting sets by drawing and keeping what commutes.
                let mut ops: Vec<PauliOperator> = Vec::new();
                for _ in 0..8 {
                    let cand = random_op(&mut rng, n, d);
                    // (1 + S + … + S^{d-1})/d is a projector only when S^d = I.
                    let order_d = cand.pow(d).phase() == 0;
                    if order_d && ops.iter().all(|o| symplectic_product(o, &cand).unwrap() == 0) {
                        ops.push(cand);
                    }
                    if ops.len() == 3 {
                        break;
                    }
                }
                let set = gens(ops.clone());
                assert_eq!(ground_space_dim_dense(&set).unwrap(), trace_expansion(&ops, n, d), "{ops:?}");
                done += 1;
            }
        }
    }

    #[test]
    fn simple_dimensions() {
        let zz = PauliOperator::new(2, vec![0, 0], vec![1, 1], 0).unwrap();
        let xx = PauliOperator::new(2, vec![1, 1], vec![0, 0], 0).unwrap();
        assert_eq!(ground_space_dim_dense(&gens(vec![zz.clone(), xx.clone()])).unwrap(), 1);
        assert_eq!(ground_space_dim_dense(&gens(vec![zz.clone()])).unwrap(), 2);
        let minus = PauliOperator::new(2, vec![0, 0], vec![1, 1], 1).unwrap();
        assert_eq!(ground_space_dim_dense(&gens(vec![zz.clone(), minus])).unwrap(), 0);
        let z1 = PauliOperator::single_z(2, 2, 0);
        let x1 = PauliOperator::single_x(2, 2, 0);
        assert_eq!(ground_space_dim_dense(&gens(vec![z1, x1])), Err(OracleError::NonCommuting(0, 1)));
        // XZ squares to -I, so it has no +1 eigenvector.
        let xz = PauliOperator::new(2, vec![1], vec![1], 0).unwrap();
        assert_eq!(ground_space_dim_dense(&gens(vec![xz])).unwrap(), 0);
    }

    #[test]
    fn haah_a_l2_dense() {
        let spec = presets::haah_a(2).unwrap();
        let set = build_all_stabilizers(&spec);
        let dim = ground_space_dim_dense(&set).unwrap();
        assert_eq!(dim, 1 << logical_qubit_count(&spec).unwrap().k);
        assert_eq!(dim, 64);
    }

    #[test]
    fn small_codes_agree_with_rank() {
        for spec in [presets::lr_gcd(4, 1, 2).unwrap(), presets::lr_gcd(6, 2, 4).unwrap(), presets::lr_gcd(5, 1, 3).unwrap()] {
            let dim = ground_space_dim_dense(&build_all_stabilizers(&spec)).unwrap();
            assert_eq!(dim, 1 << logical_qubit_count(&spec).unwrap().k);
        }
    }

    #[test]
    fn qudit_code_agrees_with_rank() {
        let g = Arc::new(FiniteGroup::cyclic(3).unwrap());
        let d = 3;
        let a = WeightedAlgebraElement::from_coeffs(g.clone(), d, vec![1, 2, 0]).unwrap();
        let b = WeightedAlgebraElement::from_coeffs(g.clone(), d, vec![1, 0, 1]).unwrap();
        let spec = QuditCodeSpec::new(g, d, vec![a], vec![b], vec![ZdMatrix::identity(1, d)]).unwrap();
        let dim = ground_space_dim_dense(&build_qudit_stabilizers(&spec)).unwrap();
        let k = logical_qudit_count(&spec).unwrap().k;
        assert_eq!(dim, 3u64.pow(k as u32));
    }

    #[test]
    fn refuses_large_states() {
        let spec = presets::haah_a(3).unwrap();
        let set = build_all_stabilizers(&spec);
        assert!(matches!(ground_space_dim_dense(&set), Err(OracleError::TooLarge { .. })));
        assert!(cap_bits() <= HARD_CAP_BITS);
    }
}
