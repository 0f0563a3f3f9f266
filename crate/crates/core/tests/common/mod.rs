//! Generators and independent checks shared by the integration suites.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use xxz_codes::algebra::{AlgebraElement, AlgebraMatrix, BinaryMatrix, CodeMatrix, WeightedAlgebraElement, ZdMatrix};
use xxz_codes::group::FiniteGroup;
use xxz_codes::pauli::{CodeSpec, GeneratorKind, QuditCodeSpec, StabilizerSet};

/// Z_n, Z_l×Z_m×Z_n, S_3 or D_4, order at most `max_order`.
pub fn random_group(rng: &mut ChaCha8Rng, max_order: usize) -> Arc<FiniteGroup> {
    loop {
        let g = match rng.gen_range(0..4) {
            0 => FiniteGroup::cyclic(rng.gen_range(1..=max_order)).unwrap(),
            1 => {
                let dims = [rng.gen_range(1..=4), rng.gen_range(1..=3), rng.gen_range(1..=3)];
                if dims.iter().product::<usize>() > max_order {
                    continue;
                }
                FiniteGroup::torus(dims).unwrap()
            }
            2 => FiniteGroup::symmetric(3).unwrap(),
            _ => FiniteGroup::dihedral(4).unwrap(),
        };
        if g.order() <= max_order {
            return Arc::new(g);
        }
    }
}

pub fn random_subset(rng: &mut ChaCha8Rng, g: &Arc<FiniteGroup>) -> AlgebraElement {
    let p = rng.gen_range(0.1..0.6);
    AlgebraElement::from_indices(g.clone(), (0..g.order()).filter(|_| rng.gen_bool(p))).unwrap()
}

pub fn random_binary(rng: &mut ChaCha8Rng, q: usize) -> BinaryMatrix {
    let rows: Vec<Vec<u32>> = (0..q).map(|_| (0..q).map(|_| rng.gen_range(0..2)).collect()).collect();
    BinaryMatrix::from_rows(&rows).unwrap()
}

/// Random spec with matrices `{I, M, M²}`; `M` is F₂[G]-valued for some
/// abelian groups.
pub fn random_code_spec(rng: &mut ChaCha8Rng, max_order: usize) -> CodeSpec {
    let g = random_group(rng, max_order);
    let q = rng.gen_range(1..=3);
    let a: Vec<AlgebraElement> = (0..q).map(|_| random_subset(rng, &g)).collect();
    let b: Vec<AlgebraElement> = (0..q).map(|_| random_subset(rng, &g)).collect();
    let matrices: Vec<CodeMatrix> = if g.is_abelian() && rng.gen_bool(0.4) {
        let rows = (0..q).map(|_| (0..q).map(|_| random_subset(rng, &g)).collect()).collect();
        let m = AlgebraMatrix::new(g.clone(), rows).unwrap();
        vec![AlgebraMatrix::identity(g.clone(), q).unwrap().into(), m.clone().into(), m.pow(2).into()]
    } else {
        let m = random_binary(rng, q);
        vec![BinaryMatrix::identity(q).into(), m.clone().into(), m.pow(2).into()]
    };
    CodeSpec::new(g, a, b, matrices).expect("powers of one matrix commute")
}

pub fn random_qudit_spec(rng: &mut ChaCha8Rng, d: u32, max_order: usize, max_q: usize) -> QuditCodeSpec {
    let g = random_group(rng, max_order);
    let q = rng.gen_range(1..=max_q);
    let mut weighted = || {
        let coeffs = (0..g.order()).map(|_| if rng.gen_bool(0.4) { rng.gen_range(0..d) } else { 0 }).collect();
        WeightedAlgebraElement::from_coeffs(g.clone(), d, coeffs).unwrap()
    };
    let a: Vec<_> = (0..q).map(|_| weighted()).collect();
    let b: Vec<_> = (0..q).map(|_| weighted()).collect();
    let rows: Vec<Vec<u32>> = (0..q).map(|_| (0..q).map(|_| rng.gen_range(0..d)).collect()).collect();
    let m = ZdMatrix::from_rows(&rows, d).unwrap();
    QuditCodeSpec::new(g, d, a, b, vec![ZdMatrix::identity(q, d), m.clone(), m.pow(2)]).unwrap()
}

/// Commutation of pure-type qubit generators by counting shared qubits,
/// without the symplectic product. Returns the number of odd Z/X overlaps.
pub fn odd_overlaps(set: &StabilizerSet) -> usize {
    let supports: Vec<(GeneratorKind, HashSet<usize>)> = set.generators().iter().map(|g| (g.kind, g.op.support().collect())).collect();
    let mut odd = 0;
    for (ka, sa) in &supports {
        if *ka != GeneratorKind::Z {
            continue;
        }
        for (kb, sb) in &supports {
            if *kb == GeneratorKind::X && sa.intersection(sb).count() % 2 == 1 {
                odd += 1;
            }
        }
    }
    odd
}

fn table_from<T: Clone + Ord>(elements: &[T], mul: impl Fn(&T, &T) -> T) -> FiniteGroup {
    let index: BTreeMap<T, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let table: Vec<Vec<usize>> = elements.iter().map(|a| elements.iter().map(|b| index[&mul(a, b)]).collect()).collect();
    FiniteGroup::from_cayley_table(&table, None).unwrap()
}

/// Closure of permutation generators, identity first.
pub fn permutation_group(generators: &[Vec<usize>]) -> FiniteGroup {
    let n = generators[0].len();
    let compose = |a: &Vec<usize>, b: &Vec<usize>| -> Vec<usize> { (0..n).map(|i| b[a[i]]).collect() };
    let id: Vec<usize> = (0..n).collect();
    let mut elements = vec![id.clone()];
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id]);
    let mut i = 0;
    while i < elements.len() {
        for g in generators {
            let p = compose(&elements[i], g);
            if seen.insert(p.clone()) {
                elements.push(p);
            }
        }
        i += 1;
    }
    table_from(&elements, compose)
}

/// Dicyclic group of order 4m: `a^{2m} = 1`, `x² = a^m`, `x a x⁻¹ = a⁻¹`.
pub fn dicyclic(m: usize) -> FiniteGroup {
    let n = 2 * m;
    let elements: Vec<(usize, usize)> = (0..2).flat_map(|e| (0..n).map(move |k| (k, e))).collect();
    table_from(&elements, |&(k1, e1), &(k2, e2)| {
        let k = if e1 == 1 { (k1 + n - k2) % n } else { (k1 + k2) % n };
        if e1 + e2 == 2 {
            ((k + m) % n, 0)
        } else {
            (k, e1 + e2)
        }
    })
}

/// One representative of every isomorphism class of groups of order ≤ 12.
pub fn groups_up_to_12() -> Vec<(String, FiniteGroup)> {
    let c = |n| FiniteGroup::cyclic(n).unwrap();
    let mut out: Vec<(String, FiniteGroup)> = (1..=12).map(|n| (format!("Z{n}"), c(n))).collect();
    out.push(("Z2xZ2".into(), c(2).direct_product(&c(2)).unwrap()));
    out.push(("S3".into(), FiniteGroup::symmetric(3).unwrap()));
    out.push(("Z4xZ2".into(), c(4).direct_product(&c(2)).unwrap()));
    out.push(("Z2^3".into(), FiniteGroup::torus([2, 2, 2]).unwrap()));
    out.push(("D4".into(), FiniteGroup::dihedral(4).unwrap()));
    out.push(("Q8".into(), dicyclic(2)));
    out.push(("Z3xZ3".into(), c(3).direct_product(&c(3)).unwrap()));
    out.push(("D5".into(), FiniteGroup::dihedral(5).unwrap()));
    out.push(("Z6xZ2".into(), c(6).direct_product(&c(2)).unwrap()));
    out.push(("D6".into(), FiniteGroup::dihedral(6).unwrap()));
    out.push(("A4".into(), permutation_group(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])));
    out.push(("Dic3".into(), dicyclic(3)));
    out
}

pub fn random_inverse_closed(rng: &mut ChaCha8Rng, g: &Arc<FiniteGroup>) -> AlgebraElement {
    let mut picks: Vec<usize> = (0..g.order()).collect();
    picks.shuffle(rng);
    let take = rng.gen_range(0..=3.min(g.order()));
    let s = AlgebraElement::from_indices(g.clone(), picks.into_iter().take(take)).unwrap();
    s.union(&s.inverse_set()).unwrap()
}
