//! The LR word metric on a group.
//!
//! For inverse-closed `L, R ⊂ G`, `d(g, h)` is the least `a + b` such that
//! `g = s₁⋯s_a · h · t₁⋯t_b` with `sᵢ ∈ L`, `tⱼ ∈ R`. Left and right moves act
//! on opposite sides and commute, so a breadth-first search from `h` over the
//! moves `x ↦ s·x` and `x ↦ x·t` computes it exactly.

use std::collections::VecDeque;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::AlgebraElement;
use crate::group::{FiniteGroup, GroupElement};
use crate::pauli::{CodeSpec, QuditCodeSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetricError {
    #[error("{0} set is not inverse-closed")]
    NotInverseClosed(&'static str),
    #[error("element or set belongs to a different group")]
    GroupMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricSpec {
    group: Arc<FiniteGroup>,
    left: AlgebraElement,
    right: AlgebraElement,
    left_moves: Vec<usize>,
    right_moves: Vec<usize>,
}

impl MetricSpec {
    pub fn new(group: Arc<FiniteGroup>, left: AlgebraElement, right: AlgebraElement) -> Result<Self, MetricError> {
        if left.group().id() != group.id() || right.group().id() != group.id() {
            return Err(MetricError::GroupMismatch);
        }
        if !left.is_inverse_closed() {
            return Err(MetricError::NotInverseClosed("left"));
        }
        if !right.is_inverse_closed() {
            return Err(MetricError::NotInverseClosed("right"));
        }
        // Identity moves are self-loops and never shorten a path.
        let e = group.identity_index();
        let left_moves = left.support().filter(|&s| s != e).collect();
        let right_moves = right.support().filter(|&t| t != e).collect();
        Ok(MetricSpec { group, left, right, left_moves, right_moves })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn left(&self) -> &AlgebraElement {
        &self.left
    }

    pub fn right(&self) -> &AlgebraElement {
        &self.right
    }

    /// Distances `d(x, h)` for every `x`, `None` when unreachable.
    pub fn distances_from(&self, h: usize) -> Vec<Option<u32>> {
        self.bfs(h, u32::MAX)
    }

    fn bfs(&self, start: usize, max_radius: u32) -> Vec<Option<u32>> {
        let g = &self.group;
        let mut dist = vec![None; g.order()];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].expect("queued nodes have distances");
            if dx >= max_radius {
                continue;
            }
            let next = self.left_moves.iter().map(|&s| g.mul_idx(s, x)).chain(self.right_moves.iter().map(|&t| g.mul_idx(x, t)));
            for y in next.collect::<Vec<_>>() {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    fn owns(&self, x: GroupElement) -> Result<usize, MetricError> {
        if x.group_id() == self.group.id() {
            Ok(x.index())
        } else {
            Err(MetricError::GroupMismatch)
        }
    }
}

/// `d(g, h)`; `None` means infinite.
pub fn word_metric(ms: &MetricSpec, g: GroupElement, h: GroupElement) -> Result<Option<u32>, MetricError> {
    let (g, h) = (ms.owns(g)?, ms.owns(h)?);
    Ok(ms.distances_from(h)[g])
}

/// `{h : d(h, g) ≤ r}`.
pub fn ball(ms: &MetricSpec, g: GroupElement, r: u32) -> Result<AlgebraElement, MetricError> {
    let g = ms.owns(g)?;
    let dist = ms.bfs(g, r);
    let members = dist.iter().enumerate().filter(|(_, d)| d.is_some_and(|d| d <= r)).map(|(i, _)| i);
    Ok(AlgebraElement::from_indices(ms.group.clone(), members).expect("in range"))
}

fn closure_union(group: &Arc<FiniteGroup>, sets: impl IntoIterator<Item = AlgebraElement>) -> AlgebraElement {
    let mut acc = AlgebraElement::empty(group.clone());
    for s in sets {
        acc = acc.union(&s).expect("same group").union(&s.inverse_set()).expect("same group");
    }
    acc
}

/// Right set: all `(χA)_k` and their inverses; left set: all `(χᵀB)_k` and
/// their inverses, over every matrix `χ` of the spec.
pub fn metric_sets_from_spec(spec: &CodeSpec) -> MetricSpec {
    let group = spec.group();
    let mut right = Vec::new();
    let mut left = Vec::new();
    for i in 0..spec.matrices().len() {
        let (ca, cb) = spec.transformed_sets(i).expect("validated spec");
        right.extend(ca);
        left.extend(cb);
    }
    MetricSpec::new(group.clone(), closure_union(group, left), closure_union(group, right)).expect("inverse-closed by construction")
}

/// As [`metric_sets_from_spec`], using the supports of the multisets.
pub fn metric_sets_from_qudit_spec(spec: &QuditCodeSpec) -> MetricSpec {
    let group = spec.group();
    let mut right = Vec::new();
    let mut left = Vec::new();
    for chi in spec.matrices() {
        right.extend(chi.apply(spec.a()).expect("validated").iter().map(|w| w.support_set()));
        left.extend(chi.transpose().apply(spec.b()).expect("validated").iter().map(|w| w.support_set()));
    }
    MetricSpec::new(group.clone(), closure_union(group, left), closure_union(group, right)).expect("inverse-closed by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::build_stabilizer_pair;
    use crate::pauli::QubitIndex;
    use crate::presets;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(g: &Arc<FiniteGroup>, idx: &[usize]) -> AlgebraElement {
        AlgebraElement::from_indices(g.clone(), idx.iter().copied()).unwrap()
    }

    /// Word-shape oracle: smallest a+b with g ∈ L^a · h · R^b, built from
    /// explicit power sets rather than an interleaved search.
    fn word_oracle(g: &FiniteGroup, left: &[usize], right: &[usize], from: usize, to: usize) -> Option<u32> {
        let n = g.order();
        let powers = |moves: &[usize]| {
            let mut out = vec![vec![false; n]];
            out[0][g.identity_index()] = true;
            for _ in 0..n {
                let prev = out.last().unwrap().clone();
                let mut next = vec![false; n];
                for (p, _) in prev.iter().enumerate().filter(|(_, b)| **b) {
                    for &m in moves {
                        next[g.mul_idx(p, m)] = true;
                    }
                }
                out.push(next);
            }
            out
        };
        let lp = powers(left);
        let rp = powers(right);
        let mut best: Option<u32> = None;
        for (a, ls) in lp.iter().enumerate() {
            for (b, rs) in rp.iter().enumerate() {
                if best.is_some_and(|d| (a + b) as u32 >= d) {
                    continue;
                }
                let hit = (0..n).filter(|&s| ls[s]).any(|s| (0..n).filter(|&t| rs[t]).any(|t| g.mul_idx(g.mul_idx(s, to), t) == from));
                if hit {
                    best = Some((a + b) as u32);
                }
            }
        }
        best
    }

    fn random_inverse_closed(rng: &mut ChaCha8Rng, g: &Arc<FiniteGroup>) -> AlgebraElement {
        let picks: Vec<usize> = (0..g.order()).filter(|_| rng.gen_bool(0.25)).collect();
        let s = set(g, &picks);
        s.union(&s.inverse_set()).unwrap()
    }

    #[test]
    fn basic_distances() {
        let g = Arc::new(FiniteGroup::cyclic(6).unwrap());
        let ms = MetricSpec::new(g.clone(), set(&g, &[1, 5]), AlgebraElement::empty(g.clone())).unwrap();
        let e = |i| g.element(i).unwrap();
        assert_eq!(word_metric(&ms, e(0), e(3)).unwrap(), Some(3));
        for i in 0..6 {
            assert_eq!(word_metric(&ms, e(i), e(i)).unwrap(), Some(0));
        }
        let ms = MetricSpec::new(g.clone(), set(&g, &[2, 4]), AlgebraElement::empty(g.clone())).unwrap();
        assert_eq!(word_metric(&ms, e(1), e(0)).unwrap(), None);
        assert_eq!(MetricSpec::new(g.clone(), set(&g, &[1]), set(&g, &[])), Err(MetricError::NotInverseClosed("left")));
    }

    #[test]
    fn s3_left_right_word() {
        let g = Arc::new(FiniteGroup::symmetric(3).unwrap());
        let t12 = g.resolve("(12)").unwrap();
        let t13 = g.resolve("(13)").unwrap();
        let ms = MetricSpec::new(g.clone(), set(&g, &[t12]), set(&g, &[t13])).unwrap();
        let e = g.identity_index();
        let target = g.mul_idx(g.mul_idx(t12, e), t13);
        let d = word_metric(&ms, g.element(target).unwrap(), g.identity()).unwrap();
        assert_eq!(d, Some(2));
        assert_eq!(word_oracle(&g, &[t12], &[t13], target, e), Some(2));
    }

    #[test]
    fn bfs_matches_word_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let groups = [
            FiniteGroup::symmetric(3).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::cyclic(12).unwrap(),
            FiniteGroup::torus([2, 3, 2]).unwrap(),
            FiniteGroup::dihedral(6).unwrap(),
        ];
        for g in groups {
            let g = Arc::new(g);
            for _ in 0..4 {
                let l = random_inverse_closed(&mut rng, &g);
                let r = random_inverse_closed(&mut rng, &g);
                let ms = MetricSpec::new(g.clone(), l.clone(), r.clone()).unwrap();
                let lm: Vec<usize> = l.support().collect();
                let rm: Vec<usize> = r.support().collect();
                for h in 0..g.order() {
                    let dist = ms.distances_from(h);
                    for (x, dx) in dist.iter().enumerate() {
                        assert_eq!(*dx, word_oracle(&g, &lm, &rm, x, h));
                    }
                }
            }
        }
    }

    #[test]
    fn balls() {
        let spec = presets::haah_a(3).unwrap();
        let ms = metric_sets_from_spec(&spec);
        let g = spec.group().clone();
        for site in [0, 5, 13] {
            let center = g.element(site).unwrap();
            assert_eq!(ball(&ms, center, 0).unwrap(), set(&g, &[site]));
            let b1 = ball(&ms, center, 1).unwrap();
            let (z, x) = build_stabilizer_pair(&spec, 0, center).unwrap();
            for i in z.support().chain(x.support()) {
                assert!(b1.contains(QubitIndex::from_flat(i, 1).site));
            }
            // The far corner g·xyz of the cube needs one left and one right move.
            let far = g.mul_idx(site, g.resolve("xyz").unwrap());
            assert!(!b1.contains(far));
            assert!(ball(&ms, center, 2).unwrap().contains(far));
            assert_eq!(ball(&ms, center, 27).unwrap().cardinality(), 27);
        }
    }

    #[test]
    fn derived_sets() {
        let spec = presets::haah_a(3).unwrap();
        let g = spec.group().clone();
        let ms = metric_sets_from_spec(&spec);
        let names = |w: &[&str]| AlgebraElement::from_names(g.clone(), w).unwrap();
        assert_eq!(*ms.right(), names(&["1", "x", "y", "z", "-x", "-y", "-z"]));
        assert_eq!(*ms.left(), names(&["1", "xy", "xz", "yz", "-x-y", "-x-z", "-y-z"]));
        let t = presets::trivial(Arc::new(FiniteGroup::symmetric(3).unwrap())).unwrap();
        let mt = metric_sets_from_spec(&t);
        assert_eq!(mt.left().cardinality(), 1);
        assert_eq!(mt.right().cardinality(), 1);
        let b = presets::haah_b(3).unwrap();
        let mb = metric_sets_from_spec(&b);
        let gb = b.group().clone();
        let nb = |w: &[&str]| AlgebraElement::from_names(gb.clone(), w).unwrap();
        assert_eq!(*mb.right(), nb(&["1", "x", "y", "-x", "-y"]));
        assert_eq!(*mb.left(), nb(&["1", "x", "z", "-x", "-z"]));
    }

    #[test]
    fn axioms_on_random_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for g in [FiniteGroup::dihedral(4).unwrap(), FiniteGroup::cyclic(10).unwrap()] {
            let g = Arc::new(g);
            let ms = MetricSpec::new(g.clone(), random_inverse_closed(&mut rng, &g), random_inverse_closed(&mut rng, &g)).unwrap();
            let n = g.order();
            let d: Vec<Vec<Option<u32>>> = (0..n).map(|h| ms.distances_from(h)).collect();
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(d[b][a], d[a][b]);
                    assert_eq!(d[b][a] == Some(0), a == b);
                    for c in 0..n {
                        if let (Some(ab), Some(bc)) = (d[b][a], d[c][b]) {
                            assert!(d[c][a].is_some_and(|ac| ac <= ab + bc));
                        }
                    }
                }
            }
        }
    }
}
