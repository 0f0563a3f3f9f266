//! Named code families.

use std::sync::Arc;

use crate::algebra::{AlgebraElement, BinaryMatrix};
use crate::group::FiniteGroup;
use crate::pauli::{CodeSpec, SpecError};

pub const PRESET_NAMES: [&str; 4] = ["haah-a", "haah-b", "lr-gcd", "trivial"];

fn sets(group: &Arc<FiniteGroup>, families: &[&[&str]]) -> Result<Vec<AlgebraElement>, SpecError> {
    families.iter().map(|w| Ok(AlgebraElement::from_names(group.clone(), w)?)).collect()
}

/// Haah's cubic code on Z_L³: `A₁ = {1,x,y,z}`, `B₁ = {1,xy,xz,yz}`, `C = I`.
pub fn haah_a(size: usize) -> Result<CodeSpec, SpecError> {
    let group = Arc::new(FiniteGroup::torus([size; 3])?);
    let a = sets(&group, &[&["1", "x", "y", "z"]])?;
    let b = sets(&group, &[&["1", "xy", "xz", "yz"]])?;
    CodeSpec::new(group, a, b, vec![BinaryMatrix::identity(1).into()])
}

/// The matrix relating the second stabilizer pair of the Haah B-code to the first.
pub fn haah_b_matrix() -> BinaryMatrix {
    BinaryMatrix::from_rows(&[vec![1, 1], vec![1, 0]]).expect("2x2 binary")
}

/// Haah B-code on Z_L³: `A = ({1,-y}, {1,-x})`, `B = ({1,-x}, {1,-z})`,
/// matrices `{I, [[1,1],[1,0]]}`.
pub fn haah_b(size: usize) -> Result<CodeSpec, SpecError> {
    let group = Arc::new(FiniteGroup::torus([size; 3])?);
    let a = sets(&group, &[&["1", "-y"], &["1", "-x"]])?;
    let b = sets(&group, &[&["1", "-x"], &["1", "-z"]])?;
    CodeSpec::new(group, a, b, vec![BinaryMatrix::identity(2).into(), haah_b_matrix().into()])
}

/// Two-qubit LR code on Z_n with `S₁ = {0,a}` and `S₂ = {0,b}`.
pub fn lr_gcd(n: usize, a: usize, b: usize) -> Result<CodeSpec, SpecError> {
    let group = Arc::new(FiniteGroup::cyclic(n)?);
    let s1 = AlgebraElement::from_indices(group.clone(), [0, a % n.max(1)])?;
    let s2 = AlgebraElement::from_indices(group.clone(), [0, b % n.max(1)])?;
    // {0, 0} would cancel to ∅ in F₂[G]; the set {0} is meant.
    let fix = |s: AlgebraElement| if s.is_empty() { AlgebraElement::unit(group.clone()) } else { s };
    let (s1, s2) = (fix(s1), fix(s2));
    CodeSpec::new(group, vec![s1], vec![s2], vec![BinaryMatrix::identity(1).into()])
}

/// `A₁ = B₁ = {1}`, `q = 1`, `C = I`: every site is pinned to a Bell pair.
pub fn trivial(group: Arc<FiniteGroup>) -> Result<CodeSpec, SpecError> {
    let one = AlgebraElement::unit(group.clone());
    CodeSpec::new(group, vec![one.clone()], vec![one], vec![BinaryMatrix::identity(1).into()])
}
