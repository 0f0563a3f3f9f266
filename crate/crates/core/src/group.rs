//! Finite groups stored as explicit Cayley tables.
//!
//! Every group carries a content-derived id so that elements from two
//! different groups can be told apart. `cayley[a][b]` is the product `a·b`
//! in the left-to-right juxtaposition order used by the stabilizer formulas.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Default upper bound on the number of elements of a constructed group.
pub const DEFAULT_MAX_ORDER: usize = 1 << 20;

/// Groups up to this order get an exhaustive associativity check.
const EXHAUSTIVE_ASSOC_ORDER: usize = 64;
const SAMPLED_ASSOC_TRIPLES: usize = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order must be positive")]
    ZeroOrder,
    #[error("group order {order} exceeds the configured maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("Cayley table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("Cayley table entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("Cayley table is not a Latin square: {line} {index} repeats element {value}")]
    NotLatinSquare { line: &'static str, index: usize, value: usize },
    #[error("Cayley table has no identity element")]
    MissingIdentity,
    #[error("element {0} has no inverse")]
    MissingInverse(usize),
    #[error("multiplication is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NonAssociative(usize, usize, usize),
    #[error("elements belong to different groups")]
    GroupMismatch,
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("unknown element name {0:?}")]
    UnknownElement(String),
    #[error("expected {expected} element names, found {found}")]
    NameCount { expected: usize, found: usize },
    #[error("cayley file: {0}")]
    File(String),
}

/// An element of a [`FiniteGroup`], identified by the owning group's id and its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    group_id: u64,
    index: usize,
}

impl GroupElement {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn group_id(&self) -> u64 {
        self.group_id
    }
}

/// A finite group as a validated Cayley table.
#[derive(Clone)]
pub struct FiniteGroup {
    id: u64,
    order: usize,
    cayley: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
    names: Option<Vec<String>>,
    generators: Vec<(char, usize)>,
    abelian: bool,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.cayley == other.cayley
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .field("abelian", &self.abelian)
            .finish_non_exhaustive()
    }
}

fn table_id(order: usize, cayley: &[u32]) -> u64 {
    let mut h = DefaultHasher::new();
    order.hash(&mut h);
    cayley.hash(&mut h);
    h.finish()
}

impl FiniteGroup {
    /// Assembles a group from a table already known to satisfy the axioms.
    fn from_trusted(order: usize, cayley: Vec<u32>, identity: usize) -> Self {
        let mut inverse = vec![0u32; order];
        for g in 0..order {
            let row = &cayley[g * order..(g + 1) * order];
            inverse[g] = row.iter().position(|&p| p as usize == identity).expect("inverse") as u32;
        }
        let abelian = (0..order).all(|a| (a + 1..order).all(|b| cayley[a * order + b] == cayley[b * order + a]));
        FiniteGroup { id: table_id(order, &cayley), order, cayley, identity, inverse, names: None, generators: Vec::new(), abelian }
    }

    /// The cyclic group Z_n; element `i` is named `g^i`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        if n > DEFAULT_MAX_ORDER {
            return Err(GroupError::OrderTooLarge { order: n, max: DEFAULT_MAX_ORDER });
        }
        let mut cayley = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cayley.push(((a + b) % n) as u32);
            }
        }
        let mut g = Self::from_trusted(n, cayley, 0);
        g.names = Some((0..n).map(|i| format!("g^{i}")).collect());
        if n > 1 {
            g.generators = vec![('g', 1)];
        }
        Ok(g)
    }

    /// Direct product with the default order limit.
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<Self, GroupError> {
        self.direct_product_with_limit(other, DEFAULT_MAX_ORDER)
    }

    /// Componentwise product; `(a, b)` lives at index `a * |other| + b`.
    pub fn direct_product_with_limit(&self, other: &FiniteGroup, max_order: usize) -> Result<Self, GroupError> {
        let (n1, n2) = (self.order, other.order);
        let order = n1
            .checked_mul(n2)
            .filter(|&o| o <= max_order)
            .ok_or(GroupError::OrderTooLarge { order: n1.saturating_mul(n2), max: max_order })?;
        let mut cayley = Vec::with_capacity(order * order);
        for a in 0..order {
            let (a1, a2) = (a / n2, a % n2);
            for b in 0..order {
                let (b1, b2) = (b / n2, b % n2);
                let p1 = self.cayley[a1 * n1 + b1] as usize;
                let p2 = other.cayley[a2 * n2 + b2] as usize;
                cayley.push((p1 * n2 + p2) as u32);
            }
        }
        let identity = self.identity * n2 + other.identity;
        let mut g = Self::from_trusted(order, cayley, identity);
        g.names = Some((0..order).map(|i| format!("{}{}", self.name(i / n2), other.name(i % n2))).collect());
        Ok(g)
    }

    /// The torus Z_l × Z_m × Z_n with generators named `x`, `y`, `z`.
    ///
    /// Elements are named as monomials such as `1`, `x`, `xy`, `x^2z`.
    pub fn torus(dims: [usize; 3]) -> Result<Self, GroupError> {
        let [l, m, n] = dims;
        let mut g = Self::cyclic(l)?.direct_product(&Self::cyclic(m)?)?.direct_product(&Self::cyclic(n)?)?;
        let mut names = Vec::with_capacity(g.order);
        for i in 0..g.order {
            let (a, b, c) = (i / (m * n), (i / n) % m, i % n);
            let mut s = String::new();
            for (letter, e) in [('x', a), ('y', b), ('z', c)] {
                match e {
                    0 => {}
                    1 => s.push(letter),
                    _ => s.push_str(&format!("{letter}^{e}")),
                }
            }
            if s.is_empty() {
                s.push('1');
            }
            names.push(s);
        }
        g.names = Some(names);
        // Generators of trivial factors resolve to the identity.
        g.generators =
            [('x', m * n, l), ('y', n, m), ('z', 1, n)].into_iter().map(|(letter, idx, d)| (letter, if d > 1 { idx } else { 0 })).collect();
        Ok(g)
    }

    /// The symmetric group on `n` points, elements ordered lexicographically
    /// by their one-line notation. Product `a·b` applies `a` first, then `b`.
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut p: Vec<usize> = (0..n).collect();
        loop {
            perms.push(p.clone());
            if !next_permutation(&mut p) {
                break;
            }
        }
        Self::from_permutations(&perms, cycle_name)
    }

    /// The dihedral group of the regular `n`-gon (order `2n`), as permutations of the vertices.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        let mut perms = Vec::new();
        for k in 0..n {
            perms.push((0..n).map(|i| (i + k) % n).collect::<Vec<_>>());
        }
        for k in 0..n {
            perms.push((0..n).map(|i| (k + n - i) % n).collect::<Vec<_>>());
        }
        let names: Vec<String> = (0..n).map(|k| format!("r^{k}")).chain((0..n).map(|k| format!("s{k}"))).collect();
        let g = Self::from_permutations(&perms, |_| String::new())?;
        Ok(g.with_names(names).expect("name count"))
    }

    /// Builds a group from a list of permutations closed under composition.
    fn from_permutations(perms: &[Vec<usize>], name: impl Fn(&[usize]) -> String) -> Result<Self, GroupError> {
        let n = perms.len();
        let find = |q: &[usize]| perms.iter().position(|p| p == q);
        let mut table = vec![vec![0usize; n]; n];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                // apply a first, then b
                let prod: Vec<usize> = pa.iter().map(|&i| pb[i]).collect();
                table[a][b] = find(&prod).ok_or(GroupError::EntryOutOfRange { row: a, col: b, value: n })?;
            }
        }
        let names = perms.iter().map(|p| name(p)).collect();
        Self::from_cayley_table(&table, Some(names))
    }

    /// Validates all group axioms of `table` and derives identity and inverses.
    pub fn from_cayley_table(table: &[Vec<usize>], names: Option<Vec<String>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        if n > DEFAULT_MAX_ORDER {
            return Err(GroupError::OrderTooLarge { order: n, max: DEFAULT_MAX_ORDER });
        }
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare { row: r, len: row.len(), expected: n });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::EntryOutOfRange { row: r, col: c, value: v });
                }
            }
        }
        let mut seen = vec![usize::MAX; n];
        for (r, row) in table.iter().enumerate() {
            for &v in row {
                if seen[v] == r {
                    return Err(GroupError::NotLatinSquare { line: "row", index: r, value: v });
                }
                seen[v] = r;
            }
        }
        seen.fill(usize::MAX);
        for c in 0..n {
            for row in table {
                let v = row[c];
                if seen[v] == c {
                    return Err(GroupError::NotLatinSquare { line: "column", index: c, value: v });
                }
                seen[v] = c;
            }
        }
        let identity = (0..n).find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g)).ok_or(GroupError::MissingIdentity)?;
        for (g, row) in table.iter().enumerate() {
            let Some(h) = row.iter().position(|&v| v == identity) else {
                return Err(GroupError::MissingInverse(g));
            };
            if table[h][g] != identity {
                return Err(GroupError::MissingInverse(g));
            }
        }
        let assoc = |a: usize, b: usize, c: usize| table[table[a][b]][c] == table[a][table[b][c]];
        if n <= EXHAUSTIVE_ASSOC_ORDER {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(GroupError::NonAssociative(a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(GroupError::NonAssociative(a, b, c));
                }
            }
        }
        let cayley = table.iter().flatten().map(|&v| v as u32).collect();
        let g = Self::from_trusted(n, cayley, identity);
        match names {
            Some(names) => g.with_names(names),
            None => Ok(g),
        }
    }

    /// Parses the plain-text Cayley format: a line with the order `n`, then `n`
    /// rows of `n` whitespace-separated indices. A line starting with `#names:`
    /// supplies labels; other `#` lines and blank lines are ignored.
    pub fn parse_cayley_text(text: &str) -> Result<Self, GroupError> {
        let mut order: Option<usize> = None;
        let mut rows: Vec<Vec<usize>> = Vec::new();
        let mut names = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if let Some(rest) = line.strip_prefix("#names:") {
                names = Some(rest.split_whitespace().map(str::to_owned).collect::<Vec<_>>());
                continue;
            }
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse::<usize>).collect();
            let nums = nums.map_err(|e| GroupError::File(format!("line {}: {e}", lineno + 1)))?;
            if order.is_none() {
                if nums.len() != 1 {
                    return Err(GroupError::File(format!("line {}: expected the group order", lineno + 1)));
                }
                order = Some(nums[0]);
            } else {
                rows.push(nums);
            }
        }
        let order = order.ok_or_else(|| GroupError::File("empty file".into()))?;
        if rows.len() != order {
            return Err(GroupError::File(format!("expected {order} table rows, found {}", rows.len())));
        }
        Self::from_cayley_table(&rows, names)
    }

    pub fn load_cayley_file(path: &Path) -> Result<Self, GroupError> {
        let text = std::fs::read_to_string(path).map_err(|e| GroupError::File(format!("{}: {e}", path.display())))?;
        Self::parse_cayley_text(&text)
    }

    /// Replaces the element labels.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, GroupError> {
        if names.len() != self.order {
            return Err(GroupError::NameCount { expected: self.order, found: names.len() });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn identity(&self) -> GroupElement {
        self.element_unchecked(self.identity)
    }

    /// Row-major Cayley table.
    pub fn cayley(&self) -> &[u32] {
        &self.cayley
    }

    pub fn inverse_table(&self) -> &[u32] {
        &self.inverse
    }

    pub fn element(&self, index: usize) -> Result<GroupElement, GroupError> {
        if index >= self.order {
            return Err(GroupError::IndexOutOfRange { index, order: self.order });
        }
        Ok(self.element_unchecked(index))
    }

    pub(crate) fn element_unchecked(&self, index: usize) -> GroupElement {
        GroupElement { group_id: self.id, index }
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(|i| self.element_unchecked(i))
    }

    #[inline]
    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv_idx(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    fn owns(&self, a: GroupElement) -> Result<(), GroupError> {
        if a.group_id == self.id && a.index < self.order {
            Ok(())
        } else {
            Err(GroupError::GroupMismatch)
        }
    }

    pub fn mul(&self, a: GroupElement, b: GroupElement) -> Result<GroupElement, GroupError> {
        self.owns(a)?;
        self.owns(b)?;
        Ok(self.element_unchecked(self.mul_idx(a.index, b.index)))
    }

    pub fn inv(&self, a: GroupElement) -> Result<GroupElement, GroupError> {
        self.owns(a)?;
        Ok(self.element_unchecked(self.inv_idx(a.index)))
    }

    /// Order of the element with index `a`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut p = a;
        while p != self.identity {
            p = self.mul_idx(p, a);
            k += 1;
        }
        k
    }

    /// Display label of element `i` (falls back to `#i`).
    pub fn name(&self, i: usize) -> String {
        match &self.names {
            Some(names) => names[i].clone(),
            None => format!("#{i}"),
        }
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Resolves an element label.
    ///
    /// Accepted forms, in order: an exact label; `#<index>`; `-<label>` for an
    /// inverse; and for groups with named generators a monomial word such as
    /// `xy`, `x^2z` or `-x-y` where `-` inverts the following letter only. The
    /// words `1` and `e` denote the identity.
    pub fn resolve(&self, name: &str) -> Result<usize, GroupError> {
        let name = name.trim();
        let unknown = || GroupError::UnknownElement(name.to_string());
        if let Some(names) = &self.names {
            if let Some(i) = names.iter().position(|n| n == name) {
                return Ok(i);
            }
        }
        if let Some(rest) = name.strip_prefix('#') {
            let i: usize = rest.parse().map_err(|_| unknown())?;
            return self.element(i).map(|e| e.index);
        }
        if name == "1" || name == "e" {
            return Ok(self.identity);
        }
        if self.generators.is_empty() {
            if let Some(rest) = name.strip_prefix('-') {
                return self.resolve(rest).map(|i| self.inv_idx(i)).map_err(|_| unknown());
            }
            return Err(unknown());
        }
        self.parse_word(name).ok_or_else(unknown)
    }

    fn parse_word(&self, word: &str) -> Option<usize> {
        let chars: Vec<char> = word.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        let mut acc = self.identity;
        let mut i = 0;
        while i < chars.len() {
            let mut negate = false;
            if chars[i] == '-' || chars[i] == '−' {
                negate = true;
                i += 1;
            }
            let letter = *chars.get(i)?;
            let &(_, gen) = self.generators.iter().find(|(c, _)| *c == letter)?;
            i += 1;
            let mut power: i64 = 1;
            if chars.get(i) == Some(&'^') {
                i += 1;
                let start = i;
                if chars.get(i) == Some(&'-') {
                    i += 1;
                }
                while chars.get(i).is_some_and(|c| c.is_ascii_digit()) {
                    i += 1;
                }
                power = chars[start..i].iter().collect::<String>().parse().ok()?;
            }
            if negate {
                power = -power;
            }
            let base = if power < 0 { self.inv_idx(gen) } else { gen };
            for _ in 0..power.unsigned_abs() {
                acc = self.mul_idx(acc, base);
            }
        }
        Some(acc)
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Cycle notation with 1-based points, e.g. `(12)` or `(123)`; identity is `e`.
fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}
