//! Root systems of the finite simple types with exact integer data.
//!
//! Roots are stored as integer coordinate vectors over the simple roots
//! (Bourbaki numbering throughout). All inner products come from the
//! symmetrized Cartan form, so every pairing is computed in exact integer
//! arithmetic.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The seven families of finite irreducible root systems.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A simple type, e.g. `A5`, `E8`, `G2`.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    /// Validates the family/rank combination. `D3` is accepted (it is
    /// isomorphic to `A3`) but callers can detect it via
    /// [`SimpleType::is_degenerate`].
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidType(format!("{family}{rank} is not a valid simple type")))
        }
    }

    /// `D3` is handled as-is but is really `A3` in disguise.
    pub fn is_degenerate(&self) -> bool {
        self.family == Family::D && self.rank == 3
    }

    /// Parses labels like `"A5"`, `"e8"`, `"G2"`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::InvalidType(format!("cannot parse type {s:?}"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidType(format!("cannot parse rank in {s:?}")))?;
        SimpleType::new(fam, rank)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A subset of the simple roots, as a bit mask (bit i = simple root α_{i+1}).
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(rank: usize) -> Subset {
        debug_assert!(rank <= 32);
        Subset(if rank == 32 { u32::MAX } else { (1u32 << rank) - 1 })
    }

    pub fn from_indices(indices: &[usize]) -> Subset {
        Subset(indices.iter().fold(0, |m, &i| m | (1 << i)))
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Iterates member indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(i)
            }
        })
    }

    /// Sorted 1-based indices, the convention used in all reports.
    pub fn indices_1based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Root {
        Root { coeffs }
    }

    pub fn simple(rank: usize, i: usize) -> Root {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        Root { coeffs }
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    pub fn negated(&self) -> Root {
        Root { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn plus(&self, other: &Root) -> Root {
        Root {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn minus(&self, other: &Root) -> Root {
        Root {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    /// Simple roots appearing with nonzero coefficient.
    pub fn support(&self) -> Subset {
        let mut s = Subset::EMPTY;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                s.insert(i);
            }
        }
        s
    }
}

/// A root system, possibly a product of several simple factors
/// (block-diagonal Cartan data). Immutable after construction.
#[derive(Debug, Clone, Serialize)]
pub struct RootSystem {
    pub factors: Vec<SimpleType>,
    pub rank: usize,
    /// cartan[i][j] = ⟨α_j, α_i∨⟩
    pub cartan: Vec<Vec<i64>>,
    /// Symmetrized form on simple roots: form[i][j] = (α_i, α_j), scaled so
    /// that short roots have squared length 2.
    #[serde(skip)]
    pub form: Vec<Vec<i64>>,
    /// All roots in graded lexicographic order (height, then coeffs).
    pub roots: Vec<Root>,
    /// Positive roots, same ordering.
    pub positive_roots: Vec<Root>,
    #[serde(skip)]
    index_of: HashMap<Root, usize>,
}

/// Symmetric form on the simple roots, normalized so short roots have
/// squared length 2 in every factor.
fn simple_form(t: SimpleType) -> Vec<Vec<i64>> {
    let l = t.rank;
    let mut b = vec![vec![0i64; l]; l];
    let chain = |b: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        b[i][j] = v;
        b[j][i] = v;
    };
    match t.family {
        Family::A => {
            for i in 0..l {
                b[i][i] = 2;
            }
            for i in 0..l.saturating_sub(1) {
                chain(&mut b, i, i + 1, -1);
            }
        }
        Family::B => {
            // α_1..α_{ℓ-1} long (4), α_ℓ short (2)
            for i in 0..l {
                b[i][i] = if i == l - 1 { 2 } else { 4 };
            }
            for i in 0..l - 1 {
                chain(&mut b, i, i + 1, -2);
            }
        }
        Family::C => {
            // α_1..α_{ℓ-1} short (2), α_ℓ long (4)
            for i in 0..l {
                b[i][i] = if i == l - 1 { 4 } else { 2 };
            }
            for i in 0..l - 2 {
                chain(&mut b, i, i + 1, -1);
            }
            chain(&mut b, l - 2, l - 1, -2);
        }
        Family::D => {
            for i in 0..l {
                b[i][i] = 2;
            }
            for i in 0..l - 2 {
                chain(&mut b, i, i + 1, -1);
            }
            chain(&mut b, l - 3, l - 1, -1);
            // Bourbaki: α_{ℓ-1} and α_ℓ both attach to α_{ℓ-2}
            // (for D3 this degenerates to the A3 chain re-labelled)
        }
        Family::E => {
            for i in 0..l {
                b[i][i] = 2;
            }
            // Bourbaki: chain α_1-α_3-α_4-...-α_ℓ with α_2 attached to α_4
            chain(&mut b, 0, 2, -1);
            for i in 2..l - 1 {
                chain(&mut b, i, i + 1, -1);
            }
            chain(&mut b, 1, 3, -1);
        }
        Family::F => {
            // α_1, α_2 long (4); α_3, α_4 short (2)
            b[0][0] = 4;
            b[1][1] = 4;
            b[2][2] = 2;
            b[3][3] = 2;
            chain(&mut b, 0, 1, -2);
            chain(&mut b, 1, 2, -2);
            chain(&mut b, 2, 3, -1);
        }
        Family::G => {
            // α_1 short (2), α_2 long (6)
            b[0][0] = 2;
            b[1][1] = 6;
            chain(&mut b, 0, 1, -3);
        }
    }
    b
}

impl RootSystem {
    pub fn build(t: SimpleType) -> Result<RootSystem, Error> {
        RootSystem::build_product(&[t])
    }

    /// Builds a (semi)simple root system as a product of simple factors with
    /// block-diagonal Cartan data.
    pub fn build_product(factors: &[SimpleType]) -> Result<RootSystem, Error> {
        if factors.is_empty() {
            return Err(Error::InvalidType("empty factor list".into()));
        }
        let rank: usize = factors.iter().map(|t| t.rank).sum();
        if rank > 32 {
            return Err(Error::InvalidType(format!("total rank {rank} exceeds the supported 32")));
        }

        let mut form = vec![vec![0i64; rank]; rank];
        let mut off = 0;
        for t in factors {
            let b = simple_form(*t);
            for i in 0..t.rank {
                for j in 0..t.rank {
                    form[off + i][off + j] = b[i][j];
                }
            }
            off += t.rank;
        }

        // cartan[i][j] = ⟨α_j, α_i∨⟩ = 2(α_i,α_j)/(α_i,α_i)
        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                let num = 2 * form[i][j];
                debug_assert_eq!(num % form[i][i], 0);
                cartan[i][j] = num / form[i][i];
            }
        }

        let positive_roots = generate_positive_roots(rank, &cartan);
        let mut roots: Vec<Root> = positive_roots
            .iter()
            .map(Root::negated)
            .chain(positive_roots.iter().cloned())
            .collect();
        roots.sort_by_key(|r| (r.height(), r.coeffs.clone()));

        let index_of = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();

        Ok(RootSystem {
            factors: factors.to_vec(),
            rank,
            cartan,
            form,
            roots,
            positive_roots,
            index_of,
        })
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index_of.contains_key(r)
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.index_of.get(r).copied()
    }

    /// Full set of simple roots Π as a subset mask.
    pub fn pi(&self) -> Subset {
        Subset::full(self.rank)
    }

    /// Symmetrized bilinear form on ℤΠ.
    pub fn inner(&self, a: &Root, b: &Root) -> i64 {
        let mut acc = 0;
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                if y != 0 {
                    acc += x * y * self.form[i][j];
                }
            }
        }
        acc
    }

    /// ⟨λ, β∨⟩ = 2(λ,β)/(β,β), exact. `beta` must be a root.
    pub fn coroot_pairing(&self, lam: &Root, beta: &Root) -> Result<i64, Error> {
        if !self.is_root(beta) {
            return Err(Error::NotARoot(format!("{:?}", beta.coeffs)));
        }
        let num = 2 * self.inner(lam, beta);
        let den = self.inner(beta, beta);
        if num % den != 0 {
            return Err(Error::Internal(format!(
                "non-integral coroot pairing {num}/{den} for λ={:?}, β={:?}",
                lam.coeffs, beta.coeffs
            )));
        }
        Ok(num / den)
    }

    /// Simple roots adjacent in the Dynkin graph (nonzero Cartan entry).
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    /// Partition of `s` into Dynkin-connected components, ordered by
    /// smallest simple-root index.
    pub fn connected_components(&self, s: Subset) -> Vec<Subset> {
        let mut seen = Subset::EMPTY;
        let mut comps = Vec::new();
        for start in s.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = Subset::singleton(start);
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in s.iter() {
                    if !comp.contains(j) && self.adjacent(i, j) {
                        comp.insert(j);
                        stack.push(j);
                    }
                }
            }
            seen = seen.union(comp);
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self, s: Subset) -> bool {
        self.connected_components(s).len() == 1
    }

    /// Roots supported on `s`: R_S = R ∩ ℤS.
    pub fn roots_supported_on(&self, s: Subset) -> Vec<Root> {
        self.roots.iter().filter(|r| r.support().is_subset_of(s)).cloned().collect()
    }

    /// Positive roots supported on `s`.
    pub fn positive_roots_supported_on(&self, s: Subset) -> Vec<Root> {
        self.positive_roots.iter().filter(|r| r.support().is_subset_of(s)).cloned().collect()
    }

    /// The highest root of R_S for a connected nonempty `s` ⊆ Π.
    pub fn highest_root_of(&self, s: Subset) -> Result<Root, Error> {
        if s.is_empty() {
            return Err(Error::BadSubset("highest root of the empty set".into()));
        }
        if !self.is_connected(s) {
            return Err(Error::BadSubset(format!(
                "subset {:?} is not connected",
                s.indices_1based()
            )));
        }
        let sub = self.positive_roots_supported_on(s);
        let top = sub
            .iter()
            .max_by_key(|r| (r.height(), r.coeffs.clone()))
            .expect("connected nonempty subset has roots")
            .clone();
        // dominance check: every root of R_S⁺ sits below the maximum
        for r in &sub {
            if top.coeffs.iter().zip(&r.coeffs).any(|(a, b)| a < b) {
                return Err(Error::Internal(format!(
                    "dominance violated for subset {:?}",
                    s.indices_1based()
                )));
            }
        }
        Ok(top)
    }

    /// The highest root; only defined for a simple (single-factor) system.
    pub fn highest_root(&self) -> Result<Root, Error> {
        if self.factors.len() != 1 {
            return Err(Error::BadSubset("highest root of a reducible system".into()));
        }
        self.highest_root_of(self.pi())
    }

    pub fn type_label(&self) -> String {
        self.factors.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("x")
    }
}

/// Generates R⁺ by closure from the simple roots using root strings:
/// β + α_i is a root iff p − ⟨β, α_i∨⟩ > 0 where p = max{k : β − kα_i ∈ R}.
fn generate_positive_roots(rank: usize, cartan: &[Vec<i64>]) -> Vec<Root> {
    let mut known: HashMap<Root, ()> = HashMap::new();
    let mut frontier: Vec<Root> = (0..rank).map(|i| Root::simple(rank, i)).collect();
    for r in &frontier {
        known.insert(r.clone(), ());
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..rank {
                let pairing: i64 =
                    beta.coeffs.iter().enumerate().map(|(j, &n)| n * cartan[i][j]).sum();
                let alpha = Root::simple(rank, i);
                let mut p = 0i64;
                let mut down = beta.minus(&alpha);
                while down.coeffs.iter().all(|&c| c >= 0) && known.contains_key(&down) {
                    p += 1;
                    down = down.minus(&alpha);
                }
                if p - pairing > 0 {
                    let up = beta.plus(&alpha);
                    if !known.contains_key(&up) {
                        known.insert(up.clone(), ());
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Root> = known.into_keys().collect();
    out.sort_by_key(|r| (r.height(), r.coeffs.clone()));
    out
}
