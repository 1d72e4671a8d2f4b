//! Brute-force index oracle built on a Chevalley basis.
//!
//! The algebra is constructed with integer structure constants
//! [e_α, e_β] = N_{α,β} e_{α+β}, |N_{α,β}| = p+1. Signs follow the
//! extraspecial-pair convention: for each non-simple positive γ the minimal
//! pair (δ, γ−δ) gets N = +(p+1), and every other constant is forced by the
//! standard relations between structure constants. The Jacobi identity is
//! verified at construction.
//!
//! The index of a subalgebra is computed as dim − max over random
//! functionals f of the exact rank of the skew matrix f([b_i, b_j]). The
//! cascade and the closed formulas are never consulted here, so this module
//! can serve as independent ground truth.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::linalg::rank_bigint;
use crate::rootsys::{Root, RootSystem, Subset};

/// Coordinate range for random functionals. Failure probability per trial
/// is at most dim / (2·10^6) by Schwartz–Zippel, and a failed trial only
/// underestimates the skew rank; the max over trials absorbs it.
pub const FUNCTIONAL_RANGE: i64 = 1_000_000;
pub const DEFAULT_TRIALS: u32 = 5;

/// Basis: indices 0..ℓ are the Cartan generators h_i, index ℓ + r is
/// e_{roots[r]} in the root system's global root order.
pub struct ChevalleyAlgebra {
    pub rs: RootSystem,
    pub dim: usize,
    /// N_{α,β} for positive pairs, keyed by positions in `positive_roots`
    /// with the first position smaller.
    n_pos: HashMap<(usize, usize), i64>,
    pos_index: HashMap<Root, usize>,
    /// α∨ over the simple coroots, per global root index.
    coroot_coeffs: Vec<Vec<i64>>,
}

type Term = (usize, i64);

/// max{k : β − kα ∈ R}
fn root_string_down(rs: &RootSystem, alpha: &Root, beta: &Root) -> i64 {
    let mut p = 0;
    let mut cur = beta.minus(alpha);
    while rs.is_root(&cur) {
        p += 1;
        cur = cur.minus(alpha);
    }
    p
}

pub fn build_chevalley(rs: &RootSystem) -> Result<ChevalleyAlgebra, Error> {
    let pos_index: HashMap<Root, usize> =
        rs.positive_roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();

    let mut alg = ChevalleyAlgebra {
        rs: rs.clone(),
        dim: rs.rank + rs.roots.len(),
        n_pos: HashMap::new(),
        pos_index,
        coroot_coeffs: Vec::new(),
    };
    alg.build_constants()?;
    alg.build_coroots()?;
    alg.verify(rs.rank <= 4)?;
    Ok(alg)
}

impl ChevalleyAlgebra {
    /// Fills `n_pos` by induction on the height of γ = α + β.
    fn build_constants(&mut self) -> Result<(), Error> {
        let rs = &self.rs;
        let positives = rs.positive_roots.clone();
        for (gi, gamma) in positives.iter().enumerate() {
            if gamma.height() < 2 {
                continue;
            }
            // extraspecial pair: minimal δ in the graded order; it is simple
            let (di, delta) = positives
                .iter()
                .enumerate()
                .find(|(_, d)| {
                    let rest = gamma.minus(d);
                    rest.is_positive() && rs.is_root(&rest)
                })
                .expect("every non-simple positive root splits off a simple root");
            let beta1 = gamma.minus(delta);
            let b1i = self.pos_index[&beta1];
            let p = root_string_down(rs, delta, &beta1);
            self.n_pos.insert((di, b1i), p + 1);

            let n_extra = Ratio::from_integer(p + 1);
            let gamma_norm = Ratio::from_integer(rs.inner(gamma, gamma));

            // every other special pair (α, β), α + β = γ, forced by the
            // four-root Jacobi relation on (δ, β₁, −α, −β)
            for (ai, alpha) in positives.iter().enumerate() {
                if ai == di || alpha.height() >= gamma.height() {
                    continue;
                }
                let beta = gamma.minus(alpha);
                if !beta.is_positive() || !rs.is_root(&beta) {
                    continue;
                }
                let bi = self.pos_index[&beta];
                if ai >= bi {
                    continue;
                }
                let neg_alpha = alpha.negated();
                let neg_beta = beta.negated();

                let mut acc = Ratio::from_integer(0i64);
                let xi2 = beta1.minus(alpha);
                if rs.is_root(&xi2) {
                    let t = self.n_any(&beta1, &neg_alpha)? * self.n_any(delta, &neg_beta)?;
                    acc += Ratio::new(t, rs.inner(&xi2, &xi2));
                }
                let xi3 = delta.minus(alpha);
                if rs.is_root(&xi3) {
                    let t = self.n_any(&neg_alpha, delta)? * self.n_any(&beta1, &neg_beta)?;
                    acc += Ratio::new(t, rs.inner(&xi3, &xi3));
                }
                // N_{δ,β₁}·N_{−α,−β}/(γ,γ) + acc = 0 and N_{−α,−β} = −N_{α,β}
                let n = gamma_norm * acc / n_extra;
                if !n.is_integer() {
                    return Err(Error::Internal(format!(
                        "non-integral structure constant for γ={:?}",
                        gamma.coeffs
                    )));
                }
                self.n_pos.insert((ai, bi), n.to_integer());
            }
            let _ = gi;
        }
        Ok(())
    }

    /// N_{x,y} for arbitrary roots with x + y ∈ R, reduced to the positive
    /// table via antisymmetry, negation and the three-root relation.
    fn n_any(&self, x: &Root, y: &Root) -> Result<i64, Error> {
        let r = self.n_any_ratio(x, y)?;
        if !r.is_integer() {
            return Err(Error::Internal("non-integral N".into()));
        }
        Ok(r.to_integer())
    }

    fn n_any_ratio(&self, x: &Root, y: &Root) -> Result<Ratio<i64>, Error> {
        let rs = &self.rs;
        match (x.is_positive(), y.is_positive()) {
            (true, true) => {
                let (xi, yi) = (self.pos_index[x], self.pos_index[y]);
                let (k, sign) = if xi < yi { ((xi, yi), 1) } else { ((yi, xi), -1) };
                let n = *self.n_pos.get(&k).ok_or_else(|| {
                    Error::Internal(format!("missing N for {:?}+{:?}", x.coeffs, y.coeffs))
                })?;
                Ok(Ratio::from_integer(sign * n))
            }
            (false, false) => Ok(-self.n_any_ratio(&x.negated(), &y.negated())?),
            (false, true) => Ok(-self.n_any_ratio(y, x)?),
            (true, false) => {
                // (R3) on (x, y, −x−y): N_{x,y}/(s,s) = N_{y,−s}/(x,x) = N_{−s,x}/(y,y)
                let s = x.plus(y);
                let s_norm = rs.inner(&s, &s);
                if s.is_positive() {
                    let n = self.n_any_ratio(y, &s.negated())?;
                    Ok(Ratio::new(s_norm, rs.inner(x, x)) * n)
                } else {
                    let n = self.n_any_ratio(&s.negated(), x)?;
                    Ok(Ratio::new(s_norm, rs.inner(y, y)) * n)
                }
            }
        }
    }

    /// α∨ = Σ_i n_i (α_i,α_i)/(α,α) α_i∨, integer coefficients.
    fn build_coroots(&mut self) -> Result<(), Error> {
        let rs = &self.rs;
        let mut all = Vec::with_capacity(rs.roots.len());
        for root in &rs.roots {
            let norm = rs.inner(root, root);
            let mut coeffs = Vec::with_capacity(rs.rank);
            for (i, &n) in root.coeffs.iter().enumerate() {
                let num = n * rs.form[i][i];
                if num % norm != 0 {
                    return Err(Error::Internal(format!(
                        "non-integral coroot for {:?}",
                        root.coeffs
                    )));
                }
                coeffs.push(num / norm);
            }
            all.push(coeffs);
        }
        self.coroot_coeffs = all;
        Ok(())
    }

    fn root_global_index(&self, r: &Root) -> usize {
        self.rs.root_index(r).expect("root present")
    }

    /// Bracket of two basis elements as a sparse list of (basis index, coeff).
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Term> {
        let l = self.rs.rank;
        if i < l && j < l {
            return Vec::new();
        }
        if i < l {
            // [h_i, e_α] = ⟨α, α_i∨⟩ e_α
            let alpha = &self.rs.roots[j - l];
            let c: i64 =
                alpha.coeffs.iter().enumerate().map(|(k, &n)| n * self.rs.cartan[i][k]).sum();
            return if c == 0 { Vec::new() } else { vec![(j, c)] };
        }
        if j < l {
            return self
                .bracket_basis(j, i)
                .into_iter()
                .map(|(b, c)| (b, -c))
                .collect();
        }
        let alpha = &self.rs.roots[i - l];
        let beta = &self.rs.roots[j - l];
        let sum = alpha.plus(beta);
        if sum.coeffs.iter().all(|&c| c == 0) {
            // [e_α, e_{−α}] = α∨
            return self.coroot_coeffs[i - l]
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(k, &c)| (k, c))
                .collect();
        }
        if self.rs.is_root(&sum) {
            let n = self.n_any(alpha, beta).expect("structure constants complete");
            return vec![(self.root_global_index(&sum) + l, n)];
        }
        Vec::new()
    }

    /// Bracket of sparse vectors over the basis.
    pub fn bracket_vec(&self, x: &BTreeMap<usize, i64>, y: &BTreeMap<usize, i64>) -> BTreeMap<usize, i64> {
        let mut out: BTreeMap<usize, i64> = BTreeMap::new();
        for (&i, &a) in x {
            for (&j, &b) in y {
                for (k, c) in self.bracket_basis(i, j) {
                    let e = out.entry(k).or_insert(0);
                    *e += a * b * c;
                    if *e == 0 {
                        out.remove(&k);
                    }
                }
            }
        }
        out
    }

    /// N_{α,β} for roots with α+β ∈ R (public for tests).
    pub fn structure_constant(&self, alpha: &Root, beta: &Root) -> Result<i64, Error> {
        self.n_any(alpha, beta)
    }

    /// Checks |N| = p+1 for every root pair and the Jacobi identity
    /// (exhaustively when `exhaustive`, on a deterministic sample otherwise).
    fn verify(&self, exhaustive: bool) -> Result<(), Error> {
        let rs = &self.rs;
        for a in &rs.roots {
            for b in &rs.roots {
                let s = a.plus(b);
                if s.coeffs.iter().all(|&c| c == 0) || !rs.is_root(&s) {
                    continue;
                }
                let n = self.n_any(a, b)?;
                let p = root_string_down(rs, a, b);
                if n.abs() != p + 1 {
                    return Err(Error::Internal(format!(
                        "|N| = {} but p+1 = {} for {:?}, {:?}",
                        n.abs(),
                        p + 1,
                        a.coeffs,
                        b.coeffs
                    )));
                }
            }
        }

        let d = self.dim;
        let triple_ok = |i: usize, j: usize, k: usize| -> bool {
            let single = |t: usize| BTreeMap::from([(t, 1i64)]);
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                let inner = self.bracket_vec(&single(y), &single(z));
                for (b, c) in self.bracket_vec(&single(x), &inner) {
                    let e = acc.entry(b).or_insert(0);
                    *e += c;
                    if *e == 0 {
                        acc.remove(&b);
                    }
                }
            }
            acc.is_empty()
        };

        if exhaustive {
            for i in 0..d {
                for j in i + 1..d {
                    for k in j + 1..d {
                        if !triple_ok(i, j, k) {
                            return Err(Error::Internal(format!(
                                "Jacobi identity fails on basis triple ({i},{j},{k})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x4a61_636f_6269);
            for _ in 0..2000 {
                let i = rng.gen_range(0..d);
                let j = rng.gen_range(0..d);
                let k = rng.gen_range(0..d);
                if i == j || j == k || i == k {
                    continue;
                }
                if !triple_ok(i, j, k) {
                    return Err(Error::Internal(format!(
                        "Jacobi identity fails on basis triple ({i},{j},{k})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Antisymmetry holds by construction of `bracket_basis`; exposed for
    /// property tests.
    pub fn basis_dim(&self) -> usize {
        self.dim
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SelectionKind {
    Parabolic,
    Nilradical,
    OppositeNilradical,
    Full,
}

/// An ordered sub-basis closed under the bracket.
pub struct SubalgebraSelection<'a> {
    pub alg: &'a ChevalleyAlgebra,
    pub kind: SelectionKind,
    pub s: Subset,
    pub members: Vec<usize>,
    in_selection: Vec<bool>,
}

impl<'a> SubalgebraSelection<'a> {
    pub fn new(alg: &'a ChevalleyAlgebra, kind: SelectionKind, s: Subset) -> Result<Self, Error> {
        let rs = &alg.rs;
        let l = rs.rank;
        let mut members: Vec<usize> = Vec::new();
        match kind {
            SelectionKind::Full => {
                members.extend(0..alg.dim);
            }
            SelectionKind::Parabolic => {
                members.extend(0..l);
                for (r, root) in rs.roots.iter().enumerate() {
                    if root.is_positive() || root.support().is_subset_of(s) {
                        members.push(l + r);
                    }
                }
            }
            SelectionKind::Nilradical => {
                for (r, root) in rs.roots.iter().enumerate() {
                    if root.is_positive() && !root.support().is_subset_of(s) {
                        members.push(l + r);
                    }
                }
            }
            SelectionKind::OppositeNilradical => {
                for (r, root) in rs.roots.iter().enumerate() {
                    if !root.is_positive() && !root.support().is_subset_of(s) {
                        members.push(l + r);
                    }
                }
            }
        }
        let mut in_selection = vec![false; alg.dim];
        for &m in &members {
            in_selection[m] = true;
        }
        let sel = SubalgebraSelection { alg, kind, s, members, in_selection };
        sel.check_closed()?;
        Ok(sel)
    }

    fn check_closed(&self) -> Result<(), Error> {
        for &i in &self.members {
            for &j in &self.members {
                for (k, _) in self.alg.bracket_basis(i, j) {
                    if !self.in_selection[k] {
                        return Err(Error::Internal(format!(
                            "selection {:?} not closed: [{i},{j}] hits {k}",
                            self.kind
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.members.len()
    }
}

fn mix_seed(seed: u64, tag: u64, trial: u64) -> u64 {
    // splitmix64 over the combined words
    let mut z = seed
        .wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(tag)
        .wrapping_mul(0xbf58_476d_1ce4_e5b9)
        .wrapping_add(trial);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// χ via random functionals: dim − max over trials of rank f([·,·]).
pub fn index_oracle(sel: &SubalgebraSelection<'_>, trials: u32, seed: u64) -> Result<usize, Error> {
    if trials == 0 {
        return Err(Error::Usage("oracle needs at least one trial".into()));
    }
    let alg = sel.alg;
    let m = sel.dim();
    let tag = (sel.s.0 as u64) << 3 | sel.kind as u64;

    // cache the sparse brackets once; trials only change f
    let mut table: Vec<Vec<(usize, usize, i64)>> = Vec::with_capacity(m);
    for (u, &i) in sel.members.iter().enumerate() {
        let mut row = Vec::new();
        for (v, &j) in sel.members.iter().enumerate() {
            if v <= u {
                continue;
            }
            for (k, c) in alg.bracket_basis(i, j) {
                row.push((v, k, c));
            }
        }
        table.push(row);
    }

    let mut best_rank = 0;
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, tag, t as u64));
        let mut f = vec![0i64; alg.dim];
        for &b in &sel.members {
            f[b] = rng.gen_range(-FUNCTIONAL_RANGE..=FUNCTIONAL_RANGE);
        }
        let mut mat = vec![vec![BigInt::zero(); m]; m];
        for (u, row) in table.iter().enumerate() {
            for &(v, k, c) in row {
                let val = c * f[k];
                mat[u][v] += BigInt::from(val);
            }
        }
        for u in 0..m {
            for v in u + 1..m {
                let x = mat[u][v].clone();
                mat[v][u] = -x;
            }
        }
        let rank = rank_bigint(&mat);
        debug_assert_eq!(rank % 2, 0, "skew form rank must be even");
        best_rank = best_rank.max(rank);
        if best_rank == m || best_rank == m - 1 {
            break;
        }
    }
    Ok(m - best_rank)
}

/// Diagnostic record for an index-additivity run on g = p_S ⊕ u_S⁻.
#[derive(Debug, Clone, Serialize)]
pub struct AdditivityDiag {
    #[serde(rename = "type")]
    pub type_label: String,
    pub subset: Vec<usize>,
    pub chi_g: usize,
    pub chi_p: usize,
    pub chi_u_minus: usize,
    pub chi_u: usize,
    pub additive: bool,
    pub radicals_match: bool,
    pub seed: u64,
}

pub fn additivity_check(
    alg: &ChevalleyAlgebra,
    s: Subset,
    trials: u32,
    seed: u64,
) -> Result<AdditivityDiag, Error> {
    let full = SubalgebraSelection::new(alg, SelectionKind::Full, alg.rs.pi())?;
    let p = SubalgebraSelection::new(alg, SelectionKind::Parabolic, s)?;
    let u = SubalgebraSelection::new(alg, SelectionKind::Nilradical, s)?;
    let u_minus = SubalgebraSelection::new(alg, SelectionKind::OppositeNilradical, s)?;
    let chi_g = index_oracle(&full, trials, seed)?;
    let chi_p = index_oracle(&p, trials, seed)?;
    let chi_u = index_oracle(&u, trials, seed)?;
    let chi_u_minus = index_oracle(&u_minus, trials, seed)?;
    Ok(AdditivityDiag {
        type_label: alg.rs.type_label(),
        subset: s.indices_1based(),
        chi_g,
        chi_p,
        chi_u_minus,
        chi_u,
        additive: chi_g == chi_p + chi_u_minus,
        radicals_match: chi_u == chi_u_minus,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cascade::cascade;
    use crate::rootsys::SimpleType;

    fn alg(label: &str) -> ChevalleyAlgebra {
        let rs = RootSystem::build(SimpleType::parse(label).unwrap()).unwrap();
        build_chevalley(&rs).unwrap()
    }

    #[test]
    fn sl2_relations() {
        let a = alg("A1");
        assert_eq!(a.dim, 3);
        // basis: h, e_{-α}, e_{α}
        let e = 2usize;
        let f = 1usize;
        assert_eq!(a.bracket_basis(e, f), vec![(0, 1)]); // [e,f] = h
        assert_eq!(a.bracket_basis(0, e), vec![(e, 2)]); // [h,e] = 2e
        assert_eq!(a.bracket_basis(0, f), vec![(f, -2)]); // [h,f] = -2f
    }

    #[test]
    fn a2_constants() {
        let a = alg("A2");
        let a1 = Root::new(vec![1, 0]);
        let a2 = Root::new(vec![0, 1]);
        let theta = Root::new(vec![1, 1]);
        assert_eq!(a.structure_constant(&a1, &a2).unwrap().abs(), 1);
        // α_1 + θ is not a root
        let idx1 = a.rs.root_index(&a1).unwrap() + 2;
        let idxt = a.rs.root_index(&theta).unwrap() + 2;
        assert!(a.bracket_basis(idx1, idxt).is_empty());
    }

    #[test]
    fn g2_has_large_constants() {
        let a = alg("G2");
        let mut max_n = 0;
        for x in &a.rs.roots {
            for y in &a.rs.roots {
                let s = x.plus(y);
                if !s.coeffs.iter().all(|&c| c == 0) && a.rs.is_root(&s) {
                    max_n = max_n.max(a.structure_constant(x, y).unwrap().abs());
                }
            }
        }
        assert_eq!(max_n, 3);
    }

    #[test]
    fn larger_types_build_cleanly() {
        // Jacobi is verified exhaustively inside build for rank ≤ 4
        for label in ["B3", "C3", "D4", "F4", "A4"] {
            alg(label);
        }
    }

    #[test]
    fn full_algebra_index_is_rank() {
        for label in ["A1", "A2", "B2", "G2", "A3"] {
            let a = alg(label);
            let full = SubalgebraSelection::new(&a, SelectionKind::Full, a.rs.pi()).unwrap();
            assert_eq!(index_oracle(&full, 5, 7).unwrap(), a.rs.rank, "{label}");
        }
    }

    #[test]
    fn borel_nilradical_index_is_cascade_size() {
        for (label, expect) in [("A3", 2usize), ("B3", 3), ("C3", 3), ("G2", 2), ("D4", 4)] {
            let a = alg(label);
            let u = SubalgebraSelection::new(&a, SelectionKind::Nilradical, Subset::EMPTY).unwrap();
            assert_eq!(index_oracle(&u, 5, 11).unwrap(), expect, "{label}");
        }
    }

    #[test]
    fn abelian_nilradical_has_full_index() {
        // u_S for S = Π∖{α_1} in A_ℓ is abelian
        let a = alg("A4");
        let s = a.rs.pi().difference(Subset::singleton(0));
        let u = SubalgebraSelection::new(&a, SelectionKind::Nilradical, s).unwrap();
        assert_eq!(index_oracle(&u, 3, 5).unwrap(), u.dim());
    }

    #[test]
    fn oracle_rejects_zero_trials() {
        let a = alg("A1");
        let full = SubalgebraSelection::new(&a, SelectionKind::Full, a.rs.pi()).unwrap();
        assert!(index_oracle(&full, 0, 1).is_err());
    }

    #[test]
    fn oracle_monotone_in_trials() {
        let a = alg("B3");
        let p = SubalgebraSelection::new(&a, SelectionKind::Parabolic, Subset::singleton(1)).unwrap();
        let mut prev = usize::MAX;
        for trials in 1..=5 {
            let v = index_oracle(&p, trials, 3).unwrap();
            assert!(v <= prev);
            prev = v;
        }
    }

    #[test]
    fn opposite_radicals_have_equal_index() {
        let a = alg("C3");
        for mask in 0..(1u32 << 3) {
            let s = Subset(mask);
            let u = SubalgebraSelection::new(&a, SelectionKind::Nilradical, s).unwrap();
            let um =
                SubalgebraSelection::new(&a, SelectionKind::OppositeNilradical, s).unwrap();
            assert_eq!(
                index_oracle(&u, 5, 17).unwrap(),
                index_oracle(&um, 5, 17).unwrap()
            );
        }
    }

    #[test]
    fn borel_additivity() {
        for label in ["A2", "B2", "G2"] {
            let a = alg(label);
            let diag = additivity_check(&a, Subset::EMPTY, 5, 23).unwrap();
            assert!(diag.additive, "{label}");
            assert!(diag.radicals_match, "{label}");
        }
    }

    #[test]
    fn gamma_span_is_heisenberg() {
        // span{e_α : α ∈ Γ^K} closes with one-dimensional centre e_{ε_K}
        for label in ["A4", "B3", "G2"] {
            let a = alg(label);
            let c = cascade(&a.rs, a.rs.pi());
            for el in &c.elements {
                let l = a.rs.rank;
                let idx: Vec<usize> =
                    el.gamma.iter().map(|g| a.rs.root_index(g).unwrap() + l).collect();
                let eps_idx = a.rs.root_index(&el.eps).unwrap() + l;
                for &i in &idx {
                    for &j in &idx {
                        for (k, _) in a.bracket_basis(i, j) {
                            assert_eq!(k, eps_idx, "{label}: bracket escapes the centre");
                        }
                    }
                }
                // ε_K brackets to zero with the whole set
                for &i in &idx {
                    assert!(a.bracket_basis(eps_idx, i).is_empty(), "{label}");
                }
            }
        }
    }
}
