//! Combinatorial index formulas for parabolic subalgebras p_S and their
//! nilpotent radicals u_S, and the equality classification
//! χ(p_S) + χ(u_S) = rk g.
//!
//! Everything here is derived from the cascade; the brute-force oracle in
//! [`crate::chevalley`] is kept strictly independent of this module.

use serde::Serialize;

use crate::cascade::{cascade, Cascade};
use crate::error::Error;
use crate::linalg::rank_i64;
use crate::rootsys::{Root, RootSystem, SimpleType, Subset};

/// Guard for exhaustive 2^ℓ subset enumeration.
pub const MAX_ENUM_RANK: usize = 16;

/// All cascade-derived data attached to a standard parabolic p_S.
#[derive(Debug, Clone, Serialize)]
pub struct ParabolicSpec {
    pub s: Subset,
    /// T_S: union of the full-cascade elements contained in S.
    pub t_s: Subset,
    /// E_S = K(Π) \ K(T_S): supports of full-cascade elements whose highest
    /// root escapes R_S.
    pub e_s: Vec<Subset>,
    /// Q_S = (∪_{K ∈ E_S} Γ^K) ∩ R_S⁺.
    pub q_s: Vec<Root>,
    /// dim V_S: rank over ℚ of R(S) ∪ R(Π).
    pub dim_v_s: usize,
    pub dim_p: usize,
    pub dim_u: usize,
    pub dim_levi: usize,
    pub k_s_len: usize,
    pub k_ts_len: usize,
    pub k_pi_len: usize,
    /// Σ_{K ∈ E_S} ♯Γ^K, used for the long form of the nilradical formula.
    pub gamma_sum_e_s: usize,
}

/// The four summands of the sum formula
/// rk g + (♯K(S) − ♯K(T_S)) + 2(♯K(Π) − dim V_S) + ♯Q_S.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SurplusTerms {
    #[serde(rename = "kS")]
    pub k_s: usize,
    #[serde(rename = "kTS")]
    pub k_ts: usize,
    #[serde(rename = "kPi")]
    pub k_pi: usize,
    #[serde(rename = "dimVS")]
    pub dim_v_s: usize,
    #[serde(rename = "QS")]
    pub q_s: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct IndexReport {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    /// Sorted 1-based simple-root indices of S.
    pub subset: Vec<usize>,
    pub chi_p: usize,
    pub chi_u: usize,
    pub sum: usize,
    pub equality: bool,
    pub cond_i: bool,
    pub cond_ii: bool,
    pub terms: SurplusTerms,
}

/// Shared context: a root system with its full cascade K(Π) precomputed.
pub struct IndexContext<'a> {
    pub rs: &'a RootSystem,
    pub full: Cascade,
}

impl<'a> IndexContext<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        let full = cascade(rs, rs.pi());
        IndexContext { rs, full }
    }

    pub fn parabolic_spec(&self, s: Subset) -> ParabolicSpec {
        let rs = self.rs;
        let k_s = cascade(rs, s);

        let mut t_s = Subset::EMPTY;
        for e in &self.full.elements {
            if e.support.is_subset_of(s) {
                t_s = t_s.union(e.support);
            }
        }
        let k_ts = cascade(rs, t_s);

        // E_S via Lemma: K(Π) \ K(T_S); checked against the direct
        // definition ε_K ∉ R_S below (debug builds and the test suite).
        let e_s: Vec<Subset> = self
            .full
            .elements
            .iter()
            .filter(|e| !k_ts.contains_support(e.support))
            .map(|e| e.support)
            .collect();
        debug_assert!(self
            .full
            .elements
            .iter()
            .all(|e| e_s.contains(&e.support) == !e.eps.support().is_subset_of(s)));

        let mut q_s: Vec<Root> = Vec::new();
        let mut gamma_sum_e_s = 0;
        for e in &self.full.elements {
            if e_s.contains(&e.support) {
                gamma_sum_e_s += e.gamma.len();
                for g in &e.gamma {
                    if g.support().is_subset_of(s) {
                        q_s.push(g.clone());
                    }
                }
            }
        }
        q_s.sort();
        q_s.dedup();

        let dim_v_s = self.dim_v(&k_s);

        let n_pos = rs.positive_roots.len();
        let n_pos_s = rs.positive_roots_supported_on(s).len();
        let dim_p = rs.rank + n_pos + n_pos_s;
        let dim_u = n_pos - n_pos_s;
        let dim_levi = rs.rank + 2 * n_pos_s;

        ParabolicSpec {
            s,
            t_s,
            e_s,
            q_s,
            dim_v_s,
            dim_p,
            dim_u,
            dim_levi,
            k_s_len: k_s.len(),
            k_ts_len: k_ts.len(),
            k_pi_len: self.full.len(),
            gamma_sum_e_s,
        }
    }

    /// dim V_S: exact rank of the matrix with rows R(S) ∪ R(Π).
    fn dim_v(&self, k_s: &Cascade) -> usize {
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for r in k_s.cascade_roots() {
            rows.push(r.coeffs.clone());
        }
        for r in self.full.cascade_roots() {
            rows.push(r.coeffs.clone());
        }
        rank_i64(&rows)
    }

    pub fn dim_v_of(&self, s: Subset) -> usize {
        self.dim_v(&cascade(self.rs, s))
    }

    pub fn index_report(&self, s: Subset) -> Result<IndexReport, Error> {
        let spec = self.parabolic_spec(s);
        let chi_p = chi_parabolic(self.rs, &spec)?;
        let chi_u = chi_nilradical(&spec)?;
        let sum = chi_p + chi_u;

        // sum formula, evaluated independently of chi_p + chi_u
        let rhs = self.rs.rank as i64
            + spec.k_s_len as i64
            - spec.k_ts_len as i64
            + 2 * (spec.k_pi_len as i64 - spec.dim_v_s as i64)
            + spec.q_s.len() as i64;
        if rhs != sum as i64 {
            return Err(Error::Internal(format!(
                "sum formula {rhs} disagrees with χ(p)+χ(u) = {sum} for {} S={:?}",
                self.rs.type_label(),
                s.indices_1based()
            )));
        }

        // condition (i): ♯(K(S) ∪ K(Π)) = dim V_S, union as a set of supports
        let k_s = cascade(self.rs, s);
        let mut union: Vec<Subset> = k_s.supports();
        for sup in self.full.supports() {
            if !union.contains(&sup) {
                union.push(sup);
            }
        }
        let cond_i = union.len() == spec.dim_v_s;

        // condition (ii): every component S' of S is in K(Π) or ♯(S'∖T_S)=1
        let cond_ii = self.rs.connected_components(s).into_iter().all(|comp| {
            self.full.contains_support(comp) || comp.difference(spec.t_s).len() == 1
        });

        Ok(IndexReport {
            type_label: self.rs.type_label(),
            rank: self.rs.rank,
            subset: s.indices_1based(),
            chi_p,
            chi_u,
            sum,
            equality: sum == self.rs.rank,
            cond_i,
            cond_ii,
            terms: SurplusTerms {
                k_s: spec.k_s_len,
                k_ts: spec.k_ts_len,
                k_pi: spec.k_pi_len,
                dim_v_s: spec.dim_v_s,
                q_s: spec.q_s.len(),
            },
        })
    }

    /// All 2^ℓ reports, verifying equality ⇔ (i) ∧ (ii) along the way.
    /// Reports for every S ⊆ Π, with the equality ⇔ (i) ∧ (ii) classification
    /// verified on each; a mismatch surfaces as `TheoremViolation`.
    pub fn enumerate_equality(&self) -> Result<Vec<(Subset, IndexReport)>, Error> {
        if self.rs.rank > MAX_ENUM_RANK {
            return Err(Error::BadSubset(format!(
                "rank {} exceeds the enumeration guard {MAX_ENUM_RANK}",
                self.rs.rank
            )));
        }
        let mut out = Vec::with_capacity(1 << self.rs.rank);
        for mask in 0..(1u64 << self.rs.rank) {
            let s = Subset(mask as u32);
            let report = self.index_report(s)?;
            if report.equality != (report.cond_i && report.cond_ii) {
                return Err(Error::TheoremViolation(
                    serde_json::to_string(&report).unwrap_or_default(),
                ));
            }
            out.push((s, report));
        }
        Ok(out)
    }
}

/// χ(p_S) = rk g + ♯K(Π) + ♯K(S) − 2 dim V_S.
pub fn chi_parabolic(rs: &RootSystem, spec: &ParabolicSpec) -> Result<usize, Error> {
    let v = rs.rank as i64 + spec.k_pi_len as i64 + spec.k_s_len as i64 - 2 * spec.dim_v_s as i64;
    if v < 0 {
        return Err(Error::Internal(format!(
            "negative parabolic index {v} for S={:?}",
            spec.s.indices_1based()
        )));
    }
    Ok(v as usize)
}

/// χ(u_S) = ♯E_S + ♯Q_S, cross-checked against the long form
/// ♯E_S + Σ_{K∈E_S} ♯Γ^K − dim u_S.
pub fn chi_nilradical(spec: &ParabolicSpec) -> Result<usize, Error> {
    let short = spec.e_s.len() + spec.q_s.len();
    let long = spec.e_s.len() as i64 + spec.gamma_sum_e_s as i64 - spec.dim_u as i64;
    if long != short as i64 {
        return Err(Error::Internal(format!(
            "nilradical index forms disagree ({long} vs {short}) for S={:?}",
            spec.s.indices_1based()
        )));
    }
    Ok(short)
}

/// Which branch of the minimal-parabolic trichotomy a simple root falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MinimalBranch {
    /// {α} ∈ K(Π); sum = rk g.
    InFullCascade,
    /// {α} ∉ K(Π) and dim V_S = ♯K(Π) + 1; sum = rk g.
    OutsideDimPlusOne,
    /// {α} ∉ K(Π) and dim V_S = ♯K(Π); sum = rk g + 2.
    OutsideDimEqual,
}

#[derive(Debug, Clone, Serialize)]
pub struct MinimalRow {
    /// 1-based simple-root index.
    pub i: usize,
    pub branch: MinimalBranch,
    pub sum: usize,
    pub equality: bool,
}

/// Per-simple-root classification of minimal parabolics p_{α_i}.
pub fn minimal_parabolic_classification(t: SimpleType) -> Result<Vec<MinimalRow>, Error> {
    let rs = RootSystem::build(t)?;
    let ctx = IndexContext::new(&rs);
    let mut rows = Vec::with_capacity(rs.rank);
    for i in 0..rs.rank {
        let s = Subset::singleton(i);
        let report = ctx.index_report(s)?;
        let in_cascade = ctx.full.contains_support(s);
        let dim_v = ctx.dim_v_of(s);
        let branch = if in_cascade {
            MinimalBranch::InFullCascade
        } else if dim_v == ctx.full.len() + 1 {
            MinimalBranch::OutsideDimPlusOne
        } else if dim_v == ctx.full.len() {
            MinimalBranch::OutsideDimEqual
        } else {
            return Err(Error::Internal(format!(
                "minimal parabolic α_{} of {t}: dim V_S = {dim_v}, ♯K(Π) = {}",
                i + 1,
                ctx.full.len()
            )));
        };
        let expected = match branch {
            MinimalBranch::InFullCascade | MinimalBranch::OutsideDimPlusOne => rs.rank,
            MinimalBranch::OutsideDimEqual => rs.rank + 2,
        };
        if report.sum != expected {
            return Err(Error::Internal(format!(
                "minimal parabolic α_{} of {t}: sum {} but branch predicts {expected}",
                i + 1,
                report.sum
            )));
        }
        rows.push(MinimalRow {
            i: i + 1,
            branch,
            sum: report.sum,
            equality: report.equality,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn sys(label: &str) -> RootSystem {
        RootSystem::build(SimpleType::parse(label).unwrap()).unwrap()
    }

    #[test]
    fn borel_spec() {
        let rs = sys("B3");
        let ctx = IndexContext::new(&rs);
        let spec = ctx.parabolic_spec(Subset::EMPTY);
        assert_eq!(spec.t_s, Subset::EMPTY);
        assert_eq!(spec.e_s.len(), ctx.full.len());
        assert!(spec.q_s.is_empty());
        assert_eq!(spec.dim_u, rs.positive_roots.len());
        assert_eq!(spec.dim_v_s, ctx.full.len());
    }

    #[test]
    fn full_parabolic_spec() {
        let rs = sys("C3");
        let ctx = IndexContext::new(&rs);
        let spec = ctx.parabolic_spec(rs.pi());
        assert_eq!(spec.t_s, rs.pi());
        assert!(spec.e_s.is_empty());
        assert!(spec.q_s.is_empty());
        assert_eq!(spec.dim_u, 0);
        assert_eq!(chi_parabolic(&rs, &spec).unwrap(), rs.rank);
        assert_eq!(chi_nilradical(&spec).unwrap(), 0);
    }

    #[test]
    fn a2_alpha1_worked_example() {
        let rs = sys("A2");
        let ctx = IndexContext::new(&rs);
        let s = Subset::singleton(0);
        let spec = ctx.parabolic_spec(s);
        assert_eq!(spec.t_s, Subset::EMPTY);
        assert_eq!(spec.e_s, vec![rs.pi()]);
        assert_eq!(spec.q_s, vec![Root::simple(2, 0)]);
        assert_eq!(spec.dim_v_s, 2);
        assert_eq!(chi_parabolic(&rs, &spec).unwrap(), 0);
        assert_eq!(chi_nilradical(&spec).unwrap(), 2);
        let report = ctx.index_report(s).unwrap();
        assert_eq!(report.sum, 2);
        assert!(report.equality);
    }

    #[test]
    fn dim_v_full_rank_types() {
        // dim V_S = rk g for every S in types with ♯K(Π) = rk g
        for label in ["B4", "C4", "D4", "F4", "G2"] {
            let rs = sys(label);
            let ctx = IndexContext::new(&rs);
            for mask in 0..(1u32 << rs.rank) {
                assert_eq!(ctx.dim_v_of(Subset(mask)), rs.rank, "{label}");
            }
        }
    }

    #[test]
    fn borel_sum_is_rank() {
        for label in ["A5", "B4", "C4", "D5", "E6", "F4", "G2"] {
            let rs = sys(label);
            let ctx = IndexContext::new(&rs);
            let report = ctx.index_report(Subset::EMPTY).unwrap();
            assert_eq!(report.sum, rs.rank, "{label}");
            assert!(report.equality);
        }
    }

    #[test]
    fn e6_alpha2_is_rank_plus_two() {
        let rs = sys("E6");
        let ctx = IndexContext::new(&rs);
        let report = ctx.index_report(Subset::singleton(1)).unwrap();
        assert_eq!(report.sum, 8);
        assert!(!report.equality);
    }

    #[test]
    fn a_type_maximal_parabolic_extremities() {
        for l in 2..=8usize {
            let rs = sys(&format!("A{l}"));
            let ctx = IndexContext::new(&rs);
            for drop in 0..l {
                let s = rs.pi().difference(Subset::singleton(drop));
                let report = ctx.index_report(s).unwrap();
                let expect = drop == 0 || drop == l - 1;
                assert_eq!(report.equality, expect, "A{l} drop α_{}", drop + 1);
            }
        }
    }

    #[test]
    fn g2_equality_subsets() {
        let rs = sys("G2");
        let ctx = IndexContext::new(&rs);
        let mut eq: Vec<Subset> = Vec::new();
        for (s, r) in ctx.enumerate_equality().unwrap() {
            if r.equality {
                eq.push(s);
            }
        }
        assert_eq!(eq, vec![Subset::EMPTY, Subset::singleton(0), Subset::full(2)]);
    }

    #[test]
    fn b_type_minimal_parabolics_odd() {
        for l in 2..=6usize {
            let t = SimpleType::new(Family::B, l).unwrap();
            for row in minimal_parabolic_classification(t).unwrap() {
                assert_eq!(row.equality, row.i % 2 == 1, "B{l}, i={}", row.i);
            }
        }
    }

    #[test]
    fn f4_minimal_parabolics() {
        let t = SimpleType::parse("F4").unwrap();
        for row in minimal_parabolic_classification(t).unwrap() {
            assert_eq!(row.equality, row.i == 2, "F4, i={}", row.i);
        }
    }

    #[test]
    fn lemma_e_s_characterisation() {
        // E_S = K(Π) \ K(T_S) must match {K : ε_K ∉ R_S} for every S
        for label in ["A5", "D5", "E6"] {
            let rs = sys(label);
            let ctx = IndexContext::new(&rs);
            for mask in 0..(1u32 << rs.rank) {
                let s = Subset(mask);
                let spec = ctx.parabolic_spec(s);
                for e in &ctx.full.elements {
                    let direct = !e.eps.support().is_subset_of(s);
                    assert_eq!(spec.e_s.contains(&e.support), direct, "{label}");
                }
            }
        }
    }

    #[test]
    fn q_s_empty_iff_s_equals_t_s() {
        for label in ["A5", "B4", "D5"] {
            let rs = sys(label);
            let ctx = IndexContext::new(&rs);
            for mask in 0..(1u32 << rs.rank) {
                let s = Subset(mask);
                let spec = ctx.parabolic_spec(s);
                assert_eq!(spec.q_s.is_empty(), s == spec.t_s, "{label}");
            }
        }
    }

    #[test]
    fn remark_cascade_inclusion_forces_equality() {
        // K(S) ⊆ K(Π) ⇒ sum = rk g
        for label in ["A6", "B4", "E6"] {
            let rs = sys(label);
            let ctx = IndexContext::new(&rs);
            for mask in 0..(1u32 << rs.rank) {
                let s = Subset(mask);
                let k_s = cascade(&rs, s);
                let included =
                    k_s.supports().iter().all(|sup| ctx.full.contains_support(*sup));
                if included {
                    let report = ctx.index_report(s).unwrap();
                    assert!(report.equality, "{label} S={:?}", s.indices_1based());
                }
            }
        }
    }

    #[test]
    fn enumeration_guard() {
        let rs = sys("A3");
        let ctx = IndexContext::new(&rs);
        assert_eq!(ctx.enumerate_equality().unwrap().len(), 8);
    }

    #[test]
    fn semisimple_product_reduces_to_factors() {
        let a2 = SimpleType::parse("A2").unwrap();
        let g2 = SimpleType::parse("G2").unwrap();
        let prod = RootSystem::build_product(&[a2, g2]).unwrap();
        let ctx = IndexContext::new(&prod);

        let ra2 = sys("A2");
        let rg2 = sys("G2");
        let ctx_a = IndexContext::new(&ra2);
        let ctx_g = IndexContext::new(&rg2);

        for ma in 0..4u32 {
            for mg in 0..4u32 {
                let s = Subset(ma | (mg << 2));
                let rp = ctx.index_report(s).unwrap();
                let r1 = ctx_a.index_report(Subset(ma)).unwrap();
                let r2 = ctx_g.index_report(Subset(mg)).unwrap();
                assert_eq!(rp.chi_p, r1.chi_p + r2.chi_p);
                assert_eq!(rp.chi_u, r1.chi_u + r2.chi_u);
                assert_eq!(rp.equality, r1.equality && r2.equality);
            }
        }
    }
}
