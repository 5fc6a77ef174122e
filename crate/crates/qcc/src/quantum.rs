//! Quantum convolutional stabilizer parameters derived from Hermitian
//! self-orthogonal classical convolutional codes, plus the certificate
//! machinery that records every check.
//!
//! A Hermitian self-orthogonal (n, (n−k)/2, γ; μ) code over F_{q²} yields an
//! [(n, k, μ; γ, d_f)]_q stabilizer code whose free distance equals the dual
//! free distance provided the code's own weight strictly exceeds it. The two
//! families certified here pin d_f at 2i + 2 (family I, n = q² + 1) and
//! 2i + 3 (family II, n = (q² + 1)/10), meeting the quantum Singleton bound
//! with equality.

use crate::block::{self, build_code_in, FieldCtx};
use crate::conv::{self, free_distance_sandwich, ConvCode};
use crate::cosets::{theta_decomposition, CosetContext, DefiningSet, Family};
use crate::error::{Error, Result};
use crate::gf::{factor_prime_power, make_tower, FieldTower};
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

/// The parameter tuple [(n, k, μ; γ, d_f)]_q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QccParams {
    pub n: u64,
    pub k: u64,
    pub mu: u64,
    pub gamma: u64,
    pub d_f: u64,
    #[serde(skip)]
    pub q: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIPPED")]
    Skipped,
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "PASS"),
            CheckStatus::Fail => write!(f, "FAIL"),
            CheckStatus::Skipped => write!(f, "SKIP"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckResult {
    fn pass_fail(ok: bool, detail: impl Into<String>) -> Self {
        CheckResult { status: if ok { CheckStatus::Pass } else { CheckStatus::Fail }, detail: detail.into() }
    }

    fn skipped(reason: impl Into<String>) -> Self {
        CheckResult { status: CheckStatus::Skipped, detail: reason.into() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TowerInfo {
    pub p: u64,
    pub e: u32,
    /// Defining polynomials (base, quadratic step, quartic step);
    /// coefficient lists lowest degree first, coefficients as F_p coordinates.
    pub irreducibles: [Vec<Vec<u64>>; 3],
}

#[derive(Debug, Clone, Serialize)]
pub struct DefiningSetsInfo {
    pub modulus: u64,
    pub z: Vec<u64>,
    pub z0: Vec<u64>,
    pub z1: Vec<u64>,
}

/// The evidence bundle for one construction.
#[derive(Debug, Clone, Serialize)]
pub struct QccCertificate {
    pub family: Family,
    pub q: u64,
    pub i: u64,
    pub params: QccParams,
    pub singleton_bound: u64,
    pub mds: bool,
    pub checks: BTreeMap<String, CheckResult>,
    pub tower: TowerInfo,
    pub defining_sets: DefiningSetsInfo,
    pub erratum_notes: Vec<String>,
    pub level: u8,
    pub timings_ms: BTreeMap<String, u64>,
}

/// Checks executed at level 1 (all algebraic certifications).
pub const LEVEL1_CHECKS: &[&str] = &[
    "basic",
    "bch_bound",
    "coset_decomposition",
    "dual_containing_codewords",
    "dual_containing_cosets",
    "reduced",
    "sandwich_pin",
    "self_orthogonal",
    "singleton_equality",
];

/// Additional checks executed at level 2 (exhaustive distance oracles).
pub const LEVEL2_CHECKS: &[&str] = &["distance_columns", "dual_distance"];

impl QccCertificate {
    /// VALID means: no executed check failed, and every check required at
    /// the requested level ran and passed.
    pub fn is_valid(&self) -> bool {
        if self.checks.values().any(|c| c.status == CheckStatus::Fail) {
            return false;
        }
        let mut required: Vec<&str> = Vec::new();
        if self.level >= 1 {
            required.extend_from_slice(LEVEL1_CHECKS);
        }
        if self.level >= 2 {
            required.extend_from_slice(LEVEL2_CHECKS);
        }
        required
            .iter()
            .all(|name| self.checks.get(*name).is_some_and(|c| c.status == CheckStatus::Pass))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization cannot fail")
    }
}

/// Verification depth and work budgets for one construction run.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// 0 = closed-form parameters only; 1 = all algebraic checks;
    /// 2 = adds the exhaustive distance oracles.
    pub level: u8,
    /// Cap on column-subset rank checks at level 2.
    pub budget_ranks: u64,
    /// Cap on enumerated dual words at level 2.
    pub budget_words: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { level: 1, budget_ranks: 100_000_000, budget_words: 100_000_000 }
    }
}

impl VerifyOptions {
    pub fn level(level: u8) -> Self {
        VerifyOptions { level, ..Default::default() }
    }
}

/// Exact evaluation of the quantum Singleton bound
/// (n−k)/2·(⌊2γ/(n+k)⌋ + 1) + γ + 1.
pub fn quantum_singleton_bound(n: u64, k: u64, gamma: u64) -> u64 {
    assert!(n > k, "the bound needs n > k");
    assert_eq!((n - k) % 2, 0, "n - k must be even for a stabilizer code");
    (n - k) / 2 * (2 * gamma / (n + k) + 1) + gamma + 1
}

/// A code is MDS when its free distance meets the quantum Singleton bound.
pub fn is_mds(params: &QccParams) -> bool {
    params.d_f == quantum_singleton_bound(params.n, params.k, params.gamma)
}

/// Stabilizer parameters from a Hermitian self-orthogonal classical code:
/// k = n − 2·dim(V), with d_f equal to the pinned dual free distance.
///
/// Requires the self-orthogonality to hold and the classical free-distance
/// lower bound to strictly exceed d_f, so that wt(V^{⊥h} \ V) = wt(V^{⊥h}).
pub fn stabilizer_params(q: u64, classical: &ConvCode, d_f_pinned: u64) -> Result<QccParams> {
    if !conv::hermitian_self_orthogonal(classical.generator()) {
        return Err(Error::Precondition(
            "the classical convolutional code is not Hermitian self-orthogonal".into(),
        ));
    }
    if classical.free_distance_lower() <= d_f_pinned {
        return Err(Error::Precondition(format!(
            "weight separation fails: wt(V) >= {} must strictly exceed the dual free distance {}",
            classical.free_distance_lower(),
            d_f_pinned
        )));
    }
    let n = classical.n() as u64;
    Ok(QccParams {
        n,
        k: n - 2 * classical.dim() as u64,
        mu: classical.memory() as u64,
        gamma: classical.degree() as u64,
        d_f: d_f_pinned,
        q,
    })
}

fn odd_prime_power(q: u64) -> Result<(u64, u32)> {
    match factor_prime_power(q) {
        Some((p, e)) if p != 2 => Ok((p, e)),
        _ => Err(Error::Precondition(format!("q = {q} must be an odd prime power"))),
    }
}

/// The theorem's index range 2 ≤ i ≤ (q−1)/2 for family I, after validating q.
pub fn index_range_family_i(q: u64) -> Result<(u64, u64)> {
    odd_prime_power(q)?;
    if q < 5 {
        return Err(Error::Precondition(format!("family I requires q >= 5 (got q={q})")));
    }
    Ok((2, (q - 1) / 2))
}

/// The theorem's index range 2 ≤ i ≤ 2m−1 for family II, after validating q.
pub fn index_range_family_ii(q: u64) -> Result<(u64, u64)> {
    odd_prime_power(q)?;
    let m = q / 10;
    if !(q % 10 == 3 || q % 10 == 7) || m < 2 {
        return Err(Error::Precondition(format!(
            "family II requires q = 10m+3 or 10m+7 with m >= 2 (got q={q}, m={m})"
        )));
    }
    Ok((2, 2 * m - 1))
}

/// Index range for either family.
pub fn index_range(family: Family, q: u64) -> Result<(u64, u64)> {
    match family {
        Family::I => index_range_family_i(q),
        Family::II => index_range_family_ii(q),
    }
}

fn validate_family_i(q: u64, i: u64) -> Result<()> {
    let (lo, hi) = index_range_family_i(q)?;
    if !(lo..=hi).contains(&i) {
        return Err(Error::Precondition(format!(
            "i must satisfy 2 <= i <= (q-1)/2 = {hi} (got i={i})"
        )));
    }
    Ok(())
}

fn validate_family_ii(q: u64, i: u64) -> Result<()> {
    let (lo, hi) = index_range_family_ii(q)?;
    if !(lo..=hi).contains(&i) {
        return Err(Error::Precondition(format!(
            "i must satisfy 2 <= i <= 2m-1 = {hi} (got i={i})"
        )));
    }
    Ok(())
}

/// Runs the family-I pipeline for [(q²+1, q²−4i+3, 1; 2, 2i+2)]_q.
pub fn construct_family_i(q: u64, i: u64, opts: &VerifyOptions) -> Result<QccCertificate> {
    validate_family_i(q, i)?;
    construct(Family::I, q, i, opts)
}

/// Runs the family-II pipeline for [((q²+1)/10, n−4i, 1; 2, 2i+3)]_q.
pub fn construct_family_ii(q: u64, i: u64, opts: &VerifyOptions) -> Result<QccCertificate> {
    validate_family_ii(q, i)?;
    construct(Family::II, q, i, opts)
}

struct FamilyPlan {
    ctx: CosetContext,
    z: DefiningSet,
    z0: DefiningSet,
    z1: DefiningSet,
    k_formula: u64,
    d_formula: u64,
    kappa: u64,
    d0_expected: u64,
    d_dual_expected: u64,
}

fn plan(family: Family, q: u64, i: u64) -> Result<FamilyPlan> {
    match family {
        Family::I => {
            let ctx = CosetContext::family_i(q)?;
            let n = ctx.n();
            Ok(FamilyPlan {
                ctx,
                z: DefiningSet::family_i(&ctx, i)?,
                z0: DefiningSet::family_i(&ctx, i - 1)?,
                z1: DefiningSet::single_coset(&ctx, ctx.rep_below_s(i))?,
                k_formula: n - 4 * i + 2,
                d_formula: 2 * i + 2,
                kappa: 2 * i - 1,
                d0_expected: 2 * i,
                d_dual_expected: n - 2 * i,
            })
        }
        Family::II => {
            let ctx = CosetContext::family_ii(q)?;
            let n = ctx.n();
            let half = (n - 1) / 2;
            Ok(FamilyPlan {
                ctx,
                z: DefiningSet::family_ii(&ctx, i)?,
                z0: DefiningSet::family_ii(&ctx, i - 1)?,
                z1: DefiningSet::single_coset(&ctx, ctx.rep_below_s(half - i))?,
                k_formula: n - 4 * i,
                d_formula: 2 * i + 3,
                kappa: 2 * i,
                d0_expected: 2 * i + 1,
                d_dual_expected: n - 2 * i - 1,
            })
        }
    }
}

fn erratum_notes(family: Family, q: u64) -> Vec<String> {
    let mut notes = Vec::new();
    if family == Family::II {
        notes.push(
            "the free distance of the underlying classical code is reported as the bound \
             wt(V) >= n-2i-1; published statements of this family vary between n-2i-1 and \
             n-2i+1, and the weaker figure is adopted since either suffices to pin the \
             dual free distance"
                .into(),
        );
        if q == 37 {
            notes.push(
                "suspected erratum: the published table lists the n = 137 row under q = 13 \
                 (m = 3), but q = 13 gives n = 17 and m = 1 with an empty index range; the \
                 row's parameters match q = 37 = 10*3+7, reproduced here"
                    .into(),
            );
        }
    }
    notes
}

fn elapsed_ms(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

fn construct(family: Family, q: u64, i: u64, opts: &VerifyOptions) -> Result<QccCertificate> {
    if opts.level > 2 {
        return Err(Error::Precondition(format!(
            "verification level must be 0, 1 or 2 (got {})",
            opts.level
        )));
    }
    let total_timer = Instant::now();
    let mut timings = BTreeMap::new();
    let mut checks: BTreeMap<String, CheckResult> = BTreeMap::new();

    let timer = Instant::now();
    let plan = plan(family, q, i)?;
    timings.insert("cosets".to_string(), elapsed_ms(timer));

    let timer = Instant::now();
    let (p, e) = factor_prime_power(q).expect("validated prime power");
    let tower: Arc<FieldTower> = Arc::new(make_tower(p, e)?);
    timings.insert("tower".to_string(), elapsed_ms(timer));

    let tower_info = TowerInfo { p, e, irreducibles: tower.defining_polynomials() };
    let defining_sets = DefiningSetsInfo {
        modulus: plan.ctx.modulus(),
        z: plan.z.exponents().to_vec(),
        z0: plan.z0.exponents().to_vec(),
        z1: plan.z1.exponents().to_vec(),
    };
    let n = plan.ctx.n();
    let mut params = QccParams { n, k: plan.k_formula, mu: 1, gamma: 2, d_f: plan.d_formula, q };
    let singleton_bound = quantum_singleton_bound(n, plan.k_formula, 2);

    if opts.level == 0 {
        for name in LEVEL1_CHECKS.iter().chain(LEVEL2_CHECKS) {
            checks.insert(
                name.to_string(),
                CheckResult::skipped("level 0 reports closed-form parameters only"),
            );
        }
        timings.insert("total".to_string(), elapsed_ms(total_timer));
        return Ok(QccCertificate {
            family,
            q,
            i,
            params,
            singleton_bound,
            mds: params.d_f == singleton_bound,
            checks,
            tower: tower_info,
            defining_sets,
            erratum_notes: erratum_notes(family, q),
            level: opts.level,
            timings_ms: timings,
        });
    }

    // ---- level >= 1: algebraic checks ----

    let timer = Instant::now();
    match theta_decomposition(&plan.ctx) {
        Ok(d) => checks.insert(
            "coset_decomposition".into(),
            CheckResult::pass_fail(
                true,
                format!("{} singletons, {} pairs covering n = {}", d.singletons.len(), d.pairs.len(), n),
            ),
        ),
        Err(err) => checks
            .insert("coset_decomposition".into(), CheckResult::pass_fail(false, err.to_string())),
    };

    let coset_dual = plan.z.is_dual_containing();
    checks.insert(
        "dual_containing_cosets".into(),
        CheckResult::pass_fail(
            coset_dual,
            format!("|Z| = {}, Z and Z^(-q) {}", plan.z.len(), if coset_dual { "disjoint" } else { "intersect" }),
        ),
    );
    timings.insert("coset_checks".to_string(), elapsed_ms(timer));

    let timer = Instant::now();
    let env = FieldCtx::with_tower(&plan.ctx, Arc::clone(&tower))?;
    let code = build_code_in(&env, &plan.z)?;
    let code0 = build_code_in(&env, &plan.z0)?;
    let code1 = build_code_in(&env, &plan.z1)?;
    timings.insert("block_codes".to_string(), elapsed_ms(timer));

    let bch = block::bch_lower_bound(&plan.z);
    let bch0 = block::bch_lower_bound(&plan.z0);
    let bch_ok = bch == plan.d_formula
        && bch == code.singleton_upper()
        && bch0 == plan.d0_expected
        && bch0 == code0.singleton_upper();
    checks.insert(
        "bch_bound".into(),
        CheckResult::pass_fail(
            bch_ok,
            format!("d(C) = {bch} and d(C0) = {bch0}, each pinned by BCH = Singleton"),
        ),
    );

    let timer = Instant::now();
    let codeword_dual = code.verify_dual_containing_codewords();
    checks.insert(
        "dual_containing_codewords".into(),
        CheckResult::pass_fail(
            codeword_dual && codeword_dual == coset_dual,
            format!(
                "conjugated check rows reduce to 0 mod genpoly: {codeword_dual}; agrees with the coset criterion: {}",
                codeword_dual == coset_dual
            ),
        ),
    );
    timings.insert("dual_containment".to_string(), elapsed_ms(timer));

    let timer = Instant::now();
    // the stacked blocks must themselves be a parity check of C
    let stacked = code0.check_expanded().stacked(code1.check_expanded());
    if stacked.rank() != plan.z.len() {
        return Err(Error::Internal(format!(
            "stacked split blocks have rank {}, expected |Z| = {}",
            stacked.rank(),
            plan.z.len()
        )));
    }
    let generator = conv::split_and_build(code0.check_expanded(), code1.check_expanded())?;
    if generator.rows() as u64 != plan.kappa || generator.memory() != 1 || generator.degree() != 2 {
        return Err(Error::Internal(format!(
            "generator has shape ({}, mu={}, gamma={}), expected ({}, 1, 2)",
            generator.rows(),
            generator.memory(),
            generator.degree(),
            plan.kappa
        )));
    }

    let gcd = conv::minor_gcd(&generator);
    let basic = !gcd.is_zero() && gcd.is_unit();
    let gcd_coords: Vec<Vec<u64>> =
        gcd.0.iter().map(|&c| tower.fq2().coords_from_code(c)).collect();
    checks.insert(
        "basic".into(),
        CheckResult::pass_fail(basic, format!("minor gcd coefficients (lowest first): {gcd_coords:?}")),
    );

    let reduced = conv::is_reduced(&generator);
    checks.insert(
        "reduced".into(),
        CheckResult::pass_fail(reduced, format!("leading-coefficient matrix rank {} of {}", generator.leading_coefficient_matrix().rank(), generator.rows())),
    );

    let herm = conv::hermitian_self_orthogonal(&generator);
    checks.insert(
        "self_orthogonal".into(),
        CheckResult::pass_fail(herm, "all pairwise Laurent products vanish".to_string()),
    );
    timings.insert("conv_checks".to_string(), elapsed_ms(timer));

    let dmu = code1.exact_distance_codim2()?;
    let sandwich = free_distance_sandwich(plan.d0_expected, dmu, plan.d_formula, plan.d_dual_expected);
    let pinned = sandwich.pinned();
    checks.insert(
        "sandwich_pin".into(),
        CheckResult::pass_fail(
            pinned == Some(plan.d_formula),
            format!(
                "min({} + {dmu}, {}) <= d_f_dual <= {} pins {:?}; d_f >= {}",
                plan.d0_expected, plan.d_formula, plan.d_formula, pinned, plan.d_dual_expected
            ),
        ),
    );

    let classical = ConvCode::new(generator, sandwich);
    let live = stabilizer_params(q, &classical, plan.d_formula)?;
    if live != params {
        return Err(Error::Internal(format!(
            "pipeline parameters {live:?} do not match the closed form {params:?}"
        )));
    }
    params = live;

    let bound = quantum_singleton_bound(params.n, params.k, params.gamma);
    let mds = params.d_f == bound;
    checks.insert(
        "singleton_equality".into(),
        CheckResult::pass_fail(mds, format!("singleton bound {bound}, d_f = {}", params.d_f)),
    );

    if opts.level >= 2 {
        let timer = Instant::now();
        let w = (plan.d_formula - 1) as usize;
        let subsets = block::binomial(n, plan.d_formula - 1);
        let columns_ok = code.certify_distance_columns(w, opts.budget_ranks)?;
        checks.insert(
            "distance_columns".into(),
            CheckResult::pass_fail(
                columns_ok,
                format!("all {subsets} column {w}-subsets of the parity check are independent"),
            ),
        );
        let dual_distance = code.dual_distance_exhaustive(opts.budget_words)?;
        checks.insert(
            "dual_distance".into(),
            CheckResult::pass_fail(
                dual_distance == plan.d_dual_expected,
                format!("exhaustive dual distance {dual_distance}, expected {}", plan.d_dual_expected),
            ),
        );
        timings.insert("distance_oracles".to_string(), elapsed_ms(timer));
    } else {
        for name in LEVEL2_CHECKS {
            checks.insert(
                name.to_string(),
                CheckResult::skipped("exhaustive oracle runs at level 2"),
            );
        }
    }

    timings.insert("total".to_string(), elapsed_ms(total_timer));
    Ok(QccCertificate {
        family,
        q,
        i,
        params,
        singleton_bound,
        mds,
        checks,
        tower: tower_info,
        defining_sets,
        erratum_notes: erratum_notes(family, q),
        level: opts.level,
        timings_ms: timings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_bound_values() {
        assert_eq!(quantum_singleton_bound(50, 44, 2), 6);
        assert_eq!(quantum_singleton_bound(53, 45, 2), 7);
        assert_eq!(quantum_singleton_bound(10, 8, 0), 2);
    }

    #[test]
    fn mds_detection() {
        let good = QccParams { n: 50, k: 44, mu: 1, gamma: 2, d_f: 6, q: 7 };
        assert!(is_mds(&good));
        let bad = QccParams { d_f: 5, ..good };
        assert!(!is_mds(&bad));
    }

    #[test]
    fn family_i_small_instances() {
        let cert = construct_family_i(5, 2, &VerifyOptions::level(1)).unwrap();
        assert_eq!(
            cert.params,
            QccParams { n: 26, k: 20, mu: 1, gamma: 2, d_f: 6, q: 5 }
        );
        assert!(cert.is_valid());
        assert!(cert.mds);
        assert!(cert.erratum_notes.is_empty());

        let cert = construct_family_i(7, 2, &VerifyOptions::level(1)).unwrap();
        assert_eq!(cert.params, QccParams { n: 50, k: 44, mu: 1, gamma: 2, d_f: 6, q: 7 });
        assert!(cert.is_valid());

        let cert = construct_family_i(7, 3, &VerifyOptions::level(1)).unwrap();
        assert_eq!(cert.params, QccParams { n: 50, k: 40, mu: 1, gamma: 2, d_f: 8, q: 7 });
        assert!(cert.is_valid());
    }

    #[test]
    fn family_i_prime_power_q() {
        let cert = construct_family_i(9, 2, &VerifyOptions::level(1)).unwrap();
        assert_eq!(cert.params, QccParams { n: 82, k: 76, mu: 1, gamma: 2, d_f: 6, q: 9 });
        assert!(cert.is_valid());
    }

    #[test]
    fn family_i_range_errors() {
        assert!(matches!(
            construct_family_i(5, 3, &VerifyOptions::default()),
            Err(Error::Precondition(msg)) if msg.contains("(q-1)/2 = 2")
        ));
        assert!(construct_family_i(4, 2, &VerifyOptions::default()).is_err());
        assert!(matches!(
            construct_family_i(3, 2, &VerifyOptions::default()),
            Err(Error::Precondition(msg)) if msg.contains("q >= 5")
        ));
    }

    #[test]
    fn family_ii_instances() {
        let cert = construct_family_ii(23, 2, &VerifyOptions::level(1)).unwrap();
        assert_eq!(cert.params, QccParams { n: 53, k: 45, mu: 1, gamma: 2, d_f: 7, q: 23 });
        assert!(cert.is_valid());
        assert_eq!(cert.erratum_notes.len(), 1);

        let cert = construct_family_ii(23, 3, &VerifyOptions::level(1)).unwrap();
        assert_eq!(cert.params, QccParams { n: 53, k: 41, mu: 1, gamma: 2, d_f: 9, q: 23 });
        assert!(cert.is_valid());
    }

    #[test]
    fn family_ii_rejects_m1() {
        assert!(matches!(
            construct_family_ii(13, 2, &VerifyOptions::default()),
            Err(Error::Precondition(msg)) if msg.contains("m >= 2")
        ));
    }

    #[test]
    fn level0_skips_everything() {
        let cert = construct_family_i(7, 2, &VerifyOptions::level(0)).unwrap();
        assert!(cert.checks.values().all(|c| c.status == CheckStatus::Skipped));
        assert!(cert.is_valid());
        assert_eq!(cert.params.k, 44);
        assert!(cert.mds);
    }

    #[test]
    fn level1_skips_distance_oracles() {
        let cert = construct_family_i(5, 2, &VerifyOptions::level(1)).unwrap();
        assert_eq!(cert.checks["distance_columns"].status, CheckStatus::Skipped);
        assert_eq!(cert.checks["dual_distance"].status, CheckStatus::Skipped);
        assert_eq!(cert.checks["basic"].status, CheckStatus::Pass);
    }

    #[test]
    fn level2_budget_exhaustion() {
        // 49^5 dual words exceed the default budget.
        let result = construct_family_i(7, 2, &VerifyOptions::level(2));
        assert!(matches!(result, Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn weight_separation_guard() {
        // d_f_pinned at least the free-distance lower bound must be rejected.
        let cert = construct_family_i(5, 2, &VerifyOptions::level(1)).unwrap();
        assert!(cert.is_valid());
        // n−2i = 22 > 6 holds here; the guard itself is exercised through
        // stabilizer_params in the pipeline. Rebuild the classical code and
        // ask for an absurd pin.
        let ctx = CosetContext::family_i(5).unwrap();
        let env = FieldCtx::new(&ctx).unwrap();
        let z0 = DefiningSet::family_i(&ctx, 1).unwrap();
        let z1 = DefiningSet::single_coset(&ctx, ctx.s() - 2 * ctx.r()).unwrap();
        let c0 = build_code_in(&env, &z0).unwrap();
        let c1 = build_code_in(&env, &z1).unwrap();
        let g = conv::split_and_build(c0.check_expanded(), c1.check_expanded()).unwrap();
        let classical = ConvCode::new(g, free_distance_sandwich(4, 2, 6, 22));
        assert!(matches!(
            stabilizer_params(5, &classical, 22),
            Err(Error::Precondition(msg)) if msg.contains("weight separation")
        ));
    }

    #[test]
    fn certificate_json_shape() {
        let cert = construct_family_i(5, 2, &VerifyOptions::level(0)).unwrap();
        let value: serde_json::Value = serde_json::from_str(&cert.to_json()).unwrap();
        for key in [
            "family",
            "q",
            "i",
            "params",
            "singleton_bound",
            "mds",
            "checks",
            "tower",
            "defining_sets",
            "erratum_notes",
            "level",
            "timings_ms",
        ] {
            assert!(value.get(key).is_some(), "missing certificate field {key}");
        }
        assert_eq!(value["params"]["n"], 26);
        assert!(value["params"].get("q").is_none());
    }
}
