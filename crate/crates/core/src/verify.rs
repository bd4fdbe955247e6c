//! Randomized verification harness.
//!
//! * [`sample_params`] draws deterministic, constraint-satisfying parameter
//!   batches for any catalog entry;
//! * [`verify_relation`] / [`verify_all`] run residual campaigns and produce
//!   serializable [`VerificationReport`]s;
//! * [`limit_check`] drives the base toward one and measures how fast each
//!   q-side coefficient approaches its classical counterpart;
//! * [`abel_check`] certifies the finite summation-by-parts identity, and
//!   [`pattern_sequences`] rebuilds the concrete summand sequences whose
//!   differences generate the four foundational relations;
//! * [`gauss_check`] exercises the ₂φ₁ product evaluation the reduced
//!   catalog entries lean on.
//!
//! Campaigns fan out over sample points with rayon, but every report is a
//! pure function of (relation, seed, count, policy): points are drawn
//! sequentially up front and aggregation runs in sample order, so output
//! bytes never depend on thread scheduling.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qpoch::{qpoch_ratio, PochOrder};
use crate::relations::{self, phi2, ParamSet, Pattern, Relation, MAX_SAMPLED_COEFF};
use crate::scalar::{PrecisionPolicy, Scalar};
use crate::series::{self, SeriesKind};

/// Residual bound every classical entry must meet; q-side entries are held
/// to `5 · tol` of the active policy instead.
pub const CLASSICAL_PASS_THRESHOLD: f64 = 1e-8;

/// Rejection budget per sample point before sampling gives up. Exhaustion
/// signals an over-tight catalog constraint, not bad luck: admissible
/// regions of healthy entries accept far more than one draw in 10⁴.
pub const SAMPLING_BUDGET: u64 = 10_000;

/// Relation/corollary pairs the limit sweep runs over: one per foundational
/// pattern plus four of the named two-/three-term relations. Every pair's
/// coefficients are plain rational functions on both sides, so the gap at
/// base 1 − ε is a clean O(ε) signal.
pub const LIMIT_PAIRS: [(&str, &str); 8] = [
    ("pattern-A-eq-a", "corl-pattern-A-eq-a"),
    ("pattern-B-eq-b", "corl-pattern-B-eq-b"),
    ("pattern-C-eq-c", "corl-pattern-C-eq-c"),
    ("pattern-D-eq-d", "corl-pattern-D-eq-d"),
    ("thm-3.1", "corl-thm-3.1"),
    ("thm-3.4", "corl-thm-3.4"),
    ("thm-4.2", "corl-thm-4.2"),
    ("thm-4.6", "corl-thm-4.6"),
];

/// Relations rerun at extended precision to demonstrate that residuals are
/// pure roundoff/truncation: the identities being exact, more digits must
/// shrink the defect by orders of magnitude.
pub const SHARPENING_RELATIONS: [&str; 5] = [
    "pattern-A-eq-a",
    "pattern-C-eq-c",
    "thm-3.1",
    "thm-4.1",
    "thm-4.11",
];

/// (relation, coefficient rule) pairs for the sensitivity check: perturbing
/// the named rule by 1% must make the named relation fail verification.
pub const MUTATION_TARGETS: [(&str, &str); 5] = [
    ("pattern-A-eq-a", "A-blackboard-q"),
    ("thm-3.1", "thm-3.1-q"),
    ("thm-4.1", "thm-4.1-Y-q"),
    ("thm-4.11", "thm-4.11-Z-q"),
    ("prop-4.1", "prop-4.1-Y-q"),
];

pub(crate) fn fnv1a(text: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

// ---------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------

/// A deterministic batch of admissible parameter points for one relation.
#[derive(Debug, Clone)]
pub struct SampleBatch {
    pub relation_id: &'static str,
    pub seed: u64,
    pub points: Vec<ParamSet>,
    /// Draws discarded across the whole batch before `points` filled up.
    pub rejected: u64,
}

fn random_q_point(rel: &Relation, policy: &PrecisionPolicy, rng: &mut ChaCha8Rng) -> ParamSet {
    let q = policy.real(rng.gen_range(0.2..0.8));
    let mut params = ParamSet::new(q);
    for name in rel.free_params {
        let modulus = rng.gen_range(0.1..0.9);
        let phase = rng.gen_range(0.0..std::f64::consts::TAU);
        params.set(
            name,
            policy.scalar(modulus * phase.cos(), modulus * phase.sin()),
        );
    }
    params
}

fn random_classical_point(
    rel: &Relation,
    policy: &PrecisionPolicy,
    rng: &mut ChaCha8Rng,
) -> ParamSet {
    // Real points; each coordinate drawn either small (numerator-like) or
    // large (denominator-like) so pinned entries find their margin, and
    // occasionally negated: entries whose pinned lower parameter couples
    // the margin to an upper parameter converge fastest when that
    // parameter dips negative.
    let mut params = ParamSet::new(policy.zero());
    for name in rel.free_params {
        let magnitude = if rng.gen_bool(0.5) {
            rng.gen_range(0.15..1.4)
        } else {
            rng.gen_range(2.2..7.0)
        };
        let value = if rng.gen_bool(0.25) {
            -magnitude
        } else {
            magnitude
        };
        params.set(name, policy.real(value));
    }
    params
}

/// Reason a candidate draw was rejected, or None if it is usable.
fn rejection(rel: &Relation, params: &ParamSet, policy: &PrecisionPolicy) -> Option<String> {
    if let Some(name) = rel.violated_constraint(params, policy) {
        return Some(name);
    }
    // Admissible, but keep clear of coefficient blow-ups: near a pole of a
    // coefficient the identity still holds, yet the series tolerances have
    // to shrink by the same factor, making the point disproportionately
    // expensive and numerically dull.
    let moderate = rel.rhs.iter().all(|term| {
        term.coefficient
            .eval(params, policy)
            .is_ok_and(|c| c.abs_f64() <= MAX_SAMPLED_COEFF)
    });
    if moderate {
        None
    } else {
        Some("coefficients-moderate".into())
    }
}

/// Draw `count` admissible points for `relation`, deterministically in
/// (relation id, seed). The base is drawn real in [0.2, 0.8] and every free
/// parameter from the annulus 0.1 ≤ |w| ≤ 0.9 (q side) or from a band of
/// real magnitudes (classical side). Candidates failing any constraint are
/// rejected and redrawn, up to [`SAMPLING_BUDGET`] rejections per point.
pub fn sample_params(
    relation: &Relation,
    seed: u64,
    count: usize,
    policy: &PrecisionPolicy,
) -> Result<SampleBatch> {
    if count == 0 {
        return Err(Error::DomainViolation("sample count must be ≥ 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(relation.id));
    let mut points = Vec::with_capacity(count);
    let mut rejected: u64 = 0;
    while points.len() < count {
        let mut budget = SAMPLING_BUDGET;
        loop {
            let params = if relation.is_classical() {
                random_classical_point(relation, policy, &mut rng)
            } else {
                random_q_point(relation, policy, &mut rng)
            };
            match rejection(relation, &params, policy) {
                None => {
                    points.push(params);
                    break;
                }
                Some(_) => {
                    rejected += 1;
                    budget -= 1;
                    if budget == 0 {
                        return Err(Error::SamplingExhausted {
                            relation: relation.id.to_string(),
                            rejections: rejected,
                        });
                    }
                }
            }
        }
    }
    Ok(SampleBatch {
        relation_id: relation.id,
        seed,
        points,
        rejected,
    })
}

// ---------------------------------------------------------------------
// Verification campaigns
// ---------------------------------------------------------------------

/// One non-passing sample: the point and either its residual (too large)
/// or the error that prevented evaluation.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub point: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Residual statistics of one relation over a sampled batch.
///
/// Serialization is byte-deterministic for fixed (seed, policy, catalog):
/// `wall_time` is measurement, not result, and stays out of the JSON.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub relation_id: String,
    pub samples: usize,
    pub max_residual: f64,
    pub mean_residual: f64,
    pub failures: Vec<Failure>,
    pub policy: PrecisionPolicy,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Residual bound `relation` must meet under `policy`.
pub fn pass_threshold(relation: &Relation, policy: &PrecisionPolicy) -> f64 {
    if relation.is_classical() {
        CLASSICAL_PASS_THRESHOLD
    } else {
        5.0 * policy.tol
    }
}

fn scalar_literal(s: &Scalar) -> String {
    let re = s.re_f64();
    let im = s.im_f64();
    if im == 0.0 {
        format!("{re}")
    } else if im < 0.0 {
        format!("{re}-{}i", -im)
    } else {
        format!("{re}+{im}i")
    }
}

fn point_map(relation: &Relation, params: &ParamSet) -> BTreeMap<String, String> {
    let mut map: BTreeMap<String, String> = params
        .entries()
        .map(|(name, value)| (name.to_string(), scalar_literal(value)))
        .collect();
    if !relation.is_classical() {
        map.insert("q".into(), scalar_literal(params.q()));
    }
    map
}

/// Instantiate `relation_id` at `count` sampled points and aggregate the
/// residuals. Evaluation fans out over the points; the report is
/// independent of thread scheduling.
pub fn verify_relation(
    relation_id: &str,
    seed: u64,
    count: usize,
    policy: &PrecisionPolicy,
) -> Result<VerificationReport> {
    let relation = relations::find(relation_id)?;
    let start = Instant::now();
    let batch = sample_params(relation, seed, count, policy)?;
    let threshold = pass_threshold(relation, policy);
    let outcomes: Vec<std::result::Result<f64, String>> = batch
        .points
        .par_iter()
        .map(|point| {
            relations::instantiate(relation_id, point, policy)
                .map(|inst| inst.residual)
                .map_err(|e| e.to_string())
        })
        .collect();
    let mut max_residual = 0.0f64;
    let mut sum_residual = 0.0f64;
    let mut evaluated = 0usize;
    let mut failures = Vec::new();
    for (point, outcome) in batch.points.iter().zip(&outcomes) {
        match outcome {
            Ok(residual) => {
                max_residual = max_residual.max(*residual);
                sum_residual += residual;
                evaluated += 1;
                if !(*residual < threshold) {
                    failures.push(Failure {
                        point: point_map(relation, point),
                        residual: Some(*residual),
                        error: None,
                    });
                }
            }
            Err(message) => failures.push(Failure {
                point: point_map(relation, point),
                residual: None,
                error: Some(message.clone()),
            }),
        }
    }
    Ok(VerificationReport {
        relation_id: relation_id.to_string(),
        samples: batch.points.len(),
        max_residual,
        mean_residual: if evaluated > 0 {
            sum_residual / evaluated as f64
        } else {
            0.0
        },
        failures,
        policy: policy.clone(),
        wall_time: start.elapsed(),
    })
}

/// Like [`verify_relation`], but campaign-level errors (unknown id,
/// exhausted sampling) fold into a failing report instead of aborting —
/// batch runs always yield one report per requested id.
pub fn verify_relation_report(
    relation_id: &str,
    seed: u64,
    count: usize,
    policy: &PrecisionPolicy,
) -> VerificationReport {
    verify_relation(relation_id, seed, count, policy).unwrap_or_else(|e| VerificationReport {
        relation_id: relation_id.to_string(),
        samples: 0,
        max_residual: 0.0,
        mean_residual: 0.0,
        failures: vec![Failure {
            point: BTreeMap::new(),
            residual: None,
            error: Some(e.to_string()),
        }],
        policy: policy.clone(),
        wall_time: Duration::ZERO,
    })
}

/// Verify the whole catalog, ordered by relation id. Per-relation errors
/// become failing reports rather than aborting the campaign.
pub fn verify_all(seed: u64, count: usize, policy: &PrecisionPolicy) -> Vec<VerificationReport> {
    let mut ids: Vec<&'static str> = relations::registry().iter().map(|r| r.id).collect();
    ids.sort_unstable();
    ids.iter()
        .map(|id| verify_relation_report(id, seed, count, policy))
        .collect()
}

/// One CSV line per report: `relation_id,samples,max_residual,pass`.
pub fn csv_summary(reports: &[VerificationReport]) -> String {
    let mut out = String::from("relation_id,samples,max_residual,pass\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{:e},{}\n",
            r.relation_id,
            r.samples,
            r.max_residual,
            r.pass()
        ));
    }
    out
}

// ---------------------------------------------------------------------
// Coefficient limits toward the classical side
// ---------------------------------------------------------------------

/// How fast the q-side coefficients of one recorded pair approach their
/// classical counterparts as the base moves toward one.
#[derive(Debug, Clone, Serialize)]
pub struct LimitReport {
    pub q_relation_id: String,
    pub classical_relation_id: String,
    /// Sampled exponent per classical parameter; the q side evaluates at
    /// parameter = base^exponent.
    pub exponent_assignment: BTreeMap<String, f64>,
    pub epsilons: Vec<f64>,
    /// Per-epsilon max over coefficients of |coeff_q − coeff_classical|.
    pub coefficient_gaps: Vec<f64>,
    pub decreasing: bool,
}

/// Coefficient magnitude cap for limit-sweep sampling — tighter than the
/// campaign cap so the O(ε) gap stays small in absolute terms.
const LIMIT_COEFF_CAP: f64 = 10.0;

/// base^exponent for a real base in (0, 1), at working precision.
fn q_power(q: &Scalar, exponent: f64) -> Scalar {
    let ln_q = q.re().clone().ln();
    let re = (ln_q * exponent).exp();
    Scalar::from_parts(re, rug::Float::new(q.prec()))
}

/// For each ε, set base = 1 − ε, place every parameter at base^exponent
/// with exponents drawn once from the classical relation's admissible set,
/// and record the largest coefficient gap between the two sides.
pub fn limit_check(
    q_relation_id: &str,
    classical_relation_id: &str,
    epsilons: &[f64],
    seed: u64,
    policy: &PrecisionPolicy,
) -> Result<LimitReport> {
    let q_rel = relations::find(q_relation_id)?;
    let cl_rel = relations::find(classical_relation_id)?;
    if q_rel.is_classical()
        || !cl_rel.is_classical()
        || q_rel.classical_partner != Some(cl_rel.id)
    {
        return Err(Error::UnknownPair(
            q_relation_id.to_string(),
            classical_relation_id.to_string(),
        ));
    }
    if q_rel.rhs.len() != cl_rel.rhs.len() {
        return Err(Error::LengthMismatch(format!(
            "{} has {} terms but {} has {}",
            q_rel.id,
            q_rel.rhs.len(),
            cl_rel.id,
            cl_rel.rhs.len()
        )));
    }
    if epsilons.is_empty() {
        return Err(Error::DomainViolation("need at least one epsilon".into()));
    }
    if !epsilons
        .iter()
        .all(|e| e.is_finite() && *e > 0.0 && *e < 0.5)
    {
        return Err(Error::DomainViolation(
            "epsilons must lie in (0, 0.5)".into(),
        ));
    }
    if epsilons.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::DomainViolation(
            "epsilons must be strictly decreasing".into(),
        ));
    }

    // Draw one exponent assignment from the classical relation's own
    // admissible set, with a tight coefficient cap. The admissible region
    // inside [0.2, 2.5]^n is a thin corner (denominator-row parameters
    // large, numerator-row ones small), so the proposal cycles through a
    // uniform mode and two corner-biased modes; rejection against the
    // relation's own constraints does the actual enforcement.
    let mut rng =
        ChaCha8Rng::seed_from_u64(seed ^ fnv1a(q_relation_id) ^ fnv1a(classical_relation_id));
    let mut budget = SAMPLING_BUDGET;
    let mut attempt: u64 = 0;
    let (exponents, classical_coeffs) = loop {
        let mode = attempt % 3;
        attempt += 1;
        let mut params = ParamSet::new(policy.zero());
        let mut exps = BTreeMap::new();
        for name in cl_rel.free_params {
            let x = match mode {
                0 => rng.gen_range(0.2..2.5),
                1 => {
                    if rng.gen_bool(0.5) {
                        rng.gen_range(0.2..0.6)
                    } else {
                        rng.gen_range(2.1..2.5)
                    }
                }
                _ => {
                    if rng.gen_bool(0.5) {
                        rng.gen_range(0.2..0.9)
                    } else {
                        rng.gen_range(1.8..2.5)
                    }
                }
            };
            exps.insert(name.to_string(), x);
            params.set(name, policy.real(x));
        }
        if cl_rel.violated_constraint(&params, policy).is_none() {
            let coeffs: Result<Vec<Scalar>> = cl_rel
                .rhs
                .iter()
                .map(|t| t.coefficient.eval(&params, policy))
                .collect();
            if let Ok(coeffs) = coeffs {
                if coeffs.iter().all(|c| c.abs_f64() <= LIMIT_COEFF_CAP) {
                    break (exps, coeffs);
                }
            }
        }
        budget -= 1;
        if budget == 0 {
            return Err(Error::SamplingExhausted {
                relation: classical_relation_id.to_string(),
                rejections: SAMPLING_BUDGET,
            });
        }
    };

    let mut gaps = Vec::with_capacity(epsilons.len());
    for eps in epsilons {
        let q = policy.real(1.0 - eps);
        let mut params_q = ParamSet::new(q.clone());
        for name in q_rel.free_params {
            let exponent = *exponents.get(*name).ok_or_else(|| {
                Error::DomainViolation(format!(
                    "classical partner of {} does not expose parameter `{name}`",
                    q_rel.id
                ))
            })?;
            params_q.set(name, q_power(&q, exponent));
        }
        let mut gap = 0.0f64;
        for (term, classical) in q_rel.rhs.iter().zip(&classical_coeffs) {
            let qc = term.coefficient.eval(&params_q, policy)?;
            gap = gap.max(qc.dist(classical));
        }
        gaps.push(gap);
    }
    let decreasing = gaps.windows(2).all(|w| w[1] < w[0]);
    Ok(LimitReport {
        q_relation_id: q_relation_id.to_string(),
        classical_relation_id: classical_relation_id.to_string(),
        exponent_assignment: exponents,
        epsilons: epsilons.to_vec(),
        coefficient_gaps: gaps,
        decreasing,
    })
}

// ---------------------------------------------------------------------
// Finite summation by parts
// ---------------------------------------------------------------------

/// Defect of the finite summation-by-parts identity, in units in the last
/// place of the inputs' working precision.
///
/// `u` holds U_{−1}, U_0, …, U_K and `v` holds V_0, …, V_{K+1} (equal
/// lengths K + 2). The identity
///
/// ```text
/// Σ_{k=0}^{K} U_k (V_k − V_{k+1}) − Σ_{k=0}^{K} V_k (U_k − U_{k−1})
///   = U_{−1} V_0 − U_K V_{K+1}
/// ```
///
/// holds algebraically for arbitrary sequences, so the measured defect is
/// pure roundoff and must stay within a few dozen ulps of the natural
/// scale (the sum of all products' magnitudes).
pub fn abel_check(u: &[Scalar], v: &[Scalar]) -> Result<f64> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(format!(
            "U has {} entries, V has {}; need equal lengths K + 2",
            u.len(),
            v.len()
        )));
    }
    if u.len() < 2 {
        return Err(Error::LengthMismatch(
            "need at least two entries (K ≥ 0): U_{-1}, U_0 and V_0, V_1".into(),
        ));
    }
    let prec = u[0].prec();
    let k_max = u.len() - 2;
    let mut forward = Scalar::zero(prec); // Σ U_k (V_k − V_{k+1})
    let mut backward = Scalar::zero(prec); // Σ V_k (U_k − U_{k−1})
    let mut scale = 0.0f64;
    for k in 0..=k_max {
        let u_k = &u[k + 1];
        let fwd = u_k * &(&v[k] - &v[k + 1]);
        let bwd = &v[k] * &(u_k - &u[k]);
        scale += fwd.abs_f64() + bwd.abs_f64();
        forward += &fwd;
        backward += &bwd;
    }
    let boundary = &(&u[0] * &v[0]) - &(&u[k_max + 1] * &v[k_max + 1]);
    scale += (&u[0] * &v[0]).abs_f64() + (&u[k_max + 1] * &v[k_max + 1]).abs_f64();
    let defect = (&forward - &backward).dist(&boundary);
    if defect == 0.0 {
        return Ok(0.0);
    }
    let ulp = scale.max(f64::MIN_POSITIVE) * 2f64.powi(1 - prec as i32);
    Ok(defect / ulp)
}

/// The concrete summand sequences behind the four foundational relations,
/// oriented for [`abel_check`]: the first list is the sequence whose
/// backward difference telescopes (entries U_{−1..K}, with U_{−1} = 0
/// because its k = −1 value carries a vanishing reciprocal factor), the
/// second the one whose forward difference is taken (entries V_{0..K+1}).
///
/// `params` must carry a, b, c, d, e and a base with |bd/(qace)| < 1 so
/// the boundary term fades.
pub fn pattern_sequences(
    pattern: Pattern,
    params: &ParamSet,
    k_max: usize,
    policy: &PrecisionPolicy,
) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    let [a, b, c, d, e] = params.take(["a", "b", "c", "d", "e"])?;
    let q = params.q();
    let one = policy.one();
    let z = &(b * d) / &(q * &(a * &(c * e)));
    // (difference-side num/den, weighted-side num/den, whether the
    // geometric factor z^k rides on the difference side). The difference
    // side is always the list with the (q;q)_k denominator — that is what
    // zeroes its k = −1 entry.
    let (diff_n, diff_d, wt_n, wt_d, z_on_diff) = match pattern {
        Pattern::A => (
            [q * a, d / a],
            [q.clone(), d.clone()],
            [c.clone(), e.clone()],
            [b.clone(), d / &(q * a)],
            false,
        ),
        Pattern::B => (
            [a.clone(), q * &(q * &(&(c * e) / d))],
            [q.clone(), b.clone()],
            [c.clone(), e.clone()],
            [d / q, q * &(&(c * e) / d)],
            true,
        ),
        Pattern::C => (
            [q * c, q * e],
            [q.clone(), q * &(c * e)],
            [a.clone(), q * &(c * e)],
            [b.clone(), d.clone()],
            false,
        ),
        Pattern::D => (
            [c.clone(), e.clone()],
            [q.clone(), &(b * d) / &(q * &(q * a))],
            [a.clone(), &(b * d) / &(q * &(q * a))],
            [b / q, d / q],
            true,
        ),
    };
    let mut u = Vec::with_capacity(k_max + 2);
    // The k = −1 entry: the (q;q)_{−1} factor in the denominator is the
    // reciprocal of (1 − q·q^{−1}) = 0, so the whole entry is exactly zero.
    u.push(policy.zero());
    let mut zk = one.clone();
    let mut v = Vec::with_capacity(k_max + 2);
    for k in 0..=(k_max as i64 + 1) {
        let wt = qpoch_ratio(&wt_n, &wt_d, q, PochOrder::Finite(k), policy)?;
        if k <= k_max as i64 {
            let poch = qpoch_ratio(&diff_n, &diff_d, q, PochOrder::Finite(k), policy)?;
            u.push(if z_on_diff { &poch * &zk } else { poch });
        }
        v.push(if z_on_diff { wt } else { &wt * &zk });
        zk *= &z;
    }
    Ok((u, v))
}

// ---------------------------------------------------------------------
// Product-formula spot check
// ---------------------------------------------------------------------

/// Evaluate ₂φ₁(a, b; c; q, c/(ab)) against its closed product form at
/// `count` random admissible points; returns the largest normalized
/// residual. The reduced catalog entries collapse to exactly this product
/// evaluation, so it gets its own randomized certificate.
pub fn gauss_check(seed: u64, count: usize, policy: &PrecisionPolicy) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a("q-gauss"));
    let mut worst = 0.0f64;
    let mut accepted = 0usize;
    let mut budget = SAMPLING_BUDGET;
    while accepted < count {
        let q = policy.real(rng.gen_range(0.2..0.8));
        let draw = |rng: &mut ChaCha8Rng| {
            let modulus = rng.gen_range(0.1..0.9);
            let phase = rng.gen_range(0.0..std::f64::consts::TAU);
            policy.scalar(modulus * phase.cos(), modulus * phase.sin())
        };
        let a = draw(&mut rng);
        let b = draw(&mut rng);
        let c = draw(&mut rng);
        let z = &c / &(&a * &b);
        let admissible = z.abs_f64() <= relations::MAX_SERIES_ARG && {
            let spec = phi2(SeriesKind::QPhi, [a.clone(), b.clone()], [c.clone()], &q, z.clone());
            series::check_spec(&spec, policy).is_ok()
        };
        let product = if admissible {
            qpoch_ratio(
                &[&c / &a, &c / &b],
                &[c.clone(), z.clone()],
                &q,
                PochOrder::Infinite,
                policy,
            )
        } else {
            Err(Error::DomainViolation("inadmissible draw".into()))
        };
        match product {
            Ok(product) => {
                let spec = phi2(SeriesKind::QPhi, [a, b], [c], &q, z);
                let value = series::eval_series(&spec, policy)?;
                if !value.converged {
                    return Err(Error::NotConverged {
                        max_terms: policy.max_terms,
                        context: "product-formula spot check".into(),
                    });
                }
                let residual = value.value.dist(&product)
                    / (value.value.abs_f64() + product.abs_f64() + 1.0);
                worst = worst.max(residual);
                accepted += 1;
            }
            Err(_) => {
                budget -= 1;
                if budget == 0 {
                    return Err(Error::SamplingExhausted {
                        relation: "q-gauss".into(),
                        rejections: SAMPLING_BUDGET,
                    });
                }
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::find;

    fn policy() -> PrecisionPolicy {
        PrecisionPolicy::standard()
    }

    #[test]
    fn batches_are_deterministic_and_admissible() {
        let p = policy();
        for id in ["pattern-A-eq-a", "thm-4.7", "corl-thm-3.2", "prop-4.24"] {
            let rel = find(id).unwrap();
            let one = sample_params(rel, 7, 5, &p).unwrap();
            let two = sample_params(rel, 7, 5, &p).unwrap();
            assert_eq!(one.points.len(), 5);
            for (x, y) in one.points.iter().zip(&two.points) {
                assert_eq!(format!("{x:?}"), format!("{y:?}"), "batch differs for {id}");
            }
            for point in &one.points {
                assert_eq!(rel.violated_constraint(point, &p), None);
            }
        }
    }

    #[test]
    fn count_prefix_stability() {
        let p = policy();
        let rel = find("thm-3.4").unwrap();
        let small = sample_params(rel, 42, 3, &p).unwrap();
        let large = sample_params(rel, 42, 10, &p).unwrap();
        for (x, y) in small.points.iter().zip(&large.points) {
            assert_eq!(format!("{x:?}"), format!("{y:?}"));
        }
    }

    #[test]
    fn campaign_passes_on_a_foundational_relation() {
        let report = verify_relation("pattern-A-eq-a", 42, 50, &policy()).unwrap();
        assert_eq!(report.samples, 50);
        assert!(report.pass(), "failures: {:?}", report.failures);
        assert!(report.max_residual < 5.0 * policy().tol);
        assert!(report.mean_residual <= report.max_residual);
    }

    #[test]
    fn unknown_relation_is_reported() {
        assert!(matches!(
            verify_relation("nope", 1, 1, &policy()),
            Err(Error::UnknownRelation(_))
        ));
    }

    #[test]
    fn extended_precision_sharpens_residuals() {
        let standard = verify_relation("thm-3.1", 42, 10, &policy()).unwrap();
        let extended = verify_relation("thm-3.1", 42, 10, &PrecisionPolicy::extended()).unwrap();
        assert!(extended.pass(), "failures: {:?}", extended.failures);
        assert!(
            extended.max_residual * 1e6 < standard.max_residual,
            "standard {:e} vs extended {:e}",
            standard.max_residual,
            extended.max_residual
        );
    }

    #[test]
    fn report_json_is_stable_and_skips_timing() {
        let report = verify_relation("thm-3.2", 42, 3, &policy()).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        assert!(!text.contains("wall_time"));
        let again = serde_json::to_string(&verify_relation("thm-3.2", 42, 3, &policy()).unwrap())
            .unwrap();
        assert_eq!(text, again);
    }

    #[test]
    fn limit_gaps_decrease_for_every_recorded_pair() {
        let p = policy();
        let epsilons = [1e-2, 1e-3, 1e-4];
        for (qid, cid) in LIMIT_PAIRS {
            let report = limit_check(qid, cid, &epsilons, 42, &p).unwrap();
            assert!(report.decreasing, "{qid}: gaps {:?}", report.coefficient_gaps);
            for pair in report.coefficient_gaps.windows(2) {
                let ratio = pair[0] / pair[1];
                assert!(
                    (5.0..=20.0).contains(&ratio),
                    "{qid}: decade ratio {ratio} from gaps {:?}",
                    report.coefficient_gaps
                );
            }
            assert!(
                report.coefficient_gaps[1] < 1e-2,
                "{qid}: gap at 1e-3 is {:e}",
                report.coefficient_gaps[1]
            );
        }
    }

    #[test]
    fn limit_check_rejects_bad_input() {
        let p = policy();
        assert!(matches!(
            limit_check("pattern-A-eq-a", "corl-pattern-B-eq-b", &[1e-2], 1, &p),
            Err(Error::UnknownPair(..))
        ));
        assert!(matches!(
            limit_check("pattern-A-eq-a", "corl-pattern-A-eq-a", &[1e-3, 1e-2], 1, &p),
            Err(Error::DomainViolation(_))
        ));
        assert!(matches!(
            limit_check("pattern-A-eq-a", "corl-pattern-A-eq-a", &[], 1, &p),
            Err(Error::DomainViolation(_))
        ));
    }

    #[test]
    fn summation_by_parts_on_random_sequences() {
        let p = policy();
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..1000 {
            let k_max = rng.gen_range(0..=62usize);
            let len = k_max + 2;
            let draw = |rng: &mut ChaCha8Rng| {
                p.scalar(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0))
            };
            let u: Vec<Scalar> = (0..len).map(|_| draw(&mut rng)).collect();
            let v: Vec<Scalar> = (0..len).map(|_| draw(&mut rng)).collect();
            let ulps = abel_check(&u, &v).unwrap();
            assert!(ulps <= 50.0, "defect of {ulps} ulps at K = {k_max}");
        }
    }

    #[test]
    fn summation_by_parts_on_the_foundational_sequences() {
        let p = policy();
        // |bd| ≪ q|ace| so the geometric weight (bd/qace)^k contracts and
        // the truncation boundary term fades.
        let params = ParamSet::new(p.real(0.45))
            .with("a", p.scalar(0.75, 0.1))
            .with("b", p.scalar(0.12, -0.05))
            .with("c", p.scalar(0.8, 0.0))
            .with("d", p.scalar(0.1, 0.08))
            .with("e", p.scalar(-0.7, 0.1));
        for pattern in [Pattern::A, Pattern::B, Pattern::C, Pattern::D] {
            let (u, v) = pattern_sequences(pattern, &params, 40, &p).unwrap();
            assert_eq!(u.len(), 42);
            assert_eq!(v.len(), 42);
            let ulps = abel_check(&u, &v).unwrap();
            assert!(ulps <= 50.0, "{pattern:?}: defect {ulps} ulps");
            // The weighted sequence carries (bd/qace)^k, so the truncation
            // boundary term has faded by K = 40.
            let boundary = (&u[41] * &v[41]).abs_f64();
            assert!(boundary < 1e-3, "{pattern:?}: boundary {boundary:e}");
        }
    }

    #[test]
    fn summation_by_parts_edge_cases() {
        let p = policy();
        let zeros = vec![p.zero(); 6];
        assert_eq!(abel_check(&zeros, &zeros).unwrap(), 0.0);
        let short = vec![p.one()];
        assert!(matches!(
            abel_check(&short, &short),
            Err(Error::LengthMismatch(_))
        ));
        assert!(matches!(
            abel_check(&zeros, &zeros[..5]),
            Err(Error::LengthMismatch(_))
        ));
    }

    #[test]
    fn product_formula_residuals_stay_small() {
        let p = policy();
        let worst = gauss_check(42, 100, &p).unwrap();
        assert!(worst < 5.0 * p.tol, "worst residual {worst:e}");
    }

    #[test]
    fn designated_lists_resolve() {
        for (qid, cid) in LIMIT_PAIRS {
            assert_eq!(find(qid).unwrap().classical_partner, Some(cid));
        }
        for id in SHARPENING_RELATIONS {
            assert!(!find(id).unwrap().is_classical());
        }
        for (id, rule) in MUTATION_TARGETS {
            let rel = find(id).unwrap();
            assert!(
                rel.rhs.iter().any(|t| t.coefficient.rule_id == rule),
                "{id} has no coefficient rule {rule}"
            );
        }
    }
}
