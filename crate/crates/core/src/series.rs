//! Tail-bounded evaluation of basic hypergeometric series and their
//! classical counterparts at a point.
//!
//! Four kinds share one term-recurrence engine:
//!
//! * `QPhi` — rφs(a₁..a_r; b₁..b_s; q, z)
//!   = Σ_k (a₁;q)_k···(a_r;q)_k / ((b₁;q)_k···(b_s;q)_k (q;q)_k)
//!     · {(−1)^k q^(k(k−1)/2)}^(1+s−r) · z^k
//! * `QPhiStar` — the shifted series: every term additionally carries
//!   (1 − q^k), so the k = 0 term vanishes identically.
//! * `ClassicalF` — rFs(a; b; z) = Σ_k (a₁)_k···(a_r)_k / ((b₁)_k···(b_s)_k k!) z^k
//! * `ClassicalFStar` — every term additionally carries the factor k.
//!
//! Terms are produced by the recurrence term_{k+1} = term_k · ratio(k); see
//! [`term_ratio`] for the ratio including the balancing factor. Summation
//! stops once three consecutive terms are negligible *and* the estimated
//! tail itself is below tolerance, so `converged` truly implies
//! `tail_bound ≤ tol`. Non-convergence within `max_terms` is reported as
//! state, never as an error.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{PrecisionPolicy, Scalar};

/// Which of the four series laws to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    QPhi,
    QPhiStar,
    ClassicalF,
    ClassicalFStar,
}

impl SeriesKind {
    pub fn is_q(self) -> bool {
        matches!(self, SeriesKind::QPhi | SeriesKind::QPhiStar)
    }

    pub fn is_star(self) -> bool {
        matches!(self, SeriesKind::QPhiStar | SeriesKind::ClassicalFStar)
    }
}

/// Declarative description of one series instance.
#[derive(Debug, Clone)]
pub struct SeriesSpec {
    pub kind: SeriesKind,
    pub numerators: Vec<Scalar>,
    pub denominators: Vec<Scalar>,
    /// Base q; ignored for the classical kinds.
    pub base: Scalar,
    pub argument: Scalar,
}

impl SeriesSpec {
    pub fn new(
        kind: SeriesKind,
        numerators: Vec<Scalar>,
        denominators: Vec<Scalar>,
        base: Scalar,
        argument: Scalar,
    ) -> Self {
        Self {
            kind,
            numerators,
            denominators,
            base,
            argument,
        }
    }
}

/// Result of a series evaluation.
#[derive(Debug, Clone)]
pub struct SeriesValue {
    pub value: Scalar,
    pub terms_used: usize,
    /// Estimated relative truncation error (relative to max(1, |value|)).
    /// `f64::INFINITY` when no estimate could be formed.
    pub tail_bound: f64,
    pub converged: bool,
}

/// Re(Σ denominators − Σ numerators): the classical convergence margin at
/// |z| = 1. The plain series converges for margin > 0 and the shifted one
/// for margin > 1; the identities here are stated under margin > 1.
pub fn convergence_margin(spec: &SeriesSpec) -> f64 {
    let sum = |v: &[Scalar]| v.iter().map(Scalar::re_f64).sum::<f64>();
    sum(&spec.denominators) - sum(&spec.numerators)
}

/// Smallest m ≥ 0 with |1 − x q^m| below `threshold` (q-kind zero/pole
/// detection: x ≈ q^(−m)). Scanning stops once |x q^m| < 0.5, after which
/// the factor can no longer approach zero.
fn q_collision_index(x: &Scalar, q: &Scalar, threshold: f64, cap: usize) -> Option<usize> {
    let mut xq = x.clone();
    for m in 0..=cap {
        if xq.abs_f64() < 0.5 {
            return None;
        }
        let gap = {
            let one = Scalar::one(xq.prec());
            (&one - &xq).abs_f64()
        };
        if gap < threshold {
            return Some(m);
        }
        xq *= q;
    }
    None
}

/// Smallest m ≥ 0 with |x + m| below `threshold` (classical-kind detection:
/// x ≈ a nonpositive integer).
fn classical_collision_index(x: &Scalar, threshold: f64, cap: usize) -> Option<usize> {
    if x.im_f64().abs() >= threshold {
        return None;
    }
    let re = x.re_f64();
    if re > threshold || re < -(cap as f64) - 1.0 {
        return None;
    }
    let m = (-re).round();
    if !(0.0..=(cap as f64)).contains(&m) {
        return None;
    }
    if (re + m).abs() < threshold && x.im_f64().abs() < threshold {
        Some(m as usize)
    } else {
        None
    }
}

struct Validated {
    /// Index of the last nonzero term when a numerator parameter truncates
    /// the series.
    termination: Option<usize>,
    /// Classical convergence margin, when |z| is on the unit circle.
    on_circle_margin: Option<f64>,
}

fn validate(spec: &SeriesSpec, policy: &PrecisionPolicy) -> Result<Validated> {
    let threshold = policy.singular_threshold();
    let cap = policy.max_terms;
    let r = spec.numerators.len();
    let s = spec.denominators.len();
    let abs_z = spec.argument.abs_f64();
    if !spec.argument.is_finite() {
        return Err(Error::DomainViolation("argument is not finite".into()));
    }
    if spec.kind.is_q() {
        let abs_q = spec.base.abs_f64();
        if !(abs_q < 1.0) {
            return Err(Error::DomainViolation(format!(
                "base modulus {abs_q} not inside the unit disk"
            )));
        }
        for (j, b) in spec.denominators.iter().enumerate() {
            if let Some(m) = q_collision_index(b, &spec.base, threshold, cap) {
                return Err(Error::SingularDenominator {
                    param: format!("denominator[{j}]"),
                    index: m as i64,
                });
            }
        }
        let termination = spec
            .numerators
            .iter()
            .filter_map(|a| q_collision_index(a, &spec.base, threshold, cap))
            .min();
        if termination.is_none() {
            if r > s + 1 {
                return Err(Error::DomainViolation(format!(
                    "series with {r} numerator and {s} denominator parameters diverges \
                     unless a numerator parameter terminates it"
                )));
            }
            if r == s + 1 && abs_z > 1.0 - 10.0 * policy.tol {
                return Err(Error::DomainViolation(format!(
                    "argument modulus {abs_z} must stay below 1 − 10·tol for a balanced series"
                )));
            }
        }
        Ok(Validated {
            termination,
            on_circle_margin: None,
        })
    } else {
        for (j, b) in spec.denominators.iter().enumerate() {
            if let Some(m) = classical_collision_index(b, threshold, cap) {
                return Err(Error::SingularDenominator {
                    param: format!("denominator[{j}]"),
                    index: m as i64,
                });
            }
        }
        let termination = spec
            .numerators
            .iter()
            .filter_map(|a| classical_collision_index(a, threshold, cap))
            .min();
        let mut on_circle_margin = None;
        if termination.is_none() {
            let on_circle = (abs_z - 1.0).abs() <= 10.0 * policy.tol;
            if abs_z > 1.0 + 10.0 * policy.tol {
                return Err(Error::DomainViolation(format!(
                    "argument modulus {abs_z} > 1 for a non-terminating series"
                )));
            }
            if on_circle {
                let margin = convergence_margin(spec);
                if margin <= 1.0 {
                    return Err(Error::DomainViolation(format!(
                        "convergence margin {margin:.4} ≤ 1 at |z| = 1"
                    )));
                }
                on_circle_margin = Some(margin);
            }
        }
        Ok(Validated {
            termination,
            on_circle_margin,
        })
    }
}

/// Validate a spec without evaluating it: base domain, argument bound,
/// denominator-parameter regularity, classical margin.
pub fn check_spec(spec: &SeriesSpec, policy: &PrecisionPolicy) -> Result<()> {
    validate(spec, policy).map(|_| ())
}

/// term_{k+1} / term_k, including the balancing factor {(−1) q^k}^(1+s−r)
/// (q kinds) or the 1/(k+1) factorial step (classical kinds). For the
/// shifted kinds the ratio carries the extra (1−q^{k+1})/(1−q^k) (resp.
/// (k+1)/k) and is defined only for k ≥ 1.
pub fn term_ratio(spec: &SeriesSpec, k: usize, policy: &PrecisionPolicy) -> Result<Scalar> {
    if spec.kind.is_star() && k == 0 {
        return Err(Error::DomainViolation(
            "shifted-series term ratio is undefined at k = 0; the k = 1 term is explicit".into(),
        ));
    }
    let prec = working_prec(spec, policy);
    if spec.kind.is_q() {
        let qk = spec.base.powi(k as i64);
        q_ratio_at(spec, &qk, k, prec, policy)
    } else {
        classical_ratio_at(spec, k, prec, policy)
    }
}

fn working_prec(spec: &SeriesSpec, policy: &PrecisionPolicy) -> u32 {
    policy
        .prec_bits()
        .max(spec.base.prec())
        .max(spec.argument.prec())
        .max(
            spec.numerators
                .iter()
                .chain(&spec.denominators)
                .map(Scalar::prec)
                .max()
                .unwrap_or(0),
        )
}

/// Ratio for q kinds given qk = q^k.
fn q_ratio_at(
    spec: &SeriesSpec,
    qk: &Scalar,
    k: usize,
    prec: u32,
    policy: &PrecisionPolicy,
) -> Result<Scalar> {
    let one = Scalar::one(prec);
    let threshold = policy.singular_threshold();
    let mut ratio = spec.argument.clone();
    for a in &spec.numerators {
        ratio *= &one - a * qk;
    }
    for (j, b) in spec.denominators.iter().enumerate() {
        let f = &one - b * qk;
        let mag = f.abs_f64();
        if mag < threshold {
            return Err(Error::SingularDenominator {
                param: format!("denominator[{j}]"),
                index: k as i64,
            });
        }
        ratio /= f;
    }
    // (q;q) step: /(1 − q^{k+1}) normally; the shifted kind replaces it by
    // /(1 − q^k), since (1 − q^{k+1})/(1 − q^k) × 1/(1 − q^{k+1}) telescopes.
    let qq = if spec.kind.is_star() {
        &one - qk
    } else {
        &one - &(qk * &spec.base)
    };
    ratio /= qq;
    // balancing factor step: ((−1) q^k)^(1+s−r)
    let e = (1 + spec.denominators.len()) as i64 - spec.numerators.len() as i64;
    if e > 0 {
        let minus_qk = -qk;
        for _ in 0..e {
            ratio *= &minus_qk;
        }
    }
    Ok(ratio)
}

fn classical_ratio_at(
    spec: &SeriesSpec,
    k: usize,
    prec: u32,
    policy: &PrecisionPolicy,
) -> Result<Scalar> {
    let threshold = policy.singular_threshold();
    let kf = Scalar::new(prec, k as f64, 0.0);
    let mut ratio = spec.argument.clone();
    for a in &spec.numerators {
        ratio *= a + &kf;
    }
    for (j, b) in spec.denominators.iter().enumerate() {
        let f = b + &kf;
        let mag = f.abs_f64();
        if mag < threshold {
            return Err(Error::SingularDenominator {
                param: format!("denominator[{j}]"),
                index: k as i64,
            });
        }
        ratio /= f;
    }
    // /(k+1) normally; the shifted kind replaces it by /k.
    let step = if spec.kind.is_star() {
        k as f64
    } else {
        k as f64 + 1.0
    };
    ratio /= Scalar::new(prec, step, 0.0);
    Ok(ratio)
}

/// Upper bound on |term_{k'+1}/term_{k'}| for every k' ≥ k (q kinds); every
/// factor below is monotone in k', so evaluating at k bounds the rest.
/// Returns None while the bound is not yet meaningful (< 1 unreachable).
fn q_ratio_sup(spec: &SeriesSpec, k: usize, abs_q: f64, abs_z: f64) -> Option<f64> {
    if k == 0 {
        return None;
    }
    let qk = abs_q.powi(k as i32);
    let mut rho = abs_z;
    for a in &spec.numerators {
        rho *= 1.0 + a.abs_f64() * qk;
    }
    for b in &spec.denominators {
        let f = 1.0 - b.abs_f64() * qk;
        if f <= 0.0 {
            return None;
        }
        rho /= f;
    }
    let qq = 1.0 - qk;
    if qq <= 0.0 {
        return None;
    }
    rho /= qq;
    let e = (1 + spec.denominators.len()) as i64 - spec.numerators.len() as i64;
    if e > 0 {
        rho *= abs_q.powi((k as i32) * (e as i32));
    }
    (rho < 1.0).then_some(rho)
}

/// Geometric-regime ratio bound for classical kinds at |z| < 1.
fn classical_ratio_sup(spec: &SeriesSpec, k: usize, abs_z: f64) -> Option<f64> {
    if k == 0 {
        return None;
    }
    let kf = k as f64;
    let mut rho = abs_z;
    for a in &spec.numerators {
        rho *= (kf + a.abs_f64()) / kf;
    }
    for b in &spec.denominators {
        let f = kf - b.abs_f64();
        if f <= 0.5 {
            return None;
        }
        rho /= f / kf;
    }
    rho *= kf / (kf + 1.0);
    (rho < 1.0).then_some(rho)
}

/// Evaluate any of the four kinds.
pub fn eval_series(spec: &SeriesSpec, policy: &PrecisionPolicy) -> Result<SeriesValue> {
    let validated = validate(spec, policy)?;
    let prec = working_prec(spec, policy);
    let one = Scalar::one(prec);
    let star = spec.kind.is_star();
    let is_q = spec.kind.is_q();
    let abs_z = spec.argument.abs_f64();
    let abs_q = spec.base.abs_f64();

    // z = 0: only the k = 0 term survives (and it is exactly zero for the
    // shifted kinds).
    if spec.argument.is_zero() {
        let value = if star { Scalar::zero(prec) } else { one };
        return Ok(SeriesValue {
            value,
            terms_used: 1,
            tail_bound: 0.0,
            converged: true,
        });
    }

    // Last index to sum when a numerator terminates the series.
    let stop_at: Option<usize> = validated.termination;
    if let Some(0) = stop_at {
        // Only the k = 0 term is nonzero.
        let value = if star { Scalar::zero(prec) } else { one };
        return Ok(SeriesValue {
            value,
            terms_used: 1,
            tail_bound: 0.0,
            converged: true,
        });
    }

    let mut partial;
    let mut term;
    let mut k: usize;
    let mut qk; // q^k tracking the current k (q kinds)

    if star {
        // k = 0 contributes exact zero; the k = 1 term is built explicitly:
        // the shifted factor cancels the (q;q)_1 (resp. 1!) denominator.
        term = spec.argument.clone();
        for a in &spec.numerators {
            term *= if is_q { &one - a } else { a.clone() };
        }
        for (j, b) in spec.denominators.iter().enumerate() {
            let f = if is_q { &one - b } else { b.clone() };
            if f.abs_f64() < policy.singular_threshold() {
                return Err(Error::SingularDenominator {
                    param: format!("denominator[{j}]"),
                    index: 0,
                });
            }
            term /= f;
        }
        if is_q {
            let e = (1 + spec.denominators.len()) as i64 - spec.numerators.len() as i64;
            if e % 2 != 0 {
                term = -term;
            }
        }
        partial = term.clone();
        k = 1;
        qk = spec.base.clone();
    } else {
        term = one.clone();
        partial = one.clone();
        k = 0;
        qk = Scalar::one(prec);
    }

    let mut consec = 0u32;
    let mut tail_abs = f64::INFINITY;
    let mut stopped = false;

    loop {
        if !term.is_finite() || !partial.is_finite() {
            return Err(Error::DomainViolation(format!(
                "non-finite term at index {k} (parameters too close to a singular surface)"
            )));
        }
        if let Some(m) = stop_at {
            if k >= m {
                tail_abs = 0.0;
                stopped = true;
                break;
            }
        }
        let scale = partial.abs_f64().max(1.0);
        let delta = policy.tol * scale;
        if k >= 1 {
            if term.abs_f64() <= delta {
                consec += 1;
            } else {
                consec = 0;
            }
            if consec >= 3 && stop_at.is_none() {
                // Candidate stop: accept only if the estimated tail is
                // itself below tolerance.
                let estimate = if is_q {
                    q_ratio_sup(spec, k, abs_q, abs_z).map(|rho| term.abs_f64() * rho / (1.0 - rho))
                } else if let Some(margin) = validated.on_circle_margin {
                    let nu = margin - if star { 1.0 } else { 0.0 };
                    (nu > 0.05).then(|| 1.25 * term.abs_f64() * k as f64 / nu)
                } else {
                    classical_ratio_sup(spec, k, abs_z)
                        .map(|rho| term.abs_f64() * rho / (1.0 - rho))
                };
                if let Some(t) = estimate {
                    tail_abs = t;
                    if t <= delta {
                        stopped = true;
                        break;
                    }
                }
            }
        }
        if k + 1 >= policy.max_terms {
            break;
        }
        // advance to k + 1 (the ratio functions read the star/plain split
        // off spec.kind themselves)
        let ratio = if is_q {
            q_ratio_at(spec, &qk, k, prec, policy)
        } else {
            classical_ratio_at(spec, k, prec, policy)
        }?;
        term *= ratio;
        partial += &term;
        qk *= &spec.base;
        k += 1;
    }

    let value = partial;
    let tail_bound = if tail_abs.is_finite() {
        tail_abs / value.abs_f64().max(1.0)
    } else {
        f64::INFINITY
    };
    let converged = stopped && tail_bound <= policy.tol;
    Ok(SeriesValue {
        value,
        terms_used: k + 1,
        tail_bound,
        converged,
    })
}

/// Classical-kind entry point: identical engine, with the kind checked.
pub fn eval_f(spec: &SeriesSpec, policy: &PrecisionPolicy) -> Result<SeriesValue> {
    if spec.kind.is_q() {
        return Err(Error::DomainViolation(
            "eval_f evaluates the classical kinds; use eval_series for q kinds".into(),
        ));
    }
    eval_series(spec, policy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoch::{qpoch_ratio, PochOrder};

    fn pol() -> PrecisionPolicy {
        PrecisionPolicy::standard()
    }

    fn sc(p: &PrecisionPolicy, re: f64, im: f64) -> Scalar {
        p.scalar(re, im)
    }

    fn spec_q(
        p: &PrecisionPolicy,
        kind: SeriesKind,
        nums: &[(f64, f64)],
        dens: &[(f64, f64)],
        q: (f64, f64),
        z: (f64, f64),
    ) -> SeriesSpec {
        SeriesSpec::new(
            kind,
            nums.iter().map(|&(r, i)| sc(p, r, i)).collect(),
            dens.iter().map(|&(r, i)| sc(p, r, i)).collect(),
            sc(p, q.0, q.1),
            sc(p, z.0, z.1),
        )
    }

    #[test]
    fn zero_argument_values() {
        let p = pol();
        let s = spec_q(
            &p,
            SeriesKind::QPhi,
            &[(0.3, 0.0), (0.4, 0.0), (0.5, 0.0)],
            &[(0.6, 0.0), (0.7, 0.0)],
            (0.5, 0.0),
            (0.0, 0.0),
        );
        let v = eval_series(&s, &p).unwrap();
        assert_eq!(v.value, p.one());
        assert!(v.converged && v.terms_used == 1 && v.tail_bound == 0.0);

        let mut s2 = s;
        s2.kind = SeriesKind::QPhiStar;
        let v = eval_series(&s2, &p).unwrap();
        assert!(v.value.is_zero() && v.converged);
    }

    #[test]
    fn unit_numerator_truncates_instantly() {
        let p = pol();
        let s = spec_q(
            &p,
            SeriesKind::QPhi,
            &[(1.0, 0.0), (0.4, 0.0), (0.5, 0.0)],
            &[(0.6, 0.0), (0.7, 0.0)],
            (0.5, 0.0),
            (0.8, 0.0),
        );
        let v = eval_series(&s, &p).unwrap();
        assert_eq!(v.value, p.one());
        assert!(v.converged && v.terms_used == 1);
    }

    #[test]
    fn q_gauss_value_and_product_form() {
        let p = pol();
        // ₂φ₁(0.5, 0.8; 0.2; q = 0.3, z = c/(ab) = 0.5) — frozen oracle
        let s = spec_q(
            &p,
            SeriesKind::QPhi,
            &[(0.5, 0.0), (0.8, 0.0)],
            &[(0.2, 0.0)],
            (0.3, 0.0),
            (0.5, 0.0),
        );
        let v = eval_series(&s, &p).unwrap();
        assert!(v.converged);
        assert!((v.value.re_f64() - 1.15387444997071613972931215741886834).abs() < 5.0 * p.tol);
        // equals (c/a;q)∞ (c/b;q)∞ / ((c;q)∞ (c/ab;q)∞)
        let q = sc(&p, 0.3, 0.0);
        let product = qpoch_ratio(
            &[sc(&p, 0.4, 0.0), sc(&p, 0.25, 0.0)],
            &[sc(&p, 0.2, 0.0), sc(&p, 0.5, 0.0)],
            &q,
            PochOrder::Infinite,
            &p,
        )
        .unwrap();
        assert!(v.value.dist(&product) < 5.0 * p.tol);
    }

    #[test]
    fn pinned_3phi2_and_star() {
        let p = pol();
        let nums = [(0.3, 0.2), (-0.4, 0.1), (0.25, -0.35)];
        let dens = [(0.6, -0.2), (0.7, 0.15)];
        let s = spec_q(
            &p,
            SeriesKind::QPhi,
            &nums,
            &dens,
            (0.358, 0.0),
            (0.45, -0.4),
        );
        let v = eval_series(&s, &p).unwrap();
        assert!(v.converged);
        let tol = 5.0 * p.tol * v.value.abs_f64().max(1.0);
        assert!((v.value.re_f64() - 0.454383329228471957039421365731949135).abs() < tol);
        assert!((v.value.im_f64() - (-11.2792805873934827068765837164197253)).abs() < tol);

        let s_star = spec_q(
            &p,
            SeriesKind::QPhiStar,
            &nums,
            &dens,
            (0.358, 0.0),
            (0.45, -0.4),
        );
        let v = eval_series(&s_star, &p).unwrap();
        assert!(v.converged);
        let tol = 5.0 * p.tol * v.value.abs_f64().max(1.0);
        assert!((v.value.re_f64() - (-2.0704996214709147206586338622265561)).abs() < tol);
        assert!((v.value.im_f64() - (-9.24354101985512900163601787287750341)).abs() < tol);
    }

    #[test]
    fn pinned_1phi1_balancing_factor() {
        // r = 1, s = 1: balancing exponent 1, the ((−1) q^k) factor is live.
        let p = pol();
        let s = spec_q(
            &p,
            SeriesKind::QPhi,
            &[(0.4, 0.3)],
            &[(0.5, -0.2)],
            (0.44, 0.0),
            (0.8, 0.3),
        );
        let v = eval_series(&s, &p).unwrap();
        assert!(v.converged);
        let tol = 5.0 * p.tol;
        assert!((v.value.re_f64() - 0.027760508500982320878050581031289241).abs() < tol);
        assert!((v.value.im_f64() - 0.548948982555983175482767500925900354).abs() < tol);
    }

    #[test]
    fn star_decomposition_identity() {
        // φ*(z) = φ(z) − φ(qz) for the balanced case r = s + 1.
        let p = pol();
        let nums = [(0.3, 0.2), (-0.4, 0.1), (0.25, -0.35)];
        let dens = [(0.6, -0.2), (0.7, 0.15)];
        let q = 0.358;
        let z = (0.45, -0.4);
        let star = eval_series(
            &spec_q(&p, SeriesKind::QPhiStar, &nums, &dens, (q, 0.0), z),
            &p,
        )
        .unwrap();
        let plain =
            eval_series(&spec_q(&p, SeriesKind::QPhi, &nums, &dens, (q, 0.0), z), &p).unwrap();
        let shifted = eval_series(
            &spec_q(
                &p,
                SeriesKind::QPhi,
                &nums,
                &dens,
                (q, 0.0),
                (z.0 * q, z.1 * q),
            ),
            &p,
        )
        .unwrap();
        let rhs = &plain.value - &shifted.value;
        assert!(star.value.dist(&rhs) < 5.0 * p.tol * star.value.abs_f64().max(1.0));
    }

    #[test]
    fn term_ratio_matches_from_scratch_terms() {
        // term_0 · ∏_{j<k} ratio(j) must reproduce the k-th term computed
        // from the raw definition.
        let p = pol();
        let s = spec_q(
            &p,
            SeriesKind::QPhi,
            &[(0.31, 0.21), (0.12, -0.4)],
            &[(0.55, 0.1), (0.6, 0.0), (0.25, 0.0)],
            (0.47, 0.0),
            (0.73, -0.2),
        );
        // from-scratch: (a;q)_k products, (q;q)_k, z^k, balancing
        let from_scratch = |k: usize| -> Scalar {
            let mut t = s.argument.powi(k as i64);
            for a in &s.numerators {
                t = &t * &crate::qpoch::qpoch_finite(a, &s.base, k as i64, &p).unwrap();
            }
            for b in &s.denominators {
                t = &t / &crate::qpoch::qpoch_finite(b, &s.base, k as i64, &p).unwrap();
            }
            t = &t / &crate::qpoch::qpoch_finite(&s.base, &s.base, k as i64, &p).unwrap();
            let e = (1 + s.denominators.len()) as i64 - s.numerators.len() as i64;
            if e != 0 {
                let minus_one = p.scalar(-1.0, 0.0);
                let bal = &minus_one.powi(k as i64) * &s.base.powi((k * (k.max(1) - 1) / 2) as i64);
                t = &t * &bal.powi(e);
            }
            t
        };
        let mut recurrent = p.one();
        for k in 0..=20usize {
            let direct = from_scratch(k);
            // late terms shrink super-geometrically, so compare relatively
            assert!(
                recurrent.dist(&direct) <= 1e-22 * direct.abs_f64().max(1e-300),
                "term {k} drifted: {recurrent} vs {direct}"
            );
            recurrent = &recurrent * &term_ratio(&s, k, &p).unwrap();
        }
    }

    #[test]
    fn star_ratio_undefined_at_zero() {
        let p = pol();
        let s = spec_q(
            &p,
            SeriesKind::QPhiStar,
            &[(0.3, 0.0)],
            &[(0.6, 0.0)],
            (0.5, 0.0),
            (0.4, 0.0),
        );
        assert!(term_ratio(&s, 0, &p).is_err());
        assert!(term_ratio(&s, 1, &p).is_ok());
    }

    #[test]
    fn base_and_argument_domain_checks() {
        let p = pol();
        let bad_base = spec_q(
            &p,
            SeriesKind::QPhi,
            &[(0.3, 0.0)],
            &[],
            (1.2, 0.0),
            (0.4, 0.0),
        );
        assert!(matches!(
            eval_series(&bad_base, &p),
            Err(Error::DomainViolation(_))
        ));
        let big_z = spec_q(
            &p,
            SeriesKind::QPhi,
            &[(0.3, 0.0), (0.2, 0.0)],
            &[(0.6, 0.0)],
            (0.5, 0.0),
            (1.0, 0.0),
        );
        assert!(matches!(
            eval_series(&big_z, &p),
            Err(Error::DomainViolation(_))
        ));
        // r > s + 1 without termination diverges
        let div = spec_q(
            &p,
            SeriesKind::QPhi,
            &[(0.3, 0.0), (0.2, 0.0), (0.4, 0.0)],
            &[],
            (0.5, 0.0),
            (0.5, 0.0),
        );
        assert!(matches!(
            eval_series(&div, &p),
            Err(Error::DomainViolation(_))
        ));
    }

    #[test]
    fn singular_denominator_detected() {
        let p = pol();
        // denominator parameter ≈ q^{-2}
        let s = spec_q(
            &p,
            SeriesKind::QPhi,
            &[(0.3, 0.0), (0.2, 0.0)],
            &[(4.0, 0.0)],
            (0.5, 0.0),
            (0.4, 0.0),
        );
        assert!(matches!(
            eval_series(&s, &p),
            Err(Error::SingularDenominator { .. })
        ));
    }

    #[test]
    fn truncation_honesty() {
        // A coarse-tolerance run must land within its own reported
        // tail_bound of a sharp reference run.
        let coarse =
            PrecisionPolicy::new(crate::scalar::PrecisionMode::Standard, 17, 1e-6, 10_000).unwrap();
        let sharp = pol();
        let s = spec_q(
            &sharp,
            SeriesKind::QPhi,
            &[(0.3, 0.2), (-0.4, 0.1), (0.25, -0.35)],
            &[(0.6, -0.2), (0.7, 0.15)],
            (0.62, 0.0),
            (0.88, 0.1),
        );
        let v1 = eval_series(&s, &coarse).unwrap();
        let v2 = eval_series(&s, &sharp).unwrap();
        assert!(v1.converged && v2.converged);
        assert!(v1.terms_used < v2.terms_used);
        let moved = v1.value.dist(&v2.value);
        let budget = v1.tail_bound * v1.value.abs_f64().max(1.0);
        assert!(
            moved <= budget,
            "moved {moved:.3e} exceeds reported tail budget {budget:.3e}"
        );
    }

    #[test]
    fn not_converged_is_reported_not_thrown() {
        let p =
            PrecisionPolicy::new(crate::scalar::PrecisionMode::Standard, 17, 1e-12, 100).unwrap();
        // |z| = 0.98 with only 100 terms allowed: 0.98^100 ≈ 0.13 — nowhere
        // near tolerance.
        let s = spec_q(
            &p,
            SeriesKind::QPhi,
            &[(0.3, 0.0), (0.4, 0.0), (0.2, 0.0)],
            &[(0.5, 0.0), (0.6, 0.0)],
            (0.5, 0.0),
            (0.98, 0.0),
        );
        let v = eval_series(&s, &p).unwrap();
        assert!(!v.converged);
        assert_eq!(v.terms_used, 100);
    }

    #[test]
    fn permutation_symmetry() {
        let p = pol();
        let base = spec_q(
            &p,
            SeriesKind::QPhi,
            &[(0.3, 0.2), (-0.4, 0.1), (0.25, -0.35)],
            &[(0.6, -0.2), (0.7, 0.15)],
            (0.41, 0.0),
            (0.52, -0.33),
        );
        let v0 = eval_series(&base, &p).unwrap();
        let mut permuted = base.clone();
        permuted.numerators.rotate_left(1);
        permuted.denominators.swap(0, 1);
        let v1 = eval_series(&permuted, &p).unwrap();
        assert!(v0.value.dist(&v1.value) < 5.0 * p.tol * v0.value.abs_f64().max(1.0));
    }

    // ---- classical kinds ----

    #[test]
    fn classical_terminating_matches_finite_sum() {
        let p = pol();
        // ₂F₁(−2, 0.7; 1.3; 1) = 1 − 2·0.7/1.3 + (−2)(−1)(0.7)(1.7)/((1.3)(2.3)·2)
        let s = SeriesSpec::new(
            SeriesKind::ClassicalF,
            vec![sc(&p, -2.0, 0.0), sc(&p, 0.7, 0.0)],
            vec![sc(&p, 1.3, 0.0)],
            p.zero(),
            p.one(),
        );
        let v = eval_series(&s, &p).unwrap();
        assert!(v.converged && v.terms_used == 3);
        let exact = 1.0 - 2.0 * 0.7 / 1.3 + (2.0 * 0.7 * 1.7) / (1.3 * 2.3 * 2.0) * 1.0;
        assert!((v.value.re_f64() - exact).abs() < 1e-14);
        // frozen oracle agrees
        assert!((v.value.re_f64() - 0.321070234113712374581939799331103679).abs() < 1e-14);
    }

    #[test]
    fn classical_margin_enforced_at_unit_argument() {
        let p = pol();
        // margin = 1.0 + 0.8 − 0.3 − 0.5 − 0.9 = 0.1 ≤ 1 → domain violation
        let s = SeriesSpec::new(
            SeriesKind::ClassicalF,
            vec![sc(&p, 0.3, 0.0), sc(&p, 0.5, 0.0), sc(&p, 0.9, 0.0)],
            vec![sc(&p, 1.0, 0.0), sc(&p, 0.8, 0.0)],
            p.zero(),
            p.one(),
        );
        assert!(matches!(
            eval_series(&s, &p),
            Err(Error::DomainViolation(_))
        ));
    }

    #[test]
    fn classical_star_zero_argument() {
        let p = pol();
        let s = SeriesSpec::new(
            SeriesKind::ClassicalFStar,
            vec![sc(&p, 0.3, 0.0)],
            vec![sc(&p, 1.3, 0.0)],
            p.zero(),
            p.zero(),
        );
        let v = eval_f(&s, &p).unwrap();
        assert!(v.value.is_zero() && v.converged);
    }

    #[test]
    fn classical_pinned_values_at_unit_argument() {
        // z = 1 terms decay only polynomially, so these runs get a 1e-9
        // stopping tolerance and a deep term budget (the classical
        // identities themselves are checked at 1e-8).
        let p =
            PrecisionPolicy::new(crate::scalar::PrecisionMode::Standard, 17, 1e-9, 40_000).unwrap();
        let s = SeriesSpec::new(
            SeriesKind::ClassicalF,
            vec![sc(&p, 0.3, 0.0), sc(&p, 0.5, 0.0), sc(&p, 0.9, 0.0)],
            vec![sc(&p, 2.2, 0.0), sc(&p, 1.8, 0.0)],
            p.zero(),
            p.one(),
        );
        let v = eval_series(&s, &p).unwrap();
        assert!(
            v.converged,
            "tail {:.3e} after {} terms",
            v.tail_bound, v.terms_used
        );
        assert!((v.value.re_f64() - 1.04646417693161478690634309857131733).abs() < 5e-9);

        let s_star = SeriesSpec::new(
            SeriesKind::ClassicalFStar,
            s.numerators.clone(),
            s.denominators.clone(),
            p.zero(),
            p.one(),
        );
        let v = eval_series(&s_star, &p).unwrap();
        // margin − 1 = 1.3: slow polynomial decay; the evaluator must either
        // converge honestly or say it did not.
        if v.converged {
            assert!((v.value.re_f64() - 0.0750595355797585064353278088070961386).abs() < 5e-9);
        } else {
            assert!(v.tail_bound > p.tol);
        }
    }

    #[test]
    fn classical_gauss_sum() {
        let p =
            PrecisionPolicy::new(crate::scalar::PrecisionMode::Standard, 17, 1e-9, 40_000).unwrap();
        // ₂F₁(0.4, 0.7; 3.2; 1) — frozen oracle (margin 2.1)
        let s = SeriesSpec::new(
            SeriesKind::ClassicalF,
            vec![sc(&p, 0.4, 0.0), sc(&p, 0.7, 0.0)],
            vec![sc(&p, 3.2, 0.0)],
            p.zero(),
            p.one(),
        );
        let v = eval_series(&s, &p).unwrap();
        assert!(v.converged);
        assert!((v.value.re_f64() - 1.13821005723863919728615225481441161).abs() < 5e-9);
    }

    #[test]
    fn eval_f_rejects_q_kinds() {
        let p = pol();
        let s = spec_q(
            &p,
            SeriesKind::QPhi,
            &[(0.3, 0.0)],
            &[],
            (0.5, 0.0),
            (0.4, 0.0),
        );
        assert!(eval_f(&s, &p).is_err());
    }
}
