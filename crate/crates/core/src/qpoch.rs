//! q-shifted factorials (x; q)_n for every integer order, the infinite
//! product (x; q)_∞, and list-quotient helpers.
//!
//! Definitions implemented:
//!   (x;q)_n = ∏_{i=0}^{n-1} (1 - x q^i)          for n > 0,
//!   (x;q)_0 = 1,
//!   (x;q)_n = 1 / ∏_{j=n}^{-1} (1 - x q^j)       for n < 0,
//!   (x;q)_∞ = ∏_{i≥0} (1 - x q^i),               |q| < 1.
//!
//! All products are computed directly in the complex plane — no logarithms —
//! with a single rescale-by-power-of-two guard when a running product's
//! magnitude leaves [2^-500, 2^500].

use crate::error::{Error, Result};
use crate::scalar::{PrecisionPolicy, Scalar};

/// Order of a q-shifted factorial: a signed finite order or the infinite
/// product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochOrder {
    Finite(i64),
    Infinite,
}

/// Magnitude window for the rescale guard, as base-2 exponents.
const RESCALE_EXP: i64 = 500;

/// Running product with power-of-two rescaling: accumulates factors (or
/// their reciprocals) and restores the net scale exactly at the end.
struct GuardedProduct {
    acc: Scalar,
    shift: i64,
}

impl GuardedProduct {
    fn new(prec: u32) -> Self {
        Self {
            acc: Scalar::one(prec),
            shift: 0,
        }
    }

    fn mul(&mut self, f: &Scalar) {
        self.acc *= f;
        self.guard();
    }

    fn div(&mut self, f: &Scalar) {
        self.acc /= f;
        self.guard();
    }

    fn guard(&mut self) {
        if let Some(e) = self.acc.mag_exp() {
            if e.abs() > RESCALE_EXP {
                let back = i32::try_from(-e).unwrap_or(i32::MIN);
                self.acc.scale_pow2(back);
                self.shift += e;
            }
        }
    }

    fn finish(mut self) -> Scalar {
        // Restore the net scale in chunks that stay within i32.
        while self.shift != 0 {
            let step = self.shift.clamp(-(1 << 20), 1 << 20);
            self.acc.scale_pow2(step as i32);
            self.shift -= step;
        }
        self.acc
    }
}

fn require_base_in_disk(q: &Scalar) -> Result<()> {
    let m = q.abs_f64();
    if !(m < 1.0) {
        return Err(Error::BaseOutOfDomain { modulus: m });
    }
    Ok(())
}

/// (x; q)_n for any signed integer n. For n < 0 every factor lands in a
/// denominator, so each is checked against the singularity threshold.
pub fn qpoch_finite(x: &Scalar, q: &Scalar, n: i64, policy: &PrecisionPolicy) -> Result<Scalar> {
    require_base_in_disk(q)?;
    let prec = policy.prec_bits().max(x.prec()).max(q.prec());
    let one = Scalar::one(prec);
    if n == 0 {
        return Ok(one);
    }
    let mut prod = GuardedProduct::new(prec);
    if n > 0 {
        let mut xq = x.clone();
        for _ in 0..n {
            prod.mul(&(&one - &xq));
            xq *= q;
        }
        Ok(prod.finish())
    } else {
        // ∏_{j=n}^{-1} (1 - x q^j), then invert. Walk j = -1, -2, ..., n.
        let mut xq = x / q;
        for step in 0..(-n) {
            let f = &one - &xq;
            let mag = f.abs_f64();
            if mag < policy.singular_threshold() {
                return Err(Error::SingularFactor {
                    index: -1 - step,
                    magnitude: mag,
                });
            }
            prod.div(&f);
            xq /= q;
        }
        Ok(prod.finish())
    }
}

/// Truncation index for infinite products: stop once |x q^k| < tol/10 *and*
/// the geometric tail bound 2|x q^k|/(1-|q|) is below tol, never before
/// k = 8. `max_abs_x` is the largest |entry| over all participating lists.
fn infinite_cutoff_reached(k: usize, max_abs_x: f64, abs_q: f64, tol: f64) -> bool {
    if k < 8 {
        return false;
    }
    let decay = max_abs_x * abs_q.powi(k as i32);
    decay < tol / 10.0 && 2.0 * decay / (1.0 - abs_q) < tol
}

/// Hard ceiling on infinite-product factors; reached only for |q| extremely
/// close to 1, where the geometric bound above cannot fall below tol.
const INFINITE_FACTOR_CEILING: usize = 2_000_000;

/// (x; q)_∞, truncated under the geometric tail bound.
pub fn qpoch_infinite(x: &Scalar, q: &Scalar, policy: &PrecisionPolicy) -> Result<Scalar> {
    require_base_in_disk(q)?;
    let prec = policy.prec_bits().max(x.prec()).max(q.prec());
    let one = Scalar::one(prec);
    let abs_q = q.abs_f64();
    let abs_x = x.abs_f64();
    let mut prod = GuardedProduct::new(prec);
    let mut xq = x.clone();
    let mut k = 0usize;
    loop {
        if infinite_cutoff_reached(k, abs_x, abs_q, policy.tol) {
            break;
        }
        if k >= INFINITE_FACTOR_CEILING {
            return Err(Error::DomainViolation(format!(
                "infinite product did not reach its tail bound within {INFINITE_FACTOR_CEILING} factors (|q| = {abs_q})"
            )));
        }
        prod.mul(&(&one - &xq));
        xq *= q;
        k += 1;
    }
    Ok(prod.finish())
}

/// Quotient of q-shifted factorials, all at the same base and order:
/// ∏_i (nums[i]; q)_order / ∏_j (dens[j]; q)_order, computed
/// factor-interleaved — at each product index every numerator factor is
/// multiplied in and every denominator factor divided out before moving to
/// the next index — to keep the running magnitude flat.
pub fn qpoch_ratio(
    nums: &[Scalar],
    dens: &[Scalar],
    q: &Scalar,
    order: PochOrder,
    policy: &PrecisionPolicy,
) -> Result<Scalar> {
    require_base_in_disk(q)?;
    let prec = policy
        .prec_bits()
        .max(q.prec())
        .max(nums.iter().chain(dens).map(Scalar::prec).max().unwrap_or(0));
    let one = Scalar::one(prec);
    let threshold = policy.singular_threshold();
    let mut prod = GuardedProduct::new(prec);

    match order {
        PochOrder::Finite(n) if n == 0 => Ok(one),
        PochOrder::Finite(n) if n > 0 => {
            // Positive order: numerator factors are honest zeros if they
            // vanish; denominator factors must stay off the threshold.
            let mut nq: Vec<Scalar> = nums.to_vec();
            let mut dq: Vec<Scalar> = dens.to_vec();
            for i in 0..n {
                for x in &mut nq {
                    prod.mul(&(&one - &*x));
                    *x *= q;
                }
                for y in &mut dq {
                    let f = &one - &*y;
                    let mag = f.abs_f64();
                    if mag < threshold {
                        return Err(Error::SingularFactor {
                            index: i,
                            magnitude: mag,
                        });
                    }
                    prod.div(&f);
                    *y *= q;
                }
            }
            Ok(prod.finish())
        }
        PochOrder::Finite(n) => {
            // Negative order: roles flip — numerator entries contribute
            // reciprocal factors (checked), denominator entries multiply in.
            let mut nq: Vec<Scalar> = nums.iter().map(|x| x / q).collect();
            let mut dq: Vec<Scalar> = dens.iter().map(|y| y / q).collect();
            for step in 0..(-n) {
                let j = -1 - step;
                for x in &mut nq {
                    let f = &one - &*x;
                    let mag = f.abs_f64();
                    if mag < threshold {
                        return Err(Error::SingularFactor {
                            index: j,
                            magnitude: mag,
                        });
                    }
                    prod.div(&f);
                    *x /= q;
                }
                for y in &mut dq {
                    prod.mul(&(&one - &*y));
                    *y /= q;
                }
            }
            Ok(prod.finish())
        }
        PochOrder::Infinite => {
            let abs_q = q.abs_f64();
            let max_abs = nums
                .iter()
                .chain(dens)
                .map(Scalar::abs_f64)
                .fold(0.0f64, f64::max);
            let mut nq: Vec<Scalar> = nums.to_vec();
            let mut dq: Vec<Scalar> = dens.to_vec();
            let mut k = 0usize;
            loop {
                if infinite_cutoff_reached(k, max_abs, abs_q, policy.tol) {
                    break;
                }
                if k >= INFINITE_FACTOR_CEILING {
                    return Err(Error::DomainViolation(format!(
                        "infinite ratio did not reach its tail bound within {INFINITE_FACTOR_CEILING} factors (|q| = {abs_q})"
                    )));
                }
                for x in &mut nq {
                    prod.mul(&(&one - &*x));
                    *x *= q;
                }
                for y in &mut dq {
                    let f = &one - &*y;
                    let mag = f.abs_f64();
                    if mag < threshold {
                        return Err(Error::SingularFactor {
                            index: k as i64,
                            magnitude: mag,
                        });
                    }
                    prod.div(&f);
                    *y *= q;
                }
                k += 1;
            }
            Ok(prod.finish())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pol() -> PrecisionPolicy {
        PrecisionPolicy::standard()
    }

    fn s(p: &PrecisionPolicy, re: f64, im: f64) -> Scalar {
        p.scalar(re, im)
    }

    // ---- frozen direct-product oracles ----

    #[test]
    fn finite_order_zero_is_one() {
        let p = pol();
        let v = qpoch_finite(&s(&p, 0.7, 0.0), &s(&p, 0.5, 0.0), 0, &p).unwrap();
        assert_eq!(v, p.one());
    }

    #[test]
    fn finite_positive_direct_product() {
        let p = pol();
        // (0.5; 0.5)_2 = (1 - 0.5)(1 - 0.25) = 0.375 exactly
        let v = qpoch_finite(&s(&p, 0.5, 0.0), &s(&p, 0.5, 0.0), 2, &p).unwrap();
        assert!((v.re_f64() - 0.375).abs() < 1e-16 && v.im_f64() == 0.0);
    }

    #[test]
    fn finite_negative_order() {
        let p = pol();
        // (0.25; 0.5)_{-1} = 1/(1 - 0.25/0.5) = 2 exactly
        let v = qpoch_finite(&s(&p, 0.25, 0.0), &s(&p, 0.5, 0.0), -1, &p).unwrap();
        assert!((v.re_f64() - 2.0).abs() < 1e-15);
        // (0.3; 0.6)_{-3} = -30.857142857142857... (direct-product oracle)
        let v = qpoch_finite(&s(&p, 0.3, 0.0), &s(&p, 0.6, 0.0), -3, &p).unwrap();
        assert!((v.re_f64() - (-30.857142857142857142)).abs() < 1e-12);
    }

    #[test]
    fn finite_complex_point() {
        let p = pol();
        // ((0.2+0.1i); (0.5+0.1i))_5 — exact decimal oracle
        let v = qpoch_finite(&s(&p, 0.2, 0.1), &s(&p, 0.5, 0.1), 5, &p).unwrap();
        assert!((v.re_f64() - 0.666755509390432).abs() < 1e-15, "{v}");
        assert!((v.im_f64() - (-0.197108322818624)).abs() < 1e-15, "{v}");
    }

    #[test]
    fn finite_negative_singular_factor() {
        let p = pol();
        // (0.5; 0.5)_{-1}: factor 1 - 0.5/0.5 = 0
        let err = qpoch_finite(&s(&p, 0.5, 0.0), &s(&p, 0.5, 0.0), -1, &p).unwrap_err();
        assert!(matches!(err, Error::SingularFactor { .. }), "{err}");
    }

    #[test]
    fn base_out_of_domain() {
        let p = pol();
        let err = qpoch_finite(&s(&p, 0.3, 0.0), &s(&p, 1.2, 0.0), 3, &p).unwrap_err();
        assert!(matches!(err, Error::BaseOutOfDomain { .. }));
        let err = qpoch_infinite(&s(&p, 0.3, 0.0), &s(&p, 1.2, 0.0), &p).unwrap_err();
        assert!(matches!(err, Error::BaseOutOfDomain { .. }));
        // |q| = 1 exactly is also out
        let err = qpoch_infinite(&s(&p, 0.3, 0.0), &s(&p, 0.0, 1.0), &p).unwrap_err();
        assert!(matches!(err, Error::BaseOutOfDomain { .. }));
    }

    #[test]
    fn infinite_at_zero_argument_is_one() {
        let p = pol();
        let v = qpoch_infinite(&p.zero(), &s(&p, 0.5, 0.0), &p).unwrap();
        assert_eq!(v, p.one());
    }

    #[test]
    fn infinite_euler_value() {
        let p = pol();
        // (0.5; 0.5)_∞ — 36-digit direct-product oracle
        let v = qpoch_infinite(&s(&p, 0.5, 0.0), &s(&p, 0.5, 0.0), &p).unwrap();
        assert!((v.re_f64() - 0.28878809508660242127889972192923078).abs() < p.tol);
        assert_eq!(v.im_f64(), 0.0);
        // (0.2; 0.5)_∞
        let v = qpoch_infinite(&s(&p, 0.2, 0.0), &s(&p, 0.5, 0.0), &p).unwrap();
        assert!((v.re_f64() - 0.650365942120985107637656009331106541).abs() < p.tol);
    }

    #[test]
    fn infinite_complex_value() {
        let p = pol();
        // ((0.3+0.4i); 0.55)_∞
        let v = qpoch_infinite(&s(&p, 0.3, 0.4), &s(&p, 0.55, 0.0), &p).unwrap();
        assert!((v.re_f64() - 0.278965064410516297452491903014365632).abs() < p.tol);
        assert!((v.im_f64() - (-0.499886075461663980358618263367389065)).abs() < p.tol);
    }

    #[test]
    fn ratio_identical_lists_cancel() {
        let p = pol();
        let x = s(&p, 0.37, 0.21);
        let q = s(&p, 0.45, 0.0);
        let v = qpoch_ratio(&[x.clone()], &[x], &q, PochOrder::Finite(7), &p).unwrap();
        assert!(v.dist(&p.one()) < 1e-15);
    }

    #[test]
    fn ratio_reduces_to_finite() {
        let p = pol();
        let v = qpoch_ratio(
            &[s(&p, 0.5, 0.0)],
            &[],
            &s(&p, 0.5, 0.0),
            PochOrder::Finite(2),
            &p,
        )
        .unwrap();
        assert!((v.re_f64() - 0.375).abs() < 1e-16);
    }

    #[test]
    fn ratio_matches_unfused_quotient() {
        let p = pol();
        let q = s(&p, 0.5, 0.0);
        // (0.2;q)_3 (0.3;q)_3 / (0.4;q)_3 = 0.871427083333... (oracle)
        let v = qpoch_ratio(
            &[s(&p, 0.2, 0.0), s(&p, 0.3, 0.0)],
            &[s(&p, 0.4, 0.0)],
            &q,
            PochOrder::Finite(3),
            &p,
        )
        .unwrap();
        assert!((v.re_f64() - 0.871427083333333333).abs() < 1e-15);
        // and agrees with the unfused quotient within a few ulp
        let unfused = &(&qpoch_finite(&s(&p, 0.2, 0.0), &q, 3, &p).unwrap()
            * &qpoch_finite(&s(&p, 0.3, 0.0), &q, 3, &p).unwrap())
            / &qpoch_finite(&s(&p, 0.4, 0.0), &q, 3, &p).unwrap();
        assert!(v.dist(&unfused) < 8.0 * p.eps());
    }

    #[test]
    fn ratio_negative_order_checks_numerators() {
        let p = pol();
        // numerator (x;q)_{-1} with x = q is singular
        let q = s(&p, 0.5, 0.0);
        let err = qpoch_ratio(&[q.clone()], &[], &q, PochOrder::Finite(-1), &p).unwrap_err();
        assert!(matches!(err, Error::SingularFactor { .. }));
        // but the same entry in the denominator is a legitimate zero
        let v = qpoch_ratio(&[], &[q.clone()], &q, PochOrder::Finite(-1), &p).unwrap();
        assert!(v.is_zero() || v.abs_f64() < 1e-300);
    }

    #[test]
    fn ratio_infinite_equals_quotient_of_infinites() {
        let p = pol();
        let q = s(&p, 0.62, 0.0);
        let nums = [s(&p, 0.35, 0.15), s(&p, -0.4, 0.2)];
        let dens = [s(&p, 0.55, -0.3)];
        let fused = qpoch_ratio(&nums, &dens, &q, PochOrder::Infinite, &p).unwrap();
        let unfused = &(&qpoch_infinite(&nums[0], &q, &p).unwrap()
            * &qpoch_infinite(&nums[1], &q, &p).unwrap())
            / &qpoch_infinite(&dens[0], &q, &p).unwrap();
        assert!(fused.dist(&unfused) < p.tol * unfused.abs_f64().max(1.0));
    }

    #[test]
    fn ratio_empty_lists_is_one() {
        let p = pol();
        let q = s(&p, 0.5, 0.0);
        for order in [
            PochOrder::Finite(5),
            PochOrder::Finite(0),
            PochOrder::Infinite,
        ] {
            let v = qpoch_ratio(&[], &[], &q, order, &p).unwrap();
            assert_eq!(v, p.one());
        }
    }

    #[test]
    fn rescale_guard_handles_extreme_magnitudes() {
        // A long product of factors ≈ 1.9 climbs past 2^500 without the
        // guard losing exactness: compare against a plain f64 magnitude law.
        let p = pol();
        let q = s(&p, 0.99999, 0.0);
        let x = s(&p, -0.9, 0.0); // factors (1 + 0.9 q^i) ≈ 1.9 for many i
        let v = qpoch_finite(&x, &q, 3000, &p).unwrap();
        assert!(v.is_finite());
        let log2_v = v.mag_exp().unwrap();
        // crude check: sum of log2 of the first 3000 factors
        let mut expect = 0.0f64;
        let mut xq = -0.9f64;
        for _ in 0..3000 {
            expect += (1.0 - xq).log2();
            xq *= 0.99999;
        }
        assert!((log2_v as f64 - expect).abs() < 2.0, "{log2_v} vs {expect}");
    }

    // ---- invariants (seeded sweeps; the proptest suite covers more) ----

    #[test]
    fn functional_equation_spot() {
        let p = pol();
        let x = s(&p, 0.31, 0.42);
        let q = s(&p, 0.57, 0.0);
        for (n, m) in [(3i64, 4i64), (0, 5), (5, 0), (-2, 6), (4, -3), (-3, -2)] {
            let lhs = {
                let first = qpoch_finite(&x, &q, n, &p).unwrap();
                let shifted = &x * &q.powi(n);
                &first * &qpoch_finite(&shifted, &q, m, &p).unwrap()
            };
            let rhs = qpoch_finite(&x, &q, n + m, &p).unwrap();
            assert!(
                lhs.dist(&rhs) <= p.tol * rhs.abs_f64().max(1.0),
                "n={n} m={m}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn negative_order_inversion_spot() {
        let p = pol();
        let x = s(&p, 0.44, -0.18);
        let q = s(&p, 0.66, 0.0);
        for n in 1..=8i64 {
            let a = qpoch_finite(&x, &q, -n, &p).unwrap();
            let shifted = &x * &q.powi(-n);
            let b = qpoch_finite(&shifted, &q, n, &p).unwrap();
            let prod = &a * &b;
            assert!(prod.dist(&p.one()) <= p.tol, "n={n}: {prod}");
        }
    }

    #[test]
    fn infinite_split_spot() {
        let p = pol();
        let x = s(&p, 0.52, 0.23);
        let q = s(&p, 0.71, 0.0);
        let whole = qpoch_infinite(&x, &q, &p).unwrap();
        for n in [0i64, 1, 7, 25, 50] {
            let head = qpoch_finite(&x, &q, n, &p).unwrap();
            let shifted = &x * &q.powi(n);
            let tail = qpoch_infinite(&shifted, &q, &p).unwrap();
            let prod = &head * &tail;
            assert!(
                prod.dist(&whole) <= p.tol * whole.abs_f64().max(1.0),
                "split at {n}"
            );
        }
    }
}
