//! Classical-side primitives: the shifted factorial (x)_n for every integer
//! order, numerical Γ on the complex plane, and Γ-quotients.
//!
//! Γ is computed in double precision by a Lanczos rational approximation
//! (g = 7, nine coefficients) with Euler reflection for Re z < 0.5. That
//! gives at least 12 significant digits inside the declared accuracy box
//! |Re z| ≤ 50, |Im z| ≤ 20; outside the box results carry a `low_accuracy`
//! flag instead of silently degrading. Quotients of Γ values are assembled
//! from log-Γ sums and exponentiated once, so individual factors may
//! overflow f64 while the quotient stays representable.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::{PrecisionPolicy, Scalar};

/// Declarative Γ-quotient: ∏Γ(numerators) / ∏Γ(denominators).
#[derive(Debug, Clone)]
pub struct GammaRatioSpec {
    pub numerators: Vec<Scalar>,
    pub denominators: Vec<Scalar>,
}

/// A Γ evaluation together with its accuracy provenance.
#[derive(Debug, Clone)]
pub struct Gamma {
    pub value: Scalar,
    /// True when any argument fell outside the accuracy box
    /// |Re| ≤ 50, |Im| ≤ 20 within which ≥ 12 digits are promised.
    pub low_accuracy: bool,
}

const ACCURACY_BOX_RE: f64 = 50.0;
const ACCURACY_BOX_IM: f64 = 20.0;

/// Lanczos g = 7 coefficients (the widely used 9-term set).
const LANCZOS_G: f64 = 7.0;
const LANCZOS_P: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn in_accuracy_box(z: Complex64) -> bool {
    z.re.abs() <= ACCURACY_BOX_RE && z.im.abs() <= ACCURACY_BOX_IM
}

fn is_pole(z: &Scalar, threshold: f64) -> bool {
    let re = z.re_f64();
    let im = z.im_f64();
    if im.abs() >= threshold {
        return false;
    }
    let nearest = re.round();
    nearest <= 0.5 && (re - nearest).abs() < threshold
}

/// Principal-branch log-Γ. Every caller only ever exponentiates sums of
/// these values, and exp is single-valued, so branch choices inside the
/// reflection step cannot leak into final Γ or Γ-quotient values.
fn ln_gamma_c64(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Euler reflection: Γ(z) Γ(1−z) = π / sin(πz)
        let pi = std::f64::consts::PI;
        let ln_pi = Complex64::new(pi.ln(), 0.0);
        return ln_pi - (pi * z).sin().ln() - ln_gamma_c64(Complex64::new(1.0, 0.0) - z);
    }
    let w = z - 1.0;
    let mut x = Complex64::new(LANCZOS_P[0], 0.0);
    for (i, &p) in LANCZOS_P.iter().enumerate().skip(1) {
        x += p / (w + i as f64);
    }
    let t = w + LANCZOS_G + 0.5;
    let half_ln_two_pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
    Complex64::new(half_ln_two_pi, 0.0) + (w + 0.5) * t.ln() - t + x.ln()
}

/// Rising shifted factorial (x)_n = x(x+1)···(x+n−1), with (x)_0 = 1 and
/// (x)_{−m} = 1 / ((x−1)(x−2)···(x−m)).
pub fn pochhammer(x: &Scalar, n: i64, policy: &PrecisionPolicy) -> Result<Scalar> {
    let prec = policy.prec_bits().max(x.prec());
    let mut acc = Scalar::one(prec);
    if n >= 0 {
        for i in 0..n {
            acc *= x + &Scalar::new(prec, i as f64, 0.0);
        }
    } else {
        let threshold = policy.singular_threshold();
        for j in 1..=(-n) {
            let factor = x - &Scalar::new(prec, j as f64, 0.0);
            let mag = factor.abs_f64();
            if mag < threshold {
                return Err(Error::SingularFactor {
                    index: -j,
                    magnitude: mag,
                });
            }
            acc /= factor;
        }
    }
    Ok(acc)
}

/// Numerical Γ(z).
pub fn gamma(z: &Scalar, policy: &PrecisionPolicy) -> Result<Gamma> {
    let threshold = policy.singular_threshold();
    if is_pole(z, threshold) {
        return Err(Error::Pole(format!(
            "gamma argument {} is a nonpositive integer within threshold",
            z.to_display(17)
        )));
    }
    let zc = Complex64::new(z.re_f64(), z.im_f64());
    let v = ln_gamma_c64(zc).exp();
    if !v.re.is_finite() || !v.im.is_finite() {
        return Err(Error::DomainViolation(format!(
            "gamma({}) is not representable in double precision",
            z.to_display(17)
        )));
    }
    Ok(Gamma {
        value: Scalar::new(policy.prec_bits().max(z.prec()), v.re, v.im),
        low_accuracy: !in_accuracy_box(zc),
    })
}

/// ∏Γ(numerators)/∏Γ(denominators): log-Γ values are summed first and
/// exponentiated once, so a quotient like Γ(180.5)/Γ(179.5) is fine even
/// though each factor alone overflows double precision.
pub fn gamma_ratio(spec: &GammaRatioSpec, policy: &PrecisionPolicy) -> Result<Gamma> {
    let threshold = policy.singular_threshold();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut low_accuracy = false;
    for (list, sign) in [(&spec.numerators, 1.0), (&spec.denominators, -1.0)] {
        for entry in list.iter() {
            if is_pole(entry, threshold) {
                return Err(Error::Pole(format!(
                    "gamma-quotient entry {} is a nonpositive integer within threshold",
                    entry.to_display(17)
                )));
            }
            let zc = Complex64::new(entry.re_f64(), entry.im_f64());
            low_accuracy |= !in_accuracy_box(zc);
            acc += sign * ln_gamma_c64(zc);
        }
    }
    let v = acc.exp();
    if !v.re.is_finite() || !v.im.is_finite() {
        return Err(Error::DomainViolation(
            "gamma quotient is not representable in double precision".into(),
        ));
    }
    let prec = policy.prec_bits().max(
        spec.numerators
            .iter()
            .chain(&spec.denominators)
            .map(Scalar::prec)
            .max()
            .unwrap_or(0),
    );
    Ok(Gamma {
        value: Scalar::new(prec, v.re, v.im),
        low_accuracy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{eval_f, SeriesKind, SeriesSpec};

    fn pol() -> PrecisionPolicy {
        PrecisionPolicy::standard()
    }

    fn rel_err(got: &Scalar, want_re: f64, want_im: f64) -> f64 {
        let p = pol();
        let want = p.scalar(want_re, want_im);
        got.dist(&want) / want.abs_f64().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn pochhammer_small_cases() {
        let p = pol();
        assert_eq!(pochhammer(&p.scalar(2.7, -0.4), 0, &p).unwrap(), p.one());
        let v = pochhammer(&p.real(3.0), 4, &p).unwrap();
        assert!((v.re_f64() - 360.0).abs() < 1e-12);
        // (0.5)_{-3} = 1/((-0.5)(-1.5)(-2.5)) = -1/1.875
        let v = pochhammer(&p.real(0.5), -3, &p).unwrap();
        assert!((v.re_f64() - (-1.0 / 1.875)).abs() < 1e-15);
    }

    #[test]
    fn pochhammer_negative_order_singular() {
        let p = pol();
        assert!(matches!(
            pochhammer(&p.real(1.0), -2, &p),
            Err(Error::SingularFactor { .. })
        ));
    }

    #[test]
    fn pochhammer_inversion() {
        // (x)_{-n} · (x - n)_n = 1
        let p = pol();
        let x = p.scalar(0.7, 0.3);
        for n in 1..=6i64 {
            let neg = pochhammer(&x, -n, &p).unwrap();
            let shifted = &x - &p.real(n as f64);
            let pos = pochhammer(&shifted, n, &p).unwrap();
            let prod = &neg * &pos;
            assert!(prod.dist(&p.one()) < 1e-20, "n = {n}");
        }
    }

    #[test]
    fn gamma_trivia() {
        let p = pol();
        assert!(rel_err(&gamma(&p.one(), &p).unwrap().value, 1.0, 0.0) < 1e-13);
        let v = gamma(&p.real(5.0), &p).unwrap();
        assert!(rel_err(&v.value, 24.0, 0.0) < 1e-13);
        assert!(!v.low_accuracy);
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!(rel_err(&gamma(&p.real(0.5), &p).unwrap().value, sqrt_pi, 0.0) < 1e-13);
        assert!(matches!(gamma(&p.zero(), &p), Err(Error::Pole(_))));
        assert!(matches!(gamma(&p.real(-3.0), &p), Err(Error::Pole(_))));
    }

    #[test]
    fn gamma_frozen_complex_values() {
        let p = pol();
        let cases: [((f64, f64), (f64, f64)); 5] = [
            (
                (0.5, 0.5),
                (
                    0.818163999541747394077748873555324909,
                    -0.763313828713982616670296787760900626,
                ),
            ),
            (
                (-2.5, 1.5),
                (
                    0.0034121395642391490285708423636491565,
                    -0.0240534904346647359844263433385703274,
                ),
            ),
            (
                (12.3, -7.7),
                (
                    6307826.50583816698345712036500126393,
                    -4740444.57066620834768087420920448694,
                ),
            ),
            (
                (41.0, 18.0),
                (
                    -5.94977609634852342670086068309378324e45,
                    -1.58077539733632878560422028269501957e46,
                ),
            ),
            (
                (-31.25, -4.5),
                (
                    -2.54920878309304653491149999783502884e-40,
                    1.95046142474500981253993152166741621e-40,
                ),
            ),
        ];
        for ((zr, zi), (wr, wi)) in cases {
            let g = gamma(&p.scalar(zr, zi), &p).unwrap();
            assert!(!g.low_accuracy, "({zr}, {zi}) is inside the box");
            let err = rel_err(&g.value, wr, wi);
            assert!(err < 5e-12, "gamma({zr} + {zi}i) relative error {err:.3e}");
        }
    }

    #[test]
    fn gamma_recurrence_over_box() {
        // Γ(z+1) = z Γ(z) within 1e−12 relative at scattered points.
        let p = pol();
        let pts = [
            (0.3, 0.0),
            (1.7, 2.3),
            (-4.6, 1.1),
            (10.2, -9.8),
            (-20.4, 15.0),
            (33.0, 4.0),
            (-0.2, -0.7),
        ];
        for (re, im) in pts {
            let z = p.scalar(re, im);
            let lhs = gamma(&(&z + &p.one()), &p).unwrap().value;
            let rhs = &z * &gamma(&z, &p).unwrap().value;
            let rel = lhs.dist(&rhs) / rhs.abs_f64();
            assert!(rel < 1e-12, "recurrence at ({re}, {im}): {rel:.3e}");
        }
    }

    #[test]
    fn low_accuracy_flag_outside_box() {
        let p = pol();
        assert!(gamma(&p.real(61.0), &p).unwrap().low_accuracy);
        assert!(gamma(&p.scalar(1.0, 25.0), &p).unwrap().low_accuracy);
        assert!(!gamma(&p.scalar(1.0, 19.0), &p).unwrap().low_accuracy);
    }

    #[test]
    fn pochhammer_matches_gamma_quotient() {
        let p = pol();
        let x = p.scalar(0.3, 0.2);
        for n in [1i64, 2, 5, 9] {
            let direct = pochhammer(&x, n, &p).unwrap();
            let via_gamma = gamma_ratio(
                &GammaRatioSpec {
                    numerators: vec![&x + &p.real(n as f64)],
                    denominators: vec![x.clone()],
                },
                &p,
            )
            .unwrap();
            let rel = direct.dist(&via_gamma.value) / direct.abs_f64();
            assert!(rel < 1e-10, "n = {n}: {rel:.3e}");
        }
    }

    #[test]
    fn gamma_ratio_identical_lists() {
        let p = pol();
        let spec = GammaRatioSpec {
            numerators: vec![p.scalar(2.3, 1.1), p.real(0.8)],
            denominators: vec![p.scalar(2.3, 1.1), p.real(0.8)],
        };
        let v = gamma_ratio(&spec, &p).unwrap();
        assert!(v.value.dist(&p.one()) < 1e-14);
    }

    #[test]
    fn gamma_ratio_pole_on_zero_entry() {
        let p = pol();
        let spec = GammaRatioSpec {
            numerators: vec![p.zero()],
            denominators: vec![p.one()],
        };
        assert!(matches!(gamma_ratio(&spec, &p), Err(Error::Pole(_))));
        // ... in the denominator list as well
        let spec = GammaRatioSpec {
            numerators: vec![p.one()],
            denominators: vec![p.real(-4.0)],
        };
        assert!(matches!(gamma_ratio(&spec, &p), Err(Error::Pole(_))));
    }

    #[test]
    fn gamma_ratio_survives_individually_overflowing_factors() {
        // Γ(180.5)/Γ(179.5) = 179.5, although each factor overflows f64.
        let p = pol();
        let v = gamma_ratio(
            &GammaRatioSpec {
                numerators: vec![p.real(180.5)],
                denominators: vec![p.real(179.5)],
            },
            &p,
        )
        .unwrap();
        assert!(v.low_accuracy); // outside the box, flagged as such
        assert!((v.value.re_f64() - 179.5).abs() < 1e-9);
    }

    #[test]
    fn gauss_summation_cross_check() {
        // Γ(d) Γ(d−c−e) / (Γ(d−c) Γ(d−e)) = ₂F₁(c, e; d; 1)
        // at d = 3.2, c = 0.4, e = 0.7 — both sides also frozen numerically.
        let p =
            PrecisionPolicy::new(crate::scalar::PrecisionMode::Standard, 17, 1e-9, 40_000).unwrap();
        let (c, e, d) = (0.4, 0.7, 3.2);
        let ratio = gamma_ratio(
            &GammaRatioSpec {
                numerators: vec![p.real(d), p.real(d - c - e)],
                denominators: vec![p.real(d - c), p.real(d - e)],
            },
            &p,
        )
        .unwrap();
        assert!(!ratio.low_accuracy);
        let f = eval_f(
            &SeriesSpec::new(
                SeriesKind::ClassicalF,
                vec![p.real(c), p.real(e)],
                vec![p.real(d)],
                p.zero(),
                p.one(),
            ),
            &p,
        )
        .unwrap();
        assert!(f.converged);
        assert!((ratio.value.re_f64() - 1.13821005723863919728615225481441161).abs() < 1e-12);
        assert!(ratio.value.dist(&f.value) < 1e-8);
    }
}
