//! The four foundational three-term relations (patterns A–D), each in two
//! equation forms, plus their classical counterparts — and the named
//! coefficient triples they share.
//!
//! Every pattern relates ₃φ₂(a,c,e; b,d; q, bd/ace) to two series with
//! parameters shifted by powers of q. The first form pairs the script
//! coefficient with a plain second series; the second form pairs the
//! fraktur coefficient with a shifted (star) series. Classically the
//! q-shifts become integer shifts and the series sit at unit argument
//! under the margin Re(b+d−a−c−e) > 1.

use crate::error::{Error, Result};
use crate::scalar::{PrecisionPolicy, Scalar};
use crate::series::{SeriesKind, SeriesSpec};

use super::{f3, phi3, Factor, Family, ParamSet, Relation, RelationTerm};

/// Which foundational relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    A,
    B,
    C,
    D,
}

/// q-side or classical coefficient family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Q,
    Classical,
}

/// The three named coefficients of one pattern: script (𝒜/ℬ/𝒞/𝒟),
/// blackboard (𝔸/𝔹/ℂ/𝔻), fraktur (𝔄/𝔅/ℭ/𝔇).
#[derive(Debug, Clone)]
pub struct CoefficientSet {
    pub script: Scalar,
    pub blackboard: Scalar,
    pub fraktur: Scalar,
}

/// Evaluate a pattern's coefficient triple at `params`.
pub fn pattern_coeffs(
    pattern: Pattern,
    params: &ParamSet,
    side: Side,
    policy: &PrecisionPolicy,
) -> Result<CoefficientSet> {
    let [a, b, c, d, e] = params.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let set = match side {
        Side::Q => {
            let q = params.q();
            match pattern {
                Pattern::A => {
                    let da = d / (q * a); // d/(qa)
                    let ratio = b * d / (q * a * c * e); // bd/(qace)
                    let den = (&one - b) * (&one - &da);
                    CoefficientSet {
                        script: ((&one - b) * (&one - &da) - (&one - c) * (&one - e) * &ratio)
                            / &den,
                        blackboard: (&one - &ratio)
                            * (&one - &(q * a))
                            * (&one - c)
                            * (&one - e)
                            * b
                            * d
                            / (&den * (&one - &(q * b)) * (&one - d) * q * a * c * e),
                        fraktur: (&one - &ratio) / &den,
                    }
                }
                Pattern::B => {
                    let qcd = &one - &(q * c / d); // 1 - qc/d
                    let qed = &one - &(q * e / d); // 1 - qe/d
                    let ratio = b * d / (q * a * c * e);
                    CoefficientSet {
                        script: (&one - &(q * c * e / d)) * (&one - &(q / d)) / (&qcd * &qed),
                        blackboard: (&one - c) * (&one - e) * (&one - &ratio) * q
                            / ((&one - b) * &qcd * &qed * d),
                        fraktur: (&one - &(q * a * c * e / (b * d))) * (&one - &(q / d))
                            / ((&one - &(a / q)) * &qcd * &qed),
                    }
                }
                Pattern::C => {
                    let ratio = b * d / (q * a * c * e);
                    let den = (&one - b) * (&one - d);
                    CoefficientSet {
                        script: ((&one - b) * (&one - d)
                            - (&one - a) * (&one - &(q * c * e)) * &ratio)
                            / &den,
                        blackboard: (&one - &ratio)
                            * (&one - a)
                            * (&one - &(q * c))
                            * (&one - &(q * e))
                            * b
                            * d
                            / (&den * (&one - &(q * b)) * (&one - &(q * d)) * q * a * c * e),
                        fraktur: (&one - &ratio) / &den,
                    }
                }
                Pattern::D => {
                    let qab = &one - &(q * a / b); // 1 - qa/b
                    let qad = &one - &(q * a / d); // 1 - qa/d
                    CoefficientSet {
                        script: (&one - &(q / b)) * (&one - &(q / d)) * a / (&qab * &qad),
                        blackboard: (&one - a) * (&one - &(q * a * c * e / (b * d))) * q
                            / (&qab * &qad * c * e),
                        fraktur: (&one - &(q * a * c * e / (b * d)))
                            * (&one - &(q / b))
                            * (&one - &(q / d))
                            * a
                            / (&qab * &qad * (&one - &(c / q)) * (&one - &(e / q))),
                    }
                }
            }
        }
        Side::Classical => {
            let shift = &one + a + c + e - b - d; // 1+a+c+e-b-d
            match pattern {
                Pattern::A => {
                    let ad = &one + a - d; // 1+a-d
                    CoefficientSet {
                        script: (&ad * b + c * e) / (&ad * b),
                        blackboard: &shift * (&one + a) * c * e / (&ad * (&one + b) * b * d),
                        fraktur: &shift / (&ad * b),
                    }
                }
                Pattern::B => {
                    let cd = &one + c - d; // 1+c-d
                    let de = d - e - &one; // d-e-1
                    CoefficientSet {
                        script: (&one + c + e - d) * (&one - d) / (&cd * (&one + e - d)),
                        blackboard: &shift * c * e / (&cd * &de * b),
                        fraktur: &shift * (&one - d) / ((&one - a) * &cd * &de),
                    }
                }
                Pattern::C => {
                    let neg_shift = -&shift; // b+d-a-c-e-1
                    CoefficientSet {
                        script: (b * d - a * (&one + c + e)) / (b * d),
                        blackboard: &neg_shift * (&one + c) * (&one + e) * a
                            / ((&one + b) * (&one + d) * b * d),
                        fraktur: &neg_shift / (b * d),
                    }
                }
                Pattern::D => {
                    let ab = &one + a - b; // 1+a-b
                    let ad = &one + a - d; // 1+a-d
                    CoefficientSet {
                        script: (&one - b) * (&one - d) / (&ab * &ad),
                        blackboard: a * &shift / (&ab * &ad),
                        fraktur: &shift * (&one - b) * (&one - d)
                            / (&ab * &ad * (&one - c) * (&one - e)),
                    }
                }
            }
        }
    };
    for (label, v) in [
        ("script", &set.script),
        ("blackboard", &set.blackboard),
        ("fraktur", &set.fraktur),
    ] {
        if !v.is_finite() {
            return Err(Error::SingularCoefficient {
                rule: format!("{pattern:?}-{label}"),
                magnitude: f64::INFINITY,
            });
        }
    }
    Ok(set)
}

// ---------------------------------------------------------------------
// Series templates
// ---------------------------------------------------------------------

fn z_main(p: &ParamSet) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    Ok(b * d / (a * c * e))
}

fn z_shifted(p: &ParamSet) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    Ok(b * d / (p.q() * a * c * e))
}

fn lhs_q(p: &ParamSet, _: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    Ok(phi3(
        SeriesKind::QPhi,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d.clone()],
        p.q(),
        z_main(p)?,
    ))
}

fn a_first_q(p: &ParamSet, _: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(phi3(
        SeriesKind::QPhi,
        [q * a, c.clone(), e.clone()],
        [q * b, d.clone()],
        q,
        z_main(p)?,
    ))
}

fn a_second_q(p: &ParamSet, _: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(phi3(
        SeriesKind::QPhi,
        [q * q * a, q * c, q * e],
        [q * q * b, q * d],
        q,
        z_shifted(p)?,
    ))
}

fn a_star_q(p: &ParamSet, _: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(phi3(
        SeriesKind::QPhiStar,
        [q * a, c.clone(), e.clone()],
        [q * b, d.clone()],
        q,
        z_shifted(p)?,
    ))
}

fn b_first_q(p: &ParamSet, _: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(phi3(
        SeriesKind::QPhi,
        [a / q, c.clone(), e.clone()],
        [b.clone(), d / q],
        q,
        z_main(p)?,
    ))
}

fn b_second_q(p: &ParamSet, _: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(phi3(
        SeriesKind::QPhi,
        [a.clone(), q * c, q * e],
        [q * b, d.clone()],
        q,
        z_shifted(p)?,
    ))
}

fn b_star_q(p: &ParamSet, _: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(phi3(
        SeriesKind::QPhiStar,
        [a / q, c.clone(), e.clone()],
        [b.clone(), d / q],
        q,
        z_shifted(p)?,
    ))
}

fn c_first_q(p: &ParamSet, _: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(phi3(
        SeriesKind::QPhi,
        [a.clone(), q * c, q * e],
        [q * b, q * d],
        q,
        z_main(p)?,
    ))
}

fn c_second_q(p: &ParamSet, _: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(phi3(
        SeriesKind::QPhi,
        [q * a, q * q * c, q * q * e],
        [q * q * b, q * q * d],
        q,
        z_shifted(p)?,
    ))
}

fn c_star_q(p: &ParamSet, _: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(phi3(
        SeriesKind::QPhiStar,
        [a.clone(), q * c, q * e],
        [q * b, q * d],
        q,
        z_shifted(p)?,
    ))
}

fn d_first_q(p: &ParamSet, _: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(phi3(
        SeriesKind::QPhi,
        [a.clone(), c / q, e / q],
        [b / q, d / q],
        q,
        z_main(p)?,
    ))
}

fn d_second_q(p: &ParamSet, _: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(phi3(
        SeriesKind::QPhi,
        [q * a, c.clone(), e.clone()],
        [b.clone(), d.clone()],
        q,
        z_shifted(p)?,
    ))
}

fn d_star_q(p: &ParamSet, _: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(phi3(
        SeriesKind::QPhiStar,
        [a.clone(), c / q, e / q],
        [b / q, d / q],
        q,
        z_shifted(p)?,
    ))
}

// Classical templates: integer shifts of (a,c,e; b,d) at unit argument.
// shift arrays are (Δa, Δc, Δe, Δb, Δd).
fn f3_shifted(
    p: &ParamSet,
    policy: &PrecisionPolicy,
    kind: SeriesKind,
    shifts: [f64; 5],
) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let sh = |x: &Scalar, dx: f64| {
        if dx == 0.0 {
            x.clone()
        } else {
            x + &policy.real(dx)
        }
    };
    Ok(f3(
        kind,
        [sh(a, shifts[0]), sh(c, shifts[1]), sh(e, shifts[2])],
        [sh(b, shifts[3]), sh(d, shifts[4])],
        policy,
    ))
}

fn lhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    f3_shifted(p, policy, SeriesKind::ClassicalF, [0.0; 5])
}

fn a_first_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    f3_shifted(p, policy, SeriesKind::ClassicalF, [1.0, 0.0, 0.0, 1.0, 0.0])
}

fn a_second_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    f3_shifted(p, policy, SeriesKind::ClassicalF, [2.0, 1.0, 1.0, 2.0, 1.0])
}

fn a_star_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    f3_shifted(
        p,
        policy,
        SeriesKind::ClassicalFStar,
        [1.0, 0.0, 0.0, 1.0, 0.0],
    )
}

fn b_first_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    f3_shifted(
        p,
        policy,
        SeriesKind::ClassicalF,
        [-1.0, 0.0, 0.0, 0.0, -1.0],
    )
}

fn b_second_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    f3_shifted(p, policy, SeriesKind::ClassicalF, [0.0, 1.0, 1.0, 1.0, 0.0])
}

fn b_star_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    f3_shifted(
        p,
        policy,
        SeriesKind::ClassicalFStar,
        [-1.0, 0.0, 0.0, 0.0, -1.0],
    )
}

fn c_first_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    f3_shifted(p, policy, SeriesKind::ClassicalF, [0.0, 1.0, 1.0, 1.0, 1.0])
}

fn c_second_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    f3_shifted(p, policy, SeriesKind::ClassicalF, [1.0, 2.0, 2.0, 2.0, 2.0])
}

fn c_star_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    f3_shifted(
        p,
        policy,
        SeriesKind::ClassicalFStar,
        [0.0, 1.0, 1.0, 1.0, 1.0],
    )
}

fn d_first_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    f3_shifted(
        p,
        policy,
        SeriesKind::ClassicalF,
        [0.0, -1.0, -1.0, -1.0, -1.0],
    )
}

fn d_second_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    f3_shifted(p, policy, SeriesKind::ClassicalF, [1.0, 0.0, 0.0, 0.0, 0.0])
}

fn d_star_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    f3_shifted(
        p,
        policy,
        SeriesKind::ClassicalFStar,
        [0.0, -1.0, -1.0, -1.0, -1.0],
    )
}

// ---------------------------------------------------------------------
// Coefficient rules (one per catalog symbol)
// ---------------------------------------------------------------------

macro_rules! coeff_rule {
    ($name:ident, $pattern:expr, $side:expr, $field:ident) => {
        fn $name(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
            Ok(pattern_coeffs($pattern, p, $side, policy)?.$field)
        }
    };
}

coeff_rule!(a_script_q, Pattern::A, Side::Q, script);
coeff_rule!(a_blackboard_q, Pattern::A, Side::Q, blackboard);
coeff_rule!(a_fraktur_q, Pattern::A, Side::Q, fraktur);
coeff_rule!(b_script_q, Pattern::B, Side::Q, script);
coeff_rule!(b_blackboard_q, Pattern::B, Side::Q, blackboard);
coeff_rule!(b_fraktur_q, Pattern::B, Side::Q, fraktur);
coeff_rule!(c_script_q, Pattern::C, Side::Q, script);
coeff_rule!(c_blackboard_q, Pattern::C, Side::Q, blackboard);
coeff_rule!(c_fraktur_q, Pattern::C, Side::Q, fraktur);
coeff_rule!(d_script_q, Pattern::D, Side::Q, script);
coeff_rule!(d_blackboard_q, Pattern::D, Side::Q, blackboard);
coeff_rule!(d_fraktur_q, Pattern::D, Side::Q, fraktur);
coeff_rule!(a_script_cl, Pattern::A, Side::Classical, script);
coeff_rule!(a_blackboard_cl, Pattern::A, Side::Classical, blackboard);
coeff_rule!(a_fraktur_cl, Pattern::A, Side::Classical, fraktur);
coeff_rule!(b_script_cl, Pattern::B, Side::Classical, script);
coeff_rule!(b_blackboard_cl, Pattern::B, Side::Classical, blackboard);
coeff_rule!(b_fraktur_cl, Pattern::B, Side::Classical, fraktur);
coeff_rule!(c_script_cl, Pattern::C, Side::Classical, script);
coeff_rule!(c_blackboard_cl, Pattern::C, Side::Classical, blackboard);
coeff_rule!(c_fraktur_cl, Pattern::C, Side::Classical, fraktur);
coeff_rule!(d_script_cl, Pattern::D, Side::Classical, script);
coeff_rule!(d_blackboard_cl, Pattern::D, Side::Classical, blackboard);
coeff_rule!(d_fraktur_cl, Pattern::D, Side::Classical, fraktur);

const FIVE: &[&str] = &["a", "b", "c", "d", "e"];

pub(super) fn entries() -> Vec<Relation> {
    struct Form {
        id: &'static str,
        partner: &'static str,
        anchor: &'static str,
        lhs: super::SpecFn,
        first: (super::SpecFn, &'static str, super::CoeffFn),
        second: (super::SpecFn, &'static str, super::CoeffFn),
        classical: bool,
    }
    let forms = [
        Form {
            id: "pattern-A-eq-a",
            partner: "corl-pattern-A-eq-a",
            anchor: "Theorem 2.1 (Pattern A), first equation (eq-a)",
            lhs: lhs_q,
            first: (a_first_q, "A-script-q", a_script_q as super::CoeffFn),
            second: (a_second_q, "A-blackboard-q", a_blackboard_q),
            classical: false,
        },
        Form {
            id: "pattern-A-eq-aa",
            partner: "corl-pattern-A-eq-aa",
            anchor: "Theorem 2.1 (Pattern A), second equation (eq-aa)",
            lhs: lhs_q,
            first: (a_first_q, "A-script-q", a_script_q),
            second: (a_star_q, "A-fraktur-q", a_fraktur_q),
            classical: false,
        },
        Form {
            id: "pattern-B-eq-b",
            partner: "corl-pattern-B-eq-b",
            anchor: "Theorem 2.2 (Pattern B), first equation (eq-b)",
            lhs: lhs_q,
            first: (b_first_q, "B-script-q", b_script_q),
            second: (b_second_q, "B-blackboard-q", b_blackboard_q),
            classical: false,
        },
        Form {
            id: "pattern-B-eq-bb",
            partner: "corl-pattern-B-eq-bb",
            anchor: "Theorem 2.2 (Pattern B), second equation (eq-bb)",
            lhs: lhs_q,
            first: (b_first_q, "B-script-q", b_script_q),
            second: (b_star_q, "B-fraktur-q", b_fraktur_q),
            classical: false,
        },
        Form {
            id: "pattern-C-eq-c",
            partner: "corl-pattern-C-eq-c",
            anchor: "Theorem 2.3 (Pattern C), first equation (eq-c)",
            lhs: lhs_q,
            first: (c_first_q, "C-script-q", c_script_q),
            second: (c_second_q, "C-blackboard-q", c_blackboard_q),
            classical: false,
        },
        Form {
            id: "pattern-C-eq-cc",
            partner: "corl-pattern-C-eq-cc",
            anchor: "Theorem 2.3 (Pattern C), second equation (eq-cc)",
            lhs: lhs_q,
            first: (c_first_q, "C-script-q", c_script_q),
            second: (c_star_q, "C-fraktur-q", c_fraktur_q),
            classical: false,
        },
        Form {
            id: "pattern-D-eq-d",
            partner: "corl-pattern-D-eq-d",
            anchor: "Theorem 2.4 (Pattern D), first equation (eq-d)",
            lhs: lhs_q,
            first: (d_first_q, "D-script-q", d_script_q),
            second: (d_second_q, "D-blackboard-q", d_blackboard_q),
            classical: false,
        },
        Form {
            id: "pattern-D-eq-dd",
            partner: "corl-pattern-D-eq-dd",
            anchor: "Theorem 2.4 (Pattern D), second equation (eq-dd)",
            lhs: lhs_q,
            first: (d_first_q, "D-script-q", d_script_q),
            second: (d_star_q, "D-fraktur-q", d_fraktur_q),
            classical: false,
        },
        Form {
            id: "corl-pattern-A-eq-a",
            partner: "pattern-A-eq-a",
            anchor: "Corollary to Theorem 2.1 (Chu-Wang Theorem 1), first equation",
            lhs: lhs_cl,
            first: (a_first_cl, "A-script-cl", a_script_cl),
            second: (a_second_cl, "A-blackboard-cl", a_blackboard_cl),
            classical: true,
        },
        Form {
            id: "corl-pattern-A-eq-aa",
            partner: "pattern-A-eq-aa",
            anchor: "Corollary to Theorem 2.1 (Chu-Wang Theorem 1), second equation",
            lhs: lhs_cl,
            first: (a_first_cl, "A-script-cl", a_script_cl),
            second: (a_star_cl, "A-fraktur-cl", a_fraktur_cl),
            classical: true,
        },
        Form {
            id: "corl-pattern-B-eq-b",
            partner: "pattern-B-eq-b",
            anchor: "Corollary to Theorem 2.2 (Chu-Wang Theorem 2), first equation",
            lhs: lhs_cl,
            first: (b_first_cl, "B-script-cl", b_script_cl),
            second: (b_second_cl, "B-blackboard-cl", b_blackboard_cl),
            classical: true,
        },
        Form {
            id: "corl-pattern-B-eq-bb",
            partner: "pattern-B-eq-bb",
            anchor: "Corollary to Theorem 2.2 (Chu-Wang Theorem 2), second equation",
            lhs: lhs_cl,
            first: (b_first_cl, "B-script-cl", b_script_cl),
            second: (b_star_cl, "B-fraktur-cl", b_fraktur_cl),
            classical: true,
        },
        Form {
            id: "corl-pattern-C-eq-c",
            partner: "pattern-C-eq-c",
            anchor: "Corollary to Theorem 2.3 (Chu-Wang Theorem 3), first equation",
            lhs: lhs_cl,
            first: (c_first_cl, "C-script-cl", c_script_cl),
            second: (c_second_cl, "C-blackboard-cl", c_blackboard_cl),
            classical: true,
        },
        Form {
            id: "corl-pattern-C-eq-cc",
            partner: "pattern-C-eq-cc",
            anchor: "Corollary to Theorem 2.3 (Chu-Wang Theorem 3), second equation",
            lhs: lhs_cl,
            first: (c_first_cl, "C-script-cl", c_script_cl),
            second: (c_star_cl, "C-fraktur-cl", c_fraktur_cl),
            classical: true,
        },
        Form {
            id: "corl-pattern-D-eq-d",
            partner: "pattern-D-eq-d",
            anchor: "Corollary to Theorem 2.4 (Chu-Wang Theorem 4), first equation",
            lhs: lhs_cl,
            first: (d_first_cl, "D-script-cl", d_script_cl),
            second: (d_second_cl, "D-blackboard-cl", d_blackboard_cl),
            classical: true,
        },
        Form {
            id: "corl-pattern-D-eq-dd",
            partner: "pattern-D-eq-dd",
            anchor: "Corollary to Theorem 2.4 (Chu-Wang Theorem 4), second equation",
            lhs: lhs_cl,
            first: (d_first_cl, "D-script-cl", d_script_cl),
            second: (d_star_cl, "D-fraktur-cl", d_fraktur_cl),
            classical: true,
        },
    ];
    forms
        .into_iter()
        .map(|f| Relation {
            id: f.id,
            family: if f.classical {
                Family::CorollaryClassical
            } else {
                Family::Pattern
            },
            free_params: FIVE,
            extra_constraints: Vec::new(),
            lhs: f.lhs,
            rhs: vec![
                RelationTerm::series(Factor::rational(f.first.1, f.first.2), f.first.0),
                RelationTerm::series(Factor::rational(f.second.1, f.second.2), f.second.0),
            ],
            paper_anchor: f.anchor,
            notes: None,
            derivation: None,
            classical_partner: Some(f.partner),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::instantiate;

    fn pol() -> PrecisionPolicy {
        PrecisionPolicy::standard()
    }

    /// A hand-picked admissible complex point: |bd/(qace)| ≈ 0.21.
    fn q_point(p: &PrecisionPolicy) -> ParamSet {
        ParamSet::new(p.real(0.5))
            .with("a", p.scalar(0.8, 0.1))
            .with("b", p.scalar(0.2, 0.1))
            .with("c", p.scalar(0.7, -0.2))
            .with("d", p.scalar(0.15, -0.1))
            .with("e", p.scalar(0.6, 0.25))
    }

    /// A real classical point with every component margin comfortable.
    fn cl_point(p: &PrecisionPolicy) -> ParamSet {
        ParamSet::new(p.zero())
            .with("a", p.real(0.3))
            .with("b", p.real(2.8))
            .with("c", p.real(0.45))
            .with("d", p.real(3.1))
            .with("e", p.real(0.6))
    }

    #[test]
    fn all_q_forms_hold_at_an_admissible_point() {
        let p = pol();
        let pt = q_point(&p);
        for id in [
            "pattern-A-eq-a",
            "pattern-A-eq-aa",
            "pattern-B-eq-b",
            "pattern-B-eq-bb",
            "pattern-C-eq-c",
            "pattern-C-eq-cc",
            "pattern-D-eq-d",
            "pattern-D-eq-dd",
        ] {
            let inst = instantiate(id, &pt, &p).unwrap_or_else(|e| panic!("{id}: {e}"));
            assert!(
                inst.residual < 5.0 * p.tol,
                "{id}: residual {:.3e}",
                inst.residual
            );
        }
    }

    #[test]
    fn all_classical_forms_hold_at_a_real_point() {
        let p = pol();
        let pt = cl_point(&p);
        for id in [
            "corl-pattern-A-eq-a",
            "corl-pattern-A-eq-aa",
            "corl-pattern-B-eq-b",
            "corl-pattern-B-eq-bb",
            "corl-pattern-C-eq-c",
            "corl-pattern-C-eq-cc",
            "corl-pattern-D-eq-d",
            "corl-pattern-D-eq-dd",
        ] {
            let inst = instantiate(id, &pt, &p).unwrap_or_else(|e| panic!("{id}: {e}"));
            assert!(inst.residual < 1e-8, "{id}: residual {:.3e}", inst.residual);
        }
    }

    #[test]
    fn blackboard_and_fraktur_vanish_when_argument_is_one() {
        // bd = qace exactly kills the (1 − bd/qace) factor in both.
        let p = pol();
        let q = p.real(0.5);
        let (a, c, e, b) = (p.real(0.8), p.real(0.7), p.real(0.6), p.real(0.3));
        let d = &(&q * &(&a * &(&c * &e))) / &b; // d = qace/b
        let pt = ParamSet::new(q)
            .with("a", a)
            .with("b", b)
            .with("c", c)
            .with("d", d)
            .with("e", e);
        let cs = pattern_coeffs(Pattern::A, &pt, Side::Q, &p).unwrap();
        assert!(cs.blackboard.abs_f64() < 1e-25);
        assert!(cs.fraktur.abs_f64() < 1e-25);
    }

    #[test]
    fn script_is_one_when_c_is_one() {
        let p = pol();
        let pt = ParamSet::new(p.real(0.5))
            .with("a", p.real(0.8))
            .with("b", p.real(0.2))
            .with("c", p.one())
            .with("d", p.real(0.15))
            .with("e", p.real(0.6));
        let cs = pattern_coeffs(Pattern::A, &pt, Side::Q, &p).unwrap();
        assert!(cs.script.dist(&p.one()) < 1e-25);
    }

    #[test]
    fn two_forms_agree() {
        // eq and star forms share the LHS, so their RHS sums must agree.
        let p = pol();
        let pt = q_point(&p);
        for (plain, star) in [
            ("pattern-A-eq-a", "pattern-A-eq-aa"),
            ("pattern-B-eq-b", "pattern-B-eq-bb"),
            ("pattern-C-eq-c", "pattern-C-eq-cc"),
            ("pattern-D-eq-d", "pattern-D-eq-dd"),
        ] {
            let lhs = instantiate(plain, &pt, &p).unwrap();
            let rhs = instantiate(star, &pt, &p).unwrap();
            let sum = |inst: &crate::relations::InstantiatedRelation| {
                let mut s = Scalar::zero(inst.lhs_value.value.prec());
                for v in &inst.rhs_term_values {
                    s += v;
                }
                s
            };
            let gap = sum(&lhs).dist(&sum(&rhs));
            assert!(gap < 5.0 * p.tol, "{plain} vs {star}: {gap:.3e}");
        }
    }
}
