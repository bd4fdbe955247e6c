//! Two-term contiguous relations: a ₃φ₂ whose argument and one lower
//! parameter are pinned to rational expressions of the remaining parameters
//! equals a single rational coefficient times one shifted ₃φ₂. Nine
//! four-parameter relations, three three-parameter reductions obtained by
//! pinning one more parameter, and the classical counterpart of each.
//!
//! Every builder takes the free parameters from the [`ParamSet`] and
//! computes the pinned parameter and argument on the fly, so the two sides
//! always see identical pinned values.

use crate::error::Result;
use crate::scalar::{PrecisionPolicy, Scalar};
use crate::series::{SeriesKind, SeriesSpec};

use super::{f3, phi3, Derivation, Factor, Family, ParamSet, Relation, RelationTerm};

const ABCE: &[&str] = &["a", "b", "c", "e"];
const ACDE: &[&str] = &["a", "c", "d", "e"];
const GREEK: &[&str] = &["alpha", "beta", "gamma"];

// ---------------------------------------------------------------------
// thm-3.1 / corl-thm-3.1 — shift a→qa, c→c/q, b→qb, d→d/q with the
// second lower parameter pinned to d = qabe(q−c)/(qab+ce−bc−ace).
// ---------------------------------------------------------------------

/// Pinned lower parameter and argument shared by both sides.
fn t31_pinned_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<(Scalar, Scalar)> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let qc = q - c;
    let w = q * a * b + c * e - b * c - a * c * e;
    let d = q * a * b * e * &qc / &w;
    let z = q * b * b * &qc / &(c * &w);
    Ok((d, z))
}

fn t31_lhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let (d, z) = t31_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d],
        p.q(),
        z,
    ))
}

fn t31_rhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let (d, z) = t31_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [q * a, c / q, e.clone()],
        [q * b, d / q],
        q,
        z,
    ))
}

fn t31_coeff_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (&one - &(q * b / c))
        * (q * a * b + a * b * c * e + c * e - b * c - q * a * b * e - a * c * e);
    let den = (&one - b) * (q * a * b + b * c * e + c * e - b * c - q * b * e - a * c * e);
    Ok(num / den)
}

fn t31_pinned_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    Ok(&one + e - &(a * &(b - e) / &(&one - c)))
}

fn t31_lhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let d = t31_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d],
        policy,
    ))
}

fn t31_rhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    let d = t31_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a + &one, c - &one, e.clone()],
        [b + &one, d - &one],
        policy,
    ))
}

fn t31_coeff_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    let num = (&one + b - c) * (a * b + c * e - a * e - e);
    let den = b * (a + a * b + c * e - a * c - a * e - e);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// prop-3.1 / corl-prop-3.1 — thm-3.1 with its first lower parameter
// pinned one q-step above the first upper parameter.
// ---------------------------------------------------------------------

fn p31_pinned_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<(Scalar, Scalar)> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let q = p.q();
    let qb = q - be;
    let w = q * q * al * al + be * ga - q * al * be - al * be * ga;
    let d = q * q * al * al * ga * &qb / &w;
    let z = q * q * q * al * al * &qb / &(be * &w);
    Ok((d, z))
}

fn p31_lhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let q = p.q();
    let (d, z) = p31_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [al.clone(), be.clone(), ga.clone()],
        [q * al, d],
        q,
        z,
    ))
}

fn p31_rhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let q = p.q();
    let (d, z) = p31_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [q * al, be / q, ga.clone()],
        [q * q * al, d / q],
        q,
        z,
    ))
}

fn p31_coeff_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let q = p.q();
    let one = policy.one();
    let q2aa = q * q * al * al;
    let num = (&one - &(q * q * al / be))
        * (&q2aa + q * al * al * be * ga + be * ga - &q2aa * ga - q * al * be - al * be * ga);
    let den = (&one - &(q * al))
        * (&q2aa + q * al * be * ga + be * ga - q * q * al * ga - q * al * be - al * be * ga);
    Ok(num / den)
}

fn p31_pinned_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let one = policy.one();
    Ok(ga + &(al * &(al - ga + &one) / &(be - &one)) + &one)
}

fn p31_lhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let one = policy.one();
    let d = p31_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [al.clone(), be.clone(), ga.clone()],
        [al + &one, d],
        policy,
    ))
}

fn p31_rhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let one = policy.one();
    let d = p31_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [al + &one, be - &one, ga.clone()],
        [al + &policy.real(2.0), d - &one],
        policy,
    ))
}

fn p31_coeff_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let one = policy.one();
    let num = (policy.real(2.0) + al - be) * (al + al * al + be * ga - al * ga - ga);
    let den = (&one + al) * (policy.real(2.0) * al + al * al + be * ga - al * be - al * ga - ga);
    Ok(num / den)
}

fn p31_parent(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<ParamSet> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let q = p.q();
    Ok(ParamSet::new(q.clone())
        .with("a", al.clone())
        .with("c", be.clone())
        .with("e", ga.clone())
        .with("b", q * al))
}

fn p31_parent_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<ParamSet> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    Ok(ParamSet::new(policy.zero())
        .with("a", al.clone())
        .with("c", be.clone())
        .with("e", ga.clone())
        .with("b", al + &policy.one()))
}

// ---------------------------------------------------------------------
// thm-3.2 / corl-thm-3.2 — double step a→q²a, b→q²b with the second
// lower parameter pinned and held fixed on both sides.
// ---------------------------------------------------------------------

fn t32_pinned_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<(Scalar, Scalar)> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let one = policy.one();
    let onemb = &one - b;
    let w = q * q * a * b + q * c * e + c * e - q * a * c * e - q * b * c - q * b * e;
    let d = q * q * a * c * e * &onemb / &w;
    let z = q * q * b * &onemb / &w;
    Ok((d, z))
}

fn t32_lhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let (d, z) = t32_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d],
        p.q(),
        z,
    ))
}

fn t32_rhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let (d, z) = t32_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [q * q * a, c.clone(), e.clone()],
        [q * q * b, d],
        q,
        z,
    ))
}

fn t32_coeff_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (&one - &(q * a)) * (c - &(q * b)) * (e - &(q * b));
    let den = (&one - &(q * b))
        * (q * q * a * b + q * b * c * e + c * e - q * a * c * e - q * b * c - q * b * e);
    Ok(num / den)
}

fn t32_pinned_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    let two = policy.real(2.0);
    Ok(&two + &(&two * a) + &(((a + &one) * (&one - c - e) + c * e) / b))
}

fn t32_lhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let d = t32_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d],
        policy,
    ))
}

fn t32_rhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let two = policy.real(2.0);
    let d = t32_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a + &two, c.clone(), e.clone()],
        [b + &two, d],
        policy,
    ))
}

fn t32_coeff_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    let num = (&one + a) * (&one + b - c) * (&one + b - e);
    let den = (&one + b) * (&one + a + b + a * b + c * e - c - e - a * c - a * e);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// prop-3.2 / corl-prop-3.2 — thm-3.2 with its first lower parameter
// pinned one q-step above the first upper parameter.
// ---------------------------------------------------------------------

fn p32_pinned_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<(Scalar, Scalar)> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let q = p.q();
    let one = policy.one();
    let onemqa = &one - &(q * al);
    let w = q * q * q * al * al + q * be * ga + be * ga
        - q * al * be * ga
        - q * q * al * be
        - q * q * al * ga;
    let d = q * q * al * be * ga * &onemqa / &w;
    let z = q * q * q * al * &onemqa / &w;
    Ok((d, z))
}

fn p32_lhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let q = p.q();
    let (d, z) = p32_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [al.clone(), be.clone(), ga.clone()],
        [q * al, d],
        q,
        z,
    ))
}

fn p32_rhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let q = p.q();
    let (d, z) = p32_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [q * q * al, be.clone(), ga.clone()],
        [q * q * q * al, d],
        q,
        z,
    ))
}

fn p32_coeff_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let q = p.q();
    let one = policy.one();
    let num = (&one - &(q * al)) * (be - &(q * q * al)) * (ga - &(q * q * al));
    let den = (&one - &(q * q * al))
        * (q * q * q * al * al + q * q * al * be * ga + be * ga
            - q * al * be * ga
            - q * q * al * be
            - q * q * al * ga);
    Ok(num / den)
}

fn p32_pinned_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let one = policy.one();
    Ok(policy.real(3.0) + policy.real(2.0) * al - be - ga + &(be * ga / &(al + &one)))
}

fn p32_lhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let one = policy.one();
    let d = p32_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [al.clone(), be.clone(), ga.clone()],
        [al + &one, d],
        policy,
    ))
}

fn p32_rhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let two = policy.real(2.0);
    let three = policy.real(3.0);
    let d = p32_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [al + &two, be.clone(), ga.clone()],
        [al + &three, d],
        policy,
    ))
}

fn p32_coeff_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let one = policy.one();
    let two = policy.real(2.0);
    let num = (&one + al) * (al - be + &two) * (al - ga + &two);
    let den = (&two + al)
        * (&two + policy.real(3.0) * al + al * al + be * ga - al * be - al * ga - be - ga);
    Ok(num / den)
}

fn p32_parent(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<ParamSet> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let q = p.q();
    Ok(ParamSet::new(q.clone())
        .with("a", al.clone())
        .with("c", be.clone())
        .with("e", ga.clone())
        .with("b", q * al))
}

fn p32_parent_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<ParamSet> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    Ok(ParamSet::new(policy.zero())
        .with("a", al.clone())
        .with("c", be.clone())
        .with("e", ga.clone())
        .with("b", al + &policy.one()))
}

// ---------------------------------------------------------------------
// thm-3.3 / corl-thm-3.3 — shift a→q²a, b→qb, second lower parameter
// pinned to d = ce(qa−b)/(qab+ce−bc−be) and stepped to qd on the right.
// ---------------------------------------------------------------------

fn t33_pinned_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<(Scalar, Scalar)> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let qab = q * a - b;
    let w = q * a * b + c * e - b * c - b * e;
    let d = c * e * &qab / &w;
    let z = b * &qab / &(a * &w);
    Ok((d, z))
}

fn t33_lhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let (d, z) = t33_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d],
        p.q(),
        z,
    ))
}

fn t33_rhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let (d, z) = t33_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [q * q * a, c.clone(), e.clone()],
        [q * b, q * &d],
        q,
        z,
    ))
}

fn t33_coeff_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (&one - &(q * a)) * (b - c) * (b - e);
    let den = (&one - b) * (q * a * b + b * c * e + c * e - b * c - b * e - q * a * c * e);
    Ok(num / den)
}

fn t33_pinned_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    Ok(&one + a - &((&one + a - c) * (&one + a - e) / (&one + a - b)))
}

fn t33_lhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let d = t33_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d],
        policy,
    ))
}

fn t33_rhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    let d = t33_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a + &policy.real(2.0), c.clone(), e.clone()],
        [b + &one, d + &one],
        policy,
    ))
}

fn t33_coeff_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    let num = (&one + a) * (b - c) * (b - e);
    let den = b * (a * b + c * e + b - c - e - a * c - a * e);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-3.4 / corl-thm-3.4 — shift a→qa, c→qc, b→q²b with both remaining
// parameters held; the whole multiplier collapses to (qb−e)/(qbe−e).
// ---------------------------------------------------------------------

fn t34_pinned_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<(Scalar, Scalar)> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let one = policy.one();
    let w = a + c - &(a * c) - b;
    let d = q * a * c * &(&one - b) / &w;
    let z = q * b * (&one - b) / (&w * e);
    Ok((d, z))
}

fn t34_lhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let (d, z) = t34_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d],
        p.q(),
        z,
    ))
}

fn t34_rhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let (d, z) = t34_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [q * a, q * c, e.clone()],
        [q * q * b, d],
        q,
        z,
    ))
}

fn t34_coeff_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [_, b, _, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    Ok((q * b - e) / &(q * b * e - e))
}

fn t34_pinned_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, _] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    Ok(&one + a + c - &(a * c / b))
}

fn t34_lhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let d = t34_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d],
        policy,
    ))
}

fn t34_rhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    let d = t34_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a + &one, c + &one, e.clone()],
        [b + &policy.real(2.0), d],
        policy,
    ))
}

fn t34_coeff_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [_, b, _, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    Ok((&one + b - e) / (&one + b))
}

// ---------------------------------------------------------------------
// prop-3.3 / corl-prop-3.3 — thm-3.4 with the third upper parameter tied
// to βγ/α and the first lower parameter pinned accordingly.
// ---------------------------------------------------------------------

fn p33_pieces_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<(Scalar, Scalar, Scalar)> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let q = p.q();
    let one = policy.one();
    let upper = be * ga / al;
    let w = be + ga - al - be * ga;
    let b = &w / &(&one - al);
    let z = q * &w / ((&one - al) * be * ga);
    Ok((upper, b, z))
}

fn p33_lhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [_, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let q = p.q();
    let (upper, b, z) = p33_pieces_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [upper.clone(), be.clone(), ga.clone()],
        [q * &upper, b],
        q,
        z,
    ))
}

fn p33_rhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [_, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let q = p.q();
    let (upper, b, z) = p33_pieces_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [upper.clone(), q * be, q * ga],
        [q * &upper, q * q * &b],
        q,
        z,
    ))
}

// Denominator prefactor is βγ, not α: that is what direct specialization
// of the parent relation requires, and what the numerics confirm.
fn p33_coeff_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let q = p.q();
    let one = policy.one();
    let num = al * &(q * al + q * be * ga - be * ga - q * be - q * ga) + be * ga;
    let den = be * ga * &(&one + q * al + q * be * ga - al - q * be - q * ga);
    Ok(num / den)
}

fn p33_lhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let one = policy.one();
    let upper = be + ga - al;
    Ok(f3(
        SeriesKind::ClassicalF,
        [upper.clone(), be.clone(), ga.clone()],
        [upper + &one, be * ga / al],
        policy,
    ))
}

fn p33_rhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let one = policy.one();
    let upper = be + ga - al;
    Ok(f3(
        SeriesKind::ClassicalF,
        [upper.clone(), be + &one, ga + &one],
        [upper + &one, be * ga / al + &policy.real(2.0)],
        policy,
    ))
}

fn p33_coeff_cl(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let num = al + al * al + be * ga - al * be - al * ga;
    let den = al + be * ga;
    Ok(num / den)
}

fn p33_parent(p: &ParamSet, policy: &PrecisionPolicy) -> Result<ParamSet> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    let one = policy.one();
    Ok(ParamSet::new(p.q().clone())
        .with("a", be.clone())
        .with("c", ga.clone())
        .with("e", be * ga / al)
        .with("b", (be + ga - al - be * ga) / (&one - al)))
}

// Classically the roles swap: the reduced entry's second lower parameter
// βγ/α is the parent's first lower parameter, and β+γ−α its third upper.
fn p33_parent_cl(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<ParamSet> {
    let [al, be, ga] = p.take(["alpha", "beta", "gamma"])?;
    Ok(ParamSet::new(Scalar::zero(al.prec()))
        .with("a", be.clone())
        .with("c", ga.clone())
        .with("e", be + ga - al)
        .with("b", be * ga / al))
}

// ---------------------------------------------------------------------
// thm-3.5 / corl-thm-3.5 — downward shift c→c/q, e→e/q, d→d/q against
// a→qa, with the second lower parameter pinned and held.
// ---------------------------------------------------------------------

fn t35_pinned_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<(Scalar, Scalar)> {
    let [a, c, d, e] = p.take(["a", "c", "d", "e"])?;
    let q = p.q();
    let am1 = a - &policy.one();
    let v = q * q * a + c * e - q * c - q * e;
    let b = q * c * e * &am1 / &v;
    let z = q * d * &am1 / &(a * &v);
    Ok((b, z))
}

fn t35_lhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, c, d, e] = p.take(["a", "c", "d", "e"])?;
    let (b, z) = t35_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [a.clone(), c.clone(), e.clone()],
        [d.clone(), b],
        p.q(),
        z,
    ))
}

fn t35_rhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, c, d, e] = p.take(["a", "c", "d", "e"])?;
    let q = p.q();
    let (b, z) = t35_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [q * a, c / q, e / q],
        [d / q, b],
        q,
        z,
    ))
}

fn t35_coeff_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, _, d, _] = p.take(["a", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    Ok((&one - &(d / q)) / (&one - &(d / &(q * a))))
}

fn t35_pinned_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, c, _, e] = p.take(["a", "c", "d", "e"])?;
    let one = policy.one();
    Ok(c + e - &one - &((&one - c) * (&one - e) / a))
}

fn t35_lhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, c, d, e] = p.take(["a", "c", "d", "e"])?;
    let b = t35_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a.clone(), c.clone(), e.clone()],
        [d.clone(), b],
        policy,
    ))
}

fn t35_rhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, c, d, e] = p.take(["a", "c", "d", "e"])?;
    let one = policy.one();
    let b = t35_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a + &one, c - &one, e - &one],
        [d - &one, b],
        policy,
    ))
}

fn t35_coeff_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, _, d, _] = p.take(["a", "c", "d", "e"])?;
    let one = policy.one();
    Ok((&one - d) / (&one + a - d))
}

// ---------------------------------------------------------------------
// thm-3.6 / corl-thm-3.6 — shift a→q²a, e→qe, b→q²b with the second
// lower parameter pinned and stepped to qd on the right.
// ---------------------------------------------------------------------

fn t36_pinned_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<(Scalar, Scalar)> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let bm1 = b - &policy.one();
    let u = q * a * b * e + b * c - q * a * b - c * e;
    let d = q * a * c * e * &bm1 / &u;
    let z = q * b * &bm1 / &u;
    Ok((d, z))
}

fn t36_lhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let (d, z) = t36_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d],
        p.q(),
        z,
    ))
}

fn t36_rhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let (d, z) = t36_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [q * q * a, c.clone(), q * e],
        [q * q * b, q * &d],
        q,
        z,
    ))
}

fn t36_coeff_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (&one - &(q * a)) * (b - e) * (c - &(q * b));
    let den = (&one - &(q * b))
        * (q * a * b * e + q * a * c * e + b * c - q * a * b * c * e - q * a * b - c * e);
    Ok(num / den)
}

fn t36_pinned_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    Ok(&one + a + &(e * &(c - a - &one) / b))
}

fn t36_lhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let d = t36_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d],
        policy,
    ))
}

fn t36_rhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    let two = policy.real(2.0);
    let d = t36_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a + &two, c.clone(), e + &one],
        [b + &two, d + &one],
        policy,
    ))
}

fn t36_coeff_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    let num = (&one + a) * (b - e) * (&one + b - c);
    let den = (&one + b) * (a * b + c * e + b - a * e - e);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-3.7 / corl-thm-3.7 — deep downward shift a→a/q², e→e/q, b→b/q,
// d→d/q² with the second lower parameter pinned.
// ---------------------------------------------------------------------

fn t37_pinned_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<(Scalar, Scalar)> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let amb = a - b;
    let t = q * a * b + q * a * c * e - q * q * b * c - a * b * e;
    let d = q * q * q * c * e * &amb / &t;
    let z = q * q * q * b * &amb / &(a * &t);
    Ok((d, z))
}

fn t37_lhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let (d, z) = t37_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d],
        p.q(),
        z,
    ))
}

fn t37_rhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let (d, z) = t37_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [a / &(q * q), c.clone(), e / q],
        [b / q, d / &(q * q)],
        q,
        z,
    ))
}

fn t37_coeff_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let q2 = q * q;
    let num = (a - &(q * c))
        * (q - b)
        * (q * a * b + q * a * c * e + &q2 * b * c * e - &q2 * a * c * e - &q2 * b * c - a * b * e);
    let den = (q - a)
        * (b - &(q * c))
        * (q * a * b + q * a * c * e + &q2 * b * e - &q2 * a * e - &q2 * b * c - a * b * e);
    Ok(num / den)
}

fn t37_pinned_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    Ok(policy.real(2.0) + ((&one - e) * (&one + c - a) / (a - b)))
}

fn t37_lhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let d = t37_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d],
        policy,
    ))
}

fn t37_rhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    let two = policy.real(2.0);
    let d = t37_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a - &two, c.clone(), e - &one],
        [b - &one, d - &two],
        policy,
    ))
}

fn t37_coeff_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    let num = (&one - b) * (&one + c - a) * (&one + c + a * e - c * e - b - e);
    let den = (&one - a) * (&one + c - b) * (&one + c + a * e + b * c - a * c - c * e - b - e);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-3.8 / corl-thm-3.8 — double step c→q²c, e→q²e, b→q²b with the
// second lower parameter pinned and stepped to q²d on the right.
// ---------------------------------------------------------------------

fn t38_pinned_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<(Scalar, Scalar)> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let onemb = policy.one() - b;
    let s = q * a * c * e + q * b * c + q * b * e - q * b * c * e - q * q * b * c * e - a * b;
    let d = q * a * c * e * &onemb / &s;
    let z = q * b * &onemb / &s;
    Ok((d, z))
}

fn t38_lhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let (d, z) = t38_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d],
        p.q(),
        z,
    ))
}

fn t38_rhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let q2 = q * q;
    let (d, z) = t38_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [a.clone(), &q2 * c, &q2 * e],
        [&q2 * b, &q2 * &d],
        q,
        z,
    ))
}

fn t38_coeff_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let one = policy.one();
    let q2 = q * q;
    let num = (q * b - a)
        * (&one - &(q * c))
        * (&one - &(q * e))
        * (q * a * c * e + q * b * c + q * b * e - q * b * c * e - &q2 * c * e - a * b);
    let den = (&one - &(q * b))
        * (q * a * c * e + q * c + q * e - q * c * e - &q2 * c * e - a)
        * (&q2 * a * b * c * e + q * a * c * e + q * b * c + q * b * e
            - &q2 * a * c * e
            - &q2 * b * c * e
            - q * b * c * e
            - a * b);
    Ok(num / den)
}

fn t38_pinned_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    Ok(((a - &one) * (c + e + &one) - c * e) / b)
}

fn t38_lhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let d = t38_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d],
        policy,
    ))
}

fn t38_rhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let two = policy.real(2.0);
    let d = t38_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a.clone(), c + &two, e + &two],
        [b + &two, d + &two],
        policy,
    ))
}

fn t38_coeff_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    let num = (&one + c) * (&one + e) * (a - b - &one) * ((c + e - b + &one) * (a - &one) - c * e);
    let den = (b + &one)
        * ((a - &one) * (c + e + &one) - c * e)
        * (b - &(c * e) + &((a - &one) * (c + e + &one)));
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-3.9 / corl-thm-3.9 — shift a→qa, c→qc, e→q²e, b→q²b with the
// second lower parameter pinned and stepped to q²d on the right.
// ---------------------------------------------------------------------

fn t39_pinned_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<(Scalar, Scalar)> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let bm1 = b - &policy.one();
    let r = a * b + b * c - a * c - b;
    let d = a * c * &bm1 / &r;
    let z = b * &bm1 / &(&r * e);
    Ok((d, z))
}

fn t39_lhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let (d, z) = t39_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d],
        p.q(),
        z,
    ))
}

fn t39_rhs_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let q2 = q * q;
    let (d, z) = t39_pinned_q(p, policy)?;
    Ok(phi3(
        SeriesKind::QPhi,
        [q * a, q * c, &q2 * e],
        [&q2 * b, &q2 * &d],
        q,
        z,
    ))
}

fn t39_coeff_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (a - b) * (b - c) * (&one - &(q * e));
    let den = e * &((&one - &(q * b)) * (a * b + b * c + q * a * c - q * a * b * c - a * c - b));
    Ok(num / den)
}

fn t39_pinned_cl(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, _] = p.take(["a", "b", "c", "e"])?;
    Ok(a * c / b)
}

fn t39_lhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let d = t39_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d],
        policy,
    ))
}

fn t39_rhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    let two = policy.real(2.0);
    let d = t39_pinned_cl(p, policy)?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a + &one, c + &one, e + &two],
        [b + &two, d + &two],
        policy,
    ))
}

fn t39_coeff_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, e] = p.take(["a", "b", "c", "e"])?;
    let one = policy.one();
    let num = (a - b) * (&one + e) * (c - b);
    let den = (&one + b) * (b + a * c);
    Ok(num / den)
}

/// All two-term entries: the nine four-parameter relations, the three
/// reductions, and the twelve classical counterparts.
pub(super) fn entries() -> Vec<Relation> {
    struct Form {
        id: &'static str,
        family: Family,
        free: &'static [&'static str],
        lhs: super::SpecFn,
        rhs: super::SpecFn,
        rule: &'static str,
        coeff: super::CoeffFn,
        anchor: &'static str,
        derivation: Option<Derivation>,
        partner: &'static str,
    }
    let forms = vec![
        Form {
            id: "thm-3.1",
            family: Family::TwoTerm,
            free: ABCE,
            lhs: t31_lhs_q,
            rhs: t31_rhs_q,
            rule: "thm-3.1-q",
            coeff: t31_coeff_q,
            anchor: "Theorem 3.1",
            derivation: None,
            partner: "corl-thm-3.1",
        },
        Form {
            id: "corl-thm-3.1",
            family: Family::CorollaryClassical,
            free: ABCE,
            lhs: t31_lhs_cl,
            rhs: t31_rhs_cl,
            rule: "thm-3.1-cl",
            coeff: t31_coeff_cl,
            anchor: "Corollary to Theorem 3.1 (Chu-Wang Theorem 5)",
            derivation: None,
            partner: "thm-3.1",
        },
        Form {
            id: "prop-3.1",
            family: Family::Proposition,
            free: GREEK,
            lhs: p31_lhs_q,
            rhs: p31_rhs_q,
            rule: "prop-3.1-q",
            coeff: p31_coeff_q,
            anchor: "Proposition 3.1",
            derivation: Some(Derivation {
                parent_id: "thm-3.1",
                substitute: p31_parent,
            }),
            partner: "corl-prop-3.1",
        },
        Form {
            id: "corl-prop-3.1",
            family: Family::CorollaryClassical,
            free: GREEK,
            lhs: p31_lhs_cl,
            rhs: p31_rhs_cl,
            rule: "prop-3.1-cl",
            coeff: p31_coeff_cl,
            anchor:
                "Corollary to Proposition 3.1 (Krattenthaler Theorem 2; Chu-Wang Proposition 6)",
            derivation: Some(Derivation {
                parent_id: "corl-thm-3.1",
                substitute: p31_parent_cl,
            }),
            partner: "prop-3.1",
        },
        Form {
            id: "thm-3.2",
            family: Family::TwoTerm,
            free: ABCE,
            lhs: t32_lhs_q,
            rhs: t32_rhs_q,
            rule: "thm-3.2-q",
            coeff: t32_coeff_q,
            anchor: "Theorem 3.2",
            derivation: None,
            partner: "corl-thm-3.2",
        },
        Form {
            id: "corl-thm-3.2",
            family: Family::CorollaryClassical,
            free: ABCE,
            lhs: t32_lhs_cl,
            rhs: t32_rhs_cl,
            rule: "thm-3.2-cl",
            coeff: t32_coeff_cl,
            anchor: "Corollary to Theorem 3.2 (Chu-Wang Theorem 7)",
            derivation: None,
            partner: "thm-3.2",
        },
        Form {
            id: "prop-3.2",
            family: Family::Proposition,
            free: GREEK,
            lhs: p32_lhs_q,
            rhs: p32_rhs_q,
            rule: "prop-3.2-q",
            coeff: p32_coeff_q,
            anchor: "Proposition 3.2",
            derivation: Some(Derivation {
                parent_id: "thm-3.2",
                substitute: p32_parent,
            }),
            partner: "corl-prop-3.2",
        },
        Form {
            id: "corl-prop-3.2",
            family: Family::CorollaryClassical,
            free: GREEK,
            lhs: p32_lhs_cl,
            rhs: p32_rhs_cl,
            rule: "prop-3.2-cl",
            coeff: p32_coeff_cl,
            anchor:
                "Corollary to Proposition 3.2 (Krattenthaler Theorem 10; Chu-Wang Proposition 8)",
            derivation: Some(Derivation {
                parent_id: "corl-thm-3.2",
                substitute: p32_parent_cl,
            }),
            partner: "prop-3.2",
        },
        Form {
            id: "thm-3.3",
            family: Family::TwoTerm,
            free: ABCE,
            lhs: t33_lhs_q,
            rhs: t33_rhs_q,
            rule: "thm-3.3-q",
            coeff: t33_coeff_q,
            anchor: "Theorem 3.3",
            derivation: None,
            partner: "corl-thm-3.3",
        },
        Form {
            id: "corl-thm-3.3",
            family: Family::CorollaryClassical,
            free: ABCE,
            lhs: t33_lhs_cl,
            rhs: t33_rhs_cl,
            rule: "thm-3.3-cl",
            coeff: t33_coeff_cl,
            anchor: "Corollary to Theorem 3.3 (Chu-Wang Theorem 9)",
            derivation: None,
            partner: "thm-3.3",
        },
        Form {
            id: "thm-3.4",
            family: Family::TwoTerm,
            free: ABCE,
            lhs: t34_lhs_q,
            rhs: t34_rhs_q,
            rule: "thm-3.4-q",
            coeff: t34_coeff_q,
            anchor: "Theorem 3.4",
            derivation: None,
            partner: "corl-thm-3.4",
        },
        Form {
            id: "corl-thm-3.4",
            family: Family::CorollaryClassical,
            free: ABCE,
            lhs: t34_lhs_cl,
            rhs: t34_rhs_cl,
            rule: "thm-3.4-cl",
            coeff: t34_coeff_cl,
            anchor: "Corollary to Theorem 3.4 (Chu-Wang Theorem 10)",
            derivation: None,
            partner: "thm-3.4",
        },
        Form {
            id: "prop-3.3",
            family: Family::Proposition,
            free: GREEK,
            lhs: p33_lhs_q,
            rhs: p33_rhs_q,
            rule: "prop-3.3-q",
            coeff: p33_coeff_q,
            anchor: "Proposition 3.3",
            derivation: Some(Derivation {
                parent_id: "thm-3.4",
                substitute: p33_parent,
            }),
            partner: "corl-prop-3.3",
        },
        Form {
            id: "corl-prop-3.3",
            family: Family::CorollaryClassical,
            free: GREEK,
            lhs: p33_lhs_cl,
            rhs: p33_rhs_cl,
            rule: "prop-3.3-cl",
            coeff: p33_coeff_cl,
            anchor:
                "Corollary to Proposition 3.3 (Krattenthaler Theorem 9; Chu-Wang Proposition 11)",
            derivation: Some(Derivation {
                parent_id: "corl-thm-3.4",
                substitute: p33_parent_cl,
            }),
            partner: "prop-3.3",
        },
        Form {
            id: "thm-3.5",
            family: Family::TwoTerm,
            free: ACDE,
            lhs: t35_lhs_q,
            rhs: t35_rhs_q,
            rule: "thm-3.5-q",
            coeff: t35_coeff_q,
            anchor: "Theorem 3.5",
            derivation: None,
            partner: "corl-thm-3.5",
        },
        Form {
            id: "corl-thm-3.5",
            family: Family::CorollaryClassical,
            free: ACDE,
            lhs: t35_lhs_cl,
            rhs: t35_rhs_cl,
            rule: "thm-3.5-cl",
            coeff: t35_coeff_cl,
            anchor: "Corollary to Theorem 3.5 (Chu-Wang Theorem 12)",
            derivation: None,
            partner: "thm-3.5",
        },
        Form {
            id: "thm-3.6",
            family: Family::TwoTerm,
            free: ABCE,
            lhs: t36_lhs_q,
            rhs: t36_rhs_q,
            rule: "thm-3.6-q",
            coeff: t36_coeff_q,
            anchor: "Theorem 3.6",
            derivation: None,
            partner: "corl-thm-3.6",
        },
        Form {
            id: "corl-thm-3.6",
            family: Family::CorollaryClassical,
            free: ABCE,
            lhs: t36_lhs_cl,
            rhs: t36_rhs_cl,
            rule: "thm-3.6-cl",
            coeff: t36_coeff_cl,
            anchor: "Corollary to Theorem 3.6 (Chu-Wang Theorem 13)",
            derivation: None,
            partner: "thm-3.6",
        },
        Form {
            id: "thm-3.7",
            family: Family::TwoTerm,
            free: ABCE,
            lhs: t37_lhs_q,
            rhs: t37_rhs_q,
            rule: "thm-3.7-q",
            coeff: t37_coeff_q,
            anchor: "Theorem 3.7",
            derivation: None,
            partner: "corl-thm-3.7",
        },
        Form {
            id: "corl-thm-3.7",
            family: Family::CorollaryClassical,
            free: ABCE,
            lhs: t37_lhs_cl,
            rhs: t37_rhs_cl,
            rule: "thm-3.7-cl",
            coeff: t37_coeff_cl,
            anchor: "Corollary to Theorem 3.7 (Chu-Wang Theorem 14)",
            derivation: None,
            partner: "thm-3.7",
        },
        Form {
            id: "thm-3.8",
            family: Family::TwoTerm,
            free: ABCE,
            lhs: t38_lhs_q,
            rhs: t38_rhs_q,
            rule: "thm-3.8-q",
            coeff: t38_coeff_q,
            anchor: "Theorem 3.8",
            derivation: None,
            partner: "corl-thm-3.8",
        },
        Form {
            id: "corl-thm-3.8",
            family: Family::CorollaryClassical,
            free: ABCE,
            lhs: t38_lhs_cl,
            rhs: t38_rhs_cl,
            rule: "thm-3.8-cl",
            coeff: t38_coeff_cl,
            anchor: "Corollary to Theorem 3.8 (Chu-Wang Theorem 15)",
            derivation: None,
            partner: "thm-3.8",
        },
        Form {
            id: "thm-3.9",
            family: Family::TwoTerm,
            free: ABCE,
            lhs: t39_lhs_q,
            rhs: t39_rhs_q,
            rule: "thm-3.9-q",
            coeff: t39_coeff_q,
            anchor: "Theorem 3.9",
            derivation: None,
            partner: "corl-thm-3.9",
        },
        Form {
            id: "corl-thm-3.9",
            family: Family::CorollaryClassical,
            free: ABCE,
            lhs: t39_lhs_cl,
            rhs: t39_rhs_cl,
            rule: "thm-3.9-cl",
            coeff: t39_coeff_cl,
            anchor: "Corollary to Theorem 3.9 (Chu-Wang Theorem 16)",
            derivation: None,
            partner: "thm-3.9",
        },
    ];
    forms
        .into_iter()
        .map(|f| Relation {
            id: f.id,
            family: f.family,
            free_params: f.free,
            extra_constraints: Vec::new(),
            lhs: f.lhs,
            rhs: vec![RelationTerm::series(
                Factor::rational(f.rule, f.coeff),
                f.rhs,
            )],
            paper_anchor: f.anchor,
            notes: match f.id {
                "prop-3.3" => Some(
                    "coefficient denominator prefactor corrected to beta*gamma; the \
                     printed reduced form is inconsistent with specializing thm-3.4 \
                     (numerics agree with the corrected value)",
                ),
                _ => None,
            },
            derivation: f.derivation,
            classical_partner: Some(f.partner),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::{find, instantiate, test_support};
    use super::*;
    use crate::error::Error;

    const Q_IDS: &[&str] = &[
        "thm-3.1", "thm-3.2", "thm-3.3", "thm-3.4", "thm-3.5", "thm-3.6", "thm-3.7", "thm-3.8",
        "thm-3.9", "prop-3.1", "prop-3.2", "prop-3.3",
    ];
    const CL_IDS: &[&str] = &[
        "corl-thm-3.1",
        "corl-thm-3.2",
        "corl-thm-3.3",
        "corl-thm-3.4",
        "corl-thm-3.5",
        "corl-thm-3.6",
        "corl-thm-3.7",
        "corl-thm-3.8",
        "corl-thm-3.9",
        "corl-prop-3.1",
        "corl-prop-3.2",
        "corl-prop-3.3",
    ];

    #[test]
    fn every_q_entry_holds_at_a_sampled_admissible_point() {
        let policy = PrecisionPolicy::standard();
        for id in Q_IDS {
            let rel = find(id).unwrap();
            let params = test_support::admissible_point(rel, &policy, 11);
            let inst = instantiate(id, &params, &policy).unwrap();
            assert!(
                inst.residual < 5.0 * policy.tol,
                "{id}: residual {:.3e}",
                inst.residual
            );
        }
    }

    #[test]
    fn every_classical_entry_holds_at_a_sampled_admissible_point() {
        let policy = PrecisionPolicy::standard();
        for id in CL_IDS {
            let rel = find(id).unwrap();
            let params = test_support::admissible_point(rel, &policy, 11);
            let inst = instantiate(id, &params, &policy).unwrap();
            assert!(inst.residual < 1e-8, "{id}: residual {:.3e}", inst.residual);
        }
    }

    #[test]
    fn double_numerator_shift_coefficient_keeps_its_two_factor_form() {
        // The a→qa, c→qc, b→q²b relation multiplies by exactly
        // (qb − e)/(qbe − e); guard that shape against refactors.
        let policy = PrecisionPolicy::standard();
        let rel = find("thm-3.4").unwrap();
        let p = test_support::admissible_point(rel, &policy, 3);
        let [b, e] = p.take(["b", "e"]).unwrap();
        let q = p.q();
        let expect = (q * b - e) / &(q * b * e - e);
        let got = rel.rhs[0].coefficient.eval(&p, &policy).unwrap();
        assert!(got.dist(&expect) <= 1e-18 * expect.abs_f64().max(1.0));
    }

    #[test]
    fn reduced_entries_specialize_their_parents() {
        let policy = PrecisionPolicy::standard();
        for id in [
            "prop-3.1",
            "prop-3.2",
            "prop-3.3",
            "corl-prop-3.1",
            "corl-prop-3.2",
            "corl-prop-3.3",
        ] {
            let rel = find(id).unwrap();
            let derivation = rel.derivation.as_ref().unwrap();
            let threshold = if rel.is_classical() {
                1e-8
            } else {
                5.0 * policy.tol
            };
            let mut checked = false;
            for seed in 0..40u64 {
                let params = test_support::admissible_point(rel, &policy, 100 + seed);
                let parent_params = (derivation.substitute)(&params, &policy).unwrap();
                match instantiate(derivation.parent_id, &parent_params, &policy) {
                    Ok(inst) => {
                        assert!(
                            inst.residual < threshold,
                            "{id} -> {}: residual {:.3e}",
                            derivation.parent_id,
                            inst.residual
                        );
                        checked = true;
                        break;
                    }
                    // The mapped point can land outside the parent's
                    // admissible set; try another draw.
                    Err(Error::ConstraintViolated { .. }) => continue,
                    Err(other) => panic!("{id}: unexpected error {other}"),
                }
            }
            assert!(
                checked,
                "{id}: no draw mapped into the parent's admissible set"
            );
        }
    }
}
