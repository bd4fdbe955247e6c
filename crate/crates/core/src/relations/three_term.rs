//! Three-term contiguous relations: the balanced series ₃φ₂(a,c,e;b,d) with
//! argument bd/(ace) expands as Y·S₁ + Z·S₂, where S₁ and S₂ are companion
//! series whose parameters sit single base-shifts away and Y, Z are rational
//! in the parameters. Nineteen five-parameter relations plus the classical
//! unit-argument counterpart of each.
//!
//! Companions are built from their shift pattern alone: a multiplicative
//! q-shift of the parameters on the q side, the matching additive shift on
//! the classical side. The q-side argument is derived from the shifted
//! parameters (product of lower over upper), so every series keeps the
//! balanced shape by construction; a companion whose shifts carry one net
//! power of the base therefore steps its argument down from bd/(ace) to
//! bd/(q·ace), and its classical mirror drops the decay exponent by one.
//! The cross-side test below pins that correspondence for every entry.

use crate::error::Result;
use crate::scalar::{PrecisionPolicy, Scalar};
use crate::series::{SeriesKind, SeriesSpec};

use super::{f3, phi3, Factor, Family, ParamSet, Relation, RelationTerm};

const ABCDE: &[&str] = &["a", "b", "c", "d", "e"];

/// Balanced ₃φ₂: the argument is the product of the lower parameters over
/// the upper parameters, so every series built here keeps the balanced
/// shape by construction.
fn balanced_phi(nums: [Scalar; 3], dens: [Scalar; 2], q: &Scalar) -> SeriesSpec {
    let z = &dens[0] * &dens[1] / &(&nums[0] * &nums[1] * &nums[2]);
    phi3(SeriesKind::QPhi, nums, dens, q, z)
}

/// The expanded series ₃φ₂(a,c,e;b,d;q,bd/ace) shared by every q-side entry.
fn lhs_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    Ok(balanced_phi(
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d.clone()],
        p.q(),
    ))
}

/// The expanded series ₃F₂(a,c,e;b,d;1) shared by every classical entry.
fn lhs_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    Ok(f3(
        SeriesKind::ClassicalF,
        [a.clone(), c.clone(), e.clone()],
        [b.clone(), d.clone()],
        policy,
    ))
}

// ---------------------------------------------------------------------
// Companion builders, one per distinct shift pattern. `_q` multiplies the
// named parameters by the stated powers of q; `_cl` adds the same
// exponents. Several entries share a companion.
// ---------------------------------------------------------------------

// a→qa, c→c/q, b→qb, d→d/q | a+1, c−1, b+1, d−1
fn cmp_a_up_c_dn_b_up_d_dn_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(balanced_phi([q * a, c / q, e.clone()], [q * b, d / q], q))
}

fn cmp_a_up_c_dn_b_up_d_dn_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    Ok(f3(
        SeriesKind::ClassicalF,
        [a + &one, c - &one, e.clone()],
        [b + &one, d - &one],
        policy,
    ))
}

// a→qa | a+1
fn cmp_a_up_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(balanced_phi(
        [q * a, c.clone(), e.clone()],
        [b.clone(), d.clone()],
        q,
    ))
}

fn cmp_a_up_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    Ok(f3(
        SeriesKind::ClassicalF,
        [a + &one, c.clone(), e.clone()],
        [b.clone(), d.clone()],
        policy,
    ))
}

// a→qa, c→c/q | a+1, c−1
fn cmp_a_up_c_dn_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(balanced_phi(
        [q * a, c / q, e.clone()],
        [b.clone(), d.clone()],
        q,
    ))
}

fn cmp_a_up_c_dn_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    Ok(f3(
        SeriesKind::ClassicalF,
        [a + &one, c - &one, e.clone()],
        [b.clone(), d.clone()],
        policy,
    ))
}

// a→qa, b→qb | a+1, b+1
fn cmp_a_up_b_up_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(balanced_phi(
        [q * a, c.clone(), e.clone()],
        [q * b, d.clone()],
        q,
    ))
}

fn cmp_a_up_b_up_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    Ok(f3(
        SeriesKind::ClassicalF,
        [a + &one, c.clone(), e.clone()],
        [b + &one, d.clone()],
        policy,
    ))
}

// a→q²a, c→qc, e→qe, b→q²b, d→qd | a+2, c+1, e+1, b+2, d+1
fn cmp_a_up2_c_up_e_up_b_up2_d_up_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let q2 = q * q;
    Ok(balanced_phi([&q2 * a, q * c, q * e], [&q2 * b, q * d], q))
}

fn cmp_a_up2_c_up_e_up_b_up2_d_up_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let two = policy.real(2.0);
    Ok(f3(
        SeriesKind::ClassicalF,
        [a + &two, c + &one, e + &one],
        [b + &two, d + &one],
        policy,
    ))
}

// b→qb, d→d/q | b+1, d−1
fn cmp_b_up_d_dn_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(balanced_phi(
        [a.clone(), c.clone(), e.clone()],
        [q * b, d / q],
        q,
    ))
}

fn cmp_b_up_d_dn_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    Ok(f3(
        SeriesKind::ClassicalF,
        [a.clone(), c.clone(), e.clone()],
        [b + &one, d - &one],
        policy,
    ))
}

// a→qa, c→qc, b→q²b | a+1, c+1, b+2
fn cmp_a_up_c_up_b_up2_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(balanced_phi(
        [q * a, q * c, e.clone()],
        [q * q * b, d.clone()],
        q,
    ))
}

fn cmp_a_up_c_up_b_up2_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let two = policy.real(2.0);
    Ok(f3(
        SeriesKind::ClassicalF,
        [a + &one, c + &one, e.clone()],
        [b + &two, d.clone()],
        policy,
    ))
}

// a→qa, e→qe, b→qb | a+1, e+1, b+1
fn cmp_a_up_e_up_b_up_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(balanced_phi(
        [q * a, c.clone(), q * e],
        [q * b, d.clone()],
        q,
    ))
}

fn cmp_a_up_e_up_b_up_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    Ok(f3(
        SeriesKind::ClassicalF,
        [a + &one, c.clone(), e + &one],
        [b + &one, d.clone()],
        policy,
    ))
}

// a→qa, c→qc, b→qb, d→qd | a+1, c+1, b+1, d+1
fn cmp_a_up_c_up_b_up_d_up_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(balanced_phi([q * a, q * c, e.clone()], [q * b, q * d], q))
}

fn cmp_a_up_c_up_b_up_d_up_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    Ok(f3(
        SeriesKind::ClassicalF,
        [a + &one, c + &one, e.clone()],
        [b + &one, d + &one],
        policy,
    ))
}

// a→qa, c→qc, e→qe, b→q²b, d→qd | a+1, c+1, e+1, b+2, d+1
fn cmp_a_up_c_up_e_up_b_up2_d_up_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(balanced_phi([q * a, q * c, q * e], [q * q * b, q * d], q))
}

fn cmp_a_up_c_up_e_up_b_up2_d_up_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let two = policy.real(2.0);
    Ok(f3(
        SeriesKind::ClassicalF,
        [a + &one, c + &one, e + &one],
        [b + &two, d + &one],
        policy,
    ))
}

// a→a/q, c→qc | a−1, c+1
fn cmp_a_dn_c_up_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(balanced_phi(
        [a / q, q * c, e.clone()],
        [b.clone(), d.clone()],
        q,
    ))
}

fn cmp_a_dn_c_up_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    Ok(f3(
        SeriesKind::ClassicalF,
        [a - &one, c + &one, e.clone()],
        [b.clone(), d.clone()],
        policy,
    ))
}

// c→qc, e→qe, b→qb | c+1, e+1, b+1
fn cmp_c_up_e_up_b_up_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(balanced_phi(
        [a.clone(), q * c, q * e],
        [q * b, d.clone()],
        q,
    ))
}

fn cmp_c_up_e_up_b_up_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    Ok(f3(
        SeriesKind::ClassicalF,
        [a.clone(), c + &one, e + &one],
        [b + &one, d.clone()],
        policy,
    ))
}

// a→a/q², e→e/q, b→b/q, d→d/q² | a−2, e−1, b−1, d−2
fn cmp_a_dn2_e_dn_b_dn_d_dn2_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let q2 = q * q;
    Ok(balanced_phi(
        [a / &q2, c.clone(), e / q],
        [b / q, d / &q2],
        q,
    ))
}

fn cmp_a_dn2_e_dn_b_dn_d_dn2_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let two = policy.real(2.0);
    Ok(f3(
        SeriesKind::ClassicalF,
        [a - &two, c.clone(), e - &one],
        [b - &one, d - &two],
        policy,
    ))
}

// a→a/q, d→d/q² | a−1, d−2
fn cmp_a_dn_d_dn2_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(balanced_phi(
        [a / q, c.clone(), e.clone()],
        [b.clone(), d / &(q * q)],
        q,
    ))
}

fn cmp_a_dn_d_dn2_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let two = policy.real(2.0);
    Ok(f3(
        SeriesKind::ClassicalF,
        [a - &one, c.clone(), e.clone()],
        [b.clone(), d - &two],
        policy,
    ))
}

// a→a/q, c→qc, e→qe, b→qb | a−1, c+1, e+1, b+1
fn cmp_a_dn_c_up_e_up_b_up_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(balanced_phi([a / q, q * c, q * e], [q * b, d.clone()], q))
}

fn cmp_a_dn_c_up_e_up_b_up_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    Ok(f3(
        SeriesKind::ClassicalF,
        [a - &one, c + &one, e + &one],
        [b + &one, d.clone()],
        policy,
    ))
}

// a→a/q, d→d/q | a−1, d−1
fn cmp_a_dn_d_dn_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(balanced_phi(
        [a / q, c.clone(), e.clone()],
        [b.clone(), d / q],
        q,
    ))
}

fn cmp_a_dn_d_dn_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    Ok(f3(
        SeriesKind::ClassicalF,
        [a - &one, c.clone(), e.clone()],
        [b.clone(), d - &one],
        policy,
    ))
}

// e→qe, b→qb | e+1, b+1
fn cmp_e_up_b_up_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(balanced_phi(
        [a.clone(), c.clone(), q * e],
        [q * b, d.clone()],
        q,
    ))
}

fn cmp_e_up_b_up_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    Ok(f3(
        SeriesKind::ClassicalF,
        [a.clone(), c.clone(), e + &one],
        [b + &one, d.clone()],
        policy,
    ))
}

// a→qa, c→q²c, e→q²e, b→q²b, d→q²d | a+1, c+2, e+2, b+2, d+2
fn cmp_a_up_c_up2_e_up2_b_up2_d_up2_q(
    p: &ParamSet,
    _policy: &PrecisionPolicy,
) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let q2 = q * q;
    Ok(balanced_phi(
        [q * a, &q2 * c, &q2 * e],
        [&q2 * b, &q2 * d],
        q,
    ))
}

fn cmp_a_up_c_up2_e_up2_b_up2_d_up2_cl(
    p: &ParamSet,
    policy: &PrecisionPolicy,
) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let two = policy.real(2.0);
    Ok(f3(
        SeriesKind::ClassicalF,
        [a + &one, c + &two, e + &two],
        [b + &two, d + &two],
        policy,
    ))
}

// c→c/q, e→e/q, b→b/q, d→d/q | c−1, e−1, b−1, d−1
fn cmp_c_dn_e_dn_b_dn_d_dn_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    Ok(balanced_phi([a.clone(), c / q, e / q], [b / q, d / q], q))
}

fn cmp_c_dn_e_dn_b_dn_d_dn_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<SeriesSpec> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    Ok(f3(
        SeriesKind::ClassicalF,
        [a.clone(), c - &one, e - &one],
        [b - &one, d - &one],
        policy,
    ))
}

// ---------------------------------------------------------------------
// thm-4.1 / corl-thm-4.1 — companions (a↑ c↓ b↑ d↓) and (a↑).
// ---------------------------------------------------------------------

fn t41_y_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let w = q * q * a * b * e + a * c * d * e + b * b * d
        - b * d * e
        - q * a * b * d
        - q * a * b * c * e;
    let num = (b - c) * (b - e) * (q - d) * (q * b - c) * a * d;
    let den = (b - &one) * (q * a - d) * &w * c;
    Ok(num / den)
}

fn t41_z_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let w = q * q * a * b * e + a * c * d * e + b * b * d
        - b * d * e
        - q * a * b * d
        - q * a * b * c * e;
    let num = (q * a * c * e - b * d)
        * (q * q * a * b * e + a * c * d * e + b * c * d
            - c * d * e
            - q * a * b * d
            - q * a * b * c * e);
    let den = (q * a - d) * &w * c * e;
    Ok(num / den)
}

fn t41_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let v = &one + b * b + a * e + c * d + e - c - d - a * b - b * c - b * e;
    let num = (&one + b - c) * (b - c) * (b - e) * (&one - d);
    let den = b * (&one + a - d) * &v;
    Ok(num / den)
}

fn t41_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let v = &one + b * b + a * e + c * d + e - c - d - a * b - b * c - b * e;
    let num = (&one + a + c + e - b - d) * (&one + a * e + c * d + e - c - d - a * b - c * e);
    let den = (&one + a - d) * &v;
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.2 / corl-thm-4.2 — companions (a↑ c↓) and (a↑ b↑).
// ---------------------------------------------------------------------

fn t42_y_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, c, d] = p.take(["a", "c", "d"])?;
    let q = p.q();
    let num = (c - d) * q * a;
    let den = (q * a - d) * c;
    Ok(num / den)
}

fn t42_z_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (b - e) * (q * a - c) * d;
    let den = (b - &one) * (q * a - d) * c * e;
    Ok(num / den)
}

fn t42_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, c, d] = p.take(["a", "c", "d"])?;
    let one = policy.one();
    let num = c - d;
    let den = &one + a - d;
    Ok(num / den)
}

fn t42_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let num = (b - e) * (&one + a - c);
    let den = b * (&one + a - d);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.3 / corl-thm-4.3 — companions (a↑ c↓) and (a↑↑ c↑ e↑ b↑↑ d↑).
// ---------------------------------------------------------------------

fn t43_y_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let num = (c - d)
        * (q * a * b * c * e + b * d + c * d * e - b * c * d - b * d * e - q * a * c * e)
        * q
        * a;
    let den = (q * a - d)
        * (q * a * b * c * e + b * d + q * a * d * e - q * a * b * d - b * d * e - q * a * c * e)
        * c;
    Ok(num / den)
}

fn t43_z_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let qa = q * a;
    let num = (&one - c)
        * (&one - e)
        * (&one - &qa)
        * (c - &qa)
        * (b - e)
        * (&qa * c * e - b * d)
        * b
        * d
        * d;
    let den = (&one - b)
        * (&one - d)
        * (&one - &(q * b))
        * (&qa - d)
        * (&qa * b * c * e + b * d + &qa * d * e - &qa * b * d - b * d * e - &qa * c * e)
        * &qa
        * c
        * c
        * e
        * e;
    Ok(num / den)
}

fn t43_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let num = (c - d) * (b + a * b + c * e - b * d);
    let den = (&one + a - d) * (b * c + a * e + e - b * d);
    Ok(num / den)
}

fn t43_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let num = c * e * (&one + a) * (b - e) * (&one + a - c) * (&one + a + c + e - b - d);
    let den = b * d * (&one + b) * (&one + a - d) * (b * d - b * c - a * e - e);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.4 / corl-thm-4.4 — companions (b↑ d↓) and (a↑).
// ---------------------------------------------------------------------

fn t44_y_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (a - b) * (b - c) * (b - e) * (d - q) * d;
    let den = (&one - b)
        * (q * a - d)
        * (q * a * b * c * e + b * c * d + b * d * e - b * b * d - a * c * d * e - q * b * c * e);
    Ok(num / den)
}

fn t44_z_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (&one - a) * (d - &(q * b)) * (q * a * c * e - b * d);
    let den = (q * a - d)
        * (q * a * b * c * e + b * c * d + b * d * e - b * b * d - a * c * d * e - q * b * c * e);
    Ok(num / den)
}

fn t44_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let num = (a - b) * (b - c) * (b - e) * (&one - d);
    let den = b * (&one + a - d) * (a + a * b + b * c + b * e - b * b - c * e - a * d);
    Ok(num / den)
}

fn t44_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let num = a * (&one + b - d) * (&one + a + c + e - b - d);
    let den = (&one + a - d) * (a + a * b + b * c + b * e - b * b - c * e - a * d);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.5 / corl-thm-4.5 — companions (b↑ d↓) and (a↑ b↑).
// ---------------------------------------------------------------------

fn t45_y_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, d] = p.take(["a", "b", "d"])?;
    let q = p.q();
    let one = policy.one();
    let num = (a - b) * (q - d);
    let den = (&one - b) * (q * a - d);
    Ok(num / den)
}

fn t45_z_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, d] = p.take(["a", "b", "d"])?;
    let q = p.q();
    let one = policy.one();
    let num = (&one - a) * (q * b - d);
    let den = (&one - b) * (q * a - d);
    Ok(num / den)
}

fn t45_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, d] = p.take(["a", "b", "d"])?;
    let one = policy.one();
    let num = (a - b) * (d - &one);
    let den = b * (&one + a - d);
    Ok(num / den)
}

fn t45_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, d] = p.take(["a", "b", "d"])?;
    let one = policy.one();
    let num = a * (&one + b - d);
    let den = b * (&one + a - d);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.6 / corl-thm-4.6 — companions (b↑ d↓) and (a↑↑ c↑ e↑ b↑↑ d↑).
// ---------------------------------------------------------------------

fn t46_y_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (a - b)
        * (q - d)
        * (q * a * b * c * e + c * d * e + b * d - b * c * d - b * d * e - q * a * c * e);
    let den = (&one - b)
        * (q * a - d)
        * (q * b * c * e + a * c * d * e + b * d - b * c * d - b * d * e - q * a * c * e);
    Ok(num / den)
}

fn t46_z_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (&one - a)
        * (&one - c)
        * (&one - e)
        * (&one - &(q * a))
        * (q * b - d)
        * (q * a * c * e - b * d)
        * b
        * d;
    let den = (&one - b)
        * (&one - d)
        * (&one - &(q * b))
        * (q * a - d)
        * (q * b * c * e + a * c * d * e + b * d - b * c * d - b * d * e - q * a * c * e)
        * q
        * a
        * c
        * e;
    Ok(num / den)
}

fn t46_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let num = (a - b) * (d - &one) * (b * d - a * b - c * e - b);
    let den = b * (&one + a - d) * (a + b * d - a * d - c * e - b);
    Ok(num / den)
}

fn t46_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let num = a * c * e * (&one + a) * (&one + b - d) * (&one + a + c + e - b - d);
    let den = b * d * (&one + b) * (&one + a - d) * (a + b * d - a * d - c * e - b);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.7 / corl-thm-4.7 — companions (a↑ c↑ b↑↑) and (a↑ e↑ b↑).
// ---------------------------------------------------------------------

fn t47_y_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let w = q * a * c * e + a * c * d * e + b * d * e - a * d * e - b * c * d - q * a * c * e * e;
    let num = (&one - c) * (b - a) * (b - e) * (q * b - e) * (q * a * e - d) * d;
    let den = (&one - b) * (&one - &(q * b)) * (q * a - d) * &w * e;
    Ok(num / den)
}

fn t47_z_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let w = q * a * c * e + a * c * d * e + b * d * e - a * d * e - b * c * d - q * a * c * e * e;
    let num = (&one - e)
        * (q * a * c * e - b * d)
        * (q * a * b * c + a * d + c * d - b * d - a * c * d - q * a * c);
    let den = (&one - b) * (d - &(q * a)) * &w * c;
    Ok(num / den)
}

fn t47_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let v = a * c + b * e + d * e - a * e - e - e * e - b * c;
    let num = c * (a - b) * (b - e) * (&one + b - e) * (&one + a + e - d);
    let den = b * (&one + b) * (&one + a - d) * &v;
    Ok(num / den)
}

fn t47_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let v = a * c + b * e + d * e - a * e - e - e * e - b * c;
    let num = e * (b + d - a - c - e - &one) * (b + a * b + b * c - b * d - a * c);
    let den = b * (&one + a - d) * &v;
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.8 / corl-thm-4.8 — companions (a↑ c↑ b↑↑) and (a↑).
// ---------------------------------------------------------------------

fn t48_y_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let w = q * a * b * c * e + a * d * e + b * c * d - b * b * d - a * c * d * e - q * a * c * e;
    let num = (a - b) * (b - c) * (&one - c) * (b - e) * (q * b - e) * d * d;
    let den = (&one - b) * (&one - &(q * b)) * (q * a - d) * &w * c * e;
    Ok(num / den)
}

fn t48_z_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let w = q * a * b * c * e + a * d * e + b * c * d - b * b * d - a * c * d * e - q * a * c * e;
    let num =
        (q * a * c * e - b * d) * (q * a * b * c + a * d + c * d - b * d - a * c * d - q * a * c);
    let den = (q * a - d) * &w * c;
    Ok(num / den)
}

fn t48_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let two = policy.real(2.0);
    let v = a * c + c * e + b * d + b * b - b - a * b - b * e - &two * b * c;
    let num = (a - b) * (b - c) * (b - e) * (&one + b - e) * c;
    let den = b * (&one + b) * (&one + a - d) * &v;
    Ok(num / den)
}

fn t48_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let two = policy.real(2.0);
    let v = a * c + c * e + b * d + b * b - b - a * b - b * e - &two * b * c;
    let num = (b + d - a - c - e - &one) * (a * b + b * c + b - b * d - a * c);
    let den = (&one + a - d) * &v;
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.9 / corl-thm-4.9 — companions (a↑ c↑ b↑ d↑) and (a↑).
// ---------------------------------------------------------------------

fn t49_y_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (&one - c) * (b - e) * (d - e) * b * d;
    let den = (&one - b) * (&one - d) * (q * a * e - b * d) * c * e;
    Ok(num / den)
}

fn t49_z_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let num = q * a * c * e - b * d;
    let den = (q * a * e - b * d) * c;
    Ok(num / den)
}

fn t49_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let num = c * (b - e) * (e - d);
    let den = b * d * (&one + a + e - b - d);
    Ok(num / den)
}

fn t49_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let num = &one + a + c + e - b - d;
    let den = &one + a + e - b - d;
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.10 / corl-thm-4.10 — companions (a↑ c↑ e↑ b↑↑ d↑) and (a↑ b↑),
// the second with coefficient one.
// ---------------------------------------------------------------------

fn t410_y_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (a - b) * (&one - c) * (&one - e) * b * d;
    let den = (&one - b) * (&one - &(q * b)) * (d - &one) * a * c * e;
    Ok(num / den)
}

fn t410_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let num = (a - b) * c * e;
    let den = (&one + b) * b * d;
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.11 / corl-thm-4.11 — companions (a↓ c↑) and (c↑ e↑ b↑).
// ---------------------------------------------------------------------

fn t411_y_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, c, d, e] = p.take(["a", "c", "d", "e"])?;
    let q = p.q();
    let num = (a - d) * (q * c * e - d);
    let den = (a * e - d) * (q * c - d);
    Ok(num / den)
}

fn t411_z_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (&one - e) * (a - &(q * c)) * (q * a * c * e - b * d) * d;
    let den = (&one - b) * (a * e - d) * (q * c - d) * q * a * c * e;
    Ok(num / den)
}

fn t411_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, c, d, e] = p.take(["a", "c", "d", "e"])?;
    let one = policy.one();
    let num = (a - d) * (&one + c + e - d);
    let den = (a + e - d) * (&one + c - d);
    Ok(num / den)
}

fn t411_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let num = e * (&one + c - a) * (b + d - a - c - e - &one);
    let den = b * (&one + c - d) * (a + e - d);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.12 / corl-thm-4.12 — companions (b↑ d↓) and (c↑ e↑ b↑).
// ---------------------------------------------------------------------

fn t412_y_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [b, c, d, e] = p.take(["b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (b - c) * (b - e) * (q - d) * (q * c * e - d);
    let den = (b - &one) * (b - &(c * e)) * (q * c - d) * (q * e - d);
    Ok(num / den)
}

fn t412_z_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (&one - c) * (&one - e) * (d - &(q * b)) * (q * a * c * e - b * d);
    let den = (b - &one) * (b - &(c * e)) * (q * c - d) * (q * e - d) * a;
    Ok(num / den)
}

fn t412_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [b, c, d, e] = p.take(["b", "c", "d", "e"])?;
    let one = policy.one();
    let num = (b - c) * (b - e) * (d - &one) * (&one + c + e - d);
    let den = b * (&one + c - d) * (&one + e - d) * (c + e - b);
    Ok(num / den)
}

fn t412_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let num = c * e * (&one + b - d) * (&one + a + c + e - b - d);
    let den = b * (&one + c - d) * (&one + e - d) * (c + e - b);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.13 / corl-thm-4.13 — companions (a↓↓ e↓ b↓ d↓↓) and (a↓ d↓↓).
// ---------------------------------------------------------------------

fn t413_y_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let q2 = q * q;
    let q3 = q * q * q;
    let num = (q - b)
        * (q - d)
        * (&q2 - d)
        * (b * d * d + &q2 * a * b * c * e + &q3 * a * c * e
            - &q3 * b * c * e
            - q * a * b * d
            - q * a * c * d * e)
        * a
        * c
        * e;
    let den = (q - a) * (q * c - d) * (&q2 * c - d) * (q * e - d) * (a * e - d) * q * b * b;
    Ok(num / den)
}

fn t413_z_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let q2 = q * q;
    let q3 = q * q * q;
    let num = (q - d)
        * (&q2 - d)
        * (b * d - &(q * a * c * e))
        * (a * b * d * e + &q2 * b * c * d + &q3 * a * c * e
            - &q3 * b * c * e
            - q * a * b * d
            - q * a * c * d * e);
    let den = (q - a) * (q * c - d) * (&q2 * c - d) * (q * e - d) * (a * e - d) * q * b * b;
    Ok(num / den)
}

fn t413_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let two = policy.real(2.0);
    let three = policy.real(3.0);
    let u = &two * b + &two * d + c * d + d * e + &two * a * d
        - a * c
        - a * e
        - b * d
        - &three * a
        - c
        - e
        - d * d
        - &one;
    let num = (b - &one) * (d - &one) * (d - &two) * &u;
    let den = (a - &one) * (&one + c - d) * (&two + c - d) * (&one + e - d) * (d - a - e);
    Ok(num / den)
}

fn t413_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let two = policy.real(2.0);
    let v = &one + a + c + a * e + b * d - a * d - c * e - &two * b - e;
    let num = (d - &one) * (d - &two) * (b + d - a - c - e - &one) * &v;
    let den = (a - &one) * (&one + c - d) * (&two + c - d) * (&one + e - d) * (d - a - e);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.14 / corl-thm-4.14 — companions (a↓ c↑ e↑ b↑) and (a↓ d↓↓).
// ---------------------------------------------------------------------

fn t414_y_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let q2 = q * q;
    let q3 = q * q * q;
    let num = (a - &(q * b))
        * (a - d)
        * (&one - c)
        * (&one - e)
        * (&q3 * a * c * e + &q2 * a * b * c * e + b * d * d
            - q * a * b * d
            - &q3 * b * c * e
            - q * a * c * d * e)
        * q
        * d;
    let den = (a - q)
        * (&one - b)
        * (q * c - d)
        * (q * e - d)
        * (&q3 * a * c * e + &q2 * b * c * d * e + b * d * d
            - &q2 * b * c * d
            - &q2 * b * d * e
            - q * a * c * d * e)
        * a;
    Ok(num / den)
}

fn t414_z_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let q2 = q * q;
    let q3 = q * q * q;
    let num = (q - d)
        * (&q2 - d)
        * (q * a * c * e - b * d)
        * (&q2 * c * e + q * c * d * e + a * d - q * c * d - q * d * e - q * a * c * e);
    let den = (q - a)
        * (q * c - d)
        * (q * e - d)
        * (&q3 * a * c * e + &q2 * b * c * d * e + b * d * d
            - &q2 * b * c * d
            - &q2 * b * d * e
            - q * a * c * d * e);
    Ok(num / den)
}

fn t414_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let two = policy.real(2.0);
    let t = (d - &two) * (b + d - a - c - e - &one);
    let num = c * e * (a - b - &one) * (a - d) * ((a - &one) * (&one + c + e - d) + &t);
    let den = b * (&one - a) * (&one + c - d) * (&one + e - d) * (c * e + &t);
    Ok(num / den)
}

fn t414_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let two = policy.real(2.0);
    let t = (d - &two) * (b + d - a - c - e - &one);
    let num = (d - &one)
        * (d - &two)
        * (&one + a + c + e - b - d)
        * (&one + c + e + c * e + a * d - a * c - a * e - a - d);
    let den = (&one - a) * (&one + c - d) * (&one + e - d) * (c * e + &t);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.15 / corl-thm-4.15 — companions (a↓ c↑ e↑ b↑) and (a↓ d↓).
// ---------------------------------------------------------------------

fn t415_y_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (a - &(q * b)) * (a - d) * (&one - c) * (&one - e) * q * d;
    let den = (a - q) * (&one - b) * (q * c - d) * (q * e - d) * a;
    Ok(num / den)
}

fn t415_z_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, c, d, e] = p.take(["a", "c", "d", "e"])?;
    let q = p.q();
    let num =
        (q - d) * (q * a * c * e + q * c * d + q * d * e - q * c * d * e - q * q * c * e - a * d);
    let den = (a - q) * (q * c - d) * (q * e - d);
    Ok(num / den)
}

fn t415_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let num = c * e * (a - d) * (a - b - &one);
    let den = b * (&one - a) * (&one + c - d) * (&one + e - d);
    Ok(num / den)
}

fn t415_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, c, d, e] = p.take(["a", "c", "d", "e"])?;
    let one = policy.one();
    let num = (d - &one) * ((a - &one) * (&one + c + e - d) - c * e);
    let den = (&one - a) * (&one + c - d) * (&one + e - d);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.16 / corl-thm-4.16 — companions (e↑ b↑) and (c↑ e↑ b↑).
// ---------------------------------------------------------------------

fn t416_y_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [b, c, d, e] = p.take(["b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (b - c) * (q * c * e - d);
    let den = (b - &one) * (q * e - d) * c;
    Ok(num / den)
}

fn t416_z_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let num = (&one - c) * (q * a * c * e - b * d);
    let den = (&one - b) * (q * e - d) * a * c;
    Ok(num / den)
}

fn t416_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [b, c, d, e] = p.take(["b", "c", "d", "e"])?;
    let one = policy.one();
    let num = (b - c) * (&one + c + e - d);
    let den = b * (&one + e - d);
    Ok(num / den)
}

fn t416_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let num = c * (&one + a + c + e - b - d);
    let den = b * (&one + e - d);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.17 / corl-thm-4.17 — companions (a↓ c↑) and (a↑ c↑↑ e↑↑ b↑↑ d↑↑).
// ---------------------------------------------------------------------

fn t417_y_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let num = q * a * b * c * e + q * a * c * d * e + b * d
        - a * b * d
        - q * a * c * e
        - q * b * c * d * e;
    let den = q * a * b * c * e + q * a * c * d * e + b * d
        - a * b * d * e
        - q * a * c * e
        - q * b * c * d;
    Ok(num / den)
}

fn t417_z_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let one = policy.one();
    let bd = b * d;
    let qace = q * a * c * e;
    let num = (&one - a)
        * (a - &(q * c))
        * (&one - &(q * c))
        * (&one - &(q * e))
        * (&one - e)
        * (&qace - &bd)
        * &bd
        * &bd;
    let den = (&one - b)
        * (&one - d)
        * (&one - &(q * b))
        * (&one - &(q * d))
        * (q * a * b * c * e + q * a * c * d * e + b * d
            - a * b * d * e
            - q * a * c * e
            - q * b * c * d)
        * &qace
        * &qace;
    Ok(num / den)
}

fn t417_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let num = b * d - a * (&one + c + e);
    let den = b * d - (&one + c) * (a + e);
    Ok(num / den)
}

fn t417_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let num = a * e * (&one + c) * (&one + e) * (&one + c - a) * (b + d - a - c - e - &one);
    let den = b * d * (&one + b) * (&one + d) * (a + e + a * c + c * e - b * d);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.18 / corl-thm-4.18 — companions (a↑ c↓) and (c↓ e↓ b↓ d↓).
// ---------------------------------------------------------------------

fn t418_y_q(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d] = p.take(["a", "b", "c", "d"])?;
    let q = p.q();
    let one = policy.one();
    let num = (a - &one) * (c - b) * (c - d) * a * q * q;
    let den = (c - q) * (q * a - b) * (q * a - d) * c;
    Ok(num / den)
}

fn t418_z_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d] = p.take(["a", "b", "c", "d"])?;
    let q = p.q();
    let num = (q - b) * (q - d) * (q * a - c) * a;
    let den = (q - c) * (q * a - b) * (q * a - d);
    Ok(num / den)
}

fn t418_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d] = p.take(["a", "b", "c", "d"])?;
    let one = policy.one();
    let num = a * (b - c) * (c - d);
    let den = (&one - c) * (&one + a - b) * (&one + a - d);
    Ok(num / den)
}

fn t418_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d] = p.take(["a", "b", "c", "d"])?;
    let one = policy.one();
    let num = (&one - b) * (&one - d) * (&one + a - c);
    let den = (&one - c) * (&one + a - b) * (&one + a - d);
    Ok(num / den)
}

// ---------------------------------------------------------------------
// thm-4.19 / corl-thm-4.19 — companions (a↑ c↓) and (a↑).
// ---------------------------------------------------------------------

fn t419_y_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d] = p.take(["a", "b", "c", "d"])?;
    let q = p.q();
    let num = (c - b) * (c - d) * a * q;
    let den = (q * a - b) * (q * a - d) * c;
    Ok(num / den)
}

fn t419_z_q(p: &ParamSet, _policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let q = p.q();
    let num = (q * a - c) * (q * a * c * e - b * d);
    let den = (q * a - b) * (q * a - d) * c * e;
    Ok(num / den)
}

fn t419_y_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d] = p.take(["a", "b", "c", "d"])?;
    let one = policy.one();
    let num = (c - b) * (c - d);
    let den = (&one + a - b) * (&one + a - d);
    Ok(num / den)
}

fn t419_z_cl(p: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    let [a, b, c, d, e] = p.take(["a", "b", "c", "d", "e"])?;
    let one = policy.one();
    let num = (&one + a - c) * (&one + a + c + e - b - d);
    let den = (&one + a - b) * (&one + a - d);
    Ok(num / den)
}

/// All three-term entries: the nineteen five-parameter expansions and the
/// classical counterpart of each.
pub(super) fn entries() -> Vec<Relation> {
    struct Form {
        id: &'static str,
        family: Family,
        lhs: super::SpecFn,
        s1: super::SpecFn,
        y_rule: &'static str,
        y: super::CoeffFn,
        s2: super::SpecFn,
        z_rule: &'static str,
        z: Option<super::CoeffFn>,
        anchor: &'static str,
        partner: &'static str,
    }
    let forms = vec![
        Form {
            id: "thm-4.1",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_a_up_c_dn_b_up_d_dn_q,
            y_rule: "thm-4.1-Y-q",
            y: t41_y_q,
            s2: cmp_a_up_q,
            z_rule: "thm-4.1-Z-q",
            z: Some(t41_z_q),
            anchor: "Theorem 4.1",
            partner: "corl-thm-4.1",
        },
        Form {
            id: "corl-thm-4.1",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_a_up_c_dn_b_up_d_dn_cl,
            y_rule: "thm-4.1-Y-cl",
            y: t41_y_cl,
            s2: cmp_a_up_cl,
            z_rule: "thm-4.1-Z-cl",
            z: Some(t41_z_cl),
            anchor: "Corollary to Theorem 4.1 (Chu-Wang Theorem 19)",
            partner: "thm-4.1",
        },
        Form {
            id: "thm-4.2",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_a_up_c_dn_q,
            y_rule: "thm-4.2-Y-q",
            y: t42_y_q,
            s2: cmp_a_up_b_up_q,
            z_rule: "thm-4.2-Z-q",
            z: Some(t42_z_q),
            anchor: "Theorem 4.2",
            partner: "corl-thm-4.2",
        },
        Form {
            id: "corl-thm-4.2",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_a_up_c_dn_cl,
            y_rule: "thm-4.2-Y-cl",
            y: t42_y_cl,
            s2: cmp_a_up_b_up_cl,
            z_rule: "thm-4.2-Z-cl",
            z: Some(t42_z_cl),
            anchor: "Corollary to Theorem 4.2 (Chu-Wang Theorem 21)",
            partner: "thm-4.2",
        },
        Form {
            id: "thm-4.3",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_a_up_c_dn_q,
            y_rule: "thm-4.3-Y-q",
            y: t43_y_q,
            s2: cmp_a_up2_c_up_e_up_b_up2_d_up_q,
            z_rule: "thm-4.3-Z-q",
            z: Some(t43_z_q),
            anchor: "Theorem 4.3",
            partner: "corl-thm-4.3",
        },
        Form {
            id: "corl-thm-4.3",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_a_up_c_dn_cl,
            y_rule: "thm-4.3-Y-cl",
            y: t43_y_cl,
            s2: cmp_a_up2_c_up_e_up_b_up2_d_up_cl,
            z_rule: "thm-4.3-Z-cl",
            z: Some(t43_z_cl),
            anchor: "Corollary to Theorem 4.3 (Chu-Wang Theorem 23)",
            partner: "thm-4.3",
        },
        Form {
            id: "thm-4.4",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_b_up_d_dn_q,
            y_rule: "thm-4.4-Y-q",
            y: t44_y_q,
            s2: cmp_a_up_q,
            z_rule: "thm-4.4-Z-q",
            z: Some(t44_z_q),
            anchor: "Theorem 4.4",
            partner: "corl-thm-4.4",
        },
        Form {
            id: "corl-thm-4.4",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_b_up_d_dn_cl,
            y_rule: "thm-4.4-Y-cl",
            y: t44_y_cl,
            s2: cmp_a_up_cl,
            z_rule: "thm-4.4-Z-cl",
            z: Some(t44_z_cl),
            anchor: "Corollary to Theorem 4.4 (Chu-Wang Theorem 26)",
            partner: "thm-4.4",
        },
        Form {
            id: "thm-4.5",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_b_up_d_dn_q,
            y_rule: "thm-4.5-Y-q",
            y: t45_y_q,
            s2: cmp_a_up_b_up_q,
            z_rule: "thm-4.5-Z-q",
            z: Some(t45_z_q),
            anchor: "Theorem 4.5",
            partner: "corl-thm-4.5",
        },
        Form {
            id: "corl-thm-4.5",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_b_up_d_dn_cl,
            y_rule: "thm-4.5-Y-cl",
            y: t45_y_cl,
            s2: cmp_a_up_b_up_cl,
            z_rule: "thm-4.5-Z-cl",
            z: Some(t45_z_cl),
            anchor: "Corollary to Theorem 4.5 (Chu-Wang Theorem 28)",
            partner: "thm-4.5",
        },
        Form {
            id: "thm-4.6",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_b_up_d_dn_q,
            y_rule: "thm-4.6-Y-q",
            y: t46_y_q,
            s2: cmp_a_up2_c_up_e_up_b_up2_d_up_q,
            z_rule: "thm-4.6-Z-q",
            z: Some(t46_z_q),
            anchor: "Theorem 4.6",
            partner: "corl-thm-4.6",
        },
        Form {
            id: "corl-thm-4.6",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_b_up_d_dn_cl,
            y_rule: "thm-4.6-Y-cl",
            y: t46_y_cl,
            s2: cmp_a_up2_c_up_e_up_b_up2_d_up_cl,
            z_rule: "thm-4.6-Z-cl",
            z: Some(t46_z_cl),
            anchor: "Corollary to Theorem 4.6 (Chu-Wang Theorem 30)",
            partner: "thm-4.6",
        },
        Form {
            id: "thm-4.7",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_a_up_c_up_b_up2_q,
            y_rule: "thm-4.7-Y-q",
            y: t47_y_q,
            s2: cmp_a_up_e_up_b_up_q,
            z_rule: "thm-4.7-Z-q",
            z: Some(t47_z_q),
            anchor: "Theorem 4.7",
            partner: "corl-thm-4.7",
        },
        Form {
            id: "corl-thm-4.7",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_a_up_c_up_b_up2_cl,
            y_rule: "thm-4.7-Y-cl",
            y: t47_y_cl,
            s2: cmp_a_up_e_up_b_up_cl,
            z_rule: "thm-4.7-Z-cl",
            z: Some(t47_z_cl),
            anchor: "Corollary to Theorem 4.7 (Chu-Wang Theorem 33)",
            partner: "thm-4.7",
        },
        Form {
            id: "thm-4.8",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_a_up_c_up_b_up2_q,
            y_rule: "thm-4.8-Y-q",
            y: t48_y_q,
            s2: cmp_a_up_q,
            z_rule: "thm-4.8-Z-q",
            z: Some(t48_z_q),
            anchor: "Theorem 4.8",
            partner: "corl-thm-4.8",
        },
        Form {
            id: "corl-thm-4.8",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_a_up_c_up_b_up2_cl,
            y_rule: "thm-4.8-Y-cl",
            y: t48_y_cl,
            s2: cmp_a_up_cl,
            z_rule: "thm-4.8-Z-cl",
            z: Some(t48_z_cl),
            anchor: "Corollary to Theorem 4.8 (Chu-Wang Theorem 35)",
            partner: "thm-4.8",
        },
        Form {
            id: "thm-4.9",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_a_up_c_up_b_up_d_up_q,
            y_rule: "thm-4.9-Y-q",
            y: t49_y_q,
            s2: cmp_a_up_q,
            z_rule: "thm-4.9-Z-q",
            z: Some(t49_z_q),
            anchor: "Theorem 4.9",
            partner: "corl-thm-4.9",
        },
        Form {
            id: "corl-thm-4.9",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_a_up_c_up_b_up_d_up_cl,
            y_rule: "thm-4.9-Y-cl",
            y: t49_y_cl,
            s2: cmp_a_up_cl,
            z_rule: "thm-4.9-Z-cl",
            z: Some(t49_z_cl),
            anchor: "Corollary to Theorem 4.9 (Chu-Wang Theorem 38)",
            partner: "thm-4.9",
        },
        Form {
            id: "thm-4.10",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_a_up_c_up_e_up_b_up2_d_up_q,
            y_rule: "thm-4.10-Y-q",
            y: t410_y_q,
            s2: cmp_a_up_b_up_q,
            z_rule: "unity",
            z: None,
            anchor: "Theorem 4.10",
            partner: "corl-thm-4.10",
        },
        Form {
            id: "corl-thm-4.10",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_a_up_c_up_e_up_b_up2_d_up_cl,
            y_rule: "thm-4.10-Y-cl",
            y: t410_y_cl,
            s2: cmp_a_up_b_up_cl,
            z_rule: "unity",
            z: None,
            anchor: "Corollary to Theorem 4.10 (Chu-Wang Theorem 40)",
            partner: "thm-4.10",
        },
        Form {
            id: "thm-4.11",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_a_dn_c_up_q,
            y_rule: "thm-4.11-Y-q",
            y: t411_y_q,
            s2: cmp_c_up_e_up_b_up_q,
            z_rule: "thm-4.11-Z-q",
            z: Some(t411_z_q),
            anchor: "Theorem 4.11",
            partner: "corl-thm-4.11",
        },
        Form {
            id: "corl-thm-4.11",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_a_dn_c_up_cl,
            y_rule: "thm-4.11-Y-cl",
            y: t411_y_cl,
            s2: cmp_c_up_e_up_b_up_cl,
            z_rule: "thm-4.11-Z-cl",
            z: Some(t411_z_cl),
            anchor: "Corollary to Theorem 4.11 (Chu-Wang Theorem 42)",
            partner: "thm-4.11",
        },
        Form {
            id: "thm-4.12",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_b_up_d_dn_q,
            y_rule: "thm-4.12-Y-q",
            y: t412_y_q,
            s2: cmp_c_up_e_up_b_up_q,
            z_rule: "thm-4.12-Z-q",
            z: Some(t412_z_q),
            anchor: "Theorem 4.12",
            partner: "corl-thm-4.12",
        },
        Form {
            id: "corl-thm-4.12",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_b_up_d_dn_cl,
            y_rule: "thm-4.12-Y-cl",
            y: t412_y_cl,
            s2: cmp_c_up_e_up_b_up_cl,
            z_rule: "thm-4.12-Z-cl",
            z: Some(t412_z_cl),
            anchor: "Corollary to Theorem 4.12 (Chu-Wang Theorem 45)",
            partner: "thm-4.12",
        },
        Form {
            id: "thm-4.13",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_a_dn2_e_dn_b_dn_d_dn2_q,
            y_rule: "thm-4.13-Y-q",
            y: t413_y_q,
            s2: cmp_a_dn_d_dn2_q,
            z_rule: "thm-4.13-Z-q",
            z: Some(t413_z_q),
            anchor: "Theorem 4.13",
            partner: "corl-thm-4.13",
        },
        Form {
            id: "corl-thm-4.13",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_a_dn2_e_dn_b_dn_d_dn2_cl,
            y_rule: "thm-4.13-Y-cl",
            y: t413_y_cl,
            s2: cmp_a_dn_d_dn2_cl,
            z_rule: "thm-4.13-Z-cl",
            z: Some(t413_z_cl),
            anchor: "Corollary to Theorem 4.13 (Chu-Wang Theorem 48)",
            partner: "thm-4.13",
        },
        Form {
            id: "thm-4.14",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_a_dn_c_up_e_up_b_up_q,
            y_rule: "thm-4.14-Y-q",
            y: t414_y_q,
            s2: cmp_a_dn_d_dn2_q,
            z_rule: "thm-4.14-Z-q",
            z: Some(t414_z_q),
            anchor: "Theorem 4.14",
            partner: "corl-thm-4.14",
        },
        Form {
            id: "corl-thm-4.14",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_a_dn_c_up_e_up_b_up_cl,
            y_rule: "thm-4.14-Y-cl",
            y: t414_y_cl,
            s2: cmp_a_dn_d_dn2_cl,
            z_rule: "thm-4.14-Z-cl",
            z: Some(t414_z_cl),
            anchor: "Corollary to Theorem 4.14 (Chu-Wang Theorem 51)",
            partner: "thm-4.14",
        },
        Form {
            id: "thm-4.15",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_a_dn_c_up_e_up_b_up_q,
            y_rule: "thm-4.15-Y-q",
            y: t415_y_q,
            s2: cmp_a_dn_d_dn_q,
            z_rule: "thm-4.15-Z-q",
            z: Some(t415_z_q),
            anchor: "Theorem 4.15",
            partner: "corl-thm-4.15",
        },
        Form {
            id: "corl-thm-4.15",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_a_dn_c_up_e_up_b_up_cl,
            y_rule: "thm-4.15-Y-cl",
            y: t415_y_cl,
            s2: cmp_a_dn_d_dn_cl,
            z_rule: "thm-4.15-Z-cl",
            z: Some(t415_z_cl),
            anchor: "Corollary to Theorem 4.15 (Chu-Wang Theorem 53)",
            partner: "thm-4.15",
        },
        Form {
            id: "thm-4.16",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_e_up_b_up_q,
            y_rule: "thm-4.16-Y-q",
            y: t416_y_q,
            s2: cmp_c_up_e_up_b_up_q,
            z_rule: "thm-4.16-Z-q",
            z: Some(t416_z_q),
            anchor: "Theorem 4.16",
            partner: "corl-thm-4.16",
        },
        Form {
            id: "corl-thm-4.16",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_e_up_b_up_cl,
            y_rule: "thm-4.16-Y-cl",
            y: t416_y_cl,
            s2: cmp_c_up_e_up_b_up_cl,
            z_rule: "thm-4.16-Z-cl",
            z: Some(t416_z_cl),
            anchor: "Corollary to Theorem 4.16 (Chu-Wang Theorem 55)",
            partner: "thm-4.16",
        },
        Form {
            id: "thm-4.17",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_a_dn_c_up_q,
            y_rule: "thm-4.17-Y-q",
            y: t417_y_q,
            s2: cmp_a_up_c_up2_e_up2_b_up2_d_up2_q,
            z_rule: "thm-4.17-Z-q",
            z: Some(t417_z_q),
            anchor: "Theorem 4.17",
            partner: "corl-thm-4.17",
        },
        Form {
            id: "corl-thm-4.17",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_a_dn_c_up_cl,
            y_rule: "thm-4.17-Y-cl",
            y: t417_y_cl,
            s2: cmp_a_up_c_up2_e_up2_b_up2_d_up2_cl,
            z_rule: "thm-4.17-Z-cl",
            z: Some(t417_z_cl),
            anchor: "Corollary to Theorem 4.17 (Chu-Wang Theorem 57)",
            partner: "thm-4.17",
        },
        Form {
            id: "thm-4.18",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_a_up_c_dn_q,
            y_rule: "thm-4.18-Y-q",
            y: t418_y_q,
            s2: cmp_c_dn_e_dn_b_dn_d_dn_q,
            z_rule: "thm-4.18-Z-q",
            z: Some(t418_z_q),
            anchor: "Theorem 4.18",
            partner: "corl-thm-4.18",
        },
        Form {
            id: "corl-thm-4.18",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_a_up_c_dn_cl,
            y_rule: "thm-4.18-Y-cl",
            y: t418_y_cl,
            s2: cmp_c_dn_e_dn_b_dn_d_dn_cl,
            z_rule: "thm-4.18-Z-cl",
            z: Some(t418_z_cl),
            anchor: "Corollary to Theorem 4.18 (Chu-Wang Theorem 60)",
            partner: "thm-4.18",
        },
        Form {
            id: "thm-4.19",
            family: Family::ThreeTerm,
            lhs: lhs_q,
            s1: cmp_a_up_c_dn_q,
            y_rule: "thm-4.19-Y-q",
            y: t419_y_q,
            s2: cmp_a_up_q,
            z_rule: "thm-4.19-Z-q",
            z: Some(t419_z_q),
            anchor: "Theorem 4.19",
            partner: "corl-thm-4.19",
        },
        Form {
            id: "corl-thm-4.19",
            family: Family::CorollaryClassical,
            lhs: lhs_cl,
            s1: cmp_a_up_c_dn_cl,
            y_rule: "thm-4.19-Y-cl",
            y: t419_y_cl,
            s2: cmp_a_up_cl,
            z_rule: "thm-4.19-Z-cl",
            z: Some(t419_z_cl),
            anchor: "Corollary to Theorem 4.19 (Chu-Wang Theorem 61)",
            partner: "thm-4.19",
        },
    ];
    forms
        .into_iter()
        .map(|f| Relation {
            id: f.id,
            family: f.family,
            free_params: ABCDE,
            extra_constraints: Vec::new(),
            lhs: f.lhs,
            rhs: vec![
                RelationTerm::series(Factor::rational(f.y_rule, f.y), f.s1),
                RelationTerm::series(
                    match f.z {
                        Some(z) => Factor::rational(f.z_rule, z),
                        None => Factor::unity(),
                    },
                    f.s2,
                ),
            ],
            paper_anchor: f.anchor,
            notes: match f.id {
                "corl-thm-4.3" => {
                    Some("sign of the first coefficient corrected relative to Chu-Wang Theorem 23")
                }
                "corl-thm-4.8" => Some(
                    "parameter e in the last series corrected from the e+1 printed in \
                     Chu-Wang Theorem 35; the same change applies to their Proposition 36 \
                     and Corollary 37",
                ),
                _ => None,
            },
            derivation: None,
            classical_partner: Some(f.partner),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::{find, instantiate, test_support};
    use super::*;
    use crate::series::convergence_margin;

    const Q_IDS: &[&str] = &[
        "thm-4.1", "thm-4.2", "thm-4.3", "thm-4.4", "thm-4.5", "thm-4.6", "thm-4.7", "thm-4.8",
        "thm-4.9", "thm-4.10", "thm-4.11", "thm-4.12", "thm-4.13", "thm-4.14", "thm-4.15",
        "thm-4.16", "thm-4.17", "thm-4.18", "thm-4.19",
    ];
    const CL_IDS: &[&str] = &[
        "corl-thm-4.1",
        "corl-thm-4.2",
        "corl-thm-4.3",
        "corl-thm-4.4",
        "corl-thm-4.5",
        "corl-thm-4.6",
        "corl-thm-4.7",
        "corl-thm-4.8",
        "corl-thm-4.9",
        "corl-thm-4.10",
        "corl-thm-4.11",
        "corl-thm-4.12",
        "corl-thm-4.13",
        "corl-thm-4.14",
        "corl-thm-4.15",
        "corl-thm-4.16",
        "corl-thm-4.17",
        "corl-thm-4.18",
        "corl-thm-4.19",
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
    fn classical_companions_mirror_their_q_side_argument_steps() {
        // Cross-side transcription guard. On the q side a companion's
        // argument is bd/(ace) divided by the net base-power s of its shifts
        // (s ∈ {0, 1} here); its classical mirror must drop the decay
        // exponent by exactly the same s. Comparing the two sides catches a
        // mistyped shift in either one.
        let policy = PrecisionPolicy::standard();
        for (qid, cid) in Q_IDS.iter().zip(CL_IDS) {
            let qrel = find(qid).unwrap();
            let crel = find(cid).unwrap();
            let qp = test_support::admissible_point(qrel, &policy, 5);
            let cp = test_support::admissible_point(crel, &policy, 5);
            let q = qp.q().re_f64();
            let z_lhs = (qrel.lhs)(&qp, &policy).unwrap().argument;
            let m_lhs = convergence_margin(&(crel.lhs)(&cp, &policy).unwrap());
            for (qterm, cterm) in qrel.rhs.iter().zip(&crel.rhs) {
                let zq = (qterm.series.unwrap())(&qp, &policy).unwrap().argument;
                let step = (&z_lhs / &zq).abs_f64().ln() / q.ln();
                let drop =
                    m_lhs - convergence_margin(&(cterm.series.unwrap())(&cp, &policy).unwrap());
                assert!(
                    step > -0.01 && step < 1.01 && (step - step.round()).abs() < 1e-6,
                    "{qid}: argument step {step} is not 0 or 1"
                );
                assert!(
                    (drop - step.round()).abs() < 1e-9,
                    "{cid}: exponent drop {drop} does not mirror argument step {step}"
                );
            }
        }
    }
}
