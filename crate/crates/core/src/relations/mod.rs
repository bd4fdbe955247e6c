//! The machine-readable catalog of contiguous relations.
//!
//! Every entry is a [`Relation`]: a left-hand series template, a list of
//! right-hand terms (coefficient × optional series), named constraints, and
//! provenance strings. Coefficients are hand-coded closed-form evaluation
//! rules — one small function per catalog symbol — not a formula
//! interpreter. [`instantiate`] evaluates a relation at a concrete
//! [`ParamSet`] and reports the normalized residual
//! |lhs − Σrhs| / (|lhs| + Σ|rhsᵢ| + 1).
//!
//! Catalog layout:
//! * `patterns` — the four foundational three-term relations (two
//!   equation forms each) and their classical counterparts;
//! * `two_term` — the nine two-term relations and three
//!   reduced-parameter versions, plus classical counterparts;
//! * `three_term` — the nineteen three-term relations with Y/Z
//!   coefficients, plus classical counterparts;
//! * `reductions` — the two-term specializations evaluated in closed form
//!   (infinite-product quotients on the q side, Γ-quotients classically),
//!   plus classical counterparts.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::classical;
use crate::error::{Error, Result};
use crate::scalar::{PrecisionPolicy, Scalar};
use crate::series::{self, SeriesKind, SeriesSpec, SeriesValue};

mod patterns;
mod reductions;
mod three_term;
mod two_term;

pub use patterns::{pattern_coeffs, CoefficientSet, Pattern, Side};

/// Concrete values for a relation's parameters plus the base q.
///
/// Classical entries ignore `base` (conventionally zero). The map is
/// ordered so that reports and samples serialize deterministically.
#[derive(Debug, Clone)]
pub struct ParamSet {
    pub base: Scalar,
    values: BTreeMap<&'static str, Scalar>,
}

impl ParamSet {
    pub fn new(base: Scalar) -> Self {
        Self {
            base,
            values: BTreeMap::new(),
        }
    }

    pub fn with(mut self, name: &'static str, value: Scalar) -> Self {
        self.values.insert(name, value);
        self
    }

    pub fn set(&mut self, name: &'static str, value: Scalar) {
        self.values.insert(name, value);
    }

    pub fn q(&self) -> &Scalar {
        &self.base
    }

    pub fn get(&self, name: &str) -> Result<&Scalar> {
        self.values
            .get(name)
            .ok_or_else(|| Error::DomainViolation(format!("parameter set is missing `{name}`")))
    }

    /// Borrow several parameters at once: `let [a, b] = p.take(["a", "b"])?;`
    pub fn take<const N: usize>(&self, names: [&'static str; N]) -> Result<[&Scalar; N]> {
        let mut out = [&self.base; N];
        for (slot, name) in out.iter_mut().zip(names) {
            *slot = self.get(name)?;
        }
        Ok(out)
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.values.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&'static str, &Scalar)> + '_ {
        self.values.iter().map(|(k, v)| (*k, v))
    }
}

/// How a coefficient is built, for reporting and targeted perturbation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    /// Closed-form rational expression in the parameters and q.
    Rational,
    /// Quotient of infinite q-Pochhammer products.
    QpochInfiniteRatio,
    /// Quotient of Γ values (classical side).
    GammaRatio,
    /// The constant 1.
    Unity,
}

type CoeffFn = fn(&ParamSet, &PrecisionPolicy) -> Result<Scalar>;
type SpecFn = fn(&ParamSet, &PrecisionPolicy) -> Result<SeriesSpec>;

/// One multiplicative coefficient with a stable rule identifier.
#[derive(Clone)]
pub struct Factor {
    pub kind: FactorKind,
    pub rule_id: &'static str,
    eval: CoeffFn,
}

/// Upper bound on coefficient magnitudes; larger values indicate the
/// sample sits too close to a singular surface of the coefficient.
const COEFF_MAGNITUDE_CAP: f64 = 1e8;

fn unity_rule(_: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
    Ok(policy.one())
}

impl Factor {
    pub fn unity() -> Self {
        Self {
            kind: FactorKind::Unity,
            rule_id: "unity",
            eval: unity_rule,
        }
    }

    pub fn rational(rule_id: &'static str, eval: CoeffFn) -> Self {
        Self {
            kind: FactorKind::Rational,
            rule_id,
            eval,
        }
    }

    pub fn qpoch_infinite_ratio(rule_id: &'static str, eval: CoeffFn) -> Self {
        Self {
            kind: FactorKind::QpochInfiniteRatio,
            rule_id,
            eval,
        }
    }

    pub fn gamma_ratio(rule_id: &'static str, eval: CoeffFn) -> Self {
        Self {
            kind: FactorKind::GammaRatio,
            rule_id,
            eval,
        }
    }

    /// Evaluate the coefficient, applying the perturbation hook when this
    /// factor is the `QCONTIG_MUTATE` target (see [`mutation_target`]).
    pub fn eval(&self, params: &ParamSet, policy: &PrecisionPolicy) -> Result<Scalar> {
        let mut v = (self.eval)(params, policy)?;
        let mag = v.abs_f64();
        if !v.is_finite() || mag > COEFF_MAGNITUDE_CAP {
            return Err(Error::SingularCoefficient {
                rule: self.rule_id.to_string(),
                magnitude: mag,
            });
        }
        if mutation_target()
            .map(|t| t == self.rule_id)
            .unwrap_or(false)
        {
            v *= Scalar::new(v.prec(), 1.01, 0.0);
        }
        Ok(v)
    }
}

impl std::fmt::Debug for Factor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Factor")
            .field("kind", &self.kind)
            .field("rule_id", &self.rule_id)
            .finish()
    }
}

/// Sensitivity-test hook: when the environment variable `QCONTIG_MUTATE`
/// names a coefficient rule, that coefficient is multiplied by 1.01. A
/// correct catalog must then fail verification — proving the harness is
/// not vacuous. Read once per process.
pub fn mutation_target() -> Option<&'static str> {
    static TARGET: OnceLock<Option<String>> = OnceLock::new();
    TARGET
        .get_or_init(|| {
            std::env::var("QCONTIG_MUTATE")
                .ok()
                .filter(|s| !s.is_empty())
        })
        .as_deref()
}

/// One right-hand-side term: coefficient × optional series.
#[derive(Debug, Clone)]
pub struct RelationTerm {
    pub coefficient: Factor,
    pub series: Option<SpecFn>,
}

impl RelationTerm {
    pub fn series(coefficient: Factor, series: SpecFn) -> Self {
        Self {
            coefficient,
            series: Some(series),
        }
    }

    pub fn closed_form(coefficient: Factor) -> Self {
        Self {
            coefficient,
            series: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Pattern,
    TwoTerm,
    ThreeTerm,
    Proposition,
    CorollaryClassical,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Pattern => "pattern",
            Family::TwoTerm => "two_term",
            Family::ThreeTerm => "three_term",
            Family::Proposition => "proposition",
            Family::CorollaryClassical => "corollary_classical",
        }
    }
}

/// A named admissibility predicate over a ParamSet.
#[derive(Clone)]
pub struct Constraint {
    pub name: &'static str,
    check: fn(&ParamSet, &PrecisionPolicy) -> bool,
}

impl Constraint {
    pub fn new(name: &'static str, check: fn(&ParamSet, &PrecisionPolicy) -> bool) -> Self {
        Self { name, check }
    }

    pub fn holds(&self, params: &ParamSet, policy: &PrecisionPolicy) -> bool {
        (self.check)(params, policy)
    }
}

impl std::fmt::Debug for Constraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Constraint({})", self.name)
    }
}

/// Derived-entry provenance: which parent relation this one specializes,
/// and how to rewrite this relation's parameters into the parent's.
#[derive(Clone)]
pub struct Derivation {
    pub parent_id: &'static str,
    pub substitute: fn(&ParamSet, &PrecisionPolicy) -> Result<ParamSet>,
}

impl std::fmt::Debug for Derivation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Derivation(parent = {})", self.parent_id)
    }
}

/// One catalog entry.
#[derive(Debug, Clone)]
pub struct Relation {
    pub id: &'static str,
    pub family: Family,
    pub free_params: &'static [&'static str],
    /// Entry-specific predicates, on top of the synthesized generic ones.
    pub extra_constraints: Vec<Constraint>,
    pub lhs: SpecFn,
    pub rhs: Vec<RelationTerm>,
    pub paper_anchor: &'static str,
    pub notes: Option<&'static str>,
    pub derivation: Option<Derivation>,
    /// Id of the classical counterpart (q side) or q original (classical side).
    pub classical_partner: Option<&'static str>,
}

impl Relation {
    pub fn is_classical(&self) -> bool {
        self.family == Family::CorollaryClassical
    }

    /// All constraint names, generic plus entry-specific — for listings.
    pub fn constraint_names(&self) -> Vec<String> {
        let mut names: Vec<String> = if self.is_classical() {
            vec![
                "series-parameters-regular".into(),
                format!("classical-margin>={CLASSICAL_MIN_DECAY}+shift"),
                "coefficients-regular".into(),
                "gamma-arguments-in-accuracy-box".into(),
            ]
        } else {
            vec![
                "base-in-unit-disk".into(),
                format!("series-arguments<={MAX_SERIES_ARG}"),
                "series-parameters-regular".into(),
                "coefficients-regular".into(),
            ]
        };
        names.extend(self.extra_constraints.iter().map(|c| c.name.to_string()));
        names
    }

    /// First failing constraint name at `params`, or None if admissible.
    pub fn violated_constraint(
        &self,
        params: &ParamSet,
        policy: &PrecisionPolicy,
    ) -> Option<String> {
        match self.check_generic(params, policy) {
            Ok(()) => {}
            Err(name) => return Some(name),
        }
        self.extra_constraints
            .iter()
            .find(|c| !c.holds(params, policy))
            .map(|c| c.name.to_string())
    }

    fn check_generic(
        &self,
        params: &ParamSet,
        policy: &PrecisionPolicy,
    ) -> std::result::Result<(), String> {
        if !self.is_classical() {
            let aq = params.base.abs_f64();
            if !(aq > 0.0 && aq < 1.0) || !params.base.is_finite() {
                return Err("base-in-unit-disk".into());
            }
        }
        let eval_policy = self.series_policy(policy);
        let mut specs: Vec<SeriesSpec> = Vec::with_capacity(1 + self.rhs.len());
        match (self.lhs)(params, policy) {
            Ok(s) => specs.push(s),
            Err(_) => return Err("series-parameters-regular".into()),
        }
        for term in &self.rhs {
            if let Some(build) = term.series {
                match build(params, policy) {
                    Ok(s) => specs.push(s),
                    Err(_) => return Err("series-parameters-regular".into()),
                }
            }
        }
        for spec in &specs {
            if spec.kind.is_q() {
                if spec.argument.abs_f64() > MAX_SERIES_ARG {
                    return Err(format!("series-arguments<={MAX_SERIES_ARG}"));
                }
            } else {
                let decay =
                    series::convergence_margin(spec) - if spec.kind.is_star() { 1.0 } else { 0.0 };
                if decay < CLASSICAL_MIN_DECAY {
                    return Err(format!("classical-margin>={CLASSICAL_MIN_DECAY}+shift"));
                }
            }
            if series::check_spec(spec, &eval_policy).is_err() {
                return Err("series-parameters-regular".into());
            }
        }
        for term in &self.rhs {
            if term.coefficient.eval(params, policy).is_err() {
                let name = if term.coefficient.kind == FactorKind::GammaRatio {
                    "gamma-arguments-in-accuracy-box"
                } else {
                    "coefficients-regular"
                };
                return Err(name.into());
            }
        }
        Ok(())
    }

    /// Series evaluation policy for this entry. Classical series at unit
    /// argument decay polynomially, so they get a deeper term budget and a
    /// stopping tolerance matched to the 1e−8 classical pass threshold.
    pub fn series_policy(&self, policy: &PrecisionPolicy) -> PrecisionPolicy {
        if self.is_classical() {
            let mut p = policy.clone();
            p.tol = p.tol.max(CLASSICAL_SERIES_TOL);
            p.max_terms = p.max_terms.max(CLASSICAL_SERIES_MAX_TERMS);
            p
        } else {
            policy.clone()
        }
    }
}

/// Default bound on q-side series argument moduli — tighter than the
/// convergence requirement (< 1) so runs stay fast.
pub const MAX_SERIES_ARG: f64 = 0.9;
/// Minimum polynomial decay exponent (margin, minus 1 for shifted kinds)
/// demanded of every classical series component.
pub const CLASSICAL_MIN_DECAY: f64 = 2.5;
/// Stopping tolerance used for classical series inside relations.
pub const CLASSICAL_SERIES_TOL: f64 = 1e-9;
/// Term budget for classical series inside relations. Polynomial decay plus
/// coefficient-scaled tolerances can push the stopping index well past the
/// geometric-case budget.
pub const CLASSICAL_SERIES_MAX_TERMS: usize = 100_000;
/// Largest coefficient magnitude random samplers accept. Near a coefficient
/// pole the series tolerances shrink by the same factor, so capping the
/// magnitude keeps sampled evaluations both sharp and affordable.
pub const MAX_SAMPLED_COEFF: f64 = 100.0;

/// Result of evaluating a relation at one parameter point.
#[derive(Debug, Clone)]
pub struct InstantiatedRelation {
    pub lhs_value: SeriesValue,
    pub rhs_term_values: Vec<Scalar>,
    pub residual: f64,
}

/// The full immutable catalog.
pub fn registry() -> &'static [Relation] {
    static REGISTRY: OnceLock<Vec<Relation>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut all = Vec::new();
        all.extend(patterns::entries());
        all.extend(two_term::entries());
        all.extend(three_term::entries());
        all.extend(reductions::entries());
        let mut seen = std::collections::BTreeSet::new();
        for r in &all {
            assert!(seen.insert(r.id), "duplicate relation id {}", r.id);
        }
        all
    })
}

/// Find a relation by id.
pub fn find(id: &str) -> Result<&'static Relation> {
    registry()
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownRelation(id.to_string()))
}

/// Evaluate `relation_id` at `params`: all series, all coefficients, and
/// the normalized residual.
pub fn instantiate(
    relation_id: &str,
    params: &ParamSet,
    policy: &PrecisionPolicy,
) -> Result<InstantiatedRelation> {
    let relation = find(relation_id)?;
    if let Some(predicate) = relation.violated_constraint(params, policy) {
        return Err(Error::ConstraintViolated {
            relation: relation.id.to_string(),
            predicate,
        });
    }
    let eval_policy = relation.series_policy(policy);
    let eval_one = |build: SpecFn, weight: f64, label: &str| -> Result<SeriesValue> {
        let spec = build(params, policy)?;
        // A term's contribution to the defect is its coefficient times its
        // series truncation error, so the series is summed to a tolerance
        // shrunk by the coefficient magnitude.
        let mut term_policy = eval_policy.clone();
        term_policy.tol = eval_policy.tol / weight.max(1.0);
        let value = series::eval_series(&spec, &term_policy)?;
        if !value.converged {
            return Err(Error::NotConverged {
                max_terms: term_policy.max_terms,
                context: format!("{relation_id} {label}"),
            });
        }
        Ok(value)
    };
    let lhs_value = eval_one(relation.lhs, 1.0, "lhs")?;
    let mut rhs_term_values = Vec::with_capacity(relation.rhs.len());
    for (i, term) in relation.rhs.iter().enumerate() {
        let coeff = term.coefficient.eval(params, policy)?;
        let value = match term.series {
            Some(build) => {
                let sv = eval_one(build, coeff.abs_f64(), &format!("rhs[{i}]"))?;
                &coeff * &sv.value
            }
            None => coeff,
        };
        rhs_term_values.push(value);
    }
    let mut rhs_sum = Scalar::zero(lhs_value.value.prec());
    let mut rhs_abs = 0.0f64;
    for v in &rhs_term_values {
        rhs_sum += v;
        rhs_abs += v.abs_f64();
    }
    let defect = lhs_value.value.dist(&rhs_sum);
    let residual = defect / (lhs_value.value.abs_f64() + rhs_abs + 1.0);
    Ok(InstantiatedRelation {
        lhs_value,
        rhs_term_values,
        residual,
    })
}

// ---------------------------------------------------------------------
// Shared template builders used by the section files.
// ---------------------------------------------------------------------

/// q-side ₃φ₂ template.
pub(crate) fn phi3(
    kind: SeriesKind,
    nums: [Scalar; 3],
    dens: [Scalar; 2],
    q: &Scalar,
    z: Scalar,
) -> SeriesSpec {
    SeriesSpec::new(kind, nums.to_vec(), dens.to_vec(), q.clone(), z)
}

/// Classical ₃F₂ template at unit argument.
pub(crate) fn f3(
    kind: SeriesKind,
    nums: [Scalar; 3],
    dens: [Scalar; 2],
    policy: &PrecisionPolicy,
) -> SeriesSpec {
    SeriesSpec::new(
        kind,
        nums.to_vec(),
        dens.to_vec(),
        policy.zero(),
        policy.one(),
    )
}

/// q-side ₂φ₁ template (reduced entries).
pub(crate) fn phi2(
    kind: SeriesKind,
    nums: [Scalar; 2],
    dens: [Scalar; 1],
    q: &Scalar,
    z: Scalar,
) -> SeriesSpec {
    SeriesSpec::new(kind, nums.to_vec(), dens.to_vec(), q.clone(), z)
}

/// Γ-quotient coefficient that insists on the accuracy box.
pub(crate) fn gamma_quotient_strict(
    numerators: Vec<Scalar>,
    denominators: Vec<Scalar>,
    policy: &PrecisionPolicy,
) -> Result<Scalar> {
    let g = classical::gamma_ratio(
        &classical::GammaRatioSpec {
            numerators,
            denominators,
        },
        policy,
    )?;
    if g.low_accuracy {
        return Err(Error::DomainViolation(
            "gamma-quotient argument outside the accuracy box".into(),
        ));
    }
    Ok(g.value)
}

/// Deterministic admissible-point search shared by the section files' tests.
#[cfg(test)]
pub(crate) mod test_support {
    use super::*;

    /// One parameter point `rel` accepts, deterministically in `seed` —
    /// the first entry of the verification harness's sample stream.
    /// Panics if the rejection budget runs out; for catalog entries that
    /// should never happen and would indicate an over-tight constraint.
    pub(crate) fn admissible_point(
        rel: &Relation,
        policy: &PrecisionPolicy,
        seed: u64,
    ) -> ParamSet {
        let mut batch = crate::verify::sample_params(rel, seed, 1, policy)
            .unwrap_or_else(|e| panic!("no admissible point for {}: {e}", rel.id));
        batch.points.pop().expect("requested one point")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_census() {
        let reg = registry();
        let q_side = reg.iter().filter(|r| !r.is_classical()).count();
        let classical = reg.iter().filter(|r| r.is_classical()).count();
        assert!(q_side >= 60, "q-side entries: {q_side}");
        assert!(classical >= 40, "classical entries: {classical}");
        for r in reg {
            assert!(!r.paper_anchor.is_empty(), "{} lacks an anchor", r.id);
            assert!(
                !r.constraint_names().is_empty(),
                "{} lacks constraints",
                r.id
            );
            assert!(!r.rhs.is_empty(), "{} has no right-hand side", r.id);
        }
    }

    #[test]
    fn family_counts() {
        let reg = registry();
        let count = |f: Family, classical: bool| {
            reg.iter()
                .filter(|r| r.family == f && r.is_classical() == classical)
                .count()
        };
        assert_eq!(count(Family::Pattern, false), 8);
        assert_eq!(count(Family::TwoTerm, false), 9);
        assert_eq!(count(Family::ThreeTerm, false), 19);
        assert_eq!(count(Family::Proposition, false), 27);
        let classical = reg.iter().filter(|r| r.is_classical()).count();
        assert_eq!(classical, 63);
    }

    #[test]
    fn unknown_relation_is_an_error() {
        let p = PrecisionPolicy::standard();
        let params = ParamSet::new(p.real(0.5));
        assert!(matches!(
            instantiate("nope", &params, &p),
            Err(Error::UnknownRelation(_))
        ));
    }

    #[test]
    fn partners_resolve_both_ways() {
        for r in registry() {
            if let Some(partner) = r.classical_partner {
                let other = find(partner)
                    .unwrap_or_else(|_| panic!("{}'s partner {partner} missing", r.id));
                assert_eq!(
                    other.classical_partner,
                    Some(r.id),
                    "partner link {} ↔ {partner} is not symmetric",
                    r.id
                );
                assert_ne!(r.is_classical(), other.is_classical());
            }
        }
    }

    #[test]
    fn derivations_resolve() {
        for r in registry() {
            if let Some(d) = &r.derivation {
                assert!(
                    find(d.parent_id).is_ok(),
                    "{}'s parent {} missing",
                    r.id,
                    d.parent_id
                );
            }
        }
    }
}
