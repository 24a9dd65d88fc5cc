//! Randomized and exhaustive property suites over generated instances.
//!
//! Every suite asserts a proven statement, so any failure is a bug. Trials
//! run in parallel but each one is a pure function of `(seed, trial)`, and
//! reports are assembled in trial order: the same config always produces
//! the same report bytes.

pub mod conditions;
pub mod instances;

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::causal::CausalSpace;
use crate::error::{Error, Result};
use crate::json;
use crate::measure::Measure;
use crate::rational::{self, Rational};
use crate::timefn::{self, Condition4Mode, Condition5Mode, HalfLine, DEFAULT_ENUMERATION_BOUND};
use crate::transport::{
    compose_couplings, decide_k_causal, strassen_check, verify_coupling, Certificate, Coupling, DEFAULT_ORACLE_BOUND,
};

pub use conditions::{condition2_check, condition3_check, implication_chain_trial, ChainVerdict};
pub use instances::{corpus, random_instance, trial_rng, trial_seed, Instance, MEASURE_DENOMINATOR};

pub const DEFAULT_SEED: u64 = 7;
pub const DEFAULT_TRIALS: usize = 200;
pub const DEFAULT_MAX_EVENTS: usize = 7;
pub const CLOSEDNESS_STEPS: usize = 10;
const SAMPLED_TIME_FUNCTIONS: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Closedness,
    Transitivity,
    ConditionChain,
    OracleAgreement,
    UpsetComplements,
    TimeFunctionOrder,
    HalfLines,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Closedness,
        Suite::Transitivity,
        Suite::ConditionChain,
        Suite::OracleAgreement,
        Suite::UpsetComplements,
        Suite::TimeFunctionOrder,
        Suite::HalfLines,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Closedness => "prop2-closedness",
            Suite::Transitivity => "prop2-transitivity",
            Suite::ConditionChain => "thm3-chain",
            Suite::OracleAgreement => "thm4-oracle",
            Suite::UpsetComplements => "lemma6",
            Suite::TimeFunctionOrder => "minguzzi",
            Suite::HalfLines => "remark8",
        }
    }

    /// Largest space the suite's exhaustive checkers accept.
    pub fn max_events_bound(self) -> usize {
        match self {
            Suite::ConditionChain | Suite::TimeFunctionOrder | Suite::HalfLines => DEFAULT_ENUMERATION_BOUND,
            _ => DEFAULT_ORACLE_BOUND,
        }
    }

    /// Parses a comma-separated list; `all` selects every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        if out.is_empty() {
            return Err(Error::UnknownSuite(s.to_string()));
        }
        Ok(out)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Suite {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialConfig {
    pub suites: Vec<Suite>,
    pub trials: usize,
    pub seed: u64,
    pub max_events: usize,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            suites: Suite::ALL.to_vec(),
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            max_events: DEFAULT_MAX_EVENTS,
        }
    }
}

/// Everything needed to replay one trial.
#[derive(Debug, Clone, Serialize)]
pub struct FailureBundle {
    pub trial: usize,
    pub trial_seed: u64,
    pub detail: String,
    pub spacetime: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub name: Suite,
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<FailureBundle>,
    /// Noteworthy but not failing, e.g. sampled time functions that miss a
    /// violation the exact checkers find.
    pub curiosities: Vec<FailureBundle>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TrialReport {
    pub config: TrialConfig,
    pub suites: Vec<SuiteReport>,
}

impl TrialReport {
    pub fn total_failed(&self) -> usize {
        self.suites.iter().map(|s| s.failed).sum()
    }

    pub fn suite(&self, suite: Suite) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == suite)
    }

    pub fn to_json(&self) -> String {
        json::to_pretty(self)
    }
}

#[derive(Default)]
struct TrialOutcome {
    failure: Option<String>,
    curiosity: Option<String>,
    space: Option<CausalSpace>,
    measures: Option<(Measure, Measure)>,
}

impl TrialOutcome {
    fn on(space: &CausalSpace) -> Self {
        TrialOutcome {
            space: Some(space.clone()),
            ..Default::default()
        }
    }

    fn with_measures(mut self, mu: &Measure, nu: &Measure) -> Self {
        self.measures = Some((mu.clone(), nu.clone()));
        self
    }

    fn fail(&mut self, why: impl Into<String>) {
        if self.failure.is_none() {
            self.failure = Some(why.into());
        }
    }

    fn check(&mut self, ok: bool, why: impl FnOnce() -> String) {
        if !ok {
            self.fail(why());
        }
    }
}

pub fn run_suite(config: &TrialConfig) -> Result<TrialReport> {
    if config.trials == 0 {
        return Err(Error::TrialConstruction("trials must be positive".into()));
    }
    if config.max_events == 0 {
        return Err(Error::TrialConstruction("max_events must be positive".into()));
    }
    for suite in &config.suites {
        if config.max_events > suite.max_events_bound() {
            return Err(Error::TooManyEvents {
                n: config.max_events,
                bound: suite.max_events_bound(),
            });
        }
    }
    let suites = config
        .suites
        .iter()
        .map(|&suite| run_one(suite, config))
        .collect();
    Ok(TrialReport {
        config: config.clone(),
        suites,
    })
}

fn run_one(suite: Suite, config: &TrialConfig) -> SuiteReport {
    let outcomes: Vec<TrialOutcome> = (0..config.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(config.seed, t);
            let inst = random_instance(&mut rng, config.max_events);
            let result = match suite {
                Suite::OracleAgreement => oracle_trial(&inst),
                Suite::ConditionChain => chain_trial(&inst),
                Suite::HalfLines => half_line_trial(&inst),
                Suite::UpsetComplements => complement_trial(&inst.space),
                Suite::TimeFunctionOrder => time_order_trial(&inst.space),
                Suite::Transitivity => transitivity_trial(&mut rng, &inst.space),
                Suite::Closedness => closedness_suite_trial(&mut rng, &inst.space),
            };
            result.unwrap_or_else(|e| {
                let mut o = TrialOutcome::on(&inst.space).with_measures(&inst.mu, &inst.nu);
                o.fail(format!("error: {e}"));
                o
            })
        })
        .collect();

    let mut report = SuiteReport {
        name: suite,
        trials: config.trials,
        passed: 0,
        failed: 0,
        failures: Vec::new(),
        curiosities: Vec::new(),
    };
    for (t, o) in outcomes.into_iter().enumerate() {
        let bundle = |detail: &str| FailureBundle {
            trial: t,
            trial_seed: trial_seed(config.seed, t),
            detail: detail.to_string(),
            spacetime: o
                .space
                .as_ref()
                .map(|s| serde_json::to_value(json::SpacetimeDoc::explicit(s.events(), s.raw(), false)).expect("serializable"))
                .unwrap_or(Value::Null),
            mu: o.measures.as_ref().map(|(m, _)| json::measure_to_value(m)),
            nu: o.measures.as_ref().map(|(_, n)| json::measure_to_value(n)),
        };
        if let Some(c) = &o.curiosity {
            report.curiosities.push(bundle(c));
        }
        match &o.failure {
            None => report.passed += 1,
            Some(f) => {
                report.failed += 1;
                report.failures.push(bundle(f));
            }
        }
    }
    report
}

fn oracle_trial(inst: &Instance) -> Result<TrialOutcome> {
    let Instance { space, mu, nu } = inst;
    let mut o = TrialOutcome::on(space).with_measures(mu, nu);
    let cert = decide_k_causal(space, mu, nu)?;
    let oracle = strassen_check(space, mu, nu, DEFAULT_ORACLE_BOUND)?;
    o.check(cert.is_feasible() == oracle.holds, || {
        format!("flow says {}, subset oracle says holds={}", cert.verdict(), oracle.holds)
    });
    o.check(cert.is_sound(space, mu, nu), || "certificate failed re-verification".into());
    if let Some(v) = &oracle.violation {
        o.check(v.mu_side != v.nu_side, || "oracle reported a non-strict violation".into());
    }
    Ok(o)
}

fn chain_trial(inst: &Instance) -> Result<TrialOutcome> {
    let Instance { space, mu, nu } = inst;
    let mut o = TrialOutcome::on(space).with_measures(mu, nu);
    let v = implication_chain_trial(space, mu, nu)?;
    let broken = v.broken_links();
    o.check(broken.is_empty(), || format!("verdicts {:?} break {}", v.as_array(), broken.join(", ")));
    let sampled = timefn::condition5_check(
        space,
        mu,
        nu,
        Condition5Mode::Sampled {
            samples: SAMPLED_TIME_FUNCTIONS,
            seed: trial_seed(0, space.len()),
        },
    )?;
    o.check(!(v.integrals && !sampled), || "sampled time function contradicts exact condition 5".into());
    if sampled && !v.coupling {
        o.curiosity = Some("sampled time functions satisfy condition 5 although condition 1 fails".into());
    }
    let cert = decide_k_causal(space, mu, nu)?;
    o.check(cert.is_sound(space, mu, nu), || "certificate failed re-verification".into());
    Ok(o)
}

fn half_line_trial(inst: &Instance) -> Result<TrialOutcome> {
    let Instance { space, mu, nu } = inst;
    let mut o = TrialOutcome::on(space).with_measures(mu, nu);
    let modes = [
        Condition4Mode::Exhaustive {
            bound: DEFAULT_ENUMERATION_BOUND,
        },
        Condition4Mode::Sampled {
            samples: SAMPLED_TIME_FUNCTIONS,
            seed: 1,
        },
    ];
    for mode in modes {
        let open = timefn::condition4_check(space, mu, nu, HalfLine::Open, mode)?;
        let closed = timefn::condition4_check(space, mu, nu, HalfLine::Closed, mode)?;
        o.check(open == closed, || format!("{mode:?}: open half-lines {open}, closed {closed}"));
    }
    Ok(o)
}

fn complement_trial(space: &CausalSpace) -> Result<TrialOutcome> {
    let mut o = TrialOutcome::on(space);
    let n = space.len();
    for mask in 0u64..1 << n {
        let x = crate::bits::BitSet::from_mask(n, mask);
        if !space.complement_duality_check(&x) {
            o.fail(format!("complement equivalence fails for {:?}", space.events().labels_of(&x)));
            break;
        }
    }
    Ok(o)
}

fn time_order_trial(space: &CausalSpace) -> Result<TrialOutcome> {
    let mut o = TrialOutcome::on(space);
    let n = space.len();
    for p in 0..n {
        for q in 0..n {
            let by_time = timefn::ordered_by_every_time_function(space, p, q, DEFAULT_ENUMERATION_BOUND)?;
            if by_time != space.precedes(p, q) {
                let e = space.events();
                o.fail(format!("pair ({}, {}): K+ says {}, time functions say {by_time}", e.label(p), e.label(q), space.precedes(p, q)));
                return Ok(o);
            }
        }
    }
    Ok(o)
}

fn random_measure<R: Rng>(rng: &mut R, space: &CausalSpace) -> Measure {
    instances::units_to_measure(space, &instances::random_units(rng, space.len()))
}

fn pushed<R: Rng>(rng: &mut R, space: &CausalSpace, mu: &Measure) -> Measure {
    let d = rational::int(MEASURE_DENOMINATOR as i64);
    let units: Vec<u32> = mu
        .weights()
        .iter()
        .map(|w| u32::try_from((w * &d).to_integer()).expect("weights in (1/24)Z"))
        .collect();
    instances::units_to_measure(space, &instances::push_forward(rng, space, &units))
}

fn transitivity_trial<R: Rng>(rng: &mut R, space: &CausalSpace) -> Result<TrialOutcome> {
    let mu = random_measure(rng, space);
    let nu = pushed(rng, space, &mu);
    let rho = pushed(rng, space, &nu);
    let mut o = TrialOutcome::on(space).with_measures(&mu, &rho);

    let reflexive = decide_k_causal(space, &mu, &mu)?;
    o.check(reflexive.is_feasible(), || "mu does not precede itself".into());
    o.check(verify_coupling(space, &Coupling::identity(&mu), &mu, &mu), || "identity coupling rejected".into());

    let (Some(w1), Some(w2)) = (
        decide_k_causal(space, &mu, &nu)?.witness().cloned(),
        decide_k_causal(space, &nu, &rho)?.witness().cloned(),
    ) else {
        return Err(Error::TrialConstruction("push-forward target was not preceded".into()));
    };
    let glued = compose_couplings(&w1, &w2)?;
    o.check(verify_coupling(space, &glued, &mu, &rho), || "glued coupling is not a K-causal coupling".into());
    o.check(decide_k_causal(space, &mu, &rho)?.is_feasible(), || "mu does not precede rho".into());
    Ok(o)
}

fn closedness_suite_trial<R: Rng>(rng: &mut R, space: &CausalSpace) -> Result<TrialOutcome> {
    let mu = random_measure(rng, space);
    let nu = pushed(rng, space, &mu);
    let mu2 = random_measure(rng, space);
    let nu2 = pushed(rng, space, &mu2);
    let mut o = TrialOutcome::on(space).with_measures(&mu, &nu);
    let ok = closedness_trial(space, &mu, &nu, &mu2, &nu2, CLOSEDNESS_STEPS)?;
    o.check(ok, || "convex interpolation sequence lost feasibility or TV decay".into());
    Ok(o)
}

/// Builds `μ_n = (1 − 1/n)μ + (1/n)μ'` and likewise `ν_n` for
/// `n = 1..=steps`, and checks that every `μ_n ⪯_K ν_n` (by decision and
/// by the interpolated witness), that `tv(μ_n, μ) = tv(μ', μ)/n` exactly
/// and is non-increasing, and that the limit pair `(μ, ν)` is feasible.
pub fn closedness_trial(
    space: &CausalSpace,
    mu: &Measure,
    nu: &Measure,
    mu2: &Measure,
    nu2: &Measure,
    steps: usize,
) -> Result<bool> {
    let witness = |a: &Measure, b: &Measure| -> Result<Coupling> {
        match decide_k_causal(space, a, b)? {
            Certificate::Feasible { witness } => Ok(witness),
            Certificate::Infeasible { .. } => Err(Error::TrialConstruction("endpoint pair is not K-causally ordered".into())),
        }
    };
    let w = witness(mu, nu)?;
    let w2 = witness(mu2, nu2)?;
    let base_mu = mu2.tv_distance(mu)?;
    let base_nu = nu2.tv_distance(nu)?;
    let mut previous: Option<Rational> = None;
    for n in 1..=steps.max(1) {
        let inv = rational::ratio(1, n as i64);
        let keep = Rational::one() - &inv;
        let mu_n = Measure::convex_combination(&keep, mu, mu2)?;
        let nu_n = Measure::convex_combination(&keep, nu, nu2)?;
        let cert = decide_k_causal(space, &mu_n, &nu_n)?;
        if !cert.is_feasible() || !cert.is_sound(space, &mu_n, &nu_n) {
            return Ok(false);
        }
        let mixed = Coupling::convex_combination(&keep, &w, &w2)?;
        if !verify_coupling(space, &mixed, &mu_n, &nu_n) {
            return Ok(false);
        }
        let tv = mu_n.tv_distance(mu)?;
        if tv != &base_mu * &inv || nu_n.tv_distance(nu)? != &base_nu * &inv {
            return Ok(false);
        }
        if previous.as_ref().is_some_and(|p| tv > *p) {
            return Ok(false);
        }
        previous = Some(tv);
    }
    Ok(decide_k_causal(space, mu, nu)?.is_feasible())
}
