//! Randomized verification sweeps: seeded witness generation, multi-method
//! runs over a range of m, and machine-readable reports.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groebner::{initial_ideal_verdict, TermOrder};
use crate::oracle::low_degree_member_verdict;
use crate::phi::phi_iso_verdict;
use crate::poly::{monomials_of_wt_weight, Monomial, ParamSet, Ring, WeightedPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Method {
    Phi,
    Direct,
    Groebner,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Phi => "phi",
            Method::Direct => "direct",
            Method::Groebner => "groebner",
        }
    }

    pub fn parse(s: &str) -> Result<Vec<Method>> {
        match s {
            "phi" => Ok(vec![Method::Phi]),
            "direct" => Ok(vec![Method::Direct]),
            "groebner" => Ok(vec![Method::Groebner]),
            "all" => Ok(vec![Method::Phi, Method::Direct, Method::Groebner]),
            other => Err(Error::Parse(format!("unknown method '{}'", other))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub m_min: u32,
    pub m_max: u32,
    pub field: FieldSpec,
    pub seed: u64,
    pub trials: u32,
    pub methods: Vec<Method>,
    /// Worker thread count; None uses the rayon default.
    pub jobs: Option<usize>,
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.m_min < 2 || self.m_min > self.m_max {
            return Err(Error::Domain(format!(
                "need 2 <= m_min <= m_max, got {}..{}",
                self.m_min, self.m_max
            )));
        }
        if self.trials == 0 {
            return Err(Error::Domain("trials must be >= 1".to_string()));
        }
        if self.methods.is_empty() {
            return Err(Error::Domain("at least one method required".to_string()));
        }
        Ok(())
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct ConfigEcho {
    pub m_min: u32,
    pub m_max: u32,
    pub prime: Option<u64>,
    pub rationals: bool,
    pub seed: u64,
    pub trials: u32,
    pub methods: Vec<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct TrialRecord {
    pub m: u32,
    pub trial: u32,
    pub seed: u64,
    pub prime: Option<u64>,
    pub g: String,
    /// method name -> GOOD verdict
    pub verdicts: BTreeMap<String, bool>,
    pub singular_weights: Vec<u32>,
    pub block_dims: Vec<(u32, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_low_degree_member: Option<String>,
    pub elapsed_ms: u64,
}

impl TrialRecord {
    pub fn good(&self) -> bool {
        self.verdicts.values().all(|v| *v)
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct Summary {
    pub verified_m: Vec<u32>,
    pub inconclusive_m: Vec<u32>,
}

#[derive(Serialize, Clone, Debug)]
pub struct VerificationReport {
    pub config: ConfigEcho,
    pub records: Vec<TrialRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_verified(&self) -> bool {
        self.summary.inconclusive_m.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("m,trial,seed,prime,good,singular_weights,elapsed_ms,g\n");
        for r in &self.records {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.m,
                r.trial,
                r.seed,
                r.prime.map_or_else(|| "rational".to_string(), |p| p.to_string()),
                r.good(),
                r.singular_weights
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(";"),
                r.elapsed_ms,
                r.g
            ));
        }
        out
    }
}

/// Random weight-3m polynomial, monic in z^m, every other term x^a y^b z^c
/// with c < m and a+b <= 3(m-1); the x^{3(m-1)}z coefficient is resampled
/// until nonzero. Deterministic in (m, field, seed).
pub fn random_g(m: u32, field: FieldSpec, seed: u64) -> Result<WeightedPolynomial> {
    if m < 2 {
        return Err(Error::Domain(format!("m must be >= 2, got {}", m)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (m as u64).wrapping_mul(0x9e3779b97f4a7c15));
    let mut g = WeightedPolynomial::zero(Ring::Xyz, field);
    g.add_term(Monomial::new3(0, 0, m), field.one());
    let pivot = Monomial::new3(3 * (m - 1), 0, 1);
    for mono in monomials_of_wt_weight(3 * m) {
        let [a, b, c, _] = mono.exps;
        if c >= m || a + b > 3 * (m - 1) {
            continue;
        }
        let coeff = if mono == pivot {
            field.random_nonzero(&mut rng)
        } else {
            field.random(&mut rng)
        };
        g.add_term(mono, coeff);
    }
    Ok(g)
}

fn run_trial(
    m: u32,
    trial: u32,
    trial_seed: u64,
    field: FieldSpec,
    methods: &[Method],
) -> Result<TrialRecord> {
    let params = ParamSet::new(m)?;
    let g = random_g(m, field, trial_seed)?;
    let started = Instant::now();

    let mut verdicts = BTreeMap::new();
    let mut singular_weights = Vec::new();
    let mut block_dims = Vec::new();
    let mut witness = None;
    for method in methods {
        let good = match method {
            Method::Phi => {
                let v = phi_iso_verdict(&g, &params)?;
                singular_weights = v.singular_weights.clone();
                block_dims = v.block_dims.clone();
                v.good
            }
            Method::Direct => {
                let v = low_degree_member_verdict(&g, &params)?;
                if singular_weights.is_empty() {
                    singular_weights = v.hit_weights.clone();
                }
                if let Some(w) = &v.witness {
                    witness = Some(w.to_string());
                }
                !v.bad
            }
            Method::Groebner => initial_ideal_verdict(&g, &params, TermOrder::GradedLex)?.good,
        };
        verdicts.insert(method.name().to_string(), good);
    }

    let distinct: Vec<bool> = {
        let mut v: Vec<bool> = verdicts.values().copied().collect();
        v.dedup();
        v
    };
    if distinct.len() > 1 {
        return Err(Error::MethodDisagreement(format!(
            "m={} trial={} seed={} g={} verdicts={:?} singular_weights={:?}",
            m, trial, trial_seed, g, verdicts, singular_weights
        )));
    }

    Ok(TrialRecord {
        m,
        trial,
        seed: trial_seed,
        prime: match field {
            FieldSpec::Prime(p) => Some(p),
            FieldSpec::Rational => None,
        },
        g: g.to_string(),
        verdicts,
        singular_weights,
        block_dims,
        witness_low_degree_member: witness,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// Sweep the configured m range. Every (m, trial) pair runs independently in
/// parallel; records come back sorted by (m, trial). A method disagreement on
/// any trial is a hard error.
pub fn run_verify(config: &VerifyConfig) -> Result<VerificationReport> {
    config.validate()?;
    let pairs: Vec<(u32, u32)> = (config.m_min..=config.m_max)
        .flat_map(|m| (0..config.trials).map(move |t| (m, t)))
        .collect();

    let work = || -> Result<Vec<TrialRecord>> {
        pairs
            .par_iter()
            .map(|&(m, trial)| {
                let trial_seed = config.seed.wrapping_add((trial as u64) * 0x2545f4914f6cdd1d);
                run_trial(m, trial, trial_seed, config.field, &config.methods)
            })
            .collect()
    };
    let mut records = match config.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::Domain(format!("thread pool: {}", e)))?
            .install(work),
        None => work(),
    }?;
    records.sort_by_key(|r| (r.m, r.trial));

    let mut verified_m = Vec::new();
    let mut inconclusive_m = Vec::new();
    for m in config.m_min..=config.m_max {
        if records.iter().any(|r| r.m == m && r.good()) {
            verified_m.push(m);
        } else {
            inconclusive_m.push(m);
        }
    }

    Ok(VerificationReport {
        config: ConfigEcho {
            m_min: config.m_min,
            m_max: config.m_max,
            prime: match config.field {
                FieldSpec::Prime(p) => Some(p),
                FieldSpec::Rational => None,
            },
            rationals: matches!(config.field, FieldSpec::Rational),
            seed: config.seed,
            trials: config.trials,
            methods: config.methods.iter().map(|m| m.name().to_string()).collect(),
        },
        records,
        summary: Summary {
            verified_m,
            inconclusive_m,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> FieldSpec {
        FieldSpec::prime(32003).unwrap()
    }

    #[test]
    fn random_g_contract() {
        for m in 2..=6 {
            let g = random_g(m, f(), 7).unwrap();
            assert!(g.is_weight_homogeneous(3 * m));
            let monic = g
                .terms()
                .find(|(mono, _)| mono.exps == [0, 0, m, 0])
                .expect("z^m present");
            assert!(f().is_one(monic.1));
            for (mono, c) in g.terms() {
                let [a, b, cc, _] = mono.exps;
                assert!(cc <= m);
                if cc < m {
                    assert!(a + b <= 3 * (m - 1));
                }
                assert!(!f().is_zero(c));
            }
            let pivot = g
                .terms()
                .find(|(mono, _)| mono.exps == [3 * (m - 1), 0, 1, 0]);
            assert!(pivot.is_some(), "x^{{3(m-1)}}z coefficient nonzero");
        }
    }

    #[test]
    fn random_g_deterministic() {
        let g1 = random_g(4, f(), 99).unwrap();
        let g2 = random_g(4, f(), 99).unwrap();
        assert_eq!(g1.to_string(), g2.to_string());
        let g3 = random_g(4, f(), 100).unwrap();
        assert_ne!(g1.to_string(), g3.to_string());
    }

    #[test]
    fn m2_support_matches_example() {
        let g = random_g(2, f(), 1).unwrap();
        for (mono, _) in g.terms() {
            let allowed = [[0, 0, 2, 0], [3, 0, 1, 0], [1, 1, 1, 0], [0, 3, 0, 0]];
            assert!(allowed.contains(&mono.exps), "unexpected {:?}", mono.exps);
        }
    }

    #[test]
    fn sweep_small_range_verifies() {
        let cfg = VerifyConfig {
            m_min: 2,
            m_max: 4,
            field: f(),
            seed: 3,
            trials: 2,
            methods: vec![Method::Phi, Method::Direct],
            jobs: Some(2),
        };
        let report = run_verify(&cfg).unwrap();
        assert!(report.all_verified());
        assert_eq!(report.records.len(), 6);
        assert_eq!(report.summary.verified_m, vec![2, 3, 4]);
        // records sorted, JSON round-trips, CSV has a row per record
        let pairs: Vec<(u32, u32)> = report.records.iter().map(|r| (r.m, r.trial)).collect();
        let mut sorted = pairs.clone();
        sorted.sort();
        assert_eq!(pairs, sorted);
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json["config"]["prime"], 32003);
        assert_eq!(report.to_csv().lines().count(), 7);
    }

    #[test]
    fn report_deterministic_modulo_timing() {
        let cfg = VerifyConfig {
            m_min: 2,
            m_max: 3,
            field: f(),
            seed: 11,
            trials: 2,
            methods: vec![Method::Phi],
            jobs: None,
        };
        let strip = |r: VerificationReport| {
            let mut r = r;
            for rec in &mut r.records {
                rec.elapsed_ms = 0;
            }
            r.to_json()
        };
        assert_eq!(strip(run_verify(&cfg).unwrap()), strip(run_verify(&cfg).unwrap()));
    }

    #[test]
    fn config_validation() {
        let bad = VerifyConfig {
            m_min: 1,
            m_max: 3,
            field: f(),
            seed: 0,
            trials: 1,
            methods: vec![Method::Phi],
            jobs: None,
        };
        assert!(run_verify(&bad).is_err());
        let no_methods = VerifyConfig {
            m_min: 2,
            m_max: 2,
            field: f(),
            seed: 0,
            trials: 1,
            methods: vec![],
            jobs: None,
        };
        assert!(no_methods.validate().is_err());
    }

    #[test]
    fn method_parse() {
        assert_eq!(Method::parse("all").unwrap().len(), 3);
        assert_eq!(Method::parse("phi").unwrap(), vec![Method::Phi]);
        assert!(Method::parse("magic").is_err());
    }
}
