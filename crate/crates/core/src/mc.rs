//! Monte Carlo estimation of the period integral over Feynman parameters.
//!
//! Both samplers draw from a family indexed by a tail exponent `beta`.
//! `beta = 1` is the plain uniform draw (normalized exponentials on the
//! simplex, `alpha = u / (1 - u)` in the affine gauge). Near the boundary
//! `1 / Psi^2` blows up fast enough that the plain estimators have infinite
//! variance already for K4, so the defaults put more samples close to the
//! coordinate hyperplanes and reweight them: `beta = 1 / (2h - 1)` on the
//! simplex and `beta = 1 / h` in the affine gauge, where a smaller exponent
//! also overweights the region of large coordinates.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::kirchhoff::PsiEvaluator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sampler {
    /// Points on the simplex `sum alpha = 1`.
    Simplex,
    /// Last edge fixed to 1, the others on `(0, inf)`.
    Affine,
}

impl Sampler {
    pub fn tag(self) -> &'static str {
        match self {
            Sampler::Simplex => "simplex",
            Sampler::Affine => "affine",
        }
    }

    pub fn default_tail_exponent(self, loops: usize) -> f64 {
        match self {
            Sampler::Simplex => 1.0 / (2 * loops - 1) as f64,
            Sampler::Affine => 1.0 / loops as f64,
        }
    }
}

impl fmt::Display for Sampler {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Sampler {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "simplex" | "simplex-uniform" => Ok(Sampler::Simplex),
            "affine" | "affine-gauge" => Ok(Sampler::Affine),
            other => Err(Error::InvalidParameter(format!(
                "unknown sampler {other:?}; expected simplex or affine"
            ))),
        }
    }
}

pub const DEFAULT_MC_MAX_EDGES: usize = 14;

#[derive(Clone, Debug, PartialEq)]
pub struct McConfig {
    pub samples: u64,
    pub seed: u64,
    pub workers: u32,
    pub sampler: Sampler,
    pub batches: u32,
    /// `None` picks `Sampler::default_tail_exponent`.
    pub tail_exponent: Option<f64>,
    pub max_edges: usize,
}

impl Default for McConfig {
    fn default() -> Self {
        McConfig {
            samples: 1_000_000,
            seed: 0,
            workers: 1,
            sampler: Sampler::Simplex,
            batches: 16,
            tail_exponent: None,
            max_edges: DEFAULT_MC_MAX_EDGES,
        }
    }
}

impl McConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 || self.workers == 0 || self.batches == 0 {
            return Err(Error::InvalidParameter(
                "samples, workers and batches must be positive".into(),
            ));
        }
        let chunks = self.workers as u64 * self.batches as u64;
        if !self.samples.is_multiple_of(chunks) {
            return Err(Error::InvalidParameter(format!(
                "samples ({}) must be divisible by workers * batches ({chunks})",
                self.samples
            )));
        }
        if let Some(beta) = self.tail_exponent {
            if !(beta > 0.0 && beta <= 1.0) {
                return Err(Error::InvalidParameter(format!(
                    "tail exponent must lie in (0, 1], got {beta}"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PeriodEstimate {
    /// Median of the batch means.
    pub mean: f64,
    pub stderr: f64,
    pub samples: u64,
    pub seed: u64,
    pub sampler: Sampler,
    pub workers: u32,
    pub tail_exponent: f64,
    pub batch_means: Vec<f64>,
    pub plain_mean: f64,
    pub plain_stderr: f64,
}

/// Running count, mean and sum of squared deviations.
#[derive(Clone, Copy, Debug, Default)]
struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn merge(&mut self, other: &Moments) {
        if other.count == 0 {
            return;
        }
        let total = self.count + other.count;
        let delta = other.mean - self.mean;
        self.mean += delta * other.count as f64 / total as f64;
        self.m2 += other.m2 + delta * delta * self.count as f64 * other.count as f64 / total as f64;
        self.count = total;
    }

    fn variance(&self) -> f64 {
        if self.count < 2 {
            0.0
        } else {
            self.m2 / (self.count - 1) as f64
        }
    }
}

/// Draws one weighted sample: `ln` of the estimator value.
struct Draw {
    sampler: Sampler,
    beta: f64,
    gamma: Gamma<f64>,
    log_norm: f64,
    log_alpha: Vec<f64>,
    evaluator: PsiEvaluator,
}

impl Draw {
    fn new(g: &Multigraph, sampler: Sampler, beta: f64) -> Result<Self> {
        let evaluator = PsiEvaluator::new(g)?;
        let n = evaluator.edge_count() as f64;
        let gamma = Gamma::new(beta + 1.0, 1.0)
            .map_err(|e| Error::InvalidParameter(format!("tail exponent {beta}: {e}")))?;
        let log_norm = match sampler {
            Sampler::Simplex => libm::lgamma(n * beta) - n * libm::lgamma(beta),
            Sampler::Affine => (n - 1.0) * (1.0 / beta).ln(),
        };
        Ok(Draw {
            sampler,
            beta,
            gamma,
            log_norm,
            log_alpha: vec![0.0; evaluator.edge_count()],
            evaluator,
        })
    }

    fn sample(&mut self, rng: &mut ChaCha8Rng) -> f64 {
        let log_weight = match self.sampler {
            Sampler::Simplex => self.simplex(rng),
            Sampler::Affine => self.affine(rng),
        };
        (log_weight - 2.0 * self.evaluator.log_psi(&self.log_alpha)).exp()
    }

    /// Dirichlet(beta, ..., beta) through `ln G = ln G' + ln(U) / beta` with
    /// `G' ~ Gamma(beta + 1)`, which never underflows. Returns `-ln q`.
    fn simplex(&mut self, rng: &mut ChaCha8Rng) -> f64 {
        for slot in self.log_alpha.iter_mut() {
            let g: f64 = self.gamma.sample(rng);
            *slot = g.ln() + open_unit(rng).ln() / self.beta;
        }
        let top = self.log_alpha.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let log_total = top + self.log_alpha.iter().map(|x| (x - top).exp()).sum::<f64>().ln();
        let mut log_sum = 0.0;
        for slot in self.log_alpha.iter_mut() {
            *slot -= log_total;
            log_sum += *slot;
        }
        -(self.log_norm + (self.beta - 1.0) * log_sum)
    }

    /// `alpha_i = t^(1/beta)` with `t = u / (1 - u)`; the last coordinate is 1.
    /// Returns the log Jacobian.
    fn affine(&mut self, rng: &mut ChaCha8Rng) -> f64 {
        let power = 1.0 / self.beta;
        let last = self.log_alpha.len() - 1;
        let mut log_jacobian = self.log_norm;
        for slot in &mut self.log_alpha[..last] {
            let u = open_unit(rng);
            let log_rest = (-u).ln_1p();
            let log_t = u.ln() - log_rest;
            *slot = power * log_t;
            log_jacobian += (power - 1.0) * log_t - 2.0 * log_rest;
        }
        self.log_alpha[last] = 0.0;
        log_jacobian
    }
}

fn open_unit(rng: &mut ChaCha8Rng) -> f64 {
    loop {
        let u: f64 = rng.random();
        if u > 0.0 {
            return u;
        }
    }
}

/// Checks the preconditions shared by every sampler: ordinary, connected,
/// `E = 2h`, and at most `max_edges` edges. Returns the loop number.
pub fn require_log_divergent(g: &Multigraph, max_edges: usize) -> Result<usize> {
    let h = g.loop_number()?;
    if g.edge_count() != 2 * h {
        return Err(Error::NotLogDivergent {
            edges: g.edge_count(),
            twice_loops: 2 * h,
        });
    }
    if g.edge_count() > max_edges {
        return Err(Error::TooManyEdges {
            edges: g.edge_count(),
            limit: max_edges,
        });
    }
    Ok(h)
}

/// Estimates the period of `g`.
///
/// The sample budget is cut into `workers * batches` equal chunks. Worker `w`
/// owns ChaCha stream `w` of `seed` and fills its chunk of every batch in
/// order; batch statistics are then merged worker by worker, so results
/// depend only on the configuration.
pub fn estimate_period(g: &Multigraph, cfg: &McConfig) -> Result<PeriodEstimate> {
    cfg.validate()?;
    let h = require_log_divergent(g, cfg.max_edges)?;
    let beta = cfg.tail_exponent.unwrap_or_else(|| cfg.sampler.default_tail_exponent(h));
    let chunk = cfg.samples / (cfg.workers as u64 * cfg.batches as u64);
    let template = Draw::new(g, cfg.sampler, beta)?;

    let run_worker = |worker: u32| -> Result<Vec<Moments>> {
        let mut draw = Draw {
            gamma: template.gamma,
            log_alpha: template.log_alpha.clone(),
            evaluator: template.evaluator.clone(),
            ..template
        };
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(worker as u64);
        let mut out = Vec::with_capacity(cfg.batches as usize);
        for _ in 0..cfg.batches {
            let mut moments = Moments::default();
            for _ in 0..chunk {
                let value = draw.sample(&mut rng);
                if !(value > 0.0 && value.is_finite()) {
                    return Err(Error::Invariant(format!("sample value {value} is not positive and finite")));
                }
                moments.push(value);
            }
            out.push(moments);
        }
        Ok(out)
    };

    let per_worker: Vec<Result<Vec<Moments>>> = if cfg.workers == 1 {
        vec![run_worker(0)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..cfg.workers)
                .map(|w| scope.spawn(move || run_worker(w)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().unwrap_or_else(|_| Err(Error::Invariant("worker panicked".into()))))
                .collect()
        })
    };
    let per_worker = per_worker.into_iter().collect::<Result<Vec<_>>>()?;

    let mut groups = vec![Moments::default(); cfg.batches as usize];
    for worker in &per_worker {
        for (group, moments) in groups.iter_mut().zip(worker) {
            group.merge(moments);
        }
    }
    let mut total = Moments::default();
    for group in &groups {
        total.merge(group);
    }
    let batch_means: Vec<f64> = groups.iter().map(|m| m.mean).collect();
    let plain_stderr = (total.variance() / total.count as f64).sqrt();
    let (mean, stderr) = if cfg.batches > 2 {
        // the sample median of B normal batch means has variance pi/2 times
        // that of their average
        (median(&batch_means), (std::f64::consts::FRAC_PI_2).sqrt() * plain_stderr)
    } else {
        (total.mean, plain_stderr)
    };
    Ok(PeriodEstimate {
        mean,
        stderr,
        samples: cfg.samples,
        seed: cfg.seed,
        sampler: cfg.sampler,
        workers: cfg.workers,
        tail_exponent: beta,
        batch_means,
        plain_mean: total.mean,
        plain_stderr,
    })
}

fn median(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        0.5 * (sorted[mid - 1] + sorted[mid])
    }
}

/// `(mean - reference) / stderr`.
pub fn zscore(est: &PeriodEstimate, reference: f64) -> Result<f64> {
    if est.stderr.is_nan() || est.stderr <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "z-score needs a positive standard error, got {}",
            est.stderr
        )));
    }
    Ok((est.mean - reference) / est.stderr)
}
