use std::time::Duration;

use clap::ValueEnum;
use mtlab_core::families::{FamilyConfig, Progress};
use mtlab_core::FactorBudget;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

/// Everything that can change the output of a run besides the subcommand.
///
/// Defaults: the library seed, no wall-clock cap on factoring (the
/// iteration budget alone bounds it, so output is reproducible), slow
/// paths off, a form-order probe bound of 1000 and TSV output.
#[derive(Clone)]
pub struct RunConfig {
    pub seed: u64,
    /// Optional wall-clock cap per factorization, in milliseconds.
    pub factor_budget_ms: Option<u64>,
    pub slow_paths: bool,
    pub probe_order_bound: u64,
    pub format: Format,
    pub all_h: bool,
    pub progress: Option<Progress>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let family = FamilyConfig::default();
        RunConfig {
            seed: family.budget.seed,
            factor_budget_ms: None,
            slow_paths: false,
            probe_order_bound: family.probe_order_bound,
            format: Format::Tsv,
            all_h: false,
            progress: None,
        }
    }
}

impl RunConfig {
    pub fn budget(&self) -> FactorBudget {
        FactorBudget {
            seed: self.seed,
            time_limit: self.factor_budget_ms.map(Duration::from_millis),
            ..FactorBudget::default()
        }
    }

    pub fn family_config(&self) -> FamilyConfig {
        FamilyConfig {
            budget: self.budget(),
            slow_paths: self.slow_paths,
            all_h: self.all_h,
            probe_order_bound: self.probe_order_bound,
            progress: self.progress.clone(),
            ..FamilyConfig::default()
        }
    }
}
