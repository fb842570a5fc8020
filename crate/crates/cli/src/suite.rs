use std::time::Duration;

use clap::ValueEnum;
use toticay::domsolve::Budget;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Tier {
    Core,
    Extended,
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteEntry {
    pub p: u64,
    pub m: u64,
    /// Per-solve budget unless overridden on the command line.
    pub budget: Budget,
}

#[derive(Debug, Clone)]
pub struct Suite {
    pub name: String,
    pub entries: Vec<SuiteEntry>,
}

/// All core instances have at most 200 vertices.
const CORE: [(u64, u64); 10] =
    [(2, 2), (2, 16), (3, 3), (3, 9), (3, 15), (2, 12), (2, 18), (3, 18), (5, 35), (2, 30)];

impl Suite {
    pub fn tier(tier: Tier) -> Suite {
        let secs = |s| Budget::with_time(Duration::from_secs(s));
        let entries = match tier {
            Tier::Core => CORE.iter().map(|&(p, m)| SuiteEntry { p, m, budget: secs(120) }).collect(),
            Tier::Extended => vec![
                SuiteEntry { p: 3, m: 30, budget: secs(600) },
                SuiteEntry { p: 3, m: 105, budget: secs(300) },
            ],
        };
        let name = match tier {
            Tier::Core => "core",
            Tier::Extended => "extended",
        };
        Suite { name: name.into(), entries }
    }

    pub fn single(p: u64, m: u64) -> Suite {
        Suite { name: format!("Z_{p} x Z_{m}"), entries: vec![SuiteEntry { p, m, budget: Budget::default() }] }
    }
}
