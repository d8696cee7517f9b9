use serde::{Deserialize, Serialize};

/// Fully resolved parameters of one command; embedded in every dataset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase", deny_unknown_fields)]
pub enum RunConfig {
    Landscape {
        table: [f64; 4],
        gamma: f64,
        preset: Option<String>,
        steps: usize,
    },
    Sweep {
        table: [f64; 4],
        gammas: Vec<f64>,
        noise_angle: f64,
        noise_readout: f64,
        seed: u64,
    },
    Equilibria {
        table: [f64; 4],
        gammas: Vec<f64>,
        grid: String,
        tol: f64,
    },
    Thresholds {
        table: [f64; 4],
    },
    Nmr {
        table: [f64; 4],
        gamma: f64,
        noise_angle: f64,
        seed: u64,
        pulse_width: f64,
        bob_defects: bool,
    },
    Tomo {
        table: [f64; 4],
        gamma: f64,
        noise_angle: f64,
        noise_readout: f64,
        seed: u64,
        /// Recorded readings to reconstruct instead of simulating them.
        records: Option<String>,
    },
}

impl RunConfig {
    pub fn command(&self) -> &'static str {
        match self {
            RunConfig::Landscape { .. } => "landscape",
            RunConfig::Sweep { .. } => "sweep",
            RunConfig::Equilibria { .. } => "equilibria",
            RunConfig::Thresholds { .. } => "thresholds",
            RunConfig::Nmr { .. } => "nmr",
            RunConfig::Tomo { .. } => "tomo",
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }
}
