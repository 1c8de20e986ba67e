use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Construct,
    Rho,
    Check,
    Verify,
    CrossCheck,
    Scan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Theorem {
    /// General `k`-extendability.
    #[serde(rename = "t1.1")]
    T11,
    /// Bipartite `k`-extendability.
    #[serde(rename = "t1.2")]
    T12,
    /// `k`-factors of balanced bipartite graphs.
    #[serde(rename = "t1.3")]
    T13,
    /// Hamilton cycles of balanced bipartite graphs.
    #[serde(rename = "t4.3")]
    T43,
    /// `k`-factor-criticality.
    #[serde(rename = "t4.5")]
    T45,
    /// Connected `k`-factors; exploration only.
    #[serde(rename = "p1")]
    P1,
    /// Join of a clique with a union of cliques.
    #[serde(rename = "l2.2")]
    L22,
    /// The two-clique comparison behind general extendability.
    #[serde(rename = "l2.3")]
    L23,
    /// Monotonicity of the bipartite join family in `s`.
    #[serde(rename = "l2.6")]
    L26,
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::T11,
        Theorem::T12,
        Theorem::T13,
        Theorem::T43,
        Theorem::T45,
        Theorem::P1,
        Theorem::L22,
        Theorem::L23,
        Theorem::L26,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::T11 => "t1.1",
            Theorem::T12 => "t1.2",
            Theorem::T13 => "t1.3",
            Theorem::T43 => "t4.3",
            Theorem::T45 => "t4.5",
            Theorem::P1 => "p1",
            Theorem::L22 => "l2.2",
            Theorem::L23 => "l2.3",
            Theorem::L26 => "l2.6",
        }
    }

    pub fn is_lemma(self) -> bool {
        matches!(self, Theorem::L22 | Theorem::L23 | Theorem::L26)
    }

    /// The family whose member is extremal for the theorem.
    pub fn family(self) -> Option<Family> {
        match self {
            Theorem::T11 => Some(Family::KextGeneral),
            Theorem::T12 => Some(Family::KextBipartite),
            Theorem::T13 | Theorem::P1 => Some(Family::KfactorBipartite),
            Theorem::T43 => Some(Family::HamiltonBipartite),
            Theorem::T45 => Some(Family::KfcGeneral),
            _ => None,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Theorem> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown theorem '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    KExtendable,
    KFactor,
    KFactorCritical,
    Hamiltonian,
    ConnectedKFactor,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::KExtendable,
        Property::KFactor,
        Property::KFactorCritical,
        Property::Hamiltonian,
        Property::ConnectedKFactor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::KExtendable => "k-extendable",
            Property::KFactor => "k-factor",
            Property::KFactorCritical => "k-factor-critical",
            Property::Hamiltonian => "hamiltonian",
            Property::ConnectedKFactor => "connected-k-factor",
        }
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Property> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown property '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::InvalidParams(format!("unknown format '{s}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub mode: Mode,
    pub family: Option<Family>,
    pub theorem: Option<Theorem>,
    pub property: Option<Property>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub delta: Option<usize>,
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub p: Option<usize>,
    pub samples: usize,
    pub seed: u64,
    /// Classification tolerance on `ρ − ρ*`.
    pub tol: f64,
    pub jobs: usize,
    pub format: Format,
    pub exhaustive_limit: usize,
    /// Read graphs from this file instead of standard input.
    pub input: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn new(mode: Mode) -> ExperimentConfig {
        ExperimentConfig {
            mode,
            family: None,
            theorem: None,
            property: None,
            n: None,
            k: None,
            delta: None,
            s: None,
            t: None,
            p: None,
            samples: 1000,
            seed: 0,
            tol: 1e-8,
            jobs: 1,
            format: Format::Csv,
            exhaustive_limit: 20,
            input: None,
        }
    }

    /// Sets one field from its flag name (without dashes; `_` and `-` are
    /// interchangeable).
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        fn num<T: FromStr>(key: &str, value: &str) -> Result<T> {
            value
                .parse()
                .map_err(|_| Error::InvalidParams(format!("{key}: cannot parse '{value}'")))
        }
        match key.replace('_', "-").as_str() {
            "family" => self.family = Some(value.parse()?),
            "theorem" => self.theorem = Some(value.parse()?),
            "property" => self.property = Some(value.parse()?),
            "n" => self.n = Some(num(key, value)?),
            "k" => self.k = Some(num(key, value)?),
            "delta" => self.delta = Some(num(key, value)?),
            "s" => self.s = Some(num(key, value)?),
            "t" => self.t = Some(num(key, value)?),
            "p" => self.p = Some(num(key, value)?),
            "samples" => self.samples = num(key, value)?,
            "seed" => self.seed = num(key, value)?,
            "tol" => self.tol = num(key, value)?,
            "jobs" => self.jobs = num(key, value)?,
            "format" => self.format = value.parse()?,
            "exhaustive-limit" => self.exhaustive_limit = num(key, value)?,
            "input" => self.input = Some(PathBuf::from(value)),
            _ => return Err(Error::InvalidParams(format!("unknown config key '{key}'"))),
        }
        Ok(())
    }

    /// Applies a `key = value` file. Blank lines and `#` comments are
    /// ignored.
    pub fn apply_file(&mut self, text: &str) -> Result<()> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::InvalidParams(format!("config line {}: expected key = value", i + 1)))?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidParams(format!("tol must be positive, got {}", self.tol)));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidParams("jobs must be at least 1".into()));
        }
        Ok(())
    }

    pub(crate) fn require(&self, name: &str, value: Option<usize>) -> Result<usize> {
        value.ok_or_else(|| Error::InvalidParams(format!("--{name} is required")))
    }
}
