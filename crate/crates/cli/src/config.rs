use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// How the deformation parameter is treated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum QMode {
    /// formal variable, exact rational functions
    Sym,
    /// the classical point q = 1
    One,
    /// a seeded random specialization
    Spec,
}

impl fmt::Display for QMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QMode::Sym => "sym",
            QMode::One => "one",
            QMode::Spec => "spec",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Relations,
    Commutation,
    Cubic,
    Spectrum,
    Duality,
    Fft,
    Tl,
    So3,
    Integrality,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Relations,
        Suite::Commutation,
        Suite::Cubic,
        Suite::Spectrum,
        Suite::Duality,
        Suite::Fft,
        Suite::Tl,
        Suite::So3,
        Suite::Integrality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Commutation => "commutation",
            Suite::Cubic => "cubic",
            Suite::Spectrum => "spectrum",
            Suite::Duality => "duality",
            Suite::Fft => "fft",
            Suite::Tl => "tl",
            Suite::So3 => "so3",
            Suite::Integrality => "integrality",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Multiplicities,
    Spectrum,
    Complements,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::Multiplicities => "multiplicities",
            TableKind::Spectrum => "spectrum",
            TableKind::Complements => "complements",
        }
    }
}

fn parse_sign(s: &str) -> Result<i8, String> {
    match s {
        "+" | "+1" | "1" | "plus" => Ok(1),
        "-" | "-1" | "minus" => Ok(-1),
        _ => Err(format!("expected + or -, got {s:?}")),
    }
}

#[derive(Clone, Debug, Args)]
pub struct CommonArgs {
    /// N of so_N
    #[arg(long = "N", default_value_t = 3)]
    pub big_n: usize,
    /// tensor power
    #[arg(long = "n", default_value_t = 2)]
    pub n: usize,
    /// fusion level
    #[arg(long)]
    pub level: Option<u32>,
    #[arg(long = "q", value_enum)]
    pub q_mode: Option<QMode>,
    /// seed for specialization points
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// sign ε of the classical odd-N intertwiner
    #[arg(long, default_value = "+", value_parser = parse_sign, allow_hyphen_values = true)]
    pub sign: i8,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// write output here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// emit a table
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// compare centralizer dimension counts
    FftCount {
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Clone, Debug, Parser)]
#[command(name = "spindual", version, about = "Spinor tensor powers of U_q so_N and their dual coideal algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// A validated invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub big_n: usize,
    pub n: usize,
    pub level: Option<u32>,
    pub q_mode: QMode,
    pub seed: u64,
    pub sign: i8,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("N must be at least 2, got {0}")]
    BigNTooSmall(usize),
    #[error("n must be at least 1, got {0}")]
    NTooSmall(usize),
    #[error("{what} does not support --q {mode}")]
    UnsupportedQ { what: String, mode: QMode },
    #[error("{0}")]
    Unsupported(String),
}

impl RunConfig {
    pub fn new(big_n: usize, n: usize) -> Self {
        RunConfig {
            big_n,
            n,
            level: None,
            q_mode: QMode::Sym,
            seed: 1,
            sign: 1,
            format: OutputFormat::Text,
            out: None,
        }
    }

    pub fn with_q(mut self, q: QMode) -> Self {
        self.q_mode = q;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_level(mut self, level: u32) -> Self {
        self.level = Some(level);
        self
    }

    pub fn with_sign(mut self, sign: i8) -> Self {
        self.sign = sign;
        self
    }

    pub fn k(&self) -> usize {
        self.big_n / 2
    }

    /// Dimension of `S^{⊗n}`.
    pub fn space_dim(&self) -> usize {
        1 << (self.k() * self.n)
    }

    pub fn from_args(c: &CommonArgs, default_q: QMode) -> Result<Self, ConfigError> {
        let cfg = RunConfig {
            big_n: c.big_n,
            n: c.n,
            level: c.level,
            q_mode: c.q_mode.unwrap_or(default_q),
            seed: c.seed,
            sign: c.sign,
            format: c.format,
            out: c.out.clone(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.big_n < 2 {
            return Err(ConfigError::BigNTooSmall(self.big_n));
        }
        if self.n < 1 {
            return Err(ConfigError::NTooSmall(self.n));
        }
        Ok(())
    }

    pub(crate) fn require_q(&self, what: &str, allowed: &[QMode]) -> Result<(), ConfigError> {
        if allowed.contains(&self.q_mode) {
            Ok(())
        } else {
            Err(ConfigError::UnsupportedQ { what: what.to_string(), mode: self.q_mode })
        }
    }

    pub(crate) fn require_big_n(&self, what: &str, min: usize) -> Result<(), ConfigError> {
        if self.big_n >= min {
            Ok(())
        } else {
            Err(ConfigError::Unsupported(format!("{what} needs N >= {min}")))
        }
    }
}
