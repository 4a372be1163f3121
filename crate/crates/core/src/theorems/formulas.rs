use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Closed formulas in one integer parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    /// `⌈3n/7⌉`, the weak Roman number of `P_n` and `C_n` (`n ≥ 4`).
    GammaRPathCycle,
    /// `⌊n/2⌋ + ⌈n/4⌉ − ⌊n/4⌋`, the total domination number of `P_n` (`n ≥ 2`).
    GammaTPath,
    /// `γ_r(P_n ∘ H)` when `γ(H) ≥ 4` (`n ≥ 2`).
    GammaRLexPath,
    /// `2⌊2n/3⌋`, `γ_r(T_n ∘ H)` for combs when `γ(H) ≥ 4` (`n ≥ 4`).
    GammaRLexComb,
    /// `2⌊2n/3⌋`, upper bound for connected outer graphs (`n ≥ 3`).
    TwoThirdsBound,
}

impl Formula {
    pub const ALL: [Formula; 5] =
        [Self::GammaRPathCycle, Self::GammaTPath, Self::GammaRLexPath, Self::GammaRLexComb, Self::TwoThirdsBound];

    pub fn name(self) -> &'static str {
        match self {
            Self::GammaRPathCycle => "gamma_r_path_cycle",
            Self::GammaTPath => "gamma_t_path",
            Self::GammaRLexPath => "gamma_r_lex_path",
            Self::GammaRLexComb => "gamma_r_lex_comb",
            Self::TwoThirdsBound => "two_thirds_bound",
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            Self::GammaRPathCycle | Self::GammaRLexComb => 4,
            Self::GammaTPath | Self::GammaRLexPath => 2,
            Self::TwoThirdsBound => 3,
        }
    }

    pub fn eval(self, n: usize) -> Result<u32> {
        if n < self.min_n() {
            return Err(Error::Undefined(format!("{} needs n ≥ {}, got {n}", self.name(), self.min_n())));
        }
        let v = match self {
            Self::GammaRPathCycle => (3 * n).div_ceil(7),
            Self::GammaTPath => n / 2 + n.div_ceil(4) - n / 4,
            Self::GammaRLexPath => match n % 4 {
                0 => n,
                2 => n + 2,
                _ => n + 1,
            },
            Self::GammaRLexComb | Self::TwoThirdsBound => 2 * (2 * n / 3),
        };
        Ok(v as u32)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| Error::Undefined(format!("unknown formula `{s}`")))
    }
}

/// Evaluates the formula called `name` at `n`.
pub fn closed_formula(name: &str, n: usize) -> Result<u32> {
    name.parse::<Formula>()?.eval(n)
}
