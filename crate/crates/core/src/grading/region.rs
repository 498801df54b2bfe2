use std::fmt;

use serde::Serialize;

use crate::exactmath::{GaussRat, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RegionTag {
    /// Finitely Ω-generated ℂ_{Re>0}-graded vertex operator algebra.
    OmegaVoa,
    /// Ω-generated and conformal, but not a vertex operator algebra in that sense.
    StripConfOmega,
    NotOmegaGenerated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Subcase {
    #[serde(rename = "CASE1_INTEGER")]
    Case1Integer,
    #[serde(rename = "CASE2_REAL_STRIP")]
    Case2RealStrip,
    #[serde(rename = "CASE3_EDGE_IMAG")]
    Case3EdgeImag,
    #[serde(rename = "CASE4A_DIAMOND")]
    Case4aDiamond,
    #[serde(rename = "CASE4B_STRIP_WIDE_IM")]
    Case4bStripWideIm,
    #[serde(rename = "CASE5_OUTSIDE")]
    Case5Outside,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OmegaDescription {
    TrivialVacuumLine,
    InfiniteFamily,
    Zero,
}

/// Which clause of the classification applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Clause {
    #[serde(rename = "I(i)")]
    FirstHalf,
    #[serde(rename = "I(ii)")]
    SecondHalf,
    #[serde(rename = "II")]
    Strip,
    #[serde(rename = "III")]
    Outside,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RegionClass {
    pub tag: RegionTag,
    pub subcase: Subcase,
    pub omega_description: OmegaDescription,
    pub clause: Clause,
}

impl RegionTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegionTag::OmegaVoa => "OMEGA_VOA",
            RegionTag::StripConfOmega => "STRIP_CONF_OMEGA",
            RegionTag::NotOmegaGenerated => "NOT_OMEGA_GENERATED",
        }
    }
}

impl Subcase {
    pub fn as_str(&self) -> &'static str {
        match self {
            Subcase::Case1Integer => "CASE1_INTEGER",
            Subcase::Case2RealStrip => "CASE2_REAL_STRIP",
            Subcase::Case3EdgeImag => "CASE3_EDGE_IMAG",
            Subcase::Case4aDiamond => "CASE4A_DIAMOND",
            Subcase::Case4bStripWideIm => "CASE4B_STRIP_WIDE_IM",
            Subcase::Case5Outside => "CASE5_OUTSIDE",
        }
    }
}

impl OmegaDescription {
    pub fn as_str(&self) -> &'static str {
        match self {
            OmegaDescription::TrivialVacuumLine => "TRIVIAL_VACUUM_LINE",
            OmegaDescription::InfiniteFamily => "INFINITE_FAMILY",
            OmegaDescription::Zero => "ZERO",
        }
    }
}

impl Clause {
    pub fn as_str(&self) -> &'static str {
        match self {
            Clause::FirstHalf => "I(i)",
            Clause::SecondHalf => "I(ii)",
            Clause::Strip => "II",
            Clause::Outside => "III",
        }
    }
}

impl fmt::Display for RegionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for Subcase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for OmegaDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `0 < Re μ <= 1/2` and `|Im μ| <= Re μ`.
fn first_half(re: &Rat, abs_im: &Rat) -> bool {
    re.is_positive() && *re <= Rat::new(1, 2) && abs_im <= re
}

/// `0 < Re(1-μ) < 1/2` and `|Im μ| <= Re(1-μ)`. The upper bound is strict here while
/// the first condition allows equality, so the line `Re μ = 1/2` belongs to the first.
fn second_half(re: &Rat, abs_im: &Rat) -> bool {
    let r = &Rat::one() - re;
    r.is_positive() && r < Rat::new(1, 2) && *abs_im <= r
}

/// Classification of `(M, ω_μ)` by the position of μ in the complex plane.
pub fn classify(mu: &GaussRat) -> RegionClass {
    let re = &mu.re;
    let abs_im = mu.im.abs();
    if re.is_negative() || *re > 1 {
        return RegionClass {
            tag: RegionTag::NotOmegaGenerated,
            subcase: Subcase::Case5Outside,
            omega_description: OmegaDescription::Zero,
            clause: Clause::Outside,
        };
    }
    let on_edge = re.is_zero() || re.is_one();
    if on_edge {
        let (subcase, omega_description) = if abs_im.is_zero() {
            (Subcase::Case1Integer, OmegaDescription::InfiniteFamily)
        } else {
            (Subcase::Case3EdgeImag, OmegaDescription::TrivialVacuumLine)
        };
        return RegionClass { tag: RegionTag::StripConfOmega, subcase, omega_description, clause: Clause::Strip };
    }
    let clause = if first_half(re, &abs_im) {
        Some(Clause::FirstHalf)
    } else if second_half(re, &abs_im) {
        Some(Clause::SecondHalf)
    } else {
        None
    };
    let subcase = match (abs_im.is_zero(), clause.is_some()) {
        (true, _) => Subcase::Case2RealStrip,
        (false, true) => Subcase::Case4aDiamond,
        (false, false) => Subcase::Case4bStripWideIm,
    };
    RegionClass {
        tag: if clause.is_some() { RegionTag::OmegaVoa } else { RegionTag::StripConfOmega },
        subcase,
        omega_description: OmegaDescription::TrivialVacuumLine,
        clause: clause.unwrap_or(Clause::Strip),
    }
}
