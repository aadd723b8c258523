//! Transmission schemes: uncoded, separate source-channel coding (SSCC),
//! joint decoding (JDS) and superposed hybrid digital-analog (S-HDA, with HDA
//! as its all-digital special case). Each has a conditional distortion at
//! fixed fading states, an expected distortion, and a parameter optimizer.

mod conditional;
mod expected;
mod optimize;

use std::fmt;
use std::str::FromStr;

pub use conditional::{
    conditional, jds_conditional, shda_conditional, sscc_conditional, uncoded_conditional, ConditionalOutcome,
};
pub use expected::{expected_distortion, expected_distortion_in};
pub use optimize::{optimize_scheme, optimize_scheme_in, sscc_binning_rate, Optimized};

use crate::error::{Error, Result};

/// Free parameters of one scheme. Rates are in bits per source sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SchemeParams {
    Uncoded,
    /// Channel rate `rc > 0` and binning rate `rs >= 0`.
    Sscc {
        rc: f64,
        rs: f64,
    },
    /// Quantization rate `rj > 0`.
    Jds {
        rj: f64,
    },
    /// Digital power fraction `pd` in `[0, 1]` and test-channel gain `eta >= 0`.
    Shda {
        pd: f64,
        eta: f64,
    },
}

impl SchemeParams {
    pub fn sscc(rc: f64, rs: f64) -> Result<Self> {
        let p = Self::Sscc { rc, rs };
        p.validate()?;
        Ok(p)
    }

    pub fn jds(rj: f64) -> Result<Self> {
        let p = Self::Jds { rj };
        p.validate()?;
        Ok(p)
    }

    pub fn shda(pd: f64, eta: f64) -> Result<Self> {
        let p = Self::Shda { pd, eta };
        p.validate()?;
        Ok(p)
    }

    /// HDA: all power on the digital layer.
    pub fn hda(eta: f64) -> Result<Self> {
        Self::shda(1.0, eta)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParams(m));
        match *self {
            Self::Uncoded => Ok(()),
            Self::Sscc { rc, rs } => {
                if !(rc > 0.0 && rc.is_finite()) {
                    return bad(format!("SSCC channel rate must be positive, got {rc}"));
                }
                if !(rs >= 0.0 && rs.is_finite()) {
                    return bad(format!("SSCC binning rate must be nonnegative, got {rs}"));
                }
                Ok(())
            }
            Self::Jds { rj } => {
                if !(rj > 0.0 && rj.is_finite()) {
                    return bad(format!("JDS rate must be positive, got {rj}"));
                }
                Ok(())
            }
            Self::Shda { pd, eta } => {
                if !(0.0..=1.0).contains(&pd) {
                    return bad(format!("digital power fraction must lie in [0, 1], got {pd}"));
                }
                if !(eta >= 0.0 && eta.is_finite()) {
                    return bad(format!("eta must be nonnegative, got {eta}"));
                }
                Ok(())
            }
        }
    }

    pub fn kind(&self) -> SchemeKind {
        match *self {
            Self::Uncoded => SchemeKind::Uncoded,
            Self::Sscc { .. } => SchemeKind::Sscc,
            Self::Jds { .. } => SchemeKind::Jds,
            Self::Shda { pd: 1.0, .. } => SchemeKind::Hda,
            Self::Shda { .. } => SchemeKind::Shda,
        }
    }

    /// Quantizer rate of the digital S-HDA layer, from `eta^2 = pd (2^(2 R_h) - 1)`.
    pub fn shda_rate(&self) -> Option<f64> {
        match *self {
            Self::Shda { pd, eta } if pd > 0.0 => Some(0.5 * (1.0 + eta * eta / pd).log2()),
            _ => None,
        }
    }
}

/// Scheme selector used by the optimizer and the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeKind {
    Uncoded,
    Sscc,
    Jds,
    Hda,
    Shda,
}

impl SchemeKind {
    pub const ALL: [SchemeKind; 5] = [
        SchemeKind::Uncoded,
        SchemeKind::Sscc,
        SchemeKind::Jds,
        SchemeKind::Hda,
        SchemeKind::Shda,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::Uncoded => "uncoded",
            Self::Sscc => "sscc",
            Self::Jds => "jds",
            Self::Hda => "hda",
            Self::Shda => "shda",
        }
    }
}

impl fmt::Display for SchemeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SchemeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s) || (s.eq_ignore_ascii_case("s-hda") && *k == Self::Shda))
            .ok_or_else(|| Error::InvalidParams(format!("unknown scheme '{s}'")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(SchemeParams::sscc(0.0, 0.0).is_err());
        assert!(SchemeParams::sscc(1.0, -0.1).is_err());
        assert!(SchemeParams::sscc(1.0, 0.0).is_ok());
        assert!(SchemeParams::jds(0.0).is_err());
        assert!(SchemeParams::shda(1.1, 0.0).is_err());
        assert!(SchemeParams::shda(0.5, -1.0).is_err());
        assert!(SchemeParams::shda(0.0, 3.0).is_ok());
    }

    #[test]
    fn kinds_and_names() {
        assert_eq!(SchemeParams::hda(0.5).unwrap().kind(), SchemeKind::Hda);
        assert_eq!(SchemeParams::shda(0.5, 0.5).unwrap().kind(), SchemeKind::Shda);
        for k in SchemeKind::ALL {
            assert_eq!(k.name().parse::<SchemeKind>().unwrap(), k);
        }
        assert!("turbo".parse::<SchemeKind>().is_err());
    }

    #[test]
    fn shda_rate_convention() {
        let p = SchemeParams::shda(0.5, 0.5f64.sqrt()).unwrap();
        // eta^2 = 0.5 = 0.5 (2^(2R) - 1)  =>  R = 1/2
        assert!((p.shda_rate().unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(SchemeParams::shda(0.0, 1.0).unwrap().shda_rate(), None);
    }
}
