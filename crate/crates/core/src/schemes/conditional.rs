use super::SchemeParams;

/// Distortion at fixed channel gain `h` and side-information gain `gamma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionalOutcome {
    pub in_outage: bool,
    pub distortion: f64,
}

impl ConditionalOutcome {
    fn decoded(distortion: f64) -> Self {
        Self {
            in_outage: false,
            distortion,
        }
    }

    fn outage(distortion: f64) -> Self {
        Self {
            in_outage: true,
            distortion,
        }
    }
}

/// MMSE estimate from the analog channel output and the side information.
pub fn uncoded_conditional(h: f64, gamma: f64) -> ConditionalOutcome {
    ConditionalOutcome::decoded(1.0 / (1.0 + h + gamma))
}

/// Separate coding: the channel code fails when `2^(2 rc) >= 1 + h`; the
/// Wyner-Ziv layer fails when `2^(2 rc) <= 1 + (2^(2(rc+rs)) - 1)/(1 + gamma)`.
pub fn sscc_conditional(h: f64, gamma: f64, rc: f64, rs: f64) -> ConditionalOutcome {
    let kc = (2.0 * rc).exp2();
    let k = (2.0 * (rc + rs)).exp2();
    let channel_out = kc >= 1.0 + h;
    let source_out = kc <= 1.0 + (k - 1.0) / (1.0 + gamma);
    if channel_out || source_out {
        ConditionalOutcome::outage(1.0 / (1.0 + gamma))
    } else {
        ConditionalOutcome::decoded(1.0 / (gamma + k))
    }
}

/// Joint decoding: succeeds iff `(2^(2 rj) - 1)/(1 + gamma) < h`.
pub fn jds_conditional(h: f64, gamma: f64, rj: f64) -> ConditionalOutcome {
    let k = (2.0 * rj).exp2();
    if k - 1.0 >= h * (1.0 + gamma) {
        ConditionalOutcome::outage(1.0 / (1.0 + gamma))
    } else {
        ConditionalOutcome::decoded(1.0 / (gamma + k))
    }
}

/// Superposed hybrid digital-analog with digital power `pd` and test-channel
/// gain `eta`. `pd = 0` is always in outage and reduces to uncoded.
pub fn shda_conditional(h: f64, gamma: f64, pd: f64, eta: f64) -> ConditionalOutcome {
    let pa = 1.0 - pd;
    let c = pa.sqrt() - eta;
    let eta2 = eta * eta;
    if pd * h * (1.0 + pd * gamma) <= pd * h * c * c + eta2 {
        ConditionalOutcome::outage(1.0 / (1.0 + h * pa / (1.0 + h * pd) + gamma))
    } else {
        ConditionalOutcome::decoded(pd / (eta2 + pd * (1.0 + gamma + h * c * c)))
    }
}

/// Dispatches on the scheme.
pub fn conditional(params: &SchemeParams, h: f64, gamma: f64) -> ConditionalOutcome {
    match *params {
        SchemeParams::Uncoded => uncoded_conditional(h, gamma),
        SchemeParams::Sscc { rc, rs } => sscc_conditional(h, gamma, rc, rs),
        SchemeParams::Jds { rj } => jds_conditional(h, gamma, rj),
        SchemeParams::Shda { pd, eta } => shda_conditional(h, gamma, pd, eta),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn uncoded_values() {
        assert_eq!(uncoded_conditional(0.0, 0.0).distortion, 1.0);
        assert_eq!(uncoded_conditional(4.0, 4.0).distortion, 1.0 / 9.0);
    }

    #[test]
    fn sscc_examples() {
        assert!(sscc_conditional(3.0, 10.0, 1.0, 0.0).in_outage);
        let d = sscc_conditional(4.0, 3.0, 1.0, 0.5);
        assert!(!d.in_outage);
        assert!((d.distortion - 1.0 / 11.0).abs() < 1e-15);
        let o = sscc_conditional(4.0, 30.0, 1.2, 0.3);
        assert!(o.in_outage);
        assert_eq!(o.distortion, 1.0 / 31.0);
    }

    #[test]
    fn jds_examples() {
        assert!(jds_conditional(3.0, 0.0, 1.0).in_outage);
        let d = jds_conditional(4.0, 30.0, 1.5);
        assert!(!d.in_outage);
        assert!((d.distortion - 1.0 / 38.0).abs() < 1e-15);
        let s = sscc_conditional(4.0, 30.0, 1.2, 0.3);
        assert!(s.in_outage && s.distortion > d.distortion);
    }

    #[test]
    fn shda_examples() {
        let d = shda_conditional(3.0, 0.0, 1.0, 0.5f64.sqrt());
        assert!(!d.in_outage);
        assert!((d.distortion - 1.0 / 3.0).abs() < 1e-15);
        let o = shda_conditional(3.0, 0.0, 1.0, 1.0);
        assert!(o.in_outage);
        assert_eq!(o.distortion, 1.0);
        for eta in [0.0, 0.3, 5.0] {
            let u = shda_conditional(2.5, 1.5, 0.0, eta);
            assert_eq!(u.distortion, uncoded_conditional(2.5, 1.5).distortion);
        }
    }

    proptest! {
        #[test]
        fn sscc_decode_implies_jds_decode(
            h in 0.0f64..1e4, gamma in 0.0f64..1e4, rc in 1e-3f64..3.0, rs in 0.0f64..3.0
        ) {
            let s = sscc_conditional(h, gamma, rc, rs);
            let j = jds_conditional(h, gamma, rc + rs);
            if !s.in_outage {
                prop_assert!(!j.in_outage);
            }
            prop_assert!(j.distortion <= s.distortion * (1.0 + 1e-12));
        }

        #[test]
        fn distortions_bounded_and_monotone(
            h in 0.0f64..1e3, gamma in 0.0f64..1e3, dh in 0.0f64..10.0, dg in 0.0f64..10.0,
            rc in 1e-3f64..3.0, rs in 0.0f64..3.0, pd in 0.0f64..=1.0, eta in 0.0f64..3.0,
        ) {
            let all = [
                SchemeParams::Uncoded,
                SchemeParams::Sscc { rc, rs },
                SchemeParams::Jds { rj: rc + rs },
                SchemeParams::Shda { pd, eta },
            ];
            for p in all {
                let a = conditional(&p, h, gamma);
                prop_assert!(a.distortion > 0.0 && a.distortion <= 1.0);
                let b = conditional(&p, h + dh, gamma + dg);
                if !a.in_outage && !b.in_outage {
                    prop_assert!(b.distortion <= a.distortion * (1.0 + 1e-12));
                }
            }
        }

        #[test]
        fn hda_decode_form(h in 0.0f64..100.0, gamma in 0.0f64..100.0, eta in 0.0f64..3.0) {
            let d = shda_conditional(h, gamma, 1.0, eta);
            if !d.in_outage {
                let want = 1.0 / (1.0 + gamma + eta * eta * (1.0 + h));
                prop_assert!((d.distortion - want).abs() <= 1e-14 * want.max(1.0));
            }
        }
    }
}
