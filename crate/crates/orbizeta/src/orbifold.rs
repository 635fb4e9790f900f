//! Signatures `(g; nu_1, ..., nu_s)` of compact hyperbolic orbisurfaces.

use std::f64::consts::PI;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSignature", into = "RawSignature")]
pub struct OrbifoldSignature {
    g: u32,
    nu: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawSignature {
    g: i64,
    nu: Vec<i64>,
}

impl TryFrom<RawSignature> for OrbifoldSignature {
    type Error = Error;
    fn try_from(raw: RawSignature) -> Result<Self> {
        new_signature(raw.g, &raw.nu)
    }
}

impl From<OrbifoldSignature> for RawSignature {
    fn from(sig: OrbifoldSignature) -> Self {
        RawSignature {
            g: sig.g as i64,
            nu: sig.nu.iter().map(|&v| v as i64).collect(),
        }
    }
}

/// One elliptic conjugacy class `[c_j^k]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EllipticClassDatum {
    /// 1-based cone index.
    pub cone_index: usize,
    pub power: u32,
    pub stabilizer_order: u32,
}

impl EllipticClassDatum {
    /// θ = kπ/ν.
    pub fn theta(&self) -> f64 {
        self.power as f64 * PI / self.stabilizer_order as f64
    }

    pub fn theta_rational(&self) -> (u32, u32) {
        (self.power, self.stabilizer_order)
    }
}

pub fn new_signature(g: i64, nu: &[i64]) -> Result<OrbifoldSignature> {
    if g < 0 {
        return Err(Error::Input(format!("genus {g} is negative")));
    }
    if let Some(&bad) = nu.iter().find(|&&v| v < 2) {
        return Err(Error::InvalidConeOrder(bad));
    }
    if nu.iter().any(|&v| v > u32::MAX as i64) || g > u32::MAX as i64 {
        return Err(Error::Input("signature entries too large".into()));
    }
    let sig = OrbifoldSignature {
        g: g as u32,
        nu: nu.iter().map(|&v| v as u32).collect(),
    };
    let chi = sig.euler_characteristic();
    if chi >= Rational64::zero() {
        return Err(Error::NonHyperbolic(chi.to_string()));
    }
    Ok(sig)
}

impl OrbifoldSignature {
    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn cone_orders(&self) -> &[u32] {
        &self.nu
    }

    pub fn num_cones(&self) -> usize {
        self.nu.len()
    }

    /// χ = 2 − 2g + Σ (1/ν_j − 1), exact.
    pub fn euler_characteristic(&self) -> Rational64 {
        let mut chi = Rational64::from_integer(2 - 2 * self.g as i64);
        for &v in &self.nu {
            chi += Rational64::new(1, v as i64) - 1;
        }
        chi
    }

    pub fn hyperbolic_area(&self) -> f64 {
        -2.0 * PI * self.euler_characteristic().to_f64().unwrap()
    }

    /// lcm(1, ν_1, …, ν_s).
    pub fn lcm_order(&self) -> u64 {
        self.nu.iter().fold(1u64, |acc, &v| acc.lcm(&(v as u64)))
    }

    /// Exponent e with λ^e = 1 required for an n-dimensional representation.
    pub fn lambda_root_exponent(&self, n: usize) -> i64 {
        let e = Rational64::from_integer(self.lcm_order() as i64 * n as i64) * self.euler_characteristic();
        debug_assert!(e.is_integer());
        e.to_integer()
    }

    /// 2g − 2 + s, the t-power of the long relation.
    pub fn relator_t_power(&self) -> i64 {
        2 * self.g as i64 - 2 + self.nu.len() as i64
    }

    pub fn elliptic_classes(&self) -> Vec<EllipticClassDatum> {
        let mut out = Vec::new();
        for (j, &v) in self.nu.iter().enumerate() {
            for k in 1..v {
                out.push(EllipticClassDatum {
                    cone_index: j + 1,
                    power: k,
                    stabilizer_order: v,
                });
            }
        }
        out
    }

    pub fn label(&self) -> String {
        let nu: Vec<String> = self.nu.iter().map(|v| v.to_string()).collect();
        format!("({};{})", self.g, nu.join(","))
    }
}

impl std::fmt::Display for OrbifoldSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.label())
    }
}

/// Parses `(g;n1,n2,...)`, also accepting `∅` or an empty list after the semicolon.
pub fn parse_signature_label(text: &str) -> Result<OrbifoldSignature> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Input(format!("bad signature label `{text}`")))?;
    let (g, rest) = inner
        .split_once(';')
        .ok_or_else(|| Error::Input(format!("bad signature label `{text}`")))?;
    let g: i64 = g
        .trim()
        .parse()
        .map_err(|_| Error::Input(format!("bad genus in `{text}`")))?;
    let rest = rest.trim();
    let nu = if rest.is_empty() || rest == "∅" {
        Vec::new()
    } else {
        rest.split(',')
            .map(|v| {
                v.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Input(format!("bad cone order in `{text}`")))
            })
            .collect::<Result<Vec<_>>>()?
    };
    new_signature(g, &nu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let s = new_signature(2, &[]).unwrap();
        assert_eq!(s.euler_characteristic(), Rational64::from_integer(-2));
        assert!((s.hyperbolic_area() - 4.0 * PI).abs() < 1e-14);

        let s = new_signature(0, &[2, 3, 7]).unwrap();
        assert_eq!(s.euler_characteristic(), Rational64::new(-1, 42));
        assert!((s.hyperbolic_area() - PI / 21.0).abs() < 1e-15);
        assert_eq!(s.elliptic_classes().len(), 9);
        assert_eq!(s.lcm_order(), 42);

        let s = new_signature(1, &[2]).unwrap();
        assert_eq!(s.euler_characteristic(), Rational64::new(-1, 2));
        assert!((s.hyperbolic_area() - PI).abs() < 1e-15);
        let cl = s.elliptic_classes();
        assert_eq!(cl.len(), 1);
        assert_eq!((cl[0].cone_index, cl[0].power, cl[0].stabilizer_order), (1, 1, 2));
        assert!((cl[0].theta() - PI / 2.0).abs() < 1e-15);

        assert!(new_signature(2, &[]).unwrap().elliptic_classes().is_empty());
        assert!(matches!(new_signature(0, &[2, 3]), Err(Error::NonHyperbolic(_))));
        assert!(matches!(new_signature(0, &[2, 3, 6]), Err(Error::NonHyperbolic(_))));
        assert!(matches!(new_signature(1, &[1]), Err(Error::InvalidConeOrder(1))));
    }

    #[test]
    fn labels_and_json() {
        let s = parse_signature_label("(0;2,3,7)").unwrap();
        assert_eq!(s.cone_orders(), &[2, 3, 7]);
        assert_eq!(parse_signature_label("(2;∅)").unwrap(), new_signature(2, &[]).unwrap());
        assert_eq!(parse_signature_label("(2;)").unwrap().num_cones(), 0);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"{"g":0,"nu":[2,3,7]}"#);
        let back: OrbifoldSignature = serde_json::from_str(&js).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<OrbifoldSignature>(r#"{"g":0,"nu":[2,2]}"#).is_err());
    }

    proptest! {
        #[test]
        fn invariants(g in 0i64..4, nu in proptest::collection::vec(2i64..13, 0..5)) {
            if let Ok(s) = new_signature(g, &nu) {
                let chi = s.euler_characteristic();
                prop_assert!((s.hyperbolic_area() + 2.0 * PI * chi.to_f64().unwrap()).abs() < 1e-12);
                let count: i64 = nu.iter().map(|v| v - 1).sum();
                let classes = s.elliptic_classes();
                prop_assert_eq!(classes.len() as i64, count);
                for c in &classes {
                    prop_assert!(c.theta() > 0.0 && c.theta() < PI);
                }
                let n = s.lcm_order();
                for &v in &nu {
                    prop_assert_eq!(n % v as u64, 0);
                }
                prop_assert!((chi * Rational64::from_integer(n as i64)).is_integer());
            }
        }
    }
}
