//! JSON encodings shared by the library and the CLI: complex numbers are `[re, im]` and
//! matrices are row-major arrays of complex entries.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::{CMat, C64};
use crate::representation::Representation;

pub type JsonComplex = [f64; 2];
pub type JsonMatrix = Vec<Vec<JsonComplex>>;

pub fn complex(z: C64) -> JsonComplex {
    [z.re, z.im]
}

pub fn from_complex(v: JsonComplex) -> C64 {
    C64::new(v[0], v[1])
}

pub fn matrix(m: &CMat) -> JsonMatrix {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| complex(m[(i, j)])).collect())
        .collect()
}

pub fn from_matrix(rows: &JsonMatrix, n: usize) -> Result<CMat> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(format!("expected a {n}x{n} matrix")));
    }
    Ok(CMat::from_fn(n, n, |i, j| from_complex(rows[i][j])))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct RepJson {
    pub n: usize,
    pub lambda: JsonComplex,
    #[serde(default)]
    pub A: Vec<JsonMatrix>,
    #[serde(default)]
    pub B: Vec<JsonMatrix>,
    #[serde(default)]
    pub C: Vec<JsonMatrix>,
}

impl From<&Representation> for RepJson {
    fn from(rep: &Representation) -> Self {
        RepJson {
            n: rep.n,
            lambda: complex(rep.lambda),
            A: rep.a.iter().map(matrix).collect(),
            B: rep.b.iter().map(matrix).collect(),
            C: rep.c.iter().map(matrix).collect(),
        }
    }
}

impl TryFrom<RepJson> for Representation {
    type Error = Error;
    fn try_from(js: RepJson) -> Result<Self> {
        let conv = |ms: &[JsonMatrix]| ms.iter().map(|m| from_matrix(m, js.n)).collect::<Result<Vec<_>>>();
        Ok(Representation {
            n: js.n,
            a: conv(&js.A)?,
            b: conv(&js.B)?,
            c: conv(&js.C)?,
            lambda: from_complex(js.lambda),
        })
    }
}

pub fn rep_to_value(rep: &Representation) -> Value {
    serde_json::to_value(RepJson::from(rep)).expect("serialisable")
}

pub fn rep_from_str(text: &str) -> Result<Representation> {
    let js: RepJson = serde_json::from_str(text).map_err(|e| Error::Input(format!("representation JSON: {e}")))?;
    js.try_into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, identity};

    #[test]
    fn round_trip() {
        let rep = Representation {
            n: 2,
            a: vec![identity(2)],
            b: vec![CMat::from_row_slice(2, 2, &[c(0.0, 1.0), c(1.0, 0.0), c(2.0, 0.0), c(0.5, -0.25)])],
            c: vec![],
            lambda: c(-1.0, 0.0),
        };
        let text = serde_json::to_string(&rep_to_value(&rep)).unwrap();
        let back = rep_from_str(&text).unwrap();
        assert_eq!(back, rep);
        assert!(rep_from_str(r#"{"n":2,"lambda":[1,0],"A":[[[[1,0]]]]}"#).is_err());
    }
}
