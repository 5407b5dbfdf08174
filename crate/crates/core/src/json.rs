//! JSON interchange formats for fields, codes, monomial maps, regularity
//! profiles and classification certificates.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classify::Certificate;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::linalg::{Matrix, MonomialMap};
use crate::regularity::RegularityProfile;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u32,
    #[serde(default = "one")]
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub field: FieldJson,
    pub n: usize,
    pub k: usize,
    pub generator: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub perm: Vec<usize>,
    pub scales: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileJson {
    pub rho: usize,
    pub alpha: BTreeMap<usize, Vec<u64>>,
    pub n_a: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub case: String,
    pub n_a: Option<usize>,
    pub n_b: Option<usize>,
    pub m_b: Option<usize>,
    pub peel_count: usize,
    pub partition: Vec<Vec<usize>>,
    pub equivalence: Option<MonomialJson>,
    pub canonical: Option<CodeJson>,
    pub verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Box<CertificateJson>>,
}

impl From<&FieldSpec> for FieldJson {
    fn from(f: &FieldSpec) -> Self {
        FieldJson {
            p: f.p(),
            m: f.m(),
            modulus: (f.m() > 1).then(|| f.modulus().to_vec()),
        }
    }
}

impl FieldJson {
    pub fn to_field(&self) -> Result<FieldSpec> {
        FieldSpec::new(self.p, self.m, self.modulus.as_deref())
    }
}

impl From<&LinearCode> for CodeJson {
    fn from(c: &LinearCode) -> Self {
        CodeJson {
            field: c.field().into(),
            n: c.n(),
            k: c.k(),
            generator: c
                .generator()
                .row_iter()
                .map(|r| r.iter().map(|&x| x as u64).collect())
                .collect(),
        }
    }
}

fn elements(field: &FieldSpec, raw: &[u64]) -> Result<Vec<u8>> {
    raw.iter().map(|&v| field.check(v)).collect()
}

impl CodeJson {
    /// Builds the code; the generator need not be reduced, but must have
    /// rank `k` and `n` columns.
    pub fn to_code(&self) -> Result<LinearCode> {
        let field = self.field.to_field()?;
        if self.generator.is_empty() {
            return Err(Error::ZeroCode);
        }
        let rows: Vec<Vec<u8>> = self
            .generator
            .iter()
            .map(|r| {
                if r.len() != self.n {
                    return Err(Error::LengthMismatch {
                        expected: self.n,
                        actual: r.len(),
                    });
                }
                elements(&field, r)
            })
            .collect::<Result<_>>()?;
        let code = LinearCode::from_generator(&Matrix::from_rows(&field, &rows)?)?;
        if code.k() != self.k {
            return Err(Error::DimensionMismatch(format!(
                "declared k = {}, generator has rank {}",
                self.k,
                code.k()
            )));
        }
        Ok(code)
    }
}

impl From<&MonomialMap> for MonomialJson {
    fn from(m: &MonomialMap) -> Self {
        MonomialJson {
            perm: m.perm().to_vec(),
            scales: m.scales().iter().map(|&s| s as u64).collect(),
        }
    }
}

impl MonomialJson {
    pub fn to_map(&self, field: &FieldSpec) -> Result<MonomialMap> {
        MonomialMap::new(field, self.perm.clone(), elements(field, &self.scales)?)
    }
}

impl From<&RegularityProfile> for ProfileJson {
    fn from(p: &RegularityProfile) -> Self {
        ProfileJson {
            rho: p.rho,
            alpha: p.alpha.clone(),
            n_a: p.n_a(),
        }
    }
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        CertificateJson {
            case: c.case.as_str().to_string(),
            n_a: c.n_a,
            n_b: c.n_b,
            m_b: c.m_b,
            peel_count: c.peel_count,
            partition: c.partition.clone(),
            equivalence: c.equivalence.as_ref().map(Into::into),
            canonical: c.canonical.as_ref().map(Into::into),
            verified: c.verified,
            reason: c.reason.clone(),
            base: c.base.as_deref().map(|b| Box::new(b.into())),
        }
    }
}

/// Parses a code from its JSON text.
pub fn parse_code(text: &str) -> Result<LinearCode> {
    let raw: CodeJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    raw.to_code()
}

/// Pretty JSON text with a trailing newline.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::code::Budget;
    use crate::constructions::kron_code;

    #[test]
    fn code_round_trip() {
        let f = FieldSpec::with_order(4).unwrap();
        let c = kron_code(&f, 2, 2).unwrap();
        let text = to_pretty(&CodeJson::from(&c));
        assert_eq!(parse_code(&text).unwrap(), c);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["field"]["modulus"], serde_json::json!([1, 1, 1]));
        let f2 = FieldSpec::prime(2).unwrap();
        let v = serde_json::to_value(FieldJson::from(&f2)).unwrap();
        assert_eq!(v, serde_json::json!({"p": 2, "m": 1}));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_code("{"), Err(Error::Parse(_))));
        let bad_k = r#"{"field":{"p":2},"n":3,"k":2,"generator":[[1,1,1]]}"#;
        assert!(matches!(
            parse_code(bad_k),
            Err(Error::DimensionMismatch(_))
        ));
        let bad_elem = r#"{"field":{"p":2},"n":3,"k":1,"generator":[[1,2,1]]}"#;
        assert!(matches!(
            parse_code(bad_elem),
            Err(Error::ElementOutOfRange { .. })
        ));
        let bad_len = r#"{"field":{"p":2},"n":3,"k":1,"generator":[[1,1]]}"#;
        assert!(matches!(
            parse_code(bad_len),
            Err(Error::LengthMismatch { .. })
        ));
        let unreduced = r#"{"field":{"p":3},"n":3,"k":1,"generator":[[2,2,2]]}"#;
        assert_eq!(
            parse_code(unreduced).unwrap().generator().row(0),
            &[1, 1, 1]
        );
    }

    #[test]
    fn certificate_shape() {
        let f = FieldSpec::prime(2).unwrap();
        let cert = classify(&kron_code(&f, 2, 2).unwrap(), &Budget::default()).unwrap();
        let v = serde_json::to_value(CertificateJson::from(&cert)).unwrap();
        assert_eq!(v["case"], "D2_KRONECKER");
        assert_eq!(v["n_a"], 2);
        assert_eq!(v["partition"], serde_json::json!([[0, 3], [1, 4], [2, 5]]));
        assert_eq!(v["verified"], true);
        assert!(v.get("reason").is_none());
        let map = serde_json::from_value::<MonomialJson>(v["equivalence"].clone()).unwrap();
        assert_eq!(map.to_map(&f).unwrap(), *cert.equivalence.as_ref().unwrap());
    }
}
