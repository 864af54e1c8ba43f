//! On-disk code format: JSON with the qubit count and the even-weight
//! coefficients of c0 as decimal strings (arbitrary precision in the file,
//! parsed to working precision). The odd word is the mirrored counterpart,
//! so a single coefficient list determines the code. An optional `symbol`
//! per entry is documentation only.

use crate::dicke::DickeCode;
use crate::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoeffEntry {
    pub k: usize,
    pub re: String,
    pub im: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbol: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeFile {
    pub n: usize,
    pub coefficients: Vec<CoeffEntry>,
}

impl CodeFile {
    pub fn from_code(code: &DickeCode) -> Self {
        let entries = (0..=code.n / 2)
            .map(|m| {
                let c = code.c0.coeff(2 * m);
                CoeffEntry {
                    k: 2 * m,
                    re: format!("{:.17e}", c.re),
                    im: format!("{:.17e}", c.im),
                    symbol: None,
                }
            })
            .collect();
        CodeFile {
            n: code.n,
            coefficients: entries,
        }
    }

    pub fn to_code(&self) -> Result<DickeCode> {
        if self.n % 2 == 0 {
            return Err(Error::EvenQubitCount(self.n));
        }
        let mut even = vec![Complex64::new(0.0, 0.0); self.n / 2 + 1];
        for entry in &self.coefficients {
            if entry.k % 2 != 0 || entry.k > self.n {
                return Err(Error::Parse(format!(
                    "coefficient index {} is not an even weight of n = {}",
                    entry.k, self.n
                )));
            }
            let re: f64 = entry
                .re
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("bad re `{}`: {e}", entry.re)))?;
            let im: f64 = entry
                .im
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("bad im `{}`: {e}", entry.im)))?;
            even[entry.k / 2] = Complex64::new(re, im);
        }
        DickeCode::from_even_coeffs(self.n, &even)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let code = DickeCode::from_even_coeffs_f64(7, &[5f64.sqrt(), -1.0 / 3.0, 0.2, 1.0])
            .unwrap();
        let file = CodeFile::from_code(&code);
        let text = file.to_json_string();
        let back = CodeFile::from_json_str(&text).unwrap().to_code().unwrap();
        for k in 0..=7 {
            assert!((back.c0.coeff(k) - code.c0.coeff(k)).norm() < 1e-16);
        }
        assert!(back.satisfies_i && back.satisfies_ii);
    }

    #[test]
    fn decimal_strings_accepted() {
        let text = r#"{
            "n": 5,
            "coefficients": [
                {"k": 0, "re": "1.00000000000000000000000000000", "im": "0"},
                {"k": 2, "re": "1.0", "im": "0", "symbol": "one"},
                {"k": 4, "re": "1", "im": "0"}
            ]
        }"#;
        let code = CodeFile::from_json_str(text).unwrap().to_code().unwrap();
        assert!(code.satisfies_i && code.satisfies_ii);
        assert!((code.c0.coeff(2).re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_odd_weight_entries() {
        let text = r#"{"n": 5, "coefficients": [{"k": 1, "re": "1", "im": "0"}]}"#;
        assert!(CodeFile::from_json_str(text).unwrap().to_code().is_err());
    }
}
