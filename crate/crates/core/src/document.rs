//! The on-disk matrix format shared by the CLI and by serialized witnesses:
//! a JSON object `{"n": ..., "upper": [...], "name": ...}` holding the upper
//! triangle only. JSON numbers are written with shortest round-trip decimal
//! encoding, so entries reload bit-identically.

use serde::{Deserialize, Serialize};

use crate::error::PcmError;
use crate::pcm::Pcm;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub n: usize,
    pub upper: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl MatrixDocument {
    pub fn from_pcm(pcm: &Pcm) -> Self {
        MatrixDocument { n: pcm.order(), upper: pcm.upper().to_vec(), name: None }
    }

    pub fn with_name(pcm: &Pcm, name: impl Into<String>) -> Self {
        MatrixDocument { n: pcm.order(), upper: pcm.upper().to_vec(), name: Some(name.into()) }
    }

    pub fn to_pcm(&self) -> Result<Pcm, PcmError> {
        Pcm::from_upper(self.n, &self.upper)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

impl From<&Pcm> for MatrixDocument {
    fn from(pcm: &Pcm) -> Self {
        MatrixDocument::from_pcm(pcm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_bit_exact() {
        let p = Pcm::from_upper(4, &[1.0 / 3.0, 7.0, 0.123456789012345678, 9.0, 0.49, 2.0]).unwrap();
        let doc = MatrixDocument::with_name(&p, "probe");
        let text = doc.to_json();
        let back = MatrixDocument::from_json(&text).unwrap();
        assert_eq!(doc, back);
        assert_eq!(back.to_pcm().unwrap(), p);
    }

    #[test]
    fn document_without_name_omits_the_field() {
        let p = Pcm::from_upper(2, &[2.0]).unwrap();
        let text = MatrixDocument::from_pcm(&p).to_json();
        assert!(!text.contains("name"));
    }
}
