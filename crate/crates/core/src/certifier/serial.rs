//! Certificate documents.
//!
//! A certificate is stored as JSON with every scalar written as a canonical
//! `"num/den"` string and every polynomial as a list of
//! `[exponent-vector, scalar]` terms in descending grevlex order, so
//! `to_json(from_json(s)) == s` byte for byte for any document this module
//! wrote.
//!
//! The `system_hash` binds a certificate to its input: FNV-1a (64-bit,
//! offset basis `0xcbf29ce484222325`, prime `0x100000001b3`) over the bytes of
//!
//! ```text
//! n=<arity>\n
//! <poly 1>\n
//! …
//! ```
//!
//! where each polynomial line lists its terms in descending grevlex order as
//! `e1,e2,…:num/den` joined by `;`. Variable names do not enter the hash.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::polyring::{scalar, Degree, Monomial, Polynomial};

use super::{CertError, ChartCertificate, FinitenessCertificate, SquareSystem};

pub const FORMAT: &str = "finicert-certificate";
pub const FORMAT_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

pub fn canonical_system_text(sys: &SquareSystem) -> String {
    let mut out = format!("n={}\n", sys.arity());
    for p in sys.polys() {
        let terms: Vec<String> = p
            .terms()
            .rev()
            .map(|(m, c)| {
                let e: Vec<String> = m.exponents().iter().map(u32::to_string).collect();
                format!("{}:{}", e.join(","), scalar::to_canonical(c))
            })
            .collect();
        out.push_str(&terms.join(";"));
        out.push('\n');
    }
    out
}

pub fn fnv1a64(bytes: &[u8]) -> u64 {
    bytes.iter().fold(FNV_OFFSET, |h, &b| (h ^ b as u64).wrapping_mul(FNV_PRIME))
}

pub fn system_hash(sys: &SquareSystem) -> String {
    format!("fnv1a64:{:016x}", fnv1a64(canonical_system_text(sys).as_bytes()))
}

type TermDoc = (Vec<u32>, String);

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum DegreeDoc {
    Finite(u32),
    Symbol(String),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ChartDoc {
    chart: usize,
    cofactor_degrees: Vec<DegreeDoc>,
    cofactors: Vec<Vec<TermDoc>>,
    lifted: Vec<Vec<TermDoc>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateDoc {
    format: String,
    version: u32,
    tool_version: String,
    system_hash: String,
    variables: Vec<String>,
    degrees: Vec<u32>,
    c: u32,
    charts: Vec<ChartDoc>,
}

/// A certificate plus the metadata binding it to an input system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateFile {
    pub tool_version: String,
    pub system_hash: String,
    pub variables: Vec<String>,
    pub degrees: Vec<u32>,
    pub certificate: FinitenessCertificate,
}

fn poly_doc(p: &Polynomial) -> Vec<TermDoc> {
    p.terms().rev().map(|(m, c)| (m.exponents().to_vec(), scalar::to_canonical(c))).collect()
}

fn poly_from_doc(terms: &[TermDoc], arity: usize, what: &str) -> Result<Polynomial, CertError> {
    let bad = |msg: String| CertError::Malformed(format!("{what}: {msg}"));
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        if e.len() != arity {
            return Err(bad(format!("exponent vector {e:?} should have length {arity}")));
        }
        if !seen.insert(e.clone()) {
            return Err(bad(format!("duplicate term {e:?}")));
        }
        let c = scalar::parse_canonical(c).map_err(|_| bad(format!("bad scalar {c:?}")))?;
        if num_traits::Zero::is_zero(&c) {
            return Err(bad("zero coefficient".into()));
        }
        out.push((Monomial::new(e.clone()), c));
    }
    Ok(Polynomial::from_terms(arity, out)?)
}

fn degree_doc(d: Degree) -> DegreeDoc {
    match d {
        Degree::Finite(d) => DegreeDoc::Finite(d),
        Degree::NegInfinity => DegreeDoc::Symbol("-inf".into()),
    }
}

fn degree_from_doc(d: &DegreeDoc) -> Result<Degree, CertError> {
    match d {
        DegreeDoc::Finite(d) => Ok(Degree::Finite(*d)),
        DegreeDoc::Symbol(s) if s == "-inf" => Ok(Degree::NegInfinity),
        DegreeDoc::Symbol(s) => Err(CertError::Malformed(format!("bad degree {s:?}"))),
    }
}

impl CertificateFile {
    pub fn new(sys: &SquareSystem, certificate: FinitenessCertificate) -> Self {
        CertificateFile {
            tool_version: TOOL_VERSION.to_string(),
            system_hash: system_hash(sys),
            variables: sys.ring().names().to_vec(),
            degrees: sys.degrees().to_vec(),
            certificate,
        }
    }

    pub fn to_json(&self) -> String {
        let cert = &self.certificate;
        let doc = CertificateDoc {
            format: FORMAT.to_string(),
            version: FORMAT_VERSION,
            tool_version: self.tool_version.clone(),
            system_hash: self.system_hash.clone(),
            variables: self.variables.clone(),
            degrees: self.degrees.clone(),
            c: cert.c,
            charts: cert
                .charts
                .iter()
                .zip(&cert.lifted)
                .map(|(ch, lifted)| ChartDoc {
                    chart: ch.chart + 1,
                    cofactor_degrees: ch.degrees.iter().copied().map(degree_doc).collect(),
                    cofactors: ch.cofactors.iter().map(poly_doc).collect(),
                    lifted: lifted.iter().map(poly_doc).collect(),
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, CertError> {
        let doc: CertificateDoc = serde_json::from_str(text).map_err(|e| CertError::Malformed(e.to_string()))?;
        if doc.format != FORMAT || doc.version != FORMAT_VERSION {
            return Err(CertError::Malformed(format!("unsupported format {} v{}", doc.format, doc.version)));
        }
        let n = doc.variables.len();
        if n == 0 {
            return Err(CertError::Malformed("no variables".into()));
        }
        let mut charts = Vec::with_capacity(doc.charts.len());
        let mut lifted = Vec::with_capacity(doc.charts.len());
        for ch in &doc.charts {
            if ch.chart == 0 {
                return Err(CertError::Malformed("chart indices are 1-based".into()));
            }
            let what = format!("chart {}", ch.chart);
            let cofactors = ch
                .cofactors
                .iter()
                .map(|t| poly_from_doc(t, n - 1, &what))
                .collect::<Result<Vec<_>, _>>()?;
            let degrees = ch.cofactor_degrees.iter().map(degree_from_doc).collect::<Result<Vec<_>, _>>()?;
            charts.push(ChartCertificate { chart: ch.chart - 1, cofactors, degrees });
            lifted.push(ch.lifted.iter().map(|t| poly_from_doc(t, n, &what)).collect::<Result<Vec<_>, _>>()?);
        }
        Ok(CertificateFile {
            tool_version: doc.tool_version,
            system_hash: doc.system_hash,
            variables: doc.variables,
            degrees: doc.degrees,
            certificate: FinitenessCertificate { c: doc.c, charts, lifted },
        })
    }

    /// Hash binding plus [`verify_detailed`](super::verify_detailed).
    pub fn verify_against(&self, sys: &SquareSystem) -> Result<(), CertError> {
        let expected = system_hash(sys);
        if self.system_hash != expected {
            return Err(CertError::CertificateInvalid(format!(
                "system hash mismatch: certificate has {}, input is {expected}",
                self.system_hash
            )));
        }
        if self.degrees != sys.degrees() {
            return Err(CertError::CertificateInvalid("degree list does not match the system".into()));
        }
        super::verify_detailed(sys, &self.certificate)
    }
}
