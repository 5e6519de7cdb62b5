//! Polynomial-system text files.
//!
//! ```text
//! # Newton power sums, n = 2
//! variables: x, y
//! x + y
//! x^2 + y^2
//! ```
//!
//! `#` starts a comment running to the end of the line; blank lines are
//! ignored. The `variables:` line comes first, then one polynomial per line.

use crate::parse::parse_polynomial_at;
use crate::polyring::{PolyError, Polynomial, RingContext};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemFile {
    pub ring: RingContext,
    pub polys: Vec<Polynomial>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> PolyError {
    PolyError::Parse { line, column, message: message.into() }
}

impl SystemFile {
    pub fn new(ring: RingContext, polys: Vec<Polynomial>) -> Self {
        SystemFile { ring, polys }
    }

    pub fn parse(text: &str) -> Result<Self, PolyError> {
        let mut ring: Option<RingContext> = None;
        let mut polys = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            match &ring {
                None => {
                    let indent = content.len() - content.trim_start().len();
                    let Some(rest) = content.trim_start().strip_prefix("variables:") else {
                        return Err(parse_err(line_no, indent + 1, "expected `variables: <name>, …` first"));
                    };
                    let start = content.len() - rest.len();
                    let names: Vec<&str> = rest.split(',').map(str::trim).collect();
                    ring = Some(RingContext::new(names).map_err(|e| parse_err(line_no, start + 1, e.to_string()))?);
                }
                Some(r) => polys.push(parse_polynomial_at(content, r.names(), line_no)?),
            }
        }
        let ring = ring.ok_or_else(|| parse_err(1, 1, "missing `variables:` line"))?;
        Ok(SystemFile { ring, polys })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("variables: {}\n", self.ring.names().join(", "));
        for p in &self.polys {
            out.push_str(&self.ring.format(p));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let f = SystemFile::parse("# demo\n\nvariables: x, y\nx + y  # linear\n\nx^2 + y^2\n").unwrap();
        assert_eq!(f.ring.names(), &["x", "y"]);
        assert_eq!(f.polys.len(), 2);
        assert_eq!(f.to_text(), "variables: x, y\nx + y\nx^2 + y^2\n");
        assert_eq!(SystemFile::parse(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn errors_carry_positions() {
        let e = SystemFile::parse("x + y\n").unwrap_err();
        assert!(matches!(e, PolyError::Parse { line: 1, column: 1, .. }));
        let e = SystemFile::parse("variables: x, y\nx + z\n").unwrap_err();
        assert!(matches!(e, PolyError::Parse { line: 2, column: 5, .. }), "{e:?}");
        let e = SystemFile::parse("variables: x, x\n").unwrap_err();
        assert!(matches!(e, PolyError::Parse { line: 1, .. }));
        let e = SystemFile::parse("# nothing\n").unwrap_err();
        assert!(matches!(e, PolyError::Parse { .. }));
    }
}
