use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::HuntError;
use crate::qcore::QPoint3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    /// The point set itself is not 3-colorable.
    DirectChromatic,
    /// A 25-point Grötzsch-type graph in label order.
    GrotzschTypeStructural,
    /// The 10-point H device over a symmetric 5-cycle.
    HDevice,
}

impl CertificateKind {
    pub fn name(self) -> &'static str {
        match self {
            CertificateKind::DirectChromatic => "direct-chromatic",
            CertificateKind::GrotzschTypeStructural => "grotzsch-type-structural",
            CertificateKind::HDevice => "h-device",
        }
    }
}

impl FromStr for CertificateKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [
            CertificateKind::DirectChromatic,
            CertificateKind::GrotzschTypeStructural,
            CertificateKind::HDevice,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| format!("unknown certificate kind {s:?}"))
    }
}

/// A self-contained claim: points, optional abstract edges and
/// kind-specific `key=value` data.
///
/// ```text
/// certificate h-device t=30
/// [vertices]
/// 0 0 0
/// ...
/// [edges]
/// 0 1
/// ...
/// [data]
/// branch=B
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub t: u64,
    pub vertices: Vec<QPoint3>,
    pub edges: Vec<(usize, usize)>,
    pub data: BTreeMap<String, String>,
}

impl Certificate {
    pub fn new(kind: CertificateKind, t: u64, vertices: Vec<QPoint3>) -> Certificate {
        Certificate {
            kind,
            t,
            vertices,
            edges: Vec::new(),
            data: BTreeMap::new(),
        }
    }

    pub fn with_edges(mut self, edges: impl IntoIterator<Item = (usize, usize)>) -> Certificate {
        self.edges = edges.into_iter().collect();
        self
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Certificate {
        self.data.insert(key.to_string(), value.to_string());
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.data.get(key).map(String::as_str)
    }

    /// Whether `text` starts (after comments) with a certificate header.
    pub fn sniff(text: &str) -> bool {
        text.lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .find(|l| !l.is_empty())
            .is_some_and(|l| l.starts_with("certificate "))
    }

    pub fn parse(text: &str) -> Result<Certificate, HuntError> {
        #[derive(PartialEq)]
        enum Section {
            Header,
            Vertices,
            Edges,
            Data,
        }
        let mut section = Section::Header;
        let mut header: Option<(CertificateKind, u64)> = None;
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut data = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let bad = |reason: String| HuntError::Malformed {
                line: line_no,
                reason,
            };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if header.is_none() {
                let mut words = line.split_whitespace();
                if words.next() != Some("certificate") {
                    return Err(bad("expected `certificate <kind> t=<int>`".into()));
                }
                let kind = words.next().ok_or_else(|| bad("missing kind".into()))?;
                let kind = kind.parse::<CertificateKind>().map_err(bad)?;
                let t = words
                    .next()
                    .and_then(|w| w.strip_prefix("t="))
                    .and_then(|w| w.parse::<u64>().ok())
                    .ok_or_else(|| bad("expected t=<int>".into()))?;
                if words.next().is_some() {
                    return Err(bad("trailing words in header".into()));
                }
                header = Some((kind, t));
                continue;
            }
            match line {
                "[vertices]" => section = Section::Vertices,
                "[edges]" => section = Section::Edges,
                "[data]" => section = Section::Data,
                _ => match section {
                    Section::Header => return Err(bad("expected a section header".into())),
                    Section::Vertices => {
                        vertices.push(QPoint3::parse(line).map_err(|e| bad(e.to_string()))?);
                    }
                    Section::Edges => {
                        let nums: Vec<usize> = line
                            .split_whitespace()
                            .map(|w| w.parse::<usize>())
                            .collect::<Result<_, _>>()
                            .map_err(|_| bad("bad vertex index".into()))?;
                        match nums[..] {
                            [u, v] => edges.push((u, v)),
                            _ => return Err(bad("expected two vertex indices".into())),
                        }
                    }
                    Section::Data => {
                        let (k, v) = line
                            .split_once('=')
                            .ok_or_else(|| bad("expected key=value".into()))?;
                        data.insert(k.trim().to_string(), v.trim().to_string());
                    }
                },
            }
        }
        let (kind, t) = header.ok_or(HuntError::Malformed {
            line: 0,
            reason: "empty certificate".into(),
        })?;
        let n = vertices.len();
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n || u == v) {
            return Err(HuntError::Malformed {
                line: 0,
                reason: format!("edge ({u}, {v}) is invalid for {n} vertices"),
            });
        }
        Ok(Certificate {
            kind,
            t,
            vertices,
            edges,
            data,
        })
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate {} t={}", self.kind.name(), self.t)?;
        writeln!(f, "[vertices]")?;
        for p in &self.vertices {
            writeln!(f, "{p}")?;
        }
        if !self.edges.is_empty() {
            writeln!(f, "[edges]")?;
            for (u, v) in &self.edges {
                writeln!(f, "{u} {v}")?;
            }
        }
        if !self.data.is_empty() {
            writeln!(f, "[data]")?;
            for (k, v) in &self.data {
                writeln!(f, "{k}={v}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let cert = Certificate::new(
            CertificateKind::HDevice,
            30,
            vec![
                QPoint3::parse("0 0 0").unwrap(),
                QPoint3::parse("-1 -2 5").unwrap(),
            ],
        )
        .with_edges([(0, 1)])
        .with("branch", "B")
        .with("radius_sq", "539/30");
        let text = cert.to_string();
        assert!(Certificate::sniff(&text));
        assert_eq!(Certificate::parse(&text).unwrap(), cert);
        let commented = format!(
            "# produced by a test\n{}",
            text.replace("[edges]", "[edges] # abstract")
        );
        assert_eq!(Certificate::parse(&commented).unwrap(), cert);
    }

    #[test]
    fn malformed() {
        let err = |s: &str| Certificate::parse(s).unwrap_err();
        assert!(matches!(
            err("t=22\n0 0 0"),
            HuntError::Malformed { line: 1, .. }
        ));
        assert!(matches!(
            err("certificate magic t=22"),
            HuntError::Malformed { line: 1, .. }
        ));
        assert!(matches!(
            err("certificate h-device t=x"),
            HuntError::Malformed { line: 1, .. }
        ));
        assert!(matches!(
            err("certificate h-device t=30\n[vertices]\n1/0 0 0"),
            HuntError::Malformed { line: 3, .. }
        ));
        assert!(matches!(
            err("certificate h-device t=30\n[vertices]\n0 0 0\n[edges]\n0 3"),
            HuntError::Malformed { .. }
        ));
        assert!(matches!(
            err("certificate h-device t=30\n[data]\nnoequals"),
            HuntError::Malformed { line: 3, .. }
        ));
        assert!(!Certificate::sniff("t=22\n0 0 0\n"));
    }
}
