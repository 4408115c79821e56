//! Plain-text code files.
//!
//! ```text
//! # family=c n=12 params=P=9,c=3,d=1
//! 001001101101
//! ...
//! ```
//!
//! The header names the family and its residues; `family=custom` marks a
//! hand-made set with no membership rule. Codewords follow one per line in
//! sorted order.

use std::collections::HashMap;

use super::parity::HWeight;
use super::CodeParams;
use crate::error::{Error, Result};
use crate::seqset::SeqSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeFile {
    /// `None` for `family=custom`.
    pub params: Option<CodeParams>,
    pub code: SeqSet,
}

impl CodeFile {
    pub fn header(&self) -> String {
        match &self.params {
            Some(p) => format!("# {p}"),
            None => format!("# family=custom n={} params=", self.code.common_length()),
        }
    }

    pub fn to_text(&self) -> String {
        format!("{}\n{}", self.header(), self.code.to_lines())
    }

    /// Parses a code file; with a known family, every codeword must satisfy it.
    pub fn parse(text: &str) -> Result<CodeFile> {
        let mut lines = text.lines();
        let header = lines
            .by_ref()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or_else(|| Error::Parse("empty code file".into()))?;
        let (tag, n, params) = parse_header(header)?;
        let params = parse_params(&tag, n, &params)?;
        let body: Vec<&str> = lines.collect();
        let code = SeqSet::parse_lines(n, &body.join("\n"))?;
        if let Some(p) = &params {
            if let Some(bad) = code.iter().find(|x| !p.contains(x)) {
                return Err(Error::Parse(format!("codeword {bad} does not belong to {p}")));
            }
        }
        Ok(CodeFile { params, code })
    }
}

fn parse_header(line: &str) -> Result<(String, usize, String)> {
    let rest = line
        .strip_prefix('#')
        .ok_or_else(|| Error::Parse(format!("missing header line, got {line:?}")))?;
    let mut fields = HashMap::new();
    for token in rest.split_whitespace() {
        let (k, v) = token
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("malformed header field {token:?}")))?;
        fields.insert(k, v);
    }
    let get = |k: &str| fields.get(k).copied().ok_or_else(|| Error::Parse(format!("header lacks {k}=")));
    let n = get("n")?.parse().map_err(|_| Error::Parse(format!("bad n in header: {line:?}")))?;
    Ok((get("family")?.to_string(), n, fields.get("params").copied().unwrap_or("").to_string()))
}

fn number(key: &str, v: &str) -> Result<u64> {
    v.parse().map_err(|_| Error::Parse(format!("{key}={v:?} is not a number")))
}

fn tuple<const K: usize>(key: &str, v: &str) -> Result<[u64; K]> {
    let parts: Vec<u64> = v.split(':').map(|p| number(key, p)).collect::<Result<_>>()?;
    parts
        .try_into()
        .map_err(|_| Error::Parse(format!("{key} needs {K} ':'-separated residues, got {v:?}")))
}

/// Rebuilds [`CodeParams`] from a header's family tag, `n` and params string.
pub fn parse_params(tag: &str, n: usize, params: &str) -> Result<Option<CodeParams>> {
    let mut kv = HashMap::new();
    for item in params.split(',').filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("malformed parameter {item:?}")))?;
        kv.insert(k, v);
    }
    let get = |k: &str| kv.get(k).copied().ok_or_else(|| Error::Parse(format!("params lack {k}=")));
    let num = |k: &str| get(k).and_then(|v| number(k, v));
    let p = || num("P").map(|v| v as usize);
    let params = match tag {
        "custom" => return Ok(None),
        "full" => CodeParams::Full { n },
        "vt" => CodeParams::Vt { n, a: num("a")? },
        "c1" => CodeParams::C1 { n, p: p()?, c: num("c")?, d: num("d")? },
        "c" => CodeParams::Construction1 { n, p: p()?, c: num("c")?, d: num("d")? },
        "c2" => CodeParams::C2 { n, p: p()?, c: num("c")?, d: num("d")? },
        "parity" => {
            let f: [u64; 3] = tuple("f", get("f")?)?;
            let h: [u64; 2] = tuple("h", get("h")?)?;
            CodeParams::ParityChecks {
                n,
                h_weight: get("h-weight")?.parse::<HWeight>()?,
                residues: [f[0], f[1], f[2], h[0], h[1]],
            }
        }
        "e" => CodeParams::E {
            n,
            p: p()?,
            a: num("a")?,
            even: tuple("even", get("even")?)?,
            odd: tuple("odd", get("odd")?)?,
        },
        other => return Err(Error::Parse(format!("unknown family {other:?}"))),
    };
    params.validate()?;
    Ok(Some(params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::seq;

    #[test]
    fn round_trip_every_family() {
        let all = [
            CodeParams::Full { n: 5 },
            CodeParams::Vt { n: 6, a: 2 },
            CodeParams::C1 { n: 8, p: 2, c: 1, d: 0 },
            CodeParams::Construction1 { n: 10, p: 9, c: 3, d: 1 },
            CodeParams::C2 { n: 9, p: 3, c: 0, d: 1 },
            CodeParams::ParityChecks { n: 8, h_weight: HWeight::M1, residues: [0, 0, 0, 0, 0] },
            CodeParams::E { n: 10, p: 1, a: 0, even: [0; 5], odd: [0; 5] },
        ];
        for params in all {
            let file = CodeFile { params: Some(params), code: params.build().unwrap() };
            let text = file.to_text();
            assert!(text.starts_with(&format!("# family={} n=", params.family().tag())));
            assert_eq!(CodeFile::parse(&text).unwrap(), file, "{params}");
        }
    }

    #[test]
    fn custom_sets_round_trip() {
        let code = SeqSet::from_iter_checked(3, [seq("010"), seq("111")]).unwrap();
        let file = CodeFile { params: None, code };
        assert_eq!(file.to_text(), "# family=custom n=3 params=\n010\n111\n");
        assert_eq!(CodeFile::parse(&file.to_text()).unwrap(), file);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(CodeFile::parse("").is_err());
        assert!(CodeFile::parse("0101\n").is_err());
        assert!(CodeFile::parse("# family=vt n=4 params=a=0\n0001\n").is_err());
        assert!(CodeFile::parse("# family=vt n=4 params=a=9\n").is_err());
        assert!(CodeFile::parse("# family=zz n=4 params=\n").is_err());
        assert!(CodeFile::parse("# family=vt n=4 params=a=0\n011\n").is_err());
        assert!(CodeFile::parse("# family=parity n=6 params=h-weight=m1,f=0:0,h=0:0\n").is_err());
    }
}
