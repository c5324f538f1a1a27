//! Plain-text codebook files.
//!
//! ```text
//! # n=3 metric=d1
//! -1 -1 -1
//! 1 1 1
//! ```
//!
//! Ternary codes use the header `# n=<n> metric=d1` and symbols `-1 0 1`.
//! Codes in Hamming space use `# n=<n> metric=hamming q=<q>` and symbols
//! `0..q-1`. Blank lines and later `#` lines are ignored.

use std::fmt::Write as _;

use crate::code::{BinaryCode, TernaryCode};
use crate::error::{Error, Result};
use crate::word::{BinaryWord, TernaryWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Codebook {
    Ternary(TernaryCode),
    Hamming {
        q: u8,
        n: usize,
        words: Vec<Vec<u8>>,
    },
}

impl Codebook {
    pub fn word_count(&self) -> usize {
        match self {
            Codebook::Ternary(c) => c.len(),
            Codebook::Hamming { words, .. } => words.len(),
        }
    }

    pub fn into_ternary(self) -> Result<TernaryCode> {
        match self {
            Codebook::Ternary(c) => Ok(c),
            Codebook::Hamming { .. } => Err(Error::InvalidParameter(
                "expected a d1 (ternary) codebook".into(),
            )),
        }
    }

    pub fn into_binary(self) -> Result<BinaryCode> {
        match self {
            Codebook::Hamming { q: 2, n, words } => BinaryCode::from_words(
                n,
                words
                    .iter()
                    .map(|w| BinaryWord::new(w))
                    .collect::<Result<Vec<_>>>()?,
            ),
            _ => Err(Error::InvalidParameter(
                "expected a binary codebook (metric=hamming q=2)".into(),
            )),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Codebook::Ternary(c) => ternary_to_text(c),
            Codebook::Hamming { q, n, words } => qary_to_text(*q, *n, words),
        }
    }
}

pub fn ternary_to_text(code: &TernaryCode) -> String {
    let mut out = format!("# n={} metric=d1\n", code.word_len());
    for w in code {
        let _ = writeln!(out, "{w}");
    }
    out
}

pub fn binary_to_text(code: &BinaryCode) -> String {
    let words: Vec<Vec<u8>> = code.iter().map(|w| w.symbols().collect()).collect();
    qary_to_text(2, code.word_len(), &words)
}

pub fn qary_to_text(q: u8, n: usize, words: &[Vec<u8>]) -> String {
    let mut out = format!("# n={n} metric=hamming q={q}\n");
    for w in words {
        let line: Vec<String> = w.iter().map(|s| s.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

struct Header {
    n: usize,
    q: Option<u8>,
}

fn parse_header(line: &str, lineno: usize) -> Result<Header> {
    let err = |message: String| Error::Parse {
        line: lineno,
        message,
    };
    let body = line
        .strip_prefix('#')
        .ok_or_else(|| err("missing header `# n=<n> metric=<d1|hamming>`".into()))?;
    let mut n = None;
    let mut metric = None;
    let mut q = None;
    for field in body.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| err(format!("malformed header field `{field}`")))?;
        match key {
            "n" => {
                n = Some(
                    value
                        .parse::<usize>()
                        .map_err(|_| err(format!("bad length `{value}`")))?,
                )
            }
            "metric" => metric = Some(value.to_string()),
            "q" => {
                q = Some(
                    value
                        .parse::<u8>()
                        .map_err(|_| err(format!("bad alphabet size `{value}`")))?,
                )
            }
            _ => return Err(err(format!("unknown header field `{key}`"))),
        }
    }
    let n = n.ok_or_else(|| err("header lacks n=<n>".into()))?;
    match metric.as_deref() {
        Some("d1") => {
            if q.is_some() {
                return Err(err("q= is only valid with metric=hamming".into()));
            }
            Ok(Header { n, q: None })
        }
        Some("hamming") => {
            let q = q.unwrap_or(2);
            if q < 2 {
                return Err(err("alphabet size must be at least 2".into()));
            }
            Ok(Header { n, q: Some(q) })
        }
        Some(other) => Err(err(format!("unknown metric `{other}`"))),
        None => Err(err("header lacks metric=<d1|hamming>".into())),
    }
}

/// Parses a codebook file.
pub fn parse(text: &str) -> Result<Codebook> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "empty codebook".into(),
    })?;
    let header = parse_header(header, hline)?;
    let mut ternary = TernaryCode::new(header.n);
    let mut qary: Vec<Vec<u8>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (lineno, line) in lines {
        if line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: lineno,
            message,
        };
        let values = line
            .split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|_| err(format!("bad symbol `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        if values.len() != header.n {
            return Err(err(format!(
                "word has {} symbols, header says n={}",
                values.len(),
                header.n
            )));
        }
        match header.q {
            None => {
                let syms: Vec<i8> = values
                    .iter()
                    .map(|&v| {
                        if (-1..=1).contains(&v) {
                            Ok(v as i8)
                        } else {
                            Err(err(format!("symbol {v} outside {{-1,0,1}}")))
                        }
                    })
                    .collect::<Result<_>>()?;
                let w = TernaryWord::new(&syms).map_err(|e| err(e.to_string()))?;
                if !ternary.insert(w).map_err(|e| err(e.to_string()))? {
                    return Err(err(format!("duplicate word `{line}`")));
                }
            }
            Some(q) => {
                let syms: Vec<u8> = values
                    .iter()
                    .map(|&v| {
                        if (0..q as i64).contains(&v) {
                            Ok(v as u8)
                        } else {
                            Err(err(format!("symbol {v} outside 0..{q}")))
                        }
                    })
                    .collect::<Result<_>>()?;
                if !seen.insert(syms.clone()) {
                    return Err(err(format!("duplicate word `{line}`")));
                }
                qary.push(syms);
            }
        }
    }
    Ok(match header.q {
        None => Codebook::Ternary(ternary),
        Some(q) => Codebook::Hamming {
            q,
            n: header.n,
            words: qary,
        },
    })
}
