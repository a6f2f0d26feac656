//! The `.tri` facet file format, the bundled catalog and the realization checker.
//!
//! A facet file has a header line `d n` followed by one facet per line. Lines
//! starting with `#` are comments. Labels are decimal integers `1..=n`; on input a
//! single letter `a`..`z` also stands for `10`..`35`.

pub mod catalog;
pub mod realize;

use std::path::Path;

use crate::complex::{Complex, Label};
use crate::error::{Error, Result};

fn parse_label(tok: &str, line: usize) -> Result<u64> {
    let mut chars = tok.chars();
    if let (Some(ch @ 'a'..='z'), None) = (chars.next(), chars.next()) {
        return Ok(ch as u64 - 'a' as u64 + 10);
    }
    tok.parse::<u64>().map_err(|_| Error::Parse { line, msg: format!("bad label `{tok}`") })
}

/// Parses a facet file.
pub fn parse(text: &str) -> Result<Complex> {
    let mut header: Option<(usize, usize)> = None;
    let mut facets: Vec<Vec<Label>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        let Some((d, n)) = header else {
            if toks.len() != 2 {
                return Err(Error::Parse { line, msg: "expected header `d n`".into() });
            }
            let num = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse { line, msg: format!("bad header value `{t}`") });
            header = Some((num(toks[0])?, num(toks[1])?));
            continue;
        };
        if toks.len() != d + 1 {
            return Err(Error::Parse { line, msg: format!("facet has {} labels, expected {}", toks.len(), d + 1) });
        }
        let mut facet = Vec::with_capacity(d + 1);
        for t in toks {
            let label = parse_label(t, line)?;
            if label == 0 || label > n as u64 {
                return Err(Error::LabelOutOfRange { line, label, n });
            }
            facet.push(label as Label);
        }
        facets.push(facet);
    }
    let Some((d, n)) = header else {
        return Err(Error::Parse { line: 0, msg: "missing header".into() });
    };
    let c = Complex::from_facets(facets)?;
    if c.dim() != d || c.n() != n {
        return Err(Error::HeaderMismatch { declared: format!("d={d} n={n}"), found: format!("d={} n={}", c.dim(), c.n()) });
    }
    Ok(c)
}

/// Canonical text: header and sorted facets in decimal.
pub fn write(c: &Complex) -> String {
    let mut s = format!("{} {}\n", c.dim(), c.n());
    for f in c.facets() {
        let labels: Vec<String> = f.vertices().iter().map(|v| v.to_string()).collect();
        s.push_str(&labels.join(" "));
        s.push('\n');
    }
    s
}

/// [`write`] preceded by `# ` comment lines.
pub fn write_with_comments(c: &Complex, comments: &[&str]) -> String {
    let mut s: String = comments.iter().map(|l| format!("# {l}\n")).collect();
    s.push_str(&write(c));
    s
}

pub fn read_file(path: impl AsRef<Path>) -> Result<Complex> {
    parse(&std::fs::read_to_string(path)?)
}

pub fn write_file(path: impl AsRef<Path>, c: &Complex) -> Result<()> {
    std::fs::write(path, write(c))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters_and_round_trip() {
        let c = parse("# x\n2 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n").unwrap();
        assert_eq!(c.n(), 4);
        assert_eq!(parse(&write(&c)).unwrap(), c);
        assert_eq!(parse_label("c", 1).unwrap(), 12);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("2 4\n1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("2 3\n1 2 5\n"), Err(Error::LabelOutOfRange { line: 2, label: 5, .. })));
        assert!(matches!(parse("2 5\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n"), Err(Error::HeaderMismatch { .. })));
    }
}
