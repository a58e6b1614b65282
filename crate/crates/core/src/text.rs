//! Plain-text formats.
//!
//! A codebook (or a subset family, read as indicator vectors) is one `0`/`1` word per
//! line. Blank lines and lines starting with `#` are skipped. A pair file holds two
//! codebooks separated by a `---` line. A system file holds one or more systems
//! separated by `===` lines; inside a system, `---` separates codebooks, which are
//! read two at a time as `(C1, C2)` pairs. Parse errors carry 1-based line numbers
//! of the whole file.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::codebook::{Codebook, Word, ZeroErrorSystem};
use crate::error::{Error, Result};
use crate::pipeline::{ConstructionReport, SearchResult};
use crate::sps::SubsetFamily;

pub const PAIR_SEPARATOR: &str = "---";
pub const SYSTEM_SEPARATOR: &str = "===";

/// Content lines with their 1-based line numbers.
type Lines<'a> = Vec<(usize, &'a str)>;

fn content_lines(text: &str) -> Lines<'_> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn split_on<'a>(lines: &[(usize, &'a str)], sep: &str) -> Vec<Lines<'a>> {
    lines
        .split(|(_, l)| *l == sep)
        .map(<[_]>::to_vec)
        .collect()
}

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_word(line: usize, s: &str) -> Result<Word> {
    if let Some(ch) = s.chars().find(|c| *c != '0' && *c != '1') {
        return Err(parse_error(line, format!("invalid character {ch:?}")));
    }
    s.parse().map_err(|e: Error| parse_error(line, e.to_string()))
}

/// `after` is the line number reported when the block has no words.
fn codebook_from_lines(lines: &[(usize, &str)], after: usize) -> Result<Codebook> {
    let Some(&(first_line, first)) = lines.first() else {
        return Err(parse_error(after, "expected at least one codeword"));
    };
    let n = first.len();
    let mut seen: HashMap<Word, usize> = HashMap::with_capacity(lines.len());
    let mut words = Vec::with_capacity(lines.len());
    for &(line, s) in lines {
        let w = parse_word(line, s)?;
        if w.len() != n {
            return Err(parse_error(
                line,
                format!("length {} differs from length {n} on line {first_line}", w.len()),
            ));
        }
        if let Some(prev) = seen.insert(w, line) {
            return Err(parse_error(line, format!("duplicate codeword {w} (first on line {prev})")));
        }
        words.push(w);
    }
    Codebook::new(n, words)
}

fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

pub fn parse_codebook(text: &str) -> Result<Codebook> {
    codebook_from_lines(&content_lines(text), last_line(text))
}

/// Two codebooks separated by a `---` line.
pub fn parse_pair(text: &str) -> Result<(Codebook, Codebook)> {
    let lines = content_lines(text);
    let blocks = split_on(&lines, PAIR_SEPARATOR);
    if blocks.len() != 2 {
        return Err(parse_error(
            last_line(text),
            format!("expected two codebooks separated by {PAIR_SEPARATOR}, found {}", blocks.len()),
        ));
    }
    let c1 = codebook_from_lines(&blocks[0], separator_line(&lines, 0))?;
    let c2 = codebook_from_lines(&blocks[1], last_line(text))?;
    if c1.n() != c2.n() {
        return Err(parse_error(
            blocks[1][0].0,
            format!("length {} differs from the first codebook's length {}", c2.n(), c1.n()),
        ));
    }
    Ok((c1, c2))
}

fn separator_line(lines: &[(usize, &str)], which: usize) -> usize {
    lines
        .iter()
        .filter(|(_, l)| *l == PAIR_SEPARATOR)
        .nth(which)
        .map(|(n, _)| *n)
        .unwrap_or(1)
}

pub fn parse_systems(text: &str) -> Result<Vec<ZeroErrorSystem>> {
    let lines = content_lines(text);
    let mut systems = Vec::new();
    for chunk in split_on(&lines, SYSTEM_SEPARATOR) {
        let start = chunk.first().map(|(n, _)| *n).unwrap_or_else(|| last_line(text));
        let blocks = split_on(&chunk, PAIR_SEPARATOR);
        if !blocks.len().is_multiple_of(2) {
            return Err(parse_error(
                start,
                format!("system has {} codebooks; expected an even number", blocks.len()),
            ));
        }
        let mut codebooks = Vec::with_capacity(blocks.len());
        for block in &blocks {
            codebooks.push(codebook_from_lines(block, start)?);
        }
        let mut pairs = Vec::with_capacity(codebooks.len() / 2);
        let mut it = codebooks.into_iter();
        while let (Some(a), Some(b)) = (it.next(), it.next()) {
            pairs.push((a, b));
        }
        systems.push(
            ZeroErrorSystem::new(pairs).map_err(|e| parse_error(start, e.to_string()))?,
        );
    }
    Ok(systems)
}

/// Rows are indicator vectors of the member sets.
pub fn parse_family(text: &str) -> Result<SubsetFamily> {
    Ok(SubsetFamily::from_codebook(&parse_codebook(text)?))
}

pub fn format_codebook(c: &Codebook) -> String {
    let mut out = String::new();
    if c.n() == 0 {
        out.push_str("# the empty word\n");
    }
    for w in c.iter() {
        let _ = writeln!(out, "{w}");
    }
    out
}

/// An empty family formats to an empty string.
pub fn format_family(f: &SubsetFamily) -> String {
    f.to_codebook().map(|c| format_codebook(&c)).unwrap_or_default()
}

pub fn format_system(v: &ZeroErrorSystem) -> String {
    let blocks: Vec<String> = v
        .pairs()
        .iter()
        .flat_map(|(a, b)| [format_codebook(a), format_codebook(b)])
        .collect();
    blocks.join(&format!("{PAIR_SEPARATOR}\n"))
}

fn join_words(ws: &[Word]) -> String {
    ws.iter().map(Word::to_string).collect::<Vec<_>>().join(",")
}

pub fn format_report(r: &ConstructionReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n: {}", r.n);
    let _ = writeln!(out, "s: {}", r.s);
    let _ = writeln!(out, "k: {}", r.k);
    let _ = writeln!(out, "k_prime_log: {}", r.k_prime_log);
    let _ = writeln!(out, "g_set: {{{}}}", join_words(&r.g_set));
    let _ = writeln!(out, "m0: {}", r.system.m0());
    let _ = writeln!(out, "m1: {}", r.system.m1());
    let _ = writeln!(out, "m2: {}", r.system.m2());
    let _ = writeln!(out, "mass: {}", r.mass);
    let _ = writeln!(out, "mass_floor: {:.6}", r.mass_floor());
    let _ = writeln!(out, "mass_check: {}", if r.mass_bound_holds() { "PASS" } else { "FAIL" });
    match r.rates() {
        Some(t) => {
            let _ = writeln!(out, "rates: {:.6},{:.6},{:.6}", t.r0, t.r1, t.r2);
        }
        None => out.push_str("rates: undefined (no coordinates left)\n"),
    }
    let _ = writeln!(out, "verdict: {}", r.verdict);
    out.push_str("system:\n");
    out.push_str(&format_system(&r.system));
    out
}

pub fn format_search(r: &SearchResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n: {}", r.n);
    let _ = writeln!(out, "best_product: {}", r.best_product);
    let _ = writeln!(out, "complete: {}", r.complete);
    let _ = writeln!(out, "witnesses: {}", r.witnesses.len());
    for (i, (a, b)) in r.witnesses.iter().enumerate() {
        if i > 0 {
            let _ = writeln!(out, "{SYSTEM_SEPARATOR}");
        }
        out.push_str(&format_codebook(a));
        let _ = writeln!(out, "{PAIR_SEPARATOR}");
        out.push_str(&format_codebook(b));
    }
    out
}
