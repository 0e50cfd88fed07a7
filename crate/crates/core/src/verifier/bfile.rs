//! OEIS b-file parsing and comparison.

use crate::error::{Error, Result};
use crate::sequences::Sequence;

/// Values of a b-file listing in index order. Lines are `index value`;
/// blank lines and `#` comments are ignored.
pub fn parse_bfile(text: &str) -> Result<Vec<(u64, u64)>> {
    let mut out: Vec<(u64, u64)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [index, value] = fields[..] else {
            return Err(err(format!("expected `index value`, got {line:?}")));
        };
        let index: u64 = index.parse().map_err(|_| err(format!("bad index {index:?}")))?;
        let value: u64 = value.parse().map_err(|_| err(format!("bad value {value:?}")))?;
        if out.last().is_some_and(|&(prev, _)| index <= prev) {
            return Err(err(format!("index {index} is not ascending")));
        }
        out.push((index, value));
    }
    Ok(out)
}

/// First disagreement between a listing and the enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// Index as written in the b-file, or one past the last line when the
    /// listing stops short of the enumeration.
    pub index: u64,
    pub listed: Option<u64>,
    pub enumerated: Option<u64>,
}

/// Compares the listing with `enumerate_ascending` up to its largest value.
/// Leading zeros are skipped since the sequences here start at 1.
pub fn compare_bfile(seq: &Sequence, text: &str) -> Result<Option<Mismatch>> {
    let listing: Vec<(u64, u64)> = parse_bfile(text)?.into_iter().skip_while(|&(_, v)| v == 0).collect();
    let limit = listing.iter().map(|&(_, v)| v).max().unwrap_or(0);
    let enumerated = seq.enumerate_ascending(limit)?;
    for (pos, &(index, value)) in listing.iter().enumerate() {
        let have = enumerated.get(pos).copied();
        if have != Some(value) {
            return Ok(Some(Mismatch { index, listed: Some(value), enumerated: have }));
        }
    }
    if let Some(&extra) = enumerated.get(listing.len()) {
        let index = listing.last().map_or(0, |&(i, _)| i + 1);
        return Ok(Some(Mismatch { index, listed: None, enumerated: Some(extra) }));
    }
    Ok(None)
}
