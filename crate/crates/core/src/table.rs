//! Immutable surface→replacement tables and code-point range sets, plus the
//! line formats they are loaded from.
//!
//! Table files are UTF-8, one `surface<TAB>replacement` pair per line. Lines
//! starting with `#` and blank lines are ignored, except that a line starting
//! with `#` and a tab maps the `#` sign itself. The replacement may be empty
//! (the surface is deleted); the surface may not.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct MappingTable {
    name: String,
    entries: Vec<(String, String)>,
    /// Entry indices grouped by the first character of the surface, sorted
    /// by that character; longest surface first within a group.
    by_first: Vec<(char, Vec<usize>)>,
    /// Bit per BMP code point that starts some surface.
    first_mask: Vec<u64>,
    lookup: HashMap<String, usize>,
}

impl MappingTable {
    pub fn parse(name: &str, source: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (n, line) in source.lines().enumerate() {
            let line_no = n + 1;
            let line = line.strip_suffix('\r').unwrap_or(line);
            if line.is_empty() || (line.starts_with('#') && !line.starts_with("#\t")) {
                continue;
            }
            let Some((surface, replacement)) = line.split_once('\t') else {
                return Err(Error::resource(name, line_no, "expected surface<TAB>replacement"));
            };
            if replacement.contains('\t') {
                return Err(Error::resource(name, line_no, "more than two columns"));
            }
            entries.push((line_no, surface.to_owned(), replacement.to_owned()));
        }
        Self::build(name, entries)
    }

    pub fn from_pairs<I, S, R>(name: &str, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, R)>,
        S: Into<String>,
        R: Into<String>,
    {
        let entries = pairs
            .into_iter()
            .enumerate()
            .map(|(i, (s, r))| (i + 1, s.into(), r.into()))
            .collect();
        Self::build(name, entries)
    }

    /// Concatenates several tables into one. Surfaces must stay unique across
    /// all of them.
    pub fn merge(name: &str, tables: &[&MappingTable]) -> Result<Self> {
        let entries = tables
            .iter()
            .flat_map(|t| t.entries.iter())
            .enumerate()
            .map(|(i, (s, r))| (i + 1, s.clone(), r.clone()))
            .collect();
        Self::build(name, entries)
    }

    fn build(name: &str, raw: Vec<(usize, String, String)>) -> Result<Self> {
        let mut entries = Vec::with_capacity(raw.len());
        let mut lookup = HashMap::with_capacity(raw.len());
        for (line_no, surface, replacement) in raw {
            if surface.is_empty() {
                return Err(Error::resource(name, line_no, "empty surface"));
            }
            if lookup.insert(surface.clone(), entries.len()).is_some() {
                return Err(Error::resource(name, line_no, format!("duplicate surface {surface:?}")));
            }
            entries.push((surface, replacement));
        }
        let mut grouped: BTreeMap<char, Vec<usize>> = BTreeMap::new();
        for (i, (surface, _)) in entries.iter().enumerate() {
            let first = surface.chars().next().expect("surface is non-empty");
            grouped.entry(first).or_default().push(i);
        }
        let mut by_first: Vec<(char, Vec<usize>)> = grouped.into_iter().collect();
        for (_, bucket) in &mut by_first {
            bucket.sort_by_key(|&i| std::cmp::Reverse(entries[i].0.len()));
        }
        let mut first_mask = vec![0u64; 1024];
        for &(c, _) in &by_first {
            let cp = c as usize;
            if cp < 0x10000 {
                first_mask[cp / 64] |= 1 << (cp % 64);
            }
        }
        Ok(Self { name: name.to_owned(), entries, by_first, first_mask, lookup })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, surface: &str) -> Option<&str> {
        self.lookup.get(surface).map(|&i| self.entries[i].1.as_str())
    }

    pub fn contains(&self, surface: &str) -> bool {
        self.lookup.contains_key(surface)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(s, r)| (s.as_str(), r.as_str()))
    }

    pub fn surfaces(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(s, _)| s.as_str())
    }

    /// Longest entry whose surface is a prefix of `text`.
    pub fn match_prefix<'a>(&'a self, text: &'a str) -> Option<(&'a str, &'a str)> {
        self.prefix_matches(text).next()
    }

    /// Every entry whose surface is a prefix of `text`, longest first.
    pub fn prefix_matches<'a>(&'a self, text: &'a str) -> impl Iterator<Item = (&'a str, &'a str)> + 'a {
        let candidates = text
            .chars()
            .next()
            .filter(|&c| self.may_start(c))
            .and_then(|c| self.by_first.binary_search_by_key(&c, |(k, _)| *k).ok())
            .map(|i| &self.by_first[i].1);
        candidates.into_iter().flatten().filter_map(move |&i| {
            let (s, r) = &self.entries[i];
            text.starts_with(s.as_str()).then_some((s.as_str(), r.as_str()))
        })
    }

    fn may_start(&self, c: char) -> bool {
        let cp = c as usize;
        cp >= 0x10000 || self.first_mask[cp / 64] & (1 << (cp % 64)) != 0
    }

    /// Rewrites `text` left to right, replacing the longest matching surface
    /// at each position. Unmatched characters are copied through.
    pub fn replace_all(&self, text: &str) -> String {
        if !text.chars().any(|c| self.may_start(c)) {
            return text.to_owned();
        }
        let mut out = String::with_capacity(text.len());
        let mut rest = text;
        while let Some(c) = rest.chars().next() {
            match self.match_prefix(rest) {
                Some((surface, replacement)) => {
                    out.push_str(replacement);
                    rest = &rest[surface.len()..];
                }
                None => {
                    out.push(c);
                    rest = &rest[c.len_utf8()..];
                }
            }
        }
        out
    }
}

/// A sorted set of inclusive code-point intervals.
#[derive(Debug, Clone, Default)]
pub struct RangeSet {
    ranges: Vec<(u32, u32)>,
}

impl RangeSet {
    /// Parses `START-END` or single `CP` hex lines; `#` comments allowed.
    pub fn parse(name: &str, source: &str) -> Result<Self> {
        let mut ranges = Vec::new();
        for (n, line) in source.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse = |s: &str| {
                u32::from_str_radix(s.trim(), 16)
                    .map_err(|e| Error::resource(name, n + 1, format!("bad code point {s:?}: {e}")))
            };
            let (lo, hi) = match line.split_once('-') {
                Some((a, b)) => (parse(a)?, parse(b)?),
                None => {
                    let cp = parse(line)?;
                    (cp, cp)
                }
            };
            if lo > hi {
                return Err(Error::resource(name, n + 1, "interval start exceeds end"));
            }
            ranges.push((lo, hi));
        }
        ranges.sort_unstable();
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(ranges.len());
        for (lo, hi) in ranges {
            match merged.last_mut() {
                Some(last) if lo <= last.1.saturating_add(1) => last.1 = last.1.max(hi),
                _ => merged.push((lo, hi)),
            }
        }
        Ok(Self { ranges: merged })
    }

    pub fn contains(&self, c: char) -> bool {
        let cp = c as u32;
        match self.ranges.binary_search_by(|&(lo, _)| lo.cmp(&cp)) {
            Ok(_) => true,
            Err(0) => false,
            Err(i) => cp <= self.ranges[i - 1].1,
        }
    }

    pub fn intervals(&self) -> &[(u32, u32)] {
        &self.ranges
    }
}
