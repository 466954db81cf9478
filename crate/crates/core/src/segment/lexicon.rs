//! Lexicon-driven verb detection.
//!
//! A finite verb is an optional prefix, a stem and a personal ending. Perfect
//! forms are a participle (past stem + "ه") with a perfect ending, or a
//! participle followed by auxiliaries. The future is a form of "خواه"
//! followed by a bare past stem. Each detected group is reported by the index
//! of its last token.

use std::collections::HashSet;

use crate::error::{Error, Result};

const ZWNJ: char = '\u{200C}';

/// Anything that can point out the verbs of a tokenized segment, so a
/// statistical tagger can stand in for the bundled lexicon.
pub trait VerbDetector {
    /// Indices of the last token of every verb group, ascending.
    fn verb_positions(&self, tokens: &[&str]) -> Vec<usize>;

    /// Words after which a clause continues, so no split is placed before
    /// them.
    fn is_continuation(&self, _token: &str) -> bool {
        false
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerbLexicon {
    prefixes: Vec<String>,
    past: HashSet<String>,
    past_affixed: HashSet<String>,
    present: HashSet<String>,
    present_bare: HashSet<String>,
    past_endings: Vec<String>,
    present_endings: Vec<String>,
    perfect_endings: Vec<String>,
    aux: HashSet<String>,
    future: HashSet<String>,
    continuation: HashSet<String>,
    exclude: HashSet<String>,
}

impl VerbLexicon {
    /// Parses `kind<TAB>value` lines; see the bundled `verbs.tsv` for kinds.
    pub fn parse(file: &str, source: &str) -> Result<Self> {
        let mut lex = Self::default();
        for (n, line) in source.lines().enumerate() {
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |m: &str| Error::resource(file, n + 1, m);
            let (kind, value) = line.split_once('\t').ok_or_else(|| err("expected kind<TAB>value"))?;
            if value.is_empty() || value.contains('\t') {
                return Err(err("expected one non-empty value"));
            }
            let v = value.to_owned();
            match kind {
                "prefix" => lex.prefixes.push(v),
                "past" => {
                    lex.past.insert(v);
                }
                "past-affixed" => {
                    lex.past_affixed.insert(v);
                }
                "present" => {
                    lex.present.insert(v);
                }
                "present-bare" => {
                    lex.present_bare.insert(v);
                }
                "past-ending" => lex.past_endings.push(v),
                "present-ending" => lex.present_endings.push(v),
                "perfect-ending" => lex.perfect_endings.push(v),
                "aux" => {
                    lex.aux.insert(v);
                }
                "future" => {
                    lex.future.insert(v);
                }
                "continuation" => {
                    lex.continuation.insert(v);
                }
                "exclude" => {
                    lex.exclude.insert(v);
                }
                other => return Err(err(&format!("unknown kind {other:?}"))),
            }
        }
        if lex.past.is_empty() && lex.past_affixed.is_empty() {
            return Err(Error::resource(file, 0, "no past stems"));
        }
        if lex.past_endings.is_empty() || lex.present_endings.is_empty() {
            return Err(Error::resource(file, 0, "missing personal endings"));
        }
        lex.prefixes.sort_by_key(|p| std::cmp::Reverse(p.len()));
        Ok(lex)
    }

    pub fn stem_count(&self) -> usize {
        self.past.len() + self.past_affixed.len() + self.present.len() + self.present_bare.len()
    }

    pub fn is_aux(&self, token: &str) -> bool {
        self.aux.contains(token)
    }

    fn is_past_stem(&self, s: &str) -> bool {
        self.past.contains(s) || self.past_affixed.contains(s)
    }

    /// `(prefix, rest)` splits of a word, the unprefixed one first.
    fn prefix_splits<'w>(&self, word: &'w str) -> Vec<(bool, &'w str)> {
        let mut out = vec![(false, word)];
        for p in &self.prefixes {
            if let Some(rest) = word.strip_prefix(p.as_str()) {
                let rest = rest.trim_start_matches(ZWNJ);
                if !rest.is_empty() {
                    out.push((true, rest));
                }
            }
        }
        out
    }

    /// Byte offsets where a non-empty stem ends and one of `endings` begins.
    fn stem_cuts(endings: &[String], rest: &str) -> Vec<usize> {
        endings
            .iter()
            .filter(|e| rest.len() > e.len() && rest.ends_with(e.as_str()))
            .map(|e| rest.len() - e.len())
            .collect()
    }

    /// A single-token finite form: simple past, present or subjunctive.
    pub fn is_finite(&self, token: &str) -> bool {
        let word = clean(token);
        if word.is_empty() || self.exclude.contains(word) {
            return false;
        }
        if self.aux.contains(word) {
            return true;
        }
        self.prefix_splits(word).into_iter().any(|(prefixed, rest)| {
            let past_bare = self.past.contains(rest) || (prefixed && self.past_affixed.contains(rest));
            if past_bare {
                return true;
            }
            let past = Self::stem_cuts(&self.past_endings, rest).into_iter().any(|cut| self.is_past_stem(&rest[..cut]));
            past || Self::stem_cuts(&self.present_endings, rest).into_iter().any(|cut| {
                let stem = &rest[..cut];
                self.present_bare.contains(stem)
                    || (prefixed && (self.present.contains(stem) || self.future.contains(stem)))
            })
        })
    }

    /// Past participle, optionally prefixed ("رفته", "نوشته", "نرفته").
    fn is_participle(&self, word: &str) -> bool {
        self.prefix_splits(word).into_iter().any(|(_, rest)| {
            rest.strip_suffix('ه').is_some_and(|stem| self.is_past_stem(stem))
        })
    }

    /// Participle with a perfect ending in the same token ("رفته‌ام").
    fn is_perfect(&self, word: &str) -> bool {
        self.perfect_endings.iter().any(|e| {
            word.strip_suffix(e.as_str()).is_some_and(|p| self.is_participle(p.trim_end_matches(ZWNJ)))
        })
    }

    /// A form of the future auxiliary, "خواهم" .. "نخواهند".
    fn is_future_aux(&self, word: &str) -> bool {
        [Some(word), word.strip_prefix('ن')].into_iter().flatten().any(|rest| {
            Self::stem_cuts(&self.present_endings, rest).into_iter().any(|cut| self.future.contains(&rest[..cut]))
        })
    }

    fn is_standalone_prefix(&self, word: &str) -> bool {
        self.prefixes.iter().any(|p| p.chars().count() > 1 && p.trim_end_matches(ZWNJ) == word)
    }
}

/// Strips surrounding punctuation so "رفتم،" or "«آمد»" match.
fn clean(token: &str) -> &str {
    token.trim_matches(|c: char| !c.is_alphabetic() && c != ZWNJ).trim_matches(ZWNJ)
}

impl VerbDetector for VerbLexicon {
    fn verb_positions(&self, tokens: &[&str]) -> Vec<usize> {
        let words: Vec<&str> = tokens.iter().map(|t| clean(t)).collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < words.len() {
            let w = words[i];
            if w.is_empty() {
                i += 1;
                continue;
            }
            if self.is_future_aux(w) && words.get(i + 1).is_some_and(|n| self.is_past_stem(n)) {
                out.push(i + 1);
                i += 2;
                continue;
            }
            if self.is_standalone_prefix(w) {
                if let Some(next) = words.get(i + 1) {
                    let joined = format!("{w}{ZWNJ}{next}");
                    if self.is_finite(&joined) {
                        out.push(i + 1);
                        i += 2;
                        continue;
                    }
                }
            }
            if self.is_perfect(w) || self.is_participle(w) || self.is_finite(w) {
                let starts_chain = !self.exclude.contains(w) && (self.is_participle(w) || self.is_perfect(w));
                let mut end = i;
                if starts_chain {
                    while let Some(next) = words.get(end + 1) {
                        if self.aux.contains(*next) || self.is_participle(next) || self.is_finite(next) {
                            end += 1;
                        } else {
                            break;
                        }
                    }
                }
                let bare_participle = end == i && self.is_participle(w) && !self.is_perfect(w) && !self.is_finite(w);
                if !bare_participle {
                    out.push(end);
                }
                i = end + 1;
                continue;
            }
            i += 1;
        }
        out
    }

    fn is_continuation(&self, token: &str) -> bool {
        self.continuation.contains(clean(token))
    }
}

/// Indices of the last token of each verb group in `tokens`.
pub fn detect_verb_positions(tokens: &[&str], detector: &dyn VerbDetector) -> Vec<usize> {
    detector.verb_positions(tokens)
}
