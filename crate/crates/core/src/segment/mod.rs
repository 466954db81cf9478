//! Sentence splitting.
//!
//! Text is first cut after terminal punctuation that is not part of a
//! decimal, abbreviation, URL or email. Segments that are still long are then
//! cut after each verb group, since Persian sentences end with their verb.

mod eval;
mod lexicon;

use std::ops::Range;

pub use eval::{evaluate_segmentation, parse_gold};
pub use lexicon::{detect_verb_positions, VerbDetector, VerbLexicon};

use crate::resources::Resources;
use crate::scanner::{Scanner, SemioticClass};

/// Token count above which a segment is also split at verbs.
pub const DEFAULT_VERB_SPLIT_THRESHOLD: usize = 30;

const TERMINALS: [char; 4] = ['.', '!', '?', '؟'];
const CLOSERS: [char; 6] = ['»', '"', '\'', ')', ']', '”'];

fn dotted_class(class: SemioticClass) -> bool {
    matches!(
        class,
        SemioticClass::Decimal
            | SemioticClass::Url
            | SemioticClass::Email
            | SemioticClass::AbbrevEn
            | SemioticClass::AbbrevFa
            | SemioticClass::Date
    )
}

#[derive(Clone, Copy)]
pub struct Segmenter<'a> {
    res: &'a Resources,
    detector: &'a dyn VerbDetector,
    threshold: usize,
}

impl std::fmt::Debug for Segmenter<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Segmenter").field("threshold", &self.threshold).finish_non_exhaustive()
    }
}

impl<'a> Segmenter<'a> {
    /// Uses the verb lexicon from `res`.
    pub fn new(res: &'a Resources) -> Self {
        Self { res, detector: &res.verbs, threshold: DEFAULT_VERB_SPLIT_THRESHOLD }
    }

    pub fn with_detector(mut self, detector: &'a dyn VerbDetector) -> Self {
        self.detector = detector;
        self
    }

    pub fn with_threshold(mut self, tokens: usize) -> Self {
        self.threshold = tokens;
        self
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    /// Byte ranges of spans whose dots must not end a sentence; sorted and
    /// disjoint.
    pub fn protect_non_terminal_dots(&self, text: &str) -> Vec<Range<usize>> {
        let mut out: Vec<Range<usize>> = Vec::new();
        for span in Scanner::new(self.res).scan(text) {
            if !dotted_class(span.class) || !span.raw.contains('.') {
                continue;
            }
            match out.last_mut() {
                Some(last) if span.bytes.start <= last.end => last.end = last.end.max(span.bytes.end),
                _ => out.push(span.bytes.clone()),
            }
        }
        out
    }

    pub fn split(&self, text: &str) -> Vec<String> {
        let protected = self.protect_non_terminal_dots(text);
        let mut out = Vec::new();
        for piece in punctuation_cuts(text, &protected) {
            for part in self.verb_cuts(text, piece, &protected) {
                let s = text[part].trim();
                if !s.is_empty() {
                    out.push(s.to_owned());
                }
            }
        }
        out
    }

    /// Accuracy over gold paragraphs: each paragraph is joined with spaces,
    /// split, and scored against its sentences.
    pub fn evaluate(&self, paragraphs: &[Vec<String>]) -> f64 {
        let mut predicted = Vec::new();
        let mut gold = Vec::new();
        for p in paragraphs {
            predicted.extend(self.split(&p.join(" ")));
            gold.extend(p.iter().cloned());
        }
        evaluate_segmentation(&predicted, &gold)
    }

    /// Sub-ranges of `piece` cut after verb groups, when it is long enough.
    fn verb_cuts(&self, text: &str, piece: Range<usize>, protected: &[Range<usize>]) -> Vec<Range<usize>> {
        let body = &text[piece.clone()];
        let tokens: Vec<(usize, &str)> = body
            .split_whitespace()
            .map(|t| (t.as_ptr() as usize - body.as_ptr() as usize, t))
            .collect();
        if tokens.len() <= self.threshold {
            return vec![piece];
        }
        let words: Vec<&str> = tokens.iter().map(|(_, t)| *t).collect();
        let mut cuts = Vec::new();
        for i in self.detector.verb_positions(&words) {
            let Some(&(next_at, next)) = tokens.get(i + 1) else { continue };
            let (at, verb) = tokens[i];
            if verb.ends_with(['،', ',']) || self.detector.is_continuation(next) {
                continue;
            }
            let cut = piece.start + at + verb.len();
            let next_start = piece.start + next_at;
            if protected.iter().any(|r| r.start < next_start && cut < r.end) {
                continue;
            }
            cuts.push(cut);
        }
        let mut out = Vec::with_capacity(cuts.len() + 1);
        let mut start = piece.start;
        for cut in cuts {
            out.push(start..cut);
            start = cut;
        }
        out.push(start..piece.end);
        out
    }
}

/// Ranges of `text` ending after each unprotected run of terminal marks and
/// any closing quotes or brackets that follow it.
fn punctuation_cuts(text: &str, protected: &[Range<usize>]) -> Vec<Range<usize>> {
    let is_protected = |i: usize| protected.iter().any(|r| r.contains(&i));
    let mut out = Vec::new();
    let mut start = 0;
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        if !TERMINALS.contains(&c) || is_protected(i) {
            continue;
        }
        let mut end = i + c.len_utf8();
        let mut run = 1;
        while let Some(&(j, d)) = chars.peek() {
            if TERMINALS.contains(&d) && !is_protected(j) {
                run += 1;
                end = j + d.len_utf8();
                chars.next();
            } else {
                break;
            }
        }
        // "file.txt", "v1.2": a lone dot glued to Latin text is not an ending
        if run == 1 && c == '.' && text[end..].chars().next().is_some_and(|n| n.is_ascii_alphanumeric()) {
            continue;
        }
        while let Some(&(j, d)) = chars.peek() {
            if CLOSERS.contains(&d) {
                end = j + d.len_utf8();
                chars.next();
            } else {
                break;
            }
        }
        out.push(start..end);
        start = end;
    }
    if start < text.len() {
        out.push(start..text.len());
    }
    out
}

/// Dot ranges in `text` that are part of decimals, abbreviations, URLs,
/// emails or dates, using the bundled resources.
pub fn protect_non_terminal_dots(text: &str) -> Vec<Range<usize>> {
    Segmenter::new(Resources::bundled()).protect_non_terminal_dots(text)
}

/// Splits `text` into trimmed sentences with the default threshold.
pub fn split_sentences(text: &str, lexicon: &VerbLexicon) -> Vec<String> {
    Segmenter::new(Resources::bundled()).with_detector(lexicon).split(text)
}
