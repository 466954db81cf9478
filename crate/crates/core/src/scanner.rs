//! Finds and classifies non-standard words.
//!
//! Every detector proposes candidate spans independently. Overlaps are then
//! settled by class priority (the order of [`SemioticClass`]), longer spans
//! first within a class, and finally any digits left uncovered become plain
//! or long numbers, so no digit escapes verbalization.
//!
//! Detectors accept ASCII, Arabic-Indic and Persian digits alike.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::sync::OnceLock;

use regex::{Captures, Regex};

use crate::calendar::{infer_calendar_with, Calendar, CalendarDate};
use crate::checksum::{is_repeated_digit, validate_card, validate_national_id, validate_sheba};
use crate::error::Error;
use crate::numbers::{ascii_digits, digit_value, is_digit};
use crate::pipeline::PipelineConfig;
use crate::resources::Resources;
use crate::table::MappingTable;

/// Non-standard word classes, declared in priority order: when two
/// detectors claim overlapping text, the earlier class wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemioticClass {
    Url,
    Email,
    Sheba,
    Date,
    Time,
    Phone,
    CardNumber,
    NationalId,
    Decimal,
    LongNumber,
    Currency,
    AbbrevEn,
    AbbrevFa,
    MathSymbol,
    Symbol,
    PlainNumber,
}

impl SemioticClass {
    pub const ALL: [SemioticClass; 16] = [
        SemioticClass::Url,
        SemioticClass::Email,
        SemioticClass::Sheba,
        SemioticClass::Date,
        SemioticClass::Time,
        SemioticClass::Phone,
        SemioticClass::CardNumber,
        SemioticClass::NationalId,
        SemioticClass::Decimal,
        SemioticClass::LongNumber,
        SemioticClass::Currency,
        SemioticClass::AbbrevEn,
        SemioticClass::AbbrevFa,
        SemioticClass::MathSymbol,
        SemioticClass::Symbol,
        SemioticClass::PlainNumber,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SemioticClass::Url => "URL",
            SemioticClass::Email => "EMAIL",
            SemioticClass::Sheba => "SHEBA",
            SemioticClass::Date => "DATE",
            SemioticClass::Time => "TIME",
            SemioticClass::Phone => "PHONE",
            SemioticClass::CardNumber => "CARD_NUMBER",
            SemioticClass::NationalId => "NATIONAL_ID",
            SemioticClass::Decimal => "DECIMAL",
            SemioticClass::LongNumber => "LONG_NUMBER",
            SemioticClass::Currency => "CURRENCY",
            SemioticClass::AbbrevEn => "ABBREV_EN",
            SemioticClass::AbbrevFa => "ABBREV_FA",
            SemioticClass::MathSymbol => "MATH_SYMBOL",
            SemioticClass::Symbol => "SYMBOL",
            SemioticClass::PlainNumber => "PLAIN_NUMBER",
        }
    }

    /// 0 is the highest priority.
    pub fn priority(self) -> usize {
        self as usize
    }
}

impl fmt::Display for SemioticClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SemioticClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        SemioticClass::ALL
            .into_iter()
            .find(|c| c.name() == wanted)
            .ok_or_else(|| Error::Config(format!("unknown class {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhoneKind {
    Mobile,
    Landline,
}

/// Fields a detector already parsed, so verbalizers need not re-parse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanDetail {
    None,
    Date(CalendarDate),
    Time { hour: u32, minute: u32, second: Option<u32> },
    Phone(PhoneKind),
    /// A number written with an ordinal suffix, such as "۳ام".
    Ordinal,
    Fraction { numerator: u64, denominator: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemioticSpan {
    /// Code-point offset of the first character.
    pub start: usize,
    /// Code-point offset one past the last character.
    pub end: usize,
    pub class: SemioticClass,
    pub raw: String,
    /// The same extent as byte offsets into the scanned text.
    pub bytes: Range<usize>,
    pub detail: SpanDetail,
}

const DIGIT: &str = r"[0-9\x{0660}-\x{0669}\x{06F0}-\x{06F9}]";
const ZWNJ: char = '\u{200C}';
const TLDS: &str = "com|org|net|ir|edu|gov|io|info|co|me|dev|app|uk|de|fr|ai|biz|tv";

struct Patterns {
    url_scheme: Regex,
    url_bare: Regex,
    email: Regex,
    sheba: Regex,
    date: Regex,
    time: Regex,
    card_separated: Regex,
    landline_separated: Regex,
    decimal: Regex,
    fraction: Regex,
    comma_grouped: Regex,
    digit_run: Regex,
    abbrev_dotted: Regex,
    abbrev_caps: Regex,
}

fn patterns() -> &'static Patterns {
    static PATTERNS: OnceLock<Patterns> = OnceLock::new();
    PATTERNS.get_or_init(|| {
        let d = DIGIT;
        let alnum = r"A-Za-z0-9\x{0660}-\x{0669}\x{06F0}-\x{06F9}";
        let url_char = format!(r"[{alnum}\-._~:/?#\[\]@!$&'()*+,;=%]");
        let label = format!(r"[{alnum}](?:[{alnum}\-]*[{alnum}])?");
        let re = |p: &str| Regex::new(p).expect("scanner pattern compiles");
        Patterns {
            url_scheme: re(&format!(r"(?:(?i:https?|ftp)://|(?i:www)\.){url_char}+")),
            url_bare: re(&format!(r"{label}(?:\.{label})*\.(?i:{TLDS})(?:/{url_char}*)?")),
            email: re(&format!(r"[{alnum}._%+\-]+@{label}(?:\.{label})*\.[A-Za-z]{{2,}}")),
            sheba: re(&format!(r"IR(?:{d} ?){{23}}{d}")),
            date: re(&format!(r"({d}{{1,4}})([/.\-])({d}{{1,2}})([/.\-])({d}{{1,4}})")),
            time: re(&format!(r"({d}{{1,2}}):({d}{{2}})(?::({d}{{2}}))?")),
            card_separated: re(&format!(r"{d}{{4}}([\- ]){d}{{4}}([\- ]){d}{{4}}([\- ]){d}{{4}}")),
            landline_separated: re(&format!(r"(0{d}{{2}})-({d}{{8}})")),
            decimal: re(&format!(r"({d}{{1,15}})\.({d}+)")),
            fraction: re(&format!(r"({d}{{1,3}})/({d}{{1,3}})")),
            comma_grouped: re(&format!(r"{d}{{1,3}}(?:,{d}{{3}})+")),
            digit_run: re(&format!("({d}+)(\u{200C}?(?:امین|مین|ام))?")),
            abbrev_dotted: re(r"[A-Za-z]{1,2}(?:\.[A-Za-z]{1,2})+\.?"),
            abbrev_caps: re(r"[A-Z]{2,6}"),
        }
    })
}

#[derive(Debug, Clone)]
struct Candidate {
    start: usize,
    end: usize,
    class: SemioticClass,
    detail: SpanDetail,
}

fn before(text: &str, at: usize) -> Option<char> {
    text[..at].chars().next_back()
}

fn after(text: &str, at: usize) -> Option<char> {
    text[at..].chars().next()
}

fn is_ascii_alnum(c: Option<char>) -> bool {
    c.is_some_and(|c| c.is_ascii_alphanumeric())
}

fn is_ascii_alpha(c: Option<char>) -> bool {
    c.is_some_and(|c| c.is_ascii_alphabetic())
}

fn is_word_char(c: Option<char>) -> bool {
    c.is_some_and(|c| c.is_alphanumeric() || c == ZWNJ)
}

fn is_digit_opt(c: Option<char>) -> bool {
    c.is_some_and(is_digit)
}

fn number(s: &str) -> u64 {
    s.chars().fold(0u64, |acc, c| acc.saturating_mul(10).saturating_add(u64::from(digit_value(c).unwrap_or(0))))
}

/// Runs `re` over `text`, keeping the matches `accept` turns into candidates.
/// A rejected match is retried one character further on, so a failed
/// boundary check cannot hide a valid match that starts inside it.
fn each_match(re: &Regex, text: &str, mut accept: impl FnMut(&Captures) -> Option<Candidate>, out: &mut Vec<Candidate>) {
    let mut pos = 0;
    while pos <= text.len() {
        let Some(caps) = re.captures_at(text, pos) else { break };
        let m = caps.get(0).expect("group 0");
        match accept(&caps) {
            Some(c) => {
                pos = c.end.max(m.start() + 1);
                out.push(c);
            }
            None => pos = m.start() + after(text, m.start()).map_or(1, char::len_utf8),
        }
        while pos < text.len() && !text.is_char_boundary(pos) {
            pos += 1;
        }
    }
}

/// Tokens near a span, punctuation trimmed, used for cue-word checks.
fn context<'t>(text: &'t str, start: usize, end: usize, left: usize, right: usize) -> Vec<&'t str> {
    let trim = |t: &'t str| t.trim_matches(|c: char| !c.is_alphanumeric() && c != '.' && c != ZWNJ).trim_matches('.');
    let mut tokens: Vec<&str> = text[..start].split_whitespace().rev().take(left).map(trim).collect();
    tokens.extend(text[end..].split_whitespace().take(right).map(trim));
    tokens
}

fn has_cue(table: &MappingTable, tokens: &[&str]) -> bool {
    tokens.iter().any(|t| {
        let lower = t.to_lowercase();
        table.contains(&lower)
            || table.surfaces().any(|cue| lower.strip_prefix(cue).is_some_and(|rest| rest.starts_with(ZWNJ)))
    })
}

#[derive(Debug, Clone, Copy)]
pub struct Scanner<'r> {
    res: &'r Resources,
    calendar_default: Calendar,
}

impl<'r> Scanner<'r> {
    pub fn new(res: &'r Resources) -> Self {
        Self { res, calendar_default: Calendar::SolarHijri }
    }

    /// Calendar assumed for years below 1700 with no lunar cue nearby.
    pub fn with_calendar_default(mut self, calendar: Calendar) -> Self {
        self.calendar_default = calendar;
        self
    }

    pub fn resources(&self) -> &'r Resources {
        self.res
    }

    /// Phone kind of a digit string given the words around it: 11 digits
    /// with the mobile prefix, 11 digits with a known area code, or 8 digits
    /// next to a telephony cue word.
    pub fn classify_phone(&self, digits: &str, left_context: &str, right_context: &str) -> Option<PhoneKind> {
        let ascii = ascii_digits(digits)?;
        match ascii.len() {
            11 => (1..=ascii.len()).rev().find_map(|n| match self.res.phone_prefixes.get(&ascii[..n]) {
                Some("mobile") => Some(PhoneKind::Mobile),
                Some("landline") => Some(PhoneKind::Landline),
                _ => None,
            }),
            8 => {
                let tokens: Vec<&str> = left_context
                    .split_whitespace()
                    .chain(right_context.split_whitespace())
                    .map(|t| t.trim_matches(|c: char| !c.is_alphanumeric() && c != ZWNJ))
                    .collect();
                has_cue(&self.res.phone_cues, &tokens).then_some(PhoneKind::Landline)
            }
            _ => None,
        }
    }

    pub fn scan(&self, text: &str) -> Vec<SemioticSpan> {
        let mut candidates = Vec::new();
        self.detect_urls(text, &mut candidates);
        self.detect_emails(text, &mut candidates);
        self.detect_sheba(text, &mut candidates);
        self.detect_dates(text, &mut candidates);
        self.detect_times(text, &mut candidates);
        self.detect_digit_runs(text, &mut candidates);
        self.detect_decimals_and_fractions(text, &mut candidates);
        self.detect_tables(text, &mut candidates);
        self.detect_latin_abbreviations(text, &mut candidates);
        let accepted = resolve(candidates);
        let accepted = cover_leftover_digits(text, accepted);
        to_spans(text, accepted)
    }

    fn detect_urls(&self, text: &str, out: &mut Vec<Candidate>) {
        let p = patterns();
        let trim_end = |s: usize, e: usize| {
            let trimmed = text[s..e].trim_end_matches(['.', ',', ';', ':', '!', '?', ')', ']', '\'', '"', '،', '؛', '؟', '»']);
            s + trimmed.len()
        };
        each_match(&p.url_scheme, text, |c| {
            let m = c.get(0)?;
            if is_ascii_alnum(before(text, m.start())) {
                return None;
            }
            let end = trim_end(m.start(), m.end());
            Some(Candidate { start: m.start(), end, class: SemioticClass::Url, detail: SpanDetail::None })
        }, out);
        each_match(&p.url_bare, text, |c| {
            let m = c.get(0)?;
            let prev = before(text, m.start());
            if is_ascii_alnum(prev) || matches!(prev, Some('@' | '.' | '/' | '-' | '_')) {
                return None;
            }
            let end = trim_end(m.start(), m.end());
            let next = after(text, end);
            if is_ascii_alnum(next) || matches!(next, Some('@' | '-' | '_')) {
                return None;
            }
            Some(Candidate { start: m.start(), end, class: SemioticClass::Url, detail: SpanDetail::None })
        }, out);
    }

    fn detect_emails(&self, text: &str, out: &mut Vec<Candidate>) {
        each_match(&patterns().email, text, |c| {
            let m = c.get(0)?;
            let prev = before(text, m.start());
            if is_ascii_alnum(prev) || is_ascii_alnum(after(text, m.end())) {
                return None;
            }
            let local = &text[m.start()..m.end()].split('@').next()?;
            let start = m.start() + (local.len() - local.trim_start_matches('.').len());
            Some(Candidate { start, end: m.end(), class: SemioticClass::Email, detail: SpanDetail::None })
        }, out);
    }

    fn detect_sheba(&self, text: &str, out: &mut Vec<Candidate>) {
        each_match(&patterns().sheba, text, |c| {
            let m = c.get(0)?;
            if is_ascii_alnum(before(text, m.start())) || is_digit_opt(after(text, m.end())) {
                return None;
            }
            let compact: String = m.as_str().chars().filter(|c| *c != ' ').collect();
            let ascii = format!("IR{}", ascii_digits(&compact[2..])?);
            validate_sheba(&ascii).then_some(Candidate {
                start: m.start(),
                end: m.end(),
                class: SemioticClass::Sheba,
                detail: SpanDetail::None,
            })
        }, out);
    }

    fn detect_dates(&self, text: &str, out: &mut Vec<Candidate>) {
        each_match(&patterns().date, text, |c| {
            let m = c.get(0)?;
            if c[2] != c[4] {
                return None;
            }
            let prev = before(text, m.start());
            let next = after(text, m.end());
            let separator = c[2].chars().next()?;
            if is_digit_opt(prev) || prev == Some(separator) || is_ascii_alnum(prev) {
                return None;
            }
            if is_digit_opt(next) || is_ascii_alnum(next) {
                return None;
            }
            if next == Some(separator) && is_digit_opt(after(text, m.end() + separator.len_utf8())) {
                return None;
            }
            let (a, b, e) = (&c[1], &c[3], &c[5]);
            let (na, nb, ne) = (number(a), number(b), number(e));
            let width = |s: &str| s.chars().count();
            let (year, month, day) = if width(a) == 4 || na > 31 {
                if width(e) > 2 {
                    return None;
                }
                (na, nb, ne)
            } else if width(e) == 4 || ne > 31 {
                if width(a) > 2 {
                    return None;
                }
                (ne, nb, na)
            } else {
                return None;
            };
            let lunar = has_cue(&self.res.lunar_cues, &context(text, m.start(), m.end(), 2, 2));
            let calendar = infer_calendar_with(year as u32, self.calendar_default, lunar);
            let date = CalendarDate::new(calendar, year as u32, month as u32, day as u32).ok()?;
            Some(Candidate { start: m.start(), end: m.end(), class: SemioticClass::Date, detail: SpanDetail::Date(date) })
        }, out);
    }

    fn detect_times(&self, text: &str, out: &mut Vec<Candidate>) {
        each_match(&patterns().time, text, |c| {
            let m = c.get(0)?;
            let prev = before(text, m.start());
            let next = after(text, m.end());
            if is_digit_opt(prev) || prev == Some(':') || is_digit_opt(next) || next == Some(':') {
                return None;
            }
            let hour = number(&c[1]) as u32;
            let minute = number(&c[2]) as u32;
            let second = c.get(3).map(|s| number(s.as_str()) as u32);
            if hour > 23 || minute > 59 || second.is_some_and(|s| s > 59) {
                return None;
            }
            Some(Candidate {
                start: m.start(),
                end: m.end(),
                class: SemioticClass::Time,
                detail: SpanDetail::Time { hour, minute, second },
            })
        }, out);
    }

    fn detect_digit_runs(&self, text: &str, out: &mut Vec<Candidate>) {
        let p = patterns();
        each_match(&p.digit_run, text, |c| {
            let m = c.get(0)?;
            let run = c.get(1)?;
            let prev = before(text, m.start());
            let next = after(text, m.end());
            let digits = run.as_str();
            let isolated = !is_word_char(prev) && !is_word_char(next);
            let len = digits.chars().count();
            let candidate = |class, detail| Some(Candidate { start: run.start(), end: run.end(), class, detail });
            if c.get(2).is_some() {
                if is_word_char(prev) || is_word_char(next) || len > 15 {
                    return None;
                }
                return Some(Candidate { start: m.start(), end: m.end(), class: SemioticClass::PlainNumber, detail: SpanDetail::Ordinal });
            }
            let bare_next = after(text, run.end());
            if !isolated || is_word_char(bare_next) {
                return None;
            }
            if len == 11 || len == 8 {
                let left = context(text, run.start(), run.end(), 3, 0).join(" ");
                let right = context(text, run.start(), run.end(), 0, 2).join(" ");
                if let Some(kind) = self.classify_phone(digits, &left, &right) {
                    return candidate(SemioticClass::Phone, SpanDetail::Phone(kind));
                }
            }
            if len == 16 && validate_card(digits).unwrap_or(false) && !is_repeated_digit(digits) {
                return candidate(SemioticClass::CardNumber, SpanDetail::None);
            }
            if len == 10 && validate_national_id(digits).unwrap_or(false) && !is_repeated_digit(digits) {
                return candidate(SemioticClass::NationalId, SpanDetail::None);
            }
            if len > 15 {
                return candidate(SemioticClass::LongNumber, SpanDetail::None);
            }
            candidate(SemioticClass::PlainNumber, SpanDetail::None)
        }, out);
        each_match(&p.card_separated, text, |c| {
            let m = c.get(0)?;
            if c[1] != c[2] || c[2] != c[3] || is_word_char(before(text, m.start())) || is_word_char(after(text, m.end())) {
                return None;
            }
            let digits: String = m.as_str().chars().filter(|c| is_digit(*c)).collect();
            (validate_card(&digits).unwrap_or(false) && !is_repeated_digit(&digits)).then_some(Candidate {
                start: m.start(),
                end: m.end(),
                class: SemioticClass::CardNumber,
                detail: SpanDetail::None,
            })
        }, out);
        each_match(&p.landline_separated, text, |c| {
            let m = c.get(0)?;
            if is_word_char(before(text, m.start())) || is_word_char(after(text, m.end())) {
                return None;
            }
            let digits = format!("{}{}", &c[1], &c[2]);
            (self.classify_phone(&digits, "", "") == Some(PhoneKind::Landline)).then_some(Candidate {
                start: m.start(),
                end: m.end(),
                class: SemioticClass::Phone,
                detail: SpanDetail::Phone(PhoneKind::Landline),
            })
        }, out);
        each_match(&p.comma_grouped, text, |c| {
            let m = c.get(0)?;
            let prev = before(text, m.start());
            let next = after(text, m.end());
            if is_word_char(prev) || prev == Some(',') || is_word_char(next) {
                return None;
            }
            if next == Some(',') && is_digit_opt(after(text, m.end() + 1)) {
                return None;
            }
            let len = m.as_str().chars().filter(|c| is_digit(*c)).count();
            let class = if len > 15 { SemioticClass::LongNumber } else { SemioticClass::PlainNumber };
            Some(Candidate { start: m.start(), end: m.end(), class, detail: SpanDetail::None })
        }, out);
    }

    fn detect_decimals_and_fractions(&self, text: &str, out: &mut Vec<Candidate>) {
        let p = patterns();
        each_match(&p.decimal, text, |c| {
            let m = c.get(0)?;
            let prev = before(text, m.start());
            let next = after(text, m.end());
            if is_digit_opt(prev) || prev == Some('.') || is_digit_opt(next) || is_ascii_alnum(next) {
                return None;
            }
            if next == Some('.') && is_digit_opt(after(text, m.end() + 1)) {
                return None;
            }
            Some(Candidate { start: m.start(), end: m.end(), class: SemioticClass::Decimal, detail: SpanDetail::None })
        }, out);
        each_match(&p.fraction, text, |c| {
            let m = c.get(0)?;
            let prev = before(text, m.start());
            let next = after(text, m.end());
            if is_digit_opt(prev) || prev == Some('/') || is_digit_opt(next) || next == Some('/') {
                return None;
            }
            let (numerator, denominator) = (number(&c[1]), number(&c[2]));
            if denominator == 0 {
                return None;
            }
            Some(Candidate {
                start: m.start(),
                end: m.end(),
                class: SemioticClass::MathSymbol,
                detail: SpanDetail::Fraction { numerator, denominator },
            })
        }, out);
    }

    fn detect_tables(&self, text: &str, out: &mut Vec<Candidate>) {
        let tables = [
            (&self.res.currencies, SemioticClass::Currency),
            (&self.res.abbreviations_fa, SemioticClass::AbbrevFa),
            (&self.res.math_symbols, SemioticClass::MathSymbol),
            (&self.res.symbols, SemioticClass::Symbol),
        ];
        for (table, class) in tables {
            let mut i = 0;
            while i < text.len() {
                let rest = &text[i..];
                let step = rest.chars().next().map_or(1, char::len_utf8);
                let hit = table.prefix_matches(rest).map(|(s, _)| i + s.len()).find(|&end| table_boundary_ok(text, i, end, &text[i..end]));
                if let Some(end) = hit {
                    out.push(Candidate { start: i, end, class, detail: SpanDetail::None });
                    i = end;
                    continue;
                }
                i += step;
            }
        }
    }

    fn detect_latin_abbreviations(&self, text: &str, out: &mut Vec<Candidate>) {
        let p = patterns();
        each_match(&p.abbrev_dotted, text, |c| {
            let m = c.get(0)?;
            let prev = before(text, m.start());
            let next = after(text, m.end());
            // digits may touch it ("MP3"): they are read separately
            if is_ascii_alpha(prev) || prev == Some('.') || is_ascii_alpha(next) {
                return None;
            }
            Some(Candidate { start: m.start(), end: m.end(), class: SemioticClass::AbbrevEn, detail: SpanDetail::None })
        }, out);
        each_match(&p.abbrev_caps, text, |c| {
            let m = c.get(0)?;
            let prev = before(text, m.start());
            let next = after(text, m.end());
            if is_ascii_alpha(prev) || is_ascii_alpha(next) {
                return None;
            }
            Some(Candidate { start: m.start(), end: m.end(), class: SemioticClass::AbbrevEn, detail: SpanDetail::None })
        }, out);
    }
}

#[derive(PartialEq, Eq)]
enum Script {
    Latin,
    Arabic,
}

fn script(c: char) -> Option<Script> {
    match c {
        _ if c.is_ascii_alphabetic() => Some(Script::Latin),
        '\u{0600}'..='\u{06FF}' | '\u{0750}'..='\u{077F}' | '\u{FB50}'..='\u{FDFF}' | '\u{FE70}'..='\u{FEFF}' | ZWNJ
            if c.is_alphabetic() || c == ZWNJ =>
        {
            Some(Script::Arabic)
        }
        _ => None,
    }
}

/// Letter-edged table entries must not sit inside a word of their own
/// script; symbols, and letters such as "π", may touch anything.
fn table_boundary_ok(text: &str, start: usize, end: usize, surface: &str) -> bool {
    let first = surface.chars().next().expect("non-empty surface");
    let last = surface.chars().next_back().expect("non-empty surface");
    let glued = |edge: char, neighbour: Option<char>| {
        script(edge).is_some_and(|s| neighbour.and_then(script) == Some(s))
    };
    !(glued(first, before(text, start)) || glued(last, after(text, end)))
}

fn resolve(mut candidates: Vec<Candidate>) -> Vec<Candidate> {
    candidates.sort_by_key(|c| (c.class.priority(), std::cmp::Reverse(c.end - c.start), c.start));
    let mut taken: BTreeMap<usize, usize> = BTreeMap::new();
    let mut accepted = Vec::new();
    for c in candidates {
        if c.start >= c.end {
            continue;
        }
        let clash_left = taken.range(..c.end).next_back().is_some_and(|(_, &e)| e > c.start);
        if clash_left {
            continue;
        }
        taken.insert(c.start, c.end);
        accepted.push(c);
    }
    accepted.sort_by_key(|c| c.start);
    accepted
}

/// Digits not inside any accepted span become plain (or long) numbers.
fn cover_leftover_digits(text: &str, accepted: Vec<Candidate>) -> Vec<Candidate> {
    let mut out = Vec::with_capacity(accepted.len());
    let mut covered_to = 0;
    let push_gap = |from: usize, to: usize, out: &mut Vec<Candidate>| {
        let gap = &text[from..to];
        let mut run: Option<usize> = None;
        for (i, c) in gap.char_indices().chain(std::iter::once((gap.len(), ' '))) {
            match (is_digit(c), run) {
                (true, None) => run = Some(i),
                (false, Some(s)) => {
                    let len = gap[s..i].chars().count();
                    let class = if len > 15 { SemioticClass::LongNumber } else { SemioticClass::PlainNumber };
                    out.push(Candidate { start: from + s, end: from + i, class, detail: SpanDetail::None });
                    run = None;
                }
                _ => {}
            }
        }
    };
    for c in accepted {
        push_gap(covered_to, c.start, &mut out);
        covered_to = c.end;
        out.push(c);
    }
    push_gap(covered_to, text.len(), &mut out);
    out
}

fn to_spans(text: &str, accepted: Vec<Candidate>) -> Vec<SemioticSpan> {
    let mut spans = Vec::with_capacity(accepted.len());
    let mut byte = 0;
    let mut chars = 0;
    for c in accepted {
        chars += text[byte..c.start].chars().count();
        let start = chars;
        chars += text[c.start..c.end].chars().count();
        byte = c.end;
        spans.push(SemioticSpan {
            start,
            end: chars,
            class: c.class,
            raw: text[c.start..c.end].to_owned(),
            bytes: c.start..c.end,
            detail: c.detail,
        });
    }
    spans
}

/// Spans of every non-standard word in `text`, sorted and non-overlapping.
pub fn scan(text: &str, config: &PipelineConfig) -> Vec<SemioticSpan> {
    Scanner::new(Resources::bundled()).with_calendar_default(config.calendar_default).scan(text)
}

/// See [`Scanner::classify_phone`].
pub fn classify_phone(digits: &str, left_context: &str, right_context: &str) -> Option<PhoneKind> {
    Scanner::new(Resources::bundled()).classify_phone(digits, left_context, right_context)
}
