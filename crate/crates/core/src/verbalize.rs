//! Spoken renderings of scanned spans.
//!
//! Classes with more than one legitimate reading expose them as numbered
//! variants: templates for dates and times, digit groupings for phone
//! numbers and identifiers. Variant 0 is always the default reading. A
//! [`Selector`] picks one variant; [`Verbalizer::variants`] lists them all.

use std::sync::OnceLock;

use crate::calendar::CalendarDate;
use crate::checksum::{is_repeated_digit, validate_card, validate_national_id, validate_sheba};
use crate::error::{Error, Result};
use crate::numbers::{
    ascii_digits, cardinal_words, decimal_words, digit_value, group_text, grouped_digit_parts, ordinal_words,
    ordinal_words_with, FirstOrdinal,
};
use crate::resources::Resources;
use crate::scanner::{PhoneKind, SemioticClass, SemioticSpan, SpanDetail};
use crate::table::MappingTable;
use crate::template::{SelectionPolicy, Selector};

const ZWNJ: char = '\u{200C}';
const SHEBA_PREFIX: &str = "آی آر";
const DIGIT_WORDS: [&str; 10] = ["صفر", "یک", "دو", "سه", "چهار", "پنج", "شش", "هفت", "هشت", "نه"];

/// URL paths longer than this many characters are dropped when read aloud.
pub const URL_PATH_LIMIT: usize = 10;

/// Every way of splitting `n` digits into consecutive groups of two and
/// three, in lexicographic order; the all-pairs grouping (when there is one)
/// comes first.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for size in [2, 3] {
            if size <= n {
                prefix.push(size);
                go(n - size, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// Length of [`compositions`]`(n)`.
pub fn composition_count(n: usize) -> usize {
    let mut counts = vec![0usize; n + 1];
    counts[0] = 1;
    for i in 2..=n {
        counts[i] = counts[i - 2].saturating_add(if i >= 3 { counts[i - 3] } else { 0 });
    }
    counts[n]
}

/// Entry `index` of [`compositions`]`(n)`, without listing the others.
pub fn nth_composition(n: usize, index: usize) -> Option<Vec<usize>> {
    if index >= composition_count(n) {
        return None;
    }
    let (mut left, mut index) = (n, index);
    let mut out = Vec::new();
    while left > 0 {
        let with_pair = if left >= 2 { composition_count(left - 2) } else { 0 };
        if index < with_pair {
            out.push(2);
            left -= 2;
        } else {
            index -= with_pair;
            out.push(3);
            left -= 3;
        }
    }
    Some(out)
}

/// A few evenly patterned groupings for long digit strings: pairs, triples
/// and alternating triple-pair, each closed off with whatever the remainder
/// needs.
pub fn regular_partitions(n: usize) -> Vec<Vec<usize>> {
    if n < 2 {
        return vec![vec![n]];
    }
    let fill = |pattern: &[usize]| {
        let mut groups = Vec::new();
        let mut left = n;
        for &size in pattern.iter().cycle() {
            if left <= 4 {
                break;
            }
            groups.push(size);
            left -= size;
        }
        match left {
            4 => groups.extend([2, 2]),
            0 => {}
            r => groups.push(r),
        }
        groups
    };
    let mut out: Vec<Vec<usize>> = Vec::new();
    for pattern in [&[2][..], &[3], &[3, 2]] {
        let p = fill(pattern);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Word set used for the structural characters of URLs and emails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UrlWords {
    /// The Latin loanwords "dot", "slash", "at".
    #[default]
    Latin,
    Persian,
}

#[derive(Debug, Clone, Copy)]
pub struct Verbalizer<'r> {
    res: &'r Resources,
    url_words: UrlWords,
    spell_url_digits: bool,
}

impl<'r> Verbalizer<'r> {
    pub fn new(res: &'r Resources) -> Self {
        Self { res, url_words: UrlWords::Latin, spell_url_digits: false }
    }

    pub fn with_url_words(mut self, words: UrlWords) -> Self {
        self.url_words = words;
        self
    }

    /// Read digits inside URLs and emails as Persian number words.
    pub fn with_spelled_url_digits(mut self, spell: bool) -> Self {
        self.spell_url_digits = spell;
        self
    }

    // ---- dates and times ----

    pub fn date_variant(&self, d: &CalendarDate, index: usize) -> Result<String> {
        let d = CalendarDate::new(d.calendar, d.year, d.month, d.day)?;
        let month_key = format!("{}.{}", d.calendar.name(), d.month);
        let month_name = self
            .res
            .month_names
            .get(&month_key)
            .ok_or_else(|| Error::resource("speech/month_names.tsv", 0, format!("missing {month_key}")))?;
        let day_ordinal = ordinal_words_with(u64::from(d.day), FirstOrdinal::Avval)?.text;
        let day_cardinal = cardinal_words(u64::from(d.day))?.text;
        let month_cardinal = cardinal_words(u64::from(d.month))?.text;
        let year_cardinal = cardinal_words(u64::from(d.year))?.text;
        self.res.date_templates.render(index, |slot| match slot {
            "day_ordinal" => Some(day_ordinal.as_str()),
            "day_cardinal" => Some(day_cardinal.as_str()),
            "month_name" => Some(month_name),
            "month_cardinal" => Some(month_cardinal.as_str()),
            "year_cardinal" => Some(year_cardinal.as_str()),
            _ => None,
        })
    }

    pub fn verbalize_date(&self, d: &CalendarDate, selector: &mut Selector) -> Result<String> {
        let index = selector.pick(SemioticClass::Date, self.res.date_templates.len(), 0)?;
        self.date_variant(d, index)
    }

    pub fn time_variant(&self, hour: u32, minute: u32, second: Option<u32>, index: usize) -> Result<String> {
        if hour > 23 || minute > 59 || second.is_some_and(|s| s > 59) {
            let shown = match second {
                Some(s) => format!("{hour}:{minute:02}:{s:02}"),
                None => format!("{hour}:{minute:02}"),
            };
            return Err(Error::InvalidTime(shown));
        }
        let hour_words = cardinal_words(u64::from(hour))?.text;
        // on the hour the minutes are not read: 8:00 is "eight", never "eight zero"
        let minute_words = (minute > 0 || second.is_some()).then(|| cardinal_words(u64::from(minute)).map(|w| w.text)).transpose()?;
        let second_words = second.map(|s| cardinal_words(u64::from(s)).map(|w| w.text)).transpose()?;
        self.res.time_templates.render(index, |slot| match slot {
            "hour" => Some(hour_words.as_str()),
            "minute" => minute_words.as_deref(),
            "second" => second_words.as_deref(),
            _ => None,
        })
    }

    pub fn verbalize_time(&self, hour: u32, minute: u32, second: Option<u32>, selector: &mut Selector) -> Result<String> {
        let index = selector.pick(SemioticClass::Time, self.res.time_templates.len(), 0)?;
        self.time_variant(hour, minute, second, index)
    }

    // ---- phones and grouped identifiers ----

    /// Fixed leading part and the digit count left for grouping.
    fn phone_layout(&self, ascii: &str, kind: PhoneKind) -> Result<(String, usize)> {
        let unclassified = || Error::UnclassifiedPhone(ascii.to_owned());
        match (kind, ascii.len()) {
            (PhoneKind::Mobile, 11) if ascii.starts_with("09") => Ok((group_text(&ascii[..4]), 7)),
            (PhoneKind::Landline, 11) if ascii.starts_with('0') => Ok((group_text(&ascii[..3]), 8)),
            (PhoneKind::Landline, 8) => Ok((String::new(), 8)),
            _ => Err(unclassified()),
        }
    }

    pub fn phone_variant_count(&self, digits: &str, kind: PhoneKind) -> Result<usize> {
        let ascii = ascii_digits(digits).ok_or_else(|| Error::UnclassifiedPhone(digits.to_owned()))?;
        let (_, rest) = self.phone_layout(&ascii, kind)?;
        Ok(composition_count(rest))
    }

    pub fn phone_variant(&self, digits: &str, kind: PhoneKind, index: usize) -> Result<String> {
        let ascii = ascii_digits(digits).ok_or_else(|| Error::UnclassifiedPhone(digits.to_owned()))?;
        let (lead, rest) = self.phone_layout(&ascii, kind)?;
        let sizes = nth_composition(rest, index).ok_or(Error::TemplateIndex {
            class: SemioticClass::Phone,
            index,
            count: composition_count(rest),
        })?;
        let groups = grouped_digit_parts(&ascii[ascii.len() - rest..], &sizes)?;
        Ok(std::iter::once(lead).filter(|l| !l.is_empty()).chain(groups).collect::<Vec<_>>().join(" "))
    }

    pub fn verbalize_phone(&self, digits: &str, kind: PhoneKind, selector: &mut Selector) -> Result<String> {
        let count = self.phone_variant_count(digits, kind)?;
        let index = selector.pick(SemioticClass::Phone, count, 0)?;
        self.phone_variant(digits, kind, index)
    }

    /// Validated digits of a grouped identifier, separators removed.
    fn id_digits(&self, raw: &str, class: SemioticClass) -> Result<String> {
        let failed = || Error::ValidationFailed { class, raw: raw.to_owned() };
        let body = match class {
            SemioticClass::Sheba => {
                let compact: String = raw.chars().filter(|c| *c != ' ').collect();
                let digits = compact.strip_prefix("IR").and_then(ascii_digits).ok_or_else(failed)?;
                if !validate_sheba(&format!("IR{digits}")) {
                    return Err(failed());
                }
                return Ok(digits);
            }
            _ => raw.chars().filter(|c| !matches!(c, ' ' | '-' | ',')).collect::<String>(),
        };
        let ascii = ascii_digits(&body).ok_or_else(failed)?;
        let valid = match class {
            SemioticClass::NationalId => validate_national_id(&ascii).unwrap_or(false) && !is_repeated_digit(&ascii),
            SemioticClass::CardNumber => validate_card(&ascii).unwrap_or(false) && !is_repeated_digit(&ascii),
            SemioticClass::LongNumber => true,
            other => return Err(Error::NotGroupedClass { class: other }),
        };
        if valid {
            Ok(ascii)
        } else {
            Err(failed())
        }
    }

    fn id_partition_count(class: SemioticClass, len: usize) -> usize {
        match class {
            SemioticClass::NationalId | SemioticClass::CardNumber => composition_count(len),
            _ => regular_partitions(len).len(),
        }
    }

    fn id_partition(class: SemioticClass, len: usize, index: usize) -> Option<Vec<usize>> {
        match class {
            SemioticClass::NationalId | SemioticClass::CardNumber => nth_composition(len, index),
            _ => regular_partitions(len).into_iter().nth(index),
        }
    }

    pub fn grouped_id_variant_count(&self, raw: &str, class: SemioticClass) -> Result<usize> {
        let digits = self.id_digits(raw, class)?;
        Ok(Self::id_partition_count(class, digits.len()))
    }

    pub fn grouped_id_variant(&self, raw: &str, class: SemioticClass, index: usize) -> Result<String> {
        let digits = self.id_digits(raw, class)?;
        let sizes = Self::id_partition(class, digits.len(), index).ok_or_else(|| Error::TemplateIndex {
            class,
            index,
            count: Self::id_partition_count(class, digits.len()),
        })?;
        let groups = grouped_digit_parts(&digits, &sizes)?.join(" ");
        Ok(if class == SemioticClass::Sheba { format!("{SHEBA_PREFIX} {groups}") } else { groups })
    }

    pub fn verbalize_grouped_id(&self, raw: &str, class: SemioticClass, selector: &mut Selector) -> Result<String> {
        let count = self.grouped_id_variant_count(raw, class)?;
        let index = selector.pick(class, count, 0)?;
        self.grouped_id_variant(raw, class, index)
    }

    // ---- symbols, abbreviations, URLs ----

    fn symbol_table(&self, class: SemioticClass) -> Option<&'r MappingTable> {
        match class {
            SemioticClass::Symbol => Some(&self.res.symbols),
            SemioticClass::Currency => Some(&self.res.currencies),
            SemioticClass::MathSymbol => Some(&self.res.math_symbols),
            _ => None,
        }
    }

    pub fn verbalize_symbol(&self, token: &str, class: SemioticClass) -> Result<String> {
        let table = self.symbol_table(class).ok_or(Error::UnknownSymbol { class, token: token.to_owned() })?;
        table.get(token).map(str::to_owned).ok_or_else(|| Error::UnknownSymbol { class, token: token.to_owned() })
    }

    /// Persian abbreviations expand from the table; Latin ones are spelled
    /// letter by letter. Anything else comes back unchanged.
    pub fn expand_abbreviation(&self, token: &str) -> String {
        if let Some(expansion) = self.res.abbreviations_fa.get(token) {
            return expansion.to_owned();
        }
        let letters: Vec<char> = token.chars().filter(|c| *c != '.').collect();
        let spellable = letters.len() >= 2 || token.contains('.');
        if !spellable || letters.is_empty() || !letters.iter().all(char::is_ascii_alphabetic) {
            return token.to_owned();
        }
        let names: Option<Vec<&str>> = letters
            .iter()
            .map(|c| self.res.latin_letter_names.get(&c.to_ascii_uppercase().to_string()))
            .collect();
        match names {
            Some(names) => names.join(&ZWNJ.to_string()),
            None => token.to_owned(),
        }
    }

    /// Reads a URL or email aloud: separators become words, letters stay,
    /// and a long or escaped URL path is dropped.
    pub fn verbalize_url_email(&self, raw: &str) -> String {
        let lower = raw.to_lowercase();
        let spoken = strip_long_path(&lower);
        let words = match self.url_words {
            UrlWords::Latin => &self.res.url_words_latin,
            UrlWords::Persian => &self.res.url_words_persian,
        };
        let mut out: Vec<String> = Vec::new();
        let mut word = String::new();
        let flush = |word: &mut String, out: &mut Vec<String>| {
            if !word.is_empty() {
                out.push(std::mem::take(word));
            }
        };
        let mut rest = spoken;
        while let Some(c) = rest.chars().next() {
            if let Some((surface, replacement)) = words.match_prefix(rest) {
                flush(&mut word, &mut out);
                out.push(replacement.to_owned());
                rest = &rest[surface.len()..];
                continue;
            }
            rest = &rest[c.len_utf8()..];
            match digit_value(c) {
                Some(d) if self.spell_url_digits => {
                    flush(&mut word, &mut out);
                    out.push(DIGIT_WORDS[usize::from(d)].to_owned());
                }
                _ if c.is_alphanumeric() || c == ZWNJ => word.push(c),
                _ => {
                    flush(&mut word, &mut out);
                    let s = c.to_string();
                    let named = [&self.res.symbols, &self.res.currencies, &self.res.math_symbols]
                        .into_iter()
                        .find_map(|t| t.get(&s));
                    if let Some(name) = named {
                        out.push(name.to_owned());
                    }
                }
            }
        }
        flush(&mut word, &mut out);
        out.join(" ")
    }

    // ---- spans ----

    /// Number of distinct readings offered for `span`.
    pub fn variant_count(&self, span: &SemioticSpan) -> Result<usize> {
        Ok(match (span.class, span.detail) {
            (SemioticClass::Date, _) => self.res.date_templates.len(),
            (SemioticClass::Time, _) => self.res.time_templates.len(),
            (SemioticClass::Phone, SpanDetail::Phone(kind)) => self.phone_variant_count(&phone_digits(&span.raw), kind)?,
            (SemioticClass::NationalId | SemioticClass::CardNumber | SemioticClass::Sheba | SemioticClass::LongNumber, _) => {
                self.grouped_id_variant_count(&span.raw, span.class)?
            }
            _ => 1,
        })
    }

    /// Reading number `index` of `span`.
    pub fn render(&self, span: &SemioticSpan, index: usize) -> Result<String> {
        let class = span.class;
        let raw = span.raw.as_str();
        let single = |s: String| if index == 0 { Ok(s) } else { Err(Error::TemplateIndex { class, index, count: 1 }) };
        match (class, span.detail) {
            (SemioticClass::Date, SpanDetail::Date(d)) => self.date_variant(&d, index),
            (SemioticClass::Time, SpanDetail::Time { hour, minute, second }) => self.time_variant(hour, minute, second, index),
            (SemioticClass::Phone, SpanDetail::Phone(kind)) => self.phone_variant(&phone_digits(raw), kind, index),
            (SemioticClass::NationalId | SemioticClass::CardNumber | SemioticClass::Sheba | SemioticClass::LongNumber, _) => {
                self.grouped_id_variant(raw, class, index)
            }
            (SemioticClass::Decimal, _) => {
                let (int, frac) = raw.split_once('.').ok_or_else(|| Error::InvalidDigits(raw.to_owned()))?;
                single(decimal_words(int, frac)?.text)
            }
            (SemioticClass::PlainNumber, detail) => single(self.plain_number(raw, detail == SpanDetail::Ordinal)?),
            (SemioticClass::MathSymbol, SpanDetail::Fraction { numerator, denominator }) => {
                single(format!("{} {}", cardinal_words(numerator)?.text, ordinal_words(denominator)?.text))
            }
            (SemioticClass::Symbol | SemioticClass::Currency | SemioticClass::MathSymbol, _) => single(self.verbalize_symbol(raw, class)?),
            (SemioticClass::AbbrevFa | SemioticClass::AbbrevEn, _) => single(self.expand_abbreviation(raw)),
            (SemioticClass::Url | SemioticClass::Email, _) => single(self.verbalize_url_email(raw)),
            _ => Err(Error::ValidationFailed { class, raw: raw.to_owned() }),
        }
    }

    /// Every reading of `span`, duplicates removed, default first.
    pub fn variants(&self, span: &SemioticSpan) -> Result<Vec<String>> {
        let mut out: Vec<String> = Vec::new();
        for i in 0..self.variant_count(span)? {
            let v = self.render(span, i)?;
            if !out.contains(&v) {
                out.push(v);
            }
        }
        Ok(out)
    }

    /// One reading of `span`, chosen by `selector` when there are several.
    pub fn verbalize(&self, span: &SemioticSpan, selector: &mut Selector) -> Result<String> {
        let count = self.variant_count(span)?;
        let index = if count > 1 { selector.pick(span.class, count, 0)? } else { 0 };
        self.render(span, index)
    }

    fn plain_number(&self, raw: &str, ordinal: bool) -> Result<String> {
        let digits: String = raw.chars().filter(|c| digit_value(*c).is_some()).collect();
        let ascii = ascii_digits(&digits).ok_or_else(|| Error::InvalidDigits(raw.to_owned()))?;
        let value = ascii.parse::<u64>().map_err(|_| Error::InvalidDigits(raw.to_owned()))?;
        if ordinal {
            return Ok(ordinal_words(value)?.text);
        }
        if ascii.len() > 1 && ascii.starts_with('0') {
            return Ok(group_text(&ascii));
        }
        Ok(cardinal_words(value)?.text)
    }
}

fn phone_digits(raw: &str) -> String {
    raw.chars().filter(|c| digit_value(*c).is_some()).collect()
}

/// Drops the path of a URL when it is long or percent-escaped.
fn strip_long_path(url: &str) -> &str {
    if url.contains('@') && !url.contains("://") {
        return url;
    }
    let host_start = url.find("://").map_or(0, |i| i + 3);
    let Some(path_start) = url[host_start..].find(['/', '?', '#']).map(|i| host_start + i) else {
        return url;
    };
    let path = &url[path_start..];
    if path == "/" || path.chars().count() > URL_PATH_LIMIT || path.contains('%') {
        &url[..path_start]
    } else {
        url
    }
}

/// Classes whose readings are numbered variants, with the fewest variants
/// any instance of the class offers.
pub fn min_variant_count(class: SemioticClass, res: &Resources) -> Option<usize> {
    match class {
        SemioticClass::Date => Some(res.date_templates.len()),
        SemioticClass::Time => Some(res.time_templates.len()),
        // a mobile number leaves seven digits: three groupings
        SemioticClass::Phone => Some(composition_count(7).min(composition_count(8))),
        SemioticClass::NationalId => Some(composition_count(10)),
        SemioticClass::CardNumber => Some(composition_count(16)),
        SemioticClass::Sheba => Some(regular_partitions(24).len()),
        // long numbers have more than fifteen digits
        SemioticClass::LongNumber => {
            static MIN: OnceLock<usize> = OnceLock::new();
            Some(*MIN.get_or_init(|| (16..=64).map(|n| regular_partitions(n).len()).min().unwrap_or(1)))
        }
        _ => None,
    }
}

fn bundled() -> Verbalizer<'static> {
    Verbalizer::new(Resources::bundled())
}

pub fn verbalize_date(d: &CalendarDate, policy: &SelectionPolicy) -> Result<String> {
    bundled().verbalize_date(d, &mut Selector::new(policy.clone()))
}

pub fn verbalize_time(hour: u32, minute: u32, second: Option<u32>, policy: &SelectionPolicy) -> Result<String> {
    bundled().verbalize_time(hour, minute, second, &mut Selector::new(policy.clone()))
}

pub fn verbalize_phone(digits: &str, kind: PhoneKind, policy: &SelectionPolicy) -> Result<String> {
    bundled().verbalize_phone(digits, kind, &mut Selector::new(policy.clone()))
}

pub fn verbalize_grouped_id(digits: &str, class: SemioticClass, policy: &SelectionPolicy) -> Result<String> {
    bundled().verbalize_grouped_id(digits, class, &mut Selector::new(policy.clone()))
}

pub fn verbalize_symbol(token: &str, class: SemioticClass) -> Result<String> {
    bundled().verbalize_symbol(token, class)
}

pub fn expand_abbreviation(token: &str) -> String {
    bundled().expand_abbreviation(token)
}

pub fn verbalize_url_email(raw: &str) -> String {
    bundled().verbalize_url_email(raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calendar::Calendar;

    fn fixed(i: usize) -> SelectionPolicy {
        SelectionPolicy::Fixed(i)
    }

    fn date(y: u32, m: u32, d: u32) -> CalendarDate {
        CalendarDate::new(Calendar::SolarHijri, y, m, d).unwrap()
    }

    #[test]
    fn partitions() {
        assert_eq!(compositions(7), vec![vec![2, 2, 3], vec![2, 3, 2], vec![3, 2, 2]]);
        assert_eq!(compositions(10).len(), 7);
        assert_eq!(compositions(16).len(), 37);
        assert_eq!(compositions(10)[0], vec![2; 5]);
        assert!(compositions(1).is_empty());
        for n in 0..=20 {
            let all = compositions(n);
            assert_eq!(composition_count(n), all.len());
            for (i, c) in all.iter().enumerate() {
                assert_eq!(nth_composition(n, i).as_ref(), Some(c));
            }
            assert_eq!(nth_composition(n, all.len()), None);
        }
        assert_eq!(regular_partitions(24), vec![vec![2; 12], vec![3; 8], vec![3, 2, 3, 2, 3, 2, 3, 2, 2, 2]]);
        assert_eq!(regular_partitions(2), vec![vec![2]]);
        assert_eq!(regular_partitions(1), vec![vec![1]]);
        for n in 2..80 {
            for p in regular_partitions(n) {
                assert_eq!(p.iter().sum::<usize>(), n);
                assert!(p.iter().all(|s| (2..=3).contains(s)), "{n}: {p:?}");
            }
        }
    }

    #[test]
    fn date_examples() {
        assert_eq!(verbalize_date(&date(1397, 7, 9), &fixed(0)).unwrap(), "نهم مهر سال هزار و سیصد و نود و هفت");
        assert_eq!(verbalize_date(&date(1400, 7, 25), &fixed(1)).unwrap(), "بیست و پنجم مهر هزار و چهارصد");
        assert_eq!(verbalize_date(&date(1400, 7, 25), &fixed(4)).unwrap(), "بیست و پنج هفت هزار و چهارصد");
        assert_eq!(verbalize_date(&date(1400, 7, 25), &fixed(2)).unwrap(), "بیست و پنج مهر ماه هزار و چهارصد");
        assert_eq!(verbalize_date(&date(1400, 7, 25), &fixed(3)).unwrap(), "بیست و پنج مهر سال هزار و چهارصد");
        assert_eq!(verbalize_date(&date(1400, 1, 1), &fixed(0)).unwrap(), "اول فروردین سال هزار و چهارصد");
        let greg = CalendarDate::new(Calendar::Gregorian, 2018, 1, 10).unwrap();
        assert_eq!(verbalize_date(&greg, &fixed(1)).unwrap(), "دهم ژانویه دو هزار و هجده");
        let lunar = CalendarDate::new(Calendar::LunarHijri, 1443, 1, 1).unwrap();
        assert!(verbalize_date(&lunar, &fixed(1)).unwrap().starts_with("اول محرم"));
        assert!(matches!(verbalize_date(&date(1400, 7, 25), &fixed(10)), Err(Error::TemplateIndex { .. })));
    }

    #[test]
    fn time_examples() {
        assert_eq!(verbalize_time(11, 35, None, &fixed(0)).unwrap(), "یازده و سی و پنج دقیقه");
        assert_eq!(verbalize_time(11, 35, None, &fixed(1)).unwrap(), "یازده و سی و پنج");
        assert_eq!(verbalize_time(8, 0, None, &fixed(0)).unwrap(), "هشت");
        assert_eq!(verbalize_time(8, 0, None, &fixed(2)).unwrap(), "ساعت هشت");
        assert_eq!(verbalize_time(10, 30, Some(25), &fixed(0)).unwrap(), "ده و سی دقیقه و بیست و پنج ثانیه");
        assert!(matches!(verbalize_time(24, 0, None, &fixed(0)), Err(Error::InvalidTime(_))));
        assert!(verbalize_time(1, 60, None, &fixed(0)).is_err());
    }

    #[test]
    fn phone_examples() {
        let p = |i| verbalize_phone("09397796915", PhoneKind::Mobile, &fixed(i)).unwrap();
        assert_eq!(p(0), "صفر نهصد و سی و نه هفتاد و هفت نود و شش نهصد و پانزده");
        assert_eq!(p(1), "صفر نهصد و سی و نه هفتاد و هفت نهصد و شصت و نه پانزده");
        assert_eq!(p(2), "صفر نهصد و سی و نه هفتصد و هفتاد و نه شصت و نه پانزده");
        assert!(verbalize_phone("09123321234", PhoneKind::Mobile, &fixed(0)).unwrap().starts_with("صفر نهصد و دوازده "));
        assert_eq!(
            verbalize_phone("02188776655", PhoneKind::Landline, &fixed(0)).unwrap(),
            "صفر بیست و یک هشتاد و هشت هفتاد و هفت شصت و شش پنجاه و پنج"
        );
        assert!(matches!(verbalize_phone("1234", PhoneKind::Mobile, &fixed(0)), Err(Error::UnclassifiedPhone(_))));
    }

    #[test]
    fn grouped_id_examples() {
        assert_eq!(
            verbalize_grouped_id("0523924984", SemioticClass::NationalId, &fixed(0)).unwrap(),
            "صفر پنج بیست و سه نود و دو چهل و نه هشتاد و چهار"
        );
        assert_eq!(
            verbalize_grouped_id("6104337852441441", SemioticClass::CardNumber, &fixed(0)).unwrap(),
            "شصت و یک صفر چهار سی و سه هفتاد و هشت پنجاه و دو چهل و چهار چهارده چهل و یک"
        );
        assert_eq!(verbalize_grouped_id("22", SemioticClass::LongNumber, &fixed(0)).unwrap(), "بیست و دو");
        assert!(matches!(
            verbalize_grouped_id("0523924985", SemioticClass::NationalId, &fixed(0)),
            Err(Error::ValidationFailed { .. })
        ));
        assert!(matches!(
            verbalize_grouped_id("0000000000", SemioticClass::NationalId, &fixed(0)),
            Err(Error::ValidationFailed { .. })
        ));
        let sheba = verbalize_grouped_id("IR062960000000100324200001", SemioticClass::Sheba, &fixed(0)).unwrap();
        assert!(sheba.starts_with("آی آر صفر شش بیست و نه"), "{sheba}");
    }

    #[test]
    fn symbol_examples() {
        assert_eq!(verbalize_symbol("%", SemioticClass::Symbol).unwrap(), "درصد");
        assert_eq!(verbalize_symbol("$", SemioticClass::Currency).unwrap(), "دلار");
        assert_eq!(verbalize_symbol("½", SemioticClass::MathSymbol).unwrap(), "یک دوم");
        assert!(matches!(verbalize_symbol("$", SemioticClass::Symbol), Err(Error::UnknownSymbol { .. })));
    }

    #[test]
    fn abbreviation_examples() {
        assert_eq!(expand_abbreviation("ر.ک"), "رجوع کنید");
        assert_eq!(expand_abbreviation("Ph.D"), "پی\u{200C}اچ\u{200C}دی");
        assert_eq!(expand_abbreviation("X"), "X");
        assert_eq!(expand_abbreviation("ناشناخته"), "ناشناخته");
    }

    #[test]
    fn url_examples() {
        assert_eq!(
            verbalize_url_email("http://wpc.be1e.edgecastcdn.net/news/20ak9qy4prra.html"),
            "http do noghte slash slash wpc dot be1e dot edgecastcdn dot net"
        );
        assert_eq!(verbalize_url_email("a@b.com"), "a at b dot com");
        assert_eq!(verbalize_url_email("b.com"), "b dot com");
        assert_eq!(verbalize_url_email("b.com/a-b"), "b dot com slash a dash b");
        assert_eq!(verbalize_url_email("b.com/%D8%A7"), "b dot com");
        let persian = bundled().with_url_words(UrlWords::Persian).with_spelled_url_digits(true);
        assert_eq!(persian.verbalize_url_email("a1@b.ir"), "a یک اَت b نقطه ir");
    }

    #[test]
    fn min_counts() {
        let res = Resources::bundled();
        assert_eq!(min_variant_count(SemioticClass::Date, res), Some(10));
        assert_eq!(min_variant_count(SemioticClass::Phone, res), Some(3));
        assert_eq!(min_variant_count(SemioticClass::LongNumber, res), Some(3));
        assert_eq!(min_variant_count(SemioticClass::Symbol, res), None);
    }
}
