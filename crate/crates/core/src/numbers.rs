//! Persian number words: cardinals, ordinals, decimals and digit groups, plus
//! an independent parser for cardinals.
//!
//! Cardinals follow the standard triple-grouped reading. Every group and
//! every component inside a group is joined with " و ". A group equal to one
//! before هزار (and before هزار میلیارد) is read as the bare scale word, so
//! 1397 is "هزار و سیصد و نود و هفت" rather than "یک هزار ...". Scale words
//! cover values below 10^15:
//!
//! | scale  | word          |
//! |--------|---------------|
//! | 10^3   | هزار          |
//! | 10^6   | میلیون        |
//! | 10^9   | میلیارد       |
//! | 10^12  | هزار میلیارد  |
//!
//! Digit groups (phone numbers, card numbers) read each group as a cardinal,
//! except that every leading zero is read separately as "صفر": "04" is
//! "صفر چهار" and "052" is "صفر پنجاه و دو".

use std::fmt;

use crate::error::{Error, Result};

/// Exclusive upper bound of the cardinal grammar.
pub const CARDINAL_LIMIT: u64 = 1_000_000_000_000_000;

const ZERO: &str = "صفر";
const AND: &str = " و ";
const DECIMAL_POINT: &str = "ممیز";

const UNITS: [&str; 10] = ["صفر", "یک", "دو", "سه", "چهار", "پنج", "شش", "هفت", "هشت", "نه"];
const TEENS: [&str; 10] = [
    "ده", "یازده", "دوازده", "سیزده", "چهارده", "پانزده", "شانزده", "هفده", "هجده", "نوزده",
];
const TENS: [&str; 10] = ["", "", "بیست", "سی", "چهل", "پنجاه", "شصت", "هفتاد", "هشتاد", "نود"];
const HUNDREDS: [&str; 10] =
    ["", "صد", "دویست", "سیصد", "چهارصد", "پانصد", "ششصد", "هفتصد", "هشتصد", "نهصد"];

const THOUSAND: u64 = 1_000;
const MILLION: u64 = 1_000_000;
const BILLION: u64 = 1_000_000_000;
const TRILLION: u64 = 1_000_000_000_000;

const SCALES: [(u64, &str); 4] = [
    (TRILLION, "هزار میلیارد"),
    (BILLION, "میلیارد"),
    (MILLION, "میلیون"),
    (THOUSAND, "هزار"),
];

/// Place-value words for one, two and three fraction digits.
const FRACTION_PLACES: [&str; 3] = ["دهم", "صدم", "هزارم"];

/// Numeric value of an ASCII, Arabic-Indic or Persian digit.
pub fn digit_value(c: char) -> Option<u8> {
    match c {
        '0'..='9' => Some(c as u8 - b'0'),
        '\u{0660}'..='\u{0669}' => Some((c as u32 - 0x0660) as u8),
        '\u{06F0}'..='\u{06F9}' => Some((c as u32 - 0x06F0) as u8),
        _ => None,
    }
}

pub fn is_digit(c: char) -> bool {
    digit_value(c).is_some()
}

/// Rewrites a string of supported digits as ASCII digits; `None` if it is
/// empty or holds anything else.
pub fn ascii_digits(s: &str) -> Option<String> {
    if s.is_empty() {
        return None;
    }
    s.chars().map(|c| digit_value(c).map(|d| char::from(b'0' + d))).collect()
}

fn checked_digits(s: &str) -> Result<String> {
    ascii_digits(s).ok_or_else(|| Error::InvalidDigits(s.to_owned()))
}

fn parse_value(ascii: &str) -> Result<u64> {
    let significant = ascii.trim_start_matches('0');
    if significant.len() > 15 {
        return Err(Error::OutOfRange { value: u64::MAX });
    }
    let value = if significant.is_empty() { 0 } else { significant.parse().expect("ascii digits") };
    if value >= CARDINAL_LIMIT {
        return Err(Error::OutOfRange { value });
    }
    Ok(value)
}

/// What a [`NumberWords`] reads aloud.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NumberValue {
    Integer(u64),
    Decimal { integer: u64, fraction: String },
    Digits(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberWords {
    pub text: String,
    pub value: NumberValue,
}

impl NumberWords {
    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn into_string(self) -> String {
        self.text
    }
}

impl fmt::Display for NumberWords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl AsRef<str> for NumberWords {
    fn as_ref(&self) -> &str {
        &self.text
    }
}

fn push_below_thousand(n: u64, parts: &mut Vec<&'static str>) {
    debug_assert!(n > 0 && n < 1000);
    let (h, rest) = ((n / 100) as usize, n % 100);
    if h > 0 {
        parts.push(HUNDREDS[h]);
    }
    match rest {
        0 => {}
        1..=9 => parts.push(UNITS[rest as usize]),
        10..=19 => parts.push(TEENS[rest as usize - 10]),
        _ => {
            parts.push(TENS[(rest / 10) as usize]);
            if rest % 10 > 0 {
                parts.push(UNITS[(rest % 10) as usize]);
            }
        }
    }
}

fn cardinal_text(n: u64) -> String {
    if n == 0 {
        return ZERO.to_owned();
    }
    let mut out: Vec<String> = Vec::new();
    let mut rest = n;
    for (scale, word) in SCALES {
        let group = rest / scale;
        rest %= scale;
        if group == 0 {
            continue;
        }
        if group == 1 && (scale == THOUSAND || scale == TRILLION) {
            out.push(word.to_owned());
        } else {
            let mut parts = Vec::new();
            push_below_thousand(group, &mut parts);
            out.push(format!("{} {word}", parts.join(AND)));
        }
    }
    if rest > 0 {
        let mut parts = Vec::new();
        push_below_thousand(rest, &mut parts);
        out.push(parts.join(AND));
    }
    out.join(AND)
}

/// Standard Persian cardinal reading of `n`.
pub fn cardinal_words(n: u64) -> Result<NumberWords> {
    if n >= CARDINAL_LIMIT {
        return Err(Error::OutOfRange { value: n });
    }
    Ok(NumberWords { text: cardinal_text(n), value: NumberValue::Integer(n) })
}

/// How the ordinal of one is spelled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FirstOrdinal {
    /// "یکم", the general form.
    #[default]
    Yekom,
    /// "اول", preferred for the first day of a month.
    Avval,
}

fn ordinal_suffix(word: &str) -> String {
    match word {
        "یک" => "یکم".to_owned(),
        "سه" => "سوم".to_owned(),
        // a vowel-final numeral takes the suffix after a half-space
        "سی" => "سی\u{200C}ام".to_owned(),
        _ => format!("{word}م"),
    }
}

/// Ordinal of `n` ("نهم", "بیست و پنجم", "سوم"), with 1 spelled "یکم".
pub fn ordinal_words(n: u64) -> Result<NumberWords> {
    ordinal_words_with(n, FirstOrdinal::Yekom)
}

pub fn ordinal_words_with(n: u64, first: FirstOrdinal) -> Result<NumberWords> {
    if n == 0 {
        return Err(Error::ZeroOrdinal);
    }
    let cardinal = cardinal_words(n)?.text;
    let text = if n == 1 && first == FirstOrdinal::Avval {
        "اول".to_owned()
    } else {
        match cardinal.rsplit_once(' ') {
            Some((head, last)) => format!("{head} {}", ordinal_suffix(last)),
            None => ordinal_suffix(&cardinal),
        }
    };
    Ok(NumberWords { text, value: NumberValue::Integer(n) })
}

/// Reads `integer_part.fraction_part`: the fraction is a cardinal followed by
/// its place value for up to three digits, and digit by digit beyond that.
pub fn decimal_words(integer_part: &str, fraction_part: &str) -> Result<NumberWords> {
    let int_digits = checked_digits(integer_part)?;
    let frac_digits = checked_digits(fraction_part)?;
    let integer = parse_value(&int_digits)?;
    let fraction = match frac_digits.len() {
        len @ 1..=3 => {
            let value: u64 = frac_digits.parse().expect("ascii digits");
            format!("{} {}", cardinal_text(value), FRACTION_PLACES[len - 1])
        }
        _ => frac_digits
            .bytes()
            .map(|b| UNITS[(b - b'0') as usize])
            .collect::<Vec<_>>()
            .join(" "),
    };
    Ok(NumberWords {
        text: format!("{} {DECIMAL_POINT} {fraction}", cardinal_text(integer)),
        value: NumberValue::Decimal { integer, fraction: frac_digits },
    })
}

/// One digit group: each leading zero reads "صفر", the rest as a cardinal.
pub(crate) fn group_text(ascii: &str) -> String {
    let significant = ascii.trim_start_matches('0');
    let zeros = ascii.len() - significant.len();
    let mut words: Vec<String> = vec![ZERO.to_owned(); zeros];
    if !significant.is_empty() {
        let value: u64 = significant.parse().expect("group fits in u64");
        words.push(cardinal_text(value));
    }
    words.join(" ")
}

/// The per-group readings behind [`grouped_digit_words`].
pub fn grouped_digit_parts(digits: &str, group_sizes: &[usize]) -> Result<Vec<String>> {
    let ascii = checked_digits(digits)?;
    if let Some(&bad) = group_sizes.iter().find(|&&s| !(1..=4).contains(&s)) {
        return Err(Error::InvalidGroupSize(bad));
    }
    let expected: usize = group_sizes.iter().sum();
    if expected != ascii.len() {
        return Err(Error::GroupSizeMismatch { expected, actual: ascii.len() });
    }
    let mut start = 0;
    Ok(group_sizes
        .iter()
        .map(|&size| {
            let group = &ascii[start..start + size];
            start += size;
            group_text(group)
        })
        .collect())
}

/// Reads `digits` split into consecutive groups of `group_sizes`, groups
/// separated by single spaces.
pub fn grouped_digit_words(digits: &str, group_sizes: &[usize]) -> Result<NumberWords> {
    let parts = grouped_digit_parts(digits, group_sizes)?;
    Ok(NumberWords {
        text: parts.join(" "),
        value: NumberValue::Digits(ascii_digits(digits).expect("validated above")),
    })
}

#[derive(Default)]
struct GroupParse {
    hundreds: Option<u64>,
    tens: Option<u64>,
    teen: Option<u64>,
    unit: Option<u64>,
}

impl GroupParse {
    fn is_empty(&self) -> bool {
        self.hundreds.is_none() && self.tens.is_none() && self.teen.is_none() && self.unit.is_none()
    }

    fn value(&self) -> u64 {
        self.hundreds.unwrap_or(0)
            + self.tens.unwrap_or(0)
            + self.teen.unwrap_or(0)
            + self.unit.unwrap_or(0)
    }

    /// Adds one basic number word, enforcing hundreds, then tens or teens,
    /// then units.
    fn push(&mut self, word: &str) -> bool {
        let find = |table: &[&str; 10], w: &str| table.iter().position(|t| !t.is_empty() && *t == w);
        if let Some(i) = find(&HUNDREDS, word) {
            if !self.is_empty() {
                return false;
            }
            self.hundreds = Some(i as u64 * 100);
        } else if let Some(i) = find(&TENS, word) {
            if self.tens.is_some() || self.teen.is_some() || self.unit.is_some() {
                return false;
            }
            self.tens = Some(i as u64 * 10);
        } else if let Some(i) = find(&TEENS, word) {
            if self.tens.is_some() || self.teen.is_some() || self.unit.is_some() {
                return false;
            }
            self.teen = Some(10 + i as u64);
        } else if let Some(i) = UNITS.iter().skip(1).position(|t| *t == word) {
            if self.unit.is_some() || self.teen.is_some() {
                return false;
            }
            self.unit = Some(i as u64 + 1);
        } else {
            return false;
        }
        true
    }
}

/// Parses a cardinal in exactly the form [`cardinal_words`] produces.
///
/// This is a grammar of its own, not a lookup through the generator, so the
/// two can check each other.
pub fn words_to_number(words: &str) -> Result<u64> {
    let fail = || Error::UnparseableWords(words.to_owned());
    if words == ZERO {
        return Ok(0);
    }
    if words.is_empty() {
        return Err(fail());
    }
    let mut total = 0u64;
    let mut group = GroupParse::default();
    let mut last_scale = u64::MAX;
    for part in words.split(AND) {
        let tokens: Vec<&str> = part.split(' ').collect();
        let (head, scale) = match tokens.as_slice() {
            ["هزار", "میلیارد"] => (None, Some(TRILLION)),
            ["هزار"] => (None, Some(THOUSAND)),
            [w] => (Some(*w), None),
            [w, "هزار", "میلیارد"] => (Some(*w), Some(TRILLION)),
            [w, "هزار"] => (Some(*w), Some(THOUSAND)),
            [w, "میلیون"] => (Some(*w), Some(MILLION)),
            [w, "میلیارد"] => (Some(*w), Some(BILLION)),
            _ => return Err(fail()),
        };
        if let Some(w) = head {
            if !group.push(w) {
                return Err(fail());
            }
        }
        if let Some(scale) = scale {
            if scale >= last_scale {
                return Err(fail());
            }
            let multiplier = match head {
                None => {
                    if !group.is_empty() {
                        return Err(fail());
                    }
                    1
                }
                Some(_) => {
                    let v = group.value();
                    let bare_one_expected = v == 1 && (scale == THOUSAND || scale == TRILLION);
                    if v == 0 || bare_one_expected {
                        return Err(fail());
                    }
                    v
                }
            };
            total += multiplier * scale;
            last_scale = scale;
            group = GroupParse::default();
        }
    }
    total += group.value();
    if total == 0 {
        return Err(fail());
    }
    Ok(total)
}
