//! Character-level unification: letters, digits, punctuation, markup
//! entities and emoji.
//!
//! The free functions use the bundled tables; [`Charset`] runs the same
//! passes over any loaded [`Resources`].

use crate::numbers::digit_value;
use crate::resources::Resources;

const ZWJ: char = '\u{200D}';

#[derive(Debug, Clone, Copy)]
pub struct Charset<'r> {
    res: &'r Resources,
}

impl<'r> Charset<'r> {
    pub fn new(res: &'r Resources) -> Self {
        Self { res }
    }

    pub fn fold_characters(&self, text: &str) -> String {
        self.res.characters.replace_all(text)
    }

    pub fn fold_digits(&self, text: &str) -> String {
        self.res.digits.replace_all(text)
    }

    pub fn fold_punctuation(&self, text: &str) -> String {
        self.res.punctuation.replace_all(text)
    }

    /// Decodes entities until none are left, so "&amp;lt;" becomes "<".
    pub fn decode_markup_entities(&self, text: &str) -> String {
        let mut current = self.decode_once(text);
        loop {
            let next = self.decode_once(&current);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    fn decode_once(&self, text: &str) -> String {
        if !text.contains('&') {
            return text.to_owned();
        }
        let mut out = String::with_capacity(text.len());
        let mut rest = text;
        while let Some(at) = rest.find('&') {
            out.push_str(&rest[..at]);
            rest = &rest[at..];
            match self.entity_at(rest) {
                Some((len, decoded)) => {
                    out.push_str(&decoded);
                    rest = &rest[len..];
                }
                None => {
                    out.push('&');
                    rest = &rest[1..];
                }
            }
        }
        out.push_str(rest);
        out
    }

    /// Length and expansion of the entity starting at `s` (which starts with
    /// '&'). A name without its ';' only counts when no letter or digit
    /// follows it.
    fn entity_at(&self, s: &str) -> Option<(usize, String)> {
        let body = &s[1..];
        if let Some(num) = body.strip_prefix('#') {
            // digits may already be folded to another script by an earlier pass
            let (digits, radix) = match num.strip_prefix(['x', 'X']) {
                Some(hex) => (hex, 16),
                None => (num, 10),
            };
            let mut value: u32 = 0;
            let mut count = 0;
            let mut used = 0;
            for c in digits.chars() {
                let d = match digit_value(c) {
                    Some(d) => u32::from(d),
                    None if radix == 16 && c.is_ascii_hexdigit() => c.to_digit(16)?,
                    None => break,
                };
                count += 1;
                if count > 8 {
                    return None;
                }
                value = value * radix + d;
                used += c.len_utf8();
            }
            if count == 0 {
                return None;
            }
            let c = char::from_u32(value).filter(|&c| c != '\0')?;
            let mut len = s.len() - digits.len() + used;
            if s[len..].starts_with(';') {
                len += 1;
            }
            return Some((len, c.to_string()));
        }
        let name_len = body.bytes().take_while(u8::is_ascii_alphanumeric).count();
        let candidates = &body[..name_len];
        // longest known name that is a prefix of the alphanumeric run
        (1..=name_len).rev().find_map(|n| {
            let name = &candidates[..n];
            let replacement = self.res.entities.get(name)?;
            let after = &body[n..];
            if after.starts_with(';') {
                Some((1 + n + 1, replacement.to_owned()))
            } else if n == name_len {
                Some((1 + n, replacement.to_owned()))
            } else {
                None
            }
        })
    }

    fn is_emoji(&self, c: char) -> bool {
        self.res.emoji.contains(c)
    }

    /// Removes emoji and their joiners and selectors. Horizontal space around
    /// a removed emoji collapses to one space, dropped at line edges.
    pub fn strip_emojis(&self, text: &str) -> String {
        if !text.chars().any(|c| self.is_emoji(c) || is_presentation_mark(c)) {
            return text.to_owned();
        }
        let chars: Vec<char> = text.chars().collect();
        let mut out = String::with_capacity(text.len());
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if is_presentation_mark(c) {
                i += 1;
                continue;
            }
            if !self.is_emoji(c) {
                out.push(c);
                i += 1;
                continue;
            }
            let mut saw_space = out.ends_with(is_hspace);
            out.truncate(out.trim_end_matches(is_hspace).len());
            loop {
                while i < chars.len() && (self.is_emoji(chars[i]) || chars[i] == ZWJ || is_presentation_mark(chars[i])) {
                    i += 1;
                }
                let mut j = i;
                while j < chars.len() && is_hspace(chars[j]) {
                    j += 1;
                }
                if j > i {
                    saw_space = true;
                }
                i = j;
                if !(i < chars.len() && self.is_emoji(chars[i])) {
                    break;
                }
            }
            let at_edge = out.is_empty() || out.ends_with(['\n', '\r']) || i == chars.len() || matches!(chars[i], '\n' | '\r');
            if saw_space && !at_edge {
                out.push(' ');
            }
        }
        out
    }
}

/// Variation selectors, keycap marks and tag characters: meaningful only as
/// part of an emoji sequence.
fn is_presentation_mark(c: char) -> bool {
    matches!(c, '\u{FE0F}' | '\u{20E3}' | '\u{E0020}'..='\u{E007F}')
}

fn is_hspace(c: char) -> bool {
    matches!(c, ' ' | '\t')
}

fn bundled() -> Charset<'static> {
    Charset::new(Resources::bundled())
}

/// Canonical Persian letters, plain ASCII Latin letters and spelled-out
/// ligature symbols.
pub fn fold_characters(text: &str) -> String {
    bundled().fold_characters(text)
}

/// Every supported digit variant to Persian digits.
pub fn fold_digits(text: &str) -> String {
    bundled().fold_digits(text)
}

/// Punctuation variants to one canonical mark; vulgar fractions to
/// Persian-digit fraction notation.
pub fn fold_punctuation(text: &str) -> String {
    bundled().fold_punctuation(text)
}

/// Named and numeric character entities to the characters they denote.
pub fn decode_markup_entities(text: &str) -> String {
    bundled().decode_markup_entities(text)
}

pub fn strip_emojis(text: &str) -> String {
    bundled().strip_emojis(text)
}
