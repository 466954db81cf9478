//! Slot templates for spoken renderings and the policy that picks among them.
//!
//! A template is literal text with `{slot}` placeholders. Text wrapped in
//! `[...]` is optional: it is dropped whenever one of the slots inside it has
//! no value. Brackets do not nest.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scanner::SemioticClass;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Piece {
    Text(String),
    Slot(String),
    Optional(Vec<Piece>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    source: String,
    pieces: Vec<Piece>,
}

impl Template {
    pub fn parse(source: &str) -> std::result::Result<Self, String> {
        let mut top = Vec::new();
        let mut group: Option<Vec<Piece>> = None;
        let mut rest = source;
        while !rest.is_empty() {
            let target = group.as_mut().unwrap_or(&mut top);
            match rest.find(['{', '[', ']']) {
                Some(0) => {
                    if let Some(slot) = rest.strip_prefix('{') {
                        let end = slot.find('}').ok_or("unclosed '{'")?;
                        let name = &slot[..end];
                        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                            return Err(format!("bad slot name {name:?}"));
                        }
                        target.push(Piece::Slot(name.to_owned()));
                        rest = &slot[end + 1..];
                    } else if let Some(r) = rest.strip_prefix('[') {
                        if group.is_some() {
                            return Err("nested '['".into());
                        }
                        group = Some(Vec::new());
                        rest = r;
                    } else {
                        let pieces = group.take().ok_or("unmatched ']'")?;
                        top.push(Piece::Optional(pieces));
                        rest = &rest[1..];
                    }
                }
                Some(i) => {
                    target.push(Piece::Text(rest[..i].to_owned()));
                    rest = &rest[i..];
                }
                None => {
                    target.push(Piece::Text(rest.to_owned()));
                    rest = "";
                }
            }
        }
        if group.is_some() {
            return Err("unclosed '['".into());
        }
        if top.is_empty() {
            return Err("empty template".into());
        }
        Ok(Self { source: source.to_owned(), pieces: top })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Slot names in order of appearance, with whether each is required.
    pub fn slots(&self) -> Vec<(&str, bool)> {
        let mut out = Vec::new();
        for piece in &self.pieces {
            match piece {
                Piece::Slot(s) => out.push((s.as_str(), true)),
                Piece::Optional(inner) => out.extend(inner.iter().filter_map(|p| match p {
                    Piece::Slot(s) => Some((s.as_str(), false)),
                    _ => None,
                })),
                Piece::Text(_) => {}
            }
        }
        out
    }

    /// Fills the template. `None` from `value` means the slot has no value;
    /// that drops an optional group and is an error for a required slot.
    /// The result has runs of spaces collapsed and is trimmed.
    pub fn render<'a>(&self, value: impl Fn(&str) -> Option<&'a str>) -> Option<String> {
        let mut out = String::new();
        for piece in &self.pieces {
            match piece {
                Piece::Text(t) => out.push_str(t),
                Piece::Slot(s) => out.push_str(value(s)?),
                Piece::Optional(inner) => {
                    let mut part = String::new();
                    let complete = inner.iter().all(|p| match p {
                        Piece::Text(t) => {
                            part.push_str(t);
                            true
                        }
                        Piece::Slot(s) => value(s).map(|v| part.push_str(v)).is_some(),
                        Piece::Optional(_) => unreachable!("groups do not nest"),
                    });
                    if complete {
                        out.push_str(&part);
                    }
                }
            }
        }
        Some(out.split_whitespace().collect::<Vec<_>>().join(" "))
    }
}

#[derive(Debug, Clone)]
pub struct TemplateSet {
    pub class: SemioticClass,
    pub templates: Vec<Template>,
    pub default_index: usize,
}

impl TemplateSet {
    /// Parses one template per non-comment line. Every slot must be one of
    /// `allowed_slots`.
    pub fn parse(class: SemioticClass, file: &str, source: &str, allowed_slots: &[&str]) -> Result<Self> {
        let mut templates = Vec::new();
        for (n, line) in source.lines().enumerate() {
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let t = Template::parse(line).map_err(|m| Error::resource(file, n + 1, m))?;
            if let Some((bad, _)) = t.slots().into_iter().find(|(s, _)| !allowed_slots.contains(s)) {
                return Err(Error::resource(file, n + 1, format!("unknown slot {{{bad}}}")));
            }
            templates.push(t);
        }
        if templates.is_empty() {
            return Err(Error::resource(file, 0, "no templates"));
        }
        Ok(Self { class, templates, default_index: 0 })
    }

    pub fn len(&self) -> usize {
        self.templates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.templates.is_empty()
    }

    pub fn render<'a>(&self, index: usize, value: impl Fn(&str) -> Option<&'a str>) -> Result<String> {
        let t = self.templates.get(index).ok_or(Error::TemplateIndex {
            class: self.class,
            index,
            count: self.templates.len(),
        })?;
        t.render(value).ok_or_else(|| {
            Error::Config(format!("{} template {index} has an unfilled required slot", self.class))
        })
    }
}

/// How a verbalizer chooses among the renderings of a span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SelectionPolicy {
    Fixed(usize),
    SeededRandom(u64),
    /// Every rendering is produced by the enumerating entry points; single
    /// renderings fall back to each class's default.
    EnumerateAll,
}

impl Default for SelectionPolicy {
    fn default() -> Self {
        SelectionPolicy::Fixed(0)
    }
}

/// Caller-owned selection state: the policy, per-class index overrides and,
/// for seeded selection, the random stream.
#[derive(Debug, Clone)]
pub struct Selector {
    policy: SelectionPolicy,
    overrides: BTreeMap<SemioticClass, usize>,
    rng: Option<ChaCha8Rng>,
}

impl Selector {
    pub fn new(policy: SelectionPolicy) -> Self {
        Self::with_stream(policy, 0)
    }

    /// A selector whose random draws come from stream `stream` of the seed,
    /// so independent units of work (lines of a file) stay reproducible.
    pub fn with_stream(policy: SelectionPolicy, stream: u64) -> Self {
        let rng = match policy {
            SelectionPolicy::SeededRandom(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(stream);
                Some(rng)
            }
            _ => None,
        };
        Self { policy, overrides: BTreeMap::new(), rng }
    }

    pub fn with_overrides(mut self, overrides: BTreeMap<SemioticClass, usize>) -> Self {
        self.overrides = overrides;
        self
    }

    pub fn policy(&self) -> &SelectionPolicy {
        &self.policy
    }

    /// Picks one of `count` renderings for `class`.
    pub fn pick(&mut self, class: SemioticClass, count: usize, default: usize) -> Result<usize> {
        debug_assert!(count > 0 && default < count);
        let fixed = |index: usize| {
            if index < count {
                Ok(index)
            } else {
                Err(Error::TemplateIndex { class, index, count })
            }
        };
        if let Some(&index) = self.overrides.get(&class) {
            return fixed(index);
        }
        match (&self.policy, self.rng.as_mut()) {
            (SelectionPolicy::Fixed(index), _) => fixed(*index),
            (SelectionPolicy::SeededRandom(_), Some(rng)) => Ok(rng.gen_range(0..count)),
            _ => Ok(default),
        }
    }
}

impl Default for Selector {
    fn default() -> Self {
        Self::new(SelectionPolicy::default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lookup<'a>(pairs: &'a [(&'a str, Option<&'a str>)]) -> impl Fn(&str) -> Option<&'a str> + 'a {
        move |k| pairs.iter().find(|(n, _)| *n == k).and_then(|(_, v)| *v)
    }

    #[test]
    fn optional_groups_drop_when_empty() {
        let t = Template::parse("{hour}[ و {minute} دقیقه][ و {second} ثانیه]").unwrap();
        let full = [("hour", Some("ده")), ("minute", Some("سی")), ("second", Some("پنج"))];
        assert_eq!(t.render(lookup(&full)).unwrap(), "ده و سی دقیقه و پنج ثانیه");
        let bare = [("hour", Some("هشت")), ("minute", None), ("second", None)];
        assert_eq!(t.render(lookup(&bare)).unwrap(), "هشت");
    }

    #[test]
    fn required_slot_without_value_fails() {
        let t = Template::parse("{a} x").unwrap();
        assert_eq!(t.render(|_| None), None);
    }

    #[test]
    fn parse_errors() {
        for bad in ["{a", "[x", "x]", "[[a]]", "{}", "{a b}", ""] {
            assert!(Template::parse(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn slots_report_requiredness() {
        let t = Template::parse("ساعت {hour}[ و {minute}]").unwrap();
        assert_eq!(t.slots(), vec![("hour", true), ("minute", false)]);
    }

    #[test]
    fn unknown_slot_rejected_with_line() {
        let err = TemplateSet::parse(SemioticClass::Time, "t.tpl", "# c\n{hour}\n{minit}\n", &["hour"]).unwrap_err();
        assert!(err.to_string().starts_with("t.tpl:3"), "{err}");
    }

    #[test]
    fn selector_policies() {
        let mut s = Selector::new(SelectionPolicy::Fixed(1));
        assert_eq!(s.pick(SemioticClass::Date, 10, 0).unwrap(), 1);
        assert!(matches!(
            s.pick(SemioticClass::Date, 1, 0),
            Err(Error::TemplateIndex { index: 1, count: 1, .. })
        ));

        let mut s = Selector::new(SelectionPolicy::Fixed(0))
            .with_overrides([(SemioticClass::Date, 4)].into_iter().collect());
        assert_eq!(s.pick(SemioticClass::Date, 10, 0).unwrap(), 4);
        assert_eq!(s.pick(SemioticClass::Time, 4, 0).unwrap(), 0);

        let mut s = Selector::new(SelectionPolicy::EnumerateAll);
        assert_eq!(s.pick(SemioticClass::Phone, 3, 2).unwrap(), 2);
    }

    #[test]
    fn seeded_selection_is_reproducible_per_stream() {
        let draws = |seed, stream| {
            let mut s = Selector::with_stream(SelectionPolicy::SeededRandom(seed), stream);
            (0..32).map(|_| s.pick(SemioticClass::Date, 10, 0).unwrap()).collect::<Vec<_>>()
        };
        assert_eq!(draws(7, 0), draws(7, 0));
        assert_ne!(draws(7, 0), draws(7, 1));
        assert_ne!(draws(7, 0), draws(8, 0));
    }
}
