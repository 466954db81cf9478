//! The general and speech pipelines and their configuration.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::calendar::Calendar;
use crate::charset::Charset;
use crate::error::{Error, Result};
use crate::numbers::digit_value;
use crate::resources::Resources;
use crate::scanner::{Scanner, SemioticClass, SemioticSpan};
use crate::segment::{Segmenter, DEFAULT_VERB_SPLIT_THRESHOLD};
use crate::template::{SelectionPolicy, Selector};
use crate::verbalize::{min_variant_count, UrlWords, Verbalizer};

/// Most renderings `enumerate_verbalizations` will produce for one text.
pub const ENUMERATION_CAP: u128 = 10_000;

/// General passes run until the text stops changing, bounded by this.
const GENERAL_ROUNDS: usize = 4;

/// Verbalizing can expose new spans (a symbol read aloud leaves a word
/// boundary behind), so the speech pass repeats up to this many times.
const SPEECH_ROUNDS: usize = 4;

const DIGIT_WORDS: [&str; 10] = ["صفر", "یک", "دو", "سه", "چهار", "پنج", "شش", "هفت", "هشت", "نه"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    General,
    Speech,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "general" => Ok(Mode::General),
            "speech" => Ok(Mode::Speech),
            other => Err(Error::Config(format!("unknown mode {other:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::General => "general",
            Mode::Speech => "speech",
        })
    }
}

/// A named, individually switchable step of the pipelines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pass {
    FoldCharacters,
    FoldDigits,
    FoldPunctuation,
    DecodeMarkupEntities,
    StripEmojis,
    /// Verbalization of one class in the speech pipeline.
    Verbalize(SemioticClass),
}

impl Pass {
    pub const GENERAL: [Pass; 5] = [
        Pass::FoldCharacters,
        Pass::FoldDigits,
        Pass::FoldPunctuation,
        Pass::DecodeMarkupEntities,
        Pass::StripEmojis,
    ];

    /// Every registered pass, general passes first.
    pub fn all() -> impl Iterator<Item = Pass> {
        Pass::GENERAL.into_iter().chain(SemioticClass::ALL.into_iter().map(Pass::Verbalize))
    }

    pub fn is_general(self) -> bool {
        !matches!(self, Pass::Verbalize(_))
    }

    pub fn name(self) -> String {
        match self {
            Pass::FoldCharacters => "fold_characters".into(),
            Pass::FoldDigits => "fold_digits".into(),
            Pass::FoldPunctuation => "fold_punctuation".into(),
            Pass::DecodeMarkupEntities => "decode_markup_entities".into(),
            Pass::StripEmojis => "strip_emojis".into(),
            Pass::Verbalize(class) => class.name().to_ascii_lowercase(),
        }
    }
}

impl fmt::Display for Pass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Pass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_lowercase().replace('-', "_");
        Pass::all().find(|p| p.name() == wanted).ok_or_else(|| Error::UnknownPass(s.to_owned()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineConfig {
    pub mode: Mode,
    pub enabled_passes: BTreeSet<Pass>,
    pub selection_policy: SelectionPolicy,
    /// Template index per class, taking precedence over the policy.
    pub class_overrides: BTreeMap<SemioticClass, usize>,
    /// Calendar for dates whose year could be either Hijri calendar.
    pub calendar_default: Calendar,
    pub verb_split_threshold: usize,
    pub url_words: UrlWords,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            mode: Mode::General,
            enabled_passes: Pass::all().collect(),
            selection_policy: SelectionPolicy::default(),
            class_overrides: BTreeMap::new(),
            calendar_default: Calendar::SolarHijri,
            verb_split_threshold: DEFAULT_VERB_SPLIT_THRESHOLD,
            url_words: UrlWords::Latin,
        }
    }
}

fn parse_number<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value.trim().parse().map_err(|_| Error::Config(format!("{key}: expected a number, got {value:?}")))
}

impl PipelineConfig {
    pub fn speech() -> Self {
        Self { mode: Mode::Speech, ..Self::default() }
    }

    pub fn is_enabled(&self, pass: Pass) -> bool {
        self.enabled_passes.contains(&pass)
    }

    pub fn disable(&mut self, pass: Pass) {
        self.enabled_passes.remove(&pass);
    }

    /// Applies one `key=value` setting. Keys mirror the command-line flags:
    /// `mode`, `seed`, `template-index`, `template-index.<class>`,
    /// `disable`, `enable`, `calendar`, `verb-split-threshold`, `url-words`.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let key = key.trim().to_ascii_lowercase().replace('_', "-");
        let value = value.trim();
        if let Some(class) = key.strip_prefix("template-index.") {
            let class: SemioticClass = class.parse()?;
            self.class_overrides.insert(class, parse_number(&key, value)?);
            return Ok(());
        }
        match key.as_str() {
            "mode" => self.mode = value.parse()?,
            "seed" => self.selection_policy = SelectionPolicy::SeededRandom(parse_number(&key, value)?),
            "template-index" => self.selection_policy = SelectionPolicy::Fixed(parse_number(&key, value)?),
            "disable" | "enable" => {
                for name in value.split(',').map(str::trim).filter(|n| !n.is_empty()) {
                    let pass: Pass = name.parse()?;
                    if key == "disable" {
                        self.enabled_passes.remove(&pass);
                    } else {
                        self.enabled_passes.insert(pass);
                    }
                }
            }
            "calendar" => self.calendar_default = value.parse()?,
            "verb-split-threshold" => self.verb_split_threshold = parse_number(&key, value)?,
            "url-words" => {
                self.url_words = match value.to_ascii_lowercase().as_str() {
                    "latin" => UrlWords::Latin,
                    "persian" => UrlWords::Persian,
                    other => return Err(Error::Config(format!("url-words: unknown word set {other:?}"))),
                }
            }
            _ => return Err(Error::Config(format!("unknown setting {key:?}"))),
        }
        Ok(())
    }

    /// Reads `key=value` lines; blank lines and `#` comments are skipped.
    pub fn apply_file(&mut self, source: &str) -> Result<()> {
        for (n, line) in source.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) =
                line.split_once('=').ok_or_else(|| Error::Config(format!("line {}: expected key=value", n + 1)))?;
            self.set(key, value).map_err(|e| Error::Config(format!("line {}: {e}", n + 1)))?;
        }
        Ok(())
    }

    /// Checks that template indices exist for every class they can reach
    /// and that speech mode keeps the general passes.
    pub fn validate(&self, res: &Resources) -> Result<()> {
        if self.mode == Mode::Speech {
            if let Some(p) = Pass::GENERAL.iter().find(|p| !self.is_enabled(**p)) {
                return Err(Error::Config(format!("speech mode needs the general pass {p}")));
            }
        }
        if let SelectionPolicy::Fixed(index) = self.selection_policy {
            let count = SemioticClass::ALL.iter().filter_map(|c| min_variant_count(*c, res)).min().unwrap_or(1);
            if index >= count {
                return Err(Error::Config(format!("template index {index} out of range: every class offers at least {count}")));
            }
        }
        for (&class, &index) in &self.class_overrides {
            let count = min_variant_count(class, res)
                .ok_or_else(|| Error::Config(format!("class {class} has a single rendering")))?;
            if index >= count {
                return Err(Error::TemplateIndex { class, index, count });
            }
        }
        if self.verb_split_threshold == 0 {
            return Err(Error::Config("verb-split-threshold must be positive".into()));
        }
        Ok(())
    }
}

/// A validated configuration bound to a resource set.
#[derive(Debug, Clone)]
pub struct Pipeline<'r> {
    res: &'r Resources,
    config: PipelineConfig,
}

impl<'r> Pipeline<'r> {
    pub fn new(res: &'r Resources, config: PipelineConfig) -> Result<Self> {
        config.validate(res)?;
        Ok(Self { res, config })
    }

    pub fn config(&self) -> &PipelineConfig {
        &self.config
    }

    pub fn resources(&self) -> &'r Resources {
        self.res
    }

    fn verbalizer(&self) -> Verbalizer<'r> {
        Verbalizer::new(self.res).with_url_words(self.config.url_words).with_spelled_url_digits(true)
    }

    /// Selection state for one unit of work; `stream` keeps seeded choices
    /// independent between lines.
    pub fn selector(&self, stream: u64) -> Selector {
        Selector::with_stream(self.config.selection_policy.clone(), stream).with_overrides(self.config.class_overrides.clone())
    }

    fn general_round(&self, text: &str) -> String {
        let cs = Charset::new(self.res);
        let mut s = text.to_owned();
        for pass in Pass::GENERAL {
            if !self.config.is_enabled(pass) {
                continue;
            }
            s = match pass {
                Pass::FoldCharacters => cs.fold_characters(&s),
                Pass::FoldDigits => cs.fold_digits(&s),
                Pass::FoldPunctuation => cs.fold_punctuation(&s),
                Pass::DecodeMarkupEntities => cs.decode_markup_entities(&s),
                Pass::StripEmojis => cs.strip_emojis(&s),
                Pass::Verbalize(_) => unreachable!(),
            };
        }
        s
    }

    /// The enabled general passes, repeated while decoding keeps exposing
    /// new foldable characters.
    pub fn normalize_general(&self, text: &str) -> String {
        let mut current = self.general_round(text);
        for _ in 1..GENERAL_ROUNDS {
            let next = self.general_round(&current);
            if next == current {
                break;
            }
            current = next;
        }
        current
    }

    pub fn scan(&self, text: &str) -> Vec<SemioticSpan> {
        Scanner::new(self.res).with_calendar_default(self.config.calendar_default).scan(text)
    }

    fn spans_to_verbalize(&self, text: &str) -> Vec<SemioticSpan> {
        self.scan(text).into_iter().filter(|s| self.config.is_enabled(Pass::Verbalize(s.class))).collect()
    }

    /// Speaks every digit and symbol of `raw`; used when a span cannot be
    /// verbalized by its class.
    fn fallback(&self, raw: &str) -> String {
        let mut words: Vec<String> = Vec::new();
        let mut plain = String::new();
        for c in raw.chars() {
            let s = c.to_string();
            let named = digit_value(c).map(|d| DIGIT_WORDS[usize::from(d)]).or_else(|| {
                [&self.res.symbols, &self.res.currencies, &self.res.math_symbols].into_iter().find_map(|t| t.get(&s))
            });
            match named {
                Some(w) => {
                    if !plain.is_empty() {
                        words.push(std::mem::take(&mut plain));
                    }
                    words.push(w.to_owned());
                }
                None if c.is_whitespace() => {
                    if !plain.is_empty() {
                        words.push(std::mem::take(&mut plain));
                    }
                }
                None => plain.push(c),
            }
        }
        if !plain.is_empty() {
            words.push(plain);
        }
        words.join(" ")
    }

    fn render_or_fallback(&self, span: &SemioticSpan, selector: &mut Selector) -> String {
        self.verbalizer().verbalize(span, selector).unwrap_or_else(|_| self.fallback(&span.raw))
    }

    /// Normalizes, then replaces every span with one spoken rendering.
    pub fn normalize_speech(&self, text: &str) -> String {
        self.normalize_speech_with(text, &mut self.selector(0))
    }

    pub fn normalize_speech_with(&self, text: &str, selector: &mut Selector) -> String {
        let mut current = self.normalize_general(text);
        for _ in 0..SPEECH_ROUNDS {
            let spans = self.spans_to_verbalize(&current);
            if spans.is_empty() {
                break;
            }
            let renderings: Vec<String> = spans.iter().map(|s| self.render_or_fallback(s, selector)).collect();
            current = self.normalize_general(&compose(&current, &spans, &renderings));
        }
        current
    }

    /// Every combination of renderings across the spans of `text`, without
    /// duplicates, in a fixed order.
    pub fn enumerate_verbalizations(&self, text: &str) -> Result<Vec<String>> {
        let text = self.normalize_general(text);
        let spans = self.spans_to_verbalize(&text);
        let verbalizer = self.verbalizer();
        let choices: Vec<Vec<String>> = spans
            .iter()
            .map(|s| verbalizer.variants(s).unwrap_or_else(|_| vec![self.fallback(&s.raw)]))
            .collect();
        let count = choices.iter().try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128)).unwrap_or(u128::MAX);
        if count > ENUMERATION_CAP {
            return Err(Error::EnumerationCap { count, cap: ENUMERATION_CAP });
        }
        let mut out: Vec<String> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        let mut odometer = vec![0usize; choices.len()];
        loop {
            let picked: Vec<String> = odometer.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
            let s = compose(&text, &spans, &picked);
            // anything the first round exposed is read with the defaults
            let s = self.normalize_speech_with(&s, &mut Selector::default());
            if seen.insert(s.clone()) {
                out.push(s);
            }
            // the last span varies fastest
            let mut k = odometer.len();
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                odometer[k] += 1;
                if odometer[k] < choices[k].len() {
                    break;
                }
                odometer[k] = 0;
            }
        }
    }

    /// Sentences of `text` with the configured verb-split threshold.
    pub fn split_sentences(&self, text: &str) -> Vec<String> {
        Segmenter::new(self.res).with_threshold(self.config.verb_split_threshold).split(text)
    }
}

fn is_number_class(class: SemioticClass) -> bool {
    matches!(class, SemioticClass::PlainNumber | SemioticClass::Decimal | SemioticClass::LongNumber)
}

/// Pushes `words` with a separating space where it would otherwise touch a
/// letter or digit.
fn push_words(out: &mut String, words: &str, next: Option<char>) {
    if words.is_empty() {
        return;
    }
    if out.chars().next_back().is_some_and(|c| c.is_alphanumeric()) {
        out.push(' ');
    }
    out.push_str(words);
    if next.is_some_and(|c| c.is_alphanumeric()) {
        out.push(' ');
    }
}

/// Replaces each span of `text` with its rendering. A currency symbol
/// written before its amount is spoken after it, and a time rendering that
/// starts with "ساعت" drops it when the text already says it.
fn compose(text: &str, spans: &[SemioticSpan], renderings: &[String]) -> String {
    const HOUR_WORD: &str = "ساعت";
    let mut out = String::with_capacity(text.len() * 2);
    let mut cursor = 0;
    let mut i = 0;
    while i < spans.len() {
        let span = &spans[i];
        out.push_str(&text[cursor..span.bytes.start]);
        let swapped = span.class == SemioticClass::Currency
            && spans.get(i + 1).is_some_and(|n| {
                is_number_class(n.class) && text[span.bytes.end..n.bytes.start].trim().is_empty()
            });
        if swapped {
            let number = &spans[i + 1];
            let spoken = format!("{} {}", renderings[i + 1], renderings[i]);
            push_words(&mut out, &spoken, text[number.bytes.end..].chars().next());
            cursor = number.bytes.end;
            i += 2;
            continue;
        }
        let mut spoken = renderings[i].as_str();
        if span.class == SemioticClass::Time {
            let said = out.trim_end().strip_suffix(HOUR_WORD).is_some_and(|before| {
                !before.chars().next_back().is_some_and(|c| c.is_alphanumeric() || c == '\u{200C}')
            });
            if said {
                spoken = spoken.strip_prefix(HOUR_WORD).map_or(spoken, str::trim_start);
            }
        }
        push_words(&mut out, spoken, text[span.bytes.end..].chars().next());
        cursor = span.bytes.end;
        i += 1;
    }
    out.push_str(&text[cursor..]);
    out
}

fn bundled(config: &PipelineConfig) -> Result<Pipeline<'static>> {
    Pipeline::new(Resources::bundled(), config.clone())
}

/// Runs the general passes enabled in `config`. An invalid configuration
/// leaves the text unchanged.
pub fn normalize_general(text: &str, config: &PipelineConfig) -> String {
    match bundled(config) {
        Ok(p) => p.normalize_general(text),
        Err(_) => text.to_owned(),
    }
}

/// The general passes followed by verbalization of every enabled class. An
/// invalid configuration falls back to the default one.
pub fn normalize_speech(text: &str, config: &PipelineConfig) -> String {
    let pipeline = bundled(config).unwrap_or_else(|_| bundled(&PipelineConfig::speech()).expect("default config is valid"));
    pipeline.normalize_speech(text)
}

pub fn enumerate_verbalizations(text: &str, config: &PipelineConfig) -> Result<Vec<String>> {
    bundled(config)?.enumerate_verbalizations(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn speech(text: &str) -> String {
        normalize_speech(text, &PipelineConfig::speech())
    }

    #[test]
    fn general_examples() {
        let c = PipelineConfig::default();
        assert_eq!(normalize_general("عدد ⑥ ٪😀", &c), "عدد ۶ %");
        assert_eq!(normalize_general("", &c), "");
        assert_eq!(normalize_general("&#1610;", &c), "ی");
        let mut off = c.clone();
        off.disable(Pass::FoldDigits);
        assert_eq!(normalize_general("6", &off), "6");
    }

    #[test]
    fn speech_examples() {
        assert_eq!(speech("ساعت 8:00"), "ساعت هشت");
        assert_eq!(speech("قیمت 25$"), "قیمت بیست و پنج دلار");
        assert_eq!(speech("قیمت $25"), "قیمت بیست و پنج دلار");
        assert_eq!(speech(""), "");
        assert_eq!(speech("۵۰٪ تخفیف"), "پنجاه درصد تخفیف");
        assert_eq!(speech("ساعت ۱۱:۳۵ است"), "ساعت یازده و سی و پنج دقیقه است");
    }

    #[test]
    fn speech_urls_have_no_digits() {
        let s = speech("http://wpc.be1e.edgecastcdn.net/news/20ak9qy4prra.html");
        assert_eq!(s, "http do noghte slash slash wpc dot be یک e dot edgecastcdn dot net");
    }

    #[test]
    fn disabled_classes_stay_raw() {
        let mut c = PipelineConfig::speech();
        c.disable(Pass::Verbalize(SemioticClass::Symbol));
        assert_eq!(normalize_speech("۵۰%", &c), "پنجاه%");
    }

    #[test]
    fn enumeration() {
        let c = PipelineConfig::speech();
        let all = enumerate_verbalizations("11:35", &c).unwrap();
        assert!(all.contains(&"یازده و سی و پنج".to_owned()));
        assert!(all.contains(&"یازده و سی و پنج دقیقه".to_owned()));
        assert_eq!(enumerate_verbalizations("سلام", &c).unwrap(), ["سلام"]);
        let dates = enumerate_verbalizations("1400-07-25", &c).unwrap();
        assert!(dates.len() >= 4);
        let many = "6104337852441441 ".repeat(3);
        assert!(matches!(enumerate_verbalizations(&many, &c), Err(Error::EnumerationCap { count: 50653, .. })));
    }

    #[test]
    fn config_settings() {
        let mut c = PipelineConfig::default();
        c.apply_file("# comment\nmode = speech\nseed=7\ndisable=symbol, url\ntemplate-index.date=3\ncalendar=lunar\n")
            .unwrap();
        assert_eq!(c.mode, Mode::Speech);
        assert_eq!(c.selection_policy, SelectionPolicy::SeededRandom(7));
        assert!(!c.is_enabled(Pass::Verbalize(SemioticClass::Url)));
        assert_eq!(c.class_overrides[&SemioticClass::Date], 3);
        assert_eq!(c.calendar_default, Calendar::LunarHijri);
        assert!(c.set("bogus", "1").is_err());
        assert!(matches!(c.set("disable", "nope"), Err(Error::UnknownPass(_))));
        assert!(c.validate(Resources::bundled()).is_ok());
        c.set("template-index", "3").unwrap();
        assert!(c.validate(Resources::bundled()).is_err());
        c.set("template-index", "2").unwrap();
        c.set("template-index.time", "9").unwrap();
        assert!(matches!(c.validate(Resources::bundled()), Err(Error::TemplateIndex { .. })));
        let mut s = PipelineConfig::speech();
        s.disable(Pass::StripEmojis);
        assert!(s.validate(Resources::bundled()).is_err());
    }

    #[test]
    fn pass_names_round_trip() {
        for p in Pass::all() {
            assert_eq!(p.name().parse::<Pass>().unwrap(), p);
        }
        assert_eq!(Pass::all().count(), 21);
    }
}
