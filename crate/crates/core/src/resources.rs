//! The data behind every pass: mapping tables, templates and the verb
//! lexicon. A copy is compiled into the library; [`Resources::from_dir`]
//! loads an edited tree with the same layout instead.

use std::path::Path;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::scanner::SemioticClass;
use crate::segment::VerbLexicon;
use crate::table::{MappingTable, RangeSet};
use crate::template::TemplateSet;

pub const DATE_SLOTS: &[&str] = &["day_ordinal", "day_cardinal", "month_name", "month_cardinal", "year_cardinal"];
pub const TIME_SLOTS: &[&str] = &["hour", "minute", "second"];
pub const DATE_TEMPLATE_COUNT: usize = 10;

macro_rules! bundled {
    ($($ident:ident => $path:literal),* $(,)?) => {
        mod files {
            $(pub const $ident: (&str, &str) = ($path, include_str!(concat!("../resources/", $path)));)*
        }
    };
}

bundled! {
    PERSIAN_LETTERS => "charset/persian_letters.tsv",
    LIGATURES => "charset/ligatures.tsv",
    ARABIC_PRESENTATION => "charset/arabic_presentation.tsv",
    LATIN_LETTERS => "charset/latin_letters.tsv",
    DIGITS => "charset/digits.tsv",
    PUNCTUATION => "charset/punctuation.tsv",
    ENTITIES => "charset/entities.tsv",
    EMOJI_RANGES => "charset/emoji_ranges.txt",
    SYMBOLS => "speech/symbols.tsv",
    CURRENCIES => "speech/currencies.tsv",
    MATH_SYMBOLS => "speech/math_symbols.tsv",
    ABBREVIATIONS_FA => "speech/abbreviations_fa.tsv",
    LATIN_LETTER_NAMES => "speech/latin_letter_names.tsv",
    URL_WORDS_LATIN => "speech/url_words_latin.tsv",
    URL_WORDS_PERSIAN => "speech/url_words_persian.tsv",
    MONTH_NAMES => "speech/month_names.tsv",
    PHONE_PREFIXES => "speech/phone_prefixes.tsv",
    PHONE_CUES => "speech/phone_cues.tsv",
    LUNAR_CUES => "speech/lunar_cues.tsv",
    DATE_TEMPLATES => "templates/date.tpl",
    TIME_TEMPLATES => "templates/time.tpl",
    VERBS => "segment/verbs.tsv",
}

#[derive(Debug, Clone)]
pub struct Resources {
    pub persian_letters: MappingTable,
    pub ligatures: MappingTable,
    pub arabic_presentation: MappingTable,
    pub latin_letters: MappingTable,
    /// Union of the four letter tables, applied by `fold_characters`.
    pub characters: MappingTable,
    pub digits: MappingTable,
    pub punctuation: MappingTable,
    pub entities: MappingTable,
    pub emoji: RangeSet,
    pub symbols: MappingTable,
    pub currencies: MappingTable,
    pub math_symbols: MappingTable,
    pub abbreviations_fa: MappingTable,
    pub latin_letter_names: MappingTable,
    pub url_words_latin: MappingTable,
    pub url_words_persian: MappingTable,
    pub month_names: MappingTable,
    pub phone_prefixes: MappingTable,
    pub phone_cues: MappingTable,
    pub lunar_cues: MappingTable,
    pub date_templates: TemplateSet,
    pub time_templates: TemplateSet,
    pub verbs: VerbLexicon,
}

impl Resources {
    /// The compiled-in copy, parsed once per process.
    pub fn bundled() -> &'static Resources {
        static BUNDLED: OnceLock<Resources> = OnceLock::new();
        BUNDLED.get_or_init(|| {
            Resources::load(|(_, source)| Ok(source.to_owned())).expect("bundled resources are valid")
        })
    }

    /// Loads resources from `dir`, which mirrors the bundled layout
    /// (`charset/`, `speech/`, `templates/`, `segment/`). Files missing from
    /// `dir` fall back to the bundled copy.
    pub fn from_dir(dir: impl AsRef<Path>) -> Result<Resources> {
        let dir = dir.as_ref();
        Resources::load(|(path, source)| {
            let full = dir.join(path);
            match std::fs::read_to_string(&full) {
                Ok(text) => Ok(text),
                Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(source.to_owned()),
                Err(source) => Err(Error::Io { path: full, source }),
            }
        })
    }

    fn load(read: impl Fn((&str, &str)) -> Result<String>) -> Result<Resources> {
        let table = |file: (&str, &str)| MappingTable::parse(file.0, &read(file)?);
        let persian_letters = table(files::PERSIAN_LETTERS)?;
        let ligatures = table(files::LIGATURES)?;
        let arabic_presentation = table(files::ARABIC_PRESENTATION)?;
        let latin_letters = table(files::LATIN_LETTERS)?;
        let characters = MappingTable::merge(
            "characters",
            &[&persian_letters, &ligatures, &arabic_presentation, &latin_letters],
        )?;
        let date_templates = TemplateSet::parse(
            SemioticClass::Date,
            files::DATE_TEMPLATES.0,
            &read(files::DATE_TEMPLATES)?,
            DATE_SLOTS,
        )?;
        if date_templates.len() != DATE_TEMPLATE_COUNT {
            return Err(Error::resource(
                files::DATE_TEMPLATES.0,
                0,
                format!("expected {DATE_TEMPLATE_COUNT} date templates, found {}", date_templates.len()),
            ));
        }
        let time_templates = TemplateSet::parse(
            SemioticClass::Time,
            files::TIME_TEMPLATES.0,
            &read(files::TIME_TEMPLATES)?,
            TIME_SLOTS,
        )?;
        Ok(Resources {
            persian_letters,
            ligatures,
            arabic_presentation,
            latin_letters,
            characters,
            digits: table(files::DIGITS)?,
            punctuation: table(files::PUNCTUATION)?,
            entities: table(files::ENTITIES)?,
            emoji: RangeSet::parse(files::EMOJI_RANGES.0, &read(files::EMOJI_RANGES)?)?,
            symbols: table(files::SYMBOLS)?,
            currencies: table(files::CURRENCIES)?,
            math_symbols: table(files::MATH_SYMBOLS)?,
            abbreviations_fa: table(files::ABBREVIATIONS_FA)?,
            latin_letter_names: table(files::LATIN_LETTER_NAMES)?,
            url_words_latin: table(files::URL_WORDS_LATIN)?,
            url_words_persian: table(files::URL_WORDS_PERSIAN)?,
            month_names: table(files::MONTH_NAMES)?,
            phone_prefixes: table(files::PHONE_PREFIXES)?,
            phone_cues: table(files::PHONE_CUES)?,
            lunar_cues: table(files::LUNAR_CUES)?,
            date_templates,
            time_templates,
            verbs: VerbLexicon::parse(files::VERBS.0, &read(files::VERBS)?)?,
        })
    }
}
