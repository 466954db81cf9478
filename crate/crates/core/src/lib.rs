//! Persian text normalization.
//!
//! Two pipelines are provided. The general one unifies characters, digits,
//! punctuation, markup entities and emoji. The speech one builds on it and
//! rewrites numbers, dates, times, phone numbers, identifiers, symbols,
//! abbreviations, URLs and emails as the words a reader would say.
//!
//! ```
//! use sokhan::{normalize_speech, PipelineConfig};
//!
//! let spoken = normalize_speech("ساعت 8:00", &PipelineConfig::speech());
//! assert_eq!(spoken, "ساعت هشت");
//! ```
//!
//! All tables, templates and the verb lexicon ship with the crate and can be
//! replaced at run time with [`Resources::from_dir`].

pub mod calendar;
pub mod charset;
pub mod checksum;
pub mod error;
pub mod numbers;
pub mod pipeline;
pub mod resources;
pub mod scanner;
pub mod segment;
pub mod table;
pub mod template;
pub mod verbalize;

pub use calendar::{infer_calendar, Calendar, CalendarDate};
pub use charset::{decode_markup_entities, fold_characters, fold_digits, fold_punctuation, strip_emojis, Charset};
pub use checksum::{validate_card, validate_national_id, validate_sheba};
pub use error::{Error, Result};
pub use numbers::{
    cardinal_words, decimal_words, grouped_digit_words, ordinal_words, words_to_number, NumberValue, NumberWords,
};
pub use pipeline::{enumerate_verbalizations, normalize_general, normalize_speech, Mode, Pass, Pipeline, PipelineConfig};
pub use resources::Resources;
pub use scanner::{classify_phone, scan, PhoneKind, Scanner, SemioticClass, SemioticSpan, SpanDetail};
pub use segment::{
    detect_verb_positions, evaluate_segmentation, protect_non_terminal_dots, split_sentences, Segmenter,
    VerbDetector, VerbLexicon,
};
pub use template::{SelectionPolicy, Selector};
pub use verbalize::{
    expand_abbreviation, verbalize_date, verbalize_grouped_id, verbalize_phone, verbalize_symbol, verbalize_time,
    verbalize_url_email, UrlWords, Verbalizer,
};
