//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{corpus, inverse_grouped, mobile, prose, text, valid_card, valid_national_id};
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use rand::{Rng, SeedableRng};
use sokhan::numbers::{cardinal_words, digit_value, words_to_number};
use sokhan::segment::parse_gold;
use sokhan::verbalize::compositions;
use sokhan::{
    decode_markup_entities, enumerate_verbalizations, expand_abbreviation, fold_characters, fold_digits,
    fold_punctuation, normalize_speech, split_sentences, strip_emojis, validate_card, validate_national_id,
    verbalize_date, verbalize_url_email, Calendar, CalendarDate, PhoneKind, PipelineConfig, Resources, Segmenter,
    SelectionPolicy, SemioticClass, Verbalizer,
};

const PROPERTY_CASES: u32 = 10_000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
type TextPass = (&'static str, fn(&str) -> String);

fn collapse(s: &str) -> String {
    fold_characters(&s.split_whitespace().collect::<Vec<_>>().join(" "))
}

fn reference_readings() -> Outcome {
    let rows: [(&str, &[&str]); 5] = [
        ("11:35", &["يازده و سی و پنج", "يازده و سی و پنج دقيقه"]),
        (
            "1400-07-25",
            &[
                "بيست و پنج  مهر ماه هزار و چهارصد",
                "بيست و پنجم مهر هزار و چهارصد",
                "بيست و پنج مهر سال هزار و چهارصد",
                "بيست و پنج هفت هزار و چهارصد",
            ],
        ),
        (
            "09397796915",
            &[
                "صفر نهصد و سی و نه هفتاد و هفت نود و شش نهصد و پانزده",
                "صفر نهصد و سی و نه هفتاد و هفت نهصد و شصت و نه پانزده",
                "صفر نهصد و سی و نه هفتصد و هفتاد و نه شصت و نه پانزده",
            ],
        ),
        (
            "0523924984",
            &[
                "صفر  پنج   بيست و سه   نود و دو   چهل و نه   هشتاد و چهار",
                "صفر  پنجاه و دو   سی و نه   دويست و چهل و نه   هشتاد و چهار",
            ],
        ),
        (
            "6104337852441441",
            &["شصت و يک صفر  چهار   سی و سه   هفتاد و هشت   پنجاه و دو چهل و چهار   چهارده   چهل و يک"],
        ),
    ];
    let started = Instant::now();
    let config = PipelineConfig::speech();
    let mut found = 0;
    let mut missing = Vec::new();
    for (input, expected) in rows {
        let produced: Vec<String> =
            enumerate_verbalizations(input, &config).map_err(|e| format!("{input}: {e}"))?.iter().map(|s| collapse(s)).collect();
        for row in expected {
            if produced.contains(&collapse(row)) {
                found += 1;
            } else {
                missing.push(format!("{input} -> {row}"));
            }
        }
    }
    let elapsed = started.elapsed();
    if !missing.is_empty() {
        return Err(format!("missing rows: {missing:?}"));
    }
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{found}/12 rows in {elapsed:.2?}"))
}

fn worked_examples() -> Outcome {
    let date = CalendarDate::new(Calendar::SolarHijri, 1397, 7, 9).map_err(|e| e.to_string())?;
    let checks = [
        (verbalize_date(&date, &SelectionPolicy::Fixed(0)).map_err(|e| e.to_string())?, "نهم مهر سال هزار و سیصد و نود و هفت"),
        (
            verbalize_url_email("http://wpc.be1e.edgecastcdn.net/news/20ak9qy4prra.html"),
            "http do noghte slash slash wpc dot be1e dot edgecastcdn dot net",
        ),
        (expand_abbreviation("ر.ک"), "رجوع کنید"),
        (expand_abbreviation("Ph.D"), "پی\u{200C}اچ\u{200C}دی"),
    ];
    for (got, want) in &checks {
        if got != want {
            return Err(format!("expected {want:?}, got {got:?}"));
        }
    }
    Ok(format!("{} examples", checks.len()))
}

fn number_oracle() -> Outcome {
    let started = Instant::now();
    let round_trip = |n: u64| -> Result<(), String> {
        let words = cardinal_words(n).map_err(|e| format!("{n}: {e}"))?;
        match words_to_number(words.as_str()) {
            Ok(back) if back == n => Ok(()),
            other => Err(format!("{n} -> {:?} -> {other:?}", words.as_str())),
        }
    };
    for n in 0..=99_999 {
        round_trip(n)?;
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        round_trip(rng.gen_range(0..1_000_000_000_000_000))?;
    }
    let elapsed = started.elapsed();
    if elapsed >= Duration::from_secs(10) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("101000 round trips in {elapsed:.2?}"))
}

fn segmentation() -> Outcome {
    let segmenter = Segmenter::new(Resources::bundled());
    let paragraphs = parse_gold(include_str!("../fixtures/segmentation_gold.txt"));
    let sentences: usize = paragraphs.iter().map(Vec::len).sum();
    let accuracy = segmenter.evaluate(&paragraphs);
    let mut report = format!("accuracy {accuracy:.4} on {sentences} sentences");
    if accuracy < 0.85 {
        return Err(report);
    }
    for (name, source) in [
        ("decimal", include_str!("../fixtures/adversarial_decimal.txt")),
        ("abbreviation", include_str!("../fixtures/adversarial_abbrev.txt")),
        ("url", include_str!("../fixtures/adversarial_url.txt")),
    ] {
        let lines: Vec<&str> = source.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')).collect();
        let kept = lines.iter().filter(|l| segmenter.split(l).len() == 1).count();
        report.push_str(&format!(", {name} {kept}/{}", lines.len()));
        if kept != lines.len() {
            return Err(report);
        }
    }
    Ok(report)
}

fn check<S>(name: &str, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S: Strategy,
    S::Value: std::fmt::Debug,
{
    let config = Config { cases: PROPERTY_CASES, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(message()))
    }
}

fn properties() -> Outcome {
    let started = Instant::now();
    let passes: [TextPass; 5] = [
        ("fold_characters", fold_characters),
        ("fold_digits", fold_digits),
        ("fold_punctuation", fold_punctuation),
        ("decode_markup_entities", decode_markup_entities),
        ("strip_emojis", strip_emojis),
    ];
    for (name, pass) in passes {
        check(name, text(), |s| {
            let once = pass(&s);
            ensure(pass(&once) == once, || format!("{s:?}"))
        })?;
    }
    let speech = PipelineConfig::speech();
    check("normalize_speech idempotence", text(), |s| {
        let once = normalize_speech(&s, &speech);
        let twice = normalize_speech(&once, &speech);
        ensure(twice == once, || format!("{s:?}: {once:?} -> {twice:?}"))
    })?;
    let res = Resources::bundled();
    let symbols: Vec<&str> = [&res.symbols, &res.currencies, &res.math_symbols]
        .into_iter()
        .flat_map(|t| t.surfaces())
        .filter(|s| !s.chars().any(char::is_alphanumeric))
        .collect();
    check("speech output purity", text(), |s| {
        let out = normalize_speech(&s, &speech);
        ensure(!out.chars().any(|c| digit_value(c).is_some()), || format!("digit in {out:?}"))?;
        ensure(!symbols.iter().any(|sym| out.contains(sym)), || format!("symbol in {out:?}"))
    })?;
    let v = Verbalizer::new(res);
    check("phone digit conservation", mobile(), |digits| {
        for (i, sizes) in compositions(7).iter().enumerate() {
            let words = v.phone_variant(&digits, PhoneKind::Mobile, i).map_err(|e| TestCaseError::fail(e.to_string()))?;
            let all: Vec<usize> = std::iter::once(4).chain(sizes.iter().copied()).collect();
            ensure(inverse_grouped(&words, &all).as_deref() == Some(digits.as_str()), || words.clone())?;
        }
        Ok(())
    })?;
    check("id digit conservation", (valid_national_id(), valid_card()), |(id, card)| {
        for (raw, class) in [(id, SemioticClass::NationalId), (card, SemioticClass::CardNumber)] {
            for (i, sizes) in compositions(raw.len()).iter().enumerate() {
                let words = v.grouped_id_variant(&raw, class, i).map_err(|e| TestCaseError::fail(e.to_string()))?;
                ensure(inverse_grouped(&words, sizes).as_deref() == Some(raw.as_str()), || words.clone())?;
            }
        }
        Ok(())
    })?;
    check("split character conservation", prose(), |s| {
        let parts = split_sentences(&s, &res.verbs);
        let strip = |t: &str| t.chars().filter(|c| !c.is_whitespace()).collect::<String>();
        ensure(strip(&parts.join(" ")) == strip(&s), || format!("{s:?} -> {parts:?}"))
    })?;
    check("seeded determinism", (text(), proptest::num::u64::ANY), |(s, seed)| {
        let mut c = PipelineConfig::speech();
        c.selection_policy = SelectionPolicy::SeededRandom(seed);
        ensure(normalize_speech(&s, &c) == normalize_speech(&s, &c), || format!("{s:?}"))
    })?;
    Ok(format!("12 properties x {PROPERTY_CASES} cases in {:.1?}", started.elapsed()))
}

fn checksums() -> Outcome {
    let perturbations = |valid: &str| -> Vec<String> {
        (0..valid.len())
            .flat_map(|i| {
                ('0'..='9').filter(move |&d| valid.as_bytes()[i] != d as u8).map(move |d| {
                    let mut s = valid.to_owned();
                    s.replace_range(i..=i, &d.to_string());
                    s
                })
            })
            .collect()
    };
    let id = "0523924984";
    let card = "6104337852441441";
    if !matches!(validate_national_id(id), Ok(true)) || !matches!(validate_card(card), Ok(true)) {
        return Err("a reference value was rejected".into());
    }
    let ids = perturbations(id);
    let cards = perturbations(card);
    if let Some(bad) = ids.iter().find(|p| !matches!(validate_national_id(p), Ok(false))) {
        return Err(format!("accepted national id {bad}"));
    }
    if let Some(bad) = cards.iter().find(|p| !matches!(validate_card(p), Ok(false))) {
        return Err(format!("accepted card {bad}"));
    }
    Ok(format!("rejected {} id and {} card perturbations", ids.len(), cards.len()))
}

fn throughput() -> Outcome {
    let text = corpus(1 << 20, 7);
    let speech = PipelineConfig::speech();
    let started = Instant::now();
    let out: usize = text.lines().map(|l| normalize_speech(l, &speech).len()).sum();
    let elapsed = started.elapsed();
    let report = format!("{} bytes in {elapsed:.2?} ({out} bytes out)", text.len());
    if elapsed < Duration::from_secs(5) {
        Ok(report)
    } else {
        Err(report)
    }
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("reference readings", reference_readings),
        ("worked examples", worked_examples),
        ("number-words oracle", number_oracle),
        ("segmentation accuracy", segmentation),
        ("property suites", properties),
        ("checksum validators", checksums),
        ("throughput", throughput),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
