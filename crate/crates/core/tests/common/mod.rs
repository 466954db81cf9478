//! Input generators and independent oracles shared by the property suites.
#![allow(dead_code)]

use proptest::prelude::*;
use sokhan::numbers::words_to_number;

const WORDS: &[&str] = &[
    "سلام", "کتاب", "رفتم", "می‌روم", "ساعت", "تاریخ", "شماره", "تلفن", "قیمت", "است", "و", "که", "در", "به",
    "علي", "كتاب", "ﻻ", "ﷺ", "مـــن", "hello", "world", "NASA", "Ph.D", "ر.ک", "ه.ش", "tel", "USD", "café",
];

const MARKS: &[&str] = &[
    ".", "،", "؛", "؟", "!", "?", "...", "…", "«", "»", "(", ")", "%", "٪", "$", "€", "ریال", "+", "=", "×", "÷", "<",
    ">", "½", "¾", "°C", "&", "@", "/", "~", "*", "#", "§", "©", "π", "√", "-", ":", "'", "\"",
];

const DECORATIONS: &[&str] = &[
    "😀", "👍🏽", "❤\u{FE0F}", "👨\u{200D}👩\u{200D}👧", "&amp;", "&lt;", "&gt;", "&quot;", "&#1587;", "&#x644;",
    "&nbsp;", "&amp;lt;", "⑥", "❻", "⑳", "１２", "Ⓘ", "\u{200C}", "\t",
];

const SCRIPTS: [[char; 10]; 3] = [
    ['0', '1', '2', '3', '4', '5', '6', '7', '8', '9'],
    ['۰', '۱', '۲', '۳', '۴', '۵', '۶', '۷', '۸', '۹'],
    ['٠', '١', '٢', '٣', '٤', '٥', '٦', '٧', '٨', '٩'],
];

pub fn in_script(ascii: &str, script: usize) -> String {
    ascii
        .chars()
        .map(|c| c.to_digit(10).map_or(c, |d| SCRIPTS[script % 3][d as usize]))
        .collect()
}

/// Check digit for nine national-ID digits.
pub fn national_id_check(body: &str) -> u32 {
    let sum: u32 = body.chars().zip((2..=10).rev()).map(|(c, w)| c.to_digit(10).unwrap() * w).sum();
    let r = sum % 11;
    if r < 2 {
        r
    } else {
        11 - r
    }
}

/// Luhn check digit for a digit string.
pub fn luhn_check(body: &str) -> u32 {
    let sum: u32 = body
        .chars()
        .rev()
        .enumerate()
        .map(|(i, c)| {
            let d = c.to_digit(10).unwrap();
            if i % 2 == 0 {
                let x = d * 2;
                if x > 9 {
                    x - 9
                } else {
                    x
                }
            } else {
                d
            }
        })
        .sum();
    (10 - sum % 10) % 10
}

pub fn valid_national_id() -> impl Strategy<Value = String> {
    "[0-9]{9}"
        .prop_filter("repeated digit", |b| !b.chars().all(|c| c == b.chars().next().unwrap()))
        .prop_map(|b| format!("{b}{}", national_id_check(&b)))
}

pub fn valid_card() -> impl Strategy<Value = String> {
    "[1-9][0-9]{14}".prop_map(|b| format!("{b}{}", luhn_check(&b)))
}

pub fn mobile() -> impl Strategy<Value = String> {
    "09[0-3][0-9]{8}"
}

fn structured() -> impl Strategy<Value = String> {
    prop_oneof![
        (0u64..10_000_000, 0usize..3).prop_map(|(n, s)| in_script(&n.to_string(), s)),
        (0u64..1_000_000_000_000_000).prop_map(|n| n.to_string()),
        (0u32..10_000, 0u32..1000, 0usize..3).prop_map(|(a, b, s)| in_script(&format!("{a}.{b}"), s)),
        (0u32..24, 0u32..60, 0usize..3).prop_map(|(h, m, s)| in_script(&format!("{h}:{m:02}"), s)),
        (1300u32..1420, 1u32..13, 1u32..30, 0usize..3).prop_map(|(y, m, d, s)| in_script(&format!("{y}/{m}/{d}"), s)),
        (1900u32..2030, 1u32..13, 1u32..29).prop_map(|(y, m, d)| format!("{y}-{m:02}-{d:02}")),
        mobile(),
        valid_national_id(),
        valid_card(),
        "[0-9]{16,22}",
        (1u32..10, 2u32..10).prop_map(|(a, b)| format!("{a}/{b}")),
        "[a-z]{2,6}\\.(com|ir|org)",
        "https?://[a-z]{2,5}\\.[a-z]{2,6}\\.(com|net)(/[a-z0-9]{1,12})?",
        "[a-z]{1,5}[0-9]?@[a-z]{2,5}\\.ir",
        (0u32..1000).prop_map(|n| format!("{n}$")),
        (0u32..100).prop_map(|n| format!("{n}%")),
        (1u32..40).prop_map(|n| format!("{n}ام")),
    ]
}

pub fn token() -> impl Strategy<Value = String> {
    prop_oneof![
        4 => prop::sample::select(WORDS).prop_map(str::to_owned),
        2 => prop::sample::select(MARKS).prop_map(str::to_owned),
        2 => prop::sample::select(DECORATIONS).prop_map(str::to_owned),
        3 => structured(),
        1 => "\\PC{1,4}",
    ]
}

fn separator() -> impl Strategy<Value = &'static str> {
    prop::sample::select(&[" ", " ", " ", "", "  ", "\n"][..])
}

/// Mixed Persian text with numbers, symbols, URLs, entities and emoji.
pub fn text() -> impl Strategy<Value = String> {
    prop::collection::vec((token(), separator()), 0..12)
        .prop_map(|parts| parts.into_iter().map(|(t, s)| format!("{t}{s}")).collect())
}

/// Text made of plain words and sentence marks only.
pub fn prose() -> impl Strategy<Value = String> {
    prop::collection::vec(
        (
            prop_oneof![
                4 => prop::sample::select(WORDS).prop_map(str::to_owned),
                1 => structured(),
                1 => prop::sample::select(&[".", "!", "؟", "...", "»", "«"][..]).prop_map(str::to_owned),
            ],
            separator(),
        ),
        0..40,
    )
    .prop_map(|parts| parts.into_iter().map(|(t, s)| format!("{t}{s}")).collect())
}

/// Digits spoken by a grouped reading, recovered group by group. A group of
/// `size` digits is read as its leading zeros ("صفر" each) followed by the
/// value of the rest.
pub fn inverse_grouped(words: &str, sizes: &[usize]) -> Option<String> {
    let tokens: Vec<&str> = words.split(' ').collect();
    let mut chunks: Vec<String> = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let mut chunk = tokens[i].to_owned();
        if chunk == "صفر" {
            chunks.push(chunk);
            i += 1;
            continue;
        }
        while tokens.get(i + 1) == Some(&"و") {
            chunk = format!("{chunk} و {}", tokens.get(i + 2)?);
            i += 2;
        }
        chunks.push(chunk);
        i += 1;
    }
    let mut digits = String::new();
    let mut next = chunks.into_iter();
    let mut pending = next.next();
    for &size in sizes {
        let mut zeros = 0;
        while zeros < size && pending.as_deref() == Some("صفر") {
            zeros += 1;
            pending = next.next();
        }
        digits.push_str(&"0".repeat(zeros));
        if zeros < size {
            let n = words_to_number(&pending?).ok()?;
            let s = n.to_string();
            if s.len() != size - zeros || n == 0 {
                return None;
            }
            digits.push_str(&s);
            pending = next.next();
        }
    }
    pending.is_none().then_some(digits)
}

const CORPUS_LINES: &[&str] = &[
    "در تاریخ {date} ساعت {time} جلسه‌ای با حضور {n} نفر برگزار شد.",
    "قیمت هر کیلو برنج به {n}$ و قیمت طلا به {dec} میلیون تومان رسید!",
    "برای اطلاعات بیشتر با شماره {mobile} تماس بگیرید یا به www.example.com سر بزنید.",
    "کد ملی {id} و شماره کارت {card} در سامانه ثبت شد.",
    "نرخ تورم {pct}% اعلام شد و کارشناسان ر.ک گزارش قبلی را توصیه کردند.",
    "او مدرک Ph.D خود را در سال {year} از دانشگاه تهران گرفت 😀",
    "علي گفت: «كتاب را &amp; دفتر را بياور» و ⑥ بار تکرار کرد.",
    "ایمیل info{n}@example.ir برای پرسش‌ها در نظر گرفته شده است.",
    "دمای هوا {dec} درجه و سرعت باد {n} کیلومتر بر ساعت بود.",
    "کتابخانه ملی میلیون‌ها جلد کتاب دارد و هر روز پژوهشگران زیادی از آن استفاده می‌کنند.",
];

/// A reproducible corpus of at least `bytes` bytes of mixed Persian text.
pub fn corpus(bytes: usize, seed: u64) -> String {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::with_capacity(bytes + 512);
    while out.len() < bytes {
        let template = CORPUS_LINES[rng.gen_range(0..CORPUS_LINES.len())];
        let id = {
            let body: String = (0..9).map(|_| char::from(b'0' + rng.gen_range(0..10u8))).collect();
            format!("{body}{}", national_id_check(&body))
        };
        let card = {
            let body: String = (0..15).map(|i| char::from(b'0' + rng.gen_range(u8::from(i == 0)..10u8))).collect();
            format!("{body}{}", luhn_check(&body))
        };
        let line = template
            .replace("{date}", &format!("{}/{}/{}", rng.gen_range(1350..1410), rng.gen_range(1..13), rng.gen_range(1..30)))
            .replace("{time}", &format!("{}:{:02}", rng.gen_range(0..24), rng.gen_range(0..60)))
            .replace("{n}", &rng.gen_range(0..100_000).to_string())
            .replace("{dec}", &format!("{}.{}", rng.gen_range(0..100), rng.gen_range(0..100)))
            .replace("{mobile}", &format!("09{:09}", rng.gen_range(100_000_000u64..400_000_000)))
            .replace("{id}", &id)
            .replace("{card}", &card)
            .replace("{pct}", &rng.gen_range(0..100).to_string())
            .replace("{year}", &rng.gen_range(1300..1400).to_string());
        out.push_str(&in_script(&line, rng.gen_range(0..3)));
        out.push('\n');
    }
    out
}
