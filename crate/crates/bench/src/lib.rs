//! Reproducible input text for the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LINES: &[&str] = &[
    "در تاریخ {date} ساعت {time} جلسه‌ای با حضور {n} نفر برگزار شد.",
    "قیمت هر کیلو برنج به {n}$ و قیمت طلا به {dec} میلیون تومان رسید!",
    "برای اطلاعات بیشتر با شماره {mobile} تماس بگیرید یا به www.example.com سر بزنید.",
    "نرخ تورم {n}% اعلام شد و کارشناسان ر.ک گزارش قبلی را توصیه کردند.",
    "او مدرک Ph.D خود را در سال {year} از دانشگاه تهران گرفت 😀",
    "علي گفت: «كتاب را &amp; دفتر را بياور» و ⑥ بار تکرار کرد.",
    "دمای هوا {dec} درجه و سرعت باد {n} کیلومتر بر ساعت بود.",
    "کتابخانه ملی میلیون‌ها جلد کتاب دارد و هر روز پژوهشگران زیادی از آن استفاده می‌کنند.",
];

/// Mixed Persian prose with dates, times, prices, phone numbers and markup,
/// one sentence per line, at least `bytes` long. Equal seeds give equal text.
pub fn corpus(bytes: usize, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::with_capacity(bytes + 256);
    while out.len() < bytes {
        let line = LINES[rng.gen_range(0..LINES.len())]
            .replace("{date}", &format!("{}/{}/{}", rng.gen_range(1350..1410), rng.gen_range(1..13), rng.gen_range(1..30)))
            .replace("{time}", &format!("{}:{:02}", rng.gen_range(0..24), rng.gen_range(0..60)))
            .replace("{n}", &rng.gen_range(0..100_000).to_string())
            .replace("{dec}", &format!("{}.{}", rng.gen_range(0..100), rng.gen_range(0..100)))
            .replace("{mobile}", &format!("09{:09}", rng.gen_range(100_000_000u64..400_000_000)))
            .replace("{year}", &rng.gen_range(1300..1400).to_string());
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// `corpus` with its lines joined into paragraphs of `per_paragraph` sentences.
pub fn paragraphs(bytes: usize, seed: u64, per_paragraph: usize) -> Vec<String> {
    let text = corpus(bytes, seed);
    let lines: Vec<&str> = text.lines().collect();
    lines.chunks(per_paragraph.max(1)).map(|c| c.join(" ")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_reproducible() {
        let a = corpus(10_000, 3);
        assert!(a.len() >= 10_000);
        assert_eq!(a, corpus(10_000, 3));
        assert_ne!(a, corpus(10_000, 4));
        assert_eq!(paragraphs(5_000, 1, 4).join(" "), corpus(5_000, 1).lines().collect::<Vec<_>>().join(" "));
    }
}
