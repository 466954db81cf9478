use std::collections::HashMap;

fn normalize(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Paragraphs of a gold file: one sentence per line, a blank line between
/// paragraphs, `#` lines ignored.
pub fn parse_gold(source: &str) -> Vec<Vec<String>> {
    let mut paragraphs = vec![Vec::new()];
    for line in source.lines() {
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if paragraphs.last().is_some_and(|p| !p.is_empty()) {
                paragraphs.push(Vec::new());
            }
        } else if let Some(p) = paragraphs.last_mut() {
            p.push(line.to_owned());
        }
    }
    paragraphs.retain(|p| !p.is_empty());
    paragraphs
}

/// Fraction of `gold` sentences that appear verbatim in `predicted`, after
/// collapsing whitespace. Each predicted sentence can match one gold
/// sentence. An empty gold list scores 1.
pub fn evaluate_segmentation<P: AsRef<str>, G: AsRef<str>>(predicted: &[P], gold: &[G]) -> f64 {
    if gold.is_empty() {
        return 1.0;
    }
    let mut available: HashMap<String, usize> = HashMap::new();
    for p in predicted {
        *available.entry(normalize(p.as_ref())).or_default() += 1;
    }
    let hits = gold
        .iter()
        .filter(|g| match available.get_mut(&normalize(g.as_ref())) {
            Some(n) if *n > 0 => {
                *n -= 1;
                true
            }
            _ => false,
        })
        .count();
    hits as f64 / gold.len() as f64
}
