use num_bigint::BigUint;
use proptest::prelude::*;
use sokhan::{validate_card, validate_national_id, validate_sheba};

fn mod11_oracle(s: &str) -> bool {
    let d: Vec<u32> = s.bytes().map(|b| u32::from(b - b'0')).collect();
    let mut sum = 0;
    for (i, x) in d[..9].iter().enumerate() {
        sum += x * (10 - i as u32);
    }
    let r = sum % 11;
    d[9] == if r < 2 { r } else { 11 - r }
}

fn luhn_oracle(s: &str) -> bool {
    let total: u32 = s
        .bytes()
        .rev()
        .enumerate()
        .map(|(i, b)| {
            let v = u32::from(b - b'0') * if i % 2 == 1 { 2 } else { 1 };
            v / 10 + v % 10
        })
        .sum();
    total % 10 == 0
}

/// Moves "IR" and the check digits to the end, spells I=18 and R=27, and
/// reduces the resulting integer mod 97.
fn iban_remainder(bban: &str, check: &str) -> u32 {
    let n: BigUint = format!("{bban}1827{check}").parse().unwrap();
    (n % 97u32).try_into().unwrap()
}

fn sheba_with_check(bban: &str) -> String {
    let check = 98 - iban_remainder(bban, "00");
    format!("IR{check:02}{bban}")
}

fn digits(n: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec(0u8..10, n).prop_map(|v| v.into_iter().map(|d| char::from(b'0' + d)).collect())
}

#[test]
fn published_sheba_example() {
    assert_eq!(iban_remainder("2960000000100324200001", "06"), 1);
    assert!(validate_sheba("IR062960000000100324200001"));
    assert_eq!(sheba_with_check("2960000000100324200001"), "IR062960000000100324200001");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn national_id_agrees_with_oracle(s in digits(10)) {
        prop_assert_eq!(validate_national_id(&s).unwrap(), mod11_oracle(&s));
    }

    #[test]
    fn card_agrees_with_oracle(s in digits(16)) {
        prop_assert_eq!(validate_card(&s).unwrap(), luhn_oracle(&s));
    }

    #[test]
    fn sheba_agrees_with_bigint_oracle(bban in digits(22), check in digits(2)) {
        let candidate = format!("IR{check}{bban}");
        prop_assert_eq!(validate_sheba(&candidate), iban_remainder(&bban, &check) == 1);
        prop_assert!(validate_sheba(&sheba_with_check(&bban)));
    }

    #[test]
    fn sheba_rejects_single_substitutions(bban in digits(22), at in 0usize..24, delta in 1u8..10) {
        let valid = sheba_with_check(&bban);
        let mut bytes = valid.into_bytes();
        let i = at + 2;
        bytes[i] = b'0' + (bytes[i] - b'0' + delta) % 10;
        prop_assert!(!validate_sheba(&String::from_utf8(bytes).unwrap()));
    }
}

#[test]
fn wrong_lengths_are_errors() {
    assert!(validate_national_id("123").is_err());
    assert!(validate_card("61043378524414411").is_err());
    assert!(!validate_sheba("IR06296000000010032420000"));
    assert!(!validate_sheba("DE062960000000100324200001"));
}
