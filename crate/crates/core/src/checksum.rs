//! Check-digit rules for national IDs, bank cards and Sheba account numbers.

use crate::error::{Error, Result};
use crate::numbers::ascii_digits;

fn fixed_digits(s: &str, len: usize) -> Result<Vec<u32>> {
    let ascii = ascii_digits(s).ok_or_else(|| Error::InvalidDigits(s.to_owned()))?;
    if ascii.len() != len {
        return Err(Error::WrongLength { expected: len, actual: ascii.len() });
    }
    Ok(ascii.bytes().map(|b| u32::from(b - b'0')).collect())
}

/// True when every digit is the same, the usual placeholder pattern.
pub fn is_repeated_digit(digits: &str) -> bool {
    let mut chars = digits.chars();
    match chars.next() {
        Some(first) => chars.all(|c| c == first),
        None => false,
    }
}

/// Mod-11 check of a 10-digit national ID. Placeholder values pass the
/// arithmetic; see [`is_repeated_digit`].
pub fn validate_national_id(digits: &str) -> Result<bool> {
    let d = fixed_digits(digits, 10)?;
    let sum: u32 = d[..9].iter().zip((2..=10).rev()).map(|(x, w)| x * w).sum();
    let r = sum % 11;
    let check = if r < 2 { r } else { 11 - r };
    Ok(d[9] == check)
}

/// Luhn check of a 16-digit card number.
pub fn validate_card(digits: &str) -> Result<bool> {
    let d = fixed_digits(digits, 16)?;
    Ok(luhn(&d))
}

pub(crate) fn luhn(digits: &[u32]) -> bool {
    let sum: u32 = digits
        .iter()
        .rev()
        .enumerate()
        .map(|(i, &x)| {
            if i % 2 == 1 {
                let y = x * 2;
                if y > 9 { y - 9 } else { y }
            } else {
                x
            }
        })
        .sum();
    sum % 10 == 0
}

/// IBAN mod-97 check of an Iranian account number, "IR" plus 24 digits.
pub fn validate_sheba(candidate: &str) -> bool {
    let Some(rest) = candidate.strip_prefix("IR") else {
        return false;
    };
    let Some(digits) = ascii_digits(rest) else {
        return false;
    };
    if digits.len() != 24 {
        return false;
    }
    // Move the country code and check digits to the end; I=18, R=27.
    let rearranged = format!("{}1827{}", &digits[2..], &digits[..2]);
    rearranged.bytes().fold(0u32, |acc, b| (acc * 10 + u32::from(b - b'0')) % 97) == 1
}
