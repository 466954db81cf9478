//! Calendar tags, month lengths and year-based calendar inference.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Years from here on are read as Gregorian.
pub const GREGORIAN_FROM: u32 = 1700;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Calendar {
    #[default]
    SolarHijri,
    Gregorian,
    LunarHijri,
}

impl Calendar {
    pub fn name(self) -> &'static str {
        match self {
            Calendar::SolarHijri => "solar",
            Calendar::Gregorian => "gregorian",
            Calendar::LunarHijri => "lunar",
        }
    }

    pub fn is_leap_year(self, year: u32) -> bool {
        match self {
            Calendar::Gregorian => (year % 4 == 0 && year % 100 != 0) || year % 400 == 0,
            // 33-year arithmetic cycle
            Calendar::SolarHijri => matches!(year % 33, 1 | 5 | 9 | 13 | 17 | 22 | 26 | 30),
            // 30-year arithmetic cycle
            Calendar::LunarHijri => (11 * year + 14) % 30 < 11,
        }
    }

    pub fn days_in_month(self, year: u32, month: u32) -> Option<u32> {
        if !(1..=12).contains(&month) {
            return None;
        }
        let leap = self.is_leap_year(year);
        Some(match self {
            Calendar::Gregorian => match month {
                2 if leap => 29,
                2 => 28,
                4 | 6 | 9 | 11 => 30,
                _ => 31,
            },
            Calendar::SolarHijri => match month {
                1..=6 => 31,
                7..=11 => 30,
                _ if leap => 30,
                _ => 29,
            },
            Calendar::LunarHijri => match month {
                12 if leap => 30,
                m if m % 2 == 1 => 30,
                _ => 29,
            },
        })
    }
}

impl fmt::Display for Calendar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Calendar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "solar" | "solar-hijri" | "solar_hijri" | "jalali" => Ok(Calendar::SolarHijri),
            "gregorian" => Ok(Calendar::Gregorian),
            "lunar" | "lunar-hijri" | "lunar_hijri" | "hijri" => Ok(Calendar::LunarHijri),
            _ => Err(Error::Config(format!("unknown calendar {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CalendarDate {
    pub calendar: Calendar,
    pub year: u32,
    pub month: u32,
    pub day: u32,
}

impl CalendarDate {
    pub fn new(calendar: Calendar, year: u32, month: u32, day: u32) -> Result<Self> {
        let valid = year > 0
            && calendar.days_in_month(year, month).is_some_and(|len| (1..=len).contains(&day));
        if !valid {
            return Err(Error::InvalidDate { year, month, day });
        }
        Ok(Self { calendar, year, month, day })
    }
}

/// Calendar of a bare year: Gregorian from 1700, otherwise Solar Hijri.
pub fn infer_calendar(year: u32) -> Calendar {
    infer_calendar_with(year, Calendar::SolarHijri, false)
}

/// Calendar of a year with context: below 1700 a lunar cue next to the date
/// forces Lunar Hijri, otherwise `hijri_default` applies.
pub fn infer_calendar_with(year: u32, hijri_default: Calendar, lunar_cue: bool) -> Calendar {
    if year >= GREGORIAN_FROM {
        Calendar::Gregorian
    } else if lunar_cue {
        Calendar::LunarHijri
    } else {
        hijri_default
    }
}
