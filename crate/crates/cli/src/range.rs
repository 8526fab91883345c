//! Inclusive integer ranges written `a..b` or as a single integer.

use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KRange {
    pub start: i64,
    pub end: i64,
}

impl KRange {
    pub fn single(k: i64) -> Self {
        KRange { start: k, end: k }
    }

    pub fn values(&self) -> impl Iterator<Item = i64> {
        self.start..=self.end
    }

    pub fn len(&self) -> usize {
        (self.end - self.start + 1).max(0) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl FromStr for KRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("not an integer: {t:?}"))
        };
        // `-3..-1`: the separator is the first `..`
        match s.find("..") {
            Some(i) => {
                let (start, end) = (num(&s[..i])?, num(s[i + 2..].trim_start_matches('='))?);
                if start > end {
                    return Err(format!("empty range {s:?}"));
                }
                Ok(KRange { start, end })
            }
            None => Ok(KRange::single(num(s)?)),
        }
    }
}

impl fmt::Display for KRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.start == self.end {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..{}", self.start, self.end)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        assert_eq!("3".parse::<KRange>().unwrap(), KRange::single(3));
        assert_eq!(
            "1..5".parse::<KRange>().unwrap(),
            KRange { start: 1, end: 5 }
        );
        assert_eq!(
            "-3..-1".parse::<KRange>().unwrap(),
            KRange { start: -3, end: -1 }
        );
        assert_eq!("1..=2".parse::<KRange>().unwrap().len(), 2);
        assert!("5..1".parse::<KRange>().is_err());
        assert!("a..b".parse::<KRange>().is_err());
    }
}
