use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The three points of the target line over which a Belyi map may branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BelyiValue {
    Infinity,
    Zero,
    One,
}

impl BelyiValue {
    /// Passport order.
    pub const ALL: [BelyiValue; 3] = [BelyiValue::Infinity, BelyiValue::Zero, BelyiValue::One];

    pub fn index(self) -> usize {
        match self {
            BelyiValue::Infinity => 0,
            BelyiValue::Zero => 1,
            BelyiValue::One => 2,
        }
    }
}

impl fmt::Display for BelyiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BelyiValue::Infinity => "∞",
            BelyiValue::Zero => "0",
            BelyiValue::One => "1",
        })
    }
}

/// Ramification indices over ∞, 0 and 1, each fiber sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Passport {
    fibers: [Vec<usize>; 3],
}

fn sorted_desc(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

impl Passport {
    pub fn new(inf: Vec<usize>, zero: Vec<usize>, one: Vec<usize>) -> Self {
        Passport { fibers: [sorted_desc(inf), sorted_desc(zero), sorted_desc(one)] }
    }

    pub fn fiber(&self, v: BelyiValue) -> &[usize] {
        &self.fibers[v.index()]
    }

    pub fn fibers(&self) -> &[Vec<usize>; 3] {
        &self.fibers
    }

    /// Common fiber sum, or `None` when the fibers disagree.
    pub fn degree(&self) -> Option<usize> {
        let d: usize = self.fibers[0].iter().sum();
        self.fibers.iter().all(|f| f.iter().sum::<usize>() == d).then_some(d)
    }

    /// Σ (e − 1) over all three fibers.
    pub fn ramification_total(&self) -> usize {
        self.fibers.iter().flatten().map(|e| e - 1).sum()
    }

    /// Genus forced by Riemann–Hurwitz when the map branches only over {0, 1, ∞}.
    pub fn rh_genus(&self) -> Option<i64> {
        let d = self.degree()? as i64;
        let twice = self.ramification_total() as i64 - 2 * d + 2;
        (twice >= 0 && twice % 2 == 0).then_some(twice / 2)
    }

    /// Each entry repeated `k` times, as for an unramified degree-`k` precomposition.
    pub fn repeated(&self, k: usize) -> Self {
        let rep = |f: &Vec<usize>| f.iter().flat_map(|&e| std::iter::repeat(e).take(k)).collect();
        Passport::new(rep(&self.fibers[0]), rep(&self.fibers[1]), rep(&self.fibers[2]))
    }

    /// Same passport with two fibers exchanged.
    pub fn swapped(&self, a: BelyiValue, b: BelyiValue) -> Self {
        let mut fibers = self.fibers.clone();
        fibers.swap(a.index(), b.index());
        Passport { fibers }
    }
}

fn fmt_fiber(f: &[usize]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < f.len() {
        let e = f[i];
        let k = f[i..].iter().take_while(|&&x| x == e).count();
        parts.push(if k == 1 { e.to_string() } else { format!("{e}^{k}") });
        i += k;
    }
    parts.join(" ")
}

impl fmt::Display for Passport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.fibers.iter().map(|x| fmt_fiber(x)).collect();
        f.write_str(&s.join("/"))
    }
}

fn superscript_digit(c: char) -> Option<char> {
    let i = "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|s| s == c)?;
    char::from_digit(i as u32, 10)
}

fn parse_fiber(s: &str, offset: usize) -> Result<Vec<usize>> {
    let err = |m: String| Error::Parse { offset, message: m };
    let mut out = Vec::new();
    for tok in s.split_whitespace() {
        let normal: String = tok
            .chars()
            .flat_map(|c| match superscript_digit(c) {
                Some(d) => vec!['^', d],
                None => vec![c],
            })
            .collect();
        let mut it = normal.splitn(2, '^');
        let base = it.next().unwrap_or("");
        let exp = it.next().map(|e| e.replace('^', "")).unwrap_or_else(|| "1".into());
        let e: usize = base.parse().map_err(|_| err(format!("bad ramification index {tok:?}")))?;
        let k: usize = exp.parse().map_err(|_| err(format!("bad exponent in {tok:?}")))?;
        if e == 0 || k == 0 {
            return Err(err(format!("zero in passport entry {tok:?}")));
        }
        out.extend(std::iter::repeat(e).take(k));
    }
    if out.is_empty() {
        return Err(err("empty fiber".into()));
    }
    Ok(out)
}

impl FromStr for Passport {
    type Err = Error;

    /// Accepts `"3^2 6/4^3/2^6"`, `"[3² 6/4³/2⁶]"` or `"3 3 6/4 4 4/2 2 2 2 2 2"`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let pieces: Vec<&str> = body.split('/').collect();
        if pieces.len() != 3 {
            return Err(Error::Parse { offset: 0, message: format!("expected three fibers in {s:?}") });
        }
        let mut offset = 0;
        let mut fibers = Vec::new();
        for p in &pieces {
            fibers.push(parse_fiber(p, offset)?);
            offset += p.len() + 1;
        }
        let one = fibers.pop().unwrap();
        let zero = fibers.pop().unwrap();
        let inf = fibers.pop().unwrap();
        Ok(Passport::new(inf, zero, one))
    }
}

/// Canonical string form of a passport written in any accepted notation.
pub fn canonical_passport(s: &str) -> Result<String> {
    Ok(s.parse::<Passport>()?.to_string())
}

impl Serialize for Passport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Passport {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_forms_agree() {
        let a: Passport = "3^2 6/4^3/2^6".parse().unwrap();
        let b: Passport = "[3² 6/4³/2⁶]".parse().unwrap();
        let c: Passport = "6 3 3/4 4 4/2 2 2 2 2 2".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.to_string(), "6 3^2/4^3/2^6");
        assert_eq!(a.degree(), Some(12));
        assert_eq!(a.rh_genus(), Some(1));
    }

    #[test]
    fn genus_zero_examples() {
        let p: Passport = "3^2/2^3/2^3".parse().unwrap();
        assert_eq!(p.rh_genus(), Some(0));
        assert_eq!(p.ramification_total(), 10);
        let bad: Passport = "3/2 1/2".parse().unwrap();
        assert_eq!(bad.degree(), None);
    }

    #[test]
    fn parse_errors() {
        assert!("3/3".parse::<Passport>().is_err());
        assert!("3/x/3".parse::<Passport>().is_err());
        assert!("3/0/3".parse::<Passport>().is_err());
        assert!("3//3".parse::<Passport>().is_err());
    }

    #[test]
    fn repetition_and_swap() {
        let p: Passport = "4/4/2^2".parse().unwrap();
        assert_eq!(p.repeated(3).to_string(), "4^3/4^3/2^6");
        let q: Passport = "3^2 6/3^4/2^4 4".parse().unwrap();
        assert_eq!(q.swapped(BelyiValue::Infinity, BelyiValue::Zero).to_string(), "3^4/6 3^2/4 2^4");
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(f in prop::collection::vec(prop::collection::vec(1usize..8, 1..7), 3)) {
            let p = Passport::new(f[0].clone(), f[1].clone(), f[2].clone());
            let back: Passport = p.to_string().parse().unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
