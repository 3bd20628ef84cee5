use core::fmt;
use core::str::FromStr;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{CommutatorConvention, GroupElement, GroupError, MatrixGroup};

const MAX_FACTORS: usize = 1 << 20;

/// A group word as a flat sequence of `(label, exponent)` factors.
///
/// Text syntax: labels, `*` for products, `^k` / `^-1` for powers,
/// `[g, h]` for commutators, parentheses for grouping, `1` for the empty
/// word, and an optional `lhs = rhs` (read as `lhs * rhs^-1`). Commutators
/// are expanded when parsing, by default as `g⁻¹h⁻¹gh`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationWord {
    factors: Vec<(String, i64)>,
}

impl RelationWord {
    pub fn from_factors(factors: Vec<(String, i64)>) -> Self {
        let mut w = RelationWord { factors: Vec::new() };
        for (l, e) in factors {
            w.push(l, e);
        }
        w
    }

    pub fn factors(&self) -> &[(String, i64)] {
        &self.factors
    }

    pub fn parse(text: &str) -> Result<Self, GroupError> {
        RelationWord::parse_with(text, CommutatorConvention::default())
    }

    pub fn parse_with(text: &str, convention: CommutatorConvention) -> Result<Self, GroupError> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
            convention,
        };
        let lhs = p.word()?;
        p.skip_ws();
        let w = if p.eat(b'=') {
            let rhs = p.word()?;
            lhs.concat(&rhs.inverse())?
        } else {
            lhs
        };
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(w)
    }

    fn push(&mut self, label: String, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.factors.last_mut() {
            if last.0 == label {
                last.1 += exp;
                if last.1 == 0 {
                    self.factors.pop();
                }
                return;
            }
        }
        self.factors.push((label, exp));
    }

    fn inverse(&self) -> RelationWord {
        RelationWord {
            factors: self.factors.iter().rev().map(|(l, e)| (l.clone(), -e)).collect(),
        }
    }

    fn concat(&self, other: &RelationWord) -> Result<RelationWord, GroupError> {
        if self.factors.len() + other.factors.len() > MAX_FACTORS {
            return Err(GroupError::Parse {
                offset: 0,
                message: "word too long".to_string(),
            });
        }
        let mut w = self.clone();
        for (l, e) in &other.factors {
            w.push(l.clone(), *e);
        }
        Ok(w)
    }

    fn power(&self, k: i64) -> Result<RelationWord, GroupError> {
        if let [(l, e)] = self.factors.as_slice() {
            let exp = e.checked_mul(k).ok_or(GroupError::Parse {
                offset: 0,
                message: "exponent overflow".to_string(),
            })?;
            return Ok(RelationWord::from_factors(alloc::vec![(l.clone(), exp)]));
        }
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        if base.factors.len().saturating_mul(reps) > MAX_FACTORS {
            return Err(GroupError::Parse {
                offset: 0,
                message: "word too long".to_string(),
            });
        }
        let mut w = RelationWord { factors: Vec::new() };
        for _ in 0..reps {
            w = w.concat(&base)?;
        }
        Ok(w)
    }

    fn commutator(g: &RelationWord, h: &RelationWord, c: CommutatorConvention) -> Result<RelationWord, GroupError> {
        let (gi, hi) = (g.inverse(), h.inverse());
        match c {
            CommutatorConvention::LeftInverse => gi.concat(&hi)?.concat(g)?.concat(h),
            CommutatorConvention::RightInverse => g.concat(h)?.concat(&gi)?.concat(&hi),
        }
    }

    /// The product of the factors in `group`.
    pub fn evaluate(&self, group: &MatrixGroup) -> Result<GroupElement, GroupError> {
        let mut acc = group.identity();
        for (label, e) in &self.factors {
            let g = group
                .generator(label)
                .ok_or_else(|| GroupError::UnknownLabel(label.clone()))?;
            acc = acc.mul(&g.pow(*e));
        }
        Ok(acc)
    }
}

impl FromStr for RelationWord {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RelationWord::parse(s)
    }
}

impl fmt::Display for RelationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (l, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{e}")?;
            }
        }
        Ok(())
    }
}

/// True iff the word evaluates to the identity matrix.
pub fn evaluate_relation(group: &MatrixGroup, word: &RelationWord) -> Result<bool, GroupError> {
    Ok(word.evaluate(group)?.is_identity())
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    convention: CommutatorConvention,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> GroupError {
        GroupError::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), GroupError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&alloc::format!("expected '{}'", c as char)))
        }
    }

    fn word(&mut self) -> Result<RelationWord, GroupError> {
        let mut w = self.term()?;
        while self.eat(b'*') {
            let t = self.term()?;
            w = w.concat(&t)?;
        }
        Ok(w)
    }

    fn term(&mut self) -> Result<RelationWord, GroupError> {
        let mut w = self.atom()?;
        while self.eat(b'^') {
            let k = self.integer()?;
            w = w.power(k)?;
        }
        Ok(w)
    }

    fn integer(&mut self) -> Result<i64, GroupError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        core::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| {
                self.pos = start;
                self.error("expected an integer exponent")
            })
    }

    fn atom(&mut self) -> Result<RelationWord, GroupError> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let g = self.word()?;
                self.expect(b',')?;
                let h = self.word()?;
                self.expect(b']')?;
                RelationWord::commutator(&g, &h, self.convention)
            }
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                Ok(w)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(RelationWord { factors: Vec::new() })
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|&c| c.is_ascii_alphanumeric() || c == b'_' || c == b'\'')
                {
                    self.pos += 1;
                }
                let label = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(RelationWord::from_factors(alloc::vec![(label.to_string(), 1)]))
            }
            _ => Err(self.error("expected a generator, '[', '(' or '1'")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> String {
        RelationWord::parse(s).unwrap().to_string()
    }

    #[test]
    fn parses_and_expands() {
        assert_eq!(w("x^5"), "x^5");
        assert_eq!(w("[x,a]*b"), "x^-1*a^-1*x*a*b");
        assert_eq!(w("[x, a] = b^-1"), "x^-1*a^-1*x*a*b");
        assert_eq!(w("(x*a)^2"), "x*a*x*a");
        assert_eq!(w("(x*a)^-1"), "a^-1*x^-1");
        assert_eq!(w("x*x^-1"), "1");
        assert_eq!(w("1"), "1");
        let alt = RelationWord::parse_with("[x,a]", CommutatorConvention::RightInverse).unwrap();
        assert_eq!(alt.to_string(), "x*a*x^-1*a^-1");
    }

    #[test]
    fn parse_errors_carry_offsets() {
        for bad in ["", "x^", "[x,a", "x**a", "x a", "(x", "x^y"] {
            assert!(
                matches!(RelationWord::parse(bad), Err(GroupError::Parse { .. })),
                "{bad}"
            );
        }
        match RelationWord::parse("x * ?") {
            Err(GroupError::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn huge_powers_are_rejected() {
        assert!(RelationWord::parse("(x*a)^100000000").is_err());
        assert_eq!(w("x^100000000"), "x^100000000");
    }
}
