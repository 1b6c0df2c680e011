use super::{Letter, Word};
use crate::error::{Error, Result};

/// Parses the word DSL into a freely reduced word of `F_rank`.
pub fn parse_word(text: &str, rank: usize) -> Result<Word> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        rank,
    };
    let raw = p.product(&[])?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Word::new(rank, raw)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    rank: usize,
}

impl Parser<'_> {
    fn syntax(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
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

    /// Factors up to (not including) one of the `stops` or end of input.
    fn product(&mut self, stops: &[u8]) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        loop {
            match self.peek() {
                None => return Ok(out),
                Some(c) if stops.contains(&c) => return Ok(out),
                Some(b'*') => {
                    self.pos += 1;
                }
                Some(_) => out.extend(self.factor()?),
            }
        }
    }

    fn factor(&mut self) -> Result<Vec<Letter>> {
        let base = self.primary()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let n = self.integer()?;
        Ok(power(&base, n))
    }

    fn primary(&mut self) -> Result<Vec<Letter>> {
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.product(b")")?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'[') => {
                self.pos += 1;
                let mut entries = vec![self.product(b",]")?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    entries.push(self.product(b",]")?);
                }
                self.expect(b']')?;
                if entries.len() < 2 {
                    return Err(Error::Syntax {
                        pos: start,
                        msg: "commutator needs at least two entries".into(),
                    });
                }
                let mut out: Vec<Letter> = entries.iter().flatten().copied().collect();
                for e in &entries {
                    out.extend(power(e, -1));
                }
                Ok(out)
            }
            Some(b'1') => {
                self.pos += 1;
                if self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    return Err(self.syntax("integers are only allowed as exponents"));
                }
                Ok(Vec::new())
            }
            Some(c) if c.is_ascii_alphabetic() => self.generator(),
            Some(c) => Err(self.syntax(format!("unexpected `{}`", c as char))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn generator(&mut self) -> Result<Vec<Letter>> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        let name_end = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
        let unknown = || Error::UnknownGenerator {
            pos: start,
            name: text.clone(),
        };
        if &self.src[start..name_end] != b"x" || name_end == self.pos {
            return Err(unknown());
        }
        let index: usize = text[1..].parse().map_err(|_| unknown())?;
        if index == 0 {
            return Err(unknown());
        }
        if index > self.rank {
            return Err(Error::RankMismatch {
                index,
                rank: self.rank,
            });
        }
        Ok(vec![Letter {
            generator: index - 1,
            exponent: 1,
        }])
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or(Error::Syntax {
                pos: start,
                msg: "expected an integer exponent".into(),
            })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(format!("expected `{}`", c as char)))
        }
    }
}

fn power(base: &[Letter], n: i64) -> Vec<Letter> {
    let unit: Vec<Letter> = if n < 0 {
        base.iter()
            .rev()
            .map(|l| Letter {
                generator: l.generator,
                exponent: -l.exponent,
            })
            .collect()
    } else {
        base.to_vec()
    };
    if unit.len() == 1 {
        return vec![Letter {
            generator: unit[0].generator,
            exponent: unit[0].exponent * n.abs(),
        }];
    }
    let reps = n.unsigned_abs() as usize;
    unit.iter().copied().cycle().take(unit.len() * reps).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        let w = parse_word("[x1,x2]^2", 2).unwrap();
        assert_eq!(w.to_string(), "x1 x2 x1^-1 x2^-1 x1 x2 x1^-1 x2^-1");
        assert_eq!(parse_word("(x1 x2)^-1", 2).unwrap().to_string(), "x2^-1 x1^-1");
        assert_eq!(parse_word("x1x2*x3", 3).unwrap().to_string(), "x1 x2 x3");
        assert_eq!(parse_word("[x1,x2,x3]", 3).unwrap().to_string(), "x1 x2 x3 x1^-1 x2^-1 x3^-1");
        assert_eq!(
            parse_word("[[x1,x2],x3]", 3).unwrap().to_string(),
            "x1 x2 x1^-1 x2^-1 x3 x2 x1 x2^-1 x1^-1 x3^-1"
        );
        assert_eq!(parse_word("", 0).unwrap(), Word::identity(0));
        assert_eq!(parse_word(" 1 ", 2).unwrap(), Word::identity(2));
        assert_eq!(parse_word("x1^0", 1).unwrap(), Word::identity(1));
        assert_eq!(parse_word("x1 ^ -3", 1).unwrap().to_string(), "x1^-3");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_word("x1 +", 1), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_word("[x1]", 1), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_word("[x1,x2", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("x1^", 1), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_word("y1", 1), Err(Error::UnknownGenerator { pos: 0, .. })));
        assert!(matches!(parse_word("x0", 1), Err(Error::UnknownGenerator { .. })));
        assert!(matches!(parse_word("x x1", 1), Err(Error::UnknownGenerator { .. })));
        assert_eq!(parse_word("x3", 2), Err(Error::RankMismatch { index: 3, rank: 2 }));
    }
}
