//! Ideal text format: generators in multiplicative notation (`a^2*b*c`),
//! separated by newlines or commas, optionally wrapped in parentheses.
//! Names containing `^ * # { } ( ) ,` or whitespace are written in braces
//! (`{u^1}^2`); `x#k` is the `k`-th polarized copy of `x`. A line whose
//! first non-blank character is `#` is a comment.

use std::fmt;

use super::{minimalize, Monomial, MonomialIdeal, Variable};
use crate::{Error, Result};

fn special(c: char) -> bool {
    "^*#{}(),".contains(c) || c.is_whitespace()
}

/// A bare name may not start like a coefficient or a sign.
fn bare_start(c: char) -> bool {
    !special(c) && !c.is_ascii_digit() && c != '+' && c != '-'
}

fn needs_braces(name: &str) -> bool {
    !name.starts_with(bare_start) || name.chars().any(special)
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if needs_braces(&self.name) {
            write!(f, "{{{}}}", self.name)?;
        } else {
            f.write_str(&self.name)?;
        }
        if self.index > 0 {
            write!(f, "#{}", self.index)?;
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One generator per line.
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.gens {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.s[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn number(&mut self) -> std::result::Result<u32, String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        self.s[start..self.pos]
            .parse()
            .map_err(|_| format!("expected a number at column {}", start + 1))
    }
}

fn parse_monomial(s: &str) -> std::result::Result<Monomial, String> {
    let mut c = Cursor { s, pos: 0 };
    c.skip_ws();
    if c.s[c.pos..].trim() == "1" {
        return Ok(Monomial::one());
    }
    let mut factors = Vec::new();
    loop {
        c.skip_ws();
        let name = match c.peek() {
            Some('{') => {
                c.bump();
                let start = c.pos;
                while c.peek().is_some_and(|ch| ch != '}') {
                    c.bump();
                }
                if c.bump() != Some('}') {
                    return Err("unterminated `{`".into());
                }
                c.s[start..c.pos - 1].to_string()
            }
            Some(ch) if bare_start(ch) => {
                let start = c.pos;
                while c.peek().is_some_and(|ch| !special(ch)) {
                    c.bump();
                }
                c.s[start..c.pos].to_string()
            }
            Some(ch) => return Err(format!("unexpected `{ch}` at column {}", c.pos + 1)),
            None => return Err("expected a variable".into()),
        };
        let mut index = 0;
        if c.peek() == Some('#') {
            c.bump();
            index = c.number()?;
        }
        let mut exp = 1;
        c.skip_ws();
        if c.peek() == Some('^') {
            c.bump();
            c.skip_ws();
            exp = c.number()?;
        }
        factors.push((Variable::new(name, index), exp));
        c.skip_ws();
        match c.bump() {
            None => break,
            Some('*') => continue,
            Some(ch) => return Err(format!("unexpected `{ch}` at column {}", c.pos)),
        }
    }
    Ok(Monomial::from_factors(factors))
}

impl Monomial {
    pub fn parse(s: &str) -> Result<Monomial> {
        parse_monomial(s).map_err(|message| Error::Parse { line: 1, message })
    }
}

impl MonomialIdeal {
    /// Parses the text format; errors carry the 1-based line number.
    pub fn parse(text: &str) -> Result<MonomialIdeal> {
        let mut gens = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let mut body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            body = body.strip_prefix('(').unwrap_or(body);
            body = body.strip_suffix(')').unwrap_or(body);
            for part in body.split(',') {
                if part.trim().is_empty() {
                    continue;
                }
                let m = parse_monomial(part).map_err(|message| Error::Parse {
                    line: no + 1,
                    message,
                })?;
                gens.push(m);
            }
        }
        Ok(minimalize(gens))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse_round_trip() {
        let i = MonomialIdeal::parse("# comment\n(a^2*b*c, {u^1}*{u^2}^3)\nx#1*x\n").unwrap();
        let back = MonomialIdeal::parse(&i.to_string()).unwrap();
        assert_eq!(back, i);
        assert!(i.to_string().contains("{u^1}*{u^2}^3"));
        assert!(i.to_string().contains("x*x#1"));
        let odd = Monomial::from_labels(&["2a", "-b"]);
        assert_eq!(Monomial::parse(&odd.to_string()).unwrap(), odd);
    }

    #[test]
    fn repeated_factors_accumulate() {
        assert_eq!(Monomial::parse("a*a*b^2*a").unwrap().to_string(), "a^3*b^2");
        assert_eq!(Monomial::parse(" 1 ").unwrap(), Monomial::one());
        assert_eq!(Monomial::parse("x^0*y").unwrap().to_string(), "y");
    }

    #[test]
    fn errors_carry_line_numbers() {
        for bad in ["a\nb**c", "a\nb^", "a\n{b", "a\nb c", "a\nb*+c", "a\n2*b"] {
            let e = MonomialIdeal::parse(bad).unwrap_err();
            assert!(matches!(e, Error::Parse { line: 2, .. }), "{bad}: {e}");
        }
    }
}
