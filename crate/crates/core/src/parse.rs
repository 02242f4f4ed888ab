//! Text syntax for Steenrod elements (`Sq3 Sq1 + Sq4`, `1`, `0`) and
//! polynomials (`t1^3*t2 + t2^4`, `1`, `0`). Repeated terms cancel mod 2.

use crate::adem::{AdemElement, SqWord};
use crate::error::{Error, Result};
use crate::poly::{PolyElement, PolyMonomial};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    fn nat(&mut self, what: &str) -> Result<u32> {
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(Error::parse(start, format!("expected {what}")));
        }
        self.pos += len;
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, format!("{what} is too large")))
    }

    fn unexpected(&self, expected: &str) -> Error {
        match self.peek() {
            Some(c) => Error::parse(self.pos, format!("expected {expected}, found `{c}`")),
            None => Error::parse(self.pos, format!("expected {expected}, found end of input")),
        }
    }
}

/// Parses `expr := term ('+' term)*`, `term := '1' | ('Sq' nat)+`, or a
/// lone `0`. `Sq0` is rejected; write `1` for the identity.
pub fn parse_sq(src: &str) -> Result<AdemElement> {
    let mut c = Cursor::new(src);
    c.skip_ws();
    if c.eat("0") {
        if c.at_end() {
            return Ok(AdemElement::zero());
        }
        return Err(c.unexpected("end of input after `0`"));
    }
    let mut out = AdemElement::zero();
    loop {
        c.skip_ws();
        out.toggle(sq_term(&mut c)?);
        if c.at_end() {
            return Ok(out);
        }
        if !c.eat("+") {
            return Err(c.unexpected("`+` or `Sq`"));
        }
    }
}

fn sq_term(c: &mut Cursor<'_>) -> Result<SqWord> {
    if c.eat("1") {
        return Ok(SqWord::identity());
    }
    let mut exps = Vec::new();
    loop {
        c.skip_ws();
        let start = c.pos;
        if !c.eat("Sq") {
            break;
        }
        c.eat("^");
        let n = c.nat("an exponent after `Sq`")?;
        if n == 0 {
            return Err(Error::parse(
                start,
                "`Sq0` is not allowed; write `1` for the identity",
            ));
        }
        exps.push(n);
    }
    if exps.is_empty() {
        return Err(c.unexpected("`Sq` or `1`"));
    }
    Ok(SqWord::new(exps))
}

/// Parses `expr := mono ('+' mono)*`, `mono := '1' | factor ('*' factor)*`,
/// `factor := 't' idx ('^' nat)?` with `idx >= 1`, or a lone `0`.
pub fn parse_poly(src: &str) -> Result<PolyElement> {
    let mut c = Cursor::new(src);
    c.skip_ws();
    if c.eat("0") {
        if c.at_end() {
            return Ok(PolyElement::zero());
        }
        return Err(c.unexpected("end of input after `0`"));
    }
    let mut out = PolyElement::zero();
    loop {
        c.skip_ws();
        out.toggle(monomial(&mut c)?);
        if c.at_end() {
            return Ok(out);
        }
        if !c.eat("+") {
            return Err(c.unexpected("`+` or `*`"));
        }
    }
}

fn monomial(c: &mut Cursor<'_>) -> Result<PolyMonomial> {
    if c.eat("1") {
        return Ok(PolyMonomial::one());
    }
    let mut m = PolyMonomial::one();
    loop {
        c.skip_ws();
        if !c.eat("t") {
            return Err(c.unexpected("a variable `t<index>` or `1`"));
        }
        let at = c.pos;
        let j = c.nat("a variable index")?;
        if j == 0 {
            return Err(Error::parse(at, "variable indices start at 1"));
        }
        let mut e = 1;
        if c.eat("^") {
            e = c.nat("an exponent after `^`")?;
        }
        let factor = PolyMonomial::var_pow(j as usize, e);
        if m.degree().checked_add(factor.degree()).is_none() {
            return Err(Error::parse(at, "degree overflow"));
        }
        m = m.mul(&factor);
        c.skip_ws();
        if !c.eat("*") {
            return Ok(m);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sq_examples() {
        assert_eq!(
            parse_sq("Sq3 Sq1 + Sq4").unwrap(),
            AdemElement::from_words([vec![3, 1], vec![4]])
        );
        assert_eq!(parse_sq("1").unwrap(), AdemElement::one());
        assert_eq!(parse_sq(" 0 ").unwrap(), AdemElement::zero());
        assert_eq!(parse_sq("Sq2Sq2").unwrap(), AdemElement::from_word([2, 2]));
        assert_eq!(
            parse_sq("Sq^2 Sq^1").unwrap(),
            AdemElement::from_word([2, 1])
        );
        assert_eq!(parse_sq("Sq1 + Sq1").unwrap(), AdemElement::zero());
        assert_eq!(parse_sq("1 + Sq2").unwrap().to_string(), "1 + Sq2");
    }

    #[test]
    fn sq_errors_carry_positions() {
        let pos = |s: &str| match parse_sq(s) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(pos(""), 0);
        assert_eq!(pos("Sq0"), 0);
        assert_eq!(pos("Sq2 + "), 6);
        assert_eq!(pos("Sq2 Sqx"), 6);
        assert_eq!(pos("Sq2 * Sq1"), 4);
        assert_eq!(pos("Sq99999999999"), 2);
        assert!(parse_sq("Sq0")
            .unwrap_err()
            .to_string()
            .contains("write `1`"));
    }

    #[test]
    fn poly_examples() {
        let p = parse_poly("t1^3*t2 + t2^4").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string(), "t1^3*t2 + t2^4");
        assert_eq!(parse_poly("t1*t1").unwrap(), parse_poly("t1^2").unwrap());
        assert_eq!(parse_poly("t2 * t1").unwrap().to_string(), "t1*t2");
        assert_eq!(parse_poly("1").unwrap(), PolyElement::one());
        assert_eq!(parse_poly("t1 + t1").unwrap(), PolyElement::zero());
        assert!(parse_poly("t0").is_err());
        assert!(parse_poly("x1").is_err());
        assert!(parse_poly("t1^").is_err());
        assert!(parse_poly("t1 t2").is_err());
    }

    fn word() -> impl Strategy<Value = SqWord> {
        prop::collection::vec(1u32..12, 0..5).prop_map(SqWord::new)
    }

    fn mono() -> impl Strategy<Value = PolyMonomial> {
        prop::collection::vec(0u32..6, 0..5).prop_map(PolyMonomial::from_exponents)
    }

    proptest! {
        #[test]
        fn sq_round_trip(words in prop::collection::vec(word(), 0..6)) {
            let e = AdemElement::from_words(words);
            prop_assert_eq!(parse_sq(&e.to_string()).unwrap(), e);
        }

        #[test]
        fn poly_round_trip(ms in prop::collection::vec(mono(), 0..6)) {
            let p: PolyElement = ms.into_iter().collect();
            prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }

        #[test]
        fn garbage_never_panics(s in "[ Sqt0-9+*^1]{0,20}") {
            let _ = parse_sq(&s);
            let _ = parse_poly(&s);
        }
    }
}
