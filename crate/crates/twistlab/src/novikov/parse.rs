//! Textual form for Novikov scalars: `2*q^(0) + 1*q^(1/2)`, with
//! cyclotomic coefficients written `poly(z; c0,c1,...)@k`. Parsing
//! round-trips exactly against `Display`.

use super::base::{BaseFieldElement, Cyclotomic, Q};
use super::{NovikovError, NovikovScalar};
use num::BigInt;

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { s, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.s[self.pos..].starts_with(' ') {
            self.pos += 1;
        }
    }

    fn eof(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.s.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.s[self.pos..].chars().next()
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), NovikovError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(NovikovError::Parse(format!(
                "expected `{tok}` at position {} in `{}`",
                self.pos, self.s
            )))
        }
    }

    fn parse_int(&mut self) -> Result<BigInt, NovikovError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.s.as_bytes();
        if self.pos < bytes.len() && (bytes[self.pos] == b'-' || bytes[self.pos] == b'+') {
            self.pos += 1;
        }
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.s[start..self.pos]
            .parse::<BigInt>()
            .map_err(|_| NovikovError::Parse(format!("expected integer at position {start} in `{}`", self.s)))
    }

    fn parse_rational(&mut self) -> Result<Q, NovikovError> {
        let numer = self.parse_int()?;
        if self.eat("/") {
            let denom = self.parse_int()?;
            if denom == BigInt::from(0) {
                return Err(NovikovError::Parse("zero denominator".into()));
            }
            Ok(Q::new(numer, denom))
        } else {
            Ok(Q::from(numer))
        }
    }

    fn parse_coeff(&mut self) -> Result<BaseFieldElement, NovikovError> {
        if self.eat("poly(z;") {
            let mut coeffs = Vec::new();
            loop {
                coeffs.push(self.parse_rational()?);
                if !self.eat(",") {
                    break;
                }
            }
            self.expect(")")?;
            self.expect("@")?;
            let order = self.parse_int()?;
            let order: u32 = order
                .try_into()
                .map_err(|_| NovikovError::Parse("bad cyclotomic order".into()))?;
            if order == 0 {
                return Err(NovikovError::Parse("cyclotomic order must be positive".into()));
            }
            Ok(BaseFieldElement::Cyc(Cyclotomic::from_coeffs(order, coeffs)).normalize())
        } else {
            Ok(BaseFieldElement::rational(self.parse_rational()?))
        }
    }

    fn parse_term(&mut self) -> Result<(Q, BaseFieldElement), NovikovError> {
        let coeff = self.parse_coeff()?;
        let exponent = if self.eat("*") {
            self.expect("q^(")?;
            let e = self.parse_rational()?;
            self.expect(")")?;
            e
        } else {
            Q::from(BigInt::from(0))
        };
        Ok((exponent, coeff))
    }
}

pub fn parse_novikov(input: &str) -> Result<NovikovScalar, NovikovError> {
    let mut cur = Cursor::new(input);
    cur.skip_ws();
    if cur.eat("0") && cur.eof() {
        return Ok(NovikovScalar::zero_value());
    }
    cur.pos = 0;
    let mut terms = Vec::new();
    loop {
        terms.push(cur.parse_term()?);
        if cur.eof() {
            break;
        }
        if cur.eat("+") {
            continue;
        }
        // allow `a - b` as sugar for `a + -b`
        if cur.peek() == Some('-') {
            continue;
        }
        return Err(NovikovError::Parse(format!(
            "unexpected input at position {} in `{input}`",
            cur.pos
        )));
    }
    Ok(NovikovScalar::from_terms(terms))
}
