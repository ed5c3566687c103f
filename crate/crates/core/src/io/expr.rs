//! Parser for the textual form of elements, e.g. `2R_[2] + 2R_[1,1]`,
//! `-(1/2)S_[3] + S_[2,1]` or `S_[1]*S_[2]`. Accepts everything the
//! `Display` impls print.

use crate::algebra::{parse_rational, rat, Rational};
use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::sym::{NsfBasis, NsfElement, QsymBasis, QsymElement};

/// One summand: a coefficient times a product of basis symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedTerm {
    pub coeff: Rational,
    pub factors: Vec<(char, Composition)>,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn error(&self, what: &str) -> Error {
        Error::invalid(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.bump() == Some(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !f(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    /// `7`, `7/3` or `(7/3)`, unsigned.
    fn coefficient(&mut self) -> Result<Option<Rational>> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let body = self.take_while(|c| c != ')');
                let value = parse_rational(body)?;
                self.expect(')')?;
                Ok(Some(value))
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit() || c == '/');
                Ok(Some(parse_rational(digits)?))
            }
            _ => Ok(None),
        }
    }

    /// `R_[2,1]`, `R[2,1]` or `R_(2,1)`.
    fn factor(&mut self, letters: &str) -> Result<Option<(char, Composition)>> {
        match self.peek() {
            Some(c) if letters.contains(c) => {
                self.bump();
                if self.peek() == Some('_') {
                    self.bump();
                }
                let close = match self.bump() {
                    Some('[') => ']',
                    Some('(') => ')',
                    _ => return Err(self.error("expected '[' after basis symbol")),
                };
                let body = self.take_while(|c| c != close);
                let comp: Composition = body.parse()?;
                self.expect(close)?;
                Ok(Some((c, comp)))
            }
            _ => Ok(None),
        }
    }
}

/// Parses a sum of terms over the basis symbols in `letters`.
pub fn parse_terms(src: &str, letters: &str) -> Result<Vec<ParsedTerm>> {
    let mut lx = Lexer { src, pos: 0 };
    let mut out = Vec::new();
    let mut first = true;
    loop {
        let mut sign = rat(1);
        match lx.peek() {
            None if first => return Err(lx.error("empty expression")),
            None => break,
            Some('+') => {
                lx.bump();
            }
            Some('-') => {
                lx.bump();
                sign = rat(-1);
            }
            Some(_) if !first => return Err(lx.error("expected '+' or '-'")),
            Some(_) => {}
        }
        first = false;
        let coeff = lx.coefficient()?;
        if coeff.is_some() && lx.peek() == Some('*') {
            lx.bump();
        }
        let mut factors = Vec::new();
        while let Some(f) = lx.factor(letters)? {
            factors.push(f);
            if lx.peek() == Some('*') {
                lx.bump();
                if !matches!(lx.peek(), Some(c) if letters.contains(c)) {
                    return Err(lx.error("expected a basis symbol after '*'"));
                }
            }
        }
        if coeff.is_none() && factors.is_empty() {
            return Err(lx.error(&format!("expected a coefficient or one of {letters:?}")));
        }
        out.push(ParsedTerm { coeff: sign * coeff.unwrap_or_else(|| rat(1)), factors });
    }
    Ok(out)
}

/// Parses an element of NCSF written in the `S` and `R` bases. The result
/// is expressed in the basis of the first symbol (`R` if there is none).
pub fn parse_nsf(src: &str) -> Result<NsfElement> {
    let terms = parse_terms(src, "SR")?;
    let basis_of = |c: char| if c == 'S' { NsfBasis::S } else { NsfBasis::R };
    let basis = terms.iter().find_map(|t| t.factors.first()).map_or(NsfBasis::R, |f| basis_of(f.0));
    let mut out = NsfElement::zero(basis);
    for t in terms {
        let mut x = NsfElement::one(basis);
        for (c, comp) in t.factors {
            x = x.product(&NsfElement::basis_element(basis_of(c), comp));
        }
        out = out.add(&x.scale(&t.coeff));
    }
    Ok(out)
}

/// Parses an element of QSym written in the `M` and `F` bases.
pub fn parse_qsym(src: &str) -> Result<QsymElement> {
    let terms = parse_terms(src, "MF")?;
    let basis_of = |c: char| if c == 'M' { QsymBasis::M } else { QsymBasis::F };
    let basis = terms.iter().find_map(|t| t.factors.first()).map_or(QsymBasis::F, |f| basis_of(f.0));
    let mut out = QsymElement::zero(basis);
    for t in terms {
        let mut x = QsymElement::one(basis);
        for (c, comp) in t.factors {
            x = x.product(&QsymElement::basis_element(basis_of(c), comp));
        }
        out = out.add(&x.scale(&t.coeff));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn parses_printed_forms() {
        for s in ["2R_[2] + 2R_[1,1]", "-S_[3] + S_[2,1]", "(1/2)R_[2,1] - (3/4)R_[1,2]", "R_[]"] {
            assert_eq!(parse_nsf(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_nsf("0").unwrap().to_string(), "0");
        assert_eq!(parse_qsym("2F_[2] + 2F_[1,1]").unwrap().to_string(), "2F_[2] + 2F_[1,1]");
    }

    #[test]
    fn loose_forms() {
        let x = parse_nsf("S[1]*S[2] - 1/2 * S_(3)").unwrap();
        assert_eq!(x.coefficient(&"1,2".parse().unwrap()), rat(1));
        assert_eq!(x.coefficient(&"3".parse().unwrap()), ratio(-1, 2));
        assert_eq!(parse_nsf("S_[1] R_[1,1]").unwrap().to_string(), "-S_[1,2] + S_[1,1,1]");
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "R_[2", "X_[1]", "2R_[2] 3R_[1]", "R_[0]", "1/0", "R_[1]*"] {
            assert!(parse_nsf(s).is_err(), "{s:?}");
        }
    }
}
