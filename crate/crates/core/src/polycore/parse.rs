//! Text form of polynomials.
//!
//! Grammar: terms joined by `+`/`-`; a term is an optional coefficient
//! (integer or `a/b`) followed by `*`-separated powers `zK^E`. Whitespace is
//! ignored. Printing is grevlex-descending with explicit `*` and `^`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::field::Field;
use super::monomial::Monomial;
use super::poly::Poly;
use crate::error::{AlgebraError, Result};

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    i: usize,
    _src: &'a str,
}

fn perr<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(AlgebraError::Parse { pos, msg: msg.into() })
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Lexer { chars, i: 0, _src: src }
    }
    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|&(_, c)| c)
    }
    fn pos(&self) -> usize {
        self.chars.get(self.i).map(|&(p, _)| p).unwrap_or_else(|| self.chars.last().map_or(0, |&(p, _)| p + 1))
    }
    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.i += 1;
        c
    }
    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.i += 1;
            } else {
                break;
            }
        }
        (!s.is_empty()).then_some(s)
    }
}

/// Parse a polynomial in variables `z0..z{nvars-1}`.
pub fn parse_poly<F: Field>(field: &F, nvars: usize, text: &str) -> Result<Poly<F>> {
    let mut lx = Lexer::new(text);
    if lx.peek().is_none() {
        return perr(0, "empty input");
    }
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let mut negative = false;
        match lx.peek() {
            Some('+') if !first => {
                lx.bump();
            }
            Some('-') => {
                lx.bump();
                negative = true;
            }
            Some(_) if first => {}
            Some(c) => return perr(lx.pos(), format!("expected '+' or '-', found '{c}'")),
            None => break,
        }
        first = false;
        let (mono, coeff) = parse_term(&mut lx, nvars)?;
        let coeff = if negative { -coeff } else { coeff };
        let pos = lx.pos();
        let c = field
            .from_rational(&coeff)
            .ok_or_else(|| AlgebraError::Parse { pos, msg: "coefficient denominator vanishes in the field".into() })?;
        terms.push((mono, c));
        if lx.peek().is_none() {
            break;
        }
    }
    Ok(Poly::from_terms(field.clone(), nvars, terms))
}

fn parse_term(lx: &mut Lexer<'_>, nvars: usize) -> Result<(Monomial, BigRational)> {
    let mut coeff = BigRational::from_integer(BigInt::from(1));
    let mut exps = vec![0u32; nvars];
    let mut need_factor = true;
    if let Some(c) = lx.peek() {
        if c.is_ascii_digit() {
            let pos = lx.pos();
            let num: BigInt = lx.digits().unwrap().parse().unwrap();
            let mut r = BigRational::from_integer(num);
            if lx.peek() == Some('/') {
                lx.bump();
                let dpos = lx.pos();
                let den: BigInt = match lx.digits() {
                    Some(d) => d.parse().unwrap(),
                    None => return perr(dpos, "expected denominator"),
                };
                if den.is_zero() {
                    return perr(pos, "zero denominator");
                }
                r = BigRational::new(r.numer().clone(), den);
            }
            coeff = r;
            match lx.peek() {
                Some('*') => {
                    lx.bump();
                }
                _ => return Ok((Monomial::one(), coeff)),
            }
        }
    }
    loop {
        let pos = lx.pos();
        match lx.bump() {
            Some('z') => {}
            Some(c) if need_factor => return perr(pos, format!("unknown variable starting with '{c}'")),
            Some(c) => return perr(pos, format!("unexpected '{c}'")),
            None => return perr(pos, "unexpected end of input"),
        }
        let ipos = lx.pos();
        let idx: usize = match lx.digits() {
            Some(d) => d.parse().map_err(|_| AlgebraError::Parse { pos: ipos, msg: "bad variable index".into() })?,
            None => return perr(ipos, "expected variable index after 'z'"),
        };
        if idx >= nvars {
            return perr(pos, format!("unknown variable z{idx}"));
        }
        let mut e = 1u32;
        if lx.peek() == Some('^') {
            lx.bump();
            let epos = lx.pos();
            e = match lx.digits() {
                Some(d) => d.parse().map_err(|_| AlgebraError::Parse { pos: epos, msg: "bad exponent".into() })?,
                None => return perr(epos, "expected exponent"),
            };
        }
        exps[idx] += e;
        if exps[idx] > 255 {
            return perr(pos, "exponent too large");
        }
        if lx.peek() == Some('*') {
            lx.bump();
            need_factor = true;
        } else {
            break;
        }
    }
    Ok((Monomial::from_exps(&exps), coeff))
}

fn monomial_text(m: &Monomial, nvars: usize) -> String {
    let mut parts = Vec::new();
    for i in 0..nvars {
        match m.exp(i) {
            0 => {}
            1 => parts.push(format!("z{i}")),
            e => parts.push(format!("z{i}^{e}")),
        }
    }
    parts.join("*")
}

/// Canonical text: grevlex-descending, coefficient 1 elided except on constants.
pub fn print_poly<F: Field>(p: &Poly<F>) -> String {
    let f = p.field();
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let neg = f.is_negative(c);
        let abs = if neg { f.neg(c) } else { c.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = monomial_text(m, p.nvars());
        if mono.is_empty() {
            out.push_str(&f.format(&abs));
        } else if f.is_one(&abs) {
            out.push_str(&mono);
        } else {
            out.push_str(&f.format(&abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::field::{PrimeField, Rationals};

    #[test]
    fn quadric_parses() {
        let p = parse_poly(&Rationals, 4, "z0*z3 - z1*z2").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(print_poly(&p), "-z1*z2 + z0*z3");
    }

    #[test]
    fn zero_and_round_trip() {
        assert!(parse_poly(&Rationals, 4, "0").unwrap().is_zero());
        let p = parse_poly(&Rationals, 4, "2*z0^3").unwrap();
        assert_eq!(print_poly(&p), "2*z0^3");
        let r = parse_poly(&Rationals, 4, " -3/4 * z1 ^2*z2 + 7 - z0*z0").unwrap();
        assert_eq!(print_poly(&r), "-3/4*z1^2*z2 - z0^2 + 7");
        assert_eq!(parse_poly(&Rationals, 4, &print_poly(&r)).unwrap(), r);
    }

    #[test]
    fn prime_field_prints_symmetric() {
        let f = PrimeField::new(1009).unwrap();
        let p = parse_poly(&f, 4, "z0 - 2*z1").unwrap();
        assert_eq!(print_poly(&p), "z0 - 2*z1");
        assert!(parse_poly(&f, 4, "1/1009*z0").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poly(&Rationals, 4, "z0 + z7") {
            Err(AlgebraError::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly(&Rationals, 4, "z0 +").is_err());
        assert!(parse_poly(&Rationals, 4, "x1").is_err());
        assert!(parse_poly(&Rationals, 4, "z0 z1").is_err());
        assert!(parse_poly(&Rationals, 4, "").is_err());
    }
}
