//! Symbolic descriptions of Frobenius kernels, complements and groups, with
//! a whitespace-insensitive text grammar:
//!
//! ```text
//! kernel     ::= "H(" p "," k "," r ")"
//! complement ::= "C" n | "Q" 2^n ["xC" m] | "M(" alpha "," beta "," gamma ")"
//!              | "SL(2,3)" | "SL(2,5)"
//! frobenius  ::= kernel ":" complement
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numtheory::{factorize, gcd, is_prime, pow_mod};

/// The homocyclic group `(Z/p^k)^r`, `p` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomocyclicKernel {
    pub p: u64,
    pub k: u32,
    pub r: u32,
}

impl HomocyclicKernel {
    pub fn new(p: u64, k: u32, r: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::domain(format!(
                "kernel prime must be an odd prime, got {p}"
            )));
        }
        if k == 0 || r == 0 {
            return Err(Error::domain(
                "kernel exponent k and rank r must be positive",
            ));
        }
        let kern = HomocyclicKernel { p, k, r };
        kern.checked_order()
            .ok_or_else(|| Error::domain(format!("kernel order {p}^({k}*{r}) overflows")))?;
        Ok(kern)
    }

    fn checked_order(&self) -> Option<u64> {
        self.p.checked_pow(self.k.checked_mul(self.r)?)
    }

    /// `p^k`
    pub fn exponent(&self) -> u64 {
        self.p.pow(self.k)
    }

    /// `p^{kr}`
    pub fn order(&self) -> u64 {
        self.checked_order().expect("validated kernel")
    }

    /// `C9^2`-style structure text; rank one drops the power.
    pub fn display_structure(&self) -> String {
        if self.r == 1 {
            format!("C{}", self.exponent())
        } else {
            format!("C{}^{}", self.exponent(), self.r)
        }
    }
}

impl fmt::Display for HomocyclicKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{},{})", self.p, self.k, self.r)
    }
}

/// A Frobenius complement from the families the classification deals with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComplementSpec {
    Cyclic(u64),
    /// `Q_{2^n} x C_m`, `n >= 3`, `m` odd.
    QuatCyclic(u32, u64),
    /// `<x, y | x^alpha, y^beta, y^-1 x y = x^gamma>`.
    Metacyclic(u64, u64, u64),
    SL2_3,
    SL2_5,
}

impl ComplementSpec {
    pub fn cyclic(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("cyclic order must be positive"));
        }
        Ok(ComplementSpec::Cyclic(n))
    }

    pub fn quat_cyclic(n: u32, m: u64) -> Result<Self> {
        if !(3..=62).contains(&n) {
            return Err(Error::domain(format!(
                "Q_(2^n) needs 3 <= n <= 62, got n = {n}"
            )));
        }
        if m == 0 || m % 2 == 0 {
            return Err(Error::domain(format!(
                "cyclic factor of Q x C_m must be odd, got {m}"
            )));
        }
        (1u64 << n)
            .checked_mul(m)
            .ok_or_else(|| Error::domain("complement order overflows"))?;
        Ok(ComplementSpec::QuatCyclic(n, m))
    }

    /// Validates the Z-group parameters; `gamma` may be negative and is
    /// reduced modulo `alpha`.
    pub fn metacyclic(alpha: u64, beta: u64, gamma: i64) -> Result<Self> {
        if alpha == 0 || beta == 0 {
            return Err(Error::domain("metacyclic alpha and beta must be positive"));
        }
        let g = gamma.rem_euclid(alpha as i64) as u64;
        if gcd(alpha, beta) != 1 {
            return Err(Error::domain(format!(
                "gcd(alpha, beta) = gcd({alpha}, {beta}) != 1"
            )));
        }
        let gm1 = (g + alpha - 1) % alpha;
        if alpha > 1 && gcd(alpha, gm1) != 1 {
            return Err(Error::domain(format!(
                "gcd(alpha, gamma - 1) = gcd({alpha}, {gm1}) != 1"
            )));
        }
        if pow_mod(g, beta, alpha) != 1 % alpha {
            return Err(Error::domain(format!(
                "gamma^beta = {g}^{beta} != 1 mod {alpha}"
            )));
        }
        alpha
            .checked_mul(beta)
            .ok_or_else(|| Error::domain("complement order overflows"))?;
        Ok(ComplementSpec::Metacyclic(alpha, beta, g))
    }

    pub fn order(&self) -> u64 {
        match *self {
            ComplementSpec::Cyclic(n) => n,
            ComplementSpec::QuatCyclic(n, m) => (1u64 << n) * m,
            ComplementSpec::Metacyclic(a, b, _) => a * b,
            ComplementSpec::SL2_3 => 24,
            ComplementSpec::SL2_5 => 120,
        }
    }

    /// Cyclic as an abstract group.
    pub fn is_cyclic(&self) -> bool {
        match *self {
            ComplementSpec::Cyclic(_) => true,
            ComplementSpec::Metacyclic(a, _, _) => a == 1,
            _ => false,
        }
    }

    /// Nilpotency read off the variant; metacyclic Z-groups with a
    /// non-trivial twist are never nilpotent.
    pub fn is_nilpotent(&self) -> bool {
        match self {
            ComplementSpec::Cyclic(_) | ComplementSpec::QuatCyclic(..) => true,
            ComplementSpec::Metacyclic(..) => self.is_cyclic(),
            ComplementSpec::SL2_3 | ComplementSpec::SL2_5 => false,
        }
    }

    pub fn is_soluble(&self) -> bool {
        !matches!(self, ComplementSpec::SL2_5)
    }

    pub fn prime_divisors(&self) -> Vec<u64> {
        factorize(self.order()).primes().collect()
    }
}

impl fmt::Display for ComplementSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ComplementSpec::Cyclic(n) => write!(f, "C{n}"),
            ComplementSpec::QuatCyclic(n, m) => write!(f, "Q{}xC{m}", 1u64 << n),
            ComplementSpec::Metacyclic(a, b, g) => write!(f, "M({a},{b},{g})"),
            ComplementSpec::SL2_3 => f.write_str("SL(2,3)"),
            ComplementSpec::SL2_5 => f.write_str("SL(2,5)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrobeniusSpec {
    pub kernel: HomocyclicKernel,
    pub complement: ComplementSpec,
}

impl FrobeniusSpec {
    pub fn new(kernel: HomocyclicKernel, complement: ComplementSpec) -> Result<Self> {
        let h = complement.order();
        if h < 2 {
            return Err(Error::domain("Frobenius complement must be non-trivial"));
        }
        if h % kernel.p == 0 {
            return Err(Error::domain(format!(
                "kernel prime {} divides complement order {h}",
                kernel.p
            )));
        }
        kernel
            .order()
            .checked_mul(h)
            .ok_or_else(|| Error::domain("group order overflows"))?;
        Ok(FrobeniusSpec { kernel, complement })
    }

    pub fn order(&self) -> u64 {
        self.kernel.order() * self.complement.order()
    }

    /// `C5^2:M(3,8,2)`-style structure text.
    pub fn structure_string(&self) -> String {
        format!("{}:{}", self.kernel.display_structure(), self.complement)
    }
}

impl fmt::Display for FrobeniusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kernel, self.complement)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Frobenius(FrobeniusSpec),
    Complement(ComplementSpec),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Frobenius(s) => s.fmt(f),
            GroupSpec::Complement(c) => c.fmt(f),
        }
    }
}

/// Parses either a Frobenius spec or a bare complement spec.
pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let mut p = Parser::new(text);
    let spec = if p.peek() == Some('H') {
        let kernel = p.kernel()?;
        p.expect(':')?;
        let complement = p.complement()?;
        GroupSpec::Frobenius(FrobeniusSpec::new(kernel, complement)?)
    } else {
        GroupSpec::Complement(p.complement()?)
    };
    p.end()?;
    Ok(spec)
}

impl FromStr for ComplementSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let c = p.complement()?;
        p.end()?;
        Ok(c)
    }
}

impl FromStr for FrobeniusSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_spec(s)? {
            GroupSpec::Frobenius(f) => Ok(f),
            GroupSpec::Complement(_) => Err(Error::Parse {
                position: 0,
                message: "expected a kernel \"H(p,k,r)\" followed by ':'".into(),
            }),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => self.error(format!("expected '{want}', found '{c}'")),
            None => self.error(format!("expected '{want}', found end of input")),
        }
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        word.chars().try_for_each(|c| self.expect(c))
    }

    fn end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected trailing '{c}'")),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let negative = self.peek() == Some('-');
        if negative {
            self.pos += 1;
        }
        self.skip_ws();
        let start = self.pos;
        // Whitespace is ignored everywhere, including between digits.
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            return self.error("expected an integer");
        }
        let v: i64 = digits.parse().map_err(|_| Error::Parse {
            position: start,
            message: format!("integer {digits} out of range"),
        })?;
        Ok(if negative { -v } else { v })
    }

    fn unsigned(&mut self) -> Result<u64> {
        let start = self.peek().map(|_| self.pos).unwrap_or(self.pos);
        let v = self.integer()?;
        u64::try_from(v).map_err(|_| Error::Parse {
            position: start,
            message: format!("expected a non-negative integer, found {v}"),
        })
    }

    fn small(&mut self) -> Result<u32> {
        let start = self.peek().map(|_| self.pos).unwrap_or(self.pos);
        let v = self.unsigned()?;
        u32::try_from(v).map_err(|_| Error::Parse {
            position: start,
            message: format!("integer {v} out of range"),
        })
    }

    fn kernel(&mut self) -> Result<HomocyclicKernel> {
        self.keyword("H(")?;
        let p = self.unsigned()?;
        self.expect(',')?;
        let k = self.small()?;
        self.expect(',')?;
        let r = self.small()?;
        self.expect(')')?;
        HomocyclicKernel::new(p, k, r)
    }

    fn complement(&mut self) -> Result<ComplementSpec> {
        match self.peek() {
            Some('C') => {
                self.pos += 1;
                ComplementSpec::cyclic(self.unsigned()?)
            }
            Some('Q') => {
                self.pos += 1;
                self.skip_ws();
                let start = self.pos;
                let q = self.unsigned()?;
                if q < 8 || !q.is_power_of_two() {
                    return Err(Error::Parse {
                        position: start,
                        message: format!("quaternion order must be a power of two >= 8, got {q}"),
                    });
                }
                let m = if self.peek() == Some('x') {
                    self.keyword("xC")?;
                    self.unsigned()?
                } else {
                    1
                };
                ComplementSpec::quat_cyclic(q.trailing_zeros(), m)
            }
            Some('M') => {
                self.keyword("M(")?;
                let a = self.unsigned()?;
                self.expect(',')?;
                let b = self.unsigned()?;
                self.expect(',')?;
                let g = self.integer()?;
                self.expect(')')?;
                ComplementSpec::metacyclic(a, b, g)
            }
            Some('S') => {
                self.keyword("SL(2,")?;
                self.skip_ws();
                let start = self.pos;
                let q = self.unsigned()?;
                self.expect(')')?;
                match q {
                    3 => Ok(ComplementSpec::SL2_3),
                    5 => Ok(ComplementSpec::SL2_5),
                    _ => Err(Error::Parse {
                        position: start,
                        message: format!("only SL(2,3) and SL(2,5) are supported, got SL(2,{q})"),
                    }),
                }
            }
            Some(c) => self.error(format!(
                "expected a complement (C, Q, M or SL), found '{c}'"
            )),
            None => self.error("expected a complement, found end of input"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let s = parse_spec("H(11,1,2):SL(2,5)").unwrap();
        assert_eq!(
            s,
            GroupSpec::Frobenius(FrobeniusSpec {
                kernel: HomocyclicKernel { p: 11, k: 1, r: 2 },
                complement: ComplementSpec::SL2_5
            })
        );
        assert_eq!(
            parse_spec("C24").unwrap(),
            GroupSpec::Complement(ComplementSpec::Cyclic(24))
        );
        match parse_spec("H(3,2,2):C8").unwrap() {
            GroupSpec::Frobenius(f) => assert_eq!(f.order(), 648),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn whitespace_and_canonical_form() {
        let s = parse_spec("  H( 5 , 1 ,2 ) : M( 3, 8, -1 ) ").unwrap();
        assert_eq!(s.to_string(), "H(5,1,2):M(3,8,2)");
        assert_eq!(parse_spec("Q 16 x C 5").unwrap().to_string(), "Q16xC5");
        assert_eq!(parse_spec("Q8").unwrap().to_string(), "Q8xC1");
        assert_eq!(parse_spec("SL( 2 , 3 )").unwrap().to_string(), "SL(2,3)");
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_spec("H(3,1,1)C2") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 8),
            other => panic!("{other:?}"),
        }
        match parse_spec("Q12xC5") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 1),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_spec("SL(2,7)"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_spec("C24 junk"),
            Err(Error::Parse { position: 4, .. })
        ));
        assert!(matches!(parse_spec(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn semantic_errors() {
        assert!(matches!(parse_spec("H(4,1,1):C3"), Err(Error::Domain(_))));
        assert!(matches!(parse_spec("H(3,1,1):C6"), Err(Error::Domain(_))));
        assert!(matches!(parse_spec("M(3,6,2)"), Err(Error::Domain(_))));
        assert!(matches!(parse_spec("M(5,6,2)"), Err(Error::Domain(_))));
        assert!(matches!(parse_spec("M(3,8,1)"), Err(Error::Domain(_))));
        assert!(matches!(parse_spec("Q8xC4"), Err(Error::Domain(_))));
        assert!(matches!(parse_spec("H(3,1,1):C1"), Err(Error::Domain(_))));
    }

    #[test]
    fn structure_strings() {
        let f: FrobeniusSpec = "H(3,1,1):C2".parse().unwrap();
        assert_eq!(f.structure_string(), "C3:C2");
        let f: FrobeniusSpec = "H(3,2,2):C8".parse().unwrap();
        assert_eq!(f.structure_string(), "C9^2:C8");
    }

    #[test]
    fn structural_predicates() {
        assert!(ComplementSpec::Metacyclic(1, 8, 0).is_cyclic());
        assert!(!ComplementSpec::Metacyclic(3, 8, 2).is_nilpotent());
        assert!(ComplementSpec::QuatCyclic(4, 5).is_nilpotent());
        assert!(!ComplementSpec::SL2_5.is_soluble());
        assert_eq!(ComplementSpec::QuatCyclic(4, 5).order(), 80);
    }
}
