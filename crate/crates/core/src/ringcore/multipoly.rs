//! Sparse multivariate polynomials over `F_p` and exhaustive affine point
//! counting over extensions of `F_p`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::field::{is_prime, Fe, FiniteField};
use crate::error::{Error, Result};

/// Default cap on the number of tuples an enumeration may visit.
pub const DEFAULT_ENUM_BUDGET: u128 = 1 << 24;

/// Environment variable overriding [`DEFAULT_ENUM_BUDGET`].
pub const ENUM_BUDGET_VAR: &str = "WITTZETA_ENUM_BUDGET";

/// Upper bound on brute-force enumeration work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget(pub u128);

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget(DEFAULT_ENUM_BUDGET)
    }
}

impl EnumerationBudget {
    /// Reads `WITTZETA_ENUM_BUDGET`, falling back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(ENUM_BUDGET_VAR) {
            Ok(v) => v
                .trim()
                .parse::<u128>()
                .map(EnumerationBudget)
                .map_err(|e| Error::InvalidArgument(format!("{ENUM_BUDGET_VAR}={v}: {e}"))),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn check(&self, required: u128) -> Result<()> {
        if required > self.0 {
            Err(Error::Budget {
                required,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

/// A polynomial over `F_p` in a fixed number of variables, as a map from
/// exponent vectors to nonzero coefficients in `0..p`.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    p: u64,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, u64>,
}

impl MultiPoly {
    pub fn zero(p: u64, nvars: usize) -> Self {
        MultiPoly {
            p,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(p: u64, nvars: usize, c: i64) -> Self {
        let mut out = Self::zero(p, nvars);
        out.add_term(vec![0; nvars], c.rem_euclid(p as i64) as u64);
        out
    }

    pub fn variable(p: u64, nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut out = Self::zero(p, nvars);
        out.add_term(exps, 1);
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], u64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    fn add_term(&mut self, exps: Vec<u32>, c: u64) {
        let c = c % self.p;
        if c == 0 {
            return;
        }
        let p = self.p;
        let slot = self.terms.entry(exps).or_insert(0);
        *slot = (*slot + c) % p;
        self.terms.retain(|_, c| *c != 0);
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.p, self.nvars);
        for (e, &c) in &self.terms {
            out.add_term(e.clone(), self.p - c);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.p, self.nvars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb % self.p);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(self.p, self.nvars, 1), |acc, _| acc.mul(self))
    }

    /// Evaluates at a point of `field^nvars`; coefficients embed through the
    /// prime subfield.
    pub fn eval(&self, field: &FiniteField, point: &[Fe]) -> Fe {
        let mut acc = field.zero();
        for (exps, &c) in &self.terms {
            let mut term = c;
            for (&x, &e) in point.iter().zip(exps) {
                if e > 0 {
                    term = field.mul(term, field.pow(x, e as u64));
                }
            }
            acc = field.add(acc, term);
        }
        acc
    }

    /// Parses an expression in the given variables: integers, variable
    /// names, `+ - * ^` and parentheses. Exponents must be nonnegative
    /// integer literals.
    pub fn parse(src: &str, vars: &[String], p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Parse(format!("characteristic {p} is not prime")));
        }
        let tokens = tokenize(src)?;
        let mut parser = Parser {
            tokens,
            pos: 0,
            vars,
            p,
        };
        let poly = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::Parse(format!(
                "unexpected {:?} in {src:?}",
                parser.tokens[parser.pos]
            )));
        }
        Ok(poly)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 (mod {})", self.p);
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, k)| format!("x{i}^{k}"))
                    .collect();
                if mono.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{} (mod {})", parts.join(" + "), self.p)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(u64),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s
                .parse()
                .map_err(|_| Error::Parse(format!("integer literal {s} too large")))?;
            out.push(Token::Int(n));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    vars: &'a [String],
    p: u64,
}

impl Parser<'_> {
    fn peek_op(&self, op: char) -> bool {
        self.tokens.get(self.pos) == Some(&Token::Op(op))
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            if self.peek_op('+') {
                self.pos += 1;
                acc = acc.add(&self.term()?);
            } else if self.peek_op('-') {
                self.pos += 1;
                acc = acc.add(&self.term()?.neg());
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while self.peek_op('*') {
            self.pos += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.peek_op('-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        if self.peek_op('+') {
            self.pos += 1;
            return self.unary();
        }
        let base = self.atom()?;
        if self.peek_op('^') {
            self.pos += 1;
            match self.tokens.get(self.pos) {
                Some(Token::Int(e)) => {
                    let e = u32::try_from(*e)
                        .map_err(|_| Error::Parse(format!("exponent {e} too large")))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                other => {
                    return Err(Error::Parse(format!(
                        "expected integer exponent, found {other:?}"
                    )))
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let nvars = self.vars.len();
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                let mut out = MultiPoly::zero(self.p, nvars);
                out.add_term(vec![0; nvars], n % self.p);
                Ok(out)
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let i = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                Ok(MultiPoly::variable(self.p, nvars, i))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.peek_op(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            other => Err(Error::Parse(format!("expected operand, found {other:?}"))),
        }
    }
}

/// A system of polynomial equations over `F_p` in `nvars` variables,
/// describing an affine variety.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySystem {
    p: u64,
    nvars: usize,
    polys: Vec<MultiPoly>,
}

impl PolySystem {
    pub fn new(p: u64, nvars: usize, polys: Vec<MultiPoly>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if nvars == 0 {
            return Err(Error::InvalidArgument("need at least one variable".into()));
        }
        if let Some(bad) = polys.iter().find(|f| f.nvars != nvars || f.p != p) {
            return Err(Error::InvalidArgument(format!(
                "polynomial {bad:?} does not match {nvars} variables over F_{p}"
            )));
        }
        Ok(PolySystem { p, nvars, polys })
    }

    pub fn parse(p: u64, vars: &[String], exprs: &[String]) -> Result<Self> {
        let polys = exprs
            .iter()
            .map(|e| MultiPoly::parse(e, vars, p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, vars.len(), polys)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    fn tuple_count(&self, field: &FiniteField) -> u128 {
        (field.size() as u128).saturating_pow(self.nvars as u32)
    }

    fn check_field(&self, field: &FiniteField) -> Result<()> {
        if field.characteristic() != self.p {
            return Err(Error::InvalidArgument(format!(
                "system over F_{} evaluated in a field of characteristic {}",
                self.p,
                field.characteristic()
            )));
        }
        Ok(())
    }

    fn for_each_solution(&self, field: &FiniteField, mut visit: impl FnMut(&[Fe])) {
        let q = field.size();
        let mut point = vec![0 as Fe; self.nvars];
        loop {
            if self.polys.iter().all(|f| f.eval(field, &point) == 0) {
                visit(&point);
            }
            // odometer increment, first coordinate fastest
            let mut i = 0;
            loop {
                if i == self.nvars {
                    return;
                }
                point[i] += 1;
                if point[i] < q {
                    break;
                }
                point[i] = 0;
                i += 1;
            }
        }
    }

    /// All common zeros in `field^nvars`.
    pub fn affine_points(
        &self,
        field: &FiniteField,
        budget: EnumerationBudget,
    ) -> Result<Vec<Vec<Fe>>> {
        self.check_field(field)?;
        budget.check(self.tuple_count(field))?;
        let mut out = Vec::new();
        self.for_each_solution(field, |pt| out.push(pt.to_vec()));
        Ok(out)
    }
}

/// Number of points of `field^v` at which every polynomial of the system
/// vanishes, by exhaustive enumeration.
pub fn count_affine_points(
    system: &PolySystem,
    field: &FiniteField,
    budget: EnumerationBudget,
) -> Result<BigInt> {
    system.check_field(field)?;
    budget.check(system.tuple_count(field))?;
    let mut n: u64 = 0;
    system.for_each_solution(field, |_| n += 1);
    Ok(BigInt::from(n))
}
