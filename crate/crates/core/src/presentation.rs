//! Free-group words, finite presentations, abelianization and mod-2 characters.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::intlinalg::{mod2_nullspace, rank_and_betti, IntMatrix, Mod2Matrix};

/// Default cap on the dimension of `H^1(G; Z/2)` for character enumeration.
pub const DEFAULT_CAP: usize = 20;

/// A generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Self { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Self {
            inverse: !self.inverse,
            ..self
        }
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A word in the generators of a free group. Not reduced unless produced by
/// [`Word::normalize`] or one of the reducing constructors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn generator(index: usize) -> Self {
        Self(vec![Letter::new(index, false)])
    }

    /// From `(generator, ±1)` pairs.
    pub fn from_pairs(pairs: &[(usize, i32)]) -> Self {
        Self(
            pairs
                .iter()
                .map(|&(g, s)| {
                    assert!(s == 1 || s == -1, "letter sign must be ±1");
                    Letter::new(g, s < 0)
                })
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Free reduction.
    pub fn normalize(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inv())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Concatenation followed by free reduction.
    pub fn mul(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters).normalize()
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.0);
        }
        Word(letters).normalize()
    }

    /// `u w u^-1`, reduced.
    pub fn conjugate_by(&self, u: &Word) -> Word {
        u.mul(self).mul(&u.inverse())
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator).max()
    }

    /// Renders with generator names, e.g. `x y^-1 x^2`.
    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_owned();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == l {
                run += 1;
            }
            let name = &names[l.generator];
            let exp = run as i64 * i64::from(l.sign());
            parts.push(if exp == 1 {
                name.clone()
            } else {
                format!("{name}^{exp}")
            });
            i += run;
        }
        parts.join(" ")
    }
}

/// A finitely presented group. Relators are stored freely reduced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        if generator_names.is_empty() {
            return Err(Error::EmptyGeneratorList);
        }
        for (i, name) in generator_names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::Syntax {
                    line: 0,
                    column: 0,
                    message: "empty generator name".to_owned(),
                });
            }
            if generator_names[..i].contains(name) {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        let count = generator_names.len();
        for r in &relators {
            if let Some(index) = r.max_generator().filter(|&g| g >= count) {
                return Err(Error::LetterOutOfRange { index, count });
            }
        }
        Ok(Self {
            generator_names,
            relators: relators.iter().map(Word::normalize).collect(),
        })
    }

    /// Free group on the given names.
    pub fn free<S: ToString>(names: &[S]) -> Result<Self> {
        Self::new(names.iter().map(ToString::to_string).collect(), Vec::new())
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|n| n == name)
    }

    /// Same generators, different relators.
    pub fn with_relators(&self, relators: Vec<Word>) -> Result<Self> {
        Self::new(self.generator_names.clone(), relators)
    }

    pub fn render_word(&self, w: &Word) -> String {
        w.render(&self.generator_names)
    }

    /// Exponent-sum row vector of `w`.
    pub fn abelianize(&self, w: &Word) -> Vec<BigInt> {
        abelianize(w, self.generator_count())
    }

    /// Entry `(r, g)` is the exponent sum of generator `g` in relator `r`.
    pub fn abelianization_matrix(&self) -> IntMatrix {
        let n = self.generator_count();
        IntMatrix::from_rows(n, self.relators.iter().map(|r| abelianize(r, n)).collect())
    }

    pub fn b1(&self) -> usize {
        rank_and_betti(&self.abelianization_matrix(), self.generator_count()).1
    }

    /// Dimension of `H^1(G; Z/2)`.
    pub fn mod2_dimension(&self) -> usize {
        let m = Mod2Matrix::reduce(&self.abelianization_matrix());
        self.generator_count() - m.rank()
    }

    /// Every nonzero homomorphism `G -> Z/2`, in lexicographic order of value
    /// vectors. Fails if `H^1(G; Z/2)` has dimension above `cap`.
    pub fn enumerate_characters(&self, cap: usize) -> Result<Vec<Mod2Character>> {
        let m = Mod2Matrix::reduce(&self.abelianization_matrix());
        let basis = mod2_nullspace(&m);
        let dimension = basis.len();
        if dimension > cap {
            return Err(Error::CapExceeded { dimension, cap });
        }
        let mut all: Vec<Vec<bool>> = (1u64..1u64 << dimension)
            .map(|mask| {
                let mut v = vec![false; self.generator_count()];
                for (k, b) in basis.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        for (x, y) in v.iter_mut().zip(b) {
                            *x ^= *y;
                        }
                    }
                }
                v
            })
            .collect();
        all.sort();
        Ok(all.into_iter().map(|values| Mod2Character { values }).collect())
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} |", self.generator_names.join(", "))?;
        let rels: Vec<String> = self.relators.iter().map(|r| self.render_word(r)).collect();
        if !rels.is_empty() {
            write!(f, " {}", rels.join(", "))?;
        }
        write!(f, " >")
    }
}

fn abelianize(w: &Word, n: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::from(0); n];
    for l in w.letters() {
        if l.inverse {
            v[l.generator] -= BigInt::one();
        } else {
            v[l.generator] += BigInt::one();
        }
    }
    v
}

/// A nonzero homomorphism `G -> Z/2`, given by its values on generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mod2Character {
    values: Vec<bool>,
}

impl Mod2Character {
    /// Checks arity, that every relator has even weight, and nonvanishing.
    pub fn new(p: &Presentation, values: Vec<bool>) -> Result<Self> {
        if values.len() != p.generator_count() {
            return Err(Error::NotACharacter(format!(
                "expected {} values, got {}",
                p.generator_count(),
                values.len()
            )));
        }
        let chi = Self { values };
        if let Some(r) = p.relators().iter().find(|r| chi.evaluate(r)) {
            return Err(Error::NotACharacter(format!(
                "relator {} has odd weight",
                p.render_word(r)
            )));
        }
        if chi.is_zero() {
            return Err(Error::NotACharacter("identically zero".to_owned()));
        }
        Ok(chi)
    }

    #[cfg(test)]
    pub(crate) fn from_values(values: Vec<bool>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn get(&self, generator: usize) -> bool {
        self.values[generator]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| !v)
    }

    /// Value on a word; signs are irrelevant mod 2.
    pub fn evaluate(&self, w: &Word) -> bool {
        w.letters()
            .iter()
            .fold(false, |acc, l| acc ^ self.values[l.generator])
    }

    pub fn first_odd_generator(&self) -> Option<usize> {
        self.values.iter().position(|&v| v)
    }
}

impl fmt::Display for Mod2Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", u8::from(*v))?;
        }
        write!(f, ")")
    }
}

pub fn evaluate_character(chi: &Mod2Character, w: &Word) -> bool {
    chi.evaluate(w)
}

// ---------------------------------------------------------------------------
// Text grammar:  '<' name (',' name)* '|' [relator (',' relator)*] '>'
// relator: word ['=' word]; word: factor+; factor: name ['\''...] ['^' int] | '1'

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Open,
    Close,
    Comma,
    Bar,
    Eq,
    Caret,
    Prime,
    Ident(String),
    Int(i64),
    Eof,
}

struct Lexer<'a> {
    chars: core::iter::Peekable<core::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(line: usize, column: usize, message: impl Into<String>) -> Error {
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize, usize)>> {
        let mut out = Vec::new();
        loop {
            while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
                self.bump();
            }
            let (line, column) = (self.line, self.column);
            let Some(&c) = self.chars.peek() else {
                out.push((Tok::Eof, line, column));
                return Ok(out);
            };
            let tok = match c {
                '<' => Tok::Open,
                '>' => Tok::Close,
                ',' => Tok::Comma,
                '|' => Tok::Bar,
                '=' => Tok::Eq,
                '^' => Tok::Caret,
                '\'' => Tok::Prime,
                c if c.is_alphabetic() || c == '_' => {
                    let mut s = String::new();
                    while let Some(&c) = self.chars.peek() {
                        if c.is_alphanumeric() || c == '_' {
                            s.push(c);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    out.push((Tok::Ident(s), line, column));
                    continue;
                }
                c if c.is_ascii_digit() || c == '-' || c == '+' => {
                    let mut s = String::new();
                    s.push(c);
                    self.bump();
                    while let Some(&c) = self.chars.peek() {
                        if c.is_ascii_digit() {
                            s.push(c);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    let n = s
                        .parse::<i64>()
                        .map_err(|_| Self::error(line, column, format!("bad integer `{s}`")))?;
                    out.push((Tok::Int(n), line, column));
                    continue;
                }
                other => return Err(Self::error(line, column, format!("unexpected character `{other}`"))),
            };
            self.bump();
            out.push((tok, line, column));
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    names: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn next(&mut self) -> (Tok, usize, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        let (_, line, column) = self.toks[self.pos];
        Err(Lexer::error(line, column, message))
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if *self.peek() == want {
            self.next();
            Ok(())
        } else {
            self.fail(format!("expected {what}"))
        }
    }

    fn generators(&mut self) -> Result<()> {
        loop {
            match self.next() {
                (Tok::Ident(name), line, column) => {
                    if self.names.contains(&name) {
                        return Err(Lexer::error(line, column, format!("duplicate generator `{name}`")));
                    }
                    self.names.push(name);
                }
                (Tok::Bar, ..) if self.names.is_empty() => return Err(Error::EmptyGeneratorList),
                _ => {
                    self.pos -= 1;
                    return self.fail("expected generator name");
                }
            }
            match self.peek() {
                Tok::Comma => {
                    self.next();
                }
                Tok::Bar => {
                    self.next();
                    return Ok(());
                }
                _ => return self.fail("expected `,` or `|`"),
            }
        }
    }

    fn resolve(&self, ident: &str) -> Result<Vec<usize>> {
        if let Some(i) = self.names.iter().position(|n| n == ident) {
            return Ok(vec![i]);
        }
        // `xyx` for single-character generator names
        let mut buf = [0u8; 4];
        ident
            .chars()
            .map(|c| {
                let s: &str = c.encode_utf8(&mut buf);
                self.names.iter().position(|n| n == s)
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::UnknownGenerator(ident.to_owned()))
    }

    fn word(&mut self) -> Result<Word> {
        let mut letters = Vec::new();
        let mut saw_factor = false;
        loop {
            match self.peek().clone() {
                Tok::Ident(name) => {
                    self.next();
                    saw_factor = true;
                    let gens = self.resolve(&name)?;
                    let (last, init) = gens.split_last().expect("identifier is non-empty");
                    letters.extend(init.iter().map(|&g| Letter::new(g, false)));
                    let mut inverse = false;
                    while *self.peek() == Tok::Prime {
                        self.next();
                        inverse = !inverse;
                    }
                    let mut exp: i64 = 1;
                    if *self.peek() == Tok::Caret {
                        self.next();
                        match self.next() {
                            (Tok::Int(0), line, column) => {
                                return Err(Lexer::error(line, column, "exponent must be nonzero"))
                            }
                            (Tok::Int(k), ..) => exp = k,
                            _ => {
                                self.pos -= 1;
                                return self.fail("expected integer exponent");
                            }
                        }
                    }
                    let l = Letter::new(*last, inverse);
                    let l = if exp < 0 { l.inv() } else { l };
                    letters.extend(core::iter::repeat(l).take(exp.unsigned_abs() as usize));
                }
                Tok::Int(1) => {
                    self.next();
                    saw_factor = true;
                }
                _ => break,
            }
        }
        if !saw_factor {
            return self.fail("expected a word");
        }
        Ok(Word::new(letters))
    }

    fn relator(&mut self) -> Result<Word> {
        let lhs = self.word()?;
        if *self.peek() == Tok::Eq {
            self.next();
            let rhs = self.word()?;
            Ok(lhs.mul(&rhs.inverse()))
        } else {
            Ok(lhs.normalize())
        }
    }

    fn presentation(mut self) -> Result<Presentation> {
        self.expect(Tok::Open, "`<`")?;
        self.generators()?;
        let mut relators = Vec::new();
        if *self.peek() != Tok::Close {
            loop {
                relators.push(self.relator()?);
                match self.peek() {
                    Tok::Comma => {
                        self.next();
                    }
                    Tok::Close => break,
                    _ => return self.fail("expected `,` or `>`"),
                }
            }
        }
        self.expect(Tok::Close, "`>`")?;
        self.expect(Tok::Eof, "end of input")?;
        Presentation::new(self.names, relators)
    }
}

/// Parses `< x, y | x y x = y x y >`-style text.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let toks = Lexer::new(text).tokens()?;
    Parser {
        toks,
        pos: 0,
        names: Vec::new(),
    }
    .presentation()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(pairs: &[(usize, i32)]) -> Word {
        Word::from_pairs(pairs)
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn trefoil() -> Presentation {
        parse_presentation("< x, y | x y x = y x y >").unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(w(&[(0, 1), (1, 1), (1, -1), (0, 1)]).normalize(), w(&[(0, 1), (0, 1)]));
        assert_eq!(w(&[(0, 1), (0, -1)]).normalize(), Word::empty());
        let xyx = w(&[(0, 1), (1, 1), (0, -1)]);
        assert_eq!(xyx.normalize(), xyx);
    }

    #[test]
    fn abelianization_examples() {
        assert_eq!(trefoil().abelianization_matrix(), IntMatrix::from_i64(1, 2, &[1, -1]));
        let d = parse_presentation("< a, b | a^2, b^2 >").unwrap();
        assert_eq!(d.abelianization_matrix(), IntMatrix::from_i64(2, 2, &[2, 0, 0, 2]));
        let f = parse_presentation("< x, y | >").unwrap();
        assert_eq!(f.abelianization_matrix().rows(), 0);
        assert_eq!(f.abelianization_matrix().cols(), 2);
    }

    #[test]
    fn b1_examples() {
        assert_eq!(parse_presentation("<x,y|>").unwrap().b1(), 2);
        assert_eq!(parse_presentation("<a,b|a^2,b^2>").unwrap().b1(), 0);
        assert_eq!(trefoil().b1(), 1);
    }

    #[test]
    fn enumerate_examples() {
        let z = parse_presentation("<x|>").unwrap();
        let chars = z.enumerate_characters(DEFAULT_CAP).unwrap();
        assert_eq!(chars.len(), 1);
        assert_eq!(chars[0].values(), &[true]);

        let f2 = parse_presentation("<x,y|>").unwrap();
        let vals: Vec<Vec<bool>> = f2
            .enumerate_characters(DEFAULT_CAP)
            .unwrap()
            .into_iter()
            .map(|c| c.values().to_vec())
            .collect();
        assert_eq!(vals, vec![vec![false, true], vec![true, false], vec![true, true]]);

        let t = trefoil().enumerate_characters(DEFAULT_CAP).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].values(), &[true, true]);
    }

    #[test]
    fn character_cap() {
        let f3 = parse_presentation("<a,b,c|>").unwrap();
        assert_eq!(
            f3.enumerate_characters(2),
            Err(Error::CapExceeded { dimension: 3, cap: 2 })
        );
    }

    #[test]
    fn evaluate_examples() {
        let f2 = Presentation::free(&["x", "y"]).unwrap();
        let c10 = Mod2Character::new(&f2, vec![true, false]).unwrap();
        let c11 = Mod2Character::new(&f2, vec![true, true]).unwrap();
        assert!(!c10.evaluate(&w(&[(0, 1), (1, 1), (0, -1)])));
        assert!(!c11.evaluate(&w(&[(0, 1), (1, 1)])));
        assert!(c10.evaluate(&w(&[(0, 1), (0, 1), (0, 1)])));
    }

    #[test]
    fn character_validation() {
        let t = trefoil();
        assert!(matches!(
            Mod2Character::new(&t, vec![true, false]),
            Err(Error::NotACharacter(_))
        ));
        assert!(matches!(
            Mod2Character::new(&t, vec![false, false]),
            Err(Error::NotACharacter(_))
        ));
    }

    #[test]
    fn parse_examples() {
        let t = trefoil();
        assert_eq!(t.generator_names(), &["x", "y"]);
        // x y x (y x y)^-1 = x y x y^-1 x^-1 y^-1
        assert_eq!(
            t.relators(),
            &[w(&[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)])]
        );
        let d = parse_presentation("< a, b | a^2, b^2 >").unwrap();
        assert_eq!(d.relators(), &[w(&[(0, 1), (0, 1)]), w(&[(1, 1), (1, 1)])]);
        let z = parse_presentation("< x | >").unwrap();
        assert_eq!(z.generator_count(), 1);
        assert!(z.relators().is_empty());
    }

    #[test]
    fn parse_inverse_forms() {
        let p = parse_presentation("<x,y| x' y^-2 x^3, x = 1>").unwrap();
        assert_eq!(p.abelianize(&p.relators()[0]), ints(&[2, -2]));
        assert_eq!(p.relators()[1], w(&[(0, 1)]));
        let q = parse_presentation("<x,y|xyx^-1y^-1>").unwrap();
        assert_eq!(q.relators()[0], w(&[(0, 1), (1, 1), (0, -1), (1, -1)]));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_presentation("<x | x y>"),
            Err(Error::UnknownGenerator(s)) if s == "y"
        ));
        assert_eq!(parse_presentation("< | x>"), Err(Error::EmptyGeneratorList));
        match parse_presentation("<x |\n x^0>") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 4)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_presentation("<x | x"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_presentation("<x, x | >"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_presentation("<x | x > junk"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn render_round_trip() {
        let p = parse_presentation("<a,b| a b^-1 b^-1 a a a, b^3>").unwrap();
        let q = parse_presentation(&p.to_string()).unwrap();
        assert_eq!(p, q);
    }
}
