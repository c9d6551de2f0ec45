//! Groups built from names such as `cyclic:6`, `S4` or
//! `semidirect(C3, C2, inversion)`.
//!
//! ```text
//! group  := family params | "direct(" group "," group ")"
//!         | "semidirect(" group "," group "," action ")"
//! family := cyclic | dihedral | symmetric | alternating | elem_abelian
//!         | C<n> | S<n> | A<n>
//! params := (":" n)* | "(" n ("," n)* ")" | n*
//! action := inversion | trivial | power:k
//! ```
//!
//! `dihedral:n` has order `2n`. `elem_abelian:p:k` has order `p^k`.

use subform_core::{direct_product, semidirect_product, Automorphism, Elem, FiniteGroup, Limits, Permutation};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Num(usize),
    Punct(char),
}

fn tokenize(s: &str) -> std::result::Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = j + 1;
                chars.next();
            }
            out.push(Token::Num(s[i..end].parse().map_err(|_| format!("number too large at {}", i + 1))?));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                end = j + 1;
                chars.next();
            }
            out.push(Token::Ident(s[i..end].to_ascii_lowercase()));
        } else if "(),:".contains(c) {
            out.push(Token::Punct(c));
            chars.next();
        } else {
            return Err(format!("unexpected `{c}` at {}", i + 1));
        }
    }
    Ok(out)
}

/// Parsed form of a group name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    ElemAbelian(usize, usize),
    Direct(Box<GroupExpr>, Box<GroupExpr>),
    Semidirect(Box<GroupExpr>, Box<GroupExpr>, Action),
}

/// Action of every generator of the complement on the normal factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    Trivial,
    Inversion,
    Power(usize),
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Punct(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> std::result::Result<(), String> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(format!("expected `{c}`"))
        }
    }

    fn num(&mut self) -> std::result::Result<usize, String> {
        match self.next() {
            Some(Token::Num(n)) => Ok(n),
            other => Err(format!("expected a number, found {other:?}")),
        }
    }

    fn params(&mut self) -> std::result::Result<Vec<usize>, String> {
        let mut out = Vec::new();
        if self.eat('(') {
            out.push(self.num()?);
            while self.eat(',') {
                out.push(self.num()?);
            }
            self.expect(')')?;
        } else {
            loop {
                if self.eat(':') {
                    out.push(self.num()?);
                } else if let Some(Token::Num(n)) = self.peek() {
                    out.push(*n);
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        Ok(out)
    }

    fn action(&mut self) -> std::result::Result<Action, String> {
        let Some(Token::Ident(name)) = self.next() else {
            return Err("expected an action".into());
        };
        let params = self.params()?;
        match (name.as_str(), params.as_slice()) {
            ("trivial", []) => Ok(Action::Trivial),
            ("inversion", []) => Ok(Action::Inversion),
            ("power", [k]) => Ok(Action::Power(*k)),
            _ => Err(format!("unknown action `{name}` with parameters {params:?}")),
        }
    }

    fn expr(&mut self) -> std::result::Result<GroupExpr, String> {
        let Some(Token::Ident(name)) = self.next() else {
            return Err("expected a group name".into());
        };
        match name.as_str() {
            "direct" | "semidirect" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                let e = if name == "direct" {
                    GroupExpr::Direct(Box::new(a), Box::new(b))
                } else {
                    self.expect(',')?;
                    GroupExpr::Semidirect(Box::new(a), Box::new(b), self.action()?)
                };
                self.expect(')')?;
                Ok(e)
            }
            _ => {
                let (family, mut params) = match short_alias(&name) {
                    Some((f, n)) => (f, vec![n]),
                    None => (name.as_str(), Vec::new()),
                };
                params.extend(self.params()?);
                let one = |ctor: fn(usize) -> GroupExpr| match params.as_slice() {
                    [n] => Ok(ctor(*n)),
                    _ => Err(format!("`{family}` takes one parameter")),
                };
                match family {
                    "cyclic" => one(GroupExpr::Cyclic),
                    "dihedral" => one(GroupExpr::Dihedral),
                    "symmetric" => one(GroupExpr::Symmetric),
                    "alternating" => one(GroupExpr::Alternating),
                    "elem_abelian" => match params.as_slice() {
                        [p, k] => Ok(GroupExpr::ElemAbelian(*p, *k)),
                        _ => Err("`elem_abelian` takes a prime and an exponent".into()),
                    },
                    _ => Err(format!("unknown group family `{family}`")),
                }
            }
        }
    }
}

fn short_alias(name: &str) -> Option<(&'static str, usize)> {
    let (head, digits) = name.split_at(1);
    let n = digits.parse().ok()?;
    let family = match head {
        "c" => "cyclic",
        "s" => "symmetric",
        "a" => "alternating",
        _ => return None,
    };
    Some((family, n))
}

impl GroupExpr {
    pub fn parse(name: &str) -> Result<GroupExpr> {
        let err = |message: String| Error::Name { name: name.to_string(), message };
        let mut p = Parser { tokens: tokenize(name).map_err(err)?, pos: 0 };
        let e = p.expr().map_err(err)?;
        if p.pos != p.tokens.len() {
            return Err(err(format!("trailing input {:?}", &p.tokens[p.pos..])));
        }
        Ok(e)
    }

    pub fn build(&self, limits: &Limits) -> Result<FiniteGroup> {
        let invalid = |message: &str| Error::Name { name: self.to_string(), message: message.to_string() };
        let gen = |gens: Vec<Permutation>, degree: usize| -> Result<FiniteGroup> {
            Ok(FiniteGroup::generate_with(&gens, degree, limits.clone())?)
        };
        match *self {
            GroupExpr::Cyclic(n) => {
                if n == 0 {
                    return Err(invalid("order must be positive"));
                }
                gen(vec![cycle(n, 0, n)?], n)
            }
            GroupExpr::Dihedral(n) => match n {
                0 => Err(invalid("order must be positive")),
                1 => gen(vec![cycle(2, 0, 2)?], 2),
                2 => gen(vec![cycle(4, 0, 2)?, cycle(4, 2, 2)?], 4),
                _ => {
                    let refl: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
                    gen(vec![cycle(n, 0, n)?, Permutation::from_images(refl)?], n)
                }
            },
            GroupExpr::Symmetric(n) => {
                if n == 0 {
                    return Err(invalid("degree must be positive"));
                }
                let mut gens = vec![cycle(n, 0, n)?];
                if n > 1 {
                    gens.push(cycle(n, 0, 2)?);
                }
                gen(gens, n)
            }
            GroupExpr::Alternating(n) => {
                if n == 0 {
                    return Err(invalid("degree must be positive"));
                }
                let gens = (2..n as u32)
                    .map(|k| Permutation::from_cycles(n, &[vec![0, 1, k]]))
                    .collect::<subform_core::Result<Vec<_>>>()?;
                gen(gens, n)
            }
            GroupExpr::ElemAbelian(p, k) => {
                if !is_prime(p) {
                    return Err(invalid("first parameter must be prime"));
                }
                let degree = (p * k).max(1);
                let gens = (0..k).map(|i| cycle(degree, i * p, p)).collect::<Result<Vec<_>>>()?;
                gen(gens, degree)
            }
            GroupExpr::Direct(ref a, ref b) => Ok(direct_product(&a.build(limits)?, &b.build(limits)?)?.group),
            GroupExpr::Semidirect(ref a, ref b, action) => {
                let (a, b) = (a.build(limits)?, b.build(limits)?);
                let phi: Automorphism = match action {
                    Action::Trivial => (0..a.order() as Elem).collect(),
                    Action::Inversion => (0..a.order() as Elem).map(|x| a.inv(x)).collect(),
                    Action::Power(k) => (0..a.order() as Elem).map(|x| a.pow(x, k as u32)).collect(),
                };
                let actions = vec![phi; b.generator_elems().len()];
                Ok(semidirect_product(&a, &b, &actions)?.group)
            }
        }
    }
}

impl std::fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupExpr::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupExpr::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupExpr::Alternating(n) => write!(f, "alternating:{n}"),
            GroupExpr::ElemAbelian(p, k) => write!(f, "elem_abelian:{p}:{k}"),
            GroupExpr::Direct(a, b) => write!(f, "direct({a},{b})"),
            GroupExpr::Semidirect(a, b, act) => {
                let act = match act {
                    Action::Trivial => "trivial".to_string(),
                    Action::Inversion => "inversion".to_string(),
                    Action::Power(k) => format!("power:{k}"),
                };
                write!(f, "semidirect({a},{b},{act})")
            }
        }
    }
}

fn cycle(degree: usize, start: usize, len: usize) -> Result<Permutation> {
    let c: Vec<u32> = (start as u32..(start + len) as u32).collect();
    Ok(Permutation::from_cycles(degree, &[c])?)
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Builds a group from its name; returns it with the canonical name.
pub fn build_named(name: &str, limits: &Limits) -> Result<(String, FiniteGroup)> {
    let e = GroupExpr::parse(name)?;
    let g = e.build(limits)?;
    Ok((e.to_string(), g))
}
