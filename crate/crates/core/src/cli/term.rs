//! The term language.
//!
//! ```text
//! term   := netlit | "(" "compose" opspec term+ ")"
//! opspec := "(" "op" "(" nat+ "->" nat ")" perm netlit ")"
//! perm   := "id" | "(" "perm" nat+ ")"
//! netlit := "(" "net" model nat group+ [attrs] ")"
//! group  := "{" [edge ("," edge)*] "}"
//! edge   := nat ("-" nat)* [":" label]
//! attrs  := "(" "at" attr* ")"
//! attr   := word | "(" num num ")"
//! ```
//!
//! A tensor model such as `sg*mg` takes one group per factor. Hyperedges are
//! chains `1-2-3`. `;` starts a comment that runs to the end of the line.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Net(NetLit),
    Compose { op: OpSpec, children: Vec<Term> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpSpec {
    pub inputs: Vec<usize>,
    pub output: usize,
    /// One-line images; `None` is the identity.
    pub perm: Option<Vec<usize>>,
    pub net: NetLit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetLit {
    pub model: String,
    pub n: usize,
    pub groups: Vec<Vec<EdgeLit>>,
    pub attrs: Option<Vec<AttrLit>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLit {
    pub ends: Vec<usize>,
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AttrLit {
    Point(String, String),
    Symbol(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    LBrace,
    RBrace,
    Comma,
    Arrow,
    Word(String),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Open => f.write_str("'('"),
            Tok::Close => f.write_str("')'"),
            Tok::LBrace => f.write_str("'{'"),
            Tok::RBrace => f.write_str("'}'"),
            Tok::Comma => f.write_str("','"),
            Tok::Arrow => f.write_str("'->'"),
            Tok::Word(w) => write!(f, "'{w}'"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

fn lex(text: &str) -> (Vec<(Tok, Pos)>, Pos) {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let mut pos = Pos { line: 1, column: 1 };
    let mut word = String::new();
    let mut word_pos = pos;
    let advance = |c: char, pos: &mut Pos| {
        if c == '\n' {
            pos.line += 1;
            pos.column = 1;
        } else {
            pos.column += 1;
        }
    };
    while let Some(c) = chars.next() {
        let here = pos;
        advance(c, &mut pos);
        let single = match c {
            '(' => Some(Tok::Open),
            ')' => Some(Tok::Close),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            ',' => Some(Tok::Comma),
            '-' if chars.peek() == Some(&'>') => {
                chars.next();
                pos.column += 1;
                Some(Tok::Arrow)
            }
            _ => None,
        };
        let ends_word = single.is_some() || c == ';' || c.is_whitespace();
        if ends_word && !word.is_empty() {
            out.push((Tok::Word(std::mem::take(&mut word)), word_pos));
        }
        if let Some(t) = single {
            out.push((t, here));
        } else if c == ';' {
            for c in chars.by_ref() {
                advance(c, &mut pos);
                if c == '\n' {
                    break;
                }
            }
        } else if !c.is_whitespace() {
            if word.is_empty() {
                word_pos = here;
            }
            word.push(c);
        }
    }
    if !word.is_empty() {
        out.push((Tok::Word(word), word_pos));
    }
    (out, pos)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Parser {
    fn pos(&self) -> Pos {
        self.toks.get(self.at).map_or(self.end, |t| t.1)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        let Pos { line, column } = self.pos();
        Err(Error::Parse {
            line,
            column,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn next(&mut self, what: &str) -> Result<Tok> {
        match self.toks.get(self.at) {
            Some((t, _)) => {
                self.at += 1;
                Ok(t.clone())
            }
            None => self.fail(format!("expected {what}, found end of input")),
        }
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        match self.peek() {
            Some(t) if *t == want => {
                self.at += 1;
                Ok(())
            }
            Some(t) => {
                let msg = format!("expected {want}, found {t}");
                self.fail(msg)
            }
            None => self.fail(format!("expected {want}, found end of input")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        self.expect(Tok::Word(kw.into()))
    }

    fn word(&mut self, what: &str) -> Result<String> {
        let start = self.at;
        match self.next(what)? {
            Tok::Word(w) => Ok(w),
            t => {
                self.at = start;
                self.fail(format!("expected {what}, found {t}"))
            }
        }
    }

    fn nat(&mut self, what: &str) -> Result<usize> {
        let start = self.at;
        let w = self.word(what)?;
        w.parse().or_else(|_| {
            self.at = start;
            self.fail(format!("expected {what}, found '{w}'"))
        })
    }

    fn term(&mut self) -> Result<Term> {
        self.expect(Tok::Open)?;
        match self.peek() {
            Some(Tok::Word(w)) if w == "net" => {
                self.at -= 1;
                Ok(Term::Net(self.netlit()?))
            }
            Some(Tok::Word(w)) if w == "compose" => {
                self.at += 1;
                let op = self.opspec()?;
                let mut children = Vec::new();
                while self.peek() != Some(&Tok::Close) {
                    children.push(self.term()?);
                }
                if children.is_empty() {
                    return self.fail("compose needs at least one argument term");
                }
                self.expect(Tok::Close)?;
                Ok(Term::Compose { op, children })
            }
            Some(t) => {
                let msg = format!("expected 'net' or 'compose', found {t}");
                self.fail(msg)
            }
            None => self.fail("expected 'net' or 'compose', found end of input"),
        }
    }

    fn opspec(&mut self) -> Result<OpSpec> {
        self.expect(Tok::Open)?;
        self.keyword("op")?;
        self.expect(Tok::Open)?;
        let mut inputs = vec![self.nat("an input arity")?];
        while self.peek() != Some(&Tok::Arrow) {
            inputs.push(self.nat("an input arity or '->'")?);
        }
        self.expect(Tok::Arrow)?;
        let output = self.nat("the output arity")?;
        self.expect(Tok::Close)?;
        let perm = match self.peek() {
            Some(Tok::Word(w)) if w == "id" => {
                self.at += 1;
                None
            }
            _ => {
                self.expect(Tok::Open)?;
                self.keyword("perm")?;
                let mut images = vec![self.nat("a permutation image")?];
                while self.peek() != Some(&Tok::Close) {
                    images.push(self.nat("a permutation image")?);
                }
                self.expect(Tok::Close)?;
                Some(images)
            }
        };
        let net = self.netlit()?;
        self.expect(Tok::Close)?;
        Ok(OpSpec {
            inputs,
            output,
            perm,
            net,
        })
    }

    fn netlit(&mut self) -> Result<NetLit> {
        self.expect(Tok::Open)?;
        self.keyword("net")?;
        let model = self.word("a model identifier")?;
        let n = self.nat("a vertex count")?;
        let mut groups = vec![self.group()?];
        while self.peek() == Some(&Tok::LBrace) {
            groups.push(self.group()?);
        }
        let attrs = if self.peek() == Some(&Tok::Open) {
            Some(self.attrs()?)
        } else {
            None
        };
        self.expect(Tok::Close)?;
        Ok(NetLit {
            model,
            n,
            groups,
            attrs,
        })
    }

    fn group(&mut self) -> Result<Vec<EdgeLit>> {
        self.expect(Tok::LBrace)?;
        let mut edges = Vec::new();
        if self.peek() == Some(&Tok::RBrace) {
            self.at += 1;
            return Ok(edges);
        }
        loop {
            let start = self.pos();
            let mut text = self.word("an edge")?;
            while let Some(Tok::Word(w)) = self.peek() {
                text.push(' ');
                text.push_str(w);
                self.at += 1;
            }
            edges.push(parse_edge(&text).map_err(|message| Error::Parse {
                line: start.line,
                column: start.column,
                message,
            })?);
            match self.next("',' or '}'")? {
                Tok::Comma => {}
                Tok::RBrace => return Ok(edges),
                t => {
                    self.at -= 1;
                    return self.fail(format!("expected ',' or '}}', found {t}"));
                }
            }
        }
    }

    fn attrs(&mut self) -> Result<Vec<AttrLit>> {
        self.expect(Tok::Open)?;
        self.keyword("at")?;
        let mut out = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::Close) => {
                    self.at += 1;
                    return Ok(out);
                }
                Some(Tok::Open) => {
                    self.at += 1;
                    let x = self.word("an x coordinate")?;
                    let y = self.word("a y coordinate")?;
                    self.expect(Tok::Close)?;
                    out.push(AttrLit::Point(x, y));
                }
                _ => out.push(AttrLit::Symbol(self.word("an attribute")?)),
            }
        }
    }
}

fn parse_edge(text: &str) -> std::result::Result<EdgeLit, String> {
    let (ends, label) = match text.split_once(':') {
        Some((e, l)) => (e, Some(l.trim())),
        None => (text, None),
    };
    let ends = ends
        .split('-')
        .map(|v| {
            let v = v.trim();
            v.parse::<usize>()
                .map_err(|_| format!("bad vertex '{v}' in edge '{text}'"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    match label {
        Some(l) if l.is_empty() || l.contains(char::is_whitespace) => {
            Err(format!("bad label in edge '{text}'"))
        }
        _ => Ok(EdgeLit {
            ends,
            label: label.map(str::to_string),
        }),
    }
}

/// Parses one term; trailing input is an error.
pub fn parse_term(text: &str) -> Result<Term> {
    let (toks, end) = lex(text);
    let mut p = Parser { toks, at: 0, end };
    let t = p.term()?;
    if let Some(extra) = p.peek() {
        let msg = format!("unexpected {extra} after the term");
        return p.fail(msg);
    }
    Ok(t)
}

impl fmt::Display for EdgeLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ends: Vec<String> = self.ends.iter().map(usize::to_string).collect();
        f.write_str(&ends.join("-"))?;
        if let Some(l) = &self.label {
            write!(f, ":{l}")?;
        }
        Ok(())
    }
}

impl fmt::Display for NetLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(net {} {}", self.model, self.n)?;
        for g in &self.groups {
            let edges: Vec<String> = g.iter().map(EdgeLit::to_string).collect();
            write!(f, " {{{}}}", edges.join(","))?;
        }
        if let Some(attrs) = &self.attrs {
            f.write_str(" (at")?;
            for a in attrs {
                match a {
                    AttrLit::Point(x, y) => write!(f, " ({x} {y})")?,
                    AttrLit::Symbol(s) => write!(f, " {s}")?,
                }
            }
            f.write_str(")")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for OpSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inputs: Vec<String> = self.inputs.iter().map(usize::to_string).collect();
        write!(f, "(op ({} -> {}) ", inputs.join(" "), self.output)?;
        match &self.perm {
            None => f.write_str("id")?,
            Some(images) => {
                let images: Vec<String> = images.iter().map(usize::to_string).collect();
                write!(f, "(perm {})", images.join(" "))?;
            }
        }
        write!(f, " {})", self.net)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Net(lit) => lit.fmt(f),
            Term::Compose { op, children } => {
                write!(f, "(compose {op}")?;
                for c in children {
                    write!(f, " {c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Location of a subterm: `$` is the root, `$.2` its second argument, and
/// `$.2.op` the operation of that argument.
pub fn child_path(parent: &str, i: usize) -> String {
    format!("{parent}.{}", i + 1)
}

pub fn op_path(parent: &str) -> String {
    format!("{parent}.op")
}

pub const ROOT: &str = "$";

fn type_error<T>(path: &str, message: String) -> Result<T> {
    Err(Error::Type {
        path: path.into(),
        message,
    })
}

/// Checks profiles against arguments and returns the output type.
pub fn typecheck(t: &Term) -> Result<usize> {
    check_at(t, ROOT)
}

fn check_at(t: &Term, path: &str) -> Result<usize> {
    match t {
        Term::Net(lit) => Ok(lit.n),
        Term::Compose { op, children } => {
            let here = op_path(path);
            let total: usize = op.inputs.iter().sum();
            if total != op.output {
                return type_error(
                    &here,
                    format!(
                        "empty homset: inputs {:?} sum to {total}, not {}",
                        op.inputs, op.output
                    ),
                );
            }
            if let Some(images) = &op.perm {
                if images.len() != op.output {
                    return type_error(
                        &here,
                        format!("permutation has degree {}, expected {}", images.len(), op.output),
                    );
                }
            }
            if op.net.n != op.output {
                return type_error(
                    &here,
                    format!("network has {} vertices, expected {}", op.net.n, op.output),
                );
            }
            if op.inputs.len() != children.len() {
                return type_error(
                    path,
                    format!(
                        "operation takes {} inputs, given {}",
                        op.inputs.len(),
                        children.len()
                    ),
                );
            }
            for (i, (c, want)) in children.iter().zip(&op.inputs).enumerate() {
                let p = child_path(path, i);
                let got = check_at(c, &p)?;
                if got != *want {
                    return type_error(&p, format!("has type {got}, expected {want}"));
                }
            }
            Ok(op.output)
        }
    }
}
