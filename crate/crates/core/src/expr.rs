//! The construction language: `M(2, Z(2))`, `Quo(Z(8), gen(4))`, ...
//!
//! ```text
//! expr    := NAME '(' arg { ',' arg } ')'
//! arg     := expr | NAME | INT | STRING | '[' [ arg { ',' arg } ] ']'
//! ```
//!
//! Whitespace is ignored. Parse errors carry 1-based byte offsets.

use std::fmt;
use std::path::{Path, PathBuf};

use crate::constructions::{
    constant_diagonal, corner, direct_product, dorroh, example_weak_symmetric_component,
    formal_triangular, matrix_ring, quotient, subring_generated, trivial_morita,
    truncated_skew_poly, upper_triangular, zmod, Bimodule, RingHom,
};
use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::invariants::two_sided_ideal_generated;
use crate::mask::SubsetMask;
use crate::ring::{escape, ElementId, FiniteRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingExpr {
    Zmod(usize),
    Matrix(usize, Box<RingExpr>),
    Triangular(usize, Box<RingExpr>),
    ConstantDiagonal(usize, Box<RingExpr>),
    Product(Box<RingExpr>, Box<RingExpr>),
    Quotient(Box<RingExpr>, IdealSpec),
    Corner(Box<RingExpr>, ElementSpec),
    FormalTriangular(Box<RingExpr>, Box<RingExpr>, ModuleSpec),
    Morita(Box<RingExpr>, Box<RingExpr>, ModuleSpec, ModuleSpec),
    Dorroh(Box<RingExpr>, ModuleSpec),
    SkewTrunc(Box<RingExpr>, HomSpec, usize),
    WeakSymmetricComponent(usize),
    Subring(Box<RingExpr>, Vec<ElementSpec>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealSpec {
    Jacobson,
    /// Upper nilradical.
    Nstar,
    /// Lower nilradical.
    Nlower,
    Generated(Vec<ElementId>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementSpec {
    Index(ElementId),
    Label(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomSpec {
    Identity,
    Swap,
    File(String),
}

/// Where a bimodule comes from. `reg`, `zero` and `ideal(...)` are built
/// from the ring(s) of the enclosing construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    Regular,
    Zero,
    Ideal(Vec<ElementId>),
    File(String),
}

/// How a ring was assembled, kept for rules that relate a ring to its
/// components.
#[derive(Clone, Debug)]
pub enum Origin {
    Plain,
    Morita { left: Box<FiniteRing>, right: Box<FiniteRing> },
    FormalTriangular { left: Box<FiniteRing>, right: Box<FiniteRing> },
    Dorroh { base: Box<FiniteRing>, quasi_regular: bool },
}

/// An evaluated expression.
#[derive(Clone, Debug)]
pub struct Built {
    pub ring: FiniteRing,
    pub origin: Origin,
}

// ---------------------------------------------------------------- display

fn quoted(s: &str) -> String {
    format!("\"{}\"", escape(s))
}

fn list<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealSpec::Jacobson => f.write_str("J"),
            IdealSpec::Nstar => f.write_str("Nstar"),
            IdealSpec::Nlower => f.write_str("Nlower"),
            IdealSpec::Generated(g) => write!(f, "gen({})", list(g)),
        }
    }
}

impl fmt::Display for ElementSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementSpec::Index(i) => write!(f, "{i}"),
            ElementSpec::Label(l) => f.write_str(&quoted(l)),
        }
    }
}

impl fmt::Display for HomSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomSpec::Identity => f.write_str("id"),
            HomSpec::Swap => f.write_str("swap"),
            HomSpec::File(p) => f.write_str(&quoted(p)),
        }
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSpec::Regular => f.write_str("reg"),
            ModuleSpec::Zero => f.write_str("zero"),
            ModuleSpec::Ideal(g) => write!(f, "ideal({})", list(g)),
            ModuleSpec::File(p) => f.write_str(&quoted(p)),
        }
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zmod(n) => write!(f, "Z({n})"),
            RingExpr::Matrix(k, e) => write!(f, "M({k}, {e})"),
            RingExpr::Triangular(k, e) => write!(f, "T({k}, {e})"),
            RingExpr::ConstantDiagonal(k, e) => write!(f, "CD({k}, {e})"),
            RingExpr::Product(a, b) => write!(f, "Prod({a}, {b})"),
            RingExpr::Quotient(e, i) => write!(f, "Quo({e}, {i})"),
            RingExpr::Corner(e, x) => write!(f, "Corner({e}, {x})"),
            RingExpr::FormalTriangular(a, b, m) => write!(f, "Tri({a}, {b}, {m})"),
            RingExpr::Morita(a, b, m, p) => write!(f, "Morita({a}, {b}, {m}, {p})"),
            RingExpr::Dorroh(e, m) => write!(f, "Dorroh({e}, {m})"),
            RingExpr::SkewTrunc(e, h, k) => write!(f, "SkewTrunc({e}, {h}, {k})"),
            RingExpr::WeakSymmetricComponent(n) => write!(f, "WSC({n})"),
            RingExpr::Subring(e, xs) => write!(f, "Sub({e}, [{}])", list(xs)),
        }
    }
}

// ---------------------------------------------------------------- parsing

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(usize),
    Str(String),
    Punct(char),
    End,
}

struct Lexer<'s> {
    src: &'s str,
    pos: usize,
}

impl Lexer<'_> {
    fn err(offset: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: offset + 1,
            message: message.into(),
        }
    }

    /// Next token and its 0-based start.
    fn next(&mut self) -> Result<(Tok, usize)> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&c) = bytes.get(start) else {
            return Ok((Tok::End, start));
        };
        match c {
            b'(' | b')' | b',' | b'[' | b']' => {
                self.pos += 1;
                Ok((Tok::Punct(c as char), start))
            }
            b'0'..=b'9' => {
                while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = &self.src[start..self.pos];
                digits
                    .parse()
                    .map(|n| (Tok::Int(n), start))
                    .map_err(|_| Self::err(start, format!("integer `{digits}` out of range")))
            }
            b'"' => {
                let mut out = String::new();
                let mut chars = self.src[start + 1..].char_indices();
                loop {
                    match chars.next() {
                        None => return Err(Self::err(self.src.len(), "unterminated string")),
                        Some((i, '"')) => {
                            self.pos = start + 1 + i + 1;
                            return Ok((Tok::Str(out), start));
                        }
                        Some((_, '\\')) => match chars.next() {
                            Some((_, c @ ('"' | '\\'))) => out.push(c),
                            Some((i, c)) => {
                                return Err(Self::err(start + 1 + i, format!("bad escape `\\{c}`")))
                            }
                            None => return Err(Self::err(self.src.len(), "unterminated string")),
                        },
                        Some((_, c)) => out.push(c),
                    }
                }
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while self.pos < bytes.len()
                    && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok((Tok::Ident(self.src[start..self.pos].to_string()), start))
            }
            _ => {
                let ch = self.src[start..].chars().next().unwrap_or('?');
                Err(Self::err(start, format!("unexpected character `{ch}`")))
            }
        }
    }
}

/// Untyped argument tree; converted to [`RingExpr`] after parsing.
#[derive(Debug)]
enum Arg {
    Call { name: String, args: Vec<Arg>, at: usize },
    Word { name: String, at: usize },
    Int { value: usize, at: usize },
    Str { value: String, at: usize },
    List { items: Vec<Arg>, at: usize },
}

impl Arg {
    fn at(&self) -> usize {
        match self {
            Arg::Call { at, .. }
            | Arg::Word { at, .. }
            | Arg::Int { at, .. }
            | Arg::Str { at, .. }
            | Arg::List { at, .. } => *at,
        }
    }
}

struct Parser<'s> {
    lexer: Lexer<'s>,
    peeked: Option<(Tok, usize)>,
}

impl<'s> Parser<'s> {
    fn new(src: &'s str) -> Self {
        Self {
            lexer: Lexer { src, pos: 0 },
            peeked: None,
        }
    }

    fn peek(&mut self) -> Result<&(Tok, usize)> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lexer.next()?);
        }
        Ok(self.peeked.as_ref().expect("just filled"))
    }

    fn bump(&mut self) -> Result<(Tok, usize)> {
        self.peek()?;
        Ok(self.peeked.take().expect("just filled"))
    }

    fn unexpected(tok: &Tok, at: usize, wanted: &str) -> Error {
        let found = match tok {
            Tok::End => return Lexer::err(at, format!("unexpected end of input, expected {wanted}")),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Str(s) => format!("\"{s}\""),
            Tok::Punct(c) => format!("`{c}`"),
        };
        Lexer::err(at, format!("expected {wanted}, found {found}"))
    }

    /// Comma-separated args up to `close`; the opener is already consumed.
    fn args(&mut self, close: char) -> Result<Vec<Arg>> {
        let mut out = Vec::new();
        if self.peek()?.0 == Tok::Punct(close) {
            self.bump()?;
            return Ok(out);
        }
        loop {
            out.push(self.arg()?);
            match self.bump()? {
                (Tok::Punct(','), _) => {}
                (Tok::Punct(c), _) if c == close => return Ok(out),
                (tok, at) => return Err(Self::unexpected(&tok, at, &format!("`,` or `{close}`"))),
            }
        }
    }

    fn arg(&mut self) -> Result<Arg> {
        match self.bump()? {
            (Tok::Ident(name), at) => {
                if self.peek()?.0 == Tok::Punct('(') {
                    self.bump()?;
                    let args = self.args(')')?;
                    Ok(Arg::Call { name, args, at })
                } else {
                    Ok(Arg::Word { name, at })
                }
            }
            (Tok::Int(value), at) => Ok(Arg::Int { value, at }),
            (Tok::Str(value), at) => Ok(Arg::Str { value, at }),
            (Tok::Punct('['), at) => Ok(Arg::List {
                items: self.args(']')?,
                at,
            }),
            (tok, at) => Err(Self::unexpected(&tok, at, "an argument")),
        }
    }
}

fn want_int(a: &Arg) -> Result<usize> {
    match a {
        Arg::Int { value, .. } => Ok(*value),
        other => Err(Lexer::err(other.at(), "expected an integer")),
    }
}

fn want_ints(args: &[Arg]) -> Result<Vec<usize>> {
    args.iter().map(want_int).collect()
}

fn want_element(a: &Arg) -> Result<ElementSpec> {
    match a {
        Arg::Int { value, .. } => Ok(ElementSpec::Index(*value)),
        Arg::Str { value, .. } => Ok(ElementSpec::Label(value.clone())),
        other => Err(Lexer::err(other.at(), "expected an element index or quoted label")),
    }
}

fn want_ideal(a: &Arg) -> Result<IdealSpec> {
    match a {
        Arg::Word { name, at } => match name.as_str() {
            "J" => Ok(IdealSpec::Jacobson),
            "Nstar" => Ok(IdealSpec::Nstar),
            "Nlower" => Ok(IdealSpec::Nlower),
            _ => Err(Lexer::err(*at, format!("unknown ideal `{name}`"))),
        },
        Arg::Call { name, args, .. } if name == "gen" => Ok(IdealSpec::Generated(want_ints(args)?)),
        other => Err(Lexer::err(other.at(), "expected J, Nstar, Nlower or gen(...)")),
    }
}

fn want_module(a: &Arg) -> Result<ModuleSpec> {
    match a {
        Arg::Word { name, .. } if name == "reg" => Ok(ModuleSpec::Regular),
        Arg::Word { name, .. } if name == "zero" => Ok(ModuleSpec::Zero),
        Arg::Call { name, args, .. } if name == "ideal" => Ok(ModuleSpec::Ideal(want_ints(args)?)),
        Arg::Str { value, .. } => Ok(ModuleSpec::File(value.clone())),
        other => Err(Lexer::err(other.at(), "expected reg, zero, ideal(...) or a quoted file path")),
    }
}

fn want_hom(a: &Arg) -> Result<HomSpec> {
    match a {
        Arg::Word { name, .. } if name == "id" => Ok(HomSpec::Identity),
        Arg::Word { name, .. } if name == "swap" => Ok(HomSpec::Swap),
        Arg::Str { value, .. } => Ok(HomSpec::File(value.clone())),
        other => Err(Lexer::err(other.at(), "expected id, swap or a quoted file path")),
    }
}

fn want_expr(a: &Arg) -> Result<Box<RingExpr>> {
    convert(a).map(Box::new)
}

fn convert(a: &Arg) -> Result<RingExpr> {
    let (name, args, at) = match a {
        Arg::Call { name, args, at } => (name.as_str(), args, *at),
        other => return Err(Lexer::err(other.at(), "expected a ring expression")),
    };
    let arity = match name {
        "Z" | "WSC" => 1,
        "M" | "T" | "CD" | "Prod" | "Quo" | "Corner" | "Dorroh" | "Sub" => 2,
        "Tri" | "SkewTrunc" => 3,
        "Morita" => 4,
        _ => return Err(Lexer::err(at, format!("unknown constructor `{name}`"))),
    };
    if args.len() != arity {
        return Err(Lexer::err(
            at,
            format!("arity mismatch: `{name}` takes {arity} argument(s), found {}", args.len()),
        ));
    }
    Ok(match name {
        "Z" => RingExpr::Zmod(want_int(&args[0])?),
        "WSC" => RingExpr::WeakSymmetricComponent(want_int(&args[0])?),
        "M" => RingExpr::Matrix(want_int(&args[0])?, want_expr(&args[1])?),
        "T" => RingExpr::Triangular(want_int(&args[0])?, want_expr(&args[1])?),
        "CD" => RingExpr::ConstantDiagonal(want_int(&args[0])?, want_expr(&args[1])?),
        "Prod" => RingExpr::Product(want_expr(&args[0])?, want_expr(&args[1])?),
        "Quo" => RingExpr::Quotient(want_expr(&args[0])?, want_ideal(&args[1])?),
        "Corner" => RingExpr::Corner(want_expr(&args[0])?, want_element(&args[1])?),
        "Dorroh" => RingExpr::Dorroh(want_expr(&args[0])?, want_module(&args[1])?),
        "Sub" => match &args[1] {
            Arg::List { items, .. } => RingExpr::Subring(
                want_expr(&args[0])?,
                items.iter().map(want_element).collect::<Result<_>>()?,
            ),
            other => return Err(Lexer::err(other.at(), "expected `[` element list")),
        },
        "Tri" => RingExpr::FormalTriangular(
            want_expr(&args[0])?,
            want_expr(&args[1])?,
            want_module(&args[2])?,
        ),
        "SkewTrunc" => RingExpr::SkewTrunc(
            want_expr(&args[0])?,
            want_hom(&args[1])?,
            want_int(&args[2])?,
        ),
        "Morita" => RingExpr::Morita(
            want_expr(&args[0])?,
            want_expr(&args[1])?,
            want_module(&args[2])?,
            want_module(&args[3])?,
        ),
        _ => unreachable!("arity table covers every constructor"),
    })
}

impl RingExpr {
    pub fn parse(src: &str) -> Result<Self> {
        let mut p = Parser::new(src);
        let arg = p.arg()?;
        match p.bump()? {
            (Tok::End, _) => convert(&arg),
            (tok, at) => Err(Parser::unexpected(&tok, at, "end of input")),
        }
    }

    /// Builds the ring, resolving file paths against `base_dir`. The result
    /// is named by the canonical form of the expression.
    pub fn eval(&self, base_dir: &Path) -> Result<Built> {
        let mut built = self.eval_inner(base_dir)?;
        built.ring = built.ring.with_name(self.to_string());
        Ok(built)
    }

    fn eval_inner(&self, dir: &Path) -> Result<Built> {
        let plain = |ring: FiniteRing| Built {
            ring,
            origin: Origin::Plain,
        };
        let ring_of = |e: &RingExpr| e.eval(dir).map(|b| b.ring);
        Ok(match self {
            RingExpr::Zmod(n) => plain(zmod(*n)?),
            RingExpr::Matrix(k, e) => plain(matrix_ring(&ring_of(e)?, *k)?),
            RingExpr::Triangular(k, e) => plain(upper_triangular(&ring_of(e)?, *k)?),
            RingExpr::ConstantDiagonal(k, e) => plain(constant_diagonal(&ring_of(e)?, *k)?),
            RingExpr::Product(a, b) => plain(direct_product(&ring_of(a)?, &ring_of(b)?)?),
            RingExpr::Quotient(e, spec) => {
                let r = ring_of(e)?;
                let ideal = resolve_ideal(&r, spec)?;
                plain(quotient(&r, &ideal)?.0)
            }
            RingExpr::Corner(e, x) => {
                let r = ring_of(e)?;
                plain(corner(&r, resolve_element(&r, x)?)?)
            }
            RingExpr::Subring(e, xs) => {
                let r = ring_of(e)?;
                let gens = xs
                    .iter()
                    .map(|x| resolve_element(&r, x))
                    .collect::<Result<Vec<_>>>()?;
                plain(subring_generated(&r, &gens)?)
            }
            RingExpr::WeakSymmetricComponent(n) => plain(example_weak_symmetric_component(*n)?),
            RingExpr::SkewTrunc(e, h, k) => {
                let r = ring_of(e)?;
                let psi = match h {
                    HomSpec::Identity => RingHom::identity(&r),
                    HomSpec::Swap => match &**e {
                        RingExpr::Product(a, _) => RingHom::swap_factors(&r, ring_of(a)?.order())?,
                        _ => {
                            return Err(Error::NotAHomomorphism(
                                "swap needs a product of two equal factors".into(),
                            ))
                        }
                    },
                    HomSpec::File(p) => RingHom::from_text(&r, &r, &read(dir, p)?)?,
                };
                plain(truncated_skew_poly(&r, &psi, *k)?)
            }
            RingExpr::FormalTriangular(a, b, m) => {
                let (left, right) = (ring_of(a)?, ring_of(b)?);
                let module = resolve_module(dir, &left, &right, m)?;
                Built {
                    ring: formal_triangular(&left, &right, &module)?,
                    origin: Origin::FormalTriangular {
                        left: Box::new(left),
                        right: Box::new(right),
                    },
                }
            }
            RingExpr::Morita(a, b, m, p) => {
                let (left, right) = (ring_of(a)?, ring_of(b)?);
                let m_mod = resolve_module(dir, &left, &right, m)?;
                let p_mod = resolve_module(dir, &right, &left, p)?;
                Built {
                    ring: trivial_morita(&left, &right, &m_mod, &p_mod)?,
                    origin: Origin::Morita {
                        left: Box::new(left),
                        right: Box::new(right),
                    },
                }
            }
            RingExpr::Dorroh(e, m) => {
                let base = ring_of(e)?;
                let module = resolve_module(dir, &base, &base, m)?;
                let ext = dorroh(&base, &module)?;
                Built {
                    ring: ext.ring,
                    origin: Origin::Dorroh {
                        base: Box::new(base),
                        quasi_regular: ext.quasi_regular,
                    },
                }
            }
        })
    }
}

fn read(dir: &Path, path: &str) -> Result<String> {
    let full: PathBuf = dir.join(path);
    std::fs::read_to_string(&full)
        .map_err(|e| Error::Io(format!("{}: {e}", full.display())))
}

fn resolve_element(r: &FiniteRing, x: &ElementSpec) -> Result<ElementId> {
    match x {
        ElementSpec::Index(i) if *i < r.order() => Ok(*i),
        ElementSpec::Index(i) => Err(Error::Element(*i)),
        ElementSpec::Label(l) => r
            .find_label(l)
            .ok_or_else(|| Error::Structure(format!("no element labeled `{l}` in {}", r.name()))),
    }
}

fn generated(r: &FiniteRing, gens: &[ElementId]) -> Result<SubsetMask> {
    if let Some(&bad) = gens.iter().find(|&&g| g >= r.order()) {
        return Err(Error::Element(bad));
    }
    Ok(two_sided_ideal_generated(
        r,
        &SubsetMask::from_indices(r.order(), gens.iter().copied()),
    ))
}

fn resolve_ideal(r: &FiniteRing, spec: &IdealSpec) -> Result<SubsetMask> {
    let ctx = RingContext::new(r);
    match spec {
        IdealSpec::Jacobson => Ok(ctx.jacobson().clone()),
        IdealSpec::Nstar => ctx.upper_nil().cloned(),
        IdealSpec::Nlower => ctx.lower_nil().cloned(),
        IdealSpec::Generated(g) => generated(r, g),
    }
}

fn resolve_module(
    dir: &Path,
    left: &FiniteRing,
    right: &FiniteRing,
    spec: &ModuleSpec,
) -> Result<Bimodule> {
    let same = || -> Result<()> {
        if left.same_tables(right) {
            Ok(())
        } else {
            Err(Error::Bimodule(format!(
                "`{spec}` needs both scalar rings equal, got {} and {}",
                left.name(),
                right.name()
            )))
        }
    };
    match spec {
        ModuleSpec::Zero => Ok(Bimodule::zero_module(left, right)),
        ModuleSpec::Regular => {
            same()?;
            Ok(Bimodule::regular(left))
        }
        ModuleSpec::Ideal(g) => {
            same()?;
            Bimodule::from_ideal(left, &generated(left, g)?)
        }
        ModuleSpec::File(p) => Bimodule::from_text(&read(dir, p)?, p.as_str()),
    }
}

/// One expression per line; `#` starts a comment. A line
/// `@random seed=N count=M` requests seeded random entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CorpusFile {
    pub exprs: Vec<RingExpr>,
    pub random: Vec<(u64, usize)>,
}

impl CorpusFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = CorpusFile::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let wrap = |e: Error| match e {
                Error::Parse { offset, message } => {
                    Error::Parse { offset, message: format!("line {}: {message}", lineno + 1) }
                }
                other => other,
            };
            if let Some(rest) = line.strip_prefix("@random") {
                let (mut seed, mut count) = (None, None);
                for field in rest.split_whitespace() {
                    let (k, v) = field.split_once('=').unwrap_or((field, ""));
                    let v: Option<u64> = v.parse().ok();
                    match (k, v) {
                        ("seed", Some(v)) => seed = Some(v),
                        ("count", Some(v)) => count = Some(v as usize),
                        _ => {
                            return Err(wrap(Error::Parse {
                                offset: 1,
                                message: format!("bad @random field `{field}`"),
                            }))
                        }
                    }
                }
                out.random.push((seed.unwrap_or(0), count.unwrap_or(0)));
            } else {
                out.exprs.push(RingExpr::parse(line).map_err(wrap)?);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn here() -> &'static Path {
        Path::new(".")
    }

    #[test]
    fn parses_and_prints_canonically() {
        for src in [
            "M(2, Z(2))",
            "Quo(Z(8), gen(4))",
            "Quo(T(2, Z(2)), J)",
            "Corner(M(2, Z(2)), 8)",
            "Corner(M(2, Z(2)), \"[[1,0],[0,0]]\")",
            "Tri(Z(2), Z(2), reg)",
            "Morita(Z(2), Z(3), zero, zero)",
            "Dorroh(Z(4), ideal(2))",
            "SkewTrunc(Prod(Z(2), Z(2)), swap, 2)",
            "Sub(M(2, Z(2)), [8, 1])",
            "WSC(0)",
        ] {
            let e = RingExpr::parse(src).unwrap();
            assert_eq!(e.to_string(), src);
        }
        let e = RingExpr::parse("  M ( 2 ,Z(2) )").unwrap();
        assert_eq!(e, RingExpr::Matrix(2, Box::new(RingExpr::Zmod(2))));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let offset = |src: &str| match RingExpr::parse(src) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("{src}: {other:?}"),
        };
        assert_eq!(offset("T(2"), 4);
        assert_eq!(offset("Q(2)"), 1);
        assert_eq!(offset("M(2)"), 1);
        assert_eq!(offset("M(2, Z(2)) x"), 12);
        assert_eq!(offset("M(x, Z(2))"), 3);
        assert_eq!(offset("Z(2"), 4);
        assert_eq!(offset("Z(2]"), 4);
    }

    #[test]
    fn quotient_of_z8_by_4_is_z4() {
        let q = RingExpr::parse("Quo(Z(8), gen(4))").unwrap().eval(here()).unwrap().ring;
        assert!(q.same_tables(&zmod(4).unwrap()));
        assert_eq!(q.name(), "Quo(Z(8), gen(4))");
    }

    #[test]
    fn radical_quotients() {
        let t = RingExpr::parse("Quo(T(2, Z(2)), J)").unwrap().eval(here()).unwrap().ring;
        assert_eq!(t.order(), 4);
        let z = RingExpr::parse("Quo(Z(8), Nlower)").unwrap().eval(here()).unwrap().ring;
        assert!(z.same_tables(&zmod(2).unwrap()));
    }

    #[test]
    fn corner_by_label_matches_index() {
        let by_index = RingExpr::parse("Corner(M(2, Z(2)), 8)").unwrap().eval(here()).unwrap();
        let by_label = RingExpr::parse("Corner(M(2, Z(2)), \"[[1,0],[0,0]]\")")
            .unwrap()
            .eval(here())
            .unwrap();
        assert!(by_index.ring.same_tables(&by_label.ring));
        assert_eq!(by_index.ring.order(), 2);
    }

    #[test]
    fn origins_are_recorded() {
        let d = RingExpr::parse("Dorroh(Z(4), ideal(2))").unwrap().eval(here()).unwrap();
        assert_eq!(d.ring.order(), 8);
        assert!(matches!(d.origin, Origin::Dorroh { quasi_regular: true, .. }));
        let m = RingExpr::parse("Morita(Z(2), Z(2), reg, reg)").unwrap().eval(here()).unwrap();
        assert_eq!(m.ring.order(), 16);
        assert!(matches!(m.origin, Origin::Morita { .. }));
        assert!(RingExpr::parse("Tri(Z(2), Z(3), reg)").unwrap().eval(here()).is_err());
    }

    #[test]
    fn missing_files_are_io_errors() {
        let e = RingExpr::parse("Dorroh(Z(2), \"nope.bim\")").unwrap().eval(here());
        assert!(matches!(e, Err(Error::Io(_))));
    }

    #[test]
    fn corpus_files() {
        let c = CorpusFile::parse("# demo\nZ(4)\n\nM(2, Z(2))  # trailing\n@random seed=7 count=3\n")
            .unwrap();
        assert_eq!(c.exprs.len(), 2);
        assert_eq!(c.random, vec![(7, 3)]);
        match CorpusFile::parse("Z(4)\nT(2") {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 4);
                assert!(message.starts_with("line 2"));
            }
            other => panic!("{other:?}"),
        }
    }
}
