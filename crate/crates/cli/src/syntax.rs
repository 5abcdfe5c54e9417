//! Lexer and recursive-descent parser for `.sdf` scripts and expression
//! operands. Produces an unresolved AST; name resolution lives in
//! [`crate::session`].

use std::fmt;

use num_bigint::BigInt;

/// 1-based line and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

/// A positioned diagnostic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diag {
    pub pos: Pos,
    pub msg: String,
}

impl Diag {
    pub fn new(pos: Pos, msg: impl Into<String>) -> Self {
        Diag { pos, msg: msg.into() }
    }
}

impl fmt::Display for Diag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for Diag {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    Punct(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Punct(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

const PUNCT: &str = "+-*/^()[]{},;=>";

struct Lexer<'a> {
    src: &'a str,
    off: usize,
    pos: Pos,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, off: 0, pos: Pos { line: 1, col: 1 } }
    }

    fn peek_char(&self) -> Option<char> {
        self.src[self.off..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek_char()?;
        self.off += c.len_utf8();
        if c == '\n' {
            self.pos.line += 1;
            self.pos.col = 1;
        } else {
            self.pos.col += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        loop {
            match self.peek_char() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => {
                    while !matches!(self.peek_char(), None | Some('\n')) {
                        self.bump();
                    }
                }
                _ => return,
            }
        }
    }

    fn next(&mut self) -> Result<(Tok, Pos), Diag> {
        self.skip_trivia();
        let start = self.pos;
        let Some(c) = self.peek_char() else {
            return Ok((Tok::Eof, start));
        };
        if c.is_ascii_alphabetic() || c == '_' {
            let from = self.off;
            while matches!(self.peek_char(), Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == '\'') {
                self.bump();
            }
            return Ok((Tok::Ident(self.src[from..self.off].to_owned()), start));
        }
        if c.is_ascii_digit() {
            let from = self.off;
            while matches!(self.peek_char(), Some(c) if c.is_ascii_digit()) {
                self.bump();
            }
            let n: BigInt = self.src[from..self.off].parse().expect("digits");
            return Ok((Tok::Int(n), start));
        }
        if PUNCT.contains(c) {
            self.bump();
            return Ok((Tok::Punct(c), start));
        }
        Err(Diag::new(start, format!("unexpected character `{c}`")))
    }

    /// Raw text up to the next `;` outside double quotes; consumes the `;`.
    fn raw_statement(&mut self) -> Result<String, Diag> {
        let start = self.pos;
        let from = self.off;
        let mut quoted = false;
        loop {
            match self.peek_char() {
                None => return Err(Diag::new(start, "command line is missing its terminating `;`")),
                Some('"') => quoted = !quoted,
                Some(';') if !quoted => {
                    let text = self.src[from..self.off].trim().to_owned();
                    self.bump();
                    return Ok(text);
                }
                _ => {}
            }
            self.bump();
        }
    }
}

/// Unresolved expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt, Pos),
    Name(String, Pos),
    /// `x[i,j]`.
    Indexed(String, u32, u32, Pos),
    D(Box<Expr>, Pos),
    Sigma(u32, Box<Expr>, Pos),
    Prolong(Box<Expr>, u32, Pos),
    Arc(Box<Expr>, u32, Pos),
    Neg(Box<Expr>, Pos),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, Pos),
    Pow(Box<Expr>, i64, Pos),
}

impl Expr {
    pub fn pos(&self) -> Pos {
        match self {
            Expr::Int(_, p)
            | Expr::Name(_, p)
            | Expr::Indexed(_, _, _, p)
            | Expr::D(_, p)
            | Expr::Sigma(_, _, p)
            | Expr::Prolong(_, _, p)
            | Expr::Arc(_, _, p)
            | Expr::Neg(_, p)
            | Expr::Div(_, _, p)
            | Expr::Pow(_, _, p) => *p,
            Expr::Add(a, _) | Expr::Sub(a, _) | Expr::Mul(a, _) => a.pos(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImageKind {
    D,
    Sigma,
    SigmaInverse,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Stmt {
    Var(Vec<(String, Pos)>),
    Symbol(Vec<(String, Pos)>),
    Param {
        name: String,
        pos: Pos,
        images: Vec<(ImageKind, Expr, Pos)>,
    },
    Ideal {
        name: String,
        pos: Pos,
        over: Option<Vec<Expr>>,
        order: Option<(String, Pos)>,
        generators: Vec<Expr>,
    },
    Rule {
        lhs: Expr,
        rhs: Expr,
        pos: Pos,
    },
    Point {
        name: String,
        pos: Pos,
        bindings: Vec<(Expr, Expr)>,
    },
    Command {
        text: String,
        pos: Pos,
    },
}

/// Words that cannot name a variable, symbol, parameter, ideal or point.
pub const RESERVED: &[&str] = &[
    "var", "symbol", "param", "with", "ideal", "over", "order", "rule", "point", "D", "s", "sinv", "Y", "A",
];

pub struct Parser<'a> {
    lex: Lexer<'a>,
    tok: Tok,
    pos: Pos,
}

impl<'a> Parser<'a> {
    pub fn new(src: &'a str) -> Result<Self, Diag> {
        let mut lex = Lexer::new(src);
        let (tok, pos) = lex.next()?;
        Ok(Parser { lex, tok, pos })
    }

    fn advance(&mut self) -> Result<(Tok, Pos), Diag> {
        let (tok, pos) = self.lex.next()?;
        let old = std::mem::replace(&mut self.tok, tok);
        let old_pos = std::mem::replace(&mut self.pos, pos);
        Ok((old, old_pos))
    }

    fn is_punct(&self, c: char) -> bool {
        self.tok == Tok::Punct(c)
    }

    fn expect_punct(&mut self, c: char) -> Result<Pos, Diag> {
        if self.is_punct(c) {
            Ok(self.advance()?.1)
        } else {
            Err(Diag::new(self.pos, format!("expected `{c}`, found {}", self.tok)))
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, Pos), Diag> {
        match &self.tok {
            Tok::Ident(s) => {
                let s = s.clone();
                let p = self.advance()?.1;
                Ok((s, p))
            }
            t => Err(Diag::new(self.pos, format!("expected {what}, found {t}"))),
        }
    }

    fn expect_u32(&mut self) -> Result<u32, Diag> {
        match &self.tok {
            Tok::Int(n) => {
                let v = u32::try_from(n).map_err(|_| Diag::new(self.pos, "index too large"))?;
                self.advance()?;
                Ok(v)
            }
            t => Err(Diag::new(self.pos, format!("expected a non-negative integer, found {t}"))),
        }
    }

    fn new_name(&mut self, what: &str) -> Result<(String, Pos), Diag> {
        let (name, pos) = self.expect_ident(what)?;
        if RESERVED.contains(&name.as_str()) {
            return Err(Diag::new(pos, format!("`{name}` is reserved")));
        }
        Ok((name, pos))
    }

    pub fn at_eof(&self) -> bool {
        self.tok == Tok::Eof
    }

    /// Parses a whole operand as one expression.
    pub fn expression_only(mut self) -> Result<Expr, Diag> {
        let e = self.expr()?;
        if !self.at_eof() {
            return Err(Diag::new(self.pos, format!("unexpected {} after expression", self.tok)));
        }
        Ok(e)
    }

    /// Comma-separated expressions filling the whole input.
    pub fn expression_list(mut self) -> Result<Vec<Expr>, Diag> {
        let mut out = vec![self.expr()?];
        while self.is_punct(',') {
            self.advance()?;
            out.push(self.expr()?);
        }
        if !self.at_eof() {
            return Err(Diag::new(self.pos, format!("unexpected {}", self.tok)));
        }
        Ok(out)
    }

    /// `(x = 1, y = 2)` or `x = 1, y = 2`.
    pub fn bindings_only(mut self) -> Result<Vec<(Expr, Expr)>, Diag> {
        let paren = self.is_punct('(');
        if paren {
            self.advance()?;
        }
        let bs = self.bindings()?;
        if paren {
            self.expect_punct(')')?;
        }
        if !self.at_eof() {
            return Err(Diag::new(self.pos, format!("unexpected {}", self.tok)));
        }
        Ok(bs)
    }

    fn bindings(&mut self) -> Result<Vec<(Expr, Expr)>, Diag> {
        let mut out = Vec::new();
        loop {
            let lhs = self.expr()?;
            self.expect_punct('=')?;
            let rhs = self.expr()?;
            out.push((lhs, rhs));
            if !self.is_punct(',') {
                return Ok(out);
            }
            self.advance()?;
        }
    }

    pub fn script(mut self) -> Result<Vec<Stmt>, Diag> {
        let mut out = Vec::new();
        while !self.at_eof() {
            out.push(self.statement()?);
        }
        Ok(out)
    }

    fn statement(&mut self) -> Result<Stmt, Diag> {
        let pos = self.pos;
        if self.is_punct('>') {
            // The current token is `>`; the lexer already sits after it.
            let text = self.lex.raw_statement()?;
            self.advance()?;
            return Ok(Stmt::Command { text, pos });
        }
        let kw = match &self.tok {
            Tok::Ident(s) => s.clone(),
            t => return Err(Diag::new(pos, format!("expected a statement, found {t}"))),
        };
        let stmt = match kw.as_str() {
            "var" | "symbol" => {
                self.advance()?;
                let mut names = vec![self.new_name("a name")?];
                while self.is_punct(',') {
                    self.advance()?;
                    names.push(self.new_name("a name")?);
                }
                if kw == "var" {
                    Stmt::Var(names)
                } else {
                    Stmt::Symbol(names)
                }
            }
            "param" => {
                self.advance()?;
                let (name, pos) = self.new_name("a parameter name")?;
                let mut images = Vec::new();
                if matches!(&self.tok, Tok::Ident(s) if s == "with") {
                    self.advance()?;
                    loop {
                        let (op, ip) = self.expect_ident("`D`, `s` or `sinv`")?;
                        let kind = match op.as_str() {
                            "D" => ImageKind::D,
                            "s" => ImageKind::Sigma,
                            "sinv" => ImageKind::SigmaInverse,
                            _ => return Err(Diag::new(ip, format!("expected `D`, `s` or `sinv`, found `{op}`"))),
                        };
                        self.expect_punct('(')?;
                        let (arg, ap) = self.expect_ident("the parameter name")?;
                        if arg != name {
                            return Err(Diag::new(ap, format!("image clause must mention `{name}`")));
                        }
                        self.expect_punct(')')?;
                        self.expect_punct('=')?;
                        let e = self.expr()?;
                        images.push((kind, e, ip));
                        if !self.is_punct(',') {
                            break;
                        }
                        self.advance()?;
                    }
                }
                Stmt::Param { name, pos, images }
            }
            "ideal" => {
                self.advance()?;
                let (name, pos) = self.new_name("an ideal name")?;
                let mut over = None;
                let mut order = None;
                loop {
                    match &self.tok {
                        Tok::Ident(s) if s == "over" && over.is_none() => {
                            self.advance()?;
                            self.expect_punct('(')?;
                            let mut vs = vec![self.expr()?];
                            while self.is_punct(',') {
                                self.advance()?;
                                vs.push(self.expr()?);
                            }
                            self.expect_punct(')')?;
                            over = Some(vs);
                        }
                        Tok::Ident(s) if s == "order" && order.is_none() => {
                            self.advance()?;
                            order = Some(self.expect_ident("`lex` or `grevlex`")?);
                        }
                        _ => break,
                    }
                }
                self.expect_punct('=')?;
                self.expect_punct('{')?;
                let mut generators = Vec::new();
                if !self.is_punct('}') {
                    loop {
                        let lhs = self.expr()?;
                        let g = if self.is_punct('=') {
                            self.advance()?;
                            let rhs = self.expr()?;
                            Expr::Sub(Box::new(lhs), Box::new(rhs))
                        } else {
                            lhs
                        };
                        generators.push(g);
                        if !self.is_punct(',') {
                            break;
                        }
                        self.advance()?;
                    }
                }
                self.expect_punct('}')?;
                Stmt::Ideal { name, pos, over, order, generators }
            }
            "rule" => {
                self.advance()?;
                let lhs = self.expr()?;
                self.expect_punct('=')?;
                let rhs = self.expr()?;
                Stmt::Rule { lhs, rhs, pos }
            }
            "point" => {
                self.advance()?;
                let (name, pos) = self.new_name("a point name")?;
                self.expect_punct('=')?;
                self.expect_punct('(')?;
                let bindings = self.bindings()?;
                self.expect_punct(')')?;
                Stmt::Point { name, pos, bindings }
            }
            other => return Err(Diag::new(pos, format!("unknown statement `{other}`"))),
        };
        self.expect_punct(';')?;
        Ok(stmt)
    }

    pub fn expr(&mut self) -> Result<Expr, Diag> {
        let mut lhs = self.term()?;
        loop {
            if self.is_punct('+') {
                self.advance()?;
                let rhs = self.term()?;
                lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
            } else if self.is_punct('-') {
                self.advance()?;
                let rhs = self.term()?;
                lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, Diag> {
        let mut lhs = self.unary()?;
        loop {
            if self.is_punct('*') {
                self.advance()?;
                let rhs = self.unary()?;
                lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
            } else if self.is_punct('/') {
                let p = self.advance()?.1;
                let rhs = self.unary()?;
                lhs = Expr::Div(Box::new(lhs), Box::new(rhs), p);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, Diag> {
        if self.is_punct('-') {
            let p = self.advance()?.1;
            let e = self.unary()?;
            return Ok(Expr::Neg(Box::new(e), p));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, Diag> {
        let base = self.atom()?;
        if self.is_punct('^') {
            let p = self.advance()?.1;
            let neg = if self.is_punct('-') {
                self.advance()?;
                true
            } else {
                false
            };
            let e = self.expect_u32()? as i64;
            return Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }, p));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, Diag> {
        let pos = self.pos;
        match self.tok.clone() {
            Tok::Int(n) => {
                self.advance()?;
                Ok(Expr::Int(n, pos))
            }
            Tok::Punct('(') => {
                self.advance()?;
                let e = self.expr()?;
                self.expect_punct(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.advance()?;
                match name.as_str() {
                    "D" if self.is_punct('(') => {
                        self.advance()?;
                        let e = self.expr()?;
                        self.expect_punct(')')?;
                        Ok(Expr::D(Box::new(e), pos))
                    }
                    "s" if self.is_punct('(') || self.is_punct('^') => {
                        let mut k = 1;
                        if self.is_punct('^') {
                            self.advance()?;
                            k = self.expect_u32()?;
                        }
                        self.expect_punct('(')?;
                        let e = self.expr()?;
                        self.expect_punct(')')?;
                        Ok(Expr::Sigma(k, Box::new(e), pos))
                    }
                    "Y" | "A" if self.is_punct('(') => {
                        self.advance()?;
                        let e = self.expr()?;
                        self.expect_punct(',')?;
                        let k = self.expect_u32()?;
                        self.expect_punct(')')?;
                        Ok(if name == "Y" {
                            Expr::Prolong(Box::new(e), k, pos)
                        } else {
                            Expr::Arc(Box::new(e), k, pos)
                        })
                    }
                    _ if self.is_punct('[') => {
                        self.advance()?;
                        let i = self.expect_u32()?;
                        self.expect_punct(',')?;
                        let j = self.expect_u32()?;
                        self.expect_punct(']')?;
                        Ok(Expr::Indexed(name, i, j, pos))
                    }
                    _ => Ok(Expr::Name(name, pos)),
                }
            }
            t => Err(Diag::new(pos, format!("expected an expression, found {t}"))),
        }
    }
}

pub fn parse_script(src: &str) -> Result<Vec<Stmt>, Diag> {
    Parser::new(src)?.script()
}

pub fn parse_expr(src: &str) -> Result<Expr, Diag> {
    Parser::new(src)?.expression_only()
}

/// Splits a command line into words; double quotes group, `\"` escapes.
pub fn split_words(line: &str, pos: Pos) -> Result<Vec<String>, Diag> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut in_word = false;
    let mut quoted = false;
    let mut chars = line.chars();
    while let Some(c) = chars.next() {
        match c {
            '"' => {
                quoted = !quoted;
                in_word = true;
            }
            '\\' if quoted => {
                if let Some(n) = chars.next() {
                    cur.push(n);
                }
            }
            c if c.is_whitespace() && !quoted => {
                if in_word {
                    out.push(std::mem::take(&mut cur));
                    in_word = false;
                }
            }
            c => {
                cur.push(c);
                in_word = true;
            }
        }
    }
    if quoted {
        return Err(Diag::new(pos, "unterminated quote in command line"));
    }
    if in_word {
        out.push(cur);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dangling_operator_points_at_brace() {
        let e = parse_script("ideal I = { y - };").unwrap_err();
        assert_eq!(e.pos, Pos { line: 1, col: 17 });
        assert!(e.msg.contains("expected an expression"), "{e}");
    }

    #[test]
    fn command_lines_keep_quotes() {
        let s = parse_script("var x;\n> fr \"inf,5 | 3\" --json;").unwrap();
        let Stmt::Command { text, pos } = &s[1] else { panic!() };
        assert_eq!(text, "fr \"inf,5 | 3\" --json");
        assert_eq!(pos.line, 2);
        assert_eq!(split_words(text, *pos).unwrap(), ["fr", "inf,5 | 3", "--json"]);
    }

    #[test]
    fn sigma_power_and_index() {
        let e = parse_expr("s^2(D(x)) - x[1,3]^2").unwrap();
        assert!(matches!(e, Expr::Sub(..)));
        assert!(parse_expr("x^-2").is_ok());
        assert!(parse_expr("x +").is_err());
    }
}
