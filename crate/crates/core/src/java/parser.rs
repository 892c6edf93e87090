//! Recursive-descent parser over the token stream, with precedence climbing
//! for expressions.

use super::ast::*;
use super::lexer::{tokenize, Tok, Token};
use super::ParseFailure;

type PResult<T> = Result<T, ParseFailure>;

const RESERVED: &[&str] = &[
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class", "const",
    "continue", "default", "do", "double", "else", "enum", "extends", "final", "finally", "float",
    "for", "goto", "if", "implements", "import", "instanceof", "int", "interface", "long", "native",
    "new", "package", "private", "protected", "public", "return", "short", "static", "strictfp",
    "super", "switch", "synchronized", "this", "throw", "throws", "transient", "try", "void",
    "volatile", "while", "true", "false", "null",
];

const PRIMITIVES: &[&str] = &[
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "void",
];

pub fn parse_compilation_unit(src: &str) -> PResult<CompilationUnit> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        src,
        toks,
        pos: 0,
        no_lambda: false,
    };
    p.compilation_unit()
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Token>,
    pos: usize,
    /// Set while parsing `case` labels, where `IDENT ->` is not a lambda.
    no_lambda: bool,
}

impl<'a> Parser<'a> {
    // ----- token helpers -------------------------------------------------

    fn tok(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_n(&self, n: usize) -> &Tok {
        let i = (self.pos + n).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn at_eof(&self) -> bool {
        matches!(self.peek(), Tok::Eof)
    }

    fn is_op(&self, op: &str) -> bool {
        matches!(self.peek(), Tok::Op(o) if *o == op)
    }

    fn is_op_n(&self, n: usize, op: &str) -> bool {
        matches!(self.peek_n(n), Tok::Op(o) if *o == op)
    }

    fn is_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn is_kw_n(&self, n: usize, kw: &str) -> bool {
        matches!(self.peek_n(n), Tok::Ident(s) if s == kw)
    }

    fn eat_op(&mut self, op: &str) -> bool {
        if self.is_op(op) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn eat_kw(&mut self, kw: &str) -> bool {
        if self.is_kw(kw) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_op(&mut self, op: &str) -> PResult<Token> {
        if self.is_op(op) {
            Ok(self.bump())
        } else {
            Err(self.unexpected(&format!("`{op}`")))
        }
    }

    fn expect_kw(&mut self, kw: &str) -> PResult<()> {
        if self.eat_kw(kw) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{kw}`")))
        }
    }

    fn unexpected(&self, expected: &str) -> ParseFailure {
        let t = self.tok();
        let found = match &t.tok {
            Tok::Eof => "end of file".to_string(),
            _ => format!("`{}`", &self.src[t.start..t.end]),
        };
        ParseFailure::new(t.line, t.col, format!("expected {expected}, found {found}"))
    }

    fn is_ident(&self) -> bool {
        matches!(self.peek(), Tok::Ident(s) if !RESERVED.contains(&s.as_str()))
    }

    fn is_ident_n(&self, n: usize) -> bool {
        matches!(self.peek_n(n), Tok::Ident(s) if !RESERVED.contains(&s.as_str()))
    }

    fn ident(&mut self) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) if !RESERVED.contains(&s.as_str()) => {
                self.bump();
                Ok(s)
            }
            _ => Err(self.unexpected("identifier")),
        }
    }

    fn qualified_name(&mut self) -> PResult<String> {
        let mut name = self.ident()?;
        while self.is_op(".") && self.is_ident_n(1) {
            self.bump();
            name.push('.');
            name.push_str(&self.ident()?);
        }
        Ok(name)
    }

    /// Adjacent tokens with no whitespace between them.
    fn adjacent(&self, n: usize) -> bool {
        let a = (self.pos + n).min(self.toks.len() - 1);
        let b = (self.pos + n + 1).min(self.toks.len() - 1);
        self.toks[a].end == self.toks[b].start
    }

    fn skip_balanced(&mut self, open: &str, close: &str) -> PResult<Token> {
        let start = self.expect_op(open)?;
        let mut depth = 1usize;
        loop {
            if self.at_eof() {
                return Err(ParseFailure::new(start.line, start.col, format!("unbalanced `{open}`")));
            }
            if self.is_op(open) {
                depth += 1;
            } else if self.is_op(close) {
                depth -= 1;
                if depth == 0 {
                    return Ok(self.bump());
                }
            }
            self.bump();
        }
    }

    // ----- compilation unit ---------------------------------------------

    fn compilation_unit(&mut self) -> PResult<CompilationUnit> {
        let mut unit = CompilationUnit {
            package: None,
            imports: Vec::new(),
            types: Vec::new(),
            opaque: Vec::new(),
        };
        let save = self.pos;
        let _ = self.modifiers()?;
        if self.eat_kw("package") {
            unit.package = Some(self.qualified_name()?);
            self.expect_op(";")?;
        } else {
            self.pos = save;
        }
        while self.is_kw("import") {
            self.bump();
            let is_static = self.eat_kw("static");
            let mut path = self.qualified_name()?;
            let mut wildcard = false;
            if self.eat_op(".") {
                self.expect_op("*")?;
                wildcard = true;
            }
            if path.is_empty() {
                path.push('*');
            }
            self.expect_op(";")?;
            unit.imports.push(Import {
                path,
                is_static,
                wildcard,
            });
        }
        while !self.at_eof() {
            if self.eat_op(";") {
                continue;
            }
            match self.type_or_opaque()? {
                Member::Type(t) => unit.types.push(t),
                Member::Opaque(o) => unit.opaque.push(o),
                _ => unreachable!("type_or_opaque returns types only"),
            }
        }
        Ok(unit)
    }

    fn annotation(&mut self) -> PResult<Annotation> {
        let at = self.bump();
        debug_assert!(matches!(at.tok, Tok::At));
        let name = self.qualified_name()?;
        let args = if self.is_op("(") {
            let open = self.tok().start;
            let close = self.skip_balanced("(", ")")?;
            Some(self.src[open..close.end].to_string())
        } else {
            None
        };
        Ok(Annotation { name, args })
    }

    fn modifiers(&mut self) -> PResult<Modifiers> {
        let mut m = Modifiers::default();
        loop {
            match self.peek() {
                Tok::At if !self.is_kw_n(1, "interface") => {
                    let a = self.annotation()?;
                    m.annotations.push(a);
                }
                Tok::Ident(s) => {
                    // `default:` inside a switch is never routed here.
                    if let Some(kw) = Modifier::from_keyword(s) {
                        self.bump();
                        m.keywords.push(kw);
                    } else if (s == "sealed" || s == "non") && self.sealed_modifier_ahead() {
                        if s == "non" {
                            self.bump();
                            self.bump();
                        }
                        self.bump();
                    } else {
                        return Ok(m);
                    }
                }
                _ => return Ok(m),
            }
        }
    }

    fn sealed_modifier_ahead(&self) -> bool {
        if self.is_kw("non") {
            return self.is_op_n(1, "-") && self.is_kw_n(2, "sealed");
        }
        matches!(self.peek_n(1), Tok::Ident(s) if s == "class" || s == "interface" || s == "abstract" || Modifier::from_keyword(s).is_some())
    }

    fn is_record_decl(&self) -> bool {
        self.is_kw("record") && self.is_ident_n(1) && (self.is_op_n(2, "(") || self.is_op_n(2, "<"))
    }

    /// A type declaration after optional modifiers, or an opaque node for
    /// records and annotation type declarations.
    fn type_or_opaque(&mut self) -> PResult<Member> {
        let start_tok = self.tok().clone();
        let modifiers = self.modifiers()?;
        self.type_decl_after_modifiers(modifiers, start_tok)
    }

    fn type_decl_after_modifiers(&mut self, modifiers: Modifiers, start_tok: Token) -> PResult<Member> {
        if matches!(self.peek(), Tok::At) && self.is_kw_n(1, "interface") {
            self.bump();
            self.bump();
            let name = self.ident()?;
            let end = self.skip_balanced("{", "}")?;
            return Ok(Member::Opaque(Opaque {
                what: format!("annotation type {name}"),
                text: self.src[start_tok.start..end.end].to_string(),
                span: Span {
                    start_line: start_tok.line,
                    end_line: end.line,
                },
            }));
        }
        if self.is_record_decl() {
            self.bump();
            let name = self.ident()?;
            while !self.is_op("{") {
                if self.at_eof() {
                    return Err(self.unexpected("`{`"));
                }
                self.bump();
            }
            let end = self.skip_balanced("{", "}")?;
            return Ok(Member::Opaque(Opaque {
                what: format!("record {name}"),
                text: self.src[start_tok.start..end.end].to_string(),
                span: Span {
                    start_line: start_tok.line,
                    end_line: end.line,
                },
            }));
        }
        let kind = if self.eat_kw("class") {
            DeclKind::Class
        } else if self.eat_kw("interface") {
            DeclKind::Interface
        } else if self.eat_kw("enum") {
            DeclKind::Enum
        } else {
            return Err(self.unexpected("type declaration"));
        };
        let name = self.ident()?;
        let type_params = if self.is_op("<") { self.type_params()? } else { Vec::new() };
        let mut extends = Vec::new();
        let mut implements = Vec::new();
        loop {
            if self.eat_kw("extends") {
                extends = self.type_list()?;
            } else if self.eat_kw("implements") {
                implements = self.type_list()?;
            } else if self.is_kw("permits") {
                self.bump();
                self.type_list()?;
            } else {
                break;
            }
        }
        let (members, span) = if kind == DeclKind::Enum {
            self.enum_body(&name)?
        } else {
            self.class_body(&name)?
        };
        Ok(Member::Type(TypeDecl {
            kind,
            name,
            modifiers,
            type_params,
            extends,
            implements,
            members,
            span: Span {
                start_line: start_tok.line,
                end_line: span.end_line,
            },
        }))
    }

    fn type_params(&mut self) -> PResult<Vec<String>> {
        self.expect_op("<")?;
        let mut names = Vec::new();
        loop {
            while matches!(self.peek(), Tok::At) {
                self.annotation()?;
            }
            names.push(self.ident()?);
            if self.eat_kw("extends") {
                self.parse_type()?;
                while self.eat_op("&") {
                    self.parse_type()?;
                }
            }
            if !self.eat_op(",") {
                break;
            }
        }
        self.expect_op(">")?;
        Ok(names)
    }

    fn type_list(&mut self) -> PResult<Vec<TypeRef>> {
        let mut v = vec![self.parse_type()?];
        while self.eat_op(",") {
            v.push(self.parse_type()?);
        }
        Ok(v)
    }

    // ----- types -----------------------------------------------------------

    fn parse_type(&mut self) -> PResult<TypeRef> {
        while matches!(self.peek(), Tok::At) {
            self.annotation()?;
        }
        let mut ty = match self.peek().clone() {
            Tok::Ident(s) if PRIMITIVES.contains(&s.as_str()) => {
                self.bump();
                TypeRef::named(s)
            }
            Tok::Op("?") => {
                self.bump();
                TypeRef::named("?")
            }
            _ => {
                let mut name = self.ident()?;
                let mut args = Vec::new();
                loop {
                    if self.is_op("<") {
                        args.extend(self.type_args()?);
                    }
                    if self.is_op(".") && (self.is_ident_n(1) || matches!(self.peek_n(1), Tok::At)) {
                        self.bump();
                        while matches!(self.peek(), Tok::At) {
                            self.annotation()?;
                        }
                        name.push('.');
                        name.push_str(&self.ident()?);
                    } else {
                        break;
                    }
                }
                TypeRef { name, args, dims: 0 }
            }
        };
        self.dims_into(&mut ty)?;
        Ok(ty)
    }

    fn dims_into(&mut self, ty: &mut TypeRef) -> PResult<()> {
        loop {
            let save = self.pos;
            while matches!(self.peek(), Tok::At) {
                self.annotation()?;
            }
            if self.is_op("[") && self.is_op_n(1, "]") {
                self.bump();
                self.bump();
                ty.dims += 1;
            } else {
                self.pos = save;
                return Ok(());
            }
        }
    }

    fn type_args(&mut self) -> PResult<Vec<TypeRef>> {
        self.expect_op("<")?;
        let mut args = Vec::new();
        if self.eat_op(">") {
            return Ok(args);
        }
        loop {
            let mut arg = self.parse_type()?;
            if arg.name == "?" && (self.is_kw("extends") || self.is_kw("super")) {
                self.bump();
                let bound = self.parse_type()?;
                arg.args.push(bound);
            }
            args.push(arg);
            if !self.eat_op(",") {
                break;
            }
        }
        self.expect_op(">")?;
        Ok(args)
    }

    // ----- class bodies ------------------------------------------------------

    fn class_body(&mut self, class_name: &str) -> PResult<(Vec<Member>, Span)> {
        let open = self.expect_op("{")?;
        let mut members = Vec::new();
        loop {
            if self.is_op("}") {
                let close = self.bump();
                return Ok((
                    members,
                    Span {
                        start_line: open.line,
                        end_line: close.line,
                    },
                ));
            }
            if self.at_eof() {
                return Err(ParseFailure::new(open.line, open.col, "unclosed class body"));
            }
            if let Some(m) = self.member(class_name)? {
                members.push(m);
            }
        }
    }

    fn enum_body(&mut self, class_name: &str) -> PResult<(Vec<Member>, Span)> {
        let open = self.expect_op("{")?;
        let mut members = Vec::new();
        loop {
            while matches!(self.peek(), Tok::At) {
                self.annotation()?;
            }
            if !self.is_ident() {
                break;
            }
            let name = self.ident()?;
            let args = if self.is_op("(") { self.arguments()? } else { Vec::new() };
            let body = if self.is_op("{") {
                Some(self.class_body("")?.0)
            } else {
                None
            };
            members.push(Member::EnumConstant(EnumConstant { name, args, body }));
            if !self.eat_op(",") {
                break;
            }
        }
        if self.eat_op(";") {
            while !self.is_op("}") {
                if self.at_eof() {
                    return Err(ParseFailure::new(open.line, open.col, "unclosed enum body"));
                }
                if let Some(m) = self.member(class_name)? {
                    members.push(m);
                }
            }
        }
        let close = self.expect_op("}")?;
        Ok((
            members,
            Span {
                start_line: open.line,
                end_line: close.line,
            },
        ))
    }

    fn member(&mut self, class_name: &str) -> PResult<Option<Member>> {
        if self.eat_op(";") {
            return Ok(None);
        }
        if self.is_op("{") {
            let body = self.block()?;
            return Ok(Some(Member::Initializer { is_static: false, body }));
        }
        if self.is_kw("static") && self.is_op_n(1, "{") {
            self.bump();
            let body = self.block()?;
            return Ok(Some(Member::Initializer { is_static: true, body }));
        }
        let start_tok = self.tok().clone();
        let modifiers = self.modifiers()?;
        if self.is_kw("class")
            || self.is_kw("interface")
            || self.is_kw("enum")
            || (matches!(self.peek(), Tok::At) && self.is_kw_n(1, "interface"))
            || self.is_record_decl()
        {
            return self.type_decl_after_modifiers(modifiers, start_tok).map(Some);
        }
        let type_params = if self.is_op("<") { self.type_params()? } else { Vec::new() };
        if self.is_ident() && self.is_op_n(1, "(") {
            let name = self.ident()?;
            if name != class_name && !class_name.is_empty() {
                return Err(ParseFailure::new(
                    start_tok.line,
                    start_tok.col,
                    format!("method `{name}` is missing a return type"),
                ));
            }
            let params = self.params()?;
            if self.eat_kw("throws") {
                self.type_list()?;
            }
            let body = self.block()?;
            return Ok(Some(Member::Constructor(ConstructorDecl {
                modifiers,
                name,
                params,
                body,
            })));
        }
        let mut ty = self.parse_type()?;
        let name = self.ident()?;
        if self.is_op("(") {
            let params = self.params()?;
            self.dims_into(&mut ty)?;
            let throws = if self.eat_kw("throws") { self.type_list()? } else { Vec::new() };
            let (body, span) = if self.is_op("{") {
                let b = self.block()?;
                let span = b.span;
                (Some(b), span)
            } else {
                if self.eat_kw("default") {
                    // annotation element default; the value is not retained
                    self.var_init()?;
                }
                let semi = self.expect_op(";")?;
                (
                    None,
                    Span {
                        start_line: semi.line,
                        end_line: semi.line,
                    },
                )
            };
            return Ok(Some(Member::Method(MethodDecl {
                modifiers,
                type_params,
                return_type: ty,
                name,
                params,
                throws,
                body,
                span,
            })));
        }
        let declarators = self.declarators_after_name(name)?;
        self.expect_op(";")?;
        Ok(Some(Member::Field(FieldDecl {
            modifiers,
            ty,
            declarators,
        })))
    }

    fn declarators_after_name(&mut self, first: String) -> PResult<Vec<VarDeclarator>> {
        let mut out = Vec::new();
        let mut name = first;
        loop {
            let mut dims = 0u8;
            while self.is_op("[") && self.is_op_n(1, "]") {
                self.bump();
                self.bump();
                dims += 1;
            }
            let init = if self.eat_op("=") { Some(self.var_init()?) } else { None };
            out.push(VarDeclarator { name, dims, init });
            if !self.eat_op(",") {
                return Ok(out);
            }
            name = self.ident()?;
        }
    }

    fn var_init(&mut self) -> PResult<Expr> {
        if self.is_op("{") {
            self.array_init()
        } else {
            self.expr()
        }
    }

    fn array_init(&mut self) -> PResult<Expr> {
        self.expect_op("{")?;
        let mut items = Vec::new();
        while !self.is_op("}") {
            items.push(self.var_init()?);
            if !self.eat_op(",") {
                break;
            }
        }
        self.expect_op("}")?;
        Ok(Expr::ArrayInit(items))
    }

    fn params(&mut self) -> PResult<Vec<Param>> {
        self.expect_op("(")?;
        let mut params = Vec::new();
        if self.eat_op(")") {
            return Ok(params);
        }
        loop {
            let modifiers = self.modifiers()?;
            let mut ty = self.parse_type()?;
            let varargs = self.eat_op("...");
            if varargs {
                ty.dims += 1;
            }
            if self.is_kw("this") {
                // receiver parameter
                self.bump();
            } else {
                let name = self.ident()?;
                self.dims_into(&mut ty)?;
                params.push(Param {
                    modifiers,
                    ty,
                    name,
                    varargs,
                });
            }
            if !self.eat_op(",") {
                break;
            }
        }
        self.expect_op(")")?;
        Ok(params)
    }

    // ----- statements --------------------------------------------------------

    fn block(&mut self) -> PResult<Block> {
        let open = self.expect_op("{")?;
        let mut stmts = Vec::new();
        loop {
            if self.is_op("}") {
                let close = self.bump();
                return Ok(Block {
                    stmts,
                    span: Span {
                        start_line: open.line,
                        end_line: close.line,
                    },
                });
            }
            if self.at_eof() {
                return Err(ParseFailure::new(open.line, open.col, "unclosed block"));
            }
            stmts.push(self.statement()?);
        }
    }

    fn statement(&mut self) -> PResult<Stmt> {
        if self.is_op("{") {
            return Ok(Stmt::Block(self.block()?));
        }
        if self.eat_op(";") {
            return Ok(Stmt::Empty);
        }
        if let Tok::Ident(word) = self.peek().clone() {
            match word.as_str() {
                "if" => {
                    self.bump();
                    let cond = self.paren_expr()?;
                    let then = Box::new(self.statement()?);
                    let otherwise = if self.eat_kw("else") {
                        Some(Box::new(self.statement()?))
                    } else {
                        None
                    };
                    return Ok(Stmt::If { cond, then, otherwise });
                }
                "while" => {
                    self.bump();
                    let cond = self.paren_expr()?;
                    let body = Box::new(self.statement()?);
                    return Ok(Stmt::While { cond, body });
                }
                "do" => {
                    self.bump();
                    let body = Box::new(self.statement()?);
                    self.expect_kw("while")?;
                    let cond = self.paren_expr()?;
                    self.expect_op(";")?;
                    return Ok(Stmt::DoWhile { body, cond });
                }
                "for" => return self.for_statement(),
                "return" => {
                    self.bump();
                    let value = if self.is_op(";") { None } else { Some(self.expr()?) };
                    self.expect_op(";")?;
                    return Ok(Stmt::Return(value));
                }
                "throw" => {
                    self.bump();
                    let e = self.expr()?;
                    self.expect_op(";")?;
                    return Ok(Stmt::Throw(e));
                }
                "break" | "continue" => {
                    self.bump();
                    let label = if self.is_ident() { Some(self.ident()?) } else { None };
                    self.expect_op(";")?;
                    return Ok(if word == "break" {
                        Stmt::Break(label)
                    } else {
                        Stmt::Continue(label)
                    });
                }
                "yield" if !self.is_op_n(1, "=") && !self.is_op_n(1, ".") && !self.is_op_n(1, "(") => {
                    self.bump();
                    let e = self.expr()?;
                    self.expect_op(";")?;
                    return Ok(Stmt::Yield(e));
                }
                "switch" => {
                    self.bump();
                    let selector = self.paren_expr()?;
                    let cases = self.switch_body()?;
                    return Ok(Stmt::Switch { selector, cases });
                }
                "try" => return self.try_statement(),
                "synchronized" if self.is_op_n(1, "(") => {
                    self.bump();
                    let lock = self.paren_expr()?;
                    let body = self.block()?;
                    return Ok(Stmt::Synchronized { lock, body });
                }
                "assert" => {
                    self.bump();
                    let cond = self.expr()?;
                    let message = if self.eat_op(":") { Some(self.expr()?) } else { None };
                    self.expect_op(";")?;
                    return Ok(Stmt::Assert { cond, message });
                }
                "class" | "interface" | "enum" | "abstract" | "static" => {
                    return self.local_type();
                }
                "final" if self.local_class_ahead() => return self.local_type(),
                _ => {}
            }
            if self.is_ident() && self.is_op_n(1, ":") {
                let label = self.ident()?;
                self.bump();
                let body = Box::new(self.statement()?);
                return Ok(Stmt::Labeled { label, body });
            }
        }
        if matches!(self.peek(), Tok::At) && self.local_class_ahead() {
            return self.local_type();
        }
        if let Some((ty, first)) = self.try_local_var_head()? {
            let declarators = self.declarators_after_name(first)?;
            self.expect_op(";")?;
            return Ok(Stmt::LocalVar { ty, declarators });
        }
        let e = self.expr()?;
        self.expect_op(";")?;
        Ok(Stmt::Expr(e))
    }

    fn local_class_ahead(&self) -> bool {
        let mut i = 0;
        loop {
            match self.peek_n(i) {
                Tok::Ident(s) if s == "class" || s == "interface" || s == "enum" => return true,
                Tok::Ident(s) if Modifier::from_keyword(s).is_some() => i += 1,
                Tok::At => {
                    i += 1;
                    while matches!(self.peek_n(i), Tok::Ident(_)) || matches!(self.peek_n(i), Tok::Op(".")) {
                        i += 1;
                    }
                }
                _ => return false,
            }
        }
    }

    fn local_type(&mut self) -> PResult<Stmt> {
        match self.type_or_opaque()? {
            Member::Type(t) => Ok(Stmt::LocalClass(t)),
            _ => Ok(Stmt::Empty),
        }
    }

    /// Speculatively parses `modifiers Type name` and leaves the cursor after
    /// the name. Restores the cursor and returns `None` when the tokens do not
    /// form a declaration head.
    fn try_local_var_head(&mut self) -> PResult<Option<(TypeRef, String)>> {
        let save = self.pos;
        let attempt = (|| -> PResult<Option<(TypeRef, String)>> {
            self.modifiers()?;
            let ty = self.parse_type()?;
            if !self.is_ident() {
                return Ok(None);
            }
            let name = self.ident()?;
            if self.is_op("=") || self.is_op(";") || self.is_op(",") || self.is_op("[") || self.is_op(":") || self.is_op(")") {
                Ok(Some((ty, name)))
            } else {
                Ok(None)
            }
        })();
        match attempt {
            Ok(Some(head)) => Ok(Some(head)),
            _ => {
                self.pos = save;
                Ok(None)
            }
        }
    }

    fn paren_expr(&mut self) -> PResult<Expr> {
        self.expect_op("(")?;
        let e = self.expr()?;
        self.expect_op(")")?;
        Ok(e)
    }

    fn for_statement(&mut self) -> PResult<Stmt> {
        self.expect_kw("for")?;
        self.expect_op("(")?;
        let mut init = Vec::new();
        if !self.is_op(";") {
            if let Some((ty, name)) = self.try_local_var_head()? {
                if self.eat_op(":") {
                    let iterable = self.expr()?;
                    self.expect_op(")")?;
                    let body = Box::new(self.statement()?);
                    return Ok(Stmt::ForEach {
                        ty,
                        name,
                        iterable,
                        body,
                    });
                }
                let declarators = self.declarators_after_name(name)?;
                init.push(Stmt::LocalVar { ty, declarators });
            } else {
                loop {
                    init.push(Stmt::Expr(self.expr()?));
                    if !self.eat_op(",") {
                        break;
                    }
                }
            }
        }
        self.expect_op(";")?;
        let cond = if self.is_op(";") { None } else { Some(self.expr()?) };
        self.expect_op(";")?;
        let mut update = Vec::new();
        if !self.is_op(")") {
            loop {
                update.push(self.expr()?);
                if !self.eat_op(",") {
                    break;
                }
            }
        }
        self.expect_op(")")?;
        let body = Box::new(self.statement()?);
        Ok(Stmt::For {
            init,
            cond,
            update,
            body,
        })
    }

    fn try_statement(&mut self) -> PResult<Stmt> {
        self.expect_kw("try")?;
        let mut resources = Vec::new();
        if self.eat_op("(") {
            while !self.is_op(")") {
                if let Some((ty, name)) = self.try_local_var_head()? {
                    let declarators = self.declarators_after_name(name)?;
                    resources.push(Stmt::LocalVar { ty, declarators });
                } else {
                    resources.push(Stmt::Expr(self.expr()?));
                }
                if !self.eat_op(";") {
                    break;
                }
            }
            self.expect_op(")")?;
        }
        let body = self.block()?;
        let mut catches = Vec::new();
        while self.eat_kw("catch") {
            self.expect_op("(")?;
            self.modifiers()?;
            let mut types = vec![self.parse_type()?];
            while self.eat_op("|") {
                types.push(self.parse_type()?);
            }
            let name = self.ident()?;
            self.expect_op(")")?;
            let body = self.block()?;
            catches.push(CatchClause { types, name, body });
        }
        let finally = if self.eat_kw("finally") { Some(self.block()?) } else { None };
        if catches.is_empty() && finally.is_none() && resources.is_empty() {
            return Err(self.unexpected("`catch` or `finally`"));
        }
        Ok(Stmt::Try {
            resources,
            body,
            catches,
            finally,
        })
    }

    fn switch_body(&mut self) -> PResult<Vec<SwitchCase>> {
        self.expect_op("{")?;
        let mut cases = Vec::new();
        while !self.is_op("}") {
            let mut labels = Vec::new();
            if self.eat_kw("default") {
            } else if self.eat_kw("case") {
                let prev = self.no_lambda;
                self.no_lambda = true;
                loop {
                    labels.push(self.ternary()?);
                    if !self.eat_op(",") {
                        break;
                    }
                }
                self.no_lambda = prev;
            } else {
                return Err(self.unexpected("`case` or `default`"));
            }
            let mut body = Vec::new();
            if self.eat_op("->") {
                if self.is_op("{") {
                    body.push(Stmt::Block(self.block()?));
                } else if self.is_kw("throw") {
                    body.push(self.statement()?);
                } else {
                    body.push(Stmt::Expr(self.expr()?));
                    self.expect_op(";")?;
                }
            } else {
                self.expect_op(":")?;
                while !self.is_kw("case") && !self.is_kw("default") && !self.is_op("}") {
                    if self.at_eof() {
                        return Err(self.unexpected("`}`"));
                    }
                    body.push(self.statement()?);
                }
            }
            cases.push(SwitchCase { labels, body });
        }
        self.expect_op("}")?;
        Ok(cases)
    }

    // ----- expressions -------------------------------------------------------

    fn expr(&mut self) -> PResult<Expr> {
        if !self.no_lambda && self.lambda_ahead() {
            return self.lambda();
        }
        let lhs = self.ternary()?;
        if let Some((op, width)) = self.assign_op() {
            for _ in 0..width {
                self.bump();
            }
            let value = self.expr()?;
            return Ok(Expr::Assign {
                op,
                target: Box::new(lhs),
                value: Box::new(value),
            });
        }
        Ok(lhs)
    }

    fn assign_op(&self) -> Option<(&'static str, usize)> {
        match self.peek() {
            Tok::Op(op @ ("=" | "+=" | "-=" | "*=" | "/=" | "%=" | "&=" | "|=" | "^=" | "<<=")) => Some((op, 1)),
            Tok::Op(">") if self.adjacent(0) && self.is_op_n(1, ">=") => Some((">>=", 2)),
            Tok::Op(">") if self.adjacent(0) && self.is_op_n(1, ">") && self.adjacent(1) && self.is_op_n(2, ">=") => {
                Some((">>>=", 3))
            }
            _ => None,
        }
    }

    fn lambda_ahead(&self) -> bool {
        if self.is_ident() && self.is_op_n(1, "->") {
            return true;
        }
        if !self.is_op("(") {
            return false;
        }
        let mut depth = 0usize;
        let mut i = 0usize;
        loop {
            match self.peek_n(i) {
                Tok::Op("(") => depth += 1,
                Tok::Op(")") => {
                    depth -= 1;
                    if depth == 0 {
                        return self.is_op_n(i + 1, "->");
                    }
                }
                Tok::Eof | Tok::Op(";") | Tok::Op("{") | Tok::Op("}") => return false,
                _ => {}
            }
            i += 1;
        }
    }

    fn lambda(&mut self) -> PResult<Expr> {
        let mut params = Vec::new();
        if self.is_ident() {
            params.push(self.ident()?);
        } else {
            self.expect_op("(")?;
            let mut last_ident: Option<String> = None;
            let mut depth = 1usize;
            loop {
                match self.bump().tok {
                    Tok::Op("(") | Tok::Op("<") | Tok::Op("[") => depth += 1,
                    Tok::Op(">") | Tok::Op("]") => depth -= 1,
                    Tok::Op(")") => {
                        depth -= 1;
                        if depth == 0 {
                            params.extend(last_ident.take());
                            break;
                        }
                    }
                    Tok::Op(",") if depth == 1 => params.extend(last_ident.take()),
                    Tok::Ident(s) if depth == 1 && !RESERVED.contains(&s.as_str()) => last_ident = Some(s),
                    Tok::Eof => return Err(self.unexpected("`)`")),
                    _ => {}
                }
            }
        }
        self.expect_op("->")?;
        let body = if self.is_op("{") {
            LambdaBody::Block(self.block()?)
        } else {
            LambdaBody::Expr(Box::new(self.expr()?))
        };
        Ok(Expr::Lambda { params, body })
    }

    fn ternary(&mut self) -> PResult<Expr> {
        let cond = self.binary(1)?;
        if self.eat_op("?") {
            let then = self.expr_no_assign()?;
            self.expect_op(":")?;
            let otherwise = self.expr_no_assign_ternary()?;
            return Ok(Expr::Conditional {
                cond: Box::new(cond),
                then: Box::new(then),
                otherwise: Box::new(otherwise),
            });
        }
        Ok(cond)
    }

    fn expr_no_assign(&mut self) -> PResult<Expr> {
        if !self.no_lambda && self.lambda_ahead() {
            return self.lambda();
        }
        self.ternary()
    }

    fn expr_no_assign_ternary(&mut self) -> PResult<Expr> {
        self.expr_no_assign()
    }

    /// Binary operator at the cursor with its precedence and token width.
    fn binary_op(&self) -> Option<(&'static str, u8, usize)> {
        let op = match self.peek() {
            Tok::Op(op) => *op,
            Tok::Ident(s) if s == "instanceof" => return Some(("instanceof", 7, 1)),
            _ => return None,
        };
        if op == ">" {
            if self.adjacent(0) && self.is_op_n(1, ">") {
                if self.adjacent(1) && self.is_op_n(2, ">") {
                    if self.adjacent(2) && self.is_op_n(3, ">=") {
                        return None;
                    }
                    return Some((">>>", 8, 3));
                }
                if self.adjacent(1) && self.is_op_n(2, ">=") {
                    return None;
                }
                return Some((">>", 8, 2));
            }
            if self.adjacent(0) && self.is_op_n(1, ">=") {
                return None;
            }
            return Some((">", 7, 1));
        }
        let prec = match op {
            "||" => 1,
            "&&" => 2,
            "|" => 3,
            "^" => 4,
            "&" => 5,
            "==" | "!=" => 6,
            "<" | "<=" | ">=" => 7,
            "<<" => 8,
            "+" | "-" => 9,
            "*" | "/" | "%" => 10,
            _ => return None,
        };
        Some((op, prec, 1))
    }

    fn binary(&mut self, min_prec: u8) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        while let Some((op, prec, width)) = self.binary_op() {
            if prec < min_prec {
                break;
            }
            for _ in 0..width {
                self.bump();
            }
            if op == "instanceof" {
                let _final = self.eat_kw("final");
                let ty = self.parse_type()?;
                if self.is_ident() {
                    // pattern binding
                    self.bump();
                }
                lhs = Expr::InstanceOf {
                    operand: Box::new(lhs),
                    ty,
                };
                continue;
            }
            let rhs = self.binary(prec + 1)?;
            lhs = Expr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<Expr> {
        if let Tok::Op(op @ ("+" | "-" | "++" | "--" | "!" | "~")) = self.peek().clone() {
            self.bump();
            let operand = self.unary()?;
            return Ok(Expr::Unary {
                op,
                operand: Box::new(operand),
            });
        }
        if self.is_op("(") && !self.lambda_ahead() {
            if let Some(cast) = self.try_cast()? {
                return Ok(cast);
            }
        }
        let e = self.primary()?;
        self.postfix(e)
    }

    fn try_cast(&mut self) -> PResult<Option<Expr>> {
        let save = self.pos;
        self.bump();
        let primitive = matches!(self.peek(), Tok::Ident(s) if PRIMITIVES.contains(&s.as_str()));
        let ty = match self.parse_type() {
            Ok(t) => t,
            Err(_) => {
                self.pos = save;
                return Ok(None);
            }
        };
        while self.eat_op("&") {
            if self.parse_type().is_err() {
                self.pos = save;
                return Ok(None);
            }
        }
        if !self.eat_op(")") {
            self.pos = save;
            return Ok(None);
        }
        let operand_follows = match self.peek() {
            Tok::Ident(s) => s != "instanceof",
            Tok::Int(_) | Tok::Float(_) | Tok::Char(_) | Tok::Str(_) => true,
            Tok::Op("(") | Tok::Op("!") | Tok::Op("~") => true,
            Tok::Op("+") | Tok::Op("-") | Tok::Op("++") | Tok::Op("--") => primitive,
            _ => false,
        };
        if !operand_follows {
            self.pos = save;
            return Ok(None);
        }
        let operand = if self.lambda_ahead() { self.lambda()? } else { self.unary()? };
        Ok(Some(Expr::Cast {
            ty,
            operand: Box::new(operand),
        }))
    }

    fn arguments(&mut self) -> PResult<Vec<Expr>> {
        self.expect_op("(")?;
        let mut args = Vec::new();
        if self.eat_op(")") {
            return Ok(args);
        }
        loop {
            args.push(self.expr()?);
            if !self.eat_op(",") {
                break;
            }
        }
        self.expect_op(")")?;
        Ok(args)
    }

    fn primary(&mut self) -> PResult<Expr> {
        let t = self.tok().clone();
        match t.tok {
            Tok::Int(s) => {
                self.bump();
                Ok(Expr::Literal(Literal::Int(s)))
            }
            Tok::Float(s) => {
                self.bump();
                Ok(Expr::Literal(Literal::Float(s)))
            }
            Tok::Char(s) => {
                self.bump();
                Ok(Expr::Literal(Literal::Char(s)))
            }
            Tok::Str(s) => {
                self.bump();
                Ok(Expr::Literal(Literal::Str(s)))
            }
            Tok::Op("(") => {
                self.bump();
                let e = self.expr()?;
                self.expect_op(")")?;
                Ok(e)
            }
            Tok::Ident(word) => match word.as_str() {
                "true" | "false" => {
                    self.bump();
                    Ok(Expr::Literal(Literal::Bool(word == "true")))
                }
                "null" => {
                    self.bump();
                    Ok(Expr::Literal(Literal::Null))
                }
                "this" | "super" => {
                    self.bump();
                    if self.is_op("(") {
                        let args = self.arguments()?;
                        return Ok(Expr::MethodCall {
                            target: None,
                            name: word,
                            args,
                        });
                    }
                    Ok(if word == "this" { Expr::This } else { Expr::Super })
                }
                "new" => self.creator(),
                "switch" => {
                    self.bump();
                    let selector = self.paren_expr()?;
                    let cases = self.switch_body()?;
                    Ok(Expr::Switch {
                        selector: Box::new(selector),
                        cases,
                    })
                }
                w if PRIMITIVES.contains(&w) => {
                    let ty = self.parse_type()?;
                    if self.eat_op("::") {
                        let name = if self.eat_kw("new") { "new".to_string() } else { self.ident()? };
                        return Ok(Expr::MethodRef {
                            target: Box::new(Expr::ClassLit(ty)),
                            name,
                        });
                    }
                    self.expect_op(".")?;
                    self.expect_kw("class")?;
                    Ok(Expr::ClassLit(ty))
                }
                _ => {
                    let name = self.ident()?;
                    if self.is_op("(") {
                        let args = self.arguments()?;
                        return Ok(Expr::MethodCall {
                            target: None,
                            name,
                            args,
                        });
                    }
                    Ok(Expr::Name(name))
                }
            },
            _ => Err(self.unexpected("expression")),
        }
    }

    fn creator(&mut self) -> PResult<Expr> {
        self.expect_kw("new")?;
        if self.is_op("<") {
            self.type_args()?;
        }
        while matches!(self.peek(), Tok::At) {
            self.annotation()?;
        }
        // Element type without dims; dims are handled below.
        let mut ty = match self.peek().clone() {
            Tok::Ident(s) if PRIMITIVES.contains(&s.as_str()) => {
                self.bump();
                TypeRef::named(s)
            }
            _ => {
                let mut name = self.ident()?;
                let mut args = Vec::new();
                loop {
                    if self.is_op("<") {
                        args.extend(self.type_args()?);
                    }
                    if self.is_op(".") && self.is_ident_n(1) {
                        self.bump();
                        name.push('.');
                        name.push_str(&self.ident()?);
                    } else {
                        break;
                    }
                }
                TypeRef { name, args, dims: 0 }
            }
        };
        if self.is_op("[") {
            let mut dims = Vec::new();
            while self.is_op("[") {
                self.bump();
                if self.eat_op("]") {
                    ty.dims += 1;
                } else {
                    dims.push(self.expr()?);
                    self.expect_op("]")?;
                    ty.dims += 1;
                }
            }
            let init = if self.is_op("{") {
                match self.array_init()? {
                    Expr::ArrayInit(items) => Some(items),
                    _ => None,
                }
            } else {
                None
            };
            return Ok(Expr::NewArray { ty, dims, init });
        }
        let args = self.arguments()?;
        let body = if self.is_op("{") {
            Some(self.class_body("")?.0)
        } else {
            None
        };
        Ok(Expr::New { ty, args, body })
    }

    fn postfix(&mut self, mut e: Expr) -> PResult<Expr> {
        loop {
            if self.is_op(".") {
                self.bump();
                if self.is_op("<") {
                    self.type_args()?;
                }
                if self.is_kw("new") {
                    // qualified inner class creation: outer.new Inner()
                    let inner = self.creator()?;
                    e = inner;
                    continue;
                }
                if self.eat_kw("this") {
                    e = Expr::This;
                    continue;
                }
                if self.eat_kw("class") {
                    let name = expr_dotted_name(&e).unwrap_or_default();
                    e = Expr::ClassLit(TypeRef::named(name));
                    continue;
                }
                if self.eat_kw("super") {
                    e = Expr::Super;
                    continue;
                }
                let name = self.ident()?;
                if self.is_op("(") {
                    let args = self.arguments()?;
                    e = Expr::MethodCall {
                        target: Some(Box::new(e)),
                        name,
                        args,
                    };
                } else {
                    e = Expr::FieldAccess {
                        target: Box::new(e),
                        name,
                    };
                }
            } else if self.is_op("[") {
                if self.is_op_n(1, "]") {
                    // array type in a class literal or method reference
                    let mut ty = TypeRef::named(expr_dotted_name(&e).unwrap_or_default());
                    self.dims_into(&mut ty)?;
                    if self.eat_op("::") {
                        let name = if self.eat_kw("new") { "new".to_string() } else { self.ident()? };
                        e = Expr::MethodRef {
                            target: Box::new(Expr::ClassLit(ty)),
                            name,
                        };
                        continue;
                    }
                    self.expect_op(".")?;
                    self.expect_kw("class")?;
                    e = Expr::ClassLit(ty);
                    continue;
                }
                self.bump();
                let index = self.expr()?;
                self.expect_op("]")?;
                e = Expr::ArrayAccess {
                    array: Box::new(e),
                    index: Box::new(index),
                };
            } else if let Tok::Op(op @ ("++" | "--")) = self.peek().clone() {
                self.bump();
                e = Expr::Postfix {
                    op,
                    operand: Box::new(e),
                };
            } else if self.eat_op("::") {
                let name = if self.eat_kw("new") { "new".to_string() } else { self.ident()? };
                e = Expr::MethodRef {
                    target: Box::new(e),
                    name,
                };
            } else if self.is_op("<") && self.generic_type_method_ref_ahead() {
                let mut ty = TypeRef::named(expr_dotted_name(&e).unwrap_or_default());
                ty.args = self.type_args()?;
                self.expect_op("::")?;
                let name = if self.eat_kw("new") { "new".to_string() } else { self.ident()? };
                e = Expr::MethodRef {
                    target: Box::new(Expr::ClassLit(ty)),
                    name,
                };
            } else {
                return Ok(e);
            }
        }
    }

    /// `Type<Args>::method`, detected by scanning for the closing `>` and `::`.
    fn generic_type_method_ref_ahead(&self) -> bool {
        let mut depth = 0usize;
        let mut i = 0usize;
        loop {
            match self.peek_n(i) {
                Tok::Op("<") => depth += 1,
                Tok::Op(">") => {
                    depth -= 1;
                    if depth == 0 {
                        return self.is_op_n(i + 1, "::");
                    }
                }
                Tok::Ident(_) | Tok::Op(",") | Tok::Op(".") | Tok::Op("?") | Tok::Op("[") | Tok::Op("]") => {}
                _ => return false,
            }
            i += 1;
        }
    }
}

fn expr_dotted_name(e: &Expr) -> Option<String> {
    match e {
        Expr::Name(n) => Some(n.clone()),
        Expr::FieldAccess { target, name } => Some(format!("{}.{}", expr_dotted_name(target)?, name)),
        _ => None,
    }
}
