//! Per-file feature records.
//!
//! Everything here is computed from one compilation unit. Cross-file fields
//! (`resolved_*`, `callers`, `callees`, `external_calls`) stay empty until the
//! project graph fills them.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::ast::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Access {
    Public,
    Protected,
    PackagePrivate,
    Private,
}

impl Access {
    pub fn of(modifiers: &[Modifier]) -> Self {
        if modifiers.contains(&Modifier::Public) {
            Access::Public
        } else if modifiers.contains(&Modifier::Protected) {
            Access::Protected
        } else if modifiers.contains(&Modifier::Private) {
            Access::Private
        } else {
            Access::PackagePrivate
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Access::Public => "public",
            Access::Protected => "protected",
            Access::PackagePrivate => "package-private",
            Access::Private => "private",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TypeKind {
    Class,
    Interface,
    Enum,
}

impl TypeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TypeKind::Class => "class",
            TypeKind::Interface => "interface",
            TypeKind::Enum => "enum",
        }
    }
}

/// MBLT statement kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineKind {
    Assignment,
    Condition,
    Loop,
    Call,
    Return,
    Declaration,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Parameter {
    pub type_name: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub type_arguments: Vec<String>,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldRecord {
    pub name: String,
    /// FDT, raw type name as written plus `[]` per dimension.
    pub data_type: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub type_arguments: Vec<String>,
    /// FMT
    pub modifier: Vec<Modifier>,
}

impl FieldRecord {
    pub fn is_static(&self) -> bool {
        self.modifier.contains(&Modifier::Static)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructorRecord {
    /// CM
    pub modifier: Vec<Modifier>,
    /// CP
    pub parameters: Vec<Parameter>,
}

/// Static shape of a call target, as far as one file can tell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Receiver {
    Implicit,
    This,
    Super,
    /// Local variable or parameter with its declared type.
    Local { name: String, type_name: String },
    /// Bare identifier that is not a local: a field or a type name.
    Name { name: String },
    Field { of: Box<Receiver>, name: String },
    /// Result of another call.
    Call { of: Box<Receiver>, name: String },
    New { type_name: String },
    Cast { type_name: String },
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CallSite {
    pub name: String,
    pub receiver: Receiver,
    pub args: u32,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub passes_this: bool,
}

/// A method in the project, by fully-qualified class name and method name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MethodRef {
    pub class: String,
    pub method: String,
}

impl MethodRef {
    pub fn new(class: impl Into<String>, method: impl Into<String>) -> Self {
        MethodRef {
            class: class.into(),
            method: method.into(),
        }
    }

    pub fn simple_class(&self) -> &str {
        self.class.rsplit('.').next().unwrap_or(&self.class)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MethodFeatureRecord {
    /// MN
    pub method_name: String,
    /// MMT
    pub modifier: Vec<Modifier>,
    /// MRT
    pub return_type: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub return_type_arguments: Vec<String>,
    /// MBLT
    pub body_line_kinds: Vec<LineKind>,
    /// NOMV
    pub variable_count: u32,
    /// NOML
    pub line_count: u32,
    /// MP
    pub parameters: Vec<Parameter>,
    /// MO
    pub has_override_annotation: bool,
    pub is_abstract: bool,
    pub outgoing_calls_local: Vec<String>,
    pub calls: Vec<CallSite>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub instantiated_types: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub returned_new_types: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assigned_fields: Vec<String>,
    /// NaIM, filled by the project graph.
    pub callers: Vec<MethodRef>,
    /// NaOM, filled by the project graph.
    pub callees: Vec<MethodRef>,
    pub external_calls: Vec<String>,
}

impl MethodFeatureRecord {
    /// NIM
    pub fn incoming_count(&self) -> usize {
        self.callers.len()
    }

    /// NOM
    pub fn outgoing_count(&self) -> usize {
        self.callees.len()
    }

    /// IM: (method, class) pairs calling this method.
    pub fn incoming_methods(&self) -> Vec<(&str, &str)> {
        self.callers.iter().map(|r| (r.method.as_str(), r.class.as_str())).collect()
    }

    /// OM: (method, class) pairs this method calls.
    pub fn outgoing_methods(&self) -> Vec<(&str, &str)> {
        self.callees.iter().map(|r| (r.method.as_str(), r.class.as_str())).collect()
    }

    pub fn has(&self, m: Modifier) -> bool {
        self.modifier.contains(&m)
    }

    pub fn access(&self) -> Access {
        Access::of(&self.modifier)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassFeatureRecord {
    /// CN
    pub class_name: String,
    pub qualified_name: String,
    pub package: String,
    pub kind: TypeKind,
    /// CMT
    pub modifier: Access,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub other_modifiers: Vec<Modifier>,
    /// ION
    pub is_interface: bool,
    /// AON
    pub is_abstract: bool,
    /// EXF
    pub extends_from: Vec<String>,
    /// IMF
    pub implements_from: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub type_parameters: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enclosing: Option<String>,
    pub resolved_extends: Vec<String>,
    pub resolved_implements: Vec<String>,
    pub fields: Vec<FieldRecord>,
    pub constructors: Vec<ConstructorRecord>,
    pub methods: Vec<MethodFeatureRecord>,
    /// NOMC
    pub method_call_count: u32,
}

impl ClassFeatureRecord {
    pub fn method(&self, name: &str) -> Option<&MethodFeatureRecord> {
        self.methods.iter().find(|m| m.method_name == name)
    }

    pub fn field(&self, name: &str) -> Option<&FieldRecord> {
        self.fields.iter().find(|f| f.name == name)
    }

    /// Abstract classes and interfaces.
    pub fn is_abstract_type(&self) -> bool {
        self.is_interface || self.is_abstract
    }

    pub fn is_concrete_class(&self) -> bool {
        self.kind == TypeKind::Class && !self.is_abstract
    }

    pub fn supertypes(&self) -> impl Iterator<Item = &String> {
        self.resolved_extends.iter().chain(self.resolved_implements.iter())
    }
}

/// Raw written type name plus `[]` per dimension.
pub fn written_type(ty: &TypeRef) -> String {
    let mut s = ty.name.clone();
    for _ in 0..ty.dims {
        s.push_str("[]");
    }
    s
}

fn parameter(p: &Param) -> Parameter {
    Parameter {
        type_name: written_type(&p.ty),
        type_arguments: p.ty.argument_names(),
        name: p.name.clone(),
    }
}

pub fn extract_features(unit: &CompilationUnit) -> Vec<ClassFeatureRecord> {
    let mut out = Vec::new();
    let prefix = unit.package.clone().unwrap_or_default();
    for t in &unit.types {
        collect_type(t, &prefix, &prefix, None, &mut out);
    }
    out
}

fn join(prefix: &str, name: &str) -> String {
    if prefix.is_empty() {
        name.to_string()
    } else {
        format!("{prefix}.{name}")
    }
}

fn collect_type(t: &TypeDecl, package: &str, prefix: &str, enclosing: Option<&str>, out: &mut Vec<ClassFeatureRecord>) {
    let qualified = join(prefix, &t.name);
    let kind = match t.kind {
        DeclKind::Class => TypeKind::Class,
        DeclKind::Interface => TypeKind::Interface,
        DeclKind::Enum => TypeKind::Enum,
    };
    let keywords = &t.modifiers.keywords;
    let mut record = ClassFeatureRecord {
        class_name: t.name.clone(),
        qualified_name: qualified.clone(),
        package: package.to_string(),
        kind,
        modifier: Access::of(keywords),
        other_modifiers: keywords
            .iter()
            .copied()
            .filter(|m| !matches!(m, Modifier::Public | Modifier::Protected | Modifier::Private))
            .collect(),
        is_interface: kind == TypeKind::Interface,
        is_abstract: kind == TypeKind::Class && keywords.contains(&Modifier::Abstract),
        extends_from: t.extends.iter().map(|e| e.name.clone()).collect(),
        implements_from: t.implements.iter().map(|e| e.name.clone()).collect(),
        type_parameters: t.type_params.clone(),
        enclosing: enclosing.map(str::to_string),
        resolved_extends: Vec::new(),
        resolved_implements: Vec::new(),
        fields: Vec::new(),
        constructors: Vec::new(),
        methods: Vec::new(),
        method_call_count: 0,
    };
    let field_names: Vec<String> = t
        .members
        .iter()
        .filter_map(|m| match m {
            Member::Field(f) => Some(f.declarators.iter().map(|d| d.name.clone())),
            _ => None,
        })
        .flatten()
        .collect();
    let mut nested = Vec::new();
    for m in &t.members {
        match m {
            Member::Field(f) => {
                for d in &f.declarators {
                    let mut ty = f.ty.clone();
                    ty.dims += d.dims;
                    record.fields.push(FieldRecord {
                        name: d.name.clone(),
                        data_type: written_type(&ty),
                        type_arguments: ty.argument_names(),
                        modifier: f.modifiers.keywords.clone(),
                    });
                }
            }
            Member::Constructor(c) => record.constructors.push(ConstructorRecord {
                modifier: c.modifiers.keywords.clone(),
                parameters: c.params.iter().map(parameter).collect(),
            }),
            Member::Method(md) => {
                let in_interface = kind == TypeKind::Interface;
                record.methods.push(method_record(md, in_interface, &field_names));
            }
            Member::Type(inner) => nested.push(inner),
            Member::Initializer { .. } | Member::EnumConstant(_) | Member::Opaque(_) => {}
        }
    }
    record.method_call_count = record.methods.iter().map(|m| m.calls.len() as u32).sum();
    out.push(record);
    for inner in nested {
        collect_type(inner, package, &qualified, Some(&qualified), out);
    }
}

fn method_record(md: &MethodDecl, in_interface: bool, field_names: &[String]) -> MethodFeatureRecord {
    let mut scan = Scan::new(field_names);
    for p in &md.params {
        scan.declare(&p.name, &p.ty);
    }
    let (kinds, variables) = match &md.body {
        Some(body) => {
            let mut kinds = Vec::new();
            let mut vars = 0u32;
            for s in &body.stmts {
                classify(s, &mut kinds, &mut vars);
            }
            scan.block(body);
            (kinds, vars)
        }
        None => (Vec::new(), 0),
    };
    let is_abstract = md.body.is_none()
        && (md.modifiers.has(Modifier::Abstract) || (in_interface && !md.modifiers.has(Modifier::Native)));
    MethodFeatureRecord {
        method_name: md.name.clone(),
        modifier: md.modifiers.keywords.clone(),
        return_type: written_type(&md.return_type),
        return_type_arguments: md.return_type.argument_names(),
        body_line_kinds: kinds,
        variable_count: variables,
        line_count: md.body.as_ref().map_or(0, |b| b.span.line_count()),
        parameters: md.params.iter().map(parameter).collect(),
        has_override_annotation: md.modifiers.has_override(),
        is_abstract,
        outgoing_calls_local: scan.calls.iter().map(|c| c.name.clone()).collect(),
        calls: scan.calls,
        instantiated_types: scan.instantiated,
        returned_new_types: scan.returned_new,
        assigned_fields: scan.assigned_fields,
        callers: Vec::new(),
        callees: Vec::new(),
        external_calls: Vec::new(),
    }
}

/// MBLT and NOMV over one statement and everything nested in it.
fn classify(s: &Stmt, kinds: &mut Vec<LineKind>, vars: &mut u32) {
    match s {
        Stmt::Block(b) => {
            for s in &b.stmts {
                classify(s, kinds, vars);
            }
        }
        Stmt::Empty => {}
        Stmt::LocalVar { declarators, .. } => {
            kinds.push(LineKind::Declaration);
            *vars += declarators.len() as u32;
        }
        Stmt::LocalClass(_) => kinds.push(LineKind::Declaration),
        Stmt::Expr(e) => kinds.push(match e {
            Expr::Assign { .. } => LineKind::Assignment,
            Expr::Unary { op: "++" | "--", .. } | Expr::Postfix { .. } => LineKind::Assignment,
            Expr::MethodCall { .. } | Expr::New { .. } => LineKind::Call,
            _ => LineKind::Other,
        }),
        Stmt::If { then, otherwise, .. } => {
            kinds.push(LineKind::Condition);
            classify(then, kinds, vars);
            if let Some(o) = otherwise {
                classify(o, kinds, vars);
            }
        }
        Stmt::Switch { cases, .. } => {
            kinds.push(LineKind::Condition);
            for c in cases {
                for s in &c.body {
                    classify(s, kinds, vars);
                }
            }
        }
        Stmt::While { body, .. } | Stmt::DoWhile { body, .. } => {
            kinds.push(LineKind::Loop);
            classify(body, kinds, vars);
        }
        Stmt::For { init, body, .. } => {
            kinds.push(LineKind::Loop);
            for s in init {
                if let Stmt::LocalVar { declarators, .. } = s {
                    *vars += declarators.len() as u32;
                }
            }
            classify(body, kinds, vars);
        }
        Stmt::ForEach { body, .. } => {
            kinds.push(LineKind::Loop);
            *vars += 1;
            classify(body, kinds, vars);
        }
        Stmt::Return(_) => kinds.push(LineKind::Return),
        Stmt::Try {
            resources,
            body,
            catches,
            finally,
        } => {
            kinds.push(LineKind::Other);
            for r in resources {
                if let Stmt::LocalVar { declarators, .. } = r {
                    *vars += declarators.len() as u32;
                }
            }
            for s in &body.stmts {
                classify(s, kinds, vars);
            }
            for c in catches {
                for s in &c.body.stmts {
                    classify(s, kinds, vars);
                }
            }
            if let Some(f) = finally {
                for s in &f.stmts {
                    classify(s, kinds, vars);
                }
            }
        }
        Stmt::Synchronized { body, .. } => {
            kinds.push(LineKind::Other);
            for s in &body.stmts {
                classify(s, kinds, vars);
            }
        }
        Stmt::Labeled { body, .. } => classify(body, kinds, vars),
        Stmt::Throw(_) | Stmt::Break(_) | Stmt::Continue(_) | Stmt::Yield(_) | Stmt::Assert { .. } => {
            kinds.push(LineKind::Other)
        }
    }
}

/// Walks a method body collecting call sites and instantiations, with a
/// lexical scope of local variable types for receiver inference.
struct Scan<'f> {
    scopes: Vec<HashMap<String, String>>,
    fields: &'f [String],
    /// Depth inside anonymous or local class bodies.
    nested_class: usize,
    calls: Vec<CallSite>,
    instantiated: Vec<String>,
    returned_new: Vec<String>,
    assigned_fields: Vec<String>,
}

impl<'f> Scan<'f> {
    fn new(fields: &'f [String]) -> Self {
        Scan {
            scopes: vec![HashMap::new()],
            fields,
            nested_class: 0,
            calls: Vec::new(),
            instantiated: Vec::new(),
            returned_new: Vec::new(),
            assigned_fields: Vec::new(),
        }
    }

    fn declare(&mut self, name: &str, ty: &TypeRef) {
        if let Some(scope) = self.scopes.last_mut() {
            scope.insert(name.to_string(), written_type(ty));
        }
    }

    fn declare_raw(&mut self, name: &str, ty: Option<String>) {
        if let Some(scope) = self.scopes.last_mut() {
            scope.insert(name.to_string(), ty.unwrap_or_default());
        }
    }

    fn lookup(&self, name: &str) -> Option<&String> {
        self.scopes.iter().rev().find_map(|s| s.get(name))
    }

    fn push(&mut self) {
        self.scopes.push(HashMap::new());
    }

    fn pop(&mut self) {
        self.scopes.pop();
    }

    fn block(&mut self, b: &Block) {
        self.push();
        for s in &b.stmts {
            self.stmt(s);
        }
        self.pop();
    }

    fn stmt(&mut self, s: &Stmt) {
        match s {
            Stmt::Block(b) => self.block(b),
            Stmt::LocalVar { ty, declarators } => self.local_var(ty, declarators),
            Stmt::LocalClass(t) => self.class_body(&t.members),
            Stmt::Expr(e) | Stmt::Throw(e) | Stmt::Yield(e) => self.expr(e),
            Stmt::If { cond, then, otherwise } => {
                self.expr(cond);
                self.scoped(then);
                if let Some(o) = otherwise {
                    self.scoped(o);
                }
            }
            Stmt::While { cond, body } => {
                self.expr(cond);
                self.scoped(body);
            }
            Stmt::DoWhile { body, cond } => {
                self.scoped(body);
                self.expr(cond);
            }
            Stmt::For { init, cond, update, body } => {
                self.push();
                for s in init {
                    self.stmt(s);
                }
                if let Some(c) = cond {
                    self.expr(c);
                }
                for u in update {
                    self.expr(u);
                }
                self.scoped(body);
                self.pop();
            }
            Stmt::ForEach { ty, name, iterable, body } => {
                self.expr(iterable);
                self.push();
                if ty.name == "var" {
                    self.declare_raw(name, None);
                } else {
                    self.declare(name, ty);
                }
                self.scoped(body);
                self.pop();
            }
            Stmt::Return(value) => {
                if let Some(v) = value {
                    if self.nested_class == 0 {
                        if let Expr::New { ty, .. } = v {
                            self.returned_new.push(ty.simple_name().to_string());
                        }
                    }
                    self.expr(v);
                }
            }
            Stmt::Switch { selector, cases } => {
                self.expr(selector);
                self.cases(cases);
            }
            Stmt::Try {
                resources,
                body,
                catches,
                finally,
            } => {
                self.push();
                for r in resources {
                    self.stmt(r);
                }
                self.block(body);
                self.pop();
                for c in catches {
                    self.push();
                    if let Some(t) = c.types.first() {
                        if c.types.len() == 1 {
                            self.declare(&c.name, t);
                        } else {
                            self.declare_raw(&c.name, None);
                        }
                    }
                    self.block(&c.body);
                    self.pop();
                }
                if let Some(f) = finally {
                    self.block(f);
                }
            }
            Stmt::Synchronized { lock, body } => {
                self.expr(lock);
                self.block(body);
            }
            Stmt::Labeled { body, .. } => self.stmt(body),
            Stmt::Assert { cond, message } => {
                self.expr(cond);
                if let Some(m) = message {
                    self.expr(m);
                }
            }
            Stmt::Break(_) | Stmt::Continue(_) | Stmt::Empty => {}
        }
    }

    fn scoped(&mut self, s: &Stmt) {
        self.push();
        self.stmt(s);
        self.pop();
    }

    fn cases(&mut self, cases: &[SwitchCase]) {
        for c in cases {
            for l in &c.labels {
                if !matches!(l, Expr::Name(_)) {
                    self.expr(l);
                }
            }
            self.push();
            for s in &c.body {
                self.stmt(s);
            }
            self.pop();
        }
    }

    fn local_var(&mut self, ty: &TypeRef, declarators: &[VarDeclarator]) {
        for d in declarators {
            if let Some(init) = &d.init {
                self.expr(init);
            }
            if ty.name == "var" {
                let inferred = match &d.init {
                    Some(Expr::New { ty, .. }) => Some(written_type(ty)),
                    Some(Expr::Cast { ty, .. }) => Some(written_type(ty)),
                    _ => None,
                };
                self.declare_raw(&d.name, inferred);
            } else {
                let mut t = ty.clone();
                t.dims += d.dims;
                self.declare(&d.name, &t);
            }
        }
    }

    /// Members of an anonymous or local class, folded into the enclosing method.
    fn class_body(&mut self, members: &[Member]) {
        self.nested_class += 1;
        // locals of the enclosing method stay visible (effectively final captures)
        for m in members {
            match m {
                Member::Method(md) => {
                    if let Some(b) = &md.body {
                        self.push();
                        for p in &md.params {
                            self.declare(&p.name, &p.ty);
                        }
                        self.block(b);
                        self.pop();
                    }
                }
                Member::Constructor(c) => {
                    self.push();
                    for p in &c.params {
                        self.declare(&p.name, &p.ty);
                    }
                    self.block(&c.body);
                    self.pop();
                }
                Member::Initializer { body, .. } => self.block(body),
                Member::Field(f) => {
                    for d in &f.declarators {
                        if let Some(init) = &d.init {
                            self.expr(init);
                        }
                    }
                }
                Member::Type(t) => self.class_body(&t.members),
                Member::EnumConstant(_) | Member::Opaque(_) => {}
            }
        }
        self.nested_class -= 1;
    }

    fn receiver(&self, e: &Expr) -> Receiver {
        match e {
            Expr::This if self.nested_class > 0 => Receiver::Other,
            Expr::This => Receiver::This,
            Expr::Super if self.nested_class > 0 => Receiver::Other,
            Expr::Super => Receiver::Super,
            Expr::Name(n) => match self.lookup(n) {
                Some(t) if t.is_empty() => Receiver::Other,
                Some(t) => Receiver::Local {
                    name: n.clone(),
                    type_name: t.clone(),
                },
                None => Receiver::Name { name: n.clone() },
            },
            Expr::FieldAccess { target, name } => Receiver::Field {
                of: Box::new(self.receiver(target)),
                name: name.clone(),
            },
            Expr::MethodCall { target, name, .. } => Receiver::Call {
                of: Box::new(match target {
                    Some(t) => self.receiver(t),
                    None if self.nested_class > 0 => Receiver::Other,
                    None => Receiver::Implicit,
                }),
                name: name.clone(),
            },
            Expr::New { ty, body: None, .. } => Receiver::New {
                type_name: written_type(ty),
            },
            Expr::Cast { ty, .. } => Receiver::Cast {
                type_name: written_type(ty),
            },
            _ => Receiver::Other,
        }
    }

    fn note_assignment(&mut self, target: &Expr) {
        if self.nested_class > 0 {
            return;
        }
        let name = match target {
            Expr::FieldAccess { target, name } if matches!(**target, Expr::This) => Some(name),
            Expr::Name(n) if self.lookup(n).is_none() && self.fields.contains(n) => Some(n),
            _ => None,
        };
        if let Some(n) = name {
            if !self.assigned_fields.contains(n) {
                self.assigned_fields.push(n.clone());
            }
        }
    }

    fn expr(&mut self, e: &Expr) {
        match e {
            Expr::Literal(_) | Expr::Name(_) | Expr::This | Expr::Super | Expr::ClassLit(_) => {}
            Expr::FieldAccess { target, .. } => self.expr(target),
            Expr::MethodCall { target, name, args } => {
                if let Some(t) = target {
                    self.expr(t);
                }
                for a in args {
                    self.expr(a);
                }
                if target.is_none() && (name == "this" || name == "super") {
                    return;
                }
                let receiver = match target {
                    Some(t) => self.receiver(t),
                    None => Receiver::Implicit,
                };
                self.calls.push(CallSite {
                    name: name.clone(),
                    receiver,
                    args: args.len() as u32,
                    passes_this: args.iter().any(|a| matches!(a, Expr::This)),
                });
            }
            Expr::New { ty, args, body } => {
                for a in args {
                    self.expr(a);
                }
                if self.nested_class == 0 {
                    self.instantiated.push(ty.simple_name().to_string());
                }
                if let Some(members) = body {
                    self.class_body(members);
                }
            }
            Expr::NewArray { dims, init, .. } => {
                for d in dims {
                    self.expr(d);
                }
                for i in init.iter().flatten() {
                    self.expr(i);
                }
            }
            Expr::ArrayInit(items) => {
                for i in items {
                    self.expr(i);
                }
            }
            Expr::ArrayAccess { array, index } => {
                self.expr(array);
                self.expr(index);
            }
            Expr::Unary { op, operand } => {
                if matches!(*op, "++" | "--") {
                    self.note_assignment(operand);
                }
                self.expr(operand);
            }
            Expr::Postfix { operand, .. } => {
                self.note_assignment(operand);
                self.expr(operand);
            }
            Expr::Binary { lhs, rhs, .. } => {
                self.expr(lhs);
                self.expr(rhs);
            }
            Expr::Assign { target, value, .. } => {
                self.note_assignment(target);
                self.expr(target);
                self.expr(value);
            }
            Expr::Conditional { cond, then, otherwise } => {
                self.expr(cond);
                self.expr(then);
                self.expr(otherwise);
            }
            Expr::Cast { operand, .. } | Expr::InstanceOf { operand, .. } => self.expr(operand),
            Expr::Lambda { params, body } => {
                self.push();
                for p in params {
                    self.declare_raw(p, None);
                }
                match body {
                    LambdaBody::Expr(e) => self.expr(e),
                    LambdaBody::Block(b) => self.block(b),
                }
                self.pop();
            }
            Expr::MethodRef { target, .. } => self.expr(target),
            Expr::Switch { selector, cases } => {
                self.expr(selector);
                self.cases(cases);
            }
        }
    }
}
