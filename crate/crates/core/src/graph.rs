//! Cross-file resolution: inheritance edges and the method call graph.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use indexmap::IndexMap;

use crate::ir::IrFile;
use crate::java::{ClassFeatureRecord, MethodRef, Receiver};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("cyclic inheritance among {}", .0.join(", "))]
    CyclicInheritance(Vec<String>),
    #[error("unknown type {0}")]
    UnknownType(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExternalKind {
    Extends,
    Implements,
    Call,
}

/// A reference leaving the corpus. `from` is a class, or `Class.method` for calls.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExternalRef {
    pub from: String,
    pub kind: ExternalKind,
    pub target: String,
}

#[derive(Debug, Clone, Copy)]
struct Slot {
    file: usize,
    class: usize,
}

#[derive(Debug, Clone)]
pub struct ProjectGraph {
    files: Vec<IrFile>,
    index: IndexMap<String, Slot>,
    pub extends_edges: BTreeSet<(String, String)>,
    pub implements_edges: BTreeSet<(String, String)>,
    pub call_edges: BTreeSet<(MethodRef, MethodRef)>,
    pub externals: BTreeSet<ExternalRef>,
    /// Later declarations of an already indexed qualified name.
    pub duplicates: Vec<String>,
}

/// Builds the graph. Cross-file fields already present on the records are
/// recomputed, so rebuilding from a finished graph's files is a no-op.
pub fn build_graph(mut files: Vec<IrFile>) -> Result<ProjectGraph, GraphError> {
    files.sort_by(|a, b| a.path.cmp(&b.path));
    let mut index = IndexMap::new();
    let mut duplicates = Vec::new();
    for (fi, f) in files.iter_mut().enumerate() {
        for (ci, c) in f.classes.iter_mut().enumerate() {
            c.resolved_extends.clear();
            c.resolved_implements.clear();
            for m in &mut c.methods {
                m.callers.clear();
                m.callees.clear();
                m.external_calls.clear();
            }
            if index.contains_key(&c.qualified_name) {
                duplicates.push(c.qualified_name.clone());
            } else {
                index.insert(c.qualified_name.clone(), Slot { file: fi, class: ci });
            }
        }
    }
    let mut g = ProjectGraph {
        files,
        index,
        extends_edges: BTreeSet::new(),
        implements_edges: BTreeSet::new(),
        call_edges: BTreeSet::new(),
        externals: BTreeSet::new(),
        duplicates,
    };
    g.resolve_inheritance();
    g.check_acyclic()?;
    g.resolve_calls();
    Ok(g)
}

impl ProjectGraph {
    pub fn files(&self) -> &[IrFile] {
        &self.files
    }

    pub fn into_files(self) -> Vec<IrFile> {
        self.files
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn contains(&self, fq: &str) -> bool {
        self.index.contains_key(fq)
    }

    pub fn get(&self, fq: &str) -> Option<&ClassFeatureRecord> {
        self.index.get(fq).map(|s| &self.files[s.file].classes[s.class])
    }

    fn get_mut(&mut self, fq: &str) -> Option<&mut ClassFeatureRecord> {
        let s = *self.index.get(fq)?;
        Some(&mut self.files[s.file].classes[s.class])
    }

    /// Types in declaration order.
    pub fn types(&self) -> impl Iterator<Item = (&str, &ClassFeatureRecord)> {
        self.index
            .iter()
            .map(|(k, s)| (k.as_str(), &self.files[s.file].classes[s.class]))
    }

    pub fn file_of(&self, fq: &str) -> Option<&IrFile> {
        self.index.get(fq).map(|s| &self.files[s.file])
    }

    /// Direct subtypes in declaration order.
    pub fn subtypes_of(&self, fq: &str) -> Result<Vec<String>, GraphError> {
        if !self.contains(fq) {
            return Err(GraphError::UnknownType(fq.to_string()));
        }
        Ok(self
            .types()
            .filter(|(_, c)| c.supertypes().any(|s| s == fq))
            .map(|(k, _)| k.to_string())
            .collect())
    }

    /// All corpus subtypes, breadth first.
    pub fn descendants_of(&self, fq: &str) -> Vec<String> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        let mut queue = VecDeque::from([fq.to_string()]);
        while let Some(t) = queue.pop_front() {
            for s in self.subtypes_of(&t).unwrap_or_default() {
                if seen.insert(s.clone()) {
                    out.push(s.clone());
                    queue.push_back(s);
                }
            }
        }
        out
    }

    /// Corpus supertypes, nearest first. External supertypes are skipped.
    pub fn ancestors_of(&self, fq: &str) -> Vec<String> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        let mut queue = VecDeque::from([fq.to_string()]);
        while let Some(t) = queue.pop_front() {
            let Some(c) = self.get(&t) else { continue };
            for s in c.supertypes() {
                if self.contains(s) && seen.insert(s.clone()) {
                    out.push(s.clone());
                    queue.push_back(s.clone());
                }
            }
        }
        out
    }

    /// `sub` equals `sup` or inherits from it within the corpus.
    pub fn is_subtype(&self, sub: &str, sup: &str) -> bool {
        sub == sup || self.ancestors_of(sub).iter().any(|a| a == sup)
    }

    /// Supertype names, corpus or external, nearest first.
    pub fn all_supertype_names(&self, fq: &str) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        let mut queue = VecDeque::from([fq.to_string()]);
        while let Some(t) = queue.pop_front() {
            let Some(c) = self.get(&t) else { continue };
            for s in c.supertypes() {
                if !out.contains(s) {
                    out.push(s.clone());
                    queue.push_back(s.clone());
                }
            }
        }
        out
    }

    /// Resolves a written type name as seen from inside `context`.
    pub fn resolve_type(&self, written: &str, context: &str) -> Option<String> {
        let name = written.trim_end_matches("[]");
        if name != written || name.is_empty() {
            return None;
        }
        let ctx = self.get(context)?;
        let file = self.file_of(context)?;
        if name.contains('.') {
            if self.contains(name) {
                return Some(name.to_string());
            }
            let (head, rest) = name.split_once('.')?;
            let base = self.resolve_type(head, context)?;
            let candidate = format!("{base}.{rest}");
            return self.contains(&candidate).then_some(candidate);
        }
        if ctx.type_parameters.iter().any(|p| p == name) {
            return None;
        }
        // the type itself, its members, and enclosing scopes with their members
        let mut scope = Some(ctx.qualified_name.clone());
        while let Some(s) = scope {
            if s.rsplit('.').next() == Some(name) {
                return Some(s);
            }
            let nested = format!("{s}.{name}");
            if self.contains(&nested) {
                return Some(nested);
            }
            for a in self.ancestors_of(&s) {
                let inherited = format!("{a}.{name}");
                if self.contains(&inherited) {
                    return Some(inherited);
                }
            }
            scope = self.get(&s).and_then(|c| c.enclosing.clone());
        }
        for imp in &file.imports {
            if imp.rsplit('.').next() == Some(name) && !imp.ends_with(".*") {
                return self.contains(imp).then(|| imp.clone());
            }
        }
        let same_package = if ctx.package.is_empty() {
            name.to_string()
        } else {
            format!("{}.{name}", ctx.package)
        };
        if self.contains(&same_package) {
            return Some(same_package);
        }
        for imp in &file.imports {
            if let Some(pkg) = imp.strip_suffix(".*") {
                let candidate = format!("{pkg}.{name}");
                if self.contains(&candidate) {
                    return Some(candidate);
                }
            }
        }
        let mut global = self
            .index
            .keys()
            .filter(|k| k.rsplit('.').next() == Some(name) && self.get(k).is_some_and(|c| c.enclosing.is_none()));
        match (global.next(), global.next()) {
            (Some(only), None) => Some(only.clone()),
            _ => None,
        }
    }

    fn resolve_inheritance(&mut self) {
        let keys: Vec<String> = self.index.keys().cloned().collect();
        for fq in keys {
            let c = self.get(&fq).expect("indexed");
            let exts: Vec<String> = c.extends_from.clone();
            let imps: Vec<String> = c.implements_from.clone();
            let mut resolved_ext = Vec::new();
            let mut resolved_imp = Vec::new();
            for e in exts {
                match self.resolve_type(&e, &fq).filter(|t| *t != fq) {
                    Some(t) => {
                        self.extends_edges.insert((fq.clone(), t.clone()));
                        resolved_ext.push(t);
                    }
                    None => {
                        self.externals.insert(ExternalRef {
                            from: fq.clone(),
                            kind: ExternalKind::Extends,
                            target: e.clone(),
                        });
                        resolved_ext.push(e);
                    }
                }
            }
            for i in imps {
                match self.resolve_type(&i, &fq).filter(|t| *t != fq) {
                    Some(t) => {
                        self.implements_edges.insert((fq.clone(), t.clone()));
                        resolved_imp.push(t);
                    }
                    None => {
                        self.externals.insert(ExternalRef {
                            from: fq.clone(),
                            kind: ExternalKind::Implements,
                            target: i.clone(),
                        });
                        resolved_imp.push(i);
                    }
                }
            }
            let c = self.get_mut(&fq).expect("indexed");
            c.resolved_extends = resolved_ext;
            c.resolved_implements = resolved_imp;
        }
    }

    fn check_acyclic(&self) -> Result<(), GraphError> {
        let mut adj: HashMap<&str, Vec<&str>> = HashMap::new();
        for (a, b) in self.extends_edges.iter().chain(self.implements_edges.iter()) {
            adj.entry(a.as_str()).or_default().push(b.as_str());
        }
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state: HashMap<&str, u8> = HashMap::new();
        for start in self.index.keys() {
            if state.get(start.as_str()).copied().unwrap_or(0) != 0 {
                continue;
            }
            let mut stack: Vec<(&str, usize)> = vec![(start.as_str(), 0)];
            state.insert(start.as_str(), 1);
            while let Some(&mut (node, ref mut next)) = stack.last_mut() {
                let succ = adj.get(node).map(Vec::as_slice).unwrap_or(&[]);
                if *next < succ.len() {
                    let s = succ[*next];
                    *next += 1;
                    match state.get(s).copied().unwrap_or(0) {
                        0 => {
                            state.insert(s, 1);
                            stack.push((s, 0));
                        }
                        1 => {
                            let pos = stack.iter().position(|(n, _)| *n == s).unwrap_or(0);
                            let mut cycle: Vec<String> = stack[pos..].iter().map(|(n, _)| n.to_string()).collect();
                            cycle.sort();
                            return Err(GraphError::CyclicInheritance(cycle));
                        }
                        _ => {}
                    }
                } else {
                    state.insert(node, 2);
                    stack.pop();
                }
            }
        }
        Ok(())
    }

    /// Finds the corpus type declaring `method`, starting at `ty` and walking
    /// up its ancestors. Returns the nearest declaring type.
    fn declaring_type(&self, ty: &str, method: &str) -> Option<String> {
        if self.get(ty)?.method(method).is_some() {
            return Some(ty.to_string());
        }
        self.ancestors_of(ty)
            .into_iter()
            .find(|a| self.get(a).is_some_and(|c| c.method(method).is_some()))
    }

    /// Field type as declared, searched in `ty`, its ancestors and enclosing types.
    fn field_type(&self, ty: &str, field: &str) -> Option<(String, String)> {
        let mut scope = Some(ty.to_string());
        while let Some(s) = scope {
            let mut candidates = vec![s.clone()];
            candidates.extend(self.ancestors_of(&s));
            for c in candidates {
                if let Some(f) = self.get(&c).and_then(|r| r.field(field)) {
                    return Some((f.data_type.clone(), c));
                }
            }
            scope = self.get(&s).and_then(|c| c.enclosing.clone());
        }
        None
    }

    /// Static type of a receiver, as a corpus type.
    fn receiver_type(&self, r: &Receiver, context: &str) -> Option<String> {
        match r {
            Receiver::Implicit | Receiver::This => Some(context.to_string()),
            Receiver::Super => self
                .get(context)?
                .resolved_extends
                .first()
                .filter(|s| self.contains(s))
                .cloned(),
            Receiver::Local { type_name, .. } | Receiver::New { type_name } | Receiver::Cast { type_name } => {
                self.resolve_type(type_name, context)
            }
            Receiver::Name { name } => match self.field_type(context, name) {
                Some((ty, owner)) => self.resolve_type(&ty, &owner),
                None => self.resolve_type(name, context),
            },
            Receiver::Field { of, name } => {
                let base = self.receiver_type(of, context)?;
                let (ty, owner) = self.field_type(&base, name)?;
                self.resolve_type(&ty, &owner)
            }
            Receiver::Call { of, name } => {
                let base = match **of {
                    Receiver::Implicit => self.implicit_owner(context, name)?,
                    _ => self.receiver_type(of, context)?,
                };
                let owner = self.declaring_type(&base, name)?;
                let m = self.get(&owner)?.method(name)?;
                self.resolve_type(&m.return_type, &owner)
            }
            Receiver::Other => None,
        }
    }

    /// Type providing an unqualified method: the class, then enclosing types.
    fn implicit_owner(&self, context: &str, method: &str) -> Option<String> {
        let mut scope = Some(context.to_string());
        while let Some(s) = scope {
            if let Some(d) = self.declaring_type(&s, method) {
                return Some(d);
            }
            scope = self.get(&s).and_then(|c| c.enclosing.clone());
        }
        None
    }

    fn resolve_calls(&mut self) {
        let keys: Vec<String> = self.index.keys().cloned().collect();
        let mut callees: HashMap<(String, usize), Vec<MethodRef>> = HashMap::new();
        let mut externals: HashMap<(String, usize), Vec<String>> = HashMap::new();
        let mut callers: HashMap<MethodRef, Vec<MethodRef>> = HashMap::new();
        let mut edges = Vec::new();
        let mut unresolved = Vec::new();
        for fq in &keys {
            let class = self.get(fq).expect("indexed");
            for (mi, m) in class.methods.iter().enumerate() {
                let caller = MethodRef::new(fq.clone(), m.method_name.clone());
                for call in &m.calls {
                    let target = match &call.receiver {
                        Receiver::Implicit => self.implicit_owner(fq, &call.name),
                        r => self
                            .receiver_type(r, fq)
                            .and_then(|t| self.declaring_type(&t, &call.name)),
                    };
                    match target {
                        Some(owner) => {
                            let callee = MethodRef::new(owner, call.name.clone());
                            edges.push((caller.clone(), callee.clone()));
                            let list = callees.entry((fq.clone(), mi)).or_default();
                            if !list.contains(&callee) {
                                list.push(callee.clone());
                            }
                            let back = callers.entry(callee).or_default();
                            if !back.contains(&caller) {
                                back.push(caller.clone());
                            }
                        }
                        None => {
                            unresolved.push(ExternalRef {
                                from: format!("{fq}.{}", m.method_name),
                                kind: ExternalKind::Call,
                                target: call.name.clone(),
                            });
                            let list = externals.entry((fq.clone(), mi)).or_default();
                            if !list.contains(&call.name) {
                                list.push(call.name.clone());
                            }
                        }
                    }
                }
            }
        }
        self.call_edges.extend(edges);
        self.externals.extend(unresolved);
        for fq in &keys {
            let class = self.get_mut(fq).expect("indexed");
            for (mi, m) in class.methods.iter_mut().enumerate() {
                m.callees = callees.remove(&(fq.clone(), mi)).unwrap_or_default();
                m.external_calls = externals.remove(&(fq.clone(), mi)).unwrap_or_default();
                m.callers = callers
                    .get(&MethodRef::new(fq.clone(), m.method_name.clone()))
                    .cloned()
                    .unwrap_or_default();
            }
        }
    }
}
