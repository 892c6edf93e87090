use crate::graph::ProjectGraph;
use crate::java::{ClassFeatureRecord, MethodFeatureRecord, Receiver};

const COLLECTIONS: &[&str] = &[
    "Collection", "List", "ArrayList", "LinkedList", "Set", "HashSet", "LinkedHashSet", "TreeSet", "SortedSet",
    "Queue", "Deque", "ArrayDeque", "Vector", "Stack", "Map", "HashMap", "LinkedHashMap", "TreeMap", "SortedMap",
    "ConcurrentHashMap", "CopyOnWriteArrayList", "CopyOnWriteArraySet", "Iterable",
];

pub(crate) fn simple(name: &str) -> &str {
    name.rsplit('.').next().unwrap_or(name)
}

pub(crate) fn is_collection(data_type: &str) -> bool {
    data_type.ends_with("[]") || COLLECTIONS.contains(&simple(data_type))
}

pub(crate) struct Query<'g> {
    pub g: &'g ProjectGraph,
}

impl<'g> Query<'g> {
    pub fn new(g: &'g ProjectGraph) -> Self {
        Query { g }
    }

    pub fn classes(&self) -> impl Iterator<Item = (&'g str, &'g ClassFeatureRecord)> {
        self.g.types()
    }

    pub fn get(&self, fq: &str) -> Option<&'g ClassFeatureRecord> {
        self.g.get(fq)
    }

    pub fn resolve(&self, written: &str, context: &str) -> Option<String> {
        self.g.resolve_type(written, context)
    }

    pub fn is_abstract_type(&self, fq: &str) -> bool {
        self.get(fq).is_some_and(ClassFeatureRecord::is_abstract_type)
    }

    pub fn is_concrete(&self, fq: &str) -> bool {
        self.get(fq).is_some_and(ClassFeatureRecord::is_concrete_class)
    }

    pub fn related(&self, a: &str, b: &str) -> bool {
        self.g.is_subtype(a, b) || self.g.is_subtype(b, a)
    }

    /// Concrete corpus subtypes of `fq`, breadth first.
    pub fn concrete_descendants(&self, fq: &str) -> Vec<String> {
        self.g
            .descendants_of(fq)
            .into_iter()
            .filter(|d| self.is_concrete(d))
            .collect()
    }

    /// Corpus types mentioned by a field: its own type and, for collections,
    /// its type arguments (or array element type).
    pub fn field_targets(&self, owner: &str, data_type: &str, type_arguments: &[String]) -> Vec<String> {
        let mut out = Vec::new();
        let element = data_type.trim_end_matches("[]");
        if let Some(t) = self.resolve(element, owner) {
            out.push(t);
        }
        if is_collection(data_type) {
            for a in type_arguments {
                if let Some(t) = self.resolve(a, owner) {
                    if !out.contains(&t) {
                        out.push(t);
                    }
                }
            }
        }
        out
    }

    /// Whether `method` declared in `class` overrides one from a corpus
    /// supertype (by name).
    pub fn overrides_corpus_method(&self, class: &str, method: &str) -> Option<String> {
        self.g
            .ancestors_of(class)
            .into_iter()
            .find(|a| self.get(a).is_some_and(|c| c.method(method).is_some()))
    }

    /// The type a method returns, resolved inside its class.
    pub fn return_type(&self, class: &str, m: &MethodFeatureRecord) -> Option<String> {
        self.resolve(&m.return_type, class)
    }

    /// Resolved types instantiated by `return new T()` in the method.
    pub fn returned_new(&self, class: &str, m: &MethodFeatureRecord) -> Vec<String> {
        m.returned_new_types
            .iter()
            .filter_map(|t| self.resolve(t, class))
            .collect()
    }

    pub fn instantiated(&self, class: &str, m: &MethodFeatureRecord) -> Vec<String> {
        m.instantiated_types
            .iter()
            .filter_map(|t| self.resolve(t, class))
            .collect()
    }

    /// Whether any call in `m` goes through field `field` of the enclosing
    /// object to a method that `target` declares or inherits.
    pub fn delegates_through(&self, m: &MethodFeatureRecord, field: &str, target: &str) -> bool {
        m.calls.iter().any(|c| {
            let via_field = match &c.receiver {
                Receiver::Name { name } => name == field,
                Receiver::Field { of, name } => name == field && matches!(**of, Receiver::This),
                _ => false,
            };
            via_field && self.declares_or_inherits(target, &c.name)
        })
    }

    pub fn declares_or_inherits(&self, ty: &str, method: &str) -> bool {
        self.get(ty).is_some_and(|c| c.method(method).is_some()) || self.overrides_corpus_method(ty, method).is_some()
    }

    /// Whether a callee recorded on `m` belongs to `ty` or one of its ancestors.
    pub fn calls_into(&self, m: &MethodFeatureRecord, ty: &str) -> bool {
        m.callees.iter().any(|c| self.g.is_subtype(ty, &c.class))
    }
}
