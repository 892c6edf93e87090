//! Heuristic design-pattern detection over a [`ProjectGraph`].

mod query;
mod rules;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::ProjectGraph;

pub use rules::{
    detect_abstract_factory, detect_adapter, detect_decorator, detect_facade, detect_factory_method, detect_memento,
    detect_observer, detect_observer_with, detect_singleton, detect_visitor, ObserverVariant,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PatternKind {
    AbstractFactory,
    Adapter,
    Decorator,
    Facade,
    FactoryMethod,
    Memento,
    Observer,
    Singleton,
    Visitor,
}

impl PatternKind {
    pub const ALL: [PatternKind; 9] = [
        PatternKind::AbstractFactory,
        PatternKind::Adapter,
        PatternKind::Decorator,
        PatternKind::Facade,
        PatternKind::FactoryMethod,
        PatternKind::Memento,
        PatternKind::Observer,
        PatternKind::Singleton,
        PatternKind::Visitor,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PatternKind::AbstractFactory => "AbstractFactory",
            PatternKind::Adapter => "Adapter",
            PatternKind::Decorator => "Decorator",
            PatternKind::Facade => "Facade",
            PatternKind::FactoryMethod => "FactoryMethod",
            PatternKind::Memento => "Memento",
            PatternKind::Observer => "Observer",
            PatternKind::Singleton => "Singleton",
            PatternKind::Visitor => "Visitor",
        }
    }

    /// Lowercase words, e.g. "factory method".
    pub fn words(self) -> &'static str {
        match self {
            PatternKind::AbstractFactory => "abstract factory",
            PatternKind::Adapter => "adapter",
            PatternKind::Decorator => "decorator",
            PatternKind::Facade => "facade",
            PatternKind::FactoryMethod => "factory method",
            PatternKind::Memento => "memento",
            PatternKind::Observer => "observer",
            PatternKind::Singleton => "singleton",
            PatternKind::Visitor => "visitor",
        }
    }

    pub fn required_roles(self) -> &'static [Role] {
        use Role::*;
        match self {
            PatternKind::AbstractFactory => &[AbstractFactory, ConcreteFactory, AbstractProduct],
            PatternKind::Adapter => &[Adapter, Adaptee],
            PatternKind::Decorator => &[Component, Decorator],
            PatternKind::Facade => &[Facade, Subsystem],
            PatternKind::FactoryMethod => &[Creator, ConcreteCreator, Product],
            PatternKind::Memento => &[Originator, Memento, Caretaker],
            PatternKind::Observer => &[Subscriber, ConcreteObserver, Publisher],
            PatternKind::Singleton => &[Singleton],
            PatternKind::Visitor => &[Element],
        }
    }

    pub fn optional_roles(self) -> &'static [Role] {
        use Role::*;
        match self {
            PatternKind::AbstractFactory => &[ConcreteProduct],
            PatternKind::Adapter => &[Target],
            PatternKind::Decorator => &[ConcreteDecorator, ConcreteComponent],
            PatternKind::Facade => &[],
            PatternKind::FactoryMethod => &[ConcreteProduct],
            PatternKind::Memento => &[],
            PatternKind::Observer => &[],
            PatternKind::Singleton => &[],
            PatternKind::Visitor => &[ConcreteElement, Visitor, ConcreteVisitor],
        }
    }

    /// The role whose class names the instance.
    pub fn principal_role(self) -> Role {
        match self {
            PatternKind::AbstractFactory => Role::AbstractFactory,
            PatternKind::Adapter => Role::Adapter,
            PatternKind::Decorator => Role::Decorator,
            PatternKind::Facade => Role::Facade,
            PatternKind::FactoryMethod => Role::Creator,
            PatternKind::Memento => Role::Memento,
            PatternKind::Observer => Role::Subscriber,
            PatternKind::Singleton => Role::Singleton,
            PatternKind::Visitor => Role::Element,
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown pattern kind {0:?}")]
pub struct UnknownPattern(pub String);

impl FromStr for PatternKind {
    type Err = UnknownPattern;

    /// Accepts `AbstractFactory`, `abstract-factory`, `abstract_factory` and
    /// `abstract factory`, case-insensitively.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s
            .chars()
            .filter(|c| !matches!(c, '-' | '_' | ' '))
            .flat_map(char::to_lowercase)
            .collect();
        PatternKind::ALL
            .into_iter()
            .find(|k| k.as_str().to_lowercase() == key)
            .ok_or_else(|| UnknownPattern(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Role {
    AbstractFactory,
    ConcreteFactory,
    AbstractProduct,
    ConcreteProduct,
    Target,
    Adapter,
    Adaptee,
    Component,
    Decorator,
    ConcreteDecorator,
    ConcreteComponent,
    Facade,
    Subsystem,
    Creator,
    ConcreteCreator,
    Product,
    Originator,
    Memento,
    Caretaker,
    Subscriber,
    ConcreteObserver,
    Publisher,
    Singleton,
    Element,
    ConcreteElement,
    Visitor,
    ConcreteVisitor,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::AbstractFactory => "AbstractFactory",
            Role::ConcreteFactory => "ConcreteFactory",
            Role::AbstractProduct => "AbstractProduct",
            Role::ConcreteProduct => "ConcreteProduct",
            Role::Target => "Target",
            Role::Adapter => "Adapter",
            Role::Adaptee => "Adaptee",
            Role::Component => "Component",
            Role::Decorator => "Decorator",
            Role::ConcreteDecorator => "ConcreteDecorator",
            Role::ConcreteComponent => "ConcreteComponent",
            Role::Facade => "Facade",
            Role::Subsystem => "Subsystem",
            Role::Creator => "Creator",
            Role::ConcreteCreator => "ConcreteCreator",
            Role::Product => "Product",
            Role::Originator => "Originator",
            Role::Memento => "Memento",
            Role::Caretaker => "Caretaker",
            Role::Subscriber => "Subscriber",
            Role::ConcreteObserver => "ConcreteObserver",
            Role::Publisher => "Publisher",
            Role::Singleton => "Singleton",
            Role::Element => "Element",
            Role::ConcreteElement => "ConcreteElement",
            Role::Visitor => "Visitor",
            Role::ConcreteVisitor => "ConcreteVisitor",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Evidence {
    pub feature: String,
    pub value: String,
}

impl Evidence {
    pub fn new(feature: &str, value: impl Into<String>) -> Self {
        Evidence {
            feature: feature.to_string(),
            value: value.into(),
        }
    }
}

/// One detected pattern. A role may bind several classes (e.g. every
/// concrete factory), always as fully-qualified names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternInstance {
    pub kind: PatternKind,
    pub roles: BTreeMap<Role, Vec<String>>,
    pub evidence: Vec<Evidence>,
}

impl PatternInstance {
    pub fn new(kind: PatternKind) -> Self {
        PatternInstance {
            kind,
            roles: BTreeMap::new(),
            evidence: Vec::new(),
        }
    }

    /// Binds `class` to `role` unless it already plays another role here.
    pub fn bind(&mut self, role: Role, class: &str) {
        if self.role_of(class).is_some_and(|r| r != role) {
            return;
        }
        let list = self.roles.entry(role).or_default();
        if !list.iter().any(|c| c == class) {
            list.push(class.to_string());
        }
    }

    pub fn evidence(&mut self, feature: &str, value: impl Into<String>) {
        let e = Evidence::new(feature, value);
        if !self.evidence.contains(&e) {
            self.evidence.push(e);
        }
    }

    pub fn classes(&self, role: Role) -> &[String] {
        self.roles.get(&role).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn role_of(&self, class: &str) -> Option<Role> {
        self.roles
            .iter()
            .find(|(_, cs)| cs.iter().any(|c| c == class))
            .map(|(r, _)| *r)
    }

    pub fn principal(&self) -> &str {
        self.classes(self.kind.principal_role())
            .first()
            .map(String::as_str)
            .unwrap_or("")
    }

    pub fn binds_required_roles(&self) -> bool {
        self.kind.required_roles().iter().all(|r| !self.classes(*r).is_empty())
    }

    fn absorb(&mut self, other: PatternInstance) {
        for (role, classes) in other.roles {
            for c in classes {
                self.bind(role, &c);
            }
        }
        for e in other.evidence {
            if !self.evidence.contains(&e) {
                self.evidence.push(e);
            }
        }
    }
}

/// A detection rule: its kind, roles, and matcher.
pub struct PatternRule {
    pub kind: PatternKind,
    pub required_roles: &'static [Role],
    pub matcher: fn(&ProjectGraph) -> Vec<PatternInstance>,
}

pub fn rules() -> [PatternRule; 9] {
    let rule = |kind: PatternKind, matcher: fn(&ProjectGraph) -> Vec<PatternInstance>| PatternRule {
        kind,
        required_roles: kind.required_roles(),
        matcher,
    };
    [
        rule(PatternKind::AbstractFactory, detect_abstract_factory),
        rule(PatternKind::Adapter, detect_adapter),
        rule(PatternKind::Decorator, detect_decorator),
        rule(PatternKind::Facade, detect_facade),
        rule(PatternKind::FactoryMethod, detect_factory_method),
        rule(PatternKind::Memento, detect_memento),
        rule(PatternKind::Observer, detect_observer),
        rule(PatternKind::Singleton, detect_singleton),
        rule(PatternKind::Visitor, detect_visitor),
    ]
}

/// All nine rules, merged and sorted by kind then principal class.
pub fn detect_all(graph: &ProjectGraph) -> Vec<PatternInstance> {
    let mut out = Vec::new();
    for rule in rules() {
        out.extend(merge((rule.matcher)(graph)));
    }
    sort_instances(&mut out);
    out
}

/// Detection restricted to some kinds.
pub fn detect_kinds(graph: &ProjectGraph, kinds: &[PatternKind]) -> Vec<PatternInstance> {
    let mut out: Vec<PatternInstance> = detect_all(graph);
    out.retain(|p| kinds.contains(&p.kind));
    out
}

fn sort_instances(v: &mut [PatternInstance]) {
    v.sort_by(|a, b| a.kind.cmp(&b.kind).then_with(|| a.principal().cmp(b.principal())));
}

/// Merges instances of one kind that share a principal class.
fn merge(instances: Vec<PatternInstance>) -> Vec<PatternInstance> {
    let mut out: Vec<PatternInstance> = Vec::new();
    for inst in instances {
        match out
            .iter_mut()
            .find(|o| o.kind == inst.kind && o.principal() == inst.principal())
        {
            Some(existing) => existing.absorb(inst),
            None => out.push(inst),
        }
    }
    out
}
