//! The nine detection rules. Each returns unmerged candidate instances.

use super::query::{is_collection, simple, Query};
use super::{PatternInstance, PatternKind, Role};
use crate::graph::ProjectGraph;
use crate::java::ast::Modifier;
use crate::java::{Access, TypeKind};

/// Singleton: every declared constructor private, a static field of the
/// class's own type and a public static method returning it.
pub fn detect_singleton(g: &ProjectGraph) -> Vec<PatternInstance> {
    let q = Query::new(g);
    let mut out = Vec::new();
    for (fq, c) in q.classes() {
        if c.kind != TypeKind::Class || c.constructors.is_empty() {
            continue;
        }
        if !c.constructors.iter().all(|k| k.modifier.contains(&Modifier::Private)) {
            continue;
        }
        let Some(field) = c
            .fields
            .iter()
            .find(|f| f.is_static() && q.resolve(&f.data_type, fq).as_deref() == Some(fq))
        else {
            continue;
        };
        let Some(accessor) = c.methods.iter().find(|m| {
            m.has(Modifier::Static) && m.access() == Access::Public && q.return_type(fq, m).as_deref() == Some(fq)
        }) else {
            continue;
        };
        let mut inst = PatternInstance::new(PatternKind::Singleton);
        inst.bind(Role::Singleton, fq);
        inst.evidence("CM", "private");
        inst.evidence("FDT", format!("static {} {}", c.class_name, field.name));
        inst.evidence("MRT", format!("{} returns {}", accessor.method_name, c.class_name));
        out.push(inst);
    }
    out
}

/// Creation methods of an abstract type: abstract methods and the corpus
/// types they return.
fn creation_methods<'g>(q: &Query<'g>, fq: &str) -> Vec<(&'g str, Option<String>)> {
    let Some(c) = q.get(fq) else { return Vec::new() };
    c.methods
        .iter()
        .filter(|m| m.is_abstract)
        .map(|m| (m.method_name.as_str(), q.return_type(fq, m)))
        .collect()
}

/// Concrete products a concrete creator returns from `method`, each a
/// concrete corpus subtype of `product`.
fn created_products(q: &Query<'_>, creator: &str, method: &str, product: &str) -> Vec<String> {
    let Some(m) = q.get(creator).and_then(|c| c.method(method)) else {
        return Vec::new();
    };
    if m.is_abstract {
        return Vec::new();
    }
    let mut made = q.returned_new(creator, m);
    made.extend(q.instantiated(creator, m));
    let mut out: Vec<String> = Vec::new();
    for t in made {
        if t != product && q.is_concrete(&t) && q.g.is_subtype(&t, product) && !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

/// Abstract Factory: an abstract type whose abstract methods all return
/// abstract corpus products, at least two of them, and a concrete subtype
/// overriding every one with a concrete product.
pub fn detect_abstract_factory(g: &ProjectGraph) -> Vec<PatternInstance> {
    let q = Query::new(g);
    let mut out = Vec::new();
    for (fq, c) in q.classes() {
        if !c.is_abstract_type() {
            continue;
        }
        let creators = creation_methods(&q, fq);
        if creators.len() < 2 {
            continue;
        }
        let Some(products): Option<Vec<(&str, String)>> = creators
            .iter()
            .map(|(m, p)| p.clone().filter(|p| q.is_abstract_type(p)).map(|p| (*m, p)))
            .collect()
        else {
            continue;
        };
        let mut inst = PatternInstance::new(PatternKind::AbstractFactory);
        inst.bind(Role::AbstractFactory, fq);
        for (_, p) in &products {
            inst.bind(Role::AbstractProduct, p);
        }
        for sub in q.concrete_descendants(fq) {
            let made: Vec<Vec<String>> = products
                .iter()
                .map(|(m, p)| created_products(&q, &sub, m, p))
                .collect();
            if made.iter().any(Vec::is_empty) {
                continue;
            }
            inst.bind(Role::ConcreteFactory, &sub);
            for cp in made.into_iter().flatten() {
                inst.bind(Role::ConcreteProduct, &cp);
            }
        }
        if inst.classes(Role::ConcreteFactory).is_empty() {
            continue;
        }
        inst.evidence("ION/AON", format!("{} is {}", c.class_name, kind_word(c.is_interface)));
        for (m, p) in &products {
            inst.evidence("MRT", format!("{m} returns {}", simple(p)));
        }
        for f in inst.classes(Role::ConcreteFactory).to_vec() {
            inst.evidence("MO", format!("{} overrides all creation methods", simple(&f)));
        }
        out.push(inst);
    }
    out
}

fn kind_word(is_interface: bool) -> &'static str {
    if is_interface {
        "interface"
    } else {
        "abstract class"
    }
}

/// Factory Method: an abstract type with exactly one abstract method
/// returning a corpus type, overridden in a concrete subtype that creates a
/// product subtype.
pub fn detect_factory_method(g: &ProjectGraph) -> Vec<PatternInstance> {
    let q = Query::new(g);
    let mut out = Vec::new();
    for (fq, c) in q.classes() {
        if !c.is_abstract_type() {
            continue;
        }
        let creators: Vec<(&str, String)> = creation_methods(&q, fq)
            .into_iter()
            .filter_map(|(m, p)| p.map(|p| (m, p)))
            .collect();
        let [(method, product)] = creators.as_slice() else {
            continue;
        };
        let mut inst = PatternInstance::new(PatternKind::FactoryMethod);
        inst.bind(Role::Creator, fq);
        inst.bind(Role::Product, product);
        for sub in q.concrete_descendants(fq) {
            let made = created_products(&q, &sub, method, product);
            if made.is_empty() {
                continue;
            }
            inst.bind(Role::ConcreteCreator, &sub);
            for p in made {
                inst.bind(Role::ConcreteProduct, &p);
            }
        }
        if inst.classes(Role::ConcreteCreator).is_empty() {
            continue;
        }
        inst.evidence("ION/AON", format!("{} is {}", c.class_name, kind_word(c.is_interface)));
        inst.evidence("MRT", format!("{method} returns {}", simple(product)));
        out.push(inst);
    }
    out
}

/// Adapter: a concrete class implementing a target, holding a field of an
/// unrelated concrete corpus class, with an overriding target method that
/// calls into that class.
pub fn detect_adapter(g: &ProjectGraph) -> Vec<PatternInstance> {
    let q = Query::new(g);
    let mut out = Vec::new();
    for (fq, c) in q.classes() {
        if !c.is_concrete_class() {
            continue;
        }
        // corpus targets from either clause; external targets only via `implements`
        let mut targets: Vec<(String, bool)> = Vec::new();
        for t in c.resolved_extends.iter().chain(c.resolved_implements.iter()) {
            if g.contains(t) && q.is_abstract_type(t) {
                targets.push((t.clone(), true));
            }
        }
        for t in &c.resolved_implements {
            if !g.contains(t) {
                targets.push((t.clone(), false));
            }
        }
        if targets.is_empty() {
            continue;
        }
        for f in &c.fields {
            if f.is_static() || is_collection(&f.data_type) {
                continue;
            }
            let Some(adaptee) = q.resolve(&f.data_type, fq) else { continue };
            if adaptee == fq || !q.is_concrete(&adaptee) || q.related(fq, &adaptee) {
                continue;
            }
            for (target, in_corpus) in &targets {
                if *in_corpus && q.related(&adaptee, target) {
                    continue;
                }
                let bridging = c.methods.iter().find(|m| {
                    let overrides = if *in_corpus {
                        q.declares_or_inherits(target, &m.method_name)
                    } else {
                        m.has_override_annotation
                    };
                    overrides && q.calls_into(m, &adaptee)
                });
                let Some(m) = bridging else { continue };
                let mut inst = PatternInstance::new(PatternKind::Adapter);
                if *in_corpus {
                    inst.bind(Role::Target, target);
                }
                inst.bind(Role::Adapter, fq);
                inst.bind(Role::Adaptee, &adaptee);
                inst.evidence("IMF", format!("{} implements {}", c.class_name, simple(target)));
                inst.evidence("FDT", format!("{} {}", simple(&adaptee), f.name));
                inst.evidence("NaOM", format!("{} calls {}", m.method_name, simple(&adaptee)));
                out.push(inst);
                break;
            }
        }
    }
    out
}

/// Decorator: a subtype of a corpus component holding a field of the
/// component type, taking one in a constructor and delegating through it.
pub fn detect_decorator(g: &ProjectGraph) -> Vec<PatternInstance> {
    let q = Query::new(g);
    let mut out = Vec::new();
    for (fq, c) in q.classes() {
        if c.kind != TypeKind::Class {
            continue;
        }
        for component in g.ancestors_of(fq) {
            let wrapped = c
                .fields
                .iter()
                .find(|f| !f.is_static() && q.resolve(&f.data_type, fq).as_deref() == Some(component.as_str()));
            let Some(field) = wrapped else { continue };
            let takes_component = c.constructors.iter().any(|k| {
                k.parameters
                    .iter()
                    .any(|p| q.resolve(&p.type_name, fq).as_deref() == Some(component.as_str()))
            });
            if !takes_component {
                continue;
            }
            let Some(delegating) = c
                .methods
                .iter()
                .find(|m| q.delegates_through(m, &field.name, &component))
            else {
                continue;
            };
            let mut inst = PatternInstance::new(PatternKind::Decorator);
            inst.bind(Role::Component, &component);
            inst.bind(Role::Decorator, fq);
            let own_subtypes = g.descendants_of(fq);
            for d in own_subtypes.iter().filter(|d| q.is_concrete(d)) {
                inst.bind(Role::ConcreteDecorator, d);
            }
            for cc in q.concrete_descendants(&component) {
                if cc != fq && !own_subtypes.contains(&cc) {
                    inst.bind(Role::ConcreteComponent, &cc);
                }
            }
            inst.evidence("FDT", format!("{} {}", simple(&component), field.name));
            inst.evidence("CP", format!("{}({})", c.class_name, simple(&component)));
            inst.evidence("NaOM", format!("{} delegates to {}", delegating.method_name, field.name));
            out.push(inst);
            break;
        }
    }
    out
}

/// Facade: fields of at least two unrelated corpus types and one public
/// method whose calls reach two or more of them.
pub fn detect_facade(g: &ProjectGraph) -> Vec<PatternInstance> {
    let q = Query::new(g);
    let mut out = Vec::new();
    for (fq, c) in q.classes() {
        if !c.is_concrete_class() {
            continue;
        }
        let mut parts: Vec<String> = Vec::new();
        for f in &c.fields {
            if is_collection(&f.data_type) {
                continue;
            }
            if let Some(t) = q.resolve(&f.data_type, fq) {
                if t != fq && !parts.contains(&t) {
                    parts.push(t);
                }
            }
        }
        if parts.len() < 2 || parts.iter().any(|p| q.related(fq, p)) {
            continue;
        }
        let Some((m, reached)) = c
            .methods
            .iter()
            .filter(|m| m.access() == Access::Public)
            .map(|m| {
                let reached: Vec<&String> = parts.iter().filter(|p| q.calls_into(m, p)).collect();
                (m, reached)
            })
            .find(|(_, r)| r.len() >= 2)
        else {
            continue;
        };
        let mut inst = PatternInstance::new(PatternKind::Facade);
        inst.bind(Role::Facade, fq);
        for p in &reached {
            inst.bind(Role::Subsystem, p);
        }
        inst.evidence("FDT", parts.iter().map(|p| simple(p)).collect::<Vec<_>>().join(", "));
        inst.evidence(
            "NaOM",
            format!(
                "{} reaches {}",
                m.method_name,
                reached.iter().map(|p| simple(p)).collect::<Vec<_>>().join(", ")
            ),
        );
        out.push(inst);
    }
    out
}

/// Memento: a state holder without mutators (or with restricted access), an
/// originator producing and consuming it, and a caretaker holding or passing
/// it.
pub fn detect_memento(g: &ProjectGraph) -> Vec<PatternInstance> {
    let q = Query::new(g);
    let mut out = Vec::new();
    for (mfq, m) in q.classes() {
        if !m.is_concrete_class() || m.fields.iter().all(|f| f.is_static()) {
            continue;
        }
        let immutable = !m
            .methods
            .iter()
            .any(|x| x.method_name.starts_with("set") || !x.assigned_fields.is_empty());
        let restricted = m.constructors.iter().all(|k| Access::of(&k.modifier) != Access::Public)
            && !m.constructors.is_empty()
            && m.fields.iter().all(|f| f.modifier.contains(&Modifier::Private));
        if !immutable && !restricted {
            continue;
        }
        let mentions_param = |cfq: &str, x: &crate::java::MethodFeatureRecord| {
            x.parameters
                .iter()
                .any(|p| q.resolve(&p.type_name, cfq).as_deref() == Some(mfq))
        };
        let mut inst = PatternInstance::new(PatternKind::Memento);
        inst.bind(Role::Memento, mfq);
        for (ofq, o) in q.classes() {
            if ofq == mfq {
                continue;
            }
            let produces = o.methods.iter().any(|x| {
                q.return_type(ofq, x).as_deref() == Some(mfq) && q.instantiated(ofq, x).iter().any(|t| t == mfq)
            });
            let consumes = o.methods.iter().any(|x| mentions_param(ofq, x));
            if produces && consumes {
                inst.bind(Role::Originator, ofq);
            }
        }
        if inst.classes(Role::Originator).is_empty() {
            continue;
        }
        for (cfq, c) in q.classes() {
            if cfq == mfq || inst.role_of(cfq).is_some() {
                continue;
            }
            let holds = c
                .fields
                .iter()
                .any(|f| q.field_targets(cfq, &f.data_type, &f.type_arguments).iter().any(|t| t == mfq));
            let passes = c
                .methods
                .iter()
                .any(|x| mentions_param(cfq, x) || q.return_type(cfq, x).as_deref() == Some(mfq));
            if holds || passes {
                inst.bind(Role::Caretaker, cfq);
            }
        }
        if inst.classes(Role::Caretaker).is_empty() {
            continue;
        }
        inst.evidence(
            "FMT",
            if immutable {
                format!("{} has no mutators", m.class_name)
            } else {
                format!("{} has restricted access", m.class_name)
            },
        );
        for o in inst.classes(Role::Originator).to_vec() {
            inst.evidence("MRT", format!("{} produces {}", simple(&o), m.class_name));
        }
        for c in inst.classes(Role::Caretaker).to_vec() {
            inst.evidence("FDT/MP", format!("{} keeps {}", simple(&c), m.class_name));
        }
        out.push(inst);
    }
    out
}

/// Whether concrete observers must mark the notification method `@Override`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ObserverVariant {
    #[default]
    Strict,
    Lenient,
}

pub fn detect_observer(g: &ProjectGraph) -> Vec<PatternInstance> {
    detect_observer_with(g, ObserverVariant::Strict)
}

/// Observer: a subscriber type with methods, concrete subscribers overriding
/// one of them, and a publisher holding a collection of subscribers and
/// calling them.
pub fn detect_observer_with(g: &ProjectGraph, variant: ObserverVariant) -> Vec<PatternInstance> {
    let q = Query::new(g);
    let mut out = Vec::new();
    for (sfq, s) in q.classes() {
        if !s.is_abstract_type() || s.methods.is_empty() {
            continue;
        }
        let mut inst = PatternInstance::new(PatternKind::Observer);
        inst.bind(Role::Subscriber, sfq);
        for cfq in q.concrete_descendants(sfq) {
            let Some(c) = q.get(&cfq) else { continue };
            let overriding = c.methods.iter().find(|m| {
                s.method(&m.method_name).is_some()
                    && (variant == ObserverVariant::Lenient || m.has_override_annotation)
            });
            if let Some(m) = overriding {
                inst.bind(Role::ConcreteObserver, &cfq);
                inst.evidence(
                    "MO",
                    format!("{}.{} {}", c.class_name, m.method_name, m.has_override_annotation),
                );
            }
        }
        if inst.classes(Role::ConcreteObserver).is_empty() {
            continue;
        }
        for (pfq, p) in q.classes() {
            if g.is_subtype(pfq, sfq) {
                continue;
            }
            let holder = p.fields.iter().find(|f| {
                is_collection(&f.data_type)
                    && q.field_targets(pfq, &f.data_type, &f.type_arguments).iter().any(|t| t == sfq)
            });
            let Some(holder) = holder else { continue };
            let notify = p.methods.iter().find(|m| {
                m.callees
                    .iter()
                    .any(|c| c.class == sfq && s.method(&c.method).is_some())
            });
            if let Some(n) = notify {
                inst.bind(Role::Publisher, pfq);
                inst.evidence("FDT", format!("{}.{} holds {}", p.class_name, holder.name, s.class_name));
                inst.evidence("NaOM", format!("{}.{} notifies {}", p.class_name, n.method_name, s.class_name));
            }
        }
        if inst.classes(Role::Publisher).is_empty() {
            continue;
        }
        out.push(inst);
    }
    out
}

/// Visitor: an element type with a method taking a visitor-typed parameter
/// and at least one subtype. Visitor, concrete element (calls `visit*` with
/// `this`) and concrete visitor roles are bound when present.
pub fn detect_visitor(g: &ProjectGraph) -> Vec<PatternInstance> {
    let q = Query::new(g);
    let is_visitor_type = |fq: &str| {
        q.get(fq)
            .is_some_and(|c| c.methods.iter().any(|m| m.method_name.starts_with("visit")))
    };
    let mut out = Vec::new();
    for (efq, e) in q.classes() {
        let accept = e.methods.iter().find_map(|m| {
            m.parameters.iter().find_map(|p| {
                match q.resolve(&p.type_name, efq) {
                    Some(v) if is_visitor_type(&v) && v != efq => Some((m, Some(v))),
                    None if simple(&p.type_name).ends_with("Visitor") => Some((m, None)),
                    _ => None,
                }
            })
        });
        let Some((accept, visitor)) = accept else { continue };
        let subtypes = g.subtypes_of(efq).unwrap_or_default();
        if subtypes.is_empty() {
            continue;
        }
        let mut inst = PatternInstance::new(PatternKind::Visitor);
        inst.bind(Role::Element, efq);
        for d in g.descendants_of(efq) {
            let Some(dc) = q.get(&d) else { continue };
            let calls_back = dc
                .methods
                .iter()
                .any(|m| m.calls.iter().any(|c| c.passes_this && c.name.starts_with("visit")));
            if dc.is_concrete_class() && calls_back {
                inst.bind(Role::ConcreteElement, &d);
            }
        }
        if let Some(v) = &visitor {
            inst.bind(Role::Visitor, v);
            for cv in q.concrete_descendants(v) {
                inst.bind(Role::ConcreteVisitor, &cv);
            }
        }
        inst.evidence("MP", format!("{}({})", accept.method_name, accept.parameters.iter().map(|p| simple(&p.type_name)).collect::<Vec<_>>().join(", ")));
        inst.evidence(
            "EXF/IMF",
            format!(
                "{} inherited by {}",
                e.class_name,
                subtypes.iter().map(|s| simple(s)).collect::<Vec<_>>().join(", ")
            ),
        );
        out.push(inst);
    }
    out
}
