//! Template summaries: sentence plans over the IR, then surface realisation.

mod realise;

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::ir::IrDocument;
use crate::java::{Access, ClassFeatureRecord, MethodFeatureRecord, MethodRef, TypeKind};
use crate::patterns::{PatternInstance, Role};

pub use realise::{article, coordinate, plural, realise, split_identifier, third_person};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanKind {
    Role,
    Declaration,
    Purpose,
    MethodEnum,
    CallGraph,
    NoPattern,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SentencePlan {
    pub kind: PlanKind,
    pub slots: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryDocument {
    pub class_name: String,
    pub qualified_name: String,
    pub sentences: Vec<String>,
    pub trace: Vec<SentencePlan>,
}

impl SummaryDocument {
    pub fn text(&self) -> String {
        self.sentences.join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SummaryError {
    #[error("sentence plan is missing slot {0:?}")]
    MissingSlot(String),
}

/// Output switches for two alternative layouts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SummaryOptions {
    /// Method enumeration as `void update` instead of `update (void)`.
    pub compat_table1: bool,
    /// The creator layout with a comma splice and `calls only one method : …`.
    pub compat_table3: bool,
}

pub fn summarise(doc: &IrDocument) -> Vec<SummaryDocument> {
    summarise_with(doc, SummaryOptions::default())
}

pub fn summarise_with(doc: &IrDocument, options: SummaryOptions) -> Vec<SummaryDocument> {
    let ctx = Context::new(doc);
    doc.classes().map(|c| summarise_class(&ctx, c, options)).collect()
}

/// Summary of one class entry, by qualified name.
pub fn summarise_one(doc: &IrDocument, qualified_name: &str, options: SummaryOptions) -> Option<SummaryDocument> {
    let ctx = Context::new(doc);
    doc.class(qualified_name).map(|c| summarise_class(&ctx, c, options))
}

fn summarise_class(ctx: &Context<'_>, c: &ClassFeatureRecord, options: SummaryOptions) -> SummaryDocument {
    let plans = plan(ctx, c, options);
    let mut sentences: Vec<String> = plans
        .iter()
        .map(|p| realise(p).expect("planner fills every required slot"))
        .collect();
    if options.compat_table3 && ctx.role_of(&c.qualified_name).is_some_and(|(_, r)| r == Role::Creator) {
        // role, then the comma-spliced second role sentence and declaration
        if sentences.len() >= 3 {
            let decl = sentences.remove(2);
            let spliced = sentences[1].trim_end_matches('.').to_string();
            sentences[1] = format!("{spliced}, {decl}");
        }
    }
    SummaryDocument {
        class_name: c.class_name.clone(),
        qualified_name: c.qualified_name.clone(),
        sentences,
        trace: plans,
    }
}

/// Lookups over the document shared by all class summaries.
struct Context<'d> {
    classes: HashMap<&'d str, &'d ClassFeatureRecord>,
    subtypes: HashMap<&'d str, Vec<&'d str>>,
    patterns: &'d [PatternInstance],
}

impl<'d> Context<'d> {
    fn new(doc: &'d IrDocument) -> Self {
        let mut classes = HashMap::new();
        let mut subtypes: HashMap<&str, Vec<&str>> = HashMap::new();
        for c in doc.classes() {
            classes.insert(c.qualified_name.as_str(), c);
            for s in c.supertypes() {
                let list = subtypes.entry(s.as_str()).or_default();
                if !list.contains(&c.qualified_name.as_str()) {
                    list.push(c.qualified_name.as_str());
                }
            }
        }
        Context {
            classes,
            subtypes,
            patterns: &doc.patterns,
        }
    }

    fn simple(&self, fq: &str) -> String {
        self.classes
            .get(fq)
            .map(|c| c.class_name.clone())
            .unwrap_or_else(|| fq.rsplit('.').next().unwrap_or(fq).to_string())
    }

    fn direct_subtypes(&self, fq: &str) -> Vec<String> {
        self.subtypes
            .get(fq)
            .map(|v| v.iter().map(|s| self.simple(s)).collect())
            .unwrap_or_default()
    }

    fn ancestors(&self, fq: &str) -> Vec<&'d ClassFeatureRecord> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut queue: VecDeque<&str> = VecDeque::from([fq]);
        while let Some(cur) = queue.pop_front() {
            let Some(c) = self.classes.get(cur) else { continue };
            for s in c.supertypes() {
                if let Some(sc) = self.classes.get(s.as_str()) {
                    if seen.insert(s.as_str()) {
                        out.push(*sc);
                        queue.push_back(s.as_str());
                    }
                }
            }
        }
        out
    }

    /// All roles a class plays, in pattern order.
    fn roles_of(&self, fq: &str) -> Vec<(&'d PatternInstance, Role)> {
        self.patterns
            .iter()
            .filter_map(|p| p.role_of(fq).map(|r| (p, r)))
            .collect()
    }

    /// The role used for the summary: the first one with its own template,
    /// otherwise the first one at all.
    fn role_of(&self, fq: &str) -> Option<(&'d PatternInstance, Role)> {
        let all = self.roles_of(fq);
        all.iter()
            .copied()
            .find(|(_, r)| has_role_template(*r))
            .or_else(|| all.first().copied())
    }
}

fn has_role_template(r: Role) -> bool {
    matches!(
        r,
        Role::ConcreteObserver
            | Role::Subscriber
            | Role::Publisher
            | Role::Element
            | Role::AbstractFactory
            | Role::Creator
            | Role::Adapter
            | Role::Caretaker
            | Role::Singleton
            | Role::Decorator
            | Role::Facade
            | Role::Memento
    )
}

fn strings<I, S>(items: I) -> Vec<String>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    items.into_iter().map(Into::into).collect()
}

fn yes(b: bool) -> Vec<String> {
    vec![if b { "yes" } else { "no" }.to_string()]
}

/// Sentence plans for one class in the fixed order.
fn plan(ctx: &Context<'_>, c: &ClassFeatureRecord, options: SummaryOptions) -> Vec<SentencePlan> {
    let mut plans = Vec::new();
    let role = ctx.role_of(&c.qualified_name);
    let compat3_creator = options.compat_table3 && role.is_some_and(|(_, r)| r == Role::Creator);
    match role {
        Some((inst, r)) => plans.extend(role_plans(ctx, c, inst, r, options)),
        None => plans.push(realise::plan(PlanKind::NoPattern, &[("subject", vec![c.class_name.clone()])])),
    }
    plans.push(declaration_plan(c));
    let purposes = match role {
        Some((inst, r)) => purpose_plans(ctx, c, inst, r),
        None => Vec::new(),
    };
    if !compat3_creator {
        plans.extend(purposes.iter().cloned());
    }
    if !c.methods.is_empty() {
        let entries = c
            .methods
            .iter()
            .map(|m| {
                if options.compat_table1 {
                    format!("{} {}", m.return_type, m.method_name)
                } else {
                    format!("{} ({})", m.method_name, m.return_type)
                }
            })
            .collect();
        plans.push(realise::plan(
            PlanKind::MethodEnum,
            &[("subject", vec![c.class_name.clone()]), ("methods", entries)],
        ));
    }
    if compat3_creator {
        plans.extend(purposes);
    }
    for m in &c.methods {
        if let Some(p) = call_graph_plan(ctx, c, m, options) {
            plans.push(p);
        }
    }
    plans
}

fn declaration_plan(c: &ClassFeatureRecord) -> SentencePlan {
    let kind = match c.kind {
        TypeKind::Class => "class",
        TypeKind::Interface => "interface",
        TypeKind::Enum => "enum",
    };
    let simple = |n: &String| n.rsplit('.').next().unwrap_or(n).to_string();
    realise::plan(
        PlanKind::Declaration,
        &[
            ("access", vec![c.modifier.as_str().to_string()]),
            ("abstract", yes(c.is_abstract)),
            ("kind", vec![kind.to_string()]),
            ("extends", c.extends_from.iter().map(simple).collect()),
            ("implements", c.implements_from.iter().map(simple).collect()),
        ],
    )
}

/// "String parameter of eventType, File parameter of file".
fn parameter_phrase(m: &MethodFeatureRecord) -> String {
    m.parameters
        .iter()
        .map(|p| format!("{} parameter of {}", p.type_name, p.name))
        .collect::<Vec<_>>()
        .join(", ")
}

/// "updates String parameter of eventType" from `update(String eventType)`.
fn method_clause(m: &MethodFeatureRecord) -> String {
    let words = split_identifier(&m.method_name);
    let verb = third_person(words.first().map(String::as_str).unwrap_or(&m.method_name));
    let params = parameter_phrase(m);
    if params.is_empty() {
        verb
    } else {
        format!("{verb} {params}")
    }
}

fn inherited_by(names: &[String]) -> Option<String> {
    (!names.is_empty()).then(|| format!("is inherited by {}", names.join(", ")))
}

fn role_plans(
    ctx: &Context<'_>,
    c: &ClassFeatureRecord,
    inst: &PatternInstance,
    role: Role,
    options: SummaryOptions,
) -> Vec<SentencePlan> {
    let subject = vec![c.class_name.clone()];
    let names = |r: Role| -> Vec<String> { inst.classes(r).iter().map(|fq| ctx.simple(fq)).collect() };
    let acts = |role_word: &str, objects: Vec<String>, clauses: Vec<String>| {
        realise::plan(
            PlanKind::Role,
            &[
                ("subject", subject.clone()),
                ("role", vec![role_word.to_string()]),
                ("objects", objects),
                ("clauses", clauses),
            ],
        )
    };
    let plan = match role {
        Role::ConcreteObserver => {
            let subscribers: Vec<&ClassFeatureRecord> = inst
                .classes(Role::Subscriber)
                .iter()
                .filter_map(|s| ctx.classes.get(s.as_str()).copied())
                .collect();
            let overriding = c
                .methods
                .iter()
                .find(|m| subscribers.iter().any(|s| s.method(&m.method_name).is_some()));
            acts(
                "concrete observer inside the Observer Pattern",
                Vec::new(),
                overriding.map(method_clause).into_iter().collect(),
            )
        }
        Role::Subscriber => acts(
            "subscriber inside the Observer Pattern",
            Vec::new(),
            inherited_by(&names(Role::ConcreteObserver)).into_iter().collect(),
        ),
        Role::Publisher => acts(
            "publisher inside the Observer Pattern",
            Vec::new(),
            vec![format!("notifies {}", names(Role::Subscriber).join(", "))],
        ),
        Role::Element => {
            let visitors = names(Role::Visitor);
            let accept = c
                .methods
                .iter()
                .find(|m| {
                    m.parameters.iter().any(|p| {
                        let t = p.type_name.rsplit('.').next().unwrap_or(&p.type_name);
                        visitors.iter().any(|v| v == t) || t.ends_with("Visitor")
                    })
                })
                .or_else(|| c.methods.iter().find(|m| !m.parameters.is_empty()));
            let mut clauses: Vec<String> = inherited_by(&ctx.direct_subtypes(&c.qualified_name)).into_iter().collect();
            clauses.extend(accept.map(method_clause));
            acts("visitor", vec![format!("element {}", c.class_name)], clauses)
        }
        Role::AbstractFactory => acts(
            "abstract factory",
            names(Role::AbstractProduct),
            inherited_by(&ctx.direct_subtypes(&c.qualified_name)).into_iter().collect(),
        ),
        Role::Creator if options.compat_table3 => {
            let lead = realise::plan(
                PlanKind::Role,
                &[
                    ("subject", vec![format!("The {} class", c.class_name)]),
                    ("role", vec!["abstract creator in the factory method pattern".to_string()]),
                ],
            );
            let second = acts(
                "factory method",
                names(Role::Product),
                inherited_by(&subject).into_iter().collect(),
            );
            return vec![lead, second];
        }
        Role::Creator => {
            let word = if c.is_abstract_type() { "abstract creator" } else { "creator" };
            acts(
                word,
                names(Role::Product),
                inherited_by(&ctx.direct_subtypes(&c.qualified_name)).into_iter().collect(),
            )
        }
        Role::Adapter => {
            let target = adapter_target(ctx, c, inst).map(|(t, _)| t);
            let bridged = adapter_method(ctx, c, inst);
            let clause = match (bridged, target) {
                (Some(m), Some(t)) => vec![format!("overrides {}{t}", m.method_name)],
                (Some(m), None) => vec![format!("overrides {}", m.method_name)],
                _ => Vec::new(),
            };
            acts("Adapter", Vec::new(), clause)
        }
        Role::Caretaker => acts(
            "caretaker",
            names(Role::Memento).into_iter().map(|m| format!("memento {m}")).collect(),
            c.methods.iter().map(method_clause).collect(),
        ),
        Role::Memento => acts(
            "memento",
            names(Role::Originator).into_iter().map(|o| format!("originator {o}")).collect(),
            Vec::new(),
        ),
        Role::Singleton => {
            let accessor = c.methods.iter().find(|m| {
                m.modifier.contains(&crate::java::ast::Modifier::Static)
                    && m.access() == Access::Public
                    && m.return_type == c.class_name
            });
            acts(
                "singleton",
                Vec::new(),
                accessor.map(|m| format!("is reached through {}", m.method_name)).into_iter().collect(),
            )
        }
        Role::Decorator => acts(
            "decorator",
            names(Role::Component).into_iter().map(|k| format!("component {k}")).collect(),
            inherited_by(&names(Role::ConcreteDecorator)).into_iter().collect(),
        ),
        Role::Facade => acts("facade", names(Role::Subsystem), Vec::new()),
        _ => realise::plan(
            PlanKind::Role,
            &[("subject", subject.clone()), ("pattern", vec![inst.kind.words().to_string()])],
        ),
    };
    vec![plan]
}

/// The adapter's target name and whether it is an interface.
fn adapter_target(ctx: &Context<'_>, c: &ClassFeatureRecord, inst: &PatternInstance) -> Option<(String, bool)> {
    if let Some(t) = inst.classes(Role::Target).first() {
        let interface = ctx
            .classes
            .get(t.as_str())
            .is_none_or(|tc| tc.kind == TypeKind::Interface);
        return Some((ctx.simple(t), interface));
    }
    c.implements_from
        .first()
        .map(|t| (t.rsplit('.').next().unwrap_or(t).to_string(), true))
}

/// The adapter method that calls into the adaptee.
fn adapter_method<'c>(
    ctx: &Context<'_>,
    c: &'c ClassFeatureRecord,
    inst: &PatternInstance,
) -> Option<&'c MethodFeatureRecord> {
    let adaptee = inst.classes(Role::Adaptee).first()?;
    let mut owners: Vec<String> = vec![adaptee.clone()];
    owners.extend(ctx.ancestors(adaptee).iter().map(|a| a.qualified_name.clone()));
    c.methods
        .iter()
        .find(|m| m.callees.iter().any(|k| owners.contains(&k.class)))
}

fn purpose(text: String) -> SentencePlan {
    realise::plan(PlanKind::Purpose, &[("text", vec![text])])
}

fn purpose_plans(
    ctx: &Context<'_>,
    c: &ClassFeatureRecord,
    inst: &PatternInstance,
    role: Role,
) -> Vec<SentencePlan> {
    match role {
        Role::ConcreteObserver => {
            let mut words = split_identifier(&c.class_name);
            if words.last().map(String::as_str) != Some("Listener") || words.len() < 2 {
                return Vec::new();
            }
            words.pop();
            let mut words: Vec<String> = words.into_iter().map(|w| w.to_lowercase()).collect();
            if words.last().map(String::as_str) == Some("notification") {
                let last = words.pop().unwrap_or_default();
                words.push(plural(&last));
            } else {
                words.push("notifications".to_string());
            }
            vec![purpose(format!("it sends {}", words.join(" ")))]
        }
        Role::Adapter => {
            let Some(adaptee) = inst.classes(Role::Adaptee).first().map(|a| ctx.simple(a)) else {
                return Vec::new();
            };
            let Some((target, interface)) = adapter_target(ctx, c, inst) else {
                return Vec::new();
            };
            let (noun, verb) = if interface { ("interface", "implements") } else { ("class", "extends") };
            vec![
                purpose(format!(
                    "it adapts the {adaptee} class to use {} {target} {noun}",
                    article(&target)
                )),
                purpose(format!(
                    "{} {verb} the {target} {noun} and internally holds a reference to {} {adaptee} object",
                    c.class_name,
                    article(&adaptee)
                )),
            ]
        }
        Role::ConcreteCreator => {
            let creators: Vec<&ClassFeatureRecord> = inst
                .classes(Role::Creator)
                .iter()
                .filter_map(|s| ctx.classes.get(s.as_str()).copied())
                .collect();
            c.methods
                .iter()
                .find(|m| {
                    !m.returned_new_types.is_empty()
                        && creators.iter().any(|k| k.method(&m.method_name).is_some_and(|x| x.is_abstract))
                })
                .map(|m| {
                    purpose(format!(
                        "it overrides the {}() method to return an instance of {}",
                        m.method_name, m.returned_new_types[0]
                    ))
                })
                .into_iter()
                .collect()
        }
        Role::Creator => {
            let product = inst.classes(Role::Product).first().map(|p| ctx.simple(p));
            let factory = c.methods.iter().find(|m| m.is_abstract);
            match (factory, product) {
                (Some(m), Some(p)) => vec![purpose(format!(
                    "the {} is overridden by all subclasses for {} types for each type of {}",
                    m.method_name,
                    split_identifier(&p).join(" ").to_lowercase(),
                    split_identifier(&c.class_name).join(" ").to_lowercase()
                ))],
                _ => Vec::new(),
            }
        }
        Role::ConcreteFactory => {
            let made: Vec<String> = c
                .methods
                .iter()
                .flat_map(|m| m.returned_new_types.iter().cloned())
                .collect();
            if made.is_empty() {
                Vec::new()
            } else {
                vec![purpose(format!("it creates the {} products", coordinate(&made)))]
            }
        }
        _ => Vec::new(),
    }
}

/// Whether `m` has no callers of its own but overrides a supertype method
/// that does.
fn inherits_callers(ctx: &Context<'_>, c: &ClassFeatureRecord, m: &MethodFeatureRecord) -> bool {
    m.callers.is_empty()
        && ctx
            .ancestors(&c.qualified_name)
            .iter()
            .any(|a| a.method(&m.method_name).is_some_and(|x| !x.callers.is_empty()))
}

fn call_graph_plan(
    ctx: &Context<'_>,
    c: &ClassFeatureRecord,
    m: &MethodFeatureRecord,
    options: SummaryOptions,
) -> Option<SentencePlan> {
    let omit_incoming = inherits_callers(ctx, c, m);
    let has_external = !m.external_calls.is_empty();
    if omit_incoming && m.callees.is_empty() && has_external {
        return None;
    }
    let describe = |r: &MethodRef| format!("{} method of class {}", r.method, ctx.simple(&r.class));
    let callers = m.callers.iter().map(describe).collect();
    let callees = if options.compat_table3 && m.callees.len() == 1 {
        strings(m.callees.iter().map(describe))
    } else {
        strings(m.callees.iter().map(|r| r.method.clone()))
    };
    Some(realise::plan(
        PlanKind::CallGraph,
        &[
            ("method", vec![m.method_name.clone()]),
            ("callers", callers),
            ("callees", callees),
            ("omit_incoming", yes(omit_incoming)),
            ("internal_only", yes(!m.callers.is_empty() || has_external)),
            ("compat", yes(options.compat_table3)),
        ],
    ))
}

/// Sentence-level checks: uppercase start (or one of `identifiers`, which
/// keep their own case), one final period, no double spaces, no template
/// markers.
pub fn is_well_formed(sentence: &str, identifiers: &[&str]) -> bool {
    let Some(first) = sentence.chars().next() else { return false };
    let first_word = sentence.split([' ', '.']).next().unwrap_or("");
    (first.is_uppercase() || identifiers.contains(&first_word))
        && sentence.ends_with('.')
        && !sentence.ends_with("..")
        && !sentence.contains("  ")
        && !sentence.contains(['{', '}'])
        && sentence == sentence.trim()
}
