//! Random valid IR documents for round-trip tests.

use patsum_core::ir::{IrDocument, IrFile};
use patsum_core::java::ast::Modifier;
use patsum_core::java::{
    Access, CallSite, ClassFeatureRecord, ConstructorRecord, FieldRecord, LineKind, MethodFeatureRecord, MethodRef,
    Parameter, Receiver, TypeKind,
};
use patsum_core::patterns::{PatternInstance, PatternKind};
use rand::seq::SliceRandom;
use rand::Rng;

const WORDS: &[&str] = &[
    "alpha", "Beta", "gamma_1", "δelta", "q\"uote", "back\\slash", "new\nline", "tab\tbed", "", "emoji🙂", "x",
];
const TYPES: &[&str] = &["int", "String", "List", "Map", "long[]", "Object", "T", "byte[][]"];
const LINE_KINDS: [LineKind; 7] = [
    LineKind::Assignment,
    LineKind::Condition,
    LineKind::Loop,
    LineKind::Call,
    LineKind::Return,
    LineKind::Declaration,
    LineKind::Other,
];

fn word<R: Rng>(rng: &mut R) -> String {
    WORDS.choose(rng).unwrap().to_string()
}

fn words<R: Rng>(rng: &mut R, max: usize) -> Vec<String> {
    (0..rng.gen_range(0..=max)).map(|_| word(rng)).collect()
}

fn type_name<R: Rng>(rng: &mut R) -> String {
    TYPES.choose(rng).unwrap().to_string()
}

fn modifiers<R: Rng>(rng: &mut R) -> Vec<Modifier> {
    let mut all = Modifier::ALL.to_vec();
    all.shuffle(rng);
    all.truncate(rng.gen_range(0..4));
    all
}

fn parameter<R: Rng>(rng: &mut R) -> Parameter {
    Parameter {
        type_name: type_name(rng),
        type_arguments: words(rng, 2),
        name: word(rng),
    }
}

fn receiver<R: Rng>(rng: &mut R, depth: u32) -> Receiver {
    match rng.gen_range(0..if depth > 2 { 7 } else { 10 }) {
        0 => Receiver::Implicit,
        1 => Receiver::This,
        2 => Receiver::Super,
        3 => Receiver::Local { name: word(rng), type_name: type_name(rng) },
        4 => Receiver::Name { name: word(rng) },
        5 => Receiver::New { type_name: type_name(rng) },
        6 => Receiver::Other,
        7 => Receiver::Cast { type_name: type_name(rng) },
        8 => Receiver::Field { of: Box::new(receiver(rng, depth + 1)), name: word(rng) },
        _ => Receiver::Call { of: Box::new(receiver(rng, depth + 1)), name: word(rng) },
    }
}

fn method_ref<R: Rng>(rng: &mut R) -> MethodRef {
    MethodRef::new(word(rng), word(rng))
}

fn method<R: Rng>(rng: &mut R) -> MethodFeatureRecord {
    let calls: Vec<CallSite> = (0..rng.gen_range(0..4))
        .map(|_| CallSite {
            name: word(rng),
            receiver: receiver(rng, 0),
            args: rng.gen_range(0..5),
            passes_this: rng.gen_bool(0.2),
        })
        .collect();
    MethodFeatureRecord {
        method_name: word(rng),
        modifier: modifiers(rng),
        return_type: type_name(rng),
        return_type_arguments: words(rng, 2),
        body_line_kinds: (0..rng.gen_range(0..6)).map(|_| *LINE_KINDS.choose(rng).unwrap()).collect(),
        variable_count: rng.gen_range(0..10),
        line_count: rng.gen(),
        parameters: (0..rng.gen_range(0..3)).map(|_| parameter(rng)).collect(),
        has_override_annotation: rng.gen(),
        is_abstract: rng.gen(),
        outgoing_calls_local: calls.iter().map(|c| c.name.clone()).collect(),
        calls,
        instantiated_types: words(rng, 2),
        returned_new_types: words(rng, 1),
        assigned_fields: words(rng, 2),
        callers: (0..rng.gen_range(0..3)).map(|_| method_ref(rng)).collect(),
        callees: (0..rng.gen_range(0..3)).map(|_| method_ref(rng)).collect(),
        external_calls: words(rng, 2),
    }
}

fn class<R: Rng>(rng: &mut R, package: &str, name: String) -> ClassFeatureRecord {
    let kind = *[TypeKind::Class, TypeKind::Interface, TypeKind::Enum].choose(rng).unwrap();
    let qualified = if package.is_empty() { name.clone() } else { format!("{package}.{name}") };
    ClassFeatureRecord {
        class_name: name,
        qualified_name: qualified,
        package: package.to_string(),
        kind,
        modifier: *[Access::Public, Access::Protected, Access::PackagePrivate, Access::Private].choose(rng).unwrap(),
        other_modifiers: modifiers(rng),
        is_interface: kind == TypeKind::Interface,
        is_abstract: kind == TypeKind::Class && rng.gen(),
        extends_from: words(rng, 1),
        implements_from: words(rng, 2),
        type_parameters: words(rng, 2),
        enclosing: rng.gen_bool(0.2).then(|| word(rng)),
        resolved_extends: words(rng, 1),
        resolved_implements: words(rng, 2),
        fields: (0..rng.gen_range(0..4))
            .map(|_| FieldRecord {
                name: word(rng),
                data_type: type_name(rng),
                type_arguments: words(rng, 2),
                modifier: modifiers(rng),
            })
            .collect(),
        constructors: (0..rng.gen_range(0..3))
            .map(|_| ConstructorRecord {
                modifier: modifiers(rng),
                parameters: (0..rng.gen_range(0..3)).map(|_| parameter(rng)).collect(),
            })
            .collect(),
        methods: (0..rng.gen_range(0..5)).map(|_| method(rng)).collect(),
        method_call_count: rng.gen_range(0..100),
    }
}

/// A document that passes `validate`: known classes only, each bound to
/// one role per instance.
pub fn document<R: Rng>(rng: &mut R) -> IrDocument {
    let mut doc = IrDocument::new(word(rng));
    let mut counter = 0;
    for _ in 0..rng.gen_range(0..4) {
        let package = ["", "a", "a.b", "p.q.r"].choose(rng).unwrap().to_string();
        let classes = (0..rng.gen_range(0..4))
            .map(|_| {
                counter += 1;
                class(rng, &package, format!("C{counter}"))
            })
            .collect();
        doc.files.push(IrFile {
            path: format!("{}/F{counter}.java", package.replace('.', "/")),
            package,
            imports: words(rng, 3),
            classes,
        });
    }
    let names: Vec<String> = doc.classes().map(|c| c.qualified_name.clone()).collect();
    if names.is_empty() {
        return doc;
    }
    for _ in 0..rng.gen_range(0..4) {
        let kind = *PatternKind::ALL.choose(rng).unwrap();
        let mut inst = PatternInstance::new(kind);
        let mut pool = names.clone();
        pool.shuffle(rng);
        let roles: Vec<_> = kind.required_roles().iter().chain(kind.optional_roles()).copied().collect();
        for role in roles {
            for _ in 0..rng.gen_range(1..3) {
                if let Some(c) = pool.pop() {
                    inst.bind(role, &c);
                }
            }
        }
        for _ in 0..rng.gen_range(0..3) {
            inst.evidence(&word(rng), word(rng));
        }
        doc.patterns.push(inst);
    }
    doc
}
