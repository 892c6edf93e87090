use std::collections::BTreeMap;

use super::{PlanKind, SentencePlan, SummaryError};

/// "a" or "an" by the sound of the first letter.
pub fn article(word: &str) -> &'static str {
    let lower = word.to_lowercase();
    const A_DESPITE_VOWEL: [&str; 4] = ["uni", "use", "usu", "one"];
    const AN_DESPITE_CONSONANT: [&str; 3] = ["hour", "honest", "honour"];
    if A_DESPITE_VOWEL.iter().any(|p| lower.starts_with(p)) {
        return "a";
    }
    if AN_DESPITE_CONSONANT.iter().any(|p| lower.starts_with(p)) {
        return "an";
    }
    match lower.chars().next() {
        Some('a' | 'e' | 'i' | 'o' | 'u') => "an",
        _ => "a",
    }
}

/// "a", "a and b", "a, b and c".
pub fn coordinate(items: &[String]) -> String {
    match items {
        [] => String::new(),
        [one] => one.clone(),
        [init @ .., last] => format!("{} and {last}", init.join(", ")),
    }
}

/// Splits `camelCase` and `PascalCase` identifiers, keeping acronyms
/// together: `GUIFactory` gives `GUI`, `Factory`.
pub fn split_identifier(name: &str) -> Vec<String> {
    let chars: Vec<char> = name.chars().collect();
    let mut words = Vec::new();
    let mut cur = String::new();
    for (i, &c) in chars.iter().enumerate() {
        if c == '_' || c == '$' {
            if !cur.is_empty() {
                words.push(std::mem::take(&mut cur));
            }
            continue;
        }
        let boundary = c.is_uppercase()
            && !cur.is_empty()
            && (chars[i - 1].is_lowercase()
                || chars[i - 1].is_ascii_digit()
                || chars.get(i + 1).is_some_and(|n| n.is_lowercase()));
        if boundary {
            words.push(std::mem::take(&mut cur));
        }
        cur.push(c);
    }
    if !cur.is_empty() {
        words.push(cur);
    }
    words
}

/// Third person singular of an English verb.
pub fn third_person(verb: &str) -> String {
    let v = verb.to_lowercase();
    if v == "be" {
        return "is".into();
    }
    if v == "have" {
        return "has".into();
    }
    if ["s", "sh", "ch", "x", "z", "o"].iter().any(|e| v.ends_with(e)) {
        return format!("{v}es");
    }
    if v.len() > 1 && v.ends_with('y') && !v[..v.len() - 1].ends_with(['a', 'e', 'i', 'o', 'u']) {
        return format!("{}ies", &v[..v.len() - 1]);
    }
    format!("{v}s")
}

pub fn plural(noun: &str) -> String {
    third_person(noun)
}

/// A count opening a sentence: "Two" to "Twelve", then "A total of 13".
fn sentence_count(n: usize) -> String {
    const WORDS: [&str; 13] = [
        "Zero", "One", "Two", "Three", "Four", "Five", "Six", "Seven", "Eight", "Nine", "Ten", "Eleven", "Twelve",
    ];
    WORDS.get(n).map_or_else(|| format!("A total of {n}"), |w| w.to_string())
}

fn capitalise(s: &str) -> String {
    let mut c = s.chars();
    match c.next() {
        Some(f) => f.to_uppercase().collect::<String>() + c.as_str(),
        None => String::new(),
    }
}

fn slot<'a>(plan: &'a SentencePlan, name: &str) -> Result<&'a [String], SummaryError> {
    plan.slots
        .get(name)
        .map(Vec::as_slice)
        .ok_or_else(|| SummaryError::MissingSlot(name.to_string()))
}

fn one<'a>(plan: &'a SentencePlan, name: &str) -> Result<&'a str, SummaryError> {
    slot(plan, name)?
        .first()
        .map(String::as_str)
        .ok_or_else(|| SummaryError::MissingSlot(name.to_string()))
}

fn flag(plan: &SentencePlan, name: &str) -> bool {
    plan.slots.get(name).is_some_and(|v| v.first().is_some_and(|f| f == "yes"))
}

/// Renders one plan as one sentence ending in a period.
pub fn realise(plan: &SentencePlan) -> Result<String, SummaryError> {
    let body = match plan.kind {
        PlanKind::Role => role(plan)?,
        PlanKind::NoPattern => format!("{} does not have any design pattern", one(plan, "subject")?),
        PlanKind::Declaration => declaration(plan)?,
        PlanKind::Purpose => capitalise(one(plan, "text")?),
        PlanKind::MethodEnum => method_enum(plan)?,
        PlanKind::CallGraph => call_graph(plan)?,
    };
    Ok(format!("{body}."))
}

fn role(plan: &SentencePlan) -> Result<String, SummaryError> {
    let subject = one(plan, "subject")?;
    if let Some(pattern) = plan.slots.get("pattern") {
        let words = pattern.first().ok_or_else(|| SummaryError::MissingSlot("pattern".into()))?;
        return Ok(format!("{subject} is a part of {words} pattern"));
    }
    let role = one(plan, "role")?;
    let mut s = format!("{subject} acts as {} {role}", article(role));
    if let Some(objects) = plan.slots.get("objects").filter(|o| !o.is_empty()) {
        s.push_str(" for ");
        s.push_str(&objects.join(", "));
    }
    for clause in plan.slots.get("clauses").map(Vec::as_slice).unwrap_or(&[]) {
        s.push_str(", which ");
        s.push_str(clause);
    }
    Ok(s)
}

fn declaration(plan: &SentencePlan) -> Result<String, SummaryError> {
    let mut head = one(plan, "access")?.to_string();
    if flag(plan, "abstract") {
        head.push_str(" abstract");
    }
    head.push(' ');
    head.push_str(one(plan, "kind")?);
    let mut s = format!("It is {} {head}", article(&head));
    let extends = plan.slots.get("extends").map(Vec::as_slice).unwrap_or(&[]);
    let implements = plan.slots.get("implements").map(Vec::as_slice).unwrap_or(&[]);
    if !extends.is_empty() {
        s.push_str(" that extends ");
        s.push_str(&coordinate(extends));
    }
    if !implements.is_empty() {
        s.push_str(if extends.is_empty() { " that implements " } else { " and that implements " });
        s.push_str(&coordinate(implements));
    }
    Ok(s)
}

fn method_enum(plan: &SentencePlan) -> Result<String, SummaryError> {
    let subject = one(plan, "subject")?;
    let methods = slot(plan, "methods")?;
    match methods.len() {
        0 => Err(SummaryError::MissingSlot("methods".into())),
        1 => Ok(format!("The only method of {subject} is {}", methods[0])),
        n => Ok(format!("The {n} methods of {subject} are {}", coordinate(methods))),
    }
}

fn call_graph(plan: &SentencePlan) -> Result<String, SummaryError> {
    let m = one(plan, "method")?;
    let callers = slot(plan, "callers")?;
    let callees = slot(plan, "callees")?;
    let compat = flag(plan, "compat");
    let outgoing = match callees {
        [] if flag(plan, "internal_only") => format!("{m} calls no internal methods"),
        [] => format!("{m} calls no methods"),
        [only] if compat => format!("{m} calls only one method : {only}"),
        [only] => format!("{m} calls the {only} method"),
        many => format!("{m} calls the {} methods", coordinate(many)),
    };
    if flag(plan, "omit_incoming") {
        return Ok(outgoing);
    }
    let incoming = match callers {
        [] => format!("No methods call {m}"),
        [only] => format!("Only one method ({only}) calls {m}"),
        many => format!("{} methods ({}) call {m}", sentence_count(many.len()), coordinate(many)),
    };
    Ok(format!("{incoming} and {outgoing}"))
}

/// Builds a plan from `(slot, values)` pairs.
pub fn plan(kind: PlanKind, slots: &[(&str, Vec<String>)]) -> SentencePlan {
    SentencePlan {
        kind,
        slots: slots
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect::<BTreeMap<_, _>>(),
    }
}
