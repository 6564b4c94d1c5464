use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use gradual_core::gradual_group::describe;
use gradual_core::level_core::{fmt_rational, parse_rational};
use gradual_core::{
    Error, FiniteGroup, FuzzySubgroup, FuzzySubset, GradualSubgroup, GradualSubset, GroundSet, Level,
};

use crate::document::{Document, FuzzyDoc, GradualDoc, GroupDoc, SystemDoc};
use crate::{examples, zint, CliError, Command, Direction, GroupAction, GroupFamily, Io, Operator, SystemAction, EXIT_OK};

pub fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Convert { to, io } => convert(to, &io, out),
        Command::Operator { op, io } => operator(op, &io, out),
        Command::Group { action, strict, io } => group(action, strict, &io, out),
        Command::System { action, io } => system(action, &io, out),
        Command::Eval { alpha, io } => eval(&alpha, &io, out),
        Command::EmitGroup { family, n, output } => {
            let g = match family {
                GroupFamily::Symmetric if (1..=5).contains(&n) => FiniteGroup::symmetric(n),
                GroupFamily::Cyclic if n >= 1 => FiniteGroup::cyclic(n),
                GroupFamily::Dihedral if n >= 1 => FiniteGroup::dihedral(n),
                _ => return Err(CliError::Usage(format!("unsupported size {n}"))),
            };
            emit(&Document::Group(GroupDoc::from_core(&g)), output.as_deref(), out)
        }
        Command::DemoZint {
            x,
            window,
            t_max,
            search_window,
        } => {
            if window < 1 || search_window < 1 {
                return Err(CliError::Usage("windows must be positive".into()));
            }
            let report = zint::demo(x, window, t_max, search_window);
            write_text(out, &report.render())?;
            Ok(EXIT_OK)
        }
        Command::WorkedExamples => Ok(examples::run(&examples::Operators::default(), out)),
    }
}

fn write_text(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::Input(format!("cannot write output: {e}")))
}

fn emit(doc: &Document, path: Option<&Path>, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = doc.to_json() + "\n";
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Input(format!("cannot write {}: {e}", p.display())))?,
        None => write_text(out, &text)?,
    }
    Ok(EXIT_OK)
}

fn read_all(inputs: &[PathBuf]) -> Result<Vec<Document>, CliError> {
    inputs.iter().map(|p| Document::read(p)).collect()
}

fn single(io: &Io) -> Result<Document, CliError> {
    match io.inputs.as_slice() {
        [p] => Document::read(p),
        _ => Err(CliError::Usage(format!("expected one input, found {}", io.inputs.len()))),
    }
}

/// Replaces element indices in core errors by their labels.
fn labelled(e: Error, labels: &[String]) -> CliError {
    let name = |i: usize| labels.get(i).cloned().unwrap_or_else(|| i.to_string());
    match e {
        Error::PropertyFViolated { element, supremum } => CliError::Input(format!(
            "property (F) fails for element {}: its membership levels have supremum {supremum} which is not attained",
            name(element)
        )),
        Error::PropertyInfFViolated { element, infimum } => CliError::Input(format!(
            "property (inf-F) fails for element {} at level {infimum}",
            name(element)
        )),
        Error::NotFuzzySubgroup { x, y } => CliError::Input(format!(
            "not a fuzzy subgroup: mu({x}*{y}^-1) < min(mu({x}), mu({y})) for x = {x}, y = {y}",
            x = name(x),
            y = name(y)
        )),
        other => other.into(),
    }
}

fn convert(to: Direction, io: &Io, out: &mut dyn Write) -> Result<i32, CliError> {
    let doc = single(io)?;
    let result = match to {
        Direction::Gradual | Direction::GradualStrict => {
            let (g, mu) = doc.into_fuzzy()?.to_core()?;
            let sigma = if to == Direction::Gradual { mu.nu() } else { mu.nu_tilde() };
            Document::GradualSubset(GradualDoc::from_core(&g, &sigma))
        }
        Direction::Fuzzy | Direction::FuzzyStrict => {
            let (g, sigma) = doc.into_gradual()?.to_core()?;
            let mu = if to == Direction::Fuzzy {
                FuzzySubset::upsilon(&sigma)
            } else {
                FuzzySubset::upsilon_tilde(&sigma)
            }
            .map_err(|e| labelled(e, g.labels()))?;
            Document::FuzzySubset(FuzzyDoc::from_core(&g, &mu))
        }
    };
    emit(&result, io.output.as_deref(), out)
}

fn gradual_inputs(io: &Io) -> Result<(GroundSet, Vec<GradualSubset>), CliError> {
    let mut ground: Option<GroundSet> = None;
    let mut family = Vec::new();
    for doc in read_all(&io.inputs)? {
        let (g, sigma) = doc.into_gradual()?.to_core()?;
        match &ground {
            Some(first) if first != &g => {
                return Err(CliError::Input(format!(
                    "ground sets differ: {:?} vs {:?}",
                    first.labels(),
                    g.labels()
                )))
            }
            Some(_) => {}
            None => ground = Some(g),
        }
        family.push(sigma);
    }
    Ok((ground.expect("at least one input"), family))
}

fn operator(op: Operator, io: &Io, out: &mut dyn Write) -> Result<i32, CliError> {
    let (g, family) = gradual_inputs(io)?;
    let unary = |family: &[GradualSubset]| match family {
        [s] => Ok(s.clone()),
        _ => Err(CliError::Usage(format!("{op:?} takes one input").to_lowercase())),
    };
    let result = match op {
        Operator::Closure => unary(&family)?.closure_c(),
        Operator::Interior => unary(&family)?.interior_d(),
        Operator::Union => GradualSubset::union(&family)?,
        Operator::Intersection => GradualSubset::intersection(&family)?,
        Operator::ModifiedIntersection => GradualSubset::modified_intersection(&family)?,
    };
    emit(&Document::GradualSubset(GradualDoc::from_core(&g, &result)), io.output.as_deref(), out)
}

/// Reads the group document followed by the remaining documents.
fn group_inputs(io: &Io) -> Result<(Arc<FiniteGroup>, Vec<Document>), CliError> {
    let mut docs = read_all(&io.inputs)?.into_iter();
    let g = docs
        .next()
        .expect("clap requires an input")
        .into_group()?
        .to_core()?;
    Ok((Arc::new(g), docs.collect()))
}

fn check_elements(group: &FiniteGroup, elements: &[String]) -> Result<(), CliError> {
    if elements != group.labels() {
        return Err(CliError::Input(
            "document elements must list the group's elements in Cayley table order".into(),
        ));
    }
    Ok(())
}

fn fuzzy_subgroup(group: &Arc<FiniteGroup>, doc: Document) -> Result<FuzzySubgroup, CliError> {
    let fd = doc.into_fuzzy()?;
    check_elements(group, &fd.elements)?;
    let (_, mu) = fd.to_core()?;
    FuzzySubgroup::new(group.clone(), mu).map_err(|e| labelled(e, group.labels()))
}

fn gradual_subgroup(group: &Arc<FiniteGroup>, doc: Document) -> Result<GradualSubgroup, CliError> {
    let gd = doc.into_gradual()?;
    check_elements(group, &gd.elements)?;
    let (_, sigma) = gd.to_core()?;
    GradualSubgroup::from_subset(group.clone(), &sigma).map_err(|e| match e {
        Error::NotSubgroup => CliError::Input("some level of the gradual subset is not a subgroup".into()),
        other => other.into(),
    })
}

fn ground_of(group: &FiniteGroup) -> GroundSet {
    GroundSet::new(group.labels().to_vec()).expect("group labels are distinct")
}

fn table(group: &FiniteGroup, sigma: &GradualSubset) -> String {
    sigma
        .map()
        .pieces()
        .into_iter()
        .map(|(p, s)| format!("  {p}: {}\n", describe(group, &s)))
        .collect()
}

fn group(action: GroupAction, strict: bool, io: &Io, out: &mut dyn Write) -> Result<i32, CliError> {
    let (g, docs) = group_inputs(io)?;
    let arity = |n: usize| {
        if docs.len() == n {
            Ok(())
        } else {
            Err(CliError::Usage(format!("expected a group document and {n} more inputs")))
        }
    };
    match action {
        GroupAction::CheckFuzzySubgroup => {
            arity(1)?;
            let mu = fuzzy_subgroup(&g, docs.into_iter().next().unwrap())?;
            let sigma = mu.normalize().nu_tilde().as_subset();
            let mut text = format!("valid fuzzy subgroup; normal: {}\nstrong level sets:\n", mu.is_normal());
            text += &table(&g, &sigma);
            write_text(out, &text)?;
            Ok(EXIT_OK)
        }
        GroupAction::ToGradual => {
            arity(1)?;
            let class = fuzzy_subgroup(&g, docs.into_iter().next().unwrap())?.normalize();
            let sigma = if strict { class.nu_tilde() } else { class.nu() };
            emit(
                &Document::GradualSubset(GradualDoc::from_core(&ground_of(&g), &sigma.as_subset())),
                io.output.as_deref(),
                out,
            )
        }
        GroupAction::Product => {
            arity(2)?;
            let mut it = docs.into_iter();
            let c1 = fuzzy_subgroup(&g, it.next().unwrap())?.normalize();
            let c2 = fuzzy_subgroup(&g, it.next().unwrap())?.normalize();
            let left = c1.product(&c2)?.nu_tilde();
            let right = c1.nu_tilde().product(&c2.nu_tilde())?;
            let mut text = String::from("strong levels of [mu1][mu2]:\n");
            text += &table(&g, &left);
            text += "product of the strong levels of [mu1] and [mu2]:\n";
            text += &table(&g, &right);
            write_text(out, &text)?;
            if left != right {
                return Err(CliError::Mismatch("the two gradual subsets differ".into()));
            }
            write_text(out, "equal\n")?;
            Ok(EXIT_OK)
        }
        GroupAction::Normality => {
            arity(1)?;
            let class = fuzzy_subgroup(&g, docs.into_iter().next().unwrap())?.normalize();
            let fuzzy = class.is_normal();
            let gradual = class.nu_tilde().is_normal();
            write_text(out, &format!("fuzzy subgroup normal: {fuzzy}\nevery strong level normal: {gradual}\n"))?;
            if fuzzy != gradual {
                return Err(CliError::Mismatch("normality does not transfer".into()));
            }
            Ok(EXIT_OK)
        }
        GroupAction::Quotient => {
            arity(1)?;
            let sigma = gradual_subgroup(&g, docs.into_iter().next().unwrap())?;
            let q = sigma.quotient()?;
            let mut text = String::from("quotient per piece:\n");
            for (p, level) in q.levels().pieces() {
                let kernel = level.projection.kernel();
                text += &format!(
                    "  {p}: order {} (kernel {})\n",
                    level.quotient.order(),
                    describe(&g, kernel.members())
                );
            }
            write_text(out, &text)?;
            Ok(EXIT_OK)
        }
    }
}

fn system(action: SystemAction, io: &Io, out: &mut dyn Write) -> Result<i32, CliError> {
    let (ground, sys) = single(io)?.into_system()?.to_core()?;
    match action {
        SystemAction::Colimit => {
            let (_, colimit) = sys.to_subset();
            let mut text = format!("direct limit has {} elements\n", colimit.carrier);
            for (c, q) in colimit.maps.iter().enumerate() {
                let cell = describe_cell(&sys, c);
                let parts: Vec<String> = q
                    .iter()
                    .enumerate()
                    .map(|(x, d)| format!("{}->{d}", ground.label(sys.objects()[c][x])))
                    .collect();
                text += &format!("  {cell}: {}\n", parts.join(" "));
            }
            write_text(out, &text)?;
            Ok(EXIT_OK)
        }
        SystemAction::Interior => {
            let d = sys.interior_d()?;
            emit(&Document::System(SystemDoc::from_core(&ground, &d)), io.output.as_deref(), out)
        }
        SystemAction::PropertyF => {
            let holds = sys.has_property_f()?;
            write_text(out, &format!("property (F): {}\n", if holds { "holds" } else { "fails" }))?;
            Ok(EXIT_OK)
        }
    }
}

fn describe_cell(sys: &gradual_core::DirectedSetSystem, c: usize) -> String {
    let levels = sys.grid().levels();
    let hi = fmt_rational(&levels[c / 2]);
    if c % 2 == 1 {
        return format!("{{{hi}}}");
    }
    let lo = if c == 0 { "0".to_string() } else { fmt_rational(&levels[c / 2 - 1]) };
    format!("({lo},{hi})")
}

fn eval(alpha: &str, io: &Io, out: &mut dyn Write) -> Result<i32, CliError> {
    let a = Level::new(parse_rational(alpha)?)?;
    let text = match single(io)? {
        Document::GradualSubset(d) => {
            let (g, sigma) = d.to_core()?;
            let labels: Vec<&str> = sigma.eval(&a).ones().map(|x| g.label(x)).collect();
            format!("{{{}}}\n", labels.join(", "))
        }
        Document::FuzzySubset(d) | Document::FuzzySubgroup(d) => {
            let (g, mu) = d.to_core()?;
            let level: Vec<&str> = mu.alpha_level(&a).ones().map(|x| g.label(x)).collect();
            let strong: Vec<&str> = mu.strong_alpha_level(&a).ones().map(|x| g.label(x)).collect();
            format!("level: {{{}}}\nstrong level: {{{}}}\n", level.join(", "), strong.join(", "))
        }
        other => return Err(CliError::Input(format!("cannot evaluate a {} document", other.kind()))),
    };
    write_text(out, &text)?;
    Ok(EXIT_OK)
}

