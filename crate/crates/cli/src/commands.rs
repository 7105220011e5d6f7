use std::path::Path;

use serde_json::{json, Value};

use gext_core::algebra::characters;
use gext_core::catalog::{self, Entry};
use gext_core::coalgebra::{convolution_algebra, dualize_algebra, grouplikes, supersolvable_chain};
use gext_core::coflag::{
    aut_group, classify_coflag, gh2_coflag, hoc, validate_coflag, AutGroup, CoflagDatum,
};
use gext_core::gh2_brute::gh2_enumerate;
use gext_core::hochschild::{check_split, extract_system};
use gext_core::io::{self, Entity};
use gext_core::poisson::{
    build_poisson_extension, classify_poisson_ext, poisson_aut_group, poisson_autos,
    validate_poisson_coflag, PoissonAlgebra, PoissonCoflagDatum,
};
use gext_core::search::{automorphisms, default_budget};
use gext_core::tower::decompose_tower;
use gext_core::{Algebra, Error, Field, Matrix, ValidationReport};

use crate::report::{Report, Status};
use crate::{Cli, Cmd, Maps};

enum Fail {
    Core(Error),
    Usage(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

type R<T> = std::result::Result<T, Fail>;

fn usage<T>(msg: impl Into<String>) -> R<T> {
    Err(Fail::Usage(msg.into()))
}

fn status_of(e: &Error) -> Status {
    match e {
        Error::BudgetExceeded { .. } => Status::Budget,
        Error::Invalid { .. } | Error::NotAMorphism(_) | Error::NotASection(_) => Status::Invalid,
        _ => Status::Usage,
    }
}

struct Ctx<'a> {
    field: Option<Field>,
    budget: u64,
    aut_mode: &'a str,
    report: Report,
}

impl Ctx<'_> {
    fn read(&mut self, path: &Path) -> R<Value> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
        io::parse_json(&text).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))
    }

    fn warn(&mut self, ws: Vec<String>) {
        self.report.warnings.extend(ws);
    }

    /// Validated unless `checked` is false.
    fn entity(&mut self, reference: &str, checked: bool) -> R<Entity> {
        let e = if let Some(name) = reference.strip_prefix("catalog:") {
            let Some(field) = self.field else {
                return usage("catalog entries need --field");
            };
            match catalog::lookup(name, field, None)? {
                Entry::Algebra(a) => Entity::Algebra(a),
                Entry::Poisson(p) => Entity::Poisson(p),
                Entry::Coalgebra(c) => Entity::Coalgebra(c),
            }
        } else {
            let v = self.read(Path::new(reference))?;
            let parsed = if checked {
                io::entity_from_json(&v)
            } else {
                io::entity_from_json_unchecked(&v)
            }
            .map_err(|e| match e {
                Error::Invalid { .. } | Error::NotPrime(_) => Fail::Core(e),
                other => Fail::Usage(format!("{reference}: {other}")),
            })?;
            self.warn(parsed.warnings);
            parsed.value
        };
        match self.field {
            Some(f) if f != e.field() => {
                return usage(format!(
                    "--field {f} disagrees with the input, which is over {}",
                    e.field()
                ));
            }
            _ => {}
        }
        self.report.field = Some(e.field().to_string());
        Ok(e)
    }

    fn algebra(&mut self, reference: &str) -> R<Algebra> {
        match self.entity(reference, true)? {
            Entity::Algebra(a) => Ok(a),
            Entity::Poisson(p) => {
                self.report
                    .note("bracket ignored; using the underlying algebra");
                Ok(p.algebra)
            }
            Entity::Coalgebra(_) => usage(format!(
                "{reference} is a coalgebra; an algebra is needed here"
            )),
        }
    }

    fn poisson(&mut self, reference: &str, checked: bool) -> R<PoissonAlgebra> {
        match self.entity(reference, checked)? {
            Entity::Poisson(p) => Ok(p),
            _ => usage(format!(
                "{reference} has no \"bracket\"; a Poisson algebra is needed here"
            )),
        }
    }

    fn coflag_datum(&mut self, path: &Path, a: &Algebra) -> R<CoflagDatum> {
        let v = self.read(path)?;
        let p = io::coflag_datum_from_json(&v, a.field, a.dim)
            .map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
        self.warn(p.warnings);
        Ok(p.value)
    }

    fn poisson_datum(&mut self, path: &Path, p: &PoissonAlgebra) -> R<PoissonCoflagDatum> {
        let v = self.read(path)?;
        let d = io::poisson_datum_from_json(&v, p.field(), p.dim())
            .map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
        self.warn(d.warnings);
        Ok(d.value)
    }

    fn matrix(&mut self, path: &Path, field: Field, rows: usize, cols: usize) -> R<Matrix> {
        let v = self.read(path)?;
        let m = io::matrix_from_json(&v, field, rows, cols)
            .map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
        self.warn(m.warnings);
        Ok(m.value)
    }

    /// Automorphisms per `--aut-mode`; each one is checked, optionally also
    /// against a bracket.
    fn autos(&mut self, a: &Algebra, bracket: Option<&PoissonAlgebra>) -> R<Vec<Matrix>> {
        let mode = self.aut_mode.to_string();
        let list = if mode == "brute" {
            match bracket {
                Some(p) => poisson_autos(p, self.budget)?,
                None => automorphisms(a, None, self.budget)?,
            }
        } else if mode == "catalog" {
            let Some(list) = a.automorphisms.clone() else {
                return usage("no automorphisms are registered for this input; use --aut-mode brute or file:PATH");
            };
            match bracket {
                Some(p) => list
                    .into_iter()
                    .filter(|g| p.is_poisson_isomorphism(p, g))
                    .collect(),
                None => list,
            }
        } else if let Some(path) = mode.strip_prefix("file:") {
            let v = self.read(Path::new(path))?;
            let m = io::matrices_from_json(&v, a.field, a.dim)
                .map_err(|e| Fail::Usage(format!("{path}: {e}")))?;
            self.warn(m.warnings);
            for (i, g) in m.value.iter().enumerate() {
                let ok = match bracket {
                    Some(p) => p.is_poisson_isomorphism(p, g),
                    None => a.is_isomorphism(a, g),
                };
                if !ok {
                    let mut rep = ValidationReport::new();
                    rep.push(
                        "automorphism",
                        &[i],
                        format!("matrix {i} of {path} is not an automorphism"),
                    );
                    return Err(Fail::Core(Error::Invalid {
                        what: "automorphism file",
                        report: rep,
                    }));
                }
            }
            m.value
        } else {
            return usage(format!(
                "unknown --aut-mode `{mode}` (brute, catalog or file:PATH)"
            ));
        };
        if list.is_empty() {
            return Err(Error::EmptyAutomorphisms.into());
        }
        self.report.set("automorphisms_used", json!(list.len()));
        self.report
            .note(format!("automorphisms from --aut-mode {mode}"));
        Ok(list)
    }

    fn save(&mut self, path: Option<&Path>, v: &Value) -> R<()> {
        if let Some(p) = path {
            std::fs::write(p, io::to_pretty(v))
                .map_err(|e| Fail::Usage(format!("{}: {e}", p.display())))?;
            self.report.set("saved", json!(p.display().to_string()));
        }
        Ok(())
    }
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Validate { .. } => "validate",
        Cmd::Characters(_) => "characters",
        Cmd::Aut { .. } => "aut",
        Cmd::Gh2(_) => "gh2",
        Cmd::Hoc(_) => "hoc",
        Cmd::Gh2Brute { .. } => "gh2-brute",
        Cmd::Product { .. } => "product",
        Cmd::Extract { .. } => "extract",
        Cmd::SplitCheck { .. } => "split-check",
        Cmd::Tower(_) => "tower",
        Cmd::Classify { .. } => "classify",
        Cmd::Dualize { .. } => "dualize",
        Cmd::Convolve { .. } => "convolve",
        Cmd::Supersolvable(_) => "supersolvable",
        Cmd::PoissonValidate { .. } => "poisson-validate",
        Cmd::PoissonExtend { .. } => "poisson-extend",
        Cmd::PoissonClassify(_) => "poisson-classify",
        Cmd::PoissonAut { .. } => "poisson-aut",
        Cmd::Catalog { .. } => "catalog",
    }
}

pub fn run(cli: &Cli) -> Report {
    let mut report = Report::new(command_name(&cli.cmd));
    report.seed = cli.common.seed;
    let field = match cli
        .common
        .field
        .as_deref()
        .map(str::parse::<Field>)
        .transpose()
    {
        Ok(f) => f,
        Err(e) => {
            report.fail(Status::Usage, e.to_string());
            return report;
        }
    };
    if let Some(f) = field {
        report.field = Some(f.to_string());
    }
    let mut ctx = Ctx {
        field,
        budget: cli.common.budget.unwrap_or_else(default_budget),
        aut_mode: &cli.common.aut_mode,
        report,
    };
    match dispatch(&mut ctx, &cli.cmd) {
        Ok(()) => {}
        Err(Fail::Usage(m)) => ctx.report.fail(Status::Usage, m),
        Err(Fail::Core(e)) => {
            if let Error::Invalid { report, .. } = &e {
                ctx.report.set("violations", violations(report));
            }
            ctx.report.fail(status_of(&e), e.to_string());
        }
    }
    ctx.report
}

fn violations(r: &ValidationReport) -> Value {
    Value::Array(
        r.violations
            .iter()
            .map(|v| json!({"rule": v.rule, "witness": v.witness, "detail": v.detail}))
            .collect(),
    )
}

/// Records a validation outcome; an invalid one makes the exit code 1.
fn record(ctx: &mut Ctx, key: &str, r: &ValidationReport) {
    ctx.report.set(key, json!(r.is_valid()));
    if !r.is_valid() {
        ctx.report.set(&format!("{key}_violations"), violations(r));
        ctx.report.status = Status::Invalid;
    }
}

fn vecs(vs: &[Vec<gext_core::Scalar>]) -> Value {
    Value::Array(vs.iter().map(|v| io::vector_to_json(v)).collect())
}

fn datum_label(d: &Option<CoflagDatum>) -> Value {
    match d {
        Some(d) => io::coflag_datum_to_json(d),
        None => json!("product with k"),
    }
}

fn group_json(g: &AutGroup) -> Value {
    json!({
        "order": g.order(),
        "verified": g.verify().is_ok(),
        "elements": g.elements.iter().map(|w| json!({
            "s0": io::scalar_to_json(&w.s0),
            "psi": io::matrix_to_json(&w.psi),
            "r": io::vector_to_json(&w.r),
        })).collect::<Vec<_>>(),
    })
}

fn dispatch(ctx: &mut Ctx, cmd: &Cmd) -> R<()> {
    match cmd {
        Cmd::Validate {
            input,
            datum,
            system,
        } => {
            if input.is_none() && system.is_none() {
                return usage("validate needs --input and/or --system");
            }
            if let Some(input) = input {
                ctx.report.input = Some(input.clone());
                let e = ctx.entity(input, false)?;
                ctx.report.set("kind", json!(e.kind()));
                let rep = match &e {
                    Entity::Algebra(a) => a.validate(),
                    Entity::Poisson(p) => p.validate(),
                    Entity::Coalgebra(c) => c.validate(),
                };
                ctx.report.set(
                    "dim",
                    json!(match &e {
                        Entity::Algebra(a) => a.dim,
                        Entity::Poisson(p) => p.dim(),
                        Entity::Coalgebra(c) => c.dim,
                    }),
                );
                record(ctx, "valid", &rep);
                if let Some(path) = datum {
                    if !rep.is_valid() {
                        return usage("the datum can only be checked over a valid entity");
                    }
                    match &e {
                        Entity::Algebra(a) => {
                            let d = ctx.coflag_datum(path, a)?;
                            let r = validate_coflag(a, &d)?;
                            record(ctx, "datum_valid", &r);
                        }
                        Entity::Poisson(p) => {
                            let d = ctx.poisson_datum(path, p)?;
                            let r = validate_poisson_coflag(p, &d)?;
                            record(ctx, "datum_valid", &r);
                        }
                        Entity::Coalgebra(_) => return usage("coalgebras carry no datum"),
                    }
                }
            }
            if let Some(path) = system {
                let v = ctx.read(path)?;
                let s = io::system_from_json(&v).map_err(|e| match e {
                    Error::Invalid { .. } => Fail::Core(e),
                    other => Fail::Usage(format!("{}: {other}", path.display())),
                })?;
                ctx.warn(s.warnings);
                ctx.report.field = Some(s.value.field().to_string());
                ctx.report.set("v_dim", json!(s.value.v_dim));
                let r = s.value.validate();
                record(ctx, "system_valid", &r);
            }
        }
        Cmd::Characters(src) => {
            ctx.report.input = Some(src.input.clone());
            let a = ctx.algebra(&src.input)?;
            let cs = characters(&a)?;
            ctx.report.set("count", json!(cs.len()));
            ctx.report.set("characters", vecs(&cs));
        }
        Cmd::Aut { src, datum } => {
            ctx.report.input = Some(src.input.clone());
            let e = ctx.entity(&src.input, true)?;
            let (a, bracket) = match e {
                Entity::Algebra(a) => (a, None),
                Entity::Poisson(p) => (p.algebra.clone(), Some(p)),
                Entity::Coalgebra(_) => return usage("aut works on algebras and Poisson algebras"),
            };
            let autos = ctx.autos(&a, bracket.as_ref())?;
            match datum {
                None => {
                    ctx.report.set("count", json!(autos.len()));
                    ctx.report.set(
                        "automorphisms",
                        Value::Array(autos.iter().map(io::matrix_to_json).collect()),
                    );
                }
                Some(path) => {
                    let g = match &bracket {
                        Some(p) => {
                            let d = ctx.poisson_datum(path, p)?;
                            validate_poisson_coflag(p, &d)?
                                .into_result_cli("Poisson co-flag datum")?;
                            poisson_aut_group(p, &d, &autos)?
                        }
                        None => {
                            let d = ctx.coflag_datum(path, &a)?;
                            validate_coflag(&a, &d)?.into_result_cli("co-flag datum")?;
                            aut_group(&a, &d, &autos)?
                        }
                    };
                    ctx.report.set("group", group_json(&g));
                    ctx.report
                        .note("elements are (s0, psi, r): (a, x) -> (psi(a), r(a) + s0 x)");
                }
            }
        }
        Cmd::Gh2(src) => {
            ctx.report.input = Some(src.input.clone());
            let a = ctx.algebra(&src.input)?;
            let g = gh2_coflag(&a)?;
            let blocks: Vec<Value> = g
                .blocks
                .iter()
                .map(|b| {
                    json!({
                        "lambda": io::vector_to_json(&b.lambda),
                        "Lambda": io::vector_to_json(&b.big_lambda),
                        "dim_Z": b.dim_z(),
                        "dim_B": b.dim_b(),
                        "dim_H": b.dim_h(),
                    })
                })
                .collect();
            ctx.report.set("first_kind_blocks", json!(blocks.len()));
            ctx.report.set("blocks", Value::Array(blocks));
            ctx.report
                .set("base_functional", io::vector_to_json(&g.base_functional));
            match g.counts() {
                Some(c) => {
                    ctx.report.set("classes", json!(c.total));
                    ctx.report.set("first_kind", json!(c.first_kind));
                    ctx.report.set("second_kind", json!(c.second_kind));
                    let reps: Vec<Value> = g
                        .blocks
                        .iter()
                        .flat_map(|b| b.data())
                        .chain(g.second_kind_data())
                        .map(|d| io::coflag_datum_to_json(&d))
                        .collect();
                    ctx.report.set("representatives", Value::Array(reps));
                }
                None => {
                    ctx.report.set("classes", Value::Null);
                    ctx.report.note(
                        "over Q the class sets are infinite; block dimensions are reported instead",
                    );
                }
            }
            ctx.report.note("first-kind classes: one per cohomology class of each character pair; second-kind: one per nonzero u");
        }
        Cmd::Hoc(src) => {
            ctx.report.input = Some(src.input.clone());
            let a = ctx.algebra(&src.input)?;
            let needs_autos = gh2_coflag(&a)?.blocks.iter().any(|b| !b.data().is_empty());
            let autos = if needs_autos {
                ctx.autos(&a, None)?
            } else {
                ctx.report
                    .note("no first-kind data, so no automorphisms are needed");
                vec![Matrix::identity(a.field, a.dim)]
            };
            let h = hoc(&a, &autos)?;
            ctx.report.set("count", json!(h.len()));
            let rows: Vec<Value> = h
                .classes
                .iter()
                .map(|c| {
                    json!({
                        "datum": datum_label(&c.datum),
                        "orbit_size": c.orbit_size(),
                        "algebra": io::algebra_to_json(&c.algebra),
                    })
                })
                .collect();
            ctx.report.set("classes", Value::Array(rows));
        }
        Cmd::Gh2Brute { src, v_dim } => {
            ctx.report.input = Some(src.input.clone());
            let a = ctx.algebra(&src.input)?;
            let r = gh2_enumerate(&a, *v_dim, ctx.budget)?;
            ctx.report.set("systems", json!(r.systems));
            ctx.report.set("count", json!(r.classes.len()));
            let classes: Vec<Value> = r
                .classes
                .iter()
                .map(|c| json!({"size": c.size, "system": io::system_to_json(&c.representative)}))
                .collect();
            ctx.report.set("classes", Value::Array(classes));
            ctx.report.set(
                "strata",
                serde_json::to_value(&r.strata).expect("plain data"),
            );
        }
        Cmd::Product {
            src,
            system,
            datum,
            save,
        } => {
            ctx.report.input = Some(src.input.clone());
            let a = ctx.algebra(&src.input)?;
            let ext = match (system, datum) {
                (Some(path), None) => {
                    let v = ctx.read(path)?;
                    let s = io::system_from_json(&v)
                        .map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
                    ctx.warn(s.warnings);
                    if !s.value.algebra.same_structure(&a) {
                        return usage("the system is over a different algebra than --input");
                    }
                    s.value.build_product()?
                }
                (None, Some(path)) => {
                    let d = ctx.coflag_datum(path, &a)?;
                    validate_coflag(&a, &d)?.into_result_cli("co-flag datum")?;
                    gext_core::coflag::build_coflag_algebra(&a, &d)?
                }
                _ => return usage("product needs exactly one of --system or --datum"),
            };
            let v = io::algebra_to_json(&ext.total);
            ctx.report.set("dim", json!(ext.total.dim));
            ctx.report.set("algebra", v.clone());
            ctx.report
                .set("projection", io::matrix_to_json(&ext.projection));
            ctx.report
                .set("injection", io::matrix_to_json(&ext.injection));
            ctx.save(save.as_deref(), &v)?;
        }
        Cmd::Extract { maps, save } => {
            let (e, a, pi, s) = load_maps(ctx, maps)?;
            let (sys, phi) = extract_system(&e, &a, &pi, &s)?;
            let v = io::system_to_json(&sys);
            ctx.report.set("system", v.clone());
            ctx.report.set("phi", io::matrix_to_json(&phi));
            ctx.report.set("v_dim", json!(sys.v_dim));
            ctx.save(save.as_deref(), &v)?;
        }
        Cmd::SplitCheck { maps } => {
            let (e, a, pi, s) = load_maps(ctx, maps)?;
            let split = check_split(&e, &a, &pi, &s)?;
            ctx.report.set("split", json!(split.is_some()));
            ctx.report.set(
                "system",
                split.as_ref().map_or(Value::Null, io::system_to_json),
            );
        }
        Cmd::Tower(src) => {
            ctx.report.input = Some(src.input.clone());
            let a = ctx.algebra(&src.input)?;
            let t = decompose_tower(&a, ctx.budget)?;
            let steps: Vec<Value> = t
                .steps
                .iter()
                .map(|s| {
                    json!({
                        "dim": s.algebra.dim,
                        "ideal": vecs(&s.ideal.basis),
                        "quotient_dim": s.quotient.dim,
                        "v_dim": s.system.v_dim,
                        "zero_cocycle": s.system.is_zero_cocycle(),
                    })
                })
                .collect();
            ctx.report.set("length", json!(steps.len()));
            ctx.report.set("steps", Value::Array(steps));
            ctx.report.set("base", io::algebra_to_json(&t.base));
            ctx.report.set("verified", json!(t.verify()?));
        }
        Cmd::Classify { dim } => {
            let Some(field) = ctx.field else {
                return usage("classify needs --field");
            };
            let cs = classify_coflag(*dim, field, ctx.budget)?;
            ctx.report.set("count", json!(cs.len()));
            let rows: Vec<Value> = cs
                .iter()
                .map(|c| {
                    let fp = &c.fingerprint;
                    json!({
                        "commutative": fp.commutative,
                        "characters": fp.characters,
                        "center": fp.center,
                        "ideals_by_dim": fp.ideals_by_dim,
                        "provenance": c.provenance.iter().map(datum_label).collect::<Vec<_>>(),
                        "algebra": io::algebra_to_json(&c.algebra),
                    })
                })
                .collect();
            ctx.report.set("classes", Value::Array(rows));
            ctx.report.note(
                "built level by level from k; classes merged across parents by isomorphism search",
            );
        }
        Cmd::Dualize { src, save } => {
            ctx.report.input = Some(src.input.clone());
            let v = match ctx.entity(&src.input, true)? {
                Entity::Coalgebra(c) => io::algebra_to_json(&convolution_algebra(&c)?),
                Entity::Algebra(a) => io::coalgebra_to_json(&dualize_algebra(&a)?),
                Entity::Poisson(p) => io::coalgebra_to_json(&dualize_algebra(&p.algebra)?),
            };
            ctx.report.set("dual", v.clone());
            ctx.save(save.as_deref(), &v)?;
        }
        Cmd::Convolve { src, save } => {
            ctx.report.input = Some(src.input.clone());
            let Entity::Coalgebra(c) = ctx.entity(&src.input, true)? else {
                return usage("convolve needs a coalgebra (a file with \"comult\")");
            };
            let v = io::algebra_to_json(&convolution_algebra(&c)?);
            ctx.report.set("algebra", v.clone());
            ctx.save(save.as_deref(), &v)?;
        }
        Cmd::Supersolvable(src) => {
            ctx.report.input = Some(src.input.clone());
            let c = match ctx.entity(&src.input, true)? {
                Entity::Coalgebra(c) => c,
                Entity::Algebra(a) => {
                    ctx.report
                        .note("input is an algebra; using its dual coalgebra");
                    dualize_algebra(&a)?
                }
                Entity::Poisson(_) => {
                    return usage("supersolvable needs a coalgebra or an algebra")
                }
            };
            ctx.report.set("grouplikes", vecs(&grouplikes(&c)?));
            let chain = supersolvable_chain(&c)?;
            ctx.report.set("supersolvable", json!(chain.is_some()));
            ctx.report.set(
                "chain",
                chain.map_or(Value::Null, |ch| {
                    Value::Array(ch.steps.iter().map(|s| vecs(&s.basis)).collect())
                }),
            );
        }
        Cmd::PoissonValidate { input, datum } => {
            ctx.report.input = Some(input.clone());
            let p = ctx.poisson(input, false)?;
            let r = p.validate();
            record(ctx, "valid", &r);
            if let Some(path) = datum {
                if !r.is_valid() {
                    return usage("the datum can only be checked over a valid Poisson algebra");
                }
                let d = ctx.poisson_datum(path, &p)?;
                let r = validate_poisson_coflag(&p, &d)?;
                record(ctx, "datum_valid", &r);
            }
        }
        Cmd::PoissonExtend { src, datum, save } => {
            ctx.report.input = Some(src.input.clone());
            let p = ctx.poisson(&src.input, true)?;
            let d = ctx.poisson_datum(datum, &p)?;
            validate_poisson_coflag(&p, &d)?.into_result_cli("Poisson co-flag datum")?;
            let ext = build_poisson_extension(&p, &d)?;
            let v = io::poisson_to_json(&ext.total);
            ctx.report.set("poisson", v.clone());
            ctx.report
                .set("projection", io::matrix_to_json(&ext.projection));
            ctx.save(save.as_deref(), &v)?;
        }
        Cmd::PoissonClassify(src) => {
            ctx.report.input = Some(src.input.clone());
            let p = ctx.poisson(&src.input, true)?;
            let c = if p.is_perfect() || characters(&p.algebra)?.is_empty() {
                classify_poisson_ext(&p, &[Matrix::identity(p.field(), p.dim())])?
            } else {
                let autos = ctx.autos(&p.algebra, Some(&p))?;
                classify_poisson_ext(&p, &autos)?
            };
            ctx.report.set("shortcut", json!(c.shortcut));
            ctx.report.set("data", json!(c.data));
            ctx.report.set("count", json!(c.classes.len()));
            let rows: Vec<Value> = c
                .classes
                .iter()
                .map(|k| {
                    json!({
                        "datum": k.datum.as_ref().map_or(json!("product with k"), io::poisson_datum_to_json),
                        "orbit_size": 1 + k.merged.len(),
                        "poisson": io::poisson_to_json(&k.total),
                    })
                })
                .collect();
            ctx.report.set("classes", Value::Array(rows));
        }
        Cmd::PoissonAut { src, datum } => {
            ctx.report.input = Some(src.input.clone());
            let p = ctx.poisson(&src.input, true)?;
            let d = ctx.poisson_datum(datum, &p)?;
            validate_poisson_coflag(&p, &d)?.into_result_cli("Poisson co-flag datum")?;
            let autos = ctx.autos(&p.algebra, Some(&p))?;
            let g = poisson_aut_group(&p, &d, &autos)?;
            ctx.report.set("group", group_json(&g));
            ctx.report
                .note("elements are (s0, psi, r): (a, x) -> (psi(a), r(a) + s0 x)");
        }
        Cmd::Catalog { name, param, save } => {
            let Some(field) = ctx.field else {
                return usage("catalog needs --field");
            };
            let e = match catalog::lookup(name, field, *param)? {
                Entry::Algebra(a) => Entity::Algebra(a),
                Entry::Poisson(p) => Entity::Poisson(p),
                Entry::Coalgebra(c) => Entity::Coalgebra(c),
            };
            let v = io::entity_to_json(&e);
            ctx.report.set("kind", json!(e.kind()));
            ctx.report.set("entity", v.clone());
            ctx.save(save.as_deref(), &v)?;
        }
    }
    Ok(())
}

fn load_maps(ctx: &mut Ctx, m: &Maps) -> R<(Algebra, Algebra, Matrix, Matrix)> {
    ctx.report.input = Some(m.input.clone());
    let e = ctx.algebra(&m.input)?;
    let a = ctx.algebra(&m.base)?;
    if a.field != e.field {
        return usage("--input and --base are over different fields");
    }
    let pi = ctx.matrix(&m.projection, e.field, a.dim, e.dim)?;
    let s = ctx.matrix(&m.section, e.field, e.dim, a.dim)?;
    Ok((e, a, pi, s))
}

trait IntoCli {
    fn into_result_cli(self, what: &'static str) -> R<()>;
}

impl IntoCli for ValidationReport {
    fn into_result_cli(self, what: &'static str) -> R<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Fail::Core(Error::Invalid { what, report: self }))
        }
    }
}
