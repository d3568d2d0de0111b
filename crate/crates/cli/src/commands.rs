use crate::workspace::{Failure, Outcome, Workspace};
use crate::{Cli, Command, Format, KnotCmd, ModuleCmd, ObstructCmd, OpCmd, PolyCmd};
use knotloc_core::alexander::{
    element_order, localize, module_from_knot, proper_submodules, proper_submodules_with_delta, CyclicModule,
    LocalizationMode, Submodule, SubmoduleLabel,
};
use knotloc_core::isogeny::{strongly_coprime, tuple_strongly_coprime, PolySequence, SequenceRole, TupleVerdict};
use knotloc_core::operator::{compose, make_operator, order_sequences, CertificateJson, KnotExpression, RobustCertificate, SignatureEntry};
use knotloc_core::oracle::{
    family_certificate, fractal_tree, injectivity_report, survival_verdict, vanishing_verdict, FamilySpec,
    ObstructionVerdict, Rho0Hypothesis,
};
use knotloc_core::poly::factor::{factor, FactorizationJson};
use knotloc_core::seifert::numeric::to_decimal;
use knotloc_core::seifert::{rho0, signature_at, signature_profile};
use knotloc_core::{parse_poly, LaurentPoly, Rational, SeifertMatrix};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub struct Output {
    pub text: String,
    pub code: u8,
}

struct Ctx<'a> {
    cli: &'a Cli,
    ws: Workspace,
}

fn poly(s: &str) -> Outcome<LaurentPoly> {
    Ok(parse_poly(s)?)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

impl Ctx<'_> {
    fn format(&self) -> Format {
        self.cli.global.format
    }

    fn digits(&self) -> usize {
        self.cli.global.precision as usize
    }

    fn bound(&self) -> u32 {
        self.cli.global.bound
    }

    fn unsupported(&self) -> Failure {
        Failure::Usage(format!("--format {:?} is not available for this command", self.format()).to_lowercase())
    }

    /// JSON by default; `text` when a text rendering is given.
    fn emit(&self, v: Value, text: Option<String>) -> Outcome<Output> {
        let text = match (self.format(), text) {
            (Format::Json, _) => pretty(&v),
            (Format::Text, Some(t)) => t,
            (Format::Text, None) => pretty(&v),
            _ => return Err(self.unsupported()),
        };
        Ok(Output { text, code: 0 })
    }

    /// Exit 3 when `--exact` was given and the result depends on the bound.
    fn exactness(&self, mut out: Output, exact: bool) -> Output {
        if self.cli.global.exact && !exact {
            out.code = 3;
        }
        out
    }
}

pub fn run(cli: &Cli) -> Outcome<Output> {
    let ctx = Ctx { cli, ws: Workspace::load(&cli.global.libs)? };
    match &cli.command {
        Command::Poly(c) => poly_cmd(&ctx, c),
        Command::Knot(c) => knot_cmd(&ctx, c),
        Command::Module(c) => module_cmd(&ctx, c),
        Command::Op(c) => op_cmd(&ctx, c),
        Command::Obstruct(c) => obstruct_cmd(&ctx, c),
    }
}

fn tuple_json(v: &TupleVerdict) -> Value {
    match v {
        TupleVerdict::StronglyCoprime { index, mode, exact } => {
            json!({"status": "strongly_coprime", "index": index, "mode": mode, "exact": exact})
        }
        TupleVerdict::Isogenous => json!({"status": "isogenous", "exact": true}),
    }
}

fn poly_cmd(ctx: &Ctx, c: &PolyCmd) -> Outcome<Output> {
    match c {
        PolyCmd::Parse { poly: s } => {
            let p = poly(s)?;
            let n = p.normalize();
            let v = json!({
                "polynomial": p.to_string(),
                "normalized": n.to_string(),
                "lowest_exponent": p.low(),
                "highest_exponent": p.high(),
                "augmentation": p.augmentation().to_string(),
            });
            ctx.emit(v, Some(format!("{p}\n")))
        }
        PolyCmd::Factor { poly: s } => {
            let f = factor(&poly(s)?)?;
            let mut text = format!("unit {} t-power {}\n", f.unit, f.t_power);
            for (g, m) in &f.factors {
                text.push_str(&format!("({g})^{m}\n"));
            }
            ctx.emit(to_value(&FactorizationJson::from(&f)), Some(text))
        }
        PolyCmd::Gcd { a, b } => {
            let g = poly(a)?.gcd(&poly(b)?)?;
            ctx.emit(json!({"gcd": g.to_string()}), Some(format!("{g}\n")))
        }
        PolyCmd::Resultant { a, b } => {
            let r = poly(a)?.resultant(&poly(b)?)?;
            ctx.emit(json!({"resultant": r.to_string()}), Some(format!("{r}\n")))
        }
        PolyCmd::Isogeny { p, q } => {
            let v = strongly_coprime(&poly(p)?, &poly(q)?, ctx.bound())?;
            let mut j = to_value(&v.to_json());
            j["reason"] = json!(v.reason);
            let text = match v.witness() {
                Some(w) => format!("isogenous (n = {}, k = {}): {}\n", w.n, w.k, v.reason),
                None if v.is_exact() => format!("strongly coprime: {}\n", v.reason),
                None => format!("strongly coprime up to bound {}: {}\n", ctx.bound(), v.reason),
            };
            let out = ctx.emit(j, Some(text))?;
            Ok(ctx.exactness(out, v.is_exact()))
        }
        PolyCmd::Tuple { p, q } => {
            let a = PolySequence::parse(p, SequenceRole::Target)?;
            let b = PolySequence::parse(q, SequenceRole::Target)?;
            let v = tuple_strongly_coprime(&a, &b, ctx.bound())?;
            let out = ctx.emit(tuple_json(&v), None)?;
            Ok(ctx.exactness(out, v.is_exact()))
        }
    }
}

fn knot_name(k: &SeifertMatrix) -> String {
    k.name().unwrap_or("unnamed").to_string()
}

fn profile_json(k: &SeifertMatrix, digits: usize) -> Value {
    let prof = signature_profile(k);
    let bits = knotloc_core::seifert::signature::bits_for_digits(digits) + 8;
    let jumps: Vec<Value> = prof
        .jumps
        .iter()
        .map(|j| {
            let (lo, hi) = j.enclosure(bits);
            let mid = (lo + hi) / Rational::from_integer(2.into());
            json!({
                "theta_over_pi": to_decimal(&mid, digits),
                "exact": j.exact.as_ref().map(|e| e.to_string()),
                "factor": j.factor.to_string(),
            })
        })
        .collect();
    json!({"jumps": jumps, "signatures": prof.signatures, "csv": prof.to_csv(digits)})
}

fn knot_cmd(ctx: &Ctx, c: &KnotCmd) -> Outcome<Output> {
    let digits = ctx.digits();
    match c {
        KnotCmd::Alex { knot } => {
            let k = ctx.ws.knot(knot)?;
            let d = k.alexander_poly();
            ctx.emit(json!({"name": knot_name(&k), "genus": k.genus(), "alexander": d.to_string()}), Some(format!("{d}\n")))
        }
        KnotCmd::Signature { knot, at } => {
            let k = ctx.ws.knot(knot)?;
            if let Some(frac) = at {
                let r = parse_fraction(frac)?;
                let s = signature_at(&k, &r)?;
                return ctx.emit(
                    json!({"name": knot_name(&k), "angle_over_pi": r.to_string(), "signature": s}),
                    Some(format!("{s}\n")),
                );
            }
            match ctx.format() {
                Format::Csv | Format::Text => Ok(Output { text: signature_profile(&k).to_csv(digits), code: 0 }),
                Format::Svg => Ok(Output { text: signature_profile(&k).to_svg(), code: 0 }),
                Format::Json => {
                    let mut v = profile_json(&k, digits);
                    v["name"] = json!(knot_name(&k));
                    ctx.emit(v, None)
                }
                Format::Dot => Err(ctx.unsupported()),
            }
        }
        KnotCmd::Rho0 { knot } => {
            let k = ctx.ws.knot(knot)?;
            let r = rho0(&k, digits);
            let csv = r.profile.to_csv(digits);
            match ctx.format() {
                Format::Csv => Ok(Output { text: csv, code: 0 }),
                Format::Svg => Ok(Output { text: r.profile.to_svg(), code: 0 }),
                Format::Text => Ok(Output { text: format!("rho0 = {}\n{csv}", r.decimal()), code: 0 }),
                Format::Json => {
                    let v = json!({
                        "name": knot_name(&k),
                        "rho0": r.decimal(),
                        "exact": r.exact.as_ref().map(|e| e.to_string()),
                        "error_bound": format!("{:.3e}", knotloc_core::seifert::numeric::to_f64(&r.error)),
                        "profile_csv": csv,
                    });
                    ctx.emit(v, None)
                }
                Format::Dot => Err(ctx.unsupported()),
            }
        }
        KnotCmd::Arf { knot } => {
            let k = ctx.ws.knot(knot)?;
            let a = k.arf();
            ctx.emit(json!({"name": knot_name(&k), "arf": a}), Some(format!("{a}\n")))
        }
        KnotCmd::Sum { a, b } => {
            let s = ctx.ws.knot(a)?.connected_sum(&ctx.ws.knot(b)?);
            ctx.emit(to_value(&s.to_json()), None)
        }
        KnotCmd::Mirror { knot } => {
            let m = ctx.ws.knot(knot)?.mirror();
            ctx.emit(to_value(&m.to_json()), None)
        }
    }
}

fn parse_fraction(s: &str) -> Outcome<Rational> {
    let bad = || Failure::Usage(format!("{s:?} is not a fraction a/b"));
    let (a, b) = s.split_once('/').unwrap_or((s, "1"));
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if b == 0 {
        return Err(bad());
    }
    Ok(Rational::new(a.into(), b.into()))
}

fn submodule_json(s: &Submodule) -> Value {
    json!({"label": s.label, "generator": s.generator.to_string()})
}

fn module_cmd(ctx: &Ctx, c: &ModuleCmd) -> Outcome<Output> {
    match c {
        ModuleCmd::Submodules { order, delta } => {
            let m = CyclicModule::new(&poly(order)?)?;
            let subs = match delta {
                Some(d) => proper_submodules_with_delta(&m, &poly(d)?)?,
                None => proper_submodules(&m)?,
            };
            let text: String = subs.iter().map(|s| format!("{} <{}>\n", s.label, s.generator)).collect();
            let list: Vec<Value> = subs.iter().map(submodule_json).collect();
            ctx.emit(json!({"order": m.order().to_string(), "submodules": list}), Some(text))
        }
        ModuleCmd::Isotropy { knot } => {
            let k = ctx.ws.knot(knot)?;
            let km = module_from_knot(&k)?;
            let m = km
                .module()
                .ok_or_else(|| Failure::Rejected(format!("the Alexander module of {} is not cyclic", knot_name(&k))))?
                .clone();
            let mut subs = proper_submodules(&m)?;
            if !m.is_trivial() {
                subs.push(Submodule { generator: LaurentPoly::one(), label: SubmoduleLabel::Full });
            }
            let mut list = Vec::new();
            let mut text = String::new();
            for s in &subs {
                let value = km.self_pairing(&s.generator)?;
                let iso = value.is_zero();
                let mut j = submodule_json(s);
                j["isotropic"] = json!(iso);
                j["self_pairing"] = json!(value.to_string());
                list.push(j);
                text.push_str(&format!("{} <{}> isotropic={iso} B={value}\n", s.label, s.generator));
            }
            ctx.emit(json!({"name": knot_name(&k), "order": m.order().to_string(), "submodules": list}), Some(text))
        }
        ModuleCmd::Order { order, x } => {
            let m = CyclicModule::new(&poly(order)?)?;
            let o = element_order(&m, &poly(x)?)?;
            ctx.emit(json!({"element_order": o.to_string()}), Some(format!("{o}\n")))
        }
        ModuleCmd::Localize { order, p, mode } => {
            let mode: LocalizationMode = mode.parse().map_err(|e: knotloc_core::Error| Failure::Usage(e.to_string()))?;
            let m = CyclicModule::new(&poly(order)?)?;
            let v = localize(&m, &poly(p)?, mode, ctx.bound())?;
            let out = ctx.emit(to_value(&v.to_json()), None)?;
            Ok(ctx.exactness(out, v.exact))
        }
    }
}

fn op_cmd(ctx: &Ctx, c: &OpCmd) -> Outcome<Output> {
    match c {
        OpCmd::Make { name, pattern, alpha, certificate } => {
            let pat = ctx.ws.knot(pattern)?;
            let cert = match certificate {
                None => None,
                Some(path) => {
                    let j: CertificateJson = ctx.ws.json_file(path, "certificate")?;
                    let mut signatures = Vec::new();
                    for s in &j.signatures {
                        signatures.push(SignatureEntry {
                            submodule: s.submodule.parse()?,
                            kind: s.kind,
                            value: s.value,
                            provenance: s.provenance.clone(),
                        });
                    }
                    Some(RobustCertificate { delta: poly(&j.delta)?, signatures })
                }
            };
            let op = make_operator(name, pat, &poly(alpha)?, cert)?;
            ctx.emit(to_value(&op.to_json()), None)
        }
        OpCmd::CheckRobust { op } => {
            let o = ctx.ws.operator(op)?;
            let r = o.robustness()?;
            let text = format!("{}: {}\n", o.name, to_value(&r)["status"].as_str().unwrap_or(""));
            ctx.emit(json!({"operator": o.name, "robustness": r}), Some(text))
        }
        OpCmd::Compose { ops, base } => {
            let list: Vec<_> = ops.iter().map(|o| ctx.ws.operator(o)).collect::<Outcome<_>>()?;
            let e = compose(&list, KnotExpression::base(ctx.ws.knot(base)?))?;
            ctx.emit(to_value(&e.to_json()), None)
        }
        OpCmd::Orders { expr } => {
            let e = ctx.ws.expression(expr)?;
            let seqs: Vec<String> = order_sequences(&e).sequences.iter().map(|s| s.to_string()).collect();
            let text = seqs.iter().map(|s| format!("{s}\n")).collect();
            ctx.emit(json!({"depth": e.depth(), "sequences": seqs}), Some(text))
        }
    }
}

fn verdict_text(v: &ObstructionVerdict) -> String {
    let mut s = format!("{:?} (exact: {})\n", v.status, v.exact);
    for t in &v.trail {
        s.push_str(&format!("  [{}] {} ({})\n", if t.outcome { "ok" } else { "fail" }, t.hypothesis, t.cite));
    }
    s
}

#[derive(Deserialize)]
struct FamiliesFile {
    families: Vec<FamilyEntry>,
}

#[derive(Deserialize)]
struct FamilyEntry {
    index: String,
    chain: Vec<String>,
    bases: Vec<String>,
}

fn obstruct_cmd(ctx: &Ctx, c: &ObstructCmd) -> Outcome<Output> {
    match c {
        ObstructCmd::Vanish { expr, target } => {
            let e = ctx.ws.expression(expr)?;
            let p = PolySequence::parse(target, SequenceRole::Target)?;
            let v = vanishing_verdict(&e, &p, ctx.bound())?;
            let out = ctx.emit(to_value(&v), Some(verdict_text(&v)))?;
            Ok(ctx.exactness(out, v.exact))
        }
        ObstructCmd::Survive { expr, target, assert_rho0 } => {
            let e = ctx.ws.expression(expr)?;
            let p = PolySequence::parse(target, SequenceRole::Target)?;
            let h = Rho0Hypothesis { provenance: assert_rho0.clone() };
            let v = survival_verdict(&e, &p, &h)?;
            ctx.emit(to_value(&v), Some(verdict_text(&v)))
        }
        ObstructCmd::Family { families, assert_rho0 } => {
            let f: FamiliesFile = ctx.ws.json_file(families, "families")?;
            let mut specs = Vec::new();
            for e in &f.families {
                specs.push(FamilySpec {
                    index: PolySequence::parse(&e.index, SequenceRole::Target)?,
                    chain: e.chain.iter().map(|o| ctx.ws.operator(o)).collect::<Outcome<_>>()?,
                    bases: e.bases.iter().map(|k| ctx.ws.knot(k)).collect::<Outcome<_>>()?,
                });
            }
            let cert = family_certificate(&specs, assert_rho0.as_deref(), ctx.bound())?;
            let exact = cert.pairwise.iter().all(|p| p.exact);
            let out = ctx.emit(to_value(&cert), None)?;
            Ok(ctx.exactness(out, exact))
        }
        ObstructCmd::Inject { a, b } => {
            let r = injectivity_report(&ctx.ws.operator(a)?, &ctx.ws.operator(b)?)?;
            let text = format!("{}: {}\n", to_value(&r.status).as_str().unwrap_or(""), r.reason);
            ctx.emit(to_value(&r), Some(text))
        }
        ObstructCmd::Tree { depth, family } => {
            let ops: Vec<_> = family
                .split(',')
                .map(|s| s.trim())
                .filter(|s| !s.is_empty())
                .map(|o| ctx.ws.operator(o))
                .collect::<Outcome<_>>()?;
            let t = fractal_tree(*depth, &ops, ctx.bound())?;
            let exact = t.pairwise.iter().all(|p| p.exact);
            let out = match ctx.format() {
                Format::Dot => Output { text: t.to_dot(), code: 0 },
                _ => {
                    let text = t.paths.iter().map(|p| format!("{} : {}\n", p.operators.join(" o "), p.tuple)).collect();
                    ctx.emit(to_value(&t), Some(text))?
                }
            };
            Ok(ctx.exactness(out, exact))
        }
    }
}
