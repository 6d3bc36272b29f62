use std::fmt::Write as _;
use std::io::Read;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use downup_core::classify::{
    are_isomorphic, orbit_finite_condition, orbit_iterate, semisimplicity_verdict, simples_of_dim, to_w_coordinates,
    typec_invariant, verma_structure, OrbitResult, SimplesOfDim, DEFAULT_ORBIT_BOUND, DEFAULT_XMN_BOUND,
    DEFAULT_ZERO_BOUND,
};
use downup_core::exactfield::{FieldElement, NumberField};
use downup_core::ext_oracle::{ext1_dim, hom_dim, semisimplicity_probe};
use downup_core::linalg::Matrix;
use downup_core::repmod::{
    dual_module, is_simple, orbit_module, simple_module, verify_relations, verma_quotient, weight_decomposition,
    FDModule,
};
use downup_core::skewalgebra::{parse_expression, parse_polynomial, parse_scalar, Params, Spelling};
use downup_core::Error;
use serde_json::{json, Value};

use crate::json::{self as codec, element_to_json};

#[derive(Parser, Debug)]
#[command(name = "downup", version, about = "Exact computations with Noetherian down-up algebras A(alpha, beta, gamma)")]
#[command(after_help = "Parameters are written alpha,beta,gamma, e.g. --params 2,-1,1 or --params 1+w,-w,1.\n\
Output is JSON unless --pretty is given. Exit status: 0 success, 1 domain error, 2 usage error.")]
struct Cli {
    /// Ground field, e.g. "minpoly=t^2+t+1" or "minpoly=t^2+t+1;name=w" (default Q)
    #[arg(long, global = true, value_name = "SPEC")]
    field: Option<String>,

    /// Human-readable output instead of JSON
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct ParamsArg {
    /// alpha,beta,gamma
    #[arg(long, allow_hyphen_values = true, value_name = "A,B,G")]
    params: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SpellingArg {
    /// coefficients in x = ud and y = du
    Xy,
    /// coefficients spelled with ud and du
    UdDu,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce an expression in d, u to graded normal form
    Nf {
        #[command(flatten)]
        p: ParamsArg,
        /// Expression such as "d^2*u - 2*d*u*d"; "-" reads standard input
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value = "xy")]
        spelling: SpellingArg,
    },
    /// Highest weights of the simple modules of a given dimension
    Simples {
        #[command(flatten)]
        p: ParamsArg,
        #[arg(long)]
        dim: usize,
    },
    /// Zeros of the highest weight sequence and the Verma module's length
    Verma {
        #[command(flatten)]
        p: ParamsArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value_t = DEFAULT_ZERO_BOUND)]
        bound: usize,
    },
    /// The sigma-orbit of the maximal ideal (x - a, y - b)
    Orbit {
        #[command(flatten)]
        p: ParamsArg,
        /// a,b
        #[arg(long, allow_hyphen_values = true, value_name = "A,B")]
        point: String,
        #[arg(long, default_value_t = DEFAULT_ORBIT_BOUND)]
        bound: usize,
    },
    /// Construct a module: L(lambda), a Verma quotient, an orbit module or a dual
    Module(ModuleArgs),
    /// Check the defining relations on a module and report its structure
    Verify {
        /// Module JSON: a file path, inline JSON, or "-" for standard input
        #[arg(long)]
        module: String,
    },
    /// Decide whether two algebras are isomorphic
    Iso {
        #[arg(long, allow_hyphen_values = true, value_name = "A,B,G")]
        left: String,
        #[arg(long, allow_hyphen_values = true, value_name = "A,B,G")]
        right: String,
    },
    /// Type (a)-(d), case and, for type (c), the normal-element invariant
    Type {
        #[command(flatten)]
        p: ParamsArg,
    },
    /// Semisimplicity verdict for type (d) algebras
    Semisimple {
        #[command(flatten)]
        p: ParamsArg,
        #[arg(long, default_value_t = DEFAULT_XMN_BOUND)]
        bound: u64,
    },
    /// Hom and Ext^1 for extensions 0 -> FROM -> E -> TO -> 0
    Ext(ExtArgs),
    /// Ext^1 between all simples up to a dimension
    Probe {
        #[command(flatten)]
        p: ParamsArg,
        #[arg(long)]
        dim_bound: usize,
    },
}

#[derive(Args, Debug)]
#[group(skip)]
#[command(group(ArgGroup::new("kind").required(true).multiple(false).args(["simple", "verma", "orbit", "dual"])))]
struct ModuleArgs {
    #[arg(long, allow_hyphen_values = true, value_name = "A,B,G")]
    params: Option<String>,
    /// L(lambda)
    #[arg(long, allow_hyphen_values = true, value_name = "LAMBDA")]
    simple: Option<String>,
    /// V(lambda) / span{v_j : j >= dim}
    #[arg(long, allow_hyphen_values = true, value_name = "LAMBDA", requires = "dim")]
    verma: Option<String>,
    #[arg(long)]
    dim: Option<usize>,
    /// M_P for the orbit of the point a,b
    #[arg(long, allow_hyphen_values = true, value_name = "A,B")]
    orbit: Option<String>,
    /// Dual of a module given as JSON (path, inline, or "-")
    #[arg(long, value_name = "MODULE")]
    dual: Option<String>,
    /// Search bound for the dimension of L(lambda) or the orbit period
    #[arg(long)]
    bound: Option<usize>,
}

#[derive(Args, Debug)]
struct ExtArgs {
    #[arg(long, allow_hyphen_values = true, value_name = "A,B,G")]
    params: Option<String>,
    /// Highest weight of the submodule L(lambda)
    #[arg(long, allow_hyphen_values = true, value_name = "LAMBDA", required_unless_present = "from_module")]
    from: Option<String>,
    /// Highest weight of the quotient L(mu)
    #[arg(long, allow_hyphen_values = true, value_name = "MU", required_unless_present = "to_module")]
    to: Option<String>,
    #[arg(long, value_name = "MODULE", conflicts_with = "from")]
    from_module: Option<String>,
    #[arg(long, value_name = "MODULE", conflicts_with = "to")]
    to_module: Option<String>,
    #[arg(long, default_value_t = DEFAULT_ZERO_BOUND)]
    bound: usize,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Out = Result<(Value, String), Failure>;

fn usage(flag: &str, msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("--{flag}: {msg}"))
}

struct Ctx<'a> {
    field: NumberField,
    stdin: &'a mut dyn FnMut() -> std::io::Result<String>,
}

impl Ctx<'_> {
    fn scalar(&self, flag: &str, s: &str) -> Result<FieldElement, Failure> {
        parse_scalar(&self.field, s.trim()).map_err(|e| usage(flag, format!("{s:?}: {e}")))
    }

    fn list(&self, flag: &str, s: &str, n: usize) -> Result<Vec<FieldElement>, Failure> {
        let parts: Vec<_> = s.split(',').collect();
        if parts.len() != n {
            return Err(usage(flag, format!("expected {n} comma-separated values, got {}", parts.len())));
        }
        parts.iter().map(|x| self.scalar(flag, x)).collect()
    }

    fn params(&self, flag: &str, s: &str) -> Result<Params, Failure> {
        let v = self.list(flag, s, 3)?;
        Ok(Params::new(&v[0], &v[1], &v[2])?)
    }

    fn point(&self, flag: &str, s: &str) -> Result<(FieldElement, FieldElement), Failure> {
        let v = self.list(flag, s, 2)?;
        Ok((v[0].clone(), v[1].clone()))
    }

    fn text(&mut self, flag: &str, src: &str) -> Result<String, Failure> {
        if src == "-" {
            return (self.stdin)().map_err(|e| usage(flag, format!("reading standard input: {e}")));
        }
        Ok(src.to_string())
    }

    fn module(&mut self, flag: &str, src: &str) -> Result<FDModule, Failure> {
        let text = if src == "-" || src.trim_start().starts_with('{') {
            self.text(flag, src)?
        } else {
            std::fs::read_to_string(src).map_err(|e| usage(flag, format!("{src}: {e}")))?
        };
        let v: Value = serde_json::from_str(&text).map_err(|e| usage(flag, format!("invalid JSON: {e}")))?;
        codec::module_from_json(&v).map_err(|e| usage(flag, e))
    }
}

fn parse_field(spec: &str) -> Result<NumberField, Failure> {
    let mut minpoly = None;
    let mut name = "w".to_string();
    for part in spec.split([';', ',']) {
        let (k, v) = part.split_once('=').ok_or_else(|| usage("field", format!("expected key=value, got {part:?}")))?;
        match k.trim() {
            "minpoly" => minpoly = Some(v.trim().to_string()),
            "name" => name = v.trim().to_string(),
            other => return Err(usage("field", format!("unknown key {other:?}"))),
        }
    }
    let src = minpoly.ok_or_else(|| usage("field", "missing minpoly=..."))?;
    let poly = parse_polynomial(&src, "t").map_err(|e| usage("field", e))?;
    Ok(NumberField::new(poly.coeffs(), &name)?)
}

/// Runs the command line `argv` (including the program name) and captures
/// its output. Standard input is read only by commands given `-`.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_stdin(argv, &mut || {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    })
}

pub fn run_with_stdin<I, T>(argv: I, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let field = match cli.field.as_deref().map(parse_field).transpose() {
        Ok(f) => f.unwrap_or_else(NumberField::rationals),
        Err(f) => return failure(f),
    };
    let mut ctx = Ctx { field, stdin };
    match dispatch(&mut ctx, cli.command) {
        Ok((json, pretty)) => {
            let mut stdout = if cli.pretty { pretty } else { json.to_string() };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(f) => failure(f),
    }
}

fn failure(f: Failure) -> Outcome {
    let (code, msg) = match f {
        Failure::Usage(m) => (2, m),
        Failure::Domain(m) => (1, m),
    };
    Outcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
}

fn pretty_matrix(m: &Matrix) -> String {
    let rows = m.to_rows();
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|r| format!("  [ {} ]", r.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join("  ")))
        .collect::<Vec<_>>()
        .join("\n")
}

fn pretty_module(m: &FDModule) -> String {
    format!(
        "{} module of dimension {} over {}\nD =\n{}\nU =\n{}",
        m.label(),
        m.dim(),
        m.params(),
        pretty_matrix(m.d()),
        pretty_matrix(m.u())
    )
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn dispatch(ctx: &mut Ctx<'_>, command: Command) -> Out {
    match command {
        Command::Nf { p, expr, spelling } => {
            let params = ctx.params("params", &p.params)?;
            let src = ctx.text("expr", &expr)?;
            let e = parse_expression(&params, src.trim()).map_err(|e| match e {
                Error::Syntax { .. } => usage("expr", e),
                other => other.into(),
            })?;
            let spelling = match spelling {
                SpellingArg::Xy => Spelling::Xy,
                SpellingArg::UdDu => Spelling::UdDu,
            };
            let text = e.display(spelling).to_string();
            let v = if e.is_zero() {
                json!({ "zero": true })
            } else {
                json!({ "zero": false, "normal_form": codec::algebra_element_to_json(&e), "text": text })
            };
            Ok((v, text))
        }
        Command::Simples { p, dim } => {
            let params = ctx.params("params", &p.params)?;
            if dim == 0 {
                return Err(usage("dim", "must be positive"));
            }
            let s = simples_of_dim(&params, dim)?;
            let pretty = match &s {
                SimplesOfDim::Finite(v) if v.is_empty() => format!("no simple modules of dimension {dim}"),
                SimplesOfDim::Finite(v) => format!("simple modules of dimension {dim}: L(lambda) for lambda in {{{}}}", join(v)),
                SimplesOfDim::AllExcept(v) => {
                    format!("every lambda gives a simple module of dimension {dim} except {{{}}}", join(v))
                }
            };
            Ok((codec::simples_to_json(&s), pretty))
        }
        Command::Verma { p, lambda, bound } => {
            let params = ctx.params("params", &p.params)?;
            let l = ctx.scalar("lambda", &lambda)?;
            let s = verma_structure(&params, &l, bound)?;
            let mut v = codec::verma_structure_to_json(&s);
            v["simple_dim"] = json!(s.zeros.first());
            let pretty = format!(
                "lambda_(k-1) = 0 for k in {{{}}} (k <= {bound})\ncomposition length within the window: {}",
                join(&s.zeros),
                s.length
            );
            Ok((v, pretty))
        }
        Command::Orbit { p, point, bound } => {
            let params = ctx.params("params", &p.params)?;
            let pt = ctx.point("point", &point)?;
            let res = orbit_iterate(&params, &pt, bound)?;
            let (orbit, period) = match &res {
                OrbitResult::Orbit(v) => (
                    json!(v.iter().map(|(a, b)| json!([element_to_json(a), element_to_json(b)])).collect::<Vec<_>>()),
                    json!(v.len()),
                ),
                OrbitResult::NoReturnWithinBound => (Value::Null, Value::Null),
            };
            let predicted = match to_w_coordinates(&params, &pt) {
                Ok(w) => {
                    let n = orbit_finite_condition(&params, &w.0, &w.1)?;
                    json!({
                        "w": [element_to_json(&w.0), element_to_json(&w.1)],
                        "finite": n.is_some(),
                        "period": n,
                    })
                }
                Err(Error::FieldNotSplit { .. }) => Value::Null,
                Err(e) => return Err(e.into()),
            };
            let mut pretty = match &res {
                OrbitResult::Orbit(v) => format!(
                    "orbit of period {}: {}",
                    v.len(),
                    v.iter().map(|(a, b)| format!("({a}, {b})")).collect::<Vec<_>>().join(" -> ")
                ),
                OrbitResult::NoReturnWithinBound => format!("no return within {bound} steps"),
            };
            match predicted.get("period") {
                Some(Value::Null) => pretty.push_str("\npredicted: infinite orbit"),
                Some(n) => {
                    let _ = write!(pretty, "\npredicted period: {n}");
                }
                None => pretty.push_str("\npredicted: unavailable (roots not in the field)"),
            }
            let v = json!({
                "point": [element_to_json(&pt.0), element_to_json(&pt.1)],
                "orbit": orbit,
                "period": period,
                "bound": bound,
                "predicted": predicted,
            });
            Ok((v, pretty))
        }
        Command::Module(args) => {
            let m = build_module(ctx, args)?;
            Ok((codec::module_to_json(&m), pretty_module(&m)))
        }
        Command::Verify { module } => {
            let m = ctx.module("module", &module)?;
            let rep = verify_relations(&m);
            let simple = is_simple(&m);
            let (weights, weight_module) = match weight_decomposition(&m) {
                Ok(w) => (
                    json!(w
                        .pairs()
                        .iter()
                        .map(|(a, b)| json!([element_to_json(a), element_to_json(b)]))
                        .collect::<Vec<_>>()),
                    json!(w.is_weight_module),
                ),
                Err(Error::EigenvaluesNotInField { .. }) => (Value::Null, Value::Null),
                Err(e) => return Err(e.into()),
            };
            let v = json!({
                "ok": rep.ok,
                "dim": m.dim(),
                "label": m.label().as_str(),
                "is_simple": simple,
                "is_weight_module": weight_module,
                "weights": weights,
            });
            let mut pretty = format!(
                "relations {}\ndimension {}\n{}",
                if rep.ok { "hold" } else { "FAIL" },
                m.dim(),
                if simple { "simple" } else { "not simple" }
            );
            if !rep.ok {
                let _ = write!(pretty, "\nR1 residual =\n{}\nR2 residual =\n{}", pretty_matrix(&rep.residual1), pretty_matrix(&rep.residual2));
            }
            Ok((v, pretty))
        }
        Command::Iso { left, right } => {
            let p = ctx.params("left", &left)?;
            let q = ctx.params("right", &right)?;
            let v = are_isomorphic(&p, &q)?;
            let pretty = format!(
                "{p} and {q} are {}isomorphic ({})",
                if v.answer { "" } else { "not " },
                v.details
            );
            Ok((codec::iso_to_json(&v), pretty))
        }
        Command::Type { p } => {
            let params = ctx.params("params", &p.params)?;
            let roots = match params.roots() {
                Ok((a, b)) => json!([element_to_json(&a), element_to_json(&b)]),
                Err(Error::FieldNotSplit { .. }) => Value::Null,
                Err(e) => return Err(e.into()),
            };
            let t = params.algebra_type();
            let mut pretty = format!("type ({t}), {}, eta = {}", params.case(), params.eta());
            let invariant = match typec_invariant(&params) {
                Ok(inv) => {
                    let _ = write!(pretty, "\nnormal-element matrix:\n{}", pretty_matrix(&inv.matrix));
                    json!({ "matrix": codec::matrix_to_json(&inv.matrix), "diagonal": inv.diagonal })
                }
                Err(Error::NotTypeC | Error::FieldNotSplit { .. }) => Value::Null,
                Err(e) => return Err(e.into()),
            };
            let v = json!({
                "type": t.letter().to_string(),
                "case": params.case().to_string(),
                "eta": element_to_json(params.eta()),
                "roots": roots,
                "typec_invariant": invariant,
            });
            Ok((v, pretty))
        }
        Command::Semisimple { p, bound } => {
            let params = ctx.params("params", &p.params)?;
            let v = semisimplicity_verdict(&params, bound)?;
            let mut pretty = v.answer.as_str().replace('_', " ");
            if let Some((m, n)) = v.witness {
                let _ = write!(pretty, ": eta lies in X_({m},{n})");
            }
            Ok((codec::semisimplicity_to_json(&v), pretty))
        }
        Command::Ext(args) => {
            let params = args.params.as_deref().map(|s| ctx.params("params", s)).transpose()?;
            let mut side = |lambda: &Option<String>, module: &Option<String>, flag: &str| -> Result<FDModule, Failure> {
                if let Some(src) = module {
                    return ctx.module(&format!("{flag}-module"), src);
                }
                let params = params.as_ref().ok_or_else(|| usage("params", "required with --from/--to"))?;
                let l = ctx.scalar(flag, lambda.as_deref().unwrap_or_default())?;
                Ok(simple_module(params, &l, args.bound)?)
            };
            let m = side(&args.from, &args.from_module, "from")?;
            let n = side(&args.to, &args.to_module, "to")?;
            let k = ext1_dim(&m, &n)?;
            let h = hom_dim(&m, &n)?;
            let pretty = format!("dim Ext^1 = {k} (extensions of dimension {}), dim Hom = {h}", m.dim() + n.dim());
            Ok((json!({ "ext1": k, "hom": h }), pretty))
        }
        Command::Probe { p, dim_bound } => {
            let params = ctx.params("params", &p.params)?;
            let r = semisimplicity_probe(&params, dim_bound)?;
            let mut pretty = if r.pairs.is_empty() {
                format!("no nonsplit extensions between simples of dimension <= {dim_bound}")
            } else {
                r.pairs
                    .iter()
                    .map(|q| {
                        format!(
                            "0 -> L({}) -> E -> L({}) -> 0: dim Ext^1 = {}",
                            q.from.lambda, q.to.lambda, q.ext1
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            if let Some(v) = &r.verdict {
                let _ = write!(pretty, "\nverdict: {}", v.answer.as_str());
            }
            Ok((codec::probe_to_json(&r), pretty))
        }
    }
}

fn build_module(ctx: &mut Ctx<'_>, args: ModuleArgs) -> Result<FDModule, Failure> {
    if let Some(src) = &args.dual {
        let m = ctx.module("dual", src)?;
        return Ok(dual_module(&m)?);
    }
    let params = match &args.params {
        Some(s) => ctx.params("params", s)?,
        None => return Err(usage("params", "required unless --dual is given")),
    };
    if let Some(l) = &args.simple {
        let l = ctx.scalar("simple", l)?;
        return Ok(simple_module(&params, &l, args.bound.unwrap_or(DEFAULT_ZERO_BOUND))?);
    }
    if let Some(l) = &args.verma {
        let l = ctx.scalar("verma", l)?;
        let n = args.dim.unwrap_or_default();
        if n == 0 {
            return Err(usage("dim", "must be positive"));
        }
        return Ok(verma_quotient(&params, &l, n)?);
    }
    let src = args.orbit.as_deref().unwrap_or_default();
    let pt = ctx.point("orbit", src)?;
    let bound = args.bound.unwrap_or(DEFAULT_ORBIT_BOUND);
    match orbit_iterate(&params, &pt, bound)? {
        OrbitResult::Orbit(orbit) => Ok(orbit_module(&params, &pt, &orbit)?),
        OrbitResult::NoReturnWithinBound => {
            Err(Error::NotAnOrbit { reason: format!("no return to the point within {bound} steps") }.into())
        }
    }
}
