//! Command-line surface for the library: weighted counting reports,
//! class enumeration, boundary catalogs, the level-6 critical-value
//! map, and the approximant construction on cubic curves.  All output
//! is exact; `--format json` emits rationals as "p/q" strings and
//! polynomials as degree-to-coefficient maps.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use abelpairs::abelforms::RationalityOutcome;
use abelpairs::counts::{count_closed, cusp_catalog, cusp_number, CuspKind};
use abelpairs::dessins::{
    enumerate_box, enumerate_hex, total_abel_belyi, total_abel_belyi_oracle,
};
use abelpairs::family6::{kappa6_census, kappa6_closed, kappa6_via_resultant, member, CuspNote};
use abelpairs::pade::{abel_candidate, torsion_order, CubicCurve};
use abelpairs::scalar::{rat, Rational};
use abelpairs::{Error, FieldCtx, RatFunc, UniPoly};

#[derive(Parser)]
#[command(name = "abelpairs", about = "Exact counting and construction tools for closed pairs")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report to a file instead of stdout
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    Hex,
    Box,
}

#[derive(Subcommand)]
enum Command {
    /// Weighted class counts and derived quantities at one level
    Counts {
        /// Level, must be greater than 3
        #[arg(long)]
        n: u64,
        /// Work over F_p instead of the rationals (prime p > 3, p must not divide n)
        #[arg(long = "char", value_name = "P")]
        characteristic: Option<u64>,
    },
    /// List the triple or quadruple classes at one level
    Enumerate {
        #[arg(long)]
        n: u64,
        /// Which shape to enumerate
        #[arg(long, value_enum)]
        shape: Shape,
        /// Only primitive classes
        #[arg(long)]
        primitive: bool,
    },
    /// Weighted total of pairs of one degree over all genera
    Total {
        #[arg(long)]
        n: u64,
        /// Cross-check against the brute-force orbit enumeration (n <= 8)
        #[arg(long)]
        oracle: bool,
    },
    /// Boundary-point catalog with multiplicities
    Cusps {
        /// Level, must be greater than 3
        #[arg(long)]
        n: u64,
        #[arg(long = "char", value_name = "P")]
        characteristic: Option<u64>,
    },
    /// The level-6 critical-value map: evaluate, reduce, or survey
    #[command(group(ArgGroup::new("mode").required(true).args(["t", "reduce", "census"])))]
    Kappa6 {
        /// Evaluate both computation paths at a rational parameter
        #[arg(long, value_name = "R", allow_hyphen_values = true)]
        t: Option<String>,
        /// Print the map reduced mod a prime p > 3
        #[arg(long, value_name = "P")]
        reduce: Option<u64>,
        /// Survey zeros and poles, over F_p when a prime is given
        #[arg(long, value_name = "P", num_args = 0..=1)]
        census: Option<Option<u64>>,
    },
    /// Approximant construction on the curve y^2 = 1 + ax + bx^2 + cx^3
    #[command(group(ArgGroup::new("task").required(true).args(["n", "torsion"])))]
    Pade {
        /// Curve coefficients a,b,c as comma-separated rationals
        #[arg(long, value_name = "A,B,C", allow_hyphen_values = true)]
        curve: String,
        /// Build the candidate function with divisor nA - nB (n >= 3)
        #[arg(long)]
        n: Option<u64>,
        /// Probe the order of A - B for divisor degrees up to this bound
        #[arg(long, value_name = "MAX")]
        torsion: Option<u64>,
    },
}

/// A rendered command result.  `degenerate` selects exit code 3: the
/// computation hit a structurally degenerate configuration that is
/// reported rather than treated as success.
struct Report {
    text: String,
    json: Map<String, Value>,
    degenerate: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ZeroDenominator
            | Error::BadCharacteristic(_)
            | Error::BadReduction { .. }
            | Error::CharDivides { .. }
            | Error::OutOfRange { .. } => 2,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli.command) {
        Ok(report) => report,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            return ExitCode::from(failure.code);
        }
    };
    let rendered = match cli.format {
        Format::Text => report.text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&Value::Object(report.json)).unwrap();
            s.push('\n');
            s
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &rendered) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::FAILURE;
        }
    } else {
        print!("{rendered}");
    }
    if report.degenerate {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}

fn run(command: &Command) -> Result<Report, Failure> {
    match command {
        Command::Counts { n, characteristic } => cmd_counts(*n, *characteristic),
        Command::Enumerate { n, shape, primitive } => cmd_enumerate(*n, *shape, *primitive),
        Command::Total { n, oracle } => cmd_total(*n, *oracle),
        Command::Cusps { n, characteristic } => cmd_cusps(*n, *characteristic),
        Command::Kappa6 { t, reduce, census } => match (t, reduce, census) {
            (Some(t), _, _) => cmd_kappa6_evaluate(t),
            (_, Some(p), _) => cmd_kappa6_reduce(*p),
            (_, _, Some(p)) => cmd_kappa6_census(p.unwrap_or(0)),
            _ => unreachable!("clap enforces one mode"),
        },
        Command::Pade { curve, n, torsion } => {
            let curve = parse_curve(curve)?;
            match (n, torsion) {
                (Some(n), _) => cmd_pade_candidate(&curve, *n),
                (_, Some(max)) => cmd_pade_torsion(&curve, *max),
                _ => unreachable!("clap enforces one task"),
            }
        }
    }
}

fn resolve_field(characteristic: Option<u64>, level: Option<u64>) -> Result<FieldCtx, Failure> {
    match characteristic {
        None => Ok(FieldCtx::Q),
        Some(p) => {
            let ctx = FieldCtx::prime_field(p)?;
            if let Some(n) = level {
                ctx.check_coprime(n, "level")?;
            }
            Ok(ctx)
        }
    }
}

fn field_tag(ctx: FieldCtx) -> String {
    match ctx.characteristic() {
        0 => "Q".to_string(),
        p => format!("Fp:{p}"),
    }
}

fn field_phrase(ctx: FieldCtx) -> String {
    match ctx.characteristic() {
        0 => "Q".to_string(),
        p => format!("F{p}"),
    }
}

fn rational_value(q: &Rational) -> Value {
    Value::String(q.to_string())
}

fn poly_value(p: &UniPoly) -> Value {
    let mut map = Map::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            map.insert(i.to_string(), Value::String(c.to_string()));
        }
    }
    Value::Object(map)
}

fn ratfunc_value(f: &RatFunc) -> Value {
    json!({
        "numerator": poly_value(f.num()),
        "denominator": poly_value(f.den()),
    })
}

fn ratfunc_text(f: &RatFunc, var: &str) -> String {
    format!("({}) / ({})", f.num().display_with(var), f.den().display_with(var))
}

fn parse_rational(s: &str) -> Result<Rational, Failure> {
    Rational::from_str(s.trim())
        .map_err(|_| invalid(format!("'{s}' is not a rational number of the form p or p/q")))
}

fn parse_curve(spec: &str) -> Result<CubicCurve, Failure> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 3 {
        return Err(invalid(format!(
            "curve spec '{spec}' must be three comma-separated rationals a,b,c"
        )));
    }
    let ctx = FieldCtx::Q;
    let mut coeffs = Vec::with_capacity(3);
    for part in parts {
        coeffs.push(ctx.project(&parse_rational(part)?).expect("rational projects to Q"));
    }
    let (a, b, c) = (coeffs[0].clone(), coeffs[1].clone(), coeffs[2].clone());
    // a violated smoothness hypothesis is an input problem, not a
    // degenerate computation
    CubicCurve::new(a, b, c).map_err(|e| invalid(e.to_string()))
}

fn cmd_counts(n: u64, characteristic: Option<u64>) -> Result<Report, Failure> {
    if n <= 3 {
        return Err(invalid(format!("level must be greater than 3, got n = {n}")));
    }
    let ctx = resolve_field(characteristic, Some(n))?;
    let report = count_closed(n, ctx.characteristic())?;
    let box_primitive_text = match &report.m_box_primitive {
        Some(v) => v.to_string(),
        None => "indeterminate".to_string(),
    };
    let genus_text = match report.genus {
        Some(g) => g.to_string(),
        None => "-".to_string(),
    };
    let text = format!(
        "counts: level {n} over {}\n  m_hex            {}\n  m_box            {}\n  \
         m_hex_primitive  {}\n  m_box_primitive  {}\n  deg_kappa        {}\n  genus            {}\n",
        field_phrase(ctx),
        report.m_hex,
        report.m_box,
        report.m_hex_primitive,
        box_primitive_text,
        report.deg_kappa,
        genus_text,
    );
    let mut map = Map::new();
    map.insert("command".into(), json!("counts"));
    map.insert("n".into(), json!(n));
    map.insert("field".into(), json!(field_tag(ctx)));
    map.insert("m_hex".into(), rational_value(&report.m_hex));
    map.insert("m_box".into(), rational_value(&report.m_box));
    map.insert("m_hex_primitive".into(), rational_value(&report.m_hex_primitive));
    map.insert(
        "m_box_primitive".into(),
        report.m_box_primitive.as_ref().map(rational_value).unwrap_or(Value::Null),
    );
    map.insert("deg_kappa".into(), rational_value(&report.deg_kappa));
    map.insert("genus".into(), report.genus.map(|g| json!(g)).unwrap_or(Value::Null));
    Ok(Report { text, json: map, degenerate: false })
}

fn cmd_enumerate(n: u64, shape: Shape, primitive_only: bool) -> Result<Report, Failure> {
    struct Row {
        parts: Vec<u64>,
        aut: u64,
        primitive: bool,
    }
    let (label, rows) = match shape {
        Shape::Hex => (
            "hex",
            enumerate_hex(n)?
                .into_iter()
                .map(|c| Row { parts: c.parts().to_vec(), aut: c.aut_order(), primitive: c.is_primitive() })
                .collect::<Vec<_>>(),
        ),
        Shape::Box => (
            "box",
            enumerate_box(n)?
                .into_iter()
                .map(|c| Row { parts: c.parts().to_vec(), aut: c.aut_order(), primitive: c.is_primitive() })
                .collect::<Vec<_>>(),
        ),
    };
    let rows: Vec<Row> = rows.into_iter().filter(|r| !primitive_only || r.primitive).collect();
    let mut text = format!(
        "enumerate: {} {label} classes at level {n}{}\n",
        rows.len(),
        if primitive_only { " (primitive only)" } else { "" }
    );
    text.push_str("  parts            aut  primitive\n");
    for row in &rows {
        let parts = row.parts.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        text.push_str(&format!(
            "  {:<15}  {:<3}  {}\n",
            parts,
            row.aut,
            if row.primitive { "yes" } else { "no" }
        ));
    }
    let mut map = Map::new();
    map.insert("command".into(), json!("enumerate"));
    map.insert("n".into(), json!(n));
    map.insert("shape".into(), json!(label));
    map.insert("primitive_only".into(), json!(primitive_only));
    map.insert(
        "classes".into(),
        Value::Array(
            rows.iter()
                .map(|r| json!({ "parts": r.parts, "aut": r.aut, "primitive": r.primitive }))
                .collect(),
        ),
    );
    Ok(Report { text, json: map, degenerate: false })
}

fn cmd_total(n: u64, oracle: bool) -> Result<Report, Failure> {
    let total = total_abel_belyi(n)?;
    let checked = if oracle { Some(total_abel_belyi_oracle(n)?) } else { None };
    let mut text = format!("total: degree {n}\n  closed form  {total}\n");
    if let Some(o) = &checked {
        text.push_str(&format!("  oracle       {o}\n  agreement    {}\n", *o == total));
    }
    let mut map = Map::new();
    map.insert("command".into(), json!("total"));
    map.insert("n".into(), json!(n));
    map.insert("total".into(), rational_value(&total));
    if let Some(o) = &checked {
        map.insert("oracle".into(), rational_value(o));
        map.insert("agreement".into(), json!(*o == total));
    }
    Ok(Report { text, json: map, degenerate: false })
}

fn cmd_cusps(n: u64, characteristic: Option<u64>) -> Result<Report, Failure> {
    if n <= 3 {
        return Err(invalid(format!("level must be greater than 3, got n = {n}")));
    }
    let ctx = resolve_field(characteristic, Some(n))?;
    let catalog = cusp_catalog(n, ctx.characteristic())?;
    let pole_mass: Rational = catalog
        .iter()
        .filter(|c| c.kind == CuspKind::Pole)
        .map(|c| c.count.clone() * rat(c.multiplicity as i64, 1))
        .sum();
    let mut text = format!("cusps: level {n} over {}\n", field_phrase(ctx));
    text.push_str("  class           k   count  kind       multiplicity\n");
    for point in &catalog {
        text.push_str(&format!(
            "  {:<14}  {:<2}  {:<5}  {:<9}  {}\n",
            point.class.to_string(),
            point.k,
            point.count.to_string(),
            point.kind.to_string(),
            point.multiplicity,
        ));
    }
    text.push_str(&format!("  cusp number {}\n  pole mass   {pole_mass}\n", cusp_number(n)));
    let mut map = Map::new();
    map.insert("command".into(), json!("cusps"));
    map.insert("n".into(), json!(n));
    map.insert("field".into(), json!(field_tag(ctx)));
    map.insert(
        "classes".into(),
        Value::Array(
            catalog
                .iter()
                .map(|point| {
                    json!({
                        "class": point.class.to_string(),
                        "k": point.k,
                        "count": point.count.to_string(),
                        "kind": point.kind.to_string(),
                        "multiplicity": point.multiplicity,
                        "representative": poly_value(&point.representative(ctx)),
                    })
                })
                .collect(),
        ),
    );
    map.insert("cusp_number".into(), rational_value(&cusp_number(n)));
    map.insert("pole_mass".into(), rational_value(&pole_mass));
    Ok(Report { text, json: map, degenerate: false })
}

fn cmd_kappa6_evaluate(t_spec: &str) -> Result<Report, Failure> {
    let ctx = FieldCtx::Q;
    let t = ctx.project(&parse_rational(t_spec)?).expect("rational projects to Q");
    let closed = kappa6_closed(ctx);
    let closed_at = closed.eval(&t);
    let closed_text = match &closed_at {
        Some(v) => v.to_string(),
        None => "pole".to_string(),
    };
    let mut map = Map::new();
    map.insert("command".into(), json!("kappa6"));
    map.insert("mode".into(), json!("evaluate"));
    map.insert("field".into(), json!(field_tag(ctx)));
    map.insert("t".into(), json!(t.to_string()));
    map.insert(
        "closed_form".into(),
        closed_at.as_ref().map(|v| json!(v.to_string())).unwrap_or(json!("pole")),
    );
    match kappa6_via_resultant(&t) {
        Ok(value) => {
            let agree = closed_at.as_ref() == Some(&value);
            let text = format!(
                "kappa6 at t = {t} over Q\n  via resultant  {value}\n  closed form    {closed_text}\n  agreement      {agree}\n"
            );
            map.insert("via_resultant".into(), json!(value.to_string()));
            map.insert("agreement".into(), json!(agree));
            Ok(Report { text, json: map, degenerate: false })
        }
        Err(Error::Degenerate(reason)) => {
            // fibers over the boundary are rational curves; the
            // parametrization test recognizes them
            let boundary = !matches!(
                member(&t).form().rationality_test()?,
                RationalityOutcome::NotRational
            );
            let text = format!(
                "kappa6 at t = {t} over Q\n  via resultant  degenerate: {reason}\n  closed form    {closed_text}\n  boundary fiber {}\n",
                if boundary { "yes" } else { "no" }
            );
            map.insert("degenerate".into(), json!(reason));
            map.insert("boundary_fiber".into(), json!(boundary));
            Ok(Report { text, json: map, degenerate: true })
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_kappa6_reduce(p: u64) -> Result<Report, Failure> {
    let ctx = FieldCtx::prime_field(p)?;
    ctx.check_coprime(6, "level")?;
    let reduced = kappa6_closed(ctx);
    let text = format!("kappa6 over F{p}\n  {}\n", ratfunc_text(&reduced, "t"));
    let mut map = Map::new();
    map.insert("command".into(), json!("kappa6"));
    map.insert("mode".into(), json!("reduce"));
    map.insert("field".into(), json!(field_tag(ctx)));
    map.insert("variable".into(), json!("t"));
    map.insert("kappa6".into(), ratfunc_value(&reduced));
    Ok(Report { text, json: map, degenerate: false })
}

fn cusp_note_text(note: &CuspNote) -> String {
    match note {
        CuspNote::Pole { order } => format!("pole of order {order}"),
        CuspNote::Value(v) => format!("value {v}"),
    }
}

fn cusp_note_value(note: &CuspNote) -> Value {
    match note {
        CuspNote::Pole { order } => json!({ "pole_order": order }),
        CuspNote::Value(v) => json!({ "value": v.to_string() }),
    }
}

fn cmd_kappa6_census(characteristic: u64) -> Result<Report, Failure> {
    let ctx = resolve_field(if characteristic == 0 { None } else { Some(characteristic) }, Some(6))?;
    let report = kappa6_census(ctx)?;
    let simple_text = match &report.simple_zero_t {
        Some(t) => format!("t = {t}"),
        None => "none".to_string(),
    };
    let profile_text = if report.zero_profile.entries.is_empty() {
        "none".to_string()
    } else {
        report
            .zero_profile
            .entries
            .iter()
            .map(|(mult, count)| {
                let s = if *count == 1 { "point" } else { "points" };
                format!("multiplicity {mult} at {count} {s}")
            })
            .collect::<Vec<_>>()
            .join(", ")
    };
    let text = format!(
        "kappa6 census over {}\n  at t = 0       {}\n  at t = 1       {}\n  at infinity    {}\n  \
         simple zero    {}\n  zero profile   {}\n  hex primitive  {}\n  box primitive  {}\n",
        field_phrase(ctx),
        cusp_note_text(&report.at_zero),
        cusp_note_text(&report.at_one),
        cusp_note_text(&report.at_infinity),
        simple_text,
        profile_text,
        report.hex_primitive,
        report.box_primitive,
    );
    let mut map = Map::new();
    map.insert("command".into(), json!("kappa6"));
    map.insert("mode".into(), json!("census"));
    map.insert("field".into(), json!(field_tag(ctx)));
    map.insert("at_zero".into(), cusp_note_value(&report.at_zero));
    map.insert("at_one".into(), cusp_note_value(&report.at_one));
    map.insert("at_infinity".into(), cusp_note_value(&report.at_infinity));
    map.insert(
        "simple_zero_t".into(),
        report.simple_zero_t.as_ref().map(|t| json!(t.to_string())).unwrap_or(Value::Null),
    );
    map.insert(
        "zero_profile".into(),
        Value::Array(
            report
                .zero_profile
                .entries
                .iter()
                .map(|(mult, count)| json!({ "multiplicity": mult, "points": count }))
                .collect(),
        ),
    );
    map.insert("hex_primitive".into(), json!(report.hex_primitive));
    map.insert("box_primitive".into(), json!(report.box_primitive));
    Ok(Report { text, json: map, degenerate: false })
}

fn curve_text(curve: &CubicCurve) -> String {
    format!("y^2 = {}", curve.rhs().display_with("x"))
}

fn curve_value(curve: &CubicCurve) -> Value {
    let (a, b, c) = curve.coefficients();
    json!({ "a": a.to_string(), "b": b.to_string(), "c": c.to_string() })
}

fn cmd_pade_candidate(curve: &CubicCurve, n: u64) -> Result<Report, Failure> {
    let mut map = Map::new();
    map.insert("command".into(), json!("pade"));
    map.insert("mode".into(), json!("candidate"));
    map.insert("field".into(), json!(field_tag(curve.ctx())));
    map.insert("curve".into(), curve_value(curve));
    map.insert("n".into(), json!(n));
    match abel_candidate(curve, n) {
        Ok(built) => {
            let x_c_text = match built.x_c() {
                Some(v) => v.to_string(),
                None => "infinity".to_string(),
            };
            let text = format!(
                "pade: {} at n = {n} over Q\n  p        {}\n  q        {}\n  norm     {}\n  \
                 x_C      {}\n  is_abel  {}\n",
                curve_text(curve),
                built.p().display_with("x"),
                built.q().display_with("x"),
                built.norm().display_with("x"),
                x_c_text,
                built.is_abel(),
            );
            map.insert("p".into(), poly_value(built.p()));
            map.insert("q".into(), poly_value(built.q()));
            map.insert("norm".into(), poly_value(built.norm()));
            map.insert(
                "x_C".into(),
                built.x_c().map(|v| json!(v.to_string())).unwrap_or(json!("infinity")),
            );
            map.insert("is_abel".into(), json!(built.is_abel()));
            Ok(Report { text, json: map, degenerate: false })
        }
        Err(Error::DegenerateSystem(reason)) => {
            let text = format!(
                "pade: {} at n = {n} over Q\n  degenerate: {reason}\n",
                curve_text(curve),
            );
            map.insert("degenerate".into(), json!(reason));
            Ok(Report { text, json: map, degenerate: true })
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_pade_torsion(curve: &CubicCurve, max: u64) -> Result<Report, Failure> {
    let probe = torsion_order(curve, max)?;
    let order_text = match probe.order {
        Some(k) => k.to_string(),
        None => format!("none found up to {max}"),
    };
    let indeterminate_text = if probe.indeterminate.is_empty() {
        "none".to_string()
    } else {
        probe.indeterminate.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    };
    let text = format!(
        "pade torsion probe: {} up to n = {max} over Q\n  order          {}\n  indeterminate  {}\n",
        curve_text(curve),
        order_text,
        indeterminate_text,
    );
    let mut map = Map::new();
    map.insert("command".into(), json!("pade"));
    map.insert("mode".into(), json!("torsion"));
    map.insert("field".into(), json!(field_tag(curve.ctx())));
    map.insert("curve".into(), curve_value(curve));
    map.insert("max".into(), json!(max));
    map.insert("order".into(), probe.order.map(|k| json!(k)).unwrap_or(Value::Null));
    map.insert("indeterminate".into(), json!(probe.indeterminate));
    Ok(Report { text, json: map, degenerate: false })
}
