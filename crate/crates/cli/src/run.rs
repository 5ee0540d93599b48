//! Executes a parsed script against the engine.

use std::collections::HashMap;
use std::io::Write;
use std::sync::mpsc::{self, RecvTimeoutError};
use std::thread;
use std::time::Duration;

use serde_json::{json, Value as Json};
use syzygy_core::linkage::find_low_degree_sequence;
use syzygy_core::papersuite::{verify_all, CheckReport, Status};
use syzygy_core::*;

use crate::error::{CliError, Result};
use crate::script::{Arg, Call, FieldDecl, Item, Kind, OrderDecl, Script};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECKS_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub field: Option<FieldDecl>,
    pub order: Option<OrderDecl>,
    pub seed: u64,
    pub json: bool,
    pub timeout: Option<Duration>,
}

#[derive(Debug, Clone)]
enum Value {
    Ideal(Ideal),
    Poly(Polynomial),
}

/// The result of one command.
#[derive(Debug)]
pub enum Output {
    Ideal(Ideal),
    Poly(Polynomial),
    Scalar(Json),
    Table { json: Json, text: String },
    Report(CheckReport),
}

#[derive(Clone)]
struct Env {
    ring: Ring,
    vars: HashMap<String, Value>,
    seed: u64,
}

fn type_error(what: &str, arg: &Arg) -> CliError {
    CliError::Type(format!("expected {what}, found `{arg}`"))
}

fn small_int(arg: &Arg) -> Result<u32> {
    match arg {
        Arg::Expr(e) => e.as_int().and_then(|n| u32::try_from(n).ok()),
        Arg::Call(_) => None,
    }
    .ok_or_else(|| type_error("a small nonnegative integer", arg))
}

impl Env {
    fn poly(&self, arg: &Arg) -> Result<Polynomial> {
        match arg {
            Arg::Expr(e) => {
                let lookup = |name: &str| match self.vars.get(name) {
                    Some(Value::Poly(p)) => Some(p.clone()),
                    _ => None,
                };
                Ok(e.eval(&self.ring, &lookup)?)
            }
            Arg::Call(c) => match self.call(c)? {
                Output::Poly(p) => Ok(p),
                _ => Err(type_error("a polynomial", arg)),
            },
        }
    }

    /// Polynomials named by `args`; ideal-valued arguments contribute their
    /// generators.
    fn polys(&self, args: &[Arg]) -> Result<Vec<Polynomial>> {
        let mut out = Vec::new();
        for a in args {
            match self.value(a)? {
                Value::Ideal(i) => out.extend(i.gens().iter().cloned()),
                Value::Poly(p) => out.push(p),
            }
        }
        Ok(out)
    }

    fn value(&self, arg: &Arg) -> Result<Value> {
        match arg {
            Arg::Expr(e) => {
                if let Some(Value::Ideal(i)) = e.as_ident().and_then(|n| self.vars.get(n)) {
                    return Ok(Value::Ideal(i.clone()));
                }
                Ok(Value::Poly(self.poly(arg)?))
            }
            Arg::Call(c) => match self.call(c)? {
                Output::Ideal(i) => Ok(Value::Ideal(i)),
                Output::Poly(p) => Ok(Value::Poly(p)),
                _ => Err(type_error("an ideal or polynomial", arg)),
            },
        }
    }

    fn ideal(&self, arg: &Arg) -> Result<Ideal> {
        match self.value(arg)? {
            Value::Ideal(i) => Ok(i),
            Value::Poly(p) => Ok(Ideal::new(&self.ring, vec![p])?),
        }
    }

    fn fold(&self, args: &[Arg], op: impl Fn(&Ideal, &Ideal) -> syzygy_core::Result<Ideal>) -> Result<Ideal> {
        let mut acc = self.ideal(&args[0])?;
        for a in &args[1..] {
            acc = op(&acc, &self.ideal(a)?)?;
        }
        Ok(acc)
    }

    fn call(&self, c: &Call) -> Result<Output> {
        let a = &c.args;
        let out = match c.name.as_str() {
            "ideal" => Output::Ideal(Ideal::new(&self.ring, self.polys(a)?)?),
            "gb" => {
                let i = self.ideal(&a[0])?;
                Output::Ideal(Ideal::new(&self.ring, i.gb().elements().to_vec())?)
            }
            "nf" => Output::Poly(normal_form(&self.poly(&a[0])?, self.ideal(&a[1])?.gb())?),
            "sum" => Output::Ideal(self.fold(a, Ideal::sum)?),
            "product" => Output::Ideal(self.fold(a, Ideal::product)?),
            "intersect" => Output::Ideal(self.fold(a, Ideal::intersect)?),
            "power" => Output::Ideal(self.ideal(&a[0])?.power(small_int(&a[1])?)?),
            "colon" => Output::Ideal(self.ideal(&a[0])?.colon(&self.ideal(&a[1])?)?),
            "saturate" => Output::Ideal(self.ideal(&a[0])?.saturate(&self.poly(&a[1])?)?),
            "eliminate" => Output::Ideal(self.ideal(&a[0])?.eliminate(small_int(&a[1])? as usize)?),
            "dim" => Output::Scalar(json!(dimension(&self.ideal(&a[0])?))),
            "codim" => Output::Scalar(json!(codim(&self.ideal(&a[0])?))),
            "mult" => Output::Scalar(json!(multiplicity(&self.ideal(&a[0])?)?)),
            "hilbert" => {
                let hs = hilbert(&self.ideal(&a[0])?)?;
                let text = format!(
                    "numerator {:?}, dim {}, multiplicity {}",
                    hs.numerator,
                    hs.dim,
                    hs.multiplicity()
                );
                let mut json = serde_json::to_value(&hs).expect("serializable");
                json["multiplicity"] = json!(hs.multiplicity());
                Output::Table { json, text }
            }
            "regseq" => Output::Scalar(json!(is_regular_sequence(&self.polys(a)?)?)),
            "resolve" => {
                let res = resolve(&self.ideal(&a[0])?)?;
                let b = betti(&res);
                Output::Table {
                    json: json!({ "ranks": res.ranks(), "betti": b }),
                    text: format!("{res}\n{b}"),
                }
            }
            "betti" => {
                let b = betti(&resolve(&self.ideal(&a[0])?)?);
                Output::Table { json: serde_json::to_value(&b).expect("serializable"), text: b.to_string() }
            }
            "pd" => Output::Scalar(json!(pd_quotient(&self.ideal(&a[0])?)?)),
            "minors" => {
                let res = resolve(&self.ideal(&a[0])?)?;
                let i = small_int(&a[1])? as usize;
                let map = i
                    .checked_sub(1)
                    .and_then(|k| res.maps().get(k))
                    .ok_or_else(|| CliError::Type(format!("the resolution has no map {i}")))?;
                Output::Ideal(minors(map, small_int(&a[2])? as usize)?)
            }
            "link" => {
                let i = self.ideal(&a[0])?;
                let z = if a.len() > 1 {
                    self.polys(&a[1..])?
                } else {
                    find_low_degree_sequence(&i, self.seed)?
                };
                Output::Ideal(link(&i, &z)?.linked)
            }
            "unmixed" => Output::Ideal(unmixed_part_with_seed(&self.ideal(&a[0])?, self.seed)?),
            "isunmixed" => {
                let i = self.ideal(&a[0])?;
                Output::Scalar(json!(i.equals(&unmixed_part_with_seed(&i, self.seed)?)?))
            }
            "verify_paper" => {
                let seed = match a.first() {
                    Some(arg) => small_int(arg)? as u64,
                    None => self.seed,
                };
                Output::Report(verify_all(seed, *self.ring.field()))
            }
            other => return Err(CliError::Type(format!("unknown command `{other}`"))),
        };
        Ok(out)
    }

    fn bind(&self, kind: Kind, values: &[Arg]) -> Result<Value> {
        match kind {
            Kind::Poly => Ok(Value::Poly(self.poly(&values[0])?)),
            Kind::Ideal => match values {
                [single @ Arg::Call(_)] => Ok(Value::Ideal(self.ideal(single)?)),
                _ => Ok(Value::Ideal(Ideal::new(&self.ring, self.polys(values)?)?)),
            },
        }
    }
}

fn generators(i: &Ideal) -> Vec<String> {
    if i.is_zero() {
        return Vec::new();
    }
    i.gb().elements().iter().map(|g| g.to_string()).collect()
}

fn report_summary(r: &CheckReport) -> String {
    let mut s = format!(
        "{} checks over {}: {} passed, {} failed, {} skipped",
        r.entries.len(),
        r.field,
        r.count(Status::Pass),
        r.count(Status::Fail),
        r.count(Status::Skipped)
    );
    for e in r.failures() {
        s.push_str(&format!("\n  FAIL {} [{}]: {}", e.check_id, e.anchor, e.detail));
    }
    s
}

/// Text form of a command result, as printed without `--json`.
pub fn render_text(name: &str, out: &Output) -> String {
    match out {
        Output::Ideal(i) => format!("{name} = ({})", generators(i).join(", ")),
        Output::Poly(p) => format!("{name} = {p}"),
        Output::Scalar(v) => format!("{name} = {v}"),
        Output::Table { text, .. } => format!("{name} =\n{text}"),
        Output::Report(r) => format!("{name}: {}", report_summary(r)),
    }
}

/// JSON form of a command result: `command`, `inputs`, `result_kind` and one
/// of `generators`, `value` or `table`, plus `anchors` for reports.
pub fn render_json(call: &Call, out: &Output) -> Json {
    let mut obj = json!({
        "command": call.name,
        "inputs": call.args.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
    });
    match out {
        Output::Ideal(i) => {
            obj["result_kind"] = json!("ideal");
            obj["generators"] = json!(generators(i));
        }
        Output::Poly(p) => {
            obj["result_kind"] = json!("polynomial");
            obj["value"] = json!(p.to_string());
        }
        Output::Scalar(v) => {
            obj["result_kind"] = json!("value");
            obj["value"] = v.clone();
        }
        Output::Table { json, .. } => {
            obj["result_kind"] = json!("table");
            obj["table"] = json.clone();
        }
        Output::Report(r) => {
            let mut anchors: Vec<&str> = r.entries.iter().map(|e| e.anchor.as_str()).collect();
            anchors.sort_unstable();
            anchors.dedup();
            obj["result_kind"] = json!("report");
            obj["value"] = serde_json::to_value(r).expect("serializable");
            obj["anchors"] = json!(anchors);
        }
    }
    obj
}

/// Exit code for a finished identity suite: any failing check gives 1.
pub fn report_exit_code(r: &CheckReport) -> i32 {
    if r.all_passed() {
        EXIT_OK
    } else {
        EXIT_CHECKS_FAILED
    }
}

enum Timed<T> {
    Done(T),
    Expired,
}

fn timed<T: Send + 'static>(limit: Option<Duration>, f: impl FnOnce() -> T + Send + 'static) -> Timed<T> {
    let Some(limit) = limit else {
        return Timed::Done(f());
    };
    let (tx, rx) = mpsc::channel();
    thread::spawn(move || {
        let _ = tx.send(f());
    });
    match rx.recv_timeout(limit) {
        Ok(v) => Timed::Done(v),
        Err(RecvTimeoutError::Timeout) => Timed::Expired,
        Err(RecvTimeoutError::Disconnected) => panic!("command worker terminated without a result"),
    }
}

pub fn build_ring(script: &Script, opts: &Options) -> Result<Ring> {
    let field = opts.field.unwrap_or(script.ring.field).spec()?;
    let order = opts.order.or(script.ring.order).unwrap_or(OrderDecl::GrevLex).order();
    Ok(PolyRing::new(field, &script.ring.vars, order)?)
}

enum Step {
    Bound(String, Value),
    Out(Call, Output),
}

/// Runs every item in order, writing results to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run(script: &Script, opts: &Options, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let ring = match build_ring(script, opts) {
        Ok(r) => r,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_ERROR);
        }
    };
    let mut env = Env { ring, vars: HashMap::new(), seed: opts.seed };
    let mut code = EXIT_OK;
    for (k, item) in script.items.iter().enumerate() {
        let index = k + 1;
        let (snapshot, item_c) = (env.clone(), item.clone());
        let step = timed(opts.timeout, move || -> Result<Step> {
            match item_c {
                Item::Bind { kind, name, values } => Ok(Step::Bound(name, snapshot.bind(kind, &values)?)),
                Item::Command(c) => {
                    let o = snapshot.call(&c)?;
                    Ok(Step::Out(c, o))
                }
            }
        });
        let label = match item {
            Item::Bind { name, .. } => name.clone(),
            Item::Command(c) => c.name.clone(),
        };
        match step {
            Timed::Expired => {
                if opts.json {
                    let obj = json!({ "command": label, "index": index, "result_kind": "skipped", "value": "timeout" });
                    writeln!(out, "{obj}")?;
                } else {
                    writeln!(out, "{label}: skipped/timeout")?;
                }
                writeln!(err, "error: item {index} ({label}) exceeded the time limit")?;
                return Ok(EXIT_ERROR);
            }
            Timed::Done(Err(e)) => {
                if opts.json {
                    let obj = json!({ "command": label, "index": index, "result_kind": "error", "value": e.to_string() });
                    writeln!(out, "{obj}")?;
                }
                writeln!(err, "error in item {index} ({label}): {e}")?;
                return Ok(EXIT_ERROR);
            }
            Timed::Done(Ok(Step::Bound(name, v))) => {
                env.vars.insert(name, v);
            }
            Timed::Done(Ok(Step::Out(c, o))) => {
                if let Output::Report(r) = &o {
                    code = code.max(report_exit_code(r));
                }
                if opts.json {
                    writeln!(out, "{}", render_json(&c, &o))?;
                } else {
                    writeln!(out, "{}", render_text(&c.name, &o))?;
                }
            }
        }
    }
    Ok(code)
}
