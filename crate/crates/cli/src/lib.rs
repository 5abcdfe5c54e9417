//! Batch front end for `sdforge-core`: the `.sdf` script language, command
//! dispatch, and text/JSON result documents.
//!
//! ```text
//! var x, y;
//! ideal V = { y - x^2 };
//! point p = (x = 1, y = 1);
//! > tau V --level 2;
//! > jet V p --level 2;
//! ```

pub mod commands;
pub mod session;
pub mod syntax;

use clap::Parser;
use serde_json::{json, Value};

use sdforge_core::Budget;

pub use commands::{Outcome, Status};
pub use session::Session;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "sdforge",
    version,
    about = "Exact difference-differential algebra in batch",
    after_help = "Commands: parse, run, reduce, scan, gbasis, member, eliminate, dim, tau, nfcheck, dominant, \
                  axiomcheck, jet, jetsep, arc, tangent, ord-add, ord-nsum, fr, frwitness, lascar, realize, \
                  seqcheck, ld, kernel, onebased.\nA trailing operand ending in .sdf names the script.\n\
                  Exit status: 0 ok, 1 verdict false, 2 error, 3 inconclusive."
)]
pub struct Cli {
    /// Command to run.
    pub command: String,
    /// Command operands, optionally followed by a `.sdf` script.
    pub operands: Vec<String>,
    /// Emit the machine-readable JSON document.
    #[arg(long)]
    pub json: bool,
    /// Reduction-step budget for Groebner computations.
    #[arg(long, env = "SDFORGE_BUDGET")]
    pub budget: Option<u64>,
    /// Closure depth for `scan` and the advisory scan of `axiomcheck`.
    #[arg(long)]
    pub depth: Option<u32>,
    /// Monomial order override.
    #[arg(long, value_parser = ["lex", "grevlex"])]
    pub order: Option<String>,
    /// Prolongation, jet or arc order.
    #[arg(long)]
    pub level: Option<u32>,
}

impl Cli {
    fn options(&self) -> commands::Options {
        commands::Options {
            budget: self.budget.map(Budget::new).unwrap_or_default(),
            depth: self.depth,
            order: self.order.as_deref().map(|o| o.parse().expect("validated by clap")),
            level: self.level,
        }
    }

    /// Splits off a trailing `.sdf` operand.
    fn split_script(&self) -> (Vec<String>, Option<String>) {
        let mut ops = self.operands.clone();
        let script = match ops.last() {
            Some(s) if s.ends_with(".sdf") => ops.pop(),
            _ => None,
        };
        (ops, script)
    }
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn document(command: &str, o: &Outcome) -> Value {
    json!({ "command": command, "status": o.status.as_str(), "result": o.result })
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn finish(json_mode: bool, command: &str, o: Outcome) -> Invocation {
    if json_mode {
        return Invocation {
            stdout: render_json(&document(command, &o)),
            stderr: String::new(),
            code: o.status.code(),
        };
    }
    let (stdout, stderr) = if o.status == Status::Error {
        (String::new(), format!("{}\n", o.text.trim_end()))
    } else {
        (o.text, String::new())
    };
    Invocation {
        stdout,
        stderr,
        code: o.status.code(),
    }
}

/// Executes every `>` command line of a script in order. The combined
/// status is the most severe one: error, inconclusive, false, ok.
pub fn run_script(session: &Session, base: &Cli) -> (Vec<(String, Outcome)>, Status) {
    let mut results = Vec::new();
    let mut worst = Status::Ok;
    for (line, pos) in &session.commands {
        let outcome = match syntax::split_words(line, *pos) {
            Err(d) => Outcome::error(d.to_string()),
            Ok(words) => {
                let argv = std::iter::once("sdforge".to_string()).chain(words);
                match Cli::try_parse_from(argv) {
                    Err(e) => Outcome::error(format!("{pos}: {}", e.to_string().lines().next().unwrap_or(""))),
                    Ok(mut cli) => {
                        if cli.budget.is_none() {
                            cli.budget = base.budget;
                        }
                        let (ops, script) = cli.split_script();
                        if script.is_some() {
                            Outcome::error(format!("{pos}: script operands are not allowed inside a script"))
                        } else {
                            commands::execute(session, &cli.command, &ops, &cli.options())
                        }
                    }
                }
            }
        };
        worst = worst.max(outcome.status);
        results.push((line.clone(), outcome));
    }
    (results, worst)
}

/// Runs the tool on `args` (without the program name).
pub fn invoke<I, S>(args: I) -> Invocation
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("sdforge".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Invocation { stdout: rendered, stderr: String::new(), code }
            } else {
                Invocation { stdout: String::new(), stderr: rendered, code }
            };
        }
    };
    let (ops, script) = cli.split_script();
    let session = match &script {
        None => Session::implicit(),
        Some(path) => {
            let loaded = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {path}: {e}"))
                .and_then(|src| Session::from_source(&src).map_err(|d| format!("{path}: {d}")));
            match loaded {
                Ok(s) => s,
                Err(msg) => return finish(cli.json, &cli.command, Outcome::error(msg)),
            }
        }
    };
    if cli.command != "run" {
        let o = commands::execute(&session, &cli.command, &ops, &cli.options());
        return finish(cli.json, &cli.command, o);
    }
    if script.is_none() || !ops.is_empty() {
        return finish(cli.json, "run", Outcome::error("usage: run <script.sdf>"));
    }
    let (results, worst) = run_script(&session, &cli);
    let (stdout, stderr) = if cli.json {
        let docs: Vec<Value> = results
            .iter()
            .map(|(line, o)| json!({ "command": line, "status": o.status.as_str(), "result": o.result }))
            .collect();
        (render_json(&json!({ "results": docs })), String::new())
    } else {
        let mut out = String::new();
        let mut err = String::new();
        for (line, o) in &results {
            out.push_str(&format!("> {line}\n"));
            if o.status == Status::Error {
                out.push_str("error (see stderr)\n");
                err.push_str(&format!("{}\n", o.text.trim_end()));
            } else {
                out.push_str(&o.text);
            }
        }
        (out, err)
    };
    Invocation {
        stdout,
        stderr,
        code: worst.code(),
    }
}
