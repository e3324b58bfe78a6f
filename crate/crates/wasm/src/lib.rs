//! Browser bindings. Each operation takes a problem in the CLI's JSON format
//! and returns `{"exit_code", "report" | "error"}` as a JSON string, so the
//! page and the command line always agree.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Bundled problems offered by the page, as `(name, command, json)`.
pub const EXAMPLES: &[(&str, &str, &str)] = &[
    ("k[x]/x² trivial modules", "compare", include_str!("../../cli/problems/kx2_compare.json")),
    ("M₂(F₅) column/row", "compare", include_str!("../../cli/problems/m2_compare.json")),
    ("k × k characters over Q", "compare", include_str!("../../cli/problems/kxk_compare.json")),
    ("HH of k[x]/x², regular", "hochschild", include_str!("../../cli/problems/kx2_hochschild_regular.json")),
    ("HH of M₂(F₅)", "hochschild", include_str!("../../cli/problems/m2_hochschild.json")),
    ("Z₂ tower over F₂", "tower", include_str!("../../cli/problems/zp_tower.json")),
    ("Z₃ tower over F₃", "tower", include_str!("../../cli/problems/z3_tower.json")),
];

fn invoke(command: &str, problem: &str, max_degree: Option<u32>) -> String {
    let mut args = vec!["cotorlab".to_string(), command.to_string(), "--json".to_string()];
    if let Some(n) = max_degree {
        args.push(format!("--max-degree={n}"));
    }
    args.push("problem.json".to_string());
    let out = cotorlab_cli::run_source(args, problem);
    let body = match serde_json::from_str::<Value>(&out.stdout) {
        Ok(report) => json!({"exit_code": out.code, "report": report}),
        Err(_) => json!({"exit_code": out.code, "error": out.stderr.trim()}),
    };
    body.to_string()
}

/// Compares Cotor over the dual coalgebra with Hochschild cohomology.
#[wasm_bindgen]
pub fn compare(problem: &str, max_degree: Option<u32>) -> String {
    invoke("compare", problem, max_degree)
}

/// Hochschild cohomology dimensions of the task's bimodule.
#[wasm_bindgen]
pub fn hochschild(problem: &str, max_degree: Option<u32>) -> String {
    invoke("hochschild", problem, max_degree)
}

/// Level dimensions and stable values of a tower's cohomology.
#[wasm_bindgen]
pub fn tower(problem: &str, max_degree: Option<u32>) -> String {
    invoke("tower", problem, max_degree)
}

/// The bundled examples as a JSON array of `{name, command, problem}`.
#[wasm_bindgen]
pub fn examples() -> String {
    let list: Vec<Value> = EXAMPLES.iter().map(|(n, c, p)| json!({"name": n, "command": c, "problem": p})).collect();
    Value::Array(list).to_string()
}
