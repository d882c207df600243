//! Report envelope: every command prints one JSON document embedding the
//! tool version and a content hash of each input file, so identical inputs
//! produce byte-identical output. serde_json sorts object keys (BTreeMap),
//! which fixes the key order canonically.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

fn hash_file(path: &Path) -> Result<String> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(sha256_hex(&bytes))
}

/// Inputs in argument order, each as {path, sha256}.
pub fn inputs_json(paths: &[&Path]) -> Result<Value> {
    let mut list = Vec::with_capacity(paths.len());
    for p in paths {
        list.push(json!({
            "path": p.display().to_string(),
            "sha256": hash_file(p)?,
        }));
    }
    Ok(Value::Array(list))
}

/// Print one line; exit quietly when the consumer closed the pipe.
pub fn print_line(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{s}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}

/// Wrap a command payload in the envelope and print it.
pub fn emit(command: &str, inputs: Value, payload: Value) -> Result<()> {
    let report = json!({
        "tool": "hopfi",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "inputs": inputs,
        "result": payload,
    });
    print_line(&serde_json::to_string_pretty(&report)?);
    Ok(())
}
