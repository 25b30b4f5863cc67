//! Drives the command-line front end in-process: a character table is
//! computed once, written to a cache directory and read back.
//!
//! `cargo run --release --example cli_cache -- [n]`

use saxl_lab::cli::dispatch;

fn run(args: &[&str]) {
    let mut argv = vec!["saxl-lab"];
    argv.extend_from_slice(args);
    let out = dispatch(argv);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    println!("(exit {})", out.code);
}

fn main() {
    let n = std::env::args().nth(1).unwrap_or_else(|| "12".into());
    let dir = std::env::temp_dir().join("saxl-lab-example-cache");
    let dir = dir.to_str().expect("utf-8 temp path");

    run(&["kron", "[3,2]", "[3,2]", "[2,2,1]"]);
    run(&["char", "[4,3,2,1]", "[7,3]"]);
    run(&["--format", "tsv", "counts", "threshold", "--set", "3,7,11,15,19"]);
    for _ in 0..2 {
        let mut argv = vec!["saxl-lab", "--cache-dir", dir, "stats", "zeros", n.as_str()];
        argv.extend(["--values", "1"]);
        let out = dispatch(argv);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).expect("json report");
        println!("zeros at n={n}: {} (table from {})", v["zeros"]["decimal"], v["source"]);
    }
    let file = std::path::Path::new(dir).join(format!("chartable-{n}.bin"));
    match std::fs::metadata(&file) {
        Ok(m) => println!("{} holds {} bytes; a new process loads it instead of recomputing", file.display(), m.len()),
        Err(e) => println!("{}: {e}", file.display()),
    }
}
