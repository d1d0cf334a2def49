//! Drive the `rankcode` command in-process: new code, encode, corrupt, decode.

use rankcode::cli::run;

fn call(args: &[&str], input: &str) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rankcode").chain(args.iter().copied());
    let code = run(argv.map(std::ffi::OsString::from), &mut input.as_bytes(), &mut out, &mut err);
    eprint!("{}", String::from_utf8_lossy(&err));
    (code, String::from_utf8(out).unwrap())
}

fn main() {
    let dir = std::env::temp_dir().join("rankcode-example");
    std::fs::create_dir_all(&dir).unwrap();
    let spec = dir.join("spec.json");
    let spec = spec.to_str().unwrap();

    let (_, json) = call(&["code", "new", "--q", "3", "--n", "4", "--k", "2", "--r", "3", "--eta", "random-valid", "--seed", "7"], "");
    std::fs::write(spec, &json).unwrap();
    println!("spec: {}", json.trim());

    let (_, word) = call(&["encode", "--spec", spec, "--hex"], "1000:0100");
    let (_, noisy) = call(&["corrupt", "--spec", spec, "-t", "1", "--seed", "3", "--hex"], &word);
    let (status, decoded) = call(&["decode", "--spec", spec, "--hex"], &noisy);
    println!("codeword {} -> received {} -> decoded {} (exit {status})", word.trim(), noisy.trim(), decoded.trim());
}
