#![allow(dead_code)]

use std::process::Command;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn apolar(args: &[&str]) -> Run {
    apolar_env(args, &[])
}

pub fn apolar_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_apolar"));
    cmd.args(args).env_remove("APOLAR_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

pub fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.push("--json");
    let r = apolar(&all);
    assert!(r.code == 0 || r.code == 1, "{args:?} exited {}: {}", r.code, r.stderr);
    serde_json::from_str(&r.stdout).expect("valid JSON")
}
