use std::process::Command;

fn sdforge(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_sdforge"))
        .args(args)
        .env_remove("SDFORGE_BUDGET")
        .output()
        .unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

fn script(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("sdforge-bin-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn tau_prints_three_generators() {
    let p = script("parabola.sdf", "var x, y; ideal V = { y - x^2 };");
    let (out, code) = sdforge(&["tau", "--level", "2", "V", &p]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "-x^2 + y\n-2*Y(x,1)*x + Y(y,1)\n-2*Y(x,2)*x - 2*Y(x,1)^2 + Y(y,2)\n"
    );
}

#[test]
fn foundation_rank_of_sequence() {
    assert_eq!(sdforge(&["fr", "inf,5,3 | 3"]), ("w*4 + 2\n".into(), 0));
}

#[test]
fn cyclotomic_verdict_exits_one() {
    let (out, code) = sdforge(&["onebased", "T^2+T+1"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("false\n") && out.contains("Phi_3"), "{out}");
    let (json, _) = sdforge(&["onebased", "T^2+T+1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["result"]["witnesses"], serde_json::json!(["3"]));
    assert_eq!(v["status"], "false");
}

#[test]
fn exit_statuses() {
    let bad = script("bad.sdf", "ideal I = { y - };");
    assert_eq!(sdforge(&["parse", &bad]).1, 2);
    assert_eq!(sdforge(&["nosuch"]).1, 2);
    let (_, code) = sdforge(&["gbasis", "{x+y+z, x*y+y*z+z*x, x*y*z-1}", "--budget", "3"]);
    assert_eq!(code, 3);
    let mixed = script("mixed.sdf", "var x;\n> onebased \"T-1\";\n> fr \"| 2\";\n");
    assert_eq!(sdforge(&["run", &mixed]).1, 1);
    let worse = script("worse.sdf", "var x;\n> onebased \"T-1\";\n> fr \"1,2 | 0\";\n");
    assert_eq!(sdforge(&["run", &worse]).1, 2);
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_sdforge"))
        .args(["gbasis", "{x+y+z, x*y+y*z+z*x, x*y*z-1}"])
        .env("SDFORGE_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
