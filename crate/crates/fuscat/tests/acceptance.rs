//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Every tolerance is exact.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

use fuscat::formats;
use fuscat_core::orbit::{GraphMode, OrbitContext};
use fuscat_core::theorems::construct_theorem_c;
use fuscat_core::tree::{induce_fusion_tree, FusionTree, RootedCompletion};
use fuscat_core::{FusionSystem, Limits};

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn arg(name: &str) -> String {
    data(name).display().to_string()
}

/// Runs the real binary so repeated runs are separate processes.
fn fuscat(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fuscat"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

fn fuscat_json(args: &[&str]) -> Result<(i32, Value), String> {
    let (code, out) = fuscat(args);
    let v = serde_json::from_str(&out).map_err(|e| format!("{args:?}: {e}"))?;
    Ok((code, v))
}

fn timed<T>(limit: Duration, what: &str, f: impl FnOnce() -> T) -> Result<T, String> {
    let t = Instant::now();
    let r = f();
    let dt = t.elapsed();
    if dt > limit {
        return Err(format!("{what} took {dt:?}, limit {limit:?}"));
    }
    Ok(r)
}

fn twisted(lim: &Limits) -> (FusionTree, RootedCompletion) {
    let inp = formats::load_tree(&data("ex36.json"), None, lim).expect("tree file loads");
    let ft = induce_fusion_tree(&inp.groups, inp.p, lim).expect("tree induces");
    let c = ft.completion(lim).expect("(H) holds");
    (ft, c)
}

const BATTERY: [(&str, &str); 6] = [
    ("sym4.json", "2"),
    ("sym4.json", "3"),
    ("sym3.json", "3"),
    ("a4.json", "2"),
    ("d8.json", "2"),
    ("psl32.json", "2"),
];

fn saturation_battery() -> Check {
    for (file, p) in BATTERY {
        let limit = Duration::from_secs(if file == "psl32.json" { 60 } else { 10 });
        let (code, v) = timed(limit, file, || {
            fuscat_json(&["saturation", "--group", &arg(file), "--p", p])
        })??;
        ensure!(code == 0 && v["saturated"] == true, "{file} at p = {p}: exit {code}");
    }
    let (code, v) = timed(Duration::from_secs(10), "outer", || {
        fuscat_json(&["saturation", "--group", &arg("d8_outer.json")])
    })??;
    let w = &v["failures"][0];
    ensure!(code == 1 && v["saturated"] == false, "outer system: exit {code}");
    ensure!(
        w.is_object() && w["rechecked"] == true,
        "outer system: no confirmed witness"
    );
    Ok(format!("6 saturated, outer system rejected by axiom {}", w["axiom"]))
}

fn twisted_end_to_end() -> Check {
    let (code, v) = timed(Duration::from_secs(300), "tree-completion", || {
        fuscat_json(&["tree-completion", "--tree", &arg("ex36.json")])
    })??;
    ensure!(code == 0, "exit {code}");
    ensure!(v["hypothesis_h"]["holds"] == true, "(H) fails");
    let a = &v["theorem_a"];
    ensure!(a["embeddings_searched"] == true, "embeddings were not searched");
    ensure!(
        a["group_order"] == 168 && a["sylow"] == true,
        "candidate is not PSL3(2) with Sylow image"
    );
    ensure!(a["fusion_equal"] == true, "F_T differs from the PSL3(2) system");
    Ok(format!(
        "F_T has {} morphisms and equals F_S(PSL3(2))",
        v["completion"]["system"]["morphisms"]
    ))
}

fn rep_counts() -> Check {
    for (i, name) in ["V1", "V2"].iter().enumerate() {
        let (code, v) = fuscat_json(&[
            "orbit-graph",
            "--tree",
            &arg("ex36.json"),
            "--p",
            "2",
            "--subgroup",
            name,
        ])?;
        ensure!(code == 0, "{name}: exit {code}");
        let g = &v["graph"];
        let count = |site: &str| {
            g["sites"]
                .as_array()
                .unwrap()
                .iter()
                .find(|s| s["site"] == site)
                .map(|s| s["classes"].as_u64().unwrap())
        };
        let (own, other) = if i == 0 { ("v1", "v2") } else { ("v2", "v1") };
        ensure!(count("e") == Some(3), "{name}: Rep(-, F(e)) = {:?}", count("e"));
        ensure!(count(own) == Some(1), "{name}: Rep(-, F({own})) = {:?}", count(own));
        ensure!(
            count(other) == Some(3),
            "{name}: Rep(-, F({other})) = {:?}",
            count(other)
        );
        let mut degree = std::collections::BTreeMap::new();
        for e in g["edges"].as_array().unwrap() {
            for end in e["ends"].as_array().unwrap() {
                *degree.entry(end.as_str().unwrap().to_string()).or_insert(0) += 1;
            }
        }
        let mut degs: Vec<i32> = degree.values().copied().collect();
        degs.sort_unstable();
        ensure!(degs == [1, 1, 1, 3], "{name}: degrees {degs:?} are not a K_(1,3) star");
        ensure!(g["is_tree"] == true, "{name}: not a tree");
    }
    Ok("V1 and V2 give K_(1,3) stars with counts 3 / 1 / 3".into())
}

fn theorem_b() -> Check {
    let (code, v) = fuscat_json(&["theorem-b", "--tree", &arg("ex36.json")])?;
    ensure!(v["hypothesis_a"] == true, "hypothesis (a) fails");
    ensure!(v["hypothesis_b"] == true, "hypothesis (b) fails");
    ensure!(v["saturated"] == true, "completion not saturated");
    ensure!(v["consistent"] == true, "hypotheses and saturation disagree");
    ensure!(code == 0, "exit {code}");
    Ok(format!(
        "{} centric checks, {} orbit-tree checks",
        v["condition_a"].as_array().unwrap().len(),
        v["condition_b"].as_array().unwrap().len()
    ))
}

fn theorem_c(lim: &Limits) -> Check {
    let inp = formats::load_theorem_c(&data("d8_klein.json"), lim).map_err(|e| e.to_string())?;
    let s = inp.spec.f0.group().clone();
    let whole = s.whole();
    let trivial = FusionSystem::of_group(&s, &whole, 2, lim).map_err(|e| e.to_string())?;
    ensure!(
        s.order() == 8 && s.center(&whole).order() == 2 && s.exponent(&whole) == 4,
        "S is not D8"
    );
    ensure!(
        inp.spec.f0.equals(&trivial).unwrap(),
        "F0 is not the trivial system F_S(S)"
    );

    let (code, v) = fuscat_json(&["theorem-c", "--spec", &arg("d8_klein.json")])?;
    ensure!(code == 0, "exit {code}");
    let targets = v["targets"].as_array().unwrap();
    ensure!(targets.len() == 2, "{} targets", targets.len());
    let mut qs = Vec::new();
    for (t, spec) in targets.iter().zip(&inp.spec.targets) {
        // Delta has order 6 inside Aut(Q) = S3, so it is all of S3.
        ensure!(
            spec.q.order() == 4 && s.exponent(&spec.q) == 2,
            "a target is not a Klein four"
        );
        ensure!(t["delta_order"] == 6, "Delta has order {}", t["delta_order"]);
        ensure!(
            t["strongly_p_embedded"] == true && t["fully_normalised"] == true,
            "target checks fail"
        );
        qs.push(spec.q.clone());
    }
    ensure!(qs[0] != qs[1], "the targets coincide");
    ensure!(
        v["hypotheses_hold"] == true && v["contains_f0"] == true,
        "construction checks fail"
    );
    ensure!(v["saturated"] == true, "F is not saturated");
    let cmp = v["comparisons"].as_array().unwrap();
    ensure!(cmp[0]["equal"] == true, "F differs from F_T");
    ensure!(cmp[1]["isomorphic"] == true, "F is not the PSL3(2) system");

    let (code, v) = fuscat_json(&["theorem-c", "--spec", &arg("c4_negative.json")])?;
    ensure!(code == 1, "negative control: exit {code}");
    ensure!(
        v["rejection"]["target"] == 0 && v["targets"][0]["strongly_p_embedded"] == false,
        "negative control rejected for the wrong reason: {}",
        v["rejection"]
    );
    Ok("F = F_T, saturated; C4 rejected as not strongly 2-embedded".into())
}

fn phi_on_all_subgroups(lim: &Limits) -> Check {
    let (ft, c) = twisted(lim);
    let ctx = OrbitContext::new(&ft, &c, lim);
    let subs = c.system.subgroups();
    ensure!(subs.len() == 10, "{} subgroups", subs.len());
    for p in subs {
        let phi = ctx.phi_p_check(p).map_err(|e| e.to_string())?;
        ensure!(phi.holds(), "phi fails on a subgroup of order {}: {phi:?}", p.order());
        let comp = ctx.component_of_inclusion(p).map_err(|e| e.to_string())?;
        let restricted = ctx
            .build_rep_graph(p, GraphMode::Restricted)
            .map_err(|e| e.to_string())?;
        ensure!(
            comp.same_labels(&restricted),
            "component differs on a subgroup of order {}",
            p.order()
        );
    }
    Ok("10 of 10 subgroups".into())
}

fn trivial_edges(lim: &Limits) -> Check {
    let (ft, _) = twisted(lim);
    let trivial = ft.with_trivial_edges(lim).map_err(|e| e.to_string())?;
    let c = trivial.completion(lim).map_err(|e| e.to_string())?;
    let ctx = OrbitContext::new(&trivial, &c, lim);
    let records = ctx.restriction_fixed_point_check().map_err(|e| e.to_string())?;
    ensure!(!records.is_empty(), "no pairs P normal in Q were checked");
    for r in &records {
        ensure!(r.equal, "image differs from the fixed subgraph: {r:?}");
    }
    Ok(format!("{} pairs", records.len()))
}

fn structural(lim: &Limits) -> Check {
    let mut systems: Vec<(String, FusionSystem)> = Vec::new();
    for (file, p) in BATTERY {
        let inp = formats::load_system(&data(file), Some(p.parse().unwrap()), lim).map_err(|e| e.to_string())?;
        systems.push((format!("{file} p={p}"), inp.system));
    }
    let (_, c) = twisted(lim);
    systems.push(("F_T".into(), c.system));
    let inp = formats::load_theorem_c(&data("d8_klein.json"), lim).map_err(|e| e.to_string())?;
    let rep = construct_theorem_c(&inp.spec, lim).map_err(|e| e.to_string())?;
    systems.push(("constructed F".into(), rep.system.ok_or("no constructed system")?));
    let mut literal = 0;
    for (name, f) in &systems {
        let r = f.structural_checks(lim).map_err(|e| e.to_string())?;
        ensure!(r.centric_family.saturated, "{name} is not saturated");
        ensure!(r.centraliser_join_not_centric.is_empty(), "{name}: centric closure (a)");
        ensure!(r.overgroup_not_centric.is_empty(), "{name}: centric closure (b)");
        ensure!(r.alperin_regenerates, "{name}: Alperin family does not regenerate F");
        ensure!(
            r.centric_family.consistent(),
            "{name}: centric-family check inconsistent"
        );
        ensure!(
            r.unsaturated_normalisers.is_empty(),
            "{name}: an N_F(Q) is not saturated"
        );
        ensure!(
            r.normal_outside_radical.is_empty(),
            "{name}: a normal subgroup misses a centric radical"
        );
        ensure!(r.holds(), "{name}: {r:?}");
        literal += r.containment_only_not_normal.len();
    }
    println!("  info: {literal} subgroups lie in every essential without being normal (containment alone)");
    Ok(format!("{} systems", systems.len()))
}

const AMALGAM_ARGS: [&str; 8] = [
    "--max-len",
    "4",
    "--chain-len",
    "3",
    "--samples",
    "10000",
    "--seed",
    "7",
];

fn amalgam_args(jobs: &str) -> Vec<String> {
    let mut a: Vec<String> = ["amalgam-check", "--tree", &arg("ex36.json")]
        .map(String::from)
        .to_vec();
    a.extend(AMALGAM_ARGS.map(String::from));
    a.extend(["--jobs".to_string(), jobs.to_string()]);
    a
}

fn amalgam() -> Check {
    let args = amalgam_args("1");
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let (code, v) = timed(Duration::from_secs(300), "amalgam-check", || fuscat_json(&args))??;
    ensure!(
        v["alternating"]["holds"] == true,
        "alternating words: {}",
        v["alternating"]["failure"]
    );
    ensure!(
        v["chain"]["subgroups"] == 10,
        "chain covered {} subgroups",
        v["chain"]["subgroups"]
    );
    ensure!(
        v["chain"]["holds"] == true,
        "conjugation chain: {}",
        v["chain"]["failure"]
    );
    ensure!(
        v["sample"]["pairs"] == 10000 && v["sample"]["holds"] == true,
        "multiplicativity fails"
    );
    ensure!(code == 0, "exit {code}");
    println!(
        "  info: {} chain cases have the last group outside C (allowed by the exemption); {} exempt",
        v["chain"]["last_outside_c"], v["chain"]["last_exempt"]
    );
    Ok(format!(
        "{} words, {} chains, {} pairs",
        v["alternating"]["words"], v["chain"]["checked"], v["sample"]["pairs"]
    ))
}

fn determinism() -> Check {
    let ex = arg("ex36.json");
    let mut runs: Vec<Vec<String>> = vec![
        vec!["tree-completion".into(), "--tree".into(), ex.clone()],
        vec![
            "orbit-graph".into(),
            "--tree".into(),
            ex.clone(),
            "--subgroup".into(),
            "V1".into(),
        ],
        vec![
            "orbit-graph".into(),
            "--tree".into(),
            ex.clone(),
            "--subgroup".into(),
            "V2".into(),
        ],
        vec![
            "orbit-graph".into(),
            "--tree".into(),
            ex,
            "--subgroup".into(),
            "V1".into(),
            "--format".into(),
            "dot".into(),
        ],
    ];
    for r in runs.iter_mut() {
        r.extend(["--jobs".into(), "1".into()]);
    }
    runs.push(amalgam_args("1"));
    for r in &runs {
        let one: Vec<&str> = r.iter().map(String::as_str).collect();
        let mut wide = one.clone();
        *wide.last_mut().unwrap() = "4";
        let a = fuscat(&one);
        let b = fuscat(&one);
        let c = fuscat(&wide);
        ensure!(a == b, "{}: two runs differ", one[0]);
        ensure!(a == c, "{}: --jobs 1 and --jobs 4 differ", one[0]);
    }
    Ok(format!("{} reports, 3 runs each", runs.len()))
}

fn main() {
    let lim = Limits::default();
    let criteria: Vec<Criterion> = vec![
        ("saturation battery", Box::new(saturation_battery)),
        ("twisted Sym(4) amalgam end to end", Box::new(twisted_end_to_end)),
        ("representation counts", Box::new(rep_counts)),
        ("tree hypotheses vs saturation", Box::new(theorem_b)),
        ("extension construction", Box::new(|| theorem_c(&lim))),
        (
            "orbit components vs completion classes",
            Box::new(|| phi_on_all_subgroups(&lim)),
        ),
        ("trivial-edge restriction images", Box::new(|| trivial_edges(&lim))),
        ("structural properties", Box::new(|| structural(&lim))),
        ("amalgam normal forms", Box::new(amalgam)),
        ("determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let dt = t.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({dt:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({dt:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
