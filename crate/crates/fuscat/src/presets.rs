//! Resolving `--subgroup`: a preset name, a JSON array of permutations, or
//! cycle strings separated by `;`.

use std::collections::BTreeMap;

use fuscat_core::group::FiniteGroup;
use fuscat_core::Subgroup;

use crate::error::{input, CliResult};
use crate::formats::{elements, PermSpec};

pub const PRESETS: [&str; 5] = ["S", "Z", "C4", "V1", "V2"];

/// `s` is the Sylow group as a group of its own, `lattice` its subgroups in
/// canonical order, `p` the prime. Presets from the input file win over the
/// built-in ones.
pub fn resolve(
    arg: &str,
    s: &FiniteGroup,
    lattice: &[Subgroup],
    p: u64,
    presets: &BTreeMap<String, Vec<PermSpec>>,
) -> CliResult<Subgroup> {
    let arg = arg.trim();
    if let Some(specs) = presets.get(arg) {
        return generated(s, specs, &format!("preset {arg}"));
    }
    if arg.starts_with('[') {
        let specs: Vec<PermSpec> = serde_json::from_str(arg).map_err(|e| input(format!("--subgroup: {e}")))?;
        return generated(s, &specs, "--subgroup");
    }
    if arg.starts_with('(') {
        let specs: Vec<PermSpec> = arg.split(';').map(|c| PermSpec::Cycles(c.trim().to_string())).collect();
        return generated(s, &specs, "--subgroup");
    }
    builtin(arg, s, lattice, p).ok_or_else(|| {
        let mut known: Vec<&str> = presets.keys().map(String::as_str).collect();
        known.extend(PRESETS.iter().filter(|k| !presets.contains_key(**k)));
        input(format!(
            "unknown subgroup {arg:?}; expected one of {} or generator permutations",
            known.join(", ")
        ))
    })
}

fn generated(s: &FiniteGroup, specs: &[PermSpec], what: &str) -> CliResult<Subgroup> {
    let gens = elements(s, specs, what)?;
    Ok(s.close(&gens))
}

/// `S`, its centre `Z`, the first cyclic subgroup of order 4, and the
/// first and second elementary abelian subgroups of order `p²`.
fn builtin(name: &str, s: &FiniteGroup, lattice: &[Subgroup], p: u64) -> Option<Subgroup> {
    let pp = (p * p) as usize;
    let elementary = |h: &&Subgroup| h.order() == pp && s.exponent(h) as u64 == p;
    match name {
        "S" => Some(s.whole()),
        "Z" => Some(s.center(&s.whole())),
        "C4" => lattice.iter().find(|h| h.order() == 4 && s.exponent(h) == 4).cloned(),
        "V1" => lattice.iter().find(elementary).cloned(),
        "V2" => lattice.iter().filter(elementary).nth(1).cloned(),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fuscat_core::{catalog, Limits};

    fn d8() -> (FiniteGroup, Vec<Subgroup>) {
        let g = catalog::d8();
        let lattice = g.subgroup_lattice(&Limits::default()).unwrap();
        (g, lattice)
    }

    #[test]
    fn builtin_presets() {
        let (g, lat) = d8();
        let none = BTreeMap::new();
        let get = |name: &str| resolve(name, &g, &lat, 2, &none).unwrap();
        assert_eq!(get("S").order(), 8);
        assert_eq!(get("Z").order(), 2);
        assert_eq!(g.exponent(&get("C4")), 4);
        let (v1, v2) = (get("V1"), get("V2"));
        assert_ne!(v1, v2);
        assert!(v1.order() == 4 && g.exponent(&v1) == 2 && g.exponent(&v2) == 2);
        assert!(resolve("V3", &g, &lat, 2, &none).is_err());
    }

    #[test]
    fn explicit_forms_agree() {
        let (g, lat) = d8();
        let none = BTreeMap::new();
        let a = resolve("(1 2 3 4)", &g, &lat, 2, &none).unwrap();
        let b = resolve("[[2, 3, 4, 1]]", &g, &lat, 2, &none).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, resolve("C4", &g, &lat, 2, &none).unwrap());
        let file = BTreeMap::from([("C4".to_string(), vec![PermSpec::Cycles("(1 3)".into())])]);
        assert_eq!(resolve("C4", &g, &lat, 2, &file).unwrap().order(), 2);
    }
}
