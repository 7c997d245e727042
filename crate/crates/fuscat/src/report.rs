//! Serializable report pieces shared by the commands. Permutations are
//! printed in 1-based cycle notation; field order is declaration order.

use rayon::prelude::*;
use serde::Serialize;

use fuscat_core::fusion::SubgroupStatus;
use fuscat_core::group::FiniteGroup;
use fuscat_core::{FusionSystem, GroupMap, Limits, Subgroup};

use crate::error::CliResult;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SubgroupOut {
    pub order: usize,
    pub generators: Vec<String>,
}

pub fn subgroup(g: &FiniteGroup, h: &Subgroup) -> SubgroupOut {
    SubgroupOut {
        order: h.order(),
        generators: g.generators_of(h).iter().map(|&x| cycles(g, x)).collect(),
    }
}

pub fn cycles(g: &FiniteGroup, x: u32) -> String {
    g.element(x).cycle_string()
}

/// A map on a subgroup, given by the images of the subgroup's generators.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct MapOut {
    pub generators: Vec<String>,
    pub images: Vec<String>,
}

/// `table[k]` is the image of member `k` of `dom`; both ends live in `g`.
pub fn table_out(g: &FiniteGroup, dom: &Subgroup, table: &[u32]) -> MapOut {
    let gens = g.generators_of(dom);
    MapOut {
        generators: gens.iter().map(|&x| cycles(g, x)).collect(),
        images: gens
            .iter()
            .map(|&x| cycles(g, table[dom.position(x).expect("generator in domain")]))
            .collect(),
    }
}

pub fn map_out(g: &FiniteGroup, m: &GroupMap) -> MapOut {
    table_out(g, m.domain(), m.images())
}

/// One row of the per-class status table: the fully normalised
/// representative of an F-class and its local flags.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct StatusRow {
    pub representative: SubgroupOut,
    pub class_size: usize,
    pub fully_normalised: bool,
    pub fully_centralised: bool,
    pub fully_automised: bool,
    pub centric: bool,
    pub radical: bool,
    pub essential: bool,
    pub aut_f_order: usize,
    pub out_f_order: usize,
}

fn row(g: &FiniteGroup, st: &SubgroupStatus) -> StatusRow {
    StatusRow {
        representative: subgroup(g, &st.subgroup),
        class_size: st.f_class.len(),
        fully_normalised: st.fully_normalised,
        fully_centralised: st.fully_centralised,
        fully_automised: st.fully_automised,
        centric: st.centric,
        radical: st.radical,
        essential: st.essential,
        aut_f_order: st.aut_f_order,
        out_f_order: st.out_f_order,
    }
}

/// The status table, one row per F-class in canonical class order.
pub fn status_table(f: &FusionSystem, limits: &Limits) -> CliResult<Vec<StatusRow>> {
    let classes = f.classes();
    let rows: Vec<fuscat_core::Result<StatusRow>> = classes
        .par_iter()
        .map(|class| {
            let rep = f.fully_normalised_representative(&class[0])?;
            Ok(row(f.group(), &f.status(&rep, limits)?))
        })
        .collect();
    Ok(rows.into_iter().collect::<fuscat_core::Result<Vec<_>>>()?)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct NormalOut {
    pub o_p: SubgroupOut,
    pub constrained: bool,
    pub normal_subgroups: Vec<SubgroupOut>,
}

pub fn normal_out(f: &FusionSystem) -> CliResult<NormalOut> {
    let n = f.normal_structure()?;
    let g = f.group();
    Ok(NormalOut {
        o_p: subgroup(g, &n.o_p),
        constrained: n.constrained,
        normal_subgroups: n.normal_subgroups.iter().map(|h| subgroup(g, h)).collect(),
    })
}

/// Summary of a fusion system: sizes, class table and normal structure.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SystemOut {
    pub s: SubgroupOut,
    pub subgroups: usize,
    pub morphisms: usize,
    pub classes: Vec<StatusRow>,
    pub normal: NormalOut,
}

pub fn system_out(f: &FusionSystem, limits: &Limits) -> CliResult<SystemOut> {
    Ok(SystemOut {
        s: subgroup(f.group(), &f.s()),
        subgroups: f.subgroups().len(),
        morphisms: f.morphism_count(),
        classes: status_table(f, limits)?,
        normal: normal_out(f)?,
    })
}

pub fn to_json<T: Serialize>(r: &T) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("reports serialize");
    s.push('\n');
    s
}

pub fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn gens(h: &SubgroupOut) -> String {
    if h.generators.is_empty() {
        "1".to_string()
    } else {
        format!("<{}>", h.generators.join(", "))
    }
}

/// Text lines for a status table.
pub fn status_lines(rows: &[StatusRow]) -> Vec<String> {
    rows.iter()
        .map(|r| {
            let mut flags = Vec::new();
            for (on, name) in [
                (r.centric, "centric"),
                (r.radical, "radical"),
                (r.essential, "essential"),
                (r.fully_centralised, "fully-centralised"),
                (r.fully_automised, "fully-automised"),
            ] {
                if on {
                    flags.push(name);
                }
            }
            format!(
                "  order {:>3}  class {:>2}  |Aut_F| {:>4}  |Out_F| {:>3}  {}  {}",
                r.representative.order,
                r.class_size,
                r.aut_f_order,
                r.out_f_order,
                gens(&r.representative),
                flags.join(" ")
            )
        })
        .collect()
}
