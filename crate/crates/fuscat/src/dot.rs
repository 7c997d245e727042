//! Graphviz output. Orbit-graph vertices are named `site:index`, where the
//! index counts classes at that site in canonical order; edges carry the
//! edge-site id as label.

use std::fmt::Write;

use fuscat_core::orbit::{RepGraph, Site};
use fuscat_core::tree::SiteTree;

pub fn site_name(tree: &SiteTree, s: Site) -> &str {
    match s {
        Site::Vertex(v) => &tree.vertices()[v],
        Site::Edge(e) => &tree.edges()[e].id,
    }
}

/// Names of the graph's vertices, in vertex order.
pub fn vertex_names(tree: &SiteTree, g: &RepGraph) -> Vec<String> {
    let mut out = Vec::with_capacity(g.vertices.len());
    let mut prev: Option<Site> = None;
    let mut k = 0;
    for c in &g.vertices {
        if prev == Some(c.site) {
            k += 1;
        } else {
            k = 0;
            prev = Some(c.site);
        }
        out.push(format!("{}:{k}", site_name(tree, c.site)));
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn rep_graph(tree: &SiteTree, g: &RepGraph, name: &str) -> String {
    let names = vertex_names(tree, g);
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(name)).unwrap();
    for n in &names {
        writeln!(out, "  {};", quote(n)).unwrap();
    }
    for e in &g.edges {
        writeln!(
            out,
            "  {} -- {} [label={}];",
            quote(&names[e.ends[0]]),
            quote(&names[e.ends[1]]),
            quote(site_name(tree, e.class.site))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// The underlying tree, vertices labelled with their Sylow orders.
pub fn site_tree(tree: &SiteTree, orders: &[usize], root: Option<usize>, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(name)).unwrap();
    for (v, id) in tree.vertices().iter().enumerate() {
        let shape = if root == Some(v) { ", shape=doublecircle" } else { "" };
        writeln!(
            out,
            "  {} [label={}{shape}];",
            quote(id),
            quote(&format!("{id} |S|={}", orders[v]))
        )
        .unwrap();
    }
    for e in tree.edges() {
        writeln!(
            out,
            "  {} -- {} [label={}];",
            quote(&tree.vertices()[e.ends[0]]),
            quote(&tree.vertices()[e.ends[1]]),
            quote(&e.id)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
