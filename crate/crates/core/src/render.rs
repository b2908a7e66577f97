//! Graphviz DOT output. Node and edge order is deterministic.

use std::fmt::Write;

use crate::family::{fmt_subset, SetFamily};
use crate::flags::Flag;
use crate::hull::{phi_bar_table, HullError, HullResult};
use crate::lattice::Lattice;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn header(name: &str) -> String {
    format!("digraph \"{}\" {{\n  rankdir=BT;\n  node [shape=box];\n", escape(name))
}

/// Hasse diagram of the whole lattice, bottom at the bottom.
pub fn lattice_dot(lattice: &Lattice, name: &str) -> String {
    let mut out = header(name);
    for p in lattice.elements() {
        let _ = writeln!(out, "  n{p} [label=\"{}\"];", escape(lattice.label(p)));
    }
    for &(a, b) in lattice.covers() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the hull, each node labelled with its element and its
/// `φ̄`-image. Elements of `C` are drawn bold, elements of `D` filled.
pub fn hull_dot(
    lattice: &Lattice,
    hull: &HullResult,
    c: &Flag,
    d: &Flag,
    name: &str,
) -> Result<String, HullError> {
    let mut out = header(name);
    for (u, image) in phi_bar_table(lattice, hull)? {
        let mut style = Vec::new();
        if c.contains(u) {
            style.push("bold");
        }
        if d.contains(u) {
            style.push("filled");
        }
        let _ = write!(
            out,
            "  n{u} [label=\"{}\\n{}\"",
            escape(lattice.label(u)),
            fmt_subset(image)
        );
        if !style.is_empty() {
            let _ = write!(out, ", style=\"{}\"", style.join(","));
        }
        out.push_str("];\n");
    }
    for (a, b) in lattice.hasse_of_subset(&hull.members) {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    Ok(out)
}

/// Inclusion diagram of a set family, nodes labelled by their subsets.
pub fn family_dot(family: &SetFamily, name: &str) -> String {
    let mut out = header(name);
    for (i, &s) in family.sets().iter().enumerate() {
        let _ = writeln!(out, "  s{i} [label=\"{}\"];", fmt_subset(s));
    }
    for (a, b) in family.hasse() {
        let _ = writeln!(out, "  s{a} -> s{b};");
    }
    out.push_str("}\n");
    out
}
