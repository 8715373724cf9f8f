//! Graphviz export.

use std::fmt::Write;

use crate::crystal::CrystalGraph;
use crate::subset::SubsetHandle;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Nodes in element order labelled by weight, extremal elements double
/// circled, members of `overlay` filled, edges labelled by node label.
pub fn to_dot(g: &CrystalGraph, overlay: Option<&SubsetHandle<'_>>) -> String {
    let mut out = String::from("digraph crystal {\n  node [shape=circle];\n");
    for b in g.elements() {
        let mut attrs = vec![format!("label={}", quote(&g.wt(b).to_string()))];
        if g.extremal_rep(b).is_some() {
            attrs.push("shape=doublecircle".into());
        }
        if overlay.is_some_and(|x| x.contains(b)) {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=lightblue".into());
        }
        writeln!(out, "  {} [{}];", quote(g.id(b)), attrs.join(", ")).unwrap();
    }
    for (src, i, dst) in g.edges() {
        writeln!(
            out,
            "  {} -> {} [label=\"{}\"];",
            quote(g.id(src)),
            quote(g.id(dst)),
            g.cartan().label(i)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::select::select;
    use crate::tableau::build_tableau_crystal;

    #[test]
    fn dot_examples() {
        let g = build_tableau_crystal(3, &[2, 1]).unwrap();
        let plain = to_dot(&g, None);
        assert_eq!(plain.matches("label=\"(").count(), 8);
        assert_eq!(plain.matches("doublecircle").count(), 6);
        assert_eq!(plain.matches(" -> ").count(), 8);
        let empty = SubsetHandle::new(&g, []);
        assert_eq!(to_dot(&g, Some(&empty)), plain);
        let x1 = select(&g, "hw; f1 @hw; f2 @hw").unwrap();
        assert_eq!(to_dot(&g, Some(&x1)).matches("style=filled").count(), 3);
        assert!(plain.contains("\"[[1,1],[2]]\""));
    }
}
