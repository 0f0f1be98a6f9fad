//! Graphviz export of the closure order.

use std::fmt::Write;

use crate::classes::{ClassPoset, GroupDatum};
use crate::error::Result;
use crate::pieces::sigma_pieces_of;

// Brewer "set3"; pieces beyond twelve reuse colors, clusters still separate them.
const COLORS: [&str; 12] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5", "#d9d9d9",
    "#bc80bd", "#ccebc5", "#ffed6f",
];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The Hasse diagram of the classes of `d` in DOT: one node per class
/// (degenerate ones suffixed `~I`/`~II`), an edge from each class to every
/// class covering it, and one filled cluster per piece.
///
/// ```
/// use unipotent_pieces::classes::{GroupDatum, LieType};
/// use unipotent_pieces::hasse::hasse_dot;
///
/// let dot = hasse_dot(&GroupDatum::char_one(LieType::C, 1)).unwrap();
/// assert!(dot.contains("\"1^2\" -> \"2^1\";"));
/// ```
pub fn hasse_dot(d: &GroupDatum) -> Result<String> {
    let poset = ClassPoset::new(d)?;
    let sigma = sigma_pieces_of(&poset)?;
    let mut out = String::new();
    let name = |i: usize| quote(&poset.classes()[i].to_string());
    writeln!(out, "digraph {} {{", quote(&d.to_string())).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, style=filled];").unwrap();
    for (k, piece) in sigma.pieces.iter().enumerate() {
        writeln!(out, "  subgraph cluster_{k} {{").unwrap();
        writeln!(out, "    label={};", quote(&piece.label.to_string())).unwrap();
        for c in &piece.members {
            let i = poset.index_of(c).expect("pieces come from the poset");
            writeln!(out, "    {} [fillcolor={}];", name(i), quote(COLORS[k % COLORS.len()])).unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    for (i, j) in poset.covering_pairs() {
        writeln!(out, "  {} -> {};", name(i), name(j)).unwrap();
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::LieType;

    #[test]
    fn degenerate_nodes_are_suffixed() {
        let dot = hasse_dot(&GroupDatum::char_one(LieType::D, 2)).unwrap();
        assert!(dot.contains("\"2^2~I\""));
        assert!(dot.contains("\"2^2~II\""));
        assert!(!dot.contains("\"2^2~I\" -> \"2^2~II\""));
    }

    #[test]
    fn one_cluster_per_piece() {
        let d = GroupDatum::char_two_lie(LieType::C, 2);
        let dot = hasse_dot(&d).unwrap();
        assert_eq!(dot.matches("subgraph cluster_").count(), 4);
        assert_eq!(dot.matches(" -> ").count(), ClassPoset::new(&d).unwrap().covering_pairs().len());
    }

    #[test]
    fn deterministic() {
        let d = GroupDatum::char_two_group(LieType::B, 3);
        assert_eq!(hasse_dot(&d).unwrap(), hasse_dot(&d).unwrap());
    }
}
