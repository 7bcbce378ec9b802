use std::collections::HashSet;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::isometry::rotation2;
use crate::numcore::Vec2;

use super::model::{map_fixity, Bar, Fixity, NodalLoad, Node, Support, TrussModel};

/// Nodes closer than this (m) are merged.
pub const MERGE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Ring {
    pub model: TrussModel,
    /// `node_map[k][m]`: ring node index of module node `m` in sector `k`.
    pub node_map: Vec<Vec<usize>>,
    pub warnings: Vec<String>,
}

struct RingNode {
    id: String,
    position: Vec2,
    fixity: Fixity,
    load: Vec2,
}

/// Replicates `module` `n` times by rotation about the origin.
///
/// Sector `k` is rotated by `2πk/n`. Node ids become `{id}_{k}` and the
/// first copy of a merged node keeps its id. Loads on merged nodes add up.
pub fn generate_ring(module: &TrussModel, n: usize) -> Result<Ring> {
    if n < 2 {
        return Err(Error::InvalidOrder { order: n, min: 2 });
    }
    let fixities = module.fixities();
    let loads = module.load_vector();
    let mut nodes: Vec<RingNode> = Vec::new();
    let mut node_map = Vec::with_capacity(n);
    let mut warnings = Vec::new();
    let mut promoted = false;

    for k in 0..n {
        let g = rotation2(TAU * k as f64 / n as f64);
        let mut map = Vec::with_capacity(module.nodes().len());
        for (m, node) in module.nodes().iter().enumerate() {
            let position = g.apply(&node.position());
            let load = g.apply(&Vec2::new(loads[2 * m], loads[2 * m + 1]));
            let (fixity, was_promoted) = map_fixity(&g, fixities[m]);
            promoted |= was_promoted;

            match nodes.iter().position(|r| r.position.distance(&position) <= MERGE_TOL) {
                Some(idx) => {
                    let existing = &mut nodes[idx];
                    if existing.fixity != fixity {
                        return Err(Error::MergeConflict { node: existing.id.clone() });
                    }
                    existing.load = existing.load + load;
                    map.push(idx);
                }
                None => {
                    nodes.push(RingNode { id: format!("{}_{k}", node.id), position, fixity, load });
                    map.push(nodes.len() - 1);
                }
            }
        }
        node_map.push(map);
    }
    if promoted {
        warnings.push(
            "partial supports in sectors not aligned with the coordinate axes were made full pins"
                .to_string(),
        );
    }

    let mut seen = HashSet::new();
    let mut bars = Vec::new();
    for (k, map) in node_map.iter().enumerate() {
        for (e, bar) in module.bars().iter().enumerate() {
            let (i, j) = module.bar_nodes(e);
            let (a, b) = (map[i], map[j]);
            if !seen.insert((a.min(b), a.max(b))) {
                continue;
            }
            bars.push(Bar::new(
                format!("{}_{k}", bar.id),
                nodes[a].id.clone(),
                nodes[b].id.clone(),
                bar.youngs_modulus,
                bar.area,
            ));
        }
    }

    let supports = nodes
        .iter()
        .filter(|r| r.fixity.fix_x || r.fixity.fix_y)
        .map(|r| Support::new(r.id.clone(), r.fixity.fix_x, r.fixity.fix_y))
        .collect();
    let ring_loads = nodes
        .iter()
        .filter(|r| r.load.x() != 0.0 || r.load.y() != 0.0)
        .map(|r| NodalLoad::new(r.id.clone(), r.load.x(), r.load.y()))
        .collect();
    let ring_nodes = nodes
        .iter()
        .map(|r| Node::new(r.id.clone(), r.position.x(), r.position.y()))
        .collect();

    Ok(Ring { model: TrussModel::new(ring_nodes, bars, supports, ring_loads)?, node_map, warnings })
}
