use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::isometry::Isometry;
use crate::numcore::Vec2;

/// Bars shorter than this are rejected.
pub const MIN_LENGTH: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Node {
    pub id: String,
    pub x: f64,
    pub y: f64,
}

impl Node {
    pub fn new(id: impl Into<String>, x: f64, y: f64) -> Self {
        Self { id: id.into(), x, y }
    }

    pub fn position(&self) -> Vec2 {
        Vec2::new(self.x, self.y)
    }
}

/// Pin-jointed axial bar.
#[derive(Debug, Clone, PartialEq)]
pub struct Bar {
    pub id: String,
    pub start: String,
    pub end: String,
    /// Young's modulus (Pa).
    pub youngs_modulus: f64,
    /// Cross-section area (m²).
    pub area: f64,
}

impl Bar {
    pub fn new(
        id: impl Into<String>,
        start: impl Into<String>,
        end: impl Into<String>,
        youngs_modulus: f64,
        area: f64,
    ) -> Self {
        Self { id: id.into(), start: start.into(), end: end.into(), youngs_modulus, area }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Fixity {
    pub fix_x: bool,
    pub fix_y: bool,
}

impl Fixity {
    pub const PIN: Fixity = Fixity { fix_x: true, fix_y: true };
    pub const FREE: Fixity = Fixity { fix_x: false, fix_y: false };

    pub fn is_partial(&self) -> bool {
        self.fix_x != self.fix_y
    }

    pub fn swapped(&self) -> Self {
        Self { fix_x: self.fix_y, fix_y: self.fix_x }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Support {
    pub node: String,
    pub fix_x: bool,
    pub fix_y: bool,
}

impl Support {
    pub fn new(node: impl Into<String>, fix_x: bool, fix_y: bool) -> Self {
        Self { node: node.into(), fix_x, fix_y }
    }

    pub fn pin(node: impl Into<String>) -> Self {
        Self::new(node, true, true)
    }
}

/// Nodal point load (N).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodalLoad {
    pub node: String,
    #[serde(rename = "Fx", default)]
    pub fx: f64,
    #[serde(rename = "Fy", default)]
    pub fy: f64,
}

impl NodalLoad {
    pub fn new(node: impl Into<String>, fx: f64, fy: f64) -> Self {
        Self { node: node.into(), fx, fy }
    }
}

/// A validated planar truss.
///
/// Degrees of freedom are numbered `2·i` (x) and `2·i + 1` (y) for the
/// i-th node in input order.
#[derive(Debug, Clone, PartialEq)]
pub struct TrussModel {
    nodes: Vec<Node>,
    bars: Vec<Bar>,
    supports: Vec<Support>,
    loads: Vec<NodalLoad>,
    node_index: HashMap<String, usize>,
    bar_nodes: Vec<(usize, usize)>,
}

fn model_err(msg: impl Into<String>) -> Error {
    Error::Model(msg.into())
}

impl TrussModel {
    pub fn new(
        nodes: Vec<Node>,
        bars: Vec<Bar>,
        supports: Vec<Support>,
        loads: Vec<NodalLoad>,
    ) -> Result<Self> {
        if nodes.is_empty() {
            return Err(model_err("model has no nodes"));
        }
        let mut node_index = HashMap::with_capacity(nodes.len());
        for (i, n) in nodes.iter().enumerate() {
            if !(n.x.is_finite() && n.y.is_finite()) {
                return Err(model_err(format!("node {} has non-finite coordinates", n.id)));
            }
            if node_index.insert(n.id.clone(), i).is_some() {
                return Err(model_err(format!("duplicate node id {}", n.id)));
            }
        }
        let lookup = |id: &str, what: &str| {
            node_index
                .get(id)
                .copied()
                .ok_or_else(|| model_err(format!("{what} references unknown node {id}")))
        };

        let mut bar_ids = HashMap::new();
        let mut bar_nodes = Vec::with_capacity(bars.len());
        for b in &bars {
            if bar_ids.insert(b.id.as_str(), ()).is_some() {
                return Err(model_err(format!("duplicate element id {}", b.id)));
            }
            let i = lookup(&b.start, &format!("element {}", b.id))?;
            let j = lookup(&b.end, &format!("element {}", b.id))?;
            if i == j {
                return Err(model_err(format!("element {} connects node {} to itself", b.id, b.start)));
            }
            if nodes[i].position().distance(&nodes[j].position()) <= MIN_LENGTH {
                return Err(model_err(format!("element {} has zero length", b.id)));
            }
            if !(b.youngs_modulus.is_finite() && b.youngs_modulus > 0.0) {
                return Err(model_err(format!("element {} needs E > 0", b.id)));
            }
            if !(b.area.is_finite() && b.area > 0.0) {
                return Err(model_err(format!("element {} needs A > 0", b.id)));
            }
            bar_nodes.push((i, j));
        }

        for s in &supports {
            lookup(&s.node, "support")?;
        }
        if !supports.iter().any(|s| s.fix_x || s.fix_y) {
            return Err(model_err("model has no constrained degree of freedom"));
        }
        for l in &loads {
            lookup(&l.node, "load")?;
            if !(l.fx.is_finite() && l.fy.is_finite()) {
                return Err(model_err(format!("load on node {} is not finite", l.node)));
            }
        }

        Ok(Self { nodes, bars, supports, loads, node_index, bar_nodes })
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn bars(&self) -> &[Bar] {
        &self.bars
    }

    pub fn supports(&self) -> &[Support] {
        &self.supports
    }

    pub fn loads(&self) -> &[NodalLoad] {
        &self.loads
    }

    pub fn node_index(&self, id: &str) -> Option<usize> {
        self.node_index.get(id).copied()
    }

    /// Node indices `(start, end)` of bar `e`.
    pub fn bar_nodes(&self, e: usize) -> (usize, usize) {
        self.bar_nodes[e]
    }

    pub fn dof_count(&self) -> usize {
        2 * self.nodes.len()
    }

    /// Combined fixity per node.
    pub fn fixities(&self) -> Vec<Fixity> {
        let mut out = vec![Fixity::FREE; self.nodes.len()];
        for s in &self.supports {
            let f = &mut out[self.node_index[&s.node]];
            f.fix_x |= s.fix_x;
            f.fix_y |= s.fix_y;
        }
        out
    }

    /// Constrained flag per DOF.
    pub fn constrained_dofs(&self) -> Vec<bool> {
        self.fixities().iter().flat_map(|f| [f.fix_x, f.fix_y]).collect()
    }

    /// Global load vector (N); loads on the same node add up.
    pub fn load_vector(&self) -> Vec<f64> {
        let mut f = vec![0.0; self.dof_count()];
        for l in &self.loads {
            let i = self.node_index[&l.node];
            f[2 * i] += l.fx;
            f[2 * i + 1] += l.fy;
        }
        f
    }

    /// Same model with every load multiplied by `factor`.
    pub fn with_scaled_loads(&self, factor: f64) -> Self {
        let mut out = self.clone();
        for l in &mut out.loads {
            l.fx *= factor;
            l.fy *= factor;
        }
        out
    }

    /// Same model with the loads replaced.
    pub fn with_loads(&self, loads: Vec<NodalLoad>) -> Result<Self> {
        Self::new(self.nodes.clone(), self.bars.clone(), self.supports.clone(), loads)
    }

    /// Applies an isometry to node positions and loads.
    ///
    /// Support fixities follow the map when it sends coordinate axes to
    /// coordinate axes; otherwise any partial fixity becomes a full pin.
    /// The second value lists nodes whose fixity was promoted that way.
    pub fn transformed(&self, g: &Isometry<2>) -> Result<(Self, Vec<String>)> {
        let nodes = self
            .nodes
            .iter()
            .map(|n| {
                let p = g.apply(&n.position());
                Node::new(n.id.clone(), p.x(), p.y())
            })
            .collect();
        let loads = self
            .loads
            .iter()
            .map(|l| {
                let f = g.apply(&Vec2::new(l.fx, l.fy));
                NodalLoad::new(l.node.clone(), f.x(), f.y())
            })
            .collect();
        let mut promoted = Vec::new();
        let supports = self
            .supports
            .iter()
            .map(|s| {
                let f = map_fixity(g, Fixity { fix_x: s.fix_x, fix_y: s.fix_y });
                if f.1 {
                    promoted.push(s.node.clone());
                }
                Support::new(s.node.clone(), f.0.fix_x, f.0.fix_y)
            })
            .collect();
        Ok((Self::new(nodes, self.bars.clone(), supports, loads)?, promoted))
    }
}

/// How an isometry maps support directions. The flag is true when a
/// partial fixity had to be promoted to a pin.
pub(crate) fn map_fixity(g: &Isometry<2>, f: Fixity) -> (Fixity, bool) {
    const AXIS_TOL: f64 = 1e-12;
    let m = g.matrix();
    if !f.is_partial() || (m[(0, 1)].abs() <= AXIS_TOL && m[(1, 0)].abs() <= AXIS_TOL) {
        (f, false)
    } else if m[(0, 0)].abs() <= AXIS_TOL && m[(1, 1)].abs() <= AXIS_TOL {
        (f.swapped(), false)
    } else {
        (Fixity::PIN, true)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MaterialDefaults {
    #[serde(rename = "E")]
    pub youngs_modulus: Option<f64>,
    #[serde(rename = "A")]
    pub area: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub id: String,
    pub node_i: String,
    pub node_j: String,
    #[serde(rename = "E", default, skip_serializing_if = "Option::is_none")]
    pub youngs_modulus: Option<f64>,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub area: Option<f64>,
}

/// On-disk model document. Numbers are SI; element `E`/`A` fall back to
/// `material_defaults`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub nodes: Vec<Node>,
    pub elements: Vec<ElementRecord>,
    #[serde(default)]
    pub supports: Vec<Support>,
    #[serde(default)]
    pub loads: Vec<NodalLoad>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub material_defaults: Option<MaterialDefaults>,
}

impl ModelFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::ModelFormat {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn into_model(self) -> Result<TrussModel> {
        let defaults = self.material_defaults;
        let bars = self
            .elements
            .into_iter()
            .map(|e| {
                let youngs_modulus = e
                    .youngs_modulus
                    .or(defaults.and_then(|d| d.youngs_modulus))
                    .ok_or_else(|| model_err(format!("element {} has no E", e.id)))?;
                let area = e
                    .area
                    .or(defaults.and_then(|d| d.area))
                    .ok_or_else(|| model_err(format!("element {} has no A", e.id)))?;
                Ok(Bar::new(e.id, e.node_i, e.node_j, youngs_modulus, area))
            })
            .collect::<Result<Vec<_>>>()?;
        TrussModel::new(self.nodes, bars, self.supports, self.loads)
    }
}

impl From<&TrussModel> for ModelFile {
    fn from(m: &TrussModel) -> Self {
        Self {
            nodes: m.nodes.clone(),
            elements: m
                .bars
                .iter()
                .map(|b| ElementRecord {
                    id: b.id.clone(),
                    node_i: b.start.clone(),
                    node_j: b.end.clone(),
                    youngs_modulus: Some(b.youngs_modulus),
                    area: Some(b.area),
                })
                .collect(),
            supports: m.supports.clone(),
            loads: m.loads.clone(),
            material_defaults: None,
        }
    }
}

impl TrussModel {
    pub fn from_json(text: &str) -> Result<Self> {
        ModelFile::parse(text)?.into_model()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ModelFile::from(self)).expect("model serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(bars: Vec<Bar>) -> Result<TrussModel> {
        TrussModel::new(
            vec![Node::new("A", 0.0, 0.0), Node::new("B", 1.0, 0.0)],
            bars,
            vec![Support::pin("A")],
            vec![NodalLoad::new("B", 1.0, 0.0)],
        )
    }

    #[test]
    fn rejects_bad_elements() {
        assert!(square(vec![Bar::new("e", "A", "A", 1.0, 1.0)]).is_err());
        assert!(square(vec![Bar::new("e", "A", "C", 1.0, 1.0)]).is_err());
        assert!(square(vec![Bar::new("e", "A", "B", 0.0, 1.0)]).is_err());
        assert!(square(vec![Bar::new("e", "A", "B", 1.0, -1.0)]).is_err());
        assert!(square(vec![Bar::new("e", "A", "B", 1.0, 1.0), Bar::new("e", "B", "A", 1.0, 1.0)])
            .is_err());
        assert!(square(vec![Bar::new("e", "A", "B", 1.0, 1.0)]).is_ok());
    }

    #[test]
    fn rejects_zero_length_and_duplicates() {
        let zero = TrussModel::new(
            vec![Node::new("A", 0.0, 0.0), Node::new("B", 0.0, 0.0)],
            vec![Bar::new("e", "A", "B", 1.0, 1.0)],
            vec![Support::pin("A")],
            vec![],
        );
        assert!(matches!(zero, Err(Error::Model(m)) if m.contains("zero length")));
        let dup = TrussModel::new(
            vec![Node::new("A", 0.0, 0.0), Node::new("A", 1.0, 0.0)],
            vec![],
            vec![Support::pin("A")],
            vec![],
        );
        assert!(dup.is_err());
    }

    #[test]
    fn requires_a_constraint() {
        let free = TrussModel::new(
            vec![Node::new("A", 0.0, 0.0), Node::new("B", 1.0, 0.0)],
            vec![Bar::new("e", "A", "B", 1.0, 1.0)],
            vec![Support::new("A", false, false)],
            vec![],
        );
        assert!(free.is_err());
    }

    #[test]
    fn model_file_defaults_and_errors() {
        let text = r#"{
            "material_defaults": {"E": 2.0e11, "A": 0.001},
            "nodes": [{"id": "A", "x": 0, "y": 0}, {"id": "B", "x": 2, "y": 0}],
            "elements": [{"id": "AB", "node_i": "A", "node_j": "B", "A": 0.002}],
            "supports": [{"node": "A", "fix_x": true, "fix_y": true}],
            "loads": [{"node": "B", "Fx": 10}]
        }"#;
        let m = TrussModel::from_json(text).unwrap();
        assert_eq!(m.bars()[0].youngs_modulus, 2.0e11);
        assert_eq!(m.bars()[0].area, 0.002);
        assert_eq!(m.load_vector(), vec![0.0, 0.0, 10.0, 0.0]);
        assert_eq!(TrussModel::from_json(&m.to_json()).unwrap(), m);

        assert!(matches!(TrussModel::from_json("{ nodes: "), Err(Error::ModelFormat { .. })));
        let missing_e = r#"{"nodes": [{"id": "A", "x": 0, "y": 0}, {"id": "B", "x": 1, "y": 0}],
            "elements": [{"id": "AB", "node_i": "A", "node_j": "B"}],
            "supports": [{"node": "A", "fix_x": true, "fix_y": true}]}"#;
        assert!(matches!(TrussModel::from_json(missing_e), Err(Error::Model(_))));
    }

    #[test]
    fn fixity_mapping() {
        use crate::isometry::{reflection2, rotation2, Axis2};
        use std::f64::consts::PI;
        let roller = Fixity { fix_x: false, fix_y: true };
        assert_eq!(map_fixity(&reflection2(Axis2::Y), roller), (roller, false));
        assert_eq!(map_fixity(&rotation2(PI / 2.0), roller), (roller.swapped(), false));
        assert_eq!(map_fixity(&rotation2(PI / 4.0), roller), (Fixity::PIN, true));
        assert_eq!(map_fixity(&rotation2(PI / 4.0), Fixity::PIN), (Fixity::PIN, false));
    }
}
