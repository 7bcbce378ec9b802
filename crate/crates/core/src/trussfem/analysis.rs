use serde::Serialize;

use crate::error::{Error, Result};
use crate::numcore::{solve_dense, DenseMatrix, DenseVector, Vec2, SINGULAR_PIVOT_RTOL};

use super::model::{TrussModel, MIN_LENGTH};

/// Length and direction cosines of a bar.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ElementGeometry {
    pub length: f64,
    pub c: f64,
    pub s: f64,
}

impl ElementGeometry {
    pub fn between(p: &Vec2, q: &Vec2) -> Result<Self> {
        let d = *q - *p;
        let length = d.norm();
        if length.is_nan() || length <= MIN_LENGTH {
            return Err(Error::Model(format!("bar length {length:e} is not positive")));
        }
        Ok(Self { length, c: d.x() / length, s: d.y() / length })
    }

    /// `[−c, −s, c, s]`: maps end displacements to axial elongation.
    pub fn elongation_row(&self) -> [f64; 4] {
        [-self.c, -self.s, self.c, self.s]
    }
}

pub fn element_geometry(model: &TrussModel, e: usize) -> Result<ElementGeometry> {
    let (i, j) = model.bar_nodes(e);
    let nodes = model.nodes();
    ElementGeometry::between(&nodes[i].position(), &nodes[j].position())
}

/// Global 4×4 bar stiffness `EA/L · b bᵀ` with `b = [−c, −s, c, s]`.
pub fn element_stiffness(youngs_modulus: f64, area: f64, g: &ElementGeometry) -> [[f64; 4]; 4] {
    let k = youngs_modulus * area / g.length;
    let b = g.elongation_row();
    let mut out = [[0.0; 4]; 4];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, v) in row.iter_mut().enumerate() {
            *v = k * b[r] * b[c];
        }
    }
    out
}

fn element_dofs(model: &TrussModel, e: usize) -> [usize; 4] {
    let (i, j) = model.bar_nodes(e);
    [2 * i, 2 * i + 1, 2 * j, 2 * j + 1]
}

/// Full `2n × 2n` stiffness matrix before supports are applied.
pub fn assemble(model: &TrussModel) -> Result<DenseMatrix> {
    let n = model.dof_count();
    let mut k = DenseMatrix::zeros(n, n);
    for (e, bar) in model.bars().iter().enumerate() {
        let g = element_geometry(model, e)?;
        let ke = element_stiffness(bar.youngs_modulus, bar.area, &g);
        let dofs = element_dofs(model, e);
        for (a, &r) in dofs.iter().enumerate() {
            for (b, &c) in dofs.iter().enumerate() {
                k[(r, c)] += ke[a][b];
            }
        }
    }
    Ok(k)
}

/// Indices of unconstrained DOFs, in global order.
pub fn free_dofs(model: &TrussModel) -> Vec<usize> {
    model
        .constrained_dofs()
        .iter()
        .enumerate()
        .filter_map(|(i, &c)| (!c).then_some(i))
        .collect()
}

/// Stiffness restricted to free DOFs, with those DOF indices.
/// `None` when every DOF is constrained.
pub fn reduced_stiffness(model: &TrussModel) -> Result<Option<(DenseMatrix, Vec<usize>)>> {
    let free = free_dofs(model);
    if free.is_empty() {
        return Ok(None);
    }
    let k = assemble(model)?;
    Ok(Some((k.select(&free, &free), free)))
}

/// Cholesky test; false when some pivot is not clearly positive.
fn is_positive_definite(k: &DenseMatrix) -> bool {
    let n = k.rows();
    let floor = SINGULAR_PIVOT_RTOL * k.max_abs();
    let mut l = DenseMatrix::zeros(n, n);
    for j in 0..n {
        let d = k[(j, j)] - (0..j).map(|p| l[(j, p)] * l[(j, p)]).sum::<f64>();
        if d.is_nan() || d <= floor {
            return false;
        }
        let ljj = d.sqrt();
        l[(j, j)] = ljj;
        for i in j + 1..n {
            let v = k[(i, j)] - (0..j).map(|p| l[(i, p)] * l[(j, p)]).sum::<f64>();
            l[(i, j)] = v / ljj;
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    X,
    Y,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeDisplacement {
    pub node: String,
    /// m
    pub ux: f64,
    /// m
    pub uy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reaction {
    pub node: String,
    pub direction: Direction,
    /// N
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxialForce {
    pub element: String,
    /// N; positive in tension.
    pub force: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveResult {
    pub displacements: Vec<NodeDisplacement>,
    pub reactions: Vec<Reaction>,
    pub axial_forces: Vec<AxialForce>,
    /// Euclidean norm of the free displacement vector (m).
    pub displacement_norm: f64,
    /// `Σ loads + Σ reactions` in x and y (N).
    pub equilibrium_residual: [f64; 2],
}

impl SolveResult {
    /// Global displacement vector in DOF order.
    pub fn displacement_vector(&self) -> Vec<f64> {
        self.displacements.iter().flat_map(|d| [d.ux, d.uy]).collect()
    }

    pub fn axial(&self, element: &str) -> Option<f64> {
        self.axial_forces.iter().find(|a| a.element == element).map(|a| a.force)
    }

    pub fn displacement(&self, node: &str) -> Option<Vec2> {
        self.displacements
            .iter()
            .find(|d| d.node == node)
            .map(|d| Vec2::new(d.ux, d.uy))
    }

    /// Element with the largest |N|; the earliest one wins ties.
    pub fn peak_axial(&self) -> Option<&AxialForce> {
        self.axial_forces.iter().fold(None, |best: Option<&AxialForce>, a| match best {
            Some(b) if b.force.abs() >= a.force.abs() => Some(b),
            _ => Some(a),
        })
    }
}

/// Linear static analysis by the direct stiffness method.
pub fn solve(model: &TrussModel) -> Result<SolveResult> {
    let k = assemble(model)?;
    let f = model.load_vector();
    let free = free_dofs(model);
    let mut u = vec![0.0; model.dof_count()];

    if !free.is_empty() {
        let kr = k.select(&free, &free);
        let fr = DenseVector(free.iter().map(|&i| f[i]).collect());
        let ur = match solve_dense(&kr, &fr) {
            Ok(v) => v,
            Err(Error::SingularMatrix { .. }) => return Err(Error::Mechanism),
            Err(e) => return Err(e),
        };
        if !is_positive_definite(&kr) {
            return Err(Error::Mechanism);
        }
        for (&dof, v) in free.iter().zip(ur.iter()) {
            u[dof] = *v;
        }
    }

    let ku = k.mul_vec(&DenseVector(u.clone()))?;
    let constrained = model.constrained_dofs();
    let mut reactions = Vec::new();
    let mut residual = [0.0; 2];
    for (dof, &fixed) in constrained.iter().enumerate() {
        residual[dof % 2] += f[dof];
        if fixed {
            let value = ku[dof] - f[dof];
            residual[dof % 2] += value;
            reactions.push(Reaction {
                node: model.nodes()[dof / 2].id.clone(),
                direction: if dof % 2 == 0 { Direction::X } else { Direction::Y },
                value,
            });
        }
    }

    let mut axial_forces = Vec::with_capacity(model.bars().len());
    for (e, bar) in model.bars().iter().enumerate() {
        let g = element_geometry(model, e)?;
        let elongation: f64 =
            g.elongation_row().iter().zip(element_dofs(model, e)).map(|(b, d)| b * u[d]).sum();
        axial_forces.push(AxialForce {
            element: bar.id.clone(),
            force: bar.youngs_modulus * bar.area / g.length * elongation,
        });
    }

    let displacements = model
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, n)| NodeDisplacement { node: n.id.clone(), ux: u[2 * i], uy: u[2 * i + 1] })
        .collect();
    let displacement_norm = free.iter().map(|&i| u[i] * u[i]).sum::<f64>().sqrt();

    let load_scale = f.iter().map(|v| v.abs()).sum::<f64>().max(1.0);
    debug_assert!(
        residual.iter().all(|r| r.abs() <= 1e-9 * load_scale),
        "equilibrium residual {residual:?}"
    );

    Ok(SolveResult {
        displacements,
        reactions,
        axial_forces,
        displacement_norm,
        equilibrium_residual: residual,
    })
}
