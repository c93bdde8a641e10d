//! End-to-end construction: tour, lay out, orient and label every component.

use thiserror::Error;

use crate::graph::{classify_components, odd_count, ComponentInfo, Graph};
use crate::label::{label_all, path_order, LabelError, LabeledOrientation, PathOrder};
use crate::layout::{
    decompose, gap_spec, layout_component, GapSpec, Layout, LayoutError, PathDecomposition,
    DEFAULT_RETRY_BUDGET,
};
use crate::orient::{orient_circuit, OrientedCircuit};
use crate::x0::{solve_x0, X0Error, X0Result};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error(transparent)]
    X0(#[from] X0Error),
    #[error(transparent)]
    Layout(#[from] LayoutError),
    #[error(transparent)]
    Label(#[from] LabelError),
}

impl PipelineError {
    /// Whether the failure is a layout search coming up empty, as opposed to
    /// malformed input.
    pub fn is_infeasible(&self) -> bool {
        matches!(
            self,
            PipelineError::Layout(
                LayoutError::Infeasible { .. }
                    | LayoutError::BudgetExhausted { .. }
                    | LayoutError::NoSelection { .. }
            )
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    pub retry_budget: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            seed: 0,
            retry_budget: DEFAULT_RETRY_BUDGET,
        }
    }
}

/// Everything built for one component.
#[derive(Debug, Clone)]
pub struct ComponentConstruction {
    pub info: ComponentInfo,
    pub spec: GapSpec,
    pub layout: Layout,
    pub decomposition: PathDecomposition,
    pub oriented: OrientedCircuit,
    pub order: PathOrder,
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub d: usize,
    /// Number of odd components.
    pub k: usize,
    /// Number of components.
    pub q: usize,
    pub x0: Option<X0Result>,
    pub seed: u64,
    /// Indexed like the components, odd first.
    pub components: Vec<ComponentConstruction>,
    pub labeled: LabeledOrientation,
}

/// Builds the orientation and labeling of `g`.
///
/// The result is not verified here; see [`crate::verify::verify_construction`].
pub fn construct(g: &Graph, config: &Config) -> Result<Construction, PipelineError> {
    let infos = classify_components(g);
    let d = g.d();
    let k = odd_count(&infos);
    let q = infos.len();
    let x0 = solve_x0(k, d)?;

    let components = infos
        .into_iter()
        .map(|info| {
            let spec = gap_spec(info.index, k, d, x0.as_ref())?;
            let layout = layout_component(g, &info, &spec, config.seed, config.retry_budget)?;
            let decomposition = decompose(&layout);
            let oriented = orient_circuit(&decomposition, info.parity);
            let order = path_order(info.index, info.order(), info.parity);
            Ok(ComponentConstruction {
                info,
                spec,
                layout,
                decomposition,
                oriented,
                order,
            })
        })
        .collect::<Result<Vec<_>, PipelineError>>()?;

    let parts: Vec<_> = components
        .iter()
        .map(|c| (&c.layout.circuit, &c.oriented, &c.order))
        .collect();
    let labeled = label_all(g, &parts)?;

    Ok(Construction {
        d,
        k,
        q,
        x0,
        seed: config.seed,
        components,
        labeled,
    })
}
