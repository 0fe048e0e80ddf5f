//! The omni-Lie algebra `ol(V) = gl(V) ⊕ V`, omni-representations and omni-cohomology.

mod cohomology;
mod element;
mod graph;
mod image;
mod rep;

pub use cohomology::{
    compare_adjoint, compare_graph, compare_trivial, omni_coboundary, omni_cohomology_dims,
    theta_is_surjective, AdjointCorrespondence, Comparison, OmniComplex,
};
pub use element::{omni_bracket, OmniElement};
pub use graph::{
    check_in_graph, graph_check, graph_element, induced_bracket, induced_lr, is_embedding_tensor,
    phi_of,
};
pub use image::ImageSubspace;
pub use rep::{trivial_omnireps, OmniEquation, OmniRep, OmniRepViolation};
