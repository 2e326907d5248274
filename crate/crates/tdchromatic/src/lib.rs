//! Exact computation of the total dominator chromatic number of small
//! simple graphs, the graph operations that perturb it (vertex/edge
//! deletion, vertex/edge contraction, neighborhood-edge removal), closed
//! forms for paths, cycles, coronas, and the pendant-apex gadget, and a
//! harness that machine-checks every bound and sharpness example over
//! exhaustive small-graph universes.

pub mod analysis;
pub mod coloring;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod io;
pub mod iso;
pub mod ops;
pub mod solver;

pub use analysis::{structural_predicates, StructuralReport};
pub use coloring::{is_proper, is_td_coloring, validate_certificate, Coloring, TDCertificate};
pub use enumerate::{connected_graphs, connected_graphs_dedup, random_connected};
pub use error::{Error, Result};
pub use family::{build_family, gadget_apex, FamilySpec};
pub use graph::Graph;
pub use iso::is_isomorphic;
pub use solver::{
    chromatic_number, td_chromatic_number, td_chromatic_oracle, total_domination_number,
    SolveResult, Witness,
};
