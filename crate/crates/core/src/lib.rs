//! Counting plane curves of degree `d` through points and tangent to up to
//! three lines, by summing multiplicities of lattice paths in the Newton
//! triangle.
//!
//! Tangency to a coordinate line is encoded by a marked lattice point in the
//! interior of the corresponding edge of the triangle; the counted paths are
//! the maximal λ-increasing paths that skip the marked points. The complex
//! count weights each path by a product of corner-cut lattice areas; the real
//! count uses a sign per step and the signed case analysis in [`real`].


pub mod cli;
pub mod complex;
pub mod counts;
pub mod error;
pub mod geometry;
pub mod path;
pub mod real;
pub mod render;


pub use complex::{cut_corner, find_pivot, mu, mu_side, CutStep, MultiplicityTrace, Terminal};
pub use counts::{
    complex_count, known_value, marked_selections, maximality_report, real_count, sign_search,
    CountReport, MaximalityReport, SearchResult, SearchStrategy, SelectionResult,
};
pub use error::Error;
pub use geometry::{
    interior_edge_points, is_strictly_convex, lambda_cmp, lambda_less, lattice_length,
    lattice_points, twice_area, BoundaryEdge, EdgeVector, LatticePoint, NewtonTriangle, Side,
};
pub use path::{
    build_maximal_path, enumerate_paths, is_supported_on_chain, step_vectors, LatticePath,
    MarkedConfig,
};
pub use real::{
    attach_phases, classify_triangle, mu_real, mu_real_side, phase_of, ronga_sign_sequence,
    theorem_sign_sequence, CaseOutcome, PhaseClass, PhasedPath, Sign, SignSequence,
};
