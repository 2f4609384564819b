//! Congruence classes on `N^q` cut out by pure-difference binomials, with an
//! optional absorbing monomial ideal.

mod catalog;
mod explore;
mod vector;

pub use catalog::{
    bounded_catalog, bounded_count_2x2, min_gens_unbounded_ideal, moves_2x2,
    verify_representatives_2x2, BoundedClass, BoundedClassCatalog, Certificate,
    DEFAULT_MAX_DEGREE,
};
pub use explore::{explore_class, witness_is_valid, ClassReport, DEFAULT_NODE_CAP};
pub use vector::{
    moves_from_columns, neighbors, points_of_degree, ExponentVector, MonomialIdealSet, Move,
    MoveSet,
};
