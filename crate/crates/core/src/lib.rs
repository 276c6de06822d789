//! Embeddings of finite Coxeter groups into symmetric groups, their lifts to
//! maps between Artin groups, and a Garside normal-form engine that decides
//! whether those lifts are homomorphisms.

pub mod cli;
pub mod coxeter;
pub mod garside;
pub mod perm;
pub mod realization;
pub mod render;
pub mod reprmap;

pub use coxeter::{CoxeterError, CoxeterMatrix, CoxeterType, Family, Relation, RelationKind};
pub use garside::{BraidElement, BraidWord, GarsideError};
pub use perm::{PermError, Permutation};
pub use realization::{
    meet_weak_left, realize, type_a_realization, CayleyRealization, ElemId, Realization,
    SymmetricGroup,
};
