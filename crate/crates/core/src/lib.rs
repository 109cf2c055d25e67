//! p-domination and p-reinforcement on graphs, with exact solvers for
//! trees and the constructive family of trees whose p-reinforcement number
//! reaches the maximum `p + 1`.
//!
//! A set `D` is *p-dominating* when every vertex outside `D` has at least `p`
//! neighbours in `D`; γ_p is the smallest size of such a set. The
//! *p-reinforcement number* r_p is the fewest non-edges whose addition
//! lowers γ_p (0 when γ_p <= p).
//!
//! ```
//! use preinforce::{family, gamma_p, r_p};
//!
//! let f2 = family::build_block(family::BlockKind::F, 3, None)?;
//! assert_eq!(gamma_p(&f2.tree, 3)?.value, 5);
//! assert_eq!(r_p(&f2.tree, 3)?.value, 4);
//! # Ok::<(), preinforce::Error>(())
//! ```

pub mod canon;
pub mod deficiency;
pub mod domination;
pub mod error;
pub mod family;
pub mod generate;
pub mod graph;
pub mod io;
pub mod reinforcement;
pub mod search;
pub mod verifier;

pub use canon::{canonical_code, canonical_code_colored};
pub use deficiency::{eta_graph, eta_local, eta_total, mu_graph, mu_set};
pub use domination::{gamma_p, is_p_dominating, private_neighbors, GammaCertificate};
pub use error::{Error, Result};
pub use generate::{enumerate_trees, random_tree};
pub use graph::{Graph, RootedView, VertexSet};
pub use io::{parse_edge_list, to_dot, to_edge_list};
pub use reinforcement::{r_p, r_p_by_definition, r_p_by_eta, ReinforcementResult};
pub use search::Limits;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    struct Readme;
    #[doc = include_str!("../../../book/src/domination.md")]
    struct Domination;
    #[doc = include_str!("../../../book/src/reinforcement.md")]
    struct Reinforcement;
    #[doc = include_str!("../../../book/src/family.md")]
    struct Family;
    #[doc = include_str!("../../../book/src/verification.md")]
    struct Verification;
}
