//! Congruences, quotients and radicals of finite graphs and finite
//! topological spaces.

pub mod bits;
pub mod cli;
pub mod error;
pub mod graph_congruence;
pub mod io;
pub mod loopless_congruence;
pub mod partition;
pub mod radical;
pub mod structures;
pub mod subdirect;
pub mod theorems;
pub mod topo_congruence;

pub use error::CongruenceError;
pub use partition::Partition;
pub use subdirect::Subdirect;
