//! Rank-one engines: the Drinfeld-presentation Yangian with its twisted
//! subalgebra, the RTT realization for gl(2), and the bridge identifying the
//! two pictures.

pub mod bridge;
pub mod drinfeld;
pub mod rtt;
