pub mod combinatorics;
pub mod error;
pub mod polygon;
pub mod operad;
pub mod moduli;
pub mod associahedron;
pub mod quasibraid;
pub mod arrangement;
pub mod verify;
pub mod cli;
