pub mod corpus;
pub mod groebner;
pub mod parse;
pub mod polyring;
pub mod sysfile;
pub mod certifier;
pub mod cli;
pub mod liealg;
pub mod linalg;
