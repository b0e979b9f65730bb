pub mod cli;
pub mod decomp;
pub mod fingroup;
pub mod fusion;
pub mod oracle;
pub mod quat;
pub mod storal;
