pub mod bench;
pub mod classes;
pub mod components;
pub mod condense;
pub mod corpus;
pub mod engine;
pub mod gadget;
pub mod graph;
pub mod io;
pub mod mis;
mod util;
pub mod word;
