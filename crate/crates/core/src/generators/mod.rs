//! Named graphs, subdivision and corpus generation.

pub mod corpus;
pub mod named;
mod subdivide;

pub use corpus::{generate, CorpusMode, CorpusSpec, Filter};
pub use named::named;
pub use subdivide::subdivide;
