//! Exact sup-norm sphere-of-influence embeddings of graphs without isolated
//! vertices, in at most `floor(2n/3) + 2` dimensions, with an independent
//! verifier.
//!
//! Pipeline: [`matching::maximum_matching`] → [`factor::star_triangle_factor`]
//! → [`picker::pick_vertices`] → [`pseudo::build_pseudo`] and
//! [`pseudo::radius_schedule`] → [`embedder::embed`] → [`verifier::verify`].

pub mod embedder;
pub mod factor;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod picker;
pub mod pseudo;
pub mod rational;
pub mod sig;
pub mod verifier;
