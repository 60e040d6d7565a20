//! Ranking, unranking, counting, sampling and enumeration of the planar
//! embeddings on the sphere of a planar graph.
//!
//! ```
//! use num_bigint::BigUint;
//! use planar_rank::graph::Graph;
//! use planar_rank::ranking::Ranker;
//!
//! let g = Graph::new(4, [(1, 2), (1, 3), (2, 3), (3, 4)])?;
//! let r = Ranker::new(g)?;
//! assert_eq!(r.count(), BigUint::from(4u32));
//! let e = r.unrank(&BigUint::from(3u32))?;
//! assert_eq!(r.rank(&e)?, BigUint::from(3u32));
//! assert_eq!(r.phi(&e)?.len(), r.bounds().len());
//! assert_eq!(r.sample_seeded(7, 100)?.len(), 100);
//! # Ok::<(), planar_rank::Error>(())
//! ```

pub mod biconnected;
pub mod codec;
pub mod cutvertex;
pub mod embedding;
pub mod error;
pub mod generate;
pub mod graph;
pub mod nesting;
pub mod oracle;
pub mod planarity;
pub mod ranking;
pub mod spqr;
pub mod triconnectivity;
pub mod union_find;

pub use error::{Error, Result};
