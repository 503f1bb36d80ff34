//! Helpers shared by the integration suites.
#![allow(dead_code)]

use brauer_clifford::engine::relations::check_in_contexts;
use brauer_clifford::engine::Relation;
use rand_chacha::ChaCha8Rng;

/// Check every relation in `samples` random contexts. Returns the number of
/// contexts checked, or a description of the first failure.
pub fn relations_in_context(rels: &[Relation], rng: &mut ChaCha8Rng, samples: usize) -> Result<usize, String> {
    for rel in rels {
        if let Some(m) = check_in_contexts(rel, rng, samples).map_err(|e| e.to_string())? {
            return Err(format!("{}: {}", rel.name, m));
        }
    }
    Ok(rels.len() * samples)
}
