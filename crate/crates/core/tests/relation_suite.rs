//! The defining relations vanish in normal form, in random contexts, and
//! under the tensor-space functor.

mod common;

use std::sync::Arc;

use brauer_clifford::engine::defining_relations;
use brauer_clifford::schurweyl::linalg::SuperOperator;
use brauer_clifford::schurweyl::modules::{QModule, TensorModule, Trivial};
use brauer_clifford::schurweyl::psi::{psi_drawing, relation_operator};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn relations_reduce_to_zero() {
    for rel in defining_relations() {
        assert!(rel.residual().unwrap().is_zero(), "{}", rel.name);
    }
}

#[test]
fn relations_hold_in_random_contexts() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let checked = common::relations_in_context(&defining_relations(), &mut rng, 20).unwrap();
    assert_eq!(checked, 20 * defining_relations().len());
}

#[test]
fn functor_respects_relations() {
    let modules: Vec<Arc<dyn QModule>> = vec![Arc::new(Trivial { n: 2 }), Arc::new(TensorModule::v_power(2, 1))];
    for module in &modules {
        for rel in defining_relations() {
            let op = relation_operator(&rel, module.as_ref()).unwrap();
            assert!(op.is_zero(), "{} on a module of dimension {}", rel.name, module.dim());
        }
    }
}

#[test]
fn functor_identities() {
    let m = Trivial { n: 2 };
    let id = SuperOperator::identity(4);
    for s in ["(pow white 2)", "(compose (tensor id1 lcap) (tensor lcup id1))", "(compose (tensor lcap idv) (tensor idv lcup))"] {
        let d = brauer_clifford::engine::GeneratorExpr::parse(s).unwrap().to_drawing().unwrap();
        assert_eq!(psi_drawing(&d, &m).unwrap(), id, "{}", s);
    }
}
