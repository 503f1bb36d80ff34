//! The walled Brauer-Clifford relations hold under `φ`.

use brauer_clifford::engine::cyclotomic::parse_univariate;
use brauer_clifford::walled::{relation_table, symbolic_delta, verify_presentation};

#[test]
fn presentation_holds() {
    let fs = vec![parse_univariate("t", "t").unwrap(), parse_univariate("t^2 - u", "t").unwrap()];
    let delta = symbolic_delta(11);
    for (r, t) in [(1, 1), (2, 1), (2, 2)] {
        let table = relation_table(r, t, 5);
        let rep = verify_presentation(r, t, &delta, &table, &fs, true);
        let failed: Vec<_> = rep.entries.iter().filter(|e| !e.pass).collect();
        assert!(failed.is_empty(), "(r, t) = ({}, {}): {:#?}", r, t, failed);
    }
}
