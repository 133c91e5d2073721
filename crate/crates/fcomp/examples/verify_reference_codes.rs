//! Check every catalog code by full enumeration and print its rate next
//! to the capacity of its model.

use fcomp::capacity::{capacity_oracle, Coverage};
use fcomp::codes::{is_realizable, paper_code, rate_of, SourceCode, CATALOG};

fn main() {
    println!("{:<16} {:>5} {:>5}  capacity (source)", "id", "rate", "k");
    for id in CATALOG {
        let (model, code) = paper_code(id).unwrap();
        let code = SourceCode::Linear(code);
        assert!(is_realizable(&model, &code).unwrap(), "{id} must decode");
        let report = rate_of(&model, &code).unwrap();
        let cap = match capacity_oracle(&model) {
            Coverage::Covered(res) => format!("{} ({})", res.value, res.provenance.label()),
            Coverage::OutOfCoverage => "out of coverage".into(),
        };
        println!("{id:<16} {:>5} {:>5}  {cap}", report.rate.to_string(), report.k);
    }
}
