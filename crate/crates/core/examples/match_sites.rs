//! Lists the expressions of a seed that can host each kind of UB.
use ubsmith::lang::canonicalize;
use ubsmith::matching::{get_matched_exprs, UbKind};

const SEED: &str = include_str!("../seeds/fig4.c");

fn main() {
    let ast = canonicalize(SEED).expect("seed parses");
    for kind in UbKind::ALL {
        let sites = get_matched_exprs(&ast, kind);
        println!("{kind}: {} site(s)", sites.len());
        for s in sites {
            println!("  {} {:?}", s.loc, s.construct);
        }
    }
}
