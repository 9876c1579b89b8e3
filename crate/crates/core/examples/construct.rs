//! Build rational solutions by transporting a seed.
//!
//! ```text
//! cargo run --example construct -- 4/5,-2/5,4/5,2/5,-3/5
//! ```

use painleve_a4::constructor::{construct, render};
use painleve_a4::system::{verify_solution, ParamVec};

fn main() {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = ["-1,1,0,0,1", "2/3,-1,2/3,1/3,1/3", "4/5,-2/5,4/5,2/5,-3/5", "3,-2,0,0,0", "1/2,1/2,0,0,0"]
            .map(String::from)
            .to_vec();
    }
    for a in args {
        let p = ParamVec::parse(&a).unwrap();
        match construct(&p) {
            Ok(Some(c)) => {
                println!("{p}: seed {} via {} [{}]", c.seed, c.route, c.word);
                for line in render(&c.sol) {
                    println!("  {line}");
                }
                println!("  verified: {}", verify_solution(&c.sol, &p).ok);
            }
            Ok(None) => println!("{p}: no rational solution"),
            Err(e) => println!("{p}: {e}"),
        }
    }
}
