//! Decide existence for parameter tuples given on the command line, e.g.
//!
//! ```text
//! cargo run --example classify -- 1/3,1/3,0,0,1/3 2/3,0,0,1/3,0
//! ```

use painleve_a4::classifier::{classify, necessary_condition};
use painleve_a4::system::ParamVec;

fn main() {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = ["1,0,0,0,0", "1/3,1/3,0,0,1/3", "4/5,-2/5,4/5,2/5,-3/5", "2/3,0,0,1/3,0", "1/2,1/2,0,0,0"]
            .map(String::from)
            .to_vec();
    }
    for a in args {
        let p = match ParamVec::parse(&a) {
            Ok(p) => p,
            Err(e) => {
                println!("{a}: {e}");
                continue;
            }
        };
        match classify(&p) {
            Ok(c) => {
                print!("{p}: {}", c.label);
                if let (Some(w), Some(canon)) = (c.word_from_canonical, c.canonical) {
                    print!(" from {canon} by [{w}]");
                }
                println!();
                println!("  necessary pattern: {:?}", necessary_condition(&p));
            }
            Err(e) => println!("{p}: {e}"),
        }
    }
}
