//! Size caps shared by the search and transport code.

use crate::arith::DEFAULT_DEGREE_CAP;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Max numerator/denominator degree of any solution component.
    pub degree_cap: usize,
    /// Max length of a reduction word.
    pub word_cap: usize,
    /// Max depth of the joint-orbit search in the constructor.
    pub depth_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { degree_cap: DEFAULT_DEGREE_CAP, word_cap: 64, depth_cap: 24 }
    }
}

impl Limits {
    /// Defaults overridden by `A4_DEGREE_CAP`, `A4_WORD_CAP`, `A4_DEPTH_CAP`.
    pub fn from_env() -> Self {
        let get = |k: &str, d: usize| std::env::var(k).ok().and_then(|v| v.parse().ok()).unwrap_or(d);
        let d = Limits::default();
        Limits {
            degree_cap: get("A4_DEGREE_CAP", d.degree_cap),
            word_cap: get("A4_WORD_CAP", d.word_cap),
            depth_cap: get("A4_DEPTH_CAP", d.depth_cap),
        }
    }
}
