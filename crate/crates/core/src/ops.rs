/// Count of monomial operations (comparisons and divisibility tests).
///
/// Each engine invocation owns its own counter; there is no global state.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter(u64);

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn tick(&mut self) {
        self.0 += 1;
    }

    #[inline]
    pub fn add(&mut self, n: u64) {
        self.0 += n;
    }

    pub fn get(&self) -> u64 {
        self.0
    }
}
