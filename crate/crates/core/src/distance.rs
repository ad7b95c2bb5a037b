use std::fmt;

/// Raw distance value used on hot paths; `INF` marks "no path".
pub(crate) const INF: u64 = u64::MAX;

/// A shortest-path distance, or `INFINITY` when no path exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Distance(u64);

impl Distance {
    pub const INFINITY: Distance = Distance(INF);
    pub const ZERO: Distance = Distance(0);

    /// Panics if `value` collides with the infinity sentinel.
    pub fn new(value: u64) -> Self {
        assert!(value != INF, "distance {value} collides with the infinity sentinel");
        Distance(value)
    }

    pub(crate) fn from_raw(raw: u64) -> Self {
        Distance(raw)
    }

    pub(crate) fn raw(self) -> u64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0 != INF
    }

    pub fn finite(self) -> Option<u64> {
        self.is_finite().then_some(self.0)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.finite() {
            Some(d) => write!(f, "{d}"),
            None => f.write_str("INF"),
        }
    }
}

impl From<u64> for Distance {
    fn from(value: u64) -> Self {
        Distance::new(value)
    }
}

/// Adds two raw distances. Infinity absorbs; a finite sum that does not fit
/// in 64 bits is a hard error rather than a wraparound.
#[inline]
pub(crate) fn plus(a: u64, b: u64) -> u64 {
    if a == INF || b == INF {
        return INF;
    }
    match a.checked_add(b) {
        Some(sum) if sum != INF => sum,
        _ => panic!("distance accumulator overflow: {a} + {b}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_orders_after_everything() {
        assert!(Distance::INFINITY > Distance::new(u64::MAX - 1));
        assert_eq!(Distance::INFINITY.to_string(), "INF");
        assert_eq!(Distance::new(7).to_string(), "7");
        assert_eq!(Distance::new(7).finite(), Some(7));
    }

    #[test]
    fn plus_absorbs_infinity() {
        assert_eq!(plus(INF, 3), INF);
        assert_eq!(plus(3, 4), 7);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn plus_refuses_to_wrap() {
        plus(u64::MAX - 1, 2);
    }
}
