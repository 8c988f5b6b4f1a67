use crate::graph::OrderedMapping;

/// Number of monotone maps `[n] -> [h]`, i.e. `C(n + h - 1, h - 1)`.
///
/// `h = 0` admits only the empty map, so the count is `1` for `n = 0` and `0`
/// otherwise.
pub fn count_monotone_maps(n: usize, h: usize) -> u128 {
    if h == 0 {
        return u128::from(n == 0);
    }
    let k = (h - 1).min(n) as u128;
    let top = (n + h - 1) as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (top - i) / (i + 1);
    }
    acc
}

/// Iterator over all non-decreasing target vectors of length `n` with entries
/// in `0..h`, in lexicographic order.
#[derive(Debug, Clone)]
pub struct MonotoneMaps {
    h: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for MonotoneMaps {
    type Item = OrderedMapping;

    fn next(&mut self) -> Option<OrderedMapping> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked above");
        match cur.iter().rposition(|&t| t + 1 < self.h) {
            Some(pos) => {
                let bumped = cur[pos] + 1;
                cur[pos..].fill(bumped);
            }
            None => self.current = None,
        }
        Some(OrderedMapping::new(out))
    }
}

pub fn enumerate_monotone_maps(n: usize, h: usize) -> MonotoneMaps {
    let current = (n == 0 || h > 0).then(|| vec![0; n]);
    MonotoneMaps { h, current }
}
