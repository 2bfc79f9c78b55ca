//! Exponent vectors and monomial orders.

use std::cmp::Ordering;

/// Variable capacity of a monomial. Rings in this crate use at most 8
/// variables; one extra slot serves scratch constructions.
pub const MAX_VARS: usize = 10;

/// Exponent vector with cached total degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    deg: u16,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::default();
        for (i, &e) in exps.iter().enumerate() {
            assert!(e < 256, "exponent overflow");
            m.exps[i] = e as u8;
            m.deg += e as u16;
        }
        m
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::default();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn var_pow(i: usize, e: u32) -> Self {
        let mut m = Monomial::default();
        m.exps[i] = e as u8;
        m.deg = e as u16;
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exps(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn deg(&self) -> u32 {
        self.deg as u32
    }

    /// Largest index with a nonzero exponent plus one.
    pub fn support_len(&self) -> usize {
        self.exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            let e = m.exps[i] as u16 + other.exps[i] as u16;
            assert!(e < 256, "exponent overflow");
            m.exps[i] = e as u8;
        }
        m.deg += other.deg;
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self` when `self` divides `other`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut m = *other;
        for i in 0..MAX_VARS {
            m.exps[i] -= self.exps[i];
        }
        m.deg -= self.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::default();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            m.deg += m.exps[i] as u16;
        }
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::default();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].min(other.exps[i]);
            m.deg += m.exps[i] as u16;
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Bit i set iff variable i occurs; a cheap divisibility pre-filter.
    #[inline]
    pub fn mask(&self) -> u16 {
        let mut b = 0u16;
        for i in 0..MAX_VARS {
            if self.exps[i] > 0 {
                b |= 1 << i;
            }
        }
        b
    }

    /// Same exponents with variables renumbered by `map[i]` (source index to target index).
    pub fn permute(&self, map: &[usize]) -> Monomial {
        let mut m = Monomial::default();
        for (i, &j) in map.iter().enumerate() {
            m.exps[j] = self.exps[i];
        }
        m.deg = self.deg;
        m
    }

    /// Drop the first `k` variables (their exponents must be zero) and shift the rest down.
    pub fn shift_down(&self, k: usize) -> Monomial {
        let mut m = Monomial::default();
        for i in k..MAX_VARS {
            m.exps[i - k] = self.exps[i];
        }
        m.deg = m.exps.iter().map(|&e| e as u16).sum();
        m
    }

    /// Insert `k` fresh variables in front.
    pub fn shift_up(&self, k: usize) -> Monomial {
        let mut m = Monomial::default();
        for i in 0..MAX_VARS - k {
            m.exps[i + k] = self.exps[i];
        }
        debug_assert!(self.exps[MAX_VARS - k..].iter().all(|&e| e == 0));
        m.deg = self.deg;
        m
    }

    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut m = *self;
        m.deg = m.deg - m.exps[i] as u16 + e as u16;
        m.exps[i] = e as u8;
        m
    }

    /// Degree restricted to variables `lo..hi`.
    fn partial_deg(&self, lo: usize, hi: usize) -> u32 {
        self.exps[lo..hi].iter().map(|&e| e as u32).sum()
    }
}

/// Term orders. Every variant is a degree-compatible or elimination well-order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    /// Eliminates the first `k` variables: compares the degree in that block,
    /// then grevlex inside the block, then grevlex on the rest.
    BlockElim(usize),
    /// Weighted degree first, ties broken by grevlex.
    WeightedGrevlex(Vec<u32>),
}

#[inline]
fn revlex_tail(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    for i in (lo..hi).rev() {
        if a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Compare two monomials; `Greater` means `a` comes first in a sorted polynomial.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a.deg.cmp(&b.deg).then_with(|| revlex_tail(a, b, 0, MAX_VARS)),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::BlockElim(k) => {
                let k = *k;
                a.partial_deg(0, k)
                    .cmp(&b.partial_deg(0, k))
                    .then_with(|| revlex_tail(a, b, 0, k))
                    .then_with(|| a.partial_deg(k, MAX_VARS).cmp(&b.partial_deg(k, MAX_VARS)))
                    .then_with(|| revlex_tail(a, b, k, MAX_VARS))
            }
            MonomialOrder::WeightedGrevlex(w) => {
                let wd = |m: &Monomial| -> u64 {
                    (0..MAX_VARS).map(|i| m.exps[i] as u64 * *w.get(i).unwrap_or(&1) as u64).sum()
                };
                wd(a).cmp(&wd(b)).then_with(|| revlex_tail(a, b, 0, MAX_VARS))
            }
        }
    }

    /// Whether the order compares total degree first (so homogeneous
    /// computations proceed degree by degree).
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn grevlex_small_cases() {
        let o = MonomialOrder::Grevlex;
        // z0*z3 vs z1*z2: same degree, last differing variable z3 has bigger exponent in the first
        assert_eq!(o.cmp(&m(&[1, 0, 0, 1]), &m(&[0, 1, 1, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[2, 0, 0, 0]), &m(&[0, 1, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 0, 2]), &m(&[1, 0, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates() {
        let o = MonomialOrder::BlockElim(1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0, 0]);
        let b = m(&[2, 1, 0, 1]);
        assert_eq!(a.lcm(&b), m(&[2, 2, 0, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 1, 0, 0]));
        assert!(a.divides(&a.lcm(&b)));
        assert_eq!(a.div(&a.lcm(&b)), Some(m(&[1, 0, 0, 1])));
        assert!(!a.is_coprime(&b));
        assert!(m(&[1, 0, 0, 0]).is_coprime(&m(&[0, 3, 0, 0])));
        assert_eq!(m(&[1, 0, 2]).shift_up(1).shift_down(1), m(&[1, 0, 2]));
    }
}
