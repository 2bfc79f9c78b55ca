//! Hilbert series of homogeneous ideals through their leading monomial ideals.

use super::Ideal;
use crate::error::Result;
use crate::polycore::{Field, Monomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Projective dimension; -1 for the empty scheme.
    pub dimension: i32,
    pub degree: i64,
    /// Arithmetic genus, for curves only.
    pub p_a: Option<i64>,
    /// `N(t)` with `HS(S/I) = N(t) / (1-t)^n`, lowest degree first.
    pub hilbert_numerator: Vec<i64>,
    nvars: usize,
}

impl HilbertData {
    /// Hilbert function of `S/I` in degree `k`.
    pub fn hilbert_function(&self, k: u32) -> i64 {
        let n = self.nvars as u64;
        self.hilbert_numerator
            .iter()
            .enumerate()
            .filter(|(i, _)| *i as u32 <= k)
            .map(|(i, &a)| a * binom(k as u64 - i as u64 + n - 1, n - 1))
            .sum()
    }

    /// Hilbert polynomial of `S/I` evaluated at `k`.
    pub fn hilbert_polynomial(&self, k: i64) -> i64 {
        let (q, d) = reduced_numerator(&self.hilbert_numerator);
        // Σ_i q_i * C(k - i + d - 1, d - 1) as a polynomial identity in k
        q.iter().enumerate().map(|(i, &c)| c * binom_poly(k - i as i64 + d as i64 - 1, d as i64 - 1)).sum()
    }
}

fn binom(n: u64, k: u64) -> i64 {
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

/// Binomial coefficient as a polynomial in the top argument (valid for negative `n`).
fn binom_poly(n: i64, k: i64) -> i64 {
    if k < 0 {
        return 0;
    }
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

fn trim(mut a: Vec<i64>) -> Vec<i64> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

/// `N(t)/(1-t)^k` with `k` maximal; returns the quotient and `k`.
fn reduced_numerator(num: &[i64]) -> (Vec<i64>, usize) {
    let mut q = num.to_vec();
    let mut k = 0;
    loop {
        if q.iter().all(|&c| c == 0) || q.iter().sum::<i64>() != 0 {
            return (q, k);
        }
        // synthetic division by (1 - t): q = (1 - t) * r, r_i = Σ_{j<=i} q_j
        let mut r = Vec::with_capacity(q.len() - 1);
        let mut acc = 0;
        for &c in &q[..q.len() - 1] {
            acc += c;
            r.push(acc);
        }
        q = trim(r);
        k += 1;
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.deg());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `S/M` for a monomial ideal `M`.
pub fn monomial_numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    numerator_rec(minimalize(gens.to_vec()), nvars)
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.deg() == 0) {
        return vec![0];
    }
    let coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        return gens.iter().fold(vec![1], |acc, g| {
            let mut f = vec![0i64; g.deg() as usize + 1];
            f[0] = 1;
            f[g.deg() as usize] -= 1;
            poly_mul(&acc, &f)
        });
    }
    // pivot on the variable shared by the most non-linear generators,
    // at the median of its positive exponents
    let mut best = (0usize, 0usize);
    for v in 0..nvars {
        let c = gens.iter().filter(|g| g.exp(v) > 0 && g.support_len() > 1).count();
        if c > best.1 {
            best = (v, c);
        }
    }
    let v = best.0;
    let mut exps: Vec<u32> = gens.iter().map(|g| g.exp(v)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2].max(1);
    let pivot = Monomial::var_pow(v, e);
    // N(M) = N(M + (p)) + t^deg(p) * N(M : p)
    let mut plus = gens.clone();
    plus.push(pivot);
    let colon: Vec<Monomial> = gens.iter().map(|g| pivot_colon(g, v, e)).collect();
    let mut out = numerator_rec(minimalize(plus), nvars);
    let rest = numerator_rec(minimalize(colon), nvars);
    poly_add(&mut out, &rest, e as usize);
    trim(out)
}

fn pivot_colon(g: &Monomial, v: usize, e: u32) -> Monomial {
    g.with_exp(v, g.exp(v).saturating_sub(e))
}

fn from_numerator(num: Vec<i64>, nvars: usize) -> HilbertData {
    let num = trim(num);
    let (q, k) = reduced_numerator(&num);
    let krull = if q.iter().all(|&c| c == 0) { 0 } else { nvars - k };
    let dimension = krull as i32 - 1;
    let degree = if dimension < 0 { 0 } else { q.iter().sum() };
    let p_a = (dimension == 1).then(|| {
        let weighted: i64 = q.iter().enumerate().map(|(i, &c)| i as i64 * c).sum();
        1 - degree + weighted
    });
    HilbertData { dimension, degree, p_a, hilbert_numerator: num, nvars }
}

impl<F: Field> Ideal<F> {
    /// Hilbert data of `S/I`. The Hilbert polynomial ignores components
    /// supported at the irrelevant ideal, so no saturation is needed.
    pub fn hilbert(&self) -> Result<HilbertData> {
        let lead = self.gb()?.leading_monomials();
        Ok(from_numerator(monomial_numerator(&lead, self.nvars()), self.nvars()))
    }

    /// `dim I_k` for the saturation of `I`.
    pub fn graded_piece_dim(&self, k: u32) -> Result<usize> {
        let sat = if self.is_saturated() { self.clone() } else { self.saturate_irrelevant()? };
        let h = sat.hilbert()?;
        let total = binom(k as u64 + self.nvars() as u64 - 1, self.nvars() as u64 - 1);
        Ok((total - h.hilbert_function(k)) as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_poly, PrimeField, Rationals};

    fn qi(v: &[&str]) -> Ideal<Rationals> {
        Ideal::new(Rationals, 4, v.iter().map(|s| parse_poly(&Rationals, 4, s).unwrap()).collect())
    }

    #[test]
    fn twisted_cubic() {
        let h = qi(&["z0*z2 - z1^2", "z1*z3 - z2^2", "z0*z3 - z1*z2"]).hilbert().unwrap();
        assert_eq!((h.dimension, h.degree, h.p_a), (1, 3, Some(0)));
        // standard monomials degree by degree follow 3t + 1
        for k in 0..=6 {
            assert_eq!(h.hilbert_function(k), 3 * k as i64 + 1);
        }
    }

    #[test]
    fn complete_intersection_of_quadrics() {
        let f = PrimeField::new(1_000_003).unwrap();
        let p = |s: &str| parse_poly(&f, 4, s).unwrap();
        let i = Ideal::new(f, 4, vec![p("z0^2 + 3*z1*z2 - z3^2"), p("z0*z1 + 5*z2^2 + 7*z1*z3")]);
        let h = i.hilbert().unwrap();
        assert_eq!((h.dimension, h.degree, h.p_a), (1, 4, Some(1)));
        assert_eq!(h.hilbert_numerator, vec![1, 0, -2, 0, 1]);
    }

    #[test]
    fn points_and_empty() {
        let pt = qi(&["z0", "z1", "z2"]).hilbert().unwrap();
        assert_eq!((pt.dimension, pt.degree), (0, 1));
        let fat = qi(&["z0", "z1", "z2^2"]).hilbert().unwrap();
        assert_eq!(fat.degree, 2);
        let empty = Ideal::irrelevant(Rationals, 4).hilbert().unwrap();
        assert_eq!(empty.dimension, -1);
        let unit = Ideal::unit(Rationals, 4).hilbert().unwrap();
        assert_eq!(unit.dimension, -1);
        let plane = qi(&["z0"]).hilbert().unwrap();
        assert_eq!((plane.dimension, plane.degree), (2, 1));
    }

    #[test]
    fn graded_pieces() {
        assert_eq!(Ideal::unit(Rationals, 4).graded_piece_dim(3).unwrap(), 20);
        let tc = qi(&["z0*z2 - z1^2", "z1*z3 - z2^2", "z0*z3 - z1*z2"]);
        assert_eq!(tc.graded_piece_dim(2).unwrap(), 3);
        assert_eq!(tc.graded_piece_dim(3).unwrap(), 10);
    }

    #[test]
    fn polynomial_matches_function_in_high_degree() {
        let h = qi(&["z0^2", "z0*z1", "z1^3"]).hilbert().unwrap();
        for k in 5..12 {
            assert_eq!(h.hilbert_function(k), h.hilbert_polynomial(k as i64));
        }
    }
}
