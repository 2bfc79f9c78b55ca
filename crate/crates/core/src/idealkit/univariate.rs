//! Dense univariate polynomials: gcds, squarefree parts and roots over GF(p).
//!
//! Coefficient vectors are stored lowest degree first with no trailing zeros.

use rand::Rng;

use crate::polycore::Field;

pub type UPoly<E> = Vec<E>;

pub fn trim<F: Field>(f: &F, mut a: UPoly<F::Elem>) -> UPoly<F::Elem> {
    while a.last().is_some_and(|c| f.is_zero(c)) {
        a.pop();
    }
    a
}

/// Degree, with `None` for the zero polynomial.
pub fn degree<E>(a: &[E]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn monic<F: Field>(f: &F, a: &[F::Elem]) -> UPoly<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(lc) => {
            let inv = f.inv(lc).expect("nonzero leading coefficient");
            a.iter().map(|c| f.mul(c, &inv)).collect()
        }
    }
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
            f.sub(&x, &y)
        })
        .collect();
    trim(f, out)
}

pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, out)
}

/// Quotient and remainder.
pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (UPoly<F::Elem>, UPoly<F::Elem>) {
    let db = degree(b).expect("division by zero polynomial");
    let mut r = trim(f, a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let inv = f.inv(&b[db]).unwrap();
    let mut q = vec![f.zero(); r.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = f.mul(r.last().unwrap(), &inv);
        for (j, y) in b.iter().enumerate() {
            r[k + j] = f.sub_mul(&r[k + j], &c, y);
        }
        q[k] = c;
        r = trim(f, r);
    }
    (trim(f, q), r)
}

pub fn rem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    divrem(f, a, b).1
}

/// Monic gcd; the gcd of two zero polynomials is zero.
pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    let mut x = trim(f, a.to_vec());
    let mut y = trim(f, b.to_vec());
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

pub fn derivative<F: Field>(f: &F, a: &[F::Elem]) -> UPoly<F::Elem> {
    let out = a.iter().enumerate().skip(1).map(|(i, c)| f.mul(c, &f.from_i64(i as i64))).collect();
    trim(f, out)
}

/// `a / gcd(a, a')`. Exact whenever the degree is below the characteristic.
pub fn squarefree_part<F: Field>(f: &F, a: &[F::Elem]) -> UPoly<F::Elem> {
    let a = trim(f, a.to_vec());
    if a.len() <= 2 {
        return monic(f, &a);
    }
    let g = gcd(f, &a, &derivative(f, &a));
    monic(f, &divrem(f, &a, &g).0)
}

/// `base^e mod m`.
pub fn powmod<F: Field>(f: &F, base: &[F::Elem], mut e: u64, m: &[F::Elem]) -> UPoly<F::Elem> {
    let mut result = vec![f.one()];
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            result = rem(f, &mul(f, &result, &b), m);
        }
        b = rem(f, &mul(f, &b, &b), m);
        e >>= 1;
    }
    rem(f, &result, m)
}

/// Distinct roots in a prime field of odd characteristic, sorted by their
/// printed form. In characteristic zero only a single root (squarefree part
/// of degree one) is found.
pub fn roots<F: Field, R: Rng + ?Sized>(f: &F, a: &[F::Elem], rng: &mut R) -> Vec<F::Elem> {
    let p = f.characteristic();
    let a = trim(f, a.to_vec());
    if a.len() < 2 {
        return Vec::new();
    }
    if p == 0 {
        let sf = squarefree_part(f, &a);
        return if degree(&sf) == Some(1) { vec![f.neg(&f.div(&sf[0], &sf[1]).unwrap())] } else { Vec::new() };
    }
    // product of the distinct linear factors: gcd(a, x^p - x)
    let x = vec![f.zero(), f.one()];
    let xp = powmod(f, &x, p, &a);
    let g = gcd(f, &a, &sub(f, &xp, &x));
    let mut out = Vec::new();
    split(f, &g, p, rng, &mut out);
    out.sort_by_key(|r| f.format(r));
    out
}

fn split<F: Field, R: Rng + ?Sized>(f: &F, g: &[F::Elem], p: u64, rng: &mut R, out: &mut Vec<F::Elem>) {
    match degree(g) {
        None | Some(0) => {}
        Some(1) => out.push(f.neg(&f.div(&g[0], &g[1]).unwrap())),
        Some(_) => loop {
            // gcd(g, (x + c)^((p-1)/2) - 1) splits g with probability about 1/2
            let c = f.random(rng);
            let shifted = vec![c, f.one()];
            let h = sub(f, &powmod(f, &shifted, (p - 1) / 2, g), &[f.one()]);
            let d = gcd(f, g, &h);
            let dd = degree(&d).unwrap_or(0);
            if dd > 0 && dd < g.len() - 1 {
                let (q, _) = divrem(f, g, &d);
                split(f, &d, p, rng, out);
                split(f, &monic(f, &q), p, rng, out);
                return;
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{keyed_rng, PrimeField};

    #[test]
    fn gcd_and_squarefree() {
        let f = PrimeField::new(1009).unwrap();
        // (x-1)^2 (x+2)
        let a = mul(&f, &mul(&f, &[f.from_i64(-1), 1], &[f.from_i64(-1), 1]), &[2, 1]);
        let sf = squarefree_part(&f, &a);
        assert_eq!(sf, mul(&f, &[f.from_i64(-1), 1], &[2, 1]));
        assert_eq!(gcd(&f, &a, &[f.from_i64(-1), 1]), vec![f.from_i64(-1), 1]);
    }

    #[test]
    fn roots_over_prime_field() {
        let f = PrimeField::new(1_000_003).unwrap();
        let mut rng = keyed_rng(3, "roots");
        // (x - 5)(x + 7)(x^2 + 1); -1 is a non-residue since p = 3 mod 4
        let a = mul(&f, &mul(&f, &[f.from_i64(-5), 1], &[7, 1]), &[1, 0, 1]);
        let mut r = roots(&f, &a, &mut rng);
        r.sort();
        let mut expect = vec![5, f.from_i64(-7)];
        expect.sort();
        assert_eq!(r, expect);
    }
}
