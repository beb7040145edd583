//! Dense univariate polynomials over a prime field `F_p`, `p < 2^31`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub(crate) type Fp = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Field {
    pub p: u64,
}

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn deg(a: &[u64]) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

impl Field {
    pub fn new(p: u64) -> Self {
        Field { p }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod p");
        self.pow(a, self.p - 2)
    }

    pub fn padd(&self, a: &[u64], b: &[u64]) -> Fp {
        let n = a.len().max(b.len());
        let r = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        trim(r)
    }

    pub fn psub(&self, a: &[u64], b: &[u64]) -> Fp {
        let n = a.len().max(b.len());
        let r = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        trim(r)
    }

    pub fn pmul(&self, a: &[u64], b: &[u64]) -> Fp {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + x * y) % self.p;
            }
        }
        trim(r)
    }

    pub fn pscale(&self, a: &[u64], c: u64) -> Fp {
        trim(a.iter().map(|&v| self.mul(v, c)).collect())
    }

    pub fn monic(&self, a: &[u64]) -> Fp {
        match a.last() {
            Some(&l) => self.pscale(a, self.inv(l)),
            None => Vec::new(),
        }
    }

    pub fn divrem(&self, a: &[u64], b: &[u64]) -> (Fp, Fp) {
        let db = deg(b).expect("division by zero polynomial mod p");
        let mut r = a.to_vec();
        if r.len() <= db {
            return (Vec::new(), trim(r));
        }
        let inv = self.inv(b[db]);
        let mut q = vec![0u64; r.len() - db];
        for k in (0..q.len()).rev() {
            let c = self.mul(r[k + db], inv);
            q[k] = c;
            if c != 0 {
                for (j, &bj) in b.iter().enumerate() {
                    r[k + j] = self.sub(r[k + j], self.mul(c, bj));
                }
            }
        }
        r.truncate(db);
        (trim(q), trim(r))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> Fp {
        self.divrem(a, b).1
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> Fp {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s·a + t·b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (Fp, Fp, Fp) {
        let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.psub(&s0, &self.pmul(&q, &s1));
            let t2 = self.psub(&t0, &self.pmul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.last().expect("not both zero"));
        (
            self.pscale(&r0, inv),
            self.pscale(&s0, inv),
            self.pscale(&t0, inv),
        )
    }

    pub fn derivative(&self, a: &[u64]) -> Fp {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul(c, i as u64 % self.p))
                .collect(),
        )
    }

    /// `base^e mod m`.
    pub fn powmod(&self, base: &[u64], mut e: u128, m: &[u64]) -> Fp {
        let mut r = vec![1u64];
        let mut b = self.rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                r = self.rem(&self.pmul(&r, &b), m);
            }
            e >>= 1;
            if e > 0 {
                b = self.rem(&self.pmul(&b, &b), m);
            }
        }
        r
    }

    pub fn is_squarefree(&self, a: &[u64]) -> bool {
        let d = self.derivative(a);
        !d.is_empty() && deg(&self.gcd(a, &d)) == Some(0)
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    fn ddf(&self, f: &[u64]) -> Vec<(Fp, usize)> {
        let mut out = Vec::new();
        let mut f = f.to_vec();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let mut d = 1;
        while deg(&f).unwrap_or(0) >= 2 * d {
            h = self.powmod(&h, self.p as u128, &f);
            let g = self.gcd(&f, &self.psub(&h, &x));
            if deg(&g).unwrap_or(0) > 0 {
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, d));
            }
            d += 1;
        }
        if deg(&f).unwrap_or(0) > 0 {
            let df = deg(&f).unwrap();
            out.push((f, df));
        }
        out
    }

    /// Splits a monic product of distinct degree-`d` irreducibles.
    fn edf(&self, f: &[u64], d: usize, rng: &mut ChaCha8Rng) -> Vec<Fp> {
        let n = deg(f).unwrap_or(0);
        if n <= d {
            return vec![f.to_vec()];
        }
        loop {
            let a: Fp = trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if deg(&a).unwrap_or(0) == 0 {
                continue;
            }
            // a^((p^d - 1)/2) = (a · a^p ⋯ a^(p^(d-1)))^((p-1)/2)
            let mut frob = a.clone();
            let mut norm = a.clone();
            for _ in 1..d {
                frob = self.powmod(&frob, self.p as u128, f);
                norm = self.rem(&self.pmul(&norm, &frob), f);
            }
            let b = self.psub(&self.powmod(&norm, (self.p as u128 - 1) / 2, f), &[1]);
            let g = self.gcd(f, &b);
            let dg = deg(&g).unwrap_or(0);
            if dg > 0 && dg < n {
                let rest = self.divrem(f, &g).0;
                let mut out = self.edf(&g, d, rng);
                out.extend(self.edf(&self.monic(&rest), d, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a squarefree polynomial.
    pub fn factor_squarefree(&self, f: &[u64], rng: &mut ChaCha8Rng) -> Vec<Fp> {
        let f = self.monic(f);
        let mut out = Vec::new();
        for (g, d) in self.ddf(&f) {
            out.extend(self.edf(&g, d, rng));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn splits_into_linears_mod_7() {
        let fp = Field::new(7);
        // (x-1)(x-2)(x-3)
        let f = fp.pmul(&fp.pmul(&[6, 1], &[5, 1]), &[4, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut fs = fp.factor_squarefree(&f, &mut rng);
        fs.sort();
        assert_eq!(fs, vec![vec![4, 1], vec![5, 1], vec![6, 1]]);
    }

    #[test]
    fn irreducible_quadratic_stays() {
        let fp = Field::new(7);
        // x^2 + 1 is irreducible mod 7
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(fp.factor_squarefree(&[1, 0, 1], &mut rng).len(), 1);
    }

    #[test]
    fn ext_gcd_bezout() {
        let fp = Field::new(13);
        let a = vec![1, 2, 1];
        let b = vec![3, 1];
        let (g, s, t) = fp.ext_gcd(&a, &b);
        let lhs = fp.padd(&fp.pmul(&s, &a), &fp.pmul(&t, &b));
        assert_eq!(lhs, g);
    }
}
