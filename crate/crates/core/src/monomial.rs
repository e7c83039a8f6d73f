use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// An exponent vector. The derived order is replaced by degree reverse
/// lexicographic order, which is used everywhere except where a Gröbner
/// computation asks for something else.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exps(exps: Vec<u16>) -> Self {
        Monomial(exps)
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a > b {
                return None;
            }
            out.push(b - a);
        }
        Some(Monomial(out))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    /// Divides by `α_i`, if possible.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some(Monomial(e))
    }

    /// Appends `k` extra variables with exponent zero.
    pub fn extend(&self, k: usize) -> Monomial {
        let mut e = self.0.clone();
        e.resize(e.len() + k, 0);
        Monomial(e)
    }

    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        // Reverse lex: the monomial with the smaller exponent in the last
        // differing variable is larger.
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `d` in `n` variables, ascending in degrevlex.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; n];
    fill(&mut cur, 0, d, &mut out);
    out.sort();
    out
}

fn fill(cur: &mut [u16], pos: usize, left: usize, out: &mut Vec<Monomial>) {
    if cur.is_empty() {
        if left == 0 {
            out.push(Monomial(Vec::new()));
        }
        return;
    }
    if pos + 1 == cur.len() {
        cur[pos] = left as u16;
        out.push(Monomial(cur.to_vec()));
        return;
    }
    for e in 0..=left {
        cur[pos] = e as u16;
        fill(cur, pos + 1, left - e, out);
    }
    cur[pos] = 0;
}

/// Binomial coefficient, saturating at `usize::MAX`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// Number of monomials of degree `< d` in `n` variables.
pub fn count_below(n: usize, d: usize) -> usize {
    if d == 0 {
        0
    } else {
        binomial(n + d - 1, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_examples() {
        let m = |v: &[u16]| Monomial::from_exps(v.to_vec());
        // x1^2 > x1x2 > x2^2 > x1x3 > x2x3 > x3^2
        let mut mons = monomials_of_degree(3, 2);
        mons.reverse();
        assert_eq!(mons, [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])]);
        assert!(m(&[0, 0, 3]) > m(&[2, 0, 0]));
    }

    #[test]
    fn counts() {
        assert_eq!(monomials_of_degree(4, 3).len(), binomial(6, 3));
        assert_eq!(count_below(6, 8), 1716);
        assert_eq!(count_below(1, 4), 4);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
    }
}
