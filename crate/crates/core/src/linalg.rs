//! Exact determinants and Pfaffians of matrices over a polynomial ring.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::graphs::Graph;
use crate::poly::{Coefficient, MultiPoly};
use crate::{Error, Rational, Result};

/// Dense square matrix of polynomials.
#[derive(Clone, PartialEq)]
pub struct PolyMatrix<C> {
    n: usize,
    data: Vec<MultiPoly<C>>,
}

impl<C: Coefficient> PolyMatrix<C> {
    pub fn new(rows: Vec<Vec<MultiPoly<C>>>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::Dimension(format!("row {r} has {} entries, expected {n}", rows[r].len())));
        }
        Ok(PolyMatrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| MultiPoly::int(x)).collect()).collect())
    }

    pub fn zeros(n: usize) -> Self {
        PolyMatrix { n, data: vec![MultiPoly::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(vec![MultiPoly::one(); n])
    }

    pub fn diagonal(entries: Vec<MultiPoly<C>>) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, d) in entries.into_iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly<C> {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: MultiPoly<C>) {
        self.data[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Dimension(format!("{} vs {}", self.n, other.n)));
        }
        Ok(PolyMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        PolyMatrix { n: self.n, data: self.data.iter().map(|a| -a).collect() }
    }

    /// Drops row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let mut data = Vec::with_capacity((self.n - 1) * (self.n - 1));
        for i in (0..self.n).filter(|&i| i != r) {
            for j in (0..self.n).filter(|&j| j != c) {
                data.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { n: self.n - 1, data }
    }

    /// Keeps only the rows and columns in `keep`, in that order.
    pub fn principal(&self, keep: &[usize]) -> Self {
        let mut data = Vec::with_capacity(keep.len() * keep.len());
        for &i in keep {
            for &j in keep {
                data.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { n: keep.len(), data }
    }

    /// Fraction-free Gaussian elimination (Bareiss). Every division is exact.
    pub fn det(&self) -> MultiPoly<C> {
        let n = self.n;
        if n == 0 {
            return MultiPoly::one();
        }
        let mut a: Vec<Vec<MultiPoly<C>>> =
            (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut negate = false;
        let mut prev = MultiPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return MultiPoly::zero();
                };
                a.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
                a[i][k] = MultiPoly::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Cofactor expansion along the first row.
    pub fn det_laplace(&self) -> MultiPoly<C> {
        if self.n == 0 {
            return MultiPoly::one();
        }
        let mut total = MultiPoly::zero();
        for j in 0..self.n {
            let a = self.get(0, j);
            if a.is_zero() {
                continue;
            }
            let term = a * &self.minor(0, j).det_laplace();
            if j % 2 == 0 {
                total += term;
            } else {
                total -= &term;
            }
        }
        total
    }

    fn check_skew(&self) -> Result<()> {
        for i in 0..self.n {
            for j in i..self.n {
                if *self.get(i, j) != -self.get(j, i) {
                    return Err(Error::NotSkewSymmetric(i, j));
                }
            }
        }
        Ok(())
    }

    /// Signed sum over perfect matchings; the matching {12, 34, …} has sign +1.
    pub fn pfaffian(&self) -> Result<MultiPoly<C>> {
        self.check_skew()?;
        if self.n % 2 == 1 {
            return Ok(MultiPoly::zero());
        }
        let mut total = MultiPoly::zero();
        let mut pairs = Vec::with_capacity(self.n / 2);
        let mut used = vec![false; self.n];
        self.matchings(&mut used, &mut pairs, &mut total);
        Ok(total)
    }

    fn matchings(&self, used: &mut [bool], pairs: &mut Vec<(usize, usize)>, total: &mut MultiPoly<C>) {
        let Some(i) = used.iter().position(|u| !u) else {
            let perm: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
            let mut term = MultiPoly::one();
            for &(a, b) in pairs.iter() {
                term = &term * self.get(a, b);
            }
            if permutation_is_odd(&perm) {
                *total -= &term;
            } else {
                *total += term;
            }
            return;
        };
        used[i] = true;
        for j in i + 1..self.n {
            if used[j] || self.get(i, j).is_zero() {
                continue;
            }
            used[j] = true;
            pairs.push((i, j));
            self.matchings(used, pairs, total);
            pairs.pop();
            used[j] = false;
        }
        used[i] = false;
    }

    /// Expansion along the first row: Pf(A) = Σ_j (−1)^{j+1} a_{1j} Pf(A without rows/cols 1, j).
    pub fn pfaffian_expansion(&self) -> Result<MultiPoly<C>> {
        self.check_skew()?;
        Ok(self.pf_expand())
    }

    fn pf_expand(&self) -> MultiPoly<C> {
        if self.n == 0 {
            return MultiPoly::one();
        }
        if self.n % 2 == 1 {
            return MultiPoly::zero();
        }
        let mut total = MultiPoly::zero();
        for j in 1..self.n {
            let a = self.get(0, j);
            if a.is_zero() {
                continue;
            }
            let keep: Vec<usize> = (1..self.n).filter(|&k| k != j).collect();
            let term = a * &self.principal(&keep).pf_expand();
            if j % 2 == 1 {
                total += term;
            } else {
                total -= &term;
            }
        }
        total
    }
}

fn permutation_is_odd(p: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// σ_n in det(D + A) = σ_n · Pf([[A, D], [−D, −A]]).
pub fn pfaffian_sign_constant(n: usize) -> i64 {
    if (n * (n.saturating_sub(1)) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The 2n × 2n skew matrix [[A, D], [−D, −A]].
pub fn skew_assembly<C: Coefficient>(d: &[MultiPoly<C>], a: &PolyMatrix<C>) -> Result<PolyMatrix<C>> {
    let n = a.dim();
    if d.len() != n {
        return Err(Error::Dimension(format!("diagonal has {} entries, matrix is {n}x{n}", d.len())));
    }
    let mut k = PolyMatrix::zeros(2 * n);
    for i in 0..n {
        for j in 0..n {
            k.set(i, j, a.get(i, j).clone());
            k.set(n + i, n + j, -a.get(i, j));
        }
        k.set(i, n + i, d[i].clone());
        k.set(n + i, i, -&d[i]);
    }
    Ok(k)
}

/// Checks det(D + A) = σ_n · Pf([[A, D], [−D, −A]]) for diagonal D and skew A.
pub fn det_d_plus_a_identity<C: Coefficient>(d: &[MultiPoly<C>], a: &PolyMatrix<C>) -> Result<bool> {
    let k = skew_assembly(d, a)?;
    let lhs = PolyMatrix::diagonal(d.to_vec()).add(a)?.det();
    let rhs = k.pfaffian()?.scale(&C::from_int(pfaffian_sign_constant(a.dim())));
    Ok(lhs == rhs)
}

/// Kirchhoff count of spanning trees: any cofactor of the Laplacian. Self-loops
/// do not contribute.
pub fn matrix_tree_count(g: &Graph) -> BigInt {
    let n = g.num_vertices();
    if n == 0 {
        return BigInt::from(0);
    }
    let mut lap = vec![vec![0i64; n]; n];
    for e in g.edges().iter().filter(|e| !e.is_loop()) {
        lap[e.tail][e.tail] += 1;
        lap[e.head][e.head] += 1;
        lap[e.tail][e.head] -= 1;
        lap[e.head][e.tail] -= 1;
    }
    let m = PolyMatrix::<Rational>::from_ints(&lap).expect("square").minor(0, 0);
    let d = m.det();
    let c = d.as_constant().unwrap_or_else(|| Rational::from_integer(0.into()));
    debug_assert!(c.is_integer());
    c.to_integer()
}

/// Number of spanning trees as a machine integer, when it fits.
pub fn matrix_tree_count_u64(g: &Graph) -> Option<u64> {
    matrix_tree_count(g).to_u64()
}

impl<C: Coefficient> fmt::Debug for PolyMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Poly;

    type M = PolyMatrix<Rational>;

    fn v(name: &str) -> Poly {
        Poly::var(name)
    }

    #[test]
    fn small_determinants() {
        assert!(M::identity(3).det().is_one());
        let d = M::diagonal(vec![v("a.e1"), v("a.e2")]);
        assert_eq!(d.det().canonical_string(), "a.e1*a.e2");
        assert_eq!(d.det_laplace(), d.det());
        let m = M::from_ints(&[vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 9]]).unwrap();
        assert_eq!(m.det(), Poly::int(-3));
        assert_eq!(m.det_laplace(), Poly::int(-3));
    }

    #[test]
    fn pfaffian_basics() {
        let a = M::new(vec![vec![Poly::zero(), v("a")], vec![-v("a"), Poly::zero()]]).unwrap();
        assert_eq!(a.pfaffian().unwrap(), v("a"));
        assert!(M::zeros(3).pfaffian().unwrap().is_zero());
        let bad = M::from_ints(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(bad.pfaffian(), Err(Error::NotSkewSymmetric(0, 1)));
        // generic 4x4: Pf = a12 a34 − a13 a24 + a14 a23
        let names = ["p", "q", "r", "s", "t", "u"];
        let mut m = M::zeros(4);
        let mut k = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                m.set(i, j, v(names[k]));
                m.set(j, i, -v(names[k]));
                k += 1;
            }
        }
        let pf = m.pfaffian().unwrap();
        assert_eq!(pf.canonical_string(), "p*u - q*t + r*s");
        assert_eq!(pf, m.pfaffian_expansion().unwrap());
        assert_eq!(&pf * &pf, m.det());
    }

    #[test]
    fn sign_constant_small_cases() {
        assert_eq!(pfaffian_sign_constant(1), 1);
        assert_eq!(pfaffian_sign_constant(2), -1);
        let d = vec![v("d1"), v("d2")];
        let mut a = M::zeros(2);
        a.set(0, 1, v("x"));
        a.set(1, 0, -v("x"));
        assert!(det_d_plus_a_identity(&d, &a).unwrap());
        assert!(det_d_plus_a_identity(&[v("d")], &M::zeros(1)).unwrap());
    }

    #[test]
    fn kirchhoff() {
        let k3 = Graph::builder()
            .vertices(&["a", "b", "c"])
            .edge("e1", "a", "b")
            .edge("e2", "b", "c")
            .edge("e3", "c", "a")
            .edge("e4", "c", "c")
            .build()
            .unwrap();
        assert_eq!(matrix_tree_count(&k3), BigInt::from(3));
    }
}
