use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalars::GaussianRational;

/// Sparse vector over basis indices with constant coefficients.
pub type ConstVec = Vec<(usize, GaussianRational)>;

/// Shared handle to an algebra; elements keep one so brackets need no context.
pub type Algebra = Arc<LieAlgebra>;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// A finite-dimensional Lie algebra given by structure constants in a fixed
/// ordered basis. The basis order doubles as the PBW order.
#[derive(Debug)]
pub struct LieAlgebra {
    id: u64,
    name: String,
    basis: Vec<String>,
    table: Vec<Vec<ConstVec>>,
    star: Option<Vec<ConstVec>>,
    grading: Vec<i32>,
}

impl LieAlgebra {
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn generator_name(&self, j: usize) -> &str {
        &self.basis[j]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| Error::UnknownGenerator(format!("{name} (in {})", self.name)))
    }

    /// `[g_j, g_k]` as a sparse combination of basis elements.
    pub fn bracket_basis(&self, j: usize, k: usize) -> &ConstVec {
        &self.table[j][k]
    }

    pub fn structure_constant(&self, j: usize, k: usize, l: usize) -> GaussianRational {
        self.table[j][k]
            .iter()
            .find(|(m, _)| *m == l)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn grading(&self) -> &[i32] {
        &self.grading
    }

    pub fn has_star(&self) -> bool {
        self.star.is_some()
    }

    pub fn star_basis(&self, j: usize) -> Result<&ConstVec> {
        match &self.star {
            Some(s) => Ok(&s[j]),
            None => Err(Error::NoStar(self.name.clone())),
        }
    }

    /// True when every bracket among the listed generators vanishes.
    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|row| row.iter().all(|v| v.is_empty()))
    }

    /// Every basis triple `j < k < l` on which the Jacobi identity fails.
    pub fn jacobi_failures(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let mut acc: BTreeMap<usize, GaussianRational> = BTreeMap::new();
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        for (m, k1) in &self.table[y][z] {
                            for (l, k2) in &self.table[x][*m] {
                                *acc.entry(*l).or_default() += &(k1 * k2);
                            }
                        }
                    }
                    if acc.values().any(|v| !v.is_zero()) {
                        out.push((a, b, c));
                    }
                }
            }
        }
        out
    }

    /// Pass/fail Jacobi check returning the first offending triple by name.
    pub fn check_jacobi(&self) -> std::result::Result<(), (String, String, String)> {
        match self.jacobi_failures().first() {
            None => Ok(()),
            Some(&(a, b, c)) => Err((
                self.basis[a].clone(),
                self.basis[b].clone(),
                self.basis[c].clone(),
            )),
        }
    }

    fn star_vec(&self, v: &ConstVec) -> Result<BTreeMap<usize, GaussianRational>> {
        let mut out: BTreeMap<usize, GaussianRational> = BTreeMap::new();
        for (j, c) in v {
            for (l, d) in self.star_basis(*j)? {
                *out.entry(*l).or_default() += &(&c.conj() * d);
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    fn bracket_vecs(&self, x: &ConstVec, y: &ConstVec) -> BTreeMap<usize, GaussianRational> {
        let mut out: BTreeMap<usize, GaussianRational> = BTreeMap::new();
        for (j, a) in x {
            for (k, b) in y {
                for (l, c) in &self.table[*j][*k] {
                    *out.entry(*l).or_default() += &(&(a * b) * c);
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Checks that the star map is an involution with `[x,y]* = [y*,x*]`.
    pub fn check_star(&self) -> Result<()> {
        if self.star.is_none() {
            return Ok(());
        }
        let n = self.dim();
        for j in 0..n {
            let once: ConstVec = self.star_vec(&vec![(j, GaussianRational::one())])?.into_iter().collect();
            let twice = self.star_vec(&once)?;
            if twice.len() != 1 || !twice.get(&j).is_some_and(|c| c.is_one()) {
                return Err(Error::Invalid(format!(
                    "star is not an involution on {}",
                    self.basis[j]
                )));
            }
        }
        for j in 0..n {
            for k in 0..n {
                let lhs = self.star_vec(&self.table[j][k])?;
                let sj: ConstVec = self.star_vec(&vec![(j, GaussianRational::one())])?.into_iter().collect();
                let sk: ConstVec = self.star_vec(&vec![(k, GaussianRational::one())])?.into_iter().collect();
                let rhs = self.bracket_vecs(&sk, &sj);
                if lhs != rhs {
                    return Err(Error::Invalid(format!(
                        "star is not an anti-automorphism on [{}, {}]",
                        self.basis[j], self.basis[k]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Checks `deg g_l >= deg g_j + deg g_k` for every nonzero `c_{jk}^l`.
    pub fn check_grading(&self) -> Result<()> {
        for j in 0..self.dim() {
            for k in 0..self.dim() {
                for (l, _) in &self.table[j][k] {
                    if self.grading[*l] < self.grading[j] + self.grading[k] {
                        return Err(Error::Invalid(format!(
                            "grading violated by [{}, {}] -> {}",
                            self.basis[j], self.basis[k], self.basis[*l]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Plain-text table, one line `[x, y] : z = c` per nonzero constant with
    /// `x` before `y` in the basis order.
    pub fn structure_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# algebra {}", self.name);
        let _ = writeln!(s, "# basis {}", self.basis.join(" "));
        for j in 0..self.dim() {
            for k in j + 1..self.dim() {
                for (l, c) in &self.table[j][k] {
                    let _ = writeln!(
                        s,
                        "[{}, {}] : {} = {}",
                        self.basis[j], self.basis[k], self.basis[*l], c
                    );
                }
            }
        }
        s
    }
}

/// Incremental construction of a [`LieAlgebra`] from named brackets.
#[derive(Clone, Debug)]
pub struct LieAlgebraBuilder {
    name: String,
    basis: Vec<String>,
    table: BTreeMap<(usize, usize), BTreeMap<usize, GaussianRational>>,
    star: Option<Vec<ConstVec>>,
    grading: Option<Vec<i32>>,
}

impl LieAlgebraBuilder {
    pub fn new(name: &str, basis: &[&str]) -> Self {
        LieAlgebraBuilder {
            name: name.to_string(),
            basis: basis.iter().map(|s| s.to_string()).collect(),
            table: BTreeMap::new(),
            star: None,
            grading: None,
        }
    }

    fn idx(&self, name: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    fn vec(&self, terms: &[(&str, GaussianRational)]) -> Result<ConstVec> {
        let mut m: BTreeMap<usize, GaussianRational> = BTreeMap::new();
        for (n, c) in terms {
            *m.entry(self.idx(n)?).or_default() += c;
        }
        Ok(m.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    /// Declares `[x, y] = Σ c·z`; the opposite bracket is filled in by
    /// antisymmetry.
    pub fn bracket(mut self, x: &str, y: &str, value: &[(&str, GaussianRational)]) -> Result<Self> {
        let (j, k) = (self.idx(x)?, self.idx(y)?);
        if j == k {
            return Err(Error::Invalid(format!("[{x}, {x}] must vanish")));
        }
        let v = self.vec(value)?;
        let pos: BTreeMap<_, _> = v.iter().cloned().collect();
        let neg: BTreeMap<_, _> = v.iter().map(|(l, c)| (*l, -c)).collect();
        self.table.insert((j, k), pos);
        self.table.insert((k, j), neg);
        Ok(self)
    }

    /// Overwrites a single structure constant `c_{xy}^z` (and its antisymmetric
    /// partner); meant for building deliberately broken variants.
    pub fn set_constant(mut self, x: &str, y: &str, z: &str, c: GaussianRational) -> Result<Self> {
        let (j, k, l) = (self.idx(x)?, self.idx(y)?, self.idx(z)?);
        let neg = -&c;
        let e = self.table.entry((j, k)).or_default();
        e.insert(l, c);
        e.retain(|_, v| !v.is_zero());
        let e = self.table.entry((k, j)).or_default();
        e.insert(l, neg);
        e.retain(|_, v| !v.is_zero());
        Ok(self)
    }

    /// Star images of each generator, listed in basis order.
    pub fn star(mut self, images: &[(&str, &[(&str, GaussianRational)])]) -> Result<Self> {
        let mut s = vec![Vec::new(); self.basis.len()];
        for (g, img) in images {
            s[self.idx(g)?] = self.vec(img)?;
        }
        if s.iter().any(|v| v.is_empty()) {
            return Err(Error::Invalid("star map must be given on every generator".into()));
        }
        self.star = Some(s);
        Ok(self)
    }

    pub fn grading(mut self, degrees: &[i32]) -> Result<Self> {
        if degrees.len() != self.basis.len() {
            return Err(Error::Invalid("grading length differs from basis size".into()));
        }
        self.grading = Some(degrees.to_vec());
        Ok(self)
    }

    /// Builds without running any consistency check.
    pub fn build_unchecked(self) -> Algebra {
        let n = self.basis.len();
        let mut table = vec![vec![Vec::new(); n]; n];
        for ((j, k), v) in self.table {
            table[j][k] = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        Arc::new(LieAlgebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            name: self.name,
            grading: self.grading.unwrap_or_else(|| vec![0; n]),
            basis: self.basis,
            table,
            star: self.star,
        })
    }

    /// Builds and checks Jacobi, star compatibility and the grading.
    pub fn build(self) -> Result<Algebra> {
        let alg = self.build_unchecked();
        if let Err((a, b, c)) = alg.check_jacobi() {
            return Err(Error::Invalid(format!(
                "Jacobi identity fails on ({a}, {b}, {c}) in {}",
                alg.name()
            )));
        }
        alg.check_star()?;
        alg.check_grading()?;
        Ok(alg)
    }
}
