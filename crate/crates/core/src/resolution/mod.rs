//! Graded free resolutions: Schreyer's construction, minimalization, Betti
//! numbers, the Taylor complex and a degree-wise exactness check.

mod betti;
mod exact;
mod minimal;
mod module;
mod schreyer;
mod taylor;

use std::fmt;

use thiserror::Error;

pub use betti::BettiTable;
pub use exact::{verify_exactness, verify_exactness_of, ExactnessReport};
pub use minimal::minimalize;
pub use module::{ModVec, ModuleOrder};
pub use schreyer::{evaluate_syzygy, free_resolution, schreyer_syzygies};
pub use taylor::taylor_complex;

use crate::poly::{Field, MonomialOrder, Polynomial};
use crate::slicefamily::Shape;
use crate::witness::DepthZeroCertificate;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResolutionError {
    #[error("ideal is not generated by monomials")]
    NotMonomial,
    #[error("ideal is not homogeneous; graded checks need homogeneous input")]
    NotHomogeneous,
    #[error("depth-zero certificate for {0} did not pass")]
    NotCertified(String),
}

/// A graded free module `⊕ R(−d_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    degrees: Vec<i64>,
}

impl FreeModule {
    pub fn new(degrees: Vec<i64>) -> Self {
        FreeModule { degrees }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// Degrees of the basis elements.
    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    fn remove(&mut self, k: usize) {
        self.degrees.remove(k);
    }
}

/// A map between free modules, stored by columns: `columns[c][r]` is the
/// coefficient of target basis element `r` in the image of source element `c`.
#[derive(Clone, Debug)]
pub struct PolyMatrix {
    columns: Vec<ModVec>,
    source: FreeModule,
    target: FreeModule,
}

impl PolyMatrix {
    pub fn from_columns(columns: Vec<ModVec>, source: FreeModule, target: FreeModule) -> Self {
        assert_eq!(
            columns.len(),
            source.rank(),
            "column count must match source rank"
        );
        assert!(
            columns.iter().all(|c| c.len() == target.rank()),
            "column length must match target rank"
        );
        PolyMatrix {
            columns,
            source,
            target,
        }
    }

    pub fn columns(&self) -> &[ModVec] {
        &self.columns
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.columns[col][row]
    }

    pub fn rows(&self) -> usize {
        self.target.rank()
    }

    pub fn cols(&self) -> usize {
        self.source.rank()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols(), other.rows(), "incompatible matrices");
        let (field, order) = self
            .field_order()
            .or_else(|| other.field_order())
            .unwrap_or((Field::Rational, MonomialOrder::Grevlex));
        let columns = other
            .columns
            .iter()
            .map(|c| module::combine(c, &self.columns, self.rows(), field, order))
            .collect();
        PolyMatrix::from_columns(columns, other.source.clone(), self.target.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| module::is_zero_vec(c))
    }

    fn field_order(&self) -> Option<(Field, MonomialOrder)> {
        self.columns
            .iter()
            .flatten()
            .next()
            .map(|p| (p.field(), p.order()))
    }
}

/// `0 ← F_0 ← F_1 ← … ← F_ℓ ← 0` resolving `R/I`; `maps[k]` is
/// `d_{k+1}: F_{k+1} → F_k`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub(crate) modules: Vec<FreeModule>,
    pub(crate) maps: Vec<PolyMatrix>,
    pub(crate) minimal: bool,
    pub(crate) truncated: bool,
    pub(crate) field: Field,
    pub(crate) order: MonomialOrder,
    pub(crate) nvars: u32,
}

impl FreeResolution {
    pub fn modules(&self) -> &[FreeModule] {
        &self.modules
    }

    pub fn maps(&self) -> &[PolyMatrix] {
        &self.maps
    }

    /// Index of the last nonzero module.
    pub fn length(&self) -> usize {
        self.modules.iter().rposition(|m| m.rank() > 0).unwrap_or(0)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(FreeModule::rank).collect()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Construction stopped at the requested length with syzygies left.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> u32 {
        self.nvars
    }

    /// `d_k ∘ d_{k+1} = 0` for every pair of consecutive maps.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].compose(&w[1]).is_zero())
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable::from_resolution(self)
    }
}

impl fmt::Display for FreeResolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ranks: Vec<String> = self.ranks().iter().map(|r| format!("R^{r}")).collect();
        write!(f, "{}", ranks.join(" <- "))
    }
}

/// Projective dimension from a passing depth-zero certificate: depth 0
/// and Auslander–Buchsbaum give `pd R/I = number of variables`.
pub fn ab_projdim(shape: &Shape, cert: &DepthZeroCertificate) -> Result<u64, ResolutionError> {
    if !cert.verdict || cert.shape != *shape {
        return Err(ResolutionError::NotCertified(shape.to_string()));
    }
    Ok(shape.num_vars() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::poly::Monomial;
    use crate::slicefamily::build_ideal;
    use crate::witness::{certify_depth_zero, ColonPlan};
    use crate::Execution;

    fn mono_ideal(ms: &[Monomial], n: u32) -> Ideal {
        Ideal::monomial_ideal(ms, n, Field::Rational, MonomialOrder::Grevlex)
    }

    #[test]
    fn principal_ideal() {
        let i = mono_ideal(&[Monomial::var(0)], 1);
        let r = minimalize(&free_resolution(&i, 5));
        assert_eq!(r.ranks(), vec![1, 1]);
        assert_eq!(r.length(), 1);
    }

    #[test]
    fn koszul_two_variables() {
        let i = mono_ideal(&[Monomial::var(0), Monomial::var(1)], 2);
        let r = minimalize(&free_resolution(&i, 5));
        assert_eq!(r.ranks(), vec![1, 2, 1]);
        assert!(r.is_complex());
        assert_eq!(r.betti().get(2, 2), 1);
    }

    #[test]
    fn taylor_of_two_monomials() {
        let x2 = Monomial::var_pow(0, 2);
        let xy = Monomial::from_pairs([(0, 1), (1, 1)]);
        let t = taylor_complex(&mono_ideal(&[x2, xy], 2)).unwrap();
        assert_eq!(t.ranks(), vec![1, 2, 1]);
        assert!(t.is_complex());
        assert_eq!(t.modules()[2].degrees(), &[3]);
        assert!(verify_exactness(&t, 6).unwrap().exact);
    }

    #[test]
    fn slice_2x2_resolution() {
        let shape = Shape::new(vec![2, 2]).unwrap();
        let ideal = build_ideal(&shape).to_ideal();
        let full = free_resolution(&ideal, 10);
        assert!(!full.is_truncated());
        assert!(full.is_complex());
        let r = minimalize(&full);
        assert!(r.is_minimal());
        assert!(r.is_complex());
        assert_eq!(r.length(), 4);
        let b = r.betti();
        assert_eq!(b.total(0), 1);
        assert_eq!(b.total(1), 3);
        assert!(verify_exactness(&r, 6).unwrap().exact);
        let cert = certify_depth_zero(&shape, ColonPlan::Auto, Execution::Sequential);
        assert_eq!(ab_projdim(&shape, &cert).unwrap(), r.length() as u64);
    }

    #[test]
    fn slice_2x2_betti_table() {
        let shape = Shape::new(vec![2, 2]).unwrap();
        let r = minimalize(&free_resolution(&build_ideal(&shape).to_ideal(), 10));
        let expected = "       0 1 2 3 4\n\
                        total: 1 3 5 4 1\n\
                        \x20   0: 1 . . . .\n\
                        \x20   1: . 3 . . .\n\
                        \x20   2: . . 5 4 1\n";
        assert_eq!(r.betti().to_string(), expected);
        assert_eq!(r.betti().projdim(), 4);
    }

    #[test]
    fn minimalize_is_idempotent() {
        let shape = Shape::new(vec![2, 2]).unwrap();
        let r = minimalize(&free_resolution(&build_ideal(&shape).to_ideal(), 10));
        let again = minimalize(&r);
        assert_eq!(r.ranks(), again.ranks());
        assert_eq!(r.betti(), again.betti());
    }

    #[test]
    fn padded_identity_block_is_cancelled() {
        // Splice R(−2) --1--> R(−2) into the Koszul complex of (x, y).
        let i = mono_ideal(&[Monomial::var(0), Monomial::var(1)], 2);
        let r = minimalize(&free_resolution(&i, 5));
        let (field, order) = (r.field(), r.order());
        let zero = Polynomial::zero(field, order);
        let mut padded = r.clone();
        padded.modules[1] = FreeModule::new([r.modules[1].degrees(), &[2]].concat());
        padded.modules[2] = FreeModule::new([r.modules[2].degrees(), &[2]].concat());
        let mut d1 = r.maps[0].columns.clone();
        d1.push(vec![zero.clone()]);
        padded.maps[0] =
            PolyMatrix::from_columns(d1, padded.modules[1].clone(), padded.modules[0].clone());
        let mut d2: Vec<ModVec> = r.maps[1]
            .columns
            .iter()
            .map(|c| [c.clone(), vec![zero.clone()]].concat())
            .collect();
        d2.push(vec![
            zero.clone(),
            zero.clone(),
            Polynomial::one(field, order),
        ]);
        padded.maps[1] =
            PolyMatrix::from_columns(d2, padded.modules[2].clone(), padded.modules[1].clone());
        padded.minimal = false;
        assert!(padded.is_complex());
        assert_eq!(padded.ranks(), vec![1, 3, 2]);
        let m = minimalize(&padded);
        assert_eq!(m.ranks(), vec![1, 2, 1]);
        assert_eq!(m.betti(), r.betti());
    }

    #[test]
    fn uncertified_shapes_have_no_projdim() {
        let shape = Shape::new(vec![2, 2]).unwrap();
        let mut cert = certify_depth_zero(&shape, ColonPlan::Auto, Execution::Sequential);
        cert.verdict = false;
        assert!(ab_projdim(&shape, &cert).is_err());
    }
}
