use std::collections::HashSet;

use super::SliceError;
use crate::poly::Polynomial;

/// Size of a monomial support.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct SupportCount {
    /// Terms summed over all generators.
    pub multiplicity: usize,
    /// Distinct monomials among those terms.
    pub distinct: usize,
}

pub fn support_count(gens: &[Polynomial]) -> SupportCount {
    let distinct: HashSet<_> = gens.iter().flat_map(|g| g.monomials()).collect();
    SupportCount {
        multiplicity: gens.iter().map(Polynomial::len).sum(),
        distinct: distinct.len(),
    }
}

/// `Σ_{i=0}^{r−1} (N − 2i) = −r² + r(N + 1)`, the support bound for `r`
/// interreduced generators in `N` monomials of one degree.
pub fn support_bound(n: i64, r: i64) -> Result<i64, SliceError> {
    if r < 1 || r > n {
        return Err(SliceError::BoundOutOfRange { n, r });
    }
    Ok(-r * r + r * (n + 1))
}

/// `max_r support_bound(N, r)` together with the maximizing `r`.
pub fn max_support_bound(n: i64) -> (i64, i64) {
    (1..=n)
        .map(|r| (support_bound(n, r).expect("in range"), r))
        .fold(
            (i64::MIN, 0),
            |best, cur| if cur.0 > best.0 { cur } else { best },
        )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slicefamily::{build_ideal, Shape};

    #[test]
    fn quadratic_values() {
        assert_eq!(support_bound(3, 1).unwrap(), 3);
        assert_eq!(support_bound(3, 2).unwrap(), 4);
        assert_eq!(support_bound(3, 3).unwrap(), 3);
        assert_eq!(max_support_bound(3), (4, 2));
        assert_eq!(support_bound(5, 3).unwrap(), 9);
        assert_eq!(support_bound(7, 1).unwrap(), 7);
        assert!(support_bound(3, 0).is_err());
        assert!(support_bound(3, 4).is_err());
    }

    #[test]
    fn slice_supports() {
        let s = Shape::new(vec![2, 2]).unwrap();
        let c = support_count(&build_ideal(&s).generators());
        assert_eq!(
            c,
            SupportCount {
                multiplicity: 4,
                distinct: 4
            }
        );
        assert_eq!(support_count(&[]), SupportCount::default());
    }
}
