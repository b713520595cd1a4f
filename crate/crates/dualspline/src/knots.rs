//! Clamped knot vectors on [0, 1].

use crate::error::{Result, SplineError};
use crate::real::Real;

/// Clamped knot vector of a spline space on [0, 1].
///
/// The full knot list carries the degree-plus-one copies of 0 and 1 at the
/// ends and the interior knots repeated by multiplicity, so a degree-n vector
/// with m interior knots (counted with multiplicity) has length 2n + m + 2
/// and the space dimension is n + m + 1.
///
/// Interior multiplicities never exceed the degree, which keeps every basis
/// function continuous; the one exception is degree 0, where simple interior
/// knots are allowed so that piecewise-constant spaces exist at all.
#[derive(Debug, Clone, PartialEq)]
pub struct KnotVector<T> {
    degree: usize,
    interior: Vec<(T, usize)>,
    full: Vec<T>,
}

impl<T: Real> KnotVector<T> {
    /// Validated construction from the degree and (position, multiplicity)
    /// pairs; positions must be strictly increasing inside (0, 1).
    pub fn new(degree: usize, interior: &[(T, usize)]) -> Result<Self> {
        let max_mult = degree.max(1);
        let mut prev: Option<T> = None;
        for &(pos, mult) in interior {
            let p = pos.to_f64().unwrap_or(f64::NAN);
            if !(pos > T::zero() && pos < T::one()) {
                return Err(SplineError::KnotOutOfRange { position: p });
            }
            if mult == 0 {
                return Err(SplineError::ZeroMultiplicity { position: p });
            }
            if mult > max_mult {
                return Err(SplineError::MultiplicityTooLarge {
                    position: p,
                    multiplicity: mult,
                    degree,
                    max_allowed: max_mult,
                });
            }
            if let Some(q) = prev {
                if pos <= q {
                    return Err(SplineError::KnotsNotIncreasing {
                        previous: q.to_f64().unwrap_or(f64::NAN),
                        current: p,
                    });
                }
            }
            prev = Some(pos);
        }

        let m: usize = interior.iter().map(|&(_, mult)| mult).sum();
        let mut full = Vec::with_capacity(2 * degree + m + 2);
        full.extend(std::iter::repeat_n(T::zero(), degree + 1));
        for &(pos, mult) in interior {
            full.extend(std::iter::repeat_n(pos, mult));
        }
        full.extend(std::iter::repeat_n(T::one(), degree + 1));

        Ok(KnotVector {
            degree,
            interior: interior.to_vec(),
            full,
        })
    }

    /// Knot vector with no interior knots (the polynomial case).
    pub fn bezier(degree: usize) -> Self {
        Self::new(degree, &[]).expect("no interior knots to validate")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Interior knots as (position, multiplicity) pairs.
    pub fn interior(&self) -> &[(T, usize)] {
        &self.interior
    }

    /// Interior knots flattened by multiplicity, ascending.
    pub fn interior_flat(&self) -> Vec<T> {
        self.interior
            .iter()
            .flat_map(|&(pos, mult)| std::iter::repeat_n(pos, mult))
            .collect()
    }

    /// Number of interior knots counted with multiplicity.
    pub fn interior_count(&self) -> usize {
        self.interior.iter().map(|&(_, m)| m).sum()
    }

    /// Dimension of the spline space, degree + interior count + 1.
    pub fn dim(&self) -> usize {
        self.degree + self.interior_count() + 1
    }

    /// The flattened knot list including the clamped ends.
    pub fn full(&self) -> &[T] {
        &self.full
    }

    /// Support of basis function `i` (0-based), as a closed interval.
    pub fn support(&self, i: usize) -> (T, T) {
        (self.full[i], self.full[i + self.degree + 1])
    }

    /// Knot vector over the first `k` interior knots (with multiplicity).
    pub fn prefix(&self, k: usize) -> Self {
        let flat = self.interior_flat();
        assert!(k <= flat.len(), "prefix length exceeds interior count");
        Self::new(self.degree, &group(&flat[..k])).expect("prefix of a valid vector is valid")
    }

    /// Same interior knots under a different degree.
    pub fn with_degree(&self, degree: usize) -> Result<Self> {
        Self::new(degree, &self.interior)
    }

    /// True when every interior knot of `coarse` appears here with at least
    /// the same multiplicity (positions compared exactly).
    pub fn refines(&self, coarse: &Self) -> bool {
        coarse
            .interior
            .iter()
            .all(|&(pos, mult)| self.interior.iter().any(|&(p, m)| p == pos && m >= mult))
    }

    /// Multiset check for knot removal: the kept interior knots must all come
    /// from this vector. Returns the offending position on failure.
    pub fn excess_of(&self, keep: &Self) -> Option<f64> {
        for &(pos, mult) in keep.interior() {
            let have = self
                .interior
                .iter()
                .find(|&&(p, _)| p == pos)
                .map_or(0, |&(_, m)| m);
            if mult > have {
                return Some(pos.to_f64().unwrap_or(f64::NAN));
            }
        }
        None
    }

    /// Nonempty knot intervals as (a, b) pairs covering [0, 1].
    pub fn spans(&self) -> Vec<(T, T)> {
        let n = self.degree;
        (n..n + self.interior_count() + 1)
            .map(|q| (self.full[q], self.full[q + 1]))
            .filter(|&(a, b)| b > a)
            .collect()
    }

    /// Distinct breakpoints 0 < t_1 < ... < 1.
    pub fn breakpoints(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.interior.len() + 2);
        out.push(T::zero());
        out.extend(self.interior.iter().map(|&(p, _)| p));
        out.push(T::one());
        out
    }

    /// Sorted distinct union of this vector's breakpoints and another's.
    pub fn merged_breakpoints(&self, other: &Self) -> Vec<T> {
        let mut all = self.breakpoints();
        all.extend(other.breakpoints());
        all.sort_by(|a, b| a.partial_cmp(b).expect("knots are ordered"));
        all.dedup();
        all
    }

    /// True when every interior knot is simple.
    pub fn is_simple(&self) -> bool {
        self.interior.iter().all(|&(_, m)| m == 1)
    }
}

/// Groups a sorted flat knot list back into (position, multiplicity) pairs.
pub(crate) fn group<T: Real>(flat: &[T]) -> Vec<(T, usize)> {
    let mut out: Vec<(T, usize)> = Vec::new();
    for &x in flat {
        match out.last_mut() {
            Some((p, m)) if *p == x => *m += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}
