use std::cmp::Ordering;
use std::fmt;

use super::monomial::{Monomial, VarId};
use super::order::MonomialOrder;
use super::scalar::{Field, Scalar};
use super::PolyError;

/// A sparse polynomial whose terms are kept strictly descending in `order`,
/// with no zero coefficients and no repeated monomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    order: MonomialOrder,
    terms: Vec<(Scalar, Monomial)>,
}

impl Polynomial {
    pub fn zero(field: Field, order: MonomialOrder) -> Self {
        Polynomial {
            field,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: Field, order: MonomialOrder, c: Scalar) -> Self {
        Polynomial::term(field, order, c, Monomial::one())
    }

    pub fn one(field: Field, order: MonomialOrder) -> Self {
        Polynomial::constant(field, order, field.one())
    }

    pub fn term(field: Field, order: MonomialOrder, c: Scalar, m: Monomial) -> Self {
        assert_eq!(
            c.field(),
            field,
            "coefficient outside the polynomial's field"
        );
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(c, m)]
        };
        Polynomial {
            field,
            order,
            terms,
        }
    }

    /// Monomial with coefficient one.
    pub fn monomial(field: Field, order: MonomialOrder, m: Monomial) -> Self {
        Polynomial::term(field, order, field.one(), m)
    }

    /// Builds the canonical form of an arbitrary term list.
    pub fn from_terms<I>(field: Field, order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Scalar, Monomial)>,
    {
        let mut terms: Vec<(Scalar, Monomial)> = terms.into_iter().collect();
        for (c, _) in &terms {
            assert_eq!(
                c.field(),
                field,
                "coefficient outside the polynomial's field"
            );
        }
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        let mut out: Vec<(Scalar, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some((d, n)) if *n == m => *d = d.add(&c),
                _ => {
                    if out.last().is_some_and(|(d, _)| d.is_zero()) {
                        out.pop();
                    }
                    out.push((c, m));
                }
            }
        }
        if out.last().is_some_and(|(d, _)| d.is_zero()) {
            out.pop();
        }
        Polynomial {
            field,
            order,
            terms: out,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Scalar, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Scalar, Monomial)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// A nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn lead_term(&self) -> Option<(&Scalar, &Monomial)> {
        self.terms.first().map(|(c, m)| (c, m))
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn lead_coefficient(&self) -> Option<&Scalar> {
        self.terms.first().map(|(c, _)| c)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(_, m)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|(_, n)| n == m)
            .map(|(c, _)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(_, m)| m)
    }

    /// The same polynomial sorted for another order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        Polynomial {
            field: self.field,
            order,
            terms,
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.field != other.field {
            return Err(PolyError::FieldMismatch(self.field, other.field));
        }
        if self.order != other.order {
            return Err(PolyError::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        Ok(self.merge(other, None))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        Ok(self.merge(other, Some((&self.field.one().neg(), &Monomial::one()))))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        let mut acc = Polynomial::zero(self.field, self.order);
        // multiply the shorter operand term by term into the longer one
        let (short, long) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (c, m) in &short.terms {
            acc = acc.merge(long, Some((c, m)));
        }
        Ok(acc)
    }

    #[track_caller]
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.try_add(other).unwrap_or_else(|e| panic!("{e}"))
    }

    #[track_caller]
    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.try_sub(other).unwrap_or_else(|e| panic!("{e}"))
    }

    #[track_caller]
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            field: self.field,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (c.neg(), m.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(c, &Monomial::one())
    }

    /// `c * m * self`; the order is multiplicative so no resort is needed.
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field, self.order);
        }
        Polynomial {
            field: self.field,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(d, n)| (d.mul(c), n.mul(m)))
                .collect(),
        }
    }

    /// `self + c * m * other` in one merge pass.
    pub fn add_scaled(&self, c: &Scalar, m: &Monomial, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.field, other.field);
        debug_assert_eq!(self.order, other.order);
        self.merge(other, Some((c, m)))
    }

    fn merge(&self, other: &Polynomial, factor: Option<(&Scalar, &Monomial)>) -> Polynomial {
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let shifted = other.terms.iter().map(|(c, m)| match factor {
            None => (c.clone(), m.clone()),
            Some((f, n)) => (c.mul(f), m.mul(n)),
        });
        let mut b = shifted.peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.compare(&x.1, &y.1),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let t = b.next().unwrap();
                    if !t.0.is_zero() {
                        out.push(t);
                    }
                }
                Ordering::Equal => {
                    let (c, m) = a.next().unwrap();
                    let (d, _) = b.next().unwrap();
                    let s = c.add(&d);
                    if !s.is_zero() {
                        out.push((s, m.clone()));
                    }
                }
            }
        }
        Polynomial {
            field: self.field,
            order,
            terms: out,
        }
    }

    /// Scales so the leading coefficient is one.
    pub fn make_monic(&self) -> Polynomial {
        match self.lead_coefficient() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero lead")),
        }
    }

    /// Exact division of every term by `m`; `None` if some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(c, n)| n.div(m).map(|q| (c.clone(), q)))
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial {
            field: self.field,
            order: self.order,
            terms,
        })
    }

    /// Renames variables; the result is resorted.
    pub fn map_vars(&self, order: MonomialOrder, f: impl Fn(VarId) -> VarId) -> Polynomial {
        Polynomial::from_terms(
            self.field,
            order,
            self.terms.iter().map(|(c, m)| (c.clone(), m.map_vars(&f))),
        )
    }

    /// Coefficient-wise reduction mod `p`. Fails if some denominator is divisible by `p`.
    pub fn reduce_mod(&self, p: u32) -> Result<Polynomial, PolyError> {
        let field = Field::prime(p)?;
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                c.reduce_mod(p)
                    .map(|r| (r, m.clone()))
                    .ok_or(PolyError::DenominatorVanishes { modulus: p })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::from_terms(field, self.order, terms))
    }

    /// Reinterprets the coefficients in another field (integers map to
    /// their residues). Used to lift `±1` generators across characteristics.
    pub fn to_field(&self, field: Field) -> Result<Polynomial, PolyError> {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let q = match c {
                    Scalar::Rational(q) => q.clone(),
                    Scalar::Residue { value, .. } => {
                        num_rational::BigRational::from_integer((*value).into())
                    }
                };
                field.from_rational(&q).map(|s| (s, m.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::from_terms(field, self.order, terms))
    }

    /// Detaches the leading term.
    pub fn split_lead(mut self) -> Option<((Scalar, Monomial), Polynomial)> {
        if self.terms.is_empty() {
            return None;
        }
        let lead = self.terms.remove(0);
        Some((lead, self))
    }

    /// Wraps terms that are already canonical for `order` (descending,
    /// distinct, nonzero). Checked in debug builds.
    pub(crate) fn from_sorted_terms(
        field: Field,
        order: MonomialOrder,
        terms: Vec<(Scalar, Monomial)>,
    ) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| order.compare(&w[0].1, &w[1].1) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(c, _)| !c.is_zero()));
        Polynomial {
            field,
            order,
            terms,
        }
    }

    /// Re-normalizes; a no-op on canonical input.
    pub fn normalized(&self) -> Polynomial {
        Polynomial::from_terms(self.field, self.order, self.terms.iter().cloned())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, m)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{m:?}")?;
        }
        Ok(())
    }
}
