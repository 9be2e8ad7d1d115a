use super::buchberger::{reduced_groebner_basis, GroebnerBasis};
use crate::poly::{Field, Monomial, MonomialOrder, Polynomial, VarId};

/// An ideal of `k[v_0, …, v_{n-1}]` given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    generators: Vec<Polynomial>,
    nvars: u32,
    field: Field,
    order: MonomialOrder,
}

impl Ideal {
    /// Zero generators are dropped; the rest are resorted for `order`.
    pub fn new(
        generators: Vec<Polynomial>,
        nvars: u32,
        field: Field,
        order: MonomialOrder,
    ) -> Self {
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                assert_eq!(g.field(), field, "generator outside the ideal's field");
                g.with_order(order)
            })
            .collect();
        Ideal {
            generators,
            nvars,
            field,
            order,
        }
    }

    pub fn monomial_ideal(
        monomials: &[Monomial],
        nvars: u32,
        field: Field,
        order: MonomialOrder,
    ) -> Self {
        let gens = monomials
            .iter()
            .map(|m| Polynomial::monomial(field, order, m.clone()))
            .collect();
        Ideal::new(gens, nvars, field, order)
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn nvars(&self) -> u32 {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.len() == 1)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        Ideal::new(self.generators.clone(), self.nvars, self.field, order)
    }

    pub fn groebner_basis(&self) -> GroebnerBasis {
        reduced_groebner_basis(self, self.order)
    }

    fn zero_like(&self) -> Ideal {
        Ideal::new(Vec::new(), self.nvars, self.field, self.order)
    }

    fn variable(&self, v: VarId) -> Polynomial {
        Polynomial::monomial(self.field, self.order, Monomial::var(v))
    }
}

/// `f ∈ I`, decided by reduction modulo the reduced Gröbner basis.
pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> bool {
    if f.is_zero() {
        return true;
    }
    ideal.groebner_basis().contains(f)
}

/// `I ∩ J` through `t·I + (1 − t)·J` and elimination of `t`.
pub fn ideal_intersect(i: &Ideal, j: &Ideal) -> Ideal {
    assert_eq!(i.field, j.field, "intersection across fields");
    let nvars = i.nvars.max(j.nvars);
    let order = i.order;
    if i.is_zero() || j.is_zero() {
        return Ideal::new(Vec::new(), nvars, i.field, order);
    }
    let field = i.field;
    let elim = MonomialOrder::Elimination { split: 1 };
    let lift = |g: &Polynomial| g.map_vars(elim, |v| v + 1);
    let t = Polynomial::monomial(field, elim, Monomial::var(0));
    let one_minus_t = Polynomial::one(field, elim).sub(&t);
    let mut gens: Vec<Polynomial> = i.generators.iter().map(|g| t.mul(&lift(g))).collect();
    gens.extend(j.generators.iter().map(|h| one_minus_t.mul(&lift(h))));
    let gb = reduced_groebner_basis(&Ideal::new(gens, nvars + 1, field, elim), elim);
    let kept: Vec<Polynomial> = gb
        .into_basis()
        .into_iter()
        .filter(|g| g.monomials().all(|m| m.exponent(0) == 0))
        .map(|g| g.map_vars(order, |v| v - 1))
        .collect();
    let result = Ideal::new(kept, nvars, field, order);
    Ideal::new(result.groebner_basis().into_basis(), nvars, field, order)
}

/// `(I : f) = { g : g·f ∈ I }` for a monomial `f`, as `(I ∩ (f)) / f`.
pub fn colon(ideal: &Ideal, f: &Monomial) -> Ideal {
    let principal = Ideal::monomial_ideal(
        std::slice::from_ref(f),
        ideal.nvars,
        ideal.field,
        ideal.order,
    );
    let meet = ideal_intersect(ideal, &principal);
    let gens = meet
        .generators
        .iter()
        .map(|g| {
            g.div_monomial(f)
                .expect("elements of (f) are divisible by f")
        })
        .collect();
    let quotient = Ideal::new(gens, ideal.nvars, ideal.field, ideal.order);
    Ideal::new(
        quotient.groebner_basis().into_basis(),
        ideal.nvars,
        ideal.field,
        ideal.order,
    )
}

/// `(I : m)` for the homogeneous maximal ideal `m = (v_0, …, v_{n-1})`.
pub fn colon_maximal(ideal: &Ideal) -> Ideal {
    let mut acc: Option<Ideal> = None;
    for v in 0..ideal.nvars {
        let q = colon(ideal, ideal.variable(v).lead_monomial().unwrap());
        acc = Some(match acc {
            None => q,
            Some(prev) => ideal_intersect(&prev, &q),
        });
    }
    acc.unwrap_or_else(|| ideal.zero_like())
}

/// Equality of ideals via their reduced Gröbner bases in `i`'s order.
pub fn ideal_equal(i: &Ideal, j: &Ideal) -> bool {
    let a = i.groebner_basis();
    let b = j.with_order(i.order).groebner_basis();
    a.basis() == b.basis()
}
