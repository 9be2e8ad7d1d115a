//! Seeded comparisons between `slicepd` and the oracles in this crate.
//! Each suite reports the number of cases and every disagreement found.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slicepd::groebner::{
    divide, ideal_member, interreduce_generators, reduced_groebner_basis, Ideal,
};
use slicepd::poly::{contract, Field, Monomial, MonomialOrder, Polynomial, Scalar};
use slicepd::resolution::{free_resolution, minimalize, taylor_complex};
use slicepd::slicefamily::{
    build_f, build_ideal_in, max_support_bound, slice, support_bound, support_count, Shape,
};

use crate::dense::{exponents_of_degree, DensePoly};
use crate::frac::Frac;
use crate::linalg::truncated_member;
use crate::random;
use crate::slice::{master_sum, nvars, slice_exponents};

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    fn new(name: &str) -> Self {
        SuiteOutcome {
            name: name.into(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    pub fn pass(&self) -> bool {
        self.cases > 0 && self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        match self.failures.first() {
            None => format!("{}: {} cases", self.name, self.cases),
            Some(f) => format!(
                "{}: {}/{} failed, first: {f}",
                self.name,
                self.failures.len(),
                self.cases
            ),
        }
    }
}

const Q: Field = Field::Rational;

fn rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn to_poly(p: &DensePoly, order: MonomialOrder) -> Polynomial {
    p.to_polynomial(Q, order)
}

fn mono(e: &[u32]) -> Monomial {
    Monomial::from_pairs(
        e.iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(v, &k)| (v as u32, k)),
    )
}

fn frac_of(q: &BigRational) -> Frac {
    Frac::new(q.numer().clone(), q.denom().clone())
}

fn same(s: &Scalar, f: &Frac) -> bool {
    let q = s.as_rational().expect("rational");
    *q.numer() == f.num && *q.denom() == f.den
}

/// Field operations on ℚ against schoolbook fractions.
pub fn rational_arithmetic(seed: u64, cases: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("rational arithmetic vs naive fractions");
    let mut r = rng(seed, 1);
    for _ in 0..cases {
        let big = |r: &mut ChaCha8Rng| {
            let n: i128 = r.gen_range(-(1i128 << 70)..(1i128 << 70));
            let d: i128 = r.gen_range(1..(1i128 << 40));
            BigRational::new(BigInt::from(n), BigInt::from(d))
        };
        let (a, b) = (big(&mut r), big(&mut r));
        let (sa, sb) = (Scalar::Rational(a.clone()), Scalar::Rational(b.clone()));
        let (fa, fb) = (frac_of(&a), frac_of(&b));
        let ok = same(&sa.add(&sb), &fa.add(&fb))
            && same(&sa.sub(&sb), &fa.sub(&fb))
            && same(&sa.mul(&sb), &fa.mul(&fb))
            && match (sa.div(&sb), fa.div(&fb)) {
                (Some(x), Some(y)) => same(&x, &y),
                (None, None) => true,
                _ => false,
            };
        out.record(ok, || format!("a = {a}, b = {b}"));
    }
    out
}

/// `(a·b)∘F = a∘(b∘F)`, agreement with repeated partials, and bilinearity.
pub fn contraction_composition(seed: u64, cases: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("contraction composition law");
    let mut r = rng(seed, 2);
    let order = MonomialOrder::Grevlex;
    for _ in 0..cases {
        let n = r.gen_range(1..=4);
        let a = random::exponent_vector(&mut r, n, 2);
        let b = random::exponent_vector(&mut r, n, 2);
        let f = random::polynomial(&mut r, n, 4, 6);
        let f2 = random::polynomial(&mut r, n, 4, 6);
        let g = random::polynomial(&mut r, n, 2, 3);
        let (pa, pb) = (
            Polynomial::monomial(Q, order, mono(&a)),
            Polynomial::monomial(Q, order, mono(&b)),
        );
        let pf = to_poly(&f, order);
        let pf2 = to_poly(&f2, order);
        let pg = to_poly(&g, order);
        let lhs = contract(&pa.mul(&pb), &pf).unwrap();
        let rhs = contract(&pa, &contract(&pb, &pf).unwrap()).unwrap();
        let ab = DensePoly::monomial(
            a.iter().zip(&b).map(|(x, y)| x + y).collect(),
            BigRational::from_integer(1.into()),
        );
        let oracle = DensePoly::act_by_partials(&ab, &f);
        let bilinear_left = contract(&pg.add(&pa), &pf).unwrap()
            == contract(&pg, &pf)
                .unwrap()
                .add(&contract(&pa, &pf).unwrap());
        let bilinear_right = contract(&pg, &pf.add(&pf2)).unwrap()
            == contract(&pg, &pf)
                .unwrap()
                .add(&contract(&pg, &pf2).unwrap());
        let by_partials = DensePoly::from_polynomial(&contract(&pg, &pf).unwrap(), n)
            == DensePoly::act_by_partials(&g, &f);
        out.record(
            lhs == rhs
                && DensePoly::from_polynomial(&lhs, n) == oracle
                && bilinear_left
                && bilinear_right
                && by_partials,
            || format!("a = {a:?}, b = {b:?}, F = {f:?}"),
        );
    }
    out
}

fn random_ideal(r: &mut ChaCha8Rng, n: usize, order: MonomialOrder) -> Ideal {
    let k = r.gen_range(1..=3);
    let gens = (0..k)
        .map(|_| to_poly(&random::polynomial(r, n, 2, 3), order))
        .collect();
    Ideal::new(gens, n as u32, Q, order)
}

fn random_order(r: &mut ChaCha8Rng) -> MonomialOrder {
    if r.gen_bool(0.5) {
        MonomialOrder::Grevlex
    } else {
        MonomialOrder::Lex
    }
}

/// `NF(NF f) = NF f`, and `f − NF f` equals the expanded quotient combination.
pub fn normal_form_checks(seed: u64, cases: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("normal form fixpoint and membership difference");
    let mut r = rng(seed, 3);
    for _ in 0..cases {
        let n = r.gen_range(1..=3);
        let order = random_order(&mut r);
        let ideal = random_ideal(&mut r, n, order);
        let gb = reduced_groebner_basis(&ideal, order);
        let f = to_poly(&random::polynomial(&mut r, n, 3, 5), order);
        let nf = gb.normal_form(&f);
        let division = divide(&f, gb.basis(), order);
        let combination = division
            .quotients
            .iter()
            .zip(gb.basis())
            .fold(Polynomial::zero(Q, order), |acc, (q, g)| acc.add(&q.mul(g)));
        let ok = gb.normal_form(&nf) == nf
            && division.remainder == nf
            && f.sub(&nf) == combination
            && ideal_member(&f.sub(&nf), &ideal);
        out.record(ok, || format!("ideal {:?}, f = {f:?}", ideal.generators()));
    }
    out
}

/// Reduced bases do not depend on the order of the input generators.
pub fn groebner_permutation(seed: u64, cases: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("reduced basis invariant under generator permutation");
    let mut r = rng(seed, 4);
    for _ in 0..cases {
        let n = r.gen_range(2..=3);
        let order = random_order(&mut r);
        let k = r.gen_range(2..=4);
        let mut gens: Vec<Polynomial> = (0..k)
            .map(|_| to_poly(&random::polynomial(&mut r, n, 2, 3), order))
            .collect();
        let a = reduced_groebner_basis(&Ideal::new(gens.clone(), n as u32, Q, order), order);
        gens.shuffle(&mut r);
        let b = reduced_groebner_basis(&Ideal::new(gens.clone(), n as u32, Q, order), order);
        out.record(a.basis() == b.basis() && a.is_groebner(), || {
            format!("generators {gens:?}")
        });
    }
    out
}

/// `ideal_member` against bounded-degree linear algebra on every monomial
/// of degree ≤ 4, for homogeneous generators of degree ≤ 2 in ≤ 4 variables.
pub fn membership_oracle(seed: u64, ideals_per_size: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("membership vs linear-algebra oracle");
    let mut r = rng(seed, 5);
    let mut ideals: Vec<(usize, Vec<DensePoly>)> = Vec::new();
    for n in 1..=4 {
        for _ in 0..ideals_per_size {
            let k = r.gen_range(1..=3);
            let gens = (0..k)
                .map(|_| {
                    let deg = r.gen_range(1..=2);
                    random::homogeneous(&mut r, n, deg, 3)
                })
                .filter(|g| !g.is_zero())
                .collect();
            ideals.push((n, gens));
        }
    }
    // the 2x2 slice ideal
    let dims = [2, 2];
    let s = |i, j| {
        DensePoly::monomial(
            slice_exponents(&dims, i, j),
            BigRational::from_integer(1.into()),
        )
    };
    ideals.push((
        4,
        vec![
            s(1, 1).add(&s(1, 2).scale(&BigRational::from_integer((-1).into()))),
            s(2, 1),
            s(2, 2),
        ],
    ));
    for (n, gens) in ideals {
        let order = random_order(&mut r);
        let ideal = Ideal::new(
            gens.iter().map(|g| to_poly(g, order)).collect(),
            n as u32,
            Q,
            order,
        );
        for t in 0..=4 {
            for e in exponents_of_degree(n, t) {
                let m = DensePoly::monomial(e.clone(), BigRational::from_integer(1.into()));
                let expected = truncated_member(&m, &gens);
                let got = ideal_member(&to_poly(&m, order), &ideal);
                out.record(expected == got, || {
                    format!("x^{e:?} in {gens:?}: oracle {expected}, got {got}")
                });
            }
        }
    }
    out
}

/// `max_r (−r² + r(N+1)) = ⌊((N+1)/2)²⌋`, with the sum `Σ_{i<r} (N − 2i)`
/// as a second route to each value.
pub fn support_bound_maximum(max_n: i64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("support bound maximum");
    for n in 1..=max_n {
        let closed = (n + 1) * (n + 1) / 4;
        let by_sums = (1..=n)
            .map(|r| (0..r).map(|i| n - 2 * i).sum::<i64>())
            .max()
            .unwrap();
        let each =
            (1..=n).all(|r| support_bound(n, r).unwrap() == (0..r).map(|i| n - 2 * i).sum::<i64>());
        let (value, _) = max_support_bound(n);
        out.record(value == closed && by_sums == closed && each, || {
            format!("N = {n}: got {value}, expected {closed}")
        });
    }
    out
}

/// Interreduced equal-degree generators in `N` monomials have support
/// multiplicity at most `−r² + r(N+1)`.
pub fn interreduction_support(seed: u64, cases: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("interreduced support bound");
    let mut r = rng(seed, 6);
    for _ in 0..cases {
        let n = r.gen_range(2..=3);
        let deg = r.gen_range(1..=3);
        let order = random_order(&mut r);
        let gens: Vec<Polynomial> = (0..r.gen_range(1..=5))
            .map(|_| to_poly(&random::homogeneous(&mut r, n, deg, 4), order))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let reduced = interreduce_generators(&gens, order);
        let monomials = exponents_of_degree(n, deg).len() as i64;
        let rr = reduced.len() as i64;
        let count = support_count(&reduced).multiplicity as i64;
        let ok =
            rr >= 1 && count <= support_bound(monomials, rr).unwrap() && rr as usize <= gens.len();
        out.record(ok, || format!("{gens:?} -> {reduced:?}"));
    }
    out
}

/// Random squarefree monomial ideals with `N ≤ 4` generators in `≤ 5`
/// variables: the minimal resolution has length `≤ N`, reached both from
/// the Taylor complex and from Schreyer's construction.
pub fn taylor_bound(seed: u64, cases: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("Taylor length bound");
    let mut r = rng(seed, 7);
    for _ in 0..cases {
        let n = r.gen_range(1..=5);
        let k = r.gen_range(1..=4);
        let gens: Vec<Monomial> = (0..k)
            .map(|_| mono(&random::squarefree(&mut r, n)))
            .collect();
        let ideal = Ideal::monomial_ideal(&gens, n as u32, Q, MonomialOrder::Grevlex);
        let taylor = taylor_complex(&ideal).expect("monomial ideal");
        let from_taylor = minimalize(&taylor);
        let from_schreyer = minimalize(&free_resolution(&ideal, k + 1));
        let ok = taylor.is_complex()
            && from_taylor.is_complex()
            && from_taylor.length() <= k
            && from_taylor.betti() == from_schreyer.betti()
            && from_schreyer.length() <= taylor.length();
        out.record(ok, || {
            format!(
                "generators {gens:?}: taylor {:?}, minimal {:?} / {:?}",
                taylor.ranks(),
                from_taylor.ranks(),
                from_schreyer.ranks()
            )
        });
    }
    out
}

/// `s_ij ∘ F` against a brute-force sum over arrays with row `i` summing
/// to `n_i − 2`.
pub fn recursion(dims: &[u32]) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("slice recursion");
    let shape = Shape::new(dims.to_vec()).unwrap();
    let d = dims.len();
    let f = build_f(&shape);
    let nv = nvars(dims);
    let full: Vec<u32> = dims[..d - 1].to_vec();
    let oracle_f = master_sum(dims, &full);
    out.record(DensePoly::from_polynomial(&f, nv) == oracle_f, || {
        format!("{shape}: F differs from brute-force sum")
    });
    for i in 1..d {
        let mut cond = full.clone();
        cond[i - 1] -= 1;
        let expected = master_sum(dims, &cond);
        let mut first: Option<Polynomial> = None;
        for j in 1..=dims[i - 1] {
            let s = Polynomial::monomial(Q, f.order(), slice(&shape, i, j).unwrap());
            let got = contract(&s, &f).unwrap();
            let ok = DensePoly::from_polynomial(&got, nv) == expected;
            let same_as_first = first.as_ref().is_none_or(|p| *p == got);
            out.record(ok && same_as_first, || format!("{shape}: s[{i},{j}] o F"));
            first.get_or_insert(got);
        }
    }
    out
}

/// Reduced bases over ℚ, F₂, F₃, F₅ share supports, and the rational
/// coefficients reduce to the modular ones.
pub fn characteristic_independence(dims: &[u32]) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("characteristic independence");
    let shape = Shape::new(dims.to_vec()).unwrap();
    let order = MonomialOrder::Grevlex;
    let over = |field| {
        build_ideal_in(&shape, field, order)
            .to_ideal()
            .groebner_basis()
    };
    let rational = over(Q);
    let integral = rational.basis().iter().all(|g| {
        g.terms()
            .iter()
            .all(|(c, _)| c.as_rational().is_some_and(|q| q.is_integer()))
    });
    out.record(integral, || {
        format!("{shape}: non-integer coefficient over Q")
    });
    for p in [2, 3, 5] {
        let modular = over(Field::prime(p).unwrap());
        let supports = |gb: &slicepd::groebner::GroebnerBasis| -> Vec<Vec<Monomial>> {
            gb.basis()
                .iter()
                .map(|g| g.monomials().cloned().collect())
                .collect()
        };
        let same_support = supports(&rational) == supports(&modular);
        let reduces = rational
            .basis()
            .iter()
            .zip(modular.basis())
            .all(|(a, b)| a.reduce_mod(p).map(|x| x == *b).unwrap_or(false));
        out.record(
            same_support && reduces && rational.len() == modular.len(),
            || format!("{shape} over F{p}: bases differ"),
        );
    }
    out
}
