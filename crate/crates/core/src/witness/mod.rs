//! Certificates that the slice ideal has depth zero.
//!
//! The argument runs through the inverse-system polynomial `F`: every
//! generator of `I` annihilates `F` while the witness `s` pairs with `F` to
//! one, so `s ∉ I`; and `x_ν·s ∈ I` for every variable, so `s ∈ (I : m)`.
//! Each step is checked independently and recorded, never short-circuited.

mod exchange;

use thiserror::Error;

pub use exchange::{slice_exchange_reduce, ExchangeCertificate, ExchangeMove, SliceProduct};

use crate::groebner::GroebnerBasis;
use crate::par::Execution;
use crate::poly::text::{format_monomial, format_polynomial, format_scalar};
use crate::poly::{contract, Field, Monomial, Polynomial, Scalar, Shape, VarIndex};
use crate::slicefamily::{
    build_f, build_ideal, master_polynomial, slice, tableaux, tau, witness_monomial, GeneratorKind,
    SliceIdeal, Tableau,
};

/// Shapes with at most this many variables also get Gröbner-basis checks
/// when no colon mode is forced.
pub const GROEBNER_VARIABLE_LIMIT: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("direction {direction} is not one of the first d-1 directions")]
    NotSliceFactored { direction: usize },
    #[error("slice ({direction}, {index}) out of range")]
    SliceOutOfRange { direction: usize, index: u32 },
    #[error("product has no factor s[{direction},{index}]")]
    MissingFactor { direction: usize, index: u32 },
}

/// One named pass/fail line of a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// `g ∘ F` for one generator.
#[derive(Clone, Debug)]
pub struct AnnihilationCheck {
    pub kind: GeneratorKind,
    pub generator: Polynomial,
    pub result: Polynomial,
    pub pass: bool,
}

/// `g ∘ F = 0` for every generator `g` of the slice ideal.
pub fn check_annihilation(
    ideal: &SliceIdeal,
    f: &Polynomial,
    exec: Execution,
) -> Vec<AnnihilationCheck> {
    exec.map(ideal.labelled_generators(), |(kind, g)| {
        let result = contract(g, f).expect("slice ideals are built over QQ");
        AnnihilationCheck {
            kind: *kind,
            generator: g.clone(),
            pass: result.is_zero(),
            result,
        }
    })
}

/// `s ∘ F`; a depth-zero certificate needs exactly one.
pub fn check_witness_pairing(shape: &Shape, f: &Polynomial) -> Scalar {
    let s = Polynomial::monomial(Field::Rational, f.order(), witness_monomial(shape));
    let r = contract(&s, f).expect("QQ");
    match r.terms() {
        [] => Field::Rational.zero(),
        [(c, m)] if m.is_one() => c.clone(),
        // a nonconstant pairing is impossible for equal degrees; report zero
        _ => Field::Rational.zero(),
    }
}

/// `s ∘ τ_A` for every tableau of the master sum, paired with the tableau.
pub fn witness_term_pairings(shape: &Shape) -> Vec<(Tableau, Polynomial)> {
    let d = shape.dimension();
    let condition: Vec<u32> = (1..d).map(|i| shape.extent(i)).collect();
    let s = Polynomial::monomial(
        Field::Rational,
        crate::poly::MonomialOrder::Grevlex,
        witness_monomial(shape),
    );
    tableaux(shape, &condition)
        .expect("valid condition")
        .map(|a| {
            let (c, m) = tau(shape, &a);
            let t = Polynomial::term(Field::Rational, s.order(), c, m);
            let r = contract(&s, &t).expect("QQ");
            (a, r)
        })
        .collect()
}

/// How `x_ν·s ∈ I` is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColonMode {
    /// Rewrite `s` with the binomial relations, then test divisibility by `s_{d,ν_d}`.
    Exchange,
    /// Reduce `x_ν·s` modulo a Gröbner basis of `I`.
    Groebner,
}

impl ColonMode {
    pub fn name(self) -> &'static str {
        match self {
            ColonMode::Exchange => "exchange",
            ColonMode::Groebner => "groebner",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ColonEvidence {
    pub nu: VarIndex,
    pub mode: ColonMode,
    pub member: bool,
    pub detail: String,
}

/// Membership of `x_ν·s` for one `ν` following the congruence argument.
///
/// `s ≡ T = ∏_{i<d} ∏_{j≠ν_i} s_ij (mod I)` by exchanging `s_{i,ν_i}` for
/// `s_{i,1}`; then `s_{d,ν_d}` divides `T·x_ν`, and the full identity
/// `x_ν·s = Σ c_k g_k` is expanded and compared.
pub fn exchange_membership(ideal: &SliceIdeal, nu: &VarIndex) -> ColonEvidence {
    let shape = ideal.shape();
    let d = shape.dimension();
    let v = shape.var_id(nu).expect("index from shape");
    let product = SliceProduct::witness(ideal);
    let moves: Vec<ExchangeMove> = (1..d)
        .filter(|&i| nu.0[i - 1] != 1)
        .map(|i| ExchangeMove {
            direction: i,
            from: nu.0[i - 1],
            to: 1,
        })
        .collect();
    let cert = slice_exchange_reduce(&product, ideal, &moves)
        .expect("witness contains every s_ij, j >= 2");
    let xv = Monomial::var(v);
    let target = cert.output.monomial(ideal).mul(&xv);
    let last = nu.0[d - 1];
    let s_last = slice(shape, d, last).expect("in range");
    let Some(cofactor) = target.div(&s_last) else {
        return ColonEvidence {
            nu: nu.clone(),
            mode: ColonMode::Exchange,
            member: false,
            detail: format!("s[{d},{last}] does not divide the rewritten product"),
        };
    };
    let field = ideal.field();
    let order = ideal.order();
    let xv_poly = Polynomial::monomial(field, order, xv.clone());
    let mut multipliers: Vec<Polynomial> =
        cert.multipliers.iter().map(|m| m.mul(&xv_poly)).collect();
    let k = ideal.slice_position(last).expect("slice generator");
    multipliers[k] = multipliers[k].add(&Polynomial::monomial(field, order, cofactor));
    let expanded = exchange::combine(ideal, &multipliers);
    let lhs = Polynomial::monomial(field, order, witness_monomial(shape).mul(&xv));
    let member = expanded == lhs && cert.verify(ideal);
    ColonEvidence {
        nu: nu.clone(),
        mode: ColonMode::Exchange,
        member,
        detail: format!(
            "{} exchange(s), s[{d},{last}] divides, identity {}",
            cert.multipliers.iter().filter(|m| !m.is_zero()).count(),
            if member { "verified" } else { "FAILED" }
        ),
    }
}

pub fn groebner_membership(ideal: &SliceIdeal, gb: &GroebnerBasis, nu: &VarIndex) -> ColonEvidence {
    let shape = ideal.shape();
    let v = shape.var_id(nu).expect("index from shape");
    let f = Polynomial::monomial(
        ideal.field(),
        gb.order(),
        witness_monomial(shape).mul(&Monomial::var(v)),
    );
    let nf = gb.normal_form(&f);
    ColonEvidence {
        nu: nu.clone(),
        mode: ColonMode::Groebner,
        member: nf.is_zero(),
        detail: if nf.is_zero() {
            "normal form 0".into()
        } else {
            format!("normal form {}", format_polynomial(&nf, shape))
        },
    }
}

/// `x_ν·s ∈ I` for every `ν`, in the requested mode.
pub fn check_colon_membership(
    ideal: &SliceIdeal,
    mode: ColonMode,
    gb: Option<&GroebnerBasis>,
    exec: Execution,
) -> Vec<ColonEvidence> {
    let indices: Vec<VarIndex> = ideal.shape().indices().collect();
    match mode {
        ColonMode::Exchange => exec.map(&indices, |nu| exchange_membership(ideal, nu)),
        ColonMode::Groebner => {
            let owned;
            let gb = match gb {
                Some(gb) => gb,
                None => {
                    owned = ideal.to_ideal().groebner_basis();
                    &owned
                }
            };
            exec.map(&indices, |nu| groebner_membership(ideal, gb, nu))
        }
    }
}

/// One `(i, j)` instance of the recursion `s_ij ∘ F = F'` where `F'` sums
/// over tableaux with condition `(n_1, …, n_i − 1, …, n_{d−1})`.
#[derive(Clone, Debug)]
pub struct RecursionEntry {
    pub direction: usize,
    pub index: u32,
    pub lhs: Polynomial,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct RecursionReport {
    pub entries: Vec<RecursionEntry>,
    /// Per direction: `s_ij ∘ F` is the same polynomial for every `j`.
    pub independent_of_index: Vec<(usize, bool)>,
    /// Per binomial: `(s_i1 − s_ij) ∘ F = 0` recomputed from the entries.
    pub binomials_annihilate: bool,
}

impl RecursionReport {
    pub fn pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
            && self.independent_of_index.iter().all(|&(_, ok)| ok)
            && self.binomials_annihilate
    }
}

pub fn check_recursion(shape: &Shape, f: &Polynomial, exec: Execution) -> RecursionReport {
    let d = shape.dimension();
    let full: Vec<u32> = (1..d).map(|i| shape.extent(i)).collect();
    let mut work = Vec::new();
    for i in 1..d {
        for j in 1..=shape.extent(i) {
            work.push((i, j));
        }
    }
    let reduced: Vec<(usize, Polynomial)> = exec.map(&(1..d).collect::<Vec<_>>(), |&i| {
        let mut cond = full.clone();
        cond[i - 1] -= 1;
        (
            i,
            master_polynomial(shape, &cond, Execution::Sequential).expect("condition >= 1"),
        )
    });
    let entries = exec.map(&work, |&(i, j)| {
        let s = Polynomial::monomial(
            Field::Rational,
            f.order(),
            slice(shape, i, j).expect("in range"),
        );
        let lhs = contract(&s, f).expect("QQ");
        let rhs = &reduced.iter().find(|(k, _)| *k == i).expect("direction").1;
        RecursionEntry {
            direction: i,
            index: j,
            pass: lhs == *rhs,
            lhs,
        }
    });
    let independent_of_index = (1..d)
        .map(|i| {
            let mut row = entries.iter().filter(|e| e.direction == i);
            let first = row.next().expect("n_i >= 2").lhs.clone();
            (i, row.all(|e| e.lhs == first))
        })
        .collect();
    let binomials_annihilate = (1..d).all(|i| {
        let first = &entries
            .iter()
            .find(|e| e.direction == i && e.index == 1)
            .unwrap()
            .lhs;
        entries
            .iter()
            .filter(|e| e.direction == i && e.index >= 2)
            .all(|e| first.sub(&e.lhs).is_zero())
    });
    RecursionReport {
        entries,
        independent_of_index,
        binomials_annihilate,
    }
}

/// Which colon checks [`certify_depth_zero`] runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ColonPlan {
    /// Exchange always; Gröbner as well up to [`GROEBNER_VARIABLE_LIMIT`] variables.
    #[default]
    Auto,
    Only(ColonMode),
}

#[derive(Clone, Debug)]
pub struct DepthZeroCertificate {
    pub shape: Shape,
    pub annihilation: Vec<AnnihilationCheck>,
    pub pairing: Scalar,
    pub colon: Vec<ColonEvidence>,
    /// Present when both colon modes ran.
    pub modes_agree: Option<bool>,
    /// `s ∉ I` by Gröbner reduction, when a basis was computed.
    pub witness_outside_by_groebner: Option<bool>,
    pub verdict: bool,
}

impl DepthZeroCertificate {
    pub fn annihilation_pass(&self) -> bool {
        self.annihilation.iter().all(|a| a.pass)
    }

    pub fn pairing_pass(&self) -> bool {
        self.pairing.is_one()
    }

    pub fn colon_pass(&self) -> bool {
        !self.colon.is_empty() && self.colon.iter().all(|c| c.member)
    }

    /// `s ∉ I` follows from `I ⊆ Ann(F)` and `s ∘ F ≠ 0`.
    pub fn witness_outside(&self) -> bool {
        self.annihilation_pass()
            && !self.pairing.is_zero()
            && self.witness_outside_by_groebner.unwrap_or(true)
    }

    pub fn checks(&self) -> Vec<Check> {
        let shape = &self.shape;
        let mut out = Vec::new();
        for a in &self.annihilation {
            out.push(Check::new(
                format!("annihilates F: {}", a.kind),
                a.pass,
                format!(
                    "{} o F = {}",
                    format_polynomial(&a.generator, shape),
                    format_polynomial(&a.result, shape)
                ),
            ));
        }
        out.push(Check::new(
            "witness pairing s o F = 1",
            self.pairing_pass(),
            format!(
                "s = {}, s o F = {}",
                format_monomial(&witness_monomial(shape), shape),
                format_scalar(&self.pairing)
            ),
        ));
        for c in &self.colon {
            out.push(Check::new(
                format!("colon membership ({}): {}*s in I", c.mode.name(), c.nu),
                c.member,
                c.detail.clone(),
            ));
        }
        if let Some(agree) = self.modes_agree {
            out.push(Check::new(
                "colon modes agree",
                agree,
                "exchange and groebner verdicts coincide",
            ));
        }
        if let Some(outside) = self.witness_outside_by_groebner {
            out.push(Check::new(
                "s not in I (groebner)",
                outside,
                "normal form of s is nonzero",
            ));
        }
        out.push(Check::new(
            "s in (I : m) \\ I",
            self.verdict,
            "annihilation, pairing and colon membership combined; m is associated, depth R/I = 0",
        ));
        out
    }
}

/// Runs every check of the depth-zero argument for a shape.
pub fn certify_depth_zero(shape: &Shape, plan: ColonPlan, exec: Execution) -> DepthZeroCertificate {
    let ideal = build_ideal(shape);
    let f = build_f(shape);
    let use_groebner = match plan {
        ColonPlan::Auto => shape.num_vars() <= GROEBNER_VARIABLE_LIMIT,
        ColonPlan::Only(mode) => mode == ColonMode::Groebner,
    };
    let use_exchange = !matches!(plan, ColonPlan::Only(ColonMode::Groebner));

    let annihilation = check_annihilation(&ideal, &f, exec);
    let pairing = check_witness_pairing(shape, &f);

    let gb = use_groebner.then(|| ideal.to_ideal().groebner_basis());
    let mut colon = Vec::new();
    if use_exchange {
        colon.extend(check_colon_membership(
            &ideal,
            ColonMode::Exchange,
            None,
            exec,
        ));
    }
    if let Some(gb) = &gb {
        colon.extend(check_colon_membership(
            &ideal,
            ColonMode::Groebner,
            Some(gb),
            exec,
        ));
    }
    let modes_agree = (use_exchange && use_groebner).then(|| {
        let by = |mode: ColonMode| {
            colon
                .iter()
                .filter(move |c| c.mode == mode)
                .map(|c| (c.nu.clone(), c.member))
        };
        by(ColonMode::Exchange).eq(by(ColonMode::Groebner))
    });
    let witness_outside_by_groebner = gb.as_ref().map(|gb| {
        let s = Polynomial::monomial(ideal.field(), gb.order(), witness_monomial(shape));
        !gb.contains(&s)
    });

    let mut cert = DepthZeroCertificate {
        shape: shape.clone(),
        annihilation,
        pairing,
        colon,
        modes_agree,
        witness_outside_by_groebner,
        verdict: false,
    };
    cert.verdict = cert.annihilation_pass()
        && cert.pairing_pass()
        && cert.colon_pass()
        && cert.modes_agree.unwrap_or(true)
        && cert.witness_outside();
    cert
}
