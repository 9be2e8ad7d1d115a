use crate::poly::{MonomialOrder, Polynomial};

/// Result of dividing `f` by a list of divisors: `f = Σ quotients[i]·G[i] + remainder`.
#[derive(Clone, Debug)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

fn reduce(f: &Polynomial, divisors: &[Polynomial], order: MonomialOrder, track: bool) -> Division {
    let field = f.field();
    let mut quotients: Vec<Polynomial> = if track {
        vec![Polynomial::zero(field, order); divisors.len()]
    } else {
        Vec::new()
    };
    let mut remainder = Vec::new();
    let mut p = f.with_order(order);
    while let Some((c, m)) = p.lead_term() {
        let hit = divisors.iter().enumerate().find_map(|(i, g)| {
            let (gc, gm) = g.lead_term()?;
            m.div(gm)
                .map(|q| (i, q, c.div(gc).expect("nonzero lead coefficient")))
        });
        match hit {
            Some((i, q, coef)) => {
                p = p.add_scaled(&coef.neg(), &q, &divisors[i]);
                if track {
                    quotients[i] = quotients[i].add(&Polynomial::term(field, order, coef, q));
                }
            }
            None => {
                let (lead, rest) = p.split_lead().expect("nonzero");
                remainder.push(lead);
                p = rest;
            }
        }
    }
    Division {
        quotients,
        remainder: Polynomial::from_sorted_terms(field, order, remainder),
    }
}

/// Full reduction of `f` modulo `divisors`.
///
/// Always the highest reducible term is reduced, by the first divisor (in
/// list order) whose leading monomial divides it.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], order: MonomialOrder) -> Polynomial {
    reduce(f, divisors, order, false).remainder
}

/// Like [`normal_form`] but records the quotient of every divisor.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], order: MonomialOrder) -> Division {
    reduce(f, divisors, order, true)
}
