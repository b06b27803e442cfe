//! Kauffman bracket and Jones polynomial by state sum.

use crate::diagram::{Diagram, UnionFind};
use crate::error::{Error, Result};
use crate::poly::LaurentPolynomial;

/// Ports of crossing `c` that the under-strand uses.
fn under_port(d: &Diagram, c: usize) -> u32 {
    let axis = d.over_axes().expect("checked by caller")[c] as u32;
    // the under-strand uses the ports of the other parity
    axis ^ 1
}

/// <D> in the variable A, normalised so that the zero-crossing unknot is 1.
pub fn kauffman_bracket(d: &Diagram) -> Result<LaurentPolynomial> {
    if d.is_shadow() {
        return Err(Error::ShadowInput);
    }
    let n = d.crossing_count();
    if n == 0 {
        return Ok(LaurentPolynomial::one());
    }
    if n > 24 {
        return Err(Error::TooManyCrossings(n));
    }
    let glue = d.glue();
    let loop_value = {
        let mut p = LaurentPolynomial::monomial(-1, 2);
        p.add_term(-1, -2);
        p
    };
    // bracket grouped by (a - b, loops)
    let mut counts: std::collections::BTreeMap<(i32, usize), i64> = Default::default();
    for state in 0u32..(1 << n) {
        let mut uf = UnionFind::new(4 * n);
        for (x, &y) in glue.iter().enumerate() {
            uf.union(x, y as usize);
        }
        let mut weight = 0i32;
        for c in 0..n {
            let u = under_port(d, c);
            let base = 4 * c;
            let at = |p: u32| base + (p % 4) as usize;
            if state >> c & 1 == 0 {
                // A-smoothing: opens the corners swept when the over-strand
                // turns counterclockwise
                uf.union(at(u), at(u + 1));
                uf.union(at(u + 2), at(u + 3));
                weight += 1;
            } else {
                uf.union(at(u), at(u + 3));
                uf.union(at(u + 1), at(u + 2));
                weight -= 1;
            }
        }
        *counts.entry((weight, uf.components())).or_insert(0) += 1;
    }
    let mut total = LaurentPolynomial::zero();
    for ((weight, loops), k) in counts {
        let term = &LaurentPolynomial::monomial(k, weight) * &loop_value.pow(loops as u32 - 1);
        total = &total + &term;
    }
    Ok(total)
}

/// f(D) = (-A^3)^(-w) <D>, invariant under all Reidemeister moves.
pub fn normalized_bracket(d: &Diagram) -> Result<LaurentPolynomial> {
    let w = d.writhe()?;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    Ok(&LaurentPolynomial::monomial(sign, -3 * w) * &kauffman_bracket(d)?)
}

/// V(t), obtained from f by A = t^(-1/4).
pub fn jones_polynomial(d: &Diagram) -> Result<LaurentPolynomial> {
    normalized_bracket(d)?.divide_exponents(-4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::parse_diagram;

    fn jones(text: &str) -> LaurentPolynomial {
        jones_polynomial(&parse_diagram(text).unwrap()).unwrap()
    }

    fn t(text: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(text, 't').unwrap()
    }

    #[test]
    fn kinks_are_trivial() {
        assert_eq!(jones("X(1,2,2,1)"), LaurentPolynomial::one());
        assert_eq!(jones("X(1,1,2,2)"), LaurentPolynomial::one());
        assert_eq!(jones("U"), LaurentPolynomial::one());
    }

    #[test]
    fn trefoil_and_mirror() {
        let d = parse_diagram("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        let v = jones_polynomial(&d).unwrap();
        let expected = t("t+t^3-t^4");
        assert!(v == expected || v == expected.invert_variable(), "{v}");
        let vm = jones_polynomial(&d.mirror().unwrap()).unwrap();
        assert_eq!(vm, v.invert_variable());
    }

    #[test]
    fn figure_eight_is_amphichiral() {
        let v = jones("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");
        assert_eq!(v, t("t^(-2)-t^(-1)+1-t+t^2"));
    }

    #[test]
    fn unit_value_at_one() {
        // V(1) = 1 for every knot
        let v = jones("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)");
        assert_eq!(v.terms().map(|(_, c)| c).sum::<i64>(), 1);
    }

    #[test]
    fn shadow_rejected() {
        let d = parse_diagram("P(1,5,2,4) P(3,1,4,6) P(5,3,6,2)").unwrap();
        assert_eq!(kauffman_bracket(&d).unwrap_err(), Error::ShadowInput);
    }
}
