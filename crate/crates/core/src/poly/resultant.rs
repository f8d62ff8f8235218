use crate::field::Ring;

/// Determinant by fraction-free Bareiss elimination.
///
/// Only exact divisions are performed, so this works over any integral
/// domain whose `div_exact` succeeds on exact quotients, including
/// polynomial rings.
pub fn det_bareiss<R: Ring>(ring: &R, mut m: Vec<Vec<R::Elem>>) -> R::Elem {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&m[k][k]) {
            match (k + 1..n).find(|&i| !ring.is_zero(&m[i][k])) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return ring.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = ring.sub(&ring.mul(&m[k][k], &m[i][j]), &ring.mul(&m[i][k], &m[k][j]));
                m[i][j] = ring.div_exact(&num, &prev).expect("Bareiss division is exact");
            }
            m[i][k] = ring.zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        ring.neg(&d)
    } else {
        d
    }
}

/// Sylvester matrix of two coefficient lists given highest-degree first.
/// Declared degrees are `f.len() - 1` and `g.len() - 1`.
pub fn sylvester_matrix<R: Ring>(ring: &R, f: &[R::Elem], g: &[R::Elem]) -> Vec<Vec<R::Elem>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![ring.zero(); size];
        for (j, c) in f.iter().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![ring.zero(); size];
        for (j, c) in g.iter().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant of two forms of declared degrees, as the Sylvester determinant.
pub fn sylvester_resultant<R: Ring>(ring: &R, f: &[R::Elem], g: &[R::Elem]) -> R::Elem {
    det_bareiss(ring, sylvester_matrix(ring, f, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::poly::multi::PolyRing;
    use crate::poly::parse::parse_poly;

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let f = PrimeField::default();
        let m: Vec<Vec<_>> = [[2, -1, 0, 3], [4, 0, 1, 1], [0, 0, 5, -2], [1, 1, 1, 1]]
            .iter()
            .map(|r| r.iter().map(|&v| f.elem(v)).collect())
            .collect();
        // cofactor expansion along the third row
        assert_eq!(det_bareiss(&f, m), f.elem(67));
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let q = Rationals;
        let m = vec![vec![q.zero(), q.one()], vec![q.one(), q.zero()]];
        assert_eq!(det_bareiss(&q, m), q.from_i64(-1));
    }

    #[test]
    fn symbolic_linear_resultant() {
        let r = PolyRing::new(Rationals, &["a0", "a1", "b0", "b1"]);
        let v = |n: &str| parse_poly(&r, n).unwrap();
        let res = sylvester_resultant(&r, &[v("a1"), v("a0")], &[v("b1"), v("b0")]);
        assert_eq!(res, v("a1*b0 - a0*b1"));
    }
}
