//! Temperley-Lieb diagram algebra: planar pairings on the boundary of a
//! rectangle, stacked with loop bookkeeping. The evaluation vehicle for
//! the bracket polynomial.

use crate::poly::LaurentPoly;
use std::collections::BTreeMap;

/// A perfect non-crossing matching on `2m` boundary points of a
/// rectangle: points `0..m` on the top edge (left to right) and
/// `m..2m` on the bottom edge (left to right).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pairing {
    strands: usize,
    partner: Vec<usize>,
}

impl Pairing {
    pub fn identity(m: usize) -> Self {
        let mut partner = vec![0; 2 * m];
        for i in 0..m {
            partner[i] = m + i;
            partner[m + i] = i;
        }
        Pairing { strands: m, partner }
    }

    /// The cup-cap generator at position `i` (1-based, `i < m`): joins
    /// top `i-1` with top `i` and bottom `i-1` with bottom `i`.
    pub fn cap_cup(m: usize, i: usize) -> Self {
        assert!(1 <= i && i < m, "generator position out of range");
        let mut p = Pairing::identity(m);
        p.join(i - 1, i);
        p.join(m + i - 1, m + i);
        p
    }

    fn join(&mut self, a: usize, b: usize) {
        self.partner[a] = b;
        self.partner[b] = a;
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p]
    }

    /// Position along the boundary circle (top left-to-right, then
    /// bottom right-to-left).
    fn circle_pos(&self, p: usize) -> usize {
        if p < self.strands {
            p
        } else {
            2 * self.strands - 1 - (p - self.strands)
        }
    }

    /// Chords drawn inside the rectangle must not cross.
    pub fn is_noncrossing(&self) -> bool {
        let m2 = 2 * self.strands;
        for a in 0..m2 {
            for c in 0..m2 {
                let (b, d) = (self.partner[a], self.partner[c]);
                let (pa, pb) = (self.circle_pos(a), self.circle_pos(b));
                let (pc, pd) = (self.circle_pos(c), self.circle_pos(d));
                let (lo1, hi1) = (pa.min(pb), pa.max(pb));
                let inside1 = (lo1 < pc && pc < hi1) != (lo1 < pd && pd < hi1);
                if inside1 && a != c && a != d {
                    return false;
                }
            }
        }
        true
    }

    /// Stack `self` on top of `other`, gluing `self`'s bottom points to
    /// `other`'s top points. Returns the resulting pairing and the
    /// number of closed loops formed in the middle.
    pub fn stack(&self, other: &Pairing) -> (Pairing, usize) {
        assert_eq!(self.strands, other.strands);
        let m = self.strands;
        // Combined node space: 0..m result top, m..2m middle, 2m..3m
        // result bottom. Each node carries up to two link slots.
        let mut links: Vec<Vec<usize>> = vec![Vec::new(); 3 * m];
        let connect = |a: usize, b: usize, links: &mut Vec<Vec<usize>>| {
            links[a].push(b);
            links[b].push(a);
        };
        for p in 0..2 * m {
            let q = self.partner[p];
            if p < q {
                connect(p, q, &mut links); // self: top stays 0..m, bottom is middle m..2m
            }
        }
        for p in 0..2 * m {
            let q = other.partner[p];
            if p < q {
                // other: top glues to middle (m..2m), bottom to 2m..3m
                connect(m + p, m + q, &mut links);
            }
        }

        let mut partner = vec![usize::MAX; 2 * m];
        let mut visited = vec![false; 3 * m];
        let boundary = (0..m).chain(2 * m..3 * m);
        for start in boundary {
            if visited[start] {
                continue;
            }
            // Walk from one boundary node to the other.
            let mut prev = start;
            visited[start] = true;
            let mut cur = links[start][0];
            while m <= cur && cur < 2 * m {
                visited[cur] = true;
                let next = if links[cur][0] == prev { links[cur][1] } else { links[cur][0] };
                prev = cur;
                cur = next;
            }
            visited[cur] = true;
            let to_result = |x: usize| if x < m { x } else { x - m };
            partner[to_result(start)] = to_result(cur);
            partner[to_result(cur)] = to_result(start);
        }

        // Unvisited middle nodes form closed loops.
        let mut loops = 0;
        for start in m..2 * m {
            if visited[start] {
                continue;
            }
            loops += 1;
            let mut prev = start;
            visited[start] = true;
            let mut cur = links[start][0];
            while cur != start {
                visited[cur] = true;
                let next = if links[cur][0] == prev { links[cur][1] } else { links[cur][0] };
                prev = cur;
                cur = next;
            }
        }

        (Pairing { strands: m, partner }, loops)
    }

    /// Number of loops after joining top `i` to bottom `i` around the
    /// diagram.
    pub fn closure_loops(&self) -> usize {
        let m = self.strands;
        let mut visited = vec![false; 2 * m];
        let mut loops = 0;
        for start in 0..2 * m {
            if visited[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            while !visited[p] {
                visited[p] = true;
                let q = self.partner[p]; // through the diagram
                visited[q] = true;
                p = if q < m { q + m } else { q - m }; // around the closure
            }
        }
        loops
    }
}

/// A linear combination of planar pairings with Laurent-polynomial
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TlElement {
    strands: usize,
    terms: BTreeMap<Pairing, LaurentPoly>,
}

impl TlElement {
    pub fn identity(m: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Pairing::identity(m), LaurentPoly::one());
        TlElement { strands: m, terms }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The image of a signed crossing at position `i`: the identity
    /// smoothing weighted `A^(sign)` plus the cap-cup smoothing weighted
    /// `A^(-sign)`.
    pub fn crossing(m: usize, i: usize, sign: i8) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Pairing::identity(m), LaurentPoly::monomial(1, sign as i64));
        terms.insert(Pairing::cap_cup(m, i), LaurentPoly::monomial(1, -(sign as i64)));
        TlElement { strands: m, terms }
    }

    /// Algebra product: stack diagrams pairwise, weighting each closed
    /// middle loop by `d`.
    pub fn multiply(&self, other: &TlElement) -> TlElement {
        assert_eq!(self.strands, other.strands);
        let d = LaurentPoly::loop_weight();
        let mut terms: BTreeMap<Pairing, LaurentPoly> = BTreeMap::new();
        for (p1, c1) in &self.terms {
            for (p2, c2) in &other.terms {
                let (stacked, loops) = p1.stack(p2);
                let coeff = &(c1 * c2) * &d.pow(loops as u32);
                let slot = terms.entry(stacked).or_insert_with(LaurentPoly::zero);
                *slot = &*slot + &coeff;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        TlElement { strands: self.strands, terms }
    }

    /// Close every diagram and total the weights, normalized so that the
    /// identity on one strand evaluates to 1 (one loop weight divided
    /// out).
    pub fn closure_value(&self) -> LaurentPoly {
        let d = LaurentPoly::loop_weight();
        let mut total = LaurentPoly::zero();
        for (p, c) in &self.terms {
            let loops = p.closure_loops();
            debug_assert!(loops >= 1);
            total = &total + &(c * &d.pow((loops - 1) as u32));
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_generators_are_planar() {
        for m in 1..=5 {
            assert!(Pairing::identity(m).is_noncrossing());
            for i in 1..m {
                assert!(Pairing::cap_cup(m, i).is_noncrossing());
            }
        }
    }

    #[test]
    fn generator_relations() {
        // e_i e_i = d e_i ; e_i e_(i+1) e_i = e_i ; e_i e_j = e_j e_i.
        let m = 4;
        let e = |i: usize| {
            let mut terms = BTreeMap::new();
            terms.insert(Pairing::cap_cup(m, i), LaurentPoly::one());
            TlElement { strands: m, terms }
        };
        let d = LaurentPoly::loop_weight();
        let e1e1 = e(1).multiply(&e(1));
        assert_eq!(e1e1.terms.get(&Pairing::cap_cup(m, 1)), Some(&d));
        let sandwich = e(1).multiply(&e(2)).multiply(&e(1));
        assert_eq!(sandwich, e(1));
        assert_eq!(e(1).multiply(&e(3)), e(3).multiply(&e(1)));
    }

    #[test]
    fn stacking_stays_planar() {
        let m = 4;
        let (p, loops) = Pairing::cap_cup(m, 1).stack(&Pairing::cap_cup(m, 2));
        assert!(p.is_noncrossing());
        assert_eq!(loops, 0);
        let (_, loops) = Pairing::cap_cup(m, 1).stack(&Pairing::cap_cup(m, 1));
        assert_eq!(loops, 1);
    }

    #[test]
    fn closure_loop_counts() {
        assert_eq!(Pairing::identity(3).closure_loops(), 3);
        assert_eq!(Pairing::cap_cup(2, 1).closure_loops(), 1);
        assert_eq!(Pairing::cap_cup(3, 2).closure_loops(), 2);
    }

    #[test]
    fn crossing_inverse_multiplies_to_identity() {
        let x = TlElement::crossing(2, 1, 1).multiply(&TlElement::crossing(2, 1, -1));
        // The Kauffman skein makes a crossing invertible in the quotient;
        // as elements: A*A^-1 (id) + (A^2 + A^-2 + d) e = id.
        assert_eq!(x, TlElement::identity(2));
    }
}
