//! The double description method over an exact ordered field.
//!
//! Converts a constraint representation (equalities + inequalities) into a
//! generator representation (lineality basis + extreme rays), processing one
//! inequality at a time. Adjacency is decided by the combinatorial test on
//! tight sets, which is exact for minimal generator representations.

use super::super::exactalg::field::OrderedExactField;
use super::super::exactalg::matrix::Matrix;
use super::super::exactalg::subspace::Subspace;

/// Generator representation: `cone = span(lineality) + nonneg span(rays)`.
#[derive(Debug, Clone)]
pub struct GeneratorRep<K: OrderedExactField> {
    pub dim: usize,
    pub lineality: Vec<Vec<K>>,
    pub rays: Vec<Vec<K>>,
}

impl<K: OrderedExactField> GeneratorRep<K> {
    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }
}

fn dot<K: OrderedExactField>(a: &[K], b: &[K]) -> K {
    a.iter()
        .zip(b)
        .fold(K::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Normalize a ray direction: divide by |first nonzero coordinate| (keeps
/// orientation, canonicalizes scale).
pub fn normalize_ray<K: OrderedExactField>(v: &[K]) -> Vec<K> {
    let Some(first) = v.iter().find(|c| !c.is_zero()) else {
        return v.to_vec();
    };
    let inv = first.abs_val().invert();
    v.iter().map(|c| c.clone() * inv.clone()).collect()
}

/// Run the double description method on `{x : E x = 0, A x >= 0}`.
pub fn cone_from_constraints<K: OrderedExactField>(
    dim: usize,
    equalities: &[Vec<K>],
    inequalities: &[Vec<K>],
) -> GeneratorRep<K> {
    // Lineality from the equalities.
    let lin_space = if equalities.is_empty() {
        Subspace::full(dim)
    } else {
        let m = Matrix::from_rows(equalities.to_vec());
        Subspace::span(dim, m.kernel())
    };
    let mut lineality = lin_space.basis_rows();
    let mut rays: Vec<Vec<K>> = Vec::new();
    // tight[i] = processed inequality indices satisfied with equality by ray i
    let mut tight: Vec<Vec<usize>> = Vec::new();
    let mut processed: Vec<usize> = Vec::new();

    for (ci, a) in inequalities.iter().enumerate() {
        // Does the constraint cut the lineality space?
        let lvals: Vec<K> = lineality.iter().map(|l| dot(a, l)).collect();
        if let Some(pos) = lvals.iter().position(|v| !v.is_zero()) {
            // Split off the direction l0 with a·l0 = 1.
            let scale = lvals[pos].invert();
            let l0: Vec<K> = lineality[pos]
                .iter()
                .map(|c| c.clone() * scale.clone())
                .collect();
            let mut new_lin = Vec::new();
            for (k, l) in lineality.iter().enumerate() {
                if k == pos {
                    continue;
                }
                let c = lvals[k].clone();
                let nl: Vec<K> = l
                    .iter()
                    .zip(&l0)
                    .map(|(x, y)| x.clone() - c.clone() * y.clone())
                    .collect();
                new_lin.push(nl);
            }
            lineality = new_lin;
            // Existing rays are projected to the constraint hyperplane; the
            // split-off direction becomes a new ray.
            for (r, t) in rays.iter_mut().zip(tight.iter_mut()) {
                let c = dot(a, r);
                if !c.is_zero() {
                    for (x, y) in r.iter_mut().zip(&l0) {
                        *x = x.clone() - c.clone() * y.clone();
                    }
                }
                t.push(ci);
            }
            let mut l0_tight = processed.clone();
            // a·l0 = 1 > 0: not tight for ci
            let _ = &mut l0_tight;
            rays.push(normalize_ray(&l0));
            tight.push(l0_tight);
            processed.push(ci);
            continue;
        }

        // Constraint vanishes on the lineality: classic ray step.
        let vals: Vec<K> = rays.iter().map(|r| dot(a, r)).collect();
        let pos_idx: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_pos()).collect();
        let neg_idx: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_neg()).collect();
        if neg_idx.is_empty() {
            // nothing cut; record tightness
            for i in 0..rays.len() {
                if vals[i].is_zero() {
                    tight[i].push(ci);
                }
            }
            processed.push(ci);
            continue;
        }

        let mut new_rays: Vec<Vec<K>> = Vec::new();
        let mut new_tight: Vec<Vec<usize>> = Vec::new();
        for i in 0..rays.len() {
            if !vals[i].is_neg() {
                let mut t = tight[i].clone();
                if vals[i].is_zero() {
                    t.push(ci);
                }
                new_rays.push(rays[i].clone());
                new_tight.push(t);
            }
        }
        for &p in &pos_idx {
            for &nidx in &neg_idx {
                if !adjacent(&tight, &rays, p, nidx) {
                    continue;
                }
                // (a·p) n - (a·n) p: nonnegative combination tight at ci
                let cp = vals[p].clone();
                let cn = vals[nidx].clone();
                let combo: Vec<K> = rays[nidx]
                    .iter()
                    .zip(&rays[p])
                    .map(|(rn, rp)| cp.clone() * rn.clone() - cn.clone() * rp.clone())
                    .collect();
                let mut t: Vec<usize> = tight[p]
                    .iter()
                    .filter(|x| tight[nidx].contains(x))
                    .cloned()
                    .collect();
                t.push(ci);
                new_rays.push(normalize_ray(&combo));
                new_tight.push(t);
            }
        }
        rays = new_rays;
        tight = new_tight;
        processed.push(ci);
    }

    rays = dedup_rays(rays);
    GeneratorRep {
        dim,
        lineality,
        rays,
    }
}

/// Combinatorial adjacency: `p` and `n` are adjacent iff no third ray's tight
/// set contains the intersection of theirs.
fn adjacent<K: OrderedExactField>(
    tight: &[Vec<usize>],
    rays: &[Vec<K>],
    p: usize,
    n: usize,
) -> bool {
    let common: Vec<usize> = tight[p]
        .iter()
        .filter(|x| tight[n].contains(x))
        .cloned()
        .collect();
    for i in 0..rays.len() {
        if i == p || i == n {
            continue;
        }
        if common.iter().all(|c| tight[i].contains(c)) {
            return false;
        }
    }
    true
}

fn dedup_rays<K: OrderedExactField>(rays: Vec<Vec<K>>) -> Vec<Vec<K>> {
    let mut out: Vec<Vec<K>> = Vec::new();
    for r in rays {
        if r.iter().all(|c| c.is_zero()) {
            continue;
        }
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// Facet representation of the nonnegative span of `rays`: returns
/// `(equalities, inequalities)` with
/// `cone = {x : E x = 0, A x >= 0}`.
/// Computed as the double description of the dual cone.
pub fn facets_of_rays<K: OrderedExactField>(
    dim: usize,
    rays: &[Vec<K>],
) -> (Vec<Vec<K>>, Vec<Vec<K>>) {
    let dual = cone_from_constraints(dim, &[], rays);
    // dual lineality = orthogonal complement of span(rays): equality normals
    (dual.lineality, dual.rays)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use num_traits::Zero;
    use num_rational::BigRational;

    fn v(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    fn sorted(mut rays: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
        rays.sort_by(|a, b| a.partial_cmp(b).unwrap());
        rays
    }

    #[test]
    fn quadrant_from_halfplanes() {
        let rep = cone_from_constraints(2, &[], &[v(&[1, 0]), v(&[0, 1])]);
        assert!(rep.is_pointed());
        assert_eq!(
            sorted(rep.rays),
            sorted(vec![v(&[1, 0]), v(&[0, 1])])
        );
    }

    #[test]
    fn halfplane_keeps_lineality() {
        let rep = cone_from_constraints(2, &[], &[v(&[1, 0])]);
        assert_eq!(rep.lineality.len(), 1);
        assert_eq!(rep.rays.len(), 1);
        // the ray direction satisfies x > 0
        assert!(rep.rays[0][0].is_pos());
    }

    #[test]
    fn slice_by_equality() {
        // {x + y + z = 0} ∩ orthant = {0}
        let rep = cone_from_constraints(
            3,
            &[v(&[1, 1, 1])],
            &[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])],
        );
        assert!(rep.rays.is_empty());
        assert!(rep.lineality.is_empty());
    }

    #[test]
    fn octant_has_three_extreme_rays() {
        let rep = cone_from_constraints(
            3,
            &[],
            &[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])],
        );
        assert_eq!(rep.rays.len(), 3);
        assert!(rep.is_pointed());
    }

    #[test]
    fn redundant_constraint_no_extra_rays() {
        // x>=0, y>=0, x+y>=0 (redundant)
        let rep = cone_from_constraints(2, &[], &[v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]);
        assert_eq!(rep.rays.len(), 2);
    }

    #[test]
    fn facets_roundtrip_orthant() {
        let (eqs, ineqs) = facets_of_rays(2, &[v(&[1, 0]), v(&[0, 1])]);
        assert!(eqs.is_empty());
        assert_eq!(ineqs.len(), 2);
        // each facet normal is nonnegative on both rays
        for f in &ineqs {
            assert!(!dot(f, &v(&[1, 0])).is_neg());
            assert!(!dot(f, &v(&[0, 1])).is_neg());
        }
    }

    #[test]
    fn facets_of_lower_dimensional_cone() {
        // single ray (1,1,0) in rank 3
        let (eqs, ineqs) = facets_of_rays(3, &[v(&[1, 1, 0])]);
        // span is 1-dimensional: two independent equalities
        assert_eq!(eqs.len(), 2);
        assert!(!ineqs.is_empty());
        for e in &eqs {
            assert!(dot(e, &v(&[1, 1, 0])).is_zero());
        }
    }

    #[test]
    fn cube_cross_section_square() {
        // cone over a square: 4 inequalities in rank 3
        let rep = cone_from_constraints(
            3,
            &[],
            &[v(&[1, 0, 1]), v(&[-1, 0, 1]), v(&[0, 1, 1]), v(&[0, -1, 1])],
        );
        assert_eq!(rep.rays.len(), 4);
        for r in &rep.rays {
            assert!(r[2].is_pos());
        }
    }
}
