//! Double description method for homogeneous cones.
//!
//! Given rows `a_1..a_m`, computes a generating system of the cone
//! `{ y : a_j · y <= 0 for all j }` as a lineality basis plus the extreme rays
//! of the pointed part. Constraints are added one at a time; adjacency of rays
//! is decided combinatorially from their sets of tight constraints.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use num_traits::{Signed, Zero};

use super::linalg::{dot, normalize_leading};
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub(crate) struct Ray {
    pub coords: Vec<Rational>,
    /// Indices of the processed constraints that vanish on this ray.
    pub tight: FixedBitSet,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct ConeGenerators {
    pub lineality: Vec<Vec<Rational>>,
    pub rays: Vec<Ray>,
}

fn normalized(mut v: Vec<Rational>) -> Vec<Rational> {
    let n = v.len();
    normalize_leading(&mut v, n);
    v
}

pub(crate) fn cone_generators(dim: usize, rows: &[Vec<Rational>]) -> ConeGenerators {
    let m = rows.len();
    let mut lineality: Vec<Vec<Rational>> = (0..dim)
        .map(|i| {
            let mut e = vec![Rational::zero(); dim];
            e[i] = Rational::from_integer(1.into());
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (j, a) in rows.iter().enumerate() {
        debug_assert_eq!(a.len(), dim);
        if let Some(k) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l = lineality.swap_remove(k);
            let mut al = dot(a, &l);
            if al.is_positive() {
                l.iter_mut().for_each(|x| *x = -&*x);
                al = -al;
            }
            let project = |v: &mut Vec<Rational>| {
                let f = dot(a, v) / &al;
                if !f.is_zero() {
                    for (x, y) in v.iter_mut().zip(&l) {
                        *x -= &f * y;
                    }
                }
            };
            for other in lineality.iter_mut() {
                project(other);
            }
            for r in rays.iter_mut() {
                project(&mut r.coords);
                r.coords = normalized(std::mem::take(&mut r.coords));
                r.tight.grow(m);
                r.tight.insert(j);
            }
            let mut tight = FixedBitSet::with_capacity(m);
            tight.insert_range(0..j);
            rays.push(Ray {
                coords: normalized(l),
                tight,
            });
            continue;
        }

        let values: Vec<Rational> = rays.iter().map(|r| dot(a, &r.coords)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if pos.is_empty() {
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    r.tight.insert(j);
                }
            }
            continue;
        }

        let mut next: Vec<Ray> = Vec::new();
        let mut seen: HashSet<Vec<Rational>> = HashSet::new();
        for (i, r) in rays.iter().enumerate() {
            if !values[i].is_positive() {
                let mut r = r.clone();
                if values[i].is_zero() {
                    r.tight.insert(j);
                }
                seen.insert(r.coords.clone());
                next.push(r);
            }
        }
        for &p in &pos {
            for &q in &neg {
                let mut common = rays[p].tight.clone();
                common.intersect_with(&rays[q].tight);
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(i, r)| i != p && i != q && common.is_subset(&r.tight));
                if blocked {
                    continue;
                }
                let vp = &values[p];
                let vq = -&values[q];
                let coords: Vec<Rational> = rays[q]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(x, y)| vp * x + &vq * y)
                    .collect();
                let coords = normalized(coords);
                if seen.insert(coords.clone()) {
                    common.insert(j);
                    next.push(Ray {
                        coords,
                        tight: common,
                    });
                }
            }
        }
        rays = next;
    }

    ConeGenerators { lineality, rays }
}
