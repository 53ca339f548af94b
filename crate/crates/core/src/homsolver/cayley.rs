//! The self-homomorphism `G □ G -> G` of a circulant, `(u, v) ↦ u + v`.

use super::{HomError, Homomorphism};
use crate::graph::Graph;

fn cyclic_values(g: &Graph) -> Result<(usize, Vec<usize>), HomError> {
    let labels = g
        .labels()
        .ok_or_else(|| HomError::NotCirculant("graph has no labels".into()))?;
    let n = g.order();
    let mut values = Vec::with_capacity(n);
    for l in labels {
        match l.as_cyclic() {
            Some((value, modulus)) if modulus == n => values.push(value),
            _ => return Err(HomError::NotCirculant(format!("label {l} is not an element of Z_{n}"))),
        }
    }
    Ok((n, values))
}

/// For a circulant `G` (labelled by `Z_n`), the addition map on
/// `G.cartesian_product(&G)`, verified edge by edge.
pub fn normal_cayley_self_hom(g: &Graph) -> Result<Homomorphism, HomError> {
    let (n, values) = cyclic_values(g)?;
    let mut by_value = vec![usize::MAX; n];
    for (i, &x) in values.iter().enumerate() {
        by_value[x] = i;
    }
    let map: Vec<usize> = (0..n * n)
        .map(|p| by_value[(values[p / n] + values[p % n]) % n])
        .collect();
    Homomorphism::certify(&g.cartesian_product(g), g, map)
        .ok_or_else(|| HomError::Defect("addition is not a homomorphism of the square".into()))
}

/// Moves a square homomorphism `C □ C -> C` along an isomorphism
/// `iso: C -> K`, giving `K □ K -> K`: `(x, y) ↦ iso(hom(iso⁻¹ x, iso⁻¹ y))`.
pub fn transport_square_hom(hom: &Homomorphism, iso: &[usize], target: &Graph) -> Result<Homomorphism, HomError> {
    let n = iso.len();
    if target.order() != n || hom.source_order() != n * n || hom.target_order() != n {
        return Err(HomError::Defect("orders do not match for transport".into()));
    }
    let mut inv = vec![usize::MAX; n];
    for (u, &x) in iso.iter().enumerate() {
        if x >= n || inv[x] != usize::MAX {
            return Err(HomError::Defect("transport map is not a bijection".into()));
        }
        inv[x] = u;
    }
    let map: Vec<usize> = (0..n * n)
        .map(|p| iso[hom.map()[inv[p / n] * n + inv[p % n]]])
        .collect();
    Homomorphism::certify(&target.cartesian_product(target), target, map)
        .ok_or_else(|| HomError::Defect("transported map is not a homomorphism".into()))
}
