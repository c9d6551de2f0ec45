//! Direct and semidirect products.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};
use crate::perm::Permutation;
use crate::subgroup::Subgroup;

/// A product `A ⋊ B` together with the images of both factors.
#[derive(Debug, Clone)]
pub struct ProductGroup {
    pub group: FiniteGroup,
    /// Image of `A`; normal in `group`.
    pub normal: Subgroup,
    /// Image of `B`.
    pub complement: Subgroup,
}

/// An automorphism of a group, as the image of every element.
pub type Automorphism = Vec<Elem>;

/// Extends an assignment of images to `a`'s generators to a full map,
/// checking that it is a well-defined bijective homomorphism.
pub fn automorphism_from_images(a: &FiniteGroup, gen_images: &[Elem]) -> Result<Automorphism> {
    let gens = a.generator_elems();
    if gen_images.len() != gens.len() {
        return Err(Error::NotAnAutomorphism("one image per generator required"));
    }
    if gen_images.iter().any(|&x| x as usize >= a.order()) {
        return Err(Error::NotAnAutomorphism("image outside the group"));
    }
    let n = a.order();
    let mut map = alloc::vec![u32::MAX; n];
    map[0] = 0;
    let mut queue = alloc::vec![0 as Elem];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (s, &g) in gens.iter().enumerate() {
            let y = a.mul(x, g);
            let fy = a.mul(map[x as usize], gen_images[s]);
            if map[y as usize] == u32::MAX {
                map[y as usize] = fy;
                queue.push(y);
            } else if map[y as usize] != fy {
                return Err(Error::NotAnAutomorphism("generator images do not define a homomorphism"));
            }
        }
        i += 1;
    }
    check_automorphism(a, &map)?;
    Ok(map)
}

fn check_automorphism(a: &FiniteGroup, map: &[Elem]) -> Result<()> {
    let n = a.order();
    if map.len() != n {
        return Err(Error::NotAnAutomorphism("map has the wrong length"));
    }
    let mut hit = alloc::vec![false; n];
    for &y in map {
        if y as usize >= n || hit[y as usize] {
            return Err(Error::NotAnAutomorphism("map is not a bijection"));
        }
        hit[y as usize] = true;
    }
    for x in 0..n as Elem {
        for y in 0..n as Elem {
            if map[a.mul(x, y) as usize] != a.mul(map[x as usize], map[y as usize]) {
                return Err(Error::NotAnAutomorphism("map is not a homomorphism"));
            }
        }
    }
    Ok(())
}

/// `A × B` acting on the disjoint union of the two point sets.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<ProductGroup> {
    let (na, nb) = (a.order(), b.order());
    let limits = a.limits().clone();
    if na * nb > limits.max_order {
        return Err(Error::OrderLimitExceeded { max: limits.max_order });
    }
    let (da, db) = (a.degree(), b.degree());
    let n = na * nb;
    let idx = |x: Elem, y: Elem| x as usize * nb + y as usize;
    let mut elements = Vec::with_capacity(n);
    for x in 0..na as Elem {
        for y in 0..nb as Elem {
            let mut images: Vec<u32> = a.element(x).images().to_vec();
            images.extend(b.element(y).images().iter().map(|&p| p + da as u32));
            elements.push(Permutation::from_images(images)?);
        }
    }
    let mut table = alloc::vec![0 as Elem; n * n];
    for x1 in 0..na as Elem {
        for y1 in 0..nb as Elem {
            for x2 in 0..na as Elem {
                for y2 in 0..nb as Elem {
                    table[idx(x1, y1) * n + idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2)) as Elem;
                }
            }
        }
    }
    let mut gens: Vec<Elem> = a.generator_elems().iter().map(|&g| idx(g, 0) as Elem).collect();
    gens.extend(b.generator_elems().iter().map(|&g| idx(0, g) as Elem));
    finish(da + db, elements, table, gens, limits, na, nb, a, b)
}

/// `A ⋊ B` where `action[i]` is the automorphism of `A` induced by the
/// `i`-th generator of `B`. Multiplication is
/// `(a₁, b₁)(a₂, b₂) = (a₁ · φ_{b₁}(a₂), b₁b₂)`, realized by the regular
/// right action on the `|A||B|` pairs.
pub fn semidirect_product(a: &FiniteGroup, b: &FiniteGroup, action: &[Automorphism]) -> Result<ProductGroup> {
    let (na, nb) = (a.order(), b.order());
    let limits = a.limits().clone();
    if na * nb > limits.max_order {
        return Err(Error::OrderLimitExceeded { max: limits.max_order });
    }
    let bgens = b.generator_elems();
    if action.len() != bgens.len() {
        return Err(Error::ActionNotHomomorphism);
    }
    for phi in action {
        check_automorphism(a, phi)?;
    }
    // φ_b for every b, with φ_{b s} = φ_b ∘ φ_s checked on every (b, s)
    let mut phi: Vec<Option<Automorphism>> = alloc::vec![None; nb];
    phi[0] = Some((0..na as Elem).collect());
    let mut queue = alloc::vec![0 as Elem];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (s, &g) in bgens.iter().enumerate() {
            let y = b.mul(x, g);
            let fx = phi[x as usize].as_ref().unwrap();
            let composed: Automorphism = action[s].iter().map(|&v| fx[v as usize]).collect();
            match &phi[y as usize] {
                None => {
                    phi[y as usize] = Some(composed);
                    queue.push(y);
                }
                Some(existing) if *existing != composed => return Err(Error::ActionNotHomomorphism),
                Some(_) => {}
            }
        }
        i += 1;
    }
    let phi: Vec<Automorphism> = phi.into_iter().map(Option::unwrap).collect();

    let n = na * nb;
    let idx = |x: Elem, y: Elem| x as usize * nb + y as usize;
    let mut table = alloc::vec![0 as Elem; n * n];
    for x1 in 0..na as Elem {
        for y1 in 0..nb as Elem {
            let f = &phi[y1 as usize];
            for x2 in 0..na as Elem {
                for y2 in 0..nb as Elem {
                    let prod = idx(a.mul(x1, f[x2 as usize]), b.mul(y1, y2));
                    table[idx(x1, y1) * n + idx(x2, y2)] = prod as Elem;
                }
            }
        }
    }
    let elements = (0..n)
        .map(|x| Permutation::from_images((0..n).map(|p| table[p * n + x]).collect()))
        .collect::<Result<Vec<_>>>()?;
    let mut gens: Vec<Elem> = a.generator_elems().iter().map(|&g| idx(g, 0) as Elem).collect();
    gens.extend(bgens.iter().map(|&g| idx(0, g) as Elem));
    finish(n, elements, table, gens, limits, na, nb, a, b)
}

#[allow(clippy::too_many_arguments)]
fn finish(
    degree: usize,
    elements: Vec<Permutation>,
    table: Vec<Elem>,
    gens: Vec<Elem>,
    limits: crate::group::Limits,
    na: usize,
    nb: usize,
    a: &FiniteGroup,
    b: &FiniteGroup,
) -> Result<ProductGroup> {
    let (group, pos) = FiniteGroup::from_parts(degree, elements, table, gens, limits);
    let normal_gens = a.generator_elems().iter().map(|&g| pos[g as usize * nb]).collect();
    let normal = Subgroup::from_parts_unchecked(&group, (0..na).map(|x| pos[x * nb]), normal_gens);
    let comp_gens = b.generator_elems().iter().map(|&g| pos[g as usize]).collect();
    let complement = Subgroup::from_parts_unchecked(&group, (0..nb).map(|y| pos[y]), comp_gens);
    Ok(ProductGroup { group, normal, complement })
}
