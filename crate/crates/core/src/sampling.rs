//! Seeded random generators for groupoid elements and vertices, used by the
//! property suites and the CLI fuzzers.

use rand::Rng;

use crate::cantor::Permutation;
use crate::error::Result;
use crate::grigorchuk::KleinLabel;
use crate::groupoid::GroupoidElement;

/// One random generator with domain `C(m)`, keeping the range within `1..=max_rank`.
pub fn random_generator<R: Rng>(rng: &mut R, m: usize, max_rank: usize) -> Result<GroupoidElement> {
    loop {
        let i = rng.gen_range(0..m);
        match rng.gen_range(0..7) {
            0 if m < max_rank => return GroupoidElement::split(m, i),
            1 if m > 1 && i + 1 < m => return Ok(GroupoidElement::split(m - 1, i)?.invert()),
            2 => return GroupoidElement::sigma(m, i),
            3 => return GroupoidElement::klein_at(m, i, KleinLabel::B),
            4 => return GroupoidElement::klein_at(m, i, KleinLabel::C),
            5 => return GroupoidElement::klein_at(m, i, KleinLabel::D),
            6 => {
                let mut images: Vec<usize> = (0..m).collect();
                rand::seq::SliceRandom::shuffle(images.as_mut_slice(), rng);
                return Ok(GroupoidElement::from_permutation(Permutation::from_images(
                    images,
                )?));
            }
            _ => continue,
        }
    }
}

/// Product of `len` random generators starting from `C(m)`.
pub fn random_element<R: Rng>(
    rng: &mut R,
    m: usize,
    max_rank: usize,
    len: usize,
) -> Result<GroupoidElement> {
    let mut acc = GroupoidElement::identity(m);
    for _ in 0..len {
        let g = random_generator(rng, acc.range_roots(), max_rank)?;
        acc = g.multiply(&acc)?;
    }
    Ok(acc)
}

/// Random element `C(m) → C(target)`: a random walk, then splits or merges to land
/// on the requested range.
pub fn random_element_to<R: Rng>(
    rng: &mut R,
    m: usize,
    target: usize,
    len: usize,
) -> Result<GroupoidElement> {
    let cap = target.max(m) + 1;
    let mut acc = random_element(rng, m, cap, len)?;
    while acc.range_roots() != target {
        let r = acc.range_roots();
        let i = rng.gen_range(0..r.min(target).max(1));
        let step = if r < target {
            GroupoidElement::split(r, i.min(r - 1))?
        } else {
            GroupoidElement::split(r - 1, i.min(r - 2))?.invert()
        };
        acc = step.multiply(&acc)?;
    }
    Ok(acc)
}

/// Random random-walk representative of a rank-`rank` vertex.
pub fn random_vertex<R: Rng>(rng: &mut R, rank: usize, len: usize) -> Result<crate::poset::Vertex> {
    crate::poset::Vertex::new(random_element_to(rng, 1, rank, len)?)
}
