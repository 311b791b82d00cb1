//! Extraspecial 2-groups presented over their central quotient.
//!
//! A group of order `2^(2r+1)` is stored by what happens on cosets of its
//! center `Z = {1, z}`: an element is `z^j * g_{s_1} ... g_{s_t}` with
//! `s_1 < ... < s_t`, recorded as the center bit `j` plus the coset word.
//! Multiplication concatenates the generator words and bubbles them back
//! into ascending order; each swap of `g_i` past `g_k` pays the commutator
//! bit `[g_k, g_i]`, and each collision `g_i g_i` pays the square bit.
//! Squares and commutators of generators are central, so both live in two
//! bit tables and the induced map `Q(Zx) = x^2` is a quadratic form on the
//! quotient with polarization `B(Zx, Zy) = [x, y]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::Vector;
use crate::quadratic::{FormType, QuadraticForm};
use crate::symmetric_basis::induced_type_of_symmetric_space;

/// Element in normal form: center exponent plus generator-coset word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    center: bool,
    coset: Vector,
}

impl GroupElement {
    pub fn center_bit(&self) -> bool {
        self.center
    }

    pub fn coset(&self) -> Vector {
        self.coset
    }

    pub fn is_identity(&self) -> bool {
        !self.center && self.coset.is_zero()
    }

    pub fn is_central(&self) -> bool {
        self.coset.is_zero()
    }
}

impl fmt::Display for GroupElement {
    /// Normal form with 1-based generator subscripts: `z·g1·g3`, `z`, `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        if self.center {
            write!(f, "z")?;
            first = false;
        }
        for i in self.coset.support() {
            if !first {
                write!(f, "·")?;
            }
            write!(f, "g{}", i + 1)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement({self})")
    }
}

/// Extraspecial 2-group of order `2^(2r+1)`, described by the squares and
/// pairwise commutators of its `2r` coset generators.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GroupRepr", into = "GroupRepr")]
pub struct ExtraspecialGroup {
    r: usize,
    epsilon: FormType,
    /// Bit `i`: `g_i^2 = z`.
    squares: Vector,
    /// Row `i`, bit `j > i`: `[g_i, g_j] = z`.
    commutators: Vec<u64>,
}

impl ExtraspecialGroup {
    /// The group generated by `2r` involutions every pair of which has
    /// commutator `z`. Its type is the one forced on a space with a
    /// symmetric basis.
    pub fn from_symmetric_generators(r: usize) -> Result<Self> {
        check_r(r)?;
        let dim = 2 * r;
        let squares = Vector::zero(dim)?;
        let commutators: Vec<u64> = (0..dim)
            .map(|i| {
                let all = if dim == 64 {
                    u64::MAX
                } else {
                    (1u64 << dim) - 1
                };
                all & !((1u64 << (i + 1)) - 1)
            })
            .collect();
        let group = ExtraspecialGroup {
            r,
            epsilon: induced_type_of_symmetric_space(r),
            squares,
            commutators,
        };
        debug_assert_eq!(group.induced_form().classify()?, group.epsilon);
        Ok(group)
    }

    /// Central product of dihedral and quaternion blocks: `r` dihedral
    /// blocks for the plus type, `r - 1` dihedral blocks and one quaternion
    /// block for the minus type. Generator pairs `(g_{2k+1}, g_{2k+2})`
    /// commute across blocks and have commutator `z` inside one.
    pub fn from_standard_presentation(r: usize, epsilon: FormType) -> Result<Self> {
        check_r(r)?;
        let dim = 2 * r;
        let mut commutators = vec![0u64; dim];
        for k in 0..r {
            commutators[2 * k] = 1u64 << (2 * k + 1);
        }
        let squares = match epsilon {
            FormType::Hyperbolic => Vector::zero(dim)?,
            FormType::Elliptic => Vector::new(0b11u64 << (dim - 2), dim)?,
        };
        let group = ExtraspecialGroup {
            r,
            epsilon,
            squares,
            commutators,
        };
        debug_assert_eq!(group.induced_form().classify()?, group.epsilon);
        Ok(group)
    }

    /// Rebuilds a group from raw tables, validating that they describe an
    /// extraspecial group of the claimed type.
    pub fn from_parts(
        r: usize,
        epsilon: FormType,
        squares: Vector,
        commutators: Vec<u64>,
    ) -> Result<Self> {
        check_r(r)?;
        if squares.dim() != 2 * r {
            return Err(Error::DimensionMismatch {
                left: squares.dim(),
                right: 2 * r,
            });
        }
        let form = QuadraticForm::new(squares, commutators.clone())?;
        let actual = form.classify()?;
        if actual != epsilon {
            return Err(Error::InvalidForm {
                reason: format!("claimed type {epsilon}, induced form is {actual}"),
            });
        }
        Ok(ExtraspecialGroup {
            r,
            epsilon,
            squares,
            commutators,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn epsilon(&self) -> FormType {
        self.epsilon
    }

    /// Number of coset generators, `2r`.
    pub fn generator_count(&self) -> usize {
        2 * self.r
    }

    pub fn order(&self) -> u64 {
        1u64 << (2 * self.r + 1)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            center: false,
            coset: Vector::zero(2 * self.r).expect("2r >= 2"),
        }
    }

    pub fn z(&self) -> GroupElement {
        GroupElement {
            center: true,
            coset: Vector::zero(2 * self.r).expect("2r >= 2"),
        }
    }

    /// Canonical preimage `g_i` of the i-th quotient basis vector (0-based).
    pub fn generator(&self, i: usize) -> Result<GroupElement> {
        if i >= 2 * self.r {
            return Err(Error::GeneratorIndex {
                index: i,
                count: 2 * self.r,
            });
        }
        Ok(GroupElement {
            center: false,
            coset: Vector::unit(i, 2 * self.r)?,
        })
    }

    pub fn generators(&self) -> Vec<GroupElement> {
        (0..2 * self.r)
            .map(|i| self.generator(i).expect("index in range"))
            .collect()
    }

    pub fn element(&self, center: bool, coset: Vector) -> Result<GroupElement> {
        if coset.dim() != 2 * self.r {
            return Err(Error::DimensionMismatch {
                left: coset.dim(),
                right: 2 * self.r,
            });
        }
        Ok(GroupElement { center, coset })
    }

    /// Packs `(center, coset)` into a `(2r + 1)`-bit word: the center is the
    /// top bit, so dropping it is the quotient map onto `Z_2^{2r}`.
    pub fn element_id(&self, e: &GroupElement) -> u64 {
        (e.center as u64) << (2 * self.r) | e.coset.bits()
    }

    pub fn element_from_id(&self, id: u64) -> Result<GroupElement> {
        if id >> (2 * self.r + 1) != 0 {
            return Err(Error::StrayBits {
                dim: 2 * self.r + 1,
            });
        }
        Ok(GroupElement {
            center: id >> (2 * self.r) & 1 == 1,
            coset: Vector::new(id & ((1u64 << (2 * self.r)) - 1), 2 * self.r)?,
        })
    }

    /// All `2^(2r + 1)` elements in id order. Guarded to desk scales.
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        if self.r > 8 {
            return Err(Error::GuardExceeded {
                what: "full element enumeration r",
                limit: 8,
                got: self.r,
            });
        }
        (0..self.order())
            .map(|id| self.element_from_id(id))
            .collect()
    }

    /// Cocycle for the normal-form product: the central correction picked
    /// up when `g`-words of `a` and `b` are merged into ascending order.
    fn cocycle(&self, a: &Vector, b: &Vector) -> u8 {
        let mut acc = (self.squares.bits() & a.bits() & b.bits()).count_ones();
        for k in b.support() {
            acc += (a.bits() & self.commutators[k]).count_ones();
        }
        (acc & 1) as u8
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check_member(a)?;
        self.check_member(b)?;
        Ok(GroupElement {
            center: a.center ^ b.center ^ (self.cocycle(&a.coset, &b.coset) == 1),
            coset: a.coset.add(&b.coset)?,
        })
    }

    /// `a^2`, always central.
    pub fn square(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check_member(a)?;
        Ok(GroupElement {
            center: self.cocycle(&a.coset, &a.coset) == 1,
            coset: Vector::zero(2 * self.r)?,
        })
    }

    pub fn inverse(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check_member(a)?;
        Ok(GroupElement {
            center: a.center ^ (self.cocycle(&a.coset, &a.coset) == 1),
            coset: a.coset,
        })
    }

    /// `[a, b] = a^-1 b^-1 a b`, always central.
    pub fn commutator(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        let left = self.multiply(&self.inverse(a)?, &self.inverse(b)?)?;
        let right = self.multiply(a, b)?;
        self.multiply(&left, &right)
    }

    pub fn order_of(&self, a: &GroupElement) -> Result<u32> {
        if a.is_identity() {
            return Ok(1);
        }
        if self.square(a)?.is_identity() {
            Ok(2)
        } else {
            Ok(4)
        }
    }

    /// The quadratic form `Q(Zx) = x^2` on the central quotient, with
    /// polarization `B(Zx, Zy) = [x, y]`.
    pub fn induced_form(&self) -> QuadraticForm {
        QuadraticForm::new(self.squares, self.commutators.clone())
            .expect("group tables are valid form tables")
    }

    /// True for groups built from the all-commuting involution generators.
    pub fn has_symmetric_generators(&self) -> bool {
        let dim = 2 * self.r;
        let all = if dim == 64 {
            u64::MAX
        } else {
            (1u64 << dim) - 1
        };
        self.squares.is_zero()
            && (0..dim).all(|i| self.commutators[i] == all & !((1u64 << (i + 1)) - 1))
    }

    /// Image of `g` under the generator permutation `sigma` (images listed
    /// for indices `0..2r`): relabel the word letters and renormalize,
    /// paying `z` for every inversion since all commutators are `z`.
    /// Only defined on the symmetric-generator presentation.
    pub fn sigma_tilde(&self, sigma: &[usize], g: &GroupElement) -> Result<GroupElement> {
        if !self.has_symmetric_generators() {
            return Err(Error::WrongGroupFlavor);
        }
        self.check_member(g)?;
        check_permutation(sigma, 2 * self.r)?;
        let images: Vec<usize> = g.coset.support().map(|i| sigma[i]).collect();
        let mut swaps = 0u8;
        let mut bits = 0u64;
        for (k, &m) in images.iter().enumerate() {
            bits |= 1u64 << m;
            for &later in &images[k + 1..] {
                if m > later {
                    swaps ^= 1;
                }
            }
        }
        Ok(GroupElement {
            center: g.center ^ (swaps == 1),
            coset: Vector::new(bits, 2 * self.r)?,
        })
    }

    /// Checks that the generator action of the symmetric group embeds:
    /// for the transposition `(0 1)`, the full cycle, and their product,
    /// the induced maps must be automorphisms, bijective, faithful, and
    /// compose the way the permutations do.
    pub fn verify_sigma_tilde_embedding(&self) -> Result<()> {
        if !self.has_symmetric_generators() {
            return Err(Error::WrongGroupFlavor);
        }
        let n = 2 * self.r;
        let mut tau: Vec<usize> = (0..n).collect();
        tau.swap(0, 1);
        let gamma: Vec<usize> = (1..n).chain([0]).collect();
        let compose =
            |f: &[usize], g: &[usize]| -> Vec<usize> { (0..n).map(|i| f[g[i]]).collect() };
        let tau_gamma = compose(&tau, &gamma);

        let fail = |witness: String| -> Result<()> {
            Err(Error::CheckFailed {
                check: "sigma-tilde embedding",
                witness,
            })
        };

        // z is fixed, and each generator goes to the relabeled generator.
        for sigma in [&tau, &gamma, &tau_gamma] {
            let z = self.z();
            if self.sigma_tilde(sigma, &z)? != z {
                return fail("z not fixed".into());
            }
            for i in 0..n {
                let img = self.sigma_tilde(sigma, &self.generator(i)?)?;
                if img != self.generator(sigma[i])? {
                    return fail(format!(
                        "generator g{} not sent to g{}",
                        i + 1,
                        sigma[i] + 1
                    ));
                }
            }
        }

        // Faithfulness: a non-identity permutation moves some generator.
        for sigma in [&tau, &gamma] {
            if sigma.iter().enumerate().all(|(i, &s)| s == i) {
                continue;
            }
            let moved = (0..n).find(|&i| sigma[i] != i).expect("non-identity");
            let img = self.sigma_tilde(sigma, &self.generator(moved)?)?;
            if img == self.generator(moved)? {
                return fail(format!("non-identity permutation fixes g{}", moved + 1));
            }
        }

        // Automorphism and composition checks; exhaustive over all element
        // pairs at desk scales, over generator pairs beyond.
        let exhaust = self.r <= 4;
        let probes: Vec<GroupElement> = if exhaust {
            self.elements()?
        } else {
            let mut v = self.generators();
            v.push(self.z());
            v
        };
        for sigma in [&tau, &gamma] {
            let mut seen = vec![false; self.order() as usize];
            for a in &probes {
                let img = self.sigma_tilde(sigma, a)?;
                let slot = self.element_id(&img) as usize;
                if exhaust {
                    if seen[slot] {
                        return fail(format!("images collide at {img}"));
                    }
                    seen[slot] = true;
                }
                for b in &probes {
                    let lhs = self.sigma_tilde(sigma, &self.multiply(a, b)?)?;
                    let rhs = self.multiply(&img, &self.sigma_tilde(sigma, b)?)?;
                    if lhs != rhs {
                        return fail(format!("not a homomorphism at ({a}, {b}) under {sigma:?}"));
                    }
                }
            }
        }
        for a in &probes {
            let lhs = self.sigma_tilde(&tau_gamma, a)?;
            let rhs = self.sigma_tilde(&tau, &self.sigma_tilde(&gamma, a)?)?;
            if lhs != rhs {
                return fail(format!("composite action disagrees at {a}"));
            }
        }
        Ok(())
    }

    fn check_member(&self, e: &GroupElement) -> Result<()> {
        if e.coset.dim() != 2 * self.r {
            return Err(Error::DimensionMismatch {
                left: e.coset.dim(),
                right: 2 * self.r,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for ExtraspecialGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ExtraspecialGroup(r = {}, {}, order {})",
            self.r,
            self.epsilon,
            self.order()
        )
    }
}

fn check_r(r: usize) -> Result<()> {
    if r == 0 || 2 * r > 32 {
        return Err(Error::RankOutOfRange { r, max: 16 });
    }
    Ok(())
}

fn check_permutation(sigma: &[usize], n: usize) -> Result<()> {
    if sigma.len() != n {
        return Err(Error::BadPermutation {
            reason: format!("expected {} images, got {}", n, sigma.len()),
        });
    }
    let mut seen = vec![false; n];
    for &s in sigma {
        if s >= n || seen[s] {
            return Err(Error::BadPermutation {
                reason: format!("images are not a permutation of 0..{n}"),
            });
        }
        seen[s] = true;
    }
    Ok(())
}

/// Wire shape mirroring the form codec: hex words, bit `i` = generator `i`.
#[derive(Serialize, Deserialize)]
struct GroupRepr {
    r: usize,
    epsilon: FormType,
    gen_squares: String,
    gen_commutators: Vec<String>,
}

impl TryFrom<GroupRepr> for ExtraspecialGroup {
    type Error = Error;

    fn try_from(repr: GroupRepr) -> Result<Self> {
        let dim = 2 * repr.r;
        let squares = Vector::from_hex(&repr.gen_squares, dim)?;
        let commutators = repr
            .gen_commutators
            .iter()
            .map(|s| Vector::from_hex(s, dim).map(|v| v.bits()))
            .collect::<Result<Vec<_>>>()?;
        ExtraspecialGroup::from_parts(repr.r, repr.epsilon, squares, commutators)
    }
}

impl From<ExtraspecialGroup> for GroupRepr {
    fn from(g: ExtraspecialGroup) -> GroupRepr {
        GroupRepr {
            r: g.r,
            epsilon: g.epsilon,
            gen_squares: g.squares.to_hex(),
            gen_commutators: g.commutators.iter().map(|w| format!("{w:x}")).collect(),
        }
    }
}
