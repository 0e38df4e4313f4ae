//! Geometry of three Bloch vectors: the parallelepiped volume from lengths
//! and unit-vector dot products, its inversion for an unknown length, and
//! construction of vectors realizing prescribed dot products.

use nalgebra::Vector3;

use super::BlochVector;
use crate::error::{Error, Result};

/// Radicand values down to this are treated as zero.
pub const RADICAND_TOL: f64 = 1e-10;

/// Dot products of unit vectors, ordered `(a.b, a.c, b.c)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitDots {
    pub ab: f64,
    pub ac: f64,
    pub bc: f64,
}

impl UnitDots {
    pub fn new(ab: f64, ac: f64, bc: f64) -> Self {
        Self { ab, ac, bc }
    }

    /// Gram determinant `1 - ab^2 - ac^2 - bc^2 + 2 ab ac bc`, clamped at
    /// zero when only slightly negative.
    pub fn gram_determinant(&self) -> Result<f64> {
        let Self { ab, ac, bc } = *self;
        let det = 1.0 - ab * ab - ac * ac - bc * bc + 2.0 * ab * ac * bc;
        if det < -RADICAND_TOL {
            return Err(Error::InconsistentGeometry(format!(
                "dot products {ab}, {ac}, {bc} admit no real unit vectors (determinant {det:.3e})"
            )));
        }
        Ok(det.max(0.0))
    }
}

/// `|V_abc| = r_a r_b r_c sqrt(gram_determinant)`.
pub fn vabc_magnitude(lengths: [f64; 3], dots: UnitDots) -> Result<f64> {
    if lengths.iter().any(|r| !(0.0..=1.0 + 1e-10).contains(r)) {
        return Err(Error::Validation(format!("Bloch lengths {lengths:?} outside [0, 1]")));
    }
    if [dots.ab, dots.ac, dots.bc].iter().any(|d| d.abs() > 1.0 + 1e-10) {
        return Err(Error::Validation(format!("unit dot products {dots:?} outside [-1, 1]")));
    }
    Ok(lengths.iter().product::<f64>() * dots.gram_determinant()?.sqrt())
}

/// Length of `r_a` recovered from a volume, assuming `r_b = r_c = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InferredLength {
    /// Estimate clamped to `[0, 1]`.
    pub value: f64,
    /// Unclamped solution of the volume formula.
    pub raw: f64,
    /// Set when `raw` left `[0, 1]` by more than `1e-6`.
    pub out_of_model: bool,
}

/// Solves `|V| = r_a sqrt(gram_determinant)` for `r_a`.
pub fn infer_vector_length(dots: UnitDots, vabc: f64) -> Result<InferredLength> {
    let det = dots.gram_determinant()?;
    if det <= RADICAND_TOL {
        return Err(Error::InconsistentGeometry(if vabc.abs() > RADICAND_TOL {
            format!("coplanar unit vectors cannot carry a volume of {vabc}")
        } else {
            "coplanar unit vectors leave the length undetermined".into()
        }));
    }
    let raw = vabc.abs() / det.sqrt();
    Ok(InferredLength {
        value: raw.clamp(0.0, 1.0),
        raw,
        out_of_model: raw > 1.0 + 1e-6,
    })
}

/// Unit vectors with the given dot products, `a` along `z`, `b` in the
/// `xz`-plane with non-negative `x`, and the handedness of `c` chosen so the
/// signed volume has the sign of `orientation` (positive when zero).
pub fn unit_triple_from_dots(dots: UnitDots, orientation: f64) -> Result<[BlochVector; 3]> {
    dots.gram_determinant()?;
    let a = Vector3::z();
    let bx = (1.0 - dots.ab * dots.ab).max(0.0).sqrt();
    let b = Vector3::new(bx, 0.0, dots.ab);
    let cz = dots.ac;
    let cx = if bx > 1e-12 {
        (dots.bc - dots.ab * dots.ac) / bx
    } else {
        0.0
    };
    let cy2 = 1.0 - cx * cx - cz * cz;
    if cy2 < -RADICAND_TOL {
        return Err(Error::InconsistentGeometry(format!(
            "dot products {dots:?} cannot be realized"
        )));
    }
    let cy = cy2.max(0.0).sqrt() * if orientation < 0.0 { -1.0 } else { 1.0 };
    let c = Vector3::new(cx, cy, cz);
    Ok([
        BlochVector::from_vector(a)?,
        BlochVector::from_vector(b)?,
        BlochVector::from_vector(c.normalize())?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;
    use crate::states::{scalar_triple_product, PreparationTriple};

    #[test]
    fn orthonormal_and_degenerate_volumes() {
        let ortho = UnitDots::new(0.0, 0.0, 0.0);
        assert!((vabc_magnitude([1.0; 3], ortho).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(vabc_magnitude([0.0, 1.0, 1.0], ortho).unwrap(), 0.0);
        assert!(vabc_magnitude([1.0; 3], UnitDots::new(0.9, -0.9, 0.9)).is_err());
    }

    #[test]
    fn flower_volume_from_dots() {
        let theta = std::f64::consts::FRAC_PI_4;
        let t = PreparationTriple::pure_flower(theta).unwrap();
        let r: Vec<BlochVector> = t.states.iter().map(|s| BlochVector::from_state(s).unwrap()).collect();
        let dots = UnitDots::new(r[0].dot(&r[1]), r[0].dot(&r[2]), r[1].dot(&r[2]));
        let m = vabc_magnitude([1.0; 3], dots).unwrap();
        assert!((m - 3.0 * 6f64.sqrt() / 8.0).abs() < 1e-12);
    }

    #[test]
    fn inference_cases() {
        let dots = UnitDots::new(0.5, 0.27, -0.03);
        let pure = vabc_magnitude([1.0; 3], dots).unwrap();
        assert!((infer_vector_length(dots, -pure).unwrap().value - 1.0).abs() < 1e-12);
        assert_eq!(infer_vector_length(dots, 0.0).unwrap().value, 0.0);
        let over = infer_vector_length(dots, 1.5 * pure).unwrap();
        assert!(over.out_of_model && over.value == 1.0);
        assert!(infer_vector_length(UnitDots::new(1.0, 1.0, 1.0), 0.3).is_err());
    }

    #[test]
    fn inference_recovers_constructed_length() {
        let mut rng = random::seeded(9);
        let [a, b, c] = [0; 3].map(|_| {
            let v = random::bloch_vector(&mut rng);
            BlochVector::from_vector(v.vector().normalize()).unwrap()
        });
        let ra = BlochVector::from_vector(a.vector() * 0.8).unwrap();
        let dots = UnitDots::new(a.dot(&b), a.dot(&c), b.dot(&c));
        let v = scalar_triple_product(&ra, &b, &c);
        assert!((infer_vector_length(dots, v).unwrap().value - 0.8).abs() < 1e-10);
    }

    #[test]
    fn constructed_triple_realizes_dots() {
        let dots = UnitDots::new(0.5, 0.27, -0.03);
        let [a, b, c] = unit_triple_from_dots(dots, -1.0).unwrap();
        assert!((a.dot(&b) - 0.5).abs() < 1e-12);
        assert!((a.dot(&c) - 0.27).abs() < 1e-12);
        assert!((b.dot(&c) + 0.03).abs() < 1e-12);
        let v = scalar_triple_product(&a, &b, &c);
        assert!(v < 0.0);
        assert!((v.abs() - vabc_magnitude([1.0; 3], dots).unwrap()).abs() < 1e-12);
        assert!(unit_triple_from_dots(UnitDots::new(0.9, -0.9, 0.9), 1.0).is_err());
    }
}
