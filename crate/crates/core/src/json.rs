//! JSON shapes shared by the engines: complex numbers travel as `{re, im}`.

use serde::{Deserialize, Serialize};

use crate::Complex;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex> for ComplexJson {
    fn from(z: Complex) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexJson> for Complex {
    fn from(z: ComplexJson) -> Self {
        Complex::new(z.re, z.im)
    }
}

/// `#[serde(with = "crate::json::complex")]` for a bare `Complex` field.
pub mod complex {
    use super::ComplexJson;
    use crate::Complex;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex, s: S) -> Result<S::Ok, S::Error> {
        ComplexJson::from(*z).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex, D::Error> {
        ComplexJson::deserialize(d).map(Complex::from)
    }
}

/// Same as [`complex`] for `Vec<Complex>`.
pub mod complex_vec {
    use super::ComplexJson;
    use crate::Complex;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Complex], s: S) -> Result<S::Ok, S::Error> {
        let tmp: Vec<ComplexJson> = v.iter().copied().map(ComplexJson::from).collect();
        tmp.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Complex>, D::Error> {
        Ok(Vec::<ComplexJson>::deserialize(d)?
            .into_iter()
            .map(Complex::from)
            .collect())
    }
}

/// Same as [`complex`] for `Option<Complex>` (`null` when absent).
pub mod complex_opt {
    use super::ComplexJson;
    use crate::Complex;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &Option<Complex>, s: S) -> Result<S::Ok, S::Error> {
        z.map(ComplexJson::from).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Complex>, D::Error> {
        Ok(Option::<ComplexJson>::deserialize(d)?.map(Complex::from))
    }
}
