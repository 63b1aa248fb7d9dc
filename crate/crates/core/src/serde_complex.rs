//! `{"re": .., "im": ..}` (de)serialization for complex fields, for use with
//! `#[serde(with = "serde_complex")]`.

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
struct Parts {
    re: f64,
    im: f64,
}

pub fn serialize<S: Serializer>(z: &Complex64, serializer: S) -> Result<S::Ok, S::Error> {
    Parts { re: z.re, im: z.im }.serialize(serializer)
}

pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Complex64, D::Error> {
    let p = Parts::deserialize(deserializer)?;
    Ok(Complex64::new(p.re, p.im))
}
