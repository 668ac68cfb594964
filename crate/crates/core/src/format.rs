//! Fixed-width float formatting for reports.
//!
//! Every float in a report is written with 17 significant digits so that
//! identical runs produce byte-identical files. JSON has no infinity, so
//! non-finite values are written as the strings `"inf"`, `"-inf"` and `"nan"`.

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// `x` with 17 significant digits, or `inf` / `-inf` / `nan`.
pub fn sig17(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{x:.16e}")
    }
}

pub(crate) fn json_number(x: f64) -> Box<RawValue> {
    let text = if x.is_finite() {
        sig17(x)
    } else {
        format!("\"{}\"", sig17(x))
    };
    RawValue::from_string(text).expect("formatted float is valid JSON")
}

pub(crate) fn ser_f64<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    json_number(*x).serialize(s)
}

pub(crate) fn ser_complex<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Complex", 2)?;
    st.serialize_field("re", &json_number(z.re))?;
    st.serialize_field("im", &json_number(z.im))?;
    st.end()
}

pub(crate) fn ser_opt_complex<S: Serializer>(z: &Option<Complex64>, s: S) -> Result<S::Ok, S::Error> {
    match z {
        Some(z) => ser_complex(z, s),
        None => s.serialize_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(sig17(1.0), "1.0000000000000000e0");
        assert_eq!(sig17(-0.0128), "-1.2800000000000001e-2");
        assert_eq!(sig17(f64::INFINITY), "inf");
        assert_eq!(json_number(f64::NEG_INFINITY).get(), "\"-inf\"");
        assert_eq!(json_number(0.1).get(), "1.0000000000000001e-1");
        // round trip is lossless
        for x in [0.1, 1.0 / 3.0, 6.02e23, -1e-300] {
            assert_eq!(sig17(x).parse::<f64>().unwrap(), x);
        }
    }
}
