//! Fixed-precision float output.
//!
//! Every float written to JSON or CSV is first rounded to
//! [`SIGNIFICANT_DIGITS`] significant digits; the shortest round-trip
//! representation of the rounded value is then printed. Rounding is
//! idempotent, so parsed output re-serializes to the same bytes.

use serde::Serializer;

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds to 12 significant digits; `-0.0` becomes `0.0`.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let rounded: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses");
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}

/// Text form used in CSV output; exponent notation outside `[1e-4, 1e15)`.
pub fn fmt_sig(x: f64) -> String {
    let x = round_sig(x);
    let a = x.abs();
    if a == 0.0 || (1e-4..1e15).contains(&a) || !a.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

pub fn sig12<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig(*x))
}

pub fn sig12_vec<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|&x| round_sig(x)))
}

pub fn sig12_opt<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&round_sig(*v)),
        None => s.serialize_none(),
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn text_form() {
        assert_eq!(fmt_sig(7.0), "7");
        assert_eq!(fmt_sig(-0.0), "0");
        assert_eq!(fmt_sig(2.461581705721), "2.46158170572");
        assert_eq!(fmt_sig(-3.552713678800501e-15), "-3.5527136788e-15");
        assert_eq!(fmt_sig(1e20), "1e20");
    }

    #[test]
    fn rounding() {
        assert_eq!(round_sig(17.833034976), 17.833034976);
        assert_eq!(round_sig(17.8330349764321), 17.8330349764);
        assert_eq!(round_sig(0.1 + 0.2), 0.3);
        assert_eq!(round_sig(-1e-17), -1e-17);
        assert_eq!(round_sig(-0.0).to_bits(), 0.0f64.to_bits());
        assert_eq!(fmt_sig(7.0), "7");
        assert_eq!(fmt_sig(2.0000000000004), "2");
    }

    proptest! {
        #[test]
        fn idempotent(x in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL) {
            let once = round_sig(x);
            prop_assert_eq!(round_sig(once).to_bits(), once.to_bits());
            let parsed: f64 = fmt_sig(x).parse().unwrap();
            prop_assert_eq!(parsed.to_bits(), once.to_bits());
        }
    }
}
