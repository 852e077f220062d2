//! Decimal wire format shared by every CSV column and printed value.
//!
//! Numbers travel as 12-significant-digit decimal strings. Formatting goes
//! through Rust's own float printer (no libm), so the same value produces the
//! same bytes on every platform, and `round_sig12` (format then parse) is the
//! canonical quantization that rank statistics apply before comparing values:
//! a tau recomputed from an emitted CSV then matches the recorded tau exactly.

use crate::scalar::Scalar;

const SIG_DIGITS: usize = 12;

/// Base-10 exponent of `x` (position of the leading digit), taken from the
/// shortest round-trip scientific rendering so no libm log is involved.
fn decimal_exponent(x: f64) -> i32 {
    let s = format!("{:e}", x.abs());
    let e = s.find('e').expect("scientific format always carries an exponent");
    s[e + 1..].parse().expect("exponent is an integer")
}

/// `x` as a 12-significant-digit decimal string. Positional notation inside
/// a sane magnitude window, scientific outside it; zero prints as a plain
/// run of zeros so `-0.0` cannot leak a sign into the output.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return format!("{:.*}", SIG_DIGITS, 0.0);
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exp = decimal_exponent(x);
    if (-4..SIG_DIGITS as i32).contains(&exp) {
        let prec = (SIG_DIGITS as i32 - 1 - exp).max(0) as usize;
        format!("{:.*}", prec, x)
    } else {
        format!("{:.*e}", SIG_DIGITS - 1, x)
    }
}

/// `x` quantized to what its wire representation parses back to.
pub fn round_sig12(x: f64) -> f64 {
    format_sig12(x).parse().expect("wire strings parse back to f64")
}

pub fn format_scalar<T: Scalar>(x: T) -> String {
    format_sig12(x.to_f64().expect("Scalar fits in f64"))
}

pub fn round_scalar<T: Scalar>(x: T) -> T {
    T::of(round_sig12(x.to_f64().expect("Scalar fits in f64")))
}
