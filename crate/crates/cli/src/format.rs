//! Deterministic text formatting: fixed 15-significant-digit floats with
//! trailing zeros trimmed, so identical invocations produce byte-identical
//! output and round values print exactly (`1`, not `1.000000000000000`).

use normplane_core::exact::{Rational, RationalVec2};
use normplane_core::vec2::Vec2;

/// A float with 15 significant digits in plain decimal notation, trailing
/// zeros trimmed.
pub fn float15(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }

    let neg = x < 0.0;
    let sci = format!("{:.14e}", x.abs());
    let (mantissa, exponent) = sci.split_once('e').expect("scientific notation");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();

    // Place the decimal point `exponent + 1` digits in from the left.
    let point = exponent + 1;
    let mut out = String::new();
    if point <= 0 {
        out.push_str("0.");
        for _ in 0..-point {
            out.push('0');
        }
        out.push_str(&digits);
    } else if point as usize >= digits.len() {
        out.push_str(&digits);
        for _ in 0..(point as usize - digits.len()) {
            out.push('0');
        }
    } else {
        out.push_str(&digits[..point as usize]);
        out.push('.');
        out.push_str(&digits[point as usize..]);
    }

    if out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    if neg {
        out.insert(0, '-');
    }
    out
}

/// `(x, y)` with [`float15`] coordinates.
pub fn point(v: Vec2) -> String {
    format!("({}, {})", float15(v.x), float15(v.y))
}

/// A rational in its shortest form: `22/13`, or `2` for integers.
pub fn rational(r: &Rational) -> String {
    r.to_string()
}

/// `(x, y)` with rational coordinates.
pub fn rational_point(v: &RationalVec2) -> String {
    format!("({}, {})", v.x, v.y)
}
