//! Number formatting: fixed significant-digit rendering for the text and
//! JSON reports.
//!
//! JSON uses 17 significant digits (round-trip exact for f64); text uses 6,
//! matching the precision of the tables the library reproduces. Both are
//! pure functions of the value, so reports are byte-identical across runs.

/// `x` with `sig` significant digits in the shortest of decimal or
/// scientific notation (the usual `%g` rules), trailing zeros trimmed.
pub fn sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("LowerExp always emits an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if exp >= -4 && (exp as i64) < sig as i64 {
        let decimals = (sig as i64 - 1 - exp as i64).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim_zeros(mantissa), exp)
    }
}

/// Six significant digits, for the text report.
pub fn sig6(x: f64) -> String {
    sig(x, 6)
}

/// Seventeen significant digits in scientific notation, for JSON and CSV
/// cells; parses back to exactly the same f64.
pub fn json_num(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{:.16e}", x)
}

fn trim_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    t.to_string()
}

#[cfg(test)]
#[allow(clippy::excessive_precision)] // oracle values quoted in full
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits_match_reference_table_style() {
        assert_eq!(sig6(-0.20965696734438366), "-0.209657");
        assert_eq!(sig6(-0.10482848367219183), "-0.104828");
        assert_eq!(sig6(0.0), "0");
        assert_eq!(sig6(0.5), "0.5");
        assert_eq!(sig6(1.0), "1");
        assert_eq!(sig6(1.254206096513080159), "1.25421");
        assert_eq!(sig6(-20.728838390152533342), "-20.7288");
        assert_eq!(sig6(194.9662), "194.966");
        assert_eq!(sig6(123456.0), "123456");
        assert_eq!(sig6(1234567.0), "1.23457e6");
        assert_eq!(sig6(1e-7), "1e-7");
        assert_eq!(sig6(-1.5e-7), "-1.5e-7");
        assert_eq!(sig6(0.0001), "0.0001");
    }

    #[test]
    fn json_numbers_round_trip_exactly() {
        for &x in &[
            1.254206096513080159,
            -0.10482848367219183,
            0.1,
            -2.6618681606984016111,
            194.9662,
            1e-300,
            -3.5e300,
        ] {
            let s = json_num(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
        assert_eq!(json_num(0.0), "0");
        assert_eq!(json_num(-0.0), "0");
    }
}
