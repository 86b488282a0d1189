//! Least unramified primes realizing Artin classes of abelian fields.
//!
//! Supported fields are the ones whose Artin symbol reduces to congruence
//! data: quadratic fields ℚ(√d), where the class of an unramified prime p is
//! the Kronecker symbol (disc|p), and prime-conductor cyclotomic fields
//! ℚ(ζ_q), where it is the residue p mod q. Least primes are found by
//! ascending scan with deterministic 64-bit primality testing behind a
//! shared read-only sieve.

use std::io::{self, Write};
use std::sync::OnceLock;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::checks::sig_digits;

/// Default scan ceiling; a least prime anywhere near it would itself be a
/// remarkable empirical event.
pub const DEFAULT_SCAN_CAP: u64 = 1_000_000_000;

/// Theorem exponent the searches compare against: least_prime ≤ d_L^40.
pub const BOUND_EXPONENT: f64 = 40.0;

/// Errors from field construction and scans.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// The scan cap was hit before the class was realized. This is a
    /// surprising event, reported loudly, never silently dropped.
    #[error("scan limit {cap} exceeded for {field} class {class}")]
    ScanLimitExceeded {
        field: String,
        class: String,
        cap: u64,
    },
}

// ---------------------------------------------------------------------------
// Modular arithmetic and primality
// ---------------------------------------------------------------------------

fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, n);
        }
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Witness set making Miller–Rabin deterministic for all 64-bit integers.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in MR_WITNESSES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

const SIEVE_LIMIT: usize = 1 << 20;

static SMALL_PRIMES: OnceLock<Vec<u64>> = OnceLock::new();

/// Shared sieve of primes below 2²⁰, read-only after first use.
fn small_primes() -> &'static [u64] {
    SMALL_PRIMES.get_or_init(|| {
        let mut composite = vec![false; SIEVE_LIMIT];
        let mut primes = Vec::with_capacity(82_025);
        for n in 2..SIEVE_LIMIT {
            if !composite[n] {
                primes.push(n as u64);
                let mut m = n * n;
                while m < SIEVE_LIMIT {
                    composite[m] = true;
                    m += n;
                }
            }
        }
        primes
    })
}

/// Ascending primes, sieve-backed below 2²⁰ and Miller–Rabin beyond.
struct PrimeScan {
    idx: usize,
    next_odd: u64,
}

impl PrimeScan {
    fn new() -> Self {
        PrimeScan {
            idx: 0,
            next_odd: SIEVE_LIMIT as u64 + 1,
        }
    }
}

impl Iterator for PrimeScan {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let table = small_primes();
        if self.idx < table.len() {
            self.idx += 1;
            return Some(table[self.idx - 1]);
        }
        loop {
            let n = self.next_odd;
            self.next_odd += 2;
            if is_prime(n) {
                return Some(n);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Kronecker symbol
// ---------------------------------------------------------------------------

/// The Kronecker symbol (a|n) for n ≠ 0, fully multiplicative in both
/// arguments, extending the Jacobi symbol by the standard rules at 2, −1.
pub fn kronecker(mut a: i64, mut n: i64) -> i32 {
    assert!(n != 0, "kronecker symbol needs n != 0");
    let mut sign = 1i32;
    if n < 0 {
        n = -n;
        if a < 0 {
            sign = -sign;
        }
    }
    let twos = n.trailing_zeros();
    if twos > 0 {
        if a & 1 == 0 {
            return 0;
        }
        // (a|2) = +1 for a ≡ ±1 (mod 8), −1 for a ≡ ±3
        if twos & 1 == 1 {
            let r = a.rem_euclid(8);
            if r == 3 || r == 5 {
                sign = -sign;
            }
        }
        n >>= twos;
    }
    // n odd positive: Jacobi with reciprocity
    a = a.rem_euclid(n);
    while a != 0 {
        let twos = a.trailing_zeros();
        if twos & 1 == 1 {
            let r = n & 7;
            if r == 3 || r == 5 {
                sign = -sign;
            }
        }
        a >>= twos;
        if a & 3 == 3 && n & 3 == 3 {
            sign = -sign;
        }
        let next = n % a;
        n = a;
        a = next;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

// ---------------------------------------------------------------------------
// Fields and records
// ---------------------------------------------------------------------------

/// An abelian field with congruence-computable Artin classes.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AbelianField {
    /// ℚ(√d), d squarefree; classes +1 (split) and −1 (inert).
    Quadratic { d: i64, disc: i64, d_l: u64 },
    /// ℚ(ζ_q), q odd prime; classes a mod q with gcd(a, q) = 1.
    Cyclotomic { q: u64, d_l: u64 },
}

fn is_squarefree(d: i64) -> bool {
    let mut m = d.unsigned_abs();
    for p in small_primes() {
        let p2 = p * p;
        if p2 > m {
            break;
        }
        if m % p2 == 0 {
            return false;
        }
        while m % p == 0 {
            m /= p;
        }
    }
    // residual factor after the sieve range is prime or 1
    true
}

impl AbelianField {
    /// ℚ(√d) for squarefree d ∉ {0, 1}; d_L = |d| for d ≡ 1 (mod 4),
    /// else 4|d|.
    pub fn quadratic(d: i64) -> Result<Self, SearchError> {
        if d == 0 || d == 1 {
            return Err(SearchError::InvalidParameter(format!(
                "d = {d} does not define a quadratic field"
            )));
        }
        if !is_squarefree(d) {
            return Err(SearchError::InvalidParameter(format!("d = {d} is not squarefree")));
        }
        let disc = if d.rem_euclid(4) == 1 { d } else { 4 * d };
        Ok(AbelianField::Quadratic {
            d,
            disc,
            d_l: disc.unsigned_abs(),
        })
    }

    /// ℚ(ζ_q) for odd prime q; d_L = q^{q−2} (must fit in u64).
    pub fn cyclotomic(q: u64) -> Result<Self, SearchError> {
        if q < 3 || q % 2 == 0 || !is_prime(q) {
            return Err(SearchError::InvalidParameter(format!("q = {q} is not an odd prime")));
        }
        let d_l = q
            .checked_pow(q as u32 - 2)
            .ok_or_else(|| SearchError::InvalidParameter(format!("q^(q-2) overflows u64 for q = {q}")))?;
        Ok(AbelianField::Cyclotomic { q, d_l })
    }

    pub fn d_l(&self) -> u64 {
        match self {
            AbelianField::Quadratic { d_l, .. } | AbelianField::Cyclotomic { d_l, .. } => *d_l,
        }
    }

    /// Labels of all Artin classes of the field.
    pub fn class_labels(&self) -> Vec<String> {
        match self {
            AbelianField::Quadratic { .. } => vec!["+1".to_string(), "-1".to_string()],
            AbelianField::Cyclotomic { q, .. } => {
                (1..*q).map(|a| format!("{a} mod {q}")).collect()
            }
        }
    }

    fn describe(&self) -> String {
        match self {
            AbelianField::Quadratic { d, .. } => format!("Q(sqrt({d}))"),
            AbelianField::Cyclotomic { q, .. } => format!("Q(zeta_{q})"),
        }
    }
}

/// One least-prime result.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchRecord {
    /// "quadratic" or "cyclotomic".
    pub kind: String,
    /// d for quadratic fields, q for cyclotomic ones.
    pub param: i64,
    pub class: String,
    pub d_l: u64,
    pub least_prime: u64,
    /// log(least_prime)/log(d_L), natural logs.
    pub exponent_realized: f64,
    /// least_prime ≤ d_L^40, compared in log space.
    pub bound_pass: bool,
}

fn make_record(field: &AbelianField, class: String, p: u64) -> SearchRecord {
    let d_l = field.d_l();
    let exponent = (p as f64).ln() / (d_l as f64).ln();
    let (kind, param) = match field {
        AbelianField::Quadratic { d, .. } => ("quadratic", *d),
        AbelianField::Cyclotomic { q, .. } => ("cyclotomic", *q as i64),
    };
    SearchRecord {
        kind: kind.to_string(),
        param,
        class,
        d_l,
        least_prime: p,
        exponent_realized: exponent,
        bound_pass: exponent <= BOUND_EXPONENT,
    }
}

fn scan_quadratic(field: &AbelianField, cls: i8, cap: u64) -> Result<SearchRecord, SearchError> {
    let (disc, d_l) = match field {
        AbelianField::Quadratic { disc, d_l, .. } => (*disc, *d_l),
        _ => unreachable!("quadratic scan on quadratic fields only"),
    };
    for p in PrimeScan::new() {
        if p > cap {
            break;
        }
        if d_l % p == 0 {
            continue; // ramified
        }
        if kronecker(disc, p as i64) == cls as i32 {
            let label = if cls > 0 { "+1" } else { "-1" };
            return Ok(make_record(field, label.to_string(), p));
        }
    }
    Err(SearchError::ScanLimitExceeded {
        field: field.describe(),
        class: format!("{:+}", cls),
        cap,
    })
}

/// Least unramified prime p with (disc(ℚ(√d))|p) = cls.
pub fn least_prime_quadratic(d: i64, cls: i8, cap: u64) -> Result<SearchRecord, SearchError> {
    if cls != 1 && cls != -1 {
        return Err(SearchError::InvalidParameter(format!("class must be ±1, got {cls}")));
    }
    let field = AbelianField::quadratic(d)?;
    scan_quadratic(&field, cls, cap)
}

/// Least prime p ≡ a (mod q), the cyclotomic specialization.
pub fn least_prime_ap(q: u64, a: u64, cap: u64) -> Result<SearchRecord, SearchError> {
    let field = AbelianField::cyclotomic(q)?;
    if a == 0 || a >= q || a.gcd(&q) != 1 {
        return Err(SearchError::InvalidParameter(format!(
            "residue must satisfy 1 <= a < q and gcd(a, q) = 1, got a = {a}"
        )));
    }
    let mut n = a;
    while n <= cap {
        if n > 1 && is_prime(n) {
            return Ok(make_record(&field, format!("{a} mod {q}"), n));
        }
        n += q;
    }
    Err(SearchError::ScanLimitExceeded {
        field: field.describe(),
        class: format!("{a} mod {q}"),
        cap,
    })
}

/// Outcome of a survey: records sorted by realized exponent (descending),
/// scan failures kept separately so one runaway class cannot sink the rest.
#[derive(Debug, Clone, Serialize)]
pub struct SurveyResult {
    pub records: Vec<SearchRecord>,
    pub failures: Vec<String>,
    pub max_exponent: f64,
}

/// Runs every quadratic field with d_L ≤ max_disc and every cyclotomic field
/// with q^{q−2} ≤ max_disc through all of their classes.
pub fn survey(max_disc: u64, cap: u64) -> SurveyResult {
    assert!(max_disc >= 5, "survey needs max_disc >= 5");
    let mut records = Vec::new();
    let mut failures = Vec::new();
    let mut run = |res: Result<SearchRecord, SearchError>| match res {
        Ok(r) => records.push(r),
        Err(e) => failures.push(e.to_string()),
    };

    let max_i = max_disc.min(i64::MAX as u64) as i64;
    for mag in 2..=max_i {
        for d in [mag, -mag] {
            if !is_squarefree(d) {
                continue;
            }
            let fits = if d.rem_euclid(4) == 1 {
                mag <= max_i
            } else {
                4 * mag <= max_i
            };
            if !fits {
                continue;
            }
            let field = AbelianField::quadratic(d).expect("squarefree d checked");
            for cls in [1i8, -1] {
                run(scan_quadratic(&field, cls, cap));
            }
        }
    }
    // d = −1 (d_L = 4) is the remaining fundamental case
    let field = AbelianField::quadratic(-1).expect("valid");
    if field.d_l() <= max_disc {
        for cls in [1i8, -1] {
            run(scan_quadratic(&field, cls, cap));
        }
    }

    for q in small_primes().iter().copied().skip(1) {
        match q.checked_pow(q as u32 - 2) {
            Some(d_l) if d_l <= max_disc => {
                for a in 1..q {
                    run(least_prime_ap(q, a, cap));
                }
            }
            _ => break,
        }
    }

    records.sort_by(|x, y| {
        y.exponent_realized
            .total_cmp(&x.exponent_realized)
            .then_with(|| x.kind.cmp(&y.kind))
            .then_with(|| x.param.cmp(&y.param))
            .then_with(|| x.class.cmp(&y.class))
    });
    let max_exponent = records
        .first()
        .map(|r| r.exponent_realized)
        .unwrap_or(0.0);
    SurveyResult {
        records,
        failures,
        max_exponent,
    }
}

/// Writes records in the fixed CSV schema:
/// `kind,param,class,dL,least_prime,exponent_realized,bound_pass`.
pub fn write_csv<W: Write>(records: &[SearchRecord], mut out: W) -> io::Result<()> {
    writeln!(out, "kind,param,class,dL,least_prime,exponent_realized,bound_pass")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.kind,
            r.param,
            r.class,
            r.d_l,
            r.least_prime,
            sig_digits(r.exponent_realized, 12),
            r.bound_pass
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(5, 11), 1); // 4² ≡ 5 (mod 11)
        assert_eq!(kronecker(5, 3), -1);
        assert_eq!(kronecker(5, 5), 0);
        assert_eq!(kronecker(2, 7), 1);
        assert_eq!(kronecker(2, 3), -1);
        assert_eq!(kronecker(-1, 5), 1);
        assert_eq!(kronecker(-1, 7), -1);
        assert_eq!(kronecker(5, 2), -1); // 5 ≡ 5 (mod 8)
        assert_eq!(kronecker(7, 2), 1);
        assert_eq!(kronecker(4, 2), 0);
        assert_eq!(kronecker(-3, -1), -1);
        assert_eq!(kronecker(3, -1), 1);
    }

    #[test]
    fn kronecker_unit_modulus() {
        for a in -20i64..=20 {
            assert_eq!(kronecker(a, 1), 1);
        }
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime(2) && is_prime(3) && is_prime(97));
        assert!(!is_prime(0) && !is_prime(1) && !is_prime(561)); // Carmichael
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        assert!(is_prime(18_446_744_073_709_551_557)); // largest u64 prime
    }

    #[test]
    fn quadratic_field_discriminants() {
        let f5 = AbelianField::quadratic(5).unwrap();
        assert_eq!(f5.d_l(), 5);
        let fm1 = AbelianField::quadratic(-1).unwrap();
        assert_eq!(fm1.d_l(), 4);
        let f2 = AbelianField::quadratic(2).unwrap();
        assert_eq!(f2.d_l(), 8);
        assert!(AbelianField::quadratic(12).is_err()); // 12 = 4·3
        assert!(AbelianField::quadratic(1).is_err());
    }

    #[test]
    fn cyclotomic_field_discriminants() {
        assert_eq!(AbelianField::cyclotomic(5).unwrap().d_l(), 125);
        assert_eq!(AbelianField::cyclotomic(7).unwrap().d_l(), 16_807);
        assert!(AbelianField::cyclotomic(9).is_err());
        assert!(AbelianField::cyclotomic(2).is_err());
    }

    #[test]
    fn least_prime_for_sqrt5() {
        // 5 ≡ 5 (mod 8) makes 2 inert; 2, 3, 7 inert and 11 splits
        let inert = least_prime_quadratic(5, -1, DEFAULT_SCAN_CAP).unwrap();
        assert_eq!(inert.least_prime, 2);
        let split = least_prime_quadratic(5, 1, DEFAULT_SCAN_CAP).unwrap();
        assert_eq!(split.least_prime, 11);
        assert!(split.bound_pass && inert.bound_pass);
    }

    #[test]
    fn least_prime_progressions() {
        assert_eq!(least_prime_ap(5, 1, DEFAULT_SCAN_CAP).unwrap().least_prime, 11);
        assert_eq!(least_prime_ap(3, 2, DEFAULT_SCAN_CAP).unwrap().least_prime, 2);
        assert_eq!(least_prime_ap(7, 3, DEFAULT_SCAN_CAP).unwrap().least_prime, 3);
        let r = least_prime_ap(5, 1, DEFAULT_SCAN_CAP).unwrap();
        assert_eq!(r.d_l, 125);
    }

    #[test]
    fn scan_cap_reported() {
        let res = least_prime_ap(5, 1, 5);
        assert!(matches!(res, Err(SearchError::ScanLimitExceeded { .. })));
    }

    #[test]
    fn survey_includes_expected_records() {
        let result = survey(130, DEFAULT_SCAN_CAP);
        assert!(result.failures.is_empty());
        assert!(result
            .records
            .iter()
            .any(|r| r.kind == "quadratic" && r.param == 5 && r.least_prime == 11));
        assert!(result
            .records
            .iter()
            .any(|r| r.kind == "cyclotomic" && r.param == 5));
        assert!(result.records.iter().all(|r| r.bound_pass));
        // sorted descending by realized exponent
        assert!(result
            .records
            .windows(2)
            .all(|w| w[0].exponent_realized >= w[1].exponent_realized));
        assert_eq!(result.max_exponent, result.records[0].exponent_realized);
    }

    #[test]
    fn csv_schema_stable() {
        let rec = least_prime_quadratic(5, 1, DEFAULT_SCAN_CAP).unwrap();
        let mut buf = Vec::new();
        write_csv(std::slice::from_ref(&rec), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "kind,param,class,dL,least_prime,exponent_realized,bound_pass"
        );
        assert_eq!(lines.next().unwrap(), "quadratic,5,+1,5,11,1.48977443164,true");
    }

    proptest! {
        #[test]
        fn kronecker_multiplicative_top(a in -300i64..300, b in -300i64..300, n in 1i64..300) {
            prop_assume!(n % 2 == 1);
            let lhs = kronecker(a * b, n);
            let rhs = kronecker(a, n) * kronecker(b, n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn kronecker_multiplicative_bottom(a in -300i64..300, m in 1i64..120, n in 1i64..120) {
            let lhs = kronecker(a, m * n);
            let rhs = kronecker(a, m) * kronecker(a, n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn kronecker_matches_euler_criterion(a in -500i64..500, pidx in 1usize..100) {
            let p = small_primes()[pidx]; // odd primes
            let sym = kronecker(a, p as i64);
            let reduced = a.rem_euclid(p as i64) as u64;
            let euler = powmod(reduced, (p - 1) / 2, p);
            let expect = if euler == 0 { 0 } else if euler == 1 { 1 } else { -1 };
            prop_assert_eq!(sym, expect);
        }
    }
}
