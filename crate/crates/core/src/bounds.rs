//! Closed-form bounds on clique covering parameters.
//!
//! - general graphs: `2m/(ω-1) <= scc <= scp <= 2m` and `scp^2/(2m+scp) <= cp`,
//!   all with equality on triangle-free graphs;
//! - small complement degree: `scc <= (e^2+1) n d ceil(ln((n-1)/(d-1)))`;
//! - cocktail party graphs: `t δ(t) <= scc(K_t(2)) <= t σ(t)`.
//!
//! The threshold functions σ and δ are evaluated with arbitrary-precision
//! binomials; the rational bounds are compared exactly.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `σ(t) = min{k : t <= C(k-1, ceil(k/2))}`.
pub fn sigma_t(t: u64) -> Result<u64> {
    if t < 1 {
        return Err(Error::premise("σ(t) needs t >= 1"));
    }
    let target = BigUint::from(t);
    Ok((1..)
        .find(|&k: &u64| binomial(k - 1, k.div_ceil(2)) >= target)
        .expect("binomials are unbounded"))
}

/// `δ(t) = min{k - 1 : t <= C(k, ceil(k/2))}` over `k >= 1`.
pub fn delta_t(t: u64) -> Result<u64> {
    if t < 1 {
        return Err(Error::premise("δ(t) needs t >= 1"));
    }
    let target = BigUint::from(t);
    Ok((1..)
        .find(|&k: &u64| binomial(k, k.div_ceil(2)) >= target)
        .expect("binomials are unbounded")
        - 1)
}

/// `(t δ(t), t σ(t))`, the sandwich for `scc(K_t(2))`.
pub fn ctp_bounds(t: u64) -> Result<(u64, u64)> {
    Ok((t * delta_t(t)?, t * sigma_t(t)?))
}

/// `ceil(ln((n-1)/(d-1)))`, computed as the least `k >= 0` with `e^k >= (n-1)/(d-1)`.
pub fn ln_ceiling(n: usize, d: usize) -> u64 {
    let ratio = (n as f64 - 1.0) / (d as f64 - 1.0);
    ratio.ln().ceil().max(0.0) as u64
}

fn check_eq1(n: usize, d: usize) -> Result<()> {
    if d == 1 {
        return Err(Error::premise(
            "d = 1 means the graph is complete; it is covered by a single clique of sigma n",
        ));
    }
    if d < 2 || n <= d {
        return Err(Error::premise(format!("the covering bound needs d >= 2 and n > d; got n = {n}, d = {d}")));
    }
    Ok(())
}

/// `(e^2+1) n d ceil(ln((n-1)/(d-1)))` as a real number.
pub fn eq1_value(n: usize, d: usize) -> Result<f64> {
    check_eq1(n, d)?;
    let e2p1 = std::f64::consts::E.powi(2) + 1.0;
    Ok(e2p1 * (n * d) as f64 * ln_ceiling(n, d) as f64)
}

/// Integer form of [`eq1_value`]: the product is rounded to 12 significant
/// digits before taking the ceiling, so float noise cannot add one.
pub fn eq1_upper(n: usize, d: usize) -> Result<u64> {
    let v = eq1_value(n, d)?;
    let rounded: f64 = format!("{v:.11e}").parse().expect("formatted float parses");
    Ok(rounded.ceil() as u64)
}

/// Exact value of a bound together with a float rendering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactBound(pub Ratio<u64>);

impl ExactBound {
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl Serialize for ExactBound {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ExactBound", 2)?;
        st.serialize_field("exact", &self.0.to_string())?;
        st.serialize_field("value", &self.to_f64())?;
        st.end()
    }
}

/// Exact optima used to certify the bounds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolvedValues {
    pub scc: Option<u64>,
    pub scp: Option<u64>,
    pub cp: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub holds: bool,
    pub checks: Vec<CheckLine>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckLine {
    pub relation: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: u64,
    pub omega: u64,
    pub triangle_free: bool,
    /// `2m / (ω - 1)`, present when `m >= 1`.
    pub scc_lower_t2: Option<ExactBound>,
    /// `2m`.
    pub scp_upper_t2: u64,
    /// `scp^2 / (2m + scp)`, present when `scp` was supplied and `m >= 1`.
    pub cp_lower_t2ii: Option<ExactBound>,
    /// Complement-degree parameter `d = Δ(complement) + 1`.
    pub d: usize,
    pub eq1_upper: Option<u64>,
    pub certificate: Option<Certificate>,
}

/// Evaluates the general-graph bounds and, when optima are supplied, checks them.
pub fn theorem2_bounds(g: &Graph, solved: Option<SolvedValues>) -> Result<BoundReport> {
    let m = g.m() as u64;
    let omega = g.clique_number() as u64;
    if m >= 1 && omega < 2 {
        return Err(Error::premise("inconsistent graph: edges present but clique number below 2"));
    }
    let scc_lower = (m >= 1).then(|| ExactBound(Ratio::new(2 * m, omega - 1)));
    let cp_lower = solved
        .and_then(|s| s.scp)
        .filter(|_| m >= 1)
        .map(|scp| ExactBound(Ratio::new(scp * scp, 2 * m + scp)));
    let d = crate::randomized::complement_degree_parameter(g);
    let eq1 = if g.has_isolated_vertex() || d < 2 { None } else { eq1_upper(g.n(), d).ok() };

    let certificate = solved.map(|s| {
        let mut checks = Vec::new();
        let mut push = |relation: String, holds: bool| checks.push(CheckLine { relation, holds });
        if let (Some(lower), Some(scc)) = (&scc_lower, s.scc) {
            push(format!("2m/(ω-1) = {} <= scc = {scc}", lower.0), lower.0 <= Ratio::from_integer(scc));
        }
        if let (Some(scc), Some(scp)) = (s.scc, s.scp) {
            push(format!("scc = {scc} <= scp = {scp}"), scc <= scp);
        }
        if let Some(scp) = s.scp {
            push(format!("scp = {scp} <= 2m = {}", 2 * m), scp <= 2 * m);
        }
        if let (Some(lower), Some(cp)) = (&cp_lower, s.cp) {
            push(format!("scp²/(2m+scp) = {} <= cp = {cp}", lower.0), lower.0 <= Ratio::from_integer(cp));
        }
        if omega <= 2 && m >= 1 {
            if let Some(scc) = s.scc {
                push(format!("triangle-free: scc = {scc} = 2m"), scc == 2 * m);
            }
            if let Some(scp) = s.scp {
                push(format!("triangle-free: scp = {scp} = 2m"), scp == 2 * m);
            }
            if let Some(cp) = s.cp {
                push(format!("triangle-free: cp = {cp} = m"), cp == m);
            }
        }
        Certificate {
            holds: checks.iter().all(|c| c.holds),
            checks,
        }
    });

    Ok(BoundReport {
        n: g.n(),
        m,
        omega,
        triangle_free: omega <= 2,
        scc_lower_t2: scc_lower,
        scp_upper_t2: 2 * m,
        cp_lower_t2ii: cp_lower,
        d,
        eq1_upper: eq1,
        certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticRow {
    pub t: u64,
    pub lower: u64,
    pub upper: u64,
    pub t_log2_t: f64,
    pub ratio_lower_log2: f64,
    pub ratio_upper_log2: f64,
    pub t_ln_t: f64,
    pub ratio_lower_ln: f64,
    pub ratio_upper_ln: f64,
}

pub fn asymptotic_table(t_values: &[u64]) -> Result<Vec<AsymptoticRow>> {
    t_values
        .iter()
        .map(|&t| {
            let (lower, upper) = ctp_bounds(t)?;
            let tf = t as f64;
            let l2 = tf * tf.log2();
            let ln = tf * tf.ln();
            Ok(AsymptoticRow {
                t,
                lower,
                upper,
                t_log2_t: l2,
                ratio_lower_log2: lower as f64 / l2,
                ratio_upper_log2: upper as f64 / l2,
                t_ln_t: ln,
                ratio_lower_ln: lower as f64 / ln,
                ratio_upper_ln: upper as f64 / ln,
            })
        })
        .collect()
}

pub const ASYMPTOTIC_CSV_HEADER: &str =
    "t,t_delta,t_sigma,t_log2_t,ratio_lower_log2,ratio_upper_log2,t_ln_t,ratio_lower_ln,ratio_upper_ln";

pub fn asymptotic_csv(rows: &[AsymptoticRow]) -> String {
    let mut out = String::from(ASYMPTOTIC_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6}\n",
            r.t, r.lower, r.upper, r.t_log2_t, r.ratio_lower_log2, r.ratio_upper_log2, r.t_ln_t, r.ratio_lower_ln, r.ratio_upper_ln
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_graph, cycle_graph};

    #[test]
    fn sigma_delta_tables() {
        let sigma: Vec<u64> = (1..=4).map(|t| sigma_t(t).unwrap()).collect();
        assert_eq!(sigma, vec![2, 4, 4, 5]);
        let delta: Vec<u64> = (1..=6).map(|t| delta_t(t).unwrap()).collect();
        assert_eq!(delta, vec![0, 1, 2, 3, 3, 3]);
        assert!(sigma_t(0).is_err() && delta_t(0).is_err());
    }

    // Independent u128 evaluation of the step points of σ and δ.
    fn thresholds(shift: u64) -> Vec<(u128, u64)> {
        let binom = |n: u64, k: u64| -> u128 {
            if k > n {
                return 0;
            }
            (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
        };
        // value k is attained for t in (previous threshold, C(k - shift, ceil(k/2))]
        (1..40).map(|k| (binom(k - shift, k.div_ceil(2)), k)).collect()
    }

    #[test]
    fn delta_never_exceeds_sigma_up_to_a_million() {
        let sig = thresholds(1);
        let del = thresholds(0);
        let lookup = |table: &[(u128, u64)], t: u128| table.iter().find(|&&(c, _)| t <= c).unwrap().1;
        let mut si = 0;
        let mut di = 0;
        for t in 1u128..=1_000_000 {
            while sig[si].0 < t {
                si += 1;
            }
            while del[di].0 < t {
                di += 1;
            }
            let (s, d) = (sig[si].1, del[di].1 - 1);
            assert!(d <= s, "t = {t}");
            if t % 99_991 == 1 {
                assert_eq!(s, sigma_t(t as u64).unwrap());
                assert_eq!(d, delta_t(t as u64).unwrap());
                assert_eq!(s, lookup(&sig, t));
            }
        }
    }

    #[test]
    fn ctp_examples() {
        assert_eq!(ctp_bounds(3).unwrap(), (6, 12));
        assert_eq!(ctp_bounds(4).unwrap(), (12, 20));
        assert_eq!(ctp_bounds(1).unwrap(), (0, 2));
    }

    #[test]
    fn eq1_examples() {
        assert_eq!(ln_ceiling(40, 2), 4);
        assert_eq!(eq1_upper(40, 2).unwrap(), 2685);
        for d in 3..50 {
            assert_eq!(ln_ceiling(2 * d, d), 1);
        }
        for d in 2..6 {
            let mut prev = 0;
            for n in d + 1..200 {
                let v = eq1_upper(n, d).unwrap();
                assert!(v >= prev);
                prev = v;
            }
        }
        assert!(eq1_upper(10, 1).unwrap_err().to_string().contains("complete"));
    }

    #[test]
    fn general_graph_bounds() {
        let c5 = cycle_graph(5);
        let r = theorem2_bounds(&c5, Some(SolvedValues { scc: Some(10), scp: Some(10), cp: Some(5) })).unwrap();
        assert_eq!(r.scc_lower_t2, Some(ExactBound(Ratio::from_integer(10))));
        assert_eq!(r.scp_upper_t2, 10);
        assert_eq!(r.cp_lower_t2ii, Some(ExactBound(Ratio::from_integer(5))));
        assert!(r.certificate.unwrap().holds);

        let k4 = complete_graph(4);
        let r = theorem2_bounds(&k4, Some(SolvedValues { scc: Some(4), scp: Some(4), cp: Some(1) })).unwrap();
        assert_eq!(r.scc_lower_t2, Some(ExactBound(Ratio::from_integer(4))));
        assert_eq!(r.scp_upper_t2, 12);
        assert!(r.certificate.unwrap().holds);

        let wrong = theorem2_bounds(&c5, Some(SolvedValues { scc: Some(9), scp: Some(10), cp: Some(5) })).unwrap();
        assert!(!wrong.certificate.unwrap().holds);
    }

    #[test]
    fn asymptotic_rows() {
        let rows = asymptotic_table(&[3, 1 << 10, 1 << 20]).unwrap();
        let r = &rows[0];
        assert_eq!((r.t, r.lower, r.upper), (3, 6, 12));
        assert!((r.t_log2_t - 4.754_887_502).abs() < 1e-6);
        assert!((r.ratio_lower_log2 - 1.261_859_507).abs() < 1e-6);
        assert!((r.ratio_upper_log2 - 2.523_719_014).abs() < 1e-6);
        assert!((rows[2].ratio_lower_log2 - 1.1).abs() < 1e-12);
        assert!((rows[2].ratio_upper_log2 - 1.2).abs() < 1e-12);
        assert!(asymptotic_csv(&rows).starts_with(ASYMPTOTIC_CSV_HEADER));
    }
}
