//! Exact and constructed values tabulated against the known t_2 / s_2
//! bounds. Bounds are exact rationals, so there is no rounding slack.

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Serialize, Serializer};

use super::{Extremal, ExtremalError};
use crate::constructions::{construct, parameter_grid, Family};
use crate::rainbow::Colour;

/// num / den with den > 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    fn new(num: i128, den: i128) -> Self {
        fn gcd(a: i128, b: i128) -> i128 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        let g = gcd(num, den).max(1);
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    fn int(x: usize) -> Self {
        Rational { num: x as i128, den: 1 }
    }

    fn le(&self, value: usize) -> bool {
        self.num <= value as i128 * self.den
    }

    fn ge(&self, value: usize) -> bool {
        self.num >= value as i128 * self.den
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Ok,
    Violation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub n: usize,
    pub r: Colour,
    /// What `value` is: "t2", "s2", or "|E(FAMILY)|" for a construction.
    pub quantity: String,
    /// "exact" (exhaustive enumeration) or "construction".
    pub source: &'static str,
    pub value: usize,
    pub rule: &'static str,
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
    pub status: RowStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub k: usize,
    pub rows: Vec<BoundRow>,
    pub violations: usize,
}

struct Rows {
    rows: Vec<BoundRow>,
}

impl Rows {
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        n: usize,
        r: Colour,
        quantity: &str,
        source: &'static str,
        value: usize,
        rule: &'static str,
        lower: Option<Rational>,
        upper: Option<Rational>,
    ) {
        let ok = lower.is_none_or(|l| l.le(value)) && upper.is_none_or(|u| u.ge(value));
        self.rows.push(BoundRow {
            n,
            r,
            quantity: quantity.to_string(),
            source,
            value,
            rule,
            lower,
            upper,
            status: if ok { RowStatus::Ok } else { RowStatus::Violation },
        });
    }
}

fn binomial2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// The diameter bound for 2-connected graphs with rc_2 <= r, with
/// m = ceil(r/2): |E| >= (1 + 1/(2m-1)) n - 4 (4m-2)^(m-1). `None` when
/// r < 3 or the constant overflows (the bound is then vacuous).
fn diameter_edge_bound(n: usize, r: Colour) -> Option<Rational> {
    if r < 3 {
        return None;
    }
    let m = r.div_ceil(2) as i128;
    let c = (4 * m - 2).checked_pow(m as u32 - 1)?.checked_mul(4)?;
    let num = (2 * m * n as i128).checked_sub(c.checked_mul(2 * m - 1)?)?;
    Some(Rational::new(num, 2 * m - 1))
}

/// Lower bounds on t_2(n, r) that apply to every 2-connected n-vertex
/// graph with rc_2 <= r.
fn t2_lower_bounds(n: usize, r: Colour) -> Vec<(&'static str, Rational)> {
    let (ni, ri) = (n as i128, r as i128);
    let mut out = Vec::new();
    if (r == 3 || r == 4) && n >= 18 {
        out.push(("t2 >= 4n/3 - 24 for r in {3,4}, n >= 18", Rational::new(4 * ni - 72, 3)));
    }
    if r >= 5 && (r as usize) < n && 6 * ni > ri * (ri - 1) {
        out.push((
            "t2 >= 6n/5 - r(r-1)/5 for 5 <= r <= n-1, n > r(r-1)/6",
            Rational::new(6 * ni - ri * (ri - 1), 5),
        ));
    }
    if let Some(b) = diameter_edge_bound(n, r) {
        out.push(("|E| >= (1+1/(2m-1))n - 4(4m-2)^(m-1), m = ceil(r/2)", b));
    }
    out
}

fn t2_upper_bounds(n: usize, r: Colour) -> Vec<(&'static str, Rational)> {
    let (ni, ri) = (n as i128, r as i128);
    let mut out = Vec::new();
    if (r == 3 || r == 4) && n > r as usize {
        out.push(("t2 <= 5n/2 - 5 for r in {3,4}, n >= r+1", Rational::new(5 * ni - 10, 2)));
    }
    if r == 5 && n >= 7 {
        out.push(("t2 <= (7n-19)/3 for r = 5, n >= 7", Rational::new(7 * ni - 19, 3)));
    }
    if r >= 6 && r as usize + 3 <= n {
        out.push((
            "t2 <= 2n - r + 2 for 6 <= r <= n-3",
            Rational::int((2 * ni - ri + 2) as usize),
        ));
    }
    out
}

/// Tabulates, for k = 2, exact t_2 and s_2 values over `n_range` x
/// `r_range` and the edge counts of the coloured constructions with
/// n <= `construction_n_max` against every applicable bound. Other k give
/// an empty report.
pub fn bound_report(
    extremal: &mut Extremal,
    n_range: RangeInclusive<usize>,
    r_range: RangeInclusive<Colour>,
    k: usize,
    construction_n_max: usize,
) -> Result<BoundReport, ExtremalError> {
    let mut rows = Rows { rows: Vec::new() };
    if k != 2 {
        return Ok(BoundReport {
            k,
            rows: rows.rows,
            violations: 0,
        });
    }
    for n in n_range.clone().filter(|&n| n >= 4) {
        let mut t_prev: Option<(Colour, usize)> = None;
        let mut s_prev: Option<(Colour, usize)> = None;
        for r in r_range.clone().filter(|&r| r >= 2) {
            let ru = r as usize;
            if let Some(t) = extremal.extremal_t(n, r, 2)?.value {
                rows.push(
                    n,
                    r,
                    "t2",
                    "exact",
                    t,
                    "n <= t2 <= C(n,2)",
                    Some(Rational::int(n)),
                    Some(Rational::int(binomial2(n))),
                );
                if ru >= n {
                    rows.push(
                        n,
                        r,
                        "t2",
                        "exact",
                        t,
                        "t2(n,r) = n for r >= n",
                        Some(Rational::int(n)),
                        Some(Rational::int(n)),
                    );
                }
                if ru + 1 == n {
                    rows.push(
                        n,
                        r,
                        "t2",
                        "exact",
                        t,
                        "t2(n,n-1) = n+1 for n >= 4",
                        Some(Rational::int(n + 1)),
                        Some(Rational::int(n + 1)),
                    );
                }
                if ru + 2 == n && n >= 6 {
                    rows.push(
                        n,
                        r,
                        "t2",
                        "exact",
                        t,
                        "t2(n,n-2) = n+2 for n >= 6",
                        Some(Rational::int(n + 2)),
                        Some(Rational::int(n + 2)),
                    );
                }
                for (rule, b) in t2_lower_bounds(n, r) {
                    rows.push(n, r, "t2", "exact", t, rule, Some(b), None);
                }
                for (rule, b) in t2_upper_bounds(n, r) {
                    rows.push(n, r, "t2", "exact", t, rule, None, Some(b));
                }
                if let Some((pr, pt)) = t_prev {
                    rows.push(
                        n,
                        r,
                        "t2",
                        "exact",
                        t,
                        "t2(n,r) <= t2(n,r-1)",
                        None,
                        Some(Rational::int(pt)),
                    );
                    debug_assert_eq!(pr + 1, r);
                }
                t_prev = Some((r, t));
            }
            if let Some(s) = extremal.extremal_s(n, r, 2)?.value {
                rows.push(
                    n,
                    r,
                    "s2",
                    "exact",
                    s,
                    "ceil(2n/2) <= s2 <= C(n,2)",
                    Some(Rational::int(n)),
                    Some(Rational::int(binomial2(n))),
                );
                if r == 2 {
                    rows.push(
                        n,
                        r,
                        "s2",
                        "exact",
                        s,
                        "s2(n,2) = C(n,2)",
                        Some(Rational::int(binomial2(n))),
                        None,
                    );
                }
                if ru == n {
                    rows.push(
                        n,
                        r,
                        "s2",
                        "exact",
                        s,
                        "s2(n,n) = n",
                        Some(Rational::int(n)),
                        Some(Rational::int(n)),
                    );
                }
                if r >= 3 && ru < n {
                    let b = binomial2(n - ru + 2) + ru - 1;
                    rows.push(
                        n,
                        r,
                        "s2",
                        "exact",
                        s,
                        "s2 >= C(n-r+2,2) + r - 1 for 3 <= r <= n-1",
                        Some(Rational::int(b)),
                        None,
                    );
                }
                if n >= 6 && n + 4 <= 2 * ru && ru < n {
                    let b = binomial2(n - ru + 3) + ru - 3;
                    rows.push(
                        n,
                        r,
                        "s2",
                        "exact",
                        s,
                        "s2 >= C(n-r+3,2) + r - 3 for n >= 6, n/2+2 <= r <= n-1",
                        Some(Rational::int(b)),
                        None,
                    );
                }
                if let Some((_, ps)) = s_prev {
                    rows.push(
                        n,
                        r,
                        "s2",
                        "exact",
                        s,
                        "s2(n,r) <= s2(n,r-1)",
                        None,
                        Some(Rational::int(ps)),
                    );
                }
                s_prev = Some((r, s));
            }
        }
    }

    for family in [Family::Gnr, Family::Gn5, Family::Gn3, Family::G1, Family::G2] {
        for spec in parameter_grid(family, construction_n_max) {
            let bundle = construct(&spec)?;
            let n = spec.n;
            let r = match family {
                Family::Gnr | Family::Gn3 => spec.r.unwrap() as Colour,
                Family::Gn5 => 5,
                Family::G1 => n as Colour - 1,
                _ => n as Colour - 2,
            };
            let value = bundle.graph.edge_count();
            let quantity = format!("|E({family})|");
            let exact = match family {
                Family::Gnr => Some(("|E| = 2n - r + 2", 2 * n - r as usize + 2)),
                Family::G1 => Some(("|E| = n + 1", n + 1)),
                Family::G2 => Some(("|E| = n + 2", n + 2)),
                _ => None,
            };
            if let Some((rule, e)) = exact {
                rows.push(
                    n,
                    r,
                    &quantity,
                    "construction",
                    value,
                    rule,
                    Some(Rational::int(e)),
                    Some(Rational::int(e)),
                );
            }
            for (rule, b) in t2_lower_bounds(n, r) {
                rows.push(n, r, &quantity, "construction", value, rule, Some(b), None);
            }
            for (rule, b) in t2_upper_bounds(n, r) {
                rows.push(n, r, &quantity, "construction", value, rule, None, Some(b));
            }
        }
    }

    let violations = rows.rows.iter().filter(|r| r.status == RowStatus::Violation).count();
    Ok(BoundReport {
        k,
        rows: rows.rows,
        violations,
    })
}

impl From<crate::constructions::ConstructionError> for ExtremalError {
    fn from(e: crate::constructions::ConstructionError) -> Self {
        ExtremalError::Input(e.to_string())
    }
}
