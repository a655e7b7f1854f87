//! Locally computed sequence prefixes (no OEIS lookups).

use anyhow::{bail, Result};

use rhofield::minpoly::{discriminant_conjecture_check, minimal_poly_recursive, zero_sign_counts};
use rhofield::modd::{
    element_order, fundamental_sets, primitive_root, reduced_odd_sequence, solve_nice_congruence,
    nontrivial_sqrt_one, ModdContext,
};
use rhofield::numthy::{delta, is_prime};

use crate::render::SequenceDto;

pub const KNOWN: &[&str] = &[
    "delta",
    "delta-plus",
    "delta-minus",
    "discr",
    "qdisc",
    "primroot",
    "kcong",
    "k2cong",
    "shat",
    "oddstar",
    "flist",
    "modd-orders",
];

fn primes_one_mod_four(count: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 5u64;
    while (out.len() as u64) < count {
        if p % 4 == 1 && is_prime(p) {
            out.push(p);
        }
        p += 2;
    }
    out
}

/// First `count` terms of the named sequence; family sequences (`oddstar`,
/// `flist`, `modd-orders`) additionally need the modulus `n`.
pub fn sequence(name: &str, count: u64, n: Option<u64>) -> Result<SequenceDto> {
    let need_n = || -> Result<u64> {
        n.ok_or_else(|| anyhow::anyhow!("sequence '{name}' needs --n"))
    };
    let terms: Vec<String> = match name {
        "delta" => (1..=count).map(|n| delta(n).to_string()).collect(),
        "delta-plus" => (1..=count)
            .map(|n| zero_sign_counts(n).0.to_string())
            .collect(),
        "delta-minus" => (1..=count)
            .map(|n| zero_sign_counts(n).1.to_string())
            .collect(),
        "discr" => (1..=count)
            .map(|n| {
                let p = minimal_poly_recursive(n).expect("construction").poly;
                p.discriminant().to_string()
            })
            .collect(),
        "qdisc" => (1..=count)
            .map(|n| {
                discriminant_conjecture_check(n)
                    .expect("q(n) is integral")
                    .q_value
                    .to_string()
            })
            .collect(),
        "primroot" => (1..=count)
            .map(|n| {
                // by convention the trivial n = 1 group prints 0
                if n == 1 {
                    "0".to_string()
                } else {
                    primitive_root(&ModdContext::new(n))
                        .unwrap_or(0)
                        .to_string()
                }
            })
            .collect(),
        "kcong" => primes_one_mod_four(count)
            .into_iter()
            .map(|p| solve_nice_congruence(p).expect("p = 1 mod 4").k.to_string())
            .collect(),
        "k2cong" => primes_one_mod_four(count)
            .into_iter()
            .map(|p| solve_nice_congruence(p).expect("p = 1 mod 4").k2.to_string())
            .collect(),
        "shat" => primes_one_mod_four(count)
            .into_iter()
            .map(|p| {
                nontrivial_sqrt_one(&ModdContext::new(p))
                    .expect("even group order")
                    .to_string()
            })
            .collect(),
        "oddstar" => {
            let n = need_n()?;
            (1..=count)
                .map(|k| reduced_odd_sequence(n, k).map(|v| v.to_string()))
                .collect::<Result<Vec<_>, _>>()?
        }
        "flist" => {
            let n = need_n()?;
            fundamental_sets(n)?
                .f_list
                .into_iter()
                .take(count as usize)
                .map(|v| v.to_string())
                .collect()
        }
        "modd-orders" => {
            let n = need_n()?;
            let ctx = ModdContext::new(n);
            ctx.members()
                .iter()
                .take(count as usize)
                .map(|&a| element_order(&ctx, a).to_string())
                .collect()
        }
        _ => bail!(
            "unknown sequence '{name}'; known sequences: {}",
            KNOWN.join(", ")
        ),
    };
    let name = match n {
        Some(n) if matches!(name, "oddstar" | "flist" | "modd-orders") => format!("{name}({n})"),
        _ => name.to_string(),
    };
    Ok(SequenceDto { name, terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_prefixes() {
        let discr = sequence("discr", 13, None).unwrap();
        assert_eq!(
            discr.terms,
            vec![
                "1", "1", "1", "8", "5", "12", "49", "2048", "81", "2000", "14641", "2304",
                "371293"
            ]
        );
        let q = sequence("qdisc", 20, None).unwrap();
        assert_eq!(
            q.terms,
            vec![
                "1", "2", "3", "2", "5", "3", "7", "2", "9", "5", "11", "9", "13", "7", "45",
                "2", "17", "27", "19", "25"
            ]
        );
        let pr = sequence("primroot", 26, None).unwrap();
        assert_eq!(
            pr.terms,
            vec![
                "0", "1", "1", "3", "3", "5", "3", "3", "5", "3", "3", "0", "7", "5", "7", "3",
                "3", "5", "3", "0", "11", "3", "3", "0", "3", "7"
            ]
        );
    }

    #[test]
    fn family_sequences() {
        let odd7 = sequence("oddstar", 6, Some(7)).unwrap();
        assert_eq!(odd7.terms, vec!["1", "3", "5", "9", "11", "13"]);
        assert_eq!(odd7.name, "oddstar(7)");
        let f15 = sequence("flist", 8, Some(15)).unwrap();
        assert_eq!(f15.terms, vec!["2", "1", "0", "1", "0", "1", "2", "0"]);
        assert!(sequence("oddstar", 3, None).is_err());
        assert!(sequence("nope", 3, None).is_err());
    }
}
