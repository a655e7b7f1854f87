//! Table renderers. TEXT mode mirrors the printed tables (unicode
//! superscripts, U+2212 minus); CSV and JSON carry plain coefficient lists
//! with big integers as decimal strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use rhofield::dsr::ReducedAlgebraTable;
use rhofield::minpoly::ZeroTable;
use rhofield::modd::{AbelianType, CycleStructure};
use rhofield::polycore::IntPoly;

pub const MINUS: char = '\u{2212}';

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

fn subscript(n: u64) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// Render a polynomial the way the minimal-polynomial table prints them:
/// descending powers, unicode superscripts, U+2212 for minus.
pub fn poly_unicode(p: &IntPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                out.push(MINUS);
            }
            first = false;
        } else if c.is_negative() {
            out.push_str(&format!(" {} ", MINUS));
        } else {
            out.push_str(" + ");
        }
        let show_coeff = i == 0 || !mag.is_one();
        if show_coeff {
            out.push_str(&mag.to_string());
        }
        if i == 1 {
            out.push('x');
        } else if i >= 2 {
            out.push('x');
            out.push_str(&superscript(i));
        }
    }
    out
}

fn int_list(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Trim trailing zeros the way the zero table prints rows (an all-zero row
/// stays `[0]`).
fn trimmed_row(coords: &[BigInt]) -> Vec<BigInt> {
    let mut end = coords.len();
    while end > 1 && coords[end - 1].is_zero() {
        end -= 1;
    }
    coords[..end].to_vec()
}

// ---------------------------------------------------------------------------
// minimal polynomials

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinPolyDto {
    pub n: u64,
    pub degree: u64,
    /// Ascending coefficients as decimal strings.
    pub coeffs: Vec<String>,
    pub display: String,
}

pub fn minpoly_dto(n: u64, p: &IntPoly) -> MinPolyDto {
    MinPolyDto {
        n,
        degree: p.degree().unwrap_or(0) as u64,
        coeffs: p.coeffs().iter().map(|c| c.to_string()).collect(),
        display: poly_unicode(p),
    }
}

pub fn minpoly_text(rows: &[MinPolyDto], coeffs: bool) -> String {
    rows.iter()
        .map(|r| {
            if coeffs {
                let parts: Vec<&str> = r.coeffs.iter().map(String::as_str).collect();
                format!("{}\t[{}]", r.n, parts.join(", "))
            } else {
                format!("{}\t{}", r.n, r.display)
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn minpoly_csv(rows: &[MinPolyDto]) -> String {
    let mut out = String::from("n,degree,coeffs_ascending\n");
    for r in rows {
        out.push_str(&format!("{},{},{}\n", r.n, r.degree, r.coeffs.join(" ")));
    }
    out
}

// ---------------------------------------------------------------------------
// zero tables

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroTableDto {
    pub n: u64,
    pub rows: Vec<ZeroRowDto>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroRowDto {
    /// The odd index 2l+1 the zero 2cos(pi(2l+1)/n) belongs to.
    pub index: u64,
    /// Power-basis coordinates, padded to delta(n), decimal strings.
    pub coords: Vec<String>,
}

pub fn zero_table_dto(t: &ZeroTable) -> ZeroTableDto {
    ZeroTableDto {
        n: t.n,
        rows: t
            .rows
            .iter()
            .map(|(m, coords)| ZeroRowDto {
                index: *m,
                coords: coords.iter().map(|c| c.to_string()).collect(),
            })
            .collect(),
    }
}

pub fn zeros_text(tables: &[ZeroTable]) -> String {
    tables
        .iter()
        .map(|t| {
            let rows: Vec<String> = t
                .rows
                .iter()
                .map(|(_, coords)| int_list(&trimmed_row(coords)))
                .collect();
            format!("{}\t[{}]", t.n, rows.join(", "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn zeros_csv(tables: &[ZeroTable]) -> String {
    let mut out = String::from("n,zero_index,coords_ascending\n");
    for t in tables {
        for (m, coords) in &t.rows {
            let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("{},{},{}\n", t.n, m, parts.join(" ")));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// DSR algebra

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DsrTableDto {
    pub n: u64,
    pub delta: u64,
    pub basis: Vec<String>,
    pub products: Vec<DsrProductDto>,
    pub dependencies: Vec<DsrDependencyDto>,
    /// Basis DSRs written in powers of rho (round-bracket data).
    pub basis_values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DsrProductDto {
    pub lhs: String,
    pub m: u64,
    pub k: u64,
    pub rhs: String,
    pub coords: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DsrDependencyDto {
    pub label: String,
    pub index: u64,
    pub rhs: String,
    pub coords: Vec<String>,
}

/// Greek DSR labels used by the printed table: R2..R6 map to rho..chi,
/// higher indices keep the R_k notation.
pub fn dsr_label(k: u64) -> String {
    match k {
        1 => "1".to_string(),
        2 => "ρ".to_string(),
        3 => "σ".to_string(),
        4 => "τ".to_string(),
        5 => "ω".to_string(),
        6 => "χ".to_string(),
        _ => format!("R{}", subscript(k)),
    }
}

fn rational_str(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Linear combination over the DSR basis, e.g. `1 + 2ρ` or `3ρ + τ`.
fn combination(coords: &[BigRational], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, label) in coords.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push(MINUS);
            }
        } else if neg {
            out.push_str(&format!(" {} ", MINUS));
        } else {
            out.push_str(" + ");
        }
        let coeff_one = mag.is_one();
        if label == "1" {
            out.push_str(&rational_str(&mag));
        } else {
            if !coeff_one {
                out.push_str(&rational_str(&mag));
            }
            out.push_str(label);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Powers-of-rho rendering for the round-bracket basis values.
fn rho_powers(coords: &[BigRational]) -> String {
    let labels: Vec<String> = (0..coords.len())
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "ρ".to_string(),
            k => format!("ρ{}", superscript(k)),
        })
        .collect();
    combination(coords, &labels)
}

pub fn dsr_table_dto(t: &ReducedAlgebraTable) -> DsrTableDto {
    let labels: Vec<String> = t.basis.iter().map(|&i| dsr_label(i)).collect();
    let products = t
        .products
        .iter()
        .map(|p| DsrProductDto {
            lhs: if p.m == p.k {
                format!("{}²", dsr_label(p.m))
            } else {
                format!("{}{}", dsr_label(p.m), dsr_label(p.k))
            },
            m: p.m,
            k: p.k,
            rhs: combination(&p.coords, &labels),
            coords: p.coords.iter().map(rational_str).collect(),
        })
        .collect();
    let dependencies = t
        .dependencies
        .iter()
        .map(|d| DsrDependencyDto {
            label: dsr_label(d.index),
            index: d.index,
            rhs: combination(&d.coords, &labels),
            coords: d.coords.iter().map(rational_str).collect(),
        })
        .collect();
    let basis_values = t
        .basis
        .iter()
        .zip(&t.basis_in_powers)
        .map(|(&i, coords)| format!("{} = {}", dsr_label(i), rho_powers(coords)))
        .collect();
    DsrTableDto {
        n: t.n,
        delta: t.delta,
        basis: labels,
        products,
        dependencies,
        basis_values,
    }
}

pub fn dsr_text(dto: &DsrTableDto) -> String {
    let mut lines = vec![format!(
        "n = {}  delta = {}  basis <{}>",
        dto.n,
        dto.delta,
        dto.basis.join(", ")
    )];
    for p in &dto.products {
        lines.push(format!("{} = {}", p.lhs, p.rhs));
    }
    for d in &dto.dependencies {
        lines.push(format!("[{} = {}]", d.label, d.rhs));
    }
    let values: Vec<String> = dto
        .basis_values
        .iter()
        .skip(2) // "1 = 1" and "rho = rho" carry no information
        .cloned()
        .collect();
    if !values.is_empty() {
        lines.push(format!("({})", values.join(", ")));
    }
    lines.join("\n")
}

pub fn dsr_csv(dto: &DsrTableDto) -> String {
    let mut out = String::from("n,kind,lhs,rhs_coords\n");
    for p in &dto.products {
        out.push_str(&format!(
            "{},product,R{}*R{},{}\n",
            dto.n,
            p.m,
            p.k,
            p.coords.join(" ")
        ));
    }
    for d in &dto.dependencies {
        out.push_str(&format!(
            "{},dependency,R{},{}\n",
            dto.n,
            d.index,
            d.coords.join(" ")
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// cycle structures and group tables

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CyclesDto {
    pub n: u64,
    pub cycles: Vec<Vec<u64>>,
    /// (cycle length, multiplicity), descending length.
    pub signature: Vec<(u64, u64)>,
    /// Nontrivial square root of unity, when the group has one.
    pub sqrt_one: Option<u64>,
}

/// Plain cycle lists, matching the printed table; the square-root marker
/// stays in the JSON/CSV data (typographic emphasis is not reproduced).
pub fn cycles_text(rows: &[CyclesDto]) -> String {
    rows.iter()
        .map(|r| {
            let cycles: Vec<String> = r
                .cycles
                .iter()
                .map(|c| {
                    let parts: Vec<String> = c.iter().map(u64::to_string).collect();
                    format!("[{}]", parts.join(", "))
                })
                .collect();
            format!("{}\t[{}]", r.n, cycles.join(", "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn cycles_csv(rows: &[CyclesDto]) -> String {
    let mut out = String::from("n,cycle_index,elements\n");
    for r in rows {
        for (i, c) in r.cycles.iter().enumerate() {
            let parts: Vec<String> = c.iter().map(u64::to_string).collect();
            out.push_str(&format!("{},{},{}\n", r.n, i + 1, parts.join(" ")));
        }
    }
    out
}

/// One shared identity vertex, one polygon per maximal cycle.
pub fn cycles_dot(rows: &[CyclesDto]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&format!("graph modd_{} {{\n", r.n));
        out.push_str(&format!("  label=\"Modd {} cycle graph\";\n", r.n));
        out.push_str("  node [shape=circle];\n");
        out.push_str("  \"1\" [style=filled];\n");
        let mut vertices: Vec<u64> = r.cycles.iter().flatten().copied().collect();
        vertices.sort_unstable();
        vertices.dedup();
        for v in vertices.iter().filter(|&&v| v != 1) {
            out.push_str(&format!("  \"{}\";\n", v));
        }
        for c in &r.cycles {
            if c.len() == 1 {
                continue;
            }
            for w in c.windows(2) {
                out.push_str(&format!("  \"{}\" -- \"{}\";\n", w[0], w[1]));
            }
            if c.len() > 2 {
                out.push_str(&format!("  \"{}\" -- \"{}\";\n", c[c.len() - 1], c[0]));
            }
        }
        out.push_str("}\n");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaloisRowDto {
    pub n: u64,
    pub order: u64,
    pub signature: String,
    pub cycle_count: u64,
    pub group: String,
}

/// `16₂ 8₁ 4₁ 2₂`-style signature string.
pub fn signature_string(cs: &CycleStructure) -> String {
    cs.signature
        .iter()
        .map(|(order, count)| format!("{}{}", order, subscript(*count)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `Z₈ × Z₂`-style group string: factors sorted by modulus descending,
/// identical factors collected into a superscript exponent.
pub fn group_string(t: &AbelianType) -> String {
    if t.factors.is_empty() {
        return "Z₁".to_string();
    }
    let mut sizes: Vec<u64> = t.factors.iter().map(|&(p, a)| p.pow(a)).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < sizes.len() {
        let j = sizes[i..].iter().take_while(|&&s| s == sizes[i]).count();
        let base = format!("Z{}", subscript(sizes[i]));
        if j == 1 {
            parts.push(base);
        } else {
            parts.push(format!("{}{}", base, superscript(j)));
        }
        i += j;
    }
    parts.join(" × ")
}

pub fn galois_text(rows: &[GaloisRowDto]) -> String {
    rows.iter()
        .map(|r| {
            format!(
                "{}\t{}\t{}\t{}\t{}",
                r.n, r.order, r.signature, r.cycle_count, r.group
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn galois_csv(rows: &[GaloisRowDto]) -> String {
    let mut out = String::from("n,order,signature,cycle_count,group\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n, r.order, r.signature, r.cycle_count, r.group
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// sequences

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SequenceDto {
    pub name: String,
    pub terms: Vec<String>,
}

pub fn sequence_text(s: &SequenceDto) -> String {
    format!("{}: [{}]", s.name, s.terms.join(", "))
}

pub fn sequence_csv(s: &SequenceDto) -> String {
    let mut out = String::from("name,index,value\n");
    for (i, t) in s.terms.iter().enumerate() {
        out.push_str(&format!("{},{},{}\n", s.name, i + 1, t));
    }
    out
}
