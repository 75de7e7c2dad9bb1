//! The hermitian symmetric spaces with their mod-2 cohomology rings, Sq²
//! data and Picard generators, together with the closed-form KO-tables.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graded_algebra::{Element, Generator, Presentation};
use crate::ko_assembler::{Degeneration, KoTable};
use crate::polynomial::Polynomial;
use crate::steenrod::{wu_chern_sq2, Differential, SqAction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exceptional {
    EIII,
    EVII,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpaceId {
    Point,
    ProjectiveSpace(u32),
    Grassmannian(u32, u32),
    SymplecticGrassmannian(u32),
    Quadric(u32),
    Spinor(u32),
    Exceptional(Exceptional),
    Custom(String),
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceId::Point => f.write_str("point"),
            SpaceId::ProjectiveSpace(n) => write!(f, "cp:{n}"),
            SpaceId::Grassmannian(m, n) => write!(f, "gr:{m},{n}"),
            SpaceId::SymplecticGrassmannian(n) => write!(f, "lg:{n}"),
            SpaceId::Quadric(n) => write!(f, "quadric:{n}"),
            SpaceId::Spinor(n) => write!(f, "spinor:{n}"),
            SpaceId::Exceptional(Exceptional::EIII) => f.write_str("eiii"),
            SpaceId::Exceptional(Exceptional::EVII) => f.write_str("evii"),
            SpaceId::Custom(name) => f.write_str(name),
        }
    }
}

/// A named degree-2 class.
#[derive(Clone, Debug)]
pub struct Twist {
    pub name: String,
    pub polynomial: Polynomial,
    pub class: Element,
}

/// Label of the trivial twist.
pub const TRIVIAL_TWIST: &str = "O";

/// A presented cohomology ring with validated Sq² data and twist classes.
#[derive(Clone, Debug)]
pub struct SpaceData {
    name: String,
    id: SpaceId,
    presentation: Presentation,
    sq2: SqAction,
    sq2_values: Vec<Polynomial>,
    twists: Vec<Twist>,
    // index 0 is the trivial twist, index i + 1 is twists[i]
    differentials: Vec<Differential>,
    complex_dimension: u32,
    degeneration: Degeneration,
}

impl SpaceData {
    /// Builds and validates a space. The top degree is twice the complex
    /// dimension.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        id: SpaceId,
        generators: Vec<Generator>,
        relations: Vec<Polynomial>,
        sq2_values: Vec<Polynomial>,
        twists: Vec<(String, Polynomial)>,
        complex_dimension: u32,
        degeneration: Degeneration,
    ) -> Result<Self> {
        let presentation = Presentation::new(generators, relations, 2 * complex_dimension)?;
        let sq2 = SqAction::new(&presentation, &sq2_values)?;
        let mut differentials = vec![Differential::untwisted(&presentation, &sq2)];
        let mut named: Vec<Twist> = Vec::with_capacity(twists.len());
        for (name, polynomial) in twists {
            if named.iter().any(|t| t.name == name) {
                return Err(Error::DuplicateTwist(name));
            }
            let class = presentation
                .normal_form_in(&polynomial, 2)
                .map_err(|e| match e {
                    Error::DegreeMismatch { found, .. } => Error::TwistDegree(found),
                    other => other,
                })?;
            differentials.push(Differential::new(&presentation, &sq2, class.clone())?);
            named.push(Twist {
                name,
                polynomial,
                class,
            });
        }
        Ok(SpaceData {
            name: name.into(),
            id,
            presentation,
            sq2,
            sq2_values,
            twists: named,
            differentials,
            complex_dimension,
            degeneration,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn id(&self) -> &SpaceId {
        &self.id
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn sq2(&self) -> &SqAction {
        &self.sq2
    }

    /// Sq² of each generator as given at construction.
    pub fn sq2_values(&self) -> &[Polynomial] {
        &self.sq2_values
    }

    pub fn twists(&self) -> &[Twist] {
        &self.twists
    }

    pub fn complex_dimension(&self) -> u32 {
        self.complex_dimension
    }

    pub fn degeneration(&self) -> &Degeneration {
        &self.degeneration
    }

    /// Labels of every twist, starting with the trivial one.
    pub fn twist_labels(&self) -> Vec<&str> {
        core::iter::once(TRIVIAL_TWIST)
            .chain(self.twists.iter().map(|t| t.name.as_str()))
            .collect()
    }

    /// Resolves a twist name to its label and differential.
    ///
    /// `None`, `O`, `0` and `trivial` select the trivial twist; parentheses
    /// are ignored when matching, so `O(1)` finds `O1`.
    pub fn differential(&self, twist: Option<&str>) -> Result<(&str, &Differential)> {
        let Some(raw) = twist else {
            return Ok((TRIVIAL_TWIST, &self.differentials[0]));
        };
        if let Some(i) = self.twists.iter().position(|t| t.name == raw) {
            return Ok((&self.twists[i].name, &self.differentials[i + 1]));
        }
        let key: String = raw.chars().filter(|c| !matches!(c, '(' | ')')).collect();
        if matches!(key.as_str(), "O" | "0" | "trivial") {
            return Ok((TRIVIAL_TWIST, &self.differentials[0]));
        }
        match self.twists.iter().position(|t| t.name == key) {
            Some(i) => Ok((&self.twists[i].name, &self.differentials[i + 1])),
            None => Err(Error::UnknownTwist(raw.to_string())),
        }
    }
}

const CITE_PROJECTIVE: &str =
    "E3-degeneration proved for projective spaces and their line-bundle Thom spaces";
const CITE_GRASSMANNIAN: &str =
    "E3-degeneration proved for Grassmannians and their line-bundle Thom spaces";
const CITE_SYMPLECTIC: &str =
    "E3-degeneration proved for Lagrangian Grassmannians: the E3 page is generated by torsion-free classes";
const CITE_QUADRIC: &str = "E3-degeneration proved for projective quadrics of dimension at least 3";
const CITE_SPINOR: &str =
    "E3-degeneration proved for spinor varieties: the E3 page is generated by torsion-free classes";
const CITE_EXCEPTIONAL: &str =
    "E3-degeneration proved for EIII and EVII: the E3 page is concentrated in degrees that admit no higher differentials";
const CITE_POINT: &str = "coefficient groups of KO";

fn vars(nvars: usize) -> impl Fn(usize) -> Polynomial {
    move |i| Polynomial::var(nvars, i)
}

fn o1(p: Polynomial) -> Vec<(String, Polynomial)> {
    vec![(String::from("O1"), p)]
}

#[allow(clippy::too_many_arguments)]
fn build(
    name: String,
    id: SpaceId,
    generators: Vec<Generator>,
    relations: Vec<Polynomial>,
    sq2: Vec<Polynomial>,
    twists: Vec<(String, Polynomial)>,
    dimc: u32,
    citation: &str,
) -> SpaceData {
    SpaceData::new(
        name,
        id,
        generators,
        relations,
        sq2,
        twists,
        dimc,
        Degeneration::established(citation),
    )
    .expect("catalog data is valid")
}

pub fn point() -> SpaceData {
    build(
        String::from("pt"),
        SpaceId::Point,
        vec![],
        vec![],
        vec![],
        vec![],
        0,
        CITE_POINT,
    )
}

/// `CP^n`: `Z/2[x]/(x^{n+1})`, `Sq²x = x²`, `O(1) ↦ x`.
pub fn projective_space(n: u32) -> Result<SpaceData> {
    if n < 1 {
        return Err(Error::OutOfRange {
            family: "cp",
            requirement: "n >= 1",
        });
    }
    let x = vars(1)(0);
    Ok(build(
        format!("CP^{n}"),
        SpaceId::ProjectiveSpace(n),
        vec![Generator::new("x", 2)],
        vec![x.pow(n + 1)],
        vec![x.pow(2)],
        o1(x),
        n,
        CITE_PROJECTIVE,
    ))
}

/// The dual classes `b_0..=b_top` defined by `a · b = 1`:
/// `b_j = Σ_{i=1}^{min(m, j)} a_i b_{j-i}`.
pub fn dual_classes(m: usize, top: usize) -> Vec<Polynomial> {
    let a = vars(m);
    let mut b = vec![Polynomial::one(m)];
    for j in 1..=top {
        let mut bj = Polynomial::zero();
        for i in 1..=m.min(j) {
            bj += &(&a(i - 1) * &b[j - i]);
        }
        b.push(bj);
    }
    b
}

/// The Grassmannian of `m`-planes in `C^{m+n}`: Chern classes `a_1..a_m`
/// modulo the dual classes `b_{n+1}..b_{n+m}`, with Wu's formula for Sq².
pub fn grassmannian(m: u32, n: u32) -> Result<SpaceData> {
    if m < 1 || n < 1 {
        return Err(Error::OutOfRange {
            family: "gr",
            requirement: "m >= 1 and n >= 1",
        });
    }
    let (mu, nu) = (m as usize, n as usize);
    let generators = (1..=m)
        .map(|i| Generator::new(format!("a{i}"), 2 * i))
        .collect();
    let b = dual_classes(mu, nu + mu);
    let relations = b[nu + 1..].to_vec();
    let classes: Vec<usize> = (0..mu).collect();
    let sq2 = (1..=mu).map(|i| wu_chern_sq2(&classes, mu, i)).collect();
    Ok(build(
        format!("Gr({m},{n})"),
        SpaceId::Grassmannian(m, n),
        generators,
        relations,
        sq2,
        o1(vars(mu)(0)),
        m * n,
        CITE_GRASSMANNIAN,
    ))
}

/// The Lagrangian Grassmannian `X_n`: exterior algebra on `c_1..c_n`.
pub fn symplectic_grassmannian(n: u32) -> Result<SpaceData> {
    if n < 1 {
        return Err(Error::OutOfRange {
            family: "lg",
            requirement: "n >= 1",
        });
    }
    let nu = n as usize;
    let c = vars(nu);
    let generators = (1..=n)
        .map(|i| Generator::new(format!("c{i}"), 2 * i))
        .collect();
    let relations = (0..nu).map(|i| c(i).pow(2)).collect();
    let classes: Vec<usize> = (0..nu).collect();
    let sq2 = (1..=nu).map(|i| wu_chern_sq2(&classes, nu, i)).collect();
    Ok(build(
        format!("LG({n})"),
        SpaceId::SymplecticGrassmannian(n),
        generators,
        relations,
        sq2,
        o1(c(0)),
        n * (n + 1) / 2,
        CITE_SYMPLECTIC,
    ))
}

/// The quadric `Q^n ⊂ CP^{n+1}`, `n ≥ 3`.
///
/// Even `n = 2m`: generators `x, a, b` with `x^m = a + b`, `x^{m+1} = 0`
/// and the middle-degree products fixed by the parity of `m`.
/// Odd `n = 2m + 1`: generators `x, a` with `x^{m+1} = 0`, `a² = 0`.
pub fn quadric(n: u32) -> Result<SpaceData> {
    if n < 3 {
        return Err(Error::OutOfRange {
            family: "quadric",
            requirement: "n >= 3",
        });
    }
    let a_sq2_nonzero = matches!(n % 4, 0 | 3);
    let (generators, relations, sq2) = if n.is_multiple_of(2) {
        let m = n / 2;
        let v = vars(3);
        let (x, a, b) = (v(0), v(1), v(2));
        let top = &a * &x.pow(m);
        let (ab, sq) = if m % 2 == 1 {
            (&(&a * &b) + &top, Polynomial::zero())
        } else {
            (&a * &b, top)
        };
        let relations = vec![
            &(&x.pow(m) + &a) + &b,
            x.pow(m + 1),
            ab,
            &a.pow(2) + &sq,
            &b.pow(2) + &sq,
        ];
        let sa = if a_sq2_nonzero {
            &a * &x
        } else {
            Polynomial::zero()
        };
        let sb = sa.clone();
        (
            vec![
                Generator::new("x", 2),
                Generator::new("a", n),
                Generator::new("b", n),
            ],
            relations,
            vec![x.pow(2), sa, sb],
        )
    } else {
        let m = (n - 1) / 2;
        let v = vars(2);
        let (x, a) = (v(0), v(1));
        let sa = if a_sq2_nonzero {
            &a * &x
        } else {
            Polynomial::zero()
        };
        (
            vec![Generator::new("x", 2), Generator::new("a", 2 * m + 2)],
            vec![x.pow(m + 1), a.pow(2)],
            vec![x.pow(2), sa],
        )
    };
    Ok(build(
        format!("Q^{n}"),
        SpaceId::Quadric(n),
        generators,
        relations,
        sq2,
        o1(vars(if n.is_multiple_of(2) { 3 } else { 2 })(0)),
        n,
        CITE_QUADRIC,
    ))
}

/// The spinor variety `S_n` (one component of the maximal isotropic
/// Grassmannian of `C^{2n}`): generators `e_2..e_{2n-2}`, `e_{2i}² = e_{4i}`,
/// `Sq²(e_{2i}) = i·e_{2i+2}`, twist `S ↦ e_2`.
pub fn spinor(n: u32) -> Result<SpaceData> {
    if n < 2 {
        return Err(Error::OutOfRange {
            family: "spinor",
            requirement: "n >= 2",
        });
    }
    let k = (n - 1) as usize;
    let e = vars(k);
    // generator j (0-based) is e_{2(j+1)}
    let generators = (1..=k)
        .map(|i| Generator::new(format!("e{}", 2 * i), 2 * i as u32))
        .collect();
    let relations = (1..=k)
        .map(|i| {
            let sq = e(i - 1).pow(2);
            if 2 * i <= k {
                &sq + &e(2 * i - 1)
            } else {
                sq
            }
        })
        .collect();
    let sq2 = (1..=k)
        .map(|i| {
            if i % 2 == 1 && i < k {
                e(i)
            } else {
                Polynomial::zero()
            }
        })
        .collect();
    Ok(build(
        format!("S_{n}"),
        SpaceId::Spinor(n),
        generators,
        relations,
        sq2,
        vec![(String::from("S"), e(0))],
        n * (n - 1) / 2,
        CITE_SPINOR,
    ))
}

pub fn exceptional(which: Exceptional) -> SpaceData {
    match which {
        Exceptional::EIII => {
            let v = vars(2);
            let (t, u) = (v(0), v(1));
            build(
                String::from("EIII"),
                SpaceId::Exceptional(which),
                vec![Generator::new("t", 2), Generator::new("u", 8)],
                vec![&u.pow(2) * &t, &u.pow(3) + &t.pow(12)],
                vec![t.pow(2), &u * &t],
                o1(t),
                16,
                CITE_EXCEPTIONAL,
            )
        }
        Exceptional::EVII => {
            let v = vars(3);
            let (t, w, x) = (v(0), v(1), v(2));
            build(
                String::from("EVII"),
                SpaceId::Exceptional(which),
                vec![
                    Generator::new("t", 2),
                    Generator::new("v", 10),
                    Generator::new("w", 18),
                ],
                vec![t.pow(14), w.pow(2), x.pow(2)],
                vec![t.pow(2), Polynomial::zero(), Polynomial::zero()],
                o1(t),
                27,
                CITE_EXCEPTIONAL,
            )
        }
    }
}

/// Constructs the space named by `id`.
pub fn space(id: &SpaceId) -> Result<SpaceData> {
    match id {
        SpaceId::Point => Ok(point()),
        SpaceId::ProjectiveSpace(n) => projective_space(*n),
        SpaceId::Grassmannian(m, n) => grassmannian(*m, *n),
        SpaceId::SymplecticGrassmannian(n) => symplectic_grassmannian(*n),
        SpaceId::Quadric(n) => quadric(*n),
        SpaceId::Spinor(n) => spinor(*n),
        SpaceId::Exceptional(e) => Ok(exceptional(*e)),
        SpaceId::Custom(name) => Err(Error::NotTabulated(name.clone())),
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `ρ(n, i) = Σ_{d ≡ i (mod 4)} C(n, d)`, with `i` read mod 4.
pub fn rho(n: u64, i: i64) -> u64 {
    let r = i.rem_euclid(4) as u64;
    (r..=n).step_by(4).map(|d| binomial(n, d)).sum()
}

fn rho4(n: u64, shift: i64, sign: i64) -> [usize; 4] {
    core::array::from_fn(|i| rho(n, shift + sign * i as i64) as usize)
}

/// The closed-form table for a catalog space: `twisted` selects the Picard
/// generator, otherwise the trivial twist.
pub fn expected_table(id: &SpaceId, twisted: bool) -> Result<KoTable> {
    let (t0, t1, s, label, citation): (u64, u64, [usize; 4], &str, &str) = match *id {
        SpaceId::Point => {
            if twisted {
                return Err(Error::UnknownTwist(String::from("O1")));
            }
            (1, 0, [1, 0, 0, 0], TRIVIAL_TWIST, CITE_POINT)
        }
        SpaceId::ProjectiveSpace(n) => {
            let n = n as u64;
            let (t0, t1) = if n.is_multiple_of(2) {
                (n / 2 + 1, n / 2)
            } else {
                (n.div_ceil(2), n.div_ceil(2))
            };
            let s = match (n % 4, twisted) {
                (0, _) | (2, false) => [1, 0, 0, 0],
                (1, false) => [1, 1, 0, 0],
                (2, true) => [0, 0, 1, 0],
                (3, false) => [1, 0, 0, 1],
                _ => [0; 4],
            };
            (t0, t1, s, "O1", CITE_PROJECTIVE)
        }
        SpaceId::Grassmannian(m, n) => {
            let (t0, t1, s) = grassmannian_table(m as u64, n as u64, twisted);
            (t0, t1, s, "O1", CITE_GRASSMANNIAN)
        }
        SpaceId::SymplecticGrassmannian(n) => {
            let n64 = n as u64;
            let t = 1u64 << (n64 - 1);
            let s = match (n % 2 == 0, twisted) {
                (true, false) => rho4(n64 / 2, 0, 1),
                (true, true) => rho4(n64 / 2, -(n as i64), 1),
                (false, false) => rho4(n64.div_ceil(2), 0, 1),
                (false, true) => [0; 4],
            };
            (t, t, s, "O1", CITE_SYMPLECTIC)
        }
        SpaceId::Quadric(n) => {
            if n < 3 {
                return Err(Error::NotTabulated(id.to_string()));
            }
            let n64 = n as u64;
            let (t0, t1) = match n % 4 {
                0 => (n64 / 2 + 2, n64 / 2),
                2 => (n64 / 2 + 1, n64 / 2 + 1),
                _ => (n64.div_ceil(2), n64.div_ceil(2)),
            };
            let (untwisted, twisted_s) = match n % 8 {
                0 => ([2, 0, 0, 0], [2, 0, 0, 0]),
                1 => ([1, 1, 0, 0], [1, 1, 0, 0]),
                2 => ([1, 2, 1, 0], [0; 4]),
                3 => ([1, 1, 0, 0], [0, 0, 1, 1]),
                4 => ([2, 0, 0, 0], [0, 0, 2, 0]),
                5 => ([1, 0, 0, 1], [0, 1, 1, 0]),
                6 => ([1, 0, 1, 2], [0; 4]),
                _ => ([1, 0, 0, 1], [1, 0, 0, 1]),
            };
            (
                t0,
                t1,
                if twisted { twisted_s } else { untwisted },
                "O1",
                CITE_QUADRIC,
            )
        }
        SpaceId::Spinor(n) => {
            if n < 2 {
                return Err(Error::NotTabulated(id.to_string()));
            }
            let t = 1u64 << (n - 2);
            let s = if twisted {
                [0; 4]
            } else if n % 4 == 2 {
                rho4(n as u64 / 2, 1, -1)
            } else {
                rho4(n as u64 / 2, 0, -1)
            };
            (t, t, s, "S", CITE_SPINOR)
        }
        SpaceId::Exceptional(Exceptional::EIII) => (15, 12, [3, 0, 0, 0], "O1", CITE_EXCEPTIONAL),
        SpaceId::Exceptional(Exceptional::EVII) => (
            28,
            28,
            if twisted { [0; 4] } else { [1, 3, 3, 1] },
            "O1",
            CITE_EXCEPTIONAL,
        ),
        SpaceId::Custom(ref name) => return Err(Error::NotTabulated(name.clone())),
    };
    Ok(KoTable {
        t0: t0 as usize,
        t1: t1 as usize,
        s,
        twist_label: String::from(if twisted { label } else { TRIVIAL_TWIST }),
        degeneration: Degeneration::established(citation),
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Residue {
    Zero,
    Two,
    Odd,
}

fn residue(k: u64) -> Residue {
    match k % 4 {
        0 => Residue::Zero,
        2 => Residue::Two,
        _ => Residue::Odd,
    }
}

fn grassmannian_table(m: u64, n: u64, twisted: bool) -> (u64, u64, [usize; 4]) {
    let (k, l) = (m / 2, n / 2);
    let a = binomial(m + n, m);
    let b = binomial(k + l, k);
    let bu = b as usize;
    if m % 2 == 1 && n % 2 == 1 {
        let s = match (twisted, m % 4 == n % 4) {
            (true, _) => [0; 4],
            (false, true) => [bu, bu, 0, 0],
            (false, false) => [bu, 0, 0, bu],
        };
        return (a / 2, a / 2, s);
    }
    let t = ((a + b) / 2, (a - b) / 2);
    if !twisted {
        return (t.0, t.1, [bu, 0, 0, 0]);
    }
    let b1 = binomial(k + l - 1, k) as usize;
    let b2 = if k == 0 {
        0
    } else {
        binomial(k + l - 1, k - 1) as usize
    };
    use Residue::*;
    let s = match (residue(m), residue(n)) {
        (Zero, Zero) | (Zero, Odd) | (Odd, Zero) => [bu, 0, 0, 0],
        (Zero, Two) => [b1, 0, b2, 0],
        (Two, Zero) => [b2, 0, b1, 0],
        _ => [0, 0, bu, 0],
    };
    (t.0, t.1, s)
}
