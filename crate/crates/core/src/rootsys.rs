//! Reduced root systems with rational coordinates, their reflections, and
//! multiplicity functions stored per reflection-group orbit.

use std::path::Path;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::Deserialize;

use crate::error::{DunklError, Result};
use crate::poly::Reflection;
use crate::rational::{fmt_rational, frac, int, parse_rational, Rational};

pub type Vector = Vec<Rational>;

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `x - 2 <alpha,x>/<alpha,alpha> alpha`.
pub fn reflect(alpha: &[Rational], x: &[Rational]) -> Result<Vector> {
    let nn = dot(alpha, alpha);
    if nn.is_zero() {
        return Err(DunklError::ZeroRoot);
    }
    if alpha.len() != x.len() {
        return Err(DunklError::DimensionMismatch {
            expected: alpha.len(),
            found: x.len(),
        });
    }
    let t = int(2) * dot(alpha, x) / nn;
    Ok(x.iter().zip(alpha).map(|(xi, ai)| xi - &t * ai).collect())
}

/// Which built-in family (if any) a system came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Z2,
    A,
    B,
    D,
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DunklConstants {
    pub gamma_k: Rational,
    pub lambda_k: Rational,
}

#[derive(Clone, Debug)]
pub struct RootSystemData {
    name: String,
    family: Family,
    dim: usize,
    positive_roots: Vec<Vector>,
    /// `orbit_of[i]` is the orbit index of `positive_roots[i]`.
    orbit_of: Vec<usize>,
    orbits: Vec<Vec<usize>>,
    multiplicities: Vec<Rational>,
    reflections: Vec<Reflection>,
}

impl RootSystemData {
    /// Validates `roots` as a reduced, reflection-closed positive system and
    /// attaches one multiplicity per orbit (or one per root, which must then
    /// be orbit-constant). A single value is broadcast to all orbits.
    pub fn new(name: impl Into<String>, family: Family, dim: usize, roots: Vec<Vector>, kappa: &[Rational]) -> Result<Self> {
        for r in &roots {
            if r.len() != dim {
                return Err(DunklError::DimensionMismatch {
                    expected: dim,
                    found: r.len(),
                });
            }
            if r.iter().all(Zero::is_zero) {
                return Err(DunklError::ZeroRoot);
            }
        }
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                if parallel(&roots[i], &roots[j]) {
                    return Err(DunklError::NotReduced(i, j));
                }
            }
        }
        let n = roots.len();
        let mut uf: Vec<usize> = (0..n).collect();
        fn find(uf: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while uf[r] != r {
                r = uf[r];
            }
            uf[i] = r;
            r
        }
        for a in 0..n {
            for b in 0..n {
                // closure is up to scale, so rescaled roots are accepted
                let img = reflect(&roots[a], &roots[b])?;
                let hit = roots.iter().position(|r| parallel(r, &img));
                match hit {
                    Some(c) => {
                        let (rb, rc) = (find(&mut uf, b), find(&mut uf, c));
                        uf[rb.max(rc)] = rb.min(rc);
                    }
                    None => return Err(DunklError::NotClosed { mirror: a, target: b }),
                }
            }
        }
        let mut orbit_ids: Vec<usize> = Vec::new();
        let mut orbit_of = vec![0; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            let root = find(&mut uf, i);
            let k = match orbit_ids.iter().position(|&r| r == root) {
                Some(k) => k,
                None => {
                    orbit_ids.push(root);
                    orbits.push(Vec::new());
                    orbits.len() - 1
                }
            };
            orbit_of[i] = k;
            orbits[k].push(i);
        }
        let multiplicities = assign_multiplicities(&orbits, &orbit_of, kappa)?;
        let reflections = roots.iter().map(|r| Reflection::new(r)).collect::<Result<_>>()?;
        Ok(RootSystemData {
            name: name.into(),
            family,
            dim,
            positive_roots: roots,
            orbit_of,
            orbits,
            multiplicities,
            reflections,
        })
    }

    /// Catalog lookup: `z2:d=3`, `a:d=3`, `b:d=2`, `d:d=4`, `custom:<file>`.
    pub fn from_name(name: &str, kappa: &[Rational]) -> Result<Self> {
        if let Some(path) = name.strip_prefix("custom:") {
            return Self::from_json_file(path, kappa);
        }
        let unknown = || DunklError::UnknownSystem(name.to_string());
        let (fam, rest) = name.split_once(':').ok_or_else(unknown)?;
        let d: usize = rest
            .strip_prefix("d=")
            .and_then(|s| s.parse().ok())
            .filter(|&d| d >= 1)
            .ok_or_else(unknown)?;
        let e = |i: usize| -> Vector { (0..d).map(|k| int((k == i) as i64)).collect() };
        let comb = |i: usize, j: usize, s: i64| -> Vector {
            (0..d)
                .map(|k| {
                    if k == i {
                        int(1)
                    } else if k == j {
                        int(s)
                    } else {
                        int(0)
                    }
                })
                .collect()
        };
        let (family, roots) = match fam {
            "z2" => (Family::Z2, (0..d).map(e).collect::<Vec<_>>()),
            "a" if d >= 2 => {
                let mut r = Vec::new();
                for i in 0..d {
                    for j in i + 1..d {
                        r.push(comb(i, j, -1));
                    }
                }
                (Family::A, r)
            }
            "b" => {
                let mut r: Vec<Vector> = (0..d).map(e).collect();
                for i in 0..d {
                    for j in i + 1..d {
                        r.push(comb(i, j, -1));
                        r.push(comb(i, j, 1));
                    }
                }
                (Family::B, r)
            }
            "d" if d >= 2 => {
                let mut r = Vec::new();
                for i in 0..d {
                    for j in i + 1..d {
                        r.push(comb(i, j, -1));
                        r.push(comb(i, j, 1));
                    }
                }
                (Family::D, r)
            }
            _ => return Err(unknown()),
        };
        Self::new(name, family, d, roots, kappa)
    }

    pub fn from_json_file(path: impl AsRef<Path>, kappa_override: &[Rational]) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())?;
        let name = format!("custom:{}", path.as_ref().display());
        Self::from_json_str(&name, &text, kappa_override)
    }

    /// `{dim, roots: [["p/q", ...]], multiplicities: [...]}`; entries may be
    /// JSON numbers or rational strings. A non-empty `kappa_override` replaces
    /// the file's multiplicities.
    pub fn from_json_str(name: &str, text: &str, kappa_override: &[Rational]) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Num {
            Int(i64),
            Str(String),
        }
        #[derive(Deserialize)]
        struct Custom {
            dim: usize,
            roots: Vec<Vec<Num>>,
            #[serde(default)]
            multiplicities: Vec<Num>,
        }
        let conv = |n: &Num| -> Result<Rational> {
            match n {
                Num::Int(i) => Ok(int(*i)),
                Num::Str(s) => parse_rational(s),
            }
        };
        let c: Custom = serde_json::from_str(text)?;
        let roots = c
            .roots
            .iter()
            .map(|r| r.iter().map(conv).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let kappa = if kappa_override.is_empty() {
            c.multiplicities.iter().map(conv).collect::<Result<Vec<_>>>()?
        } else {
            kappa_override.to_vec()
        };
        Self::new(name, Family::Custom, c.dim, roots, &kappa)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn is_z2d(&self) -> bool {
        self.family == Family::Z2
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn positive_roots(&self) -> &[Vector] {
        &self.positive_roots
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn num_orbits(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbit_multiplicities(&self) -> &[Rational] {
        &self.multiplicities
    }

    /// kappa of the i-th positive root.
    pub fn kappa(&self, i: usize) -> &Rational {
        &self.multiplicities[self.orbit_of[i]]
    }

    pub fn reflection(&self, i: usize) -> &Reflection {
        &self.reflections[i]
    }

    /// Same roots, new multiplicities.
    pub fn with_kappa(&self, kappa: &[Rational]) -> Result<Self> {
        let multiplicities = assign_multiplicities(&self.orbits, &self.orbit_of, kappa)?;
        Ok(RootSystemData {
            multiplicities,
            ..self.clone()
        })
    }

    /// Same multiplicities, each root multiplied by `scale[i]`.
    pub fn with_scaled_roots(&self, scale: &[Rational]) -> Result<Self> {
        let roots: Vec<Vector> = self
            .positive_roots
            .iter()
            .zip(scale)
            .map(|(r, s)| r.iter().map(|c| c * s).collect())
            .collect();
        let per_root: Vec<Rational> = (0..roots.len()).map(|i| self.kappa(i).clone()).collect();
        Self::new(self.name.clone(), self.family.clone(), self.dim, roots, &per_root)
    }

    pub fn constants(&self) -> DunklConstants {
        let gamma_k: Rational = (0..self.positive_roots.len()).map(|i| self.kappa(i).clone()).sum();
        let lambda_k = &gamma_k + frac(self.dim as i64 - 2, 2);
        DunklConstants { gamma_k, lambda_k }
    }

    /// `h_k(x) = prod |<alpha,x>|^kappa_alpha` in floating point.
    pub fn weight_eval(&self, x: &[f64]) -> f64 {
        self.positive_roots
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let k = crate::rational::to_f64(self.kappa(i));
                if k == 0.0 {
                    return 1.0;
                }
                let s: f64 = a.iter().zip(x).map(|(ai, xi)| ai.to_f64().unwrap() * xi).sum();
                s.abs().powf(k)
            })
            .product()
    }

    pub fn describe_kappa(&self) -> String {
        self.multiplicities.iter().map(fmt_rational).collect::<Vec<_>>().join(",")
    }
}

fn parallel(a: &[Rational], b: &[Rational]) -> bool {
    let ab = dot(a, b);
    ab.clone() * ab == dot(a, a) * dot(b, b)
}

fn assign_multiplicities(orbits: &[Vec<usize>], orbit_of: &[usize], kappa: &[Rational]) -> Result<Vec<Rational>> {
    if let Some(k) = kappa.iter().find(|k| k.is_negative()) {
        return Err(DunklError::NegativeMultiplicity(fmt_rational(k)));
    }
    let n_roots = orbit_of.len();
    if kappa.len() == 1 {
        return Ok(vec![kappa[0].clone(); orbits.len()]);
    }
    if kappa.len() == orbits.len() {
        return Ok(kappa.to_vec());
    }
    if kappa.len() == n_roots {
        let mut out = Vec::with_capacity(orbits.len());
        for (k, orbit) in orbits.iter().enumerate() {
            let v = &kappa[orbit[0]];
            if orbit.iter().any(|&i| kappa[i] != *v) {
                return Err(DunklError::MultiplicityNotOrbitConstant(k));
            }
            out.push(v.clone());
        }
        return Ok(out);
    }
    Err(DunklError::MultiplicityCount {
        expected: orbits.len(),
        found: kappa.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational_list;

    fn kap(s: &str) -> Vec<Rational> {
        parse_rational_list(s).unwrap()
    }

    #[test]
    fn catalog_constants() {
        let z = RootSystemData::from_name("z2:d=1", &kap("1/2")).unwrap();
        assert_eq!(z.positive_roots(), &[vec![int(1)]]);
        assert_eq!(z.constants(), DunklConstants { gamma_k: frac(1, 2), lambda_k: int(0) });

        let b = RootSystemData::from_name("b:d=2", &kap("1,2")).unwrap();
        assert_eq!(b.num_orbits(), 2);
        assert_eq!(b.orbits().iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 2]);
        assert_eq!(b.constants(), DunklConstants { gamma_k: int(6), lambda_k: int(6) });

        let z3 = RootSystemData::from_name("b:d=3", &kap("0")).unwrap();
        assert_eq!(z3.constants().lambda_k, frac(1, 2));

        let z2 = RootSystemData::from_name("z2:d=2", &kap("1,3/2")).unwrap();
        assert_eq!(z2.constants(), DunklConstants { gamma_k: frac(5, 2), lambda_k: frac(5, 2) });

        let a2 = RootSystemData::from_name("a:d=3", &kap("1")).unwrap();
        assert_eq!(a2.positive_roots().len(), 3);
        assert_eq!(a2.num_orbits(), 1);
        assert_eq!(a2.constants(), DunklConstants { gamma_k: int(3), lambda_k: frac(7, 2) });

        let d4 = RootSystemData::from_name("d:d=4", &kap("1")).unwrap();
        assert_eq!((d4.positive_roots().len(), d4.num_orbits()), (12, 1));
        let d2 = RootSystemData::from_name("d:d=2", &kap("1,2")).unwrap();
        assert_eq!(d2.num_orbits(), 2);
    }

    #[test]
    fn validation_errors() {
        let bad = vec![vec![int(1), int(0)], vec![int(0), int(1)], vec![int(1), int(1)]];
        assert!(matches!(
            RootSystemData::new("c", Family::Custom, 2, bad, &kap("1")),
            Err(DunklError::NotClosed { .. })
        ));
        let par = vec![vec![int(1), int(0)], vec![int(2), int(0)]];
        assert_eq!(
            RootSystemData::new("c", Family::Custom, 2, par, &kap("1")).unwrap_err(),
            DunklError::NotReduced(0, 1)
        );
        assert!(matches!(
            RootSystemData::from_name("b:d=2", &kap("-1/2,1")),
            Err(DunklError::NegativeMultiplicity(_))
        ));
        // per-root multiplicities that differ inside the long orbit of B2
        assert_eq!(
            RootSystemData::from_name("b:d=2", &kap("1,1,2,3")).unwrap_err(),
            DunklError::MultiplicityNotOrbitConstant(1)
        );
        assert!(matches!(
            RootSystemData::from_name("b:d=2", &kap("1,2,3")),
            Err(DunklError::MultiplicityCount { .. })
        ));
        assert!(RootSystemData::from_name("e:d=8", &kap("1")).is_err());
        assert!(RootSystemData::from_name("a:d=1", &kap("1")).is_err());
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(reflect(&[int(1)], &[int(3)]).unwrap(), vec![int(-3)]);
        let (a, b) = (frac(2, 7), int(-5));
        assert_eq!(reflect(&[int(1), int(-1)], &[a.clone(), b.clone()]).unwrap(), vec![b, a]);
        assert_eq!(reflect(&[int(0), int(0)], &[int(1), int(1)]), Err(DunklError::ZeroRoot));
    }

    #[test]
    fn closure_is_exhaustive_for_catalog() {
        for name in ["z2:d=3", "a:d=3", "a:d=4", "b:d=2", "b:d=3", "d:d=4"] {
            let rs = RootSystemData::from_name(name, &kap("1")).unwrap();
            let roots = rs.positive_roots();
            for a in roots {
                for b in roots {
                    let img = reflect(a, b).unwrap();
                    let neg: Vector = img.iter().map(|c| -c).collect();
                    assert!(roots.contains(&img) || roots.contains(&neg), "{name}");
                }
            }
        }
    }

    #[test]
    fn weight_function() {
        let z = RootSystemData::from_name("z2:d=1", &kap("2")).unwrap();
        assert_eq!(z.weight_eval(&[3.0]), 9.0);
        let free = RootSystemData::from_name("b:d=2", &kap("0")).unwrap();
        assert_eq!(free.weight_eval(&[0.3, -1.7]), 1.0);
        let a = RootSystemData::from_name("a:d=3", &kap("1/2")).unwrap();
        assert_eq!(a.weight_eval(&[1.0, 1.0, 2.0]), 0.0);
    }

    #[test]
    fn custom_json() {
        let json = r#"{"dim": 2, "roots": [[1, 0], [0, "1/2"]], "multiplicities": ["1/2", 3]}"#;
        let rs = RootSystemData::from_json_str("custom:x", json, &[]).unwrap();
        assert_eq!(rs.num_orbits(), 2);
        assert_eq!(rs.constants().gamma_k, frac(7, 2));
    }
}
