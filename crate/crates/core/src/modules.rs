//! Finite graded F2-modules with a Steenrod action and optional cup products,
//! modelling reduced mod-2 cohomology of spheres, projective spaces, wedges
//! and suspensions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::adem::{adem_rewrite, AdemElement, SqWord};
use crate::error::{Error, Result};
use crate::f2::{binom_mod2, FormalSum};
use crate::matrix::F2Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub id: String,
    pub degree: u32,
}

/// One entry of the product table; `left ⌣ right = value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub value: Vec<String>,
}

/// On-disk form of a module. Maps are ordered so output is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub name: String,
    #[serde(default)]
    pub unit: bool,
    pub top_degree: u32,
    pub generators: Vec<Generator>,
    #[serde(default)]
    pub sq: BTreeMap<String, BTreeMap<u32, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub products: Option<Vec<ProductEntry>>,
}

type Sum = FormalSum<String>;

/// A finite graded module over the Steenrod algebra.
///
/// Only positive degrees are stored; `unit` records whether the modelled
/// space has a degree-zero unit. `Sq^0` is never stored. A missing entry in
/// the square table or product table means zero. When `products` is `None`
/// the cup-product axioms are not checked.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedModule {
    name: String,
    unit: bool,
    top_degree: u32,
    generators: Vec<Generator>,
    degrees: BTreeMap<String, u32>,
    sq: BTreeMap<(String, u32), Sum>,
    products: Option<BTreeMap<(String, String), Sum>>,
}

/// A homogeneous class: a sum of generators of one degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModuleElement {
    pub degree: u32,
    pub sum: Sum,
}

impl ModuleElement {
    pub fn zero(degree: u32) -> Self {
        ModuleElement {
            degree,
            sum: Sum::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sum.is_zero()
    }

    pub fn sum(&self, other: &ModuleElement) -> ModuleElement {
        ModuleElement {
            degree: self.degree,
            sum: self.sum.sum(&other.sum),
        }
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let ids: Vec<&str> = self.sum.iter().map(String::as_str).collect();
        f.write_str(&ids.join(" + "))
    }
}

fn ordered_pair(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

impl GradedModule {
    /// Builds a module, checking that every referenced id exists. Degree
    /// consistency is not enforced here; [`verify_axioms`] reports it.
    pub fn from_file(file: ModuleFile) -> Result<Self> {
        let mut degrees = BTreeMap::new();
        for g in &file.generators {
            if g.degree == 0 {
                return Err(Error::InvalidModule(format!(
                    "generator `{}` has degree 0",
                    g.id
                )));
            }
            if degrees.insert(g.id.clone(), g.degree).is_some() {
                return Err(Error::InvalidModule(format!(
                    "duplicate generator `{}`",
                    g.id
                )));
            }
        }
        let check = |id: &str| -> Result<()> {
            if degrees.contains_key(id) {
                Ok(())
            } else {
                Err(Error::InvalidModule(format!("unknown generator `{id}`")))
            }
        };
        let mut sq = BTreeMap::new();
        for (g, row) in &file.sq {
            check(g)?;
            for (&i, ids) in row {
                if i == 0 {
                    return Err(Error::InvalidModule(format!("Sq0 entry for `{g}`")));
                }
                ids.iter().try_for_each(|id| check(id))?;
                let value: Sum = ids.iter().cloned().collect();
                if !value.is_zero() {
                    sq.insert((g.clone(), i), value);
                }
            }
        }
        let products = match &file.products {
            None => None,
            Some(entries) => {
                let mut table = BTreeMap::new();
                for e in entries {
                    check(&e.left)?;
                    check(&e.right)?;
                    e.value.iter().try_for_each(|id| check(id))?;
                    let value: Sum = e.value.iter().cloned().collect();
                    let key = ordered_pair(&e.left, &e.right);
                    if table.insert(key, value).is_some() {
                        return Err(Error::InvalidModule(format!(
                            "duplicate product `{}`*`{}`",
                            e.left, e.right
                        )));
                    }
                }
                table.retain(|_, v: &mut Sum| !v.is_zero());
                Some(table)
            }
        };
        Ok(GradedModule {
            name: file.name,
            unit: file.unit,
            top_degree: file.top_degree,
            generators: file.generators,
            degrees,
            sq,
            products,
        })
    }

    pub fn to_file(&self) -> ModuleFile {
        let mut sq: BTreeMap<String, BTreeMap<u32, Vec<String>>> = BTreeMap::new();
        for ((g, i), v) in &self.sq {
            sq.entry(g.clone())
                .or_default()
                .insert(*i, v.iter().cloned().collect());
        }
        ModuleFile {
            name: self.name.clone(),
            unit: self.unit,
            top_degree: self.top_degree,
            generators: self.generators.clone(),
            sq,
            products: self.products.as_ref().map(|t| {
                t.iter()
                    .map(|((l, r), v)| ProductEntry {
                        left: l.clone(),
                        right: r.clone(),
                        value: v.iter().cloned().collect(),
                    })
                    .collect()
            }),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ModuleFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidModule(e.to_string()))?;
        Self::from_file(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("module files always serialize")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn has_unit(&self) -> bool {
        self.unit
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn has_products(&self) -> bool {
        self.products.is_some()
    }

    pub fn degree_of(&self, id: &str) -> Option<u32> {
        self.degrees.get(id).copied()
    }

    /// Generator ids in degree `d`, sorted.
    pub fn basis(&self, d: u32) -> Vec<&str> {
        let mut ids: Vec<&str> = self
            .generators
            .iter()
            .filter(|g| g.degree == d)
            .map(|g| g.id.as_str())
            .collect();
        ids.sort();
        ids
    }

    pub fn dimension(&self, d: u32) -> usize {
        self.generators.iter().filter(|g| g.degree == d).count()
    }

    pub fn element(&self, ids: &[&str]) -> Result<ModuleElement> {
        let mut degree = None;
        let mut sum = Sum::zero();
        for id in ids {
            let d = self
                .degree_of(id)
                .ok_or_else(|| Error::InvalidModule(format!("unknown generator `{id}`")))?;
            if *degree.get_or_insert(d) != d {
                return Err(Error::Inhomogeneous);
            }
            sum.toggle(id.to_string());
        }
        Ok(ModuleElement {
            degree: degree.unwrap_or(0),
            sum,
        })
    }

    pub fn generator(&self, id: &str) -> Result<ModuleElement> {
        self.element(&[id])
    }

    /// The stored value of `Sq^i` on a generator, ignoring instability.
    fn table(&self, id: &str, i: u32) -> Option<&Sum> {
        self.sq.get(&(id.to_string(), i))
    }

    /// `Sq^i(x)`: identity for `i = 0`, zero when `i` exceeds the degree of
    /// `x` or the result would lie above the top degree.
    pub fn sq(&self, i: u32, x: &ModuleElement) -> ModuleElement {
        if i == 0 {
            return x.clone();
        }
        let degree = x.degree + i;
        if i > x.degree || degree > self.top_degree {
            return ModuleElement::zero(degree);
        }
        let mut sum = Sum::zero();
        for g in &x.sum {
            if let Some(v) = self.table(g, i) {
                sum += v;
            }
        }
        ModuleElement { degree, sum }
    }

    pub fn act_word(&self, w: &SqWord, x: &ModuleElement) -> ModuleElement {
        w.exponents()
            .iter()
            .rev()
            .fold(x.clone(), |acc, &i| self.sq(i, &acc))
    }

    /// Cup product, bilinear over the product table; zero when products are
    /// undefined or above the top degree.
    pub fn cup(&self, x: &ModuleElement, y: &ModuleElement) -> ModuleElement {
        let degree = x.degree + y.degree;
        let mut sum = Sum::zero();
        if let Some(table) = &self.products {
            if degree <= self.top_degree {
                for a in &x.sum {
                    for b in &y.sum {
                        if let Some(v) = table.get(&ordered_pair(a, b)) {
                            sum += v;
                        }
                    }
                }
            }
        }
        ModuleElement { degree, sum }
    }

    pub fn renamed(&self, name: impl Into<String>) -> GradedModule {
        GradedModule {
            name: name.into(),
            ..self.clone()
        }
    }

    fn map_ids(&self, f: impl Fn(&str) -> String) -> GradedModule {
        let map_sum = |s: &Sum| -> Sum { s.iter().map(|id| f(id)).collect() };
        GradedModule {
            name: self.name.clone(),
            unit: self.unit,
            top_degree: self.top_degree,
            generators: self
                .generators
                .iter()
                .map(|g| Generator {
                    id: f(&g.id),
                    degree: g.degree,
                })
                .collect(),
            degrees: self.degrees.iter().map(|(k, v)| (f(k), *v)).collect(),
            sq: self
                .sq
                .iter()
                .map(|((g, i), v)| ((f(g), *i), map_sum(v)))
                .collect(),
            products: self.products.as_ref().map(|t| {
                t.iter()
                    .map(|((a, b), v)| (ordered_pair(&f(a), &f(b)), map_sum(v)))
                    .collect()
            }),
        }
    }

    /// Same structure up to generator naming and module name, compared by
    /// the canonical form obtained by sorting generators.
    pub fn isomorphic_by_position(&self, other: &GradedModule) -> bool {
        fn canon(m: &GradedModule) -> GradedModule {
            let mut gens = m.generators.clone();
            gens.sort_by(|a, b| (a.degree, &a.id).cmp(&(b.degree, &b.id)));
            let index: BTreeMap<String, String> = gens
                .iter()
                .enumerate()
                .map(|(k, g)| (g.id.clone(), format!("g{k:04}")))
                .collect();
            let mut c = m.map_ids(|id| index[id].clone());
            c.generators.sort_by(|a, b| a.id.cmp(&b.id));
            c.name = String::new();
            c
        }
        canon(self) == canon(other)
    }
}

impl fmt::Debug for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedModule({})", self.to_json())
    }
}

fn module(
    name: String,
    top_degree: u32,
    generators: Vec<Generator>,
    sq: BTreeMap<(String, u32), Sum>,
    products: Option<BTreeMap<(String, String), Sum>>,
) -> GradedModule {
    let degrees = generators
        .iter()
        .map(|g| (g.id.clone(), g.degree))
        .collect();
    GradedModule {
        name,
        unit: true,
        top_degree,
        generators,
        degrees,
        sq,
        products,
    }
}

/// The one-point space: nothing in positive degrees.
pub fn point() -> GradedModule {
    module(
        "pt".into(),
        0,
        Vec::new(),
        BTreeMap::new(),
        Some(BTreeMap::new()),
    )
}

/// `S^n`: one generator `x<n>`, no squares, no products.
pub fn sphere(n: u32) -> GradedModule {
    assert!(n >= 1, "sphere dimension must be positive");
    module(
        format!("s{n}"),
        n,
        vec![Generator {
            id: format!("x{n}"),
            degree: n,
        }],
        BTreeMap::new(),
        Some(BTreeMap::new()),
    )
}

/// Truncated polynomial algebra on one generator of degree `step`, with
/// `Sq^(step*i)(x^k) = C(k, i) x^(k+i)` and all other squares zero.
fn truncated_polynomial(name: String, prefix: &str, step: u32, n: u32) -> GradedModule {
    let id = |k: u32| format!("{prefix}^{k}");
    let generators = (1..=n)
        .map(|k| Generator {
            id: id(k),
            degree: step * k,
        })
        .collect();
    let mut sq = BTreeMap::new();
    let mut products = BTreeMap::new();
    for k in 1..=n {
        for i in 1..=k.min(n - k) {
            if binom_mod2(k as u64, i as u64).is_one() {
                sq.insert((id(k), step * i), Sum::single(id(k + i)));
            }
        }
        for l in k..=n - k {
            products.insert((id(k), id(l)), Sum::single(id(k + l)));
        }
    }
    module(name, step * n, generators, sq, Some(products))
}

/// `RP^n`: generators `t^1 .. t^n`.
pub fn real_proj(n: u32) -> GradedModule {
    truncated_polynomial(format!("rp{n}"), "t", 1, n)
}

/// `CP^n`: generators `x^1 .. x^n` in degrees `2 .. 2n`, with `Sq^2 x = x^2`
/// and `Sq^1 x = 0`.
pub fn complex_proj(n: u32) -> GradedModule {
    truncated_polynomial(format!("cp{n}"), "x", 2, n)
}

/// Degree shift by one with the same square table; all products of
/// positive-degree classes vanish.
pub fn suspend(m: &GradedModule) -> GradedModule {
    let mut s = m.map_ids(|id| format!("s.{id}"));
    for g in &mut s.generators {
        g.degree += 1;
    }
    for d in s.degrees.values_mut() {
        *d += 1;
    }
    s.products = Some(BTreeMap::new());
    s.top_degree = m.top_degree + 1;
    s.name = format!("susp({})", m.name);
    s
}

/// One-point union. Cross products vanish. If any generator id occurs on
/// both sides, every id is prefixed with `l.` or `r.`.
pub fn wedge(a: &GradedModule, b: &GradedModule) -> GradedModule {
    let collide = a.degrees.keys().any(|id| b.degrees.contains_key(id));
    let (a, b) = if collide {
        (
            a.map_ids(|id| format!("l.{id}")),
            b.map_ids(|id| format!("r.{id}")),
        )
    } else {
        (a.clone(), b.clone())
    };
    let mut generators = a.generators.clone();
    generators.extend(b.generators.iter().cloned());
    let mut sq = a.sq.clone();
    sq.extend(b.sq.clone());
    let products = match (&a.products, &b.products) {
        (Some(p), Some(q)) => {
            let mut t = p.clone();
            t.extend(q.clone());
            Some(t)
        }
        _ => None,
    };
    let mut w = module(
        format!("wedge({},{})", a.name, b.name),
        a.top_degree.max(b.top_degree),
        generators,
        sq,
        products,
    );
    w.unit = a.unit || b.unit;
    w
}

/// `rp<n>` with `Sq^1(t^1)` overwritten to `t^1`; fails the axioms.
pub fn corrupted_real_proj(n: u32) -> GradedModule {
    assert!(n >= 1);
    let mut m = real_proj(n);
    m.sq.insert(("t^1".into(), 1), Sum::single("t^1".into()));
    m.name = format!("corrupt-rp{n}");
    m
}

/// Parses the constructor grammar
/// `pt | s<n> | rp<n> | cp<n> | wedge(<m>,<m>) | susp(<m>)`.
pub fn builtin(source: &str) -> Result<GradedModule> {
    struct P<'a> {
        s: &'a str,
        pos: usize,
        full: &'a str,
    }
    impl P<'_> {
        fn skip_ws(&mut self) {
            while self.s[self.pos..].starts_with(' ') {
                self.pos += 1;
            }
        }
        fn eat(&mut self, tok: &str) -> bool {
            self.skip_ws();
            if self.s[self.pos..].starts_with(tok) {
                self.pos += tok.len();
                true
            } else {
                false
            }
        }
        fn expect(&mut self, tok: &str) -> Result<()> {
            if self.eat(tok) {
                Ok(())
            } else {
                Err(Error::UnknownModule(self.full.to_string()))
            }
        }
        fn number(&mut self) -> Result<u32> {
            let digits: String = self.s[self.pos..]
                .chars()
                .take_while(char::is_ascii_digit)
                .collect();
            self.pos += digits.len();
            digits
                .parse()
                .map_err(|_| Error::UnknownModule(self.full.to_string()))
        }
        fn module(&mut self) -> Result<GradedModule> {
            if self.eat("wedge(") {
                let a = self.module()?;
                self.expect(",")?;
                let b = self.module()?;
                self.expect(")")?;
                Ok(wedge(&a, &b))
            } else if self.eat("susp(") {
                let a = self.module()?;
                self.expect(")")?;
                Ok(suspend(&a))
            } else if self.eat("pt") {
                Ok(point())
            } else if self.eat("rp") {
                Ok(real_proj(self.number()?))
            } else if self.eat("cp") {
                Ok(complex_proj(self.number()?))
            } else if self.eat("s") {
                match self.number()? {
                    0 => Err(Error::UnknownModule(self.full.to_string())),
                    n => Ok(sphere(n)),
                }
            } else {
                Err(Error::UnknownModule(self.full.to_string()))
            }
        }
    }
    let mut p = P {
        s: source,
        pos: 0,
        full: source,
    };
    let m = p.module()?;
    p.skip_ws();
    if p.pos != source.len() {
        return Err(Error::UnknownModule(source.to_string()));
    }
    Ok(m)
}

/// Action of a homogeneous element, right to left on each word.
pub fn act_on_module(
    m: &GradedModule,
    e: &AdemElement,
    x: &ModuleElement,
) -> Result<ModuleElement> {
    let degree = match e.homogeneous_degree() {
        Some(d) => x.degree + d,
        None if e.is_zero() => x.degree,
        None => return Err(Error::Inhomogeneous),
    };
    let mut out = ModuleElement::zero(degree);
    for w in e.words() {
        out.sum += &m.act_word(w, x).sum;
    }
    Ok(out)
}

/// Matrix of `Sq^i` from degree `d` to degree `d + i`; column `c` is the
/// image of the `c`-th basis generator of degree `d`.
pub fn sq_matrix(m: &GradedModule, i: u32, d: u32) -> F2Matrix {
    let source = m.basis(d);
    let target = m.basis(d + i);
    let mut mat = F2Matrix::zeros(target.len(), source.len());
    for (c, g) in source.iter().enumerate() {
        let img = m.sq(i, &m.generator(g).expect("basis ids exist"));
        for (r, h) in target.iter().enumerate() {
            if img.sum.contains(&h.to_string()) {
                mat.set(r, c, crate::f2::F2::ONE);
            }
        }
    }
    mat
}

/// Matrix of the squaring map `x ↦ x ⌣ x` from degree `d` to `2d`.
pub fn cup_square_matrix(m: &GradedModule, d: u32) -> F2Matrix {
    let source = m.basis(d);
    let target = m.basis(2 * d);
    let mut mat = F2Matrix::zeros(target.len(), source.len());
    for (c, g) in source.iter().enumerate() {
        let x = m.generator(g).expect("basis ids exist");
        let img = m.cup(&x, &x);
        for (r, h) in target.iter().enumerate() {
            if img.sum.contains(&h.to_string()) {
                mat.set(r, c, crate::f2::F2::ONE);
            }
        }
    }
    mat
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Axiom {
    /// Degrees of stored table entries.
    Table,
    I1,
    I2,
    I3,
    Cartan,
    Additivity,
    Adem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub axiom: Axiom,
    pub instance: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub module: String,
    pub max_degree: u32,
    /// Instances checked per axiom.
    pub checked: BTreeMap<String, usize>,
    pub failures: Vec<Failure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed_axioms(&self) -> BTreeSet<Axiom> {
        self.failures.iter().map(|f| f.axiom).collect()
    }
}

struct Checker {
    checked: BTreeMap<String, usize>,
    failures: Vec<Failure>,
}

impl Checker {
    fn check(
        &mut self,
        axiom: Axiom,
        instance: impl FnOnce() -> String,
        expected: &ModuleElement,
        actual: &ModuleElement,
    ) {
        *self.checked.entry(format!("{axiom:?}")).or_default() += 1;
        if expected.sum != actual.sum {
            self.failures.push(Failure {
                axiom,
                instance: instance(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn fail(&mut self, axiom: Axiom, instance: String, expected: String, actual: String) {
        *self.checked.entry(format!("{axiom:?}")).or_default() += 1;
        self.failures.push(Failure {
            axiom,
            instance,
            expected,
            actual,
        });
    }

    fn pass(&mut self, axiom: Axiom) {
        *self.checked.entry(format!("{axiom:?}")).or_default() += 1;
    }
}

/// Checks the Steenrod-square axioms on all generators and generator pairs
/// of degree at most `max_degree`. Failures are returned as data.
pub fn verify_axioms(m: &GradedModule, max_degree: u32) -> AxiomReport {
    let mut ck = Checker {
        checked: BTreeMap::new(),
        failures: Vec::new(),
    };
    let gens: Vec<&Generator> = m
        .generators
        .iter()
        .filter(|g| g.degree <= max_degree)
        .collect();

    // stored tables: degrees and instability
    for ((g, i), v) in &m.sq {
        let dg = m.degrees[g];
        if *i > dg {
            ck.fail(
                Axiom::I2,
                format!("Sq{i}({g}) stored"),
                "0".into(),
                v.iter().cloned().collect::<Vec<_>>().join(" + "),
            );
            continue;
        }
        let bad: Vec<&String> = v.iter().filter(|h| m.degrees[*h] != dg + i).collect();
        if bad.is_empty() {
            ck.pass(Axiom::Table);
        } else {
            ck.fail(
                Axiom::Table,
                format!("Sq{i}({g})"),
                format!("generators of degree {}", dg + i),
                bad.iter()
                    .map(|h| format!("{h} (degree {})", m.degrees[*h]))
                    .collect::<Vec<_>>()
                    .join(", "),
            );
        }
    }
    if let Some(table) = &m.products {
        for ((a, b), v) in table {
            let d = m.degrees[a] + m.degrees[b];
            if v.iter().all(|h| m.degrees[h] == d) {
                ck.pass(Axiom::Table);
            } else {
                ck.fail(
                    Axiom::Table,
                    format!("{a}*{b}"),
                    format!("generators of degree {d}"),
                    format!("{v:?}"),
                );
            }
        }
    }
    for g in &m.generators {
        if g.degree > m.top_degree {
            ck.fail(
                Axiom::Table,
                format!("{} above top degree", g.id),
                format!("degree <= {}", m.top_degree),
                g.degree.to_string(),
            );
        }
    }

    for g in &gens {
        let x = m.generator(&g.id).expect("listed");
        // (I1)
        ck.check(Axiom::I1, || format!("Sq0({})", g.id), &x, &m.sq(0, &x));
        ck.check(
            Axiom::I1,
            || format!("1({})", g.id),
            &x,
            &m.act_word(&SqWord::identity(), &x),
        );
        // (I2)
        for i in g.degree + 1..=max_degree {
            ck.check(
                Axiom::I2,
                || format!("Sq{i}({})", g.id),
                &ModuleElement::zero(g.degree + i),
                &m.sq(i, &x),
            );
        }
        // (I3)
        if m.has_products() && 2 * g.degree <= max_degree {
            ck.check(
                Axiom::I3,
                || format!("Sq{0}({1}) = {1}*{1}", g.degree, g.id),
                &m.cup(&x, &x),
                &m.sq(g.degree, &x),
            );
        }
        // (A)
        for k in 1..=max_degree {
            for n in 1..(2 * k).min(max_degree.saturating_sub(k) + 1) {
                let lhs = m.act_word(&SqWord::from([n, k]), &x);
                let rhs_el = adem_rewrite(n, k).expect("n < 2k");
                let rhs = act_on_module(m, &rhs_el, &x).expect("homogeneous");
                ck.check(Axiom::Adem, || format!("Sq{n} Sq{k}({})", g.id), &rhs, &lhs);
            }
        }
    }

    // (C)
    if m.has_products() {
        for (p, g) in gens.iter().enumerate() {
            for h in &gens[p..] {
                let base = g.degree + h.degree;
                if base > max_degree {
                    continue;
                }
                let x = m.generator(&g.id).expect("listed");
                let y = m.generator(&h.id).expect("listed");
                let xy = m.cup(&x, &y);
                for n in 0..=max_degree - base {
                    let mut rhs = ModuleElement::zero(base + n);
                    for i in 0..=n {
                        rhs.sum += &m.cup(&m.sq(i, &x), &m.sq(n - i, &y)).sum;
                    }
                    ck.check(
                        Axiom::Cartan,
                        || format!("Sq{n}({}*{})", g.id, h.id),
                        &rhs,
                        &m.sq(n, &xy),
                    );
                }
            }
        }
    }

    // additivity on pseudo-random sums
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for d in 1..=max_degree {
        let basis = m.basis(d);
        if basis.is_empty() {
            continue;
        }
        for _ in 0..4 {
            let mut pick = || -> ModuleElement {
                let ids: Vec<&str> = basis
                    .iter()
                    .copied()
                    .filter(|_| rng.gen_bool(0.5))
                    .collect();
                ModuleElement {
                    degree: d,
                    sum: ids.iter().map(|s| s.to_string()).collect(),
                }
            };
            let (x, y) = (pick(), pick());
            for n in 0..=max_degree - d {
                let expected = m.sq(n, &x).sum(&m.sq(n, &y));
                ck.check(
                    Axiom::Additivity,
                    || format!("Sq{n}({x} + {y})"),
                    &expected,
                    &m.sq(n, &x.sum(&y)),
                );
            }
        }
    }

    AxiomReport {
        module: m.name.clone(),
        max_degree,
        checked: ck.checked,
        failures: ck.failures,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareSummary {
    pub module: String,
    pub source_degree: u32,
    pub target_degree: u32,
    pub source_dim: usize,
    pub target_dim: usize,
    pub matrix: F2Matrix,
    pub rank: usize,
}

fn summarize(m: &GradedModule, i: u32, d: u32, matrix: F2Matrix) -> SquareSummary {
    SquareSummary {
        module: m.name.clone(),
        source_degree: d,
        target_degree: d + i,
        source_dim: m.dimension(d),
        target_dim: m.dimension(d + i),
        rank: matrix.rank(),
        matrix,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pi4Report {
    /// `Sq^2 : H^3 -> H^5` on the suspension of `CP^2`.
    pub suspended_cp2: SquareSummary,
    /// `Sq^2 : H^3 -> H^5` on `S^5 ∨ S^3`.
    pub wedge_s5_s3: SquareSummary,
    /// `x ↦ x⌣x : H^2 -> H^4` on `CP^2` and on `S^4 ∨ S^2`.
    pub cup_squares: Vec<SquareSummary>,
    /// `Sq^2` on `Σ(S^4 ∨ S^2)`, which models the same space as `S^5 ∨ S^3`.
    pub suspended_wedge_s4_s2: SquareSummary,
    pub distinct: bool,
    pub conclusion: Vec<String>,
}

/// Distinguishes `ΣCP^2` from `S^5 ∨ S^3` by `Sq^2 : H^3 -> H^5`.
pub fn distinguish_theorem37() -> Pi4Report {
    let cp2 = complex_proj(2);
    let scp2 = suspend(&cp2);
    let w53 = wedge(&sphere(5), &sphere(3));
    let w42 = wedge(&sphere(4), &sphere(2));
    let sw42 = suspend(&w42);
    let suspended_cp2 = summarize(&scp2, 2, 3, sq_matrix(&scp2, 2, 3));
    let wedge_s5_s3 = summarize(&w53, 2, 3, sq_matrix(&w53, 2, 3));
    let suspended_wedge_s4_s2 = summarize(&sw42, 2, 3, sq_matrix(&sw42, 2, 3));
    let cup_squares = vec![
        summarize(&cp2, 2, 2, cup_square_matrix(&cp2, 2)),
        summarize(&w42, 2, 2, cup_square_matrix(&w42, 2)),
    ];
    let distinct = suspended_cp2.rank != wedge_s5_s3.rank;
    let mut conclusion = vec![
        format!(
            "Sq2 : H3 -> H5 has rank {} on {}",
            suspended_cp2.rank, suspended_cp2.module
        ),
        format!(
            "Sq2 : H3 -> H5 has rank {} on {}",
            wedge_s5_s3.rank, wedge_s5_s3.module
        ),
    ];
    if distinct {
        conclusion.extend([
            "Steenrod squares are natural, so the two spaces are not homotopy equivalent: ΣCP² ≄ S⁵ ∨ S³".to_string(),
            "ΣCP² is the cofibre of Σh and S⁵ ∨ S³ the cofibre of the constant map S⁴ → S³, so Σh is not null-homotopic".to_string(),
            "π₄(S³) ≠ 0".to_string(),
        ]);
    } else {
        conclusion.push("the squares do not distinguish the two spaces".to_string());
    }
    Pi4Report {
        suspended_cp2,
        wedge_s5_s3,
        cup_squares,
        suspended_wedge_s4_s2,
        distinct,
        conclusion,
    }
}
