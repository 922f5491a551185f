//! Arithmetic in `L = GF(p^k)`, the smallest extension of `GF(q)` holding
//! every needed root of unity, and the multivariate discrete Fourier
//! transform over it.
//!
//! `L` is built as `GF(p)[x]/(f)` for a single monic irreducible `f` of
//! degree `k = e·m`, where `q = p^e` and `m` is the order of `q` modulo
//! `lcm(r1,…,rs)`. `GF(q)` is the subfield fixed by `x ↦ x^q`. Elements are
//! packed as base-`p` integers, coefficient of `x^i` in digit `i`.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::orbits::CodeShape;

/// An element of the extension field, packed as a base-`p` integer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf(pub u64);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Multiplication strategy, chosen by field size.
#[derive(Clone, Debug)]
enum MulTables {
    None,
    /// `exp[i] = g^i` for a primitive `g`, `log[exp[i]] = i`.
    LogExp {
        log: Vec<u32>,
        exp: Vec<u64>,
    },
}

fn to_digits(mut x: u64, p: u64, k: u32) -> Vec<u64> {
    let mut out = vec![0; k as usize];
    for d in out.iter_mut() {
        *d = x % p;
        x /= p;
    }
    out
}

/// Raw polynomial-quotient arithmetic over `GF(p)`, used both for the final
/// field and for candidate moduli during the irreducibility search.
#[derive(Clone, Debug)]
struct Ring {
    p: u64,
    k: u32,
    /// Lower coefficients of the monic modulus (`x^k` implicit).
    low: Vec<u64>,
    /// Packed modulus for the `p = 2` fast path, including `x^k`.
    packed2: u64,
}

impl Ring {
    fn new(p: u64, low: Vec<u64>) -> Self {
        let k = low.len() as u32;
        let packed2 = if p == 2 {
            low.iter()
                .enumerate()
                .fold(1u64 << k, |acc, (i, &c)| acc | (c << i))
        } else {
            0
        };
        Self { p, k, low, packed2 }
    }

    fn digits(&self, x: u64) -> Vec<u64> {
        to_digits(x, self.p, self.k)
    }

    fn pack(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.p == 2 {
            let k = self.k;
            let mut acc: u128 = 0;
            let mut b = b as u128;
            let mut a = a;
            while a != 0 {
                if a & 1 == 1 {
                    acc ^= b;
                }
                a >>= 1;
                b <<= 1;
            }
            for bit in (k..2 * k).rev() {
                if acc >> bit & 1 == 1 {
                    acc ^= (self.packed2 as u128) << (bit - k);
                }
            }
            return acc as u64;
        }
        let da = self.digits(a);
        let db = self.digits(b);
        let k = self.k as usize;
        let p = self.p;
        let mut prod = vec![0u64; 2 * k];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            // x^k ≡ −Σ low_i x^i
            for (i, &m) in self.low.iter().enumerate() {
                let sub = c * m % p;
                let slot = &mut prod[deg - k + i];
                *slot = (*slot + p - sub) % p;
            }
        }
        self.pack(&prod[..k])
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }
}

/// Polynomials over `GF(p)` as coefficient vectors, lowest degree first.
mod poly {
    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv(a: u64, p: u64) -> u64 {
        crate::arith::pow_mod(a, p - 2, p)
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let b = trim(b.to_vec());
        let mut a = trim(a.to_vec());
        let lead_inv = inv(*b.last().expect("nonzero divisor"), p);
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let c = a.last().unwrap() * lead_inv % p;
            for (i, &bi) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + p - c * bi % p) % p;
            }
            a = trim(a);
        }
        a
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }
}

/// Rabin's irreducibility test for the monic polynomial `x^k + low`.
fn is_irreducible(p: u64, low: &[u64]) -> bool {
    let k = low.len() as u32;
    if k == 1 {
        return true;
    }
    if low[0] == 0 {
        return false;
    }
    let ring = Ring::new(p, low.to_vec());
    // The class of x, packed.
    let x = p;
    let frob = |v: u64, times: u32| (0..times).fold(v, |acc, _| ring.pow(acc, p));
    if frob(x, k) != x {
        return false;
    }
    let mut full: Vec<u64> = low.to_vec();
    full.push(1);
    for l in arith::prime_factors(k as u64) {
        let h = frob(x, k / l as u32);
        let diff = ring.add(h, ring.neg(x));
        let g = poly::gcd(&full, &ring.digits(diff), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// The field `L` together with the chosen primitive roots `ᾱ`.
#[derive(Clone, Debug)]
pub struct FieldContext {
    shape: CodeShape,
    ext_degree: u32,
    ring: Ring,
    size: u64,
    tables: MulTables,
    alphas: Vec<Gf>,
    alpha_powers: Vec<Vec<Gf>>,
    base_elements: Vec<Gf>,
}

impl FieldContext {
    /// Largest accepted `|L|`.
    pub const MAX_FIELD_SIZE: u64 = 1 << 62;
    const TABLE_LIMIT: u64 = 1 << 16;

    pub fn new(shape: &CodeShape) -> Result<Self> {
        let p = shape.p();
        let ext_degree = shape.q_order() as u32;
        let k = shape.base_degree() * ext_degree;
        let size = (0..k).try_fold(1u64, |acc, _| {
            acc.checked_mul(p).filter(|&s| s <= Self::MAX_FIELD_SIZE)
        });
        let size = size.ok_or_else(|| {
            Error::Config(format!(
                "extension field GF({p}^{k}) exceeds the supported size"
            ))
        })?;

        // Smallest packed value first; the constant term is digit 0.
        let low = (0..size)
            .map(|c| to_digits(c, p, k))
            .find(|low| is_irreducible(p, low))
            .ok_or_else(|| Error::Internal(format!("no irreducible of degree {k}")))?;
        let ring = Ring::new(p, low);

        let order = size - 1;
        let order_primes = arith::prime_factors(order);
        let has_order = |x: u64, ord: u64, primes: &[u64]| -> bool {
            ring.pow(x, ord) == 1 && primes.iter().all(|&l| ring.pow(x, ord / l) != 1)
        };

        let tables = if size <= Self::TABLE_LIMIT && size > 2 {
            let g = (2..size)
                .find(|&g| has_order(g, order, &order_primes))
                .ok_or_else(|| Error::Internal("no primitive element".into()))?;
            let mut exp = Vec::with_capacity(order as usize);
            let mut log = vec![0u32; size as usize];
            let mut x = 1u64;
            for i in 0..order {
                exp.push(x);
                log[x as usize] = i as u32;
                x = ring.mul(x, g);
            }
            MulTables::LogExp { log, exp }
        } else {
            MulTables::None
        };

        let mut alphas = Vec::with_capacity(shape.rank());
        for &r in shape.dims() {
            let r = r as u64;
            let primes = arith::prime_factors(r);
            let alpha = (1..size)
                .map(|g| ring.pow(g, order / r))
                .find(|&a| has_order(a, r, &primes))
                .ok_or_else(|| Error::Internal(format!("no element of order {r}")))?;
            alphas.push(Gf(alpha));
        }

        let q = shape.q();
        let base_elements = if shape.base_degree() == 1 {
            (0..p).map(Gf).collect()
        } else {
            let g = (2..size)
                .find(|&g| has_order(g, order, &order_primes))
                .ok_or_else(|| Error::Internal("no primitive element".into()))?;
            let beta = ring.pow(g, order / (q - 1));
            let mut els = vec![Gf::ZERO];
            let mut x = 1;
            for _ in 0..q - 1 {
                els.push(Gf(x));
                x = ring.mul(x, beta);
            }
            els.sort();
            els
        };

        let mut ctx = Self {
            shape: shape.clone(),
            ext_degree,
            ring,
            size,
            tables,
            alphas,
            alpha_powers: Vec::new(),
            base_elements,
        };
        ctx.alpha_powers = ctx
            .alphas
            .iter()
            .zip(shape.dims())
            .map(|(&a, &r)| {
                let mut pw = Vec::with_capacity(r);
                let mut x = Gf::ONE;
                for _ in 0..r {
                    pw.push(x);
                    x = ctx.mul(x, a);
                }
                pw
            })
            .collect();
        Ok(ctx)
    }

    pub fn shape(&self) -> &CodeShape {
        &self.shape
    }

    pub fn characteristic(&self) -> u64 {
        self.ring.p
    }

    /// Degree `m` of `L` over `GF(q)`.
    pub fn ext_degree(&self) -> u32 {
        self.ext_degree
    }

    /// Degree of `L` over `GF(p)`.
    pub fn degree(&self) -> u32 {
        self.ring.k
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Coefficients of the monic modulus over `GF(p)`, lowest degree first.
    pub fn modulus(&self) -> Vec<u64> {
        let mut m = self.ring.low.clone();
        m.push(1);
        m
    }

    /// `ᾱ = (α_1,…,α_s)`, `α_i` of multiplicative order exactly `r_i`.
    pub fn alphas(&self) -> &[Gf] {
        &self.alphas
    }

    /// The elements of `GF(q)` inside `L`, sorted.
    pub fn base_field(&self) -> &[Gf] {
        &self.base_elements
    }

    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        Gf(self.ring.add(a.0, b.0))
    }

    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        Gf(self.ring.add(a.0, self.ring.neg(b.0)))
    }

    pub fn neg(&self, a: Gf) -> Gf {
        Gf(self.ring.neg(a.0))
    }

    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        match &self.tables {
            MulTables::LogExp { log, exp } => {
                if a.is_zero() || b.is_zero() {
                    return Gf::ZERO;
                }
                let order = exp.len();
                let i = log[a.0 as usize] as usize + log[b.0 as usize] as usize;
                Gf(exp[if i >= order { i - order } else { i }])
            }
            MulTables::None => Gf(self.ring.mul(a.0, b.0)),
        }
    }

    pub fn pow(&self, a: Gf, mut e: u64) -> Gf {
        let mut acc = Gf::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Gf) -> Result<Gf> {
        if a.is_zero() {
            return Err(Error::Domain("inverse of zero".into()));
        }
        Ok(self.pow(a, self.size - 2))
    }

    /// The image of the integer `n` in the prime field.
    pub fn from_int(&self, n: u64) -> Gf {
        Gf(n % self.ring.p)
    }

    pub fn in_base_field(&self, a: Gf) -> bool {
        self.base_elements.binary_search(&a).is_ok()
    }

    /// Uniform random element of `L`.
    pub fn random<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Gf {
        Gf(rng.gen_range(0..self.size))
    }

    fn check(&self, f: &PolyVector) -> Result<()> {
        if f.dims != self.shape.dims() {
            return Err(Error::Domain(format!(
                "vector dimensions {:?} do not match the field context {}",
                f.dims, self.shape
            )));
        }
        Ok(())
    }

    /// Applies `y_j = Σ_t x_t·w^{±t·j}` along every axis.
    fn transform(&self, f: &PolyVector, inverse: bool) -> Result<PolyVector> {
        self.check(f)?;
        let mut data = f.coeffs.clone();
        let dims = &f.dims;
        for (axis, &r) in dims.iter().enumerate() {
            let pw = &self.alpha_powers[axis];
            let outer: usize = dims[..axis].iter().product();
            let inner: usize = dims[axis + 1..].iter().product();
            let mut line = vec![Gf::ZERO; r];
            let scale = if inverse {
                self.inv(self.from_int(r as u64))?
            } else {
                Gf::ONE
            };
            for o in 0..outer {
                for i in 0..inner {
                    let at = |t: usize| (o * r + t) * inner + i;
                    for (t, slot) in line.iter_mut().enumerate() {
                        *slot = data[at(t)];
                    }
                    for j in 0..r {
                        let mut acc = Gf::ZERO;
                        for (t, &x) in line.iter().enumerate() {
                            if x.is_zero() {
                                continue;
                            }
                            let e = t * j % r;
                            let e = if inverse { (r - e) % r } else { e };
                            acc = self.add(acc, self.mul(x, pw[e]));
                        }
                        data[at(j)] = self.mul(acc, scale);
                    }
                }
            }
        }
        Ok(PolyVector {
            dims: dims.clone(),
            coeffs: data,
        })
    }

    /// Discrete Fourier transform: coefficient `j` of the result is
    /// `f(α_1^{j_1},…,α_s^{j_s})`.
    pub fn dft(&self, f: &PolyVector) -> Result<PolyVector> {
        self.transform(f, false)
    }

    pub fn inverse_dft(&self, v: &PolyVector) -> Result<PolyVector> {
        self.transform(v, true)
    }

    /// Product in `L[X1,…,Xs]/(X1^r1 − 1,…)` (multidimensional cyclic
    /// convolution).
    pub fn poly_mul(&self, f: &PolyVector, g: &PolyVector) -> Result<PolyVector> {
        self.check(f)?;
        self.check(g)?;
        let shape = &self.shape;
        let mut out = vec![Gf::ZERO; shape.len()];
        let tuples: Vec<Vec<usize>> = (0..shape.len())
            .map(|l| shape.coords(l).collect())
            .collect();
        for (a, &x) in f.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, &y) in g.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c: usize = tuples[a]
                    .iter()
                    .zip(&tuples[b])
                    .zip(shape.dims().iter().zip(shape.strides()))
                    .map(|((&i, &j), (&r, &st))| (i + j) % r * st)
                    .sum();
                out[c] = self.add(out[c], self.mul(x, y));
            }
        }
        Ok(PolyVector {
            dims: f.dims.clone(),
            coeffs: out,
        })
    }

    /// Coordinatewise product.
    pub fn star(&self, f: &PolyVector, g: &PolyVector) -> Result<PolyVector> {
        self.check(f)?;
        self.check(g)?;
        Ok(PolyVector {
            dims: f.dims.clone(),
            coeffs: f
                .coeffs
                .iter()
                .zip(&g.coeffs)
                .map(|(&a, &b)| self.mul(a, b))
                .collect(),
        })
    }

    /// A random vector over `L` whose entries are zero with probability
    /// `zero_prob`, otherwise uniform nonzero.
    pub fn random_vector<R: rand::Rng + ?Sized>(&self, rng: &mut R, zero_prob: f64) -> PolyVector {
        let coeffs = (0..self.shape.len())
            .map(|_| {
                if rng.gen_bool(zero_prob.clamp(0.0, 1.0)) {
                    Gf::ZERO
                } else {
                    Gf(rng.gen_range(1..self.size))
                }
            })
            .collect();
        PolyVector {
            dims: self.shape.dims().to_vec(),
            coeffs,
        }
    }
}

/// Coefficients of an element of `L(r1,…,rs)` (or of its transform),
/// indexed by `I` in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyVector {
    dims: Vec<usize>,
    coeffs: Vec<Gf>,
}

impl PolyVector {
    pub fn new(dims: impl Into<Vec<usize>>, coeffs: Vec<Gf>) -> Result<Self> {
        let dims = dims.into();
        if dims.iter().product::<usize>() != coeffs.len() {
            return Err(Error::Domain(
                "coefficient count does not match dimensions".into(),
            ));
        }
        Ok(Self { dims, coeffs })
    }

    pub fn zero(shape: &CodeShape) -> Self {
        Self {
            dims: shape.dims().to_vec(),
            coeffs: vec![Gf::ZERO; shape.len()],
        }
    }

    pub fn one(shape: &CodeShape) -> Self {
        let mut v = Self::zero(shape);
        v.coeffs[0] = Gf::ONE;
        v
    }

    /// The monomial `c·X^i`.
    pub fn monomial(shape: &CodeShape, lin: usize, c: Gf) -> Self {
        let mut v = Self::zero(shape);
        v.coeffs[lin] = c;
        v
    }

    /// The 0/1 vector of a membership mask.
    pub fn indicator(shape: &CodeShape, mask: &[bool]) -> Self {
        Self {
            dims: shape.dims().to_vec(),
            coeffs: mask
                .iter()
                .map(|&b| if b { Gf::ONE } else { Gf::ZERO })
                .collect(),
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn coeffs(&self) -> &[Gf] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Gf] {
        &mut self.coeffs
    }

    pub fn support(&self) -> Vec<bool> {
        self.coeffs.iter().map(|c| !c.is_zero()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// Number of nonzero coefficients.
pub fn weight(f: &PolyVector) -> usize {
    f.coeffs.iter().filter(|c| !c.is_zero()).count()
}
