//! Fourier-series arithmetic on the unit circle.
//!
//! Everything downstream works on finitely supported Fourier coefficients:
//! the Dirichlet-to-Neumann multiplier Λ (|n|), the derivative D (n), the
//! Hilbert transform H (sign rule, +1 at n = 0), the square root Λ^{1/2}
//! (√|n|), pointwise multiplication (coefficient convolution), Sobolev norms
//! and sampling. Coefficients are the primary representation; uniform-grid
//! samples are a derived view.
//!
//! A series flagged `real` satisfies û_{-n} = conj(û_n) bitwise. Constructors
//! from real samples mirror the negative frequencies so the flag is exact;
//! JSON import symmetrizes within a 1e-12 tolerance (see [`crate::io`]).

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Sobolev exponent for [`FourierSeries::sobolev_norm`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SobolevIndex(pub f64);

impl SobolevIndex {
    pub fn new(s: f64) -> Result<Self> {
        if s.is_finite() {
            Ok(SobolevIndex(s))
        } else {
            Err(Error::Precondition(format!("Sobolev index must be finite, got {s}")))
        }
    }
}

impl From<f64> for SobolevIndex {
    fn from(s: f64) -> Self {
        SobolevIndex(s)
    }
}

/// Fourier multipliers used throughout: per-frequency scaling factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplier {
    /// |n| — Dirichlet-to-Neumann operator of the unit disk.
    Lambda,
    /// n — the derivative -i d/dθ.
    D,
    /// sign rule: +1 for n >= 0, -1 for n < 0.
    H,
    /// √|n|.
    SqrtLambda,
}

impl Multiplier {
    #[inline]
    pub fn factor(self, n: i64) -> f64 {
        match self {
            Multiplier::Lambda => (n.abs()) as f64,
            Multiplier::D => n as f64,
            Multiplier::H => {
                if n >= 0 {
                    1.0
                } else {
                    -1.0
                }
            }
            Multiplier::SqrtLambda => ((n.abs()) as f64).sqrt(),
        }
    }
}

/// A function on the circle as its finite list of Fourier coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierSeries {
    /// Coefficients for frequencies -band..=band, index 0 <-> frequency -band.
    coeffs: Vec<Complex64>,
    band: usize,
    real: bool,
}

impl FourierSeries {
    /// Builds a series from a dense coefficient vector of length `2*band+1`.
    pub fn new(coeffs: Vec<Complex64>, band: usize) -> Self {
        assert_eq!(coeffs.len(), 2 * band + 1, "coefficient vector length mismatch");
        let real = Self::check_real(&coeffs, band);
        FourierSeries { coeffs, band, real }
    }

    /// The zero function.
    pub fn zero() -> Self {
        FourierSeries { coeffs: vec![Complex64::new(0.0, 0.0)], band: 0, real: true }
    }

    /// The constant function `c`.
    pub fn constant(c: f64) -> Self {
        FourierSeries { coeffs: vec![Complex64::new(c, 0.0)], band: 0, real: true }
    }

    /// The basis exponential e^{inθ}.
    pub fn basis(n: i64) -> Self {
        let band = n.unsigned_abs() as usize;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * band + 1];
        coeffs[(n + band as i64) as usize] = Complex64::new(1.0, 0.0);
        let real = n == 0;
        FourierSeries { coeffs, band, real }
    }

    /// Builds from sparse (frequency, coefficient) pairs. Later pairs with the
    /// same frequency overwrite earlier ones.
    pub fn from_pairs(pairs: &[(i64, Complex64)]) -> Self {
        let band = pairs.iter().map(|(n, _)| n.unsigned_abs() as usize).max().unwrap_or(0);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * band + 1];
        for &(n, c) in pairs {
            coeffs[(n + band as i64) as usize] = c;
        }
        Self::new(coeffs, band)
    }

    fn check_real(coeffs: &[Complex64], band: usize) -> bool {
        for n in 0..=band {
            let pos = coeffs[band + n];
            let neg = coeffs[band - n];
            if neg.re != pos.re || neg.im != -pos.im {
                return false;
            }
        }
        true
    }

    pub fn band(&self) -> usize {
        self.band
    }

    pub fn is_real(&self) -> bool {
        self.real
    }

    /// Coefficient at frequency `n`; zero outside the band.
    #[inline]
    pub fn coeff(&self, n: i64) -> Complex64 {
        if n.unsigned_abs() as usize > self.band {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[(n + self.band as i64) as usize]
        }
    }

    /// Iterates (frequency, coefficient) over the band.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let band = self.band as i64;
        self.coeffs.iter().enumerate().map(move |(i, &c)| (i as i64 - band, c))
    }

    /// Total order on series used to pick a canonical operand order, so that
    /// `multiply(a, b)` and `multiply(b, a)` run the identical computation.
    fn canonical_le(a: &Self, b: &Self) -> bool {
        if a.band != b.band {
            return a.band < b.band;
        }
        for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
            match x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)) {
                std::cmp::Ordering::Less => return true,
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Equal => {}
            }
        }
        true
    }

    /// Pointwise product = coefficient convolution. Result band is the sum of
    /// the operand bands. Real × real mirrors the negative frequencies so the
    /// result is bitwise conjugate-symmetric.
    pub fn multiply(&self, other: &Self) -> Self {
        let (a, b) = if Self::canonical_le(self, other) { (self, other) } else { (other, self) };
        let band = a.band + b.band;
        let both_real = a.real && b.real;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * band + 1];
        let ka = a.band as i64;
        let kb = b.band as i64;
        let lo_n = if both_real { 1 } else { -(band as i64) };
        for n in lo_n..=(band as i64) {
            let jlo = (-ka).max(n - kb);
            let jhi = ka.min(n + kb);
            let mut acc = Complex64::new(0.0, 0.0);
            for j in jlo..=jhi {
                acc += a.coeff(j) * b.coeff(n - j);
            }
            coeffs[(n + band as i64) as usize] = acc;
        }
        if both_real {
            // Conjugate term pairs summed adjacently keep the mean bitwise
            // real; negative frequencies are mirrored.
            let mut acc = a.coeff(0) * b.coeff(0);
            for j in 1..=ka.min(kb) {
                acc += a.coeff(j) * b.coeff(-j) + a.coeff(-j) * b.coeff(j);
            }
            coeffs[band] = acc;
            for n in 1..=band {
                coeffs[band - n] = coeffs[band + n].conj();
            }
        }
        Self::new(coeffs, band)
    }

    /// k-fold pointwise power; `pow(0)` is the constant 1.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = FourierSeries::constant(1.0);
        for _ in 0..k {
            acc = acc.multiply(self);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let band = self.band.max(other.band);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * band + 1];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let n = i as i64 - band as i64;
            *c = self.coeff(n) + other.coeff(n);
        }
        Self::new(coeffs, band)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&x| c * x).collect(), self.band)
    }

    /// Applies one of the diagonal Fourier multipliers.
    pub fn apply_multiplier(&self, kind: Multiplier) -> Self {
        let band = self.band as i64;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| kind.factor(i as i64 - band) * c)
            .collect();
        Self::new(coeffs, self.band)
    }

    /// ‖u‖_{H^s} = √( Σ_n (1 + |n|^{2s}) |û_n|² ).
    ///
    /// Conventions at n = 0: the weight is 1 + 0^{2s} with 0^{2s} = 0 for
    /// s > 0 and 0^0 = 1 for s = 0. For s < 0 (permitted) the n = 0 weight is
    /// also taken to be 1, i.e. 0^{2s} := 0, which keeps the norm finite.
    pub fn sobolev_norm(&self, s: SobolevIndex) -> f64 {
        let s = s.0;
        let mut sum = 0.0;
        for (n, c) in self.iter() {
            let weight = if n == 0 {
                if s == 0.0 {
                    2.0
                } else {
                    1.0
                }
            } else {
                1.0 + ((n.abs() as f64).powf(2.0 * s))
            };
            sum += weight * c.norm_sqr();
        }
        sum.sqrt()
    }

    /// ‖(Λ - D)u‖ = 2 √( Σ_{k<0} k² |û_k|² ); zero iff `u` has no
    /// negative-frequency content, i.e. iff u extends holomorphically to the
    /// disk.
    pub fn holomorphy_defect(&self) -> f64 {
        let mut sum = 0.0;
        for (n, c) in self.iter() {
            if n < 0 {
                sum += (n * n) as f64 * c.norm_sqr();
            }
        }
        2.0 * sum.sqrt()
    }

    /// L² norm √( Σ |û_n|² ).
    pub fn l2_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Evaluates at the point z = e^{iθ} on the circle (|z| = 1 assumed).
    pub fn eval_at(&self, z: Complex64) -> Complex64 {
        // Horner on Σ_{j=0}^{2K} c_{j-K} z^j, then shift by z^{-K} = conj(z)^K.
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        let mut shift = Complex64::new(1.0, 0.0);
        let zc = z.conj();
        for _ in 0..self.band {
            shift *= zc;
        }
        acc * shift
    }

    pub fn eval(&self, theta: f64) -> Complex64 {
        self.eval_at(Complex64::new(theta.cos(), theta.sin()))
    }

    /// Values on the uniform grid θ_p = 2πp/P.
    pub fn sample(&self, p: usize) -> Vec<Complex64> {
        (0..p).map(|k| self.eval(2.0 * PI * k as f64 / p as f64)).collect()
    }

    /// Minimum of Re u over the uniform grid; used for positivity checks.
    pub fn min_on_grid(&self, p: usize) -> f64 {
        self.sample(p).iter().map(|v| v.re).fold(f64::INFINITY, f64::min)
    }

    fn check_grid(p: usize, band: usize) -> Result<()> {
        if p <= 2 * band {
            return Err(Error::Precondition(format!(
                "grid of {p} points aliases band {band}: need P > 2*band"
            )));
        }
        Ok(())
    }

    /// Direct O(P·K) transform of real samples on the uniform grid; exact on
    /// bandlimited inputs with P > 2*band. Negative frequencies are mirrored,
    /// so the result is real bitwise.
    pub fn from_real_samples(values: &[f64], band: usize) -> Result<Self> {
        let p = values.len();
        Self::check_grid(p, band)?;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * band + 1];
        for n in 0..=band {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, &v) in values.iter().enumerate() {
                let phase = -2.0 * PI * (n as f64) * (k as f64) / (p as f64);
                acc += v * Complex64::new(phase.cos(), phase.sin());
            }
            acc /= p as f64;
            coeffs[band + n] = acc;
            coeffs[band - n] = acc.conj();
        }
        Ok(Self::new(coeffs, band))
    }

    /// Direct transform of complex samples.
    pub fn from_complex_samples(values: &[Complex64], band: usize) -> Result<Self> {
        let p = values.len();
        Self::check_grid(p, band)?;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * band + 1];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let n = i as i64 - band as i64;
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, &v) in values.iter().enumerate() {
                let phase = -2.0 * PI * (n as f64) * (k as f64) / (p as f64);
                acc += v * Complex64::new(phase.cos(), phase.sin());
            }
            *c = acc / p as f64;
        }
        Ok(Self::new(coeffs, band))
    }

    /// Restricts to |n| <= band; returns the series and the L² energy of the
    /// discarded tail.
    pub fn truncate(&self, band: usize) -> (Self, f64) {
        if band >= self.band {
            let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * band + 1];
            for (n, c) in self.iter() {
                coeffs[(n + band as i64) as usize] = c;
            }
            return (Self::new(coeffs, band), 0.0);
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * band + 1];
        let mut tail = 0.0;
        for (n, c) in self.iter() {
            if n.unsigned_abs() as usize <= band {
                coeffs[(n + band as i64) as usize] = c;
            } else {
                tail += c.norm_sqr();
            }
        }
        (Self::new(coeffs, band), tail.sqrt())
    }

    /// The rotated function θ ↦ u(θ + φ), i.e. coefficients û_n e^{inφ}.
    pub fn rotate(&self, phi: f64) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * self.band + 1];
        for n in 0..=self.band {
            let ph = phi * n as f64;
            let w = Complex64::new(ph.cos(), ph.sin());
            coeffs[self.band + n] = self.coeff(n as i64) * w;
            coeffs[self.band - n] = self.coeff(-(n as i64)) * w.conj();
        }
        Self::new(coeffs, self.band)
    }
}
