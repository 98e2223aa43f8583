//! Traces of operator words in {L, H} against (LH)^{2m}.
//!
//! Here L = Λ^{1/2} a Λ^{1/2} for a real bandlimited symbol `a` and H is the
//! Hilbert transform. A word W = L^{j_1}H···L^{j_s}H of L-degree 2m and even
//! H-degree differs from (LH)^{2m} by a smoothing operator, so
//! Tr[W - (LH)^{2m}] is finite; the zeta-invariants are the special case
//! Z_m(a) = Tr[L^{2m} - (LH)^{2m}].
//!
//! Two facts make the trace an exact finite sum for bandlimited `a` (band K):
//!
//! * Path locality. The diagonal entry of W - (LH)^{2m} at frequency n is a
//!   sum over frequency paths of 2m steps, each step bounded by K, returning
//!   to n. For |n| > mK every such path keeps a constant sign, H contributes
//!   an even power of that sign to both words, and the entry vanishes. The
//!   trace is the sum over |n| <= mK, evaluated on truncated vectors with
//!   |frequency| <= N, N >= 2mK, with no truncation error.
//!
//! * Difference propagation. Subtracting two independently evaluated words
//!   loses the small trace to cancellation. Instead the evaluator propagates
//!   the difference vector d_t = (prefix of W)e_n - (prefix of reference)e_n
//!   directly: d_t = L H^{a_t} d_{t-1} ± 2 L P₋ w_{t-1}, where a_t is the
//!   H-parity of W before its t-th L factor, P₋ projects onto negative
//!   frequencies and w_t is the reference prefix. Source terms appear only
//!   where the two words disagree and only from negative-frequency content,
//!   so sign-pure contributions cancel exactly, not approximately. For a
//!   symbol of band <= 1, Z_m comes out as an exact floating-point zero.

use crate::error::{Error, Result};
use crate::fourier::FourierSeries;
use num_complex::Complex64;
use rayon::prelude::*;

/// Largest φ order accepted; the composition count C(m-1, l-1) blows up past
/// this.
pub const MAX_PHI_ORDER: u32 = 8;

/// A word W = L^{j_1}H L^{j_2}H ··· L^{j_s}H in normal form: the list of
/// L-run lengths between consecutive H factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorWord {
    exponents: Vec<u32>,
    m: u32,
}

impl OperatorWord {
    /// Validates that the L-degree j_1+···+j_s is even and positive and that
    /// the H-degree s is even, as required for comparison against (LH)^{2m}.
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        let degree: u32 = exponents.iter().sum();
        if exponents.is_empty() || degree == 0 || degree % 2 != 0 {
            return Err(Error::Precondition(format!(
                "word L-degree must be a positive even integer, got {degree}"
            )));
        }
        if exponents.len() % 2 != 0 {
            return Err(Error::Precondition(format!(
                "word H-degree must be even, got {}",
                exponents.len()
            )));
        }
        Ok(OperatorWord { m: degree / 2, exponents })
    }

    /// The power word L^{2m} (encoded L^{2m}H·L^0H; the two H factors cancel).
    pub fn l_power(m: u32) -> Self {
        OperatorWord { exponents: vec![2 * m, 0], m }
    }

    /// The word G_δ*G_δ for G_δ = (L^{δ_1}H)···(L^{δ_l}H).
    pub fn gram_word(delta: &Delta) -> Self {
        let parts = delta.parts();
        let l = parts.len();
        let mut exponents = Vec::with_capacity(2 * l);
        exponents.push(0);
        for i in (1..l).rev() {
            exponents.push(parts[i]);
        }
        exponents.push(2 * parts[0]);
        for &p in &parts[1..] {
            exponents.push(p);
        }
        OperatorWord { m: delta.order(), exponents }
    }

    /// Rotates the (L^{j_i}H) blocks, mapping A₁A₂ to A₂A₁.
    pub fn rotate_blocks(&self, split: usize) -> Self {
        let mut exponents = self.exponents[split..].to_vec();
        exponents.extend_from_slice(&self.exponents[..split]);
        OperatorWord { m: self.m, exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Half the L-degree.
    pub fn order(&self) -> u32 {
        self.m
    }

    /// H-parities in application order: `steps[t]` is the parity of the H run
    /// applied immediately before the (t+1)-th L factor, the second component
    /// the parity applied after the last one.
    fn parities(&self) -> (Vec<u8>, u8) {
        let mut steps = Vec::with_capacity(2 * self.m as usize);
        let mut pending = 0u8;
        for &j in self.exponents.iter().rev() {
            pending ^= 1;
            for i in 0..j {
                steps.push(if i == 0 { pending } else { 0 });
            }
            if j > 0 {
                pending = 0;
            }
        }
        (steps, pending)
    }
}

/// The reference word subtracted from a product of the same L-degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reference {
    /// (LH)^{2m}
    LhPow,
    /// (HL)^{2m}
    HlPow,
}

impl Reference {
    fn parities(self, m: u32) -> (Vec<u8>, u8) {
        let steps = 2 * m as usize;
        match self {
            Reference::LhPow => (vec![1; steps], 0),
            Reference::HlPow => {
                let mut v = vec![1; steps];
                v[0] = 0;
                (v, 1)
            }
        }
    }
}

/// A composition δ = (δ_1,…,δ_l) of m into parts δ_i >= 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Delta {
    parts: Vec<u32>,
    m: u32,
}

impl Delta {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::Precondition("composition parts must be >= 1".into()));
        }
        let m: u32 = parts.iter().sum();
        Ok(Delta { parts, m })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    /// All compositions of `m` into exactly `l` parts, lexicographic order.
    pub fn compositions(m: u32, l: u32) -> Vec<Delta> {
        fn go(remaining: u32, slots: u32, current: &mut Vec<u32>, out: &mut Vec<Delta>) {
            if slots == 1 {
                current.push(remaining);
                out.push(Delta { parts: current.clone(), m: current.iter().sum() });
                current.pop();
                return;
            }
            for first in 1..=(remaining - (slots - 1)) {
                current.push(first);
                go(remaining - first, slots - 1, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        if l >= 1 && l <= m {
            go(m, l, &mut Vec::with_capacity(l as usize), &mut out);
        }
        out
    }
}

/// Report for one zeta-invariant evaluation.
#[derive(Debug, Clone)]
pub struct ZetaReport {
    pub m: u32,
    pub value: f64,
    /// Half-size of the frequency truncation actually used (N = 2mK + pad).
    pub truncation: usize,
    pub band: usize,
    /// True when the input was bandlimited and used as-is; the CLI clears it
    /// after truncating a wider input.
    pub exact: bool,
}

// Frequency-indexed workspace over [-n_max, n_max] with exact support
// tracking; entries outside the support stay bitwise zero.
struct FreqVec {
    data: Vec<Complex64>,
    n_max: i64,
    lo: i64,
    hi: i64,
}

impl FreqVec {
    fn zero(n_max: i64) -> Self {
        FreqVec {
            data: vec![Complex64::new(0.0, 0.0); (2 * n_max + 1) as usize],
            n_max,
            lo: 1,
            hi: 0,
        }
    }

    fn basis(n_max: i64, n: i64) -> Self {
        let mut v = Self::zero(n_max);
        v.data[(n + n_max) as usize] = Complex64::new(1.0, 0.0);
        v.lo = n;
        v.hi = n;
        v
    }

    #[inline]
    fn idx(&self, n: i64) -> usize {
        (n + self.n_max) as usize
    }

    fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    #[inline]
    fn at(&self, n: i64) -> Complex64 {
        self.data[self.idx(n)]
    }

    /// Flips the sign on negative frequencies (the Hilbert transform).
    fn apply_h(&mut self) {
        let hi = self.hi.min(-1);
        for n in self.lo..=hi {
            let i = self.idx(n);
            self.data[i] = -self.data[i];
        }
    }

    /// Adds `c` times the negative-frequency part of `other`.
    fn add_scaled_negative_part(&mut self, other: &FreqVec, c: f64) {
        if other.is_empty() {
            return;
        }
        let hi = other.hi.min(-1);
        if other.lo > hi {
            return;
        }
        for n in other.lo..=hi {
            let i = self.idx(n);
            self.data[i] += c * other.at(n);
        }
        if self.is_empty() {
            self.lo = other.lo;
            self.hi = hi;
        } else {
            self.lo = self.lo.min(other.lo);
            self.hi = self.hi.max(hi);
        }
    }
}

// Applies L = Λ^{1/2} a Λ^{1/2}: out[j] = √|j| Σ_q â_{j-q} √|q| v[q].
fn apply_l(acoef: &[Complex64], k_band: i64, sqrt_abs: &[f64], v: &FreqVec) -> FreqVec {
    let mut out = FreqVec::zero(v.n_max);
    if v.is_empty() {
        return out;
    }
    out.lo = (v.lo - k_band).max(-v.n_max);
    out.hi = (v.hi + k_band).min(v.n_max);
    for j in out.lo..=out.hi {
        let qlo = (j - k_band).max(v.lo);
        let qhi = (j + k_band).min(v.hi);
        let mut acc = Complex64::new(0.0, 0.0);
        for q in qlo..=qhi {
            let a = acoef[(j - q + k_band) as usize];
            acc += a * (sqrt_abs[v.idx(q)] * v.at(q));
        }
        let i = out.idx(j);
        out.data[i] = sqrt_abs[i] * acc;
    }
    out
}

fn trace_diff(
    a: &FourierSeries,
    word: &OperatorWord,
    reference: Reference,
    pad: usize,
) -> Result<f64> {
    if !a.is_real() {
        return Err(Error::Precondition("trace requires a real symbol".into()));
    }
    let m = word.order() as i64;
    let k = a.band() as i64;
    let local = m * k;
    let n_max = 2 * local + pad as i64;
    let (mut word_steps, mut word_leading) = word.parities();
    // H e_n = ±e_n, so conjugation by H preserves every diagonal entry;
    // reduce H·X·H to X so that e.g. HL^{2m}H and L^{2m} evaluate identically.
    if word_leading == 1 && word_steps.first() == Some(&1) {
        word_steps[0] = 0;
        word_leading = 0;
    }
    let (ref_steps, ref_leading) = reference.parities(word.order());

    let sqrt_abs: Vec<f64> = (-n_max..=n_max).map(|n| ((n.abs()) as f64).sqrt()).collect();
    let acoef: Vec<Complex64> = (-k..=k).map(|d| a.coeff(d)).collect();

    let contributions: Vec<Complex64> = (-local..=local)
        .into_par_iter()
        .map(|n| {
            let mut w = FreqVec::basis(n_max, n);
            let mut d = FreqVec::zero(n_max);
            for t in 0..(2 * m) as usize {
                let aw = word_steps[t];
                let ar = ref_steps[t];
                if aw == 1 {
                    d.apply_h();
                }
                if aw != ar {
                    // H^{aw} - H^{ar} = ±(I - H) = ±2 P₋
                    let c = if aw == 0 { 2.0 } else { -2.0 };
                    d.add_scaled_negative_part(&w, c);
                }
                d = apply_l(&acoef, k, &sqrt_abs, &d);
                if ar == 1 {
                    w.apply_h();
                }
                w = apply_l(&acoef, k, &sqrt_abs, &w);
            }
            let sign_n = if n >= 0 { 1.0 } else { -1.0 };
            let sw = if word_leading == 1 { sign_n } else { 1.0 };
            let sr = if ref_leading == 1 { sign_n } else { 1.0 };
            sw * d.at(n) + (sw - sr) * w.at(n)
        })
        .collect();

    let total: Complex64 = contributions.into_iter().sum();
    if total.im.abs() > 1e-10 * (1.0 + total.re.abs()) {
        return Err(Error::Consistency(format!(
            "trace has imaginary residue {} (real part {})",
            total.im, total.re
        )));
    }
    Ok(total.re)
}

/// Tr[W - (LH)^{2m}] for L = Λ^{1/2} a Λ^{1/2}, exact up to floating point
/// for bandlimited real `a`.
pub fn trace_word(a: &FourierSeries, word: &OperatorWord) -> Result<f64> {
    trace_diff(a, word, Reference::LhPow, 0)
}

/// Same trace with the frequency truncation widened by `pad`; path locality
/// makes the result identical, which the regression suite checks.
pub fn trace_word_padded(a: &FourierSeries, word: &OperatorWord, pad: usize) -> Result<f64> {
    trace_diff(a, word, Reference::LhPow, pad)
}

/// Trace against a chosen reference word; `Reference::HlPow` gives the
/// right-hand side of the cyclicity identity
/// Tr[A₁A₂ - (LH)^{2m}] = Tr[A₂A₁ - (HL)^{2m}].
pub fn trace_word_vs(a: &FourierSeries, word: &OperatorWord, reference: Reference) -> Result<f64> {
    trace_diff(a, word, reference, 0)
}

/// Z_m(a) = Tr[L^{2m} - (LH)^{2m}] = Tr[(aΛ)^{2m} - (aD)^{2m}].
pub fn zeta_invariant(a: &FourierSeries, m: u32) -> Result<ZetaReport> {
    zeta_invariant_padded(a, m, 0)
}

/// Zeta-invariant with a widened truncation, for regression checks.
pub fn zeta_invariant_padded(a: &FourierSeries, m: u32, pad: usize) -> Result<ZetaReport> {
    if m == 0 {
        return Err(Error::Precondition("zeta order m must be >= 1".into()));
    }
    let value = trace_word_padded(a, &OperatorWord::l_power(m), pad)?;
    if value < -1e-9 {
        return Err(Error::Consistency(format!(
            "Z_{m} = {value} violates nonnegativity for a real symbol"
        )));
    }
    Ok(ZetaReport {
        m,
        value,
        truncation: 2 * m as usize * a.band() + pad,
        band: a.band(),
        exact: true,
    })
}

/// Edward's closed form for the first zeta-invariant of a real symbol:
/// Z_1(a) = (2/3) Σ_{n>=2} (n³ - n) |â_n|².
pub fn edward_z1(a: &FourierSeries) -> Result<f64> {
    if !a.is_real() {
        return Err(Error::Precondition("edward_z1 requires a real symbol".into()));
    }
    let mut sum = 0.0;
    for n in 2..=a.band() as i64 {
        sum += ((n * n * n - n) as f64) * a.coeff(n).norm_sqr();
    }
    Ok(2.0 / 3.0 * sum)
}

/// φ(l) = max over compositions δ of m into l parts of
/// Tr[G_δ*G_δ - (LH)^{2m}]; non-increasing and non-negative in l, with
/// φ(1) = Z_m(a).
pub fn phi(a: &FourierSeries, m: u32, l: u32) -> Result<f64> {
    if m == 0 || l < 1 || l > m {
        return Err(Error::Precondition(format!("phi requires 1 <= l <= m, got l={l}, m={m}")));
    }
    if m > MAX_PHI_ORDER {
        return Err(Error::Precondition(format!(
            "phi enumerates C(m-1, l-1) compositions; m = {m} exceeds the supported m <= {MAX_PHI_ORDER}"
        )));
    }
    let deltas = Delta::compositions(m, l);
    let traces: Result<Vec<f64>> = deltas
        .par_iter()
        .map(|delta| trace_word(a, &OperatorWord::gram_word(delta)))
        .collect();
    Ok(traces?.into_iter().fold(f64::NEG_INFINITY, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::Multiplier;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_real(rng: &mut ChaCha8Rng, band: usize, amp: f64) -> FourierSeries {
        let mut pairs = vec![(0i64, Complex64::new(rng.gen_range(-amp..amp), 0.0))];
        for n in 1..=band as i64 {
            let c = Complex64::new(rng.gen_range(-amp..amp), rng.gen_range(-amp..amp));
            pairs.push((n, c));
            pairs.push((-n, c.conj()));
        }
        FourierSeries::from_pairs(&pairs)
    }

    fn cos_k(k: i64) -> FourierSeries {
        let half = Complex64::new(0.5, 0.0);
        FourierSeries::from_pairs(&[(k, half), (-k, half)])
    }

    enum Token {
        L,
        H,
    }

    // Independent oracle: dense truncated-matrix evaluation of both words,
    // diagonal difference summed over the whole truncation range.
    fn dense_trace_oracle(a: &FourierSeries, word: &OperatorWord, reference: Reference) -> f64 {
        let m = word.order() as i64;
        let k = a.band() as i64;
        let n_max = 2 * m * k + 2;
        let dim = (2 * n_max + 1) as usize;
        let idx = |n: i64| (n + n_max) as usize;
        let h_sign = |n: i64| if n >= 0 { 1.0 } else { -1.0 };

        let word_col = |tokens_rtl: &[Token], n: i64| -> Complex64 {
            let mut v = vec![Complex64::new(0.0, 0.0); dim];
            v[idx(n)] = Complex64::new(1.0, 0.0);
            for tok in tokens_rtl {
                match tok {
                    Token::H => {
                        for (i, x) in v.iter_mut().enumerate() {
                            *x *= h_sign(i as i64 - n_max);
                        }
                    }
                    Token::L => {
                        let mut out = vec![Complex64::new(0.0, 0.0); dim];
                        for (j, o) in out.iter_mut().enumerate() {
                            let jj = j as i64 - n_max;
                            for q in (jj - k).max(-n_max)..=(jj + k).min(n_max) {
                                *o += ((jj.abs() as f64).sqrt() * (q.abs() as f64).sqrt())
                                    * a.coeff(jj - q)
                                    * v[idx(q)];
                            }
                        }
                        v = out;
                    }
                }
            }
            v[idx(n)]
        };

        let mut w_tokens = Vec::new();
        for &j in word.exponents().iter().rev() {
            w_tokens.push(Token::H);
            for _ in 0..j {
                w_tokens.push(Token::L);
            }
        }
        let mut r_tokens = Vec::new();
        for _ in 0..2 * m {
            match reference {
                Reference::LhPow => {
                    r_tokens.push(Token::H);
                    r_tokens.push(Token::L);
                }
                Reference::HlPow => {
                    r_tokens.push(Token::L);
                    r_tokens.push(Token::H);
                }
            }
        }

        let mut total = Complex64::new(0.0, 0.0);
        for n in -n_max..=n_max {
            total += word_col(&w_tokens, n) - word_col(&r_tokens, n);
        }
        assert!(total.im.abs() < 1e-9, "oracle trace imaginary part {}", total.im);
        total.re
    }

    #[test]
    fn constant_symbol_has_zero_traces() {
        let a = FourierSeries::constant(1.3);
        for m in 1..=3 {
            let t = trace_word(&a, &OperatorWord::l_power(m)).unwrap();
            assert_eq!(t, 0.0);
        }
    }

    #[test]
    fn conjugated_power_word_matches_power_word() {
        // Tr[HL^{2m}H - (LH)^{2m}] = Tr[L^{2m} - (LH)^{2m}]
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for m in 1..=2u32 {
            for _ in 0..10 {
                let a = random_real(&mut rng, 4, 1.0);
                let plain = trace_word(&a, &OperatorWord::l_power(m)).unwrap();
                let conj = trace_word(&a, &OperatorWord::new(vec![0, 2 * m]).unwrap()).unwrap();
                assert!((plain - conj).abs() < 1e-9, "m={m}: {plain} vs {conj}");
            }
        }
    }

    #[test]
    fn cos2_trace_is_one() {
        // Hand path-sum over frequencies: only n = ±1 contribute, 1/2 each.
        let a = cos_k(2);
        let t = trace_word(&a, &OperatorWord::l_power(1)).unwrap();
        assert!((t - 1.0).abs() < 1e-12, "t = {t}");
    }

    #[test]
    fn dense_matrix_oracle_agrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for m in 1..=2u32 {
            for band in 1..=3usize {
                let a = random_real(&mut rng, band, 0.8);
                let word = OperatorWord::l_power(m);
                let fast = trace_word(&a, &word).unwrap();
                let slow = dense_trace_oracle(&a, &word, Reference::LhPow);
                assert!((fast - slow).abs() < 1e-9, "m={m} band={band}: {fast} vs {slow}");
            }
        }
        // A non-power word as well.
        let a = random_real(&mut rng, 2, 0.8);
        let word = OperatorWord::new(vec![1, 2, 1, 0]).unwrap();
        let fast = trace_word(&a, &word).unwrap();
        let slow = dense_trace_oracle(&a, &word, Reference::LhPow);
        assert!((fast - slow).abs() < 1e-9, "{fast} vs {slow}");
    }

    #[test]
    fn trace_cyclicity_under_block_rotation() {
        // Tr[A₁A₂ - (LH)^{2m}] = Tr[A₂A₁ - (HL)^{2m}] for random splits.
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        let words = [vec![1u32, 3], vec![2, 2], vec![1, 1, 1, 1], vec![0, 4], vec![3, 1]];
        for exps in &words {
            let a = random_real(&mut rng, 3, 0.7);
            let word = OperatorWord::new(exps.clone()).unwrap();
            let split = rng.gen_range(1..exps.len());
            let rotated = word.rotate_blocks(split);
            let lhs = trace_word(&a, &word).unwrap();
            let rhs = trace_word_vs(&a, &rotated, Reference::HlPow).unwrap();
            assert!((lhs - rhs).abs() < 1e-9, "{exps:?} split {split}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn zeta_vanishes_on_band_one_symbols() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..5 {
            let a = random_real(&mut rng, 1, 1.0);
            for m in 1..=4 {
                let z = zeta_invariant(&a, m).unwrap().value;
                assert!(z.abs() < 1e-10, "m={m}, z={z}");
            }
        }
    }

    #[test]
    fn zeta_examples() {
        let z = zeta_invariant(&cos_k(2), 1).unwrap();
        assert!((z.value - 1.0).abs() < 1e-12);
        assert_eq!(z.truncation, 4);

        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..5 {
            let a = random_real(&mut rng, 6, 1.0);
            for m in 1..=3 {
                let z = zeta_invariant(&a, m).unwrap().value;
                assert!(z >= -1e-9, "m={m}, z={z}");
            }
        }
    }

    #[test]
    fn zeta_detects_high_frequency_content() {
        let a = FourierSeries::from_pairs(&[
            (0, Complex64::new(1.0, 0.0)),
            (2, Complex64::new(0.5, 0.0)),
            (-2, Complex64::new(0.5, 0.0)),
        ]);
        assert!(zeta_invariant(&a, 2).unwrap().value > 1e-4);
    }

    #[test]
    fn zeta_is_rotation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..5 {
            let a = random_real(&mut rng, 3, 1.0);
            let angle = rng.gen_range(0.0..std::f64::consts::TAU);
            let rotated = a.rotate(angle);
            for m in 1..=2 {
                let z1 = zeta_invariant(&a, m).unwrap().value;
                let z2 = zeta_invariant(&rotated, m).unwrap().value;
                assert!((z1 - z2).abs() < 1e-10, "m={m}: {z1} vs {z2}");
            }
        }
    }

    #[test]
    fn truncation_padding_changes_nothing() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for m in 1..=3 {
            for band in 1..=6 {
                let a = random_real(&mut rng, band, 1.0);
                let z0 = zeta_invariant(&a, m).unwrap().value;
                let z8 = zeta_invariant_padded(&a, m, 8).unwrap().value;
                assert_eq!(z0, z8, "m={m} band={band}");
            }
        }
    }

    #[test]
    fn edward_examples() {
        assert_eq!(edward_z1(&FourierSeries::constant(2.0)).unwrap(), 0.0);
        assert!((edward_z1(&cos_k(2)).unwrap() - 1.0).abs() < 1e-15);
        assert!((edward_z1(&cos_k(3)).unwrap() - 4.0).abs() < 1e-15);
    }

    #[test]
    fn edward_matches_trace_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..10 {
            let a = random_real(&mut rng, 8, 1.0);
            let z = zeta_invariant(&a, 1).unwrap().value;
            let e = edward_z1(&a).unwrap();
            assert!((z - e).abs() / (1.0 + e) < 1e-10, "{z} vs {e}");
        }
    }

    #[test]
    fn phi_one_equals_zeta() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for m in 1..=3u32 {
            let a = random_real(&mut rng, 4, 0.8);
            let p1 = phi(&a, m, 1).unwrap();
            let z = zeta_invariant(&a, m).unwrap().value;
            assert!((p1 - z).abs() < 1e-9, "m={m}: {p1} vs {z}");
        }
    }

    #[test]
    fn phi_is_monotone_nonincreasing() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..3 {
            let a = random_real(&mut rng, 3, 0.8);
            let values: Vec<f64> = (1..=3).map(|l| phi(&a, 3, l).unwrap()).collect();
            assert!(values[0] >= values[1] - 1e-9, "{values:?}");
            assert!(values[1] >= values[2] - 1e-9, "{values:?}");
            assert!(values[2] >= -1e-9, "{values:?}");
        }
    }

    #[test]
    fn phi_of_constant_vanishes() {
        let a = FourierSeries::constant(0.7);
        for l in 1..=3 {
            assert_eq!(phi(&a, 3, l).unwrap(), 0.0);
        }
    }

    #[test]
    fn phi_rejects_bad_arguments() {
        let a = FourierSeries::constant(1.0);
        assert!(phi(&a, 3, 0).is_err());
        assert!(phi(&a, 3, 4).is_err());
        assert!(phi(&a, 9, 1).is_err());
    }

    #[test]
    fn compositions_are_counted_by_binomials() {
        // C(m-1, l-1) compositions of m into l parts
        assert_eq!(Delta::compositions(5, 1).len(), 1);
        assert_eq!(Delta::compositions(5, 2).len(), 4);
        assert_eq!(Delta::compositions(5, 3).len(), 6);
        assert_eq!(Delta::compositions(5, 5).len(), 1);
        for d in Delta::compositions(6, 3) {
            assert_eq!(d.parts().iter().sum::<u32>(), 6);
            assert!(d.parts().iter().all(|&p| p >= 1));
        }
    }

    #[test]
    fn gram_word_shape() {
        let d = Delta::new(vec![2, 1]).unwrap();
        let w = OperatorWord::gram_word(&d);
        // (HL^1)(HL^2)(L^2H)(L^1H) = H L H L^4 H L H
        assert_eq!(w.exponents(), &[0, 1, 4, 1]);
        assert_eq!(w.order(), 3);

        let d1 = Delta::new(vec![3]).unwrap();
        assert_eq!(OperatorWord::gram_word(&d1).exponents(), &[0, 6]);
    }

    #[test]
    fn word_validation() {
        assert!(OperatorWord::new(vec![1, 2]).is_err()); // odd L-degree
        assert!(OperatorWord::new(vec![2, 1, 1]).is_err()); // odd H-degree
        assert!(OperatorWord::new(vec![0, 0]).is_err()); // zero degree
        assert!(OperatorWord::new(vec![2, 2]).is_ok());
    }

    #[test]
    fn trace_rejects_complex_symbols() {
        let a = FourierSeries::from_pairs(&[(1, Complex64::new(1.0, 0.0))]);
        assert!(!a.is_real());
        assert!(trace_word(&a, &OperatorWord::l_power(1)).is_err());
    }

    #[test]
    fn evaluator_l_matches_series_arithmetic() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        let a = random_real(&mut rng, 3, 1.0);
        for kf in -3i64..=3 {
            let via_series = FourierSeries::basis(kf)
                .apply_multiplier(Multiplier::SqrtLambda)
                .multiply(&a)
                .apply_multiplier(Multiplier::SqrtLambda);
            let sqrt_abs: Vec<f64> = (-12i64..=12).map(|n| (n.abs() as f64).sqrt()).collect();
            let acoef: Vec<Complex64> = (-3i64..=3).map(|d| a.coeff(d)).collect();
            let v = FreqVec::basis(12, kf);
            let lv = apply_l(&acoef, 3, &sqrt_abs, &v);
            for n in -6i64..=6 {
                let diff = (lv.at(n) - via_series.coeff(n)).norm();
                assert!(diff < 1e-13, "k={kf} n={n} diff={diff}");
            }
        }
    }
}
