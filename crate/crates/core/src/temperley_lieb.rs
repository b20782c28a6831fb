//! Temperley-Lieb transfer-matrix contraction of a Morse diagram.
//!
//! The state after each event is a vector over planar matchings of the
//! strands at that level. Coefficients live in `Z[ζ_N]/(ζ^{N/2} + 1)`, where
//! multiplication by a power of `ζ` is a signed rotation; they are reduced
//! modulo `Φ_N` only when they grow large, and at the end.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::cyclotomic::{ring, Cyclotomic};
use crate::morse::{EventKind, MorseLink};
use crate::root::RootOfUnity;

/// A crossingless pairing of `k` points, stored as a partner array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching(SmallVec<[u8; 24]>);

impl Matching {
    pub fn empty() -> Self {
        Matching(SmallVec::new())
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// Parses balanced parentheses, e.g. `"(())()"`.
    pub fn from_parens(text: &str) -> Option<Self> {
        let mut partner: SmallVec<[u8; 24]> = SmallVec::new();
        let mut open = Vec::new();
        for (i, ch) in text.chars().enumerate() {
            partner.push(0);
            match ch {
                '(' => open.push(i),
                ')' => {
                    let j = open.pop()?;
                    partner[i] = j as u8;
                    partner[j] = i as u8;
                }
                _ => return None,
            }
        }
        open.is_empty().then_some(Matching(partner))
    }

    pub fn to_parens(&self) -> String {
        (0..self.width())
            .map(|i| if self.partner(i) > i { '(' } else { ')' })
            .collect()
    }

    #[cfg(test)]
    fn insert_pair(&self, p: usize) -> Self {
        let shift = |i: u8| if (i as usize) < p { i } else { i + 2 };
        let mut out: SmallVec<[u8; 24]> = SmallVec::with_capacity(self.0.len() + 2);
        out.extend(self.0[..p].iter().map(|&j| shift(j)));
        out.push(p as u8 + 1);
        out.push(p as u8);
        out.extend(self.0[p..].iter().map(|&j| shift(j)));
        Matching(out)
    }

    #[cfg(test)]
    /// Removes points `p, p+1`, which must be partners of each other or
    /// already rewired away.
    fn drop_pair(mut self, p: usize) -> Self {
        self.0.drain(p..p + 2);
        for j in self.0.iter_mut() {
            if *j as usize > p {
                *j -= 2;
            }
        }
        self
    }

    #[cfg(test)]
    /// Caps points `p, p+1`; `None` means they formed a closed loop.
    fn cap(&self, p: usize) -> Option<Self> {
        let a = self.partner(p);
        if a == p + 1 {
            return None;
        }
        let b = self.partner(p + 1);
        let mut m = self.clone();
        m.0[a] = b as u8;
        m.0[b] = a as u8;
        Some(m.drop_pair(p))
    }

    #[cfg(test)]
    /// Composes with the generator `e_p`; `None` when `p, p+1` are already
    /// partners, in which case the result is `d` times the input.
    fn e(&self, p: usize) -> Option<Self> {
        let a = self.partner(p);
        if a == p + 1 {
            return None;
        }
        let b = self.partner(p + 1);
        let mut m = self.clone();
        m.0[a] = b as u8;
        m.0[b] = a as u8;
        m.0[p] = p as u8 + 1;
        m.0[p + 1] = p as u8;
        Some(m)
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching({})", self.to_parens())
    }
}

/// All planar matchings of `k` points in balanced-parenthesis order,
/// with `(` before `)`.
pub fn planar_matchings(k: usize) -> Vec<Matching> {
    fn rec(prefix: &mut String, open: usize, left: usize, out: &mut Vec<Matching>) {
        if left == 0 {
            out.push(Matching::from_parens(prefix).expect("balanced"));
            return;
        }
        if open < left {
            prefix.push('(');
            rec(prefix, open + 1, left - 1, out);
            prefix.pop();
        }
        if open > 0 {
            prefix.push(')');
            rec(prefix, open - 1, left - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k % 2 == 0 {
        rec(&mut String::new(), 0, k, &mut out);
    }
    out
}

pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// Coefficient type of the contraction.
trait Scalar: Clone + Zero + One {
    /// `self += s·x`; `false` on overflow.
    fn add_scaled(&mut self, x: &Self, s: i64) -> bool;
    fn bits(&self) -> u64;
    fn to_bigint(&self) -> BigInt;
    fn to_i64(&self) -> Option<i64>;
}

impl Scalar for i64 {
    fn add_scaled(&mut self, x: &Self, s: i64) -> bool {
        match x.checked_mul(s).and_then(|t| self.checked_add(t)) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }

    fn bits(&self) -> u64 {
        64 - self.unsigned_abs().leading_zeros() as u64
    }

    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }

    fn to_i64(&self) -> Option<i64> {
        Some(*self)
    }
}

impl Scalar for BigInt {
    fn add_scaled(&mut self, x: &Self, s: i64) -> bool {
        match s {
            1 => *self += x,
            -1 => *self -= x,
            _ => *self += x * s,
        }
        true
    }

    fn bits(&self) -> u64 {
        self.magnitude().bits()
    }

    fn to_bigint(&self) -> BigInt {
        self.clone()
    }

    fn to_i64(&self) -> Option<i64> {
        num_traits::ToPrimitive::to_i64(self)
    }
}

#[derive(Debug)]
struct Overflow;

/// Arithmetic on length-`M` vectors with `ζ^M = -1`, `M = N/2`.
struct Ring {
    level: usize,
    half: usize,
    phi: usize,
    poly: Vec<i64>,
}

impl Ring {
    fn new(level: usize) -> Self {
        let data = ring(level);
        Self {
            level,
            half: level / 2,
            phi: data.phi,
            poly: data.poly.clone(),
        }
    }

    /// `dst += s·ζ^k·src`.
    fn add_rotated<C: Scalar>(&self, dst: &mut [C], src: &[C], k: usize, s: i64) -> Result<(), Overflow> {
        let m = self.half;
        for (i, x) in src.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let t = (i + k) % self.level;
            let ok = if t < m {
                dst[t].add_scaled(x, s)
            } else {
                dst[t - m].add_scaled(x, -s)
            };
            if !ok {
                return Err(Overflow);
            }
        }
        Ok(())
    }

    /// Reduces modulo `Φ_N`, which divides `ζ^M + 1`.
    fn reduce<C: Scalar>(&self, v: &mut [C]) -> Result<(), Overflow> {
        for k in (self.phi..self.half).rev() {
            if v[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut v[k], C::zero());
            let base = k - self.phi;
            for (j, &pj) in self.poly[..self.phi].iter().enumerate() {
                if pj != 0 && !v[base + j].add_scaled(&c, -pj) {
                    return Err(Overflow);
                }
            }
        }
        Ok(())
    }
}

/// Result of a contraction: the bracket value and the largest number of
/// basis matchings held at any level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub value: Cyclotomic,
    pub peak_basis: usize,
}

/// The transfer-matrix state at some level of a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TLState {
    pub width: usize,
    /// Nonzero coefficients in canonical basis order.
    pub terms: Vec<(Matching, Cyclotomic)>,
}

impl TLState {
    /// Dense coefficient vector over [`planar_matchings`]`(width)`.
    pub fn to_dense(&self, level: usize) -> Vec<Cyclotomic> {
        let basis = planar_matchings(self.width);
        basis
            .iter()
            .map(|m| {
                self.terms
                    .iter()
                    .find(|(t, _)| t == m)
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(|| Cyclotomic::zero(level))
            })
            .collect()
    }
}

const REDUCE_BITS: u64 = 40;

/// A matching packed as balanced parentheses, bit `i` set for `(`.
type Key = u128;

/// Widest level the packed encoding supports.
pub const MAX_GIRTH: usize = 126;

fn bit(k: Key, i: usize) -> bool {
    (k >> i) & 1 == 1
}

fn with_bit(k: Key, i: usize, v: bool) -> Key {
    if v {
        k | (1 << i)
    } else {
        k & !(1 << i)
    }
}

fn low_mask(p: usize) -> Key {
    (1 << p) - 1
}

fn partner(k: Key, width: usize, i: usize) -> usize {
    let mut depth = 0i32;
    if bit(k, i) {
        for j in i..width {
            depth += if bit(k, j) { 1 } else { -1 };
            if depth == 0 {
                return j;
            }
        }
    } else {
        for j in (0..=i).rev() {
            depth += if bit(k, j) { -1 } else { 1 };
            if depth == 0 {
                return j;
            }
        }
    }
    unreachable!("unbalanced matching key")
}

fn insert_pair(k: Key, p: usize) -> Key {
    (k & low_mask(p)) | (1 << p) | ((k >> p) << (p + 2))
}

fn remove_pair(k: Key, p: usize) -> Key {
    (k & low_mask(p)) | ((k >> (p + 2)) << p)
}

fn adjacent(k: Key, p: usize) -> bool {
    bit(k, p) && !bit(k, p + 1)
}

/// Pairs `a` with `b` and `p` with `p + 1`.
fn rewire(k: Key, width: usize, p: usize) -> Key {
    let a = partner(k, width, p);
    let b = partner(k, width, p + 1);
    with_bit(with_bit(k, a, a < b), b, b < a)
}

fn key_to_matching(k: Key, width: usize) -> Matching {
    let parens: String = (0..width).map(|i| if bit(k, i) { '(' } else { ')' }).collect();
    Matching::from_parens(&parens).expect("balanced key")
}

struct Layer<C> {
    width: usize,
    keys: Vec<Key>,
    coeffs: Vec<C>,
    index: FxHashMap<Key, u32>,
}

impl<C: Scalar> Layer<C> {
    fn with_capacity(width: usize, n: usize, half: usize) -> Self {
        let mut index = FxHashMap::default();
        index.reserve(n);
        Self {
            width,
            keys: Vec::with_capacity(n),
            coeffs: Vec::with_capacity(n * half),
            index,
        }
    }

    fn reset(&mut self, width: usize) {
        self.width = width;
        self.keys.clear();
        self.coeffs.clear();
        self.index.clear();
    }

    /// Start offset of the coefficients of `key`, inserting zeros if new.
    fn slot(&mut self, key: Key, half: usize) -> usize {
        let next = self.keys.len() as u32;
        let i = *self.index.entry(key).or_insert(next);
        if i == next {
            self.keys.push(key);
            self.coeffs.resize(self.coeffs.len() + half, C::zero());
        }
        i as usize * half
    }
}

struct Engine<'a, C> {
    ring: &'a Ring,
    a: usize,
    state: Layer<C>,
    spare: Layer<C>,
    peak: usize,
}

impl<'a, C: Scalar> Engine<'a, C> {
    fn new(ring: &'a Ring, root: &RootOfUnity) -> Self {
        let mut state = Layer::with_capacity(0, 1, ring.half);
        let o = state.slot(0, ring.half);
        state.coeffs[o] = C::one();
        Self {
            ring,
            a: root.a_exponent() as usize,
            state,
            spare: Layer::with_capacity(0, 0, 0),
            peak: 1,
        }
    }

    /// `dst += d·ζ^k·src` with `d = -ζ^{2a} - ζ^{-2a}`.
    fn add_loop(&self, dst: &mut [C], src: &[C], k: usize) -> Result<(), Overflow> {
        let n = self.ring.level;
        let two_a = 2 * self.a;
        self.ring.add_rotated(dst, src, (k + two_a) % n, -1)?;
        self.ring.add_rotated(dst, src, (k + n - two_a) % n, -1)
    }

    fn apply(&mut self, kind: EventKind, p: usize) -> Result<(), Overflow> {
        let half = self.ring.half;
        let n = self.ring.level;
        let width = self.state.width;
        if kind == EventKind::Cup {
            let st = &mut self.state;
            st.width += 2;
            st.index.clear();
            for (i, k) in st.keys.iter_mut().enumerate() {
                *k = insert_pair(*k, p);
                st.index.insert(*k, i as u32);
            }
            return Ok(());
        }
        let new_width = if kind == EventKind::Cap { width - 2 } else { width };
        let mut next = std::mem::replace(&mut self.spare, Layer::with_capacity(0, 0, 0));
        next.reset(new_width);
        let old = &self.state;
        for (i, &k) in old.keys.iter().enumerate() {
            let v = &old.coeffs[i * half..(i + 1) * half];
            if kind == EventKind::Cap {
                if adjacent(k, p) {
                    let o = next.slot(remove_pair(k, p), half);
                    self.add_loop(&mut next.coeffs[o..o + half], v, 0)?;
                } else {
                    let k2 = rewire(k, width, p);
                    let o = next.slot(remove_pair(k2, p), half);
                    self.ring.add_rotated(&mut next.coeffs[o..o + half], v, 0, 1)?;
                }
                continue;
            }
            // positive: A·id + A⁻¹·e, negative: A⁻¹·id + A·e
            let (k_id, k_e) = if kind == EventKind::CrossPos {
                (self.a, n - self.a)
            } else {
                (n - self.a, self.a)
            };
            let o = next.slot(k, half);
            self.ring.add_rotated(&mut next.coeffs[o..o + half], v, k_id, 1)?;
            if adjacent(k, p) {
                self.add_loop(&mut next.coeffs[o..o + half], v, k_e)?;
            } else {
                let k2 = rewire(k, width, p);
                let k2 = with_bit(with_bit(k2, p, true), p + 1, false);
                let o = next.slot(k2, half);
                self.ring.add_rotated(&mut next.coeffs[o..o + half], v, k_e, 1)?;
            }
        }
        if next.coeffs.iter().any(|c| c.bits() > REDUCE_BITS) {
            for chunk in next.coeffs.chunks_mut(half) {
                self.ring.reduce(chunk)?;
            }
        }
        self.peak = self.peak.max(next.keys.len());
        self.spare = std::mem::replace(&mut self.state, next);
        Ok(())
    }
}

fn to_cyclotomic<C: Scalar>(ring: &Ring, v: &[C]) -> Cyclotomic {
    let mut small = vec![0i128; ring.level];
    let fits = v.iter().zip(small.iter_mut()).all(|(c, dst)| match c.to_i64() {
        Some(x) => {
            *dst = x as i128;
            true
        }
        None => false,
    });
    if fits {
        if let Some(c) = Cyclotomic::from_group_ring_i128(ring.level, &small) {
            return c;
        }
    }
    let mut full = vec![BigInt::zero(); ring.level];
    for (dst, c) in full.iter_mut().zip(v) {
        *dst = c.to_bigint();
    }
    Cyclotomic::from_group_ring(ring.level, &full)
}

fn run<'r, C: Scalar>(
    diagram: &MorseLink,
    upto: usize,
    ring: &'r Ring,
    root: &RootOfUnity,
) -> Result<Engine<'r, C>, Overflow> {
    let mut engine = Engine::new(ring, root);
    for ev in &diagram.events()[..upto] {
        engine.apply(ev.kind, ev.pos)?;
    }
    Ok(engine)
}

fn state_of<C: Scalar>(engine: &Engine<'_, C>) -> TLState {
    let half = engine.ring.half;
    let st = &engine.state;
    let mut terms: Vec<(Matching, Cyclotomic)> = st
        .keys
        .iter()
        .enumerate()
        .map(|(i, &k)| {
            (
                key_to_matching(k, st.width),
                to_cyclotomic(engine.ring, &st.coeffs[i * half..(i + 1) * half]),
            )
        })
        .filter(|(_, c)| !c.is_zero())
        .collect();
    terms.sort_by(|x, y| x.0.to_parens().cmp(&y.0.to_parens()));
    TLState {
        width: st.width,
        terms,
    }
}

fn check_girth(diagram: &MorseLink) {
    assert!(
        diagram.girth() <= MAX_GIRTH,
        "girth {} exceeds the supported {MAX_GIRTH}",
        diagram.girth()
    );
}

/// State after the first `upto` events.
///
/// Panics if the diagram is wider than [`MAX_GIRTH`].
pub fn contract_prefix(diagram: &MorseLink, upto: usize, root: &RootOfUnity) -> TLState {
    check_girth(diagram);
    let ring = Ring::new(root.level());
    match run::<i64>(diagram, upto, &ring, root) {
        Ok(engine) => state_of(&engine),
        Err(Overflow) => state_of(&run::<BigInt>(diagram, upto, &ring, root).expect("big integers do not overflow")),
    }
}

fn finish<C: Scalar>(engine: Engine<'_, C>) -> Contraction {
    let half = engine.ring.half;
    let value = match engine.state.index.get(&0) {
        Some(&i) => to_cyclotomic(engine.ring, &engine.state.coeffs[i as usize * half..(i as usize + 1) * half]),
        None => Cyclotomic::zero(engine.ring.level),
    };
    Contraction {
        value,
        peak_basis: engine.peak,
    }
}

/// Contracts the whole diagram to its Kauffman bracket.
///
/// Panics if the diagram is wider than [`MAX_GIRTH`].
pub fn contract(diagram: &MorseLink, root: &RootOfUnity) -> Contraction {
    check_girth(diagram);
    let ring = Ring::new(root.level());
    let n = diagram.events().len();
    match run::<i64>(diagram, n, &ring, root) {
        Ok(engine) => finish(engine),
        Err(Overflow) => finish(run::<BigInt>(diagram, n, &ring, root).expect("big integers do not overflow")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    #[test]
    fn matching_basis_sizes_are_catalan() {
        for k in 0..7 {
            assert_eq!(planar_matchings(2 * k).len() as u128, catalan(k));
        }
        assert_eq!(catalan(6), 132);
        let b = planar_matchings(4);
        assert_eq!(b.iter().map(|m| m.to_parens()).collect::<Vec<_>>(), ["(())", "()()"]);
    }

    #[test]
    fn matching_moves() {
        let m = Matching::from_parens("(())").unwrap();
        assert_eq!(m.cap(1), None);
        assert_eq!(m.cap(0).unwrap().to_parens(), "()");
        assert_eq!(m.e(0).unwrap().to_parens(), "()()");
        assert_eq!(m.insert_pair(2).to_parens(), "((()))");
        assert_eq!(m.insert_pair(1).to_parens(), "(()())");
        assert_eq!(m.insert_pair(0).to_parens(), "()(())");
    }

    fn key_of(m: &Matching) -> Key {
        (0..m.width()).filter(|&i| m.partner(i) > i).fold(0, |k, i| k | (1 << i))
    }

    #[test]
    fn packed_moves_match_partner_arrays() {
        for w in (2..=10).step_by(2) {
            for m in planar_matchings(w) {
                let k = key_of(&m);
                assert_eq!(key_to_matching(k, w), m);
                for p in 0..=w {
                    assert_eq!(key_to_matching(insert_pair(k, p), w + 2), m.insert_pair(p));
                }
                for p in 0..w - 1 {
                    let capped = if adjacent(k, p) {
                        None
                    } else {
                        Some(key_to_matching(remove_pair(rewire(k, w, p), p), w - 2))
                    };
                    assert_eq!(capped, m.cap(p));
                    let e = if adjacent(k, p) {
                        None
                    } else {
                        let k2 = rewire(k, w, p);
                        Some(key_to_matching(with_bit(with_bit(k2, p, true), p + 1, false), w))
                    };
                    assert_eq!(e, m.e(p));
                }
            }
        }
        assert!(Matching::from_parens("())(").is_none());
    }

    #[test]
    fn unknots_give_powers_of_d() {
        let root = RootOfUnity::new(5).unwrap();
        let u = MorseLink::unknot();
        assert_eq!(contract(&u, &root).value, root.d());
        let two = u.disjoint_union(&u);
        assert_eq!(contract(&two, &root).value, root.d().pow(2));
        assert_eq!(contract(&MorseLink::empty(), &root).value, Cyclotomic::one(root.level()));
    }

    #[test]
    fn kink_is_a_unit_multiple() {
        let root = RootOfUnity::new(7).unwrap();
        let kink = MorseLink::plat_closure(&BraidWord::parse("1", 2).unwrap()).unwrap();
        let v = contract(&kink, &root).value;
        // a positive plat kink evaluates to -A^{-3} d
        let expect = -(&root.a_inv().pow(3) * &root.d());
        assert_eq!(v, expect);
    }

    #[test]
    fn prefix_state_of_identity_plat() {
        let root = RootOfUnity::new(5).unwrap();
        let d = MorseLink::plat_closure(&BraidWord::identity(4).unwrap()).unwrap();
        let st = contract_prefix(&d, 2, &root);
        assert_eq!(st.width, 4);
        let dense = st.to_dense(root.level());
        assert_eq!(dense[0], Cyclotomic::zero(root.level()));
        assert_eq!(dense[1], Cyclotomic::one(root.level()));
    }
}
