//! Temperley–Lieb diagrams, the Kauffman bracket and Jones–Wenzl projectors.
//!
//! A diagram has `top` input points and `bottom` output points and is read
//! from top to bottom. Points are numbered `0..top` along the top edge and
//! `top..top + bottom` along the bottom edge, both left to right. The pairing
//! is stored as an involution. Closed loops never survive normalization: they
//! are turned into powers of `δ = -A² - A⁻²` on the coefficient.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::cyclo::CycloScalar;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanarDiagram {
    top: usize,
    bottom: usize,
    pairing: Vec<u16>,
}

impl PlanarDiagram {
    /// Builds a diagram from its arcs; every boundary point must appear exactly once.
    pub fn from_arcs(top: usize, bottom: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let n = top + bottom;
        let mut pairing = vec![u16::MAX; n];
        for &(x, y) in arcs {
            if x >= n || y >= n || x == y || pairing[x] != u16::MAX || pairing[y] != u16::MAX {
                return Err(Error::Precondition(format!("bad arc ({x}, {y})")));
            }
            pairing[x] = y as u16;
            pairing[y] = x as u16;
        }
        if pairing.contains(&u16::MAX) {
            return Err(Error::Precondition("unmatched boundary point".into()));
        }
        let d = PlanarDiagram {
            top,
            bottom,
            pairing,
        };
        if !d.is_planar() {
            return Err(Error::Precondition("arcs cross".into()));
        }
        Ok(d)
    }

    pub fn identity(n: usize) -> Self {
        let arcs: Vec<_> = (0..n).map(|i| (i, n + i)).collect();
        Self::from_arcs(n, n, &arcs).expect("identity is planar")
    }

    /// The generator `e_i`: a cap on strands `i, i+1` above a cup on the same strands.
    pub fn cup_cap(n: usize, i: usize) -> Self {
        assert!(i + 1 < n, "cup-cap position out of range");
        let mut arcs: Vec<_> = (0..n)
            .filter(|&k| k != i && k != i + 1)
            .map(|k| (k, n + k))
            .collect();
        arcs.push((i, i + 1));
        arcs.push((n + i, n + i + 1));
        Self::from_arcs(n, n, &arcs).expect("cup-cap is planar")
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn partner(&self, point: usize) -> usize {
        self.pairing[point] as usize
    }

    /// Position of a point on the boundary circle, walking clockwise.
    fn circle_position(&self, point: usize) -> usize {
        if point < self.top {
            point
        } else {
            self.top + self.bottom - 1 - (point - self.top)
        }
    }

    fn is_planar(&self) -> bool {
        let n = self.top + self.bottom;
        let mut by_pos = vec![0usize; n];
        for p in 0..n {
            by_pos[self.circle_position(p)] = p;
        }
        let mut stack: Vec<usize> = Vec::new();
        for &p in &by_pos {
            let partner = self.partner(p);
            if stack.last() == Some(&partner) {
                stack.pop();
            } else {
                stack.push(p);
            }
        }
        stack.is_empty()
    }

    /// Stacks `self` above `lower`; returns the result and the number of closed loops.
    pub fn compose(&self, lower: &PlanarDiagram) -> (PlanarDiagram, usize) {
        assert_eq!(self.bottom, lower.top, "arity mismatch in compose");
        let (n, k, m) = (self.top, self.bottom, lower.bottom);
        let mut seen = vec![false; k];
        let mut pairing = vec![u16::MAX; n + m];
        // Follows a path from an outer point until it exits again.
        let walk = |mut upper: bool, mut idx: usize, seen: &mut Vec<bool>| -> usize {
            loop {
                if upper {
                    let y = self.partner(idx);
                    if y < n {
                        return y;
                    }
                    seen[y - n] = true;
                    upper = false;
                    idx = y - n;
                } else {
                    let z = lower.partner(idx);
                    if z >= k {
                        return n + (z - k);
                    }
                    seen[z] = true;
                    upper = true;
                    idx = n + z;
                }
            }
        };
        for x in 0..n + m {
            if pairing[x] != u16::MAX {
                continue;
            }
            let end = if x < n {
                walk(true, x, &mut seen)
            } else {
                walk(false, k + (x - n), &mut seen)
            };
            pairing[x] = end as u16;
            pairing[end] = x as u16;
        }
        let mut loops = 0;
        for start in 0..k {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut cur = start;
            loop {
                seen[cur] = true;
                let y = self.partner(n + cur) - n;
                seen[y] = true;
                cur = lower.partner(y);
                if cur == start {
                    break;
                }
            }
        }
        (
            PlanarDiagram {
                top: n,
                bottom: m,
                pairing,
            },
            loops,
        )
    }

    pub fn tensor(&self, right: &PlanarDiagram) -> PlanarDiagram {
        let (n1, m1, n2, m2) = (self.top, self.bottom, right.top, right.bottom);
        let left_map = |p: usize| if p < n1 { p } else { n1 + n2 + (p - n1) };
        let right_map = |p: usize| {
            if p < n2 {
                n1 + p
            } else {
                n1 + n2 + m1 + (p - n2)
            }
        };
        let mut pairing = vec![0u16; n1 + n2 + m1 + m2];
        for p in 0..n1 + m1 {
            pairing[left_map(p)] = left_map(self.partner(p)) as u16;
        }
        for p in 0..n2 + m2 {
            pairing[right_map(p)] = right_map(right.partner(p)) as u16;
        }
        PlanarDiagram {
            top: n1 + n2,
            bottom: m1 + m2,
            pairing,
        }
    }

    /// Vertical reflection: inputs become outputs.
    pub fn flip(&self) -> PlanarDiagram {
        let (n, m) = (self.top, self.bottom);
        let map = |p: usize| if p < n { m + p } else { p - n };
        let mut pairing = vec![0u16; n + m];
        for p in 0..n + m {
            pairing[map(p)] = map(self.partner(p)) as u16;
        }
        PlanarDiagram {
            top: m,
            bottom: n,
            pairing,
        }
    }

    /// Loops created by joining top point `i` to bottom point `i` around the side.
    pub fn closure_loops(&self) -> usize {
        assert_eq!(self.top, self.bottom, "closure needs a square diagram");
        let n = self.top;
        let mut seen = vec![false; 2 * n];
        let mut loops = 0;
        for start in 0..2 * n {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            loop {
                seen[p] = true;
                let q = self.partner(p);
                seen[q] = true;
                p = if q < n { q + n } else { q - n };
                if p == start || seen[p] {
                    break;
                }
            }
        }
        loops
    }
}

impl fmt::Debug for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}:", self.top, self.bottom)?;
        for p in 0..self.top + self.bottom {
            let q = self.partner(p);
            if p < q {
                write!(f, " ({p} {q})")?;
            }
        }
        Ok(())
    }
}

/// The loop value `δ = -A² - A⁻²`.
pub fn loop_value(level: u32) -> CycloScalar {
    -(CycloScalar::a_power(level, 2) + CycloScalar::a_power(level, -2))
}

/// Formal linear combination of diagrams sharing one shape.
#[derive(Clone, PartialEq, Eq)]
pub struct SkeinElement {
    level: u32,
    top: usize,
    bottom: usize,
    terms: BTreeMap<PlanarDiagram, CycloScalar>,
}

impl SkeinElement {
    pub fn zero(level: u32, top: usize, bottom: usize) -> Self {
        SkeinElement {
            level,
            top,
            bottom,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(level: u32, d: PlanarDiagram) -> Self {
        Self::from_term(d, CycloScalar::one(level))
    }

    pub fn from_term(d: PlanarDiagram, c: CycloScalar) -> Self {
        let mut s = Self::zero(c.level(), d.top, d.bottom);
        s.add_term(d, c);
        s
    }

    pub fn identity(level: u32, n: usize) -> Self {
        Self::from_diagram(level, PlanarDiagram::identity(n))
    }

    /// The empty diagram scaled by `c`.
    pub fn scalar(c: CycloScalar) -> Self {
        Self::from_term(PlanarDiagram::identity(0), c)
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarDiagram, &CycloScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: &PlanarDiagram) -> CycloScalar {
        self.terms
            .get(d)
            .cloned()
            .unwrap_or_else(|| CycloScalar::zero(self.level))
    }

    fn add_term(&mut self, d: PlanarDiagram, c: CycloScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_shape(&self, other: &SkeinElement) -> Result<()> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        if (self.top, self.bottom) != (other.top, other.bottom) {
            return Err(Error::Arity(format!(
                "{}->{} vs {}->{}",
                self.top, self.bottom, other.top, other.bottom
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &SkeinElement) -> Result<SkeinElement> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SkeinElement) -> Result<SkeinElement> {
        self.add(&other.scale(&-CycloScalar::one(self.level)))
    }

    pub fn scale(&self, s: &CycloScalar) -> SkeinElement {
        let mut out = Self::zero(self.level, self.top, self.bottom);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), c * s);
        }
        out
    }

    /// Stacks `self` above `lower` (apply `self` first).
    pub fn compose(&self, lower: &SkeinElement) -> Result<SkeinElement> {
        if self.level != lower.level {
            return Err(Error::LevelMismatch(self.level, lower.level));
        }
        if self.bottom != lower.top {
            return Err(Error::Arity(format!(
                "cannot stack {} outputs on {} inputs",
                self.bottom, lower.top
            )));
        }
        let delta = loop_value(self.level);
        let mut powers = vec![CycloScalar::one(self.level)];
        let mut out = Self::zero(self.level, self.top, lower.bottom);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &lower.terms {
                let (d, loops) = d1.compose(d2);
                while powers.len() <= loops {
                    let next = powers.last().unwrap() * &delta;
                    powers.push(next);
                }
                out.add_term(d, &(c1 * c2) * &powers[loops]);
            }
        }
        Ok(out)
    }

    pub fn tensor(&self, right: &SkeinElement) -> Result<SkeinElement> {
        if self.level != right.level {
            return Err(Error::LevelMismatch(self.level, right.level));
        }
        let mut out = Self::zero(self.level, self.top + right.top, self.bottom + right.bottom);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &right.terms {
                out.add_term(d1.tensor(d2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn flip(&self) -> SkeinElement {
        let mut out = Self::zero(self.level, self.bottom, self.top);
        for (d, c) in &self.terms {
            out.add_term(d.flip(), c.clone());
        }
        out
    }

    /// Markov closure of a square element.
    pub fn closure(&self) -> Result<CycloScalar> {
        if self.top != self.bottom {
            return Err(Error::Arity("closure needs equal arities".into()));
        }
        let delta = loop_value(self.level);
        let mut acc = CycloScalar::zero(self.level);
        for (d, c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..d.closure_loops() {
                t *= &delta;
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Coefficient of the empty diagram of a `0 -> 0` element.
    pub fn evaluate(&self) -> Result<CycloScalar> {
        if self.top != 0 || self.bottom != 0 {
            return Err(Error::Arity("only closed elements evaluate".into()));
        }
        Ok(self.coefficient(&PlanarDiagram::identity(0)))
    }
}

impl fmt::Debug for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "SkeinElement {}->{} (r={})",
            self.top, self.bottom, self.level
        )?;
        for (d, c) in &self.terms {
            writeln!(f, "  ({c}) {d:?}")?;
        }
        Ok(())
    }
}

/// Positive crossing of strands `i, i+1` (0-based) among `n`: `A·id + A⁻¹·e_i`.
pub fn crossing(level: u32, n: usize, i: usize) -> Result<SkeinElement> {
    if i + 1 >= n {
        return Err(Error::Precondition(format!(
            "crossing position {i} needs at least {} strands",
            i + 2
        )));
    }
    let mut x = SkeinElement::from_term(PlanarDiagram::identity(n), CycloScalar::a_power(level, 1));
    x.add_term(
        PlanarDiagram::cup_cap(n, i),
        CycloScalar::a_power(level, -1),
    );
    Ok(x)
}

/// Mirror crossing, obtained by swapping `A` and `A⁻¹`.
pub fn mirror_crossing(level: u32, n: usize, i: usize) -> Result<SkeinElement> {
    if i + 1 >= n {
        return Err(Error::Precondition(format!(
            "crossing position {i} needs at least {} strands",
            i + 2
        )));
    }
    let mut x =
        SkeinElement::from_term(PlanarDiagram::identity(n), CycloScalar::a_power(level, -1));
    x.add_term(PlanarDiagram::cup_cap(n, i), CycloScalar::a_power(level, 1));
    Ok(x)
}

/// Jones–Wenzl projector on `n` strands.
#[derive(Clone, Debug)]
pub struct JwProjector {
    strands: usize,
    element: Arc<SkeinElement>,
}

impl JwProjector {
    pub fn strand_count(&self) -> usize {
        self.strands
    }

    pub fn element(&self) -> &SkeinElement {
        &self.element
    }
}

type JwCache = Mutex<HashMap<(u32, usize), Arc<SkeinElement>>>;

fn jw_cache() -> &'static JwCache {
    static CACHE: OnceLock<JwCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `p_n` by the Wenzl recursion. Requires `n < r`, where `[n] ≠ 0`.
pub fn jones_wenzl(level: u32, n: usize) -> Result<JwProjector> {
    if n as u32 >= level {
        return Err(Error::Precondition(format!(
            "quantum integer vanishes: jones_wenzl({n}) needs n < r = {level}"
        )));
    }
    if let Some(e) = jw_cache().lock().unwrap().get(&(level, n)) {
        return Ok(JwProjector {
            strands: n,
            element: e.clone(),
        });
    }
    let element = if n <= 1 {
        SkeinElement::identity(level, n)
    } else {
        let prev = jones_wenzl(level, n - 1)?;
        let ext = prev.element().tensor(&SkeinElement::identity(level, 1))?;
        let e = SkeinElement::from_diagram(level, PlanarDiagram::cup_cap(n, n - 2));
        // Δ_{n-2}/Δ_{n-1}, which is -[n-1]/[n] under the Kauffman loop value.
        let coeff = -(CycloScalar::quantum_int(level, n as i64 - 1)
            * CycloScalar::quantum_int(level, n as i64).inv()?);
        let middle = ext.compose(&e)?.compose(&ext)?;
        ext.sub(&middle.scale(&coeff))?
    };
    let element = Arc::new(element);
    jw_cache()
        .lock()
        .unwrap()
        .insert((level, n), element.clone());
    Ok(JwProjector {
        strands: n,
        element,
    })
}

/// Diagram `n -> n - 2k` capping strands `start..start + 2k` as nested arcs.
pub fn cap_bundle(n: usize, start: usize, k: usize) -> PlanarDiagram {
    assert!(start + 2 * k <= n);
    let mut arcs = Vec::new();
    for t in 0..start {
        arcs.push((t, n + t));
    }
    for s in 0..k {
        arcs.push((start + k - 1 - s, start + k + s));
    }
    for t in start + 2 * k..n {
        arcs.push((t, n + t - 2 * k));
    }
    PlanarDiagram::from_arcs(n, n - 2 * k, &arcs).expect("nested caps are planar")
}

/// Diagram `n -> n + 2k` with `k` nested cups inserted at `start`.
pub fn cup_bundle(n: usize, start: usize, k: usize) -> PlanarDiagram {
    cap_bundle(n + 2 * k, start, k).flip()
}

/// Bare arcs of the trivalent vertex `c -> a ⊗ b`, without projectors.
pub fn split_arcs(a: usize, b: usize, c: usize) -> PlanarDiagram {
    let inner = (a + b - c) / 2;
    let left = a - inner;
    let mut arcs = Vec::new();
    for t in 0..left {
        arcs.push((t, c + t));
    }
    for s in 0..inner {
        arcs.push((c + a - 1 - s, c + a + s));
    }
    for t in 0..c - left {
        arcs.push((left + t, c + a + inner + t));
    }
    PlanarDiagram::from_arcs(c, a + b, &arcs).expect("vertex arcs are planar")
}

fn triple_ok(a: usize, b: usize, c: usize) -> bool {
    (a + b + c).is_multiple_of(2) && a <= b + c && b <= a + c && c <= a + b
}

/// Trivalent vertex `V_c -> V_a ⊗ V_b`: `p_c`, then the arcs, then `p_a ⊗ p_b`.
pub fn split_vertex(level: u32, a: usize, b: usize, c: usize) -> Result<SkeinElement> {
    if !triple_ok(a, b, c) {
        return Err(Error::Inadmissible(a as u32, b as u32, c as u32));
    }
    let pc = jones_wenzl(level, c)?;
    let pab = jones_wenzl(level, a)?
        .element()
        .tensor(jones_wenzl(level, b)?.element())?;
    pc.element()
        .compose(&SkeinElement::from_diagram(level, split_arcs(a, b, c)))?
        .compose(&pab)
}

/// Trivalent vertex `V_a ⊗ V_b -> V_c`, the vertical mirror of [`split_vertex`].
pub fn merge_vertex(level: u32, a: usize, b: usize, c: usize) -> Result<SkeinElement> {
    Ok(split_vertex(level, a, b, c)?.flip())
}

/// Braid moving a bundle of `a` strands over a bundle of `b` strands to its right.
pub fn bundle_crossing(level: u32, a: usize, b: usize, mirror: bool) -> Result<SkeinElement> {
    let n = a + b;
    let mut x = SkeinElement::identity(level, n);
    // Move strand a-1 right across b strands, then a-2, and so on.
    for s in (0..a).rev() {
        for step in 0..b {
            let pos = s + step;
            let c = if mirror {
                mirror_crossing(level, n, pos)?
            } else {
                crossing(level, n, pos)?
            };
            x = x.compose(&c)?;
        }
    }
    Ok(x)
}

/// `id_left ⊗ x ⊗ id_right`.
pub fn padded(level: u32, left: usize, x: &SkeinElement, right: usize) -> Result<SkeinElement> {
    SkeinElement::identity(level, left)
        .tensor(x)?
        .tensor(&SkeinElement::identity(level, right))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(r: u32, n: i64) -> CycloScalar {
        CycloScalar::a_power(r, n)
    }

    #[test]
    fn identity_composes_to_identity() {
        let r = 4;
        let id = SkeinElement::identity(r, 3);
        assert_eq!(id.compose(&id).unwrap(), id);
    }

    #[test]
    fn cap_after_cup_is_a_loop() {
        let r = 5;
        let cup = SkeinElement::from_diagram(r, cup_bundle(0, 0, 1));
        let cap = SkeinElement::from_diagram(r, cap_bundle(2, 0, 1));
        let loop_ = cup.compose(&cap).unwrap();
        assert_eq!(loop_.evaluate().unwrap(), loop_value(r));
    }

    #[test]
    fn e1_squared_is_delta_e1() {
        let r = 6;
        let e = SkeinElement::from_diagram(r, PlanarDiagram::cup_cap(2, 0));
        assert_eq!(e.compose(&e).unwrap(), e.scale(&loop_value(r)));
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let x = SkeinElement::identity(3, 2);
        let y = SkeinElement::identity(3, 3);
        assert!(matches!(x.compose(&y), Err(Error::Arity(_))));
    }

    #[test]
    fn crossing_arcs_are_rejected() {
        assert!(PlanarDiagram::from_arcs(2, 2, &[(0, 3), (1, 2)]).is_err());
    }

    #[test]
    fn second_projector_matches_one_wenzl_step() {
        let r = 5;
        let p2 = jones_wenzl(r, 2).unwrap();
        let e = SkeinElement::from_diagram(r, PlanarDiagram::cup_cap(2, 0));
        let expected = SkeinElement::identity(r, 2)
            .sub(&e.scale(&loop_value(r).inv().unwrap()))
            .unwrap();
        assert_eq!(p2.element(), &expected);
    }

    #[test]
    fn projectors_are_idempotent_and_cap_free() {
        for r in 2..=6u32 {
            for n in 0..r as usize {
                let p = jones_wenzl(r, n).unwrap();
                let el = p.element();
                assert_eq!(&el.compose(el).unwrap(), el, "r={r} n={n}");
                for i in 0..n.saturating_sub(1) {
                    let e = SkeinElement::from_diagram(r, PlanarDiagram::cup_cap(n, i));
                    assert!(el.compose(&e).unwrap().is_empty(), "r={r} n={n} i={i}");
                    assert!(e.compose(el).unwrap().is_empty());
                }
                let closed = el.closure().unwrap();
                let expected =
                    CycloScalar::sign(r, n as i64) * CycloScalar::quantum_int(r, n as i64 + 1);
                assert_eq!(closed, expected, "r={r} n={n}");
            }
        }
    }

    #[test]
    fn projector_beyond_level_is_refused() {
        assert!(matches!(jones_wenzl(3, 3), Err(Error::Precondition(_))));
        assert!(CycloScalar::quantum_int(3, 3).is_zero());
    }

    #[test]
    fn kink_gives_minus_a_cubed() {
        let r = 7;
        let cup = SkeinElement::from_diagram(r, cup_bundle(1, 1, 1));
        let cap = SkeinElement::from_diagram(r, cap_bundle(3, 1, 1));
        let kink = cup
            .compose(&crossing(r, 3, 0).unwrap())
            .unwrap()
            .compose(&cap)
            .unwrap();
        assert_eq!(kink, SkeinElement::identity(r, 1).scale(&-a(r, 3)));
    }

    #[test]
    fn crossing_and_mirror_are_inverse() {
        let r = 5;
        let x = crossing(r, 2, 0).unwrap();
        let y = mirror_crossing(r, 2, 0).unwrap();
        assert_eq!(x.compose(&y).unwrap(), SkeinElement::identity(r, 2));
    }
}
