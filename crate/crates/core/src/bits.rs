//! Little-endian `u64` masks: bit `i` stands for the integer `i`.

/// Largest window / Frobenius number representable with `u64` masks.
pub const MAX_WIDTH: u32 = 63;

/// Bits `1..k` (the open interval `(0,k)`).
#[inline]
pub fn open_mask(k: u32) -> u64 {
    debug_assert!(k <= MAX_WIDTH);
    if k <= 1 {
        0
    } else {
        ((1u64 << k) - 1) & !1
    }
}

/// Bits `1..=k` (the half-open interval `(0,k]`).
#[inline]
pub fn upto_mask(k: u32) -> u64 {
    debug_assert!(k <= MAX_WIDTH);
    ((1u64 << (k + 1)) - 1) & !1
}

/// Bits `0..=k`.
#[inline]
pub fn closed_mask(k: u32) -> u64 {
    debug_assert!(k <= MAX_WIDTH);
    (1u64 << (k + 1)) - 1
}

/// Image of `bits ∩ (0,k)` under `i -> k - i`.
#[inline]
pub fn reflect(bits: u64, k: u32) -> u64 {
    debug_assert!((1..=MAX_WIDTH).contains(&k));
    (bits & open_mask(k)).reverse_bits() >> (63 - k)
}

/// Iterator over set bit positions, ascending.
#[derive(Clone, Copy, Debug)]
pub struct Ones(pub u64);

impl Iterator for Ones {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Ones {}

/// Submasks of `set` in increasing numeric order (carry-rippler trick).
#[derive(Clone, Debug)]
pub struct Submasks {
    set: u64,
    next: Option<u64>,
}

impl Submasks {
    pub fn of(set: u64) -> Self {
        Submasks { set, next: Some(0) }
    }
}

impl Iterator for Submasks {
    type Item = u64;

    #[inline]
    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        let succ = cur.wrapping_sub(self.set) & self.set;
        self.next = if succ == 0 { None } else { Some(succ) };
        Some(cur)
    }
}

pub(crate) fn mask_from_elements<I: IntoIterator<Item = u32>>(elems: I) -> Option<u64> {
    let mut bits = 0u64;
    for e in elems {
        if e > MAX_WIDTH {
            return None;
        }
        bits |= 1 << e;
    }
    Some(bits)
}

pub(crate) fn join_elements(bits: u64) -> String {
    Ones(bits)
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub(crate) fn parse_elements(s: &str) -> Result<Vec<u32>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|e| format!("bad element {t:?}: {e}"))
        })
        .collect()
}
