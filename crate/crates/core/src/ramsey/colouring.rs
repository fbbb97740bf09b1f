use std::fmt;

/// Two-colour value, `0` or `1`.
pub type Colour = u8;

/// A symmetric 2-colouring of pairs of naturals. Only `i != j` is meaningful.
pub trait PairColouring {
    fn colour(&self, i: usize, j: usize) -> Colour;
}

impl<F: Fn(usize, usize) -> Colour> PairColouring for F {
    fn colour(&self, i: usize, j: usize) -> Colour {
        self(i, j)
    }
}

/// `c ≡ 0`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ZeroColouring;

impl PairColouring for ZeroColouring {
    fn colour(&self, _i: usize, _j: usize) -> Colour {
        0
    }
}

/// `c(i, j) = (i + j) mod 2`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ParityColouring;

impl PairColouring for ParityColouring {
    fn colour(&self, i: usize, j: usize) -> Colour {
        ((i + j) % 2) as Colour
    }
}

/// Low bit of a SplitMix64-style hash of `(seed, min(i, j), max(i, j))`.
#[derive(Debug, Clone, Copy)]
pub struct SeededColouring {
    pub seed: u64,
}

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl SeededColouring {
    pub fn new(seed: u64) -> Self {
        SeededColouring { seed }
    }
}

impl PairColouring for SeededColouring {
    fn colour(&self, i: usize, j: usize) -> Colour {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        let mut h = mix64(self.seed.wrapping_add(GOLDEN_GAMMA));
        h = mix64(h ^ (lo as u64).wrapping_add(GOLDEN_GAMMA));
        h = mix64(h ^ (hi as u64).wrapping_mul(GOLDEN_GAMMA));
        (h & 1) as Colour
    }
}

/// Explicit colouring of the pairs below `n`; every other pair has colour 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixColouring {
    n: usize,
    // rows[i][j] = c(i, j) for j < i
    rows: Vec<Vec<Colour>>,
}

impl MatrixColouring {
    /// `rows[i - 1]` holds `c(i, 0), ..., c(i, i - 1)` for `1 <= i < n`.
    pub fn new(n: usize, rows: Vec<Vec<Colour>>) -> Result<Self, String> {
        if rows.len() != n.saturating_sub(1) {
            return Err(format!(
                "expected {} rows for n = {n}, found {}",
                n.saturating_sub(1),
                rows.len()
            ));
        }
        let mut full = vec![Vec::new()];
        for (k, row) in rows.into_iter().enumerate() {
            let i = k + 1;
            if row.len() != i {
                return Err(format!("row {i} has {} entries, expected {i}", row.len()));
            }
            if let Some(bad) = row.iter().find(|&&b| b > 1) {
                return Err(format!("row {i} contains colour {bad}"));
            }
            full.push(row);
        }
        Ok(MatrixColouring { n, rows: full })
    }

    /// Parses the text format: first line `n`, then `n - 1` lines where line
    /// `i` lists the `i` bits `c(i, 0) .. c(i, i - 1)`. Whitespace between
    /// bits is optional.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut lines = text.lines();
        let n: usize = lines
            .next()
            .ok_or("empty matrix file")?
            .trim()
            .parse()
            .map_err(|e| format!("bad size line: {e}"))?;
        let mut rows = Vec::new();
        for (k, line) in lines.enumerate() {
            if k + 1 >= n.max(1) {
                if line.trim().is_empty() {
                    continue;
                }
                return Err(format!("unexpected line {} after {} rows", k + 2, n - 1));
            }
            let row = line
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    other => Err(format!("invalid character {other:?} in row {}", k + 1)),
                })
                .collect::<Result<Vec<Colour>, String>>()?;
            rows.push(row);
        }
        MatrixColouring::new(n, rows)
    }

    pub fn size(&self) -> usize {
        self.n
    }
}

impl PairColouring for MatrixColouring {
    fn colour(&self, i: usize, j: usize) -> Colour {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        if lo == hi || hi >= self.n {
            return 0;
        }
        self.rows[hi][lo]
    }
}

impl fmt::Display for MatrixColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for row in self.rows.iter().skip(1) {
            let bits: String = row.iter().map(|b| if *b == 0 { '0' } else { '1' }).collect();
            writeln!(f, "{bits}")?;
        }
        Ok(())
    }
}
