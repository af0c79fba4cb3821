use crate::index::{EdgeLabel, PlstEdge};
use crate::pv::{PvStr, PvSym};

/// A run of retained positions of `prev(T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chunk {
    /// Original 1-based position of `symbols[0]`.
    pub start: usize,
    pub symbols: Vec<PvSym>,
}

impl Chunk {
    pub fn end(&self) -> usize {
        self.start + self.symbols.len() - 1
    }
}

/// The parts of `prev(T)` that some text-reference label points into.
/// Positions keep their original coordinates, so `⟨T'⟩_k` can be evaluated
/// exactly.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RefText {
    chunks: Vec<Chunk>,
}

impl RefText {
    /// Chunks must be sorted, disjoint and non-adjacent.
    pub fn from_chunks(chunks: Vec<Chunk>) -> Option<Self> {
        let ok = chunks.iter().all(|c| !c.symbols.is_empty() && c.start >= 1)
            && chunks.windows(2).all(|w| w[0].end() + 1 < w[1].start);
        ok.then_some(Self { chunks })
    }

    /// Retains exactly the positions covered by some text-reference label.
    #[allow(clippy::needless_range_loop)]
    pub fn from_labels(edges: &[PlstEdge], pv_text: &PvStr) -> Self {
        let n = pv_text.len();
        // Difference array over positions 1..=n.
        let mut cover = vec![0i64; n + 2];
        for e in edges {
            if let EdgeLabel::TextRef { start, end, .. } = e.label {
                cover[start as usize] += 1;
                cover[end as usize + 1] -= 1;
            }
        }
        let mut chunks: Vec<Chunk> = Vec::new();
        let mut running = 0i64;
        for t in 1..=n {
            running += cover[t];
            if running > 0 {
                match chunks.last_mut() {
                    Some(c) if c.end() + 1 == t => c.symbols.push(pv_text.at(t)),
                    _ => chunks.push(Chunk {
                        start: t,
                        symbols: vec![pv_text.at(t)],
                    }),
                }
            }
        }
        Self { chunks }
    }

    pub fn chunks(&self) -> &[Chunk] {
        &self.chunks
    }

    /// Total number of retained symbols, `|T'|`.
    pub fn len(&self) -> usize {
        self.chunks.iter().map(|c| c.symbols.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.chunks.is_empty()
    }

    /// Chunk index and offset holding original position `t`.
    pub fn translate(&self, t: usize) -> Option<(usize, usize)> {
        let idx = self
            .chunks
            .partition_point(|c| c.start <= t)
            .checked_sub(1)?;
        let c = &self.chunks[idx];
        (t <= c.end()).then(|| (idx, t - c.start))
    }

    /// The raw `prev(T)` symbol at original position `t`, if retained.
    pub fn symbol_at(&self, t: usize) -> Option<PvSym> {
        self.translate(t)
            .map(|(c, off)| self.chunks[c].symbols[off])
    }

    /// The retained symbols in text order, i.e. `T'` itself.
    pub fn concatenated(&self) -> PvStr {
        self.chunks
            .iter()
            .flat_map(|c| c.symbols.iter().copied())
            .collect()
    }
}
