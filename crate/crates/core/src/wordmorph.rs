//! Words, anchored windows, and free-monoid morphisms over {A, B, C}.
//!
//! A [`Window`] is a finite view of a biinfinite word: its letter at
//! sequence position i represents index `start + i` of the underlying
//! two-sided word. Morphisms act on windows with the image of the letter at
//! index 0 anchored so that its first letter sits at output index 0; images
//! of letters at negative indices occupy the negative output indices ending
//! at -1. This anchoring convention is what makes forward-orbit comparisons
//! against a derived transformation line up index by index, and it is the
//! reason windows fed to a morphism must contain index 0.

use std::fmt;
use std::str::FromStr;

use crate::e3n::IntMatrix3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::A, Letter::B, Letter::C];

    pub fn index(self) -> usize {
        match self {
            Letter::A => 0,
            Letter::B => 1,
            Letter::C => 2,
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'A' => Some(Letter::A),
            'B' => Some(Letter::B),
            'C' => Some(Letter::C),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
        }
    }
}

impl fmt::Display for Letter {
    fmt_as_char!();
}

macro_rules! fmt_as_char {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{}", self.as_char())
        }
    };
}
use fmt_as_char;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordMorphError {
    /// Morphisms must be non-erasing; an empty image would break the
    /// window-anchoring contract.
    EmptyImage(Letter),
    EmptyWindow,
    /// Window operations that re-anchor require the window to contain
    /// index 0.
    WindowMissingOrigin { start: i64, end: i64 },
    Parse { position: usize, message: String },
    /// The morphism family φ_k is defined for k ≥ 1 only.
    ZeroK,
}

impl fmt::Display for WordMorphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordMorphError::EmptyImage(l) => write!(f, "image of {l} is empty"),
            WordMorphError::EmptyWindow => write!(f, "window must be nonempty"),
            WordMorphError::WindowMissingOrigin { start, end } => {
                write!(f, "window [{start}, {end}] does not contain index 0")
            }
            WordMorphError::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
            WordMorphError::ZeroK => write!(f, "k must be >= 1"),
        }
    }
}

impl std::error::Error for WordMorphError {}

/// A finite (possibly empty) word over {A, B, C}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordMorphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(i, c)| {
                Letter::from_char(c).ok_or(WordMorphError::Parse {
                    position: i,
                    message: format!("invalid letter {c:?}, expected A, B or C"),
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// A nonempty finite view of a biinfinite word, anchored at `start`:
/// sequence position i holds the letter at biinfinite index `start + i`.
///
/// Text format: `<start>:<letters>`, e.g. `-3:CACB`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    start: i64,
    word: Word,
}

impl Window {
    pub fn new(start: i64, word: Word) -> Result<Self, WordMorphError> {
        if word.is_empty() {
            return Err(WordMorphError::EmptyWindow);
        }
        Ok(Window { start, word })
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    /// Index of the last letter, inclusive.
    pub fn end(&self) -> i64 {
        self.start + self.word.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn letter_at(&self, index: i64) -> Option<Letter> {
        if index < self.start || index > self.end() {
            return None;
        }
        Some(self.word.letters()[(index - self.start) as usize])
    }

    pub fn contains_index(&self, index: i64) -> bool {
        index >= self.start && index <= self.end()
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, self.word)
    }
}

impl FromStr for Window {
    type Err = WordMorphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (start_text, letters) = s.split_once(':').ok_or(WordMorphError::Parse {
            position: s.len(),
            message: "expected '<start>:<letters>'".to_string(),
        })?;
        let start: i64 = start_text.trim().parse().map_err(|_| WordMorphError::Parse {
            position: 0,
            message: format!("invalid start index {start_text:?}"),
        })?;
        let word: Word = letters.parse().map_err(|e| match e {
            WordMorphError::Parse { position, message } => WordMorphError::Parse {
                position: position + start_text.len() + 1,
                message,
            },
            other => other,
        })?;
        Window::new(start, word)
    }
}

/// A non-erasing morphism of the free monoid {A, B, C}*, determined by the
/// images of the three letters.
///
/// Text format: `A=<word>;B=<word>;C=<word>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    images: [Word; 3],
}

impl Morphism {
    pub fn new(image_a: Word, image_b: Word, image_c: Word) -> Result<Self, WordMorphError> {
        let images = [image_a, image_b, image_c];
        for l in Letter::ALL {
            if images[l.index()].is_empty() {
                return Err(WordMorphError::EmptyImage(l));
            }
        }
        Ok(Morphism { images })
    }

    pub fn identity() -> Self {
        Morphism {
            images: [
                Word(vec![Letter::A]),
                Word(vec![Letter::B]),
                Word(vec![Letter::C]),
            ],
        }
    }

    pub fn image(&self, l: Letter) -> &Word {
        &self.images[l.index()]
    }

    /// Applies the morphism to a finite word by concatenating letter images.
    pub fn apply(&self, w: &Word) -> Word {
        let total: usize = w.letters().iter().map(|&l| self.image(l).len()).sum();
        let mut out = Vec::with_capacity(total);
        for &l in w.letters() {
            out.extend_from_slice(self.image(l).letters());
        }
        Word(out)
    }

    /// Applies the morphism to a window, re-anchoring so that the image of
    /// the letter at index 0 starts at output index 0. The window must
    /// contain index 0; images of the letters at negative input indices fill
    /// the output indices ending at -1.
    pub fn apply_window(&self, w: &Window) -> Result<Window, WordMorphError> {
        if !w.contains_index(0) {
            return Err(WordMorphError::WindowMissingOrigin {
                start: w.start(),
                end: w.end(),
            });
        }
        let negative_len: usize = w
            .word()
            .letters()
            .iter()
            .take((-w.start()) as usize)
            .map(|&l| self.image(l).len())
            .sum();
        let word = self.apply(w.word());
        Window::new(-(negative_len as i64), word)
    }

    /// Composition `self ∘ inner`: the result maps x to `self(inner(x))`.
    pub fn compose(&self, inner: &Morphism) -> Morphism {
        Morphism {
            images: [
                self.apply(inner.image(Letter::A)),
                self.apply(inner.image(Letter::B)),
                self.apply(inner.image(Letter::C)),
            ],
        }
    }

    /// Incidence matrix: entry (i, j) counts occurrences of letter j in the
    /// image of letter i, rows and columns ordered A, B, C. Note the
    /// composition rule reverses order: the matrix of `outer ∘ inner` is the
    /// matrix of `inner` times the matrix of `outer`.
    pub fn incidence_matrix(&self) -> IntMatrix3 {
        let mut rows = [[0i64; 3]; 3];
        for src in Letter::ALL {
            for &l in self.image(src).letters() {
                rows[src.index()][l.index()] += 1;
            }
        }
        IntMatrix3::from_i64(rows).expect("letter counts are non-negative")
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A={};B={};C={}",
            self.image(Letter::A),
            self.image(Letter::B),
            self.image(Letter::C)
        )
    }
}

impl FromStr for Morphism {
    type Err = WordMorphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(';').collect();
        if parts.len() != 3 {
            return Err(WordMorphError::Parse {
                position: 0,
                message: "expected 'A=<word>;B=<word>;C=<word>'".to_string(),
            });
        }
        let mut images = Vec::with_capacity(3);
        let mut offset = 0usize;
        for (part, expected) in parts.iter().zip(["A=", "B=", "C="]) {
            let body = part.strip_prefix(expected).ok_or(WordMorphError::Parse {
                position: offset,
                message: format!("expected {expected:?}"),
            })?;
            let word: Word = body.parse().map_err(|e| match e {
                WordMorphError::Parse { position, message } => WordMorphError::Parse {
                    position: offset + expected.len() + position,
                    message,
                },
                other => other,
            })?;
            images.push(word);
            offset += part.len() + 1;
        }
        let mut it = images.into_iter();
        Morphism::new(it.next().unwrap(), it.next().unwrap(), it.next().unwrap())
    }
}

/// Parikh vector: counts of A, B, C in a word.
pub fn parikh(w: &Word) -> [u64; 3] {
    let mut counts = [0u64; 3];
    for &l in w.letters() {
        counts[l.index()] += 1;
    }
    counts
}

/// The letter-reversing morphism A ↦ C, B ↦ B, C ↦ A. It is an involution
/// and its incidence matrix is the antidiagonal permutation.
pub fn xi() -> Morphism {
    Morphism {
        images: [
            Word(vec![Letter::C]),
            Word(vec![Letter::B]),
            Word(vec![Letter::A]),
        ],
    }
}

/// The morphism family A ↦ B(CB)^(k-1), B ↦ B(CB)^k, C ↦ CAC, defined for
/// k ≥ 1.
pub fn phi_k(k: u32) -> Result<Morphism, WordMorphError> {
    if k == 0 {
        return Err(WordMorphError::ZeroK);
    }
    let b_cb = |reps: u32| {
        let mut w = vec![Letter::B];
        for _ in 0..reps {
            w.push(Letter::C);
            w.push(Letter::B);
        }
        Word(w)
    };
    Ok(Morphism {
        images: [
            b_cb(k - 1),
            b_cb(k),
            Word(vec![Letter::C, Letter::A, Letter::C]),
        ],
    })
}
