//! The fixed 63-class label set: digits, uppercase, lowercase, background.

/// Number of character classes (excluding background).
pub const NUM_CHAR_CLASSES: usize = 62;
/// Total classes including the background class.
pub const NUM_CLASSES: usize = 63;
/// Index of the background class (always last).
pub const BACKGROUND: usize = 62;

/// Ordered label set: `0`-`9`, `A`-`Z`, `a`-`z`, then `BACKGROUND`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelSet;

impl LabelSet {
    /// Class index for a character, if it is one of the 62 recognized ones.
    pub fn index_of(c: char) -> Option<usize> {
        match c {
            '0'..='9' => Some(c as usize - '0' as usize),
            'A'..='Z' => Some(10 + c as usize - 'A' as usize),
            'a'..='z' => Some(36 + c as usize - 'a' as usize),
            _ => None,
        }
    }

    /// Character for a class index; `None` for the background class.
    pub fn char_of(index: usize) -> Option<char> {
        match index {
            0..=9 => Some((b'0' + index as u8) as char),
            10..=35 => Some((b'A' + (index - 10) as u8) as char),
            36..=61 => Some((b'a' + (index - 36) as u8) as char),
            _ => None,
        }
    }

    /// Display name for any class index, including background.
    pub fn name_of(index: usize) -> String {
        match Self::char_of(index) {
            Some(c) => c.to_string(),
            None => "BACKGROUND".to_string(),
        }
    }

    /// All 63 class names in order.
    pub fn names() -> Vec<String> {
        (0..NUM_CLASSES).map(Self::name_of).collect()
    }

    /// True if every character of the word maps to a character class.
    pub fn word_is_representable(word: &str) -> bool {
        !word.is_empty() && word.chars().all(|c| Self::index_of(c).is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_roundtrip() {
        assert_eq!(LabelSet::index_of('0'), Some(0));
        assert_eq!(LabelSet::index_of('9'), Some(9));
        assert_eq!(LabelSet::index_of('A'), Some(10));
        assert_eq!(LabelSet::index_of('Z'), Some(35));
        assert_eq!(LabelSet::index_of('a'), Some(36));
        assert_eq!(LabelSet::index_of('z'), Some(61));
        assert_eq!(LabelSet::index_of('!'), None);
        for i in 0..NUM_CHAR_CLASSES {
            let c = LabelSet::char_of(i).unwrap();
            assert_eq!(LabelSet::index_of(c), Some(i));
        }
        assert_eq!(LabelSet::char_of(BACKGROUND), None);
        assert_eq!(LabelSet::name_of(BACKGROUND), "BACKGROUND");
        assert_eq!(LabelSet::names().len(), NUM_CLASSES);
    }
}
