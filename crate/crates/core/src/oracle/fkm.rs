//! Lyndon words and the classical least de Bruijn sequence.
//!
//! Lyndon words over `{0, …, k−1}` of length at most `n` are produced in
//! lexicographic order by the Fredricksen–Kessler–Maiorana successor rule:
//! repeat the current word up to length `n`, drop trailing maximal symbols,
//! and increment the last symbol. Concatenating those whose length divides
//! `n` yields the lexicographically least de Bruijn sequence of span `n`.

/// Lyndon words over `0..k` with length at most `max_len`, in lexicographic
/// order.
pub fn lyndon_words(k: u8, max_len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if k == 0 || max_len == 0 {
        return out;
    }
    let mut w = vec![0u8];
    loop {
        out.push(w.clone());
        let period = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&(k - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// The least de Bruijn sequence of span `span` over `0..k`.
pub fn fkm_sequence(k: u8, span: usize) -> Vec<u8> {
    lyndon_words(k, span)
        .into_iter()
        .filter(|w| span.is_multiple_of(w.len()))
        .flatten()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u8]) -> String {
        v.iter().map(|d| char::from(b'0' + d)).collect()
    }

    #[test]
    fn binary_lyndon_words() {
        let words: Vec<String> = lyndon_words(2, 3).iter().map(|w| s(w)).collect();
        assert_eq!(words, ["0", "001", "01", "011", "1"]);
    }

    #[test]
    fn small_sequences() {
        assert_eq!(s(&fkm_sequence(2, 1)), "01");
        assert_eq!(s(&fkm_sequence(2, 2)), "0011");
        assert_eq!(s(&fkm_sequence(2, 3)), "00010111");
        assert_eq!(s(&fkm_sequence(3, 2)), "001021122");
    }

    #[test]
    fn lyndon_counts() {
        // necklace-polynomial values: 2, 1, 2, 3, 6, 9, 18 binary Lyndon words of length 1..=7
        let words = lyndon_words(2, 7);
        let counts: Vec<usize> = (1..=7)
            .map(|l| words.iter().filter(|w| w.len() == l).count())
            .collect();
        assert_eq!(counts, [2, 1, 2, 3, 6, 9, 18]);
    }

    #[test]
    fn unary_alphabet() {
        assert_eq!(fkm_sequence(1, 4), vec![0]);
    }
}
