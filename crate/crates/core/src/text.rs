/// Canonical form of a mention surface: internal whitespace runs collapse to a
/// single space, leading/trailing whitespace is dropped, and the result is
/// lower-cased. Applied identically when dictionaries are built and queried.
pub fn normalize_mention(surface: &str) -> String {
    let mut out = String::with_capacity(surface.len());
    for word in surface.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(word);
    }
    out.to_lowercase()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn folds_case_and_whitespace() {
        assert_eq!(normalize_mention("Sun"), "sun");
        assert_eq!(normalize_mention("  The   Sun\t"), "the sun");
        assert_eq!(normalize_mention("New\u{00a0}York"), "new york");
        assert_eq!(normalize_mention(""), "");
    }

    #[test]
    fn idempotent() {
        for s in ["Sun Microsystems", " a  B c ", "ÉCOLE  normale"] {
            let once = normalize_mention(s);
            assert_eq!(normalize_mention(&once), once);
        }
    }
}
