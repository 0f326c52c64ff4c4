use std::sync::atomic::{AtomicUsize, Ordering};

/// Hard budget on S-pair reductions per Groebner run. Exceeding it aborts
/// with a resource error rather than truncating silently.
static MAX_SPAIRS: AtomicUsize = AtomicUsize::new(200_000);

pub fn max_spairs() -> usize {
    MAX_SPAIRS.load(Ordering::Relaxed)
}

pub fn set_max_spairs(n: usize) {
    MAX_SPAIRS.store(n.max(1), Ordering::Relaxed);
}

/// Apply `FOLIA_LIMITS` of the shape `max_spairs=N` (comma-separated keys
/// tolerated, unknown keys ignored). Returns the parsed S-pair limit, if any.
pub fn apply_env(value: &str) -> Option<usize> {
    let mut parsed = None;
    for part in value.split(',') {
        let mut it = part.splitn(2, '=');
        let key = it.next().unwrap_or("").trim();
        let val = it.next().unwrap_or("").trim();
        if key == "max_spairs" {
            if let Ok(n) = val.parse::<usize>() {
                set_max_spairs(n);
                parsed = Some(n);
            }
        }
    }
    parsed
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn env_parsing() {
        let before = max_spairs();
        assert_eq!(apply_env("max_spairs=5000"), Some(5000));
        assert_eq!(max_spairs(), 5000);
        assert_eq!(apply_env("unknown=1"), None);
        set_max_spairs(before);
    }
}
