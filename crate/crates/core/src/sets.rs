//! Sorted-set primitives over dense object indices.
//!
//! Extensions and neighborhoods are sorted `u32` arrays; two-pointer merges
//! over them are the dominant primitive of every checker. Each function takes
//! an `ops` tally that is bumped once per element comparison, so callers can
//! meter the work a check performed. Pass a scratch `&mut 0` when the count
//! is not needed.

/// Intersection of two sorted sets.
pub fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
    intersect_counted(a, b, &mut 0)
}

/// Intersection of two sorted sets, metering one op per comparison.
pub fn intersect_counted(a: &[u32], b: &[u32], ops: &mut u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        *ops += 1;
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Size of the intersection; the full merge is always run.
pub fn intersection_size(a: &[u32], b: &[u32], ops: &mut u64) -> usize {
    let (mut i, mut j) = (0, 0);
    let mut count = 0;
    while i < a.len() && j < b.len() {
        *ops += 1;
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Does the intersection reach `need` elements? Exits as soon as the answer
/// is forced either way: success once `need` hits, failure once the
/// remaining tails cannot close the gap.
pub fn intersection_at_least(a: &[u32], b: &[u32], need: usize, ops: &mut u64) -> bool {
    if need == 0 {
        return true;
    }
    let (mut i, mut j) = (0, 0);
    let mut count = 0;
    while i < a.len() && j < b.len() {
        if count + (a.len() - i).min(b.len() - j) < need {
            return false;
        }
        *ops += 1;
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                if count >= need {
                    return true;
                }
                i += 1;
                j += 1;
            }
        }
    }
    false
}

/// Is `sub` a subset of `sup`? Exits at the first element of `sub` missing
/// from `sup`.
pub fn is_subset(sub: &[u32], sup: &[u32], ops: &mut u64) -> bool {
    if sub.len() > sup.len() {
        return false;
    }
    let (mut i, mut j) = (0, 0);
    while i < sub.len() {
        if sup.len() - j < sub.len() - i {
            return false;
        }
        if j >= sup.len() {
            return false;
        }
        *ops += 1;
        match sup[j].cmp(&sub[i]) {
            std::cmp::Ordering::Less => j += 1,
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Greater => return false,
        }
    }
    true
}

/// Intersection of many sorted sets; empty input yields the empty set.
pub fn intersect_all(sets: &[&[u32]], ops: &mut u64) -> Vec<u32> {
    let Some(first) = sets.first() else {
        return Vec::new();
    };
    let mut acc = first.to_vec();
    for s in &sets[1..] {
        if acc.is_empty() {
            break;
        }
        acc = intersect_counted(&acc, s, ops);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_intersection() {
        assert_eq!(intersect(&[1, 3, 5], &[2, 3, 5, 9]), vec![3, 5]);
        assert_eq!(intersect(&[], &[1]), Vec::<u32>::new());
        let mut ops = 0;
        assert_eq!(intersection_size(&[1, 3, 5], &[2, 3, 5, 9], &mut ops), 2);
        assert!(ops > 0);
    }

    #[test]
    fn at_least_early_exit() {
        let mut ops = 0;
        // success is decided after two matches even though both sets go on
        assert!(intersection_at_least(
            &[1, 2, 100, 200],
            &[1, 2, 300, 400],
            2,
            &mut ops
        ));
        let full = {
            let mut o = 0;
            intersection_size(&[1, 2, 100, 200], &[1, 2, 300, 400], &mut o);
            o
        };
        assert!(ops < full);
        // impossible demands fail without scanning
        let mut ops = 0;
        assert!(!intersection_at_least(&[1], &[1], 2, &mut ops));
        assert_eq!(ops, 0);
    }

    #[test]
    fn subset_tests() {
        let mut ops = 0;
        assert!(is_subset(&[2, 4], &[1, 2, 3, 4], &mut ops));
        assert!(!is_subset(&[2, 5], &[1, 2, 3, 4], &mut ops));
        assert!(is_subset(&[], &[1], &mut ops));
        assert!(!is_subset(&[1, 2], &[1], &mut ops));
    }

    #[test]
    fn many_way() {
        let sets: Vec<&[u32]> = vec![&[1, 2, 3, 4], &[2, 3, 4], &[0, 2, 4]];
        assert_eq!(intersect_all(&sets, &mut 0), vec![2, 4]);
        assert_eq!(intersect_all(&[], &mut 0), Vec::<u32>::new());
    }
}
