//! Brute-force reference lists: enumerate a family by its membership bound,
//! then sort with the order's comparator. Slow and obviously correct; every
//! generator is checked against it.

use crate::digit::Digit;
use crate::error::{Error, Result};
use crate::gray_orders::Order;
use crate::seq_model::{stat, Class};

/// Largest `n` enumerated without an explicit override.
pub const DEFAULT_GUARD: usize = 9;

/// All members of `class` of length `n`, unsorted.
///
/// Extends prefixes depth-first with every value in `0..=st(prefix) + 1`,
/// which works for descents too since every family is prefix closed.
pub fn members<D: Digit>(class: Class, n: usize) -> Result<Vec<Vec<D>>> {
    members_with_guard(class, n, DEFAULT_GUARD)
}

pub fn members_with_guard<D: Digit>(class: Class, n: usize, guard: usize) -> Result<Vec<Vec<D>>> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    if n > guard {
        return Err(Error::GuardExceeded { n, limit: guard });
    }
    if !D::fits(n - 1) {
        return Err(Error::DigitOverflow { max: n - 1 });
    }
    let st = class.statistic();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<D>> = vec![vec![D::zero()]];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == n {
            out.push(prefix);
            continue;
        }
        let bound = stat(st, &prefix)? + 1;
        for x in 0..=bound {
            let mut next = prefix.clone();
            next.push(D::from_index(x));
            stack.push(next);
        }
    }
    Ok(out)
}

/// The members of `class` of length `n`, sorted ascending in `order`.
pub fn oracle_list<D: Digit>(class: Class, n: usize, order: Order) -> Result<Vec<Vec<D>>> {
    oracle_list_with_guard(class, n, order, DEFAULT_GUARD)
}

/// Like [`oracle_list`] with a caller-chosen enumeration guard.
pub fn oracle_list_with_guard<D: Digit>(class: Class, n: usize, order: Order, guard: usize) -> Result<Vec<Vec<D>>> {
    let mut list = members_with_guard(class, n, guard)?;
    // equal lengths by construction
    list.sort_unstable_by(|s, t| order.compare(s, t).expect("uniform lengths"));
    Ok(list)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digit::compact;

    #[test]
    fn single_element_lists() {
        for class in Class::ALL {
            for order in Order::ALL {
                assert_eq!(oracle_list::<u8>(class, 1, order).unwrap(), vec![vec![0]]);
            }
        }
    }

    #[test]
    fn ascent_five_endpoints() {
        let list = oracle_list::<u8>(Class::Ascent, 5, Order::Rgc).unwrap();
        assert_eq!(list.len(), 53);
        assert_eq!(compact(&list[0]), "00000");
        assert_eq!(compact(list.last().unwrap()), "01000");
    }

    #[test]
    fn counts_at_five() {
        assert_eq!(oracle_list::<u8>(Class::Staircase, 5, Order::Rgc).unwrap().len(), 42);
        let rgf = oracle_list::<u8>(Class::Rgf, 5, Order::CoRgc).unwrap();
        assert_eq!(rgf.len(), 52);
        assert_eq!(compact(&rgf[0]), "01234");
    }

    #[test]
    fn guard_is_enforced() {
        assert_eq!(
            oracle_list::<u8>(Class::Ascent, 10, Order::Rgc),
            Err(Error::GuardExceeded { n: 10, limit: DEFAULT_GUARD })
        );
        assert!(oracle_list_with_guard::<u8>(Class::Descent, 10, Order::CoRgc, 10).is_ok());
        assert_eq!(oracle_list::<u8>(Class::Ascent, 0, Order::Rgc), Err(Error::ZeroLength));
    }
}
