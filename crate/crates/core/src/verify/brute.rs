use crate::algebra::Integer;
use crate::family::{Family, Params, Tuple};

use super::enumerate::BoxWalk;

/// Scans every parameter vector with entries in `[-box_size, box_size]` in
/// lexicographic order and returns the first whose evaluation is `target`.
///
/// Coordinates that are not free integers (the triple variant, the quintuple
/// sign) are scanned over the same box and invalid values are skipped.
pub fn brute_force_param_search(family: Family, target: &Tuple, box_size: u32) -> Option<Params> {
    let b = i64::from(box_size);
    let dims = family.param_fields().len();
    // the leading selector of these two families lives outside [-b, b] when b = 0
    let (lo, hi) = match family {
        Family::Triple | Family::Quintuple => (-b.max(2), b.max(2)),
        _ => (-b, b),
    };
    BoxWalk::new(dims, lo, hi, None)
        .filter(|v| v[1..].iter().all(|x| x.abs() <= b))
        .find_map(|v| {
            let flat: Vec<Integer> = v.iter().map(|&x| Integer::from(x)).collect();
            let p = family.params_from_flat(&flat).ok()?;
            (p.eval() == *target).then_some(p)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn examples() {
        let zero = Family::Uv2.tuple_from_flat(vec![int(0); 4]).unwrap();
        let p = brute_force_param_search(Family::Uv2, &zero, 0).unwrap();
        assert_eq!(p.to_flat(), vec![int(0); 5]);

        let target = Family::Uv2.tuple_from_flat([11, -2, 5, 25].map(int).to_vec()).unwrap();
        let p = brute_force_param_search(Family::Uv2, &target, 4).unwrap();
        assert_eq!(p.eval(), target);
        assert!(p.to_flat() <= [1, 1, 2, 3, 4].map(int).to_vec());

        let q = Family::Descartes.tuple_from_flat([1, 1, 0, 0].map(int).to_vec()).unwrap();
        let p = brute_force_param_search(Family::Descartes, &q, 1).unwrap();
        // (1; -1, 0, 0, 0) precedes (1; 1, 0, 0, 0) and evaluates to the same quadruple
        assert_eq!(p.to_flat(), [1, -1, 0, 0, 0].map(int).to_vec());
        assert_eq!(Family::Descartes.params_from_flat(&[1, 1, 0, 0, 0].map(int)).unwrap().eval(), q);

        let t = Family::Triple.tuple_from_flat([4, 3, 5].map(int).to_vec()).unwrap();
        assert_eq!(brute_force_param_search(Family::Triple, &t, 2).unwrap().eval(), t);
        let big = Family::Triple.tuple_from_flat([40, 30, 50].map(int).to_vec()).unwrap();
        assert!(brute_force_param_search(Family::Triple, &big, 2).is_none());
    }
}
