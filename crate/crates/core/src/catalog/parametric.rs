//! Groups named by a family and a parameter, for orders beyond the
//! enumerated catalog: `C<n>`, `D<n>`, `Q<n>` and `Z3:Z<p>^2`.

use crate::group::{is_prime, ActionSpec, Elem, GroupError, GroupTable, MAX_ORDER};

/// `Z3` acting on `Zp x Zp` by `t -> u -> t^-1 u^-1`, where `t` and `u` are
/// the standard generators. Element `s^i v` sits at index `i*p^2 + v`,
/// with `v = a*p + b` standing for `t^a u^b`; so `s` is index `p^2` and
/// `t` is index `p`.
pub fn z3_on_zp_squared(p: usize) -> Result<GroupTable, GroupError> {
    if !is_prime(p) || p < 5 {
        return Err(GroupError::InvalidAction(format!("{p} is not a prime of at least 5")));
    }
    let base = GroupTable::direct_product(&GroupTable::cyclic(p), &GroupTable::cyclic(p));
    let image: Vec<Elem> = (0..p * p)
        .map(|v| {
            let (a, b) = (v / p, v % p);
            // a t + b u maps to a u - b t - b u
            let na = (p - b) % p;
            let nb = (a + p - b) % p;
            Elem::new(na * p + nb)
        })
        .collect();
    let action = ActionSpec::new().with(Elem::new(1), image);
    Ok(GroupTable::semidirect(&GroupTable::cyclic(3), &base, &action)?.with_name(format!("Z3:Z{p}^2")))
}

/// A group from a family name, or `None` when the name is not one.
pub fn parametric_group(name: &str) -> Option<Result<GroupTable, GroupError>> {
    let upper = name.to_ascii_uppercase();
    if let Some(p) = upper.strip_prefix("Z3:Z").and_then(|r| r.strip_suffix("^2")) {
        return Some(p.parse().map_err(|_| GroupError::Empty).and_then(z3_on_zp_squared));
    }
    let (family, n) = upper.split_at(1.min(upper.len()));
    let n: usize = n.parse().ok()?;
    let ok = |valid: bool| if n > MAX_ORDER { Err(GroupError::TooLarge(n)) } else if valid { Ok(()) } else { Err(GroupError::Empty) };
    Some(match family {
        "C" | "Z" => ok(n >= 1).map(|_| GroupTable::cyclic(n).with_name(format!("C{n}"))),
        "D" => ok(n >= 2 && n.is_multiple_of(2)).map(|_| GroupTable::dihedral(n).with_name(format!("D{n}"))),
        "Q" => ok(n >= 4 && n.is_multiple_of(4)).map(|_| GroupTable::generalized_quaternion(n).with_name(format!("Q{n}"))),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_p_squared_shape() {
        for p in [5, 7] {
            let g = z3_on_zp_squared(p).unwrap();
            assert_eq!(g.order(), 3 * p * p);
            let (s, t) = (Elem::new(p * p), Elem::new(p));
            assert_eq!(g.element_order(s), 3);
            assert_eq!(g.element_order(t), p);
            assert!(g.generates(&[s, t]));
            assert_eq!(g.center().order(), 1);
        }
        assert!(z3_on_zp_squared(4).is_err());
    }

    #[test]
    fn families() {
        assert_eq!(parametric_group("D100").unwrap().unwrap().order(), 100);
        assert_eq!(parametric_group("c7").unwrap().unwrap().order(), 7);
        assert!(parametric_group("D7").unwrap().is_err());
        assert!(parametric_group("S4").is_none());
        assert_eq!(parametric_group("Z3:Z7^2").unwrap().unwrap().order(), 147);
    }
}
