use num::{BigInt, One};

use super::{Drawing, Point, Rational};

/// Places `n` nodes on the unit circle in id order at the rational points
/// `((1-t²)/(1+t²), 2t/(1+t²))` with `t_i = (2i+1-n)/2`.
///
/// The points are pairwise distinct and in convex position, so no node lies
/// on an edge; three chords can still be concurrent for unlucky graphs,
/// which [`super::validate_general_position`] reports.
pub fn circle_layout(n: usize) -> Drawing {
    let one = Rational::one();
    let coords = (0..n)
        .map(|i| {
            let t = Rational::new(BigInt::from(2 * i as i64 + 1 - n as i64), BigInt::from(2));
            let t2 = &t * &t;
            let den = &one + &t2;
            Point::new((&one - &t2) / &den, (&t + &t) / &den)
        })
        .collect();
    Drawing::new(coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::orientation;
    use std::cmp::Ordering;

    #[test]
    fn points_lie_on_the_circle_and_are_distinct() {
        let d = circle_layout(7);
        for (i, p) in d.points().iter().enumerate() {
            assert_eq!(p.norm_sq(), Rational::one());
            assert!(d.points()[..i].iter().all(|q| q != p));
        }
    }

    #[test]
    fn no_three_points_are_collinear() {
        let d = circle_layout(6);
        let p = d.points();
        for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    assert_ne!(orientation(&p[a], &p[b], &p[c]), Ordering::Equal);
                }
            }
        }
    }
}
