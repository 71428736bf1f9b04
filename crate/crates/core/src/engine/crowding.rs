use std::borrow::Borrow;

use crate::objective::ObjectiveVector;

/// Crowding distance of every member of `set`.
///
/// Per objective, members are sorted by descending value; ties keep input
/// order. Both ends of each sort get `+inf`. An interior member adds the
/// gap between its two sort neighbours divided by the gap between the two
/// ends; when the ends are equal the objective contributes 0 to interior
/// members.
pub fn crowding_distance<V: Borrow<ObjectiveVector>>(set: &[V]) -> Vec<f64> {
    let len = set.len();
    let mut distance = vec![0.0; len];
    if len == 0 {
        return distance;
    }
    let m = set[0].borrow().len();
    let mut order: Vec<usize> = Vec::with_capacity(len);
    for objective in 0..m {
        let value = |i: usize| set[i].borrow().values()[objective];
        order.clear();
        order.extend(0..len);
        order.sort_by_key(|&i| std::cmp::Reverse(value(i)));

        let first = order[0];
        let last = order[len - 1];
        distance[first] = f64::INFINITY;
        distance[last] = f64::INFINITY;

        let range = value(first) - value(last);
        if range == 0 {
            continue;
        }
        let range = f64::from(range);
        for w in order.windows(3) {
            let gap = value(w[0]) - value(w[2]);
            distance[w[1]] += f64::from(gap) / range;
        }
    }
    distance
}

pub fn count_positive(distances: &[f64]) -> usize {
    distances.iter().filter(|&&d| d > 0.0).count()
}
