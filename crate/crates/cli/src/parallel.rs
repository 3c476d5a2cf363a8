//! Hochster sums split over contiguous mask ranges, one per thread.

use std::collections::BTreeMap;
use std::thread;

use polydouble::macohom::HochsterEngine;
use polydouble::{BettiTable, FieldTag, HomologyError, SimplicialComplex, SpaceKind};

/// Same table as [`polydouble::macohom::hochster_betti`] for every `threads`.
pub fn hochster_betti(
    k: &SimplicialComplex,
    space: SpaceKind,
    field: FieldTag,
    threads: usize,
) -> Result<BettiTable, HomologyError> {
    let engine = HochsterEngine::new(k, space, field)?;
    let total = engine.subset_count();
    let threads = (threads.max(1) as u64).min(total);
    if threads == 1 {
        return Ok(engine.run());
    }
    let chunk = total.div_ceil(threads);
    let parts: Vec<BTreeMap<usize, u64>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|i| {
                let engine = &engine;
                let range = i * chunk..((i + 1) * chunk).min(total);
                scope.spawn(move || {
                    let mut ranks = BTreeMap::new();
                    engine.accumulate(range, &mut ranks);
                    ranks
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut ranks = BTreeMap::new();
    for part in parts {
        for (degree, r) in part {
            *ranks.entry(degree).or_insert(0) += r;
        }
    }
    Ok(engine.table(ranks))
}
