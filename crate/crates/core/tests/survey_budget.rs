use semiflat::{catalog, flatness, Limits};
use std::time::Instant;

// The full-catalog survey at the default bound is the most expensive single
// operation the library exposes; keep an eye on its wall-clock cost so the
// downstream batch runs stay comfortably interactive.
#[test]
fn full_bound_four_survey_stays_fast() {
    let limits = Limits::default();
    let start = Instant::now();
    let mut rows = 0;
    for s in catalog::semirings() {
        let report = flatness::flatness_survey(&s, 4, &limits).unwrap();
        assert!(report.violations.is_empty(), "{}: {:?}", s.name(), report.violations);
        rows += report.rows.len();
    }
    let elapsed = start.elapsed();
    assert!(rows >= 18, "expected a real sweep, saw {rows} rows");
    assert!(
        elapsed.as_secs() < 120,
        "bound-4 catalog survey took {elapsed:?}, over budget"
    );
}
