import pytest

from mobikit import (Exhaustive, FiniteModel, all_passed, build,
                     check_algebra, search_finite)


def test_size_one_has_the_degenerate_model():
    models = search_finite(1)
    assert len(models) == 1
    m = models[0]
    assert m.zero == m.half == m.one == 0
    assert m.p(0, 0, 0) == 0


def test_size_two_has_no_model_with_distinct_constants():
    assert search_finite(2, require_distinct_constants=True) == []


def test_size_two_has_no_model_at_all():
    # collapsing any two of zero, half, one breaks A1 or A2 on two points
    assert search_finite(2) == []


def test_size_three_finds_exactly_the_modular_model():
    models = search_finite(3)
    assert len(models) == 1
    m = models[0]
    assert (m.zero, m.half, m.one) == (0, 2, 1)
    want = build("zmod-algebra", m=3)
    for a in range(3):
        for b in range(3):
            for c in range(3):
                assert m.p(a, b, c) == want.p(a, b, c)


def test_size_four_has_no_model():
    assert search_finite(4) == []


def test_found_models_pass_the_full_law_suite():
    for n in (1, 3):
        for model in search_finite(n):
            reports = check_algebra(model.to_algebra(), Exhaustive())
            assert all_passed(reports), (n, model)


def test_emit_streams_models_and_limit_stops_early():
    seen = []
    search_finite(3, emit=seen.append)
    assert len(seen) == 1 and isinstance(seen[0], FiniteModel)
    assert search_finite(3, limit=0) == []


def test_table_lookup_wraps_like_the_carrier():
    m = search_finite(3)[0]
    alg = m.to_algebra()
    assert alg.p(4, 5, 6) == alg.p(1, 2, 0)


@pytest.mark.parametrize("bad", [0, 5, -1, True, 2.0])
def test_out_of_range_sizes_are_rejected(bad):
    with pytest.raises(ValueError):
        search_finite(bad)
