import latqec


def test_hnf_and_systole():
    h, det = latqec.hnf([[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]])
    assert h == [[1, 1, 1, 1], [0, 2, 0, 2], [0, 0, 2, 2], [0, 0, 0, 4]]
    assert det == 16
    assert latqec.l1_systole(h) == 4


def test_search_small_tables():
    det, witnesses = latqec.search_min_det(3, 3, 1)
    assert det == 7
    assert [[1, 0, 4], [0, 1, 5], [0, 0, 7]] in witnesses
    assert latqec.search_min_det(3, 3, 2)[0] == 10


def test_code_parameters_and_distance():
    had = latqec.hadamard_lattice(2)
    n, k = latqec.code_parameters(had, degree=2)
    assert (n, k) == (96, 6)
    table1 = [[1, 0, 4], [0, 1, 5], [0, 0, 7]]
    weight, witnesses = latqec.min_weight_logical(table1, 1, "z", 3)
    assert weight == 3
    assert all(len(w) == 3 for w in witnesses)


def test_slice_protocol_bell():
    n_slice, group, signs = latqec.slice_logical_group([[2, 0, 4], [0, 1, 3], [0, 0, 5]])
    assert n_slice == 2
    assert len(group) == 4
    assert set(signs) <= {-1, 1}


def test_injection_round_trips():
    assert latqec.injection_round_trips([[2, 0], [0, 2]], 1, trials=5) == 5


def test_surgery_and_boundary():
    l3 = [[3, 0, 0, 0], [0, 3, 0, 0], [0, 0, 3, 0], [0, 0, 0, 3]]
    assert latqec.boundary_distance(l3, 0) == 6
    measured, merged_k, two_k = latqec.surgery_measured_products(
        [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]], 0
    )
    assert (measured, merged_k, two_k) == (6, 6, 12)


def test_honeycomb_counts():
    counts = latqec.honeycomb_cell_counts(
        [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [1, 1, 1, 1]]
    )
    assert counts[1:] == [24, 32, 12]
