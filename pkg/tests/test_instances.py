import random
from itertools import combinations

import pytest

from helpers import rand_closed_system, rand_cost, rand_binary, sco_value_full_tuple_enum
from shiftopt import (
    BipartiteMatchings,
    EnumerationBudgetExceeded,
    ExplicitSystem,
    Graph,
    GraphicMatroid,
    Instance,
    InstanceFormatError,
    Meta,
    PartitionMatroid,
    PrescribedCongestion,
    UniformMatroid,
    all_matchings,
    bipartite_to_graph,
    body_to_system,
    brute_force_dup,
    brute_force_generalized,
    brute_force_sco,
    coloring_gadget,
    congestion_feasible,
    congestion_to_cost,
    exact_cover_exists,
    explicit_members,
    game_to_cost,
    hexagon_gadget,
    independent_set_gadget,
    is_shifted,
    matrix,
    parse,
    perfect_matchings,
    random_instance,
    serialize,
    shifted_value,
    social_cost,
)

TRIANGLE = Graph(3, ((0, 1), (1, 2), (0, 2)))
PATH3 = Graph(3, ((0, 1), (1, 2)))
K4 = Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))


def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
    for i in range(5):
        edges.append((i, i + 5))
    for i in range(5):
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph(10, tuple(edges))


# --- exact baselines


def test_brute_force_sco_cross_checked_by_tuple_enumeration():
    sys_ = ExplicitSystem(((0, 0), (0, 1), (1, 0)), downward_closed=True)
    c = matrix([[3, 1], [2, 2]])
    opt, witness = brute_force_sco(sys_, c, 2)
    assert opt == 5
    assert shifted_value(c, witness) == 5
    assert sco_value_full_tuple_enum(sys_, c, 2) == 5


def test_brute_force_sco_nonpositive_costs():
    sys_ = ExplicitSystem.closed([(1, 1, 0), (0, 1, 1)])
    c = matrix([[-1, -2]] * 3)
    opt, witness = brute_force_sco(sys_, c, 2)
    assert opt == 0
    assert witness == ((0, 0), (0, 0), (0, 0))


def test_brute_force_sco_n1_matches_scan():
    rng = random.Random(1)
    for _ in range(25):
        d = rng.randint(1, 6)
        sys_ = rand_closed_system(rng, d, 16)
        c = rand_cost(rng, d, 1)
        opt, _ = brute_force_sco(sys_, c, 1)
        w = [row[0] for row in c]
        s = sys_.maximize(w)
        assert opt == sum(wi * si for wi, si in zip(w, s))


def test_brute_force_sco_matches_tuple_enumeration_random():
    rng = random.Random(2)
    for _ in range(20):
        d = rng.randint(1, 4)
        n = rng.randint(1, 3)
        sys_ = rand_closed_system(rng, d, 8)
        c = rand_cost(rng, d, n)
        opt, _ = brute_force_sco(sys_, c, n)
        assert opt == sco_value_full_tuple_enum(sys_, c, n)


def test_brute_force_dup_examples():
    sys_ = ExplicitSystem(((0, 0), (0, 1), (1, 0)), downward_closed=True)
    assert brute_force_dup(sys_, 2, (3, 5))[0] == 8

    singles = ExplicitSystem.closed([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    opt, sel = brute_force_dup(singles, 4, (5, -2, 7))
    assert opt == 12
    assert len(sel.columns) == 4

    assert brute_force_dup(singles, 2, (-1, 0, -3))[0] == 0


def test_brute_force_generalized_examples():
    sys_ = ExplicitSystem.closed([(1, 0), (0, 1)])
    squares = ((0, 1, 4, 9), (0, 1, 4, 9))
    assert brute_force_generalized(sys_, squares, 3) == 9

    zeros = ((0, 0, 0), (0, 0, 0))
    assert brute_force_generalized(sys_, zeros, 2) == 0


def test_brute_force_generalized_linear_matches_sco():
    rng = random.Random(3)
    for _ in range(20):
        d = rng.randint(1, 5)
        n = rng.randint(1, 3)
        sys_ = rand_closed_system(rng, d, 12)
        tables = tuple(tuple(t for t in range(n + 1)) for _ in range(d))
        ones = tuple((1,) * n for _ in range(d))
        assert brute_force_generalized(sys_, tables, n) == brute_force_sco(sys_, ones, n)[0]


def test_budget_exceeded_is_an_error():
    sys_ = ExplicitSystem.closed([(1, 1, 1, 1)])
    c = rand_cost(random.Random(0), 4, 3)
    with pytest.raises(EnumerationBudgetExceeded):
        brute_force_sco(sys_, c, 3, budget=5)
    with pytest.raises(EnumerationBudgetExceeded):
        brute_force_dup(sys_, 3, (1, 1, 1, 1), budget=5)


# --- reductions


def test_congestion_to_cost_rows():
    c, target = congestion_to_cost(PrescribedCongestion(2, (frozenset({0, 1}),)))
    assert c == ((0, -1),) and target == 0

    c, target = congestion_to_cost(PrescribedCongestion(2, (frozenset({0, 1, 2}),)))
    assert c == ((0, 0),) and target == 0

    c, target = congestion_to_cost(PrescribedCongestion(2, (frozenset({2}),)))
    assert c == ((0, 1),) and target == 1


def test_congestion_reduction_end_to_end():
    rng = random.Random(4)
    for _ in range(40):
        d = rng.randint(1, 5)
        n = rng.randint(1, 3)
        sys_ = rand_closed_system(rng, d, 12)
        pc = PrescribedCongestion(
            n,
            tuple(
                frozenset(rng.sample(range(n + 1), rng.randint(1, n + 1)))
                for _ in range(d)
            ),
        )
        c, target = congestion_to_cost(pc)
        opt, _ = brute_force_sco(sys_, c, n)
        assert opt <= target
        assert (opt == target) == congestion_feasible(sys_.vectors, pc)


def test_game_to_cost_convex_gives_shifted_rows():
    c = game_to_cost(((0, 1, 4),))
    assert c == ((-1, -3),)
    assert is_shifted(c)
    assert game_to_cost(((5, 5, 5),)) == ((0, 0),)


def test_game_identity_on_random_solutions():
    rng = random.Random(5)
    for _ in range(60):
        d, n = rng.randint(1, 5), rng.randint(1, 4)
        tables = tuple(
            tuple(rng.randint(-6, 6) for _ in range(n + 1)) for _ in range(d)
        )
        c = game_to_cost(tables)
        x = rand_binary(rng, d, n)
        base = sum(t[0] for t in tables)
        assert base - social_cost(tables, x) == shifted_value(c, x)


def test_body_to_system_formula():
    T = ExplicitSystem(((1, 0), (0, 1)))
    c = matrix([[0, -1], [0, -1]])
    S, b = body_to_system(T, c)
    assert b == ((5, 4), (5, 4))
    assert set(S.vectors) == {(0, 0), (1, 0), (0, 1)}
    assert S.downward_closed

    S2, b2 = body_to_system(T, matrix([[0, 0], [0, 0]]))
    assert b2 == ((1, 1), (1, 1))


def test_body_to_system_rejects_mixed_cardinality():
    with pytest.raises(ValueError):
        body_to_system(ExplicitSystem(((1, 0), (1, 1))), matrix([[1], [1]]))


def test_body_optimum_attained_in_body():
    rng = random.Random(6)
    for _ in range(25):
        d = rng.randint(2, 5)
        k = rng.randint(1, min(3, d))
        n = 2
        bodies = [frozenset(cmb) for cmb in combinations(range(d), k)]
        supports = rng.sample(bodies, rng.randint(1, min(3, len(bodies))))
        T = ExplicitSystem(
            tuple(tuple(1 if i in sup else 0 for i in range(d)) for sup in supports)
        )
        c = rand_cost(rng, d, n, lo=-3, hi=3)
        S, b = body_to_system(T, c)
        opt_b, witness = brute_force_sco(S, b, n)
        for col in zip(*witness):
            assert T.contains(tuple(col))
        opt_c_over_T, _ = brute_force_sco(T, c, n)
        assert shifted_value(c, witness) == opt_c_over_T
        bump = 2 * sum(abs(v) for row in c for v in row) + 1
        assert opt_b == opt_c_over_T + bump * n * k


# --- gadgets


def test_independent_set_gadget_triangle_has_no_pair():
    inst = independent_set_gadget(TRIANGLE, 2)
    opt, _ = brute_force_sco(inst.system, inst.c, 2)
    assert inst.meta.target == 0
    assert opt < 0


def test_independent_set_gadget_path_endpoints():
    inst = independent_set_gadget(PATH3, 2)
    opt, _ = brute_force_sco(inst.system, inst.c, 2)
    assert opt == 0


def test_independent_set_gadget_n1_trivial():
    inst = independent_set_gadget(TRIANGLE, 1)
    opt, _ = brute_force_sco(inst.system, inst.c, 1)
    assert opt == 0


def test_independent_set_gadget_dedups_equal_stars():
    single_edge = Graph(2, ((0, 1),))
    inst = independent_set_gadget(single_edge, 2)
    assert len(inst.system.vectors) == 1


def hexagon_feasible(sets, k):
    graph, pc = hexagon_gadget(sets, k)
    pms = perfect_matchings(bipartite_to_graph(graph))
    if not pms:
        return False
    return congestion_feasible(pms, pc)


def test_hexagon_gadget_shape_and_yes_case():
    graph, pc = hexagon_gadget([(0, 1, 2)], 3)
    assert len(graph.edges) == 12
    assert graph.left + graph.right == 12
    assert pc.n == 2
    assert pc.sets[:6] == (frozenset({0, 1}),) * 6
    assert pc.sets[6:] == (frozenset({0, 2}),) * 6
    assert hexagon_feasible([(0, 1, 2)], 3)


def test_hexagon_gadget_no_case():
    assert not hexagon_feasible([(0, 1, 2)], 4)


def test_hexagon_gadget_matches_exact_cover_on_handmade_cases():
    cases = [
        ([(0, 1, 2)], 3, True),
        ([(0, 1, 2)], 4, False),
        ([(0, 1, 2), (3, 4, 5)], 6, True),
        ([(0, 1, 2), (2, 3, 4)], 6, False),
        ([(0, 1, 2), (3, 4, 5), (0, 3, 4)], 6, True),
    ]
    for sets, k, expected in cases:
        graph, _ = hexagon_gadget(sets, k)
        assert len(graph.edges) == 12 * len(sets)
        assert graph.left + graph.right == 6 * len(sets) + 2 * k
        assert exact_cover_exists(sets, k) == expected
        assert hexagon_feasible(sets, k) == expected


def test_hexagon_gadget_rejects_bad_sets():
    with pytest.raises(ValueError):
        hexagon_gadget([(0, 1)], 3)
    with pytest.raises(ValueError):
        hexagon_gadget([(0, 1, 3)], 3)


def test_coloring_gadget_k4_two_disjoint_perfect_matchings():
    pc = coloring_gadget(K4)
    assert pc.sets == (frozenset({0, 1}),) * 6
    pms = perfect_matchings(K4)
    assert len(pms) == 3
    assert congestion_feasible(pms, pc)


def test_coloring_gadget_petersen_infeasible():
    graph = petersen()
    pc = coloring_gadget(graph)
    pms = perfect_matchings(graph)
    assert len(pms) == 6
    assert not congestion_feasible(pms, pc)
    c, target = congestion_to_cost(pc)
    body = ExplicitSystem(pms)
    opt, _ = brute_force_sco(body, c, 2)
    assert target == 0
    assert opt < 0


def test_coloring_gadget_rejects_noncubic():
    with pytest.raises(ValueError):
        coloring_gadget(PATH3)


def test_perfect_matchings_small_cases():
    assert perfect_matchings(Graph(2, ((0, 1),))) == ((1,),)
    assert perfect_matchings(TRIANGLE) == ()
    c4 = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
    assert len(perfect_matchings(c4)) == 2


def test_all_matchings_path():
    assert set(all_matchings(PATH3)) == {(0, 0), (1, 0), (0, 1)}


def test_exact_cover_exists():
    assert exact_cover_exists([(0, 1, 2)], 3)
    assert not exact_cover_exists([(0, 1, 2), (2, 3, 4)], 6)
    assert exact_cover_exists([(0, 1, 2), (3, 4, 5), (1, 2, 3)], 6)


# --- random instances and the file format


def test_random_instance_deterministic():
    a = random_instance(42, d=5, n=3, set_size=12, cost_range=8, shifted=True)
    b = random_instance(42, d=5, n=3, set_size=12, cost_range=8, shifted=True)
    assert serialize(a) == serialize(b)
    c = random_instance(43, d=5, n=3, set_size=12, cost_range=8, shifted=True)
    assert serialize(a) != serialize(c)


def test_random_instance_shifted_rows():
    inst = random_instance(7, d=6, n=4, set_size=10, cost_range=9, shifted=True)
    assert is_shifted(inst.c)
    assert inst.system.downward_closed
    assert len(inst.system.vectors) <= 10


def test_round_trip_on_random_instances():
    for seed in range(100):
        inst = random_instance(
            seed, d=4 + seed % 3, n=2 + seed % 3, set_size=9, cost_range=6,
            shifted=seed % 2 == 0,
        )
        again = parse(serialize(inst))
        assert again == inst


def test_round_trip_other_system_kinds():
    kinds = [
        UniformMatroid(4, 2),
        PartitionMatroid(4, (((0, 1), 1), ((2, 3), 2))),
        GraphicMatroid(3, ((0, 1), (1, 2))),
        BipartiteMatchings(
            __import__("shiftopt").BipartiteGraph(2, 2, ((0, 0), (1, 1)))
        ),
    ]
    for system in kinds:
        d = system.ground_size()
        inst = Instance(system, 2, tuple((1, -1) for _ in range(d)), Meta(target=3))
        assert parse(serialize(inst)) == inst


def test_parse_reports_positions():
    with pytest.raises(InstanceFormatError) as err:
        parse(b'{"version": 1,')
    assert "line 1" in str(err.value)

    with pytest.raises(InstanceFormatError) as err:
        parse(b'{"version": 1, "n": 1, "c": [], "system": {"kind": "explicit", "vectors": ["0x"]}}')
    assert "vectors[0]" in str(err.value)

    with pytest.raises(InstanceFormatError) as err:
        parse(b'{"version": 2, "n": 1, "c": [], "system": {"kind": "uniform", "d": 0, "rank": 0}}')
    assert "version" in str(err.value)

    with pytest.raises(InstanceFormatError) as err:
        parse(b'{"version": 1, "n": 1, "c": [["a"]], "system": {"kind": "uniform", "d": 1, "rank": 1}}')
    assert "c[0]" in str(err.value)


def test_instance_validates_dimensions():
    with pytest.raises(ValueError):
        Instance(UniformMatroid(2, 1), 2, matrix([[1, 1]]))
    with pytest.raises(ValueError):
        Instance(UniformMatroid(1, 1), 2, matrix([[1, 1, 1]]))


def test_explicit_members_materializes_matroids():
    members = explicit_members(UniformMatroid(4, 2))
    assert len(members.vectors) == 1 + 4 + 6
    assert members.downward_closed

    bip = BipartiteMatchings(
        __import__("shiftopt").BipartiteGraph(2, 2, ((0, 0), (0, 1), (1, 0), (1, 1)))
    )
    members = explicit_members(bip)
    assert len(members.vectors) == 7


def test_congestion_feasible_trivial_prescription():
    sys_ = rand_closed_system(random.Random(10), 4, 8)
    pc = PrescribedCongestion(2, tuple(frozenset({0, 1, 2}) for _ in range(4)))
    assert congestion_feasible(sys_.vectors, pc)
