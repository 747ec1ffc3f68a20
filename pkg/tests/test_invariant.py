"""Freeness conditions, xi search, exact values, criteria, and bounds."""

import pytest

from buchstaber import gf2, zlattice
from buchstaber.complexes import SimplicialComplex, face_mask, face_vertices
from buchstaber.generators import (
    boundary_simplex,
    complete_graph,
    cycle,
    cyclic_polytope_boundary,
    points,
    random_complex,
    simplex,
)
from buchstaber.invariant import (
    SearchBudgetExceeded,
    XiWitness,
    analyze,
    ayzenberg_s,
    check_criteria,
    chromatic_number,
    condition_prime_set,
    cover_lower_bound,
    dual_lambda,
    matrix_search,
    oracle_check,
    s_real,
    validate_xi,
    verify_Lambda,
    verify_Lambda_detailed,
    verify_S,
    verify_S_detailed,
    verify_nonsimplex_condition,
    xi_search,
    xi_to_matrix,
)

S3 = [0b001, 0b010, 0b011]  # rows (1,0),(0,1),(1,1)
S3_INT = [[1, 0], [0, 1], [1, 1]]


def test_verify_S_examples():
    assert verify_S(points(3), S3, 2, "gf2")
    assert not verify_S(boundary_simplex(2), S3, 2, "gf2")
    assert verify_S(points(3), S3_INT, 2, "int")


def test_verify_S_detail_and_errors():
    ok, failing = verify_S_detailed(boundary_simplex(2), S3, 2, "gf2")
    assert not ok and face_vertices(failing) in ([1, 2], [1, 3], [2, 3])
    with pytest.raises(ValueError):
        verify_S(points(3), [1, 2], 2, "gf2")
    with pytest.raises(ValueError):
        verify_S(points(3), S3, 2, "rational")


def test_verify_S_k0_trivial():
    assert verify_S(simplex(3), [0, 0, 0, 0], 0, "gf2")
    assert verify_S(simplex(3), [[], [], [], []], 0, "int")


def test_verify_Lambda_examples():
    sq = cycle(4)
    assert verify_Lambda(sq, [0b0101, 0b1010], "gf2")
    assert not verify_Lambda(sq, [0b0011, 0b1100], "gf2")
    ok, failing = verify_Lambda_detailed(sq, [0b0011, 0b1100], "gf2")
    assert not ok and face_vertices(failing) == [1, 2]
    assert verify_Lambda(sq, [[1, 0, 1, 0], [0, 1, 0, 1]], "int")
    assert not verify_Lambda(sq, [[1, 1, 0, 0], [0, 0, 1, 1]], "int")


def test_verify_Lambda_zero_rows_vacuous():
    # k = m: the dual matrix is empty and the parametric side is what fails
    assert verify_Lambda(simplex(2), [], "gf2")
    assert not verify_S(simplex(2), [0b001, 0b010, 0b100], 3, "gf2")


def test_nonsimplex_condition_gf2():
    assert verify_nonsimplex_condition(points(3), S3, 2, "gf2")
    assert not verify_nonsimplex_condition(simplex(2), S3, 2, "gf2")
    # no m=3, k=2 matrix works for the boundary triangle
    for code in range(1 << 6):
        rows = [(code >> (2 * i)) & 0b11 for i in range(3)]
        assert not verify_nonsimplex_condition(boundary_simplex(2), rows, 2, "gf2")


def test_nonsimplex_condition_int():
    assert verify_nonsimplex_condition(points(3), S3_INT, 2, "int")
    assert not verify_nonsimplex_condition(simplex(2), S3_INT, 2, "int")


def test_condition_prime_set():
    # rows (2,0),(0,1),(0,1): deleting one vertex leaves factors with a 2
    K = points(3)
    primes = condition_prime_set(K, [[2, 0], [0, 1], [0, 1]], 2)
    assert 2 in primes
    # a spanning family everywhere needs no primes at all
    assert condition_prime_set(K, S3_INT, 2) == []


def test_xi_search_four_cycle_first_witness():
    w = xi_search(cycle(4), 2)
    assert w is not None and w.k == 2
    assert {a: face_vertices(om) for a, om in w.assignment.items()} == {
        1: [1, 3],
        2: [1, 3],
        3: [2, 4],
    }
    assert validate_xi(cycle(4), w)


def test_xi_search_boundary_triangle_fails():
    assert xi_search(boundary_simplex(2), 2) is None


def test_xi_search_five_cycle_rank3():
    w = xi_search(cycle(5), 3)
    assert w is not None
    assert validate_xi(cycle(5), w)


def test_xi_search_corner_cases():
    assert xi_search(cycle(4), 0).assignment == {}
    assert xi_search(simplex(3), 2) is None  # no non-faces to map to
    with pytest.raises(ValueError):
        xi_search(points(6), 5)  # above guard without override
    assert xi_search(points(6), 5, allow_large=True) is not None


def test_xi_search_budget_guard():
    # without the existence shortcut the refutation must exhaust the tree,
    # which a tiny deterministic node budget interrupts
    with pytest.raises(SearchBudgetExceeded):
        xi_search(complete_graph(6), 4, node_budget=50, use_existence_filter=False)


def test_xi_existence_filter_matches_search():
    from buchstaber.invariant import xi_witness_exists

    for seed in range(30):
        K = random_complex(4 + seed % 3, 12000 + seed, 1, 2, seed % 2)
        for k in (1, 2, 3):
            ex = xi_witness_exists(K, k)
            w = xi_search(K, k, use_existence_filter=False)
            assert ex == (w is not None)


def test_xi_search_monotone_in_k():
    for seed in range(20):
        K = random_complex(5 + seed % 3, 7700 + seed, 1, 2, seed % 2)
        hits = [xi_search(K, k) is not None for k in (1, 2, 3)]
        for lo, hi in zip(hits, hits[1:]):
            assert lo or not hi


def test_xi_matches_naive_backtracking():
    # reference: the plain canonical-order search pruning only on fully
    # assigned circuits; the production engine must return the same witness
    def xi_naive(K, k):
        nonsimp = list(K.minimal_nonsimplices())
        if not nonsimp:
            return None
        nvec = (1 << k) - 1
        complete_at = [[] for _ in range(nvec + 1)]
        for c in gf2.odd_circuits(k):
            complete_at[c[-1]].append(c[:-1])
        assign = [0] * (nvec + 1)

        def dfs(v):
            if v > nvec:
                return True
            for om in nonsimp:
                ok = True
                for others in complete_at[v]:
                    inter = om
                    for u in others:
                        inter &= assign[u]
                        if not inter:
                            break
                    if inter:
                        ok = False
                        break
                if ok:
                    assign[v] = om
                    if dfs(v + 1):
                        return True
                    assign[v] = 0
            return False

        return {v: assign[v] for v in range(1, nvec + 1)} if dfs(1) else None

    for seed in range(40):
        K = random_complex(4 + seed % 3, 8800 + seed, 1, 2, seed % 2)
        for k in (1, 2, 3):
            got = xi_search(K, k)
            assert (got.assignment if got else None) == xi_naive(K, k)
    # highly symmetric instances drive the canonicalized-memo code paths
    for K in (points(4), points(5), complete_graph(4), complete_graph(5)):
        for k in (2, 3):
            got = xi_search(K, k)
            assert (got.assignment if got else None) == xi_naive(K, k)


def test_xi_to_matrix_three_points():
    w = XiWitness(2, {1: 0b011, 2: 0b101, 3: 0b110})
    assert xi_to_matrix(points(3), w) == [0b11, 0b01, 0b10]


def test_xi_to_matrix_four_cycle():
    w = xi_search(cycle(4), 2)
    rows = xi_to_matrix(cycle(4), w)
    assert rows == [0b11, 0b01, 0b11, 0b01]
    assert verify_S(cycle(4), rows, 2, "gf2")


def test_xi_to_matrix_rejects_invalid_witness():
    bad = XiWitness(2, {1: 0b101, 2: 0b101, 3: 0b101})
    with pytest.raises(ValueError):
        xi_to_matrix(boundary_simplex(2), bad)


def test_matrix_search_oracle():
    assert matrix_search(cycle(4), 2) is not None
    assert matrix_search(boundary_simplex(2), 2) is None
    assert matrix_search(simplex(2), 1) is None
    rows = matrix_search(points(3), 2)
    assert rows is not None and verify_S(points(3), rows, 2, "gf2")
    with pytest.raises(ValueError):
        matrix_search(points(6), 3)  # 18 bits above the scan limit


def test_s_real_spot_values():
    assert s_real(cycle(4)).value == 2
    assert s_real(boundary_simplex(2)).value == 1
    assert s_real(cycle(5)).value == 3
    for n in (1, 2, 3, 5):
        r = s_real(simplex(n))
        assert r.value == 0 and r.exact
        assert r.xi_witness is None and r.matrix_rows is None


def test_s_real_witnesses_verify():
    r = s_real(cycle(5))
    assert validate_xi(cycle(5), r.xi_witness)
    assert verify_S(cycle(5), r.matrix_rows, 3, "gf2")


def test_s_real_interval_on_max_k_cap():
    r = s_real(points(8), max_k=2)
    assert not r.exact
    assert (r.lower, r.upper) == (2, 7)


def test_s_real_interval_on_budget():
    # witness exists at every rank up to the bound, but a tiny budget stops
    # the climb mid-way: the result degrades to a verified interval
    K = SimplicialComplex.from_facets(
        8,
        [[2, 3, 4], [2, 3, 6], [2, 4, 7], [2, 6, 7], [1, 4, 8], [3, 4, 8],
         [1, 5, 8], [1, 6, 8], [3, 6, 8]],
    )
    r = s_real(K, node_budget=60)
    assert not r.exact
    assert r.upper == 5 and 1 <= r.lower < 5
    full = s_real(K)
    assert full.exact and full.value == 5 and full.lower >= r.lower


def test_check_criteria_levels():
    assert check_criteria(simplex(3)) == (0, None)
    lvl, w = check_criteria(boundary_simplex(2))
    assert lvl == 1 and [face_vertices(s) for s in w.sets] == [[1, 2, 3]]
    lvl, w = check_criteria(cycle(4))
    assert (lvl, w.case) == (2, 2)
    assert [face_vertices(s) for s in w.sets] == [[1, 3], [2, 4]]
    lvl, w = check_criteria(cycle(5))
    assert lvl == 3 and w.level == 3


def test_criteria_s2_triple_case():
    # three pairwise intersecting pairs with empty common intersection
    K = SimplicialComplex.from_min_nonsimplices(3, [[1, 2], [1, 3], [2, 3]])
    lvl, w = check_criteria(K)
    assert (lvl, w.case) >= (2, 1)
    if lvl == 2:
        assert w.case == 1 and len(w.sets) == 3


def test_criteria_matched_sets_satisfy_their_equations():
    cases = {
        5: ((1, 2), (1, 3), (2, 3)),
        4: ((1, 2), (1, 3), (1, 4), (2, 3, 4)),
        3: ((1, 2), (1, 5), (1, 3, 4), (2, 3, 5), (2, 4, 5)),
        2: ((1, 3), (1, 2, 4), (1, 2, 5), (1, 4, 6), (1, 5, 6), (2, 3, 6), (3, 4, 5)),
        1: ((1, 2, 4), (1, 3, 5), (1, 6, 7), (2, 3, 6), (2, 5, 7), (3, 4, 7), (4, 5, 6)),
    }
    for seed in range(30):
        K = random_complex(5 + seed % 4, 6600 + seed, 1, 2, seed % 3)
        lvl, w = check_criteria(K)
        if lvl == 3:
            for cons in cases[w.case]:
                inter = w.sets[cons[0] - 1]
                for pos in cons[1:]:
                    inter &= w.sets[pos - 1]
                assert inter == 0


def test_criteria_s3_case4_configuration():
    K = SimplicialComplex.from_min_nonsimplices(5, [[1, 2], [3, 4], [3, 5], [4, 5]])
    lvl, w = check_criteria(K)
    assert lvl == 3 and w.case == 4


def test_criteria_s3_case5_configuration():
    K = SimplicialComplex.from_min_nonsimplices(6, [[1, 2], [3, 4], [5, 6]])
    lvl, w = check_criteria(K)
    assert lvl == 3 and w.case == 5
    assert [face_vertices(s) for s in w.sets] == [[1, 2], [3, 4], [5, 6]]


def test_cover_bound_against_subset_enumeration():
    # oracle: scan every subfamily of the non-faces that covers the vertices
    from itertools import combinations as combos

    for seed in range(25):
        K = random_complex(4 + seed % 3, 3300 + seed, 1, 2, seed % 2)
        ns = K.minimal_nonsimplices()
        if not (1 <= len(ns) <= 8):
            continue
        full = (1 << K.m) - 1
        best = None
        for t in range(1, len(ns) + 1):
            for sel in combos(ns, t):
                covered = 0
                for w in sel:
                    covered |= w
                if covered == full:
                    value = K.m - sum(w.bit_count() for w in sel) + t
                    best = value if best is None else max(best, value)
        cb = cover_lower_bound(K)
        if best is None:
            assert not cb.coverable and cb.value == 0
        else:
            assert cb.coverable and cb.value == best
            covered = 0
            for w in cb.cover:
                covered |= w
                assert w in ns
            assert covered == full


def test_chromatic_number_against_brute_force():
    from itertools import product as iproduct

    for seed in range(20):
        K = random_complex(3 + seed % 4, 2100 + seed, 1, 2, 0).one_skeleton()
        verts = [v for v in range(K.m) if K.contains_face(1 << v)]
        edges = [
            (a, b)
            for i, a in enumerate(verts)
            for b in verts[i + 1 :]
            if K.contains_face((1 << a) | (1 << b))
        ]
        want = 0 if not verts else None
        for c in range(1, len(verts) + 1):
            if want is not None:
                break
            for coloring in iproduct(range(c), repeat=len(verts)):
                col = dict(zip(verts, coloring))
                if all(col[a] != col[b] for a, b in edges):
                    want = c
                    break
        assert chromatic_number(K) == (want or 0)


def test_smith_row_transform_annihilates_column_space():
    # the trailing transform rows are exactly what dual completion uses
    from buchstaber.generators import Lcg

    rng = Lcg(83)
    done = 0
    while done < 40:
        m = 3 + rng.below(3)
        k = 1 + rng.below(min(3, m - 1))
        mat = [[rng.below(5) - 2 for _ in range(k)] for _ in range(m)]
        factors, u = zlattice.smith_row_transform(mat)
        if len(factors) != k or any(d != 1 for d in factors):
            continue
        done += 1
        for row in u[k:]:
            for j in range(k):
                assert sum(row[i] * mat[i][j] for i in range(m)) == 0


def test_nonsimplex_condition_engineered_prime_factors():
    # invariant factors 3 and 5 must enter the finite prime set and the
    # equivalence with the spanning condition must survive them
    K = points(3)
    for s in (
        [[3, 0], [0, 1], [1, 1]],
        [[5, 0], [0, 5], [1, 1]],
        [[3, 1], [2, 4], [0, 5]],
        [[6, 0], [0, 10], [15, 1]],
    ):
        assert verify_S(K, s, 2, "int") == verify_nonsimplex_condition(K, s, 2, "int")
    primes = condition_prime_set(K, [[3, 0], [0, 1], [1, 1]], 2)
    assert 3 in primes


def test_cover_lower_bound_examples():
    cb = cover_lower_bound(cycle(4))
    assert cb.value == 2 and not cb.heuristic and cb.coverable
    assert [face_vertices(s) for s in cb.cover] == [[1, 3], [2, 4]]
    cb = cover_lower_bound(boundary_simplex(2))
    assert cb.value == 1
    assert [face_vertices(s) for s in cb.cover] == [[1, 2, 3]]
    cb = cover_lower_bound(cycle(5))
    assert cb.value == 2 and len(cb.cover) == 3


def test_cover_not_coverable():
    # cone vertex 1 lies in every facet, so no minimal non-face contains it
    K = SimplicialComplex.from_facets(3, [[1, 2], [1, 3]])
    cb = cover_lower_bound(K)
    assert (cb.value, cb.coverable) == (0, False)


def test_cover_greedy_fallback():
    cb = cover_lower_bound(cycle(4), guard=1)
    assert cb.heuristic and cb.coverable
    assert cb.value <= 2


def test_chromatic_number():
    assert chromatic_number(complete_graph(4)) == 4
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(cycle(4)) == 2
    assert chromatic_number(points(3)) == 1
    assert chromatic_number(SimplicialComplex.from_facets(3, [])) == 0
    with pytest.raises(ValueError):
        chromatic_number(simplex(2))


def test_ayzenberg_values():
    assert ayzenberg_s(complete_graph(4)) == 1
    assert ayzenberg_s(cycle(5)) == 3
    assert ayzenberg_s(cycle(4)) == 2
    assert ayzenberg_s(points(3)) == 2
    assert ayzenberg_s(points(6)) == 5
    # empty complex: chromatic number 0, full torus acts freely
    K = SimplicialComplex.from_facets(3, [])
    assert ayzenberg_s(K) == 3
    assert s_real(K).value == 3


def test_dual_lambda_gf2():
    rows = xi_to_matrix(cycle(4), xi_search(cycle(4), 2))
    lam = dual_lambda(rows, 4, 2, "gf2")
    assert len(lam) == 2
    assert verify_Lambda(cycle(4), lam, "gf2")


def test_dual_lambda_int():
    rows = [[1, 1], [1, 0], [1, 1], [1, 0]]
    lam = dual_lambda(rows, 4, 2, "int")
    assert len(lam) == 2 and all(len(r) == 4 for r in lam)
    for lrow in lam:
        for j in range(2):
            assert sum(lrow[i] * rows[i][j] for i in range(4)) == 0
    assert verify_Lambda(cycle(4), lam, "int")
    with pytest.raises(ValueError):
        dual_lambda([[2, 0], [0, 1], [0, 0]], 3, 2, "int")


def test_dual_lambda_on_corpus_witnesses():
    # every produced matrix witness extends to a passing dual, in both rings
    for seed in range(20):
        K = random_complex(4 + seed % 4, 9900 + seed, 1, 2, seed % 2)
        r = s_real(K)
        if not r.exact or not r.matrix_rows or r.value == 0:
            continue
        k = r.xi_witness.k
        lam = dual_lambda(r.matrix_rows, K.m, k, "gf2")
        assert verify_Lambda(K, lam, "gf2")
        if k <= 3:
            int_rows = [[(row >> j) & 1 for j in range(k)] for row in r.matrix_rows]
            lam_int = dual_lambda(int_rows, K.m, k, "int")
            assert verify_Lambda(K, lam_int, "int")


def test_analyze_four_cycle():
    rep = analyze(cycle(4))
    assert rep.s_value == 2 and rep.s_exact
    assert rep.s_real_lower == rep.s_real_upper == 2
    assert rep.criteria_level == 2
    assert rep.upper_bound == 2
    assert rep.cover.value == 2
    assert rep.ayzenberg_value == 2
    assert rep.is_flag and not rep.ghost_vertices


def test_analyze_simplex():
    rep = analyze(simplex(5))
    assert rep.s_value == 0 and rep.criteria_level == 0
    assert rep.num_min_nonsimplices == 0


def test_analyze_cyclic_13_15():
    rep = analyze(cyclic_polytope_boundary(13, 15))
    assert rep.s_value == 2 and rep.s_exact
    assert rep.criteria_level == 2
    assert rep.upper_bound == 2


def test_analyze_ghost_warning():
    K = SimplicialComplex.from_facets(4, [[1, 2]])
    rep = analyze(K)
    assert rep.ghost_vertices == (3, 4)
    assert any("ghost" in w for w in rep.warnings)


def test_analyze_polytopal_bound():
    rep = analyze(cycle(4), polytopal=True)
    assert rep.chromatic_bound == 2
    assert analyze(cycle(4)).chromatic_bound is None


def test_analyze_report_invariants():
    for seed in range(25):
        K = random_complex(5 + seed % 4, 5500 + seed, 3, 5, seed % 2)
        rep = analyze(K)
        assert rep.s_lower <= rep.s_upper
        assert rep.s_real_lower <= rep.s_real_upper <= rep.upper_bound
        assert rep.criteria_level <= min(3, rep.s_real_lower)
        assert rep.cover.value <= rep.s_real_upper
        if rep.xi_witness is not None:
            assert validate_xi(K, rep.xi_witness)
            assert verify_S(K, rep.matrix_rows, rep.xi_witness.k, "gf2")


def test_analyze_exact_above_three_only_with_full_climb():
    # 6 isolated points: the search reaches the upper bound 5, so the value
    # is exact even though the criteria stop at 3
    rep = analyze(points(6))
    assert rep.s_real_lower == rep.s_real_upper == 5
    assert rep.s_value == 5 and rep.criteria_level == 3


def test_searches_independent_of_worker_count():
    for seed in (0, 5, 11):
        K = random_complex(5 + seed % 3, 1500 + seed, 1, 2, seed % 2)
        for k in (1, 2, 3):
            serial = xi_search(K, k)
            pooled = xi_search(K, k, threads=4)
            assert (serial is None) == (pooled is None)
            if serial is not None:
                assert serial.assignment == pooled.assignment
            if K.m * k <= 16:
                assert matrix_search(K, k) == matrix_search(K, k, threads=4)


def test_octahedron_cross_check():
    # triple join of point pairs = boundary of the cross-polytope; the three
    # disjoint non-face pairs give level 3, the cube's facet 3-coloring gives
    # the matching polytopal bound, and the search meets the upper bound
    from buchstaber.generators import join

    octa = join(points(2), join(points(2), points(2)))
    rep = analyze(octa, polytopal=True)
    assert rep.s_value == 3 and rep.s_exact
    assert rep.criteria_level == 3 and rep.criterion_witness.case == 5
    assert rep.chromatic_bound == 3
    assert rep.upper_bound == 3


def test_cycle_family_closed_form():
    # both parities collapse to s = m - 2 under the graph formula, and the
    # xi climb confirms it as the real value too
    for m in (4, 5, 6, 7):
        rep = analyze(cycle(m))
        assert rep.s_exact and rep.s_value == m - 2
        assert rep.s_real_exact and rep.s_real_lower == m - 2


def test_oracle_check_agreement():
    for K in (cycle(4), boundary_simplex(2), points(3)):
        for k in (1, 2, 3):
            r = oracle_check(K, k)
            assert r["agree"]
    r = oracle_check(points(6), 3)  # matrix scan skipped above 16 bits
    assert r["matrix"] is None and r["agree"]
