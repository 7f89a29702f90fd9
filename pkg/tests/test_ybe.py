import numpy as np
import pytest

import oracles as O
from skewbrace import catalog
from skewbrace.brace import kernel, trivial_brace
from skewbrace.constructors import baer_brace, build_iyb_q8free, build_iyb_sylow_q8, q8_brace
from skewbrace.errors import TooLarge
from skewbrace.groups import is_isomorphic, quotient_group
from skewbrace.ybe import (
    Solution,
    check_involutive,
    check_nondegenerate,
    check_ybe,
    permutation_group,
    solution_from_brace,
    twist,
)


def test_trivial_abelian_gives_twist():
    sol = solution_from_brace(trivial_brace(catalog.get("cyclic:5")))
    assert (sol.f == twist(5).f).all() and (sol.g == twist(5).g).all()
    assert sol.r(1, 3) == (3, 1)


def test_q8_solution():
    B = q8_brace()
    sol = solution_from_brace(B)
    assert sol.n == 8
    assert (sol.f[B.mul.index("c")] == np.arange(8)).all()
    assert check_ybe(sol).holds and check_involutive(sol) and check_nondegenerate(sol)


def test_heisenberg_solution():
    sol = solution_from_brace(baer_brace(catalog.get("heis27")))
    assert check_ybe(sol).holds and check_involutive(sol) and check_nondegenerate(sol)
    assert O.ybe_holds(sol.f.tolist(), sol.g.tolist())


def test_twist_and_lyubashenko():
    for n in (1, 2, 5):
        assert check_ybe(twist(n)).holds
        assert check_involutive(twist(n)) and check_nondegenerate(twist(n))
    sigma = np.array([2, 0, 3, 1])
    inv = np.argsort(sigma)
    sol = Solution(np.tile(sigma, (4, 1)), np.tile(inv, (4, 1)))
    assert check_ybe(sol).holds and check_involutive(sol)


def random_non_solution(n=3, seed=0):
    rng = np.random.default_rng(seed)
    while True:
        perm = rng.permutation(n * n)
        f = (perm // n).reshape(n, n)  # r(x, y) = divmod(perm[x n + y], n)
        g = (perm % n).reshape(n, n).T.copy()
        sol = Solution(f, g)
        if not check_ybe(sol).holds:
            return sol


def test_non_solution_has_witness():
    sol = random_non_solution()
    rep = check_ybe(sol)
    assert not rep.holds and rep.witness is not None and rep.lhs != rep.rhs
    assert not O.ybe_holds(sol.f.tolist(), sol.g.tolist())


def test_identity_map_degenerate():
    n = 3
    f = np.repeat(np.arange(n)[:, None], n, axis=1)  # f_x(y) = x
    g = f.copy()  # g_y(x) = y
    sol = Solution(f, g)
    assert not check_nondegenerate(sol)


def test_abelian_type_braces_are_involutive():
    for name in ["s3", "s4", "a4", "dic12"]:
        sol = solution_from_brace(build_iyb_q8free(catalog.get(name)))
        assert check_involutive(sol), name


def test_permutation_groups():
    P, perms = permutation_group(solution_from_brace(trivial_brace(catalog.get("cyclic:6"))))
    assert P.order == 1
    for B in [q8_brace(), baer_brace(catalog.get("heis27"))]:
        sol = solution_from_brace(B)
        P, perms = permutation_group(sol)
        Q, _ = quotient_group(B.mul, kernel(B))
        assert is_isomorphic(P, Q) is not None
        assert P.order == O.permutation_group_order(sol.f.tolist())
        assert perms.shape == (P.order, sol.n)


def test_permutation_group_cap():
    sol = solution_from_brace(baer_brace(catalog.get("heis27")))
    with pytest.raises(TooLarge):
        permutation_group(sol, cap=3)


@pytest.mark.parametrize("name", ["s4", "sl23"])
def test_left_brace_solution_matches_classical_form(name):
    build = build_iyb_sylow_q8 if name == "sl23" else build_iyb_q8free
    B = build(catalog.get(name))
    lam = B.lambdas
    lam_inv = np.argsort(lam, axis=1)
    n = B.order
    classical = np.array([[lam_inv[lam[x, y], x] for x in range(n)] for y in range(n)])
    assert (solution_from_brace(B).g == classical).all()
