import random

import pytest

from quadinv import GF2Solver, LinearSystemGF2, NoSolution, solve_gf2


def matvec(system, x):
    acc = 0
    for j, c in enumerate(system.columns):
        if x[j]:
            acc ^= c
    return acc


def test_identity():
    eye = [[int(i == j) for j in range(5)] for i in range(5)]
    for k in range(5):
        rhs = [int(i == k) for i in range(5)]
        assert solve_gf2(LinearSystemGF2.from_dense(eye, rhs)) == tuple(rhs)


def test_zero_matrix_inconsistent():
    with pytest.raises(NoSolution):
        solve_gf2(LinearSystemGF2.from_dense([[0, 0], [0, 0]], [1, 0]))


@pytest.mark.parametrize("seed", range(10))
def test_planted_solution(seed):
    rng = random.Random(seed)
    matrix = [[rng.randint(0, 1) for _ in range(30)] for _ in range(20)]
    planted = [rng.randint(0, 1) for _ in range(30)]
    rhs = [sum(a * b for a, b in zip(row, planted)) % 2 for row in matrix]
    system = LinearSystemGF2.from_dense(matrix, rhs)
    x = solve_gf2(system)
    assert matvec(system, x) == system.rhs
    assert solve_gf2(system) == x


def test_lex_min_solution():
    # columns 0 and 1 are equal, so x = (0, 1) beats (1, 0)
    system = LinearSystemGF2(2, (0b01, 0b01, 0b10), 0b01)
    assert solve_gf2(system) == (0, 1, 0)


def test_kernel_and_rank():
    solver = GF2Solver([0b011, 0b101, 0b110, 0b000])
    assert solver.rank == 2
    assert len(solver.kernel) == 2
    cols = [0b011, 0b101, 0b110, 0b000]
    for k in solver.kernel:
        acc = 0
        for j in range(4):
            if k >> j & 1:
                acc ^= cols[j]
        assert acc == 0


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        LinearSystemGF2(2, (0b100,), 0)
    with pytest.raises(ValueError):
        LinearSystemGF2.from_dense([[1, 0], [1]], [0, 0])
    with pytest.raises(ValueError):
        LinearSystemGF2.from_dense([[1, 0]], [0, 1])
