import random
from fractions import Fraction

import pytest

from twodom import kernels
from twodom.algorithms import _make_engine
from twodom.coloring import ColoredState
from twodom.graph import gen_named, gen_random_regular
from twodom.weights import builtin_coefficients, total_weight

HAS_C = "c" in kernels.available()


def make_engine(module, g, c):
    eng = module.GreedyEngine(g.adjacency, c.d, int(c.a), [int(v) for v in c.y],
                              [int(v) for v in c.b])
    return eng


def drive_random(engine, g, rng, steps):
    picked = []
    for _ in range(steps):
        cand = [v for v in range(g.n) if engine.snapshot()[0][v] != 3]
        if not cand:
            break
        v = rng.choice(cand)
        engine.apply(v)
        picked.append(v)
    return picked


def test_python_engine_single_drop_matches_exact_oracle():
    # Dual route: the kernel's local drop must equal the exact rational drop
    # computed by clone-and-select on the bucketed state.
    c = builtin_coefficients(6)
    for seed in (0, 1, 2):
        g = gen_random_regular(24, 6, seed=seed)
        eng = make_engine(kernels.pykernel, g, c)
        state = ColoredState(g)
        rng = random.Random(seed)
        for _ in range(5):
            base = total_weight(state, c)
            for v in range(g.n):
                if state.in_d[v]:
                    continue
                exact = base - total_weight(state.clone().select(v), c)
                assert Fraction(eng.single_drop(v)) == exact
            cand = [v for v in range(g.n) if not state.in_d[v]]
            v = rng.choice(cand)
            eng.apply(v)
            state.select(v)


def test_python_engine_pair_drop_matches_exact_oracle():
    c = builtin_coefficients(6)
    g = gen_random_regular(18, 6, seed=7)
    eng = make_engine(kernels.pykernel, g, c)
    state = ColoredState(g)
    for v in (0, 5):
        eng.apply(v)
        state.select(v)
    base = total_weight(state, c)
    checked = 0
    for p in range(g.n):
        if state.in_d[p]:
            continue
        for q in g.adjacency[p]:
            if q > p and not state.in_d[q]:
                exact = base - total_weight(state.clone().select(p).select(q), c)
                assert Fraction(eng.pair_drop(p, q)) == exact
                checked += 1
    assert checked > 10


@pytest.mark.skipif(not HAS_C, reason="compiled kernel not built")
def test_compiled_engine_mirrors_python_engine():
    c = builtin_coefficients(7)
    for seed in (3, 4):
        g = gen_random_regular(30, 7, seed=seed)
        py = make_engine(kernels.pykernel, g, c)
        cc = make_engine(kernels.load("c"), g, c)
        rng = random.Random(seed)
        for step in range(12):
            assert py.snapshot() == cc.snapshot()
            assert py.best_single() == cc.best_single()
            assert py.best_pair() == cc.best_pair()
            assert py.whites() == cc.whites()
            assert py.is_done() == cc.is_done()
            cand = [v for v in range(g.n) if py.snapshot()[0][v] != 3]
            if not cand:
                break
            v = rng.choice(cand)
            py.apply(v)
            cc.apply(v)


@pytest.mark.skipif(not HAS_C, reason="compiled kernel not built")
def test_compiled_engine_seed_resume():
    c = builtin_coefficients(6)
    g = gen_random_regular(20, 6, seed=11)
    state = ColoredState(g)
    for v in (1, 2, 8):
        state.select(v)
    py = make_engine(kernels.pykernel, g, c)
    cc = make_engine(kernels.load("c"), g, c)
    py.seed([int(x) for x in state.color], list(state.wy))
    cc.seed([int(x) for x in state.color], list(state.wy))
    assert py.snapshot() == cc.snapshot()
    assert py.best_single() == cc.best_single()


def test_engine_budget_guard_falls_back():
    # Weights too large for the 64-bit kernel budget push the run onto the
    # exact path; results must be identical either way.
    c = builtin_coefficients(6)
    big = 2 ** 45
    scaled = c.replace(s=c.s * big, a=c.a * big,
                       **{f"y{i}": c.y[i] * big for i in range(c.d + 2)},
                       **{f"b{i}": c.b[i] * big for i in range(1, c.d + 2)})
    g = gen_named("K7")
    assert _make_engine(g, scaled, ColoredState(g), None) is None
    from twodom.algorithms import weight_greedy
    d_big, cert_big = weight_greedy(g, scaled)
    d_ref, cert_ref = weight_greedy(g, c)
    assert d_big == d_ref
    assert [s.batch for s in cert_big.steps] == [s.batch for s in cert_ref.steps]


def test_kernel_loader():
    assert kernels.load("python") is kernels.pykernel
    with pytest.raises(ValueError):
        kernels.load("fortran")
    names = set(kernels.available())
    assert "python" in names
    assert kernels.IMPL in names
