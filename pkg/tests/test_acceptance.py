"""Acceptance gate: one test per primary criterion, with its stated budget.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion.
"""

import json
import math
import random
import time

from alcoves import group
from alcoves.conjugacy import (
    centralizer,
    coconjugation_set,
    conjugacy_class,
    fix_lattice,
    mod_move_index,
    move_set,
)
from alcoves.export import export_scene_json, export_svg, scene_json_bytes, text_report
from alcoves.lattice import contains, vec_sub
from alcoves.rootdata import TYPE_TAGS, root_datum
from alcoves.scene import build_scene, cycle_type, symmetric_group_image
from alcoves.words import AffineElement, AffineWeylGroup

from conftest import RANK2_TAGS, RANK3_TAGS
from oracles import brute_conjugacy_class, brute_conjugators, brute_shortest_lex_words


def _passed(n: int, text: str) -> None:
    print(f"\n[acceptance] criterion {n:2d}: PASS  {text}")


def test_criterion_01_word_decomposition():
    a2 = group("A2")
    start = time.perf_counter()
    x = a2.parse("0120102")
    y = a2.parse("21021021020")
    elapsed = time.perf_counter() - start
    assert x.lam == (2, 2) and a2.spherical_word(x.w) == (1,)
    assert y.lam == (-2, -3) and a2.spherical_word(y.w) == (2,)
    assert elapsed < 2e-3  # two parses, < 1 ms each
    _passed(1, "A2 words 0120102 and 21021021020 decompose exactly")


def test_criterion_02_figure3_decomposition():
    c2 = group("C2")
    x = c2.parse("201210121")
    assert x.lam == (2, 2) and c2.spherical_word(x.w) == (2,)
    _passed(2, "C2 word 201210121 = t_(2,2)*s_2")


def test_criterion_03_finite_weyl_orders():
    orders = [group(tag).order_w0 for tag in TYPE_TAGS]
    assert orders == [4, 6, 8, 8, 12, 24, 48, 48]
    _passed(3, f"W0 orders {orders}")


def test_criterion_04_mod_move_finite_index():
    start = time.perf_counter()
    for tag in TYPE_TAGS:
        g = group(tag)
        for w in g.finite_elements():
            assert mod_move_index(g, w) != math.inf
    c2 = group("C2")
    assert mod_move_index(c2, c2.parse("2").w) == 2
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _passed(4, f"Mod(w) has finite index everywhere; C2 s_2 index 2 ({elapsed:.2f}s)")


def test_criterion_05_figure1_membership():
    a2 = group("A2")
    res = conjugacy_class(a2, a2.parse("t_(2,2)*s_1"), 5)
    assert a2.parse("t_(-2,-3)*s_2") in res.elements
    _passed(5, "t_(-2,-3)*s_2 lies in the class of t_(2,2)*s_1 at bound 5")


def test_criterion_06_conjugacy_oracle_equivalence():
    start = time.perf_counter()
    for tag in RANK2_TAGS:
        g = group(tag)
        rng = random.Random(60_000 + hash(tag) % 1000)
        for _ in range(20):
            x = AffineElement(
                (rng.randint(-2, 2), rng.randint(-2, 2)),
                rng.choice(g.finite_elements()),
            )
            assert set(conjugacy_class(g, x, 3).elements) == brute_conjugacy_class(g, x, 3)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    _passed(6, f"100 random classes match the brute-force oracle ({elapsed:.1f}s)")


def test_criterion_07_coconjugation_oracle_equivalence():
    start = time.perf_counter()
    for tag in RANK2_TAGS:
        g = group(tag)
        rng = random.Random(70_000 + hash(tag) % 1000)
        for _ in range(20):
            x = AffineElement(
                (rng.randint(-2, 2), rng.randint(-2, 2)),
                rng.choice(g.finite_elements()),
            )
            z = AffineElement(
                (rng.randint(-2, 2), rng.randint(-2, 2)),
                rng.choice(g.finite_elements()),
            )
            y = g.conjugate(z, x)
            res = coconjugation_set(g, x, y, 3)
            assert set(res.elements) == brute_conjugators(g, x, y, 3)
            for zz in res.elements:
                assert g.conjugate(zz, x) == y
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    _passed(7, f"100 random coconjugation sets match the oracle ({elapsed:.1f}s)")


def test_criterion_08_figure2_dimensions():
    a3 = group("A3")
    x = a3.parse("13")
    assert move_set(a3, x).rank == 2
    fix = fix_lattice(a3, x.w)
    assert fix.rank == 1
    res = centralizer(a3, x, 2)
    assert res.elements
    parts = {p.direction.id: p for p in res.family.parts}
    for z in res.elements:
        part = parts[z.w.id]
        assert part.lattice == fix
        assert contains(fix, vec_sub(z.lam, part.base))
    _passed(8, "A3 s_13: Mov rank 2, Fix rank 1, centralizer on fix-lattice cosets")


def test_criterion_09_identity_class_3d():
    for tag in RANK3_TAGS:
        g = group(tag)
        res = conjugacy_class(g, g.identity, 2)
        assert res.elements == (g.identity,)
        scene = build_scene(g, res, 2, x=g.identity)
        striped = [sa for sa in scene.alcoves if sa.striped]
        assert len(striped) == 1 and striped[0].alcove.element == g.identity
    _passed(9, "identity classes are {e} in A3, B3, C3 and e is striped")


def test_criterion_10_reduced_words_exhaustive():
    start = time.perf_counter()
    for tag in ("A2", "B2"):
        g = group(tag)
        oracle = brute_shortest_lex_words(g, 6)
        assert len(oracle) > 50
        for elt, word in oracle.items():
            assert g.lex_first_reduced_word(elt) == word
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    _passed(10, f"lex-first reduced words match exhaustive enumeration ({elapsed:.1f}s)")


def test_criterion_11_sym6_embedding():
    from alcoves.lattice import mat_mul

    for tag in ("B3", "C3"):
        g = group(tag)
        images = {w.id: symmetric_group_image(g, w) for w in g.finite_elements()}
        assert len(set(images.values())) == 48
        for u in g.finite_elements():
            for v in g.finite_elements():
                uv = g.weyl(mat_mul(u.matrix, v.matrix))
                assert images[uv.id] == tuple(images[u.id][images[v.id][i]] for i in range(6))
        assert cycle_type(g, g.identity.w) == (1, 1, 1, 1, 1, 1)
        assert cycle_type(g, g.parse("3").w) == (2, 1, 1, 1, 1)
    _passed(11, "Sym(6) embedding is an injective homomorphism; cycle types check")


def test_criterion_12_determinism():
    def run_once() -> tuple[bytes, bytes, bytes]:
        # fresh group instances, as an independent run would build them
        g = AffineWeylGroup(root_datum("C2"))
        x = g.parse("t_(2,2)*s_2")
        res = conjugacy_class(g, x, 3)
        report = text_report(g, res)
        scene = build_scene(g, res, 3, x=x)
        return (
            report.encode(),
            export_svg(scene).encode(),
            scene_json_bytes(export_scene_json(scene, report)),
        )

    first, second = run_once(), run_once()
    assert first == second
    _passed(12, "report, SVG and scene JSON are byte-identical across runs")
