"""Shared fixtures: the small algebras every suite exercises."""

from __future__ import annotations

from spherica.algebras import Algebra, Arrow, QuiverPresentation, algebra_from_quiver
from spherica.linalg import Field

F101 = Field.prime(101)


def dual_numbers(field=F101) -> Algebra:
    q = QuiverPresentation(
        vertices=("v",),
        arrows=(Arrow("x", "v", "v"),),
        relations=(((1, ("x", "x")),),),
        length_bound=2,
    )
    return algebra_from_quiver(q, field, name="D")


def x_cubed(field=F101) -> Algebra:
    q = QuiverPresentation(
        vertices=("v",),
        arrows=(Arrow("x", "v", "v"),),
        relations=(((1, ("x", "x", "x")),),),
        length_bound=3,
    )
    return algebra_from_quiver(q, field, name="X3")


def zigzag_a2(field=F101) -> Algebra:
    q = QuiverPresentation(
        vertices=("1", "2"),
        arrows=(Arrow("a", "1", "2"), Arrow("b", "2", "1")),
        relations=(((1, ("a", "b", "a")),), ((1, ("b", "a", "b")),)),
        length_bound=3,
    )
    return algebra_from_quiver(q, field, name="Z")


def a2_path_algebra(field=F101) -> Algebra:
    q = QuiverPresentation(
        vertices=("1", "2"),
        arrows=(Arrow("a", "1", "2"),),
        relations=(),
        length_bound=2,
    )
    return algebra_from_quiver(q, field, name="A2")


def k_times_k(field=F101) -> Algebra:
    q = QuiverPresentation(vertices=("u", "w"), arrows=(), relations=(), length_bound=1)
    return algebra_from_quiver(q, field, name="KK")
