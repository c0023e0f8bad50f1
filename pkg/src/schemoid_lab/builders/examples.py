"""
Module for two small hand-made colored categories used as regression fixtures.

``pullback_counterexample`` is a two-object category on which pullbacks of
color-preserving functors are not color-preserving. ``prop_app_example`` is a
three-object colored category, not naturally colored, with a colored morphism
into the Hamming schemoid H(2,2) that sends an invertible color to distance 1.
"""

from dataclasses import dataclass
from typing import Any, Dict

from schemoid_lab.coloring.colored import ColoredCategory
from schemoid_lab.core.category import CategoryFunctor, FiniteCategory
from schemoid_lab.core.functors import NaturalTransformation, SetFunctor
from schemoid_lab.scheme.embedding import hamming_schemoid

U = ("1", "2", "3")


@dataclass(frozen=True)
class PullbackExample:
    """Colored category with a functor ``F`` and transformations ``eta``, ``lam : F ⇒ F``."""

    colored: ColoredCategory
    F: SetFunctor
    eta: NaturalTransformation
    lam: NaturalTransformation

    # object and morphism names
    x: int = 0
    y: int = 1
    id_x: int = 0
    id_y: int = 1
    f: int = 2

    def to_json(self) -> Dict[str, Any]:
        return {
            "colored": self.colored.to_json(),
            "functor": self.F.to_json(),
            "eta": [dict(c) for c in self.eta.components],
            "lambda": [dict(c) for c in self.lam.components],
        }


def pullback_counterexample() -> PullbackExample:
    """
    Objects ``x``, ``y``; morphisms ``id_x``, ``id_y`` and ``f : y → y`` with ``f∘f = id_y``.
    Colors ``{id_x, f}`` and ``{id_y}``. ``F`` is constant on ``{1, 2, 3}``,
    ``eta_x`` sends 1, 2 to 1 and ``lam_x`` sends 1, 2 to 2; both are the identity at ``y``.
    """
    base = FiniteCategory(
        2,
        ((0, 0), (1, 1), (1, 1)),
        (0, 1),
        {(0, 0): 0, (1, 1): 1, (1, 2): 2, (2, 1): 2, (2, 2): 1},
    )
    colored = ColoredCategory(base, (0, 1, 0), 2, ("sigma", "tau"))
    F = SetFunctor.constant(base, U)
    ident = {a: a for a in U}
    eta = NaturalTransformation(({"1": "1", "2": "1", "3": "3"}, dict(ident)))
    lam = NaturalTransformation(({"1": "2", "2": "2", "3": "3"}, dict(ident)))
    return PullbackExample(colored, F, eta, lam)


@dataclass(frozen=True)
class PropAppExample:
    """Colored category, its colored morphism ``u`` into H(2,2) and the invertible color ``tau``."""

    colored: ColoredCategory
    target: ColoredCategory
    u: CategoryFunctor
    tau: int

    def to_json(self) -> Dict[str, Any]:
        return {
            "colored": self.colored.to_json(),
            "functor": {"object_map": list(self.u.object_map), "morphism_map": list(self.u.morphism_map)},
            "tau": self.tau,
        }


def prop_app_example() -> PropAppExample:
    """
    Objects ``00``, ``01``, ``10``. Besides identities: ``a : 00 → 01`` with
    inverse ``a⁻¹``, ``b : 00 → 10`` and ``c : 01 → 10`` with ``c∘a = b``,
    ``b∘a⁻¹ = c``. Each identity is its own color, ``{a, a⁻¹}`` is one color and
    ``b``, ``c`` are singletons. ``u`` sends object ``ij`` to the word ``ij``.
    """
    # 0..2 identities, 3 a, 4 a^-1, 5 b, 6 c
    morphisms = ((0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (0, 2), (1, 2))
    compose = {}
    for f, (s, t) in enumerate(morphisms):
        compose[(t, f)] = f
        compose[(f, s)] = f
    compose.update({(4, 3): 0, (3, 4): 1, (6, 3): 5, (5, 4): 6})
    base = FiniteCategory(3, morphisms, (0, 1, 2), compose)
    colored = ColoredCategory(base, (0, 1, 2, 3, 3, 4, 5), 6, ("id00", "id01", "id10", "tau", "b", "c"))
    target = hamming_schemoid(2, 2)
    points = (0, 1, 2)  # 00, 01, 10 in H(2,2)
    n = target.base.object_count
    morphism_map = tuple(points[s] * n + points[t] for s, t in morphisms)
    return PropAppExample(colored, target, CategoryFunctor(points, morphism_map), 3)
