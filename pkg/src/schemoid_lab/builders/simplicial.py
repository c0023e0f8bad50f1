"""
Module for simplicial complexes, their face-poset schemoids and trace monoids.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from schemoid_lab.coloring.colored import ColoredCategory
from schemoid_lab.core.category import FiniteCategory
from schemoid_lab.exceptions import StructuralError
from schemoid_lab.quotient.presentation import CategoryPresentation, one_object_presentation

logger = logging.getLogger(__name__)

Face = FrozenSet[int]


def _face_key(face: Face) -> Tuple[int, Tuple[int, ...]]:
    return len(face), tuple(sorted(face))


def face_name(face: Face) -> str:
    return "{" + ",".join(str(v) for v in sorted(face)) + "}"


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of vertex sets; the empty face is always present."""

    vertices: Tuple[int, ...]
    faces: Tuple[Face, ...]

    def __post_init__(self):
        listed = set(self.faces)
        for face in self.faces:
            if not face <= set(self.vertices):
                raise StructuralError(f"Face {face_name(face)} uses an unknown vertex", pointer="faces")
            for k in range(len(face)):
                for sub in combinations(sorted(face), k):
                    if frozenset(sub) not in listed:
                        raise StructuralError(f"Faces are not closed under subsets at {face_name(face)}",
                                              pointer="faces")

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], vertices: Optional[Sequence[int]] = None) -> "SimplicialComplex":
        """
        Complex generated by ``facets``.

        Args:
            facets: Maximal faces (any generating family works)
            vertices: Vertex set; isolated vertices may be listed here only

        Returns:
            Complex with faces sorted by size then lexicographically
        """
        faces = {frozenset()}
        for facet in facets:
            facet = sorted(set(facet))
            for k in range(len(facet) + 1):
                faces.update(frozenset(sub) for sub in combinations(facet, k))
        verts = set(vertices or ()) | {v for face in faces for v in face}
        faces.update(frozenset((v,)) for v in verts)
        return cls(tuple(sorted(verts)), tuple(sorted(faces, key=_face_key)))

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        """Full simplex on vertices ``1..n``."""
        return cls.from_facets([range(1, n + 1)])

    @classmethod
    def boundary(cls, n: int) -> "SimplicialComplex":
        """Boundary of the simplex on ``1..n``."""
        return cls.from_facets(combinations(range(1, n + 1), n - 1), range(1, n + 1))

    def edges(self) -> List[Tuple[int, int]]:
        return [tuple(sorted(face)) for face in self.faces if len(face) == 2]

    def one_skeleton(self) -> "SimplicialComplex":
        return SimplicialComplex.from_facets([face for face in self.faces if len(face) <= 2], self.vertices)

    def face_index(self) -> Dict[Face, int]:
        return {face: i for i, face in enumerate(self.faces)}

    def to_json(self):
        return {"vertices": list(self.vertices), "faces": [sorted(face) for face in self.faces]}


def simplicial_schemoid(K: SimplicialComplex) -> ColoredCategory:
    """
    Face poset of ``K`` with the inclusion ``τ → ν`` colored by the face ``ν∖τ``.

    Returns:
        Colored category; color ``k`` is ``K.faces[k]`` (color 0 is the empty face,
        i.e. the identities)
    """
    index = K.face_index()
    arrows = [(index[t], index[n]) for t in K.faces for n in K.faces if t <= n]
    arrows.sort()
    base = FiniteCategory.from_arrows(len(K.faces), arrows)
    colors = tuple(index[K.faces[n] - K.faces[t]] for t, n in base.morphisms)
    names = tuple(face_name(face) for face in K.faces)
    logger.debug(f"Simplicial schemoid: {len(K.faces)} faces, {len(arrows)} inclusions")
    return ColoredCategory(base, colors, len(K.faces), names)


def face_weights(K: SimplicialComplex) -> List[int]:
    """Weight of every color of ``simplicial_schemoid(K)``: the size of the face."""
    return [len(face) for face in K.faces]


def vertex_colors(K: SimplicialComplex) -> List[int]:
    """Colors of ``simplicial_schemoid(K)`` given by single vertices, in vertex order."""
    index = K.face_index()
    return [index[frozenset((v,))] for v in K.vertices]


def trace_monoid_presentation(K: SimplicialComplex) -> CategoryPresentation:
    """
    Monoid on the vertices where ``i`` and ``j`` commute exactly when ``{i, j}`` is an edge.
    """
    position = {v: i for i, v in enumerate(K.vertices)}
    relations = [((position[i], position[j]), (position[j], position[i])) for i, j in K.edges()]
    return one_object_presentation(len(K.vertices), relations, [str(v) for v in K.vertices])


def complexes_on(n: int) -> List[SimplicialComplex]:
    """Every simplicial complex on the vertex set ``1..n`` (all vertices present)."""
    vertices = list(range(1, n + 1))
    candidates = [frozenset(c) for k in range(2, n + 1) for c in combinations(vertices, k)]
    out = []
    for mask in range(1 << len(candidates)):
        chosen = [candidates[i] for i in range(len(candidates)) if mask >> i & 1]
        chosen_set = set(chosen)
        closed = all(frozenset(sub) in chosen_set
                     for face in chosen if len(face) > 2
                     for sub in combinations(sorted(face), len(face) - 1))
        if closed:
            out.append(SimplicialComplex.from_facets(chosen, vertices))
    return out
