"""
Deciding whether a graph has a proper distinguishing 2-coloring, with a certificate either way.

A graph g qualifies iff it is bipartite and, taking its connected components in order of smallest vertex:
- every component C has a 2-coloring preserved by no nontrivial automorphism of C (for a connected bipartite
  graph either all 2-colorings do or none does, so checking the bipartition coloring is enough),
- no three components are isomorphic,
- a component isomorphic to another component is asymmetric.

The checks run in that order and the first one that fails names the NO certificate. A YES carries a witness
coloring: each component gets its bipartition coloring, except the second member of an isomorphic pair, which gets
the colors opposite to its twin under the (unique) isomorphism between them.
"""

import logging
import time
from typing import Annotated, Literal, Optional, Sequence, Union

from logzero import logger as default_logger
from pydantic import BaseModel, ConfigDict, Field, model_validator

from d2ctools.graphs.core import (
    Component,
    Graph,
    NotBipartiteError,
    NotConnectedError,
    OddCycleCertificate,
    TwoColoring,
    bipartition,
    connected_components,
    is_connected,
)
from d2ctools.iso.canonical import (
    CanonicalForm,
    CertificateError,
    are_isomorphic,
    canonical_form,
    has_color_preserving_nta,
    has_nta,
    isomorphism_between,
)
from d2ctools.iso.permutations import Permutation
from d2ctools.utils.misc import format_elapsed


class NonBipartite(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["NonBipartite"] = "NonBipartite"
    certificate: OddCycleCertificate


class ComponentNotDistinguishable(BaseModel):
    """`nta` acts on the whole graph, moving only the vertices of component `component_index`."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["ComponentNotDistinguishable"] = "ComponentNotDistinguishable"
    component_index: int
    nta: Permutation


class ThreeIsomorphicComponents(BaseModel):
    """`isomorphisms` map the first component onto the second and third, in component-local ids."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["ThreeIsomorphicComponents"] = "ThreeIsomorphicComponents"
    component_indices: tuple[int, int, int]
    isomorphisms: tuple[Permutation, Permutation]


class IsomorphicPairNotAsymmetric(BaseModel):
    """`iso` maps the first component onto the second; `nta` is an automorphism of the first (local ids)."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["IsomorphicPairNotAsymmetric"] = "IsomorphicPairNotAsymmetric"
    component_indices: tuple[int, int]
    iso: Permutation
    nta: Permutation


NoReason = Annotated[
    Union[NonBipartite, ComponentNotDistinguishable, ThreeIsomorphicComponents, IsomorphicPairNotAsymmetric],
    Field(discriminator="kind"),
]


class D2CVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    witness: Optional[TwoColoring] = None
    reason: Optional[NoReason] = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "D2CVerdict":
        if (self.witness is None) == (self.reason is None):
            raise ValueError("a verdict carries either a witness or a reason")
        return self

    @property
    def is_yes(self) -> bool:
        return self.witness is not None

    def verify(self, g: Graph) -> bool:
        """Re-check the certificate against g from scratch."""
        if self.witness is not None:
            return len(self.witness) == g.n and verify_distinguishing(g, self.witness)
        reason = self.reason
        if isinstance(reason, NonBipartite):
            return reason.certificate.is_valid_for(g)

        components = connected_components(g)
        if isinstance(reason, ComponentNotDistinguishable):
            return _verify_component_nta(g, components, reason)
        if isinstance(reason, ThreeIsomorphicComponents):
            i, j, k = reason.component_indices
            if len({i, j, k}) != 3 or not all(0 <= x < len(components) for x in (i, j, k)):
                return False
            first = components[i][0]
            to_j, to_k = reason.isomorphisms
            return to_j.maps_onto(first, components[j][0]) and to_k.maps_onto(first, components[k][0])
        i, j = reason.component_indices
        if i == j or not all(0 <= x < len(components) for x in (i, j)):
            return False
        first = components[i][0]
        return (
            reason.iso.maps_onto(first, components[j][0])
            and len(reason.nta) == first.n
            and not reason.nta.is_identity
            and reason.nta.is_automorphism_of(first)
        )


def _verify_component_nta(g: Graph, components: list[Component], reason: ComponentNotDistinguishable) -> bool:
    if not 0 <= reason.component_index < len(components) or len(reason.nta) != g.n:
        return False
    coloring = bipartition(g)
    if not isinstance(coloring, TwoColoring):
        return False
    members = set(components[reason.component_index][1])
    nta = reason.nta
    if any(nta[v] != v for v in range(g.n) if v not in members):
        return False
    return not nta.is_identity and nta.is_color_preserving_automorphism(g, coloring)


def cc_check(g: Graph) -> Optional[Permutation]:
    """None iff the connected bipartite graph g has a proper distinguishing 2-coloring.

    Otherwise returns a nontrivial automorphism preserving g's bipartition coloring.
    """
    if g.n == 0:
        raise ValueError("cc_check needs at least one vertex")
    if not is_connected(g):
        raise NotConnectedError("cc_check is defined on connected graphs only")
    coloring = bipartition(g)
    if isinstance(coloring, OddCycleCertificate):
        raise NotBipartiteError(coloring)
    if g.n == 1:
        return None
    return has_color_preserving_nta(g, coloring)


def verify_distinguishing(g: Graph, c: TwoColoring) -> bool:
    if len(c) != g.n:
        raise ValueError(f"coloring has length {len(c)} but the graph has {g.n} vertices")
    return c.is_proper(g) and has_color_preserving_nta(g, c) is None


def build_witness_coloring(
    components: Sequence[Component], iso_classes: Sequence[Sequence[int]], check_preconditions: bool = True
) -> TwoColoring:
    """Whole-graph coloring from per-component bipartitions, opposite colors across each isomorphic pair.

    `components` are (graph, vertex map) pairs as returned by `connected_components`; `iso_classes` partitions
    their indices into classes of isomorphic components.
    """
    covered = sorted(i for members in iso_classes for i in members)
    if covered != list(range(len(components))):
        raise ValueError("iso_classes must partition the component indices")
    n = sum(component.n for component, _ in components)
    colors = [0] * n
    for members in iso_classes:
        if len(members) > 2:
            raise ValueError(f"class {list(members)} has more than two isomorphic components")
        first, first_map = components[members[0]]
        coloring = bipartition(first)
        if isinstance(coloring, OddCycleCertificate):
            raise NotBipartiteError(coloring)
        if check_preconditions and cc_check(first) is not None:
            raise ValueError(f"component {members[0]} has no distinguishing 2-coloring")
        for v, color in enumerate(coloring.colors):
            colors[first_map[v]] = color
        if len(members) == 1:
            continue

        second, second_map = components[members[1]]
        if check_preconditions and has_nta(first) is not None:
            raise ValueError(f"paired component {members[0]} is not asymmetric")
        phi = are_isomorphic(first, second)
        if phi is None:
            raise ValueError(f"components {members[0]} and {members[1]} are not isomorphic")
        for v, color in enumerate(coloring.colors):
            colors[second_map[phi[v]]] = 3 - color
    return TwoColoring(colors=tuple(colors))


def _whole_graph_map(n: int, vertex_map: Sequence[int], local: Permutation) -> Permutation:
    images = list(range(n))
    for v, image in enumerate(local.p):
        images[vertex_map[v]] = vertex_map[image]
    return Permutation(p=tuple(images))


def _checked(g: Graph, verdict: D2CVerdict) -> D2CVerdict:
    if not verdict.verify(g):
        raise CertificateError(f"verdict failed re-verification: {verdict.model_dump_json()}")
    return verdict


def decide_d2c(g: Graph, logger: Optional[logging.Logger] = None) -> D2CVerdict:
    logger = logger or default_logger
    if g.n == 0:
        raise ValueError("decide_d2c needs at least one vertex")
    started = time.perf_counter()

    coloring = bipartition(g)
    if isinstance(coloring, OddCycleCertificate):
        logger.debug(f"d2c: odd cycle {list(coloring.cycle)}")
        return _checked(g, D2CVerdict(reason=NonBipartite(certificate=coloring)))

    components = connected_components(g)
    for index, (component, vertex_map) in enumerate(components):
        nta = cc_check(component)
        if nta is not None:
            logger.debug(f"d2c: component {index} is not distinguishable by its 2-coloring")
            whole = _whole_graph_map(g.n, vertex_map, nta)
            return _checked(g, D2CVerdict(reason=ComponentNotDistinguishable(component_index=index, nta=whole)))

    forms: list[CanonicalForm] = [canonical_form(component) for component, _ in components]
    classes: dict[str, list[int]] = {}
    for index, form in enumerate(forms):
        classes.setdefault(form.key, []).append(index)

    for members in classes.values():
        if len(members) >= 3:
            i, j, k = members[:3]
            reason = ThreeIsomorphicComponents(
                component_indices=(i, j, k),
                isomorphisms=(isomorphism_between(forms[i], forms[j]), isomorphism_between(forms[i], forms[k])),
            )
            logger.debug(f"d2c: components {i}, {j}, {k} are isomorphic")
            return _checked(g, D2CVerdict(reason=reason))

    for members in classes.values():
        if len(members) != 2:
            continue
        i, j = members
        nta = has_nta(components[i][0])
        if nta is not None:
            reason = IsomorphicPairNotAsymmetric(
                component_indices=(i, j), iso=isomorphism_between(forms[i], forms[j]), nta=nta
            )
            logger.debug(f"d2c: isomorphic components {i}, {j} are not asymmetric")
            return _checked(g, D2CVerdict(reason=reason))

    witness = build_witness_coloring(components, list(classes.values()), check_preconditions=False)
    verdict = _checked(g, D2CVerdict(witness=witness))
    logger.debug(
        f"d2c: YES for n={g.n} with {len(components)} components in {format_elapsed(time.perf_counter() - started)}"
    )
    return verdict
