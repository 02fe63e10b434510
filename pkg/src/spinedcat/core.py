"""Instance-independent machinery for spined categories.

A spined category is described at runtime by a :class:`SpinedInstance`:
a spine builder (index -> object), a deterministic morphism enumerator,
and a proxy-pushout builder for spans out of spine objects.  Everything
here -- the SC1/SC2 axiom checks, the spine-preservation and
proxy-pushout-preservation checks for candidate S-functors, the order
and generalized clique number -- is written against that contract only.

Objects are opaque values compared by their canonical encoding; all
operations are pure and deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Optional, Sequence

DEFAULT_ENUMERATION_CAP = 8


class SpinedError(Exception):
    """Base class for all library errors."""


class CapExceededError(SpinedError):
    """An input is larger than the documented cap for an exhaustive operation."""


class SpineMismatchError(SpinedError):
    """A span's apex is not the expected spine object, or legs disagree."""


class InvalidMorphismError(SpinedError):
    """A vertex map is not a valid morphism of the declared kind."""


class NoMediatorError(SpinedError):
    """SC2 violated: no morphism between the two proxy pushouts commutes."""


class NonUniqueMediatorError(SpinedError):
    """SC2 uniqueness violated: several commuting morphisms exist."""


@dataclass(frozen=True)
class Morphism:
    """A typed map between two objects of an instance.

    ``mapping`` carries the vertex/element assignment; order-theoretic
    instances whose arrows carry no map (divisibility) use an empty
    tuple.
    """

    domain: Any
    codomain: Any
    mapping: tuple[int, ...]
    kind: str

    def __call__(self, x: int) -> int:
        return self.mapping[x]


def identity_morphism(obj: Any, size: int, kind: str) -> Morphism:
    return Morphism(obj, obj, tuple(range(size)), kind)


def compose(outer: Morphism, inner: Morphism) -> Morphism:
    """``outer`` after ``inner``."""
    if inner.codomain != outer.domain:
        raise InvalidMorphismError("composition endpoints do not match")
    if inner.kind != outer.kind:
        raise InvalidMorphismError(f"kind mismatch: {inner.kind} vs {outer.kind}")
    return Morphism(
        inner.domain,
        outer.codomain,
        tuple(outer.mapping[x] for x in inner.mapping),
        inner.kind,
    )


@dataclass(frozen=True)
class SpanDiagram:
    """A span  G <- Omega_n -> H  out of a spine object."""

    index: int
    left: Morphism
    right: Morphism

    def __post_init__(self):
        if self.index < 0:
            raise SpineMismatchError("spine index must be non-negative")
        if self.left.domain != self.right.domain:
            raise SpineMismatchError("span legs must share their apex")

    @property
    def apex(self) -> Any:
        return self.left.domain


@dataclass(frozen=True)
class CoconeDiagram:
    """A cocone  G -> P <- H; ``left``/``right`` are the legs into the apex."""

    left: Morphism
    right: Morphism

    def __post_init__(self):
        if self.left.codomain != self.right.codomain:
            raise SpineMismatchError("cocone legs must share their apex")

    @property
    def apex(self) -> Any:
        return self.left.codomain


@dataclass(frozen=True)
class SFunctorSpec:
    """A named candidate S-functor: an object-level evaluator into the naturals."""

    name: str
    evaluate: Callable[[Any], int]

    def __call__(self, obj: Any) -> int:
        return self.evaluate(obj)


@dataclass(frozen=True)
class SpinedInstance:
    """A runnable description of one spined category.

    ``morphisms(x, y, limit=None)`` must enumerate valid morphisms in a
    deterministic lexicographic order and honour ``limit`` as an early
    exit.  ``spine_bound(x)`` must return an index B such that some
    morphism x -> spine(n) exists for an n <= B and no morphism
    spine(m) -> x exists for m > B; this keeps the order and
    generalized-clique scans finite and exact.
    """

    name: str
    object_kind: str
    spine: Callable[[int], Any]
    morphisms: Callable[..., list[Morphism]]
    is_morphism: Callable[[Morphism], bool]
    proxy_pushout: Callable[[SpanDiagram], CoconeDiagram]
    spine_bound: Callable[[Any], int]
    size: Optional[Callable[[Any], int]] = None
    cap: int = DEFAULT_ENUMERATION_CAP
    spine_limit: int = 64
    mediator_strategy: str = "pointwise"
    span_sampler: Optional[Callable[[random.Random, int], SpanDiagram]] = None

    def check_cap(self, obj: Any) -> None:
        if self.size is not None and self.size(obj) > self.cap:
            raise CapExceededError(
                f"{self.name}: object of size {self.size(obj)} exceeds the "
                f"enumeration cap {self.cap}"
            )


@dataclass(frozen=True)
class SC1Witness:
    index: int
    morphism: Morphism


def check_sc1(instance: SpinedInstance, obj: Any) -> SC1Witness:
    """Least n admitting a morphism obj -> spine(n), with one witness."""
    instance.check_cap(obj)
    bound = min(instance.spine_bound(obj), instance.spine_limit)
    for n in range(bound + 1):
        found = instance.morphisms(obj, instance.spine(n), limit=1)
        if found:
            return SC1Witness(n, found[0])
    raise CapExceededError(
        f"{instance.name}: no morphism into the spine up to index {bound}"
    )


def object_order(instance: SpinedInstance, obj: Any) -> int:
    """Least n with a morphism obj -> spine(n)."""
    return check_sc1(instance, obj).index


def generalized_clique(instance: SpinedInstance, obj: Any) -> int:
    """Greatest n with a morphism spine(n) -> obj (0 if only spine(0) maps in)."""
    instance.check_cap(obj)
    bound = min(instance.spine_bound(obj), instance.spine_limit)
    for n in range(bound, 0, -1):
        if instance.morphisms(instance.spine(n), obj, limit=1):
            return n
    return 0


@dataclass(frozen=True)
class SC2Verdict:
    mediator: Morphism
    unique: bool
    commuting_count: int
    exhaustive: bool


def _pointwise_mediator(
    instance: SpinedInstance,
    cocone: CoconeDiagram,
    target_left: Morphism,
    target_right: Morphism,
    kind: str,
) -> Morphism:
    """Mediator forced by commutation when the cocone legs cover the apex."""
    apex_size = instance.size(cocone.apex)
    values: list[Optional[int]] = [None] * apex_size
    for leg, target in ((cocone.left, target_left), (cocone.right, target_right)):
        for src, dst in zip(leg.mapping, target.mapping):
            if values[src] is None:
                values[src] = dst
            elif values[src] != dst:
                raise NoMediatorError(
                    "commutation constraints conflict; no mediator exists"
                )
    if any(v is None for v in values):
        raise NoMediatorError("cocone legs do not cover the apex")
    candidate = Morphism(
        cocone.apex, target_left.codomain, tuple(values), kind  # type: ignore[arg-type]
    )
    if not instance.is_morphism(candidate):
        raise NoMediatorError("the forced vertex map is not a valid morphism")
    return candidate


def check_sc2(
    instance: SpinedInstance,
    span: SpanDiagram,
    ext_left: Morphism,
    ext_right: Morphism,
) -> SC2Verdict:
    """Verify SC2 for one span and one pair of extensions.

    Builds the proxy pushouts of the span and of the extended span, then
    finds the unique morphism between the two apexes commuting with the
    extensions.  In vertex-based instances the cocone legs jointly cover
    the apex, so commutation forces the mediator pointwise and
    uniqueness is structural; when the apex is within the enumeration
    cap the verdict is additionally confirmed by exhausting all
    morphisms between the apexes.
    """
    if ext_left.domain != span.left.codomain:
        raise SpineMismatchError("ext_left must extend the span's left object")
    if ext_right.domain != span.right.codomain:
        raise SpineMismatchError("ext_right must extend the span's right object")
    cocone = instance.proxy_pushout(span)
    extended = SpanDiagram(
        span.index, compose(ext_left, span.left), compose(ext_right, span.right)
    )
    cocone2 = instance.proxy_pushout(extended)
    target_left = compose(cocone2.left, ext_left)
    target_right = compose(cocone2.right, ext_right)
    kind = span.left.kind

    exhaustive = (
        instance.size is None or instance.size(cocone.apex) <= instance.cap
    )
    if instance.mediator_strategy == "pointwise" and instance.size is not None:
        mediator = _pointwise_mediator(
            instance, cocone, target_left, target_right, kind
        )
        count = 1
        if exhaustive:
            commuting = [
                m
                for m in instance.morphisms(cocone.apex, cocone2.apex)
                if compose(m, cocone.left) == target_left
                and compose(m, cocone.right) == target_right
            ]
            count = len(commuting)
            if count == 0:
                raise NoMediatorError("exhaustive search found no commuting morphism")
            if count > 1:
                raise NonUniqueMediatorError(
                    f"{count} commuting morphisms between the proxy pushouts"
                )
    else:
        commuting = [
            m
            for m in instance.morphisms(cocone.apex, cocone2.apex)
            if compose(m, cocone.left) == target_left
            and compose(m, cocone.right) == target_right
        ]
        if not commuting:
            raise NoMediatorError("no morphism between the proxy pushouts commutes")
        if len(commuting) > 1:
            raise NonUniqueMediatorError(
                f"{len(commuting)} commuting morphisms between the proxy pushouts"
            )
        mediator = commuting[0]
        count = 1
    return SC2Verdict(mediator, True, count, exhaustive)


@dataclass(frozen=True)
class SpinalVerdict:
    """Outcome of checking one candidate S-functor against sampled spans.

    ``sf1_failures`` holds (index, expected, got); ``sf2_failures`` holds
    (span position, expected, got); ``monotonicity_failures`` holds
    (span position, arrow role, value at domain, value at codomain).
    """

    functor: str
    sf1_failures: tuple[tuple[int, int, int], ...]
    sf2_failures: tuple[tuple[int, int, int], ...]
    monotonicity_failures: tuple[tuple[int, str, int, int], ...]
    spans_checked: int

    @property
    def sf1_ok(self) -> bool:
        return not self.sf1_failures

    @property
    def sf2_ok(self) -> bool:
        return not self.sf2_failures

    @property
    def monotone(self) -> bool:
        return not self.monotonicity_failures

    @property
    def ok(self) -> bool:
        return self.sf1_ok and self.sf2_ok and self.monotone


def check_spinal(
    instance: SpinedInstance,
    functor: SFunctorSpec,
    spans: Sequence[SpanDiagram],
    sf1_indices: Optional[Iterable[int]] = None,
) -> SpinalVerdict:
    """Check SF1, SF2 and functoriality for ``functor`` on the given spans.

    SF1: functor(spine(n)) == n on ``sf1_indices`` (default 0..6).
    SF2: functor(proxy apex) == max over the two feet, per span.
    Monotonicity is checked on the arrows present in each span and its
    proxy cocone; failures are reported, never raised.
    """
    if sf1_indices is None:
        sf1_indices = range(min(instance.spine_limit, 6) + 1)
    sf1_failures = []
    for n in sf1_indices:
        got = functor(instance.spine(n))
        if got != n:
            sf1_failures.append((n, n, got))
    sf2_failures = []
    mono_failures = []
    for pos, span in enumerate(spans):
        cocone = instance.proxy_pushout(span)
        left_val = functor(span.left.codomain)
        right_val = functor(span.right.codomain)
        apex_val = functor(cocone.apex)
        expected = max(left_val, right_val)
        if apex_val != expected:
            sf2_failures.append((pos, expected, apex_val))
        arrows = (
            ("span-left", span.left),
            ("span-right", span.right),
            ("cocone-left", cocone.left),
            ("cocone-right", cocone.right),
        )
        for role, arrow in arrows:
            lo = functor(arrow.domain)
            hi = functor(arrow.codomain)
            if lo > hi:
                mono_failures.append((pos, role, lo, hi))
    return SpinalVerdict(
        functor.name,
        tuple(sf1_failures),
        tuple(sf2_failures),
        tuple(mono_failures),
        len(spans),
    )


def sfunctor_join(f: SFunctorSpec, g: SFunctorSpec) -> SFunctorSpec:
    """Pointwise maximum of two S-functors (the semi-lattice join)."""
    return SFunctorSpec(
        name=f"max({f.name},{g.name})",
        evaluate=lambda obj: max(f(obj), g(obj)),
    )


def sample_spans(
    instance: SpinedInstance,
    count: int,
    seed: int = 0,
    max_part: int = 6,
) -> list[SpanDiagram]:
    """Deterministic span sample for axiom checks, via the instance's sampler."""
    if instance.span_sampler is None:
        raise SpinedError(f"{instance.name} does not provide a span sampler")
    rng = random.Random(seed)
    return [instance.span_sampler(rng, max_part) for _ in range(count)]
