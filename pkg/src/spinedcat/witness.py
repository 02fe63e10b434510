"""Executable reproductions of the counterexamples and special instances.

Covers the divisibility category with its prime-power spine (where the
generalized clique number violates proxy-pushout preservation), finite
posets glued along chains (where no spine-preserving functor can respect
pushouts at all), the failure of the order map on graphs, and the
classic clique-with-a-cycle graph on which every S-functor is forced to
agree even though the graph is not chordal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Optional

from .chordal import is_chordal, triangulation_graph
from .core import (
    CoconeDiagram,
    Morphism,
    SFunctorSpec,
    SpanDiagram,
    SpinalVerdict,
    SpinedError,
    SpinedInstance,
    check_spinal,
    compose,
    generalized_clique,
    object_order,
    sample_spans,
)
from .graph import (
    clique_number,
    complete_graph,
    cycle_graph,
    enumerate_monomorphisms,
    grph_mono_instance,
    is_monomorphism,
)


# ---------------------------------------------------------------------------
# Divisibility


@dataclass(frozen=True)
class DivObject:
    """A positive integer represented by its prime factorization.

    Spine objects grow super-exponentially, so divisibility tests run on
    the factorizations; the integer value is materialized on demand.
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError("factors must be sorted primes with exponents >= 1")
            last = p

    @classmethod
    def from_int(cls, v: int) -> "DivObject":
        if v < 1:
            raise ValueError("divisibility objects are positive integers")
        factors = []
        d = 2
        while d * d <= v:
            if v % d == 0:
                e = 0
                while v % d == 0:
                    v //= d
                    e += 1
                factors.append((d, e))
            d += 1
        if v > 1:
            factors.append((v, 1))
        return cls(tuple(factors))

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def exponent(self, prime: int) -> int:
        for p, e in self.factors:
            if p == prime:
                return e
        return 0


def divides(a: DivObject, b: DivObject) -> bool:
    return all(e <= b.exponent(p) for p, e in a.factors)


def div_lcm(a: DivObject, b: DivObject) -> DivObject:
    primes = sorted({p for p, _ in a.factors} | {p for p, _ in b.factors})
    return DivObject(tuple((p, max(a.exponent(p), b.exponent(p))) for p in primes))


def max_prime_exponent(v: DivObject) -> int:
    """Highest exponent in the factorization; 0 for the unit."""
    return max((e for _, e in v.factors), default=0)


@lru_cache(maxsize=None)
def _primes_up_to(n: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (n + 1) if n >= 0 else bytearray()
    out = []
    for p in range(2, n + 1):
        if sieve[p]:
            out.append(p)
            for q in range(p * p, n + 1, p):
                sieve[q] = 0
    return tuple(out)


@lru_cache(maxsize=None)
def div_spine(n: int) -> DivObject:
    """Product over primes p <= n of p^n (so indices 0 and 1 both name the unit)."""
    return DivObject(tuple((p, n) for p in _primes_up_to(n)))


def _div_morphisms(a: DivObject, b: DivObject, limit=None) -> list[Morphism]:
    if divides(a, b):
        return [Morphism(a, b, (), "divisibility")]
    return []


def _div_is_morphism(m: Morphism) -> bool:
    return (
        m.kind == "divisibility"
        and m.mapping == ()
        and isinstance(m.domain, DivObject)
        and isinstance(m.codomain, DivObject)
        and divides(m.domain, m.codomain)
    )


def _div_proxy(span: SpanDiagram) -> CoconeDiagram:
    if span.apex != div_spine(span.index):
        raise SpinedError("span apex must be a spine object of the divisibility poset")
    a, b = span.left.codomain, span.right.codomain
    apex = div_lcm(a, b)
    return CoconeDiagram(
        Morphism(a, apex, (), "divisibility"),
        Morphism(b, apex, (), "divisibility"),
    )


def _div_bound(v: DivObject) -> int:
    largest_prime = max((p for p, _ in v.factors), default=0)
    return max(largest_prime, max_prime_exponent(v))


def sample_div_span(rng: random.Random, max_part: int = 6) -> SpanDiagram:
    k = rng.randint(0, 2)
    spine = div_spine(k)

    def part() -> DivObject:
        return div_lcm(spine, DivObject.from_int(rng.randint(1, 600)))

    left, right = part(), part()
    return SpanDiagram(
        k,
        Morphism(spine, left, (), "divisibility"),
        Morphism(spine, right, (), "divisibility"),
    )


@lru_cache(maxsize=1)
def ndiv_instance() -> SpinedInstance:
    """Positive integers under divisibility, spine n -> product of p^n over
    primes p <= n, least common multiples as proxy pushouts."""
    return SpinedInstance(
        name="N_div",
        object_kind="divisibility-integer",
        spine=div_spine,
        morphisms=_div_morphisms,
        is_morphism=_div_is_morphism,
        proxy_pushout=_div_proxy,
        spine_bound=_div_bound,
        size=None,
        cap=10**9,
        spine_limit=10**5,
        mediator_strategy="enumerate",
        span_sampler=sample_div_span,
    )


MPE_SFUNCTOR = SFunctorSpec("max-prime-exponent", max_prime_exponent)


@dataclass(frozen=True)
class CliqueFailureReport:
    """Generalized clique number against lcm gluing: the quoted violation."""

    omega_left: int
    omega_right: int
    omega_lcm: int
    lcm_value: int
    violation: bool
    mpe_verdict: SpinalVerdict
    spine_unit_collision: bool

    def __str__(self) -> str:
        lines = [
            "generalized clique number on the divisibility category:",
            f"  omega(16)   = {self.omega_left}",
            f"  omega(81)   = {self.omega_right}",
            f"  omega(lcm)  = omega({self.lcm_value}) = {self.omega_lcm}",
            f"  proxy-pushout preservation needs max({self.omega_left},"
            f"{self.omega_right}) = {max(self.omega_left, self.omega_right)}"
            f" -- violated: {self.violation}",
            "max-prime-exponent as a spine functor:",
            f"  pushout preservation failures: {len(self.mpe_verdict.sf2_failures)}"
            f" on {self.mpe_verdict.spans_checked} sampled spans",
            f"  spine indices 0 and 1 both name the unit, so no functor can"
            f" assign both; index 1 excluded: {self.spine_unit_collision}",
        ]
        return "\n".join(lines)


def demo_clique_failure(seed: int = 0, span_count: int = 30) -> CliqueFailureReport:
    """Reproduce omega(16)=2, omega(81)=1, omega(1296)=4 and check that the
    max-prime-exponent map preserves lcm gluings on a seeded span sample."""
    inst = ndiv_instance()
    a = DivObject.from_int(16)
    b = DivObject.from_int(81)
    lcm = div_lcm(a, b)
    omega_a = generalized_clique(inst, a)
    omega_b = generalized_clique(inst, b)
    omega_lcm = generalized_clique(inst, lcm)
    if (omega_a, omega_b, omega_lcm) != (2, 1, 4) or lcm.value != 1296:
        raise SpinedError("divisibility reproduction failed; library bug")
    spans = sample_spans(inst, span_count, seed)
    verdict = check_spinal(inst, MPE_SFUNCTOR, spans, sf1_indices=range(0, 7))
    # The spine formula makes indices 0 and 1 collide on the unit, so
    # spine preservation is unsatisfiable at index 1 for any functor;
    # everything else must be clean.
    if verdict.sf1_failures != ((1, 1, 0),):
        raise SpinedError("unexpected spine-preservation outcome; library bug")
    if not (verdict.sf2_ok and verdict.monotone):
        raise SpinedError("max-prime-exponent failed pushout preservation; bug")
    return CliqueFailureReport(
        omega_a,
        omega_b,
        omega_lcm,
        lcm.value,
        omega_lcm != max(omega_a, omega_b),
        verdict,
        True,
    )


# ---------------------------------------------------------------------------
# Posets


class AntisymmetryError(SpinedError):
    """A gluing produced a genuine preorder; reported, never collapsed."""


@dataclass(frozen=True)
class Poset:
    """A finite poset: per-element bitmask of the elements above it."""

    n: int
    le: tuple[int, ...]

    def __post_init__(self):
        if len(self.le) != self.n:
            raise ValueError("one relation row per element required")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.le):
            if row & ~full:
                raise ValueError("relation out of range")
            if not row >> i & 1:
                raise ValueError("relation must be reflexive")
        for i in range(self.n):
            for j in range(self.n):
                if i != j and self.le[i] >> j & 1:
                    if self.le[j] >> i & 1:
                        raise ValueError("relation must be antisymmetric")
                    if self.le[j] & ~self.le[i]:
                        raise ValueError("relation must be transitive")

    def leq(self, i: int, j: int) -> bool:
        return bool(self.le[i] >> j & 1)


def chain(n: int) -> Poset:
    full = (1 << n) - 1
    return Poset(n, tuple((full >> i) << i for i in range(n)))


def is_poset_mono(m: Morphism) -> bool:
    """Order-preserving injection between posets."""
    p, q = m.domain, m.codomain
    if not isinstance(p, Poset) or not isinstance(q, Poset):
        return False
    if len(m.mapping) != p.n or len(set(m.mapping)) != p.n:
        return False
    if any(not 0 <= x < q.n for x in m.mapping):
        return False
    return all(
        q.leq(m.mapping[i], m.mapping[j])
        for i in range(p.n)
        for j in range(p.n)
        if p.leq(i, j)
    )


def enumerate_poset_monos(
    p: Poset, q: Poset, limit: Optional[int] = None
) -> list[Morphism]:
    out: list[Morphism] = []
    assignment = [0] * p.n

    def place(v: int, used: int) -> bool:
        if v == p.n:
            out.append(Morphism(p, q, tuple(assignment), "poset-embedding"))
            return limit is not None and len(out) >= limit
        for target in range(q.n):
            if used >> target & 1:
                continue
            ok = True
            for u in range(v):
                if p.leq(u, v) and not q.leq(assignment[u], target):
                    ok = False
                    break
                if p.leq(v, u) and not q.leq(target, assignment[u]):
                    ok = False
                    break
            if ok:
                assignment[v] = target
                if place(v + 1, used | (1 << target)):
                    return True
        return False

    place(0, 0)
    return out


def enumerate_monotone_maps(p: Poset, q: Poset) -> list[Morphism]:
    """All order-preserving (not necessarily injective) maps p -> q."""
    out: list[Morphism] = []
    assignment = [0] * p.n

    def place(v: int) -> None:
        if v == p.n:
            out.append(Morphism(p, q, tuple(assignment), "poset-homo"))
            return
        for target in range(q.n):
            ok = True
            for u in range(v):
                if p.leq(u, v) and not q.leq(assignment[u], target):
                    ok = False
                    break
                if p.leq(v, u) and not q.leq(target, assignment[u]):
                    ok = False
                    break
            if ok:
                assignment[v] = target
                place(v + 1)

    place(0)
    return out


def poset_isomorphic(p: Poset, q: Poset) -> bool:
    if p.n != q.n:
        return False
    for perm in permutations(range(p.n)):
        if all(
            p.leq(i, j) == q.leq(perm[i], perm[j])
            for i in range(p.n)
            for j in range(p.n)
        ):
            return True
    return False


@dataclass(frozen=True)
class PosetPushout:
    apex: Poset
    left: Morphism
    right: Morphism


def poset_pushout(f: Morphism, g: Morphism) -> PosetPushout:
    """Pushout of two chain embeddings in the category of posets and
    monotone maps: identify the chain images, close reflexively and
    transitively, and fail loudly if antisymmetry is lost."""
    k = f.domain
    if g.domain != k:
        raise SpinedError("pushout legs must share their apex")
    if not (is_poset_mono(f) and is_poset_mono(g)):
        raise SpinedError("pushout legs must be order-preserving injections")
    p: Poset = f.codomain
    q: Poset = g.codomain
    right_to_apex = [-1] * q.n
    for i in range(k.n):
        right_to_apex[g.mapping[i]] = f.mapping[i]
    nxt = p.n
    for v in range(q.n):
        if right_to_apex[v] < 0:
            right_to_apex[v] = nxt
            nxt += 1
    le = [1 << i for i in range(nxt)]
    for i in range(p.n):
        le[i] |= p.le[i]
    for v in range(q.n):
        row = q.le[v]
        while row:
            w = (row & -row).bit_length() - 1
            row &= row - 1
            le[right_to_apex[v]] |= 1 << right_to_apex[w]
    for mid in range(nxt):
        for i in range(nxt):
            if le[i] >> mid & 1:
                le[i] |= le[mid]
    for i in range(nxt):
        for j in range(i + 1, nxt):
            if le[i] >> j & 1 and le[j] >> i & 1:
                raise AntisymmetryError(
                    f"gluing identified a cycle through elements {i} and {j}"
                )
    apex = Poset(nxt, tuple(le))
    return PosetPushout(
        apex,
        Morphism(p, apex, tuple(range(p.n)), "poset-embedding"),
        Morphism(q, apex, tuple(right_to_apex), "poset-embedding"),
    )


@dataclass(frozen=True)
class PosetReport:
    """The chain-gluing obstruction: the pushout is a longer chain, so spine
    preservation and pushout preservation cannot coexist."""

    pushout_size: int
    pushout_is_chain: bool
    required: int
    forced: int
    extension_required: int
    extension_forced: int

    @property
    def violation(self) -> bool:
        return self.required != self.forced

    def __str__(self) -> str:
        return "\n".join(
            [
                "chain gluing in the poset category:",
                f"  pushout of (top of a 3-chain) <- point -> (bottom of a 2-chain)"
                f" is a chain on {self.pushout_size} elements: {self.pushout_is_chain}",
                f"  spine preservation forces the value {self.required},"
                f" pushout preservation forces max(3,2) = {self.forced}",
                f"  contradiction: {self.required} != {self.forced}",
                f"  with the 2-chain extended into a 3-chain the same span forces"
                f" {self.extension_required} != {self.extension_forced}",
            ]
        )


def demo_poset_no_sfunctor() -> PosetReport:
    """Glue the top of a 3-chain to the bottom of a 2-chain over one point;
    the pushout is the 4-chain, so no spine-preserving functor can also
    preserve pushouts."""
    f = Morphism(chain(1), chain(3), (2,), "poset-embedding")
    g = Morphism(chain(1), chain(2), (0,), "poset-embedding")
    push = poset_pushout(f, g)
    if push.apex.n != 4 or not poset_isomorphic(push.apex, chain(4)):
        raise SpinedError("poset reproduction failed; library bug")
    # Extend the right foot into a 3-chain (bottom segment): the pushout
    # becomes the 5-chain and the same contradiction reappears.
    ext = Morphism(chain(2), chain(3), (0, 1), "poset-embedding")
    push2 = poset_pushout(f, compose(ext, g))
    if push2.apex.n != 5 or not poset_isomorphic(push2.apex, chain(5)):
        raise SpinedError("poset extension reproduction failed; library bug")
    return PosetReport(
        pushout_size=push.apex.n,
        pushout_is_chain=True,
        required=4,
        forced=max(2, 3),
        extension_required=5,
        extension_forced=max(3, 3),
    )


# ---------------------------------------------------------------------------
# The order map on graphs


@dataclass(frozen=True)
class OrderFailureReport:
    order_apex: int
    order_feet_max: int
    order_verdict: SpinalVerdict
    clique_verdict: SpinalVerdict
    delta_verdict: SpinalVerdict

    @property
    def violation(self) -> bool:
        return self.order_apex != self.order_feet_max

    def __str__(self) -> str:
        return "\n".join(
            [
                "order map on graphs over the span gluing two edges at a vertex:",
                f"  order(glued graph) = {self.order_apex},"
                f" max over the feet = {self.order_feet_max}"
                f" -- violated: {self.violation}",
                f"  clique number passes the same span: {self.clique_verdict.ok}",
                f"  triangulation value passes the same span: {self.delta_verdict.ok}",
            ]
        )


def demo_order_failure() -> OrderFailureReport:
    """Gluing two single-edge graphs at a vertex yields a 3-vertex path, so
    the order map cannot preserve proxy pushouts."""
    inst = grph_mono_instance()
    k1, k2 = complete_graph(1), complete_graph(2)
    span = SpanDiagram(
        1,
        Morphism(k1, k2, (0,), "mono"),
        Morphism(k1, k2, (0,), "mono"),
    )
    order_spec = SFunctorSpec("order", lambda g: object_order(inst, g))
    clique_spec = SFunctorSpec("clique-number", clique_number)
    delta_spec = SFunctorSpec("triangulation", triangulation_graph)
    order_verdict = check_spinal(inst, order_spec, [span], sf1_indices=range(0, 5))
    clique_verdict = check_spinal(inst, clique_spec, [span], sf1_indices=range(0, 5))
    delta_verdict = check_spinal(inst, delta_spec, [span], sf1_indices=range(0, 5))
    apex = inst.proxy_pushout(span).apex
    order_apex = object_order(inst, apex)
    feet_max = max(object_order(inst, k2), object_order(inst, k2))
    if order_apex != 3 or not order_verdict.sf2_failures:
        raise SpinedError("order-map reproduction failed; library bug")
    if not (clique_verdict.ok and delta_verdict.ok):
        raise SpinedError("clique/triangulation unexpectedly failed; library bug")
    return OrderFailureReport(
        order_apex, feet_max, order_verdict, clique_verdict, delta_verdict
    )


# ---------------------------------------------------------------------------
# Pseudo-chordal but not chordal


@dataclass(frozen=True)
class PseudoChordalReport:
    n: int
    vertex_count: int
    chordal: bool
    delta: int
    sandwich_found: bool

    def __str__(self) -> str:
        return "\n".join(
            [
                f"clique K_{self.n} glued to cycle C_{self.n} at one vertex:",
                f"  {self.vertex_count} vertices, chordal: {self.chordal}",
                f"  sandwiched between K_{self.n} and a clique gluing, so every"
                f" S-functor takes the value {self.n} on it",
                f"  triangulation value = {self.delta}",
            ]
        )


def pseudo_chordal_witness(n: int) -> PseudoChordalReport:
    """Glue an n-clique and an n-cycle at a vertex: not chordal for n >= 4,
    yet squeezed between two objects of value n, so all S-functors agree."""
    if not 3 <= n <= 8:
        raise ValueError("the witness is built for 3 <= n <= 8")
    kn = complete_graph(n)
    cn = cycle_graph(n)
    k1 = complete_graph(1)
    glued = grph_mono_instance().proxy_pushout(
        SpanDiagram(
            1,
            Morphism(k1, kn, (0,), "mono"),
            Morphism(k1, cn, (0,), "mono"),
        )
    ).apex
    upper = grph_mono_instance().proxy_pushout(
        SpanDiagram(
            1,
            Morphism(k1, kn, (0,), "mono"),
            Morphism(k1, kn, (0,), "mono"),
        )
    ).apex
    chordal = is_chordal(glued).chordal
    if chordal != (n == 3):
        raise SpinedError("chordality of the witness is off; library bug")
    lower_inclusion = Morphism(kn, glued, tuple(range(n)), "mono")
    upper_inclusion = Morphism(glued, upper, tuple(range(glued.n)), "mono")
    found = is_monomorphism(lower_inclusion) and is_monomorphism(upper_inclusion)
    if glued.n <= 8:
        found = found and bool(enumerate_monomorphisms(kn, glued, limit=1))
        found = found and bool(enumerate_monomorphisms(glued, upper, limit=1))
    delta = triangulation_graph(glued)
    if delta != n or not found:
        raise SpinedError("pseudo-chordal reproduction failed; library bug")
    return PseudoChordalReport(n, glued.n, chordal, delta, found)
