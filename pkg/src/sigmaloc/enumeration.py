"""Countable sets presented by enumerations.

An Enumeration is a total function alpha: N -> values + {BLANK} listing
the elements of a countable set, possibly with repetitions and gaps
(BLANK plays the role of the added point of S + 1).  An optional
surjectivity bound b promises that every element of the image already
occurs at some index <= b; operations that must traverse the whole
image (elements, ext_equal_finite) require it and raise
MissingSurjectivityBound otherwise.

The second presentation of countability, a detachable subset of N
together with a map onto the carrier, is interconvertible with
enumerations via from_detachable / to_detachable.
"""

from dataclasses import dataclass
from typing import Callable, Optional

from .pairing import pair_decode, pair_encode
from .semidecision import SemiDecision, from_boolean


class _Blank:
    __slots__ = ()

    def __repr__(self):
        return "BLANK"


BLANK = _Blank()


class MissingSurjectivityBound(Exception):
    """The operation needs to exhaust the enumeration but no bound is known."""


@dataclass(frozen=True)
class Enumeration:
    alpha: Callable[[int], object]
    bound: Optional[int] = None

    @staticmethod
    def from_iterable(values):
        items = tuple(values)

        def alpha(n):
            return items[n] if 0 <= n < len(items) else BLANK

        return Enumeration(alpha, bound=max(len(items) - 1, 0))

    @staticmethod
    def empty():
        return Enumeration.from_iterable(())

    def elements(self):
        """The image as a list, first occurrence order, deduplicated by ==.

        Requires a surjectivity bound.
        """
        if self.bound is None:
            raise MissingSurjectivityBound("elements() needs a surjectivity bound")
        seen = []
        for n in range(self.bound + 1):
            v = self.alpha(n)
            if v is BLANK:
                continue
            if v not in seen:
                seen.append(v)
        return seen


@dataclass(frozen=True)
class DetachableSubset:
    """Decidable membership test (a total 0/1 characteristic function)."""

    chi: Callable[[object], bool]

    @staticmethod
    def from_set(values):
        members = set(values)
        return DetachableSubset(lambda x: x in members)

    def complement(self):
        return DetachableSubset(lambda x: not self.chi(x))

    def union(self, other):
        return DetachableSubset(lambda x: self.chi(x) or other.chi(x))

    def intersect(self, other):
        return DetachableSubset(lambda x: self.chi(x) and other.chi(x))


@dataclass(frozen=True)
class SemiDecidableEquality:
    """Equality test returning a SemiDecision.

    max_confirm_budget, when given, promises that every true equality
    between carrier values confirms within that budget.  It is what
    lets intersect_binary propagate surjectivity bounds.
    """

    psi: Callable[[object, object], SemiDecision]
    max_confirm_budget: Optional[int] = None

    @staticmethod
    def from_decidable(eq=None):
        test = eq if eq is not None else (lambda x, y: x == y)
        return SemiDecidableEquality(
            lambda x, y: from_boolean(test(x, y)), max_confirm_budget=0
        )


def map_enumeration(f, e):
    """Apply f pointwise, skipping blanks. Keeps the bound."""

    def alpha(n):
        v = e.alpha(n)
        return BLANK if v is BLANK else f(v)

    return Enumeration(alpha, bound=e.bound)


def from_detachable(d, g, bound=None):
    """Enumeration from a detachable subset of N and a map g on it.

    alpha(n) = g(n) when n is in d, BLANK otherwise.  The optional
    bound is a caller-supplied surjectivity witness; none is inferred.
    """

    def alpha(n):
        return g(n) if d.chi(n) else BLANK

    return Enumeration(alpha, bound=bound)


def to_detachable(e):
    """Split an enumeration into its index set and value map.

    Returns (d, g) with d the detachable set of non-blank indices and
    g the value at such an index (g raises ValueError off d).
    """
    d = DetachableSubset(lambda n: e.alpha(n) is not BLANK)

    def g(n):
        v = e.alpha(n)
        if v is BLANK:
            raise ValueError("index %r is blank in the enumeration" % (n,))
        return v

    return d, g


def restrict_detachable(e, chi):
    """Restrict an enumeration to a decidable predicate on the carrier."""
    test = chi.chi if isinstance(chi, DetachableSubset) else chi

    def alpha(n):
        v = e.alpha(n)
        if v is BLANK or not test(v):
            return BLANK
        return v

    return Enumeration(alpha, bound=e.bound)


def union_countable(index, members):
    """Union of a countable family of enumerations, by dovetailing.

    ``index`` enumerates the index set, ``members`` maps an index value
    to its enumeration (a dict or a callable).  Code k decodes to
    (n, m): the member at index.alpha(n), position m.  The result
    carries a bound exactly when the index and all of its (boundedly
    many) members do.
    """
    get = members.__getitem__ if hasattr(members, "__getitem__") else members

    def alpha(k):
        n, m = pair_decode(k)
        i = index.alpha(n)
        if i is BLANK:
            return BLANK
        return get(i).alpha(m)

    bound = None
    if index.bound is not None:
        codes = [0]
        ok = True
        for n in range(index.bound + 1):
            i = index.alpha(n)
            if i is BLANK:
                continue
            member_bound = get(i).bound
            if member_bound is None:
                ok = False
                break
            codes.append(pair_encode(n, member_bound))
        if ok:
            bound = max(codes)
    return Enumeration(alpha, bound=bound)


def intersect_binary(e1, e2, eq):
    """Elements enumerated by both e1 and e2, up to eq.

    Code k decodes to (n, (m, b)): emit e1's value at n when it
    eq-confirms against e2's value at m within budget b.  The bound
    needs both input bounds plus eq's max_confirm_budget.
    """

    def alpha(k):
        n, rest = pair_decode(k)
        m, b = pair_decode(rest)
        x = e1.alpha(n)
        y = e2.alpha(m)
        if x is BLANK or y is BLANK:
            return BLANK
        return x if eq.psi(x, y).confirmed(b) else BLANK

    bound = None
    if (
        e1.bound is not None
        and e2.bound is not None
        and eq.max_confirm_budget is not None
    ):
        bound = pair_encode(e1.bound, pair_encode(e2.bound, eq.max_confirm_budget))
    return Enumeration(alpha, bound=bound)


def member_semidecide(x, e, eq):
    """Semi-decide x in image(e).

    Stage k decodes to (n, b): index n is probed for equality with x
    inside budget b, so every (index, equality budget) pair is
    eventually tried.
    """

    def stage(k):
        n, b = pair_decode(k)
        v = e.alpha(n)
        if v is BLANK:
            return False
        return eq.psi(v, x).confirmed(b)

    return SemiDecision(stage)


def ext_equal_finite(e1, e2):
    """Extensional equality of two bounded enumerations.

    Compares the enumerated sets with the carrier's == (desk-scale
    instances have decidable equality); both surjectivity bounds are
    required.
    """
    if e1.bound is None or e2.bound is None:
        raise MissingSurjectivityBound("ext_equal_finite needs both bounds")
    first = e1.elements()
    second = e2.elements()
    return all(x in second for x in first) and all(y in first for y in second)
