"""Semi-decisions: budget-indexed, monotone, positive-only answers.

A SemiDecision wraps a stage predicate ``stage: int -> bool`` that is
treated as the run of a search procedure: stage(k) says whether the
search has succeeded at step k.  Probing with a budget scans stages
0..budget and reports either Confirmed(at_step) for the earliest stage
that fires, or Unknown.  Unknown is not a negative answer; a later,
larger budget may still confirm.

Stages are scanned at most once per SemiDecision no matter how many
times it is probed, so repeated probing with growing budgets costs the
same as one probe with the largest budget.
"""

from dataclasses import dataclass

from .pairing import pair_decode


@dataclass(frozen=True)
class Confirmed:
    at_step: int


class _Unknown:
    __slots__ = ()

    def __repr__(self):
        return "Unknown"


UNKNOWN = _Unknown()


class SemiDecision:
    def __init__(self, stage):
        self._stage = stage
        self._first = None
        self._scanned = -1

    def probe(self, budget):
        """Scan stages up to ``budget`` inclusive.

        Returns Confirmed(k) for the least k <= budget with stage(k)
        true, else UNKNOWN.
        """
        if budget < 0:
            raise ValueError("budget must be a natural number")
        first = self._first
        if first is not None:
            return Confirmed(first) if first <= budget else UNKNOWN
        k = self._scanned
        while k < budget:
            k += 1
            if self._stage(k):
                self._first = k
                self._scanned = k
                return Confirmed(k)
        self._scanned = k
        return UNKNOWN

    def confirmed(self, budget):
        """True iff probing with this budget confirms."""
        return isinstance(self.probe(budget), Confirmed)


def run(p, budget):
    """Probe p with the budget and return the outcome."""
    return p.probe(budget)


def from_boolean(value):
    """Decidable truth as a semi-decision: confirms at step 0 or never."""
    return SemiDecision(lambda k: bool(value))


def never():
    return SemiDecision(lambda k: False)


def and_binary(p, q):
    """Conjunction: confirms once both conjuncts have confirmed.

    Stage k fires iff both p and q confirm within budget k, so the
    confirmation step is the max of the two individual steps.
    """

    def stage(k):
        return p.confirmed(k) and q.confirmed(k)

    return SemiDecision(stage)


def or_countable(family):
    """Countable disjunction by dovetailing.

    ``family`` is an Enumeration of SemiDecisions (blank entries are
    skipped).  Stage k decodes to (i, j) and fires iff member i of the
    family confirms within budget j, so every (member, budget) pair is
    eventually tried.
    """
    from .enumeration import BLANK

    def stage(k):
        i, j = pair_decode(k)
        member = family.alpha(i)
        if member is BLANK:
            return False
        return member.confirmed(j)

    return SemiDecision(stage)
