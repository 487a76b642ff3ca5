"""
The Fibonacci cobweb poset: level s holds F_s elements and every element of
level s is covered by every element of level s+1.

Chain counts are computed two ways, by a per-level dynamic program and by
explicit depth-first enumeration, so each can be checked against the other.
"""

from dataclasses import dataclass
from fractions import Fraction

from .psi_arith import FIBONACCI, falling_factorial, fibonacci, fibonomial, psi_factorial

__all__ = [
    "CobwebPoset", "build", "count_chains_root_to_level",
    "count_chains_from_point", "enumerate_chains", "verify_observation3",
    "export_dot", "ENUMERATION_CAP",
]

ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class CobwebPoset:
    num_levels: int

    @property
    def level_sizes(self):
        return tuple(fibonacci(s) for s in range(1, self.num_levels + 1))

    def size(self, level):
        self._check_level(level)
        return fibonacci(level)

    def elements(self, level):
        return [(level, i) for i in range(self.size(level))]

    def covers(self, a, b):
        """True when b covers a."""
        (la, ia), (lb, ib) = a, b
        return (lb == la + 1 and 1 <= la and lb <= self.num_levels
                and 0 <= ia < fibonacci(la) and 0 <= ib < fibonacci(lb))

    def edges(self):
        for s in range(1, self.num_levels):
            for a in self.elements(s):
                for b in self.elements(s + 1):
                    yield a, b

    def _check_level(self, level):
        if not 1 <= level <= self.num_levels:
            raise ValueError("level %d outside 1..%d" % (level, self.num_levels))


def build(m: int) -> CobwebPoset:
    if m < 1:
        raise ValueError("cobweb needs at least one level, got %d" % m)
    return CobwebPoset(m)


def _chain_dp(P, start_level, end_level):
    # ways[i] = chains from the fixed start element to element i of the current level
    ways = [1]
    for s in range(start_level + 1, end_level + 1):
        total = sum(ways)
        ways = [total] * P.size(s)
    return sum(ways)


def count_chains_root_to_level(P: CobwebPoset, n: int) -> int:
    P._check_level(n)
    return _chain_dp(P, 1, n)


def count_chains_from_point(P: CobwebPoset, k: int, n: int) -> int:
    P._check_level(k)
    P._check_level(n)
    if k > n:
        raise ValueError("start level %d above end level %d" % (k, n))
    return _chain_dp(P, k, n)


def enumerate_chains(P: CobwebPoset, k: int, n: int, cap: int = ENUMERATION_CAP):
    """All chains from element (k, 0) up to any element of level n.

    Chains are tuples of (level, index) pairs in lexicographic order.
    Refuses when the count would exceed ``cap``.
    """
    expected = count_chains_from_point(P, k, n)
    if expected > cap:
        raise ValueError("enumeration of %d chains exceeds cap %d" % (expected, cap))
    chains = []

    def extend(chain):
        level = chain[-1][0]
        if level == n:
            chains.append(tuple(chain))
            return
        for nxt in P.elements(level + 1):
            chain.append(nxt)
            extend(chain)
            chain.pop()

    extend([(k, 0)])
    return chains


def verify_observation3(n: int, m: int):
    """Check falling(n, m) / m_F! == fibonomial(n, m) exactly.

    Returns (holds, lhs, rhs).
    """
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    lhs = falling_factorial(FIBONACCI, n, m) / psi_factorial(FIBONACCI, m)
    rhs = Fraction(fibonomial(n, m))
    return lhs == rhs, lhs, rhs


def export_dot(P: CobwebPoset, max_levels: int = 12) -> str:
    if P.num_levels > max_levels:
        raise ValueError("%d levels exceeds readability limit %d (raise max_levels)"
                         % (P.num_levels, max_levels))
    lines = ["digraph cobweb {", "\trankdir = BT;"]
    for s in range(1, P.num_levels + 1):
        names = " ".join('"L%d_%d";' % e for e in P.elements(s))
        lines.append("\t{ rank = same; %s }" % names)
    for a, b in P.edges():
        lines.append('\t"L%d_%d" -> "L%d_%d";' % (a + b))
    lines.append("}")
    return "\n".join(lines) + "\n"
