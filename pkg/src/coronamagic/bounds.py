"""Closed-form bounds on the local antimagic chromatic number of coronas.

Every bound comes from a counting argument over the edge labels: leaves
receive pairwise distinct colors because the labeling is a bijection,
and a spine color can only be repeated with a leaf color when the spine
weight does not exceed the largest edge label.  Thresholds are computed
in exact rational arithmetic so strict inequalities are decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import CoronaSpec, Family, UnsupportedSpecError


def leaf_lower_bound(tree_leaf_count: int) -> int:
    """Minimum colors for any tree with the given number of leaves (l + 1)."""
    if tree_leaf_count < 0:
        raise ValueError("leaf count must be non-negative")
    return tree_leaf_count + 1


def odd_cycle_threshold(m: int) -> Fraction:
    """The exact cutoff (m+2)(m+3) / (2(m+1)) below which odd-cycle coronas need mn+3 colors."""
    if m < 1:
        raise ValueError("m >= 1 required")
    return Fraction((m + 2) * (m + 3), 2 * (m + 1))


def threshold_display(m: int) -> str:
    """Unreduced fraction string for the threshold, e.g. '20/6' at m=2."""
    return f"{(m + 2) * (m + 3)}/{2 * (m + 1)}"


@dataclass(frozen=True)
class ThresholdRow:
    """One row of the odd-cycle refined lower-bound table."""

    m: int
    threshold: Fraction
    display: str
    qualifying_n: tuple[int, ...]
    bound_expression: str


def odd_cycle_threshold_table(m_max: int) -> tuple[ThresholdRow, ...]:
    """Rows (m, threshold, qualifying odd n >= 3) for m = 1..m_max.

    A cycle order n qualifies when n is odd and strictly below the
    threshold; those instances need at least mn+3 colors.
    """
    if m_max < 1:
        raise ValueError("m_max >= 1 required")
    rows = []
    for m in range(1, m_max + 1):
        cutoff = odd_cycle_threshold(m)
        qualifying = []
        n = 3
        while Fraction(n) < cutoff:
            qualifying.append(n)
            n += 2
        expression = f">= {m}n+3" if qualifying else "."
        rows.append(
            ThresholdRow(
                m=m,
                threshold=cutoff,
                display=threshold_display(m),
                qualifying_n=tuple(qualifying),
                bound_expression=expression,
            )
        )
    return tuple(rows)


def threshold_table_csv(rows: tuple[ThresholdRow, ...]) -> str:
    """CSV rendering: m, threshold fraction, qualifying n list, bound expression."""
    lines = ["m,threshold,qualifying_n,bound"]
    for row in rows:
        ns = " ".join(str(n) for n in row.qualifying_n)
        lines.append(f"{row.m},{row.display},{ns},{row.bound_expression}")
    return "\n".join(lines) + "\n"


def path_counting_gap(n: int, m: int, k: int) -> int:
    """1 + 2 + ... + (n+mk-1) minus k(n+mn-1), the slack in the path counting bound.

    Strict positivity for every 1 <= k <= n-1 rules out a palette of
    size mn+1 on a path corona with m >= 2.
    """
    top = n + m * k - 1
    return top * (top + 1) // 2 - k * (n + m * n - 1)


def path_counting_bracket(n: int, m: int, k: int) -> Fraction:
    """(n-1-k)^2 + (mk+k-1)(mk-k-1) - 1/2, the algebraic minorant of twice the gap.

    Positive for n >= 3; at (n, m, k) = (2, 2, 1) it dips to -1/2 even
    though the direct gap stays positive, so callers checking n = 2
    should use :func:`path_counting_gap`.
    """
    return (
        Fraction((n - 1 - k) ** 2)
        + Fraction((m * k + k - 1) * (m * k - k - 1))
        - Fraction(1, 2)
    )


@dataclass(frozen=True)
class BoundResult:
    """Bound interval with provenance entries (bound id, plain statement)."""

    lower: int
    upper: int | None
    exact_claimed: int | None
    provenance: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        if self.exact_claimed is not None:
            assert self.lower <= self.exact_claimed
            assert self.upper is None or self.exact_claimed <= self.upper


def corona_lower_bound(spec: CoronaSpec) -> BoundResult:
    """Best known bounds for one corona instance, with provenance.

    ``exact_claimed`` is filled where the value is settled; odd-cycle
    instances with m >= 3 and n at or above the threshold keep the open
    interval [mn+2, mn+3].
    """
    family, n, m = spec.family, spec.n, spec.m

    if family is Family.PATH:
        if m == 1:
            if n == 2:
                return BoundResult(3, 3, 3, (
                    ("tree-leaf-bound", "a tree with 2 leaves needs at least 3 colors"),
                    ("path-k1-small", "the 3-edge path attains exactly 3 colors"),
                ))
            if n == 3:
                return BoundResult(4, 4, 4, (
                    ("tree-leaf-bound", "a tree with 3 leaves needs at least 4 colors"),
                    ("path-k1-small", "the 6-vertex caterpillar attains exactly 4 colors"),
                ))
            return BoundResult(n + 2, n + 2, n + 2, (
                ("tree-leaf-bound", f"a tree with {n} leaves needs at least {n + 1} colors"),
                ("path-k1-counting",
                 "repeated spine sums would need k(2n-1) >= 1+...+(n+k-1), "
                 "forcing k = n-1, which the two largest labels rule out"),
                ("path-k1-exact", f"alternating constructions attain {n + 2} colors"),
            ))
        value = m * n + 2
        return BoundResult(value, value, value, (
            ("tree-leaf-bound", f"a tree with {m * n} leaves needs at least {m * n + 1} colors"),
            ("path-km-counting",
             "a palette of mn+1 would need k(n+mn-1) >= 1+...+(n+mk-1), "
             "impossible for every k up to n-1"),
            ("path-km-exact", f"layered constructions attain {value} colors"),
        ))

    if family is Family.CYCLE:
        if m == 1:
            if n == 3:
                return BoundResult(5, 5, 5, (
                    ("cycle-k1-small", "the triangle corona attains exactly 5 colors "
                                       "(verified exhaustively)"),
                ))
            return BoundResult(n + 2, n + 2, n + 2, (
                ("cycle-k1-counting",
                 "n or n+1 colors would force k(2n) >= 1+...+(n+k), "
                 "i.e. (n-k)^2 + n + k <= 0"),
                ("cycle-k1-exact", f"constructions attain {n + 2} colors"),
            ))
        base = m * n + 2
        provenance: list[tuple[str, str]] = [
            ("cycle-km-counting",
             "a palette of mn+1 repeats too many spine sums against the "
             "largest available leaf colors"),
        ]
        if n == 3:
            value = 3 * m + 3
            provenance.append(
                ("triangle-min-sum",
                 "every triangle spine weight is at least 1+...+(m+2), "
                 "which exceeds the largest label 3m+3")
            )
            provenance.append(("triangle-exact", f"round-robin labelings attain {value} colors"))
            return BoundResult(value, value, value, tuple(provenance))
        if n % 2 == 0:
            provenance.append(("cycle-km-even-exact", f"layered constructions attain {base} colors"))
            return BoundResult(base, base, base, tuple(provenance))
        # Odd cycles, n >= 5.
        if m == 2:
            value = 2 * n + 2
            provenance.append(("cycle-k2-exact", f"constructions attain {value} colors"))
            return BoundResult(value, value, value, tuple(provenance))
        cutoff = odd_cycle_threshold(m)
        upper = m * n + 3
        provenance.append(
            ("cycle-odd-upper", f"layered constructions attain {upper} colors")
        )
        if Fraction(n) < cutoff:
            provenance.append(
                ("cycle-odd-threshold",
                 f"n < {threshold_display(m)} forces a repeated spine sum "
                 "to exceed the largest label, so mn+2 colors are impossible")
            )
            return BoundResult(upper, upper, upper, tuple(provenance))
        provenance.append(
            ("cycle-odd-open",
             f"n >= {threshold_display(m)} leaves the value open between "
             f"{base} and {upper}")
        )
        return BoundResult(base, upper, None, tuple(provenance))

    # Complete graphs.
    if n == 2:
        raise UnsupportedSpecError(
            "corona of a 2-clique is outside the supported results"
        )
    if m == 1:
        value = 2 * n - 1
        return BoundResult(value, value, value, (
            ("complete-k1-min-sum",
             "each spine weight is at least 1+...+n, the largest label, "
             "so at most one spine color can repeat a leaf color"),
            ("complete-k1-exact", f"sorted pendant assignment attains {value} colors"),
        ))
    value = m * n + n
    return BoundResult(value, value, value, (
        ("complete-km-min-sum",
         "spine weights exceed every edge label (otherwise m(m-1) <= 0), "
         "so all mn+n colors are distinct"),
        ("complete-km-exact", f"any verified labeling attains exactly {value} colors"),
    ))
