"""Independent reference implementations used only by tests.

Deliberately naive: plain Python, no windowing, no numpy closures, so a
bug in the package's optimized paths cannot hide here too.
"""

from __future__ import annotations


def tri(i: int) -> int:
    return i * (i - 1) // 2


def mu_table_plain(n_max: int) -> list[int]:
    """Textbook DP over every part index with C(i,2) <= n."""
    dp = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        best = dp[n - 1] + 2
        i = 3
        while tri(i) <= n:
            v = dp[n - tri(i)] + i
            if v < best:
                best = v
            i += 1
        dp[n] = best
    return dp


def semigroup_members(a: int, b: int, bound: int) -> set[int]:
    """Members of S(a,b) up to bound, by set-based breadth-first closure."""
    gens = []
    n = 1
    while True:
        y = n * a + tri(n) * b
        if y > bound:
            break
        if y > 0:
            gens.append(y)
        n += 1
    members = {0}
    frontier = [0]
    while frontier:
        base = frontier.pop()
        for y in gens:
            total = base + y
            if total <= bound and total not in members:
                members.add(total)
                frontier.append(total)
    return members


def lift_members(m_max: int, n_max: int) -> list[list[bool]]:
    """Reachable (m,n) from generators (i, C(i,2)), i >= 1, by BFS on a grid."""
    reach = [[False] * (n_max + 1) for _ in range(m_max + 1)]
    reach[0][0] = True
    gens = [(i, tri(i)) for i in range(1, m_max + 1) if tri(i) <= n_max]
    frontier = [(0, 0)]
    while frontier:
        m, n = frontier.pop()
        for dm, dn in gens:
            mm, nn = m + dm, n + dn
            if mm <= m_max and nn <= n_max and not reach[mm][nn]:
                reach[mm][nn] = True
                frontier.append((mm, nn))
    return reach


def least_lift_scan(contains, a: int, b: int, n: int) -> int:
    """Least m with m*a + n*b in S, by linear scan from the first m
    making the value nonnegative.  `contains` is the membership callable."""
    m = -((n * b) // a)
    while not contains(m * a + n * b):
        m += 1
    return m
