"""Independent oracles for cross-validating the package.

These deliberately avoid the algorithms under test: subgroups are found
by checking closure of raw subsets, factorizations by materializing
literal product sets, and Moebius values by inverting the zeta matrix
with sympy.  Keep them dumb.
"""

from itertools import combinations

from facnum.groups import FiniteGroup

SUBSET_ORACLE_MAX_ORDER = 16


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def subgroups_by_subsets(G: FiniteGroup) -> list[frozenset[int]]:
    """All subgroups, by testing every identity-containing subset whose size
    divides the group order for closure.  Exponential; order <= 16 only."""
    n = G.order
    assert n <= SUBSET_ORACLE_MAX_ORDER, "subset oracle is exponential"
    rows = G.rows
    others = list(range(1, n))
    found = []
    for d in divisors(n):
        for extra in combinations(others, d - 1):
            subset = frozenset((0,) + extra)
            if all(rows[a][b] in subset for a in subset for b in subset):
                found.append(subset)
    return found


def product_set(G: FiniteGroup, A, B) -> frozenset[int]:
    rows = G.rows
    return frozenset(rows[a][b] for a in A for b in B)


def f2_by_product_sets(G: FiniteGroup, subgroups=None) -> int:
    """Count ordered subgroup pairs whose literal product set is the whole
    group.  No order-arithmetic shortcut anywhere."""
    subs = subgroups if subgroups is not None else subgroups_by_subsets(G)
    everything = frozenset(range(G.order))
    return sum(
        1 for H in subs for K in subs if product_set(G, H, K) == everything
    )


def permuting_pairs_by_product_sets(G: FiniteGroup, subgroups=None) -> int:
    subs = subgroups if subgroups is not None else subgroups_by_subsets(G)
    return sum(
        1
        for H in subs
        for K in subs
        if product_set(G, H, K) == product_set(G, K, H)
    )


def mobius_oracle(lat) -> list[int]:
    """mu(H, G) for every lattice member via exact zeta-matrix inversion."""
    from sympy import Matrix

    m = len(lat)
    zeta = Matrix(m, m, lambda i, j: 1 if lat.leq(i, j) else 0)
    mu = zeta.inv()
    top = lat.index_of_full
    return [int(mu[h, top]) for h in range(m)]
