"""Concrete finite groups as fully validated Cayley tables.

A group of order n is an n x n table of element indices with the
identity normalized to index 0.  Construction always runs the complete
validation (identity laws, inverses, row/column permutations, full
O(n^3) associativity), so downstream code can trust any FiniteGroup it
is handed.  The named non-abelian families self-check their defining
relations on top of that; presentation bugs are the classic failure
mode, so the realizations are verified rather than trusted.
"""

from __future__ import annotations

import os
from pathlib import Path

import numpy as np

from .errors import DomainError, ParseError, ResourceLimitError, ValidationError
from .formulas import PartitionType, is_prime

DEFAULT_MAX_ORDER = 4096
MAX_ORDER_ENV = "FACNUM_MAX_ORDER"

# keep chunk * order^2 around a few million entries during the associativity scan
_ASSOC_CHUNK_ELEMS = 8_000_000


def resolve_max_order(explicit: int | None = None) -> int:
    """Order cap: explicit argument, else FACNUM_MAX_ORDER, else 4096."""
    if explicit is not None:
        return int(explicit)
    env = os.environ.get(MAX_ORDER_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValidationError(f"{MAX_ORDER_ENV} must be an integer, got {env!r}") from exc
    return DEFAULT_MAX_ORDER


def _check_order_cap(order: int, max_order: int | None) -> None:
    cap = resolve_max_order(max_order)
    if order > cap:
        raise ResourceLimitError(
            f"group order {order} exceeds the safety cap {cap} "
            f"(pass max_order or set {MAX_ORDER_ENV} to override)"
        )


class FiniteGroup:
    """Immutable finite group on elements 0..order-1 with identity 0."""

    __slots__ = ("order", "table", "inverses", "label", "is_commutative",
                 "_rows", "_element_orders")

    def __init__(self, table, label: str = "G", *, max_order: int | None = None):
        t = np.ascontiguousarray(np.asarray(table, dtype=np.int32))
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise ValidationError(f"Cayley table must be square, got shape {t.shape}")
        n = int(t.shape[0])
        if n == 0:
            raise ValidationError("a group has at least one element")
        _check_order_cap(n, max_order)
        self.order = n
        self.table = t
        self.label = label
        self._rows = None
        self._element_orders = None
        self.inverses = self._validate()
        self.is_commutative = bool(np.array_equal(t, t.T))

    # -- validation ----------------------------------------------------------

    def _validate(self) -> np.ndarray:
        t, n = self.table, self.order
        if int(t.min()) < 0 or int(t.max()) >= n:
            bad = np.argwhere((t < 0) | (t >= n))[0]
            raise ValidationError(
                f"entry out of range at ({bad[0]}, {bad[1]}): {t[bad[0], bad[1]]}"
            )
        idx = np.arange(n, dtype=np.int32)
        if not np.array_equal(t[0], idx):
            j = int(np.argmax(t[0] != idx))
            raise ValidationError(
                f"identity law fails: table[0][{j}] = {t[0, j]}, expected {j}"
            )
        if not np.array_equal(t[:, 0], idx):
            i = int(np.argmax(t[:, 0] != idx))
            raise ValidationError(
                f"identity law fails: table[{i}][0] = {t[i, 0]}, expected {i}"
            )
        if not np.array_equal(np.sort(t, axis=1), np.broadcast_to(idx, t.shape)):
            i = int(np.argmax(~(np.sort(t, axis=1) == idx).all(axis=1)))
            raise ValidationError(f"row {i} is not a permutation of 0..{n - 1}")
        if not np.array_equal(np.sort(t, axis=0), np.broadcast_to(idx[:, None], t.shape)):
            j = int(np.argmax(~(np.sort(t, axis=0) == idx[:, None]).all(axis=0)))
            raise ValidationError(f"column {j} is not a permutation of 0..{n - 1}")
        inverses = np.argmax(t == 0, axis=1).astype(np.int32)
        if not np.all(t[inverses, idx] == 0):
            i = int(np.argmax(t[inverses, idx] != 0))
            raise ValidationError(f"element {i} has no two-sided inverse")
        # associativity, chunked over the first coordinate
        chunk = max(1, _ASSOC_CHUNK_ELEMS // (n * n))
        for start in range(0, n, chunk):
            block = t[start:start + chunk]       # (c, n) rows of the table
            left = t[block]                      # left[i,j,k]  = t[t[i,j], k]
            right = np.take(block, t, axis=1)    # right[i,j,k] = t[i, t[j,k]]
            if not np.array_equal(left, right):
                bad = np.argwhere(left != right)[0]
                i, j, k = int(bad[0]) + start, int(bad[1]), int(bad[2])
                raise ValidationError(
                    f"associativity fails at triple ({i}, {j}, {k}): "
                    f"(a*b)*c = {t[t[i, j], k]}, a*(b*c) = {t[i, t[j, k]]}"
                )
        return inverses

    def validate(self) -> None:
        """Re-run the full construction-time validation."""
        self._validate()

    # -- element-level operations ---------------------------------------------

    @property
    def rows(self) -> list[list[int]]:
        """Table as nested Python lists; built lazily, fast for tight loops."""
        if self._rows is None:
            self._rows = self.table.tolist()
        return self._rows

    def mult(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def element_order(self, a: int) -> int:
        t = self.table
        x = int(t[a, a])
        k = 1
        while True:
            if a == 0:
                return 1
            k += 1
            if x == 0:
                return k
            x = int(t[x, a])

    def element_orders(self) -> np.ndarray:
        if self._element_orders is None:
            self._element_orders = np.array(
                [self.element_order(a) for a in range(self.order)], dtype=np.int64
            )
        return self._element_orders

    # -- export ----------------------------------------------------------------

    def to_table_text(self) -> str:
        lines = [str(self.order)]
        lines.extend(" ".join(str(int(v)) for v in row) for row in self.table)
        return "\n".join(lines) + "\n"

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, label={self.label!r})"


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def build_abelian(ptype: PartitionType, *, label: str | None = None,
                  max_order: int | None = None) -> FiniteGroup:
    """Direct product of cyclic groups of orders p**a_i, elements in
    mixed-radix order (first coordinate fastest), identity at index 0."""
    n = ptype.order
    _check_order_cap(n, max_order)
    if not ptype.alphas:
        return FiniteGroup([[0]], label or "Z1", max_order=max_order)
    moduli = np.array([ptype.p ** a for a in ptype.alphas], dtype=np.int64)
    k = len(moduli)
    weights = np.ones(k, dtype=np.int64)
    for i in range(1, k):
        weights[i] = weights[i - 1] * moduli[i - 1]
    idx = np.arange(n, dtype=np.int64)
    coords = (idx[:, None] // weights[None, :]) % moduli[None, :]
    table = np.empty((n, n), dtype=np.int32)
    chunk = max(1, _ASSOC_CHUNK_ELEMS // (n * k))
    for start in range(0, n, chunk):
        s = (coords[start:start + chunk, None, :] + coords[None, :, :]) % moduli
        table[start:start + chunk] = s @ weights
    return FiniteGroup(table, label or ptype.label(), max_order=max_order)


def cyclic_group(p: int, n: int, *, max_order: int | None = None) -> FiniteGroup:
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    t = PartitionType(p, (n,) if n else ())
    return build_abelian(t, label=f"Z{p ** n}" if n else "Z1", max_order=max_order)


def elementary_abelian_group(p: int, n: int, *, max_order: int | None = None) -> FiniteGroup:
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    t = PartitionType(p, (1,) * n)
    if n == 0:
        label = "Z1"
    elif n == 1:
        label = f"Z{p}"
    else:
        label = f"Z{p}^{n}"
    return build_abelian(t, label=label, max_order=max_order)


def dihedral8() -> FiniteGroup:
    """D8 = <r, s | r^4 = s^2 = 1, s r s = r^-1>; element (a, b) = r^a s^b
    at index a + 4b."""
    table = [[0] * 8 for _ in range(8)]
    for a1 in range(4):
        for b1 in range(2):
            for a2 in range(4):
                for b2 in range(2):
                    a = (a1 + (a2 if b1 == 0 else -a2)) % 4
                    b = (b1 + b2) % 2
                    table[a1 + 4 * b1][a2 + 4 * b2] = a + 4 * b
    G = FiniteGroup(table, "D8")
    r, s = 1, 4
    assert G.element_order(r) == 4 and G.element_order(s) == 2
    assert G.mult(G.mult(s, r), s) == G.inv(r)
    assert not G.is_commutative
    return G


def quaternion8() -> FiniteGroup:
    """Q8 = <x, y | x^4 = 1, x^2 = y^2, y^-1 x y = x^-1>; element (a, b) =
    x^a y^b at index a + 4b."""
    table = [[0] * 8 for _ in range(8)]
    for a1 in range(4):
        for b1 in range(2):
            for a2 in range(4):
                for b2 in range(2):
                    a = (a1 + (a2 if b1 == 0 else -a2)) % 4
                    b = b1 + b2
                    if b >= 2:
                        a = (a + 2) % 4
                        b -= 2
                    table[a1 + 4 * b1][a2 + 4 * b2] = a + 4 * b
    G = FiniteGroup(table, "Q8")
    x, y = 1, 4
    assert G.mult(x, x) == G.mult(y, y)
    assert G.mult(G.mult(G.inv(y), x), y) == G.inv(x)
    assert not G.is_commutative
    return G


def modular_p3(p: int, *, max_order: int | None = None) -> FiniteGroup:
    """M(p^3) = <x, y | x^(p^2) = y^p = 1, y^-1 x y = x^(p+1)>, p odd,
    realized on pairs (a mod p^2, b mod p) = x^a y^b at index a + p^2*b.

    Moving y^b across x^a twists the exponent by (1-p)^b = 1 - b p (mod p^2):
    (a1, b1)(a2, b2) = (a1 + a2*(1 - b1*p) mod p^2, b1 + b2 mod p).
    """
    if not is_prime(p):
        raise ValidationError(f"p must be a prime, got {p!r}")
    if p == 2:
        raise DomainError(
            "M(p^3) requires an odd prime: at p=2 the presentation collapses "
            "to D8, whose factorization number is 41, not 3p^2+5p+7"
        )
    p2 = p * p
    n = p2 * p
    _check_order_cap(n, max_order)
    # index layout: (a, b) -> a + p2 * b
    idx = np.arange(n, dtype=np.int64)
    A1 = (idx % p2)[:, None]
    B1 = (idx // p2)[:, None]
    A2 = (idx % p2)[None, :]
    B2 = (idx // p2)[None, :]
    anew = (A1 + A2 * (1 - B1 * p)) % p2
    bnew = (B1 + B2) % p
    G = FiniteGroup((anew + p2 * bnew).astype(np.int32), f"M({n})", max_order=max_order)
    x, y = 1, p2
    assert G.element_order(x) == p2 and G.element_order(y) == p
    conj = G.mult(G.mult(G.inv(y), x), y)
    xp1 = 0
    for _ in range(p + 1):
        xp1 = G.mult(xp1, x)
    assert conj == xp1, "relation y^-1 x y = x^(p+1) failed"
    assert not G.is_commutative
    return G


def heisenberg_p3(p: int, *, max_order: int | None = None) -> FiniteGroup:
    """E(p^3): upper unitriangular 3x3 matrices over the p-element field,
    p odd.  Element (a, b, c) is the matrix [[1,a,c],[0,1,b],[0,0,1]] at
    index a*p^2 + b*p + c; product adds coordinates with c picking up a1*b2.

    Extraspecial of exponent p: every non-identity element has order p and
    the commutator [x, y] is central of order p.
    """
    if not is_prime(p):
        raise ValidationError(f"p must be a prime, got {p!r}")
    if p == 2:
        raise DomainError(
            "E(p^3) requires an odd prime: at p=2 the exponent-p extraspecial "
            "presentation degenerates (the order-8 candidates are D8 and Q8)"
        )
    n = p**3
    _check_order_cap(n, max_order)
    idx = np.arange(n, dtype=np.int64)
    A1 = (idx // (p * p))[:, None]
    B1 = ((idx // p) % p)[:, None]
    C1 = (idx % p)[:, None]
    A2 = (idx // (p * p))[None, :]
    B2 = ((idx // p) % p)[None, :]
    C2 = (idx % p)[None, :]
    a = (A1 + A2) % p
    b = (B1 + B2) % p
    c = (C1 + C2 + A1 * B2) % p
    G = FiniteGroup((a * p * p + b * p + c).astype(np.int32), f"E({n})", max_order=max_order)
    orders = G.element_orders()
    assert np.all(orders[1:] == p), "E(p^3) must have exponent p"
    x, y = p * p, p  # (1,0,0) and (0,1,0)
    comm = G.mult(G.mult(G.inv(x), G.inv(y)), G.mult(x, y))
    assert comm != 0 and G.element_order(comm) == p
    assert all(G.mult(comm, g) == G.mult(g, comm) for g in range(n)), "[x,y] must be central"
    assert not G.is_commutative
    return G


_NAMED_NO_PARAMS = {"D8": dihedral8, "Q8": quaternion8}


def build_named(name: str, p: int | None = None, n: int | None = None, *,
                max_order: int | None = None) -> FiniteGroup:
    """Dispatch on a family name: Cyclic(p,n), Elem(p,n), D8, Q8, M(p), E(p)."""
    if name in _NAMED_NO_PARAMS:
        return _NAMED_NO_PARAMS[name]()
    if name == "Cyclic":
        if p is None or n is None:
            raise DomainError("Cyclic requires both p and n")
        return cyclic_group(p, n, max_order=max_order)
    if name == "Elem":
        if p is None or n is None:
            raise DomainError("Elem requires both p and n")
        return elementary_abelian_group(p, n, max_order=max_order)
    if name == "M":
        if p is None:
            raise DomainError("M requires p")
        return modular_p3(p, max_order=max_order)
    if name == "E":
        if p is None:
            raise DomainError("E requires p")
        return heisenberg_p3(p, max_order=max_order)
    raise DomainError(f"unknown named family {name!r} "
                      "(expected Cyclic, Elem, D8, Q8, M or E)")


# ---------------------------------------------------------------------------
# Cayley table files
# ---------------------------------------------------------------------------

def parse_cayley_table(text: str, *, label: str = "table",
                       max_order: int | None = None) -> FiniteGroup:
    """Parse the textual Cayley-table format.

    Leading '#' comment lines (and blank lines) are allowed before the
    header; after that the file is strict: line 1 is the decimal order n,
    followed by exactly n rows of n space-separated indices in [0, n).
    The identity may sit at any index e (row e and column e must act as
    the identity); it is renumbered to 0 on load.
    """
    lines = text.splitlines()
    pos = 0
    while pos < len(lines) and (not lines[pos].strip() or lines[pos].lstrip().startswith("#")):
        pos += 1
    if pos >= len(lines):
        raise ParseError("no order line found")
    header = lines[pos].strip()
    try:
        n = int(header)
    except ValueError as exc:
        raise ParseError(f"line {pos + 1}: order must be a decimal integer, got {header!r}") from exc
    if n < 1:
        raise ParseError(f"line {pos + 1}: order must be positive, got {n}")
    _check_order_cap(n, max_order)
    body = lines[pos + 1:]
    while body and not body[-1].strip():
        body.pop()
    if len(body) != n:
        raise ParseError(f"expected {n} table rows, found {len(body)}")
    table = np.empty((n, n), dtype=np.int32)
    for i, line in enumerate(body):
        fields = line.split()
        if len(fields) != n:
            raise ParseError(f"row {i}: expected {n} entries, found {len(fields)}")
        try:
            row = [int(f) for f in fields]
        except ValueError as exc:
            raise ParseError(f"row {i}: non-integer entry") from exc
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise ParseError(f"row {i}, column {j}: entry {v} out of range [0, {n})")
        table[i] = row

    idx = np.arange(n, dtype=np.int32)
    e = -1
    for cand in range(n):
        if np.array_equal(table[cand], idx) and np.array_equal(table[:, cand], idx):
            e = cand
            break
    if e < 0:
        raise ValidationError("no identity element: no index acts as identity on rows and columns")
    if e != 0:
        perm = idx.copy()
        perm[0], perm[e] = e, 0  # transposition sending e -> 0
        relabeled = np.empty_like(table)
        relabeled[perm[:, None], perm[None, :]] = perm[table]
        table = relabeled
    return FiniteGroup(table, label, max_order=max_order)


def load_cayley_table(source, *, label: str | None = None,
                      max_order: int | None = None) -> FiniteGroup:
    """Load a Cayley table from a path or a readable text/byte stream."""
    if hasattr(source, "read"):
        raw = source.read()
        text = raw.decode("utf-8") if isinstance(raw, (bytes, bytearray)) else raw
        name = label or "table"
    else:
        path = Path(source)
        text = path.read_text(encoding="utf-8")
        name = label or path.stem
    return parse_cayley_table(text, label=name, max_order=max_order)


# ---------------------------------------------------------------------------
# Derived groups
# ---------------------------------------------------------------------------

def _subgroup_bits(G: FiniteGroup, members) -> int:
    bits = getattr(members, "bits", None)
    if bits is None:
        bits = 0
        for i in members:
            bits |= 1 << int(i)
    bits |= 1
    if bits >> G.order:
        raise DomainError("subgroup contains an index outside the group")
    return bits


def quotient(G: FiniteGroup, N, *, label: str | None = None) -> FiniteGroup:
    """Quotient of G by a normal subgroup N (a Subgroup, bitmask int, or an
    iterable of element indices).  Cosets are numbered in order of first
    appearance, so the identity coset is index 0."""
    bits = _subgroup_bits(G, N)
    n_idx = np.array([i for i in range(G.order) if (bits >> i) & 1], dtype=np.int64)
    k = len(n_idx)
    t = G.table
    # N must be a subgroup to begin with
    prods = t[np.ix_(n_idx, n_idx)]
    if not all((bits >> int(v)) & 1 for v in np.unique(prods)):
        raise DomainError("the given element set is not closed under the group operation")
    if G.order % k:
        raise DomainError("subgroup size does not divide the group order")
    # normality: g N g^-1 == N for every g
    for g in range(G.order):
        conj = t[t[g, n_idx], int(G.inverses[g])]
        conj_bits = 0
        for v in conj.tolist():
            conj_bits |= 1 << v
        if conj_bits != bits:
            raise DomainError(f"subgroup is not normal: conjugation by element {g} moves it")
    coset_id = np.full(G.order, -1, dtype=np.int64)
    reps: list[int] = []
    for x in range(G.order):
        if coset_id[x] < 0:
            coset_id[t[x, n_idx]] = len(reps)
            reps.append(x)
    reps_arr = np.array(reps, dtype=np.int64)
    qtable = coset_id[t[np.ix_(reps_arr, reps_arr)]].astype(np.int32)
    qlabel = label or f"{G.label}/(order-{k} subgroup)"
    Q = FiniteGroup(qtable, qlabel)
    assert Q.order * k == G.order
    return Q


def permute_elements(G: FiniteGroup, perm) -> FiniteGroup:
    """Relabel elements by a permutation fixing the identity (perm[0] == 0).
    Factorization counts and lattice shape are invariant under this."""
    p = np.asarray(perm, dtype=np.int64)
    if p.shape != (G.order,) or not np.array_equal(np.sort(p), np.arange(G.order)):
        raise DomainError("perm must be a permutation of 0..order-1")
    if p[0] != 0:
        raise DomainError("perm must fix the identity (perm[0] == 0)")
    t = G.table
    new = np.empty_like(t)
    new[p[:, None], p[None, :]] = p[t]
    return FiniteGroup(new, f"{G.label}~relabeled")


def is_elementary_abelian(G: FiniteGroup) -> tuple[bool, int | None, int | None]:
    """(True, p, n) when G is elementary abelian of order p**n; the trivial
    group reports (True, None, 0)."""
    if G.order == 1:
        return True, None, 0
    if not G.is_commutative:
        return False, None, None
    m = G.order
    p = 2
    while m % p:
        p += 1
    n = 0
    while m % p == 0:
        m //= p
        n += 1
    if m != 1:
        return False, None, None
    orders = G.element_orders()
    if not np.all(orders[1:] == p):
        return False, None, None
    return True, p, n


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, k) with n = p**k (k >= 1), or None.  n = 1 returns None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            m = n
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
        p += 1
    return (n, 1)
