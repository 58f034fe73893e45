"""Subgroup lattices: enumeration, Moebius values, factorization counting.

Subgroups are bitsets over element indices (Python ints), mirrored into
a numpy uint64 word matrix for the quadratic passes.  The two hot loops
are pair counting and containment, both blocked by subgroup order:
a product set satisfies |HK| = |H||K| / |H∩K| for any two subgroups, so
HK = G is equivalent to |H|*|K| == |G|*|H∩K| and only the intersection
popcount is ever materialized.

All aggregate arithmetic (Moebius values, inversion sums) runs on plain
Python ints; the numpy side only ever produces bounded popcounts.
"""

from __future__ import annotations

import json
import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

import numpy as np

from .errors import DomainError, ResourceLimitError
from .formulas import hall_mobius, is_prime
from .groups import FiniteGroup, is_elementary_abelian, prime_power, quotient

DEFAULT_MAX_SUBGROUPS = 100_000

# target element count per temporary block in the quadratic passes
_BLOCK_ELEMS = 4_000_000


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as a bitset over element indices (bit 0 = identity)."""

    bits: int
    order: int

    def indices(self) -> list[int]:
        out = []
        b = self.bits
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return out

    def contains_index(self, i: int) -> bool:
        return bool((self.bits >> i) & 1)

    def issubset(self, other: "Subgroup") -> bool:
        return self.bits & other.bits == self.bits


def _bits_from_indices(indices, nbytes: int) -> int:
    buf = np.zeros(nbytes * 8, dtype=bool)
    buf[indices] = True
    return int.from_bytes(np.packbits(buf, bitorder="little").tobytes(), "little")


def _indices_from_bits(bits: int, n: int) -> np.ndarray:
    out = np.empty(bits.bit_count(), dtype=np.int64)
    pos = 0
    b = bits
    while b:
        low = b & -b
        out[pos] = low.bit_length() - 1
        pos += 1
        b ^= low
    return out


def closure(G: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing the seed elements (and the identity)."""
    n = G.order
    seed = [int(s) for s in seed]
    if any(s < 0 or s >= n for s in seed):
        raise DomainError("seed indices must lie in [0, order)")
    rows = G.rows
    bits = 1
    members = [0]
    queue = []
    for s in seed:
        if not (bits >> s) & 1:
            bits |= 1 << s
            members.append(s)
            queue.append(s)
    while queue:
        x = queue.pop()
        row_x = rows[x]
        for y in list(members):
            for z in (row_x[y], rows[y][x]):
                if not (bits >> z) & 1:
                    bits |= 1 << z
                    members.append(z)
                    queue.append(z)
    return Subgroup(bits, len(members))


class SubgroupLattice:
    """The complete subgroup lattice of a FiniteGroup.

    Members are sorted canonically by (order, bitset value) ascending, so
    index 0 is the trivial subgroup and the last index is the full group.
    Pairwise intersections of members are members; inclusion is a two-int
    bit test.
    """

    def __init__(self, group: FiniteGroup, members: dict[int, np.ndarray]):
        self.group = group
        nbytes = ((group.order + 63) // 64) * 8
        self._nbytes = nbytes
        items = sorted(members.items(), key=lambda kv: (kv[0].bit_count(), kv[0]))
        self.subgroups = [Subgroup(bits, bits.bit_count()) for bits, _ in items]
        self._bits = [s.bits for s in self.subgroups]
        self._idx_arrays = [np.sort(arr) for _, arr in items]
        self.orders = np.array([s.order for s in self.subgroups], dtype=np.int64)
        self._index = {s.bits: i for i, s in enumerate(self.subgroups)}
        self.index_of_trivial = 0
        self.index_of_full = len(self.subgroups) - 1
        assert self.subgroups[0].bits == 1
        assert self.subgroups[-1].order == group.order
        self._words: np.ndarray | None = None
        self._up: list[np.ndarray] | None = None
        self._down: list[np.ndarray] | None = None
        self._up_degrees: np.ndarray | None = None
        self._down_degrees: np.ndarray | None = None
        self._join_memo: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self.subgroups)

    def index_of(self, member) -> int:
        bits = getattr(member, "bits", member)
        try:
            return self._index[bits]
        except KeyError:
            raise KeyError("not a member of the lattice") from None

    def member_indices(self, h: int) -> np.ndarray:
        """Element indices of member h, sorted."""
        return self._idx_arrays[h]

    def leq(self, i: int, j: int) -> bool:
        """Inclusion H_i <= H_j, O(words)."""
        bi = self._bits[i]
        return bi & self._bits[j] == bi

    def meet_index(self, i: int, j: int) -> int:
        return self._index[self._bits[i] & self._bits[j]]

    def join_index(self, i: int, j: int) -> int:
        """Smallest member containing both; memoized on the union bitset."""
        bi, bj = self._bits[i], self._bits[j]
        union = bi | bj
        if union == bi:
            return i
        if union == bj:
            return j
        cached = self._join_memo.get(union)
        if cached is not None:
            return cached
        hit = self._index.get(union)
        if hit is None:
            start = int(np.searchsorted(self.orders, union.bit_count(), side="left"))
            for k in range(start, len(self._bits)):
                if self._bits[k] & union == union:
                    hit = k
                    break
            assert hit is not None, "lattice must contain the full group"
        self._join_memo[union] = hit
        return hit

    @property
    def words(self) -> np.ndarray:
        """(members, words) uint64 matrix of the bitsets (little-endian)."""
        if self._words is None:
            raw = b"".join(b.to_bytes(self._nbytes, "little") for b in self._bits)
            self._words = (
                np.frombuffer(raw, dtype=np.uint8)
                .reshape(len(self._bits), self._nbytes)
                .view(np.uint64)
                .copy()
            )
        return self._words

    # -- containment structure ------------------------------------------------

    def _ensure_containment(self) -> None:
        if self._up is not None:
            return
        m = len(self)
        words = self.words
        orders = self.orders
        classes: dict[int, np.ndarray] = {}
        for o in np.unique(orders):
            classes[int(o)] = np.nonzero(orders == o)[0]
        subs = [np.arange(m, dtype=np.int64)]
        sups = [np.arange(m, dtype=np.int64)]
        order_values = sorted(classes)
        for da in order_values:
            A = classes[da]
            wa = words[A]
            for db in order_values:
                if db <= da or db % da:
                    continue
                B = classes[db]
                wb = words[B]
                step = max(1, _BLOCK_ELEMS // max(1, wb.shape[0] * wb.shape[1]))
                for s in range(0, wa.shape[0], step):
                    blk = wa[s:s + step]
                    mask = ((blk[:, None, :] & wb[None, :, :]) == blk[:, None, :]).all(axis=2)
                    ii, jj = np.nonzero(mask)
                    if len(ii):
                        subs.append(A[s + ii])
                        sups.append(B[jj])
        sub_arr = np.concatenate(subs)
        sup_arr = np.concatenate(sups)
        self._up_degrees = np.bincount(sub_arr, minlength=m)
        self._down_degrees = np.bincount(sup_arr, minlength=m)
        by_sub = np.argsort(sub_arr, kind="stable")
        self._up = np.split(sup_arr[by_sub], np.cumsum(self._up_degrees)[:-1])
        by_sup = np.argsort(sup_arr, kind="stable")
        self._down = np.split(sub_arr[by_sup], np.cumsum(self._down_degrees)[:-1])

    @property
    def up_lists(self) -> list[np.ndarray]:
        """For each member H, indices of all members K with H <= K (incl. H)."""
        self._ensure_containment()
        return self._up

    @property
    def down_lists(self) -> list[np.ndarray]:
        """For each member K, indices of all members H with H <= K (incl. K)."""
        self._ensure_containment()
        return self._down

    @property
    def up_degrees(self) -> np.ndarray:
        self._ensure_containment()
        return self._up_degrees

    @property
    def down_degrees(self) -> np.ndarray:
        """down_degrees[h] = number of lattice members inside H = |L(H)|."""
        self._ensure_containment()
        return self._down_degrees

    def maximal_indices(self) -> list[int]:
        """Members covered only by the full group."""
        if len(self) == 1:
            return []
        up = self.up_lists
        full = self.index_of_full
        return [
            h for h in range(len(self) - 1)
            if len(up[h]) == 2 and full in (int(up[h][0]), int(up[h][1]))
        ]

    def check_intersection_closed(self) -> bool:
        """Every pairwise AND of members is a member (exhaustive)."""
        for i in range(len(self)):
            bi = self._bits[i]
            for j in range(i + 1, len(self)):
                if (bi & self._bits[j]) not in self._index:
                    return False
        return True


def _power_chain(G: FiniteGroup, g: int) -> list[int]:
    t = G.table
    chain = [0]
    x = g
    while x != 0:
        chain.append(x)
        x = int(t[x, g])
    return chain


def enumerate_subgroups(G: FiniteGroup, *, max_subgroups: int | None = None) -> SubgroupLattice:
    """Materialize the full subgroup lattice by breadth-first extension.

    Start from all cyclic subgroups, then repeatedly extend each known
    subgroup H by an outside element g and close.  When an extension
    <H, g> has prime index over H, every other element of it would
    regenerate the same join (Lagrange inside <H, g>), so those elements
    are skipped; this prune is what keeps large elementary abelian
    lattices tractable without changing the algorithm's output.
    """
    cap = DEFAULT_MAX_SUBGROUPS if max_subgroups is None else int(max_subgroups)
    n = G.order
    t = G.table
    nbytes = ((n + 63) // 64) * 8
    commutative = G.is_commutative

    found: dict[int, np.ndarray] = {1: np.array([0], dtype=np.int64)}
    frontier: deque[int] = deque()

    def add(bits: int, idx: np.ndarray) -> bool:
        if bits in found:
            return False
        found[bits] = idx
        if len(found) > cap:
            raise ResourceLimitError(
                f"subgroup count exceeded the cap {cap} "
                "(pass max_subgroups to override)"
            )
        if len(idx) < n:
            frontier.append(bits)
        return True

    for g in range(1, n):
        chain = _power_chain(G, g)
        bits = _bits_from_indices(chain, nbytes)
        add(bits, np.array(chain, dtype=np.int64))

    rows = G.rows if not commutative else None

    while frontier:
        h_bits = frontier.popleft()
        h_idx = found[h_bits]
        h_size = len(h_idx)
        covered = h_bits
        for g in range(1, n):
            if (covered >> g) & 1:
                continue
            if commutative:
                parts = [h_idx]
                x = g
                while not (h_bits >> x) & 1:
                    parts.append(t[h_idx, x])
                    x = int(t[x, g])
                j_idx = np.concatenate(parts)
                j_bits = _bits_from_indices(j_idx, nbytes)
            else:
                sub = closure_from(rows, h_bits, h_idx.tolist(), g)
                j_bits, j_idx = sub
            j_size = len(j_idx)
            add(j_bits, np.asarray(j_idx, dtype=np.int64))
            index = j_size // h_size
            if is_prime(index):
                covered |= j_bits

    return SubgroupLattice(G, found)


def closure_from(rows, base_bits: int, base_members: list[int], g: int):
    """Generic orbit closure of an existing subgroup extended by one element."""
    bits = base_bits | (1 << g)
    members = list(base_members)
    members.append(g)
    queue = [g]
    while queue:
        x = queue.pop()
        row_x = rows[x]
        for y in list(members):
            for z in (row_x[y], rows[y][x]):
                if not (bits >> z) & 1:
                    bits |= 1 << z
                    members.append(z)
                    queue.append(z)
    return bits, members


# ---------------------------------------------------------------------------
# Moebius functions of the lattice
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MobiusTable:
    """mu(H, G) for every member H, index-aligned with the lattice."""

    lattice: SubgroupLattice
    values: tuple[int, ...]

    def __getitem__(self, h: int) -> int:
        return self.values[h]

    def __len__(self) -> int:
        return len(self.values)

    def check_recursion(self) -> bool:
        """sum over K >= H of mu(K, G) is 1 at H = G and 0 below it."""
        up = self.lattice.up_lists
        top = self.lattice.index_of_full
        for h in range(len(self.values)):
            total = sum(self.values[int(k)] for k in up[h])
            if total != (1 if h == top else 0):
                return False
        return True


def mobius_to_top(lat: SubgroupLattice) -> MobiusTable:
    """mu(H, G) via the defining recursion mu(G,G) = 1,
    mu(H,G) = -sum_{H < K <= G} mu(K,G)."""
    up = lat.up_lists
    m = len(lat)
    mu = [0] * m
    mu[m - 1] = 1
    for h in range(m - 2, -1, -1):
        mu[h] = -sum(mu[int(k)] for k in up[h] if int(k) != h)
    return MobiusTable(lat, tuple(mu))


def mobius_from_bottom(lat: SubgroupLattice) -> tuple[int, ...]:
    """mu(1, H) for every member H, computed inside the interval [1, H]."""
    down = lat.down_lists
    m = len(lat)
    mu = [0] * m
    mu[0] = 1
    for h in range(1, m):
        mu[h] = -sum(mu[int(k)] for k in down[h] if int(k) != h)
    return tuple(mu)


# ---------------------------------------------------------------------------
# Factorization pair counting
# ---------------------------------------------------------------------------

def _pair_tasks(orders: np.ndarray, full_order: int):
    classes: dict[int, np.ndarray] = {}
    for o in np.unique(orders):
        classes[int(o)] = np.nonzero(orders == o)[0]
    values = sorted(classes)
    for ai, da in enumerate(values):
        for db in values[ai:]:
            prod = da * db
            if prod < full_order or prod % full_order:
                continue
            target = prod // full_order
            if math.gcd(da, db) % target:
                continue
            yield classes[da], classes[db], target, da == db


def _count_block(words: np.ndarray, A: np.ndarray, B: np.ndarray, target: int) -> int:
    wa, wb = words[A], words[B]
    step = max(1, _BLOCK_ELEMS // max(1, wb.shape[0] * wb.shape[1]))
    total = 0
    for s in range(0, wa.shape[0], step):
        inter = wa[s:s + step, None, :] & wb[None, :, :]
        counts = np.bitwise_count(inter).sum(axis=2, dtype=np.int64)
        total += int((counts == target).sum())
    return total


def f2_bruteforce(lat: SubgroupLattice, *, threads: int | None = None) -> int:
    """Number of ordered pairs (H, K) of members with HK = G, decided by the
    exact criterion |H|*|K| == |G|*|H∩K|.  Pairs are grouped by the order
    pair (|H|, |K|) with the necessary condition |H||K| >= |G| applied first.
    """
    full_order = lat.group.order
    words = lat.words
    tasks = list(_pair_tasks(lat.orders, full_order))

    def run(task) -> int:
        A, B, target, same = task
        count = _count_block(words, A, B, target)
        return count if same else 2 * count

    if threads and threads > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return sum(pool.map(run, tasks))
    return sum(run(task) for task in tasks)


def list_factorizations(lat: SubgroupLattice) -> list[tuple[int, int]]:
    """Every ordered factorization pair as (member index, member index),
    sorted; its length equals f2_bruteforce."""
    full_order = lat.group.order
    words = lat.words
    pairs: list[tuple[int, int]] = []
    for A, B, target, same in _pair_tasks(lat.orders, full_order):
        wa, wb = words[A], words[B]
        step = max(1, _BLOCK_ELEMS // max(1, wb.shape[0] * wb.shape[1]))
        for s in range(0, wa.shape[0], step):
            inter = wa[s:s + step, None, :] & wb[None, :, :]
            counts = np.bitwise_count(inter).sum(axis=2, dtype=np.int64)
            ii, jj = np.nonzero(counts == target)
            for i, j in zip(A[s + ii].tolist(), B[jj].tolist()):
                pairs.append((i, j))
                if not same:
                    pairs.append((j, i))
    pairs.sort()
    return pairs


def f2_of_member(lat: SubgroupLattice, h: int) -> int:
    """Number of ordered pairs (A, B) of members with A, B <= H and AB = H,
    decided inside the lattice (no group reconstruction)."""
    down = lat.down_lists[h]
    words = lat.words[down]
    orders = lat.orders[down]
    target_order = int(lat.orders[h])
    total = 0
    for A, B, target, same in _pair_tasks(orders, target_order):
        count = _count_block(words, A, B, target)
        total += count if same else 2 * count
    return total


def permuting_pairs(lat: SubgroupLattice) -> int:
    """Number of ordered pairs (H, K) with HK = KH, i.e. with the product
    set as large as the join: |H||K| / |H∩K| == |<H, K>|."""
    m = len(lat)
    bits = lat._bits
    orders = lat.orders.tolist()
    count = m  # (H, H) always permutes
    for i in range(m):
        bi = bits[i]
        oi = orders[i]
        for j in range(i + 1, m):
            bj = bits[j]
            inter = bi & bj
            if inter == bi or inter == bj:
                count += 2
                continue
            joined = lat.join_index(i, j)
            if oi * orders[j] == orders[joined] * inter.bit_count():
                count += 2
    return count


def sd(lat: SubgroupLattice) -> Fraction:
    """Subgroup commutativity degree as an exact rational.

    Computed as sum_H F2(H) / |L|^2 and, independently, as the fraction of
    permuting ordered pairs; the two routes must agree exactly.
    """
    m = len(lat)
    via_f2 = sum(f2_of_member(lat, h) for h in range(m))
    via_pairs = permuting_pairs(lat)
    assert via_f2 == via_pairs, (
        f"sd routes disagree: sum of member F2 = {via_f2}, "
        f"permuting pairs = {via_pairs}"
    )
    return Fraction(via_f2, m * m)


def frattini_index(lat: SubgroupLattice) -> int:
    """Index of the Frattini subgroup: the intersection of all maximal
    members (the full group itself when there are no proper subgroups)."""
    maxima = lat.maximal_indices()
    if not maxima:
        return lat.index_of_full
    bits = lat._bits[maxima[0]]
    for h in maxima[1:]:
        bits &= lat._bits[h]
    return lat.index_of(bits)


# ---------------------------------------------------------------------------
# Identity verification reports
# ---------------------------------------------------------------------------

def _member_elementary(lat: SubgroupLattice, h: int) -> tuple[bool, int | None, int]:
    """Whether member h is elementary abelian (inside a group whose element
    orders are known), with its (p, n)."""
    order = int(lat.orders[h])
    if order == 1:
        return True, None, 0
    pk = prime_power(order)
    if pk is None:
        return False, None, 0
    p, k = pk
    elem_orders = lat.group.element_orders()
    idx = lat.member_indices(h)
    ok = bool(np.all(elem_orders[idx[1:]] == p))
    if not ok:
        return False, None, 0
    if not lat.group.is_commutative:
        t = lat.group.table
        for a in idx.tolist():
            if not np.array_equal(t[a, idx], t[idx, a]):
                return False, None, 0
    return True, p, k


@dataclass
class InversionReport:
    """Cross-check of brute-force F2 against the Moebius-inversion forms.

    eq1 is sum_H sd(H) |L(H)|^2 mu(H, G) (always computed); for abelian G
    the two specializations are added: eq2_subgroup = sum |L(H)|^2 mu(H,G)
    and eq2_quotient = sum |L(G/H)|^2 mu(1,H).
    """

    label: str
    order: int
    abelian: bool
    f2: int
    eq1: int
    eq2_subgroup: int | None = None
    eq2_quotient: int | None = None
    quotient_method: str | None = None
    sd_mode: str = "definitional"
    hall_consistent: bool | None = None
    skipped: dict[str, str] = field(default_factory=dict)
    mismatches: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "order": self.order,
            "abelian": self.abelian,
            "f2_bruteforce": str(self.f2),
            "eq1": str(self.eq1),
            "eq2_subgroup": None if self.eq2_subgroup is None else str(self.eq2_subgroup),
            "eq2_quotient": None if self.eq2_quotient is None else str(self.eq2_quotient),
            "quotient_method": self.quotient_method,
            "sd_mode": self.sd_mode,
            "hall_consistent": self.hall_consistent,
            "skipped": dict(self.skipped),
            "mismatches": list(self.mismatches),
            "passed": self.passed,
        }

    def summary(self) -> str:
        state = "pass" if self.passed else "FAIL"
        return f"{self.label}: F2={self.f2} inversion {state}"


def verify_inversion(G: FiniteGroup, *, lattice: SubgroupLattice | None = None,
                     quotient_cap: int = 400, sd_cap: int = 64,
                     threads: int | None = None) -> InversionReport:
    """Verify F2 = sum_H sd(H)|L(H)|^2 mu(H,G) on a concrete lattice, and for
    abelian G the specializations sum |L(H)|^2 mu(H,G) and
    sum |L(G/H)|^2 mu(1,H).

    The quotient form builds every quotient G/H with mu(1,H) != 0 when the
    lattice has at most quotient_cap members; above that, |L(G/H)| is the
    number of members containing H (the correspondence theorem), which is
    cross-checked against the constructed route whenever both run.  sd(H)
    is computed definitionally per member unless G is abelian and the
    lattice is larger than sd_cap, in which case sd(H) = 1 (subgroups of an
    abelian group commute elementwise).
    """
    lat = lattice if lattice is not None else enumerate_subgroups(G)
    m = len(lat)
    report = InversionReport(label=G.label, order=G.order, abelian=G.is_commutative,
                             f2=f2_bruteforce(lat, threads=threads), eq1=0)
    mu_top = mobius_to_top(lat)
    down = lat.down_lists
    dd = [int(v) for v in lat.down_degrees]

    if G.is_commutative and m > sd_cap:
        report.sd_mode = "abelian (sd = 1)"
        report.eq1 = sum(dd[h] * dd[h] * mu_top[h] for h in range(m) if mu_top[h])
    else:
        f2m = [f2_of_member(lat, h) for h in range(m)]
        # sd(H) * |L(H)|^2 == sum of F2 over members of H, exactly
        report.eq1 = sum(
            mu_top[h] * sum(f2m[int(a)] for a in down[h])
            for h in range(m) if mu_top[h]
        )
    if report.eq1 != report.f2:
        report.mismatches.append(f"eq1 = {report.eq1} != F2 = {report.f2}")

    if not G.is_commutative:
        reason = ("group is not abelian: the lattice forms require sd(H) = 1 "
                  "and quotient duality")
        report.skipped["eq2_subgroup"] = reason
        report.skipped["eq2_quotient"] = reason
        return report

    report.eq2_subgroup = sum(dd[h] * dd[h] * mu_top[h] for h in range(m) if mu_top[h])
    if report.eq2_subgroup != report.f2:
        report.mismatches.append(f"eq2_subgroup = {report.eq2_subgroup} != F2 = {report.f2}")

    mu_bot = mobius_from_bottom(lat)
    if G.order == 1 or prime_power(G.order) is not None:
        # every member is a p-group, so Hall's formula pins every mu(1, H)
        ok = True
        for h in range(m):
            elementary, pe, ke = _member_elementary(lat, h)
            n_exp = ke if elementary else _log_order(lat, h)
            if mu_bot[h] != hall_mobius(n_exp, pe, elementary):
                ok = False
                break
        report.hall_consistent = ok
        if not ok:
            report.mismatches.append("mu(1,H) disagrees with Hall's formula on some member")

    ud = [int(v) for v in lat.up_degrees]
    corr = sum(ud[h] * ud[h] * mu_bot[h] for h in range(m) if mu_bot[h])
    if m <= quotient_cap:
        report.quotient_method = "constructed"
        total = 0
        for h in range(m):
            if not mu_bot[h]:
                continue
            Q = quotient(G, lat.subgroups[h])
            qsize = len(enumerate_subgroups(Q))
            if qsize != ud[h]:
                report.mismatches.append(
                    f"|L(G/H)| = {qsize} but {ud[h]} members contain H (member {h})"
                )
            total += qsize * qsize * mu_bot[h]
        report.eq2_quotient = total
        if total != corr:
            report.mismatches.append(
                f"quotient route {total} != correspondence route {corr}"
            )
    else:
        report.quotient_method = "correspondence"
        report.eq2_quotient = corr
    if report.eq2_quotient != report.f2:
        report.mismatches.append(f"eq2_quotient = {report.eq2_quotient} != F2 = {report.f2}")
    return report


def _log_order(lat: SubgroupLattice, h: int) -> int:
    pk = prime_power(int(lat.orders[h]))
    return pk[1] if pk else 0


@dataclass
class HallReport:
    """mu(1, G) from the lattice recursion versus Hall's closed form."""

    label: str
    order: int
    p: int | None
    n: int
    elementary: bool
    mu_lattice: int
    mu_hall: int

    @property
    def passed(self) -> bool:
        return self.mu_lattice == self.mu_hall

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "order": self.order,
            "p": self.p,
            "n": self.n,
            "elementary": self.elementary,
            "mu_lattice": str(self.mu_lattice),
            "mu_hall": str(self.mu_hall),
            "passed": self.passed,
        }

    def summary(self) -> str:
        state = "pass" if self.passed else "FAIL"
        return f"{self.label}: mu(1,G) = {self.mu_lattice}, Hall = {self.mu_hall} ({state})"


def verify_hall(G: FiniteGroup, *, lattice: SubgroupLattice | None = None) -> HallReport:
    """Compare mu(1, G) from the lattice recursion against Hall's formula.
    Only defined for p-groups (prime-power order)."""
    if G.order == 1:
        p, k = None, 0
    else:
        pk = prime_power(G.order)
        if pk is None:
            raise DomainError(f"order {G.order} is not a prime power")
        p, k = pk
    lat = lattice if lattice is not None else enumerate_subgroups(G)
    mu1G = mobius_to_top(lat)[0]
    elementary, _, _ = is_elementary_abelian(G)
    expected = hall_mobius(k, p, elementary)
    return HallReport(label=G.label, order=G.order, p=p, n=k,
                      elementary=bool(elementary), mu_lattice=mu1G, mu_hall=expected)


# ---------------------------------------------------------------------------
# JSON export
# ---------------------------------------------------------------------------

def lattice_document(lat: SubgroupLattice, *, include_mobius: bool = True,
                     include_f2: bool = True, include_sd: bool = True,
                     threads: int | None = None) -> dict:
    """Lattice as a JSON-ready document.  Bitsets are hex strings; every
    count that can get big (Moebius values, F2, sd) is a decimal string so
    nothing is ever squeezed through a float."""
    doc: dict = {
        "label": lat.group.label,
        "order": lat.group.order,
        "size": len(lat),
        "subgroups": [
            {"bits": hex(s.bits), "order": s.order} for s in lat.subgroups
        ],
    }
    if include_mobius:
        doc["mobius_to_top"] = [str(v) for v in mobius_to_top(lat).values]
    if include_f2:
        doc["f2"] = str(f2_bruteforce(lat, threads=threads))
    if include_sd:
        doc["sd"] = str(sd(lat))
    return doc


def lattice_json(lat: SubgroupLattice, **kwargs) -> str:
    return json.dumps(lattice_document(lat, **kwargs), indent=2)
