"""Tour of the closed forms: exact values and their symbolic shapes.

Every count is an exact integer; every polynomial has exact integer
coefficients.  The rank-2 inversion route (four squared lattice sizes)
is evaluated independently of the closed bracket and must agree.
"""

from facnum import (
    f2_corollary4,
    f2_cyclic,
    f2_elementary,
    f2_elementary_poly,
    f2_heisenberg_p3,
    f2_modular_p3,
    f2_rank2,
    f2_rank2_poly,
    f2_rank2_via_eq4,
    gaussian_binomial,
    lattice_size_heisenberg_p3,
    subgroup_count_rank2,
)


def main():
    print("F2 of elementary abelian groups of order p^n, symbolically:")
    for n in range(1, 5):
        print(f"  n={n}:  {f2_elementary_poly(n)}")
    print("  (the often-quoted n=4 polynomial ends '+ 23p + 9'; the linear")
    print("   coefficient is a misprint for 7 — brute force gives 1983 at p=2)")

    print("\nSample evaluations:")
    for n, p in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]:
        print(f"  F2(Z{p}^{n}) = {f2_elementary(n, p)}")

    print("\nSubgroup counts of elementary abelian groups (Gaussian binomials):")
    print("  order-4 subgroups of Z2^4:", gaussian_binomial(4, 2, 2))
    print("  order-3 subgroups of Z3^2:", gaussian_binomial(2, 1, 3))

    print("\nRank-2 abelian p-groups Z_{p^a1} x Z_{p^a2}:")
    for p, a1, a2 in [(2, 1, 2), (2, 2, 2), (3, 1, 2), (2, 2, 3)]:
        closed = f2_rank2(p, a1, a2)
        inversion = f2_rank2_via_eq4(p, a1, a2)
        subgroups = subgroup_count_rank2(p, a1, a2)
        print(f"  p={p}, type ({a1},{a2}):  F2 = {closed} "
              f"(inversion route {inversion}), |L| = {subgroups}")
    print("  symbolic, type (1,2):", f2_rank2_poly(1, 2))
    print("  symbolic, type (2,2):", f2_rank2_poly(2, 2))

    print("\nSpecial families:")
    print("  F2(Z_p x Z_{p^n}) at (p,n)=(2,3):", f2_corollary4(2, 3))
    print("  cyclic of order p^3:", f2_cyclic(3))
    print("  modular group M(27):", f2_modular_p3(3))
    print("  Heisenberg group E(27):", f2_heisenberg_p3(3),
          "with |L(E(27))| =", lattice_size_heisenberg_p3(3))


if __name__ == "__main__":
    main()
