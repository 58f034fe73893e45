"""Is F2 monotone along the lexicographic order on partitions?

For abelian groups of order p^n, each partition of n names an
isomorphism type.  Whether F2 decreases as the partition grows in lex
order depends on how partitions are written: with exponents
nondecreasing, (1,3) precedes (2,2) but has the smaller F2 (43 < 83);
written nonincreasing, (3,1) follows (2,2) and the sequence is clean.
The report computes both rankings and names the first violation.

Also runs the elementary-bound sweep for order 16: every checkable group
stays at or below F2(Z2^4) = 1983, with the coverage gap stated.
"""

from facnum import check_conjecture6, open_problem_table


def main():
    report = open_problem_table(2, 4)
    print(report.render())

    print()
    sweep = check_conjecture6(2, 4)
    print(sweep.render())


if __name__ == "__main__":
    main()
