#!/usr/bin/env python3
"""Difference sets and their structure.

The self differences of each sampler land on even ticks of the half
grid; the cross differences are all odd, so the two families can never
collide. The positive cross set holds exactly M*N distinct values, a few
of which appear together with their negatives; those sign-paired lags
get two contributing sample pairs instead of one. The prototype pattern
behaves differently: every lag reachable only through cross differences
has exactly two contributors.
"""

from _bootstrap import OUTPUT_DIR  # noqa: F401

from coprimespec import difference_sets, make_scheme, verify_structure


def main():
    for m, n in ((4, 3), (5, 3), (3, 4), (3, 5)):
        config = make_scheme("super-nyquist", m=m, n=n)
        sets = difference_sets(config)
        report = verify_structure(config)
        print(f"\noffset pair (M, N) = ({m}, {n})")
        print(f"  self differences: {sets.self_first.size} + {sets.self_second.size} values, all even")
        print(f"  positive cross set ({sets.cross_pos.size} values): {sets.cross_pos.tolist()}")
        print(f"  distinct cross lags: {report.distinct_cross_count} (= M*N = {m * n})")
        print(f"  self and cross disjoint: {report.self_cross_disjoint}")
        paired = report.sign_paired_cross_values
        halves = ", ".join(f"±{a / 2:g}d" for a, _ in paired)
        print(f"  sign-paired cross lags ({len(paired)}): {paired}  i.e. {halves}")

    print("\nprototype pair (M, N) = (4, 3)")
    proto = make_scheme("prototype", m=4, n=3)
    report = verify_structure(proto)
    print(f"  self and cross disjoint: {report.self_cross_disjoint} "
          "(self lags are a subset of the cross range here)")
    print(f"  every cross-only lag has exactly two contributors: "
          f"{report.prototype_two_contributors}")


if __name__ == "__main__":
    main()
