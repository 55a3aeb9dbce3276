#!/usr/bin/env python3
"""Tour of the sampling structures.

Two slow uniform samplers with co-prime decimation factors M and N cover
only a fraction of the Nyquist-rate instants, yet their pairwise
differences cover every lag needed for second-order statistics. The
variant with a half-period offset on the second sampler pushes those
differences onto a grid twice as fine, without acquiring a single extra
sample. Multi-level patterns generalize the idea to q samplers and a
grid q times finer.
"""

from _bootstrap import OUTPUT_DIR  # noqa: F401

from coprimespec import make_scheme, sample_instants


def show(config, label):
    instants = sample_instants(config)
    q = config.grid_denominator
    print(f"\n{label}")
    print(f"  virtual grid step: 1/{q} Nyquist period, snapshot span {config.snapshot_span} ticks")
    for index, arr in enumerate(instants.per_sampler, start=1):
        times = ", ".join(f"{t / q:g}" for t in arr)
        print(f"  sampler {index}: ticks {arr.tolist()}  (= [{times}] Nyquist periods)")
    print(f"  combined ({len(instants)} samples): {instants.combined.tolist()}")


def main():
    print("Co-prime pair (M, N) = (4, 3), one period per snapshot")

    proto = make_scheme("prototype", m=4, n=3)
    show(proto, "prototype: both samplers start at t = 0 (zeroth samples coincide)")

    sn = make_scheme("super-nyquist", m=4, n=3)
    show(sn, "half-period offset: sampler 2 shifted by d/2, so no instants coincide")
    inst = sample_instants(sn)
    even = all(t % 2 == 0 for t in inst.per_sampler[0])
    odd = all(t % 2 == 1 for t in inst.per_sampler[1])
    print(f"  parity split on the half grid: sampler 1 even={even}, sampler 2 odd={odd}")

    # same acquisition rate, twice the measurable band
    print("\nBoth patterns acquire M+N = 7 samples per co-prime period;")
    print("the offset pattern reconstructs statistics on a grid twice as fine.")

    ml = make_scheme("multi-level", levels=(2, 3, 5))
    show(ml, "multi-level with levels (2, 3, 5): three samplers, offsets 0, d/3, 2d/3")
    print(f"  branch spacings (product of the other levels): {ml.level_spacings}")

    # snapshots tile the time axis
    later = sample_instants(sn, snapshot_index=2)
    print(f"\nsnapshot 2 of the offset pattern starts at tick {later.combined[0]} "
          f"(= 2 x span {sn.snapshot_span})")


if __name__ == "__main__":
    main()
