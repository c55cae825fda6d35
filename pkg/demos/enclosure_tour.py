"""Tour of the eigenvalue enclosure regions.

For a damping profile a(x) on the line, the damped wave generator can
only place point spectrum where the proven bounds allow it. This script
builds every region the library knows for three contrasting profiles

  * a small step     (L1 norm below 2: no point spectrum at all),
  * a deep step      (absence fails, but real eigenvalues get floored),
  * a complex step   (only the modulus-based tests remain available),

and prints each region with its applicability conditions. Run it with

    python3 demos/enclosure_tour.py
"""

import json

from specwave import (
    boundary_polyline,
    coupling_interval,
    davies_verdict,
    lt_real_eigenvalue_bounds,
    modulus_lower_bound,
    step,
)


def describe(title, regions):
    print(f"\n=== {title} ===")
    for region in regions:
        status = "applies" if region.applicable else "does NOT apply"
        print(f"- {region.source} [{region.side}]: kind={region.kind} ({status})")
        for cond in region.conditions:
            mark = "ok" if cond.holds else "failed"
            print(f"    condition {cond.name}: {mark} ({cond.detail})")
        interesting = {
            k: v
            for k, v in region.params.items()
            if k in ("bound", "radius", "lo", "hi", "l1_norm", "verdict")
        }
        if interesting:
            print(f"    params: {interesting}")
        polyline = boundary_polyline(region, n_points=3)
        if len(polyline):
            pts = ", ".join(f"{p:.4g}" for p in polyline)
            print(f"    boundary sample: {pts}")


def main():
    small = step(-1.0, 0.5)  # integral of |a| is 1 < 2
    describe(
        "small attractive step: the L1 test (Davies) settles everything",
        [davies_verdict(small), *lt_real_eigenvalue_bounds(small, 0.5)],
    )

    deep = step(-3.0, 1.0)  # integral of |a| is 6, integral of a is -6
    describe(
        "deep attractive step: absence fails, floors and caps take over",
        [
            davies_verdict(deep),
            *lt_real_eigenvalue_bounds(deep, 1.5),  # modulus cap 27/8
            modulus_lower_bound(deep),  # floor 1/3 on |mu|
            coupling_interval(deep),  # alpha window [1/3, 2/3]
        ],
    )

    twisted = step(1.0j, 0.9)  # complex damping, l1 = 1.8 < 2
    describe(
        "complex step: real-axis bounds are unavailable, smallness still works",
        [davies_verdict(twisted)],
    )

    print("\nEvery region serializes to the JSON the CLI writes into regions.json:")
    print(json.dumps(modulus_lower_bound(deep).to_dict(), indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
