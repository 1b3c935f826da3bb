"""A walking tour of the four invariants on a handful of small graphs.

Run with: python3 demos/invariants_tour.py
"""

from romdom import (
    bits,
    domination_number,
    efficient_dominating_sets,
    enumerate_optimal_rdfs,
    is_roman,
    make_family,
    parse_family,
    two_packing_number,
    roman_domination_number,
)


def show(spec: str) -> None:
    g = make_family(parse_family(spec))
    gamma = domination_number(g)
    gammar = roman_domination_number(g)
    packing = two_packing_number(g)
    codes = efficient_dominating_sets(g)

    print(f"{g.name()}  ({g.n} vertices, {g.edge_count()} edges)")
    print(f"  domination number        {gamma.value}   witness {sorted(bits(gamma.witness))}")
    print(f"  Roman domination number  {gammar.value}   labels  {list(gammar.witness.labels)}")
    print(f"  2-packing number         {packing.value}   witness {sorted(bits(packing.witness))}")
    if codes:
        print(f"  efficient dominating sets: {[sorted(bits(s)) for s in codes]}")
    else:
        print("  efficient dominating sets: none")
    print(f"  Roman graph (gamma_R = 2*gamma): {is_roman(g)}")
    print()


def main() -> None:
    for spec in ("path:7", "cycle:6", "star:4", "complete:4", "spider:3:1", "hypercube:3"):
        show(spec)

    # every optimal labeling of C5, showing why its |B2| values split
    c5 = make_family(parse_family("cycle:5"))
    print("all optimal Roman functions of C5:")
    for f in enumerate_optimal_rdfs(c5):
        twos = sorted(bits(f.b2))
        ones = sorted(bits(f.b1))
        print(f"  labels {list(f.labels)}  2s at {twos}, 1s at {ones}")


if __name__ == "__main__":
    main()
