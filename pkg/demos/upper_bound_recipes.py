"""Four ways to build a cheap Roman function on a product graph.

Each recipe produces a concrete labeling whose weight upper-bounds the Roman
domination number of the product; the exact value shows how much slack each
one leaves on a few sample pairs.

Run with: python3 demos/upper_bound_recipes.py
"""

from romdom import (
    cross_construction,
    make_family,
    parse_family,
    replicate_construction,
    roman_domination_number,
    strong_case_construction,
    swap_construction,
    validate_rdf,
)

RECIPES = (
    ("replicate", replicate_construction),
    ("swap", swap_construction),
    ("cross", cross_construction),
    ("strong-case", strong_case_construction),
)

PAIRS = (
    ("path:4", "path:5"),
    ("path:3", "star:3"),
    ("cycle:6", "star:3"),
    ("complete:3", "complete:3"),
)


def main() -> None:
    for ga, hb in PAIRS:
        g = make_family(parse_family(ga))
        h = make_family(parse_family(hb))
        print(f"{g.name()} x {h.name()}")
        for label, recipe in RECIPES:
            out = recipe(g, h)
            assert validate_rdf(out.product, out.rdf)
            exact = roman_domination_number(out.product).value
            slack = out.rdf.weight - exact
            print(
                f"  {label:12s} weight {out.rdf.weight:3d}"
                f"  claimed <= {out.claimed_bound:3d}"
                f"  exact {exact:3d}  slack {slack}"
                f"  [{out.selection_mode}]"
            )
        print()


if __name__ == "__main__":
    main()
