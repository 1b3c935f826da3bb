"""Product graphs and the graph6 wire format.

Builds Cartesian and strong products, checks the edge-count identities, and
round-trips everything through graph6 strings.

Run with: python3 demos/products_and_graph6.py
"""

from romdom import (
    CARTESIAN,
    STRONG,
    bits,
    make_family,
    parse_family,
    parse_graph6,
    product,
    write_graph6,
)


def main() -> None:
    g = make_family(parse_family("path:3"))
    h = make_family(parse_family("cycle:4"))
    m1, m2 = g.edge_count(), h.edge_count()

    cart = product(g, h, CARTESIAN)
    strong = product(g, h, STRONG)

    print(f"factors: {g.name()} ({g.n}v, {m1}e) and {h.name()} ({h.n}v, {m2}e)")
    print(f"Cartesian product: {cart.n} vertices, {cart.edge_count()} edges")
    print(f"  expected n1*m2 + n2*m1 = {g.n * m2 + h.n * m1}")
    print(f"strong product:    {strong.n} vertices, {strong.edge_count()} edges")
    print(f"  expected Cartesian + 2*m1*m2 = {g.n * m2 + h.n * m1 + 2 * m1 * m2}")
    print()

    # vertex (u, v) lives at index u * n2 + v
    u, v = 1, 2
    idx = u * h.n + v
    print(f"vertex ({u},{v}) of the Cartesian product is index {idx};")
    print(f"  its neighbours are {sorted(bits(cart.adj[idx]))}")
    print()

    for graph in (g, h, cart, strong):
        line = write_graph6(graph)
        back = parse_graph6(line)
        assert back == graph
        print(f"{graph.name():24s} -> {line}")


if __name__ == "__main__":
    main()
