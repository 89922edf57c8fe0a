"""Build the rank-2 letter crystals and print their arrow diagrams.

The odd orthogonal alphabet threads a zero letter into the middle of the
chain, the symplectic alphabet is a plain chain, and the even orthogonal
alphabet replaces the chain's middle by a diamond over the first two
arrow colors.
"""

from crystalline import build_graph, letter_graph_edges, t_lambda
from crystalline.tableaux import alphabet


def main() -> None:
    for lie_type in ("b", "c", "d"):
        letters = alphabet(lie_type, 2)
        print(f"type {lie_type}: letters {letters}")
        for src, color, dst in letter_graph_edges(lie_type, 2):
            print(f"  {src:>2} --{color}--> {dst}")
        graph = build_graph(t_lambda((1,), lie_type, 2))
        assert len(graph) == len(letters)
        print()
    print("DOT form of the even orthogonal diamond:")
    print(build_graph(t_lambda((1,), "d", 2)).to_dot())


if __name__ == "__main__":
    main()
