"""A tour of the class ring: the four products, the window, and the
rewriting algebra.

The ring multiplies isomorphism classes of stable crystals.  Finite
classes multiply by the Littlewood-Richardson rule, finite-past-dominant
fuses, dominant-past-finite decomposes with correction terms read off a
rank-stabilized scan, and dominant-times-dominant is an infinite series
reported through an explicit exactness window.  The realization map psi
sends everything to a skew-polynomial normal form where the correction
terms become the closed-form delta tables.
"""

from crystalline import (
    DominantShape,
    column_class,
    groth_mul,
    level_determinant,
    psi,
    row_class,
    shape_class,
    structure_constant,
)


def main() -> None:
    lie = "c"
    h1, z1 = row_class(lie, 1), column_class(lie, 1)

    print("the ring is not commutative:")
    print(f"  h1 * z1 = {groth_mul(h1, z1)}")
    print(f"  z1 * h1 = {groth_mul(z1, h1)}")
    print()

    print("the same product through the realization map:")
    print(f"  psi(h1 * z1) = {psi(groth_mul(h1, z1))}")
    print(f"  psi(z1 * h1) = {psi(groth_mul(z1, h1))}")
    print()

    print("dominant squares are infinite series (window at degree 8):")
    h0 = row_class(lie, 0)
    print(f"  h0 * h0 = {groth_mul(h0, h0, 8)}")
    print()

    print("the determinant telescopes the series back to one class:")
    shape = DominantShape(lie, (1, 1), 2)
    print(f"  det for {shape} = {level_determinant(shape)}")
    print()

    print("structure constants (exact, windowed internally):")
    for mu in [(1, 1), (2,), (3,)]:
        k = structure_constant(lie, mu, 2, shape)
        print(f"  coefficient of {shape} in the mu={mu} row product: {k}")
    print()

    print("a finite class times a dominant class fuses to one label:")
    w = shape_class(lie, (3, 3, 2, 1), 4)
    fused = groth_mul(column_class(lie, 2), w)
    print(f"  z2 * [{DominantShape(lie, (3, 3, 2, 1), 4)}] = {fused}")


if __name__ == "__main__":
    main()
