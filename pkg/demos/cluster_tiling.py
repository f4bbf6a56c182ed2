"""Tile the plane by lattice translates of a small cluster.

search_periodic_cotiler looks for a sublattice plus residues whose translates
of the tile cover every cell exactly once; verify_cotiler re-checks the
cover and prime_periodicity_check derives the forced periods when the tile
size is prime.

Run:  python3 demos/cluster_tiling.py
"""

from nivatk import (
    ClusterTile,
    prime_periodicity_check,
    search_periodic_cotiler,
    verify_cotiler,
)


def report(label, tile, max_index):
    print(f"{label}: cells {list(tile.cells)}")
    cot = search_periodic_cotiler(tile, max_index)
    if cot is None:
        print(f"  no periodic cotiler up to index {max_index}")
        return
    print(f"  lattice basis {cot.lattice.basis()}, residues {cot.residues}")
    print(f"  verify: {verify_cotiler(tile, cot).status}")
    if len(tile.cells) in (2, 3, 5, 7):
        periods = prime_periodicity_check(tile, cot)
        print(f"  forced periods: {periods}")


def main():
    report("L tromino", ClusterTile([(0, 0), (0, 1), (1, 0)]), 3)
    report("domino", ClusterTile([(0, 0), (1, 0)]), 2)
    report("2x2 square", ClusterTile([(0, 0), (1, 0), (0, 1), (1, 1)]), 4)
    report("1D gapped pair", ClusterTile([(0,), (2,)]), 4)
    # three cells with a hole at distance 2: no lattice cover exists
    report("1D {0,1,3}", ClusterTile([(0,), (1,), (3,)]), 6)


if __name__ == "__main__":
    main()
