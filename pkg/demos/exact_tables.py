"""Print the exact ordinary and modular character data behind one block system."""

from pblocks import block_system, character_table
from pblocks.corpus import symmetric_group


def main():
    group = symmetric_group(4)
    tab = character_table(group)
    print("Ordinary character table of S4 (exact cyclotomic values):")
    sizes = tab.classes.sizes
    orders = tab.classes.orders
    print(f"  class sizes:  {list(sizes)}")
    print(f"  class orders: {list(orders)}")
    for n, row in enumerate(tab.rows):
        print(f"  chi_{n} (degree {tab.degrees[n]}): {[str(v) for v in row]}")
    print()
    system = block_system(group, 2)
    regular = system.regular
    print(f"At p = 2 the 2-regular classes are {list(regular)} (by class index).")
    print("Brauer character values on those classes:")
    for n, row in enumerate(system.brauer.rows):
        print(f"  phi_{n} (degree {system.brauer.dims[n]}): {[str(v) for v in row]}")
    print()
    print("Decomposition matrix (ordinary rows, simple columns):")
    for ci, row in enumerate(system.decomposition):
        print(f"  chi_{ci}: {list(row)}")
    print()
    block = system.principal_block()
    print("Cartan matrix (transpose of the decomposition times itself):")
    for row in block.cartan:
        print(f"  {list(row)}")


if __name__ == "__main__":
    main()
