"""Tour the blocks of one group at every prime dividing its order."""

from pblocks import block_system
from pblocks.corpus import prime_factors, symmetric_group


def main():
    group = symmetric_group(4)
    order = group.order()
    print(f"S4 has order {order}; primes to inspect: {prime_factors(order)}\n")
    for p in prime_factors(order):
        system = block_system(group, p)
        print(f"p = {p}: {len(system.blocks)} block(s)")
        for block in system.blocks:
            tag = "principal" if block.principal else f"block {block.index}"
            kinds = "abelian" if block.defect_group.is_abelian() else "nonabelian"
            print(
                f"  {tag}: k = {len(block.chars)}, l = {len(block.ibrs)}, "
                f"defect {block.defect}, defect group order "
                f"{block.defect_group.order()} ({kinds}), tau = {block.tau}"
            )
            bound = len(block.ibrs) * block.defect_group.order()
            strict = 2 ** block.sectional * block.defect_group.order()
            print(f"    tau <= l*|P| reads {block.tau} <= {bound};"
                  f" the strict target is {strict}")
        print()
    print("Every defect-zero block has tau exactly 1; positive defect forces tau > 1.")


if __name__ == "__main__":
    main()
