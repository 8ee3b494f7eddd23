"""Walk through the two Klein four principal blocks seen from A4 and A5."""

from fractions import Fraction

from pblocks import block_system, check_conjectures
from pblocks.corpus import alternating_group


def describe(name, group):
    system = block_system(group, 2)
    block = system.principal_block()
    print(f"{name}: order {group.order()}, {len(system.blocks)} block(s) at p = 2")
    print(f"  ordinary characters in the principal block: {len(block.chars)}")
    print(f"  simple modules: {len(block.ibrs)} with degrees {block.ibr_degrees}")
    print(f"  defect group order {block.defect_group.order()},"
          f" sectional rank {block.sectional}")
    print("  Cartan matrix:")
    for row in block.cartan:
        print(f"    {list(row)}")
    print(f"  block algebra dimension {block.dim},"
          f" degree-square sum {sum(d * d for d in block.degrees)}")
    print(f"  tau = {block.tau} (equality bound {len(block.ibrs)}*|P| ="
          f" {len(block.ibrs) * block.defect_group.order()})")
    verdicts = check_conjectures(block)
    print(f"  bound verdicts: {[k for k, v in verdicts.items() if v is True]}")
    print()


def main():
    print("Both Klein four block types, computed from scratch.\n")
    describe("A4", alternating_group(4))
    describe("A5", alternating_group(5))
    a4 = block_system(alternating_group(4), 2).principal_block()
    a5 = block_system(alternating_group(5), 2).principal_block()
    print("The two Cartan matrices above are the only Klein four types with")
    print("three simple modules; their tau values are"
          f" {a4.tau} and {a5.tau} = {Fraction(44, 9)}.")


if __name__ == "__main__":
    main()
