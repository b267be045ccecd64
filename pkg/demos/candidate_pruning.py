"""
Why fusing patterns beats brute enumeration
===========================================

Growing length-m survivors into length-(m+1) candidates is the core of
level-wise mining.  Enumeration appends every possible new rank, giving
m+1 children per pattern.  Fusion instead overlaps two survivors whose
shared interior agrees, so a candidate is generated only when both of
its length-m ancestors are already known frequent.
"""
from oppminer import (
    Pattern,
    enumerate_extensions,
    fuse,
    level_candidates_enum,
    level_candidates_fusion,
)

survivors = [Pattern.of(1, 2, 3), Pattern.of(2, 3, 1), Pattern.of(3, 1, 2)]
print("frequent length-3 shapes:", ", ".join(str(p) for p in survivors))

enumerated = level_candidates_enum(survivors)
print(f"\nenumeration: {len(enumerated)} candidates")
for p in survivors:
    children = ", ".join(str(c) for c in enumerate_extensions(p))
    print(f"  {p} -> {children}")

fused = level_candidates_fusion(survivors)
print(f"\nfusion: {len(fused)} candidates")
for p in survivors:
    row = [c for q in survivors for c in fuse(p, q)]
    print(f"  {p} -> {', '.join(str(c) for c in row)}")

pruned = set(enumerated) - set(fused)
print(f"\npruned without testing: {', '.join(sorted(str(c) for c in pruned))}")
print("every pruned candidate has an infrequent length-3 suffix shape,")
print("so it could never be frequent itself.")
