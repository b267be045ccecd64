"""
Mining every frequent trend shape in a small sales series
=========================================================

A pattern here is a permutation of ranks: (1, 2, 3) means three values
in strictly increasing order, (3, 1, 2) means a drop then a partial
recovery.  A pattern is frequent when at least minsup windows of the
series show exactly that relative order.
"""
from oppminer import TimeSeries, mine_frequent, mine_maximal

sales = TimeSeries(
    [11, 10, 21, 25, 12, 14, 18, 19, 26, 13, 16, 20, 24, 30, 15, 17],
    name="weekly-sales",
)

# Level-wise search: start from (1,2) and (2,1), fuse survivors to build
# each next level, and count support with the bit-filter + verify scan.
result = mine_frequent(sales, minsup=3)
print(f"{len(result.frequent)} frequent shapes in {sales.n} values "
      f"(candidates tried: {result.candidates_generated})")
for pattern, support in sorted(result.frequent.items(), key=lambda kv: (kv[0].m, kv[0].ranks)):
    print(f"  {str(pattern):<12} support {support}")

# The maximal subset drops every shape that a longer frequent shape
# already implies, which is the useful summary for reports.
summary = mine_maximal(sales, minsup=3)
print(f"\nmaximal shapes ({summary.all_frequent_count} frequent total, "
      f"compression {summary.compression_rate:.0%}):")
for pattern, support in summary.maximal.items():
    print(f"  {str(pattern):<12} support {support}")
