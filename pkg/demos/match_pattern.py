"""
How one pattern is matched: filter cheaply, then verify exactly
===============================================================

Support counting runs in two stages.  First the series and the pattern
are reduced to up/down bit strings and a bit-parallel scan proposes
candidate windows; that step can overshoot because different shapes can
share the same up/down profile.  A strict rank check then keeps only
the true occurrences.
"""
from oppminer import (
    Pattern,
    TimeSeries,
    encode_pattern,
    encode_series,
    filter_candidates,
    occurrences,
    ordered_table,
    verify_occurrence,
)

sales = TimeSeries(
    [11, 10, 21, 25, 12, 14, 18, 19, 26, 13, 16, 20, 24, 30, 15, 17],
)
pattern = Pattern.of(3, 4, 5, 1, 2)

print(f"series bits : {encode_series(sales)}")
print(f"pattern bits: {encode_pattern(pattern)} for {pattern}")

proposed = filter_candidates(encode_series(sales), encode_pattern(pattern))
print(f"\nfilter proposes starts {proposed}")

# The ordered table lists where rank 1, 2, ... sit inside the pattern,
# so a window is checked with m-1 strict comparisons.
table = ordered_table(pattern)
for start in proposed:
    ok = verify_occurrence(sales, table, start)
    print(f"  start {start:>2}: {'occurrence' if ok else 'rejected, same ups and downs but wrong ranks'}")

occ = occurrences(sales, pattern)
print(f"\nsupport {occ.support}, starts {occ.starts}")
