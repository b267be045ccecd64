"""
Smoothing a noisy series before mining, then labeling the shapes
================================================================

Raw measurements jitter, and jitter shows up as spurious 2-step shapes.
A centered moving average removes it while keeping the series the same
length, so window positions stay comparable.  Mined shapes can then be
bucketed into upward / downward / mixed trends for a quick read.
"""
import numpy as np

from oppminer import TimeSeries, classify_trend, mine_maximal, moving_average

rng = np.random.default_rng(3)
t = np.arange(60, dtype=float)
clean = 10 * np.sin(t / 9.0) + t
noisy = TimeSeries(clean + rng.normal(0, 2.0, t.size), name="sensor")

smooth = moving_average(noisy, window=5)
print(f"first five raw    values: {[round(float(v), 1) for v in noisy.values[:5]]}")
print(f"first five smooth values: {[round(float(v), 1) for v in smooth.values[:5]]}")

for label, series in (("raw", noisy), ("smoothed", smooth)):
    result = mine_maximal(series, minsup=4)
    print(f"\n{label}: {len(result.maximal)} maximal shapes "
          f"from {result.all_frequent_count} frequent")
    for pattern, support in sorted(result.maximal.items(), key=lambda kv: -kv[1])[:6]:
        trend = classify_trend(pattern)
        print(f"  {str(pattern):<16} support {support:<3} {trend.value}")
