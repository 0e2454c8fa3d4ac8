"""Track a corridor run with scan-to-scan odometry and compare to truth.

Simulates 100 noisy scans along a 50 m corridor pass, runs the
feature-based odometry, and prints end drift and per-scan relative
errors against the simulator trajectory. Run with:

    python3 demos/odometry_vs_truth.py
"""

import time

import numpy as np

from armap.config import SensorConfig
from armap.odometry import run_odometry
from armap.se3 import compose, inverse, relative
from armap.simulator import Scene, simulate_scan, simulate_trajectory


def main():
    scene = Scene.corridor(length=60.0)
    spec = SensorConfig(range_noise=0.01)
    traj = simulate_trajectory("line", {"length": 50.0, "speed": 5.0}, 0.1)
    rng = np.random.default_rng(7)
    print("simulating", len(traj) - 1, "scans ...")
    scans = [simulate_scan(scene, spec, traj[k], traj[k + 1],
                           traj[k].stamp, rng)[0]
             for k in range(len(traj) - 1)]

    t0 = time.monotonic()
    results = run_odometry(scans)
    print(f"odometry: {len(results)} scans in {time.monotonic() - t0:.1f} s")

    # the estimate frame is anchored at the first scan's end pose; ground
    # truth for scan k is trajectory knot k+1
    anchor = compose(traj[1], inverse(results[0].pose))
    end = compose(anchor, results[-1].pose)
    drift = np.linalg.norm(end.translation - traj[len(results)].translation)
    rel = [np.linalg.norm(
        relative(results[k - 1].pose, results[k].pose).translation
        - relative(traj[k], traj[k + 1]).translation)
        for k in range(1, len(results))]
    print(f"end drift: {drift:.3f} m over 50 m "
          f"({100 * drift / 50:.2f} %)")
    print(f"relative step error: median {np.median(rel) * 1000:.1f} mm, "
          f"max {np.max(rel) * 1000:.1f} mm")


if __name__ == "__main__":
    main()
