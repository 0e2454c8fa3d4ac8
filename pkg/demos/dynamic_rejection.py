"""Show observation-weighted fusion dropping a person walking through.

A box "walker" crosses the sensor's view during 3 of 50 scans of a
static room. Counting observations per voxel and keeping only voxels
seen more than tau times removes every trace of the walker, while naive
stitching bakes three copies of it into the map. Run with:

    python3 demos/dynamic_rejection.py
"""

import numpy as np

from armap.config import SensorConfig
from armap.se3 import Pose
from armap.simulator import Box, Scene, simulate_scan
from armap.voxelmap import VoxelMap, insert_scan, insert_scan_loam_baseline


def main():
    room = Scene.room(size=(16.0, 16.0, 3.0), center=(0.0, 0.0, 0.7))
    walker = Box(np.array([3.75, -1.5, -0.8]), np.array([4.25, -1.0, 0.9]),
                 velocity=np.array([0.0, 10.0, 0.0]),
                 t_start=1.0, t_end=1.3)
    scene = Scene(room.primitives + (walker,))
    spec = SensorConfig(horizontal_resolution=720)
    rng = np.random.default_rng(9)

    pose = Pose.identity()
    weighted = VoxelMap(0.05)
    baseline = VoxelMap(0.05)
    for k in range(50):
        t = 0.1 * k
        scan, truth = simulate_scan(scene, spec, pose.with_stamp(t),
                                    pose.with_stamp(t + 0.1), t, rng)
        if truth.dynamic.any():
            print(f"scan {k}: walker visible "
                  f"({int(truth.dynamic.sum())} points)")
        insert_scan(weighted, scan, pose)
        insert_scan_loam_baseline(baseline, scan, pose)

    def walker_points(pts):
        # the corridor the walker swept through, clear of floor and walls
        return int(((pts[:, 0] > 3.6) & (pts[:, 0] < 4.4)
                    & (pts[:, 1] > -1.7) & (pts[:, 1] < 2.2)
                    & (pts[:, 2] > -0.7) & (pts[:, 2] < 1.0)).sum())

    kept, _ = weighted.finalize(5)
    stitched, _ = baseline.finalize(0)
    print(f"weighted map (tau=5): {len(kept)} points, "
          f"{walker_points(kept)} in the walker's path")
    print(f"naive stitching:      {len(stitched)} points, "
          f"{walker_points(stitched)} in the walker's path")


if __name__ == "__main__":
    main()
