"""Body-pose keypoints and Gaussian supervision heatmaps.

A skeleton is rendered into a [0,1] heatmap by placing an isotropic 2D
Gaussian on every joint and on every limb segment (distance to the closed
segment), then taking the per-pixel maximum over all parts.

Coordinate conventions: pixel (u, v) has its center at continuous image
coordinates (x=u, y=v); heatmap arrays are indexed values[v, u]. Joints may
fall outside the canvas; only their Gaussian tail contributes. Geometry is
computed from pixel-minus-keypoint differences, so renders are bitwise
equivariant under horizontal flips and integer translations whenever the
keypoint coordinates sit on a dyadic grid (multiples of 1/8 px).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace

import numpy as np

# Joint enumeration: 14 joints, detector export order.
NOSE = 0
NECK = 1
R_SHOULDER = 2
R_ELBOW = 3
R_WRIST = 4
L_SHOULDER = 5
L_ELBOW = 6
L_WRIST = 7
R_HIP = 8
R_KNEE = 9
R_ANKLE = 10
L_HIP = 11
L_KNEE = 12
L_ANKLE = 13

NUM_JOINTS = 14

JOINT_NAMES = [
    "nose", "neck",
    "r_shoulder", "r_elbow", "r_wrist",
    "l_shoulder", "l_elbow", "l_wrist",
    "r_hip", "r_knee", "r_ankle",
    "l_hip", "l_knee", "l_ankle",
]

# Left/right counterparts, used when mirroring a skeleton.
FLIP_PAIRS = [
    (R_SHOULDER, L_SHOULDER), (R_ELBOW, L_ELBOW), (R_WRIST, L_WRIST),
    (R_HIP, L_HIP), (R_KNEE, L_KNEE), (R_ANKLE, L_ANKLE),
]

# Default limb set: neck-shoulders, shoulder-elbow, elbow-wrist,
# neck-hips, hip-knee, knee-ankle, on both sides.
DEFAULT_LIMBS: tuple[tuple[int, int], ...] = (
    (NECK, R_SHOULDER), (NECK, L_SHOULDER),
    (R_SHOULDER, R_ELBOW), (R_ELBOW, R_WRIST),
    (L_SHOULDER, L_ELBOW), (L_ELBOW, L_WRIST),
    (NECK, R_HIP), (NECK, L_HIP),
    (R_HIP, R_KNEE), (R_KNEE, R_ANKLE),
    (L_HIP, L_KNEE), (L_KNEE, L_ANKLE),
)


@dataclass(frozen=True)
class Keypoint:
    joint_id: int
    x: float
    y: float
    confidence: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"keypoint confidence {self.confidence} outside [0,1]")


@dataclass(frozen=True)
class Skeleton:
    keypoints: tuple[Keypoint, ...]
    limbs: tuple[tuple[int, int], ...] = DEFAULT_LIMBS

    def __post_init__(self):
        ids = [kp.joint_id for kp in self.keypoints]
        if len(ids) != len(set(ids)):
            raise ValueError("skeleton has duplicate joint ids")

    def joint(self, joint_id: int) -> Keypoint | None:
        for kp in self.keypoints:
            if kp.joint_id == joint_id:
                return kp
        return None

    def translated(self, dx: float, dy: float) -> "Skeleton":
        return Skeleton(
            tuple(replace(kp, x=kp.x + dx, y=kp.y + dy) for kp in self.keypoints),
            self.limbs,
        )

    def scaled(self, factor: float) -> "Skeleton":
        return Skeleton(
            tuple(replace(kp, x=kp.x * factor, y=kp.y * factor) for kp in self.keypoints),
            self.limbs,
        )

    def flipped_horizontal(self, width: int) -> "Skeleton":
        """Mirror about the vertical canvas axis, swapping left/right joints."""
        swap = {a: b for a, b in FLIP_PAIRS} | {b: a for a, b in FLIP_PAIRS}
        kps = tuple(
            Keypoint(swap.get(kp.joint_id, kp.joint_id), (width - 1) - kp.x, kp.y, kp.confidence)
            for kp in self.keypoints
        )
        return Skeleton(kps, self.limbs)


@dataclass(frozen=True)
class HeatmapSpec:
    width: int
    height: int
    sigma: float | None = None  # defaults to 0.05 * min(width, height)
    confidence_threshold: float = 0.1

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"heatmap extents ({self.width},{self.height}) must be >= 1")
        if self.sigma is not None and self.sigma <= 0:
            raise ValueError(f"sigma {self.sigma} must be positive")

    @property
    def effective_sigma(self) -> float:
        return self.sigma if self.sigma is not None else 0.05 * min(self.width, self.height)


@dataclass
class Heatmap:
    values: np.ndarray  # (height, width), float64, in [0,1]
    role: str = "ground-truth"
    skipped_limbs: int = 0

    @property
    def width(self) -> int:
        return self.values.shape[1]

    @property
    def height(self) -> int:
        return self.values.shape[0]


def _grid(spec: HeatmapSpec) -> tuple[np.ndarray, np.ndarray]:
    u = np.arange(spec.width, dtype=np.float64)
    v = np.arange(spec.height, dtype=np.float64)
    return u[None, :], v[:, None]


def render_joint(kp: Keypoint, spec: HeatmapSpec) -> Heatmap:
    """Gaussian bump exp(-d^2 / (2 sigma^2)) around a joint."""
    out = np.zeros((spec.height, spec.width), dtype=np.float64)
    if kp.confidence < spec.confidence_threshold:
        return Heatmap(out)
    u, v = _grid(spec)
    dx = u - kp.x
    dy = v - kp.y
    s2 = 2.0 * spec.effective_sigma**2
    out = np.exp(-(dx * dx + dy * dy) / s2)
    return Heatmap(out)


def render_limb(a: Keypoint, b: Keypoint, spec: HeatmapSpec) -> Heatmap:
    """Gaussian band around the closed segment ab; a == b reduces to render_joint(a)."""
    if (a.x, a.y) == (b.x, b.y):
        kp = a if a.confidence <= b.confidence else b
        if min(a.confidence, b.confidence) < spec.confidence_threshold:
            return Heatmap(np.zeros((spec.height, spec.width), dtype=np.float64))
        return render_joint(Keypoint(a.joint_id, a.x, a.y, min(a.confidence, b.confidence)), spec)
    if a.confidence < spec.confidence_threshold or b.confidence < spec.confidence_threshold:
        return Heatmap(np.zeros((spec.height, spec.width), dtype=np.float64))
    u, v = _grid(spec)
    # work relative to endpoint a so mirrored/translated inputs stay bit-exact
    px = u - a.x
    py = v - a.y
    mx = b.x - a.x
    my = b.y - a.y
    denom = mx * mx + my * my
    t = (px * mx + py * my) / denom
    t = np.clip(t, 0.0, 1.0)
    dx = px - t * mx
    dy = py - t * my
    s2 = 2.0 * spec.effective_sigma**2
    return Heatmap(np.exp(-(dx * dx + dy * dy) / s2))


def render_skeleton(skel: Skeleton, spec: HeatmapSpec) -> Heatmap:
    """Per-pixel maximum over all joint and limb renders."""
    out = np.zeros((spec.height, spec.width), dtype=np.float64)
    present = {kp.joint_id: kp for kp in skel.keypoints}
    skipped = 0
    for kp in skel.keypoints:
        np.maximum(out, render_joint(kp, spec).values, out=out)
    for ja, jb in skel.limbs:
        if ja not in present or jb not in present:
            skipped += 1
            continue
        np.maximum(out, render_limb(present[ja], present[jb], spec).values, out=out)
    return Heatmap(out, skipped_limbs=skipped)


def select_relevant_joints(skel: Skeleton, category: int, table: dict[int, set[int]]) -> Skeleton:
    """Restrict a skeleton to the joints relevant to one category.

    Limbs are kept only when both endpoints survive. An unknown category
    returns the full skeleton.
    """
    if category not in table:
        return skel
    keep = table[category]
    kps = tuple(kp for kp in skel.keypoints if kp.joint_id in keep)
    limbs = tuple((a, b) for a, b in skel.limbs if a in keep and b in keep)
    return Skeleton(kps, limbs)


class PoseParseError(ValueError):
    """Malformed pose file content."""


def parse_pose_file(text: str) -> list[Skeleton]:
    """Parse detector-export text into skeletons.

    Expected structure: {"people": [{"pose_keypoints": [x0,y0,c0, ...]}]}
    with 14 joints (42 numbers) per person in enumeration order.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise PoseParseError(f"pose file is not valid JSON: line {e.lineno}, column {e.colno}: {e.msg}") from e
    if not isinstance(doc, dict) or "people" not in doc:
        raise PoseParseError('pose file missing the "people" field')
    skeletons: list[Skeleton] = []
    for i, person in enumerate(doc["people"]):
        if not isinstance(person, dict) or "pose_keypoints" not in person:
            raise PoseParseError(f'person {i} missing the "pose_keypoints" field')
        vals = person["pose_keypoints"]
        if len(vals) % 3 != 0:
            raise PoseParseError(f"person {i}: keypoint list length {len(vals)} is not divisible by 3")
        if len(vals) != 3 * NUM_JOINTS:
            raise PoseParseError(f"person {i}: expected {3 * NUM_JOINTS} values (14 joints x 3), got {len(vals)}")
        kps = []
        for j in range(NUM_JOINTS):
            x, y, c = (float(vals[3 * j + k]) for k in range(3))
            if not 0.0 <= c <= 1.0:
                raise PoseParseError(f"person {i}, joint {j}: confidence {c} outside [0,1]")
            kps.append(Keypoint(j, x, y, c))
        skeletons.append(Skeleton(tuple(kps)))
    return skeletons


def write_pose_file(skel: Skeleton) -> str:
    """Serialize one skeleton in the detector-export structure."""
    flat: list[float] = []
    by_id = {kp.joint_id: kp for kp in skel.keypoints}
    for j in range(NUM_JOINTS):
        kp = by_id.get(j)
        if kp is None:
            flat += [0.0, 0.0, 0.0]
        else:
            flat += [kp.x, kp.y, kp.confidence]
    return json.dumps({"people": [{"pose_keypoints": flat}]})


def dilate_mask(mask: np.ndarray, radius: int) -> np.ndarray:
    """Binary dilation with a (2r+1)^2 square structuring element."""
    out = mask.astype(bool).copy()
    h, w = mask.shape
    src = mask.astype(bool)
    for dy in range(-radius, radius + 1):
        for dx in range(-radius, radius + 1):
            if dx == 0 and dy == 0:
                continue
            ys = slice(max(dy, 0), h + min(dy, 0))
            xs = slice(max(dx, 0), w + min(dx, 0))
            ys_src = slice(max(-dy, 0), h + min(-dy, 0))
            xs_src = slice(max(-dx, 0), w + min(-dx, 0))
            out[ys, xs] |= src[ys_src, xs_src]
    return out
