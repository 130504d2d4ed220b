"""Pose-guided spatial attention classifier.

Joint multi-class category and multi-label attribute prediction where the
internal attention map is supervised by Gaussian heatmaps rendered from
body-pose keypoints. Built on a small from-scratch autodiff engine.
"""

__version__ = "0.1.0"
