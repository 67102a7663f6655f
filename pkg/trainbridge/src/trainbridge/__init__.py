"""Training-loop bridge over the syntheon engine.

Wraps the engine's ordered augmentation stream into batched numpy arrays
(one array per modality plus a provenance list) so ML training loops can
consume `(image, lightness, normal, depth, semantic, pose, class)` without
touching dataset plumbing. The bridge never recomputes augmentation: every
pixel comes out of the engine's own stream, so bytes match the engine and
CLI outputs for the same (seed, index).
"""

__version__ = "0.1.0"

from .stream import BridgeBatch, BridgeVersionError, batch_at, open_stream

__all__ = ["BridgeBatch", "BridgeVersionError", "batch_at", "open_stream",
           "__version__"]
