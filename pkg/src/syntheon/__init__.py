"""syntheon: CAD-to-synthetic-data engine.

Renders noiseless geometric modalities (normal / depth / semantic maps)
from texture-less meshes over icosphere viewpoint samplings, and turns
them online into randomized 64x64 color training images through a seeded
augmentation pipeline. Also ships the reference math kernels (triplet
loss with pose-aware margins, self-attention, generative losses) and a
triplet sampler for metric-learning trainers.
"""

__version__ = "0.1.0"

from .augment import (AugmentedSample, NoiseVector, PatchCorpus, augment,
                      blur, composite_background, random_polygon,
                      sample_noise_vector, shade, texture_object)
from .geometry import (Mesh, MeshError, Quaternion, load_mesh, make_mesh,
                       normalize_pose_frame, quat_angular_distance, save_obj)
from .kernels import (FeatureMap, generative_loss, icpe_margin, self_attention,
                      triplet_loss)
from .noise import cellular, hash64, perlin, white
from .raster import (CameraIntrinsics, ModalityStack, fit_intrinsics,
                     render_dataset, render_view)
from .viewsphere import (Pose, ViewSphereConfig, apply_symmetry, build_pose_set,
                         expand_inplane, filter_hemisphere, icosphere_vertices,
                         linemod_config, look_at_quaternion, tless_config)
