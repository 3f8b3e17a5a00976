"""Shared random generators for the test suite.

All generators take an explicit numpy Generator so every test that uses
them is seeded and reproducible.
"""

import math

import numpy as np

from pfwigner import (
    FourVector,
    FrameVelocity,
    PhotonKinematics,
    boost_from_velocity,
    compose,
    rotation_about,
)


def random_direction(rng):
    d = rng.normal(size=3)
    return d / np.linalg.norm(d)


def random_null(rng, e_min=0.2, e_max=5.0):
    e = rng.uniform(e_min, e_max)
    return FourVector(e, *(e * random_direction(rng)))


def random_frame(rng, v_max=0.99):
    return FrameVelocity.from_velocity(random_direction(rng) * rng.uniform(0.0, v_max))


def random_pair(rng, v_max=0.99):
    return PhotonKinematics(random_null(rng), random_frame(rng, v_max))


def random_rotation(rng):
    return rotation_about(random_direction(rng), rng.uniform(-math.pi, math.pi))


def random_boost(rng, v_max=0.99):
    return boost_from_velocity(random_direction(rng) * rng.uniform(0.0, v_max))


def random_transform(rng, v_max=0.99):
    """A generic proper orthochronous element: boost times rotation."""
    return compose(random_boost(rng, v_max), random_rotation(rng))


def photon_direction(k):
    return k.spatial / np.linalg.norm(k.spatial)


def random_aligned_transform(rng, k):
    """Rotation about any axis, boost along the photon, or their product.

    These are the classes under which the two little-group constructions
    share a convention, so their phases are directly comparable.
    """
    kh = photon_direction(k)
    rot = random_rotation(rng)
    kboost = boost_from_velocity(kh * rng.uniform(-0.99, 0.99))
    return (rot, kboost, compose(rot, kboost))[int(rng.integers(3))]
