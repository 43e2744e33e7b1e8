import logging

from .configuration import PointConfiguration


def sample_poisson(intensity, stream):
    """ A Poisson process with the given finite intensity: N ~ Poisson(total mass), then N independent points of
    the normalized law. A nonpositive mass gives the empty configuration. """
    if intensity.total_mass <= 0:
        return PointConfiguration()
    count = int(stream.generator.poisson(intensity.total_mass))
    if count == 0:
        return PointConfiguration()
    points = intensity.sampler(stream, count)
    logging.debug(f'Poisson sample with mass {intensity.total_mass:.4g}: {count} points')
    return PointConfiguration(points)
