##
# \file splitmix64.py
# \brief      SplitMix64 generator used to derive vocabulary partitions
#             bit-exactly on every platform.
#
# Reference outputs for seed 0: 0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4,
# 0x06C45D188009454F.
#

import numpy as np

MASK_64 = 0xFFFFFFFFFFFFFFFF
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MULTIPLIER_1 = 0xBF58476D1CE4E5B9
MIX_MULTIPLIER_2 = 0x94D049BB133111EB


##
# Finalizer of SplitMix64 applied to a 64-bit integer
#
def mix64(z):
    z = int(z) & MASK_64
    z = ((z ^ (z >> 30)) * MIX_MULTIPLIER_1) & MASK_64
    z = ((z ^ (z >> 27)) * MIX_MULTIPLIER_2) & MASK_64
    return z ^ (z >> 31)


def mix64_array(z):
    z = np.asarray(z, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX_MULTIPLIER_1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX_MULTIPLIER_2)
    return z ^ (z >> np.uint64(31))


class SplitMix64(object):

    def __init__(self, seed):
        self._state = int(seed) & MASK_64

    def next(self):
        self._state = (self._state + GOLDEN_GAMMA) & MASK_64
        return mix64(self._state)

    ##
    # Next n outputs at once; equivalent to n calls of next()
    #
    # \param      self  The object
    # \param      n     number of outputs
    #
    # \return     numpy array of dtype uint64
    #
    def next_array(self, n):
        steps = np.arange(1, n + 1, dtype=np.uint64)
        with np.errstate(over="ignore"):
            states = np.uint64(self._state) + \
                steps * np.uint64(GOLDEN_GAMMA)
        self._state = (self._state + n * GOLDEN_GAMMA) & MASK_64
        return mix64_array(states)
