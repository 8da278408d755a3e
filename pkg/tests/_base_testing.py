"""Base classes shared by the test modules"""
import unittest
import numpy as np


class AlmostArrayEqualMixin(object):
    """Mixin for comparing complex matrices and pandas columns"""

    def assertAlmostArrayEqual(self, actual, desired, rtol=1e-07, atol=0,
                               msg=None, **kwargs):
        """Fail if :func:`numpy.testing.assert_allclose` fails

        `actual` and `desired` may be complex arrays, lists or pandas
        objects. Further keywords (e.g. ``equal_nan``) are passed to
        :func:`numpy.testing.assert_allclose`"""
        try:
            np.testing.assert_allclose(actual, desired, rtol=rtol, atol=atol,
                                       err_msg=msg or '', **kwargs)
        except (Exception, AssertionError) as e:
            self.fail(e)


class RandomTestCase(unittest.TestCase, AlmostArrayEqualMixin):
    """A test case with a seeded random number generator

    The number of random draws and the seed are set by the ``--nrandom`` and
    ``--seed`` options of pytest"""

    nrandom = 100

    seed = 1234

    def setUp(self):
        self.rng = np.random.default_rng(self.seed)

    def random_hermitian(self, n):
        a = self.rng.normal(size=(n, n)) + 1j * self.rng.normal(size=(n, n))
        return 0.5 * (a + a.conj().T)

    def random_state(self, n):
        psi = self.rng.normal(size=n) + 1j * self.rng.normal(size=n)
        return psi / np.linalg.norm(psi)
