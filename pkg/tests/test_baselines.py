import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

import oracles
from entroedge.baselines import (
    SOBEL_X,
    SOBEL_Y,
    Kernel,
    convolve,
    log_edges,
    log_kernel,
    sobel_edges,
    sobel_magnitude,
    zero_crossings,
)


def step_image(n=16):
    img = np.zeros((n, n), np.uint8)
    img[:, n // 2:] = 255
    return img


def square_image(n=40, lo=20, hi=200):
    img = np.full((n, n), lo, np.uint8)
    img[12:28, 12:28] = hi
    return img


def naive_zero_crossings(r):
    tol = 1e-9 * np.abs(r).max()
    r = np.where(np.abs(r) <= tol, 0.0, r)
    m, n = r.shape
    out = np.zeros((m, n), np.uint8)
    for x in range(m):
        for y in range(n):
            for dx, dy in ((1, 0), (0, 1)):
                if x + dx < m and y + dy < n:
                    a, b = r[x, y], r[x + dx, y + dy]
                    if a * b < 0:
                        if abs(a) <= abs(b) + tol:
                            out[x, y] = 1
                        else:
                            out[x + dx, y + dy] = 1
    return out


class TestKernel:
    def test_even_rejected(self):
        with pytest.raises(ValueError):
            Kernel(np.ones((2, 2)))

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            Kernel(np.ones((3, 5)))

    @pytest.mark.parametrize("sigma", [0.5, 1.0, 2.0, 3.3])
    def test_log_kernel(self, sigma):
        k = log_kernel(sigma)
        assert k.size == 2 * int(np.ceil(3 * sigma)) + 1
        assert abs(k.weights.sum()) <= 1e-9
        np.testing.assert_allclose(k.weights, k.weights.T)
        assert k.weights[k.size // 2, k.size // 2] < 0


class TestConvolve:
    def test_identity(self, rng):
        img = rng.integers(0, 256, (7, 9), dtype=np.uint8)
        ident = np.zeros((3, 3))
        ident[1, 1] = 1
        np.testing.assert_array_equal(convolve(img, ident), img)

    def test_zero_sum_on_constant(self):
        img = np.full((15, 15), 77, np.uint8)
        assert np.all(convolve(img, SOBEL_X) == 0)
        assert np.allclose(convolve(img, log_kernel(2.0)), 0, atol=1e-9)

    def test_sobel_x_center_by_hand(self):
        img = np.arange(1, 10, dtype=np.uint8).reshape(3, 3)
        # flipped kernel [[1,0,-1],[2,0,-2],[1,0,-1]] against the window: (1-3) + 2(4-6) + (7-9)
        assert convolve(img, SOBEL_X)[1, 1] == -8

    def test_kernel_too_large(self):
        with pytest.raises(ValueError):
            convolve(np.zeros((4, 4)), log_kernel(1.0))

    @settings(max_examples=25, deadline=None)
    @given(arrays(np.uint8, st.tuples(st.integers(5, 8), st.integers(5, 8))), st.sampled_from([1, 3, 5]), st.data())
    def test_matches_direct_sum(self, img, size, data):
        w = data.draw(arrays(np.float64, (size, size), elements=st.floats(-3, 3)))
        np.testing.assert_allclose(convolve(img, w), oracles.convolve(img, w), atol=1e-9)

    def test_linearity(self, rng):
        a = rng.integers(0, 256, (20, 20)).astype(float)
        b = rng.integers(0, 256, (20, 20)).astype(float)
        k = log_kernel(1.5)
        lhs = convolve(2.5 * a - 0.7 * b, k)
        rhs = 2.5 * convolve(a, k) - 0.7 * convolve(b, k)
        assert np.abs(lhs - rhs).max() <= 1e-6


class TestSobel:
    def test_constant(self):
        assert not sobel_edges(np.full((10, 10), 9, np.uint8)).any()

    def test_step(self):
        img = step_image()
        edges = sobel_edges(img)
        assert edges.any()
        assert set(np.flatnonzero(edges.any(axis=0))) <= {7, 8}
        gx = oracles.convolve(img, SOBEL_X.weights)
        gy = oracles.convolve(img, SOBEL_Y.weights)
        mag = np.hypot(gx, gy)
        expected = (mag > 4.0 * mag.mean()).astype(np.uint8)
        expected[[0, -1], :] = 0
        expected[:, [0, -1]] = 0
        np.testing.assert_array_equal(edges, expected)

    def test_intensity_doubling(self, rng):
        img = rng.integers(0, 128, (24, 24), dtype=np.uint8)
        np.testing.assert_array_equal(sobel_edges(img), sobel_edges(img * 2))

    def test_transpose_invariance(self, rng):
        img = rng.integers(0, 256, (11, 17), dtype=np.uint8)
        np.testing.assert_allclose(sobel_magnitude(img.T), sobel_magnitude(img).T)

    def test_border_zero(self, rng):
        e = sobel_edges(rng.integers(0, 256, (12, 12), dtype=np.uint8), scale=0.1)
        assert not (e[0].any() or e[-1].any() or e[:, 0].any() or e[:, -1].any())

    def test_bad_scale(self):
        with pytest.raises(ValueError):
            sobel_edges(step_image(), scale=0)


class TestLoG:
    def test_constant(self):
        assert not log_edges(np.full((30, 30), 140, np.uint8)).any()

    def test_step_line(self):
        img = step_image(32)
        edges = log_edges(img)
        cols = set(np.flatnonzero(edges.any(axis=0)))
        assert cols and cols <= {15, 16}
        assert edges[1:-1, 15:17].any(axis=1).all()

    def test_square_contour(self):
        img = square_image()
        edges = log_edges(img)
        response = oracles.convolve(img, log_kernel(2.0).weights)
        expected = naive_zero_crossings(response)
        expected[[0, -1], :] = 0
        expected[:, [0, -1]] = 0
        np.testing.assert_array_equal(edges, expected)
        # every row and column crossing the square meets the contour on both sides
        for i in range(13, 27):
            assert edges[i, 9:15].any() and edges[i, 25:31].any()
            assert edges[9:15, i].any() and edges[25:31, i].any()
        assert not edges[16:24, 16:24].any()

    def test_zc_thresh_suppresses(self):
        img = square_image(hi=30)
        assert log_edges(img).any()
        assert not log_edges(img, zc_thresh=1e6).any()

    def test_zero_crossings_direct(self):
        r = np.array([[1.0, -2.0, -1.0], [3.0, 4.0, 5.0]])
        np.testing.assert_array_equal(zero_crossings(r), naive_zero_crossings(r))

    def test_image_smaller_than_kernel(self):
        with pytest.raises(ValueError):
            log_edges(np.zeros((10, 10), np.uint8), sigma=2.0)
