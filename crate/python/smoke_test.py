"""Smoke test for the htarea_py extension.

Build and install it first:

    maturin build --release -m crates/py/Cargo.toml -o dist
    pip install dist/htarea_py-*.whl
"""

import math

import htarea_py as ht


def close(a, b, tol):
    assert abs(a - b) <= tol, f"{a} vs {b}"


def main():
    close(ht.li2(1.0), math.pi**2 / 6, 1e-14)
    close(ht.li2(-1.0), -math.pi**2 / 12, 1e-14)

    close(ht.triangle_volume(1.0), 3 * math.pi / 8, 1e-15)
    area = ht.triangle_area(3.0)
    close(area.value, ht.triangle_volume(3.0), 1e-6)
    close(float(area), area.value, 0.0)

    close(ht.hyperbolic_quad_volume(1.0), 1.48512, 5e-5)
    coords = ht.QuadCoords(1.0, 1.0, 1.0, 1.0)
    close(coords.area().value, ht.hyperbolic_quad_volume(1.0), 1e-6)
    close(coords.area(general=True).value, 2 * coords.area().value, 1e-6)

    coords = ht.QuadCoords(2.0, 0.5, 3.0, 0.4)
    back = ht.QuadCoords.from_normalized(*coords.normalized())
    for a, b in zip((coords.t, coords.tp, coords.d, coords.dp), (back.t, back.tp, back.d, back.dp)):
        close(a, b, 1e-10 * a)
    flipped = coords.flip().flip()
    close(flipped.d, coords.d, 1e-10 * coords.d)

    square = [(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)]
    close(ht.dual_ball_area(square, (0.0, 0.0)), 2.0, 1e-12)
    close(ht.dual_ball_area(square, (0.5, 0.0)), 2 * ht.integrand_q0(0.5, 0.0), 1e-12)
    triangle = [(0.0, 0.0), (2.0, 0.0), (0.0, 2.0)]
    close(ht.dual_ball_area(triangle, (0.5, 0.5)), ht.integrand_t0(0.5, 0.5), 1e-10)
    for v in ht.unit_ball(triangle, (0.5, 0.5)):
        close(ht.finsler_norm(triangle, (0.5, 0.5), v), 1.0, 1e-10)
    close(ht.hilbert_distance(square, (0.0, 0.0), (0.0, 0.0)), 0.0, 0.0)

    inner = [(1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
    close(ht.inscribed_area(inner, triangle, [0, 1, 2]).value, 3 * math.pi / 8, 1e-6)

    tuple_ = [
        [[1.0, 1.0], [0.0, 1.0], [1.0, 1.0]],
        [[0.0, 1.0], [1.0, 1.0], [1.0, 1.0]],
        [[-1.0, -1.0], [0.0, -1.0], [1.0, 1.0]],
        [[0.0, -1.0], [-1.0, -1.0], [1.0, 1.0]],
    ]
    close(ht.flag_tuple_area(tuple_).value, 1.48512, 5e-5)

    close(ht.surface_lower_bound(-1, [1.0, 1.0]), 3 * math.pi / 4, 1e-12)
    close(ht.s03_area_lower_bound(1.0, 1.0).value, 1.48512, 5e-5)
    assert ht.asymptotic_ratio(math.e**4, 1.0) > 0.1

    try:
        ht.triangle_volume(-1.0)
    except ValueError:
        pass
    else:
        raise AssertionError("negative ratio accepted")

    print("htarea_py smoke test passed")


if __name__ == "__main__":
    main()
