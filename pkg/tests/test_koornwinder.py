"""Koornwinder varieties: symmetry, vanishing, censuses, outputs."""

import pytest

from nhedral.koornwinder import (first_coordinate_overlay, hypocycloid_svg,
                                 points_csv, variety)

CASES = [(2, 4), (3, 3), (3, 5), (4, 2), (4, 4)]


@pytest.mark.parametrize("N,e", CASES)
def test_rotation_and_conjugation_symmetry(N, e):
    v = variety(N, e)
    assert v.check_rotation()
    assert v.check_conjugation()


@pytest.mark.parametrize("N,e", CASES)
def test_exact_vanishing(N, e):
    assert variety(N, e).check_vanishing()


@pytest.mark.parametrize("N,e", CASES)
def test_points_are_distinct(N, e):
    v = variety(N, e)
    assert len({p.z for p in v.points}) == len(v.points)


def test_csv_and_svg_outputs(tmp_path):
    v = variety(3, 3)
    csv = points_csv(v, digits=12)
    assert len([ln for ln in csv.splitlines()
                if ln and not ln.startswith("#")]) >= len(v.points)
    svg = hypocycloid_svg(3, overlay=first_coordinate_overlay(v))
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    # multiplicities in the overlay cover the whole variety
    assert sum(m for _, _, m in first_coordinate_overlay(v)) == len(v.points)
