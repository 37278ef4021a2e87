import time
import unittest.mock as mock

from tqdm import tqdm

import cwkit

MAX_FAMILY_TEST_TIME = 5


def test_all_families():
    # every registered family builds with its defaults, lazily and exactly once

    pbar = tqdm(cwkit.get_all_family_names())

    for family_name in pbar:
        family_start_time = time.time()
        pbar.set_description(f"Testing {family_name}...")
        family = cwkit.get_family(family_name)

        assert not family.has_been_built, f"{family_name} was built before first access"

        with mock.patch.object(
            family.__class__, "_build", wraps=family._build
        ) as mock_build:
            graph = family.graph
            again = family.graph
            _ = family.distinguished

            mock_build.assert_called_once()

        assert graph is again, f"{family_name} rebuilt its graph"
        assert graph.n > 0, f"{family_name} built an empty graph"
        assert graph.is_fully_named(), f"{family_name} has unnamed vertices"
        if family.distinguished is not None:
            assert 1 <= family.distinguished <= graph.n, (
                f"{family_name} distinguishes vertex {family.distinguished} outside "
                f"1..{graph.n}"
            )

        assert time.time() - family_start_time < MAX_FAMILY_TEST_TIME, (
            f"{family_name} took too long to build, expected less than "
            f"{MAX_FAMILY_TEST_TIME} seconds but took "
            f"{time.time() - family_start_time:.2f}"
        )


def test_unknown_family_lists_the_valid_names():
    try:
        cwkit.get_family("K_5")
    except ValueError as e:
        assert "path-power" in str(e), f"error does not list the families: {e}"
    else:
        raise AssertionError("an unknown family name was accepted")


def test_presets_fix_the_sign():
    plus = cwkit.get_family("M2+").graph
    minus = cwkit.get_family("M2-").graph
    assert plus.num_edges == minus.num_edges + 1
