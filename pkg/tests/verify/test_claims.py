import os

import numpy as np
import pandas as pd
import pytest

import cwkit
from cwkit import InvalidParameterError, get_all_claim_ids, get_claim
from cwkit.verify import STATUSES


def test_every_claim_id_loads():
    for claim_id in get_all_claim_ids():
        claim = get_claim(claim_id)
        assert claim.claim_id == claim_id, f"{claim_id} loaded as {claim.claim_id}"


def test_unknown_claim_id_lists_the_valid_ones():
    with pytest.raises(ValueError) as error:
        get_claim("lemma9")
    assert "lemma2" in str(error.value)


def test_unknown_parameter():
    with pytest.raises(InvalidParameterError):
        get_claim("lemma2", q=3)


def test_lemma2_verifies_and_writes_evidence(tmp_path):
    check = get_claim("lemma2", k=[3], samples=2).run(out=str(tmp_path))
    assert check.status == "verified", f"notes: {check.notes}"
    names = [item.name for item in check.instances]
    assert names[:7] == [f"Z_3-v_{t}" for t in range(1, 8)]
    assert sum(name.endswith(".reflected") for name in names) == 2
    assert os.path.isfile(os.path.join(str(tmp_path), "lemma2", "Z_3-v_1.emb.json"))


def test_sampling_depends_on_the_seed_only():
    def sampled(seed):
        check = get_claim("lemma2", k=[4], samples=3, seed=seed).run()
        names = [item.name for item in check.instances]
        return [name for name in names if name.endswith(".reflected")]

    assert sampled(7) == sampled(7)


def test_running_a_claim_leaves_the_global_seed_alone():
    np.random.seed(123)
    expected = np.random.random()
    np.random.seed(123)
    get_claim("lemma2", k=[4], samples=3, seed=7).run()
    assert np.random.random() == expected, "the claim reseeded the global generator"


def test_iso_pairs():
    check = get_claim("iso-pairs", k=[3]).run()
    assert check.status == "verified", f"notes: {check.notes}"


@pytest.mark.parametrize("k", [2, 3])
def test_deleting_w3_isolates_w4(k):
    check = get_claim("prop5.disjoint", k=[k]).run()
    assert check.status == "verified", f"notes: {check.notes}"
    names = [item.name for item in check.instances]
    assert names == (["S_2-w_3"] if k == 2 else [f"S+_{k}a-w_3", f"S+_{k}c-w_3"])


@pytest.mark.slow
def test_m2plus_variants_table(tmp_path):
    check = get_claim("m2plus-variants").run(out=str(tmp_path))
    assert check.status == "verified", f"notes: {check.notes}"
    path = os.path.join(str(tmp_path), "m2plus-variants", "variants.tsv")
    table = pd.read_csv(path, sep="\t")
    assert len(table) == 25
    assert table.loc[(table["u"] == 5) & (table["v"] == 10), "oracle"].all()


def test_out_of_scale_is_not_a_failure():
    check = get_claim("thm2.1", k=[4]).run()
    assert check.status == "out-of-desk-scale"
    assert STATUSES.index(check.status) > STATUSES.index("unknown")


@pytest.mark.slow
@pytest.mark.parametrize("claim_id", ["thm3", "prop6.1"])
def test_m2_claims(claim_id):
    check = cwkit.get_claim(claim_id, budget=600).run()
    assert check.status == "verified", f"{claim_id}: {check.notes}"
