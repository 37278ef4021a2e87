"""
runner.py
====================================
Runs claims by id, alone or as a whole level, and writes the tab-separated summary.
"""

import logging
import os
from threading import Lock, Thread

import pandas as pd
from tqdm import tqdm

from ..constants import CLAIM_MODULES, DEFAULT_SEED, LEVELS
from ..exceptions import InvalidParameterError
from .claim import STATUSES, ClaimCheck

__all__ = [
    "SUMMARY_COLUMNS",
    "run_check",
    "run_all",
    "summary_table",
    "write_summary",
    "worst_status",
]

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ["claim", "params", "status", "seconds", "evidence"]


def run_check(claim_id, params=None, budget=None, out=None, show_progress=False):
    """Run one claim.

    :param claim_id: a key of CLAIM_MODULES, e.g. "lemma2"
    :type claim_id: str
    :param params: claim parameters such as {"k": [3, 4]}
    :type params: Dict, optional
    :param budget: seconds per instance, overriding params["budget"]
    :type budget: float, optional
    :param out: evidence root directory
    :type out: str, optional
    :raises ValueError: on an unknown claim id
    :raises InvalidParameterError: on unknown parameters
    :rtype: ClaimCheck

    **Example**

    .. code-block:: python

        from cwkit.verify import run_check

        check = run_check("lemma2", {"k": [3]})
        print(check.status)
    """
    from .. import get_claim

    params = dict(params or {})
    if budget is not None:
        params["budget"] = budget
    claim = get_claim(claim_id, **params)
    check = claim.run(out=out, show_progress=show_progress)
    logger.info(f"{claim_id}: {check.status} in {check.seconds:.1f}s")
    return check


def run_all(level, out=None, seed=DEFAULT_SEED, show_progress=False, workers=4):
    """Run every claim of a level, several claims at a time.

    Each claim writes into its own evidence directory; checks are returned in the order of
    CLAIM_MODULES whatever order they finish in. With `out` set, ``summary.tsv`` is written
    there as well.

    :param level: "smoke", "desk" or "stretch"
    :type level: str
    :param out: evidence root directory
    :type out: str, optional
    :param seed: seed for the claims that sample instances
    :type seed: int, optional
    :param show_progress: show a progress bar over the claims
    :type show_progress: bool, optional
    :param workers: number of claims running at the same time
    :type workers: int, optional
    :raises InvalidParameterError: on an unknown level
    :rtype: List[ClaimCheck]
    """
    if level not in LEVELS:
        raise InvalidParameterError(
            f"level must be one of {sorted(LEVELS)}, got {level!r}"
        )
    if workers < 1:
        raise InvalidParameterError(f"workers must be at least 1, got {workers}")

    pending = [
        (claim_id, dict(LEVELS[level][claim_id], seed=seed))
        for claim_id in CLAIM_MODULES
        if claim_id in LEVELS[level]
    ]
    checks = {}
    lock = Lock()
    pbar = tqdm(total=len(pending), disable=not show_progress)

    def work():
        while True:
            with lock:
                if not pending:
                    return
                claim_id, params = pending.pop(0)
            try:
                check = run_check(claim_id, params, out=out)
            except Exception:
                logger.exception(f"{claim_id} crashed, reported as unknown")
                shown = {key: value for key, value in params.items() if key != "seed"}
                check = ClaimCheck(claim_id, shown, "unknown")
            with lock:
                checks[claim_id] = check
                pbar.set_description(f"{level} {claim_id}")
                pbar.update(1)

    threads = [Thread(target=work) for _ in range(min(workers, len(pending)))]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()
    pbar.close()

    ordered = [checks[claim_id] for claim_id in CLAIM_MODULES if claim_id in checks]
    if out is not None:
        write_summary(ordered, os.path.join(out, "summary.tsv"))
    return ordered


def summary_table(checks):
    """One row per claim: claim, params, status, seconds, evidence.

    :param checks: the claim checks
    :type checks: Iterable[ClaimCheck]
    :rtype: pandas.DataFrame
    """
    rows = [
        {
            "claim": check.claim,
            "params": check.params_text(),
            "status": check.status,
            "seconds": round(check.seconds, 3),
            "evidence": check.evidence or "",
        }
        for check in checks
    ]
    return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)


def write_summary(checks, path):
    """Write :func:`summary_table` as tab-separated text with a header line."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    summary_table(checks).to_csv(path, sep="\t", index=False)


def worst_status(checks):
    """Aggregate status of several claims, "verified" only if every claim is."""
    if not checks:
        return "unknown"
    return min((check.status for check in checks), key=STATUSES.index)
