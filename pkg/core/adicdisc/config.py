# -*- coding: utf-8 -*-
import logging
import os

from traitlets import Integer, TraitError, default, validate
from traitlets.config import SingletonConfigurable

from adicdisc.errors import NotAPrime
from adicdisc.utils import check_prime

logger = logging.getLogger(__name__)


PRIME_ENV_VAR = "ADIC_DEFAULT_PRIME"


class AdicConfig(SingletonConfigurable):
    """Library-wide defaults; the CLI application writes into this singleton."""

    default_prime = Integer(
        help=f"Prime used when a request does not name one (env: {PRIME_ENV_VAR})."
    ).tag(config=True)

    seed = Integer(0, help="Seed for every randomized harness.").tag(config=True)

    sampling_trials = Integer(
        500, help="Default number of random (g, s) pairs or sample points."
    ).tag(config=True)

    sample_degree = Integer(
        6, help="Maximal degree of random integral polynomials."
    ).tag(config=True)

    sample_max_valuation = Integer(
        6, help="Maximal coefficient valuation of random integral polynomials."
    ).tag(config=True)

    openness_search_depth = Integer(
        16, help="Largest n tried when certifying <p, w>^n inside an ideal of Z_p[[w]]."
    ).tag(config=True)

    residue_degree = Integer(
        1, help="k such that F_{p^k} stands in for the residue field."
    ).tag(config=True)

    max_residue_degree = Integer(
        8, help="Largest k accepted for F_{p^k}."
    ).tag(config=True)

    @default("default_prime")
    def _default_prime_from_env(self) -> int:
        raw = os.environ.get(PRIME_ENV_VAR)
        if raw is None:
            return 3
        try:
            return check_prime(int(raw))
        except (ValueError, NotAPrime):
            logger.warning("ignoring %s=%r: not a prime", PRIME_ENV_VAR, raw)
            return 3

    @validate("default_prime")
    def _validate_prime(self, proposal):
        try:
            return check_prime(proposal["value"])
        except NotAPrime as e:
            raise TraitError(str(e))

    @validate("sampling_trials", "openness_search_depth")
    def _validate_positive(self, proposal):
        if proposal["value"] < 1:
            raise TraitError(f"{proposal['trait'].name} must be positive")
        return proposal["value"]

    @validate("residue_degree")
    def _validate_residue_degree(self, proposal):
        k = proposal["value"]
        if not 1 <= k <= self.max_residue_degree:
            raise TraitError(f"residue degree must lie in [1, {self.max_residue_degree}]")
        return k


def get_config() -> AdicConfig:
    return AdicConfig.instance()
