"""scikit-learn style wrappers.

``PACEncoder`` is a transformer from message rows to codeword rows and
``PACDecoder`` predicts message rows from channel LLR rows, so both can sit
in pipelines and be cloned or grid-searched over ``list_size``/``variant``.
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import ParameterError, check_bit_matrix, check_list_size, check_llr_matrix
from .code import DEFAULT_CONV, CodeConfig, RateProfile, conv_decode, pac_encode_rows, polar_transform_rows, rm_profile
from .decoder import TreeDecoder, parse_variant


def build_config(n, k, profile="rm", conv=DEFAULT_CONV):
    """CodeConfig from estimator-style parameters.

    ``profile`` is ``'rm'``, a :class:`RateProfile`, or a sequence of
    information indices.
    """
    if isinstance(profile, str):
        if profile != "rm":
            raise ParameterError(f"unknown profile {profile!r}; pass 'rm' or the information indices")
        profile = rm_profile(n, k)
    elif not isinstance(profile, RateProfile):
        profile = RateProfile(n, tuple(profile))
    if profile.n != n or profile.k != k:
        raise ParameterError(f"profile is ({profile.n}, {profile.k}) but the code is ({n}, {k})")
    return CodeConfig.from_profile(profile, tuple(conv))


class PACEncoder(TransformerMixin, BaseEstimator):
    """Encode rows of ``K`` message bits into rows of ``N`` code bits."""

    def __init__(self, n=128, k=64, profile="rm", conv=DEFAULT_CONV):
        self.n = n
        self.k = k
        self.profile = profile
        self.conv = conv

    def fit(self, X=None, y=None):
        self.config_ = build_config(self.n, self.k, self.profile, self.conv)
        self.info_set_ = np.array(self.config_.info_set)
        self.n_features_in_ = self.k
        return self

    def transform(self, X):
        check_is_fitted(self, "config_")
        D = check_bit_matrix(X, self.config_.k, name="X")
        return pac_encode_rows(D, self.config_)

    def inverse_transform(self, X):
        """Recover messages from noiseless codeword rows."""
        check_is_fitted(self, "config_")
        C = check_bit_matrix(X, self.config_.n, name="X")
        U = polar_transform_rows(C)
        V = np.array([conv_decode(u, self.config_.conv) for u in U], dtype=np.uint8).reshape(len(U), -1)
        return V[:, self.info_set_]


class PACDecoder(BaseEstimator):
    """List / fast list decoder.

    Parameters
    ----------
    n, k : int
        Code length and information length.
    profile : 'rm' or sequence of int
        Information set.
    conv : sequence of int
        Convolution impulse response ``c``.
    list_size : int
        Number of surviving paths ``L``.
    variant : {'list', 'fast3', 'fast4'}
        ``fast3`` decodes Rate-0, Rate-1 and Rev nodes directly and matches
        ``list`` exactly; ``fast4`` also decodes SPC nodes directly.
    """

    def __init__(self, n=128, k=64, profile="rm", conv=DEFAULT_CONV, list_size=4, variant="fast3"):
        self.n = n
        self.k = k
        self.profile = profile
        self.conv = conv
        self.list_size = list_size
        self.variant = variant

    def fit(self, X=None, y=None):
        self.config_ = build_config(self.n, self.k, self.profile, self.conv)
        kinds = parse_variant(self.variant).kinds
        self.decoder_ = TreeDecoder(self.config_, check_list_size(self.list_size), kinds)
        self.plan_ = self.decoder_.plan
        self.n_features_in_ = self.n
        return self

    def decode(self, llr, keep_list=False):
        """Decode one frame and return the full :class:`DecodeResult`."""
        check_is_fitted(self, "decoder_")
        return self.decoder_.decode(llr, keep_list)

    def predict(self, X):
        check_is_fitted(self, "decoder_")
        llr = check_llr_matrix(X, self.config_.n, name="X")
        out = np.empty((llr.shape[0], self.config_.k), dtype=np.uint8)
        for i, row in enumerate(llr):
            out[i] = self.decoder_.decode(row).bits
        return out

    def path_metrics(self, X):
        """Winner path metric of each row."""
        check_is_fitted(self, "decoder_")
        llr = check_llr_matrix(X, self.config_.n, name="X")
        return np.array([self.decoder_.decode(row).pm for row in llr])

    def score(self, X, y):
        """Fraction of frames decoded without error (``1 - FER``)."""
        D = check_bit_matrix(y, self.k, name="y")
        return float(np.mean(np.all(self.predict(X) == D, axis=1)))
