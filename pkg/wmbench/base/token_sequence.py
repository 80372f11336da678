##
# \file token_sequence.py
# \brief      Tokenized text, i.e. a list of token ids with a role tag.
#

import numpy as np

import wmbench.base.exceptions as exceptions

ROLES = ["prompt", "generated", "full"]


class TokenSequence(object):

    ##
    # \param      self  The object
    # \param      ids   token ids, iterable of nonnegative integers
    # \param      role  'prompt', 'generated' or 'full'
    #
    def __init__(self, ids, role="full"):
        if role not in ROLES:
            raise exceptions.InvalidParameter(
                "sequence role must be one of %s" % ROLES)

        self._ids = np.array(ids, dtype=np.int64).reshape(-1)
        if self._ids.size > 0 and self._ids.min() < 0:
            raise exceptions.InvalidParameter("token ids must be nonnegative")
        self._role = role

    def get_ids(self):
        return self._ids.copy()

    def get_role(self):
        return self._role

    def __len__(self):
        return self._ids.size

    def __eq__(self, other):
        return isinstance(other, TokenSequence) and \
            np.array_equal(self._ids, other._ids)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "TokenSequence(%s, role=%s)" % (self._ids.tolist(), self._role)

    ##
    # Verify that every id lies within a vocabulary of given size
    #
    # \param      self             The object
    # \param      vocabulary_size  The vocabulary size
    #
    def check_ids(self, vocabulary_size):
        if self._ids.size > 0 and self._ids.max() >= vocabulary_size:
            raise exceptions.InvalidParameter(
                "token id %d outside vocabulary of size %d" % (
                    self._ids.max(), vocabulary_size))

    def concatenate(self, other):
        return TokenSequence(
            np.concatenate([self._ids, other.get_ids()]), role="full")

    def head(self, length, role=None):
        if role is None:
            role = self._role
        return TokenSequence(self._ids[:length], role=role)
