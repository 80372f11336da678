##
# \file vocabulary.py
# \brief      Dense token id space and the word-level tokenizer shared by all
#             language models, watermarks and attacks.
#
# Ids are dense and bijective with the token strings. Id 0 is reserved for
# the sentinel token which pads contexts reaching before the start of a text
# and, under a frozen vocabulary, represents out-of-vocabulary words.
#

import unicodedata

import wmbench.base.exceptions as exceptions
import wmbench.base.token_sequence as ts
from wmbench.definitions import SENTINEL_TOKEN
from wmbench.definitions import SENTINEL_ID

VOCAB_POLICIES = ["build", "frozen"]


def _is_punctuation(character):
    return unicodedata.category(character).startswith("P")


##
# Split a text into lowercase word tokens.
#
# Text is lowercased and split on Unicode whitespace. Every leading and
# trailing punctuation character of a word becomes a token of its own while
# inner punctuation (e.g. "don't") stays inside the word. The sentinel string
# is kept verbatim.
#
# \param      text  text, string
#
# \return     list of token strings
#
def split_text(text):
    tokens = []
    for word in text.lower().split():
        if word == SENTINEL_TOKEN:
            tokens.append(word)
            continue

        start = 0
        while start < len(word) and _is_punctuation(word[start]):
            tokens.append(word[start])
            start += 1

        end = len(word)
        trailing = []
        while end > start and _is_punctuation(word[end - 1]):
            trailing.insert(0, word[end - 1])
            end -= 1

        if end > start:
            tokens.append(word[start:end])
        tokens.extend(trailing)

    return tokens


class Vocabulary(object):

    def __init__(self, tokens=None):
        self._tokens = []
        self._index = {}
        self.add_token(SENTINEL_TOKEN)

        if tokens is not None:
            for token in tokens:
                self.add_token(token)

    ##
    # Adds a token if not yet contained.
    #
    # \param      self   The object
    # \param      token  The token, string
    #
    # \return     id of the token, int
    #
    def add_token(self, token):
        if token not in self._index:
            self._index[token] = len(self._tokens)
            self._tokens.append(token)
        return self._index[token]

    def get_tokens(self):
        return list(self._tokens)

    def get_size(self):
        return len(self._tokens)

    def __len__(self):
        return self.get_size()

    def __contains__(self, token):
        return token in self._index

    def get_id(self, token):
        return self._index.get(token, SENTINEL_ID)

    def get_token(self, token_id):
        if token_id < 0 or token_id >= len(self._tokens):
            raise exceptions.InvalidParameter(
                "token id %d outside vocabulary of size %d" % (
                    token_id, len(self._tokens)))
        return self._tokens[token_id]

    ##
    # Tokenize a text into a token sequence.
    #
    # \param      self          The object
    # \param      text          text, string
    # \param      vocab_policy  'build' adds unseen words to the vocabulary,
    #                           'frozen' maps them to the sentinel id
    # \param      role          role tag of resulting sequence
    #
    # \return     TokenSequence
    #
    def tokenize(self, text, vocab_policy="build", role="full"):
        if vocab_policy not in VOCAB_POLICIES:
            raise exceptions.InvalidParameter(
                "vocabulary policy must be one of %s" % VOCAB_POLICIES)

        words = split_text(text)
        if vocab_policy == "build":
            ids = [self.add_token(w) for w in words]
        else:
            ids = [self.get_id(w) for w in words]

        return ts.TokenSequence(ids, role=role)

    def decode(self, sequence):
        return " ".join([self.get_token(int(i)) for i in sequence.get_ids()])
