##
# \file sampler.py
# \brief      Seeded random streams, inverse-CDF sampling, the autoregressive
#             generation loop and perplexity scoring.
#

import numpy as np
from scipy.special import softmax, log_softmax

import wmbench.base.exceptions as exceptions
import wmbench.base.token_sequence as ts
from wmbench.definitions import DEFAULT_TEMPERATURE
from wmbench.definitions import PROMPT_LENGTH

DISTRIBUTION_TOLERANCE = 1e-6


##
# Create an independent random stream derived from the run seed.
#
# \param      seed    run seed, nonnegative int
# \param      stream  additional stream identifiers such as stream id and
#                     text index, nonnegative ints
#
# \return     numpy Generator
#
def create_rng(seed, *stream):
    if seed is None:
        raise exceptions.InvalidParameter("a seed is required")
    return np.random.default_rng([int(seed)] + [int(s) for s in stream])


##
# Draw a token id by inverse-CDF sampling over ids in ascending order.
#
# \param      probs  probability vector
# \param      rng    numpy Generator
#
# \return     token id, int
#
def sample(probs, rng):
    probs = np.asarray(probs, dtype=np.float64)
    if probs.ndim != 1 or probs.size == 0:
        raise exceptions.InvalidDistribution("expected a non-empty vector")
    if np.any(probs < 0):
        raise exceptions.InvalidDistribution("negative probability")
    total = probs.sum()
    if abs(total - 1.) > DISTRIBUTION_TOLERANCE:
        raise exceptions.InvalidDistribution(
            "probabilities sum to %.9f" % total)

    cdf = np.cumsum(probs)
    token_id = int(np.searchsorted(cdf, rng.random(), side="right"))

    # rounding may leave the draw above the last cdf value
    if token_id >= probs.size:
        token_id = int(np.flatnonzero(probs)[-1])

    return token_id


##
# Autoregressive generation of new tokens following a prompt.
#
# The step hook transforms the logits of a step into the probability vector
# to sample from. It is called as step_hook(logits, context_ids, step) with
# the context comprising prompt and tokens generated so far and step the
# index of the token to be generated. The observer is called as
# observer(token_id, step) after every draw.
#
# \param      model        LanguageModel
# \param      prompt       TokenSequence
# \param      max_tokens   number of tokens to generate, int >= 1
# \param      rng          numpy Generator
# \param      step_hook    optional step hook
# \param      temperature  sampling temperature, real > 0
# \param      observer     optional observer
#
# \return     generated tokens as TokenSequence with role 'generated'
#
def generate(model, prompt, max_tokens, rng,
             step_hook=None,
             temperature=DEFAULT_TEMPERATURE,
             observer=None,
             ):
    if max_tokens < 1:
        raise exceptions.InvalidParameter("max_tokens must be at least 1")
    if temperature <= 0:
        raise exceptions.InvalidParameter("temperature must be positive")

    context = prompt.get_ids().tolist()
    generated = []

    for step in range(max_tokens):
        logits = model.logits(context)
        if temperature != 1.:
            logits = logits / temperature

        if step_hook is None:
            probs = softmax(logits)
        else:
            probs = step_hook(logits, context, step)

        token_id = sample(probs, rng)
        if observer is not None:
            observer(token_id, step)

        context.append(token_id)
        generated.append(token_id)

    return ts.TokenSequence(generated, role="generated")


##
# Perplexity of a text under a (scoring) model.
#
# \param      model   LanguageModel
# \param      text    TokenSequence, at least one token
# \param      prompt  optional TokenSequence conditioning the first tokens
#
# \return     exp of the mean negative log-likelihood, real > 0
#
def perplexity(model, text, prompt=None):
    if len(text) == 0:
        raise exceptions.EmptyText()

    if prompt is None:
        context = []
    else:
        context = prompt.get_ids().tolist()

    log_likelihood = 0.
    for token_id in text.get_ids().tolist():
        log_probs = log_softmax(model.logits(context))
        log_likelihood += log_probs[token_id]
        context.append(token_id)

    return float(np.exp(-log_likelihood / len(text)))


##
# Prompt from the first tokens of a text.
#
# \return     TokenSequence with role 'prompt', possibly empty
#
def extract_prompt(text, vocabulary, prompt_length=PROMPT_LENGTH):
    if prompt_length < 1:
        raise exceptions.InvalidParameter("prompt length must be at least 1")
    sequence = vocabulary.tokenize(text, vocab_policy="frozen")
    return sequence.head(prompt_length, role="prompt")


def extract_prompts(texts, vocabulary, prompt_length=PROMPT_LENGTH):
    prompts = [extract_prompt(t, vocabulary, prompt_length) for t in texts]
    return [p for p in prompts if len(p) > 0]
