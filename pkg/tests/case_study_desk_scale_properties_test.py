##
# \file case_study_desk_scale_properties_test.py
#  \brief  Statistical properties of the watermarks, detectors and attacks
#          on a model trained on the small English test corpus
#
# The populations are generated once per module with fixed seeds and shared
# between the tests.
#


import os
import unittest
import numpy as np

import wmbench.attack.scrubber as scr
import wmbench.attack.steal as steal
import wmbench.base.data_reader as dr
import wmbench.base.token_sequence as ts
import wmbench.detection.green_token_detector as gtd
import wmbench.detection.roc_analysis as roc
import wmbench.evaluation.characteristic_scores as cs
import wmbench.language_model.ngram_model as ngm
import wmbench.language_model.sampler as sampler
import wmbench.watermark.select_function as sf
import wmbench.watermark.watermark_config as wc
import wmbench.watermark.watermark_processor as wp
from wmbench.definitions import DIR_TEST
from wmbench.definitions import ORIGINAL
from wmbench.definitions import SCHEMES
from wmbench.definitions import STREAM_CLEAN
from wmbench.definitions import STREAM_FREQUENCIES
from wmbench.definitions import STREAM_WATERMARK


class CaseStudyDeskScalePropertiesTest(unittest.TestCase):

    seed = 42
    n_texts = 150
    max_tokens = 200

    @classmethod
    def setUpClass(cls):
        reader = dr.CorpusReader(os.path.join(DIR_TEST, "corpus.txt"))
        reader.read_data()
        cls.documents = [d for d in reader.get_data() if len(d.strip()) > 0]

        cls.model = ngm.NGramModel.train(cls.documents, order=3, alpha=0.1)
        cls.vocabulary = cls.model.get_vocabulary()
        cls.vocabulary_size = cls.model.get_vocabulary_size()
        cls.prompts = sampler.extract_prompts(
            cls.documents, cls.vocabulary, 30)

        counts = sf.count_token_frequencies(
            cls.model, 100, cls.max_tokens,
            sampler.create_rng(cls.seed, STREAM_FREQUENCIES),
            prompts=cls.prompts)
        cls.select_function = sf.build_select_function(
            counts, cls.vocabulary_size)

        cls.populations = {}

    def _get_prompt(self, i):
        return self.prompts[i % len(self.prompts)]

    def _get_config(self, label, delta=2.):
        return wc.WatermarkConfig.from_label(label, delta=delta)

    def _get_detector(self, label):
        return gtd.GreenTokenDetector(
            self._get_config(label), self.vocabulary_size,
            select_function=self.select_function)

    ##
    # Clean (ORIGINAL) or watermarked texts, generated once per length
    #
    def _get_population(self, label, max_tokens=None):
        if max_tokens is None:
            max_tokens = self.max_tokens
        key = (label, max_tokens)
        if key in self.populations:
            return self.populations[key]

        if label == ORIGINAL:
            texts = [sampler.generate(
                self.model, self._get_prompt(i), max_tokens,
                sampler.create_rng(self.seed, STREAM_CLEAN, i))
                for i in range(self.n_texts)]
        else:
            config = self._get_config(label)
            processor = wp.create_processor(
                config, self.vocabulary_size, self.select_function)
            texts = [wp.watermarked_generate(
                self.model, config, self._get_prompt(i), max_tokens,
                sampler.create_rng(self.seed, STREAM_WATERMARK, i),
                processor=processor)
                for i in range(self.n_texts)]

        self.populations[key] = texts
        return texts

    def _get_auc(self, label, positives, negatives):
        detector = self._get_detector(label)
        pos_scores = [r.get_z() for r in detector.detect_corpus(positives)]
        neg_scores = [r.get_z() for r in detector.detect_corpus(negatives)]
        return roc.roc_auc(pos_scores, neg_scores).get_auc()

    def test_detector_agrees_with_embedder(self):
        max_tokens = 100
        clean_texts = self._get_population(ORIGINAL, max_tokens)[:100]

        for label in SCHEMES:
            config = self._get_config(label)
            processor = wp.create_processor(
                config, self.vocabulary_size, self.select_function)
            detector = self._get_detector(label)

            green_total = 0
            scored_total = 0
            for i in range(100):
                processor.reset_statistics()
                text = wp.watermarked_generate(
                    self.model, config, self._get_prompt(i), max_tokens,
                    sampler.create_rng(self.seed, STREAM_WATERMARK, i),
                    processor=processor)
                green_count, scored_tokens = detector.count_green(text)
                self.assertEqual((green_count, scored_tokens),
                                 processor.get_statistics())
                green_total += green_count
                scored_total += scored_tokens

            counts = np.array([detector.count_green(t) for t in clean_texts])
            green_rate_clean = counts[:, 0].sum() / float(counts[:, 1].sum())
            green_rate = green_total / float(scored_total)
            self.assertGreaterEqual(green_rate - green_rate_clean, 0.1)

    def test_detectability(self):
        clean_texts = self._get_population(ORIGINAL)
        for label in ["UNIW", "KGW1", "BW1"]:
            auc = self._get_auc(
                label, self._get_population(label), clean_texts)
            self.assertGreaterEqual(auc, 0.95)

    def test_bw_selection_balance(self):
        config = self._get_config("BW1")
        processor = wp.create_processor(
            config, self.vocabulary_size, self.select_function)
        for i in range(100):
            wp.watermarked_generate(
                self.model, config, self._get_prompt(i), 120,
                sampler.create_rng(self.seed, STREAM_WATERMARK, i),
                processor=processor)

        steps, steps_a = processor.get_selection_statistics()
        self.assertGreaterEqual(steps, 10000)
        self.assertGreaterEqual(steps_a / float(steps), 0.45)
        self.assertLessEqual(steps_a / float(steps), 0.55)

    def test_steal_ordering(self):
        clean_texts = self._get_population(ORIGINAL)
        aucs = {}
        for label in ["UNIW", "BW4"]:
            spoofed = steal.steal_suite(
                self.model, self._get_population(label), clean_texts,
                self.prompts[:100], self.seed,
                intensity=4.,
                max_tokens=self.max_tokens,
                ns=[1])
            aucs[label] = self._get_auc(label, spoofed[1], clean_texts)

        self.assertGreaterEqual(aucs["UNIW"], 0.9)
        self.assertLessEqual(aucs["BW4"], 0.75)

    def test_scrub_robustness(self):
        max_tokens = 40
        clean_texts = self._get_population(ORIGINAL, max_tokens)

        robustness = {}
        for label in ["UNIW", "KGW4"]:
            texts = self._get_population(label, max_tokens)
            scrubbed = scr.TokenPerturbationScrubber(
                self.model, scr.ScrubConfig(replace_rate=0.3)).scrub_corpus(
                    texts, self.seed)
            robustness[label] = cs.score_robustness(
                self._get_auc(label, texts, clean_texts),
                self._get_auc(label, scrubbed, clean_texts))

        self.assertGreater(robustness["UNIW"], robustness["KGW4"])

    def test_scrub_degrades_detection_monotonically(self):
        max_tokens = 40
        clean_texts = self._get_population(ORIGINAL, max_tokens)
        texts = self._get_population("UNIW", max_tokens)

        aucs = []
        for replace_rate in [0., 0.1, 0.3, 0.5]:
            scrubbed = scr.TokenPerturbationScrubber(
                self.model, scr.ScrubConfig(replace_rate=replace_rate)).\
                scrub_corpus(texts, self.seed)
            aucs.append(self._get_auc("UNIW", scrubbed, clean_texts))

        for auc_before, auc_after in zip(aucs[:-1], aucs[1:]):
            self.assertLessEqual(auc_after, auc_before + 0.02)

    def test_zero_delta_equals_plain_generation(self):
        for i in range(50):
            prompt = self._get_prompt(i)
            plain = sampler.generate(
                self.model, prompt, 30, sampler.create_rng(self.seed, i))
            for label in ["UNIW", "KGW2", "BW3"]:
                text = wp.watermarked_generate(
                    self.model, self._get_config(label, delta=0.), prompt,
                    30, sampler.create_rng(self.seed, i),
                    select_function=self.select_function)
                self.assertEqual(text, plain)

    def test_training_perplexity_below_shuffled(self):
        texts = [self.vocabulary.tokenize(d, vocab_policy="frozen")
                 for d in self.documents[:20]]
        ppl_train = np.mean([sampler.perplexity(self.model, t)
                             for t in texts])

        rng = sampler.create_rng(self.seed)
        ppl_shuffled = []
        for i in range(20):
            ppl_shuffled.append(np.mean([
                sampler.perplexity(self.model, ts.TokenSequence(
                    rng.permutation(t.get_ids())))
                for t in texts]))

        self.assertLessEqual(ppl_train, np.mean(ppl_shuffled))
