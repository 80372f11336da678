##
# \file generate_texts.py
# \brief      Generate the unwatermarked and the watermarked text populations
#
# For every prompt index i the clean text uses the random stream
# (seed, STREAM_CLEAN, i) and every watermarked text the stream
# (seed, STREAM_WATERMARK, i), so outputs do not depend on the order in which
# texts or schemes are processed.
#

import os
import numpy as np

import pysitk.python_helper as ph

import wmbench.base.data_reader as dr
import wmbench.base.data_writer as dw
import wmbench.base.exceptions as exceptions
import wmbench.language_model.sampler as sampler
import wmbench.watermark.select_function as sf
import wmbench.watermark.watermark_processor as wp
import wmbench.evaluation.metric_store as ms
import wmbench.utilities.run_config as rc
import wmbench.utilities.run_directory as rd
import wmbench.utilities.run_manifest as rm
from wmbench.utilities.application_runner import run_application
from wmbench.utilities.input_arparser import InputArgparser
from wmbench.definitions import BYTES_PER_MEGABYTE
from wmbench.definitions import ORIGINAL
from wmbench.definitions import STREAM_CLEAN
from wmbench.definitions import STREAM_FREQUENCIES
from wmbench.definitions import STREAM_WATERMARK


##
# Prompts of the run, one per generated text; prompts are reused in turn if
# the prompt corpus has fewer usable lines than texts are requested
#
def read_prompts(path_to_file, vocabulary, prompt_length, n_samples):
    reader = dr.CorpusReader(path_to_file)
    reader.read_data()
    prompts = sampler.extract_prompts(
        reader.get_data(), vocabulary, prompt_length)
    if len(prompts) == 0:
        raise exceptions.EmptyCorpus(path_to_file)
    if len(prompts) < n_samples:
        ph.print_warning("%d prompts for %d texts; prompts are reused" % (
            len(prompts), n_samples))
    return [prompts[i % len(prompts)] for i in range(n_samples)]


def get_mean_perplexity(model_scoring, texts, prompts):
    return float(np.mean([sampler.perplexity(model_scoring, t, p)
                          for t, p in zip(texts, prompts)]))


def get_parser():
    input_parser = InputArgparser(
        description="Generate unwatermarked texts and texts watermarked by "
        "each given scheme from a trained model.",
    )
    input_parser.add_corpus_prompts(required=True)
    input_parser.add_schemes()
    input_parser.add_delta()
    input_parser.add_key()
    input_parser.add_n_samples()
    input_parser.add_n_frequency_texts()
    input_parser.add_max_tokens()
    input_parser.add_prompt_length()
    input_parser.add_temperature()
    input_parser.add_seed(required=True)
    input_parser.add_dir_output(required=True)
    input_parser.add_log_config()
    input_parser.add_verbose()
    return input_parser


def run(config, verbose, log_files=()):
    time_start = ph.start_timing()
    run_directory = rd.RunDirectory(config.dir_output)

    model = run_directory.read_model()
    model_scoring = run_directory.read_scoring_model()
    vocabulary = model.get_vocabulary()
    vocabulary_size = model.get_vocabulary_size()
    prompts = read_prompts(config.corpus_prompts, vocabulary,
                           config.prompt_length, config.n_samples)

    metric_store = run_directory.read_metrics()
    artifacts = []
    timings = {}

    # Unwatermarked population
    ph.print_title("Generate %d unwatermarked texts" % config.n_samples)
    time_start_population = ph.start_timing()
    texts = [sampler.generate(
        model, prompt, config.max_tokens,
        sampler.create_rng(config.seed, STREAM_CLEAN, i),
        temperature=config.temperature)
        for i, prompt in enumerate(prompts)]
    generate_time = ph.stop_timing(time_start_population).total_seconds()
    timings[ORIGINAL] = generate_time

    path_to_texts = run_directory.get_path_to_texts(rd.CLEAN)
    dw.CorpusWriter(texts, path_to_texts, vocabulary,
                    verbose=verbose).write_data()
    artifacts.append(path_to_texts)

    metric_store.set_metric(ORIGINAL, ms.METRIC_GENERATE_TIME, generate_time)
    metric_store.set_metric(ORIGINAL, ms.METRIC_PPL, get_mean_perplexity(
        model_scoring, texts, prompts))
    metric_store.set_metric(ORIGINAL, ms.METRIC_MEMORY,
                            model.get_memory_bytes() / BYTES_PER_MEGABYTE)

    # Select Function shared by all BW schemes
    watermark_configs = config.get_watermark_configs()
    select_function = None
    if any(c.get_scheme() == "BW" for c in watermark_configs):
        ph.print_subtitle("Build Select Function from %d generated texts" %
                          config.n_frequency_texts)
        counts = sf.count_token_frequencies(
            model, config.n_frequency_texts, config.max_tokens,
            sampler.create_rng(config.seed, STREAM_FREQUENCIES),
            prompts=prompts,
            temperature=config.temperature,
            verbose=verbose)
        select_function = sf.build_select_function(counts, vocabulary_size)

    # Watermarked populations
    for watermark_config in watermark_configs:
        label = watermark_config.get_label()
        ph.print_title("Generate %d texts watermarked by %s" % (
            config.n_samples, label))

        processor = wp.create_processor(
            watermark_config, vocabulary_size, select_function)
        time_start_population = ph.start_timing()
        texts = [wp.watermarked_generate(
            model, watermark_config, prompt, config.max_tokens,
            sampler.create_rng(config.seed, STREAM_WATERMARK, i),
            processor=processor,
            temperature=config.temperature)
            for i, prompt in enumerate(prompts)]
        generate_time = ph.stop_timing(time_start_population).total_seconds()
        timings[label] = generate_time

        path_to_texts = run_directory.get_path_to_texts(label)
        path_to_sidecar = run_directory.get_path_to_sidecar(label)
        dw.CorpusWriter(texts, path_to_texts, vocabulary,
                        verbose=verbose).write_data()
        dw.SidecarWriter(
            watermark_config, vocabulary_size, path_to_sidecar,
            select_function=select_function
            if watermark_config.get_scheme() == "BW" else None,
            verbose=verbose).write_data()
        artifacts.extend([path_to_texts, path_to_sidecar])

        memory = model.get_memory_bytes() + processor.get_auxiliary_bytes()
        metric_store.set_metric(label, ms.METRIC_GENERATE_TIME, generate_time)
        metric_store.set_metric(label, ms.METRIC_PPL, get_mean_perplexity(
            model_scoring, texts, prompts))
        metric_store.set_metric(label, ms.METRIC_MEMORY,
                                memory / BYTES_PER_MEGABYTE)

        green_count, scored_tokens = processor.get_statistics()
        if scored_tokens > 0:
            ph.print_info("Embedded green fraction: %.3f (%d / %d)" % (
                green_count / float(scored_tokens), green_count,
                scored_tokens))
        if watermark_config.get_scheme() == "BW":
            steps, steps_a = processor.get_selection_statistics()
            ph.print_info("Steps with green list A: %.3f (%d / %d)" % (
                steps_a / float(steps), steps_a, steps))

    path_to_metrics = run_directory.get_path_to_metrics()
    metric_store.write(path_to_metrics, verbose=verbose)
    artifacts.append(path_to_metrics)

    elapsed_time = ph.stop_timing(time_start)
    timings["total"] = elapsed_time.total_seconds()

    manifest = rm.RunManifest.read(config.dir_output)
    manifest.add_stage("generate", config.get_hash(), timings,
                       artifacts + list(log_files))
    manifest.write(verbose=verbose)

    ph.print_title("Summary")
    for population in [ORIGINAL] + config.schemes:
        ph.print_info("%s: ppl %.3f, generate time %.2f s" % (
            population,
            metric_store.get_metric(population, ms.METRIC_PPL),
            metric_store.get_metric(population, ms.METRIC_GENERATE_TIME)))
    exe_file_info = os.path.basename(os.path.abspath(__file__)).split(".")[0]
    print("%s | Computational Time: %s" % (exe_file_info, elapsed_time))


def main(argv=None):
    input_parser = get_parser()
    args = input_parser.parse_args(argv)
    if args.verbose:
        input_parser.print_arguments(args)

    def function():
        config = rc.RunConfig.from_args(args)
        log_files = []
        if args.log_config:
            log_files.append(
                input_parser.log_config(os.path.abspath(__file__)))
        run(config, bool(args.verbose), log_files)

    return run_application(function)


if __name__ == '__main__':
    main()
