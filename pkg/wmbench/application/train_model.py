##
# \file train_model.py
# \brief      Train the generation and the scoring n-gram language model
#
# Without a scoring corpus every k-th line of the training corpus is held
# out for the scoring model, which shares the vocabulary of the generation
# model.
#

import os

import pysitk.python_helper as ph

import wmbench.base.data_reader as dr
import wmbench.base.data_writer as dw
import wmbench.base.exceptions as exceptions
import wmbench.language_model.ngram_model as ngm
import wmbench.evaluation.metric_store as ms
import wmbench.utilities.run_config as rc
import wmbench.utilities.run_directory as rd
import wmbench.utilities.run_manifest as rm
from wmbench.utilities.application_runner import run_application
from wmbench.utilities.input_arparser import InputArgparser
from wmbench.definitions import BYTES_PER_MEGABYTE
from wmbench.definitions import ORIGINAL


##
# Split documents into generation and scoring corpus
#
# \param      documents      list of strings
# \param      scoring_split  every scoring_split-th document is held out
#
# \return     (generation corpus, scoring corpus)
#
def split_corpus(documents, scoring_split):
    if scoring_split < 2:
        raise exceptions.InvalidParameter(
            "scoring split must be at least 2 to keep training documents")
    generation = [d for i, d in enumerate(documents)
                  if (i + 1) % scoring_split != 0]
    scoring = [d for i, d in enumerate(documents)
               if (i + 1) % scoring_split == 0]
    return generation, scoring


def read_documents(path_to_file):
    reader = dr.CorpusReader(path_to_file)
    reader.read_data()
    documents = [d for d in reader.get_data() if d.strip() != ""]
    if len(documents) == 0:
        raise exceptions.EmptyCorpus(path_to_file)
    return documents


def get_parser():
    input_parser = InputArgparser(
        description="Train the n-gram language model used for generation "
        "and the scoring model used for perplexity.",
    )
    input_parser.add_corpus_train(required=True)
    input_parser.add_corpus_scoring()
    input_parser.add_scoring_split()
    input_parser.add_order()
    input_parser.add_alpha()
    input_parser.add_seed(required=True)
    input_parser.add_dir_output(required=True)
    input_parser.add_log_config()
    input_parser.add_verbose()
    return input_parser


def run(config, verbose, log_files=()):
    time_start = ph.start_timing()
    run_directory = rd.RunDirectory(config.dir_output)

    ph.print_title("Train language models")
    documents = read_documents(config.corpus_train)
    if config.corpus_scoring is None:
        corpus, corpus_scoring = split_corpus(
            documents, config.scoring_split)
        if len(corpus_scoring) == 0:
            raise exceptions.EmptyCorpus(
                "scoring split of '%s'" % config.corpus_train)
    else:
        corpus = documents
        corpus_scoring = read_documents(config.corpus_scoring)

    model = ngm.NGramModel.train(
        corpus, config.order, config.alpha, verbose=verbose)
    model_scoring = ngm.NGramModel.train(
        corpus_scoring, config.order, config.alpha,
        vocabulary=model.get_vocabulary(),
        verbose=verbose)

    artifacts = [
        run_directory.get_path_to_model(),
        run_directory.get_path_to_scoring_model(),
        run_directory.get_path_to_metrics(),
    ]
    dw.NGramModelWriter(model, artifacts[0], verbose=verbose).write_data()
    dw.NGramModelWriter(
        model_scoring, artifacts[1], verbose=verbose).write_data()

    metric_store = run_directory.read_metrics()
    metric_store.set_metric(
        ORIGINAL, ms.METRIC_MEMORY,
        model.get_memory_bytes() / BYTES_PER_MEGABYTE)
    metric_store.write(artifacts[2], verbose=verbose)

    elapsed_time = ph.stop_timing(time_start)

    manifest = rm.RunManifest.read(config.dir_output)
    manifest.add_stage(
        "train", config.get_hash(),
        {"total": elapsed_time.total_seconds()},
        artifacts + list(log_files))
    manifest.write(verbose=verbose)

    ph.print_title("Summary")
    ph.print_info("Vocabulary size: %d" % model.get_vocabulary_size())
    ph.print_info("Training tokens: %d (scoring model: %d)" % (
        model.get_number_of_training_tokens(),
        model_scoring.get_number_of_training_tokens()))
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
