"""
A command line tool to detect plagiarism between a source corpus and a suspect corpus.
"""
from __future__ import annotations

import json
import logging
import os
import signal
import sys
from dataclasses import replace

import configargparse
import networkx as nx
from platformdirs import user_config_dir

from .. import setup_logger
from ..concept.lexicon import ConceptLexicon, load_lexicon
from ..detect.config import METHODS, OUTPUTS, DetectionConfig
from ..detect.matcher import Verdict
from ..detect.report import bench_corpora, compare_corpora, has_overlap, render_bench, render_reports
from ..exceptions import PlagGraphError
from ..graph.document_graph import DocumentGraph, build_corpus_graphs, build_document_graph
from ..preprocess.document import preprocess_document
from ..resources.corpus import read_corpus, read_document
from ..resources.stoplist import load_stoplist

logger = logging.getLogger('plaggraph')

EXIT_CLEAN = 0
EXIT_ERROR = 1
EXIT_PLAGIARIZED = 2

COMMANDS = ('detect', 'graph', 'bench')


def handle_exit(sig_num: int, frame: object):  # noqa: ARG001 # pylint: disable=unused-argument
    """Handle the exit.

    Args:
        sig_num (int): Signal number.
        frame (object): A frame object.
    """
    logger.info("Received signal %s. Exiting.", sig_num)
    sys.exit(EXIT_ERROR)


def default_config_path() -> str:
    """Path of the user configuration file.

    Returns:
        str: ``<user config dir>/config.ini``.
    """
    return os.path.join(user_config_dir('plaggraph'), 'config.ini')


def build_parser() -> configargparse.ArgParser:
    """Build the argument parser.

    Every long option can also be set in the user configuration file or a file given with ``--config``.

    Returns:
        configargparse.ArgParser: Parser.
    """
    parser = configargparse.ArgParser(prog='plaggraph',
                                      description='Detect plagiarism with a graph-based document representation.',
                                      default_config_files=[default_config_path()])
    parser.add_argument('command', choices=COMMANDS,
                        help='detect: compare corpora; graph: dump the graph of one file; bench: count comparisons.')
    parser.add_argument('paths', nargs='+',
                        help='SOURCE_DIR SUSPECT_DIR for detect and bench, FILE for graph.')
    parser.add_argument('-c', '--config', is_config_file=True, help='Configuration file.')
    parser.add_argument('--write-config', is_write_out_config_file_arg=True,
                        help='Write the effective options to this configuration file and exit.')
    parser.add_argument('--stoplist', type=str, help='Stop word file. Defaults to the bundled English list.')
    parser.add_argument('--lexicon', type=str, help='Synonym lexicon, one "variant<TAB>canonical" per line.')
    parser.add_argument('--stem-lexicon', action='store_true',
                        help='Stem both columns of the lexicon so that it can be written with plain words.')
    parser.add_argument('--ratio', type=float, default=0.5, help='Fraction of sentences kept as important.')
    parser.add_argument('--theta', type=float, default=0.65, help='Sentence match threshold.')
    parser.add_argument('--doc-threshold', type=float, default=0.25,
                        help='Suspect coverage from which a document is plagiarized.')
    parser.add_argument('--method', choices=METHODS, default='graph', help='Detection method.')
    parser.add_argument('--output', choices=OUTPUTS, default='text', help='Output format.')
    parser.add_argument('--out', type=str, help='Write the results to this file instead of stdout.')
    parser.add_argument('--report-all', action='store_true', help='Report pairs without any match too.')
    parser.add_argument('--dump-graph', type=str, help='Write the graphs of all documents to this JSON file.')
    parser.add_argument('--dump-graph-full', action='store_true',
                        help='Include the link matrices and term graphs in graph dumps.')
    parser.add_argument('--graphml', type=str, help='graph: also write the document graph as GraphML.')
    parser.add_argument('--with-concepts', action='store_true', help='List the shared concepts of every match.')
    parser.add_argument('--bench-exhaustive', action='store_true',
                        help='bench: also time an exhaustive sentence comparison.')
    parser.add_argument('--jobs', type=int, default=1, help='Number of worker threads.')
    parser.add_argument('--deterministic', action='store_true',
                        help='Omit timestamps and timings so that the output is byte-reproducible.')
    parser.add_argument('--log-level', type=str, default='INFO', help='Logging level.')
    parser.add_argument('--log-dir', type=str, default='.', help='Directory of the log file.')
    parser.add_argument('--log-label', type=str, help='If given, also log to <log-dir>/<log-label>.log.')
    return parser


def initialize_configuration(args: configargparse.Namespace) -> DetectionConfig:
    """Build the run settings from the parsed arguments.

    Args:
        args (configargparse.Namespace): Arguments.

    Raises:
        InvalidConfigError: A value is out of range.

    Returns:
        DetectionConfig: Settings.
    """
    return DetectionConfig(stoplist_path=args.stoplist,
                           lexicon_path=args.lexicon,
                           ratio=args.ratio,
                           theta=args.theta,
                           doc_threshold=args.doc_threshold,
                           method=args.method,
                           output=args.output,
                           report_all=args.report_all,
                           jobs=args.jobs)


def write_output(text: str, out: str | None):
    """Write results to a file or stdout.

    Args:
        text (str): Results.
        out (str | None): File path, None for stdout.
    """
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(out, 'w', encoding='utf-8') as f:
        f.write(text)
    logger.info('Results are saved to %s.', out)


def dump_graphs(graphs: list[DocumentGraph], path: str, full: bool):
    """Write document graphs to a JSON file.

    Args:
        graphs (list[DocumentGraph]): Graphs.
        path (str): Output file.
        full (bool): Include the link matrices and term graphs.
    """
    with open(path, 'w', encoding='utf-8') as f:
        json.dump({'graphs': [graph.to_dict(full=full) for graph in graphs]}, f, indent=2)
        f.write('\n')
    logger.info('Graphs are saved to %s.', path)


def load_resources(config: DetectionConfig, stem_lexicon: bool = False) -> tuple[frozenset[str], ConceptLexicon]:
    """Load the stop words and the lexicon.

    Args:
        config (DetectionConfig): Settings.
        stem_lexicon (bool, optional): Stem the lexicon entries. Defaults to False.

    Returns:
        tuple[frozenset[str], ConceptLexicon]: stoplist, lexicon
    """
    return load_stoplist(config.stoplist_path), load_lexicon(config.lexicon_path, stem_entries=stem_lexicon)


def ingest(args: configargparse.Namespace,
           config: DetectionConfig) -> tuple[list[DocumentGraph], list[DocumentGraph], dict]:
    """Read both corpora and build their graphs.

    Args:
        args (configargparse.Namespace): Arguments.
        config (DetectionConfig): Settings.

    Raises:
        PlagGraphError: A corpus has no usable document.

    Returns:
        tuple[list[DocumentGraph], list[DocumentGraph], dict]: source graphs, suspect graphs, corpus sizes
    """
    if len(args.paths) != 2:
        raise PlagGraphError(f'{args.command} expects SOURCE_DIR SUSPECT_DIR, got {len(args.paths)} path(s)')
    stoplist, lexicon = load_resources(config, args.stem_lexicon)
    corpora = []
    skipped = 0
    for role, root in zip(('source', 'suspect'), args.paths):
        if not os.path.isdir(root):
            raise PlagGraphError(f'{role} directory not found: {root}')
        documents, unreadable = read_corpus(root, jobs=config.jobs)
        graphs, empty = build_corpus_graphs(documents, stoplist, lexicon, ratio=config.ratio, jobs=config.jobs)
        if not graphs:
            raise PlagGraphError(f'{role} directory {root} has no usable .txt document')
        corpora.append(graphs)
        skipped += len(unreadable) + len(empty)
    sources, suspects = corpora
    if args.dump_graph:
        dump_graphs(sources + suspects, args.dump_graph, full=args.dump_graph_full)
    sizes = {'sources': len(sources), 'suspects': len(suspects), 'skipped': skipped}
    return sources, suspects, sizes


def cmd_detect(args: configargparse.Namespace, config: DetectionConfig) -> int:
    """Compare the suspect corpus with the source corpus.

    Args:
        args (configargparse.Namespace): Arguments.
        config (DetectionConfig): Settings.

    Returns:
        int: 2 if any suspect is plagiarized, else 0.
    """
    sources, suspects, sizes = ingest(args, config)
    # Verdicts of unreported pairs still decide the exit code.
    every_pair = compare_corpora(sources, suspects, replace(config, report_all=True))
    reports = every_pair if config.report_all else [report for report in every_pair if has_overlap(report)]
    write_output(render_reports(reports, config, sizes, deterministic=args.deterministic,
                                with_concepts=args.with_concepts), args.out)
    plagiarized = sum(report.verdict is Verdict.PLAGIARIZED for report in every_pair)
    logger.info('%s of %s pair(s) plagiarized.', plagiarized, len(every_pair))
    return EXIT_PLAGIARIZED if plagiarized else EXIT_CLEAN


def cmd_graph(args: configargparse.Namespace, config: DetectionConfig) -> int:
    """Print the graph of one document as JSON.

    Args:
        args (configargparse.Namespace): Arguments.
        config (DetectionConfig): Settings.

    Returns:
        int: 0
    """
    if len(args.paths) != 1:
        raise PlagGraphError(f'graph expects FILE, got {len(args.paths)} path(s)')
    stoplist, lexicon = load_resources(config, args.stem_lexicon)
    raw = read_document(args.paths[0])
    graph = build_document_graph(preprocess_document(raw, stoplist), lexicon, ratio=config.ratio)
    write_output(json.dumps(graph.to_dict(full=args.dump_graph_full), indent=2) + '\n', args.out)
    if args.dump_graph:
        dump_graphs([graph], args.dump_graph, full=args.dump_graph_full)
    if args.graphml:
        nx.write_graphml(graph.to_networkx(), args.graphml)
        logger.info('GraphML is saved to %s.', args.graphml)
    return EXIT_CLEAN


def cmd_bench(args: configargparse.Namespace, config: DetectionConfig) -> int:
    """Count the comparisons every method makes.

    Args:
        args (configargparse.Namespace): Arguments.
        config (DetectionConfig): Settings.

    Returns:
        int: 0
    """
    sources, suspects, sizes = ingest(args, config)
    frame = bench_corpora(sources, suspects, config, deterministic=args.deterministic,
                          include_exhaustive=args.bench_exhaustive)
    write_output(render_bench(frame, config, sizes, deterministic=args.deterministic), args.out)
    return EXIT_CLEAN


def main(argv: list[str] | None = None) -> int:
    """Main function.

    Args:
        argv (list[str] | None, optional): Arguments. Defaults to None, which reads ``sys.argv``.

    Returns:
        int: 0 when nothing is plagiarized, 1 on error, 2 when plagiarism is found.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors, which is reserved for plagiarism.
        return EXIT_CLEAN if e.code in (0, None) else EXIT_ERROR

    try:
        setup_logger(logger, outdir=args.log_dir, label=args.log_label, log_level=args.log_level)
    except ValueError as e:
        logger.error('%s', e)
        return EXIT_ERROR

    commands = {'detect': cmd_detect, 'graph': cmd_graph, 'bench': cmd_bench}
    try:
        config = initialize_configuration(args)
        logger.debug('Settings: %s', config.as_dict())
        return commands[args.command](args, config)
    except (PlagGraphError, OSError, UnicodeDecodeError) as e:
        logger.error('%s', e)
        return EXIT_ERROR


def cli():
    """Console entry point."""
    signal.signal(signal.SIGINT, handle_exit)
    signal.signal(signal.SIGTERM, handle_exit)
    sys.exit(main())
