"""Command line interface.

Exit codes: 0 success, 1 usage error (bad flags), 2 data/resource error.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import resources as res
from .corpus import drop_outliers, load_moses, load_tsv, validate
from .errors import ApesynthError, MissingResource
from .formats import make_manifest, write_jsonl, write_tsv, write_wmt
from .noising import (NoiseConfig, ReplacementPools, Resources, SCHEMES,
                      build_pools, generate_dataset)
from .tagger import TaggerModel, accuracy, read_conll, train_tagger


@click.group()
def cli():
    """Synthesize APE (SRC, MT, PE) triplets from a parallel corpus."""


def _input_options(fn):
    fn = click.option("--tsv", "tsv_path", type=click.Path(), default=None,
                      help="corpus as <src>TAB<tgt> lines")(fn)
    fn = click.option("--src", "src_path", type=click.Path(), default=None,
                      help="Moses-format source file")(fn)
    fn = click.option("--tgt", "tgt_path", type=click.Path(), default=None,
                      help="Moses-format target file")(fn)
    return fn


def _noise_options(fn):
    fn = click.option("--scheme", type=click.Choice(SCHEMES), required=True)(fn)
    fn = click.option("--ratio", type=click.FloatRange(0.0, 1.0), required=True)(fn)
    fn = click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=1,
                      show_default=True)(fn)
    fn = click.option("--wordnet", "wordnet_dir", type=click.Path(), default=None,
                      help="WordNet database directory (required for --scheme semantic)")(fn)
    fn = click.option("--tagger-model", type=click.Path(), default=None,
                      help="tagger model file (bundled default)")(fn)
    fn = click.option("--pools-cache", type=click.Path(), default=None,
                      help="cache file for replacement pools")(fn)
    fn = click.option("--jobs", type=click.IntRange(1, 64), default=1, show_default=True)(fn)
    fn = click.option("--drop-outliers", is_flag=True,
                      help="drop length-ratio outlier pairs before generation")(fn)
    return fn


def _load_corpus(tsv_path, src_path, tgt_path, drop):
    if tsv_path and (src_path or tgt_path):
        raise click.UsageError("give either --tsv or --src/--tgt, not both")
    if tsv_path:
        corpus = load_tsv(tsv_path)
    elif src_path and tgt_path:
        corpus = load_moses(src_path, tgt_path)
    else:
        raise click.UsageError("corpus input required: --tsv PATH or --src PATH --tgt PATH")
    if drop:
        corpus = drop_outliers(corpus)
    return corpus


def _load_resources(scheme, corpus, wordnet_dir, tagger_model, pools_cache):
    from .wordnet import load_wordnet

    model_path = Path(tagger_model) if tagger_model else res.default_tagger_model_path()
    model = TaggerModel.load(model_path)
    r = Resources(tagger_model=model)
    if scheme == "semantic":
        if wordnet_dir is None:
            raise MissingResource(
                "semantic scheme needs --wordnet DIR "
                f"(bundled copy: {res.default_wordnet_dir()})")
        r.wordnet = load_wordnet(wordnet_dir)
    else:
        pools = None
        if pools_cache and Path(pools_cache).exists():
            pools = ReplacementPools.load(pools_cache, corpus.fingerprint())
        if pools is None:
            pools = build_pools(corpus, model)
            if pools_cache:
                pools.save(pools_cache)
        r.pools = pools
    return r


@cli.command()
@_noise_options
@_input_options
@click.option("--out", "out_dir", type=click.Path(), required=True)
@click.option("--format", "fmt", type=click.Choice(["wmt", "tsv", "jsonl"]), default="wmt",
              show_default=True)
@click.option("--prefix", default="train", show_default=True)
def generate(scheme, ratio, seed, wordnet_dir, tagger_model, pools_cache, jobs,
             drop_outliers, tsv_path, src_path, tgt_path, out_dir, fmt, prefix):
    """Generate a full APE dataset and write it with a manifest."""
    corpus = _load_corpus(tsv_path, src_path, tgt_path, drop_outliers)
    resources = _load_resources(scheme, corpus, wordnet_dir, tagger_model, pools_cache)
    config = NoiseConfig(scheme, ratio, seed)
    triplets, stats = generate_dataset(corpus, config, resources, jobs=jobs)

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if fmt == "wmt":
        write_wmt(triplets, out, prefix)
    elif fmt == "tsv":
        write_tsv(triplets, out / f"{prefix}.tsv")
    else:
        write_jsonl(triplets, out / f"{prefix}.jsonl")
    make_manifest(config, corpus.fingerprint(), triplets).write(out)

    click.echo(f"pairs: {stats.total_sentences}  edits: {stats.total_edits}  "
               f"shortfall: {stats.shortfall_count}  "
               f"mean realized ratio: {stats.mean_realized_ratio:.3f}")


def _render_preview(triplet) -> str:
    lines = [f"[{triplet.sentence_index}] SRC: {triplet.src}",
             f"     PE : {triplet.pe}",
             f"     MT : {triplet.mt}"]
    if triplet.edits:
        parts = [f"{e.start}: {' '.join(e.original)} -> {' '.join(e.replacement)}"
                 for e in triplet.edits]
        lines.append("     edits: " + "; ".join(parts))
    if triplet.shortfall:
        lines.append("     (shortfall: fewer eligible units than requested)")
    return "\n".join(lines)


@cli.command()
@_noise_options
@_input_options
@click.option("--n", "count", type=click.IntRange(0), default=10, show_default=True)
def preview(scheme, ratio, seed, wordnet_dir, tagger_model, pools_cache, jobs,
            drop_outliers, tsv_path, src_path, tgt_path, count):
    """Print the first N triplets with their edits; write nothing."""
    corpus = _load_corpus(tsv_path, src_path, tgt_path, drop_outliers)
    resources = _load_resources(scheme, corpus, wordnet_dir, tagger_model, pools_cache)
    config = NoiseConfig(scheme, ratio, seed)
    from .noising import generate_triplet
    for pair in corpus.pairs[:count]:
        triplet, _ = generate_triplet(pair, config, resources)
        click.echo(_render_preview(triplet))
        click.echo()


@cli.command("train-tagger")
@click.option("--gold", "gold_path", type=click.Path(), required=True,
              help="CoNLL token<TAB>tag training file")
@click.option("--epochs", type=click.IntRange(0), default=5, show_default=True)
@click.option("--out", "out_path", type=click.Path(), required=True)
def train_tagger_cmd(gold_path, epochs, out_path):
    """Train the averaged perceptron tagger and save the model."""
    sentences = read_conll(gold_path)
    model = train_tagger(sentences, epochs=epochs)
    model.save(out_path)
    click.echo(f"sentences: {len(sentences)}  "
               f"training accuracy: {accuracy(model, sentences):.4f}")


@cli.command()
@click.option("--port", type=click.IntRange(1, 65535), default=9092, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--wordnet", "wordnet_dir", type=click.Path(), default=None)
@click.option("--tagger-model", type=click.Path(), default=None)
@click.option("--work-dir", type=click.Path(), default="apesynth-jobs", show_default=True)
@click.option("--auth-token", default=None, help="require X-Auth-Token header when set")
def serve(port, host, wordnet_dir, tagger_model, work_dir, auth_token):
    """Run the HTTP service (blocks until terminated)."""
    import socket

    import uvicorn

    from .service import create_app

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((host, port))
    except OSError as exc:
        raise MissingResource(f"cannot bind {host}:{port}: {exc}") from None
    finally:
        probe.close()

    app = create_app(wordnet_dir=wordnet_dir, tagger_model_path=tagger_model,
                     work_dir=work_dir, auth_token=auth_token)
    uvicorn.run(app, host=host, port=port, log_level="info")


@cli.command()
@click.option("--wordnet", "show_wordnet", is_flag=True)
@click.option("--tagger-model", "show_model", is_flag=True)
@click.option("--demo-corpus", "show_demo", is_flag=True)
@click.option("--gold", "show_gold", is_flag=True)
def paths(show_wordnet, show_model, show_demo, show_gold):
    """Print paths of bundled resources (all of them by default)."""
    rows = []
    if show_wordnet or not any((show_wordnet, show_model, show_demo, show_gold)):
        rows.append(("wordnet", res.default_wordnet_dir()))
    if show_model or not any((show_wordnet, show_model, show_demo, show_gold)):
        rows.append(("tagger-model", res.default_tagger_model_path()))
    if show_demo or not any((show_wordnet, show_model, show_demo, show_gold)):
        rows.append(("demo-corpus", res.demo_corpus_path()))
    if show_gold or not any((show_wordnet, show_model, show_demo, show_gold)):
        rows.append(("gold-sample", res.tagged_sample_path()))
    if len(rows) == 1:
        click.echo(rows[0][1])
    else:
        for name, p in rows:
            click.echo(f"{name}\t{p}")


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:
        return int(exc.exit_code)
    except click.UsageError as exc:
        click.echo(f"ERROR:usage: {exc.format_message()}", err=True)
        return 1
    except click.ClickException as exc:
        click.echo(f"ERROR:usage: {exc.format_message()}", err=True)
        return 1
    except click.Abort:
        return 1
    except ApesynthError as exc:
        click.echo(f"ERROR:{exc.code}: {exc}", err=True)
        return 2
    except OSError as exc:
        click.echo(f"ERROR:io-error: {exc}", err=True)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
