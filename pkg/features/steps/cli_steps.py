"""
Command-Line Step Definitions for BDD
"""
import io
import json
from contextlib import redirect_stdout

from behave import given, when, then

from core.specialisation.embedding_store import load_embeddings
from runners.cli_runner import parse_args, run
from tests.helpers.synthetic_factory import SyntheticFactory

SMALL_FLAGS = ["--epochs", "1", "--batch", "5", "--hidden", "1", "--width", "8",
               "--map-epochs", "3", "--k", "2", "--batch-size", "8", "--seed", "3"]


def _invoke(context, argv):
    """Run one command; usage errors surface as SystemExit with code 2"""
    buffer = io.StringIO()
    try:
        with redirect_stdout(buffer):
            context.exit_code = run(parse_args(argv))
    except SystemExit as e:
        context.exit_code = e.code
    text = buffer.getvalue()
    context.summary = json.loads(text) if text.strip() else None


# ============== DATA STEPS ==============

@given('a synthetic space of {size:d} words in {dim:d} dimensions')
def step_synthetic_space(context, size, dim):
    context.factory = SyntheticFactory(seed=31)
    context.space = context.factory.space(size, dim)
    context.vectors = str(context.factory.write_vectors(context.space, context.workdir / "vectors.txt"))


@given('{attract:d} attract and {repel:d} repel constraint pairs over its first {count:d} words')
def step_constraints(context, attract, repel, count):
    words = list(context.space.words)[:count]
    pairs = context.factory.disjoint_pairs(words, attract + repel)
    context.attract_pairs, context.repel_pairs = pairs[:attract], pairs[attract:]
    context.attract = str(context.factory.write_pairs(context.attract_pairs, context.workdir / "attract.txt"))
    context.repel = str(context.factory.write_pairs(context.repel_pairs, context.workdir / "repel.txt"))


@given('a similarity dataset of {count:d} pairs over its last {size:d} words')
def step_dataset(context, count, size):
    words = list(context.space.words)[-size:]
    context.eval_pairs = context.factory.scored_pairs(words, count)
    context.eval_file = str(context.factory.write_eval(context.eval_pairs, context.workdir / "simlex.tsv"))


@given('the dataset words are also constrained')
def step_constrain_dataset_words(context):
    word = context.eval_pairs[0][0]
    extra = [(word, context.space.words[0])]
    context.attract = str(context.factory.write_pairs(context.attract_pairs + extra,
                                                      context.workdir / "attract.txt"))


@given('constraint pairs that share no word with the space')
def step_stray_constraints(context):
    context.attract = str(SyntheticFactory.write_pairs([("absent_a", "absent_b")], context.workdir / "stray.txt"))
    context.repel = None


# ============== RUN STEPS ==============

def _pipeline_argv(context):
    context.out = context.workdir / "final.txt"
    argv = ["pipeline", "--vectors", context.vectors, "--attract", context.attract,
            "--out", str(context.out), "--model-out", str(context.workdir / "model.npz")]
    if context.repel:
        argv += ["--repel", context.repel]
    return argv + SMALL_FLAGS


@when('I run "pipeline" with the small training settings')
def step_run_pipeline(context):
    _invoke(context, _pipeline_argv(context))


@when('I run "pipeline" with the small training settings and hold-out evaluation')
def step_run_pipeline_holdout(context):
    _invoke(context, _pipeline_argv(context) + ["--holdout-eval", context.eval_file])


@when('I run "evaluate" on the original space')
def step_run_evaluate(context):
    _invoke(context, ["evaluate", "--vectors", context.vectors, "--dataset", context.eval_file])


@when('I run "evaluate" on a vector file that does not exist')
def step_run_evaluate_missing(context):
    _invoke(context, ["evaluate", "--vectors", str(context.workdir / "absent.txt"),
                      "--dataset", context.eval_file])


# ============== CHECK STEPS ==============

@then('the exit code is {code:d}')
def step_exit_code(context, code):
    assert context.exit_code == code, f"Expected exit code {code}, got {context.exit_code}"


@then('the output space has {size:d} words')
def step_output_size(context, size):
    assert len(load_embeddings(context.out)) == size


@then('the summary reports {seen:d} seen and {unseen:d} unseen words')
def step_partition(context, seen, unseen):
    report = context.summary["metrics"]["pipeline"]
    assert (report["seen_words"], report["unseen_words"]) == (seen, unseen), report


@then('the summary reports a positive number of removed pairs')
def step_removed_pairs(context):
    assert context.summary["metrics"]["pipeline"]["holdout_removed_pairs"] > 0


@then('the summary reports {covered:d} of {total:d} pairs covered')
def step_coverage(context, covered, total):
    record = context.summary["metrics"]["reports"][0]
    assert (record["covered"], record["total"]) == (covered, total), record


@then('no output space is written')
def step_no_output(context):
    assert not context.out.exists(), f"{context.out} should not exist"
