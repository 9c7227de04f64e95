# Copyright (c) 2024 The phigraph developers

"""Decide whether an unlabeled tree is a G_phi-graph.

A tree `H` is a G_phi-graph when some seed set `A` has ``G_phi(A) = H`` up to
relabeling.  In such a labeling the vertex labelled one is a leaf whose only
neighbor is two, and the children of a vertex labelled `v` (seen from one)
carry distinct labels from the preimages of `v` under phi.  Labels grow
strictly away from the root and every preimage set is finite, so trying each
leaf as the root and assigning children labels by backtracking is a finite,
exhaustive search.

Feasibility of a rooted subtree under a given label depends only on the
subtree's shape, so results are memoized on ``(AHU code, label)``.
"""

import logging
from typing import NamedTuple

from .._phigraphcore import SeedSet, build, minimal_seed
from ..errors import DomainError, MalformedLabelingError, check_natural
from ..families import generate
from ..lib.trees import UnlabeledTree, code_height, code_size, split_code
from ..totient import preimages


logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**7

REALIZED = 'realized'
REFUTED = 'refuted'
BUDGET_EXCEEDED = 'budget_exceeded'

LEAF = '()'

# a label below 2**64 is at most 64 phi steps away from one
MAX_HEIGHT = 64


# =============================================================================
class RecognitionResult(NamedTuple):
    """Outcome of `recognize`.

    `labeling` maps vertex ids to naturals and `minimal_seed` is the seed of
    the witness graph; both are None unless the verdict is ``'realized'``.
    `root` is the vertex labelled one and `roots_tried` counts the root
    choices actually searched.
    """
    verdict: str
    labeling: dict = None
    minimal_seed: SeedSet = None
    nodes_explored: int = 0
    root: int = None
    roots_tried: int = 0

    @property
    def realized(self):
        return self.verdict == REALIZED


class _BudgetExceeded(Exception):
    pass


# =============================================================================
class Recognizer:
    """Exhaustive search for a phi-labeling of a tree.

    Parameters
    ----------
    budget : int
        Maximal number of node expansions (default `DEFAULT_BUDGET`); the
        verdict is ``'budget_exceeded'`` when it runs out.

    dedupe_roots : bool
        Skip root leaves whose rooted shape was already refuted (default
        True); the verdict and the witness do not depend on it.

    log_stride : int
        Log progress every `log_stride` expansions.

    The options are kept in the dictionary `options` and may be changed
    between calls, e.g. ``recognizer.options.update(budget=10**8)``.
    """

    def __init__(self, **options):
        self.options = dict(budget=DEFAULT_BUDGET, dedupe_roots=True, log_stride=100000)
        self.options.update(options)
        self._memo = {}
        self._nodes = 0
        self._truncated = False

    def __call__(self, tree):
        return self.recognize(tree)

    def recognize(self, tree):
        """Return the `RecognitionResult` for `tree`."""
        budget = check_natural(self.options['budget'], name='budget')
        if tree.order == 1:
            return RecognitionResult(
                    REALIZED, labeling={0: 1}, minimal_seed=SeedSet({1}), root=0
                    )

        self._memo, self._nodes, self._truncated = {}, 0, False
        refuted_shapes = set()
        roots_tried = 0
        try:
            for root in tree.leaves():
                codes, parent = tree.rooted_codes(root)
                if self.options['dedupe_roots'] and codes[root] in refuted_shapes:
                    continue
                if code_height(codes[root]) > MAX_HEIGHT:
                    logger.debug("vertex %d as the root needs labels of 2**64 or more", root)
                    self._truncated = True
                    continue
                roots_tried += 1
                logger.debug("trying vertex %d as the root", root)
                if self._realize(codes[root], 1, budget):
                    labeling = self._witness(tree, root, codes, parent)
                    return self._finish(
                            REALIZED, labeling=labeling,
                            minimal_seed=minimal_seed(build(labeling.values())),
                            root=root, roots_tried=roots_tried
                            )
                refuted_shapes.add(codes[root])
        except _BudgetExceeded:
            logger.warning("budget of %d expansions exhausted", budget)
            return self._finish(BUDGET_EXCEEDED, roots_tried=roots_tried)
        if self._truncated:
            logger.warning("the search needs labels of 2**64 or more; no verdict")
            return self._finish(BUDGET_EXCEEDED, roots_tried=roots_tried)
        return self._finish(REFUTED, roots_tried=roots_tried)

    def _finish(self, verdict, **kwargs):
        result = RecognitionResult(verdict, nodes_explored=self._nodes, **kwargs)
        logger.info("%s after %d expansions", verdict, self._nodes)
        self._memo = {}
        return result

    # -------------------------------------------------------------------------
    def _realize(self, code, label, budget):
        """Return True iff the rooted shape `code` admits a labeling with
        `label` at its root; record the children's labels in the memo.
        """
        if code == LEAF:
            return True
        key = (code, label)
        if key in self._memo:
            return self._memo[key] is not None

        self._nodes += 1
        if self._nodes > budget:
            raise _BudgetExceeded
        if self._nodes % self.options['log_stride'] == 0:
            logger.debug("%d expansions, memo size %d", self._nodes, len(self._memo))

        children = sorted(split_code(code), key=lambda c: (-code_size(c), c))
        solutions, truncated = preimages(label)
        self._truncated |= truncated
        candidates = [x for x in solutions if x != label]
        labels = None
        if len(candidates) >= len(children):
            labels = self._assign(children, candidates, budget)
        self._memo[key] = labels
        return labels is not None

    def _assign(self, children, candidates, budget):
        """Backtrack over injective assignments of candidates to children.

        Equal consecutive shapes take strictly increasing candidate indices,
        so each assignment is tried once up to permutation of twins.
        """
        chosen = []
        used = set()

        def extend(i, low):
            if i == len(children):
                return True
            for j in range(low, len(candidates)):
                if j in used:
                    continue
                if not self._realize(children[i], candidates[j], budget):
                    continue
                used.add(j)
                chosen.append(j)
                twin = i + 1 < len(children) and children[i + 1] == children[i]
                if extend(i + 1, j + 1 if twin else 0):
                    return True
                used.discard(j)
                chosen.pop()
            return False

        if not extend(0, 0):
            return None
        return tuple(candidates[j] for j in chosen)

    def _witness(self, tree, root, codes, parent):
        labeling = {root: 1}
        stack = [root]
        while stack:
            v = stack.pop()
            if codes[v] == LEAF:
                continue
            kids = [c for c in tree.neighbors(v) if c != parent[v]]
            kids.sort(key=lambda c: (-code_size(codes[c]), codes[c], c))
            for c, label in zip(kids, self._memo[(codes[v], labeling[v])]):
                labeling[c] = label
                stack.append(c)
        return dict(sorted(labeling.items()))


# =============================================================================
def recognize(tree, budget=DEFAULT_BUDGET):
    """Decide whether `tree` is a G_phi-graph within `budget` expansions."""
    return Recognizer(budget=budget).recognize(tree)


def recognize_family(spec, budget=DEFAULT_BUDGET):
    """Recognize the generated shape of a family spec."""
    return recognize(generate(spec), budget=budget)


def certify(tree, labeling):
    """True iff the seed ``labeling.values()`` builds exactly `tree`, with
    vertex `i` carrying the label ``labeling[i]``.

    Raises `MalformedLabelingError` unless `labeling` maps every vertex id to
    a distinct natural.
    """
    if set(labeling) != set(range(tree.order)):
        raise MalformedLabelingError("the labeling must cover exactly the vertex ids")
    try:
        labels = {v: check_natural(x, name=f'label of {v}') for v, x in labeling.items()}
    except (DomainError, OverflowError) as err:
        raise MalformedLabelingError(str(err)) from None
    if len(set(labels.values())) != len(labels):
        raise MalformedLabelingError("the labeling is not injective")

    graph = build(labels.values())
    if graph.vertices != set(labels.values()):
        return False
    wanted = {frozenset((labels[u], labels[v])) for u, v in tree.edges}
    return wanted == {frozenset(e) for e in graph.edges}


def parse_tree(text):
    """Read a tree from an edge list or DOT text; see `UnlabeledTree.parse`."""
    try:
        return UnlabeledTree.parse(text)
    except ValueError as err:
        raise DomainError(f"malformed tree: {err}") from None
