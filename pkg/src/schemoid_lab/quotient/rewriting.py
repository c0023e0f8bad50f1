"""
Module for Knuth-Bendix completion of presentations with the shortlex order.

Given relations between words, produce rules ``lhs → rhs`` (each strictly
shortlex decreasing) so that two words are equal in the presented category
iff they reduce to the same word. Completion stops at the configured caps and
then reports an incomplete system instead of a wrong answer.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Deque, Dict, Iterable, List, Optional, Set, Tuple

from schemoid_lab.config import CompletionCaps, default_caps
from schemoid_lab.monitoring.metrics import COMPLETION_RUNS, CRITICAL_PAIRS, RULES_ADDED
from schemoid_lab.quotient.presentation import CategoryPresentation, Word

logger = logging.getLogger(__name__)

Rule = Tuple[Word, Word]


def shortlex_key(word: Word) -> Tuple[int, Word]:
    return (len(word), word)


def shortlex_ordered(a: Word, b: Word) -> Rule:
    """Orient a pair so the larger word comes first."""
    if shortlex_key(a) > shortlex_key(b):
        return (a, b)
    return (b, a)


def find_subword(word: Word, sub: Word) -> int:
    """Index of the first occurrence of ``sub`` in ``word`` or -1."""
    n, k = len(word), len(sub)
    if k == 0:
        return -1
    first = sub[0]
    for i in range(n - k + 1):
        if word[i] == first and word[i:i + k] == sub:
            return i
    return -1


def reduce_word(word: Word, rules: Iterable[Rule]) -> Word:
    """Apply rules until none matches; terminates because every rule is shortlex decreasing."""
    rule_list = list(rules)
    while True:
        for left, right in rule_list:
            i = find_subword(word, left)
            if i >= 0:
                word = word[:i] + right + word[i + len(left):]
                break
        else:
            return word


@dataclass
class RewriteSystem:
    """Oriented rules with a completeness flag."""

    rules: List[Rule]
    complete: bool
    caps: CompletionCaps = field(default_factory=CompletionCaps)
    pairs_examined: int = 0

    def reduce(self, word: Word) -> Word:
        return reduce_word(tuple(word), self.rules)

    def is_reducible(self, word: Word) -> bool:
        return any(find_subword(word, left) >= 0 for left, _ in self.rules)

    def to_json(self) -> Dict[str, object]:
        return {
            "complete": self.complete,
            "rules": [[list(a), list(b)] for a, b in self.rules],
            "pairs_examined": self.pairs_examined,
        }


def _overlaps(rule1: Rule, rule2: Rule) -> List[Tuple[Word, Word]]:
    """Both one-step reducts of every word ``l1 + l2[k:]`` where a proper suffix of ``l1`` is a prefix of ``l2``."""
    (l1, r1), (l2, r2) = rule1, rule2
    results = []
    for k in range(1, min(len(l1), len(l2))):
        if l1[-k:] == l2[:k]:
            results.append((r1 + l2[k:], l1[:-k] + r2))
    return results


class _Completion:
    """Mutable state of one completion run."""

    def __init__(self, caps: CompletionCaps):
        self.caps = caps
        self.rules: List[Rule] = []
        self.pending: Deque[Tuple[Word, Word]] = deque()
        self.pairs_examined = 0
        self.overflow = False

    def add_equation(self, a: Word, b: Word) -> None:
        self.pending.append((a, b))

    def _drain(self) -> None:
        while self.pending and not self.overflow:
            a, b = self.pending.popleft()
            a, b = reduce_word(a, self.rules), reduce_word(b, self.rules)
            if a == b:
                continue
            lhs, rhs = shortlex_ordered(a, b)
            if len(lhs) > self.caps.max_rule_length:
                logger.warning(f"Rule of length {len(lhs)} exceeds max_rule_length={self.caps.max_rule_length}")
                self.overflow = True
                return
            self._install((lhs, rhs))

    def _install(self, rule: Rule) -> None:
        lhs, _ = rule
        kept: List[Rule] = []
        for old in self.rules:
            if find_subword(old[0], lhs) >= 0:
                # the old left side is now reducible; re-derive it
                self.pending.append(old)
            else:
                kept.append(old)
        kept.append(rule)
        self.rules = kept
        self.rules = [(left, reduce_word(right, self.rules)) for left, right in self.rules]
        RULES_ADDED.inc()
        logger.debug(f"Added rule {rule}; {len(self.rules)} rule(s)")

    def _critical_pairs(self, done: Set[Tuple[Rule, Rule]]) -> bool:
        """Queue unresolved critical pairs of unseen rule pairs. Returns False on cap exhaustion."""
        snapshot = list(self.rules)
        for rule1 in snapshot:
            for rule2 in snapshot:
                key = (rule1, rule2)
                if key in done:
                    continue
                done.add(key)
                for w1, w2 in _overlaps(rule1, rule2):
                    self.pairs_examined += 1
                    CRITICAL_PAIRS.inc()
                    if self.pairs_examined > self.caps.max_pairs:
                        logger.warning(f"Critical pair budget max_pairs={self.caps.max_pairs} exhausted")
                        return False
                    a, b = reduce_word(w1, self.rules), reduce_word(w2, self.rules)
                    if a != b:
                        self.pending.append((a, b))
        return True

    def run(self) -> bool:
        done: Set[Tuple[Rule, Rule]] = set()
        while True:
            self._drain()
            if self.overflow:
                return False
            if not self._critical_pairs(done):
                return False
            if self.pending:
                continue
            # full re-check: right sides may have changed since pairs were examined
            if not self._critical_pairs(set()):
                return False
            if not self.pending:
                return True
            done.clear()


def complete(presentation: CategoryPresentation, caps: Optional[CompletionCaps] = None) -> RewriteSystem:
    """
    Run completion on a presentation.

    Args:
        presentation: Generators and relations
        caps: Rule length and critical pair budget; environment defaults if omitted

    Returns:
        Rewrite system, ``complete=False`` when a cap was hit
    """
    caps = caps or default_caps()
    logger.info(f"Completing {len(presentation.relations)} relation(s) on {len(presentation.generators)} generator(s)")
    state = _Completion(caps)
    for left, right in presentation.relations:
        state.add_equation(tuple(left), tuple(right))
    finished = state.run()
    rules = sorted(state.rules, key=lambda rule: (shortlex_key(rule[0]), shortlex_key(rule[1])))
    system = RewriteSystem(rules, finished, caps, state.pairs_examined)
    COMPLETION_RUNS.labels(outcome="complete" if finished else "incomplete").inc()
    logger.info(f"Completion {'converged' if finished else 'stopped at caps'} with {len(rules)} rule(s)")
    return system
