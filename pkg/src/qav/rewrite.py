"""Quotient-algebra computation by degree-truncated rewriting.

A presentation's relations are oriented into rewrite rules ``lhs -> rhs``
under the degree-lexicographic order induced by the alphabet precedence.
``complete`` resolves every overlap ambiguity whose overlap word has
total degree <= D (a noncommutative Buchberger/Knuth-Bendix loop with
interreduction), after which reduction gives unique normal forms for all
elements of degree <= D and ``is_member`` is decisive there.

Reduction is memoized per word: normal forms of subwords recur heavily
both inside completion and across the verification suites, and the whole
kernel's cost is dominated by this inner loop.
"""

from __future__ import annotations

import hashlib
import heapq
import json

from .freealg import Alphabet, NCPoly, deglex_key
from .scalars import QRat, ONE

__all__ = ["DegLex", "RewriteRule", "RewriteBasis", "Membership", "complete",
           "ResourceBudgetExceeded", "verify_local_confluence"]


class ResourceBudgetExceeded(RuntimeError):
    """Raised when completion hits an explicit rule/queue cap."""


class DegLex:
    """(Weighted) degree-lexicographic order from the alphabet.

    Compares (total letter weight, length, letters); with the default
    all-ones weights this is the plain degree-lexicographic order with
    the alphabet id order as precedence.
    """

    kind = "deglex"

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self.key = alphabet.order_key
        self.weight = alphabet.word_weight

    def to_json(self):
        doc = {"kind": self.kind, "precedence": list(self.alphabet.names)}
        if not self.alphabet.uniform:
            doc["weights"] = list(self.alphabet.weights)
        return doc


class RewriteRule:
    """lhs -> rhs with every rhs word strictly below lhs in deglex."""

    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs: bytes, rhs: dict):
        self.lhs = lhs
        self.rhs = rhs

    def poly(self, alphabet: Alphabet) -> NCPoly:
        terms = {w: -c for w, c in self.rhs.items()}
        terms[self.lhs] = ONE
        return NCPoly(alphabet, terms)


class Membership:
    """Outcome of an ideal-membership query."""

    __slots__ = ("kind", "bound", "residual")

    MEMBER = "member"
    NOT_MEMBER = "not_member_up_to"
    INCONCLUSIVE = "inconclusive"

    def __init__(self, kind: str, bound: int, residual=None):
        self.kind = kind
        self.bound = bound
        self.residual = residual

    @property
    def is_member(self) -> bool:
        return self.kind == Membership.MEMBER

    def __repr__(self):
        if self.kind == Membership.MEMBER:
            return "Member"
        if self.kind == Membership.NOT_MEMBER:
            return f"NotMemberUpTo({self.bound})"
        return "Inconclusive"


def _make_rhs(p: NCPoly):
    lhs, lc = p.lterm()
    inv = lc.inverse()
    rhs = {w: -(c * inv) for w, c in p.terms.items() if w != lhs}
    return lhs, rhs


class _Engine:
    """Shared reduction machinery over a (possibly mutating) rule list."""

    def __init__(self):
        self.rules: list = []          # RewriteRule | None once deactivated
        self.by_first = [[] for _ in range(256)]
        self.memo = {}
        self.memo_cap = 400_000

    def add(self, rule: RewriteRule) -> int:
        rid = len(self.rules)
        self.rules.append(rule)
        self.by_first[rule.lhs[0]].append(rid)
        self.memo.clear()
        return rid

    def deactivate(self, rid: int):
        rule = self.rules[rid]
        self.by_first[rule.lhs[0]].remove(rid)
        self.rules[rid] = None
        self.memo.clear()

    def find_match(self, w: bytes):
        rules = self.rules
        by_first = self.by_first
        for pos in range(len(w)):
            for rid in by_first[w[pos]]:
                lhs = rules[rid].lhs
                if w.startswith(lhs, pos):
                    return pos, rules[rid]
        return None

    def nf_word(self, w0: bytes) -> dict:
        memo = self.memo
        hit = memo.get(w0)
        if hit is not None:
            return hit
        if len(memo) > self.memo_cap:
            memo.clear()
        pending = {}
        stack = [w0]
        while stack:
            w = stack[-1]
            if w in memo:
                stack.pop()
                continue
            parts = pending.get(w)
            if parts is None:
                m = self.find_match(w)
                if m is None:
                    memo[w] = {w: ONE}
                    stack.pop()
                    continue
                pos, rule = m
                pre = w[:pos]
                suf = w[pos + len(rule.lhs):]
                parts = [(pre + u + suf, c) for u, c in rule.rhs.items()]
                pending[w] = parts
                stack.extend(v for v, _ in parts if v not in memo)
                continue
            missing = [v for v, _ in parts if v not in memo]
            if missing:
                stack.extend(missing)
                continue
            acc = {}
            for v, c in parts:
                for u, k in memo[v].items():
                    s = acc.get(u)
                    s = c * k if s is None else s + c * k
                    if s:
                        acc[u] = s
                    else:
                        acc.pop(u, None)
            memo[w] = acc
            del pending[w]
            stack.pop()
        return memo[w0]

    def nf_terms(self, terms: dict) -> dict:
        out = {}
        for w, c in terms.items():
            for u, k in self.nf_word(w).items():
                s = out.get(u)
                s = c * k if s is None else s + c * k
                if s:
                    out[u] = s
                else:
                    out.pop(u, None)
        return out


class RewriteBasis:
    """A frozen, degree-D-complete rewriting basis for one presentation."""

    def __init__(self, alphabet: Alphabet, rules, completion_degree: int,
                 presentation_hash: str, name: str = "", stats=None):
        self.alphabet = alphabet
        self.order = DegLex(alphabet)
        self.completion_degree = completion_degree
        self.presentation_hash = presentation_hash
        self.name = name
        self.stats = stats or {}
        self._engine = _Engine()
        for rule in sorted(rules, key=lambda r: alphabet.order_key(r.lhs)):
            self._engine.add(rule)

    @property
    def rules(self):
        return [r for r in self._engine.rules if r is not None]

    def __len__(self):
        return len(self._engine.rules)

    def reduce(self, p: NCPoly) -> NCPoly:
        """Normal form of p modulo the presented ideal."""
        if p.alphabet.key != self.alphabet.key:
            raise ValueError("polynomial alphabet does not match basis")
        return NCPoly(self.alphabet, self._engine.nf_terms(p.terms))

    def is_member(self, p: NCPoly) -> Membership:
        nf = self.reduce(p)
        if not nf:
            return Membership(Membership.MEMBER, self.completion_degree)
        wt = max(self.alphabet.word_weight(w) for w in p.terms)
        if wt <= self.completion_degree:
            return Membership(Membership.NOT_MEMBER, self.completion_degree,
                              residual=nf)
        return Membership(Membership.INCONCLUSIVE, self.completion_degree,
                          residual=nf)

    # -- persistence ---------------------------------------------------

    def to_json(self) -> dict:
        names = self.alphabet.names
        rules = []
        for r in self.rules:
            rhs = sorted(((list(c.num), list(c.den), c.shift,
                           [names[i] for i in w])
                          for w, c in r.rhs.items()),
                         key=lambda t: (len(t[3]), t[3]))
            rules.append({"lhs": [names[i] for i in r.lhs], "rhs": rhs})
        rules.sort(key=lambda r: (len(r["lhs"]), r["lhs"]))
        return {
            "format": "qav-basis/1",
            "name": self.name,
            "alphabet": list(names),
            "display": {n: d for n, d in zip(names, self.alphabet.display)
                        if n != d},
            "inverse_pairs": sorted(
                [sorted((names[a], names[b]))
                 for a, b in self.alphabet.inverse.items() if a < b]),
            "blocks": list(self.alphabet.blocks),
            "order": self.order.to_json(),
            "completion_degree": self.completion_degree,
            "presentation_hash": self.presentation_hash,
            "rules": rules,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True,
                          separators=(",", ":"))

    @property
    def hash(self) -> str:
        return hashlib.sha256(self.dumps().encode()).hexdigest()

    def save(self, path):
        doc = self.to_json()
        doc["hash"] = self.hash
        with open(path, "w") as fh:
            json.dump(doc, fh, sort_keys=True, indent=1)
            fh.write("\n")

    @staticmethod
    def load(path) -> "RewriteBasis":
        with open(path) as fh:
            doc = json.load(fh)
        if doc.get("format") != "qav-basis/1":
            raise ValueError("unrecognized basis file format")
        alph = Alphabet(doc["alphabet"], doc.get("display") or {},
                        doc.get("inverse_pairs") or (),
                        doc.get("blocks"), doc.get("order", {}).get("weights"))
        rules = []
        for r in doc["rules"]:
            lhs = alph.word(*r["lhs"])
            rhs = {}
            for num, den, shift, wnames in r["rhs"]:
                rhs[alph.word(*wnames)] = QRat.fraction(
                    tuple(num), tuple(den), shift)
            rules.append(RewriteRule(lhs, rhs))
        basis = RewriteBasis(alph, rules, doc["completion_degree"],
                             doc["presentation_hash"], doc.get("name", ""))
        stored = doc.get("hash")
        if stored is not None and stored != basis.hash:
            raise ValueError("basis file failed its self-hash check")
        return basis


def complete(pres, max_degree: int, *, max_rules: int = 50_000,
             max_pending: int = 2_000_000) -> RewriteBasis:
    """Resolve all overlap ambiguities of total degree <= max_degree.

    Deterministic: input relations install in order, then S-polynomial
    obligations process by (overlap degree, creation index).  Budget
    overruns raise ResourceBudgetExceeded rather than truncating.
    """
    alph = pres.alphabet
    relwt = max((max(alph.word_weight(w) for w in r.terms)
                 for r in pres.relations if r), default=0)
    if max_degree < relwt:
        raise ValueError("completion degree below maximal relation degree")
    eng = _Engine()
    heap: list = []
    seq = 0
    added = 0

    def push(prio, kind, payload):
        nonlocal seq
        if len(heap) > max_pending:
            raise ResourceBudgetExceeded(
                f"pending obligation queue exceeded {max_pending}")
        heapq.heappush(heap, (prio, seq, kind, payload))
        seq += 1

    def enqueue_overlaps(i: int, j: int):
        ri, rj = eng.rules[i], eng.rules[j]
        li, lj = ri.lhs, rj.lhs
        for t in range(1, min(len(li), len(lj))):
            if li[-t:] == lj[:t]:
                w = li + lj[t:]
                deg = alph.word_weight(w)
                if deg <= max_degree:
                    push((deg, len(w)), "pair", (i, j, t))

    def add_rule(terms: dict):
        nonlocal added
        nf = eng.nf_terms(terms)
        if not nf:
            return
        p = NCPoly(alph, nf)
        lhs, rhs = _make_rhs(p)
        if not lhs:
            raise ValueError("presentation collapses: 1 lies in the ideal")
        added += 1
        if added > max_rules:
            raise ResourceBudgetExceeded(f"rule budget exceeded {max_rules}")
        rid = eng.add(RewriteRule(lhs, rhs))
        # interreduce: any older rule whose lhs contains the new lhs is
        # replaced by its own re-reduction
        for oid, other in enumerate(eng.rules[:-1]):
            if other is None or oid == rid:
                continue
            if lhs in other.lhs:
                eng.deactivate(oid)
                push((alph.word_weight(other.lhs), len(other.lhs)), "rel",
                     dict(other.poly(alph).terms))
        for oid, other in enumerate(eng.rules):
            if other is None:
                continue
            enqueue_overlaps(rid, oid)
            if oid != rid:
                enqueue_overlaps(oid, rid)

    for rel in pres.relations:
        if rel:
            add_rule(dict(rel.terms))

    spolys = 0
    while heap:
        _, _, kind, payload = heapq.heappop(heap)
        if kind == "rel":
            add_rule(payload)
            continue
        i, j, t = payload
        ri, rj = eng.rules[i], eng.rules[j]
        if ri is None or rj is None:
            continue
        spolys += 1
        pre = ri.lhs[:-t]
        suf = rj.lhs[t:]
        s: dict = {}
        for w, c in ri.rhs.items():
            u = w + suf
            x = s.get(u)
            x = c if x is None else x + c
            if x:
                s[u] = x
            else:
                s.pop(u, None)
        for w, c in rj.rhs.items():
            u = pre + w
            x = s.get(u)
            x = -c if x is None else x - c
            if x:
                s[u] = x
            else:
                s.pop(u, None)
        if s:
            add_rule(s)

    rules = [r for r in eng.rules if r is not None]
    # normalize every rhs against the final rule set so the serialized
    # basis is canonical regardless of completion history
    final = _Engine()
    order_ids = sorted(range(len(rules)),
                       key=lambda i: alph.order_key(rules[i].lhs))
    for i in order_ids:
        final.add(rules[i])
    canon = []
    for r in rules:
        rhs = final.nf_terms(r.rhs)
        canon.append(RewriteRule(r.lhs, rhs))
    stats = {"rules": len(canon), "spolys": spolys, "added": added}
    return RewriteBasis(alph, canon, max_degree,
                        getattr(pres, "hash", ""),
                        getattr(pres, "name", ""), stats)


def verify_local_confluence(basis: RewriteBasis, max_degree=None):
    """Return unresolved overlap ambiguities up to the given degree.

    Empty result certifies that reduction is confluent (hence normal
    forms unique) for all elements within the completion degree.
    """
    if max_degree is None:
        max_degree = basis.completion_degree
    rules = basis.rules
    bad = []
    for ri in rules:
        for rj in rules:
            li, lj = ri.lhs, rj.lhs
            for t in range(1, min(len(li), len(lj))):
                if li[-t:] != lj[:t]:
                    continue
                if basis.alphabet.word_weight(li + lj[t:]) > max_degree:
                    continue
                s: dict = {}
                suf, pre = lj[t:], li[:-t]
                for w, c in ri.rhs.items():
                    u = w + suf
                    x = s.get(u, None)
                    x = c if x is None else x + c
                    if x:
                        s[u] = x
                    else:
                        s.pop(u, None)
                for w, c in rj.rhs.items():
                    u = pre + w
                    x = s.get(u, None)
                    x = -c if x is None else x - c
                    if x:
                        s[u] = x
                    else:
                        s.pop(u, None)
                res = basis.reduce(NCPoly(basis.alphabet, s))
                if res:
                    bad.append((li, lj, t, res))
    return bad
