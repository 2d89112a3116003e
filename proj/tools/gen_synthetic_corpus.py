#!/usr/bin/env python3
# Copyright 2026 The hammerkit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes a small chronological library for end-to-end pipeline tests.

Entries are ground facts P(o), ground rules built from them, and theorems
derived from earlier entries by forward chaining. Some theorems record an
incomplete dependency list, so re-proving fails on them and only advice can
recover a proof.
"""

import argparse
import os
import random

BOOL_OP = "(fun bool (fun bool bool))"


def atom(p, o):
    return "(app (c P%d) (c o%d))" % (p, o)


def implication(antecedents, consequent):
    left = antecedents[0]
    for a in antecedents[1:]:
        left = "(app (c conj %s) %s %s)" % (BOOL_OP, left, a)
    return "(app (c imp %s) %s %s)" % (BOOL_OP, left, consequent)


class Library:
    def __init__(self, rng, predicates, objects):
        self.rng = rng
        self.predicates = predicates
        self.objects = objects
        self.entries = []  # (name, text)
        self.texts = set()
        self.names = set()
        self.deps = {}  # name -> list of names
        self.facts = {}  # (p, o) -> name of an entry stating it
        self.rules = []  # (antecedent atoms, consequent atom, name)

    def add(self, name, text, deps=None):
        if text in self.texts or name in self.names:
            return False
        self.texts.add(text)
        self.names.add(name)
        self.entries.append((name, text))
        if deps is not None:
            self.deps[name] = deps
        return True

    def add_fact(self):
        p = self.rng.randrange(self.predicates)
        o = self.rng.randrange(self.objects)
        if (p, o) in self.facts:
            return False
        name = "ax_P%d_o%d" % (p, o)
        if not self.add(name, atom(p, o)):
            return False
        self.facts[(p, o)] = name
        return True

    def add_rule(self):
        o = self.rng.randrange(self.objects)
        k = 1 if self.rng.random() < 0.75 else 2
        ante = sorted({self.rng.randrange(self.predicates) for _ in range(k)})
        cons = self.rng.randrange(self.predicates)
        if cons in ante:
            return False
        name = "rule_%s_P%d_o%d" % ("_".join("P%d" % a for a in ante), cons, o)
        if not self.add(name, implication([atom(a, o) for a in ante], atom(cons, o))):
            return False
        self.rules.append(([(a, o) for a in ante], (cons, o), name))
        return True

    def derivations(self, max_depth):
        """Atoms not yet stated, with the premises of a shortest derivation."""
        support = {a: {n} for a, n in self.facts.items()}
        fresh = {}
        for _ in range(max_depth):
            step = {}
            for ante, cons, name in self.rules:
                if cons in support or cons in step:
                    continue
                if all(a in support for a in ante):
                    used = {name}
                    for a in ante:
                        used |= support[a]
                    step[cons] = used
            if not step:
                break
            support.update(step)
            fresh.update(step)
        return fresh

    def add_theorem(self, incomplete_rate):
        candidates = self.derivations(6)
        if not candidates:
            return False
        target = sorted(candidates)[self.rng.randrange(len(candidates))]
        used = sorted(candidates[target], key=self.position)
        name = "thm_P%d_o%d" % target
        deps = list(used)
        if len(deps) > 1 and self.rng.random() < incomplete_rate:
            deps.remove(deps[self.rng.randrange(len(deps))])
        if not self.add(name, atom(*target), deps):
            return False
        self.facts[target] = name
        return True

    def add_implication_theorem(self):
        options = []
        for ante, cons, rule in self.rules:
            if len(ante) != 1:
                continue
            for ante2, cons2, rule2 in self.rules:
                if ante2 == [cons] and cons2 != ante[0]:
                    options.append((ante[0], cons2, [rule, rule2]))
        if not options:
            return False
        a, c, used = options[self.rng.randrange(len(options))]
        name = "thm_imp_P%d_P%d_o%d" % (a[0], c[0], a[1])
        return self.add(name, implication([atom(*a)], atom(*c)), sorted(used, key=self.position))

    def position(self, name):
        for i, (n, _) in enumerate(self.entries):
            if n == name:
                return i
        raise KeyError(name)


def generate(seed, size, predicates, objects, incomplete_rate):
    rng = random.Random(seed)
    lib = Library(rng, predicates, objects)
    lib.add("TRUTH", "(c true bool)")
    while len(lib.entries) < size:
        early = len(lib.entries) < 30
        r = rng.random()
        if early or r < 0.18:
            lib.add_fact()
        elif r < 0.34:
            lib.add_rule()
        elif r < 0.40:
            lib.add_implication_theorem()
        else:
            lib.add_theorem(incomplete_rate)
    return lib


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", required=True)
    parser.add_argument("--seed", type=int, default=3)
    parser.add_argument("--size", type=int, default=200)
    parser.add_argument("--predicates", type=int, default=16)
    parser.add_argument("--objects", type=int, default=8)
    parser.add_argument("--incomplete", type=float, default=0.45)
    args = parser.parse_args()

    lib = generate(args.seed, args.size, args.predicates, args.objects, args.incomplete)
    os.makedirs(args.out, exist_ok=True)
    with open(os.path.join(args.out, "signature.txt"), "w") as f:
        f.write("tycon obj 0\n")
        for p in range(args.predicates):
            f.write("const P%d (fun obj bool)\n" % p)
        for o in range(args.objects):
            f.write("const o%d obj\n" % o)
    with open(os.path.join(args.out, "statements.tsv"), "w") as f:
        for name, text in lib.entries:
            f.write("%s\t%s\n" % (name, text))
    with open(os.path.join(args.out, "deps.txt"), "w") as f:
        for name, _ in lib.entries:
            if name in lib.deps:
                f.write("%s: %s\n" % (name, " ".join(lib.deps[name])))
    with open(os.path.join(args.out, "trivial.txt"), "w") as f:
        f.write("TRUTH\n")


if __name__ == "__main__":
    main()
