"""Built-in demonstration theories used by tests, scripts and CLI walkthroughs."""

from __future__ import annotations

#: Two unconditional, conflicting obligations over a single atom.
TWO_OBLIGATIONS = """\
r1: => obl(a).
r2: => obl(~a).
"""

#: A fact plus an obligation chain with conflicts at two literals, a rule
#: consuming a weak permission and a rule consuming a derived permission.
CHAINED_OBLIGATIONS = """\
fact a.
r1: => obl(p).
r2: => obl(~p).
r3: obl(p) => obl(q).
r4: => obl(~q).
r5: a, perm_w(p) => s.
r6: perm(q) => t.
"""

#: Support and undercut showcase: a plain chain into an obligation, a rule
#: consuming the conflicting weak permission, and a conflicting permission.
SUPPORT_UNDERCUT_DEMO = """\
r1: => a.
r2: a => obl(b).
r3: perm_w(~b) => d.
r4: => perm(~b).
r5: perm(~b) => e.
"""

#: Conflicting obligations whose weak permissions jointly trigger a further
#: obligation, which in turn conflicts with a weaker rule.
FACULTATIVE_SCENARIO = """\
fact f.
fact g.
fact h.
n1: f => obl(a).
n2: g => obl(~a).
n3: perm_w(a), perm_w(~a) => obl(c).
n4: h => obl(~c).
n3 > n4.
"""

#: All built-ins by name (used by scripts and the documentation).
BUILTIN_THEORIES = {
    "two-obligations": TWO_OBLIGATIONS,
    "chained-obligations": CHAINED_OBLIGATIONS,
    "support-undercut": SUPPORT_UNDERCUT_DEMO,
    "facultative": FACULTATIVE_SCENARIO,
}
