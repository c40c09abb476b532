#!/usr/bin/env python3
"""Embed the data/ tables as raw-string headers under include/xtaltext/data/."""
import os

HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.join(HERE, os.pardir)

TARGETS = [
    ("data/spacegroups.txt", "include/xtaltext/data/spacegroups_inc.hpp",
     "XTALTEXT_DATA_SPACEGROUPS_INC_HPP", "kSpaceGroupTableText"),
    ("data/elements.txt", "include/xtaltext/data/elements_inc.hpp",
     "XTALTEXT_DATA_ELEMENTS_INC_HPP", "kElementTableText"),
]

TEMPLATE = """// Generated by scripts/embed_data.py from {src}. Do not edit.
#ifndef {guard}
#define {guard}

namespace xtal::data {{

inline constexpr const char* {name} = R"XTALDATA({body})XTALDATA";

}}  // namespace xtal::data

#endif
"""

for src, dst, guard, name in TARGETS:
    body = open(os.path.join(ROOT, src)).read()
    assert ")XTALDATA" not in body
    with open(os.path.join(ROOT, dst), "w") as f:
        f.write(TEMPLATE.format(src=src, guard=guard, name=name, body=body))
    print("wrote", dst)
