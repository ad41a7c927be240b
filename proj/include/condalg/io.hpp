#ifndef CONDALG_IO_HPP
#define CONDALG_IO_HPP

#include <string>

#include "condalg/cond_alg.hpp"
#include "condalg/frame.hpp"

namespace condalg {

// Documents are line-oriented JSON with a fixed key order.  Serialization
// is canonical: two-space indent, one table row or triple per line, triples
// sorted, trailing newline.  parse(serialize(x)) == x for every value, and
// serialize(parse(doc)) is the canonical form of any accepted document.

// {"type": "conditional-algebra", "atoms": n, "cond": [[...], ...]}
std::string serialize_algebra(const CondAlg& A);

// {"type": "t-frame", "points": m, "triples": [[x, mid, y], ...]}
std::string serialize_frame(const TFrame& f);

// Strict parsers: exact key set, unsigned integers only, dimensions and
// ranges enforced, duplicate triples rejected.  Malformed documents raise
// InputError carrying the parser's byte position.
CondAlg parse_algebra(const std::string& doc);
TFrame parse_frame(const std::string& doc);

// "conditional-algebra" or "t-frame"; anything else is an InputError.
std::string document_type(const std::string& doc);

}  // namespace condalg

#endif
